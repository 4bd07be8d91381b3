//! One function per subcommand, each producing a [`Report`].

use genex_core::corpus::{load_group, load_subgroup, load_with_frame};
use genex_core::flexibility::{
    coset_order_profiles, flexible_subgroup_search, is_flexible, maximal_flexibility, FlexibilityReport,
};
use genex_core::gensets::{d_metric, generation_density, in_h_tilde, min_generators, replacement_search};
use genex_core::grp::parse_perm_list;
use genex_core::lattice::all_subgroups;
use genex_core::mgse::{
    mgse_bruteforce, mgse_decide, solvable_characterization, verify_counterexample, MgseVerdict,
};
use genex_core::report::{cycles, format_ratio};
use genex_core::structure::{
    center, classify_maximal, derived_series, is_cyclic, is_nilpotent, is_simple, is_solvable, monolith, socle,
};
use genex_core::suites::run_suite;
use genex_core::{frattini, Error, Group, Limits, Perm, Result};
use num_rational::Ratio;
use serde_json::{json, Map, Value};

use crate::output::Report;

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("records are built from json objects"),
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn header(r: &mut Report, spec: &str, g: &Group) {
    r.set("group", spec);
    r.set("degree", g.degree());
    r.set("order", g.order().to_string());
}

/// Lattice-backed values are only reported inside the order bound.
fn bounded<T>(v: Result<T>) -> Result<Option<T>> {
    match v {
        Ok(x) => Ok(Some(x)),
        Err(e) if e.is_bound() => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn info(spec: &str, limits: &Limits) -> Result<Report> {
    let g = load_group(spec, limits)?;
    let mut r = Report::new("info");
    header(&mut r, spec, &g);
    r.set("generators", cycles(g.generators()));
    r.set("abelian", g.is_abelian());
    r.set("cyclic", is_cyclic(&g));
    r.set("nilpotent", is_nilpotent(&g));
    r.set("solvable", is_solvable(&g));
    r.set("derived_length", is_solvable(&g).then(|| derived_series(&g).len() - 1));
    r.set("transitive", g.is_transitive());
    let simple = bounded(is_simple(&g, limits))?;
    r.set("simple", simple);
    r.set("center_order", bounded(center(&g, limits))?.map(|z| z.order().to_string()));
    r.set("socle_order", bounded(socle(&g, limits))?.map(|s| s.order().to_string()));
    r.set("monolithic", bounded(monolith(&g, limits))?.map(|m| m.is_some()));
    r.set("frattini_order", bounded(frattini(&g, limits))?.map(|f| f.order().to_string()));
    r.set("d", bounded(min_generators(&g, limits))?.map(|x| x.d));
    Ok(r)
}

pub fn dgen(spec: &str, limits: &Limits) -> Result<Report> {
    let g = load_group(spec, limits)?;
    let out = min_generators(&g, limits)?;
    let mut r = Report::new("dgen");
    header(&mut r, spec, &g);
    r.set("d", out.d);
    r.set("witness", cycles(&out.witness));
    r.set("search_nodes", out.stats.nodes);
    r.set("search_pruned", out.stats.pruned);
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Brute,
    Opt,
    Both,
}

fn verdict_record(g: &Group, v: &MgseVerdict) -> Result<Map<String, Value>> {
    let (x, index, y, verified) = match &v.counterexample {
        Some(c) => (cycles(&c.x), Some(c.index + 1), cycles(&c.y), Some(verify_counterexample(g, c)?)),
        None => (Vec::new(), None, Vec::new(), None),
    };
    Ok(object(json!({
        "method": v.method.to_string(),
        "holds": v.holds,
        "d": v.d,
        "x": x,
        "index": index,
        "y": y,
        "verified": verified,
    })))
}

pub fn mgse(spec: &str, method: Method, limits: &Limits) -> Result<Report> {
    let g = load_group(spec, limits)?;
    let mut verdicts = Vec::new();
    if method != Method::Opt {
        verdicts.push(mgse_bruteforce(&g, limits)?);
    }
    if method != Method::Brute {
        verdicts.push(mgse_decide(&g, limits)?);
    }
    let mut r = Report::new("mgse");
    header(&mut r, spec, &g);
    r.set("holds", verdicts[0].holds);
    let agree = verdicts.iter().all(|v| v.holds == verdicts[0].holds);
    if verdicts.len() > 1 {
        r.set("methods_agree", agree);
    }
    if is_solvable(&g) {
        if let Some(c) = bounded(solvable_characterization(&g, limits))? {
            r.set("solvable_branch", c.branch.to_string());
            r.fail_if(c.applies != verdicts[0].holds);
        }
    }
    for v in &verdicts {
        let rec = verdict_record(&g, v)?;
        r.fail_if(rec["verified"] == json!(false));
        r.records.push(rec);
    }
    r.fail_if(!agree);
    Ok(r)
}

pub fn dmetrics(spec: &str, subgroup: Option<&str>, limits: &Limits) -> Result<Report> {
    let g = load_group(spec, limits)?;
    let mut r = Report::new("dmetrics");
    header(&mut r, spec, &g);
    if let Some(hspec) = subgroup {
        let h = load_subgroup(hspec, g.degree(), limits)?;
        let out = d_metric(&g, &h, limits)?;
        r.set("subgroup_order", h.order().to_string());
        r.set("d", out.d);
        r.set("value", out.value);
        r.set("witness", cycles(&out.witness));
        return Ok(r);
    }
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let lattice = all_subgroups(&g, limits)?;
    let d = min_generators(&g, limits)?.d;
    let mut least: Option<usize> = None;
    for (i, c) in lattice.maximal_classes() {
        let m = classify_maximal(&g, &c.group, limits)?;
        let out = d_metric(&g, &c.group, limits)?;
        let d_core = min_generators(&m.quotient, limits).map(|x| x.d).ok();
        least = Some(least.map_or(out.value, |l| l.min(out.value)));
        r.fail_if(out.value + 2 < d);
        r.records.push(object(json!({
            "class": i,
            "order": c.order.to_string(),
            "class_size": c.class_size,
            "type": m.primitive_type,
            "shape": m.intersection_shape.to_string(),
            "core_order": m.core.order().to_string(),
            "d_quotient": d_core,
            "value": out.value,
            "d_minus_value": d - out.value,
            "witness": cycles(&out.witness),
        })));
    }
    r.set("d", d);
    r.set("D", least);
    Ok(r)
}

fn flexibility_record(f: &FlexibilityReport, limits: &Limits, profiles: bool) -> Result<Map<String, Value>> {
    let (defeating, primes) = match &f.failure {
        Some((h, ps)) => (Some(h.to_string()), ps.clone()),
        None => (None, Vec::new()),
    };
    let mut rec = object(json!({
        "order": f.h.order().to_string(),
        "flexible": f.verdict,
        "proper_in_socle": f.proper_in_socle,
        "supplements": f.supplements,
        "witness_prime": f.witness_prime,
        "defeating_element": defeating,
        "primes_tried": primes,
        "generators": cycles(f.h.generators()),
    }));
    if profiles && !f.verdict && f.proper_in_socle && f.supplements {
        let core = f.h.intersection(&f.s, limits)?;
        let family: Vec<Vec<u64>> =
            coset_order_profiles(&f.h, &core, limits)?.into_iter().map(|p| p.orders.into_iter().collect()).collect();
        let text: Vec<String> =
            family.iter().map(|o| format!("{{{}}}", o.iter().map(u64::to_string).collect::<Vec<_>>().join(","))).collect();
        rec.insert("coset_orders".into(), text.into());
    }
    Ok(rec)
}

fn socle_of(k: &Group, limits: &Limits) -> Result<Group> {
    match monolith(k, limits)? {
        Some(s) if !s.is_abelian() => Ok(s),
        _ => Err(Error::Precondition("K must be monolithic with non-abelian socle".into())),
    }
}

pub fn flexible(spec: &str, subgroup: Option<&str>, scan: bool, limits: &Limits) -> Result<Report> {
    let k = load_group(spec, limits)?;
    let s = socle_of(&k, limits)?;
    let mut r = Report::new("flexible");
    header(&mut r, spec, &k);
    r.set("socle_order", s.order().to_string());
    if let Some(hspec) = subgroup {
        let h = load_subgroup(hspec, k.degree(), limits)?;
        let f = is_flexible(&k, &s, &h, limits)?;
        r.set("flexible", f.verdict);
        r.records.push(flexibility_record(&f, limits, true)?);
    } else if scan {
        let classes = maximal_flexibility(&k, &s, limits)?;
        let mut non_flexible = 0;
        for m in &classes {
            let mut rec = object(json!({ "class": m.class, "contains_socle": m.contains_socle }));
            match &m.report {
                Some(f) => {
                    non_flexible += usize::from(!f.verdict);
                    rec.extend(flexibility_record(f, limits, true)?);
                }
                None => {
                    rec.insert("order".into(), m.order.to_string().into());
                }
            }
            r.records.push(rec);
        }
        r.set("maximal_classes", classes.len());
        r.set("non_flexible", non_flexible);
    } else {
        match flexible_subgroup_search(&k, &s, limits)? {
            Some((_, f)) => {
                r.set("found", true);
                r.records.push(flexibility_record(&f, limits, false)?);
            }
            None => r.set("found", false),
        }
    }
    Ok(r)
}

pub fn classify(spec: &str, limits: &Limits) -> Result<Report> {
    let g = load_group(spec, limits)?;
    let lattice = all_subgroups(&g, limits)?;
    let mut r = Report::new("classify-maximal");
    header(&mut r, spec, &g);
    for (i, c) in lattice.maximal_classes() {
        let m = classify_maximal(&g, &c.group, limits)?;
        r.records.push(object(json!({
            "class": i,
            "order": c.order.to_string(),
            "class_size": c.class_size,
            "type": m.primitive_type,
            "shape": m.intersection_shape.to_string(),
            "socle_factors": m.socle_factors,
            "core_order": m.core.order().to_string(),
            "quotient_order": m.quotient_order.to_string(),
            "generators": cycles(c.group.generators()),
        })));
    }
    r.set("maximal_classes", r.records.len());
    Ok(r)
}

pub fn density(spec: &str, nspec: &str, lifts_file: &str, limits: &Limits) -> Result<Report> {
    let g = load_group(spec, limits)?;
    let n = load_subgroup(nspec, g.degree(), limits)?;
    let lifts = parse_perm_list(&read(lifts_file)?, g.degree())?;
    let out = generation_density(&g, &n, &lifts, limits)?;
    let bound = Ratio::new(53u64, 90);
    let mut r = Report::new("density");
    header(&mut r, spec, &g);
    r.set("socle_order", n.order().to_string());
    r.set("lifts", cycles(&lifts));
    r.set("favorable", out.favorable);
    r.set("total", out.total);
    r.set("ratio", format_ratio(&out.ratio));
    r.set("bound", format_ratio(&bound));
    r.set("meets_bound", out.ratio >= bound);
    r.fail_if(out.ratio < bound);
    Ok(r)
}

pub fn replace(spec: &str, gens_file: &str, hspec: &str, limits: &Limits) -> Result<Report> {
    let (g, frame) = load_with_frame(spec, limits)?;
    let n = socle_of(&g, limits)?;
    let h = load_subgroup(hspec, frame.inner_degree, limits)?;
    let gens = parse_perm_list(&read(gens_file)?, g.degree())?;
    let out = replacement_search(&g, &n, &gens, &frame, &h, limits)?;
    let mut r = Report::new("replace");
    header(&mut r, spec, &g);
    r.set("blocks", frame.blocks);
    r.set("subgroup_order", h.order().to_string());
    r.set("hypothesis", serde_json::to_value(out.hypothesis).expect("enum serializes"));
    r.set("found", out.found.is_some());
    if let Some((v1, v2)) = &out.found {
        let a: Perm = v1.mul(&gens[0]);
        let b: Perm = v2.mul(&gens[1]);
        let mut tuple = vec![a.clone(), b.clone()];
        tuple.extend(gens[2..].iter().cloned());
        let generates = Group::new(g.degree(), tuple)?.order() == g.order();
        let inside = in_h_tilde(&frame, &a, &h)?;
        r.set("v1", v1.to_string());
        r.set("v2", v2.to_string());
        r.set("v1g1", a.to_string());
        r.set("v2g2", b.to_string());
        r.set("generates", generates);
        r.set("v1g1_in_h_tilde", inside);
        r.fail_if(!generates || !inside);
    }
    r.set("v1_candidates", out.candidates_v1);
    r.set("tests", out.tests);
    r.fail_if(out.found.is_none());
    Ok(r)
}

pub fn verify(suite: &str, limits: &Limits) -> Result<Report> {
    let res = run_suite(suite, limits)?;
    let mut r = Report::new("verify");
    r.set("suite", res.suite.clone());
    r.set("cases", res.cases.len());
    r.set("failures", res.failures().count());
    r.set("skipped", res.skipped.clone());
    r.set("passed", res.passed);
    for c in &res.cases {
        r.records.push(object(json!({
            "id": c.id,
            "claim": c.claim,
            "pass": c.pass,
            "details": c.details,
            "witness": c.witness,
            "note": c.note,
        })));
    }
    r.fail_if(!res.passed);
    Ok(r)
}

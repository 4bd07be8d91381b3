//! The `.grp` text format:
//!
//! ```text
//! # comment
//! degree: 5
//! gen: (1,2,3,4,5)
//! gen: (1,2)
//! ```

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

/// Parsed file contents: the degree and generators exactly as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupText {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl GroupText {
    pub fn parse(text: &str) -> Result<Self> {
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |reason: &str| Error::Parse { text: raw.to_string(), reason: format!("line {}: {reason}", lineno + 1) };
            let (key, value) = line.split_once(':').ok_or_else(|| bad("expected `key: value`"))?;
            match key.trim() {
                "degree" => {
                    if degree.is_some() {
                        return Err(bad("duplicate degree line"));
                    }
                    degree = Some(value.trim().parse().map_err(|_| bad("degree is not an integer"))?);
                }
                "gen" => {
                    let n = degree.ok_or_else(|| bad("gen before degree"))?;
                    gens.push(Perm::parse(value.trim(), n)?);
                }
                _ => return Err(bad("unknown key")),
            }
        }
        let degree = degree.ok_or_else(|| Error::Parse { text: String::new(), reason: "missing degree line".into() })?;
        Ok(GroupText { degree, generators: gens })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("degree: {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&format!("gen: {g}\n"));
        }
        out
    }

    pub fn from_group(g: &Group) -> Self {
        GroupText { degree: g.degree(), generators: g.generators().to_vec() }
    }

    pub fn into_group(self) -> Result<Group> {
        Group::new(self.degree, self.generators)
    }
}

pub fn parse_group(text: &str) -> Result<Group> {
    GroupText::parse(text)?.into_group()
}

pub fn serialize_group(g: &Group) -> String {
    GroupText::from_group(g).serialize()
}

/// Reads a tuple of permutations, one per line in cycle notation (`#` comments allowed).
pub fn parse_perm_list(text: &str, degree: usize) -> Result<Vec<Perm>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| Perm::parse(l, degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let text = "# S4\ndegree: 4\n\ngen: (1,2,3,4)  # 4-cycle\ngen: (1,2)\n";
        let g = parse_group(text).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(serialize_group(&g), "degree: 4\ngen: (1,2,3,4)\ngen: (1,2)\n");
    }

    #[test]
    fn identity_generator_kept() {
        let t = GroupText::parse("degree: 3\ngen: ()\n").unwrap();
        assert_eq!(t.generators.len(), 1);
        assert_eq!(t.serialize(), "degree: 3\ngen: ()\n");
    }

    #[test]
    fn errors() {
        assert!(GroupText::parse("gen: (1,2)\n").is_err());
        assert!(GroupText::parse("degree: x\n").is_err());
        assert!(GroupText::parse("degree: 3\ndegree: 4\n").is_err());
        assert!(GroupText::parse("degree: 3\nfoo: 1\n").is_err());
        assert!(GroupText::parse("degree: 3\ngen: (1,4)\n").is_err());
        assert!(GroupText::parse("# nothing\n").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Perm> {
            Just((0..n as u32).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Perm::from_images(v).unwrap())
        }

        proptest! {
            #[test]
            fn text_round_trip(gens in proptest::collection::vec(perm(7), 0..4)) {
                let t = GroupText { degree: 7, generators: gens };
                let s = t.serialize();
                let back = GroupText::parse(&s).unwrap();
                prop_assert_eq!(&back, &t);
                prop_assert_eq!(back.serialize(), s);
            }
        }
    }
}

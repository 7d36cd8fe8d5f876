use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::BckAlgebra;
use crate::sequences::{commutativity_index, find_identity_violation, find_nonprolongable_pair};

/// A predicate on algebras. Every variant is invariant under isomorphism.
///
/// The text form is `all`, `nonprolongable`, `index=K`, `index<=K` or
/// `identity-fails=N`, joined with commas for a conjunction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    All,
    /// Some pair has chains that stop descending.
    NonProlongable,
    IndexEquals(usize),
    IndexAtMost(usize),
    /// Some pair has `x_n ≠ y_n`.
    IdentityFails(usize),
    And(Vec<Filter>),
}

impl Filter {
    pub fn accepts(&self, a: &BckAlgebra) -> bool {
        match self {
            Filter::All => true,
            Filter::NonProlongable => find_nonprolongable_pair(a).is_some(),
            Filter::IndexEquals(k) => commutativity_index(a) == *k,
            Filter::IndexAtMost(k) => commutativity_index(a) <= *k,
            Filter::IdentityFails(n) => find_identity_violation(a, *n).is_some(),
            Filter::And(fs) => fs.iter().all(|f| f.accepts(a)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad filter `{term}`: expected all, nonprolongable, index=K, index<=K or identity-fails=N")]
pub struct FilterParseError {
    pub term: String,
}

impl FromStr for Filter {
    type Err = FilterParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s
            .split(',')
            .map(|term| parse_term(term.trim()).ok_or_else(|| FilterParseError { term: term.trim().to_string() }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Filter::And(parts) })
    }
}

fn parse_term(term: &str) -> Option<Filter> {
    let num = |s: &str| s.trim().parse::<usize>().ok();
    if term == "all" {
        Some(Filter::All)
    } else if term == "nonprolongable" {
        Some(Filter::NonProlongable)
    } else if let Some(k) = term.strip_prefix("index<=") {
        num(k).map(Filter::IndexAtMost)
    } else if let Some(k) = term.strip_prefix("index=") {
        num(k).map(Filter::IndexEquals)
    } else if let Some(n) = term.strip_prefix("identity-fails=") {
        num(n).map(Filter::IdentityFails)
    } else {
        None
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::All => f.write_str("all"),
            Filter::NonProlongable => f.write_str("nonprolongable"),
            Filter::IndexEquals(k) => write!(f, "index={k}"),
            Filter::IndexAtMost(k) => write!(f, "index<={k}"),
            Filter::IdentityFails(n) => write!(f, "identity-fails={n}"),
            Filter::And(fs) => {
                for (i, sub) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{sub}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        assert_eq!("all".parse(), Ok(Filter::All));
        assert_eq!("index<=2".parse(), Ok(Filter::IndexAtMost(2)));
        assert_eq!(
            "nonprolongable, index=3,identity-fails=3".parse(),
            Ok(Filter::And(vec![Filter::NonProlongable, Filter::IndexEquals(3), Filter::IdentityFails(3)]))
        );
        assert!("index<2".parse::<Filter>().is_err());
        assert!("".parse::<Filter>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["all", "index=3,nonprolongable", "identity-fails=2,index<=4"] {
            assert_eq!(s.parse::<Filter>().unwrap().to_string(), s);
        }
    }
}

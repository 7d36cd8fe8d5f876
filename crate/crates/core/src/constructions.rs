//! Parametric families of BCK-algebras.
//!
//! * [`chain_algebra`]: the linearly ordered algebra on `0..n` with
//!   `x·y = x - y - 1` away from the diagonal band.
//! * [`lemma2_algebra`]: the chain on `0..n` plus a second maximal element
//!   `n`, which sits beside `n - 1` above `n - 2`.
//! * [`top_extension`]: adjoins a new greatest element to any algebra.
//! * [`commutative_chain`]: truncated subtraction on `0..n`.
//!
//! Every constructor certifies its output before returning it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{validate, BckAlgebra};
use crate::table::CayleyTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{kind} requires n >= {min}, got {n}")]
    ParameterTooSmall { kind: &'static str, n: usize, min: usize },
}

/// A named construction, as selected on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "parameter")]
pub enum ConstructionSpec {
    Chain(usize),
    Lemma2(usize),
    CommutativeChain(usize),
    TopExtension(CayleyTable),
}

impl ConstructionSpec {
    /// Builds the algebra. A `TopExtension` base table is certified first.
    pub fn build(&self) -> Result<BckAlgebra, BuildError> {
        match self {
            ConstructionSpec::Chain(n) => Ok(chain_algebra(*n)?),
            ConstructionSpec::Lemma2(n) => Ok(lemma2_algebra(*n)?),
            ConstructionSpec::CommutativeChain(n) => Ok(commutative_chain(*n)?),
            ConstructionSpec::TopExtension(t) => Ok(top_extension(&validate(t)?)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Validation(#[from] crate::algebra::ValidationError),
}

fn certified(table: CayleyTable) -> BckAlgebra {
    match validate(&table) {
        Ok(a) => a,
        Err(e) => panic!("construction produced a non-BCK table: {e}\n{table}"),
    }
}

/// The chain operation: first matching case wins.
fn chain_op(x: usize, y: usize) -> usize {
    if x <= y {
        0
    } else if y == 0 {
        x
    } else if x == y + 1 {
        1
    } else {
        x - y - 1
    }
}

/// Linearly ordered algebra on `0..n`, `n ≥ 1`.
pub fn chain_algebra(n: usize) -> Result<BckAlgebra, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ParameterTooSmall { kind: "chain", n, min: 1 });
    }
    Ok(certified(CayleyTable::from_fn(n, chain_op).expect("in range")))
}

/// The chain on `0..n` extended by an element `n` with two maximal
/// elements `n - 1` and `n`; order `n + 1`, `n ≥ 5`.
///
/// New products: `n·0 = n`, `n·y = max(n - y - 1, 1)` for `0 < y < n`,
/// `(n-1)·n = 1`, and `x·n = 0` otherwise.
pub fn lemma2_algebra(n: usize) -> Result<BckAlgebra, ConstructionError> {
    if n < 5 {
        return Err(ConstructionError::ParameterTooSmall { kind: "lemma2", n, min: 5 });
    }
    let table = CayleyTable::from_fn(n + 1, |x, y| match (x == n, y == n) {
        (false, false) => chain_op(x, y),
        (true, false) if y == 0 => n,
        // n - y - 1 alone would give n·(n-1) = 0, making n and n-1 equal
        // under the order; the floor of 1 keeps them incomparable.
        (true, false) => (n - y - 1).max(1),
        (false, true) if x == n - 1 => 1,
        (_, true) => 0,
    })
    .expect("in range");
    Ok(certified(table))
}

/// Adjoins a new greatest element `n` to an algebra of order `n`:
/// `x·n = 0` for all `x` and `n·y = n` for `y < n`.
pub fn top_extension(a: &BckAlgebra) -> BckAlgebra {
    let n = a.order();
    let table = CayleyTable::from_fn(n + 1, |x, y| {
        if y == n {
            0
        } else if x == n {
            n
        } else {
            a.op(x, y)
        }
    })
    .expect("in range");
    certified(table)
}

/// Truncated subtraction `x·y = max(x - y, 0)` on `0..n`.
pub fn commutative_chain(n: usize) -> Result<BckAlgebra, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ParameterTooSmall { kind: "commutative", n, min: 1 });
    }
    Ok(certified(CayleyTable::from_fn(n, |x, y| x.saturating_sub(y)).expect("in range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_values() {
        let a = chain_algebra(5).unwrap();
        assert_eq!(a.op(4, 1), 2);
        assert!(a.is_linear());
        assert_eq!(chain_algebra(2).unwrap().table().entries(), &[0, 0, 1, 0]);
        assert!(chain_algebra(0).is_err());
    }

    #[test]
    fn lemma2_values() {
        let a = lemma2_algebra(6).unwrap();
        assert_eq!((a.op(6, 1), a.op(6, 5), a.op(5, 6), a.op(3, 6)), (4, 1, 1, 0));
        assert_eq!(a.maximal_elements(), vec![5, 6]);
        assert!(a.leq(4, 5) && a.leq(4, 6));
        assert_eq!(
            lemma2_algebra(4),
            Err(ConstructionError::ParameterTooSmall { kind: "lemma2", n: 4, min: 5 })
        );
    }

    #[test]
    fn top_extension_adds_a_unique_maximum() {
        let base = crate::catalog::nonprolongable_b();
        let ext = top_extension(&base);
        assert_eq!(ext.maximal_elements(), vec![6]);
        assert_eq!((ext.op(6, 0), ext.op(0, 6), ext.op(6, 6)), (6, 0, 0));
        assert_eq!(ext.restrict(&[0, 1, 2, 3, 4, 5]).unwrap(), base);
    }

    #[test]
    fn commutative_chain_values() {
        let a = commutative_chain(3).unwrap();
        assert_eq!((a.op(2, 1), a.op(1, 2)), (1, 0));
        assert!(a.is_commutative());
        assert_eq!(commutative_chain(2).unwrap(), chain_algebra(2).unwrap());
    }

    #[test]
    fn chain_is_not_commutative_from_four() {
        let a = chain_algebra(4).unwrap();
        assert_eq!(a.op(3, a.op(3, 2)), 1);
        assert_eq!(a.op(2, a.op(2, 3)), 2);
        assert!(!a.is_commutative());
    }

    #[test]
    fn spec_dispatch() {
        assert_eq!(ConstructionSpec::Chain(3).build().unwrap(), chain_algebra(3).unwrap());
        let bad = CayleyTable::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert!(matches!(ConstructionSpec::TopExtension(bad).build(), Err(BuildError::Validation(_))));
    }
}

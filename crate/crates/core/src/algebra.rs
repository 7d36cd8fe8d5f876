//! Certified BCK-algebras and their derived partial order.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::axioms::{check_axioms, AxiomViolation, DEFAULT_VIOLATION_CAP};
use crate::table::{CayleyTable, TableError};

/// Why a table could not be certified.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    /// The input is not a well-formed table; no axiom was checked.
    #[error("malformed table: {0}")]
    Malformed(#[from] TableError),
    /// The table is well-formed but fails one or more axioms.
    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    Axioms(Vec<AxiomViolation>),
}

impl ValidationError {
    pub fn violations(&self) -> &[AxiomViolation] {
        match self {
            ValidationError::Axioms(v) => v,
            ValidationError::Malformed(_) => &[],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("element {element} is out of range for an algebra of order {order}")]
pub struct ElementOutOfRange {
    pub element: usize,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RestrictError {
    #[error("subset must contain 0")]
    MissingZero,
    #[error(transparent)]
    OutOfRange(#[from] ElementOutOfRange),
    #[error("subset is not closed: {x}·{y} = {product} escapes")]
    NotClosed { x: usize, y: usize, product: usize },
}

/// A Cayley table that satisfies all five BCK axioms, together with its
/// order relation `x ≤ y ⇔ x·y = 0`.
///
/// Values of this type are immutable once certified.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BckAlgebra {
    table: CayleyTable,
    #[serde(skip)]
    leq: Vec<bool>,
}

/// Certifies `table`, reporting up to [`DEFAULT_VIOLATION_CAP`] violations
/// per failing axiom.
pub fn validate(table: &CayleyTable) -> Result<BckAlgebra, ValidationError> {
    validate_with_cap(table, DEFAULT_VIOLATION_CAP)
}

pub fn validate_with_cap(table: &CayleyTable, cap: usize) -> Result<BckAlgebra, ValidationError> {
    let violations = check_axioms(table, cap);
    if violations.is_empty() {
        Ok(BckAlgebra::new_unchecked(table.clone()))
    } else {
        Err(ValidationError::Axioms(violations))
    }
}

impl BckAlgebra {
    /// Parses and certifies rows in one step.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, ValidationError> {
        validate(&CayleyTable::from_rows(rows)?)
    }

    pub fn from_text(text: &str) -> Result<Self, ValidationError> {
        validate(&CayleyTable::from_text(text)?)
    }

    /// Wraps a table already known to satisfy the axioms (constructions and
    /// search leaves). Debug builds re-check.
    pub(crate) fn new_unchecked(table: CayleyTable) -> Self {
        debug_assert!(crate::axioms::is_bck(&table), "uncertified table: {table:?}");
        let leq = table.entries().iter().map(|&v| v == 0).collect();
        BckAlgebra { table, leq }
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// `x·y`. Panics on out-of-range elements.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.entry(x, y)
    }

    pub fn check_element(&self, x: usize) -> Result<usize, ElementOutOfRange> {
        if x < self.order() {
            Ok(x)
        } else {
            Err(ElementOutOfRange { element: x, order: self.order() })
        }
    }

    /// `x ≤ y`, i.e. `x·y = 0`. Panics on out-of-range elements.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        assert!(x < self.order() && y < self.order(), "element out of range");
        self.leq[x * self.order() + y]
    }

    pub fn checked_leq(&self, x: usize, y: usize) -> Result<bool, ElementOutOfRange> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.leq(x, y))
    }

    /// Elements with nothing strictly above them, ascending.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&m| (0..n).all(|x| x == m || !self.leq(m, x)))
            .collect()
    }

    /// Cover pairs `(x, y)`: `x < y` with no element strictly between,
    /// in row-major order.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let lt = |a: usize, b: usize| a != b && self.leq(a, b);
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                    covers.push((x, y));
                }
            }
        }
        covers
    }

    /// True iff every two elements are comparable.
    pub fn is_linear(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (x + 1..n).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// True iff `x·(x·y) = y·(y·x)` for all `x, y`.
    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.op(x, self.op(x, y)) == self.op(y, self.op(y, x))))
    }

    /// Restricts to a subset containing `0` that is closed under `·`.
    ///
    /// The subset's elements are relabeled `0..k` in ascending order, so the
    /// result's element `i` is the `i`-th smallest member of `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<BckAlgebra, RestrictError> {
        let mut members: Vec<usize> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            self.check_element(m)?;
        }
        if members.first() != Some(&0) {
            return Err(RestrictError::MissingZero);
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            index[m] = i;
        }
        let mut entries = Vec::with_capacity(members.len() * members.len());
        for &x in &members {
            for &y in &members {
                let p = self.op(x, y);
                if index[p] == usize::MAX {
                    return Err(RestrictError::NotClosed { x, y, product: p });
                }
                entries.push(index[p]);
            }
        }
        let table = CayleyTable::from_entries(members.len(), entries).expect("restriction is square and in range");
        Ok(BckAlgebra::new_unchecked(table))
    }
}

impl fmt::Debug for BckAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("BckAlgebra").field(&self.table).finish()
    }
}

impl fmt::Display for BckAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.table.fmt(f)
    }
}

impl TryFrom<CayleyTable> for BckAlgebra {
    type Error = ValidationError;

    fn try_from(t: CayleyTable) -> Result<Self, Self::Error> {
        validate(&t)
    }
}

impl AsRef<CayleyTable> for BckAlgebra {
    fn as_ref(&self) -> &CayleyTable {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{nonprolongable_a as table_a, nonprolongable_b as table_b};

    #[test]
    fn order_relation_on_table_a() {
        let a = table_a();
        assert!(a.leq(3, 4));
        assert!(!a.leq(4, 5));
        assert!((0..6).all(|x| a.leq(0, x)));
        assert_eq!(a.checked_leq(6, 0), Err(ElementOutOfRange { element: 6, order: 6 }));
    }

    #[test]
    fn maximal_elements_of_the_catalog_tables() {
        assert_eq!(table_a().maximal_elements(), vec![4, 5]);
        assert_eq!(table_b().maximal_elements(), vec![3, 5]);
        let one = BckAlgebra::from_rows(&[[0]]).unwrap();
        assert_eq!(one.maximal_elements(), vec![0]);
        assert!(one.is_linear());
    }

    #[test]
    fn table_a_is_not_linear() {
        assert!(!table_a().is_linear());
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        let mut rows: Vec<Vec<usize>> = table_a().into_table().into();
        rows[4][5] = 0;
        rows[5][4] = 0;
        let err = BckAlgebra::from_rows(&rows).unwrap_err();
        let v = err.violations();
        assert!(v.iter().any(|v| v.axiom == crate::Axiom::Five && v.witness == [4, 5]));
    }

    #[test]
    fn malformed_input_is_distinct_from_axiom_failure() {
        let err = BckAlgebra::from_rows(&[vec![0, 0], vec![1]]).unwrap_err();
        assert!(matches!(err, ValidationError::Malformed(TableError::NotSquare { .. })));
        let mut rows: Vec<Vec<usize>> = table_a().into_table().into();
        rows[0][1] = 1;
        let err = BckAlgebra::from_rows(&rows).unwrap_err();
        assert!(err
            .violations()
            .iter()
            .any(|v| v.axiom == crate::Axiom::Four && v.witness == [1]));
    }

    #[test]
    fn restrict_to_zero_and_closure_errors() {
        let a = table_a();
        let zero = a.restrict(&[0]).unwrap();
        assert_eq!(zero.order(), 1);
        // {0, 4} is closed: 4·0 = 4 and 4·4 = 0.
        assert_eq!(a.restrict(&[0, 4]).unwrap().order(), 2);
        assert_eq!(a.restrict(&[0, 4, 5]), Err(RestrictError::NotClosed { x: 4, y: 5, product: 1 }));
        assert_eq!(a.restrict(&[1, 2]), Err(RestrictError::MissingZero));
        assert!(matches!(a.restrict(&[0, 9]), Err(RestrictError::OutOfRange(_))));
    }
}

//! Certification of Cayley tables against the five BCK axioms.
//!
//! | axiom | statement |
//! |-------|-----------|
//! | 1 | `((x·y)·(z·y))·(x·z) = 0` |
//! | 2 | `(x·(x·y))·y = 0` |
//! | 3 | `x·0 = x` |
//! | 4 | `0·x = 0` |
//! | 5 | `x·y = 0` and `y·x = 0` imply `x = y` |
//!
//! Checks run cheapest first: (3), (4), the diagonal, (5), (2), then the
//! cubic axiom (1). The diagonal pass evaluates axiom (2) at `y = 0`, which
//! reduces to `x·x` once (3) holds, so a nonzero diagonal shows up as an
//! axiom (2) violation with witness `(x, 0)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::table::CayleyTable;

/// Default number of witnesses kept per axiom.
pub const DEFAULT_VIOLATION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Axiom {
    /// `((x·y)·(z·y))·(x·z) = 0`
    One,
    /// `(x·(x·y))·y = 0`
    Two,
    /// `x·0 = x`
    Three,
    /// `0·x = 0`
    Four,
    /// `x·y = y·x = 0 ⇒ x = y`
    Five,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::One, Axiom::Two, Axiom::Three, Axiom::Four, Axiom::Five];

    pub fn id(self) -> u8 {
        match self {
            Axiom::One => 1,
            Axiom::Two => 2,
            Axiom::Three => 3,
            Axiom::Four => 4,
            Axiom::Five => 5,
        }
    }

    pub fn from_id(id: u8) -> Option<Axiom> {
        Axiom::ALL.get(usize::from(id).wrapping_sub(1)).copied()
    }
}

impl From<Axiom> for u8 {
    fn from(a: Axiom) -> u8 {
        a.id()
    }
}

impl TryFrom<u8> for Axiom {
    type Error = String;

    fn try_from(id: u8) -> Result<Self, Self::Error> {
        Axiom::from_id(id).ok_or_else(|| format!("no axiom ({id})"))
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.id())
    }
}

/// A concrete failure of one axiom.
///
/// `witness` holds the variables of the axiom in order: `[x, y, z]` for (1),
/// `[x, y]` for (2) and (5), `[x]` for (3) and (4). `observed` is the value
/// that should have been `0` for (1), (2) and (4), the value of `x·0` for
/// (3), and for (5) the element `y ≠ x` that is indistinguishable from `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub observed: usize,
}

impl AxiomViolation {
    /// Re-evaluates the axiom at the witness and checks that it still fails
    /// with the recorded value.
    pub fn reproduces(&self, t: &CayleyTable) -> bool {
        let n = t.order();
        if self.witness.iter().any(|&v| v >= n) {
            return false;
        }
        let op = |a, b| t.entry(a, b);
        let w = &self.witness;
        match (self.axiom, w.as_slice()) {
            (Axiom::One, &[x, y, z]) => {
                let v = op(op(op(x, y), op(z, y)), op(x, z));
                v != 0 && v == self.observed
            }
            (Axiom::Two, &[x, y]) => {
                let v = op(op(x, op(x, y)), y);
                v != 0 && v == self.observed
            }
            (Axiom::Three, &[x]) => op(x, 0) != x && op(x, 0) == self.observed,
            (Axiom::Four, &[x]) => op(0, x) != 0 && op(0, x) == self.observed,
            (Axiom::Five, &[x, y]) => x != y && op(x, y) == 0 && op(y, x) == 0 && self.observed == y,
            _ => false,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.witness;
        match self.axiom {
            Axiom::One => write!(
                f,
                "axiom (1) fails at x={}, y={}, z={}: ((x·y)·(z·y))·(x·z) = {}",
                w[0], w[1], w[2], self.observed
            ),
            Axiom::Two => write!(f, "axiom (2) fails at x={}, y={}: (x·(x·y))·y = {}", w[0], w[1], self.observed),
            Axiom::Three => write!(f, "axiom (3) fails at x={}: x·0 = {}", w[0], self.observed),
            Axiom::Four => write!(f, "axiom (4) fails at x={}: 0·x = {}", w[0], self.observed),
            Axiom::Five => write!(f, "axiom (5) fails at x={}, y={}: x·y = y·x = 0", w[0], w[1]),
        }
    }
}

/// Collects violations, keeping at most `cap` per axiom.
#[derive(Debug)]
struct Collector {
    cap: usize,
    found: Vec<AxiomViolation>,
    per_axiom: [usize; 5],
}

impl Collector {
    fn push(&mut self, axiom: Axiom, witness: Vec<usize>, observed: usize) {
        let slot = &mut self.per_axiom[usize::from(axiom.id()) - 1];
        if *slot < self.cap {
            *slot += 1;
            self.found.push(AxiomViolation { axiom, witness, observed });
        }
    }

    fn full(&self, axiom: Axiom) -> bool {
        self.per_axiom[usize::from(axiom.id()) - 1] >= self.cap
    }
}

/// Checks every axiom over all elements, returning up to `cap` violations
/// per axiom. An empty result means the table is a BCK-algebra.
pub fn check_axioms(t: &CayleyTable, cap: usize) -> Vec<AxiomViolation> {
    let n = t.order();
    let e = t.entries();
    let op = |a: usize, b: usize| e[a * n + b];
    let mut c = Collector {
        cap: cap.max(1),
        found: Vec::new(),
        per_axiom: [0; 5],
    };

    for x in 0..n {
        if op(x, 0) != x {
            c.push(Axiom::Three, vec![x], op(x, 0));
        }
    }
    for x in 0..n {
        if op(0, x) != 0 {
            c.push(Axiom::Four, vec![x], op(0, x));
        }
    }
    // Diagonal: axiom (2) at y = 0.
    for x in 0..n {
        let v = op(op(x, op(x, 0)), 0);
        if v != 0 {
            c.push(Axiom::Two, vec![x, 0], v);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if op(x, y) == 0 && op(y, x) == 0 {
                c.push(Axiom::Five, vec![x, y], y);
            }
        }
    }
    'two: for x in 0..n {
        for y in 1..n {
            if c.full(Axiom::Two) {
                break 'two;
            }
            let v = op(op(x, op(x, y)), y);
            if v != 0 {
                c.push(Axiom::Two, vec![x, y], v);
            }
        }
    }
    'one: for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                let v = op(op(xy, op(z, y)), op(x, z));
                if v != 0 {
                    c.push(Axiom::One, vec![x, y, z], v);
                    if c.full(Axiom::One) {
                        break 'one;
                    }
                }
            }
        }
    }
    c.found
}

/// Fast yes/no check; stops at the first failure.
pub fn is_bck(t: &CayleyTable) -> bool {
    let n = t.order();
    let e = t.entries();
    let op = |a: usize, b: usize| e[a * n + b];
    if (0..n).any(|x| op(x, 0) != x || op(0, x) != 0 || op(x, x) != 0) {
        return false;
    }
    for x in 0..n {
        for y in x + 1..n {
            if op(x, y) == 0 && op(y, x) == 0 {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if op(op(x, op(x, y)), y) != 0 {
                return false;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                if op(op(xy, op(z, y)), op(x, z)) != 0 {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[usize]]) -> CayleyTable {
        CayleyTable::from_rows(rows).unwrap()
    }

    #[test]
    fn two_element_algebra_passes() {
        let t = table(&[&[0, 0], &[1, 0]]);
        assert!(check_axioms(&t, 16).is_empty());
        assert!(is_bck(&t));
    }

    #[test]
    fn axiom_four_violation() {
        let t = table(&[&[0, 1], &[1, 0]]);
        let v = check_axioms(&t, 16);
        assert!(v.iter().any(|v| v.axiom == Axiom::Four && v.witness == [1] && v.observed == 1));
        assert!(v.iter().all(|v| v.reproduces(&t)));
        assert!(!is_bck(&t));
    }

    #[test]
    fn nonzero_diagonal_is_reported_under_axiom_two() {
        let t = table(&[&[0, 0], &[1, 1]]);
        let v = check_axioms(&t, 16);
        assert!(v.contains(&AxiomViolation { axiom: Axiom::Two, witness: vec![1, 0], observed: 1 }));
        assert!(v.iter().all(|v| v.reproduces(&t)));
    }

    #[test]
    fn cap_limits_each_axiom() {
        // Every entry zero: axiom (3) fails at each x > 0, (5) at each pair.
        let t = CayleyTable::from_fn(6, |_, _| 0).unwrap();
        let v = check_axioms(&t, 3);
        assert_eq!(v.iter().filter(|v| v.axiom == Axiom::Three).count(), 3);
        assert_eq!(v.iter().filter(|v| v.axiom == Axiom::Five).count(), 3);
        assert!(v.iter().all(|v| v.reproduces(&t)));
    }

    #[test]
    fn axiom_ids_round_trip() {
        for a in Axiom::ALL {
            assert_eq!(Axiom::from_id(a.id()), Some(a));
        }
        assert_eq!(Axiom::from_id(0), None);
        assert_eq!(Axiom::from_id(6), None);
    }
}

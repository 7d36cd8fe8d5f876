//! BCK-sequences, prolongation of the interleaved chains, and
//! n-commutativity.
//!
//! For a pair `(x, y)` the two sequences are
//!
//! ```text
//! x_0 = x,  x_1 = y·(y·x),  x_k = x_{k-2}·(x_{k-2}·x_{k-1})
//! y_0 = y,  y_1 = x·(x·y),  y_k = y_{k-2}·(y_{k-2}·y_{k-1})
//! ```
//!
//! and they interleave into two descending chains:
//!
//! ```text
//! chain A:  x_0 ≥ y_1 ≥ x_2 ≥ y_3 ≥ ...
//! chain B:  y_0 ≥ x_1 ≥ y_2 ≥ x_3 ≥ ...
//! ```
//!
//! The pair state `(x_k, x_{k+1}, y_k, y_{k+1})` determines everything that
//! follows, so a trace is computed until that state repeats. This makes the
//! "unbounded" verdict of [`prolongation_depth`] exact.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{BckAlgebra, ElementOutOfRange};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error(transparent)]
    OutOfRange(#[from] ElementOutOfRange),
    #[error("{x1} ≤ {x0} does not hold")]
    NotComparable { x0: usize, x1: usize },
}

/// The two sequences started at `(x, y)`, up to and including one full
/// cycle of the joint state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTrace {
    pub x_terms: Vec<usize>,
    pub y_terms: Vec<usize>,
    /// First index `k` whose state `(x_k, x_{k+1}, y_k, y_{k+1})` recurs.
    pub preperiod: usize,
    /// Distance between the two occurrences of that state.
    pub period: usize,
}

impl PairTrace {
    /// `x_k` for any `k`, extending periodically past the stored terms.
    pub fn x(&self, k: usize) -> usize {
        self.x_terms[self.fold(k)]
    }

    pub fn y(&self, k: usize) -> usize {
        self.y_terms[self.fold(k)]
    }

    fn fold(&self, k: usize) -> usize {
        let len = self.x_terms.len();
        if k < len {
            k
        } else {
            let p = self.preperiod;
            p + (k - p) % self.period
        }
    }

    /// Term `k` of chain A (`x_0 ≥ y_1 ≥ x_2 ≥ ...`) or chain B.
    pub fn chain_term(&self, chain: Chain, k: usize) -> usize {
        match (chain, k % 2) {
            (Chain::A, 0) | (Chain::B, 1) => self.x(k),
            _ => self.y(k),
        }
    }
}

/// Computes the sequences for the pair `(x, y)`.
pub fn pair_sequences(a: &BckAlgebra, x: usize, y: usize) -> Result<PairTrace, SequenceError> {
    a.check_element(x)?;
    a.check_element(y)?;
    let step = |s0: usize, s1: usize| a.op(s0, a.op(s0, s1));
    let mut xs = vec![x, step(y, x)];
    let mut ys = vec![y, step(x, y)];
    let mut seen: HashMap<[usize; 4], usize> = HashMap::new();
    let mut k = 0;
    loop {
        let state = [xs[k], xs[k + 1], ys[k], ys[k + 1]];
        if let Some(&first) = seen.get(&state) {
            // Keep terms 0..=k+1 so that states first..k are all present.
            return Ok(PairTrace {
                x_terms: xs,
                y_terms: ys,
                preperiod: first,
                period: k - first,
            });
        }
        seen.insert(state, k);
        xs.push(step(xs[k], xs[k + 1]));
        ys.push(step(ys[k], ys[k + 1]));
        k += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chain {
    /// `x_0 ≥ y_1 ≥ x_2 ≥ y_3 ≥ ...`
    A,
    /// `y_0 ≥ x_1 ≥ y_2 ≥ x_3 ≥ ...`
    B,
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chain::A => f.write_str("x0>=y1>=x2>=..."),
            Chain::B => f.write_str("y0>=x1>=y2>=..."),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Depth {
    Unbounded,
    Bounded(usize),
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Unbounded => f.write_str("Unbounded"),
            Depth::Bounded(m) => write!(f, "Bounded({m})"),
        }
    }
}

/// The first link `upper ≥ lower` that fails, at positions `link` and
/// `link + 1` of `chain`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkFailure {
    pub chain: Chain,
    pub link: usize,
    /// Chain term at index `link`.
    pub upper: usize,
    /// Chain term at index `link + 1`.
    pub lower: usize,
    /// `lower·upper`, nonzero.
    pub product: usize,
    /// The same product with the sequence indices exchanged: if the link
    /// compares `s_k` with `t_{k+1}`, this is `t_k·s_{k+1}`.
    pub swapped_index_product: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub x: usize,
    pub y: usize,
    pub depth: Depth,
    pub witness: Option<LinkFailure>,
}

impl DepthReport {
    pub fn is_bounded(&self) -> bool {
        matches!(self.depth, Depth::Bounded(_))
    }
}

/// How far chains A and B keep descending for the pair `(x, y)`.
///
/// The depth is the largest `m` such that every link with index below `m`
/// holds in both chains. Links are checked through two full cycles of the
/// joint state, which covers both parities, so `Unbounded` is exact.
pub fn prolongation_depth(a: &BckAlgebra, x: usize, y: usize) -> Result<DepthReport, SequenceError> {
    let trace = pair_sequences(a, x, y)?;
    Ok(depth_of_trace(a, &trace))
}

pub fn depth_of_trace(a: &BckAlgebra, trace: &PairTrace) -> DepthReport {
    let horizon = trace.preperiod + 2 * trace.period;
    for k in 0..horizon {
        for chain in [Chain::A, Chain::B] {
            let upper = trace.chain_term(chain, k);
            let lower = trace.chain_term(chain, k + 1);
            let product = a.op(lower, upper);
            if product != 0 {
                let other = match chain {
                    Chain::A => Chain::B,
                    Chain::B => Chain::A,
                };
                // The other chain at this link compares the same two indices with
                // the sequences exchanged.
                let swapped_index_product = a.op(trace.chain_term(other, k), trace.chain_term(other, k + 1));
                return DepthReport {
                    x: trace.x_terms[0],
                    y: trace.y_terms[0],
                    depth: Depth::Bounded(k),
                    witness: Some(LinkFailure {
                        chain,
                        link: k,
                        upper,
                        lower,
                        product,
                        swapped_index_product,
                    }),
                };
            }
        }
    }
    DepthReport {
        x: trace.x_terms[0],
        y: trace.y_terms[0],
        depth: Depth::Unbounded,
        witness: None,
    }
}

/// First pair in row-major order whose chains cannot be prolonged.
pub fn find_nonprolongable_pair(a: &BckAlgebra) -> Option<DepthReport> {
    let n = a.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| prolongation_depth(a, x, y).expect("in range"))
        .find(DepthReport::is_bounded)
}

/// A single descending sequence from a comparable start `x_1 ≤ x_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleTrace {
    /// `x_0, x_1, ...` through the first repeated term.
    pub terms: Vec<usize>,
    /// Least `n` with `x_n = x_{n+1}`.
    pub stabilization_index: usize,
}

impl SingleTrace {
    /// `x_k` for any `k`; constant past the stabilization index.
    pub fn term(&self, k: usize) -> usize {
        self.terms[k.min(self.terms.len() - 1)]
    }
}

/// Runs `x_k = x_{k-2}·(x_{k-2}·x_{k-1})` from `(x0, x1)` with `x1 ≤ x0`.
///
/// Once two consecutive terms agree the sequence is constant, since
/// `x_{n+2} = x_n·(x_n·x_n) = x_n·0 = x_n`.
pub fn single_sequence(a: &BckAlgebra, x0: usize, x1: usize) -> Result<SingleTrace, SequenceError> {
    a.check_element(x0)?;
    a.check_element(x1)?;
    if !a.leq(x1, x0) {
        return Err(SequenceError::NotComparable { x0, x1 });
    }
    let mut terms = vec![x0, x1];
    while terms[terms.len() - 1] != terms[terms.len() - 2] {
        let k = terms.len();
        let next = a.op(terms[k - 2], a.op(terms[k - 2], terms[k - 1]));
        terms.push(next);
        debug_assert!(terms.len() <= a.order() + 1, "descending sequence too long");
    }
    let stabilization_index = terms.len() - 2;
    Ok(SingleTrace { terms, stabilization_index })
}

/// Least `n` such that every comparable start stabilizes by step `n`.
pub fn commutativity_index(a: &BckAlgebra) -> usize {
    comparable_pairs(a)
        .map(|(x0, x1)| single_sequence(a, x0, x1).expect("comparable").stabilization_index)
        .max()
        .unwrap_or(0)
}

/// A comparable start realising [`commutativity_index`], first in
/// row-major order.
pub fn commutativity_witness(a: &BckAlgebra) -> Option<SingleTrace> {
    let mut best: Option<SingleTrace> = None;
    for (x0, x1) in comparable_pairs(a) {
        let t = single_sequence(a, x0, x1).expect("comparable");
        if best.as_ref().map_or(true, |b| t.stabilization_index > b.stabilization_index) {
            best = Some(t);
        }
    }
    best
}

fn comparable_pairs(a: &BckAlgebra) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = a.order();
    (0..n).flat_map(move |x0| (0..n).filter(move |&x1| a.leq(x1, x0)).map(move |x1| (x0, x1)))
}

/// Membership in the class of algebras whose commutativity index is at
/// most `n`.
pub fn in_variety(a: &BckAlgebra, n: usize) -> bool {
    commutativity_index(a) <= n
}

/// A pair `(x, y)` whose sequences disagree at index `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityViolation {
    pub x: usize,
    pub y: usize,
    pub n: usize,
    pub x_n: usize,
    pub y_n: usize,
}

/// First pair in row-major order with `x_n ≠ y_n`.
pub fn find_identity_violation(a: &BckAlgebra, n: usize) -> Option<IdentityViolation> {
    let order = a.order();
    for x in 0..order {
        for y in 0..order {
            let t = pair_sequences(a, x, y).expect("in range");
            let (x_n, y_n) = (t.x(n), t.y(n));
            if x_n != y_n {
                return Some(IdentityViolation { x, y, n, x_n, y_n });
            }
        }
    }
    None
}

/// True iff `x_n = y_n` for every pair.
pub fn satisfies_identity(a: &BckAlgebra, n: usize) -> bool {
    find_identity_violation(a, n).is_none()
}

//! Partially filled Cayley tables with incremental axiom checking.
//!
//! Row 0, column 0 and the diagonal are forced (`0·x = 0`, `x·0 = x`,
//! `x·x = 0`); the remaining cells are filled in row-major order.
//!
//! Every instance of axioms (1) and (2) is evaluated lazily: evaluation
//! walks the nested products and stops at the first unknown cell, where the
//! instance is parked on that cell's watch list. Assigning a cell resumes
//! exactly the instances parked on it. An instance is therefore decided at
//! the moment its last contributing cell becomes known, and never
//! re-checked after that. Moves between watch lists are recorded on a trail
//! so that [`PartialTable::undo`] restores the previous state exactly.

use std::fmt;

use serde::Serialize;

use crate::axioms::Axiom;
use crate::table::CayleyTable;

pub(crate) const UNKNOWN: u8 = u8::MAX;

/// Largest order the search engine can represent.
pub const MAX_SEARCH_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Instance {
    /// `((x·y)·(z·y))·(x·z) = 0`
    One(u8, u8, u8),
    /// `(x·(x·y))·y = 0`
    Two(u8, u8),
}

enum Eval {
    Holds,
    Fails,
    Blocked(usize),
}

impl Instance {
    fn eval(self, cells: &[u8], n: usize) -> Eval {
        let get = |a: u8, b: u8| -> Result<u8, usize> {
            let i = usize::from(a) * n + usize::from(b);
            match cells[i] {
                UNKNOWN => Err(i),
                v => Ok(v),
            }
        };
        let result = match self {
            Instance::One(x, y, z) => (|| {
                let xy = get(x, y)?;
                let zy = get(z, y)?;
                let xz = get(x, z)?;
                let l = get(xy, zy)?;
                get(l, xz)
            })(),
            Instance::Two(x, y) => (|| {
                let xy = get(x, y)?;
                let l = get(x, xy)?;
                get(l, y)
            })(),
        };
        match result {
            Ok(0) => Eval::Holds,
            Ok(_) => Eval::Fails,
            Err(cell) => Eval::Blocked(cell),
        }
    }

    fn describe(self) -> (Axiom, Vec<usize>) {
        match self {
            Instance::One(x, y, z) => (Axiom::One, vec![x.into(), y.into(), z.into()]),
            Instance::Two(x, y) => (Axiom::Two, vec![x.into(), y.into()]),
        }
    }
}

/// Why an assignment was refused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Rejection {
    /// The transposed cell is already `0`, so `x ≤ y ≤ x` with `x ≠ y`.
    Antisymmetry { x: usize, y: usize },
    /// An axiom instance became fully known and evaluated to nonzero.
    Axiom { axiom: Axiom, witness: Vec<usize> },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Antisymmetry { x, y } => write!(f, "axiom (5) fails at x={x}, y={y}"),
            Rejection::Axiom { axiom, witness } => write!(f, "axiom {axiom} fails at {witness:?}"),
        }
    }
}

#[derive(Debug, Clone)]
struct Frame {
    cell: usize,
    parked: Vec<u32>,
    trail_start: usize,
}

#[derive(Debug, Clone)]
pub struct PartialTable {
    n: usize,
    cells: Vec<u8>,
    free: Vec<usize>,
    cursor: usize,
    instances: Vec<Instance>,
    watches: Vec<Vec<u32>>,
    trail: Vec<(u32, u32)>,
    frames: Vec<Frame>,
}

impl PartialTable {
    /// The empty table of order `n` with forced cells filled in.
    ///
    /// Panics if `n` is 0 or exceeds [`MAX_SEARCH_ORDER`].
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_SEARCH_ORDER).contains(&n), "order {n} outside search range");
        let mut cells = vec![UNKNOWN; n * n];
        let mut free = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let i = x * n + y;
                if x == 0 || x == y {
                    cells[i] = 0;
                } else if y == 0 {
                    cells[i] = x as u8;
                } else {
                    free.push(i);
                }
            }
        }
        let mut instances = Vec::with_capacity(n * n * n + n * n);
        for x in 0..n as u8 {
            for y in 0..n as u8 {
                instances.push(Instance::Two(x, y));
                for z in 0..n as u8 {
                    instances.push(Instance::One(x, y, z));
                }
            }
        }
        let mut watches = vec![Vec::new(); n * n];
        for (id, inst) in instances.iter().enumerate() {
            match inst.eval(&cells, n) {
                Eval::Holds => {}
                Eval::Blocked(c) => watches[c].push(id as u32),
                Eval::Fails => unreachable!("forced cells satisfy every instance they decide"),
            }
        }
        PartialTable {
            n,
            cells,
            free,
            cursor: 0,
            instances,
            watches,
            trail: Vec::new(),
            frames: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The known value of cell `(x, y)`, if any.
    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        match self.cells[x * self.n + y] {
            UNKNOWN => None,
            v => Some(v.into()),
        }
    }

    /// The next cell to fill, or `None` when the table is complete.
    pub fn cursor_cell(&self) -> Option<(usize, usize)> {
        self.free.get(self.cursor).map(|&i| (i / self.n, i % self.n))
    }

    pub fn is_complete(&self) -> bool {
        self.cursor == self.free.len()
    }

    /// Number of free (non-forced) cells.
    pub fn free_cells(&self) -> usize {
        self.free.len()
    }

    pub fn filled(&self) -> usize {
        self.cursor
    }

    /// Assigns `value` to `cell` and returns the extended table, leaving
    /// `self` untouched.
    ///
    /// Panics unless `cell` is the cursor cell and `value < order`.
    pub fn prune_and_fill(&self, cell: (usize, usize), value: usize) -> Result<PartialTable, Rejection> {
        assert_eq!(Some(cell), self.cursor_cell(), "cells are filled in row-major order");
        let mut next = self.clone();
        next.assign(value)?;
        Ok(next)
    }

    /// In-place assignment of the cursor cell. On rejection the table is
    /// left unchanged.
    pub fn assign(&mut self, value: usize) -> Result<(), Rejection> {
        let n = self.n;
        assert!(value < n, "value {value} out of range");
        let cell = self.free[self.cursor];
        let (x, y) = (cell / n, cell % n);
        if value == 0 && self.cells[y * n + x] == 0 {
            return Err(Rejection::Antisymmetry { x, y });
        }
        self.cells[cell] = value as u8;
        self.cursor += 1;
        let parked = std::mem::take(&mut self.watches[cell]);
        let trail_start = self.trail.len();
        let mut failure = None;
        for &id in &parked {
            let inst = self.instances[id as usize];
            match inst.eval(&self.cells, n) {
                Eval::Holds => {}
                Eval::Blocked(c) => {
                    self.watches[c].push(id);
                    self.trail.push((id, c as u32));
                }
                Eval::Fails => {
                    failure = Some(inst);
                    break;
                }
            }
        }
        self.frames.push(Frame { cell, parked, trail_start });
        match failure {
            None => Ok(()),
            Some(inst) => {
                self.undo();
                let (axiom, witness) = inst.describe();
                Err(Rejection::Axiom { axiom, witness })
            }
        }
    }

    /// Reverts the most recent successful [`assign`](Self::assign).
    pub fn undo(&mut self) {
        let frame = self.frames.pop().expect("nothing to undo");
        for &(id, c) in self.trail[frame.trail_start..].iter().rev() {
            let popped = self.watches[c as usize].pop();
            debug_assert_eq!(popped, Some(id));
        }
        self.trail.truncate(frame.trail_start);
        self.watches[frame.cell] = frame.parked;
        self.cells[frame.cell] = UNKNOWN;
        self.cursor -= 1;
    }

    /// The finished table. Panics if cells remain unknown.
    pub fn to_table(&self) -> CayleyTable {
        assert!(self.is_complete(), "table is incomplete");
        CayleyTable::from_entries(self.n, self.cells.iter().map(|&v| usize::from(v)).collect())
            .expect("cells are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::NONPROLONGABLE_A;

    fn fill_until(p: &mut PartialTable, rows: &[[usize; 6]; 6], stop: (usize, usize)) {
        while let Some(c) = p.cursor_cell() {
            if c == stop {
                break;
            }
            p.assign(rows[c.0][c.1]).unwrap();
        }
    }

    #[test]
    fn forced_cells() {
        let p = PartialTable::new(4);
        assert_eq!(p.get(0, 3), Some(0));
        assert_eq!(p.get(3, 0), Some(3));
        assert_eq!(p.get(2, 2), Some(0));
        assert_eq!(p.get(1, 2), None);
        assert_eq!(p.free_cells(), 6);
        assert_eq!(p.cursor_cell(), Some((1, 2)));
    }

    #[test]
    fn antisymmetry_rejection() {
        let p = PartialTable::new(3);
        let p = p.prune_and_fill((1, 2), 0).unwrap();
        assert_eq!(p.prune_and_fill((2, 1), 0).unwrap_err(), Rejection::Antisymmetry { x: 2, y: 1 });
    }

    #[test]
    fn catalog_prefix_is_accepted() {
        let mut p = PartialTable::new(6);
        fill_until(&mut p, &NONPROLONGABLE_A, (4, 5));
        assert!(p.prune_and_fill((4, 5), 1).is_ok());
        fill_until(&mut p, &NONPROLONGABLE_A, (9, 9));
        assert!(p.is_complete());
        assert_eq!(p.to_table(), CayleyTable::from_rows(&NONPROLONGABLE_A).unwrap());
    }

    #[test]
    fn undo_restores_state() {
        let mut p = PartialTable::new(5);
        let before = format!("{:?}", (&p.cells, &p.watches));
        p.assign(0).unwrap();
        p.assign(1).unwrap();
        p.undo();
        p.undo();
        assert_eq!(before, format!("{:?}", (&p.cells, &p.watches)));
        assert!(p.trail.is_empty());
    }

    #[test]
    fn order_three_completions_match_full_check() {
        let p = PartialTable::new(3);
        for a in 0..3 {
            for b in 0..3 {
                let full = CayleyTable::from_rows(&[[0, 0, 0], [1, 0, a], [2, b, 0]]).unwrap();
                let pruned = p
                    .prune_and_fill((1, 2), a)
                    .and_then(|q| q.prune_and_fill((2, 1), b))
                    .is_ok();
                assert_eq!(pruned, crate::axioms::is_bck(&full), "1·2={a}, 2·1={b}");
            }
        }
    }
}

//! Isomorphism testing via canonical forms.
//!
//! The canonical form of a table is the lexicographically least row-major
//! table among all relabelings that fix `0`. Relabelings are explored by
//! depth-first search over the new label order; a branch is cut as soon as
//! the partially determined table is provably greater than the best one
//! found so far.

use crate::algebra::BckAlgebra;
use crate::table::CayleyTable;

const UNSET: usize = usize::MAX;

/// Lexicographically least 0-fixing relabeling of `a`'s table.
pub fn canonical_form(a: &BckAlgebra) -> CayleyTable {
    canonical_table(a.table())
}

/// `canonical_form` for any table with `T[x][0] = x` and `T[x][x] = 0`.
/// The search is correct for arbitrary tables; those two facts only make
/// it faster.
pub fn canonical_table(t: &CayleyTable) -> CayleyTable {
    let perm = canonical_labeling(t);
    t.relabel(&perm)
}

/// The relabeling `old ↦ new` that produces the canonical form.
pub fn canonical_labeling(t: &CayleyTable) -> Vec<usize> {
    let n = t.order();
    let mut search = Search {
        n,
        t: t.entries(),
        new_to_old: vec![UNSET; n],
        old_to_new: vec![UNSET; n],
        best: None,
        best_perm: Vec::new(),
        scratch: vec![0; n * n],
        identity_column: (0..n).all(|x| t.entry(x, 0) == x),
    };
    search.new_to_old[0] = 0;
    search.old_to_new[0] = 0;
    search.descend(1);
    search.best_perm
}

pub fn is_isomorphic(a: &BckAlgebra, b: &BckAlgebra) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}

struct Search<'a> {
    n: usize,
    t: &'a [usize],
    new_to_old: Vec<usize>,
    old_to_new: Vec<usize>,
    best: Option<Vec<usize>>,
    best_perm: Vec<usize>,
    scratch: Vec<usize>,
    // When `T[x][0] = x`, column 0 of every relabeling is `0, 1, 2, ...`.
    identity_column: bool,
}

enum Verdict {
    Prune,
    Continue,
}

impl Search<'_> {
    fn descend(&mut self, k: usize) {
        if k == self.n {
            self.complete();
            return;
        }
        for old in 1..self.n {
            if self.old_to_new[old] != UNSET {
                continue;
            }
            self.new_to_old[k] = old;
            self.old_to_new[old] = k;
            if let Verdict::Continue = self.bound(k + 1) {
                self.descend(k + 1);
            }
            self.new_to_old[k] = UNSET;
            self.old_to_new[old] = UNSET;
        }
    }

    fn complete(&mut self) {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let v = self.t[self.new_to_old[i] * n + self.new_to_old[j]];
                self.scratch[i * n + j] = self.old_to_new[v];
            }
        }
        let better = match &self.best {
            None => true,
            Some(best) => self.scratch < *best,
        };
        if better {
            self.best = Some(self.scratch.clone());
            self.best_perm = self.old_to_new.clone();
        }
    }

    /// With labels `0..k` placed, walks the new table in row-major order
    /// using exact values where known and lower bounds elsewhere.
    fn bound(&self, k: usize) -> Verdict {
        let Some(best) = &self.best else {
            return Verdict::Continue;
        };
        let n = self.n;
        let label = |v: usize| {
            let l = self.old_to_new[v];
            if l == UNSET {
                (k, false)
            } else {
                (l, true)
            }
        };
        for i in 0..n {
            let row_floor = if i < k {
                let r = self.new_to_old[i];
                (1..n)
                    .filter(|&u| self.old_to_new[u] == UNSET)
                    .map(|u| label(self.t[r * n + u]).0)
                    .min()
                    .unwrap_or(0)
            } else {
                0
            };
            for j in 0..n {
                let (value, exact) = if i < k && j < k {
                    label(self.t[self.new_to_old[i] * n + self.new_to_old[j]])
                } else if i < k {
                    (row_floor, false)
                } else if j == 0 && self.identity_column {
                    (i, true)
                } else {
                    (0, false)
                };
                let target = best[i * n + j];
                if exact {
                    match value.cmp(&target) {
                        std::cmp::Ordering::Equal => continue,
                        std::cmp::Ordering::Less => return Verdict::Continue,
                        std::cmp::Ordering::Greater => return Verdict::Prune,
                    }
                }
                return if value > target { Verdict::Prune } else { Verdict::Continue };
            }
        }
        // Identical prefix everywhere and all exact: no improvement possible.
        Verdict::Prune
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{nonprolongable_a, nonprolongable_b};

    #[test]
    fn relabeling_invariance() {
        let a = nonprolongable_a();
        let swapped = crate::validate(&a.table().relabel(&[0, 1, 2, 3, 5, 4])).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&swapped));
        assert!(is_isomorphic(&a, &swapped));
    }

    #[test]
    fn distinct_algebras_have_distinct_forms() {
        assert!(!is_isomorphic(&nonprolongable_a(), &nonprolongable_b()));
    }

    #[test]
    fn two_element_form_is_itself() {
        let a = BckAlgebra::from_rows(&[[0, 0], [1, 0]]).unwrap();
        assert_eq!(&canonical_form(&a), a.table());
    }

    #[test]
    fn idempotent() {
        for a in [nonprolongable_a(), nonprolongable_b()] {
            let c = canonical_form(&a);
            assert_eq!(canonical_table(&c), c);
        }
    }
}

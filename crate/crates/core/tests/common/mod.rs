//! Test-only reference implementations. Nothing here calls into the code
//! paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bck_core::CayleyTable;

/// Three nested loops over the axioms as written, no ordering tricks.
pub fn naive_is_bck(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    let op = |a: usize, b: usize| rows[a][b];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(op(x, y), op(z, y)), op(x, z)) != 0 {
                    return false;
                }
            }
            if op(op(x, op(x, y)), y) != 0 {
                return false;
            }
            if op(x, y) == 0 && op(y, x) == 0 && x != y {
                return false;
            }
        }
        if op(x, 0) != x || op(0, x) != 0 {
            return false;
        }
    }
    true
}

/// Every table of order `n` with row 0 zero and column 0 the identity,
/// all other cells ranging freely over `0..n`, kept if it passes
/// [`naive_is_bck`].
pub fn naive_enumerate(n: usize) -> BTreeSet<CayleyTable> {
    let free: Vec<(usize, usize)> = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    let mut rows = vec![vec![0; n]; n];
    for (x, row) in rows.iter_mut().enumerate() {
        row[0] = x;
    }
    let mut out = BTreeSet::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &(x, y) in &free {
            rows[x][y] = c % n;
            c /= n;
        }
        if naive_is_bck(&rows) {
            out.insert(CayleyTable::from_rows(&rows).unwrap());
        }
    }
    out
}

/// All permutations of `0..n` that fix 0.
pub fn zero_fixing_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut vec![0], &mut (1..n).collect(), &mut out);
    out
}

/// Relabels by brute force: `T'[p[x]][p[y]] = p[T[x][y]]`.
pub fn naive_relabel(t: &CayleyTable, p: &[usize]) -> CayleyTable {
    let n = t.order();
    let mut rows = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            rows[p[x]][p[y]] = p[t.entry(x, y)];
        }
    }
    CayleyTable::from_rows(&rows).unwrap()
}

/// Least relabeling over every 0-fixing permutation.
pub fn naive_canonical(t: &CayleyTable) -> CayleyTable {
    zero_fixing_perms(t.order())
        .iter()
        .map(|p| naive_relabel(t, p))
        .min()
        .unwrap()
}

/// Transitive reduction of the strict order `x·y = 0, x ≠ y`, computed as
/// `lt ∖ (lt ∘ lt⁺)` with the transitive closure taken by Warshall.
pub fn naive_covers(t: &CayleyTable) -> BTreeSet<(usize, usize)> {
    let n = t.order();
    let mut lt = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            lt[x][y] = x != y && t.entry(x, y) == 0;
        }
    }
    let mut closure = lt.clone();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if closure[i][k] && closure[k][j] {
                    closure[i][j] = true;
                }
            }
        }
    }
    let mut covers = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if lt[x][y] && !(0..n).any(|z| lt[x][z] && closure[z][y]) {
                covers.insert((x, y));
            }
        }
    }
    covers
}

/// Rows of the order-6 algebra with maximal elements 4 and 5.
pub fn rows_a() -> Vec<Vec<usize>> {
    vec![
        vec![0, 0, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0],
        vec![2, 1, 0, 0, 0, 0],
        vec![3, 1, 1, 0, 0, 0],
        vec![4, 2, 1, 1, 0, 1],
        vec![5, 3, 2, 1, 1, 0],
    ]
}

/// Rows of the order-6 algebra with maximal elements 3 and 5.
pub fn rows_b() -> Vec<Vec<usize>> {
    vec![
        vec![0, 0, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0],
        vec![2, 2, 0, 0, 0, 0],
        vec![3, 2, 1, 0, 1, 1],
        vec![4, 4, 4, 4, 0, 0],
        vec![5, 4, 4, 4, 1, 0],
    ]
}

/// The order-6 table built from the 5-chain plus a second top (transcribed
/// by hand, identical to `rows_a`).
pub fn rows_lemma2_5() -> Vec<Vec<usize>> {
    rows_a()
}

/// The order-7 table built from the 6-chain plus a second top, transcribed
/// by hand.
pub fn rows_lemma2_6() -> Vec<Vec<usize>> {
    vec![
        vec![0, 0, 0, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0, 0],
        vec![2, 1, 0, 0, 0, 0, 0],
        vec![3, 1, 1, 0, 0, 0, 0],
        vec![4, 2, 1, 1, 0, 0, 0],
        vec![5, 3, 2, 1, 1, 0, 1],
        vec![6, 4, 3, 2, 1, 1, 0],
    ]
}

/// Both sequences of a pair by direct recursion, `len` terms each.
pub fn naive_pair(t: &CayleyTable, x: usize, y: usize, len: usize) -> (Vec<usize>, Vec<usize>) {
    let op = |a, b| t.entry(a, b);
    let mut xs = vec![x, op(y, op(y, x))];
    let mut ys = vec![y, op(x, op(x, y))];
    while xs.len() < len {
        let k = xs.len();
        xs.push(op(xs[k - 2], op(xs[k - 2], xs[k - 1])));
        ys.push(op(ys[k - 2], op(ys[k - 2], ys[k - 1])));
    }
    xs.truncate(len);
    ys.truncate(len);
    (xs, ys)
}

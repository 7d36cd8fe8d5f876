//! Fixed small algebras used as references throughout the crate.

use crate::algebra::BckAlgebra;

/// Order-6 algebra with maximal elements 4 and 5 whose chains from
/// `(4, 5)` stop descending at link 3.
pub const NONPROLONGABLE_A: [[usize; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0],
    [4, 2, 1, 1, 0, 1],
    [5, 3, 2, 1, 1, 0],
];

/// Order-6 algebra with maximal elements 3 and 5 whose chains from
/// `(3, 5)` stop descending at link 3.
pub const NONPROLONGABLE_B: [[usize; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [2, 2, 0, 0, 0, 0],
    [3, 2, 1, 0, 1, 1],
    [4, 4, 4, 4, 0, 0],
    [5, 4, 4, 4, 1, 0],
];

pub fn nonprolongable_a() -> BckAlgebra {
    BckAlgebra::from_rows(&NONPROLONGABLE_A).expect("catalog table is a BCK-algebra")
}

pub fn nonprolongable_b() -> BckAlgebra {
    BckAlgebra::from_rows(&NONPROLONGABLE_B).expect("catalog table is a BCK-algebra")
}

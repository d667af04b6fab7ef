//! A few standard Gram matrices.

use crate::exact::SymGram;

/// Root lattice `A₂`.
pub fn a2() -> SymGram {
    SymGram::from_i64(&[&[2, 1], &[1, 2]]).expect("A2")
}

/// Root lattice `D₄`.
pub fn d4() -> SymGram {
    SymGram::from_i64(&[&[2, -1, 0, 0], &[-1, 2, -1, -1], &[0, -1, 2, 0], &[0, -1, 0, 2]]).expect("D4")
}

/// Root lattice `E₈` (Bourbaki labelling, the branch node is the fourth row).
pub fn e8() -> SymGram {
    SymGram::from_i64(&[
        &[2, -1, 0, 0, 0, 0, 0, 0],
        &[-1, 2, -1, 0, 0, 0, 0, 0],
        &[0, -1, 2, -1, 0, 0, 0, -1],
        &[0, 0, -1, 2, -1, 0, 0, 0],
        &[0, 0, 0, -1, 2, -1, 0, 0],
        &[0, 0, 0, 0, -1, 2, -1, 0],
        &[0, 0, 0, 0, 0, -1, 2, 0],
        &[0, 0, -1, 0, 0, 0, 0, 2],
    ])
    .expect("E8")
}

/// `(n-1)⟨1⟩ ⊕ ⟨δ⟩`.
pub fn extremal(n: usize, delta: i64) -> SymGram {
    let mut d = vec![1; n];
    d[n - 1] = delta;
    SymGram::diagonal(&d)
}

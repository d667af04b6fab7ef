//! Small values of the quadratic forms used to find short glue vectors.

use charform::charvec::{sublemma_witness, SublemmaVariant};

fn main() -> charform::Result<()> {
    for p in [5, 13, 17, 29, 37] {
        let s = [1, 3, p - 2];
        let w = sublemma_witness(SublemmaVariant::Three, p, &s, &[])?;
        println!("p={p:>2}  s={s:?}  k={:?} l={:?}  F={} < {}", w.k, w.l, w.value, w.target);
    }
    for q in [7, 11, 19, 23] {
        let w = sublemma_witness(SublemmaVariant::SixOdd, q, &[1, 3, 5, -1, -3, 1], &[0, 2, 4, -2, 0, 2])?;
        println!("q={q:>2}  six odd     k={:?}  F={} < {}", w.k, w.value, w.target);
        let w = sublemma_witness(SublemmaVariant::SixWithZero, q, &[1, 3, 5, -1, -3, 0], &[0, 2, 4, -2, 0, 1])?;
        println!("q={q:>2}  with zero   k={:?}  F={} < {}", w.k, w.value, w.target);
    }
    Ok(())
}

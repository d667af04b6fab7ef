//! Ranges of surgery coefficients on torus knots that cannot bound
//! negative-definite manifolds with torsion-free H_1.

use charform::surgery::torus_obstruction_range;

fn main() -> charform::Result<()> {
    println!("{:>7} {:>6} {:>12} {:>9}", "(p,q)", "exact", "closed form", "headline");
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 7), (5, 8), (6, 11)] {
        let r = torus_obstruction_range(p, q)?;
        println!(
            "{:>7} {:>6} {:>12} {:>9}",
            format!("({p},{q})"),
            r.exact_max_n,
            r.closed_form_max_n,
            r.headline_max_n
        );
    }
    Ok(())
}

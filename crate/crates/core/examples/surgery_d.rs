//! Torsion coefficients and d-invariants of surgeries on L-space knots.

use charform::exact::rat_to_string;
use charform::surgery::{d_surgery, Knot};

fn main() -> charform::Result<()> {
    let knots: [Knot; 3] = ["torus:2,3".parse()?, "torus:3,5".parse()?, "exponents:1,3,4".parse()?];
    for k in &knots {
        println!("{k}  Δ = {}", k.alexander()?);
        for n in [1i64, 4, 7, -7] {
            let ds: Vec<String> =
                (0..=n.abs() / 2).map(|i| d_surgery(k, n, i).map(|d| rat_to_string(&d))).collect::<Result<_, _>>()?;
            println!("    n={n:>3}  d = [{}]", ds.join(", "));
        }
    }
    Ok(())
}

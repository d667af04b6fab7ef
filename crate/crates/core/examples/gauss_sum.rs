//! Gauss sums of even lattices against exp(2πiσ/8).

use charform::lattices::{a2, d4, e8};
use charform::linking::{gauss_sum_milgram, DEFAULT_GAUSS_CAP};
use charform::SymGram;

fn main() -> charform::Result<()> {
    let forms = [
        ("A2", a2()),
        ("<2,2>", SymGram::diagonal(&[2, 2])),
        ("D4", d4()),
        ("E8", e8()),
        ("-A2", a2().neg()),
        ("[[2,1],[1,-4]]", SymGram::from_i64(&[&[2, 1], &[1, -4]])?),
    ];
    for (name, g) in forms {
        let s = gauss_sum_milgram(&g, DEFAULT_GAUSS_CAP)?;
        println!(
            "{name:>14}  |G|={:<3} σ={:>2}  G = {:+.12} {:+.12}i  dev {:.1e}",
            s.group_order, s.sigma, s.value.re, s.value.im, s.deviation
        );
    }
    Ok(())
}

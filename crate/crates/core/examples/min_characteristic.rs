//! Minimal characteristic covectors of a few small forms.

use charform::charvec::{brute_force_min, covering_box, min_characteristic};
use charform::exact::rat_to_string;
use charform::lattices::{a2, d4, e8};
use charform::SymGram;

fn main() -> charform::Result<()> {
    let forms = [
        ("Z^3", SymGram::identity(3)),
        ("<1,1,5>", SymGram::diagonal(&[1, 1, 5])),
        ("A2", a2()),
        ("D4", d4()),
        ("E8", e8()),
        ("[[2,1],[1,3]]", SymGram::from_i64(&[&[2, 1], &[1, 3]])?),
    ];
    for (name, g) in forms {
        let c = min_characteristic(&g)?;
        if g.rank() <= 4 {
            assert_eq!(c.square, brute_force_min(&g, covering_box(&g, &c.square))?.square);
        }
        let coords: Vec<String> = c.coords.iter().map(|x| x.to_string()).collect();
        println!("{name:>14}  min square {:>5}  at ({})", rat_to_string(&c.square), coords.join(", "));
    }
    Ok(())
}

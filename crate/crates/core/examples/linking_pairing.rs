//! Discriminant groups and the block decomposition of their linking pairings.

use charform::lattices::{a2, d4, e8};
use charform::linking::{decompose, discriminant_group};
use charform::SymGram;

fn main() -> charform::Result<()> {
    let forms = [
        ("A2", a2()),
        ("D4", d4()),
        ("E8", e8()),
        ("<2,2>", SymGram::diagonal(&[2, 2])),
        ("<4,12>", SymGram::diagonal(&[4, 12])),
        ("[[0,2],[2,0]]", SymGram::from_i64(&[&[0, 2], &[2, 0]])?),
        ("<5,5,7>", SymGram::diagonal(&[5, 5, 7])),
    ];
    for (name, g) in forms {
        let group = discriminant_group(&g)?;
        let orders: Vec<String> = group.orders.iter().map(|d| d.to_string()).collect();
        let blocks: Vec<String> = decompose(&g)?.iter().map(|b| b.label()).collect();
        println!("{name:>14}  L'/L = [{}]  blocks: {}", orders.join(" "), blocks.join(" + "));
    }
    Ok(())
}

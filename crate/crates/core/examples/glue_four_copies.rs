//! Four copies of a positive-definite lattice inside a unimodular lattice
//! carrying a quaternion action.

use charform::glue::{embed_four_copies, verify_quaternionic};
use charform::lattices::a2;
use charform::SymGram;

fn main() -> charform::Result<()> {
    let forms = [
        ("<3>", SymGram::rank_one(3)),
        ("<5>", SymGram::rank_one(5)),
        ("A2", a2()),
        ("[[2,1],[1,4]]", SymGram::from_i64(&[&[2, 1], &[1, 4]])?),
    ];
    for (name, g) in forms {
        let four = embed_four_copies(&g)?;
        let u = &four.unimodular.gram;
        let steps: Vec<String> = four
            .chains
            .iter()
            .flat_map(|c| c.steps.iter().map(move |s| format!("{}:{}", c.stage, s.prime)))
            .collect();
        println!(
            "{name:>14}  rank {:>2} det {:>2} index {:>4} even {:<5} quaternionic {}  steps [{}]",
            u.rank(),
            u.determinant(),
            four.index,
            u.is_even(),
            verify_quaternionic(u, &four.action)?,
            steps.join(" ")
        );
    }
    Ok(())
}

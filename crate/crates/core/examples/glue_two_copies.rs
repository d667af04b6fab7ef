//! Which <δ> admit a unimodular overlattice of two copies.

use charform::glue::{embed_two_copies, TwoCopies};
use charform::SymGram;

fn main() -> charform::Result<()> {
    for delta in 1..=30 {
        match embed_two_copies(&SymGram::rank_one(delta))? {
            TwoCopies::Embedded { lattice, .. } => {
                println!("{delta:>3}  embeds, det {} index {}", lattice.gram.determinant(), lattice.index)
            }
            TwoCopies::Obstructed { prime } => println!("{delta:>3}  obstructed at {prime}"),
        }
    }
    Ok(())
}

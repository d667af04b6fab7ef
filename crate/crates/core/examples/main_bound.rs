//! The sharp bound on the minimal characteristic square, and where it is attained.

use charform::charvec::check_main_bound;
use charform::exact::rat_to_string;
use charform::lattices::extremal;
use charform::SymGram;

fn main() -> charform::Result<()> {
    let forms = [
        SymGram::diagonal(&[1, 1, 5]),
        extremal(4, 6),
        SymGram::from_i64(&[&[2, 1], &[1, 3]])?,
        SymGram::from_i64(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 3]])?,
        SymGram::diagonal(&[2, 3]),
    ];
    println!("{:>4} {:>6} {:>10} {:>10} {:>9}", "rank", "delta", "min", "bound", "extremal");
    for g in forms {
        let r = check_main_bound(&g)?;
        println!(
            "{:>4} {:>6} {:>10} {:>10} {:>9}",
            r.rank,
            r.delta,
            rat_to_string(&r.min_square),
            rat_to_string(&r.bound),
            r.is_extremal
        );
    }
    Ok(())
}

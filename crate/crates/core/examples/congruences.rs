//! Characteristic squares modulo 4/δ and, for odd δ, modulo 8/δ.

use charform::charvec::{characteristic_parity, congruence_mod4, congruence_mod8, Covector};
use charform::exact::rat_to_string;
use charform::SymGram;
use num_bigint::BigInt;

fn main() -> charform::Result<()> {
    // indefinite and definite examples
    let forms = [
        SymGram::diagonal(&[1, -3]),
        SymGram::diagonal(&[1, 1, 5]),
        SymGram::from_i64(&[&[2, 1], &[1, -2]])?,
        SymGram::from_i64(&[&[3, 1], &[1, 4]])?,
    ];
    for g in forms {
        let m4 = congruence_mod4(&g)?;
        let m8 = if g.delta().bit(0) { Some(congruence_mod8(&g)?) } else { None };
        print!("det {:>3}: mod {} ≡ {}", g.determinant(), rat_to_string(&m4.modulus), rat_to_string(&m4.residue));
        if let Some(m8) = &m8 {
            print!(", mod {} ≡ {}", rat_to_string(&m8.modulus), rat_to_string(&m8.residue));
        }
        println!();
        let base = characteristic_parity(&g);
        for shift in 0..3i64 {
            let coords: Vec<BigInt> = base.iter().map(|&odd| BigInt::from(i64::from(odd) + 2 * shift)).collect();
            let c = Covector::new(&g, coords)?;
            assert!(m4.contains(&c.square));
            assert!(m8.as_ref().is_none_or(|m| m.contains(&c.square)));
            println!("    ξ² = {}", rat_to_string(&c.square));
        }
    }
    Ok(())
}

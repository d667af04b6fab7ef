//! Small-integer number theory: primality, factorization, Legendre symbols and
//! modular square roots.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

pub fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m))
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of `|n|` by trial division; `n` must be nonzero and fit in 64 bits.
pub fn factorize(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let m = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::pre(format!("{n} exceeds the 64-bit factorization guard")))?;
    if m == 0 {
        return Err(Error::Degenerate);
    }
    Ok(factorize_u64(m))
}

pub fn factorize_u64(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Largest square-free divisor `r` with `n = r·s²`.
pub fn squarefree_part(n: u64) -> u64 {
    factorize_u64(n).into_iter().filter(|&(_, e)| e % 2 == 1).map(|(p, _)| p).product()
}

/// Legendre symbol `(a/p)` for an odd prime `p`: 1, −1 or 0.
pub fn legendre(a: i128, p: u64) -> i8 {
    let r = a.rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    if mod_pow(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Smallest nonnegative `x` with `x² ≡ a (mod p)`, by Tonelli–Shanks.
pub fn sqrt_mod_prime(a: i128, p: u64) -> Option<u64> {
    let a = a.rem_euclid(p as i128) as u64;
    if p == 2 || a == 0 {
        return Some(a % p);
    }
    if legendre(a as i128, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| legendre(z as i128, p) == -1)?;
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul(t2, t2);
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    Some(r.min(p - r))
}

/// Smallest positive quadratic nonresidue modulo an odd prime.
pub fn smallest_nonresidue(p: u64) -> u64 {
    (2..p).find(|&m| legendre(m as i128, p) == -1).expect("odd prime has a nonresidue")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(&BigInt::from(-49)).unwrap(), vec![(7, 2)]);
        assert!(factorize(&BigInt::from(0)).is_err());
        assert_eq!(squarefree_part(12), 3);
        assert_eq!(squarefree_part(4), 1);
        assert_eq!(squarefree_part(30), 30);
    }

    #[test]
    fn square_roots() {
        for p in [3u64, 5, 7, 11, 13, 17, 97, 101] {
            for a in 0..p {
                let brute = (0..p).find(|x| x * x % p == a);
                assert_eq!(sqrt_mod_prime(a as i128, p), brute, "a={a} p={p}");
            }
        }
        assert_eq!(sqrt_mod_prime(-1, 13), Some(5));
        assert_eq!(smallest_nonresidue(7), 3);
        assert_eq!(smallest_nonresidue(3), 2);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(-3, 8), Some(5));
        assert_eq!(mod_inverse(2, 8), None);
    }
}

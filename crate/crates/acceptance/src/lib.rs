//! Seeded instance generators and a small report type for the acceptance run.

use std::time::{Duration, Instant};

use charform::exact::{is_positive_definite, IntMatrix};
use charform::SymGram;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

pub fn sym(n: usize, upper: &[i64]) -> SymGram {
    let mut rows = vec![vec![0i64; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            rows[i][j] = upper[k];
            rows[j][i] = upper[k];
            k += 1;
        }
    }
    SymGram::new(IntMatrix::from_rows(&rows).expect("square")).expect("symmetric")
}

/// Positive-definite form with entries in `[-b, b]` and optionally `det ≤ max_det`.
pub fn random_pd<R: Rng>(rng: &mut R, n: usize, b: i64, max_det: Option<u64>) -> SymGram {
    loop {
        let upper: Vec<i64> = (0..n * (n + 1) / 2).map(|_| rng.gen_range(-b..=b)).collect();
        let g = sym(n, &upper);
        if is_positive_definite(&g) && max_det.is_none_or(|m| g.determinant() <= BigInt::from(m)) {
            return g;
        }
    }
}

/// Nondegenerate form with entries in `[-b, b]` and `0 < |det| ≤ max_det`;
/// with `even`, diagonal entries are drawn even.
pub fn random_nondegenerate<R: Rng>(rng: &mut R, n: usize, b: i64, max_det: u64, even: bool) -> SymGram {
    loop {
        let mut upper = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                let x = rng.gen_range(-b..=b);
                upper.push(if even && i == j { 2 * (x / 2) } else { x });
            }
        }
        let g = sym(n, &upper);
        let d = g.determinant().abs();
        if !d.is_zero() && d <= BigInt::from(max_det) {
            return g;
        }
    }
}

pub struct Outcome {
    pub label: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

/// Runs `check`, which returns `(passed, detail)`, and fails it if it takes
/// longer than `limit`.
pub fn criterion(label: &str, limit: Option<Duration>, check: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (mut passed, mut detail) = check();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; runtime {:.1}s over the {:.0}s limit", elapsed.as_secs_f64(), limit.as_secs_f64());
        }
    }
    Outcome { label: label.to_string(), passed, detail, elapsed }
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{}: {} ({:.2}s) {}",
            self.label,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

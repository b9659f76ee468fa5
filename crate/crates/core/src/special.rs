//! Complex dilogarithm on the closed unit disk.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64 as Complex;

const BERNOULLI_TERMS: usize = 32;

/// `B_n / (n+1)!` for `n = 0..BERNOULLI_TERMS`, from the standard recurrence
/// `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
fn bernoulli_coeffs() -> &'static [f64; BERNOULLI_TERMS] {
    static CELL: OnceLock<[f64; BERNOULLI_TERMS]> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut b = [0.0f64; BERNOULLI_TERMS];
        b[0] = 1.0;
        for m in 1..BERNOULLI_TERMS {
            let mut binom = 1.0; // C(m+1, 0)
            let mut acc = 0.0;
            for (k, bk) in b.iter().enumerate().take(m) {
                acc += binom * bk;
                binom *= (m + 1 - k) as f64 / (k + 1) as f64;
            }
            b[m] = -acc / (m + 1) as f64;
        }
        let mut out = [0.0f64; BERNOULLI_TERMS];
        let mut fact = 1.0;
        for n in 0..BERNOULLI_TERMS {
            fact *= (n + 1) as f64;
            out[n] = b[n] / fact;
        }
        out
    })
}

fn li2_series(z: Complex) -> Complex {
    let mut sum = Complex::new(0.0, 0.0);
    let mut power = z;
    for k in 1..200 {
        let term = power / (k * k) as f64;
        sum += term;
        if term.norm() < 1e-18 * sum.norm().max(1e-300) {
            break;
        }
        power *= z;
    }
    sum
}

/// `Li₂(z) = sum_{n>=1} z^n / n^2`, principal branch, for `|z| <= 1`.
///
/// Uses the defining series near the origin, the reflection
/// `Li₂(z) = π²/6 − ln z · ln(1−z) − Li₂(1−z)` near `z = 1`, and the
/// Bernoulli expansion in `u = −ln(1−z)` elsewhere.
pub fn dilog(z: Complex) -> Complex {
    let one = Complex::new(1.0, 0.0);
    if z.norm() <= 0.5 {
        return li2_series(z);
    }
    let w = one - z;
    if w.norm() == 0.0 {
        return Complex::new(PI * PI / 6.0, 0.0);
    }
    if w.norm() <= 0.5 {
        return Complex::new(PI * PI / 6.0, 0.0) - z.ln() * w.ln() - li2_series(w);
    }
    let u = -w.ln();
    let coeffs = bernoulli_coeffs();
    let mut sum = Complex::new(0.0, 0.0);
    let mut power = u;
    for (n, c) in coeffs.iter().enumerate() {
        // odd Bernoulli numbers past B_1 vanish
        if n < 2 || n % 2 == 0 {
            sum += power * *c;
        }
        power *= u;
    }
    sum
}

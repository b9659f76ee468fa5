//! Truncated Taylor series about the origin with complex coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `z^0 .. z^{N-1}`;
//! every operation returns a series of the same order, discarding terms of
//! degree `N` and higher. Orders in this crate are small (64 or 128), so the
//! recurrences below are the plain quadratic/cubic convolution forms.

use num_complex::Complex64 as Complex;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default truncation order used across the toolkit.
pub const DEFAULT_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite("series coefficients"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex::new(c, 0.0)).collect())
    }

    /// Builds a series whose `n`-th coefficient is `f(n)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex) -> Result<Self> {
        Self::new((0..order).map(f).collect())
    }

    pub fn zero(order: usize) -> Result<Self> {
        Self::new(vec![Complex::new(0.0, 0.0); order])
    }

    pub fn one(order: usize) -> Result<Self> {
        Self::monomial(0, order)
    }

    /// The series of `z` itself.
    pub fn identity(order: usize) -> Result<Self> {
        Self::monomial(1, order)
    }

    /// `z^k` truncated to `order` (zero if `k >= order`).
    pub fn monomial(k: usize, order: usize) -> Result<Self> {
        let mut s = Self::zero(order)?;
        if k < order {
            s.coeffs[k] = Complex::new(1.0, 0.0);
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Coefficient of `z^n`, zero beyond the truncation.
    pub fn coeff(&self, n: usize) -> Complex {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// Keeps the first `order` coefficients, padding with zeros if needed.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        Self::from_fn(order, |n| self.coeff(n))
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: Complex) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let n = self.order();
        let mut out = vec![Complex::new(0.0, 0.0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == Complex::new(0.0, 0.0) {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == Complex::new(0.0, 0.0) {
            return Err(Error::ZeroConstantTerm("recip"));
        }
        let n = self.order();
        let inv0 = a0.inv();
        let mut b = vec![Complex::new(0.0, 0.0); n];
        b[0] = inv0;
        for k in 1..n {
            let mut acc = Complex::new(0.0, 0.0);
            for j in 1..=k {
                acc += self.coeffs[j] * b[k - j];
            }
            b[k] = -acc * inv0;
        }
        Self::new(b)
    }

    /// `exp(a)` for a series with zero constant term, via
    /// `n b_n = sum_{k=1}^n k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0] != Complex::new(0.0, 0.0) {
            return Err(Error::NonzeroConstantTerm("exp"));
        }
        let n = self.order();
        let mut b = vec![Complex::new(0.0, 0.0); n];
        b[0] = Complex::new(1.0, 0.0);
        for m in 1..n {
            let mut acc = Complex::new(0.0, 0.0);
            for k in 1..=m {
                acc += self.coeffs[k] * b[m - k] * k as f64;
            }
            b[m] = acc / m as f64;
        }
        Self::new(b)
    }

    /// Principal logarithm of a series with nonzero constant term.
    pub fn ln(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == Complex::new(0.0, 0.0) {
            return Err(Error::ZeroConstantTerm("ln"));
        }
        let a = self.scale(a0.inv());
        let n = self.order();
        let mut l = vec![Complex::new(0.0, 0.0); n];
        l[0] = a0.ln();
        for m in 1..n {
            let mut acc = Complex::new(0.0, 0.0);
            for k in 1..m {
                acc += l[k] * a.coeffs[m - k] * k as f64;
            }
            l[m] = a.coeffs[m] - acc / m as f64;
        }
        Self::new(l)
    }

    /// Termwise `∫_0^z a(t)/t dt`: coefficient `n` becomes `a_n / n`.
    pub fn integrate_quotient(&self) -> Result<Self> {
        if self.coeffs[0] != Complex::new(0.0, 0.0) {
            return Err(Error::NonzeroConstantTerm("integrate_quotient"));
        }
        Self::from_fn(self.order(), |n| {
            if n == 0 {
                Complex::new(0.0, 0.0)
            } else {
                self.coeffs[n] / n as f64
            }
        })
    }

    /// `z a'(z)`, the inverse of [`integrate_quotient`](Self::integrate_quotient)
    /// on series with zero constant term.
    pub fn differentiate_quotient(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c * n as f64).collect(),
        }
    }

    /// `a'(z)`; the result has order one less (at least 1).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 1 {
            return Self { coeffs: vec![Complex::new(0.0, 0.0)] };
        }
        Self {
            coeffs: (1..n).map(|k| self.coeffs[k] * k as f64).collect(),
        }
    }

    /// `z a(z)` truncated to the same order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order());
        coeffs.push(Complex::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs[..self.order() - 1]);
        Self { coeffs }
    }

    /// `outer(inner(z))`; `inner` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_orders(inner)?;
        if inner.coeffs[0] != Complex::new(0.0, 0.0) {
            return Err(Error::NonzeroConstantTerm("compose (inner)"));
        }
        let n = self.order();
        let mut acc = Self::zero(n)?;
        acc.coeffs[0] = self.coeffs[n - 1];
        for k in (0..n - 1).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex) -> Complex {
        self.coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// `sum_{n>=1} |a_n| r^n` over the truncation.
    pub fn majorant_sum(&self, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::RadiusOutOfRange { value: r, range: "[0, 1)" });
        }
        let mut power = 1.0;
        let mut sum = 0.0;
        for c in &self.coeffs[1..] {
            power *= r;
            sum += c.norm() * power;
        }
        Ok(sum)
    }

    /// Largest `|Im a_n|`, used to confirm real coefficients.
    pub fn max_imag_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    fn close(a: &PowerSeries, b: &[f64], tol: f64) {
        assert_eq!(a.order(), b.len());
        for (x, y) in a.coeffs().iter().zip(b) {
            assert!((x - c(*y)).norm() <= tol, "{x} vs {y}");
        }
    }

    #[test]
    fn difference_of_squares() {
        let p = PowerSeries::from_real(&[1.0, 1.0, 0.0, 0.0]).unwrap();
        let m = PowerSeries::from_real(&[1.0, -1.0, 0.0, 0.0]).unwrap();
        close(&p.mul(&m).unwrap(), &[1.0, 0.0, -1.0, 0.0], 0.0);
    }

    #[test]
    fn z_times_z() {
        let z = PowerSeries::identity(5).unwrap();
        close(&z.mul(&z).unwrap(), &[0.0, 0.0, 1.0, 0.0, 0.0], 0.0);
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let a = PowerSeries::from_fn(16, |n| if n == 0 { c(0.0) } else { c(1.0 / (n * n) as f64) })
            .unwrap();
        assert_eq!(a.mul(&PowerSeries::one(16).unwrap()).unwrap(), a);
    }

    #[test]
    fn mismatched_orders_rejected() {
        let a = PowerSeries::one(4).unwrap();
        let b = PowerSeries::one(5).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::OrderMismatch(4, 5))));
    }

    #[test]
    fn exp_of_zero_and_z() {
        close(&PowerSeries::zero(4).unwrap().exp().unwrap(), &[1.0, 0.0, 0.0, 0.0], 0.0);
        let e = PowerSeries::identity(5).unwrap().exp().unwrap();
        close(&e, &[1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0], 1e-15);
        assert!(matches!(PowerSeries::one(3).unwrap().exp(), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn exp_of_dilog_matches_partial_sum_products() {
        // exp(L) = sum_k L^k / k!, with L^k formed by repeated truncated products.
        let n = 24;
        let li2 = PowerSeries::from_fn(n, |k| if k == 0 { c(0.0) } else { c(1.0 / (k * k) as f64) })
            .unwrap();
        let mut term = PowerSeries::one(n).unwrap();
        let mut total = PowerSeries::one(n).unwrap();
        for k in 1..n {
            term = term.mul(&li2).unwrap().scale(c(1.0 / k as f64));
            total = total.add(&term).unwrap();
        }
        let e = li2.exp().unwrap();
        for k in 0..n {
            assert!((e.coeff(k) - total.coeff(k)).norm() < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn integrate_quotient_examples() {
        let z = PowerSeries::identity(4).unwrap();
        assert_eq!(z.integrate_quotient().unwrap(), z);
        let z2 = PowerSeries::monomial(2, 4).unwrap();
        close(&z2.integrate_quotient().unwrap(), &[0.0, 0.0, 0.5, 0.0], 0.0);
        // -log(1-z) = sum z^n/n  integrates to Li2 = sum z^n/n^2
        let minus_log = PowerSeries::from_fn(32, |n| if n == 0 { c(0.0) } else { c(1.0 / n as f64) })
            .unwrap();
        let li2 = minus_log.integrate_quotient().unwrap();
        for n in 1..32 {
            assert!((li2.coeff(n) - c(1.0 / (n * n) as f64)).norm() < 1e-16);
        }
        assert!(PowerSeries::one(3).unwrap().integrate_quotient().is_err());
    }

    #[test]
    fn compose_examples() {
        let n = 12;
        let z = PowerSeries::identity(n).unwrap();
        let z2 = PowerSeries::monomial(2, n).unwrap();
        assert_eq!(z.compose(&z2).unwrap(), z2);
        // z/(1-z) composed with z^2: substitute directly into the geometric series.
        let geo = PowerSeries::from_fn(n, |k| if k == 0 { c(0.0) } else { c(1.0) }).unwrap();
        let direct: Vec<f64> = (0..n).map(|k| if k > 0 && k % 2 == 0 { 1.0 } else { 0.0 }).collect();
        close(&geo.compose(&z2).unwrap(), &direct, 1e-15);
        assert!(geo.compose(&PowerSeries::one(n).unwrap()).is_err());
    }

    #[test]
    fn majorant_examples() {
        let z = PowerSeries::identity(8).unwrap();
        assert!((z.majorant_sum(1.0 / 3.0).unwrap() - 1.0 / 3.0).abs() < 1e-16);
        let zz = PowerSeries::from_real(&[0.0, 1.0, 1.0, 0.0]).unwrap();
        assert!((zz.majorant_sum(0.5).unwrap() - 0.75).abs() < 1e-16);
        assert!(z.majorant_sum(1.0).is_err());
        assert!(z.majorant_sum(-0.1).is_err());
    }

    #[test]
    fn exp_of_log_one_minus_z() {
        let n = 64;
        let one_minus_z = PowerSeries::from_real(&{
            let mut v = vec![0.0; n];
            v[0] = 1.0;
            v[1] = -1.0;
            v
        })
        .unwrap();
        let back = one_minus_z.ln().unwrap().exp().unwrap();
        for k in 0..n {
            assert!((back.coeff(k) - one_minus_z.coeff(k)).norm() < 1e-12);
        }
    }

    #[test]
    fn recip_of_geometric() {
        let n = 10;
        let geo = PowerSeries::from_fn(n, |_| c(1.0)).unwrap();
        let mut expect = vec![0.0; n];
        expect[0] = 1.0;
        expect[1] = -1.0;
        close(&geo.recip().unwrap(), &expect, 1e-15);
    }

    #[test]
    fn derivative_and_shift() {
        let s = PowerSeries::from_real(&[1.0, 2.0, 3.0]).unwrap();
        close(&s.derivative(), &[2.0, 6.0], 0.0);
        close(&s.shift_up(), &[0.0, 1.0, 2.0], 0.0);
    }
}

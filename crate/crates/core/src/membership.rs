//! Members of `F(ψ)` built from Schwarz functions, and numeric checks of the
//! growth, Bohr and subordination theorems against them.
//!
//! For a Schwarz function ω the series `f(z) = z exp(∫_0^z ψ(ω(t))/t dt)`
//! satisfies `z f'/f − 1 = ψ∘ω ≺ ψ`, so `f ∈ F(ψ)`.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{GeneratorSpec, DEFAULT_GRID};
use crate::growth::growth_interval;
use crate::radii::bohr_radius_booth;
use crate::series::PowerSeries;
use crate::winding::SampledBoundary;
use crate::{THREE_MINUS_TWO_SQRT2, TWO_MINUS_SQRT3};

pub const DEFAULT_SEED: u64 = 7;
/// Order of sample series; the half-order truncation sets the allowance.
pub const DEFAULT_SAMPLE_ORDER: usize = 128;
/// Largest radius at which truncated samples are evaluated.
pub const MAX_SAMPLE_RADIUS: f64 = 0.95;
pub const GROWTH_EPS: f64 = 1e-8;
pub const BOHR_SLACK: f64 = 1e-10;
/// Radii at which `f(z)/z` is compared with the dominant.
pub const SUBORDINATION_RADII: [f64; 4] = [0.25, 0.5, 0.75, 0.9];
const SCHWARZ_SLACK: f64 = 1e-12;

/// A Schwarz function: analytic self-map of the disk fixing 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SchwarzSpec {
    /// `z^k`.
    Monomial { k: u32 },
    /// `z (z + a)/(1 + conj(a) z)`, `|a| < 1`.
    MoebiusTwist { a: Complex },
    /// `Σ c_j z^j` with `c_0 = 0` and grid-certified `|ω| ≤ 1` on the circle.
    ScaledPoly { coeffs: Vec<Complex> },
}

impl SchwarzSpec {
    pub fn identity() -> Self {
        Self::Monomial { k: 1 }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Monomial { k } if *k == 0 => {
                return Err(Error::InvalidWitness("monomial degree must be at least 1".into()))
            }
            Self::MoebiusTwist { a } if !(a.norm() < 1.0) => {
                return Err(Error::InvalidWitness(format!("twist parameter {a} must satisfy |a| < 1")))
            }
            Self::ScaledPoly { coeffs } => {
                if coeffs.len() < 2 || coeffs[0] != Complex::new(0.0, 0.0) {
                    return Err(Error::InvalidWitness("polynomial witness must vanish at 0".into()));
                }
                if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
                    return Err(Error::InvalidWitness("polynomial witness has non-finite coefficients".into()));
                }
            }
            _ => {}
        }
        let sup = self.boundary_sup(DEFAULT_GRID);
        if sup > 1.0 + SCHWARZ_SLACK {
            return Err(Error::InvalidWitness(format!("sup of |w| on the circle is {sup}, above 1")));
        }
        Ok(())
    }

    /// `max |ω|` over `grid` points of the unit circle.
    pub fn boundary_sup(&self, grid: usize) -> f64 {
        (0..grid)
            .map(|k| self.eval(Complex::from_polar(1.0, 2.0 * PI * k as f64 / grid as f64)).norm())
            .fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex) -> Complex {
        match self {
            Self::Monomial { k } => z.powu(*k),
            Self::MoebiusTwist { a } => z * (z + a) / (Complex::new(1.0, 0.0) + a.conj() * z),
            Self::ScaledPoly { coeffs } => coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c),
        }
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        match self {
            Self::Monomial { k } => PowerSeries::monomial(*k as usize, order),
            Self::MoebiusTwist { a } => {
                // (z² + a z) Σ (−conj(a) z)^n
                let geo = PowerSeries::from_fn(order, |n| (-a.conj()).powu(n as u32))?;
                let mut num = vec![Complex::new(0.0, 0.0); order];
                if order > 1 {
                    num[1] = *a;
                }
                if order > 2 {
                    num[2] = Complex::new(1.0, 0.0);
                }
                PowerSeries::new(num)?.mul(&geo)
            }
            Self::ScaledPoly { coeffs } => {
                PowerSeries::from_fn(order, |n| coeffs.get(n).copied().unwrap_or(Complex::new(0.0, 0.0)))
            }
        }
    }
}

/// Random Schwarz functions from a seeded ChaCha8 stream: monomials, twists,
/// rotated monomials and polynomials scaled to a boundary sup in `[0.5, 0.999]`.
pub fn random_witnesses(seed: u64, count: usize) -> Vec<SchwarzSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_witness(&mut rng)).collect()
}

fn random_witness(rng: &mut ChaCha8Rng) -> SchwarzSpec {
    match rng.gen_range(0..4) {
        0 => SchwarzSpec::Monomial { k: rng.gen_range(1..=4) },
        1 => SchwarzSpec::MoebiusTwist { a: Complex::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..2.0 * PI)) },
        2 => {
            let k = rng.gen_range(1..=4);
            let mut coeffs = vec![Complex::new(0.0, 0.0); k + 1];
            coeffs[k] = Complex::from_polar(1.0, rng.gen_range(0.0..2.0 * PI));
            SchwarzSpec::ScaledPoly { coeffs }
        }
        _ => {
            let degree = rng.gen_range(1..=5);
            let mut coeffs = vec![Complex::new(0.0, 0.0)];
            for _ in 0..degree {
                coeffs.push(Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            }
            let raw = SchwarzSpec::ScaledPoly { coeffs: coeffs.clone() };
            let sup = raw.boundary_sup(DEFAULT_GRID).max(1e-12);
            let target = rng.gen_range(0.5..0.999);
            for c in coeffs.iter_mut() {
                *c *= target / sup;
            }
            SchwarzSpec::ScaledPoly { coeffs }
        }
    }
}

/// `f(z) = z exp(∫_0^z ψ(ω(t))/t dt)` as a truncated series.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipSample {
    pub spec: GeneratorSpec,
    pub witness: SchwarzSpec,
    pub f: PowerSeries,
}

impl MembershipSample {
    pub fn new(spec: GeneratorSpec, witness: SchwarzSpec, order: usize) -> Result<Self> {
        spec.validate()?;
        witness.validate()?;
        if order < 4 {
            return Err(Error::InvalidConfig("sample order must be at least 4".into()));
        }
        let phi = spec.series(order)?.compose(&witness.series(order)?)?;
        let f = phi.integrate_quotient()?.exp()?.shift_up();
        Ok(Self { spec, witness, f })
    }

    /// The extremal function `f₀`, from the identity witness.
    pub fn extremal(spec: GeneratorSpec, order: usize) -> Result<Self> {
        Self::new(spec, SchwarzSpec::identity(), order)
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    /// `z exp(L(z^k)/k)` for monomial witnesses of families with a closed `L`.
    pub fn closed_form(&self, z: Complex) -> Option<Complex> {
        match self.witness {
            SchwarzSpec::Monomial { k } => {
                let l = self.spec.log_extremal_quotient(z.powu(k))?;
                Some(z * (l / k as f64).exp())
            }
            _ => None,
        }
    }

    pub fn eval(&self, z: Complex) -> Complex {
        self.f.eval(z)
    }

    /// `|f(z) − f_{n/2}(z)|`: the change from dropping the upper half of
    /// the series, used as the truncation allowance.
    pub fn truncation_allowance(&self, z: Complex) -> Result<f64> {
        let half = self.f.truncate(self.order() / 2)?;
        Ok((self.f.eval(z) - half.eval(z)).norm())
    }

    /// `z f'(z)/f(z) − 1` from the series.
    pub fn starlike_quotient(&self, z: Complex) -> Complex {
        z * self.f.derivative().eval(z) / self.f.eval(z) - 1.0
    }

    /// Number of points `z = 0.8 e^{iθ}` (of `points`) where `z f'/f − 1`
    /// falls outside `ψ(Δ)` by the winding test.
    pub fn region_exterior_count(&self, points: usize) -> Result<usize> {
        let region = self.spec.boundary(DEFAULT_GRID);
        let mut outside = 0;
        for k in 0..points {
            let z = Complex::from_polar(0.8, 2.0 * PI * k as f64 / points as f64);
            if !region.contains(1.0 + self.starlike_quotient(z))? {
                outside += 1;
            }
        }
        Ok(outside)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthViolation {
    pub r: f64,
    pub theta: f64,
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusSummary {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    pub min_abs: f64,
    pub max_abs: f64,
    pub max_allowance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub radii: Vec<RadiusSummary>,
    pub violations: Vec<GrowthViolation>,
}

impl GrowthReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `lower(r) − ε ≤ |f(re^{iθ})| ≤ upper(r) + ε` on a `grid`-point
/// circle for each radius, `ε = 1e-8 + truncation allowance`.
pub fn verify_growth(sample: &MembershipSample, radii: &[f64], grid: usize) -> Result<GrowthReport> {
    if let Some(&r) = radii.iter().find(|&&r| !(r > 0.0 && r <= MAX_SAMPLE_RADIUS)) {
        return Err(Error::RadiusOutOfRange { value: r, range: "(0, 0.95]" });
    }
    let half = sample.f.truncate(sample.order() / 2)?;
    let mut summaries = Vec::with_capacity(radii.len());
    let mut violations = Vec::new();
    for &r in radii {
        let g = growth_interval(&sample.spec, r)?;
        let mut s = RadiusSummary {
            r,
            lower: g.lower,
            upper: g.upper,
            min_abs: f64::INFINITY,
            max_abs: 0.0,
            max_allowance: 0.0,
        };
        for k in 0..grid {
            let theta = 2.0 * PI * k as f64 / grid as f64;
            let z = Complex::from_polar(r, theta);
            let v = sample.f.eval(z);
            let allowance = (v - half.eval(z)).norm();
            let m = v.norm();
            s.min_abs = s.min_abs.min(m);
            s.max_abs = s.max_abs.max(m);
            s.max_allowance = s.max_allowance.max(allowance);
            let eps = GROWTH_EPS + allowance;
            if m < g.lower - eps || m > g.upper + eps {
                violations.push(GrowthViolation { r, theta, value: m, lower: g.lower, upper: g.upper });
            }
        }
        summaries.push(s);
    }
    Ok(GrowthReport { radii: summaries, violations })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BohrReport {
    pub alpha: f64,
    pub r: f64,
    pub g_majorant: f64,
    pub f_majorant: f64,
    pub extremal_value: f64,
    pub koebe_radius: f64,
    /// `majorant(f) − majorant(g)`.
    pub slack_subordinate: f64,
    /// `f̂(r) − majorant(f)`.
    pub slack_extremal: f64,
    /// `−f̂(−1) − f̂(r)`, only checked when `r ≤ r(α)`.
    pub slack_covering: Option<f64>,
}

impl BohrReport {
    pub fn passed(&self) -> bool {
        self.slack_subordinate >= -BOHR_SLACK
            && self.slack_extremal >= -BOHR_SLACK
            && self.slack_covering.map_or(true, |s| s >= -BOHR_SLACK)
    }
}

/// The chain `Σ|b_k|r^k ≤ Σ|a_n|r^n ≤ f̂(r) ≤ −f̂(−1)` for `g = f∘ω`.
pub fn verify_bohr_pair(f: &MembershipSample, sub: &SchwarzSpec, r: f64) -> Result<BohrReport> {
    let GeneratorSpec::Booth { alpha } = f.spec else {
        return Err(Error::Hypothesis(format!("bohr chain is stated for booth, not {}", f.spec.family_name())));
    };
    if !(r > 0.0 && r <= 1.0 / 3.0) {
        return Err(Error::Hypothesis(format!("majorant comparison needs 0 < r <= 1/3, got {r}")));
    }
    let bohr = bohr_radius_booth(alpha)?;
    sub.validate()?;
    let g = f.f.compose(&sub.series(f.order())?)?;
    let g_majorant = g.majorant_sum(r)?;
    let f_majorant = f.f.majorant_sum(r)?;
    let extremal_value = f.spec.extremal_value(Complex::new(r, 0.0))?.re;
    let koebe_radius = -f.spec.extremal_value(Complex::new(-1.0, 0.0))?.re;
    let slack_covering = (r <= bohr.result.value).then_some(koebe_radius - extremal_value);
    Ok(BohrReport {
        alpha,
        r,
        g_majorant,
        f_majorant,
        extremal_value,
        koebe_radius,
        slack_subordinate: f_majorant - g_majorant,
        slack_extremal: extremal_value - f_majorant,
        slack_covering,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubordinationStatus {
    /// Numeric check of a proven statement.
    Verified,
    /// Numeric evidence only; the statement is not proven for this family.
    Experimental,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubordinationReport {
    pub status: SubordinationStatus,
    pub points: usize,
    /// `(ρ, θ)` of sampled `f(z)/z` values outside the dominant's image.
    pub exterior: Vec<(f64, f64)>,
}

impl SubordinationReport {
    pub fn passed(&self) -> bool {
        self.exterior.is_empty()
    }
}

/// Checks that `f(ρe^{iθ})/(ρe^{iθ})` lies in `D(Δ)`, `D = f₀/z`, for
/// `ρ ∈ {0.25, 0.5, 0.75, 0.9}` and `grid` angles each.
pub fn verify_fz_subordination(sample: &MembershipSample, grid: usize) -> Result<SubordinationReport> {
    let status = match sample.spec {
        GeneratorSpec::ModKoebe { eta, .. } if eta <= TWO_MINUS_SQRT3 => SubordinationStatus::Verified,
        GeneratorSpec::ModKoebe { .. } => {
            return Err(Error::Hypothesis("f(z)/z subordination needs eta in [0, 2-sqrt(3)]".into()))
        }
        GeneratorSpec::Cissoid { .. } => SubordinationStatus::Experimental,
        other => {
            return Err(Error::Hypothesis(format!(
                "f(z)/z subordination is checked for modkoebe and cissoid, not {}",
                other.family_name()
            )))
        }
    };
    let spec = sample.spec;
    let rho = spec.boundary_rho();
    let region = SampledBoundary::new(
        move |t| {
            spec.log_extremal_quotient(Complex::from_polar(rho, t))
                .map(|l| l.exp())
                .unwrap_or(Complex::new(f64::NAN, f64::NAN))
        },
        DEFAULT_GRID,
    );
    let mut exterior = Vec::new();
    let mut points = 0;
    for &r in &SUBORDINATION_RADII {
        for k in 0..grid {
            let theta = 2.0 * PI * k as f64 / grid as f64;
            let z = Complex::from_polar(r, theta);
            points += 1;
            if !region.contains(sample.f.eval(z) / z)? {
                exterior.push((r, theta));
            }
        }
    }
    Ok(SubordinationReport { status, points, exterior })
}

/// A suite result for one randomized sample.
#[derive(Debug, Clone, Serialize)]
pub struct SampleOutcome<R> {
    pub index: usize,
    pub witness: SchwarzSpec,
    pub report: R,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport<R> {
    pub property: &'static str,
    pub seed: u64,
    pub samples: Vec<SampleOutcome<R>>,
}

impl<R> SuiteReport<R> {
    pub fn passed(&self) -> bool {
        self.samples.iter().all(|s| s.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SampleOutcome<R>> {
        self.samples.iter().filter(|s| !s.passed)
    }
}

/// Growth sandwich over `count` random members of the class.
pub fn growth_suite(
    spec: GeneratorSpec,
    count: usize,
    seed: u64,
    radii: &[f64],
    grid: usize,
    order: usize,
) -> Result<SuiteReport<GrowthReport>> {
    let mut samples = Vec::with_capacity(count);
    for (index, witness) in random_witnesses(seed, count).into_iter().enumerate() {
        let sample = MembershipSample::new(spec, witness.clone(), order)?;
        let report = verify_growth(&sample, radii, grid)?;
        let passed = report.passed();
        samples.push(SampleOutcome { index, witness, report, passed });
    }
    Ok(SuiteReport { property: "growth", seed, samples })
}

/// Bohr chain for `g = f̂∘ω` over `count` random `ω`, at `r = r(α)`.
pub fn bohr_suite(alpha: f64, count: usize, seed: u64, order: usize) -> Result<SuiteReport<BohrReport>> {
    if !(alpha > 0.0 && alpha <= THREE_MINUS_TWO_SQRT2) {
        return Err(Error::Hypothesis("bohr radius needs alpha in (0, 3-2sqrt(2)]".into()));
    }
    let r = bohr_radius_booth(alpha)?.result.value;
    let fhat = MembershipSample::extremal(GeneratorSpec::booth(alpha)?, order)?;
    let mut samples = Vec::with_capacity(count);
    for (index, witness) in random_witnesses(seed, count).into_iter().enumerate() {
        let report = verify_bohr_pair(&fhat, &witness, r)?;
        let passed = report.passed();
        samples.push(SampleOutcome { index, witness, report, passed });
    }
    Ok(SuiteReport { property: "bohr", seed, samples })
}

/// `f(z)/z ≺ f₀(z)/z` over `count` random members.
pub fn subordination_suite(
    spec: GeneratorSpec,
    count: usize,
    seed: u64,
    grid: usize,
    order: usize,
) -> Result<SuiteReport<SubordinationReport>> {
    let mut samples = Vec::with_capacity(count);
    for (index, witness) in random_witnesses(seed, count).into_iter().enumerate() {
        let sample = MembershipSample::new(spec, witness.clone(), order)?;
        let report = verify_fz_subordination(&sample, grid)?;
        let passed = report.passed();
        samples.push(SampleOutcome { index, witness, report, passed });
    }
    Ok(SuiteReport { property: "subordination", seed, samples })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn witnesses_are_schwarz() {
        for w in random_witnesses(DEFAULT_SEED, 200) {
            w.validate().unwrap();
            assert_eq!(w.eval(c(0.0)), c(0.0));
        }
        assert!(SchwarzSpec::ScaledPoly { coeffs: vec![c(0.0), c(1.1)] }.validate().is_err());
        assert!(SchwarzSpec::MoebiusTwist { a: c(1.0) }.validate().is_err());
        assert!(SchwarzSpec::Monomial { k: 0 }.validate().is_err());
    }

    #[test]
    fn witness_series_match_values() {
        let ws = [
            SchwarzSpec::Monomial { k: 3 },
            SchwarzSpec::MoebiusTwist { a: Complex::new(0.3, -0.4) },
            SchwarzSpec::ScaledPoly { coeffs: vec![c(0.0), c(0.5), Complex::new(0.0, 0.3)] },
        ];
        let z = Complex::new(0.3, 0.4);
        for w in ws {
            assert!((w.series(64).unwrap().eval(z) - w.eval(z)).norm() < 1e-14, "{w:?}");
        }
    }

    #[test]
    fn seeds_reproduce() {
        assert_eq!(random_witnesses(3, 20), random_witnesses(3, 20));
        assert_ne!(random_witnesses(3, 20), random_witnesses(4, 20));
    }

    #[test]
    fn identity_witness_gives_extremal() {
        let spec = GeneratorSpec::Booth { alpha: 0.25 };
        let s = MembershipSample::extremal(spec, 64).unwrap();
        let z = Complex::new(0.2, -0.3);
        assert!((s.eval(z) - spec.extremal_value(z).unwrap()).norm() < 1e-14);
        assert_eq!(s.f.coeff(0), c(0.0));
        assert_eq!(s.f.coeff(1), c(1.0));
    }

    #[test]
    fn linear_square_witness() {
        let s = MembershipSample::new(GeneratorSpec::Linear { eta: 1.0 }, SchwarzSpec::Monomial { k: 2 }, 64).unwrap();
        let z = Complex::new(0.5, 0.2);
        assert!((s.eval(z) - z * (z * z / 2.0).exp()).norm() < 1e-14);
        assert!((s.closed_form(z).unwrap() - s.eval(z)).norm() < 1e-14);
    }

    #[test]
    fn booth_square_witness_against_convolution_oracle() {
        // ψ(t²)/t = Σ α^j t^{4j+1}, so ∫ψ(t²)/t = Σ α^j z^{4j+2}/(4j+2);
        // exponentiate term by term with the naive recurrence n e_n = Σ k l_k e_{n-k}
        let alpha: f64 = 0.25;
        let n = 40;
        let mut l = vec![0.0; n];
        let mut j = 0;
        while 4 * j + 2 < n {
            l[4 * j + 2] = alpha.powi(j as i32) / (4 * j + 2) as f64;
            j += 1;
        }
        let mut e = vec![0.0; n];
        e[0] = 1.0;
        for m in 1..n {
            let s: f64 = (1..=m).map(|k| k as f64 * l[k] * e[m - k]).sum();
            e[m] = s / m as f64;
        }
        let s = MembershipSample::new(GeneratorSpec::Booth { alpha }, SchwarzSpec::Monomial { k: 2 }, n).unwrap();
        for m in 1..n {
            assert!((s.f.coeff(m) - c(e[m - 1])).norm() < 1e-15, "coefficient {m}");
        }
    }

    #[test]
    fn construction_reproduces_psi_of_omega() {
        let spec = GeneratorSpec::Cissoid { beta: 0.5 };
        for w in random_witnesses(1, 10) {
            let s = MembershipSample::new(spec, w.clone(), 128).unwrap();
            for k in 0..32 {
                let z = Complex::from_polar(0.6, 2.0 * PI * k as f64 / 32.0);
                let expect = spec.eval(w.eval(z)).unwrap();
                assert!((s.starlike_quotient(z) - expect).norm() < 1e-8, "{w:?}");
            }
        }
    }

    #[test]
    fn quotient_stays_in_region() {
        let spec = GeneratorSpec::Booth { alpha: 0.3 };
        for w in random_witnesses(2, 4) {
            let s = MembershipSample::new(spec, w, 128).unwrap();
            assert_eq!(s.region_exterior_count(256).unwrap(), 0);
        }
    }

    #[test]
    fn extremal_touches_growth_bounds() {
        let s = MembershipSample::extremal(GeneratorSpec::Booth { alpha: 0.25 }, 128).unwrap();
        let report = verify_growth(&s, &[0.5], 256).unwrap();
        assert!(report.passed());
        let r = &report.radii[0];
        assert!((r.max_abs - r.upper).abs() < 1e-8);
        assert!((r.min_abs - r.lower).abs() < 1e-8);
    }

    #[test]
    fn square_witness_strictly_inside() {
        let s = MembershipSample::new(GeneratorSpec::Booth { alpha: 0.25 }, SchwarzSpec::Monomial { k: 2 }, 128).unwrap();
        let r = &verify_growth(&s, &[0.5], 256).unwrap().radii[0];
        assert!(r.max_abs < r.upper - 1e-3 && r.min_abs > r.lower + 1e-3);
    }

    #[test]
    fn growth_rejects_large_radius() {
        let s = MembershipSample::extremal(GeneratorSpec::Booth { alpha: 0.25 }, 64).unwrap();
        assert!(matches!(verify_growth(&s, &[0.999], 64), Err(Error::RadiusOutOfRange { .. })));
    }

    #[test]
    fn bohr_identity_sub_is_equality() {
        let f = MembershipSample::extremal(GeneratorSpec::Booth { alpha: 0.1 }, 64).unwrap();
        let rep = verify_bohr_pair(&f, &SchwarzSpec::identity(), 0.25).unwrap();
        assert!(rep.slack_subordinate.abs() < 1e-15);
        assert!(rep.passed());
    }

    #[test]
    fn bohr_square_sub_at_radius() {
        let r = bohr_radius_booth(0.1).unwrap().result.value;
        let f = MembershipSample::extremal(GeneratorSpec::Booth { alpha: 0.1 }, 64).unwrap();
        let rep = verify_bohr_pair(&f, &SchwarzSpec::Monomial { k: 2 }, r).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert!(rep.slack_covering.unwrap().abs() < 1e-10);
    }

    #[test]
    fn bohr_one_third_exceeds_radius() {
        let spec = GeneratorSpec::Booth { alpha: THREE_MINUS_TWO_SQRT2 };
        let f = MembershipSample::extremal(spec, 64).unwrap();
        let rep = verify_bohr_pair(&f, &SchwarzSpec::identity(), 1.0 / 3.0).unwrap();
        assert!(rep.extremal_value > rep.koebe_radius);
        assert!(rep.slack_covering.is_none());
        assert!(verify_bohr_pair(&f, &SchwarzSpec::identity(), 0.34).is_err());
    }

    #[test]
    fn subordination_examples() {
        let spec = GeneratorSpec::ModKoebe { gamma: 0.5, eta: 0.2 };
        let id = MembershipSample::extremal(spec, 64).unwrap();
        assert!(verify_fz_subordination(&id, 64).unwrap().passed());
        let cube = MembershipSample::new(spec, SchwarzSpec::Monomial { k: 3 }, 64).unwrap();
        let rep = verify_fz_subordination(&cube, 64).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.status, SubordinationStatus::Verified);
        assert_eq!(cube.f.coeff(1), c(1.0));
        let wide = MembershipSample::extremal(GeneratorSpec::ModKoebe { gamma: 0.5, eta: 0.5 }, 64).unwrap();
        assert!(matches!(verify_fz_subordination(&wide, 64), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn cissoid_subordination_is_experimental() {
        let s = MembershipSample::new(GeneratorSpec::Cissoid { beta: 0.5 }, SchwarzSpec::Monomial { k: 2 }, 64).unwrap();
        let rep = verify_fz_subordination(&s, 32).unwrap();
        assert_eq!(rep.status, SubordinationStatus::Experimental);
    }
}

//! Rank-1 Dunkl kernel, Dunkl heat kernel and the A/B/C transform kernels
//! built from them, together with the identity suite relating the three
//! transform versions and the reproducing-kernel checks.
//!
//! Conventions. The reflection multiplicity is `mu >= 0`; positive `mu` is
//! supported in one dimension, `mu == 0` in any dimension (where the Dunkl
//! kernel collapses to `exp(z . w)` with the bilinear pairing, no conjugate).
//! All squares of complex points are bilinear: `z^2 = sum z_i^2`.

use num_complex::Complex64;
use serde_json::json;

use crate::quadrature::{Measure, QuadratureRule, RuleNodes};
use crate::report::{residual, IdentityReport, IdentityStat, ResidualTracker, SampleSpec};
use crate::sampling::{complex_in_box, real_in_box, substream};
use crate::{Error, Result};

/// Hard cap on the number of series terms before reporting divergence.
const MAX_TERMS: usize = 10_000;
/// A term must fall below this fraction of the partial sum ...
const TERM_REL_TOL: f64 = 1e-15;
/// ... and the certified geometric tail below this fraction, before stopping.
const TAIL_REL_TOL: f64 = 1e-14;

/// Non-negative reflection multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Multiplicity(f64);

impl Multiplicity {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value >= 0.0 {
            Ok(Multiplicity(value))
        } else {
            Err(Error::NegativeMultiplicity(value))
        }
    }

    pub fn zero() -> Self {
        Multiplicity(0.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

/// Strictly positive time (variance) parameter of the heat kernels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Time(f64);

impl Time {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Time(value))
        } else {
            Err(Error::NonPositiveTime(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The doubled parameter; positivity is preserved, so this cannot fail.
    pub fn doubled(self) -> Time {
        Time(2.0 * self.0)
    }

    /// The halved parameter.
    pub fn halved(self) -> Time {
        Time(0.5 * self.0)
    }
}

/// Point of C^N with the bilinear (not Hermitian) pairing.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoint(Vec<Complex64>);

impl ComplexPoint {
    pub fn new(coords: Vec<Complex64>) -> Self {
        debug_assert!(!coords.is_empty(), "points must have dimension >= 1");
        ComplexPoint(coords)
    }

    pub fn scalar(z: Complex64) -> Self {
        ComplexPoint(vec![z])
    }

    pub fn from_real(q: &[f64]) -> Self {
        ComplexPoint(q.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        ComplexPoint(vec![Complex64::new(0.0, 0.0); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    /// Bilinear pairing sum z_i w_i.
    pub fn dot(&self, other: &ComplexPoint) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { left: self.dim(), right: other.dim() });
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// Bilinear square sum z_i^2.
    pub fn bilinear_sq(&self) -> Complex64 {
        self.0.iter().map(|a| a * a).sum()
    }

    /// Coordinate-wise complex conjugate.
    pub fn conjugate(&self) -> ComplexPoint {
        ComplexPoint(self.0.iter().map(|a| a.conj()).collect())
    }

    pub fn scale(&self, s: f64) -> ComplexPoint {
        ComplexPoint(self.0.iter().map(|a| s * a).collect())
    }
}

/// The three transform kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelVersion {
    A,
    B,
    C,
}

impl std::fmt::Display for KernelVersion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KernelVersion::A => write!(f, "A"),
            KernelVersion::B => write!(f, "B"),
            KernelVersion::C => write!(f, "C"),
        }
    }
}

/// Rank-1 Dunkl kernel series in the product `p = z * w`.
///
/// The series is `sum_n p^n / g(n)` where the coefficients obey
/// `g(0) = 1`, `g(n) = g(n-1) * (n + 2 mu)` for odd n and
/// `g(n) = g(n-1) * n` for even n; at `mu = 0` this is `exp(p)`.
/// Truncation is certified: summation stops once the last term is below
/// 1e-15 of the partial sum and a geometric majorant puts the tail below
/// 1e-14 of the partial sum.
///
/// Exposed so cross-checks can compare the series route against the closed
/// form used at `mu = 0`.
pub fn rank1_series(p: Complex64, mu: f64) -> Result<Complex64> {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let p_norm = p.norm();
    for n in 1..=MAX_TERMS {
        let denom = n as f64 + if n % 2 == 1 { 2.0 * mu } else { 0.0 };
        term *= p / denom;
        sum += term;
        // Every later ratio is at most |p| / (n + 1) because the denominators
        // increase, so the tail is geometrically dominated once that is < 1.
        let ratio = p_norm / (n as f64 + 1.0);
        if ratio < 1.0 && term.norm() <= TERM_REL_TOL * sum.norm() {
            let tail = term.norm() * ratio / (1.0 - ratio);
            if tail <= TAIL_REL_TOL * sum.norm() {
                return Ok(sum);
            }
        }
    }
    Err(Error::SeriesDivergence { max_terms: MAX_TERMS })
}

/// Dunkl kernel E_mu(z, w).
///
/// `mu == 0`: `exp(z . w)` in any dimension. `mu > 0`: the rank-1 series in
/// the product `z * w`; higher dimensions are rejected.
pub fn dunkl_kernel(z: &ComplexPoint, w: &ComplexPoint, mu: Multiplicity) -> Result<Complex64> {
    let p = z.dot(w)?;
    if mu.is_zero() {
        return Ok(p.exp());
    }
    if z.dim() != 1 {
        return Err(Error::RankUnsupported { mu: mu.value(), dim: z.dim() });
    }
    rank1_series(p, mu.value())
}

/// Applies the rank-1 Dunkl operator to `f` at `x` with a central difference:
/// `(f(x+h) - f(x-h)) / 2h + mu (f(x) - f(-x)) / x`.
///
/// The difference term is evaluated exactly; only the derivative is
/// discretized, so the error scales as h^2 for smooth `f`.
pub fn dunkl_operator_apply(
    f: impl Fn(f64) -> f64,
    mu: Multiplicity,
    x: f64,
    h: f64,
) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::ZeroEvaluationPoint);
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::NonPositiveStep(h));
    }
    let derivative = (f(x + h) - f(x - h)) / (2.0 * h);
    let reflection = mu.value() * (f(x) - f(-x)) / x;
    Ok(derivative + reflection)
}

/// Dunkl heat kernel rho_{mu,t}(z, w) = e^{-(z^2 + w^2)/2t} E_mu(z/sqrt t, w/sqrt t).
pub fn heat_kernel_rho(
    z: &ComplexPoint,
    w: &ComplexPoint,
    mu: Multiplicity,
    t: Time,
) -> Result<Complex64> {
    let s = t.value().sqrt().recip();
    let gauss = (-(z.bilinear_sq() + w.bilinear_sq()) / (2.0 * t.value())).exp();
    Ok(gauss * dunkl_kernel(&z.scale(s), &w.scale(s), mu)?)
}

/// Ground-state Gaussian sigma_t(q) = e^{-q^2/2t} for real q.
pub fn sigma(q: &[f64], t: Time) -> f64 {
    let q2: f64 = q.iter().map(|&x| x * x).sum();
    (-q2 / (2.0 * t.value())).exp()
}

/// Transform kernel of the requested version at complex `z` and real `q`.
///
/// * `A(z, q) = e^{-z^2/2t - q^2/4t} E_mu(z/sqrt t, q/sqrt t)`
/// * `B(z, q) = rho_t(z, q) / rho_t(0, q)` (computed literally as a quotient)
/// * `C(z, q) = rho_t(z, q)`
pub fn kernel(
    version: KernelVersion,
    z: &ComplexPoint,
    q: &[f64],
    mu: Multiplicity,
    t: Time,
) -> Result<Complex64> {
    if z.dim() != q.len() {
        return Err(Error::DimensionMismatch { left: z.dim(), right: q.len() });
    }
    let qp = ComplexPoint::from_real(q);
    match version {
        KernelVersion::A => {
            let s = t.value().sqrt().recip();
            let q2: f64 = q.iter().map(|&x| x * x).sum();
            let gauss = (-z.bilinear_sq() / (2.0 * t.value())
                - Complex64::new(q2 / (4.0 * t.value()), 0.0))
            .exp();
            Ok(gauss * dunkl_kernel(&z.scale(s), &qp.scale(s), mu)?)
        }
        KernelVersion::B => {
            let num = heat_kernel_rho(z, &qp, mu, t)?;
            let den = heat_kernel_rho(&ComplexPoint::zero(z.dim()), &qp, mu, t)?;
            Ok(num / den)
        }
        KernelVersion::C => heat_kernel_rho(z, &qp, mu, t),
    }
}

fn complex_json(z: Complex64) -> serde_json::Value {
    json!([z.re, z.im])
}

fn point_json(z: &ComplexPoint) -> serde_json::Value {
    serde_json::Value::Array(z.coords().iter().map(|&c| complex_json(c)).collect())
}

fn res(lhs: Complex64, rhs: Complex64) -> f64 {
    residual((lhs - rhs).norm(), lhs.norm(), rhs.norm())
}

/// Verifies the seven algebraic relations among the A/B/C kernels, the heat
/// kernel and the ground state over a seeded sample sweep.
///
/// For every (mu, t) pair in the plan, `samples` points are drawn from a
/// fixed sub-stream of the seed; each identity records its largest и mean
/// residual `|lhs - rhs| / (1 + max(|lhs|, |rhs|))` and the worst sample.
pub fn verify_coxeter_identities(spec: &SampleSpec) -> Result<IdentityReport> {
    if spec.dim == 0 {
        return Err(Error::DimensionMismatch { left: spec.dim, right: 1 });
    }
    let mus: Vec<Multiplicity> =
        spec.mu_list.iter().map(|&m| Multiplicity::new(m)).collect::<Result<_>>()?;
    let ts: Vec<Time> = spec.t_list.iter().map(|&t| Time::new(t)).collect::<Result<_>>()?;
    for mu in &mus {
        if !mu.is_zero() && spec.dim != 1 {
            return Err(Error::RankUnsupported { mu: mu.value(), dim: spec.dim });
        }
    }

    let mut trackers = [
        ResidualTracker::new("b-from-a", "B(z,q) = A(z,q) / A(0,q)"),
        ResidualTracker::new("c-as-a-product", "C(z,q) = A(0,q) * A(z,q)"),
        ResidualTracker::new("heat-from-a", "sigma_t(q) = rho_t(0,q) = A(0,q)^2"),
        ResidualTracker::new("c-time-split", "C_t(2z,q) = A_{2t}(2z,0) * A_{t/2}(z,q)"),
        ResidualTracker::new("a-from-c", "A(z,q) = C(z,q) / C(0,q)^{1/2}"),
        ResidualTracker::new("b-from-c", "B(z,q) = C(z,q) / C(0,q)"),
        ResidualTracker::new("heat-from-c", "sigma_t(q) = rho_t(0,q) = C(0,q)"),
    ];

    for (i, &mu) in mus.iter().enumerate() {
        for (j, &t) in ts.iter().enumerate() {
            let mut rng = substream(spec.seed, (i as u64) * 64 + j as u64);
            for sample in 0..spec.samples {
                let z = ComplexPoint::new(
                    (0..spec.dim).map(|_| complex_in_box(&mut rng, spec.z_box)).collect(),
                );
                let q: Vec<f64> = (0..spec.dim).map(|_| real_in_box(&mut rng, spec.q_box)).collect();
                let ctx = || format!("mu={}, t={}, sample {}", mu.value(), t.value(), sample);
                check_identities_at(&mut trackers, &z, &q, mu, t).map_err(|e| {
                    Error::SampleEvaluation { context: ctx(), source: Box::new(e) }
                })?;
            }
        }
    }

    Ok(IdentityReport {
        label: "coxeter-kernel-identities".into(),
        entries: trackers.into_iter().map(ResidualTracker::into_stat).collect(),
    })
}

fn check_identities_at(
    trackers: &mut [ResidualTracker; 7],
    z: &ComplexPoint,
    q: &[f64],
    mu: Multiplicity,
    t: Time,
) -> Result<()> {
    let zero = ComplexPoint::zero(z.dim());
    let qp = ComplexPoint::from_real(q);

    let a_zq = kernel(KernelVersion::A, z, q, mu, t)?;
    let a_0q = kernel(KernelVersion::A, &zero, q, mu, t)?;
    let b_zq = kernel(KernelVersion::B, z, q, mu, t)?;
    let c_zq = kernel(KernelVersion::C, z, q, mu, t)?;
    let c_0q = kernel(KernelVersion::C, &zero, q, mu, t)?;
    let rho_0q = heat_kernel_rho(&zero, &qp, mu, t)?;
    let sig = Complex64::new(sigma(q, t), 0.0);

    let point = |identity: &str| {
        let (zj, qj) = (point_json(z), json!(q));
        json!({
            "identity": identity,
            "mu": mu.value(),
            "t": t.value(),
            "z": zj,
            "q": qj,
        })
    };

    trackers[0].record(res(b_zq, a_zq / a_0q), || point("b-from-a"));
    trackers[1].record(res(c_zq, a_0q * a_zq), || point("c-as-a-product"));
    let r_sig = res(sig, rho_0q).max(res(rho_0q, a_0q * a_0q));
    trackers[2].record(r_sig, || point("heat-from-a"));

    // Time-split identity: C_t(2z, q) = A_{2t}(2z, 0) * A_{t/2}(z, q).
    let z2 = z.scale(2.0);
    let c_2z = kernel(KernelVersion::C, &z2, q, mu, t)?;
    let zero_q = vec![0.0; z.dim()];
    let a_double = kernel(KernelVersion::A, &z2, &zero_q, mu, t.doubled())?;
    let a_half = kernel(KernelVersion::A, z, q, mu, t.halved())?;
    trackers[3].record(res(c_2z, a_double * a_half), || point("c-time-split"));

    // C(0,q) is a positive real Gaussian; take the real square root.
    let sqrt_c0 = Complex64::new(c_0q.re.max(0.0).sqrt(), 0.0);
    trackers[4].record(res(a_zq, c_zq / sqrt_c0), || point("a-from-c"));
    trackers[5].record(res(b_zq, c_zq / c_0q), || point("b-from-c"));
    let r_c0 = res(sig, rho_0q).max(res(rho_0q, c_0q));
    trackers[6].record(r_c0, || point("heat-from-c"));
    Ok(())
}

fn expect_omega(rule: &QuadratureRule, mu: Multiplicity, t: Time) -> Result<()> {
    match rule.measure {
        Measure::Omega { mu: rm, t: rt }
            if (rm - mu.value()).abs() <= 1e-12 * (1.0 + mu.value())
                && (rt - t.value()).abs() <= 1e-12 * t.value() =>
        {
            Ok(())
        }
        _ => Err(Error::MeasureMismatch {
            expected: format!("omega(mu={}, t={})", mu.value(), t.value()),
            got: rule.measure.to_string(),
        }),
    }
}

fn real_nodes(rule: &QuadratureRule) -> Result<&[f64]> {
    match &rule.nodes {
        RuleNodes::Real(nodes) => Ok(nodes),
        RuleNodes::Su2(_) => Err(Error::MeasureMismatch {
            expected: "rule with real nodes".into(),
            got: rule.measure.to_string(),
        }),
    }
}

/// Applies the version transform to `psi` at `z` by quadrature:
/// `sum_i w_i K(z, q_i) psi(q_i)`.
///
/// Versions A and C integrate against the omega rule; version B against the
/// m rule (`m_rule`). Passing the wrong rule is an error.
pub fn transform_apply(
    version: KernelVersion,
    psi: &dyn Fn(f64) -> f64,
    z: Complex64,
    mu: Multiplicity,
    t: Time,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    match version {
        KernelVersion::A | KernelVersion::C => expect_omega(rule, mu, t)?,
        KernelVersion::B => match rule.measure {
            Measure::MDensity { mu: rm, t: rt }
                if (rm - mu.value()).abs() <= 1e-12 * (1.0 + mu.value())
                    && (rt - t.value()).abs() <= 1e-12 * t.value() => {}
            _ => {
                return Err(Error::MeasureMismatch {
                    expected: format!("m(mu={}, t={})", mu.value(), t.value()),
                    got: rule.measure.to_string(),
                })
            }
        },
    }
    let nodes = real_nodes(rule)?;
    let zp = ComplexPoint::scalar(z);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&q, &w) in nodes.iter().zip(&rule.weights) {
        acc += w * kernel(version, &zp, &[q], mu, t)? * psi(q);
    }
    Ok(acc)
}

/// Checks the factorization of the C transform through the A transform:
/// applying C to `psi` must agree with applying A to `e^{-q^2/4t} psi`.
pub fn factorization_check(
    psi: &dyn Fn(f64) -> f64,
    z_grid: &[Complex64],
    mu: Multiplicity,
    t: Time,
    rule: &QuadratureRule,
) -> Result<IdentityReport> {
    expect_omega(rule, mu, t)?;
    let mut tracker =
        ResidualTracker::new("factorization", "C_t psi = A_t (e^{-q^2/4t} psi)");
    let quarter = 4.0 * t.value();
    let damped = move |q: f64| (-q * q / quarter).exp() * psi(q);
    for &z in z_grid {
        let lhs = transform_apply(KernelVersion::C, psi, z, mu, t, rule)?;
        let rhs = transform_apply(KernelVersion::A, &damped, z, mu, t, rule)?;
        tracker.record(res(lhs, rhs), || {
            json!({"mu": mu.value(), "t": t.value(), "z": complex_json(z)})
        });
    }
    Ok(IdentityReport {
        label: "c-through-a-factorization".into(),
        entries: vec![tracker.into_stat()],
    })
}

/// Inner product of two kernel sections by quadrature:
/// `sum_i w_i conj(K(z, q_i)) K(w, q_i)`.
///
/// The conjugate sits on the z-side factor, so the diagonal `z == w` is a
/// positive real and `gram_kernel(C, z, w)` reproduces the heat kernel at
/// doubled time: it equals `c * rho_{mu,2t}(conj z, w)` with a constant `c`
/// independent of z and w. Supported for versions A and C.
pub fn gram_kernel(
    version: KernelVersion,
    z: Complex64,
    w: Complex64,
    mu: Multiplicity,
    t: Time,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    if version == KernelVersion::B {
        return Err(Error::UnsupportedVersion("B".into()));
    }
    expect_omega(rule, mu, t)?;
    let nodes = real_nodes(rule)?;
    let zp = ComplexPoint::scalar(z);
    let wp = ComplexPoint::scalar(w);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&q, &wt) in nodes.iter().zip(&rule.weights) {
        let kz = kernel(version, &zp, &[q], mu, t)?;
        let kw = kernel(version, &wp, &[q], mu, t)?;
        acc += wt * kz.conj() * kw;
    }
    Ok(acc)
}

/// Checks the pointwise evaluation bound of the C range space:
/// `|f_w(z)| <= c^{1/2} e^{y^2/2t} ||f_w||` with `y = Im z`, where
/// `f_w = rho_{mu,2t}(conj w, .)` are kernel sections, `||f_w||` is their
/// Gram-consistent norm and `c` is the measured Gram constant.
///
/// The returned entry stores the largest and mean ratio
/// `|f_w(z)| / bound(z, w)`; the check passes when the maximum is <= 1 up to
/// rounding.
pub fn pointwise_bound_check(
    z_grid: &[Complex64],
    w_list: &[Complex64],
    mu: Multiplicity,
    t: Time,
    rule: &QuadratureRule,
) -> Result<IdentityReport> {
    expect_omega(rule, mu, t)?;
    let zero = Complex64::new(0.0, 0.0);
    let c = gram_kernel(KernelVersion::C, zero, zero, mu, t, rule)?.re;
    let t2 = t.doubled();
    let mut tracker = ResidualTracker::new(
        "pointwise-bound",
        "|f_w(z)| / (c^{1/2} e^{y^2/2t} ||f_w||) <= 1",
    );
    for &w in w_list {
        let gram_ww = gram_kernel(KernelVersion::C, w, w, mu, t, rule)?;
        // ||f_w||^2 = L(w,w) / c^2 with L the Gram diagonal.
        let norm_fw = gram_ww.re.max(0.0).sqrt() / c;
        let wc = ComplexPoint::scalar(w.conj());
        for &z in z_grid {
            let f_wz = heat_kernel_rho(&wc, &ComplexPoint::scalar(z), mu, t2)?;
            let y = z.im;
            let bound = c.sqrt() * (y * y / (2.0 * t.value())).exp() * norm_fw;
            tracker.record(f_wz.norm() / bound, || {
                json!({
                    "mu": mu.value(),
                    "t": t.value(),
                    "z": complex_json(z),
                    "w": complex_json(w),
                })
            });
        }
    }
    Ok(IdentityReport {
        label: "pointwise-evaluation-bound".into(),
        entries: vec![tracker.into_stat()],
    })
}

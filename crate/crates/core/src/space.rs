//! Finite-dimensional smooth strictly convex normed spaces.
//!
//! Three families are supported: the Euclidean norm, weighted p-norms
//! `(Σ w_k |α_k|^p)^{1/p}` for `1 < p < ∞` (a discrete `L^p(λ)`), and the
//! gauge of an origin-symmetric planar [`ConvexBody`] whose duality map is
//! solved numerically.
//!
//! A [`DualFunctional`] stores the coefficients of the plain pairing
//! `ρ(y) = Σ_k c_k y_k`; for weighted models the measure weights are folded
//! into those coefficients.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::body::{dot, BodyDescriptor, ConvexBody};
use crate::error::{Error, Result};
use crate::sampling::Sampler;

/// Tolerances used by closed-form and numerically solved paths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub closed_form: f64,
    pub numeric: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            closed_form: 1e-12,
            numeric: 1e-6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![0.0; dim])
    }

    /// The k-th standard basis vector.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = vec![0.0; dim];
        v[k] = 1.0;
        Vector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    pub fn scale(&self, c: f64) -> Vector {
        Vector(self.0.iter().map(|a| c * a).collect())
    }

    pub fn as_point(&self) -> Option<[f64; 2]> {
        match self.0[..] {
            [a, b] => Some([a, b]),
            _ => None,
        }
    }
}

impl From<Vec<f64>> for Vector {
    fn from(v: Vec<f64>) -> Self {
        Vector(v)
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DualFunctional(Vec<f64>);

impl DualFunctional {
    pub fn new(coords: Vec<f64>) -> Self {
        DualFunctional(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        DualFunctional(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn scale(&self, c: f64) -> DualFunctional {
        DualFunctional(self.0.iter().map(|a| c * a).collect())
    }
}

impl Neg for &DualFunctional {
    type Output = DualFunctional;
    fn neg(self) -> DualFunctional {
        DualFunctional(self.0.iter().map(|a| -a).collect())
    }
}

/// `ρ(y)`, the bilinear pairing of a functional with a vector.
pub fn dual_pair(rho: &DualFunctional, y: &Vector) -> Result<f64> {
    check_dim(rho.dim(), y.dim())?;
    Ok(rho.0.iter().zip(&y.0).map(|(b, a)| b * a).sum())
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// `sign(α)` with `sign(0) = 0`.
pub fn sign(a: f64) -> f64 {
    if a > 0.0 {
        1.0
    } else if a < 0.0 {
        -1.0
    } else {
        0.0
    }
}

#[derive(Clone, Debug)]
pub enum NormKind {
    Euclidean,
    PNorm { p: f64, weights: Vec<f64> },
    GaugeNumeric { body: Box<ConvexBody> },
}

/// JSON descriptor: `{"kind":"pnorm","p":3.0,"dim":2,"weights":[1,1]}`,
/// `{"kind":"euclidean","dim":3}` or `{"kind":"gauge","body":{...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModelDescriptor {
    Euclidean {
        dim: usize,
    },
    Pnorm {
        p: f64,
        dim: usize,
        #[serde(default)]
        weights: Option<Vec<f64>>,
    },
    Gauge {
        body: BodyDescriptor,
    },
}

#[derive(Clone, Debug)]
pub struct NormModel {
    kind: NormKind,
    dim: usize,
    tol: Tolerances,
}

impl NormModel {
    pub fn euclidean(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(NormModel {
            kind: NormKind::Euclidean,
            dim,
            tol: Tolerances::default(),
        })
    }

    pub fn pnorm(p: f64, dim: usize) -> Result<Self> {
        Self::weighted_pnorm(p, vec![1.0; dim])
    }

    pub fn weighted_pnorm(p: f64, weights: Vec<f64>) -> Result<Self> {
        if !(p.is_finite() && p > 1.0) {
            return Err(Error::InvalidExponent(p));
        }
        if weights.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::InvalidWeights(
                "weights must be finite and strictly positive".into(),
            ));
        }
        let dim = weights.len();
        Ok(NormModel {
            kind: NormKind::PNorm { p, weights },
            dim,
            tol: Tolerances::default(),
        })
    }

    /// Gauge of a body; the body must be centred on the origin and
    /// point-symmetric.
    pub fn gauge(body: ConvexBody) -> Result<Self> {
        if !body.is_centrally_symmetric() {
            return Err(Error::InvalidBody(
                "gauge body must be origin-symmetric".into(),
            ));
        }
        if body.anchor() != [0.0, 0.0] {
            return Err(Error::InvalidBody("gauge body must be centred at 0".into()));
        }
        Ok(NormModel {
            kind: NormKind::GaugeNumeric {
                body: Box::new(body),
            },
            dim: 2,
            tol: Tolerances::default(),
        })
    }

    pub fn from_descriptor(desc: &ModelDescriptor) -> Result<Self> {
        match desc {
            ModelDescriptor::Euclidean { dim } => Self::euclidean(*dim),
            ModelDescriptor::Pnorm { p, dim, weights } => {
                let weights = weights.clone().unwrap_or_else(|| vec![1.0; *dim]);
                check_dim(*dim, weights.len())?;
                Self::weighted_pnorm(*p, weights)
            }
            ModelDescriptor::Gauge { body } => Self::gauge(ConvexBody::from_descriptor(body)?),
        }
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tol
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &NormKind {
        &self.kind
    }

    /// True when the model's duality map has a closed form.
    pub fn is_closed_form(&self) -> bool {
        !matches!(self.kind, NormKind::GaugeNumeric { .. })
    }

    /// Tolerance appropriate for this model's duality map.
    pub fn duality_tolerance(&self) -> f64 {
        if self.is_closed_form() {
            self.tol.closed_form
        } else {
            self.tol.numeric
        }
    }

    fn check(&self, x: &Vector) -> Result<()> {
        check_dim(self.dim, x.dim())?;
        if !x.is_finite() {
            return Err(Error::NonFinite("vector"));
        }
        Ok(())
    }

    pub fn norm(&self, x: &Vector) -> Result<f64> {
        self.check(x)?;
        Ok(match &self.kind {
            NormKind::Euclidean => x.0.iter().map(|a| a * a).sum::<f64>().sqrt(),
            NormKind::PNorm { p, weights } => {
                if *p == 2.0 {
                    x.0.iter()
                        .zip(weights)
                        .map(|(a, w)| w * a * a)
                        .sum::<f64>()
                        .sqrt()
                } else {
                    let big = x.0.iter().fold(0.0f64, |m, a| m.max(a.abs()));
                    if big == 0.0 {
                        return Ok(0.0);
                    }
                    // Scale out the largest entry to keep |α|^p in range.
                    let sum: f64 =
                        x.0.iter()
                            .zip(weights)
                            .map(|(a, w)| w * (a.abs() / big).powf(*p))
                            .sum();
                    big * sum.powf(1.0 / p)
                }
            }
            NormKind::GaugeNumeric { body } => body.gauge([x.0[0], x.0[1]]),
        })
    }

    /// The unique `ρ_x` with `ρ_x(x) = ‖x‖` and dual norm 1.
    pub fn norming_functional(&self, x: &Vector) -> Result<DualFunctional> {
        self.check(x)?;
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self.norm(x)?;
        Ok(match &self.kind {
            NormKind::Euclidean => DualFunctional(x.0.iter().map(|a| a / n).collect()),
            NormKind::PNorm { p, weights } => {
                if *p == 2.0 {
                    DualFunctional(x.0.iter().zip(weights).map(|(a, w)| w * a / n).collect())
                } else {
                    DualFunctional(
                        x.0.iter()
                            .zip(weights)
                            .map(|(a, w)| w * sign(*a) * (a.abs() / n).powf(p - 1.0))
                            .collect(),
                    )
                }
            }
            NormKind::GaugeNumeric { body } => gauge_norming_functional(body, x)?,
        })
    }

    /// Operator norm of `ρ` against this model's unit ball.
    pub fn dual_norm(&self, rho: &DualFunctional) -> Result<f64> {
        check_dim(self.dim, rho.dim())?;
        if rho.0.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("functional"));
        }
        Ok(match &self.kind {
            NormKind::Euclidean => rho.0.iter().map(|c| c * c).sum::<f64>().sqrt(),
            NormKind::PNorm { p, weights } => {
                let q = conjugate_exponent(*p);
                // q-norm of the density c_k / w_k under the same weights.
                let big = rho
                    .0
                    .iter()
                    .zip(weights)
                    .fold(0.0f64, |m, (c, w)| m.max((c / w).abs()));
                if big == 0.0 {
                    return Ok(0.0);
                }
                let sum: f64 = rho
                    .0
                    .iter()
                    .zip(weights)
                    .map(|(c, w)| w * ((c / w).abs() / big).powf(q))
                    .sum();
                big * sum.powf(1.0 / q)
            }
            NormKind::GaugeNumeric { body } => {
                let len = rho.0[0].hypot(rho.0[1]);
                if len == 0.0 {
                    return Ok(0.0);
                }
                len * body.support_value([rho.0[0] / len, rho.0[1] / len])?
            }
        })
    }

    /// Random distinct unit pairs and `t ∈ (0,1)`; margin `1 − ‖tx+(1−t)y‖`.
    pub fn certify_strict_convexity(&self, n_samples: usize, seed: u64) -> Result<ConvexityReport> {
        if n_samples == 0 {
            return Err(Error::InvalidParameter("n_samples must be >= 1".into()));
        }
        let mut rng = Sampler::new(seed);
        let mut min_margin = f64::INFINITY;
        let mut failures = 0;
        for _ in 0..n_samples {
            let x = rng.unit_vector(self);
            let y = loop {
                let y = rng.unit_vector(self);
                if self.norm(&(&x - &y))? > 1e-6 {
                    break y;
                }
            };
            let t = rng.open_unit();
            let mid = &x.scale(t) + &y.scale(1.0 - t);
            let margin = 1.0 - self.norm(&mid)?;
            if margin <= 0.0 {
                failures += 1;
            }
            min_margin = min_margin.min(margin);
        }
        Ok(ConvexityReport {
            samples: n_samples,
            min_margin,
            failures,
            pass: failures == 0,
        })
    }

    /// Central finite-difference gradient of the norm at sampled unit
    /// vectors against [`NormModel::norming_functional`].
    pub fn certify_smoothness(
        &self,
        n_samples: usize,
        h: f64,
        seed: u64,
    ) -> Result<SmoothnessReport> {
        let mut rng = Sampler::new(seed);
        let points: Vec<Vector> = (0..n_samples).map(|_| rng.unit_vector(self)).collect();
        self.certify_smoothness_at(&points, h)
    }

    /// Smoothness certificate at caller-supplied points (normalized first).
    pub fn certify_smoothness_at(&self, points: &[Vector], h: f64) -> Result<SmoothnessReport> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParameter(format!("step h = {h}")));
        }
        let mut max_deviation: f64 = 0.0;
        let mut max_ratio: f64 = 0.0;
        let mut failures = 0;
        for raw in points {
            let x = raw.scale(1.0 / self.norm(raw)?);
            let rho = self.norming_functional(&x)?;
            let mut worst_ratio: f64 = 0.0;
            for k in 0..self.dim {
                let mut plus = x.clone();
                let mut minus = x.clone();
                plus.0[k] += h;
                minus.0[k] -= h;
                let fd = (self.norm(&plus)? - self.norm(&minus)?) / (2.0 * h);
                let dev = (fd - rho.0[k]).abs();
                let tol = self.fd_tolerance(x.0[k], h);
                max_deviation = max_deviation.max(dev);
                worst_ratio = worst_ratio.max(dev / tol);
            }
            if worst_ratio > 1.0 {
                failures += 1;
            }
            max_ratio = max_ratio.max(worst_ratio);
        }
        Ok(SmoothnessReport {
            samples: points.len(),
            h,
            max_deviation,
            max_tolerance_ratio: max_ratio,
            failures,
            pass: failures == 0,
        })
    }

    /// Per-coordinate tolerance for a central difference with step `h`.
    ///
    /// Truncation is `O(h²)` times the third derivative; for p-norms that
    /// derivative behaves like `|α|^{p−3}`, which blows up at `α → 0` when
    /// `p < 3` and is cut off at the `O(h^{p−1})` error of a stencil that
    /// straddles zero.
    fn fd_tolerance(&self, alpha: f64, h: f64) -> f64 {
        let round_off = 1e3 * f64::EPSILON / h;
        match &self.kind {
            NormKind::Euclidean => 100.0 * h * h + round_off,
            NormKind::PNorm { p, .. } => {
                let growth = if *p < 3.0 {
                    alpha.abs().max(h).powf(p - 3.0).max(1.0)
                } else {
                    1.0
                };
                100.0 * p * p * h * h * growth + round_off
            }
            NormKind::GaugeNumeric { .. } => 100.0 * h * h + round_off + self.tol.numeric,
        }
    }
}

/// `q` with `1/p + 1/q = 1`.
pub fn conjugate_exponent(p: f64) -> f64 {
    p / (p - 1.0)
}

/// Norming functional of a gauge: the supporting line at the boundary point
/// on the ray of `x`, scaled so that its support value is 1. Computed on one
/// half-plane and mirrored, so `ρ_{−x} = −ρ_x` holds exactly.
fn gauge_norming_functional(body: &ConvexBody, x: &Vector) -> Result<DualFunctional> {
    let v = [x.0[0], x.0[1]];
    let theta = body.angle_of(v);
    let flip = theta >= std::f64::consts::PI;
    let canonical = if flip { [-v[0], -v[1]] } else { v };
    let (psi, support) = body.supporting_direction(body.angle_of(canonical))?;
    let u = [psi.cos(), psi.sin()];
    let h = dot(u, support.point);
    let rho = DualFunctional(vec![u[0] / h, u[1] / h]);
    Ok(if flip { -&rho } else { rho })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvexityReport {
    pub samples: usize,
    pub min_margin: f64,
    pub failures: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothnessReport {
    pub samples: usize,
    pub h: f64,
    pub max_deviation: f64,
    /// Largest deviation divided by its per-coordinate tolerance.
    pub max_tolerance_ratio: f64,
    pub failures: usize,
    pub pass: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec())
    }

    #[test]
    fn euclidean_345() {
        let m = NormModel::euclidean(2).unwrap();
        assert_eq!(m.norm(&v(&[3.0, 4.0])).unwrap(), 5.0);
        assert_eq!(m.norm(&v(&[0.0, 0.0])).unwrap(), 0.0);
    }

    #[test]
    fn pnorm_of_ones() {
        let m = NormModel::pnorm(3.0, 2).unwrap();
        let direct = (1.0f64 + 1.0).powf(1.0 / 3.0);
        assert!((m.norm(&v(&[1.0, 1.0])).unwrap() - direct).abs() < 1e-15);
        assert!((direct - 1.2599210498948732).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_exponents_and_weights() {
        assert!(matches!(
            NormModel::pnorm(1.0, 2),
            Err(Error::InvalidExponent(_))
        ));
        assert!(NormModel::pnorm(f64::INFINITY, 2).is_err());
        assert!(NormModel::weighted_pnorm(3.0, vec![1.0, 0.0]).is_err());
        assert!(NormModel::euclidean(0).is_err());
    }

    #[test]
    fn dimension_and_finiteness_errors() {
        let m = NormModel::pnorm(3.0, 2).unwrap();
        assert!(matches!(
            m.norm(&v(&[1.0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
        assert!(matches!(
            m.norm(&v(&[1.0, f64::NAN])),
            Err(Error::NonFinite(_))
        ));
        assert!(matches!(
            m.norming_functional(&v(&[0.0, 0.0])),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn basis_vector_is_self_norming() {
        for p in [1.5, 2.0, 3.0, 10.0] {
            let m = NormModel::pnorm(p, 2).unwrap();
            let rho = m.norming_functional(&v(&[1.0, 0.0])).unwrap();
            assert_eq!(rho.coords(), &[1.0, 0.0]);
        }
    }

    #[test]
    fn p3_diagonal_functional() {
        let m = NormModel::pnorm(3.0, 2).unwrap();
        let a = 2f64.powf(-1.0 / 3.0);
        let rho = m.norming_functional(&v(&[a, a])).unwrap();
        let b = 2f64.powf(-2.0 / 3.0);
        for c in rho.coords() {
            assert!((c - b).abs() < 1e-15);
        }
        assert!((dual_pair(&rho, &v(&[a, a])).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn euclidean_self_duality() {
        let m = NormModel::euclidean(3).unwrap();
        let x = v(&[0.6, 0.0, 0.8]);
        let rho = m.norming_functional(&x).unwrap();
        assert_eq!(rho.coords(), x.coords());
    }

    #[test]
    fn dual_pair_examples() {
        let rho = DualFunctional::new(vec![1.0, 0.0]);
        assert_eq!(dual_pair(&rho, &v(&[0.5, 0.9])).unwrap(), 0.5);
        assert_eq!(
            dual_pair(&DualFunctional::zeros(2), &v(&[0.5, 0.9])).unwrap(),
            0.0
        );
        assert!(dual_pair(&rho, &v(&[1.0])).is_err());
    }

    #[test]
    fn weighted_norming_functional_has_unit_dual_norm() {
        let m = NormModel::weighted_pnorm(3.0, vec![0.5, 2.0, 1.5]).unwrap();
        let x = v(&[0.3, -1.2, 0.7]);
        let rho = m.norming_functional(&x).unwrap();
        let n = m.norm(&x).unwrap();
        assert!((dual_pair(&rho, &x).unwrap() - n).abs() < 1e-12);
        assert!((m.dual_norm(&rho).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sign_of_zero_is_zero() {
        assert_eq!(sign(0.0), 0.0);
        assert_eq!(sign(-0.0), 0.0);
        assert_eq!(sign(-2.0), -1.0);
        let m = NormModel::pnorm(1.5, 3).unwrap();
        let rho = m.norming_functional(&v(&[0.0, 1.0, 0.0])).unwrap();
        assert_eq!(rho.coords(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn strict_convexity_certificates() {
        for p in [2.0, 3.0] {
            let m = NormModel::pnorm(p, 2).unwrap();
            let r = m.certify_strict_convexity(1000, 11).unwrap();
            assert!(r.pass, "p = {p}: {r:?}");
            assert!(r.min_margin > 0.0);
        }
    }

    #[test]
    fn smoothness_euclidean_dim3() {
        let m = NormModel::euclidean(3).unwrap();
        let r = m.certify_smoothness(200, 1e-5, 3).unwrap();
        assert!(r.pass);
        assert!(r.max_deviation <= 1e-8, "{r:?}");
    }

    #[test]
    fn smoothness_p4() {
        let m = NormModel::pnorm(4.0, 2).unwrap();
        let r = m.certify_smoothness(200, 1e-5, 5).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn smoothness_on_axis_p_one_and_a_half() {
        let m = NormModel::pnorm(1.5, 2).unwrap();
        let points = [
            v(&[1.0, 0.0]),
            v(&[0.0, -1.0]),
            v(&[1.0, 1e-6]),
            v(&[3e-5, 1.0]),
        ];
        let r = m.certify_smoothness_at(&points, 1e-5).unwrap();
        assert!(r.pass, "{r:?}");
        let r = m.certify_smoothness(300, 1e-5, 9).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn gauge_requires_symmetric_body() {
        let limacon = ConvexBody::limacon(0.3).unwrap();
        assert!(NormModel::gauge(limacon).is_err());
    }

    #[test]
    fn gauge_disk_is_euclidean() {
        let m = NormModel::gauge(ConvexBody::disk()).unwrap();
        let mut rng = Sampler::new(4);
        for _ in 0..50 {
            let x = rng.unit_vector(&m);
            let rho = m.norming_functional(&x).unwrap();
            for (c, a) in rho.coords().iter().zip(x.coords()) {
                assert!((c - a).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn gauge_smoothness_certificate() {
        let m = NormModel::gauge(ConvexBody::pball(3.0).unwrap()).unwrap();
        let r = m.certify_smoothness(50, 1e-5, 2).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn model_descriptor_roundtrip() {
        let json = r#"{"kind":"pnorm","p":3.0,"dim":2,"weights":[1,1]}"#;
        let desc: ModelDescriptor = serde_json::from_str(json).unwrap();
        let m = NormModel::from_descriptor(&desc).unwrap();
        assert_eq!(m.dim(), 2);
        let desc: ModelDescriptor =
            serde_json::from_str(r#"{"kind":"gauge","body":{"kind":"pball","p":3}}"#).unwrap();
        assert!(NormModel::from_descriptor(&desc).is_ok());
        let bad: ModelDescriptor =
            serde_json::from_str(r#"{"kind":"pnorm","p":3.0,"dim":3,"weights":[1,1]}"#).unwrap();
        assert!(NormModel::from_descriptor(&bad).is_err());
    }
}

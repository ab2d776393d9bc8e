//! Binary logics of smooth strictly convex planar bodies.
//!
//! Besides `0` and `𝕀`, the logic of a body `K` consists of the affine
//! functions `e_ω` that take the value 1 at a boundary point `ω` and 0 at
//! its antipodal point `ω′`, where the parallel supporting line touches.
//! The point evaluation `δ_ω` is the state of `e_ω`, so the transition
//! probability from `e_{ω₁}` to `e_{ω₂}` is `e_{ω₂}(ω₁)`.

use serde::Serialize;

use crate::body::{dot, BodyKind, BoundaryPoint, ConvexBody, Point};
use crate::error::{Error, Result};
use crate::sampling::Sampler;
use crate::space::{conjugate_exponent, NormKind, NormModel, Vector};
use crate::spin_factor::{AtomPolicy, LogicElement, SpinFactor};

/// Boundary membership tolerance, relative to the body's scale.
pub const ON_BOUNDARY_TOL: f64 = 1e-10;
/// Allowed gap between `⟨u, ω⟩` and the support value in direction `u`.
pub const SUPPORT_TOL: f64 = 1e-8;

fn check_on_boundary(body: &ConvexBody, omega: &BoundaryPoint) -> Result<()> {
    let residual = body.boundary_residual(omega.coords);
    if residual > ON_BOUNDARY_TOL * body.radius(omega.theta).max(1.0) {
        return Err(Error::InvalidParameter(format!(
            "point {:?} is {residual:e} off the boundary",
            omega.coords
        )));
    }
    Ok(())
}

/// Unit outward normal of the supporting line at `ω`.
///
/// Taken perpendicular to the curve's tangent and then confirmed with a
/// support query: `⟨u, ω⟩` must be the maximum of `⟨u, ·⟩` over `K`.
pub fn outward_normal(body: &ConvexBody, omega: &BoundaryPoint) -> Result<Point> {
    check_on_boundary(body, omega)?;
    let (t, _) = body.derivatives(omega.theta);
    let len = t[0].hypot(t[1]);
    let u = [t[1] / len, -t[0] / len];
    let support = body.support(u)?;
    let gap = support.value - dot(u, omega.coords);
    if gap.abs() > SUPPORT_TOL {
        return Err(Error::NoConvergence {
            what: "outward normal",
            iterations: 1,
            residual: gap.abs(),
        });
    }
    Ok(u)
}

/// The boundary point touched by the supporting line parallel to the one at `ω`.
///
/// For a centrally symmetric body this is the reflection of `ω` through the
/// centre. Otherwise it comes from a support query in direction `−u`.
pub fn antipodal(body: &ConvexBody, omega: &BoundaryPoint) -> Result<BoundaryPoint> {
    if body.is_centrally_symmetric() {
        check_on_boundary(body, omega)?;
        let c = body.anchor();
        let coords = [2.0 * c[0] - omega.coords[0], 2.0 * c[1] - omega.coords[1]];
        return Ok(BoundaryPoint {
            theta: body.angle_of(coords),
            coords,
        });
    }
    antipode_by_support(body, omega)
}

/// Antipode from the support query alone. Near points of vanishing
/// curvature (axis points of l^p balls with large p) the maximizer of
/// `⟨−u, ·⟩` is resolved only to about `ε^{1/(k−1)}` for a contact of order
/// `k`, although the support value stays accurate.
pub fn antipode_by_support(body: &ConvexBody, omega: &BoundaryPoint) -> Result<BoundaryPoint> {
    let u = outward_normal(body, omega)?;
    let s = body.support([-u[0], -u[1]])?;
    Ok(BoundaryPoint {
        theta: s.theta,
        coords: s.point,
    })
}

/// The atom `e_ω`: `v ↦ (⟨u, v⟩ − lo)/(hi − lo)` on the slab between the
/// two supporting lines with normal `u`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AffineAtom {
    pub normal: Point,
    pub hi: f64,
    pub lo: f64,
    #[serde(skip)]
    pub omega: BoundaryPoint,
    #[serde(skip)]
    pub antipode: BoundaryPoint,
}

impl AffineAtom {
    pub fn evaluate(&self, v: Point) -> f64 {
        (dot(self.normal, v) - self.lo) / (self.hi - self.lo)
    }
}

pub fn affine_atom(body: &ConvexBody, omega: &BoundaryPoint) -> Result<AffineAtom> {
    let normal = outward_normal(body, omega)?;
    let lo = -body.support_value([-normal[0], -normal[1]])?;
    let hi = dot(normal, omega.coords);
    if hi - lo <= 0.0 {
        return Err(Error::InvalidBody("degenerate supporting slab".into()));
    }
    Ok(AffineAtom {
        normal,
        hi,
        lo,
        omega: *omega,
        antipode: antipodal(body, omega)?,
    })
}

/// Transition probability from `e_{ω₁}` to `e_{ω₂}`, i.e. `e_{ω₂}(ω₁)`.
pub fn tp_convex(body: &ConvexBody, omega1: &BoundaryPoint, omega2: &BoundaryPoint) -> Result<f64> {
    check_on_boundary(body, omega1)?;
    Ok(affine_atom(body, omega2)?.evaluate(omega1.coords))
}

/// `|ℙ(e_{ω₂}|e_{ω₁}) + ℙ(e_{ω₂}|e_{ω₁′}) − 1|`.
pub fn eq6_defect_convex(
    body: &ConvexBody,
    omega1: &BoundaryPoint,
    omega2: &BoundaryPoint,
) -> Result<f64> {
    let anti = antipodal(body, omega1)?;
    let atom = affine_atom(body, omega2)?;
    Ok((atom.evaluate(omega1.coords) + atom.evaluate(anti.coords) - 1.0).abs())
}

/// Largest defect of `ℙ(f|e) + ℙ(f|e′) = 1` over an `n × n` grid of boundary angles.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Eq6Search {
    pub theta1: f64,
    pub theta2: f64,
    pub defect: f64,
    pub grid: usize,
}

pub fn search_eq6_defect(body: &ConvexBody, n: usize) -> Result<Eq6Search> {
    if n == 0 {
        return Err(Error::InvalidParameter("grid size must be >= 1".into()));
    }
    let points: Vec<BoundaryPoint> = (0..n)
        .map(|k| body.boundary_point(std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    let atoms = points
        .iter()
        .map(|w| affine_atom(body, w))
        .collect::<Result<Vec<_>>>()?;
    let mut best = Eq6Search {
        theta1: 0.0,
        theta2: 0.0,
        defect: 0.0,
        grid: n,
    };
    for (w1, a1) in points.iter().zip(&atoms) {
        for (w2, a2) in points.iter().zip(&atoms) {
            let d = (a2.evaluate(w1.coords) + a2.evaluate(a1.antipode.coords) - 1.0).abs();
            if d > best.defect {
                best.theta1 = w1.theta;
                best.theta2 = w2.theta;
                best.defect = d;
            }
        }
    }
    Ok(best)
}

/// Comparison of body transition probabilities against a spin factor
/// through the duality map of the body's norm.
#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub q: f64,
    pub p: f64,
    pub pairs: usize,
    pub max_deviation: f64,
}

/// Exponent of the l^q ball a body is, if it is one (a unit disk is q = 2).
fn ball_exponent(body: &ConvexBody) -> Option<f64> {
    match body.kind() {
        BodyKind::Disk if (body.radius(0.0) - 1.0).abs() == 0.0 => Some(2.0),
        BodyKind::PBall(q) => Some(q),
        _ => None,
    }
}

fn model_exponent(model: &NormModel) -> Option<f64> {
    match model.kind() {
        NormKind::Euclidean => Some(2.0),
        NormKind::PNorm { p, weights } if weights.iter().all(|&w| w == 1.0) => Some(*p),
        _ => None,
    }
}

/// Maps a boundary point `ω` of the unit l^q ball to the spin-factor atom
/// whose state restricts to `ω`: `Atom(J_q(ω))` with `J_q` the l^q duality map.
pub fn corresponding_atom(q: f64, omega: &BoundaryPoint) -> Result<LogicElement> {
    let ball = if q == 2.0 {
        NormModel::euclidean(2)?
    } else {
        NormModel::pnorm(q, 2)?
    };
    let rho = ball.norming_functional(&Vector::new(omega.coords.to_vec()))?;
    Ok(LogicElement::Atom(Vector::new(rho.coords().to_vec())))
}

/// For `K` the unit l^q ball and `X = l^p` with `1/p + 1/q = 1`, compares
/// `tp_convex(ω₁, ω₂)` with `ℙ(f₂ | f₁)` for the corresponding atoms over
/// `n_pairs` seeded boundary pairs, in both directions.
pub fn duality_correspondence_check(
    body: &ConvexBody,
    model: &NormModel,
    n_pairs: usize,
    seed: u64,
) -> Result<DualityReport> {
    let q = ball_exponent(body)
        .ok_or_else(|| Error::InvalidBody("body is not a unit l^q ball".into()))?;
    let p = model_exponent(model)
        .ok_or_else(|| Error::InvalidParameter("model is not an unweighted l^p norm".into()))?;
    if model.dim() != 2 || (conjugate_exponent(p) - q).abs() > 1e-12 * q {
        return Err(Error::ExponentMismatch { p, q });
    }
    let spin = SpinFactor::new(model.clone()).with_policy(AtomPolicy::Strict);
    let mut rng = Sampler::new(seed);
    let mut max_deviation: f64 = 0.0;
    for _ in 0..n_pairs {
        let w1 = body.boundary_point(rng.uniform(0.0, std::f64::consts::TAU));
        let w2 = body.boundary_point(rng.uniform(0.0, std::f64::consts::TAU));
        let f1 = spin.atom(corresponding_atom(q, &w1)?.atom_vector().unwrap().clone())?;
        let f2 = spin.atom(corresponding_atom(q, &w2)?.atom_vector().unwrap().clone())?;
        let forward = (tp_convex(body, &w1, &w2)? - spin.transition_probability(&f2, &f1)?).abs();
        let backward = (tp_convex(body, &w2, &w1)? - spin.transition_probability(&f1, &f2)?).abs();
        max_deviation = max_deviation.max(forward).max(backward);
    }
    Ok(DualityReport {
        q,
        p,
        pairs: n_pairs,
        max_deviation,
    })
}

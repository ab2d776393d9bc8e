//! Smooth strictly convex planar bodies in radial form.
//!
//! A body is `anchor + r(θ)·(cos θ, sin θ)` for a positive, periodic,
//! twice-differentiable radial function `r`. Construction certifies strict
//! convexity through the polar curvature proxy `r² + 2r'² − r·r''`, which
//! must be non-negative on the whole grid and may vanish only at isolated
//! grid points (p-balls with p > 2 flatten to zero curvature on the axes
//! and are still strictly convex).

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resolution of the bracketing grid and of the convexity certificate.
pub const GRID: usize = 4096;

const NEWTON_CAP: usize = 100;

/// Largest normal turn allowed between adjacent grid points. A corner keeps
/// a fixed turn however fine the grid; a smooth curve's turn shrinks with it.
pub const MAX_NORMAL_TURN: f64 = 0.25;

pub type Point = [f64; 2];

/// JSON descriptor for a body.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BodyDescriptor {
    Disk {
        #[serde(default = "one")]
        radius: f64,
    },
    Pball {
        p: f64,
    },
    Limacon {
        #[serde(default = "default_eps")]
        eps: f64,
    },
    Custom {
        r_table: Vec<f64>,
        #[serde(default)]
        anchor: Option<Point>,
    },
}

fn one() -> f64 {
    1.0
}

fn default_eps() -> f64 {
    0.3
}

#[derive(Clone, Debug)]
enum Radial {
    Disk(f64),
    PBall(f64),
    Limacon(f64),
    /// Trigonometric interpolant of a sampled radius table.
    Trig {
        a0: f64,
        cos: Vec<f64>,
        sin: Vec<f64>,
        nyquist: Option<f64>,
    },
}

impl Radial {
    /// `(r, r', r'')` at `theta`.
    fn eval(&self, theta: f64) -> (f64, f64, f64) {
        match *self {
            Radial::Disk(radius) => (radius, 0.0, 0.0),
            Radial::Limacon(eps) => {
                let (s, c) = theta.sin_cos();
                (1.0 + eps * c, -eps * s, -eps * c)
            }
            Radial::PBall(p) => pball_radial(p, theta),
            Radial::Trig {
                a0,
                ref cos,
                ref sin,
                nyquist,
            } => {
                let (s1, c1) = theta.sin_cos();
                let (mut ck, mut sk) = (1.0, 0.0);
                let (mut r, mut d1, mut d2) = (a0, 0.0, 0.0);
                for (i, (&a, &b)) in cos.iter().zip(sin).enumerate() {
                    let next_c = ck * c1 - sk * s1;
                    sk = sk * c1 + ck * s1;
                    ck = next_c;
                    let k = (i + 1) as f64;
                    r += a * ck + b * sk;
                    d1 += k * (b * ck - a * sk);
                    d2 -= k * k * (a * ck + b * sk);
                }
                if let Some(a) = nyquist {
                    let k = (cos.len() + 1) as f64;
                    let (sn, cn) = (k * theta).sin_cos();
                    r += a * cn;
                    d1 -= k * a * sn;
                    d2 -= k * k * a * cn;
                }
                (r, d1, d2)
            }
        }
    }
}

/// Radius of the unit l^p ball in direction θ, with its first two derivatives.
fn pball_radial(p: f64, theta: f64) -> (f64, f64, f64) {
    let (s, c) = theta.sin_cos();
    let (ac, as_) = (c.abs(), s.abs());
    let sum = ac.powf(p) + as_.powf(p);
    // dS/dθ = p·t, d²S/dθ² = p·u
    let t = -ac.powf(p - 1.0) * c.signum() * s + as_.powf(p - 1.0) * s.signum() * c;
    let u = (p - 1.0) * (ac.powf(p - 2.0) * s * s + as_.powf(p - 2.0) * c * c) - sum;
    let r = sum.powf(-1.0 / p);
    let d1 = -sum.powf(-1.0 / p - 1.0) * t;
    let d2 = (1.0 + p) * sum.powf(-1.0 / p - 2.0) * t * t - sum.powf(-1.0 / p - 1.0) * u;
    (r, d1, d2)
}

fn trig_interpolant(table: &[f64]) -> Radial {
    let n = table.len();
    let nf = n as f64;
    let a0 = table.iter().sum::<f64>() / nf;
    let half = (n - 1) / 2;
    let mut cos = Vec::with_capacity(half);
    let mut sin = Vec::with_capacity(half);
    for k in 1..=half {
        let (mut a, mut b) = (0.0, 0.0);
        for (j, &r) in table.iter().enumerate() {
            let (s, c) = (TAU * (k * j % n) as f64 / nf).sin_cos();
            a += r * c;
            b += r * s;
        }
        cos.push(2.0 * a / nf);
        sin.push(2.0 * b / nf);
    }
    let nyquist = n.is_multiple_of(2).then(|| {
        table
            .iter()
            .enumerate()
            .map(|(j, &r)| if j % 2 == 0 { r } else { -r })
            .sum::<f64>()
            / nf
    });
    Radial::Trig {
        a0,
        cos,
        sin,
        nyquist,
    }
}

/// Which family a body belongs to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BodyKind {
    Disk,
    PBall(f64),
    Limacon(f64),
    Custom,
}

/// A point on the boundary, identified by its radial angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub coords: Point,
}

/// Result of a support query: the boundary point maximizing `⟨u, ·⟩`.
#[derive(Clone, Copy, Debug)]
pub struct Support {
    pub theta: f64,
    pub point: Point,
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct ConvexBody {
    kind: BodyKind,
    radial: Radial,
    anchor: Point,
    grid: Vec<Point>,
    min_curvature_proxy: f64,
    max_normal_turn: f64,
    symmetric: bool,
    descriptor: BodyDescriptor,
}

impl ConvexBody {
    pub fn from_descriptor(desc: &BodyDescriptor) -> Result<Self> {
        let (kind, radial, anchor) = match *desc {
            BodyDescriptor::Disk { radius } => {
                if !(radius.is_finite() && radius > 0.0) {
                    return Err(Error::InvalidBody(format!("disk radius {radius}")));
                }
                (BodyKind::Disk, Radial::Disk(radius), [0.0; 2])
            }
            BodyDescriptor::Pball { p } => {
                if !(p.is_finite() && p > 1.0) {
                    return Err(Error::InvalidExponent(p));
                }
                (BodyKind::PBall(p), Radial::PBall(p), [0.0; 2])
            }
            BodyDescriptor::Limacon { eps } => {
                if !eps.is_finite() {
                    return Err(Error::NonFinite("limacon eps"));
                }
                (BodyKind::Limacon(eps), Radial::Limacon(eps), [0.0; 2])
            }
            BodyDescriptor::Custom {
                ref r_table,
                anchor,
            } => {
                if r_table.len() < 8 {
                    return Err(Error::InvalidBody(
                        "r_table needs at least 8 samples".into(),
                    ));
                }
                if r_table.iter().any(|r| !r.is_finite() || *r <= 0.0) {
                    return Err(Error::InvalidBody(
                        "r_table entries must be finite and positive".into(),
                    ));
                }
                let anchor = anchor.unwrap_or([0.0; 2]);
                if anchor.iter().any(|a| !a.is_finite()) {
                    return Err(Error::NonFinite("anchor"));
                }
                (BodyKind::Custom, trig_interpolant(r_table), anchor)
            }
        };
        let mut body = ConvexBody {
            kind,
            radial,
            anchor,
            grid: Vec::new(),
            min_curvature_proxy: 0.0,
            max_normal_turn: 0.0,
            symmetric: false,
            descriptor: desc.clone(),
        };
        body.certify()?;
        Ok(body)
    }

    pub fn disk() -> Self {
        Self::from_descriptor(&BodyDescriptor::Disk { radius: 1.0 }).expect("unit disk")
    }

    pub fn pball(p: f64) -> Result<Self> {
        Self::from_descriptor(&BodyDescriptor::Pball { p })
    }

    pub fn limacon(eps: f64) -> Result<Self> {
        Self::from_descriptor(&BodyDescriptor::Limacon { eps })
    }

    fn certify(&mut self) -> Result<()> {
        let mut grid = Vec::with_capacity(GRID);
        let mut proxies = Vec::with_capacity(GRID);
        let mut normals = Vec::with_capacity(GRID);
        let mut scale: f64 = 0.0;
        for k in 0..GRID {
            let theta = grid_angle(k);
            let (r, d1, d2) = self.radial.eval(theta);
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::InvalidBody(format!(
                    "radius {r} at theta {theta} is not positive"
                )));
            }
            scale = scale.max(r);
            grid.push(self.point(theta));
            let proxy = r * r + 2.0 * d1 * d1 - r * d2;
            if proxy.is_nan() || d1.is_nan() {
                return Err(Error::InvalidBody(format!(
                    "radial derivative undefined at theta {theta}"
                )));
            }
            proxies.push(proxy);
            let (t, _) = self.derivatives(theta);
            normals.push((-t[0]).atan2(t[1]));
        }
        let floor = 1e-12 * scale * scale;
        let min = proxies.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -floor {
            return Err(Error::InvalidBody(format!(
                "not convex: curvature proxy {min:e} < 0"
            )));
        }
        for k in 0..GRID {
            if proxies[k] <= floor && proxies[(k + 1) % GRID] <= floor {
                return Err(Error::InvalidBody(format!(
                    "not strictly convex: flat arc near theta {}",
                    grid_angle(k)
                )));
            }
        }
        let turn = (0..GRID)
            .map(|k| wrap_angle(normals[(k + 1) % GRID] - normals[k]).abs())
            .fold(0.0, f64::max);
        if turn > MAX_NORMAL_TURN {
            return Err(Error::InvalidBody(format!(
                "not smooth: normal turns by {turn:.3} rad between grid points"
            )));
        }
        self.max_normal_turn = turn;
        self.symmetric = (0..GRID / 2).all(|k| {
            let (a, _, _) = self.radial.eval(grid_angle(k));
            let (b, _, _) = self.radial.eval(grid_angle(k) + PI);
            (a - b).abs() <= 1e-10 * scale
        });
        self.grid = grid;
        self.min_curvature_proxy = min;
        Ok(())
    }

    pub fn kind(&self) -> BodyKind {
        self.kind
    }

    pub fn descriptor(&self) -> &BodyDescriptor {
        &self.descriptor
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    /// Smallest curvature proxy seen on the certification grid.
    pub fn min_curvature_proxy(&self) -> f64 {
        self.min_curvature_proxy
    }

    /// Largest normal turn between adjacent certification grid points.
    pub fn max_normal_turn(&self) -> f64 {
        self.max_normal_turn
    }

    /// Whether the body is point-symmetric about its anchor.
    pub fn is_centrally_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn radius(&self, theta: f64) -> f64 {
        self.radial.eval(theta).0
    }

    pub fn point(&self, theta: f64) -> Point {
        let r = self.radius(theta);
        let (s, c) = theta.sin_cos();
        [self.anchor[0] + r * c, self.anchor[1] + r * s]
    }

    pub fn boundary_point(&self, theta: f64) -> BoundaryPoint {
        let theta = theta.rem_euclid(TAU);
        BoundaryPoint {
            theta,
            coords: self.point(theta),
        }
    }

    /// Radial angle of `v` about the anchor, in `[0, 2π)`.
    pub fn angle_of(&self, v: Point) -> f64 {
        (v[1] - self.anchor[1])
            .atan2(v[0] - self.anchor[0])
            .rem_euclid(TAU)
    }

    /// First and second derivative of the boundary curve at `theta`.
    pub fn derivatives(&self, theta: f64) -> (Point, Point) {
        let (r, d1, d2) = self.radial.eval(theta);
        let (s, c) = theta.sin_cos();
        let first = [d1 * c - r * s, d1 * s + r * c];
        let second = [d2 * c - 2.0 * d1 * s - r * c, d2 * s + 2.0 * d1 * c - r * s];
        (first, second)
    }

    /// Distance of `v` from the boundary along its ray from the anchor.
    pub fn boundary_residual(&self, v: Point) -> f64 {
        let d = [v[0] - self.anchor[0], v[1] - self.anchor[1]];
        (d[0].hypot(d[1]) - self.radius(self.angle_of(v))).abs()
    }

    /// Minkowski functional relative to the anchor.
    pub fn gauge(&self, v: Point) -> f64 {
        let d = [v[0] - self.anchor[0], v[1] - self.anchor[1]];
        let len = d[0].hypot(d[1]);
        if len == 0.0 {
            return 0.0;
        }
        len / self.radius(self.angle_of(v))
    }

    /// Boundary point maximizing `⟨u, ·⟩`, by grid bracketing and a
    /// safeguarded Newton iteration on `d/dθ ⟨u, b(θ)⟩ = 0`.
    pub fn support(&self, u: Point) -> Result<Support> {
        let k = self
            .grid
            .iter()
            .enumerate()
            .map(|(k, q)| (k, dot(u, *q)))
            .fold((0, f64::NEG_INFINITY), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            })
            .0;
        let step = TAU / GRID as f64;
        let centre = grid_angle(k);
        let (mut lo, mut hi) = (centre - step, centre + step);
        let slope = |theta: f64| {
            let (d1, d2) = self.derivatives(theta);
            (dot(u, d1), dot(u, d2))
        };
        let mut theta = centre;
        let mut residual = f64::INFINITY;
        for _ in 0..NEWTON_CAP {
            let (g, dg) = slope(theta);
            residual = g.abs();
            if g > 0.0 {
                lo = theta;
            } else if g < 0.0 {
                hi = theta;
            } else {
                return Ok(self.support_at(u, theta));
            }
            let newton = theta - g / dg;
            let next = if dg < 0.0 && newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
            let delta = (next - theta).abs();
            theta = next;
            if delta <= 1e-13 || hi - lo <= 1e-13 {
                return Ok(self.support_at(u, theta));
            }
        }
        Err(Error::NoConvergence {
            what: "support query",
            iterations: NEWTON_CAP,
            residual,
        })
    }

    fn support_at(&self, u: Point, theta: f64) -> Support {
        let theta = theta.rem_euclid(TAU);
        let point = self.point(theta);
        Support {
            theta,
            point,
            value: dot(u, point),
        }
    }

    /// Support function `h(u) = max ⟨u, v⟩` over the body.
    pub fn support_value(&self, u: Point) -> Result<f64> {
        Ok(self.support(u)?.value)
    }

    /// Unit normal direction `ψ` whose supporting line touches the boundary
    /// at angle `theta`: Newton iteration in `ψ` on the contact-angle
    /// residual, with each residual evaluated by a support query.
    pub fn supporting_direction(&self, theta: f64) -> Result<(f64, Support)> {
        let theta = theta.rem_euclid(TAU);
        // Coarse start: normal to the grid chord around theta.
        let k = ((theta / TAU) * GRID as f64).floor() as usize % GRID;
        let a = self.grid[(k + GRID - 1) % GRID];
        let b = self.grid[(k + 2) % GRID];
        let mut psi = (a[0] - b[0]).atan2(b[1] - a[1]);
        let mut residual = f64::INFINITY;
        let mut last_step = f64::INFINITY;
        for _ in 0..NEWTON_CAP {
            let u = [psi.cos(), psi.sin()];
            let sup = self.support(u)?;
            residual = wrap_angle(sup.theta - theta);
            if residual.abs() <= 1e-10 && last_step <= 1e-9 {
                return Ok((psi, sup));
            }
            // dθ*/dψ from the implicit equation ⟨u_ψ, b'(θ)⟩ = 0.
            let (d1, d2) = self.derivatives(sup.theta);
            let u_perp = [-u[1], u[0]];
            let curv = dot(u, d2);
            let dtheta = if curv != 0.0 {
                -dot(u_perp, d1) / curv
            } else {
                f64::INFINITY
            };
            let step = if dtheta.is_finite() && dtheta.abs() > 1e-300 {
                residual / dtheta
            } else {
                // Flat contact: the normal is already pinned down.
                0.0
            };
            let step = step.clamp(-0.25, 0.25);
            psi -= step;
            last_step = step.abs();
            if step == 0.0 && residual.abs() <= 1e-10 {
                return Ok((psi, sup));
            }
        }
        Err(Error::NoConvergence {
            what: "supporting hyperplane",
            iterations: NEWTON_CAP,
            residual: residual.abs(),
        })
    }
}

fn grid_angle(k: usize) -> f64 {
    TAU * k as f64 / GRID as f64
}

/// Angle difference mapped into `(−π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}

pub fn dot(a: Point, b: Point) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

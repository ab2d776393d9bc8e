//! Command implementations behind the `genspin` binary: curve and sweep
//! tables, spectral and pillow reports, and the invariant check suites.
//!
//! Every randomized routine takes an explicit seed; output is a pure
//! function of the arguments.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::body::{BodyDescriptor, ConvexBody};
use crate::convex_logic::{affine_atom, duality_correspondence_check, search_eq6_defect};
use crate::error::{Error, Result};
use crate::pillow::{pillow_report, pillow_tp, PillowAtom};
use crate::sampling::Sampler;
use crate::space::{ModelDescriptor, NormModel, Vector};
use crate::spin_factor::spectral::combine;
use crate::spin_factor::{AtomPolicy, LogicElement, OUElement, SpectralForm, SpinFactor};

pub const DEFAULT_P_LIST: [f64; 5] = [1.3, 1.5, 2.0, 3.0, 10.0];

/// CSV number format: 17 significant digits, enough to round-trip an `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_line(out: &mut String, fields: &[String]) {
    out.push_str(&fields.join(","));
    out.push('\n');
}

fn check_p(p: f64) -> Result<()> {
    if p.is_finite() && p > 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidExponent(p))
    }
}

/// The p-norm spin factor on `dim` coordinates; `p = 2` is the Euclidean one.
pub fn lp_spin_factor(p: f64, dim: usize) -> Result<SpinFactor> {
    check_p(p)?;
    let model = if p == 2.0 {
        NormModel::euclidean(dim)?
    } else {
        NormModel::pnorm(p, dim)?
    };
    Ok(SpinFactor::new(model))
}

#[derive(Clone, Debug)]
pub struct Figure1Column {
    pub p: f64,
    /// `ℙ(f | e) = ½(1 + β₁)`.
    pub forward: Vec<f64>,
    /// `ℙ(e | f) = ½(1 + sign(β₁)|β₁|^{p−1})`.
    pub backward: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct Figure1 {
    pub betas: Vec<f64>,
    pub columns: Vec<Figure1Column>,
}

/// `β_i = −1 + 2i/(n−1)`; the grid is exactly symmetric about 0 and hits
/// `0` for odd `n`.
pub fn beta_grid(n_points: usize) -> Vec<f64> {
    let last = (n_points - 1) as f64;
    (0..n_points)
        .map(|i| {
            let j = n_points - 1 - i;
            if i <= j {
                -1.0 + 2.0 * i as f64 / last
            } else {
                1.0 - 2.0 * j as f64 / last
            }
        })
        .collect()
}

/// The pair `e = Atom(e₁)`, `f = Atom((β, (1 − |β|^p)^{1/p}, 0, …))`.
pub fn figure1_pair(spin: &SpinFactor, p: f64, beta: f64) -> Result<(LogicElement, LogicElement)> {
    let dim = spin.dim();
    let e = spin.atom(Vector::basis(dim, 0))?;
    let mut f = vec![0.0; dim];
    f[0] = beta;
    f[1] = (1.0 - beta.abs().powf(p)).max(0.0).powf(1.0 / p);
    Ok((e, spin.atom(Vector::new(f))?))
}

pub fn figure1(p_list: &[f64], n_points: usize) -> Result<Figure1> {
    if n_points < 3 {
        return Err(Error::InvalidParameter(
            "figure1 needs at least 3 points".into(),
        ));
    }
    let betas = beta_grid(n_points);
    let columns = p_list
        .iter()
        .map(|&p| {
            let spin = lp_spin_factor(p, 2)?;
            let mut forward = Vec::with_capacity(n_points);
            let mut backward = Vec::with_capacity(n_points);
            for &beta in &betas {
                let (e, f) = figure1_pair(&spin, p, beta)?;
                forward.push(spin.transition_probability(&f, &e)?);
                backward.push(spin.transition_probability(&e, &f)?);
            }
            Ok(Figure1Column {
                p,
                forward,
                backward,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Figure1 { betas, columns })
}

impl Figure1 {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let mut header = vec!["beta1".to_string()];
        for c in &self.columns {
            header.push(format!("forward_p{}", c.p));
            header.push(format!("backward_p{}", c.p));
        }
        csv_line(&mut out, &header);
        for (i, &beta) in self.betas.iter().enumerate() {
            let mut row = vec![fmt_f64(beta)];
            for c in &self.columns {
                row.push(fmt_f64(c.forward[i]));
                row.push(fmt_f64(c.backward[i]));
            }
            csv_line(&mut out, &row);
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectRow {
    pub p: f64,
    pub max_symmetry_defect: f64,
    pub mean_symmetry_defect: f64,
    pub max_eq6_defect: f64,
    pub mean_eq6_defect: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectScan {
    pub rows: Vec<DefectRow>,
    /// Max symmetry defect is non-decreasing as p moves away from 2 on
    /// either side.
    pub monotone_trend: bool,
}

/// Symmetry and complement-additivity defects for each `p` over the same seeded raw
/// pairs, each normalized in the p-norm at hand.
pub fn defect_scan(p_list: &[f64], dim: usize, n_pairs: usize, seed: u64) -> Result<DefectScan> {
    if dim < 1 {
        return Err(Error::ZeroDimension);
    }
    let mut rng = Sampler::new(seed);
    let raw: Vec<(Vector, Vector)> = (0..n_pairs)
        .map(|_| (rng.cube(dim), rng.cube(dim)))
        .collect();
    let mut rows = Vec::with_capacity(p_list.len());
    for &p in p_list {
        let spin = lp_spin_factor(p, dim)?.with_policy(AtomPolicy::Lenient);
        let (mut max_sym, mut sum_sym, mut max_eq6, mut sum_eq6) = (0.0f64, 0.0, 0.0f64, 0.0);
        for (a, b) in &raw {
            let e = spin.atom(a.clone())?;
            let f = spin.atom(b.clone())?;
            let sym = spin.symmetry_defect(&e, &f)?;
            let eq6 = spin.eq6_defect(&e, &f)?;
            max_sym = max_sym.max(sym);
            max_eq6 = max_eq6.max(eq6);
            sum_sym += sym;
            sum_eq6 += eq6;
        }
        let n = n_pairs.max(1) as f64;
        rows.push(DefectRow {
            p,
            max_symmetry_defect: max_sym,
            mean_symmetry_defect: sum_sym / n,
            max_eq6_defect: max_eq6,
            mean_eq6_defect: sum_eq6 / n,
        });
    }
    let monotone_trend = monotone_away_from_two(&rows);
    Ok(DefectScan {
        rows,
        monotone_trend,
    })
}

fn monotone_away_from_two(rows: &[DefectRow]) -> bool {
    let mut above: Vec<&DefectRow> = rows.iter().filter(|r| r.p >= 2.0).collect();
    let mut below: Vec<&DefectRow> = rows.iter().filter(|r| r.p <= 2.0).collect();
    above.sort_by(|a, b| a.p.total_cmp(&b.p));
    below.sort_by(|a, b| b.p.total_cmp(&a.p));
    [above, below].iter().all(|side| {
        side.windows(2)
            .all(|w| w[1].max_symmetry_defect >= w[0].max_symmetry_defect)
    })
}

impl DefectScan {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "p,max_symmetry_defect,mean_symmetry_defect,max_eq6_defect,mean_eq6_defect,monotone_trend\n",
        );
        for r in &self.rows {
            csv_line(
                &mut out,
                &[
                    fmt_f64(r.p),
                    fmt_f64(r.max_symmetry_defect),
                    fmt_f64(r.mean_symmetry_defect),
                    fmt_f64(r.max_eq6_defect),
                    fmt_f64(r.mean_eq6_defect),
                    self.monotone_trend.to_string(),
                ],
            );
        }
        out
    }
}

/// Input of `tpmatrix`: `{"atoms": [[1,0],[0.5,0.866]], "model": {...}}`.
#[derive(Clone, Debug, Deserialize)]
pub struct AtomList {
    pub atoms: Vec<Vec<f64>>,
    #[serde(default)]
    pub model: Option<ModelDescriptor>,
}

/// One CSV row per ordered pair `(from, to)`:
/// `ℙ(to | from)`, `ℙ(from | to)`, their difference and the defect of `ℙ(to|from) + ℙ(to|from′) = 1`.
pub fn tpmatrix_csv(spin: &SpinFactor, atoms: &[Vec<f64>]) -> Result<String> {
    let atoms = atoms
        .iter()
        .map(|u| spin.atom(Vector::new(u.clone())))
        .collect::<Result<Vec<_>>>()?;
    let m = spin.tp_matrix(&atoms)?;
    let mut out = String::from("from,to,p_forward,p_backward,symmetry_defect,eq6_defect\n");
    for i in 0..atoms.len() {
        for j in 0..atoms.len() {
            let eq6 = spin.eq6_defect(&atoms[i], &atoms[j])?;
            csv_line(
                &mut out,
                &[
                    i.to_string(),
                    j.to_string(),
                    fmt_f64(m[i][j]),
                    fmt_f64(m[j][i]),
                    fmt_f64((m[i][j] - m[j][i]).abs()),
                    fmt_f64(eq6),
                ],
            );
        }
    }
    Ok(out)
}

/// Body transition probabilities on an `n × n` grid of boundary angles.
pub fn convex_sweep_csv(body: &ConvexBody, n: usize) -> Result<String> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "sweep needs at least one angle".into(),
        ));
    }
    let points: Vec<_> = (0..n)
        .map(|k| body.boundary_point(TAU * k as f64 / n as f64))
        .collect();
    let atoms = points
        .iter()
        .map(|w| affine_atom(body, w))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("theta1,theta2,p_forward,p_backward,eq6_defect\n");
    for (w1, a1) in points.iter().zip(&atoms) {
        for (w2, a2) in points.iter().zip(&atoms) {
            let forward = a2.evaluate(w1.coords);
            let backward = a1.evaluate(w2.coords);
            let eq6 = (forward + a2.evaluate(a1.antipode.coords) - 1.0).abs();
            csv_line(
                &mut out,
                &[
                    fmt_f64(w1.theta),
                    fmt_f64(w2.theta),
                    fmt_f64(forward),
                    fmt_f64(backward),
                    fmt_f64(eq6),
                ],
            );
        }
    }
    Ok(out)
}

pub fn spectral(spin: &SpinFactor, a: &OUElement) -> Result<SpectralForm> {
    spin.spectral_decompose(a)
}

// ---------------------------------------------------------------------------
// Check suites

pub const SUITES: [&str; 5] = ["all", "spin", "convex", "pillow", "space"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bound {
    /// `measured ≤ tolerance`.
    #[serde(rename = "<=")]
    AtMost,
    /// `measured ≥ tolerance`.
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub measured: f64,
    pub bound: Bound,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckEntry>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    /// Replaces the tolerance of every upper-bound check when set.
    pub tol: Option<f64>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 0,
            samples: 200,
            tol: None,
        }
    }
}

struct Checks {
    cfg: CheckConfig,
    entries: Vec<CheckEntry>,
}

impl Checks {
    fn at_most(&mut self, name: impl Into<String>, measured: f64, tol: f64) {
        let tol = self.cfg.tol.unwrap_or(tol);
        self.push(name.into(), measured, Bound::AtMost, tol, None);
    }

    fn at_least(&mut self, name: impl Into<String>, measured: f64, threshold: f64) {
        self.push(name.into(), measured, Bound::AtLeast, threshold, None);
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool, detail: String) {
        self.push(
            name.into(),
            if ok { 0.0 } else { 1.0 },
            Bound::AtMost,
            0.0,
            Some(detail),
        );
    }

    fn push(
        &mut self,
        name: String,
        measured: f64,
        bound: Bound,
        tolerance: f64,
        detail: Option<String>,
    ) {
        let pass = match bound {
            Bound::AtMost => measured <= tolerance,
            Bound::AtLeast => measured >= tolerance,
        };
        self.entries.push(CheckEntry {
            name,
            measured,
            bound,
            tolerance,
            pass,
            detail,
        });
    }
}

fn models_for_checks() -> Result<Vec<(&'static str, NormModel)>> {
    Ok(vec![
        ("euclidean3", NormModel::euclidean(3)?),
        ("pnorm1.5", NormModel::pnorm(1.5, 3)?),
        ("pnorm3", NormModel::pnorm(3.0, 3)?),
        (
            "pnorm3_weighted",
            NormModel::weighted_pnorm(3.0, vec![0.5, 1.0, 2.0])?,
        ),
        ("gauge_pball3", NormModel::gauge(ConvexBody::pball(3.0)?)?),
    ])
}

fn space_suite(c: &mut Checks) -> Result<()> {
    let n = c.cfg.samples;
    for (name, model) in models_for_checks()? {
        let cert = model.certify_strict_convexity(n, c.cfg.seed)?;
        c.at_least(
            format!("space/{name}/strict_convexity_margin"),
            cert.min_margin,
            0.0,
        );
        let smooth = model.certify_smoothness(n.min(100), 1e-5, c.cfg.seed)?;
        c.at_most(
            format!("space/{name}/smoothness_tolerance_ratio"),
            smooth.max_tolerance_ratio,
            1.0,
        );
        let mut rng = Sampler::new(c.cfg.seed);
        let (mut attain, mut unit) = (0.0f64, 0.0f64);
        for _ in 0..n {
            let x = rng.cube(model.dim());
            let rho = model.norming_functional(&x)?;
            attain = attain.max((crate::space::dual_pair(&rho, &x)? - model.norm(&x)?).abs());
            unit = unit.max((model.dual_norm(&rho)? - 1.0).abs());
        }
        let tol = model.duality_tolerance();
        c.at_most(format!("space/{name}/functional_attains_norm"), attain, tol);
        c.at_most(format!("space/{name}/functional_dual_norm_one"), unit, tol);
    }
    let gauge = NormModel::gauge(ConvexBody::pball(3.0)?)?;
    let closed = NormModel::pnorm(3.0, 2)?;
    let mut rng = Sampler::new(c.cfg.seed);
    let mut dev = 0.0f64;
    for _ in 0..n {
        let u = rng.unit_vector(&closed);
        let a = gauge.norming_functional(&u)?;
        let b = closed.norming_functional(&u)?;
        for (x, y) in a.coords().iter().zip(b.coords()) {
            dev = dev.max((x - y).abs());
        }
    }
    c.at_most("space/gauge_vs_closed_form_functional", dev, 1e-6);
    Ok(())
}

fn spin_suite(c: &mut Checks) -> Result<()> {
    let n = c.cfg.samples;
    let mut all = models_for_checks()?;
    all.push(("euclidean2", NormModel::euclidean(2)?));
    for (name, model) in all {
        let spin = SpinFactor::new(model);
        let dim = spin.dim();
        let mut rng = Sampler::new(c.cfg.seed);
        let (mut sym, mut eq6, mut additivity, mut ou, mut recon, mut square) =
            (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
        for _ in 0..n {
            let e = LogicElement::Atom(rng.unit_vector(spin.model()));
            let f = LogicElement::Atom(rng.unit_vector(spin.model()));
            sym = sym.max(spin.symmetry_defect(&e, &f)?);
            eq6 = eq6.max(spin.eq6_defect(&e, &f)?);
            let mu = spin.state_of_atom(&f)?;
            additivity = additivity.max(
                (spin.eval_state_logic(&mu, &e)?
                    + spin.eval_state_logic(&mu, &e.orthocomplement())?
                    - 1.0)
                    .abs(),
            );
            let (s, t) = (rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
            ou = ou.max((spin.ou_norm(&combine(&e, s, t))? - s.abs().max(t.abs())).abs());
            let a = OUElement::new(rng.cube(dim), rng.uniform(-1.0, 1.0));
            let form = spin.spectral_decompose(&a)?;
            recon = recon.max(spin.ou_norm(&(&a - &form.reconstruct()))?);
            let sq = spin.power(&a, 2)?;
            square = square.max(spin.model().norm(&sq.x)? - sq.s);
        }
        let tol = spin.model().duality_tolerance();
        if name.starts_with("euclidean") {
            c.at_most(format!("spin/{name}/symmetry_defect"), sym, 1e-10);
        }
        c.at_most(format!("spin/{name}/eq6_defect"), eq6, tol);
        c.at_most(format!("spin/{name}/state_additivity"), additivity, tol);
        c.at_most(format!("spin/{name}/order_unit_norm_identity"), ou, 1e-12);
        c.at_most(format!("spin/{name}/spectral_reconstruction"), recon, 1e-12);
        c.at_most(
            format!("spin/{name}/square_positivity_margin"),
            square,
            1e-12,
        );
    }
    for p in [1.5, 3.0] {
        let spin = lp_spin_factor(p, 2)?;
        let mut rng = Sampler::new(c.cfg.seed);
        let mut sym = 0.0f64;
        for _ in 0..n {
            let e = LogicElement::Atom(rng.unit_vector(spin.model()));
            let f = LogicElement::Atom(rng.unit_vector(spin.model()));
            sym = sym.max(spin.symmetry_defect(&e, &f)?);
        }
        c.at_least(format!("spin/pnorm{p}/symmetry_defect_found"), sym, 0.05);
    }
    let spin = lp_spin_factor(3.0, 2)?;
    let (e, f) = figure1_pair(&spin, 3.0, 0.5)?;
    c.at_most(
        "spin/pnorm3/figure1_pair_defect",
        (spin.symmetry_defect(&e, &f)? - 0.125).abs(),
        1e-12,
    );
    let euclid = lp_spin_factor(2.0, 2)?;
    let mut rng = Sampler::new(c.cfg.seed);
    let mut bilinear = 0.0f64;
    for _ in 0..n {
        let mut draw = || OUElement::new(rng.cube(2), rng.uniform(-1.0, 1.0));
        let (a, b, d) = (draw(), draw(), draw());
        bilinear = bilinear.max(euclid.bilinearity_defect(&a, &b, &d)?);
    }
    c.at_most("spin/euclidean2/bilinearity_defect", bilinear, 1e-10);
    let mut rng = Sampler::new(c.cfg.seed);
    let mut found = 0.0f64;
    for _ in 0..n {
        let mut draw = || OUElement::new(rng.cube(2), rng.uniform(-1.0, 1.0));
        let (a, b, d) = (draw(), draw(), draw());
        found = found.max(spin.bilinearity_defect(&a, &b, &d)?);
    }
    c.at_least("spin/pnorm3/bilinearity_defect_found", found, 1e-3);
    let u = euclid.atom(Vector::new(vec![0.6, 0.8]))?;
    let v = euclid.atom(Vector::new(vec![-0.8, 0.6]))?;
    let rep = euclid.verify_lemma32(
        &[u.clone(), u.orthocomplement()],
        &[v.clone(), v.orthocomplement()],
    )?;
    c.holds(
        "spin/euclidean2/lemma32_counts",
        rep.counts_agree() && (rep.total_from_e - rep.total_from_f).abs() <= 1e-12,
        format!("{} = {}", rep.total_from_f, rep.total_from_e),
    );
    Ok(())
}

fn convex_suite(c: &mut Checks) -> Result<()> {
    let n = c.cfg.samples;
    let disk = ConvexBody::disk();
    let rep =
        duality_correspondence_check(&disk, &NormModel::euclidean(2)?, n.min(100), c.cfg.seed)?;
    c.at_most("convex/disk_vs_euclidean", rep.max_deviation, 1e-8);
    let ball = ConvexBody::pball(1.5)?;
    let rep =
        duality_correspondence_check(&ball, &NormModel::pnorm(3.0, 2)?, n.min(50), c.cfg.seed)?;
    c.at_most("convex/qball1.5_vs_pnorm3", rep.max_deviation, 1e-6);
    let limacon = ConvexBody::from_descriptor(&BodyDescriptor::Limacon { eps: 0.3 })?;
    c.at_least(
        "convex/limacon0.3/curvature_proxy",
        limacon.min_curvature_proxy(),
        0.0,
    );
    let found = search_eq6_defect(&limacon, 64)?;
    c.at_least("convex/limacon0.3/eq6_violation", found.defect, 0.01);
    for (name, body) in [
        ("disk", ConvexBody::disk()),
        ("pball3", ConvexBody::pball(3.0)?),
        ("pball1.5", ConvexBody::pball(1.5)?),
    ] {
        let found = search_eq6_defect(&body, 32)?;
        c.at_most(format!("convex/{name}/eq6_defect"), found.defect, 1e-8);
    }
    Ok(())
}

fn pillow_suite(c: &mut Checks) -> Result<()> {
    use num_rational::Rational64;
    use PillowAtom::*;
    let exact = |name: &str, got: Rational64, want: Rational64, c: &mut Checks| {
        c.holds(
            name.to_string(),
            got == want,
            format!("{got} (expected {want})"),
        );
    };
    exact(
        "pillow/tp_f2_given_e",
        pillow_tp(F2, E),
        Rational64::new(1, 3),
        c,
    );
    exact(
        "pillow/tp_e_given_f2",
        pillow_tp(E, F2),
        Rational64::new(1, 2),
        c,
    );
    exact(
        "pillow/tp_f1_given_f2",
        pillow_tp(F1, F2),
        Rational64::from_integer(0),
        c,
    );
    let rep = pillow_report();
    c.holds(
        "pillow/vertex_sum_given_pole",
        rep.vertex_sum_given_pole == "1",
        rep.vertex_sum_given_pole.clone(),
    );
    c.holds(
        "pillow/pole_sum_given_vertices",
        rep.pole_sum_given_vertices == "3/2",
        rep.pole_sum_given_vertices.clone(),
    );
    c.holds(
        "pillow/eq6_violated",
        !rep.eq6_holds && rep.eq6_defect == "1/3",
        format!(
            "P(f_k|e) + P(f_k|e') = {}, defect {}",
            rep.eq6_lhs, rep.eq6_defect
        ),
    );
    c.holds(
        "pillow/lemma32_witness",
        !rep.counts_agree && !rep.symmetric,
        format!("{} ≠ {}", rep.count_over_vertices, rep.count_over_poles),
    );
    Ok(())
}

pub fn run_checks(suite: &str, cfg: CheckConfig) -> Result<CheckReport> {
    if !SUITES.contains(&suite) {
        return Err(Error::UnknownSuite(suite.to_string()));
    }
    let mut c = Checks {
        cfg,
        entries: Vec::new(),
    };
    let want = |s: &str| suite == "all" || suite == s;
    if want("space") {
        space_suite(&mut c)?;
    }
    if want("spin") {
        spin_suite(&mut c)?;
    }
    if want("convex") {
        convex_suite(&mut c)?;
    }
    if want("pillow") {
        pillow_suite(&mut c)?;
    }
    let pass = c.entries.iter().all(|e| e.pass);
    Ok(CheckReport {
        suite: suite.to_string(),
        seed: cfg.seed,
        samples: cfg.samples,
        checks: c.entries,
        pass,
    })
}

impl CheckReport {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for e in &self.checks {
            let bound = match e.bound {
                Bound::AtMost => "<=",
                Bound::AtLeast => ">=",
            };
            let _ = write!(
                out,
                "{} {} measured {:e} {bound} {:e}",
                if e.pass { "PASS" } else { "FAIL" },
                e.name,
                e.measured,
                e.tolerance
            );
            if let Some(d) = &e.detail {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
        }
        out
    }
}

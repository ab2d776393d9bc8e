//! Acceptance suite. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p genspin --test acceptance -- --nocapture` to see them.

use std::f64::consts::TAU;

use genspin::body::BodyDescriptor;
use genspin::convex_logic::{
    antipodal, antipode_by_support, duality_correspondence_check, eq6_defect_convex,
    search_eq6_defect, tp_convex,
};
use genspin::harness::{figure1, figure1_pair, lp_spin_factor};
use genspin::pillow::{double_count, pillow_tp, PillowAtom, POLES, VERTICES};
use genspin::sampling::Sampler;
use genspin::spin_factor::spectral::combine;
use genspin::{ConvexBody, LogicElement, NormModel, OUElement, SpinFactor, Vector};
use num_rational::Rational64;

fn report(n: u32, what: &str, ok: bool, detail: String) {
    println!(
        "criterion {n:>2} {}: {what} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {what} ({detail})");
}

fn models() -> Vec<(&'static str, NormModel)> {
    vec![
        ("euclidean3", NormModel::euclidean(3).unwrap()),
        ("pnorm1.5", NormModel::pnorm(1.5, 3).unwrap()),
        ("pnorm3", NormModel::pnorm(3.0, 3).unwrap()),
        ("pnorm10", NormModel::pnorm(10.0, 2).unwrap()),
        (
            "pnorm3_weighted",
            NormModel::weighted_pnorm(3.0, vec![0.5, 1.0, 2.0]).unwrap(),
        ),
        (
            "gauge_pball3",
            NormModel::gauge(ConvexBody::pball(3.0).unwrap()).unwrap(),
        ),
        ("gauge_custom", NormModel::gauge(custom_body()).unwrap()),
    ]
}

/// A symmetric body given only by a radius table: the unit ball of
/// `|x|^4 + |y|^4 + x²y²`, a quartic curve with no closed-form dual.
fn custom_body() -> ConvexBody {
    let n = 512;
    let r_table = (0..n)
        .map(|k| {
            let t = TAU * k as f64 / n as f64;
            let (c, s) = (t.cos(), t.sin());
            (c.powi(4) + s.powi(4) + c * c * s * s).powf(-0.25)
        })
        .collect();
    ConvexBody::from_descriptor(&BodyDescriptor::Custom {
        r_table,
        anchor: None,
    })
    .unwrap()
}

fn atom_pair(spin: &SpinFactor, rng: &mut Sampler) -> (LogicElement, LogicElement) {
    (
        LogicElement::Atom(rng.unit_vector(spin.model())),
        LogicElement::Atom(rng.unit_vector(spin.model())),
    )
}

#[test]
fn c01_hilbert_symmetry() {
    let (mut sym, mut eq6, mut oracle) = (0.0f64, 0.0f64, 0.0f64);
    for dim in 1..=8 {
        let spin = SpinFactor::new(NormModel::euclidean(dim).unwrap());
        let mut rng = Sampler::new(100 + dim as u64);
        for _ in 0..1000 {
            let (e, f) = atom_pair(&spin, &mut rng);
            sym = sym.max(spin.symmetry_defect(&e, &f).unwrap());
            eq6 = eq6.max(spin.eq6_defect(&e, &f).unwrap());
            // ℙ(f|e) = ½(1 + ⟨u, v⟩) in a Hilbert space.
            let (u, v) = (e.atom_vector().unwrap(), f.atom_vector().unwrap());
            let inner: f64 = u.coords().iter().zip(v.coords()).map(|(a, b)| a * b).sum();
            let tp = spin.transition_probability(&f, &e).unwrap();
            oracle = oracle.max((tp - 0.5 * (1.0 + inner)).abs());
        }
    }
    report(
        1,
        "Euclidean dims 1-8: symmetric transition probabilities",
        sym <= 1e-10 && eq6 <= 1e-12 && oracle <= 1e-12,
        format!("max symmetry {sym:e} <= 1e-10, max eq6 {eq6:e} <= 1e-12, inner-product oracle {oracle:e}"),
    );
}

#[test]
fn c02_non_symmetry_for_p_not_2() {
    let mut worst = 0.0f64;
    let mut p3 = f64::NAN;
    for p in [1.5, 3.0, 10.0] {
        let spin = lp_spin_factor(p, 2).unwrap();
        let (e, f) = figure1_pair(&spin, p, 0.5).unwrap();
        let measured = spin.symmetry_defect(&e, &f).unwrap();
        let oracle = 0.5 * (0.5 - 0.5f64.powf(p - 1.0)).abs();
        worst = worst.max((measured - oracle).abs());
        if p == 3.0 {
            p3 = measured;
        }
    }
    report(
        2,
        "beta1 = 0.5 symmetry defect matches 1/2|0.5 - 0.5^(p-1)| for p = 1.5, 3, 10",
        worst <= 1e-12 && (p3 - 0.125).abs() <= 1e-12,
        format!("max deviation {worst:e} <= 1e-12, p=3 defect {p3}"),
    );
}

#[test]
fn c03_figure1_endpoints_and_point_symmetry() {
    let n = 201;
    let fig = figure1(&[1.3, 1.5, 2.0, 3.0, 10.0], n).unwrap();
    let mut exact = true;
    let (mut point_sym, mut p2_diag) = (0.0f64, 0.0f64);
    for col in &fig.columns {
        let ends = [col.backward[0], col.backward[n / 2], col.backward[n - 1]];
        exact &= ends == [0.0, 0.5, 1.0] && fig.betas[n / 2] == 0.0;
        for i in 0..n {
            assert_eq!(fig.betas[i], -fig.betas[n - 1 - i]);
            point_sym = point_sym.max((col.backward[i] + col.backward[n - 1 - i] - 1.0).abs());
            point_sym = point_sym.max((col.forward[i] + col.forward[n - 1 - i] - 1.0).abs());
            if col.p == 2.0 {
                p2_diag = p2_diag.max((col.forward[i] - col.backward[i]).abs());
            }
        }
    }
    report(
        3,
        "beta1 curves: exact endpoints, point symmetry, p = 2 diagonal",
        exact && point_sym <= 1e-12 && p2_diag <= 1e-12,
        format!("endpoints exact {exact}, |P(b)+P(-b)-1| {point_sym:e}, p=2 gap {p2_diag:e}"),
    );
}

#[test]
fn c04_eq6_in_every_model() {
    let mut lines = Vec::new();
    let mut worst = 0.0f64;
    for (name, model) in models() {
        let spin = SpinFactor::new(model);
        let mut rng = Sampler::new(4);
        let mut m = 0.0f64;
        for _ in 0..1000 {
            let (e, f) = atom_pair(&spin, &mut rng);
            m = m.max(spin.eq6_defect(&e, &f).unwrap());
        }
        worst = worst.max(m);
        lines.push(format!("{name} {m:.1e}"));
    }
    report(
        4,
        "P(f|e) + P(f|e') = 1 in every model",
        worst <= 1e-12,
        format!("{} <= 1e-12", lines.join(", ")),
    );
}

#[test]
fn c05_pillow_exact_values() {
    use PillowAtom::*;
    let q = Rational64::new;
    let mut ok = true;
    for f in VERTICES {
        ok &= pillow_tp(f, E) == q(1, 3) && pillow_tp(f, EPrime) == q(1, 3);
        ok &= pillow_tp(E, f) == q(1, 2) && pillow_tp(EPrime, f) == q(1, 2);
        ok &= pillow_tp(f, E) + pillow_tp(f, EPrime) == q(2, 3);
    }
    let sum: Rational64 = VERTICES.iter().map(|&f| pillow_tp(E, f)).sum();
    let sum_prime: Rational64 = VERTICES.iter().map(|&f| pillow_tp(EPrime, f)).sum();
    ok &= sum == q(3, 2) && sum_prime == q(3, 2);
    let by_vertices = double_count(&POLES, &VERTICES);
    let by_poles = double_count(&VERTICES, &POLES);
    ok &= by_vertices == q(3, 1) && by_poles == q(2, 1);
    report(
        5,
        "pillow rationals 1/3, 1/2, 3/2, 2/3 and the 3 vs 2 double count",
        ok,
        format!("sum_k P(e|f_k) = {sum}, double count {by_vertices} vs {by_poles}"),
    );
}

#[test]
fn c06_order_unit_norm_identity() {
    let mut worst = 0.0f64;
    for (_, model) in models() {
        let spin = SpinFactor::new(model);
        let mut rng = Sampler::new(6);
        for _ in 0..1000 {
            let e = LogicElement::Atom(rng.unit_vector(spin.model()));
            let (s, t) = (rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
            let norm = spin.ou_norm(&combine(&e, s, t)).unwrap();
            worst = worst.max((norm - s.abs().max(t.abs())).abs());
        }
    }
    report(
        6,
        "||s e + t e'|| = max(|s|, |t|)",
        worst <= 1e-12,
        format!("max deviation {worst:e} <= 1e-12"),
    );
}

#[test]
fn c07_spectral_calculus() {
    let (mut recon, mut idem) = (0.0f64, 0.0f64);
    let mut positive = true;
    for (_, model) in models() {
        let spin = SpinFactor::new(model);
        let dim = spin.dim();
        let mut rng = Sampler::new(7);
        for _ in 0..1000 {
            let a = OUElement::new(
                rng.cube(dim).scale(rng.uniform(0.0, 3.0)),
                rng.uniform(-2.0, 2.0),
            );
            let form = spin.spectral_decompose(&a).unwrap();
            recon = recon.max(spin.ou_norm(&(&a - &form.reconstruct())).unwrap());
            positive &= spin.is_positive(&spin.power(&a, 2).unwrap()).unwrap();
            let e = LogicElement::Atom(rng.unit_vector(spin.model())).to_element(dim);
            idem = idem.max(spin.ou_norm(&(&spin.power(&e, 2).unwrap() - &e)).unwrap());
        }
        for g in [LogicElement::Zero, LogicElement::One] {
            let g = g.to_element(dim);
            idem = idem.max(spin.ou_norm(&(&spin.power(&g, 2).unwrap() - &g)).unwrap());
        }
    }
    report(
        7,
        "spectral reconstruction, idempotent logic elements, positive squares",
        recon <= 1e-12 && idem <= 1e-12 && positive,
        format!("reconstruction {recon:e}, idempotence {idem:e}, all squares positive {positive}"),
    );
}

#[test]
fn c08_product_characterization() {
    let mut rng = Sampler::new(8);
    let euclid = SpinFactor::new(NormModel::euclidean(3).unwrap());
    let (mut bilinear, mut closed) = (0.0f64, 0.0f64);
    let draw =
        |dim: usize, rng: &mut Sampler| OUElement::new(rng.cube(dim), rng.uniform(-1.0, 1.0));
    for _ in 0..512 {
        let (a, b, c) = (draw(3, &mut rng), draw(3, &mut rng), draw(3, &mut rng));
        bilinear = bilinear.max(euclid.bilinearity_defect(&a, &b, &c).unwrap());
        // (x ⊕ s)∘(y ⊕ t) = (t x + s y) ⊕ (⟨x, y⟩ + s t)
        let (x, y) = (a.x.coords(), b.x.coords());
        let prod: Vec<f64> = x
            .iter()
            .zip(y)
            .map(|(xi, yi)| b.s * xi + a.s * yi)
            .collect();
        let inner: f64 = x.iter().zip(y).map(|(xi, yi)| xi * yi).sum();
        let oracle = OUElement::new(Vector::new(prod), inner + a.s * b.s);
        let got = euclid.jordan_product(&a, &b).unwrap();
        closed = closed.max(euclid.ou_norm(&(&got - &oracle)).unwrap());
    }
    let p3 = SpinFactor::new(NormModel::pnorm(3.0, 2).unwrap());
    let mut rng = Sampler::new(8);
    let mut found = 0.0f64;
    for _ in 0..512 {
        let (a, b, c) = (draw(2, &mut rng), draw(2, &mut rng), draw(2, &mut rng));
        found = found.max(p3.bilinearity_defect(&a, &b, &c).unwrap());
    }
    report(
        8,
        "Jordan product bilinear exactly in the Euclidean case",
        bilinear <= 1e-10 && closed <= 1e-12 && found >= 1e-3,
        format!("Euclidean defect {bilinear:e} <= 1e-10, closed form {closed:e} <= 1e-12, p=3 witness {found:.4} >= 1e-3"),
    );
}

#[test]
fn c09_convex_spin_equivalence() {
    let disk = ConvexBody::disk();
    let euclid = NormModel::euclidean(2).unwrap();
    let d = duality_correspondence_check(&disk, &euclid, 100, 9).unwrap();
    // Independent check of the disk values against ½(1 + cos Δθ).
    let mut rng = Sampler::new(9);
    let mut cosine = 0.0f64;
    for _ in 0..100 {
        let (t1, t2) = (rng.uniform(0.0, TAU), rng.uniform(0.0, TAU));
        let tp = tp_convex(&disk, &disk.boundary_point(t1), &disk.boundary_point(t2)).unwrap();
        cosine = cosine.max((tp - 0.5 * (1.0 + (t1 - t2).cos())).abs());
    }
    let ball = ConvexBody::pball(1.5).unwrap();
    let q = duality_correspondence_check(&ball, &NormModel::pnorm(3.0, 2).unwrap(), 50, 9).unwrap();
    report(
        9,
        "body transition probabilities match the dual spin factor",
        d.max_deviation <= 1e-8 && cosine <= 1e-8 && q.max_deviation <= 1e-6,
        format!(
            "disk {:e} <= 1e-8 (cosine oracle {cosine:e}), q=1.5 ball vs p=3 {:e} <= 1e-6",
            d.max_deviation, q.max_deviation
        ),
    );
}

#[test]
fn c10_eq6_violation_by_limacon() {
    let limacon = ConvexBody::from_descriptor(&BodyDescriptor::Limacon { eps: 0.3 }).unwrap();
    let certified = limacon.min_curvature_proxy() > 0.0 && !limacon.is_centrally_symmetric();
    let found = search_eq6_defect(&limacon, 96).unwrap();
    let (mut symmetric, mut routes) = (0.0f64, 0.0f64);
    for (body, curved) in [
        (ConvexBody::disk(), true),
        (ConvexBody::pball(1.5).unwrap(), true),
        (ConvexBody::pball(3.0).unwrap(), true),
        (ConvexBody::pball(6.0).unwrap(), false),
        (custom_body(), true),
    ] {
        symmetric = symmetric.max(search_eq6_defect(&body, 48).unwrap().defect);
        let mut rng = Sampler::new(10);
        for _ in 0..100 {
            let w1 = body.boundary_point(rng.uniform(0.0, TAU));
            let w2 = body.boundary_point(rng.uniform(0.0, TAU));
            symmetric = symmetric.max(eq6_defect_convex(&body, &w1, &w2).unwrap());
            // The reflected antipode must also be what the support query finds,
            // wherever the contact is well conditioned.
            if curved {
                let a = antipodal(&body, &w1).unwrap();
                let b = antipode_by_support(&body, &w1).unwrap();
                routes = routes.max((a.coords[0] - b.coords[0]).hypot(a.coords[1] - b.coords[1]));
            }
        }
    }
    report(
        10,
        "limacon(0.3) violates P(f|e) + P(f|e') = 1, symmetric bodies do not",
        certified && found.defect >= 0.01 && symmetric <= 1e-8 && routes <= 1e-8,
        format!(
            "certified {certified}, limacon defect {:.5} >= 0.01 at ({:.4}, {:.4}), symmetric bodies {symmetric:e} <= 1e-8, antipode routes {routes:e}",
            found.defect, found.theta1, found.theta2
        ),
    );
}

#[test]
fn c11_numerical_duality_map() {
    let p = 3.0;
    let gauge = NormModel::gauge(ConvexBody::pball(p).unwrap()).unwrap();
    let closed = NormModel::pnorm(p, 2).unwrap();
    let mut rng = Sampler::new(11);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let u = rng.unit_vector(&closed);
        let rho = gauge.norming_functional(&u).unwrap();
        // β_k = sign(α_k)|α_k|^{p−1} on the unit sphere.
        for (b, a) in rho.coords().iter().zip(u.coords()) {
            let oracle = a.signum() * a.abs().powf(p - 1.0);
            worst = worst.max((b - oracle).abs());
        }
    }
    report(
        11,
        "numerical duality map of the p = 3 ball matches sign(a)|a|^(p-1)",
        worst <= 1e-6,
        format!("max coordinate deviation {worst:e} <= 1e-6"),
    );
}

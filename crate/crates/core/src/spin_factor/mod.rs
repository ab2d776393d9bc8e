//! The order unit space `A = X ⊕ ℝ` over a smooth strictly convex space `X`.
//!
//! `x ⊕ s ≥ 0` iff `‖x‖ ≤ s`, the order unit is `𝕀 = 0 ⊕ 1` and the
//! order-unit norm is `‖x ⊕ s‖ = ‖x‖ + |s|`. The logic is the set of
//! extreme points of `[0, 𝕀]` (see [`logic`]); states are dual functionals
//! of norm at most one acting by `μ(x ⊕ s) = ρ(x) + s`, and the transition
//! probability from an atom `½(u ⊕ 1)` to `½(v ⊕ 1)` is `½(ρ_u(v) + 1)`.

pub mod logic;
pub mod spectral;

use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

pub use logic::{LogicElement, ATOM_EQ_TOL};
pub use spectral::SpectralForm;

use crate::error::{Error, Result};
use crate::space::{dual_pair, DualFunctional, NormModel, Vector};

/// An element `x ⊕ s` of `A`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OUElement {
    pub x: Vector,
    pub s: f64,
}

impl OUElement {
    pub fn new(x: Vector, s: f64) -> Self {
        OUElement { x, s }
    }

    pub fn zero(dim: usize) -> Self {
        OUElement::new(Vector::zeros(dim), 0.0)
    }

    /// The order unit `𝕀 = 0 ⊕ 1`.
    pub fn unit(dim: usize) -> Self {
        OUElement::new(Vector::zeros(dim), 1.0)
    }

    pub fn scale(&self, c: f64) -> Self {
        OUElement::new(self.x.scale(c), c * self.s)
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }
}

impl Add for &OUElement {
    type Output = OUElement;
    fn add(self, rhs: &OUElement) -> OUElement {
        OUElement::new(&self.x + &rhs.x, self.s + rhs.s)
    }
}

impl Sub for &OUElement {
    type Output = OUElement;
    fn sub(self, rhs: &OUElement) -> OUElement {
        OUElement::new(&self.x - &rhs.x, self.s - rhs.s)
    }
}

/// A state `μ(x ⊕ s) = ρ(x) + s`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct State {
    rho: DualFunctional,
}

impl State {
    pub fn rho(&self) -> &DualFunctional {
        &self.rho
    }
}

/// How atom constructors treat vectors that are not exactly unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomPolicy {
    /// Reject when `|‖u‖ − 1| > 1e-9`, otherwise normalize.
    Strict,
    /// Normalize any non-zero vector.
    Lenient,
}

/// Tolerance on `|‖u‖ − 1|` accepted by [`AtomPolicy::Strict`].
pub const UNIT_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct SpinFactor {
    model: NormModel,
    policy: AtomPolicy,
}

impl SpinFactor {
    pub fn new(model: NormModel) -> Self {
        SpinFactor {
            model,
            policy: AtomPolicy::Strict,
        }
    }

    pub fn with_policy(mut self, policy: AtomPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn model(&self) -> &NormModel {
        &self.model
    }

    pub fn dim(&self) -> usize {
        self.model.dim()
    }

    fn check_element(&self, a: &OUElement) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: a.dim(),
            });
        }
        if !a.s.is_finite() || !a.x.is_finite() {
            return Err(Error::NonFinite("element"));
        }
        Ok(())
    }

    /// The atom `½(u ⊕ 1)`, normalized according to the atom policy.
    pub fn atom(&self, u: Vector) -> Result<LogicElement> {
        let n = self.model.norm(&u)?;
        if n == 0.0 {
            return Err(Error::ZeroVector);
        }
        if self.policy == AtomPolicy::Strict && (n - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm: n });
        }
        Ok(LogicElement::Atom(if n == 1.0 {
            u
        } else {
            u.scale(1.0 / n)
        }))
    }

    /// `‖x ⊕ s‖ = ‖x‖ + |s|`.
    pub fn ou_norm(&self, a: &OUElement) -> Result<f64> {
        self.check_element(a)?;
        Ok(self.model.norm(&a.x)? + a.s.abs())
    }

    /// `0 ≤ x ⊕ s` iff `‖x‖ ≤ s`.
    pub fn is_positive(&self, a: &OUElement) -> Result<bool> {
        self.check_element(a)?;
        Ok(self.model.norm(&a.x)? <= a.s + self.model.tolerances().closed_form)
    }

    /// The state with functional `rho`; its dual norm must not exceed 1.
    pub fn state(&self, rho: DualFunctional) -> Result<State> {
        let n = self.model.dual_norm(&rho)?;
        if n > 1.0 + self.model.duality_tolerance() {
            return Err(Error::InvalidState(n));
        }
        Ok(State { rho })
    }

    /// The unique state `μ_e` with `μ_e(e) = 1`.
    pub fn state_of_atom(&self, e: &LogicElement) -> Result<State> {
        let u = e.atom_vector().ok_or(Error::NotAnAtom)?;
        Ok(State {
            rho: self.model.norming_functional(u)?,
        })
    }

    /// `μ_tr`, the state with `ρ = 0`.
    pub fn trace_state(&self) -> State {
        State {
            rho: DualFunctional::zeros(self.dim()),
        }
    }

    pub fn eval_state(&self, mu: &State, a: &OUElement) -> Result<f64> {
        self.check_element(a)?;
        Ok(dual_pair(&mu.rho, &a.x)? + a.s)
    }

    pub fn eval_state_logic(&self, mu: &State, e: &LogicElement) -> Result<f64> {
        Ok(match e {
            LogicElement::Zero => 0.0,
            LogicElement::One => 1.0,
            LogicElement::Atom(u) => 0.5 * (dual_pair(&mu.rho, u)? + 1.0),
        })
    }

    /// `ℙ(f | e) = μ_e(f)` for an atom `e`.
    pub fn transition_probability(&self, f: &LogicElement, e: &LogicElement) -> Result<f64> {
        let mu = self.state_of_atom(e)?;
        self.eval_state_logic(&mu, f)
    }

    /// `M[i][j] = ℙ(atoms[j] | atoms[i])`.
    pub fn tp_matrix(&self, atoms: &[LogicElement]) -> Result<Vec<Vec<f64>>> {
        let states = atoms
            .iter()
            .map(|e| self.state_of_atom(e))
            .collect::<Result<Vec<_>>>()?;
        states
            .iter()
            .map(|mu| atoms.iter().map(|f| self.eval_state_logic(mu, f)).collect())
            .collect()
    }

    /// `|ℙ(f|e) − ℙ(e|f)|`.
    pub fn symmetry_defect(&self, e: &LogicElement, f: &LogicElement) -> Result<f64> {
        Ok((self.transition_probability(f, e)? - self.transition_probability(e, f)?).abs())
    }

    /// `|ℙ(f|e) + ℙ(f|e′) − 1|`.
    pub fn eq6_defect(&self, e: &LogicElement, f: &LogicElement) -> Result<f64> {
        let forward = self.transition_probability(f, e)?;
        let complement = self.transition_probability(f, &e.orthocomplement())?;
        Ok((forward + complement - 1.0).abs())
    }

    /// Double count over two orthogonal decompositions of the same element.
    ///
    /// `total_from_f` is `Σ_k Σ_l ℙ(e_l | f_k)`, which equals `n` when every
    /// `f_k` lies below `Σ e_l`; `total_from_e` is `Σ_l Σ_k ℙ(f_k | e_l)`,
    /// which equals `m`. Symmetric transition probabilities force the two
    /// sums, hence `m` and `n`, to agree.
    pub fn verify_lemma32(
        &self,
        family_e: &[LogicElement],
        family_f: &[LogicElement],
    ) -> Result<Lemma32Report> {
        for family in [family_e, family_f] {
            if family.is_empty() || family.iter().any(|e| !e.is_atom()) {
                return Err(Error::NotAnAtom);
            }
            for (i, a) in family.iter().enumerate() {
                for b in &family[i + 1..] {
                    if !self.orthogonal(a, b) {
                        return Err(Error::NonOrthogonalFamily);
                    }
                }
            }
        }
        let sum = |fam: &[LogicElement]| {
            fam.iter().fold(OUElement::zero(self.dim()), |acc, e| {
                &acc + &e.to_element(self.dim())
            })
        };
        let diff = &sum(family_e) - &sum(family_f);
        if self.ou_norm(&diff)? > ATOM_EQ_TOL {
            return Err(Error::FamilySumMismatch);
        }
        let mut total_from_f = 0.0;
        let mut total_from_e = 0.0;
        let mut max_pair_asymmetry: f64 = 0.0;
        for f in family_f {
            for e in family_e {
                let ef = self.transition_probability(e, f)?;
                let fe = self.transition_probability(f, e)?;
                total_from_f += ef;
                total_from_e += fe;
                max_pair_asymmetry = max_pair_asymmetry.max((ef - fe).abs());
            }
        }
        Ok(Lemma32Report {
            m: family_e.len(),
            n: family_f.len(),
            total_from_f,
            total_from_e,
            max_pair_asymmetry,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma32Report {
    pub m: usize,
    pub n: usize,
    pub total_from_f: f64,
    pub total_from_e: f64,
    pub max_pair_asymmetry: f64,
}

impl Lemma32Report {
    pub fn counts_agree(&self) -> bool {
        self.m == self.n
    }
}

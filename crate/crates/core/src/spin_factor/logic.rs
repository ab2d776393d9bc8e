//! The quantum logic `ext[0, 𝕀] = {0, 𝕀} ∪ {½(u ⊕ 1) : ‖u‖ = 1}`.

use serde::{Deserialize, Serialize};

use super::{OUElement, SpinFactor};
use crate::space::Vector;

/// Atom vectors closer than this (in the model norm) are the same atom.
pub const ATOM_EQ_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", content = "u")]
pub enum LogicElement {
    Zero,
    One,
    /// The atom `½(u ⊕ 1)` for a unit vector `u`.
    Atom(Vector),
}

impl LogicElement {
    pub fn is_atom(&self) -> bool {
        matches!(self, LogicElement::Atom(_))
    }

    pub fn atom_vector(&self) -> Option<&Vector> {
        match self {
            LogicElement::Atom(u) => Some(u),
            _ => None,
        }
    }

    /// `e′ = 𝕀 − e`.
    pub fn orthocomplement(&self) -> LogicElement {
        match self {
            LogicElement::Zero => LogicElement::One,
            LogicElement::One => LogicElement::Zero,
            LogicElement::Atom(u) => LogicElement::Atom(-u),
        }
    }

    /// The element of `A` this logic element denotes.
    pub fn to_element(&self, dim: usize) -> OUElement {
        match self {
            LogicElement::Zero => OUElement::zero(dim),
            LogicElement::One => OUElement::unit(dim),
            LogicElement::Atom(u) => OUElement::new(u.scale(0.5), 0.5),
        }
    }
}

impl SpinFactor {
    /// Equality in the logic; atoms compare by their unit vectors.
    pub fn logic_eq(&self, e: &LogicElement, f: &LogicElement) -> bool {
        match (e, f) {
            (LogicElement::Zero, LogicElement::Zero) | (LogicElement::One, LogicElement::One) => {
                true
            }
            (LogicElement::Atom(u), LogicElement::Atom(v)) => self
                .model()
                .norm(&(u - v))
                .map(|d| d <= ATOM_EQ_TOL)
                .unwrap_or(false),
            _ => false,
        }
    }

    /// `e ≤ f` holds only if `e = 0`, `f = 𝕀` or `e = f`.
    pub fn leq(&self, e: &LogicElement, f: &LogicElement) -> bool {
        matches!(e, LogicElement::Zero) || matches!(f, LogicElement::One) || self.logic_eq(e, f)
    }

    pub fn orthogonal(&self, e: &LogicElement, f: &LogicElement) -> bool {
        self.leq(e, &f.orthocomplement())
    }

    pub fn lattice_sup(&self, e: &LogicElement, f: &LogicElement) -> LogicElement {
        match (e, f) {
            (LogicElement::Zero, g) | (g, LogicElement::Zero) => g.clone(),
            (LogicElement::One, _) | (_, LogicElement::One) => LogicElement::One,
            _ if self.logic_eq(e, f) => e.clone(),
            _ => LogicElement::One,
        }
    }

    pub fn lattice_inf(&self, e: &LogicElement, f: &LogicElement) -> LogicElement {
        match (e, f) {
            (LogicElement::One, g) | (g, LogicElement::One) => g.clone(),
            (LogicElement::Zero, _) | (_, LogicElement::Zero) => LogicElement::Zero,
            _ if self.logic_eq(e, f) => e.clone(),
            _ => LogicElement::Zero,
        }
    }

    /// The logic element `a` is, if `a` is an extreme point of `[0, 𝕀]`.
    pub fn as_logic_element(&self, a: &OUElement) -> Option<LogicElement> {
        let n = self.model().norm(&a.x).ok()?;
        if n <= ATOM_EQ_TOL {
            if a.s.abs() <= ATOM_EQ_TOL {
                return Some(LogicElement::Zero);
            }
            if (a.s - 1.0).abs() <= ATOM_EQ_TOL {
                return Some(LogicElement::One);
            }
            return None;
        }
        if (n - 0.5).abs() <= ATOM_EQ_TOL && (a.s - 0.5).abs() <= ATOM_EQ_TOL {
            return Some(LogicElement::Atom(a.x.scale(1.0 / n)));
        }
        None
    }

    /// Membership in `ext[0, 𝕀]`.
    pub fn is_extreme_unit_interval(&self, a: &OUElement) -> bool {
        self.as_logic_element(a).is_some()
    }
}

//! Spectral decomposition `x ⊕ s = (s + ‖x‖)e + (s − ‖x‖)e′` and the
//! functional calculus built on it.

use serde::Serialize;

use super::{LogicElement, OUElement, SpinFactor};
use crate::error::Result;
use crate::space::Vector;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralForm {
    pub atom: LogicElement,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    /// Set for multiples of `𝕀`, whose decomposition is not unique; the
    /// atom is then the first basis atom by convention.
    pub scalar_flag: bool,
}

impl SpectralForm {
    /// `λ₊e + λ₋e′`.
    pub fn reconstruct(&self) -> OUElement {
        combine(&self.atom, self.lambda_plus, self.lambda_minus)
    }
}

/// `s·e + t·e′ = ½(s − t)u ⊕ ½(s + t)` for the atom `e = ½(u ⊕ 1)`.
pub fn combine(atom: &LogicElement, s: f64, t: f64) -> OUElement {
    let u = atom.atom_vector().expect("spectral atoms are always atoms");
    OUElement::new(u.scale(0.5 * (s - t)), 0.5 * (s + t))
}

impl SpinFactor {
    pub fn spectral_decompose(&self, a: &OUElement) -> Result<SpectralForm> {
        self.check_element(a)?;
        let n = self.model().norm(&a.x)?;
        if n == 0.0 {
            return Ok(SpectralForm {
                atom: LogicElement::Atom(
                    Vector::basis(self.dim(), 0)
                        .scale(1.0 / self.model().norm(&Vector::basis(self.dim(), 0))?),
                ),
                lambda_plus: a.s,
                lambda_minus: a.s,
                scalar_flag: true,
            });
        }
        Ok(SpectralForm {
            atom: LogicElement::Atom(a.x.scale(1.0 / n)),
            lambda_plus: a.s + n,
            lambda_minus: a.s - n,
            scalar_flag: false,
        })
    }

    /// `φ(a) = φ(λ₊)e + φ(λ₋)e′`.
    pub fn apply_function(&self, a: &OUElement, phi: impl Fn(f64) -> f64) -> Result<OUElement> {
        let form = self.spectral_decompose(a)?;
        if form.scalar_flag {
            return Ok(OUElement::unit(self.dim()).scale(phi(form.lambda_plus)));
        }
        Ok(combine(
            &form.atom,
            phi(form.lambda_plus),
            phi(form.lambda_minus),
        ))
    }

    pub fn power(&self, a: &OUElement, n: u32) -> Result<OUElement> {
        self.apply_function(a, |l| l.powi(n as i32))
    }

    /// `a ∘ b = ¼((a + b)² − (a − b)²)` with squares from the spectral calculus.
    pub fn jordan_product(&self, a: &OUElement, b: &OUElement) -> Result<OUElement> {
        let plus = self.power(&(a + b), 2)?;
        let minus = self.power(&(a - b), 2)?;
        Ok((&plus - &minus).scale(0.25))
    }

    /// `‖(a + b)∘c − a∘c − b∘c‖`.
    pub fn bilinearity_defect(&self, a: &OUElement, b: &OUElement, c: &OUElement) -> Result<f64> {
        let lhs = self.jordan_product(&(a + b), c)?;
        let ac = self.jordan_product(a, c)?;
        let bc = self.jordan_product(b, c)?;
        self.ou_norm(&(&(&lhs - &ac) - &bc))
    }
}

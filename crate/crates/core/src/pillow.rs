//! Relational model of the triangular pillow.
//!
//! Five atoms: the vertices `f₁, f₂, f₃` (pairwise orthogonal, summing to
//! `𝕀`) and the poles `e, e′`. Only the transition probabilities between
//! these atoms are modelled; all of them are exact rationals.

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PillowAtom {
    F1,
    F2,
    F3,
    E,
    EPrime,
}

use PillowAtom::*;

pub const VERTICES: [PillowAtom; 3] = [F1, F2, F3];
pub const POLES: [PillowAtom; 2] = [E, EPrime];
pub const ALL: [PillowAtom; 5] = [F1, F2, F3, E, EPrime];

impl PillowAtom {
    pub fn is_vertex(self) -> bool {
        matches!(self, F1 | F2 | F3)
    }

    pub fn name(self) -> &'static str {
        match self {
            F1 => "f1",
            F2 => "f2",
            F3 => "f3",
            E => "e",
            EPrime => "e'",
        }
    }

    /// Orthocomplement, where it is again one of the five atoms.
    pub fn orthocomplement(self) -> Option<PillowAtom> {
        match self {
            E => Some(EPrime),
            EPrime => Some(E),
            _ => None,
        }
    }
}

impl fmt::Display for PillowAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn orthogonal(a: PillowAtom, b: PillowAtom) -> bool {
    a != b && (a.is_vertex() && b.is_vertex() || !a.is_vertex() && !b.is_vertex())
}

/// `ℙ(target | source)`.
pub fn pillow_tp(target: PillowAtom, source: PillowAtom) -> Rational64 {
    if target == source {
        Rational64::from_integer(1)
    } else if orthogonal(target, source) {
        Rational64::from_integer(0)
    } else if target.is_vertex() {
        Rational64::new(1, 3)
    } else {
        Rational64::new(1, 2)
    }
}

/// `Σ_k Σ_l ℙ(targets_l | sources_k)`.
pub fn double_count(targets: &[PillowAtom], sources: &[PillowAtom]) -> Rational64 {
    sources
        .iter()
        .flat_map(|&s| targets.iter().map(move |&t| pillow_tp(t, s)))
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalEntry {
    pub target: PillowAtom,
    pub source: PillowAtom,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PillowReport {
    pub table: Vec<RationalEntry>,
    /// `Σ_k ℙ(f_k | e)`.
    pub vertex_sum_given_pole: String,
    /// `Σ_k ℙ(e | f_k)`.
    pub pole_sum_given_vertices: String,
    /// `ℙ(f_k | e) + ℙ(f_k | e′)`.
    pub eq6_lhs: String,
    pub eq6_defect: String,
    pub eq6_holds: bool,
    /// Double count with the vertices as sources: `Σ_k Σ_l ℙ(e_l | f_k)`.
    pub count_over_vertices: String,
    /// Double count with the poles as sources: `Σ_l Σ_k ℙ(f_k | e_l)`.
    pub count_over_poles: String,
    pub counts_agree: bool,
    pub symmetric: bool,
}

fn r(v: Rational64) -> String {
    v.to_string()
}

impl PillowReport {
    pub fn to_text(&self) -> String {
        let mut out = String::from("transition probabilities P(target | source)\n");
        out.push_str("source\\target");
        for t in ALL {
            out.push_str(&format!("\t{t}"));
        }
        out.push('\n');
        for s in ALL {
            out.push_str(s.name());
            for t in ALL {
                out.push_str(&format!("\t{}", pillow_tp(t, s)));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "sum_k P(f_k|e) = {}\nsum_k P(e|f_k) = {}\nP(f_k|e) + P(f_k|e') = {} (defect {}, eq6 {})\n",
            self.vertex_sum_given_pole,
            self.pole_sum_given_vertices,
            self.eq6_lhs,
            self.eq6_defect,
            if self.eq6_holds { "holds" } else { "violated" },
        ));
        out.push_str(&format!(
            "double count: {} over vertices vs {} over poles ({})\n",
            self.count_over_vertices,
            self.count_over_poles,
            if self.counts_agree { "equal" } else { "3 != 2" },
        ));
        out.push_str(&format!(
            "verdict: {}\n",
            if self.symmetric {
                "symmetric"
            } else {
                "non-symmetric"
            }
        ));
        out
    }
}

pub fn pillow_report() -> PillowReport {
    let table = ALL
        .iter()
        .flat_map(|&s| {
            ALL.iter().map(move |&t| RationalEntry {
                target: t,
                source: s,
                value: r(pillow_tp(t, s)),
            })
        })
        .collect();
    let eq6_lhs = pillow_tp(F1, E) + pillow_tp(F1, EPrime);
    let diff = eq6_lhs - 1;
    let eq6_defect = if diff < Rational64::from_integer(0) {
        -diff
    } else {
        diff
    };
    let over_vertices = double_count(&POLES, &VERTICES);
    let over_poles = double_count(&VERTICES, &POLES);
    let symmetric = ALL
        .iter()
        .all(|&a| ALL.iter().all(|&b| pillow_tp(a, b) == pillow_tp(b, a)));
    PillowReport {
        table,
        vertex_sum_given_pole: r(VERTICES.iter().map(|&f| pillow_tp(f, E)).sum()),
        pole_sum_given_vertices: r(VERTICES.iter().map(|&f| pillow_tp(E, f)).sum()),
        eq6_lhs: r(eq6_lhs),
        eq6_defect: r(eq6_defect),
        eq6_holds: eq6_defect == Rational64::from_integer(0),
        count_over_vertices: r(over_vertices),
        count_over_poles: r(over_poles),
        counts_agree: over_vertices == over_poles,
        symmetric,
    }
}

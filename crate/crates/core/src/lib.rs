//! Generalized spin factors `X ⊕ ℝ` over smooth strictly convex normed
//! spaces, their binary logics and transition probabilities, and the
//! corresponding logics of planar convex bodies.

pub mod body;
pub mod convex_logic;
pub mod error;
pub mod harness;
pub mod pillow;
pub mod sampling;
pub mod space;
pub mod spin_factor;

pub use body::{BodyDescriptor, ConvexBody};
pub use error::{Error, Result};
pub use space::{DualFunctional, ModelDescriptor, NormModel, Vector};
pub use spin_factor::{LogicElement, OUElement, SpinFactor, State};

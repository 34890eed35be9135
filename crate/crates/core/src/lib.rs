//! Convex polytopes and their inner parallel bodies.
//!
//! Bodies carry both a halfspace and a vertex representation. On top of that
//! data model the crate builds erosion by balls and by polytopes, form bodies,
//! the extremal body `Ω + tΩ*`, the usual functionals (volume, surface area,
//! inradius, width, quermassintegrals) and a set of checkers that turn the
//! perimeter bound `|∂Ω_t| ≥ (1 − t/r)₊^{n−1} |∂Ω|` and its supporting lemmas
//! into machine-checkable reports.

pub mod body;
pub mod error;
pub mod metrics;
pub mod numeric;
pub mod parallel;
pub mod verify;

pub use body::{ConvexBody, HalfSpace};
pub use error::{GeomError, Result};
pub use metrics::{InballResult, SteinerCoefficients, Width};
pub use numeric::{vector, Tolerance, Vector};
pub use parallel::Erosion;

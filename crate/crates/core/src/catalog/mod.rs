//! The Monster fusion law and the Norton-Sakuma algebras.

mod algebra;
mod fusion;
mod ns;

pub use algebra::{Algebra, AxisReport, FormReport};
pub use fusion::FusionLaw;
pub use ns::{ns_algebra, orbit_law_holds, perm_matrix, NSAlgebra, NsReport, NsType};

//! Optimal three-material (stiff / intermediate / void) 2D elastic composites.
//!
//! The crate provides, for plane stress problems with the zero-Poisson toy law
//! `W(κ, σ) = ½ κ Tr(σ²)`:
//!
//! - exact 2×2 symmetric stress algebra ([`tensor`]),
//! - lower bounds on effective compliance: Wiener, Hashin-Shtrikman, the
//!   improved three-material bound and a numerical translation bound with
//!   pointwise constraints ([`bounds`]),
//! - the isotropic component of the three-well quasiconvex envelope with a
//!   brute-force oracle ([`envelope`]),
//! - constructive upper bounds through hierarchical laminates and the regime
//!   map over load eigenvalues ([`laminate`]),
//! - a periodic unit-cell homogenizer on pixel grids ([`cellfem`]),
//! - a relaxed multimaterial compliance optimizer for cantilever-type design
//!   problems ([`topopt`]).
//!
//! Energy conventions: tensor operations use `½ κ Tr(σ²)`; the isotropic
//! envelope uses the scalar intensity `s` with pure-material energy `½ κ s²`,
//! which corresponds to the tensor load `σ = (s/√2)·I` (so that `Tr σ² = s²`).

pub mod bounds;
pub mod cellfem;
pub mod envelope;
pub mod fem;
pub mod imageio;
pub mod laminate;
pub mod opt;
pub mod phase;
pub mod tensor;
pub mod topopt;

pub use phase::{Phase, PhaseSet};
pub use tensor::StressTensor;

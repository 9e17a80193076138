//! Parabolic subgroups of Artin groups, computationally.
//!
//! Starting from a labeled graph Γ this crate provides:
//!
//! * [`coxeter`]: the word problem and ShortLex canonical forms in `W[Γ]`;
//! * [`parabolic`]: coset and double-coset decompositions with respect to
//!   standard parabolic subgroups `W_X`, `W_Y`;
//! * [`artin`]: words in `A[Γ]`, the projection `θ : A → W`, the set-section
//!   `ι : W → A`, and equality oracles for free, right-angled and dihedral
//!   Artin groups;
//! * [`retraction`]: the set-retraction `π_X : A → A_X`, transport of
//!   parabolic conjugates through `ι`, and the pipeline that rewrites a
//!   conjugate `α A_Y α⁻¹ ⊆ A_X` as `γ A_{Y'} γ⁻¹` with `γ ∈ A_X`;
//! * [`reflection`]: multiplication tables of finite `W` from the geometric
//!   representation, independent of the word kernel;
//! * [`verify`]: property suites exercising all of the above, run through
//!   [`par`] either on one thread or with rayon.

pub mod artin;
pub mod coxeter;
pub mod error;
pub mod par;
pub mod parabolic;
pub mod presentation;
pub mod reflection;
pub mod retraction;
pub mod verify;

/// Largest supported number of vertices in Γ.
pub const MAX_GENERATORS: usize = 64;

pub use coxeter::{Coxeter, CoxeterElement, CoxeterWord};
pub use error::{Error, Result};
pub use presentation::{GeneratorId, GeneratorSubset, Label, Presentation};

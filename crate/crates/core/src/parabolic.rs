//! Coset and double-coset decompositions with respect to standard parabolic
//! subgroups of `W`.
//!
//! Every element `u` factors uniquely as `u = v w` with `v ∈ W_X` and `w`
//! of minimal length in `W_X u`; more generally each double coset
//! `W_X u W_Y` has a unique element `w0` of minimal length and
//! `u = u1 w0 u2` with lengths adding up. Both factorizations are found by
//! stripping descents.

use serde::Serialize;

use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::Result;
use crate::presentation::{GeneratorId, GeneratorSubset};

/// `u = v w` with `v ∈ W_X` and `w` `(X, ∅)`-minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetDecomposition {
    pub v: CoxeterElement,
    pub w: CoxeterElement,
}

/// `u = u1 w0 u2` with `u1 ∈ W_X`, `u2 ∈ W_Y`, `w0` `(X, Y)`-minimal and
/// `ℓ(u) = ℓ(u1) + ℓ(w0) + ℓ(u2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleCosetDecomposition {
    pub u1: CoxeterElement,
    pub w0: CoxeterElement,
    pub u2: CoxeterElement,
}

/// JSON view of a decomposition, as canonical words.
#[derive(Serialize)]
pub struct CosetJson {
    pub v: String,
    pub w: String,
}

#[derive(Serialize)]
pub struct DoubleCosetJson {
    pub u1: String,
    pub w0: String,
    pub u2: String,
}

fn least(set: GeneratorSubset) -> Option<GeneratorId> {
    set.first()
}

impl Coxeter {
    /// Strips left descents in `X` (least index first) until none remain.
    pub fn decompose_left(&self, x: GeneratorSubset, u: &CoxeterElement) -> Result<CosetDecomposition> {
        self.decompose_left_with(x, u, least)
    }

    /// [`Coxeter::decompose_left`] with a caller-chosen stripping order.
    /// The result does not depend on `pick`.
    pub fn decompose_left_with(
        &self,
        x: GeneratorSubset,
        u: &CoxeterElement,
        mut pick: impl FnMut(GeneratorSubset) -> Option<GeneratorId>,
    ) -> Result<CosetDecomposition> {
        let mut v = self.identity();
        let mut w = u.clone();
        while let Some(s) = pick(self.left_descents(&w)?.intersection(x)) {
            v = self.mul_generator(&v, s)?;
            w = self.generator_mul(s, &w)?;
        }
        Ok(CosetDecomposition { v, w })
    }

    /// True iff `u` is the shortest element of `W_X u W_Y`.
    pub fn is_minimal(&self, x: GeneratorSubset, y: GeneratorSubset, u: &CoxeterElement) -> Result<bool> {
        Ok(self.left_descents(u)?.intersection(x).is_empty() && self.right_descents(u)?.intersection(y).is_empty())
    }

    /// Alternates left sweeps over `X` and right sweeps over `Y` until
    /// neither side has a descent left.
    pub fn double_coset_decompose(
        &self,
        x: GeneratorSubset,
        y: GeneratorSubset,
        u: &CoxeterElement,
    ) -> Result<DoubleCosetDecomposition> {
        let mut u1 = self.identity();
        let mut w0 = u.clone();
        let mut u2 = self.identity();
        loop {
            let mut changed = false;
            while let Some(s) = self.left_descents(&w0)?.intersection(x).first() {
                u1 = self.mul_generator(&u1, s)?;
                w0 = self.generator_mul(s, &w0)?;
                changed = true;
            }
            while let Some(s) = self.right_descents(&w0)?.intersection(y).first() {
                u2 = self.generator_mul(s, &u2)?;
                w0 = self.mul_generator(&w0, s)?;
                changed = true;
            }
            if !changed {
                break;
            }
        }
        Ok(DoubleCosetDecomposition { u1, w0, u2 })
    }

    /// `u ∈ W_X`.
    pub fn member_parabolic(&self, x: GeneratorSubset, u: &CoxeterElement) -> Result<bool> {
        Ok(self.decompose_left(x, u)?.w.is_identity())
    }

    pub fn coset_json(&self, d: &CosetDecomposition) -> CosetJson {
        CosetJson { v: self.format(&d.v), w: self.format(&d.w) }
    }

    pub fn double_coset_json(&self, d: &DoubleCosetDecomposition) -> DoubleCosetJson {
        DoubleCosetJson { u1: self.format(&d.u1), w0: self.format(&d.w0), u2: self.format(&d.u2) }
    }
}

use serde::Serialize;

use super::{
    abelianization, dihedral_normal_form, raag_normal_form, theta, ArtinLetter, ArtinWord, DihedralNormalForm,
};
use crate::coxeter::Coxeter;
use crate::error::Result;
use crate::presentation::{GeneratorId, GeneratorSubset, Label, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Equal,
    NotEqual,
    Unknown,
}

/// Outcome of an equality test together with what decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityVerdict {
    pub verdict: Verdict,
    pub witness: String,
}

impl EqualityVerdict {
    fn new(verdict: Verdict, witness: impl Into<String>) -> Self {
        EqualityVerdict { verdict, witness: witness.into() }
    }

    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }
}

/// A complete word-problem solver for one of the decidable classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decider {
    /// No generators.
    Trivial,
    /// Edgeless graph: free group.
    Free,
    /// Every edge labeled 2.
    RightAngled,
    /// Two generators, one edge with finite label.
    Dihedral,
}

/// Canonical representative produced by a [`Decider`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NormalForm {
    Word(ArtinWord),
    Garside(DihedralNormalForm),
}

impl Decider {
    pub fn classify(p: &Presentation) -> Option<Decider> {
        if p.rank() == 0 {
            Some(Decider::Trivial)
        } else if p.is_edgeless() {
            Some(Decider::Free)
        } else if p.is_right_angled() {
            Some(Decider::RightAngled)
        } else if p.rank() == 2 && matches!(p.label(GeneratorId::new(0), GeneratorId::new(1)), Label::Finite(_)) {
            Some(Decider::Dihedral)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Decider::Trivial => "trivial group",
            Decider::Free => "free group reduction",
            Decider::RightAngled => "right-angled normal form",
            Decider::Dihedral => "dihedral Garside normal form",
        }
    }

    pub fn normal_form(self, p: &Presentation, w: &ArtinWord) -> Result<NormalForm> {
        Ok(match self {
            Decider::Trivial => NormalForm::Word(ArtinWord::new()),
            Decider::Free => NormalForm::Word(w.free_reduce()),
            Decider::RightAngled => NormalForm::Word(raag_normal_form(p, w)?),
            Decider::Dihedral => NormalForm::Garside(dihedral_normal_form(p, w)?),
        })
    }

    /// Decides `h ∈ A_Z`.
    ///
    /// In free and right-angled groups, `h ∈ A_Z` iff its reduced form only
    /// uses letters of `Z`. In the dihedral case the only proper nontrivial
    /// standard parabolics are cyclic, and `σ_z^k` has exponent sum `k`, so
    /// a single normal-form comparison suffices.
    pub fn contains(self, p: &Presentation, z: GeneratorSubset, h: &ArtinWord) -> Result<bool> {
        if p.all().is_subset(z) {
            return Ok(true);
        }
        match self {
            Decider::Trivial => Ok(true),
            Decider::Free | Decider::RightAngled => match self.normal_form(p, h)? {
                NormalForm::Word(nf) => Ok(nf.is_supported_on(z)),
                NormalForm::Garside(_) => unreachable!(),
            },
            Decider::Dihedral => {
                let target = match z.first() {
                    None => ArtinWord::new(),
                    Some(g) => {
                        let k: i64 = h.iter().map(|l| l.sign.value()).sum();
                        let letter = if k >= 0 { ArtinLetter::pos(g) } else { ArtinLetter::neg(g) };
                        std::iter::repeat_n(letter, k.unsigned_abs() as usize).collect()
                    }
                };
                Ok(self.normal_form(p, h)? == self.normal_form(p, &target)?)
            }
        }
    }
}

/// Rewrites a word over `support` into the generator ids of `Γ_support`.
fn localize(support: GeneratorSubset, w: &ArtinWord) -> ArtinWord {
    w.relabel(|g| GeneratorId::new((support.mask() & ((1u64 << g.index()) - 1)).count_ones() as usize))
}

/// Decides equality in `A` where a complete method is available, otherwise
/// compares the sound invariants (image in `W`, abelianization).
///
/// Both words are first moved into `A[Γ_Z]`, `Z` the union of their
/// supports; `A_Z ≅ A[Γ_Z]`, so this is exact and lets, say, a two-letter
/// pair of words in a larger group be decided by the dihedral solver.
pub fn equals_oracle(w: &Coxeter, w1: &ArtinWord, w2: &ArtinWord) -> Result<EqualityVerdict> {
    if w1 == w2 {
        return Ok(EqualityVerdict::new(Verdict::Equal, "identical words"));
    }
    let p = w.presentation();
    let support = w1.support().union(w2.support());
    let local = p.induced(support)?;
    if let Some(decider) = Decider::classify(&local) {
        let (l1, l2) = (localize(support, w1), localize(support, w2));
        let same = decider.normal_form(&local, &l1)? == decider.normal_form(&local, &l2)?;
        let verdict = if same { Verdict::Equal } else { Verdict::NotEqual };
        return Ok(EqualityVerdict::new(verdict, format!("{} on {}", decider.name(), p.format_subset(support))));
    }
    if theta(w, w1)? != theta(w, w2)? {
        return Ok(EqualityVerdict::new(Verdict::NotEqual, "images in W differ"));
    }
    if abelianization(p, w1) != abelianization(p, w2) {
        return Ok(EqualityVerdict::new(Verdict::NotEqual, "abelianizations differ"));
    }
    Ok(EqualityVerdict::new(Verdict::Unknown, "undecided: images in W and abelianizations agree"))
}

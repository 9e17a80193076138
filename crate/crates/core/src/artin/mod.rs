//! Words in the Artin group `A[Γ]`, the projection `θ : A → W` and the
//! set-section `ι : W → A`.
//!
//! Words are kept raw: nothing is freely reduced unless asked for, because
//! the retraction reads every letter of its input.

mod dihedral;
mod fuzz;
mod oracle;
mod raag;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::Result;
use crate::presentation::{GeneratorId, GeneratorSubset, Label, Presentation};

pub use dihedral::{dihedral_normal_form, DihedralNormalForm, Simple};
pub use fuzz::fuzz_rewrite;
pub use oracle::{equals_oracle, Decider, EqualityVerdict, NormalForm, Verdict};
pub use raag::raag_normal_form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// `σ_x^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArtinLetter {
    pub generator: GeneratorId,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn pos(generator: GeneratorId) -> Self {
        ArtinLetter { generator, sign: Sign::Pos }
    }

    pub fn neg(generator: GeneratorId) -> Self {
        ArtinLetter { generator, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        ArtinLetter { generator: self.generator, sign: self.sign.flip() }
    }

    fn cancels(self, other: ArtinLetter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

/// An element of the free monoid on `Σ ⊔ Σ⁻¹`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArtinWord(Vec<ArtinLetter>);

impl ArtinWord {
    pub fn new() -> Self {
        ArtinWord(Vec::new())
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: ArtinLetter) {
        self.0.push(l);
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArtinLetter> {
        self.0.iter()
    }

    /// Positive word on the given generators.
    pub fn positive(gens: &[GeneratorId]) -> Self {
        gens.iter().map(|&g| ArtinLetter::pos(g)).collect()
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        ArtinWord(out)
    }

    /// Reverse and negate.
    pub fn inverse(&self) -> ArtinWord {
        self.0.iter().rev().map(|l| l.inverse()).collect()
    }

    /// Cancels adjacent `σ^ε σ^{-ε}` pairs until none remain.
    pub fn free_reduce(&self) -> ArtinWord {
        let mut out: Vec<ArtinLetter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        ArtinWord(out)
    }

    pub fn support(&self) -> GeneratorSubset {
        self.0.iter().map(|l| l.generator).collect()
    }

    pub fn is_supported_on(&self, x: GeneratorSubset) -> bool {
        self.support().is_subset(x)
    }

    /// Underlying Coxeter word (signs dropped).
    pub fn generators(&self) -> Vec<GeneratorId> {
        self.0.iter().map(|l| l.generator).collect()
    }

    /// Rewrites generator ids through `map`, e.g. into an induced presentation.
    pub fn relabel(&self, map: impl Fn(GeneratorId) -> GeneratorId) -> ArtinWord {
        self.0.iter().map(|l| ArtinLetter { generator: map(l.generator), sign: l.sign }).collect()
    }

    /// Parses tokens `a`, `a^-1` and `a'`, separated by whitespace.
    pub fn parse(p: &Presentation, text: &str) -> Result<ArtinWord> {
        text.split_whitespace()
            .map(|tok| {
                let (name, sign) = if let Some(n) = tok.strip_suffix("^-1") {
                    (n, Sign::Neg)
                } else if let Some(n) = tok.strip_suffix('\'') {
                    (n, Sign::Neg)
                } else {
                    (tok, Sign::Pos)
                };
                Ok(ArtinLetter { generator: p.generator(name)?, sign })
            })
            .collect()
    }

    /// Serializes in the `a b^-1` form.
    pub fn format(&self, p: &Presentation) -> String {
        self.display(p).to_string()
    }

    pub fn display<'a>(&'a self, p: &'a Presentation) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Presentation, &'a ArtinWord);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, l) in self.1 .0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    f.write_str(self.0.name(l.generator))?;
                    if l.sign == Sign::Neg {
                        f.write_str("^-1")?;
                    }
                }
                Ok(())
            }
        }
        D(p, self)
    }
}

impl FromIterator<ArtinLetter> for ArtinWord {
    fn from_iter<I: IntoIterator<Item = ArtinLetter>>(iter: I) -> Self {
        ArtinWord(iter.into_iter().collect())
    }
}

impl From<Vec<ArtinLetter>> for ArtinWord {
    fn from(v: Vec<ArtinLetter>) -> Self {
        ArtinWord(v)
    }
}

/// `θ(w)`: drop signs and reduce in `W`.
pub fn theta(w: &Coxeter, word: &ArtinWord) -> Result<CoxeterElement> {
    w.reduce(&word.generators())
}

/// `ι(u)`: the positive word on the canonical reduced expression of `u`.
pub fn iota(u: &CoxeterElement) -> ArtinWord {
    ArtinWord::positive(u.canonical())
}

/// Membership in the colored Artin group `CA = ker θ`.
pub fn is_colored(w: &Coxeter, word: &ArtinWord) -> Result<bool> {
    Ok(theta(w, word)?.is_identity())
}

/// `w · ι(θ(w))⁻¹`, which always lies in `CA`.
pub fn color(w: &Coxeter, word: &ArtinWord) -> Result<ArtinWord> {
    Ok(word.concat(&iota(&theta(w, word)?).inverse()))
}

/// Exponent sum of each generator, without merging.
pub fn exponent_sums(p: &Presentation, word: &ArtinWord) -> Vec<i64> {
    let mut sums = vec![0i64; p.rank()];
    for l in word.iter() {
        sums[l.generator.index()] += l.sign.value();
    }
    sums
}

/// Classes of generators identified in the abelianization of `A`: `x` and
/// `y` are identified whenever they are joined by a path of odd-labeled
/// edges. Returns the class representative (least index) of each generator.
pub fn abelian_classes(p: &Presentation) -> Vec<usize> {
    let n = p.rank();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = i;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for (u, v, m) in p.edges() {
        if m % 2 == 1 {
            let (a, b) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
            parent[a.max(b)] = a.min(b);
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect()
}

/// Image of `word` in the abelianization of `A`: entry `x` is the total
/// exponent of the class of `x` (see [`abelian_classes`]).
pub fn abelianization(p: &Presentation, word: &ArtinWord) -> Vec<i64> {
    let classes = abelian_classes(p);
    let raw = exponent_sums(p, word);
    let mut per_class = vec![0i64; p.rank()];
    for (i, s) in raw.iter().enumerate() {
        per_class[classes[i]] += s;
    }
    classes.iter().map(|&c| per_class[c]).collect()
}

pub(crate) fn is_finite_edge(p: &Presentation, x: GeneratorId, y: GeneratorId) -> Option<u32> {
    match p.label(x, y) {
        Label::Finite(m) if x != y => Some(m),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::catalog;

    fn aw(p: &Presentation, s: &str) -> ArtinWord {
        ArtinWord::parse(p, s).unwrap()
    }

    #[test]
    fn parse_and_format() {
        let p = catalog::a2();
        let w = aw(&p, "a b^-1 a'");
        assert_eq!(w.len(), 3);
        assert_eq!(w.format(&p), "a b^-1 a^-1");
        assert_eq!(aw(&p, "").len(), 0);
        assert!(ArtinWord::parse(&p, "a z").is_err());
    }

    #[test]
    fn theta_examples() {
        let w = Coxeter::new(catalog::a2());
        let p = w.presentation().clone();
        assert!(theta(&w, &ArtinWord::new()).unwrap().is_identity());
        assert!(theta(&w, &aw(&p, "a a")).unwrap().is_identity());
        let t = theta(&w, &aw(&p, "b a b^-1")).unwrap();
        assert_eq!(t, w.parse("a b a").unwrap());
        assert_eq!(w.format(&t), "a b a");
    }

    #[test]
    fn iota_examples() {
        let w = Coxeter::new(catalog::a2());
        let p = w.presentation().clone();
        assert!(iota(&w.identity()).is_empty());
        assert_eq!(iota(&w.parse("b a").unwrap()), aw(&p, "b a"));
    }

    #[test]
    fn colored_words() {
        let w = Coxeter::new(catalog::a2());
        let p = w.presentation().clone();
        assert!(is_colored(&w, &ArtinWord::new()).unwrap());
        assert!(is_colored(&w, &aw(&p, "a a")).unwrap());
        assert!(!is_colored(&w, &aw(&p, "a")).unwrap());
        assert_eq!(color(&w, &aw(&p, "a a")).unwrap(), aw(&p, "a a"));
        assert_eq!(color(&w, &aw(&p, "a")).unwrap(), aw(&p, "a a^-1"));
        assert_eq!(color(&w, &aw(&p, "a b")).unwrap(), aw(&p, "a b b^-1 a^-1"));
        assert_eq!(color(&w, &aw(&p, "a b a")).unwrap(), aw(&p, "a b a a^-1 b^-1 a^-1"));
    }

    #[test]
    fn free_group_utilities() {
        let p = catalog::a2();
        assert!(aw(&p, "a a^-1").free_reduce().is_empty());
        assert_eq!(aw(&p, "b a a^-1 b^-1 a").free_reduce(), aw(&p, "a"));
        assert_eq!(aw(&p, "a b^-1").inverse(), aw(&p, "b a^-1"));
        let w = aw(&p, "a b");
        assert_eq!(w.concat(&ArtinWord::new()), w);
    }

    #[test]
    fn abelianization_examples() {
        let free = catalog::free(2);
        assert_eq!(abelianization(&free, &ArtinWord::new()), vec![0, 0]);
        assert_eq!(abelianization(&free, &aw(&free, "a b a^-1")), vec![0, 1]);
        let a2 = catalog::a2();
        assert_eq!(exponent_sums(&a2, &aw(&a2, "a b a")), vec![2, 1]);
        assert_eq!(exponent_sums(&a2, &aw(&a2, "b a b")), vec![1, 2]);
        assert_eq!(abelianization(&a2, &aw(&a2, "a b a")), vec![3, 3]);
        assert_eq!(abelianization(&a2, &aw(&a2, "b a b")), vec![3, 3]);
        let b2 = catalog::b2();
        assert_eq!(abelianization(&b2, &aw(&b2, "a b a b")), vec![2, 2]);
        assert_eq!(abelian_classes(&catalog::a3()), vec![0, 0, 0]);
        assert_eq!(abelian_classes(&catalog::raag_square()), vec![0, 1, 2, 3]);
    }
}

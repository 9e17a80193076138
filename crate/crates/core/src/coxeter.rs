//! Word problem and ShortLex canonical forms in the Coxeter group `W[Γ]`.
//!
//! The engine is Tits' solution: two reduced expressions of the same element
//! are connected by braid moves (replacing `Prod(x,y,m)` by `Prod(y,x,m)`),
//! and a word is reduced iff no word in its braid closure has two equal
//! adjacent letters. Everything else (descents, multiplication, canonical
//! forms) is read off the closure of a reduced word, which is memoized per
//! word in a concurrent cache.
//!
//! Elements are always kept in canonical form: the ShortLex-least reduced
//! expression, with letters ordered by generator index.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::presentation::{GeneratorId, GeneratorSubset, Label, Presentation};

/// Default bound on the number of words in a single braid closure.
pub const DEFAULT_CLOSURE_CAP: usize = 200_000;

/// A word `s_{x1} s_{x2} ... s_{xp}` in the generators of `W`.
pub type CoxeterWord = Vec<GeneratorId>;

/// An element of `W`, stored as its ShortLex-least reduced expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoxeterElement {
    canonical: Vec<GeneratorId>,
}

impl CoxeterElement {
    pub fn identity() -> Self {
        CoxeterElement { canonical: Vec::new() }
    }

    pub fn canonical(&self) -> &[GeneratorId] {
        &self.canonical
    }

    pub fn is_identity(&self) -> bool {
        self.canonical.is_empty()
    }

    /// `ℓ_S`, the letter count of the canonical word.
    pub fn length(&self) -> usize {
        self.canonical.len()
    }

    /// The generator `x` if this element is `s_x`.
    pub fn as_generator(&self) -> Option<GeneratorId> {
        match self.canonical[..] {
            [x] => Some(x),
            _ => None,
        }
    }

    /// Set of letters occurring in the canonical word. All reduced
    /// expressions of an element share this set.
    pub fn support(&self) -> GeneratorSubset {
        self.canonical.iter().copied().collect()
    }

    pub fn display<'a>(&'a self, p: &'a Presentation) -> impl fmt::Display + 'a {
        WordDisplay(p, &self.canonical)
    }
}

/// ShortLex order: by length, then lexicographically by generator index.
impl Ord for CoxeterElement {
    fn cmp(&self, other: &Self) -> Ordering {
        shortlex(&self.canonical, &other.canonical)
    }
}

impl PartialOrd for CoxeterElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn shortlex(a: &[GeneratorId], b: &[GeneratorId]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

struct WordDisplay<'a>(&'a Presentation, &'a [GeneratorId]);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.1.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.0.name(x))?;
        }
        Ok(())
    }
}

/// Space-separated generator names, e.g. `a b a`.
pub fn format_word(p: &Presentation, word: &[GeneratorId]) -> String {
    WordDisplay(p, word).to_string()
}

/// Parses whitespace-separated generator names.
pub fn parse_word(p: &Presentation, text: &str) -> Result<CoxeterWord> {
    text.split_whitespace().map(|t| p.generator(t)).collect()
}

/// What the braid closure of one reduced word tells us about its element.
#[derive(Debug)]
struct Info {
    canonical: Vec<GeneratorId>,
    left: GeneratorSubset,
    right: GeneratorSubset,
    /// For each left descent `x`, a reduced word for `s_x u`.
    left_drop: Vec<(GeneratorId, Vec<GeneratorId>)>,
    /// For each right descent `x`, a reduced word for `u s_x`.
    right_drop: Vec<(GeneratorId, Vec<GeneratorId>)>,
}

impl Info {
    fn drop_left(&self, x: GeneratorId) -> Option<&[GeneratorId]> {
        self.left_drop.iter().find(|(g, _)| *g == x).map(|(_, w)| &w[..])
    }

    fn drop_right(&self, x: GeneratorId) -> Option<&[GeneratorId]> {
        self.right_drop.iter().find(|(g, _)| *g == x).map(|(_, w)| &w[..])
    }
}

/// The Coxeter group of a presentation, with a memoizing word-problem engine.
///
/// Shareable across threads; the cache is a concurrent map.
pub struct Coxeter {
    presentation: Arc<Presentation>,
    cap: usize,
    cache: DashMap<Vec<GeneratorId>, Arc<Info>>,
}

impl fmt::Debug for Coxeter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coxeter")
            .field("rank", &self.presentation.rank())
            .field("cap", &self.cap)
            .field("cached", &self.cache.len())
            .finish()
    }
}

impl Coxeter {
    pub fn new(presentation: Presentation) -> Self {
        Self::with_cap(presentation, DEFAULT_CLOSURE_CAP)
    }

    pub fn with_cap(presentation: Presentation, cap: usize) -> Self {
        Coxeter { presentation: Arc::new(presentation), cap: cap.max(1), cache: DashMap::new() }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn cached_words(&self) -> usize {
        self.cache.len()
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }

    /// The single braid move at `i`, if `word[i..]` starts with a full
    /// alternating block `Prod(x, y, m)`.
    fn braid_move_at(&self, word: &[GeneratorId], i: usize) -> Option<Vec<GeneratorId>> {
        let x = word[i];
        let y = *word.get(i + 1)?;
        if x == y {
            return None;
        }
        let Label::Finite(m) = self.presentation.label(x, y) else {
            return None;
        };
        let m = m as usize;
        if i + m > word.len() {
            return None;
        }
        let block = &word[i..i + m];
        if !block.iter().enumerate().all(|(k, &g)| g == if k % 2 == 0 { x } else { y }) {
            return None;
        }
        let mut out = word.to_vec();
        for (k, slot) in out[i..i + m].iter_mut().enumerate() {
            *slot = if k % 2 == 0 { y } else { x };
        }
        Some(out)
    }

    fn cap_error(&self, word: &[GeneratorId]) -> Error {
        Error::CapExceeded { word: format_word(&self.presentation, word), cap: self.cap }
    }

    /// Breadth-first closure of `word` under braid moves. `visit` is called
    /// once per member and may stop the search early by returning `false`.
    fn walk_closure(&self, word: &[GeneratorId], mut visit: impl FnMut(&[GeneratorId]) -> bool) -> Result<()> {
        let mut seen: HashSet<Vec<GeneratorId>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            if !visit(&w) {
                return Ok(());
            }
            for i in 0..w.len().saturating_sub(1) {
                if let Some(next) = self.braid_move_at(&w, i) {
                    if !seen.contains(&next) {
                        if seen.len() >= self.cap {
                            return Err(self.cap_error(word));
                        }
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(())
    }

    /// Every word reachable from `word` by braid moves.
    pub fn braid_closure(&self, word: &[GeneratorId]) -> Result<BTreeSet<CoxeterWord>> {
        let mut out = BTreeSet::new();
        self.walk_closure(word, |w| {
            out.insert(w.to_vec());
            true
        })?;
        Ok(out)
    }

    /// Closure data for a reduced word, memoized.
    fn info(&self, reduced: &[GeneratorId]) -> Result<Arc<Info>> {
        if let Some(hit) = self.cache.get(reduced) {
            return Ok(hit.clone());
        }
        let mut canonical: Option<Vec<GeneratorId>> = None;
        let mut left = GeneratorSubset::EMPTY;
        let mut right = GeneratorSubset::EMPTY;
        let mut left_drop = Vec::new();
        let mut right_drop = Vec::new();
        self.walk_closure(reduced, |w| {
            if canonical.as_deref().is_none_or(|c| w < c) {
                canonical = Some(w.to_vec());
            }
            if let (Some(&first), Some(&last)) = (w.first(), w.last()) {
                if !left.contains(first) {
                    left.insert(first);
                    left_drop.push((first, w[1..].to_vec()));
                }
                if !right.contains(last) {
                    right.insert(last);
                    right_drop.push((last, w[..w.len() - 1].to_vec()));
                }
            }
            true
        })?;
        left_drop.sort();
        right_drop.sort();
        let info = Arc::new(Info { canonical: canonical.unwrap_or_default(), left, right, left_drop, right_drop });
        if info.canonical != reduced {
            self.cache.insert(info.canonical.clone(), info.clone());
        }
        self.cache.insert(reduced.to_vec(), info.clone());
        Ok(info)
    }

    fn element_from_reduced(&self, reduced: &[GeneratorId]) -> Result<CoxeterElement> {
        Ok(CoxeterElement { canonical: self.info(reduced)?.canonical.clone() })
    }

    pub fn identity(&self) -> CoxeterElement {
        CoxeterElement::identity()
    }

    pub fn generator(&self, x: GeneratorId) -> CoxeterElement {
        CoxeterElement { canonical: vec![x] }
    }

    /// `u s_x`. Uses the exchange condition: the product drops in length
    /// exactly when some reduced expression of `u` ends in `x`.
    pub fn mul_generator(&self, u: &CoxeterElement, x: GeneratorId) -> Result<CoxeterElement> {
        let info = self.info(&u.canonical)?;
        match info.drop_right(x) {
            Some(shorter) => self.element_from_reduced(shorter),
            None => {
                let mut longer = u.canonical.clone();
                longer.push(x);
                self.element_from_reduced(&longer)
            }
        }
    }

    /// `s_x u`.
    pub fn generator_mul(&self, x: GeneratorId, u: &CoxeterElement) -> Result<CoxeterElement> {
        let info = self.info(&u.canonical)?;
        match info.drop_left(x) {
            Some(shorter) => self.element_from_reduced(shorter),
            None => {
                let mut longer = Vec::with_capacity(u.canonical.len() + 1);
                longer.push(x);
                longer.extend_from_slice(&u.canonical);
                self.element_from_reduced(&longer)
            }
        }
    }

    /// The element represented by an arbitrary word, in canonical form.
    pub fn reduce(&self, word: &[GeneratorId]) -> Result<CoxeterElement> {
        let mut u = self.identity();
        for &x in word {
            u = self.mul_generator(&u, x)?;
        }
        Ok(u)
    }

    /// Tits' algorithm taken literally: close the whole word under braid
    /// moves, delete the first `xx` factor found and start over; once no
    /// member has such a factor, return the least member. Used as an
    /// independent cross-check of [`Coxeter::reduce`].
    pub fn reduce_by_restart(&self, word: &[GeneratorId]) -> Result<CoxeterElement> {
        let mut current = word.to_vec();
        'restart: loop {
            let mut shortened: Option<Vec<GeneratorId>> = None;
            let mut least: Option<Vec<GeneratorId>> = None;
            self.walk_closure(&current, |w| {
                if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                    let mut s = w.to_vec();
                    s.drain(i..i + 2);
                    shortened = Some(s);
                    return false;
                }
                if least.as_deref().is_none_or(|l| w < l) {
                    least = Some(w.to_vec());
                }
                true
            })?;
            if let Some(s) = shortened {
                current = s;
                continue 'restart;
            }
            return Ok(CoxeterElement { canonical: least.unwrap_or_default() });
        }
    }

    pub fn multiply(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        let mut acc = u.clone();
        for &x in &v.canonical {
            acc = self.mul_generator(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn invert(&self, u: &CoxeterElement) -> Result<CoxeterElement> {
        let reversed: Vec<GeneratorId> = u.canonical.iter().rev().copied().collect();
        self.element_from_reduced(&reversed)
    }

    /// `u v u⁻¹`.
    pub fn conjugate(&self, u: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        let uv = self.multiply(u, v)?;
        self.multiply(&uv, &self.invert(u)?)
    }

    pub fn length(&self, u: &CoxeterElement) -> usize {
        u.length()
    }

    /// `{x : ℓ(s_x u) < ℓ(u)}`.
    pub fn left_descents(&self, u: &CoxeterElement) -> Result<GeneratorSubset> {
        Ok(self.info(&u.canonical)?.left)
    }

    /// `{x : ℓ(u s_x) < ℓ(u)}`.
    pub fn right_descents(&self, u: &CoxeterElement) -> Result<GeneratorSubset> {
        Ok(self.info(&u.canonical)?.right)
    }

    /// Breadth-first enumeration from the identity by right multiplication.
    /// Returns the elements found (at most `cap`, in BFS order) and whether
    /// the search closed, i.e. whether the whole group was listed.
    pub fn enumerate(&self, cap: usize) -> Result<(Vec<CoxeterElement>, bool)> {
        let mut seen: HashSet<CoxeterElement> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        let start = self.identity();
        seen.insert(start.clone());
        order.push(start.clone());
        queue.push_back(start);
        if cap == 0 {
            return Ok((Vec::new(), false));
        }
        while let Some(u) = queue.pop_front() {
            for x in self.presentation.generators() {
                let v = self.mul_generator(&u, x)?;
                if seen.insert(v.clone()) {
                    if order.len() == cap {
                        return Ok((order, false));
                    }
                    order.push(v.clone());
                    queue.push_back(v);
                }
            }
        }
        Ok((order, true))
    }

    pub fn parse(&self, text: &str) -> Result<CoxeterElement> {
        self.reduce(&parse_word(&self.presentation, text)?)
    }

    pub fn format(&self, u: &CoxeterElement) -> String {
        format_word(&self.presentation, &u.canonical)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::catalog;

    fn word(p: &Presentation, s: &str) -> CoxeterWord {
        parse_word(p, s).unwrap()
    }

    #[test]
    fn closure_examples() {
        let w = Coxeter::new(catalog::a2());
        let p = w.presentation().clone();
        let c = w.braid_closure(&word(&p, "a b a")).unwrap();
        assert_eq!(c, BTreeSet::from([word(&p, "a b a"), word(&p, "b a b")]));
        assert_eq!(w.braid_closure(&word(&p, "a")).unwrap().len(), 1);
        let w2 = Coxeter::new(catalog::a1xa1());
        let c = w2.braid_closure(&word(&p, "a b")).unwrap();
        assert_eq!(c, BTreeSet::from([word(&p, "a b"), word(&p, "b a")]));
    }

    #[test]
    fn reduce_examples() {
        let w = Coxeter::new(catalog::a2());
        assert_eq!(w.format(&w.parse("a b a b").unwrap()), "b a");
        assert!(w.parse("a a").unwrap().is_identity());
        let f = Coxeter::new(catalog::free(2));
        assert_eq!(f.format(&f.parse("a b a b a b").unwrap()), "a b a b a b");
    }

    #[test]
    fn multiply_invert_length() {
        let w = Coxeter::new(catalog::a2());
        let aba = w.parse("a b a").unwrap();
        let ab = w.parse("a b").unwrap();
        assert_eq!(w.multiply(&aba, &w.identity()).unwrap(), aba);
        assert!(w.multiply(&aba, &aba).unwrap().is_identity());
        assert_eq!(w.format(&w.multiply(&ab, &ab).unwrap()), "b a");
        assert_eq!(w.format(&w.invert(&ab).unwrap()), "b a");
        assert!(w.invert(&w.identity()).unwrap().is_identity());
        assert_eq!(w.length(&aba), 3);
        let b2 = Coxeter::new(catalog::b2());
        assert_eq!(b2.length(&b2.parse("a b a b").unwrap()), 4);
    }

    #[test]
    fn descents() {
        let w = Coxeter::new(catalog::a2());
        let p = w.presentation().clone();
        let ab = p.parse_subset("a,b").unwrap();
        let aba = w.parse("a b a").unwrap();
        assert_eq!(w.left_descents(&aba).unwrap(), ab);
        assert_eq!(w.right_descents(&aba).unwrap(), ab);
        let ba = w.parse("b a").unwrap();
        assert_eq!(w.left_descents(&ba).unwrap(), p.parse_subset("b").unwrap());
        assert_eq!(w.right_descents(&ba).unwrap(), p.parse_subset("a").unwrap());
        assert!(w.left_descents(&w.identity()).unwrap().is_empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Coxeter::new(catalog::a2()).enumerate(100).unwrap().0.len(), 6);
        let (els, finite) = Coxeter::new(catalog::b2()).enumerate(100).unwrap();
        assert_eq!((els.len(), finite), (8, true));
        let (els, finite) = Coxeter::new(catalog::free(2)).enumerate(10).unwrap();
        assert_eq!((els.len(), finite), (10, false));
        // exactly at the order is still reported finite
        let (els, finite) = Coxeter::new(catalog::a2()).enumerate(6).unwrap();
        assert_eq!((els.len(), finite), (6, true));
    }

    #[test]
    fn cap_is_a_hard_error() {
        let w = Coxeter::with_cap(catalog::a1xa1(), 1);
        let p = w.presentation().clone();
        let err = w.braid_closure(&word(&p, "a b")).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { ref word, cap: 1 } if word == "a b"));
    }

    #[test]
    fn restart_reduction_agrees() {
        let w = Coxeter::new(catalog::a3());
        let p = w.presentation().clone();
        for s in ["a b a b", "c b a b c b", "a a b c c b", "b a c b a c b a", ""] {
            let wd = word(&p, s);
            assert_eq!(w.reduce(&wd).unwrap(), w.reduce_by_restart(&wd).unwrap(), "{s}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn presentations() -> Vec<Presentation> {
            vec![catalog::a3(), catalog::triangle3(), catalog::raag_square(), catalog::i2(5), catalog::free(3)]
        }

        fn arb_case() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
            (0usize..5, proptest::collection::vec(0usize..4, 0..12), proptest::collection::vec(0usize..4, 0..12))
        }

        fn to_word(p: &Presentation, raw: &[usize]) -> CoxeterWord {
            raw.iter().map(|&i| GeneratorId::new(i % p.rank())).collect()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(96))]

            #[test]
            fn kernel_invariants((pi, a, b) in arb_case()) {
                let p = presentations()[pi].clone();
                let w = Coxeter::new(p.clone());
                let (w1, w2) = (to_word(&p, &a), to_word(&p, &b));
                let u = w.reduce(&w1).unwrap();
                let v = w.reduce(&w2).unwrap();
                // idempotence
                prop_assert_eq!(w.reduce(u.canonical()).unwrap(), u.clone());
                // concatenation is multiplication
                let joined: Vec<_> = w1.iter().chain(&w2).copied().collect();
                let uv = w.multiply(&u, &v).unwrap();
                prop_assert_eq!(w.reduce(&joined).unwrap(), uv.clone());
                // the literal algorithm agrees
                prop_assert_eq!(w.reduce_by_restart(&joined).unwrap(), uv.clone());
                // length laws
                prop_assert_eq!(w.invert(&u).unwrap().length(), u.length());
                prop_assert!(uv.length() <= u.length() + v.length());
                prop_assert_eq!(uv.length() % 2, (u.length() + v.length()) % 2);
                // canonical is the least member of its closure
                let closure = w.braid_closure(u.canonical()).unwrap();
                prop_assert_eq!(closure.iter().min_by(|a, b| shortlex(a, b)).unwrap(), &u.canonical().to_vec());
                // descents are first/last letters of closure members
                let firsts: GeneratorSubset = closure.iter().filter_map(|c| c.first().copied()).collect();
                let lasts: GeneratorSubset = closure.iter().filter_map(|c| c.last().copied()).collect();
                prop_assert_eq!(w.left_descents(&u).unwrap(), firsts);
                prop_assert_eq!(w.right_descents(&u).unwrap(), lasts);
                for x in p.generators() {
                    let sx = w.generator(x);
                    let shorter = w.multiply(&sx, &u).unwrap().length() < u.length();
                    prop_assert_eq!(shorter, firsts.contains(x));
                }
            }
        }
    }
}

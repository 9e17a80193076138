use super::{ArtinLetter, ArtinWord};
use crate::error::{Error, Result};
use crate::presentation::{GeneratorId, Label, Presentation};

fn commute(p: &Presentation, x: GeneratorId, y: GeneratorId) -> bool {
    x != y && p.label(x, y) == Label::Finite(2)
}

/// Normal form in a right-angled Artin group (every edge labeled 2; the
/// edgeless case is the free group).
///
/// Letters are appended one at a time; a new `x^ε` cancels against the
/// nearest `x^{-ε}` it can reach by commuting leftwards, which keeps the
/// word reduced. Reduced words of one element differ only by commutations,
/// and the lexicographically least arrangement (by generator index, then
/// sign) is returned.
pub fn raag_normal_form(p: &Presentation, word: &ArtinWord) -> Result<ArtinWord> {
    if let Some((u, v, m)) = p.edges().find(|&(_, _, m)| m != 2) {
        return Err(Error::NotRightAngled(p.name(u).to_string(), p.name(v).to_string(), m));
    }
    let mut reduced: Vec<ArtinLetter> = Vec::with_capacity(word.len());
    for &l in word.iter() {
        let mut cancel_at = None;
        for j in (0..reduced.len()).rev() {
            let o = reduced[j];
            if o.generator == l.generator {
                if o.sign != l.sign {
                    cancel_at = Some(j);
                }
                break;
            }
            if !commute(p, o.generator, l.generator) {
                break;
            }
        }
        match cancel_at {
            Some(j) => {
                reduced.remove(j);
            }
            None => reduced.push(l),
        }
    }

    let mut out = Vec::with_capacity(reduced.len());
    while !reduced.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..reduced.len() {
            let g = reduced[i].generator;
            let movable = reduced[..i].iter().all(|o| commute(p, o.generator, g));
            if movable && best.is_none_or(|b| reduced[i] < reduced[b]) {
                best = Some(i);
            }
        }
        out.push(reduced.remove(best.expect("the first letter is always movable")));
    }
    Ok(ArtinWord::from(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::fuzz_rewrite;
    use crate::presentation::catalog;

    #[test]
    fn examples() {
        let sq = catalog::raag_square();
        // a and c are not adjacent in the square
        let w = ArtinWord::parse(&sq, "a c a^-1").unwrap();
        assert_eq!(raag_normal_form(&sq, &w).unwrap(), w);
        let ab = Presentation::new(&["a", "b"], &[("a", "b", 2)]).unwrap();
        let w = ArtinWord::parse(&ab, "b a").unwrap();
        assert_eq!(raag_normal_form(&ab, &w).unwrap().format(&ab), "a b");
        let w = ArtinWord::parse(&sq, "a b c b^-1 a^-1").unwrap();
        assert_eq!(raag_normal_form(&sq, &w).unwrap().format(&sq), "a c a^-1");
        let w = ArtinWord::parse(&sq, "b a c b^-1").unwrap();
        assert_eq!(raag_normal_form(&sq, &w).unwrap().format(&sq), "a c");
        // b and d do not commute, so nothing cancels
        let w = ArtinWord::parse(&sq, "b a d b^-1").unwrap();
        assert_eq!(raag_normal_form(&sq, &w).unwrap().format(&sq), "a b d b^-1");
        assert!(matches!(raag_normal_form(&catalog::a2(), &w), Err(Error::NotRightAngled(..))));
    }

    #[test]
    fn invariant_under_fuzz_and_idempotent() {
        let sq = catalog::raag_square();
        let w = ArtinWord::parse(&sq, "a b^-1 c d a c^-1 b b").unwrap();
        let nf = raag_normal_form(&sq, &w).unwrap();
        assert_eq!(raag_normal_form(&sq, &nf).unwrap(), nf);
        for seed in 0..50 {
            let f = fuzz_rewrite(&sq, &w, seed, 20);
            assert_eq!(raag_normal_form(&sq, &f).unwrap(), nf);
        }
    }
}

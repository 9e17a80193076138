use serde::Serialize;

use super::{ArtinWord, Sign};
use crate::error::{Error, Result};
use crate::presentation::{GeneratorId, Label, Presentation};

/// A proper simple element of the dihedral Artin monoid: the alternating
/// word of length `len` (`1 <= len < m`) starting with `first`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Simple {
    pub first: GeneratorId,
    pub len: usize,
}

/// Left-greedy Garside normal form `Δ^k p_1 ... p_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DihedralNormalForm {
    pub delta_power: i64,
    pub factors: Vec<Simple>,
}

struct Dihedral {
    m: usize,
}

impl Dihedral {
    fn other(&self, g: GeneratorId) -> GeneratorId {
        GeneratorId::new(1 - g.index())
    }

    /// Conjugation by `Δ`: swaps the generators when `m` is odd.
    fn tau(&self, g: GeneratorId) -> GeneratorId {
        if self.m % 2 == 1 {
            self.other(g)
        } else {
            g
        }
    }

    fn last_letter(&self, s: Simple) -> GeneratorId {
        if s.len % 2 == 1 {
            s.first
        } else {
            self.other(s.first)
        }
    }

    /// `Δ σ_z⁻¹` as a positive word: the alternating word of length `m - 1`
    /// that becomes `Δ` when `z` is appended.
    fn delta_over(&self, z: GeneratorId) -> impl Iterator<Item = GeneratorId> + '_ {
        let start = if self.m % 2 == 1 { z } else { self.other(z) };
        (0..self.m - 1).map(move |k| if k % 2 == 0 { start } else { self.other(start) })
    }
}

/// Garside normal form in `⟨x, y | Prod(x,y,m) = Prod(y,x,m)⟩`, where the
/// presentation has exactly two generators and a finite label `m`.
///
/// Each `σ_z⁻¹` is rewritten as `Δ⁻¹ (Δ σ_z⁻¹)` and the `Δ⁻¹` is pushed to
/// the front through conjugation; the remaining positive word is then
/// factored greedily. Two proper simples `p q` are left-weighted exactly
/// when `q` starts with the last letter of `p`, and a factor that grows to
/// length `m` becomes a `Δ` that is moved to the front.
pub fn dihedral_normal_form(p: &Presentation, word: &ArtinWord) -> Result<DihedralNormalForm> {
    if p.rank() != 2 {
        return Err(Error::NotDihedral);
    }
    let Label::Finite(m) = p.label(GeneratorId::new(0), GeneratorId::new(1)) else {
        return Err(Error::NotDihedral);
    };
    let d = Dihedral { m: m as usize };

    let mut delta_power: i64 = 0;
    let mut positive: Vec<GeneratorId> = Vec::with_capacity(word.len());
    for l in word.iter() {
        match l.sign {
            Sign::Pos => positive.push(l.generator),
            Sign::Neg => {
                delta_power -= 1;
                for g in positive.iter_mut() {
                    *g = d.tau(*g);
                }
                positive.extend(d.delta_over(l.generator));
            }
        }
    }

    let mut factors: Vec<Simple> = Vec::new();
    for g in positive {
        match factors.last_mut() {
            Some(last) if d.last_letter(*last) != g => {
                last.len += 1;
                if last.len == d.m {
                    factors.pop();
                    delta_power += 1;
                    for f in factors.iter_mut() {
                        f.first = d.tau(f.first);
                    }
                }
            }
            _ => factors.push(Simple { first: g, len: 1 }),
        }
    }
    Ok(DihedralNormalForm { delta_power, factors })
}

impl DihedralNormalForm {
    /// A word representing the normal form: `Δ^k` spelled as
    /// `Prod(x, y, m)^{±k}` followed by the factors.
    pub fn to_word(&self, p: &Presentation) -> Result<ArtinWord> {
        let Label::Finite(m) = p.label(GeneratorId::new(0), GeneratorId::new(1)) else {
            return Err(Error::NotDihedral);
        };
        let (x, y) = (GeneratorId::new(0), GeneratorId::new(1));
        let delta = ArtinWord::positive(&crate::presentation::alternating(x, y, m as usize));
        let mut out = ArtinWord::new();
        let unit = if self.delta_power >= 0 { delta.clone() } else { delta.inverse() };
        for _ in 0..self.delta_power.unsigned_abs() {
            out = out.concat(&unit);
        }
        for f in &self.factors {
            let other = GeneratorId::new(1 - f.first.index());
            out = out.concat(&ArtinWord::positive(&crate::presentation::alternating(f.first, other, f.len)));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::fuzz_rewrite;
    use crate::presentation::catalog;
    use std::collections::BTreeMap;

    fn nf(p: &Presentation, s: &str) -> DihedralNormalForm {
        dihedral_normal_form(p, &ArtinWord::parse(p, s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let p = catalog::a2();
        assert_eq!(nf(&p, ""), DihedralNormalForm { delta_power: 0, factors: vec![] });
        assert_eq!(nf(&p, "a b a"), DihedralNormalForm { delta_power: 1, factors: vec![] });
        assert_eq!(nf(&p, "b a b"), nf(&p, "a b a"));
        assert_eq!(nf(&p, "b a b^-1"), nf(&p, "a b a b^-1 b^-1"));
        assert_eq!(nf(&p, "a a^-1"), nf(&p, ""));
        assert_ne!(nf(&p, "a"), nf(&p, "b"));
        assert!(matches!(dihedral_normal_form(&catalog::free(2), &ArtinWord::new()), Err(Error::NotDihedral)));
        assert!(matches!(dihedral_normal_form(&catalog::a3(), &ArtinWord::new()), Err(Error::NotDihedral)));
    }

    #[test]
    fn normal_form_word_round_trips() {
        for m in [2, 3, 4, 5, 6] {
            let p = catalog::dihedral(m);
            let w = ArtinWord::parse(&p, "a b^-1 b^-1 a a b a^-1 b b a").unwrap();
            let n = dihedral_normal_form(&p, &w).unwrap();
            assert_eq!(dihedral_normal_form(&p, &n.to_word(&p).unwrap()).unwrap(), n);
            for seed in 0..40 {
                let f = fuzz_rewrite(&p, &w, seed, 20);
                assert_eq!(dihedral_normal_form(&p, &f).unwrap(), n, "m={m} seed={seed}");
            }
        }
    }

    // Reduced Burau representation of B3 (faithful), over Laurent
    // polynomials in t stored as exponent -> coefficient.
    type Laurent = BTreeMap<i32, i64>;
    type Mat = [[Laurent; 2]; 2];

    fn lp(terms: &[(i32, i64)]) -> Laurent {
        terms.iter().copied().filter(|&(_, c)| c != 0).collect()
    }

    fn mul_lp(a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = Laurent::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                *out.entry(ea + eb).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn add_lp(a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = a.clone();
        for (e, c) in b {
            *out.entry(*e).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn mat_mul(a: &Mat, b: &Mat) -> Mat {
        let cell = |i: usize, j: usize| add_lp(&mul_lp(&a[i][0], &b[0][j]), &mul_lp(&a[i][1], &b[1][j]));
        [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
    }

    fn burau(w: &ArtinWord) -> Mat {
        let id: Mat = [[lp(&[(0, 1)]), lp(&[])], [lp(&[]), lp(&[(0, 1)])]];
        w.iter().fold(id, |acc, l| {
            let g: Mat = match (l.generator.index(), l.sign) {
                (0, Sign::Pos) => [[lp(&[(1, -1)]), lp(&[(0, 1)])], [lp(&[]), lp(&[(0, 1)])]],
                (0, Sign::Neg) => [[lp(&[(-1, -1)]), lp(&[(-1, 1)])], [lp(&[]), lp(&[(0, 1)])]],
                (1, Sign::Pos) => [[lp(&[(0, 1)]), lp(&[])], [lp(&[(1, 1)]), lp(&[(1, -1)])]],
                _ => [[lp(&[(0, 1)]), lp(&[])], [lp(&[(0, 1)]), lp(&[(-1, -1)])]],
            };
            mat_mul(&acc, &g)
        })
    }

    #[test]
    fn agrees_with_faithful_burau_on_b3() {
        use rand::{Rng, SeedableRng};
        let p = catalog::a2();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let random_word = |rng: &mut rand_chacha::ChaCha8Rng, len: usize| -> ArtinWord {
            (0..len)
                .map(|_| {
                    let g = GeneratorId::new(rng.gen_range(0..2));
                    if rng.gen_bool(0.5) {
                        super::super::ArtinLetter::pos(g)
                    } else {
                        super::super::ArtinLetter::neg(g)
                    }
                })
                .collect()
        };
        // short words collide often enough to exercise both directions
        for _ in 0..3000 {
            let (l1, l2) = (rng.gen_range(0..7), rng.gen_range(0..7));
            let w1 = random_word(&mut rng, l1);
            let w2 = random_word(&mut rng, l2);
            let same_nf = dihedral_normal_form(&p, &w1).unwrap() == dihedral_normal_form(&p, &w2).unwrap();
            let same_burau = burau(&w1) == burau(&w2);
            assert_eq!(same_nf, same_burau, "{} vs {}", w1.format(&p), w2.format(&p));
        }
    }
}

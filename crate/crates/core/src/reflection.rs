//! Finite Coxeter groups through the geometric representation.
//!
//! `s ↦ σ_s` with `σ_s(v) = v - 2 B(α_s, v) α_s` and
//! `B(α_s, α_t) = -cos(π / m(s, t))`. The representation is faithful, so a
//! breadth-first search over matrices enumerates `W` without using any
//! word rewriting. Used as an independent check of the braid-move kernel.

use std::collections::HashMap;
use std::f64::consts::PI;

use crate::presentation::{GeneratorId, Label, Presentation};

type Matrix = Vec<f64>;

const SCALE: f64 = 1e6;

fn key(m: &Matrix) -> Vec<i64> {
    m.iter().map(|x| (x * SCALE).round() as i64).collect()
}

fn mat_mul(n: usize, a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

/// Multiplication table of a finite Coxeter group. Element `0` is the
/// identity; elements are listed in ShortLex order of their least reduced
/// words.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    words: Vec<Vec<GeneratorId>>,
    table: Vec<Vec<usize>>,
    index: HashMap<Vec<GeneratorId>, usize>,
}

impl CayleyTable {
    /// Enumerates `W`, or `None` if more than `cap` elements are found.
    pub fn build(p: &Presentation, cap: usize) -> Option<CayleyTable> {
        let n = p.rank();
        let mut bilinear = vec![0.0; n * n];
        for s in p.generators() {
            for t in p.generators() {
                bilinear[s.index() * n + t.index()] = match p.label(s, t) {
                    Label::Finite(1) => 1.0,
                    Label::Finite(m) => -(PI / m as f64).cos(),
                    Label::Infinity => -1.0,
                };
            }
        }
        // column j of σ_s is σ_s(α_j) = α_j - 2 B(α_s, α_j) α_s
        let gens: Vec<Matrix> = p
            .generators()
            .map(|s| {
                let mut m = vec![0.0; n * n];
                for j in 0..n {
                    m[j * n + j] = 1.0;
                    m[s.index() * n + j] -= 2.0 * bilinear[s.index() * n + j];
                }
                m
            })
            .collect();

        let mut identity = vec![0.0; n * n];
        for i in 0..n {
            identity[i * n + i] = 1.0;
        }
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        seen.insert(key(&identity), 0);
        let mut mats = vec![identity];
        let mut words: Vec<Vec<GeneratorId>> = vec![Vec::new()];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < mats.len() {
            let mut row = Vec::with_capacity(n);
            for s in p.generators() {
                let m = mat_mul(n, &mats[head], &gens[s.index()]);
                let k = key(&m);
                let idx = match seen.get(&k) {
                    Some(&i) => i,
                    None => {
                        if mats.len() >= cap {
                            return None;
                        }
                        let i = mats.len();
                        seen.insert(k, i);
                        let mut w = words[head].clone();
                        w.push(s);
                        words.push(w);
                        mats.push(m);
                        i
                    }
                };
                row.push(idx);
            }
            right.push(row);
            head += 1;
        }

        let order = mats.len();
        let table = (0..order)
            .map(|i| (0..order).map(|j| words[j].iter().fold(i, |acc, s| right[acc][s.index()])).collect())
            .collect();
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Some(CayleyTable { words, table, index })
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// ShortLex-least reduced word of element `i`.
    pub fn word(&self, i: usize) -> &[GeneratorId] {
        &self.words[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.words[i].len()
    }

    pub fn multiply(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.table[i].iter().position(|&k| k == 0).expect("group element without inverse")
    }

    pub fn generator(&self, s: GeneratorId) -> usize {
        self.table[0][self.index[&vec![s]]]
    }

    /// Element represented by an arbitrary word.
    pub fn evaluate(&self, word: &[GeneratorId]) -> usize {
        word.iter().fold(0, |acc, &s| self.multiply(acc, self.generator(s)))
    }

    /// Index of the element whose least reduced word is `word`.
    pub fn index_of(&self, word: &[GeneratorId]) -> Option<usize> {
        self.index.get(word).copied()
    }

    /// Elements of the subgroup generated by the given generators.
    pub fn subgroup(&self, gens: impl IntoIterator<Item = GeneratorId>) -> Vec<usize> {
        let gens: Vec<usize> = gens.into_iter().map(|s| self.generator(s)).collect();
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            let e = out[head];
            for &g in &gens {
                let f = self.multiply(e, g);
                if !inside[f] {
                    inside[f] = true;
                    out.push(f);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::catalog;

    #[test]
    fn orders_of_small_groups() {
        let cases = [
            (catalog::a2(), 6),
            (catalog::b2(), 8),
            (catalog::i2(5), 10),
            (catalog::a1xa1(), 4),
            (catalog::a3(), 24),
            (catalog::dihedral(6), 12),
        ];
        for (p, order) in cases {
            assert_eq!(CayleyTable::build(&p, 1000).unwrap().order(), order);
        }
        assert!(CayleyTable::build(&catalog::free(2), 1000).is_none());
        assert!(CayleyTable::build(&catalog::triangle3(), 1000).is_none());
    }

    #[test]
    fn table_is_a_group() {
        let t = CayleyTable::build(&catalog::a3(), 100).unwrap();
        for i in 0..t.order() {
            assert_eq!(t.multiply(i, 0), i);
            assert_eq!(t.multiply(t.inverse(i), i), 0);
            for j in 0..t.order() {
                for k in [0, 5, 23] {
                    assert_eq!(t.multiply(t.multiply(i, j), k), t.multiply(i, t.multiply(j, k)));
                }
            }
        }
    }

    #[test]
    fn words_are_shortlex_least() {
        let p = catalog::a2();
        let t = CayleyTable::build(&p, 100).unwrap();
        let names: Vec<String> = (0..t.order()).map(|i| crate::coxeter::format_word(&p, t.word(i))).collect();
        assert_eq!(names, vec!["", "a", "b", "a b", "b a", "a b a"]);
        assert_eq!(t.subgroup([GeneratorId::new(0)]), vec![0, 1]);
    }
}

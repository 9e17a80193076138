use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_finite_edge, ArtinLetter, ArtinWord, Sign};
use crate::presentation::Presentation;

#[derive(Clone, Copy)]
enum Move {
    Insert,
    Cancel,
    Braid,
}

/// Positions `i` where `word[i..i + m]` is a same-sign alternating block
/// `Prod(x, y, m)^{±}`, together with the block length.
fn braid_sites(p: &Presentation, word: &[ArtinLetter]) -> Vec<(usize, usize)> {
    let mut sites = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a.sign != b.sign {
            continue;
        }
        let Some(m) = is_finite_edge(p, a.generator, b.generator) else {
            continue;
        };
        let m = m as usize;
        if i + m > word.len() {
            continue;
        }
        let ok = word[i..i + m]
            .iter()
            .enumerate()
            .all(|(k, l)| l.sign == a.sign && l.generator == if k % 2 == 0 { a.generator } else { b.generator });
        if ok {
            sites.push((i, m));
        }
    }
    sites
}

fn cancel_sites(word: &[ArtinLetter]) -> Vec<usize> {
    (0..word.len().saturating_sub(1)).filter(|&i| word[i].cancels(word[i + 1])).collect()
}

/// Applies `steps` random moves, each of which preserves the element of `A`
/// represented by the word: inserting `σ^ε σ^{-ε}`, cancelling such a pair,
/// or swapping one side of a braid relation (all letters positive, or all
/// negative) for the other. A move with no site falls back to insertion.
/// Deterministic in `(word, seed, steps)`.
pub fn fuzz_rewrite(p: &Presentation, word: &ArtinWord, seed: u64, steps: usize) -> ArtinWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut letters = word.letters().to_vec();
    if p.rank() == 0 {
        return word.clone();
    }
    for _ in 0..steps {
        let choice = [Move::Insert, Move::Cancel, Move::Braid][rng.gen_range(0..3)];
        let applied = match choice {
            Move::Insert => false,
            Move::Cancel => {
                let sites = cancel_sites(&letters);
                if let Some(&i) = sites.choose(&mut rng) {
                    letters.drain(i..i + 2);
                    true
                } else {
                    false
                }
            }
            Move::Braid => {
                let sites = braid_sites(p, &letters);
                if let Some(&(i, m)) = sites.choose(&mut rng) {
                    let (x, y) = (letters[i].generator, letters[i + 1].generator);
                    for (k, l) in letters[i..i + m].iter_mut().enumerate() {
                        l.generator = if k % 2 == 0 { y } else { x };
                    }
                    true
                } else {
                    false
                }
            }
        };
        if !applied {
            let g = crate::presentation::GeneratorId::new(rng.gen_range(0..p.rank()));
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            let at = rng.gen_range(0..=letters.len());
            let l = ArtinLetter { generator: g, sign };
            letters.splice(at..at, [l, l.inverse()]);
        }
    }
    ArtinWord::from(letters)
}

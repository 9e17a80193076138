use artin_parabolic::artin::{
    abelianization, color, equals_oracle, fuzz_rewrite, theta, ArtinLetter, ArtinWord, Decider, Verdict,
};
use artin_parabolic::presentation::catalog;
use artin_parabolic::retraction::{conjugate_into_parabolic, pi_hat, transport, verify_conjugation, CheckOutcome};
use artin_parabolic::{Coxeter, GeneratorId, GeneratorSubset, Presentation};
use proptest::prelude::*;

fn presentations() -> Vec<Presentation> {
    vec![
        catalog::a2(),
        catalog::b2(),
        catalog::i2(5),
        catalog::a3(),
        catalog::raag_square(),
        catalog::free(3),
        catalog::triangle3(),
    ]
}

fn to_word(raw: &[(u8, bool)], p: &Presentation, within: GeneratorSubset) -> ArtinWord {
    let gens: Vec<GeneratorId> = if within.is_empty() { p.generators().collect() } else { within.iter().collect() };
    raw.iter()
        .map(|&(g, pos)| {
            let g = gens[g as usize % gens.len()];
            if pos {
                ArtinLetter::pos(g)
            } else {
                ArtinLetter::neg(g)
            }
        })
        .collect()
}

fn subset(p: &Presentation, mask: u64) -> GeneratorSubset {
    GeneratorSubset::from_mask(mask & p.all().mask())
}

fn raw_word(max: usize) -> impl Strategy<Value = Vec<(u8, bool)>> {
    prop::collection::vec((any::<u8>(), any::<bool>()), 0..max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fixes_words_over_x_and_is_idempotent(pi in 0usize..7, mask in 1u64..16, raw in raw_word(30)) {
        let g = Coxeter::new(presentations()[pi].clone());
        let p = g.presentation();
        let x = subset(p, mask);
        prop_assume!(!x.is_empty());
        let w = to_word(&raw, p, x);
        let once = pi_hat(&g, x, &w).unwrap().word;
        prop_assert_eq!(&once, &w);
        prop_assert_eq!(pi_hat(&g, x, &once).unwrap().word, once);
    }

    #[test]
    fn full_subset_is_identity(pi in 0usize..7, raw in raw_word(20)) {
        let g = Coxeter::new(presentations()[pi].clone());
        let p = g.presentation();
        let w = to_word(&raw, p, GeneratorSubset::EMPTY);
        prop_assert_eq!(pi_hat(&g, p.all(), &w).unwrap().word, w);
    }

    #[test]
    fn output_lies_over_x_and_trace_is_consistent(pi in 0usize..7, mask in 0u64..16, raw in raw_word(16)) {
        let g = Coxeter::new(presentations()[pi].clone());
        let p = g.presentation();
        let x = subset(p, mask);
        let w = to_word(&raw, p, GeneratorSubset::EMPTY);
        let r = pi_hat(&g, x, &w).unwrap();
        prop_assert!(r.word.is_supported_on(x));
        prop_assert_eq!(r.trace.steps.len(), w.len());
        let emitted: ArtinWord = r.trace.steps.iter().filter_map(|s| s.emitted).collect();
        prop_assert_eq!(&emitted, &r.word);
        let mut v = g.identity();
        for s in &r.trace.steps {
            prop_assert_eq!(g.multiply(&s.vpart, &s.wpart).unwrap(), s.prefix.clone());
            prop_assert!(s.vpart.support().is_subset(x));
            prop_assert!(g.left_descents(&s.wpart).unwrap().intersection(x).is_empty());
            if s.emitted.is_none() {
                prop_assert_eq!(&s.vpart, &v);
            }
            v = s.vpart.clone();
        }
    }

    #[test]
    fn invariant_under_relations(pi in 0usize..7, mask in 1u64..16, raw in raw_word(12), seed: u64, steps in 0usize..20) {
        let g = Coxeter::new(presentations()[pi].clone());
        let p = g.presentation();
        let x = subset(p, mask);
        let w = to_word(&raw, p, GeneratorSubset::EMPTY);
        let f = fuzz_rewrite(p, &w, seed, steps);
        let (a, b) = (pi_hat(&g, x, &w).unwrap().word, pi_hat(&g, x, &f).unwrap().word);
        prop_assert_eq!(theta(&g, &a).unwrap(), theta(&g, &b).unwrap());
        prop_assert_eq!(abelianization(p, &a), abelianization(p, &b));
        let v = equals_oracle(&g, &a, &b).unwrap();
        prop_assert_ne!(v.verdict, Verdict::NotEqual);
        if Decider::classify(&p.induced(x).unwrap()).is_some() {
            prop_assert_eq!(v.verdict, Verdict::Equal);
        }
    }

    #[test]
    fn homomorphism_on_colored_words(pi in 0usize..7, mask in 1u64..16, r1 in raw_word(10), r2 in raw_word(10)) {
        let g = Coxeter::new(presentations()[pi].clone());
        let p = g.presentation();
        let x = subset(p, mask);
        let b1 = color(&g, &to_word(&r1, p, GeneratorSubset::EMPTY)).unwrap();
        let b2 = color(&g, &to_word(&r2, p, GeneratorSubset::EMPTY)).unwrap();
        let lhs = pi_hat(&g, x, &b1.concat(&b2)).unwrap().word;
        let rhs = pi_hat(&g, x, &b1).unwrap().word.concat(&pi_hat(&g, x, &b2).unwrap().word);
        let v = equals_oracle(&g, &lhs, &rhs).unwrap();
        prop_assert_ne!(v.verdict, Verdict::NotEqual);
        if Decider::classify(&p.induced(x).unwrap()).is_some() {
            prop_assert_eq!(v.verdict, Verdict::Equal);
        }
    }
}

/// Every finite `W`, every admissible `(w, X, Y)`.
#[test]
fn transport_postconditions_exhaustive() {
    for p in [catalog::a2(), catalog::b2(), catalog::i2(5), catalog::a3()] {
        let g = Coxeter::new(p);
        let p = g.presentation().clone();
        let (elems, finite) = g.enumerate(100).unwrap();
        assert!(finite);
        for w in &elems {
            for x in p.all().subsets() {
                for y in p.all().subsets() {
                    let Ok(t) = transport(&g, x, y, w) else { continue };
                    assert!(t.yprime.is_subset(x));
                    assert_eq!(t.yprime.len(), y.len());
                    assert!(g.is_minimal(x, y, &t.decomposition.w0).unwrap());
                    assert!(t.alpha.iter().all(|l| x.contains(l.generator) && l.sign.value() == 1));
                    for &(s, fs) in &t.f {
                        let c = g.conjugate(&t.decomposition.w0, &g.generator(s)).unwrap();
                        assert_eq!(c.as_generator(), Some(fs));
                    }
                }
            }
        }
    }
}

#[test]
fn conjugation_on_words_over_x_satisfies_contract() {
    // Y ⊆ X and alpha over X: Y' need not equal Y, only the contract is checked
    let g = Coxeter::new(catalog::b2());
    let p = g.presentation().clone();
    let (x, y) = (p.all(), p.parse_subset("a").unwrap());
    for text in ["a b", "b a b^-1", "a b a b a", "b^-1 a^-1 b"] {
        let alpha = ArtinWord::parse(&p, text).unwrap();
        let r = conjugate_into_parabolic(&g, x, y, &alpha).unwrap();
        assert!(r.yprime.is_subset(x));
        assert!(r.gamma.is_supported_on(x));
        assert_eq!(theta(&g, &r.audit.beta1).unwrap(), g.identity());
        assert_eq!(r.gamma, r.audit.pi_of_beta1.concat(&r.audit.beta2));
        let rep = verify_conjugation(&g, x, y, &alpha, &r).unwrap();
        assert_eq!(rep.coxeter_level, CheckOutcome::Pass, "{text}");
        assert_eq!(rep.artin_level, CheckOutcome::Pass, "{text}");
    }
}

//! Batch verification suites. Every suite is a list of independent
//! instances, run through [`crate::par::map`] and tallied in instance
//! order, so reports are identical in both execution modes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artin::{
    abelianization, color, equals_oracle, fuzz_rewrite, iota, theta, ArtinLetter, ArtinWord, Decider, Verdict,
};
use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::presentation::{catalog, GeneratorId, GeneratorSubset, Presentation};
use crate::reflection::CayleyTable;
use crate::retraction::{
    conjugate_into_parabolic, generate_instance, pi_hat, transport, verify_colored_conjugation, verify_conjugation,
    CheckOutcome, InstanceParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    CoxeterOracle,
    DoubleCosets,
    Retraction,
    Transport,
    ColoredConjugation,
    Conjugation,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::CoxeterOracle,
        Suite::DoubleCosets,
        Suite::Retraction,
        Suite::Transport,
        Suite::ColoredConjugation,
        Suite::Conjugation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CoxeterOracle => "coxeter-oracle",
            Suite::DoubleCosets => "lemma21",
            Suite::Retraction => "prop23",
            Suite::Transport => "lemma22",
            Suite::ColoredConjugation => "lemma24",
            Suite::Conjugation => "theorem11",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .map(|s| vec![s])
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{name}'")))
    }
}

const MAX_LISTED: usize = 10;

/// Counts for one property across all instances of a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// Instances where the exact check is undecidable and only the
    /// invariants (image in `W`, abelianization) could be compared.
    pub undecided: usize,
    /// The first few failures, in instance order.
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed + self.undecided > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckReport::ok)
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    Fail(String),
    Undecided,
}

impl Status {
    fn expect(cond: bool, msg: impl FnOnce() -> String) -> Status {
        if cond {
            Status::Pass
        } else {
            Status::Fail(msg())
        }
    }
}

type Outcomes = Vec<(&'static str, Status)>;

/// One instance: a label for failure messages and the per-check results.
struct Run {
    label: String,
    outcomes: Result<Outcomes>,
}

fn tally(suite: Suite, runs: Vec<Run>) -> SuiteReport {
    fn slot(name: &str, checks: &mut Vec<CheckReport>) -> usize {
        match checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                checks.push(CheckReport {
                    name: name.to_string(),
                    passed: 0,
                    failed: 0,
                    undecided: 0,
                    failures: Vec::new(),
                });
                checks.len() - 1
            }
        }
    }
    let mut checks: Vec<CheckReport> = Vec::new();
    for run in runs {
        let outcomes = match run.outcomes {
            Ok(o) => o,
            Err(e) => vec![("evaluation", Status::Fail(format!("error[{}]: {e}", e.code())))],
        };
        for (name, status) in outcomes {
            let i = slot(name, &mut checks);
            let c = &mut checks[i];
            match status {
                Status::Pass => c.passed += 1,
                Status::Undecided => c.undecided += 1,
                Status::Fail(msg) => {
                    c.failed += 1;
                    if c.failures.len() < MAX_LISTED {
                        c.failures.push(format!("{}: {msg}", run.label));
                    }
                }
            }
        }
    }
    SuiteReport { suite: suite.name(), checks }
}

/// Runs one suite.
pub fn run(suite: Suite, exec: Execution) -> SuiteReport {
    match suite {
        Suite::CoxeterOracle => coxeter_oracle(exec),
        Suite::DoubleCosets => double_cosets(exec),
        Suite::Retraction => retraction(exec),
        Suite::Transport => transport_suite(exec),
        Suite::ColoredConjugation => colored_conjugation(exec),
        Suite::Conjugation => conjugation(exec),
    }
}

struct Group {
    name: &'static str,
    w: Coxeter,
    decidable: bool,
}

impl Group {
    fn new(name: &'static str, p: Presentation) -> Group {
        let decidable = Decider::classify(&p).is_some();
        Group { name, w: Coxeter::new(p), decidable }
    }

    fn p(&self) -> &Presentation {
        self.w.presentation()
    }
}

fn random_letter(rng: &mut ChaCha8Rng, gens: &[GeneratorId]) -> ArtinLetter {
    let g = gens[rng.gen_range(0..gens.len())];
    if rng.gen_bool(0.5) {
        ArtinLetter::pos(g)
    } else {
        ArtinLetter::neg(g)
    }
}

fn random_word(rng: &mut ChaCha8Rng, set: GeneratorSubset, len: usize) -> ArtinWord {
    let gens: Vec<GeneratorId> = set.iter().collect();
    if gens.is_empty() {
        return ArtinWord::new();
    }
    (0..len).map(|_| random_letter(rng, &gens)).collect()
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, p: &Presentation) -> GeneratorSubset {
    GeneratorSubset::from_mask(rng.gen_range(1..=p.all().mask()))
}

/// Stable per-instance seed.
fn seed_for(suite: u64, index: usize) -> u64 {
    suite.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index as u64
}

fn finite_groups() -> Vec<(&'static str, Presentation, usize)> {
    vec![
        ("A2", catalog::a2(), 6),
        ("B2", catalog::b2(), 8),
        ("I2(5)", catalog::i2(5), 10),
        ("A1xA1", catalog::a1xa1(), 4),
        ("A3", catalog::a3(), 24),
    ]
}

fn coxeter_oracle(exec: Execution) -> SuiteReport {
    let mut runs = Vec::new();
    for (name, p, expected) in finite_groups() {
        let g = Coxeter::new(p.clone());
        let Some(table) = CayleyTable::build(&p, 10 * expected) else {
            runs.push(Run {
                label: name.into(),
                outcomes: Ok(vec![("order", Status::Fail("reflection BFS did not close".into()))]),
            });
            continue;
        };
        let outcomes = g.enumerate(10 * expected).map(|(elems, finite)| {
            let mut words: Vec<_> = elems.iter().map(|e| e.canonical().to_vec()).collect();
            words.sort();
            let mut oracle: Vec<_> = (0..table.order()).map(|i| table.word(i).to_vec()).collect();
            oracle.sort();
            vec![
                (
                    "order",
                    Status::expect(finite && table.order() == expected && elems.len() == expected, || {
                        format!(
                            "kernel {} (closed: {finite}), oracle {}, expected {expected}",
                            elems.len(),
                            table.order()
                        )
                    }),
                ),
                (
                    "element sets",
                    Status::expect(words == oracle, || "kernel and oracle enumerate different words".into()),
                ),
            ]
        });
        runs.push(Run { label: name.into(), outcomes });

        let indices: Vec<usize> = (0..table.order()).collect();
        let rows = par::map(&indices, exec, |&i| -> Vec<Run> {
            let label = |j: Option<usize>| match j {
                None => format!("{name} {}", g.format_word_or_one(table.word(i))),
                Some(j) => format!(
                    "{name} ({}) * ({})",
                    g.format_word_or_one(table.word(i)),
                    g.format_word_or_one(table.word(j))
                ),
            };
            let mut out = Vec::with_capacity(table.order() + 1);
            out.push(Run {
                label: label(None),
                outcomes: g.reduce(table.word(i)).map(|u| {
                    vec![(
                        "canonical words",
                        Status::expect(u.canonical() == table.word(i), || "kernel canonical word differs".into()),
                    )]
                }),
            });
            for j in 0..table.order() {
                let outcomes = (|| -> Result<Outcomes> {
                    let u = g.reduce(table.word(i))?;
                    let v = g.reduce(table.word(j))?;
                    let prod = g.multiply(&u, &v)?;
                    let expect = table.word(table.multiply(i, j));
                    Ok(vec![(
                        "multiplication",
                        Status::expect(prod.canonical() == expect, || {
                            format!("kernel {}, oracle {}", g.format(&prod), g.format_word_or_one(expect))
                        }),
                    )])
                })();
                out.push(Run { label: label(Some(j)), outcomes });
            }
            out
        });
        runs.extend(rows.into_iter().flatten());
    }
    tally(Suite::CoxeterOracle, runs)
}

impl Coxeter {
    fn format_word_or_one(&self, word: &[GeneratorId]) -> String {
        if word.is_empty() {
            "1".into()
        } else {
            crate::coxeter::format_word(self.presentation(), word)
        }
    }
}

fn subset_pairs(p: &Presentation) -> Vec<(GeneratorSubset, GeneratorSubset)> {
    let subsets: Vec<GeneratorSubset> = p.all().subsets().collect();
    subsets.iter().flat_map(|&x| subsets.iter().map(move |&y| (x, y))).collect()
}

fn double_cosets(exec: Execution) -> SuiteReport {
    let mut runs = Vec::new();
    for (name, p) in [("A3", catalog::a3()), ("B2", catalog::b2()), ("I2(5)", catalog::i2(5))] {
        let g = Coxeter::new(p.clone());
        let table = CayleyTable::build(&p, 1000).expect("finite");
        let subsets: Vec<GeneratorSubset> = p.all().subsets().collect();
        let subgroups: Vec<Vec<usize>> = subsets.iter().map(|x| table.subgroup(x.iter())).collect();
        let mut cases = Vec::new();
        for u in 0..table.order() {
            for xi in 0..subsets.len() {
                for yi in 0..subsets.len() {
                    cases.push((u, xi, yi));
                }
            }
        }
        runs.extend(par::map(&cases, exec, |&(ui, xi, yi)| {
            let (x, y) = (subsets[xi], subsets[yi]);
            let (wx, wy) = (&subgroups[xi], &subgroups[yi]);
            let label = format!(
                "{name} u={} X={} Y={}",
                g.format_word_or_one(table.word(ui)),
                p.format_subset(x),
                p.format_subset(y)
            );
            let outcomes = (|| -> Result<Outcomes> {
                let u = g.reduce(table.word(ui))?;
                let d = g.double_coset_decompose(x, y, &u)?;
                let idx = |e: &CoxeterElement| table.evaluate(e.canonical());
                let (u1, w0, u2) = (idx(&d.u1), idx(&d.w0), idx(&d.u2));

                let mut coset: Vec<usize> = wx
                    .iter()
                    .flat_map(|&a| wy.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| table.multiply(table.multiply(a, ui), b))
                    .collect();
                coset.sort_unstable();
                coset.dedup();
                let min = coset.iter().map(|&v| table.length(v)).min().unwrap_or(0);
                let minima: Vec<usize> = coset.iter().copied().filter(|&v| table.length(v) == min).collect();

                let mut out = vec![(
                    "unique minimum",
                    Status::expect(minima == vec![w0], || {
                        format!("{} minima, kernel w0 = {}", minima.len(), g.format(&d.w0))
                    }),
                )];
                out.push((
                    "decomposition",
                    Status::expect(
                        wx.binary_search(&u1).is_ok()
                            && wy.binary_search(&u2).is_ok()
                            && table.multiply(table.multiply(u1, w0), u2) == ui
                            && table.length(u1) + table.length(w0) + table.length(u2) == table.length(ui),
                        || format!("({}, {}, {})", g.format(&d.u1), g.format(&d.w0), g.format(&d.u2)),
                    ),
                ));
                let every_v = coset.iter().all(|&v| {
                    wx.iter().any(|&a| {
                        wy.iter().any(|&b| {
                            table.multiply(table.multiply(a, w0), b) == v
                                && table.length(a) + table.length(w0) + table.length(b) == table.length(v)
                        })
                    })
                });
                out.push((
                    "reduced factorization of the coset",
                    Status::expect(every_v, || "some v lacks a length-additive u1 w0 u2 form".into()),
                ));
                let additive = wx
                    .iter()
                    .all(|&a| table.length(table.multiply(a, w0)) == table.length(a) + table.length(w0))
                    && wy.iter().all(|&b| table.length(table.multiply(w0, b)) == table.length(w0) + table.length(b));
                out.push(("one-sided additivity", Status::expect(additive, || "length drops".into())));
                let minimal = g.is_minimal(x, y, &u)?;
                out.push((
                    "descent test for minimality",
                    Status::expect(minimal == (ui == w0), || format!("is_minimal = {minimal}")),
                ));
                Ok(out)
            })();
            Run { label, outcomes }
        }));
    }
    tally(Suite::DoubleCosets, runs)
}

/// Fixed choices of `X` per presentation for the identity check.
fn x_choices(p: &Presentation) -> Vec<GeneratorSubset> {
    let texts: &[&str] = match p.rank() {
        2 => &["a", "b", "a,b"],
        3 => &["a", "a,c", "b,c"],
        _ => &["a", "a,c", "b,c,d"],
    };
    texts.iter().map(|t| p.parse_subset(t).expect("catalog names")).collect()
}

/// Compares two words that should be equal in `A`: exact where decidable,
/// otherwise by the image in `W` and the abelianization.
fn equal_in_a(group: &Group, a: &ArtinWord, b: &ArtinWord) -> Result<Status> {
    let g = &group.w;
    let v = equals_oracle(g, a, b)?;
    Ok(match v.verdict {
        Verdict::Equal => Status::Pass,
        Verdict::NotEqual => {
            Status::Fail(format!("{} vs {}: {}", a.format(g.presentation()), b.format(g.presentation()), v.witness))
        }
        Verdict::Unknown if group.decidable => Status::Fail("undecided in a decidable class".into()),
        Verdict::Unknown => {
            if theta(g, a)? == theta(g, b)?
                && abelianization(g.presentation(), a) == abelianization(g.presentation(), b)
            {
                Status::Undecided
            } else {
                Status::Fail("invariants differ".into())
            }
        }
    })
}

/// Every invariant of the retraction trace.
fn trace_invariants(g: &Coxeter, x: GeneratorSubset, w: &ArtinWord) -> Result<Status> {
    let r = pi_hat(g, x, w)?;
    let (mut u, mut v, mut wp) = (g.identity(), g.identity(), g.identity());
    for (i, (step, l)) in r.trace.steps.iter().zip(w.iter()).enumerate() {
        u = g.mul_generator(&u, l.generator)?;
        let by = if l.sign.value() > 0 { &wp } else { &step.wpart };
        let t = g.conjugate(by, &g.generator(l.generator))?;
        let ok = step.prefix == u
            && g.multiply(&step.vpart, &step.wpart)? == u
            && step.vpart.length() + step.wpart.length() == u.length()
            && step.vpart.support().is_subset(x)
            && g.left_descents(&step.wpart)?.intersection(x).is_empty()
            && step.reflection == t
            && step.emitted.map(|e| e.generator) == t.as_generator().filter(|&s| x.contains(s))
            && step.emitted.is_none_or(|e| e.sign == l.sign)
            && (step.emitted.is_some() || step.vpart == v);
        if !ok {
            return Ok(Status::Fail(format!("step {}", i + 1)));
        }
        v = step.vpart.clone();
        wp = step.wpart.clone();
    }
    Ok(Status::Pass)
}

fn retraction_groups() -> Vec<Group> {
    vec![
        Group::new("dihedral m=3", catalog::dihedral(3)),
        Group::new("dihedral m=4", catalog::dihedral(4)),
        Group::new("dihedral m=5", catalog::dihedral(5)),
        Group::new("RAAG square", catalog::raag_square()),
        Group::new("free rank 3", catalog::free(3)),
        Group::new("triangle m=3", catalog::triangle3()),
    ]
}

fn retraction(exec: Execution) -> SuiteReport {
    let mut runs = Vec::new();

    // retraction fixes words over X letter for letter
    let id_groups = [
        Group::new("A2", catalog::a2()),
        Group::new("B2", catalog::b2()),
        Group::new("A3", catalog::a3()),
        Group::new("RAAG square", catalog::raag_square()),
        Group::new("free rank 3", catalog::free(3)),
        Group::new("triangle m=3", catalog::triangle3()),
    ];
    let combos: Vec<(usize, GeneratorSubset)> =
        id_groups.iter().enumerate().flat_map(|(gi, gr)| x_choices(gr.p()).into_iter().map(move |x| (gi, x))).collect();
    let cases: Vec<usize> = (0..1000).collect();
    runs.extend(par::map(&cases, exec, |&i| {
        let (gi, x) = combos[i % combos.len()];
        let gr = &id_groups[gi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(31, i));
        let len = rng.gen_range(0..=30);
        let w = random_word(&mut rng, x, len);
        let label = format!("{} X={} w={}", gr.name, gr.p().format_subset(x), w.format(gr.p()));
        let outcomes = pi_hat(&gr.w, x, &w).map(|r| {
            vec![
                (
                    "retraction fixes A_X words",
                    Status::expect(r.word == w, || format!("got {}", r.word.format(gr.p()))),
                ),
                (
                    "idempotence on A_X words",
                    Status::expect(pi_hat(&gr.w, x, &r.word).map(|s| s.word == r.word).unwrap_or(false), || {
                        "second application changed the word".into()
                    }),
                ),
            ]
        });
        Run { label, outcomes }
    }));

    // well-definedness and the colored homomorphism property
    let groups = retraction_groups();
    let cases: Vec<(usize, usize)> = (0..groups.len()).flat_map(|gi| (0..500).map(move |i| (gi, i))).collect();
    runs.extend(par::map(&cases, exec, |&(gi, i)| {
        let gr = &groups[gi];
        let g = &gr.w;
        let p = gr.p();
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(32 + gi as u64, i));
        let x = random_nonempty_subset(&mut rng, p);
        let len = rng.gen_range(1..=12);
        let w = random_word(&mut rng, p.all(), len);
        let steps = rng.gen_range(0..=20);
        let fuzzed = fuzz_rewrite(p, &w, rng.gen(), steps);
        let label = format!("{} X={} w={} w'={}", gr.name, p.format_subset(x), w.format(p), fuzzed.format(p));
        let outcomes = (|| -> Result<Outcomes> {
            let a = pi_hat(g, x, &w)?.word;
            let b = pi_hat(g, x, &fuzzed)?.word;
            let mut out = vec![
                ("well-definedness", equal_in_a(gr, &a, &b)?),
                (
                    "well-definedness invariants",
                    Status::expect(
                        theta(g, &a)? == theta(g, &b)? && abelianization(p, &a) == abelianization(p, &b),
                        || "image in W or abelianization differs".into(),
                    ),
                ),
                ("trace invariants", trace_invariants(g, x, &fuzzed)?),
            ];
            if i < 200 {
                let l1 = rng.gen_range(0..=10);
                let l2 = rng.gen_range(0..=10);
                let b1 = color(g, &random_word(&mut rng, p.all(), l1))?;
                let b2 = color(g, &random_word(&mut rng, p.all(), l2))?;
                let lhs = pi_hat(g, x, &b1.concat(&b2))?.word;
                let rhs = pi_hat(g, x, &b1)?.word.concat(&pi_hat(g, x, &b2)?.word);
                out.push(("colored homomorphism", equal_in_a(gr, &lhs, &rhs)?));
                out.push((
                    "colored words have length <= 20",
                    Status::expect(b1.len() <= 20 && b2.len() <= 20, || "colored word too long".into()),
                ));
            }
            Ok(out)
        })();
        Run { label, outcomes }
    }));
    tally(Suite::Retraction, runs)
}

fn transport_suite(exec: Execution) -> SuiteReport {
    let mut runs = Vec::new();

    for (name, p) in [("A3", catalog::a3()), ("B2", catalog::b2()), ("A2", catalog::a2())] {
        let g = Coxeter::new(p.clone());
        let table = CayleyTable::build(&p, 1000).expect("finite");
        let mut cases = Vec::new();
        for u in 0..table.order() {
            for (x, y) in subset_pairs(&p) {
                cases.push((u, x, y));
            }
        }
        runs.extend(par::map(&cases, exec, |&(wi, x, y)| {
            let label = format!(
                "{name} w={} X={} Y={}",
                g.format_word_or_one(table.word(wi)),
                p.format_subset(x),
                p.format_subset(y)
            );
            let outcomes = (|| -> Result<Outcomes> {
                let wx = table.subgroup(x.iter());
                let admissible = y.iter().all(|s| {
                    let c = table.multiply(table.multiply(wi, table.generator(s)), table.inverse(wi));
                    wx.binary_search(&c).is_ok()
                });
                let w = g.reduce(table.word(wi))?;
                let t = match transport(&g, x, y, &w) {
                    Err(Error::PreconditionViolated(_)) if !admissible => {
                        return Ok(vec![("precondition rejection", Status::Pass)]);
                    }
                    Err(e) => return Err(e),
                    Ok(_) if !admissible => {
                        return Ok(vec![("precondition rejection", Status::Fail("accepted".into()))]);
                    }
                    Ok(t) => t,
                };
                let d = &t.decomposition;
                let idx = |e: &CoxeterElement| table.evaluate(e.canonical());
                let (u1, w0, u2) = (idx(&d.u1), idx(&d.w0), idx(&d.u2));
                let w0_inv = table.inverse(w0);
                let length_one = t.f.iter().all(|&(s, fs)| {
                    let c = table.multiply(table.multiply(w0, table.generator(s)), w0_inv);
                    table.word(c) == [fs] && x.contains(fs)
                });
                let images: GeneratorSubset = t.f.iter().map(|&(_, fs)| fs).collect();
                let wy = table.subgroup(y.iter());
                let coset_min = wx
                    .iter()
                    .flat_map(|&a| wy.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| table.multiply(table.multiply(a, wi), b))
                    .min_by_key(|&v| table.length(v));
                Ok(vec![
                    (
                        "conjugation by w0 sends generators to generators",
                        Status::expect(length_one, || format!("w0 = {}", g.format(&d.w0))),
                    ),
                    (
                        "f injective with image Y'",
                        Status::expect(t.f.len() == y.len() && images.len() == y.len() && images == t.yprime, || {
                            "f is not a bijection onto Y'".into()
                        }),
                    ),
                    (
                        "length-additive decomposition",
                        Status::expect(
                            table.multiply(table.multiply(u1, w0), u2) == wi
                                && table.length(u1) + table.length(w0) + table.length(u2) == table.length(wi)
                                && coset_min.map(|m| table.length(m)) == Some(table.length(w0)),
                            || format!("({}, {}, {})", g.format(&d.u1), g.format(&d.w0), g.format(&d.u2)),
                        ),
                    ),
                    ("alpha is iota(u1)", Status::expect(t.alpha == iota(&d.u1), || "alpha differs".into())),
                ])
            })();
            Run { label, outcomes }
        }));
    }

    // Artin-level conclusion on dihedral groups
    for m in [3, 4, 5, 6] {
        let gr = Group::new("dihedral", catalog::dihedral(m));
        let g = &gr.w;
        let p = gr.p();
        let (elems, _) = g.enumerate(1000).expect("finite dihedral group");
        let mut cases = Vec::new();
        for e in elems.into_iter().filter(|e| e.length() <= 6) {
            for (x, y) in subset_pairs(p) {
                cases.push((e.clone(), x, y));
            }
        }
        runs.extend(par::map(&cases, exec, |(w, x, y)| {
            let (x, y) = (*x, *y);
            let label = format!("dihedral m={m} w={} X={} Y={}", g.format(w), p.format_subset(x), p.format_subset(y));
            let outcomes = (|| -> Result<Outcomes> {
                let t = match transport(g, x, y, w) {
                    Err(Error::PreconditionViolated(_)) => return Ok(Vec::new()),
                    other => other?,
                };
                let sigma = |s: GeneratorId| ArtinWord::from(vec![ArtinLetter::pos(s)]);
                let conj = |by: &ArtinWord, h: &ArtinWord| by.concat(h).concat(&by.inverse());
                let iw0 = iota(&t.decomposition.w0);
                let mut generator_identity = Status::Pass;
                for &(s, fs) in &t.f {
                    let v = equals_oracle(g, &conj(&iw0, &sigma(s)), &sigma(fs))?;
                    if !v.is_equal() {
                        generator_identity =
                            Status::Fail(format!("iota(w0) s_{} iota(w0)^-1 vs s_{}", p.name(s), p.name(fs)));
                        break;
                    }
                }
                let iw = iota(w);
                let d = Decider::Dihedral;
                let mut subgroup = Status::Pass;
                for s in y.iter() {
                    let h = conj(&t.alpha.inverse(), &conj(&iw, &sigma(s)));
                    if !d.contains(p, t.yprime, &h)? {
                        subgroup =
                            Status::Fail(format!("iota(w) s_{} iota(w)^-1 not in alpha A_Y' alpha^-1", p.name(s)));
                    }
                }
                for s in t.yprime.iter() {
                    let h = conj(&iw.inverse(), &conj(&t.alpha, &sigma(s)));
                    if !d.contains(p, y, &h)? {
                        subgroup =
                            Status::Fail(format!("alpha s_{} alpha^-1 not in iota(w) A_Y iota(w)^-1", p.name(s)));
                    }
                }
                Ok(vec![
                    ("dihedral: w0 conjugates generators in A", generator_identity),
                    ("dihedral: subgroup equality in A", subgroup),
                ])
            })();
            Run { label, outcomes }
        }));
    }
    tally(Suite::Transport, runs)
}

fn theorem_groups() -> Vec<Group> {
    vec![
        Group::new("dihedral m=3", catalog::dihedral(3)),
        Group::new("dihedral m=4", catalog::dihedral(4)),
        Group::new("RAAG square", catalog::raag_square()),
        Group::new("free rank 3", catalog::free(3)),
        Group::new("triangle m=3", catalog::triangle3()),
        Group::new("A3", catalog::a3()),
    ]
}

/// Instance parameters varied by seed so that both small and full `X` occur.
fn theorem_params(p: &Presentation, i: usize) -> InstanceParams {
    let n = p.rank();
    let x_size = 1 + i % n;
    let y_size = 1 + (i / n) % x_size;
    InstanceParams { x_size, y_size, pad_len: 3, w_search_len: 6 }
}

fn colored_conjugation(exec: Execution) -> SuiteReport {
    let mut runs = Vec::new();

    // fixed examples on A2
    let a2 = Group::new("A2", catalog::a2());
    let p = a2.p();
    let word = |s: &str| ArtinWord::parse(p, s).expect("valid");
    let xa = p.parse_subset("a").expect("valid");
    let pipeline = conjugate_into_parabolic(&a2.w, xa, p.parse_subset("b").expect("valid"), &word("b a"));
    for (label, beta) in [
        ("beta = a a", Ok(word("a a"))),
        ("beta = b b^-1", Ok(word("b b^-1"))),
        ("beta = beta1 of the pipeline", pipeline.map(|r| r.audit.beta1)),
    ] {
        let outcomes = beta
            .and_then(|beta| verify_colored_conjugation(&a2.w, xa, &word("a"), &beta))
            .map(|r| vec![("examples", Status::expect(r.verdict.is_equal(), || format!("{:?}", r.verdict)))]);
        runs.push(Run { label: format!("A2 {label}"), outcomes });
    }

    let groups = theorem_groups();
    let cases: Vec<(usize, usize)> = (0..groups.len()).flat_map(|gi| (0..60).map(move |i| (gi, i))).collect();
    runs.extend(par::map(&cases, exec, |&(gi, i)| {
        let gr = &groups[gi];
        let g = &gr.w;
        let p = gr.p();
        let seed = seed_for(41, i);
        let mut label = format!("{} seed={seed}", gr.name);
        let outcomes = (|| -> Result<Outcomes> {
            let inst = generate_instance(g, seed, theorem_params(p, i))?;
            let r = conjugate_into_parabolic(g, inst.x, inst.y, &inst.alpha)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let len = rng.gen_range(1..=4);
            let inner = random_word(&mut rng, r.yprime, len);
            let beta2 = &r.audit.beta2;
            let alpha = beta2.concat(&inner).concat(&beta2.inverse());
            label = format!("{label} X={} alpha={}", p.format_subset(inst.x), alpha.format(p));
            let report = verify_colored_conjugation(g, inst.x, &alpha, &r.audit.beta1)?;
            let status = match report.verdict.verdict {
                Verdict::Equal => Status::Pass,
                Verdict::NotEqual => Status::Fail(report.verdict.witness.clone()),
                Verdict::Unknown if gr.decidable => Status::Fail("undecided in a decidable class".into()),
                Verdict::Unknown => {
                    let (l, r) = (&report.lhs, &report.rhs);
                    if theta(g, l)? == theta(g, r)? && abelianization(p, l) == abelianization(p, r) {
                        Status::Undecided
                    } else {
                        Status::Fail("invariants differ".into())
                    }
                }
            };
            Ok(vec![("conjugation through the retraction", status)])
        })();
        Run { label, outcomes }
    }));
    tally(Suite::ColoredConjugation, runs)
}

fn conjugation(exec: Execution) -> SuiteReport {
    let mut runs = Vec::new();

    let a2 = Coxeter::new(catalog::a2());
    let p = a2.presentation();
    let (xa, yb) = (p.parse_subset("a").expect("valid"), p.parse_subset("b").expect("valid"));
    let outcomes = conjugate_into_parabolic(&a2, xa, yb, &ArtinWord::parse(p, "b a").expect("valid")).map(|r| {
        vec![(
            "worked example",
            Status::expect(r.yprime == xa && r.gamma.is_empty(), || {
                format!("Y' = {}, gamma = {}", p.format_subset(r.yprime), r.gamma.format(p))
            }),
        )]
    });
    runs.push(Run { label: "A2 X={a} Y={b} alpha=b a".into(), outcomes });

    let (xab, ya) = (p.all(), xa);
    let outcomes = conjugate_into_parabolic(&a2, xab, ya, &ArtinWord::new()).and_then(|mut r| {
        r.gamma = ArtinWord::parse(p, "b")?;
        let rep = verify_conjugation(&a2, xab, ya, &ArtinWord::new(), &r)?;
        Ok(vec![("negative control", Status::expect(rep.coxeter_level.failed(), || "corrupted gamma accepted".into()))])
    });
    runs.push(Run { label: "A2 corrupted gamma".into(), outcomes });

    let groups = theorem_groups();
    let cases: Vec<(usize, usize)> = (0..groups.len()).flat_map(|gi| (0..100).map(move |i| (gi, i))).collect();
    runs.extend(par::map(&cases, exec, |&(gi, i)| {
        let gr = &groups[gi];
        let g = &gr.w;
        let p = gr.p();
        let seed = seed_for(11, i);
        let mut label = format!("{} seed={seed}", gr.name);
        let outcomes = (|| -> Result<Outcomes> {
            let inst = generate_instance(g, seed, theorem_params(p, i))?;
            label = format!(
                "{label} X={} Y={} alpha={}",
                p.format_subset(inst.x),
                p.format_subset(inst.y),
                inst.alpha.format(p)
            );
            let r = conjugate_into_parabolic(g, inst.x, inst.y, &inst.alpha)?;
            let rep = verify_conjugation(g, inst.x, inst.y, &inst.alpha, &r)?;
            let convert = |c: &CheckOutcome| match c {
                CheckOutcome::Pass => Status::Pass,
                CheckOutcome::Fail(m) => Status::Fail(m.clone()),
                CheckOutcome::Skipped(m) if gr.decidable => Status::Fail(format!("skipped: {m}")),
                CheckOutcome::Skipped(_) => Status::Undecided,
            };
            Ok(vec![
                ("pipeline", Status::Pass),
                ("gamma over X", convert(&rep.support)),
                ("equality in W", convert(&rep.coxeter_level)),
                ("equality in A", convert(&rep.artin_level)),
            ])
        })();
        Run { label, outcomes }
    }));
    tally(Suite::Conjugation, runs)
}

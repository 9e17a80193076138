//! The set-retraction `π_X : A → A_X` and the constructions built on it.
//!
//! For a word `σ_{z1}^{ε1} ... σ_{zp}^{εp}` let `u_i = s_{z1} ... s_{zi}` and
//! write `u_i = v_i w_i` with `v_i ∈ W_X` and `w_i` `(X, ∅)`-minimal. Letter
//! `i` is sent to `σ_x^{εi}` when the reflection
//!
//! * `t_i = w_{i-1} s_{zi} w_{i-1}⁻¹` (for `εi = +1`), or
//! * `t_i = w_i s_{zi} w_i⁻¹` (for `εi = -1`)
//!
//! is a generator `s_x` with `x ∈ X`, and is dropped otherwise. The map is
//! well defined on `A`, fixes `A_X` pointwise and is a homomorphism on the
//! colored subgroup `CA = ker θ`.
//!
//! On top of it: [`transport`] moves `ι(w) A_Y ι(w)⁻¹` into the form
//! `α A_{Y'} α⁻¹` with `α ∈ A_X`, and [`conjugate_into_parabolic`] does the
//! same for an arbitrary `α ∈ A` with `α A_Y α⁻¹ ⊆ A_X`.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artin::{equals_oracle, iota, is_colored, theta, ArtinLetter, ArtinWord, Decider, EqualityVerdict, Sign};
use crate::coxeter::{Coxeter, CoxeterElement};
use crate::error::{Error, Result};
use crate::parabolic::{CosetDecomposition, DoubleCosetDecomposition};
use crate::presentation::{GeneratorId, GeneratorSubset};

/// Everything computed for one letter of the input word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub letter: ArtinLetter,
    /// `u_i`.
    pub prefix: CoxeterElement,
    /// `v_i ∈ W_X`.
    pub vpart: CoxeterElement,
    /// `w_i`, `(X, ∅)`-minimal.
    pub wpart: CoxeterElement,
    /// `t_i`.
    pub reflection: CoxeterElement,
    /// `τ_i`, absent when `t_i ∉ S_X`.
    pub emitted: Option<ArtinLetter>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RetractionTrace {
    pub steps: Vec<TraceStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Retraction {
    pub word: ArtinWord,
    pub trace: RetractionTrace,
}

/// `π̂_X(w)` together with its trace.
pub fn pi_hat(g: &Coxeter, x: GeneratorSubset, word: &ArtinWord) -> Result<Retraction> {
    let mut prefix = g.identity();
    let mut prev = CosetDecomposition { v: g.identity(), w: g.identity() };
    let mut out = ArtinWord::new();
    let mut steps = Vec::with_capacity(word.len());
    for &letter in word.iter() {
        let z = letter.generator;
        prefix = g.mul_generator(&prefix, z)?;
        let cur = g.decompose_left(x, &prefix)?;
        let conj_by = match letter.sign {
            Sign::Pos => &prev.w,
            Sign::Neg => &cur.w,
        };
        let reflection = g.conjugate(conj_by, &g.generator(z))?;
        let emitted = reflection
            .as_generator()
            .filter(|&s| x.contains(s))
            .map(|s| ArtinLetter { generator: s, sign: letter.sign });
        if let Some(l) = emitted {
            out.push(l);
        }
        steps.push(TraceStep {
            letter,
            prefix: prefix.clone(),
            vpart: cur.v.clone(),
            wpart: cur.w.clone(),
            reflection,
            emitted,
        });
        prev = cur;
    }
    Ok(Retraction { word: out, trace: RetractionTrace { steps } })
}

/// Outcome of transporting `ι(w) A_Y ι(w)⁻¹` into `A_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportResult {
    pub yprime: GeneratorSubset,
    /// `(y, f(y))` for `y ∈ Y` in index order; `f` is injective.
    pub f: Vec<(GeneratorId, GeneratorId)>,
    pub decomposition: DoubleCosetDecomposition,
    /// `ι(u1)`, a positive word over `X`.
    pub alpha: ArtinWord,
}

/// Given `w` with `w s_y w⁻¹ ∈ W_X` for every `y ∈ Y`, finds `Y' ⊆ X` and
/// `α = ι(u1) ∈ A_X` with `ι(w) A_Y ι(w)⁻¹ = α A_{Y'} α⁻¹`.
///
/// `w = u1 w0 u2` is the double-coset decomposition; conjugation by `w0`
/// sends each `s_y` to a generator `s_{f(y)}`.
pub fn transport(g: &Coxeter, x: GeneratorSubset, y: GeneratorSubset, w: &CoxeterElement) -> Result<TransportResult> {
    let p = g.presentation();
    for s in y.iter() {
        let c = g.conjugate(w, &g.generator(s))?;
        if !g.member_parabolic(x, &c)? {
            return Err(Error::PreconditionViolated(format!(
                "w s_{} w^-1 = {} is not in W_{}",
                p.name(s),
                g.format(&c),
                p.format_subset(x)
            )));
        }
    }
    let decomposition = g.double_coset_decompose(x, y, w)?;
    let mut f = Vec::with_capacity(y.len());
    let mut yprime = GeneratorSubset::EMPTY;
    for s in y.iter() {
        let c = g.conjugate(&decomposition.w0, &g.generator(s))?;
        let image = c.as_generator().filter(|&t| x.contains(t)).ok_or_else(|| {
            Error::InternalAssertion(format!(
                "w0 s_{} w0^-1 = {} is not a generator of X (w0 = {})",
                p.name(s),
                g.format(&c),
                g.format(&decomposition.w0)
            ))
        })?;
        if yprime.contains(image) {
            return Err(Error::InternalAssertion(format!("f is not injective at {}", p.name(image))));
        }
        yprime.insert(image);
        f.push((s, image));
    }
    let alpha = iota(&decomposition.u1);
    Ok(TransportResult { yprime, f, decomposition, alpha })
}

/// Intermediate values of [`conjugate_into_parabolic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationAudit {
    /// `θ(α)`.
    pub w: CoxeterElement,
    pub transport: TransportResult,
    /// `α ι(w)⁻¹`, colored.
    pub beta1: ArtinWord,
    /// `ι(u1) ∈ A_X`.
    pub beta2: ArtinWord,
    /// `π̂_X(β1)`.
    pub pi_of_beta1: ArtinWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationResult {
    pub yprime: GeneratorSubset,
    /// `π̂_X(β1) · β2`, a word over `X`.
    pub gamma: ArtinWord,
    pub audit: ConjugationAudit,
}

/// Precondition split recorded with every result.
pub const CHECKED_PRECONDITION: &str = "θ(α) s_y θ(α)^-1 ∈ W_X for every y ∈ Y";
pub const TRUSTED_PRECONDITION: &str = "α A_Y α^-1 ⊆ A_X";

/// Rewrites `α A_Y α⁻¹ ⊆ A_X` as `γ A_{Y'} γ⁻¹` with `Y' ⊆ X` and `γ ∈ A_X`.
///
/// Only the image of the hypothesis in `W` can be checked; the inclusion in
/// `A` itself is taken on trust.
pub fn conjugate_into_parabolic(
    g: &Coxeter,
    x: GeneratorSubset,
    y: GeneratorSubset,
    alpha: &ArtinWord,
) -> Result<ConjugationResult> {
    let w = theta(g, alpha)?;
    let transport = transport(g, x, y, &w)?;
    let beta1 = alpha.concat(&iota(&w).inverse());
    if !is_colored(g, &beta1)? {
        return Err(Error::InternalAssertion(format!("β1 = {} is not colored", beta1.format(g.presentation()))));
    }
    let beta2 = transport.alpha.clone();
    let pi_of_beta1 = pi_hat(g, x, &beta1)?.word;
    let gamma = pi_of_beta1.concat(&beta2);
    Ok(ConjugationResult {
        yprime: transport.yprime,
        gamma,
        audit: ConjugationAudit { w, transport, beta1, beta2, pi_of_beta1 },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredConjugationReport {
    pub verdict: EqualityVerdict,
    /// `β α β⁻¹`.
    pub lhs: ArtinWord,
    /// `π̂_X(β) α π̂_X(β)⁻¹`.
    pub rhs: ArtinWord,
}

/// Checks `β α β⁻¹ = π_X(β) α π_X(β)⁻¹` for `α ∈ A_X` and colored `β`,
/// assuming (without checking) that `β α β⁻¹ ∈ A_X`.
pub fn verify_colored_conjugation(
    g: &Coxeter,
    x: GeneratorSubset,
    alpha: &ArtinWord,
    beta: &ArtinWord,
) -> Result<ColoredConjugationReport> {
    let p = g.presentation();
    if !alpha.is_supported_on(x) {
        return Err(Error::NotSupported { word: alpha.format(p), subset: p.format_subset(x) });
    }
    if !is_colored(g, beta)? {
        return Err(Error::NotColored(beta.format(p)));
    }
    let pi = pi_hat(g, x, beta)?.word;
    let lhs = beta.concat(alpha).concat(&beta.inverse());
    let rhs = pi.concat(alpha).concat(&pi.inverse());
    let verdict = equals_oracle(g, &lhs, &rhs)?;
    Ok(ColoredConjugationReport { verdict, lhs, rhs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub x_size: usize,
    pub y_size: usize,
    pub pad_len: usize,
    pub w_search_len: usize,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams { x_size: 2, y_size: 1, pad_len: 3, w_search_len: 4 }
    }
}

/// A triple `(X, Y, α)` satisfying `α A_Y α⁻¹ ⊆ A_X` by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub x: GeneratorSubset,
    pub y: GeneratorSubset,
    /// The middle factor: `α = β ι(w) κ`.
    pub w: CoxeterElement,
    pub alpha: ArtinWord,
}

const TRIES_PER_LENGTH: usize = 48;

/// A random reduced element of length `len` (shorter if the walk reaches an
/// element with no ascent).
fn random_reduced(g: &Coxeter, len: usize, rng: &mut ChaCha8Rng) -> Result<CoxeterElement> {
    let mut u = g.identity();
    let all = g.presentation().all();
    for _ in 0..len {
        let ascents: Vec<GeneratorId> =
            all.intersection(GeneratorSubset::from_mask(!g.right_descents(&u)?.mask())).iter().collect();
        let Some(&s) = ascents.choose(rng) else { break };
        u = g.mul_generator(&u, s)?;
    }
    Ok(u)
}

fn random_word_on(set: GeneratorSubset, len: usize, rng: &mut ChaCha8Rng) -> ArtinWord {
    let gens: Vec<GeneratorId> = set.iter().collect();
    if gens.is_empty() {
        return ArtinWord::new();
    }
    (0..len)
        .map(|_| {
            let g = gens[rng.gen_range(0..gens.len())];
            if rng.gen_bool(0.5) {
                ArtinLetter::pos(g)
            } else {
                ArtinLetter::neg(g)
            }
        })
        .collect()
}

/// Builds `α = β ι(w) κ` with `β` a random `A_X`-word, `κ` a random
/// `A_Y`-word and `w s_y w⁻¹ ∈ W_X` for all `y ∈ Y`.
///
/// `X` is drawn first. Candidate `w` are random reduced elements, searched
/// by increasing length starting at a seeded length in
/// `0..=w_search_len` (then wrapping to the shorter lengths), seeded-random
/// within each length; `Y` is drawn from the generators that `w`
/// conjugates into `W_X`.
pub fn generate_instance(g: &Coxeter, seed: u64, params: InstanceParams) -> Result<Instance> {
    let p = g.presentation();
    let n = p.rank();
    if params.x_size > n || params.y_size > n {
        return Err(Error::InvalidArgument(format!(
            "x_size = {} and y_size = {} must not exceed the rank {n}",
            params.x_size, params.y_size
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x: GeneratorSubset = p.generators().choose_multiple(&mut rng, params.x_size).into_iter().collect();
    let start = rng.gen_range(0..=params.w_search_len);
    let lengths = (start..=params.w_search_len).chain((0..start).rev());
    for len in lengths {
        let tries = if len == 0 { 1 } else { TRIES_PER_LENGTH };
        for _ in 0..tries {
            let w = random_reduced(g, len, &mut rng)?;
            let mut domain = Vec::new();
            for s in p.generators() {
                if g.member_parabolic(x, &g.conjugate(&w, &g.generator(s))?)? {
                    domain.push(s);
                }
            }
            if domain.len() < params.y_size {
                continue;
            }
            let y: GeneratorSubset = domain.choose_multiple(&mut rng, params.y_size).copied().collect();
            let beta = random_word_on(x, params.pad_len, &mut rng);
            let kappa = random_word_on(y, params.pad_len, &mut rng);
            let alpha = beta.concat(&iota(&w)).concat(&kappa);
            return Ok(Instance { x, y, w, alpha });
        }
    }
    Err(Error::SearchExhausted(format!(
        "no w of length <= {} conjugates {} generators into W_{}",
        params.w_search_len,
        params.y_size,
        p.format_subset(x)
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self, CheckOutcome::Fail(_))
    }
}

/// Per-level verdicts on `α A_Y α⁻¹ = γ A_{Y'} γ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationReport {
    /// `γ` is a word over `X`.
    pub support: CheckOutcome,
    /// `θ(γ) W_{Y'} θ(γ)⁻¹ = θ(α) W_Y θ(α)⁻¹`.
    pub coxeter_level: CheckOutcome,
    /// The equality in `A`, when the presentation has a decider.
    pub artin_level: CheckOutcome,
}

impl ConjugationReport {
    pub fn all_passed_or_skipped(&self) -> bool {
        !(self.support.failed() || self.coxeter_level.failed() || self.artin_level.failed())
    }
}

/// Checks the conclusion of [`conjugate_into_parabolic`] on generators, in
/// both directions, at every level that is decidable.
pub fn verify_conjugation(
    g: &Coxeter,
    x: GeneratorSubset,
    y: GeneratorSubset,
    alpha: &ArtinWord,
    result: &ConjugationResult,
) -> Result<ConjugationReport> {
    let p = g.presentation();
    let gamma = &result.gamma;
    let yprime = result.yprime;

    let support = if gamma.is_supported_on(x) {
        CheckOutcome::Pass
    } else {
        CheckOutcome::Fail(format!("γ = {} is not a word over {}", gamma.format(p), p.format_subset(x)))
    };

    // c s c⁻¹ ∈ d W_Z d⁻¹  ⟺  d⁻¹ c s c⁻¹ d ∈ W_Z
    let a = theta(g, alpha)?;
    let c = theta(g, gamma)?;
    let w_contains =
        |outer: &CoxeterElement, inner_from: &CoxeterElement, z: GeneratorSubset, s: GeneratorId| -> Result<bool> {
            let conj = g.conjugate(inner_from, &g.generator(s))?;
            let back = g.conjugate(&g.invert(outer)?, &conj)?;
            g.member_parabolic(z, &back)
        };
    let mut coxeter_level = CheckOutcome::Pass;
    for s in y.iter() {
        if !w_contains(&c, &a, yprime, s)? {
            coxeter_level = CheckOutcome::Fail(format!(
                "θ(α) s_{} θ(α)^-1 ∉ θ(γ) W_{} θ(γ)^-1",
                p.name(s),
                p.format_subset(yprime)
            ));
            break;
        }
    }
    if coxeter_level.passed() {
        for s in yprime.iter() {
            if !w_contains(&a, &c, y, s)? {
                coxeter_level =
                    CheckOutcome::Fail(format!("θ(γ) s_{} θ(γ)^-1 ∉ θ(α) W_{} θ(α)^-1", p.name(s), p.format_subset(y)));
                break;
            }
        }
    }

    let artin_level = match Decider::classify(p) {
        None => CheckOutcome::Skipped("no decider for this presentation".into()),
        Some(decider) => {
            let conj = |by: &ArtinWord, s: GeneratorId| {
                by.concat(&ArtinWord::from(vec![ArtinLetter::pos(s)])).concat(&by.inverse())
            };
            let mut outcome = CheckOutcome::Pass;
            for s in y.iter() {
                let h = gamma.inverse().concat(&conj(alpha, s)).concat(gamma);
                if !decider.contains(p, yprime, &h)? {
                    outcome = CheckOutcome::Fail(format!(
                        "α σ_{} α^-1 ∉ γ A_{} γ^-1 ({})",
                        p.name(s),
                        p.format_subset(yprime),
                        decider.name()
                    ));
                    break;
                }
            }
            if outcome.passed() {
                for s in yprime.iter() {
                    let h = alpha.inverse().concat(&conj(gamma, s)).concat(alpha);
                    if !decider.contains(p, y, &h)? {
                        outcome = CheckOutcome::Fail(format!(
                            "γ σ_{} γ^-1 ∉ α A_{} α^-1 ({})",
                            p.name(s),
                            p.format_subset(y),
                            decider.name()
                        ));
                        break;
                    }
                }
            }
            outcome
        }
    };

    Ok(ConjugationReport { support, coxeter_level, artin_level })
}

/// JSON views used by the CLI. Field order is fixed, so output is stable.
pub mod json {
    use serde::Serialize;

    use super::*;
    use crate::presentation::Presentation;

    fn letter(p: &Presentation, l: ArtinLetter) -> String {
        ArtinWord::from(vec![l]).format(p)
    }

    #[derive(Serialize)]
    pub struct Step {
        pub i: usize,
        pub letter: String,
        pub prefix: String,
        pub vpart: String,
        pub wpart: String,
        pub reflection: String,
        pub reflection_in_sx: bool,
        pub emitted: Option<String>,
    }

    #[derive(Serialize)]
    pub struct RetractionJson {
        pub x: Vec<String>,
        pub input: String,
        pub output: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        pub trace: Option<Vec<Step>>,
    }

    pub fn retraction(
        g: &Coxeter,
        x: GeneratorSubset,
        input: &ArtinWord,
        r: &Retraction,
        with_trace: bool,
    ) -> RetractionJson {
        let p = g.presentation();
        let trace = with_trace.then(|| {
            r.trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| Step {
                    i: i + 1,
                    letter: letter(p, s.letter),
                    prefix: g.format(&s.prefix),
                    vpart: g.format(&s.vpart),
                    wpart: g.format(&s.wpart),
                    reflection: g.format(&s.reflection),
                    reflection_in_sx: s.emitted.is_some(),
                    emitted: s.emitted.map(|l| letter(p, l)),
                })
                .collect()
        });
        RetractionJson { x: p.subset_names(x), input: input.format(p), output: r.word.format(p), trace }
    }

    #[derive(Serialize)]
    pub struct TransportJson {
        pub x: Vec<String>,
        pub y: Vec<String>,
        pub w: String,
        pub u1: String,
        pub w0: String,
        pub u2: String,
        pub f: Vec<[String; 2]>,
        #[serde(rename = "Yprime")]
        pub yprime: Vec<String>,
        pub alpha: String,
    }

    pub fn transport(
        g: &Coxeter,
        x: GeneratorSubset,
        y: GeneratorSubset,
        w: &CoxeterElement,
        t: &TransportResult,
    ) -> TransportJson {
        let p = g.presentation();
        TransportJson {
            x: p.subset_names(x),
            y: p.subset_names(y),
            w: g.format(w),
            u1: g.format(&t.decomposition.u1),
            w0: g.format(&t.decomposition.w0),
            u2: g.format(&t.decomposition.u2),
            f: t.f.iter().map(|&(a, b)| [p.name(a).to_string(), p.name(b).to_string()]).collect(),
            yprime: p.subset_names(t.yprime),
            alpha: t.alpha.format(p),
        }
    }

    #[derive(Serialize)]
    pub struct Precondition {
        pub checked: &'static str,
        pub trusted: &'static str,
    }

    #[derive(Serialize)]
    pub struct Audit {
        pub w: String,
        pub w0: String,
        pub u1: String,
        pub u2: String,
        pub f: Vec<[String; 2]>,
        pub beta1: String,
        pub beta2: String,
        pub pi_of_beta1: String,
        pub precondition: Precondition,
    }

    #[derive(Serialize)]
    pub struct TheoremJson {
        pub x: Vec<String>,
        pub y: Vec<String>,
        pub alpha: String,
        #[serde(rename = "Yprime")]
        pub yprime: Vec<String>,
        pub gamma: String,
        pub audit: Audit,
        #[serde(skip_serializing_if = "Option::is_none")]
        pub verification: Option<ConjugationReport>,
    }

    pub fn theorem(
        g: &Coxeter,
        x: GeneratorSubset,
        y: GeneratorSubset,
        alpha: &ArtinWord,
        r: &ConjugationResult,
        verification: Option<ConjugationReport>,
    ) -> TheoremJson {
        let p = g.presentation();
        let t = &r.audit.transport;
        TheoremJson {
            x: p.subset_names(x),
            y: p.subset_names(y),
            alpha: alpha.format(p),
            yprime: p.subset_names(r.yprime),
            gamma: r.gamma.format(p),
            audit: Audit {
                w: g.format(&r.audit.w),
                w0: g.format(&t.decomposition.w0),
                u1: g.format(&t.decomposition.u1),
                u2: g.format(&t.decomposition.u2),
                f: t.f.iter().map(|&(a, b)| [p.name(a).to_string(), p.name(b).to_string()]).collect(),
                beta1: r.audit.beta1.format(p),
                beta2: r.audit.beta2.format(p),
                pi_of_beta1: r.audit.pi_of_beta1.format(p),
                precondition: Precondition { checked: CHECKED_PRECONDITION, trusted: TRUSTED_PRECONDITION },
            },
            verification,
        }
    }

    #[derive(Serialize)]
    pub struct InstanceJson {
        pub seed: u64,
        pub x: Vec<String>,
        pub y: Vec<String>,
        pub w: String,
        pub alpha: String,
    }

    pub fn instance(g: &Coxeter, seed: u64, i: &Instance) -> InstanceJson {
        let p = g.presentation();
        InstanceJson {
            seed,
            x: p.subset_names(i.x),
            y: p.subset_names(i.y),
            w: g.format(&i.w),
            alpha: i.alpha.format(p),
        }
    }
}

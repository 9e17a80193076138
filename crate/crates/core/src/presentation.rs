//! Labeled simplicial graphs defining Coxeter and Artin groups.
//!
//! A [`Presentation`] is a finite vertex set with a symmetric labeling of
//! edges by integers `m >= 2`. Pairs of distinct vertices without an edge
//! carry the label [`Label::Infinity`] (no relation), and the diagonal is
//! `1`.
//!
//! Text format:
//!
//! ```text
//! # comment
//! vertices: a b c
//! edge: a b 3
//! edge: b c 4
//! ```
//!
//! The JSON form `{"vertices": [...], "edges": [{"u": .., "v": .., "m": ..}]}`
//! is also accepted by [`Presentation::parse`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseErrorKind, Result};
use crate::MAX_GENERATORS;

/// A vertex of the defining graph, identified by its position in file order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct GeneratorId(u8);

impl GeneratorId {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_GENERATORS, "generator index {index} out of range");
        GeneratorId(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    fn bit(self) -> u64 {
        1u64 << self.0
    }
}

/// Coxeter label of a pair of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

/// A set of generators of one presentation, stored as a bitmask.
///
/// Iteration is always in ascending index order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSubset(u64);

impl GeneratorSubset {
    pub const EMPTY: GeneratorSubset = GeneratorSubset(0);

    pub fn from_mask(mask: u64) -> Self {
        GeneratorSubset(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GeneratorSubset(u64::MAX)
        } else {
            GeneratorSubset((1u64 << rank) - 1)
        }
    }

    pub fn singleton(x: GeneratorId) -> Self {
        GeneratorSubset(x.bit())
    }

    pub fn contains(self, x: GeneratorId) -> bool {
        self.0 & x.bit() != 0
    }

    pub fn insert(&mut self, x: GeneratorId) {
        self.0 |= x.bit();
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GeneratorSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GeneratorSubset) -> Self {
        GeneratorSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: GeneratorSubset) -> Self {
        GeneratorSubset(self.0 & other.0)
    }

    /// Members in ascending index order.
    pub fn iter(self) -> impl Iterator<Item = GeneratorId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                Some(GeneratorId(i as u8))
            }
        })
    }

    /// Least member by index.
    pub fn first(self) -> Option<GeneratorId> {
        self.iter().next()
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = GeneratorSubset> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(GeneratorSubset(cur))
        })
    }
}

impl FromIterator<GeneratorId> for GeneratorSubset {
    fn from_iter<I: IntoIterator<Item = GeneratorId>>(iter: I) -> Self {
        let mut s = GeneratorSubset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

/// A labeled simplicial graph Γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    /// Dense symmetric label table, `rank * rank`.
    labels: Vec<Label>,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    u: String,
    v: String,
    m: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPresentation {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<JsonEdge>,
}

struct Builder {
    names: Vec<String>,
    edges: BTreeMap<(usize, usize), u32>,
}

impl Builder {
    fn new(names: Vec<String>, line: usize) -> Result<Self> {
        if names.len() > MAX_GENERATORS {
            return Err(parse_err(line, ParseErrorKind::TooManyVertices(names.len())));
        }
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(parse_err(line, ParseErrorKind::Malformed(format!("invalid vertex name `{name}`"))));
            }
            if names[..i].contains(name) {
                return Err(parse_err(line, ParseErrorKind::DuplicateVertex(name.clone())));
            }
        }
        Ok(Builder { names, edges: BTreeMap::new() })
    }

    fn add_edge(&mut self, line: usize, u: &str, v: &str, m: i64) -> Result<()> {
        let lookup = |n: &str| {
            self.names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| parse_err(line, ParseErrorKind::UnknownEndpoint(n.to_string())))
        };
        let (a, b) = (lookup(u)?, lookup(v)?);
        if a == b {
            return Err(parse_err(line, ParseErrorKind::SelfLoop(u.to_string())));
        }
        if m < 2 {
            return Err(parse_err(line, ParseErrorKind::LabelTooSmall(m)));
        }
        let m =
            u32::try_from(m).map_err(|_| parse_err(line, ParseErrorKind::Malformed(format!("label {m} too large"))))?;
        let key = (a.min(b), a.max(b));
        if self.edges.insert(key, m).is_some() {
            return Err(parse_err(line, ParseErrorKind::DuplicateEdge(u.to_string(), v.to_string())));
        }
        Ok(())
    }

    fn finish(self) -> Presentation {
        let n = self.names.len();
        let mut labels = vec![Label::Infinity; n * n];
        for i in 0..n {
            labels[i * n + i] = Label::Finite(1);
        }
        for (&(a, b), &m) in &self.edges {
            labels[a * n + b] = Label::Finite(m);
            labels[b * n + a] = Label::Finite(m);
        }
        Presentation { names: self.names, labels }
    }
}

fn parse_err(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == ',' || c == '^' || c == '\'')
}

impl Presentation {
    /// Builds a presentation from vertex names and `(u, v, m)` edges.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, i64)]) -> Result<Self> {
        let mut b = Builder::new(vertices.iter().map(|s| s.as_ref().to_string()).collect(), 0)?;
        for (u, v, m) in edges {
            b.add_edge(0, u.as_ref(), v.as_ref(), *m)?;
        }
        Ok(b.finish())
    }

    /// Parses either the line-oriented text format or the JSON form.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    fn parse_text(text: &str) -> Result<Self> {
        let mut builder: Option<Builder> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, rest) = trimmed.split_once(':').ok_or_else(|| {
                parse_err(line, ParseErrorKind::Malformed(format!("expected `vertices:` or `edge:`, got `{trimmed}`")))
            })?;
            match key.trim() {
                "vertices" => {
                    if builder.is_some() {
                        return Err(parse_err(line, ParseErrorKind::Malformed("`vertices:` declared twice".into())));
                    }
                    let names = rest.split_whitespace().map(str::to_string).collect();
                    builder = Some(Builder::new(names, line)?);
                }
                "edge" => {
                    let b = builder.as_mut().ok_or_else(|| {
                        parse_err(line, ParseErrorKind::Malformed("`edge:` before `vertices:`".into()))
                    })?;
                    let fields: Vec<&str> = rest.split_whitespace().collect();
                    let [u, v, m] = fields[..] else {
                        return Err(parse_err(
                            line,
                            ParseErrorKind::Malformed(format!("expected `edge: <u> <v> <m>`, got `{trimmed}`")),
                        ));
                    };
                    let m: i64 = m.parse().map_err(|_| {
                        parse_err(line, ParseErrorKind::Malformed(format!("label `{m}` is not an integer")))
                    })?;
                    b.add_edge(line, u, v, m)?;
                }
                other => {
                    return Err(parse_err(line, ParseErrorKind::Malformed(format!("unknown directive `{other}`"))));
                }
            }
        }
        builder
            .map(Builder::finish)
            .ok_or_else(|| parse_err(0, ParseErrorKind::Malformed("missing `vertices:` line".into())))
    }

    fn parse_json(text: &str) -> Result<Self> {
        let parsed: JsonPresentation =
            serde_json::from_str(text).map_err(|e| parse_err(e.line(), ParseErrorKind::Malformed(e.to_string())))?;
        let mut b = Builder::new(parsed.vertices, 1)?;
        for e in &parsed.edges {
            b.add_edge(1, &e.u, &e.v, e.m)?;
        }
        Ok(b.finish())
    }

    /// The JSON form accepted by [`Presentation::parse`].
    pub fn to_json(&self) -> serde_json::Value {
        let edges = self
            .edges()
            .map(|(u, v, m)| JsonEdge { u: self.name(u).to_string(), v: self.name(v).to_string(), m: m as i64 })
            .collect();
        serde_json::to_value(JsonPresentation { vertices: self.names.clone(), edges }).expect("serializable")
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.rank()).map(GeneratorId::new)
    }

    pub fn all(&self) -> GeneratorSubset {
        GeneratorSubset::full(self.rank())
    }

    pub fn name(&self, x: GeneratorId) -> &str {
        &self.names[x.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Result<GeneratorId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(GeneratorId::new)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// `m(x, y)`: `1` on the diagonal, the edge label on edges, infinity otherwise.
    #[inline]
    pub fn label(&self, x: GeneratorId, y: GeneratorId) -> Label {
        self.labels[x.index() * self.rank() + y.index()]
    }

    /// Checked variant of [`Presentation::label`] for generators given by name.
    pub fn coxeter_label(&self, x: &str, y: &str) -> Result<Label> {
        Ok(self.label(self.generator(x)?, self.generator(y)?))
    }

    /// Edges `(u, v, m)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (GeneratorId, GeneratorId, u32)> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |a| {
            (a + 1..n).filter_map(move |b| match self.labels[a * n + b] {
                Label::Finite(m) => Some((GeneratorId::new(a), GeneratorId::new(b), m)),
                Label::Infinity => None,
            })
        })
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges().next().is_none()
    }

    /// True when there is at least one edge and every edge is labeled 2.
    pub fn is_right_angled(&self) -> bool {
        !self.is_edgeless() && self.edges().all(|(_, _, m)| m == 2)
    }

    /// `Γ_X`, the full subgraph spanned by `X`. The `i`-th generator of the
    /// result is the `i`-th member of `X` in index order.
    pub fn induced(&self, subset: GeneratorSubset) -> Result<Presentation> {
        if !subset.is_subset(self.all()) {
            return Err(Error::InvalidArgument(format!(
                "subset mask {:#x} is not contained in a presentation of rank {}",
                subset.mask(),
                self.rank()
            )));
        }
        let members: Vec<GeneratorId> = subset.iter().collect();
        let k = members.len();
        let mut labels = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                labels.push(self.label(a, b));
            }
        }
        Ok(Presentation { names: members.iter().map(|&x| self.name(x).to_string()).collect(), labels })
    }

    /// `(Prod(x, y, m), Prod(y, x, m))` for the edge `{x, y}`.
    pub fn braid_relation_pair(&self, x: GeneratorId, y: GeneratorId) -> Result<(Vec<GeneratorId>, Vec<GeneratorId>)> {
        match self.label(x, y) {
            Label::Finite(m) if x != y => Ok((alternating(x, y, m as usize), alternating(y, x, m as usize))),
            _ => Err(Error::NoEdge(self.name(x).to_string(), self.name(y).to_string())),
        }
    }

    /// Parses a comma-separated generator list such as `a,c`. The empty
    /// string denotes the empty subset.
    pub fn parse_subset(&self, text: &str) -> Result<GeneratorSubset> {
        text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|s| self.generator(s)).collect()
    }

    pub fn subset_names(&self, subset: GeneratorSubset) -> Vec<String> {
        subset.iter().map(|x| self.name(x).to_string()).collect()
    }

    pub fn format_subset(&self, subset: GeneratorSubset) -> String {
        format!("{{{}}}", self.subset_names(subset).join(","))
    }
}

/// `Prod(x, y, m)`: the alternating word `x y x ...` of length `m`.
pub fn alternating(x: GeneratorId, y: GeneratorId, m: usize) -> Vec<GeneratorId> {
    (0..m).map(|i| if i % 2 == 0 { x } else { y }).collect()
}

/// Named presentations used throughout the tests and verification suites.
pub mod catalog {
    use super::Presentation;

    fn build(vertices: &[&str], edges: &[(&str, &str, i64)]) -> Presentation {
        Presentation::new(vertices, edges).expect("catalog presentation is valid")
    }

    /// Two generators joined by an edge labeled `m`.
    pub fn dihedral(m: i64) -> Presentation {
        build(&["a", "b"], &[("a", "b", m)])
    }

    pub fn a2() -> Presentation {
        dihedral(3)
    }

    pub fn b2() -> Presentation {
        dihedral(4)
    }

    pub fn i2(m: i64) -> Presentation {
        dihedral(m)
    }

    pub fn a1xa1() -> Presentation {
        dihedral(2)
    }

    /// Type `A3`: labels 3 on `a - b` and `b - c`. Non-edges mean `∞`, so the
    /// commuting pair `a, c` needs an explicit edge labeled 2.
    pub fn a3() -> Presentation {
        build(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 2)])
    }

    /// Edgeless graph on `n` vertices `a, b, c, ...`.
    pub fn free(n: usize) -> Presentation {
        let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Presentation::new(&names, &[]).expect("valid")
    }

    /// Square `a - b - c - d - a`, all labels 2.
    pub fn raag_square() -> Presentation {
        build(&["a", "b", "c", "d"], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("d", "a", 2)])
    }

    /// Triangle `a, b, c` with every label 3.
    pub fn triangle3() -> Presentation {
        build(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 3)])
    }
}

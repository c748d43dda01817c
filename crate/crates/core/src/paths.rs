//! The layered graph of vertices `vt(level; a_1, …, a_d)`, its weighted
//! directed paths, and predicates for their structural properties.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Monomial, VarSpace};
use crate::weyl_word::{fmt_tuple, target_tuple, CWord, JIndex, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("vertex levels {0} -> {1} are not consecutive")]
    LevelMismatch(u32, u32),
    #[error("vertices {0} and {1} are not connected")]
    NotConnected(String, String),
    #[error("bad parameters d={d}, m={m}, m'={mp}, r={r}")]
    BadParameters { d: u32, m: u32, mp: u32, r: u32 },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// `vt(level; entries)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathVertex {
    pub level: u32,
    pub entries: Vec<JIndex>,
}

impl PathVertex {
    pub fn new(level: u32, entries: Vec<JIndex>) -> Self {
        PathVertex { level, entries }
    }
}

impl fmt::Display for PathVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.level, fmt_tuple(&self.entries))
    }
}

/// Parameters `(d, m, m', r)` of a path set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathParams {
    pub d: u32,
    pub m: u32,
    pub mp: u32,
    pub r: u32,
}

impl PathParams {
    pub fn new(d: u32, m: u32, mp: u32, r: u32) -> Result<Self, PathError> {
        if r == 0 || d == 0 || d > r || mp == 0 || mp > m || m > r {
            return Err(PathError::BadParameters { d, m, mp, r });
        }
        Ok(PathParams { d, m, mp, r })
    }

    /// Parameters for position `k` of `w`, after truncation.
    pub fn for_position(w: &CWord, k: usize) -> Result<Self, PathError> {
        let t = w.truncate_for(k)?;
        let (mp, d) = t.locate(k)?;
        Self::new(d, t.cycles(), mp, t.rank())
    }

    pub fn source(&self) -> PathVertex {
        PathVertex::new(self.m, (1..=self.d).map(JIndex::Plain).collect())
    }

    pub fn sink(&self) -> PathVertex {
        PathVertex::new(0, target_tuple(self.r, self.mp, self.d))
    }
}

/// Vertices from level `m` down to `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub vertices: Vec<PathVertex>,
}

impl Path {
    /// The `i`-th coordinate track `a^{(0)}_i, …, a^{(m)}_i` (1-based `i`).
    pub fn i_sequence(&self, i: usize) -> Vec<JIndex> {
        self.vertices.iter().map(|v| v.entries[i - 1]).collect()
    }

    /// `a^{(s)}_i`, `s` counted from the source.
    pub fn entry(&self, s: usize, i: usize) -> JIndex {
        self.vertices[s].entries[i - 1]
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" -> "))
    }
}

fn strictly_increasing(t: &[JIndex]) -> bool {
    t.windows(2).all(|w| w[0] < w[1])
}

/// Allowed successors of a single coordinate.
fn coordinate_moves(a: JIndex, r: u32) -> Vec<JIndex> {
    match a {
        JIndex::Plain(x) if x < r => vec![JIndex::Plain(x), JIndex::Plain(x + 1)],
        JIndex::Plain(_) => {
            let mut v = vec![JIndex::Plain(r)];
            v.extend((1..=r).rev().map(JIndex::Bar));
            v
        }
        JIndex::Bar(x) => (1..=x).rev().map(JIndex::Bar).collect(),
    }
}

/// Whether `vt(level; a) -> vt(level-1; b)` is an edge.
pub fn connected(r: u32, v1: &PathVertex, v2: &PathVertex) -> Result<bool, PathError> {
    if v1.level == 0 || v2.level + 1 != v1.level {
        return Err(PathError::LevelMismatch(v1.level, v2.level));
    }
    let (a, b) = (&v1.entries, &v2.entries);
    if a.len() != b.len() {
        return Ok(false);
    }
    let in_j = |t: &[JIndex]| t.iter().all(|j| j.in_range(r));
    if !in_j(a) || !in_j(b) || !strictly_increasing(a) || !strictly_increasing(b) {
        return Ok(false);
    }
    for z in 0..a.len() {
        if !coordinate_moves(a[z], r).contains(&b[z]) {
            return Ok(false);
        }
        if b[z].is_barred() && z + 1 < a.len() && b[z].abs() <= a[z + 1].abs() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All vertices one level down connected to `v`, in increasing tuple order.
pub fn successors(r: u32, v: &PathVertex) -> Vec<PathVertex> {
    if v.level == 0 {
        return Vec::new();
    }
    let d = v.entries.len();
    let options: Vec<Vec<JIndex>> = v.entries.iter().map(|&a| coordinate_moves(a, r)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(
        z: usize,
        a: &[JIndex],
        options: &[Vec<JIndex>],
        cur: &mut Vec<JIndex>,
        out: &mut Vec<Vec<JIndex>>,
    ) {
        if z == a.len() {
            out.push(cur.clone());
            return;
        }
        for &b in &options[z] {
            if z > 0 && cur[z - 1] >= b {
                continue;
            }
            if b.is_barred() && z + 1 < a.len() && b.abs() <= a[z + 1].abs() {
                continue;
            }
            cur.push(b);
            rec(z + 1, a, options, cur, out);
            cur.pop();
        }
    }
    rec(0, &v.entries, &options, &mut cur, &mut out);
    out.sort();
    out.into_iter().map(|t| PathVertex::new(v.level - 1, t)).collect()
}

/// Memoized reachability of the sink.
struct Reach {
    r: u32,
    sink: PathVertex,
    memo: HashMap<PathVertex, bool>,
}

impl Reach {
    fn reaches(&mut self, v: &PathVertex) -> bool {
        if v.level == 0 {
            return *v == self.sink;
        }
        if let Some(&b) = self.memo.get(v) {
            return b;
        }
        let ok = successors(self.r, v).iter().any(|s| self.reaches(s));
        self.memo.insert(v.clone(), ok);
        ok
    }
}

/// All paths from `vt(m; 1..d)` to the sink, depth first with successors in
/// increasing order.
pub fn enumerate(d: u32, m: u32, mp: u32, r: u32) -> Result<Vec<Path>, PathError> {
    let p = PathParams::new(d, m, mp, r)?;
    Ok(enumerate_params(&p))
}

pub fn enumerate_params(p: &PathParams) -> Vec<Path> {
    let mut reach = Reach { r: p.r, sink: p.sink(), memo: HashMap::new() };
    let mut out = Vec::new();
    let mut stack = vec![p.source()];
    fn dfs(reach: &mut Reach, stack: &mut Vec<PathVertex>, out: &mut Vec<Path>) {
        let v = stack.last().expect("non-empty").clone();
        if v.level == 0 {
            if v == reach.sink {
                out.push(Path { vertices: stack.clone() });
            }
            return;
        }
        for s in successors(reach.r, &v) {
            if reach.reaches(&s) {
                stack.push(s);
                dfs(reach, stack, out);
                stack.pop();
            }
        }
    }
    if reach.reaches(&p.source()) {
        dfs(&mut reach, &mut stack, &mut out);
    }
    out
}

/// Label of the edge `v1 -> v2`; variables are `Y[level(v1), ·]`.
pub fn edge_label(r: u32, m: u32, v1: &PathVertex, v2: &PathVertex) -> Result<Monomial, PathError> {
    if !connected(r, v1, v2)? {
        return Err(PathError::NotConnected(v1.to_string(), v2.to_string()));
    }
    let vs = VarSpace::new(m, r);
    let c = v1.level as i64;
    let mut q = Monomial::one();
    for (&a, &b) in v1.entries.iter().zip(&v2.entries) {
        let f = match (a, b) {
            (JIndex::Plain(x), JIndex::Plain(y)) => vs.ratio((c, y as i64 - 1), (c, x as i64))?,
            (JIndex::Plain(_), JIndex::Bar(y)) => vs.y_pow(c, y as i64 - 1, -1)?,
            (JIndex::Bar(x), JIndex::Bar(y)) => vs.ratio((c, x as i64), (c, y as i64 - 1))?,
            (JIndex::Bar(_), JIndex::Plain(_)) => unreachable!("excluded by connected"),
        };
        q = &q * &f;
    }
    Ok(q)
}

/// `Q(p)`, the product of the edge labels.
pub fn path_label(r: u32, m: u32, p: &Path) -> Result<Monomial, PathError> {
    let mut q = Monomial::one();
    for w in p.vertices.windows(2) {
        q = &q * &edge_label(r, m, &w[0], &w[1])?;
    }
    Ok(q)
}

/// `Σ_p Q(p)` over all paths for position `k` of `w`.
pub fn minor_by_paths(w: &CWord, k: usize) -> Result<LaurentPoly, PathError> {
    let p = PathParams::for_position(w, k)?;
    let mut sum = LaurentPoly::zero();
    for path in enumerate_params(&p) {
        sum.add_term(1.into(), path_label(p.r, p.m, &path)?);
    }
    Ok(sum)
}

/// Tags of the structural properties violated by `p` (empty when none).
///
/// * `shape`: endpoints, levels and edges
/// * `monotone`: every coordinate track is weakly increasing
/// * `barred-above`: a barred `a^{(s)}_i` forces a barred `a^{(s-1)}_{i+1}` above it
/// * `fixed-tail`: tails of coordinates `i > r-m'` are fixed at `\overline{d-i+1}`
/// * `row-count`: stalls plus barred levels per coordinate number `m-m'`
pub fn check_structure(params: &PathParams, p: &Path) -> Vec<&'static str> {
    let PathParams { d, m, mp, r } = *params;
    let (d, m, mp, r) = (d as usize, m as usize, mp as usize, r as usize);
    let mut tags = Vec::new();

    let shape_ok = p.vertices.len() == m + 1
        && p.vertices.iter().enumerate().all(|(s, v)| v.level as usize == m - s && v.entries.len() == d);
    if !shape_ok {
        tags.push("shape");
        return tags;
    }
    let edges_ok = p.vertices.windows(2).all(|w| connected(r as u32, &w[0], &w[1]).unwrap_or(false));
    if p.vertices[0] != params.source() || p.vertices[m] != params.sink() || !edges_ok {
        tags.push("shape");
    }

    if !(1..=d).all(|i| p.i_sequence(i).windows(2).all(|w| w[0] <= w[1])) {
        tags.push("monotone");
    }

    let fst = (1..d).all(|i| {
        (1..=m).all(|s| {
            let a = p.entry(s, i);
            let b = p.entry(s - 1, i + 1);
            !a.is_barred() || (b.is_barred() && a < b)
        })
    });
    if !fst {
        tags.push("barred-above");
    }

    let cancel = (1..=d).filter(|&i| i + mp > r).all(|i| {
        let from = m + r + 1 - i - mp;
        (from..=m).all(|s| p.entry(s, i) == JIndex::Bar((d + 1 - i) as u32))
    });
    if !cancel {
        tags.push("fixed-tail");
    }

    let tab = (1..=d).all(|i| {
        let stall = |s: usize| {
            let a = p.entry(s, i);
            !a.is_barred() && a == p.entry(s + 1, i)
        };
        let count = if i + mp <= r {
            (0..m).filter(|&s| stall(s)).count()
        } else {
            let top = m + r - i - mp;
            (0..=top).filter(|&s| stall(s) || p.entry(s, i).is_barred()).count()
        };
        count == m - mp
    });
    if !tab {
        tags.push("row-count");
    }
    tags
}

/// Graphviz rendering of the union of `paths`, edges labelled by monomial.
pub fn to_dot(r: u32, m: u32, paths: &[Path]) -> Result<String, PathError> {
    let mut nodes: Vec<&PathVertex> = Vec::new();
    let mut edges: Vec<(&PathVertex, &PathVertex)> = Vec::new();
    for p in paths {
        for v in &p.vertices {
            if !nodes.contains(&v) {
                nodes.push(v);
            }
        }
        for w in p.vertices.windows(2) {
            if !edges.contains(&(&w[0], &w[1])) {
                edges.push((&w[0], &w[1]));
            }
        }
    }
    nodes.sort();
    nodes.sort_by_key(|v| std::cmp::Reverse(v.level));
    edges.sort_by(|a, b| (b.0.level, a.0, a.1).cmp(&(a.0.level, b.0, b.1)));
    let label = |v: &PathVertex| format!("({}; {})", v.level, fmt_tuple(&v.entries));
    let mut out = String::from("digraph paths {\n");
    for v in &nodes {
        out.push_str(&format!("  \"{}\";\n", label(v)));
    }
    for (a, b) in edges {
        let q = LaurentPoly::from(edge_label(r, m, a, b)?);
        out.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", label(a), label(b), q.canonical_string()));
    }
    out.push_str("}\n");
    Ok(out)
}

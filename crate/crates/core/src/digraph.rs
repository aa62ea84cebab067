//! Unicast side-information digraphs.
//!
//! Vertex `i` is receiver `i`, which requests message `x_i`. An arc `i -> j`
//! means receiver `i` already caches `x_j`. Labels are 1-based throughout the
//! public API.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A 1-based vertex label.
pub type Vertex = usize;

/// Default cap on enumerated paths before a count is reported as overflowed.
pub const DEFAULT_PATH_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `n=<N>` header")]
    MissingHeader,
    #[error("malformed line: {0:?}")]
    Malformed(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(Vertex, Vertex),
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: Vertex, n: usize },
}

/// An ordered set of vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{lo, ..., hi}`, empty when `lo > hi`.
    pub fn range(lo: Vertex, hi: Vertex) -> Self {
        (lo..=hi).collect()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.union(&other.0).copied().collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.0.difference(&other.0).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.0.intersection(&other.0).copied().collect()
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.0.symmetric_difference(&other.0).copied().collect()
    }

    /// In-place symmetric difference; the mask arithmetic of XOR coding.
    pub fn toggle_all(&mut self, other: &VertexSet) {
        for v in other.iter() {
            if !self.0.remove(&v) {
                self.0.insert(v);
            }
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.iter().copied().collect()
    }

    /// Bitmask with bit `v - 1` set for each member. Members must be <= 64.
    pub fn to_bits(&self) -> u64 {
        self.iter().fold(0, |m, v| m | 1u64 << (v - 1))
    }

    pub fn from_bits(bits: u64) -> Self {
        bit_iter(bits).map(|i| i + 1).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const M: usize> From<[Vertex; M]> for VertexSet {
    fn from(vs: [Vertex; M]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexSet {
    type Err = String;

    /// Parses a comma-separated list such as `1,2,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(VertexSet::new());
        }
        s.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<Vertex>()
                    .map_err(|_| format!("bad vertex label {tok:?}"))
            })
            .collect()
    }
}

/// Iterates the indices of set bits, lowest first.
pub(crate) fn bit_iter(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// A vertex sequence; a cycle when first equals last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

impl Path {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_cycle(&self) -> bool {
        self.0.len() >= 2 && self.0.first() == self.0.last()
    }

    /// True when consecutive pairs are arcs of `d` and vertices are distinct
    /// (apart from a closing repeat of the first vertex).
    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        if self.0.is_empty() {
            return false;
        }
        if !self.0.windows(2).all(|w| d.has_arc(w[0], w[1])) {
            return false;
        }
        let body = if self.is_cycle() {
            &self.0[..self.0.len() - 1]
        } else {
            &self.0[..]
        };
        let distinct: BTreeSet<_> = body.iter().collect();
        distinct.len() == body.len()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

/// A simple digraph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<Vertex>>,
    inc: Vec<Vec<Vertex>>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            n,
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut out: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
        for (t, h) in arcs {
            for v in [t, h] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if t == h {
                return Err(GraphError::SelfLoop(t));
            }
            if !out[t - 1].insert(h) {
                return Err(GraphError::DuplicateArc(t, h));
            }
        }
        let mut inc = vec![Vec::new(); n];
        for (t, heads) in out.iter().enumerate() {
            for &h in heads {
                inc[h - 1].push(t + 1);
            }
        }
        Ok(Digraph {
            n,
            out: out.into_iter().map(|s| s.into_iter().collect()).collect(),
            inc,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::range(1, self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Arcs in canonical order: tails ascending, heads ascending.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (t + 1, h)))
    }

    pub fn has_arc(&self, tail: Vertex, head: Vertex) -> bool {
        self.contains(tail) && self.out[tail - 1].binary_search(&head).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.n
    }

    /// Heads of arcs leaving `v`, ascending. Panics when `v` is out of range.
    pub fn successors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v - 1]
    }

    /// Tails of arcs entering `v`, ascending. Panics when `v` is out of range.
    pub fn predecessors(&self, v: Vertex) -> &[Vertex] {
        &self.inc[v - 1]
    }

    pub fn out_neighbors(&self, v: Vertex) -> Result<VertexSet, GraphError> {
        if !self.contains(v) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.out[v - 1].iter().copied().collect())
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v - 1].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.inc[v - 1].len()
    }

    /// Sub-digraph induced by `s`, relabelled `1..=|s|` in ascending order of
    /// the original labels.
    pub fn induced_subgraph(&self, s: &VertexSet) -> InducedSubgraph {
        let labels: Vec<Vertex> = s.iter().filter(|&v| self.contains(v)).collect();
        let index: BTreeMap<Vertex, Vertex> =
            labels.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
        let mut arcs = Vec::new();
        for &t in &labels {
            let lt = index[&t];
            arcs.extend(self.successors(t).iter().filter_map(|h| index.get(h)).map(|&h| (lt, h)));
        }
        let digraph = Digraph::from_arcs(labels.len(), arcs).expect("induced arcs are simple");
        InducedSubgraph { digraph, labels }
    }

    /// True iff `d` has no directed cycle (Kahn's algorithm).
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut indeg: Vec<usize> = self.inc.iter().map(Vec::len).collect();
        let mut queue: VecDeque<Vertex> =
            self.vertices().filter(|&v| indeg[v - 1] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &h in self.successors(v) {
                indeg[h - 1] -= 1;
                if indeg[h - 1] == 0 {
                    queue.push_back(h);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// Some directed cycle of `d`, as a closed path, or `None` when acyclic.
    pub fn find_cycle(&self) -> Option<Path> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; self.n];
        for s in self.vertices() {
            if mark[s - 1] != Mark::New {
                continue;
            }
            // iterative DFS; stack holds (vertex, next successor index)
            let mut stack: Vec<(Vertex, usize)> = vec![(s, 0)];
            mark[s - 1] = Mark::Active;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&h) = self.out[v - 1].get(*next) {
                    *next += 1;
                    match mark[h - 1] {
                        Mark::New => {
                            mark[h - 1] = Mark::Active;
                            stack.push((h, 0));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|&(u, _)| u == h).unwrap();
                            let mut cycle: Vec<Vertex> =
                                stack[start..].iter().map(|&(u, _)| u).collect();
                            cycle.push(h);
                            return Some(Path(cycle));
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[v - 1] = Mark::Done;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Every simple directed cycle, each listed once starting from its
    /// smallest vertex. Stops after `limit` cycles.
    pub fn simple_cycles(&self, limit: usize) -> Vec<Path> {
        let mut found = Vec::new();
        let mut on_path = vec![false; self.n + 1];
        for s in self.vertices() {
            let mut path = vec![s];
            on_path[s] = true;
            self.cycles_from(s, s, &mut path, &mut on_path, &mut found, limit);
            on_path[s] = false;
            if found.len() >= limit {
                break;
            }
        }
        found.truncate(limit);
        found
    }

    fn cycles_from(
        &self,
        start: Vertex,
        v: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        found: &mut Vec<Path>,
        limit: usize,
    ) {
        for &h in self.successors(v) {
            if found.len() >= limit {
                return;
            }
            if h == start {
                let mut c = path.clone();
                c.push(start);
                found.push(Path(c));
            } else if h > start && !on_path[h] {
                on_path[h] = true;
                path.push(h);
                self.cycles_from(start, h, path, on_path, found, limit);
                path.pop();
                on_path[h] = false;
            }
        }
    }

    /// Strongly connected components, each sorted, ordered by smallest member.
    pub fn strongly_connected_components(&self) -> Vec<VertexSet> {
        // Kosaraju: finish order on d, then sweep the reverse graph.
        let mut seen = vec![false; self.n + 1];
        let mut finish = Vec::with_capacity(self.n);
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&h) = self.out[v - 1].get(*next) {
                    *next += 1;
                    if !seen[h] {
                        seen[h] = true;
                        stack.push((h, 0));
                    }
                } else {
                    finish.push(v);
                    stack.pop();
                }
            }
        }
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut comps: Vec<VertexSet> = Vec::new();
        for &s in finish.iter().rev() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = VertexSet::new();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.insert(v);
                for &t in self.predecessors(v) {
                    if comp[t] == usize::MAX {
                        comp[t] = id;
                        stack.push(t);
                    }
                }
            }
            comps.push(members);
        }
        comps.sort_by_key(|c| c.first());
        comps
    }

    /// Number of simple paths from `from` to `to` whose interior vertices all
    /// lie in `allowed_interior`. Endpoints are never treated as interior.
    ///
    /// Counts by dynamic programming when the interior induces an acyclic
    /// sub-digraph (every walk is then a simple path), otherwise by DFS.
    pub fn count_interior_restricted_paths(
        &self,
        from: Vertex,
        to: Vertex,
        allowed_interior: &VertexSet,
        cap: u64,
    ) -> PathCount {
        assert_ne!(from, to, "path endpoints must differ");
        let mut interior = allowed_interior.clone();
        interior.remove(from);
        interior.remove(to);
        if self.induced_subgraph(&interior).digraph.is_acyclic() {
            count_paths_dag(self, from, to, &interior, cap)
        } else {
            count_paths_dfs(self, from, to, &interior, cap)
        }
    }

    /// All simple paths from `from` to `to` with interior in
    /// `allowed_interior`, up to `limit` of them.
    pub fn interior_restricted_paths(
        &self,
        from: Vertex,
        to: Vertex,
        allowed_interior: &VertexSet,
        limit: usize,
    ) -> Vec<Path> {
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n + 1];
        let mut path = vec![from];
        on_path[from] = true;
        self.paths_from(from, to, allowed_interior, &mut path, &mut on_path, &mut out, limit);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn paths_from(
        &self,
        v: Vertex,
        to: Vertex,
        allowed: &VertexSet,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Path>,
        limit: usize,
    ) {
        for &h in self.successors(v) {
            if out.len() >= limit {
                return;
            }
            if h == to {
                let mut p = path.clone();
                p.push(to);
                out.push(Path(p));
            } else if allowed.contains(h) && !on_path[h] {
                on_path[h] = true;
                path.push(h);
                self.paths_from(h, to, allowed, path, on_path, out, limit);
                path.pop();
                on_path[h] = false;
            }
        }
    }
}

/// Result of a capped path count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathCount {
    Exact(u64),
    /// More than `cap` paths exist.
    Overflow,
}

impl PathCount {
    pub fn exact(self) -> Option<u64> {
        match self {
            PathCount::Exact(c) => Some(c),
            PathCount::Overflow => None,
        }
    }
}

impl fmt::Display for PathCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathCount::Exact(c) => write!(f, "{c}"),
            PathCount::Overflow => f.write_str("overflow"),
        }
    }
}

pub(crate) fn count_paths_dfs(
    d: &Digraph,
    from: Vertex,
    to: Vertex,
    interior: &VertexSet,
    cap: u64,
) -> PathCount {
    fn go(
        d: &Digraph,
        v: Vertex,
        to: Vertex,
        interior: &VertexSet,
        on_path: &mut [bool],
        count: &mut u64,
        cap: u64,
    ) -> bool {
        for &h in d.successors(v) {
            if h == to {
                *count += 1;
                if *count > cap {
                    return false;
                }
            } else if interior.contains(h) && !on_path[h] {
                on_path[h] = true;
                let ok = go(d, h, to, interior, on_path, count, cap);
                on_path[h] = false;
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    let mut on_path = vec![false; d.vertex_count() + 1];
    on_path[from] = true;
    let mut count = 0;
    if go(d, from, to, interior, &mut on_path, &mut count, cap) {
        PathCount::Exact(count)
    } else {
        PathCount::Overflow
    }
}

pub(crate) fn count_paths_dag(
    d: &Digraph,
    from: Vertex,
    to: Vertex,
    interior: &VertexSet,
    cap: u64,
) -> PathCount {
    fn ways(
        d: &Digraph,
        v: Vertex,
        to: Vertex,
        interior: &VertexSet,
        memo: &mut BTreeMap<Vertex, u128>,
    ) -> u128 {
        if let Some(&w) = memo.get(&v) {
            return w;
        }
        let mut total: u128 = 0;
        for &h in d.successors(v) {
            if h == to {
                total = total.saturating_add(1);
            } else if interior.contains(h) {
                total = total.saturating_add(ways(d, h, to, interior, memo));
            }
        }
        memo.insert(v, total);
        total
    }
    let mut memo = BTreeMap::new();
    let total = ways(d, from, to, interior, &mut memo);
    if total > cap as u128 {
        PathCount::Overflow
    } else {
        PathCount::Exact(total as u64)
    }
}

/// An induced sub-digraph together with the original label of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub digraph: Digraph,
    /// `labels[k]` is the original label of local vertex `k + 1`.
    pub labels: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn to_original(&self, local: Vertex) -> Vertex {
        self.labels[local - 1]
    }

    pub fn to_local(&self, original: Vertex) -> Option<Vertex> {
        self.labels.binary_search(&original).ok().map(|k| k + 1)
    }

    pub fn set_to_local(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.to_local(v)).collect()
    }

    pub fn set_to_original(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_original(v)).collect()
    }
}

/// Parses the arc-list text format.
///
/// ```text
/// # optional comments
/// n=3
/// 1 -> 2 3
/// 3 -> 1
/// ```
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut out: Vec<BTreeSet<Vertex>> = Vec::new();
    for (idx, line) in text.split('\n').enumerate() {
        let line_no = idx + 1;
        let err = |kind| ParseError { line: line_no, kind };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(count) = n else {
            let value = line
                .strip_prefix("n=")
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&c| c >= 1)
                .ok_or_else(|| {
                    if line.contains("->") {
                        err(ParseErrorKind::MissingHeader)
                    } else {
                        err(ParseErrorKind::Malformed(line.to_string()))
                    }
                })?;
            n = Some(value);
            out = vec![BTreeSet::new(); value];
            continue;
        };
        let malformed = || err(ParseErrorKind::Malformed(line.to_string()));
        let mut tokens = line.split(' ');
        let tail = parse_label(tokens.next()).ok_or_else(malformed)?;
        if tokens.next() != Some("->") {
            return Err(malformed());
        }
        let heads: Vec<&str> = tokens.collect();
        if heads.is_empty() {
            return Err(malformed());
        }
        if tail == 0 || tail > count {
            return Err(err(ParseErrorKind::OutOfRange { vertex: tail, n: count }));
        }
        for tok in heads {
            let head = parse_label(Some(tok)).ok_or_else(malformed)?;
            if head == 0 || head > count {
                return Err(err(ParseErrorKind::OutOfRange { vertex: head, n: count }));
            }
            if head == tail {
                return Err(err(ParseErrorKind::SelfLoop(tail)));
            }
            if !out[tail - 1].insert(head) {
                return Err(err(ParseErrorKind::DuplicateArc(tail, head)));
            }
        }
    }
    let n = n.ok_or(ParseError {
        line: text.split('\n').count(),
        kind: ParseErrorKind::MissingHeader,
    })?;
    let arcs = out
        .iter()
        .enumerate()
        .flat_map(|(t, hs)| hs.iter().map(move |&h| (t + 1, h)));
    Ok(Digraph::from_arcs(n, arcs).expect("arcs checked while parsing"))
}

fn parse_label(tok: Option<&str>) -> Option<Vertex> {
    let tok = tok?;
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    tok.parse().ok()
}

/// Canonical arc-list text, without a trailing newline.
pub fn serialize_digraph(d: &Digraph) -> String {
    let mut s = format!("n={}", d.vertex_count());
    for v in d.vertices() {
        let heads = d.successors(v);
        if heads.is_empty() {
            continue;
        }
        s.push('\n');
        s.push_str(&v.to_string());
        s.push_str(" ->");
        for h in heads {
            s.push(' ');
            s.push_str(&h.to_string());
        }
    }
    s
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_digraph(self))
    }
}

impl FromStr for Digraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_digraph(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn digon() -> Digraph {
        Digraph::from_arcs(2, [(1, 2), (2, 1)]).unwrap()
    }

    #[test]
    fn parses_digon() {
        let d = parse_digraph("n=2\n1 -> 2\n2 -> 1").unwrap();
        assert_eq!(d, digon());
    }

    #[test]
    fn parse_rejects_self_loop() {
        let e = parse_digraph("n=2\n1 -> 1").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::SelfLoop(1));
    }

    #[test]
    fn parse_rejects_duplicates_and_range() {
        let e = parse_digraph("n=3\n1 -> 2\n1 -> 3 2").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::DuplicateArc(1, 2)));
        let e = parse_digraph("# c\nn=3\n1 -> 4").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::OutOfRange { vertex: 4, n: 3 }));
        let e = parse_digraph("n=3\n0 -> 1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::OutOfRange { vertex: 0, .. }));
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in [
            "n=2\n1 ->  2",
            "n=2\n1 => 2",
            "n=2\n1 ->",
            "n=2\n1 -> 2\r",
            "n=x",
            "n=0",
            "1 -> 2",
            "",
        ] {
            assert!(parse_digraph(bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(
            parse_digraph("1 -> 2").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        );
    }

    #[test]
    fn parse_allows_comments_and_split_tails() {
        let d = parse_digraph("# a\nn=3\n# b\n3 -> 1\n1 -> 2\n3 -> 2\n").unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 2), (3, 1), (3, 2)]);
    }

    #[test]
    fn serializes_canonically() {
        assert_eq!(serialize_digraph(&digon()), "n=2\n1 -> 2\n2 -> 1");
        assert_eq!(serialize_digraph(&Digraph::empty(3)), "n=3");
        let d = parse_digraph("n=4\n4 -> 2 1\n2 -> 4").unwrap();
        assert_eq!(serialize_digraph(&d), "n=4\n2 -> 4\n4 -> 1 2");
    }

    #[test]
    fn out_neighbors_and_range() {
        assert_eq!(digon().out_neighbors(1).unwrap(), VertexSet::from([2]));
        assert!(digon().out_neighbors(3).is_err());
        assert!(digon().out_neighbors(0).is_err());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let d = digon();
        let one = d.induced_subgraph(&VertexSet::from([1]));
        assert_eq!(one.digraph, Digraph::empty(1));
        assert_eq!(d.induced_subgraph(&d.all_vertices()).digraph, d);
        let tri = Digraph::from_arcs(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let sub = tri.induced_subgraph(&VertexSet::from([2, 3]));
        assert_eq!(sub.labels, vec![2, 3]);
        assert_eq!(sub.digraph.arcs().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(sub.to_local(3), Some(2));
        assert_eq!(sub.to_local(1), None);
    }

    #[test]
    fn acyclicity_and_cycles() {
        assert!(!digon().is_acyclic());
        assert!(Digraph::empty(4).is_acyclic());
        let c = digon().find_cycle().unwrap();
        assert!(c.is_cycle() && c.is_valid_in(&digon()));
        let tri = Digraph::from_arcs(3, [(1, 2), (2, 3), (3, 1), (1, 3)]).unwrap();
        let cycles = tri.simple_cycles(usize::MAX);
        assert_eq!(cycles, vec![Path(vec![1, 2, 3, 1]), Path(vec![1, 3, 1])]);
    }

    #[test]
    fn restricted_path_counts() {
        let d = digon();
        assert_eq!(
            d.count_interior_restricted_paths(1, 2, &VertexSet::new(), DEFAULT_PATH_CAP),
            PathCount::Exact(1)
        );
        // two routes 1->2->4 and 1->3->4 plus a cycle 2<->3 in the interior
        let d = Digraph::from_arcs(4, [(1, 2), (1, 3), (2, 4), (3, 4), (2, 3), (3, 2)]).unwrap();
        let all = VertexSet::from([2, 3]);
        assert_eq!(d.count_interior_restricted_paths(1, 4, &all, 100), PathCount::Exact(4));
        assert_eq!(d.count_interior_restricted_paths(1, 4, &all, 3), PathCount::Overflow);
        assert_eq!(d.interior_restricted_paths(1, 4, &all, 10).len(), 4);
    }

    #[test]
    fn sccs() {
        let d = Digraph::from_arcs(5, [(1, 2), (2, 1), (2, 3), (3, 4), (4, 3)]).unwrap();
        let comps = d.strongly_connected_components();
        assert_eq!(
            comps,
            vec![VertexSet::from([1, 2]), VertexSet::from([3, 4]), VertexSet::from([5])]
        );
    }

    #[test]
    fn vertex_set_text() {
        let s: VertexSet = "3,1,2".parse().unwrap();
        assert_eq!(s.to_string(), "1,2,3");
        assert!("1,x".parse::<VertexSet>().is_err());
        assert_eq!(VertexSet::from_bits(s.to_bits()), s);
    }
}

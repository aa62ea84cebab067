//! Generalized interlinked cycle (GIC) recognition.
//!
//! A digraph `D` with inner vertex set `V_I` is a K-GIC when
//!
//! * every ordered inner pair `(i, j)` is joined by a path whose interior
//!   avoids `V_I` (so a rooted tree `T_i` with leaves `V_I \ {i}` exists),
//! * no cycle contains exactly one inner vertex (no I-cycle),
//! * for every ordered inner pair there is exactly one P-path, a path whose
//!   endpoints are the pair and whose interior is entirely non-inner,
//! * `D` is the union of the trees.
//!
//! Trees are breadth-first with ascending-label tie-breaking, so validation
//! is a deterministic function of `(D, V_I)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{Digraph, Path, PathCount, Vertex, VertexSet, DEFAULT_PATH_CAP};

/// A directed tree rooted at an inner vertex whose leaves are the other
/// inner vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedTree {
    root: Vertex,
    parent_of: BTreeMap<Vertex, Vertex>,
    depth_of: BTreeMap<Vertex, usize>,
}

impl RootedTree {
    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent_of(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.parent_of
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent_of.get(&v).copied()
    }

    pub fn depth(&self, v: Vertex) -> Option<usize> {
        self.depth_of.get(&v).copied()
    }

    pub fn height(&self) -> usize {
        self.depth_of.values().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.depth_of.contains_key(&v)
    }

    pub fn vertices(&self) -> VertexSet {
        self.depth_of.keys().copied().collect()
    }

    pub fn children(&self, v: Vertex) -> VertexSet {
        self.parent_of
            .iter()
            .filter(|&(_, &p)| p == v)
            .map(|(&c, _)| c)
            .collect()
    }

    pub fn leaves(&self) -> VertexSet {
        let parents: VertexSet = self.parent_of.values().copied().collect();
        self.parent_of
            .keys()
            .copied()
            .filter(|v| !parents.contains(*v))
            .collect()
    }

    /// Tree arcs `(parent, child)`, ordered by child.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.parent_of.iter().map(|(&c, &p)| (p, c))
    }

    /// Leaves of the subtree hanging from `v` (the leaf fan-out set).
    pub fn leaf_fanout(&self, v: Vertex) -> VertexSet {
        self.leaves()
            .iter()
            .filter(|&leaf| {
                let mut u = leaf;
                while let Some(p) = self.parent(u) {
                    if p == v {
                        return true;
                    }
                    u = p;
                }
                false
            })
            .collect()
    }

    /// Tree path from the root down to `v`.
    pub fn path_to(&self, v: Vertex) -> Option<Path> {
        if !self.contains(v) {
            return None;
        }
        let mut seq = vec![v];
        let mut u = v;
        while let Some(p) = self.parent(u) {
            seq.push(p);
            u = p;
        }
        seq.reverse();
        Some(Path(seq))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("from root {root}, inner vertices {unreachable} are unreachable without passing another inner vertex")]
pub struct TreeError {
    pub root: Vertex,
    pub unreachable: VertexSet,
}

/// Breadth-first tree from `root`. Non-root inner vertices are leaves and
/// never expanded; branches that reach no inner leaf are pruned.
pub fn build_tree(d: &Digraph, inner: &VertexSet, root: Vertex) -> Result<RootedTree, TreeError> {
    assert!(inner.contains(root), "root must be an inner vertex");
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut visited = vec![false; d.vertex_count() + 1];
    visited[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &h in d.successors(v) {
            if visited[h] {
                continue;
            }
            visited[h] = true;
            parent.insert(h, v);
            if !inner.contains(h) {
                queue.push_back(h);
            }
        }
    }
    let unreachable: VertexSet = inner
        .iter()
        .filter(|&j| j != root && !visited[j])
        .collect();
    if !unreachable.is_empty() {
        return Err(TreeError { root, unreachable });
    }

    let mut keep = VertexSet::from([root]);
    for leaf in inner.iter().filter(|&j| j != root) {
        let mut u = leaf;
        while keep.insert(u) {
            u = parent[&u];
        }
    }
    let parent_of: BTreeMap<Vertex, Vertex> =
        parent.into_iter().filter(|(c, _)| keep.contains(*c)).collect();
    let mut depth_of = BTreeMap::from([(root, 0)]);
    // parents are discovered before children, so resolve depths by walking up
    for &c in parent_of.keys() {
        let mut chain = vec![c];
        let mut u = c;
        let base = loop {
            let p = parent_of[&u];
            if let Some(&dp) = depth_of.get(&p) {
                break dp;
            }
            chain.push(p);
            u = p;
        };
        for (k, v) in chain.iter().rev().enumerate() {
            depth_of.insert(*v, base + k + 1);
        }
    }
    Ok(RootedTree {
        root,
        parent_of,
        depth_of,
    })
}

/// Shortest path from `from` to `to` whose interior lies in `allowed`
/// (`from == to` finds a shortest cycle through `from`).
fn shortest_restricted_path(
    d: &Digraph,
    from: Vertex,
    to: Vertex,
    allowed: &VertexSet,
) -> Option<Path> {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = vec![false; d.vertex_count() + 1];
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        for &h in d.successors(v) {
            if h == to {
                let mut seq = vec![to, v];
                let mut u = v;
                while let Some(&p) = parent.get(&u) {
                    seq.push(p);
                    u = p;
                }
                seq.reverse();
                return Some(Path(seq));
            }
            if allowed.contains(h) && !seen[h] {
                seen[h] = true;
                parent.insert(h, v);
                queue.push_back(h);
            }
        }
    }
    None
}

/// Inner vertices lying on a cycle whose other vertices are all non-inner.
pub fn detect_i_cycles(d: &Digraph, inner: &VertexSet) -> VertexSet {
    inner
        .iter()
        .filter(|&i| i_cycle_witness(d, inner, i).is_some())
        .collect()
}

/// A shortest I-cycle through inner vertex `i`, if one exists.
pub fn i_cycle_witness(d: &Digraph, inner: &VertexSet, i: Vertex) -> Option<Path> {
    let outside = d.all_vertices().difference(inner);
    shortest_restricted_path(d, i, i, &outside)
}

/// P-path counts for every ordered pair of distinct inner vertices.
pub fn check_p_path_uniqueness(
    d: &Digraph,
    inner: &VertexSet,
    cap: u64,
) -> BTreeMap<(Vertex, Vertex), PathCount> {
    let outside = d.all_vertices().difference(inner);
    let mut counts = BTreeMap::new();
    for i in inner.iter() {
        for j in inner.iter().filter(|&j| j != i) {
            counts.insert((i, j), d.count_interior_restricted_paths(i, j, &outside, cap));
        }
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    InnerPairUnreachable,
    ICycle,
    PPathMultiplicity,
    ExtraArc,
    TreeConstructionFailure,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::InnerPairUnreachable => "inner-pair-unreachable",
            ViolationKind::ICycle => "i-cycle",
            ViolationKind::PPathMultiplicity => "p-path-multiplicity",
            ViolationKind::ExtraArc => "extra-arc",
            ViolationKind::TreeConstructionFailure => "tree-construction-failure",
        })
    }
}

/// Why `(D, V_I)` is not a GIC, with vertex sequences that demonstrate it.
///
/// Witness shapes by kind:
/// * `InnerPairUnreachable`: one `[i, j]` ordered pair.
/// * `ICycle`: one closed cycle through exactly one inner vertex.
/// * `PPathMultiplicity`: two distinct P-paths for the same pair (fewer when
///   `overflow` is set and enumeration was cut short).
/// * `ExtraArc`: each uncovered arc as `[tail, head]`, each uncovered vertex
///   as `[v]`.
/// * `TreeConstructionFailure`: `[v]` for the offending vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Error)]
#[error("{kind}: {detail}")]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<Path>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub overflow: bool,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, witness: Vec<Path>, detail: String) -> Self {
        Violation {
            kind,
            witness,
            overflow: false,
            detail,
        }
    }

    /// Re-checks the witness against the input, independently of the
    /// validator's own bookkeeping.
    pub fn replays_on(&self, d: &Digraph, inner: &VertexSet) -> bool {
        let outside = d.all_vertices().difference(inner);
        let is_p_path = |p: &Path| {
            let vs = p.vertices();
            vs.len() >= 2
                && p.is_valid_in(d)
                && !p.is_cycle()
                && inner.contains(vs[0])
                && inner.contains(vs[vs.len() - 1])
                && vs[1..vs.len() - 1].iter().all(|&v| outside.contains(v))
        };
        match self.kind {
            ViolationKind::InnerPairUnreachable => match self.witness.as_slice() {
                [p] if p.vertices().len() == 2 => {
                    let (i, j) = (p.vertices()[0], p.vertices()[1]);
                    inner.contains(i)
                        && inner.contains(j)
                        && d.count_interior_restricted_paths(i, j, &outside, 1)
                            == PathCount::Exact(0)
                }
                _ => false,
            },
            ViolationKind::ICycle => match self.witness.as_slice() {
                [c] => {
                    c.is_cycle()
                        && c.is_valid_in(d)
                        && c.vertices()[1..].iter().filter(|&&v| inner.contains(v)).count() == 1
                }
                _ => false,
            },
            ViolationKind::PPathMultiplicity => match self.witness.as_slice() {
                [a, b] => {
                    a != b
                        && is_p_path(a)
                        && is_p_path(b)
                        && a.vertices().first() == b.vertices().first()
                        && a.vertices().last() == b.vertices().last()
                }
                _ => self.overflow,
            },
            ViolationKind::ExtraArc => {
                !self.witness.is_empty()
                    && self.witness.iter().all(|w| match w.vertices() {
                        [t, h] => d.has_arc(*t, *h),
                        [v] => d.contains(*v),
                        _ => false,
                    })
            }
            ViolationKind::TreeConstructionFailure => self
                .witness
                .iter()
                .all(|w| w.vertices().iter().all(|&v| d.contains(v))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GicError {
    #[error("inner vertex set is empty")]
    EmptyInner,
    #[error("inner vertex {vertex} is outside 1..={n}")]
    InnerOutOfRange { vertex: Vertex, n: usize },
    #[error(transparent)]
    Violation(#[from] Violation),
}

impl GicError {
    pub fn violation(&self) -> Option<&Violation> {
        match self {
            GicError::Violation(v) => Some(v),
            _ => None,
        }
    }
}

/// A validated K-GIC: digraph, inner vertex set, and one tree per inner vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GicStructure {
    digraph: Digraph,
    inner: VertexSet,
    trees: BTreeMap<Vertex, RootedTree>,
}

impl GicStructure {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn inner(&self) -> &VertexSet {
        &self.inner
    }

    pub fn trees(&self) -> &BTreeMap<Vertex, RootedTree> {
        &self.trees
    }

    pub fn tree(&self, root: Vertex) -> Option<&RootedTree> {
        self.trees.get(&root)
    }

    /// Number of inner vertices.
    pub fn k(&self) -> usize {
        self.inner.len()
    }

    pub fn n(&self) -> usize {
        self.digraph.vertex_count()
    }

    /// Non-inner vertices, ascending.
    pub fn non_inner(&self) -> VertexSet {
        self.digraph.all_vertices().difference(&self.inner)
    }

    pub fn is_inner(&self, v: Vertex) -> bool {
        self.inner.contains(v)
    }
}

/// Decides whether `(d, inner)` is a K-GIC.
///
/// Checks run in a fixed order and the first failure is reported: tree
/// construction, I-cycles, P-path multiplicity, cross-tree child-set
/// agreement, and finally coverage of every arc and vertex by the trees.
pub fn validate_gic(d: &Digraph, inner: &VertexSet) -> Result<GicStructure, GicError> {
    validate_gic_with_cap(d, inner, DEFAULT_PATH_CAP)
}

pub fn validate_gic_with_cap(
    d: &Digraph,
    inner: &VertexSet,
    cap: u64,
) -> Result<GicStructure, GicError> {
    let n = d.vertex_count();
    if inner.is_empty() {
        return Err(GicError::EmptyInner);
    }
    if let Some(v) = inner.iter().find(|&v| !d.contains(v)) {
        return Err(GicError::InnerOutOfRange { vertex: v, n });
    }

    if inner.len() == 1 {
        let root = inner.first().unwrap();
        if n == 1 {
            let tree = RootedTree {
                root,
                parent_of: BTreeMap::new(),
                depth_of: BTreeMap::from([(root, 0)]),
            };
            return Ok(GicStructure {
                digraph: d.clone(),
                inner: inner.clone(),
                trees: BTreeMap::from([(root, tree)]),
            });
        }
        if let Some(c) = i_cycle_witness(d, inner, root) {
            return Err(Violation::new(
                ViolationKind::ICycle,
                vec![c],
                format!("cycle through inner vertex {root} and no other inner vertex"),
            )
            .into());
        }
        return Err(Violation::new(
            ViolationKind::TreeConstructionFailure,
            vec![Path(vec![root])],
            format!("a single inner vertex only forms a GIC on a 1-vertex digraph (N = {n})"),
        )
        .into());
    }

    let mut trees = BTreeMap::new();
    for root in inner.iter() {
        match build_tree(d, inner, root) {
            Ok(t) => {
                trees.insert(root, t);
            }
            Err(e) => {
                let j = e.unreachable.first().unwrap();
                return Err(Violation::new(
                    ViolationKind::InnerPairUnreachable,
                    vec![Path(vec![root, j])],
                    format!("no path from {root} to {j} avoiding other inner vertices"),
                )
                .into());
            }
        }
    }

    for i in inner.iter() {
        if let Some(cycle) = i_cycle_witness(d, inner, i) {
            return Err(Violation::new(
                ViolationKind::ICycle,
                vec![cycle.clone()],
                format!("cycle {cycle} contains only inner vertex {i}"),
            )
            .into());
        }
    }

    let outside = d.all_vertices().difference(inner);
    for ((i, j), count) in check_p_path_uniqueness(d, inner, cap) {
        if count == PathCount::Exact(1) {
            continue;
        }
        let paths = d.interior_restricted_paths(i, j, &outside, 2);
        let mut v = Violation::new(
            ViolationKind::PPathMultiplicity,
            paths,
            format!("{count} P-paths from {i} to {j}"),
        );
        v.overflow = count == PathCount::Overflow;
        return Err(v.into());
    }

    // Child sets of a shared non-inner vertex must agree across trees.
    for v in outside.iter() {
        let mut seen: Option<(Vertex, VertexSet)> = None;
        for (root, t) in &trees {
            if !t.contains(v) {
                continue;
            }
            let kids = t.children(v);
            match &seen {
                None => seen = Some((*root, kids)),
                Some((r0, k0)) if *k0 != kids => {
                    return Err(Violation::new(
                        ViolationKind::TreeConstructionFailure,
                        vec![Path(vec![v])],
                        format!(
                            "vertex {v} has children {{{k0}}} in T_{r0} but {{{kids}}} in T_{root}"
                        ),
                    )
                    .into());
                }
                _ => {}
            }
        }
    }

    let mut covered_arcs = vec![Vec::<Vertex>::new(); n + 1];
    let mut covered_vertices = VertexSet::new();
    for t in trees.values() {
        for (p, c) in t.arcs() {
            covered_arcs[p].push(c);
        }
        covered_vertices = covered_vertices.union(&t.vertices());
    }
    let mut witness: Vec<Path> = d
        .arcs()
        .filter(|(t, h)| !covered_arcs[*t].contains(h))
        .map(|(t, h)| Path(vec![t, h]))
        .collect();
    witness.extend(
        d.vertices()
            .filter(|&v| !covered_vertices.contains(v))
            .map(|v| Path(vec![v])),
    );
    if !witness.is_empty() {
        let detail = format!(
            "{} arc(s)/vertex(es) outside the union of trees, first {}",
            witness.len(),
            witness[0]
        );
        return Err(Violation::new(ViolationKind::ExtraArc, witness, detail).into());
    }

    Ok(GicStructure {
        digraph: d.clone(),
        inner: inner.clone(),
        trees,
    })
}

/// Every non-inner vertex has the same children in every tree containing it,
/// equal to its out-neighbourhood; every root's children equal its
/// out-neighbourhood.
pub fn check_tree_consistency(g: &GicStructure) -> bool {
    let d = g.digraph();
    g.trees.iter().all(|(&root, t)| {
        let root_ok = d.out_neighbors(root).map(|s| s == t.children(root)).unwrap_or(false);
        root_ok
            && t
                .vertices()
                .iter()
                .filter(|&v| !g.is_inner(v))
                .all(|v| d.out_neighbors(v).map(|s| s == t.children(v)).unwrap_or(false))
    })
}

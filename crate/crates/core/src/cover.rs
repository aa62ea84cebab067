//! Cover schemes over arbitrary digraphs.
//!
//! The GIC cover partitions the vertices into disjoint GIC parts plus an
//! uncoded remainder; a K-part saves `K - 1` transmissions. Cycle and clique
//! covers are the classical baselines, and interlinked-cycle descriptions
//! convert into GIC parts directly.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::BitGraph;
use crate::codec::{encode, CodedSymbol, IndexCode, MessageVector};
use crate::digraph::{bit_iter, Digraph, Path, Vertex, VertexSet};
use crate::gic::{validate_gic, GicStructure};

/// Largest vertex count for the exhaustive GIC cover.
pub const EXACT_COVER_LIMIT: usize = 10;
/// Largest vertex count for exact cycle packing and clique partition.
pub const EXACT_BASELINE_LIMIT: usize = 12;
/// Ceiling for every overridable exact limit: the dynamic programs hold
/// `2^N` entries.
pub const MAX_EXACT_LIMIT: usize = 20;
/// Validation attempts spent by the default heuristic search.
pub const DEFAULT_BUDGET: usize = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Effort {
    /// Enumerate every (part, inner set) pair; only up to a size gate.
    Exhaustive,
    /// Seeded randomized greedy search bounded by this many validations.
    Budget(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("exhaustive cover supports at most {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

/// One GIC part of a cover. The structure lives on the induced sub-digraph
/// with local labels `1..=|vertices|` in ascending order of the originals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPart {
    vertices: VertexSet,
    inner: VertexSet,
    structure: GicStructure,
}

impl CoverPart {
    /// Validates the sub-digraph of `d` induced by `vertices` with `inner`.
    pub fn new(d: &Digraph, vertices: &VertexSet, inner: &VertexSet) -> Option<CoverPart> {
        if inner.len() < 2 || !inner.is_subset(vertices) {
            return None;
        }
        let sub = d.induced_subgraph(vertices);
        let structure = validate_gic(&sub.digraph, &sub.set_to_local(inner)).ok()?;
        Some(CoverPart {
            vertices: vertices.clone(),
            inner: inner.clone(),
            structure,
        })
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn inner(&self) -> &VertexSet {
        &self.inner
    }

    pub fn structure(&self) -> &GicStructure {
        &self.structure
    }

    pub fn k(&self) -> usize {
        self.inner.len()
    }

    pub fn savings(&self) -> usize {
        self.k() - 1
    }

    /// `|vertices| - K + 1`.
    pub fn length(&self) -> usize {
        self.vertices.len() - self.k() + 1
    }

    pub fn to_original(&self, local: Vertex) -> Vertex {
        self.vertices.iter().nth(local - 1).expect("local label in range")
    }
}

/// Disjoint GIC parts plus uncoded vertices covering `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPlan {
    n: usize,
    parts: Vec<CoverPart>,
    uncoded: VertexSet,
}

impl CoverPlan {
    /// Plan over `n` vertices; vertices outside every part are uncoded.
    pub fn from_parts(n: usize, parts: Vec<CoverPart>) -> CoverPlan {
        let mut uncoded = VertexSet::range(1, n);
        for p in &parts {
            uncoded = uncoded.difference(p.vertices());
        }
        CoverPlan { n, parts, uncoded }
    }

    pub fn parts(&self) -> &[CoverPart] {
        &self.parts
    }

    pub fn uncoded(&self) -> &VertexSet {
        &self.uncoded
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of parts.
    pub fn psi(&self) -> usize {
        self.parts.len()
    }

    /// Code length `N - sum(K_i - 1)`.
    pub fn length(&self) -> usize {
        self.n - savings(self)
    }

    /// Checks disjointness, coverage and per-part validity against `d`.
    pub fn check(&self, d: &Digraph) -> Result<(), String> {
        if d.vertex_count() != self.n {
            return Err(format!("plan covers {} vertices, digraph has {}", self.n, d.vertex_count()));
        }
        let mut seen = self.uncoded.clone();
        for (k, p) in self.parts.iter().enumerate() {
            if !seen.is_disjoint(p.vertices()) {
                return Err(format!("part {} overlaps earlier parts", k + 1));
            }
            seen = seen.union(p.vertices());
            if CoverPart::new(d, p.vertices(), p.inner()).is_none() {
                return Err(format!("part {} is not a GIC of the induced sub-digraph", k + 1));
            }
        }
        if seen != d.all_vertices() {
            return Err("parts and uncoded vertices do not cover the digraph".into());
        }
        Ok(())
    }
}

impl fmt::Display for CoverPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "parts={} savings={} length={}",
            self.psi(),
            savings(self),
            self.length()
        )?;
        for (k, p) in self.parts.iter().enumerate() {
            writeln!(
                f,
                "part {}: vertices={} inner={} K={} length={}",
                k + 1,
                p.vertices(),
                p.inner(),
                p.k(),
                p.length()
            )?;
        }
        write!(f, "uncoded: {}", self.uncoded)
    }
}

/// Total savings `sum(K_i - 1)`, equal to `N - length`.
pub fn savings(plan: &CoverPlan) -> usize {
    plan.parts.iter().map(CoverPart::savings).sum()
}

/// Finds disjoint GIC parts. Deterministic in `(d, effort, seed)`.
pub fn gicc_cover(d: &Digraph, effort: Effort, seed: u64) -> Result<CoverPlan, CoverError> {
    match effort {
        Effort::Exhaustive => gicc_cover_exact(d, EXACT_COVER_LIMIT),
        Effort::Budget(budget) => Ok(gicc_cover_heuristic(d, budget, seed)),
    }
}

/// Exhaustive cover: every strongly connected vertex set with every inner
/// subset, then an optimal disjoint packing by dynamic programming.
pub fn gicc_cover_exact(d: &Digraph, limit: usize) -> Result<CoverPlan, CoverError> {
    let n = d.vertex_count();
    let limit = limit.min(MAX_EXACT_LIMIT);
    if n > limit {
        return Err(CoverError::TooLarge { n, limit });
    }
    let bg = BitGraph::new(d);
    // best part per vertex set, keyed by the set's mask
    let mut best_part: BTreeMap<u64, CoverPart> = BTreeMap::new();
    for s in 1u64..(1 << n) {
        if s.count_ones() < 2 || !bg.is_strongly_connected(s) {
            continue;
        }
        let mut subsets: Vec<u64> = submasks(s).filter(|i| i.count_ones() >= 2).collect();
        subsets.sort_by_key(|i| (std::cmp::Reverse(i.count_ones()), *i));
        for inner in subsets {
            if has_i_cycle(&bg, s, inner) {
                continue;
            }
            if let Some(part) =
                CoverPart::new(d, &VertexSet::from_bits(s), &VertexSet::from_bits(inner))
            {
                best_part.insert(s, part);
                break;
            }
        }
    }
    let full = bg.full();
    let mut by_low: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &s in best_part.keys() {
        by_low[s.trailing_zeros() as usize].push(s);
    }
    let size = 1usize << n;
    let mut value = vec![0usize; size];
    let mut choice = vec![0u64; size];
    for mask in 1..size as u64 {
        let low = mask.trailing_zeros() as usize;
        let mut best = value[(mask & (mask - 1)) as usize];
        let mut pick = 0;
        for &s in &by_low[low] {
            if s & !mask == 0 {
                let v = best_part[&s].savings() + value[(mask & !s) as usize];
                if v > best {
                    best = v;
                    pick = s;
                }
            }
        }
        value[mask as usize] = best;
        choice[mask as usize] = pick;
    }
    let mut parts = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let pick = choice[mask as usize];
        if pick == 0 {
            mask &= mask - 1;
        } else {
            parts.push(best_part[&pick].clone());
            mask &= !pick;
        }
    }
    parts.sort_by_key(|p| p.vertices().first());
    Ok(CoverPlan::from_parts(n, parts))
}

fn submasks(s: u64) -> impl Iterator<Item = u64> {
    let mut sub = s;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & s;
        }
        Some(cur)
    })
}

/// Cheap necessary check: some inner vertex lies on a cycle avoiding the
/// other inner vertices.
fn has_i_cycle(bg: &BitGraph, s: u64, inner: u64) -> bool {
    bit_iter(inner).any(|i| {
        let allowed = (s & !inner) | (1 << i);
        let mut seen = 0u64;
        let mut frontier = bg.out[i] & allowed;
        while frontier != 0 {
            if frontier & (1 << i) != 0 {
                return true;
            }
            seen |= frontier;
            let mut next = 0;
            for v in bit_iter(frontier) {
                next |= bg.out[v];
            }
            frontier = next & allowed & !seen;
        }
        false
    })
}

/// Vertices of `within` lying on some path between inner vertices whose
/// interior avoids `inner`, plus `inner` itself.
fn inner_closure(d: &Digraph, within: &VertexSet, inner: &VertexSet) -> VertexSet {
    let interior = within.difference(inner);
    let sweep = |forward: bool| {
        let mut seen = VertexSet::new();
        let mut stack: Vec<Vertex> = inner.to_vec();
        while let Some(v) = stack.pop() {
            let next = if forward { d.successors(v) } else { d.predecessors(v) };
            for &h in next {
                if interior.contains(h) && seen.insert(h) {
                    stack.push(h);
                }
            }
        }
        seen
    };
    sweep(true).intersection(&sweep(false)).union(inner)
}

/// Seeded randomized greedy search. Always at least as good as the cycle
/// and clique cover baselines, which are valid GIC covers themselves.
pub fn gicc_cover_heuristic(d: &Digraph, budget: usize, seed: u64) -> CoverPlan {
    let n = d.vertex_count();
    let mut best = CoverPlan::from_parts(n, Vec::new());
    for plan in [plan_from_cycles(d), plan_from_cliques(d)] {
        if savings(&plan) > savings(&best) {
            best = plan;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent = 0usize;
    while spent < budget {
        let before = spent;
        let plan = randomized_greedy(d, &mut rng, &mut spent, budget);
        if savings(&plan) > savings(&best) {
            best = plan;
        }
        if spent == before {
            break;
        }
    }
    best
}

fn randomized_greedy(
    d: &Digraph,
    rng: &mut ChaCha8Rng,
    spent: &mut usize,
    budget: usize,
) -> CoverPlan {
    let mut free = d.all_vertices();
    let mut parts = Vec::new();
    let mut exhausted = VertexSet::new();
    loop {
        let sub = d.induced_subgraph(&free);
        let mut comps: Vec<VertexSet> = sub
            .digraph
            .strongly_connected_components()
            .into_iter()
            .map(|c| sub.set_to_original(&c))
            .filter(|c| c.len() >= 2 && !c.is_subset(&exhausted))
            .collect();
        if comps.is_empty() || *spent >= budget {
            break;
        }
        comps.shuffle(rng);
        let comp = comps.swap_remove(0);
        let members = comp.to_vec();
        let mut accepted = None;
        for k in (2..=members.len()).rev() {
            if *spent >= budget {
                break;
            }
            *spent += 1;
            let inner: VertexSet = members.choose_multiple(rng, k).copied().collect();
            let span = inner_closure(d, &free, &inner);
            if let Some(part) = CoverPart::new(d, &span, &inner) {
                accepted = Some(grow(d, &free, part, rng, spent, budget));
                break;
            }
        }
        match accepted {
            Some(part) => {
                free = free.difference(part.vertices());
                parts.push(part);
            }
            None => exhausted = exhausted.union(&comp),
        }
    }
    parts.sort_by_key(|p| p.vertices().first());
    CoverPlan::from_parts(d.vertex_count(), parts)
}

/// Tries promoting single vertices into the inner set while the part stays
/// valid and its savings grow.
fn grow(
    d: &Digraph,
    free: &VertexSet,
    mut part: CoverPart,
    rng: &mut ChaCha8Rng,
    spent: &mut usize,
    budget: usize,
) -> CoverPart {
    loop {
        let mut candidates: Vec<Vertex> = free.difference(part.inner()).to_vec();
        candidates.shuffle(rng);
        let mut improved = false;
        for v in candidates {
            if *spent >= budget {
                return part;
            }
            *spent += 1;
            let mut inner = part.inner().clone();
            inner.insert(v);
            let span = inner_closure(d, free, &inner);
            if let Some(bigger) = CoverPart::new(d, &span, &inner) {
                part = bigger;
                improved = true;
                break;
            }
        }
        if !improved || rng.gen_bool(0.0) {
            return part;
        }
    }
}

fn plan_from_cycles(d: &Digraph) -> CoverPlan {
    let parts = cycle_cover(d)
        .cycles
        .iter()
        .filter_map(|c| {
            let vs = c.vertices();
            let body: VertexSet = vs[..vs.len() - 1].iter().copied().collect();
            CoverPart::new(d, &body, &VertexSet::from([vs[0], vs[1]]))
        })
        .collect();
    CoverPlan::from_parts(d.vertex_count(), parts)
}

fn plan_from_cliques(d: &Digraph) -> CoverPlan {
    let parts = clique_cover(d)
        .cliques
        .iter()
        .filter(|c| c.len() >= 2)
        .filter_map(|c| CoverPart::new(d, c, c))
        .collect();
    CoverPlan::from_parts(d.vertex_count(), parts)
}

/// Per-part codes plus uncoded messages for a plan, in original labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanCode {
    pub parts: Vec<IndexCode>,
    pub uncoded: Vec<CodedSymbol>,
}

impl PlanCode {
    pub fn symbol_count(&self) -> usize {
        self.parts.iter().map(IndexCode::rate).sum::<usize>() + self.uncoded.len()
    }
}

fn part_messages(part: &CoverPart, m: &MessageVector) -> MessageVector {
    let payloads = part.vertices().iter().map(|v| m.message(v).clone()).collect();
    MessageVector::new(m.t(), payloads).expect("same width as the source vector")
}

/// Encodes every part with its own GIC code and sends the rest uncoded.
pub fn encode_plan(plan: &CoverPlan, m: &MessageVector) -> PlanCode {
    let parts = plan
        .parts
        .iter()
        .map(|p| {
            let local = encode(p.structure(), &part_messages(p, m)).expect("sizes match");
            IndexCode {
                t: local.t,
                symbols: local
                    .symbols
                    .into_iter()
                    .map(|s| CodedSymbol {
                        mask: s.mask.iter().map(|v| p.to_original(v)).collect(),
                        payload: s.payload,
                    })
                    .collect(),
            }
        })
        .collect();
    let uncoded = plan
        .uncoded
        .iter()
        .map(|v| CodedSymbol {
            mask: VertexSet::from([v]),
            payload: m.message(v).clone(),
        })
        .collect();
    PlanCode { parts, uncoded }
}

/// Every receiver recovers its message: part members decode their part's
/// code with the side information they hold inside the part; uncoded
/// receivers read their symbol.
pub fn plan_round_trip(d: &Digraph, plan: &CoverPlan, m: &MessageVector) -> bool {
    use crate::codec::decode;
    let code = encode_plan(plan, m);
    if code.symbol_count() != plan.length() {
        return false;
    }
    let parts_ok = plan.parts.iter().zip(&code.parts).all(|(p, pc)| {
        let g = p.structure();
        let local_code = IndexCode {
            t: pc.t,
            symbols: pc
                .symbols
                .iter()
                .map(|s| CodedSymbol {
                    mask: s.mask.iter().map(|v| local_label(p, v)).collect(),
                    payload: s.payload.clone(),
                })
                .collect(),
        };
        g.digraph().vertices().all(|local| {
            let v = p.to_original(local);
            // the receiver's full side information, restricted to the part
            let side = d
                .successors(v)
                .iter()
                .filter(|q| p.vertices().contains(**q))
                .map(|&q| (local_label(p, q), m.message(q).clone()))
                .collect();
            decode(g, &local_code, local, &side).is_ok_and(|x| &x == m.message(v))
        })
    });
    let uncoded_ok = code
        .uncoded
        .iter()
        .all(|s| s.mask.len() == 1 && &s.payload == m.message(s.mask.first().unwrap()));
    parts_ok && uncoded_ok
}

fn local_label(p: &CoverPart, v: Vertex) -> Vertex {
    p.vertices().iter().position(|u| u == v).expect("member of part") + 1
}

/// Vertex-disjoint cycles found by the cycle-cover baseline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCover {
    pub cycles: Vec<Path>,
    pub exact: bool,
}

/// Maximum vertex-disjoint cycle packing (exact up to
/// [`EXACT_BASELINE_LIMIT`] vertices, greedy shortest-cycle-first beyond).
pub fn cycle_cover(d: &Digraph) -> CycleCover {
    cycle_cover_with_limit(d, EXACT_BASELINE_LIMIT)
}

pub fn cycle_cover_with_limit(d: &Digraph, limit: usize) -> CycleCover {
    let n = d.vertex_count();
    if n <= limit.min(MAX_EXACT_LIMIT) {
        return CycleCover {
            cycles: exact_cycle_packing(d),
            exact: true,
        };
    }
    let mut alive = d.all_vertices();
    let mut cycles = Vec::new();
    while let Some(c) = shortest_cycle_within(d, &alive) {
        for &v in c.vertices() {
            alive.remove(v);
        }
        cycles.push(c);
    }
    CycleCover {
        cycles,
        exact: false,
    }
}

pub fn cycle_cover_length(d: &Digraph) -> usize {
    d.vertex_count() - cycle_cover(d).cycles.len()
}

fn exact_cycle_packing(d: &Digraph) -> Vec<Path> {
    let n = d.vertex_count();
    let bg = BitGraph::new(d);
    let size = 1usize << n;
    let acyclic: Vec<bool> = (0..size as u64).map(|m| bg.is_acyclic(m)).collect();
    // inclusion-minimal cyclic sets induce exactly one (chordless) cycle
    let mut by_low: Vec<Vec<u64>> = vec![Vec::new(); n];
    for m in 1..size as u64 {
        if !acyclic[m as usize] && bit_iter(m).all(|v| acyclic[(m & !(1 << v)) as usize]) {
            by_low[m.trailing_zeros() as usize].push(m);
        }
    }
    let mut value = vec![0usize; size];
    let mut choice = vec![0u64; size];
    for mask in 1..size as u64 {
        let low = mask.trailing_zeros() as usize;
        let mut best = value[(mask & (mask - 1)) as usize];
        let mut pick = 0;
        for &c in &by_low[low] {
            if c & !mask == 0 && 1 + value[(mask & !c) as usize] > best {
                best = 1 + value[(mask & !c) as usize];
                pick = c;
            }
        }
        value[mask as usize] = best;
        choice[mask as usize] = pick;
    }
    let mut cycles = Vec::new();
    let mut mask = bg.full();
    while mask != 0 {
        let pick = choice[mask as usize];
        if pick == 0 {
            mask &= mask - 1;
        } else {
            let set = VertexSet::from_bits(pick);
            let sub = d.induced_subgraph(&set);
            let local = sub.digraph.find_cycle().expect("cyclic set");
            let mut seq: Vec<Vertex> = local.vertices().iter().map(|&v| sub.to_original(v)).collect();
            // rotate so the cycle starts at its smallest vertex
            seq.pop();
            let start = seq.iter().enumerate().min_by_key(|(_, v)| **v).unwrap().0;
            seq.rotate_left(start);
            seq.push(seq[0]);
            cycles.push(Path(seq));
            mask &= !pick;
        }
    }
    cycles
}

/// Shortest cycle using only `alive` vertices, ties to the smallest start.
fn shortest_cycle_within(d: &Digraph, alive: &VertexSet) -> Option<Path> {
    let mut best: Option<Vec<Vertex>> = None;
    for s in alive.iter() {
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::from([s]);
        let mut seen = VertexSet::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            for &h in d.successors(v) {
                if h == s {
                    let mut seq = vec![v];
                    let mut u = v;
                    while let Some(&p) = parent.get(&u) {
                        seq.push(p);
                        u = p;
                    }
                    seq.reverse();
                    seq.push(s);
                    if best.as_ref().is_none_or(|b| seq.len() < b.len()) {
                        best = Some(seq);
                    }
                    break 'bfs;
                }
                if alive.contains(h) && seen.insert(h) {
                    parent.insert(h, v);
                    queue.push_back(h);
                }
            }
        }
    }
    best.map(Path)
}

/// Partition of the vertices into bidirectionally complete sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
    pub exact: bool,
}

/// Minimum clique partition (exact up to [`EXACT_BASELINE_LIMIT`] vertices,
/// greedy beyond).
pub fn clique_cover(d: &Digraph) -> CliqueCover {
    clique_cover_with_limit(d, EXACT_BASELINE_LIMIT)
}

pub fn clique_cover_with_limit(d: &Digraph, limit: usize) -> CliqueCover {
    let n = d.vertex_count();
    if n <= limit.min(MAX_EXACT_LIMIT) {
        return CliqueCover {
            cliques: exact_clique_partition(d),
            exact: true,
        };
    }
    let mut left = d.all_vertices();
    let mut cliques = Vec::new();
    while let Some(v) = left.first() {
        let mut clique = VertexSet::from([v]);
        for u in left.iter().filter(|&u| u != v) {
            if clique.iter().all(|w| d.has_arc(u, w) && d.has_arc(w, u)) {
                clique.insert(u);
            }
        }
        left = left.difference(&clique);
        cliques.push(clique);
    }
    CliqueCover {
        cliques,
        exact: false,
    }
}

pub fn clique_cover_length(d: &Digraph) -> usize {
    clique_cover(d).cliques.len()
}

fn exact_clique_partition(d: &Digraph) -> Vec<VertexSet> {
    let n = d.vertex_count();
    let bg = BitGraph::new(d);
    let size = 1usize << n;
    let mut is_clique = vec![false; size];
    is_clique[0] = true;
    for m in 1..size as u64 {
        let v = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        is_clique[m as usize] = is_clique[rest as usize] && rest & !(bg.out[v] & bg.inc[v]) == 0;
    }
    let mut value = vec![0usize; size];
    let mut choice = vec![0u64; size];
    for mask in 1..size as u64 {
        let low = 1u64 << mask.trailing_zeros();
        let rest = mask & !low;
        let mut best = usize::MAX;
        let mut pick = low;
        for sub in submasks(rest) {
            let c = sub | low;
            if is_clique[c as usize] {
                let v = 1 + value[(mask & !c) as usize];
                if v < best || (v == best && c.count_ones() > pick.count_ones()) {
                    best = v;
                    pick = c;
                }
            }
        }
        value[mask as usize] = best;
        choice[mask as usize] = pick;
    }
    let mut cliques = Vec::new();
    let mut mask = bg.full();
    while mask != 0 {
        let pick = choice[mask as usize];
        cliques.push(VertexSet::from_bits(pick));
        mask &= !pick;
    }
    cliques
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IccError {
    #[error("an interlinked-cycle description needs k >= 2 paths, got {0}")]
    TooFewPaths(usize),
    #[error("path {0} is empty")]
    EmptyPath(usize),
    #[error("vertex {0} appears more than once")]
    RepeatedVertex(Vertex),
    #[error("vertex labels must be exactly 1..={n}")]
    Labels { n: usize },
    #[error("connector {0:?} is missing")]
    MissingConnector((usize, usize)),
    #[error("connector {pair:?} lands on {target}, which is not on path {}", pair.1)]
    BadTarget { pair: (usize, usize), target: Vertex },
    #[error("first vertex {0} of a path has no incoming arc")]
    NoInArc(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connector {
    /// Interior vertices `P_{i,j}`, possibly empty.
    pub vertices: Vec<Vertex>,
    /// Vertex of `P_j` the connector lands on.
    pub target: Vertex,
}

/// `k` disjoint paths `P_i` and, per ordered pair `(i, j)`, a connector from
/// the last vertex of `P_i` into `P_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IccDescription {
    pub paths: Vec<Vec<Vertex>>,
    pub connectors: BTreeMap<String, Connector>,
}

impl IccDescription {
    pub fn new(paths: Vec<Vec<Vertex>>, connectors: Vec<((usize, usize), Vec<Vertex>, Vertex)>) -> Self {
        IccDescription {
            paths,
            connectors: connectors
                .into_iter()
                .map(|((i, j), vertices, target)| (pair_key(i, j), Connector { vertices, target }))
                .collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.paths.len()
    }

    pub fn connector(&self, i: usize, j: usize) -> Option<&Connector> {
        self.connectors.get(&pair_key(i, j))
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum::<usize>()
            + self.connectors.values().map(|c| c.vertices.len()).sum::<usize>()
    }

    /// Last vertex of each path: the inner vertex set of the assembled GIC.
    pub fn path_ends(&self) -> VertexSet {
        self.paths.iter().filter_map(|p| p.last().copied()).collect()
    }

    /// Builds the digraph: path arcs, connector chains, landing arcs.
    pub fn assemble(&self) -> Result<(Digraph, VertexSet), IccError> {
        let k = self.k();
        if k < 2 {
            return Err(IccError::TooFewPaths(k));
        }
        let n = self.vertex_count();
        let mut seen = VertexSet::new();
        let all = self
            .paths
            .iter()
            .flatten()
            .chain(self.connectors.values().flat_map(|c| c.vertices.iter()));
        for &v in all {
            if !seen.insert(v) {
                return Err(IccError::RepeatedVertex(v));
            }
        }
        if seen != VertexSet::range(1, n) {
            return Err(IccError::Labels { n });
        }
        let mut arcs = Vec::new();
        for (idx, p) in self.paths.iter().enumerate() {
            if p.is_empty() {
                return Err(IccError::EmptyPath(idx + 1));
            }
            arcs.extend(p.windows(2).map(|w| (w[0], w[1])));
        }
        for i in 1..=k {
            for j in (1..=k).filter(|&j| j != i) {
                let c = self.connector(i, j).ok_or(IccError::MissingConnector((i, j)))?;
                if !self.paths[j - 1].contains(&c.target) {
                    return Err(IccError::BadTarget {
                        pair: (i, j),
                        target: c.target,
                    });
                }
                let start = *self.paths[i - 1].last().unwrap();
                let chain: Vec<Vertex> = std::iter::once(start)
                    .chain(c.vertices.iter().copied())
                    .chain(std::iter::once(c.target))
                    .collect();
                arcs.extend(chain.windows(2).map(|w| (w[0], w[1])));
            }
        }
        let d = Digraph::from_arcs(n, arcs).expect("disjoint labels give simple arcs");
        for p in &self.paths {
            if d.in_degree(p[0]) == 0 {
                return Err(IccError::NoInArc(p[0]));
            }
        }
        Ok((d, self.path_ends()))
    }
}

impl fmt::Display for IccDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.k())?;
        for (idx, p) in self.paths.iter().enumerate() {
            write!(f, "\npath {}:", idx + 1)?;
            for v in p {
                write!(f, " {v}")?;
            }
        }
        for (key, c) in &self.connectors {
            write!(f, "\nconnector {key}:")?;
            if !c.vertices.is_empty() {
                let interior: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
                write!(f, " via {}", interior.join(","))?;
            }
            write!(f, " into {}", c.target)?;
        }
        Ok(())
    }
}

fn pair_key(i: usize, j: usize) -> String {
    format!("{i}->{j}")
}

/// Assembles the interlinked-cycle digraph and selects the path ends as the
/// inner vertex set.
pub fn icc_to_gic(desc: &IccDescription) -> Result<(Digraph, VertexSet), IccError> {
    desc.assemble()
}

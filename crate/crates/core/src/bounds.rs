//! Lower bounds and optimality certificates: maximum acyclic induced
//! subgraph, GF(2) minrank and the class test for `N - K + 1` optimality.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bits::BitGraph;
use crate::cover::{
    clique_cover_with_limit, cycle_cover_with_limit, gicc_cover_exact, gicc_cover_heuristic,
    CoverPart, Effort, DEFAULT_BUDGET, EXACT_BASELINE_LIMIT, EXACT_COVER_LIMIT,
};
use crate::digraph::{bit_iter, Digraph, Path, Vertex, VertexSet};
use crate::gic::GicStructure;

/// Largest vertex count accepted by [`mais`].
pub const MAIS_LIMIT: usize = 30;
/// Largest arc count accepted by [`minrank_gf2`].
pub const MINRANK_ARC_LIMIT: usize = 24;
/// Largest vertex count for the exhaustive two-part optimality search.
pub const CASE2_LIMIT: usize = 12;

/// Lengths published for the six-vertex 4-GIC example under schemes this
/// crate does not implement, as `(name, numerator, denominator)`.
pub const PUBLISHED_OTHER_SCHEMES: [(&str, i64, i64); 4] = [
    ("composite-coding", 7, 2),
    ("local-chromatic", 4, 1),
    ("fractional-partial-clique", 4, 1),
    ("icc", 4, 1),
];

pub type Length = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("exact MAIS supports at most {limit} vertices, got {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("minrank enumeration supports at most {limit} arcs, got {arcs}")]
    TooManyArcs { arcs: usize, limit: usize },
}

/// Order of a maximum acyclic induced sub-digraph, computed as `N` minus a
/// minimum feedback vertex set.
pub fn mais(d: &Digraph) -> Result<usize, BoundsError> {
    mais_with_limit(d, MAIS_LIMIT)
}

pub fn mais_with_limit(d: &Digraph, limit: usize) -> Result<usize, BoundsError> {
    let n = d.vertex_count();
    let limit = limit.min(64);
    if n > limit {
        return Err(BoundsError::TooManyVertices { n, limit });
    }
    Ok(n - min_feedback_vertex_set(d).len())
}

/// A minimum feedback vertex set by iterative deepening: branch on the
/// vertices of a shortest cycle, prune with a disjoint-cycle lower bound.
pub fn min_feedback_vertex_set(d: &Digraph) -> VertexSet {
    let bg = BitGraph::new(d);
    let start = bg.core(bg.full());
    let mut budget = bg.greedy_disjoint_cycles(start).len();
    loop {
        if let Some(removed) = fvs_within(&bg, start, 0, budget) {
            return bit_iter(removed).map(|v| v + 1).collect();
        }
        budget += 1;
    }
}

/// Removes at most `budget` vertices of `mask` outside `kept` to break every
/// cycle; returns the removed mask.
fn fvs_within(bg: &BitGraph, mask: u64, kept: u64, budget: usize) -> Option<u64> {
    let mask = bg.core(mask);
    if mask == 0 {
        return Some(0);
    }
    if budget == 0 || bg.greedy_disjoint_cycles(mask).len() > budget {
        return None;
    }
    let cycle = bg.shortest_cycle(mask).expect("non-empty core has a cycle");
    let mut kept = kept;
    for v in cycle {
        if kept & (1 << v) != 0 {
            continue;
        }
        if let Some(rest) = fvs_within(bg, mask & !(1 << v), kept, budget - 1) {
            return Some(rest | (1 << v));
        }
        // later branches keep v
        kept |= 1 << v;
    }
    None
}

/// Minimum GF(2) rank over matrices with unit diagonal whose off-diagonal
/// support lies within the arcs (`M[i][j]` free iff `i -> j`).
pub fn minrank_gf2(d: &Digraph) -> Result<usize, BoundsError> {
    let arcs: Vec<(Vertex, Vertex)> = d.arcs().collect();
    if arcs.len() > MINRANK_ARC_LIMIT {
        return Err(BoundsError::TooManyArcs {
            arcs: arcs.len(),
            limit: MINRANK_ARC_LIMIT,
        });
    }
    let n = d.vertex_count();
    // vertices without arcs contribute a pivot in every filling
    let involved: VertexSet = arcs.iter().flat_map(|&(t, h)| [t, h]).collect();
    let isolated = n - involved.len();
    if involved.is_empty() {
        return Ok(isolated);
    }
    let sub = d.induced_subgraph(&involved);
    let local: Vec<(usize, usize)> = sub.digraph.arcs().map(|(t, h)| (t - 1, h - 1)).collect();
    let m = involved.len();
    let mut rows: Vec<u64> = (0..m).map(|i| 1u64 << i).collect();
    let mut best = gf2_rank(&rows);
    // Gray code walk toggles one free entry per step
    for step in 1u64..(1u64 << local.len()) {
        if best == 1 {
            break;
        }
        let (t, h) = local[step.trailing_zeros() as usize];
        rows[t] ^= 1 << h;
        best = best.min(gf2_rank(&rows));
    }
    Ok(best + isolated)
}

fn gf2_rank(rows: &[u64]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for r in 0..rows.len() {
        let pivot = rows[r];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let bit = pivot & pivot.wrapping_neg();
        for row in rows.iter_mut().skip(r + 1) {
            if *row & bit != 0 {
                *row ^= pivot;
            }
        }
    }
    rank
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Optimality {
    OptimalCase1,
    OptimalCase2,
    Unknown,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::OptimalCase1 => "optimal-case1",
            Optimality::OptimalCase2 => "optimal-case2",
            Optimality::Unknown => "unknown",
        })
    }
}

/// Disjoint non-inner cycles plus GIC parts splitting the inner set, with a
/// vertex choice whose removal leaves the digraph acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case2Certificate {
    pub cycles: Vec<Path>,
    pub groups: Vec<(VertexSet, VertexSet)>,
    /// `M` cycle vertices plus `K_g - 1` inner vertices per group: `K - 1`.
    pub removed: VertexSet,
}

/// Classifies a validated structure: acyclic non-inner part, or the
/// cycles-plus-split arrangement found by exhaustive search on small
/// instances, or unknown.
pub fn certify_theorem4(g: &GicStructure) -> Optimality {
    let d = g.digraph();
    if d.induced_subgraph(&g.non_inner()).digraph.is_acyclic() {
        return Optimality::OptimalCase1;
    }
    if d.vertex_count() <= CASE2_LIMIT && theorem4_case2_search(d, g.inner()).is_some() {
        return Optimality::OptimalCase2;
    }
    Optimality::Unknown
}

/// Exhaustive search for a [`Case2Certificate`] on `(d, inner)`; `None`
/// above [`CASE2_LIMIT`] vertices or when nothing is found.
pub fn theorem4_case2_search(d: &Digraph, inner: &VertexSet) -> Option<Case2Certificate> {
    let n = d.vertex_count();
    if n > CASE2_LIMIT || inner.is_empty() {
        return None;
    }
    let bg = BitGraph::new(d);
    let inner_bits = inner.to_bits();
    let outer = bg.full() & !inner_bits;
    let cycles = chordless_cycles(&bg, outer);
    let mut chosen = Vec::new();
    search_cycle_sets(d, &bg, inner, &cycles, 0, outer, &mut chosen)
}

/// Vertex sets inducing exactly one cycle inside `mask`.
fn chordless_cycles(bg: &BitGraph, mask: u64) -> Vec<u64> {
    let mut found = Vec::new();
    let mut sub = mask;
    while sub != 0 {
        if !bg.is_acyclic(sub) && bit_iter(sub).all(|v| bg.is_acyclic(sub & !(1 << v))) {
            found.push(sub);
        }
        sub = (sub - 1) & mask;
    }
    found.sort();
    found
}

fn search_cycle_sets(
    d: &Digraph,
    bg: &BitGraph,
    inner: &VertexSet,
    cycles: &[u64],
    from: usize,
    free: u64,
    chosen: &mut Vec<u64>,
) -> Option<Case2Certificate> {
    if !chosen.is_empty() {
        if let Some(cert) = split_inner(d, bg, inner, chosen, free) {
            return Some(cert);
        }
    }
    for idx in from..cycles.len() {
        let c = cycles[idx];
        // M cycles need M + 1 <= K groups
        if c & !free != 0 || chosen.len() + 2 > inner.len() {
            continue;
        }
        chosen.push(c);
        let found = search_cycle_sets(d, bg, inner, cycles, idx + 1, free & !c, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Tries every partition of the inner set into `M + 1` groups, each grown
/// into a case-1 GIC part from free non-inner vertices.
fn split_inner(
    d: &Digraph,
    bg: &BitGraph,
    inner: &VertexSet,
    cycles: &[u64],
    free_outer: u64,
) -> Option<Case2Certificate> {
    let groups_wanted = cycles.len() + 1;
    let members = inner.to_vec();
    if members.len() < groups_wanted {
        return None;
    }
    for labels in set_partitions(members.len(), groups_wanted) {
        let mut groups: Vec<VertexSet> = vec![VertexSet::new(); groups_wanted];
        for (k, &g) in labels.iter().enumerate() {
            groups[g].insert(members[k]);
        }
        let mut used = 0u64;
        let mut parts = Vec::new();
        for group in &groups {
            let span = part_span(d, group, free_outer & !used)?;
            if span.to_bits() & used != 0 {
                break;
            }
            used |= span.to_bits();
            parts.push((span, group.clone()));
        }
        if parts.len() != groups_wanted {
            continue;
        }
        if let Some(removed) = removal_certificate(bg, cycles, &parts) {
            return Some(Case2Certificate {
                cycles: cycles.iter().map(|&c| cycle_path(d, c)).collect(),
                groups: parts,
                removed,
            });
        }
    }
    None
}

/// The group plus every free vertex on a path between two group members
/// that avoids the rest of the group; `None` unless that span is a
/// case-1 GIC part.
fn part_span(d: &Digraph, group: &VertexSet, free: u64) -> Option<VertexSet> {
    if group.len() == 1 {
        return Some(group.clone());
    }
    let allowed: VertexSet = VertexSet::from_bits(free).union(group);
    let mut span = group.clone();
    for a in group.iter() {
        for b in group.iter().filter(|&b| b != a) {
            for p in d.interior_restricted_paths(a, b, &allowed.difference(group), 64) {
                span = span.union(&p.vertices().iter().copied().collect());
            }
        }
    }
    let part = CoverPart::new(d, &span, group)?;
    let g = part.structure();
    let outer = d.induced_subgraph(&span).set_to_local(&span.difference(group));
    g.digraph().induced_subgraph(&outer).digraph.is_acyclic().then_some(span)
}

/// Picks one vertex per cycle and all but one inner vertex per group so
/// that the rest of the digraph is acyclic.
fn removal_certificate(
    bg: &BitGraph,
    cycles: &[u64],
    parts: &[(VertexSet, VertexSet)],
) -> Option<VertexSet> {
    let mut choices: Vec<Vec<u64>> = cycles.iter().map(|&c| bit_iter(c).map(|v| 1 << v).collect()).collect();
    for (_, group) in parts {
        let bits = group.to_bits();
        choices.push(bit_iter(bits).map(|keep| bits & !(1 << keep)).collect());
    }
    let mut pick = vec![0usize; choices.len()];
    loop {
        let removed: u64 = pick.iter().zip(&choices).map(|(&p, c)| c[p]).fold(0, |a, b| a | b);
        if bg.is_acyclic(bg.full() & !removed) {
            return Some(VertexSet::from_bits(removed));
        }
        let mut k = 0;
        loop {
            if k == pick.len() {
                return None;
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

/// Restricted growth strings with exactly `blocks` blocks.
fn set_partitions(items: usize, blocks: usize) -> Vec<Vec<usize>> {
    fn go(items: usize, blocks: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == items {
            if max == blocks {
                out.push(cur.clone());
            }
            return;
        }
        if blocks - max > items - cur.len() {
            return;
        }
        for b in 0..=max.min(blocks - 1) {
            cur.push(b);
            go(items, blocks, cur, max.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, blocks, &mut Vec::new(), 0, &mut out);
    out
}

fn cycle_path(d: &Digraph, set: u64) -> Path {
    let vs = VertexSet::from_bits(set);
    let sub = d.induced_subgraph(&vs);
    let mut seq: Vec<Vertex> = sub
        .digraph
        .find_cycle()
        .expect("cyclic set")
        .vertices()
        .iter()
        .map(|&v| sub.to_original(v))
        .collect();
    seq.pop();
    let start = seq.iter().enumerate().min_by_key(|(_, v)| **v).map_or(0, |(k, _)| k);
    seq.rotate_left(start);
    seq.push(seq[0]);
    Path(seq)
}

/// True iff `mais(d)` is at most every reported length.
pub fn sandwich_check(d: &Digraph, lengths: &BTreeMap<String, Length>) -> Result<bool, BoundsError> {
    let lower = Length::from_integer(mais(d)? as i64);
    Ok(lengths.values().all(|&l| lower <= l))
}

fn serialize_lengths<S: Serializer>(
    lengths: &BTreeMap<String, Length>,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_map(lengths.iter().map(|(k, v)| (k, v.to_string())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub mais: usize,
    pub minrank: Option<usize>,
    #[serde(serialize_with = "serialize_lengths")]
    pub scheme_lengths: BTreeMap<String, Length>,
    pub sandwich_ok: bool,
    pub optimality: Optimality,
}

#[derive(Debug, Clone)]
pub struct BoundsOptions {
    pub minrank: bool,
    pub effort: Effort,
    pub seed: u64,
    /// A validated structure on the whole digraph, if one is known.
    pub structure: Option<GicStructure>,
    /// Exhaustive GIC cover up to this many vertices.
    pub cover_limit: usize,
    /// Exact cycle packing and clique partition up to this many vertices.
    pub baseline_limit: usize,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            minrank: false,
            effort: Effort::Budget(DEFAULT_BUDGET),
            seed: 0,
            structure: None,
            cover_limit: EXACT_COVER_LIMIT,
            baseline_limit: EXACT_BASELINE_LIMIT,
        }
    }
}

/// Scheme names used as keys of [`BoundsReport::scheme_lengths`].
pub const SCHEME_GICC: &str = "gicc";
pub const SCHEME_CYCLE: &str = "cycle-cover";
pub const SCHEME_CLIQUE: &str = "clique-cover";

/// Computes the cover lengths and lower bounds for `d`. Exhaustive cover
/// effort falls back to the budgeted search above `cover_limit`.
pub fn bounds_report(d: &Digraph, opts: &BoundsOptions) -> Result<BoundsReport, BoundsError> {
    let lower = mais(d)?;
    let minrank = if opts.minrank { Some(minrank_gf2(d)?) } else { None };
    let plan = match opts.effort {
        Effort::Exhaustive if d.vertex_count() <= opts.cover_limit => {
            gicc_cover_exact(d, opts.cover_limit).expect("size checked")
        }
        Effort::Exhaustive => gicc_cover_heuristic(d, DEFAULT_BUDGET, opts.seed),
        Effort::Budget(b) => gicc_cover_heuristic(d, b, opts.seed),
    };
    let mut gicc = plan.length();
    if let Some(g) = &opts.structure {
        gicc = gicc.min(crate::codec::code_length(g));
    }
    let scheme_lengths: BTreeMap<String, Length> = [
        (SCHEME_GICC, gicc),
        (
            SCHEME_CYCLE,
            d.vertex_count() - cycle_cover_with_limit(d, opts.baseline_limit).cycles.len(),
        ),
        (SCHEME_CLIQUE, clique_cover_with_limit(d, opts.baseline_limit).cliques.len()),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), Length::from_integer(v as i64)))
    .collect();

    let best = scheme_lengths.values().min().copied().expect("three schemes");
    let lower_r = Length::from_integer(lower as i64);
    let sandwich_ok = scheme_lengths.values().all(|&l| lower_r <= l)
        && minrank.is_none_or(|r| lower <= r && Length::from_integer(r as i64) <= best);

    let whole = opts.structure.clone().or_else(|| {
        (plan.psi() == 1 && plan.uncoded().is_empty()).then(|| plan.parts()[0].structure().clone())
    });
    let optimality = whole.as_ref().map_or(Optimality::Unknown, certify_theorem4);
    Ok(BoundsReport {
        mais: lower,
        minrank,
        scheme_lengths,
        sandwich_ok,
        optimality,
    })
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<14} {:>6}", "scheme", "length")?;
        for (name, len) in &self.scheme_lengths {
            writeln!(f, "{name:<14} {len:>6}")?;
        }
        writeln!(f, "{:<14} {:>6}", "mais", self.mais)?;
        if let Some(r) = self.minrank {
            writeln!(f, "{:<14} {:>6}", "minrank", r)?;
        }
        writeln!(f, "sandwich: {}", if self.sandwich_ok { "ok" } else { "violated" })?;
        write!(f, "optimality: {}", self.optimality)
    }
}

/// A validated structure whose code is longer than the MAIS lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFinding {
    pub digraph: String,
    pub inner: VertexSet,
    pub mais: usize,
    pub code_length: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub digraphs: usize,
    pub structures: usize,
    pub findings: Vec<SweepFinding>,
}

/// Tries every inner set of at least two vertices on each digraph and
/// reports validated structures with `mais < N - K + 1`. Digraphs above
/// `max_n` vertices are skipped.
pub fn conjecture_sweep<I>(digraphs: I, max_n: usize) -> SweepReport
where
    I: IntoIterator<Item = Digraph>,
{
    let mut report = SweepReport::default();
    for d in digraphs {
        let n = d.vertex_count();
        if n > max_n.min(MAIS_LIMIT) {
            continue;
        }
        report.digraphs += 1;
        let mut lower = None;
        for bits in 0u64..(1 << n) {
            if bits.count_ones() < 2 {
                continue;
            }
            let Ok(g) = crate::gic::validate_gic(&d, &VertexSet::from_bits(bits)) else {
                continue;
            };
            report.structures += 1;
            let length = crate::codec::code_length(&g);
            let m = *lower.get_or_insert_with(|| mais(&d).expect("size checked above"));
            if m < length {
                report.findings.push(SweepFinding {
                    digraph: crate::digraph::serialize_digraph(&d),
                    inner: g.inner().clone(),
                    mais: m,
                    code_length: length,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_clique, gen_cycle, gen_family_vb, gen_fig4a_equivalent};
    use crate::gic::validate_gic;

    fn naive_mais(d: &Digraph) -> usize {
        let bg = BitGraph::new(d);
        (0..=bg.full())
            .filter(|&m| bg.is_acyclic(m))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn mais_examples() {
        assert_eq!(mais(&Digraph::empty(1)).unwrap(), 1);
        assert_eq!(mais(&Digraph::empty(4)).unwrap(), 4);
        let (d, _) = gen_fig4a_equivalent();
        assert_eq!(mais(&d).unwrap(), 3);
        assert_eq!(naive_mais(&d), 3);
        for k in 2..=5 {
            let (d, _) = gen_family_vb(k).unwrap();
            assert_eq!(mais(&d).unwrap(), 2 * k - 1);
        }
        assert_eq!(mais(&gen_clique(7).unwrap()).unwrap(), 1);
        assert_eq!(mais(&gen_cycle(9).unwrap()).unwrap(), 8);
    }

    #[test]
    fn mais_gate() {
        assert_eq!(
            mais(&Digraph::empty(31)),
            Err(BoundsError::TooManyVertices { n: 31, limit: 30 })
        );
    }

    #[test]
    fn minrank_examples() {
        assert_eq!(minrank_gf2(&gen_clique(2).unwrap()).unwrap(), 1);
        assert_eq!(minrank_gf2(&gen_cycle(3).unwrap()).unwrap(), 2);
        assert_eq!(minrank_gf2(&Digraph::empty(3)).unwrap(), 3);
        let (d, _) = gen_fig4a_equivalent();
        assert_eq!(minrank_gf2(&d).unwrap(), 3);
        assert!(matches!(
            minrank_gf2(&gen_clique(6).unwrap()),
            Err(BoundsError::TooManyArcs { arcs: 30, .. })
        ));
    }

    #[test]
    fn gf2_rank_basics() {
        assert_eq!(gf2_rank(&[0b11, 0b11]), 1);
        assert_eq!(gf2_rank(&[0b011, 0b110, 0b101]), 2);
        assert_eq!(gf2_rank(&[0b1, 0b10, 0b100]), 3);
    }

    #[test]
    fn case1_on_examples() {
        let (d, inner) = gen_fig4a_equivalent();
        let g = validate_gic(&d, &inner).unwrap();
        assert_eq!(certify_theorem4(&g), Optimality::OptimalCase1);
        for k in 2..=6 {
            let (d, inner) = gen_family_vb(k).unwrap();
            let g = validate_gic(&d, &inner).unwrap();
            assert_eq!(certify_theorem4(&g), Optimality::OptimalCase1);
        }
    }

    #[test]
    fn case2_search_finds_split() {
        // non-inner digon {3,4} between singleton inner groups {1} and {2}
        let d = Digraph::from_arcs(4, [(1, 3), (3, 4), (4, 3), (4, 2), (2, 1)]).unwrap();
        let cert = theorem4_case2_search(&d, &VertexSet::from([1, 2])).unwrap();
        assert_eq!(cert.cycles, vec![Path(vec![3, 4, 3])]);
        assert_eq!(cert.groups.len(), 2);
        assert_eq!(cert.removed.len(), 1);
        assert_eq!(mais(&d).unwrap(), d.vertex_count() - cert.removed.len());
        // no non-inner cycle, nothing to find
        let (d, inner) = gen_fig4a_equivalent();
        assert!(theorem4_case2_search(&d, &inner).is_none());
    }

    #[test]
    fn sweep_over_small_digraphs() {
        let all: Vec<Digraph> = crate::generators::gen_all_digraphs(3).collect();
        assert_eq!(all.len(), 64);
        let report = conjecture_sweep(all, 3);
        assert_eq!(report.digraphs, 64);
        assert!(report.structures > 0);
        assert!(report.findings.is_empty());
    }

    #[test]
    fn partitions_count() {
        // Stirling numbers of the second kind
        assert_eq!(set_partitions(4, 2).len(), 7);
        assert_eq!(set_partitions(5, 3).len(), 25);
        assert_eq!(set_partitions(3, 4).len(), 0);
    }

    #[test]
    fn report_on_fig4a() {
        let (d, _) = gen_fig4a_equivalent();
        let opts = BoundsOptions {
            minrank: true,
            effort: Effort::Exhaustive,
            ..BoundsOptions::default()
        };
        let r = bounds_report(&d, &opts).unwrap();
        assert_eq!(r.mais, 3);
        assert_eq!(r.minrank, Some(3));
        assert_eq!(r.scheme_lengths[SCHEME_GICC], Length::from_integer(3));
        assert_eq!(r.scheme_lengths[SCHEME_CYCLE], Length::from_integer(4));
        assert_eq!(r.scheme_lengths[SCHEME_CLIQUE], Length::from_integer(5));
        assert!(r.sandwich_ok);
        assert_eq!(r.optimality, Optimality::OptimalCase1);
        let lengths = r.scheme_lengths.clone();
        assert!(sandwich_check(&d, &lengths).unwrap());
    }

    #[test]
    fn sandwich_on_arcless() {
        let d = Digraph::empty(5);
        let lengths = BTreeMap::from([("uncoded".to_string(), Length::from_integer(5))]);
        assert!(sandwich_check(&d, &lengths).unwrap());
        let lengths = BTreeMap::from([("bogus".to_string(), Length::new(9, 2))]);
        assert!(!sandwich_check(&d, &lengths).unwrap());
    }
}

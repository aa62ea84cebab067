//! Brute-force oracles and instance samplers shared by the integration tests.

#![allow(dead_code)]

use gicc_core::cover::{gicc_cover, Effort};
use gicc_core::generators::{gen_family_vb, gen_fig4a_equivalent, gen_icc, gen_random};
use gicc_core::{validate_gic, Digraph, GicStructure, Vertex, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Digraphs with `1..=max_n` vertices and arbitrary arc sets.
pub fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1)).prop_map(move |bits| {
            let pairs = (1..=n).flat_map(|t| (1..=n).filter(move |&h| h != t).map(move |h| (t, h)));
            let arcs = pairs.zip(bits).filter(|(_, b)| *b).map(|(a, _)| a);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

/// Transitive closure by Floyd-Warshall: `reach[u][v]` iff a non-empty walk
/// leads from `u` to `v` using only vertices in `within`.
pub fn closure(d: &Digraph, within: &VertexSet) -> Vec<Vec<bool>> {
    let n = d.vertex_count();
    let mut reach = vec![vec![false; n + 1]; n + 1];
    for (t, h) in d.arcs() {
        if within.contains(t) && within.contains(h) {
            reach[t][h] = true;
        }
    }
    for k in within.iter() {
        for u in within.iter() {
            if reach[u][k] {
                for v in within.iter() {
                    if reach[k][v] {
                        reach[u][v] = true;
                    }
                }
            }
        }
    }
    reach
}

pub fn acyclic_oracle(d: &Digraph, within: &VertexSet) -> bool {
    let reach = closure(d, within);
    within.iter().all(|v| !reach[v][v])
}

/// Largest acyclic induced vertex set by trying subsets in descending size.
pub fn mais_oracle(d: &Digraph) -> usize {
    let n = d.vertex_count();
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks
        .into_iter()
        .find(|&m| acyclic_oracle(d, &VertexSet::from_bits(m)))
        .map(|m| m.count_ones() as usize)
        .unwrap()
}

/// Simple paths `from -> to` with interior in `allowed`, by trying every
/// ordered selection of interior vertices.
pub fn paths_oracle(d: &Digraph, from: Vertex, to: Vertex, allowed: &VertexSet) -> u64 {
    let pool: Vec<Vertex> = allowed.iter().filter(|&v| v != from && v != to).collect();
    let mut count = 0;
    let mut used = vec![false; pool.len()];
    let mut seq = vec![from];
    fn go(
        d: &Digraph,
        to: Vertex,
        pool: &[Vertex],
        used: &mut [bool],
        seq: &mut Vec<Vertex>,
        count: &mut u64,
    ) {
        let mut full = seq.clone();
        full.push(to);
        if full.windows(2).all(|w| d.has_arc(w[0], w[1])) {
            *count += 1;
        }
        for k in 0..pool.len() {
            if !used[k] {
                used[k] = true;
                seq.push(pool[k]);
                go(d, to, pool, used, seq, count);
                seq.pop();
                used[k] = false;
            }
        }
    }
    go(d, to, &pool, &mut used, &mut seq, &mut count);
    count
}

/// Reachability from `s` inside `within` (excluding the trivial empty walk).
pub fn reaches(d: &Digraph, s: Vertex, t: Vertex, within: &VertexSet) -> bool {
    closure(d, within)[s][t]
}

/// Seeded interlinked-cycle instances, each with its inner set.
pub fn icc_instances(count: usize, seed: u64) -> Vec<(Digraph, VertexSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|idx| {
            let k = 2 + idx % 3;
            let paths: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
            let connectors: Vec<usize> = (0..k * (k - 1)).map(|_| rng.gen_range(0..=2)).collect();
            let desc = gen_icc(k, &paths, &connectors, rng.gen()).unwrap();
            desc.assemble().unwrap()
        })
        .collect()
}

/// A mixed pool of validated structures: named instances, interlinked
/// cycles, and GIC parts found by exact covers of random digraphs.
pub fn validated_structures(count: usize, seed: u64) -> Vec<GicStructure> {
    let mut out = Vec::new();
    let (d, inner) = gen_fig4a_equivalent();
    out.push(validate_gic(&d, &inner).unwrap());
    for k in 2..=5 {
        let (d, inner) = gen_family_vb(k).unwrap();
        out.push(validate_gic(&d, &inner).unwrap());
    }
    for (d, inner) in icc_instances(count / 2, seed) {
        out.push(validate_gic(&d, &inner).unwrap());
    }
    let mut s = seed;
    while out.len() < count {
        let d = gen_random(8, 0.35, s).unwrap();
        s += 1;
        let plan = gicc_cover(&d, Effort::Exhaustive, 0).unwrap();
        out.extend(plan.parts().iter().map(|p| p.structure().clone()));
    }
    out.truncate(count);
    out
}

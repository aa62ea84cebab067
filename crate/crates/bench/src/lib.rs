//! Fixed benchmark instances shared by the criterion benches.

use gicc_core::generators::{gen_family_vb, gen_fig4a_equivalent, gen_random};
use gicc_core::{Digraph, VertexSet};

/// Named `(digraph, inner set)` pairs, smallest first.
pub fn structures() -> Vec<(String, Digraph, VertexSet)> {
    let mut out = Vec::new();
    let (d, inner) = gen_fig4a_equivalent();
    out.push(("fig4a".to_string(), d, inner));
    for k in [4, 6, 8] {
        let (d, inner) = gen_family_vb(k).expect("k >= 2");
        out.push((format!("family-k{k}"), d, inner));
    }
    out
}

/// Seeded random digraphs of increasing order.
pub fn random_digraphs() -> Vec<(String, Digraph)> {
    [(8, 0.3, 42), (10, 0.3, 7), (14, 0.25, 3)]
        .into_iter()
        .map(|(n, p, seed)| {
            let d = gen_random(n, p, seed).expect("valid probability");
            (format!("random-n{n}"), d)
        })
        .collect()
}

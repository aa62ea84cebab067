//! Instance generators: the three-part interlinked family, a six-vertex
//! 4-GIC reproducing a published code, cliques, cycles, interlinked-cycle
//! descriptions and seeded random digraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cover::IccDescription;
use crate::digraph::{Digraph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("parameter {name} = {value} is below the minimum {min}")]
    TooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("expected {expected} path lengths, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("arc probability {0} is outside [0, 1]")]
    Probability(f64),
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), GenError> {
    if value < min {
        Err(GenError::TooSmall { name, value, min })
    } else {
        Ok(())
    }
}

/// The family on `N = 3K - 2` vertices with inner set `{1..K}`.
///
/// Inner vertex `i` in `2..K-1` knows `x_{K+i}` and `x_{3K-i}`; vertex `K+i`
/// knows the messages of `{i+1..K}` and vertex `3K-i` those of `{1..i-1}`.
/// Vertex 1 knows `x_{K+1}`, which knows all of `V_I \ {1}`; vertex `K`
/// knows `x_{2K}`, which knows all of `V_I \ {K}`.
pub fn gen_family_vb(k: usize) -> Result<(Digraph, VertexSet), GenError> {
    at_least("K", k, 2)?;
    let n = 3 * k - 2;
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 2..k {
        arcs.push((i, k + i));
        arcs.push((i, 3 * k - i));
        arcs.extend((i + 1..=k).map(|q| (k + i, q)));
        arcs.extend((1..i).map(|q| (3 * k - i, q)));
    }
    arcs.push((1, k + 1));
    arcs.extend((2..=k).map(|q| (k + 1, q)));
    arcs.push((k, 2 * k));
    arcs.extend((1..k).map(|q| (2 * k, q)));
    let d = Digraph::from_arcs(n, arcs).expect("family arcs are simple");
    Ok((d, VertexSet::range(1, k)))
}

/// Six-vertex 4-GIC on inner set `{1,2,3,4}` whose code is
/// `x1^x2^x3^x4, x5^x2^x3, x6^x3^x4`.
pub fn gen_fig4a_equivalent() -> (Digraph, VertexSet) {
    let arcs = [
        (1, 4),
        (1, 5),
        (2, 1),
        (2, 6),
        (3, 1),
        (3, 2),
        (3, 4),
        (4, 1),
        (4, 5),
        (5, 2),
        (5, 3),
        (6, 3),
        (6, 4),
    ];
    (
        Digraph::from_arcs(6, arcs).expect("static arcs"),
        VertexSet::from([1, 2, 3, 4]),
    )
}

/// Bidirectional complete digraph on `n` vertices.
pub fn gen_clique(n: usize) -> Result<Digraph, GenError> {
    at_least("n", n, 2)?;
    let arcs = (1..=n).flat_map(|t| (1..=n).filter(move |&h| h != t).map(move |h| (t, h)));
    Ok(Digraph::from_arcs(n, arcs).expect("clique arcs are simple"))
}

/// Directed cycle `1 -> 2 -> ... -> n -> 1`.
pub fn gen_cycle(n: usize) -> Result<Digraph, GenError> {
    at_least("n", n, 2)?;
    let arcs = (1..=n).map(|v| (v, v % n + 1));
    Ok(Digraph::from_arcs(n, arcs).expect("cycle arcs are simple"))
}

/// Random interlinked-cycle description with `k` disjoint paths of the given
/// lengths.
///
/// For every ordered pair `(i, j)` a connector path of
/// `connector_lengths[(i, j)]` fresh vertices (row-major over ordered pairs,
/// `i != j`) runs from the end of `P_i` to a vertex of `P_j`. The landing
/// vertex is drawn at random, except that each path's first vertex is
/// forced to receive at least one connector.
pub fn gen_icc(
    k: usize,
    path_lengths: &[usize],
    connector_lengths: &[usize],
    seed: u64,
) -> Result<IccDescription, GenError> {
    at_least("k", k, 2)?;
    if path_lengths.len() != k {
        return Err(GenError::LengthMismatch {
            expected: k,
            got: path_lengths.len(),
        });
    }
    let pairs = k * (k - 1);
    if connector_lengths.len() != pairs {
        return Err(GenError::LengthMismatch {
            expected: pairs,
            got: connector_lengths.len(),
        });
    }
    for &len in path_lengths {
        at_least("n_i", len, 1)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = 1;
    let mut fresh = |count: usize| {
        let block: Vec<Vertex> = (next..next + count).collect();
        next += count;
        block
    };
    let paths: Vec<Vec<Vertex>> = path_lengths.iter().map(|&len| fresh(len)).collect();

    let mut connectors = Vec::with_capacity(pairs);
    let mut lengths = connector_lengths.iter();
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            let len = *lengths.next().unwrap();
            let landing = rng.gen_range(0..path_lengths[j - 1]);
            connectors.push(((i, j), fresh(len), landing));
        }
    }
    // every path's first vertex must receive at least one connector
    for j in 1..=k {
        let mut into_j: Vec<usize> = (0..connectors.len())
            .filter(|&c| connectors[c].0 .1 == j)
            .collect();
        if into_j.iter().all(|&c| connectors[c].2 != 0) {
            into_j.shuffle(&mut rng);
            connectors[into_j[0]].2 = 0;
        }
    }
    let connectors = connectors
        .into_iter()
        .map(|((i, j), verts, landing)| ((i, j), verts, paths[j - 1][landing]))
        .collect();
    Ok(IccDescription::new(paths, connectors))
}

/// Each ordered non-self pair becomes an arc independently with probability
/// `p`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Digraph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::new();
    for t in 1..=n {
        for h in 1..=n {
            if t != h && rng.gen_bool(p) {
                arcs.push((t, h));
            }
        }
    }
    Ok(Digraph::from_arcs(n, arcs).expect("random arcs are simple"))
}

/// Every labelled digraph on `n` vertices, in order of the arc bitmask over
/// ordered pairs `(t, h)`, `t != h`, row-major.
pub fn gen_all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|t| (1..=n).filter(move |&h| h != t).map(move |h| (t, h)))
        .collect();
    assert!(pairs.len() < 64, "too many vertices to enumerate");
    (0u64..(1 << pairs.len())).map(move |mask| {
        let arcs = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &a)| a);
        Digraph::from_arcs(n, arcs).expect("distinct pairs")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::serialize_digraph;

    #[test]
    fn family_k2() {
        let (d, inner) = gen_family_vb(2).unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(inner, VertexSet::from([1, 2]));
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(1, 3), (2, 4), (3, 2), (4, 1)]);
    }

    #[test]
    fn family_k4_arcs() {
        let (d, _) = gen_family_vb(4).unwrap();
        let mut expected = vec![
            (1, 5),
            (5, 2),
            (5, 3),
            (5, 4),
            (2, 6),
            (2, 10),
            (6, 3),
            (6, 4),
            (3, 7),
            (3, 9),
            (7, 4),
            (9, 1),
            (9, 2),
            (4, 8),
            (8, 1),
            (8, 2),
            (8, 3),
            (10, 1),
        ];
        expected.sort();
        assert_eq!(d.arcs().collect::<Vec<_>>(), expected);
        assert_eq!(d.arc_count(), 18);
        assert_eq!(d.out_neighbors(2).unwrap(), VertexSet::from([6, 10]));
        assert_eq!(d.out_neighbors(8).unwrap(), VertexSet::from([1, 2, 3]));
    }

    #[test]
    fn family_rejects_small_k() {
        assert!(gen_family_vb(1).is_err());
    }

    #[test]
    fn cliques_and_cycles() {
        assert_eq!(
            gen_clique(2).unwrap(),
            Digraph::from_arcs(2, [(1, 2), (2, 1)]).unwrap()
        );
        assert_eq!(gen_clique(5).unwrap().arc_count(), 20);
        assert_eq!(serialize_digraph(&gen_cycle(3).unwrap()), "n=3\n1 -> 2\n2 -> 3\n3 -> 1");
        assert!(gen_cycle(1).is_err());
        assert!(gen_clique(1).is_err());
    }

    #[test]
    fn random_extremes() {
        assert_eq!(gen_random(6, 0.0, 3).unwrap().arc_count(), 0);
        assert_eq!(gen_random(6, 1.0, 3).unwrap(), gen_clique(6).unwrap());
        assert!(gen_random(6, 1.5, 3).is_err());
        assert_eq!(gen_random(8, 0.3, 42).unwrap(), gen_random(8, 0.3, 42).unwrap());
    }

    #[test]
    fn all_digraphs_count() {
        assert_eq!(gen_all_digraphs(1).count(), 1);
        assert_eq!(gen_all_digraphs(3).count(), 64);
        assert_eq!(gen_all_digraphs(3).last().unwrap(), gen_clique(3).unwrap());
    }

    #[test]
    fn icc_digon() {
        let desc = gen_icc(2, &[1, 1], &[0, 0], 0).unwrap();
        let (d, inner) = desc.assemble().unwrap();
        assert_eq!(d, gen_clique(2).unwrap());
        assert_eq!(inner, VertexSet::from([1, 2]));
    }

    #[test]
    fn icc_size_checks() {
        assert!(gen_icc(1, &[1], &[], 0).is_err());
        assert!(gen_icc(2, &[1], &[0, 0], 0).is_err());
        assert!(gen_icc(2, &[1, 1], &[0], 0).is_err());
        assert!(gen_icc(2, &[0, 1], &[0, 0], 0).is_err());
    }
}

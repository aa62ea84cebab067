//! Bitmask adjacency for the exact small-instance searches (N <= 64).
//! Bit `k` stands for vertex `k + 1`.

use crate::digraph::{bit_iter, Digraph};

#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    pub n: usize,
    pub out: Vec<u64>,
    pub inc: Vec<u64>,
}

impl BitGraph {
    pub fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        assert!(n <= 64, "bitmask searches support at most 64 vertices");
        let mut out = vec![0u64; n];
        let mut inc = vec![0u64; n];
        for (t, h) in d.arcs() {
            out[t - 1] |= 1 << (h - 1);
            inc[h - 1] |= 1 << (t - 1);
        }
        BitGraph { n, out, inc }
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Repeatedly drops vertices with no in- or out-arc inside `mask`. The
    /// result is empty iff `mask` induces an acyclic sub-digraph.
    pub fn core(&self, mut mask: u64) -> u64 {
        loop {
            let mut next = mask;
            for v in bit_iter(mask) {
                if self.out[v] & next == 0 || self.inc[v] & next == 0 {
                    next &= !(1 << v);
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    pub fn is_acyclic(&self, mask: u64) -> bool {
        self.core(mask) == 0
    }

    pub fn is_strongly_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let s = mask.trailing_zeros() as usize;
        self.reach(s, mask, &self.out) == mask && self.reach(s, mask, &self.inc) == mask
    }

    fn reach(&self, s: usize, mask: u64, adj: &[u64]) -> u64 {
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bit_iter(frontier) {
                next |= adj[v];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// A shortest cycle inside `mask` as 0-based vertex indices, or `None`.
    pub fn shortest_cycle(&self, mask: u64) -> Option<Vec<usize>> {
        let mask = self.core(mask);
        let mut best: Option<Vec<usize>> = None;
        for s in bit_iter(mask) {
            let limit = best.as_ref().map_or(usize::MAX, Vec::len);
            if let Some(c) = self.shortest_cycle_through(s, mask, limit) {
                let len = c.len();
                best = Some(c);
                if len == 2 {
                    break;
                }
            }
        }
        best
    }

    /// Shortest cycle through `s` of fewer than `limit` vertices.
    fn shortest_cycle_through(&self, s: usize, mask: u64, limit: usize) -> Option<Vec<usize>> {
        let mut layers: Vec<u64> = vec![1 << s];
        let mut seen = 1u64 << s;
        loop {
            if layers.len() >= limit {
                return None;
            }
            let frontier = *layers.last().unwrap();
            let mut next = 0;
            for v in bit_iter(frontier) {
                next |= self.out[v];
            }
            if next & (1 << s) != 0 {
                // walk back from s through the layers
                let mut cycle = vec![s];
                let mut cur = s;
                for layer in layers[1..].iter().rev() {
                    let pred = (self.inc[cur] & layer).trailing_zeros() as usize;
                    cycle.push(pred);
                    cur = pred;
                }
                cycle.reverse();
                cycle.pop();
                cycle.insert(0, s);
                return Some(cycle);
            }
            next &= mask & !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            layers.push(next);
        }
    }

    /// Greedy count of vertex-disjoint cycles (shortest first); a lower bound
    /// on any feedback vertex set.
    pub fn greedy_disjoint_cycles(&self, mut mask: u64) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        while let Some(c) = self.shortest_cycle(mask) {
            for &v in &c {
                mask &= !(1 << v);
            }
            found.push(c);
        }
        found
    }
}

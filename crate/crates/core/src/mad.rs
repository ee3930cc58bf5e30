//! Exact maximum average degree via densest-subgraph max-flow tests.
//!
//! mad(G) = max over nonempty H of 2|E(H)|/|V(H)|. A single max-flow decides
//! whether some H has |E(H)|/|V(H)| > p/q; binary search over the achievable
//! densities (denominators ≤ |V|) pins the maximum exactly.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rational::{ratio, Rational};
use std::collections::{BTreeMap, BTreeSet};

/// Exact mad value plus a vertex set whose induced subgraph attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MadResult {
    pub value: Rational,
    pub witness: BTreeSet<VertexId>,
}

/// Computes mad(g) exactly with a witness. Errors on the empty graph.
pub fn mad_exact(g: &Graph) -> Result<MadResult> {
    if g.n_vertices() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n_edges() == 0 {
        let v = g.vertices().next().unwrap();
        return Ok(MadResult {
            value: ratio(0, 1),
            witness: [v].into_iter().collect(),
        });
    }
    let n = g.n_vertices() as i128;
    // Density |E(H)|/|V(H)|: start from the whole graph (achievable) and
    // narrow [lo, hi] until no second achievable density can fit.
    let mut lo = ratio(g.n_edges() as i128, n);
    let mut hi = ratio(n, 1);
    let mut witness: BTreeSet<VertexId> = g.vertices().collect();
    let gap = ratio(1, n * n);
    while hi - lo > gap {
        let mid = (lo + hi) / 2;
        match denser_than(g, *mid.numer(), *mid.denom()) {
            Some(h) => {
                let sub = g.induced(&h);
                lo = ratio(sub.n_edges() as i128, sub.n_vertices() as i128);
                witness = h;
            }
            None => hi = mid,
        }
    }
    Ok(MadResult {
        value: lo * 2,
        witness,
    })
}

/// True iff mad(g) ≤ bound; a single flow test, no search.
pub fn mad_at_most(g: &Graph, bound: Rational) -> bool {
    if g.n_edges() == 0 {
        return bound >= ratio(0, 1);
    }
    // mad > bound iff some H has |E(H)|/|V(H)| > bound/2.
    denser_than(g, *bound.numer(), 2 * *bound.denom()).is_none()
}

/// True iff mad(g) < bound (strict).
pub fn mad_less_than(g: &Graph, bound: Rational) -> bool {
    if g.n_edges() == 0 {
        return bound > ratio(0, 1);
    }
    // Some H has density ≥ p/q iff some H has density > (pn−1)/(qn),
    // because achievable densities have denominator at most n.
    let n = g.n_vertices() as i128;
    let (p, q) = (*bound.numer(), 2 * *bound.denom());
    denser_than(g, p * n - 1, q * n).is_none()
}

/// Finds a nonempty vertex set H with |E(H)|/|V(H)| > p/q, if one exists.
///
/// Network: source → each edge-node (capacity q), edge-node → both endpoint
/// vertices (∞), vertex → sink (capacity p). Max flow < q·|E| iff such an H
/// exists; the source side of the min cut yields it.
pub fn denser_than(g: &Graph, p: i128, q: i128) -> Option<BTreeSet<VertexId>> {
    assert!(q > 0, "threshold denominator must be positive");
    let vertices: Vec<VertexId> = g.vertices().collect();
    let index: BTreeMap<VertexId, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let (n, m) = (vertices.len(), edges.len());
    if m == 0 || p < 0 {
        // Density > negative threshold: any single edgeless vertex works only
        // if p < 0; with no edges the density of any H is 0.
        if p < 0 && n > 0 {
            return Some([vertices[0]].into_iter().collect());
        }
        return None;
    }

    let source = 0;
    let sink = 1 + m + n;
    let mut net = Flow::new(2 + m + n);
    for (i, &(u, v)) in edges.iter().enumerate() {
        net.add(source, 1 + i, q);
        net.add(1 + i, 1 + m + index[&u], Flow::INF);
        net.add(1 + i, 1 + m + index[&v], Flow::INF);
    }
    for i in 0..n {
        net.add(1 + m + i, sink, p);
    }
    let total = net.max_flow(source, sink);
    if total >= q * m as i128 {
        return None;
    }
    let reach = net.residual_reachable(source);
    let h: BTreeSet<VertexId> = vertices
        .iter()
        .enumerate()
        .filter(|(i, _)| reach[1 + m + i])
        .map(|(_, &v)| v)
        .collect();
    debug_assert!(!h.is_empty());
    Some(h)
}

// Dinic's algorithm with i128 capacities.
struct Flow {
    to: Vec<usize>,
    cap: Vec<i128>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    const INF: i128 = i128::MAX / 4;

    fn new(nodes: usize) -> Flow {
        Flow {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, a: usize, b: usize, c: i128) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.adj[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut total = 0;
        while let Some(level) = self.levels(s, t) {
            let mut iter = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.augment(s, t, Self::INF, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.adj.len()];
        level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &e in &self.adj[a] {
                if self.cap[e] > 0 && level[self.to[e]] == u32::MAX {
                    level[self.to[e]] = level[a] + 1;
                    queue.push_back(self.to[e]);
                }
            }
        }
        (level[t] != u32::MAX).then_some(level)
    }

    fn augment(&mut self, a: usize, t: usize, limit: i128, level: &[u32], iter: &mut [usize]) -> i128 {
        if a == t {
            return limit;
        }
        while iter[a] < self.adj[a].len() {
            let e = self.adj[a][iter[a]];
            let b = self.to[e];
            if self.cap[e] > 0 && level[b] == level[a] + 1 {
                let pushed = self.augment(b, t, limit.min(self.cap[e]), level, iter);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[a] += 1;
        }
        0
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for &e in &self.adj[a] {
                if self.cap[e] > 0 && !seen[self.to[e]] {
                    seen[self.to[e]] = true;
                    stack.push(self.to[e]);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cycle(n: VertexId) -> Graph {
        Graph::from_edges((0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn kstar(k: VertexId) -> Graph {
        let mut g = Graph::new();
        let mut mid = k;
        for u in 0..k {
            for w in (u + 1)..k {
                g.add_edge(u, mid).unwrap();
                g.add_edge(mid, w).unwrap();
                mid += 1;
            }
        }
        g
    }

    // Independent oracle: maximum density over all nonempty vertex subsets.
    fn mad_brute(g: &Graph) -> Rational {
        let vs: Vec<VertexId> = g.vertices().collect();
        let mut best = ratio(0, 1);
        for mask in 1u32..(1 << vs.len()) {
            let set: BTreeSet<VertexId> = vs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let sub = g.induced(&set);
            let d = ratio(2 * sub.n_edges() as i128, sub.n_vertices() as i128);
            best = best.max(d);
        }
        best
    }

    #[test]
    fn landmark_values() {
        let k2 = Graph::from_edges([(0, 1)]).unwrap();
        assert_eq!(mad_exact(&k2).unwrap().value, ratio(1, 1));
        assert_eq!(mad_exact(&kstar(6)).unwrap().value, ratio(20, 7));
        assert_eq!(mad_exact(&kstar(5)).unwrap().value, ratio(8, 3));

        let mut petersen = Graph::new();
        for i in 0..5u32 {
            petersen.add_edge(i, (i + 1) % 5).unwrap();
            petersen.add_edge(i, i + 5).unwrap();
            petersen.add_edge(i + 5, (i + 2) % 5 + 5).unwrap();
        }
        assert_eq!(mad_exact(&petersen).unwrap().value, ratio(3, 1));
        assert_eq!(mad_exact(&cycle(7)).unwrap().value, ratio(2, 1));
    }

    #[test]
    fn witness_attains_the_value() {
        // Dense core (K4) with a long pendant path diluting the average.
        let mut g = Graph::from_edges([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for i in 3..12 {
            g.add_edge(i, i + 1).unwrap();
        }
        let res = mad_exact(&g).unwrap();
        assert_eq!(res.value, ratio(3, 1));
        let sub = g.induced(&res.witness);
        assert_eq!(
            ratio(2 * sub.n_edges() as i128, sub.n_vertices() as i128),
            res.value
        );
        assert_eq!(res.witness, [0, 1, 2, 3].into_iter().collect());
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for round in 0..160 {
            let n = rng.gen_range(1..=8u32);
            let mut g = Graph::new();
            for v in 0..n {
                g.add_vertex(v);
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.25 + 0.5 * (round % 3) as f64 / 3.0) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let expect = mad_brute(&g);
            let got = mad_exact(&g).unwrap();
            assert_eq!(got.value, expect, "round {round}");
            let sub = g.induced(&got.witness);
            assert_eq!(
                ratio(2 * sub.n_edges() as i128, sub.n_vertices().max(1) as i128),
                expect
            );
        }
    }

    #[test]
    fn threshold_queries_are_exact_at_the_boundary() {
        let g = kstar(6);
        assert!(mad_at_most(&g, ratio(20, 7)));
        assert!(!mad_less_than(&g, ratio(20, 7)));
        assert!(mad_less_than(&g, ratio(2001, 700)));
        assert!(!mad_at_most(&g, ratio(1999, 700)));

        assert!(mad_less_than(&cycle(9), ratio(12, 5)));
        assert!(!mad_less_than(&cycle(9), ratio(2, 1)));
        assert!(mad_at_most(&cycle(9), ratio(2, 1)));
    }

    #[test]
    fn empty_and_edgeless_graphs() {
        assert!(matches!(mad_exact(&Graph::new()), Err(Error::EmptyGraph)));
        let mut g = Graph::new();
        g.add_vertex(3);
        g.add_vertex(7);
        let res = mad_exact(&g).unwrap();
        assert_eq!(res.value, ratio(0, 1));
        assert!(!res.witness.is_empty());
        assert!(mad_at_most(&g, ratio(0, 1)));
        assert!(!mad_less_than(&g, ratio(0, 1)));
    }
}

//! Structure detection: induced 5-cycles, subdivided-clique subgraphs, and
//! recognition of one-subdivisions of regular graphs.

use crate::graph::{Graph, VertexId};
use std::collections::{BTreeMap, BTreeSet};

/// Witness that K*_k (K_k with every edge subdivided once) is a subgraph:
/// `branch` lists the k clique vertices and `middles` maps each branch pair
/// to its distinct subdivision vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KstarWitness {
    pub branch: Vec<VertexId>,
    pub middles: BTreeMap<(VertexId, VertexId), VertexId>,
}

/// Finds an induced (chordless) 5-cycle, if any, as `[v0..v4]` in cycle
/// order with `v0` minimal and `v1 < v4`. Exhaustive.
pub fn find_induced_c5(g: &Graph) -> Option<[VertexId; 5]> {
    let adj = |a: VertexId, b: VertexId| g.has_edge(a, b);
    for v0 in g.vertices() {
        let nbrs: Vec<VertexId> = g.neighbors(v0).iter().copied().filter(|&u| u > v0).collect();
        for (i, &v1) in nbrs.iter().enumerate() {
            for &v4 in &nbrs[i + 1..] {
                if adj(v1, v4) {
                    continue;
                }
                for &v2 in g.neighbors(v1) {
                    if v2 <= v0 || v2 == v4 || adj(v2, v0) || adj(v2, v4) {
                        continue;
                    }
                    for &v3 in g.neighbors(v2) {
                        if v3 <= v0 || v3 == v1 || v3 == v4 {
                            continue;
                        }
                        if adj(v3, v4) && !adj(v3, v0) && !adj(v3, v1) {
                            return Some([v0, v1, v2, v3, v4]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Searches for K*_k as a subgraph. Backtracks over branch-vertex sets
/// (degree ≥ k−1, pairwise sharing a potential middle) and assigns distinct
/// middles to pairs by bipartite matching. Exhaustive but desk-scale.
pub fn find_kstar_subgraph(g: &Graph, k: usize) -> Option<KstarWitness> {
    assert!(k >= 3, "K*_k needs k >= 3");
    let need = k + k * (k - 1) / 2;
    if g.n_vertices() < need {
        return None;
    }
    let cands: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) >= k - 1).collect();
    if cands.len() < k {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    extend_branches(g, k, &cands, 0, &mut chosen)
}

fn extend_branches(
    g: &Graph,
    k: usize,
    cands: &[VertexId],
    from: usize,
    chosen: &mut Vec<VertexId>,
) -> Option<KstarWitness> {
    if chosen.len() == k {
        return match_middles(g, chosen);
    }
    for (i, &v) in cands.iter().enumerate().skip(from) {
        // Every branch pair needs a common neighbor outside the branch set;
        // a cheap necessary version (ignoring distinctness) prunes here.
        let compatible = chosen
            .iter()
            .all(|&u| g.neighbors(u).iter().any(|&w| w != v && g.has_edge(w, v)));
        if !compatible {
            continue;
        }
        chosen.push(v);
        if let Some(w) = extend_branches(g, k, cands, i + 1, chosen) {
            return Some(w);
        }
        chosen.pop();
    }
    None
}

// Assigns a distinct middle vertex to every branch pair (Kuhn's matching).
fn match_middles(g: &Graph, branch: &[VertexId]) -> Option<KstarWitness> {
    let branch_set: BTreeSet<VertexId> = branch.iter().copied().collect();
    let mut pairs = Vec::new();
    let mut cand_lists: Vec<Vec<VertexId>> = Vec::new();
    for (i, &u) in branch.iter().enumerate() {
        for &v in &branch[i + 1..] {
            let common: Vec<VertexId> = g
                .neighbors(u)
                .intersection(g.neighbors(v))
                .copied()
                .filter(|w| !branch_set.contains(w))
                .collect();
            if common.is_empty() {
                return None;
            }
            pairs.push((u.min(v), u.max(v)));
            cand_lists.push(common);
        }
    }
    let mut owner: BTreeMap<VertexId, usize> = BTreeMap::new();
    for p in 0..pairs.len() {
        let mut seen = BTreeSet::new();
        if !assign(p, &cand_lists, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut middles = BTreeMap::new();
    for (&m, &p) in &owner {
        middles.insert(pairs[p], m);
    }
    Some(KstarWitness {
        branch: branch.to_vec(),
        middles,
    })
}

fn assign(
    pair: usize,
    cand_lists: &[Vec<VertexId>],
    owner: &mut BTreeMap<VertexId, usize>,
    seen: &mut BTreeSet<VertexId>,
) -> bool {
    for &m in &cand_lists[pair] {
        if !seen.insert(m) {
            continue;
        }
        if let Some(&holder) = owner.get(&m) {
            if !assign(holder, cand_lists, owner, seen) {
                continue;
            }
        }
        owner.insert(m, pair);
        return true;
    }
    false
}

/// Recognizes a graph obtained from a simple r-regular graph (r ≥ 3) by
/// subdividing every edge exactly once. Returns the underlying graph on the
/// original branch-vertex ids together with r. Parallel middles (two
/// 2-vertices joining the same branch pair) are rejected.
pub fn recognize_one_subdivision_of_regular(g: &Graph) -> Option<(Graph, usize)> {
    let branch: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) != 2).collect();
    if branch.is_empty() {
        return None;
    }
    let r = g.degree(branch[0]);
    if r < 3 {
        return None;
    }
    let mut g0 = Graph::new();
    for &b in &branch {
        if g.degree(b) != r || g.neighbors(b).iter().any(|&w| g.degree(w) != 2) {
            return None;
        }
        g0.add_vertex(b);
    }
    for m in g.vertices() {
        if g.degree(m) != 2 {
            continue;
        }
        let mut it = g.neighbors(m).iter();
        let (&a, &b) = (it.next().unwrap(), it.next().unwrap());
        if g.degree(a) == 2 || g.degree(b) == 2 || g0.has_edge(a, b) {
            return None;
        }
        g0.add_edge(a, b).ok()?;
    }
    Some((g0, r))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn petersen() -> Graph {
        let mut g = Graph::new();
        for i in 0..5u32 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(i + 5, (i + 2) % 5 + 5).unwrap();
        }
        g
    }

    #[test]
    fn c5_is_found_and_chorded_c5_is_not() {
        assert_eq!(find_induced_c5(&cycle(5)), Some([0, 1, 2, 3, 4]));
        let mut chorded = cycle(5);
        chorded.add_edge(0, 2).unwrap();
        assert_eq!(find_induced_c5(&chorded), None);
        assert_eq!(find_induced_c5(&cycle(6)), None);
    }

    #[test]
    fn petersen_contains_induced_c5() {
        let c = find_induced_c5(&petersen()).expect("girth 5");
        let g = petersen();
        for i in 0..5 {
            assert!(g.has_edge(c[i], c[(i + 1) % 5]));
        }
    }

    #[test]
    fn kstar_detects_itself() {
        let g = kstar(6);
        let w = find_kstar_subgraph(&g, 6).expect("K*_6 in itself");
        assert_eq!(w.branch, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(w.middles.len(), 15);
        let mids: BTreeSet<_> = w.middles.values().copied().collect();
        assert_eq!(mids.len(), 15);
        for (&(a, b), &m) in &w.middles {
            assert!(g.has_edge(a, m) && g.has_edge(m, b));
        }
    }

    #[test]
    fn kstar_absent_in_small_or_sparse_graphs() {
        assert_eq!(find_kstar_subgraph(&cycle(5), 3), None);
        assert_eq!(find_kstar_subgraph(&kstar(4), 5), None);
        // Subdividing Petersen leaves no K4 pattern: middles have degree 2.
        let mut sub = Graph::new();
        let p = petersen();
        let mut next = 10;
        for (u, v) in p.edges() {
            sub.add_edge(u, next).unwrap();
            sub.add_edge(next, v).unwrap();
            next += 1;
        }
        assert_eq!(find_kstar_subgraph(&sub, 4), None);
    }

    #[test]
    fn kstar_found_inside_a_larger_host() {
        let mut g = kstar(4);
        // Extra decoration must not confuse the search.
        let n = g.n_vertices() as VertexId;
        g.add_edge(0, n).unwrap();
        g.add_edge(n, n + 1).unwrap();
        let w = find_kstar_subgraph(&g, 4).expect("still present");
        assert_eq!(w.branch.len(), 4);
        assert_eq!(w.middles.len(), 6);
    }

    #[test]
    fn recognizes_one_subdivisions_of_regular_graphs() {
        let (g0, r) = recognize_one_subdivision_of_regular(&kstar(6)).expect("K*_6");
        assert_eq!(r, 5);
        assert_eq!(g0.n_vertices(), 6);
        assert_eq!(g0.n_edges(), 15);
        assert!((0..6).all(|v| g0.degree(v) == 5));

        let mut sub_petersen = Graph::new();
        let mut next = 10;
        for (u, v) in petersen().edges() {
            sub_petersen.add_edge(u, next).unwrap();
            sub_petersen.add_edge(next, v).unwrap();
            next += 1;
        }
        let (g0, r) = recognize_one_subdivision_of_regular(&sub_petersen).expect("subdivided Petersen");
        assert_eq!(r, 3);
        assert_eq!(g0, petersen());
    }

    #[test]
    fn rejects_non_subdivisions() {
        // All-2 cycles are ambiguous contractions; r = 2 is rejected.
        assert_eq!(recognize_one_subdivision_of_regular(&cycle(8)), None);
        assert_eq!(recognize_one_subdivision_of_regular(&cycle(5)), None);
        // Not every edge subdivided.
        let mut g = kstar(4);
        g.add_edge(0, 1).unwrap();
        assert_eq!(recognize_one_subdivision_of_regular(&g), None);
        // Parallel middles: two 2-vertices joining the same pair.
        let theta = Graph::from_edges([(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        assert_eq!(recognize_one_subdivision_of_regular(&theta), None);
    }
}

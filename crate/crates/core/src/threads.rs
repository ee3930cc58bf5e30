//! Threads: maximal paths of 2-vertices, and per-attachment queries on them.

use crate::graph::{Graph, VertexId};
use std::collections::BTreeSet;

/// How a maximal thread sits inside its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThreadKind {
    /// Bounded on both sides by non-2-vertices; the two may coincide.
    Path { endpoints: (VertexId, VertexId) },
    /// A whole connected component that is a cycle of 2-vertices.
    CycleComponent,
}

/// A maximal run of consecutive 2-vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thread {
    /// The 2-vertices of the run, in path order.
    pub vertices: Vec<VertexId>,
    pub kind: ThreadKind,
}

impl Thread {
    /// Number of 2-vertices on the thread.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True if the thread has no vertices (never produced by enumeration).
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// All maximal threads of `g`, deterministically ordered and oriented.
///
/// Path threads are oriented so that `endpoints.0 <= endpoints.1`, breaking
/// ties (equal endpoints) toward the smaller first interior vertex. Cycle
/// components start at their smallest vertex and step to its smaller
/// neighbor. The result is sorted by smallest contained vertex.
pub fn enumerate_threads(g: &Graph) -> Vec<Thread> {
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    let mut out = Vec::new();
    for v in g.vertices() {
        if g.degree(v) != 2 || seen.contains(&v) {
            continue;
        }
        let thread = trace_thread(g, v);
        seen.extend(thread.vertices.iter().copied());
        out.push(thread);
    }
    out.sort_by_key(|t| t.vertices.iter().copied().min().unwrap());
    out
}

// Expands the maximal run of 2-vertices through `start` (a 2-vertex).
fn trace_thread(g: &Graph, start: VertexId) -> Thread {
    // Walk one direction; if we come back to `start` the run is a cycle.
    let mut first_dir = Vec::new();
    let (end_a, cycled) = walk(g, start, smaller_neighbor(g, start), &mut first_dir);
    if cycled {
        let mut vertices = vec![start];
        vertices.extend(first_dir);
        vertices.pop(); // the walk re-appends `start`
        return canonical_cycle(vertices);
    }
    let mut second_dir = Vec::new();
    let (end_b, _) = walk(g, start, larger_neighbor(g, start), &mut second_dir);

    // Chain: end_b .. start .. end_a, as vertex list without the bounds.
    second_dir.reverse();
    let mut vertices = second_dir;
    vertices.push(start);
    vertices.extend(first_dir);
    let (mut lo, mut hi) = (end_b, end_a);
    if lo > hi || (lo == hi && vertices.first() > vertices.last()) {
        vertices.reverse();
        std::mem::swap(&mut lo, &mut hi);
    }
    Thread {
        vertices,
        kind: ThreadKind::Path { endpoints: (lo, hi) },
    }
}

// Follows 2-vertices from `from` toward `next`, recording them, until a
// non-2-vertex bound (returned) or arrival back at `from` (cycle).
fn walk(g: &Graph, from: VertexId, mut next: VertexId, trail: &mut Vec<VertexId>) -> (VertexId, bool) {
    let mut prev = from;
    loop {
        if next == from {
            trail.push(next);
            return (next, true);
        }
        if g.degree(next) != 2 {
            return (next, false);
        }
        trail.push(next);
        let step = other_neighbor(g, next, prev);
        prev = next;
        next = step;
    }
}

fn smaller_neighbor(g: &Graph, v: VertexId) -> VertexId {
    *g.neighbors(v).iter().next().unwrap()
}

fn larger_neighbor(g: &Graph, v: VertexId) -> VertexId {
    *g.neighbors(v).iter().next_back().unwrap()
}

/// The unique neighbor of the 2-vertex `v` other than `not`.
pub fn other_neighbor(g: &Graph, v: VertexId, not: VertexId) -> VertexId {
    debug_assert_eq!(g.degree(v), 2);
    *g.neighbors(v).iter().find(|&&w| w != not).unwrap()
}

fn canonical_cycle(mut vertices: Vec<VertexId>) -> Thread {
    let min_pos = vertices
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(i, _)| i)
        .unwrap();
    vertices.rotate_left(min_pos);
    if vertices.len() > 2 && vertices[1] > vertices[vertices.len() - 1] {
        vertices[1..].reverse();
    }
    Thread {
        vertices,
        kind: ThreadKind::CycleComponent,
    }
}

/// The run of 2-vertices reached from `v` through its 2-neighbor `a`,
/// in walk order, stopping before any non-2-vertex (possibly `v` itself).
pub fn attachment_run(g: &Graph, v: VertexId, a: VertexId) -> Vec<VertexId> {
    debug_assert!(g.neighbors(v).contains(&a) && g.degree(a) == 2);
    let mut run = Vec::new();
    let mut prev = v;
    let mut cur = a;
    while g.degree(cur) == 2 {
        run.push(cur);
        let next = other_neighbor(g, cur, prev);
        prev = cur;
        cur = next;
        if cur == v {
            break;
        }
    }
    run
}

/// Close neighbors of `v`: the 2-vertices on threads attached to `v`, as a
/// sorted multiset with one entry per attachment walk containing them. A
/// thread attached to `v` at both ends contributes its vertices twice.
pub fn close_neighbors(g: &Graph, v: VertexId) -> Vec<VertexId> {
    if g.degree(v) < 3 {
        return Vec::new();
    }
    let mut close = Vec::new();
    for &a in g.neighbors(v) {
        if g.degree(a) == 2 {
            close.extend(attachment_run(g, v, a));
        }
    }
    close.sort_unstable();
    close
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path6() -> Graph {
        Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap()
    }

    // K5 with every edge subdivided once: branches 0..5, middles 5..15.
    fn subdivided_k5() -> Graph {
        let mut g = Graph::new();
        let mut mid = 5u32;
        for u in 0..5u32 {
            for w in (u + 1)..5 {
                g.add_edge(u, mid).unwrap();
                g.add_edge(mid, w).unwrap();
                mid += 1;
            }
        }
        g
    }

    #[test]
    fn path_yields_single_four_thread() {
        let threads = enumerate_threads(&path6());
        assert_eq!(threads.len(), 1);
        assert_eq!(threads[0].vertices, vec![1, 2, 3, 4]);
        assert_eq!(threads[0].kind, ThreadKind::Path { endpoints: (0, 5) });
    }

    #[test]
    fn subdivided_k5_yields_ten_one_threads() {
        let threads = enumerate_threads(&subdivided_k5());
        assert_eq!(threads.len(), 10);
        for t in &threads {
            assert_eq!(t.len(), 1);
            assert!(matches!(t.kind, ThreadKind::Path { .. }));
        }
    }

    #[test]
    fn cycle_is_one_cycle_component() {
        let c5 = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let threads = enumerate_threads(&c5);
        assert_eq!(threads.len(), 1);
        assert_eq!(threads[0].kind, ThreadKind::CycleComponent);
        assert_eq!(threads[0].vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn wrap_thread_attaches_twice() {
        // Triangle 0-1-2 plus pendant path 0-3-4 so d(0) = 3.
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let threads = enumerate_threads(&g);
        assert_eq!(threads.len(), 2);
        assert_eq!(threads[0].vertices, vec![1, 2]);
        assert_eq!(threads[0].kind, ThreadKind::Path { endpoints: (0, 0) });
        assert_eq!(threads[1].vertices, vec![3]);
        assert_eq!(threads[1].kind, ThreadKind::Path { endpoints: (0, 4) });
        // Both wrap vertices are close to 0 twice; 3 is close once.
        assert_eq!(close_neighbors(&g, 0), vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn attachment_runs_walk_to_the_far_bound() {
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (0, 6), (6, 7), (7, 8), (8, 9), (9, 4), (4, 10)])
            .unwrap();
        // d(0) = 3 via 1, 5, 6; run through 1 reaches 2-vertices 1,2,3.
        assert_eq!(attachment_run(&g, 0, 1), vec![1, 2, 3]);
        assert_eq!(attachment_run(&g, 0, 6), vec![6, 7, 8, 9]);
        // 5 is a 1-vertex, not a thread vertex, so it is not close to 0.
        assert_eq!(close_neighbors(&g, 0), vec![1, 2, 3, 6, 7, 8, 9]);
        assert_eq!(close_neighbors(&g, 4), vec![1, 2, 3, 6, 7, 8, 9]);
    }

    #[test]
    fn orientation_is_canonical_regardless_of_insertion() {
        let a = Graph::from_edges([(9, 3), (3, 7), (7, 1), (1, 0), (0, 9), (9, 8), (0, 8)]).unwrap();
        let b = Graph::from_edges([(0, 8), (8, 9), (9, 0), (0, 1), (1, 7), (7, 3), (3, 9)]).unwrap();
        assert_eq!(enumerate_threads(&a), enumerate_threads(&b));
    }

    #[test]
    fn close_neighbors_empty_for_low_degree() {
        let g = path6();
        assert!(close_neighbors(&g, 0).is_empty());
        assert!(close_neighbors(&g, 2).is_empty());
    }
}

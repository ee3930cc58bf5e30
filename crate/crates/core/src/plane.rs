//! Plane graphs as rotation systems with traced faces.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A face boundary: a closed walk, with an edge from each vertex to the next
/// (cyclically). Face length counts walk steps, so bridges count twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    walk: Vec<VertexId>,
}

impl Face {
    /// The boundary walk; `walk[i]` is followed by `walk[(i+1) % len]`.
    pub fn walk(&self) -> &[VertexId] {
        &self.walk
    }

    /// Face length (number of boundary darts).
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    /// True for the impossible empty walk; faces are always nonempty.
    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// Whether `v` lies on the boundary walk.
    pub fn contains(&self, v: VertexId) -> bool {
        self.walk.contains(&v)
    }

    /// Vertices adjacent to `v` along this face's boundary, sorted, deduped.
    pub fn boundary_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let n = self.walk.len();
        let mut out = BTreeSet::new();
        for (i, &w) in self.walk.iter().enumerate() {
            if w == v {
                out.insert(self.walk[(i + 1) % n]);
                out.insert(self.walk[(i + n - 1) % n]);
            }
        }
        out.into_iter().collect()
    }
}

/// A graph with a fixed combinatorial embedding: a clockwise neighbor order
/// at every vertex, plus the faces that order induces.
///
/// Face tracing follows darts: the successor of the dart (u, v) is (v, w)
/// where w immediately follows u in the rotation at v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: BTreeMap<VertexId, Vec<VertexId>>,
    faces: Vec<Face>,
}

impl PlaneGraph {
    /// Builds and validates an embedding: each rotation must list exactly the
    /// vertex's neighbors, and traced faces must satisfy Euler's identity
    /// (per component: V − E + F = 2, edgeless components contribute 1).
    pub fn new(graph: Graph, rotation: BTreeMap<VertexId, Vec<VertexId>>) -> Result<PlaneGraph> {
        for v in graph.vertices() {
            let rot = rotation
                .get(&v)
                .ok_or_else(|| Error::embedding(format!("vertex {v} has no rotation")))?;
            let listed: BTreeSet<VertexId> = rot.iter().copied().collect();
            if listed.len() != rot.len() {
                return Err(Error::embedding(format!("rotation at {v} repeats a neighbor")));
            }
            if &listed != graph.neighbors(v) {
                return Err(Error::embedding(format!(
                    "rotation at {v} does not list exactly its neighbors"
                )));
            }
        }
        if rotation.len() != graph.n_vertices() {
            return Err(Error::embedding("rotation given for an absent vertex"));
        }
        let faces = trace_faces(&graph, &rotation);
        let (mut with_edges, mut isolated) = (0usize, 0usize);
        for comp in graph.components() {
            if comp.len() == 1 && graph.degree(*comp.iter().next().unwrap()) == 0 {
                isolated += 1;
            } else {
                with_edges += 1;
            }
        }
        let (v, e, f) = (graph.n_vertices(), graph.n_edges(), faces.len());
        if v + f != 2 * with_edges + isolated + e {
            return Err(Error::EulerCheckFailed {
                vertices: v,
                edges: e,
                faces: f,
            });
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            faces,
        })
    }

    /// The underlying abstract graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Clockwise neighbor order at `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[&v]
    }

    /// All faces, deterministically ordered.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Indices of the distinct faces whose boundary contains `v`.
    pub fn incident_faces(&self, v: VertexId) -> Vec<usize> {
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Deletes a vertex set and re-traces the sub-embedding.
    pub fn delete_vertices(&self, drop: &BTreeSet<VertexId>) -> Result<PlaneGraph> {
        let graph = self.graph.without_vertices(drop);
        let rotation = self
            .rotation
            .iter()
            .filter(|(v, _)| !drop.contains(v))
            .map(|(&v, rot)| {
                let kept: Vec<VertexId> = rot.iter().copied().filter(|w| !drop.contains(w)).collect();
                (v, kept)
            })
            .collect();
        PlaneGraph::new(graph, rotation)
    }

    /// Parses rotation-system text: one `v: a b c` line per vertex listing
    /// neighbors clockwise ('#' comments allowed).
    pub fn parse(text: &str) -> Result<PlaneGraph> {
        let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `v: neighbors...`"))?;
            let v: VertexId = head
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad vertex id `{}`", head.trim())))?;
            let mut rot = Vec::new();
            for tok in tail.split_whitespace() {
                let w: VertexId = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad neighbor id `{tok}`")))?;
                if w == v {
                    return Err(Error::parse(line_no, "self-loop in rotation"));
                }
                rot.push(w);
            }
            if rotation.insert(v, rot).is_some() {
                return Err(Error::parse(line_no, format!("vertex {v} listed twice")));
            }
        }
        let mut graph = Graph::new();
        for (&v, rot) in &rotation {
            graph.add_vertex(v);
            for &w in rot {
                if !rotation.contains_key(&w) {
                    return Err(Error::embedding(format!("{v} lists unknown vertex {w}")));
                }
                if !rotation[&w].contains(&v) {
                    return Err(Error::embedding(format!("{v} lists {w} but not vice versa")));
                }
                if v < w {
                    graph.add_edge(v, w)?;
                }
            }
        }
        PlaneGraph::new(graph, rotation)
    }
}

impl fmt::Display for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, rot) in &self.rotation {
            write!(f, "{v}:")?;
            for w in rot {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

// Traces all faces; each walk starts at its smallest dart and walks are
// emitted sorted by that dart.
fn trace_faces(graph: &Graph, rotation: &BTreeMap<VertexId, Vec<VertexId>>) -> Vec<Face> {
    let mut used: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut faces: Vec<(Vec<(VertexId, VertexId)>, Vec<VertexId>)> = Vec::new();
    for u in graph.vertices() {
        for &v in rotation[&u].iter() {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut darts = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                darts.push((a, b));
                used.insert((a, b));
                let rot = &rotation[&b];
                let i = rot.iter().position(|&x| x == a).unwrap();
                let w = rot[(i + 1) % rot.len()];
                a = b;
                b = w;
                if (a, b) == (u, v) {
                    break;
                }
            }
            let min_pos = darts
                .iter()
                .enumerate()
                .min_by_key(|(_, d)| **d)
                .map(|(i, _)| i)
                .unwrap();
            darts.rotate_left(min_pos);
            let walk = darts.iter().map(|&(x, _)| x).collect();
            faces.push((darts, walk));
        }
    }
    faces.sort_by(|x, y| x.0[0].cmp(&y.0[0]));
    faces.into_iter().map(|(_, walk)| Face { walk }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_embedding() -> PlaneGraph {
        PlaneGraph::parse("0: 1 3\n1: 2 0\n2: 3 1\n3: 0 2\n").unwrap()
    }

    #[test]
    fn square_has_two_quadrilateral_faces() {
        let pg = c4_embedding();
        let lens: Vec<usize> = pg.faces().iter().map(|f| f.len()).collect();
        assert_eq!(lens, vec![4, 4]);
        assert_eq!(pg.incident_faces(0), vec![0, 1]);
    }

    #[test]
    fn tetrahedron_has_four_triangles() {
        let pg = PlaneGraph::parse("0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n").unwrap();
        let mut lens: Vec<usize> = pg.faces().iter().map(|f| f.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![3, 3, 3, 3]);
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // K5 admits no plane embedding, whatever the rotations.
        let mut text = String::new();
        for v in 0..5 {
            let nbrs: Vec<String> = (0..5).filter(|&w| w != v).map(|w| w.to_string()).collect();
            text.push_str(&format!("{v}: {}\n", nbrs.join(" ")));
        }
        match PlaneGraph::parse(&text) {
            Err(Error::EulerCheckFailed { .. }) => {}
            other => panic!("expected Euler failure, got {other:?}"),
        }
    }

    #[test]
    fn asymmetric_or_unknown_rotations_rejected() {
        assert!(matches!(
            PlaneGraph::parse("0: 1\n1:\n"),
            Err(Error::InvalidEmbedding { .. })
        ));
        assert!(matches!(
            PlaneGraph::parse("0: 7\n"),
            Err(Error::InvalidEmbedding { .. })
        ));
        assert!(matches!(PlaneGraph::parse("0: 1\n0: 1\n1: 0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_display_round_trip() {
        let pg = c4_embedding();
        let again = PlaneGraph::parse(&pg.to_string()).unwrap();
        assert_eq!(pg, again);
    }

    #[test]
    fn deleting_a_vertex_retraces() {
        let pg = c4_embedding();
        let dropped: BTreeSet<VertexId> = [0].into_iter().collect();
        let smaller = pg.delete_vertices(&dropped).unwrap();
        assert_eq!(smaller.graph().n_vertices(), 3);
        assert_eq!(smaller.faces().len(), 1);
        assert_eq!(smaller.faces()[0].len(), 4); // path boundary walks twice
    }

    #[test]
    fn boundary_neighbors_on_a_face() {
        let pg = c4_embedding();
        let f = &pg.faces()[0];
        assert_eq!(f.boundary_neighbors(0), vec![1, 3]);
    }

    #[test]
    fn isolated_vertices_are_allowed() {
        let pg = PlaneGraph::parse("0: 1\n1: 0\n5:\n").unwrap();
        assert_eq!(pg.graph().n_vertices(), 3);
        assert_eq!(pg.faces().len(), 1);
        assert_eq!(pg.faces()[0].len(), 2);
    }
}

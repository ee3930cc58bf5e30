//! Graph and plane-graph constructors for the test corpus and the CLI.
//!
//! All generators number vertices as documented on each function and are
//! deterministic for a fixed seed.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::mad::mad_at_most;
use crate::plane::PlaneGraph;
use crate::rational::Rational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn unsatisfiable(message: impl Into<String>) -> Error {
    Error::UnsatisfiableParameters {
        message: message.into(),
    }
}

/// Cycle 0–1–…–(n−1)–0; requires n ≥ 3.
pub fn cycle(n: u32) -> Result<Graph> {
    if n < 3 {
        return Err(unsatisfiable(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges((0..n).map(|i| (i, (i + 1) % n)))
}

/// Path 0–1–…–(n−1); requires n ≥ 1.
pub fn path(n: u32) -> Result<Graph> {
    if n == 0 {
        return Err(unsatisfiable("path needs n >= 1"));
    }
    let mut g = Graph::new();
    g.add_vertex(0);
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

/// Complete graph on vertices 0..n; requires n ≥ 1.
pub fn complete(n: u32) -> Result<Graph> {
    if n == 0 {
        return Err(unsatisfiable("complete needs n >= 1"));
    }
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// K*_k: K_k with every edge subdivided once. Branch vertices 0..k, then one
/// middle vertex per pair (u, w) in lexicographic order starting at k.
pub fn kstar(k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(unsatisfiable("kstar needs k >= 1"));
    }
    let mut g = Graph::new();
    for v in 0..k {
        g.add_vertex(v);
    }
    let mut mid = k;
    for u in 0..k {
        for w in (u + 1)..k {
            g.add_edge(u, mid)?;
            g.add_edge(mid, w)?;
            mid += 1;
        }
    }
    Ok(g)
}

/// Subdivides every edge once. Original ids are kept; middle vertices are
/// numbered from max(id)+1 in sorted edge order.
pub fn one_subdivision(g: &Graph) -> Graph {
    let mut out = Graph::new();
    for v in g.vertices() {
        out.add_vertex(v);
    }
    let mut mid = g.vertices().max().map_or(0, |v| v + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, mid).expect("fresh middle vertex");
        out.add_edge(mid, v).expect("fresh middle vertex");
        mid += 1;
    }
    out
}

/// Random tree on 0..n: vertex v ≥ 1 picks a uniform parent below it.
pub fn random_tree(n: u32, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(unsatisfiable("random_tree needs n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    g.add_vertex(0);
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v)?;
    }
    Ok(g)
}

/// Random graph on 0..n with mad ≤ mad_cap: shuffled candidate edges are
/// admitted one by one whenever the cap survives (checked exactly).
pub fn random_sparse(n: u32, mad_cap: Rational, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(unsatisfiable("random_sparse needs n >= 1"));
    }
    if mad_cap < Rational::from_integer(0) {
        return Err(unsatisfiable("mad cap must be nonnegative"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    let mut candidates: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(&mut rng);
    for (u, v) in candidates {
        g.add_edge(u, v)?;
        if !mad_at_most(&g, mad_cap) {
            g.remove_edge(u, v);
        }
    }
    Ok(g)
}

/// Random r-regular graph via the pairing model with rejection; requires
/// n·r even, r < n. Deterministic for fixed seed.
pub fn random_regular(n: u32, r: u32, seed: u64) -> Result<Graph> {
    if r >= n || n * r % 2 != 0 {
        return Err(unsatisfiable(format!(
            "no simple {r}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<u32> = (0..n).flat_map(|v| std::iter::repeat(v).take(r as usize)).collect();
        stubs.shuffle(&mut rng);
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v)?;
        }
        return Ok(g);
    }
    Err(unsatisfiable(format!(
        "pairing model failed to produce a simple {r}-regular graph on {n} vertices"
    )))
}

/// Dodecahedron: outer pentagon 0..5, middle 10-ring 5..15 (spokes at even
/// ring positions), inner pentagon 15..20 (spokes at odd ring positions).
pub fn dodecahedron() -> Graph {
    let mut g = Graph::new();
    let a = |i: u32| i % 5;
    let r = |j: u32| 5 + j % 10;
    let d = |i: u32| 15 + i % 5;
    for i in 0..5 {
        g.add_edge(a(i), a(i + 1)).unwrap();
        g.add_edge(a(i), r(2 * i)).unwrap();
        g.add_edge(d(i), d(i + 1)).unwrap();
        g.add_edge(d(i), r(2 * i + 1)).unwrap();
    }
    for j in 0..10 {
        g.add_edge(r(j), r(j + 1)).unwrap();
    }
    g
}

/// The dodecahedron with its (unique) planar embedding.
pub fn dodecahedron_plane() -> PlaneGraph {
    let g = dodecahedron();
    // Concentric straight-line drawing; rotations read off by angle.
    let position = |v: u32| -> (f64, f64) {
        let tau = std::f64::consts::TAU;
        let (radius, angle) = match v {
            0..=4 => (4.0, tau * v as f64 / 5.0),
            5..=14 => (2.5, tau * (v - 5) as f64 / 10.0),
            _ => (1.2, tau * (2 * (v - 15) + 1) as f64 / 10.0),
        };
        (radius * angle.cos(), radius * angle.sin())
    };
    rotation_by_angle(&g, position)
}

/// Cycle 0..n in convex position; two faces.
pub fn cycle_plane(n: u32) -> Result<PlaneGraph> {
    let g = cycle(n)?;
    let tau = std::f64::consts::TAU;
    Ok(rotation_by_angle(&g, |v| {
        ((tau * v as f64 / n as f64).cos(), (tau * v as f64 / n as f64).sin())
    }))
}

/// Subdivides every edge once inside the embedding: each middle vertex sits
/// on its edge; host rotations keep their order. Numbering matches
/// one_subdivision on the underlying graph.
pub fn one_subdivision_plane(pg: &PlaneGraph) -> PlaneGraph {
    let g = pg.graph();
    let mut mid = g.vertices().max().map_or(0, |v| v + 1);
    let mut middle: BTreeMap<(VertexId, VertexId), VertexId> = BTreeMap::new();
    for (u, v) in g.edges() {
        middle.insert((u, v), mid);
        mid += 1;
    }
    let m = |u: VertexId, v: VertexId| middle[&(u.min(v), u.max(v))];
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for v in g.vertices() {
        rotation.insert(v, pg.rotation(v).iter().map(|&u| m(u, v)).collect());
    }
    for (&(u, v), &w) in &middle {
        rotation.insert(w, vec![u, v]);
    }
    PlaneGraph::new(one_subdivision(g), rotation).expect("subdivision preserves planarity")
}

/// Random outerplanar graph of girth ≥ 5 on the convex n-gon 0..n: shuffled
/// chords are kept when they neither cross an accepted chord nor create a
/// cycle shorter than 5.
pub fn random_outerplanar_girth5(n: u32, seed: u64) -> Result<PlaneGraph> {
    if n < 5 {
        return Err(unsatisfiable(format!(
            "outerplanar girth-5 generator needs n >= 5, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = cycle(n)?;
    let mut chords: Vec<(u32, u32)> = Vec::new();
    let mut candidates: Vec<(u32, u32)> = (0..n)
        .flat_map(|u| ((u + 4)..n.min(u + n - 3)).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(&mut rng);
    let crosses = |&(a, b): &(u32, u32), &(x, y): &(u32, u32)| {
        (a < x && x < b && b < y) || (x < a && a < y && y < b)
    };
    for (u, v) in candidates {
        if chords.iter().any(|c| crosses(c, &(u, v))) {
            continue;
        }
        g.add_edge(u, v)?;
        if g.girth() < Some(5) {
            g.remove_edge(u, v);
        } else {
            chords.push((u, v));
        }
    }
    let tau = std::f64::consts::TAU;
    Ok(rotation_by_angle(&g, |v| {
        ((tau * v as f64 / n as f64).cos(), (tau * v as f64 / n as f64).sin())
    }))
}

// Builds the embedding a straight-line drawing induces: neighbors sorted by
// angle around each vertex. Valid whenever the drawing has no crossings.
fn rotation_by_angle(g: &Graph, position: impl Fn(VertexId) -> (f64, f64)) -> PlaneGraph {
    let mut rotation: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for v in g.vertices() {
        let (vx, vy) = position(v);
        let mut neighbors: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
        neighbors.sort_by(|&a, &b| {
            let (ax, ay) = position(a);
            let (bx, by) = position(b);
            let (ta, tb) = ((ay - vy).atan2(ax - vx), (by - vy).atan2(bx - vx));
            ta.partial_cmp(&tb).expect("angles are finite").then(a.cmp(&b))
        });
        rotation.insert(v, neighbors);
    }
    PlaneGraph::new(g.clone(), rotation).expect("drawing induces a planar rotation")
}

//! Simple undirected graphs over arbitrary non-negative integer vertex ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = u32;

/// Adjacency-set graph. Invariants: no self-loops, no parallel edges,
/// symmetric adjacency, every listed neighbor is a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Default for Graph {
    fn default() -> Self {
        Self::new()
    }
}

impl Graph {
    pub fn new() -> Self {
        Graph {
            adj: BTreeMap::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (VertexId, VertexId)>>(edges: I) -> Result<Self> {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::invalid(None, format!("self-loop at {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::invalid(None, format!("duplicate edge {u} {v}")));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    /// Removes an edge, keeping both endpoints as vertices.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).expect("symmetric adjacency").remove(&v);
            }
        }
    }

    /// Copy with the given vertices deleted.
    pub fn without_vertices<'a, I: IntoIterator<Item = &'a VertexId>>(&self, del: I) -> Graph {
        let mut g = self.clone();
        for &v in del {
            g.remove_vertex(v);
        }
        g
    }

    /// Subgraph induced by `keep` (unknown ids ignored).
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.contains_vertex(v) {
                g.add_vertex(v);
            }
        }
        for (u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.add_edge(u, v).expect("edges of a simple graph");
            }
        }
        g
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices().collect()
    }

    /// Panics if `v` is not a vertex: callers own that invariant.
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, s)| s.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Number of neighbors of `v` with degree exactly `d`.
    pub fn n_deg(&self, v: VertexId, d: usize) -> usize {
        self.neighbors(v).iter().filter(|&&u| self.degree(u) == d).count()
    }

    /// Number of neighbors of `v` with degree ≥ `d`.
    pub fn n_deg_ge(&self, v: VertexId, d: usize) -> usize {
        self.neighbors(v).iter().filter(|&&u| self.degree(u) >= d).count()
    }

    pub fn n2(&self, v: VertexId) -> usize {
        self.n_deg(v, 2)
    }

    pub fn n3(&self, v: VertexId) -> usize {
        self.n_deg(v, 3)
    }

    pub fn neighbors_of_degree(&self, v: VertexId, d: usize) -> Vec<VertexId> {
        self.neighbors(v).iter().copied().filter(|&u| self.degree(u) == d).collect()
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for &y in self.neighbors(x) {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `src` within its component.
    pub fn bfs_distances(&self, src: VertexId) -> BTreeMap<VertexId, usize> {
        let mut dist = BTreeMap::from([(src, 0)]);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[&x];
            for &y in self.neighbors(x) {
                if !dist.contains_key(&y) {
                    dist.insert(y, dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle; `None` on forests.
    /// For each edge uv: a shortest cycle through uv has length
    /// 1 + dist(u,v) in the graph without uv.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            let mut g = self.clone();
            g.remove_edge(u, v);
            if let Some(&d) = g.bfs_distances(u).get(&v) {
                let cyc = d + 1;
                if best.map_or(true, |b| cyc < b) {
                    best = Some(cyc);
                }
            }
        }
        best
    }

    /// Nonempty, connected, and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n_vertices() >= 3
            && self.vertices().all(|v| self.degree(v) == 2)
            && self.is_connected()
    }

    /// Repeatedly removes a minimum-degree vertex (smallest id on ties);
    /// returns vertices in removal order.
    pub fn degeneracy_order(&self) -> Vec<VertexId> {
        let mut deg: BTreeMap<VertexId, usize> =
            self.vertices().map(|v| (v, self.degree(v))).collect();
        let mut alive: BTreeSet<VertexId> = self.vertex_set();
        let mut order = Vec::with_capacity(alive.len());
        while !alive.is_empty() {
            let &v = alive
                .iter()
                .min_by_key(|&&v| (deg[&v], v))
                .expect("alive nonempty");
            alive.remove(&v);
            order.push(v);
            for &u in self.neighbors(v) {
                if alive.contains(&u) {
                    *deg.get_mut(&u).expect("alive vertex") -= 1;
                }
            }
        }
        order
    }

    /// Edge-list text. Lines: optional header "p <n> <m>", comments starting
    /// with '#', edges "u v", and single-id lines declaring a vertex (the way
    /// isolated vertices survive a round trip).
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Graph::new();
        let mut header: Option<(usize, usize)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks[0] == "p" {
                if header.is_some() || g.n_vertices() > 0 {
                    return Err(Error::parse(lineno, "header must be the first entry"));
                }
                if toks.len() != 3 {
                    return Err(Error::parse(lineno, "header must be 'p <n> <m>'"));
                }
                let n = toks[1]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad vertex count"))?;
                let m = toks[2]
                    .parse()
                    .map_err(|_| Error::parse(lineno, "bad edge count"))?;
                header = Some((n, m));
                continue;
            }
            let num = |t: &str| -> Result<VertexId> {
                t.parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex id '{t}'")))
            };
            match toks.as_slice() {
                [v] => g.add_vertex(num(v)?),
                [u, v] => {
                    let (u, v) = (num(u)?, num(v)?);
                    g.add_edge(u, v).map_err(|e| match e {
                        Error::InvalidGraph { message, .. } => Error::invalid(Some(lineno), message),
                        other => other,
                    })?;
                }
                _ => return Err(Error::parse(lineno, "expected 'u v' or a single vertex id")),
            }
        }
        if let Some((n, m)) = header {
            if n != g.n_vertices() || m != g.n_edges() {
                return Err(Error::invalid(
                    None,
                    format!(
                        "header claims {n} vertices / {m} edges, found {} / {}",
                        g.n_vertices(),
                        g.n_edges()
                    ),
                ));
            }
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {} {}", self.n_vertices(), self.n_edges())?;
        for v in self.vertices() {
            if self.degree(v) == 0 {
                writeln!(f, "{v}")?;
            }
        }
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

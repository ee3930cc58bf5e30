//! Exact PCF solver: backtracking oracle for χ_pcf and the tree 3-coloring.

use crate::coloring::{verify_pcf, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Default vertex cap for exhaustive search; override with the _with_limit
/// variants when patience allows.
pub const DEFAULT_SOLVER_LIMIT: usize = 24;

/// Finds some PCF c-coloring or proves none exists (exhaustive).
pub fn pcf_color_exact(g: &Graph, c: u32) -> Result<Option<Coloring>> {
    pcf_color_exact_with_limit(g, c, DEFAULT_SOLVER_LIMIT)
}

pub fn pcf_color_exact_with_limit(g: &Graph, c: u32, limit: usize) -> Result<Option<Coloring>> {
    guard(g, limit)?;
    if c == 0 {
        // Only the null graph admits an empty palette.
        return Ok((g.n_vertices() == 0).then(|| Coloring::new(0)));
    }
    let mut search = Search::new(g, c);
    if !search.feasible_start() {
        return Ok(None);
    }
    if !search.solve(0, 0) {
        return Ok(None);
    }
    let mut phi = Coloring::new(c);
    for (i, &v) in search.ids.iter().enumerate() {
        phi.set(v, search.color[i])?;
    }
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        phi.set(v, 1)?;
    }
    debug_assert_eq!(verify_pcf(g, &phi)?, vec![]);
    Ok(Some(phi))
}

/// Exact PCF chromatic number by iterating the palette size upward.
pub fn chi_pcf_exact(g: &Graph) -> Result<u32> {
    chi_pcf_exact_with_limit(g, DEFAULT_SOLVER_LIMIT)
}

pub fn chi_pcf_exact_with_limit(g: &Graph, limit: usize) -> Result<u32> {
    guard(g, limit)?;
    if g.n_vertices() == 0 {
        return Ok(0);
    }
    let mut c = if g.n_edges() == 0 { 1 } else { 2 };
    loop {
        if pcf_color_exact_with_limit(g, c, limit)?.is_some() {
            return Ok(c);
        }
        c += 1;
    }
}

/// Parallel yes/no query: is there any PCF c-coloring? Same verdict as the
/// sequential solver; subtrees under short color prefixes run in parallel.
pub fn pcf_colorable(g: &Graph, c: u32) -> Result<bool> {
    pcf_colorable_with_limit(g, c, DEFAULT_SOLVER_LIMIT)
}

pub fn pcf_colorable_with_limit(g: &Graph, c: u32, limit: usize) -> Result<bool> {
    guard(g, limit)?;
    let probe = Search::new(g, c);
    if !probe.feasible_start() {
        return Ok(false);
    }
    let depth = probe.ids.len().min(3);
    if depth == 0 {
        return Ok(true);
    }
    let mut prefixes = Vec::new();
    collect_prefixes(&mut Search::new(g, c), 0, 0, depth, &mut prefixes);
    Ok(prefixes.into_par_iter().any(|prefix| {
        let mut search = Search::new(g, c);
        let mut used = 0;
        for (i, &col) in prefix.iter().enumerate() {
            assert!(search.place(i, col));
            used = used.max(col);
        }
        search.solve(depth, used)
    }))
}

fn collect_prefixes(search: &mut Search, i: usize, used: u32, depth: usize, out: &mut Vec<Vec<u32>>) {
    if i == depth {
        out.push(search.color[..depth].to_vec());
        return;
    }
    for col in 1..=search.c.min(used + 1) {
        if search.place(i, col) {
            collect_prefixes(search, i + 1, used.max(col), depth, out);
            search.unplace(i, col);
        }
    }
}

/// Colors a forest by depth mod 3 from a leaf root per component.
pub fn tree_pcf3(t: &Graph) -> Result<Coloring> {
    let mut phi = Coloring::new(3);
    for comp in t.components() {
        if comp.len() == 1 {
            phi.set(*comp.first().unwrap(), 1)?;
            continue;
        }
        if t.induced(&comp).n_edges() != comp.len() - 1 {
            // A connected component with ≥ |V| edges contains a cycle.
            return Err(Error::NotAForest {
                cycle_vertex: *comp.first().unwrap(),
            });
        }
        // Depth mod 3 from an internal root repeats one color on all its
        // children, so the root must be a leaf: pick the smallest-id one.
        let root = *comp
            .iter()
            .find(|&&v| t.degree(v) == 1)
            .expect("a tree on ≥ 2 vertices has a leaf");
        for (v, depth) in t.bfs_distances(root) {
            phi.set(v, (depth % 3) as u32 + 1)?;
        }
    }
    Ok(phi)
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.n_vertices() > limit {
        return Err(Error::TooLarge {
            vertices: g.n_vertices(),
            limit,
        });
    }
    Ok(())
}

// Backtracking state over non-isolated vertices in reverse degeneracy order
// (smallest-last), dense-indexed. Colors tried smallest-first with new colors
// capped at one past the maximum used, which preserves the lexicographically
// first solution because color classes of a PCF coloring may be permuted.
struct Search {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    color: Vec<u32>,
    counts: Vec<Vec<u16>>,
    remaining: Vec<u32>,
    c: u32,
}

impl Search {
    fn new(g: &Graph, c: u32) -> Search {
        let mut ids: Vec<VertexId> = g.degeneracy_order();
        ids.reverse();
        ids.retain(|&v| g.degree(v) > 0);
        let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj: Vec<Vec<usize>> = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().map(|u| index[u]).collect())
            .collect();
        let remaining = adj.iter().map(|ns| ns.len() as u32).collect();
        Search {
            color: vec![0; ids.len()],
            counts: vec![vec![0; c as usize + 1]; ids.len()],
            ids,
            adj,
            remaining,
            c,
        }
    }

    fn feasible_start(&self) -> bool {
        self.ids.is_empty() || self.c >= 2
    }

    // Attempts to color vertex i; updates neighbor tallies and rejects
    // improper or singleton-dead states. True means the move stands.
    fn place(&mut self, i: usize, col: u32) -> bool {
        if self.counts[i][col as usize] > 0 {
            return false;
        }
        self.color[i] = col;
        for n in 0..self.adj[i].len() {
            let u = self.adj[i][n];
            self.counts[u][col as usize] += 1;
            self.remaining[u] -= 1;
        }
        for n in 0..self.adj[i].len() {
            let u = self.adj[i][n];
            if !self.alive(u) {
                self.unplace(i, col);
                return false;
            }
        }
        true
    }

    fn unplace(&mut self, i: usize, col: u32) {
        self.color[i] = 0;
        for n in 0..self.adj[i].len() {
            let u = self.adj[i][n];
            self.counts[u][col as usize] -= 1;
            self.remaining[u] += 1;
        }
    }

    // A vertex stays viable while some color occurs exactly once on its
    // colored neighbors, or a never-seen color can still arrive. Counts only
    // grow, so failure here is permanent along this branch.
    fn alive(&self, u: usize) -> bool {
        let counts = &self.counts[u];
        if (1..=self.c).any(|cc| counts[cc as usize] == 1) {
            return true;
        }
        self.remaining[u] > 0 && (1..=self.c).any(|cc| counts[cc as usize] == 0)
    }

    fn solve(&mut self, i: usize, used: u32) -> bool {
        if i == self.ids.len() {
            return true;
        }
        for col in 1..=self.c.min(used + 1) {
            if self.place(i, col) {
                if self.solve(i + 1, used.max(col)) {
                    return true;
                }
                self.unplace(i, col);
            }
        }
        false
    }
}

//! Partial vertex colorings, the PCF verifier, and the unique-color map.
//!
//! A coloring is proper conflict-free (PCF) when it is proper and every
//! non-isolated vertex sees some color exactly once on its neighborhood.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Partial assignment of colors 1..=palette to vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: BTreeMap<VertexId, u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(palette: u32) -> Coloring {
        Coloring {
            colors: BTreeMap::new(),
            palette,
        }
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.colors.get(&v).copied()
    }

    /// Assigns (or re-assigns) a color; rejects colors outside 1..=palette.
    pub fn set(&mut self, v: VertexId, color: u32) -> Result<()> {
        if color == 0 || color > self.palette {
            return Err(Error::ColorOutOfRange {
                vertex: v,
                color,
                palette: self.palette,
            });
        }
        self.colors.insert(v, color);
        Ok(())
    }

    /// Removes v's color (extension steps occasionally erase and recolor).
    pub fn unset(&mut self, v: VertexId) -> Option<u32> {
        self.colors.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    pub fn is_total_on(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.colors.contains_key(&v))
    }

    /// Parses "v color" lines; '#' starts a comment, blank lines are skipped.
    pub fn parse(text: &str, palette: u32) -> Result<Coloring> {
        let mut phi = Coloring::new(palette);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (v, c) = (parts.next(), parts.next());
            if parts.next().is_some() {
                return Err(Error::parse(idx + 1, "expected \"vertex color\""));
            }
            let (v, c) = match (v, c) {
                (Some(v), Some(c)) => (v, c),
                _ => return Err(Error::parse(idx + 1, "expected \"vertex color\"")),
            };
            let v: VertexId = v
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("bad vertex id {v:?}")))?;
            let c: u32 = c
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("bad color {c:?}")))?;
            if phi.get(v).is_some() {
                return Err(Error::parse(idx + 1, format!("vertex {v} colored twice")));
            }
            phi.set(v, c)?;
        }
        Ok(phi)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, c) in &self.colors {
            writeln!(f, "{v} {c}")?;
        }
        Ok(())
    }
}

/// One way a total coloring fails to be PCF.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// Edge whose endpoints share a color.
    ImproperEdge(VertexId, VertexId),
    /// Non-isolated vertex with no color occurring exactly once on N(v).
    NoUniqueColor(VertexId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ImproperEdge(u, v) => write!(f, "improper edge {u} {v}"),
            Violation::NoUniqueColor(v) => write!(f, "no unique color at {v}"),
        }
    }
}

/// Checks a total coloring; Ok(vec) lists all violations in sorted order
/// (empty means PCF). Partial colorings are an error, not a violation.
pub fn verify_pcf(g: &Graph, phi: &Coloring) -> Result<Vec<Violation>> {
    if let Some(v) = g.vertices().find(|&v| phi.get(v).is_none()) {
        return Err(Error::IncompleteColoring { vertex: v });
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if phi.get(u) == phi.get(v) {
            out.push(Violation::ImproperEdge(u, v));
        }
    }
    for v in g.vertices() {
        if g.degree(v) > 0 && singleton_colors(g, phi, v).is_empty() {
            out.push(Violation::NoUniqueColor(v));
        }
    }
    out.sort();
    Ok(out)
}

/// Multiplicity of each color among v's currently-colored neighbors.
pub fn neighbor_color_counts(g: &Graph, phi: &Coloring, v: VertexId) -> BTreeMap<u32, usize> {
    let mut counts = BTreeMap::new();
    for &u in g.neighbors(v) {
        if let Some(c) = phi.get(u) {
            *counts.entry(c).or_insert(0) += 1;
        }
    }
    counts
}

/// Distinct colors on v's currently-colored neighbors.
pub fn neighborhood_colors(g: &Graph, phi: &Coloring, v: VertexId) -> BTreeSet<u32> {
    g.neighbors(v).iter().filter_map(|&u| phi.get(u)).collect()
}

/// Colors occurring exactly once among v's currently-colored neighbors.
pub fn singleton_colors(g: &Graph, phi: &Coloring, v: VertexId) -> BTreeSet<u32> {
    neighbor_color_counts(g, phi, v)
        .into_iter()
        .filter(|&(_, n)| n == 1)
        .map(|(c, _)| c)
        .collect()
}

/// The designated protected singleton: the smallest color unique on N(v).
pub fn designated_singleton(g: &Graph, phi: &Coloring, v: VertexId) -> Option<u32> {
    singleton_colors(g, phi, v).into_iter().next()
}

/// Per-vertex singleton-color sets for a whole (possibly partial) coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniqueColorMap {
    sets: BTreeMap<VertexId, BTreeSet<u32>>,
}

impl UniqueColorMap {
    pub fn singletons(&self, v: VertexId) -> &BTreeSet<u32> {
        static EMPTY: BTreeSet<u32> = BTreeSet::new();
        self.sets.get(&v).unwrap_or(&EMPTY)
    }

    /// Defined iff some color is unique on v's colored neighborhood.
    pub fn designated(&self, v: VertexId) -> Option<u32> {
        self.singletons(v).iter().next().copied()
    }
}

/// Computes the singleton-color set of every vertex under phi.
pub fn unique_colors(g: &Graph, phi: &Coloring) -> UniqueColorMap {
    UniqueColorMap {
        sets: g
            .vertices()
            .map(|v| (v, singleton_colors(g, phi, v)))
            .collect(),
    }
}

/// Smallest color in 1..=palette outside the avoid set, if any.
pub fn smallest_admissible(palette: u32, avoid: &BTreeSet<u32>) -> Option<u32> {
    (1..=palette).find(|c| !avoid.contains(c))
}

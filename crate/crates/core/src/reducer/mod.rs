//! Reduction engine: peel reducible configurations, color the remainder,
//! extend back, and record every step in a trace.

mod brooks;
mod config;
mod extend;

pub use brooks::brooks_proper_color;
pub use config::{find_config, Config, ConfigKind, Mode};
pub use extend::extend;

use std::collections::BTreeSet;

use crate::coloring::{neighborhood_colors, singleton_colors, smallest_admissible, Coloring};
use crate::coloring::verify_pcf;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::mad::{mad_at_most, mad_exact, mad_less_than};
use crate::plane::PlaneGraph;
use crate::rational::ratio;
use crate::solver::{pcf_color_exact, DEFAULT_SOLVER_LIMIT};
use crate::structure::{find_induced_c5, find_kstar_subgraph, recognize_one_subdivision_of_regular};

/// How a recursion branch bottomed out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TerminalCase {
    /// No edges left; every remaining vertex takes color 1.
    Empty,
    /// A component whose vertices all have degree 2, colored by a fixed
    /// pattern; listed in traversal order.
    CycleComponent { vertices: Vec<VertexId> },
    /// The whole remainder is a 1-subdivision of an `r`-regular graph.
    RegularSubdivision { r: usize },
    /// A small remainder handed to the exhaustive solver.
    ExactFallback { vertices: BTreeSet<VertexId> },
}

/// One step of the reduction: either a configuration was deleted and later
/// re-extended, or a terminal case finished a branch.
#[derive(Debug, Clone)]
pub enum TraceStep {
    Reduce { config: Config, n_before: usize },
    Terminal { case: TerminalCase, n_before: usize },
}

impl TraceStep {
    /// Number of vertices in the graph this step was taken on.
    pub fn n_before(&self) -> usize {
        match self {
            TraceStep::Reduce { n_before, .. } | TraceStep::Terminal { n_before, .. } => *n_before,
        }
    }
}

/// The full reduction history, in the order steps were taken.
#[derive(Debug, Clone, Default)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

/// Knobs for [`color_with_options`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ColorOptions {
    /// Reject inputs violating the density/forbidden-subgraph hypotheses up
    /// front, with a witness in the error.
    pub check_hypotheses: bool,
    /// Allow the exhaustive solver on small irreducible remainders.
    pub exact_fallback: bool,
}

/// Colors `g` conflict-free with palette `1..=c` by reduction.
pub fn color(g: &Graph, c: u32) -> Result<(Coloring, ReductionTrace)> {
    color_with_options(g, c, ColorOptions::default())
}

/// [`color`] with explicit options.
pub fn color_with_options(
    g: &Graph,
    c: u32,
    options: ColorOptions,
) -> Result<(Coloring, ReductionTrace)> {
    if c < 4 {
        return Err(Error::UnsatisfiableParameters {
            message: format!("reduction needs a palette of at least 4, got {c}"),
        });
    }
    if options.check_hypotheses {
        check_hypotheses(g, c)?;
    }
    let mut trace = ReductionTrace::default();
    let phi = color_rec(g, c, Mode::Sparse, None, options, &mut trace)?;
    debug_assert!(verify_pcf(g, &phi)?.is_empty());
    Ok((phi, trace))
}

/// Colors a plane graph of girth at least 5 with 7 colors.
pub fn color_planar7(pg: &PlaneGraph) -> Result<(Coloring, ReductionTrace)> {
    let g = pg.graph();
    if let Some(found) = g.girth() {
        if found < 5 {
            return Err(Error::GirthBelow { required: 5, found });
        }
    }
    let mut trace = ReductionTrace::default();
    let phi = color_rec(g, 7, Mode::Planar7, Some(pg), ColorOptions::default(), &mut trace)?;
    debug_assert!(verify_pcf(g, &phi)?.is_empty());
    Ok((phi, trace))
}

/// Rejects inputs outside the guaranteed-success regime: a 1-subdivided
/// complete graph on `c + 1` branch vertices, density above the bound for
/// `c`, or (at `c = 4`) an induced 5-cycle.
fn check_hypotheses(g: &Graph, c: u32) -> Result<()> {
    if g.n_vertices() == 0 {
        return Ok(());
    }
    if let Some(witness) = find_kstar_subgraph(g, c as usize + 1) {
        return Err(Error::KstarSubgraph { k: c + 1, witness });
    }
    let (bound, within) = if c == 4 {
        let bound = ratio(12, 5);
        (bound, mad_less_than(g, bound))
    } else {
        let bound = ratio(4 * c as i128, c as i128 + 2);
        (bound, mad_at_most(g, bound))
    };
    if !within {
        let exact = mad_exact(g)?;
        return Err(Error::MadExceedsBound {
            bound,
            value: exact.value,
            witness: exact.witness,
        });
    }
    if c == 4 {
        if let Some(cycle) = find_induced_c5(g) {
            return Err(Error::InducedC5 { cycle });
        }
    }
    Ok(())
}

fn color_rec(
    g: &Graph,
    c: u32,
    mode: Mode,
    pg: Option<&PlaneGraph>,
    options: ColorOptions,
    trace: &mut ReductionTrace,
) -> Result<Coloring> {
    let n = g.n_vertices();
    if g.n_edges() == 0 {
        let mut phi = Coloring::new(c);
        for v in g.vertices() {
            phi.set(v, 1)?;
        }
        trace.steps.push(TraceStep::Terminal {
            case: TerminalCase::Empty,
            n_before: n,
        });
        return Ok(phi);
    }

    // Peel one all-degree-2 component; its pattern never interacts with the
    // rest of the graph.
    if let Some(comp) = g
        .components()
        .into_iter()
        .find(|comp| comp.iter().all(|&v| g.degree(v) == 2))
    {
        let order = cycle_order(g, &comp);
        let Some(pattern) = cycle_colors(order.len(), c) else {
            return Err(Error::Stuck {
                residual: g.induced(&comp),
            });
        };
        trace.steps.push(TraceStep::Terminal {
            case: TerminalCase::CycleComponent {
                vertices: order.clone(),
            },
            n_before: n,
        });
        let rest = g.without_vertices(&comp);
        let rest_pg = pg.map(|p| p.delete_vertices(&comp)).transpose()?;
        let mut phi = color_rec(&rest, c, mode, rest_pg.as_ref(), options, trace)?;
        for (&v, &col) in order.iter().zip(pattern.iter()) {
            phi.set(v, col)?;
        }
        return Ok(phi);
    }

    if let Some(cfg) = find_config(g, c, mode, pg)? {
        trace.steps.push(TraceStep::Reduce {
            config: cfg.clone(),
            n_before: n,
        });
        let rest = g.without_vertices(cfg.deletion_set());
        let rest_pg = pg.map(|p| p.delete_vertices(cfg.deletion_set())).transpose()?;
        let phi = color_rec(&rest, c, mode, rest_pg.as_ref(), options, trace)?;
        return extend(&cfg, g, c, phi);
    }

    if let Some(phi) = subdivision_terminal(g, c, trace)? {
        return Ok(phi);
    }

    if options.exact_fallback && n <= DEFAULT_SOLVER_LIMIT {
        if let Some(phi) = pcf_color_exact(g, c)? {
            trace.steps.push(TraceStep::Terminal {
                case: TerminalCase::ExactFallback {
                    vertices: g.vertex_set(),
                },
                n_before: n,
            });
            return Ok(phi);
        }
    }

    Err(Error::Stuck {
        residual: g.clone(),
    })
}

/// Lists a degree-2 component in traversal order, starting at its smallest
/// vertex and moving toward that vertex's smaller neighbor.
fn cycle_order(g: &Graph, comp: &BTreeSet<VertexId>) -> Vec<VertexId> {
    let start = *comp.iter().next().expect("components are nonempty");
    let mut order = vec![start];
    let (mut prev, mut cur) = (start, start);
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("degree-2 vertices have a forward neighbor");
        if next == start {
            return order;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
}

/// The fixed conflict-free pattern for a cycle of length `n`, or `None` for
/// the genuinely uncolorable five-cycle on a four-color palette.
fn cycle_colors(n: usize, c: u32) -> Option<Vec<u32>> {
    let triples = |k: usize| [1, 2, 3].into_iter().cycle().take(3 * k);
    match n % 3 {
        0 => Some(triples(n / 3).collect()),
        1 => Some(triples((n - 4) / 3).chain([1, 2, 3, 4]).collect()),
        _ if n == 5 && c >= 5 => Some(vec![1, 2, 3, 4, 5]),
        _ if n == 5 => None,
        _ => Some(triples((n - 5) / 3).chain([4, 1, 2, 3, 4]).collect()),
    }
}

/// Recognizes the whole remainder as a 1-subdivision of an `r`-regular graph
/// and colors it: branch vertices properly via the Brooks construction, then
/// a guarded sweep over the middles. Returns `None` (leaving the graph for a
/// later strategy) when the shape is absent or the sweep cannot finish.
fn subdivision_terminal(
    g: &Graph,
    c: u32,
    trace: &mut ReductionTrace,
) -> Result<Option<Coloring>> {
    let Some((g0, r)) = recognize_one_subdivision_of_regular(g) else {
        return Ok(None);
    };
    let mut phi = match brooks_proper_color(&g0, c) {
        Ok(phi) => phi,
        Err(Error::BrooksPrecondition { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let middles: Vec<VertexId> = g.vertices().filter(|&v| !g0.contains_vertex(v)).collect();
    for &m in &middles {
        let ends: Vec<VertexId> = g.neighbors(m).iter().copied().collect();
        let mut avoid: BTreeSet<u32> = ends.iter().filter_map(|&w| phi.get(w)).collect();
        for &w in &ends {
            // The last middle at a branch vertex must leave it a unique color.
            let last_here = g.neighbors(w).iter().all(|&x| x == m || phi.get(x).is_some());
            if !last_here {
                continue;
            }
            let s = singleton_colors(g, &phi, w);
            if s.is_empty() {
                avoid.extend(neighborhood_colors(g, &phi, w));
            } else if s.len() == 1 {
                avoid.extend(s);
            }
        }
        match smallest_admissible(c, &avoid) {
            Some(col) => phi.set(m, col)?,
            None => return Ok(None),
        }
    }
    if !verify_pcf(g, &phi)?.is_empty() {
        return Ok(None);
    }
    trace.steps.push(TraceStep::Terminal {
        case: TerminalCase::RegularSubdivision { r },
        n_before: g.n_vertices(),
    });
    Ok(Some(phi))
}

//! Discharging engine: initial charges, the four fixed rule systems, exact
//! rational ledgers, and audits pairing charge deficits with configurations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::plane::PlaneGraph;
use crate::rational::{ratio, Rational};
use crate::reducer::{find_config, Config, Mode};
use crate::structure::recognize_one_subdivision_of_regular;
use crate::threads::close_neighbors;

/// The four fixed rule systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleSetId {
    /// Degree charges; 3⁺-vertices pay 1/5 per close neighbor.
    C4,
    /// Degree charges; 3/7 per 2-neighbor, 1/7 to poor 3- and 4-neighbors.
    C5,
    /// Degree charges with palette-parametric amounts, defined for c ≥ 6.
    C6Plus(u32),
    /// Vertex and face charges on girth-5 plane graphs.
    Planar5,
}

impl RuleSetId {
    /// The final-charge bound the system is meant to establish.
    pub fn bound(self) -> Rational {
        match self {
            RuleSetId::C4 => ratio(12, 5),
            RuleSetId::C5 => ratio(20, 7),
            RuleSetId::C6Plus(c) => ratio(4 * i128::from(c), i128::from(c) + 2),
            RuleSetId::Planar5 => ratio(0, 1),
        }
    }

    fn validate(self) -> Result<()> {
        if let RuleSetId::C6Plus(c) = self {
            if c < 6 {
                return Err(Error::RuleSetMismatch {
                    message: format!("palette-parametric rules need c >= 6, got {c}"),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for RuleSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleSetId::C4 => write!(f, "c4"),
            RuleSetId::C5 => write!(f, "c5"),
            RuleSetId::C6Plus(c) => write!(f, "c6:{c}"),
            RuleSetId::Planar5 => write!(f, "planar5"),
        }
    }
}

/// A charged element: vertices everywhere, faces under the planar system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(i) => write!(f, "f{i}"),
        }
    }
}

/// One application of a rule clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: &'static str,
    pub from: Element,
    pub to: Element,
    pub amount: Rational,
}

/// Initial charges, the transfers applied, and the resulting final charges.
#[derive(Debug, Clone)]
pub struct ChargeLedger {
    pub initial: BTreeMap<Element, Rational>,
    pub transfers: Vec<Transfer>,
    pub final_charges: BTreeMap<Element, Rational>,
}

impl ChargeLedger {
    fn from_parts(initial: BTreeMap<Element, Rational>, mut transfers: Vec<Transfer>) -> ChargeLedger {
        transfers.sort_by(|a, b| (a.rule, a.from, a.to).cmp(&(b.rule, b.from, b.to)));
        let mut final_charges = initial.clone();
        for t in &transfers {
            *final_charges.get_mut(&t.from).expect("transfer source is charged") -= t.amount;
            *final_charges.get_mut(&t.to).expect("transfer target is charged") += t.amount;
        }
        ChargeLedger {
            initial,
            transfers,
            final_charges,
        }
    }

    pub fn total_initial(&self) -> Rational {
        self.initial.values().fold(ratio(0, 1), |a, &b| a + b)
    }

    pub fn total_final(&self) -> Rational {
        self.final_charges.values().fold(ratio(0, 1), |a, &b| a + b)
    }

    /// Exact conservation: every element's final charge equals its initial
    /// charge plus inflow minus outflow, and the totals agree.
    pub fn conserved(&self) -> bool {
        let mut flux: BTreeMap<Element, Rational> = BTreeMap::new();
        for t in &self.transfers {
            *flux.entry(t.from).or_insert_with(|| ratio(0, 1)) -= t.amount;
            *flux.entry(t.to).or_insert_with(|| ratio(0, 1)) += t.amount;
        }
        self.total_initial() == self.total_final()
            && self.initial.iter().all(|(e, &init)| {
                let delta = flux.get(e).copied().unwrap_or_else(|| ratio(0, 1));
                self.final_charges.get(e) == Some(&(init + delta))
            })
    }
}

/// Vertex and face classification of a plane graph for the planar rules.
#[derive(Debug, Clone)]
pub struct PlanarClassification {
    /// 5-faces whose boundary has exactly two 2-vertices and three 8⁻-vertices.
    pub terrible: BTreeSet<usize>,
    /// Per face: its giving vertices (4⁺ with a 3⁺ boundary neighbor on it).
    pub giving: BTreeMap<usize, BTreeSet<VertexId>>,
    /// F*5(v): the 5-faces incident with v on which v is giving.
    pub fstar5: BTreeMap<VertexId, BTreeSet<usize>>,
    /// 4-vertices with exactly one 2-neighbor, 5-vertices with two 2-neighbors
    /// and five giving 5-faces, and 5-vertices with three 2-neighbors.
    pub bad: BTreeSet<VertexId>,
    /// X(v): boundary 3⁺-neighbors of v on terrible faces incident with v.
    pub x_sets: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl PlanarClassification {
    pub fn fstar5(&self, v: VertexId) -> &BTreeSet<usize> {
        static EMPTY: BTreeSet<usize> = BTreeSet::new();
        self.fstar5.get(&v).unwrap_or(&EMPTY)
    }

    pub fn x_set(&self, v: VertexId) -> &BTreeSet<VertexId> {
        static EMPTY: BTreeSet<VertexId> = BTreeSet::new();
        self.x_sets.get(&v).unwrap_or(&EMPTY)
    }

    /// t(v): how many boundary 3⁺-neighbors v has on incident terrible faces.
    pub fn t(&self, v: VertexId) -> usize {
        self.x_set(v).len()
    }

    pub fn is_bad(&self, v: VertexId) -> bool {
        self.bad.contains(&v)
    }

    pub fn is_good(&self, g: &Graph, v: VertexId) -> bool {
        g.degree(v) >= 4 && !self.bad.contains(&v)
    }
}

/// Classifies faces (terrible, giving) and vertices (bad, X sets) of `pg`.
pub fn classify_planar(pg: &PlaneGraph) -> PlanarClassification {
    let g = pg.graph();
    let mut terrible = BTreeSet::new();
    let mut giving: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
    let mut fstar5: BTreeMap<VertexId, BTreeSet<usize>> = BTreeMap::new();

    for (i, f) in pg.faces().iter().enumerate() {
        let on_face: BTreeSet<VertexId> = f.walk().iter().copied().collect();
        for &v in &on_face {
            if g.degree(v) >= 4 && f.boundary_neighbors(v).iter().any(|&u| g.degree(u) >= 3) {
                giving.entry(i).or_default().insert(v);
                if f.len() == 5 {
                    fstar5.entry(v).or_default().insert(i);
                }
            }
        }
        if f.len() == 5 && on_face.len() == 5 {
            let twos = on_face.iter().filter(|&&v| g.degree(v) == 2).count();
            let light = on_face.iter().all(|&v| g.degree(v) <= 8);
            if twos == 2 && light {
                terrible.insert(i);
            }
        }
    }

    let mut bad = BTreeSet::new();
    for v in g.vertices() {
        let (d, n2) = (g.degree(v), g.n2(v));
        let f5 = fstar5.get(&v).map_or(0, |s| s.len());
        if (d == 4 && n2 == 1) || (d == 5 && n2 == 2 && f5 == 5) || (d == 5 && n2 == 3) {
            bad.insert(v);
        }
    }

    let mut x_sets: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for &i in &terrible {
        let f = &pg.faces()[i];
        for &v in &f.walk().iter().copied().collect::<BTreeSet<_>>() {
            for u in f.boundary_neighbors(v) {
                if g.degree(u) >= 3 {
                    x_sets.entry(v).or_default().insert(u);
                }
            }
        }
    }

    PlanarClassification {
        terrible,
        giving,
        fstar5,
        bad,
        x_sets,
    }
}

/// Initial vertex charges for the degree-based systems.
pub fn initial_charges(g: &Graph, rs: RuleSetId) -> Result<BTreeMap<Element, Rational>> {
    rs.validate()?;
    if rs == RuleSetId::Planar5 {
        return Err(Error::RuleSetMismatch {
            message: "the planar rule system charges faces; use initial_charges_planar".into(),
        });
    }
    Ok(g.vertices()
        .map(|v| (Element::Vertex(v), ratio(g.degree(v) as i128, 1)))
        .collect())
}

/// Initial charges 2d(v) − 6 per vertex and d(f) − 6 per face.
pub fn initial_charges_planar(pg: &PlaneGraph) -> Result<BTreeMap<Element, Rational>> {
    if let Some(girth) = pg.graph().girth() {
        if girth < 5 {
            return Err(Error::GirthBelow {
                required: 5,
                found: girth,
            });
        }
    }
    let mut charges: BTreeMap<Element, Rational> = pg
        .graph()
        .vertices()
        .map(|v| (Element::Vertex(v), ratio(2 * pg.graph().degree(v) as i128 - 6, 1)))
        .collect();
    for (i, f) in pg.faces().iter().enumerate() {
        charges.insert(Element::Face(i), ratio(f.len() as i128 - 6, 1));
    }
    Ok(charges)
}

/// Runs a degree-based rule system and returns the full ledger.
pub fn run(g: &Graph, rs: RuleSetId) -> Result<ChargeLedger> {
    let initial = initial_charges(g, rs)?;
    let transfers = match rs {
        RuleSetId::C4 => c4_transfers(g),
        RuleSetId::C5 => c5_transfers(g),
        RuleSetId::C6Plus(c) => c6plus_transfers(g, c),
        RuleSetId::Planar5 => unreachable!("rejected by initial_charges"),
    };
    Ok(ChargeLedger::from_parts(initial, transfers))
}

/// Runs the planar rule system on a girth-5 plane graph.
pub fn run_planar(pg: &PlaneGraph) -> Result<ChargeLedger> {
    let initial = initial_charges_planar(pg)?;
    let cls = classify_planar(pg);
    let g = pg.graph();
    let mut out = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        if d >= 4 {
            for &u in g.neighbors(v) {
                if g.degree(u) == 2 {
                    push(&mut out, "R1", Element::Vertex(v), Element::Vertex(u), ratio(1, 1));
                }
            }
            // Good vertices pay every giving 5-face; bad vertices pay terrible
            // faces more and the rest less, graded by their 2-neighbor count.
            for &f in cls.fstar5(v) {
                let (rule, amount) = if !cls.is_bad(v) {
                    ("R2", ratio(1, 2))
                } else if cls.terrible.contains(&f) {
                    ("R3", ratio(1, 2))
                } else if d == 5 && g.n2(v) == 2 {
                    ("R3A", ratio(1, 3))
                } else {
                    ("R3B", ratio(1, 4))
                };
                push(&mut out, rule, Element::Vertex(v), Element::Face(f), amount);
            }
        }
        if d >= 9 {
            for f in pg.incident_faces(v) {
                if pg.faces()[f].len() == 5 {
                    push(&mut out, "R4", Element::Vertex(v), Element::Face(f), ratio(1, 3));
                }
            }
        }
    }
    Ok(ChargeLedger::from_parts(initial, out))
}

fn push(out: &mut Vec<Transfer>, rule: &'static str, from: Element, to: Element, amount: Rational) {
    out.push(Transfer {
        rule,
        from,
        to,
        amount,
    });
}

fn c4_transfers(g: &Graph) -> Vec<Transfer> {
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) >= 3) {
        // close_neighbors is a multiset: a thread attached at both ends pays twice.
        for u in close_neighbors(g, v) {
            push(&mut out, "R1", Element::Vertex(v), Element::Vertex(u), ratio(1, 5));
        }
    }
    out
}

fn c5_transfers(g: &Graph) -> Vec<Transfer> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        if d >= 3 {
            for &u in g.neighbors(v) {
                if g.degree(u) == 2 {
                    push(&mut out, "R1", Element::Vertex(v), Element::Vertex(u), ratio(3, 7));
                }
            }
        }
        if d >= 4 {
            for &u in g.neighbors(v) {
                let poor3 = g.degree(u) == 3 && g.n2(u) >= 1;
                let poor4 = g.degree(u) == 4 && g.n2(u) >= 3;
                if poor3 || poor4 {
                    push(&mut out, "R2", Element::Vertex(v), Element::Vertex(u), ratio(1, 7));
                }
            }
        }
    }
    out
}

fn c6plus_transfers(g: &Graph, c: u32) -> Vec<Transfer> {
    let c = i128::from(c);
    let to_two = ratio(c - 2, c + 2);
    let to_three = ratio(c - 6, 3 * (c + 2));
    let mut out = Vec::new();
    for v in g.vertices().filter(|&v| g.degree(v) >= 4) {
        for &u in g.neighbors(v) {
            if g.degree(u) == 2 {
                push(&mut out, "R1", Element::Vertex(v), Element::Vertex(u), to_two);
            } else if g.degree(u) == 3 && c > 6 {
                // The 3-neighbor amount vanishes at c = 6; no zero transfers.
                push(&mut out, "R2", Element::Vertex(v), Element::Vertex(u), to_three);
            }
        }
    }
    out
}

/// Outcome of a full run plus charge audit: conservation, the extremes, and
/// an explanation for every element that finished below the bound.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub conserved: bool,
    pub bound: Rational,
    /// Smallest final charge; equals the bound on an empty ledger.
    pub min_final: Rational,
    /// Elements below the bound, each with its charge and a configuration
    /// found near it (inside the distance-2 ball for vertices).
    pub deficient: Vec<(Element, Rational, Option<Config>)>,
    /// When every charge sits exactly at the bound: the regular graph whose
    /// 1-subdivision the input is, with its degree.
    pub tight_structure: Option<(Graph, usize)>,
}

/// Runs `rs` on `g` and audits the final charges. A charge below the bound
/// certifies local sparsity, so each deficient vertex is paired with a
/// configuration search over its distance-2 ball; a ledger sitting exactly
/// at the bound everywhere is matched against the tight subdivision shape.
pub fn audit(g: &Graph, rs: RuleSetId) -> Result<AuditReport> {
    let ledger = run(g, rs)?;
    let c = match rs {
        RuleSetId::C4 => 4,
        RuleSetId::C5 => 5,
        RuleSetId::C6Plus(c) => c,
        RuleSetId::Planar5 => unreachable!("rejected by run"),
    };
    let bound = rs.bound();
    let mut deficient = Vec::new();
    for (&e, &charge) in &ledger.final_charges {
        if charge >= bound {
            continue;
        }
        let Element::Vertex(v) = e else { continue };
        let ball: BTreeSet<VertexId> = g
            .bfs_distances(v)
            .into_iter()
            .filter(|&(_, dist)| dist <= 2)
            .map(|(w, _)| w)
            .collect();
        let cfg = find_config(&g.induced(&ball), c, Mode::Sparse, None)?;
        deficient.push((e, charge, cfg));
    }
    let min_final = ledger.final_charges.values().copied().min().unwrap_or(bound);
    let tight_structure = if ledger.final_charges.values().all(|&q| q == bound) {
        recognize_one_subdivision_of_regular(g)
    } else {
        None
    };
    Ok(AuditReport {
        conserved: ledger.conserved(),
        bound,
        min_final,
        deficient,
        tight_structure,
    })
}

/// [`audit`] for the planar system. Faces have no vertex ball, and vertex
/// deficits reflect the global count, so every deficient element pairs with
/// one configuration search over the whole embedded graph.
pub fn audit_planar(pg: &PlaneGraph) -> Result<AuditReport> {
    let ledger = run_planar(pg)?;
    let bound = RuleSetId::Planar5.bound();
    let global = find_config(pg.graph(), 7, Mode::Planar7, Some(pg))?;
    let deficient: Vec<(Element, Rational, Option<Config>)> = ledger
        .final_charges
        .iter()
        .filter(|&(_, &charge)| charge < bound)
        .map(|(&e, &charge)| (e, charge, global.clone()))
        .collect();
    let min_final = ledger.final_charges.values().copied().min().unwrap_or(bound);
    Ok(AuditReport {
        conserved: ledger.conserved(),
        bound,
        min_final,
        deficient,
        // Total planar charge is fixed at -12, so no all-tight ledger exists.
        tight_structure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn charge(ledger: &ChargeLedger, e: Element) -> Rational {
        ledger.final_charges[&e]
    }

    #[test]
    fn cycle_under_c4_rules_keeps_degree_charges() {
        let g = generate::cycle(5).unwrap();
        let initial = initial_charges(&g, RuleSetId::C4).unwrap();
        assert!(initial.values().all(|&q| q == ratio(2, 1)));
        assert_eq!(initial.values().fold(ratio(0, 1), |a, &b| a + b), ratio(10, 1));

        let ledger = run(&g, RuleSetId::C4).unwrap();
        assert!(ledger.transfers.is_empty());
        assert!(ledger.final_charges.values().all(|&q| q == ratio(2, 1)));
        assert!(ledger.conserved());
    }

    #[test]
    fn wrap_thread_pays_twice_under_c4() {
        // Triangle 0-1-2 with a pendant path 0-3-4: close(0) = {1,1,2,2,3}.
        let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let ledger = run(&g, RuleSetId::C4).unwrap();
        assert_eq!(ledger.transfers.len(), 5);
        assert!(ledger.transfers.iter().all(|t| t.rule == "R1" && t.amount == ratio(1, 5)));
        assert_eq!(charge(&ledger, Element::Vertex(0)), ratio(2, 1));
        assert_eq!(charge(&ledger, Element::Vertex(1)), ratio(12, 5));
        assert_eq!(charge(&ledger, Element::Vertex(2)), ratio(12, 5));
        assert_eq!(charge(&ledger, Element::Vertex(3)), ratio(11, 5));
        assert_eq!(charge(&ledger, Element::Vertex(4)), ratio(1, 1));
        assert!(ledger.conserved());
    }

    #[test]
    fn subdivided_k6_reaches_the_c5_bound_everywhere() {
        let g = generate::kstar(6).unwrap();
        let initial = initial_charges(&g, RuleSetId::C5).unwrap();
        assert_eq!(initial.values().fold(ratio(0, 1), |a, &b| a + b), ratio(60, 1));

        let ledger = run(&g, RuleSetId::C5).unwrap();
        assert!(ledger.final_charges.values().all(|&q| q == ratio(20, 7)));
        assert!(ledger.conserved());
    }

    #[test]
    fn c5_pays_poor_three_and_four_neighbors() {
        // Hub h=0 (4-vertex) beside w=1 (4-vertex with three 2-neighbors).
        let g = Graph::from_edges([
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 5),
            (1, 6),
            (1, 7),
            (5, 8),
            (6, 9),
            (7, 10),
        ])
        .unwrap();
        let ledger = run(&g, RuleSetId::C5).unwrap();
        let r2: Vec<_> = ledger.transfers.iter().filter(|t| t.rule == "R2").collect();
        assert_eq!(r2.len(), 1);
        assert_eq!((r2[0].from, r2[0].to, r2[0].amount), (Element::Vertex(0), Element::Vertex(1), ratio(1, 7)));
        assert_eq!(charge(&ledger, Element::Vertex(1)), ratio(20, 7));
        assert_eq!(charge(&ledger, Element::Vertex(0)), ratio(27, 7));
        assert_eq!(charge(&ledger, Element::Vertex(5)), ratio(17, 7));
        assert!(ledger.conserved());

        // A 3-vertex with a 2-neighbor is poor too: replace the hub's view.
        let h = Graph::from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (5, 7)]).unwrap();
        let ledger = run(&h, RuleSetId::C5).unwrap();
        let r2: Vec<_> = ledger.transfers.iter().filter(|t| t.rule == "R2").collect();
        assert_eq!(r2.len(), 1);
        assert_eq!((r2[0].from, r2[0].to), (Element::Vertex(0), Element::Vertex(1)));
        assert!(ledger.conserved());
    }

    #[test]
    fn spider_is_tight_under_palette_parametric_rules() {
        // Center 0 with c legs of length 2: center lands exactly on 4c/(c+2).
        for c in [6u32, 7, 8] {
            let mut g = Graph::new();
            for leg in 0..c {
                let mid = 1 + 2 * leg;
                g.add_edge(0, mid).unwrap();
                g.add_edge(mid, mid + 1).unwrap();
            }
            let ledger = run(&g, RuleSetId::C6Plus(c)).unwrap();
            assert_eq!(charge(&ledger, Element::Vertex(0)), RuleSetId::C6Plus(c).bound());
            assert!(ledger.conserved());
            let r2 = ledger.transfers.iter().filter(|t| t.rule == "R2").count();
            assert_eq!(r2, 0);
        }
    }

    #[test]
    fn three_neighbor_transfers_vanish_at_six_and_not_above() {
        // 4-vertex 0 adjacent to 3-vertex 1; leaves elsewhere.
        let g = Graph::from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6)]).unwrap();
        let at6 = run(&g, RuleSetId::C6Plus(6)).unwrap();
        assert!(at6.transfers.is_empty());
        let at7 = run(&g, RuleSetId::C6Plus(7)).unwrap();
        assert_eq!(at7.transfers.len(), 1);
        assert_eq!(at7.transfers[0].rule, "R2");
        assert_eq!(at7.transfers[0].amount, ratio(1, 27));
        assert_eq!(charge(&at7, Element::Vertex(1)), ratio(82, 27));
    }

    #[test]
    fn rule_set_graph_kind_mismatches_error() {
        let g = generate::cycle(5).unwrap();
        assert!(matches!(initial_charges(&g, RuleSetId::Planar5), Err(Error::RuleSetMismatch { .. })));
        assert!(matches!(initial_charges(&g, RuleSetId::C6Plus(5)), Err(Error::RuleSetMismatch { .. })));
        assert!(matches!(run(&g, RuleSetId::Planar5), Err(Error::RuleSetMismatch { .. })));
    }

    #[test]
    fn dodecahedron_planar_charges_total_minus_twelve() {
        let pg = generate::dodecahedron_plane();
        let initial = initial_charges_planar(&pg).unwrap();
        let vertices = initial.iter().filter(|(e, _)| matches!(e, Element::Vertex(_)));
        assert!(vertices.clone().all(|(_, &q)| q == ratio(0, 1)));
        let faces: Vec<_> = initial
            .iter()
            .filter(|(e, _)| matches!(e, Element::Face(_)))
            .collect();
        assert_eq!(faces.len(), 12);
        assert!(faces.iter().all(|(_, &q)| q == ratio(-1, 1)));
        assert_eq!(initial.values().fold(ratio(0, 1), |a, &b| a + b), ratio(-12, 1));

        // All 3-vertices: nothing is giving, bad, or terrible; no transfers.
        let cls = classify_planar(&pg);
        assert!(cls.terrible.is_empty() && cls.bad.is_empty() && cls.giving.is_empty());
        let ledger = run_planar(&pg).unwrap();
        assert!(ledger.transfers.is_empty());
        assert!(ledger.conserved());
    }

    #[test]
    fn planar_rules_reject_small_girth() {
        let pg = generate::cycle_plane(4).unwrap();
        assert!(matches!(
            initial_charges_planar(&pg),
            Err(Error::GirthBelow { required: 5, found: 4 })
        ));
    }

    // Pentagon 0-1-2-3-4 with pendants: two 1-vertices at 0, one at 2, one
    // at 4. The pentagon face is terrible (2-vertices 1 and 3) and vertex 0
    // is bad (4-vertex, one 2-neighbor).
    fn terrible_house() -> PlaneGraph {
        let g = Graph::from_edges([
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (0, 6),
            (2, 7),
            (4, 8),
        ])
        .unwrap();
        let rotation: BTreeMap<VertexId, Vec<VertexId>> = [
            (0, vec![4, 1, 5, 6]),
            (1, vec![0, 2]),
            (2, vec![1, 3, 7]),
            (3, vec![2, 4]),
            (4, vec![3, 0, 8]),
            (5, vec![0]),
            (6, vec![0]),
            (7, vec![2]),
            (8, vec![4]),
        ]
        .into_iter()
        .collect();
        PlaneGraph::new(g, rotation).unwrap()
    }

    #[test]
    fn terrible_face_and_bad_vertex_classified_and_paid() {
        let pg = terrible_house();
        let mut lens: Vec<usize> = pg.faces().iter().map(|f| f.len()).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![5, 13]);
        let pentagon = pg.faces().iter().position(|f| f.len() == 5).unwrap();

        let cls = classify_planar(&pg);
        assert_eq!(cls.terrible, BTreeSet::from([pentagon]));
        assert_eq!(cls.bad, BTreeSet::from([0]));
        assert_eq!(cls.fstar5(0), &BTreeSet::from([pentagon]));
        assert_eq!(cls.x_set(0), &BTreeSet::from([4]));
        assert_eq!(cls.t(0), 1);
        assert!(!cls.is_good(pg.graph(), 0));

        let ledger = run_planar(&pg).unwrap();
        let kinds: Vec<_> = ledger.transfers.iter().map(|t| (t.rule, t.from, t.to, t.amount)).collect();
        assert_eq!(
            kinds,
            vec![
                ("R1", Element::Vertex(0), Element::Vertex(1), ratio(1, 1)),
                ("R3", Element::Vertex(0), Element::Face(pentagon), ratio(1, 2)),
            ]
        );
        assert_eq!(charge(&ledger, Element::Vertex(0)), ratio(1, 2));
        assert_eq!(charge(&ledger, Element::Vertex(1)), ratio(-1, 1));
        assert_eq!(charge(&ledger, Element::Face(pentagon)), ratio(-1, 2));
        assert_eq!(ledger.total_final(), ratio(-12, 1));
        assert!(ledger.conserved());
    }

    #[test]
    fn audit_recognizes_the_tight_subdivision() {
        let g = generate::kstar(6).unwrap();
        let report = audit(&g, RuleSetId::C5).unwrap();
        assert!(report.conserved);
        assert_eq!(report.min_final, ratio(20, 7));
        assert!(report.deficient.is_empty());
        let (g0, r) = report.tight_structure.expect("tight shape");
        assert_eq!(r, 5);
        assert_eq!(g0.n_vertices(), 6);
        assert_eq!(g0.n_edges(), 15);
    }

    #[test]
    fn audit_pairs_deficits_with_nearby_configurations() {
        // A path: every charge sits below 12/5, and each vertex sees a
        // pendant inside its ball.
        let g = generate::path(6).unwrap();
        let report = audit(&g, RuleSetId::C4).unwrap();
        assert!(report.conserved);
        assert_eq!(report.deficient.len(), 6);
        assert!(report
            .deficient
            .iter()
            .all(|(_, charge, cfg)| *charge < ratio(12, 5) && cfg.is_some()));
        assert!(report.tight_structure.is_none());
    }

    #[test]
    fn audit_leaves_the_five_cycle_unexplained() {
        // C5 is the one deficiency with no configuration to blame: every
        // charge is 2 but no family applies.
        let g = generate::cycle(5).unwrap();
        let report = audit(&g, RuleSetId::C4).unwrap();
        assert_eq!(report.min_final, ratio(2, 1));
        assert_eq!(report.deficient.len(), 5);
        assert!(report.deficient.iter().all(|(_, _, cfg)| cfg.is_none()));
    }

    #[test]
    fn planar_audit_blames_faces_on_the_dodecahedron() {
        let pg = generate::dodecahedron_plane();
        let report = audit_planar(&pg).unwrap();
        assert!(report.conserved);
        assert_eq!(report.min_final, ratio(-1, 1));
        // All twelve pentagons are deficient, no vertices; each pairs with
        // the configuration the embedded search finds.
        assert_eq!(report.deficient.len(), 12);
        assert!(report
            .deficient
            .iter()
            .all(|(e, charge, cfg)| matches!(e, Element::Face(_))
                && *charge == ratio(-1, 1)
                && cfg.is_some()));
    }

    #[test]
    fn audit_routes_the_planar_system_through_embeddings() {
        let g = generate::cycle(6).unwrap();
        assert!(matches!(
            audit(&g, RuleSetId::Planar5),
            Err(Error::RuleSetMismatch { .. })
        ));
    }
}

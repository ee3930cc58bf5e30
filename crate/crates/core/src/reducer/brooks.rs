//! Constructive proper coloring of graphs within the Brooks degree bound.

use std::collections::BTreeSet;

use crate::coloring::{smallest_admissible, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Properly colors `g` with `k` colors.
///
/// Succeeds whenever every component has maximum degree at most `k` and no
/// component is a complete graph on `k + 1` vertices or, at `k = 2`, an odd
/// cycle. The construction follows the classical proof: root a greedy sweep
/// at a vertex of spare degree, split regular components at a cut vertex, and
/// otherwise seed two nonadjacent neighbors of some vertex with one color.
pub fn brooks_proper_color(g: &Graph, k: u32) -> Result<Coloring> {
    let mut phi = Coloring::new(k);
    for comp in g.components() {
        color_component(&g.induced(&comp), &comp, k, &mut phi)?;
    }
    Ok(phi)
}

fn color_component(
    h: &Graph,
    comp: &BTreeSet<VertexId>,
    k: u32,
    phi: &mut Coloring,
) -> Result<()> {
    let fail = |message: &str| Error::BrooksPrecondition {
        message: message.into(),
        component: comp.clone(),
    };
    if k == 0 {
        return Err(fail("the palette is empty"));
    }
    if h.max_degree() > k as usize {
        return Err(fail("maximum degree exceeds the palette"));
    }
    // A vertex of spare degree can root the sweep directly.
    if let Some(root) = h.vertices().find(|&v| h.degree(v) < k as usize) {
        return greedy_reverse_bfs(h, h, root, phi);
    }
    // From here the component is k-regular.
    if k == 2 {
        return alternate_cycle(h, comp, phi).ok_or_else(|| fail("odd cycle needs three colors"));
    }
    if comp.len() == k as usize + 1 {
        // k-regular on k + 1 vertices is the complete graph.
        return Err(fail("complete graph needs one more color"));
    }
    if let Some(cut) = comp
        .iter()
        .copied()
        .find(|v| h.without_vertices([*v].iter()).components().len() > 1)
    {
        // The cut vertex keeps spare degree inside each lobe; color the lobes
        // independently and transpose each so the cut lands on color 1.
        for mut lobe_set in h.without_vertices([cut].iter()).components() {
            lobe_set.insert(cut);
            let lobe = h.induced(&lobe_set);
            let mut part = Coloring::new(k);
            greedy_reverse_bfs(&lobe, &lobe, cut, &mut part)?;
            let at_cut = part.get(cut).expect("sweep colors its root");
            for (w, col) in part.iter().collect::<Vec<_>>() {
                let transposed = match col {
                    c if c == at_cut => 1,
                    1 => at_cut,
                    c => c,
                };
                phi.set(w, transposed)?;
            }
        }
        return Ok(());
    }
    // Two-connected, regular, not complete: some vertex has two nonadjacent
    // neighbors whose removal keeps the rest connected. Seeding both with one
    // color leaves that vertex a spare color at the end of the sweep.
    for y in h.vertices() {
        let nbrs: Vec<VertexId> = h.neighbors(y).iter().copied().collect();
        for (i, &x) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if h.has_edge(x, z) {
                    continue;
                }
                let rest = h.without_vertices([x, z].iter());
                if !rest.is_connected() {
                    continue;
                }
                phi.set(x, 1)?;
                phi.set(z, 1)?;
                return greedy_reverse_bfs(h, &rest, y, phi);
            }
        }
    }
    Err(fail("no seed pair keeps the component connected"))
}

/// Walks a 2-regular component, alternating two colors; `None` on odd length.
fn alternate_cycle(h: &Graph, comp: &BTreeSet<VertexId>, phi: &mut Coloring) -> Option<()> {
    if comp.len() % 2 == 1 {
        return None;
    }
    let start = *comp.iter().next().expect("components are nonempty");
    let (mut prev, mut cur, mut col) = (start, start, 1);
    loop {
        phi.set(cur, col).ok()?;
        let next = h
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("2-regular vertices have a forward neighbor");
        if next == start {
            return Some(());
        }
        col = 3 - col;
        prev = cur;
        cur = next;
    }
}

/// Colors `span`'s vertices greedily in reverse BFS order from `root`,
/// avoiding the colors of already-colored neighbors in `adj`. Every vertex
/// except the root still has an uncolored neighbor when its turn comes.
fn greedy_reverse_bfs(adj: &Graph, span: &Graph, root: VertexId, phi: &mut Coloring) -> Result<()> {
    let mut order = vec![root];
    let mut seen = BTreeSet::from([root]);
    let mut i = 0;
    while i < order.len() {
        for &w in span.neighbors(order[i]) {
            if seen.insert(w) {
                order.push(w);
            }
        }
        i += 1;
    }
    for &v in order.iter().rev() {
        let avoid: BTreeSet<u32> = adj.neighbors(v).iter().filter_map(|&w| phi.get(w)).collect();
        let col = smallest_admissible(phi.palette(), &avoid).ok_or(Error::BrooksPrecondition {
            message: "greedy sweep ran out of colors".into(),
            component: adj.vertex_set(),
        })?;
        phi.set(v, col)?;
    }
    Ok(())
}

//! Extension procedures: how each configuration re-colors its deleted set.

use std::collections::BTreeSet;

use crate::coloring::{
    designated_singleton, neighborhood_colors, singleton_colors, smallest_admissible, verify_pcf,
    Coloring,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::threads::{attachment_run, other_neighbor};

use super::config::{Config, ConfigKind};

/// Extends a conflict-free coloring of `g` minus the configuration's deleted
/// vertices to all of `g`, then re-verifies the result.
pub fn extend(config: &Config, g: &Graph, c: u32, mut phi: Coloring) -> Result<Coloring> {
    if phi.palette() != c {
        return Err(Error::extension(format!(
            "palette mismatch: coloring carries {}, caller wants {c}",
            phi.palette()
        )));
    }
    for v in g.vertices() {
        if config.deletion_set().contains(&v) {
            if phi.get(v).is_some() {
                return Err(Error::extension(format!(
                    "vertex {v} is deleted but already colored"
                )));
            }
        } else if phi.get(v).is_none() {
            return Err(Error::IncompleteColoring { vertex: v });
        }
    }
    // Unique colors promised by the smaller coloring stay protected even as
    // new colors appear around their owners.
    let orig = phi.clone();
    match &config.kind {
        ConfigKind::Deg1 { v, u } => extend_deg1(g, &orig, &mut phi, *v, *u)?,
        ConfigKind::ThreeVxTwoThread { u1, v1, v2, u2 } => {
            extend_three_vx(g, &orig, &mut phi, *u1, *v1, *v2, *u2)?
        }
        ConfigKind::FourThread { u1, run, u2 } => {
            extend_four_thread(g, &orig, &mut phi, *u1, *run, *u2)?
        }
        ConfigKind::ThreadLemma {
            v,
            u,
            x,
            y,
            t_prime,
            t_dprime,
        } => extend_thread_lemma(g, &orig, &mut phi, *v, *u, *x, *y, t_prime, t_dprime)?,
        ConfigKind::Combine { v1, v2 } => extend_combine(g, &orig, &mut phi, *v1, *v2)?,
        ConfigKind::TwoNeighbor { v } => extend_two_neighbor(g, &orig, &mut phi, *v)?,
        ConfigKind::TwoThreeNeighbor { v } => extend_two_three_neighbor(g, &orig, &mut phi, *v)?,
        ConfigKind::BadVertexTerrible { v, x_set, paths } => {
            extend_bad_vertex(g, &orig, &mut phi, *v, x_set, paths)?
        }
    }
    let violations = verify_pcf(g, &phi)?;
    if let Some(first) = violations.first() {
        return Err(Error::extension(format!(
            "{} left a violation: {first}",
            config.kind_name()
        )));
    }
    Ok(phi)
}

fn must(phi: &Coloring, w: VertexId) -> Result<u32> {
    phi.get(w)
        .ok_or_else(|| Error::extension(format!("vertex {w} should already be colored")))
}

fn opt_insert(set: &mut BTreeSet<u32>, value: Option<u32>) {
    if let Some(col) = value {
        set.insert(col);
    }
}

/// A color guaranteed to appear exactly once around `w` if every later step
/// avoids it: the one designated before the extension began when `w` kept
/// its color, otherwise the currently designated one.
fn protected(g: &Graph, orig: &Coloring, phi: &Coloring, w: VertexId) -> Option<u32> {
    if orig.get(w).is_some() {
        designated_singleton(g, orig, w).or_else(|| designated_singleton(g, phi, w))
    } else {
        designated_singleton(g, phi, w)
    }
}

/// Colors `w` with the smallest color outside `avoid` and its colored
/// neighborhood.
fn assign(
    g: &Graph,
    phi: &mut Coloring,
    w: VertexId,
    mut avoid: BTreeSet<u32>,
    step: &str,
) -> Result<()> {
    avoid.extend(neighborhood_colors(g, phi, w));
    let col = smallest_admissible(phi.palette(), &avoid)
        .ok_or_else(|| Error::extension(step.to_string()))?;
    phi.set(w, col)
}

/// Like [`assign`] but also keeping one protected color per neighbor alive.
fn assign_guarded(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    w: VertexId,
    mut extra: BTreeSet<u32>,
    step: &str,
) -> Result<()> {
    for &u in g.neighbors(w) {
        opt_insert(&mut extra, protected(g, orig, phi, u));
    }
    assign(g, phi, w, extra, step)
}

/// Tries `avoid` joined with each preference layer in turn, then bare.
fn assign_preferring(
    g: &Graph,
    phi: &mut Coloring,
    w: VertexId,
    avoid: BTreeSet<u32>,
    prefs: &[BTreeSet<u32>],
    step: &str,
) -> Result<()> {
    let mut base = avoid;
    base.extend(neighborhood_colors(g, phi, w));
    for pref in prefs {
        let mut strict = base.clone();
        strict.extend(pref.iter().copied());
        if let Some(col) = smallest_admissible(phi.palette(), &strict) {
            return phi.set(w, col);
        }
    }
    let col = smallest_admissible(phi.palette(), &base)
        .ok_or_else(|| Error::extension(step.to_string()))?;
    phi.set(w, col)
}

fn extend_deg1(g: &Graph, orig: &Coloring, phi: &mut Coloring, v: VertexId, u: VertexId) -> Result<()> {
    let mut extra = BTreeSet::new();
    opt_insert(&mut extra, protected(g, orig, phi, u));
    assign(g, phi, v, extra, "deg1: v")
}

fn extend_three_vx(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    u1: VertexId,
    v1: VertexId,
    v2: VertexId,
    u2: VertexId,
) -> Result<()> {
    // v2 first: keep u2 whole and stay off u1's color so v1 ends up between
    // two distinct colors.
    let mut e2 = BTreeSet::new();
    opt_insert(&mut e2, must(phi, u1).ok());
    opt_insert(&mut e2, protected(g, orig, phi, u2));
    assign(g, phi, v2, e2, "three-vx-two-thread: v2")?;
    // u1 has degree 2 off the thread, so its two outside colors differ and
    // v1 can cost it at most one of them.
    let mut e1 = BTreeSet::new();
    opt_insert(&mut e1, phi.get(u1));
    opt_insert(&mut e1, phi.get(u2));
    assign(g, phi, v1, e1, "three-vx-two-thread: v1")
}

fn extend_four_thread(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    u1: VertexId,
    run: [VertexId; 4],
    u2: VertexId,
) -> Result<()> {
    let [v1, v2, v3, v4] = run;
    let mut p1 = BTreeSet::new();
    opt_insert(&mut p1, phi.get(u1));
    opt_insert(&mut p1, protected(g, orig, phi, u1));
    let mut p2 = BTreeSet::new();
    opt_insert(&mut p2, phi.get(u2));
    opt_insert(&mut p2, protected(g, orig, phi, u2));
    if p1.intersection(&p2).next().is_some() {
        // The bounds share a color: one fresh color serves both ends.
        let avoid: BTreeSet<u32> = p1.union(&p2).copied().collect();
        let col = smallest_admissible(phi.palette(), &avoid)
            .ok_or_else(|| Error::extension("four-thread: shared pick".to_string()))?;
        phi.set(v1, col)?;
        phi.set(v4, col)?;
    } else {
        // Swap the bound colors onto the ends.
        phi.set(v1, must(phi, u2)?)?;
        phi.set(v4, must(phi, u1)?)?;
    }
    let mut e2 = BTreeSet::new();
    opt_insert(&mut e2, phi.get(u1));
    opt_insert(&mut e2, phi.get(v4));
    assign(g, phi, v2, e2, "four-thread: v2")?;
    let mut e3 = BTreeSet::new();
    opt_insert(&mut e3, phi.get(u2));
    opt_insert(&mut e3, phi.get(v1));
    assign(g, phi, v3, e3, "four-thread: v3")
}

/// Colors `u` so the hub `v` gains (or keeps) a unique color: avoid the
/// hub's color plus its designated singleton, or everything on its
/// neighborhood when no singleton exists yet.
fn hub_feeder(
    g: &Graph,
    phi: &mut Coloring,
    v: VertexId,
    u: VertexId,
    mut extra: BTreeSet<u32>,
    step: &str,
) -> Result<()> {
    opt_insert(&mut extra, phi.get(v));
    match designated_singleton(g, phi, v) {
        Some(s) => {
            extra.insert(s);
        }
        None => extra.extend(neighborhood_colors(g, phi, v)),
    }
    assign(g, phi, u, extra, step)
}

/// Colors the deleted 2-threads around the hub, each from its far end
/// inward; every step protects the succeeding vertex and the hub's color.
fn color_runs(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    v: VertexId,
    t_all: &BTreeSet<VertexId>,
    skip: &[VertexId],
) -> Result<()> {
    let hub = must(phi, v)?;
    let starts: Vec<VertexId> = g.neighbors(v).iter().copied().collect();
    for a in starts {
        if g.degree(a) != 2 || skip.contains(&a) {
            continue;
        }
        let run = attachment_run(g, v, a);
        let chain: Vec<VertexId> = run
            .iter()
            .copied()
            .take_while(|w| t_all.contains(w))
            .collect();
        for (i, &w) in chain.iter().enumerate().rev() {
            if phi.get(w).is_some() {
                continue;
            }
            let next = if i + 1 < run.len() {
                run[i + 1]
            } else {
                // The walk leaves the run: its bound, or back to the hub.
                let prev = if i == 0 { v } else { run[i - 1] };
                other_neighbor(g, w, prev)
            };
            let mut extra = BTreeSet::from([hub]);
            opt_insert(&mut extra, phi.get(next));
            opt_insert(&mut extra, protected(g, orig, phi, next));
            assign(g, phi, w, extra, "thread-lemma: run")?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn extend_thread_lemma(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    v: VertexId,
    u: VertexId,
    x: VertexId,
    y: VertexId,
    t_prime: &BTreeSet<VertexId>,
    t_dprime: &BTreeSet<VertexId>,
) -> Result<()> {
    let d = g.degree(v);
    let z = other_neighbor(g, y, x);
    let t_all: BTreeSet<VertexId> = t_prime.union(t_dprime).copied().collect();

    // Heavy-neighbor colors with their protected singletons, plus the far
    // color behind each lone 2-neighbor.
    let mut cset = BTreeSet::new();
    for &w in g.neighbors(v) {
        if g.degree(w) >= 3 {
            opt_insert(&mut cset, phi.get(w));
            opt_insert(&mut cset, protected(g, orig, phi, w));
        }
    }
    for &a in t_prime {
        opt_insert(&mut cset, phi.get(other_neighbor(g, a, v)));
    }

    if z == v {
        // The 3-thread wraps straight back to the hub.
        assign(g, phi, v, cset, "thread-lemma: v")?;
        color_runs(g, orig, phi, v, &t_all, &[u, y])?;
        hub_feeder(g, phi, v, u, BTreeSet::new(), "thread-lemma: u")?;
        let mut ey = BTreeSet::new();
        opt_insert(&mut ey, designated_singleton(g, phi, v));
        opt_insert(&mut ey, phi.get(u));
        assign(g, phi, y, ey, "thread-lemma: y")?;
        let mut ex = BTreeSet::new();
        opt_insert(&mut ex, phi.get(v));
        assign(g, phi, x, ex, "thread-lemma: x")
    } else if d == 5 {
        // Every neighborhood slot is deleted: copying z's color onto the hub
        // lets x cover the hub and z at once.
        let zc = must(phi, z)?;
        phi.set(v, zc)?;
        color_runs(g, orig, phi, v, &t_all, &[u, y])?;
        hub_feeder(g, phi, v, u, BTreeSet::new(), "thread-lemma: u")?;
        let mut ey = BTreeSet::from([zc]);
        opt_insert(&mut ey, protected(g, orig, phi, z));
        opt_insert(&mut ey, phi.get(u));
        assign(g, phi, y, ey, "thread-lemma: y")?;
        let mut ex = BTreeSet::new();
        opt_insert(&mut ex, phi.get(v));
        opt_insert(&mut ex, phi.get(u));
        assign(g, phi, x, ex, "thread-lemma: x")
    } else if let Some(s) = designated_singleton(g, phi, z) {
        // Give x the color unique at z: y then needs only three avoidances
        // and z's singleton doubles as x's shield.
        phi.set(x, s)?;
        let mut av = cset;
        av.insert(s);
        assign(g, phi, v, av, "thread-lemma: v")?;
        color_runs(g, orig, phi, v, &t_all, &[u, y])?;
        let mut eu = BTreeSet::new();
        opt_insert(&mut eu, phi.get(x));
        hub_feeder(g, phi, v, u, eu, "thread-lemma: u")?;
        let mut ey = BTreeSet::from([s]);
        opt_insert(&mut ey, phi.get(z));
        opt_insert(&mut ey, phi.get(u));
        assign(g, phi, y, ey, "thread-lemma: y")
    } else {
        // z has no unique color yet, so all its neighbors are deleted; a
        // shared fresh color on the hub and y becomes z's singleton.
        if g.has_edge(z, v) {
            return Err(Error::extension("thread-lemma: five-cycle through the hub"));
        }
        let mut av = cset;
        opt_insert(&mut av, phi.get(z));
        av.extend(neighborhood_colors(g, phi, z));
        av.extend(neighborhood_colors(g, phi, v));
        av.extend(neighborhood_colors(g, phi, y));
        let col = smallest_admissible(phi.palette(), &av)
            .ok_or_else(|| Error::extension("thread-lemma: fresh shared color".to_string()))?;
        phi.set(v, col)?;
        phi.set(y, col)?;
        color_runs(g, orig, phi, v, &t_all, &[u, y])?;
        hub_feeder(g, phi, v, u, BTreeSet::new(), "thread-lemma: u")?;
        let mut ex = BTreeSet::new();
        opt_insert(&mut ex, phi.get(v));
        opt_insert(&mut ex, phi.get(u));
        opt_insert(&mut ex, phi.get(z));
        assign(g, phi, x, ex, "thread-lemma: x")
    }
}

/// Colors the far side of each deleted 2-neighbor plus the heavies around
/// an anchor, as dictated by the anchor's role in the configuration.
fn combine_cset(
    g: &Graph,
    orig: &Coloring,
    phi: &Coloring,
    vi: VertexId,
    vj: VertexId,
) -> BTreeSet<u32> {
    let mut s = BTreeSet::new();
    for &w in g.neighbors(vi) {
        if w == vj {
            continue;
        }
        if g.degree(w) >= 3 {
            opt_insert(&mut s, phi.get(w));
            opt_insert(&mut s, protected(g, orig, phi, w));
        } else if g.degree(w) == 2 {
            opt_insert(&mut s, protected(g, orig, phi, w));
        }
    }
    s
}

fn extend_combine(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    v1: VertexId,
    v2: VertexId,
) -> Result<()> {
    let twos1 = g.neighbors_of_degree(v1, 2);
    let twos2 = g.neighbors_of_degree(v2, 2);
    if !twos1.is_empty() && !twos2.is_empty() {
        // Each anchor keeps a 2-neighbor in reserve to mint a unique color.
        let c1 = combine_cset(g, orig, phi, v1, v2);
        assign(g, phi, v1, c1, "combine: v1")?;
        let mut base2 = combine_cset(g, orig, phi, v2, v1);
        opt_insert(&mut base2, phi.get(v1));
        let mut pref = BTreeSet::new();
        opt_insert(&mut pref, designated_singleton(g, phi, v1));
        assign_preferring(g, phi, v2, base2, &[pref], "combine: v2")?;
    } else {
        // One side has no 2-neighbors; the configuration then forces
        // d(v1) = 3 so v1 itself can serve as v2's unique color.
        if g.degree(v1) != 3 {
            return Err(Error::extension("combine: mismatched shape"));
        }
        let c1 = combine_cset(g, orig, phi, v1, v2);
        let mut far2 = BTreeSet::new();
        for &w in g.neighbors(v2) {
            if w != v1 && g.degree(w) >= 3 {
                opt_insert(&mut far2, phi.get(w));
            }
        }
        if singleton_colors(g, phi, v2).is_empty() {
            let mut av = c1.clone();
            av.extend(far2.iter().copied());
            assign(g, phi, v1, av, "combine: v1 fresh at v2")?;
        } else {
            let mut pref = BTreeSet::new();
            opt_insert(&mut pref, designated_singleton(g, phi, v2));
            assign_preferring(g, phi, v1, c1.clone(), &[far2.clone(), pref], "combine: v1")?;
        }
        if singleton_colors(g, phi, v1).is_empty() {
            // v1's two small neighbors wear one color: park v2 off it, then
            // recolor v1 fresh at v2.
            let mut av2 = combine_cset(g, orig, phi, v2, v1);
            for &w in g.neighbors(v1) {
                if w != v2 {
                    opt_insert(&mut av2, phi.get(w));
                }
            }
            assign(g, phi, v2, av2, "combine: v2")?;
            let mut av1 = c1;
            av1.extend(far2.iter().copied());
            opt_insert(&mut av1, phi.get(v2));
            phi.unset(v1);
            assign(g, phi, v1, av1, "combine: recolor v1")?;
        } else {
            let mut base2 = combine_cset(g, orig, phi, v2, v1);
            opt_insert(&mut base2, phi.get(v1));
            let mut pref = BTreeSet::new();
            opt_insert(&mut pref, designated_singleton(g, phi, v1));
            assign_preferring(g, phi, v2, base2, &[pref], "combine: v2")?;
        }
    }
    // Any anchor whose unique color fell to the fallback layers still owns
    // uncolored 2-neighbors it can spend on a fresh one.
    for (vi, twos) in [(v1, &twos1), (v2, &twos2)] {
        if !singleton_colors(g, phi, vi).is_empty() {
            continue;
        }
        let Some(ui) = twos.iter().copied().find(|&w| phi.get(w).is_none()) else {
            continue;
        };
        let xi = other_neighbor(g, ui, vi);
        let mut av = BTreeSet::new();
        for &w in g.neighbors(vi) {
            opt_insert(&mut av, phi.get(w));
        }
        opt_insert(&mut av, phi.get(vi));
        opt_insert(&mut av, phi.get(xi));
        opt_insert(&mut av, protected(g, orig, phi, xi));
        assign(g, phi, ui, av, "combine: fresh singleton")?;
    }
    for vi in [v1, v2] {
        if phi.get(vi).is_none() || singleton_colors(g, phi, vi).is_empty() {
            return Err(Error::extension("combine: anchor lost its unique color"));
        }
    }
    // Remaining 2-neighbors, ascending, each respecting every neighbor's
    // protected color.
    let mut rest: BTreeSet<VertexId> = twos1.into_iter().collect();
    rest.extend(twos2);
    for w in rest {
        if phi.get(w).is_none() {
            assign_guarded(g, orig, phi, w, BTreeSet::new(), "combine: claim")?;
        }
    }
    Ok(())
}

fn extend_two_neighbor(g: &Graph, orig: &Coloring, phi: &mut Coloring, v: VertexId) -> Result<()> {
    let twos = g.neighbors_of_degree(v, 2);
    let mut cset = BTreeSet::new();
    for &u in &twos {
        opt_insert(&mut cset, phi.get(other_neighbor(g, u, v)));
    }
    for &w in g.neighbors(v) {
        if g.degree(w) >= 3 {
            opt_insert(&mut cset, phi.get(w));
            opt_insert(&mut cset, protected(g, orig, phi, w));
        }
    }
    assign(g, phi, v, cset, "two-neighbor: v")?;
    // The smallest 2-neighbor goes fresh on v's whole neighborhood and
    // becomes its unique color; the rest keep that anchor intact.
    let u0 = twos[0];
    let u0p = other_neighbor(g, u0, v);
    let mut a0 = BTreeSet::new();
    for &w in g.neighbors(v) {
        if g.degree(w) >= 3 {
            opt_insert(&mut a0, phi.get(w));
        }
    }
    opt_insert(&mut a0, phi.get(v));
    opt_insert(&mut a0, phi.get(u0p));
    opt_insert(&mut a0, protected(g, orig, phi, u0p));
    assign(g, phi, u0, a0, "two-neighbor: anchor")?;
    let anchor = must(phi, u0)?;
    for &u in &twos[1..] {
        let up = other_neighbor(g, u, v);
        let mut av = BTreeSet::from([anchor]);
        opt_insert(&mut av, phi.get(v));
        opt_insert(&mut av, phi.get(up));
        opt_insert(&mut av, protected(g, orig, phi, up));
        assign(g, phi, u, av, "two-neighbor: rest")?;
    }
    Ok(())
}

fn extend_two_three_neighbor(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    v: VertexId,
) -> Result<()> {
    let twos = g.neighbors_of_degree(v, 2);
    let threes = g.neighbors_of_degree(v, 3);
    let mut cset = BTreeSet::new();
    for &u in &twos {
        opt_insert(&mut cset, phi.get(other_neighbor(g, u, v)));
    }
    for &w in &threes {
        if let Some(&o) = g.neighbors(w).iter().find(|&&o| o != v) {
            opt_insert(&mut cset, phi.get(o));
        }
    }
    for &w in g.neighbors(v) {
        if g.degree(w) >= 4 {
            opt_insert(&mut cset, phi.get(w));
            opt_insert(&mut cset, protected(g, orig, phi, w));
        }
    }
    assign(g, phi, v, cset, "two-three-neighbor: v")?;
    if !twos.is_empty() {
        let u0 = twos[0];
        let u0p = other_neighbor(g, u0, v);
        let mut a0 = BTreeSet::new();
        for &w in g.neighbors(v) {
            if g.degree(w) >= 4 {
                opt_insert(&mut a0, phi.get(w));
            }
        }
        opt_insert(&mut a0, phi.get(v));
        opt_insert(&mut a0, phi.get(u0p));
        opt_insert(&mut a0, protected(g, orig, phi, u0p));
        assign(g, phi, u0, a0, "two-three-neighbor: anchor")?;
        let anchor = must(phi, u0)?;
        for &u in &twos[1..] {
            let up = other_neighbor(g, u, v);
            let mut av = BTreeSet::from([anchor]);
            opt_insert(&mut av, phi.get(v));
            opt_insert(&mut av, phi.get(up));
            opt_insert(&mut av, protected(g, orig, phi, up));
            assign(g, phi, u, av, "two-three-neighbor: rest")?;
        }
    }
    for &w in &threes {
        // Until v holds a unique color, 3-neighbors must land fresh on it.
        let mut av = BTreeSet::new();
        if singleton_colors(g, phi, v).is_empty() {
            av.extend(neighborhood_colors(g, phi, v));
        }
        assign_guarded(g, orig, phi, w, av, "two-three-neighbor: three")?;
    }
    Ok(())
}

fn extend_bad_vertex(
    g: &Graph,
    orig: &Coloring,
    phi: &mut Coloring,
    v: VertexId,
    x_set: &BTreeSet<VertexId>,
    paths: &[[VertexId; 4]],
) -> Result<()> {
    let mut cset = BTreeSet::new();
    for &u in g.neighbors(v) {
        match g.degree(u) {
            2 => opt_insert(&mut cset, phi.get(other_neighbor(g, u, v))),
            3 => {
                if let Some(&o) = g.neighbors(u).iter().find(|&&o| o != v) {
                    opt_insert(&mut cset, phi.get(o));
                }
            }
            _ => {
                opt_insert(&mut cset, phi.get(u));
                // Boundary heavies on terrible faces get repaired afterward
                // instead of shielded now.
                if !x_set.contains(&u) {
                    opt_insert(&mut cset, protected(g, orig, phi, u));
                }
            }
        }
    }
    assign(g, phi, v, cset, "bad-vertex: v")?;
    for &[u1, u2, u3, u4] in paths {
        // Free the slot next to the heavy bound, walk in, repaint.
        phi.unset(u3);
        if phi.get(u1).is_none() {
            let mut av = BTreeSet::new();
            if singleton_colors(g, phi, v).is_empty() {
                av.extend(neighborhood_colors(g, phi, v));
            }
            if singleton_colors(g, phi, u2).is_empty() {
                av.extend(neighborhood_colors(g, phi, u2));
            }
            assign_guarded(g, orig, phi, u1, av, "bad-vertex: face entry")?;
        }
        let mut a3 = BTreeSet::new();
        if singleton_colors(g, phi, u4).is_empty() {
            a3.extend(neighborhood_colors(g, phi, u4));
        }
        assign_guarded(g, orig, phi, u3, a3, "bad-vertex: face repaint")?;
    }
    let mut rest: BTreeSet<VertexId> = g.neighbors_of_degree(v, 2).into_iter().collect();
    rest.extend(g.neighbors_of_degree(v, 3));
    for w in rest {
        if phi.get(w).is_some() {
            continue;
        }
        let mut av = BTreeSet::new();
        if singleton_colors(g, phi, v).is_empty() {
            av.extend(neighborhood_colors(g, phi, v));
        }
        assign_guarded(g, orig, phi, w, av, "bad-vertex: light neighbor")?;
    }
    Ok(())
}

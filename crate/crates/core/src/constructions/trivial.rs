//! Adding fixed points to a witness graph without adding colors.

use crate::autsearch::{is_automorphism, order_equals};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::group::PermGroup;

#[derive(Clone, Copy, Debug)]
enum Anchor {
    LargestOrbit,
    AllMoved,
}

/// Extends `g` (with `Aut(g) = a`) by `m` new vertices that every
/// automorphism must fix. The new vertices form a path whose first vertex is
/// joined to an anchor set of old vertices; a handful of variants are tried in
/// a fixed order and the first whose automorphism group is exactly `a ⊕ I_m`
/// is returned.
pub fn append_trivial_orbits(g: &ColoredGraph, a: &PermGroup, m: usize) -> Result<ColoredGraph> {
    if m == 0 {
        return Ok(g.clone());
    }
    if a.degree() != g.n() {
        return Err(Error::DegreeMismatch {
            left: g.n(),
            right: a.degree(),
        });
    }
    if a.order() <= 1 {
        return Err(Error::InvalidArgument(
            "fixed points can only be appended to a graph with a nontrivial group".into(),
        ));
    }
    let k = g.k().max(2);
    let mut bases = vec![g.clone()];
    bases.push(widen(g, k)?.swap_colors(0, 1));
    for base in &bases {
        for anchor in [Anchor::LargestOrbit, Anchor::AllMoved] {
            for c in 1..k as Color {
                let cand = extend(base, a, m, anchor, c)?;
                if verifies(&cand, a, m)? {
                    return Ok(cand);
                }
            }
        }
    }
    Err(Error::Verification(format!(
        "no fixed-point extension of the {}-vertex graph by {m} points has the expected group",
        g.n()
    )))
}

fn widen(g: &ColoredGraph, k: usize) -> Result<ColoredGraph> {
    ColoredGraph::from_colors(g.n(), k, g.colors().to_vec())
}

fn extend(base: &ColoredGraph, a: &PermGroup, m: usize, anchor: Anchor, c: Color) -> Result<ColoredGraph> {
    let n = base.n();
    let k = base.k().max(2);
    let mut out = ColoredGraph::new(n + m, k)?;
    for u in 0..n {
        for v in u + 1..n {
            out.set_color(u, v, base.color(u, v))?;
        }
    }
    let orbits: Vec<Vec<usize>> = a.orbits().into_iter().filter(|o| o.len() > 1).collect();
    let anchors: Vec<usize> = match anchor {
        Anchor::LargestOrbit => orbits
            .iter()
            .max_by_key(|o| (o.len(), std::cmp::Reverse(o[0])))
            .cloned()
            .unwrap_or_default(),
        Anchor::AllMoved => orbits.concat(),
    };
    for &u in &anchors {
        out.set_color(u, n, c)?;
    }
    for x in n..n + m - 1 {
        out.set_color(x, x + 1, c)?;
    }
    Ok(out)
}

fn verifies(g: &ColoredGraph, a: &PermGroup, m: usize) -> Result<bool> {
    for gen in a.generators() {
        if !is_automorphism(g, &gen.extend_fixed(m))? {
            return Ok(false);
        }
    }
    Ok(order_equals(g, a.order())?.0)
}

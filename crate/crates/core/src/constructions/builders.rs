//! Witness graphs for cyclic groups of prime power order.
//!
//! All builders use the vertex numbering of [`CyclicSpec::layout`]: orbit
//! `O_{j+1}` occupies a contiguous block and the group generator advances
//! each orbit by one, so every edge family below is written as a rule on
//! orbit-local indices and is invariant under the generator by construction.
//! Indices into a smaller orbit are reduced modulo its size.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::group::cyclic_group;
use crate::spec::{CyclicSpec, Orbit, OrbitLayout};

use super::trivial::append_trivial_orbits;

fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}

fn paint(g: &mut ColoredGraph, u: usize, v: usize, c: Color) -> Result<()> {
    if u != v {
        g.set_color(u, v, c)?;
    }
    Ok(())
}

fn cycle(g: &mut ColoredGraph, o: &Orbit, c: Color) -> Result<()> {
    for i in 0..o.size {
        paint(g, o.vertex(i), o.vertex(i + 1), c)?;
    }
    Ok(())
}

fn clique(g: &mut ColoredGraph, o: &Orbit, c: Color) -> Result<()> {
    for a in o.vertices() {
        for b in a + 1..o.base + o.size {
            paint(g, a, b, c)?;
        }
    }
    Ok(())
}

/// `{a_i, b_{i+shift}}` for every `i` of the larger of the two orbits.
fn matching(g: &mut ColoredGraph, a: &Orbit, b: &Orbit, shift: usize, c: Color) -> Result<()> {
    for i in 0..a.size.max(b.size) {
        paint(g, a.vertex(i), b.vertex(i + shift), c)?;
    }
    Ok(())
}

fn nontrivial_layout(spec: &CyclicSpec) -> OrbitLayout {
    spec.without_trivial().layout()
}

/// Adds the spec's fixed points to a graph built on its nontrivial part.
fn finish(spec: &CyclicSpec, g: ColoredGraph) -> Result<ColoredGraph> {
    if spec.trivial_count() == 0 {
        return Ok(g);
    }
    let a = cyclic_group(&spec.without_trivial())?;
    append_trivial_orbits(&g, &a, spec.trivial_count())
}

/// Two orbits of size `n`: a cycle on the first, a matching in color 1 and a
/// shifted matching in color 2. Automorphism group `C_n^(2)`.
pub fn build_two_orbit_3colored(n: usize) -> Result<ColoredGraph> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    let l = OrbitLayout::new(&[n, n], 0);
    let (v, w) = (l.orbit(0), l.orbit(1));
    let mut g = ColoredGraph::new(2 * n, 3)?;
    cycle(&mut g, &v, 1)?;
    matching(&mut g, &v, &w, 0, 1)?;
    matching(&mut g, &v, &w, 1, 2)?;
    Ok(g)
}

/// `r >= 3` orbits of size `n`, two colors. Automorphism group `C_n^(r)`.
pub fn build_many_orbit_2colored(n: usize, r: usize) -> Result<ColoredGraph> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    if r < 3 {
        return Err(shape(format!(
            "the many-orbit construction needs r >= 3 orbits, got {r}; use the two-orbit three-color construction"
        )));
    }
    let l = OrbitLayout::new(&vec![n; r], 0);
    let o = l.nontrivial();
    let mut g = ColoredGraph::new(n * r, 2)?;
    cycle(&mut g, &o[0], 1)?;
    for j in 0..r - 1 {
        matching(&mut g, &o[j], &o[j + 1], 0, 1)?;
    }
    matching(&mut g, &o[0], &o[2], 0, 1)?;
    matching(&mut g, &o[0], &o[1], 1, 1)?;
    Ok(g)
}

/// Two colors for at least two nontrivial orbits whose two largest have size
/// at least 7: a cycle on `O_1`, three links from each `O_1` vertex into
/// `O_2`, and a chain of shifted matchings down the remaining orbits.
pub fn build_prime_power_generic(spec: &CyclicSpec) -> Result<ColoredGraph> {
    let sizes = spec.orbit_sizes();
    if sizes.len() < 2 {
        return Err(shape("the generic construction needs at least two nontrivial orbits"));
    }
    if sizes[1] < 7 {
        return Err(shape(format!(
            "the generic construction needs two orbits of size >= 7 (got {sizes:?}); \
             use the three-color or small-prime constructions"
        )));
    }
    let l = nontrivial_layout(spec);
    let o = l.nontrivial();
    let mut g = ColoredGraph::new(l.degree(), 2)?;
    cycle(&mut g, &o[0], 1)?;
    for e in [0, 1, 3] {
        matching(&mut g, &o[0], &o[1], e, 1)?;
    }
    for w in o.windows(2).skip(1) {
        matching(&mut g, &w[0], &w[1], 1, 1)?;
    }
    // An orbit further down the chain with 1-degree 5 would look like O_1.
    for j in 2..o.len() {
        let incoming = o[j - 1].size / o[j].size;
        let outgoing = usize::from(j + 1 < o.len());
        if incoming + outgoing == 5 {
            clique(&mut g, &o[j], 1)?;
        }
    }
    finish(spec, g)
}

/// Three colors for `p ∈ {2,3,5}` and exactly two nontrivial orbits of sizes
/// `p^n >= n_p` and `n_p`.
pub fn build_two_nontrivial_3colored(spec: &CyclicSpec) -> Result<ColoredGraph> {
    let n_p = spec
        .n_p()
        .ok_or_else(|| shape(format!("p={} has no small companion orbit size", spec.p())))?;
    let sizes = spec.orbit_sizes();
    if sizes.len() != 2 || sizes[1] != n_p {
        return Err(shape(format!(
            "expected exactly two nontrivial orbits with the smaller of size {n_p}, got {sizes:?}"
        )));
    }
    let g = if sizes[0] == n_p {
        build_two_orbit_3colored(n_p)?
    } else {
        let l = nontrivial_layout(spec);
        let (v, w) = (l.orbit(0), l.orbit(1));
        let mut g = ColoredGraph::new(l.degree(), 3)?;
        cycle(&mut g, &v, 1)?;
        cycle(&mut g, &w, 1)?;
        matching(&mut g, &v, &w, 0, 1)?;
        matching(&mut g, &v, &w, 1, 2)?;
        g
    };
    finish(spec, g)
}

/// Two colors for `p ∈ {2,3,5}`, one orbit of size `p^n` and at least two
/// further orbits of size `n_p`.
pub fn build_small_p_many_orbits(spec: &CyclicSpec) -> Result<ColoredGraph> {
    let n_p = spec
        .n_p()
        .ok_or_else(|| shape(format!("p={} has no small companion orbit size", spec.p())))?;
    let sizes = spec.orbit_sizes();
    if sizes.len() < 3 || sizes[1..].iter().any(|&s| s != n_p) {
        return Err(shape(format!(
            "expected one orbit of size p^n and at least two of size {n_p}, got {sizes:?}"
        )));
    }
    if sizes[0] < 4 {
        // O_1 would carry no internal edges, and a reflection survives
        return Err(shape(
            "the small-prime construction needs the large orbit to have size >= 4; \
             use the many-orbit construction for equal orbits of size 3",
        ));
    }
    let l = nontrivial_layout(spec);
    let o = l.nontrivial();
    let big = o[0];
    let mut g = ColoredGraph::new(l.degree(), 2)?;
    for i in 0..big.size {
        for j in 2..big.size.saturating_sub(1) {
            paint(&mut g, big.vertex(i), big.vertex(i + j), 1)?;
        }
    }
    for w in o.windows(2) {
        matching(&mut g, &w[0], &w[1], 0, 1)?;
    }
    matching(&mut g, &o[0], &o[2], 0, 1)?;
    matching(&mut g, &o[0], &o[1], 1, 1)?;
    finish(spec, g)
}

/// Two colors for `p = 2` with `t >= 2` orbits of size at least 4 (at most
/// one larger than 4) and `r >= 1` orbits of size 2.
pub fn build_mixed_two_power(spec: &CyclicSpec) -> Result<ColoredGraph> {
    let sizes = spec.orbit_sizes();
    let t = sizes.iter().filter(|&&s| s >= 4).count();
    let r = sizes.iter().filter(|&&s| s == 2).count();
    if spec.p() != 2 || t < 2 || r < 1 || sizes.iter().filter(|&&s| s > 4).count() > 1 {
        return Err(shape(format!(
            "expected p=2 with at least two orbits of size >= 4 (at most one > 4) and a size-2 orbit, \
             got p={} orbits {sizes:?}",
            spec.p()
        )));
    }
    let l = nontrivial_layout(spec);
    let o = l.nontrivial();
    let (big, pairs) = o.split_at(t);
    let mut g = ColoredGraph::new(l.degree(), 2)?;
    cycle(&mut g, &big[0], 1)?;
    clique(&mut g, &big[1], 1)?;
    for w in big.windows(2) {
        matching(&mut g, &w[0], &w[1], 0, 1)?;
    }
    matching(&mut g, &big[0], &big[1], 1, 1)?;
    matching(&mut g, &big[0], &pairs[0], 0, 1)?;
    matching(&mut g, &big[1], &pairs[0], 0, 1)?;
    if r >= 2 {
        matching(&mut g, &big[t - 1], &pairs[1], 0, 1)?;
        for w in pairs[1..].windows(2) {
            matching(&mut g, &w[0], &w[1], 0, 1)?;
        }
    }
    finish(spec, g)
}

/// `r` pairs joined into a path of `2r` vertices; the reversal of the path
/// swaps every pair simultaneously.
pub fn build_order_two(r: usize) -> Result<ColoredGraph> {
    if r == 0 {
        return Err(Error::InvalidArgument("need at least one size-2 orbit".into()));
    }
    let l = OrbitLayout::new(&vec![2; r], 0);
    let o = l.nontrivial();
    let mut g = ColoredGraph::new(2 * r, 2)?;
    paint(&mut g, o[0].vertex(0), o[0].vertex(1), 1)?;
    for w in o.windows(2) {
        matching(&mut g, &w[0], &w[1], 0, 1)?;
    }
    Ok(g)
}

/// [`build_order_two`] keyed by a spec, fixed points included.
pub fn build_order_two_spec(spec: &CyclicSpec) -> Result<ColoredGraph> {
    let sizes = spec.orbit_sizes();
    if spec.p() != 2 || sizes.is_empty() || sizes.iter().any(|&s| s != 2) {
        return Err(shape(format!("expected only size-2 orbits, got p={} {sizes:?}", spec.p())));
    }
    finish(spec, build_order_two(sizes.len())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autsearch::{automorphism_group, automorphism_group_bruteforce};
    use crate::group::group_equals;

    fn spec(p: u64, sizes: &[u64], fixed: usize) -> CyclicSpec {
        CyclicSpec::from_orbit_sizes(p, sizes, fixed).unwrap()
    }

    fn exact(g: &ColoredGraph, s: &CyclicSpec) -> bool {
        group_equals(&automorphism_group(g).unwrap(), &cyclic_group(s).unwrap()).unwrap()
    }

    #[test]
    fn figure_one_edges() {
        let g = build_two_orbit_3colored(3).unwrap();
        // w_0 is vertex 3; {v_2, w_0} is a shifted-matching edge
        assert_eq!(g.edge_color(2, 3).unwrap(), 2);
        assert_eq!(g.edge_color(0, 3).unwrap(), 1);
        assert_eq!(g.edge_color(3, 4).unwrap(), 0);
        assert!(exact(&g, &spec(3, &[3, 3], 0)));
        assert!(build_two_orbit_3colored(2).is_err());
    }

    #[test]
    fn figure_two_degrees() {
        let g = build_many_orbit_2colored(3, 3).unwrap();
        for v in 0..3 {
            assert_eq!(g.i_degree(v, 1).unwrap(), 5);
        }
        assert!(exact(&g, &spec(3, &[3, 3, 3], 0)));
        assert!(build_many_orbit_2colored(3, 2).is_err());
        let g = build_many_orbit_2colored(5, 4).unwrap();
        assert_eq!(g.n(), 20);
        assert!(exact(&g, &spec(5, &[5, 5, 5, 5], 0)));
    }

    #[test]
    fn generic_degrees() {
        let s = spec(7, &[7, 7], 0);
        let g = build_prime_power_generic(&s).unwrap();
        for v in 0..7 {
            assert_eq!(g.i_degree(v, 1).unwrap(), 5);
        }
        assert!(exact(&g, &s));
        let s = spec(3, &[9, 9], 0);
        assert!(exact(&build_prime_power_generic(&s).unwrap(), &s));
        assert!(build_prime_power_generic(&spec(3, &[9, 3], 0)).is_err());
    }

    #[test]
    fn two_nontrivial_degree_separation() {
        let s = spec(3, &[9, 3], 0);
        let g = build_two_nontrivial_3colored(&s).unwrap();
        for v in 0..9 {
            assert_eq!(g.i_degree(v, 2).unwrap(), 1);
        }
        for w in 9..12 {
            assert_eq!(g.i_degree(w, 2).unwrap(), 3);
        }
        assert!(exact(&g, &s));
        let s = spec(2, &[8, 4], 0);
        assert!(exact(&build_two_nontrivial_3colored(&s).unwrap(), &s));
    }

    #[test]
    fn small_p_degree_count() {
        let s = spec(3, &[9, 3, 3], 0);
        let g = build_small_p_many_orbits(&s).unwrap();
        assert_eq!(g.i_degree(9, 1).unwrap(), 2 * 9 / 3 + 1);
        assert!(exact(&g, &s));
        for s in [spec(2, &[4, 4, 4], 0), spec(5, &[5, 5, 5], 0)] {
            assert!(exact(&build_small_p_many_orbits(&s).unwrap(), &s));
        }
        assert!(build_small_p_many_orbits(&spec(3, &[3, 3, 3], 0)).is_err());
    }

    #[test]
    fn figure_three() {
        let s = spec(2, &[4, 4, 2], 0);
        let g = build_mixed_two_power(&s).unwrap();
        assert_eq!(g.n(), 10);
        for v in 0..4 {
            assert_eq!(g.i_degree(v, 1).unwrap(), 5);
        }
        assert!(exact(&g, &s));
    }

    #[test]
    fn order_two_small() {
        let g = build_order_two(1).unwrap();
        assert_eq!(g.colors(), &[1]);
        for r in 2..=3 {
            let g = build_order_two(r).unwrap();
            let s = spec(2, &vec![2; r], 0);
            let brute = automorphism_group_bruteforce(&g).unwrap();
            assert!(group_equals(&brute, &cyclic_group(&s).unwrap()).unwrap());
        }
    }

    #[test]
    fn builders_are_deterministic() {
        let s = spec(2, &[8, 4, 2, 2], 1);
        assert_eq!(
            build_mixed_two_power(&s).unwrap().to_json(),
            build_mixed_two_power(&s).unwrap().to_json()
        );
    }
}

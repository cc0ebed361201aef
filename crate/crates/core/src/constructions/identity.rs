//! Asymmetric colored graphs, the witnesses for trivial groups.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::autsearch::order_equals;
use crate::error::{Error, Result};
use crate::graph::{pair_count, Color, ColoredGraph};

const ATTEMPTS: u64 = 100_000;

fn cache() -> &'static Mutex<HashMap<(usize, usize), ColoredGraph>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), ColoredGraph>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Fewest colors of a graph on `n` vertices with trivial automorphism group;
/// `None` for `n = 2`, where none exists.
pub fn identity_colors(n: usize) -> Option<usize> {
    match n {
        0 | 2 => None,
        1 => Some(1),
        3..=5 => Some(3),
        _ => Some(2),
    }
}

/// An `n`-vertex graph with trivial automorphism group using exactly `k`
/// colors, found by a seeded search over random colorings. Deterministic.
pub fn asymmetric_graph(n: usize, k: usize) -> Result<ColoredGraph> {
    if n == 1 {
        return ColoredGraph::new(1, 1);
    }
    if k == 0 || k > pair_count(n) {
        return Err(Error::InvalidArgument(format!(
            "cannot use exactly {k} colors on {} pairs",
            pair_count(n)
        )));
    }
    if let Some(g) = cache().lock().expect("cache poisoned").get(&(n, k)) {
        return Ok(g.clone());
    }
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(attempt);
        let colors: Vec<Color> = (0..pair_count(n)).map(|_| rng.gen_range(0..k) as Color).collect();
        let g = ColoredGraph::from_colors(n, k, colors)?;
        if g.colors_used() == k && order_equals(&g, 1)?.0 {
            cache().lock().expect("cache poisoned").insert((n, k), g.clone());
            return Ok(g);
        }
    }
    Err(Error::Verification(format!(
        "no asymmetric {k}-colored graph on {n} vertices within {ATTEMPTS} attempts"
    )))
}

/// Witness for the trivial group on `n` points with the fewest colors.
pub fn identity_witness(n: usize) -> Result<ColoredGraph> {
    let k = identity_colors(n).ok_or_else(|| {
        Error::Shape(format!("the trivial group on {n} points is not an automorphism group"))
    })?;
    asymmetric_graph(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autsearch::automorphism_group_bruteforce;

    #[test]
    fn small_witnesses_are_asymmetric() {
        for n in [1, 3, 4, 5, 6, 7] {
            let g = identity_witness(n).unwrap();
            assert_eq!(automorphism_group_bruteforce(&g).unwrap().order(), 1, "n={n}");
            assert_eq!(g.colors_used(), if n == 1 { 0 } else { identity_colors(n).unwrap() });
        }
        assert!(identity_witness(2).is_err());
    }

    #[test]
    fn two_colors_do_not_suffice_below_six() {
        for n in 3..=5 {
            assert!(asymmetric_graph(n, 2).is_err());
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(asymmetric_graph(9, 2).unwrap(), asymmetric_graph(9, 2).unwrap());
    }
}

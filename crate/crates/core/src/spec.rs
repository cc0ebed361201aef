//! Cyclic groups of prime power order described by their orbit sizes, and
//! the vertex numbering every construction uses.
//!
//! Orbits are laid out contiguously: nontrivial orbits first in
//! non-increasing size, then the fixed points. The `i`-th point of orbit `j`
//! is vertex `base_j + i`, and the generator sends it to `base_j + (i+1) mod size_j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A cyclic permutation group of prime power order: one orbit of size
/// `p^e` per exponent plus `trivial_count` fixed points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclicSpec {
    p: u64,
    exponents: Vec<u32>,
    trivial_count: usize,
}

impl CyclicSpec {
    pub fn new(p: u64, mut exponents: Vec<u32>, trivial_count: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(&e) = exponents.iter().find(|&&e| e == 0) {
            return Err(Error::NotPowerOfPrime { p, size: p.pow(e) });
        }
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        let spec = CyclicSpec {
            p,
            exponents,
            trivial_count,
        };
        if spec.degree() == 0 {
            return Err(Error::DegreeTooSmall { min: 1, got: 0 });
        }
        Ok(spec)
    }

    /// Orbit sizes as stated on the command line; each must be `p^e`, `e >= 1`.
    pub fn from_orbit_sizes(p: u64, sizes: &[u64], fixed: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let exponents = sizes
            .iter()
            .map(|&size| exponent_of(p, size).ok_or(Error::NotPowerOfPrime { p, size }))
            .collect::<Result<Vec<_>>>()?;
        CyclicSpec::new(p, exponents, fixed)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn trivial_count(&self) -> usize {
        self.trivial_count
    }

    /// Largest exponent; 0 for the identity group.
    pub fn max_exponent(&self) -> u32 {
        self.exponents.first().copied().unwrap_or(0)
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.max_exponent())
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .map(|&e| self.p.pow(e) as usize)
            .collect()
    }

    pub fn nontrivial_count(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.orbit_sizes().iter().sum::<usize>() + self.trivial_count
    }

    /// Size of the small companion orbit in the `p ∈ {2,3,5}` constructions:
    /// `p` for 3 and 5, 4 for 2.
    pub fn n_p(&self) -> Option<usize> {
        match self.p {
            2 => Some(4),
            3 | 5 => Some(self.p as usize),
            _ => None,
        }
    }

    /// Number of nontrivial orbits of size exactly `size`.
    pub fn count_of_size(&self, size: usize) -> usize {
        self.orbit_sizes().iter().filter(|&&s| s == size).count()
    }

    pub fn count_larger_than(&self, size: usize) -> usize {
        self.orbit_sizes().iter().filter(|&&s| s > size).count()
    }

    pub fn without_trivial(&self) -> CyclicSpec {
        CyclicSpec {
            trivial_count: 0,
            ..self.clone()
        }
    }

    pub fn with_trivial(&self, trivial_count: usize) -> CyclicSpec {
        CyclicSpec {
            trivial_count,
            ..self.clone()
        }
    }

    pub fn layout(&self) -> OrbitLayout {
        OrbitLayout::new(&self.orbit_sizes(), self.trivial_count)
    }

    /// Every valid spec over the given primes with `1 <= degree <= max_degree`,
    /// in a deterministic order. Identity specs are listed once per prime.
    pub fn enumerate(primes: &[u64], max_degree: usize) -> Vec<CyclicSpec> {
        let mut out = Vec::new();
        for &p in primes {
            let sizes: Vec<(u32, usize)> = (1..)
                .map(|e| (e, p.pow(e) as usize))
                .take_while(|&(_, s)| s <= max_degree)
                .collect();
            let mut multisets = Vec::new();
            multisets_up_to(&sizes, 0, max_degree, &mut Vec::new(), &mut multisets);
            for exps in multisets {
                let used: usize = exps.iter().map(|&e| p.pow(e) as usize).sum();
                for q in 0..=(max_degree - used) {
                    if used + q == 0 {
                        continue;
                    }
                    out.push(CyclicSpec::new(p, exps.clone(), q).expect("valid by construction"));
                }
            }
        }
        out
    }
}

fn multisets_up_to(
    sizes: &[(u32, usize)],
    from: usize,
    budget: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    out.push(cur.clone());
    for i in from..sizes.len() {
        let (e, s) = sizes[i];
        if s <= budget {
            cur.push(e);
            multisets_up_to(sizes, i, budget - s, cur, out);
            cur.pop();
        }
    }
}

fn exponent_of(p: u64, size: u64) -> Option<u32> {
    let mut e = 0;
    let mut x = size;
    if x < p {
        return None;
    }
    while x > 1 {
        if !x.is_multiple_of(p) {
            return None;
        }
        x /= p;
        e += 1;
    }
    Some(e)
}

impl fmt::Display for CyclicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.orbit_sizes().iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "p={} orbits=[{}] fixed={}",
            self.p,
            sizes.join(","),
            self.trivial_count
        )
    }
}

/// Serialized form, matching the command-line convention of orbit sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub p: u64,
    pub orbits: Vec<u64>,
    pub fixed: usize,
}

impl From<&CyclicSpec> for SpecRecord {
    fn from(s: &CyclicSpec) -> Self {
        SpecRecord {
            p: s.p,
            orbits: s.orbit_sizes().iter().map(|&x| x as u64).collect(),
            fixed: s.trivial_count,
        }
    }
}

impl TryFrom<&SpecRecord> for CyclicSpec {
    type Error = Error;
    fn try_from(r: &SpecRecord) -> Result<Self> {
        CyclicSpec::from_orbit_sizes(r.p, &r.orbits, r.fixed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub base: usize,
    pub size: usize,
}

impl Orbit {
    /// Vertex `i mod size` of this orbit.
    #[inline]
    pub fn vertex(&self, i: usize) -> usize {
        self.base + i % self.size
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= self.base && v < self.base + self.size
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        self.base..self.base + self.size
    }
}

/// Contiguous orbit numbering: nontrivial orbits (non-increasing size) first,
/// then one singleton orbit per fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLayout {
    orbits: Vec<Orbit>,
    nontrivial: usize,
    degree: usize,
}

impl OrbitLayout {
    pub fn new(nontrivial_sizes: &[usize], trivial_count: usize) -> Self {
        let mut sizes = nontrivial_sizes.to_vec();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut orbits = Vec::new();
        let mut base = 0;
        for s in &sizes {
            orbits.push(Orbit { base, size: *s });
            base += s;
        }
        for _ in 0..trivial_count {
            orbits.push(Orbit { base, size: 1 });
            base += 1;
        }
        OrbitLayout {
            orbits,
            nontrivial: sizes.len(),
            degree: base,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn nontrivial(&self) -> &[Orbit] {
        &self.orbits[..self.nontrivial]
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.orbits[self.nontrivial..].iter().map(|o| o.base)
    }

    pub fn orbit(&self, j: usize) -> Orbit {
        self.orbits[j]
    }

    /// `(orbit index, position)` of a vertex.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        let j = self.orbits.partition_point(|o| o.base + o.size <= v);
        (j, v - self.orbits[j].base)
    }

    /// Human label `v^j_i` with 1-based orbit index, fixed points as `x_i`.
    pub fn label(&self, v: usize) -> String {
        let (j, i) = self.locate(v);
        if j < self.nontrivial {
            format!("v^{}_{}", j + 1, i)
        } else {
            format!("x_{}", j - self.nontrivial)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_validated() {
        assert!(matches!(
            CyclicSpec::from_orbit_sizes(4, &[4], 0),
            Err(Error::NotPrime(4))
        ));
        assert!(CyclicSpec::from_orbit_sizes(3, &[6], 0).is_err());
        assert!(CyclicSpec::from_orbit_sizes(3, &[1], 0).is_err());
        assert!(CyclicSpec::from_orbit_sizes(3, &[], 0).is_err());
        let s = CyclicSpec::from_orbit_sizes(5, &[5, 25], 2).unwrap();
        assert_eq!(s.exponents(), &[2, 1]);
        assert_eq!(s.degree(), 32);
        assert_eq!(s.order(), 25);
        assert_eq!(s.n_p(), Some(5));
    }

    #[test]
    fn layout_numbering() {
        let l = CyclicSpec::from_orbit_sizes(2, &[2, 4], 1).unwrap().layout();
        assert_eq!(l.orbit(0), Orbit { base: 0, size: 4 });
        assert_eq!(l.orbit(1), Orbit { base: 4, size: 2 });
        assert_eq!(l.orbit(2), Orbit { base: 6, size: 1 });
        assert_eq!(l.locate(5), (1, 1));
        assert_eq!(l.label(5), "v^2_1");
        assert_eq!(l.label(6), "x_0");
        assert_eq!(l.orbit(0).vertex(5), 1);
    }

    #[test]
    fn enumeration_respects_degree() {
        let all = CyclicSpec::enumerate(&[2, 3, 5, 7], 10);
        assert!(all.iter().all(|s| (1..=10).contains(&s.degree())));
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.contains(&CyclicSpec::from_orbit_sizes(2, &[4, 4], 2).unwrap()));
        assert!(all.contains(&CyclicSpec::from_orbit_sizes(7, &[], 3).unwrap()));
    }
}

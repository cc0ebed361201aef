//! Edge orbits, 2*-closure, and the GR(k) membership oracle.
//!
//! A group `A` is the automorphism group of some colored graph exactly when
//! it equals the automorphism group of the graph that gives each of its edge
//! orbits its own color. Any witness graph must color edge orbits uniformly,
//! so deciding `A ∈ GR(k)` amounts to trying the colorings of the edge orbits
//! with at most `k` colors, up to renaming colors, i.e. the set partitions of
//! the orbits into at most `k` blocks.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::autsearch::{automorphism_group, order_equals};
use crate::error::{Error, Result};
use crate::graph::{pair_at, pair_count, pair_index, Color, ColoredGraph};
use crate::group::{PermGroup, UnionFind};
use crate::par::{self, Parallelism};
use crate::perm::Permutation;
use crate::spec::SpecRecord;

/// Orbits of a group on unordered vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrbitPartition {
    n: usize,
    orbit_of: Vec<u32>,
    representatives: Vec<(usize, usize)>,
    sizes: Vec<usize>,
}

impl EdgeOrbitPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn orbit_of_pair(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.orbit_of[pair_index(self.n, a, b)] as usize
    }

    /// Orbit id per pair, in triangular pair order.
    pub fn orbit_ids(&self) -> &[u32] {
        &self.orbit_of
    }

    /// Smallest pair of each orbit.
    pub fn representatives(&self) -> &[(usize, usize)] {
        &self.representatives
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// The graph that colors orbit `i` with `coloring[i]`.
    pub fn colored_graph(&self, coloring: &[Color], k: usize) -> Result<ColoredGraph> {
        if coloring.len() != self.count() {
            return Err(Error::InvalidArgument(format!(
                "coloring covers {} orbits, partition has {}",
                coloring.len(),
                self.count()
            )));
        }
        let colors = self.orbit_of.iter().map(|&o| coloring[o as usize]).collect();
        ColoredGraph::from_colors(self.n, k.max(1), colors)
    }

    /// Whether `g` is constant on every orbit.
    pub fn is_invariant_coloring(&self, g: &ColoredGraph) -> bool {
        let mut seen: Vec<Option<Color>> = vec![None; self.count()];
        for (idx, &o) in self.orbit_of.iter().enumerate() {
            let c = g.colors()[idx];
            match seen[o as usize] {
                None => seen[o as usize] = Some(c),
                Some(prev) if prev != c => return false,
                _ => {}
            }
        }
        true
    }

    /// Where `perm` sends each orbit, if it maps orbits onto orbits.
    pub fn orbit_action(&self, perm: &Permutation) -> Option<Vec<usize>> {
        if perm.degree() != self.n {
            return None;
        }
        let mut image = vec![usize::MAX; self.count()];
        for (idx, &o) in self.orbit_of.iter().enumerate() {
            let (u, v) = pair_at(self.n, idx);
            let (a, b) = (perm.apply(u), perm.apply(v));
            let target = self.orbit_of_pair(a, b);
            let slot = &mut image[o as usize];
            if *slot == usize::MAX {
                *slot = target;
            } else if *slot != target {
                return None;
            }
        }
        Some(image)
    }

    /// `perm` maps every orbit onto itself.
    pub fn is_stabilized_by(&self, perm: &Permutation) -> bool {
        self.orbit_action(perm)
            .map(|img| img.iter().enumerate().all(|(i, &j)| i == j))
            .unwrap_or(false)
    }
}

pub fn edge_orbits(a: &PermGroup) -> Result<EdgeOrbitPartition> {
    let n = a.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    let m = pair_count(n);
    let mut uf = UnionFind::new(m);
    for g in a.generators() {
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                let (x, y) = (g.apply(u), g.apply(v));
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                uf.union(idx, pair_index(n, x, y));
                idx += 1;
            }
        }
    }
    let mut orbit_of = vec![0u32; m];
    let mut root_id = vec![u32::MAX; m];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for (idx, slot) in orbit_of.iter_mut().enumerate() {
        let r = uf.find(idx);
        if root_id[r] == u32::MAX {
            root_id[r] = representatives.len() as u32;
            representatives.push(pair_at(n, idx));
            sizes.push(0);
        }
        *slot = root_id[r];
        sizes[root_id[r] as usize] += 1;
    }
    Ok(EdgeOrbitPartition {
        n,
        orbit_of,
        representatives,
        sizes,
    })
}

/// The graph giving every edge orbit of `a` its own color.
pub fn closure_graph(a: &PermGroup) -> Result<ColoredGraph> {
    let orbits = edge_orbits(a)?;
    let coloring: Vec<Color> = (0..orbits.count())
        .map(|i| Color::try_from(i).map_err(|_| Error::InvalidArgument("too many edge orbits".into())))
        .collect::<Result<_>>()?;
    orbits.colored_graph(&coloring, orbits.count())
}

pub fn two_star_closure(a: &PermGroup) -> Result<PermGroup> {
    automorphism_group(&closure_graph(a)?)
}

/// `A` equals its 2*-closure. On `false`, also returns an automorphism of the
/// closure graph outside `A`.
pub fn is_two_star_closed(a: &PermGroup) -> Result<(bool, Option<Permutation>)> {
    if a.degree() < 2 {
        return Ok((true, None));
    }
    let g = closure_graph(a)?;
    let (equal, gens) = order_equals(&g, a.order())?;
    if equal {
        return Ok((true, None));
    }
    let extra = first_outside(a, &gens)?;
    Ok((false, extra))
}

fn first_outside(a: &PermGroup, gens: &[Permutation]) -> Result<Option<Permutation>> {
    for g in gens {
        if !a.contains(g)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of colorings enumerated exhaustively per query.
    pub budget: u64,
    /// Random colorings tried when the enumeration would exceed the budget.
    pub random_attempts: u64,
    pub seed: u64,
    pub parallelism: Parallelism,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: 200_000,
            random_attempts: 20_000,
            seed: 0x5eed,
            parallelism: Parallelism::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    Member,
    NotMember,
    /// Enumeration would exceed the budget and the random search found no witness.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub spec: Option<SpecRecord>,
    pub degree: usize,
    pub group_order: u128,
    pub k: usize,
    pub status: Membership,
    pub exhaustive: bool,
    pub edge_orbits: usize,
    pub colorings_examined: u64,
    /// Color per edge orbit of a coloring whose automorphism group is exactly `A`.
    pub witness_coloring: Option<Vec<Color>>,
    /// Permutations outside `A`; every examined coloring is preserved by at
    /// least one of them.
    #[serde(serialize_with = "serialize_perms")]
    pub extra_automorphisms: Vec<Permutation>,
}

fn serialize_perms<S: serde::Serializer>(perms: &[Permutation], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(perms.iter().map(|p| p.to_string()))
}

impl MembershipReport {
    pub fn member(&self) -> bool {
        self.status == Membership::Member
    }

    pub fn witness_graph(&self, orbits: &EdgeOrbitPartition) -> Option<ColoredGraph> {
        self.witness_coloring
            .as_ref()
            .and_then(|c| orbits.colored_graph(c, self.k).ok())
    }
}

/// `sum_{j <= k} S(m, j)`, saturating.
pub fn partitions_up_to(m: usize, k: usize) -> u128 {
    if m == 0 {
        return 1;
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..m {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k {
            next[j] = row[j - 1].saturating_add((j as u128).saturating_mul(row[j]));
        }
        row = next;
    }
    row[1..].iter().fold(0u128, |a, &b| a.saturating_add(b))
}

/// Restricted growth strings of length `m` over at most `k` symbols, in
/// lexicographic order: each set partition of `0..m` into at most `k` blocks
/// exactly once.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    cur: Vec<Color>,
    k: usize,
    done: bool,
}

impl SetPartitions {
    pub fn new(m: usize, k: usize) -> Self {
        SetPartitions {
            cur: vec![0; m],
            k,
            done: k == 0 && m > 0,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<Color>;

    fn next(&mut self) -> Option<Vec<Color>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let m = self.cur.len();
        let mut prefix_max = vec![0 as Color; m];
        for i in 1..m {
            prefix_max[i] = prefix_max[i - 1].max(self.cur[i - 1]);
        }
        let mut advanced = false;
        for i in (1..m).rev() {
            if (self.cur[i] as usize) + 1 < self.k && self.cur[i] <= prefix_max[i] {
                self.cur[i] += 1;
                for x in &mut self.cur[i + 1..] {
                    *x = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}

/// Relabels colors in order of first appearance.
fn normalize(coloring: &mut [Color]) {
    let mut map: Vec<Option<Color>> = vec![None; coloring.len().max(1) + 1];
    let mut next = 0;
    for c in coloring.iter_mut() {
        let slot = &mut map[*c as usize];
        let new = *slot.get_or_insert_with(|| {
            next += 1;
            next - 1
        });
        *c = new;
    }
}

enum Outcome {
    Witness(Vec<Color>),
    Rejected,
}

struct Evaluator<'a> {
    group: &'a PermGroup,
    orbits: &'a EdgeOrbitPartition,
    k: usize,
}

impl Evaluator<'_> {
    /// Tests one coloring, consulting and extending a local cache of
    /// permutations outside the group.
    fn evaluate(&self, coloring: &[Color], cache: &mut Vec<Permutation>) -> Result<Outcome> {
        let g = self.orbits.colored_graph(coloring, self.k)?;
        for extra in cache.iter() {
            if crate::autsearch::is_automorphism(&g, extra)? {
                return Ok(Outcome::Rejected);
            }
        }
        let (equal, gens) = order_equals(&g, self.group.order())?;
        if equal {
            return Ok(Outcome::Witness(coloring.to_vec()));
        }
        match first_outside(self.group, &gens)? {
            Some(extra) => {
                cache.push(extra);
                Ok(Outcome::Rejected)
            }
            None => Err(Error::Verification(
                "automorphism group grew but every generator lies in the group; \
                 the group does not act on its own orbit coloring"
                    .into(),
            )),
        }
    }
}

const CHUNK: usize = 512;

struct ChunkResult {
    witness: Option<Vec<Color>>,
    extras: Vec<Permutation>,
    examined: u64,
}

fn run_chunks(
    eval: &Evaluator<'_>,
    chunks: &[Vec<Vec<Color>>],
    mode: Parallelism,
) -> Result<(Option<Vec<Color>>, Vec<Permutation>, u64)> {
    let first_hit = AtomicUsize::new(usize::MAX);
    let indexed: Vec<(usize, &Vec<Vec<Color>>)> = chunks.iter().enumerate().collect();
    let results: Vec<Result<Option<ChunkResult>>> = par::map(mode, &indexed, |(ci, chunk)| {
        if *ci > first_hit.load(Ordering::Relaxed) {
            return Ok(None);
        }
        let mut cache = Vec::new();
        let mut examined = 0;
        for coloring in chunk.iter() {
            examined += 1;
            if let Outcome::Witness(w) = eval.evaluate(coloring, &mut cache)? {
                first_hit.fetch_min(*ci, Ordering::Relaxed);
                return Ok(Some(ChunkResult {
                    witness: Some(w),
                    extras: cache,
                    examined,
                }));
            }
        }
        Ok(Some(ChunkResult {
            witness: None,
            extras: cache,
            examined,
        }))
    });
    let mut extras: Vec<Permutation> = Vec::new();
    let mut examined = 0;
    for r in results {
        let Some(r) = r? else { continue };
        examined += r.examined;
        if let Some(w) = r.witness {
            return Ok((Some(w), Vec::new(), examined));
        }
        for e in r.extras {
            if !extras.contains(&e) {
                extras.push(e);
            }
        }
    }
    Ok((None, extras, examined))
}

/// Decides `A ∈ GR(k)` by trying the colorings of the edge orbits of `A`.
pub fn gr_k_membership(a: &PermGroup, k: usize, config: &OracleConfig) -> Result<MembershipReport> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let mut report = MembershipReport {
        spec: None,
        degree: a.degree(),
        group_order: a.order(),
        k,
        status: Membership::NotMember,
        exhaustive: true,
        edge_orbits: 0,
        colorings_examined: 0,
        witness_coloring: None,
        extra_automorphisms: Vec::new(),
    };
    if a.degree() < 2 {
        // the one-point graph has only the identity
        report.status = Membership::Member;
        report.witness_coloring = Some(Vec::new());
        return Ok(report);
    }
    let orbits = edge_orbits(a)?;
    let m = orbits.count();
    report.edge_orbits = m;
    let eval = Evaluator {
        group: a,
        orbits: &orbits,
        k,
    };

    if partitions_up_to(m, k) <= config.budget as u128 {
        let all: Vec<Vec<Color>> = SetPartitions::new(m, k).collect();
        let chunks: Vec<Vec<Vec<Color>>> = all.chunks(CHUNK).map(|c| c.to_vec()).collect();
        let (witness, extras, examined) = run_chunks(&eval, &chunks, config.parallelism)?;
        report.colorings_examined = examined;
        match witness {
            Some(w) => {
                report.status = Membership::Member;
                report.witness_coloring = Some(w);
            }
            None => {
                report.status = Membership::NotMember;
                report.extra_automorphisms = extras;
            }
        }
        return Ok(report);
    }

    report.exhaustive = false;
    let attempts: Vec<u64> = (0..config.random_attempts).collect();
    let chunks: Vec<Vec<Vec<Color>>> = attempts
        .chunks(CHUNK)
        .map(|idx| {
            idx.iter()
                .map(|&i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ i);
                    let mut c: Vec<Color> = (0..m).map(|_| rng.gen_range(0..k) as Color).collect();
                    normalize(&mut c);
                    c
                })
                .collect()
        })
        .collect();
    let (witness, extras, examined) = run_chunks(&eval, &chunks, config.parallelism)?;
    report.colorings_examined = examined;
    match witness {
        Some(w) => {
            report.status = Membership::Member;
            report.witness_coloring = Some(w);
        }
        None => {
            report.status = Membership::Inconclusive;
            report.extra_automorphisms = extras;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub enum MinColors {
    /// Not 2*-closed: the closure contains this permutation outside the group.
    NotInGr { extra: Permutation },
    Colors { k: usize, report: MembershipReport },
    /// In GR but not within `k_max` colors.
    AboveMax { k_max: usize },
    Inconclusive { k: usize, report: MembershipReport },
}

/// Least number of colors of a graph whose automorphism group is exactly `a`.
pub fn min_colors(a: &PermGroup, k_max: usize, config: &OracleConfig) -> Result<MinColors> {
    let (closed, extra) = is_two_star_closed(a)?;
    if !closed {
        let extra = extra.ok_or_else(|| {
            Error::Verification("closure larger than the group without a witness".into())
        })?;
        return Ok(MinColors::NotInGr { extra });
    }
    for k in 1..=k_max {
        let report = gr_k_membership(a, k, config)?;
        match report.status {
            Membership::Member => return Ok(MinColors::Colors { k, report }),
            Membership::Inconclusive => return Ok(MinColors::Inconclusive { k, report }),
            Membership::NotMember => {}
        }
    }
    Ok(MinColors::AboveMax { k_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, dihedral_group, group_equals, symmetric_group};
    use crate::spec::CyclicSpec;

    fn cyc(p: u64, sizes: &[u64], fixed: usize) -> PermGroup {
        cyclic_group(&CyclicSpec::from_orbit_sizes(p, sizes, fixed).unwrap()).unwrap()
    }

    /// Orbits by direct enumeration of all group elements on all pairs.
    fn brute_orbit_count(a: &PermGroup) -> usize {
        let n = a.degree();
        let els = a.elements(1 << 20).unwrap();
        let mut seen = vec![false; pair_count(n)];
        let mut count = 0;
        for idx in 0..pair_count(n) {
            if seen[idx] {
                continue;
            }
            count += 1;
            let (u, v) = pair_at(n, idx);
            for g in &els {
                let (x, y) = (g.apply(u), g.apply(v));
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                seen[pair_index(n, x, y)] = true;
            }
        }
        count
    }

    #[test]
    fn edge_orbit_counts() {
        let c3 = cyc(3, &[3], 0);
        let o = edge_orbits(&c3).unwrap();
        assert_eq!((o.count(), o.sizes()), (1, &[3][..]));
        let c33 = cyc(3, &[3, 3], 0);
        assert_eq!(brute_orbit_count(&c33), 5);
        assert_eq!(edge_orbits(&c33).unwrap().count(), 5);
        let c55 = cyc(5, &[5, 5], 0);
        assert_eq!(brute_orbit_count(&c55), 9);
        assert_eq!(edge_orbits(&c55).unwrap().count(), 9);
        for spec in CyclicSpec::enumerate(&[2, 3], 9) {
            if spec.degree() < 2 {
                continue;
            }
            let a = cyclic_group(&spec).unwrap();
            assert_eq!(edge_orbits(&a).unwrap().count(), brute_orbit_count(&a), "{spec}");
        }
    }

    #[test]
    fn orbit_ids_follow_smallest_pair() {
        let o = edge_orbits(&cyc(3, &[3, 3], 0)).unwrap();
        let reps = o.representatives();
        assert_eq!(reps[0], (0, 1));
        assert!(reps.windows(2).all(|w| pair_index(6, w[0].0, w[0].1) < pair_index(6, w[1].0, w[1].1)));
    }

    #[test]
    fn closure_examples() {
        let c3 = cyc(3, &[3], 0);
        let cl = two_star_closure(&c3).unwrap();
        assert!(group_equals(&cl, &symmetric_group(3).unwrap()).unwrap());
        let c77 = cyc(7, &[7, 7], 0);
        assert!(group_equals(&two_star_closure(&c77).unwrap(), &c77).unwrap());
        let s2 = cyc(2, &[2], 0);
        assert!(group_equals(&two_star_closure(&s2).unwrap(), &s2).unwrap());
        let c5 = cyc(5, &[5], 0);
        assert!(group_equals(&two_star_closure(&c5).unwrap(), &dihedral_group(5).unwrap()).unwrap());
    }

    #[test]
    fn set_partition_counts() {
        for m in 0..8 {
            for k in 1..4 {
                let n = SetPartitions::new(m, k).count() as u128;
                assert_eq!(n, partitions_up_to(m, k), "m={m} k={k}");
            }
        }
        assert_eq!(partitions_up_to(4, 4), 15);
        let first: Vec<Vec<Color>> = SetPartitions::new(3, 2).collect();
        assert_eq!(first, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
    }

    #[test]
    fn membership_examples() {
        let cfg = OracleConfig::default();
        let c33 = cyc(3, &[3, 3], 0);
        let r2 = gr_k_membership(&c33, 2, &cfg).unwrap();
        assert_eq!(r2.status, Membership::NotMember);
        assert!(r2.exhaustive);
        let sigma = Permutation::from_cycles(6, &[&[1, 2], &[4, 5]]).unwrap();
        assert!(r2.extra_automorphisms.iter().all(|e| !c33.contains(e).unwrap()));
        let r3 = gr_k_membership(&c33, 3, &cfg).unwrap();
        assert!(r3.member());
        let orbits = edge_orbits(&c33).unwrap();
        let w = r3.witness_graph(&orbits).unwrap();
        assert!(group_equals(&automorphism_group(&w).unwrap(), &c33).unwrap());
        // sigma preserves every 2-coloring of C_3^(2)'s orbits up to O_2 rotation;
        // at least the all-zero one directly
        let mono = orbits.colored_graph(&vec![0; orbits.count()], 2).unwrap();
        assert!(crate::autsearch::is_automorphism(&mono, &sigma).unwrap());

        let c44 = cyc(2, &[4, 4], 0);
        assert_eq!(gr_k_membership(&c44, 2, &cfg).unwrap().status, Membership::NotMember);
    }

    #[test]
    fn min_colors_examples() {
        let cfg = OracleConfig::default();
        assert!(matches!(min_colors(&cyc(3, &[3, 3], 0), 3, &cfg).unwrap(), MinColors::Colors { k: 3, .. }));
        assert!(matches!(min_colors(&cyc(7, &[7, 7], 0), 3, &cfg).unwrap(), MinColors::Colors { k: 2, .. }));
        assert!(matches!(min_colors(&cyc(5, &[5], 0), 3, &cfg).unwrap(), MinColors::NotInGr { .. }));
    }

    #[test]
    fn budget_exhaustion_is_not_false() {
        let cfg = OracleConfig {
            budget: 10,
            random_attempts: 3,
            ..OracleConfig::default()
        };
        let c33 = cyc(3, &[3, 3], 0);
        let r = gr_k_membership(&c33, 2, &cfg).unwrap();
        assert_eq!(r.status, Membership::Inconclusive);
        assert!(!r.exhaustive);
    }
}

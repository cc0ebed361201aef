//! Automorphism groups of colored graphs.
//!
//! The main engine refines ordered vertex partitions to equitable ones
//! (every vertex of a cell sees the same number of vertices of each cell in
//! each color), individualizes vertices along a leftmost path to a discrete
//! partition, and then, from the deepest level up, decides for every vertex
//! of each target cell whether some automorphism fixing the earlier base
//! points sends the base point there. The group order is the product of the
//! resulting basic orbit lengths.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::group::{PermGroup, UnionFind};
use crate::perm::Permutation;

/// Hard cap for [`automorphism_group_bruteforce`]; overridable through this
/// environment variable.
pub const BRUTE_FORCE_CAP_ENV: &str = "CYCGRAPH_BRUTE_CAP";
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 8;

pub fn brute_force_cap() -> usize {
    std::env::var(BRUTE_FORCE_CAP_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BRUTE_FORCE_CAP)
}

pub fn is_automorphism(g: &ColoredGraph, perm: &Permutation) -> Result<bool> {
    if perm.degree() != g.n() {
        return Err(Error::DegreeMismatch {
            left: g.n(),
            right: perm.degree(),
        });
    }
    Ok(preserves(g, perm.images()))
}

#[inline]
fn preserves(g: &ColoredGraph, images: &[usize]) -> bool {
    let n = g.n();
    let colors = g.colors();
    let mut idx = 0;
    for (u, &gu) in images.iter().enumerate() {
        for &gv in &images[u + 1..n] {
            if g.color(gu, gv) != colors[idx] {
                return false;
            }
            idx += 1;
        }
    }
    true
}

/// Exhaustive check of all `n!` permutations. Independent of the refinement engine.
pub fn automorphism_group_bruteforce(g: &ColoredGraph) -> Result<PermGroup> {
    automorphism_group_bruteforce_capped(g, brute_force_cap())
}

pub fn automorphism_group_bruteforce_capped(g: &ColoredGraph, cap: usize) -> Result<PermGroup> {
    let n = g.n();
    if n > cap {
        return Err(Error::BruteForceCap { n, cap });
    }
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let mut images: Vec<usize> = (0..n).collect();
    let mut found = Vec::new();
    loop {
        if preserves(g, &images) {
            found.push(Permutation::from_images_unchecked(images.clone()));
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    let order = found.len() as u128;
    PermGroup::with_order(n, independent_generators(found), order)
}

/// Keeps only the automorphisms not generated by the ones kept before them,
/// tracking the generated subgroup explicitly (it has at most `n!` elements).
fn independent_generators(all: Vec<Permutation>) -> Vec<Permutation> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut elements: Vec<Vec<usize>> = all.first().map(|p| p.images().to_vec()).into_iter().collect();
    seen.extend(elements.iter().cloned());
    let mut gens: Vec<Permutation> = Vec::new();
    for p in all {
        if seen.contains(p.images()) {
            continue;
        }
        gens.push(p);
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let prod: Vec<usize> = elements[i].iter().map(|&x| g.images()[x]).collect();
                if seen.insert(prod.clone()) {
                    elements.push(prod);
                }
            }
            i += 1;
        }
    }
    gens
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Vertices the automorphisms must fix pointwise.
    pub fixed: Vec<usize>,
    /// Stop as soon as the group is known to be larger than this.
    pub max_order: Option<u128>,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub generators: Vec<Permutation>,
    /// Exact order when `complete`, otherwise a lower bound exceeding `max_order`.
    pub order: u128,
    pub complete: bool,
}

impl SearchResult {
    pub fn into_group(self, n: usize) -> Result<PermGroup> {
        debug_assert!(self.complete);
        PermGroup::with_order(n, self.generators, self.order)
    }
}

pub fn automorphism_group(g: &ColoredGraph) -> Result<PermGroup> {
    search(g, &SearchOptions::default())?.into_group(g.n())
}

/// Pointwise stabilizer of `fixed` in `Aut(G)`.
pub fn automorphism_group_fixing(g: &ColoredGraph, fixed: &[usize]) -> Result<PermGroup> {
    let opts = SearchOptions {
        fixed: fixed.to_vec(),
        max_order: None,
    };
    search(g, &opts)?.into_group(g.n())
}

/// Whether the only automorphism fixing `v` is the identity. `h` must already
/// be known to lie inside `Aut(G)`; it is only checked for degree.
pub fn stabilizer_is_trivial(g: &ColoredGraph, v: usize, h: &PermGroup) -> Result<bool> {
    if h.degree() != g.n() {
        return Err(Error::DegreeMismatch {
            left: g.n(),
            right: h.degree(),
        });
    }
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let opts = SearchOptions {
        fixed: vec![v],
        max_order: Some(1),
    };
    Ok(search(g, &opts)?.order == 1)
}

/// `|Aut(G)| == bound`, given that a group of order `bound` is already known
/// to act on `G`. Stops early once more automorphisms turn up; in that case
/// the returned permutations generate a group larger than `bound`.
pub fn order_equals(g: &ColoredGraph, bound: u128) -> Result<(bool, Vec<Permutation>)> {
    let opts = SearchOptions {
        fixed: Vec::new(),
        max_order: Some(bound),
    };
    let r = search(g, &opts)?;
    Ok((r.complete && r.order == bound, r.generators))
}

/// Sparse `(cell, color) -> count` profile of one vertex.
type Profile = Vec<(u64, u32)>;

#[derive(Clone, Debug)]
struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    fn is_discrete(&self, n: usize) -> bool {
        self.cells.len() == n
    }

    fn cell_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, c) in self.cells.iter().enumerate() {
            for &v in c {
                out[v] = i;
            }
        }
        out
    }

    /// First smallest non-singleton cell.
    fn target(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    fn individualize(&self, v: usize) -> Partition {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for c in &self.cells {
            if c.contains(&v) && c.len() > 1 {
                cells.push(vec![v]);
                cells.push(c.iter().copied().filter(|&x| x != v).collect());
            } else {
                cells.push(c.clone());
            }
        }
        Partition { cells }
    }
}

fn profile(g: &ColoredGraph, cell_of: &[usize], v: usize, buf: &mut Vec<u64>) -> Profile {
    buf.clear();
    for (u, &cell) in cell_of.iter().enumerate() {
        if u != v {
            buf.push(((cell as u64) << 16) | g.color(u, v) as u64);
        }
    }
    buf.sort_unstable();
    let mut out: Profile = Vec::new();
    for &key in buf.iter() {
        match out.last_mut() {
            Some((k, c)) if *k == key => *c += 1,
            _ => out.push((key, 1)),
        }
    }
    out
}

/// Coarsest equitable refinement; cells split in the order of their profiles,
/// so the result depends only on the graph structure, not on vertex names.
fn refine(g: &ColoredGraph, mut part: Partition) -> (Partition, Vec<Profile>) {
    let n = g.n();
    let mut buf = Vec::with_capacity(n);
    loop {
        let cell_of = part.cell_of(n);
        let mut changed = false;
        let mut next = Vec::with_capacity(part.cells.len());
        let mut quotient = Vec::with_capacity(part.cells.len());
        for cell in &part.cells {
            if cell.len() == 1 {
                quotient.push(profile(g, &cell_of, cell[0], &mut buf));
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Profile, usize)> = cell
                .iter()
                .map(|&v| (profile(g, &cell_of, v, &mut buf), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    quotient.push(keyed[start].0.clone());
                    start = i;
                }
            }
            changed |= keyed.first().map(|f| f.0 != keyed.last().unwrap().0) == Some(true);
        }
        part = Partition { cells: next };
        if !changed {
            return (part, quotient);
        }
    }
}

struct Level {
    part: Partition,
    quotient: Vec<Profile>,
}

struct Engine<'a> {
    g: &'a ColoredGraph,
    levels: Vec<Level>,
    targets: Vec<usize>,
    base: Vec<usize>,
    leaf: Vec<usize>,
}

impl<'a> Engine<'a> {
    fn matches(&self, depth: usize, part: &Partition, quotient: &[Profile]) -> bool {
        let left = &self.levels[depth];
        left.part.cells.len() == part.cells.len()
            && left
                .part
                .cells
                .iter()
                .zip(&part.cells)
                .all(|(a, b)| a.len() == b.len())
            && left.quotient == quotient
    }

    /// Look for an automorphism mapping the leftmost leaf into the subtree
    /// rooted at `part` (already matched against level `depth`).
    fn descend(&self, depth: usize, part: &Partition) -> Option<Permutation> {
        let n = self.g.n();
        if depth == self.base.len() {
            let mut images = vec![0; n];
            for (c, &v) in self.leaf.iter().enumerate() {
                images[v] = part.cells[c][0];
            }
            return preserves(self.g, &images).then(|| Permutation::from_images_unchecked(images));
        }
        let t = self.targets[depth];
        for &y in &part.cells[t] {
            let (next, q) = refine(self.g, part.individualize(y));
            if self.matches(depth + 1, &next, &q) {
                if let Some(p) = self.descend(depth + 1, &next) {
                    return Some(p);
                }
            }
        }
        None
    }
}

/// Automorphism group search with optional fixed points and early exit.
pub fn search(g: &ColoredGraph, opts: &SearchOptions) -> Result<SearchResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let mut fixed = Vec::new();
    for &f in &opts.fixed {
        if f >= n {
            return Err(Error::VertexOutOfRange { vertex: f, n });
        }
        if !fixed.contains(&f) {
            fixed.push(f);
        }
    }
    let mut cells: Vec<Vec<usize>> = fixed.iter().map(|&f| vec![f]).collect();
    let rest: Vec<usize> = (0..n).filter(|v| !fixed.contains(v)).collect();
    if !rest.is_empty() {
        cells.push(rest);
    }
    let (root, root_q) = refine(g, Partition { cells });

    let mut levels = vec![Level {
        part: root,
        quotient: root_q,
    }];
    let mut targets = Vec::new();
    let mut base = Vec::new();
    while let Some(t) = levels.last().unwrap().part.target() {
        let cur = &levels.last().unwrap().part;
        let b = cur.cells[t][0];
        let (next, q) = refine(g, cur.individualize(b));
        targets.push(t);
        base.push(b);
        levels.push(Level {
            part: next,
            quotient: q,
        });
    }
    let leaf_part = &levels.last().unwrap().part;
    debug_assert!(leaf_part.is_discrete(n));
    let leaf: Vec<usize> = leaf_part.cells.iter().map(|c| c[0]).collect();

    let engine = Engine {
        g,
        levels,
        targets,
        base,
        leaf,
    };

    let mut generators = Vec::new();
    let mut orbits = UnionFind::new(n);
    let mut order: u128 = 1;
    for depth in (0..engine.base.len()).rev() {
        let b = engine.base[depth];
        let cell = &engine.levels[depth].part.cells[engine.targets[depth]];
        for &x in cell {
            if x == b || orbits.find(x) == orbits.find(b) {
                continue;
            }
            let (part, q) = refine(g, engine.levels[depth].part.individualize(x));
            if !engine.matches(depth + 1, &part, &q) {
                continue;
            }
            if let Some(gamma) = engine.descend(depth + 1, &part) {
                for v in 0..n {
                    orbits.union(v, gamma.apply(v));
                }
                generators.push(gamma);
            }
        }
        let root = orbits.find(b);
        let orbit_len = cell.iter().filter(|&&x| orbits.find(x) == root).count() as u128;
        order = order.checked_mul(orbit_len).ok_or(Error::OrderOverflow)?;
        if let Some(bound) = opts.max_order {
            if order > bound {
                return Ok(SearchResult {
                    generators,
                    order,
                    complete: false,
                });
            }
        }
    }
    Ok(SearchResult {
        generators,
        order,
        complete: true,
    })
}

/// Colors of the pairs as seen from `v`, useful in tests.
pub fn color_profile(g: &ColoredGraph, v: usize) -> Vec<usize> {
    let mut out = vec![0; g.k()];
    for u in 0..g.n() {
        if u != v {
            out[g.color(u, v) as usize] += 1;
        }
    }
    out
}

//! Permutations proving that a group is not the automorphism group of any
//! (or any 2-colored) graph.
//!
//! A permutation outside `A` that maps every edge orbit of `A` onto itself
//! preserves every coloring that is constant on edge orbits, and those are
//! the only candidates for a graph with automorphism group `A`.

use serde::Serialize;

use crate::closure::{edge_orbits, SetPartitions};
use crate::error::{Error, Result};
use crate::group::{cyclic_group, PermGroup};
use crate::perm::Permutation;
use crate::spec::{CyclicSpec, OrbitLayout};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Reflection of each nontrivial orbit.
    ReflectionAllOrbits,
    /// A reflection certificate extended by the identity on fixed points.
    Lifted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "serialize_display")]
    pub sigma: Permutation,
    pub kind: CertificateKind,
    pub description: String,
}

fn serialize_display<S: serde::Serializer>(p: &Permutation, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateCheck {
    pub outside_group: bool,
    pub stabilizes_vertex_orbits: bool,
    pub stabilizes_edge_orbits: bool,
}

impl CertificateCheck {
    pub fn holds(&self) -> bool {
        self.outside_group && self.stabilizes_vertex_orbits && self.stabilizes_edge_orbits
    }
}

impl Certificate {
    pub fn check(&self, a: &PermGroup) -> Result<CertificateCheck> {
        if self.sigma.degree() != a.degree() {
            return Err(Error::DegreeMismatch {
                left: a.degree(),
                right: self.sigma.degree(),
            });
        }
        let stabilizes_vertex_orbits = a
            .orbits()
            .iter()
            .all(|o| o.iter().all(|&v| o.contains(&self.sigma.apply(v))));
        let stabilizes_edge_orbits = a.degree() >= 2 && edge_orbits(a)?.is_stabilized_by(&self.sigma);
        Ok(CertificateCheck {
            outside_group: !a.contains(&self.sigma)?,
            stabilizes_vertex_orbits,
            stabilizes_edge_orbits,
        })
    }
}

/// `i -> shift - i` on every position of the orbit.
fn reflect(images: &mut [usize], base: usize, size: usize, shift: usize) {
    for i in 0..size {
        images[base + i] = base + (shift + size - i % size) % size;
    }
}

fn is_not_representable(spec: &CyclicSpec) -> bool {
    spec.order() >= 2 && spec.count_larger_than(2) == 1
}

/// Reflection certificate for a spec with exactly one orbit of size greater
/// than two. Odd `p`: `i -> -i` on that orbit. `p = 2`: `j -> n_i - j - 1`
/// on every nontrivial orbit, pairs included. Fixed points stay fixed.
pub fn negative_certificate(spec: &CyclicSpec) -> Result<Certificate> {
    if !is_not_representable(spec) {
        return Err(Error::Shape(format!(
            "{spec} is not of the form one orbit of size > 2 plus pairs and fixed points"
        )));
    }
    let layout = spec.layout();
    let mut images: Vec<usize> = (0..layout.degree()).collect();
    let desc = if spec.p() == 2 {
        for o in layout.nontrivial() {
            reflect(&mut images, o.base, o.size, o.size - 1);
        }
        "reflection j -> n_i - j - 1 of every nontrivial orbit"
    } else {
        let o = layout.orbit(0);
        reflect(&mut images, o.base, o.size, 0);
        "reflection i -> -i of the single nontrivial orbit"
    };
    let sigma = Permutation::from_images(images)?;
    let (kind, description) = if spec.trivial_count() > 0 {
        (CertificateKind::Lifted, format!("{desc}, identity on the fixed points"))
    } else {
        (CertificateKind::ReflectionAllOrbits, desc.to_string())
    };
    Ok(Certificate {
        sigma,
        kind,
        description,
    })
}

/// Number of coloring classes of the mixed edge orbits of `C_n^(2)`, up to
/// renaming colors and rotating the second orbit.
pub fn two_orbit_class_count(n: usize) -> Option<usize> {
    match n {
        3 => Some(2),
        4 | 5 => Some(4),
        _ => None,
    }
}

/// Mixed distances `d` (orbit of `{v_0, w_d}`) in the distinguished color of
/// class `class` (1-based): all one color, `{0}`, `{2, 3}`, `{1, n-1}`.
pub fn two_orbit_class_pattern(n: usize, class: usize) -> Result<Vec<bool>> {
    let count = two_orbit_class_count(n)
        .ok_or_else(|| Error::InvalidArgument(format!("n must be 3, 4 or 5, got {n}")))?;
    if class == 0 || class > count {
        return Err(Error::InvalidArgument(format!("class must be in 1..={count}, got {class}")));
    }
    let marked: &[usize] = match class {
        1 => &[],
        2 => &[0],
        3 => &[2, 3],
        _ => &[1, n - 1],
    };
    Ok((0..n).map(|d| marked.contains(&d)).collect())
}

/// Class and rotation of the second orbit bringing `mixed` (color per mixed
/// distance) to its class pattern: `mixed[(d + s) mod n]` matches
/// `pattern[d]` up to swapping the two colors.
pub fn two_orbit_class_of(n: usize, mixed: &[crate::graph::Color]) -> Option<(usize, usize)> {
    let count = two_orbit_class_count(n)?;
    if mixed.len() != n || mixed.iter().any(|&c| c > 1) {
        return None;
    }
    for class in 1..=count {
        let pat = two_orbit_class_pattern(n, class).ok()?;
        for s in 0..n {
            for flip in [false, true] {
                if (0..n).all(|d| (mixed[(d + s) % n] == 1) ^ flip == pat[d]) {
                    return Some((class, s));
                }
            }
        }
    }
    None
}

/// The permutation preserving the class-`class` coloring of `C_n^(2)`'s
/// mixed orbits: `σ: i -> -i` on both orbits, and for `n = 4`, class 3, the
/// product `τ = (v_0 v_1)(v_2 v_3)(w_0 w_1)(w_2 w_3)`. Vertices `v_i = i`,
/// `w_i = n + i`.
pub fn small_two_orbit_certificate(n: usize, class: usize) -> Result<Certificate> {
    two_orbit_class_pattern(n, class)?;
    if n == 4 && class == 3 {
        let sigma = Permutation::from_cycles(8, &[&[0, 1], &[2, 3], &[4, 5], &[6, 7]])?;
        return Ok(Certificate {
            sigma,
            kind: CertificateKind::ReflectionAllOrbits,
            description: "simultaneous i -> 1 - i on both orbits".into(),
        });
    }
    let mut images: Vec<usize> = (0..2 * n).collect();
    reflect(&mut images, 0, n, 0);
    reflect(&mut images, n, n, 0);
    Ok(Certificate {
        sigma: Permutation::from_images(images)?,
        kind: CertificateKind::ReflectionAllOrbits,
        description: "simultaneous i -> -i on both orbits".into(),
    })
}

/// Rotation of the second orbit of `C_n^(2)` by `s`, first orbit fixed.
pub fn second_orbit_rotation(n: usize, s: usize) -> Permutation {
    let images = (0..2 * n)
        .map(|v| if v < n { v } else { n + (v - n + s) % n })
        .collect();
    Permutation::from_images(images).expect("rotation is a permutation")
}

/// A set of permutations outside `A` such that every `k`-coloring of the edge
/// orbits of `A` is preserved by at least one member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateFamily {
    #[serde(serialize_with = "serialize_all")]
    pub members: Vec<Permutation>,
    pub description: String,
}

fn serialize_all<S: serde::Serializer>(ps: &[Permutation], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub members_outside_group: bool,
    /// Edge orbits moved by at least one member; all others are fixed by all.
    pub constrained_orbits: usize,
    pub colorings_checked: u64,
    pub all_covered: bool,
}

impl FamilyCheck {
    pub fn holds(&self) -> bool {
        self.members_outside_group && self.all_covered
    }
}

/// Largest number of constrained orbits [`CertificateFamily::check`] enumerates.
pub const FAMILY_ORBIT_LIMIT: usize = 20;

impl CertificateFamily {
    /// Checks the family against `A` for colorings with at most `k` colors.
    pub fn check(&self, a: &PermGroup, k: usize) -> Result<FamilyCheck> {
        let orbits = edge_orbits(a)?;
        let mut members_outside_group = true;
        let mut actions = Vec::with_capacity(self.members.len());
        for m in &self.members {
            members_outside_group &= !a.contains(m)?;
            let act = orbits.orbit_action(m).ok_or_else(|| {
                Error::Verification(format!("{m} does not permute the edge orbits"))
            })?;
            actions.push(act);
        }
        let constrained: Vec<usize> = (0..orbits.count())
            .filter(|&o| actions.iter().any(|act| act[o] != o))
            .collect();
        if constrained.len() > FAMILY_ORBIT_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "{} constrained orbits exceed the enumeration limit {FAMILY_ORBIT_LIMIT}",
                constrained.len()
            )));
        }
        let mut slot = vec![usize::MAX; orbits.count()];
        for (i, &o) in constrained.iter().enumerate() {
            slot[o] = i;
        }
        let mut colorings_checked = 0;
        let mut all_covered = true;
        for coloring in SetPartitions::new(constrained.len(), k) {
            colorings_checked += 1;
            let covered = actions.iter().any(|act| {
                constrained
                    .iter()
                    .all(|&o| coloring[slot[act[o]]] == coloring[slot[o]])
            });
            if !covered {
                all_covered = false;
                break;
            }
        }
        Ok(FamilyCheck {
            members_outside_group,
            constrained_orbits: constrained.len(),
            colorings_checked,
            all_covered,
        })
    }
}

/// For two nontrivial orbits `O_1` (size `N`) and `O_2` (size `M`, `M | N`):
/// the reflections `v_i -> v_{-i}`, `w_j -> w_{t-j}` for `t` in `0..M`. They
/// fix every edge orbit inside `O_1`, inside `O_2` and at the fixed points,
/// and act on the mixed orbit of distance `d` as `d -> t - d`; every subset
/// of `Z_M` with `M <= 5` is symmetric under one of these.
pub fn two_orbit_reflection_family(spec: &CyclicSpec) -> Result<CertificateFamily> {
    let sizes = spec.orbit_sizes();
    if sizes.len() != 2 || !sizes[0].is_multiple_of(sizes[1]) || sizes[1] < 3 {
        return Err(Error::Shape(format!(
            "expected two nontrivial orbits of sizes N and M with M | N and M >= 3, got {sizes:?}"
        )));
    }
    let layout: OrbitLayout = spec.layout();
    let (v, w) = (layout.orbit(0), layout.orbit(1));
    let members = (0..w.size)
        .map(|t| {
            let mut images: Vec<usize> = (0..layout.degree()).collect();
            reflect(&mut images, v.base, v.size, 0);
            reflect(&mut images, w.base, w.size, t);
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CertificateFamily {
        members,
        description: format!(
            "reflections v_i -> v_(-i), w_j -> w_(t-j) for t in 0..{}",
            w.size
        ),
    })
}

/// [`two_orbit_reflection_family`] checked against the spec's own group.
pub fn verified_two_orbit_family(spec: &CyclicSpec) -> Result<(CertificateFamily, FamilyCheck)> {
    let fam = two_orbit_reflection_family(spec)?;
    let check = fam.check(&cyclic_group(spec)?, 2)?;
    Ok((fam, check))
}

//! Graphical complexity of cyclic groups of prime power order, with evidence.
//!
//! Decision rules, applied in order to a spec with at least one nontrivial
//! orbit (fixed points never change the answer):
//!
//! 1. order two: `GR(2)`;
//! 2. exactly one orbit of size greater than two: not in `GR`;
//! 3. `p ∈ {3,5}`, two nontrivial orbits, one of size `p`: `GR*(3)`;
//! 4. `p = 2`, no pairs, two nontrivial orbits, one of size 4: `GR*(3)`;
//! 5. otherwise `GR(2)`.
//!
//! Trivial groups on `n` points: `n = 2` is not representable, `n ∈ {3,4,5}`
//! needs three colors, everything else two.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::autsearch::{is_automorphism, order_equals};
use crate::closure::{gr_k_membership, is_two_star_closed, partitions_up_to, Membership, OracleConfig};
use crate::constructions::{
    append_trivial_orbits, build_many_orbit_2colored, build_mixed_two_power, build_order_two_spec,
    build_prime_power_generic, build_small_p_many_orbits, build_two_nontrivial_3colored,
    identity_witness, negative_certificate, two_orbit_reflection_family, Certificate,
    CertificateFamily, FamilyCheck,
};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::group::{cyclic_group, PermGroup};
use crate::perm::Permutation;
use crate::spec::{CyclicSpec, SpecRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GrClass {
    NotInGR,
    GR2,
    GR3Star,
}

impl fmt::Display for GrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrClass::NotInGR => "NotInGR",
            GrClass::GR2 => "GR2",
            GrClass::GR3Star => "GR3Star",
        })
    }
}

/// The construction or argument a verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    OrderTwoPairChain,
    SingleOrbitReflection,
    LargeOrbitWithPairsReflection,
    TwoFixedPoints,
    AsymmetricSearch,
    TwoOrbitThreeColor,
    LargeAndSmallOrbitThreeColor,
    ManyEqualOrbitsTwoColor,
    PrimePowerGeneric,
    SmallPrimeManyOrbits,
    MixedTwoPower,
}

impl Source {
    pub fn name(&self) -> &'static str {
        match self {
            Source::OrderTwoPairChain => "order-two-pair-chain",
            Source::SingleOrbitReflection => "single-orbit-reflection",
            Source::LargeOrbitWithPairsReflection => "large-orbit-with-pairs-reflection",
            Source::TwoFixedPoints => "two-fixed-points",
            Source::AsymmetricSearch => "asymmetric-search",
            Source::TwoOrbitThreeColor => "two-orbit-three-color",
            Source::LargeAndSmallOrbitThreeColor => "large-and-small-orbit-three-color",
            Source::ManyEqualOrbitsTwoColor => "many-equal-orbits-two-color",
            Source::PrimePowerGeneric => "prime-power-generic",
            Source::SmallPrimeManyOrbits => "small-prime-many-orbits",
            Source::MixedTwoPower => "mixed-two-power",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a three-color verdict is not two-colorable.
#[derive(Clone, Debug)]
pub enum NonGr2 {
    /// Every coloring of the edge orbits with at most two colors was tried.
    Exhaustive {
        colorings_examined: u64,
        extras: Vec<Permutation>,
    },
    /// Reflections covering every 2-coloring, checked mechanically.
    CertificateFamily {
        family: CertificateFamily,
        check: FamilyCheck,
    },
    /// Neither check could be run or completed; the claim rests on the theorem.
    TheoremCited,
}

impl NonGr2 {
    pub fn label(&self) -> &'static str {
        match self {
            NonGr2::Exhaustive { .. } => "exhaustive",
            NonGr2::CertificateFamily { .. } => "certificate-family",
            NonGr2::TheoremCited => "theorem-cited",
        }
    }

    pub fn is_machine_verified(&self) -> bool {
        !matches!(self, NonGr2::TheoremCited)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verified {
    /// Group generators are automorphisms of the witness, or the certificate
    /// lies outside the group and stabilizes its vertex orbits.
    pub containment: bool,
    /// Automorphism group equals the group, or the certificate also
    /// stabilizes every edge orbit.
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub spec: CyclicSpec,
    pub class: GrClass,
    pub source: Source,
    pub witness: Option<ColoredGraph>,
    pub certificate: Option<Certificate>,
    pub non_gr2: Option<NonGr2>,
    pub verified: Verified,
}

impl Verdict {
    /// Colors present in the witness; 0 without one.
    pub fn colors_used(&self) -> usize {
        self.witness.as_ref().map_or(0, ColoredGraph::colors_used)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "spec": SpecRecord::from(&self.spec),
            "class": self.class,
            "source": self.source,
            "colors_used": self.colors_used(),
            "verified": self.verified,
            "certificate": self.certificate.as_ref().map(|c| c.sigma.to_string()),
            "non_gr2": self.non_gr2.as_ref().map(NonGr2::label),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Largest degree at which a witness is checked for exact equality.
    pub verify_cap: usize,
    /// Largest number of 2-colorings enumerated for a non-GR(2) proof.
    pub exhaustive_budget: u64,
    pub oracle: OracleConfig,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            verify_cap: 200,
            exhaustive_budget: 1 << 16,
            oracle: OracleConfig::default(),
        }
    }
}

/// The Corollary predicate: at least two orbits of size greater than two, or
/// order two. Trivial groups, outside its scope, are representable except on
/// two points.
pub fn in_gr(spec: &CyclicSpec) -> bool {
    if spec.nontrivial_count() == 0 {
        return spec.degree() != 2;
    }
    spec.count_larger_than(2) >= 2 || spec.order() == 2
}

fn is_three_color_shape(spec: &CyclicSpec) -> bool {
    let two = spec.nontrivial_count() == 2;
    match spec.p() {
        3 | 5 => two && spec.count_of_size(spec.p() as usize) >= 1,
        2 => two && spec.count_of_size(2) == 0 && spec.count_of_size(4) >= 1,
        _ => false,
    }
}

/// Class and primary source, from the decision rules alone.
pub fn decide(spec: &CyclicSpec) -> (GrClass, Source) {
    if spec.nontrivial_count() == 0 {
        return match spec.degree() {
            2 => (GrClass::NotInGR, Source::TwoFixedPoints),
            3..=5 => (GrClass::GR3Star, Source::AsymmetricSearch),
            _ => (GrClass::GR2, Source::AsymmetricSearch),
        };
    }
    if spec.order() == 2 {
        return (GrClass::GR2, Source::OrderTwoPairChain);
    }
    if spec.count_larger_than(2) == 1 {
        let src = if spec.count_of_size(2) > 0 {
            Source::LargeOrbitWithPairsReflection
        } else {
            Source::SingleOrbitReflection
        };
        return (GrClass::NotInGR, src);
    }
    if is_three_color_shape(spec) {
        let sizes = spec.orbit_sizes();
        let src = if sizes[0] == sizes[1] {
            Source::TwoOrbitThreeColor
        } else {
            Source::LargeAndSmallOrbitThreeColor
        };
        return (GrClass::GR3Star, src);
    }
    let src = two_color_candidates(spec)
        .first()
        .copied()
        .unwrap_or(Source::PrimePowerGeneric);
    (GrClass::GR2, src)
}

/// Two-color builders whose shape matches the spec, in preference order.
pub fn two_color_candidates(spec: &CyclicSpec) -> Vec<Source> {
    let sizes = spec.orbit_sizes();
    let mut out = Vec::new();
    if sizes.len() >= 2 && sizes[1] >= 7 {
        out.push(Source::PrimePowerGeneric);
    }
    if sizes.len() >= 3 && sizes[0] >= 3 && sizes.iter().all(|&s| s == sizes[0]) {
        out.push(Source::ManyEqualOrbitsTwoColor);
    }
    if let Some(n_p) = spec.n_p() {
        if sizes.len() >= 3 && sizes[0] >= 4 && sizes[1..].iter().all(|&s| s == n_p) {
            out.push(Source::SmallPrimeManyOrbits);
        }
    }
    if spec.p() == 2 {
        let t = sizes.iter().filter(|&&s| s >= 4).count();
        let r = spec.count_of_size(2);
        if t >= 2 && r >= 1 && spec.count_larger_than(4) <= 1 {
            out.push(Source::MixedTwoPower);
        }
    }
    out
}

/// Runs one builder on a spec.
pub fn build(source: Source, spec: &CyclicSpec) -> Result<ColoredGraph> {
    match source {
        Source::OrderTwoPairChain => build_order_two_spec(spec),
        Source::TwoOrbitThreeColor | Source::LargeAndSmallOrbitThreeColor => {
            build_two_nontrivial_3colored(spec)
        }
        Source::PrimePowerGeneric => build_prime_power_generic(spec),
        Source::ManyEqualOrbitsTwoColor => {
            let sizes = spec.orbit_sizes();
            let g = build_many_orbit_2colored(sizes[0], sizes.len())?;
            if spec.trivial_count() == 0 {
                Ok(g)
            } else {
                append_trivial_orbits(&g, &cyclic_group(&spec.without_trivial())?, spec.trivial_count())
            }
        }
        Source::SmallPrimeManyOrbits => build_small_p_many_orbits(spec),
        Source::MixedTwoPower => build_mixed_two_power(spec),
        Source::AsymmetricSearch => identity_witness(spec.degree()),
        Source::SingleOrbitReflection | Source::LargeOrbitWithPairsReflection | Source::TwoFixedPoints => {
            Err(Error::Shape(format!("{source} has no witness graph")))
        }
    }
}

fn verify_witness(g: &ColoredGraph, a: &PermGroup, cap: usize) -> Result<Verified> {
    if g.n() != a.degree() {
        return Ok(Verified {
            containment: false,
            exact: false,
        });
    }
    let mut containment = true;
    for gen in a.generators() {
        containment &= is_automorphism(g, gen)?;
    }
    let exact = containment && g.n() <= cap && order_equals(g, a.order())?.0;
    Ok(Verified { containment, exact })
}

/// The witness graph `classify` would attach, without the non-GR(2)
/// justification. Errors for specs that have no witness.
pub fn construct_witness(spec: &CyclicSpec, opts: &ClassifyOptions) -> Result<(Source, ColoredGraph, Verified)> {
    let (class, source) = decide(spec);
    let a = cyclic_group(spec)?;
    let candidates = match class {
        GrClass::NotInGR => {
            return Err(Error::Shape(format!("{spec} is not the automorphism group of any colored graph")))
        }
        GrClass::GR2 if source != Source::OrderTwoPairChain && source != Source::AsymmetricSearch => {
            two_color_candidates(spec)
        }
        _ => vec![source],
    };
    pick_witness(spec, &a, &candidates, opts)
}

pub fn classify(spec: &CyclicSpec) -> Result<Verdict> {
    classify_with(spec, &ClassifyOptions::default())
}

pub fn classify_with(spec: &CyclicSpec, opts: &ClassifyOptions) -> Result<Verdict> {
    let (class, source) = decide(spec);
    let a = cyclic_group(spec)?;
    match class {
        GrClass::NotInGR => not_in_gr(spec, &a, source),
        GrClass::GR2 => {
            let (source, witness, verified) = construct_witness(spec, opts)?;
            Ok(Verdict {
                spec: spec.clone(),
                class,
                source,
                witness: Some(witness),
                certificate: None,
                non_gr2: None,
                verified,
            })
        }
        GrClass::GR3Star => {
            let (source, witness, verified) = pick_witness(spec, &a, &[source], opts)?;
            if witness.colors_used() != 3 {
                return Err(Error::Verification(format!(
                    "three-color witness for {spec} uses {} colors",
                    witness.colors_used()
                )));
            }
            let non_gr2 = non_gr2_justification(spec, &a, opts)?;
            Ok(Verdict {
                spec: spec.clone(),
                class,
                source,
                witness: Some(witness),
                certificate: None,
                non_gr2: Some(non_gr2),
                verified,
            })
        }
    }
}

fn not_in_gr(spec: &CyclicSpec, a: &PermGroup, source: Source) -> Result<Verdict> {
    if source == Source::TwoFixedPoints {
        // No permutation fixing both points lies outside the trivial group;
        // the closure graph (a single edge) has the swap instead.
        let (closed, _) = is_two_star_closed(a)?;
        return Ok(Verdict {
            spec: spec.clone(),
            class: GrClass::NotInGR,
            source,
            witness: None,
            certificate: None,
            non_gr2: None,
            verified: Verified {
                containment: !closed,
                exact: !closed,
            },
        });
    }
    let cert = negative_certificate(spec)?;
    let check = cert.check(a)?;
    Ok(Verdict {
        spec: spec.clone(),
        class: GrClass::NotInGR,
        source,
        witness: None,
        certificate: Some(cert),
        non_gr2: None,
        verified: Verified {
            containment: check.outside_group && check.stabilizes_vertex_orbits,
            exact: check.holds(),
        },
    })
}

/// Builds every candidate, orders by (colors, nonzero edges), and returns the
/// first one that verifies.
fn pick_witness(
    spec: &CyclicSpec,
    a: &PermGroup,
    candidates: &[Source],
    opts: &ClassifyOptions,
) -> Result<(Source, ColoredGraph, Verified)> {
    let mut built = Vec::new();
    let mut last_err = None;
    for (i, &src) in candidates.iter().enumerate() {
        match build(src, spec) {
            Ok(g) => built.push((g.colors_used(), g.nonzero_edges(), i, src, g)),
            Err(e) => last_err = Some(e),
        }
    }
    built.sort_by_key(|(c, e, i, _, _)| (*c, *e, *i));
    for (_, _, _, src, g) in built {
        let v = verify_witness(&g, a, opts.verify_cap)?;
        if v.containment && (v.exact || g.n() > opts.verify_cap) {
            return Ok((src, g, v));
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::Verification(format!("no construction for {spec} verified"))
    }))
}

fn non_gr2_justification(spec: &CyclicSpec, a: &PermGroup, opts: &ClassifyOptions) -> Result<NonGr2> {
    let orbit_count = if a.degree() >= 2 {
        crate::closure::edge_orbits(a)?.count()
    } else {
        0
    };
    if partitions_up_to(orbit_count, 2) <= opts.exhaustive_budget as u128 {
        let cfg = OracleConfig {
            budget: opts.exhaustive_budget,
            ..opts.oracle
        };
        let report = gr_k_membership(a, 2, &cfg)?;
        if report.status == Membership::NotMember {
            return Ok(NonGr2::Exhaustive {
                colorings_examined: report.colorings_examined,
                extras: report.extra_automorphisms,
            });
        }
        return Err(Error::Verification(format!(
            "{spec} was expected to need three colors, but the oracle answered {:?}",
            report.status
        )));
    }
    if spec.nontrivial_count() == 2 {
        let family = two_orbit_reflection_family(spec)?;
        let check = family.check(a, 2)?;
        if check.holds() {
            return Ok(NonGr2::CertificateFamily { family, check });
        }
    }
    Ok(NonGr2::TheoremCited)
}

//! Graphical complexity of cyclic permutation groups of prime power order.
//!
//! A permutation group `A` is in `GR(k)` when it is the full automorphism
//! group of some complete graph whose edges carry at most `k` colors. This
//! crate decides, for every cyclic group of prime power order, whether it is
//! representable at all, representable with two colors, or needs exactly
//! three; it builds a witness graph for every positive answer and a
//! permutation certificate for every negative one, and it checks all of that
//! against an independent oracle based on 2*-closure.

pub mod autsearch;
pub mod classifier;
pub mod closure;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
pub mod par;
pub mod perm;
pub mod spec;

pub use autsearch::{
    automorphism_group, automorphism_group_bruteforce, is_automorphism, stabilizer_is_trivial,
};
pub use classifier::{classify, in_gr, GrClass, Verdict};
pub use closure::{
    edge_orbits, gr_k_membership, min_colors, two_star_closure, EdgeOrbitPartition,
    MembershipReport, MinColors, OracleConfig,
};
pub use constructions::Certificate;
pub use error::{Error, Result};
pub use graph::ColoredGraph;
pub use group::{
    contains, cyclic_group, dihedral_group, direct_sum, group_equals, parallel_product, PermGroup,
};
pub use par::Parallelism;
pub use perm::Permutation;
pub use spec::{CyclicSpec, OrbitLayout};

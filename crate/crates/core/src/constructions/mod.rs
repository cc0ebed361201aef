//! Witness graphs and negative certificates, keyed by [`CyclicSpec`](crate::spec::CyclicSpec).

pub mod builders;
pub mod certificates;
pub mod identity;
pub mod trivial;

pub use builders::{
    build_many_orbit_2colored, build_mixed_two_power, build_order_two, build_order_two_spec,
    build_prime_power_generic, build_small_p_many_orbits, build_two_nontrivial_3colored,
    build_two_orbit_3colored,
};
pub use certificates::{
    negative_certificate, second_orbit_rotation, small_two_orbit_certificate,
    two_orbit_class_of, two_orbit_class_pattern, two_orbit_reflection_family,
    verified_two_orbit_family, Certificate, CertificateCheck, CertificateFamily, CertificateKind,
    FamilyCheck,
};
pub use identity::{asymmetric_graph, identity_colors, identity_witness};
pub use trivial::append_trivial_orbits;

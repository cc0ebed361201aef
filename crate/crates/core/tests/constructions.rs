//! Every construction against the refinement engine on all small specs.

use cycgraph::autsearch::automorphism_group;
use cycgraph::classifier::{build, classify, decide, two_color_candidates, GrClass};
use cycgraph::group::{cyclic_group, group_equals};
use cycgraph::spec::CyclicSpec;

#[test]
fn every_builder_exact_up_to_degree_30() {
    let mut failures = Vec::new();
    for spec in CyclicSpec::enumerate(&[2, 3, 5, 7, 11, 13, 17, 19, 23, 29], 30) {
        let (class, source) = decide(&spec);
        let sources = match class {
            GrClass::NotInGR => continue,
            GrClass::GR2 if spec.nontrivial_count() > 0 && spec.order() > 2 => two_color_candidates(&spec),
            _ => vec![source],
        };
        let a = cyclic_group(&spec).unwrap();
        for src in sources {
            match build(src, &spec) {
                Ok(g) => {
                    let aut = automorphism_group(&g).unwrap();
                    if !group_equals(&aut, &a).unwrap() {
                        failures.push(format!("{spec} via {src}: |Aut| = {}", aut.order()));
                    }
                }
                Err(e) => failures.push(format!("{spec} via {src}: {e}")),
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_verdict_exact_up_to_degree_20() {
    for spec in CyclicSpec::enumerate(&[2, 3, 5, 7], 20) {
        let v = classify(&spec).unwrap();
        assert!(v.verified.containment && v.verified.exact, "{spec}");
    }
}

//! The `verify-all` table: every documented example, run independently and
//! reported in table order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cycgraph::autsearch::{automorphism_group, automorphism_group_bruteforce, is_automorphism, stabilizer_is_trivial};
use cycgraph::classifier::{classify, in_gr, GrClass};
use cycgraph::closure::{edge_orbits, gr_k_membership, min_colors, two_star_closure, Membership, MinColors, OracleConfig};
use cycgraph::constructions::{
    build_many_orbit_2colored, build_mixed_two_power, build_order_two, build_prime_power_generic,
    build_small_p_many_orbits, build_two_nontrivial_3colored, build_two_orbit_3colored,
    negative_certificate, small_two_orbit_certificate,
};
use cycgraph::graph::{pair_count, Color, ColoredGraph};
use cycgraph::group::{cyclic_group, dihedral_group, group_equals, symmetric_group};
use cycgraph::par;
use cycgraph::spec::CyclicSpec;
use cycgraph::{Parallelism, Permutation, Result};

pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

type CheckFn = Box<dyn Fn(u64) -> Result<(bool, String)> + Send + Sync>;

fn spec(p: u64, sizes: &[u64], fixed: usize) -> Result<CyclicSpec> {
    CyclicSpec::from_orbit_sizes(p, sizes, fixed)
}

fn aut_order(g: &ColoredGraph) -> Result<u128> {
    Ok(automorphism_group(g)?.order())
}

fn exact(g: &ColoredGraph, s: &CyclicSpec) -> Result<(bool, String)> {
    let aut = automorphism_group(g)?;
    let ok = group_equals(&aut, &cyclic_group(s)?)?;
    Ok((ok, format!("n={} |Aut|={}", g.n(), aut.order())))
}

fn table() -> Vec<(String, CheckFn)> {
    let mut t: Vec<(String, CheckFn)> = Vec::new();
    let mut add = |name: &str, f: CheckFn| t.push((name.to_string(), f));

    let classes: &[(u64, &[u64], usize, GrClass)] = &[
        (3, &[3], 0, GrClass::NotInGR),
        (3, &[3, 3], 0, GrClass::GR3Star),
        (7, &[7, 7], 0, GrClass::GR2),
        (5, &[25, 5], 0, GrClass::GR3Star),
        (3, &[9, 9], 0, GrClass::GR2),
        (2, &[4], 0, GrClass::NotInGR),
        (2, &[8, 4], 0, GrClass::GR3Star),
        (2, &[4, 2, 2], 0, GrClass::NotInGR),
        (2, &[8, 4, 2], 0, GrClass::GR2),
        (3, &[3], 2, GrClass::NotInGR),
        (2, &[2], 0, GrClass::GR2),
    ];
    for &(p, sizes, fixed, class) in classes {
        let sizes = sizes.to_vec();
        add(
            &format!("classify p={p} orbits={sizes:?} fixed={fixed}"),
            Box::new(move |_| {
                let v = classify(&spec(p, &sizes, fixed)?)?;
                let ok = v.class == class && v.verified.containment && v.verified.exact;
                Ok((ok, format!("{} via {}", v.class, v.source)))
            }),
        );
    }
    let memberships: &[(u64, &[u64], bool)] = &[(2, &[2, 2, 2], true), (5, &[5], false), (2, &[4, 4, 2], true)];
    for &(p, sizes, expect) in memberships {
        let sizes = sizes.to_vec();
        add(
            &format!("in_gr p={p} orbits={sizes:?}"),
            Box::new(move |_| {
                let got = in_gr(&spec(p, &sizes, 0)?);
                Ok((got == expect, got.to_string()))
            }),
        );
    }

    add("cyclic group C_3^(2) generator", Box::new(|_| {
        let a = cyclic_group(&spec(3, &[3, 3], 0)?)?;
        let g = a.generators()[0].to_string();
        Ok((a.order() == 3 && g == "(0 1 2)(3 4 5)", g))
    }));
    add("C_3^(2) excludes (v1 v2)(w1 w2)", Box::new(|_| {
        let a = cyclic_group(&spec(3, &[3, 3], 0)?)?;
        let s = Permutation::from_cycles(6, &[&[1, 2], &[4, 5]])?;
        Ok((!a.contains(&s)?, "outside".into()))
    }));
    add("C_3 differs from D_3", Box::new(|_| {
        let c3 = cyclic_group(&spec(3, &[3], 0)?)?;
        Ok((!group_equals(&c3, &dihedral_group(3)?)?, "orders 3 and 6".into()))
    }));

    add("two-orbit three-color n=3: Aut = C_3^(2)", Box::new(|_| exact(&build_two_orbit_3colored(3)?, &spec(3, &[3, 3], 0)?)));
    add("two-orbit three-color n=3: E(v_2, w_0) = 2", Box::new(|_| {
        let c = build_two_orbit_3colored(3)?.edge_color(2, 3)?;
        Ok((c == 2, format!("color {c}")))
    }));
    add("two-orbit three-color n=3: 1-degrees 3 and 1", Box::new(|_| {
        let g = build_two_orbit_3colored(3)?;
        let (dv, dw) = (g.i_degree(0, 1)?, g.i_degree(3, 1)?);
        Ok((dv == 3 && dw == 1, format!("v: {dv}, w: {dw}")))
    }));
    add("two-orbit three-color n=3: {1}-connected, not {2}-connected", Box::new(|_| {
        let g = build_two_orbit_3colored(3)?;
        Ok((g.x_connected(&[1]) && !g.x_connected(&[2]), "ok".into()))
    }));
    add("two-orbit three-color n=3: O_1 spans a color-1 triangle", Box::new(|_| {
        let h = build_two_orbit_3colored(3)?.spanned_subgraph(&[0, 1, 2])?;
        Ok((h.colors() == [1, 1, 1], format!("{:?}", h.colors())))
    }));
    add("two-orbit three-color n=3: generator yes, (v1 v2)(w1 w2) no", Box::new(|_| {
        let g = build_two_orbit_3colored(3)?;
        let gen = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4, 5]])?;
        let s = Permutation::from_cycles(6, &[&[1, 2], &[4, 5]])?;
        Ok((is_automorphism(&g, &gen)? && !is_automorphism(&g, &s)?, "ok".into()))
    }));
    add("two-orbit three-color n=3: trivial stabilizer of v_0", Box::new(|_| {
        let g = build_two_orbit_3colored(3)?;
        let a = cyclic_group(&spec(3, &[3, 3], 0)?)?;
        Ok((stabilizer_is_trivial(&g, 0, &a)?, "ok".into()))
    }));
    add("many-orbit two-color (3,3): Aut = C_3^(3)", Box::new(|_| exact(&build_many_orbit_2colored(3, 3)?, &spec(3, &[3, 3, 3], 0)?)));
    add("many-orbit two-color (3,3): O_1 1-degree 5", Box::new(|_| {
        let d = build_many_orbit_2colored(3, 3)?.i_degree(0, 1)?;
        Ok((d == 5, d.to_string()))
    }));
    add("many-orbit two-color (3,3): O_1 spans a color-1 triangle", Box::new(|_| {
        let h = build_many_orbit_2colored(3, 3)?.spanned_subgraph(&[0, 1, 2])?;
        Ok((h.colors() == [1, 1, 1], format!("{:?}", h.colors())))
    }));
    add("many-orbit two-color (3,3): trivial stabilizer of v_0", Box::new(|_| {
        let g = build_many_orbit_2colored(3, 3)?;
        let a = cyclic_group(&spec(3, &[3, 3, 3], 0)?)?;
        Ok((stabilizer_is_trivial(&g, 0, &a)?, "ok".into()))
    }));
    add("many-orbit two-color (5,4): Aut order 5", Box::new(|_| exact(&build_many_orbit_2colored(5, 4)?, &spec(5, &[5; 4], 0)?)));
    add("generic p=7 (7,7): Aut order 7", Box::new(|_| {
        let s = spec(7, &[7, 7], 0)?;
        exact(&build_prime_power_generic(&s)?, &s)
    }));
    add("generic p=7 (7,7): O_1 1-degree 5", Box::new(|_| {
        let d = build_prime_power_generic(&spec(7, &[7, 7], 0)?)?.i_degree(0, 1)?;
        Ok((d == 5, d.to_string()))
    }));
    add("generic p=3 (9,9): Aut order 9", Box::new(|_| {
        let s = spec(3, &[9, 9], 0)?;
        exact(&build_prime_power_generic(&s)?, &s)
    }));
    for (p, sizes) in [(3u64, vec![9u64, 3]), (2, vec![8, 4])] {
        add(&format!("large and small orbit three-color p={p} {sizes:?}"), Box::new(move |_| {
            let s = spec(p, &sizes, 0)?;
            exact(&build_two_nontrivial_3colored(&s)?, &s)
        }));
    }
    add("large and small orbit p=3 (9,3): 2-degrees 1 and 3", Box::new(|_| {
        let g = build_two_nontrivial_3colored(&spec(3, &[9, 3], 0)?)?;
        let (dv, dw) = (g.i_degree(0, 2)?, g.i_degree(9, 2)?);
        Ok((dv == 1 && dw == 3, format!("v: {dv}, w: {dw}")))
    }));
    add("small-prime many-orbit p=3 (9,3,3): O_2 1-degree 7", Box::new(|_| {
        let d = build_small_p_many_orbits(&spec(3, &[9, 3, 3], 0)?)?.i_degree(9, 1)?;
        Ok((d == 7, d.to_string()))
    }));
    add("small-prime many-orbit p=5 (5,5,5): Aut order 5", Box::new(|_| {
        let s = spec(5, &[5, 5, 5], 0)?;
        exact(&build_small_p_many_orbits(&s)?, &s)
    }));
    add("mixed two-power (4,4,2): Aut order 4 on 10 vertices", Box::new(|_| {
        let s = spec(2, &[4, 4, 2], 0)?;
        exact(&build_mixed_two_power(&s)?, &s)
    }));
    add("mixed two-power (4,4,2): O_1 1-degree 5", Box::new(|_| {
        let d = build_mixed_two_power(&spec(2, &[4, 4, 2], 0)?)?.i_degree(0, 1)?;
        Ok((d == 5, d.to_string()))
    }));
    add("mixed two-power (8,4,2,2): Aut order 8", Box::new(|_| {
        let s = spec(2, &[8, 4, 2, 2], 0)?;
        exact(&build_mixed_two_power(&s)?, &s)
    }));
    for r in 1..=3 {
        add(&format!("order-two pair chain r={r}"), Box::new(move |_| {
            let g = build_order_two(r)?;
            let brute = automorphism_group_bruteforce(&g)?;
            Ok((group_equals(&brute, &cyclic_group(&spec(2, &vec![2; r], 0)?)?)?, format!("|Aut|={}", brute.order())))
        }));
    }
    add("fixed points: (3,3)+1 and (4,4,2)+2", Box::new(|_| {
        let a = classify(&spec(3, &[3, 3], 1)?)?;
        let b = classify(&spec(2, &[4, 4, 2], 2)?)?;
        let ok = a.verified.exact && b.verified.exact && a.colors_used() == 3;
        Ok((ok, format!("{} and {}", a.source, b.source)))
    }));

    add("negative certificate C_5", Box::new(|_| {
        let c = negative_certificate(&spec(5, &[5], 0)?)?;
        Ok((c.sigma.to_string() == "(1 4)(2 3)", c.sigma.to_string()))
    }));
    for (p, sizes, fixed) in [(2u64, vec![4u64, 2], 0usize), (3, vec![3], 2)] {
        add(&format!("negative certificate p={p} {sizes:?} fixed={fixed}"), Box::new(move |_| {
            let s = spec(p, &sizes, fixed)?;
            let c = negative_certificate(&s)?;
            Ok((c.check(&cyclic_group(&s)?)?.holds(), c.sigma.to_string()))
        }));
    }
    let small: &[(usize, usize, &str)] = &[
        (3, 1, "(1 2)(4 5)"),
        (4, 3, "(0 1)(2 3)(4 5)(6 7)"),
        (5, 2, "(1 4)(2 3)(6 9)(7 8)"),
    ];
    for &(n, class, expect) in small {
        add(&format!("small two-orbit certificate n={n} class {class}"), Box::new(move |_| {
            let s = small_two_orbit_certificate(n, class)?.sigma.to_string();
            Ok((s == expect, s))
        }));
    }

    add("edge orbits: C_3 1, C_3^(2) 5, C_5^(2) 9", Box::new(|_| {
        let counts = [spec(3, &[3], 0)?, spec(3, &[3, 3], 0)?, spec(5, &[5, 5], 0)?]
            .iter()
            .map(|s| Ok(edge_orbits(&cyclic_group(s)?)?.count()))
            .collect::<Result<Vec<_>>>()?;
        Ok((counts == [1, 5, 9], format!("{counts:?}")))
    }));
    add("closure: C_3 -> S_3, C_7^(2) -> itself, S_2 -> S_2", Box::new(|_| {
        let c3 = cyclic_group(&spec(3, &[3], 0)?)?;
        let c77 = cyclic_group(&spec(7, &[7, 7], 0)?)?;
        let s2 = cyclic_group(&spec(2, &[2], 0)?)?;
        let ok = group_equals(&two_star_closure(&c3)?, &symmetric_group(3)?)?
            && group_equals(&two_star_closure(&c77)?, &c77)?
            && group_equals(&two_star_closure(&s2)?, &s2)?;
        Ok((ok, "ok".into()))
    }));
    add("oracle: C_3^(2) not in GR(2), in GR(3)", Box::new(|seed| {
        let a = cyclic_group(&spec(3, &[3, 3], 0)?)?;
        let cfg = OracleConfig { seed, ..OracleConfig::default() };
        let r2 = gr_k_membership(&a, 2, &cfg)?;
        let r3 = gr_k_membership(&a, 3, &cfg)?;
        Ok((r2.status == Membership::NotMember && r3.member(), format!("{} extras", r2.extra_automorphisms.len())))
    }));
    add("oracle: C_4^(2) not in GR(2)", Box::new(|seed| {
        let a = cyclic_group(&spec(2, &[4, 4], 0)?)?;
        let r = gr_k_membership(&a, 2, &OracleConfig { seed, ..OracleConfig::default() })?;
        Ok((r.status == Membership::NotMember, format!("{} colorings", r.colorings_examined)))
    }));
    add("oracle: min colors C_3^(2) 3, C_7^(2) 2, C_5 none", Box::new(|seed| {
        let cfg = OracleConfig { seed, ..OracleConfig::default() };
        let a = matches!(min_colors(&cyclic_group(&spec(3, &[3, 3], 0)?)?, 3, &cfg)?, MinColors::Colors { k: 3, .. });
        let b = matches!(min_colors(&cyclic_group(&spec(7, &[7, 7], 0)?)?, 3, &cfg)?, MinColors::Colors { k: 2, .. });
        let c = matches!(min_colors(&cyclic_group(&spec(5, &[5], 0)?)?, 3, &cfg)?, MinColors::NotInGr { .. });
        Ok((a && b && c, "ok".into()))
    }));
    add("engine: K_5 order 120, 5-cycle order 10", Box::new(|_| {
        let k5 = ColoredGraph::monochromatic(5);
        let mut c5 = ColoredGraph::new(5, 2)?;
        for i in 0..5 {
            c5.set_color(i, (i + 1) % 5, 1)?;
        }
        let (a, b) = (aut_order(&k5)?, aut_order(&c5)?);
        Ok((a == 120 && b == 10, format!("{a}, {b}")))
    }));
    add("engine matches brute force on 50 seeded random graphs", Box::new(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..50 {
            let n = rng.gen_range(1..=7);
            let k = rng.gen_range(1..=3);
            let colors: Vec<Color> = (0..pair_count(n)).map(|_| rng.gen_range(0..k) as Color).collect();
            let g = ColoredGraph::from_colors(n, k, colors)?;
            if !group_equals(&automorphism_group(&g)?, &automorphism_group_bruteforce(&g)?)? {
                return Ok((false, format!("mismatch on {}", g.to_json())));
            }
        }
        Ok((true, "50 agree".into()))
    }));
    for (p, sizes) in [(3u64, vec![27u64, 3]), (2, vec![16, 4, 2, 2])] {
        add(&format!("at scale p={p} {sizes:?}"), Box::new(move |_| {
            let v = classify(&spec(p, &sizes, 0)?)?;
            Ok((v.verified.containment && v.verified.exact, format!("{} via {}", v.class, v.source)))
        }));
    }
    t
}

pub fn run_all(seed: u64, mode: Parallelism) -> Vec<CheckResult> {
    let checks = table();
    par::map(mode, &checks, |(name, f)| {
        let (ok, detail) = match f(seed) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            name: name.clone(),
            ok,
            detail,
        }
    })
}

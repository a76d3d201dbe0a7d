use std::sync::Arc;

use lipmod_core::algebra::{int, rat, Monomial, ParamField, Poly, Rat, Space};
use lipmod_core::classify::{all_instances, classify_prepared_8jet, PreparedJet8};
use lipmod_core::local::{divide_with, milnor_number, LocalOrder};
use lipmod_core::newton::{filtration, is_quasihomogeneous, newton_polyhedron, Weight};
use proptest::prelude::*;

fn space() -> Arc<Space> {
    Space::new(&["x", "y"], &[] as &[&str])
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    (1i64..=6, 1i64..=4, any::<bool>()).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

fn poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, small_rat()), 0..=max_terms).prop_map(|ts| {
        Poly::from_terms(&space(), ts.into_iter().map(|(i, j, c)| (vec![i, j], ParamField::from_rat(c))))
    })
}

fn weight() -> impl Strategy<Value = Weight> {
    (1i64..=7, 1i64..=3, 1i64..=7, 1i64..=3).prop_map(|(a, b, c, d)| Weight::new(vec![rat(a, b), rat(c, d)]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(4, 4), b in poly(4, 4), c in poly(4, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn leibniz(a in poly(5, 4), b in poly(5, 4), v in 0usize..2) {
        let lhs = (&a * &b).derivative(v);
        let rhs = &(&a.derivative(v) * &b) + &(&a * &b.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(3, 3), b in poly(3, 3), u in poly(2, 3), w in poly(2, 3)) {
        let images = [u, w];
        let s = |p: &Poly| p.substitute_all(&images);
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn filtration_is_multiplicative(a in poly(6, 4), b in poly(6, 4), w in weight()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let lhs = filtration(&(&a * &b), &w).unwrap();
        prop_assert_eq!(lhs, filtration(&a, &w).unwrap() + filtration(&b, &w).unwrap());
    }

    #[test]
    fn diagram_bounds_the_support(pts in prop::collection::btree_set((0u32..9, 0u32..9), 1..8)) {
        let support: Vec<Monomial> = pts.iter().map(|&(i, j)| vec![i, j]).collect();
        prop_assume!(support.iter().all(|m| m[0] + m[1] > 0));
        let nd = newton_polyhedron(&support).unwrap();
        for f in &nd.facets {
            prop_assert!(f.contains(&f.endpoints.0) && f.contains(&f.endpoints.1));
            for m in &support {
                prop_assert!(f.weight.degree(m) >= f.d);
            }
        }
        for v in &nd.vertices {
            prop_assert!(support.contains(v));
        }
    }

    #[test]
    fn division_identity(a in nonzero_rat(), b in nonzero_rat(), shape in 0usize..4, g in poly(7, 4)) {
        let sp = space();
        let (ea, eb): (Monomial, Monomial) = match shape {
            0 => (vec![3, 0], vec![0, 5]),
            1 => (vec![4, 0], vec![0, 6]),
            2 => (vec![3, 1], vec![0, 7]),
            _ => (vec![2, 1], vec![0, 6]),
        };
        let f = Poly::from_terms(&sp, [(ea, ParamField::from_rat(a)), (eb, ParamField::from_rat(b))]);
        let jac = f.jacobian();
        let d = divide_with(&g, &jac, &LocalOrder::ds(2), 100_000).unwrap();
        prop_assert!(d.verify(&g, &jac));
    }

    #[test]
    fn milnor_product_formula(i in 2u32..7, j in 2u32..8, k in 1u32..4, a in nonzero_rat(), b in nonzero_rat()) {
        // x^i + y^j and x^i*y + y^{j+k} are quasihomogeneous and isolated
        let sp = space();
        for exps in [[vec![i, 0], vec![0, j]], [vec![i, 1], vec![0, j + k]]] {
            let [ea, eb] = exps;
            let f = Poly::from_terms(&sp, [(ea, ParamField::from_rat(a.clone())), (eb, ParamField::from_rat(b.clone()))]);
            let (w, d) = is_quasihomogeneous(&f).unwrap().unwrap();
            let one = int(1);
            let formula = (&d / &w.components()[0] - &one) * (&d / &w.components()[1] - &one);
            prop_assert_eq!(formula, int(milnor_number(&f, &[]).unwrap() as i64));
        }
    }

    #[test]
    fn jet8_leaf_depends_only_on_the_zero_pattern(
        pattern in prop::collection::vec(any::<bool>(), 36),
        scale in prop::collection::vec(nonzero_rat(), 36),
    ) {
        let build = |k: &[Rat]| {
            let mut j = PreparedJet8::default();
            let mut it = pattern.iter().zip(k).map(|(on, c)| if *on { c.clone() } else { int(0) });
            j.a = it.next().unwrap();
            for slot in j.p.iter_mut().chain(j.q.iter_mut()).chain(j.u.iter_mut()).chain(j.v.iter_mut()) {
                *slot = it.next().unwrap();
            }
            for slot in j.m.iter_mut() {
                *slot = it.next().unwrap();
            }
            j
        };
        let ones = vec![int(1); 36];
        prop_assert_eq!(classify_prepared_8jet(&build(&ones)), classify_prepared_8jet(&build(&scale)));
    }
}

#[test]
fn lmod_never_exceeds_smod() {
    for e in all_instances(14).unwrap() {
        assert!(e.lmod.lower_bound() <= e.smod, "{}", e.label);
    }
}

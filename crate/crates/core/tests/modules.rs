use std::sync::Arc;

use hopfstar::braid::{
    braiding, drinfeld_u, invert_two_tensor, perturbed, r_reality, verify_quasitriangular, RMatrix, Reality,
};
use hopfstar::conj::{check_tilde_relations, conjugate_module, AntimoduleMap};
use hopfstar::fixtures::{cyclic_fourier_r, cyclic_group_algebra, fixture, verify_fixture, SHIPPED};
use hopfstar::hmod::{
    double_dual_embedding, evaluation_maps, hom_evaluation, hom_left, hom_right, hom_tensor_decomposition, left_dual,
    right_dual, same_algebra, ssquared_inner_isos, tensor_module, verify_module, HModule, ModuleMap,
};
use hopfstar::inner::{mu, solve_invariant_grams, two_out_of_three, verify_inner_product, Given};
use hopfstar::linalg::{unit_vector, Matrix};
use hopfstar::scalar::Scalar;
use hopfstar::staralg::{
    check_kappa_lift, conjugate_algebra_checked, end_left, enveloping_star, tensor_power_star, verify_module_algebra,
    verify_star_module, TruncatedTensorAlgebra,
};

fn sweedler_module(name: &str) -> HModule {
    fixture("sweedler(1)").unwrap().module(name).unwrap().module.clone()
}

#[test]
fn every_shipped_fixture_verifies() {
    for name in SHIPPED {
        verify_fixture(&fixture(name).unwrap()).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    assert!(fixture("sweedler(x)").is_err());
}

#[test]
fn module_constructions_stay_modules() {
    for name in ["group_z3", "sweedler(1)"] {
        let f = fixture(name).unwrap();
        let mods = f.plain_modules();
        for v in &mods {
            assert!(verify_module(&left_dual(v)).all_pass());
            assert!(verify_module(&right_dual(v).unwrap()).all_pass());
            assert!(evaluation_maps(v).unwrap().report.all_pass());
            assert!(double_dual_embedding(v).unwrap().report.all_pass());
            for w in &mods {
                assert!(same_algebra(v, w));
                assert!(verify_module(&tensor_module(v, w).unwrap()).all_pass());
                assert!(verify_module(&hom_left(v, w).unwrap()).all_pass());
                assert!(verify_module(&hom_right(v, w).unwrap()).all_pass());
                let d = hom_tensor_decomposition(v, w).unwrap();
                assert!(d.report.all_pass(), "{}", d.report);
                assert!(hom_evaluation(v, w).unwrap().is_module_map());
            }
        }
    }
}

#[test]
fn squared_antipode_isos_need_an_invertible_implementer() {
    let pp = sweedler_module("p_plus");
    // S² is conjugation by g.
    let s = ssquared_inner_isos(&pp, &unit_vector(4, 1)).unwrap();
    assert!(s.report.all_pass(), "{}", s.report);
    // x is nilpotent, so it implements nothing.
    assert!(ssquared_inner_isos(&pp, &unit_vector(4, 2)).is_err());
}

#[test]
fn conjugation_is_involutive_and_tilde_relations_hold() {
    for name in SHIPPED {
        for m in fixture(name).unwrap().plain_modules() {
            let bar = conjugate_module(&m);
            assert!(verify_module(&bar).all_pass());
            assert_eq!(conjugate_module(&bar), m);
            let r = check_tilde_relations(&m).unwrap();
            assert!(r.all_pass(), "{name}: {r}");
        }
    }
}

#[test]
fn star_module_constructions() {
    let f = fixture("sweedler(1)").unwrap();
    for m in f.modules.iter().filter(|m| m.star.is_some()) {
        let (v, d) = (&m.module, m.star.as_ref().unwrap());
        assert!(verify_star_module(v, d).all_pass());
        let (a, b) = enveloping_star(v).unwrap();
        assert!(verify_star_module(&a.module, &a.dagger).all_pass());
        assert!(verify_star_module(&b.module, &b.dagger).all_pass());
        for n in 0..4 {
            let s = tensor_power_star(v, d, n).unwrap();
            assert!(verify_star_module(&s.module, &s.dagger).all_pass());
        }
        let t = TruncatedTensorAlgebra::new(v, 3);
        assert!(t.verify().all_pass());
        let (_, cr) = conjugate_algebra_checked(&t.algebra);
        assert!(cr.all_pass());
        assert!(verify_module_algebra(&end_left(v).unwrap()).all_pass());
        let g = AntimoduleMap::new(v.clone(), t.algebra.carrier.clone(), &t.inclusion() * d).unwrap();
        let r = check_kappa_lift(&g, &t.algebra, 3).unwrap();
        assert!(r.all_pass(), "{} {r}", m.name);
    }
}

#[test]
fn identity_is_not_a_star_on_p_plus() {
    let v = sweedler_module("p_plus");
    assert!(!verify_star_module(&v, &Matrix::identity(2)).all_pass());
}

#[test]
fn hermitian_invariant_form_dimensions() {
    // Oracle: real dimension of Hermitian G with a*-invariance.
    for (name, dim) in [
        ("trivial", 1),
        ("sign", 1),
        ("p_plus", 1),
        ("p_minus", 1),
        ("trivial_sign", 2),
    ] {
        assert_eq!(solve_invariant_grams(&sweedler_module(name)).len(), dim, "{name}");
    }
}

#[test]
fn inner_products_and_mu() {
    let f = fixture("sweedler(1)").unwrap();
    let m = f.module("trivial_sign").unwrap();
    let g = m.gram.as_ref().unwrap();
    assert!(verify_inner_product(&m.module, g).unwrap().all_pass());
    let (mu_map, r) = mu(&m.module, g).unwrap();
    assert!(r.all_pass());
    assert!(mu_map.is_module_map());
    // Not positive definite.
    let neg = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    assert!(!verify_inner_product(&m.module, &neg).unwrap().all_pass());
    // A star that does not match the gram is reported, not accepted.
    let two = Matrix::identity(2).scale(&Scalar::from_int(2));
    let r = two_out_of_three(
        &m.module,
        Given::StarGram {
            star: two,
            gram: g.clone(),
        },
    )
    .unwrap();
    assert!(!r.report.all_pass());
}

#[test]
fn sweedler_r_matrices() {
    let f = fixture("sweedler(1)").unwrap();
    let r = &f.r_matrices[0].r;
    assert_eq!(r_reality(r), Reality::Both);
    assert_eq!(drinfeld_u(r).unwrap().u, unit_vector(4, 1));
    // Flipping the sign of the 1⊗g coefficient loses invertibility.
    let bad = perturbed(r, 0, 1, Scalar::from_int(-1));
    assert!(!verify_quasitriangular(&bad).all_pass());
    assert!(invert_two_tensor(&r.algebra, &bad.coeffs).is_none());
}

#[test]
fn braiding_oracle_for_lambda_minus_two() {
    let f = fixture("sweedler(-2)").unwrap();
    let pp = &f.module("p_plus").unwrap().module;
    let sign = &f.module("sign").unwrap().module;
    let psi = braiding(&f.r_matrices[0].r, pp, sign).unwrap();
    assert_eq!(psi.matrix, Matrix::from_ints(&[&[1, 0], &[0, -1]]));
    assert!(psi.is_module_map());
}

#[test]
fn fourier_r_reality_classes() {
    for (n, class) in [(2, Reality::Both), (3, Reality::InverseReal), (4, Reality::InverseReal)] {
        let h = Arc::new(cyclic_group_algebra(n));
        let (c, inv) = cyclic_fourier_r(n);
        let r = RMatrix::new(h, c, Some(inv)).unwrap();
        assert!(verify_quasitriangular(&r).all_pass());
        assert_eq!(r_reality(&r), class, "Z{n}");
    }
}

#[test]
fn module_maps_reject_wrong_shapes() {
    let v = sweedler_module("p_plus");
    let w = sweedler_module("sign");
    assert!(ModuleMap::new(v.clone(), w, Matrix::identity(2)).is_err());
}

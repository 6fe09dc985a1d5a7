use supergrade::exactfield::{MatrixF, Scalar};
use supergrade::superalg::canonical::{self, conjugated_transpose, exchange, osp, tau, trp};
use supergrade::superalg::checks::{center, ideal_closure};
use supergrade::superalg::{check_super_map, involution_simple, superinvolution_search, Claim, Element, SuperAlgebra, SuperMap};

fn minus(m: &SuperMap) -> SuperMap {
    m.scaled(&Scalar::from_int(-1))
}

#[test]
fn canonical_superinvolutions_pass() {
    let cases = vec![
        osp(&SuperAlgebra::matrix(1, 2)).unwrap(),
        osp(&SuperAlgebra::matrix(2, 2)).unwrap(),
        trp(&SuperAlgebra::matrix(1, 1)).unwrap(),
        trp(&SuperAlgebra::matrix(2, 2)).unwrap(),
        exchange(&SuperAlgebra::pair_sop(&SuperAlgebra::matrix(1, 1))).unwrap(),
        exchange(&SuperAlgebra::pair_sop(&SuperAlgebra::q(1))).unwrap(),
    ];
    for s in cases {
        let r = check_super_map(&s, Claim::Superinvolution);
        assert!(r.passed, "{:?}", r.witnesses);
        assert!(s.compose(&s).is_identity());
    }
}

#[test]
fn plain_transpose_fails_sign_rule() {
    let m = SuperAlgebra::matrix(1, 1);
    let t = conjugated_transpose(&m, &MatrixF::identity(2)).unwrap();
    let r = check_super_map(&t, Claim::Superinvolution);
    assert!(!r.passed);
    assert!(r.witnesses.iter().any(|w| w.check == "product" && w.basis == vec![1, 2]));
    assert!(check_super_map(&SuperMap::identity(&m), Claim::Automorphism).passed);
}

#[test]
fn tau_structure() {
    for (n, m) in [(1, 1), (1, 2), (2, 2)] {
        let alg = SuperAlgebra::matrix(n, m);
        let t = tau(&alg).unwrap();
        assert!(check_super_map(&t, Claim::Superantiautomorphism).passed);
        assert_eq!(t.pow(2), SuperMap::parity_automorphism(&alg));
        assert!(t.pow(4).is_identity());
        assert!(!check_super_map(&t, Claim::Superinvolution).passed);
    }
}

#[test]
fn q_has_no_superinvolution() {
    for n in [1, 2] {
        let res = superinvolution_search(&SuperAlgebra::q(n)).unwrap();
        assert!(res.found.is_empty());
        let cert = res.certificate.unwrap();
        assert_eq!(cert.odd_centralizer_dim, 1);
        assert_eq!(cert.lambda_candidates.len(), 2);
        assert!(cert.involutive_system_consistent.iter().all(|c| !c));
    }
}

#[test]
fn matrix_search_finds_trp() {
    let alg = SuperAlgebra::matrix(1, 1);
    let res = superinvolution_search(&alg).unwrap();
    assert!(!res.found.is_empty());
    for f in &res.found {
        assert!(check_super_map(f, Claim::Superinvolution).passed);
    }
    let res = superinvolution_search(&SuperAlgebra::matrix(1, 2)).unwrap();
    assert!(!res.found.is_empty());
}

#[test]
fn involution_simplicity() {
    let m11 = SuperAlgebra::matrix(1, 1);
    assert!(involution_simple(&m11, &trp(&m11).unwrap()).unwrap());
    let m12 = SuperAlgebra::matrix(1, 2);
    assert!(involution_simple(&m12, &osp(&m12).unwrap()).unwrap());
    let p = SuperAlgebra::pair_sop(&m11);
    assert!(involution_simple(&p, &exchange(&p).unwrap()).unwrap());
    let prod = SuperAlgebra::product(&m11, &m11);
    let star = canonical::componentwise(&prod, &trp(&m11).unwrap(), &trp(&m11).unwrap(), supergrade::MapKind::Antiautomorphism).unwrap();
    assert!(check_super_map(&star, Claim::Superinvolution).passed);
    assert!(!involution_simple(&prod, &star).unwrap());
    assert!(involution_simple(&m11, &minus(&trp(&m11).unwrap())).is_err());
}

#[test]
fn center_of_q_contains_t() {
    let q = SuperAlgebra::q(2);
    assert_eq!(center(&q).dim(), 2);
    let m = SuperAlgebra::matrix(1, 1);
    let e = Element::basis(&m, 0);
    assert!(ideal_closure(&m, &trp(&m).unwrap(), e.coords()).is_full());
}

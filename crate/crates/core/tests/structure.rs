use supergrade::abgroup::{AbGroup, Character, GroupElem};
use supergrade::exactfield::{MatrixF, Scalar};
use supergrade::gradings::{elementary_grading, grading_of_action, pauli_grading_on, ActionHom, Grading};
use supergrade::structure::decompose::{predicted_pair_power, q_power_units};
use supergrade::structure::lemmas::{antiauto_sandwich_holds, corner_degree};
use supergrade::structure::{
    decompose_pair_map, decompose_q_map, exchange_decompose, fine_antiauto_obstruction, find_commuting_root,
    identity_decomposition, BlockKind, RootMode,
};
use supergrade::superalg::canonical::{componentwise, conjugated_transpose, exchange, inner, pair_type2, q_map, tau, trp};
use supergrade::superalg::checks::{check_super_map, Claim};
use supergrade::superalg::{MapKind, SuperAlgebra, SuperMap};

fn int(k: i64) -> Scalar {
    Scalar::from_int(k)
}

fn pair11() -> SuperAlgebra {
    SuperAlgebra::pair_sop(&SuperAlgebra::matrix(1, 1))
}

/// `(x, y) ↦ (τ(y), τ(x))` on `M_{1,1} ⊕ M_{1,1}^sop`.
fn swap_tau(alg: &SuperAlgebra) -> SuperMap {
    pair_type2(alg, &tau(&alg.base().unwrap()).unwrap()).unwrap()
}

#[test]
fn exchange_trivial_when_actions_agree() {
    let alg = SuperAlgebra::matrix(2, 0);
    let g = AbGroup::cyclic(2);
    let d = MatrixF::diagonal(&[int(1), int(-1)]);
    let alpha = ActionHom::new(&g, vec![inner(&alg, &d).unwrap()]).unwrap();
    let res = exchange_decompose(&alpha, &alpha, &[]).unwrap();
    assert!(res.holds());
    assert_eq!(res.h_subgroup.len(), 2);
    assert_eq!(res.h_component(&GroupElem(vec![0])).unwrap().dim(), 4);
    assert_eq!(res.reconstructed_first, res.first);
}

#[test]
fn exchange_on_pair_with_swapping_action() {
    let alg = pair11();
    let g = AbGroup::cyclic(2);
    let omega = pair_type2(&alg, &trp(&SuperAlgebra::matrix(1, 1)).unwrap()).unwrap();
    let alpha = ActionHom::new(&g, vec![omega]).unwrap();
    let beta = ActionHom::trivial(&g, &alg);
    let res = exchange_decompose(&alpha, &beta, &[g.trivial_character()]).unwrap();
    assert!(res.holds());
    assert_eq!(res.h_subgroup.len(), 2);
    assert_eq!(res.first.dims(), vec![4, 4]);
}

#[test]
fn exchange_rejects_noncommuting_actions() {
    let alg = SuperAlgebra::matrix(2, 0);
    let g = AbGroup::cyclic(2);
    let d = MatrixF::diagonal(&[int(1), int(-1)]);
    let p = MatrixF::from_int_rows(&[&[0, 1], &[1, 0]]);
    let h = MatrixF::from_int_rows(&[&[1, 1], &[1, -1]]);
    let alpha = ActionHom::new(&g, vec![inner(&alg, &d).unwrap()]).unwrap();
    let beta = ActionHom::new(&g, vec![inner(&alg, &p).unwrap()]).unwrap();
    assert!(exchange_decompose(&alpha, &beta, &[]).unwrap().holds());
    // conjugation by the Hadamard matrix does not commute with conj(D)
    let gamma = ActionHom::new(&g, vec![inner(&alg, &h).unwrap()]).unwrap();
    let err = exchange_decompose(&alpha, &gamma, &[]).unwrap_err().to_string();
    assert!(err.contains("do not commute"), "{err}");
    let err = exchange_decompose(&alpha, &beta, &[Character(vec![1])]).unwrap_err().to_string();
    assert!(err.contains("differ"), "{err}");
}

#[test]
fn pair_map_types() {
    let alg = pair11();
    let id = decompose_pair_map(&SuperMap::identity(&alg)).unwrap();
    assert_eq!(id.map_type, 1);
    assert!(id.phi0.is_identity());
    let phi = swap_tau(&alg);
    let dec = decompose_pair_map(&phi).unwrap();
    assert_eq!(dec.map_type, 2);
    assert_eq!(dec.phi0, tau(&alg.base().unwrap()).unwrap());
    for k in 1..=4 {
        assert_eq!(predicted_pair_power(&alg, &dec, k).unwrap().action(), phi.pow(k).action());
    }
    let n = alg.dim() / 2;
    let mut mix = MatrixF::identity(alg.dim());
    for i in 0..n {
        mix.set(i, n + i, int(2));
        mix.set(n + i, i, int(2));
    }
    let bad = SuperMap::new(&alg, mix, MapKind::Unchecked).unwrap();
    assert!(decompose_pair_map(&bad).is_err());
}

#[test]
fn q_map_units() {
    let q1 = SuperAlgebra::q(1);
    let id = decompose_q_map(&SuperMap::identity(&q1), MapKind::Automorphism).unwrap();
    assert!(id.unit.is_one());
    let minus = q_map(&q1, &MatrixF::identity(1), &int(-1), MapKind::Automorphism).unwrap();
    assert_eq!(decompose_q_map(&minus, MapKind::Automorphism).unwrap().unit, int(-1));
    let anti = q_map(&q1, &MatrixF::identity(1), &Scalar::i(), MapKind::Antiautomorphism).unwrap();
    assert!(check_super_map(&anti, Claim::Superantiautomorphism).passed);
    let dec = decompose_q_map(&anti, MapKind::Antiautomorphism).unwrap();
    assert_eq!(dec.unit, Scalar::i());
    assert_eq!(dec.reconstruct(&q1).unwrap().action(), anti.action());
    // λ^k pattern of the powers: i, -1, -i, 1
    let units = q_power_units(&anti, MapKind::Antiautomorphism).unwrap();
    assert_eq!(units, vec![Scalar::i(), int(-1), -&Scalar::i(), int(1)]);
    assert!(decompose_q_map(&anti, MapKind::Automorphism).is_err());
}

#[test]
fn q2_transpose_power_law() {
    let q2 = SuperAlgebra::q(2);
    let t = supergrade::superalg::canonical::flat_matrix_operator(2, |x| x.transpose());
    for lambda in [Scalar::i(), -&Scalar::i()] {
        let psi = q_map(&q2, &t, &lambda, MapKind::Antiautomorphism).unwrap();
        assert!(check_super_map(&psi, Claim::Superantiautomorphism).passed);
        let units = q_power_units(&psi, MapKind::Antiautomorphism).unwrap();
        let expect: Vec<Scalar> = (1..=4).map(|k| lambda.pow(k).unwrap()).collect();
        assert_eq!(units, expect);
    }
}

#[test]
fn identity_decomposition_trp_single_block() {
    let alg = SuperAlgebra::matrix(1, 1);
    let gamma = Grading::trivial(&alg, &AbGroup::cyclic(2));
    let dec = identity_decomposition(&gamma, &trp(&alg).unwrap()).unwrap();
    assert_eq!(dec.blocks.len(), 1);
    assert_eq!(dec.blocks[0].kind, BlockKind::MatrixTrp);
    assert_eq!(dec.blocks[0].canonical, MatrixF::from_int_rows(&[&[0, 1], &[1, 0]]));
    assert!(dec.idempotents_orthogonal(&alg));
    assert!(dec.s.is_some() && dec.phi.is_some());
}

#[test]
fn identity_decomposition_splits_pair_block() {
    let alg = SuperAlgebra::matrix(2, 0);
    let g = AbGroup::cyclic(2);
    let gamma = elementary_grading(&alg, &g, &[GroupElem(vec![0]), GroupElem(vec![1])]).unwrap();
    let swap = MatrixF::from_int_rows(&[&[0, 1], &[1, 0]]);
    let phi = conjugated_transpose(&alg, &swap).unwrap();
    let dec = identity_decomposition(&gamma, &phi).unwrap();
    assert_eq!(dec.blocks.len(), 1);
    assert_eq!(dec.blocks[0].kind, BlockKind::PairExchange);
    assert_eq!(dec.blocks[0].subspace.dim(), 2);
    assert!(dec.idempotents_orthogonal(&alg));
    // the plain transpose fixes both idempotents: two orthogonal blocks
    let plain = identity_decomposition(&gamma, &conjugated_transpose(&alg, &MatrixF::identity(2)).unwrap()).unwrap();
    assert_eq!(plain.blocks.len(), 2);
    assert!(plain.blocks.iter().all(|b| b.kind == BlockKind::MatrixOsp));
}

#[test]
fn commuting_roots() {
    let alg = pair11();
    let phi = swap_tau(&alg);
    let gamma = Grading::trivial(&alg, &AbGroup::cyclic(2));
    let root = find_commuting_root(&phi, &gamma, RootMode::Fourth).unwrap();
    assert_eq!(decompose_pair_map(&root.psi).unwrap().map_type, 1);
    assert_eq!(root.psi.pow(4).action(), phi.pow(4).action());
    assert!(root.psi.commutes_with(&phi));

    let m2 = SuperAlgebra::matrix(2, 0);
    let g = AbGroup::cyclic(2);
    let el = elementary_grading(&m2, &g, &[GroupElem(vec![0]), GroupElem(vec![1])]).unwrap();
    let t = conjugated_transpose(&m2, &MatrixF::identity(2)).unwrap();
    let root = find_commuting_root(&t, &el, RootMode::Square).unwrap();
    assert_eq!(root.psi.pow(2).action(), t.pow(2).action());
    assert!(root.psi.commutes_with(&t));
    assert!(el.components().iter().all(|c| root.psi.preserves(c)));
}

#[test]
fn block_scalar_root_is_found_when_identity_fails() {
    // φ = (x ↦ D^{-1} x^t D) with D antidiagonal: φ² = conj(D^{-1} D^t) ≠ id
    let m2 = SuperAlgebra::matrix(2, 0);
    let g = AbGroup::cyclic(2);
    let el = elementary_grading(&m2, &g, &[GroupElem(vec![0]), GroupElem(vec![1])]).unwrap();
    let mut d = MatrixF::zeros(2, 2);
    d.set(0, 1, int(1));
    d.set(1, 0, Scalar::i());
    let phi = conjugated_transpose(&m2, &d).unwrap();
    assert!(!phi.pow(2).is_identity());
    let root = find_commuting_root(&phi, &el, RootMode::Square).unwrap();
    assert_ne!(root.method, supergrade::structure::roots::RootMethod::Identity);
    assert_eq!(root.psi.pow(2).action(), phi.pow(2).action());
    assert!(root.psi.commutes_with(&phi));
}

#[test]
fn fine_obstruction_instances() {
    // M_{1,1}: X ↦ Φ^{-1} X^τ Φ with Φ = diag(1, i) sends P to -i DP and DP to i P,
    // so the Pauli grading is respected and the instance is not obstructed
    let m11 = SuperAlgebra::matrix(1, 1);
    let super11 = pauli_grading_on(&m11).unwrap();
    let rep = fine_antiauto_obstruction(&super11).unwrap();
    assert_eq!(rep.unknowns, 4);
    assert!(!rep.obstructed);
    let w = supergrade::superalg::canonical::conjugated_tau(&m11, &MatrixF::diagonal(&[int(1), Scalar::i()])).unwrap();
    assert!(check_super_map(&w, Claim::Superantiautomorphism).passed);
    assert!(super11.components().iter().all(|c| w.preserves(c)));
    assert!(rep.witness.is_some());
    let plain = pauli_grading_on(&SuperAlgebra::matrix(2, 0)).unwrap();
    assert!(!fine_antiauto_obstruction(&plain).unwrap().obstructed);
    let coarse = Grading::trivial(&SuperAlgebra::matrix(1, 1), &AbGroup::cyclic(2));
    assert!(matches!(fine_antiauto_obstruction(&coarse), Err(supergrade::Error::NotFine(_))));
}

#[test]
fn sandwich_containment_for_antiautomorphisms() {
    for alg in [SuperAlgebra::matrix(1, 1), SuperAlgebra::matrix(1, 2)] {
        let t = tau(&alg).unwrap();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                assert!(antiauto_sandwich_holds(&t, &alg.basis_vector(i), &alg.basis_vector(j)));
            }
        }
    }
    let alg = pair11();
    let star = exchange(&alg).unwrap();
    let cw = componentwise(&alg, &tau(&alg.base().unwrap()).unwrap(), &tau(&alg.base().unwrap()).unwrap(), MapKind::Antiautomorphism).unwrap();
    for f in [star, cw] {
        for i in (0..alg.dim()).step_by(3) {
            for j in (0..alg.dim()).step_by(2) {
                assert!(antiauto_sandwich_holds(&f, &alg.basis_vector(i), &alg.basis_vector(j)));
            }
        }
    }
}

#[test]
fn corner_between_identity_blocks_is_homogeneous() {
    let m3 = SuperAlgebra::matrix(3, 0);
    let g = AbGroup::cyclic(4);
    let gamma = elementary_grading(&m3, &g, &[GroupElem(vec![0]), GroupElem(vec![0]), GroupElem(vec![1])]).unwrap();
    let e1 = supergrade::superalg::element::flatten_matrix(&MatrixF::diagonal(&[int(1), int(1), int(0)]));
    let e2 = supergrade::superalg::element::flatten_matrix(&MatrixF::diagonal(&[int(0), int(0), int(1)]));
    let deg = corner_degree(&gamma, &e1, &e2).unwrap().unwrap();
    assert_ne!(deg, g.identity());
    assert_eq!(grading_of_action(&supergrade::gradings::action_of_grading(&gamma).unwrap()).unwrap(), gamma);
}

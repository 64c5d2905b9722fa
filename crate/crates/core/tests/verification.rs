use std::collections::BTreeSet;

use qprime_core::certificate::Certificate;
use qprime_core::exterior::{
    act_generator, braid_tw, braid_tw_word, subsets, ExtVector, Generator, LinOperator,
};
use qprime_core::groebner::{check_basis, gk_dim_quotient};
use qprime_core::parallel::Jobs;
use qprime_core::polynormal::{
    generating_sequence, ideal_basis, verify_polynormal_all, verify_poset, verify_separation, VerifyOptions,
};
use qprime_core::qcoeff::RatFunc;
use qprime_core::qmatrix::{QMElement, Shape};
use qprime_core::weyl::{bruhat_interval, bruhat_interval_with, coxeter_cm, Permutation};

fn opts(m: usize, n: usize) -> VerifyOptions {
    VerifyOptions::for_shape(Shape::new(m, n).unwrap())
}

#[test]
fn ideal_bases_satisfy_invariants() {
    for (m, n) in [(1, 3), (2, 2), (2, 3)] {
        let (cm, _) = coxeter_cm(m, n).unwrap();
        for y in bruhat_interval(&cm) {
            let gens: Vec<QMElement> = generating_sequence(&y, m, n, false).unwrap().into_iter().map(|p| p.1).collect();
            let gb = ideal_basis(&y, m, n, opts(m, n)).unwrap();
            check_basis(&gb, &gens).unwrap_or_else(|e| panic!("{m}x{n} y={y}: {e}"));
            let dd = ideal_basis(&y, m, n, VerifyOptions { dedup: true, ..opts(m, n) }).unwrap();
            assert_eq!(dd, gb, "dedup changed the ideal for {y}");
            assert_eq!(gk_dim_quotient(&gb).unwrap(), m * n - y.length());
        }
    }
}

#[test]
fn rectangular_shapes_verify() {
    for (m, n) in [(2, 3), (3, 2), (1, 4)] {
        for c in verify_polynormal_all(m, n, opts(m, n), Jobs::Auto).unwrap() {
            assert!(c.passed(), "{m}x{n}: {c:?}");
        }
        assert!(verify_poset(m, n, opts(m, n), Jobs::Auto).unwrap().passed());
        for c in verify_separation(m, n, opts(m, n), Jobs::Auto).unwrap() {
            assert!(c.passed(), "{m}x{n}: {c:?}");
        }
    }
}

#[test]
fn parallel_and_sequential_agree() {
    let a = verify_polynormal_all(2, 2, opts(2, 2), Jobs::Sequential).unwrap();
    let b = verify_polynormal_all(2, 2, opts(2, 2), Jobs::Fixed(3)).unwrap();
    let strip = |v: Vec<Certificate>| {
        v.into_iter()
            .map(|mut c| {
                c.elapsed_ms = 0;
                c
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn certificates_round_trip() {
    for c in verify_separation(2, 2, opts(2, 2), Jobs::Sequential).unwrap() {
        let back: Certificate = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}

#[test]
fn guard_exhaustion_is_reported() {
    let o = VerifyOptions { degree_guard: 1, dedup: false };
    let certs = verify_polynormal_all(2, 2, o, Jobs::Sequential).unwrap();
    assert!(certs.iter().any(|c| c.status == qprime_core::certificate::Status::GuardExceeded));
    assert!(certs.iter().all(|c| c.status != qprime_core::certificate::Status::Fail));
}

fn op(g: Generator, n: usize, k: usize) -> LinOperator {
    LinOperator::generator(g, n, k).unwrap()
}

fn q(e: i64) -> RatFunc {
    RatFunc::q_power(e)
}

/// Defining relations of `U_q(sl_N)` as operator identities on every
/// graded component.
#[test]
fn quantum_group_relations() {
    use Generator::*;
    for n in 2..=4 {
        for k in 0..=n {
            for i in 1..n {
                let ki = op(K(i), n, k);
                assert!(ki.is_diagonal());
                assert!(ki.compose(&op(KInv(i), n, k)).unwrap().sub(&LinOperator::identity(n, k).unwrap()).is_zero());
                let qq = q(1).sub(&q(-1)).inv().unwrap();
                for j in 1..n {
                    let aij = match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    };
                    // K_i X_j^+ K_i^{-1} = q^{a_ij} X_j^+, and likewise for X_j^- with q^{-a_ij}
                    let conj = ki.compose(&op(E(j), n, k)).unwrap().compose(&op(KInv(i), n, k)).unwrap();
                    assert!(conj.sub(&op(E(j), n, k).scale(&q(aij))).is_zero());
                    let conj = ki.compose(&op(F(j), n, k)).unwrap().compose(&op(KInv(i), n, k)).unwrap();
                    assert!(conj.sub(&op(F(j), n, k).scale(&q(-aij))).is_zero());
                    let ef = op(E(i), n, k).compose(&op(F(j), n, k)).unwrap();
                    let fe = op(F(j), n, k).compose(&op(E(i), n, k)).unwrap();
                    let comm = ef.sub(&fe);
                    if i == j {
                        let rhs = ki.sub(&op(KInv(i), n, k)).scale(&qq);
                        assert!(comm.sub(&rhs).is_zero(), "N={n} k={k} [E{i},F{i}]");
                    } else {
                        assert!(comm.is_zero(), "N={n} k={k} [E{i},F{j}]");
                    }
                    for g in [E as fn(usize) -> Generator, F] {
                        let (a, b) = (op(g(i), n, k), op(g(j), n, k));
                        if aij == -1 {
                            // a^2 b - [2] a b a + b a^2 = 0
                            let two = q(1).add(&q(-1));
                            let a2b = a.compose(&a).unwrap().compose(&b).unwrap();
                            let aba = a.compose(&b).unwrap().compose(&a).unwrap();
                            let ba2 = b.compose(&a).unwrap().compose(&a).unwrap();
                            assert!(a2b.add_scaled(&aba, &two.neg()).add_scaled(&ba2, &RatFunc::one()).is_zero());
                        } else if aij == 0 {
                            assert!(a.compose(&b).unwrap().sub(&b.compose(&a).unwrap()).is_zero());
                        }
                    }
                }
            }
        }
    }
}

/// `T_w` sends `v_J` to a multiple of `v_{w(J)}`.
#[test]
fn braid_operators_permute_weight_spaces() {
    for w in Permutation::all(4) {
        for k in 0..=4 {
            for set in subsets(4, k) {
                let img = braid_tw(&w, &ExtVector::basis(4, &set).unwrap()).unwrap();
                let mut target: Vec<usize> = set.iter().map(|&j| w.apply(j)).collect();
                target.sort_unstable();
                let c = img.as_multiple_of(&target).unwrap_or_else(|| panic!("T_{w} v{set:?} = {img}"));
                assert!(!c.is_zero());
            }
        }
    }
}

#[test]
fn generators_preserve_degree() {
    let v = ExtVector::basis(4, &[1, 3]).unwrap();
    for i in 1..4 {
        for g in [Generator::E(i), Generator::F(i)] {
            let out = act_generator(g, &v).unwrap();
            assert!(out.degree().is_none_or(|d| d == 2));
        }
    }
    assert!(braid_tw_word(&[2, 1, 2], &v).is_ok());
}

/// The full `3x3` census. Slow in debug builds.
#[test]
#[ignore]
fn census_3x3() {
    let (cm, word) = coxeter_cm(3, 3).unwrap();
    let interval = bruhat_interval_with(&cm, Jobs::Auto);
    let oracle: BTreeSet<Permutation> = (0u32..(1 << word.len()))
        .map(|mask| {
            let sub: Vec<usize> = word.iter().enumerate().filter(|(t, _)| mask & (1 << t) != 0).map(|(_, &i)| i).collect();
            Permutation::from_word(6, &sub).unwrap()
        })
        .collect();
    assert_eq!(interval.len(), 230);
    assert_eq!(interval.iter().cloned().collect::<BTreeSet<_>>(), oracle);
    for c in verify_polynormal_all(3, 3, opts(3, 3), Jobs::Auto).unwrap() {
        assert!(c.passed(), "{c:?}");
    }
}

//! The library against the Euclidean models and Freudenthal enumeration
//! of `horofano-oracle`, which never touch the Cartan-matrix closure.

use std::collections::BTreeSet;

use horofano::{DynkinType, Rational64, RootSystem, SimpleFactor, Weight64};
use horofano_oracle::{axpy, dot, expand, freudenthal_dim, model, positive_roots, Factor};
use num_rational::Ratio;
use num_traits::{One, Zero};

fn q(n: i64, d: i64) -> Rational64 {
    Ratio::new(n, d)
}

fn oracle_factor(f: SimpleFactor) -> Factor {
    match f {
        SimpleFactor::A(n) => Factor::A(n),
        SimpleFactor::B(n) => Factor::B(n),
        SimpleFactor::C(n) => Factor::C(n),
        SimpleFactor::F4 => Factor::F4,
        SimpleFactor::G2 => Factor::G2,
    }
}

fn library_roots(factor: SimpleFactor) -> (RootSystem, BTreeSet<Vec<i64>>) {
    let rs = RootSystem::new(DynkinType::simple(factor).unwrap()).unwrap();
    let set = rs
        .positive_roots()
        .iter()
        .map(|r| r.coeffs().iter().map(|&c| c as i64).collect())
        .collect();
    (rs, set)
}

fn factors_up_to(max_rank: usize) -> Vec<SimpleFactor> {
    let mut out = vec![SimpleFactor::F4, SimpleFactor::G2];
    for n in 1..=max_rank {
        out.push(SimpleFactor::A(n));
        if n >= 2 {
            out.push(SimpleFactor::B(n));
            out.push(SimpleFactor::C(n));
        }
    }
    out
}

#[test]
fn positive_roots_match_euclidean_models() {
    for f in factors_up_to(12) {
        let o = oracle_factor(f);
        let expected = positive_roots(&model(o));
        let (_, got) = library_roots(f);
        assert_eq!(expected.len(), o.positive_root_count(), "{f}");
        assert_eq!(got, expected, "{f}");
    }
}

#[test]
fn cartan_matrices_match_euclidean_models() {
    for f in factors_up_to(8) {
        let m = model(oracle_factor(f));
        let (rs, _) = library_roots(f);
        for i in 0..f.rank() {
            let ai = &m.simple[i];
            for j in 0..f.rank() {
                let aj = &m.simple[j];
                let expected = q(2, 1) * dot(ai, aj) / dot(ai, ai);
                assert_eq!(
                    Ratio::from_integer(rs.cartan()[i][j] as i64),
                    expected,
                    "{f} [{i}][{j}]"
                );
            }
        }
    }
}

#[test]
fn fundamental_weights_of_the_models_are_dual() {
    for f in factors_up_to(8) {
        let m = model(oracle_factor(f));
        for (i, w) in m.fundamental.iter().enumerate() {
            for (j, a) in m.simple.iter().enumerate() {
                let pairing = q(2, 1) * dot(w, a) / dot(a, a);
                let expected = if i == j { Rational64::one() } else { Rational64::zero() };
                assert_eq!(pairing, expected, "{f} w{} a{}", i + 1, j + 1);
            }
        }
    }
}

/// Coroot pairing of every positive root with every fundamental weight,
/// computed both ways.
#[test]
fn coroot_pairings_match_euclidean_models() {
    for f in factors_up_to(6) {
        let m = model(oracle_factor(f));
        let (rs, _) = library_roots(f);
        for root in rs.positive_roots() {
            let v = root
                .coeffs()
                .iter()
                .zip(&m.simple)
                .fold(vec![Rational64::zero(); m.simple[0].len()], |acc, (&c, a)| {
                    axpy(Ratio::from_integer(c as i64), a, &acc)
                });
            for (i, w) in m.fundamental.iter().enumerate() {
                let expected = q(2, 1) * dot(w, &v) / dot(&v, &v);
                let got = rs
                    .coroot_pairing(&Weight64::fundamental(f.rank(), i), root)
                    .unwrap();
                assert_eq!(got, expected, "{f} w{} {root}", i + 1);
            }
        }
    }
}

#[test]
fn model_expansions_are_exact() {
    let m = model(Factor::F4);
    let half = m.roots.iter().find(|r| r.iter().all(|x| *x.numer() != 0)).unwrap();
    let c = expand(&m.simple, half).unwrap();
    assert!(c.iter().all(Ratio::is_integer));
}

#[test]
fn g2_highest_root_pairs_to_one_with_the_short_weight() {
    let m = model(Factor::G2);
    let (rs, _) = library_roots(SimpleFactor::G2);
    let theta = rs.positive_roots().iter().max_by_key(|r| r.height()).unwrap();
    assert_eq!(theta.coeffs(), &[3, 2]);
    let v = axpy(q(3, 1), &m.simple[0], &axpy(q(2, 1), &m.simple[1], &[q(0, 1); 3]));
    let w1 = &m.fundamental[0];
    assert_eq!(q(2, 1) * dot(w1, &v) / dot(&v, &v), q(1, 1));
    assert_eq!(
        rs.coroot_pairing(&Weight64::fundamental(2, 0), theta),
        Ok(q(1, 1))
    );
    // node 1 is short: V_w1 is the 7-dimensional representation
    assert!(dot(&m.simple[0], &m.simple[0]) < dot(&m.simple[1], &m.simple[1]));
}

fn library_dim(f: SimpleFactor, lambda: &[i64]) -> i64 {
    let (rs, _) = library_roots(f);
    rs.weyl_dim(&Weight64::from_integers(lambda).unwrap()).unwrap()
}

#[test]
fn freudenthal_oracle_values() {
    let cases: &[(SimpleFactor, &[i64], i64)] = &[
        (SimpleFactor::C(3), &[1, 0, 0], 6),
        (SimpleFactor::G2, &[1, 0], 7),
        (SimpleFactor::B(3), &[0, 0, 1], 8),
        (SimpleFactor::G2, &[0, 1], 14),
        (SimpleFactor::B(3), &[0, 1, 0], 21),
        (SimpleFactor::B(3), &[1, 0, 0], 7),
        (SimpleFactor::C(3), &[0, 0, 1], 14),
        (SimpleFactor::A(2), &[1, 1], 8),
        (SimpleFactor::B(2), &[0, 1], 4),
        (SimpleFactor::F4, &[0, 0, 0, 1], 26),
        (SimpleFactor::F4, &[1, 0, 0, 0], 52),
        (SimpleFactor::G2, &[2, 0], 27),
        (SimpleFactor::B(4), &[0, 0, 0, 1], 16),
    ];
    for &(f, lambda, dim) in cases {
        assert_eq!(freudenthal_dim(oracle_factor(f), lambda), dim, "oracle {f} {lambda:?}");
        assert_eq!(library_dim(f, lambda), dim, "library {f} {lambda:?}");
    }
}

#[test]
fn weyl_dimension_agrees_with_freudenthal_on_small_weights() {
    let factors = [
        SimpleFactor::A(1),
        SimpleFactor::A(2),
        SimpleFactor::A(3),
        SimpleFactor::B(2),
        SimpleFactor::C(2),
        SimpleFactor::B(3),
        SimpleFactor::C(3),
        SimpleFactor::G2,
    ];
    for f in factors {
        let r = f.rank();
        for code in 0..3usize.pow(r as u32) {
            let lambda: Vec<i64> = (0..r).map(|i| (code / 3usize.pow(i as u32) % 3) as i64).collect();
            assert_eq!(
                freudenthal_dim(oracle_factor(f), &lambda),
                library_dim(f, &lambda),
                "{f} {lambda:?}"
            );
        }
    }
}

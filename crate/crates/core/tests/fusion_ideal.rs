use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use rank2_fusion::ideal::{FailureReason, FusionIdeal, Verdict};
use rank2_fusion::poly::Staircase;
use rank2_fusion::{AlgebraType, IntPolynomial, Monomial};

fn verified_cases() -> Vec<(AlgebraType, i64)> {
    let mut out = Vec::new();
    for alg in [AlgebraType::A2, AlgebraType::C2] {
        out.extend((1..=4).map(|k| (alg, k)));
    }
    out.extend((2..=6).map(|k| (AlgebraType::G2, k)));
    out
}

#[test]
fn natural_elements_reduce_to_zero_for_verified_certificates() {
    for (alg, k) in verified_cases() {
        let ideal = FusionIdeal::new(alg, k).unwrap();
        let cert = ideal.verify_presentation(&ideal.known_generators().unwrap()).unwrap();
        assert!(cert.is_verified(), "{alg} k={k}");
        for e in ideal.natural_ideal_elements(k + 4).unwrap() {
            assert!(cert.gb.as_ref().unwrap().contains(&e.poly), "{alg} k={k} λ={}", e.weight);
        }
    }
}

#[test]
fn adding_ideal_elements_keeps_the_verdict_and_rank() {
    let cases = [(AlgebraType::A2, 2, 2), (AlgebraType::C2, 3, 2), (AlgebraType::G2, 2, 1), (AlgebraType::G2, 3, 1)];
    for (alg, k, extra) in cases {
        let ideal = FusionIdeal::new(alg, k).unwrap();
        let gens = ideal.known_generators().unwrap();
        let base = ideal.verify_presentation(&gens).unwrap();
        let mut more = gens.clone();
        more.extend(ideal.natural_ideal_elements(k + extra).unwrap().into_iter().map(|e| e.poly));
        let cert = ideal.verify_presentation(&more).unwrap();
        assert!(cert.is_verified(), "{alg} k={k}");
        assert_eq!(cert.rank, base.rank);
        assert_eq!(cert.gb, base.gb, "{alg} k={k}: equal ideals have equal reduced bases");
    }
}

#[test]
fn search_pairs_combine_with_the_known_triple() {
    for k in 2..=3 {
        let ideal = FusionIdeal::new(AlgebraType::G2, k).unwrap();
        let report = ideal.search_two_generators(2).unwrap();
        let Some((p, q)) = report.found else { continue };
        let mut gens = ideal.known_generators().unwrap();
        let triple = ideal.verify_presentation(&gens).unwrap();
        gens.extend([p, q]);
        let cert = ideal.verify_presentation(&gens).unwrap();
        assert!(cert.is_verified());
        assert_eq!(cert.rank, Some(ideal.table().len()));
        assert_eq!(cert.gb, triple.gb);
    }
}

#[test]
fn single_coefficient_mutations_of_g2_generators_fail() {
    for k in 2..=4 {
        let ideal = FusionIdeal::new(AlgebraType::G2, k).unwrap();
        let gens = ideal.known_generators().unwrap();
        for which in 0..gens.len() {
            for (m, _) in gens[which].terms().iter().take(4) {
                for delta in [-1, 1] {
                    let mut mutated = gens.clone();
                    mutated[which] = &gens[which] + &IntPolynomial::term(BigInt::from(delta), *m);
                    let cert = ideal.verify_presentation(&mutated).unwrap();
                    assert_eq!(
                        cert.verdict,
                        Verdict::Failed(FailureReason::NotInIdeal { generator: which }),
                        "k={k} {}",
                        mutated[which]
                    );
                }
            }
        }
    }
}

#[test]
fn dropping_a_generator_loses_finite_rank_or_freeness() {
    for k in 2..=5 {
        let ideal = FusionIdeal::new(AlgebraType::G2, k).unwrap();
        let gens = ideal.known_generators().unwrap();
        for skip in 0..gens.len() {
            let pair: Vec<IntPolynomial> =
                gens.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, g)| g.clone()).collect();
            let cert = ideal.verify_presentation(&pair).unwrap();
            if cert.is_verified() {
                // an experimental finding, not a contradiction; the pair must
                // then generate the same ideal as the triple
                let triple = ideal.verify_presentation(&gens).unwrap();
                assert_eq!(cert.gb, triple.gb);
            }
        }
    }
}

fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// The fusion images of the standard monomials span a sublattice of index
/// `|det|`; when it exceeds one, no generating set of `I_k` can have a
/// unit-leading strong basis, yet the certificate must still verify.
#[test]
fn g2_staircase_lattice_index_matches_leading_coefficients() {
    for (k, index) in [(2, 1), (3, 1), (4, 1), (5, 3), (6, 4), (7, 2)] {
        let ideal = FusionIdeal::new(AlgebraType::G2, k).unwrap();
        let cert = ideal.verify_presentation(&ideal.known_generators().unwrap()).unwrap();
        assert!(cert.is_verified(), "k={k}");
        let Staircase::Finite(ms) = &cert.gb.as_ref().unwrap().staircase else { panic!("k={k}: infinite staircase") };
        let rows: Vec<Vec<BigInt>> = ms
            .iter()
            .map(|m| ideal.table().evaluate_poly(&IntPolynomial::term(BigInt::from(1), *m)).coeffs)
            .collect();
        assert_eq!(det(rows).abs(), BigInt::from(index), "k={k}");
        assert_eq!(cert.gb.as_ref().unwrap().unit_leading, index == 1, "k={k}");
        assert_eq!(cert.gb.as_ref().unwrap().torsion_free(), Some(true));
        let file = cert.to_file();
        assert_eq!(file.unit_leading, Some(index == 1));
        assert_eq!(file.torsion_free, Some(true));
    }
}

#[test]
fn certificates_are_byte_stable_and_order_independent() {
    let ideal = FusionIdeal::new(AlgebraType::G2, 4).unwrap();
    let gens = ideal.known_generators().unwrap();
    let a = ideal.verify_presentation(&gens).unwrap();
    let b = FusionIdeal::new(AlgebraType::G2, 4).unwrap().verify_presentation(&gens).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let mut rev = gens.clone();
    rev.reverse();
    let c = ideal.verify_presentation(&rev).unwrap();
    assert_eq!(c.gb, a.gb);

    let json: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    for field in [
        "algebra",
        "level",
        "generators",
        "evaluation_witnesses",
        "groebner_basis",
        "unit_leading",
        "torsion_free",
        "staircase",
        "rank",
        "alcove_size",
        "verdict",
        "failure_reason",
        "soundness_argument",
    ] {
        assert!(json.get(field).is_some(), "missing {field}");
    }
    for g in json["generators"].as_array().unwrap() {
        let text = g.as_str().unwrap();
        assert_eq!(text.parse::<IntPolynomial>().unwrap().to_string(), text);
    }
    assert_eq!(json["staircase"].as_array().unwrap().len(), 9);
    assert_eq!(json["staircase"][0], Monomial::ONE.to_string());
}

#[test]
fn torsion_quotients_are_rejected() {
    let ideal = FusionIdeal::new(AlgebraType::A2, 2).unwrap();
    let gens = ideal.known_generators().unwrap();
    let two = BigInt::from(2);

    // I_k / (2g₀, Xg₀, Yg₀, g₁) ≅ Z/2
    let j = [gens[0].scale(&two), &IntPolynomial::x() * &gens[0], &IntPolynomial::y() * &gens[0], gens[1].clone()];
    let cert = ideal.verify_presentation(&j).unwrap();
    assert_eq!(cert.rank, Some(ideal.table().len()));
    assert_eq!(cert.verdict, Verdict::Failed(FailureReason::Torsion));
    assert_eq!(cert.gb.as_ref().unwrap().torsion_free(), Some(false));

    // I_k / (2g₀, g₁) ≅ F_2[X,Y]/(g₁) as a group: infinitely generated
    let cert = ideal.verify_presentation(&[gens[0].scale(&two), gens[1].clone()]).unwrap();
    assert_eq!(cert.verdict, Verdict::Failed(FailureReason::NotFinitelyGenerated));
    assert!(!cert.gb.as_ref().unwrap().unit_leading);
}

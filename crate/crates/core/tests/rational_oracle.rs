//! Cross-checks the integer strong Gröbner engine against plain Buchberger
//! over the rationals and over prime fields.
//!
//! The staircase of `J ⊗ Q` only depends on the leading monomials, so both
//! engines must agree on it for every input. For a finitely generated quotient
//! `Z^r ⊕ T`, the staircase of `J mod p` has more than `r` monomials exactly
//! when `p` divides `|T|`, which gives an independent torsion test.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use rank2_fusion::poly::{strong_groebner, Staircase};
use rank2_fusion::{IntPolynomial, Monomial};

type QPoly = BTreeMap<Monomial, BigRational>;

fn to_q(p: &IntPolynomial) -> QPoly {
    p.terms().iter().map(|(m, c)| (*m, BigRational::from_integer(c.clone()))).collect()
}

fn lead(p: &QPoly) -> (Monomial, BigRational) {
    let (m, c) = p.iter().next_back().unwrap();
    (*m, c.clone())
}

fn sub_scaled(p: &mut QPoly, q: &QPoly, c: &BigRational, shift: Monomial) {
    for (m, d) in q {
        let key = m.times(shift);
        let e = p.entry(key).or_insert_with(BigRational::zero);
        *e -= c * d;
        if e.is_zero() {
            p.remove(&key);
        }
    }
}

fn reduce(mut p: QPoly, basis: &[QPoly]) -> QPoly {
    let mut rest = QPoly::new();
    while let Some((&m, c)) = p.iter().next_back() {
        let c = c.clone();
        match basis.iter().find(|g| lead(g).0.divides(m)) {
            Some(g) => {
                let (gm, gc) = lead(g);
                sub_scaled(&mut p, g, &(c / gc), m.quotient(gm));
            }
            None => {
                p.remove(&m);
                rest.insert(m, c);
            }
        }
    }
    rest
}

fn monic(p: QPoly) -> QPoly {
    let c = lead(&p).1;
    p.into_iter().map(|(m, d)| (m, d / &c)).collect()
}

/// Buchberger with the normal selection strategy and the coprime criterion.
fn rational_leading_monomials(gens: &[IntPolynomial]) -> Vec<Monomial> {
    let mut basis: Vec<QPoly> = gens.iter().map(to_q).filter(|p| !p.is_empty()).map(monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by_key(|&k| {
                let (i, j) = pairs[k];
                (lead(&basis[i]).0.lcm(lead(&basis[j]).0), j, i)
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(pick);
        let (fm, _) = lead(&basis[i]);
        let (gm, _) = lead(&basis[j]);
        if fm.is_coprime(gm) {
            continue;
        }
        let l = fm.lcm(gm);
        let mut s = QPoly::new();
        sub_scaled(&mut s, &basis[i], &-BigRational::one(), l.quotient(fm));
        sub_scaled(&mut s, &basis[j], &BigRational::one(), l.quotient(gm));
        let r = reduce(s, &basis);
        if !r.is_empty() {
            basis.push(monic(r));
            let n = basis.len() - 1;
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    let lms: Vec<Monomial> = basis.iter().map(|p| lead(p).0).collect();
    lms.iter().copied().filter(|m| !lms.iter().any(|l| l != m && l.divides(*m))).collect()
}

type FpPoly = BTreeMap<Monomial, i64>;

fn inverse_mod(a: i64, p: i64) -> i64 {
    (0..p).find(|&x| a * x % p == 1).unwrap()
}

fn fp_sub_scaled(f: &mut FpPoly, g: &FpPoly, c: i64, shift: Monomial, p: i64) {
    for (m, d) in g {
        let key = m.times(shift);
        let e = f.entry(key).or_insert(0);
        *e = (*e - c * d).rem_euclid(p);
        if *e == 0 {
            f.remove(&key);
        }
    }
}

fn fp_leading_monomials(gens: &[IntPolynomial], p: i64) -> Vec<Monomial> {
    let modp = |c: &BigInt| i64::try_from(c % BigInt::from(p)).unwrap().rem_euclid(p);
    let lead = |f: &FpPoly| {
        let (m, c) = f.iter().next_back().unwrap();
        (*m, *c)
    };
    let reduce = |mut f: FpPoly, basis: &[FpPoly]| {
        let mut rest = FpPoly::new();
        while let Some((&m, &c)) = f.iter().next_back() {
            match basis.iter().find(|g| lead(g).0.divides(m)) {
                Some(g) => {
                    let (gm, gc) = lead(g);
                    fp_sub_scaled(&mut f, g, c * inverse_mod(gc, p) % p, m.quotient(gm), p);
                }
                None => {
                    f.remove(&m);
                    rest.insert(m, c);
                }
            }
        }
        rest
    };
    let mut basis: Vec<FpPoly> = gens
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| (*m, modp(c))).filter(|&(_, c)| c != 0).collect::<FpPoly>())
        .filter(|f| !f.is_empty())
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (fm, fc) = lead(&basis[i]);
        let (gm, gc) = lead(&basis[j]);
        let l = fm.lcm(gm);
        let mut s = FpPoly::new();
        fp_sub_scaled(&mut s, &basis[i], p - inverse_mod(fc, p), l.quotient(fm), p);
        fp_sub_scaled(&mut s, &basis[j], inverse_mod(gc, p), l.quotient(gm), p);
        let r = reduce(s, &basis);
        if !r.is_empty() {
            basis.push(r);
            let n = basis.len() - 1;
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    basis.iter().map(|f| lead(f).0).collect()
}

fn primes_dividing(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Torsion-freeness decided through prime-field staircases, for inputs whose
/// integer basis has pure unit powers of `X` and `Y` (finitely generated
/// quotient).
fn torsion_free_by_primes(gens: &[IntPolynomial], rank: usize, leading: &[BigInt]) -> bool {
    let mut primes: Vec<u64> = leading
        .iter()
        .flat_map(|c| primes_dividing(u64::try_from(c.magnitude().clone()).unwrap()))
        .collect();
    primes.sort();
    primes.dedup();
    primes.into_iter().all(|p| staircase_of(&fp_leading_monomials(gens, p as i64)).size() == Some(rank))
}

fn rational_staircase(gens: &[IntPolynomial]) -> Staircase {
    staircase_of(&rational_leading_monomials(gens))
}

fn staircase_of(lms: &[Monomial]) -> Staircase {
    let xb = lms.iter().filter(|m| m.y == 0).map(|m| m.x).min();
    let yb = lms.iter().filter(|m| m.x == 0).map(|m| m.y).min();
    let (Some(xb), Some(yb)) = (xb, yb) else {
        return Staircase::Infinite;
    };
    let mut out: Vec<Monomial> = (0..xb)
        .flat_map(|x| (0..yb).map(move |y| Monomial::new(x, y)))
        .filter(|m| !lms.iter().any(|l| l.divides(*m)))
        .collect();
    out.sort();
    Staircase::Finite(out)
}

fn p(s: &str) -> IntPolynomial {
    s.parse().unwrap()
}

#[test]
fn fixed_examples_agree() {
    let cases = [
        vec![p("X^2 - Y"), p("X*Y - 1")],
        vec![p("2*X"), p("3*Y"), p("X^2 + Y^2 - 1")],
        vec![p("X^3 - 2*X*Y + 1"), p("Y^2 - X"), p("X*Y - Y - 1")],
        vec![p("3*X - Y"), p("X^2 - X"), p("X*Y - Y"), p("Y^2 - 3*Y")],
        vec![p("X^2 - Y")],
    ];
    for gens in cases {
        let gb = strong_groebner(&gens).unwrap();
        assert_eq!(gb.staircase, rational_staircase(&gens), "{gens:?}");
    }
}

#[test]
fn prime_field_oracle_on_fixed_examples() {
    let free = [p("3*X - Y"), p("X^2 - X"), p("X*Y - Y"), p("Y^2 - 3*Y")];
    assert!(torsion_free_by_primes(&free, 2, &[BigInt::from(3)]));
    let torsion = [p("X^2"), p("Y"), p("2*X")];
    assert!(!torsion_free_by_primes(&torsion, 1, &[BigInt::from(2)]));
}

#[test]
fn g2_fusion_ideals_are_free_despite_non_unit_leading_coefficients() {
    use rank2_fusion::ideal::FusionIdeal;
    use rank2_fusion::AlgebraType;
    for k in 5..=7 {
        let ideal = FusionIdeal::new(AlgebraType::G2, k).unwrap();
        let gens = ideal.known_generators().unwrap();
        let gb = strong_groebner(&gens).unwrap();
        assert!(!gb.unit_leading, "k={k}");
        let rank = gb.rank().unwrap();
        assert_eq!(rank, ideal.table().len());
        assert_eq!(gb.staircase, rational_staircase(&gens));
        assert_eq!(gb.torsion_free(), Some(true));
        assert!(torsion_free_by_primes(&gens, rank, &leading_coefficients(&gb)), "k={k}");

        let mut scaled = gens.clone();
        scaled[0] = scaled[0].scale(&BigInt::from(2));
        let gb = strong_groebner(&scaled).unwrap();
        let rank = gb.rank().unwrap();
        let mut lcs = leading_coefficients(&gb);
        lcs.push(BigInt::from(2));
        assert_eq!(gb.torsion_free(), Some(torsion_free_by_primes(&scaled, rank, &lcs)), "k={k} scaled");
    }
}

fn leading_coefficients(gb: &rank2_fusion::StrongGB) -> Vec<BigInt> {
    gb.generators.iter().map(|g| g.leading_coefficient().unwrap().clone()).collect()
}

fn small_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(((0u32..3, 0u32..3), -3i64..=3), 1..5).prop_map(|ts| {
        IntPolynomial::from_terms(ts.into_iter().map(|((x, y), c)| (Monomial::new(x, y), BigInt::from(c))))
    })
}

/// Monic pure powers keep the quotient finite so coefficients stay small.
fn zero_dimensional() -> impl Strategy<Value = Vec<IntPolynomial>> {
    (2u32..4, 2u32..4, small_poly(), small_poly(), prop::collection::vec(small_poly(), 0..2)).prop_map(
        |(a, b, f, g, rest)| {
            let mut gens = vec![
                &IntPolynomial::x().pow(a) + &f.truncate_below(Monomial::new(a, 0)),
                &IntPolynomial::y().pow(b) + &g.truncate_below(Monomial::new(0, b)),
            ];
            gens.extend(rest);
            gens
        },
    )
}

trait Truncate {
    fn truncate_below(&self, m: Monomial) -> IntPolynomial;
}

impl Truncate for IntPolynomial {
    fn truncate_below(&self, m: Monomial) -> IntPolynomial {
        IntPolynomial::from_terms(self.terms().iter().filter(|(t, _)| *t < m).cloned())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn staircases_agree_with_rational_buchberger(gens in zero_dimensional()) {
        let gb = strong_groebner(&gens).unwrap();
        let rational = rational_staircase(&gens);
        prop_assert!(matches!(gb.staircase, Staircase::Finite(_)));
        prop_assert_eq!(&gb.staircase, &rational);
        if gb.unit_leading {
            prop_assert_eq!(gb.torsion_free(), Some(true));
        }
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
    }

    #[test]
    fn torsion_decision_agrees_with_prime_fields(
        gens in zero_dimensional(),
        c in 2i64..7,
        m in (0u32..3, 0u32..3),
        tail in small_poly(),
    ) {
        let corner = Monomial::new(m.0, m.1);
        let mut gens = gens;
        gens.push(&IntPolynomial::term(BigInt::from(c), corner) + &tail.truncate_below(corner));
        let gb = strong_groebner(&gens).unwrap();
        let Staircase::Finite(s) = &gb.staircase else { unreachable!() };
        match gb.torsion_free() {
            Some(free) => {
                prop_assert_eq!(free, torsion_free_by_primes(&gens, s.len(), &leading_coefficients(&gb)));
            }
            None => prop_assert!(false, "pure monic powers make the quotient finitely generated"),
        }
    }
}

//! Bivariate polynomials over the integers and strong Gröbner bases.
//!
//! Monomials are ordered by total degree, ties broken lexicographically with
//! `X > Y`. The order is fixed; every basis, normal form and printed
//! polynomial in the crate uses it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `X^x · Y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };
    pub const X: Monomial = Monomial { x: 1, y: 0 };
    pub const Y: Monomial = Monomial { x: 0, y: 1 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(self) -> u32 {
        self.x + self.y
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        (self.x == 0 || other.x == 0) && (self.y == 0 || other.y == 0)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(self, other: Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::new(self.x - other.x, self.y - other.y)
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, e) in [("X", self.x), ("Y", self.y)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Sparse polynomial in `Z[X, Y]`, terms stored leading term first and
/// never with a zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::term(BigInt::one(), Monomial::X)
    }

    pub fn y() -> Self {
        Self::term(BigInt::one(), Monomial::Y)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c.into(), Monomial::ONE)
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            IntPolynomial { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<Monomial, BigInt>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        IntPolynomial { terms }
    }

    fn to_map(&self) -> BTreeMap<Monomial, BigInt> {
        self.terms.iter().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms
            .iter()
            .find(|(t, _)| *t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial { terms: self.terms.iter().map(|(m, t)| (*m, t * c)).collect() }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, c: &BigInt, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial { terms: self.terms.iter().map(|(t, d)| (t.times(m), d * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Evaluates at integer points.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| c * num_traits::pow(x.clone(), m.x as usize) * num_traits::pow(y.clone(), m.y as usize))
            .sum()
    }

    /// Multiplies by `-1` if needed so the leading coefficient is positive.
    pub fn normalize_sign(self) -> Self {
        match self.leading_coefficient() {
            Some(c) if c.is_negative() => -self,
            _ => self,
        }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::from_terms(self.terms.iter().chain(o.terms.iter()).cloned())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::from_terms(
            self.terms.iter().cloned().chain(o.terms.iter().map(|(m, c)| (*m, -c))),
        )
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(m1.times(*m2)).or_default() += c1 * c2;
            }
        }
        IntPolynomial::from_map(acc)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: IntPolynomial) -> IntPolynomial {
        &self + &o
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: IntPolynomial) -> IntPolynomial {
        &self - &o
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: IntPolynomial) -> IntPolynomial {
        &self * &o
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical text form, e.g. `X^3*Y - X^2 - 2*X*Y^2 + Y`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses sums of products of integers, `X`, `Y` and powers `X^n`,
    /// `Y^n`. Whitespace is ignored; variables are case-insensitive.
    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.to_string() };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut coeff = BigInt::one();
            match bytes[pos] {
                b'+' => pos += 1,
                b'-' => {
                    coeff = -coeff;
                    pos += 1;
                }
                _ if pos > 0 => return Err(err("expected '+' or '-' between terms")),
                _ => {}
            }
            let mut mono = Monomial::ONE;
            let mut expect_factor = true;
            while expect_factor {
                let start = pos;
                match bytes.get(pos) {
                    Some(b) if b.is_ascii_digit() => {
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let n: BigInt = s[start..pos].parse().map_err(|_| err("bad integer"))?;
                        coeff *= n;
                    }
                    Some(b'X' | b'x' | b'Y' | b'y') => {
                        let is_x = matches!(bytes[pos], b'X' | b'x');
                        pos += 1;
                        let mut e = 1u32;
                        if bytes.get(pos) == Some(&b'^') {
                            pos += 1;
                            let es = pos;
                            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                                pos += 1;
                            }
                            if es == pos {
                                return Err(err("missing exponent after '^'"));
                            }
                            e = s[es..pos].parse().map_err(|_| err("exponent too large"))?;
                        }
                        if is_x {
                            mono.x += e;
                        } else {
                            mono.y += e;
                        }
                    }
                    Some(_) => return Err(err(&format!("unexpected character at offset {pos}"))),
                    None => return Err(err("unexpected end of input")),
                }
                if bytes.get(pos) == Some(&b'*') {
                    pos += 1;
                } else {
                    expect_factor = false;
                }
            }
            terms.push((mono, coeff));
        }
        Ok(IntPolynomial::from_terms(terms))
    }
}

/// Standard monomials of a quotient `Z[X, Y] / J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Staircase {
    Finite(Vec<Monomial>),
    Infinite,
}

impl Staircase {
    pub fn size(&self) -> Option<usize> {
        match self {
            Staircase::Finite(v) => Some(v.len()),
            Staircase::Infinite => None,
        }
    }
}

/// A reduced strong Gröbner basis over the integers.
///
/// When every leading coefficient is `±1` and the staircase is finite, the
/// quotient ring is a free abelian group with the standard monomials as basis.
/// Non-unit leading coefficients do not by themselves mean torsion; see
/// [`StrongGB::torsion_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongGB {
    pub generators: Vec<IntPolynomial>,
    pub staircase: Staircase,
    pub unit_leading: bool,
}

impl StrongGB {
    pub fn new(gens: &[IntPolynomial]) -> Result<StrongGB> {
        strong_groebner(gens)
    }

    pub fn normal_form(&self, p: &IntPolynomial) -> IntPolynomial {
        reduce(p, &self.generators)
    }

    pub fn contains(&self, p: &IntPolynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Free rank of the quotient, `None` when the staircase is infinite.
    pub fn rank(&self) -> Option<usize> {
        self.staircase.size()
    }

    pub fn is_free_of_rank(&self, n: usize) -> bool {
        self.rank() == Some(n) && self.torsion_free() == Some(true)
    }

    /// Decides whether the quotient is torsion-free.
    ///
    /// Unit leading coefficients settle it at once. Otherwise the monomials
    /// `U` not divisible by any unit leading monomial span the quotient; when
    /// `U` is finite the quotient is `Z^U` modulo one relation per non-unit
    /// corner of the staircase, and it is free exactly when that relation
    /// matrix has all Smith invariants equal to one. Returns `None` when `U`
    /// is infinite, in which case a finite staircase means the quotient is not
    /// finitely generated.
    pub fn torsion_free(&self) -> Option<bool> {
        if self.unit_leading {
            return Some(true);
        }
        let unit_heads: Vec<IntPolynomial> = self
            .generators
            .iter()
            .filter(|g| g.leading_coefficient().unwrap().abs().is_one())
            .map(|g| IntPolynomial::term(BigInt::one(), g.leading_monomial().unwrap()))
            .collect();
        let Staircase::Finite(spanning) = staircase_of(&unit_heads) else {
            return None;
        };
        let corners: Vec<Monomial> = spanning
            .iter()
            .copied()
            .filter(|&m| self.generators.iter().any(|g| g.leading_monomial().unwrap().divides(m)))
            .collect();
        let column: BTreeMap<Monomial, usize> = spanning.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let relations: Vec<Vec<BigInt>> = corners
            .iter()
            .map(|&t| {
                let g = self
                    .generators
                    .iter()
                    .filter(|g| g.leading_monomial().unwrap().divides(t))
                    .min_by_key(|g| g.leading_coefficient().unwrap().abs())
                    .unwrap();
                let (lm, lc) = g.leading_term().unwrap();
                let shift = t.quotient(lm);
                let tail = IntPolynomial::from_terms(g.terms[1..].iter().map(|(m, c)| (m.times(shift), c.clone())));
                let mut row = vec![BigInt::zero(); spanning.len()];
                row[column[&t]] = lc.clone();
                for (m, c) in reduce(&tail, &self.generators).terms {
                    row[column[&m]] += c;
                }
                row
            })
            .collect();
        Some(smith_invariants(relations).iter().all(|d| d.is_one()))
    }
}

/// Diagonal of the Smith normal form, one entry per row; a zero entry marks a
/// rank-deficient row set.
#[allow(clippy::needless_range_loop)]
fn smith_invariants(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(rows);
    for t in 0..rows {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by_key(|&(i, j)| m[i][j].abs());
            let Some((pi, pj)) = pivot else {
                out.resize(rows, BigInt::zero());
                return out;
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&p);
                if !q.is_zero() {
                    for j in t..cols {
                        let d = &q * &m[t][j];
                        m[i][j] -= d;
                    }
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&p);
                if !q.is_zero() {
                    for i in t..rows {
                        let d = &q * &m[i][t];
                        m[i][j] -= d;
                    }
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let stray = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !divides(&p, &m[i][j])));
            match stray {
                Some(i) => {
                    for j in t..cols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => {
                    out.push(p.abs());
                    break;
                }
            }
        }
    }
    out
}

/// Division of `p` by `basis` with remainder.
///
/// Each term `c·m` is reduced by the basis element whose leading monomial
/// divides `m` with the smallest leading coefficient in absolute value,
/// replacing `c` by its non-negative remainder. Terms that survive are not
/// divisible by any leading term of `basis`.
fn reduce(p: &IntPolynomial, basis: &[IntPolynomial]) -> IntPolynomial {
    let mut work = p.to_map();
    let mut rest: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((m, c)) = work.pop_last() {
        let reducer = basis
            .iter()
            .filter(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
            .min_by(|g, h| {
                let (gc, hc) = (g.leading_coefficient().unwrap(), h.leading_coefficient().unwrap());
                gc.abs().cmp(&hc.abs()).then(g.leading_monomial().cmp(&h.leading_monomial()))
            });
        let Some(g) = reducer else {
            rest.push((m, c));
            continue;
        };
        let (lm, lc) = g.leading_term().unwrap();
        let modulus = lc.abs();
        let r = c.mod_floor(&modulus);
        let q = (&c - &r) / lc;
        if q.is_zero() {
            rest.push((m, c));
            continue;
        }
        let shift = m.quotient(lm);
        for (t, d) in &g.terms[1..] {
            let key = t.times(shift);
            let entry = work.entry(key).or_default();
            *entry -= &q * d;
            if entry.is_zero() {
                work.remove(&key);
            }
        }
        if !r.is_zero() {
            rest.push((m, r));
        }
    }
    IntPolynomial { terms: rest }
}

/// S-polynomial: cancels leading terms against their lcm.
fn s_polynomial(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let c = fc.lcm(gc);
    &f.mul_term(&(&c / fc), l.quotient(fm)) - &g.mul_term(&(&c / gc), l.quotient(gm))
}

/// GCD-polynomial: leading term `gcd(lc f, lc g) · lcm(lm f, lm g)`.
fn gcd_polynomial(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let e = fc.extended_gcd(gc);
    &f.mul_term(&e.x, l.quotient(fm)) + &g.mul_term(&e.y, l.quotient(gm))
}

fn divides(a: &BigInt, b: &BigInt) -> bool {
    (b % a).is_zero()
}

/// Buchberger's algorithm over the integers with S- and GCD-pairs.
///
/// Pairs are processed in increasing order of the lcm of their leading
/// monomials, ties broken by index, so the result depends only on the input
/// ideal and the input order; the final inter-reduction removes the latter.
pub fn strong_groebner(gens: &[IntPolynomial]) -> Result<StrongGB> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut basis: Vec<IntPolynomial> = Vec::new();
    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            basis.push(r.normalize_sign());
        }
    }
    if basis.is_empty() {
        return Err(Error::ZeroGenerators);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let pick = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let l = basis[i].leading_monomial().unwrap().lcm(basis[j].leading_monomial().unwrap());
                (l, j, i)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(pick);
        let (f, g) = (&basis[i], &basis[j]);
        let (fm, fc) = f.leading_term().unwrap();
        let (gm, gc) = g.leading_term().unwrap();

        let mut candidates = Vec::with_capacity(2);
        let units = fc.abs().is_one() && gc.abs().is_one();
        if !(units && fm.is_coprime(gm)) {
            candidates.push(s_polynomial(f, g));
        }
        if !divides(fc, gc) && !divides(gc, fc) {
            candidates.push(gcd_polynomial(f, g));
        }
        for h in candidates {
            let r = reduce(&h, &basis);
            if !r.is_zero() {
                let n = basis.len();
                basis.push(r.normalize_sign());
                pairs.extend((0..n).map(|i| (i, n)));
            }
        }
    }
    let generators = inter_reduce(basis);
    let staircase = staircase_of(&generators);
    let unit_leading = generators.iter().all(|g| g.leading_coefficient().unwrap().abs().is_one());
    Ok(StrongGB { generators, staircase, unit_leading })
}

/// Drops elements whose leading term is divisible by another's, reduces the
/// tails and sorts by leading monomial.
fn inter_reduce(mut basis: Vec<IntPolynomial>) -> Vec<IntPolynomial> {
    basis.sort_by(|f, g| {
        let (fm, fc) = f.leading_term().unwrap();
        let (gm, gc) = g.leading_term().unwrap();
        fm.cmp(&gm).then(fc.abs().cmp(&gc.abs())).then(f.terms.cmp(&g.terms))
    });
    let mut kept: Vec<IntPolynomial> = Vec::new();
    for f in basis {
        let (fm, fc) = f.leading_term().unwrap();
        let redundant = kept.iter().any(|g| {
            let (gm, gc) = g.leading_term().unwrap();
            gm.divides(fm) && divides(gc, fc)
        });
        if !redundant {
            kept.push(f);
        }
    }
    // Tail reduction never changes leading terms, so each element can be
    // reduced against the others independently.
    let heads: Vec<IntPolynomial> = kept.clone();
    kept.into_iter()
        .enumerate()
        .map(|(idx, f)| {
            let others: Vec<IntPolynomial> = heads
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let (lm, lc) = f.leading_term().unwrap();
            let head = IntPolynomial::term(lc.clone(), lm);
            let tail = IntPolynomial { terms: f.terms[1..].to_vec() };
            (&head + &reduce(&tail, &others)).normalize_sign()
        })
        .collect()
}

fn staircase_of(basis: &[IntPolynomial]) -> Staircase {
    let lms: Vec<Monomial> = basis.iter().filter_map(|g| g.leading_monomial()).collect();
    let x_bound = lms.iter().filter(|m| m.y == 0).map(|m| m.x).min();
    let y_bound = lms.iter().filter(|m| m.x == 0).map(|m| m.y).min();
    let (Some(xb), Some(yb)) = (x_bound, y_bound) else {
        return Staircase::Infinite;
    };
    let mut out: Vec<Monomial> = (0..xb)
        .flat_map(|x| (0..yb).map(move |y| Monomial::new(x, y)))
        .filter(|m| !lms.iter().any(|l| l.divides(*m)))
        .collect();
    out.sort();
    Staircase::Finite(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("X + Y") * &p("X - Y"), p("X^2 - Y^2"));
        let q = p("3*X*Y - 7");
        assert!((&q + &(-q.clone())).is_zero());
        assert_eq!((&q - &q).terms(), &[]);
        assert_eq!(&p("X^2 - Y") * &p("X*Y - 1"), p("X^3*Y - X^2 - X*Y^2 + Y"));
        assert_eq!(p("X^2 - Y").scale(&BigInt::from(-2)), p("-2*X^2 + 2*Y"));
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let mut ms = vec![Monomial::new(0, 2), Monomial::ONE, Monomial::new(1, 1), Monomial::Y, Monomial::new(2, 0), Monomial::X];
        ms.sort();
        assert_eq!(
            ms,
            vec![Monomial::ONE, Monomial::Y, Monomial::X, Monomial::new(0, 2), Monomial::new(1, 1), Monomial::new(2, 0)]
        );
        assert_eq!(p("Y^3 + X").leading_monomial(), Some(Monomial::new(0, 3)));
    }

    #[test]
    fn printing_is_canonical() {
        assert_eq!(p("-Y + X^2").to_string(), "X^2 - Y");
        assert_eq!(p("x*y*2 - 1 + 0*X").to_string(), "2*X*Y - 1");
        assert_eq!(p("X - X").to_string(), "0");
        assert_eq!(p("-3").to_string(), "-3");
        assert_eq!(p("X*X*Y^2 + 12*Y^10").to_string(), "12*Y^10 + X^2*Y^2");
        assert_eq!(p("0"), IntPolynomial::zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "X^", "X +", "2X", "Z", "X**Y", "X Y"] {
            assert!(bad.parse::<IntPolynomial>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn groebner_examples() {
        let gb = strong_groebner(&[p("X"), p("Y")]).unwrap();
        assert_eq!(gb.staircase, Staircase::Finite(vec![Monomial::ONE]));
        assert!(gb.unit_leading);

        let gb = strong_groebner(&[p("2"), p("X")]).unwrap();
        assert!(!gb.unit_leading);

        let gb = strong_groebner(&[p("X^2 - Y"), p("X*Y - 1")]).unwrap();
        assert_eq!(gb.rank(), Some(3));
        assert!(gb.unit_leading);
        assert_eq!(gb.normal_form(&p("X^3")), p("1"));
        assert_eq!(gb.normal_form(&p("X^2 - Y")), IntPolynomial::zero());
        assert_eq!(gb.normal_form(&p("X*Y - 1")), IntPolynomial::zero());

        let gb = strong_groebner(&[p("X"), p("Y")]).unwrap();
        assert_eq!(gb.normal_form(&IntPolynomial::one()), IntPolynomial::one());

        assert_eq!(strong_groebner(&[]).unwrap_err(), Error::EmptyGenerators);
        assert_eq!(strong_groebner(&[p("0")]).unwrap_err(), Error::ZeroGenerators);
    }

    #[test]
    fn torsion_is_detected() {
        // Z[X,Y]/(2X, 3X, Y) = Z: gcd pairs recover X.
        let gb = strong_groebner(&[p("2*X"), p("3*X"), p("Y")]).unwrap();
        assert!(gb.unit_leading);
        assert_eq!(gb.generators, vec![p("Y"), p("X")]);

        // Z[X,Y]/(X^2, Y, 2X) = Z ⊕ Z/2
        let gb = strong_groebner(&[p("X^2"), p("Y"), p("2*X")]).unwrap();
        assert!(!gb.unit_leading);
        assert_eq!(gb.rank(), Some(1));
        assert_eq!(gb.torsion_free(), Some(false));
        assert!(!gb.is_free_of_rank(1));

        // Z[X,Y]/(2X - 1, Y) = Z[1/2] is not finitely generated
        let gb = strong_groebner(&[p("2*X - 1"), p("Y")]).unwrap();
        assert_eq!(gb.torsion_free(), None);
    }

    #[test]
    fn non_unit_leading_coefficient_without_torsion() {
        // Z[X,Y] → Z × Z, X ↦ (0, 1), Y ↦ (0, 3): every kernel element with
        // leading monomial X has coefficient divisible by 3, yet the quotient
        // is free of rank 2.
        let gb = strong_groebner(&[p("3*X - Y"), p("X^2 - X"), p("X*Y - Y"), p("Y^2 - 3*Y")]).unwrap();
        assert!(!gb.unit_leading);
        assert_eq!(gb.rank(), Some(2));
        assert_eq!(gb.torsion_free(), Some(true));
        assert!(gb.is_free_of_rank(2));

        let gb = strong_groebner(&[p("3*X - 3*Y"), p("X^2 - X"), p("X*Y - Y"), p("Y^2 - 3*Y")]).unwrap();
        assert_eq!(gb.torsion_free(), Some(false));
    }

    #[test]
    fn smith_invariants_examples() {
        let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let big = |v: &[i64]| v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>();
        assert_eq!(smith_invariants(m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])), big(&[2, 6, 12]));
        assert_eq!(smith_invariants(m(&[&[3, 5]])), vec![BigInt::one()]);
        assert_eq!(smith_invariants(m(&[&[3, 6]])), vec![BigInt::from(3)]);
        assert_eq!(smith_invariants(m(&[&[1, 2], &[2, 4]])), vec![BigInt::one(), BigInt::zero()]);

        // (6, 4) = (2)
        let gb = strong_groebner(&[p("6"), p("4")]).unwrap();
        assert_eq!(gb.generators, vec![p("2")]);
    }

    #[test]
    fn single_generator_has_infinite_staircase() {
        let gb = strong_groebner(&[p("X^2 - Y")]).unwrap();
        assert_eq!(gb.staircase, Staircase::Infinite);
        let gb = strong_groebner(&[p("X^2 - Y"), p("X^2 - Y")]).unwrap();
        assert_eq!(gb.staircase, Staircase::Infinite);
    }

    #[test]
    fn permuted_inputs_give_identical_bases() {
        let gens = vec![p("X^3 - 2*X*Y + 1"), p("Y^2 - X"), p("X*Y - Y - 1")];
        let base = strong_groebner(&gens).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(strong_groebner(&rev).unwrap(), base);
        let rot = vec![gens[1].clone(), gens[2].clone(), gens[0].clone()];
        assert_eq!(strong_groebner(&rot).unwrap(), base);
        for g in &base.generators {
            assert!(g.leading_coefficient().unwrap().is_positive());
        }
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..6).prop_map(|ts| {
            IntPolynomial::from_terms(ts.into_iter().map(|((x, y), c)| (Monomial::new(x, y), BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn printer_and_parser_round_trip(q in small_poly()) {
            let text = q.to_string();
            let back: IntPolynomial = text.parse().unwrap();
            prop_assert_eq!(&back, &q);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            let x = BigInt::from(3);
            let y = BigInt::from(-2);
            prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
        }

        #[test]
        fn normal_form_is_linear_on_ideal_and_idempotent(r1 in small_poly(), r2 in small_poly(), q in small_poly()) {
            let g1 = p("X^2 - Y");
            let g2 = p("X*Y - 1");
            let gb = strong_groebner(&[g1.clone(), g2.clone()]).unwrap();
            let u = &(&r1 * &g1) + &(&r2 * &g2);
            prop_assert!(gb.normal_form(&u).is_zero());
            prop_assert!(gb.normal_form(&(&r1 * &g2)).is_zero());
            let nf = gb.normal_form(&q);
            prop_assert_eq!(gb.normal_form(&nf), nf.clone());
            prop_assert_eq!(gb.normal_form(&(&q + &u)), nf.clone());
            prop_assert!(gb.normal_form(&(&q - &nf)).is_zero());
        }
    }
}

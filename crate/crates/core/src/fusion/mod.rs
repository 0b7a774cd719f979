//! The level-k fusion ring: Kac–Walton structure constants, ring arithmetic
//! in the alcove basis, the fusion rule `N` on multisets, the fusion pairing
//! and evaluation of polynomials in `Z[X, Y]`.

pub mod cache;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::alcove::{Alcove, FoldResult};
use crate::cartan::{AlgebraType, Weight};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::repring::RepRing;

/// An element of the fusion ring as an integer vector over the canonical
/// alcove basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionElement {
    algebra: AlgebraType,
    level: i64,
    pub coeffs: Vec<BigInt>,
}

impl FusionElement {
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficients as machine integers, `None` on overflow.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

/// A triple `(λ, ν, μ)` with `⟨[λ]·[ν], [μ]⟩ ≠ ⟨[λ], [ν*]·[μ]⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusViolation {
    pub lambda: Weight,
    pub nu: Weight,
    pub mu: Weight,
}

/// Structure constants `N_{λμ}^ν` over `P_k` and the multiplication
/// operators of `X = [ω1]` and `Y = [ω2]`.
#[derive(Debug, Clone)]
pub struct FusionTable {
    alc: Alcove,
    n: usize,
    coeffs: Vec<i64>,
    mult_x: Vec<Vec<i64>>,
    mult_y: Vec<Vec<i64>>,
    dual: Vec<usize>,
}

impl FusionTable {
    pub fn new(alc: &Alcove) -> FusionTable {
        Self::with_rep_ring(alc, &RepRing::new(alc.root_system()))
    }

    /// `N_{λμ}^ν = Σ_w det(w) M_{λμ}^{w.ν}`, evaluated by folding every
    /// classical summand of `V(λ) ⊗ V(μ)` into the alcove.
    pub fn with_rep_ring(alc: &Alcove, rep: &RepRing) -> FusionTable {
        let n = alc.len();
        let weights = alc.weights();
        let mut coeffs = vec![0i64; n * n * n];
        for (i, &lam) in weights.iter().enumerate() {
            for (j, &mu) in weights.iter().enumerate().skip(i) {
                let column = folded_product(alc, rep, lam, mu);
                for (l, &v) in column.iter().enumerate() {
                    coeffs[(i * n + j) * n + l] = v;
                    coeffs[(j * n + i) * n + l] = v;
                }
            }
        }
        Self::from_coefficients(alc, rep, coeffs)
    }

    /// Wraps precomputed structure constants (e.g. loaded from a cache file).
    /// The multiplication operators are always recomputed.
    pub fn from_coefficients(alc: &Alcove, rep: &RepRing, coeffs: Vec<i64>) -> FusionTable {
        let n = alc.len();
        assert_eq!(coeffs.len(), n * n * n);
        let operator = |omega: Weight| {
            let mut m = vec![vec![0i64; n]; n];
            for (j, &mu) in alc.weights().iter().enumerate() {
                for (l, v) in folded_product(alc, rep, omega, mu).into_iter().enumerate() {
                    m[l][j] = v;
                }
            }
            m
        };
        let rs = alc.root_system();
        let dual = alc
            .weights()
            .iter()
            .map(|&w| alc.index_of(rs.dual_weight(w)).expect("alcove is closed under duality"))
            .collect();
        FusionTable {
            alc: alc.clone(),
            n,
            coeffs,
            mult_x: operator(Weight::OMEGA1),
            mult_y: operator(Weight::OMEGA2),
            dual,
        }
    }

    pub fn alcove(&self) -> &Alcove {
        &self.alc
    }

    pub fn algebra(&self) -> AlgebraType {
        self.alc.root_system().algebra
    }

    pub fn level(&self) -> i64 {
        self.alc.level()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `N_{λμ}^ν` by alcove indices.
    pub fn get(&self, lambda: usize, mu: usize, nu: usize) -> i64 {
        self.coeffs[(lambda * self.n + mu) * self.n + nu]
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn mult_x(&self) -> &[Vec<i64>] {
        &self.mult_x
    }

    pub fn mult_y(&self) -> &[Vec<i64>] {
        &self.mult_y
    }

    /// Index of `λ*` for the weight at index `i`.
    pub fn dual_index(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn zero(&self) -> FusionElement {
        FusionElement { algebra: self.algebra(), level: self.level(), coeffs: vec![BigInt::zero(); self.n] }
    }

    pub fn basis(&self, i: usize) -> FusionElement {
        let mut e = self.zero();
        e.coeffs[i] = BigInt::from(1);
        e
    }

    pub fn basis_of(&self, w: Weight) -> Result<FusionElement> {
        let i = self.index(w)?;
        Ok(self.basis(i))
    }

    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<FusionElement> {
        if coeffs.len() != self.n {
            return Err(Error::AlcoveMismatch);
        }
        Ok(FusionElement { algebra: self.algebra(), level: self.level(), coeffs })
    }

    fn index(&self, w: Weight) -> Result<usize> {
        self.alc.index_of(w).ok_or(Error::OutsideAlcove { weight: w, level: self.level() })
    }

    fn check(&self, u: &FusionElement) -> Result<()> {
        if u.algebra != self.algebra() || u.level != self.level() || u.coeffs.len() != self.n {
            return Err(Error::AlcoveMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, u: &FusionElement, v: &FusionElement) -> Result<FusionElement> {
        self.check(u)?;
        self.check(v)?;
        let mut out = self.zero();
        for (i, ui) in u.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, vj) in v.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let uv = ui * vj;
                for (l, slot) in out.coeffs.iter_mut().enumerate() {
                    let nc = self.get(i, j, l);
                    if nc != 0 {
                        *slot += &uv * nc;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the duality involution `[λ] ↦ [λ*]`.
    pub fn dual(&self, u: &FusionElement) -> Result<FusionElement> {
        self.check(u)?;
        let mut out = self.zero();
        for (i, c) in u.coeffs.iter().enumerate() {
            out.coeffs[self.dual[i]] = c.clone();
        }
        Ok(out)
    }

    /// The fusion rule `N(λ1 + … + λs)`: the coefficient of `[0]` in
    /// `[λ1]⋯[λs]`.
    pub fn fusion_rule(&self, weights: &[Weight]) -> Result<BigInt> {
        let (first, rest) = weights.split_first().ok_or(Error::EmptyMultiset)?;
        let mut acc = self.basis_of(*first)?;
        for &w in rest {
            acc = self.multiply(&acc, &self.basis_of(w)?)?;
        }
        Ok(acc.coeffs[0].clone())
    }

    /// Bilinear extension of `⟨[λ], [μ]⟩ = N(λ + μ*)`.
    pub fn pairing(&self, u: &FusionElement, v: &FusionElement) -> Result<BigInt> {
        let prod = self.multiply(u, &self.dual(v)?)?;
        Ok(prod.coeffs[0].clone())
    }

    /// `⟨[λ], [μ]⟩` on the alcove basis, read off the structure constants.
    pub fn gram_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, self.dual[j], 0)).collect())
            .collect()
    }

    pub fn gram_is_identity(&self) -> bool {
        self.gram_matrix()
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &g)| g == i64::from(i == j)))
    }

    /// Checks `⟨[λ]·[ν], [μ]⟩ = ⟨[λ], [ν*]·[μ]⟩` over all of `P_k³` and
    /// reports the first failing triple.
    pub fn check_frobenius(&self) -> std::result::Result<(), FrobeniusViolation> {
        let n = self.n;
        let gram = self.gram_matrix();
        let w = self.alc.weights();
        for lam in 0..n {
            for nu in 0..n {
                for mu in 0..n {
                    let lhs: i64 = (0..n).map(|s| self.get(lam, nu, s) * gram[s][mu]).sum();
                    let rhs: i64 = (0..n).map(|s| gram[lam][s] * self.get(self.dual[nu], mu, s)).sum();
                    if lhs != rhs {
                        return Err(FrobeniusViolation { lambda: w[lam], nu: w[nu], mu: w[mu] });
                    }
                }
            }
        }
        Ok(())
    }

    /// Image of `p(X, Y)` in the fusion ring, computed as
    /// `p(mult_x, mult_y)` applied to `[0]`.
    pub fn evaluate_poly(&self, p: &IntPolynomial) -> FusionElement {
        let mut out = self.zero();
        if p.is_zero() {
            return out;
        }
        let max_y = p.terms().iter().map(|(m, _)| m.y).max().unwrap_or(0);
        let mut y_power = self.basis(0).coeffs;
        for j in 0..=max_y {
            let mut row: Vec<(u32, &BigInt)> =
                p.terms().iter().filter(|(m, _)| m.y == j).map(|(m, c)| (m.x, c)).collect();
            if !row.is_empty() {
                row.sort_by_key(|&(x, _)| x);
                let mut v = y_power.clone();
                let mut power = 0;
                for (x, c) in row {
                    while power < x {
                        v = apply(&self.mult_x, &v);
                        power += 1;
                    }
                    for (slot, vi) in out.coeffs.iter_mut().zip(&v) {
                        *slot += c * vi;
                    }
                }
            }
            if j < max_y {
                y_power = apply(&self.mult_y, &y_power);
            }
        }
        out
    }
}

fn apply(m: &[Vec<i64>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(&r, _)| r != 0)
                .map(|(&r, x)| x * r)
                .sum()
        })
        .collect()
}

/// Coefficients of `[λ]·[μ]` in the alcove basis via Kac–Walton folding.
/// `λ` and `μ` need only be dominant, not inside the alcove.
fn folded_product(alc: &Alcove, rep: &RepRing, lam: Weight, mu: Weight) -> Vec<i64> {
    let mut out = vec![0i64; alc.len()];
    let product = rep.tensor_decompose(lam, mu).expect("alcove weights are dominant");
    for (nu, m) in product {
        if let FoldResult::Interior { weight, sign } = alc.fold(nu) {
            out[alc.index_of(weight).unwrap()] += sign * m as i64;
        }
    }
    out
}

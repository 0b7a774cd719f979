//! The classical representation ring: weight multiplicities (Freudenthal),
//! tensor product multiplicities (Klimyk) and character polynomials in
//! `Z[X, Y]` with `X = [ω1]`, `Y = [ω2]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Dominant weights of `V(λ)` with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    pub highest: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightMultiplicityTable {
    pub fn multiplicity(&self, mu: Weight) -> u64 {
        self.entries.get(&mu).copied().unwrap_or(0)
    }

    /// Every weight of `V(λ)` (full Weyl orbits of the dominant entries).
    pub fn all_weights(&self, rs: &RootSystem) -> Vec<(Weight, u64)> {
        let mut out = Vec::new();
        for (&mu, &m) in &self.entries {
            let mut orbit: Vec<Weight> = rs.weyl_elements.iter().map(|e| e.matrix.apply(mu)).collect();
            orbit.sort();
            orbit.dedup();
            out.extend(orbit.into_iter().map(|w| (w, m)));
        }
        out
    }
}

/// Multiplicities `M_{λμ}^ν` of `V(λ) ⊗ V(μ)`, positive entries only.
pub type Decomposition = BTreeMap<Weight, u64>;

/// Folds `v - ρ` under the shifted finite Weyl action: `None` if `v` is
/// singular, otherwise the dominant weight and the determinant.
pub fn finite_shifted_fold(rs: &RootSystem, w: Weight) -> Option<(Weight, i64)> {
    let mut v = w + rs.rho;
    let mut sign = 1;
    loop {
        if v.a == 0 || v.b == 0 {
            return None;
        }
        if v.a < 0 {
            v = rs.reflect(0, v);
        } else if v.b < 0 {
            v = rs.reflect(1, v);
        } else {
            return Some((v - rs.rho, sign));
        }
        sign = -sign;
    }
}

/// Representation ring of one algebra with memoized weight systems and
/// character polynomials. Safe to share between threads.
#[derive(Debug)]
pub struct RepRing {
    rs: RootSystem,
    weights: RwLock<HashMap<Weight, Arc<WeightMultiplicityTable>>>,
    chars: RwLock<HashMap<Weight, IntPolynomial>>,
}

impl RepRing {
    pub fn new(rs: &RootSystem) -> RepRing {
        RepRing { rs: rs.clone(), weights: RwLock::default(), chars: RwLock::default() }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weight_multiplicities(&self, lambda: Weight) -> Result<Arc<WeightMultiplicityTable>> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda));
        }
        if let Some(t) = self.weights.read().unwrap().get(&lambda) {
            return Ok(t.clone());
        }
        let table = Arc::new(freudenthal(&self.rs, lambda));
        self.weights.write().unwrap().insert(lambda, table.clone());
        Ok(table)
    }

    /// Klimyk's formula over the weight system of the factor of smaller
    /// dimension.
    pub fn tensor_decompose(&self, lambda: Weight, mu: Weight) -> Result<Decomposition> {
        for w in [lambda, mu] {
            if !w.is_dominant() {
                return Err(Error::NotDominant(w));
            }
        }
        let (big, small) = if self.rs.weyl_dimension(lambda)? >= self.rs.weyl_dimension(mu)? {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let table = self.weight_multiplicities(small)?;
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, m) in table.all_weights(&self.rs) {
            if let Some((nu, sign)) = finite_shifted_fold(&self.rs, big + w) {
                *acc.entry(nu).or_default() += sign * m as i64;
            }
        }
        let mut out = Decomposition::new();
        for (nu, m) in acc {
            assert!(m >= 0, "negative tensor multiplicity {m} at {nu} in {lambda}⊗{mu}");
            if m > 0 {
                out.insert(nu, m as u64);
            }
        }
        Ok(out)
    }

    /// Character polynomial of `V(λ)`, descending through `λ − ω1` when
    /// `a > 0` and through `λ − ω2` otherwise.
    pub fn char_poly(&self, lambda: Weight) -> Result<IntPolynomial> {
        let i = if lambda.a > 0 { 0 } else { 1 };
        self.char_poly_descending(lambda, i)
    }

    /// Character polynomial computed by peeling off `ω_{i+1}` first.
    pub fn char_poly_descending(&self, lambda: Weight, i: usize) -> Result<IntPolynomial> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda));
        }
        if let Some(p) = self.chars.read().unwrap().get(&lambda) {
            return Ok(p.clone());
        }
        let p = match (lambda.a, lambda.b) {
            (0, 0) => IntPolynomial::one(),
            (1, 0) => IntPolynomial::x(),
            (0, 1) => IntPolynomial::y(),
            _ => {
                let (omega, var) = match i {
                    0 if lambda.a > 0 => (Weight::OMEGA1, IntPolynomial::x()),
                    1 if lambda.b > 0 => (Weight::OMEGA2, IntPolynomial::y()),
                    _ if lambda.a > 0 => (Weight::OMEGA1, IntPolynomial::x()),
                    _ => (Weight::OMEGA2, IntPolynomial::y()),
                };
                let lower = lambda - omega;
                let mut acc = &self.char_poly(lower)? * &var;
                for (nu, m) in self.tensor_decompose(lower, omega)? {
                    if nu == lambda {
                        debug_assert_eq!(m, 1);
                        continue;
                    }
                    acc = &acc - &self.char_poly(nu)?.scale(&BigInt::from(m));
                }
                acc
            }
        };
        self.chars.write().unwrap().insert(lambda, p.clone());
        Ok(p)
    }
}

fn freudenthal(rs: &RootSystem, lambda: Weight) -> WeightMultiplicityTable {
    // λ in simple-root coordinates bounds the depth of any dominant weight below it.
    let c = &rs.cartan_matrix;
    let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
    let bound = [
        (c[1][1] * lambda.a - c[0][1] * lambda.b) / det,
        (-c[1][0] * lambda.a + c[0][0] * lambda.b) / det,
    ];
    let mut candidates: Vec<([i64; 2], Weight)> = Vec::new();
    for n0 in 0..=bound[0] {
        for n1 in 0..=bound[1] {
            let mu = lambda - n0 * rs.simple_roots[0] - n1 * rs.simple_roots[1];
            if mu.is_dominant() {
                candidates.push(([n0, n1], mu));
            }
        }
    }
    candidates.sort_by_key(|&(n, mu)| (n[0] + n[1], n, mu));

    let top = rs.scaled_norm(lambda + rs.rho);
    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    for (_, mu) in candidates {
        if mu == lambda {
            entries.insert(mu, 1);
            continue;
        }
        let mut sum: i64 = 0;
        for root in &rs.positive_roots {
            for j in 1.. {
                let shifted = mu + j * root.weight;
                let m = entries.get(&rs.dominant_representative(shifted)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                sum += rs.scaled_inner(shifted, root.weight) * m as i64;
            }
        }
        let denom = top - rs.scaled_norm(mu + rs.rho);
        assert!(denom > 0 && (2 * sum) % denom == 0, "Freudenthal recursion is not integral at {mu}");
        let m = 2 * sum / denom;
        assert!(m > 0, "dominant weight {mu} below {lambda} has multiplicity {m}");
        entries.insert(mu, m as u64);
    }
    WeightMultiplicityTable { highest: lambda, entries }
}

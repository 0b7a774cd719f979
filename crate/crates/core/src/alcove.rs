//! The level-k alcove and shifted affine Weyl folding.

use std::collections::HashMap;

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldResult {
    /// `λ + ρ` lies on a reflection hyperplane; the weight contributes zero.
    Wall,
    Interior { weight: Weight, sign: i64 },
}

/// Dominant weights of level at most `k`, ordered by level and then
/// lexicographically on `(a, b)`.
#[derive(Debug, Clone)]
pub struct Alcove {
    rs: RootSystem,
    level: i64,
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
}

impl Alcove {
    pub fn new(rs: &RootSystem, k: i64) -> Result<Alcove> {
        if k < 0 {
            return Err(Error::NegativeLevel(k));
        }
        let [c1, c2] = rs.comarks;
        let mut weights: Vec<Weight> = (0..=k / c1)
            .flat_map(|a| (0..=(k - c1 * a) / c2).map(move |b| Weight::new(a, b)))
            .collect();
        weights.sort_by_key(|&w| (rs.level(w), w));
        let index = weights.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        Ok(Alcove { rs: rs.clone(), level: k, weights, index })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn index_of(&self, w: Weight) -> Option<usize> {
        self.index.get(&w).copied()
    }

    pub fn contains(&self, w: Weight) -> bool {
        w.is_dominant() && self.rs.level(w) <= self.level
    }

    /// Shifted level `k + h∨` of the affine wall.
    pub fn shifted_level(&self) -> i64 {
        self.level + self.rs.dual_coxeter
    }

    /// Folds `λ` into the alcove under the shifted action of the level-k
    /// affine Weyl group, tracking the determinant of the folding element.
    pub fn fold(&self, w: Weight) -> FoldResult {
        let rs = &self.rs;
        let wall = self.shifted_level();
        let mut v = w + rs.rho;
        let mut sign = 1;
        let mut measure = self.fold_measure(v);
        loop {
            if v.a == 0 || v.b == 0 {
                return FoldResult::Wall;
            }
            if v.a < 0 {
                v = rs.reflect(0, v);
            } else if v.b < 0 {
                v = rs.reflect(1, v);
            } else {
                let l = rs.level(v);
                if l == wall {
                    return FoldResult::Wall;
                }
                if l < wall {
                    return FoldResult::Interior { weight: v - rs.rho, sign };
                }
                v = v - (l - wall) * rs.highest_root;
            }
            sign = -sign;
            let next = self.fold_measure(v);
            assert!(next < measure, "folding failed to make progress at {v}");
            measure = next;
        }
    }

    /// Strictly decreases along the folding loop: affine reflections of a
    /// dominant vector beyond the wall shrink the norm, finite reflections
    /// keep the norm and remove one inversion.
    fn fold_measure(&self, v: Weight) -> (i64, usize) {
        let inversions = self.rs.positive_roots.iter().filter(|r| r.pair(v) < 0).count();
        (self.rs.scaled_norm(v), inversions)
    }
}

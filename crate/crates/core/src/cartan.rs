//! Root systems of the rank-2 simple Lie algebras in fundamental-weight
//! coordinates.
//!
//! Labels follow Bourbaki: node 1 is the short simple root for C2 and G2, so
//! `ω1` of G2 is the 7-dimensional representation and `level(ω2) = 2`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AlgebraType {
    A2,
    C2,
    G2,
}

impl AlgebraType {
    pub const ALL: [AlgebraType; 3] = [AlgebraType::A2, AlgebraType::C2, AlgebraType::G2];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraType::A2 => "A2",
            AlgebraType::C2 => "C2",
            AlgebraType::G2 => "G2",
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    /// Accepts `a2`, `c2`, `g2` case-insensitively. `b2` is the isomorphic
    /// algebra and resolves to C2.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a2" => Ok(AlgebraType::A2),
            "c2" | "b2" => Ok(AlgebraType::C2),
            "g2" => Ok(AlgebraType::G2),
            _ => Err(Error::UnknownAlgebra(s.to_string())),
        }
    }
}

/// A weight `a·ω1 + b·ω2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };
    pub const RHO: Weight = Weight { a: 1, b: 1 };
    pub const OMEGA1: Weight = Weight { a: 1, b: 0 };
    pub const OMEGA2: Weight = Weight { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn coord(self, i: usize) -> i64 {
        match i {
            0 => self.a,
            1 => self.b,
            _ => panic!("simple root index {i} out of range"),
        }
    }

    /// Label used by the human-readable output, e.g. `2·ω1+1·ω2`.
    pub fn pretty(self) -> String {
        format!("{}·ω1+{}·ω2", self.a, self.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.a, self * w.b)
    }
}

/// Integer 2×2 matrix acting on column vectors of ω-coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylMatrix(pub [[i64; 2]; 2]);

impl WeylMatrix {
    pub const IDENTITY: WeylMatrix = WeylMatrix([[1, 0], [0, 1]]);

    pub fn apply(&self, w: Weight) -> Weight {
        let m = &self.0;
        Weight::new(m[0][0] * w.a + m[0][1] * w.b, m[1][0] * w.a + m[1][1] * w.b)
    }

    pub fn compose(&self, other: &WeylMatrix) -> WeylMatrix {
        let (a, b) = (&self.0, &other.0);
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        WeylMatrix(out)
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: WeylMatrix,
    pub sign: i64,
}

/// A positive root with its expansions in the simple roots and in the simple
/// coroots. `coroot` gives `⟨λ, α∨⟩ = coroot[0]·a + coroot[1]·b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositiveRoot {
    pub weight: Weight,
    pub root_coords: [i64; 2],
    pub coroot: [i64; 2],
}

impl PositiveRoot {
    pub fn pair(&self, w: Weight) -> i64 {
        self.coroot[0] * w.a + self.coroot[1] * w.b
    }

    pub fn height(&self) -> i64 {
        self.root_coords[0] + self.root_coords[1]
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub algebra: AlgebraType,
    /// `cartan_matrix[i][j] = ⟨αj, αi∨⟩`.
    pub cartan_matrix: [[i64; 2]; 2],
    /// Half squared lengths of the simple roots, short root normalized to 1.
    pub root_half_norms: [i64; 2],
    pub simple_roots: [Weight; 2],
    pub positive_roots: Vec<PositiveRoot>,
    pub highest_root: Weight,
    pub comarks: [i64; 2],
    pub rho: Weight,
    pub dual_coxeter: i64,
    pub weyl_elements: Vec<WeylElement>,
    pub longest_element_index: usize,
}

impl RootSystem {
    pub fn new(algebra: AlgebraType) -> RootSystem {
        let (cartan_matrix, root_half_norms) = match algebra {
            AlgebraType::A2 => ([[2, -1], [-1, 2]], [1, 1]),
            AlgebraType::C2 => ([[2, -2], [-1, 2]], [1, 2]),
            AlgebraType::G2 => ([[2, -3], [-1, 2]], [1, 3]),
        };
        let c = cartan_matrix;
        let simple_roots = [Weight::new(c[0][0], c[1][0]), Weight::new(c[0][1], c[1][1])];

        let reflections = [
            WeylMatrix([[-1, 0], [-c[1][0], 1]]),
            WeylMatrix([[1, -c[0][1]], [0, -1]]),
        ];
        let weyl_elements = close_group(&reflections);

        let mut rs = RootSystem {
            algebra,
            cartan_matrix,
            root_half_norms,
            simple_roots,
            positive_roots: Vec::new(),
            highest_root: Weight::ZERO,
            comarks: [0, 0],
            rho: Weight::RHO,
            dual_coxeter: 0,
            weyl_elements,
            longest_element_index: 0,
        };

        let roots = rs.orbit_closure(&simple_roots);
        let mut positive: Vec<PositiveRoot> = roots
            .into_iter()
            .filter_map(|w| {
                let coords = rs.root_coordinates(w)?;
                (coords[0] >= 0 && coords[1] >= 0).then(|| rs.make_positive_root(w, coords))
            })
            .collect();
        positive.sort_by_key(|r| (r.height(), r.root_coords));
        let top = *positive.last().expect("root system has positive roots");
        rs.highest_root = top.weight;
        rs.comarks = top.coroot;
        rs.positive_roots = positive;
        rs.dual_coxeter = 1 + rs.level(Weight::RHO);
        rs.longest_element_index = rs
            .weyl_elements
            .iter()
            .position(|e| e.matrix.apply(Weight::RHO) == -Weight::RHO)
            .expect("longest element exists");
        rs
    }

    /// All images of `seeds` under the Weyl group.
    fn orbit_closure(&self, seeds: &[Weight]) -> Vec<Weight> {
        let mut out: Vec<Weight> = Vec::new();
        for e in &self.weyl_elements {
            for s in seeds {
                let w = e.matrix.apply(*s);
                if !out.contains(&w) {
                    out.push(w);
                }
            }
        }
        out
    }

    /// Expansion of a root lattice element in the simple roots, or `None` if
    /// it does not lie in the root lattice.
    pub fn root_coordinates(&self, w: Weight) -> Option<[i64; 2]> {
        // ω-coords = C · (root coords); invert the 2×2 integer matrix.
        let c = &self.cartan_matrix;
        let det = c[0][0] * c[1][1] - c[0][1] * c[1][0];
        let n0 = c[1][1] * w.a - c[0][1] * w.b;
        let n1 = -c[1][0] * w.a + c[0][0] * w.b;
        (n0 % det == 0 && n1 % det == 0).then(|| [n0 / det, n1 / det])
    }

    fn make_positive_root(&self, weight: Weight, root_coords: [i64; 2]) -> PositiveRoot {
        let half_norm = self.inner_root(root_coords, root_coords) / 2;
        let d = self.root_half_norms;
        let coroot = [
            root_coords[0] * d[0] / half_norm,
            root_coords[1] * d[1] / half_norm,
        ];
        debug_assert_eq!(coroot[0] * half_norm, root_coords[0] * d[0]);
        debug_assert_eq!(coroot[1] * half_norm, root_coords[1] * d[1]);
        PositiveRoot { weight, root_coords, coroot }
    }

    /// `(α, β)` for root-lattice elements given in simple-root coordinates.
    fn inner_root(&self, x: [i64; 2], y: [i64; 2]) -> i64 {
        let c = &self.cartan_matrix;
        let d = &self.root_half_norms;
        let mut s = 0;
        for i in 0..2 {
            for j in 0..2 {
                // (αi, αj) = ⟨αi, αj∨⟩ (αj, αj)/2
                s += x[i] * y[j] * c[j][i] * d[j];
            }
        }
        s
    }

    /// The Weyl-invariant form on weights, scaled by `det(C)` so that it is
    /// integral: `(ωi, ωj) = d_i (C⁻¹)_{ij}`.
    pub fn scaled_inner(&self, x: Weight, y: Weight) -> i64 {
        let c = &self.cartan_matrix;
        let d = &self.root_half_norms;
        let adj = [[c[1][1], -c[0][1]], [-c[1][0], c[0][0]]];
        let (xv, yv) = ([x.a, x.b], [y.a, y.b]);
        let mut s = 0;
        for i in 0..2 {
            for j in 0..2 {
                s += xv[i] * yv[j] * d[i] * adj[i][j];
            }
        }
        s
    }

    pub fn scaled_norm(&self, w: Weight) -> i64 {
        self.scaled_inner(w, w)
    }

    /// Unshifted simple reflection `s_i λ = λ − ⟨λ, αi∨⟩ αi`, `i ∈ {0, 1}`.
    pub fn reflect(&self, i: usize, w: Weight) -> Weight {
        w - w.coord(i) * self.simple_roots[i]
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.weyl_elements[self.longest_element_index]
    }

    /// `λ* = −w0(λ)`.
    pub fn dual_weight(&self, w: Weight) -> Weight {
        -self.longest_element().matrix.apply(w)
    }

    pub fn level(&self, w: Weight) -> i64 {
        self.comarks[0] * w.a + self.comarks[1] * w.b
    }

    pub fn weyl_dimension(&self, w: Weight) -> Result<u64> {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w));
        }
        let shifted = w + self.rho;
        let (mut num, mut den) = (1u128, 1u128);
        for r in &self.positive_roots {
            num *= r.pair(shifted) as u128;
            den *= r.pair(self.rho) as u128;
        }
        debug_assert_eq!(num % den, 0);
        Ok((num / den) as u64)
    }

    /// Finite Weyl group representative in the dominant chamber.
    pub fn dominant_representative(&self, mut w: Weight) -> Weight {
        loop {
            if w.a < 0 {
                w = self.reflect(0, w);
            } else if w.b < 0 {
                w = self.reflect(1, w);
            } else {
                return w;
            }
        }
    }
}

fn close_group(generators: &[WeylMatrix]) -> Vec<WeylElement> {
    let mut out = vec![WeylElement { matrix: WeylMatrix::IDENTITY, sign: 1 }];
    let mut queue: VecDeque<WeylMatrix> = VecDeque::from([WeylMatrix::IDENTITY]);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let next = m.compose(g);
            if out.iter().all(|e| e.matrix != next) {
                out.push(WeylElement { matrix: next, sign: next.det() });
                queue.push_back(next);
            }
        }
    }
    out
}

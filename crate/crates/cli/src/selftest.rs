use std::fs;
use std::path::Path;

use rank2_fusion::fusion::cache::{self, TableFile};
use rank2_fusion::{Alcove, AlgebraType, FusionTable, RepRing, RootSystem, Weight};

/// One failed property with the indices that exhibit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub algebra: AlgebraType,
    pub level: i64,
    pub property: &'static str,
    pub witness: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FAIL {} k={} {}: {}", self.algebra, self.level, self.property, self.witness)
    }
}

pub struct Summary {
    pub lines: Vec<String>,
    pub failures: Vec<Failure>,
}

pub fn run(max_level: i64, cache_dir: Option<&Path>) -> Summary {
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for alg in AlgebraType::ALL {
        let rs = RootSystem::new(alg);
        let rep = RepRing::new(&rs);
        for k in 0..=max_level {
            let alc = Alcove::new(&rs, k).expect("level is non-negative");
            let fresh = FusionTable::with_rep_ring(&alc, &rep);
            let mut fail = |property: &'static str, witness: String| {
                failures.push(Failure { algebra: alg, level: k, property, witness })
            };
            let table = match cache_dir {
                None => fresh.clone(),
                Some(dir) => match cached(dir, &rep, &fresh) {
                    Ok(t) => t,
                    Err(why) => {
                        fail("cache", why);
                        continue;
                    }
                },
            };
            let before = failures.len();
            for (property, witness) in ring_properties(&table) {
                failures.push(Failure { algebra: alg, level: k, property, witness });
            }
            if cache_dir.is_some() {
                if let Some((i, j, l)) = first_difference(&table, &fresh) {
                    failures.push(Failure {
                        algebra: alg,
                        level: k,
                        property: "cache round trip",
                        witness: format!(
                            "({i},{j},{l}): cached {} but recomputed {}",
                            table.get(i, j, l),
                            fresh.get(i, j, l)
                        ),
                    });
                }
            }
            if failures.len() == before {
                lines.push(format!("ok   {alg} k={k}: {} basis elements", table.len()));
            }
        }
        let mut dims = 0;
        for a in 0..=max_level {
            for b in 0..=max_level {
                let w = Weight::new(a, b);
                if rs.level(w) > max_level {
                    continue;
                }
                let dim = rs.weyl_dimension(w).expect("dominant weight");
                let x = rs.weyl_dimension(Weight::OMEGA1).expect("dominant weight").into();
                let y = rs.weyl_dimension(Weight::OMEGA2).expect("dominant weight").into();
                let value = rep.char_poly(w).expect("dominant weight").eval(&x, &y);
                if value != dim.into() {
                    failures.push(Failure {
                        algebra: alg,
                        level: rs.level(w),
                        property: "dimension homomorphism",
                        witness: format!("λ={w}: χ = {value}, dim = {dim}"),
                    });
                }
                dims += 1;
            }
        }
        lines.push(format!("ok   {alg} dimension homomorphism on {dims} weights"));
    }
    Summary { lines, failures }
}

/// Reads the cached table, writing a fresh one when the file is missing or
/// keyed for another code version. Unreadable files are reported.
fn cached(dir: &Path, rep: &RepRing, fresh: &FusionTable) -> Result<FusionTable, String> {
    let (alg, k) = (fresh.algebra(), fresh.level());
    let path = cache::cache_path(dir, alg, k);
    let store = || {
        cache::write_atomic(&path, &TableFile::from_table(fresh).to_json())
            .map(|()| fresh.clone())
            .map_err(|e| e.to_string())
    };
    let Ok(text) = fs::read_to_string(&path) else {
        return store();
    };
    let file = TableFile::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if file.key_hash != cache::key_hash(alg, k) {
        return store();
    }
    file.into_table(rep).map_err(|e| format!("{}: {e}", path.display()))
}

fn first_difference(a: &FusionTable, b: &FusionTable) -> Option<(usize, usize, usize)> {
    let n = a.len();
    (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |l| (i, j, l))))
        .find(|&(i, j, l)| a.get(i, j, l) != b.get(i, j, l))
}

/// Nonnegativity, commutativity, unit, associativity, duality, Gram matrix and
/// the Frobenius identity; at most one witness per property.
fn ring_properties(t: &FusionTable) -> Vec<(&'static str, String)> {
    let n = t.len();
    let triples = || (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |l| (i, j, l))));
    let mut out = Vec::new();
    if let Some((i, j, l)) = triples().find(|&(i, j, l)| t.get(i, j, l) < 0) {
        out.push(("nonnegativity", format!("({i},{j},{l}): N = {}", t.get(i, j, l))));
    }
    if let Some((i, j, l)) = triples().find(|&(i, j, l)| t.get(i, j, l) != t.get(j, i, l)) {
        out.push(("commutativity", format!("({i},{j},{l}): {} vs {}", t.get(i, j, l), t.get(j, i, l))));
    }
    if let Some((_, j, l)) = triples().find(|&(i, j, l)| i == 0 && t.get(0, j, l) != i64::from(j == l)) {
        out.push(("unit", format!("(0,{j},{l}): N = {}", t.get(0, j, l))));
    }
    let assoc = triples().flat_map(|(i, j, l)| (0..n).map(move |m| (i, j, l, m))).find(|&(i, j, l, m)| {
        let lhs: i64 = (0..n).map(|s| t.get(i, j, s) * t.get(s, l, m)).sum();
        let rhs: i64 = (0..n).map(|s| t.get(j, l, s) * t.get(i, s, m)).sum();
        lhs != rhs
    });
    if let Some((i, j, l, m)) = assoc {
        out.push(("associativity", format!("([{i}]·[{j}])·[{l}] and [{i}]·([{j}]·[{l}]) differ at [{m}]")));
    }
    let d = |i| t.dual_index(i);
    if let Some((i, j, l)) = triples().find(|&(i, j, l)| t.get(i, j, l) != t.get(d(i), d(j), d(l))) {
        out.push(("duality", format!("({i},{j},{l}): N = {} but dual N = {}", t.get(i, j, l), t.get(d(i), d(j), d(l)))));
    }
    if !t.gram_is_identity() {
        let g = t.gram_matrix();
        let (i, j) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| g[i][j] != i64::from(i == j))
            .expect("some entry differs");
        out.push(("gram matrix", format!("({i},{j}): {}", g[i][j])));
    }
    if let Err(v) = t.check_frobenius() {
        out.push(("frobenius identity", format!("(λ, ν, μ) = ({}, {}, {})", v.lambda, v.nu, v.mu)));
    }
    out
}

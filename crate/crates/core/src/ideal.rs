//! Certificates that a set of polynomials generates the fusion ideal `I_k`,
//! complete-intersection reports, and a brute-force search for
//! two-element generating sets in type G2.
//!
//! A generator set `J` is certified without ever constructing `I_k`:
//!
//! * step A: every generator evaluates to zero in the fusion ring, so `J ⊆ I_k`;
//! * step B: a strong Gröbner basis of `J` over `Z` has unit leading
//!   coefficients and exactly `|P_k|` standard monomials, so `R/J` is free of
//!   rank `|P_k|`.
//!
//! `R/I_k` is free of the same rank, and a surjection between free abelian
//! groups of equal finite rank is an isomorphism, hence `J = I_k`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::alcove::{Alcove, FoldResult};
use crate::cartan::{AlgebraType, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::fusion::FusionTable;
use crate::poly::{IntPolynomial, Monomial, Staircase, StrongGB};
use crate::repring::RepRing;

pub const SOUNDNESS_ARGUMENT: &str = "Step A: every generator maps to zero in the fusion ring F_k, so the ideal J they generate is contained in the fusion ideal I_k. Step B: the strong Groebner basis of J over Z has a finite staircase of size n = |P_k|, and either every leading coefficient is a unit (so the standard monomials are a Z-basis of R/J) or the relations at the non-unit corners of the staircase have trivial Smith invariants; either way R/J is a free Z-module of rank n. Since R/I_k = F_k is free of rank n, the induced surjection R/J -> R/I_k is a surjection of free Z-modules of the same finite rank, hence an isomorphism, and J = I_k.";

pub const REGULAR_SEQUENCE_ARGUMENT: &str = "R = Z[X,Y] is regular of dimension 3 and R/I_k is finite over Z of dimension 1, so I_k has codimension 2. R is Cohen-Macaulay, and an ideal of codimension 2 generated by 2 elements in a Cohen-Macaulay ring is generated by a regular sequence, so the two certified generators form an R-regular sequence and R/I_k is a complete intersection.";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// Step A: the generator at this index is not in `I_k`.
    NotInIdeal { generator: usize },
    /// Step B: `R/J` has torsion.
    Torsion,
    /// Step B: `R/J` has infinite rank.
    InfiniteStaircase,
    /// Step B: finite rank, but `R/J` is not finitely generated over `Z`.
    NotFinitelyGenerated,
    /// Step B: free of the wrong rank.
    RankMismatch { rank: usize, expected: usize },
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FailureReason::NotInIdeal { generator } => {
                write!(f, "generator {generator} does not vanish in the fusion ring")
            }
            FailureReason::Torsion => f.write_str("quotient has torsion"),
            FailureReason::InfiniteStaircase => f.write_str("quotient has infinite rank"),
            FailureReason::NotFinitelyGenerated => f.write_str("quotient is not finitely generated over Z"),
            FailureReason::RankMismatch { rank, expected } => {
                write!(f, "quotient has rank {rank}, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Failed(FailureReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationCertificate {
    pub algebra: AlgebraType,
    pub level: i64,
    pub generators: Vec<IntPolynomial>,
    /// Image of each generator in the fusion ring (alcove basis).
    pub evaluation_witnesses: Vec<Vec<BigInt>>,
    /// Strong Gröbner basis of the generators; not computed when step A fails.
    pub gb: Option<StrongGB>,
    pub rank: Option<usize>,
    pub alcove_size: usize,
    pub verdict: Verdict,
}

impl PresentationCertificate {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn to_file(&self) -> CertificateFile {
        let (verdict, failure) = match &self.verdict {
            Verdict::Verified => ("Verified".to_string(), None),
            Verdict::Failed(r) => ("Failed".to_string(), Some(r.to_string())),
        };
        CertificateFile {
            algebra: self.algebra,
            level: self.level,
            generators: self.generators.iter().map(ToString::to_string).collect(),
            evaluation_witnesses: self
                .evaluation_witnesses
                .iter()
                .map(|v| v.iter().map(ToString::to_string).collect())
                .collect(),
            groebner_basis: self.gb.as_ref().map(|gb| gb.generators.iter().map(ToString::to_string).collect()),
            unit_leading: self.gb.as_ref().map(|gb| gb.unit_leading),
            torsion_free: self.gb.as_ref().and_then(StrongGB::torsion_free),
            staircase: match self.gb.as_ref().map(|gb| &gb.staircase) {
                Some(Staircase::Finite(ms)) => Some(ms.iter().map(Monomial::to_string).collect()),
                _ => None,
            },
            rank: self.rank,
            alcove_size: self.alcove_size,
            verdict,
            failure_reason: failure,
            soundness_argument: SOUNDNESS_ARGUMENT.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }
}

/// Serialized certificate. Field order and contents are fixed, so equal
/// inputs give byte-identical files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub algebra: AlgebraType,
    pub level: i64,
    pub generators: Vec<String>,
    pub evaluation_witnesses: Vec<Vec<String>>,
    /// Absent when a generator does not vanish in the fusion ring.
    pub groebner_basis: Option<Vec<String>>,
    pub unit_leading: Option<bool>,
    pub torsion_free: Option<bool>,
    pub staircase: Option<Vec<String>>,
    pub rank: Option<usize>,
    pub alcove_size: usize,
    pub verdict: String,
    pub failure_reason: Option<String>,
    pub soundness_argument: String,
}

impl CertificateFile {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CIReport {
    pub certificate: PresentationCertificate,
    pub regular_sequence: bool,
    pub argument: &'static str,
}

/// `χ_λ` or `χ_λ − sign·χ_{fold(λ)}` for a dominant weight above the alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalElement {
    pub weight: Weight,
    pub fold: FoldResult,
    pub poly: IntPolynomial,
}

/// Outcome of [`FusionIdeal::search_two_generators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub level: i64,
    pub bound: i64,
    pub base_generators: Vec<IntPolynomial>,
    pub auxiliary: Vec<IntPolynomial>,
    pub candidate_count: usize,
    pub examined: usize,
    pub found: Option<(IntPolynomial, IntPolynomial)>,
    pub certificate: Option<PresentationCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReportFile {
    pub algebra: AlgebraType,
    pub level: i64,
    pub bound: i64,
    pub enumeration: String,
    pub base_generators: Vec<String>,
    pub auxiliary: Vec<String>,
    pub candidate_count: usize,
    pub examined: usize,
    pub status: String,
    pub pair: Option<[String; 2]>,
    pub rank: Option<usize>,
}

pub const SEARCH_ORDER: &str = "pairs (g_i, g_j) with i < j in lexicographic order; for each pair, p = g_i + a*h_s then q = g_j + b*h_t where each offset runs over [none] followed by (s ascending, a from -bound to bound skipping 0); q varies fastest";

impl SearchReport {
    pub fn to_file(&self) -> SearchReportFile {
        SearchReportFile {
            algebra: AlgebraType::G2,
            level: self.level,
            bound: self.bound,
            enumeration: SEARCH_ORDER.to_string(),
            base_generators: self.base_generators.iter().map(ToString::to_string).collect(),
            auxiliary: self.auxiliary.iter().map(ToString::to_string).collect(),
            candidate_count: self.candidate_count,
            examined: self.examined,
            status: if self.found.is_some() { "found" } else { "exhausted" }.to_string(),
            pair: self.found.as_ref().map(|(p, q)| [p.to_string(), q.to_string()]),
            rank: self.certificate.as_ref().and_then(|c| c.rank),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Weights appearing in the known generators: each generator is the sum of
/// the characters of the listed weights.
///
/// A2 and C2: `[(k+1)ω1]`, `[kω1 + ω2]`. G2, k even:
/// `[(k+2)/2 ω2] + [k/2 ω2]`, `[ω1 + k/2 ω2]`, `[3ω1 + (k−2)/2 ω2]`;
/// k odd: `[(k+1)/2 ω2]`, `[2ω1 + (k−1)/2 ω2]`,
/// `[3ω1 + (k−1)/2 ω2] + [3ω1 + (k−3)/2 ω2]`.
pub fn known_generator_weights(algebra: AlgebraType, k: i64) -> Result<Vec<Vec<Weight>>> {
    let out_of_range = |reason: &str| Error::LevelOutOfRange { algebra, level: k, reason: reason.to_string() };
    if k < 1 {
        return Err(out_of_range("formulas need k >= 1"));
    }
    let gens = match algebra {
        AlgebraType::A2 | AlgebraType::C2 => vec![vec![Weight::new(k + 1, 0)], vec![Weight::new(k, 1)]],
        AlgebraType::G2 if k % 2 == 0 => vec![
            vec![Weight::new(0, (k + 2) / 2), Weight::new(0, k / 2)],
            vec![Weight::new(1, k / 2)],
            vec![Weight::new(3, (k - 2) / 2)],
        ],
        AlgebraType::G2 => vec![
            vec![Weight::new(0, (k + 1) / 2)],
            vec![Weight::new(2, (k - 1) / 2)],
            vec![Weight::new(3, (k - 1) / 2), Weight::new(3, (k - 3) / 2)],
        ],
    };
    if gens.iter().flatten().any(|w| !w.is_dominant()) {
        return Err(out_of_range("a generator weight has a negative coefficient"));
    }
    Ok(gens)
}

/// A fusion ring together with the representation ring it is a quotient of.
#[derive(Debug)]
pub struct FusionIdeal {
    rep: RepRing,
    table: FusionTable,
}

impl FusionIdeal {
    pub fn new(algebra: AlgebraType, k: i64) -> Result<FusionIdeal> {
        let rep = RepRing::new(&RootSystem::new(algebra));
        let alc = Alcove::new(rep.root_system(), k)?;
        let table = FusionTable::with_rep_ring(&alc, &rep);
        Ok(FusionIdeal { rep, table })
    }

    pub fn from_table(table: FusionTable) -> FusionIdeal {
        FusionIdeal { rep: RepRing::new(table.alcove().root_system()), table }
    }

    pub fn table(&self) -> &FusionTable {
        &self.table
    }

    pub fn rep_ring(&self) -> &RepRing {
        &self.rep
    }

    pub fn algebra(&self) -> AlgebraType {
        self.table.algebra()
    }

    pub fn level(&self) -> i64 {
        self.table.level()
    }

    fn character_sum(&self, weights: &[Weight]) -> Result<IntPolynomial> {
        let mut acc = IntPolynomial::zero();
        for &w in weights {
            acc = &acc + &self.rep.char_poly(w)?;
        }
        Ok(acc)
    }

    pub fn known_generators(&self) -> Result<Vec<IntPolynomial>> {
        known_generator_weights(self.algebra(), self.level())?
            .iter()
            .map(|ws| self.character_sum(ws))
            .collect()
    }

    pub fn verify_presentation(&self, gens: &[IntPolynomial]) -> Result<PresentationCertificate> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let n = self.table.len();
        let images: Vec<_> = gens.iter().map(|g| self.table.evaluate_poly(g)).collect();
        let failed_generator = images.iter().position(|e| !e.is_zero());
        let gb = match failed_generator {
            Some(_) => None,
            None => Some(match StrongGB::new(gens) {
                Ok(gb) => gb,
                Err(Error::ZeroGenerators) => {
                    StrongGB { generators: Vec::new(), staircase: Staircase::Infinite, unit_leading: true }
                }
                Err(e) => return Err(e),
            }),
        };
        let rank = gb.as_ref().and_then(StrongGB::rank);
        let verdict = if let Some(generator) = failed_generator {
            Verdict::Failed(FailureReason::NotInIdeal { generator })
        } else {
            let gb = gb.as_ref().expect("computed when step A passes");
            match (rank, gb.torsion_free()) {
                (None, _) => Verdict::Failed(FailureReason::InfiniteStaircase),
                (_, None) => Verdict::Failed(FailureReason::NotFinitelyGenerated),
                (_, Some(false)) => Verdict::Failed(FailureReason::Torsion),
                (Some(r), _) if r != n => Verdict::Failed(FailureReason::RankMismatch { rank: r, expected: n }),
                _ => Verdict::Verified,
            }
        };
        Ok(PresentationCertificate {
            algebra: self.algebra(),
            level: self.level(),
            generators: gens.to_vec(),
            evaluation_witnesses: images.into_iter().map(|e| e.coeffs).collect(),
            gb,
            rank,
            alcove_size: n,
            verdict,
        })
    }

    /// `[λ] − det(w)[w.λ]` for every dominant `λ` with
    /// `k < level(λ) ≤ level_bound`, in canonical (level, lexicographic) order.
    pub fn natural_ideal_elements(&self, level_bound: i64) -> Result<Vec<NaturalElement>> {
        let k = self.level();
        if level_bound <= k {
            return Err(Error::LevelOutOfRange {
                algebra: self.algebra(),
                level: level_bound,
                reason: format!("level bound must exceed k = {k}"),
            });
        }
        let rs = self.rep.root_system();
        let mut weights: Vec<Weight> = (0..=level_bound)
            .flat_map(|a| (0..=level_bound).map(move |b| Weight::new(a, b)))
            .filter(|&w| (k + 1..=level_bound).contains(&rs.level(w)))
            .collect();
        weights.sort_by_key(|&w| (rs.level(w), w));
        weights
            .into_iter()
            .map(|weight| {
                let fold = self.table.alcove().fold(weight);
                let chi = self.rep.char_poly(weight)?;
                let poly = match fold {
                    FoldResult::Wall => chi,
                    FoldResult::Interior { weight: nu, sign } => {
                        &chi - &self.rep.char_poly(nu)?.scale(&BigInt::from(sign))
                    }
                };
                Ok(NaturalElement { weight, fold, poly })
            })
            .collect()
    }

    pub fn certify_complete_intersection(&self, p: &IntPolynomial, q: &IntPolynomial) -> CIReport {
        let certificate = self
            .verify_presentation(&[p.clone(), q.clone()])
            .expect("two generators are never empty");
        let regular_sequence = certificate.is_verified();
        CIReport { certificate, regular_sequence, argument: REGULAR_SEQUENCE_ARGUMENT }
    }

    /// Gram matrix of the pairing is the identity and the Frobenius identity
    /// holds on all basis triples.
    pub fn gorenstein_duality_check(&self) -> bool {
        self.table.gram_is_identity() && self.table.check_frobenius().is_ok()
    }

    /// Searches G2 for two generators of `I_k` among perturbations
    /// `(g_i + a·h_s, g_j + b·h_t)` of pairs of known G2 generators, where
    /// `h` ranges over the known generators and the natural ideal elements
    /// of level `k + 1`, and `a, b ∈ [−bound, bound]`. The enumeration order
    /// is [`SEARCH_ORDER`]; the first verified candidate is returned.
    ///
    /// At levels without a known generating set (`k < 2`) the candidate set
    /// is empty.
    pub fn search_two_generators(&self, bound: i64) -> Result<SearchReport> {
        if self.algebra() != AlgebraType::G2 {
            return Err(Error::NotG2(self.algebra()));
        }
        if bound < 0 {
            return Err(Error::InvalidBound(bound));
        }
        let base = match self.known_generators() {
            Ok(g) => g,
            Err(Error::LevelOutOfRange { .. }) => Vec::new(),
            Err(e) => return Err(e),
        };
        let mut auxiliary: Vec<IntPolynomial> = Vec::new();
        if !base.is_empty() {
            let strip = self.natural_ideal_elements(self.level() + 1)?;
            for h in base.iter().cloned().chain(strip.into_iter().map(|e| e.poly)) {
                if !h.is_zero() && !auxiliary.contains(&h) {
                    auxiliary.push(h);
                }
            }
        }
        let mut offsets: Vec<Option<(usize, i64)>> = vec![None];
        for s in 0..auxiliary.len() {
            offsets.extend((-bound..=bound).filter(|&a| a != 0).map(|a| Some((s, a))));
        }
        let pairs: Vec<(usize, usize)> = (0..base.len())
            .flat_map(|i| (i + 1..base.len()).map(move |j| (i, j)))
            .collect();
        let candidate_count = pairs.len() * offsets.len() * offsets.len();

        let perturb = |g: &IntPolynomial, off: &Option<(usize, i64)>| match off {
            None => g.clone(),
            Some((s, a)) => g + &auxiliary[*s].scale(&BigInt::from(*a)),
        };
        let mut examined = 0;
        for &(i, j) in &pairs {
            for op in &offsets {
                let p = perturb(&base[i], op);
                for oq in &offsets {
                    let q = perturb(&base[j], oq);
                    examined += 1;
                    let report = self.certify_complete_intersection(&p, &q);
                    if report.regular_sequence {
                        return Ok(SearchReport {
                            level: self.level(),
                            bound,
                            base_generators: base,
                            auxiliary,
                            candidate_count,
                            examined,
                            found: Some((p, q)),
                            certificate: Some(report.certificate),
                        });
                    }
                }
            }
        }
        Ok(SearchReport {
            level: self.level(),
            bound,
            base_generators: base,
            auxiliary,
            candidate_count,
            examined,
            found: None,
            certificate: None,
        })
    }
}

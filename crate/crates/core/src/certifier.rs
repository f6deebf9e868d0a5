//! Certificates for vectors of square −1 or −2 in `R^∨ ∖ R`.
//!
//! A candidate `w = (w_1, …, w_m)` splits along the orthogonal summands;
//! every nonzero `w_i` is a dual vector of square at least `w²`. Each
//! component outside its lattice is reduced independently and the
//! certificate records that every reduction ends at a vector whose
//! coefficients are all negative.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::discriminant::{format_classes, Class, DiscriminantGroup};
use crate::error::{Error, Result};
use crate::lattice::{CompositeLattice, IrreducibleRootLattice, Kind, Lattice};
use crate::reduction::{reduce_component_with, verify_trace, ReductionTrace, TieBreak, TraceVerdict};
use crate::small_vectors::{enumerate_dual, group_into_orbits};
use crate::vector::{format_rational, int, rational_string, LatticeVector, Rational};
use crate::weyl::canonical_rep;

pub const COMPONENT_RANK_CAP: usize = 8;
pub const TOTAL_RANK_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVector {
    pub components: Vec<LatticeVector>,
    #[serde(with = "rational_string")]
    pub square: Rational,
    #[serde(serialize_with = "serialize_classes")]
    pub class: Vec<Class>,
}

fn serialize_classes<S: serde::Serializer>(c: &[Class], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_classes(c))
}

impl CandidateVector {
    /// The candidate as one global coefficient vector.
    pub fn vector(&self) -> LatticeVector {
        LatticeVector::concat(&self.components)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub candidate: CandidateVector,
    /// `(component index, trace)` for every component outside its lattice.
    pub component_traces: Vec<(usize, ReductionTrace)>,
    pub verdicts: Vec<TraceVerdict>,
    /// Every trace verifies and every endpoint coefficient is negative.
    pub conclusion: bool,
}

/// Per-kind data: dual vectors of square at least the target, grouped by
/// square, plus orbit sizes keyed by canonical representative.
struct ComponentTable {
    lattice: IrreducibleRootLattice,
    group: DiscriminantGroup,
    by_square: Vec<(Rational, Vec<LatticeVector>)>,
    orbit_sizes: HashMap<LatticeVector, usize>,
}

impl ComponentTable {
    fn build(lattice: IrreducibleRootLattice, bound: &Rational) -> Result<Self> {
        let mut grouped: BTreeMap<std::cmp::Reverse<Rational>, Vec<LatticeVector>> = BTreeMap::new();
        for s in enumerate_dual(&lattice, bound)? {
            grouped.entry(std::cmp::Reverse(s.square)).or_default().push(s.vector);
        }
        let mut orbit_sizes = HashMap::new();
        for vs in grouped.values() {
            let outside: Vec<LatticeVector> = vs.iter().filter(|v| !v.is_integral()).cloned().collect();
            for o in group_into_orbits(&lattice, &outside)? {
                orbit_sizes.insert(o.representative, o.size);
            }
        }
        Ok(ComponentTable {
            group: lattice.discriminant_group(),
            lattice,
            by_square: grouped.into_iter().map(|(k, v)| (k.0, v)).collect(),
            orbit_sizes,
        })
    }
}

/// Shared per-component tables for one composite and target.
pub struct Certifier {
    lattice: CompositeLattice,
    target: Rational,
    tables: Vec<Arc<ComponentTable>>,
}

fn check_target(target: &Rational) -> Result<()> {
    if *target != int(-1) && *target != int(-2) {
        return Err(Error::InvalidTarget(target.clone()));
    }
    Ok(())
}

fn check_caps(lattice: &CompositeLattice) -> Result<()> {
    if lattice.rank() > TOTAL_RANK_CAP {
        return Err(Error::RankCap {
            rank: lattice.rank(),
            cap: TOTAL_RANK_CAP,
        });
    }
    if let Some(c) = lattice.components().iter().find(|c| c.rank() > COMPONENT_RANK_CAP) {
        return Err(Error::RankCap {
            rank: c.rank(),
            cap: COMPONENT_RANK_CAP,
        });
    }
    Ok(())
}

impl Certifier {
    pub fn new(lattice: &CompositeLattice, target: &Rational) -> Result<Self> {
        check_target(target)?;
        check_caps(lattice)?;
        let mut cache: HashMap<(Kind, usize), Arc<ComponentTable>> = HashMap::new();
        let mut tables = Vec::new();
        for c in lattice.components() {
            let key = (c.kind(), c.rank());
            let table = match cache.get(&key) {
                Some(t) => t.clone(),
                None => {
                    let t = Arc::new(ComponentTable::build(c.clone(), target)?);
                    cache.insert(key, t.clone());
                    t
                }
            };
            tables.push(table);
        }
        Ok(Certifier {
            lattice: lattice.clone(),
            target: target.clone(),
            tables,
        })
    }

    /// All candidates in lexicographic order of their global coefficients.
    pub fn candidates(&self) -> Result<Vec<CandidateVector>> {
        let mut patterns = Vec::new();
        let mut chosen = Vec::new();
        self.square_patterns(0, Rational::zero(), &mut chosen, &mut patterns);

        let mut out = Vec::new();
        for pattern in patterns {
            let lists: Vec<Vec<LatticeVector>> = pattern
                .iter()
                .zip(&self.tables)
                .map(|(slot, t)| match slot {
                    None => vec![LatticeVector::zero(t.lattice.rank())],
                    Some(idx) => t.by_square[*idx].1.clone(),
                })
                .collect();
            let mut current = Vec::with_capacity(lists.len());
            self.expand(&lists, &mut current, &mut out)?;
        }
        out.sort_by_cached_key(CandidateVector::vector);
        Ok(out)
    }

    /// Choices of one square value (or zero) per component summing to the
    /// target; `None` marks a zero component.
    fn square_patterns(
        &self,
        index: usize,
        sum: Rational,
        chosen: &mut Vec<Option<usize>>,
        out: &mut Vec<Vec<Option<usize>>>,
    ) {
        if index == self.tables.len() {
            if sum == self.target {
                out.push(chosen.clone());
            }
            return;
        }
        chosen.push(None);
        self.square_patterns(index + 1, sum.clone(), chosen, out);
        chosen.pop();
        for (k, (square, _)) in self.tables[index].by_square.iter().enumerate() {
            let next = &sum + square;
            if next < self.target {
                break;
            }
            chosen.push(Some(k));
            self.square_patterns(index + 1, next, chosen, out);
            chosen.pop();
        }
    }

    fn expand(
        &self,
        lists: &[Vec<LatticeVector>],
        current: &mut Vec<LatticeVector>,
        out: &mut Vec<CandidateVector>,
    ) -> Result<()> {
        let i = current.len();
        if i == lists.len() {
            if let Some(c) = self.accept(current)? {
                out.push(c);
            }
            return Ok(());
        }
        for v in &lists[i] {
            current.push(v.clone());
            self.expand(lists, current, out)?;
            current.pop();
        }
        Ok(())
    }

    /// Applies the candidate conditions, asserting that lattice vectors and
    /// E8 components never accompany a glue component.
    fn accept(&self, parts: &[LatticeVector]) -> Result<Option<CandidateVector>> {
        if parts.iter().all(LatticeVector::is_integral) {
            return Ok(None);
        }
        let mut square = Rational::zero();
        let mut class = Vec::with_capacity(parts.len());
        for (p, t) in parts.iter().zip(&self.tables) {
            if !p.is_zero() && p.is_integral() {
                return Err(Error::Internal(format!(
                    "lattice vector {p} in {} accompanies a glue component",
                    t.lattice.name()
                )));
            }
            if !p.is_zero() && t.lattice.kind() == Kind::E && t.lattice.rank() == 8 {
                return Err(Error::Internal("nonzero E8 component in a candidate".into()));
            }
            let s = t.lattice.square(p)?;
            if !p.is_zero() && s < int(-2) {
                return Err(Error::Internal(format!("component {p} has square {s} below -2")));
            }
            square += s;
            class.push(t.lattice.coset_in(&t.group, p)?);
        }
        if square != self.target {
            return Err(Error::Internal(format!("candidate square {square} != target")));
        }
        Ok(Some(CandidateVector {
            components: parts.to_vec(),
            square,
            class,
        }))
    }

    /// Reduces every glue component of `w` and checks the traces.
    pub fn certify(&self, w: &CandidateVector) -> Result<Certificate> {
        if w.components.len() != self.tables.len() {
            return Err(Error::DimensionMismatch {
                expected: self.tables.len(),
                found: w.components.len(),
            });
        }
        let mut traces = Vec::new();
        let mut verdicts = Vec::new();
        for (i, (part, t)) in w.components.iter().zip(&self.tables).enumerate() {
            if part.is_zero() || part.is_integral() {
                continue;
            }
            let rep = canonical_rep(&t.lattice, part)?;
            let size = t.orbit_sizes.get(&rep).copied();
            let trace = reduce_component_with(&t.lattice, part, TieBreak::SmallestIndex, size)?;
            verdicts.push(verify_trace(&t.lattice, &trace));
            traces.push((i, trace));
        }
        let conclusion = verdicts.iter().all(|v| v.valid) && traces.iter().all(|(_, t)| t.end.all_negative());
        Ok(Certificate {
            candidate: w.clone(),
            component_traces: traces,
            verdicts,
            conclusion,
        })
    }

    pub fn lattice(&self) -> &CompositeLattice {
        &self.lattice
    }
}

/// Every candidate of the given square, sorted lexicographically.
pub fn enumerate_candidates(lattice: &CompositeLattice, target: &Rational) -> Result<Vec<CandidateVector>> {
    Certifier::new(lattice, target)?.candidates()
}

/// Certifies a single candidate.
pub fn certify(lattice: &CompositeLattice, w: &CandidateVector) -> Result<Certificate> {
    Certifier::new(lattice, &w.square)?.certify(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternCount {
    /// Component squares, `0` for zero components.
    pub squares: Vec<String>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCount {
    pub class: String,
    pub count: usize,
    pub patterns: Vec<PatternCount>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub candidate: CandidateVector,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub lattice: String,
    pub target: String,
    pub n_candidates: usize,
    pub n_certified: usize,
    pub failures: Vec<Failure>,
    pub classes: Vec<ClassCount>,
    pub total_steps: usize,
    pub max_steps: usize,
}

/// Enumerates and certifies every candidate; errors with the full report
/// if any certificate fails.
pub fn certify_all(lattice: &CompositeLattice, target: &Rational) -> Result<CertifyReport> {
    let certifier = Certifier::new(lattice, target)?;
    let candidates = certifier.candidates()?;
    let outcomes: Vec<Result<Certificate>> = candidates.par_iter().map(|c| certifier.certify(c)).collect();

    let mut failures = Vec::new();
    let mut n_certified = 0;
    let mut total_steps = 0;
    let mut max_steps = 0;
    let mut classes: BTreeMap<Vec<Class>, BTreeMap<Vec<String>, usize>> = BTreeMap::new();
    for (candidate, outcome) in candidates.iter().zip(outcomes) {
        let pattern = candidate
            .components
            .iter()
            .zip(&certifier.tables)
            .map(|(p, t)| t.lattice.square(p).map(|s| format_rational(&s)))
            .collect::<Result<Vec<_>>>()?;
        *classes
            .entry(candidate.class.clone())
            .or_default()
            .entry(pattern)
            .or_default() += 1;
        match outcome {
            Ok(cert) if cert.conclusion => {
                n_certified += 1;
                let steps: usize = cert.component_traces.iter().map(|(_, t)| t.len()).sum();
                total_steps += steps;
                max_steps = max_steps.max(steps);
            }
            Ok(cert) => failures.push(Failure {
                candidate: candidate.clone(),
                reason: cert
                    .verdicts
                    .iter()
                    .find_map(|v| v.reason)
                    .map_or("endpoint coefficient not negative".to_string(), |r| r.to_string()),
                certificate: Some(cert),
            }),
            Err(e) => failures.push(Failure {
                candidate: candidate.clone(),
                reason: e.to_string(),
                certificate: None,
            }),
        }
    }
    let report = CertifyReport {
        lattice: lattice.name(),
        target: format_rational(target),
        n_candidates: candidates.len(),
        n_certified,
        failures,
        classes: classes
            .into_iter()
            .map(|(class, patterns)| ClassCount {
                class: format_classes(&class),
                count: patterns.values().sum(),
                patterns: patterns
                    .into_iter()
                    .map(|(squares, count)| PatternCount { squares, count })
                    .collect(),
            })
            .collect(),
        total_steps,
        max_steps,
    };
    if report.failures.is_empty() {
        Ok(report)
    } else {
        Err(Error::CertificationFailure(Box::new(report)))
    }
}

//! Reflection reduction of a small dual vector to a simple-vertex dual.
//!
//! While some simple root has `w · v_j = −1`, replace `w` by
//! `w − v_j = s_j(w)`. Each step keeps the square and the discriminant class
//! and lowers the coefficient sum by exactly one. For `w ∈ L^∨ ∖ L` with
//! `w² ≥ −2` the walk stops at `v^∨` for a simple vertex `v`, whose
//! coefficients are all negative.

use std::fmt;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{IrreducibleRootLattice, Lattice};
use crate::vector::{int, LatticeVector, Rational};
use crate::weyl::{orbit, DEFAULT_ORBIT_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    SmallestIndex,
    LargestIndex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// 0-based index of the simple root subtracted.
    pub vertex: usize,
    pub vector: LatticeVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TraceJson", try_from = "TraceJson")]
pub struct ReductionTrace {
    pub lattice: String,
    pub start: LatticeVector,
    pub steps: Vec<ReductionStep>,
    pub end: LatticeVector,
    /// Label of the simple vertex `v` with `end = v^∨`.
    pub end_vertex: String,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Wire form; `j` is the 1-based vertex number.
#[derive(Serialize, Deserialize)]
struct TraceJson {
    lattice: String,
    start: LatticeVector,
    steps: Vec<StepJson>,
    end: LatticeVector,
    end_vertex: String,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    j: usize,
    vector: LatticeVector,
}

impl From<ReductionTrace> for TraceJson {
    fn from(t: ReductionTrace) -> Self {
        TraceJson {
            lattice: t.lattice,
            start: t.start,
            steps: t
                .steps
                .into_iter()
                .map(|s| StepJson {
                    j: s.vertex + 1,
                    vector: s.vector,
                })
                .collect(),
            end: t.end,
            end_vertex: t.end_vertex,
        }
    }
}

impl TryFrom<TraceJson> for ReductionTrace {
    type Error = String;

    fn try_from(t: TraceJson) -> std::result::Result<Self, String> {
        let steps = t
            .steps
            .into_iter()
            .map(|s| {
                s.j.checked_sub(1)
                    .map(|vertex| ReductionStep {
                        vertex,
                        vector: s.vector,
                    })
                    .ok_or_else(|| "step index j is 1-based".to_string())
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(ReductionTrace {
            lattice: t.lattice,
            start: t.start,
            steps,
            end: t.end,
            end_vertex: t.end_vertex,
        })
    }
}

fn validate_start(lattice: &IrreducibleRootLattice, w: &LatticeVector) -> Result<()> {
    lattice.check_in_dual(w)?;
    if w.is_integral() {
        return Err(Error::InLattice);
    }
    let square = lattice.square(w)?;
    if square < int(-2) {
        return Err(Error::OutOfScopeNorm { square });
    }
    Ok(())
}

/// Reduces with smallest-index tie-breaking; the step cap is the orbit size
/// of `w`.
pub fn reduce_component(lattice: &IrreducibleRootLattice, w: &LatticeVector) -> Result<ReductionTrace> {
    reduce_component_with(lattice, w, TieBreak::SmallestIndex, None)
}

/// As [`reduce_component`] with an explicit tie-break and, optionally, a
/// precomputed orbit size for the step cap.
pub fn reduce_component_with(
    lattice: &IrreducibleRootLattice,
    w: &LatticeVector,
    tie_break: TieBreak,
    orbit_size: Option<usize>,
) -> Result<ReductionTrace> {
    validate_start(lattice, w)?;
    let cap = match orbit_size {
        Some(size) => size,
        None => orbit(lattice, w, DEFAULT_ORBIT_CAP)?.size,
    };
    let n = lattice.rank();
    let minus_one = -Rational::one();
    let mut current = w.clone();
    let mut steps = Vec::new();
    loop {
        let mut candidates = (0..n).filter(|&j| lattice.pair_with_basis(&current, j) == minus_one);
        let next = match tie_break {
            TieBreak::SmallestIndex => candidates.next(),
            TieBreak::LargestIndex => candidates.next_back(),
        };
        let Some(j) = next else { break };
        current = current.add_basis_multiple(j, &minus_one);
        steps.push(ReductionStep {
            vertex: j,
            vector: current.clone(),
        });
        if steps.len() >= cap {
            return Err(Error::Internal(format!(
                "reduction of {w} in {} exceeded the orbit size {cap}",
                lattice.name()
            )));
        }
    }
    let end_vertex = (0..n)
        .find(|&i| lattice.dual_basis_vector(i).is_ok_and(|d| d == current))
        .ok_or_else(|| {
            Error::Internal(format!(
                "reduction of {w} in {} stopped at {current}, which is not a vertex dual",
                lattice.name()
            ))
        })?;
    Ok(ReductionTrace {
        lattice: lattice.name(),
        start: w.clone(),
        steps,
        end: current,
        end_vertex: lattice.label(end_vertex).to_string(),
    })
}

/// Why a trace failed verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceDefect {
    Malformed,
    StartNotDual,
    StartInLattice,
    PairingMismatch,
    StepMismatch,
    SumNotDecreasing,
    EndMismatch,
    SquareChanged,
    ClassChanged,
    EndNotNegative,
    NotTerminal,
    EndVertexMismatch,
}

impl TraceDefect {
    pub fn code(self) -> &'static str {
        match self {
            TraceDefect::Malformed => "malformed",
            TraceDefect::StartNotDual => "start-not-dual",
            TraceDefect::StartInLattice => "start-in-lattice",
            TraceDefect::PairingMismatch => "pairing-mismatch",
            TraceDefect::StepMismatch => "step-mismatch",
            TraceDefect::SumNotDecreasing => "sum-not-decreasing",
            TraceDefect::EndMismatch => "end-mismatch",
            TraceDefect::SquareChanged => "square-changed",
            TraceDefect::ClassChanged => "class-changed",
            TraceDefect::EndNotNegative => "end-not-negative",
            TraceDefect::NotTerminal => "not-terminal",
            TraceDefect::EndVertexMismatch => "end-vertex-mismatch",
        }
    }
}

impl fmt::Display for TraceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TraceVerdict {
    pub valid: bool,
    pub reason: Option<TraceDefect>,
}

impl TraceVerdict {
    fn ok() -> Self {
        TraceVerdict {
            valid: true,
            reason: None,
        }
    }

    fn fail(reason: TraceDefect) -> Self {
        TraceVerdict {
            valid: false,
            reason: Some(reason),
        }
    }
}

/// Re-checks a trace from scratch with the bilinear form and the dual basis
/// only.
pub fn verify_trace<L: Lattice + ?Sized>(lattice: &L, trace: &ReductionTrace) -> TraceVerdict {
    match check_trace(lattice, trace) {
        Ok(()) => TraceVerdict::ok(),
        Err(defect) => TraceVerdict::fail(defect),
    }
}

fn check_trace<L: Lattice + ?Sized>(lattice: &L, trace: &ReductionTrace) -> std::result::Result<(), TraceDefect> {
    use TraceDefect::*;
    let n = lattice.rank();
    let dims_ok = trace.start.len() == n
        && trace.end.len() == n
        && trace.steps.iter().all(|s| s.vector.len() == n && s.vertex < n);
    if !dims_ok {
        return Err(Malformed);
    }
    let root = |j: usize| LatticeVector::basis(n, j);
    let pair = |a: &LatticeVector, b: &LatticeVector| lattice.inner_product(a, b).map_err(|_| Malformed);

    for j in 0..n {
        if !pair(&trace.start, &root(j))?.is_integer() {
            return Err(StartNotDual);
        }
    }
    if trace.start.is_integral() {
        return Err(StartInLattice);
    }

    let start_square = pair(&trace.start, &trace.start)?;
    let mut prev = &trace.start;
    for step in &trace.steps {
        let vj = root(step.vertex);
        if pair(prev, &vj)? != int(-1) {
            return Err(PairingMismatch);
        }
        if step.vector != prev - &vj {
            return Err(StepMismatch);
        }
        if prev.coefficient_sum() - step.vector.coefficient_sum() != int(1) {
            return Err(SumNotDecreasing);
        }
        if pair(&step.vector, &step.vector)? != start_square {
            return Err(SquareChanged);
        }
        prev = &step.vector;
    }
    if &trace.end != prev {
        return Err(EndMismatch);
    }
    if pair(&trace.end, &trace.end)? != start_square {
        return Err(SquareChanged);
    }
    if !(&trace.start - &trace.end).is_integral() {
        return Err(ClassChanged);
    }
    if trace.end.coefficients().iter().any(|c| !c.is_negative()) {
        return Err(EndNotNegative);
    }
    for j in 0..n {
        if pair(&trace.end, &root(j))? == int(-1) {
            return Err(NotTerminal);
        }
    }
    let vertex = lattice
        .labels()
        .iter()
        .position(|l| *l == trace.end_vertex)
        .ok_or(EndVertexMismatch)?;
    match lattice.dual_basis_vector(vertex) {
        Ok(d) if d == trace.end => Ok(()),
        _ => Err(EndVertexMismatch),
    }
}

//! Short vectors of dual lattices and their Weyl orbits.
//!
//! Enumeration runs in dual coordinates `c_i = w · v_i ∈ ℤ`, where
//! `w² = cᵀ G⁻¹ c`. Completing squares in the positive definite form
//! `−G⁻¹` gives a Fincke–Pohst search tree whose every pruning test is an
//! exact rational comparison, so the result is complete.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{IrreducibleRootLattice, Lattice};
use crate::linalg;
use crate::vector::{format_rational, int, LatticeVector, Rational};
use crate::weyl::{canonical_rep, orbit_label, OrbitSummary};

pub const ENUMERATION_RANK_CAP: usize = 10;
pub const MAX_K: usize = 5;

/// A nonzero dual vector with its square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallVector {
    pub vector: LatticeVector,
    pub square: Rational,
}

/// All nonzero `v ∈ L^∨` with `bound ≤ v² < 0`, sorted by coefficients.
/// No rank cap; callers enforce their own.
pub fn enumerate_dual<L: Lattice + ?Sized>(lattice: &L, bound: &Rational) -> Result<Vec<SmallVector>> {
    if !bound.is_negative() {
        return Err(Error::InvalidBound(bound.clone()));
    }
    let n = lattice.rank();
    let positive: linalg::RatMatrix = lattice
        .inverse_gram()
        .iter()
        .map(|row| row.iter().map(|x| -x).collect())
        .collect();
    let (d, mu) = linalg::square_completion(&positive)
        .ok_or_else(|| Error::Internal("Gram matrix is not negative definite".into()))?;
    let radius = -bound.clone();
    let mut coords = vec![0i64; n];
    let mut found = Vec::new();
    search(n, &d, &mu, &radius, Rational::zero(), &mut coords, &mut found);
    let mut out: Vec<SmallVector> = found
        .into_iter()
        .filter(|(c, _)| c.iter().any(|&x| x != 0))
        .map(|(c, q)| {
            let c: Vec<Rational> = c.into_iter().map(int).collect();
            SmallVector {
                vector: lattice.from_dual_coordinates(&c),
                square: -q,
            }
        })
        .collect();
    out.sort_by(|a, b| a.vector.cmp(&b.vector));
    Ok(out)
}

/// Fixes `coords[level-1]` given `coords[level..]`, with `used` the part of
/// the form already spent.
fn search(
    level: usize,
    d: &[Rational],
    mu: &linalg::RatMatrix,
    radius: &Rational,
    used: Rational,
    coords: &mut Vec<i64>,
    found: &mut Vec<(Vec<i64>, Rational)>,
) {
    if level == 0 {
        found.push((coords.clone(), used));
        return;
    }
    let i = level - 1;
    let n = coords.len();
    let mut center = Rational::zero();
    for j in i + 1..n {
        if coords[j] != 0 {
            center -= &mu[i][j] * int(coords[j]);
        }
    }
    let room = (radius - &used) / &d[i];
    let t = center.to_f64().unwrap_or(0.0);
    let s = room.to_f64().unwrap_or(0.0).max(0.0).sqrt();
    let lo = (t - s).floor() as i64 - 1;
    let hi = (t + s).ceil() as i64 + 1;
    for c in lo..=hi {
        let off = int(c) - &center;
        let part = &d[i] * &off * &off;
        let total = &used + part;
        if &total <= radius {
            coords[i] = c;
            search(i, d, mu, radius, total, coords, found);
        }
    }
    coords[i] = 0;
}

fn check_rank(lattice: &IrreducibleRootLattice) -> Result<()> {
    if lattice.rank() > ENUMERATION_RANK_CAP {
        return Err(Error::RankCap {
            rank: lattice.rank(),
            cap: ENUMERATION_RANK_CAP,
        });
    }
    Ok(())
}

/// All nonzero `v ∈ L^∨` with `bound ≤ v² < 0`, lexicographically sorted.
pub fn enumerate_dual_up_to(lattice: &IrreducibleRootLattice, bound: &Rational) -> Result<Vec<LatticeVector>> {
    check_rank(lattice)?;
    Ok(enumerate_dual(lattice, bound)?.into_iter().map(|s| s.vector).collect())
}

/// Sort key: orbits outside the lattice first, then by dual coordinates of
/// the representative in decreasing order (so `a1^` precedes `an^`).
fn orbit_order<L: Lattice + ?Sized>(lattice: &L, o: &OrbitSummary) -> (bool, Vec<std::cmp::Reverse<Rational>>) {
    let c = lattice.basis_pairings(&o.representative);
    (
        o.representative.is_integral(),
        c.into_iter().map(std::cmp::Reverse).collect(),
    )
}

/// Groups vectors (all of one square, or a union of full orbits) into Weyl
/// orbits by canonical representative.
pub fn group_into_orbits<L: Lattice + ?Sized>(lattice: &L, vectors: &[LatticeVector]) -> Result<Vec<OrbitSummary>> {
    let mut groups: HashMap<LatticeVector, Vec<LatticeVector>> = HashMap::new();
    for v in vectors {
        groups.entry(canonical_rep(lattice, v)?).or_default().push(v.clone());
    }
    let mut orbits: Vec<OrbitSummary> = groups
        .into_iter()
        .map(|(rep, mut elements)| {
            elements.sort();
            OrbitSummary {
                generator_label: orbit_label(lattice, &rep),
                representative: rep,
                size: elements.len(),
                elements: Some(elements),
            }
        })
        .collect();
    orbits.sort_by_cached_key(|o| orbit_order(lattice, o));
    Ok(orbits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallVectorReport {
    pub lattice: String,
    pub k: usize,
    /// The k-th largest distinct value of `v²` over nonzero `v ∈ L^∨`.
    pub norm_value: Rational,
    pub orbits: Vec<OrbitSummary>,
    /// Parallel to `orbits`: whether the orbit lies outside the lattice.
    pub in_dual_minus_lattice: Vec<bool>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    lattice: &'a str,
    k: usize,
    value: String,
    orbits: Vec<OrbitJson<'a>>,
}

#[derive(Serialize)]
struct OrbitJson<'a> {
    generator: &'a str,
    size: usize,
    sample: &'a LatticeVector,
    in_dual_minus_lattice: bool,
}

impl SmallVectorReport {
    pub fn to_json(&self) -> serde_json::Value {
        let report = ReportJson {
            lattice: &self.lattice,
            k: self.k,
            value: format_rational(&self.norm_value),
            orbits: self
                .orbits
                .iter()
                .zip(&self.in_dual_minus_lattice)
                .map(|(o, &flag)| OrbitJson {
                    generator: &o.generator_label,
                    size: o.size,
                    sample: &o.representative,
                    in_dual_minus_lattice: flag,
                })
                .collect(),
        };
        serde_json::to_value(report).expect("report serializes")
    }

    pub fn generator_labels(&self) -> Vec<&str> {
        self.orbits.iter().map(|o| o.generator_label.as_str()).collect()
    }
}

/// Distinct squares of nonzero dual vectors, largest first, with their
/// vectors; enumerates until at least `k` values are known.
fn leading_values(
    lattice: &IrreducibleRootLattice,
    k: usize,
) -> Result<BTreeMap<std::cmp::Reverse<Rational>, Vec<LatticeVector>>> {
    let mut bound = int(-2);
    loop {
        let mut by_value: BTreeMap<std::cmp::Reverse<Rational>, Vec<LatticeVector>> = BTreeMap::new();
        for s in enumerate_dual(lattice, &bound)? {
            by_value.entry(std::cmp::Reverse(s.square)).or_default().push(s.vector);
        }
        if by_value.len() >= k {
            return Ok(by_value);
        }
        bound *= int(2);
    }
}

/// The k-th smallest nonzero vectors of `L^∨` (k counts distinct values of
/// `v²`, closest to zero first) split into Weyl orbits.
pub fn kth_smallest(lattice: &IrreducibleRootLattice, k: usize) -> Result<SmallVectorReport> {
    check_rank(lattice)?;
    if k == 0 || k > MAX_K {
        return Err(Error::KCap { k, max: MAX_K });
    }
    let values = leading_values(lattice, k)?;
    let (value, vectors) = values.into_iter().nth(k - 1).expect("at least k values enumerated");
    let orbits = group_into_orbits(lattice, &vectors)?;
    let flags = orbits.iter().map(|o| !o.representative.is_integral()).collect();
    Ok(SmallVectorReport {
        lattice: lattice.name(),
        k,
        norm_value: value.0,
        orbits,
        in_dual_minus_lattice: flags,
    })
}

/// Every Weyl orbit of nonzero vectors in `L^∨ ∖ L` with square `≥ −2`,
/// ordered by square (closest to zero first). Elements are retained.
pub fn in_scope_orbits(lattice: &IrreducibleRootLattice) -> Result<Vec<OrbitSummary>> {
    check_rank(lattice)?;
    let vectors: Vec<SmallVector> = enumerate_dual(lattice, &int(-2))?
        .into_iter()
        .filter(|s| !s.vector.is_integral())
        .collect();
    let mut by_value: BTreeMap<std::cmp::Reverse<Rational>, Vec<LatticeVector>> = BTreeMap::new();
    for s in vectors {
        by_value.entry(std::cmp::Reverse(s.square)).or_default().push(s.vector);
    }
    let mut out = Vec::new();
    for (_, vs) in by_value {
        out.extend(group_into_orbits(lattice, &vs)?);
    }
    Ok(out)
}

/// `(a_k^∨)² = −k(n+1−k)/(n+1)` in `A_n`, read off the inverse Gram matrix.
pub fn a_dual_square(n: usize, k: usize) -> Result<Rational> {
    let a = IrreducibleRootLattice::new(crate::lattice::Kind::A, n)?;
    let v = a.dual_basis_vector(k - 1)?;
    a.square(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Kind;
    use crate::vector::frac;

    fn lat(kind: Kind, n: usize) -> IrreducibleRootLattice {
        IrreducibleRootLattice::new(kind, n).unwrap()
    }

    #[test]
    fn a1_up_to_minus_two() {
        let v = enumerate_dual_up_to(&lat(Kind::A, 1), &int(-2)).unwrap();
        let expected: Vec<LatticeVector> = [frac(-1, 1), frac(-1, 2), frac(1, 2), frac(1, 1)]
            .into_iter()
            .map(|q| LatticeVector::new(vec![q]))
            .collect();
        assert_eq!(v, expected);
    }

    #[test]
    fn a2_minimal_vectors() {
        let l = lat(Kind::A, 2);
        let v = enumerate_dual_up_to(&l, &int(-1)).unwrap();
        assert_eq!(v.len(), 6);
        for x in &v {
            assert_eq!(l.square(x).unwrap(), frac(-2, 3));
        }
    }

    #[test]
    fn e8_has_nothing_above_minus_two() {
        assert!(enumerate_dual_up_to(&lat(Kind::E, 8), &int(-1)).unwrap().is_empty());
        assert_eq!(enumerate_dual_up_to(&lat(Kind::E, 8), &int(-2)).unwrap().len(), 240);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            enumerate_dual_up_to(&lat(Kind::A, 11), &int(-2)),
            Err(Error::RankCap { rank: 11, cap: 10 })
        ));
        assert!(matches!(
            enumerate_dual_up_to(&lat(Kind::A, 2), &int(0)),
            Err(Error::InvalidBound(_))
        ));
        assert!(matches!(kth_smallest(&lat(Kind::A, 2), 6), Err(Error::KCap { .. })));
        assert!(matches!(kth_smallest(&lat(Kind::A, 2), 0), Err(Error::KCap { .. })));
    }

    #[test]
    fn second_smallest_a3() {
        let r = kth_smallest(&lat(Kind::A, 3), 2).unwrap();
        assert_eq!(r.norm_value, int(-1));
        assert_eq!(r.generator_labels(), ["a2^"]);
        assert_eq!(r.in_dual_minus_lattice, vec![true]);
    }

    #[test]
    fn second_smallest_d8_includes_roots() {
        let r = kth_smallest(&lat(Kind::D, 8), 2).unwrap();
        assert_eq!(r.norm_value, int(-2));
        assert_eq!(r.generator_labels(), ["d7^", "d8^", "root"]);
        assert_eq!(r.in_dual_minus_lattice, vec![true, true, false]);
        let sizes: Vec<usize> = r.orbits.iter().map(|o| o.size).collect();
        assert_eq!(sizes, [128, 128, 112]);
    }

    #[test]
    fn third_and_fourth_smallest_a_series() {
        let r = kth_smallest(&lat(Kind::A, 8), 3).unwrap();
        assert_eq!(r.norm_value, int(-2));
        assert_eq!(r.generator_labels(), ["a3^", "a6^", "root"]);
        let r = kth_smallest(&lat(Kind::A, 7), 4).unwrap();
        assert_eq!(r.norm_value, int(-2));
        assert_eq!(r.generator_labels(), ["a4^", "root"]);
    }

    #[test]
    fn fifth_smallest_goes_past_minus_two() {
        let r = kth_smallest(&lat(Kind::A, 1), 5).unwrap();
        // (m + 1/2)² · (−2) and m² · (−2): −1/2, −2, −9/2, −8, −25/2
        assert_eq!(r.norm_value, frac(-25, 2));
    }

    #[test]
    fn in_scope_examples() {
        let a2 = in_scope_orbits(&lat(Kind::A, 2)).unwrap();
        let labels: Vec<&str> = a2.iter().map(|o| o.generator_label.as_str()).collect();
        assert_eq!(labels, ["a1^", "a2^"]);
        let e7 = in_scope_orbits(&lat(Kind::E, 7)).unwrap();
        assert_eq!(e7.len(), 1);
        assert_eq!(e7[0].generator_label, "e7^");
        assert_eq!(e7[0].size, 56);
        assert!(in_scope_orbits(&lat(Kind::E, 8)).unwrap().is_empty());
    }

    #[test]
    fn report_json_shape() {
        let r = kth_smallest(&lat(Kind::A, 3), 2).unwrap();
        let j = r.to_json();
        assert_eq!(j["lattice"], "A3");
        assert_eq!(j["value"], "-1");
        assert_eq!(j["orbits"][0]["generator"], "a2^");
        assert_eq!(j["orbits"][0]["size"], 6);
        assert_eq!(j["orbits"][0]["sample"][1], "-1");
    }
}

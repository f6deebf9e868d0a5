//! Discriminant groups `A_R = R^∨/R` and the class map `R^∨ → A_R`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{CompositeLattice, IrreducibleRootLattice, Kind, Lattice};
use crate::vector::{int, rational_string, LatticeVector, Rational};

/// A generator of the discriminant group: the dual of a simple vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub vertex: usize,
    pub vector: LatticeVector,
    #[serde(with = "rational_string")]
    pub square: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantGroup {
    /// `d_1 | d_2 | …`; empty for a unimodular lattice.
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<Generator>,
    /// For each simple-root index, the class of `v_i^∨`.
    #[serde(skip)]
    basis_classes: Vec<Class>,
    #[serde(skip)]
    rank: usize,
}

/// An element of `A_R` as residues against the chosen generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Class(pub Vec<u64>);

impl Class {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Representative of `q` modulo 2ℤ in `(-2, 0]`.
pub fn square_mod_two(q: &Rational) -> Rational {
    let two = int(2);
    let k = (q / &two).ceil();
    q - k * two
}

impl DiscriminantGroup {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// `Z/2 x Z/2`, `Z/5`, or `0`.
    pub fn shape(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        self.invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }

    pub fn generator_squares(&self) -> Vec<Rational> {
        self.generators.iter().map(|g| g.square.clone()).collect()
    }

    /// All group elements in mixed-radix order.
    pub fn elements(&self) -> Vec<Class> {
        let mut out = vec![Class(Vec::new())];
        for &d in &self.invariant_factors {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..d).map(move |r| {
                        let mut v = c.0.clone();
                        v.push(r);
                        Class(v)
                    })
                })
                .collect();
        }
        out
    }

    /// `Σ r_g · g` for a class given by residues.
    pub fn representative(&self, class: &Class) -> LatticeVector {
        let dim = self.rank;
        self.generators
            .iter()
            .zip(&class.0)
            .fold(LatticeVector::zero(dim), |acc, (g, &r)| {
                &acc + &g.vector.scaled(&int(r as i64))
            })
    }

    pub fn add(&self, a: &Class, b: &Class) -> Class {
        Class(
            self.invariant_factors
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(&d, (&x, &y))| (x + y) % d)
                .collect(),
        )
    }

    pub fn negate(&self, a: &Class) -> Class {
        Class(
            self.invariant_factors
                .iter()
                .zip(&a.0)
                .map(|(&d, &x)| (d - x) % d)
                .collect(),
        )
    }

    fn combine(&self, coefficients: &[BigInt]) -> Class {
        let mut acc = vec![BigInt::zero(); self.invariant_factors.len()];
        for (c, basis) in coefficients.iter().zip(&self.basis_classes) {
            for (slot, &r) in acc.iter_mut().zip(&basis.0) {
                *slot += c * BigInt::from(r);
            }
        }
        Class(
            acc.iter()
                .zip(&self.invariant_factors)
                .map(|(x, &d)| x.mod_floor(&BigInt::from(d)).to_u64().unwrap())
                .collect(),
        )
    }
}

impl IrreducibleRootLattice {
    /// Invariant factors and generators per kind: `A_n → Z/(n+1)` by `a1^`,
    /// `D_n` (even) `→ Z/2 x Z/2` by `d1^, dn^`, `D_n` (odd) `→ Z/4` by `dn^`,
    /// `E6 → Z/3` by `e6^`, `E7 → Z/2` by `e7^`, `E8 → 0`.
    pub fn discriminant_group(&self) -> DiscriminantGroup {
        let n = self.rank();
        let (factors, vertices): (Vec<u64>, Vec<usize>) = match (self.kind(), n) {
            (Kind::A, _) => (vec![n as u64 + 1], vec![0]),
            (Kind::D, _) if n.is_multiple_of(2) => (vec![2, 2], vec![0, n - 1]),
            (Kind::D, _) => (vec![4], vec![n - 1]),
            (Kind::E, 6) => (vec![3], vec![5]),
            (Kind::E, 7) => (vec![2], vec![6]),
            _ => (vec![], vec![]),
        };
        let generators: Vec<Generator> = vertices
            .iter()
            .map(|&i| {
                let vector = self.dual_basis_vector(i).expect("vertex in range");
                let square = self.square(&vector).expect("dimension matches");
                Generator {
                    label: format!("{}^", self.label(i)),
                    vertex: i,
                    vector,
                    square,
                }
            })
            .collect();
        let mut group = DiscriminantGroup {
            invariant_factors: factors,
            generators,
            basis_classes: Vec::new(),
            rank: n,
        };
        let elements = group.elements();
        let reps: Vec<LatticeVector> = elements.iter().map(|c| group.representative(c)).collect();
        let basis_classes = (0..n)
            .map(|i| {
                let dual = self.dual_basis_vector(i).expect("vertex in range");
                elements
                    .iter()
                    .zip(&reps)
                    .find(|(_, r)| (&dual - r).is_integral())
                    .map(|(c, _)| c.clone())
                    .expect("generators span the discriminant group")
            })
            .collect();
        group.basis_classes = basis_classes;
        group
    }

    /// Class of a dual vector in `A_R`; zero iff `v ∈ R`.
    pub fn coset_of(&self, v: &LatticeVector) -> Result<Class> {
        self.coset_in(&self.discriminant_group(), v)
    }

    /// As [`coset_of`](Self::coset_of), reusing a precomputed group.
    pub fn coset_in(&self, group: &DiscriminantGroup, v: &LatticeVector) -> Result<Class> {
        self.check_in_dual(v)?;
        let pairings: Vec<BigInt> = self.basis_pairings(v).into_iter().map(|p| p.to_integer()).collect();
        Ok(group.combine(&pairings))
    }
}

impl CompositeLattice {
    pub fn discriminant_groups(&self) -> Vec<DiscriminantGroup> {
        self.components()
            .iter()
            .map(IrreducibleRootLattice::discriminant_group)
            .collect()
    }

    /// Per-component classes of a dual vector.
    pub fn classes_of(&self, v: &LatticeVector) -> Result<Vec<Class>> {
        let parts = self.split(v)?;
        self.components()
            .iter()
            .zip(&parts)
            .map(|(c, p)| c.coset_of(p))
            .collect()
    }
}

/// Formats per-component classes as `1;2;0`.
pub fn format_classes(classes: &[Class]) -> String {
    classes.iter().map(Class::to_string).collect::<Vec<_>>().join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::vector::frac;

    fn lat(kind: Kind, n: usize) -> IrreducibleRootLattice {
        IrreducibleRootLattice::new(kind, n).unwrap()
    }

    #[test]
    fn a4_group() {
        let g = lat(Kind::A, 4).discriminant_group();
        assert_eq!(g.invariant_factors, vec![5]);
        assert_eq!(g.generators[0].label, "a1^");
        assert_eq!(g.generators[0].square, frac(-4, 5));
    }

    #[test]
    fn d6_group() {
        let g = lat(Kind::D, 6).discriminant_group();
        assert_eq!(g.shape(), "Z/2 x Z/2");
        let labels: Vec<&str> = g.generators.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, ["d1^", "d6^"]);
        assert_eq!(g.generator_squares(), vec![int(-1), frac(-3, 2)]);
    }

    #[test]
    fn e8_trivial() {
        let g = lat(Kind::E, 8).discriminant_group();
        assert!(g.is_trivial());
        assert_eq!(g.order(), 1);
        assert_eq!(g.shape(), "0");
        let v = LatticeVector::from_integers(&[1, 0, 0, 0, 0, 0, 0, -3]);
        assert!(lat(Kind::E, 8).coset_of(&v).unwrap().is_zero());
    }

    #[test]
    fn a2_cosets() {
        let l = lat(Kind::A, 2);
        let zero = l.coset_of(&LatticeVector::from_integers(&[1, 1])).unwrap();
        assert_eq!(zero, Class(vec![0]));
        let g = LatticeVector::new(vec![frac(-2, 3), frac(-1, 3)]);
        assert_eq!(l.coset_of(&g).unwrap(), Class(vec![1]));
        let shifted = LatticeVector::new(vec![frac(1, 3), frac(-1, 3)]);
        assert_eq!(l.coset_of(&shifted).unwrap(), Class(vec![1]));
        let bad = LatticeVector::new(vec![frac(1, 2), int(0)]);
        assert!(matches!(l.coset_of(&bad), Err(Error::NotInDual { .. })));
    }

    #[test]
    fn mod_two_reduction() {
        assert_eq!(square_mod_two(&frac(-1, 2)), frac(-1, 2));
        assert_eq!(square_mod_two(&int(-3)), int(-1));
        assert_eq!(square_mod_two(&int(-2)), int(0));
        assert_eq!(square_mod_two(&frac(-5, 2)), frac(-1, 2));
    }
}

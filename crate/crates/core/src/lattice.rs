//! Irreducible and composite ADE root lattices in the negative-definite
//! convention: simple roots have square −2, adjacent simple roots pair to 1.
//!
//! Vertex order follows the standard labelled diagrams:
//!
//! ```text
//! A_n   a1 - a2 - ... - an
//! D_n   d1 - d2 - ... - d(n-2) < d(n-1), dn
//! E_n   e2 - e3 - e4 - ... - en,  e1 attached to e4
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix, RatMatrix};
use crate::vector::{LatticeVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    D,
    E,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::D => 'D',
            Kind::E => 'E',
        }
    }

    fn label_prefix(self) -> char {
        self.letter().to_ascii_lowercase()
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Gram data shared by irreducible and composite lattices.
#[derive(Clone, Debug)]
pub struct Form {
    gram: IntMatrix,
    neighbors: Vec<Vec<usize>>,
    labels: Vec<String>,
    inverse: RatMatrix,
    abs_det: BigInt,
}

impl Form {
    fn new(gram: IntMatrix, labels: Vec<String>) -> Self {
        let n = gram.len();
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && gram[i][j] != 0).collect())
            .collect();
        let inverse = linalg::inverse(&gram).expect("root lattice Gram matrix is non-degenerate");
        let abs_det = linalg::determinant(&gram).abs();
        Form {
            gram,
            neighbors,
            labels,
            inverse,
            abs_det,
        }
    }
}

/// Operations shared by every lattice with a root-lattice Gram matrix.
pub trait Lattice {
    fn form(&self) -> &Form;

    /// Spec string, e.g. `A2+A2+E7`.
    fn name(&self) -> String;

    fn rank(&self) -> usize {
        self.form().gram.len()
    }

    fn gram(&self) -> &IntMatrix {
        &self.form().gram
    }

    fn inverse_gram(&self) -> &RatMatrix {
        &self.form().inverse
    }

    /// `|det(gram)|`, the order of the discriminant group.
    fn abs_determinant(&self) -> &BigInt {
        &self.form().abs_det
    }

    fn labels(&self) -> &[String] {
        &self.form().labels
    }

    fn label(&self, i: usize) -> &str {
        &self.form().labels[i]
    }

    fn neighbors(&self, i: usize) -> &[usize] {
        &self.form().neighbors[i]
    }

    fn check_dim(&self, v: &LatticeVector) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `v · v_i`, assuming `v` has the right length.
    fn pair_with_basis(&self, v: &LatticeVector, i: usize) -> Rational {
        let c = v.coefficients();
        let form = self.form();
        let mut acc = Rational::zero();
        for j in std::iter::once(i).chain(form.neighbors[i].iter().copied()) {
            if !c[j].is_zero() {
                acc += &c[j] * Rational::from_integer(form.gram[i][j].into());
            }
        }
        acc
    }

    /// `(v · v_1, …, v · v_n)`: coordinates of `v` in the dual basis.
    fn basis_pairings(&self, v: &LatticeVector) -> Vec<Rational> {
        (0..self.rank()).map(|i| self.pair_with_basis(v, i)).collect()
    }

    /// Exact `vᵀ G w`.
    fn inner_product(&self, v: &LatticeVector, w: &LatticeVector) -> Result<Rational> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(v.coefficients()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .fold(Rational::zero(), |acc, (i, a)| acc + a * self.pair_with_basis(w, i)))
    }

    fn square(&self, v: &LatticeVector) -> Result<Rational> {
        self.inner_product(v, v)
    }

    /// `v_i^∨`, column `i` of the inverse Gram matrix.
    fn dual_basis_vector(&self, i: usize) -> Result<LatticeVector> {
        self.check_index(i)?;
        Ok(LatticeVector::new(
            self.form().inverse.iter().map(|row| row[i].clone()).collect(),
        ))
    }

    /// The vector with dual coordinates `c`, i.e. `Σ c_i v_i^∨ = G⁻¹ c`.
    #[allow(clippy::wrong_self_convention)]
    fn from_dual_coordinates(&self, c: &[Rational]) -> LatticeVector {
        let inv = &self.form().inverse;
        LatticeVector::new(
            inv.iter()
                .map(|row| {
                    row.iter()
                        .zip(c)
                        .filter(|(_, x)| !x.is_zero())
                        .fold(Rational::zero(), |acc, (g, x)| acc + g * x)
                })
                .collect(),
        )
    }

    /// Membership in `L^∨`: all pairings with simple roots are integers.
    fn check_in_dual(&self, v: &LatticeVector) -> Result<()> {
        self.check_dim(v)?;
        for i in 0..self.rank() {
            let p = self.pair_with_basis(v, i);
            if !p.is_integer() {
                return Err(Error::NotInDual {
                    label: self.label(i).to_string(),
                    pairing: p,
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct IrreducibleRootLattice {
    kind: Kind,
    rank: usize,
    edges: Vec<(usize, usize)>,
    form: Form,
}

impl IrreducibleRootLattice {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let bound = match kind {
            Kind::A if rank < 1 => Some("A_n requires n >= 1"),
            Kind::D if rank < 4 => Some("D_n requires n >= 4"),
            Kind::E if !(6..=8).contains(&rank) => Some("E_n requires n in {6, 7, 8}"),
            _ => None,
        };
        if let Some(bound) = bound {
            return Err(Error::InvalidRank { kind, rank, bound });
        }
        let n = rank;
        let edges: Vec<(usize, usize)> = match kind {
            Kind::A => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Kind::D => (0..n - 3)
                .map(|i| (i, i + 1))
                .chain([(n - 3, n - 2), (n - 3, n - 1)])
                .collect(),
            Kind::E => (1..n - 1).map(|i| (i, i + 1)).chain([(0, 3)]).collect(),
        };
        let mut gram = vec![vec![0i64; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = -2;
        }
        for &(a, b) in &edges {
            gram[a][b] = 1;
            gram[b][a] = 1;
        }
        let labels = (1..=n).map(|i| format!("{}{}", kind.label_prefix(), i)).collect();
        Ok(IrreducibleRootLattice {
            kind,
            rank,
            edges,
            form: Form::new(gram, labels),
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Dynkin edges as 0-based vertex pairs with the smaller index first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// 0-based index of a label such as `d6` or `e1`.
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }
}

impl Lattice for IrreducibleRootLattice {
    fn form(&self) -> &Form {
        &self.form
    }

    fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }
}

/// Orthogonal direct sum `R_1 ⊕ … ⊕ R_m`; vector indices are global.
#[derive(Clone, Debug)]
pub struct CompositeLattice {
    components: Vec<IrreducibleRootLattice>,
    offsets: Vec<usize>,
    form: Form,
}

impl CompositeLattice {
    pub fn new(components: Vec<IrreducibleRootLattice>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptySpec);
        }
        let total: usize = components.iter().map(Lattice::rank).sum();
        let mut gram = vec![vec![0i64; total]; total];
        let mut offsets = Vec::with_capacity(components.len());
        let mut labels = Vec::with_capacity(total);
        let single = components.len() == 1;
        let mut offset = 0;
        for (c, comp) in components.iter().enumerate() {
            offsets.push(offset);
            for i in 0..comp.rank() {
                for j in 0..comp.rank() {
                    gram[offset + i][offset + j] = comp.gram()[i][j];
                }
                labels.push(if single {
                    comp.label(i).to_string()
                } else {
                    format!("{}:{}", c + 1, comp.label(i))
                });
            }
            offset += comp.rank();
        }
        Ok(CompositeLattice {
            components,
            offsets,
            form: Form::new(gram, labels),
        })
    }

    /// Builds from `(kind, rank)` pairs.
    pub fn from_kinds(spec: &[(Kind, usize)]) -> Result<Self> {
        let comps = spec
            .iter()
            .map(|&(k, r)| IrreducibleRootLattice::new(k, r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[IrreducibleRootLattice] {
        &self.components
    }

    pub fn offset(&self, component: usize) -> usize {
        self.offsets[component]
    }

    /// Restriction of a global vector to component `c`.
    pub fn component_slice(&self, v: &LatticeVector, c: usize) -> LatticeVector {
        v.slice(self.offsets[c], self.components[c].rank())
    }

    pub fn split(&self, v: &LatticeVector) -> Result<Vec<LatticeVector>> {
        self.check_dim(v)?;
        Ok((0..self.components.len()).map(|c| self.component_slice(v, c)).collect())
    }

    /// The single component, if irreducible.
    pub fn as_irreducible(&self) -> Option<&IrreducibleRootLattice> {
        match self.components.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }
}

impl Lattice for CompositeLattice {
    fn form(&self) -> &Form {
        &self.form
    }

    fn name(&self) -> String {
        self.components.iter().map(Lattice::name).collect::<Vec<_>>().join("+")
    }
}

/// True iff every leading principal minor of `m` alternates in sign starting
/// negative, i.e. `m` is negative definite.
pub fn is_negative_definite(m: &IntMatrix) -> bool {
    (1..=m.len()).all(|k| {
        let minor: IntMatrix = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        let d = linalg::determinant(&minor);
        if k % 2 == 1 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    })
}

impl PartialEq for IrreducibleRootLattice {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}

impl Eq for IrreducibleRootLattice {}

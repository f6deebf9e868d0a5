//! Simple reflections, roots, simple vertices and Weyl orbits.
//!
//! The canonical chamber is `{u : u · v_i ≥ 0 for all i}`. Under the
//! negative-definite convention the dual basis vectors `v_i^∨` lie in it
//! (they are the negatives of the fundamental weights), so every orbit of a
//! dual vector has a unique representative of the form `Σ c_i v_i^∨` with
//! `c_i ≥ 0`.

use std::collections::{HashSet, VecDeque};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{IrreducibleRootLattice, Lattice};
use crate::vector::{int, LatticeVector, Rational};

pub const ROOT_RANK_CAP: usize = 12;
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// Label used for the orbit of roots.
pub const ROOT_LABEL: &str = "root";

/// `s_i(w) = w + (w · v_i) v_i`.
pub fn reflect<L: Lattice + ?Sized>(lattice: &L, w: &LatticeVector, i: usize) -> Result<LatticeVector> {
    lattice.check_dim(w)?;
    lattice.check_index(i)?;
    let p = lattice.pair_with_basis(w, i);
    Ok(w.add_basis_multiple(i, &p))
}

/// All vectors of square −2, as the closure of the simple roots under the
/// simple reflections. Sorted.
pub fn all_roots<L: Lattice + ?Sized>(lattice: &L) -> Result<Vec<LatticeVector>> {
    let n = lattice.rank();
    if n > ROOT_RANK_CAP {
        return Err(Error::RankCap {
            rank: n,
            cap: ROOT_RANK_CAP,
        });
    }
    let mut seen: HashSet<LatticeVector> = HashSet::new();
    let mut queue: VecDeque<LatticeVector> = VecDeque::new();
    for i in 0..n {
        let r = LatticeVector::basis(n, i);
        if seen.insert(r.clone()) {
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let next = reflect(lattice, &r, i)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut roots: Vec<LatticeVector> = seen.into_iter().collect();
    roots.sort();
    Ok(roots)
}

/// The highest root, reached by climbing `x → x + v_i` while `x · v_i = 1`.
pub fn highest_root(lattice: &IrreducibleRootLattice) -> LatticeVector {
    let n = lattice.rank();
    let mut x = LatticeVector::basis(n, 0);
    'climb: loop {
        for i in 0..n {
            if lattice.pair_with_basis(&x, i).is_one() {
                x = x.add_basis_multiple(i, &Rational::one());
                continue 'climb;
            }
        }
        return x;
    }
}

/// Vertices whose coefficient in the highest root is 1, as 0-based indices.
pub fn simple_vertices(lattice: &IrreducibleRootLattice) -> Vec<usize> {
    let theta = highest_root(lattice);
    theta
        .coefficients()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_one())
        .map(|(i, _)| i)
        .collect()
}

/// Unique element of the Weyl orbit of `w` with `u · v_i ≥ 0` for all `i`,
/// found by reflecting at the smallest index with a negative pairing.
pub fn canonical_rep<L: Lattice + ?Sized>(lattice: &L, w: &LatticeVector) -> Result<LatticeVector> {
    lattice.check_dim(w)?;
    let n = lattice.rank();
    let mut coeffs = w.clone().into_coefficients();
    let mut pairings = lattice.basis_pairings(w);
    let gram = lattice.gram();
    while let Some(i) = (0..n).find(|&i| pairings[i].is_negative()) {
        // u + p v_i shifts the pairing with v_j by p·G_ij
        let p = pairings[i].clone();
        coeffs[i] += &p;
        for j in std::iter::once(i).chain(lattice.neighbors(i).iter().copied()) {
            pairings[j] += &p * int(gram[i][j]);
        }
    }
    Ok(LatticeVector::new(coeffs))
}

/// Weyl orbit of a dual vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    /// The canonical representative.
    pub representative: LatticeVector,
    pub size: usize,
    /// Sorted orbit elements, when retained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<LatticeVector>>,
    /// `a1^`, `d7^`, `a1^+a3^`, `2*e7^`, or `root`.
    pub generator_label: String,
}

impl OrbitSummary {
    pub fn without_elements(mut self) -> Self {
        self.elements = None;
        self
    }

    /// If the orbit is generated by a single dual basis vector, its index.
    pub fn generator_vertex<L: Lattice + ?Sized>(&self, lattice: &L) -> Option<usize> {
        let c = lattice.basis_pairings(&self.representative);
        let nonzero: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
        match nonzero.as_slice() {
            [i] if c[*i].is_one() => Some(*i),
            _ => None,
        }
    }
}

/// Generator label for a canonical representative: `root` for roots,
/// otherwise its expansion in the dual basis.
pub fn orbit_label<L: Lattice + ?Sized>(lattice: &L, rep: &LatticeVector) -> String {
    if rep.is_zero() {
        return "0".to_string();
    }
    if rep.is_integral() && lattice.square(rep).is_ok_and(|s| s == int(-2)) {
        return ROOT_LABEL.to_string();
    }
    let c = lattice.basis_pairings(rep);
    if c.iter().any(|x| !x.is_integer()) {
        return rep.to_string();
    }
    c.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| {
            if x.is_one() {
                format!("{}^", lattice.label(i))
            } else {
                format!("{}*{}^", x, lattice.label(i))
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// Breadth-first closure of `{w}` under the simple reflections.
pub fn orbit<L: Lattice + ?Sized>(lattice: &L, w: &LatticeVector, cap: usize) -> Result<OrbitSummary> {
    lattice.check_in_dual(w)?;
    let n = lattice.rank();
    let mut seen: HashSet<LatticeVector> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(u) = queue.pop_front() {
        for i in 0..n {
            if lattice.pair_with_basis(&u, i).is_zero() {
                continue;
            }
            let next = reflect(lattice, &u, i)?;
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::OrbitCapExceeded {
                        explored: seen.len(),
                        cap,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<LatticeVector> = seen.into_iter().collect();
    elements.sort();
    let representative = canonical_rep(lattice, w)?;
    if elements.binary_search(&representative).is_err() {
        return Err(Error::Internal(
            "canonical representative missing from its own orbit".into(),
        ));
    }
    let generator_label = orbit_label(lattice, &representative);
    Ok(OrbitSummary {
        size: elements.len(),
        representative,
        elements: Some(elements),
        generator_label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Kind;
    use crate::vector::frac;

    fn lat(kind: Kind, n: usize) -> IrreducibleRootLattice {
        IrreducibleRootLattice::new(kind, n).unwrap()
    }

    fn labels(l: &IrreducibleRootLattice, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| l.label(i).to_string()).collect()
    }

    #[test]
    fn reflection_examples() {
        let a2 = lat(Kind::A, 2);
        let r = reflect(&a2, &LatticeVector::from_integers(&[1, 0]), 0).unwrap();
        assert_eq!(r, LatticeVector::from_integers(&[-1, 0]));
        let r = reflect(&a2, &LatticeVector::from_integers(&[0, 1]), 0).unwrap();
        assert_eq!(r, LatticeVector::from_integers(&[1, 1]));

        let a3 = lat(Kind::A, 3);
        let d = a3.dual_basis_vector(1).unwrap();
        let r = reflect(&a3, &d, 1).unwrap();
        assert_eq!(r, LatticeVector::new(vec![frac(-1, 2), int(0), frac(-1, 2)]));
        assert!(matches!(reflect(&a3, &d, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn root_counts() {
        assert_eq!(
            all_roots(&lat(Kind::A, 1)).unwrap(),
            vec![LatticeVector::from_integers(&[-1]), LatticeVector::from_integers(&[1])]
        );
        assert_eq!(all_roots(&lat(Kind::A, 2)).unwrap().len(), 6);
        assert_eq!(all_roots(&lat(Kind::E, 7)).unwrap().len(), 126);
        let big = lat(Kind::A, 13);
        assert!(matches!(all_roots(&big), Err(Error::RankCap { rank: 13, cap: 12 })));
    }

    #[test]
    fn simple_vertex_sets() {
        let a5 = lat(Kind::A, 5);
        assert_eq!(simple_vertices(&a5), vec![0, 1, 2, 3, 4]);
        let d6 = lat(Kind::D, 6);
        assert_eq!(labels(&d6, &simple_vertices(&d6)), ["d1", "d5", "d6"]);
        let e6 = lat(Kind::E, 6);
        assert_eq!(labels(&e6, &simple_vertices(&e6)), ["e2", "e6"]);
        let e7 = lat(Kind::E, 7);
        assert_eq!(labels(&e7, &simple_vertices(&e7)), ["e7"]);
        assert!(simple_vertices(&lat(Kind::E, 8)).is_empty());
    }

    #[test]
    fn small_orbits() {
        let a2 = lat(Kind::A, 2);
        let o = orbit(&a2, &a2.dual_basis_vector(0).unwrap(), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(o.size, 3);
        assert_eq!(o.generator_label, "a1^");

        let e7 = lat(Kind::E, 7);
        let o = orbit(&e7, &e7.dual_basis_vector(6).unwrap(), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(o.size, 56);
        assert_eq!(o.generator_label, "e7^");

        let o = orbit(&e7, &LatticeVector::zero(7), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(o.size, 1);
        assert_eq!(o.elements.unwrap(), vec![LatticeVector::zero(7)]);
    }

    #[test]
    fn orbit_cap_is_reported() {
        let e7 = lat(Kind::E, 7);
        let err = orbit(&e7, &e7.dual_basis_vector(6).unwrap(), 10).unwrap_err();
        assert!(matches!(err, Error::OrbitCapExceeded { explored: 10, cap: 10 }));
    }

    #[test]
    fn canonical_examples() {
        let a2 = lat(Kind::A, 2);
        // roots land on minus the highest root
        let rep = canonical_rep(&a2, &LatticeVector::from_integers(&[1, 0])).unwrap();
        assert_eq!(rep, LatticeVector::from_integers(&[-1, -1]));
        assert_eq!(orbit_label(&a2, &rep), ROOT_LABEL);

        let a3 = lat(Kind::A, 3);
        let d = a3.dual_basis_vector(1).unwrap();
        assert_eq!(canonical_rep(&a3, &d).unwrap(), d);
        let shifted = LatticeVector::new(vec![frac(-1, 2), int(0), frac(-1, 2)]);
        assert_eq!(canonical_rep(&a3, &shifted).unwrap(), d);
    }

    #[test]
    fn labels_for_composite_weights() {
        let a3 = lat(Kind::A, 3);
        let w = &a3.dual_basis_vector(0).unwrap().scaled(&int(2)) + &a3.dual_basis_vector(2).unwrap();
        assert_eq!(orbit_label(&a3, &w), "2*a1^+a3^");
    }
}

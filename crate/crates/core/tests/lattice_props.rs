mod common;

use common::{gram, invert, irreducibles, simple_vertex_table};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rootlat_core::discriminant::square_mod_two;
use rootlat_core::linalg::smith_invariant_factors;
use rootlat_core::vector::int;
use rootlat_core::{IrreducibleRootLattice, Kind, Lattice, LatticeVector, Rational};

fn lat(kind: Kind, n: usize) -> IrreducibleRootLattice {
    IrreducibleRootLattice::new(kind, n).unwrap()
}

fn closed_form_det(kind: Kind, n: usize) -> u64 {
    match (kind, n) {
        (Kind::A, _) => n as u64 + 1,
        (Kind::D, _) => 4,
        (Kind::E, 6) => 3,
        (Kind::E, 7) => 2,
        _ => 1,
    }
}

#[test]
fn gram_matches_diagram() {
    for (kind, n) in irreducibles(12) {
        assert_eq!(lat(kind, n).gram(), &gram(kind, n), "{kind:?}{n}");
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn dual_basis_is_dual() {
    for (kind, n) in irreducibles(12) {
        let l = lat(kind, n);
        let inv = invert(&gram(kind, n));
        for i in 0..n {
            let d = l.dual_basis_vector(i).unwrap();
            for j in 0..n {
                let expected = if i == j { Rational::one() } else { Rational::zero() };
                assert_eq!(l.pair_with_basis(&d, j), expected);
                assert_eq!(d.coefficients()[j], inv[j][i].to_big());
            }
        }
    }
}

#[test]
fn group_order_is_determinant() {
    for (kind, n) in irreducibles(12) {
        let l = lat(kind, n);
        let g = l.discriminant_group();
        assert_eq!(g.order(), closed_form_det(kind, n));
        assert_eq!(*l.abs_determinant(), BigInt::from(closed_form_det(kind, n)));
        let snf: Vec<u64> = smith_invariant_factors(l.gram())
            .iter()
            .map(|x| u64::try_from(x).unwrap())
            .collect();
        assert_eq!(snf, g.invariant_factors);
        for d in g.invariant_factors.windows(2) {
            assert_eq!(d[1] % d[0], 0);
        }
    }
}

#[test]
fn simple_vertex_duals_are_negative() {
    for (kind, n) in irreducibles(12) {
        let l = lat(kind, n);
        for v in simple_vertex_table(kind, n) {
            let d = l.dual_basis_vector(v - 1).unwrap();
            assert!(d.all_negative(), "{} vertex {v}: {d}", l.name());
        }
        for gen in &l.discriminant_group().generators {
            assert!(simple_vertex_table(kind, n).contains(&(gen.vertex + 1)));
        }
    }
}

fn lattice_strategy() -> impl Strategy<Value = (Kind, usize)> {
    prop::sample::select(irreducibles(10))
}

fn dual_vector(l: &IrreducibleRootLattice, c: &[i64]) -> LatticeVector {
    let c: Vec<Rational> = c.iter().take(l.rank()).map(|&x| int(x)).collect();
    l.from_dual_coordinates(&c)
}

proptest! {
    #[test]
    fn coset_is_homomorphism(
        (kind, n) in lattice_strategy(),
        a in prop::collection::vec(-4i64..=4, 10),
        b in prop::collection::vec(-4i64..=4, 10),
    ) {
        let l = lat(kind, n);
        let g = l.discriminant_group();
        let (v, w) = (dual_vector(&l, &a), dual_vector(&l, &b));
        let cv = l.coset_in(&g, &v).unwrap();
        let cw = l.coset_in(&g, &w).unwrap();
        prop_assert_eq!(l.coset_in(&g, &(&v + &w)).unwrap(), g.add(&cv, &cw));
        prop_assert_eq!(l.coset_in(&g, &(-&v)).unwrap(), g.negate(&cv));
        prop_assert_eq!(cv.is_zero(), v.is_integral());
    }

    #[test]
    fn generator_squares_depend_on_coset(
        (kind, n) in lattice_strategy(),
        r in prop::collection::vec(-5i64..=5, 10),
    ) {
        let l = lat(kind, n);
        let r = LatticeVector::from_integers(&r[..n]);
        for gen in l.discriminant_group().generators {
            let moved = &gen.vector + &r;
            prop_assert_eq!(
                square_mod_two(&l.square(&moved).unwrap()),
                square_mod_two(&gen.square)
            );
            prop_assert_eq!(l.coset_of(&moved).unwrap(), l.coset_of(&gen.vector).unwrap());
        }
    }
}

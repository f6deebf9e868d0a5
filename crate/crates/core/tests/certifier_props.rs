mod common;

use std::collections::BTreeSet;

use common::{block_diagonal, box_dual_vectors, gram, BoxVector};
use rootlat_core::certifier::{certify, certify_all, enumerate_candidates};
use rootlat_core::reduction::verify_trace;
use rootlat_core::vector::int;
use rootlat_core::weyl::reflect;
use rootlat_core::{parse_lattice_spec, CompositeLattice, Error, Kind, Lattice, LatticeVector};

fn oracle(spec: &[(Kind, usize)], target: i128) -> Vec<LatticeVector> {
    let blocks: Vec<_> = spec.iter().map(|&(k, n)| gram(k, n)).collect();
    box_dual_vectors(&block_diagonal(&blocks), (-2, 1))
        .iter()
        .filter(|v| !v.integral && v.square == (target, 1))
        .map(BoxVector::to_lattice_vector)
        .collect()
}

#[test]
fn candidates_match_box_oracle() {
    let specs: &[&[(Kind, usize)]] = &[
        &[(Kind::A, 3), (Kind::A, 1)],
        &[(Kind::A, 2), (Kind::A, 2), (Kind::A, 2)],
        &[(Kind::D, 4), (Kind::A, 1), (Kind::A, 1)],
        &[(Kind::E, 7), (Kind::A, 1)],
        &[(Kind::A, 5), (Kind::A, 2)],
    ];
    for spec in specs {
        let l = CompositeLattice::from_kinds(spec).unwrap();
        for target in [-1i128, -2] {
            let got: Vec<LatticeVector> = enumerate_candidates(&l, &int(target as i64))
                .unwrap()
                .iter()
                .map(|c| c.vector())
                .collect();
            assert_eq!(got, oracle(spec, target), "{} target {target}", l.name());
        }
    }
}

#[test]
fn a2_cubed_has_216_candidates() {
    let l = parse_lattice_spec("3*A2").unwrap();
    let report = certify_all(&l, &int(-2)).unwrap();
    assert_eq!(report.n_candidates, 216);
    assert_eq!(report.n_certified, 216);
    assert!(report.failures.is_empty());
}

#[test]
fn e7_a1_combines_minimal_vectors() {
    let l = parse_lattice_spec("E7+A1").unwrap();
    let e7 = &l.components()[0];
    let a1 = &l.components()[1];
    for c in enumerate_candidates(&l, &int(-2)).unwrap() {
        assert_eq!(e7.square(&c.components[0]).unwrap(), rootlat_core::vector::frac(-3, 2));
        assert_eq!(a1.square(&c.components[1]).unwrap(), rootlat_core::vector::frac(-1, 2));
    }
    assert_eq!(certify_all(&l, &int(-2)).unwrap().n_certified, 112);
}

#[test]
fn a3_a1_traces_end_at_simple_duals() {
    let l = parse_lattice_spec("A3+A1").unwrap();
    for c in enumerate_candidates(&l, &int(-2)).unwrap() {
        let cert = certify(&l, &c).unwrap();
        assert!(cert.conclusion);
        for (i, t) in &cert.component_traces {
            let comp = &l.components()[*i];
            assert!(verify_trace(comp, t).valid);
            let v = comp.vertex_index(&t.end_vertex).unwrap();
            assert_eq!(t.end, comp.dual_basis_vector(v).unwrap());
        }
    }
}

#[test]
fn candidates_closed_under_negation_and_reflection() {
    for spec in ["A3+A1", "D5+A2", "A4+A4", "E6+A2"] {
        let l = parse_lattice_spec(spec).unwrap();
        for target in [-1, -2] {
            let cands = enumerate_candidates(&l, &int(target)).unwrap();
            let set: BTreeSet<LatticeVector> = cands.iter().map(|c| c.vector()).collect();
            for c in &cands {
                let v = c.vector();
                assert!(set.contains(&-&v), "{spec}: {v}");
                for i in 0..l.rank() {
                    assert!(set.contains(&reflect(&l, &v, i).unwrap()), "{spec}: {v} at {i}");
                }
                let neg = l.classes_of(&-&v).unwrap();
                let groups = l.discriminant_groups();
                for ((g, a), b) in groups.iter().zip(&c.class).zip(&neg) {
                    assert_eq!(&g.negate(a), b);
                }
            }
        }
    }
}

#[test]
fn unimodular_and_tiny_cases() {
    let e8 = parse_lattice_spec("E8").unwrap();
    assert!(enumerate_candidates(&e8, &int(-2)).unwrap().is_empty());
    let a1 = parse_lattice_spec("A1").unwrap();
    assert!(enumerate_candidates(&a1, &int(-1)).unwrap().is_empty());
    assert!(matches!(
        enumerate_candidates(&a1, &int(-3)),
        Err(Error::InvalidTarget(_))
    ));
    let big = parse_lattice_spec("A9").unwrap();
    assert!(matches!(
        enumerate_candidates(&big, &int(-2)),
        Err(Error::RankCap { .. })
    ));
}

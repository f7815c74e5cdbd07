mod common;

use common::{oracle_derived, oracle_indices, oracle_semi_total, oracle_subdivision, Dense};
use num_bigint::BigInt;
use num_rational::BigRational;
use topo_index::verify::{build_suite_graphs, default_families, DEFAULT_SEED};
use topo_index::{compute_all, compute_index, generate, Family, Graph, IndexKind, Transform};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn c3() -> Graph {
    generate(&Family::Cycle { a: 3 }).unwrap()
}

fn k4() -> Graph {
    generate(&Family::Complete { a: 4 }).unwrap()
}

#[test]
fn oracle_spot_values() {
    let s1 = oracle_indices(&oracle_subdivision(&c3(), 1));
    assert_eq!(s1.m1, q(24));
    assert_eq!(s1.hm, q(96));
    assert_eq!(oracle_indices(&oracle_subdivision(&c3(), 2)).m1, q(36));

    let r1 = oracle_indices(&oracle_semi_total(&c3(), 1));
    assert_eq!(r1.f, q(216));
    assert_eq!(r1.pi2, q(1 << 30));
    assert_eq!(r1.sdd, q(21));
    assert_eq!(r1.hm, q(408));
    assert_eq!(oracle_indices(&oracle_semi_total(&c3(), 2)).sdd, q(46));

    assert_eq!(oracle_indices(&oracle_semi_total(&k4(), 1)).hm, q(1632));
    assert_eq!(oracle_indices(&oracle_subdivision(&k4(), 1)).m2, q(72));
}

#[test]
fn library_matches_oracle_on_spot_values() {
    let c3 = c3();
    assert_eq!(
        compute_index(&Transform::SubdivisionK.apply(&c3, 1), IndexKind::M1),
        24u64
    );
    assert_eq!(
        compute_index(&Transform::SubdivisionK.apply(&c3, 2), IndexKind::M1),
        36u64
    );
    assert_eq!(
        compute_index(&Transform::SubdivisionK.apply(&c3, 1), IndexKind::HM),
        96u64
    );
    let r1 = compute_all(&Transform::SemiTotalK.apply(&c3, 1));
    assert_eq!(r1.f, 216u64);
    assert_eq!(r1.pi2, 1u64 << 30);
    assert_eq!(r1.sdd, 21u64);
    assert_eq!(compute_all(&Transform::SemiTotalK.apply(&c3, 2)).sdd, 46u64);
    assert_eq!(
        compute_all(&Transform::SemiTotalK.apply(&k4(), 1)).hm,
        1632u64
    );
}

fn dense_edges(d: &Dense) -> Vec<(usize, usize)> {
    d.edges()
}

#[test]
fn library_matches_oracle_on_default_suite() {
    let (graphs, skipped) = build_suite_graphs(&default_families(DEFAULT_SEED)).unwrap();
    assert!(skipped.is_empty());
    assert_eq!(graphs.len(), 26);
    let mut checked = 0;
    for sg in &graphs {
        for transform in [Transform::SubdivisionK, Transform::SemiTotalK] {
            for k in 0..=4 {
                let derived = transform.apply(&sg.graph, k);
                let dense = oracle_derived(&sg.graph, transform, k);
                assert_eq!(
                    derived.n(),
                    dense.n(),
                    "{} {transform} k={k}",
                    sg.descriptor
                );
                assert_eq!(derived.edges(), dense_edges(&dense).as_slice());
                let lib = compute_all(&derived);
                let ora = oracle_indices(&dense);
                for kind in IndexKind::ALL {
                    assert_eq!(
                        lib.get(kind).as_rational(),
                        ora.get(kind),
                        "{kind} of {transform}({}) k={k}",
                        sg.descriptor
                    );
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 26 * 2 * 5);
}

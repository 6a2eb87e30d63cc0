//! Descent of relations to induced matrices over every small symmetric
//! solution and every invariant subset.

use functorlab::restrict::{invariant_subsets, relation_descends, restrict_quotient, restrict_serre};
use functorlab::solver::{solve, SearchConfig};
use functorlab::zmatrix::RelationPoly;

fn small_polys() -> Vec<Vec<u64>> {
    (0..81u64).map(|code| (0..4).map(|i| code / 3u64.pow(i) % 3).collect()).collect()
}

#[test]
fn relations_descend_for_all_small_symmetric_solutions() {
    let polys = small_polys();
    let mut checked = 0;
    for g in &polys {
        for h in &polys {
            let Ok(rel) = RelationPoly::from_u64(g, h) else { continue };
            for n in 1..=3 {
                for m in solve(&rel, &SearchConfig::new(n, 2).symmetric(true)).unwrap().solutions {
                    for s in invariant_subsets(&m).unwrap() {
                        let report = relation_descends(&m, &s, &rel).unwrap();
                        assert!(report.is_consistent(), "{m}, {:?}, {rel}", s.to_one_based());
                        if !s.is_empty() {
                            assert!(restrict_serre(&m, &s).unwrap().is_symmetric());
                        }
                        if s.len() < n {
                            assert!(restrict_quotient(&m, &s).unwrap().is_symmetric());
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 10_000, "{checked}");
}

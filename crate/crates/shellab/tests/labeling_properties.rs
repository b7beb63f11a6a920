mod common;

use proptest::prelude::*;
use shellab::labeling::{
    descent_positions, is_ascending, is_polygon_strong, lex_compare, restrict, validate_labeling, Label,
    LabelPoset, LexOrder,
};
use shellab::{LabelingKind, Poset};

/// All saturated chains starting at `path[0]`.
fn roots(p: &Poset, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(path.clone());
    for &z in p.upper_covers(*path.last().unwrap()) {
        path.push(z);
        roots(p, path, out);
        path.pop();
    }
}

/// Strict lexicographic precedence, with Λ consulted only at the first
/// differing position.
fn lex_less(a: &[Label], b: &[Label], lambda: &LabelPoset) -> bool {
    match a.iter().zip(b).position(|(x, y)| x != y) {
        Some(i) => lambda.lt(a[i], b[i]),
        None => a.len() < b.len(),
    }
}

#[test]
fn every_rooted_interval_has_one_ascending_chain_lex_first() {
    for case in common::cases() {
        let p = &case.poset;
        let mut all_roots = Vec::new();
        roots(p, &mut vec![p.bottom().unwrap()], &mut all_roots);
        for root in all_roots {
            let x = *root.last().unwrap();
            for y in 0..p.len() {
                if !p.leq(x, y) || x == y {
                    continue;
                }
                let seqs: Vec<Vec<Label>> = p
                    .saturated_chains(x, y)
                    .iter()
                    .map(|c| {
                        let mut r = root.clone();
                        c[1..]
                            .iter()
                            .map(|&z| {
                                let l = case.labeling.label(p, &r, z).unwrap();
                                r.push(z);
                                l
                            })
                            .collect()
                    })
                    .collect();
                let lambda = &case.labeling.lambda;
                let asc: Vec<&Vec<Label>> = seqs
                    .iter()
                    .filter(|s| s.windows(2).all(|w| lambda.leq(w[0], w[1])))
                    .collect();
                assert_eq!(asc.len(), 1, "{}: root {root:?}, top {y}", case.name);
                let others = seqs.iter().filter(|s| *s != asc[0]);
                for s in others {
                    assert!(lex_less(asc[0], s, lambda), "{}: {:?} vs {s:?}", case.name, asc[0]);
                }
            }
        }
    }
}

#[test]
fn every_case_validates_as_its_kind() {
    for case in common::cases() {
        let report = validate_labeling(&case.poset, &case.labeling, case.kind);
        assert!(report.valid, "{}: {:?}", case.name, report.failures);
    }
}

#[test]
fn restrictions_of_valid_labelings_validate() {
    for case in common::cases() {
        let p = &case.poset;
        let mut all_roots = Vec::new();
        roots(p, &mut vec![p.bottom().unwrap()], &mut all_roots);
        for root in all_roots {
            let x = *root.last().unwrap();
            for y in (0..p.len()).filter(|&y| p.leq(x, y)) {
                let r = restrict(p, &case.labeling, &root, y).unwrap();
                let kind = if r.labeling.is_edge_labeling() {
                    LabelingKind::El
                } else {
                    LabelingKind::Cl
                };
                let report = validate_labeling(&r.poset, &r.labeling, kind);
                assert!(report.valid, "{}: [{x}, {y}] along {root:?}", case.name);
            }
        }
    }
}

#[test]
fn a_chain_with_a_root_dependent_label_is_rejected_as_el() {
    let f = shellab::families::fixture("fig5_cl").unwrap();
    let report = validate_labeling(&f.poset, &f.labeling, LabelingKind::El);
    assert!(!report.valid);
}

proptest! {
    #[test]
    fn no_descents_iff_ascending(seq in proptest::collection::vec(-3i64..4, 0..8)) {
        let lambda = LabelPoset::Integers;
        let d = descent_positions(&seq, &lambda);
        prop_assert_eq!(d.is_empty(), is_ascending(&seq, &lambda));
        let oracle: Vec<usize> = (1..seq.len()).filter(|&i| seq[i - 1] > seq[i]).collect();
        prop_assert_eq!(d, oracle);
    }

    #[test]
    fn lex_compare_agrees_with_slice_order_on_integers(
        a in proptest::collection::vec(0i64..4, 0..6),
        b in proptest::collection::vec(0i64..4, 0..6),
    ) {
        let got = lex_compare(&a, &b, &LabelPoset::Integers);
        let expected = match a.cmp(&b) {
            std::cmp::Ordering::Less => LexOrder::Less,
            std::cmp::Ordering::Equal => LexOrder::Equal,
            std::cmp::Ordering::Greater => LexOrder::Greater,
        };
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn polygon_strength_survives_order_isomorphic_relabeling(
        pick in any::<prop::sample::Index>(),
        gaps in proptest::collection::vec(1i64..5, 64),
        shift in -50i64..50,
    ) {
        let cases: Vec<_> = common::cases()
            .into_iter()
            .filter(|c| c.labeling.lambda == LabelPoset::Integers)
            .collect();
        let case = &cases[pick.index(cases.len())];
        let f = |l: Label| shift + gaps[..(l.clamp(0, 63) as usize)].iter().sum::<i64>();
        let relabeled = common::relabel(&case.poset, &case.labeling, f);
        let before = is_polygon_strong(&case.poset, &case.labeling).unwrap().strong;
        let after = is_polygon_strong(&case.poset, &relabeled).unwrap().strong;
        prop_assert_eq!(before, after, "{}", case.name);
    }
}

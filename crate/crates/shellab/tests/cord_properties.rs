mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;
use shellab::descent_order::{
    build_mcd, downward_cover_counts, is_inversion_ranked, is_polygon_complete, root_independence_violations,
    structural_audit, McdOrder,
};
use shellab::families::{boolean_lattice, fixture, max_min_el, partition_lattice};
use shellab::labeling::{is_polygon_strong, validate_labeling, Label, LabelPoset, Labeling};
use shellab::poset::{build_poset, Poset};
use shellab::shelling::seeded_rng;
use shellab::LabelingKind;

fn chain_relation(mcd: &McdOrder) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let mut rel = BTreeSet::new();
    for i in 0..mcd.len() {
        for j in 0..mcd.len() {
            if mcd.leq(i, j) {
                rel.insert((mcd.chains[i].clone(), mcd.chains[j].clone()));
            }
        }
    }
    rel
}

/// `0̂ < a_1, …, a_k < 1̂`.
fn rank_two(k: usize) -> Poset {
    let mut names = vec!["0".to_string(), "1".to_string()];
    let mut covers = Vec::new();
    for i in 0..k {
        names.push(format!("a{i}"));
        covers.push(("0".to_string(), format!("a{i}")));
        covers.push((format!("a{i}"), "1".to_string()));
    }
    if k == 0 {
        covers.push(("0".into(), "1".into()));
    }
    build_poset(&names, &covers, true).unwrap()
}

#[test]
fn every_el_of_a_rank_two_poset_is_polygon_complete() {
    let mut validated = 0;
    for k in 0..=5 {
        let p = rank_two(k);
        let edges = p.covers().len();
        let total = 3usize.pow(edges as u32);
        for code in 0..total {
            let mut c = code;
            let labels: Vec<Label> = (0..edges)
                .map(|_| {
                    let l = (c % 3) as Label + 1;
                    c /= 3;
                    l
                })
                .collect();
            let lab = Labeling::edge_labeling(LabelPoset::Integers, labels);
            if !validate_labeling(&p, &lab, LabelingKind::El).valid {
                continue;
            }
            validated += 1;
            let mcd = build_mcd(&p, &lab).unwrap();
            assert!(is_polygon_complete(&mcd).complete, "k={k}, code={code}");
        }
    }
    assert!(validated > 1000, "only {validated} labelings validated");
}

/// Random integer labelings of a few small posets; those that validate as
/// EL-labelings must satisfy every structural property and the sufficient
/// conditions for polygon completeness.
#[test]
fn random_el_labelings_satisfy_the_structural_theorems() {
    let mut posets = vec![("B_3", boolean_lattice(3).0)];
    for name in ["fig2", "fig3", "fig4", "nongraded"] {
        posets.push((name, fixture(name).unwrap().poset));
    }
    let mut rng = seeded_rng(7);
    let (mut strong, mut ranked, mut incomplete) = (0, 0, 0);
    for (name, p) in posets {
        let mut valid = 0;
        for _ in 0..20_000 {
            let labels: Vec<Label> = (0..p.covers().len()).map(|_| rng.gen_range(1..=4)).collect();
            let lab = Labeling::edge_labeling(LabelPoset::Integers, labels);
            if !validate_labeling(&p, &lab, LabelingKind::El).valid {
                continue;
            }
            valid += 1;
            let mcd = build_mcd(&p, &lab).unwrap();
            let audit = structural_audit(&p, &mcd);
            assert_eq!(audit.total(), 0, "{name}: {audit:?} for {lab:?}");
            assert_eq!(root_independence_violations(&p, &mcd), 0, "{name}: {lab:?}");
            let complete = is_polygon_complete(&mcd).complete;
            if is_polygon_strong(&p, &lab).unwrap().strong {
                strong += 1;
                assert!(complete, "{name}: polygon strong but not complete: {lab:?}");
            }
            if is_inversion_ranked(&mcd).inversion_ranked {
                ranked += 1;
                assert!(complete, "{name}: inversion ranked but not complete: {lab:?}");
            }
            incomplete += usize::from(!complete);
        }
        assert!(valid >= 50, "{name}: only {valid} valid labelings sampled");
    }
    assert!(
        strong > 0 && ranked > 0 && incomplete > 0,
        "sample too narrow: {strong} strong, {ranked} inversion ranked, {incomplete} incomplete"
    );
}

#[test]
fn el_cover_relations_do_not_depend_on_the_root() {
    let (b3, l3) = boolean_lattice(3);
    let (b4, l4) = boolean_lattice(4);
    let (pi4, parts) = partition_lattice(4);
    let lpi = max_min_el(&pi4, &parts);
    for (name, p, l) in [("B_3", b3, l3), ("B_4", b4, l4), ("Pi_4", pi4, lpi)] {
        let mcd = build_mcd(&p, &l).unwrap();
        assert_eq!(root_independence_violations(&p, &mcd), 0, "{name}");
    }
}

#[test]
fn every_case_satisfies_the_structural_properties() {
    for case in common::cases() {
        let mcd = build_mcd(&case.poset, &case.labeling).unwrap();
        let audit = structural_audit(&case.poset, &mcd);
        assert_eq!(audit.total(), 0, "{}: {audit:?}", case.name);
        let complete = is_polygon_complete(&mcd).complete;
        for (down, desc) in downward_cover_counts(&mcd) {
            assert!(down <= desc, "{}", case.name);
            assert!(!complete || down == desc, "{}", case.name);
        }
    }
}

#[test]
fn the_non_descending_maximal_element_of_fig3() {
    let f = fixture("fig3").unwrap();
    let mcd = build_mcd(&f.poset, &f.labeling).unwrap();
    let n = |i: usize| mcd.labels[i].len();
    let odd = mcd
        .maximal_elements()
        .into_iter()
        .any(|i| mcd.descents[i].len() + 1 != n(i));
    assert!(odd, "every maximal element of Cord(fig3) is descending");
}

proptest! {
    #[test]
    fn cord_survives_order_isomorphic_relabeling(
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
        let a = build_mcd(&case.poset, &case.labeling).unwrap();
        let b = build_mcd(&case.poset, &relabeled).unwrap();
        prop_assert_eq!(&a.covers, &b.covers, "{}", case.name);
        prop_assert_eq!(chain_relation(&a), chain_relation(&b));
    }

    /// `λ'(e) = 10 λ(e) + δ(e)` keeps every descent set of `B_3` but can
    /// reorder labels of different edges that were equal.
    #[test]
    fn same_descent_sets_give_the_same_cord_on_b3(deltas in proptest::collection::vec(0i64..10, 12)) {
        let (p, lab) = boolean_lattice(3);
        let labels: Vec<Label> = (0..p.covers().len())
            .map(|id| 10 * lab.edge_label(id).unwrap() + deltas[id])
            .collect();
        let perturbed = Labeling::edge_labeling(LabelPoset::Integers, labels);
        let a = build_mcd(&p, &lab).unwrap();
        let b = build_mcd(&p, &perturbed).unwrap();
        prop_assert_eq!(&a.descents, &b.descents);
        prop_assert_eq!(&a.covers, &b.covers);
        prop_assert_eq!(chain_relation(&a), chain_relation(&b));
    }
}

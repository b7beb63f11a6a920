mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use shellab::families::boolean_lattice;
use shellab::poset::{are_isomorphic, transitive_closure, transitive_reduction, Poset};

/// A random DAG on `n` elements: a subset of the pairs `i < j`.
fn dag() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |bits| {
            let rel = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
            (n, rel)
        })
    })
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Reachability by Floyd-Warshall.
fn closure_oracle(n: usize, rel: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in rel {
        r[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

fn with_bounds(n: usize, rel: &[(usize, usize)]) -> Poset {
    let mut all = rel.iter().map(|&(a, b)| (a + 1, b + 1)).collect::<Vec<_>>();
    for i in 1..=n {
        all.push((0, i));
        all.push((i, n + 1));
    }
    all.push((0, n + 1));
    Poset::from_relation(names(n + 2), &all, true).unwrap()
}

fn cover_names(p: &Poset) -> BTreeSet<(String, String)> {
    p.covers()
        .iter()
        .map(|&(a, b)| (p.name(a).to_string(), p.name(b).to_string()))
        .collect()
}

proptest! {
    #[test]
    fn order_relation_matches_floyd_warshall((n, rel) in dag()) {
        let p = Poset::from_relation(names(n), &rel, false).unwrap();
        let oracle = closure_oracle(n, &rel);
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(p.leq(i, j), oracle[i][j]);
            }
        }
    }

    #[test]
    fn covers_are_exactly_the_unimplied_relations((n, rel) in dag()) {
        let p = Poset::from_relation(names(n), &rel, false).unwrap();
        let r = closure_oracle(n, &rel);
        let expected: BTreeSet<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && r[i][j] && !(0..n).any(|k| k != i && k != j && r[i][k] && r[k][j]))
            .collect();
        let got: BTreeSet<(usize, usize)> = p.covers().iter().copied().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn reduction_of_closure_is_the_cover_set((n, rel) in dag()) {
        let p = Poset::from_relation(names(n), &rel, false).unwrap();
        let closed = transitive_closure(n, p.covers()).unwrap();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| closed[i].ones().filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut reduced = transitive_reduction(n, &pairs).unwrap();
        reduced.sort_unstable();
        prop_assert_eq!(reduced, p.covers().to_vec());
    }

    #[test]
    fn linear_extensions_are_exactly_the_compatible_orders((n, rel) in dag()) {
        let p = Poset::from_relation(names(n), &rel, false).unwrap();
        let got: BTreeSet<Vec<usize>> = p.linear_extensions().collect();
        let oracle: BTreeSet<Vec<usize>> = common::permutations(n)
            .into_iter()
            .map(|w| w.into_iter().map(|x| x - 1).collect::<Vec<usize>>())
            .filter(|w| {
                let mut pos = vec![0; n];
                for (k, &x) in w.iter().enumerate() {
                    pos[x] = k;
                }
                rel.iter().all(|&(a, b)| pos[a] < pos[b])
            })
            .collect();
        prop_assert!(got.iter().all(|e| p.is_linear_extension(e)));
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn isomorphism_is_reflexive_symmetric_and_relabeling_invariant(
        (n, rel) in dag(),
        (m, rel2) in dag(),
        seed in any::<u64>(),
    ) {
        let p = Poset::from_relation(names(n), &rel, false).unwrap();
        prop_assert!(are_isomorphic(&p, &p).is_some());
        let q = Poset::from_relation(names(m), &rel2, false).unwrap();
        prop_assert_eq!(are_isomorphic(&p, &q).is_some(), are_isomorphic(&q, &p).is_some());
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let moved: Vec<(usize, usize)> = rel.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let p2 = Poset::from_relation(names(n), &moved, false).unwrap();
        prop_assert!(are_isomorphic(&p, &p2).is_some());
        prop_assert_eq!(are_isomorphic(&p, &q).is_some(), are_isomorphic(&p2, &q).is_some());
    }

    #[test]
    fn full_closed_interval_is_the_poset((n, rel) in dag()) {
        let p = with_bounds(n, &rel);
        let whole = p.closed_interval(p.bottom().unwrap(), p.top().unwrap()).unwrap();
        let a: BTreeSet<&str> = p.names().iter().map(String::as_str).collect();
        let b: BTreeSet<&str> = whole.names().iter().map(String::as_str).collect();
        prop_assert_eq!(a, b);
        prop_assert_eq!(cover_names(&p), cover_names(&whole));
    }

    #[test]
    fn maximal_chains_are_saturated_and_complete((n, rel) in dag()) {
        let p = with_bounds(n, &rel);
        let chains = p.maximal_chains().unwrap();
        for c in &chains {
            prop_assert_eq!(c.first().copied(), p.bottom());
            prop_assert_eq!(c.last().copied(), p.top());
            prop_assert!(c.windows(2).all(|w| p.is_cover(w[0], w[1])));
        }
        let distinct: BTreeSet<&Vec<usize>> = chains.iter().collect();
        prop_assert_eq!(distinct.len(), chains.len());
    }
}

#[test]
fn boolean_lattices_have_n_factorial_maximal_chains() {
    for n in 0..=6 {
        let (p, _) = boolean_lattice(n);
        let fact: usize = (1..=n).product();
        assert_eq!(p.maximal_chains().unwrap().len(), fact, "B_{n}");
    }
}

#[test]
fn rank_function_increases_along_covers() {
    let (p, _) = boolean_lattice(4);
    let rank = p.rank_function().unwrap();
    for &(x, y) in p.covers() {
        assert_eq!(rank[y], rank[x] + 1);
    }
    assert_eq!(rank[p.bottom().unwrap()], 0);
}

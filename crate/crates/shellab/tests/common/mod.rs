//! Brute-force oracles, figure transcriptions and labeled test cases shared
//! by the integration tests. The oracles work on plain vectors and never
//! call into the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

/// All permutations of `1..=n` in lexicographic order, by repeated
/// next-permutation steps.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Value inversions `(a, b)`, `a < b`, with `b` appearing before `a`.
pub fn inversion_set(w: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                s.insert((w[j], w[i]));
            }
        }
    }
    s
}

/// Number of cover pairs of weak order on `S_n`, found by comparing every
/// pair of inversion sets.
pub fn weak_order_cover_count(n: usize) -> usize {
    let invs: Vec<_> = permutations(n).iter().map(|w| inversion_set(w)).collect();
    let mut count = 0;
    for a in &invs {
        for b in &invs {
            if b.len() == a.len() + 1 && a.is_subset(b) {
                count += 1;
            }
        }
    }
    count
}

/// Weak order on `S_n` as the set of pairs `(u, w)` with
/// `inv(u) ⊆ inv(w)`, keyed by one-line words.
pub fn weak_order_relation(n: usize) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let perms = permutations(n);
    let mut rel = BTreeSet::new();
    for u in &perms {
        for w in &perms {
            if inversion_set(u).is_subset(&inversion_set(w)) {
                rel.insert((u.clone(), w.clone()));
            }
        }
    }
    rel
}

/// Number of maximal chains of the partition lattice on `[n]`, counted by
/// merging every pair of blocks recursively.
pub fn partition_chain_count(n: usize) -> u64 {
    fn go(blocks: &mut Vec<Vec<usize>>) -> u64 {
        if blocks.len() <= 1 {
            return 1;
        }
        let mut total = 0;
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                let mut next = blocks.clone();
                let b = next.remove(j);
                next[i].extend(b);
                total += go(&mut next);
            }
        }
        total
    }
    go(&mut (1..=n).map(|i| vec![i]).collect())
}

/// Number of saturated chains of length `k` starting at the bottom of the
/// partition lattice on `[n]`, counted by merging blocks recursively.
pub fn partition_partial_chain_count(n: usize, k: usize) -> u64 {
    fn go(blocks: usize, k: usize) -> u64 {
        if k == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..blocks {
            for _ in i + 1..blocks {
                total += go(blocks - 1, k - 1);
            }
        }
        total
    }
    go(n, k)
}

/// `(n+1)! n! / 2^n`.
pub fn partition_chain_formula(n: u64) -> u64 {
    let fact = |k: u64| (1..=k).product::<u64>();
    fact(n + 1) * fact(n) / (1 << n)
}

/// Standard fillings of a straight shape, found by trying every
/// permutation of `1..=N` in row reading order.
pub fn standard_filling_count(shape: &[usize]) -> usize {
    let n: usize = shape.iter().sum();
    let mut count = 0;
    for w in permutations(n) {
        let mut rows = Vec::new();
        let mut k = 0;
        for &len in shape {
            rows.push(w[k..k + len].to_vec());
            k += len;
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]));
        let cols_ok = (1..rows.len()).all(|r| (0..rows[r].len()).all(|c| rows[r - 1][c] < rows[r][c]));
        if rows_ok && cols_ok {
            count += 1;
        }
    }
    count
}

/// A Hasse diagram transcribed from a drawing: nodes with their vertical
/// coordinate and undirected edges, oriented upwards.
pub struct Drawing {
    pub nodes: &'static [(&'static str, i32)],
    pub edges: &'static [(&'static str, &'static str)],
}

impl Drawing {
    /// Cover pairs `(lower, upper)` by node name.
    pub fn covers(&self) -> Vec<(&'static str, &'static str)> {
        let y: HashMap<&str, i32> = self.nodes.iter().copied().collect();
        self.edges
            .iter()
            .map(|&(a, b)| {
                assert_ne!(y[a], y[b], "edge {a} - {b} is horizontal");
                if y[a] < y[b] {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.nodes.iter().map(|n| n.0).collect()
    }
}

/// Weak order on `S_3`, by label sequence.
pub const B3_CORD: Drawing = Drawing {
    nodes: &[("123", 0), ("132", 1), ("213", 1), ("312", 2), ("231", 2), ("321", 3)],
    edges: &[
        ("123", "132"),
        ("123", "213"),
        ("132", "312"),
        ("213", "231"),
        ("312", "321"),
        ("231", "321"),
    ],
};

/// Cord of `Π_4` under the minimal labeling. `ijkl` is the chain
/// `ij|k|l ⋖ ijk|l`; `ijUkl` is the chain `ij|k|l ⋖ ij|kl`.
pub const PI4_MINIMAL_CORD: Drawing = Drawing {
    nodes: &[
        ("12U34", 0),
        ("1234", 3),
        ("1243", 3),
        ("34U12", 3),
        ("1324", 6),
        ("2314", 6),
        ("1423", 6),
        ("2413", 6),
        ("3412", 6),
        ("3421", 6),
        ("1342", 9),
        ("13U24", 9),
        ("2341", 9),
        ("1432", 9),
        ("2431", 9),
        ("14U23", 9),
        ("23U14", 12),
        ("24U13", 12),
    ],
    edges: &[
        ("12U34", "34U12"),
        ("34U12", "3412"),
        ("3412", "1342"),
        ("1342", "1324"),
        ("1324", "1234"),
        ("1234", "12U34"),
        ("12U34", "1243"),
        ("1243", "1423"),
        ("1423", "14U23"),
        ("14U23", "23U14"),
        ("23U14", "2314"),
        ("2314", "1234"),
        ("3412", "1432"),
        ("1432", "1423"),
        ("34U12", "3421"),
        ("3421", "2431"),
        ("2431", "2413"),
        ("2413", "1243"),
        ("3421", "2341"),
        ("2341", "2314"),
        ("1324", "13U24"),
        ("13U24", "24U13"),
        ("24U13", "2413"),
    ],
};

/// Cord of `Π_4` under the max-min labeling, same chain names.
pub const PI4_MAXMIN_CORD: Drawing = Drawing {
    nodes: &[
        ("1234", 0),
        ("12U34", 4),
        ("1243", 4),
        ("1324", 4),
        ("2314", 4),
        ("1342", 8),
        ("13U24", 8),
        ("1423", 8),
        ("2413", 8),
        ("34U12", 8),
        ("2341", 8),
        ("23U14", 8),
        ("1432", 12),
        ("24U13", 12),
        ("3412", 12),
        ("2431", 12),
        ("3421", 12),
        ("14U23", 12),
    ],
    edges: &[
        ("1234", "1324"),
        ("1324", "1342"),
        ("1342", "1432"),
        ("1432", "1423"),
        ("1423", "1243"),
        ("1243", "1234"),
        ("1234", "12U34"),
        ("12U34", "34U12"),
        ("34U12", "3421"),
        ("3421", "2341"),
        ("2341", "2314"),
        ("2314", "1234"),
        ("1324", "13U24"),
        ("13U24", "24U13"),
        ("24U13", "2413"),
        ("2413", "1243"),
        ("1423", "14U23"),
        ("14U23", "23U14"),
        ("23U14", "2314"),
        ("1342", "3412"),
        ("3412", "34U12"),
        ("2413", "2431"),
        ("2431", "2341"),
    ],
};

/// Cord of `Y((3,2,1))` under `λ_T`, `T = 146/25/3`; tableaux written as
/// their six entries in row reading order.
pub const Y321_CORD: Drawing = Drawing {
    nodes: &[
        ("146253", 0),
        ("136254", 2),
        ("145263", 2),
        ("126354", 4),
        ("136245", 4),
        ("135264", 4),
        ("125364", 6),
        ("126345", 6),
        ("135246", 6),
        ("134265", 6),
        ("124365", 8),
        ("125346", 8),
        ("134256", 8),
        ("123465", 10),
        ("124356", 10),
        ("123456", 12),
    ],
    edges: &[
        ("146253", "136254"),
        ("136254", "126354"),
        ("126354", "125364"),
        ("125364", "124365"),
        ("124365", "123465"),
        ("123465", "123456"),
        ("123456", "124356"),
        ("124356", "134256"),
        ("134256", "134265"),
        ("134265", "135264"),
        ("135264", "145263"),
        ("145263", "146253"),
        ("136254", "136245"),
        ("136245", "126345"),
        ("126345", "125346"),
        ("125346", "124356"),
        ("136245", "135246"),
        ("135246", "125346"),
        ("124365", "124356"),
        ("135246", "134256"),
        ("135264", "125364"),
        ("136254", "135264"),
        ("134265", "124365"),
        ("126354", "126345"),
    ],
};

/// Cord of `Y((3,1))` under `λ_T`, `T = 124/3`.
pub const Y31_CORD: Drawing = Drawing {
    nodes: &[("1243", 0), ("1234", 3), ("1342", 3)],
    edges: &[("1243", "1234"), ("1243", "1342")],
};

/// The partitions along a named chain of `Π_4` (see [`PI4_MINIMAL_CORD`]),
/// in the `a|b|c` block notation.
pub fn pi4_chain(name: &str) -> Vec<String> {
    let d: Vec<char> = name.chars().filter(|c| c.is_ascii_digit()).collect();
    let block = |cs: &[char]| {
        let mut v = cs.to_vec();
        v.sort_unstable();
        v.into_iter().collect::<String>()
    };
    let rest = |used: &[char]| {
        let mut v: Vec<char> = ['1', '2', '3', '4'].into_iter().filter(|c| !used.contains(c)).collect();
        v.sort_unstable();
        v
    };
    let mut out = vec!["1|2|3|4".to_string()];
    let pair = block(&d[..2]);
    let others = rest(&d[..2]);
    out.push(format!("{pair}|{}|{}", others[0], others[1]));
    if name.contains('U') {
        out.push(format!("{pair}|{}", block(&d[2..])));
    } else {
        let triple = block(&d[..3]);
        out.push(format!("{triple}|{}", rest(&d[..3])[0]));
    }
    out.push("1234".to_string());
    out
}

/// A labeled poset used by the property suites.
pub struct Case {
    pub name: String,
    pub poset: shellab::Poset,
    pub labeling: shellab::Labeling,
    pub kind: shellab::LabelingKind,
}

/// Every figure fixture plus small members of each generated family.
pub fn cases() -> Vec<Case> {
    use shellab::families::*;
    use shellab::LabelingKind;
    let mut out: Vec<Case> = FIXTURE_NAMES
        .iter()
        .map(|name| {
            let f = fixture(name).unwrap();
            Case {
                name: name.to_string(),
                poset: f.poset,
                labeling: f.labeling,
                kind: f.kind,
            }
        })
        .collect();
    let el = |name: String, poset, labeling| Case {
        name,
        poset,
        labeling,
        kind: LabelingKind::El,
    };
    for n in 2..=4 {
        let (p, l) = boolean_lattice(n);
        out.push(el(format!("B_{n}"), p, l));
    }
    let (p, parts) = partition_lattice(4);
    let l = max_min_el(&p, &parts);
    out.push(el("Pi_4 max-min".into(), p.clone(), l));
    let b = p.bottom().unwrap();
    let atoms: Vec<usize> = p.upper_covers(b).to_vec();
    let l = minimal_labeling(&p, &atoms).unwrap();
    out.push(el("Pi_4 minimal".into(), p, l));
    for q in naturally_labeled_posets(4) {
        let e = q.linear_extensions().last().unwrap();
        let (p, l, _) = distributive_lattice(&q, &e).unwrap();
        out.push(el(format!("J(Q) covers={:?} e={e:?}", q.covers()), p, l));
    }
    for (shape, t) in [("3,2,1", "1,4,6/2,5/3"), ("3,1", "1,2,4/3"), ("3,2/1", "1,3/2,4")] {
        let shape = YoungShape::parse(shape).unwrap();
        let t = StandardTableau::parse(&shape, t).unwrap();
        let y = young_interval(&shape, &t).unwrap();
        out.push(el(format!("Y{shape} T={t}"), y.poset, y.labeling));
    }
    out
}

/// The same labeling with every label replaced by `f(label)`.
pub fn relabel(
    p: &shellab::Poset,
    lab: &shellab::Labeling,
    f: impl Fn(shellab::Label) -> shellab::Label,
) -> shellab::Labeling {
    let mut out = shellab::Labeling::empty(lab.lambda.clone(), p.covers().len());
    for id in 0..p.covers().len() {
        if let Some(l) = lab.edge_label(id) {
            out.set_edge(id, f(l));
        }
    }
    for (root, y, l) in lab.rooted_labels() {
        out.set_rooted(&root, y, f(l));
    }
    out
}

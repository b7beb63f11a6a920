//! Distributive lattices `J(Q)` of order ideals with the labelings induced
//! by linear extensions of `Q`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::families::permutation::Permutation;
use crate::labeling::{chain_labels, LabelPoset, Labeling};
use crate::poset::{are_isomorphic, Poset};

/// Name of an order ideal given by a bitmask over `Q`: the names of its
/// members (concatenated when all are one character, comma separated
/// otherwise), or `∅`.
pub fn ideal_name(q: &Poset, mask: u64) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    let members: Vec<&str> = (0..q.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| q.name(i))
        .collect();
    if members.iter().all(|m| m.chars().count() == 1) {
        members.concat()
    } else {
        members.join(",")
    }
}

/// All order ideals of `q` as bitmasks, ordered by size then mask.
pub fn order_ideals(q: &Poset) -> Vec<u64> {
    let n = q.len();
    assert!(n < 64, "order ideals are enumerated as 64-bit masks");
    let down: Vec<u64> = (0..n)
        .map(|x| q.down_set(x).ones().fold(0u64, |m, y| m | 1 << y))
        .collect();
    let mut seen = BTreeSet::new();
    let mut frontier = vec![0u64];
    seen.insert(0u64);
    while let Some(ideal) = frontier.pop() {
        for x in 0..n {
            if ideal >> x & 1 == 0 && down[x] & !(1 << x) & !ideal == 0 {
                let next = ideal | 1 << x;
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_by_key(|m| (m.count_ones(), *m));
    out
}

/// Positions `e(x)` (from 1) of the elements of `q` in the linear
/// extension `e`, given as a sequence of element indices.
pub fn extension_positions(q: &Poset, e: &[usize]) -> Result<Vec<usize>> {
    if !q.is_linear_extension(e) {
        return Err(Error::NotALinearExtension);
    }
    let mut pos = vec![0; q.len()];
    for (i, &x) in e.iter().enumerate() {
        pos[x] = i + 1;
    }
    Ok(pos)
}

/// `J(Q)` ordered by inclusion with `λ_e(I ⋖ I ∪ {x}) = e(x)`.
///
/// Element `i` of the result is the `i`-th ideal of [`order_ideals`]; the
/// mask list is returned alongside the poset.
pub fn distributive_lattice(q: &Poset, e: &[usize]) -> Result<(Poset, Labeling, Vec<u64>)> {
    let pos = extension_positions(q, e)?;
    let ideals = order_ideals(q);
    let index: HashMap<u64, usize> = ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut covers = Vec::new();
    for (i, &m) in ideals.iter().enumerate() {
        for x in 0..q.len() {
            if let Some(&j) = index.get(&(m | 1 << x)) {
                if m >> x & 1 == 0 {
                    covers.push((i, j));
                }
            }
        }
    }
    let names = ideals.iter().map(|&m| ideal_name(q, m)).collect();
    let p = Poset::from_covers(names, covers, true)?;
    let lab = Labeling::from_fn(&p, LabelPoset::Integers, |a, b| {
        let added = (ideals[b] & !ideals[a]).trailing_zeros() as usize;
        pos[added] as i64
    });
    Ok((p, lab, ideals))
}

/// `Lin(Q, e)`: label sequences of the maximal chains of `J(Q)` under
/// `λ_e`, sorted.
pub fn lin_labels(q: &Poset, e: &[usize]) -> Result<Vec<Permutation>> {
    let (p, lab, _) = distributive_lattice(q, e)?;
    let mut out = Vec::new();
    for m in p.maximal_chains()? {
        let word = chain_labels(&p, &lab, &m)?.into_iter().map(|l| l as usize).collect();
        out.push(Permutation::new(word)?);
    }
    out.sort();
    Ok(out)
}

/// All posets on `[k]` whose order relation is contained in the usual
/// order of integers (naturally labeled), one representative per
/// isomorphism class. Elements are named `1..=k`.
pub fn naturally_labeled_posets(k: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 32, "natural labelings are enumerated by subset masks");
    let names: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    let mut reps: Vec<Poset> = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let rel: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &pr)| pr)
            .collect();
        let has = |a: usize, b: usize| rel.contains(&(a, b));
        let transitive = rel
            .iter()
            .all(|&(a, b)| (b + 1..k).all(|c| !has(b, c) || has(a, c)));
        if !transitive {
            continue;
        }
        let q = Poset::from_relation(names.clone(), &rel, false).expect("acyclic relation");
        if !reps.iter().any(|r| are_isomorphic(r, &q).is_some()) {
            reps.push(q);
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain(n: usize) -> Poset {
        let names = (1..=n).map(|i| i.to_string()).collect();
        Poset::from_covers(names, vec![], false).unwrap()
    }

    #[test]
    fn antichain_gives_boolean_lattice() {
        let q = antichain(3);
        let (p, _, _) = distributive_lattice(&q, &[0, 1, 2]).unwrap();
        assert_eq!((p.len(), p.covers().len()), (8, 12));
        assert_eq!(lin_labels(&q, &[2, 0, 1]).unwrap().len(), 6);
    }

    #[test]
    fn chain_has_one_label_sequence() {
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        let q = Poset::from_covers(names, vec![(0, 1), (1, 2)], true).unwrap();
        assert_eq!(lin_labels(&q, &[0, 1, 2]).unwrap(), vec![Permutation::identity(3)]);
        assert_eq!(
            distributive_lattice(&q, &[1, 0, 2]).unwrap_err(),
            Error::NotALinearExtension
        );
    }

    #[test]
    fn poset_counts_up_to_isomorphism() {
        let counts: Vec<usize> = (1..=4).map(|k| naturally_labeled_posets(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }
}

//! Permutations in one-line notation, the right and left weak orders, and
//! generalized quotients.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A permutation of `[n]` in one-line notation (values `1..=n`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    /// Builds a permutation, checking that it is a bijection on `[n]`.
    pub fn new(word: Vec<usize>) -> Result<Permutation> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(format!("{word:?} is not a permutation")));
            }
        }
        Ok(Permutation(word))
    }

    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    /// The longest element `n … 2 1`.
    pub fn longest(n: usize) -> Permutation {
        Permutation((1..=n).rev().collect())
    }

    /// Size `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the permutation of the empty set.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of inversions, the Coxeter length `l(w)`.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Inversions as value pairs `(a, b)`, `a < b`, with `b` written before `a`.
    pub fn value_inversions(&self) -> Vec<(usize, usize)> {
        let w = &self.0;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((w[j], w[i]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Inversions as position pairs `(i, j)`, `i < j`, with `w(i) > w(j)`.
    pub fn position_inversions(&self) -> Vec<(usize, usize)> {
        let w = &self.0;
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Composition `(self ∘ v)(i) = self(v(i))`.
    pub fn compose(&self, v: &Permutation) -> Permutation {
        Permutation(v.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut r = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            r[v - 1] = i + 1;
        }
        Permutation(r)
    }

    /// Parses `"2,1,3"` or, for `n <= 9`, `"213"`.
    pub fn parse(s: &str) -> Result<Permutation> {
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Invalid(format!("bad permutation `{s}`")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Invalid(format!("bad permutation `{s}`")))?
        };
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    perm_rec(n, &mut cur, &mut used, &mut out);
    out
}

fn perm_rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if cur.len() == n {
        out.push(Permutation(cur.clone()));
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            cur.push(v);
            perm_rec(n, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
}

/// Right weak order on `S_n`: `w ⋖ w s_i` when positions `i, i+1` hold an
/// ascent. Elements are the permutations in lexicographic order, named by
/// their one-line words.
pub fn weak_order(n: usize) -> (Poset, Vec<Permutation>) {
    let perms = all_permutations(n);
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (i, w) in perms.iter().enumerate() {
        for k in 0..n.saturating_sub(1) {
            if w.0[k] < w.0[k + 1] {
                let mut u = w.0.clone();
                u.swap(k, k + 1);
                covers.push((i, index[&Permutation(u)]));
            }
        }
    }
    let names = perms.iter().map(|p| p.to_string()).collect();
    let p = Poset::from_covers(names, covers, true).expect("weak order is a bounded poset");
    (p, perms)
}

/// Left weak order on a set of permutations: the induced order in which
/// `u <= w` iff the position inversions of `u` are contained in those of `w`
/// (covers of the full order swap the values `i, i+1` when `i` comes first).
pub fn left_weak_subposet(perms: &[Permutation]) -> Poset {
    let invs: Vec<Vec<(usize, usize)>> = perms.iter().map(|p| p.position_inversions()).collect();
    let mut rel = Vec::new();
    for i in 0..perms.len() {
        for j in 0..perms.len() {
            if i != j && invs[i].iter().all(|x| invs[j].binary_search(x).is_ok()) {
                rel.push((i, j));
            }
        }
    }
    let names = perms.iter().map(|p| p.to_string()).collect();
    Poset::from_relation(names, &rel, false).expect("inversion containment is a partial order")
}

/// Right weak order restricted to a set of permutations (value-inversion
/// containment).
pub fn right_weak_subposet(perms: &[Permutation]) -> Poset {
    let invs: Vec<Vec<(usize, usize)>> = perms.iter().map(|p| p.value_inversions()).collect();
    let mut rel = Vec::new();
    for i in 0..perms.len() {
        for j in 0..perms.len() {
            if i != j && invs[i].iter().all(|x| invs[j].binary_search(x).is_ok()) {
                rel.push((i, j));
            }
        }
    }
    let names = perms.iter().map(|p| p.to_string()).collect();
    Poset::from_relation(names, &rel, false).expect("inversion containment is a partial order")
}

/// The generalized quotient `W/V = {w : l(wv) = l(w) + l(v) for all v ∈ V}`
/// in `S_n`, in lexicographic order, as an induced subposet of left weak
/// order.
pub fn generalized_quotient(n: usize, v: &[Permutation]) -> (Poset, Vec<Permutation>) {
    let members: Vec<Permutation> = all_permutations(n)
        .into_iter()
        .filter(|w| {
            v.iter()
                .all(|x| w.compose(x).length() == w.length() + x.length())
        })
        .collect();
    (left_weak_subposet(&members), members)
}

/// The set `{v : l(wv) = l(w) + l(v) for all w ∈ Q}`, the largest `V` with
/// `Q ⊆ W/V`.
pub fn length_additive_complement(n: usize, q: &[Permutation]) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(|v| {
            q.iter()
                .all(|w| w.compose(v).length() == w.length() + v.length())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_order_sizes() {
        let (p2, _) = weak_order(2);
        assert_eq!((p2.len(), p2.covers().len()), (2, 1));
        let (p3, _) = weak_order(3);
        assert_eq!((p3.len(), p3.covers().len()), (6, 6));
    }

    #[test]
    fn quotient_trivial_cases() {
        let (q, m) = generalized_quotient(3, &[Permutation::identity(3)]);
        assert_eq!(q.len(), 6);
        assert_eq!(m.len(), 6);
        let (_, m) = generalized_quotient(3, &[Permutation::longest(3)]);
        assert_eq!(m, vec![Permutation::identity(3)]);
    }

    #[test]
    fn compose_and_inverse() {
        let w = Permutation::parse("231").unwrap();
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::parse("2,1,3").unwrap().to_string(), "213");
    }
}

//! Rooted, unordered, decreasing, full binary forests and their bijection
//! with saturated chains of partition lattices starting at the bottom.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::families::partition::{merged_blocks, SetPartition};
use crate::poset::Poset;

/// A forest in `FPT(n, k)`: leaves `1..=n+1`, internal vertices
/// `n+2..=n+1+k`. `children[i]` holds the two children of vertex
/// `n+2+i`, smaller first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    n: usize,
    children: Vec<(usize, usize)>,
}

/// A tree in `PT(n) = FPT(n, n)`.
pub type DecreasingTree = Forest;

impl Forest {
    /// Builds and validates a forest from the children of each internal
    /// vertex, listed in vertex order.
    pub fn new(n: usize, children: Vec<(usize, usize)>) -> Result<Forest> {
        if children.len() > n {
            return Err(Error::Invalid("too many internal vertices".into()));
        }
        let mut has_parent = vec![false; n + 2 + children.len()];
        let mut canon = Vec::with_capacity(children.len());
        for (i, &(a, b)) in children.iter().enumerate() {
            let v = n + 2 + i;
            let (a, b) = (a.min(b), a.max(b));
            if a == 0 || a == b || b >= v {
                return Err(Error::Invalid(format!("vertex {v} must have two distinct smaller children")));
            }
            for c in [a, b] {
                if std::mem::replace(&mut has_parent[c], true) {
                    return Err(Error::Invalid(format!("vertex {c} has two parents")));
                }
            }
            canon.push((a, b));
        }
        Ok(Forest { n, children: canon })
    }

    /// The forest of `n + 1` isolated leaves.
    pub fn leaves(n: usize) -> Forest {
        Forest { n, children: Vec::new() }
    }

    /// The parameter `n` (leaves are `1..=n+1`).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number `k` of internal vertices.
    pub fn k(&self) -> usize {
        self.children.len()
    }

    /// Largest vertex label `n + 1 + k`.
    pub fn vertex_count(&self) -> usize {
        self.n + 1 + self.k()
    }

    /// Children of vertex `v`, or `None` for a leaf.
    pub fn children_of(&self, v: usize) -> Option<(usize, usize)> {
        (v >= self.n + 2).then(|| self.children.get(v - self.n - 2).copied()).flatten()
    }

    /// Children of all internal vertices, in vertex order.
    pub fn children(&self) -> &[(usize, usize)] {
        &self.children
    }

    /// Parent of `v`, if any.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.children
            .iter()
            .position(|&(a, b)| a == v || b == v)
            .map(|i| self.n + 2 + i)
    }

    /// Roots of the components, increasing.
    pub fn roots(&self) -> Vec<usize> {
        (1..=self.vertex_count()).filter(|&v| self.parent(v).is_none()).collect()
    }

    /// Leaf set `L(T^v)` of the full subtree rooted at `v`, sorted.
    pub fn leaf_set(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            match self.children_of(u) {
                Some((a, b)) => {
                    stack.push(a);
                    stack.push(b);
                }
                None => out.push(u),
            }
        }
        out.sort_unstable();
        out
    }

    fn fmt_vertex(&self, v: usize, out: &mut String) {
        out.push_str(&v.to_string());
        if let Some((a, b)) = self.children_of(v) {
            out.push('(');
            self.fmt_vertex(a, out);
            out.push(',');
            self.fmt_vertex(b, out);
            out.push(')');
        }
    }
}

impl fmt::Display for Forest {
    /// Nested notation, components separated by spaces, e.g. `7(3,6(2,5(1,4)))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .roots()
            .into_iter()
            .map(|r| {
                let mut s = String::new();
                self.fmt_vertex(r, &mut s);
                s
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All forests in `FPT(n, k)`, sorted.
pub fn enumerate_forests(n: usize, k: usize) -> Vec<Forest> {
    let mut out = Vec::new();
    let roots: Vec<usize> = (1..=n + 1).collect();
    forests_rec(n, k, &roots, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn forests_rec(n: usize, k: usize, roots: &[usize], children: &mut Vec<(usize, usize)>, out: &mut Vec<Forest>) {
    if children.len() == k {
        out.push(Forest {
            n,
            children: children.clone(),
        });
        return;
    }
    let v = n + 2 + children.len();
    for a in 0..roots.len() {
        for b in a + 1..roots.len() {
            let mut next: Vec<usize> = roots.iter().copied().filter(|&r| r != roots[a] && r != roots[b]).collect();
            next.push(v);
            children.push((roots[a], roots[b]));
            forests_rec(n, k, &next, children, out);
            children.pop();
        }
    }
}

/// All trees in `PT(n)`, sorted.
pub fn enumerate_trees(n: usize) -> Vec<DecreasingTree> {
    enumerate_forests(n, n)
}

/// The saturated chain `c(F)` of `Π_{n+1}` starting at the bottom.
pub fn tree_to_chain(f: &Forest) -> Vec<SetPartition> {
    let mut cur = SetPartition::singletons(f.n + 1);
    let mut chain = vec![cur.clone()];
    for &(a, b) in &f.children {
        cur = cur.merge(f.leaf_set(a)[0], f.leaf_set(b)[0]);
        chain.push(cur.clone());
    }
    chain
}

/// The forest `c^{-1}(chain)` for a saturated chain of `Π_{n+1}` starting
/// at `1|2|…|n+1`.
pub fn chain_to_tree(chain: &[SetPartition]) -> Result<Forest> {
    let first = chain.first().ok_or(Error::NotFromBottom)?;
    let n1 = first.ground_size();
    if *first != SetPartition::singletons(n1) || n1 == 0 {
        return Err(Error::NotFromBottom);
    }
    let n = n1 - 1;
    let mut root_of: HashMap<Vec<usize>, usize> = (1..=n1).map(|i| (vec![i], i)).collect();
    let mut children = Vec::new();
    for (step, w) in chain.windows(2).enumerate() {
        if w[1].ground_size() != n1 {
            return Err(Error::InvalidChain("partitions of different ground sets".into()));
        }
        let (b1, b2) = merged_blocks(&w[0], &w[1])
            .filter(|_| w[0].refines(&w[1]) && w[1].blocks().len() + 1 == w[0].blocks().len())
            .ok_or_else(|| Error::InvalidChain(format!("{} does not cover {}", w[1], w[0])))?;
        let (r1, r2) = (root_of[b1], root_of[b2]);
        let v = n + 2 + step;
        let mut merged = b1.to_vec();
        merged.extend_from_slice(b2);
        merged.sort_unstable();
        root_of.insert(merged, v);
        children.push((r1.min(r2), r1.max(r2)));
    }
    Forest::new(n, children)
}

/// `max(min L(T^v_1), min L(T^v_2))` for the internal vertex `v = n+1+i`,
/// `1 <= i <= k`.
pub fn tree_label(t: &Forest, i: usize) -> usize {
    let (a, b) = t.children_of(t.n + 1 + i).expect("internal vertex");
    t.leaf_set(a)[0].max(t.leaf_set(b)[0])
}

fn relabel(t: &Forest, f: impl Fn(usize) -> usize) -> Forest {
    let mut children = vec![(0, 0); t.k()];
    for (i, &(a, b)) in t.children.iter().enumerate() {
        let v = f(t.n + 2 + i);
        let (a, b) = (f(a), f(b));
        children[v - t.n - 2] = (a.min(b), a.max(b));
    }
    Forest { n: t.n, children }
}

/// Trees `S` with `T ⇀ S` at position `i` (swapping around the internal
/// vertices `n+1+i` and `n+2+i`), ignoring the label condition.
pub fn tree_moves_at(t: &Forest, i: usize) -> Vec<Forest> {
    let (u, v) = (t.n + 1 + i, t.n + 2 + i);
    let (Some((c1, c2)), Some((d1, d2))) = (t.children_of(u), t.children_of(v)) else {
        return Vec::new();
    };
    if d1 != u && d2 != u {
        let swapped = relabel(t, |x| if x == u { v } else if x == v { u } else { x });
        return vec![swapped];
    }
    let other = if d1 == u { d2 } else { d1 };
    let mut out = Vec::new();
    for (keep, moved) in [(c2, c1), (c1, c2)] {
        let mut children = t.children.clone();
        children[u - t.n - 2] = (keep.min(other), keep.max(other));
        children[v - t.n - 2] = (u.min(moved), u.max(moved));
        out.push(Forest { n: t.n, children });
    }
    out
}

/// `(PT(n), ⪯)`: closure of `T ⇀ S` where `S` arises by a label swap or a
/// subtree swap at position `i` and `tree_label(T, i) < tree_label(T, i+1)`.
pub fn tree_poset(n: usize) -> (Poset, Vec<DecreasingTree>) {
    let trees = enumerate_trees(n);
    let index: HashMap<&Forest, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rel = Vec::new();
    for (a, t) in trees.iter().enumerate() {
        for i in 1..n {
            if tree_label(t, i) < tree_label(t, i + 1) {
                for s in tree_moves_at(t, i) {
                    rel.push((a, index[&s]));
                }
            }
        }
    }
    let names = trees.iter().map(|t| t.to_string()).collect();
    let p = Poset::from_relation(names, &rel, false).expect("tree moves are acyclic");
    (p, trees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig10_tree() -> Forest {
        Forest::new(3, vec![(1, 4), (2, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn fig10_chain() {
        let chain: Vec<String> = tree_to_chain(&fig10_tree()).iter().map(|p| p.to_string()).collect();
        assert_eq!(chain, vec!["1|2|3|4", "14|2|3", "124|3", "1234"]);
        assert_eq!(fig10_tree().to_string(), "7(3,6(2,5(1,4)))");
        assert_eq!(tree_label(&fig10_tree(), 1), 4);
        assert_eq!(tree_label(&fig10_tree(), 2), 2);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_trees(3).len(), 18);
        assert_eq!(enumerate_forests(3, 0), vec![Forest::leaves(3)]);
        assert_eq!(enumerate_forests(3, 1).len(), 6);
    }

    #[test]
    fn round_trip() {
        for t in enumerate_trees(3) {
            assert_eq!(chain_to_tree(&tree_to_chain(&t)).unwrap(), t);
        }
        let not_bottom = vec![SetPartition::parse("12|3").unwrap()];
        assert_eq!(chain_to_tree(&not_bottom).unwrap_err(), Error::NotFromBottom);
    }

    #[test]
    fn moves_are_trees() {
        for t in enumerate_trees(3) {
            for i in 1..3 {
                for s in tree_moves_at(&t, i) {
                    assert!(Forest::new(3, s.children().to_vec()).is_ok());
                    assert_ne!(s, t);
                }
            }
        }
    }
}

//! Finite posets stored by their Hasse diagram, with a cached reachability
//! relation, closed intervals, chains, linear extensions and isomorphism
//! testing.
//!
//! Elements are opaque string identifiers with a canonical index (their
//! position in the element list); every "deterministic order" below refers to
//! that index.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A saturated chain, given as element indices from bottom to top.
pub type Chain = Vec<usize>;

/// A finite poset stored by its cover relations.
#[derive(Debug, Clone)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.covers == other.covers
    }
}

impl Eq for Poset {}

/// Builds a poset from named elements and named cover pairs.
///
/// Fails with [`Error::CycleDetected`] on cyclic input, [`Error::RedundantCover`]
/// when a pair is implied by the others, and [`Error::NotBounded`] when
/// `require_bounded` is set and the poset lacks a unique minimum or maximum.
pub fn build_poset<S: AsRef<str>>(
    elements: &[S],
    cover_pairs: &[(S, S)],
    require_bounded: bool,
) -> Result<Poset> {
    let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateElement(n.clone()));
        }
    }
    let mut pairs = Vec::with_capacity(cover_pairs.len());
    for (x, y) in cover_pairs {
        let xi = *index
            .get(x.as_ref())
            .ok_or_else(|| Error::UnknownElement(x.as_ref().to_string()))?;
        let yi = *index
            .get(y.as_ref())
            .ok_or_else(|| Error::UnknownElement(y.as_ref().to_string()))?;
        pairs.push((xi, yi));
    }
    Poset::from_covers(names, pairs, require_bounded)
}

impl Poset {
    /// Builds a poset from element names and cover pairs given by index.
    pub fn from_covers(
        names: Vec<String>,
        cover_pairs: Vec<(usize, usize)>,
        require_bounded: bool,
    ) -> Result<Poset> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let mut covers = cover_pairs;
        for &(x, y) in &covers {
            if x >= n || y >= n {
                return Err(Error::Invalid(format!("cover ({x}, {y}) out of range")));
            }
            if x == y {
                return Err(Error::CycleDetected);
            }
        }
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in &covers {
            up[x].push(y);
            down[y].push(x);
        }
        for v in down.iter_mut() {
            v.sort_unstable();
        }
        let order = topological_order(n, &up)?;
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &up[x] {
                set.union_with(&above[y]);
            }
            above[x] = set;
        }
        for &(x, y) in &covers {
            if up[x].iter().any(|&z| z != y && above[z].contains(y)) {
                return Err(Error::RedundantCover(names[x].clone(), names[y].clone()));
            }
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (x, set) in above.iter().enumerate() {
            for y in set.ones() {
                below[y].insert(x);
            }
        }
        let minimal: Vec<usize> = (0..n).filter(|&x| down[x].is_empty()).collect();
        let maximal: Vec<usize> = (0..n).filter(|&x| up[x].is_empty()).collect();
        let bottom = (minimal.len() == 1).then(|| minimal[0]);
        let top = (maximal.len() == 1).then(|| maximal[0]);
        if require_bounded && (bottom.is_none() || top.is_none()) {
            return Err(Error::NotBounded);
        }
        Ok(Poset {
            names,
            index,
            covers,
            up,
            down,
            above,
            below,
            bottom,
            top,
        })
    }

    /// Builds a poset from an arbitrary acyclic relation (not necessarily
    /// reduced); the covers are its transitive reduction.
    pub fn from_relation(
        names: Vec<String>,
        relation: &[(usize, usize)],
        require_bounded: bool,
    ) -> Result<Poset> {
        let covers = transitive_reduction(names.len(), relation)?;
        Poset::from_covers(names, covers, require_bounded)
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// True when the poset has no elements.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Element names in canonical index order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of element `i`.
    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Index of the element called `name`.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Cover pairs sorted by index; the position of a pair is its edge id.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Edge id of the cover `x ⋖ y`, if it is one.
    pub fn edge_id(&self, x: usize, y: usize) -> Option<usize> {
        self.covers.binary_search(&(x, y)).ok()
    }

    /// True iff `x ⋖ y`.
    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.edge_id(x, y).is_some()
    }

    /// Elements covering `x`, in increasing index order.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    /// Elements covered by `x`, in increasing index order.
    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// True iff `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    /// True iff `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// The principal up-set `{y : x <= y}`.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// The principal down-set `{y : y <= x}`.
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    /// The unique minimal element, when it exists.
    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    /// The unique maximal element, when it exists.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// True when there is a unique minimum and a unique maximum.
    pub fn is_bounded(&self) -> bool {
        self.bottom.is_some() && self.top.is_some()
    }

    fn bounds(&self) -> Result<(usize, usize)> {
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::NotBounded),
        }
    }

    /// Elements in a topological order, smallest index first among ties.
    pub fn topological_order(&self) -> Vec<usize> {
        topological_order(self.len(), &self.up).expect("poset is acyclic")
    }

    /// Number of pairs `x < y`.
    pub fn relation_count(&self) -> usize {
        self.above.iter().map(|s| s.count_ones(..) - 1).sum()
    }

    /// The closed interval `[x, y]` as a poset with inherited names.
    pub fn closed_interval(&self, x: usize, y: usize) -> Result<Poset> {
        self.closed_interval_map(x, y).map(|(p, _)| p)
    }

    /// The closed interval `[x, y]` together with the map from interval
    /// indices to indices of `self`.
    pub fn closed_interval_map(&self, x: usize, y: usize) -> Result<(Poset, Vec<usize>)> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.names[x].clone(),
                self.names[y].clone(),
            ));
        }
        let mut members = self.above[x].clone();
        members.intersect_with(&self.below[y]);
        let elems: Vec<usize> = members.ones().collect();
        let mut local = HashMap::with_capacity(elems.len());
        for (i, &e) in elems.iter().enumerate() {
            local.insert(e, i);
        }
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let mut covers = Vec::new();
        for &e in &elems {
            for &f in &self.up[e] {
                if let Some(&j) = local.get(&f) {
                    covers.push((local[&e], j));
                }
            }
        }
        let p = Poset::from_covers(names, covers, true)?;
        Ok((p, elems))
    }

    /// The induced subposet on `elems` (in the given order), with covers
    /// recomputed by transitive reduction.
    pub fn induced_subposet(&self, elems: &[usize]) -> Result<Poset> {
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let mut rel = Vec::new();
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                if i != j && self.leq(a, b) {
                    rel.push((i, j));
                }
            }
        }
        Poset::from_relation(names, &rel, false)
    }

    /// All saturated chains from `x` to `y`, in index-lexicographic order.
    pub fn saturated_chains(&self, x: usize, y: usize) -> Vec<Chain> {
        let mut out = Vec::new();
        if !self.leq(x, y) {
            return out;
        }
        let mut path = vec![x];
        self.chains_dfs(y, &mut path, &mut out);
        out
    }

    fn chains_dfs(&self, target: usize, path: &mut Chain, out: &mut Vec<Chain>) {
        let last = *path.last().expect("path is nonempty");
        if last == target {
            out.push(path.clone());
            return;
        }
        for &z in &self.up[last] {
            if self.leq(z, target) {
                path.push(z);
                self.chains_dfs(target, path, out);
                path.pop();
            }
        }
    }

    /// All maximal chains `0̂ ⋖ … ⋖ 1̂`, in index-lexicographic order.
    pub fn maximal_chains(&self) -> Result<Vec<Chain>> {
        let (b, t) = self.bounds()?;
        Ok(self.saturated_chains(b, t))
    }

    /// Iterator over all linear extensions, each exactly once, in
    /// index-lexicographic order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// True iff `seq` lists every element once, compatibly with the order.
    pub fn is_linear_extension(&self, seq: &[usize]) -> bool {
        if seq.len() != self.len() {
            return false;
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &e) in seq.iter().enumerate() {
            if e >= self.len() || pos[e] != usize::MAX {
                return false;
            }
            pos[e] = i;
        }
        self.covers.iter().all(|&(x, y)| pos[x] < pos[y])
    }

    /// The rank function, when the poset is ranked.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let mut rank = vec![usize::MAX; self.len()];
        for x in self.topological_order() {
            if self.down[x].is_empty() {
                rank[x] = 0;
                continue;
            }
            let r = rank[self.down[x][0]] + 1;
            if self.down[x].iter().any(|&w| rank[w] + 1 != r) {
                return None;
            }
            rank[x] = r;
        }
        Some(rank)
    }

    /// The least upper bound of `x` and `y`, when it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut ub = self.above[x].clone();
        ub.intersect_with(&self.above[y]);
        ub.ones().find(|&z| ub.is_subset(&self.above[z]))
    }

    /// The greatest lower bound of `x` and `y`, when it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut lb = self.below[x].clone();
        lb.intersect_with(&self.below[y]);
        lb.ones().find(|&z| lb.is_subset(&self.below[z]))
    }

    /// True when every pair has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        (0..self.len()).all(|x| {
            (x + 1..self.len()).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some())
        })
    }

    /// Hasse diagram in DOT, edges drawn upward.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let labels: Vec<String> = self.names.clone();
        hasse_dot(graph_name, &labels, &self.covers)
    }
}

/// Renders a Hasse diagram in DOT with the given vertex labels.
pub fn hasse_dot(graph_name: &str, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut s = format!("digraph \"{}\" {{\n  rankdir=BT;\n  node [shape=plaintext];\n", esc(graph_name));
    for (i, l) in labels.iter().enumerate() {
        s.push_str(&format!("  n{i} [label=\"{}\"];\n", esc(l)));
    }
    for &(x, y) in covers {
        s.push_str(&format!("  n{x} -> n{y} [arrowhead=none];\n"));
    }
    s.push_str("}\n");
    s
}

fn esc(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn topological_order(n: usize, up: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for succ in up {
        for &y in succ {
            indeg[y] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = heap.pop() {
        order.push(x);
        for &y in &up[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                heap.push(Reverse(y));
            }
        }
    }
    if order.len() != n {
        return Err(Error::CycleDetected);
    }
    Ok(order)
}

/// Reflexive-transitive closure of an acyclic relation on `0..n`, as up-set
/// bitsets: `closure[x]` contains `y` iff `x` reaches `y`.
pub fn transitive_closure(n: usize, relation: &[(usize, usize)]) -> Result<Vec<FixedBitSet>> {
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in relation {
        if a == b {
            return Err(Error::CycleDetected);
        }
        succ[a].push(b);
    }
    let order = topological_order(n, &succ)?;
    let mut reach = vec![FixedBitSet::with_capacity(n); n];
    for &x in order.iter().rev() {
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(x);
        for &y in &succ[x] {
            set.union_with(&reach[y]);
        }
        reach[x] = set;
    }
    Ok(reach)
}

/// The transitive reduction of an acyclic relation on `0..n`: the unique
/// minimal set of pairs with the same transitive closure, sorted.
pub fn transitive_reduction(n: usize, relation: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let reach = transitive_closure(n, relation)?;
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in relation {
        succ[a].push(b);
    }
    for s in succ.iter_mut() {
        s.sort_unstable();
        s.dedup();
    }
    let mut out = Vec::new();
    for (a, s) in succ.iter().enumerate() {
        for &b in s {
            if !s.iter().any(|&c| c != b && reach[c].contains(b)) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Iterator over the linear extensions of a poset.
#[derive(Debug)]
pub struct LinearExtensions<'a> {
    p: &'a Poset,
    indeg: Vec<usize>,
    seq: Vec<usize>,
    stack: Vec<(Vec<usize>, usize)>,
    started: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(p: &'a Poset) -> Self {
        let indeg = (0..p.len()).map(|x| p.down[x].len()).collect();
        LinearExtensions {
            p,
            indeg,
            seq: Vec::with_capacity(p.len()),
            stack: Vec::new(),
            started: false,
        }
    }

    fn available(&self) -> Vec<usize> {
        let mut placed = vec![false; self.p.len()];
        for &e in &self.seq {
            placed[e] = true;
        }
        (0..self.p.len())
            .filter(|&x| !placed[x] && self.indeg[x] == 0)
            .collect()
    }

    fn place(&mut self, x: usize) {
        self.seq.push(x);
        for &y in &self.p.up[x] {
            self.indeg[y] -= 1;
        }
    }

    fn unplace(&mut self) {
        let x = self.seq.pop().expect("sequence is nonempty");
        for &y in &self.p.up[x] {
            self.indeg[y] += 1;
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            if self.p.is_empty() {
                return Some(Vec::new());
            }
            let avail = self.available();
            self.stack.push((avail, 0));
        }
        loop {
            let cand = {
                let frame = self.stack.last_mut()?;
                if frame.1 >= frame.0.len() {
                    None
                } else {
                    frame.1 += 1;
                    Some(frame.0[frame.1 - 1])
                }
            };
            match cand {
                None => {
                    self.stack.pop();
                    if self.stack.is_empty() {
                        return None;
                    }
                    self.unplace();
                }
                Some(x) => {
                    self.place(x);
                    if self.seq.len() == self.p.len() {
                        let out = self.seq.clone();
                        self.unplace();
                        return Some(out);
                    }
                    let avail = self.available();
                    self.stack.push((avail, 0));
                }
            }
        }
    }
}

fn signature(p: &Poset, x: usize) -> (usize, usize, usize, usize) {
    (
        p.down[x].len(),
        p.up[x].len(),
        p.below[x].count_ones(..),
        p.above[x].count_ones(..),
    )
}

/// Searches for an isomorphism `P -> Q`, returned as the image index of each
/// element of `P`. Deterministic given the input orders.
pub fn are_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.covers.len() != q.covers.len() {
        return None;
    }
    let n = p.len();
    let sp: Vec<_> = (0..n).map(|x| signature(p, x)).collect();
    let sq: Vec<_> = (0..n).map(|x| signature(q, x)).collect();
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    // Visit elements of P in breadth-first order over the undirected Hasse
    // graph so that every element after the first of its component has an
    // already-placed neighbour constraining its image.
    let mut order = Vec::with_capacity(n);
    let mut anchor: Vec<Option<(usize, bool)>> = vec![None; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (&w, upward) in p.up[v]
                .iter()
                .map(|w| (w, true))
                .chain(p.down[v].iter().map(|w| (w, false)))
            {
                if !seen[w] {
                    seen[w] = true;
                    anchor[w] = Some((v, upward));
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if iso_search(p, q, &sp, &sq, &order, &anchor, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    p: &Poset,
    q: &Poset,
    sp: &[(usize, usize, usize, usize)],
    sq: &[(usize, usize, usize, usize)],
    order: &[usize],
    anchor: &[Option<(usize, bool)>],
    k: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    let candidates: Vec<usize> = match anchor[v] {
        Some((u, true)) => q.up[map[u]].clone(),
        Some((u, false)) => q.down[map[u]].clone(),
        None => (0..q.len()).collect(),
    };
    for c in candidates {
        if used[c] || sp[v] != sq[c] {
            continue;
        }
        if !neighbours_consistent(p, q, map, used, v, c) {
            continue;
        }
        map[v] = c;
        used[c] = true;
        if iso_search(p, q, sp, sq, order, anchor, k + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[c] = false;
    }
    false
}

fn neighbours_consistent(
    p: &Poset,
    q: &Poset,
    map: &[usize],
    used: &[bool],
    v: usize,
    c: usize,
) -> bool {
    let mut placed = 0;
    for &w in &p.up[v] {
        if map[w] != usize::MAX {
            placed += 1;
            if !q.is_cover(c, map[w]) {
                return false;
            }
        }
    }
    for &w in &p.down[v] {
        if map[w] != usize::MAX {
            placed += 1;
            if !q.is_cover(map[w], c) {
                return false;
            }
        }
    }
    // Q-neighbours of c that are images must come from P-neighbours of v.
    let images = q.up[c]
        .iter()
        .chain(q.down[c].iter())
        .filter(|&&w| used[w])
        .count();
    images == placed
}

/// True iff `mapping` (image index of each element of `P`) is a bijection onto
/// `Q` that preserves and reflects the order.
pub fn verify_map_isomorphism(p: &Poset, q: &Poset, mapping: &[usize]) -> bool {
    if p.len() != q.len() || mapping.len() != p.len() {
        return false;
    }
    let mut hit = vec![false; q.len()];
    for &m in mapping {
        if m >= q.len() || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    (0..p.len()).all(|x| (0..p.len()).all(|y| p.leq(x, y) == q.leq(mapping[x], mapping[y])))
}

//! Edge labelings and chain-edge labelings into a label poset Λ: label
//! sequences, descents, lexicographic comparison, validation of the EL/CL
//! axioms, restriction to rooted intervals, and the S_n / polygon strong
//! predicates.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::{Chain, Poset};

/// A label: an integer, or an element index when Λ is a finite poset.
pub type Label = i64;

/// The poset Λ that labels take values in.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LabelPoset {
    /// The integers with their usual total order.
    #[default]
    Integers,
    /// A finite poset; labels are element indices.
    Finite(Poset),
}

impl LabelPoset {
    /// True iff `a <= b` in Λ.
    pub fn leq(&self, a: Label, b: Label) -> bool {
        match self {
            LabelPoset::Integers => a <= b,
            LabelPoset::Finite(p) => p.leq(a as usize, b as usize),
        }
    }

    /// True iff `a < b` in Λ.
    pub fn lt(&self, a: Label, b: Label) -> bool {
        a != b && self.leq(a, b)
    }

    /// Comparison in Λ, `None` when incomparable.
    pub fn compare(&self, a: Label, b: Label) -> Option<Ordering> {
        if a == b {
            Some(Ordering::Equal)
        } else if self.leq(a, b) {
            Some(Ordering::Less)
        } else if self.leq(b, a) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Parses a label written as text.
    pub fn parse(&self, s: &str) -> Result<Label> {
        match self {
            LabelPoset::Integers => s
                .trim()
                .parse::<Label>()
                .map_err(|_| Error::Invalid(format!("label `{s}` is not an integer"))),
            LabelPoset::Finite(p) => p.index_of(s).map(|i| i as Label),
        }
    }

    /// Renders a label as text.
    pub fn display(&self, l: Label) -> String {
        match self {
            LabelPoset::Integers => l.to_string(),
            LabelPoset::Finite(p) => p.name(l as usize).to_string(),
        }
    }
}

/// Whether a labeling is read as an EL-labeling or a CL-labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelingKind {
    /// Edge labeling: labels depend on the cover only.
    El,
    /// Chain-edge labeling: labels may depend on the root chain below.
    Cl,
}

/// An edge labeling, optionally overridden per root chain (a chain-edge
/// labeling). Edge labels are indexed by the edge ids of the poset the
/// labeling was built for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    /// The label poset Λ.
    pub lambda: LabelPoset,
    edge: Vec<Option<Label>>,
    rooted: HashMap<Vec<usize>, Label>,
}

impl Labeling {
    /// An edge labeling given by one label per edge id of `p`.
    pub fn edge_labeling(lambda: LabelPoset, labels: Vec<Label>) -> Labeling {
        Labeling {
            lambda,
            edge: labels.into_iter().map(Some).collect(),
            rooted: HashMap::new(),
        }
    }

    /// An edge labeling computed from a function of the cover `(x, y)`.
    pub fn from_fn(p: &Poset, lambda: LabelPoset, f: impl Fn(usize, usize) -> Label) -> Labeling {
        let labels = p.covers().iter().map(|&(x, y)| f(x, y)).collect();
        Labeling::edge_labeling(lambda, labels)
    }

    /// A labeling with `edge_count` unset edges and no rooted labels.
    pub fn empty(lambda: LabelPoset, edge_count: usize) -> Labeling {
        Labeling {
            lambda,
            edge: vec![None; edge_count],
            rooted: HashMap::new(),
        }
    }

    /// Sets the root-independent label of edge `id`.
    pub fn set_edge(&mut self, id: usize, label: Label) {
        self.edge[id] = Some(label);
    }

    /// Sets the label of the cover `root.last() ⋖ y` when read along `root`
    /// (a saturated chain starting at 0̂).
    pub fn set_rooted(&mut self, root: &[usize], y: usize, label: Label) {
        let mut key = root.to_vec();
        key.push(y);
        self.rooted.insert(key, label);
    }

    /// True when no label depends on its root.
    pub fn is_edge_labeling(&self) -> bool {
        self.rooted.is_empty()
    }

    /// Root-independent label of edge `id`, if set.
    pub fn edge_label(&self, id: usize) -> Option<Label> {
        self.edge.get(id).copied().flatten()
    }

    /// Rooted overrides as `(root, y, label)`, sorted.
    pub fn rooted_labels(&self) -> Vec<(Vec<usize>, usize, Label)> {
        let mut v: Vec<_> = self
            .rooted
            .iter()
            .map(|(k, &l)| (k[..k.len() - 1].to_vec(), k[k.len() - 1], l))
            .collect();
        v.sort();
        v
    }

    /// Label of the cover `root.last() ⋖ y` read along `root`.
    pub fn label(&self, p: &Poset, root: &[usize], y: usize) -> Result<Label> {
        let x = *root
            .last()
            .ok_or_else(|| Error::InvalidChain("empty root".into()))?;
        if !self.rooted.is_empty() {
            let mut key = Vec::with_capacity(root.len() + 1);
            key.extend_from_slice(root);
            key.push(y);
            if let Some(&l) = self.rooted.get(&key) {
                return Ok(l);
            }
        }
        p.edge_id(x, y)
            .and_then(|id| self.edge_label(id))
            .ok_or_else(|| Error::MissingLabel(p.name(x).to_string(), p.name(y).to_string()))
    }

    /// Root-independent label of the cover `x ⋖ y` (rooted overrides ignored).
    pub fn el_label(&self, p: &Poset, x: usize, y: usize) -> Result<Label> {
        self.label(p, &[x], y)
    }
}

/// Result of comparing two label sequences lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexOrder {
    /// First sequence precedes the second.
    Less,
    /// First sequence follows the second.
    Greater,
    /// Identical sequences.
    Equal,
    /// The first differing labels are incomparable in Λ.
    Incomparable,
}

/// Compares label sequences by their first difference; a proper prefix
/// compares `Less`.
pub fn lex_compare(a: &[Label], b: &[Label], lambda: &LabelPoset) -> LexOrder {
    for (&x, &y) in a.iter().zip(b) {
        if x != y {
            return match lambda.compare(x, y) {
                Some(Ordering::Less) => LexOrder::Less,
                Some(Ordering::Greater) => LexOrder::Greater,
                _ => LexOrder::Incomparable,
            };
        }
    }
    match a.len().cmp(&b.len()) {
        Ordering::Less => LexOrder::Less,
        Ordering::Greater => LexOrder::Greater,
        Ordering::Equal => LexOrder::Equal,
    }
}

/// Checks that `chain` is saturated in `p`.
pub fn check_saturated(p: &Poset, chain: &[usize]) -> Result<()> {
    if chain.is_empty() {
        return Err(Error::InvalidChain("empty chain".into()));
    }
    for w in chain.windows(2) {
        if !p.is_cover(w[0], w[1]) {
            return Err(Error::InvalidChain(format!(
                "{} is not covered by {}",
                p.name(w[0]),
                p.name(w[1])
            )));
        }
    }
    Ok(())
}

/// Label sequence of `chain`, read along `root` (a saturated chain from 0̂
/// ending at the first element of `chain`).
pub fn label_sequence(
    p: &Poset,
    labeling: &Labeling,
    chain: &[usize],
    root: &[usize],
) -> Result<Vec<Label>> {
    if chain.is_empty() {
        return Ok(Vec::new());
    }
    if root.last() != Some(&chain[0]) {
        return Err(Error::InvalidChain("root does not end at the chain's bottom".into()));
    }
    let mut path = root.to_vec();
    let mut out = Vec::with_capacity(chain.len() - 1);
    for &y in &chain[1..] {
        out.push(labeling.label(p, &path, y)?);
        path.push(y);
    }
    Ok(out)
}

/// Label sequence of a maximal chain (rooted at its own bottom element).
pub fn chain_labels(p: &Poset, labeling: &Labeling, m: &[usize]) -> Result<Vec<Label>> {
    if m.is_empty() {
        return Ok(Vec::new());
    }
    label_sequence(p, labeling, m, &m[..1])
}

/// Positions `i` (1-based, interior) with `λ_i ≰ λ_{i+1}`.
pub fn descent_positions(labels: &[Label], lambda: &LabelPoset) -> Vec<usize> {
    (1..labels.len())
        .filter(|&i| !lambda.leq(labels[i - 1], labels[i]))
        .collect()
}

/// True when the label sequence has no descents.
pub fn is_ascending(labels: &[Label], lambda: &LabelPoset) -> bool {
    labels.windows(2).all(|w| lambda.leq(w[0], w[1]))
}

/// The descent elements of `chain` read along `root`.
pub fn descents(
    p: &Poset,
    labeling: &Labeling,
    chain: &[usize],
    root: &[usize],
) -> Result<Vec<usize>> {
    let labels = label_sequence(p, labeling, chain, root)?;
    Ok(descent_positions(&labels, &labeling.lambda)
        .into_iter()
        .map(|i| chain[i])
        .collect())
}

/// The first saturated chain from 0̂ to `x` in index-lexicographic order.
pub fn canonical_root(p: &Poset, x: usize) -> Result<Chain> {
    let b = p.bottom().ok_or(Error::NotBounded)?;
    let mut chain = vec![b];
    while *chain.last().expect("nonempty") != x {
        let cur = *chain.last().expect("nonempty");
        let next = p
            .upper_covers(cur)
            .iter()
            .copied()
            .find(|&z| p.leq(z, x))
            .ok_or_else(|| Error::NotComparable(p.name(b).into(), p.name(x).into()))?;
        chain.push(next);
    }
    Ok(chain)
}

/// Labeled saturated chains grouped by their top element.
type ChainsByTop = HashMap<usize, Vec<(Chain, Vec<Label>)>>;

/// Every saturated chain from `root.last()` with its label sequence read
/// along `root`, grouped by the chain's top element.
fn chains_from(
    p: &Poset,
    labeling: &Labeling,
    root: &[usize],
) -> Result<ChainsByTop> {
    let mut out = ChainsByTop::new();
    let mut path = root.to_vec();
    let start = root.len() - 1;
    let mut labels = Vec::new();
    chains_from_dfs(p, labeling, start, &mut path, &mut labels, &mut out)?;
    Ok(out)
}

fn chains_from_dfs(
    p: &Poset,
    labeling: &Labeling,
    start: usize,
    path: &mut Vec<usize>,
    labels: &mut Vec<Label>,
    out: &mut ChainsByTop,
) -> Result<()> {
    let last = *path.last().expect("nonempty");
    if path.len() > start + 1 {
        out.entry(last)
            .or_default()
            .push((path[start..].to_vec(), labels.clone()));
    }
    for &z in p.upper_covers(last) {
        let l = labeling.label(p, path, z)?;
        path.push(z);
        labels.push(l);
        chains_from_dfs(p, labeling, start, path, labels, out)?;
        path.pop();
        labels.pop();
    }
    Ok(())
}

/// The unique ascending saturated chain from `root.last()` to `z`, read along
/// `root`; the first found in index order when the labeling is not valid.
pub fn ascending_chain(
    p: &Poset,
    labeling: &Labeling,
    root: &[usize],
    z: usize,
) -> Result<Option<Chain>> {
    let x = *root
        .last()
        .ok_or_else(|| Error::InvalidChain("empty root".into()))?;
    if !p.leq(x, z) {
        return Err(Error::NotComparable(p.name(x).into(), p.name(z).into()));
    }
    let mut path = root.to_vec();
    let start = root.len() - 1;
    let found = asc_dfs(p, labeling, z, &mut path, None)?;
    Ok(found.then(|| path[start..].to_vec()))
}

fn asc_dfs(
    p: &Poset,
    labeling: &Labeling,
    target: usize,
    path: &mut Vec<usize>,
    prev: Option<Label>,
) -> Result<bool> {
    let last = *path.last().expect("nonempty");
    if last == target {
        return Ok(true);
    }
    for &z in p.upper_covers(last) {
        if !p.leq(z, target) {
            continue;
        }
        let l = labeling.label(p, path, z)?;
        if let Some(pl) = prev {
            if !labeling.lambda.leq(pl, l) {
                continue;
            }
        }
        path.push(z);
        if asc_dfs(p, labeling, target, path, Some(l))? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Outcome of checking one (rooted) closed interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCheck {
    /// Root chain from 0̂ to `x`.
    pub root: Chain,
    /// Interval bottom.
    pub x: usize,
    /// Interval top.
    pub y: usize,
    /// Number of maximal chains of the interval.
    pub chains: usize,
    /// Number of ascending maximal chains.
    pub ascending: usize,
    /// Whether the ascending chain strictly precedes every other chain.
    pub ascending_lex_first: bool,
}

impl IntervalCheck {
    /// True when the interval satisfies the EL/CL axiom.
    pub fn passes(&self) -> bool {
        self.ascending == 1 && self.ascending_lex_first
    }
}

/// Validation report: number of intervals checked and the failing ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Labeling kind that was checked.
    pub kind: LabelingKind,
    /// Overall verdict.
    pub valid: bool,
    /// Number of (rooted) intervals examined.
    pub intervals_checked: usize,
    /// Intervals violating the axiom.
    pub failures: Vec<IntervalCheck>,
    /// Structural problems (missing labels, root-dependent labels in an EL).
    pub notes: Vec<String>,
}

/// Checks that every (rooted) closed interval has a unique ascending maximal
/// chain that lexicographically strictly precedes all others.
pub fn validate_labeling(p: &Poset, labeling: &Labeling, kind: LabelingKind) -> ValidationReport {
    let mut report = ValidationReport {
        kind,
        valid: true,
        intervals_checked: 0,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    let Some(bottom) = p.bottom().filter(|_| p.top().is_some()) else {
        report.valid = false;
        report.notes.push(Error::NotBounded.to_string());
        return report;
    };
    if kind == LabelingKind::El && !labeling.is_edge_labeling() {
        report.valid = false;
        report
            .notes
            .push("labels depend on the root; validate as a CL-labeling".into());
        return report;
    }
    let roots: Vec<Chain> = match kind {
        LabelingKind::El => (0..p.len())
            .filter_map(|x| canonical_root(p, x).ok())
            .collect(),
        LabelingKind::Cl => {
            let mut roots = Vec::new();
            collect_roots(p, &mut vec![bottom], &mut roots);
            roots
        }
    };
    for root in roots {
        let x = *root.last().expect("nonempty");
        let by_top = match chains_from(p, labeling, &root) {
            Ok(m) => m,
            Err(e) => {
                report.valid = false;
                report.notes.push(e.to_string());
                return report;
            }
        };
        let mut tops: Vec<usize> = by_top.keys().copied().collect();
        tops.sort_unstable();
        for y in tops {
            let chains = &by_top[&y];
            let asc: Vec<usize> = (0..chains.len())
                .filter(|&i| is_ascending(&chains[i].1, &labeling.lambda))
                .collect();
            let lex_first = asc.len() == 1
                && chains.iter().enumerate().all(|(i, c)| {
                    i == asc[0] || lex_compare(&chains[asc[0]].1, &c.1, &labeling.lambda) == LexOrder::Less
                });
            let check = IntervalCheck {
                root: root.clone(),
                x,
                y,
                chains: chains.len(),
                ascending: asc.len(),
                ascending_lex_first: lex_first,
            };
            report.intervals_checked += 1;
            if !check.passes() {
                report.valid = false;
                report.failures.push(check);
            }
        }
    }
    report
}

/// All saturated chains starting at `path[0]`, including the trivial one.
pub(crate) fn collect_roots(p: &Poset, path: &mut Chain, out: &mut Vec<Chain>) {
    out.push(path.clone());
    let last = *path.last().expect("nonempty");
    for &z in p.upper_covers(last) {
        path.push(z);
        collect_roots(p, path, out);
        path.pop();
    }
}

/// A labeled closed interval produced by [`restrict`].
#[derive(Debug, Clone)]
pub struct Restriction {
    /// The interval `[x, y]` as a poset.
    pub poset: Poset,
    /// The induced labeling on the interval (rooted labels re-based on the
    /// given root).
    pub labeling: Labeling,
    /// Map from interval indices to parent indices.
    pub map: Vec<usize>,
}

/// Restricts a labeling to the rooted interval `[x, y]_root`, where `root`
/// is a saturated chain from 0̂ to `x`.
pub fn restrict(p: &Poset, labeling: &Labeling, root: &[usize], y: usize) -> Result<Restriction> {
    let x = *root
        .last()
        .ok_or_else(|| Error::InvalidChain("empty root".into()))?;
    check_saturated(p, root)?;
    let (sub, map) = p.closed_interval_map(x, y)?;
    let mut lab = Labeling::empty(labeling.lambda.clone(), sub.covers().len());
    if labeling.is_edge_labeling() {
        for (id, &(a, b)) in sub.covers().iter().enumerate() {
            lab.set_edge(id, labeling.el_label(p, map[a], map[b])?);
        }
    } else {
        let sb = sub.bottom().expect("interval is bounded");
        let mut local_roots = Vec::new();
        collect_roots(&sub, &mut vec![sb], &mut local_roots);
        for lr in local_roots {
            let mut parent_root = root.to_vec();
            parent_root.extend(lr[1..].iter().map(|&i| map[i]));
            let last = *lr.last().expect("nonempty");
            for &z in sub.upper_covers(last) {
                lab.set_rooted(&lr, z, labeling.label(p, &parent_root, map[z])?);
            }
        }
    }
    Ok(Restriction {
        poset: sub,
        labeling: lab,
        map,
    })
}

/// True iff `p` is ranked of rank `n` and, after order-isomorphic
/// standardization of the labels used, every maximal chain's label sequence
/// is a permutation of `[n]`.
pub fn is_sn_el(p: &Poset, labeling: &Labeling) -> bool {
    let Some(rank) = p.rank_function() else {
        return false;
    };
    let Some(top) = p.top() else { return false };
    let n = rank[top];
    let Ok(chains) = p.maximal_chains() else {
        return false;
    };
    let mut seqs = Vec::with_capacity(chains.len());
    for m in &chains {
        match chain_labels(p, labeling, m) {
            Ok(s) => seqs.push(s),
            Err(_) => return false,
        }
    }
    let mut used: Vec<Label> = seqs.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    if used.len() != n {
        return false;
    }
    for (i, &a) in used.iter().enumerate() {
        for &b in &used[i + 1..] {
            if labeling.lambda.compare(a, b).is_none() {
                return false;
            }
        }
    }
    seqs.iter().all(|s| {
        let mut t = s.clone();
        t.sort_unstable();
        t.dedup();
        t.len() == n
    })
}

/// Order-isomorphic standardization of a label sequence to `1..=k`, given
/// the sorted set of labels in use.
pub fn standardize(seq: &[Label], used_sorted: &[Label]) -> Vec<usize> {
    seq.iter()
        .map(|l| used_sorted.binary_search(l).expect("label in use") + 1)
        .collect()
}

/// Verdict of [`is_polygon_strong`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonStrongReport {
    /// Whether the labeling is polygon strong.
    pub strong: bool,
    /// A violating descent `(x, y, z)`.
    pub counterexample: Option<(usize, usize, usize)>,
}

/// Checks that for every descent `x ⋖ y ⋖ z`, `λ(y, z) < λ(y', z)` where `y'`
/// is the coatom of `[x, z]` on its ascending chain.
pub fn is_polygon_strong(p: &Poset, labeling: &Labeling) -> Result<PolygonStrongReport> {
    for x in 0..p.len() {
        let root = canonical_root(p, x)?;
        for &y in p.upper_covers(x) {
            let l1 = labeling.label(p, &root, y)?;
            let mut ry = root.clone();
            ry.push(y);
            for &z in p.upper_covers(y) {
                let l2 = labeling.label(p, &ry, z)?;
                if labeling.lambda.leq(l1, l2) {
                    continue;
                }
                let asc = ascending_chain(p, labeling, &root, z)?;
                let ok = match asc {
                    Some(c) if c.len() >= 3 => {
                        let yp = c[c.len() - 2];
                        let mut rp = root.clone();
                        rp.extend_from_slice(&c[1..c.len() - 1]);
                        let l3 = labeling.label(p, &rp, z)?;
                        debug_assert_eq!(*rp.last().expect("nonempty"), yp);
                        labeling.lambda.lt(l2, l3)
                    }
                    _ => false,
                };
                if !ok {
                    return Ok(PolygonStrongReport {
                        strong: false,
                        counterexample: Some((x, y, z)),
                    });
                }
            }
        }
    }
    Ok(PolygonStrongReport {
        strong: true,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;

    fn b2(l: [Label; 4]) -> (Poset, Labeling) {
        let p = build_poset(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            true,
        )
        .unwrap();
        let map: HashMap<(usize, usize), Label> = [
            ((0, 1), l[0]),
            ((1, 3), l[1]),
            ((0, 2), l[2]),
            ((2, 3), l[3]),
        ]
        .into_iter()
        .collect();
        let lab = Labeling::from_fn(&p, LabelPoset::Integers, |x, y| map[&(x, y)]);
        (p, lab)
    }

    #[test]
    fn lex_examples() {
        let z = LabelPoset::Integers;
        assert_eq!(lex_compare(&[1, 2, 3], &[1, 3, 2], &z), LexOrder::Less);
        assert_eq!(lex_compare(&[1, 2, 3], &[1, 2, 3], &z), LexOrder::Equal);
        assert_eq!(lex_compare(&[1, 2], &[1, 2, 0], &z), LexOrder::Less);
        assert_eq!(lex_compare(&[3, 2], &[1, 2], &z), LexOrder::Greater);
    }

    #[test]
    fn descents_of_sequences() {
        let z = LabelPoset::Integers;
        assert!(descent_positions(&[1, 2, 3], &z).is_empty());
        assert_eq!(descent_positions(&[3, 2, 1], &z), vec![1, 2]);
        assert!(descent_positions(&[], &z).is_empty());
    }

    #[test]
    fn two_ascending_chains_is_invalid() {
        let (p, lab) = b2([1, 1, 1, 1]);
        let r = validate_labeling(&p, &lab, LabelingKind::El);
        assert!(!r.valid);
        assert!(r.failures.iter().any(|f| f.ascending == 2));
    }

    #[test]
    fn diamond_inversion_example_is_not_strong() {
        let (p, lab) = b2([1, 2, 4, 3]);
        assert!(validate_labeling(&p, &lab, LabelingKind::El).valid);
        let r = is_polygon_strong(&p, &lab).unwrap();
        assert!(!r.strong);
        assert_eq!(r.counterexample, Some((0, 2, 3)));
    }

    #[test]
    fn rank_one_is_strong() {
        let p = build_poset(&["0", "1"], &[("0", "1")], true).unwrap();
        let lab = Labeling::edge_labeling(LabelPoset::Integers, vec![7]);
        assert!(is_polygon_strong(&p, &lab).unwrap().strong);
        assert!(validate_labeling(&p, &lab, LabelingKind::El).valid);
        assert!(validate_labeling(&p, &lab, LabelingKind::Cl).valid);
    }

    #[test]
    fn missing_label_is_reported() {
        let (p, _) = b2([1, 2, 3, 4]);
        let lab = Labeling::empty(LabelPoset::Integers, 4);
        assert!(matches!(
            label_sequence(&p, &lab, &[0, 1, 3], &[0]),
            Err(Error::MissingLabel(_, _))
        ));
        assert!(label_sequence(&p, &lab, &[], &[0]).unwrap().is_empty());
    }
}

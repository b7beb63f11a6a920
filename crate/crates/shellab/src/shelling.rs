//! Order complexes, shelling verification under the codimension-one and the
//! restriction-partition characterizations, descent restriction maps,
//! homology facets, and the check that linear extensions of Cord are exactly
//! the shellings whose restriction map is the descent map.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::descent_order::{downward_cover_counts, McdOrder};
use crate::error::{Error, Result};
use crate::labeling::{lex_compare, LexOrder};
use crate::poset::Poset;

/// Order complex: facets are maximal chains, stored as sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComplex {
    /// Facets, one per maximal chain of the poset (same order).
    pub facets: Vec<Vec<usize>>,
}

/// The order complex of `p`, or of its proper part when `drop_bounds` is set.
pub fn order_complex(p: &Poset, drop_bounds: bool) -> Result<OrderComplex> {
    let chains = p.maximal_chains()?;
    let (b, t) = (p.bottom(), p.top());
    let facets = chains
        .into_iter()
        .map(|c| {
            let mut f: Vec<usize> = c
                .into_iter()
                .filter(|&e| !(drop_bounds && (Some(e) == b || Some(e) == t)))
                .collect();
            f.sort_unstable();
            f
        })
        .collect();
    Ok(OrderComplex { facets })
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn check_order(complex: &OrderComplex, order: &[usize]) -> bool {
    let mut seen = vec![false; complex.facets.len()];
    order.len() == complex.facets.len()
        && order.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
}

/// Definitional shelling check: for `j > 1`, the subcomplex
/// `F̄_j ∩ (∪_{i<j} F̄_i)` is pure of dimension `dim F_j − 1` (the empty face
/// counts, so a single-vertex facet meeting nothing earlier passes).
pub fn is_shelling_codim1(complex: &OrderComplex, facet_order: &[usize]) -> bool {
    if !check_order(complex, facet_order) {
        return false;
    }
    for j in 1..facet_order.len() {
        let fj = &complex.facets[facet_order[j]];
        let mut inters: Vec<Vec<usize>> = facet_order[..j]
            .iter()
            .map(|&i| intersect(fj, &complex.facets[i]))
            .collect();
        inters.sort();
        inters.dedup();
        let maximal = inters
            .iter()
            .filter(|a| !inters.iter().any(|b| b.len() > a.len() && is_subset(a, b)));
        for face in maximal {
            if face.len() + 1 != fj.len() {
                return false;
            }
        }
    }
    true
}

/// Restriction map of a facet order, indexed by facet:
/// `R(F_j) = {x ∈ F_j : F_j ∖ {x} lies in some earlier facet}`.
pub fn restriction_map(complex: &OrderComplex, facet_order: &[usize]) -> Vec<Vec<usize>> {
    let mut r = vec![Vec::new(); complex.facets.len()];
    for (j, &fj_idx) in facet_order.iter().enumerate() {
        let fj = &complex.facets[fj_idx];
        r[fj_idx] = fj
            .iter()
            .copied()
            .filter(|&x| {
                facet_order[..j].iter().any(|&i| {
                    let fi = &complex.facets[i];
                    fj.iter().all(|&v| v == x || fi.binary_search(&v).is_ok())
                })
            })
            .collect();
    }
    r
}

/// Descent restriction `R(m)` = the descent elements of each maximal chain
/// (sorted), indexed like the chains of `mcd`.
pub fn descent_restriction(mcd: &McdOrder) -> Vec<Vec<usize>> {
    (0..mcd.len())
        .map(|i| {
            let mut v: Vec<usize> = mcd.descents[i].iter().map(|&k| mcd.chains[i][k]).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// Outcome of the partition characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionVerdict {
    /// Every face lies in exactly one interval `[R(F_i), F_i]`.
    pub partition_ok: bool,
    /// `R(F_i) ⊆ F_j` implies `F_i` comes no later than `F_j`.
    pub containment_ok: bool,
}

/// Checks the partition and containment conditions for `(order, R)`, with
/// `r` indexed by facet.
pub fn partition_verdict(
    complex: &OrderComplex,
    facet_order: &[usize],
    r: &[Vec<usize>],
) -> PartitionVerdict {
    if !check_order(complex, facet_order) || r.len() != complex.facets.len() {
        return PartitionVerdict {
            partition_ok: false,
            containment_ok: false,
        };
    }
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    for f in &complex.facets {
        let k = f.len();
        for mask in 0u64..(1u64 << k) {
            faces.insert((0..k).filter(|&b| mask >> b & 1 == 1).map(|b| f[b]).collect());
        }
    }
    let mut partition_ok = r
        .iter()
        .zip(&complex.facets)
        .all(|(ri, fi)| is_subset(ri, fi));
    if partition_ok {
        for g in &faces {
            let hits = (0..complex.facets.len())
                .filter(|&i| is_subset(&r[i], g) && is_subset(g, &complex.facets[i]))
                .count();
            if hits != 1 {
                partition_ok = false;
                break;
            }
        }
    }
    let mut pos = vec![0usize; facet_order.len()];
    for (k, &i) in facet_order.iter().enumerate() {
        pos[i] = k;
    }
    let containment_ok = (0..complex.facets.len()).all(|i| {
        (0..complex.facets.len())
            .all(|j| !is_subset(&r[i], &complex.facets[j]) || pos[i] <= pos[j])
    });
    PartitionVerdict {
        partition_ok,
        containment_ok,
    }
}

/// True iff the faces are partitioned by the intervals `[R(F_i), F_i]` and
/// `R(F_i) ⊆ F_j` implies `i <= j` in the order.
pub fn verify_partition_characterization(
    complex: &OrderComplex,
    facet_order: &[usize],
    r: &[Vec<usize>],
) -> bool {
    let v = partition_verdict(complex, facet_order, r);
    v.partition_ok && v.containment_ok
}

/// Full shelling report for a facet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingReport {
    /// The facet order.
    pub order: Vec<usize>,
    /// Restriction face of each facet (indexed by facet).
    pub restriction: Vec<Vec<usize>>,
    /// Codimension-one shelling verdict.
    pub codim1_ok: bool,
    /// Partition verdict for the computed restriction map.
    pub partition_ok: bool,
    /// Containment verdict for the computed restriction map.
    pub containment_ok: bool,
    /// Facets with `R(F) = F`.
    pub homology_facets: Vec<usize>,
}

/// Computes the restriction map and both shelling verdicts for an order.
pub fn shelling_report(complex: &OrderComplex, facet_order: &[usize]) -> ShellingReport {
    let restriction = restriction_map(complex, facet_order);
    let codim1_ok = is_shelling_codim1(complex, facet_order);
    let v = partition_verdict(complex, facet_order, &restriction);
    let homology_facets = (0..complex.facets.len())
        .filter(|&i| restriction[i].len() == complex.facets[i].len())
        .collect();
    ShellingReport {
        order: facet_order.to_vec(),
        restriction,
        codim1_ok,
        partition_ok: v.partition_ok,
        containment_ok: v.containment_ok,
        homology_facets,
    }
}

/// The two verdicts compared by [`shelling_equivalence_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    /// The order is a linear extension of Cord and a shelling with descent
    /// restriction.
    LinExtAndShelling,
    /// The order is neither.
    Neither,
    /// The verdicts disagree (a violation of the theorem).
    Mismatch {
        /// Linear-extension verdict.
        linear_extension: bool,
        /// Shelling-with-descent-restriction verdict.
        shelling: bool,
    },
}

/// True iff `order` (a permutation of chain indices) is a linear extension
/// of Cord.
pub fn is_linear_extension_of_cord(mcd: &McdOrder, order: &[usize]) -> bool {
    if order.len() != mcd.len() {
        return false;
    }
    let mut pos = vec![usize::MAX; mcd.len()];
    for (k, &i) in order.iter().enumerate() {
        if i >= mcd.len() || pos[i] != usize::MAX {
            return false;
        }
        pos[i] = k;
    }
    mcd.moves.iter().all(|mv| pos[mv.source] < pos[mv.target])
}

/// Compares "linear extension of Cord" with "shelling of the proper part
/// whose restriction map is the descent map".
pub fn shelling_equivalence_check(
    p: &Poset,
    mcd: &McdOrder,
    order: &[usize],
) -> Result<Equivalence> {
    let complex = order_complex(p, true)?;
    let descent = descent_restriction(mcd);
    Ok(equivalence_with(&complex, &descent, mcd, order))
}

/// [`shelling_equivalence_check`] with the complex and descent map
/// precomputed.
pub fn equivalence_with(
    complex: &OrderComplex,
    descent: &[Vec<usize>],
    mcd: &McdOrder,
    order: &[usize],
) -> Equivalence {
    let lin = is_linear_extension_of_cord(mcd, order);
    let shell = is_shelling_codim1(complex, order) && restriction_map(complex, order) == descent;
    match (lin, shell) {
        (true, true) => Equivalence::LinExtAndShelling,
        (false, false) => Equivalence::Neither,
        (l, s) => Equivalence::Mismatch {
            linear_extension: l,
            shelling: s,
        },
    }
}

/// Chains whose every interior element is a descent, by chain index.
pub fn homology_facets(mcd: &McdOrder) -> Vec<usize> {
    (0..mcd.len())
        .filter(|&i| mcd.descents[i].len() + 1 == mcd.labels[i].len().max(1))
        .collect()
}

/// Chains of length `n` with exactly `n − 1` downward covers in Cord.
pub fn homology_facets_by_covers(mcd: &McdOrder) -> Vec<usize> {
    downward_cover_counts(mcd)
        .into_iter()
        .enumerate()
        .filter(|&(i, (down, _))| down + 1 == mcd.labels[i].len().max(1))
        .map(|(i, _)| i)
        .collect()
}

/// A total order refining the lexicographic order of label sequences; ties
/// and incomparabilities are broken by smallest chain index.
pub fn lex_shelling_order(mcd: &McdOrder) -> Vec<usize> {
    let n = mcd.len();
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && lex_compare(&mcd.labels[i], &mcd.labels[j], &mcd.lambda) == LexOrder::Less {
                succ[i].push(j);
                indeg[j] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .find(|&i| !done[i] && indeg[i] == 0)
            .expect("lexicographic order is acyclic");
        done[next] = true;
        order.push(next);
        for &j in &succ[next] {
            indeg[j] -= 1;
        }
    }
    order
}

/// Deterministic random number generator used for sampled audits.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random permutation of `0..n`.
pub fn random_total_order<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    v
}

/// A random linear extension of Cord, drawn by repeatedly choosing a uniform
/// element among the currently minimal ones.
pub fn random_linear_extension<R: Rng>(mcd: &McdOrder, rng: &mut R) -> Vec<usize> {
    let n = mcd.len();
    let mut indeg = vec![0usize; n];
    for mv in &mcd.moves {
        indeg[mv.target] += 1;
    }
    let mut avail: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while !avail.is_empty() {
        let k = rng.gen_range(0..avail.len());
        let x = avail.swap_remove(k);
        out.push(x);
        for s in mcd.move_successors(x) {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                avail.push(s);
            }
        }
        avail.sort_unstable();
    }
    out
}

/// Counts of an equivalence audit over many orders.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditCounts {
    /// Orders checked.
    pub checked: usize,
    /// Orders that are linear extensions and shellings.
    pub agree_true: usize,
    /// Orders that are neither.
    pub agree_false: usize,
    /// Orders with disagreeing verdicts.
    pub mismatches: usize,
}

impl AuditCounts {
    fn record(&mut self, e: Equivalence) {
        self.checked += 1;
        match e {
            Equivalence::LinExtAndShelling => self.agree_true += 1,
            Equivalence::Neither => self.agree_false += 1,
            Equivalence::Mismatch { .. } => self.mismatches += 1,
        }
    }
}

/// Audits the equivalence theorem: every order of the chains when there are
/// at most `exhaustive_threshold` of them; otherwise `samples` seeded random
/// total orders, `samples` seeded random linear extensions, and every linear
/// extension of Cord when there are at most `max_extensions`.
pub fn equivalence_audit(
    p: &Poset,
    mcd: &McdOrder,
    exhaustive_threshold: usize,
    samples: usize,
    max_extensions: usize,
    seed: u64,
) -> Result<AuditCounts> {
    let complex = order_complex(p, true)?;
    let descent = descent_restriction(mcd);
    let mut counts = AuditCounts::default();
    let n = mcd.len();
    if n <= exhaustive_threshold {
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |o| {
            counts.record(equivalence_with(&complex, &descent, mcd, o))
        });
        return Ok(counts);
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..samples {
        let o = random_total_order(n, &mut rng);
        counts.record(equivalence_with(&complex, &descent, mcd, &o));
        let e = random_linear_extension(mcd, &mut rng);
        counts.record(equivalence_with(&complex, &descent, mcd, &e));
    }
    let cord = mcd.to_poset();
    if cord.linear_extensions().take(max_extensions + 1).count() <= max_extensions {
        for e in cord.linear_extensions() {
            counts.record(equivalence_with(&complex, &descent, mcd, &e));
        }
    }
    Ok(counts)
}

/// Calls `f` on every permutation of `v[k..]`, permuting in place by swaps.
fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Parses a facet order given as whitespace- or comma-separated chain
/// indices.
pub fn parse_order(text: &str, n: usize) -> Result<Vec<usize>> {
    let order: Vec<usize> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Invalid(format!("`{s}` is not a chain index")))
        })
        .collect::<Result<_>>()?;
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::Invalid(format!(
            "order must be a permutation of 0..{n}"
        )));
    }
    Ok(order)
}

//! Polygon moves between maximal chains, the maximal chain descent order
//! Cord(P, λ) they generate, inversion sets, and certificates of (non-)polygon
//! completeness.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::labeling::{
    ascending_chain, chain_labels, check_saturated, collect_roots, descent_positions,
    is_ascending, label_sequence, lex_compare, restrict, Label, LabelPoset, Labeling, LexOrder,
};
use crate::poset::{hasse_dot, transitive_closure, transitive_reduction, Chain, Poset};

/// Where two maximal chains differ by a polygon: `m` and `m'` agree except that
/// `m` runs `x_{i-1} ⋖ x_i ⋖ … ⋖ x_{i+l}` where `m'` runs
/// `x_{i-1} ⋖ x'_i ⋖ x_{i+l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolygonWitness {
    /// Position `i` of the first differing element.
    pub position: usize,
    /// Offset `l >= 1`; the longer chain has `l - 1` more edges.
    pub l: usize,
    /// Polygon bottom `x_{i-1}`.
    pub bottom: usize,
    /// Polygon top `x_{i+l}`.
    pub top: usize,
    /// True when the arguments had to be swapped because the second chain
    /// was the longer one.
    pub swapped: bool,
}

/// Decides whether `m` and `mp` differ by a polygon, following the
/// definition literally: the longer chain plays the role of `m`.
pub fn differ_by_polygon(m: &[usize], mp: &[usize]) -> Option<PolygonWitness> {
    if mp.len() > m.len() {
        return differ_by_polygon(mp, m).map(|w| PolygonWitness { swapped: true, ..w });
    }
    if m.len() < 2 || mp.len() < 2 || m[0] != mp[0] {
        return None;
    }
    let r = m.len() - 1;
    let rp = mp.len() - 1;
    let l = r - rp + 1;
    let i = (0..=rp).find(|&j| mp[j] != m[j])?;
    if i == 0 || i > r - 1 || i + 1 > rp || i + l > r {
        return None;
    }
    if mp[i + 1] != m[i + l] {
        return None;
    }
    if (0..=l).any(|k| mp[i] == m[i + k]) {
        return None;
    }
    if (0..=(rp - i - 1)).any(|t| mp[i + 1 + t] != m[i + l + t]) {
        return None;
    }
    Some(PolygonWitness {
        position: i,
        l,
        bottom: m[i - 1],
        top: m[i + l],
        swapped: false,
    })
}

/// The unique `m` with `m → m'` and `m' ∖ m = {x}`: the segment
/// `w ⋖ x ⋖ z` of `m'` is replaced by the ascending chain of `[w, z]` rooted
/// at `m'` up to `w`.
pub fn polygon_predecessor(
    p: &Poset,
    labeling: &Labeling,
    mp: &[usize],
    x: usize,
) -> Result<Chain> {
    check_saturated(p, mp)?;
    let pos = mp
        .iter()
        .position(|&e| e == x)
        .filter(|&i| i > 0 && i + 1 < mp.len())
        .ok_or_else(|| Error::NotADescent(p.name(x).to_string()))?;
    let labels = label_sequence(p, labeling, mp, &mp[..1])?;
    if labeling.lambda.leq(labels[pos - 1], labels[pos]) {
        return Err(Error::NotADescent(p.name(x).to_string()));
    }
    predecessor_at(p, labeling, mp, pos)
}

fn predecessor_at(p: &Poset, labeling: &Labeling, mp: &[usize], pos: usize) -> Result<Chain> {
    let root = &mp[..pos];
    let z = mp[pos + 1];
    let asc = ascending_chain(p, labeling, root, z)?.ok_or_else(|| {
        Error::Invalid(format!(
            "no ascending chain in [{}, {}]; labeling is not a valid EL/CL",
            p.name(mp[pos - 1]),
            p.name(z)
        ))
    })?;
    let mut m = mp[..pos].to_vec();
    m.extend_from_slice(&asc[1..]);
    m.extend_from_slice(&mp[pos + 2..]);
    Ok(m)
}

/// A polygon move between two maximal chains of Cord, by chain index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolygonMove {
    /// Index of `m`.
    pub source: usize,
    /// Index of `m'`.
    pub target: usize,
    /// Polygon bottom element.
    pub bottom: usize,
    /// Polygon top element.
    pub top: usize,
    /// The descent element `x` with `m' ∖ m = {x}`.
    pub inserted: usize,
}

/// The maximal chain descent order Cord(P, λ).
#[derive(Debug, Clone)]
pub struct McdOrder {
    /// Maximal chains in index-lexicographic order.
    pub chains: Vec<Chain>,
    /// Label sequence of each chain.
    pub labels: Vec<Vec<Label>>,
    /// Descent positions of each chain.
    pub descents: Vec<Vec<usize>>,
    /// All polygon moves, sorted by `(source, target)`.
    pub moves: Vec<PolygonMove>,
    /// Cover relations of Cord, sorted.
    pub covers: Vec<(usize, usize)>,
    /// The label poset.
    pub lambda: LabelPoset,
    reach: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
    index: HashMap<Chain, usize>,
}

/// All polygon moves `m → m'` of `(P, λ)`, one per (chain, descent) pair.
pub fn all_polygon_moves(p: &Poset, labeling: &Labeling) -> Result<Vec<PolygonMove>> {
    Ok(build_mcd(p, labeling)?.moves)
}

/// Builds Cord(P, λ): maximal chains, polygon moves, reachability and covers.
pub fn build_mcd(p: &Poset, labeling: &Labeling) -> Result<McdOrder> {
    let chains = p.maximal_chains()?;
    let index: HashMap<Chain, usize> = chains
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    let mut labels = Vec::with_capacity(chains.len());
    let mut descents = Vec::with_capacity(chains.len());
    for c in &chains {
        let l = chain_labels(p, labeling, c)?;
        descents.push(descent_positions(&l, &labeling.lambda));
        labels.push(l);
    }
    let mut moves = Vec::new();
    for (t, mp) in chains.iter().enumerate() {
        for &pos in &descents[t] {
            let m = predecessor_at(p, labeling, mp, pos)?;
            let s = index[&m];
            moves.push(PolygonMove {
                source: s,
                target: t,
                bottom: mp[pos - 1],
                top: mp[pos + 1],
                inserted: mp[pos],
            });
        }
    }
    moves.sort();
    moves.dedup_by_key(|mv| (mv.source, mv.target));
    let pairs: Vec<(usize, usize)> = moves.iter().map(|mv| (mv.source, mv.target)).collect();
    let reach = transitive_closure(chains.len(), &pairs).map_err(|_| {
        Error::Invalid("polygon moves contain a cycle; labeling is not a valid EL/CL".into())
    })?;
    let covers = transitive_reduction(chains.len(), &pairs)?;
    let n = chains.len();
    let mut below = vec![FixedBitSet::with_capacity(n); n];
    for (i, set) in reach.iter().enumerate() {
        for j in set.ones() {
            below[j].insert(i);
        }
    }
    Ok(McdOrder {
        chains,
        labels,
        descents,
        moves,
        covers,
        lambda: labeling.lambda.clone(),
        reach,
        below,
        index,
    })
}

impl McdOrder {
    /// Number of maximal chains.
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    /// True when there are no chains.
    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// True iff chain `i` ⪯ chain `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.reach[i].contains(j)
    }

    /// Index of a maximal chain.
    pub fn chain_index(&self, c: &[usize]) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// True iff `(i, j)` is a polygon move.
    pub fn is_move(&self, i: usize, j: usize) -> bool {
        self.moves
            .binary_search_by(|mv| (mv.source, mv.target).cmp(&(i, j)))
            .is_ok()
    }

    /// The move `(i, j)`, if it is one.
    pub fn find_move(&self, i: usize, j: usize) -> Option<&PolygonMove> {
        self.moves
            .binary_search_by(|mv| (mv.source, mv.target).cmp(&(i, j)))
            .ok()
            .map(|k| &self.moves[k])
    }

    /// True iff `(i, j)` is a cover relation of Cord.
    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.covers.binary_search(&(i, j)).is_ok()
    }

    /// Rendering of a label sequence: concatenated when every label is a
    /// single character, comma separated otherwise.
    pub fn label_string(&self, i: usize) -> String {
        let parts: Vec<String> = self.labels[i].iter().map(|&l| self.lambda.display(l)).collect();
        if parts.iter().all(|s| s.chars().count() == 1) {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Vertex names: label sequences, disambiguated by `#index` on repeats.
    pub fn vertex_names(&self) -> Vec<String> {
        let raw: Vec<String> = (0..self.len()).map(|i| self.label_string(i)).collect();
        let mut count: HashMap<&str, usize> = HashMap::new();
        for r in &raw {
            *count.entry(r.as_str()).or_default() += 1;
        }
        raw.iter()
            .enumerate()
            .map(|(i, r)| {
                if count[r.as_str()] > 1 {
                    format!("{r}#{i}")
                } else {
                    r.clone()
                }
            })
            .collect()
    }

    /// Cord as a poset whose element names are the vertex names.
    pub fn to_poset(&self) -> Poset {
        Poset::from_covers(self.vertex_names(), self.covers.clone(), false)
            .expect("Cord covers form a reduced acyclic relation")
    }

    /// Hasse diagram of Cord in DOT, vertices drawn as label sequences.
    pub fn to_dot(&self) -> String {
        hasse_dot("Cord", &self.vertex_names(), &self.covers)
    }

    /// Minimal elements of Cord.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.below[i].count_ones(..) == 1)
            .collect()
    }

    /// Maximal elements of Cord.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.reach[i].count_ones(..) == 1)
            .collect()
    }

    /// Chains `j` with `i ⪯ j ⪯ k`.
    pub fn interval(&self, i: usize, k: usize) -> Vec<usize> {
        let mut s = self.reach[i].clone();
        s.intersect_with(&self.below[k]);
        s.ones().collect()
    }

    /// Successors of chain `i` along polygon moves.
    pub fn move_successors(&self, i: usize) -> Vec<usize> {
        let start = self.moves.partition_point(|mv| mv.source < i);
        self.moves[start..]
            .iter()
            .take_while(|mv| mv.source == i)
            .map(|mv| mv.target)
            .collect()
    }
}

/// Verdict of [`is_polygon_complete`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletenessReport {
    /// True when every polygon move is a cover relation.
    pub complete: bool,
    /// Moves that are not cover relations, as `(source, target)`.
    pub non_cover_moves: Vec<(usize, usize)>,
}

/// Checks that every polygon move is a cover relation of Cord.
pub fn is_polygon_complete(mcd: &McdOrder) -> CompletenessReport {
    let non_cover_moves: Vec<(usize, usize)> = mcd
        .moves
        .iter()
        .filter(|mv| !mcd.is_cover(mv.source, mv.target))
        .map(|mv| (mv.source, mv.target))
        .collect();
    CompletenessReport {
        complete: non_cover_moves.is_empty(),
        non_cover_moves,
    }
}

/// Inversions of a maximal chain: position pairs `(i, j)`, `i < j`
/// (1-based), with `λ_i ≰ λ_j`, together with their label pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionSet {
    /// Position pairs.
    pub positions: Vec<(usize, usize)>,
    /// Label pairs, aligned with `positions`.
    pub labels: Vec<(Label, Label)>,
}

impl InversionSet {
    /// Number of inversions, counted per position pair.
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    /// True when there are no inversions.
    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Inversions of a label sequence.
pub fn inversions_of(labels: &[Label], lambda: &LabelPoset) -> InversionSet {
    let mut positions = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if !lambda.leq(labels[i], labels[j]) {
                positions.push((i + 1, j + 1));
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    InversionSet {
        positions,
        labels: pairs,
    }
}

/// Inversion set of the maximal chain `m`.
pub fn inversion_set(p: &Poset, labeling: &Labeling, m: &[usize]) -> Result<InversionSet> {
    let labels = chain_labels(p, labeling, m)?;
    Ok(inversions_of(&labels, &labeling.lambda))
}

/// Verdict of [`is_inversion_ranked`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionRankedReport {
    /// True when every move increases |inv| by exactly one.
    pub inversion_ranked: bool,
    /// A move violating this, with the inversion counts of source and target.
    pub counterexample: Option<((usize, usize), usize, usize)>,
}

/// Checks that every polygon move `m → m'` has `|inv(m')| = |inv(m)| + 1`.
pub fn is_inversion_ranked(mcd: &McdOrder) -> InversionRankedReport {
    let inv: Vec<usize> = mcd
        .labels
        .iter()
        .map(|l| inversions_of(l, &mcd.lambda).len())
        .collect();
    for mv in &mcd.moves {
        if inv[mv.target] != inv[mv.source] + 1 {
            return InversionRankedReport {
                inversion_ranked: false,
                counterexample: Some((
                    (mv.source, mv.target),
                    inv[mv.source],
                    inv[mv.target],
                )),
            };
        }
    }
    InversionRankedReport {
        inversion_ranked: true,
        counterexample: None,
    }
}

/// Per chain: (number of chains it covers in Cord, number of descents).
pub fn downward_cover_counts(mcd: &McdOrder) -> Vec<(usize, usize)> {
    let mut down = vec![0usize; mcd.len()];
    for &(_, j) in &mcd.covers {
        down[j] += 1;
    }
    (0..mcd.len())
        .map(|i| (down[i], mcd.descents[i].len()))
        .collect()
}

/// Outcome of [`mcd_rank_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    /// Rank function of Cord, when Cord is ranked.
    pub rank: Option<Vec<usize>>,
    /// Whether the labeling is inversion ranked.
    pub inversion_ranked: bool,
    /// When inversion ranked: whether Cord is ranked with rank `|inv|`.
    pub ranked_by_inversions: Option<bool>,
    /// When inversion ranked and every chain has the same length `n`:
    /// whether the descending chains are exactly the chains of rank `C(n,2)`.
    pub homology_at_top_rank: Option<bool>,
}

/// Rank analysis of Cord, including the inversion-ranked consequences.
pub fn mcd_rank_report(mcd: &McdOrder) -> RankReport {
    let rank = mcd.to_poset().rank_function();
    let inversion_ranked = is_inversion_ranked(mcd).inversion_ranked;
    let inv: Vec<usize> = mcd
        .labels
        .iter()
        .map(|l| inversions_of(l, &mcd.lambda).len())
        .collect();
    let (ranked_by_inversions, homology_at_top_rank) = if inversion_ranked {
        let by_inv = rank.as_ref().is_some_and(|r| *r == inv);
        let lengths: Vec<usize> = mcd.labels.iter().map(|l| l.len()).collect();
        let homology = if lengths.windows(2).all(|w| w[0] == w[1]) && !lengths.is_empty() {
            let n = lengths[0];
            let top = n * n.saturating_sub(1) / 2;
            Some((0..mcd.len()).all(|i| {
                let descending = mcd.descents[i].len() + 1 == n.max(1);
                descending == (inv[i] == top)
            }))
        } else {
            None
        };
        (Some(by_inv), homology)
    } else {
        (None, None)
    };
    RankReport {
        rank,
        inversion_ranked,
        ranked_by_inversions,
        homology_at_top_rank,
    }
}

/// Certificate that a labeling is not polygon complete: saturated chains
/// `c: x_1 ⋖ … ⋖ x_{k+1}` (ascending, `k >= 3`) and `c': x_1 ⋖ x'_2 ⋖ x_k`
/// (a descent), read along `root`, with `λ(x_k, x_{k+1}) < λ(x'_2, x_k)`; the
/// top label is read along `root * c'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EasyWitness {
    /// Root chain from 0̂ to `x_1`.
    pub root: Chain,
    /// The ascending chain `c`.
    pub c: Chain,
    /// The descent `c'`.
    pub c_prime: Chain,
}

/// Searches every rooted interval for an [`EasyWitness`], in canonical order.
pub fn find_easy_noncover_witness(p: &Poset, labeling: &Labeling) -> Result<Option<EasyWitness>> {
    let b = p.bottom().ok_or(Error::NotBounded)?;
    let mut roots = Vec::new();
    collect_roots(p, &mut vec![b], &mut roots);
    for root in roots {
        let mut path = root.clone();
        if let Some(w) = easy_dfs(p, labeling, &root, &mut path, None)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn easy_dfs(
    p: &Poset,
    labeling: &Labeling,
    root: &[usize],
    path: &mut Vec<usize>,
    prev: Option<Label>,
) -> Result<Option<EasyWitness>> {
    let start = root.len() - 1;
    let c = &path[start..];
    if c.len() >= 4 {
        if let Some(w) = check_easy(p, labeling, root, c)? {
            return Ok(Some(w));
        }
    }
    let last = *path.last().expect("nonempty");
    for &z in p.upper_covers(last) {
        let l = labeling.label(p, path, z)?;
        if prev.is_some_and(|pl| !labeling.lambda.leq(pl, l)) {
            continue;
        }
        path.push(z);
        let found = easy_dfs(p, labeling, root, path, Some(l))?;
        path.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn check_easy(p: &Poset, labeling: &Labeling, root: &[usize], c: &[usize]) -> Result<Option<EasyWitness>> {
    let x1 = c[0];
    let k = c.len() - 1;
    let xk = c[k - 1];
    let xk1 = c[k];
    for &x2p in p.upper_covers(x1) {
        if !p.is_cover(x2p, xk) {
            continue;
        }
        let l1 = labeling.label(p, root, x2p)?;
        let mut r2 = root.to_vec();
        r2.push(x2p);
        let l2 = labeling.label(p, &r2, xk)?;
        if labeling.lambda.leq(l1, l2) {
            continue;
        }
        r2.push(xk);
        let l3 = labeling.label(p, &r2, xk1)?;
        if labeling.lambda.lt(l3, l2) {
            return Ok(Some(EasyWitness {
                root: root.to_vec(),
                c: c.to_vec(),
                c_prime: vec![x1, x2p, xk],
            }));
        }
    }
    Ok(None)
}

/// Re-checks an [`EasyWitness`] against its defining conditions.
pub fn verify_easy_witness(p: &Poset, labeling: &Labeling, w: &EasyWitness) -> Result<bool> {
    let k = w.c.len().saturating_sub(1);
    if k < 3 || w.c_prime.len() != 3 || w.root.last() != Some(&w.c[0]) {
        return Ok(false);
    }
    if w.root.first() != p.bottom().as_ref() || check_saturated(p, &w.root).is_err() {
        return Ok(false);
    }
    if check_saturated(p, &w.c).is_err() || check_saturated(p, &w.c_prime).is_err() {
        return Ok(false);
    }
    if w.c_prime[0] != w.c[0] || w.c_prime[2] != w.c[k - 1] {
        return Ok(false);
    }
    let lc = label_sequence(p, labeling, &w.c, &w.root)?;
    let lcp = label_sequence(p, labeling, &w.c_prime, &w.root)?;
    let mut r = w.root.clone();
    r.extend_from_slice(&w.c_prime[1..]);
    let top = labeling.label(p, &r, w.c[k])?;
    Ok(is_ascending(&lc, &labeling.lambda)
        && !labeling.lambda.leq(lcp[0], lcp[1])
        && labeling.lambda.lt(top, lcp[1]))
}

/// Elements and chains certifying that a polygon move is not a cover
/// relation (conditions (i) and (ii) of the characterization of
/// non-polygon-complete labelings), with `x_{n+1} = x_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationWitness {
    /// The common top element `y`.
    pub y: usize,
    /// `x_1, …, x_n`.
    pub xs: Vec<usize>,
    /// `z_1, …, z_n`.
    pub zs: Vec<usize>,
    /// `m` from 0̂ to `x_1`.
    pub m: Chain,
    /// `m'` from 0̂ to `x_1`.
    pub m_prime: Chain,
    /// `m_i` from 0̂ to `z_i`.
    pub ms: Vec<Chain>,
    /// `c_i`, the ascending chain of `[z_i, y]` rooted at `m_i`.
    pub cs: Vec<Chain>,
    /// The connecting move path in Cord(P, λ), by chain index.
    pub path: Vec<usize>,
}

/// Builds a characterization witness for the non-cover move `(source,
/// target)` by replaying a shortest connecting move path.
pub fn find_characterization_witness(
    mcd: &McdOrder,
    noncover_move: (usize, usize),
) -> Result<CharacterizationWitness> {
    let (s, t) = noncover_move;
    if !mcd.is_move(s, t) || mcd.is_cover(s, t) {
        return Err(Error::NotANonCover);
    }
    let path = shortest_indirect_path(mcd, s, t).ok_or(Error::NotANonCover)?;
    let mut seq: Vec<Chain> = path.iter().map(|&i| mcd.chains[i].clone()).collect();
    loop {
        if seq.iter().any(|c| c.len() < 3) {
            return Err(Error::Invalid("move path degenerated while replaying".into()));
        }
        let below = |c: &Chain| c[c.len() - 2];
        if seq.windows(2).all(|w| below(&w[0]) == below(&w[1])) {
            for c in seq.iter_mut() {
                c.pop();
            }
            continue;
        }
        let y = *seq[0].last().expect("nonempty");
        let x1 = below(&seq[0]);
        let mut xs = vec![x1];
        let mut zs = Vec::new();
        let mut ms = Vec::new();
        let mut cs = Vec::new();
        for w in seq.windows(2) {
            let (d, e) = (&w[0], &w[1]);
            if below(d) == below(e) {
                continue;
            }
            let z = e[e.len() - 3];
            let zpos = d
                .iter()
                .position(|&v| v == z)
                .ok_or_else(|| Error::Invalid("polygon bottom missing from chain".into()))?;
            zs.push(z);
            ms.push(d[..=zpos].to_vec());
            cs.push(d[zpos..].to_vec());
            xs.push(below(e));
        }
        xs.pop();
        let first = &seq[0];
        let last = seq.last().expect("nonempty");
        return Ok(CharacterizationWitness {
            y,
            xs,
            zs,
            m: first[..first.len() - 1].to_vec(),
            m_prime: last[..last.len() - 1].to_vec(),
            ms,
            cs,
            path,
        });
    }
}

fn shortest_indirect_path(mcd: &McdOrder, s: usize, t: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; mcd.len()];
    let mut seen = vec![false; mcd.len()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in mcd.move_successors(u) {
            if (u, v) == (s, t) || seen[v] {
                continue;
            }
            seen[v] = true;
            parent[v] = u;
            if v == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(v);
        }
    }
    None
}

/// Per-condition outcome of [`verify_characterization_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    /// `n >= 2` and all lists have matching lengths.
    pub shape_ok: bool,
    /// Condition (i) for every `i`.
    pub condition_i: bool,
    /// Condition (ii).
    pub condition_ii: bool,
}

impl WitnessCheck {
    /// True when every condition holds.
    pub fn ok(&self) -> bool {
        self.shape_ok && self.condition_i && self.condition_ii
    }
}

/// Re-verifies conditions (i) and (ii) of a characterization witness
/// directly from the definitions, building Cord of the lower intervals
/// `[0̂, x_i]` as needed.
pub fn verify_characterization_witness(
    p: &Poset,
    labeling: &Labeling,
    w: &CharacterizationWitness,
) -> Result<WitnessCheck> {
    let n = w.xs.len();
    let b = p.bottom().ok_or(Error::NotBounded)?;
    let shape_ok = n >= 2 && w.zs.len() == n && w.ms.len() == n && w.cs.len() == n;
    if !shape_ok {
        return Ok(WitnessCheck {
            shape_ok,
            condition_i: false,
            condition_ii: false,
        });
    }
    let x = |i: usize| w.xs[i % n];
    let mut condition_i = true;
    for i in 0..n {
        let (z, m_i, c_i) = (w.zs[i], &w.ms[i], &w.cs[i]);
        let ok = (|| -> Result<bool> {
            if m_i.first() != Some(&b) || m_i.last() != Some(&z) || m_i.len() < 2 {
                return Ok(false);
            }
            check_saturated(p, m_i)?;
            if !(p.is_cover(z, x(i + 1)) && p.is_cover(x(i + 1), w.y)) {
                return Ok(false);
            }
            let desc = label_sequence(p, labeling, &[z, x(i + 1), w.y], m_i)?;
            if labeling.lambda.leq(desc[0], desc[1]) {
                return Ok(false);
            }
            let asc = ascending_chain(p, labeling, m_i, w.y)?;
            Ok(asc.as_ref() == Some(c_i) && c_i.len() >= 2 && c_i[c_i.len() - 2] == x(i))
        })()
        .unwrap_or(false);
        condition_i &= ok;
    }
    let mut cords: HashMap<usize, (McdOrder, HashMap<usize, usize>)> = HashMap::new();
    let mut lower = |top: usize| -> Result<()> {
        if let std::collections::hash_map::Entry::Vacant(e) = cords.entry(top) {
            let r = restrict(p, labeling, &[b], top)?;
            let mcd = build_mcd(&r.poset, &r.labeling)?;
            let inv: HashMap<usize, usize> =
                r.map.iter().enumerate().map(|(i, &g)| (g, i)).collect();
            e.insert((mcd, inv));
        }
        Ok(())
    };
    let x1 = w.xs[0];
    for &top in &w.xs {
        lower(top)?;
    }
    let idx = |cords: &HashMap<usize, (McdOrder, HashMap<usize, usize>)>, top: usize, c: &[usize]| {
        let (mcd, inv) = &cords[&top];
        let local: Option<Vec<usize>> = c.iter().map(|v| inv.get(v).copied()).collect();
        local.and_then(|l| mcd.chain_index(&l))
    };
    let prefix_to = |c: &[usize], v: usize| -> Option<Vec<usize>> {
        c.iter().position(|&e| e == v).map(|k| c[..=k].to_vec())
    };
    let mut condition_ii = w.m.len() >= 2 && w.m_prime.len() >= 2;
    let concat = |a: &[usize], tail: &[usize]| -> Vec<usize> {
        let mut v = a.to_vec();
        v.extend_from_slice(tail);
        v
    };
    if condition_ii {
        let (mcd1, _) = &cords[&x1];
        let im = idx(&cords, x1, &w.m);
        let imp = idx(&cords, x1, &w.m_prime);
        let first = prefix_to(&w.cs[0], x1).map(|c| concat(&w.ms[0], &c[1..]));
        let i_first = first.and_then(|c| idx(&cords, x1, &c));
        let last = concat(&w.ms[n - 1], &[x1]);
        let i_last = idx(&cords, x1, &last);
        condition_ii = match (im, imp, i_first, i_last) {
            (Some(a), Some(b2), Some(f), Some(l)) => {
                mcd1.is_move(a, b2) && mcd1.leq(a, f) && mcd1.leq(l, b2)
            }
            _ => false,
        };
    }
    for i in 0..n - 1 {
        if !condition_ii {
            break;
        }
        let xi1 = x(i + 1);
        let (mcd_i, _) = &cords[&xi1];
        let lhs = concat(&w.ms[i], &[xi1]);
        let rhs = prefix_to(&w.cs[i + 1], xi1).map(|c| concat(&w.ms[i + 1], &c[1..]));
        let a = idx(&cords, xi1, &lhs);
        let c = rhs.and_then(|r| idx(&cords, xi1, &r));
        condition_ii = matches!((a, c), (Some(a), Some(c)) if a != c && mcd_i.leq(a, c));
    }
    Ok(WitnessCheck {
        shape_ok,
        condition_i,
        condition_ii,
    })
}

/// Checks that every relation `c ⪯ c'` of Cord on the rooted interval
/// `[x, y]_root` lifts to `root * c * t ⪯ root * c' * t` in Cord(P, λ) for
/// every saturated chain `t` from `y` to 1̂.
pub fn verify_lifting(
    p: &Poset,
    labeling: &Labeling,
    mcd: &McdOrder,
    root: &[usize],
    y: usize,
) -> Result<bool> {
    let top = p.top().ok_or(Error::NotBounded)?;
    let r = restrict(p, labeling, root, y)?;
    let sub = build_mcd(&r.poset, &r.labeling)?;
    let tails = p.saturated_chains(y, top);
    let lift = |local: &Chain, tail: &Chain| -> Option<usize> {
        let mut c = root.to_vec();
        c.extend(local[1..].iter().map(|&i| r.map[i]));
        c.extend_from_slice(&tail[1..]);
        mcd.chain_index(&c)
    };
    for i in 0..sub.len() {
        for j in 0..sub.len() {
            if !sub.leq(i, j) {
                continue;
            }
            for tail in &tails {
                match (lift(&sub.chains[i], tail), lift(&sub.chains[j], tail)) {
                    (Some(a), Some(b)) if mcd.leq(a, b) => {}
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(true)
}

/// Structural audit of Cord: each field counts violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructuralAudit {
    /// Cord lacks a unique minimum equal to the ascending chain.
    pub unique_minimum: usize,
    /// Descending chains that are not maximal in Cord.
    pub descending_not_maximal: usize,
    /// Moves that do not strictly increase lexicographic order.
    pub moves_not_lex_increasing: usize,
    /// Chains with more downward covers than descents, or fewer when the
    /// labeling is polygon complete.
    pub cover_descent_bound: usize,
    /// Moves whose polygon top is 1̂ but which are not covers.
    pub top_polygon_not_cover: usize,
    /// Pairs `m ⪯ m'` with a chain in between missing their common prefix.
    pub prefix_lemma: usize,
    /// Moves for which the pair of chains does not differ by a polygon.
    pub move_not_polygon: usize,
}

impl StructuralAudit {
    /// Total number of violations.
    pub fn total(&self) -> usize {
        self.unique_minimum
            + self.descending_not_maximal
            + self.moves_not_lex_increasing
            + self.cover_descent_bound
            + self.top_polygon_not_cover
            + self.prefix_lemma
            + self.move_not_polygon
    }
}

/// Runs the structural property checks on Cord(P, λ).
pub fn structural_audit(p: &Poset, mcd: &McdOrder) -> StructuralAudit {
    let mut a = StructuralAudit::default();
    let mins = mcd.minimal_elements();
    let ascending: Vec<usize> = (0..mcd.len()).filter(|&i| mcd.descents[i].is_empty()).collect();
    if mins.len() != 1 || ascending != mins {
        a.unique_minimum += 1;
    }
    let maxs = mcd.maximal_elements();
    for i in 0..mcd.len() {
        let n = mcd.labels[i].len();
        if mcd.descents[i].len() + 1 == n.max(1) && n >= 1 && !maxs.contains(&i) {
            a.descending_not_maximal += 1;
        }
    }
    for mv in &mcd.moves {
        if lex_compare(&mcd.labels[mv.source], &mcd.labels[mv.target], &mcd.lambda) != LexOrder::Less {
            a.moves_not_lex_increasing += 1;
        }
        if Some(mv.top) == p.top() && !mcd.is_cover(mv.source, mv.target) {
            a.top_polygon_not_cover += 1;
        }
        if differ_by_polygon(&mcd.chains[mv.source], &mcd.chains[mv.target])
            .is_none_or(|w| w.swapped)
        {
            a.move_not_polygon += 1;
        }
    }
    let complete = is_polygon_complete(mcd).complete;
    for (down, desc) in downward_cover_counts(mcd) {
        if down > desc || (complete && down != desc) {
            a.cover_descent_bound += 1;
        }
    }
    for i in 0..mcd.len() {
        for j in mcd.reach[i].ones() {
            if i == j {
                continue;
            }
            let (ci, cj) = (&mcd.chains[i], &mcd.chains[j]);
            let common = ci.iter().zip(cj).take_while(|(u, v)| u == v).count();
            for k in mcd.interval(i, j) {
                let ck = &mcd.chains[k];
                if ck.len() < common || ck[..common] != ci[..common] {
                    a.prefix_lemma += 1;
                }
            }
        }
    }
    a
}

/// Counts violations of root independence of EL covers: for each cover
/// `m ⋖ m'` whose polygon lies above an element `x` of their common prefix,
/// `c * m_x ⋖ c * m'_x` must be a cover for every saturated `c` from 0̂ to `x`.
pub fn root_independence_violations(p: &Poset, mcd: &McdOrder) -> usize {
    let Some(b) = p.bottom() else { return 0 };
    let mut roots_to: HashMap<usize, Vec<Chain>> = HashMap::new();
    let mut violations = 0;
    for &(i, j) in &mcd.covers {
        let Some(mv) = mcd.find_move(i, j) else {
            continue;
        };
        let m = &mcd.chains[i];
        let mp = &mcd.chains[j];
        let bpos = m.iter().position(|&e| e == mv.bottom).expect("bottom on chain");
        for xpos in 0..=bpos {
            let x = m[xpos];
            let roots = roots_to
                .entry(x)
                .or_insert_with(|| p.saturated_chains(b, x));
            for c in roots.iter() {
                let mut a = c.clone();
                a.extend_from_slice(&m[xpos + 1..]);
                let mut bb = c.clone();
                bb.extend_from_slice(&mp[xpos + 1..]);
                match (mcd.chain_index(&a), mcd.chain_index(&bb)) {
                    (Some(u), Some(v)) if mcd.is_cover(u, v) => {}
                    _ => violations += 1,
                }
            }
        }
    }
    violations
}

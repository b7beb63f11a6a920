//! Partition lattices Π_n with the max-min EL-labeling and minimal
//! labelings of lattices with respect to an atom ordering.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::labeling::{LabelPoset, Labeling};
use crate::poset::Poset;

/// A set partition of `[n]`: sorted blocks, ordered by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Normalizes and validates blocks covering `[n]`.
    pub fn new(mut blocks: Vec<Vec<usize>>, n: usize) -> Result<SetPartition> {
        let mut seen = vec![false; n + 1];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Invalid(format!("blocks do not partition [{n}]")));
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::Invalid(format!("blocks do not cover [{n}]")));
        }
        blocks.sort();
        Ok(SetPartition { blocks })
    }

    /// The partition into singletons.
    pub fn singletons(n: usize) -> SetPartition {
        SetPartition {
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// Blocks, each sorted, ordered by minimum.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Merges the blocks containing `a` and `b`.
    pub fn merge(&self, a: usize, b: usize) -> SetPartition {
        let ia = self.block_of(a);
        let ib = self.block_of(b);
        if ia == ib {
            return self.clone();
        }
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(self.blocks.len() - 1);
        let mut merged = self.blocks[ia].clone();
        merged.extend_from_slice(&self.blocks[ib]);
        merged.sort_unstable();
        for (i, blk) in self.blocks.iter().enumerate() {
            if i != ia && i != ib {
                blocks.push(blk.clone());
            }
        }
        blocks.push(merged);
        blocks.sort();
        SetPartition { blocks }
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&v).is_ok())
            .expect("value in ground set")
    }

    /// True iff every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| b.iter().all(|v| c.binary_search(v).is_ok())))
    }

    /// Parses `"14|2|3"` (or `"1,4|2|3"` for ground sets beyond 9).
    pub fn parse(s: &str) -> Result<SetPartition> {
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let blk: Vec<usize> = if part.contains(',') {
                part.split(',')
                    .map(|t| t.trim().parse::<usize>().ok())
                    .collect::<Option<_>>()
            } else {
                part.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
            }
            .ok_or_else(|| Error::Invalid(format!("bad set partition `{s}`")))?;
            blocks.push(blk);
        }
        let n = blocks.iter().map(|b| b.len()).sum();
        SetPartition::new(blocks, n)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.ground_size() >= 10;
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let s: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                if wide {
                    s.join(",")
                } else {
                    s.concat()
                }
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// All set partitions of `[n]`, ordered by number of blocks (descending)
/// and then by restricted growth string.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    let mut rgs = Vec::new();
    let mut out = Vec::new();
    rgs_rec(n, &mut rgs, 0, &mut out);
    out.sort_by_key(|(blocks, key)| (std::cmp::Reverse(blocks.len()), key.clone()));
    out.into_iter()
        .map(|(blocks, _)| SetPartition::new(blocks, n).expect("valid partition"))
        .collect()
}

fn rgs_rec(n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<(Vec<Vec<usize>>, Vec<usize>)>) {
    if rgs.len() == n {
        let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push((blocks, rgs.clone()));
        return;
    }
    let limit = if rgs.is_empty() { 0 } else { max + 1 };
    for b in 0..=limit {
        rgs.push(b);
        rgs_rec(n, rgs, max.max(b), out);
        rgs.pop();
    }
}

/// Π_n: set partitions of `[n]` ordered by refinement.
pub fn partition_lattice(n: usize) -> (Poset, Vec<SetPartition>) {
    let parts = all_set_partitions(n);
    let index: HashMap<&SetPartition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (i, x) in parts.iter().enumerate() {
        let bl = x.blocks();
        for a in 0..bl.len() {
            for b in a + 1..bl.len() {
                covers.push((i, index[&x.merge(bl[a][0], bl[b][0])]));
            }
        }
    }
    let names = parts.iter().map(|p| p.to_string()).collect();
    let p = Poset::from_covers(names, covers, true).expect("Π_n is a bounded poset");
    (p, parts)
}

/// The two blocks of `x` merged to form `y` (for a cover `x ⋖ y`).
pub fn merged_blocks<'a>(x: &'a SetPartition, y: &SetPartition) -> Option<(&'a [usize], &'a [usize])> {
    let gone: Vec<&Vec<usize>> = x.blocks().iter().filter(|b| !y.blocks().contains(b)).collect();
    (gone.len() == 2).then(|| (gone[0].as_slice(), gone[1].as_slice()))
}

/// Max-min labeling `λ(x, y) = max(min B_1, min B_2)` where `B_1, B_2` are
/// the blocks of `x` merged in `y`.
pub fn max_min_el(p: &Poset, parts: &[SetPartition]) -> Labeling {
    Labeling::from_fn(p, LabelPoset::Integers, |x, y| {
        let (b1, b2) = merged_blocks(&parts[x], &parts[y]).expect("cover merges two blocks");
        b1[0].max(b2[0]) as i64
    })
}

/// Minimal labeling of a lattice with respect to an ordering `atom_order`
/// of its atoms: `λ(x, y)` is the position (from 1) in `atom_order` of the
/// first atom below `y` but not below `x`.
pub fn minimal_labeling(p: &Poset, atom_order: &[usize]) -> Result<Labeling> {
    if !p.is_lattice() {
        return Err(Error::NotALattice);
    }
    let b = p.bottom().ok_or(Error::NotALattice)?;
    let mut atoms = p.upper_covers(b).to_vec();
    atoms.sort_unstable();
    let mut given = atom_order.to_vec();
    given.sort_unstable();
    if given != atoms {
        return Err(Error::Invalid("atom order must list every atom exactly once".into()));
    }
    let mut labels = Vec::with_capacity(p.covers().len());
    for &(x, y) in p.covers() {
        let pos = atom_order
            .iter()
            .position(|&a| p.leq(a, y) && !p.leq(a, x))
            .ok_or_else(|| Error::Invalid("cover adds no atom; not an atomic lattice".into()))?;
        labels.push(pos as i64 + 1);
    }
    Ok(Labeling::edge_labeling(LabelPoset::Integers, labels))
}

/// The atom of Π_n merging `a` and `b`.
pub fn partition_atom(n: usize, a: usize, b: usize) -> SetPartition {
    SetPartition::singletons(n).merge(a, b)
}

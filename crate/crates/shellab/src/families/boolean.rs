//! Boolean lattices with their standard EL-labeling.

use crate::labeling::{LabelPoset, Labeling};
use crate::poset::Poset;

/// Name of a subset of `[n]` given as a bitmask: its elements concatenated
/// (comma separated when `n >= 10`), or `∅`.
pub fn subset_name(mask: usize, n: usize) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    let parts: Vec<String> = (1..=n)
        .filter(|i| mask >> (i - 1) & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    if n >= 10 {
        parts.join(",")
    } else {
        parts.concat()
    }
}

/// `B_n`: subsets of `[n]` ordered by inclusion (element `k` is the subset
/// with bitmask `k`), labeled by `λ(B, B ∪ {i}) = i`.
pub fn boolean_lattice(n: usize) -> (Poset, Labeling) {
    let size = 1usize << n;
    let names = (0..size).map(|m| subset_name(m, n)).collect();
    let mut covers = Vec::new();
    for m in 0..size {
        for i in 0..n {
            if m >> i & 1 == 0 {
                covers.push((m, m | 1 << i));
            }
        }
    }
    let p = Poset::from_covers(names, covers, true).expect("B_n is a bounded poset");
    let lab = Labeling::from_fn(&p, LabelPoset::Integers, |x, y| {
        ((x ^ y).trailing_zeros() + 1) as i64
    });
    (p, lab)
}

//! Young diagrams, standard (skew) tableaux, intervals of Young's lattice
//! with their tableau labelings, tableau-swap orders and Left order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::families::distributive::{distributive_lattice, order_ideals};
use crate::families::permutation::Permutation;
use crate::labeling::Labeling;
use crate::poset::{Chain, Poset};

/// A (skew) Young diagram `α/μ` in English notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl YoungShape {
    /// The straight shape `α`.
    pub fn new(outer: Vec<usize>) -> Result<YoungShape> {
        YoungShape::skew(outer, Vec::new())
    }

    /// The skew shape `α/μ`; `μ` is padded with zeros.
    pub fn skew(outer: Vec<usize>, mut inner: Vec<usize>) -> Result<YoungShape> {
        let decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&outer) || !decreasing(&inner) {
            return Err(Error::ShapeMismatch("partitions must be weakly decreasing".into()));
        }
        if inner.len() > outer.len() {
            return Err(Error::ShapeMismatch("inner shape has too many rows".into()));
        }
        inner.resize(outer.len(), 0);
        if inner.iter().zip(&outer).any(|(m, a)| m > a) {
            return Err(Error::ShapeMismatch("inner shape is not contained in outer shape".into()));
        }
        let mut outer = outer;
        while outer.last() == Some(&0) {
            outer.pop();
            inner.pop();
        }
        Ok(YoungShape { outer, inner })
    }

    /// Parses `"3,2,1"`, or `"3,2,1/1"` for a skew shape.
    pub fn parse(s: &str) -> Result<YoungShape> {
        let part = |t: &str| -> Result<Vec<usize>> {
            if t.trim().is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ShapeMismatch(format!("bad partition `{t}`")))
        };
        match s.split_once('/') {
            Some((a, m)) => YoungShape::skew(part(a)?, part(m)?),
            None => YoungShape::new(part(s)?),
        }
    }

    /// Row lengths of the outer shape.
    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    /// Row lengths of the inner shape (padded to the outer length).
    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    /// Boxes `(row, column)` in reading order (rows top to bottom, left to
    /// right), 0-based.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.outer
            .iter()
            .zip(&self.inner)
            .enumerate()
            .flat_map(|(r, (&a, &m))| (m..a).map(move |c| (r, c)))
            .collect()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.outer.iter().sum::<usize>() - self.inner.iter().sum::<usize>()
    }

    /// Box poset: `(r, c) <= (r', c')` iff `r <= r'` and `c <= c'`, on the
    /// boxes in reading order.
    pub fn box_poset(&self) -> Poset {
        let boxes = self.boxes();
        let index: HashMap<(usize, usize), usize> = boxes.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut covers = Vec::new();
        for (i, &(r, c)) in boxes.iter().enumerate() {
            if let Some(&j) = index.get(&(r, c + 1)) {
                covers.push((i, j));
            }
            if let Some(&j) = index.get(&(r + 1, c)) {
                covers.push((i, j));
            }
        }
        let names = boxes.iter().map(|(r, c)| format!("{},{}", r + 1, c + 1)).collect();
        Poset::from_covers(names, covers, false).expect("box poset is acyclic")
    }
}

impl fmt::Display for YoungShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({})", join(&self.outer))?;
        if self.inner.iter().any(|&m| m > 0) {
            let inner: Vec<usize> = self.inner.iter().copied().filter(|&m| m > 0).collect();
            write!(f, "/({})", join(&inner))?;
        }
        Ok(())
    }
}

/// A standard filling of a (skew) shape with `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
    shape_outer: Vec<usize>,
    shape_inner: Vec<usize>,
}

impl StandardTableau {
    /// Builds a tableau from its rows (entries of the boxes of each row of
    /// the skew shape, left to right), checking that it is standard.
    pub fn new(shape: &YoungShape, rows: Vec<Vec<usize>>) -> Result<StandardTableau> {
        let lens: Vec<usize> = shape.outer.iter().zip(&shape.inner).map(|(a, m)| a - m).collect();
        let row_lens: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if row_lens != lens {
            return Err(Error::ShapeMismatch(format!(
                "row lengths {row_lens:?} do not fit shape {shape}"
            )));
        }
        let t = StandardTableau {
            rows,
            shape_outer: shape.outer.clone(),
            shape_inner: shape.inner.clone(),
        };
        if !t.is_standard() {
            return Err(Error::ShapeMismatch(format!("{t} is not a standard tableau")));
        }
        Ok(t)
    }

    /// Parses `"1,4,6/2,5/3"` (rows separated by `/`) against a shape.
    pub fn parse(shape: &YoungShape, s: &str) -> Result<StandardTableau> {
        let rows = s
            .split('/')
            .map(|r| {
                if r.trim().is_empty() {
                    return Ok(Vec::new());
                }
                r.split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ShapeMismatch(format!("bad tableau `{s}`")))?;
        StandardTableau::new(shape, rows)
    }

    /// The shape of the tableau.
    pub fn shape(&self) -> YoungShape {
        YoungShape {
            outer: self.shape_outer.clone(),
            inner: self.shape_inner.clone(),
        }
    }

    /// Rows of entries.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entry `T(b)` of the box `b = (row, column)`.
    pub fn value(&self, b: (usize, usize)) -> usize {
        self.rows[b.0][b.1 - self.shape_inner[b.0]]
    }

    /// The box `T^i` holding the entry `i`.
    pub fn box_of(&self, i: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(k) = row.iter().position(|&v| v == i) {
                return (r, self.shape_inner[r] + k);
            }
        }
        panic!("entry {i} not in tableau");
    }

    fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = (1..self.rows.len()).all(|r| {
            self.rows[r].iter().enumerate().all(|(k, &v)| {
                let c = self.shape_inner[r] + k;
                c < self.shape_inner[r - 1] || c >= self.shape_outer[r - 1] || self.value((r - 1, c)) < v
            })
        });
        rows_ok && cols_ok
    }

    /// The filling `(i, i+1)T`, if it is again standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        if i == 0 || i >= self.size() {
            return None;
        }
        let mut t = self.clone();
        for v in t.rows.iter_mut().flatten() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        t.is_standard().then_some(t)
    }

    /// Row word `w(T)`: entries read left to right, rows top to bottom.
    pub fn row_word(&self) -> Permutation {
        Permutation(self.rows.iter().flatten().copied().collect())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.size() >= 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                if wide {
                    s.join(",")
                } else {
                    s.concat()
                }
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// The row tableau `R_α`: rows filled consecutively.
pub fn row_tableau(shape: &YoungShape) -> StandardTableau {
    let mut next = 1;
    let rows = shape
        .outer
        .iter()
        .zip(&shape.inner)
        .map(|(a, m)| {
            let row: Vec<usize> = (next..next + (a - m)).collect();
            next += a - m;
            row
        })
        .collect();
    StandardTableau::new(shape, rows).expect("row filling is standard")
}

/// Row word `w(T)`.
pub fn row_word(t: &StandardTableau) -> Permutation {
    t.row_word()
}

/// Tableau of shape `shape` whose entry in box `boxes[j]` is `values[j]`.
fn tableau_from_box_values(shape: &YoungShape, values: &[usize]) -> StandardTableau {
    let mut rows: Vec<Vec<usize>> = shape.outer.iter().zip(&shape.inner).map(|(a, m)| vec![0; a - m]).collect();
    for (&(r, c), &v) in shape.boxes().iter().zip(values) {
        rows[r][c - shape.inner[r]] = v;
    }
    StandardTableau {
        rows,
        shape_outer: shape.outer.clone(),
        shape_inner: shape.inner.clone(),
    }
}

/// All standard tableaux of a shape, sorted.
pub fn standard_tableaux(shape: &YoungShape) -> Vec<StandardTableau> {
    let q = shape.box_poset();
    let mut out: Vec<StandardTableau> = q
        .linear_extensions()
        .map(|ext| {
            let mut values = vec![0; ext.len()];
            for (step, &b) in ext.iter().enumerate() {
                values[b] = step + 1;
            }
            tableau_from_box_values(shape, &values)
        })
        .collect();
    out.sort();
    out
}

/// An interval `Y(μ, α)` of Young's lattice with its tableau labeling.
#[derive(Debug, Clone)]
pub struct YoungInterval {
    /// The interval, elements named by their outer row lengths.
    pub poset: Poset,
    /// `λ_T(x ⋖ y) = T(b)` where `b` is the box of `y/x`.
    pub labeling: Labeling,
    /// The skew shape `α/μ`.
    pub shape: YoungShape,
    /// Order ideals of the box poset, one per element.
    pub ideals: Vec<u64>,
}

impl YoungInterval {
    /// The tableau `T_m` of a maximal chain: entry `i` in the box added at
    /// step `i`.
    pub fn tableau_of_chain(&self, m: &[usize]) -> Result<StandardTableau> {
        let boxes = self.shape.boxes();
        let mut values = vec![0; boxes.len()];
        if m.len() != boxes.len() + 1 {
            return Err(Error::InvalidChain("not a maximal chain of the interval".into()));
        }
        for (step, w) in m.windows(2).enumerate() {
            let added = self.ideals[w[1]] & !self.ideals[w[0]];
            if added.count_ones() != 1 || self.ideals[w[0]] & !self.ideals[w[1]] != 0 {
                return Err(Error::InvalidChain("consecutive elements are not covers".into()));
            }
            values[added.trailing_zeros() as usize] = step + 1;
        }
        Ok(tableau_from_box_values(&self.shape, &values))
    }

    /// The maximal chain `m_Q` adding the boxes `Q^1, Q^2, …` in turn.
    pub fn chain_of_tableau(&self, t: &StandardTableau) -> Result<Chain> {
        if t.shape() != self.shape {
            return Err(Error::ShapeMismatch(format!("{t} does not have shape {}", self.shape)));
        }
        let boxes = self.shape.boxes();
        let index: HashMap<u64, usize> = self.ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mask = 0u64;
        let mut chain = vec![index[&0]];
        for i in 1..=t.size() {
            let b = t.box_of(i);
            let j = boxes.iter().position(|&x| x == b).expect("box of shape");
            mask |= 1 << j;
            chain.push(index[&mask]);
        }
        Ok(chain)
    }
}

/// `Y(μ, α)` as the lattice of order ideals of the box poset of `α/μ`,
/// labeled by `λ_T`.
pub fn young_interval(shape: &YoungShape, t: &StandardTableau) -> Result<YoungInterval> {
    if t.shape() != *shape {
        return Err(Error::ShapeMismatch(format!("{t} does not have shape {shape}")));
    }
    let q = shape.box_poset();
    let boxes = shape.boxes();
    let mut e: Vec<usize> = (0..boxes.len()).collect();
    e.sort_by_key(|&j| t.value(boxes[j]));
    let (p, labeling, ideals) = distributive_lattice(&q, &e)?;
    debug_assert_eq!(ideals, order_ideals(&q));
    let names = ideals
        .iter()
        .map(|&mask| {
            let mut rows = shape.inner.clone();
            for (j, &(r, _)) in boxes.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    rows[r] += 1;
                }
            }
            while rows.last() == Some(&0) {
                rows.pop();
            }
            if rows.is_empty() {
                "∅".to_string()
            } else {
                rows.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        })
        .collect();
    let poset = Poset::from_covers(names, p.covers().to_vec(), true)?;
    Ok(YoungInterval {
        poset,
        labeling,
        shape: shape.clone(),
        ideals,
    })
}

fn swap_order(shape: &YoungShape, allowed: impl Fn(&StandardTableau, usize) -> bool) -> (Poset, Vec<StandardTableau>) {
    let tabs = standard_tableaux(shape);
    let index: HashMap<&StandardTableau, usize> = tabs.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rel = Vec::new();
    for (a, q) in tabs.iter().enumerate() {
        for i in 1..q.size() {
            if let Some(r) = q.swap(i) {
                if allowed(q, i) {
                    rel.push((a, index[&r]));
                }
            }
        }
    }
    let names = tabs.iter().map(|t| t.to_string()).collect();
    let p = Poset::from_relation(names, &rel, false).expect("swap relation is acyclic");
    (p, tabs)
}

/// `(ST(α), ≤_T)`: closure of `Q → (i, i+1)Q` when the swap is standard and
/// `T(Q^i) < T(Q^{i+1})`.
pub fn tableau_swap_poset(shape: &YoungShape, t: &StandardTableau) -> Result<(Poset, Vec<StandardTableau>)> {
    if t.shape() != *shape {
        return Err(Error::ShapeMismatch(format!("{t} does not have shape {shape}")));
    }
    Ok(swap_order(shape, |q, i| t.value(q.box_of(i)) < t.value(q.box_of(i + 1))))
}

/// Left order on `ST(α)`: closure of `Q → (i, i+1)Q` when the swap is
/// standard and `i` lies in a row strictly above `i + 1` in `Q`.
pub fn left_order(shape: &YoungShape) -> (Poset, Vec<StandardTableau>) {
    swap_order(shape, |q, i| q.box_of(i).0 < q.box_of(i + 1).0)
}

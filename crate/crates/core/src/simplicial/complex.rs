//! Finite based chain complexes of cells with integer incidence numbers.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::integer::Int;

/// Compressed incidence lists of one boundary operator `C_k -> C_{k-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Incidence {
    offsets: Vec<usize>,
    faces: Vec<u32>,
    coeffs: Vec<i32>,
}

impl Incidence {
    pub fn from_lists(lists: Vec<Vec<(u32, i32)>>) -> Self {
        let mut inc = Incidence {
            offsets: Vec::with_capacity(lists.len() + 1),
            faces: Vec::new(),
            coeffs: Vec::new(),
        };
        inc.offsets.push(0);
        for list in lists {
            inc.push_cell(list);
        }
        inc
    }

    fn empty(cells: usize) -> Self {
        Incidence {
            offsets: vec![0; cells + 1],
            faces: Vec::new(),
            coeffs: Vec::new(),
        }
    }

    /// Append one cell, merging repeated faces and dropping zero coefficients.
    pub fn push_cell(&mut self, mut list: Vec<(u32, i32)>) {
        if self.offsets.is_empty() {
            self.offsets.push(0);
        }
        list.sort_unstable_by_key(|&(f, _)| f);
        let mut i = 0;
        while i < list.len() {
            let f = list[i].0;
            let mut c = 0;
            while i < list.len() && list[i].0 == f {
                c += list[i].1;
                i += 1;
            }
            if c != 0 {
                self.faces.push(f);
                self.coeffs.push(c);
            }
        }
        self.offsets.push(self.faces.len());
    }

    pub fn cells(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn faces(&self, cell: usize) -> impl Iterator<Item = (u32, i32)> + '_ {
        let (a, b) = (self.offsets[cell], self.offsets[cell + 1]);
        self.faces[a..b].iter().copied().zip(self.coeffs[a..b].iter().copied())
    }

    pub fn nnz(&self) -> usize {
        self.faces.len()
    }
}

/// A finite cell complex described by its cellular chain complex.
///
/// Cells of degree `k` are numbered `0..count(k)`. When `truncated` is set
/// the complex is a skeleton of something larger, so its top-degree
/// (co)homology is not meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    counts: Vec<usize>,
    boundary: Vec<Incidence>,
    truncated: bool,
}

impl CellComplex {
    /// Build from per-degree incidence lists; `boundary[k]` lists the faces of
    /// each `k`-cell (`boundary[0]` must be empty lists). Checks `∂∂ = 0`.
    pub fn new(counts: Vec<usize>, boundary: Vec<Incidence>) -> Result<Self> {
        let cx = Self::new_unchecked(counts, boundary);
        cx.check_boundary_squares_to_zero()?;
        Ok(cx)
    }

    pub(crate) fn new_unchecked(counts: Vec<usize>, mut boundary: Vec<Incidence>) -> Self {
        boundary.resize_with(counts.len(), Incidence::default);
        if let Some(b0) = boundary.first_mut() {
            if b0.cells() != counts[0] {
                *b0 = Incidence::empty(counts[0]);
            }
        }
        for (k, b) in boundary.iter().enumerate() {
            debug_assert_eq!(b.cells(), counts[k], "incidence size mismatch in degree {k}");
        }
        CellComplex {
            counts,
            boundary,
            truncated: false,
        }
    }

    pub fn empty() -> Self {
        CellComplex {
            counts: Vec::new(),
            boundary: Vec::new(),
            truncated: false,
        }
    }

    /// The one-cell complex (a point).
    pub fn point() -> Self {
        Self::new_unchecked(vec![1], vec![Incidence::empty(1)])
    }

    pub fn with_truncated(mut self, truncated: bool) -> Self {
        self.truncated = truncated;
        self
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Highest degree carrying cells, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.counts.iter().rposition(|&c| c > 0)
    }

    /// Number of stored degrees (`0..num_degrees()`).
    pub fn num_degrees(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total_cells(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn incidence(&self, k: usize) -> Option<&Incidence> {
        self.boundary.get(k)
    }

    /// Faces of the `k`-cell `c` with incidence numbers.
    pub fn faces(&self, k: usize, c: usize) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.boundary[k].faces(c)
    }

    /// Alternating cell count.
    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn check_boundary_squares_to_zero(&self) -> Result<()> {
        for k in 2..self.counts.len() {
            let mut acc: FxHashMap<u32, i64> = FxHashMap::default();
            for c in 0..self.counts[k] {
                acc.clear();
                for (f, a) in self.faces(k, c) {
                    for (g, b) in self.faces(k - 1, f as usize) {
                        *acc.entry(g).or_insert(0) += a as i64 * b as i64;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    return Err(Error::Input(format!(
                        "boundary of boundary is nonzero on {k}-cell {c}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Coboundary `δα` of a `k`-cochain; empty past the top stored degree.
    pub fn coboundary(&self, alpha: &Cochain) -> Cochain {
        let k = alpha.degree;
        assert_eq!(alpha.values.len(), self.count(k), "cochain size mismatch");
        let n = self.count(k + 1);
        let mut out = vec![Int::ZERO; n];
        for (c, slot) in out.iter_mut().enumerate() {
            let mut s = Int::ZERO;
            for (f, a) in self.faces(k + 1, c) {
                let v = &alpha.values[f as usize];
                if !v.is_zero() {
                    s += &v.mul_small(a as i64);
                }
            }
            *slot = s;
        }
        Cochain::new(k + 1, out)
    }

    /// `δα = 0`, treating the top stored degree of a truncated complex as
    /// unconstrained.
    pub fn is_cocycle(&self, alpha: &Cochain) -> bool {
        if alpha.degree + 1 >= self.counts.len() {
            return true;
        }
        self.coboundary(alpha).is_zero()
    }

    /// Flip the orientation of every cell with `flips[k][c] == -1`.
    pub fn reoriented(&self, flips: &[Vec<i8>]) -> CellComplex {
        let mut boundary = Vec::with_capacity(self.counts.len());
        for k in 0..self.counts.len() {
            if k == 0 {
                boundary.push(self.boundary[0].clone());
                continue;
            }
            let mut inc = Incidence::default();
            for c in 0..self.counts[k] {
                let sc = flips[k][c] as i32;
                inc.push_cell(
                    self.faces(k, c)
                        .map(|(f, a)| (f, a * sc * flips[k - 1][f as usize] as i32))
                        .collect(),
                );
            }
            boundary.push(inc);
        }
        CellComplex {
            counts: self.counts.clone(),
            boundary,
            truncated: self.truncated,
        }
    }

    /// Keep only cells of degree `<= max_dim`.
    pub fn skeleton(&self, max_dim: usize) -> CellComplex {
        if max_dim + 1 >= self.counts.len() {
            return self.clone();
        }
        CellComplex {
            counts: self.counts[..=max_dim].to_vec(),
            boundary: self.boundary[..=max_dim].to_vec(),
            truncated: true,
        }
    }

    /// The relative complex `C(K)/C(A)` for a subcomplex `A` given as a
    /// membership mask. Returns the complex and, per degree, the surviving
    /// cells of `self` in order.
    pub fn relative(&self, sub: &[Vec<bool>]) -> Result<RelativeComplex> {
        if sub.len() != self.counts.len()
            || sub.iter().zip(&self.counts).any(|(m, &c)| m.len() != c)
        {
            return Err(Error::NotSubcomplex("mask shape does not match complex".into()));
        }
        for k in 1..self.counts.len() {
            for c in 0..self.counts[k] {
                if sub[k][c] && self.faces(k, c).any(|(f, _)| !sub[k - 1][f as usize]) {
                    return Err(Error::NotSubcomplex(format!(
                        "{k}-cell {c} is in the subcomplex but one of its faces is not"
                    )));
                }
            }
        }
        let mut kept: Vec<Vec<u32>> = Vec::with_capacity(self.counts.len());
        let mut new_index: Vec<Vec<Option<u32>>> = Vec::with_capacity(self.counts.len());
        for k in 0..self.counts.len() {
            let mut ks = Vec::new();
            let mut idx = vec![None; self.counts[k]];
            for c in 0..self.counts[k] {
                if !sub[k][c] {
                    idx[c] = Some(ks.len() as u32);
                    ks.push(c as u32);
                }
            }
            kept.push(ks);
            new_index.push(idx);
        }
        let counts: Vec<usize> = kept.iter().map(Vec::len).collect();
        let mut boundary = Vec::with_capacity(counts.len());
        for k in 0..counts.len() {
            let mut inc = Incidence::default();
            for &c in &kept[k] {
                let list = if k == 0 {
                    Vec::new()
                } else {
                    self.faces(k, c as usize)
                        .filter_map(|(f, a)| new_index[k - 1][f as usize].map(|g| (g, a)))
                        .collect()
                };
                inc.push_cell(list);
            }
            boundary.push(inc);
        }
        let complex = CellComplex {
            counts,
            boundary,
            truncated: self.truncated,
        };
        Ok(RelativeComplex {
            complex,
            kept,
            new_index,
        })
    }
}

/// A relative complex together with its cell bookkeeping.
#[derive(Clone, Debug)]
pub struct RelativeComplex {
    pub complex: CellComplex,
    /// `kept[k][i]` = index in the ambient complex of relative cell `i`.
    pub kept: Vec<Vec<u32>>,
    new_index: Vec<Vec<Option<u32>>>,
}

impl RelativeComplex {
    /// Restrict an ambient cochain to the relative cells.
    pub fn restrict(&self, alpha: &Cochain) -> Cochain {
        let k = alpha.degree;
        Cochain::new(
            k,
            self.kept[k].iter().map(|&c| alpha.values[c as usize].clone()).collect(),
        )
    }

    /// Extend a relative cochain by zero on the subcomplex.
    pub fn extend(&self, alpha: &Cochain) -> Cochain {
        let k = alpha.degree;
        let mut values = vec![Int::ZERO; self.new_index[k].len()];
        for (i, &c) in self.kept[k].iter().enumerate() {
            values[c as usize] = alpha.values[i].clone();
        }
        Cochain::new(k, values)
    }

    /// True when the ambient cochain vanishes on the subcomplex.
    pub fn vanishes_on_subcomplex(&self, alpha: &Cochain) -> bool {
        self.new_index[alpha.degree]
            .iter()
            .zip(&alpha.values)
            .all(|(idx, v)| idx.is_some() || v.is_zero())
    }

    pub fn relative_index(&self, k: usize, ambient: usize) -> Option<u32> {
        self.new_index[k][ambient]
    }
}

/// An integer cochain of a fixed degree, one value per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<Int>,
}

impl Cochain {
    pub fn new(degree: usize, values: Vec<Int>) -> Self {
        Cochain { degree, values }
    }

    pub fn zero(degree: usize, len: usize) -> Self {
        Cochain::new(degree, vec![Int::ZERO; len])
    }

    /// The constant cochain with value 1 on every cell of the given degree.
    pub fn constant_one(degree: usize, len: usize) -> Self {
        Cochain::new(degree, vec![Int::ONE; len])
    }

    pub fn from_i64(degree: usize, values: &[i64]) -> Self {
        Cochain::new(degree, values.iter().map(|&v| Int::from(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Int::is_zero)
    }

    pub fn scaled(&self, s: &Int) -> Cochain {
        Cochain::new(self.degree, self.values.iter().map(|v| v * s).collect())
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.len(), other.len());
        Cochain::new(
            self.degree,
            self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.len(), other.len());
        Cochain::new(
            self.degree,
            self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Circle as one vertex and one loop.
    fn loop_complex() -> CellComplex {
        CellComplex::new(
            vec![1, 1],
            vec![
                Incidence::from_lists(vec![vec![]]),
                Incidence::from_lists(vec![vec![(0, 1), (0, -1)]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn merged_incidences_cancel() {
        let cx = loop_complex();
        assert_eq!(cx.faces(1, 0).count(), 0);
        assert_eq!(cx.euler_characteristic(), 0);
    }

    #[test]
    fn rejects_nonzero_boundary_square() {
        // a 2-cell glued along a single edge of an interval
        let res = CellComplex::new(
            vec![2, 1, 1],
            vec![
                Incidence::from_lists(vec![vec![], vec![]]),
                Incidence::from_lists(vec![vec![(0, -1), (1, 1)]]),
                Incidence::from_lists(vec![vec![(0, 1)]]),
            ],
        );
        assert!(res.is_err());
    }

    #[test]
    fn relative_rejects_non_subcomplex() {
        let cx = CellComplex::new(
            vec![2, 1],
            vec![
                Incidence::from_lists(vec![vec![], vec![]]),
                Incidence::from_lists(vec![vec![(0, -1), (1, 1)]]),
            ],
        )
        .unwrap();
        let bad = vec![vec![false, false], vec![true]];
        assert!(matches!(cx.relative(&bad), Err(Error::NotSubcomplex(_))));
        let ends = vec![vec![true, true], vec![false]];
        let rel = cx.relative(&ends).unwrap();
        assert_eq!(rel.complex.counts(), &[0, 1]);
        assert_eq!(rel.complex.faces(1, 0).count(), 0);
    }
}

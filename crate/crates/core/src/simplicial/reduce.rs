//! Sparse elimination of unit entries of the coboundary operators.
//!
//! Each step removes a pair `(a, b)` of cells with `[∂b : a] = ±1` and
//! replaces the complex by a smaller chain homotopy equivalent one. The
//! recorded steps give explicit cochain maps in both directions.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rustc_hash::{FxHashMap, FxHashSet};

use super::complex::CellComplex;
use super::snf::Matrix;
use crate::integer::Int;

#[derive(Clone, Debug)]
struct Step {
    a: u32,
    b: u32,
    /// The pivot `[∂b : a]`, a unit.
    u: i8,
    /// Column `a` of `δ` without row `b`: `(k+1)`-cells.
    gamma: Vec<(u32, Int)>,
    /// Row `b` of `δ` without column `a`: `k`-cells.
    beta: Vec<(u32, Int)>,
}

/// A reduced cochain complex with the maps back to the original one.
#[derive(Clone, Debug)]
pub struct Reduction {
    counts: Vec<usize>,
    /// `steps[k]` eliminates pairs of a `k`-cell and a `(k+1)`-cell.
    steps: Vec<Vec<Step>>,
    /// Surviving cells per degree, increasing.
    remaining: Vec<Vec<u32>>,
    /// Reduced coboundary `δ'_k`, rows indexed by surviving `(k+1)`-cells,
    /// columns by surviving `k`-cells.
    reduced: Vec<Matrix>,
}

struct Elimination {
    rows: Vec<FxHashMap<u32, Int>>,
    cols: Vec<FxHashSet<u32>>,
    col_alive: Vec<bool>,
}

impl Elimination {
    fn best_pivot(&self, a: usize) -> Option<(usize, u32, i8)> {
        let clen = self.cols[a].len();
        let mut best: Option<(usize, u32, i8)> = None;
        for &r in &self.cols[a] {
            let v = &self.rows[r as usize][&(a as u32)];
            if !v.is_unit() {
                continue;
            }
            let cost = (clen - 1) * (self.rows[r as usize].len() - 1);
            if best.is_none_or(|(c, br, _)| (cost, r) < (c, br)) {
                best = Some((cost, r, v.signum() as i8));
            }
        }
        best
    }

    fn eliminate(&mut self, a: u32, b: u32, u: i8) -> Step {
        let beta: Vec<(u32, Int)> = self.rows[b as usize]
            .iter()
            .filter(|(&c, _)| c != a)
            .map(|(&c, v)| (c, v.clone()))
            .collect();
        let mut gamma: Vec<(u32, Int)> = self.cols[a as usize]
            .iter()
            .filter(|&&r| r != b)
            .map(|&r| (r, self.rows[r as usize][&a].clone()))
            .collect();
        gamma.sort_unstable_by_key(|&(r, _)| r);
        let mut beta = beta;
        beta.sort_unstable_by_key(|&(c, _)| c);
        let u_int = Int::from(u as i64);
        for (r, g) in &gamma {
            let row = &mut self.rows[*r as usize];
            row.remove(&a);
            let gu = g * &u_int;
            for (c, v) in &beta {
                let delta = &gu * v;
                let entry = row.entry(*c).or_insert(Int::ZERO);
                let was_zero = entry.is_zero();
                *entry -= &delta;
                if entry.is_zero() {
                    row.remove(c);
                    self.cols[*c as usize].remove(r);
                } else if was_zero {
                    self.cols[*c as usize].insert(*r);
                }
            }
        }
        for (c, _) in &beta {
            self.cols[*c as usize].remove(&b);
        }
        self.rows[b as usize].clear();
        self.cols[a as usize].clear();
        self.col_alive[a as usize] = false;
        Step { a, b, u, gamma, beta }
    }
}

impl Reduction {
    pub fn new(cx: &CellComplex) -> Self {
        let nd = cx.num_degrees();
        let counts = cx.counts().to_vec();
        let mut alive: Vec<Vec<bool>> = counts.iter().map(|&n| vec![true; n]).collect();
        let mut steps = Vec::with_capacity(nd);
        let mut matrices: Vec<Vec<FxHashMap<u32, Int>>> = Vec::with_capacity(nd);
        for k in 0..nd.saturating_sub(1) {
            let (nk, nk1) = (counts[k], counts[k + 1]);
            let mut rows: Vec<FxHashMap<u32, Int>> = Vec::with_capacity(nk1);
            let mut cols: Vec<FxHashSet<u32>> = vec![FxHashSet::default(); nk];
            for b in 0..nk1 {
                let mut row = FxHashMap::default();
                for (f, c) in cx.faces(k + 1, b) {
                    if alive[k][f as usize] {
                        row.insert(f, Int::from(c));
                        cols[f as usize].insert(b as u32);
                    }
                }
                rows.push(row);
            }
            let mut el = Elimination {
                rows,
                cols,
                col_alive: alive[k].clone(),
            };
            let mut heap = BinaryHeap::new();
            for a in 0..nk {
                if el.col_alive[a] {
                    if let Some((cost, _, _)) = el.best_pivot(a) {
                        heap.push(Reverse((cost, a as u32)));
                    }
                }
            }
            let mut ksteps = Vec::new();
            while let Some(Reverse((cost, a))) = heap.pop() {
                if !el.col_alive[a as usize] {
                    continue;
                }
                let Some((now, b, u)) = el.best_pivot(a as usize) else {
                    continue;
                };
                if now > cost {
                    heap.push(Reverse((now, a)));
                    continue;
                }
                let step = el.eliminate(a, b, u);
                alive[k][a as usize] = false;
                alive[k + 1][b as usize] = false;
                for (c, _) in &step.beta {
                    if let Some((c2, _, _)) = el.best_pivot(*c as usize) {
                        heap.push(Reverse((c2, *c)));
                    }
                }
                ksteps.push(step);
            }
            steps.push(ksteps);
            matrices.push(el.rows);
        }
        let remaining: Vec<Vec<u32>> = alive
            .iter()
            .map(|m| (0..m.len() as u32).filter(|&c| m[c as usize]).collect())
            .collect();
        let mut reduced = Vec::with_capacity(matrices.len());
        for (k, rows) in matrices.into_iter().enumerate() {
            let pos: FxHashMap<u32, usize> =
                remaining[k].iter().enumerate().map(|(i, &c)| (c, i)).collect();
            let mut m = Matrix::zeros(remaining[k + 1].len(), remaining[k].len());
            for (i, &b) in remaining[k + 1].iter().enumerate() {
                for (c, v) in &rows[b as usize] {
                    if let Some(&j) = pos.get(c) {
                        m.set(i, j, v.clone());
                    }
                }
            }
            reduced.push(m);
        }
        Reduction {
            counts,
            steps,
            remaining,
            reduced,
        }
    }

    pub fn remaining(&self, k: usize) -> &[u32] {
        self.remaining.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Reduced coboundary out of degree `k`; `None` past the top degree.
    pub fn reduced_coboundary(&self, k: usize) -> Option<&Matrix> {
        self.reduced.get(k)
    }

    /// Number of cells eliminated in pairs.
    pub fn eliminated_pairs(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }

    /// Cochain map original → reduced in degree `k`.
    pub fn project(&self, k: usize, values: &[Int]) -> Vec<Int> {
        let mut x = values.to_vec();
        if k > 0 {
            for st in &self.steps[k - 1] {
                let xb = std::mem::take(&mut x[st.b as usize]);
                if xb.is_zero() {
                    continue;
                }
                let s = xb.mul_small(st.u as i64);
                for (r, g) in &st.gamma {
                    x[*r as usize] -= &(g * &s);
                }
            }
        }
        self.remaining[k].iter().map(|&c| x[c as usize].clone()).collect()
    }

    /// Cochain map reduced → original in degree `k`.
    pub fn lift(&self, k: usize, reduced: &[Int]) -> Vec<Int> {
        let mut x = vec![Int::ZERO; self.counts[k]];
        for (&c, v) in self.remaining[k].iter().zip(reduced) {
            x[c as usize] = v.clone();
        }
        if let Some(ksteps) = self.steps.get(k) {
            for st in ksteps.iter().rev() {
                let mut s = Int::ZERO;
                for (c, v) in &st.beta {
                    let xc = &x[*c as usize];
                    if !xc.is_zero() {
                        s += &(v * xc);
                    }
                }
                x[st.a as usize] = (-s).mul_small(st.u as i64);
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::simplicial::SimplicialComplex;
    use crate::simplicial::complex::Cochain;

    #[test]
    fn disk_reduces_to_a_point() {
        let disk = SimplicialComplex::from_top_simplices(&[[0, 1, 2]]).unwrap();
        let r = Reduction::new(disk.cells());
        let sizes: Vec<usize> = (0..3).map(|k| r.remaining(k).len()).collect();
        assert_eq!(sizes, vec![1, 0, 0]);
    }

    #[test]
    fn lift_gives_cocycles_and_project_inverts_lift() {
        let circle = SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let r = Reduction::new(circle.cells());
        assert_eq!(r.remaining(1).len(), 1);
        let lifted = r.lift(1, &[Int::ONE]);
        let z = Cochain::new(1, lifted.clone());
        assert!(circle.cells().is_cocycle(&z));
        assert_eq!(r.project(1, &lifted), vec![Int::ONE]);
        let unit = r.lift(0, &[Int::ONE]);
        assert!(unit.iter().all(|v| *v == Int::ONE));
    }
}

//! Integral cohomology with explicit generators and class coordinates.

use super::complex::{CellComplex, Cochain};
use super::reduce::Reduction;
use super::snf::{column_reduce, smith_normal_form, Matrix};
use crate::error::{Error, Result};
use crate::integer::Int;

/// One cohomology group `H^k` with a chosen basis.
///
/// Generators are listed free part first, then torsion generators with
/// increasing orders.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    /// Orders of the torsion summands, each > 1.
    pub torsion: Vec<Int>,
    /// Cocycles on the original complex, one per basis element.
    pub generators: Vec<Cochain>,
    /// Maps a reduced cocycle to its coordinates.
    coords: Matrix,
}

impl CohomologyGroup {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Order of basis element `i`; zero for free generators.
    pub fn order(&self, i: usize) -> Int {
        if i < self.free_rank {
            Int::ZERO
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }
}

/// Cohomology of a cell complex in every degree it determines.
#[derive(Clone, Debug)]
pub struct Cohomology {
    complex: CellComplex,
    reduction: Reduction,
    groups: Vec<CohomologyGroup>,
}

impl Cohomology {
    pub fn new(cx: &CellComplex) -> Self {
        let reduction = Reduction::new(cx);
        let top = if cx.is_truncated() {
            cx.num_degrees().saturating_sub(1)
        } else {
            cx.num_degrees()
        };
        let groups = (0..top).map(|k| group(cx, &reduction, k)).collect();
        Cohomology {
            complex: cx.clone(),
            reduction,
            groups,
        }
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    /// Number of degrees with computed groups.
    pub fn num_degrees(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, k: usize) -> Result<&CohomologyGroup> {
        self.groups.get(k).ok_or(Error::DegreeOutOfRange {
            degree: k,
            max: self.groups.len().saturating_sub(1),
        })
    }

    pub fn groups(&self) -> &[CohomologyGroup] {
        &self.groups
    }

    /// Free ranks of `H^k` for every computed degree.
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.free_rank).collect()
    }

    /// Betti number and torsion coefficients of `H_k`.
    pub fn homology(&self, k: usize) -> Result<(usize, Vec<Int>)> {
        let g = self.group(k)?;
        let torsion = if k + 1 < self.groups.len() {
            self.groups[k + 1].torsion.clone()
        } else if k + 1 >= self.complex.num_degrees() && !self.complex.is_truncated() {
            Vec::new()
        } else {
            return Err(Error::DegreeOutOfRange {
                degree: k,
                max: self.groups.len().saturating_sub(2),
            });
        };
        Ok((g.free_rank, torsion))
    }

    fn check(&self, alpha: &Cochain) -> Result<()> {
        if alpha.len() != self.complex.count(alpha.degree) {
            return Err(Error::MismatchedHost(format!(
                "cochain has {} values but the complex has {} cells in degree {}",
                alpha.len(),
                self.complex.count(alpha.degree),
                alpha.degree
            )));
        }
        self.group(alpha.degree)?;
        if !self.complex.is_cocycle(alpha) {
            return Err(Error::NotCocycle {
                degree: alpha.degree,
            });
        }
        Ok(())
    }

    /// Coordinates of the class of a cocycle in the chosen basis; torsion
    /// coordinates are reduced into `0..order`.
    pub fn coordinates(&self, alpha: &Cochain) -> Result<Vec<Int>> {
        self.check(alpha)?;
        let g = &self.groups[alpha.degree];
        let projected = self.reduction.project(alpha.degree, &alpha.values);
        let mut c = g.coords.mul_vec(&projected);
        for (i, v) in c.iter_mut().enumerate().skip(g.free_rank) {
            *v = v.rem_euclid(&g.order(i));
        }
        Ok(c)
    }

    pub fn is_coboundary(&self, alpha: &Cochain) -> Result<bool> {
        Ok(self.coordinates(alpha)?.iter().all(Int::is_zero))
    }

    pub fn same_class(&self, a: &Cochain, b: &Cochain) -> Result<bool> {
        if a.degree != b.degree {
            return Ok(false);
        }
        self.is_coboundary(&a.sub(b))
    }

    /// The cocycle `Σ c_i g_i`.
    pub fn cocycle_from_coordinates(&self, k: usize, coords: &[Int]) -> Result<Cochain> {
        let g = self.group(k)?;
        let mut out = Cochain::zero(k, self.complex.count(k));
        for (c, gen) in coords.iter().zip(&g.generators) {
            if !c.is_zero() {
                out = out.add(&gen.scaled(c));
            }
        }
        Ok(out)
    }
}

fn group(cx: &CellComplex, red: &Reduction, k: usize) -> CohomologyGroup {
    let n = red.remaining(k).len();
    let b = red.reduced_coboundary(k).cloned().unwrap_or_else(|| Matrix::zeros(0, n));
    let a = if k > 0 {
        red.reduced_coboundary(k - 1).cloned().expect("lower coboundary")
    } else {
        Matrix::zeros(n, 0)
    };
    let (rho, q, q_inv) = column_reduce(&b);
    // kernel of B is spanned by the trailing columns of Q
    let kernel = q.col_block(rho, n);
    let q_inv_tail = q_inv.row_block(rho, n);
    let e = q_inv_tail.mul(&a);
    let se = smith_normal_form(&e);
    let coords_all = se.p.mul(&q_inv_tail);
    let gens_all = kernel.mul(&se.p_inv);
    let r = se.rank();
    let mut free_idx: Vec<usize> = (r..n - rho).collect();
    let mut tors_idx: Vec<usize> = (0..r).filter(|&i| !se.diagonal[i].is_one()).collect();
    let torsion: Vec<Int> = tors_idx.iter().map(|&i| se.diagonal[i].clone()).collect();
    let mut order = Vec::new();
    order.append(&mut free_idx);
    let free_rank = order.len();
    order.append(&mut tors_idx);

    let mut coords = Matrix::zeros(order.len(), n);
    let mut generators = Vec::with_capacity(order.len());
    for (row, &i) in order.iter().enumerate() {
        let gen_reduced = gens_all.column(i);
        let mut values = red.lift(k, &gen_reduced);
        let mut sign = Int::ONE;
        if row < free_rank {
            if let Some(first) = values.iter().find(|v| !v.is_zero()) {
                if first.signum() < 0 {
                    sign = Int::from(-1);
                }
            }
        }
        if !sign.is_one() {
            values.iter_mut().for_each(|v| *v = -&*v);
        }
        for j in 0..n {
            coords.set(row, j, coords_all.get(i, j) * &sign);
        }
        generators.push(Cochain::new(k, values));
    }
    debug_assert!(generators.iter().all(|g| cx.is_cocycle(g)));
    CohomologyGroup {
        degree: k,
        free_rank,
        torsion,
        generators,
        coords,
    }
}

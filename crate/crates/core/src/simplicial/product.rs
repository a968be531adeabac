//! Cartesian products of cell complexes and cup/cross products.

use super::complex::{CellComplex, Cochain, Incidence};
use super::simplicial::SimplicialComplex;
use crate::error::{Error, Result};
use crate::integer::Int;
use crate::par;

/// The product cell complex `X × Y`: cells are pairs of cells, with the
/// Koszul rule `∂(a × b) = ∂a × b + (-1)^|a| a × ∂b`.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    left: Vec<usize>,
    right: Vec<usize>,
    /// `offsets[d][i]` = first index of the block of cells `(i, d - i)`.
    offsets: Vec<Vec<usize>>,
    complex: CellComplex,
}

impl ProductComplex {
    pub fn new(x: &CellComplex, y: &CellComplex) -> Self {
        let left = x.counts().to_vec();
        let right = y.counts().to_vec();
        let nd = if left.is_empty() || right.is_empty() {
            0
        } else {
            left.len() + right.len() - 1
        };
        let mut offsets = Vec::with_capacity(nd);
        let mut counts = Vec::with_capacity(nd);
        for d in 0..nd {
            let mut off = Vec::new();
            let mut total = 0;
            for i in 0..left.len() {
                off.push(total);
                if d >= i && d - i < right.len() {
                    total += left[i] * right[d - i];
                }
            }
            offsets.push(off);
            counts.push(total);
        }
        let mut pc = ProductComplex {
            left,
            right,
            offsets,
            complex: CellComplex::empty(),
        };
        let mut boundary = Vec::with_capacity(nd);
        for d in 0..nd {
            let mut inc = Incidence::default();
            for i in 0..pc.left.len() {
                if d < i || d - i >= pc.right.len() {
                    continue;
                }
                let j = d - i;
                for a in 0..pc.left[i] {
                    for b in 0..pc.right[j] {
                        let mut list = Vec::new();
                        if i > 0 {
                            for (f, c) in x.faces(i, a) {
                                list.push((pc.index(i - 1, j, f as usize, b) as u32, c));
                            }
                        }
                        if j > 0 {
                            let s = if i % 2 == 0 { 1 } else { -1 };
                            for (f, c) in y.faces(j, b) {
                                list.push((pc.index(i, j - 1, a, f as usize) as u32, s * c));
                            }
                        }
                        inc.push_cell(list);
                    }
                }
            }
            boundary.push(inc);
        }
        pc.complex = CellComplex::new_unchecked(counts, boundary)
            .with_truncated(x.is_truncated() || y.is_truncated());
        debug_assert!(pc.complex.check_boundary_squares_to_zero().is_ok());
        pc
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    /// Index of the cell `a × b` with `|a| = i`, `|b| = j`.
    pub fn index(&self, i: usize, j: usize, a: usize, b: usize) -> usize {
        self.offsets[i + j][i] + a * self.right[j] + b
    }

    /// The pair `(i, a, b)` of a product cell of degree `d`.
    pub fn split(&self, d: usize, cell: usize) -> (usize, usize, usize) {
        let off = &self.offsets[d];
        let i = off.partition_point(|&o| o <= cell) - 1;
        // skip empty blocks sharing the same offset
        let i = (0..=i)
            .rev()
            .find(|&i| d >= i && d - i < self.right.len() && cell - off[i] < self.left[i] * self.right[d - i])
            .expect("cell in range");
        let j = d - i;
        let r = cell - off[i];
        (i, r / self.right[j], r % self.right[j])
    }

    /// Cross product `α × β` on the product.
    pub fn cross(&self, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
        let (p, q) = (alpha.degree, beta.degree);
        if alpha.len() != self.left.get(p).copied().unwrap_or(0)
            || beta.len() != self.right.get(q).copied().unwrap_or(0)
        {
            return Err(Error::MismatchedHost("cross product factor sizes do not match".into()));
        }
        let d = p + q;
        let mut out = Cochain::zero(d, self.complex.count(d));
        if out.is_empty() {
            return Ok(out);
        }
        let base = self.offsets[d][p];
        for (a, va) in alpha.values.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for (b, vb) in beta.values.iter().enumerate() {
                if !vb.is_zero() {
                    out.values[base + a * self.right[q] + b] = va * vb;
                }
            }
        }
        Ok(out)
    }
}

/// Alexander–Whitney cup product on a simplicial complex.
pub fn cup(k: &SimplicialComplex, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    let (p, q) = (alpha.degree, beta.degree);
    if alpha.len() != k.count(p) || beta.len() != k.count(q) {
        return Err(Error::MismatchedHost("cup product operands live on a different complex".into()));
    }
    let simplices = k.simplices(p + q);
    let values = par::map(simplices, |s| {
        let (Some(f), Some(b)) = (k.index_of(&s[..=p]), k.index_of(&s[p..])) else {
            return Int::ZERO;
        };
        let (x, y) = (&alpha.values[f as usize], &beta.values[b as usize]);
        if x.is_zero() || y.is_zero() {
            Int::ZERO
        } else {
            x * y
        }
    });
    Ok(Cochain::new(p + q, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::cohomology::Cohomology;

    fn circle() -> SimplicialComplex {
        SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    #[test]
    fn torus_from_circles() {
        let c = circle();
        let prod = ProductComplex::new(c.cells(), c.cells());
        assert_eq!(prod.complex().counts(), &[9, 18, 9]);
        assert_eq!(prod.complex().euler_characteristic(), 0);
        let h = Cohomology::new(prod.complex());
        assert_eq!(h.betti(), vec![1, 2, 1]);
        let hc = Cohomology::new(c.cells());
        let g = &hc.group(1).unwrap().generators[0];
        let top = prod.cross(g, g).unwrap();
        let coords = h.coordinates(&top).unwrap();
        assert_eq!(coords[0].abs(), Int::ONE);
        let unit = prod
            .cross(&Cochain::constant_one(0, 3), &Cochain::constant_one(0, 3))
            .unwrap();
        assert!(unit.values.iter().all(Int::is_one));
    }

    #[test]
    fn split_inverts_index() {
        let c = circle();
        let disk = SimplicialComplex::from_top_simplices(&[[0, 1, 2]]).unwrap();
        let prod = ProductComplex::new(c.cells(), disk.cells());
        for d in 0..prod.complex().num_degrees() {
            for cell in 0..prod.complex().count(d) {
                let (i, a, b) = prod.split(d, cell);
                assert_eq!(prod.index(i, d - i, a, b), cell);
            }
        }
    }

    #[test]
    fn cup_unit() {
        let c = circle();
        let h = Cohomology::new(c.cells());
        let g = &h.group(1).unwrap().generators[0];
        let one = Cochain::constant_one(0, 3);
        assert_eq!(cup(&c, &one, g).unwrap(), *g);
        assert_eq!(cup(&c, g, &one).unwrap(), *g);
    }
}

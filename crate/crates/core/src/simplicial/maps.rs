//! Cellular maps sending each cell to at most one signed cell.

use rustc_hash::FxHashMap;

use super::complex::{CellComplex, Cochain};
use crate::integer::Int;

/// A cellular map where every cell goes to `±` one cell of the same degree
/// or to zero (a degenerate image).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMap {
    images: Vec<Vec<Option<(u32, i8)>>>,
}

impl CellMap {
    pub fn new(images: Vec<Vec<Option<(u32, i8)>>>) -> Self {
        CellMap { images }
    }

    pub fn identity(cx: &CellComplex) -> Self {
        CellMap {
            images: cx
                .counts()
                .iter()
                .map(|&n| (0..n as u32).map(|c| Some((c, 1))).collect())
                .collect(),
        }
    }

    pub fn image(&self, k: usize, c: usize) -> Option<(u32, i8)> {
        self.images.get(k).and_then(|l| l[c])
    }

    pub fn images(&self, k: usize) -> &[Option<(u32, i8)>] {
        self.images.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn num_degrees(&self) -> usize {
        self.images.len()
    }

    /// `f*α`, i.e. `α ∘ f` on cells.
    pub fn pullback(&self, alpha: &Cochain) -> Cochain {
        let values = self
            .images(alpha.degree)
            .iter()
            .map(|img| match img {
                Some((t, s)) => {
                    let v = &alpha.values[*t as usize];
                    if *s > 0 {
                        v.clone()
                    } else {
                        -v
                    }
                }
                None => Int::ZERO,
            })
            .collect();
        Cochain::new(alpha.degree, values)
    }

    /// The same map after re-orienting source cells with `flips`.
    pub fn with_source_flips(&self, flips: &[Vec<i8>]) -> CellMap {
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(k, level)| {
                level
                    .iter()
                    .enumerate()
                    .map(|(c, img)| img.map(|(t, s)| (t, s * flips[k][c])))
                    .collect()
            })
            .collect();
        CellMap { images }
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &CellMap) -> CellMap {
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(k, level)| {
                level
                    .iter()
                    .map(|img| {
                        let (t, s) = (*img)?;
                        let (u, r) = then.image(k, t as usize)?;
                        Some((u, s * r))
                    })
                    .collect()
            })
            .collect();
        CellMap { images }
    }

    /// Checks `f ∂ = ∂ f` on every cell.
    pub fn is_chain_map(&self, from: &CellComplex, to: &CellComplex) -> bool {
        let mut lhs: FxHashMap<u32, i64> = FxHashMap::default();
        let mut rhs: FxHashMap<u32, i64> = FxHashMap::default();
        for k in 1..from.num_degrees() {
            for c in 0..from.count(k) {
                lhs.clear();
                rhs.clear();
                for (f, a) in from.faces(k, c) {
                    if let Some((t, s)) = self.image(k - 1, f as usize) {
                        *lhs.entry(t).or_insert(0) += a as i64 * s as i64;
                    }
                }
                if let Some((t, s)) = self.image(k, c) {
                    if k >= to.num_degrees() {
                        return false;
                    }
                    for (f, a) in to.faces(k, t as usize) {
                        *rhs.entry(f).or_insert(0) += a as i64 * s as i64;
                    }
                }
                lhs.retain(|_, v| *v != 0);
                rhs.retain(|_, v| *v != 0);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

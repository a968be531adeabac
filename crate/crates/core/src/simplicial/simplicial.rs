//! Abstract simplicial complexes with a global vertex order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rustc_hash::FxHashMap;

use super::complex::{CellComplex, Cochain, Incidence};
use super::maps::CellMap;
use crate::error::{Error, Result};
use crate::integer::Int;

/// A finite simplicial complex. Vertices are `0..num_vertices()`, ordered by
/// their original labels; every simplex is a strictly increasing vertex list.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    labels: Vec<u32>,
    simplices: Vec<Vec<Vec<u32>>>,
    index: Vec<FxHashMap<Vec<u32>, u32>>,
    cells: CellComplex,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.simplices == other.simplices
    }
}

impl SimplicialComplex {
    /// Face closure of a list of simplices given by vertex labels.
    pub fn from_top_simplices<S: AsRef<[u32]>>(tops: &[S]) -> Result<Self> {
        let mut labels = BTreeSet::new();
        for s in tops {
            let s = s.as_ref();
            let uniq: BTreeSet<u32> = s.iter().copied().collect();
            if uniq.len() != s.len() {
                return Err(Error::MalformedSimplex {
                    simplex: s.to_vec(),
                    reason: "repeated vertex".into(),
                });
            }
            if s.is_empty() {
                return Err(Error::MalformedSimplex {
                    simplex: Vec::new(),
                    reason: "empty simplex".into(),
                });
            }
            labels.extend(uniq);
        }
        let labels: Vec<u32> = labels.into_iter().collect();
        let relabel: FxHashMap<u32, u32> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as u32)).collect();
        let internal: Vec<Vec<u32>> = tops
            .iter()
            .map(|s| {
                let mut v: Vec<u32> = s.as_ref().iter().map(|l| relabel[l]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        Ok(Self::from_internal(labels, &internal))
    }

    /// Face closure of simplices already expressed in internal vertex ids
    /// (each sorted), with the given vertex labels.
    pub(crate) fn from_internal(labels: Vec<u32>, tops: &[Vec<u32>]) -> Self {
        let max_dim = tops.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut sets: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); max_dim];
        for s in tops {
            let n = s.len();
            // all nonempty subsets
            for mask in 1u32..(1u32 << n) {
                let face: Vec<u32> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect();
                sets[face.len() - 1].insert(face);
            }
        }
        let simplices: Vec<Vec<Vec<u32>>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Self::from_sorted_simplices(labels, simplices)
    }

    fn from_sorted_simplices(labels: Vec<u32>, simplices: Vec<Vec<Vec<u32>>>) -> Self {
        let index: Vec<FxHashMap<Vec<u32>, u32>> = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect())
            .collect();
        let counts: Vec<usize> = simplices.iter().map(Vec::len).collect();
        let mut boundary = Vec::with_capacity(counts.len());
        for (k, level) in simplices.iter().enumerate() {
            let mut inc = Incidence::default();
            for s in level {
                let mut list = Vec::new();
                if k > 0 {
                    for i in 0..s.len() {
                        let mut face = s.clone();
                        face.remove(i);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        list.push((index[k - 1][&face], sign));
                    }
                }
                inc.push_cell(list);
            }
            boundary.push(inc);
        }
        let cells = CellComplex::new_unchecked(counts, boundary);
        debug_assert!(cells.check_boundary_squares_to_zero().is_ok());
        SimplicialComplex {
            labels,
            simplices,
            index,
            cells,
        }
    }

    pub fn empty() -> Self {
        Self::from_sorted_simplices(Vec::new(), Vec::new())
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Original label of each internal vertex.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.dim()
    }

    pub fn simplices(&self, k: usize) -> &[Vec<u32>] {
        self.simplices.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<u32> {
        if simplex.is_empty() {
            return None;
        }
        self.index.get(simplex.len() - 1)?.get(simplex).copied()
    }

    pub fn cells(&self) -> &CellComplex {
        &self.cells
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.euler_characteristic()
    }

    /// Simplices not a proper face of another simplex, in internal ids.
    pub fn maximal_simplices(&self) -> Vec<Vec<u32>> {
        let mut covered: Vec<Vec<bool>> = self.simplices.iter().map(|l| vec![false; l.len()]).collect();
        for k in 1..self.simplices.len() {
            for s in &self.simplices[k] {
                for i in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(i);
                    covered[k - 1][self.index[k - 1][&f] as usize] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (k, level) in self.simplices.iter().enumerate() {
            for (i, s) in level.iter().enumerate() {
                if !covered[k][i] {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Membership mask of the subcomplex spanned by `tops` (internal ids).
    pub fn subcomplex_mask(&self, tops: &[Vec<u32>]) -> Result<Vec<Vec<bool>>> {
        let mut mask: Vec<Vec<bool>> = self.simplices.iter().map(|l| vec![false; l.len()]).collect();
        for s in tops {
            let n = s.len();
            for m in 1u32..(1u32 << n) {
                let face: Vec<u32> = (0..n).filter(|i| m & (1 << i) != 0).map(|i| s[i]).collect();
                let idx = self.index_of(&face).ok_or_else(|| {
                    Error::NotSubcomplex(format!("simplex {face:?} is not in the complex"))
                })?;
                mask[face.len() - 1][idx as usize] = true;
            }
        }
        Ok(mask)
    }

    /// Mask of all simplices whose vertices satisfy `pred`.
    pub fn full_subcomplex_mask(&self, pred: impl Fn(u32) -> bool) -> Vec<Vec<bool>> {
        self.simplices
            .iter()
            .map(|l| l.iter().map(|s| s.iter().all(|&v| pred(v))).collect())
            .collect()
    }

    /// Serialize as the plain-text complex format (maximal simplices,
    /// original labels).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in self.maximal_simplices() {
            let line: Vec<String> = s.iter().map(|&v| self.labels[v as usize].to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Relabel the complex so that vertices are `0..n` in the current order.
    pub fn with_canonical_labels(&self) -> Self {
        let mut c = self.clone();
        c.labels = (0..self.labels.len() as u32).collect();
        c
    }
}

/// Parse the complex file format: one simplex per line as whitespace
/// separated vertex indices, `#` starts a comment.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut tops = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut simplex = Vec::new();
        for tok in line.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("expected a non-negative vertex index, found {tok:?}"),
            })?;
            if simplex.contains(&v) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("repeated vertex {v}"),
                });
            }
            simplex.push(v);
        }
        tops.push(simplex);
    }
    SimplicialComplex::from_top_simplices(&tops)
}

/// A simplicial map given by its vertex map.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    pub vertex_map: Vec<u32>,
}

impl SimplicialMap {
    /// Validate that `vertex_map` sends every simplex of `from` to a simplex
    /// of `to`.
    pub fn new(from: &SimplicialComplex, to: &SimplicialComplex, vertex_map: Vec<u32>) -> Result<Self> {
        if vertex_map.len() != from.num_vertices() {
            return Err(Error::Input("vertex map has the wrong length".into()));
        }
        for level in &from.simplices {
            for s in level {
                let mut img: Vec<u32> = s.iter().map(|&v| vertex_map[v as usize]).collect();
                img.sort_unstable();
                img.dedup();
                if to.index_of(&img).is_none() {
                    return Err(Error::Input(format!("simplex {s:?} maps to non-simplex {img:?}")));
                }
            }
        }
        Ok(SimplicialMap { vertex_map })
    }

    /// The induced signed cellular map; degenerate images are dropped.
    pub fn cell_map(&self, from: &SimplicialComplex, to: &SimplicialComplex) -> CellMap {
        let images = from
            .simplices
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|s| {
                        let img: Vec<u32> = s.iter().map(|&v| self.vertex_map[v as usize]).collect();
                        let (sorted, sign) = sort_with_sign(&img)?;
                        Some((to.index_of(&sorted).expect("validated"), sign))
                    })
                    .collect()
            })
            .collect();
        CellMap::new(images)
    }

    /// True when the vertex map is weakly increasing on every simplex.
    pub fn is_order_preserving(&self, from: &SimplicialComplex) -> bool {
        from.simplices.iter().flatten().all(|s| {
            s.windows(2)
                .all(|w| self.vertex_map[w[0] as usize] <= self.vertex_map[w[1] as usize])
        })
    }

    pub fn pullback(&self, from: &SimplicialComplex, to: &SimplicialComplex, alpha: &Cochain) -> Cochain {
        self.cell_map(from, to).pullback(alpha)
    }
}

/// Sort distinct values, returning the permutation sign; `None` on repeats.
pub(crate) fn sort_with_sign(v: &[u32]) -> Option<(Vec<u32>, i8)> {
    let mut w = v.to_vec();
    let mut sign = 1i8;
    // insertion sort, counting transpositions
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && w[j - 1] == w[j] {
            return None;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, sign))
}

/// Triangulated product `K × L` with the staircase triangulation. Vertex
/// `(v, w)` gets id `v * |L| + w`, so the order is lexicographic.
pub fn simplicial_product(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    let nl = l.num_vertices() as u32;
    let mut tops = Vec::new();
    for s in k.maximal_simplices() {
        for t in l.maximal_simplices() {
            staircases(&s, &t, &mut |path: &[(u32, u32)]| {
                tops.push(path.iter().map(|&(a, b)| a * nl + b).collect::<Vec<u32>>());
            });
        }
    }
    let labels: Vec<u32> = (0..(k.num_vertices() as u32 * nl)).collect();
    SimplicialComplex::from_internal(labels, &tops)
}

fn staircases(s: &[u32], t: &[u32], emit: &mut impl FnMut(&[(u32, u32)])) {
    fn rec(s: &[u32], t: &[u32], i: usize, j: usize, path: &mut Vec<(u32, u32)>, emit: &mut impl FnMut(&[(u32, u32)])) {
        path.push((s[i], t[j]));
        if i + 1 == s.len() && j + 1 == t.len() {
            emit(path);
        }
        if i + 1 < s.len() {
            rec(s, t, i + 1, j, path, emit);
        }
        if j + 1 < t.len() {
            rec(s, t, i, j + 1, path, emit);
        }
        path.pop();
    }
    let mut path = Vec::new();
    rec(s, t, 0, 0, &mut path, emit);
}

/// Projections of the staircase product onto its factors.
pub fn product_projections(k: &SimplicialComplex, l: &SimplicialComplex) -> (Vec<u32>, Vec<u32>) {
    let nl = l.num_vertices() as u32;
    let n = k.num_vertices() as u32 * nl;
    ((0..n).map(|v| v / nl).collect(), (0..n).map(|v| v % nl).collect())
}

/// Evaluate a cochain on a simplex given by vertices (sorted).
pub fn eval_on(complex: &SimplicialComplex, alpha: &Cochain, simplex: &[u32]) -> Int {
    match complex.index_of(simplex) {
        Some(i) => alpha.values[i as usize].clone(),
        None => Int::ZERO,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_and_disk() {
        let circle = SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(circle.cells().counts(), &[3, 3]);
        let disk = SimplicialComplex::from_top_simplices(&[[0, 1, 2]]).unwrap();
        assert_eq!(disk.cells().counts(), &[3, 3, 1]);
        let empty = SimplicialComplex::from_top_simplices::<Vec<u32>>(&[]).unwrap();
        assert_eq!(empty.cells().total_cells(), 0);
        assert_eq!(empty.dim(), None);
    }

    #[test]
    fn repeated_vertex_is_rejected() {
        let err = SimplicialComplex::from_top_simplices(&[[0, 1, 1]]).unwrap_err();
        assert!(matches!(err, Error::MalformedSimplex { .. }));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let ok = parse_complex("# a triangle\n0 1 2  # top\n\n").unwrap();
        assert_eq!(ok.count(2), 1);
        let err = parse_complex("0 1\n1 x\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, message: "expected a non-negative vertex index, found \"x\"".into() });
        let err = parse_complex("0 1\n\n2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn text_round_trip_keeps_labels() {
        let c = parse_complex("10 20\n20 30 40\n").unwrap();
        let again = parse_complex(&c.to_text()).unwrap();
        assert_eq!(c, again);
        assert_eq!(c.labels(), &[10, 20, 30, 40]);
    }

    #[test]
    fn staircase_product_of_edges_is_a_square() {
        let e = SimplicialComplex::from_top_simplices(&[[0, 1]]).unwrap();
        let sq = simplicial_product(&e, &e);
        assert_eq!(sq.cells().counts(), &[4, 5, 2]);
        assert_eq!(sq.euler_characteristic(), 1);
    }

    #[test]
    fn sorting_sign() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }
}

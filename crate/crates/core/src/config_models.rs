//! Deleted-product cell models of ordered, unordered and colored
//! configuration spaces of a simplicial complex.
//!
//! A cell is a tuple of pairwise vertex-disjoint simplices split into color
//! blocks; inside a block the simplices are sorted, which realizes the
//! quotient by the product of symmetric groups. Simplices are numbered
//! globally by dimension and then lexicographically.

use crate::covers::CoveringMap;
use crate::error::{Error, Result};
use crate::integer::Int;
use crate::par;
use crate::simplicial::{
    CellAction, CellComplex, CellMap, Cochain, Incidence, ProductComplex, SimplicialComplex,
};

/// Most points a model may have (tuples are packed into a `u128`).
pub const MAX_POINTS: usize = 4;

/// Default cap on the number of cells of a single model.
pub const DEFAULT_GUARD: usize = 5_000_000;

#[derive(Clone, Copy, Debug)]
pub struct ModelOptions {
    /// Build only cells of degree at most this.
    pub max_dim: Option<usize>,
    pub guard: usize,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions {
            max_dim: None,
            guard: DEFAULT_GUARD,
        }
    }
}

/// The simplices of a complex with global ids.
#[derive(Clone, Debug, PartialEq)]
struct SimplexTable {
    dims: Vec<u8>,
    verts: Vec<Vec<u32>>,
    faces: Vec<Vec<(u32, i8)>>,
    num_vertices: usize,
}

impl SimplexTable {
    fn new(k: &SimplicialComplex) -> Self {
        let mut offsets = vec![0usize];
        let nd = k.cells().num_degrees();
        for d in 0..nd {
            offsets.push(offsets[d] + k.count(d));
        }
        let mut t = SimplexTable {
            dims: Vec::new(),
            verts: Vec::new(),
            faces: Vec::new(),
            num_vertices: k.num_vertices(),
        };
        for d in 0..nd {
            for (c, s) in k.simplices(d).iter().enumerate() {
                t.dims.push(d as u8);
                t.verts.push(s.clone());
                t.faces.push(
                    k.cells()
                        .faces(d, c)
                        .map(|(f, a)| ((offsets[d - 1] + f as usize) as u32, a as i8))
                        .collect(),
                );
            }
        }
        t
    }

    fn len(&self) -> usize {
        self.dims.len()
    }
}

fn pack(t: &[u32]) -> u128 {
    t.iter().fold(0u128, |acc, &g| (acc << 32) | g as u128)
}

fn unpack(key: u128, n: usize, out: &mut [u32; MAX_POINTS]) {
    for i in 0..n {
        out[i] = (key >> (32 * (n - 1 - i))) as u32;
    }
}

#[inline]
fn koszul(a: u8, b: u8) -> i8 {
    if a & b & 1 == 1 {
        -1
    } else {
        1
    }
}

struct Enumerator<'a> {
    table: &'a SimplexTable,
    first: Vec<bool>,
    limit: usize,
}

impl Enumerator<'_> {
    fn run(&self, pos: usize, tuple: &mut [u32; MAX_POINTS], used: &mut [bool], deg: usize, visit: &mut impl FnMut(&[u32], usize)) {
        let n = self.first.len();
        if pos == n {
            visit(&tuple[..n], deg);
            return;
        }
        let start = if self.first[pos] { 0 } else { tuple[pos - 1] as usize + 1 };
        for g in start..self.table.len() {
            let d = self.table.dims[g] as usize;
            if deg + d > self.limit {
                break;
            }
            let vs = &self.table.verts[g];
            if vs.iter().any(|&v| used[v as usize]) {
                continue;
            }
            for &v in vs {
                used[v as usize] = true;
            }
            tuple[pos] = g as u32;
            self.run(pos + 1, tuple, used, deg + d, visit);
            for &v in vs {
                used[v as usize] = false;
            }
        }
    }

    /// Visit every canonical tuple, partitioned by leading simplex.
    fn for_each<R: Send>(&self, init: impl Fn() -> R + Sync, step: impl Fn(&mut R, &[u32], usize) + Sync) -> Vec<R> {
        if self.first.is_empty() {
            let mut r = init();
            step(&mut r, &[], 0);
            return vec![r];
        }
        par::map_range(self.table.len(), |g| {
            let mut r = init();
            let d = self.table.dims[g] as usize;
            if d <= self.limit {
                let mut used = vec![false; self.table.num_vertices];
                for &v in &self.table.verts[g] {
                    used[v as usize] = true;
                }
                let mut tuple = [0u32; MAX_POINTS];
                tuple[0] = g as u32;
                self.run(1, &mut tuple, &mut used, d, &mut |t, deg| step(&mut r, t, deg));
            }
            r
        })
    }
}

fn first_in_block(blocks: &[usize]) -> Vec<bool> {
    let mut out = Vec::new();
    for &b in blocks {
        for i in 0..b {
            out.push(i == 0);
        }
    }
    out
}

fn check_blocks(blocks: &[usize]) -> Result<usize> {
    let n: usize = blocks.iter().sum();
    if n > MAX_POINTS {
        return Err(Error::Input(format!("models support at most {MAX_POINTS} points, got {n}")));
    }
    Ok(n)
}

/// Number of cells per degree of the model with color `blocks`, up to
/// degree `limit`.
pub fn count_cells(k: &SimplicialComplex, blocks: &[usize], limit: usize) -> Result<Vec<usize>> {
    check_blocks(blocks)?;
    let table = SimplexTable::new(k);
    Ok(count_with(&table, blocks, limit))
}

fn count_with(table: &SimplexTable, blocks: &[usize], limit: usize) -> Vec<usize> {
    let e = Enumerator {
        table,
        first: first_in_block(blocks),
        limit,
    };
    let parts = e.for_each(Vec::new, |r: &mut Vec<usize>, _, deg| {
        if r.len() <= deg {
            r.resize(deg + 1, 0);
        }
        r[deg] += 1;
    });
    let mut total: Vec<usize> = Vec::new();
    for p in parts {
        if total.len() < p.len() {
            total.resize(p.len(), 0);
        }
        for (i, c) in p.into_iter().enumerate() {
            total[i] += c;
        }
    }
    total
}

/// A configuration-space model: cells are block-sorted tuples of pairwise
/// disjoint simplices.
#[derive(Clone, Debug)]
pub struct ConfigModel {
    base: SimplicialComplex,
    table: SimplexTable,
    blocks: Vec<usize>,
    points: usize,
    /// Sorted keys of the cells of each degree.
    keys: Vec<Vec<u128>>,
    complex: CellComplex,
}

impl ConfigModel {
    /// Build the model with the given color blocks, e.g. `[1, 1, 1]` for
    /// three ordered points, `[3]` for three unordered ones.
    pub fn build(k: &SimplicialComplex, blocks: &[usize], opts: ModelOptions) -> Result<Self> {
        let n = check_blocks(blocks)?;
        let table = SimplexTable::new(k);
        let full = n * k.dim().unwrap_or(0);
        let limit = opts.max_dim.unwrap_or(full).min(full);
        let counts = count_with(&table, blocks, limit + 1);
        let truncated = counts.len() > limit + 1;
        let kept: usize = counts.iter().take(limit + 1).sum();
        if kept > opts.guard {
            return Err(Error::ResourceGuard {
                cells: kept,
                guard: opts.guard,
                detail: format!("{n}-point model with blocks {blocks:?} up to degree {limit}"),
            });
        }
        let e = Enumerator {
            table: &table,
            first: first_in_block(blocks),
            limit,
        };
        let parts = e.for_each(Vec::new, |r: &mut Vec<(u128, u8)>, t, deg| r.push((pack(t), deg as u8)));
        let nd = counts.len().min(limit + 1);
        let mut keys: Vec<Vec<u128>> = counts.iter().take(nd).map(|&c| Vec::with_capacity(c)).collect();
        for p in parts {
            for (key, deg) in p {
                keys[deg as usize].push(key);
            }
        }
        let mut model = ConfigModel {
            base: k.clone(),
            table,
            blocks: blocks.to_vec(),
            points: n,
            keys,
            complex: CellComplex::empty(),
        };
        let mut boundary = Vec::with_capacity(nd);
        for d in 0..nd {
            let lists = par::map(&model.keys[d], |&key| model.boundary_of(d, key));
            boundary.push(Incidence::from_lists(lists));
        }
        let counts: Vec<usize> = model.keys.iter().map(Vec::len).collect();
        model.complex = CellComplex::new_unchecked(counts, boundary).with_truncated(truncated);
        Ok(model)
    }

    pub fn ordered(k: &SimplicialComplex, n: usize, opts: ModelOptions) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("ordered model needs n >= 1".into()));
        }
        Self::build(k, &vec![1; n], opts)
    }

    pub fn unordered(k: &SimplicialComplex, n: usize, opts: ModelOptions) -> Result<Self> {
        Self::build(k, &[n], opts)
    }

    pub fn colored(k: &SimplicialComplex, n: usize, m: usize, opts: ModelOptions) -> Result<Self> {
        Self::build(k, &[n, m], opts)
    }

    fn boundary_of(&self, d: usize, key: u128) -> Vec<(u32, i32)> {
        if d == 0 {
            return Vec::new();
        }
        let n = self.points;
        let mut t = [0u32; MAX_POINTS];
        unpack(key, n, &mut t);
        let mut out = Vec::new();
        let mut before = 0usize;
        let mut block_start = 0usize;
        let mut bi = 0usize;
        for i in 0..n {
            while i >= block_start + self.blocks[bi] {
                block_start += self.blocks[bi];
                bi += 1;
            }
            let block_end = block_start + self.blocks[bi];
            let g = t[i];
            let lead: i8 = if before % 2 == 0 { 1 } else { -1 };
            for &(f, a) in &self.table.faces[g as usize] {
                let mut u = t;
                let df = self.table.dims[f as usize];
                let mut sign = lead * a;
                // slide f into place inside its block
                let mut j = i;
                while j > block_start && u[j - 1] > f {
                    sign *= koszul(df, self.table.dims[u[j - 1] as usize]);
                    u[j] = u[j - 1];
                    j -= 1;
                }
                while j + 1 < block_end && u[j + 1] < f {
                    sign *= koszul(df, self.table.dims[u[j + 1] as usize]);
                    u[j] = u[j + 1];
                    j += 1;
                }
                u[j] = f;
                let idx = self.keys[d - 1]
                    .binary_search(&pack(&u[..n]))
                    .expect("faces of model cells are model cells");
                out.push((idx as u32, sign as i32));
            }
            before += self.table.dims[g as usize] as usize;
        }
        out
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn is_truncated(&self) -> bool {
        self.complex.is_truncated()
    }

    /// Global simplex ids of cell `c` of degree `d`.
    pub fn tuple(&self, d: usize, c: usize) -> Vec<u32> {
        let mut t = [0u32; MAX_POINTS];
        unpack(self.keys[d][c], self.points, &mut t);
        t[..self.points].to_vec()
    }

    /// Vertices of the simplex with global id `g`.
    pub fn simplex(&self, g: u32) -> &[u32] {
        &self.table.verts[g as usize]
    }

    pub fn simplex_dim(&self, g: u32) -> usize {
        self.table.dims[g as usize] as usize
    }

    /// Index of a canonical tuple among the cells of degree `d`.
    pub fn index_of(&self, d: usize, tuple: &[u32]) -> Option<u32> {
        self.keys.get(d)?.binary_search(&pack(tuple)).ok().map(|i| i as u32)
    }

    /// The cell map induced by a simplicial automorphism of the base, given
    /// as a vertex permutation.
    pub fn automorphism(&self, perm: &[u32]) -> Result<CellMap> {
        if perm.len() != self.table.num_vertices {
            return Err(Error::Input("permutation has the wrong length".into()));
        }
        let by_verts: rustc_hash::FxHashMap<&[u32], u32> =
            self.table.verts.iter().enumerate().map(|(g, v)| (v.as_slice(), g as u32)).collect();
        let mut simplex_image = Vec::with_capacity(self.table.len());
        for vs in &self.table.verts {
            let img: Vec<u32> = vs.iter().map(|&v| perm[v as usize]).collect();
            let (sorted, sign) = crate::simplicial::simplicial::sort_with_sign(&img)
                .ok_or_else(|| Error::Input("permutation is not injective".into()))?;
            let g = by_verts
                .get(sorted.as_slice())
                .ok_or_else(|| Error::Input(format!("simplex {vs:?} is not sent to a simplex")))?;
            simplex_image.push((*g, sign));
        }
        let n = self.points;
        let images = (0..self.complex.num_degrees())
            .map(|d| {
                par::map_range(self.complex.count(d), |c| {
                    let t = self.tuple(d, c);
                    let mut sign = 1i8;
                    let mut u: Vec<u32> = t
                        .iter()
                        .map(|&g| {
                            let (h, s) = simplex_image[g as usize];
                            sign *= s;
                            h
                        })
                        .collect();
                    let mut start = 0;
                    for &b in &self.blocks {
                        for i in start + 1..start + b {
                            let mut j = i;
                            while j > start && u[j - 1] > u[j] {
                                sign *= koszul(self.table.dims[u[j] as usize], self.table.dims[u[j - 1] as usize]);
                                u.swap(j - 1, j);
                                j -= 1;
                            }
                        }
                        start += b;
                    }
                    debug_assert_eq!(u.len(), n);
                    self.index_of(d, &u).map(|i| (i, sign))
                })
            })
            .collect();
        Ok(CellMap::new(images))
    }

    fn same_base(&self, other: &ConfigModel) -> bool {
        self.table == other.table
    }
}

/// `∏_{i<n} (χ − i)`, divided by `n!` when `ordered` is false. A
/// non-integral quotient means the model is inadequate.
pub fn euler_oracle(chi: i64, n: usize, ordered: bool) -> Result<Int> {
    let mut p = Int::ONE;
    for i in 0..n as i64 {
        p = &p * &Int::from(chi - i);
    }
    if ordered {
        return Ok(p);
    }
    let fact = (1..=n as i64).fold(Int::ONE, |acc, i| &acc * &Int::from(i));
    let (q, r) = p.div_rem_euclid(&fact);
    if !r.is_zero() {
        return Err(Error::Input(format!(
            "Euler characteristic {p}/{fact} of the unordered space is not an integer; model inadequate"
        )));
    }
    Ok(q)
}

/// Sign of merging block-sorted `t` into sorted order.
fn merge_sign(model: &ConfigModel, t: &[u32]) -> (Vec<u32>, i8) {
    let mut u = t.to_vec();
    let mut sign = 1i8;
    for i in 1..u.len() {
        let mut j = i;
        while j > 0 && u[j - 1] > u[j] {
            sign *= koszul(model.table.dims[u[j] as usize], model.table.dims[u[j - 1] as usize]);
            u.swap(j - 1, j);
            j -= 1;
        }
    }
    (u, sign)
}

/// The covering map forgetting colors, of degree `C(n+m, n)`.
pub fn color_forget_cover(colored: &ConfigModel, unordered: &ConfigModel) -> Result<CoveringMap> {
    if !colored.same_base(unordered) || unordered.blocks.len() != 1 || unordered.points != colored.points {
        return Err(Error::MismatchedHost("models are not a colored/unordered pair over the same complex".into()));
    }
    let nd = colored.complex.num_degrees();
    if unordered.complex.num_degrees() < nd {
        return Err(Error::MismatchedHost("unordered model is truncated below the colored one".into()));
    }
    let images = (0..nd)
        .map(|d| {
            par::map_range(colored.complex.count(d), |c| {
                let (u, s) = merge_sign(colored, &colored.tuple(d, c));
                unordered.index_of(d, &u).map(|i| (i, s))
            })
        })
        .collect();
    let base = if unordered.complex.num_degrees() > nd {
        unordered.complex.skeleton(nd - 1)
    } else {
        unordered.complex.clone()
    };
    CoveringMap::from_signed(&colored.complex, &base, &CellMap::new(images))
}

/// The inclusion of the colored model into the product of the blue and red
/// models, as a cellular map into `ProductComplex::new(blue, red)`.
pub fn color_inclusion(colored: &ConfigModel, blue: &ConfigModel, red: &ConfigModel) -> Result<(ProductComplex, CellMap)> {
    let (n, m) = match colored.blocks[..] {
        [n, m] => (n, m),
        _ => return Err(Error::Input("color inclusion needs a two-color model".into())),
    };
    if !colored.same_base(blue) || !colored.same_base(red) || blue.points != n || red.points != m {
        return Err(Error::MismatchedHost("models do not match the color signature".into()));
    }
    let product = ProductComplex::new(blue.complex(), red.complex());
    let images = (0..colored.complex.num_degrees())
        .map(|d| {
            par::map_range(colored.complex.count(d), |c| {
                let t = colored.tuple(d, c);
                let db: usize = t[..n].iter().map(|&g| colored.simplex_dim(g)).sum();
                let a = blue.index_of(db, &t[..n])?;
                let b = red.index_of(d - db, &t[n..])?;
                Some((product.index(db, d - db, a as usize, b as usize) as u32, 1))
            })
        })
        .collect();
    Ok((product, CellMap::new(images)))
}

/// The symmetric group acting on an ordered model by permuting points, one
/// action per permutation (identity first).
pub fn symmetric_action(ordered: &ConfigModel) -> Result<Vec<CellAction>> {
    if ordered.blocks.iter().any(|&b| b != 1) {
        return Err(Error::Input("symmetric action needs an ordered model".into()));
    }
    let n = ordered.points;
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for i in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| (0..=i).map(move |pos| {
                let mut q = p.clone();
                q.insert(pos, i);
                q
            }))
            .collect();
    }
    perms.sort();
    let cx = ordered.complex();
    Ok(perms
        .iter()
        .map(|perm| {
            let images = (0..cx.num_degrees())
                .map(|d| {
                    par::map_range(cx.count(d), |c| {
                        let t = ordered.tuple(d, c);
                        let u: Vec<u32> = perm.iter().map(|&i| t[i]).collect();
                        let mut sign = 1i8;
                        for a in 0..n {
                            for b in a + 1..n {
                                if perm[a] > perm[b] {
                                    sign *= koszul(ordered.table.dims[t[perm[a]] as usize], ordered.table.dims[t[perm[b]] as usize]);
                                }
                            }
                        }
                        let idx = ordered.index_of(d, &u).expect("permuted tuple is a cell");
                        (idx, sign)
                    })
                })
                .collect();
            CellAction { images }
        })
        .collect())
}

/// `i*(α × β)` for cochains on the blue and red models, evaluated on every
/// colored cell of degree `|α| + |β|`.
pub fn restrict_cross(colored: &ConfigModel, blue: &ConfigModel, red: &ConfigModel, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    let n = blue.points;
    if colored.blocks != [n, red.points] || !colored.same_base(blue) || !colored.same_base(red) {
        return Err(Error::MismatchedHost("models do not match the color signature".into()));
    }
    let d = alpha.degree + beta.degree;
    let cells = colored.complex.count(d);
    let values = par::map_range(cells, |c| {
        let t = colored.tuple(d, c);
        let db: usize = t[..n].iter().map(|&g| colored.simplex_dim(g)).sum();
        if db != alpha.degree {
            return Int::ZERO;
        }
        match (blue.index_of(db, &t[..n]), red.index_of(beta.degree, &t[n..])) {
            (Some(a), Some(b)) => &alpha.values[a as usize] * &beta.values[b as usize],
            _ => Int::ZERO,
        }
    });
    Ok(Cochain::new(d, values))
}

/// Koszul sign of the shuffle putting the `mask` positions first.
pub(crate) fn shuffle_sign(model: &ConfigModel, t: &[u32], mask: u32) -> i8 {
    let mut sign = 1i8;
    for j in 0..t.len() {
        if mask & (1 << j) == 0 {
            continue;
        }
        for i in 0..j {
            if mask & (1 << i) == 0 {
                sign *= koszul(model.table.dims[t[i] as usize], model.table.dims[t[j] as usize]);
            }
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::simplicial::{quotient_by_free_action, subdivide_times, Cohomology};

    fn disk(level: usize) -> SimplicialComplex {
        subdivide_times(&fixtures::complex("disk").unwrap(), level)
    }

    fn interval(level: usize) -> SimplicialComplex {
        subdivide_times(&fixtures::complex("interval").unwrap(), level)
    }

    fn betti(m: &ConfigModel) -> Vec<usize> {
        Cohomology::new(m.complex()).betti()
    }

    #[test]
    fn one_point_is_the_complex() {
        let k = disk(1);
        for blocks in [vec![1], vec![1, 0], vec![0, 1]] {
            let m = ConfigModel::build(&k, &blocks, ModelOptions::default()).unwrap();
            assert_eq!(m.complex().counts(), k.cells().counts());
            assert_eq!(betti(&m), vec![1, 0, 0]);
        }
    }

    #[test]
    fn zero_points_is_a_point() {
        let m = ConfigModel::unordered(&disk(1), 0, ModelOptions::default()).unwrap();
        assert_eq!(m.complex().counts(), &[1]);
    }

    #[test]
    fn disk_two_points() {
        let k = disk(2);
        let f2 = ConfigModel::ordered(&k, 2, ModelOptions::default()).unwrap();
        assert_eq!(betti(&f2), vec![1, 1, 0, 0, 0]);
        let c2 = ConfigModel::unordered(&k, 2, ModelOptions::default()).unwrap();
        assert_eq!(c2.complex().total_cells(), 6072);
        assert_eq!(betti(&c2), vec![1, 1, 0, 0, 0]);
        assert_eq!(f2.complex().euler_characteristic(), 0);
    }

    #[test]
    fn interval_two_points() {
        let k = interval(2);
        let f2 = ConfigModel::ordered(&k, 2, ModelOptions::default()).unwrap();
        assert_eq!(betti(&f2), vec![2, 0, 0]);
        let c2 = ConfigModel::unordered(&k, 2, ModelOptions::default()).unwrap();
        assert_eq!(betti(&c2), vec![1, 0, 0]);
        let c11 = ConfigModel::colored(&k, 1, 1, ModelOptions::default()).unwrap();
        assert_eq!(betti(&c11), vec![2, 0, 0]);
    }

    #[test]
    fn quotient_routes_agree() {
        let k = disk(1);
        for n in [2, 3] {
            let ordered = ConfigModel::ordered(&k, n, ModelOptions::default()).unwrap();
            let group = symmetric_action(&ordered).unwrap();
            let q = quotient_by_free_action(ordered.complex(), &group).unwrap();
            let direct = ConfigModel::unordered(&k, n, ModelOptions::default()).unwrap();
            assert_eq!(q.complex.counts(), direct.complex().counts());
            assert_eq!(Cohomology::new(&q.complex).betti(), betti(&direct));
        }
    }

    #[test]
    fn euler_oracle_values() {
        assert_eq!(euler_oracle(1, 2, true).unwrap(), Int::ZERO);
        assert_eq!(euler_oracle(1, 1, true).unwrap(), Int::ONE);
        assert_eq!(euler_oracle(2, 2, true).unwrap(), Int::from(2));
        assert_eq!(euler_oracle(2, 2, false).unwrap(), Int::ONE);
        assert!(euler_oracle(3, 2, false).is_ok());
        let k = fixtures::complex("sphere").unwrap();
        let k = subdivide_times(&k, 1);
        let counts = count_cells(&k, &[1, 1], 4).unwrap();
        let chi: i64 = counts.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        assert_eq!(Int::from(chi), euler_oracle(2, 2, true).unwrap());
    }

    #[test]
    fn forget_cover_degrees() {
        let k = interval(2);
        let opts = ModelOptions::default();
        let c11 = ConfigModel::colored(&k, 1, 1, opts).unwrap();
        let c2 = ConfigModel::unordered(&k, 2, opts).unwrap();
        let p = color_forget_cover(&c11, &c2).unwrap();
        assert_eq!(p.degree(), 2);
        let c10 = ConfigModel::colored(&k, 1, 0, opts).unwrap();
        let c1 = ConfigModel::unordered(&k, 1, opts).unwrap();
        assert_eq!(color_forget_cover(&c10, &c1).unwrap().degree(), 1);
        let d = disk(1);
        let c21 = ConfigModel::colored(&d, 2, 1, opts).unwrap();
        let c3 = ConfigModel::unordered(&d, 3, opts).unwrap();
        assert_eq!(color_forget_cover(&c21, &c3).unwrap().degree(), 3);
    }

    #[test]
    fn inclusion_hits_disjoint_pairs() {
        let k = interval(1);
        let opts = ModelOptions::default();
        let c11 = ConfigModel::colored(&k, 1, 1, opts).unwrap();
        let c1 = ConfigModel::unordered(&k, 1, opts).unwrap();
        let (prod, inc) = color_inclusion(&c11, &c1, &c1).unwrap();
        assert!(inc.is_chain_map(c11.complex(), prod.complex()));
        let mut hit = vec![0usize; prod.complex().num_degrees()];
        for d in 0..c11.complex().num_degrees() {
            let mut seen: Vec<u32> = inc.images(d).iter().map(|i| i.unwrap().0).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), c11.complex().count(d));
            hit[d] = seen.len();
        }
        let verts = k.num_vertices();
        assert_eq!(hit[0], verts * (verts - 1));
    }

    #[test]
    fn rotation_acts_cellularly() {
        let t = fixtures::complex("disk").unwrap();
        let k = subdivide_times(&t, 1);
        let perm = crate::simplicial::lift_automorphism(&t, &[1, 2, 0]).unwrap();
        for blocks in [vec![2], vec![1, 1], vec![2, 1]] {
            let m = ConfigModel::build(&k, &blocks, ModelOptions::default()).unwrap();
            let f = m.automorphism(&perm).unwrap();
            assert!(f.is_chain_map(m.complex(), m.complex()));
            assert!((0..m.complex().num_degrees()).all(|d| f.images(d).iter().all(Option::is_some)));
        }
    }

    #[test]
    fn truncation_and_guard() {
        let k = disk(2);
        let opts = ModelOptions {
            max_dim: Some(1),
            guard: DEFAULT_GUARD,
        };
        let m = ConfigModel::unordered(&k, 2, opts).unwrap();
        assert!(m.is_truncated());
        assert_eq!(m.complex().num_degrees(), 2);
        assert_eq!(Cohomology::new(m.complex()).betti(), vec![1]);
        let err = ConfigModel::unordered(&k, 2, ModelOptions { max_dim: None, guard: 100 }).unwrap_err();
        assert!(matches!(err, Error::ResourceGuard { cells: 6072, .. }));
        assert!(ConfigModel::unordered(&k, 5, ModelOptions::default()).is_err());
    }
}

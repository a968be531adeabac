//! Disk/sphere bundle pairs over simplicial complexes, Thom classes, and the
//! compatibility of the Thom isomorphism with transfers.

use crate::covers::SimplicialCover;
use crate::error::{Error, Result};
use crate::integer::Int;
use crate::report::{Report, Tally};
use crate::simplicial::{
    cup, simplicial_product, solve_integer, CellComplex, Cochain, Cohomology, Incidence, Matrix, RelativeComplex,
    SimplicialComplex, SimplicialMap,
};

/// The relative complex of `(inside, inside ∩ sub)` with the ambient index of
/// each surviving cell.
fn restrict_pair(cx: &CellComplex, inside: &[Vec<bool>], sub: &[Vec<bool>]) -> Result<(CellComplex, Vec<Vec<u32>>)> {
    let nd = cx.num_degrees();
    let mut kept: Vec<Vec<u32>> = Vec::with_capacity(nd);
    let mut index: Vec<Vec<Option<u32>>> = Vec::with_capacity(nd);
    for k in 0..nd {
        let mut ks = Vec::new();
        let mut idx = vec![None; cx.count(k)];
        for c in 0..cx.count(k) {
            if inside[k][c] && !sub[k][c] {
                idx[c] = Some(ks.len() as u32);
                ks.push(c as u32);
            }
        }
        kept.push(ks);
        index.push(idx);
    }
    while kept.last().is_some_and(Vec::is_empty) {
        kept.pop();
    }
    let mut boundary = Vec::with_capacity(kept.len());
    for (k, ks) in kept.iter().enumerate() {
        let lists = ks
            .iter()
            .map(|&c| {
                if k == 0 {
                    Vec::new()
                } else {
                    cx.faces(k, c as usize)
                        .filter_map(|(f, a)| index[k - 1][f as usize].map(|g| (g, a)))
                        .collect()
                }
            })
            .collect();
        boundary.push(Incidence::from_lists(lists));
    }
    let counts = kept.iter().map(Vec::len).collect();
    Ok((CellComplex::new(counts, boundary)?, kept))
}

/// The pair `(D|_A, S|_A)` over a set `A` of base vertices.
#[derive(Clone, Debug)]
struct FiberPair {
    cohomology: Cohomology,
    kept: Vec<u32>,
    degree: usize,
}

impl FiberPair {
    fn new(b: &SimplicialComplex, sphere: &[Vec<bool>], over: impl Fn(u32) -> bool, rank: usize) -> Result<Self> {
        let inside = b.full_subcomplex_mask(over);
        let (cx, kept) = restrict_pair(b.cells(), &inside, sphere)?;
        let cohomology = Cohomology::new(&cx);
        for g in cohomology.groups() {
            let want = usize::from(g.degree == rank);
            if g.free_rank != want || !g.torsion.is_empty() {
                return Err(Error::Orientation(format!(
                    "fiber pair has H^{} of rank {} with torsion {:?}",
                    g.degree, g.free_rank, g.torsion
                )));
            }
        }
        if cohomology.num_degrees() <= rank {
            return Err(Error::Orientation(format!("fiber pair has no cells in degree {rank}")));
        }
        let kept = kept.into_iter().nth(rank).unwrap_or_default();
        Ok(FiberPair {
            cohomology,
            kept,
            degree: rank,
        })
    }

    /// Coordinate of the restriction of a total-space cochain.
    fn coordinate(&self, alpha: &Cochain) -> Result<Int> {
        let local = Cochain::new(
            self.degree,
            self.kept.iter().map(|&c| alpha.values[c as usize].clone()).collect(),
        );
        Ok(self.cohomology.coordinates(&local)?.swap_remove(0))
    }
}

/// An oriented disk/sphere bundle pair `(D, S) → B` of rank `k`.
#[derive(Clone, Debug)]
pub struct BundlePair {
    pub base: SimplicialComplex,
    pub total: SimplicialComplex,
    /// Membership mask of `S` in `D`.
    pub sphere: Vec<Vec<bool>>,
    pub projection: SimplicialMap,
    pub rank: usize,
    /// Per base vertex, a `k`-cochain on `D` representing the chosen
    /// generator of the fiber pair.
    pub orientation: Vec<Cochain>,
    relative: RelativeComplex,
    pair_cohomology: Cohomology,
    fibers: Vec<FiberPair>,
    /// Coordinate of each orientation in its fiber basis (±1).
    signs: Vec<Int>,
}

/// A Thom class with its uniqueness certificate.
#[derive(Clone, Debug)]
pub struct ThomClass {
    pub cochain: Cochain,
    /// No other class restricts to the same fiber generators.
    pub unique: bool,
}

impl BundlePair {
    /// Validate bundle data: every fiber pair has cohomology `ℤ` in degree
    /// `rank`, and the orientations agree along base edges.
    pub fn new(
        base: SimplicialComplex,
        total: SimplicialComplex,
        sphere: Vec<Vec<bool>>,
        vertex_map: Vec<u32>,
        rank: usize,
        orientation: Vec<Cochain>,
    ) -> Result<Self> {
        let projection = SimplicialMap::new(&total, &base, vertex_map)?;
        let relative = total.cells().relative(&sphere)?;
        if orientation.len() != base.num_vertices() {
            return Err(Error::Input(format!(
                "{} orientation cochains for {} base vertices",
                orientation.len(),
                base.num_vertices()
            )));
        }
        let vm = &projection.vertex_map;
        let mut fibers = Vec::with_capacity(base.num_vertices());
        let mut signs = Vec::with_capacity(base.num_vertices());
        for (v, o) in orientation.iter().enumerate() {
            if o.degree != rank || o.len() != total.count(rank) {
                return Err(Error::MismatchedHost(format!("orientation of vertex {v}")));
            }
            let f = FiberPair::new(&total, &sphere, |x| vm[x as usize] == v as u32, rank)?;
            let c = f.coordinate(o)?;
            if !c.is_unit() {
                return Err(Error::Orientation(format!(
                    "orientation of vertex {v} is {c} times a generator"
                )));
            }
            fibers.push(f);
            signs.push(c);
        }
        for e in base.simplices(1) {
            let (v, w) = (e[0], e[1]);
            let pair = FiberPair::new(&total, &sphere, |x| vm[x as usize] == v || vm[x as usize] == w, rank)?;
            let g = pair_generator(&pair, &total);
            let ev = fibers[v as usize].coordinate(&g)?;
            let ew = fibers[w as usize].coordinate(&g)?;
            if !ev.is_unit() || !ew.is_unit() {
                return Err(Error::Orientation(format!("fiber over edge {e:?} does not restrict isomorphically")));
            }
            if &ev * &signs[v as usize] != &ew * &signs[w as usize] {
                return Err(Error::Orientation(format!("orientations disagree along edge {e:?}")));
            }
        }
        let pair_cohomology = Cohomology::new(&relative.complex);
        Ok(BundlePair {
            base,
            total,
            sphere,
            projection,
            rank,
            orientation,
            relative,
            pair_cohomology,
            fibers,
            signs,
        })
    }

    pub fn relative(&self) -> &RelativeComplex {
        &self.relative
    }

    /// Cohomology of the pair `(D, S)`.
    pub fn pair_cohomology(&self) -> &Cohomology {
        &self.pair_cohomology
    }

    /// Class-level equality of two cochains of `D` vanishing on `S`.
    pub fn same_relative_class(&self, a: &Cochain, b: &Cochain) -> Result<bool> {
        self.pair_cohomology
            .same_class(&self.relative.restrict(a), &self.relative.restrict(b))
    }

    /// True when `u` is a relative cocycle restricting to the chosen
    /// generator on every fiber.
    pub fn is_thom_class(&self, u: &Cochain) -> Result<bool> {
        if u.degree != self.rank || !self.relative.vanishes_on_subcomplex(u) {
            return Ok(false);
        }
        if !self.relative.complex.is_cocycle(&self.relative.restrict(u)) {
            return Ok(false);
        }
        for (f, s) in self.fibers.iter().zip(&self.signs) {
            if f.coordinate(u)? != *s {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Solve for a relative cocycle restricting to the orientation on each
    /// fiber.
    pub fn thom_class(&self) -> Result<ThomClass> {
        let g = self.pair_cohomology.group(self.rank)?;
        let gens: Vec<Cochain> = g.generators.iter().map(|x| self.relative.extend(x)).collect();
        let mut m = Matrix::zeros(self.fibers.len(), gens.len());
        for (v, f) in self.fibers.iter().enumerate() {
            for (j, x) in gens.iter().enumerate() {
                m.set(v, j, f.coordinate(x)?);
            }
        }
        let x = solve_integer(&m, &self.signs)
            .ok_or_else(|| Error::Orientation("no relative class restricts to the fiber orientations".into()))?;
        let mut u = Cochain::zero(self.rank, self.total.count(self.rank));
        for (c, gen) in x.iter().zip(&gens) {
            if !c.is_zero() {
                u = u.add(&gen.scaled(c));
            }
        }
        let free = m.col_block(0, g.free_rank);
        let unique = crate::simplicial::smith_normal_form(&free).rank() == g.free_rank;
        Ok(ThomClass { cochain: u, unique })
    }

    /// `α ↦ π*(α) ⌣ u`.
    pub fn thom_iso(&self, u: &Cochain, alpha: &Cochain) -> Result<Cochain> {
        let pulled = self.projection.pullback(&self.total, &self.base, alpha);
        cup(&self.total, &pulled, u)
    }

    /// The pullback bundle along a cover of the base, with the induced cover
    /// of total spaces.
    pub fn pullback(&self, sc: &SimplicialCover) -> Result<(BundlePair, SimplicialCover)> {
        if sc.base != self.base {
            return Err(Error::MismatchedHost("cover and bundle have different bases".into()));
        }
        let nd = self.total.num_vertices() as u32;
        let vm = &self.projection.vertex_map;
        let mut tops = Vec::new();
        for s in self.total.maximal_simplices() {
            let mut image: Vec<u32> = s.iter().map(|&d| vm[d as usize]).collect();
            image.sort_unstable();
            image.dedup();
            let b = sc.base.index_of(&image).expect("simplicial projection") as usize;
            let dim = image.len() - 1;
            for &c in sc.cover.fiber(dim, b) {
                let lift = &sc.total.simplices(dim)[c as usize];
                let top: Vec<u32> = s
                    .iter()
                    .map(|&d| {
                        let pos = image.binary_search(&vm[d as usize]).expect("image vertex");
                        lift[pos] * nd + d
                    })
                    .collect();
                tops.push(top);
            }
        }
        let fibered = SimplicialComplex::from_top_simplices(&tops)?;
        let to_total: Vec<u32> = fibered.labels().iter().map(|l| l % nd).collect();
        let pbar = SimplicialCover::new(&fibered, &self.total, &to_total)?;
        let labels: Vec<u32> = pbar
            .original_vertex
            .iter()
            .map(|&o| fibered.labels()[o as usize])
            .collect();
        let down: Vec<u32> = labels.iter().map(|l| l / nd).collect();
        let dt = &pbar.total;
        let sphere: Vec<Vec<bool>> = (0..dt.cells().num_degrees())
            .map(|k| {
                pbar.cover
                    .assignment(k)
                    .iter()
                    .map(|&c| self.sphere[k][c as usize])
                    .collect()
            })
            .collect();
        let orientation = (0..sc.total.num_vertices() as u32)
            .map(|x| {
                let pulled = pbar.cover.pullback(&self.orientation[sc.vertex_map[x as usize] as usize]);
                let values = dt
                    .simplices(self.rank)
                    .iter()
                    .zip(pulled.values)
                    .map(|(s, v)| if s.iter().all(|&d| down[d as usize] == x) { v } else { Int::ZERO })
                    .collect();
                Cochain::new(self.rank, values)
            })
            .collect();
        let bundle = BundlePair::new(sc.total.clone(), dt.clone(), sphere, down, self.rank, orientation)?;
        Ok((bundle, pbar))
    }
}

fn pair_generator(pair: &FiberPair, total: &SimplicialComplex) -> Cochain {
    let g = &pair.cohomology.group(pair.degree).expect("degree in range").generators[0];
    let mut values = vec![Int::ZERO; total.count(pair.degree)];
    for (v, &c) in g.values.iter().zip(&pair.kept) {
        values[c as usize] = v.clone();
    }
    Cochain::new(pair.degree, values)
}

/// The trivial bundle `(B × Δ^k, B × ∂Δ^k)`, oriented by the top simplex of
/// each fiber.
pub fn trivial_bundle(base: &SimplicialComplex, rank: usize) -> Result<BundlePair> {
    let simplex = SimplicialComplex::from_top_simplices(&[(0..=rank as u32).collect::<Vec<_>>()])?;
    let total = simplicial_product(base, &simplex);
    let w = rank as u32 + 1;
    let sphere: Vec<Vec<bool>> = (0..total.cells().num_degrees())
        .map(|k| {
            total
                .simplices(k)
                .iter()
                .map(|s| {
                    let mut seen = 0u64;
                    for &v in s {
                        seen |= 1 << (v % w);
                    }
                    seen.count_ones() < w
                })
                .collect()
        })
        .collect();
    let vertex_map = (0..total.num_vertices() as u32).map(|v| v / w).collect();
    let orientation = (0..base.num_vertices() as u32)
        .map(|v| {
            let mut o = Cochain::zero(rank, total.count(rank));
            let top: Vec<u32> = (0..w).map(|i| v * w + i).collect();
            o.values[total.index_of(&top).expect("fiber simplex") as usize] = Int::ONE;
            o
        })
        .collect();
    BundlePair::new(base.clone(), total, sphere, vertex_map, rank, orientation)
}

/// Checks that `α ↦ π*(α) ⌣ u` matches ranks and torsion of `H^i(B)` and
/// `H^{i+k}(D, S)` and is unimodular on free parts.
pub fn verify_thom_isomorphism(b: &BundlePair, u: &Cochain) -> Result<Tally> {
    let hb = Cohomology::new(b.base.cells());
    let hp = b.pair_cohomology();
    let mut t = Tally::default();
    for i in 0..hb.num_degrees() {
        let gb = hb.group(i)?;
        let Ok(gp) = hp.group(i + b.rank) else {
            t.check(gb.rank() == 0, || format!("H^{i}(B) nonzero but H^{}(D,S) not computed", i + b.rank));
            continue;
        };
        t.check(gb.free_rank == gp.free_rank && gb.torsion == gp.torsion, || {
            format!(
                "H^{i}(B) = ({}, {:?}) but H^{}(D,S) = ({}, {:?})",
                gb.free_rank,
                gb.torsion,
                i + b.rank,
                gp.free_rank,
                gp.torsion
            )
        });
        let mut m = Matrix::zeros(gp.free_rank, gb.free_rank);
        for (j, alpha) in gb.generators.iter().take(gb.free_rank).enumerate() {
            let image = b.relative().restrict(&b.thom_iso(u, alpha)?);
            for (r, c) in hp.coordinates(&image)?.into_iter().take(gp.free_rank).enumerate() {
                m.set(r, j, c);
            }
        }
        if m.rows() == m.cols() {
            let d = m.determinant();
            t.check(d.is_unit(), || format!("degree {i}: determinant {d}"));
        }
    }
    Ok(t)
}

/// Checks the square `thom(p_!α) = p̄_!(thom(α))` on every basis class of
/// the cover's total space, using `p̄*u` as the Thom class upstairs.
pub fn verify_thom_transfer_square(b: &BundlePair, sc: &SimplicialCover) -> Result<Report> {
    let (bt, pbar) = b.pullback(sc)?;
    let u = b.thom_class()?.cochain;
    let ut = pbar.cover.pullback(&u);
    let mut report = Report::new();
    let mut pulled = Tally::default();
    pulled.check(bt.is_thom_class(&ut)?, || "p̄*u is not a Thom class of the pullback".into());
    let solved = bt.thom_class()?.cochain;
    pulled.check(bt.same_relative_class(&ut, &solved)?, || {
        "p̄*u differs from the solved Thom class".into()
    });
    pulled.into_report(&mut report, "pulled-back Thom class");
    let ht = Cohomology::new(sc.total.cells());
    let mut square = Tally::default();
    for g in ht.groups() {
        if g.degree + b.rank >= b.pair_cohomology().num_degrees() {
            continue;
        }
        for (i, alpha) in g.generators.iter().enumerate() {
            let lhs = b.thom_iso(&u, &sc.cover.transfer(alpha))?;
            let rhs = pbar.cover.transfer(&bt.thom_iso(&ut, alpha)?);
            square.check(b.same_relative_class(&lhs, &rhs)?, || {
                format!("H^{} basis class {i}", g.degree)
            });
        }
    }
    square.into_report(&mut report, "thom(p_!a) = p̄_!(thom(a))");
    Ok(report)
}

const SECTIONS: [&str; 5] = ["base", "total", "sphere", "projection", "orientation"];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn internal(k: &SimplicialComplex, label: u32, line: usize) -> Result<u32> {
    k.labels()
        .binary_search(&label)
        .map(|i| i as u32)
        .map_err(|_| parse_err(line, format!("unknown vertex {label}")))
}

/// Parse the bundle text format.
///
/// ```text
/// rank 1
/// [base]
/// 0 1
/// [total]
/// 0 1 2 3
/// [sphere]
/// 0 2
/// 1 3
/// [projection]
/// 0 0
/// 1 0
/// 2 1
/// 3 1
/// [orientation]
/// 0 + 0 1
/// 1 + 2 3
/// ```
///
/// `[base]`, `[total]` and `[sphere]` list simplices, the sphere given
/// inside the total complex. Projection rows are `total_vertex base_vertex`.
/// Orientation rows are `base_vertex sign simplex...`, one term of the
/// `rank`-cochain representing the fiber generator over that vertex.
/// Vertices are original labels throughout.
pub fn parse_bundle_pair(text: &str) -> Result<BundlePair> {
    let mut rank = None;
    let mut rows: [Vec<(usize, Vec<&str>)>; 5] = Default::default();
    let mut section = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(name) = body.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            section = Some(SECTIONS.iter().position(|s| *s == name).ok_or_else(|| parse_err(line, format!("unknown section [{name}]")))?);
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match section {
            None if toks[0] == "rank" && toks.len() == 2 => {
                rank = Some(toks[1].parse::<usize>().map_err(|_| parse_err(line, "rank must be a non-negative integer"))?)
            }
            None => return Err(parse_err(line, "expected \"rank k\" or a section header")),
            Some(s) => rows[s].push((line, toks)),
        }
    }
    let rank = rank.ok_or_else(|| parse_err(1, "missing rank"))?;
    let num = |line: usize, tok: &str| tok.parse::<u32>().map_err(|_| parse_err(line, format!("expected a vertex, found {tok:?}")));
    let simplices = |rows: &[(usize, Vec<&str>)]| -> Result<Vec<Vec<u32>>> {
        rows.iter().map(|(l, t)| t.iter().map(|x| num(*l, x)).collect()).collect()
    };
    let base = SimplicialComplex::from_top_simplices(&simplices(&rows[0])?)?;
    let total = SimplicialComplex::from_top_simplices(&simplices(&rows[1])?)?;
    let mut sphere_tops = Vec::new();
    for (l, t) in &rows[2] {
        let mut s = t.iter().map(|x| internal(&total, num(*l, x)?, *l)).collect::<Result<Vec<u32>>>()?;
        s.sort_unstable();
        sphere_tops.push(s);
    }
    let sphere = total.subcomplex_mask(&sphere_tops)?;
    let mut vertex_map = vec![None; total.num_vertices()];
    for (l, t) in &rows[3] {
        if t.len() != 2 {
            return Err(parse_err(*l, "projection rows are \"total_vertex base_vertex\""));
        }
        let v = internal(&total, num(*l, t[0])?, *l)?;
        vertex_map[v as usize] = Some(internal(&base, num(*l, t[1])?, *l)?);
    }
    let vertex_map = vertex_map
        .into_iter()
        .enumerate()
        .map(|(v, b)| b.ok_or_else(|| parse_err(rows[3].last().map_or(1, |r| r.0), format!("vertex {} has no image", total.labels()[v]))))
        .collect::<Result<Vec<u32>>>()?;
    let mut orientation = vec![Cochain::zero(rank, total.count(rank)); base.num_vertices()];
    for (l, t) in &rows[4] {
        if t.len() != rank + 3 {
            return Err(parse_err(*l, format!("orientation rows are \"base_vertex sign\" and {} vertices", rank + 1)));
        }
        let b = internal(&base, num(*l, t[0])?, *l)?;
        let sign = match t[1] {
            "+" => Int::ONE,
            "-" => -&Int::ONE,
            s => return Err(parse_err(*l, format!("expected + or -, found {s:?}"))),
        };
        let s = t[2..].iter().map(|x| internal(&total, num(*l, x)?, *l)).collect::<Result<Vec<u32>>>()?;
        let (sorted, perm_sign) =
            crate::simplicial::simplicial::sort_with_sign(&s).ok_or_else(|| parse_err(*l, "repeated vertex"))?;
        let idx = total.index_of(&sorted).ok_or_else(|| parse_err(*l, "orientation simplex is not in the total complex"))?;
        let sign = if perm_sign < 0 { -&sign } else { sign };
        let slot = &mut orientation[b as usize].values[idx as usize];
        *slot = &*slot + &sign;
    }
    BundlePair::new(base, total, sphere, vertex_map, rank, orientation)
}

impl BundlePair {
    /// Serialize in the format read by [`parse_bundle_pair`].
    pub fn to_text(&self) -> String {
        let mut out = format!("rank {}\n[base]\n{}[total]\n{}[sphere]\n", self.rank, self.base.to_text(), self.total.to_text());
        let labels = self.total.labels();
        let name = |s: &[u32]| s.iter().map(|&v| labels[v as usize].to_string()).collect::<Vec<_>>().join(" ");
        for k in 0..self.sphere.len() {
            for (c, &inside) in self.sphere[k].iter().enumerate() {
                if inside {
                    out.push_str(&name(&self.total.simplices(k)[c]));
                    out.push('\n');
                }
            }
        }
        out.push_str("[projection]\n");
        for (v, &b) in self.projection.vertex_map.iter().enumerate() {
            out.push_str(&format!("{} {}\n", labels[v], self.base.labels()[b as usize]));
        }
        out.push_str("[orientation]\n");
        for (b, o) in self.orientation.iter().enumerate() {
            for (c, x) in o.values.iter().enumerate() {
                for _ in 0..x.abs().to_i64().unwrap_or(0) {
                    let sign = if x.signum() > 0 { "+" } else { "-" };
                    out.push_str(&format!("{} {sign} {}\n", self.base.labels()[b], name(&self.total.simplices(self.rank)[c])));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn bundle_text_round_trips() {
        let circle = fixtures::complex("circle").unwrap();
        let b = trivial_bundle(&circle, 1).unwrap();
        let text = b.to_text();
        let c = parse_bundle_pair(&text).unwrap();
        assert_eq!(c.to_text(), text);
        assert!(c.is_thom_class(&c.thom_class().unwrap().cochain).unwrap());
    }

    #[test]
    fn bundle_text_errors_carry_lines() {
        let text = "rank 1\n[base]\n0\n[total]\n0 1\n[sphere]\n0\n1\n[projection]\n0 0\n1 0\n[orientation]\n0 * 0 1\n";
        match parse_bundle_pair(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 13),
            other => panic!("{other:?}"),
        }
        let flipped = "rank 1\n[base]\n0\n[total]\n0 1\n[sphere]\n0\n1\n[projection]\n0 0\n1 0\n[orientation]\n0 - 1 0\n";
        let b = parse_bundle_pair(flipped).unwrap();
        assert_eq!(b.orientation[0].values[0], Int::ONE);
    }

    #[test]
    fn point_bundle_is_the_interval_pair() {
        let point = SimplicialComplex::from_top_simplices(&[[0]]).unwrap();
        let b = trivial_bundle(&point, 1).unwrap();
        assert_eq!(b.total.cells().counts(), &[2, 1]);
        let u = b.thom_class().unwrap();
        assert!(u.unique);
        assert!(b.same_relative_class(&u.cochain, &b.orientation[0]).unwrap());
    }

    #[test]
    fn circle_bundle_thom_iso() {
        let circle = fixtures::complex("circle").unwrap();
        let b = trivial_bundle(&circle, 1).unwrap();
        let u = b.thom_class().unwrap();
        assert!(u.unique);
        assert!(b.is_thom_class(&u.cochain).unwrap());
        let unit = Cochain::constant_one(0, 3);
        assert_eq!(b.thom_iso(&u.cochain, &unit).unwrap(), u.cochain);
        let hc = Cohomology::new(circle.cells());
        let g = &hc.group(1).unwrap().generators[0];
        let image = b.relative().restrict(&b.thom_iso(&u.cochain, g).unwrap());
        let coords = b.pair_cohomology().coordinates(&image).unwrap();
        assert_eq!(coords.len(), 1);
        assert!(coords[0].is_unit());
        assert!(b.thom_iso(&u.cochain, &Cochain::zero(1, 3)).unwrap().is_zero());
        assert!(verify_thom_isomorphism(&b, &u.cochain).unwrap().failure.is_none());
    }

    #[test]
    fn rank_two_over_disk() {
        let disk = fixtures::complex("disk").unwrap();
        let b = trivial_bundle(&disk, 2).unwrap();
        let u = b.thom_class().unwrap();
        assert!(verify_thom_isomorphism(&b, &u.cochain).unwrap().failure.is_none());
    }

    #[test]
    fn inconsistent_orientation_is_rejected() {
        let circle = fixtures::complex("circle").unwrap();
        let b = trivial_bundle(&circle, 1).unwrap();
        let mut o = b.orientation.clone();
        o[1] = o[1].scaled(&Int::from(-1));
        let err = BundlePair::new(b.base.clone(), b.total.clone(), b.sphere.clone(), b.projection.vertex_map.clone(), 1, o)
            .unwrap_err();
        assert!(matches!(err, Error::Orientation(_)));
    }

    #[test]
    fn square_commutes_for_test_covers() {
        let circle = fixtures::complex("circle").unwrap();
        let b = trivial_bundle(&circle, 1).unwrap();
        for sc in [
            SimplicialCover::identity(&circle),
            fixtures::circle_double_cover(),
            SimplicialCover::trivial(&circle, 2),
        ] {
            let r = verify_thom_transfer_square(&b, &sc).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn unit_goes_to_twice_the_thom_class() {
        let circle = fixtures::complex("circle").unwrap();
        let b = trivial_bundle(&circle, 1).unwrap();
        let sc = fixtures::circle_double_cover();
        let (bt, pbar) = b.pullback(&sc).unwrap();
        let u = b.thom_class().unwrap().cochain;
        let ut = pbar.cover.pullback(&u);
        let unit = Cochain::constant_one(0, sc.total.count(0));
        let rhs = pbar.cover.transfer(&bt.thom_iso(&ut, &unit).unwrap());
        assert!(b.same_relative_class(&rhs, &u.scaled(&Int::from(2))).unwrap());
    }
}

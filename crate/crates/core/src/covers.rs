//! Finite cellular covering maps, transfers, and induced maps of spans.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::formal_sums::{FormalSum, Pointed};
use crate::integer::Int;
use crate::par;
use crate::report::{Report, Tally};
use crate::simplicial::{cup, CellComplex, CellMap, Cochain, Cohomology, SimplicialComplex, SimplicialMap};

/// A covering map of cell complexes. The total space is stored re-oriented
/// so that every cell maps onto its image with sign `+1`.
#[derive(Clone, Debug)]
pub struct CoveringMap {
    total: CellComplex,
    base: CellComplex,
    assignment: Vec<Vec<u32>>,
    /// `fibers[k][b * degree + i]`: the preimages of base cell `b`.
    fibers: Vec<Vec<u32>>,
    degree: usize,
    flips: Vec<Vec<i8>>,
}

impl CoveringMap {
    /// Build from a signed cellular map; total cells with sign `-1` are
    /// re-oriented.
    pub fn from_signed(total: &CellComplex, base: &CellComplex, map: &CellMap) -> Result<Self> {
        if total.num_degrees() > base.num_degrees() {
            return Err(Error::MalformedCover("total space has higher dimension than the base".into()));
        }
        let mut flips = Vec::with_capacity(total.num_degrees());
        let mut assignment = Vec::with_capacity(total.num_degrees());
        for k in 0..total.num_degrees() {
            let mut fk = Vec::with_capacity(total.count(k));
            let mut ak = Vec::with_capacity(total.count(k));
            for c in 0..total.count(k) {
                let (t, s) = map.image(k, c).ok_or_else(|| {
                    Error::MalformedCover(format!("{k}-cell {c} of the total space collapses"))
                })?;
                fk.push(s);
                ak.push(t);
            }
            flips.push(fk);
            assignment.push(ak);
        }
        let mut degree = None;
        let mut fibers = Vec::with_capacity(base.num_degrees());
        for k in 0..base.num_degrees() {
            let mut lists: Vec<Vec<u32>> = vec![Vec::new(); base.count(k)];
            if let Some(ak) = assignment.get(k) {
                for (c, &b) in ak.iter().enumerate() {
                    lists[b as usize].push(c as u32);
                }
            }
            for (b, l) in lists.iter().enumerate() {
                let d = *degree.get_or_insert(l.len());
                if l.len() != d {
                    return Err(Error::MalformedCover(format!(
                        "{k}-cell {b} of the base has {} preimages, expected {d}",
                        l.len()
                    )));
                }
            }
            fibers.push(lists.concat());
        }
        let total = total.reoriented(&flips);
        let cover = CoveringMap {
            total,
            base: base.clone(),
            assignment,
            fibers,
            degree: degree.unwrap_or(0),
            flips,
        };
        if !cover.cell_map().is_chain_map(&cover.total, &cover.base) {
            return Err(Error::MalformedCover("the cell assignment does not commute with boundaries".into()));
        }
        for k in 1..cover.total.num_degrees() {
            for c in 0..cover.total.count(k) {
                let b = cover.assignment[k][c] as usize;
                if cover.total.faces(k, c).count() != cover.base.faces(k, b).count() {
                    return Err(Error::MalformedCover(format!(
                        "{k}-cell {c} does not map isomorphically onto its image"
                    )));
                }
            }
        }
        Ok(cover)
    }

    pub fn identity(cx: &CellComplex) -> Self {
        Self::from_signed(cx, cx, &CellMap::identity(cx)).expect("identity is a cover")
    }

    pub fn total(&self) -> &CellComplex {
        &self.total
    }

    pub fn base(&self) -> &CellComplex {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Orientation changes applied to the original total cells.
    pub fn flips(&self) -> &[Vec<i8>] {
        &self.flips
    }

    pub fn assignment(&self, k: usize) -> &[u32] {
        self.assignment.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn fiber(&self, k: usize, b: usize) -> &[u32] {
        &self.fibers[k][b * self.degree..(b + 1) * self.degree]
    }

    pub fn cell_map(&self) -> CellMap {
        CellMap::new(
            self.assignment
                .iter()
                .map(|l| l.iter().map(|&b| Some((b, 1))).collect())
                .collect(),
        )
    }

    /// Convert a total-space cochain between the original and the stored
    /// orientation (the operation is an involution).
    pub fn reorient(&self, alpha: &Cochain) -> Cochain {
        let f = &self.flips[alpha.degree];
        Cochain::new(
            alpha.degree,
            alpha
                .values
                .iter()
                .zip(f)
                .map(|(v, &s)| if s > 0 { v.clone() } else { -v })
                .collect(),
        )
    }

    /// `p*α = α ∘ p`.
    pub fn pullback(&self, alpha: &Cochain) -> Cochain {
        let k = alpha.degree;
        let values = par::map(self.assignment(k), |&b| alpha.values[b as usize].clone());
        Cochain::new(k, values)
    }

    /// `p_!β`: the value on a base cell is the sum over its fiber.
    pub fn transfer(&self, beta: &Cochain) -> Cochain {
        let k = beta.degree;
        let n = self.base.count(k);
        let values = par::map_range(n, |b| {
            self.fiber(k, b).iter().map(|&c| beta.values[c as usize].clone()).sum()
        });
        Cochain::new(k, values)
    }
}

/// A simplicial covering map whose total vertices are ordered compatibly
/// with the projection, so all orientation signs are `+1`.
#[derive(Clone, Debug)]
pub struct SimplicialCover {
    pub total: SimplicialComplex,
    pub base: SimplicialComplex,
    pub vertex_map: Vec<u32>,
    /// Internal id in the complex passed to `new` of each total vertex.
    pub original_vertex: Vec<u32>,
    pub cover: CoveringMap,
}

impl SimplicialCover {
    /// `vertex_map` sends internal vertex ids of `total` to those of `base`.
    pub fn new(total: &SimplicialComplex, base: &SimplicialComplex, vertex_map: &[u32]) -> Result<Self> {
        if vertex_map.len() != total.num_vertices() {
            return Err(Error::MalformedCover("vertex map has the wrong length".into()));
        }
        let mut order: Vec<u32> = (0..total.num_vertices() as u32).collect();
        order.sort_by_key(|&v| (vertex_map[v as usize], v));
        let mut new_id = vec![0u32; order.len()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v as usize] = i as u32;
        }
        let tops: Vec<Vec<u32>> = total
            .maximal_simplices()
            .into_iter()
            .map(|s| {
                let mut t: Vec<u32> = s.iter().map(|&v| new_id[v as usize]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        let relabelled = SimplicialComplex::from_internal((0..order.len() as u32).collect(), &tops);
        let vmap: Vec<u32> = order.iter().map(|&v| vertex_map[v as usize]).collect();
        let smap = SimplicialMap::new(&relabelled, base, vmap.clone())?;
        let cover = CoveringMap::from_signed(relabelled.cells(), base.cells(), &smap.cell_map(&relabelled, base))?;
        debug_assert!(cover.flips().iter().flatten().all(|&s| s == 1));
        Ok(SimplicialCover {
            total: relabelled,
            base: base.clone(),
            vertex_map: vmap,
            original_vertex: order,
            cover,
        })
    }

    pub fn identity(k: &SimplicialComplex) -> Self {
        Self::new(k, k, &(0..k.num_vertices() as u32).collect::<Vec<_>>()).expect("identity cover")
    }

    /// `copies` disjoint copies of `k` mapping onto `k`.
    pub fn trivial(k: &SimplicialComplex, copies: usize) -> Self {
        let n = k.num_vertices() as u32;
        let mut tops = Vec::new();
        for c in 0..copies as u32 {
            for s in k.maximal_simplices() {
                tops.push(s.iter().map(|&v| v + c * n).collect::<Vec<_>>());
            }
        }
        let total = SimplicialComplex::from_top_simplices(&tops).expect("valid copies");
        let vmap: Vec<u32> = (0..copies as u32 * n).map(|v| v % n).collect();
        Self::new(&total, k, &vmap).expect("trivial cover")
    }
}

/// An oriented cell of some degree, used to compare cellular maps at the
/// level of formal sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCell {
    pub degree: usize,
    pub cell: u32,
    pub sign: i8,
}

impl Pointed for SignedCell {
    fn is_basepoint(&self) -> bool {
        false
    }
}

/// A span `X ← X̃ → Y` whose left leg is a covering map, inducing
/// `H*(Y) → H*(X)` as transfer after pullback.
#[derive(Clone, Debug)]
pub struct Span {
    pub left: CoveringMap,
    /// Right leg, relative to the re-oriented total space of `left`.
    right: CellMap,
}

impl Span {
    /// `right` is given relative to the original orientation of the total
    /// space of `left`.
    pub fn new(left: CoveringMap, right: &CellMap) -> Self {
        let right = right.with_source_flips(left.flips());
        Span { left, right }
    }

    pub fn right(&self) -> &CellMap {
        &self.right
    }

    /// The induced cochain map `α ↦ p_!(r*α)`.
    pub fn induced(&self, alpha: &Cochain) -> Cochain {
        self.left.transfer(&self.right.pullback(alpha))
    }

    /// The multivalued cellular map `x ↦ Σ_{x̃ ∈ p⁻¹(x)} r(x̃)`.
    pub fn evaluate(&self, k: usize, cell: usize) -> FormalSum<SignedCell> {
        let mut out = FormalSum::empty();
        for &c in self.left.fiber(k, cell) {
            if let Some((t, s)) = self.right.image(k, c as usize) {
                out.insert(SignedCell { degree: k, cell: t, sign: s }, 1);
            }
        }
        out
    }
}

/// Pushes a formal sum of cells forward along a single-valued cellular map.
pub fn push_cells(h: &CellMap, s: &FormalSum<SignedCell>) -> FormalSum<SignedCell> {
    let mut out = FormalSum::empty();
    for (x, m) in s.iter() {
        if let Some((t, sign)) = h.image(x.degree, x.cell as usize) {
            out.insert(
                SignedCell {
                    degree: x.degree,
                    cell: t,
                    sign: sign * x.sign,
                },
                m,
            );
        }
    }
    out
}

/// Checks `p_!(p*α) = deg · α` on every basis class of the base.
pub fn verify_transfer_degree(cover: &CoveringMap, base: &Cohomology) -> Tally {
    let mut t = Tally::default();
    let deg = Int::from(cover.degree());
    for g in base.groups() {
        for (i, alpha) in g.generators.iter().enumerate() {
            let back = cover.transfer(&cover.pullback(alpha));
            let ok = base.same_class(&back, &alpha.scaled(&deg)).unwrap_or(false);
            t.check(ok, || format!("H^{} basis class {i}", g.degree));
        }
    }
    t
}

/// Checks that transfer and pullback commute with coboundaries on random
/// cochains.
pub fn verify_chain_maps(cover: &CoveringMap, trials: usize, rng: &mut ChaCha8Rng) -> Tally {
    let mut t = Tally::default();
    let total = cover.total();
    let base = cover.base();
    for _ in 0..trials {
        for k in 0..total.num_degrees().saturating_sub(1) {
            let beta = random_cochain(k, total.count(k), rng);
            let lhs = base.coboundary(&cover.transfer(&beta));
            let rhs = cover.transfer(&total.coboundary(&beta));
            t.check(lhs == rhs, || format!("transfer vs coboundary in degree {k}"));
            let alpha = random_cochain(k, base.count(k), rng);
            let lhs = total.coboundary(&cover.pullback(&alpha));
            let rhs = cover.pullback(&base.coboundary(&alpha));
            t.check(lhs == rhs, || format!("pullback vs coboundary in degree {k}"));
        }
    }
    t
}

pub fn random_cochain(k: usize, len: usize, rng: &mut ChaCha8Rng) -> Cochain {
    Cochain::new(k, (0..len).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect())
}

/// Checks `p_!(p*α ⌣ β) = α ⌣ p_!β` at class level for all pairs of basis
/// classes.
pub fn verify_projection_formula(sc: &SimplicialCover) -> Tally {
    let hb = Cohomology::new(sc.base.cells());
    let ht = Cohomology::new(sc.total.cells());
    let top = sc.base.dim().unwrap_or(0);
    let mut t = Tally::default();
    for gb in hb.groups() {
        for gt in ht.groups() {
            if gb.degree + gt.degree > top {
                continue;
            }
            for (i, alpha) in gb.generators.iter().enumerate() {
                for (j, beta) in gt.generators.iter().enumerate() {
                    let pa = sc.cover.pullback(alpha);
                    let lhs = sc.cover.transfer(&cup(&sc.total, &pa, beta).expect("same host"));
                    let rhs = cup(&sc.base, alpha, &sc.cover.transfer(beta)).expect("same host");
                    let ok = hb.same_class(&lhs, &rhs).unwrap_or(false);
                    t.check(ok, || {
                        format!("H^{} class {i} with total H^{} class {j}", gb.degree, gt.degree)
                    });
                }
            }
        }
    }
    t
}

/// A square of maps as in the naturality statement: single-valued `g: A → C`
/// and `h: B → D`, spans `f1: A ⇝ B` and `f2: C ⇝ D`.
pub struct NaturalitySquare<'a> {
    pub a: &'a CellComplex,
    pub d: &'a CellComplex,
    pub g: &'a CellMap,
    pub h: &'a CellMap,
    pub f1: &'a Span,
    pub f2: &'a Span,
}

/// Outcome of a naturality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Naturality {
    /// The square does not commute at the level of formal sums.
    SquareDoesNotCommute(String),
    /// The induced maps differ on a basis class.
    Fails(String),
    Holds { classes: usize },
}

/// Checks `SP(h) ∘ f1 = f2 ∘ g` on cells, then `f1* ∘ h* = g* ∘ f2*` on a
/// basis of `H*(D)`.
pub fn verify_naturality(sq: &NaturalitySquare) -> Naturality {
    for k in 0..sq.a.num_degrees() {
        for c in 0..sq.a.count(k) {
            let lhs = push_cells(sq.h, &sq.f1.evaluate(k, c));
            let rhs = match sq.g.image(k, c) {
                Some((t, s)) => {
                    let v = sq.f2.evaluate(k, t as usize);
                    if s > 0 {
                        v
                    } else {
                        v.map(|x| SignedCell { sign: -x.sign, ..*x })
                    }
                }
                None => FormalSum::empty(),
            };
            if lhs != rhs {
                return Naturality::SquareDoesNotCommute(format!("{k}-cell {c}: {lhs:?} vs {rhs:?}"));
            }
        }
    }
    let ha = Cohomology::new(sq.a);
    let hd = Cohomology::new(sq.d);
    let mut classes = 0;
    for g in hd.groups() {
        if g.degree >= ha.num_degrees() {
            continue;
        }
        for (i, delta) in g.generators.iter().enumerate() {
            let lhs = sq.f1.induced(&sq.h.pullback(delta));
            let rhs = sq.g.pullback(&sq.f2.induced(delta));
            if !ha.same_class(&lhs, &rhs).unwrap_or(false) {
                return Naturality::Fails(format!("H^{} basis class {i}", g.degree));
            }
            classes += 1;
        }
    }
    Naturality::Holds { classes }
}

/// Transfer identities for one cover, recorded under `name`.
pub fn verify_cover(name: &str, sc: &SimplicialCover, trials: usize, rng: &mut ChaCha8Rng) -> Report {
    let mut report = Report::new();
    let hb = Cohomology::new(sc.base.cells());
    verify_transfer_degree(&sc.cover, &hb).into_report(&mut report, format!("{name}: transfer after pullback = degree"));
    verify_chain_maps(&sc.cover, trials, rng).into_report(&mut report, format!("{name}: transfer and pullback are cochain maps"));
    verify_projection_formula(sc).into_report(&mut report, format!("{name}: projection formula"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::SeedableRng;

    #[test]
    fn double_cover_of_circle() {
        let sc = fixtures::circle_double_cover();
        assert_eq!(sc.cover.degree(), 2);
        let hb = Cohomology::new(sc.base.cells());
        let ht = Cohomology::new(sc.total.cells());
        let unit = Cochain::constant_one(0, sc.base.count(0));
        assert_eq!(sc.cover.pullback(&unit), Cochain::constant_one(0, sc.total.count(0)));
        let g = &hb.group(1).unwrap().generators[0];
        let c = ht.coordinates(&sc.cover.pullback(g)).unwrap();
        assert_eq!(c[0].abs(), Int::from(2));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r = verify_cover("double", &sc, 3, &mut rng);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn trivial_cover_sums_sheets() {
        let circle = fixtures::complex("circle").unwrap();
        let sc = SimplicialCover::trivial(&circle, 2);
        let b1 = Cochain::from_i64(1, &[1, 2, 3]);
        let b2 = Cochain::from_i64(1, &[10, 20, 30]);
        let n = sc.total.count(1);
        let mut beta = Cochain::zero(1, n);
        for (c, &b) in sc.cover.assignment(1).iter().enumerate() {
            // sheet 0 holds the lower-numbered copy of each cell
            let first = sc.cover.fiber(1, b as usize)[0] as usize == c;
            beta.values[c] = if first { b1.values[b as usize].clone() } else { b2.values[b as usize].clone() };
        }
        assert_eq!(sc.cover.transfer(&beta), b1.add(&b2));
    }

    #[test]
    fn identity_and_fold_spans() {
        let circle = fixtures::complex("circle").unwrap();
        let id = Span::new(CoveringMap::identity(circle.cells()), &CellMap::identity(circle.cells()));
        let h = Cohomology::new(circle.cells());
        let g = &h.group(1).unwrap().generators[0];
        assert_eq!(id.induced(g), *g);
        let triv = SimplicialCover::trivial(&circle, 2);
        let fold = triv.cover.cell_map();
        let span = Span::new(triv.cover.clone(), &fold);
        assert_eq!(span.induced(g), g.scaled(&Int::from(2)));
    }

    #[test]
    fn cover_inverse_span_is_the_transfer() {
        let sc = fixtures::circle_double_cover();
        let span = Span::new(sc.cover.clone(), &CellMap::identity(sc.cover.total()));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 0..2 {
            let beta = random_cochain(k, sc.total.count(k), &mut rng);
            assert_eq!(span.induced(&beta), sc.cover.transfer(&beta));
        }
    }

    #[test]
    fn malformed_cover_is_rejected() {
        let circle = fixtures::complex("circle").unwrap();
        let interval = SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2]]).unwrap();
        let err = SimplicialCover::new(&interval, &circle, &[0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::MalformedCover(_)));
    }

    #[test]
    fn naturality_of_conjugated_spans() {
        let hex = fixtures::complex("hexagon").unwrap();
        let rot = SimplicialMap::new(&hex, &hex, (0..6).map(|v| (v + 1) % 6).collect()).unwrap();
        let h = rot.cell_map(&hex, &hex);
        let id = CellMap::identity(hex.cells());
        let f = Span::new(CoveringMap::identity(hex.cells()), &id);
        let conj = Span::new(CoveringMap::identity(hex.cells()), &h);
        let sq = NaturalitySquare {
            a: hex.cells(),
            d: hex.cells(),
            g: &h,
            h: &h,
            f1: &f,
            f2: &f,
        };
        assert!(matches!(verify_naturality(&sq), Naturality::Holds { .. }));
        let bad = NaturalitySquare {
            a: hex.cells(),
            d: hex.cells(),
            g: &id,
            h: &id,
            f1: &f,
            f2: &conj,
        };
        assert!(matches!(verify_naturality(&bad), Naturality::SquareDoesNotCommute(_)));
    }
}

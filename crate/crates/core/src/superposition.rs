//! The superposition product `sup = p_! ∘ i*` on the cohomology of
//! configuration-space models, its ring axioms, and the set-level
//! factorizations of `Φ` and `μ`.

use std::collections::BTreeSet;
use std::fmt;

use crate::config_models::{
    color_forget_cover, count_cells, restrict_cross, shuffle_sign, ConfigModel, ModelOptions,
};
use crate::error::{Error, Result};
use crate::formal_sums::{self, cover_inverse, phi_component_graded, sample_configs, Graded, Smash};
use crate::integer::{binomial, Int};
use crate::par;
use crate::report::{Report, Tally};
use crate::simplicial::{Cochain, Cohomology, SimplicialComplex};

/// `sup(α, β)` on the unordered model `target` with `n + m` points, summing
/// `i*(α × β)` over all colorings of each cell.
pub fn sup(blue: &ConfigModel, red: &ConfigModel, target: &ConfigModel, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    let (n, m) = (blue.points(), red.points());
    if target.points() != n + m || [blue, red, target].iter().any(|x| x.blocks().len() != 1) {
        return Err(Error::Input("sup needs unordered models with n, m and n + m points".into()));
    }
    if blue.base() != target.base() || red.base() != target.base() {
        return Err(Error::MismatchedHost("models are built on different complexes".into()));
    }
    if alpha.len() != blue.complex().count(alpha.degree) || beta.len() != red.complex().count(beta.degree) {
        return Err(Error::MismatchedHost("cochains do not live on the given models".into()));
    }
    let d = alpha.degree + beta.degree;
    if d >= target.complex().num_degrees() {
        return Err(Error::DegreeOutOfRange {
            degree: d,
            max: target.complex().num_degrees().saturating_sub(1),
        });
    }
    let masks: Vec<u32> = (0u32..1 << (n + m)).filter(|x| x.count_ones() as usize == n).collect();
    let values = par::map_range(target.complex().count(d), |c| {
        let t = target.tuple(d, c);
        let mut acc = Int::ZERO;
        let mut b = Vec::with_capacity(n);
        let mut r = Vec::with_capacity(m);
        for &mask in &masks {
            b.clear();
            r.clear();
            let mut db = 0;
            for (i, &g) in t.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    b.push(g);
                    db += target.simplex_dim(g);
                } else {
                    r.push(g);
                }
            }
            if db != alpha.degree {
                continue;
            }
            let (Some(x), Some(y)) = (blue.index_of(db, &b), red.index_of(beta.degree, &r)) else {
                continue;
            };
            let (va, vb) = (&alpha.values[x as usize], &beta.values[y as usize]);
            if va.is_zero() || vb.is_zero() {
                continue;
            }
            let v = va * vb;
            if shuffle_sign(target, &t, mask) > 0 {
                acc += &v;
            } else {
                acc -= &v;
            }
        }
        acc
    });
    Ok(Cochain::new(d, values))
}

/// `sup` computed literally: restrict `α × β` to the colored model, then
/// transfer along the color-forgetting cover.
pub fn sup_via_cover(
    colored: &ConfigModel,
    blue: &ConfigModel,
    red: &ConfigModel,
    target: &ConfigModel,
    alpha: &Cochain,
    beta: &Cochain,
) -> Result<Cochain> {
    let cover = color_forget_cover(colored, target)?;
    let restricted = restrict_cross(colored, blue, red, alpha, beta)?;
    Ok(cover.transfer(&cover.reorient(&restricted)))
}

/// One tabulated product: `sup(g_i, h_j)` for basis classes `g_i` of
/// `H^p(C_n)` and `h_j` of `H^q(C_m)`, in coordinates of `H^{p+q}(C_{n+m})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupEntry {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub q: usize,
    pub i: usize,
    pub j: usize,
    pub coords: Vec<Int>,
}

/// Unordered models `C_0, …, C_N` with their cohomology up to a degree, and
/// all products between them.
pub struct SupTable {
    pub max_points: usize,
    pub max_degree: usize,
    models: Vec<ConfigModel>,
    cohomology: Vec<Cohomology>,
    pub entries: Vec<SupEntry>,
}

/// Cells allowed in the largest model when the degree is chosen
/// automatically.
pub const AUTO_DEGREE_BUDGET: usize = 1_000_000;

/// The largest degree `D` such that the `max_points` model up to degree
/// `D + 1` has at most `budget` cells.
pub fn auto_degree(k: &SimplicialComplex, max_points: usize, budget: usize) -> Result<usize> {
    let top = max_points * k.dim().unwrap_or(0);
    let counts = count_cells(k, &[max_points], top)?;
    let mut best = 0;
    for d in 0..=top {
        let cells: usize = counts.iter().take(d + 2).sum();
        if cells <= budget {
            best = d;
        }
    }
    Ok(best)
}

impl SupTable {
    pub fn new(k: &SimplicialComplex, max_points: usize, max_degree: usize, guard: usize) -> Result<Self> {
        let opts = ModelOptions {
            max_dim: Some(max_degree + 1),
            guard,
        };
        let models = (0..=max_points)
            .map(|n| ConfigModel::unordered(k, n, opts))
            .collect::<Result<Vec<_>>>()?;
        let cohomology: Vec<Cohomology> = models.iter().map(|m| Cohomology::new(m.complex())).collect();
        let mut table = SupTable {
            max_points,
            max_degree,
            models,
            cohomology,
            entries: Vec::new(),
        };
        let mut entries = Vec::new();
        for n in 0..=max_points {
            for m in 0..=max_points - n {
                for p in 0..=max_degree {
                    for q in 0..=max_degree - p {
                        let (Some(gp), Some(gq)) = (table.basis(n, p), table.basis(m, q)) else {
                            continue;
                        };
                        if table.basis(n + m, p + q).is_none() {
                            continue;
                        }
                        for i in 0..gp.len() {
                            for j in 0..gq.len() {
                                let s = table.product(n, &gp[i], m, &gq[j])?;
                                let coords = table.cohomology[n + m].coordinates(&s)?;
                                entries.push(SupEntry { n, m, p, q, i, j, coords });
                            }
                        }
                    }
                }
            }
        }
        table.entries = entries;
        Ok(table)
    }

    pub fn model(&self, n: usize) -> &ConfigModel {
        &self.models[n]
    }

    pub fn cohomology(&self, n: usize) -> &Cohomology {
        &self.cohomology[n]
    }

    /// Basis cocycles of `H^p(C_n)`, if computed.
    pub fn basis(&self, n: usize, p: usize) -> Option<&[Cochain]> {
        if p > self.max_degree {
            return None;
        }
        self.cohomology.get(n)?.group(p).ok().map(|g| g.generators.as_slice())
    }

    /// `sup` of cochains on `C_n` and `C_m`.
    pub fn product(&self, n: usize, alpha: &Cochain, m: usize, beta: &Cochain) -> Result<Cochain> {
        sup(&self.models[n], &self.models[m], &self.models[n + m], alpha, beta)
    }

    pub fn same_class(&self, n: usize, a: &Cochain, b: &Cochain) -> Result<bool> {
        self.cohomology[n].same_class(a, b)
    }

    /// The unit `1_n`, the constant 0-cocycle on `C_n`.
    pub fn unit(&self, n: usize) -> Cochain {
        Cochain::constant_one(0, self.models[n].complex().count(0))
    }

    pub fn entry(&self, n: usize, m: usize, p: usize, q: usize, i: usize, j: usize) -> Option<&SupEntry> {
        self.entries
            .iter()
            .find(|e| (e.n, e.m, e.p, e.q, e.i, e.j) == (n, m, p, q, i, j))
    }

    /// Basis classes `(n, p, index, cocycle)` over all tabulated groups.
    fn classes(&self) -> Vec<(usize, usize, usize, &Cochain)> {
        let mut out = Vec::new();
        for n in 0..=self.max_points {
            for p in 0..=self.max_degree {
                if let Some(b) = self.basis(n, p) {
                    out.extend(b.iter().enumerate().map(|(i, c)| (n, p, i, c)));
                }
            }
        }
        out
    }
}

impl fmt::Display for SupTable {
    /// Tab-separated rows `n m p q i j coords`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n\tm\tp\tq\ta\tb\tsup")?;
        for e in &self.entries {
            let coords: Vec<String> = e.coords.iter().map(Int::to_string).collect();
            writeln!(f, "{}\t{}\t{}\t{}\t{}\t{}\t{}", e.n, e.m, e.p, e.q, e.i, e.j, coords.join(" "))?;
        }
        Ok(())
    }
}

/// Checks units, graded commutativity, associativity and the divided-power
/// law on every tabulated class.
pub fn verify_ring_axioms(table: &SupTable) -> Result<Report> {
    let classes = table.classes();
    let mut units = Tally::default();
    let mut comm = Tally::default();
    let mut assoc = Tally::default();
    let mut divided = Tally::default();
    let one0 = table.unit(0);
    for &(n, p, i, a) in &classes {
        let left = table.product(0, &one0, n, a)?;
        let right = table.product(n, a, 0, &one0)?;
        let ok = table.same_class(n, &left, a)? && table.same_class(n, &right, a)?;
        units.check(ok, || format!("C_{n} H^{p} class {i}"));
    }
    for &(n, p, i, a) in &classes {
        for &(m, q, j, b) in &classes {
            if n + m > table.max_points || p + q > table.max_degree || table.basis(n + m, p + q).is_none() {
                continue;
            }
            let ab = table.product(n, a, m, b)?;
            let ba = table.product(m, b, n, a)?;
            let ba = if p * q % 2 == 1 { ba.scaled(&Int::from(-1)) } else { ba };
            comm.check(table.same_class(n + m, &ab, &ba)?, || {
                format!("sup(C_{n} H^{p}#{i}, C_{m} H^{q}#{j}) vs swapped")
            });
            for &(l, r, k, c) in &classes {
                let total = n + m + l;
                if total > table.max_points || p + q + r > table.max_degree || table.basis(total, p + q + r).is_none() {
                    continue;
                }
                let lhs = table.product(n + m, &ab, l, c)?;
                let bc = table.product(m, b, l, c)?;
                let rhs = table.product(n, a, m + l, &bc)?;
                assoc.check(table.same_class(total, &lhs, &rhs)?, || {
                    format!("(C_{n}#{i}, C_{m}#{j}, C_{l}#{k}) in degrees ({p},{q},{r})")
                });
            }
        }
    }
    for n in 0..=table.max_points {
        for m in 0..=table.max_points - n {
            let s = table.product(n, &table.unit(n), m, &table.unit(m))?;
            let want = table.unit(n + m).scaled(&binomial((n + m) as u64, n as u64));
            divided.check(table.same_class(n + m, &s, &want)?, || {
                format!("sup(1_{n}, 1_{m}) = {:?}", table.cohomology(n + m).coordinates(&s))
            });
        }
    }
    let mut report = Report::new();
    units.into_report(&mut report, "unit laws");
    comm.into_report(&mut report, "graded commutativity");
    assoc.into_report(&mut report, "associativity");
    divided.into_report(&mut report, "sup(1_n, 1_m) = C(n+m, n) 1_{n+m}");
    Ok(report)
}

/// Checks `Φ^{(n+m,n,m)} = SP(ĩ) ∘ (color-forgetting cover)⁻¹` on every
/// sampled configuration with `n + m ≤ max_total` points.
pub fn verify_phi_factorization(max_total: usize) -> Result<Report> {
    let mut report = Report::new();
    for total in 1..=max_total {
        let configs = sample_configs(total);
        for n in 0..=total {
            let m = total - n;
            let cover = formal_sums::color_forget_cover(&configs, n);
            let (inv, _) = cover_inverse(&cover, configs.clone())?;
            let mut t = Tally::default();
            for xi in &configs {
                let lhs = phi_component_graded(total, n, m, xi)?;
                let rhs = inv.apply(xi).map(|c| Smash(Graded(c.blue.clone()), Graded(c.red.clone())));
                t.check(lhs == rhs, || format!("{xi:?}: Φ = {lhs:?}, SP(i)p⁻¹ = {rhs:?}"));
            }
            t.into_report(&mut report, format!("phi factorization ({n},{m})"));
        }
    }
    Ok(report)
}

/// A finite configuration or the point at infinity (`None`).
pub type Compactified = Option<BTreeSet<u32>>;

/// `μ(s, t)`: the union when `s` and `t` are disjoint, `∞` otherwise.
pub fn superpose_points(s: &Compactified, t: &Compactified) -> Compactified {
    match (s, t) {
        (Some(s), Some(t)) if s.is_disjoint(t) => Some(s.union(t).copied().collect()),
        _ => None,
    }
}

/// `i^∞`: a colored configuration when the parts are disjoint, `∞`
/// otherwise.
fn separate(s: &Compactified, t: &Compactified) -> Option<(BTreeSet<u32>, BTreeSet<u32>)> {
    match (s, t) {
        (Some(s), Some(t)) if s.is_disjoint(t) => Some((s.clone(), t.clone())),
        _ => None,
    }
}

/// `p^∞`: forget colors, fixing `∞`.
fn forget(c: Option<(BTreeSet<u32>, BTreeSet<u32>)>) -> Compactified {
    c.map(|(b, r)| b.union(&r).copied().collect())
}

fn subsets(ground: usize, size: usize) -> Vec<BTreeSet<u32>> {
    (0u32..1 << ground)
        .filter(|x| x.count_ones() as usize == size)
        .map(|x| (0..ground as u32).filter(|i| x & (1 << i) != 0).collect())
        .collect()
}

/// Exhaustive check of `μ = p^∞ ∘ i^∞` on `n`- and `m`-subsets of a ground
/// set, plus `∞` on either side. Returns the report and the number of
/// finite pairs sent to `∞`.
pub fn verify_mu_factorization(ground: usize, n: usize, m: usize) -> (Tally, usize) {
    let mut left: Vec<Compactified> = subsets(ground, n).into_iter().map(Some).collect();
    let mut right: Vec<Compactified> = subsets(ground, m).into_iter().map(Some).collect();
    let finite = (left.len(), right.len());
    left.push(None);
    right.push(None);
    let mut t = Tally::default();
    let mut to_infinity = 0;
    for (a, s) in left.iter().enumerate() {
        for (b, u) in right.iter().enumerate() {
            let direct = superpose_points(s, u);
            let factored = forget(separate(s, u));
            t.check(direct == factored, || format!("{s:?}, {u:?}: {direct:?} vs {factored:?}"));
            if a < finite.0 && b < finite.1 {
                let disjoint = s.as_ref().zip(u.as_ref()).is_some_and(|(x, y)| x.is_disjoint(y));
                t.check(disjoint == direct.is_some(), || format!("{s:?}, {u:?}: disjointness"));
                if direct.is_none() {
                    to_infinity += 1;
                }
            }
        }
    }
    (t, to_infinity)
}

/// `verify_mu_factorization` for every ground set up to `max_ground` and all
/// subset sizes.
pub fn verify_mu_suite(max_ground: usize) -> Report {
    let mut total = Tally::default();
    for g in 0..=max_ground {
        for n in 0..=g {
            for m in 0..=g {
                let (t, _) = verify_mu_factorization(g, n, m);
                total.cases += t.cases;
                if total.failure.is_none() {
                    total.failure = t.failure;
                }
            }
        }
    }
    let mut report = Report::new();
    total.into_report(&mut report, format!("mu factorization, ground sets <= {max_ground}"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal_sums::FormalSum;
    use crate::config_models::DEFAULT_GUARD;
    use crate::fixtures;
    use crate::simplicial::subdivide_times;

    fn model(k: &SimplicialComplex, blocks: &[usize]) -> ConfigModel {
        ConfigModel::build(k, blocks, ModelOptions::default()).unwrap()
    }

    #[test]
    fn disk_units_multiply_to_two() {
        let k = subdivide_times(&fixtures::complex("disk").unwrap(), 2);
        let c1 = model(&k, &[1]);
        let c2 = model(&k, &[2]);
        let one = Cochain::constant_one(0, c1.complex().count(0));
        let s = sup(&c1, &c1, &c2, &one, &one).unwrap();
        assert!(s.values.iter().all(|v| *v == Int::from(2)));
    }

    #[test]
    fn direct_and_cover_routes_agree() {
        let k = subdivide_times(&fixtures::complex("disk").unwrap(), 1);
        let c1 = model(&k, &[1]);
        let c2 = model(&k, &[2]);
        let c11 = model(&k, &[1, 1]);
        let c3 = model(&k, &[3]);
        let c21 = model(&k, &[2, 1]);
        let h2 = Cohomology::new(c2.complex());
        let g = &h2.group(1).unwrap().generators[0];
        let one1 = Cochain::constant_one(0, c1.complex().count(0));
        let e1 = Cochain::from_i64(1, &(0..c1.complex().count(1) as i64).map(|x| x % 3 - 1).collect::<Vec<_>>());
        assert_eq!(sup(&c1, &c1, &c2, &one1, &e1).unwrap(), sup_via_cover(&c11, &c1, &c1, &c2, &one1, &e1).unwrap());
        assert_eq!(sup(&c2, &c1, &c3, g, &one1).unwrap(), sup_via_cover(&c21, &c2, &c1, &c3, g, &one1).unwrap());
    }

    #[test]
    fn zero_points_is_the_unit() {
        let k = subdivide_times(&fixtures::complex("interval").unwrap(), 2);
        let c0 = model(&k, &[0]);
        let c2 = model(&k, &[2]);
        let alpha = Cochain::from_i64(0, &(0..c2.complex().count(0) as i64).collect::<Vec<_>>());
        let unit = Cochain::constant_one(0, 1);
        assert_eq!(sup(&c2, &c0, &c2, &alpha, &unit).unwrap(), alpha);
    }

    #[test]
    fn interval_table() {
        let k = subdivide_times(&fixtures::complex("interval").unwrap(), 2);
        let t = SupTable::new(&k, 3, 0, DEFAULT_GUARD).unwrap();
        assert_eq!(t.entry(2, 1, 0, 0, 0, 0).unwrap().coords, vec![Int::from(3)]);
        assert_eq!(t.entry(1, 1, 0, 0, 0, 0).unwrap().coords, vec![Int::from(2)]);
        let r = verify_ring_axioms(&t).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn disk_ring_axioms_in_low_degree() {
        let k = subdivide_times(&fixtures::complex("disk").unwrap(), 1);
        let t = SupTable::new(&k, 2, 1, DEFAULT_GUARD).unwrap();
        let r = verify_ring_axioms(&t).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn phi_factorization_examples() {
        use crate::formal_sums::LabelledConfig;
        let xi = LabelledConfig::new([1, 2]);
        let phi = phi_component_graded(2, 1, 1, &xi).unwrap();
        let a = Graded(LabelledConfig::new([1]));
        let b = Graded(LabelledConfig::new([2]));
        let want: FormalSum<_> = [Smash(a.clone(), b.clone()), Smash(b, a)].into_iter().collect();
        assert_eq!(phi, want);
        let xi3 = LabelledConfig::new([1, 2, 3]);
        assert_eq!(phi_component_graded(3, 2, 1, &xi3).unwrap().len(), 3);
        let r = verify_phi_factorization(4).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn mu_examples() {
        let a: Compactified = Some([0].into());
        let b: Compactified = Some([1].into());
        assert_eq!(superpose_points(&a, &b), Some([0, 1].into()));
        assert_eq!(superpose_points(&a, &a), None);
        assert_eq!(superpose_points(&None, &b), None);
        let (t, inf) = verify_mu_factorization(3, 1, 1);
        assert!(t.failure.is_none());
        assert_eq!(inf, 3);
        assert_eq!(t.cases, 16 + 9);
        assert!(verify_mu_suite(6).passed());
    }

    #[test]
    fn auto_degree_fits_the_budget() {
        let k = subdivide_times(&fixtures::complex("disk").unwrap(), 2);
        assert_eq!(auto_degree(&k, 4, AUTO_DEGREE_BUDGET).unwrap(), 1);
        assert_eq!(auto_degree(&k, 1, AUTO_DEGREE_BUDGET).unwrap(), 2);
    }
}

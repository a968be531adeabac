//! The verification suites run by the command line and the acceptance
//! target.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config_models::{color_forget_cover, ConfigModel, ModelOptions};
use crate::covers::{verify_cover, verify_naturality, CoveringMap, Naturality, NaturalitySquare, SimplicialCover, Span};
use crate::error::Result;
use crate::fixtures;
use crate::formal_sums::verify_formal_suite;
use crate::report::Report;
use crate::simplicial::{lift_automorphism, subdivide_times, CellMap, SimplicialComplex, SimplicialMap};
use crate::superposition::{verify_mu_suite, verify_phi_factorization, verify_ring_axioms, SupTable};
use crate::thom::{trivial_bundle, verify_thom_transfer_square, verify_thom_isomorphism};


pub fn formal(max_size: usize) -> Report {
    verify_formal_suite(max_size)
}

fn record_naturality(report: &mut Report, name: &str, n: Naturality) {
    match n {
        Naturality::Holds { classes } => report.record(name, classes, None),
        Naturality::Fails(ce) => report.record(name, 1, Some(ce)),
        Naturality::SquareDoesNotCommute(ce) => report.record(name, 1, Some(format!("square does not commute: {ce}"))),
    }
}

/// The color-forgetting span `C_{n+m} ⇝ C_{n,m}` is natural for the
/// rotation of the subdivided disk acting on both models.
pub fn phi_naturality(level: usize, n: usize, m: usize) -> Result<Naturality> {
    let disk = fixtures::complex("disk").expect("fixture");
    let k = subdivide_times(&disk, level);
    let mut perm: Vec<u32> = vec![1, 2, 0];
    let mut cur = disk;
    for _ in 0..level {
        perm = lift_automorphism(&cur, &perm).expect("rotation is an automorphism");
        cur = crate::simplicial::barycentric_subdivide(&cur).complex;
    }
    let opts = ModelOptions::default();
    let colored = ConfigModel::colored(&k, n, m, opts)?;
    let unordered = ConfigModel::unordered(&k, n + m, opts)?;
    let cover = color_forget_cover(&colored, &unordered)?;
    let span = Span::new(cover, &CellMap::identity(colored.complex()));
    let g = unordered.automorphism(&perm)?;
    let h = colored.automorphism(&perm)?;
    Ok(verify_naturality(&NaturalitySquare {
        a: unordered.complex(),
        d: colored.complex(),
        g: &g,
        h: &h,
        f1: &span,
        f2: &span,
    }))
}

pub fn transfer(seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new();
    for (name, sc) in fixtures::test_covers() {
        report.extend(verify_cover(name, &sc, 3, &mut rng));
    }
    let hex = fixtures::complex("hexagon").expect("fixture");
    let id = CellMap::identity(hex.cells());
    let rot = SimplicialMap::new(&hex, &hex, (0..6).map(|v| (v + 1) % 6).collect())?.cell_map(&hex, &hex);
    let f = Span::new(CoveringMap::identity(hex.cells()), &id);
    let square = |g: &CellMap, h: &CellMap| {
        verify_naturality(&NaturalitySquare {
            a: hex.cells(),
            d: hex.cells(),
            g,
            h,
            f1: &f,
            f2: &f,
        })
    };
    record_naturality(&mut report, "naturality: identity square", square(&id, &id));
    record_naturality(&mut report, "naturality: rotation of the hexagon", square(&rot, &rot));
    for (n, m) in [(1, 1), (2, 1)] {
        let name = format!("naturality: color-forgetting span ({n},{m}) under disk rotation");
        record_naturality(&mut report, &name, phi_naturality(1, n, m)?);
    }
    Ok(report)
}

pub fn thom_square() -> Result<Report> {
    let mut report = Report::new();
    let circle = fixtures::complex("circle").expect("fixture");
    let interval = subdivide_times(&fixtures::complex("interval").expect("fixture"), 1);
    let cases: Vec<(&str, &SimplicialComplex, Vec<(&str, SimplicialCover)>)> = vec![
        (
            "circle",
            &circle,
            vec![
                ("identity", SimplicialCover::identity(&circle)),
                ("connected double", fixtures::circle_double_cover()),
                ("trivial double", SimplicialCover::trivial(&circle, 2)),
            ],
        ),
        (
            "interval",
            &interval,
            vec![
                ("identity", SimplicialCover::identity(&interval)),
                ("trivial double", SimplicialCover::trivial(&interval, 2)),
            ],
        ),
    ];
    for (base_name, base, covers) in cases {
        let b = trivial_bundle(base, 1)?;
        let u = b.thom_class()?;
        report.record(
            format!("{base_name}: Thom class unique"),
            1,
            (!u.unique).then(|| "solution space has rank > 1".to_string()),
        );
        verify_thom_isomorphism(&b, &u.cochain)?.into_report(&mut report, format!("{base_name}: Thom isomorphism"));
        for (cover_name, sc) in covers {
            for c in verify_thom_transfer_square(&b, &sc)?.checks {
                report.record(format!("{base_name}, {cover_name} cover: {}", c.name), c.cases, c.counterexample);
            }
        }
    }
    Ok(report)
}

pub fn ring(k: &SimplicialComplex, max_points: usize, max_degree: usize, guard: usize) -> Result<Report> {
    let table = SupTable::new(k, max_points, max_degree, guard)?;
    verify_ring_axioms(&table)
}

pub fn phi_factor(max_total: usize) -> Result<Report> {
    verify_phi_factorization(max_total)
}

pub fn mu_factor(max_ground: usize) -> Report {
    verify_mu_suite(max_ground)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in [transfer(0).unwrap(), thom_square().unwrap(), phi_factor(3).unwrap(), mu_factor(4)] {
            assert!(r.passed(), "{r}");
        }
    }
}

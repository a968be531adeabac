//! Small built-in complexes and covers.

use crate::covers::SimplicialCover;
use crate::simplicial::{parse_complex, SimplicialComplex};

const SOURCES: &[(&str, &str)] = &[
    ("disk", include_str!("../fixtures/disk.txt")),
    ("interval", include_str!("../fixtures/interval.txt")),
    ("circle", include_str!("../fixtures/circle.txt")),
    ("sphere", include_str!("../fixtures/sphere.txt")),
    ("torus", include_str!("../fixtures/torus.txt")),
    ("rp2", include_str!("../fixtures/rp2.txt")),
    ("hexagon", include_str!("../fixtures/hexagon.txt")),
    ("nonagon", include_str!("../fixtures/nonagon.txt")),
    ("icosahedron", include_str!("../fixtures/icosahedron.txt")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn complex(name: &str) -> Option<SimplicialComplex> {
    source(name).map(|s| parse_complex(s).expect("fixture parses"))
}

fn wrap(total: &str, base: &str, vertex_map: &[u32]) -> SimplicialCover {
    let t = complex(total).expect("fixture");
    let b = complex(base).expect("fixture");
    SimplicialCover::new(&t, &b, vertex_map).expect("fixture cover")
}

/// Hexagon wrapping twice around the triangle.
pub fn circle_double_cover() -> SimplicialCover {
    wrap("hexagon", "circle", &[0, 1, 2, 0, 1, 2])
}

/// 9-cycle wrapping three times around the triangle.
pub fn circle_triple_cover() -> SimplicialCover {
    wrap("nonagon", "circle", &[0, 1, 2, 0, 1, 2, 0, 1, 2])
}

/// Antipodal quotient of the icosahedron onto the 6-vertex projective plane.
pub fn sphere_double_cover() -> SimplicialCover {
    wrap("icosahedron", "rp2", &[0, 1, 2, 3, 4, 5, 4, 5, 1, 2, 3, 0])
}

/// The covers used by the transfer suite.
pub fn test_covers() -> Vec<(&'static str, SimplicialCover)> {
    let circle = complex("circle").expect("fixture");
    let disk = complex("disk").expect("fixture");
    vec![
        ("identity of the torus", SimplicialCover::identity(&complex("torus").expect("fixture"))),
        ("connected double cover of the circle", circle_double_cover()),
        ("connected triple cover of the circle", circle_triple_cover()),
        ("trivial double cover of the circle", SimplicialCover::trivial(&circle, 2)),
        ("trivial triple cover of the disk", SimplicialCover::trivial(&disk, 3)),
        ("sphere over the projective plane", sphere_double_cover()),
    ]
}

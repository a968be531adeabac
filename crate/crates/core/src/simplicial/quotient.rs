//! Quotients of cell complexes by free cellular group actions.

use super::complex::{CellComplex, Incidence};
use super::maps::CellMap;
use crate::error::{Error, Result};

/// The action of one group element: a signed permutation of cells in
/// every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellAction {
    pub images: Vec<Vec<(u32, i8)>>,
}

impl CellAction {
    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .all(|l| l.iter().enumerate().all(|(c, &(t, s))| t as usize == c && s == 1))
    }

    pub fn as_cell_map(&self) -> CellMap {
        CellMap::new(
            self.images
                .iter()
                .map(|l| l.iter().map(|&img| Some(img)).collect())
                .collect(),
        )
    }
}

/// The orbit complex and the signed projection onto it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub complex: CellComplex,
    /// Total cell ↦ `(orbit, sign)` with `cell ~ sign · representative`.
    pub projection: CellMap,
    /// Smallest cell of each orbit, per degree.
    pub representatives: Vec<Vec<u32>>,
    pub group_order: usize,
}

/// Quotient by a group given as the list of all its elements.
pub fn quotient_by_free_action(cx: &CellComplex, group: &[CellAction]) -> Result<Quotient> {
    if group.is_empty() {
        return Err(Error::Input("a group has at least the identity".into()));
    }
    for g in group {
        if g.images.len() != cx.num_degrees()
            || g.images.iter().zip(cx.counts()).any(|(l, &n)| l.len() != n)
        {
            return Err(Error::Input("group element does not match the complex".into()));
        }
        if !g.as_cell_map().is_chain_map(cx, cx) {
            return Err(Error::Input("group element does not commute with the boundary".into()));
        }
    }
    let order = group.len();
    let mut class_of: Vec<Vec<Option<(u32, i8)>>> =
        cx.counts().iter().map(|&n| vec![None; n]).collect();
    let mut representatives = Vec::with_capacity(cx.num_degrees());
    for k in 0..cx.num_degrees() {
        let mut reps = Vec::new();
        for c in 0..cx.count(k) {
            if class_of[k][c].is_some() {
                continue;
            }
            let orbit = reps.len() as u32;
            reps.push(c as u32);
            for g in group {
                let (t, s) = g.images[k][c];
                if class_of[k][t as usize].is_some() {
                    return Err(Error::NonFreeAction(format!(
                        "{k}-cell {c} has a nontrivial stabilizer"
                    )));
                }
                class_of[k][t as usize] = Some((orbit, s));
            }
        }
        representatives.push(reps);
    }
    let counts: Vec<usize> = representatives.iter().map(Vec::len).collect();
    let mut boundary = Vec::with_capacity(counts.len());
    for (k, reps) in representatives.iter().enumerate() {
        let mut inc = Incidence::default();
        for &r in reps {
            let list = if k == 0 {
                Vec::new()
            } else {
                cx.faces(k, r as usize)
                    .map(|(f, a)| {
                        let (o, s) = class_of[k - 1][f as usize].expect("assigned");
                        (o, a * s as i32)
                    })
                    .collect()
            };
            inc.push_cell(list);
        }
        boundary.push(inc);
    }
    let complex = CellComplex::new(counts, boundary)?.with_truncated(cx.is_truncated());
    Ok(Quotient {
        complex,
        projection: CellMap::new(class_of),
        representatives,
        group_order: order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::cohomology::Cohomology;
    use crate::simplicial::simplicial::{SimplicialComplex, SimplicialMap};

    fn hexagon() -> SimplicialComplex {
        SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [0, 5]]).unwrap()
    }

    fn action_of(k: &SimplicialComplex, vmap: Vec<u32>) -> CellAction {
        let m = SimplicialMap::new(k, k, vmap).unwrap().cell_map(k, k);
        CellAction {
            images: (0..m.num_degrees())
                .map(|d| m.images(d).iter().map(|i| i.expect("automorphism")).collect())
                .collect(),
        }
    }

    #[test]
    fn antipodal_hexagon_is_a_circle() {
        let h = hexagon();
        let id = action_of(&h, (0..6).collect());
        let anti = action_of(&h, (0..6).map(|v| (v + 3) % 6).collect());
        let q = quotient_by_free_action(h.cells(), &[id.clone(), anti]).unwrap();
        assert_eq!(q.complex.euler_characteristic(), 0);
        assert_eq!(Cohomology::new(&q.complex).betti(), vec![1, 1]);
        assert!(q.projection.is_chain_map(h.cells(), &q.complex));
        let trivial = quotient_by_free_action(h.cells(), &[id]).unwrap();
        assert_eq!(trivial.complex, *h.cells());
    }

    #[test]
    fn reflection_is_not_free() {
        let h = hexagon();
        let id = action_of(&h, (0..6).collect());
        let refl = action_of(&h, (0..6).map(|v| (6 - v) % 6).collect());
        let err = quotient_by_free_action(h.cells(), &[id, refl]).unwrap_err();
        assert!(matches!(err, Error::NonFreeAction(_)));
        assert!(err.to_string().contains("subdivide"));
    }
}

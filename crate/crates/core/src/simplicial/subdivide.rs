//! Barycentric subdivision.

use super::simplicial::{SimplicialComplex, SimplicialMap};

/// A subdivided complex with its last-vertex map back to the original.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// Simplicial approximation of the identity, `sd K → K`.
    pub to_original: SimplicialMap,
}

/// Barycentric subdivision. The vertices of `sd K` are the simplices of `K`
/// ordered by dimension, then lexicographically; with that order the
/// last-vertex map is order preserving.
pub fn barycentric_subdivide(k: &SimplicialComplex) -> Subdivision {
    let mut gid_base = Vec::new();
    let mut total = 0u32;
    for d in 0..k.dim().map_or(0, |d| d + 1) {
        gid_base.push(total);
        total += k.count(d) as u32;
    }
    let gid = |s: &[u32]| gid_base[s.len() - 1] + k.index_of(s).expect("face of a simplex");
    let mut tops = Vec::new();
    for s in k.maximal_simplices() {
        let mut perm: Vec<u32> = s.clone();
        permutations(&mut perm, 0, &mut |p| {
            let mut flag: Vec<u32> = Vec::with_capacity(p.len());
            let mut face: Vec<u32> = Vec::with_capacity(p.len());
            for &v in p {
                let pos = face.partition_point(|&w| w < v);
                face.insert(pos, v);
                flag.push(gid(&face));
            }
            tops.push(flag);
        });
    }
    let labels: Vec<u32> = (0..total).collect();
    let complex = SimplicialComplex::from_internal(labels, &tops);
    let mut vertex_map = Vec::with_capacity(total as usize);
    for d in 0..gid_base.len() {
        for s in k.simplices(d) {
            vertex_map.push(*s.last().expect("nonempty simplex"));
        }
    }
    Subdivision {
        complex,
        to_original: SimplicialMap { vertex_map },
    }
}

/// Subdivide `times` times; returns the final complex.
pub fn subdivide_times(k: &SimplicialComplex, times: usize) -> SimplicialComplex {
    let mut cur = k.clone();
    for _ in 0..times {
        cur = barycentric_subdivide(&cur).complex;
    }
    cur
}

/// The vertex permutation of `sd K` induced by a vertex permutation of `K`
/// (which must be an automorphism).
pub fn lift_automorphism(k: &SimplicialComplex, perm: &[u32]) -> Option<Vec<u32>> {
    let mut gid_base = Vec::new();
    let mut total = 0u32;
    for d in 0..k.dim().map_or(0, |d| d + 1) {
        gid_base.push(total);
        total += k.count(d) as u32;
    }
    let mut out = Vec::with_capacity(total as usize);
    for d in 0..gid_base.len() {
        for s in k.simplices(d) {
            let mut img: Vec<u32> = s.iter().map(|&v| perm[v as usize]).collect();
            img.sort_unstable();
            out.push(gid_base[d] + k.index_of(&img)?);
        }
    }
    Some(out)
}

fn permutations(v: &mut [u32], i: usize, emit: &mut impl FnMut(&[u32])) {
    if i == v.len() {
        emit(v);
        return;
    }
    for j in i..v.len() {
        v.swap(i, j);
        permutations(v, i + 1, emit);
        v.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::cohomology::Cohomology;

    #[test]
    fn rotation_lifts_to_an_automorphism() {
        let t = SimplicialComplex::from_top_simplices(&[[0, 1, 2]]).unwrap();
        let sd = barycentric_subdivide(&t).complex;
        let perm = lift_automorphism(&t, &[1, 2, 0]).unwrap();
        assert!(SimplicialMap::new(&sd, &sd, perm.clone()).is_ok());
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..sd.num_vertices() as u32).collect::<Vec<_>>());
        assert!(lift_automorphism(&t, &[0, 0, 1]).is_none());
    }

    #[test]
    fn edge_and_triangle_boundary() {
        let e = SimplicialComplex::from_top_simplices(&[[0, 1]]).unwrap();
        let sd = barycentric_subdivide(&e);
        assert_eq!(sd.complex.cells().counts(), &[3, 2]);
        let tri = SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(barycentric_subdivide(&tri).complex.cells().counts(), &[6, 6]);
    }

    #[test]
    fn twice_subdivided_triangle_counts() {
        let disk = SimplicialComplex::from_top_simplices(&[[0, 1, 2]]).unwrap();
        assert_eq!(subdivide_times(&disk, 2).cells().counts(), &[25, 60, 36]);
    }

    #[test]
    fn last_vertex_map_is_a_cohomology_isomorphism() {
        let circle = SimplicialComplex::from_top_simplices(&[[0, 1], [1, 2], [0, 2]]).unwrap();
        let sd = barycentric_subdivide(&circle);
        assert!(sd.to_original.is_order_preserving(&sd.complex));
        let h = Cohomology::new(circle.cells());
        let hs = Cohomology::new(sd.complex.cells());
        assert_eq!(h.betti(), hs.betti());
        let g = &h.group(1).unwrap().generators[0];
        let pulled = sd.to_original.pullback(&sd.complex, &circle, g);
        assert_eq!(hs.coordinates(&pulled).unwrap()[0].abs(), crate::integer::Int::ONE);
    }
}

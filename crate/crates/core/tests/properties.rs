use proptest::prelude::*;
use superpose::config_models::{ConfigModel, ModelOptions};
use superpose::fixtures;
use superpose::formal_sums::{scan, LabelledConfig};
use superpose::par;
use superpose::simplicial::{column_reduce, smith_normal_form, solve_integer, Cohomology, Matrix, SimplicialComplex};
use superpose::Int;

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r).prop_map(|rows| Matrix::from_rows(&rows))
    })
}

fn relabelled(k: &SimplicialComplex, perm: &[u32]) -> SimplicialComplex {
    let tops: Vec<Vec<u32>> = k
        .maximal_simplices()
        .iter()
        .map(|s| s.iter().map(|&v| perm[v as usize]).collect())
        .collect();
    SimplicialComplex::from_top_simplices(&tops).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(a in matrix(5)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.p.mul(&a).mul(&s.q), s.diagonal_matrix(a.rows(), a.cols()));
        prop_assert!(s.p.determinant().is_unit());
        prop_assert!(s.q.determinant().is_unit());
        for w in s.diagonal.windows(2) {
            prop_assert!(w[1].divisible_by(&w[0]));
        }
        if a.rows() == a.cols() {
            let product = s.diagonal.iter().fold(Int::ONE, |acc, d| &acc * d);
            let det = a.determinant().abs();
            if s.rank() == a.rows() {
                prop_assert_eq!(product, det);
            } else {
                prop_assert!(det.is_zero());
            }
        }
    }

    #[test]
    fn column_reduction_splits_off_the_kernel(b in matrix(6)) {
        let (rank, q, q_inv) = column_reduce(&b);
        prop_assert_eq!(rank, smith_normal_form(&b).rank());
        prop_assert_eq!(q.mul(&q_inv), Matrix::identity(b.cols()));
        prop_assert!(b.mul(&q).col_block(rank, b.cols()).is_zero());
    }

    #[test]
    fn consistent_systems_are_solved(a in matrix(5), seed in prop::collection::vec(-4i64..=4, 5)) {
        let x: Vec<Int> = seed.iter().take(a.cols()).map(|&v| Int::from(v)).collect();
        let b = a.mul_vec(&x);
        let y = solve_integer(&a, &b).expect("a solution exists");
        prop_assert_eq!(a.mul_vec(&y), b);
    }

    #[test]
    fn cohomology_ignores_vertex_labels(perm in Just((0..7u32).collect::<Vec<_>>()).prop_shuffle()) {
        let torus = fixtures::complex("torus").unwrap();
        let h = Cohomology::new(relabelled(&torus, &perm).cells());
        prop_assert_eq!(h.betti(), vec![1, 2, 1]);
    }

    #[test]
    fn scanning_has_one_term_per_nonempty_subset(n in 0usize..7) {
        let xi = LabelledConfig::new(0..n as u32);
        let expected = (1u64 << n) - 1;
        prop_assert_eq!(scan(&xi).total(), expected);
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let k = superpose::simplicial::subdivide_times(&fixtures::complex("disk").unwrap(), 2);
    let run = |seq: bool| {
        par::set_sequential(seq);
        let m = ConfigModel::unordered(&k, 2, ModelOptions::default()).unwrap();
        let h = Cohomology::new(m.complex());
        let gens: Vec<_> = h.groups().iter().map(|g| g.generators.clone()).collect();
        (m.complex().counts().to_vec(), h.betti(), gens)
    };
    let seq = run(true);
    let par_ = run(false);
    assert!(seq == par_);
}

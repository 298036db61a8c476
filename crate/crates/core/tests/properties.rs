use numrad::bounds::{block_bounds, pair_bounds, self_bounds, two_by_two_bounds};
use numrad::matcore::{BlockMatrix, ComplexMatrix, C64};
use numrad::spectra::{hermitian_eig, numerical_radius, operator_norm, psd_power, spectral_radius};
use numrad::verify::{sample, GenSpec, SampleKind};
use proptest::prelude::*;

const SLACK: f64 = 1e-8;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), rows * cols).prop_map(move |v| {
        ComplexMatrix::new(rows, cols, v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap()
    })
}

fn square() -> impl Strategy<Value = ComplexMatrix> {
    (1usize..=4).prop_flat_map(|n| matrix(n, n))
}

fn pair() -> impl Strategy<Value = (ComplexMatrix, ComplexMatrix)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(m, n)| (matrix(m, n), matrix(n, m)))
}

fn blocks() -> impl Strategy<Value = BlockMatrix> {
    prop::collection::vec(1usize..=2, 2..=3).prop_flat_map(|dims| {
        let side: usize = dims.iter().sum();
        matrix(side, side).prop_map(move |m| BlockMatrix::split(&m, &dims).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn radius_sandwich(a in square()) {
        let w = numerical_radius(&a).unwrap();
        let norm = operator_norm(&a).unwrap();
        prop_assert!(0.5 * norm <= w + SLACK);
        prop_assert!(w <= norm + SLACK);
        prop_assert!(spectral_radius(&a).unwrap() <= w + SLACK);
    }

    #[test]
    fn radius_is_unitarily_invariant(a in square(), seed in any::<u64>()) {
        let u = sample(&GenSpec::square(SampleKind::Unitary, a.rows(), seed)).unwrap().into_matrix().unwrap();
        let b = u.adjoint().matmul(&a).unwrap().matmul(&u).unwrap();
        let (wa, wb) = (numerical_radius(&a).unwrap(), numerical_radius(&b).unwrap());
        prop_assert!((wa - wb).abs() <= 1e-9 * wa.max(1.0));
    }

    #[test]
    fn radius_is_subadditive(a in matrix(3, 3), b in matrix(3, 3)) {
        let lhs = numerical_radius(&a.add(&b).unwrap()).unwrap();
        prop_assert!(lhs <= numerical_radius(&a).unwrap() + numerical_radius(&b).unwrap() + SLACK);
    }

    #[test]
    fn eig_reconstructs(a in square()) {
        let h = a.add(&a.adjoint()).unwrap();
        let eig = hermitian_eig(&h).unwrap();
        prop_assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let err = eig.reconstruct().sub(&h).unwrap().max_abs();
        prop_assert!(err <= 1e-10 * h.max_abs().max(1.0));
    }

    #[test]
    fn psd_square_root_squares_back(a in square()) {
        let p = a.adjoint().matmul(&a).unwrap();
        let r = psd_power(&p, 0.5).unwrap();
        let err = r.matmul(&r).unwrap().sub(&p).unwrap().max_abs();
        prop_assert!(err <= 1e-9 * p.max_abs().max(1.0));
    }

    #[test]
    fn pair_bounds_dominate_supremum((a, b) in pair()) {
        let r = pair_bounds(&a, &b).unwrap();
        prop_assert!(r.lemma21 <= r.reference + SLACK);
        // sup over unit x, y of |<Ax,y>| + |<By,x>|
        let zb = ComplexMatrix::zeros(b.rows(), b.rows());
        let za = ComplexMatrix::zeros(a.rows(), a.rows());
        let t = BlockMatrix::two_by_two(&zb, &b, &a, &za).unwrap().assemble();
        let sup = 2.0 * numerical_radius(&t).unwrap();
        prop_assert!(sup <= r.lemma21 + SLACK);
        prop_assert!(sup <= r.lemma22 + SLACK);
    }

    #[test]
    fn block_bounds_dominate_radius(t in blocks()) {
        let r = block_bounds(&t).unwrap();
        let w = numerical_radius(&t.assemble()).unwrap();
        prop_assert!(w <= r.omega_alpha + SLACK);
        prop_assert!(w <= r.omega_beta + SLACK);
        prop_assert!(r.omega_alpha <= r.omega_abu_omar + SLACK);
        prop_assert!(r.omega_abu_omar <= r.omega_hou + SLACK);
    }

    #[test]
    fn two_by_two_bounds_dominate_radius(a in matrix(2, 2), b in matrix(2, 1), c in matrix(1, 2), d in matrix(1, 1)) {
        let r = two_by_two_bounds(&a, &b, &c, &d).unwrap();
        let w = numerical_radius(&BlockMatrix::two_by_two(&a, &b, &c, &d).unwrap().assemble()).unwrap();
        prop_assert!(w <= r.cor1 + SLACK);
        prop_assert!(w <= r.cor2 + SLACK);
        prop_assert!(w <= r.shebrawi3 + SLACK);
        prop_assert!(r.hirzallah.is_none());
    }

    #[test]
    fn self_bound_chain(t in square()) {
        let r = self_bounds(&t).unwrap();
        let w = numerical_radius(&t).unwrap();
        prop_assert!(w <= r.c8 + SLACK);
        prop_assert!(r.c8 <= r.c7 + SLACK);
        prop_assert!(r.c7 <= r.norm + SLACK);
        prop_assert!(w <= r.kittaneh + SLACK);
    }

    #[test]
    fn split_assemble_round_trip(t in blocks()) {
        let flat = t.assemble();
        let again = BlockMatrix::split(&flat, t.dims()).unwrap();
        prop_assert_eq!(again, t);
    }

    #[test]
    fn samples_are_deterministic(n in 1usize..=5, seed in any::<u64>()) {
        let spec = GenSpec::square(SampleKind::ComplexGaussian, n, seed);
        prop_assert_eq!(sample(&spec).unwrap(), sample(&spec).unwrap());
    }

    #[test]
    fn matrix_json_round_trip(a in square()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

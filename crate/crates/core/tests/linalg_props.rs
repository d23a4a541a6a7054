mod common;

use apa_core::linalg::projectors;
use apa_core::{Matrix, OrderedField, Rational};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-5i64..=5, c), r))
}

fn to_matrix(rows: &[Vec<i64>]) -> Matrix<Rational> {
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect())
        .collect();
    Matrix::from_rows(&rows).unwrap()
}

proptest! {
    #[test]
    fn swapping_rows_negates_det(rows in (2usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-5i64..=5, n), n)), a in 0usize..5, b in 0usize..5) {
        let n = rows.len();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let m = to_matrix(&rows);
        let mut s = m.clone();
        s.swap_rows(a, b);
        prop_assert_eq!(s.det().unwrap(), -m.det().unwrap());
    }

    #[test]
    fn rank_of_transpose(rows in matrix(5)) {
        let m = to_matrix(&rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn det_of_product(rows in (1usize..=4).prop_flat_map(|n| (prop::collection::vec(prop::collection::vec(-4i64..=4, n), n), prop::collection::vec(prop::collection::vec(-4i64..=4, n), n)))) {
        let (a, b) = (to_matrix(&rows.0), to_matrix(&rows.1));
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn kernel_is_annihilated(rows in matrix(5)) {
        let m = to_matrix(&rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(OrderedField::is_zero));
        }
    }
}

#[test]
fn projector_identities_on_random_spans() {
    let mut r = rng(11);
    let mut checked = 0;
    while checked < 1000 {
        let n = r.gen_range(1..=6);
        let k = r.gen_range(1..=n);
        let rows: Vec<Vec<Rational>> = (0..k).map(|_| int_vec(&mut r, n, 4)).collect();
        let t = Matrix::from_rows(&rows).unwrap();
        if t.rank() < k {
            assert!(projectors(&t).is_err());
            continue;
        }
        let pq = projectors(&t).unwrap();
        let (p, q) = (&pq.p, &pq.q);
        assert_eq!(p.add(q).unwrap(), Matrix::identity(n));
        assert_eq!(&p.mul(p).unwrap(), p);
        assert_eq!(&q.mul(q).unwrap(), q);
        assert!(p.is_symmetric() && q.is_symmetric());
        for v in &rows {
            assert_eq!(&p.mul_vec(v).unwrap(), v);
            assert!(q.mul_vec(v).unwrap().iter().all(OrderedField::is_zero));
        }
        checked += 1;
    }
}

#[test]
fn solve_round_trip() {
    let mut r = rng(12);
    for _ in 0..200 {
        let n = r.gen_range(1..=6);
        let a = Matrix::from_rows(&random_invertible(&mut r, n)).unwrap();
        let x0 = int_vec(&mut r, n, 9);
        let b = a.mul_vec(&x0).unwrap();
        assert_eq!(a.solve(&b).unwrap(), x0);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(n));
    }
}

#[test]
fn u4_in_the_coordinate_basis() {
    let ns = apa_core::fixtures::normal_system("U1").unwrap();
    let cols = Matrix::from_cols(&ns.vectors()[..3]).unwrap();
    assert_eq!(cols.solve(&ns.vectors()[3]).unwrap(), vec![q(1, 3), q(2, 3), q(2, 3)]);
    for s in apa_core::combinat::combinations(6, 3) {
        let rows: Vec<Vec<Rational>> = s.iter().map(|&i| ns.vectors()[i].clone()).collect();
        assert_eq!(Matrix::from_rows(&rows).unwrap().rank(), 3);
    }
}

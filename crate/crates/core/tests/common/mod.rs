#![allow(dead_code)]

use apa_core::arrangement::HyperplaneArrangement;
use apa_core::{NormalSystem, OrderedField, Rational, SignedBijection};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn int_vec(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<Rational> {
    (0..len).map(|_| Rational::from_i64(rng.gen_range(-bound..=bound))).collect()
}

/// Random vectors until they form a valid normal system.
pub fn random_normal_system(rng: &mut impl Rng, m: usize, n: usize) -> NormalSystem<Rational> {
    loop {
        let vs: Vec<Vec<Rational>> = (0..n).map(|_| int_vec(rng, m, 6)).collect();
        if let Ok(ns) = NormalSystem::new(m, vs) {
            return ns;
        }
    }
}

/// Random invertible `m × m` integer matrix.
pub fn random_invertible(rng: &mut impl Rng, m: usize) -> Vec<Vec<Rational>> {
    loop {
        let rows: Vec<Vec<Rational>> = (0..m).map(|_| int_vec(rng, m, 3)).collect();
        let mat = apa_core::Matrix::from_rows(&rows).unwrap();
        if !mat.det().unwrap().is_zero() {
            return rows;
        }
    }
}

pub fn random_signed_bijection(rng: &mut impl Rng, n: usize) -> SignedBijection {
    let mut pi: Vec<usize> = (0..n).collect();
    pi.shuffle(rng);
    let mu = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    SignedBijection::new(pi, mu)
}

/// An isomorphic copy: linear image, random positive rescaling, relabeling.
pub fn isomorphic_copy(rng: &mut impl Rng, ns: &NormalSystem<Rational>) -> (NormalSystem<Rational>, SignedBijection) {
    let a = random_invertible(rng, ns.m());
    let image = ns.transform(&a).unwrap();
    let scaled: Vec<Vec<Rational>> = image
        .vectors()
        .iter()
        .map(|v| {
            let s = Rational::from_i64(rng.gen_range(1..=4));
            v.iter().map(|x| x.clone() * s.clone()).collect()
        })
        .collect();
    let scaled = NormalSystem::new(ns.m(), scaled).unwrap();
    let w = random_signed_bijection(rng, ns.len());
    (scaled.relabel(&w), w)
}

/// Random valid arrangement with small integer data.
pub fn random_arrangement(rng: &mut impl Rng, m: usize, n: usize) -> HyperplaneArrangement<Rational> {
    loop {
        let coeffs: Vec<Vec<Rational>> = (0..n).map(|_| int_vec(rng, m, 5)).collect();
        let constants = int_vec(rng, n, 8);
        if let Ok(ha) = HyperplaneArrangement::new(coeffs, constants) {
            return ha;
        }
    }
}

/// `x ↦ M x + t` applied to `ha`, with the sign of `det M`.
pub fn random_affine_image(rng: &mut impl Rng, ha: &HyperplaneArrangement<Rational>) -> (HyperplaneArrangement<Rational>, i8) {
    let m = random_invertible(rng, ha.m());
    let t = int_vec(rng, ha.m(), 5);
    let sign = apa_core::Matrix::from_rows(&m).unwrap().det_sign().unwrap().to_i8();
    (ha.affine_image(&m, &t).unwrap(), sign)
}

/// Vertices `P_i` of the simplex bounded by the hyperplanes of `s`.
pub fn random_simplex(rng: &mut impl Rng, m: usize) -> Vec<Vec<Rational>> {
    loop {
        let pts: Vec<Vec<Rational>> = (0..=m).map(|_| int_vec(rng, m, 6)).collect();
        if apa_core::arrangement::vertex_orientation(&pts).is_ok() {
            return pts;
        }
    }
}

/// Facet hyperplanes of the simplex with vertices `pts`, facet `i` opposite
/// `pts[i]`, with outward normals.
pub fn outward_facets(pts: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let m = pts.len() - 1;
    let mut coeffs = Vec::new();
    let mut constants = Vec::new();
    for i in 0..=m {
        let others: Vec<&Vec<Rational>> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
        let diffs: Vec<Vec<Rational>> = others[1..]
            .iter()
            .map(|p| p.iter().zip(others[0]).map(|(a, b)| a.clone() - b.clone()).collect())
            .collect();
        let mut a = if diffs.is_empty() {
            vec![Rational::one()]
        } else {
            apa_core::Matrix::from_rows(&diffs).unwrap().kernel_basis().remove(0)
        };
        let mut c = apa_core::linalg::dot(&a, others[0]);
        if apa_core::linalg::dot(&a, &pts[i]) > c {
            a = a.into_iter().map(|x| -x).collect();
            c = -c;
        }
        coeffs.push(a);
        constants.push(c);
    }
    (coeffs, constants)
}

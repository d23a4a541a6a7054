//! Normal systems, convex positive bijections, and isomorphism search.
//!
//! Two searches are provided. [`find_isomorphisms`] matches line-cycle
//! invariants with a pruned backtracking search. [`oracle_isomorphisms`]
//! enumerates every signed bijection and compares positive-combination sign
//! patterns directly.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::combinat::{combinations, permutations, sort_parity, SignedBijection};
use crate::cycles::{all_cycle_invariants, CycleInvariantSet, LineCycle};
use crate::error::{Error, Result};
use crate::field::{OrderedField, Sign};
use crate::linalg::det_of_rows;
use crate::sphere::{first_dependent_subset, positive_combination, AntipodalArrangement};

/// `n` lines through the origin of `F^m`, one representative each, with every
/// `min(m, n)` of them linearly independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSystem<T> {
    m: usize,
    vectors: Vec<Vec<T>>,
}

impl<T: OrderedField> NormalSystem<T> {
    pub fn new(m: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::Dimension("m must be at least 1".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != m) {
            return Err(Error::Dimension(format!("vector of length {} in F^{m}", v.len())));
        }
        if let Some(bad) = validate_vectors(m, &vectors) {
            let names: Vec<String> = bad.iter().map(|i| (i + 1).to_string()).collect();
            return Err(Error::Invalid(format!("vectors {{{}}} are dependent", names.join(","))));
        }
        Ok(NormalSystem { m, vectors })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    /// The same lines as an antipodal arrangement on the `(m−1)`-sphere.
    pub fn as_arrangement(&self) -> Result<AntipodalArrangement<T>> {
        AntipodalArrangement::new(self.m - 1, self.vectors.clone())
    }

    /// Image under `v ↦ M v` for a square matrix given by rows.
    pub fn transform(&self, rows: &[Vec<T>]) -> Result<Self> {
        let m = crate::linalg::Matrix::from_rows(rows)?;
        let vectors = self.vectors.iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        NormalSystem::new(self.m, vectors)
    }

    /// Reorders and re-signs the vectors so that `w` maps `self` onto the
    /// result: output vector `π(i)` is `μ_i · v_i`.
    pub fn relabel(&self, w: &SignedBijection) -> Self {
        let mut vectors = self.vectors.clone();
        for (i, v) in self.vectors.iter().enumerate() {
            let (j, s) = w.apply(i, 1);
            vectors[j] = v.iter().map(|x| if s > 0 { x.clone() } else { -x.clone() }).collect();
        }
        NormalSystem { m: self.m, vectors }
    }
}

/// First dependent `min(m, n)`-subset, if any.
pub fn validate_vectors<T: OrderedField>(m: usize, vectors: &[Vec<T>]) -> Option<Vec<usize>> {
    if vectors.iter().any(|v| v.iter().all(T::is_zero)) {
        return vectors.iter().position(|v| v.iter().all(T::is_zero)).map(|i| vec![i]);
    }
    first_dependent_subset(vectors, m)
}

/// A candidate isomorphism: the signed bijection and whether it reverses
/// orientation (the total-flip branch).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub map: SignedBijection,
    pub flipped: bool,
}

impl IsoWitness {
    fn sort_key(&self) -> (bool, &[usize], Vec<bool>) {
        (self.flipped, &self.map.pi, self.map.mu.iter().map(|&s| s < 0).collect())
    }
}

impl Ord for IsoWitness {
    /// `(flipped, π, μ)` lexicographically, with `+` before `−` in `μ`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for IsoWitness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.map, if self.flipped { " flipped" } else { "" })
    }
}

fn check_sizes<T: OrderedField>(ns1: &NormalSystem<T>, ns2: &NormalSystem<T>) -> Result<()> {
    if ns1.m != ns2.m || ns1.len() != ns2.len() {
        return Err(Error::Dimension(format!(
            "systems differ in size: (m={}, n={}) vs (m={}, n={})",
            ns1.m,
            ns1.len(),
            ns2.m,
            ns2.len()
        )));
    }
    Ok(())
}

/// Orientation ratio of `w`: the sign of `det(δ(v_J))·det(v_J)` on the first
/// `m` indices `J`. `+1` when there are fewer than `m` vectors.
pub fn orientation_ratio<T: OrderedField>(w: &SignedBijection, ns1: &NormalSystem<T>, ns2: &NormalSystem<T>) -> i8 {
    let m = ns1.m;
    if ns1.len() < m {
        return 1;
    }
    let images: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let (j, s) = w.apply(i, 1);
            ns2.vectors[j]
                .iter()
                .map(|x| if s > 0 { x.clone() } else { -x.clone() })
                .collect()
        })
        .collect();
    let a: Vec<&[T]> = ns1.vectors[..m].iter().map(Vec::as_slice).collect();
    let b: Vec<&[T]> = images.iter().map(Vec::as_slice).collect();
    (det_of_rows(&a).sign() * det_of_rows(&b).sign()).to_i8()
}

/// Signs of positive-combination coefficients for every `(m+1)`-subset:
/// entry `[u][b]` is the sign of the coefficient of `v_b` when `v_u` is
/// written over the other members of the subset.
struct CoefficientSigns {
    size: usize,
    table: HashMap<u64, Vec<i8>>,
}

impl CoefficientSigns {
    fn new<T: OrderedField>(ns: &NormalSystem<T>) -> Result<Self> {
        let size = ns.m + 1;
        let mut table = HashMap::new();
        for s in combinations(ns.len(), size) {
            let mut signs = vec![0i8; size * size];
            for (ui, &u) in s.iter().enumerate() {
                let basis: Vec<&[T]> = s.iter().filter(|&&b| b != u).map(|&b| ns.vectors[b].as_slice()).collect();
                let c = positive_combination(&ns.vectors[u], &basis)?;
                let mut coef = c.coefficients.iter();
                for bi in 0..size {
                    if bi != ui {
                        signs[ui * size + bi] = coef.next().unwrap().sign().to_i8();
                    }
                }
            }
            table.insert(mask(&s), signs);
        }
        Ok(CoefficientSigns { size, table })
    }

    fn get(&self, subset: &[usize], u: usize, b: usize) -> i8 {
        let signs = &self.table[&mask(subset)];
        let pos = |x: usize| subset.iter().filter(|&&y| y < x).count();
        signs[pos(u) * self.size + pos(b)]
    }
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0u64, |acc, &i| acc | (1 << i))
}

fn preserves_signs(w: &SignedBijection, c1: &CoefficientSigns, c2: &CoefficientSigns, subsets: &[Vec<usize>]) -> bool {
    subsets.iter().all(|s| {
        let mut image: Vec<usize> = s.iter().map(|&i| w.pi[i]).collect();
        image.sort_unstable();
        s.iter().all(|&u| {
            s.iter().filter(|&&b| b != u).all(|&b| {
                let lhs = c1.get(s, u, b);
                let rhs = w.mu[u] * w.mu[b] * c2.get(&image, w.pi[u], w.pi[b]);
                lhs == rhs
            })
        })
    })
}

/// Whether `w` maps positive combinations of `ns1` exactly onto positive
/// combinations of `ns2`, over every base and every signed choice.
pub fn is_convex_positive_bijection<T: OrderedField>(
    w: &SignedBijection,
    ns1: &NormalSystem<T>,
    ns2: &NormalSystem<T>,
) -> Result<bool> {
    check_sizes(ns1, ns2)?;
    if w.len() != ns1.len() {
        return Err(Error::Dimension("witness size".into()));
    }
    let c1 = CoefficientSigns::new(ns1)?;
    let c2 = CoefficientSigns::new(ns2)?;
    let subsets = combinations(ns1.len(), ns1.m + 1);
    Ok(preserves_signs(w, &c1, &c2, &subsets))
}

/// Largest `n` accepted by [`oracle_isomorphisms`].
pub const ORACLE_MAX_N: usize = 7;

/// Every signed bijection preserving all coefficient sign patterns, found by
/// exhaustive search.
pub fn oracle_isomorphisms<T: OrderedField>(ns1: &NormalSystem<T>, ns2: &NormalSystem<T>) -> Result<Vec<IsoWitness>> {
    check_sizes(ns1, ns2)?;
    let n = ns1.len();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge(format!(
            "exhaustive search needs n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    let c1 = CoefficientSigns::new(ns1)?;
    let c2 = CoefficientSigns::new(ns2)?;
    let subsets = combinations(n, ns1.m + 1);
    let mut out: Vec<IsoWitness> = SignedBijection::all(n)
        .into_par_iter()
        .filter(|w| preserves_signs(w, &c1, &c2, &subsets))
        .map(|w| {
            let flipped = orientation_ratio(&w, ns1, ns2) < 0;
            IsoWitness { map: w, flipped }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `+` line cycles keyed by `(A, j)`.
struct CycleTable {
    plus: HashMap<(Vec<usize>, usize), Vec<usize>>,
}

impl CycleTable {
    fn new(set: &CycleInvariantSet) -> Self {
        let plus = set
            .iter()
            .filter(|(k, _)| k.sign > 0)
            .map(|(k, c)| ((k.along.clone(), k.point), c.labels().to_vec()))
            .collect();
        CycleTable { plus }
    }
}

/// Keys `(A, j)` of the cycle family with `A` and `j` drawn from `0..n`.
fn cycle_keys(n: usize, k: usize) -> Vec<(Vec<usize>, usize)> {
    let mut keys = Vec::new();
    for a in combinations(n, k - 2) {
        for j in (0..n).filter(|j| !a.contains(j)) {
            keys.push((a.clone(), j));
        }
    }
    keys
}

/// Partial assignment during the cycle search. `pi[i] == usize::MAX` marks an
/// unassigned label.
struct Partial<'a> {
    pi: Vec<usize>,
    mu: Vec<i8>,
    inv: Vec<usize>,
    eps: i8,
    t1: &'a CycleTable,
    t2: &'a CycleTable,
}

impl Partial<'_> {
    fn known(&self, l: usize) -> bool {
        self.pi[l] != usize::MAX
    }

    /// The cycle condition for key `(A, j)` on the assigned labels. Cycles
    /// that restrict to fewer than three labels carry no information.
    fn key_holds(&self, along: &[usize], j: usize) -> bool {
        let c1: Vec<usize> = self.t1.plus[&(along.to_vec(), j)]
            .iter()
            .filter(|&&l| self.known(l))
            .map(|&l| self.pi[l])
            .collect();
        if c1.len() < 3 {
            return true;
        }
        let mut image: Vec<usize> = along.iter().map(|&a| self.pi[a]).collect();
        let parity = sort_parity(&image);
        image.sort_unstable();
        let c2: Vec<usize> = self.t2.plus[&(image, self.pi[j])]
            .iter()
            .copied()
            .filter(|&l| self.inv[l] != usize::MAX)
            .collect();
        let sign_a: i8 = along.iter().map(|&a| self.mu[a]).product();
        let flip = self.eps * sign_a * parity;
        let lhs = LineCycle::new(c1).signed(flip);
        let rhs = LineCycle::new(c2).signed(self.mu[j]);
        lhs == rhs
    }
}

/// Whether `w` with orientation flag `flipped` satisfies the cycle condition
/// on every key. For `A = ∅` this reads: the `μ_j`-cycle at `π(j)` equals the
/// `π`-conjugate of the `+` cycle at `j`, inverted when flipped. For larger
/// `A` the inversion is additionally toggled by the orientation change of
/// the projection frame, `Π_{a∈A} μ_a · sgn(π|_A)`.
pub fn cycle_condition_holds(
    ci1: &CycleInvariantSet,
    ci2: &CycleInvariantSet,
    w: &SignedBijection,
    flipped: bool,
    k: usize,
) -> bool {
    let (t1, t2) = (CycleTable::new(ci1), CycleTable::new(ci2));
    let p = Partial {
        pi: w.pi.clone(),
        mu: w.mu.clone(),
        inv: crate::combinat::invert(&w.pi),
        eps: if flipped { -1 } else { 1 },
        t1: &t1,
        t2: &t2,
    };
    cycle_keys(w.len(), k).iter().all(|(a, j)| p.key_holds(a, *j))
}

fn search(p: &mut Partial<'_>, depth: usize, keys_by_depth: &[Vec<(Vec<usize>, usize)>], out: &mut Vec<IsoWitness>) {
    let n = p.pi.len();
    if depth == n {
        out.push(IsoWitness {
            map: SignedBijection::new(p.pi.clone(), p.mu.clone()),
            flipped: p.eps < 0,
        });
        return;
    }
    for target in 0..n {
        if p.inv[target] != usize::MAX {
            continue;
        }
        for s in [1i8, -1] {
            p.pi[depth] = target;
            p.mu[depth] = s;
            p.inv[target] = depth;
            if keys_by_depth[depth].iter().all(|(a, j)| p.key_holds(a, *j)) {
                search(p, depth + 1, keys_by_depth, out);
            }
            p.inv[target] = usize::MAX;
        }
    }
    p.pi[depth] = usize::MAX;
}

/// All witnesses `(π, μ, flipped)` relating the line-cycle invariants of two
/// normal systems. Handles `m ≤ 2`, where no cycles exist, directly.
pub fn find_isomorphisms<T: OrderedField>(ns1: &NormalSystem<T>, ns2: &NormalSystem<T>) -> Result<Vec<IsoWitness>> {
    check_sizes(ns1, ns2)?;
    let (n, m) = (ns1.len(), ns1.m);
    let mut out = if n <= m {
        // no base has a vector outside it
        SignedBijection::all(n)
            .into_iter()
            .map(|w| {
                let flipped = orientation_ratio(&w, ns1, ns2) < 0;
                IsoWitness { map: w, flipped }
            })
            .collect()
    } else if m == 1 {
        line_isomorphisms(ns1, ns2)
    } else if m == 2 {
        circle_isomorphisms(ns1, ns2)?
    } else {
        let ci1 = all_cycle_invariants(&ns1.as_arrangement()?)?;
        let ci2 = all_cycle_invariants(&ns2.as_arrangement()?)?;
        cycle_search(&ci1, &ci2, n, m - 1)
    };
    out.sort();
    Ok(out)
}

/// Witnesses between two cycle-invariant families on labels `0..n` of
/// arrangements on the `k`-sphere.
pub fn cycle_search(ci1: &CycleInvariantSet, ci2: &CycleInvariantSet, n: usize, k: usize) -> Vec<IsoWitness> {
    let (t1, t2) = (CycleTable::new(ci1), CycleTable::new(ci2));
    // keys become checkable once every label in A ∪ {j} is assigned; checks
    // are repeated at each later depth because the restricted cycles grow
    let all_keys = cycle_keys(n, k);
    let keys_by_depth: Vec<Vec<(Vec<usize>, usize)>> = (0..n)
        .map(|d| {
            all_keys
                .iter()
                .filter(|(a, j)| *j <= d && a.iter().all(|&x| x <= d) && d + 1 >= a.len() + 4)
                .cloned()
                .collect()
        })
        .collect();
    let seeds: Vec<(i8, usize, i8)> = [1i8, -1]
        .iter()
        .flat_map(|&e| (0..n).flat_map(move |t| [1i8, -1].map(|s| (e, t, s))))
        .collect();
    let mut out: Vec<IsoWitness> = seeds
        .into_par_iter()
        .flat_map_iter(|(eps, t, s)| {
            let mut p = Partial {
                pi: vec![usize::MAX; n],
                mu: vec![0; n],
                inv: vec![usize::MAX; n],
                eps,
                t1: &t1,
                t2: &t2,
            };
            p.pi[0] = t;
            p.mu[0] = s;
            p.inv[t] = 0;
            let mut found = Vec::new();
            if keys_by_depth[0].iter().all(|(a, j)| p.key_holds(a, *j)) {
                search(&mut p, 1, &keys_by_depth, &mut found);
            }
            found
        })
        .collect();
    out.sort();
    out
}

/// `m = 1`: every vector is `±e`, and `δ` must send equal directions to
/// equal directions.
fn line_isomorphisms<T: OrderedField>(ns1: &NormalSystem<T>, ns2: &NormalSystem<T>) -> Vec<IsoWitness> {
    let n = ns1.len();
    let s1: Vec<i8> = ns1.vectors.iter().map(|v| v[0].sign().to_i8()).collect();
    let s2: Vec<i8> = ns2.vectors.iter().map(|v| v[0].sign().to_i8()).collect();
    let mut out = Vec::new();
    for pi in permutations(n) {
        for eps in [1i8, -1] {
            let mu = (0..n).map(|i| eps * s1[i] * s2[pi[i]]).collect();
            out.push(IsoWitness {
                map: SignedBijection::new(pi.clone(), mu),
                flipped: eps < 0,
            });
        }
    }
    out
}

/// Position of `v` in counterclockwise angular order starting from the
/// positive x-axis: compares half-plane first, then the 2×2 determinant.
fn angular_cmp<T: OrderedField>(a: &[T], b: &[T]) -> Ordering {
    let half = |v: &[T]| match v[1].sign() {
        Sign::Positive => 0,
        Sign::Zero if v[0].sign() == Sign::Positive => 0,
        _ => 1,
    };
    half(a).cmp(&half(b)).then_with(|| {
        let d = a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone();
        match d.sign() {
            Sign::Positive => Ordering::Less,
            Sign::Negative => Ordering::Greater,
            Sign::Zero => Ordering::Equal,
        }
    })
}

/// `m = 2`: the `2n` signed vectors sit on a circle with antipodes `n`
/// steps apart. Isomorphisms are exactly the rotations and reflections
/// aligning the two circular sequences.
fn circle_isomorphisms<T: OrderedField>(ns1: &NormalSystem<T>, ns2: &NormalSystem<T>) -> Result<Vec<IsoWitness>> {
    let n = ns1.len();
    let circle = |ns: &NormalSystem<T>| {
        let mut signed: Vec<(usize, i8, Vec<T>)> = Vec::with_capacity(2 * n);
        for (i, v) in ns.vectors.iter().enumerate() {
            signed.push((i, 1, v.clone()));
            signed.push((i, -1, v.iter().map(|x| -x.clone()).collect()));
        }
        signed.sort_by(|a, b| angular_cmp(&a.2, &b.2));
        signed.into_iter().map(|(i, s, _)| (i, s)).collect::<Vec<_>>()
    };
    let (c1, c2) = (circle(ns1), circle(ns2));
    let mut out = Vec::new();
    for shift in 0..2 * n {
        for reflect in [false, true] {
            let mut pi = vec![usize::MAX; n];
            let mut mu = vec![0i8; n];
            for (pos, &(i, s)) in c1.iter().enumerate() {
                let target = if reflect {
                    (2 * n + shift - pos) % (2 * n)
                } else {
                    (shift + pos) % (2 * n)
                };
                let (j, t) = c2[target];
                if s > 0 {
                    pi[i] = j;
                    mu[i] = t;
                }
            }
            out.push(IsoWitness {
                map: SignedBijection::new(pi, mu),
                flipped: reflect,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn sys(m: usize, vs: &[&[(i64, i64)]]) -> NormalSystem<Rational> {
        NormalSystem::new(m, vs.iter().map(|v| v.iter().map(|&(a, b)| q(a, b)).collect()).collect()).unwrap()
    }

    fn u(last: [(i64, i64); 3]) -> NormalSystem<Rational> {
        sys(
            3,
            &[
                &[(1, 1), (0, 1), (0, 1)],
                &[(0, 1), (1, 1), (0, 1)],
                &[(0, 1), (0, 1), (1, 1)],
                &[(1, 3), (2, 3), (2, 3)],
                &[(1, 9), (4, 9), (8, 9)],
                &last,
            ],
        )
    }

    fn u1() -> NormalSystem<Rational> {
        u([(6, 11), (6, 11), (7, 11)])
    }

    fn u2() -> NormalSystem<Rational> {
        u([(2, 11), (6, 11), (9, 11)])
    }

    #[test]
    fn validation() {
        assert!(NormalSystem::new(
            3,
            vec![
                vec![q(1, 1), q(0, 1), q(0, 1)],
                vec![q(0, 1), q(1, 1), q(0, 1)],
                vec![q(1, 1), q(1, 1), q(0, 1)],
            ]
        )
        .is_err());
        assert!(NormalSystem::new(2, vec![vec![q(0, 1), q(0, 1)]]).is_err());
        assert_eq!(u1().len(), 6);
    }

    #[test]
    fn convex_positive_examples() {
        let a = u1();
        let id = SignedBijection::identity(6);
        assert!(is_convex_positive_bijection(&id, &a, &a).unwrap());
        assert!(is_convex_positive_bijection(&id.negated(), &a, &a).unwrap());
        assert!(!is_convex_positive_bijection(&id, &a, &u2()).unwrap());
    }

    #[test]
    fn u1_u2_not_isomorphic() {
        assert!(find_isomorphisms(&u1(), &u2()).unwrap().is_empty());
    }

    #[test]
    fn self_isomorphisms_agree() {
        let a = u1();
        let fast = find_isomorphisms(&a, &a).unwrap();
        let slow = oracle_isomorphisms(&a, &a).unwrap();
        assert_eq!(fast, slow);
        let id = IsoWitness {
            map: SignedBijection::identity(6),
            flipped: false,
        };
        assert_eq!(fast[0], id);
        // m = 3 is odd, so the total flip reverses orientation
        assert!(fast.contains(&IsoWitness {
            map: SignedBijection::identity(6).negated(),
            flipped: true,
        }));
    }

    #[test]
    fn relabeled_copy_is_found() {
        let a = u1();
        let w = SignedBijection::new(vec![3, 0, 5, 1, 4, 2], vec![1, -1, -1, 1, 1, -1]);
        let b = a.relabel(&w);
        assert!(is_convex_positive_bijection(&w, &a, &b).unwrap());
        let found = find_isomorphisms(&a, &b).unwrap();
        assert!(found.iter().any(|x| x.map == w));
    }

    #[test]
    fn planar_systems_always_isomorphic() {
        let a = sys(2, &[&[(1, 1), (0, 1)], &[(0, 1), (1, 1)], &[(1, 1), (1, 1)]]);
        let b = sys(2, &[&[(1, 1), (2, 1)], &[(-3, 1), (1, 1)], &[(1, 1), (-5, 1)]]);
        let fast = find_isomorphisms(&a, &b).unwrap();
        assert_eq!(fast.len(), 12);
        assert_eq!(fast, oracle_isomorphisms(&a, &b).unwrap());
    }

    #[test]
    fn line_systems() {
        let a = sys(1, &[&[(1, 1)], &[(-2, 1)], &[(3, 1)]]);
        let b = sys(1, &[&[(-1, 1)], &[(-1, 1)], &[(5, 1)]]);
        assert_eq!(find_isomorphisms(&a, &b).unwrap(), oracle_isomorphisms(&a, &b).unwrap());
    }

    #[test]
    fn oracle_guard() {
        let vs: Vec<Vec<Rational>> = (1..=8).map(|i| vec![q(1, 1), q(i, 1)]).collect();
        let a = NormalSystem::new(2, vs).unwrap();
        assert!(matches!(oracle_isomorphisms(&a, &a), Err(Error::TooLarge(_))));
    }

    #[test]
    fn witness_order() {
        let w = |pi: Vec<usize>, mu: Vec<i8>, f: bool| IsoWitness {
            map: SignedBijection::new(pi, mu),
            flipped: f,
        };
        let mut v = [
            w(vec![1, 0], vec![1, 1], false),
            w(vec![0, 1], vec![-1, 1], false),
            w(vec![0, 1], vec![1, 1], true),
            w(vec![0, 1], vec![1, -1], false),
        ];
        v.sort();
        assert_eq!(v[0].map.mu, vec![1, -1]);
        assert_eq!(v[1].map.mu, vec![-1, 1]);
        assert_eq!(v[2].map.pi, vec![1, 0]);
        assert!(v[3].flipped);
    }
}

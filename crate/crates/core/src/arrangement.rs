//! Affine hyperplane arrangements `a_i · x = c_i` in general position.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::combinat::{binomial, combinations, SignedBijection};
use crate::error::{Error, Result};
use crate::field::{OrderedField, Sign};
use crate::fm::{feasible, find_point, Ineq};
use crate::linalg::{det_of_rows, dot, Matrix};
use crate::normal::{find_isomorphisms, IsoWitness, NormalSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneArrangement<T> {
    m: usize,
    coeffs: Vec<Vec<T>>,
    constants: Vec<T>,
}

impl<T: OrderedField> HyperplaneArrangement<T> {
    /// Builds and validates an arrangement; `m` is the row length.
    pub fn new(coeffs: Vec<Vec<T>>, constants: Vec<T>) -> Result<Self> {
        let ha = Self::unchecked(coeffs, constants)?;
        if let Some(why) = ha.violation() {
            return Err(Error::Invalid(why));
        }
        Ok(ha)
    }

    /// Shape checks only; general position is not verified.
    pub fn unchecked(coeffs: Vec<Vec<T>>, constants: Vec<T>) -> Result<Self> {
        let m = coeffs.first().map_or(0, Vec::len);
        if m == 0 {
            return Err(Error::Dimension(
                "arrangement needs at least one hyperplane in F^m, m >= 1".into(),
            ));
        }
        if coeffs.iter().any(|r| r.len() != m) {
            return Err(Error::Dimension("ragged coefficient rows".into()));
        }
        if constants.len() != coeffs.len() {
            return Err(Error::Dimension(format!(
                "{} constants for {} hyperplanes",
                constants.len(),
                coeffs.len()
            )));
        }
        Ok(HyperplaneArrangement { m, coeffs, constants })
    }

    pub fn from_normal_system(ns: &NormalSystem<T>, constants: Vec<T>) -> Result<Self> {
        Self::new(ns.vectors().to_vec(), constants)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Vec<T>] {
        &self.coeffs
    }

    pub fn constants(&self) -> &[T] {
        &self.constants
    }

    pub fn with_constants(&self, constants: Vec<T>) -> Result<Self> {
        Self::new(self.coeffs.clone(), constants)
    }

    /// The first violation of general position, described.
    ///
    /// Any `r ≤ m` hyperplanes meet in dimension `m − r` iff every `m` normals
    /// are independent; any `m + 1` have empty intersection iff the bordered
    /// determinant `det[a_S | c_S]` is nonzero.
    pub fn violation(&self) -> Option<String> {
        let names = |s: &[usize]| s.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        if let Some(s) = crate::normal::validate_vectors(self.m, &self.coeffs) {
            return Some(format!("hyperplanes {{{}}} do not meet in the expected dimension", names(&s)));
        }
        combinations(self.len(), self.m + 1)
            .into_iter()
            .find(|s| self.bordered_det(s).is_zero())
            .map(|s| format!("hyperplanes {{{}}} have a common point", names(&s)))
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    pub fn normal_system(&self) -> Result<NormalSystem<T>> {
        NormalSystem::new(self.m, self.coeffs.clone())
    }

    /// `det[a_S | c_S]` with rows in the order of `s`.
    pub fn bordered_det(&self, s: &[usize]) -> T {
        bordered_det(&self.coeffs, &self.constants, s)
    }

    /// `a_i · x − c_i`.
    pub fn eval(&self, i: usize, x: &[T]) -> T {
        dot(&self.coeffs[i], x) - self.constants[i].clone()
    }

    /// Side of hyperplane `i` that `x` lies on.
    pub fn side(&self, i: usize, x: &[T]) -> Sign {
        self.eval(i, x).sign()
    }

    /// The common point of `m` hyperplanes.
    pub fn vertex(&self, s: &[usize]) -> Result<Vec<T>> {
        let rows: Vec<Vec<T>> = s.iter().map(|&i| self.coeffs[i].clone()).collect();
        let rhs: Vec<T> = s.iter().map(|&i| self.constants[i].clone()).collect();
        Matrix::from_rows(&rows)?.solve(&rhs)
    }

    /// All vertices of the sub-arrangement `subset`, keyed by the sorted
    /// `m`-subsets that meet there.
    pub fn vertices_of(&self, subset: &[usize]) -> Result<Vec<(Vec<usize>, Vec<T>)>> {
        combinations(subset.len(), self.m)
            .into_iter()
            .map(|c| {
                let s: Vec<usize> = c.iter().map(|&i| subset[i]).collect();
                let v = self.vertex(&s)?;
                Ok((s, v))
            })
            .collect()
    }

    /// Image under `x ↦ M x + t` with `M` invertible.
    pub fn affine_image(&self, m_rows: &[Vec<T>], t: &[T]) -> Result<Self> {
        let mat = Matrix::from_rows(m_rows)?;
        let inv = mat.inverse()?;
        // a·x = c with x = M⁻¹(y − t) becomes (a M⁻¹)·y = c + (a M⁻¹)·t
        let mut coeffs = Vec::with_capacity(self.len());
        let mut constants = Vec::with_capacity(self.len());
        for (a, c) in self.coeffs.iter().zip(&self.constants) {
            let row = inv.transpose().mul_vec(a)?;
            constants.push(c.clone() + dot(&row, t));
            coeffs.push(row);
        }
        Self::new(coeffs, constants)
    }

    /// Applies `w`: hyperplane `i` becomes hyperplane `π(i)`, multiplied by
    /// `μ_i`.
    pub fn relabel(&self, w: &SignedBijection) -> Self {
        let mut coeffs = self.coeffs.clone();
        let mut constants = self.constants.clone();
        for i in 0..self.len() {
            let (j, s) = w.apply(i, 1);
            let f = |x: &T| if s > 0 { x.clone() } else { -x.clone() };
            coeffs[j] = self.coeffs[i].iter().map(f).collect();
            constants[j] = f(&self.constants[i]);
        }
        HyperplaneArrangement {
            m: self.m,
            coeffs,
            constants,
        }
    }
}

fn bordered_det<T: OrderedField>(coeffs: &[Vec<T>], constants: &[T], s: &[usize]) -> T {
    let rows: Vec<Vec<T>> = s
        .iter()
        .map(|&i| {
            let mut r = coeffs[i].clone();
            r.push(constants[i].clone());
            r
        })
        .collect();
    let refs: Vec<&[T]> = rows.iter().map(Vec::as_slice).collect();
    det_of_rows(&refs)
}

fn check_valid<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Result<()> {
    match ha.violation() {
        Some(why) => Err(Error::Invalid(why)),
        None => Ok(()),
    }
}

/// An open region: the sign of `a_i · x − c_i` for every hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Region {
    pub signs: Vec<i8>,
    pub bounded: bool,
}

fn region_system<T: OrderedField>(ha: &HyperplaneArrangement<T>, signs: &[i8]) -> Vec<Ineq<T>> {
    signs
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let f = |x: &T| if s > 0 { x.clone() } else { -x.clone() };
            Ineq::new(ha.coeffs[i].iter().map(f).collect(), f(&-ha.constants[i].clone()), true)
        })
        .collect()
}

/// A point inside the region with the given signs, if it is nonempty.
pub fn region_point<T: OrderedField>(ha: &HyperplaneArrangement<T>, signs: &[i8]) -> Option<Vec<T>> {
    find_point(ha.m, &region_system(ha, signs))
}

/// Bounded iff the recession cone `{d : s_i a_i · d ≥ 0}` is `{0}`.
fn region_bounded<T: OrderedField>(ha: &HyperplaneArrangement<T>, signs: &[i8]) -> bool {
    let m = ha.m;
    let cone: Vec<Ineq<T>> = signs
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            Ineq::nonnegative(
                ha.coeffs[i]
                    .iter()
                    .map(|x| if s > 0 { x.clone() } else { -x.clone() })
                    .collect(),
            )
        })
        .collect();
    for j in 0..m {
        for dir in [1i64, -1] {
            let mut sys = cone.clone();
            let mut e = vec![T::zero(); m];
            e[j] = T::from_i64(dir);
            sys.push(Ineq::positive(e));
            if feasible(m, &sys) {
                return false;
            }
        }
    }
    true
}

/// Every nonempty region, in lexicographic sign order with `+` first.
pub fn enumerate_regions<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Result<Vec<Region>> {
    check_valid(ha)?;
    let n = ha.len();
    let mut leaves: Vec<Vec<i8>> = vec![Vec::new()];
    for _ in 0..n {
        leaves = leaves
            .into_par_iter()
            .flat_map_iter(|prefix| {
                [1i8, -1].into_iter().filter_map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s);
                    let sub = HyperplaneArrangement {
                        m: ha.m,
                        coeffs: ha.coeffs[..next.len()].to_vec(),
                        constants: ha.constants[..next.len()].to_vec(),
                    };
                    feasible(ha.m, &region_system(&sub, &next)).then_some(next)
                })
            })
            .collect();
    }
    let mut regions: Vec<Region> = leaves
        .into_par_iter()
        .map(|signs| {
            let bounded = region_bounded(ha, &signs);
            Region { signs, bounded }
        })
        .collect();
    regions.sort_by(|a, b| b.signs.cmp(&a.signs));
    Ok(regions)
}

/// `(total, bounded, unbounded)` by enumeration.
pub fn region_counts<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Result<(usize, usize, usize)> {
    let regions = enumerate_regions(ha)?;
    let bounded = regions.iter().filter(|r| r.bounded).count();
    Ok((regions.len(), bounded, regions.len() - bounded))
}

/// Closed forms for `n` hyperplanes in general position in `F^m`.
pub fn formula_counts(n: usize, m: usize) -> (usize, usize, usize) {
    let total = (0..=m).map(|i| binomial(n, i)).sum();
    let bounded = if n == 0 { 0 } else { binomial(n - 1, m) };
    let unbounded = (0..m).map(|i| binomial(n, i)).sum::<usize>() + if n == 0 || m == 0 { 0 } else { binomial(n - 1, m - 1) };
    (total, bounded, unbounded)
}

/// Sign of `det[1 | P_i]` for `m + 1` points of `F^m`.
pub fn vertex_orientation<T: OrderedField>(points: &[Vec<T>]) -> Result<Sign> {
    let m = points.len().saturating_sub(1);
    if points.iter().any(|p| p.len() != m) {
        return Err(Error::Dimension(format!("need {} points of length {m}", m + 1)));
    }
    let rows: Vec<Vec<T>> = points
        .iter()
        .map(|p| std::iter::once(T::one()).chain(p.iter().cloned()).collect())
        .collect();
    let refs: Vec<&[T]> = rows.iter().map(Vec::as_slice).collect();
    match det_of_rows(&refs).sign() {
        Sign::Zero => Err(Error::Precondition("degenerate points: zero determinant".into())),
        s => Ok(s),
    }
}

/// Vertices `P_i` opposite each facet of the simplex cut out by `m + 1`
/// hyperplanes, in facet order.
pub fn simplex_vertices<T: OrderedField>(ha: &HyperplaneArrangement<T>, facets: &[usize]) -> Result<Vec<Vec<T>>> {
    if facets.len() != ha.m + 1 || facets.iter().any(|&i| i >= ha.len()) {
        return Err(Error::Precondition(format!("need {} distinct hyperplane indices", ha.m + 1)));
    }
    (0..facets.len())
        .map(|i| {
            let others: Vec<usize> = facets.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &f)| f).collect();
            ha.vertex(&others)
        })
        .collect()
}

/// `(vertex orientation, sign of det[a | c])` for a simplex whose normals
/// point outward, i.e. `a_i · P_i < c_i` for each opposite vertex.
pub fn simplex_orientation_check<T: OrderedField>(coeffs: Vec<Vec<T>>, constants: Vec<T>) -> Result<(Sign, Sign)> {
    let ha = HyperplaneArrangement::new(coeffs, constants)?;
    let facets: Vec<usize> = (0..ha.len()).collect();
    let verts = simplex_vertices(&ha, &facets)?;
    for (i, p) in verts.iter().enumerate() {
        if ha.side(i, p) != Sign::Negative {
            return Err(Error::Precondition(format!("normal of hyperplane {} is not outward", i + 1)));
        }
    }
    Ok((vertex_orientation(&verts)?, ha.bordered_det(&facets).sign()))
}

/// Whether the simplex of the `m + 1` hyperplanes in `subset` is a region of
/// the whole arrangement: no other hyperplane separates its vertices.
pub fn is_simplex_polyhedrality<T: OrderedField>(ha: &HyperplaneArrangement<T>, subset: &[usize]) -> Result<bool> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != ha.m + 1 || s.iter().any(|&i| i >= ha.len()) {
        return Err(Error::Precondition(format!(
            "a simplex needs {} distinct hyperplanes of the arrangement",
            ha.m + 1
        )));
    }
    let verts = simplex_vertices(ha, &s)?;
    Ok((0..ha.len()).filter(|i| !s.contains(i)).all(|i| {
        let first = ha.side(i, &verts[0]);
        verts.iter().all(|v| ha.side(i, v) == first)
    }))
}

/// Sign per sorted `(m+1)`-subset; keys are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConcurrencySignMap {
    pub signs: BTreeMap<Vec<usize>, i8>,
}

impl ConcurrencySignMap {
    pub fn get(&self, key: &[usize]) -> Option<i8> {
        self.signs.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

impl fmt::Display for ConcurrencySignMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.signs {
            let key: Vec<String> = k.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(f, "{} {}", key.join(","), if *v > 0 { "+1" } else { "-1" })?;
        }
        Ok(())
    }
}

pub fn concurrency_sign_map<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Result<ConcurrencySignMap> {
    if let Some(why) = crate::normal::validate_vectors(ha.m, &ha.coeffs) {
        let names: Vec<String> = why.iter().map(|i| (i + 1).to_string()).collect();
        return Err(Error::Invalid(format!("normals {{{}}} are dependent", names.join(","))));
    }
    let mut signs = BTreeMap::new();
    for s in combinations(ha.len(), ha.m + 1) {
        let v = ha.bordered_det(&s).sign();
        if v == Sign::Zero {
            let names: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
            return Err(Error::Invalid(format!("hyperplanes {{{}}} are concurrent", names.join(","))));
        }
        signs.insert(s, v.to_i8());
    }
    Ok(ConcurrencySignMap { signs })
}

/// Signs of `ha2` seen through `w`: for each subset `I` of `ha1`'s indices,
/// the determinant of the rows `μ_i (a_{π(i)} | c_{π(i)})` taken in the order
/// of `I`, stored under the key `sorted π(I)`.
pub fn induced_sign_map<T: OrderedField>(ha2: &HyperplaneArrangement<T>, w: &SignedBijection) -> Result<ConcurrencySignMap> {
    if w.len() != ha2.len() {
        return Err(Error::Dimension("witness size differs from arrangement size".into()));
    }
    let mut signs = BTreeMap::new();
    for s in combinations(ha2.len(), ha2.m + 1) {
        let rows: Vec<usize> = s.iter().map(|&i| w.pi[i]).collect();
        let mut d = ha2.bordered_det(&rows).sign();
        for &i in &s {
            if w.mu[i] < 0 {
                d = -d;
            }
        }
        if d == Sign::Zero {
            return Err(Error::Invalid("witness image is concurrent".into()));
        }
        let mut key = rows;
        key.sort_unstable();
        signs.insert(key, d.to_i8());
    }
    Ok(ConcurrencySignMap { signs })
}

/// Which global alternative of the sign comparison held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaBranch {
    /// Every sign agrees.
    A,
    /// Every sign is negated.
    B,
}

impl fmt::Display for SigmaBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaBranch::A => "a",
            SigmaBranch::B => "b",
        })
    }
}

/// Compares `ha1`'s signs with `ha2`'s signs induced by `w`.
pub fn sigma_branch<T: OrderedField>(
    s1: &ConcurrencySignMap,
    ha2: &HyperplaneArrangement<T>,
    w: &SignedBijection,
) -> Result<Option<SigmaBranch>> {
    let s2 = induced_sign_map(ha2, w)?;
    let mut all_equal = true;
    let mut all_negated = true;
    for (key, &v) in &s1.signs {
        let mut image: Vec<usize> = key.iter().map(|&i| w.pi[i]).collect();
        image.sort_unstable();
        let u = s2.get(&image).ok_or_else(|| Error::Invalid("missing induced sign".into()))?;
        all_equal &= u == v;
        all_negated &= u == -v;
        if !all_equal && !all_negated {
            return Ok(None);
        }
    }
    Ok(Some(if all_equal { SigmaBranch::A } else { SigmaBranch::B }))
}

/// The first normal-system witness whose induced signs agree with `ha1`'s
/// globally, or `None` if the arrangements are not isomorphic.
pub fn arrangements_isomorphic<T: OrderedField>(
    ha1: &HyperplaneArrangement<T>,
    ha2: &HyperplaneArrangement<T>,
) -> Result<Option<(IsoWitness, SigmaBranch)>> {
    if ha1.m != ha2.m || ha1.len() != ha2.len() {
        return Err(Error::Dimension(format!(
            "arrangements differ in size: (m={}, n={}) vs (m={}, n={})",
            ha1.m,
            ha1.len(),
            ha2.m,
            ha2.len()
        )));
    }
    check_valid(ha1)?;
    check_valid(ha2)?;
    let witnesses = find_isomorphisms(&ha1.normal_system()?, &ha2.normal_system()?)?;
    let s1 = concurrency_sign_map(ha1)?;
    let found = witnesses
        .into_par_iter()
        .map(|w| sigma_branch(&s1, ha2, &w.map).map(|b| b.map(|b| (w, b))))
        .collect::<Result<Vec<_>>>()?;
    Ok(found.into_iter().flatten().next())
}

/// Vertex labels along the line where the hyperplanes `line` meet, ordered by
/// the parameter `t` of `p₀ + t·dir`.
pub fn vertex_order<T: OrderedField>(ha: &HyperplaneArrangement<T>, line: &[usize]) -> Result<Vec<usize>> {
    if line.len() + 1 != ha.m {
        return Err(Error::Precondition(format!("a line needs {} hyperplanes", ha.m - 1)));
    }
    let (p0, dir) = line_param(ha, line)?;
    let mut params: Vec<(T, usize)> = (0..ha.len())
        .filter(|k| !line.contains(k))
        .map(|k| {
            let t = (ha.constants[k].clone() - dot(&ha.coeffs[k], &p0)) / dot(&ha.coeffs[k], &dir);
            (t, k)
        })
        .collect();
    params.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(params.into_iter().map(|(_, k)| k).collect())
}

fn line_param<T: OrderedField>(ha: &HyperplaneArrangement<T>, line: &[usize]) -> Result<(Vec<T>, Vec<T>)> {
    let m = ha.m;
    let mut aug = Matrix::zeros(line.len(), m + 1);
    for (r, &i) in line.iter().enumerate() {
        for c in 0..m {
            aug.set(r, c, ha.coeffs[i][c].clone());
        }
        aug.set(r, m, ha.constants[i].clone());
    }
    let (red, pivots) = aug.rref();
    let mut p0 = vec![T::zero(); m];
    for (r, &p) in pivots.iter().enumerate() {
        p0[p] = red.get(r, m).clone();
    }
    let rows: Vec<Vec<T>> = line.iter().map(|&i| ha.coeffs[i].clone()).collect();
    let dir = if rows.is_empty() {
        let mut e = vec![T::zero(); m];
        e[0] = T::one();
        e
    } else {
        Matrix::from_rows(&rows)?.kernel_basis().remove(0)
    };
    Ok((p0, dir))
}

/// Direct check of the definition: on every line cut out by `m − 1`
/// hyperplanes, the vertex order of `ha1` mapped through `π` equals the
/// vertex order on the corresponding line of `ha2`, up to reversal.
pub fn isomorphic_by_definition<T: OrderedField>(
    ha1: &HyperplaneArrangement<T>,
    ha2: &HyperplaneArrangement<T>,
    phi: &SignedBijection,
) -> Result<bool> {
    if ha1.m != ha2.m || ha1.len() != ha2.len() || phi.len() != ha1.len() {
        return Err(Error::Dimension("arrangements and map differ in size".into()));
    }
    check_valid(ha1)?;
    check_valid(ha2)?;
    for line in combinations(ha1.len(), ha1.m - 1) {
        let order1: Vec<usize> = vertex_order(ha1, &line)?.iter().map(|&k| phi.pi[k]).collect();
        let mut image: Vec<usize> = line.iter().map(|&i| phi.pi[i]).collect();
        image.sort_unstable();
        let order2 = vertex_order(ha2, &image)?;
        let reversed: Vec<usize> = order2.iter().rev().copied().collect();
        if order1 != order2 && order1 != reversed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every permutation `π` (with `μ ≡ +1`) satisfying the definition.
pub fn isomorphisms_by_definition<T: OrderedField>(
    ha1: &HyperplaneArrangement<T>,
    ha2: &HyperplaneArrangement<T>,
) -> Result<Vec<SignedBijection>> {
    let n = ha1.len();
    if n > crate::normal::ORACLE_MAX_N {
        return Err(Error::TooLarge(format!(
            "exhaustive search needs n <= {}, got {n}",
            crate::normal::ORACLE_MAX_N
        )));
    }
    let perms = crate::combinat::permutations(n);
    let mut out = Vec::new();
    for pi in perms {
        let phi = SignedBijection::new(pi, vec![1; n]);
        if isomorphic_by_definition(ha1, ha2, &phi)? {
            out.push(phi);
        }
    }
    Ok(out)
}

/// Cofactor coefficients of `M_S(y) = det[a_S | y_S]` as a linear form in
/// `y ∈ F^n`.
fn concurrency_form<T: OrderedField>(ha: &HyperplaneArrangement<T>, s: &[usize]) -> Vec<T> {
    let m = ha.m;
    let mut form = vec![T::zero(); ha.len()];
    for (pos, &i) in s.iter().enumerate() {
        let minor: Vec<&[T]> = s.iter().filter(|&&j| j != i).map(|&j| ha.coeffs[j].as_slice()).collect();
        let d = det_of_rows(&minor);
        form[i] = if (pos + m).is_multiple_of(2) { d } else { -d };
    }
    form
}

/// Largest `n` accepted by [`cone_facets`] and [`adjacent_cone_constants`].
pub const CONE_MAX_N: usize = 8;

/// Linear forms of every concurrency determinant restricted to constants
/// vectors with `y_i = 0` for `i < m` (the lineality space `{A x}` is
/// factored out this way, since the first `m` normals are independent).
struct ConeSystem<T> {
    subsets: Vec<Vec<usize>>,
    /// forms over the reduced variables `y_m..y_{n−1}`
    forms: Vec<Vec<T>>,
    signs: Vec<i8>,
}

impl<T: OrderedField> ConeSystem<T> {
    fn new(ha: &HyperplaneArrangement<T>) -> Result<Self> {
        if ha.len() > CONE_MAX_N {
            return Err(Error::TooLarge(format!("cone computations need n <= {CONE_MAX_N}")));
        }
        check_valid(ha)?;
        let map = concurrency_sign_map(ha)?;
        let subsets: Vec<Vec<usize>> = map.signs.keys().cloned().collect();
        let forms = subsets.iter().map(|s| concurrency_form(ha, s)[ha.m..].to_vec()).collect();
        let signs = map.signs.values().copied().collect();
        Ok(ConeSystem { subsets, forms, signs })
    }

    /// A reduced point with `M_facet = 0` and every other sign strict and
    /// unchanged.
    fn facet_point(&self, facet: usize) -> Option<Vec<T>> {
        let vars = self.forms.first().map_or(0, Vec::len);
        // eliminate one variable through the equality
        let eq = &self.forms[facet];
        let pivot = eq.iter().position(|c| !c.is_zero())?;
        let substitute = |form: &[T]| -> Vec<T> {
            // y_pivot = −Σ_{j≠pivot} eq_j y_j / eq_pivot
            let f = form[pivot].clone() / eq[pivot].clone();
            (0..vars)
                .filter(|&j| j != pivot)
                .map(|j| form[j].clone() - f.clone() * eq[j].clone())
                .collect()
        };
        let system: Vec<Vec<T>> = (0..self.forms.len())
            .filter(|&t| t != facet)
            .map(|t| {
                let g = substitute(&self.forms[t]);
                if self.signs[t] > 0 {
                    g
                } else {
                    g.into_iter().map(|x| -x).collect()
                }
            })
            .collect();
        let reduced = homogeneous_strict_point(vars - 1, &system)?;
        let mut y = Vec::with_capacity(vars);
        let mut it = reduced.into_iter();
        for j in 0..vars {
            if j == pivot {
                y.push(T::zero());
            } else {
                y.push(it.next().unwrap());
            }
        }
        y[pivot] = -(0..vars)
            .filter(|&j| j != pivot)
            .fold(T::zero(), |acc, j| acc + eq[j].clone() * y[j].clone())
            / eq[pivot].clone();
        Some(y)
    }
}

/// A point with `f · z > 0` for every form `f`, found by splitting on the
/// sign of the last variable (the system is invariant under positive
/// scaling, so that variable can be fixed to `±1` or `0`).
fn homogeneous_strict_point<T: OrderedField>(vars: usize, forms: &[Vec<T>]) -> Option<Vec<T>> {
    if vars == 0 {
        return forms.is_empty().then(Vec::new);
    }
    let last = vars - 1;
    for v in [1i64, -1] {
        let system: Vec<Ineq<T>> = forms
            .iter()
            .map(|f| Ineq::new(f[..last].to_vec(), f[last].clone() * T::from_i64(v), true))
            .collect();
        if let Some(mut z) = find_point(last, &system) {
            z.push(T::from_i64(v));
            return Some(z);
        }
    }
    let rest: Vec<Vec<T>> = forms.iter().map(|f| f[..last].to_vec()).collect();
    if rest.iter().any(|f| f.iter().all(T::is_zero)) {
        return None;
    }
    let mut z = homogeneous_strict_point(last, &rest)?;
    z.push(T::zero());
    Some(z)
}

/// Subsets whose concurrency hyperplane `M_S(y) = 0` supports a facet of the
/// cone of constants vectors sharing `ha`'s signs.
pub fn cone_facets<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Result<BTreeSet<Vec<usize>>> {
    let cone = ConeSystem::new(ha)?;
    let found: Vec<Option<Vec<usize>>> = (0..cone.subsets.len())
        .into_par_iter()
        .map(|f| cone.facet_point(f).map(|_| cone.subsets[f].clone()))
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Constants in the cone adjacent to `ha`'s across the facet `M_facet = 0`:
/// an exact point in the relative interior of that facet, pushed off it by
/// half the smallest slack of the other concurrency determinants.
pub fn adjacent_cone_constants<T: OrderedField>(ha: &HyperplaneArrangement<T>, facet: &[usize]) -> Result<Vec<T>> {
    let mut key = facet.to_vec();
    key.sort_unstable();
    if !is_simplex_polyhedrality(ha, &key)? {
        return Err(Error::Precondition("facet is not a simplex polyhedrality".into()));
    }
    let cone = ConeSystem::new(ha)?;
    let idx = cone
        .subsets
        .iter()
        .position(|s| *s == key)
        .ok_or_else(|| Error::Precondition("unknown facet".into()))?;
    let y = cone
        .facet_point(idx)
        .ok_or_else(|| Error::Precondition("facet is not a wall of the constants cone".into()))?;
    // step along the facet normal, towards the side opposite to ha's sign
    let normal = &cone.forms[idx];
    let step_dir: Vec<T> = normal
        .iter()
        .map(|x| if cone.signs[idx] > 0 { -x.clone() } else { x.clone() })
        .collect();
    let mut step: Option<T> = None;
    for (t, form) in cone.forms.iter().enumerate() {
        if t == idx {
            continue;
        }
        let value = dot(form, &y);
        let rate = dot(form, &step_dir);
        // the sign of value + s·rate changes at s = −value/rate when that is positive
        if !rate.is_zero() && (value.sign() != rate.sign()) {
            let limit = -value / rate;
            if step.as_ref().is_none_or(|s| limit < *s) {
                step = Some(limit);
            }
        }
    }
    let s = step.map_or_else(T::one, |s| s / T::from_i64(2));
    let mut c = vec![T::zero(); ha.m];
    c.extend(y.iter().zip(&step_dir).map(|(a, d)| a.clone() + s.clone() * d.clone()));
    Ok(c)
}

/// Whether the hyperplane `h` has every vertex of the hyperplanes `others`
/// strictly on one side.
pub fn at_infinity<T: OrderedField>(ha: &HyperplaneArrangement<T>, h: usize, others: &[usize]) -> Result<bool> {
    let verts = ha.vertices_of(others)?;
    let mut sides = verts.iter().map(|(_, v)| ha.side(h, v));
    let Some(first) = sides.next() else {
        return Ok(true);
    };
    Ok(first != Sign::Zero && sides.all(|s| s == first))
}

/// An ordering `σ` in which every hyperplane is at infinity with respect to
/// the ones before it, built by repeatedly removing the highest-indexed
/// hyperplane that is at infinity with respect to all remaining ones.
pub fn is_infinity_arrangement<T: OrderedField>(ha: &HyperplaneArrangement<T>) -> Result<Option<Vec<usize>>> {
    check_valid(ha)?;
    let mut remaining: Vec<usize> = (0..ha.len()).collect();
    let mut tail = Vec::new();
    while !remaining.is_empty() {
        let mut removed = None;
        for (pos, &h) in remaining.iter().enumerate().rev() {
            let others: Vec<usize> = remaining.iter().copied().filter(|&x| x != h).collect();
            if at_infinity(ha, h, &others)? {
                removed = Some(pos);
                break;
            }
        }
        match removed {
            Some(pos) => tail.push(remaining.remove(pos)),
            None => return Ok(None),
        }
    }
    tail.reverse();
    Ok(Some(tail))
}

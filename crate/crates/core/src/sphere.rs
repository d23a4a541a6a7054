//! Points of the k-sphere (nonzero vectors modulo positive scaling) and
//! antipodal point arrangements.

use crate::combinat::combinations;
use crate::error::{Error, Result};
use crate::field::{OrderedField, Sign};
use crate::linalg::{det_of_rows, projectors, Matrix};

/// A nonzero vector up to positive scaling, stored with its first nonzero
/// coordinate equal to `±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpherePoint<T> {
    rep: Vec<T>,
}

impl<T: OrderedField> SpherePoint<T> {
    pub fn new(v: Vec<T>) -> Result<Self> {
        let lead = v.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?.abs();
        Ok(SpherePoint {
            rep: v.into_iter().map(|x| x / lead.clone()).collect(),
        })
    }

    pub fn rep(&self) -> &[T] {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.len()
    }

    pub fn antipode(&self) -> Self {
        SpherePoint {
            rep: self.rep.iter().map(|x| -x.clone()).collect(),
        }
    }
}

pub fn canonicalize<T: OrderedField>(v: Vec<T>) -> Result<SpherePoint<T>> {
    SpherePoint::new(v)
}

/// True iff the points span a space of dimension equal to their number.
pub fn independent<T: OrderedField>(points: &[SpherePoint<T>]) -> Result<bool> {
    let dim = points.first().map_or(0, SpherePoint::dim);
    if points.is_empty() || points.len() > dim {
        return Err(Error::CountOutOfRange {
            count: points.len(),
            max: dim,
        });
    }
    let rows: Vec<Vec<T>> = points.iter().map(|p| p.rep.clone()).collect();
    Ok(Matrix::from_rows(&rows)?.rank() == points.len())
}

/// Coefficients of a target vector over a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveCombination<T> {
    pub coefficients: Vec<T>,
}

impl<T: OrderedField> PositiveCombination<T> {
    pub fn signs(&self) -> Vec<Sign> {
        self.coefficients.iter().map(OrderedField::sign).collect()
    }

    /// All coefficients strictly positive.
    pub fn is_positive(&self) -> bool {
        self.coefficients.iter().all(|c| c.sign() == Sign::Positive)
    }
}

/// Solves `target = Σ λ_i basis_i`.
pub fn positive_combination<T: OrderedField>(target: &[T], basis: &[&[T]]) -> Result<PositiveCombination<T>> {
    let cols: Vec<Vec<T>> = basis.iter().map(|b| b.to_vec()).collect();
    let m = Matrix::from_cols(&cols)?;
    let coefficients = m.solve(target).map_err(|e| match e {
        Error::Singular => Error::Precondition("dependent basis".into()),
        other => other,
    })?;
    Ok(PositiveCombination { coefficients })
}

/// `n` antipodal pairs on the k-sphere. Each pair carries a label (0-based
/// index into the original arrangement), which survives projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodalArrangement<T> {
    k: usize,
    labels: Vec<usize>,
    points: Vec<SpherePoint<T>>,
}

impl<T: OrderedField> AntipodalArrangement<T> {
    /// Checks general position and builds the arrangement with labels `0..n`.
    pub fn new(k: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        let labels = (0..vectors.len()).collect();
        Self::with_labels(k, labels, vectors)
    }

    pub fn with_labels(k: usize, labels: Vec<usize>, vectors: Vec<Vec<T>>) -> Result<Self> {
        if labels.len() != vectors.len() {
            return Err(Error::Dimension("label count".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != k + 1) {
            return Err(Error::Dimension(format!("point of length {} on the {k}-sphere", v.len())));
        }
        let points = vectors.into_iter().map(SpherePoint::new).collect::<Result<Vec<_>>>()?;
        let arr = AntipodalArrangement { k, labels, points };
        if let Some(bad) = arr.violation() {
            let names: Vec<String> = bad.iter().map(|i| (arr.labels[*i] + 1).to_string()).collect();
            return Err(Error::Invalid(format!("points {{{}}} are dependent", names.join(","))));
        }
        Ok(arr)
    }

    /// First subset of `min(k+1, n)` positions that is linearly dependent.
    pub fn violation(&self) -> Option<Vec<usize>> {
        first_dependent_subset(&self.points.iter().map(|p| p.rep.clone()).collect::<Vec<_>>(), self.k + 1)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn points(&self) -> &[SpherePoint<T>] {
        &self.points
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn point(&self, label: usize) -> Option<&SpherePoint<T>> {
        self.position(label).map(|i| &self.points[i])
    }

    /// Every point replaced by its antipode.
    pub fn total_flip(&self) -> Self {
        AntipodalArrangement {
            k: self.k,
            labels: self.labels.clone(),
            points: self.points.iter().map(SpherePoint::antipode).collect(),
        }
    }

    /// Orthogonal projection along the points labelled `along`, expressed in
    /// an oriented basis of the complement. Points of `along` are dropped.
    pub fn project(&self, along: &[usize]) -> Result<AntipodalArrangement<T>> {
        if along.is_empty() {
            return Ok(self.clone());
        }
        if along.len() > self.k {
            return Err(Error::Precondition(format!(
                "cannot project the {}-sphere along {} points",
                self.k,
                along.len()
            )));
        }
        let mut along = along.to_vec();
        along.sort_unstable();
        let span: Vec<Vec<T>> = along
            .iter()
            .map(|&l| {
                self.point(l)
                    .map(|p| p.rep.clone())
                    .ok_or_else(|| Error::Precondition(format!("label {} not in arrangement", l + 1)))
            })
            .collect::<Result<_>>()?;
        let frame = ComplementFrame::new(&span)?;
        let mut labels = Vec::new();
        let mut vectors = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if along.contains(&self.labels[i]) {
                continue;
            }
            labels.push(self.labels[i]);
            vectors.push(frame.coordinates(&p.rep)?);
        }
        let k = self.k - along.len();
        let out = AntipodalArrangement::with_labels(k, labels, vectors)
            .unwrap_or_else(|e| panic!("projection of a valid arrangement lost general position: {e}"));
        Ok(out)
    }

    /// Relabels by `perm`: the point with label `l` gets label `perm[l]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        AntipodalArrangement {
            k: self.k,
            labels: self.labels.iter().map(|&l| perm[l]).collect(),
            points: self.points.clone(),
        }
    }

    /// Same points listed in increasing label order.
    pub fn sorted_by_label(&self) -> Self {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| self.labels[i]);
        AntipodalArrangement {
            k: self.k,
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            points: idx.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }
}

/// Diagnoses general position: returns the first dependent subset of
/// `min(r, n)` positions, in lexicographic order.
pub fn first_dependent_subset<T: OrderedField>(vectors: &[Vec<T>], r: usize) -> Option<Vec<usize>> {
    let size = r.min(vectors.len());
    let dim = vectors.first().map_or(0, Vec::len);
    combinations(vectors.len(), size).into_iter().find(|s| {
        if s.len() == dim {
            let rows: Vec<&[T]> = s.iter().map(|&i| vectors[i].as_slice()).collect();
            det_of_rows(&rows).is_zero()
        } else {
            let rows: Vec<Vec<T>> = s.iter().map(|&i| vectors[i].clone()).collect();
            Matrix::from_rows(&rows).map_or(true, |m| m.rank() < s.len())
        }
    })
}

/// Oriented basis of the orthogonal complement of a row span, with the
/// projector onto that complement.
#[derive(Debug, Clone)]
pub struct ComplementFrame<T> {
    q: Matrix<T>,
    /// Column indices whose entries give the coordinates of a complement
    /// vector in the basis.
    free: Vec<usize>,
    /// `+1`/`-1` per basis vector; only the last may be negated.
    orient: Vec<T>,
    basis: Vec<Vec<T>>,
}

impl<T: OrderedField> ComplementFrame<T> {
    pub fn new(span: &[Vec<T>]) -> Result<Self> {
        let t = Matrix::from_rows(span)?;
        let pq = projectors(&t)?;
        let (_, pivots) = t.rref();
        let free: Vec<usize> = (0..t.cols()).filter(|c| !pivots.contains(c)).collect();
        let mut basis = t.kernel_basis();
        let mut orient = vec![T::one(); basis.len()];
        let mut rows: Vec<&[T]> = span.iter().map(Vec::as_slice).collect();
        rows.extend(basis.iter().map(Vec::as_slice));
        if det_of_rows(&rows).sign() == Sign::Negative {
            let last = basis.len() - 1;
            basis[last] = basis[last].iter().map(|x| -x.clone()).collect();
            orient[last] = -T::one();
        }
        Ok(ComplementFrame {
            q: pq.q,
            free,
            orient,
            basis,
        })
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Coordinates of `Q v` in the basis. The kernel basis is the identity on
    /// the free columns, so the coordinates are read off there.
    pub fn coordinates(&self, v: &[T]) -> Result<Vec<T>> {
        let qv = self.q.mul_vec(v)?;
        Ok(self
            .free
            .iter()
            .zip(&self.orient)
            .map(|(&c, o)| qv[c].clone() * o.clone())
            .collect())
    }
}

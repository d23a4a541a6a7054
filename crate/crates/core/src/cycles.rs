//! Line cycles on the 2-sphere and the full cycle-invariant family of an
//! arrangement on the k-sphere.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::combinat::combinations;
use crate::error::{Error, Result};
use crate::field::{OrderedField, Sign};
use crate::sphere::AntipodalArrangement;

/// A cyclic sequence of labels, stored starting at its smallest label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineCycle {
    labels: Vec<usize>,
}

impl LineCycle {
    pub fn new(mut labels: Vec<usize>) -> Self {
        if let Some(start) = labels.iter().enumerate().min_by_key(|(_, l)| **l).map(|(i, _)| i) {
            labels.rotate_left(start);
        }
        LineCycle { labels }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut l = self.labels.clone();
        l.reverse();
        LineCycle::new(l)
    }

    /// Relabels every entry `l` as `pi[l]`.
    pub fn conjugate(&self, pi: &[usize]) -> Result<Self> {
        let labels = self
            .labels
            .iter()
            .map(|&l| {
                pi.get(l)
                    .copied()
                    .ok_or_else(|| Error::Precondition(format!("permutation does not cover label {}", l + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LineCycle::new(labels))
    }

    /// The inverse cycle when `sign` is negative.
    pub fn signed(&self, sign: i8) -> Self {
        if sign < 0 {
            self.inverse()
        } else {
            self.clone()
        }
    }

    /// The cyclic order induced on a subset of the labels.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Self {
        LineCycle::new(self.labels.iter().copied().filter(|&l| keep(l)).collect())
    }
}

impl fmt::Display for LineCycle {
    /// `(2 4 6 5 3)` with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| (l + 1).to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

impl FromStr for LineCycle {
    type Err = Error;

    /// Accepts `(2 4 6 5 3)` and, for single-digit labels, `(24653)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cycle {s:?}"));
        let body = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let parts: Vec<&str> = if body.contains(|c: char| c.is_whitespace() || c == ',') {
            body.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect()
        } else {
            body.char_indices().map(|(i, c)| &body[i..i + c.len_utf8()]).collect()
        };
        let labels = parts
            .iter()
            .map(|p| match p.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LineCycle::new(labels))
    }
}

/// Cyclic order of the lines through the other points around the point
/// labelled `label` (for `sign > 0`) or its antipode (`sign < 0`).
pub fn line_cycle<T: OrderedField>(arr: &AntipodalArrangement<T>, label: usize, sign: i8) -> Result<LineCycle> {
    if arr.k() != 2 {
        return Err(Error::Precondition(format!(
            "line cycles need the 2-sphere, got k={}",
            arr.k()
        )));
    }
    if arr.len() < 4 {
        return Err(Error::Precondition(format!("line cycles need n >= 4, got n={}", arr.len())));
    }
    if arr.position(label).is_none() {
        return Err(Error::Precondition(format!("label {} not in arrangement", label + 1)));
    }
    let plane = arr.project(&[label])?;
    let mut dirs: Vec<(usize, [T; 2])> = plane
        .labels()
        .iter()
        .zip(plane.points())
        .map(|(&l, p)| {
            let (x, y) = (p.rep()[0].clone(), p.rep()[1].clone());
            let flip = match y.sign() {
                Sign::Negative => true,
                Sign::Zero => x.sign() == Sign::Negative,
                Sign::Positive => false,
            };
            if flip {
                (l, [-x, -y])
            } else {
                (l, [x, y])
            }
        })
        .collect();
    // increasing counterclockwise angle within the upper half-plane
    dirs.sort_by(|(_, a), (_, b)| {
        let d = a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone();
        match d.sign() {
            Sign::Positive => Ordering::Less,
            Sign::Negative => Ordering::Greater,
            Sign::Zero => Ordering::Equal,
        }
    });
    let cycle = LineCycle::new(dirs.into_iter().map(|(l, _)| l).collect());
    Ok(cycle.signed(sign))
}

/// `(A, j, ±)`: projection set, point, and which of the antipodal pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleKey {
    pub along: Vec<usize>,
    pub point: usize,
    pub sign: i8,
}

impl fmt::Display for CycleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.along.iter().map(|l| (l + 1).to_string()).collect();
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "A={{{}}} P{}{}", a.join(","), self.point + 1, s)
    }
}

/// All line cycles of all projections of an arrangement to the 2-sphere.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleInvariantSet {
    pub cycles: BTreeMap<CycleKey, LineCycle>,
}

impl CycleInvariantSet {
    pub fn get(&self, along: &[usize], point: usize, sign: i8) -> Option<&LineCycle> {
        self.cycles.get(&CycleKey {
            along: along.to_vec(),
            point,
            sign,
        })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleKey, &LineCycle)> {
        self.cycles.iter()
    }
}

/// For every `(k−2)`-subset `A` of labels and every `j ∉ A`, the pair of
/// mutually inverse cycles at `±P_j` after projecting along `A`.
pub fn all_cycle_invariants<T: OrderedField>(arr: &AntipodalArrangement<T>) -> Result<CycleInvariantSet> {
    let k = arr.k();
    if k < 2 {
        return Err(Error::Precondition("cycle invariants need k >= 2".into()));
    }
    if arr.len() < k + 2 {
        return Err(Error::Precondition(format!(
            "cycle invariants need n >= k+2 = {}, got n={}",
            k + 2,
            arr.len()
        )));
    }
    let mut labels = arr.labels().to_vec();
    labels.sort_unstable();
    let subsets: Vec<Vec<usize>> = combinations(labels.len(), k - 2)
        .into_iter()
        .map(|s| s.into_iter().map(|i| labels[i]).collect())
        .collect();
    let parts = subsets
        .par_iter()
        .map(|along| {
            let sphere = arr.project(along)?;
            let mut out = Vec::new();
            for &j in sphere.labels() {
                let plus = line_cycle(&sphere, j, 1)?;
                let minus = plus.inverse();
                out.push((
                    CycleKey {
                        along: along.clone(),
                        point: j,
                        sign: 1,
                    },
                    plus,
                ));
                out.push((
                    CycleKey {
                        along: along.clone(),
                        point: j,
                        sign: -1,
                    },
                    minus,
                ));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleInvariantSet {
        cycles: parts.into_iter().flatten().collect(),
    })
}

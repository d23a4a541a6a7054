//! Exact Fourier–Motzkin elimination for systems of strict and non-strict
//! linear inequalities.

use std::collections::BTreeMap;

use crate::field::{OrderedField, Sign};

/// `coeffs · x + constant > 0` (strict) or `≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ineq<T> {
    pub coeffs: Vec<T>,
    pub constant: T,
    pub strict: bool,
}

impl<T: OrderedField> Ineq<T> {
    pub fn new(coeffs: Vec<T>, constant: T, strict: bool) -> Self {
        Ineq {
            coeffs,
            constant,
            strict,
        }
    }

    /// `coeffs · x > 0`.
    pub fn positive(coeffs: Vec<T>) -> Self {
        Ineq::new(coeffs, T::zero(), true)
    }

    /// `coeffs · x ≥ 0`.
    pub fn nonnegative(coeffs: Vec<T>) -> Self {
        Ineq::new(coeffs, T::zero(), false)
    }

    pub fn eval(&self, x: &[T]) -> T {
        crate::linalg::dot(&self.coeffs, x) + self.constant.clone()
    }

    pub fn holds(&self, x: &[T]) -> bool {
        match self.eval(x).sign() {
            Sign::Positive => true,
            Sign::Zero => !self.strict,
            Sign::Negative => false,
        }
    }

    fn scaled(&self, s: &T) -> Self {
        Ineq {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
            constant: self.constant.clone() * s.clone(),
            strict: self.strict,
        }
    }

    /// Scales so the first nonzero coefficient is `±1`.
    fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scaled(&(T::one() / lead.abs())),
            None => self.clone(),
        }
    }
}

/// Whether a constraint with all-zero coefficients is satisfied.
fn constant_holds<T: OrderedField>(c: &Ineq<T>) -> bool {
    match c.constant.sign() {
        Sign::Positive => true,
        Sign::Zero => !c.strict,
        Sign::Negative => false,
    }
}

/// Normalizes, drops trivially true constraints and keeps only the tightest
/// constraint per coefficient vector. `None` if a trivially false
/// constraint is present.
fn simplify<T: OrderedField>(system: Vec<Ineq<T>>) -> Option<Vec<Ineq<T>>> {
    let mut best: BTreeMap<Vec<T>, Ineq<T>> = BTreeMap::new();
    for c in system {
        let c = c.normalized();
        if c.coeffs.iter().all(T::is_zero) {
            if !constant_holds(&c) {
                return None;
            }
            continue;
        }
        match best.get(&c.coeffs) {
            // smaller constant is tighter; strict wins ties
            Some(old) if old.constant < c.constant || (old.constant == c.constant && (old.strict || !c.strict)) => {}
            _ => {
                best.insert(c.coeffs.clone(), c);
            }
        }
    }
    Some(best.into_values().collect())
}

/// Eliminates variable `j`, returning the projected system.
fn eliminate<T: OrderedField>(system: &[Ineq<T>], j: usize) -> Vec<Ineq<T>> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for c in system {
        match c.coeffs[j].sign() {
            Sign::Positive => pos.push(c.scaled(&(T::one() / c.coeffs[j].clone()))),
            Sign::Negative => neg.push(c.scaled(&(T::one() / -c.coeffs[j].clone()))),
            Sign::Zero => out.push(c.clone()),
        }
    }
    for p in &pos {
        for n in &neg {
            let coeffs = p.coeffs.iter().zip(&n.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
            out.push(Ineq {
                coeffs,
                constant: p.constant.clone() + n.constant.clone(),
                strict: p.strict || n.strict,
            });
        }
    }
    out
}

/// A point satisfying every constraint, or `None` if the system is
/// infeasible.
pub fn find_point<T: OrderedField>(vars: usize, system: &[Ineq<T>]) -> Option<Vec<T>> {
    debug_assert!(system.iter().all(|c| c.coeffs.len() == vars));
    // stages[i] constrains only variables 0..i
    let mut stages = Vec::with_capacity(vars + 1);
    let mut current = simplify(system.to_vec())?;
    for j in (0..vars).rev() {
        let next = simplify(eliminate(&current, j))?;
        stages.push(current);
        current = next;
    }
    stages.reverse();
    let mut x: Vec<T> = Vec::with_capacity(vars);
    for (j, stage) in stages.iter().enumerate() {
        // bounds on x_j given x_0..x_{j-1}; later variables have zero coefficients
        let mut lo: Option<(T, bool)> = None;
        let mut hi: Option<(T, bool)> = None;
        for c in stage {
            let a = &c.coeffs[j];
            if a.is_zero() {
                continue;
            }
            let rest = crate::linalg::dot(&c.coeffs[..j], &x) + c.constant.clone();
            let bound = -rest / a.clone();
            if a.sign() == Sign::Positive {
                if lo.as_ref().is_none_or(|(b, s)| bound > *b || (bound == *b && c.strict && !s)) {
                    lo = Some((bound, c.strict));
                }
            } else if hi.as_ref().is_none_or(|(b, s)| bound < *b || (bound == *b && c.strict && !s)) {
                hi = Some((bound, c.strict));
            }
        }
        let v = match (lo, hi) {
            (None, None) => T::zero(),
            (Some((l, _)), None) => l + T::one(),
            (None, Some((h, _))) => h - T::one(),
            (Some((l, ls)), Some((h, hs))) => {
                if l == h {
                    debug_assert!(!ls && !hs);
                    l
                } else {
                    (l + h) / T::from_i64(2)
                }
            }
        };
        x.push(v);
    }
    debug_assert!(system.iter().all(|c| c.holds(&x)));
    Some(x)
}

pub fn feasible<T: OrderedField>(vars: usize, system: &[Ineq<T>]) -> bool {
    let Some(mut current) = simplify(system.to_vec()) else {
        return false;
    };
    for j in (0..vars).rev() {
        match simplify(eliminate(&current, j)) {
            Some(next) => current = next,
            None => return false,
        }
    }
    true
}

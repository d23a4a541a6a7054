//! Subsets, permutations and signed bijections on labels `0..n`.

use std::fmt;

/// A permutation of `0..n` in one-line notation: `i ↦ p[i]`.
pub type Perm = Vec<usize>;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Perm> {
    let mut p: Perm = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `+1` if sorting `seq` takes an even number of transpositions, else `-1`.
/// Entries must be distinct.
pub fn sort_parity(seq: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &j in p {
        if j >= p.len() || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    true
}

/// `δ(P_i) = μ_i · P'_{π(i)}`, and `δ(−P_i) = −μ_i · P'_{π(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedBijection {
    pub pi: Perm,
    pub mu: Vec<i8>,
}

impl SignedBijection {
    pub fn new(pi: Perm, mu: Vec<i8>) -> Self {
        debug_assert!(is_permutation(&pi));
        debug_assert_eq!(pi.len(), mu.len());
        SignedBijection { pi, mu }
    }

    pub fn identity(n: usize) -> Self {
        SignedBijection {
            pi: (0..n).collect(),
            mu: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.pi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pi.is_empty()
    }

    /// Image of the signed label `(i, s)`.
    pub fn apply(&self, i: usize, s: i8) -> (usize, i8) {
        (self.pi[i], s * self.mu[i])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedBijection) -> SignedBijection {
        let n = self.len();
        let mut pi = vec![0; n];
        let mut mu = vec![0; n];
        for i in 0..n {
            let (j, s) = other.apply(i, 1);
            let (k, t) = self.apply(j, s);
            pi[i] = k;
            mu[i] = t;
        }
        SignedBijection { pi, mu }
    }

    pub fn inverse(&self) -> SignedBijection {
        let n = self.len();
        let mut pi = vec![0; n];
        let mut mu = vec![0; n];
        for i in 0..n {
            pi[self.pi[i]] = i;
            mu[self.pi[i]] = self.mu[i];
        }
        SignedBijection { pi, mu }
    }

    /// The same bijection followed by the total flip.
    pub fn negated(&self) -> SignedBijection {
        SignedBijection {
            pi: self.pi.clone(),
            mu: self.mu.iter().map(|s| -s).collect(),
        }
    }

    /// All `n! · 2ⁿ` signed bijections, `π` lexicographic, then `μ` with `+`
    /// before `−` read left to right.
    pub fn all(n: usize) -> Vec<SignedBijection> {
        let mut out = Vec::new();
        for pi in permutations(n) {
            for mask in 0..(1u32 << n) {
                let mu = (0..n).map(|i| if mask & (1 << (n - 1 - i)) != 0 { -1 } else { 1 }).collect();
                out.push(SignedBijection { pi: pi.clone(), mu });
            }
        }
        out
    }
}

impl fmt::Display for SignedBijection {
    /// `1->+2 2->-1 ...` with 1-based labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let s = if self.mu[i] > 0 { '+' } else { '-' };
            write!(f, "{}->{}{}", i + 1, s, self.pi[i] + 1)?;
        }
        Ok(())
    }
}

//! Exact ordered-field scalars.
//!
//! Two concrete fields are provided: the rationals ([`Rational`]) and a single
//! real quadratic extension `Q(√d)` ([`QuadExt`]). Every algorithm in the crate
//! is generic over [`OrderedField`], so the same code runs over either field.
//! [`FieldValue`] is the tagged scalar used at the I/O boundary, where the
//! field of a computation is discovered from its input.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FieldError;

/// The sign of a field element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn from_ordering(ord: Ordering) -> Sign {
        match ord {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// Which field a value (or a whole computation) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    /// `Q(√d)` for a square-free `d > 1`.
    Quadratic(u64),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => f.write_str("Q"),
            FieldTag::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// An exact, totally ordered field.
///
/// Operators panic on field-tag mismatch (two different `√d` in one
/// computation); use the checked methods on [`FieldValue`] at trust
/// boundaries.
pub trait OrderedField:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn sign(&self) -> Sign;
    /// Lossy numeric value, used only for diagnostics and float cross-checks.
    fn to_f64(&self) -> f64;
    fn from_field_value(v: &FieldValue) -> Result<Self, FieldError>;
    fn to_field_value(&self) -> FieldValue;

    fn is_zero(&self) -> bool {
        self.sign() == Sign::Zero
    }

    fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

// ---------------------------------------------------------------------------
// Rationals

/// Arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Rational, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, FieldError> {
        if rhs.0.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Rational::new(num, den)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl OrderedField for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn sign(&self) -> Sign {
        if self.0.is_zero() {
            Sign::Zero
        } else if self.0.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn from_field_value(v: &FieldValue) -> Result<Self, FieldError> {
        match v {
            FieldValue::Rational(r) => Ok(r.clone()),
            FieldValue::Quad(q) => Err(FieldError::TagMismatch {
                left: FieldTag::Rational,
                right: q.tag(),
            }),
        }
    }

    fn to_field_value(&self) -> FieldValue {
        FieldValue::Rational(self.clone())
    }
}

// ---------------------------------------------------------------------------
// Quadratic extension

fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// `a + b√d` with rational `a`, `b` and square-free `d > 1`.
///
/// `d` is `None` only for elements that are known to be rational (`b = 0`)
/// and were created without a field context, such as `zero()` and `one()`.
/// Such elements combine with any `d`; combining two different `d` panics.
#[derive(Clone)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Option<u64>,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<QuadExt, FieldError> {
        if !is_square_free(d) {
            return Err(FieldError::NotSquareFree(d));
        }
        Ok(QuadExt { a, b, d: Some(d) })
    }

    pub fn rational(a: Rational) -> QuadExt {
        QuadExt {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn d(&self) -> Option<u64> {
        self.d
    }

    pub fn tag(&self) -> FieldTag {
        match self.d {
            Some(d) => FieldTag::Quadratic(d),
            None => FieldTag::Rational,
        }
    }

    fn join(&self, other: &QuadExt) -> Result<Option<u64>, FieldError> {
        match (self.d, other.d) {
            (Some(x), Some(y)) if x != y => Err(FieldError::TagMismatch {
                left: FieldTag::Quadratic(x),
                right: FieldTag::Quadratic(y),
            }),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    pub fn checked_add(&self, rhs: &QuadExt) -> Result<QuadExt, FieldError> {
        Ok(QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.join(rhs)?,
        })
    }

    pub fn checked_sub(&self, rhs: &QuadExt) -> Result<QuadExt, FieldError> {
        Ok(QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            d: self.join(rhs)?,
        })
    }

    pub fn checked_mul(&self, rhs: &QuadExt) -> Result<QuadExt, FieldError> {
        let d = self.join(rhs)?;
        let dd = Rational::from_i64(d.unwrap_or(0) as i64);
        // (a + b√d)(c + e√d) = (ac + bed) + (ae + bc)√d
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &dd);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        Ok(QuadExt { a, b, d })
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<QuadExt, FieldError> {
        let d = self.join(rhs)?;
        if rhs.a.is_zero() && rhs.b.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // multiply by the conjugate: 1/(c + e√d) = (c − e√d)/(c² − e²d)
        let dd = Rational::from_i64(d.unwrap_or(0) as i64);
        let norm = &(&rhs.a * &rhs.a) - &(&(&rhs.b * &rhs.b) * &dd);
        let conj = QuadExt {
            a: rhs.a.clone(),
            b: -rhs.b.clone(),
            d,
        };
        let num = self.checked_mul(&conj)?;
        Ok(QuadExt {
            a: num.a.checked_div(&norm)?,
            b: num.b.checked_div(&norm)?,
            d,
        })
    }

    /// Exact sign of `a + b√d` by case analysis on the signs of `a` and `b`,
    /// comparing `a²` with `b²d` when they disagree.
    pub fn exact_sign(&self) -> Sign {
        let sa = self.a.sign();
        let sb = self.b.sign();
        match (sa, sb) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            _ => {
                let d = Rational::from_i64(self.d.unwrap_or(0) as i64);
                let a2 = &self.a * &self.a;
                let b2d = &(&self.b * &self.b) * &d;
                // a² ≠ b²d because d is square-free
                if sa == Sign::Positive {
                    // a > 0, b < 0
                    if a2 > b2d {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    }
                } else if b2d > a2 {
                    // a < 0, b > 0
                    Sign::Positive
                } else {
                    Sign::Negative
                }
            }
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &QuadExt) -> bool {
        self.join(other).is_ok() && self.a == other.a && self.b == other.b
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &QuadExt) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &QuadExt) -> Ordering {
        match (self.clone() - other.clone()).exact_sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            None => write!(f, "{}", self.a),
            Some(d) => {
                if self.b.sign() == Sign::Negative {
                    write!(f, "{}-{}*sqrt({d})", self.a, -self.b.clone())
                } else {
                    write!(f, "{}+{}*sqrt({d})", self.a, self.b)
                }
            }
        }
    }
}

macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

quad_binop!(Add, add, checked_add);
quad_binop!(Sub, sub, checked_sub);
quad_binop!(Mul, mul, checked_mul);
quad_binop!(Div, div, checked_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl OrderedField for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }

    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }

    fn from_i64(v: i64) -> Self {
        QuadExt::rational(Rational::from_i64(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        QuadExt::rational(Rational::from_ratio(num, den))
    }

    fn sign(&self) -> Sign {
        self.exact_sign()
    }

    fn to_f64(&self) -> f64 {
        let d = self.d.unwrap_or(0) as f64;
        self.a.to_f64() + self.b.to_f64() * d.sqrt()
    }

    fn from_field_value(v: &FieldValue) -> Result<Self, FieldError> {
        Ok(match v {
            FieldValue::Rational(r) => QuadExt::rational(r.clone()),
            FieldValue::Quad(q) => q.clone(),
        })
    }

    fn to_field_value(&self) -> FieldValue {
        match self.d {
            None => FieldValue::Rational(self.a.clone()),
            Some(_) => FieldValue::Quad(self.clone()),
        }
    }
}

// ---------------------------------------------------------------------------
// Tagged values

/// A scalar as it appears in input files: either rational or an element of
/// some `Q(√d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldValue {
    Rational(Rational),
    Quad(QuadExt),
}

impl FieldValue {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldValue::Rational(_) => FieldTag::Rational,
            FieldValue::Quad(q) => q.tag(),
        }
    }

    fn same_tag(&self, other: &FieldValue) -> Result<(), FieldError> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(FieldError::TagMismatch {
                left: self.tag(),
                right: other.tag(),
            })
        }
    }

    fn lift(&self) -> QuadExt {
        match self {
            FieldValue::Rational(r) => QuadExt::rational(r.clone()),
            FieldValue::Quad(q) => q.clone(),
        }
    }

    fn binop(
        &self,
        other: &FieldValue,
        rat: impl Fn(&Rational, &Rational) -> Result<Rational, FieldError>,
        quad: impl Fn(&QuadExt, &QuadExt) -> Result<QuadExt, FieldError>,
    ) -> Result<FieldValue, FieldError> {
        self.same_tag(other)?;
        match (self, other) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => Ok(FieldValue::Rational(rat(x, y)?)),
            _ => Ok(FieldValue::Quad(quad(&self.lift(), &other.lift())?)),
        }
    }

    pub fn add(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.binop(other, |x, y| Ok(x + y), QuadExt::checked_add)
    }

    pub fn sub(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.binop(other, |x, y| Ok(x - y), QuadExt::checked_sub)
    }

    pub fn mul(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.binop(other, |x, y| Ok(x * y), QuadExt::checked_mul)
    }

    pub fn div(&self, other: &FieldValue) -> Result<FieldValue, FieldError> {
        self.binop(other, Rational::checked_div, QuadExt::checked_div)
    }

    pub fn sign(&self) -> Sign {
        match self {
            FieldValue::Rational(r) => r.sign(),
            FieldValue::Quad(q) => q.exact_sign(),
        }
    }

    pub fn try_cmp(&self, other: &FieldValue) -> Result<Ordering, FieldError> {
        let diff = self.sub(other)?;
        Ok(match diff.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    /// The single field shared by all `values`; rational if the list is empty.
    pub fn common_tag<'a>(values: impl IntoIterator<Item = &'a FieldValue>) -> Result<FieldTag, FieldError> {
        let mut tag = None;
        for v in values {
            match tag {
                None => tag = Some(v.tag()),
                Some(t) if t != v.tag() => {
                    return Err(FieldError::TagMismatch { left: t, right: v.tag() });
                }
                _ => {}
            }
        }
        Ok(tag.unwrap_or(FieldTag::Rational))
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) => write!(f, "{r}"),
            FieldValue::Quad(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for FieldValue {
    type Err = FieldError;

    /// Accepts `p`, `p/q`, and `p/q+r/s*sqrt(d)` (also with `-` before the
    /// irrational part).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || FieldError::Parse(s.to_string());
        let Some(body) = t.strip_suffix(')') else {
            return t.parse::<Rational>().map(FieldValue::Rational);
        };
        let (left, d) = body.rsplit_once("*sqrt(").ok_or_else(bad)?;
        let d: u64 = d.parse().map_err(|_| bad())?;
        // split at the last sign that is not at position 0 and not after '/'
        let bytes = left.as_bytes();
        let is_sign = |c: u8| c == b'+' || c == b'-';
        let mut split = (1..bytes.len())
            .rev()
            .find(|&i| is_sign(bytes[i]) && bytes[i - 1] != b'/')
            .ok_or_else(bad)?;
        if split > 1 && is_sign(bytes[split - 1]) {
            split -= 1;
        }
        let a: Rational = left[..split].parse()?;
        let b_str = &left[split..];
        let b_str = b_str.strip_prefix('+').unwrap_or(b_str);
        let b: Rational = b_str.replace("--", "").replace("+-", "-").parse()?;
        Ok(FieldValue::Quad(QuadExt::new(a, b, d)?))
    }
}

/// Integer square root test used when reducing values (exposed for tests).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// `gcd(|num|, den) == 1` and `den > 0`: the canonical rational invariant.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

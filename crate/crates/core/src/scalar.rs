//! Numeric values that coordinates and train-track measures can take:
//! exact rationals, exact elements of a real number field, or fixed-scale
//! decimals compared only to a stated number of places.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::decimal::{cmp_places, pow10};
use crate::exact::{FieldElem, FixedDecimal};

pub trait Scalar: Clone + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn half(&self) -> Self;
    fn scale_int(&self, k: &BigInt) -> Self;
    /// Comparison in the value's own semantics (exact, or to a fixed number
    /// of decimal places).
    fn compare(&self, o: &Self) -> Ordering;
    fn to_f64(&self) -> f64;
    /// `floor(self / o)` to `places` decimals; `o` must be positive.
    fn ratio(&self, o: &Self, places: usize) -> FixedDecimal;
    /// `self / o` for non-zero `o`; decimals truncate at their scale.
    fn divide(&self, o: &Self) -> Self;
    fn repr(&self) -> String;

    fn is_zero_value(&self) -> bool {
        self.compare(&self.zero_like()).is_eq()
    }
    fn is_positive(&self) -> bool {
        self.compare(&self.zero_like()).is_gt()
    }
    fn is_negative(&self) -> bool {
        self.compare(&self.zero_like()).is_lt()
    }
    fn max_with(&self, o: &Self) -> Self {
        if self.compare(o).is_lt() {
            o.clone()
        } else {
            self.clone()
        }
    }
}

pub fn sum<S: Scalar>(xs: &[S]) -> Option<S> {
    let first = xs.first()?;
    Some(xs[1..].iter().fold(first.clone(), |acc, x| acc.add(x)))
}

/// Projective equality of two vectors with positive totals: `a_i T_b = b_i T_a`.
pub fn projectively_equal<S: Scalar>(a: &[S], b: &[S]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let (ta, tb) = match (sum(a), sum(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return a.is_empty() && b.is_empty(),
    };
    a.iter().zip(b).all(|(x, y)| x.mul(&tb).compare(&y.mul(&ta)).is_eq())
}

fn floor_ratio(n: &BigInt, d: &BigInt, places: usize) -> FixedDecimal {
    FixedDecimal::new((n * pow10(places)).div_floor(d), places)
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn half(&self) -> Self {
        self / BigInt::from(2)
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self * k
    }
    fn compare(&self, o: &Self) -> Ordering {
        self.cmp(o)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn ratio(&self, o: &Self, places: usize) -> FixedDecimal {
        let q = self / o;
        floor_ratio(q.numer(), q.denom(), places)
    }
    fn divide(&self, o: &Self) -> Self {
        self / o
    }
    fn repr(&self) -> String {
        self.to_string()
    }
}

impl Scalar for FieldElem {
    fn zero_like(&self) -> Self {
        FieldElem::zero_like(self)
    }
    fn add(&self, o: &Self) -> Self {
        FieldElem::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        FieldElem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        FieldElem::mul(self, o)
    }
    fn half(&self) -> Self {
        let two = FieldElem::from_int(self.field(), 2);
        self.div(&two).expect("2 is invertible")
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        self.mul_int(k)
    }
    fn compare(&self, o: &Self) -> Ordering {
        self.cmp_value(o)
    }
    fn to_f64(&self) -> f64 {
        FieldElem::to_f64(self)
    }
    fn ratio(&self, o: &Self, places: usize) -> FixedDecimal {
        self.div(o).expect("positive divisor").floor_decimal(places)
    }
    fn divide(&self, o: &Self) -> Self {
        self.div(o).expect("non-zero divisor")
    }
    fn repr(&self) -> String {
        let (num, den) = self.to_strings();
        format!("[{}]/{}", num.join(","), den)
    }
}

/// A decimal at a working scale whose comparisons only read the first
/// `places` fractional digits of the difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated {
    pub value: FixedDecimal,
    pub places: usize,
}

impl Truncated {
    pub fn new(value: FixedDecimal, places: usize) -> Self {
        assert!(places <= value.scale());
        Truncated { value, places }
    }
}

impl Scalar for Truncated {
    fn zero_like(&self) -> Self {
        Truncated { value: FixedDecimal::zero(self.value.scale()), places: self.places }
    }
    fn add(&self, o: &Self) -> Self {
        Truncated { value: &self.value + &o.value, places: self.places }
    }
    fn sub(&self, o: &Self) -> Self {
        Truncated { value: &self.value - &o.value, places: self.places }
    }
    fn mul(&self, o: &Self) -> Self {
        Truncated { value: self.value.mul_trunc(&o.value, self.value.scale()), places: self.places }
    }
    fn half(&self) -> Self {
        Truncated { value: self.value.half(), places: self.places }
    }
    fn scale_int(&self, k: &BigInt) -> Self {
        Truncated { value: FixedDecimal::new(self.value.mantissa() * k, self.value.scale()), places: self.places }
    }
    fn compare(&self, o: &Self) -> Ordering {
        cmp_places(&self.value, &o.value, self.places).expect("operands share a scale")
    }
    fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
    fn ratio(&self, o: &Self, places: usize) -> FixedDecimal {
        floor_ratio(self.value.mantissa(), o.value.mantissa(), places)
    }
    fn divide(&self, o: &Self) -> Self {
        let value = floor_ratio(self.value.mantissa(), o.value.mantissa(), self.value.scale());
        Truncated { value, places: self.places }
    }
    fn repr(&self) -> String {
        self.value.to_string()
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rationals(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| rational(x)).collect()
}

/// Sign helper for integers used by multiarc code.
pub fn pos_part(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

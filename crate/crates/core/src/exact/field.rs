//! Real number fields `Q(λ)` for a distinguished real root `λ` of an
//! irreducible monic integer polynomial, with exact signs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::decimal::{pow10, FixedDecimal};
use super::poly::IntPolynomial;
use super::roots::{isolate_real_roots, root_to_places, IsolatingInterval, SturmChain};
use crate::error::{Error, Result};

/// Numerical complex roots (Durand–Kerner); only used to propose factors that
/// are then checked exactly.
fn complex_roots(f: &IntPolynomial) -> Vec<Complex64> {
    let n = match f.degree() {
        Some(n) if n > 0 => n,
        _ => return vec![],
    };
    let lc = f.leading().to_f64().unwrap();
    let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap() / lc).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a);
    let seed = Complex64::new(0.4, 0.9);
    let mut zs: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= zs[i] - zs[j];
                }
            }
            let step = eval(zs[i]) / den;
            zs[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    zs
}

fn has_root_in(f: &IntPolynomial, iv: &IsolatingInterval) -> bool {
    if f.sign_at(&iv.lo).is_eq() || f.sign_at(&iv.hi).is_eq() {
        return true;
    }
    SturmChain::new(&f.squarefree_part()).count(&iv.lo, &iv.hi) > 0
}

/// The minimal polynomial of the root of squarefree `f` isolated by `iv`:
/// products of subsets of numerical roots are rounded to integer polynomials
/// and accepted only if they divide `f` exactly and vanish at the root.
pub fn minimal_polynomial(f: &IntPolynomial, iv: &IsolatingInterval) -> IntPolynomial {
    let f = f.squarefree_part();
    let n = f.degree().unwrap_or(0);
    if n <= 1 || n > 16 {
        return f;
    }
    let roots = complex_roots(&f);
    for size in 1..n {
        let mut best: Option<IntPolynomial> = None;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut prod = vec![Complex64::new(1.0, 0.0)];
            for (i, r) in roots.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
                    for (k, c) in prod.iter().enumerate() {
                        next[k + 1] += c;
                        next[k] -= c * r;
                    }
                    prod = next;
                }
            }
            if prod.iter().any(|c| c.im.abs() > 1e-6 || c.re.abs() > 1e15) {
                continue;
            }
            let g = IntPolynomial::new(prod.iter().map(|c| BigInt::from(c.re.round() as i64)).collect());
            if f.exact_div(&g).is_some() && has_root_in(&g, iv) {
                best = Some(g);
                break;
            }
        }
        if let Some(g) = best {
            return g;
        }
    }
    f
}

#[derive(Debug)]
pub struct NumberField {
    modulus: IntPolynomial,
    interval: IsolatingInterval,
    cache: Mutex<BTreeMap<usize, FixedDecimal>>,
}

impl NumberField {
    /// The field generated by the root of `f` isolated by `iv`; `f` is first
    /// reduced to the minimal polynomial of that root.
    pub fn new(f: &IntPolynomial, iv: &IsolatingInterval) -> Result<Arc<Self>> {
        let mut g = minimal_polynomial(f, iv);
        if g.leading().is_negative() {
            g = g.neg();
        }
        if !g.leading().is_one() {
            return Err(Error::Algebra(format!("generator polynomial {g} is not monic")));
        }
        let iv = isolate_real_roots(&g)
            .into_iter()
            .find(|r| r.lo < iv.hi && iv.lo < r.hi && has_root_in(&g, &intersect(r, iv)))
            .ok_or_else(|| Error::Algebra("root lost while reducing generator".into()))?;
        Ok(Arc::new(NumberField { modulus: g, interval: iv, cache: Mutex::new(BTreeMap::new()) }))
    }

    /// Field of the largest real root of `f`.
    pub fn largest_root(f: &IntPolynomial) -> Result<Arc<Self>> {
        let roots = isolate_real_roots(f);
        let iv = roots.first().ok_or_else(|| Error::Algebra(format!("{f} has no real roots")))?;
        NumberField::new(f, iv)
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    /// `λ` to `places` decimals, `|λ - x| <= 10^-places`.
    pub fn lambda_approx(&self, places: usize) -> FixedDecimal {
        let mut cache = self.cache.lock().unwrap();
        if let Some((_, x)) = cache.range(places..).next() {
            return x.truncate(places);
        }
        let x = root_to_places(&self.modulus, &self.interval, places);
        cache.insert(places, x.clone());
        x
    }
}

fn intersect(a: &IsolatingInterval, b: &IsolatingInterval) -> IsolatingInterval {
    IsolatingInterval { lo: a.lo.clone().max(b.lo.clone()), hi: a.hi.clone().min(b.hi.clone()) }
}

/// `num(λ) / den` with `den > 0` and `deg num < deg modulus`.
#[derive(Clone)]
pub struct FieldElem {
    field: Arc<NumberField>,
    num: IntPolynomial,
    den: BigInt,
}

impl PartialEq for FieldElem {
    fn eq(&self, o: &Self) -> bool {
        self.num == o.num && self.den == o.den
    }
}

impl Eq for FieldElem {}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/{} ~ {:.6}", self.num, self.den, self.to_f64())
    }
}

impl FieldElem {
    fn make(field: &Arc<NumberField>, num: IntPolynomial, den: BigInt) -> Self {
        let num = num.rem_monic(&field.modulus);
        let (num, den) = if den.is_negative() { (num.neg(), -den) } else { (num, den) };
        let g = num.content().gcd(&den);
        let (num, den) = if g.is_zero() || g.is_one() {
            (num, den)
        } else {
            (IntPolynomial::new(num.coeffs().iter().map(|c| c / &g).collect()), den / &g)
        };
        let den = if num.is_zero() { BigInt::one() } else { den };
        FieldElem { field: field.clone(), num, den }
    }

    pub fn from_int(field: &Arc<NumberField>, n: impl Into<BigInt>) -> Self {
        FieldElem::make(field, IntPolynomial::constant(n.into()), BigInt::one())
    }

    pub fn from_rational(field: &Arc<NumberField>, r: &BigRational) -> Self {
        FieldElem::make(field, IntPolynomial::constant(r.numer().clone()), r.denom().clone())
    }

    pub fn from_poly(field: &Arc<NumberField>, num: IntPolynomial, den: BigInt) -> Self {
        FieldElem::make(field, num, den)
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        FieldElem::make(field, IntPolynomial::x(), BigInt::one())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0
    }

    pub fn zero_like(&self) -> Self {
        FieldElem::from_int(&self.field, 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = self.num.scale(&o.den).add(&o.num.scale(&self.den));
        FieldElem::make(&self.field, num, &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        FieldElem { field: self.field.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        FieldElem::make(&self.field, self.num.mul(&o.num), &self.den * &o.den)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        FieldElem::make(&self.field, self.num.scale(k), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Algebra("division by zero".into()));
        }
        let (u, d) = inverse_mod(&self.num, &self.field.modulus)?;
        // 1 / (num/den) = den * u / d
        Ok(FieldElem::make(&self.field, u.scale(&self.den), d))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Enclosure `[lo, hi]` of the value, scaled by `10^places`, using `λ`
    /// to `places` decimals.
    fn enclosure(&self, places: usize) -> (BigInt, BigInt) {
        let x = self.field.lambda_approx(places);
        let s = pow10(places);
        let lo = x.mantissa() - BigInt::one();
        let hi = x.mantissa() + BigInt::one();
        // interval Horner on integers scaled by 10^places
        let mut acc = (BigInt::zero(), BigInt::zero());
        for c in self.num.coeffs().iter().rev() {
            let prods = [&acc.0 * &lo, &acc.0 * &hi, &acc.1 * &lo, &acc.1 * &hi];
            let mn = prods.iter().min().unwrap().div_floor(&s);
            let mx = -((-prods.iter().max().unwrap()).div_floor(&s));
            acc = (mn + c * &s, mx + c * &s);
        }
        (acc.0, acc.1)
    }

    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut places = 40;
        loop {
            let (lo, hi) = self.enclosure(places);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            places *= 2;
        }
    }

    pub fn cmp_value(&self, o: &Self) -> Ordering {
        self.sub(o).signum()
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclosure(30);
        let mid: BigInt = (lo + hi) / 2;
        let v = BigRational::new(mid, pow10(30) * &self.den);
        v.to_f64().unwrap_or(f64::NAN)
    }

    /// `floor(value * 10^places) / 10^places`.
    pub fn floor_decimal(&self, places: usize) -> FixedDecimal {
        let (lo, hi) = self.enclosure(places + 10);
        let d = &self.den * pow10(10);
        let mut n = lo.div_floor(&d);
        let nhi = hi.div_floor(&d);
        if n != nhi {
            // resolve the boundary exactly
            let cand = FieldElem::from_rational(&self.field, &BigRational::new(nhi.clone(), pow10(places)));
            n = if self.cmp_value(&cand).is_lt() { nhi - 1 } else { nhi };
        }
        FixedDecimal::new(n, places)
    }

    /// Numerator coefficients as strings over the common denominator.
    pub fn to_strings(&self) -> (Vec<String>, String) {
        (self.num.to_strings(), self.den.to_string())
    }
}

/// `(u, d)` with `a * u / d ≡ 1 (mod m)`, by the extended Euclidean algorithm
/// over the rationals.
fn inverse_mod(a: &IntPolynomial, m: &IntPolynomial) -> Result<(IntPolynomial, BigInt)> {
    type RP = Vec<BigRational>;
    fn to_rp(p: &IntPolynomial) -> RP {
        p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
    }
    fn trim(mut p: RP) -> RP {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }
    fn sub_mul(a: &RP, q: &RP, b: &RP) -> RP {
        let mut out = a.clone();
        for (i, qi) in q.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                if out.len() <= i + j {
                    out.resize(i + j + 1, BigRational::zero());
                }
                out[i + j] -= qi * bj;
            }
        }
        trim(out)
    }
    fn divmod(a: &RP, b: &RP) -> (RP, RP) {
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let c = r.last().unwrap() / b.last().unwrap();
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
            q[k] = c;
            r = trim(r);
        }
        (trim(q), r)
    }
    let (mut r0, mut r1) = (to_rp(m), trim(to_rp(a)));
    let (mut s0, mut s1): (RP, RP) = (vec![], vec![BigRational::one()]);
    while r1.len() > 1 {
        let (q, r) = divmod(&r0, &r1);
        let s = sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r1.is_empty() {
        return Err(Error::Algebra("element not invertible: generator polynomial is reducible".into()));
    }
    let c = r1[0].clone();
    let inv: RP = s1.iter().map(|x| x / &c).collect();
    let den = inv.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let num =
        IntPolynomial::new(inv.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect());
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn golden_square_field() {
        let k = NumberField::largest_root(&p(&[1, -3, 1])).unwrap();
        let l = FieldElem::generator(&k);
        // λ + 1/λ = 3
        let s = l.add(&l.inv().unwrap());
        assert_eq!(s, FieldElem::from_int(&k, 3));
        assert_eq!(l.cmp_value(&FieldElem::from_int(&k, 2)), Ordering::Greater);
        assert_eq!(l.floor_decimal(10).to_string(), "2.6180339887");
    }

    #[test]
    fn reducible_input_reduces_to_minimal() {
        // (x^2 - 3x + 1)(x - 1)(x + 2)
        let f = p(&[1, -3, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let k = NumberField::largest_root(&f).unwrap();
        assert_eq!(k.modulus(), &p(&[1, -3, 1]));
        let g = minimal_polynomial(&f, &isolate_real_roots(&f)[1]);
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn exact_signs_of_tiny_values() {
        let k = NumberField::largest_root(&p(&[-2, 0, 1])).unwrap();
        let r = FieldElem::generator(&k);
        // sqrt2 - 665857/470832 is about -1.6e-12
        let c = FieldElem::from_rational(&k, &BigRational::new(665857.into(), 470832.into()));
        assert_eq!(r.cmp_value(&c), Ordering::Less);
        assert_eq!(r.mul(&r).cmp_value(&FieldElem::from_int(&k, 2)), Ordering::Equal);
    }
}

//! Fraction-free (Bareiss) determinants over integral domains with exact
//! division, and the polynomial constructions built on them: characteristic
//! polynomials and resultants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;

pub trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % o)));
        self / o
    }
}

impl ExactRing for IntPolynomial {
    fn zero() -> Self {
        IntPolynomial::zero()
    }
    fn one() -> Self {
        IntPolynomial::constant(1)
    }
    fn is_zero(&self) -> bool {
        IntPolynomial::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        IntPolynomial::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        IntPolynomial::sub(self, o)
    }
    fn neg(&self) -> Self {
        IntPolynomial::neg(self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self.exact_div(o).expect("Bareiss division must be exact")
    }
}

/// Determinant by Bareiss elimination.
pub fn det<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// `det(x I - a)` for a square integer matrix.
pub fn charpoly(a: &[Vec<BigInt>]) -> IntPolynomial {
    let n = a.len();
    let m: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPolynomial::constant(-a[i][j].clone());
                    if i == j {
                        c.add(&IntPolynomial::x())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    det(m)
}

/// `Res_y(a(y), b(x, y))` where `b` is given by its `y`-coefficients
/// (`b[j]` multiplies `y^j`), each a polynomial in `x`.
pub fn resultant_y(a: &IntPolynomial, b: &[IntPolynomial]) -> IntPolynomial {
    let m = a.degree().expect("nonzero a");
    let mut b: Vec<IntPolynomial> = b.to_vec();
    while b.last().is_some_and(|c| c.is_zero()) {
        b.pop();
    }
    if b.is_empty() {
        return IntPolynomial::zero();
    }
    let n = b.len() - 1;
    let size = m + n;
    if size == 0 {
        return IntPolynomial::constant(1);
    }
    let mut rows = Vec::with_capacity(size);
    // n rows of a, m rows of b, highest coefficient first
    for r in 0..n {
        let mut row = vec![IntPolynomial::zero(); size];
        for j in 0..=m {
            row[r + j] = IntPolynomial::constant(a.coeff(m - j));
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![IntPolynomial::zero(); size];
        for j in 0..=n {
            row[r + j] = b[n - j].clone();
        }
        rows.push(row);
    }
    det(rows)
}

/// Integer resultant of two univariate polynomials.
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    let bs: Vec<IntPolynomial> = b.coeffs().iter().map(|c| IntPolynomial::constant(c.clone())).collect();
    resultant_y(a, &bs).coeff(0)
}

/// A polynomial vanishing at `α + β` for every root `α` of `f`, `β` of `g`:
/// `Res_y(f(y), g(x - y))`.
pub fn poly_for_sum(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    // g(x - y) = sum_k g_k (x - y)^k, expanded in powers of y
    let n = g.degree().unwrap_or(0);
    let mut by = vec![IntPolynomial::zero(); n + 1];
    for (k, gk) in g.coeffs().iter().enumerate() {
        // (x - y)^k = sum_j C(k, j) x^(k-j) (-y)^j
        let mut binom = BigInt::from(1);
        for j in 0..=k {
            let sign = if j % 2 == 0 { BigInt::from(1) } else { -BigInt::from(1) };
            let term = IntPolynomial::constant(gk * &binom * sign).shift(k - j);
            by[j] = by[j].add(&term);
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    resultant_y(f, &by)
}

/// A polynomial vanishing at `α β`: `Res_y(f(y), y^n g(x / y))`.
pub fn poly_for_product(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let n = g.degree().unwrap_or(0);
    // y^n g(x/y) = sum_k g_k x^k y^(n-k)
    let mut by = vec![IntPolynomial::zero(); n + 1];
    for (k, gk) in g.coeffs().iter().enumerate() {
        by[n - k] = IntPolynomial::constant(gk.clone()).shift(k);
    }
    resultant_y(f, &by)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn determinant_small() {
        let m = ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(m), BigInt::from(18));
        let z = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(z), BigInt::from(-1));
        let s = ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(det(s), BigInt::from(0));
    }

    #[test]
    fn charpoly_of_cat_map() {
        assert_eq!(charpoly(&ints(&[&[2, 1], &[1, 1]])), p(&[1, -3, 1]));
        assert_eq!(charpoly(&ints(&[&[1, 1], &[-1, 0]])), p(&[1, -1, 1]));
    }

    #[test]
    fn resultants() {
        // Res(x^2 - 2, x - 1) = 1 - 2 = -1
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-1, 1])), BigInt::from(-1));
        // sqrt2 + sqrt3 satisfies x^4 - 10x^2 + 1
        let s = poly_for_sum(&p(&[-2, 0, 1]), &p(&[-3, 0, 1]));
        assert_eq!(s.primitive(), p(&[1, 0, -10, 0, 1]));
        // sqrt2 * sqrt3 satisfies (x^2 - 6)^2
        let q = poly_for_product(&p(&[-2, 0, 1]), &p(&[-3, 0, 1]));
        assert_eq!(q.primitive(), p(&[36, 0, -12, 0, 1]));
    }

    #[test]
    fn resultant_y_linear_in_x() {
        // v = y / 1 where y^2 - 3y + 1 = 0: Res_y(y^2-3y+1, x - y) = x^2 - 3x + 1
        let r = resultant_y(&p(&[1, -3, 1]), &[p(&[0, 1]), p(&[-1])]);
        assert_eq!(r.primitive(), p(&[1, -3, 1]));
    }
}

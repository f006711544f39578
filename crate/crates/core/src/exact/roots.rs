//! Real root isolation by Sturm sequences and Newton refinement to a
//! requested number of decimal places, all in exact integer arithmetic.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::decimal::{pow10, FixedDecimal};
use super::poly::IntPolynomial;

/// Sturm chain of a squarefree polynomial, with every member scaled by a
/// positive constant (signs are what matter).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(f: &IntPolynomial) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let b = &chain[n - 1];
            let lc = b.leading();
            let r = chain[n - 2].pseudo_rem(b);
            // prem multiplies by lc^k; undo a negative factor to keep -rem's sign
            let k = chain[n - 2].degree().unwrap() + 1 - b.degree().unwrap();
            let neg_factor = lc.is_negative() && k % 2 == 1;
            let mut next = if neg_factor { r } else { r.neg() };
            let c = next.content();
            if !c.is_zero() {
                next = IntPolynomial::new(next.coeffs().iter().map(|x| x / &c).collect());
            }
            chain.push(next);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }
}

/// Cauchy bound: every real root lies in `(-B, B)`.
pub fn root_bound(f: &IntPolynomial) -> BigInt {
    let lc = f.leading().abs();
    let m = f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    m / lc + BigInt::from(2)
}

fn mid(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// A point strictly inside `(a, b)` that is not a root of `f`.
fn split_point(f: &IntPolynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let m = mid(a, b);
    if !f.sign_at(&m).is_eq() {
        return m;
    }
    let mut k = BigInt::from(3);
    loop {
        let c = a + (b - a) / BigRational::from_integer(k.clone());
        if !f.sign_at(&c).is_eq() {
            return c;
        }
        k += 1;
    }
}

/// An open interval `(lo, hi)` containing exactly one root of a squarefree
/// polynomial, with neither endpoint a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

/// All real roots of squarefree `f`, in decreasing order.
pub fn isolate_real_roots(f: &IntPolynomial) -> Vec<IsolatingInterval> {
    let sf = f.squarefree_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sf);
    let b = BigRational::from_integer(root_bound(&sf));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(IsolatingInterval { lo, hi });
            continue;
        }
        // endpoints are never roots: the bound is strict and splits avoid roots
        let m = split_point(&sf, &lo, &hi);
        stack.push((lo, m.clone()));
        stack.push((m, hi));
    }
    out.sort_by(|a, b| b.lo.cmp(&a.lo));
    out
}

/// Shrink an isolating interval by bisection until its width is at most `w`.
pub fn refine(f: &IntPolynomial, iv: &IsolatingInterval, w: &BigRational) -> IsolatingInterval {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let slo = f.sign_at(&lo);
    while &(&hi - &lo) > w {
        let m = mid(&lo, &hi);
        let sm = f.sign_at(&m);
        if sm.is_eq() {
            // exact rational root: collapse to a tiny interval around it
            let eps = (&hi - &lo) / BigRational::from_integer(BigInt::from(1u64 << 20));
            return IsolatingInterval { lo: &m - &eps, hi: &m + &eps };
        }
        if sm == slo {
            lo = m;
        } else {
            hi = m;
        }
    }
    IsolatingInterval { lo, hi }
}

/// A decimal `x` at scale `places` with `|root - x| <= 10^-places`, for the
/// unique root of squarefree `f` inside `iv`.
pub fn root_to_places(f: &IntPolynomial, iv: &IsolatingInterval, places: usize) -> FixedDecimal {
    let start = 24usize;
    let w = BigRational::new(BigInt::one(), pow10(start));
    let iv = refine(f, iv, &w);
    let center = mid(&iv.lo, &iv.hi);
    let mut x = FixedDecimal::from_rational_floor(&center, start);
    let deg = f.degree().unwrap();
    let df = f.derivative();
    // guard digits against truncation inside Horner
    let mag = x.abs().to_f64().max(1.0).log10().ceil() as usize;
    let guard = 8 + deg * (mag + 1) + f.height_ceil().unwrap_or(0);
    let mut prec = start;
    while prec < places + 4 {
        let next = (prec * 2).min(places + 4);
        let work = next + guard;
        let xs = x.rescale_up(work);
        let fx = f.horner_eval(&xs);
        let dfx = df.horner_eval(&xs);
        if dfx.is_zero() {
            break;
        }
        let step = FixedDecimal::new(fx.mantissa() * pow10(work) / dfx.mantissa(), work);
        x = (&xs - &step).truncate(next);
        prec = next;
    }
    let x = x.truncate(places);
    certify_or_bisect(f, &iv, x, places)
}

fn certify_or_bisect(f: &IntPolynomial, iv: &IsolatingInterval, x: FixedDecimal, places: usize) -> FixedDecimal {
    let ulp = FixedDecimal::ulp(places);
    let lo = (&x - &ulp).to_rational();
    let hi = (&x + &ulp).to_rational();
    let inside = lo >= iv.lo && hi <= iv.hi;
    let sl = f.sign_at(&lo);
    let sh = f.sign_at(&hi);
    if inside && (sl != sh || sl.is_eq() || sh.is_eq() || f.sign_at(&x.to_rational()).is_eq()) {
        return x;
    }
    // Newton drifted; fall back to plain bisection
    let w = BigRational::new(BigInt::one(), pow10(places));
    let r = refine(f, iv, &w);
    FixedDecimal::from_rational_floor(&r.lo, places)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn rational_root_on_a_bisection_point() {
        // (x-1)(x^2-5x+1): bisection from the bound hits 1 exactly
        let f = p(&[-1, 6, -6, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        let one = BigRational::from_integer(BigInt::from(1));
        assert!(roots.iter().any(|r| r.lo < one && one < r.hi));
    }

    #[test]
    fn counts_roots() {
        // (x-1)(x-2)(x+3)
        let f = p(&[-1, 1]).mul(&p(&[-2, 1])).mul(&p(&[3, 1]));
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        assert!(roots[0].lo < BigRational::from_integer(2.into()) && roots[0].hi > BigRational::from_integer(2.into()));
        assert!(isolate_real_roots(&p(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn golden_ratio_square_digits() {
        let f = p(&[1, -3, 1]);
        let roots = isolate_real_roots(&f);
        let x = root_to_places(&f, &roots[0], 60);
        assert_eq!(x.truncate(50).to_string(), "2.61803398874989484820458683436563811772030917980576");
        let small = root_to_places(&f, &roots[1], 30);
        assert!(small.to_string().starts_with("0.38196601125010515179541316563"));
    }

    #[test]
    fn rational_root_is_exact() {
        let f = p(&[-1, 2]);
        let roots = isolate_real_roots(&f);
        let x = root_to_places(&f, &roots[0], 10);
        assert!((x.to_f64() - 0.5).abs() < 1e-9);
    }
}

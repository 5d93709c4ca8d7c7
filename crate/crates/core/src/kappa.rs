//! Exact arithmetic in the field Q(kappa) of rational functions in one
//! formal parameter kappa, with arbitrary-precision rational coefficients.
//!
//! Every coefficient that appears anywhere in this crate lives here.  A
//! [`KField`] value is a canonical fraction `num/den` of polynomials in
//! kappa; canonicalization makes equality a structural comparison, so all
//! identity tests in the crate are bit-exact.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Shorthand for a small rational constant.
pub fn qq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer as a `BigRational`.
pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense univariate polynomial over Q, constant term first.
///
/// Invariant: the highest-degree stored coefficient is nonzero; the zero
/// polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    /// The polynomial `a0 + a1*kappa`.
    pub fn linear(a0: BigRational, a1: BigRational) -> Self {
        RatPoly::from_coeffs(vec![a0, a1])
    }

    /// Build from a coefficient list (constant term first), trimming
    /// trailing zeros to restore the canonical-zero invariant.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a + b);
        }
        RatPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (RatPoly::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![BigRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    let val = &c * b;
                    rem[k + j] -= val;
                }
            }
            quot[k] = c;
        }
        (RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic gcd over Q[kappa]; `gcd(0,0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            // Keeping the running remainder monic tames coefficient growth.
            let monic = b.scale(&b.leading().unwrap().recip());
            let (_, r) = a.div_rem(&monic);
            a = monic;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.scale(&a.leading().unwrap().recip())
        }
    }

    /// Positive rational `c` with `self = c * (primitive integer polynomial)`.
    /// Zero polynomial has content zero.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// kappa -> -kappa: negate the odd-power coefficients.
    pub fn subst_neg(&self) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}

/// Canonical element of Q(kappa).
///
/// Canonical form: `num` and `den` are integer-coefficient polynomials with
/// `gcd(num, den) = 1` over Q[kappa], the integer contents of `num` and
/// `den` are coprime, and `den` has a positive leading coefficient.  The
/// zero element is `0/1`.  This fixes the representative uniquely, so
/// `PartialEq` is exact mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KField {
    num: RatPoly,
    den: RatPoly,
}

impl KField {
    /// Canonicalize `num/den`.  This is the only constructor that touches
    /// non-canonical data; every arithmetic result funnels through it.
    pub fn new(num: RatPoly, den: RatPoly) -> Result<KField> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(KField {
                num: RatPoly::zero(),
                den: RatPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        // Scale so both polynomials are integral with coprime contents.
        let cn = num.content();
        let cd = den.content();
        let ratio = cn / cd; // p/q in lowest terms
        let p = BigRational::from_integer(ratio.numer().clone());
        let q = BigRational::from_integer(ratio.denom().clone());
        let mut num = num.scale(&(&p / &num.content()));
        let mut den = den.scale(&(&q / &den.content()));
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(KField { num, den })
    }

    pub fn zero() -> KField {
        KField {
            num: RatPoly::zero(),
            den: RatPoly::one(),
        }
    }

    pub fn one() -> KField {
        KField {
            num: RatPoly::one(),
            den: RatPoly::one(),
        }
    }

    /// The generator kappa itself.
    pub fn kappa() -> KField {
        KField::new(
            RatPoly::linear(BigRational::zero(), BigRational::one()),
            RatPoly::one(),
        )
        .unwrap()
    }

    pub fn from_int(n: i64) -> KField {
        KField::from_rational(qi(n))
    }

    pub fn from_rational(r: BigRational) -> KField {
        KField::new(RatPoly::constant(r), RatPoly::one()).unwrap()
    }

    /// The polynomial `a0 + a1*kappa` as a field element.
    pub fn linear_int(a0: i64, a1: i64) -> KField {
        KField::new(RatPoly::linear(qi(a0), qi(a1)), RatPoly::one()).unwrap()
    }

    /// `a0 + a1*kappa` with rational parts.
    pub fn linear(a0: BigRational, a1: BigRational) -> KField {
        KField::new(RatPoly::linear(a0, a1), RatPoly::one()).unwrap()
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &KField::one()
    }

    pub fn add(&self, other: &KField) -> KField {
        KField::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .unwrap()
    }

    pub fn sub(&self, other: &KField) -> KField {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KField {
        KField {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &KField) -> KField {
        KField::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn scale_rat(&self, c: &BigRational) -> KField {
        KField::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    pub fn div(&self, other: &KField) -> Result<KField> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        KField::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<KField> {
        KField::one().div(self)
    }

    pub fn pow(&self, n: usize) -> KField {
        let mut acc = KField::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Rising factorial `x (x+1) ... (x+n-1)`; `n = 0` gives 1.
    pub fn rising(&self, n: usize) -> KField {
        let mut acc = KField::one();
        for t in 0..n {
            acc = acc.mul(&self.add(&KField::from_int(t as i64)));
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Evaluation plus the genericity flag for an ambient size `n`:
    /// kappa0 is non-generic when it equals m/n' for integers m, n' with
    /// 1 <= n' <= n, i.e. when its reduced denominator is at most `n`.
    pub fn eval_checked(&self, x: &BigRational, ambient_n: usize) -> Result<(BigRational, bool)> {
        let v = self.eval(x)?;
        let generic = x.denom() > &BigInt::from(ambient_n as i64);
        Ok((v, generic))
    }

    /// kappa -> -kappa as a field endomorphism.
    pub fn subst_neg_kappa(&self) -> KField {
        KField::new(self.num.subst_neg(), self.den.subst_neg()).unwrap()
    }

    /// The constant value if this element is free of kappa.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.den.degree() == Some(0) && self.num.degree().map_or(true, |d| d == 0) {
            let d = self.den.leading().unwrap();
            let n = self
                .num
                .leading()
                .cloned()
                .unwrap_or_else(BigRational::zero);
            Some(n / d)
        } else {
            None
        }
    }

    /// Product over an iterator.
    pub fn product<I: IntoIterator<Item = KField>>(iter: I) -> KField {
        iter.into_iter().fold(KField::one(), |a, b| KField::mul(&a, &b))
    }

    /// Sum over an iterator.
    pub fn sum<I: IntoIterator<Item = KField>>(iter: I) -> KField {
        iter.into_iter().fold(KField::zero(), |a, b| KField::add(&a, &b))
    }
}

// Operator sugar on references only; owned impls would shadow the
// inherent `&self` methods during method resolution.
macro_rules! impl_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for &KField {
            type Output = KField;
            fn $method(self, rhs: &KField) -> KField {
                KField::$inner(self, rhs)
            }
        }
    };
}

impl_binop!(Add, add, add);
impl_binop!(Sub, sub, sub);
impl_binop!(Mul, mul, mul);

impl Div for &KField {
    type Output = KField;
    fn div(self, rhs: &KField) -> KField {
        KField::div(self, rhs).expect("division by zero field element")
    }
}

impl Neg for &KField {
    type Output = KField;
    fn neg(self) -> KField {
        KField::neg(self)
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_poly(p: &RatPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let var = match i {
            0 => String::new(),
            1 => "κ".into(),
            _ => format!("κ^{}", i),
        };
        let body = if i > 0 && mag.is_one() {
            var
        } else if var.is_empty() {
            fmt_rational(&mag)
        } else {
            format!("{}{}", fmt_rational(&mag), var)
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() {
                format!("-{}", body)
            } else {
                body
            });
        } else if c.is_negative() {
            parts.push(format!(" - {}", body));
        } else {
            parts.push(format!(" + {}", body));
        }
    }
    parts.concat()
}

impl fmt::Display for KField {
    /// Renders `num/den` with kappa spelled out; integer content of the
    /// numerator is factored to the front, no polynomial factorization.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let cn = self.num.content();
        let prim = self.num.scale(&(BigRational::one() / &cn));
        let num_str = if self.num.degree() == Some(0) {
            fmt_rational(self.num.leading().unwrap())
        } else if cn.is_one() {
            format!("({})", fmt_poly(&self.num))
        } else {
            format!("{}({})", fmt_rational(&cn), fmt_poly(&prim))
        };
        if self.den == RatPoly::one() {
            write!(f, "{}", num_str)
        } else if self.den.degree() == Some(0) {
            write!(f, "{}/{}", num_str, fmt_rational(self.den.leading().unwrap()))
        } else {
            write!(f, "{}/({})", num_str, fmt_poly(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a0: i64, a1: i64) -> KField {
        KField::linear_int(a0, a1)
    }

    #[test]
    fn normalize_cancels_gcd() {
        // 2k^2 / 4k  ->  k / 2
        let num = RatPoly::from_coeffs(vec![qi(0), qi(0), qi(2)]);
        let den = RatPoly::from_coeffs(vec![qi(0), qi(4)]);
        let f = KField::new(num, den).unwrap();
        assert_eq!(f, KField::kappa().scale_rat(&qq(1, 2)));
        assert_eq!(f.num(), &RatPoly::linear(qi(0), qi(1)));
        assert_eq!(f.den(), &RatPoly::constant(qi(2)));
    }

    #[test]
    fn normalize_zero() {
        let f = KField::new(RatPoly::zero(), RatPoly::linear(qi(1), qi(1))).unwrap();
        assert!(f.is_zero());
        assert_eq!(f, KField::zero());
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        assert_eq!(
            KField::new(RatPoly::one(), RatPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn normalize_scale_invariance() {
        // kf_normalize(a g, b g) = kf_normalize(a, b)
        let a = RatPoly::linear(qi(1), qi(-2));
        let b = RatPoly::linear(qi(3), qi(5));
        let g = RatPoly::from_coeffs(vec![qq(2, 3), qi(0), qi(7)]);
        let lhs = KField::new(a.mul(&g), b.mul(&g)).unwrap();
        let rhs = KField::new(a, b).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalize_sign_and_roundtrip() {
        // (1-2k)/(-2+4k) = -1/2; check num = result.num * (den/result.den).
        let num = RatPoly::linear(qi(1), qi(-2));
        let den = RatPoly::linear(qi(-2), qi(4));
        let f = KField::new(num.clone(), den.clone()).unwrap();
        assert_eq!(f, KField::from_rational(qq(-1, 2)));
        assert!(f.den().leading().unwrap().is_positive());
        let cofactor = den.div_exact(f.den());
        assert_eq!(num, f.num().mul(&cofactor));
    }

    #[test]
    fn canonical_idempotence() {
        let f = lin(1, -3).mul(&lin(1, 2)).div(&lin(1, 1).mul(&lin(1, -2))).unwrap();
        let again = KField::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn field_identities() {
        let a = lin(1, -2).div(&lin(3, 1)).unwrap();
        assert_eq!(a.add(&KField::zero()), a);
        let inv_times = a.inv().unwrap().mul(&a);
        assert!(inv_times.is_one());
        // (1/(1-2k)) * (1-2k) = 1
        let b = KField::one().div(&lin(1, -2)).unwrap();
        assert!(b.mul(&lin(1, -2)).is_one());
    }

    #[test]
    fn expand_and_rereduce_matches_at_sample_points() {
        // (1-3k)(1+2k)(1-k) / ((1+k)(1-2k)) rebuilt from expanded parts.
        let f = lin(1, -3)
            .mul(&lin(1, 2))
            .mul(&lin(1, -1))
            .div(&lin(1, 1).mul(&lin(1, -2)))
            .unwrap();
        let expanded = KField::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, expanded);
        // Five fixed rational sample points avoiding the poles -1, 1/2.
        for (p, q) in [(2, 7), (-3, 5), (1, 11), (5, 3), (-7, 2)] {
            let x = qq(p, q);
            let direct = (qi(1) - qi(3) * &x)
                * (qi(1) + qi(2) * &x)
                * (qi(1) - &x)
                / ((qi(1) + &x) * (qi(1) - qi(2) * &x));
            assert_eq!(f.eval(&x).unwrap(), direct);
        }
        // Value at kappa = 0 is 1.
        assert_eq!(f.eval(&qi(0)).unwrap(), qi(1));
    }

    #[test]
    fn eval_pole_and_genericity() {
        let f = KField::one().div(&lin(1, -2)).unwrap();
        assert_eq!(f.eval(&qq(1, 2)), Err(Error::PoleAtPoint));
        let g = KField::kappa().div(&lin(1, 1)).unwrap();
        assert_eq!(g.eval(&qq(1, 3)).unwrap(), qq(1, 4));
        // 1/3 is non-generic for N >= 3, generic for N = 2.
        assert!(!g.eval_checked(&qq(1, 3), 3).unwrap().1);
        assert!(g.eval_checked(&qq(1, 3), 2).unwrap().1);
        // kappa = 0 has denominator 1: never generic.
        assert!(!g.eval_checked(&qi(0), 2).unwrap().1);
    }

    #[test]
    fn rising_factorial() {
        assert!(lin(1, 1).rising(0).is_one());
        let r = lin(1, -2).rising(2);
        assert_eq!(r, lin(1, -2).mul(&lin(2, -2)));
        // (1 + 3k)(2 + 3k)(3 + 3k) at k = 1/5 is 8/5 * 13/5 * 18/5.
        let r3 = lin(1, 3).rising(3);
        assert_eq!(r3.eval(&qq(1, 5)).unwrap(), qq(8, 5) * qq(13, 5) * qq(18, 5));
    }

    #[test]
    fn subst_neg_kappa_involution() {
        let f = lin(1, -3).div(&lin(2, 5)).unwrap();
        let g = f.subst_neg_kappa();
        assert_eq!(g.subst_neg_kappa(), f);
        assert_eq!(g.eval(&qq(1, 3)).unwrap(), f.eval(&qq(-1, 3)).unwrap());
    }

    #[test]
    fn display_forms() {
        assert_eq!(KField::zero().to_string(), "0");
        assert_eq!(lin(1, -2).to_string(), "(1 - 2κ)");
        let f = lin(3, -6).div(&lin(1, 1)).unwrap();
        assert_eq!(f.to_string(), "3(1 - 2κ)/(1 + κ)");
    }
}

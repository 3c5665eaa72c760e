//! The default scalar: complex numbers with arbitrary-precision rational
//! real and imaginary parts. All field operations are exact, so algebra
//! identities become decidable equalities.

use super::radical::RadicalSum;
use super::{parse_rational, render_rational, RealValue, Scalar};
use crate::error::Error;
use num::complex::Complex;
use num::rational::BigRational;
use num::{One, Zero};
use serde_json::json;
use std::cmp::Ordering;

/// Complex number over exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactScalar(pub Complex<BigRational>);

impl ExactScalar {
    pub fn re(&self) -> &BigRational {
        &self.0.re
    }

    pub fn im(&self) -> &BigRational {
        &self.0.im
    }

    /// |z|² as an exact rational.
    pub fn norm_sqr_rational(&self) -> BigRational {
        &self.0.re * &self.0.re + &self.0.im * &self.0.im
    }
}

impl Scalar for ExactScalar {
    type Real = RadicalSum;

    const MODE: &'static str = "exact";

    fn zero() -> Self {
        ExactScalar(Complex::new(BigRational::zero(), BigRational::zero()))
    }

    fn one() -> Self {
        ExactScalar(Complex::new(BigRational::one(), BigRational::zero()))
    }

    fn i() -> Self {
        ExactScalar(Complex::new(BigRational::zero(), BigRational::one()))
    }

    fn from_rational(re: &BigRational, im: &BigRational) -> Self {
        ExactScalar(Complex::new(re.clone(), im.clone()))
    }

    fn add(&self, other: &Self) -> Self {
        ExactScalar(Complex::new(&self.0.re + &other.0.re, &self.0.im + &other.0.im))
    }

    fn sub(&self, other: &Self) -> Self {
        ExactScalar(Complex::new(&self.0.re - &other.0.re, &self.0.im - &other.0.im))
    }

    fn mul(&self, other: &Self) -> Self {
        let re = &self.0.re * &other.0.re - &self.0.im * &other.0.im;
        let im = &self.0.re * &other.0.im + &self.0.im * &other.0.re;
        ExactScalar(Complex::new(re, im))
    }

    fn neg(&self) -> Self {
        ExactScalar(Complex::new(-self.0.re.clone(), -self.0.im.clone()))
    }

    fn conj(&self) -> Self {
        ExactScalar(Complex::new(self.0.re.clone(), -self.0.im.clone()))
    }

    fn scale(&self, r: &BigRational) -> Self {
        ExactScalar(Complex::new(&self.0.re * r, &self.0.im * r))
    }

    fn is_zero(&self) -> bool {
        self.0.re.is_zero() && self.0.im.is_zero()
    }

    fn modulus(&self) -> RadicalSum {
        RadicalSum::sqrt_of_rational(&self.norm_sqr_rational())
    }

    fn modulus_sqr(&self) -> RadicalSum {
        RadicalSum::from_rational(&self.norm_sqr_rational())
    }

    fn modulus_pow(&self, p: u32) -> RadicalSum {
        let m2 = self.norm_sqr_rational();
        let half = num::pow::pow(m2.clone(), (p / 2) as usize);
        if p % 2 == 0 {
            RadicalSum::from_rational(&half)
        } else {
            RadicalSum::sqrt_term(half, m2)
        }
    }

    fn extremal_pairing_term(&self) -> RadicalSum {
        // z·conj(z)/|z| = |z|²·sqrt(1/|z|²), kept in that form so the class
        // merge in RadicalSum must reconcile it with the sqrt(|z|²) route.
        let m2 = self.norm_sqr_rational();
        if m2.is_zero() {
            return RadicalSum::zero();
        }
        RadicalSum::sqrt_term(m2.clone(), m2.recip())
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn to_json(&self) -> serde_json::Value {
        json!({
            "re": render_rational(&self.0.re),
            "im": render_rational(&self.0.im),
        })
    }

    fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let field = |key: &str| -> Result<BigRational, Error> {
            match v.get(key) {
                Some(serde_json::Value::String(s)) => parse_rational(s),
                Some(serde_json::Value::Number(n)) if n.is_i64() => Ok(BigRational::from(
                    num::BigInt::from(n.as_i64().unwrap_or_default()),
                )),
                Some(other) => Err(Error::parse(
                    format!("scalar field '{key}'"),
                    format!("expected \"p/q\" string, got {other}"),
                )),
                None => Ok(BigRational::zero()),
            }
        };
        Ok(ExactScalar(Complex::new(field("re")?, field("im")?)))
    }

    fn render(&self) -> String {
        if self.0.im.is_zero() {
            render_rational(&self.0.re)
        } else if self.0.re.is_zero() {
            format!("{}i", render_rational(&self.0.im))
        } else {
            format!("{} + {}i", render_rational(&self.0.re), render_rational(&self.0.im))
        }
    }
}

impl RealValue for RadicalSum {
    fn zero() -> Self {
        RadicalSum::zero()
    }

    fn from_rational(r: &BigRational) -> Self {
        RadicalSum::from_rational(r)
    }

    fn add(&self, other: &Self) -> Self {
        RadicalSum::add(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        RadicalSum::mul(self, other)
    }

    fn scale(&self, r: &BigRational) -> Self {
        RadicalSum::scale(self, r)
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }

    fn nth_root(&self, p: u32) -> Option<Self> {
        match p {
            1 => Some(self.clone()),
            2 => self.as_rational().map(|r| RadicalSum::sqrt_of_rational(&r)),
            _ => None,
        }
    }

    fn is_zero(&self) -> bool {
        RadicalSum::is_zero(self)
    }

    fn to_f64(&self) -> f64 {
        RadicalSum::to_f64(self)
    }

    fn render(&self) -> String {
        RadicalSum::render(self)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn approx_le(&self, other: &Self, _tol: f64) -> bool {
        self.cmp_exact(other) != Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::small_rational as rat;

    fn sc(re: (i64, i64), im: (i64, i64)) -> ExactScalar {
        ExactScalar::from_rational(&rat(re.0, re.1), &rat(im.0, im.1))
    }

    #[test]
    fn field_ops_are_exact() {
        let a = sc((1, 3), (2, 5));
        let b = sc((-4, 7), (1, 2));
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        assert_eq!(ab, ba);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn modulus_of_gaussian_integers() {
        // |3| + |4i| = 7 exactly
        let total = sc((3, 1), (0, 1)).modulus().add(&sc((0, 1), (4, 1)).modulus());
        assert_eq!(total, RadicalSum::from_rational(&rat(7, 1)));
    }

    #[test]
    fn modulus_pow_odd_and_even() {
        let z = sc((1, 1), (1, 1)); // |z|^2 = 2
        assert_eq!(z.modulus_pow(2), RadicalSum::from_rational(&rat(2, 1)));
        // |z|^3 = 2*sqrt(2)
        assert_eq!(z.modulus_pow(3), RadicalSum::sqrt_term(rat(2, 1), rat(2, 1)));
    }

    #[test]
    fn json_round_trip() {
        let z = sc((-3, 4), (5, 9));
        let v = z.to_json();
        assert_eq!(ExactScalar::from_json(&v).unwrap(), z);
        assert_eq!(v["re"], "-3/4");
    }
}

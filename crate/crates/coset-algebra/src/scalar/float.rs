//! f64 realization of the scalar interface, for the approximate mode.

use super::{RealValue, Scalar};
use crate::error::Error;
use num::complex::Complex64;
use num::rational::BigRational;
use num::ToPrimitive;
use serde_json::json;
use std::cmp::Ordering;

/// Complex f64 scalar. Identities hold up to the configured tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatScalar(pub Complex64);

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Scalar for FloatScalar {
    type Real = f64;

    const MODE: &'static str = "float";

    fn zero() -> Self {
        FloatScalar(Complex64::new(0.0, 0.0))
    }

    fn one() -> Self {
        FloatScalar(Complex64::new(1.0, 0.0))
    }

    fn i() -> Self {
        FloatScalar(Complex64::new(0.0, 1.0))
    }

    fn from_rational(re: &BigRational, im: &BigRational) -> Self {
        FloatScalar(Complex64::new(rat_f64(re), rat_f64(im)))
    }

    fn add(&self, other: &Self) -> Self {
        FloatScalar(self.0 + other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        FloatScalar(self.0 - other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        FloatScalar(self.0 * other.0)
    }

    fn neg(&self) -> Self {
        FloatScalar(-self.0)
    }

    fn conj(&self) -> Self {
        FloatScalar(self.0.conj())
    }

    fn scale(&self, r: &BigRational) -> Self {
        FloatScalar(self.0 * rat_f64(r))
    }

    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn modulus(&self) -> f64 {
        self.0.norm()
    }

    fn modulus_sqr(&self) -> f64 {
        self.0.norm_sqr()
    }

    fn modulus_pow(&self, p: u32) -> f64 {
        self.0.norm().powi(p as i32)
    }

    fn extremal_pairing_term(&self) -> f64 {
        let m = self.0.norm();
        if m == 0.0 {
            return 0.0;
        }
        (self.0 * (self.0.conj() / m)).re
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.0.re - other.0.re).abs() <= tol && (self.0.im - other.0.im).abs() <= tol
    }

    fn to_json(&self) -> serde_json::Value {
        json!({ "re": self.0.re, "im": self.0.im })
    }

    fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let field = |key: &str| -> Result<f64, Error> {
            match v.get(key) {
                Some(serde_json::Value::Number(n)) => Ok(n.as_f64().unwrap_or(f64::NAN)),
                Some(serde_json::Value::String(s)) => {
                    super::parse_rational(s).map(|r| rat_f64(&r))
                }
                Some(other) => Err(Error::parse(
                    format!("scalar field '{key}'"),
                    format!("expected number, got {other}"),
                )),
                None => Ok(0.0),
            }
        };
        Ok(FloatScalar(Complex64::new(field("re")?, field("im")?)))
    }

    fn render(&self) -> String {
        format!("{} + {}i", self.0.re, self.0.im)
    }
}

impl RealValue for f64 {
    fn zero() -> Self {
        0.0
    }

    fn from_rational(r: &BigRational) -> Self {
        rat_f64(r)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, r: &BigRational) -> Self {
        self * rat_f64(r)
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    fn nth_root(&self, p: u32) -> Option<Self> {
        Some(self.powf(1.0 / p as f64))
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        format!("{self}")
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }

    fn approx_le(&self, other: &Self, tol: f64) -> bool {
        *self <= other + tol
    }
}

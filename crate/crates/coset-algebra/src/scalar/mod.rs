//! Scalar fields: exact rational-complex numbers (the default) and an f64
//! realization behind the same interface.
//!
//! Every operator in this crate is generic over [`Scalar`]. In exact mode all
//! identities are decidable equalities; in float mode comparisons take an
//! absolute tolerance (1e-9 by default).

mod exact;
mod float;
mod radical;

pub use exact::ExactScalar;
pub use float::FloatScalar;
pub use radical::RadicalSum;

use crate::error::Error;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt::Debug;

/// Parse a canonical rational string `"p/q"` (or `"p"`).
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::parse(format!("rational '{s}'"), e.to_string()))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::parse(format!("rational '{s}'"), "zero denominator"));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}

/// Canonical `"p/q"` form with q > 0 and gcd(p, q) = 1; integers print as `"p"`.
pub fn render_rational(r: &BigRational) -> String {
    format!("{r}")
}

/// Nonnegative real values produced by norms.
pub trait RealValue: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
    /// Exact comparison in exact mode; plain f64 comparison in float mode.
    fn cmp_value(&self, other: &Self) -> Ordering;
    /// p-th root, when representable (exact mode: p = 1 always, p = 2 for
    /// rational values; float mode: any p).
    fn nth_root(&self, p: u32) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;
    fn render(&self) -> String;

    /// Equality up to `tol` (ignored in exact mode).
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
    /// `self <= other` up to `tol` (ignored in exact mode).
    fn approx_le(&self, other: &Self, tol: f64) -> bool;
}

/// A complex scalar: the element type of all functions and measures here.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Real: RealValue;

    /// Mode label used in reports: `"exact"` or `"float"`.
    const MODE: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn from_rational(re: &BigRational, im: &BigRational) -> Self;
    fn from_real_rational(re: &BigRational) -> Self {
        Self::from_rational(re, &BigRational::zero())
    }

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn scale(&self, r: &BigRational) -> Self;
    fn is_zero(&self) -> bool;

    /// |z| as a real value.
    fn modulus(&self) -> Self::Real;
    /// |z|² as a real value (always rational in exact mode).
    fn modulus_sqr(&self) -> Self::Real;
    /// |z|^p, exact for every integer p >= 1 in exact mode.
    fn modulus_pow(&self, p: u32) -> Self::Real;

    /// z·u̅ where u = z/|z| is the extremal unit-modulus phase (0 for z = 0).
    /// Mathematically equal to |z|, but computed through the phase function,
    /// giving the operator-norm side of the norm duality its own route.
    fn extremal_pairing_term(&self) -> Self::Real;

    /// Equality up to `tol` (ignored in exact mode).
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// Wire encoding: `{"re": "p/q", "im": "p/q"}` in exact mode, JSON
    /// numbers in float mode.
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self, Error>;
    fn render(&self) -> String;
}

/// A rational drawn with small numerator and denominator, the common currency
/// of randomized check inputs in both modes.
pub fn small_rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// True iff r > 0.
pub fn rational_is_positive(r: &BigRational) -> bool {
    r.is_positive()
}

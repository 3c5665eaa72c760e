//! Exact nonnegative-real arithmetic for norms.
//!
//! A total-variation norm of a measure with rational-complex atoms is a sum
//! of square roots of rationals, e.g. |1+i| + |3| = sqrt(2) + 3. `RadicalSum`
//! represents such values exactly as Σ cᵢ·√rᵢ with rational cᵢ and positive
//! rational rᵢ, so norm identities and inequalities stay decidable.
//!
//! Two radicands r, s are kept in the same term exactly when r/s is the
//! square of a rational (then √r is a rational multiple of √s). Square roots
//! of pairwise non-commensurable rationals are linearly independent over ℚ,
//! so a normalized sum is zero iff it has no terms, and sign questions reduce
//! to interval arithmetic with integer square roots at growing precision.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Exact element of the ring ℚ[√r : r ∈ ℚ₊], used for norm values.
#[derive(Debug, Clone)]
pub struct RadicalSum {
    /// Terms (coefficient, radicand): coefficient != 0, radicand > 0,
    /// radicands pairwise non-commensurable, sorted by radicand.
    terms: Vec<(BigRational, BigRational)>,
}

fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

/// If `x` is the square of a rational, return that (positive) rational.
fn rational_square_root(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num = is_perfect_square(x.numer())?;
    let den = is_perfect_square(x.denom())?;
    Some(BigRational::new(num, den))
}

impl RadicalSum {
    pub fn zero() -> Self {
        RadicalSum { terms: Vec::new() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut s = RadicalSum::zero();
        s.push_term(r.clone(), BigRational::one());
        s
    }

    /// The exact value c·√r (requires r >= 0; c may have either sign).
    pub fn sqrt_term(coeff: BigRational, radicand: BigRational) -> Self {
        assert!(
            !radicand.is_negative(),
            "radicand must be nonnegative, got {radicand}"
        );
        let mut s = RadicalSum::zero();
        s.push_term(coeff, radicand);
        s
    }

    /// √r for a nonnegative rational r.
    pub fn sqrt_of_rational(radicand: &BigRational) -> Self {
        Self::sqrt_term(BigRational::one(), radicand.clone())
    }

    fn push_term(&mut self, coeff: BigRational, radicand: BigRational) {
        if coeff.is_zero() || radicand.is_zero() {
            return;
        }
        // Pull squares that are visible without factoring: if the radicand is
        // itself a rational square the term is rational.
        let (coeff, radicand) = match rational_square_root(&radicand) {
            Some(root) => (coeff * root, BigRational::one()),
            None => (coeff, radicand),
        };
        for (c, r) in &mut self.terms {
            // Same commensurability class: radicand/r is a rational square.
            if let Some(t) = rational_square_root(&(&radicand / &*r)) {
                *c += &coeff * t;
                if c.is_zero() {
                    let r = r.clone();
                    self.terms.retain(|(_, rad)| rad != &r);
                }
                return;
            }
        }
        let pos = self
            .terms
            .binary_search_by(|(_, r)| r.cmp(&radicand))
            .unwrap_or_else(|i| i);
        self.terms.insert(pos, (coeff, radicand));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, r) in &other.terms {
            out.push_term(c.clone(), r.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (c, r) in &other.terms {
            out.push_term(-c.clone(), r.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = RadicalSum::zero();
        for (c1, r1) in &self.terms {
            for (c2, r2) in &other.terms {
                out.push_term(c1 * c2, r1 * r2);
            }
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return RadicalSum::zero();
        }
        RadicalSum {
            terms: self
                .terms
                .iter()
                .map(|(c, rad)| (c * r, rad.clone()))
                .collect(),
        }
    }

    /// Exact rational value, if this sum happens to be rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(c, r)] if r.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Exact sign of the sum.
    pub fn sign(&self) -> Ordering {
        if self.terms.is_empty() {
            return Ordering::Equal;
        }
        if self.terms.iter().all(|(c, _)| c.is_positive()) {
            return Ordering::Greater;
        }
        if self.terms.iter().all(|(c, _)| c.is_negative()) {
            return Ordering::Less;
        }
        // Mixed signs: interval arithmetic with floor square roots, doubling
        // the precision until zero is excluded. Terminates because a nonzero
        // sum of non-commensurable radicals is bounded away from zero.
        let mut bits: u32 = 16;
        loop {
            let mut lo = BigRational::zero();
            let mut hi = BigRational::zero();
            for (c, r) in &self.terms {
                let (rl, rh) = sqrt_bounds(r, bits);
                if c.is_positive() {
                    lo += c * &rl;
                    hi += c * &rh;
                } else {
                    lo += c * &rh;
                    hi += c * &rl;
                }
            }
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            bits *= 2;
            assert!(bits <= 1 << 20, "sign decision failed to converge");
        }
    }

    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        self.sub(other).sign()
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(c, r)| {
                c.to_f64().unwrap_or(f64::NAN) * r.to_f64().unwrap_or(f64::NAN).sqrt()
            })
            .sum()
    }

    /// Canonical text form, e.g. `"7"`, `"sqrt(2)"`, `"3/2 + 2*sqrt(5/3)"`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (c, r) in &self.terms {
            if r.is_one() {
                parts.push(format!("{c}"));
            } else if c.is_one() {
                parts.push(format!("sqrt({r})"));
            } else {
                parts.push(format!("{c}*sqrt({r})"));
            }
        }
        parts.join(" + ")
    }
}

/// Rational bounds lo <= sqrt(r) <= hi with error below 2^-bits, for r > 0.
fn sqrt_bounds(r: &BigRational, bits: u32) -> (BigRational, BigRational) {
    // sqrt(p/q) = sqrt(p*q)/q; bound sqrt(p*q) by shifted integer sqrt.
    let n = r.numer() * r.denom();
    let scaled = &n << (2 * bits);
    let root = scaled.sqrt();
    let den = r.denom() << bits;
    (
        BigRational::new(root.clone(), den.clone()),
        BigRational::new(root + BigInt::one(), den),
    )
}

impl PartialEq for RadicalSum {
    fn eq(&self, other: &Self) -> bool {
        // Terms are normalized up to the choice of class representative,
        // so compare by subtraction.
        self.sub(other).is_zero()
    }
}

impl Eq for RadicalSum {}

impl PartialOrd for RadicalSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

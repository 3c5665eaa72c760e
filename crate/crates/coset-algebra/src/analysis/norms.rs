//! Norms and the integration pairing.

use super::haar::Weights;
use super::space::{require_same_space, FunctionOn, MeasureOn};
use crate::error::Error;
use crate::scalar::{RealValue, Scalar};
use std::cmp::Ordering;

/// Exponent for L^p norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    P(u32),
    Infinity,
}

/// Total variation ‖λ‖ = Σ_x |λ({x})| of an atomic measure.
pub fn tv_norm<S: Scalar>(measure: &MeasureOn<S>) -> S::Real {
    measure
        .atoms()
        .iter()
        .fold(S::Real::zero(), |acc, a| acc.add(&a.modulus()))
}

/// ‖φ‖_sup = max_x |φ(x)|.
pub fn sup_norm<S: Scalar>(function: &FunctionOn<S>) -> S::Real {
    function
        .values()
        .iter()
        .map(|v| v.modulus())
        .fold(S::Real::zero(), |acc, m| {
            if m.cmp_value(&acc) == Ordering::Greater {
                m
            } else {
                acc
            }
        })
}

/// ‖φ‖_p = (Σ_x w(x)·|φ(x)|^p)^(1/p), and the sup norm for p = ∞.
///
/// In exact mode p must be 1 or 2 (the root of the weighted power sum is a
/// representable radical exactly then); float mode accepts any p >= 1.
pub fn lp_norm<S: Scalar>(
    function: &FunctionOn<S>,
    p: Exponent,
    weights: &Weights,
) -> Result<S::Real, Error> {
    match p {
        Exponent::Infinity => Ok(sup_norm(function)),
        Exponent::P(p) => {
            assert!(p >= 1, "exponent must be at least 1");
            let sum = function
                .values()
                .iter()
                .enumerate()
                .fold(S::Real::zero(), |acc, (i, v)| {
                    acc.add(&v.modulus_pow(p).scale(weights.weight(i)))
                });
            sum.nth_root(p).ok_or(Error::UnsupportedExponent { p })
        }
    }
}

/// The pairing λ(φ) = Σ_x φ(x)·λ({x}), the finite realization of
/// integrating φ against λ. Linear in both arguments.
pub fn riesz_pair<S: Scalar>(measure: &MeasureOn<S>, function: &FunctionOn<S>) -> Result<S, Error> {
    require_same_space(measure.space(), function.space())?;
    let mut acc = S::zero();
    for i in measure.support() {
        acc = acc.add(&function.value(i).mul(measure.atom(i)));
    }
    Ok(acc)
}

/// Operator norm of φ ↦ λ(φ) over {φ : ‖φ‖_sup ≤ 1}: the supremum is
/// attained at the extremal phase function φ(x) = conj(λ({x}))/|λ({x})|, and
/// this evaluates the pairing there. Equality with [`tv_norm`] is the finite
/// norm-duality identity checked by the verifier.
pub fn functional_norm<S: Scalar>(measure: &MeasureOn<S>) -> S::Real {
    measure
        .atoms()
        .iter()
        .fold(S::Real::zero(), |acc, a| acc.add(&a.extremal_pairing_term()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::SpaceId;
    use crate::scalar::{small_rational as rat, ExactScalar, FloatScalar, RadicalSum};

    type F = FunctionOn<ExactScalar>;
    type M = MeasureOn<ExactScalar>;

    fn sc(re: (i64, i64), im: (i64, i64)) -> ExactScalar {
        ExactScalar::from_rational(&rat(re.0, re.1), &rat(im.0, im.1))
    }

    fn real(n: i64, d: i64) -> RadicalSum {
        RadicalSum::from_rational(&rat(n, d))
    }

    #[test]
    fn tv_norm_examples() {
        let s = SpaceId::group(2);
        assert!(tv_norm(&M::zero(s)).is_zero());
        assert_eq!(tv_norm(&M::delta(s, 0)), real(1, 1));
        // atoms (3, 4i) -> |3| + |4i| = 7
        let m = M::from_atoms(s, vec![sc((3, 1), (0, 1)), sc((0, 1), (4, 1))]);
        assert_eq!(tv_norm(&m), real(7, 1));
    }

    #[test]
    fn sup_norm_examples() {
        let s = SpaceId::group(2);
        assert!(sup_norm(&F::zero(s)).is_zero());
        assert_eq!(sup_norm(&F::indicator(s, 1)), real(1, 1));
        let f = F::from_values(s, vec![sc((2, 1), (0, 1)), sc((-3, 1), (0, 1))]);
        assert_eq!(sup_norm(&f), real(3, 1));
    }

    #[test]
    fn lp_norm_examples() {
        let s = SpaceId::group(3);
        let unit = Weights::unit();
        assert!(lp_norm(&F::zero(s), Exponent::P(1), &unit).unwrap().is_zero());

        // constant 1 on a 6-point group with weight 1: L1 norm 6
        let g6 = SpaceId::group(6);
        let one = F::constant(g6, ExactScalar::one());
        assert_eq!(lp_norm(&one, Exponent::P(1), &unit).unwrap(), real(6, 1));

        // (1, -1, 2) under p = 1: 4
        let f = F::from_values(
            s,
            vec![sc((1, 1), (0, 1)), sc((-1, 1), (0, 1)), sc((2, 1), (0, 1))],
        );
        assert_eq!(lp_norm(&f, Exponent::P(1), &unit).unwrap(), real(4, 1));

        // p = 2 is exact as a radical: sqrt(1 + 1 + 4) = sqrt(6)
        assert_eq!(
            lp_norm(&f, Exponent::P(2), &unit).unwrap(),
            RadicalSum::sqrt_of_rational(&rat(6, 1))
        );

        // p = 3 is not representable exactly
        assert_eq!(
            lp_norm(&f, Exponent::P(3), &unit),
            Err(Error::UnsupportedExponent { p: 3 })
        );

        // ... but is fine in float mode
        let ff = FunctionOn::<FloatScalar>::from_values(
            s,
            vec![
                FloatScalar::one(),
                FloatScalar::one().neg(),
                FloatScalar::one().add(&FloatScalar::one()),
            ],
        );
        let n3 = lp_norm(&ff, Exponent::P(3), &unit).unwrap();
        assert!((n3 - 10.0_f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn riesz_pair_examples() {
        let s = SpaceId::group(2);
        // point evaluation
        let phi = F::from_values(s, vec![sc((5, 1), (0, 1)), sc((7, 1), (0, 1))]);
        assert_eq!(riesz_pair(&M::delta(s, 1), &phi).unwrap(), sc((7, 1), (0, 1)));

        // pairing with 1 gives the total mass
        let m = M::from_atoms(s, vec![sc((1, 2), (0, 1)), sc((1, 3), (1, 1))]);
        let one = F::constant(s, ExactScalar::one());
        assert_eq!(riesz_pair(&m, &one).unwrap(), m.total_mass());

        // atoms (1, i) against (i, 1): 1·i + i·1 = 2i
        let m = M::from_atoms(s, vec![ExactScalar::one(), ExactScalar::i()]);
        let phi = F::from_values(s, vec![ExactScalar::i(), ExactScalar::one()]);
        assert_eq!(
            riesz_pair(&m, &phi).unwrap(),
            sc((0, 1), (2, 1))
        );

        // different spaces error out
        let other = F::zero(SpaceId::cosets(2));
        assert!(riesz_pair(&m, &other).is_err());
    }

    #[test]
    fn functional_norm_equals_tv_norm() {
        let s = SpaceId::group(3);
        assert!(functional_norm(&M::zero(s)).is_zero());
        assert_eq!(functional_norm(&M::delta(s, 2)), real(1, 1));
        // atoms (3, 4i) -> 7, through the extremal-phase route
        let m = M::from_atoms(
            s,
            vec![sc((3, 1), (0, 1)), sc((0, 1), (4, 1)), ExactScalar::zero()],
        );
        assert_eq!(functional_norm(&m), real(7, 1));
        // an atom with irrational modulus: |1+i| + |2| = sqrt(2) + 2 both ways
        let m = M::from_atoms(
            s,
            vec![sc((1, 1), (1, 1)), sc((2, 1), (0, 1)), ExactScalar::zero()],
        );
        assert_eq!(functional_norm(&m), tv_norm(&m));
    }
}

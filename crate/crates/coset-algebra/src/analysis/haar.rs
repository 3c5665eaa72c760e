//! The compatible weight triple on G, H, and G/H.

use crate::error::Error;
use crate::scalar::{render_rational, Scalar};
use num::rational::BigRational;
use num::{One, Signed};

/// Haar data for a pair (G, H): a left Haar weight c on G (each element has
/// mass c), the probability weight 1/|H| on H, and the induced weight c·|H|
/// per coset on G/H. With these choices the fibration identity
/// Σ_{G/H} c|H| · (1/|H|) Σ_H f(xh) = Σ_G c·f(x) holds for every f.
#[derive(Debug, Clone, PartialEq)]
pub struct HaarStructure {
    group_weight: BigRational,
    subgroup_order: usize,
}

impl HaarStructure {
    /// `group_weight` is the mass c > 0 of each group element.
    pub fn new(group_weight: BigRational, subgroup_order: usize) -> Result<Self, Error> {
        if !group_weight.is_positive() {
            return Err(Error::NonPositiveWeight {
                value: render_rational(&group_weight),
            });
        }
        assert!(subgroup_order > 0, "subgroup order must be positive");
        Ok(HaarStructure {
            group_weight,
            subgroup_order,
        })
    }

    /// Counting measure on G: c = 1.
    pub fn counting(subgroup_order: usize) -> Self {
        HaarStructure::new(BigRational::one(), subgroup_order).expect("1 > 0")
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup_order
    }

    /// c: mass of each element of G.
    pub fn group_weight(&self) -> &BigRational {
        &self.group_weight
    }

    /// 1/|H|: mass of each element of H under the probability weight.
    pub fn subgroup_weight(&self) -> BigRational {
        BigRational::new(1.into(), (self.subgroup_order as i64).into())
    }

    /// c·|H|: mass of each coset in G/H.
    pub fn coset_weight(&self) -> BigRational {
        &self.group_weight * BigRational::from_integer((self.subgroup_order as i64).into())
    }

    pub fn group_weights(&self) -> Weights {
        Weights::Uniform(self.group_weight.clone())
    }

    pub fn coset_weights(&self) -> Weights {
        Weights::Uniform(self.coset_weight())
    }
}

/// Per-point positive weights for L^p norms.
#[derive(Debug, Clone, PartialEq)]
pub enum Weights {
    Uniform(BigRational),
    PerPoint(Vec<BigRational>),
}

impl Weights {
    pub fn unit() -> Self {
        Weights::Uniform(BigRational::one())
    }

    pub fn weight(&self, index: usize) -> &BigRational {
        match self {
            Weights::Uniform(w) => w,
            Weights::PerPoint(ws) => &ws[index],
        }
    }

    /// Injects the weight at `index` into the scalar field.
    pub fn scalar<S: Scalar>(&self, index: usize) -> S {
        S::from_real_rational(self.weight(index))
    }
}

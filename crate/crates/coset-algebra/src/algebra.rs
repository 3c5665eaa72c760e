//! Convolutions and involutions: the *-algebra structure on L¹(G) and M(G),
//! and the coset-level structure on L¹(G/H, μ) and M(G/H).
//!
//! Measure operations are implemented by closed-form atom formulas derived
//! from the defining pairings against indicator functions; the verifier
//! re-checks the pairing form of each definition, so a wrong closed form
//! cannot survive.

use crate::analysis::{
    embed_function_cosets, FunctionOn, HaarStructure, MeasureOn,
};
use crate::error::Error;
use crate::group::{quotient_group, FiniteGroup, GroupElement};
use crate::scalar::Scalar;
use crate::transfer::{j_function, TransferContext};

/// Deliberately broken kernels for the sensitivity analysis: each drops one
/// ingredient of a coset-level formula. `Intact` is the real operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    Intact,
    /// Convolve coset functions against ψ instead of Jψ.
    DropJInFunctionConvolution,
    /// Convolve coset measures at representatives without the H-average.
    DropFiberAverageInMeasureConvolution,
    /// Involute coset measures without conjugating the atoms.
    DropConjugationInMeasureInvolution,
}

impl Mutation {
    pub fn name(&self) -> &'static str {
        match self {
            Mutation::Intact => "intact",
            Mutation::DropJInFunctionConvolution => "drop-j",
            Mutation::DropFiberAverageInMeasureConvolution => "drop-fiber-average",
            Mutation::DropConjugationInMeasureInvolution => "drop-conjugation",
        }
    }

    pub fn parse(name: &str) -> Option<Mutation> {
        match name {
            "intact" => Some(Mutation::Intact),
            "drop-j" => Some(Mutation::DropJInFunctionConvolution),
            "drop-fiber-average" => Some(Mutation::DropFiberAverageInMeasureConvolution),
            "drop-conjugation" => Some(Mutation::DropConjugationInMeasureInvolution),
            _ => None,
        }
    }
}

/// (f ∗_G g)(x) = c·Σ_y f(y)·g(y⁻¹x).
pub fn conv_g_functions<S: Scalar>(
    group: &FiniteGroup,
    haar: &HaarStructure,
    f: &FunctionOn<S>,
    g: &FunctionOn<S>,
) -> FunctionOn<S> {
    let c = haar.group_weight();
    let out = group
        .elements()
        .map(|x| {
            let mut acc = S::zero();
            for y in group.elements() {
                let fy = f.value(y.0);
                if fy.is_zero() {
                    continue;
                }
                acc = acc.add(&fy.mul(g.value(group.product(group.inverse(y), x).0)));
            }
            acc.scale(c)
        })
        .collect();
    FunctionOn::from_values(f.space(), out)
}

/// f^*(x) = Δ_G(x⁻¹)·conj(f(x⁻¹)).
pub fn inv_g_function<S: Scalar>(group: &FiniteGroup, f: &FunctionOn<S>) -> FunctionOn<S> {
    let out = group
        .elements()
        .map(|x| {
            let x_inv = group.inverse(x);
            f.value(x_inv.0)
                .conj()
                .scale(&group.modular_function(x_inv))
        })
        .collect();
    FunctionOn::from_values(f.space(), out)
}

/// (ν ∗_G ν')({z}) = Σ_{x·y = z} ν({x})·ν'({y}).
pub fn conv_g_measures<S: Scalar>(
    group: &FiniteGroup,
    nu: &MeasureOn<S>,
    nu_prime: &MeasureOn<S>,
) -> MeasureOn<S> {
    let mut atoms = vec![S::zero(); group.order()];
    for x in nu.support() {
        for y in nu_prime.support() {
            let z = group.product(GroupElement(x), GroupElement(y));
            atoms[z.0] = atoms[z.0].add(&nu.atom(x).mul(nu_prime.atom(y)));
        }
    }
    MeasureOn::from_atoms(nu.space(), atoms)
}

/// ν^*({z}) = conj(ν({z⁻¹})).
pub fn inv_g_measure<S: Scalar>(group: &FiniteGroup, nu: &MeasureOn<S>) -> MeasureOn<S> {
    let out = group
        .elements()
        .map(|z| nu.atom(group.inverse(z).0).conj())
        .collect();
    MeasureOn::from_atoms(nu.space(), out)
}

/// (φ ∗_{G/H} ψ)(xH) = c|H|·Σ_{yH} φ(yH)·(Jψ)(y⁻¹xH).
///
/// The J average is what makes the kernel independent of the representative
/// chosen for yH.
pub fn conv_coset_functions<S: Scalar>(
    ctx: &TransferContext,
    phi: &FunctionOn<S>,
    psi: &FunctionOn<S>,
) -> FunctionOn<S> {
    conv_coset_functions_with(ctx, phi, psi, Mutation::Intact)
}

pub(crate) fn conv_coset_functions_with<S: Scalar>(
    ctx: &TransferContext,
    phi: &FunctionOn<S>,
    psi: &FunctionOn<S>,
    mutation: Mutation,
) -> FunctionOn<S> {
    let kernel = match mutation {
        Mutation::DropJInFunctionConvolution => psi.clone(),
        _ => j_function(ctx, psi),
    };
    let w = ctx.haar().coset_weight();
    let cosets = ctx.cosets();
    let group = ctx.group();
    let out = cosets
        .indices()
        .map(|xi| {
            let x = cosets.representative(xi);
            let mut acc = S::zero();
            for yi in cosets.indices() {
                let phi_y = phi.value(yi);
                if phi_y.is_zero() {
                    continue;
                }
                let y_inv_x = group.product(group.inverse(cosets.representative(yi)), x);
                acc = acc.add(&phi_y.mul(kernel.value(cosets.coset_of(y_inv_x))));
            }
            acc.scale(&w)
        })
        .collect();
    FunctionOn::from_values(ctx.coset_space_id(), out)
}

/// φ^*(xH) = Δ_G(x⁻¹)·(1/|H|)·Σ_h conj(φ(h⁻¹x⁻¹H)).
pub fn inv_coset_function<S: Scalar>(ctx: &TransferContext, phi: &FunctionOn<S>) -> FunctionOn<S> {
    let w = ctx.haar().subgroup_weight();
    let cosets = ctx.cosets();
    let group = ctx.group();
    let out = cosets
        .indices()
        .map(|xi| {
            let x_inv = group.inverse(cosets.representative(xi));
            let mut acc = S::zero();
            for &h in ctx.subgroup().members() {
                let idx = cosets.coset_of(group.product(group.inverse(h), x_inv));
                acc = acc.add(&phi.value(idx).conj());
            }
            acc.scale(&w).scale(&group.modular_function(x_inv))
        })
        .collect();
    FunctionOn::from_values(ctx.coset_space_id(), out)
}

/// (λ ∗_{G/H} λ')({zH}) = Σ_{xH, yH} λ({xH})·λ'({yH})·(1/|H|)·#{h : xhyH = zH}.
///
/// This is the atom form of the defining pairing
/// (λ ∗ λ')(ψ) = ΣΣ (1/|H|) Σ_h ψ(xhyH)·λ({xH})·λ'({yH}).
pub fn conv_coset_measures<S: Scalar>(
    ctx: &TransferContext,
    lambda: &MeasureOn<S>,
    lambda_prime: &MeasureOn<S>,
) -> MeasureOn<S> {
    conv_coset_measures_with(ctx, lambda, lambda_prime, Mutation::Intact)
}

pub(crate) fn conv_coset_measures_with<S: Scalar>(
    ctx: &TransferContext,
    lambda: &MeasureOn<S>,
    lambda_prime: &MeasureOn<S>,
    mutation: Mutation,
) -> MeasureOn<S> {
    let cosets = ctx.cosets();
    let group = ctx.group();
    let w = ctx.haar().subgroup_weight();
    let mut atoms = vec![S::zero(); cosets.len()];
    for xi in lambda.support() {
        let x = cosets.representative(xi);
        for yi in lambda_prime.support() {
            let y = cosets.representative(yi);
            let mass = lambda.atom(xi).mul(lambda_prime.atom(yi));
            if mutation == Mutation::DropFiberAverageInMeasureConvolution {
                let z = cosets.coset_of(group.product(x, y));
                atoms[z] = atoms[z].add(&mass);
            } else {
                let mass = mass.scale(&w);
                for &h in ctx.subgroup().members() {
                    let z = cosets.coset_of(group.product(group.product(x, h), y));
                    atoms[z] = atoms[z].add(&mass);
                }
            }
        }
    }
    MeasureOn::from_atoms(ctx.coset_space_id(), atoms)
}

/// λ^*({zH}) = Σ_{xH} conj(λ({xH}))·(1/|H|)·#{h : h⁻¹x⁻¹H = zH}.
pub fn inv_coset_measure<S: Scalar>(ctx: &TransferContext, lambda: &MeasureOn<S>) -> MeasureOn<S> {
    inv_coset_measure_with(ctx, lambda, Mutation::Intact)
}

pub(crate) fn inv_coset_measure_with<S: Scalar>(
    ctx: &TransferContext,
    lambda: &MeasureOn<S>,
    mutation: Mutation,
) -> MeasureOn<S> {
    let cosets = ctx.cosets();
    let group = ctx.group();
    let w = ctx.haar().subgroup_weight();
    let mut atoms = vec![S::zero(); cosets.len()];
    for xi in lambda.support() {
        let x_inv = group.inverse(cosets.representative(xi));
        let atom = if mutation == Mutation::DropConjugationInMeasureInvolution {
            lambda.atom(xi).scale(&w)
        } else {
            lambda.atom(xi).conj().scale(&w)
        };
        for &h in ctx.subgroup().members() {
            let z = cosets.coset_of(group.product(group.inverse(h), x_inv));
            atoms[z] = atoms[z].add(&atom);
        }
    }
    MeasureOn::from_atoms(ctx.coset_space_id(), atoms)
}

/// Both embedding-compatibility identities for the pair (φ, φ'):
/// μ_φ ∗ μ_{φ'} = μ_{φ ∗ φ'} and (μ_φ)^* = μ_{φ^*}.
pub fn compatibility_mu<S: Scalar>(
    ctx: &TransferContext,
    phi: &FunctionOn<S>,
    phi_prime: &FunctionOn<S>,
    tol: f64,
) -> bool {
    let haar = ctx.haar();
    let mu_phi = embed_function_cosets(phi, haar);
    let mu_phi_prime = embed_function_cosets(phi_prime, haar);

    let conv_measures = conv_coset_measures(ctx, &mu_phi, &mu_phi_prime);
    let conv_functions = embed_function_cosets(&conv_coset_functions(ctx, phi, phi_prime), haar);
    let conv_ok = conv_measures.approx_eq(&conv_functions, tol);

    let inv_measure = inv_coset_measure(ctx, &mu_phi);
    let inv_function = embed_function_cosets(&inv_coset_function(ctx, phi), haar);
    conv_ok && inv_measure.approx_eq(&inv_function, tol)
}

/// For normal H: convolve in the quotient group G/H and map back. An
/// independent route to ∗_{G/H} used to cross-check the general formula.
pub fn quotient_oracle_conv<S: Scalar>(
    ctx: &TransferContext,
    lambda: &MeasureOn<S>,
    lambda_prime: &MeasureOn<S>,
) -> Result<MeasureOn<S>, Error> {
    let q = quotient_group(ctx.cosets())?;
    let as_group = MeasureOn::from_atoms(crate::analysis::SpaceId::group(q.order()), lambda.atoms().to_vec());
    let as_group_prime =
        MeasureOn::from_atoms(crate::analysis::SpaceId::group(q.order()), lambda_prime.atoms().to_vec());
    let conv = conv_g_measures(&q, &as_group, &as_group_prime);
    Ok(MeasureOn::from_atoms(ctx.coset_space_id(), conv.atoms().to_vec()))
}

/// For normal H: involute in the quotient group G/H and map back.
pub fn quotient_oracle_inv<S: Scalar>(
    ctx: &TransferContext,
    lambda: &MeasureOn<S>,
) -> Result<MeasureOn<S>, Error> {
    let q = quotient_group(ctx.cosets())?;
    let as_group = MeasureOn::from_atoms(crate::analysis::SpaceId::group(q.order()), lambda.atoms().to_vec());
    let inv = inv_g_measure(&q, &as_group);
    Ok(MeasureOn::from_atoms(ctx.coset_space_id(), inv.atoms().to_vec()))
}

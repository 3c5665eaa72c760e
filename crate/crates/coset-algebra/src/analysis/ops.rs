//! Translations of functions and measures, and the embeddings of functions
//! into measures given a Haar structure.

use super::haar::HaarStructure;
use super::space::{FunctionOn, MeasureOn, SpaceId, SpaceKind};
use crate::group::{CosetSpace, FiniteGroup, GroupElement};
use crate::scalar::Scalar;

fn assert_group_space<S: Scalar>(space: SpaceId, group: &FiniteGroup) {
    assert_eq!(
        space,
        SpaceId::group(group.order()),
        "operand must live on {} (scalar mode {})",
        group.label(),
        S::MODE,
    );
}

fn assert_coset_space<S: Scalar>(space: SpaceId, cosets: &CosetSpace) {
    assert_eq!(
        space,
        SpaceId::cosets(cosets.len()),
        "operand must live on the coset space (scalar mode {})",
        S::MODE,
    );
}

/// Left translation L_z f(x) = f(z⁻¹·x) on the group.
pub fn translate_function_group<S: Scalar>(
    group: &FiniteGroup,
    z: GroupElement,
    f: &FunctionOn<S>,
) -> FunctionOn<S> {
    assert_group_space::<S>(f.space(), group);
    let z_inv = group.inverse(z);
    f.map(|x, _| f.value(group.product(z_inv, GroupElement(x)).0).clone())
}

/// Right translation R_g f(x) = f(x·g) on the group.
pub fn translate_function_right_group<S: Scalar>(
    group: &FiniteGroup,
    g: GroupElement,
    f: &FunctionOn<S>,
) -> FunctionOn<S> {
    assert_group_space::<S>(f.space(), group);
    f.map(|x, _| f.value(group.product(GroupElement(x), g).0).clone())
}

/// Left action L_z φ(xH) = φ(z⁻¹xH) on the coset space.
pub fn translate_function_cosets<S: Scalar>(
    cosets: &CosetSpace,
    z: GroupElement,
    phi: &FunctionOn<S>,
) -> FunctionOn<S> {
    assert_coset_space::<S>(phi.space(), cosets);
    let z_inv = cosets.group().inverse(z);
    phi.map(|i, _| phi.value(cosets.act(z_inv, i)).clone())
}

/// Left translation of a measure: ν_x({y}) = ν({x·y}).
pub fn translate_measure_left_group<S: Scalar>(
    group: &FiniteGroup,
    x: GroupElement,
    nu: &MeasureOn<S>,
) -> MeasureOn<S> {
    assert_group_space::<S>(nu.space(), group);
    nu.map(|y, _| nu.atom(group.product(x, GroupElement(y)).0).clone())
}

/// Right translation of a measure: ν^g({y}) = ν({y·g}).
pub fn translate_measure_right_group<S: Scalar>(
    group: &FiniteGroup,
    g: GroupElement,
    nu: &MeasureOn<S>,
) -> MeasureOn<S> {
    assert_group_space::<S>(nu.space(), group);
    nu.map(|y, _| nu.atom(group.product(GroupElement(y), g).0).clone())
}

/// Left translation on the coset space: λ_x({yH}) = λ({x·yH}).
pub fn translate_measure_left_cosets<S: Scalar>(
    cosets: &CosetSpace,
    x: GroupElement,
    lambda: &MeasureOn<S>,
) -> MeasureOn<S> {
    assert_coset_space::<S>(lambda.space(), cosets);
    lambda.map(|i, _| lambda.atom(cosets.act(x, i)).clone())
}

/// The measure σ_f with σ_f({x}) = f(x)·c, the image of f under the
/// isometric embedding of L¹(G) into M(G).
pub fn embed_function_group<S: Scalar>(f: &FunctionOn<S>, haar: &HaarStructure) -> MeasureOn<S> {
    assert_eq!(f.space().kind, SpaceKind::Group, "embed σ_f expects a function on G");
    MeasureOn::from_atoms(
        f.space(),
        f.values().iter().map(|v| v.scale(haar.group_weight())).collect(),
    )
}

/// The measure μ_φ with μ_φ({xH}) = φ(xH)·c|H|, the image of φ under the
/// isometric embedding of L¹(G/H, μ) into M(G/H).
pub fn embed_function_cosets<S: Scalar>(phi: &FunctionOn<S>, haar: &HaarStructure) -> MeasureOn<S> {
    assert_eq!(
        phi.space().kind,
        SpaceKind::Cosets,
        "embed μ_φ expects a function on G/H"
    );
    let w = haar.coset_weight();
    MeasureOn::from_atoms(
        phi.space(),
        phi.values().iter().map(|v| v.scale(&w)).collect(),
    )
}

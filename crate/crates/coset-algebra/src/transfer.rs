//! Transfer operators between G and G/H: the fiber average T_H on functions
//! and measures, the lifts ψ_q and λ_q, the left-average J, and membership
//! tests for the invariant subspaces.

use crate::analysis::{riesz_pair, FunctionOn, HaarStructure, MeasureOn, SpaceId, SpaceKind};
use crate::analysis::{
    translate_function_cosets, translate_function_group, translate_function_right_group,
    translate_measure_left_cosets, translate_measure_left_group, translate_measure_right_group,
};
use crate::error::Error;
use crate::group::{left_cosets, CosetSpace, FiniteGroup, GroupElement, Subgroup};
use crate::scalar::Scalar;
use num::rational::BigRational;
use std::sync::Arc;

/// Everything needed to move between G and G/H: the group, the subgroup, the
/// coset partition, and the compatible weight triple. Immutable; share
/// freely across threads.
#[derive(Debug, Clone)]
pub struct TransferContext {
    group: Arc<FiniteGroup>,
    subgroup: Subgroup,
    cosets: CosetSpace,
    haar: HaarStructure,
}

impl TransferContext {
    /// Builds the context with the counting weight c = 1 on G.
    pub fn new(group: &Arc<FiniteGroup>, subgroup: &Subgroup) -> Result<Self, Error> {
        Self::with_group_weight(group, subgroup, BigRational::from_integer(1.into()))
    }

    /// Builds the context with an arbitrary positive weight c per group
    /// element. The coset weight c·|H| is forced by the fibration identity.
    pub fn with_group_weight(
        group: &Arc<FiniteGroup>,
        subgroup: &Subgroup,
        group_weight: BigRational,
    ) -> Result<Self, Error> {
        subgroup.check_parent(group)?;
        let cosets = left_cosets(group, subgroup)?;
        let haar = HaarStructure::new(group_weight, subgroup.order())?;
        let ctx = TransferContext {
            group: Arc::clone(group),
            subgroup: subgroup.clone(),
            cosets,
            haar,
        };
        ctx.check_weil_on_basis()?;
        Ok(ctx)
    }

    /// Same context with different coset representatives; used to confirm
    /// that representative choices never leak into results.
    pub fn with_representatives(&self, reps: &[GroupElement]) -> Result<Self, Error> {
        Ok(TransferContext {
            group: Arc::clone(&self.group),
            subgroup: self.subgroup.clone(),
            cosets: self.cosets.with_representatives(reps)?,
            haar: self.haar.clone(),
        })
    }

    /// The fibration identity on the indicator basis: for every g in G,
    /// Σ_{G/H} c|H| · (1/|H|) Σ_h 1_g(x·h) must equal c. Verified once at
    /// construction; rational arithmetic, no scalar mode involved.
    fn check_weil_on_basis(&self) -> Result<(), Error> {
        let h_order = BigRational::from_integer((self.subgroup.order() as i64).into());
        let lhs_weight = self.haar.coset_weight() * self.haar.subgroup_weight();
        for g in self.group.elements() {
            // count of (coset, h) with rep(coset)·h = g: exactly one when the
            // partition is consistent.
            let mut hits = 0usize;
            let i = self.cosets.coset_of(g);
            let rep = self.cosets.representative(i);
            for &h in self.subgroup.members() {
                if self.group.product(rep, h) == g {
                    hits += 1;
                }
            }
            let lhs = &lhs_weight * BigRational::from_integer((hits as i64).into());
            if lhs != *self.haar.group_weight() {
                return Err(Error::SubgroupMismatch {
                    reason: format!(
                        "fibration identity fails at element {} of {} (coset weight {}, hits {hits}, |H| {h_order})",
                        g.0,
                        self.group.label(),
                        self.haar.coset_weight()
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    pub fn haar(&self) -> &HaarStructure {
        &self.haar
    }

    pub fn group_space(&self) -> SpaceId {
        SpaceId::group(self.group.order())
    }

    pub fn coset_space_id(&self) -> SpaceId {
        SpaceId::cosets(self.cosets.len())
    }

    /// Index of the coset eH.
    pub fn identity_coset(&self) -> usize {
        self.cosets.coset_of(self.group.identity())
    }

    /// Dispatching left translation for functions on either space.
    pub fn translate_function<S: Scalar>(
        &self,
        z: GroupElement,
        f: &FunctionOn<S>,
    ) -> FunctionOn<S> {
        match f.space().kind {
            SpaceKind::Group => translate_function_group(&self.group, z, f),
            SpaceKind::Cosets => translate_function_cosets(&self.cosets, z, f),
        }
    }

    /// Dispatching left translation for measures on either space.
    pub fn translate_measure_left<S: Scalar>(
        &self,
        x: GroupElement,
        m: &MeasureOn<S>,
    ) -> MeasureOn<S> {
        match m.space().kind {
            SpaceKind::Group => translate_measure_left_group(&self.group, x, m),
            SpaceKind::Cosets => translate_measure_left_cosets(&self.cosets, x, m),
        }
    }
}

/// T_H(f)(xH) = (1/|H|) Σ_h f(x·h), evaluated at the stored representative.
/// The average over the fiber is representative-independent.
pub fn th_function<S: Scalar>(ctx: &TransferContext, f: &FunctionOn<S>) -> FunctionOn<S> {
    let w = ctx.haar().subgroup_weight();
    let out = ctx
        .cosets()
        .indices()
        .map(|i| {
            let rep = ctx.cosets().representative(i);
            let mut acc = S::zero();
            for &h in ctx.subgroup().members() {
                acc = acc.add(f.value(ctx.group().product(rep, h).0));
            }
            acc.scale(&w)
        })
        .collect();
    FunctionOn::from_values(ctx.coset_space_id(), out)
}

/// The lift ψ_q(x) = ψ(xH): compose with the canonical surjection.
pub fn lift_function<S: Scalar>(ctx: &TransferContext, psi: &FunctionOn<S>) -> FunctionOn<S> {
    let out = ctx
        .group()
        .elements()
        .map(|g| psi.value(ctx.cosets().coset_of(g)).clone())
        .collect();
    FunctionOn::from_values(ctx.group_space(), out)
}

/// T_H(ν)({xH}) = Σ_{g ∈ xH} ν({g}): pushforward of mass along q.
/// Satisfies the defining pairing T_H(ν)(ψ) = ν(ψ_q) for every ψ.
pub fn th_measure<S: Scalar>(ctx: &TransferContext, nu: &MeasureOn<S>) -> MeasureOn<S> {
    let out = ctx
        .cosets()
        .indices()
        .map(|i| {
            let mut acc = S::zero();
            for &g in ctx.cosets().coset(i) {
                acc = acc.add(nu.atom(g.0));
            }
            acc
        })
        .collect();
    MeasureOn::from_atoms(ctx.coset_space_id(), out)
}

/// The lift λ_q({g}) = λ({gH})/|H|: spread each coset's mass uniformly over
/// its fiber. This is the closed form of the adjoint of T_H; the verifier
/// checks the defining pairing λ_q(f) = λ(T_H f) against it.
pub fn lift_measure<S: Scalar>(ctx: &TransferContext, lambda: &MeasureOn<S>) -> MeasureOn<S> {
    let w = ctx.haar().subgroup_weight();
    let out = ctx
        .group()
        .elements()
        .map(|g| lambda.atom(ctx.cosets().coset_of(g)).scale(&w))
        .collect();
    MeasureOn::from_atoms(ctx.group_space(), out)
}

/// Jψ(xH) = (1/|H|) Σ_h ψ(h·xH): the left-H average. Projects C(G/H) onto
/// the left-invariant functions A(G/H); the identity map exactly when H is
/// normal.
pub fn j_function<S: Scalar>(ctx: &TransferContext, psi: &FunctionOn<S>) -> FunctionOn<S> {
    let w = ctx.haar().subgroup_weight();
    let out = ctx
        .cosets()
        .indices()
        .map(|i| {
            let rep = ctx.cosets().representative(i);
            let mut acc = S::zero();
            for &h in ctx.subgroup().members() {
                acc = acc.add(psi.value(ctx.cosets().coset_of(ctx.group().product(h, rep))));
            }
            acc.scale(&w)
        })
        .collect();
    FunctionOn::from_values(ctx.coset_space_id(), out)
}

/// The H-average (1/|H|) Σ_h λ_h: a projection of M(G/H) onto the
/// left-H-invariant measures, used to generate test data in that subspace.
pub fn project_invariant<S: Scalar>(ctx: &TransferContext, lambda: &MeasureOn<S>) -> MeasureOn<S> {
    let w = ctx.haar().subgroup_weight();
    let mut acc = MeasureOn::zero(lambda.space());
    for &h in ctx.subgroup().members() {
        let translated = translate_measure_left_cosets(ctx.cosets(), h, lambda);
        acc = acc.add(&translated).expect("same space");
    }
    acc.map(|_, v| v.scale(&w))
}

/// Right-H average (1/|H|) Σ_h ν^h on M(G), the generator of test data in
/// the right-invariant subspace M(G:H).
pub fn project_right_invariant_group<S: Scalar>(
    ctx: &TransferContext,
    nu: &MeasureOn<S>,
) -> MeasureOn<S> {
    let w = ctx.haar().subgroup_weight();
    let mut acc = MeasureOn::zero(nu.space());
    for &h in ctx.subgroup().members() {
        let translated = translate_measure_right_group(ctx.group(), h, nu);
        acc = acc.add(&translated).expect("same space");
    }
    acc.map(|_, v| v.scale(&w))
}

/// Left-H average (1/|H|) Σ_h ν_h on M(G), the generator of test data in
/// the left-invariant subspace.
pub fn project_left_invariant_group<S: Scalar>(
    ctx: &TransferContext,
    nu: &MeasureOn<S>,
) -> MeasureOn<S> {
    let w = ctx.haar().subgroup_weight();
    let mut acc = MeasureOn::zero(nu.space());
    for &h in ctx.subgroup().members() {
        let translated = translate_measure_left_group(ctx.group(), h, nu);
        acc = acc.add(&translated).expect("same space");
    }
    acc.map(|_, v| v.scale(&w))
}

/// The invariance classes distinguished on G and G/H.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceTag {
    /// A(G/H): functions on G/H with L_h φ = φ for all h in H.
    InvariantCosetFunctions,
    /// A(G:H): functions on G with L_h f = f for all h in H.
    LeftInvariantGroupFunctions,
    /// C(G:H): functions on G with R_h f = f for all h in H.
    RightInvariantGroupFunctions,
    /// M(G:H): measures on G with ν^h = ν for all h in H.
    RightInvariantGroupMeasures,
    /// 𝓜(G:H): measures on G with ν_h = ν for all h in H.
    LeftInvariantGroupMeasures,
    /// 𝓜(G/H): measures on G/H with λ_h = λ for all h in H; equivalently
    /// λ∘J = λ as functionals — both characterizations are tested.
    InvariantCosetMeasures,
}

impl SpaceTag {
    /// Stable CLI/JSON name of the tag.
    pub fn name(&self) -> &'static str {
        match self {
            SpaceTag::InvariantCosetFunctions => "A(G/H)",
            SpaceTag::LeftInvariantGroupFunctions => "A(G:H)",
            SpaceTag::RightInvariantGroupFunctions => "C(G:H)",
            SpaceTag::RightInvariantGroupMeasures => "M(G:H)",
            SpaceTag::LeftInvariantGroupMeasures => "M_l(G:H)",
            SpaceTag::InvariantCosetMeasures => "M_l(G/H)",
        }
    }

    pub fn parse(tag: &str) -> Result<Self, Error> {
        match tag {
            "A(G/H)" => Ok(SpaceTag::InvariantCosetFunctions),
            "A(G:H)" => Ok(SpaceTag::LeftInvariantGroupFunctions),
            "C(G:H)" => Ok(SpaceTag::RightInvariantGroupFunctions),
            "M(G:H)" => Ok(SpaceTag::RightInvariantGroupMeasures),
            "M_l(G:H)" => Ok(SpaceTag::LeftInvariantGroupMeasures),
            "M_l(G/H)" => Ok(SpaceTag::InvariantCosetMeasures),
            other => Err(Error::UnknownTag { tag: other.into() }),
        }
    }
}

/// An object whose membership in an invariance class can be tested.
#[derive(Debug, Clone)]
pub enum Member<'a, S> {
    FunctionGroup(&'a FunctionOn<S>),
    FunctionCosets(&'a FunctionOn<S>),
    MeasureGroup(&'a MeasureOn<S>),
    MeasureCosets(&'a MeasureOn<S>),
}

impl<'a, S> Member<'a, S> {
    fn object_name(&self) -> &'static str {
        match self {
            Member::FunctionGroup(_) => "function on G",
            Member::FunctionCosets(_) => "function on G/H",
            Member::MeasureGroup(_) => "measure on G",
            Member::MeasureCosets(_) => "measure on G/H",
        }
    }
}

/// Exact test of the defining invariance of `tag` for `member`.
///
/// Comparisons use `tol` in float mode and are exact otherwise.
pub fn membership<S: Scalar>(
    ctx: &TransferContext,
    member: Member<'_, S>,
    tag: SpaceTag,
    tol: f64,
) -> Result<bool, Error> {
    let mismatch = || Error::MembershipMismatch {
        tag: tag.name().to_string(),
        object: match &member {
            Member::FunctionGroup(_) => "function on G",
            Member::FunctionCosets(_) => "function on G/H",
            Member::MeasureGroup(_) => "measure on G",
            Member::MeasureCosets(_) => "measure on G/H",
        },
    };
    let _ = member.object_name();
    let members = ctx.subgroup().members();
    match (tag, &member) {
        (SpaceTag::InvariantCosetFunctions, Member::FunctionCosets(phi)) => Ok(members
            .iter()
            .all(|&h| translate_function_cosets(ctx.cosets(), h, phi).approx_eq(phi, tol))),
        (SpaceTag::LeftInvariantGroupFunctions, Member::FunctionGroup(f)) => Ok(members
            .iter()
            .all(|&h| translate_function_group(ctx.group(), h, f).approx_eq(f, tol))),
        (SpaceTag::RightInvariantGroupFunctions, Member::FunctionGroup(f)) => Ok(members
            .iter()
            .all(|&h| translate_function_right_group(ctx.group(), h, f).approx_eq(f, tol))),
        (SpaceTag::RightInvariantGroupMeasures, Member::MeasureGroup(nu)) => Ok(members
            .iter()
            .all(|&h| translate_measure_right_group(ctx.group(), h, nu).approx_eq(nu, tol))),
        (SpaceTag::LeftInvariantGroupMeasures, Member::MeasureGroup(nu)) => Ok(members
            .iter()
            .all(|&h| translate_measure_left_group(ctx.group(), h, nu).approx_eq(nu, tol))),
        (SpaceTag::InvariantCosetMeasures, Member::MeasureCosets(lambda)) => {
            let translation_invariant = members
                .iter()
                .all(|&h| translate_measure_left_cosets(ctx.cosets(), h, lambda).approx_eq(lambda, tol));
            // Functional characterization: λ(Jψ) = λ(ψ) for all basis ψ.
            let space = ctx.coset_space_id();
            let functional_fixed = ctx.cosets().indices().all(|i| {
                let psi = FunctionOn::<S>::indicator(space, i);
                let j_psi = j_function(ctx, &psi);
                let lhs = riesz_pair(lambda, &j_psi).expect("same space");
                let rhs = riesz_pair(lambda, &psi).expect("same space");
                lhs.approx_eq(&rhs, tol)
            });
            Ok(translation_invariant && functional_fixed)
        }
        _ => Err(mismatch()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{sup_norm, tv_norm};
    use crate::group::{catalog, Perm, PermGroup};
    use crate::scalar::{small_rational as rat, ExactScalar, RadicalSum, RealValue};

    type F = FunctionOn<ExactScalar>;
    type M = MeasureOn<ExactScalar>;

    fn sc(re: (i64, i64), im: (i64, i64)) -> ExactScalar {
        ExactScalar::from_rational(&rat(re.0, re.1), &rat(im.0, im.1))
    }

    /// S3 with H = <(01)>, plus the indices of (02) and (012).
    fn s3_ctx() -> (TransferContext, GroupElement, GroupElement) {
        let pg = PermGroup::new(3, &[vec![1, 0, 2], vec![1, 2, 0]], "S3", 100).unwrap();
        let g = Arc::new(pg.group.clone());
        let t01 = pg.index_of(&Perm::from_cycles(3, &[&[0, 1]])).unwrap();
        let h = crate::group::subgroup_closure(&g, &[t01], "<(01)>").unwrap();
        let ctx = TransferContext::new(&g, &h).unwrap();
        let t02 = pg.index_of(&Perm::from_cycles(3, &[&[0, 2]])).unwrap();
        let rot = pg.index_of(&Perm::from_cycles(3, &[&[0, 1, 2]])).unwrap();
        (ctx, t02, rot)
    }

    #[test]
    fn th_function_examples() {
        let (ctx, _, _) = s3_ctx();

        // f ≡ 1 averages to 1
        let one = F::constant(ctx.group_space(), ExactScalar::one());
        let th_one = th_function(&ctx, &one);
        assert_eq!(th_one, F::constant(ctx.coset_space_id(), ExactScalar::one()));

        // indicator of e averages to (1/2)·indicator of eH
        let ind_e = F::indicator(ctx.group_space(), ctx.group().identity().0);
        let th = th_function(&ctx, &ind_e);
        let expected = F::indicator(ctx.coset_space_id(), ctx.identity_coset())
            .scale(&sc((1, 2), (0, 1)));
        assert_eq!(th, expected);
    }

    #[test]
    fn th_is_bijection_for_trivial_subgroup() {
        let cat = catalog();
        let s3 = &cat[2];
        let ctx = TransferContext::new(&s3.group, &s3.subgroups[0]).unwrap();
        assert_eq!(ctx.cosets().len(), 6);
        let f = F::from_values(
            ctx.group_space(),
            (0..6).map(|i| sc((i as i64, 1), (1, i as i64 + 1))).collect(),
        );
        let down = th_function(&ctx, &f);
        // With H = {e} the coset map is a relabeling; values match pointwise.
        for g in ctx.group().elements() {
            assert_eq!(down.value(ctx.cosets().coset_of(g)), f.value(g.0));
        }
    }

    #[test]
    fn lift_then_average_is_identity() {
        let (ctx, _, _) = s3_ctx();
        let psi = F::from_values(
            ctx.coset_space_id(),
            vec![sc((1, 3), (2, 1)), sc((-1, 2), (0, 1)), ExactScalar::i()],
        );
        let lifted = lift_function(&ctx, &psi);
        assert_eq!(th_function(&ctx, &lifted), psi);
        assert_eq!(sup_norm(&lifted), sup_norm(&psi));
    }

    #[test]
    fn th_measure_pushforward_and_cancellation() {
        let (ctx, t02, _) = s3_ctx();

        // δ_g pushes to δ_{gH}
        let delta = M::delta(ctx.group_space(), t02.0);
        assert_eq!(
            th_measure(&ctx, &delta),
            M::delta(ctx.coset_space_id(), ctx.cosets().coset_of(t02))
        );

        // +1/-1 atoms inside one coset cancel: strict norm decrease
        let coset = ctx.cosets().coset(0);
        let mut atoms = vec![ExactScalar::zero(); 6];
        atoms[coset[0].0] = ExactScalar::one();
        atoms[coset[1].0] = ExactScalar::one().neg();
        let nu = M::from_atoms(ctx.group_space(), atoms);
        let pushed = th_measure(&ctx, &nu);
        assert_eq!(pushed, M::zero(ctx.coset_space_id()));
        assert_eq!(
            tv_norm(&pushed).cmp_value(&tv_norm(&nu)),
            std::cmp::Ordering::Less
        );
    }

    #[test]
    fn lift_measure_examples() {
        let (ctx, t02, _) = s3_ctx();

        // δ_{xH} lifts to uniform atoms 1/|H| on the coset xH
        let c = ctx.cosets().coset_of(t02);
        let lifted = lift_measure(&ctx, &M::delta(ctx.coset_space_id(), c));
        for g in ctx.group().elements() {
            let expected = if ctx.cosets().coset_of(g) == c {
                sc((1, 2), (0, 1))
            } else {
                ExactScalar::zero()
            };
            assert_eq!(lifted.atom(g.0), &expected);
        }

        // round trip and norm equality
        let lambda = M::from_atoms(
            ctx.coset_space_id(),
            vec![sc((3, 4), (-1, 2)), ExactScalar::i(), sc((-2, 1), (0, 1))],
        );
        let lifted = lift_measure(&ctx, &lambda);
        assert_eq!(th_measure(&ctx, &lifted), lambda);
        assert_eq!(tv_norm(&lifted), tv_norm(&lambda));

        // the lift is right-H-invariant
        assert!(membership(
            &ctx,
            Member::MeasureGroup(&lifted),
            SpaceTag::RightInvariantGroupMeasures,
            0.0
        )
        .unwrap());
    }

    #[test]
    fn j_examples_non_normal() {
        let (ctx, t02, _) = s3_ctx();
        let space = ctx.coset_space_id();

        // Jψ for ψ = indicator of (02)H: the average of the indicator over
        // {coset of h·(02) : h in H} = {(02)H, (12)H}, each hit once.
        let c02 = ctx.cosets().coset_of(t02);
        let psi = F::indicator(space, c02);
        let j_psi = j_function(&ctx, &psi);

        // enumerate h·(02) by hand through the group structure
        let mut expected = F::zero(space);
        for &h in ctx.subgroup().members() {
            let idx = ctx.cosets().coset_of(ctx.group().product(h, t02));
            expected = expected
                .add(&F::indicator(space, idx).scale(&sc((1, 2), (0, 1))))
                .unwrap();
        }
        assert_eq!(j_psi, expected);
        // and it is genuinely different from ψ (H non-normal)
        assert_ne!(j_psi, psi);

        // J is idempotent and lands in A(G/H)
        assert_eq!(j_function(&ctx, &j_psi), j_psi);
        assert!(membership(
            &ctx,
            Member::FunctionCosets(&j_psi),
            SpaceTag::InvariantCosetFunctions,
            0.0
        )
        .unwrap());
    }

    #[test]
    fn j_is_identity_for_normal_subgroups() {
        let cat = catalog();
        let c6 = &cat[1];
        let ctx = TransferContext::new(&c6.group, &c6.subgroups[0]).unwrap();
        for i in ctx.cosets().indices() {
            let psi = F::indicator(ctx.coset_space_id(), i);
            assert_eq!(j_function(&ctx, &psi), psi);
        }
    }

    #[test]
    fn membership_examples() {
        let (ctx, t02, _) = s3_ctx();
        let space = ctx.coset_space_id();

        // constants are left-invariant
        let c = F::constant(space, sc((2, 3), (1, 5)));
        assert!(membership(&ctx, Member::FunctionCosets(&c), SpaceTag::InvariantCosetFunctions, 0.0).unwrap());

        // δ_{eH} is in the invariant measures; δ_{(02)H} is not
        let d_e = M::delta(space, ctx.identity_coset());
        assert!(membership(&ctx, Member::MeasureCosets(&d_e), SpaceTag::InvariantCosetMeasures, 0.0).unwrap());
        let d_02 = M::delta(space, ctx.cosets().coset_of(t02));
        assert!(!membership(&ctx, Member::MeasureCosets(&d_02), SpaceTag::InvariantCosetMeasures, 0.0).unwrap());

        // tag/object mismatch errors
        assert!(matches!(
            membership(&ctx, Member::MeasureCosets(&d_e), SpaceTag::LeftInvariantGroupFunctions, 0.0),
            Err(Error::MembershipMismatch { .. })
        ));
    }

    #[test]
    fn project_invariant_examples() {
        let (ctx, t02, _) = s3_ctx();
        let space = ctx.coset_space_id();

        // fixed points stay fixed; zero stays zero
        let d_e = M::delta(space, ctx.identity_coset());
        assert_eq!(project_invariant(&ctx, &d_e), d_e);
        assert_eq!(project_invariant(&ctx, &M::zero(space)), M::zero(space));

        // δ_{(02)H} averages over its orbit {(02)H, (12)H}
        let c02 = ctx.cosets().coset_of(t02);
        let d = M::delta(space, c02);
        let projected = project_invariant(&ctx, &d);
        assert!(membership(&ctx, Member::MeasureCosets(&projected), SpaceTag::InvariantCosetMeasures, 0.0).unwrap());
        let half = sc((1, 2), (0, 1));
        let nonzero: Vec<(usize, ExactScalar)> = projected
            .atoms()
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .collect();
        assert_eq!(nonzero.len(), 2);
        assert!(nonzero.iter().all(|(_, a)| a == &half));
        assert!(nonzero.iter().any(|(i, _)| *i == c02));
    }

    #[test]
    fn representative_shuffles_do_not_change_operators() {
        let (ctx, t02, rot) = s3_ctx();
        // second member of each coset as the alternate representative
        let reps: Vec<GroupElement> = ctx
            .cosets()
            .indices()
            .map(|i| ctx.cosets().coset(i)[1])
            .collect();
        let shuffled = ctx.with_representatives(&reps).unwrap();

        let f = F::from_values(
            ctx.group_space(),
            (0..6).map(|i| sc((2 * i as i64 - 3, 5), (i as i64, 7))).collect(),
        );
        assert_eq!(th_function(&ctx, &f), th_function(&shuffled, &f));

        let psi = F::from_values(
            ctx.coset_space_id(),
            vec![sc((1, 1), (1, 2)), sc((0, 1), (-2, 3)), sc((4, 5), (0, 1))],
        );
        assert_eq!(j_function(&ctx, &psi), j_function(&shuffled, &psi));
        let _ = (t02, rot);
    }

    #[test]
    fn weil_identity_verified_for_all_catalog_pairs() {
        for entry in catalog() {
            for (g, h) in entry.pairs() {
                // construction itself checks the fibration identity
                TransferContext::new(g, h).unwrap();
                // and a non-unit weight keeps it intact
                TransferContext::with_group_weight(g, h, rat(3, 2)).unwrap();
            }
        }
    }

    #[test]
    fn functional_norm_duality_on_catalog_measures() {
        let (ctx, t02, _) = s3_ctx();
        let m = M::from_atoms(
            ctx.coset_space_id(),
            vec![sc((1, 1), (1, 1)), sc((-3, 2), (4, 3)), sc((0, 1), (-2, 7))],
        );
        assert_eq!(crate::analysis::functional_norm(&m), tv_norm(&m));
        let _ = t02;
        let zero: RadicalSum = RealValue::zero();
        assert_eq!(crate::analysis::functional_norm(&M::zero(ctx.coset_space_id())), zero);
    }
}

//! Subgroups: closure of a seed set, membership, and normality.

use super::{FiniteGroup, GroupElement};
use crate::error::Error;
use std::sync::Arc;

/// A subgroup of a [`FiniteGroup`], stored as a sorted member list.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<GroupElement>,
    label: String,
}

impl Subgroup {
    /// Smallest subgroup of `group` containing `seed`.
    pub fn closure(group: &Arc<FiniteGroup>, seed: &[GroupElement], label: &str) -> Result<Self, Error> {
        for &g in seed {
            if !group.contains(g) {
                return Err(Error::ElementOutOfRange {
                    element: g.0,
                    order: group.order(),
                });
            }
        }
        let mut member = vec![false; group.order()];
        member[group.identity().0] = true;
        let mut queue: Vec<GroupElement> = vec![group.identity()];
        for &g in seed {
            if !member[g.0] {
                member[g.0] = true;
                queue.push(g);
            }
        }
        let mut frontier = 0;
        while frontier < queue.len() {
            let a = queue[frontier];
            frontier += 1;
            let inv = group.inverse(a);
            if !member[inv.0] {
                member[inv.0] = true;
                queue.push(inv);
            }
            for i in 0..queue.len() {
                let b = queue[i];
                for prod in [group.product(a, b), group.product(b, a)] {
                    if !member[prod.0] {
                        member[prod.0] = true;
                        queue.push(prod);
                    }
                }
            }
        }
        let mut members: Vec<GroupElement> = queue;
        members.sort();
        Ok(Subgroup {
            parent: Arc::clone(group),
            members,
            label: label.to_string(),
        })
    }

    /// Wraps an explicit member list, verifying the subgroup axioms.
    pub fn from_members(
        group: &Arc<FiniteGroup>,
        members: &[GroupElement],
        label: &str,
    ) -> Result<Self, Error> {
        let sg = Subgroup::closure(group, members, label)?;
        let mut sorted: Vec<GroupElement> = members.to_vec();
        sorted.sort();
        sorted.dedup();
        if sg.members != sorted {
            return Err(Error::SubgroupMismatch {
                reason: format!("member list of '{label}' is not closed under product/inverse"),
            });
        }
        Ok(sg)
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Errors unless this subgroup was built from (a clone of) `group`.
    pub fn check_parent(&self, group: &FiniteGroup) -> Result<(), Error> {
        if self.parent.as_ref() != group {
            return Err(Error::SubgroupMismatch {
                reason: format!(
                    "subgroup '{}' belongs to '{}', not '{}'",
                    self.label,
                    self.parent.label(),
                    group.label()
                ),
            });
        }
        Ok(())
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(
    group: &Arc<FiniteGroup>,
    seed: &[GroupElement],
    label: &str,
) -> Result<Subgroup, Error> {
    Subgroup::closure(group, seed, label)
}

/// True iff g·h·g⁻¹ ∈ H for all g in G, h in H.
pub fn is_normal(group: &FiniteGroup, subgroup: &Subgroup) -> bool {
    group.elements().all(|g| {
        let g_inv = group.inverse(g);
        subgroup
            .members()
            .iter()
            .all(|&h| subgroup.contains(group.product(group.product(g, h), g_inv)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Perm;
    use crate::group::PermGroup;

    fn s3() -> (Arc<FiniteGroup>, PermGroup) {
        let pg = PermGroup::new(3, &[vec![1, 0, 2], vec![1, 2, 0]], "S3", 100).unwrap();
        (Arc::new(pg.group.clone()), pg)
    }

    #[test]
    fn trivial_and_improper_closures() {
        let (g, _) = s3();
        let trivial = subgroup_closure(&g, &[g.identity()], "{e}").unwrap();
        assert_eq!(trivial.order(), 1);

        let all: Vec<GroupElement> = g.elements().collect();
        let improper = subgroup_closure(&g, &all, "S3").unwrap();
        assert_eq!(improper.order(), 6);
    }

    #[test]
    fn transposition_generates_order_two() {
        let (g, pg) = s3();
        let t = pg.index_of(&Perm::from_cycles(3, &[&[0, 1]])).unwrap();
        let h = subgroup_closure(&g, &[t], "<(01)>").unwrap();
        assert_eq!(h.order(), 2);
        assert!(h.contains(g.identity()));
        assert!(h.contains(t));
    }

    #[test]
    fn lagrange_divisibility() {
        let (g, pg) = s3();
        for seed in [
            vec![pg.index_of(&Perm::from_cycles(3, &[&[0, 1]])).unwrap()],
            vec![pg.index_of(&Perm::from_cycles(3, &[&[0, 1, 2]])).unwrap()],
        ] {
            let h = subgroup_closure(&g, &seed, "H").unwrap();
            assert_eq!(g.order() % h.order(), 0);
        }
    }

    #[test]
    fn normality_in_s3() {
        let (g, pg) = s3();
        let trivial = subgroup_closure(&g, &[], "{e}").unwrap();
        assert!(is_normal(&g, &trivial));

        // A3 = <(012)> has index 2, hence normal.
        let rot = pg.index_of(&Perm::from_cycles(3, &[&[0, 1, 2]])).unwrap();
        let a3 = subgroup_closure(&g, &[rot], "A3").unwrap();
        assert_eq!(a3.order(), 3);
        assert!(is_normal(&g, &a3));

        // <(01)> is not normal: conjugation by (02) moves it.
        let t = pg.index_of(&Perm::from_cycles(3, &[&[0, 1]])).unwrap();
        let h = subgroup_closure(&g, &[t], "<(01)>").unwrap();
        assert!(!is_normal(&g, &h));
    }

    #[test]
    fn from_members_rejects_non_closed_sets() {
        let (g, pg) = s3();
        let t = pg.index_of(&Perm::from_cycles(3, &[&[0, 1]])).unwrap();
        let u = pg.index_of(&Perm::from_cycles(3, &[&[0, 2]])).unwrap();
        // {e, (01), (02)} is not closed.
        let err = Subgroup::from_members(&g, &[g.identity(), t, u], "bad").unwrap_err();
        assert!(matches!(err, Error::SubgroupMismatch { .. }));
    }
}

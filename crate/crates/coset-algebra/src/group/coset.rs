//! Left coset spaces G/H and, for normal H, the quotient group.

use super::{FiniteGroup, GroupElement, Subgroup};
use crate::error::Error;
use crate::group::is_normal;
use std::sync::Arc;

/// The left coset space G/H: a partition of G with a chosen representative
/// per coset. Coset indices are dense in 0..|G/H|.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    group: Arc<FiniteGroup>,
    subgroup: Subgroup,
    /// Cosets in order of least member index; each coset sorted ascending.
    cosets: Vec<Vec<GroupElement>>,
    representatives: Vec<GroupElement>,
    coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Number of cosets, |G| / |H|.
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coset(&self, index: usize) -> &[GroupElement] {
        &self.cosets[index]
    }

    pub fn representative(&self, index: usize) -> GroupElement {
        self.representatives[index]
    }

    pub fn coset_of(&self, g: GroupElement) -> usize {
        self.coset_of[g.0]
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        0..self.cosets.len()
    }

    /// Coset of the product z·(representative of coset `index`). This is the
    /// left action of G on G/H.
    pub fn act(&self, z: GroupElement, index: usize) -> usize {
        self.coset_of(self.group.product(z, self.representative(index)))
    }

    /// Same partition with a different representative per coset. Every
    /// formula evaluated at representatives must be invariant under this.
    pub fn with_representatives(&self, reps: &[GroupElement]) -> Result<CosetSpace, Error> {
        assert_eq!(reps.len(), self.cosets.len(), "one representative per coset");
        for (i, &r) in reps.iter().enumerate() {
            if self.coset_of(r) != i {
                return Err(Error::BadRepresentative {
                    element: r.0,
                    coset: i,
                });
            }
        }
        Ok(CosetSpace {
            group: Arc::clone(&self.group),
            subgroup: self.subgroup.clone(),
            cosets: self.cosets.clone(),
            representatives: reps.to_vec(),
            coset_of: self.coset_of.clone(),
        })
    }
}

/// Partition `group` into left cosets of `subgroup`, ordered by least-index
/// representative; the representative of each coset is its least member.
pub fn left_cosets(group: &Arc<FiniteGroup>, subgroup: &Subgroup) -> Result<CosetSpace, Error> {
    subgroup.check_parent(group)?;
    let order = group.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut cosets: Vec<Vec<GroupElement>> = Vec::new();
    let mut representatives = Vec::new();
    for g in group.elements() {
        if coset_of[g.0] != usize::MAX {
            continue;
        }
        let index = cosets.len();
        let mut members: Vec<GroupElement> = subgroup
            .members()
            .iter()
            .map(|&h| group.product(g, h))
            .collect();
        members.sort();
        for &m in &members {
            coset_of[m.0] = index;
        }
        representatives.push(members[0]);
        cosets.push(members);
    }
    Ok(CosetSpace {
        group: Arc::clone(group),
        subgroup: subgroup.clone(),
        cosets,
        representatives,
        coset_of,
    })
}

/// For normal H, the quotient group whose elements are the cosets of `space`,
/// indexed exactly as in `space`.
pub fn quotient_group(space: &CosetSpace) -> Result<FiniteGroup, Error> {
    let group = space.group();
    if !is_normal(group, space.subgroup()) {
        return Err(Error::NotNormal {
            group: group.label().to_string(),
            subgroup: space.subgroup().label().to_string(),
        });
    }
    let n = space.len();
    let mut table = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        let a = space.representative(i);
        for j in 0..n {
            row.push(space.coset_of(group.product(a, space.representative(j))));
        }
        table.push(row);
    }
    let label = format!("{}/{}", group.label(), space.subgroup().label());
    FiniteGroup::from_table(n, &table, &label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{subgroup_closure, Perm, PermGroup};

    fn s3_with(cycles: &[&[usize]]) -> (Arc<FiniteGroup>, Subgroup, GroupElement) {
        let pg = PermGroup::new(3, &[vec![1, 0, 2], vec![1, 2, 0]], "S3", 100).unwrap();
        let g = Arc::new(pg.group.clone());
        let seed = pg.index_of(&Perm::from_cycles(3, &cycles.to_vec())).unwrap();
        let h = subgroup_closure(&g, &[seed], "H").unwrap();
        (g, h, seed)
    }

    #[test]
    fn trivial_subgroup_gives_bijection() {
        let (g, _, _) = s3_with(&[&[0, 1]]);
        let trivial = subgroup_closure(&g, &[], "{e}").unwrap();
        let cs = left_cosets(&g, &trivial).unwrap();
        assert_eq!(cs.len(), 6);
        for e in g.elements() {
            assert_eq!(cs.coset_of(e), e.0);
        }
    }

    #[test]
    fn improper_subgroup_gives_point() {
        let (g, _, _) = s3_with(&[&[0, 1]]);
        let all: Vec<GroupElement> = g.elements().collect();
        let improper = subgroup_closure(&g, &all, "S3").unwrap();
        let cs = left_cosets(&g, &improper).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.coset(0).len(), 6);
    }

    #[test]
    fn s3_mod_order_two_has_three_cosets() {
        let (g, h, _) = s3_with(&[&[0, 1]]);
        let cs = left_cosets(&g, &h).unwrap();
        assert_eq!(cs.len(), 3);
        for i in cs.indices() {
            assert_eq!(cs.coset(i).len(), 2);
            assert_eq!(cs.representative(i), cs.coset(i)[0]);
        }
        // Identity's coset is H itself and its representative lies in H.
        let e_coset = cs.coset_of(g.identity());
        assert!(h.contains(cs.representative(e_coset)));
    }

    #[test]
    fn coset_equality_criterion() {
        // coset_of(x) == coset_of(y) iff x⁻¹y in H, exhaustively.
        let (g, h, _) = s3_with(&[&[0, 1]]);
        let cs = left_cosets(&g, &h).unwrap();
        for x in g.elements() {
            for y in g.elements() {
                let same = cs.coset_of(x) == cs.coset_of(y);
                let criterion = h.contains(g.product(g.inverse(x), y));
                assert_eq!(same, criterion);
            }
        }
    }

    #[test]
    fn representative_shuffle_keeps_partition() {
        let (g, h, _) = s3_with(&[&[0, 1]]);
        let cs = left_cosets(&g, &h).unwrap();
        // Pick the other member of each coset as representative.
        let reps: Vec<GroupElement> = cs.indices().map(|i| cs.coset(i)[1]).collect();
        let shuffled = cs.with_representatives(&reps).unwrap();
        for e in g.elements() {
            assert_eq!(cs.coset_of(e), shuffled.coset_of(e));
        }
        // A representative from the wrong coset is rejected.
        let bad = vec![cs.coset(1)[0]; cs.len()];
        assert!(cs.with_representatives(&bad).is_err());
    }

    #[test]
    fn quotient_by_a3_is_c2() {
        let (g, _, _) = s3_with(&[&[0, 1]]);
        let a3_seed = {
            let pg = PermGroup::new(3, &[vec![1, 0, 2], vec![1, 2, 0]], "S3", 100).unwrap();
            pg.index_of(&Perm::from_cycles(3, &[&[0, 1, 2]])).unwrap()
        };
        let a3 = subgroup_closure(&g, &[a3_seed], "A3").unwrap();
        let cs = left_cosets(&g, &a3).unwrap();
        let q = quotient_group(&cs).unwrap();
        assert_eq!(q.order(), 2);

        let (_, h, _) = s3_with(&[&[0, 1]]);
        let cs2 = left_cosets(&g, &h).unwrap();
        assert!(matches!(quotient_group(&cs2), Err(Error::NotNormal { .. })));
    }
}

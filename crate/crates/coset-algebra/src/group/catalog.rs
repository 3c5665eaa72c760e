//! A deterministic catalog of small groups with named subgroups, used as the
//! standing test bed for every check.

use super::{subgroup_closure, FiniteGroup, GroupElement, Perm, PermGroup, Subgroup};
use std::sync::Arc;

/// One catalog row: a group and the subgroups it is paired with.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub group: Arc<FiniteGroup>,
    pub subgroups: Vec<Subgroup>,
}

impl CatalogEntry {
    /// All (group, subgroup) pairs of this entry.
    pub fn pairs(&self) -> impl Iterator<Item = (&Arc<FiniteGroup>, &Subgroup)> {
        self.subgroups.iter().map(move |h| (&self.group, h))
    }
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn quaternion_table() -> Vec<Vec<usize>> {
    // Elements 0..8 are 1, -1, i, -i, j, -j, k, -k as (axis, sign) pairs.
    let decode = |x: usize| (x / 2, x % 2 == 1); // (axis in {1,i,j,k}, negated)
    let encode = |axis: usize, neg: bool| 2 * axis + usize::from(neg);
    // axis products: table[a][b] = (axis, sign) of a*b for axes 1,i,j,k.
    let axis_mul = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, b) => (b, false),
            (a, 0) => (a, false),
            (a, b) if a == b => (0, true), // i²=j²=k²=-1
            (1, 2) => (3, false),          // ij=k
            (2, 1) => (3, true),           // ji=-k
            (2, 3) => (1, false),          // jk=i
            (3, 2) => (1, true),           // kj=-i
            (3, 1) => (2, false),          // ki=j
            (1, 3) => (2, true),           // ik=-j
            _ => unreachable!(),
        }
    };
    (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (ax, nx) = decode(x);
                    let (ay, ny) = decode(y);
                    let (axis, neg) = axis_mul(ax, ay);
                    encode(axis, neg ^ nx ^ ny)
                })
                .collect()
        })
        .collect()
}

fn table_entry(order: usize, table: Vec<Vec<usize>>, label: &str, subgroups: &[(&str, Vec<usize>)]) -> CatalogEntry {
    let group = Arc::new(FiniteGroup::from_table(order, &table, label).expect("catalog table"));
    let subgroups = subgroups
        .iter()
        .map(|(name, seed)| {
            let seed: Vec<GroupElement> = seed.iter().map(|&i| GroupElement(i)).collect();
            subgroup_closure(&group, &seed, name).expect("catalog subgroup")
        })
        .collect();
    CatalogEntry { group, subgroups }
}

fn perm_entry(
    degree: usize,
    generators: &[&[&[usize]]],
    label: &str,
    subgroups: &[(&str, &[&[&[usize]]])],
) -> CatalogEntry {
    let gens: Vec<Vec<usize>> = generators
        .iter()
        .map(|cycles| Perm::from_cycles(degree, cycles).one_line().to_vec())
        .collect();
    let pg = PermGroup::new(degree, &gens, label, super::DEFAULT_CLOSURE_BUDGET).expect("catalog group");
    let group = Arc::new(pg.group.clone());
    let subgroups = subgroups
        .iter()
        .map(|(name, seeds)| {
            let seed: Vec<GroupElement> = seeds
                .iter()
                .map(|cycles| {
                    pg.index_of(&Perm::from_cycles(degree, cycles))
                        .expect("catalog seed element")
                })
                .collect();
            subgroup_closure(&group, &seed, name).expect("catalog subgroup")
        })
        .collect();
    CatalogEntry { group, subgroups }
}

/// The standing catalog. Deterministic: identical output on every call.
///
/// 18 (group, subgroup) pairs covering trivial, proper normal, proper
/// non-normal, and improper subgroups up to |G| = 24.
pub fn catalog() -> Vec<CatalogEntry> {
    let e: &[&[usize]] = &[];
    vec![
        table_entry(2, cyclic_table(2), "C2", &[("{e}", vec![]), ("C2", vec![1])]),
        table_entry(6, cyclic_table(6), "C6", &[("C2", vec![3]), ("C3", vec![2])]),
        perm_entry(
            3,
            &[&[&[0, 1]], &[&[0, 1, 2]]],
            "S3",
            &[
                ("{e}", &[e]),
                ("<(01)>", &[&[&[0, 1]]]),
                ("A3", &[&[&[0, 1, 2]]]),
                ("S3", &[&[&[0, 1]], &[&[0, 1, 2]]]),
            ],
        ),
        perm_entry(
            4,
            &[&[&[0, 1, 2, 3]], &[&[1, 3]]],
            "D4",
            &[
                ("Z(D4)", &[&[&[0, 2], &[1, 3]]]),
                ("<r>", &[&[&[0, 1, 2, 3]]]),
                ("<s>", &[&[&[1, 3]]]),
            ],
        ),
        table_entry(8, quaternion_table(), "Q8", &[("<-1>", vec![1]), ("<i>", vec![2])]),
        perm_entry(
            4,
            &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]],
            "A4",
            &[
                ("V4", &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
                ("<(012)>", &[&[&[0, 1, 2]]]),
            ],
        ),
        perm_entry(
            4,
            &[&[&[0, 1]], &[&[0, 1, 2, 3]]],
            "S4",
            &[
                ("S3", &[&[&[0, 1]], &[&[0, 1, 2]]]),
                ("V4", &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
                ("A4", &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]),
            ],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_normal, left_cosets};

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        let labels: Vec<&str> = cat.iter().map(|c| c.group.label()).collect();
        assert_eq!(labels, ["C2", "C6", "S3", "D4", "Q8", "A4", "S4"]);
        let orders: Vec<usize> = cat.iter().map(|c| c.group.order()).collect();
        assert_eq!(orders, [2, 6, 6, 8, 8, 12, 24]);
        let pairs: usize = cat.iter().map(|c| c.subgroups.len()).sum();
        assert!(pairs >= 12, "need at least 12 pairs, have {pairs}");
    }

    #[test]
    fn s3_lists_four_subgroups() {
        let cat = catalog();
        let s3 = &cat[2];
        let labels: Vec<&str> = s3.subgroups.iter().map(|h| h.label()).collect();
        assert_eq!(labels, ["{e}", "<(01)>", "A3", "S3"]);
        let orders: Vec<usize> = s3.subgroups.iter().map(|h| h.order()).collect();
        assert_eq!(orders, [1, 2, 3, 6]);
    }

    #[test]
    fn every_group_passes_exhaustive_axioms() {
        for entry in catalog() {
            entry.group.check_associativity().unwrap();
            entry.group.check_latin_square().unwrap();
        }
    }

    #[test]
    fn every_pair_satisfies_lagrange_and_partition() {
        for entry in catalog() {
            for (g, h) in entry.pairs() {
                assert_eq!(g.order() % h.order(), 0, "{}/{}", g.label(), h.label());
                let cs = left_cosets(g, h).unwrap();
                assert_eq!(cs.len() * h.order(), g.order());
                for i in cs.indices() {
                    assert_eq!(cs.coset(i).len(), h.order());
                }
            }
        }
    }

    #[test]
    fn normality_flags() {
        let cat = catalog();
        let flag = |gi: usize, hi: usize| {
            let e = &cat[gi];
            is_normal(&e.group, &e.subgroups[hi])
        };
        // S3: {e} and A3 and S3 normal, <(01)> not.
        assert!(flag(2, 0) && flag(2, 2) && flag(2, 3));
        assert!(!flag(2, 1));
        // D4: center and rotations normal, <s> not.
        assert!(flag(3, 0) && flag(3, 1));
        assert!(!flag(3, 2));
        // Q8: every subgroup normal.
        assert!(flag(4, 0) && flag(4, 1));
        // A4: V4 normal, <(012)> not.
        assert!(flag(5, 0));
        assert!(!flag(5, 1));
        // S4: V4 and A4 normal, S3 not.
        assert!(!flag(6, 0));
        assert!(flag(6, 1) && flag(6, 2));
    }

    #[test]
    fn left_right_coset_agreement_iff_normal() {
        for entry in catalog() {
            for (g, h) in entry.pairs() {
                let normal = is_normal(g, h);
                // Every left coset equals the corresponding right coset?
                let same = g.elements().all(|x| {
                    let left: std::collections::BTreeSet<_> =
                        h.members().iter().map(|&m| g.product(x, m)).collect();
                    let right: std::collections::BTreeSet<_> =
                        h.members().iter().map(|&m| g.product(m, x)).collect();
                    left == right
                });
                assert_eq!(normal, same, "{}/{}", g.label(), h.label());
            }
        }
    }
}

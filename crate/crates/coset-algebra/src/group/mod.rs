//! Finite groups with materialized multiplication tables, their subgroups,
//! and left coset spaces.

mod catalog;
mod coset;
mod perm;
mod subgroup;

pub use catalog::{catalog, CatalogEntry};
pub use coset::{left_cosets, quotient_group, CosetSpace};
pub use perm::{bfs_closure, Perm};
pub use subgroup::{is_normal, subgroup_closure, Subgroup};

use crate::error::Error;
use num::rational::BigRational;
use num::One;
use std::sync::Arc;

/// Default cap on closure size when generating groups from permutations.
pub const DEFAULT_CLOSURE_BUDGET: usize = 10_080;

/// An element of a [`FiniteGroup`], identified by a dense index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub usize);

/// A finite group with a materialized multiplication table.
///
/// Immutable after construction; share via `Arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `table[a * order + b]` is the index of a·b.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    /// Validates a multiplication table and computes identity and inverses.
    pub fn from_table(order: usize, table: &[Vec<usize>], label: &str) -> Result<Self, Error> {
        assert!(order > 0, "group order must be positive");
        if table.len() != order {
            return Err(Error::parse(
                format!("group '{label}'"),
                format!("table has {} rows, expected {order}", table.len()),
            ));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(Error::parse(
                    format!("group '{label}'"),
                    format!("row {row} has {} entries, expected {order}", r.len()),
                ));
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(Error::TableEntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value);
            }
        }
        Self::from_flat_table(order, flat, label, true)
    }

    fn from_flat_table(
        order: usize,
        table: Vec<usize>,
        label: &str,
        check_associativity: bool,
    ) -> Result<Self, Error> {
        // Latin square: each row and column is a permutation.
        for i in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for j in 0..order {
                let r = table[i * order + j];
                if row_seen[r] {
                    return Err(Error::NotLatinSquare {
                        axis: "row",
                        index: i,
                        value: r,
                    });
                }
                row_seen[r] = true;
                let c = table[j * order + i];
                if col_seen[c] {
                    return Err(Error::NotLatinSquare {
                        axis: "column",
                        index: i,
                        value: c,
                    });
                }
                col_seen[c] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or(Error::NoIdentity)?;
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order)
                .find(|&b| table[a * order + b] == identity && table[b * order + a] == identity)
            {
                Some(b) => inverses[a] = b,
                None => return Err(Error::NotInvertible { element: a }),
            }
        }
        if check_associativity {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b];
                    for c in 0..order {
                        let bc = table[b * order + c];
                        if table[ab * order + c] != table[a * order + bc] {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            table,
            identity,
            inverses,
            label: label.to_string(),
        })
    }

    /// Group generated by permutations of {0, .., degree-1}, with the
    /// default closure budget. Element indices follow the breadth-first
    /// discovery order, so the identity is element 0.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        label: &str,
    ) -> Result<Self, Error> {
        Ok(PermGroup::new(degree, generators, label, DEFAULT_CLOSURE_BUDGET)?.group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    pub fn product(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.table[a.0 * self.order + b.0])
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverses[a.0])
    }

    /// The modular function Δ_G. Finite groups are unimodular, so this is
    /// the constant-1 map; it is kept explicit so involution formulas can be
    /// written exactly as stated.
    pub fn modular_function(&self, _g: GroupElement) -> BigRational {
        BigRational::one()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(GroupElement)
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.0 < self.order
    }

    /// Exhaustive associativity audit, exposed for catalog self-tests.
    pub fn check_associativity(&self) -> Result<(), Error> {
        for a in 0..self.order {
            for b in 0..self.order {
                let ab = self.table[a * self.order + b];
                for c in 0..self.order {
                    let bc = self.table[b * self.order + c];
                    if self.table[ab * self.order + c] != self.table[a * self.order + bc] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive Latin-square audit, exposed for catalog self-tests.
    pub fn check_latin_square(&self) -> Result<(), Error> {
        Self::from_flat_table(self.order, self.table.clone(), &self.label, false).map(|_| ())
    }
}

/// A permutation group together with the permutations realizing each element,
/// so callers can locate elements by their action.
pub struct PermGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Perm>,
}

impl PermGroup {
    pub fn new(
        degree: usize,
        generators: &[Vec<usize>],
        label: &str,
        budget: usize,
    ) -> Result<Self, Error> {
        let mut gens = Vec::with_capacity(generators.len());
        for (index, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::NotAPermutation { index, degree });
            }
            gens.push(Perm::new(g.clone()).ok_or(Error::NotAPermutation { index, degree })?);
        }
        let perms = bfs_closure(degree, &gens, budget)?;
        let order = perms.len();
        let mut index = std::collections::HashMap::with_capacity(order);
        for (i, p) in perms.iter().enumerate() {
            index.insert(p.clone(), i);
        }
        let mut table = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                table.push(index[&a.compose(b)]);
            }
        }
        // Composition of functions is associative, so only the structural
        // checks run here.
        let group = FiniteGroup::from_flat_table(order, table, label, false)?;
        Ok(PermGroup { group, perms })
    }

    /// Index of the element acting as `perm`, if it is in the group.
    pub fn index_of(&self, perm: &Perm) -> Option<GroupElement> {
        self.perms.iter().position(|p| p == perm).map(GroupElement)
    }
}

/// Convenience wrapper matching the shape of stored context objects.
pub type GroupRef = Arc<FiniteGroup>;

//! Permutations on {0, .., degree-1} and breadth-first closure of a
//! generating set, used to build concrete groups.

use crate::error::Error;
use std::collections::HashMap;

/// A permutation in one-line notation: `map[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            map: (0..degree).collect(),
        }
    }

    /// Validates that `map` is a bijection on 0..map.len().
    pub fn new(map: Vec<usize>) -> Option<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { map })
    }

    /// From disjoint-cycle notation, e.g. `&[&[0, 1, 2]]` for (0 1 2).
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Self {
        let mut map: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for i in 0..cycle.len() {
                map[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Perm { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point]
    }

    /// Function composition: (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Perm { map }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.map
    }
}

/// Closure of `generators` under composition, indexed breadth-first from the
/// identity with generators applied in the given order. Element 0 is always
/// the identity, so the indexing is deterministic.
pub fn bfs_closure(
    degree: usize,
    generators: &[Perm],
    budget: usize,
) -> Result<Vec<Perm>, Error> {
    let id = Perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::new();
    index.insert(id, 0);
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = current.compose(g);
            if !index.contains_key(&next) {
                if elements.len() >= budget {
                    return Err(Error::ClosureBudgetExceeded { budget });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let p = Perm::from_cycles(3, &[&[0, 1, 2]]);
        assert_eq!(p.compose(&p.inverse()), Perm::identity(3));
        // (0 1 2) applied twice sends 0 to 2
        assert_eq!(p.compose(&p).apply(0), 2);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(vec![0, 0, 1]).is_none());
        assert!(Perm::new(vec![0, 3, 1]).is_none());
    }

    #[test]
    fn closure_of_s3_generators() {
        let gens = vec![
            Perm::from_cycles(3, &[&[0, 1]]),
            Perm::from_cycles(3, &[&[0, 1, 2]]),
        ];
        let elements = bfs_closure(3, &gens, 100).unwrap();
        assert_eq!(elements.len(), 6);
        assert_eq!(elements[0], Perm::identity(3));
    }

    #[test]
    fn closure_budget_is_enforced() {
        let gens = vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]), Perm::from_cycles(5, &[&[0, 1]])];
        // S5 has 120 elements; a budget of 50 must trip.
        assert_eq!(
            bfs_closure(5, &gens, 50),
            Err(Error::ClosureBudgetExceeded { budget: 50 })
        );
    }
}

//! Index spaces and the dense function/measure containers over them.

use crate::error::Error;
use crate::scalar::Scalar;
use serde_json::json;
use std::fmt;

/// Which carrier a function or measure lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceKind {
    /// The group itself; indices are element indices.
    Group,
    /// The left coset space G/H; indices are coset indices.
    Cosets,
}

/// A finite index set: the kind plus its cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceId {
    pub kind: SpaceKind,
    pub size: usize,
}

impl SpaceId {
    pub fn group(size: usize) -> Self {
        SpaceId {
            kind: SpaceKind::Group,
            size,
        }
    }

    pub fn cosets(size: usize) -> Self {
        SpaceId {
            kind: SpaceKind::Cosets,
            size,
        }
    }

    pub fn json_tag(&self) -> &'static str {
        match self.kind {
            SpaceKind::Group => "G",
            SpaceKind::Cosets => "G/H",
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.json_tag(), self.size)
    }
}

pub(crate) fn require_same_space(a: SpaceId, b: SpaceId) -> Result<(), Error> {
    if a != b {
        return Err(Error::SpaceMismatch {
            left: a.to_string(),
            right: b.to_string(),
        });
    }
    Ok(())
}

/// A complex-valued function on a finite index set, stored densely.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionOn<S> {
    space: SpaceId,
    values: Vec<S>,
}

/// An atomic complex measure on a finite index set: `atom(i)` is the mass of
/// the singleton {i}. On a finite space every complex measure has this form.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureOn<S> {
    space: SpaceId,
    atoms: Vec<S>,
}

impl<S: Scalar> FunctionOn<S> {
    pub fn zero(space: SpaceId) -> Self {
        FunctionOn {
            space,
            values: vec![S::zero(); space.size],
        }
    }

    pub fn from_values(space: SpaceId, values: Vec<S>) -> Self {
        assert_eq!(space.size, values.len(), "value vector must cover the space");
        FunctionOn { space, values }
    }

    pub fn indicator(space: SpaceId, index: usize) -> Self {
        let mut f = Self::zero(space);
        f.values[index] = S::one();
        f
    }

    pub fn constant(space: SpaceId, value: S) -> Self {
        FunctionOn {
            space,
            values: vec![value; space.size],
        }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, index: usize) -> &S {
        &self.values[index]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn map(&self, f: impl Fn(usize, &S) -> S) -> Self {
        FunctionOn {
            space: self.space,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| f(i, v))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        require_same_space(self.space, other.space)?;
        Ok(self.map(|i, v| v.add(other.value(i))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        require_same_space(self.space, other.space)?;
        Ok(self.map(|i, v| v.sub(other.value(i))))
    }

    pub fn scale(&self, a: &S) -> Self {
        self.map(|_, v| v.mul(a))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.space == other.space
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "space": self.space.json_tag(),
            "values": entries_json(&self.values),
        })
    }

    pub fn from_json(v: &serde_json::Value, space: SpaceId) -> Result<Self, Error> {
        let values = entries_from_json(v, "values", space)?;
        Ok(FunctionOn { space, values })
    }
}

impl<S: Scalar> MeasureOn<S> {
    pub fn zero(space: SpaceId) -> Self {
        MeasureOn {
            space,
            atoms: vec![S::zero(); space.size],
        }
    }

    pub fn from_atoms(space: SpaceId, atoms: Vec<S>) -> Self {
        assert_eq!(space.size, atoms.len(), "atom vector must cover the space");
        MeasureOn { space, atoms }
    }

    /// The unit point mass at `index`.
    pub fn delta(space: SpaceId, index: usize) -> Self {
        let mut m = Self::zero(space);
        m.atoms[index] = S::one();
        m
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom(&self, index: usize) -> &S {
        &self.atoms[index]
    }

    pub fn atoms(&self) -> &[S] {
        &self.atoms
    }

    /// Indices with nonzero mass; convolution loops skip the rest.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
    }

    pub fn map(&self, f: impl Fn(usize, &S) -> S) -> Self {
        MeasureOn {
            space: self.space,
            atoms: self
                .atoms
                .iter()
                .enumerate()
                .map(|(i, v)| f(i, v))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        require_same_space(self.space, other.space)?;
        Ok(self.map(|i, v| v.add(other.atom(i))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        require_same_space(self.space, other.space)?;
        Ok(self.map(|i, v| v.sub(other.atom(i))))
    }

    pub fn scale(&self, a: &S) -> Self {
        self.map(|_, v| v.mul(a))
    }

    pub fn total_mass(&self) -> S {
        self.atoms.iter().fold(S::zero(), |acc, a| acc.add(a))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.space == other.space
            && self
                .atoms
                .iter()
                .zip(&other.atoms)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "space": self.space.json_tag(),
            "atoms": entries_json(&self.atoms),
        })
    }

    pub fn from_json(v: &serde_json::Value, space: SpaceId) -> Result<Self, Error> {
        let atoms = entries_from_json(v, "atoms", space)?;
        Ok(MeasureOn { space, atoms })
    }
}

fn entries_json<S: Scalar>(values: &[S]) -> serde_json::Value {
    let list: Vec<serde_json::Value> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| {
            let mut obj = serde_json::Map::new();
            obj.insert("index".into(), json!(i));
            if let serde_json::Value::Object(fields) = v.to_json() {
                obj.extend(fields);
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    json!(list)
}

fn entries_from_json<S: Scalar>(
    v: &serde_json::Value,
    key: &str,
    space: SpaceId,
) -> Result<Vec<S>, Error> {
    let list = v
        .get(key)
        .and_then(|a| a.as_array())
        .ok_or_else(|| Error::parse(key, format!("missing '{key}' array")))?;
    let mut values = vec![S::zero(); space.size];
    for (pos, entry) in list.iter().enumerate() {
        let index = entry
            .get("index")
            .and_then(|i| i.as_u64())
            .ok_or_else(|| Error::parse(format!("{key}[{pos}]"), "missing integer 'index'"))?
            as usize;
        if index >= space.size {
            return Err(Error::parse(
                format!("{key}[{pos}]"),
                format!("index {index} out of range for {space}"),
            ));
        }
        values[index] = S::from_json(entry)?;
    }
    Ok(values)
}

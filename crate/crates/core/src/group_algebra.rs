//! Number-theoretic and permutation-group primitives: divisors, Euler's
//! totient, integer partitions, cycle types, and explicit permutation groups
//! acting on the `2n` circle points.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{BigCount, Error, Result};

/// Default cap on the order of a group built by [`generate_group`].
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

pub fn euler_phi(m: u64) -> Result<BigCount> {
    if m == 0 {
        return Err(Error::domain("euler_phi is defined for m >= 1"));
    }
    let mut result = m;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    Ok(BigUint::from(result))
}

/// Divisors of `m` in ascending order.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    if m == 0 {
        return Err(Error::domain("divisors are defined for m >= 1"));
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            low.push(d);
            if d * d != m {
                high.push(m / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Multiset of cycle lengths, stored as `length -> multiplicity`.
///
/// Zero multiplicities are never stored, so two cycle types compare equal
/// exactly when they describe the same multiset.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a cycle type from a list of cycle lengths (any order).
    pub fn from_lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Result<Self> {
        let mut ct = CycleType::new();
        for len in lengths {
            if len == 0 {
                return Err(Error::domain("cycle lengths must be positive"));
            }
            ct.add(len, 1);
        }
        Ok(ct)
    }

    /// Builds a cycle type from `(length, multiplicity)` pairs; zero
    /// multiplicities are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut ct = CycleType::new();
        for (len, mult) in pairs {
            if len == 0 {
                return Err(Error::domain("cycle lengths must be positive"));
            }
            ct.add(len, mult);
        }
        Ok(ct)
    }

    pub(crate) fn add(&mut self, len: usize, mult: usize) {
        if mult > 0 {
            *self.parts.entry(len).or_insert(0) += mult;
        }
    }

    /// Multiplicity of cycles of length `len` (zero if absent).
    pub fn count(&self, len: usize) -> usize {
        self.parts.get(&len).copied().unwrap_or(0)
    }

    /// Sum of length × multiplicity.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|(l, m)| l * m).sum()
    }

    /// Total number of cycles.
    pub fn cycles(&self) -> usize {
        self.parts.values().sum()
    }

    /// `(length, multiplicity)` pairs in ascending length order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().map(|(&l, &m)| (l, m))
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for CycleType {
    /// Exponent notation, e.g. `1^2 2^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let mut first = true;
        for (l, m) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}^{m}")?;
        }
        Ok(())
    }
}

/// Iterator over the integer partitions of `n` in descending-lexicographic
/// order of their part lists: `[n]`, `[n-1, 1]`, …, `[1, …, 1]`.
#[derive(Debug, Clone)]
pub struct Partitions {
    parts: Vec<usize>,
    done: bool,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        parts: if n == 0 { Vec::new() } else { vec![n] },
        done: false,
    }
}

impl Partitions {
    /// Advances `parts` to the next partition; returns false after the last.
    fn step(&mut self) -> bool {
        // Strip trailing ones, then decrement the rightmost part > 1 and
        // refill greedily with parts no larger than it.
        let mut ones = 0;
        while self.parts.last() == Some(&1) {
            self.parts.pop();
            ones += 1;
        }
        let Some(last) = self.parts.last_mut() else {
            return false;
        };
        *last -= 1;
        let cap = *last;
        let mut rest = ones + 1;
        while rest > 0 {
            let piece = rest.min(cap);
            self.parts.push(piece);
            rest -= piece;
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        if self.done {
            return None;
        }
        let ct = CycleType::from_lengths(self.parts.iter().copied())
            .expect("partition parts are positive");
        if !self.step() {
            self.done = true;
        }
        Some(ct)
    }
}

/// How a [`GroupElement`] acts on the circle, when it has a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Form {
    /// `v ↦ (v + shift) mod 2n`
    Rotation { shift: usize },
    /// `v ↦ (shift − v) mod 2n`
    Reflection { shift: usize },
    /// Given only by its image array.
    Explicit,
}

/// A permutation of the circle points `[0, 2n)`.
///
/// Identity is the image array alone: equality, ordering and hashing ignore
/// the recorded [`Form`].
#[derive(Debug, Clone)]
pub struct GroupElement {
    form: Form,
    images: Vec<usize>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for GroupElement {}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.cmp(&other.images)
    }
}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state)
    }
}

impl GroupElement {
    pub fn identity(points: usize) -> Self {
        Self::rotation(points, 0).expect("shift 0 is always valid")
    }

    pub fn rotation(points: usize, shift: usize) -> Result<Self> {
        if points == 0 {
            return Err(Error::domain("a group element needs at least one point"));
        }
        let shift = shift % points;
        Ok(GroupElement {
            form: Form::Rotation { shift },
            images: (0..points).map(|v| (v + shift) % points).collect(),
        })
    }

    pub fn reflection(points: usize, shift: usize) -> Result<Self> {
        if points == 0 {
            return Err(Error::domain("a group element needs at least one point"));
        }
        let shift = shift % points;
        Ok(GroupElement {
            form: Form::Reflection { shift },
            images: (0..points).map(|v| (shift + points - v) % points).collect(),
        })
    }

    /// Wraps a 0-based image array, checking that it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let points = images.len();
        if points == 0 {
            return Err(Error::domain("a group element needs at least one point"));
        }
        let mut seen = vec![false; points];
        for &w in &images {
            if w >= points || std::mem::replace(&mut seen[w], true) {
                return Err(Error::domain(format!(
                    "image array {images:?} is not a bijection on [0, {points})"
                )));
            }
        }
        let form = classify(&images);
        Ok(GroupElement { form, images })
    }

    /// Wraps a 1-based image array, as used in group files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::domain("1-based image arrays cannot contain 0"));
        }
        Self::from_images(images.iter().map(|&w| w - 1).collect())
    }

    pub fn points(&self) -> usize {
        self.images.len()
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of point `v`, computed from the closed form when there is one.
    pub fn act(&self, v: usize) -> usize {
        let points = self.images.len();
        match self.form {
            Form::Rotation { shift } => (v + shift) % points,
            Form::Reflection { shift } => (shift + points - v % points) % points,
            Form::Explicit => self.images[v],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.points() != other.points() {
            return Err(Error::domain(format!(
                "cannot compose permutations of {} and {} points",
                self.points(),
                other.points()
            )));
        }
        let images: Vec<usize> = other.images.iter().map(|&w| self.images[w]).collect();
        let form = classify(&images);
        Ok(GroupElement { form, images })
    }

    pub fn inverse(&self) -> GroupElement {
        let mut images = vec![0; self.points()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        let form = classify(&images);
        GroupElement { form, images }
    }

    /// Order of the element in the symmetric group (lcm of its cycle lengths).
    pub fn order(&self) -> usize {
        cycle_type_of(self)
            .iter()
            .fold(1usize, |acc, (len, _)| acc.lcm(&len))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            Form::Rotation { shift } => write!(f, "rotation({shift})"),
            Form::Reflection { shift } => write!(f, "reflection({shift})"),
            Form::Explicit => {
                let one_based: Vec<usize> = self.images.iter().map(|w| w + 1).collect();
                write!(f, "{one_based:?}")
            }
        }
    }
}

fn classify(images: &[usize]) -> Form {
    let points = images.len();
    let s = images[0];
    if images.iter().enumerate().all(|(v, &w)| w == (v + s) % points) {
        Form::Rotation { shift: s }
    } else if images
        .iter()
        .enumerate()
        .all(|(v, &w)| w == (s + points - v) % points)
    {
        Form::Reflection { shift: s }
    } else {
        Form::Explicit
    }
}

pub fn cycle_type_of(g: &GroupElement) -> CycleType {
    let points = g.points();
    let mut seen = vec![false; points];
    let mut ct = CycleType::new();
    for start in 0..points {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = g.images[v];
            len += 1;
        }
        ct.add(len, 1);
    }
    ct
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Identity,
    Cyclic,
    Dihedral,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Identity => "identity",
            GroupKind::Cyclic => "cyclic",
            GroupKind::Dihedral => "dihedral",
        })
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(GroupKind::Identity),
            "cyclic" => Ok(GroupKind::Cyclic),
            "dihedral" => Ok(GroupKind::Dihedral),
            other => Err(Error::domain(format!("unknown group kind `{other}`"))),
        }
    }
}

/// A finite permutation group on `[0, points)`, stored as its full element
/// list sorted by image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    points: usize,
    elements: Vec<GroupElement>,
    label: String,
}

impl PermGroup {
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Short human-readable descriptor, e.g. `C_8`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of elements of each cycle type.
    pub fn cycle_type_histogram(&self) -> BTreeMap<CycleType, usize> {
        let mut hist = BTreeMap::new();
        for g in &self.elements {
            *hist.entry(cycle_type_of(g)).or_insert(0) += 1;
        }
        hist
    }

    fn from_elements(points: usize, mut elements: Vec<GroupElement>, label: String) -> Self {
        elements.sort();
        elements.dedup();
        PermGroup {
            points,
            elements,
            label,
        }
    }
}

fn check_points(points: usize) -> Result<()> {
    if points < 2 || !points.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "the number of circle points must be even and at least 2, got {points}"
        )));
    }
    Ok(())
}

pub fn make_standard_group(kind: GroupKind, points: usize) -> Result<PermGroup> {
    check_points(points)?;
    let mut elements = vec![GroupElement::identity(points)];
    if matches!(kind, GroupKind::Cyclic | GroupKind::Dihedral) {
        for s in 1..points {
            elements.push(GroupElement::rotation(points, s)?);
        }
    }
    if kind == GroupKind::Dihedral {
        for s in 0..points {
            elements.push(GroupElement::reflection(points, s)?);
        }
    }
    let label = match kind {
        GroupKind::Identity => format!("1_{points}"),
        GroupKind::Cyclic => format!("C_{points}"),
        GroupKind::Dihedral => format!("D_{points}"),
    };
    Ok(PermGroup::from_elements(points, elements, label))
}

/// Closure of `generators` under composition, capped at
/// [`DEFAULT_CLOSURE_CAP`] elements.
pub fn generate_group(generators: &[GroupElement], points: usize) -> Result<PermGroup> {
    generate_group_capped(generators, points, DEFAULT_CLOSURE_CAP)
}

pub fn generate_group_capped(
    generators: &[GroupElement],
    points: usize,
    cap: usize,
) -> Result<PermGroup> {
    if points == 0 {
        return Err(Error::domain("a group needs at least one point"));
    }
    if let Some(g) = generators.iter().find(|g| g.points() != points) {
        return Err(Error::domain(format!(
            "generator {g} acts on {} points, expected {points}",
            g.points()
        )));
    }
    let identity = GroupElement::identity(points);
    let mut seen: BTreeSet<GroupElement> = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    // Right-multiplying by generators reaches every element of a finite
    // group; inverses are positive powers.
    while let Some(h) = queue.pop_front() {
        for g in generators {
            let next = h.compose(g)?;
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::resource(format!(
                        "group closure exceeds {cap} elements"
                    )));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let label = format!("<{} generators on {points} points>", generators.len());
    Ok(PermGroup::from_elements(
        points,
        seen.into_iter().collect(),
        label,
    ))
}

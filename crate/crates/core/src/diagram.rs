//! Chord diagrams as fixed-point-free involutions on the circle points.
//!
//! The circle itself is implicit in the cyclic order of `[0, 2n)`; a diagram
//! only stores its chords, as a `partner` array.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group_algebra::{GroupElement, PermGroup};
use crate::{Error, Result};

const UNMATCHED: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    partner: Vec<usize>,
}

impl ChordDiagram {
    /// Validates that `partner` is a fixed-point-free involution.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self> {
        let points = partner.len();
        if points == 0 || !points.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "a chord diagram needs a positive even number of points, got {points}"
            )));
        }
        for (v, &w) in partner.iter().enumerate() {
            if w >= points || w == v || partner[w] != v {
                return Err(Error::domain(format!(
                    "partner array {partner:?} is not a fixed-point-free involution"
                )));
            }
        }
        Ok(ChordDiagram { partner })
    }

    /// Builds a diagram from 0-based chords.
    pub fn from_chords(points: usize, chords: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![UNMATCHED; points];
        for &(a, b) in chords {
            if a >= points || b >= points || a == b {
                return Err(Error::domain(format!("invalid chord ({a}, {b})")));
            }
            if partner[a] != UNMATCHED || partner[b] != UNMATCHED {
                return Err(Error::domain(format!("point reused by chord ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&UNMATCHED) {
            return Err(Error::domain("chords do not cover every point"));
        }
        Self::from_partner(partner)
    }

    /// Order `n` (number of chords).
    pub fn order(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// Chords `(a, b)` with `a < b`, ascending by `a`; 0-based.
    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v < w)
            .map(|(v, &w)| (v, w))
    }

    pub fn to_chord_list(&self) -> ChordList {
        ChordList {
            n: self.order(),
            chords: self.chords().map(|(a, b)| [a + 1, b + 1]).collect(),
        }
    }

    /// Transforms the diagram by `g`; the result joins `g(v)` to `g(w)`
    /// whenever this diagram joins `v` to `w`.
    pub fn transformed(&self, g: &GroupElement) -> Result<ChordDiagram> {
        if g.points() != self.points() {
            return Err(Error::domain(format!(
                "group element acts on {} points but the diagram has {}",
                g.points(),
                self.points()
            )));
        }
        let images = g.images();
        let mut partner = vec![0; self.points()];
        for (v, &w) in self.partner.iter().enumerate() {
            partner[images[v]] = images[w];
        }
        Ok(ChordDiagram { partner })
    }
}

impl fmt::Display for ChordDiagram {
    /// 1-based chord list, e.g. `{(1,4),(2,5),(3,6)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (a, b)) in self.chords().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", a + 1, b + 1)?;
        }
        f.write_str("}")
    }
}

/// Serialized form of a diagram: 1-based chords `[a, b]` with `a < b`,
/// sorted by `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordList {
    pub n: usize,
    pub chords: Vec<[usize; 2]>,
}

impl TryFrom<&ChordList> for ChordDiagram {
    type Error = Error;

    fn try_from(list: &ChordList) -> Result<Self> {
        if list.chords.len() != list.n {
            return Err(Error::domain(format!(
                "chord list declares n = {} but has {} chords",
                list.n,
                list.chords.len()
            )));
        }
        let points = 2 * list.n;
        let mut chords = Vec::with_capacity(list.n);
        for &[a, b] in &list.chords {
            if a == 0 || b == 0 {
                return Err(Error::domain("chord endpoints are 1-based"));
            }
            chords.push((a - 1, b - 1));
        }
        ChordDiagram::from_chords(points, &chords)
    }
}

impl TryFrom<ChordList> for ChordDiagram {
    type Error = Error;

    fn try_from(list: ChordList) -> Result<Self> {
        ChordDiagram::try_from(&list)
    }
}

impl From<&ChordDiagram> for ChordList {
    fn from(d: &ChordDiagram) -> Self {
        d.to_chord_list()
    }
}

pub fn apply(g: &GroupElement, d: &ChordDiagram) -> Result<ChordDiagram> {
    d.transformed(g)
}

/// Lexicographically smallest partner array in the orbit of `d` under `group`.
pub fn canonical_form(d: &ChordDiagram, group: &PermGroup) -> Result<ChordDiagram> {
    if group.points() != d.points() {
        return Err(Error::domain(format!(
            "group acts on {} points but the diagram has {}",
            group.points(),
            d.points()
        )));
    }
    let mut best = d.clone();
    for g in group.elements() {
        let candidate = d.transformed(g)?;
        if candidate < best {
            best = candidate;
        }
    }
    Ok(best)
}

/// Image and inverse-image tables of a group, for comparing a diagram with
/// its transforms without materializing them.
#[derive(Debug, Clone)]
pub struct OrbitTester {
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl OrbitTester {
    pub fn new(group: &PermGroup) -> Self {
        Self::from_elements(group.elements())
    }

    pub fn from_elements(elements: &[GroupElement]) -> Self {
        let forward = elements.iter().map(|g| g.images().to_vec()).collect();
        let backward = elements
            .iter()
            .map(|g| g.inverse().images().to_vec())
            .collect();
        OrbitTester { forward, backward }
    }

    pub fn group_order(&self) -> usize {
        self.forward.len()
    }

    /// Compares the transform of `partner` by the `k`-th element against
    /// `partner` itself, stopping at the first differing position.
    #[inline]
    fn compare(&self, k: usize, partner: &[usize]) -> Ordering {
        let fwd = &self.forward[k];
        let bwd = &self.backward[k];
        for (u, &p) in partner.iter().enumerate() {
            let image = fwd[partner[bwd[u]]];
            match image.cmp(&p) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// True iff no transform of `partner` is lexicographically smaller.
    pub fn is_canonical(&self, partner: &[usize]) -> bool {
        (0..self.forward.len()).all(|k| self.compare(k, partner) != Ordering::Less)
    }

    /// Size of the stabilizer of `partner`.
    pub fn stabilizer_order(&self, partner: &[usize]) -> usize {
        (0..self.forward.len())
            .filter(|&k| self.compare(k, partner) == Ordering::Equal)
            .count()
    }

    /// Stabilizer size if `partner` is canonical, `None` otherwise.
    pub fn canonical_stabilizer(&self, partner: &[usize]) -> Option<usize> {
        let mut fixed = 0;
        for k in 0..self.forward.len() {
            match self.compare(k, partner) {
                Ordering::Less => return None,
                Ordering::Equal => fixed += 1,
                Ordering::Greater => {}
            }
        }
        Some(fixed)
    }
}

/// Backtracking walker over all perfect matchings of `[0, 2n)`.
///
/// The smallest unmatched point is always matched next, to each larger
/// unmatched point in ascending order. Optionally the partner of point 0 is
/// pinned, which splits the full stream into `2n - 1` disjoint branches.
#[derive(Debug, Clone)]
pub struct MatchingWalker {
    partner: Vec<usize>,
    stack: Vec<(usize, usize)>,
    pinned: usize,
    started: bool,
    done: bool,
}

impl MatchingWalker {
    pub fn new(n: usize) -> Self {
        MatchingWalker {
            partner: vec![UNMATCHED; 2 * n],
            stack: Vec::with_capacity(n),
            pinned: 0,
            started: false,
            done: n == 0,
        }
    }

    /// Walks only the matchings that join point 0 to `first_partner`.
    pub fn with_first_partner(n: usize, first_partner: usize) -> Result<Self> {
        if n == 0 || first_partner == 0 || first_partner >= 2 * n {
            return Err(Error::domain(format!(
                "point 0 cannot be paired with {first_partner} on {} points",
                2 * n
            )));
        }
        let mut walker = Self::new(n);
        walker.link(0, first_partner);
        walker.pinned = 1;
        Ok(walker)
    }

    fn link(&mut self, v: usize, w: usize) {
        self.partner[v] = w;
        self.partner[w] = v;
        self.stack.push((v, w));
    }

    fn next_unmatched(&self, from: usize) -> Option<usize> {
        (from..self.partner.len()).find(|&u| self.partner[u] == UNMATCHED)
    }

    fn fill(&mut self) {
        while let Some(v) = self.next_unmatched(0) {
            let w = self
                .next_unmatched(v + 1)
                .expect("an even number of points leaves a partner");
            self.link(v, w);
        }
    }

    /// Advances to the next matching and returns its partner array.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(&self.partner);
        }
        while self.stack.len() > self.pinned {
            let (v, w) = self.stack.pop().expect("stack is nonempty");
            self.partner[v] = UNMATCHED;
            self.partner[w] = UNMATCHED;
            if let Some(next) = self.next_unmatched(w + 1) {
                self.link(v, next);
                self.fill();
                return Some(&self.partner);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for MatchingWalker {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        self.advance().map(|p| ChordDiagram {
            partner: p.to_vec(),
        })
    }
}

/// Every perfect matching on `2n` points, each exactly once.
pub fn all_diagrams(n: usize) -> MatchingWalker {
    MatchingWalker::new(n)
}

/// Number of pairs of chords whose endpoints interleave.
pub fn crossings(d: &ChordDiagram) -> u64 {
    crossings_of(d.partner())
}

pub(crate) fn crossings_of(partner: &[usize]) -> u64 {
    let chords: Vec<(usize, usize)> = partner
        .iter()
        .enumerate()
        .filter(|&(v, &w)| v < w)
        .map(|(v, &w)| (v, w))
        .collect();
    let mut count = 0;
    for (k, &(_, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[k + 1..] {
            // chords are sorted by left endpoint, so a < c
            if c < b && b < d {
                count += 1;
            }
        }
    }
    count
}

/// True iff no chord joins two neighbouring points of the circle.
pub fn is_strict(d: &ChordDiagram) -> bool {
    is_strict_partner(d.partner())
}

pub(crate) fn is_strict_partner(partner: &[usize]) -> bool {
    let points = partner.len();
    partner
        .iter()
        .enumerate()
        .all(|(v, &w)| w != (v + 1) % points && v != (w + 1) % points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::{make_standard_group, GroupKind};
    use crate::numbers::matchings;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn one_based(points: usize, chords: &[(usize, usize)]) -> ChordDiagram {
        let zero: Vec<_> = chords.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        ChordDiagram::from_chords(points, &zero).unwrap()
    }

    #[test]
    fn rejects_invalid_partner_arrays() {
        assert!(ChordDiagram::from_partner(vec![]).is_err());
        assert!(ChordDiagram::from_partner(vec![0, 1]).is_err());
        assert!(ChordDiagram::from_partner(vec![1, 2, 0]).is_err());
        assert!(ChordDiagram::from_partner(vec![1, 0, 3, 3]).is_err());
        assert!(ChordDiagram::from_chords(4, &[(0, 1), (1, 2)]).is_err());
        assert!(ChordDiagram::from_chords(4, &[(0, 1)]).is_err());
    }

    #[test]
    fn apply_examples() {
        let d = one_based(6, &[(1, 2), (3, 4), (5, 6)]);
        let id = GroupElement::identity(6);
        assert_eq!(apply(&id, &d).unwrap(), d);

        let r = GroupElement::rotation(6, 1).unwrap();
        assert_eq!(apply(&r, &d).unwrap(), one_based(6, &[(2, 3), (4, 5), (1, 6)]));

        // v -> -v mod 6 (0-based) sends 1->1, 2->6, 3->5, 4->4, 5->3, 6->2
        let f = GroupElement::reflection(6, 0).unwrap();
        assert_eq!(apply(&f, &d).unwrap(), one_based(6, &[(1, 6), (2, 3), (4, 5)]));

        let small = GroupElement::rotation(4, 1).unwrap();
        assert!(matches!(apply(&small, &d), Err(Error::Domain(_))));
    }

    #[test]
    fn canonical_form_examples() {
        let c6 = make_standard_group(GroupKind::Cyclic, 6).unwrap();
        let diameters = one_based(6, &[(1, 4), (2, 5), (3, 6)]);
        assert_eq!(canonical_form(&diameters, &c6).unwrap(), diameters);

        let adjacent = one_based(6, &[(1, 2), (3, 4), (5, 6)]);
        assert_eq!(canonical_form(&adjacent, &c6).unwrap(), adjacent);

        let id = make_standard_group(GroupKind::Identity, 6).unwrap();
        let d = one_based(6, &[(1, 5), (2, 3), (4, 6)]);
        assert_eq!(canonical_form(&d, &id).unwrap(), d);

        let c8 = make_standard_group(GroupKind::Cyclic, 8).unwrap();
        assert!(canonical_form(&d, &c8).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_diagrams(1).count(), 1);
        assert_eq!(all_diagrams(2).count(), 3);
        assert_eq!(all_diagrams(5).count(), 945);
        for n in 1..=8 {
            assert_eq!(BigUint::from(all_diagrams(n).count()), matchings(n as u64), "n={n}");
        }
    }

    #[test]
    fn enumeration_order_and_uniqueness() {
        let all: Vec<_> = all_diagrams(3).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 15);
        // smallest-unmatched-first recursion emits partner arrays in
        // ascending lexicographic order
        assert_eq!(all, sorted);
        assert_eq!(all[0], one_based(6, &[(1, 2), (3, 4), (5, 6)]));
    }

    #[test]
    fn pinned_branches_partition_the_stream() {
        for n in 1..=6 {
            let full: Vec<_> = all_diagrams(n).collect();
            let mut merged = Vec::new();
            for first in 1..2 * n {
                let branch: Vec<_> = MatchingWalker::with_first_partner(n, first).unwrap().collect();
                assert!(branch.iter().all(|d| d.partner()[0] == first));
                merged.extend(branch);
            }
            assert_eq!(merged, full);
        }
        assert!(MatchingWalker::with_first_partner(3, 0).is_err());
        assert!(MatchingWalker::with_first_partner(3, 6).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossings(&one_based(4, &[(1, 2), (3, 4)])), 0);
        assert_eq!(crossings(&one_based(4, &[(1, 4), (2, 3)])), 0);
        assert_eq!(crossings(&one_based(4, &[(1, 3), (2, 4)])), 1);
        assert_eq!(crossings(&one_based(6, &[(1, 4), (2, 5), (3, 6)])), 3);
    }

    #[test]
    fn strict_examples() {
        assert!(!is_strict(&one_based(4, &[(1, 2), (3, 4)])));
        assert!(is_strict(&one_based(4, &[(1, 3), (2, 4)])));
        assert!(!is_strict(&one_based(6, &[(1, 6), (2, 4), (3, 5)])));
        assert!(!is_strict(&one_based(2, &[(1, 2)])));
    }

    #[test]
    fn chord_list_json_shape() {
        let d = one_based(6, &[(1, 4), (2, 5), (3, 6)]);
        let json = serde_json::to_string(&d.to_chord_list()).unwrap();
        assert_eq!(json, r#"{"n":3,"chords":[[1,4],[2,5],[3,6]]}"#);
        let back: ChordList = serde_json::from_str(&json).unwrap();
        assert_eq!(ChordDiagram::try_from(back).unwrap(), d);
        let bad = ChordList { n: 2, chords: vec![[0, 1], [2, 3]] };
        assert!(ChordDiagram::try_from(bad).is_err());
        let short = ChordList { n: 2, chords: vec![[1, 2]] };
        assert!(ChordDiagram::try_from(short).is_err());
    }

    #[test]
    fn orbit_tester_agrees_with_canonical_form() {
        for n in 1..=5 {
            for kind in [GroupKind::Identity, GroupKind::Cyclic, GroupKind::Dihedral] {
                let group = make_standard_group(kind, 2 * n).unwrap();
                let tester = OrbitTester::new(&group);
                for d in all_diagrams(n) {
                    let canon = canonical_form(&d, &group).unwrap();
                    assert_eq!(tester.is_canonical(d.partner()), canon == d);
                    let stab = group
                        .elements()
                        .iter()
                        .filter(|g| d.transformed(g).unwrap() == d)
                        .count();
                    assert_eq!(tester.stabilizer_order(d.partner()), stab);
                }
            }
        }
    }

    fn random_diagram(n: usize) -> impl Strategy<Value = ChordDiagram> {
        Just((0..2 * n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|order| {
                let chords: Vec<_> = order.chunks(2).map(|c| (c[0], c[1])).collect();
                ChordDiagram::from_chords(order.len(), &chords).unwrap()
            })
    }

    proptest! {
        #[test]
        fn apply_is_a_group_action(d in random_diagram(4)) {
            let d8 = make_standard_group(GroupKind::Dihedral, 8).unwrap();
            prop_assert_eq!(apply(&GroupElement::identity(8), &d).unwrap(), d.clone());
            for g in d8.elements() {
                let gd = apply(g, &d).unwrap();
                for h in d8.elements() {
                    let gh = g.compose(h).unwrap();
                    prop_assert_eq!(apply(&gh, &d).unwrap(), apply(g, &apply(h, &d).unwrap()).unwrap());
                }
                prop_assert_eq!(
                    canonical_form(&gd, &d8).unwrap(),
                    canonical_form(&d, &d8).unwrap()
                );
            }
            let canon = canonical_form(&d, &d8).unwrap();
            prop_assert_eq!(canonical_form(&canon, &d8).unwrap(), canon);
        }

        #[test]
        fn chord_list_round_trip(d in (1usize..12).prop_flat_map(random_diagram)) {
            let list = d.to_chord_list();
            prop_assert!(list.chords.windows(2).all(|w| w[0][0] < w[1][0]));
            prop_assert!(list.chords.iter().all(|c| c[0] < c[1]));
            prop_assert_eq!(ChordDiagram::try_from(&list).unwrap(), d);
        }
    }
}

//! Compositions and pseudo-compositions with the refinement order.
//!
//! A [`Composition`] of `n` is an ordered tuple of positive integers summing
//! to `n`; a [`PseudoComposition`] additionally allows its *first* part to be
//! zero. Pseudo-compositions of `n` are in bijection with subsets of
//! `{0, ..., n-1}` via proper prefix sums ([`DescentSet`]), and the
//! refinement order is containment of those subsets. The transforms in this
//! module (`star`, `hat`, `hat_b`, reversal, concatenation) are the purely
//! combinatorial machinery behind every basis formula in [`crate::qsym`] and
//! [`crate::peak`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered tuple of positive integers. Degree 0 is the empty tuple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

/// An ordered tuple of nonnegative integers whose parts after the first are
/// positive. Degree 0 is canonically the empty tuple; the alias `(0)` is
/// accepted on input and normalized away.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PseudoComposition(Vec<u32>);

/// A subset of `{0, ..., n-1}` attached to its degree `n`.
///
/// Type A descent sets are the instances that do not contain 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentSet {
    degree: u32,
    elements: BTreeSet<u32>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Self::try_new(parts.into()).expect("invalid composition")
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self> {
        for (position, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(Error::NonPositivePart { part, position });
            }
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The set of proper prefix sums; never contains 0.
    pub fn descent_set(&self) -> DescentSet {
        DescentSet {
            degree: self.degree(),
            elements: proper_prefix_sums(&self.0),
        }
    }

    /// Inverse of [`Composition::descent_set`]. Fails when the set contains 0.
    pub fn from_descent_set(set: &DescentSet) -> Result<Self> {
        if set.contains(0) {
            return Err(Error::TypeADescentZero);
        }
        Ok(Composition(parts_from_prefix_sums(set)))
    }

    /// Refinement order: `self <= other` iff every boundary of `self` is a
    /// boundary of `other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        check_degrees(self.degree(), other.degree())?;
        Ok(self
            .descent_set()
            .elements
            .is_subset(&other.descent_set().elements))
    }

    /// All compositions refining `self` (supersets of its descent set inside
    /// `{1, ..., n-1}`), including `self`.
    pub fn refinements(&self) -> Vec<Self> {
        let base = self.descent_set();
        supersets_within(&base, 1)
            .into_iter()
            .map(|s| Composition::from_descent_set(&s).expect("no zero inserted"))
            .collect()
    }

    /// All compositions coarsening `self` (subsets of its descent set),
    /// including `self`.
    pub fn coarsenings(&self) -> Vec<Self> {
        let base = self.descent_set();
        subsets_of(&base)
            .into_iter()
            .map(|s| Composition::from_descent_set(&s).expect("subset of a 0-free set"))
            .collect()
    }

    /// Parts written backwards.
    pub fn reversed(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The refinement obtained by replacing, for `i > 1`, every part
    /// `>= 2` with the two parts `(1, part - 1)`. The first part is untouched.
    pub fn star(&self) -> Self {
        Composition(star_parts(&self.0))
    }

    /// Merge each maximal run of 1's into the part directly to its right; a
    /// trailing run with no part to its right collapses to a final part equal
    /// to its sum, so a composition consisting entirely of 1's maps to the
    /// single part `(n)`. The image is exactly the peak compositions and the
    /// map is idempotent.
    pub fn hat(&self) -> Self {
        Composition(hat_parts(&self.0))
    }

    /// True when every part except possibly the last is greater than 1.
    pub fn is_peak(&self) -> bool {
        self.0.iter().rev().skip(1).all(|&part| part > 1)
    }

    /// The pseudo-composition `(0, parts...)`: the index of the same type A
    /// function viewed inside the type B index space.
    pub fn embed(&self) -> PseudoComposition {
        if self.0.is_empty() {
            return PseudoComposition::empty();
        }
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(0);
        parts.extend_from_slice(&self.0);
        PseudoComposition(parts)
    }
}

impl PseudoComposition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Self::try_new(parts.into()).expect("invalid pseudo-composition")
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self> {
        for (position, &part) in parts.iter().enumerate().skip(1) {
            if part == 0 {
                return Err(Error::NonPositivePart { part, position });
            }
        }
        // normalize the degree-0 alias (0) to the empty tuple
        if parts == [0] {
            return Ok(PseudoComposition(Vec::new()));
        }
        Ok(PseudoComposition(parts))
    }

    pub fn empty() -> Self {
        PseudoComposition(Vec::new())
    }

    /// Build `(first, rest...)`, normalizing `(0)` to the empty tuple.
    pub fn with_first(first: u32, rest: &Composition) -> Self {
        if first == 0 && rest.is_empty() {
            return PseudoComposition::empty();
        }
        let mut parts = Vec::with_capacity(rest.len() + 1);
        parts.push(first);
        parts.extend_from_slice(rest.parts());
        PseudoComposition(parts)
    }

    /// Split into the first part and the composition of remaining parts.
    /// The empty tuple splits as `(0, empty)`.
    pub fn split_first(&self) -> (u32, Composition) {
        match self.0.split_first() {
            None => (0, Composition::empty()),
            Some((&first, rest)) => (first, Composition(rest.to_vec())),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// True when the indexed function has no `x0` content, i.e. the index is
    /// empty or starts with 0.
    pub fn is_type_a(&self) -> bool {
        self.first_part() == 0
    }

    /// Strip the leading zero of an embedded type A index; `None` when the
    /// first part is positive.
    pub fn as_type_a(&self) -> Option<Composition> {
        if self.0.is_empty() {
            return Some(Composition::empty());
        }
        if self.0[0] != 0 {
            return None;
        }
        Some(Composition(self.0[1..].to_vec()))
    }

    /// Proper prefix sums; contains 0 iff the first part is 0.
    pub fn descent_set(&self) -> DescentSet {
        DescentSet {
            degree: self.degree(),
            elements: proper_prefix_sums(&self.0),
        }
    }

    pub fn from_descent_set(set: &DescentSet) -> Self {
        let parts = parts_from_prefix_sums(set);
        if parts == [0] {
            return PseudoComposition::empty();
        }
        PseudoComposition(parts)
    }

    /// Refinement order via descent-set containment; errors on a degree
    /// mismatch.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        check_degrees(self.degree(), other.degree())?;
        Ok(self
            .descent_set()
            .elements
            .is_subset(&other.descent_set().elements))
    }

    /// All pseudo-compositions refining `self` (supersets inside
    /// `{0, ..., n-1}`), including `self`.
    pub fn refinements(&self) -> Vec<Self> {
        let base = self.descent_set();
        supersets_within(&base, 0)
            .into_iter()
            .map(|s| PseudoComposition::from_descent_set(&s))
            .collect()
    }

    /// All pseudo-compositions coarsening `self`, including `self`.
    pub fn coarsenings(&self) -> Vec<Self> {
        let base = self.descent_set();
        subsets_of(&base)
            .into_iter()
            .map(|s| PseudoComposition::from_descent_set(&s))
            .collect()
    }

    /// Concatenation `(self..., other...)`. The right argument must not start
    /// with 0 unless the left is empty.
    pub fn concatenate(&self, other: &Self) -> Result<Self> {
        if self.0.is_empty() {
            return Ok(other.clone());
        }
        if other.first_part() == 0 && !other.0.is_empty() {
            return Err(Error::InternalZeroPart {
                position: self.0.len(),
            });
        }
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Ok(PseudoComposition(parts))
    }

    /// Same splitting rule as [`Composition::star`]: parts after the first
    /// with value `>= 2` become `(1, value - 1)`.
    pub fn star(&self) -> Self {
        PseudoComposition(star_parts(&self.0))
    }

    /// First part preserved, [`Composition::hat`] applied to the rest.
    pub fn hat_b(&self) -> Self {
        match self.0.split_first() {
            None => PseudoComposition::empty(),
            Some((&first, rest)) => {
                let mut parts = vec![first];
                parts.extend(hat_parts(rest));
                if parts == [0] {
                    return PseudoComposition::empty();
                }
                PseudoComposition(parts)
            }
        }
    }

    /// True when the middle parts (everything except the first and last) are
    /// all greater than 1.
    pub fn is_peak_b(&self) -> bool {
        if self.0.len() <= 2 {
            return true;
        }
        self.0[1..self.0.len() - 1].iter().all(|&part| part > 1)
    }
}

impl DescentSet {
    pub fn new(degree: u32, elements: BTreeSet<u32>) -> Result<Self> {
        for &element in &elements {
            if element >= degree {
                return Err(Error::DescentOutOfRange { element, degree });
            }
        }
        Ok(DescentSet { degree, elements })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn elements(&self) -> &BTreeSet<u32> {
        &self.elements
    }

    pub fn contains(&self, element: u32) -> bool {
        self.elements.contains(&element)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// All compositions of `n` in lexicographic order on parts: 1 for `n = 0`,
/// otherwise `2^(n-1)` of them.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_compositions(n, &mut current, &mut out);
    out
}

fn fill_compositions(remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition(current.clone()));
        return;
    }
    for part in 1..=remaining {
        current.push(part);
        fill_compositions(remaining - part, current, out);
        current.pop();
    }
}

/// All pseudo-compositions of `n` in lexicographic order on parts:
/// the 0-prefixed forms precede the positive-first-part forms, `2^n` total
/// for `n >= 1`.
pub fn pseudo_compositions_of(n: u32) -> Vec<PseudoComposition> {
    if n == 0 {
        return vec![PseudoComposition::empty()];
    }
    let plain = compositions_of(n);
    let mut out = Vec::with_capacity(2 * plain.len());
    out.extend(plain.iter().map(Composition::embed));
    out.extend(plain.into_iter().map(|c| PseudoComposition(c.0)));
    out
}

/// Peak compositions of `n`: `f(n-1)` of them for `n >= 1` (and the empty
/// composition alone at `n = 0`).
pub fn peak_compositions_of(n: u32) -> Vec<Composition> {
    compositions_of(n).into_iter().filter(Composition::is_peak).collect()
}

/// Type B peak pseudo-compositions of `n`: `f(n+1)` of them.
pub fn peak_pseudo_compositions_of(n: u32) -> Vec<PseudoComposition> {
    pseudo_compositions_of(n)
        .into_iter()
        .filter(PseudoComposition::is_peak_b)
        .collect()
}

/// Fibonacci numbers with `f(0) = f(1) = 1`.
pub fn fibonacci(n: u32) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

fn check_degrees(left: u32, right: u32) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

fn proper_prefix_sums(parts: &[u32]) -> BTreeSet<u32> {
    let mut sums = BTreeSet::new();
    let mut acc = 0;
    for &part in parts.iter().rev().skip(1).rev() {
        acc += part;
        sums.insert(acc);
    }
    sums
}

fn parts_from_prefix_sums(set: &DescentSet) -> Vec<u32> {
    if set.degree == 0 {
        return Vec::new();
    }
    let mut parts = Vec::with_capacity(set.elements.len() + 1);
    let mut previous = 0;
    for &sum in &set.elements {
        parts.push(sum - previous);
        previous = sum;
    }
    parts.push(set.degree - previous);
    parts
}

/// Supersets of `base.elements` inside `{low, ..., n-1}`, as descent sets.
fn supersets_within(base: &DescentSet, low: u32) -> Vec<DescentSet> {
    let free: Vec<u32> = (low..base.degree)
        .filter(|position| !base.elements.contains(position))
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u32..(1 << free.len()) {
        let mut elements = base.elements.clone();
        for (bit, &position) in free.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                elements.insert(position);
            }
        }
        out.push(DescentSet {
            degree: base.degree,
            elements,
        });
    }
    out
}

fn subsets_of(base: &DescentSet) -> Vec<DescentSet> {
    let members: Vec<u32> = base.elements.iter().copied().collect();
    let mut out = Vec::with_capacity(1 << members.len());
    for mask in 0u32..(1 << members.len()) {
        let elements = members
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &position)| position)
            .collect();
        out.push(DescentSet {
            degree: base.degree,
            elements,
        });
    }
    out
}

fn star_parts(parts: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(parts.len());
    for (index, &part) in parts.iter().enumerate() {
        if index > 0 && part >= 2 {
            out.push(1);
            out.push(part - 1);
        } else {
            out.push(part);
        }
    }
    out
}

fn hat_parts(parts: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut pending_ones = 0;
    for &part in parts {
        if part == 1 {
            pending_ones += 1;
        } else {
            out.push(part + pending_ones);
            pending_ones = 0;
        }
    }
    if pending_ones > 0 {
        out.push(pending_ones);
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for PseudoComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (index, part) in parts.iter().enumerate() {
        if index > 0 {
            write!(f, ",")?;
        }
        write!(f, "{part}")?;
    }
    write!(f, ")")
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (index, element) in self.elements.iter().enumerate() {
            if index > 0 {
                write!(f, ",")?;
            }
            write!(f, "{element}")?;
        }
        write!(f, "}}")
    }
}

// Canonical order everywhere: degree, then length, then parts
// lexicographically. This matches the display order of basis expansions.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PseudoComposition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        graded_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for PseudoComposition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn graded_cmp(left: &[u32], right: &[u32]) -> std::cmp::Ordering {
    let degree = |parts: &[u32]| parts.iter().sum::<u32>();
    degree(left)
        .cmp(&degree(right))
        .then(left.len().cmp(&right.len()))
        .then_with(|| left.cmp(right))
}

impl From<Composition> for PseudoComposition {
    /// Literal reinterpretation: the same parts as a pseudo-composition with
    /// positive first part (not the 0-prefixed embedding).
    fn from(composition: Composition) -> Self {
        PseudoComposition(composition.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn pc(parts: &[u32]) -> PseudoComposition {
        PseudoComposition::new(parts.to_vec())
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        let three = compositions_of(3);
        assert_eq!(three.len(), 4);
        for target in [&[3u32][..], &[2, 1], &[1, 2], &[1, 1, 1]] {
            assert!(three.contains(&c(target)));
        }
        assert_eq!(compositions_of(6).len(), 32);
        for n in 1..=10 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn pseudo_composition_counts() {
        assert_eq!(pseudo_compositions_of(0), vec![PseudoComposition::empty()]);
        let one = pseudo_compositions_of(1);
        assert_eq!(one.len(), 2);
        assert!(one.contains(&pc(&[1])));
        assert!(one.contains(&pc(&[0, 1])));
        assert_eq!(pseudo_compositions_of(3).len(), 8);
        for n in 1..=10 {
            assert_eq!(pseudo_compositions_of(n).len(), 1 << n);
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let parts: Vec<_> = pseudo_compositions_of(3)
            .iter()
            .map(|a| a.parts().to_vec())
            .collect();
        let mut sorted = parts.clone();
        sorted.sort();
        assert_eq!(parts, sorted);
    }

    #[test]
    fn degree_zero_alias_normalizes() {
        assert_eq!(pc(&[0]), PseudoComposition::empty());
        assert!(PseudoComposition::try_new(vec![1, 0]).is_err());
        assert!(Composition::try_new(vec![0]).is_err());
    }

    #[test]
    fn descent_sets_match_worked_examples() {
        // C = (3,2,1) of degree 6 has descents {3,5}
        let set = pc(&[3, 2, 1]).descent_set();
        assert_eq!(set.degree(), 6);
        assert_eq!(set.elements(), &BTreeSet::from([3, 5]));
        // C_B = (0,3,1) of degree 4 has descents {0,3}
        let set = pc(&[0, 3, 1]).descent_set();
        assert_eq!(set.degree(), 4);
        assert_eq!(set.elements(), &BTreeSet::from([0, 3]));
        // one part, no proper prefix sums
        assert!(pc(&[7]).descent_set().is_empty());
    }

    #[test]
    fn descent_set_round_trips() {
        let set = DescentSet::new(6, BTreeSet::from([3, 5])).unwrap();
        assert_eq!(PseudoComposition::from_descent_set(&set), pc(&[3, 2, 1]));
        let set = DescentSet::new(5, BTreeSet::new()).unwrap();
        assert_eq!(PseudoComposition::from_descent_set(&set), pc(&[5]));
        let set = DescentSet::new(2, BTreeSet::from([0])).unwrap();
        assert_eq!(PseudoComposition::from_descent_set(&set), pc(&[0, 2]));
        for n in 0..=10 {
            for a in pseudo_compositions_of(n) {
                assert_eq!(PseudoComposition::from_descent_set(&a.descent_set()), a);
            }
        }
    }

    #[test]
    fn refinement_order() {
        assert!(pc(&[2, 1]).leq(&pc(&[0, 2, 1])).unwrap());
        assert!(pc(&[2]).leq(&pc(&[0, 1, 1])).unwrap());
        assert!(!pc(&[0, 2, 1]).leq(&pc(&[2, 1])).unwrap());
        assert!(pc(&[2, 1]).leq(&pc(&[2, 1])).unwrap());
        assert!(!pc(&[2, 1]).leq(&pc(&[3])).unwrap());
        assert!(pc(&[2, 1]).leq(&pc(&[4])).is_err());
    }

    #[test]
    fn refinement_order_axioms_exhaustively() {
        for n in 0..=6 {
            let all = pseudo_compositions_of(n);
            for a in &all {
                assert!(a.leq(a).unwrap());
                for b in &all {
                    if a.leq(b).unwrap() && b.leq(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for d in &all {
                        if a.leq(b).unwrap() && b.leq(d).unwrap() {
                            assert!(a.leq(d).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn refinements_and_coarsenings() {
        let type_a: BTreeSet<_> = c(&[2, 1]).refinements().into_iter().collect();
        assert_eq!(type_a, BTreeSet::from([c(&[2, 1]), c(&[1, 1, 1])]));

        let type_b: BTreeSet<_> = pc(&[2, 1]).refinements().into_iter().collect();
        assert_eq!(
            type_b,
            BTreeSet::from([pc(&[2, 1]), pc(&[0, 2, 1]), pc(&[1, 1, 1]), pc(&[0, 1, 1, 1])])
        );

        assert_eq!(pc(&[5]).coarsenings(), vec![pc(&[5])]);
        for n in 0..=7 {
            for a in pseudo_compositions_of(n) {
                assert_eq!(a.refinements().len(), 1 << (n as usize - a.descent_set().len()));
                assert_eq!(a.coarsenings().len(), 1 << a.descent_set().len());
            }
        }
    }

    #[test]
    fn concatenation_and_reversal() {
        assert_eq!(pc(&[2]).concatenate(&pc(&[1])).unwrap(), pc(&[2, 1]));
        assert_eq!(pc(&[0, 1]).concatenate(&pc(&[2])).unwrap(), pc(&[0, 1, 2]));
        assert_eq!(
            PseudoComposition::empty().concatenate(&pc(&[0, 2])).unwrap(),
            pc(&[0, 2])
        );
        assert_eq!(pc(&[3]).concatenate(&PseudoComposition::empty()).unwrap(), pc(&[3]));
        assert!(pc(&[2]).concatenate(&pc(&[0, 1])).is_err());
        assert_eq!(c(&[2, 1]).reversed(), c(&[1, 2]));
    }

    #[test]
    fn star_examples() {
        assert_eq!(pc(&[2, 3, 1, 2]).star(), pc(&[2, 1, 2, 1, 1, 1]));
        assert_eq!(pc(&[7]).star(), pc(&[7]));
        assert_eq!(pc(&[0, 2]).star(), pc(&[0, 1, 1]));
        for n in 0..=8 {
            for b in pseudo_compositions_of(n) {
                assert!(b.leq(&b.star()).unwrap(), "{b} should refine to {}", b.star());
            }
        }
    }

    #[test]
    fn hat_examples() {
        assert_eq!(c(&[3, 1, 1, 3, 2, 1, 1, 1]).hat(), c(&[3, 5, 2, 3]));
        assert_eq!(c(&[7]).hat(), c(&[7]));
        assert_eq!(c(&[1]).hat(), c(&[1]));
        assert_eq!(c(&[1, 2, 1, 1, 2, 1]).hat(), c(&[3, 4, 1]));
        // all-ones input collapses to a single part
        assert_eq!(c(&[1, 1]).hat(), c(&[2]));
        assert_eq!(c(&[1, 1, 1]).hat(), c(&[3]));
    }

    #[test]
    fn hat_b_examples() {
        assert_eq!(pc(&[1, 1, 3, 2, 1, 1, 3, 1]).hat_b(), pc(&[1, 4, 2, 5, 1]));
        assert_eq!(pc(&[0, 2, 2, 1]).hat_b(), pc(&[0, 2, 2, 1]));
        assert_eq!(pc(&[0, 1, 1]).hat_b(), pc(&[0, 2]));
        assert_eq!(PseudoComposition::empty().hat_b(), PseudoComposition::empty());
    }

    #[test]
    fn hat_idempotent_with_peak_image() {
        for n in 0..=8 {
            let peaks: BTreeSet<_> = peak_compositions_of(n).into_iter().collect();
            let mut image = BTreeSet::new();
            for a in compositions_of(n) {
                let hatted = a.hat();
                assert!(hatted.is_peak(), "hat({a}) = {hatted} must be a peak composition");
                assert_eq!(hatted.hat(), hatted);
                image.insert(hatted);
            }
            assert_eq!(image, peaks);

            let peaks_b: BTreeSet<_> = peak_pseudo_compositions_of(n).into_iter().collect();
            let mut image_b = BTreeSet::new();
            for a in pseudo_compositions_of(n) {
                let hatted = a.hat_b();
                assert!(hatted.is_peak_b());
                assert_eq!(hatted.hat_b(), hatted);
                image_b.insert(hatted);
            }
            assert_eq!(image_b, peaks_b);
        }
    }

    #[test]
    fn peak_predicates() {
        assert!(c(&[2, 2]).is_peak());
        assert!(!c(&[1, 2]).is_peak());
        assert!(c(&[1]).is_peak());
        assert!(Composition::empty().is_peak());
        assert!(pc(&[0, 2, 2, 1]).is_peak_b());
        assert!(pc(&[1, 2]).is_peak_b());
        assert!(!pc(&[0, 1, 2]).is_peak_b());
        assert!(PseudoComposition::empty().is_peak_b());
    }

    #[test]
    fn peak_counts_are_fibonacci() {
        let four: BTreeSet<_> = peak_compositions_of(4).into_iter().collect();
        assert_eq!(four, BTreeSet::from([c(&[4]), c(&[3, 1]), c(&[2, 2])]));
        assert_eq!(peak_pseudo_compositions_of(3).len(), 5);
        assert_eq!(peak_compositions_of(1), vec![c(&[1])]);
        assert_eq!(peak_compositions_of(0), vec![Composition::empty()]);
        for n in 1..=10 {
            assert_eq!(peak_compositions_of(n).len() as u64, fibonacci(n - 1));
        }
        for n in 0..=10 {
            assert_eq!(peak_pseudo_compositions_of(n).len() as u64, fibonacci(n + 1));
        }
    }

    #[test]
    fn fibonacci_convention() {
        assert_eq!(
            (0..8).map(fibonacci).collect::<Vec<_>>(),
            vec![1, 1, 2, 3, 5, 8, 13, 21]
        );
    }

    #[test]
    fn embedding_and_type_a_views() {
        assert_eq!(c(&[2, 1]).embed(), pc(&[0, 2, 1]));
        assert_eq!(Composition::empty().embed(), PseudoComposition::empty());
        assert_eq!(pc(&[0, 2, 1]).as_type_a(), Some(c(&[2, 1])));
        assert_eq!(pc(&[2, 1]).as_type_a(), None);
        assert_eq!(PseudoComposition::empty().as_type_a(), Some(Composition::empty()));
    }

    #[test]
    fn canonical_order_is_graded_shortlex() {
        let mut indices = vec![pc(&[0, 1, 1]), pc(&[0, 2]), pc(&[2, 1]), pc(&[1]), pc(&[0, 2, 1])];
        indices.sort();
        assert_eq!(
            indices,
            vec![pc(&[1]), pc(&[0, 2]), pc(&[0, 1, 1]), pc(&[2, 1]), pc(&[0, 2, 1])]
        );
    }
}

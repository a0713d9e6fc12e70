//! Signed permutations and their descent/peak statistics.
//!
//! A signed permutation is stored as its window notation: a sequence of
//! nonzero integers with pairwise distinct absolute values. The ground set
//! may be any set of distinct positive integers, which is what lets a second
//! factor live on a shifted alphabet `[n+1, n+m]` during shuffle products.
//! Unsigned permutations are simply the all-positive instances.
//!
//! Statistics follow the boundary conventions of the type B theory: descents
//! are compared against a virtual `pi_0 = 0`, and peaks additionally against
//! `pi_{-1} = -infinity`, so position 0 is a descent (resp. peak) exactly
//! when the first letter is negative.

use std::collections::BTreeSet;
use std::fmt;

use crate::compositions::{Composition, DescentSet, PseudoComposition};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(letters: impl Into<Vec<i32>>) -> Self {
        Self::try_new(letters.into()).expect("invalid signed permutation")
    }

    pub fn try_new(letters: Vec<i32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &letter in &letters {
            if letter == 0 {
                return Err(Error::InvalidLetter { letter });
            }
            if !seen.insert(letter.unsigned_abs()) {
                return Err(Error::OverlappingLetters {
                    left: letter,
                    right: letter,
                });
            }
        }
        Ok(SignedPermutation(letters))
    }

    pub fn empty() -> Self {
        SignedPermutation(Vec::new())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unsigned(&self) -> bool {
        self.0.iter().all(|&letter| letter > 0)
    }

    /// Type B descent set: positions `i` in `[0, n-1]` with `pi_i > pi_{i+1}`,
    /// reading `pi_0 = 0`. Position `i` refers to the boundary before the
    /// `(i+1)`-st letter, so `0` is present iff the first letter is negative.
    pub fn descent_set_b(&self) -> DescentSet {
        let mut elements = BTreeSet::new();
        let mut previous = 0i32;
        for (position, &letter) in self.0.iter().enumerate() {
            if previous > letter {
                elements.insert(position as u32);
            }
            previous = letter;
        }
        DescentSet::new(self.0.len() as u32, elements).expect("positions lie in [0, n)")
    }

    /// The pseudo-composition listing increasing-run lengths, with first part
    /// 0 when the first letter is negative. All-positive input yields a
    /// positive first part, i.e. the ordinary type A descent composition.
    pub fn descent_composition(&self) -> PseudoComposition {
        PseudoComposition::from_descent_set(&self.descent_set_b())
    }

    /// Interior peak set of an unsigned permutation: positions `i` in
    /// `[2, n-1]` (1-indexed letters) with `pi_{i-1} < pi_i > pi_{i+1}`.
    pub fn peak_set(&self) -> Result<BTreeSet<u32>> {
        if !self.is_unsigned() {
            return Err(Error::SignedInput);
        }
        let mut peaks = BTreeSet::new();
        for i in 1..self.0.len().saturating_sub(1) {
            if self.0[i - 1] < self.0[i] && self.0[i] > self.0[i + 1] {
                peaks.insert((i + 1) as u32);
            }
        }
        Ok(peaks)
    }

    /// The composition encoding the interior peak set via prefix sums.
    pub fn peak_composition(&self) -> Result<Composition> {
        let peaks = self.peak_set()?;
        let set = DescentSet::new(self.0.len() as u32, peaks).expect("peaks lie in [2, n)");
        Composition::from_descent_set(&set)
    }

    /// Type B peak set: positions `i` in `[0, n-1]` with
    /// `pi_{i-1} < pi_i > pi_{i+1}`, reading `pi_0 = 0` and
    /// `pi_{-1} = -infinity`. Contains 0 iff the first letter is negative and
    /// 1 iff `0 < pi_1 > pi_2`.
    pub fn peak_set_b(&self) -> BTreeSet<u32> {
        let n = self.0.len();
        let mut peaks = BTreeSet::new();
        let at = |i: isize| -> Option<i32> {
            if i == 0 {
                Some(0)
            } else if i >= 1 && (i as usize) <= n {
                Some(self.0[i as usize - 1])
            } else {
                None
            }
        };
        for i in 0..n as isize {
            let here = at(i).expect("in range");
            let next = at(i + 1).expect("in range");
            let before_ok = i == 0 || at(i - 1).expect("in range") < here;
            if before_ok && here > next {
                peaks.insert(i as u32);
            }
        }
        peaks
    }

    /// The pseudo-composition encoding the type B peak set.
    pub fn peak_composition_b(&self) -> PseudoComposition {
        let set = DescentSet::new(self.0.len() as u32, self.peak_set_b())
            .expect("peaks lie in [0, n)");
        PseudoComposition::from_descent_set(&set)
    }

    /// Every absolute value increased by `offset`, signs preserved. Shifting
    /// changes neither the descent composition nor the peak statistics.
    pub fn shifted(&self, offset: u32) -> Self {
        SignedPermutation(
            self.0
                .iter()
                .map(|&letter| letter + letter.signum() * offset as i32)
                .collect(),
        )
    }
}

/// All interleavings of `left` and `right` preserving each argument's letter
/// order; the ground sets must be disjoint by absolute value. There are
/// `binomial(n + m, n)` of them, returned in a deterministic order.
pub fn shuffles(left: &SignedPermutation, right: &SignedPermutation) -> Result<Vec<SignedPermutation>> {
    let left_abs: BTreeSet<u32> = left.0.iter().map(|l| l.unsigned_abs()).collect();
    for &letter in &right.0 {
        if left_abs.contains(&letter.unsigned_abs()) {
            return Err(Error::OverlappingLetters {
                left: letter,
                right: letter,
            });
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(left.len() + right.len());
    interleave(&left.0, &right.0, &mut current, &mut out);
    Ok(out)
}

fn interleave(left: &[i32], right: &[i32], current: &mut Vec<i32>, out: &mut Vec<SignedPermutation>) {
    if left.is_empty() && right.is_empty() {
        out.push(SignedPermutation(current.clone()));
        return;
    }
    if let Some((&head, rest)) = left.split_first() {
        current.push(head);
        interleave(rest, right, current, out);
        current.pop();
    }
    if let Some((&head, rest)) = right.split_first() {
        current.push(head);
        interleave(left, rest, current, out);
        current.pop();
    }
}

/// A signed permutation whose descent composition is exactly `index`.
///
/// The runs are filled right to left with the smallest unused values of the
/// pool, each run increasing; the pool is `{1, ..., n}` for a positive first
/// part and `{-n, ..., -1}` when the first part is 0, which makes every run
/// boundary a descent and fixes the sign of the first letter.
pub fn representative(index: &PseudoComposition) -> SignedPermutation {
    let n = index.degree();
    let (first, rest) = index.split_first();
    let (runs, negative): (Vec<u32>, bool) = if index.is_empty() {
        (Vec::new(), false)
    } else if first == 0 {
        (rest.parts().to_vec(), true)
    } else {
        (index.parts().to_vec(), false)
    };

    let mut blocks: Vec<Vec<i32>> = Vec::with_capacity(runs.len());
    let mut next = if negative { -(n as i32) } else { 1 };
    for &run in runs.iter().rev() {
        let block: Vec<i32> = (0..run as i32).map(|step| next + step).collect();
        next += run as i32;
        blocks.push(block);
    }
    blocks.reverse();
    SignedPermutation(blocks.concat())
}

/// All unsigned permutations of `[n]` in lexicographic order.
pub fn unsigned_permutations(n: u32) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    let mut used = vec![false; n as usize];
    fill_unsigned(n, &mut current, &mut used, &mut out);
    out
}

fn fill_unsigned(n: u32, current: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<SignedPermutation>) {
    if current.len() == n as usize {
        out.push(SignedPermutation(current.clone()));
        return;
    }
    for value in 1..=n {
        if !used[value as usize - 1] {
            used[value as usize - 1] = true;
            current.push(value as i32);
            fill_unsigned(n, current, used, out);
            current.pop();
            used[value as usize - 1] = false;
        }
    }
}

/// All `2^n * n!` signed permutations of `[n]`.
pub fn signed_permutations(n: u32) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for base in unsigned_permutations(n) {
        for mask in 0u32..(1 << n) {
            let letters = base
                .0
                .iter()
                .enumerate()
                .map(|(position, &letter)| {
                    if mask & (1 << position) != 0 {
                        -letter
                    } else {
                        letter
                    }
                })
                .collect();
            out.push(SignedPermutation(letters));
        }
    }
    out
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (index, letter) in self.0.iter().enumerate() {
            if index > 0 {
                write!(f, ",")?;
            }
            write!(f, "{letter}")?;
        }
        write!(f, ")")
    }
}

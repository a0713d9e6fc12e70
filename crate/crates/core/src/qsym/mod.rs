//! Free-module elements over basis-tagged pseudo-compositions: the graded
//! algebra of type B quasisymmetric functions with the ordinary
//! quasisymmetric functions embedded as the first-part-zero span.
//!
//! Everything is exact: coefficients are unbounded integers and the internal
//! canonical basis is the monomial one. Fundamental- and peak-tagged terms
//! are rewritten into monomial terms on demand ([`QSymElement::to_monomial`]),
//! and equality always compares the monomial normal forms, so mixed-basis
//! expressions behave like the functions they denote.

mod antipode;
mod coproduct;
mod product;

pub use coproduct::Tensor3;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::compositions::PseudoComposition;
use crate::error::{Error, Result};

/// The three families of basis functions an index can be tagged with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Monomial,
    Fundamental,
    Peak,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'M',
            Basis::Fundamental => 'F',
            Basis::Peak => 'K',
        }
    }

    pub fn from_symbol(symbol: char) -> Option<Self> {
        match symbol {
            'M' => Some(Basis::Monomial),
            'F' => Some(Basis::Fundamental),
            'K' => Some(Basis::Peak),
            _ => None,
        }
    }
}

/// A basis-tagged pseudo-composition; the key type of element terms.
///
/// Ordering is by index (degree, length, parts), then basis, which is the
/// canonical term order used for display and serialization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub index: PseudoComposition,
    pub basis: Basis,
}

impl BasisIndex {
    pub fn monomial(index: PseudoComposition) -> Self {
        BasisIndex {
            index,
            basis: Basis::Monomial,
        }
    }

    pub fn fundamental(index: PseudoComposition) -> Self {
        BasisIndex {
            index,
            basis: Basis::Fundamental,
        }
    }

    pub fn peak(index: PseudoComposition) -> Self {
        BasisIndex {
            index,
            basis: Basis::Peak,
        }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.basis.symbol(), self.index)
    }
}

/// A finite integer-linear combination of basis-tagged pseudo-compositions.
///
/// Zero coefficients are never stored. Equality is semantic: both sides are
/// converted to the monomial basis first, so `F[2,1]` equals its refinement
/// sum even though the stored terms differ.
#[derive(Debug, Clone, Default)]
pub struct QSymElement {
    terms: BTreeMap<BasisIndex, BigInt>,
}

impl QSymElement {
    pub fn zero() -> Self {
        QSymElement::default()
    }

    /// The unit: the empty index with coefficient 1.
    pub fn one() -> Self {
        QSymElement::monomial(PseudoComposition::empty())
    }

    pub fn monomial(index: PseudoComposition) -> Self {
        Self::term(BasisIndex::monomial(index), BigInt::one())
    }

    pub fn fundamental(index: PseudoComposition) -> Self {
        Self::term(BasisIndex::fundamental(index), BigInt::one())
    }

    pub fn peak(index: PseudoComposition) -> Self {
        Self::term(BasisIndex::peak(index), BigInt::one())
    }

    pub fn term(index: BasisIndex, coeff: BigInt) -> Self {
        let mut element = QSymElement::zero();
        element.add_term(index, coeff);
        element
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, index: &BasisIndex) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `coeff * index` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, index: BasisIndex, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(index);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (index, coeff) in other.terms() {
            out.add_term(index.clone(), coeff.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        let mut out = QSymElement::zero();
        for (index, coeff) in self.terms() {
            out.add_term(index.clone(), -coeff.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = QSymElement::zero();
        for (index, coeff) in self.terms() {
            out.add_term(index.clone(), coeff * factor);
        }
        out
    }

    /// Rewrite every term in the monomial basis: fundamental tags become
    /// refinement sums, peak tags expand through their 2-power formula.
    pub fn to_monomial(&self) -> Self {
        if self
            .terms
            .keys()
            .all(|key| key.basis == Basis::Monomial)
        {
            return self.clone();
        }
        let mut out = QSymElement::zero();
        for (key, coeff) in self.terms() {
            match key.basis {
                Basis::Monomial => out.add_term(key.clone(), coeff.clone()),
                Basis::Fundamental => {
                    for refinement in key.index.refinements() {
                        out.add_term(BasisIndex::monomial(refinement), coeff.clone());
                    }
                }
                Basis::Peak => {
                    for (index, weight) in crate::peak::k_function_b(&key.index).terms() {
                        out.add_term(index.clone(), coeff * weight);
                    }
                }
            }
        }
        out
    }

    /// Rewrite every term in the fundamental basis by inclusion-exclusion
    /// over refinements. Inverse of [`QSymElement::to_monomial`] on the
    /// monomial/fundamental spans.
    pub fn to_fundamental(&self) -> Self {
        let monomial = self.to_monomial();
        let mut out = QSymElement::zero();
        for (key, coeff) in monomial.terms() {
            for refinement in key.index.refinements() {
                let sign = if (refinement.len() - key.index.len()) % 2 == 0 {
                    coeff.clone()
                } else {
                    -coeff.clone()
                };
                out.add_term(BasisIndex::fundamental(refinement), sign);
            }
        }
        out
    }

    /// The constant term: the coefficient of the empty index in the monomial
    /// basis.
    pub fn counit(&self) -> BigInt {
        self.to_monomial()
            .coefficient(&BasisIndex::monomial(PseudoComposition::empty()))
    }

    /// The common degree of all terms, or `None` for the zero element and
    /// for non-homogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|key| key.index.degree());
        let first = degrees.next()?;
        if degrees.all(|degree| degree == first) {
            Some(first)
        } else {
            None
        }
    }

    /// The part of the element whose indices have degree `n`.
    pub fn homogeneous_component(&self, n: u32) -> Self {
        let mut out = QSymElement::zero();
        for (index, coeff) in self.terms() {
            if index.index.degree() == n {
                out.add_term(index.clone(), coeff.clone());
            }
        }
        out
    }

    /// Largest degree appearing, or `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|key| key.index.degree()).max()
    }

    /// True when the element (in monomial form) has no `x0` content, i.e.
    /// lies in the embedded type A subalgebra.
    pub fn is_type_a(&self) -> bool {
        self.to_monomial()
            .terms
            .keys()
            .all(|key| key.index.is_type_a())
    }

    pub(crate) fn require_type_a(&self) -> Result<Self> {
        let monomial = self.to_monomial();
        for key in monomial.terms.keys() {
            if !key.index.is_type_a() {
                return Err(Error::NotTypeA {
                    index: key.index.to_string(),
                });
            }
        }
        Ok(monomial)
    }
}

impl PartialEq for QSymElement {
    fn eq(&self, other: &Self) -> bool {
        self.to_monomial().terms == other.to_monomial().terms
    }
}

impl Eq for QSymElement {}

impl std::ops::Add for &QSymElement {
    type Output = QSymElement;
    fn add(self, other: &QSymElement) -> QSymElement {
        QSymElement::add(self, other)
    }
}

impl std::ops::Sub for &QSymElement {
    type Output = QSymElement;
    fn sub(self, other: &QSymElement) -> QSymElement {
        QSymElement::add(self, &other.negate())
    }
}

impl std::ops::Neg for &QSymElement {
    type Output = QSymElement;
    fn neg(self) -> QSymElement {
        self.negate()
    }
}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, (index, coeff)) in self.terms().enumerate() {
            write_signed_term(f, position == 0, coeff, &index.to_string())?;
        }
        Ok(())
    }
}

fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &BigInt,
    body: &str,
) -> fmt::Result {
    let magnitude = coeff.abs();
    if first {
        if coeff.is_negative() {
            write!(f, "-")?;
        }
    } else if coeff.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if magnitude.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{magnitude}*{body}")
    }
}

/// A finite integer-linear combination of ordered pairs of basis-tagged
/// pseudo-compositions: the codomain of the coproducts.
#[derive(Debug, Clone, Default)]
pub struct TensorElement {
    terms: BTreeMap<(BasisIndex, BasisIndex), BigInt>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    /// `1 (x) 1`.
    pub fn unit() -> Self {
        TensorElement::pair(
            BasisIndex::monomial(PseudoComposition::empty()),
            BasisIndex::monomial(PseudoComposition::empty()),
        )
    }

    pub fn pair(left: BasisIndex, right: BasisIndex) -> Self {
        let mut out = TensorElement::zero();
        out.add_term(left, right, BigInt::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisIndex, BasisIndex), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, left: &BasisIndex, right: &BasisIndex) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, left: BasisIndex, right: BasisIndex, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let current = self.terms.remove(&key).unwrap_or_else(BigInt::zero) + coeff;
        if !current.is_zero() {
            self.terms.insert(key, current);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((left, right), coeff) in other.terms() {
            out.add_term(left.clone(), right.clone(), coeff.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        let mut out = TensorElement::zero();
        for ((left, right), coeff) in self.terms() {
            out.add_term(left.clone(), right.clone(), -coeff.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = TensorElement::zero();
        for ((left, right), coeff) in self.terms() {
            out.add_term(left.clone(), right.clone(), coeff * factor);
        }
        out
    }

    /// The outer product `x (x) y`.
    pub fn tensor(x: &QSymElement, y: &QSymElement) -> Self {
        let mut out = TensorElement::zero();
        for (left, a) in x.terms() {
            for (right, b) in y.terms() {
                out.add_term(left.clone(), right.clone(), a * b);
            }
        }
        out
    }

    /// Rewrite both tensor factors in the monomial basis.
    pub fn to_monomial(&self) -> Self {
        let mut out = TensorElement::zero();
        for ((left, right), coeff) in self.terms() {
            let left_element = QSymElement::term(left.clone(), BigInt::one()).to_monomial();
            let right_element = QSymElement::term(right.clone(), BigInt::one()).to_monomial();
            out = out.add(&TensorElement::tensor(&left_element, &right_element).scale(coeff));
        }
        out
    }

    /// Apply an element-valued map to both sides of every pair.
    pub fn map_sides(&self, f: impl Fn(&BasisIndex) -> QSymElement) -> Self {
        let mut out = TensorElement::zero();
        for ((left, right), coeff) in self.terms() {
            out = out.add(&TensorElement::tensor(&f(left), &f(right)).scale(coeff));
        }
        out
    }

    /// Fold the left factor with the counit: `(counit (x) id)(self)`.
    pub fn counit_left(&self) -> QSymElement {
        let mut out = QSymElement::zero();
        for ((left, right), coeff) in self.terms() {
            let scalar = QSymElement::term(left.clone(), BigInt::one()).counit();
            out.add_term(right.clone(), coeff * scalar);
        }
        out
    }

    /// Fold the right factor with the counit: `(id (x) counit)(self)`.
    pub fn counit_right(&self) -> QSymElement {
        let mut out = QSymElement::zero();
        for ((left, right), coeff) in self.terms() {
            let scalar = QSymElement::term(right.clone(), BigInt::one()).counit();
            out.add_term(left.clone(), coeff * scalar);
        }
        out
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.to_monomial().terms == other.to_monomial().terms
    }
}

impl Eq for TensorElement {}

impl std::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, other: &TensorElement) -> TensorElement {
        TensorElement::add(self, other)
    }
}

impl std::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, other: &TensorElement) -> TensorElement {
        TensorElement::add(self, &other.negate())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, ((left, right), coeff)) in self.terms().enumerate() {
            let body = format!("{left} (x) {right}");
            write_signed_term(f, position == 0, coeff, &body)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::pseudo_compositions_of;

    pub(crate) fn pc(parts: &[u32]) -> PseudoComposition {
        PseudoComposition::new(parts.to_vec())
    }

    pub(crate) fn m(parts: &[u32]) -> QSymElement {
        QSymElement::monomial(pc(parts))
    }

    pub(crate) fn fu(parts: &[u32]) -> QSymElement {
        QSymElement::fundamental(pc(parts))
    }

    fn int(value: i64) -> BigInt {
        BigInt::from(value)
    }

    #[test]
    fn unit_is_shared_by_all_bases() {
        assert_eq!(m(&[]), fu(&[]));
        assert_eq!(m(&[]), QSymElement::peak(PseudoComposition::empty()));
        assert_eq!(m(&[]), QSymElement::one());
        assert_eq!(m(&[0]), QSymElement::one());
    }

    #[test]
    fn additive_group_laws() {
        let x = m(&[2, 1]).add(&fu(&[0, 1]).scale(&int(3)));
        assert!(x.add(&x.negate()).is_zero());
        assert_eq!(&x - &x, QSymElement::zero());
        assert_eq!(x.scale(&int(0)), QSymElement::zero());
    }

    #[test]
    fn fundamental_expands_to_refinement_sum() {
        // type B: F(2,1) = M(2,1) + M(0,2,1) + M(1,1,1) + M(0,1,1,1)
        let expected = m(&[2, 1])
            .add(&m(&[0, 2, 1]))
            .add(&m(&[1, 1, 1]))
            .add(&m(&[0, 1, 1, 1]));
        assert_eq!(fu(&[2, 1]).to_monomial(), expected);
        // embedded type A: F(0,2,1) = M(0,2,1) + M(0,1,1,1)
        let expected = m(&[0, 2, 1]).add(&m(&[0, 1, 1, 1]));
        assert_eq!(fu(&[0, 2, 1]).to_monomial(), expected);
        assert_eq!(fu(&[]).to_monomial(), QSymElement::one());
        // hence F and M differ as elements
        assert_ne!(fu(&[2, 1]), m(&[2, 1]));
    }

    #[test]
    fn monomial_expands_to_signed_fundamental_sum() {
        let expected = fu(&[1]).add(&fu(&[0, 1]).negate());
        assert_eq!(m(&[1]).to_fundamental(), expected);
        assert_eq!(m(&[]).to_fundamental(), fu(&[]));
    }

    #[test]
    fn basis_conversions_are_mutually_inverse() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let f = QSymElement::fundamental(index.clone());
                let round = f.to_monomial().to_fundamental();
                assert_eq!(round.terms, f.terms, "index {index}");
                let m = QSymElement::monomial(index.clone());
                let round = m.to_fundamental().to_monomial();
                assert_eq!(round.terms, m.terms, "index {index}");
            }
        }
    }

    #[test]
    fn counit_reads_the_constant_term() {
        assert_eq!(QSymElement::one().counit(), int(1));
        assert_eq!(m(&[2, 1]).counit(), int(0));
        let x = QSymElement::one().scale(&int(3)).add(&m(&[1]));
        assert_eq!(x.counit(), int(3));
    }

    #[test]
    fn grading() {
        let x = m(&[1]).add(&m(&[2]));
        assert_eq!(x.degree(), None);
        assert_eq!(x.homogeneous_component(2), m(&[2]));
        assert_eq!(x.homogeneous_component(7), QSymElement::zero());
        assert_eq!(m(&[0, 2, 1]).degree(), Some(3));
        assert_eq!(QSymElement::zero().degree(), None);
        let reassembled = (0..=2).fold(QSymElement::zero(), |acc, n| {
            acc.add(&x.homogeneous_component(n))
        });
        assert_eq!(reassembled, x);
    }

    #[test]
    fn type_a_detection() {
        assert!(m(&[0, 2, 1]).is_type_a());
        assert!(QSymElement::one().is_type_a());
        assert!(!m(&[1, 2]).is_type_a());
        // F(1) expands with x0-content
        assert!(!fu(&[1]).is_type_a());
        assert!(fu(&[0, 1]).is_type_a());
    }

    #[test]
    fn display_formatting() {
        let x = m(&[0, 2]).add(&m(&[0, 1, 1]).scale(&int(2)));
        assert_eq!(x.to_string(), "M(0,2) + 2*M(0,1,1)");
        assert_eq!(m(&[2, 1]).negate().to_string(), "-M(2,1)");
        assert_eq!(QSymElement::zero().to_string(), "0");
    }

    #[test]
    fn tensor_arithmetic() {
        let t = TensorElement::tensor(&m(&[1]), &m(&[0, 1]).add(&m(&[1])));
        assert_eq!(
            t.coefficient(
                &BasisIndex::monomial(pc(&[1])),
                &BasisIndex::monomial(pc(&[0, 1]))
            ),
            int(1)
        );
        assert_eq!(t.num_terms(), 2);
        assert!(t.add(&t.negate()).is_zero());
        assert_eq!(TensorElement::unit().counit_left(), QSymElement::one());
        assert_eq!(t.counit_left(), QSymElement::zero());
        assert_eq!(t.counit_right(), QSymElement::zero());
        let with_unit = TensorElement::tensor(&QSymElement::one(), &m(&[2, 1]));
        assert_eq!(with_unit.counit_left(), m(&[2, 1]));
    }
}

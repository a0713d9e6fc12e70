//! The three coproducts carried by the index space: the type A
//! deconcatenation, the type B binomial deconcatenation, and the
//! module-coalgebra coproduct with type A right factors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::compositions::{Composition, PseudoComposition};
use crate::error::Result;

use super::{BasisIndex, QSymElement, TensorElement};

impl QSymElement {
    /// Deconcatenation coproduct of the type A subalgebra: every index must
    /// be an embedded type A composition (first part 0), and each one is cut
    /// at its `l + 1` boundaries.
    pub fn coproduct_a(&self) -> Result<TensorElement> {
        let monomial = self.require_type_a()?;
        let mut out = TensorElement::zero();
        for (key, coeff) in monomial.terms() {
            let alpha = key.index.as_type_a().expect("verified type A");
            let parts = alpha.parts();
            for cut in 0..=parts.len() {
                let left = Composition::new(parts[..cut].to_vec()).embed();
                let right = Composition::new(parts[cut..].to_vec()).embed();
                out.add_term(
                    BasisIndex::monomial(left),
                    BasisIndex::monomial(right),
                    coeff.clone(),
                );
            }
        }
        Ok(out)
    }

    /// The coproduct that makes the whole algebra a Hopf algebra: on an index
    /// `(n, alpha)` it cuts `alpha` at every boundary and splits the leading
    /// part binomially,
    /// `sum over beta gamma = alpha, 0 <= i <= n of C(n, i) M_(i,beta) (x) M_((n-i),gamma)`.
    pub fn coproduct_b(&self) -> TensorElement {
        let monomial = self.to_monomial();
        let mut out = TensorElement::zero();
        for (key, coeff) in monomial.terms() {
            let (n, alpha) = key.index.split_first();
            let binomials = pascal_row(n);
            let parts = alpha.parts();
            for cut in 0..=parts.len() {
                let beta = Composition::new(parts[..cut].to_vec());
                let gamma = Composition::new(parts[cut..].to_vec());
                for (i, binomial) in binomials.iter().enumerate() {
                    let left = PseudoComposition::with_first(i as u32, &beta);
                    let right = PseudoComposition::with_first(n - i as u32, &gamma);
                    out.add_term(
                        BasisIndex::monomial(left),
                        BasisIndex::monomial(right),
                        coeff * binomial,
                    );
                }
            }
        }
        out
    }

    /// Chow's coproduct: cut the pseudo-composition at every boundary and
    /// force the right factor into the type A subalgebra,
    /// `sum over beta gamma = alpha of M_beta (x) M_(0,gamma)`.
    ///
    /// A leading zero part is not a cuttable boundary of its own: the empty
    /// prefix and the `(0)` prefix name the same index, so for first-part-0
    /// input the cut starts after the zero.
    pub fn coproduct_chow(&self) -> TensorElement {
        let monomial = self.to_monomial();
        let mut out = TensorElement::zero();
        for (key, coeff) in monomial.terms() {
            let parts = key.index.parts();
            let first_cut = usize::from(parts.first() == Some(&0));
            for cut in first_cut..=parts.len() {
                let left = PseudoComposition::try_new(parts[..cut].to_vec())
                    .expect("prefix of a valid index");
                let right_parts = &parts[cut..];
                let right = if right_parts.first() == Some(&0) {
                    // 0 gamma = gamma when gamma already starts with 0
                    PseudoComposition::try_new(right_parts.to_vec()).expect("suffix is the index")
                } else {
                    Composition::new(right_parts.to_vec()).embed()
                };
                out.add_term(
                    BasisIndex::monomial(left),
                    BasisIndex::monomial(right),
                    coeff.clone(),
                );
            }
        }
        out
    }
}

/// Row `n` of Pascal's triangle, computed by the recurrence.
fn pascal_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for window in row.windows(2) {
            next.push(&window[0] + &window[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// A finite integer-linear combination of index triples; the codomain of
/// iterated coproducts. Factors are expected in the monomial basis, and
/// equality is term-by-term.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tensor3 {
    terms: BTreeMap<(BasisIndex, BasisIndex, BasisIndex), BigInt>,
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(
        &mut self,
        left: BasisIndex,
        middle: BasisIndex,
        right: BasisIndex,
        coeff: BigInt,
    ) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, middle, right);
        let current = self.terms.remove(&key).unwrap_or_else(BigInt::zero) + coeff;
        if !current.is_zero() {
            self.terms.insert(key, current);
        }
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(BasisIndex, BasisIndex, BasisIndex), &BigInt)> {
        self.terms.iter()
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, ((left, middle, right), coeff)) in self.terms.iter().enumerate() {
            let body = format!("{left} (x) {middle} (x) {right}");
            super::write_signed_term(f, position == 0, coeff, &body)?;
        }
        Ok(())
    }
}

impl TensorElement {
    /// Apply a tensor-valued map to the left factor of every pair:
    /// `(f (x) id)(self)`, landing in triples.
    pub fn extend_left(&self, f: impl Fn(&BasisIndex) -> TensorElement) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((left, right), coeff) in self.terms() {
            for ((a, b), inner) in f(left).terms() {
                out.add_term(a.clone(), b.clone(), right.clone(), coeff * inner);
            }
        }
        out
    }

    /// Apply a tensor-valued map to the right factor of every pair:
    /// `(id (x) f)(self)`.
    pub fn extend_right(&self, f: impl Fn(&BasisIndex) -> TensorElement) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((left, right), coeff) in self.terms() {
            for ((a, b), inner) in f(right).terms() {
                out.add_term(left.clone(), a.clone(), b.clone(), coeff * inner);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{m, pc};
    use super::*;
    use crate::compositions::pseudo_compositions_of;

    fn mono(parts: &[u32]) -> BasisIndex {
        BasisIndex::monomial(pc(parts))
    }

    fn single(left: &[u32], right: &[u32]) -> TensorElement {
        TensorElement::pair(mono(left), mono(right))
    }

    #[test]
    fn pascal_rows() {
        let row = pascal_row(4);
        let expected: Vec<BigInt> = [1, 4, 6, 4, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn deconcatenation_on_the_type_a_span() {
        // Delta(M_21) = M_21 (x) 1 + M_2 (x) M_1 + 1 (x) M_21, embedded
        let expected = single(&[0, 2, 1], &[])
            .add(&single(&[0, 2], &[0, 1]))
            .add(&single(&[], &[0, 2, 1]));
        assert_eq!(m(&[0, 2, 1]).coproduct_a().unwrap(), expected);

        assert_eq!(m(&[]).coproduct_a().unwrap(), TensorElement::unit());

        let four_cuts = m(&[0, 1, 1, 1]).coproduct_a().unwrap();
        assert_eq!(four_cuts.num_terms(), 4);
        for (_, coeff) in four_cuts.terms() {
            assert_eq!(coeff, &BigInt::one());
        }

        assert!(m(&[1, 1]).coproduct_a().is_err());
    }

    #[test]
    fn binomial_coproduct_matches_the_six_term_display() {
        // Delta(M_121) = M_121 (x) 1 + M_021 (x) M_1 + M_12 (x) M_01
        //              + M_02 (x) M_11 + M_1 (x) M_021 + 1 (x) M_121
        let expected = single(&[1, 2, 1], &[])
            .add(&single(&[0, 2, 1], &[1]))
            .add(&single(&[1, 2], &[0, 1]))
            .add(&single(&[0, 2], &[1, 1]))
            .add(&single(&[1], &[0, 2, 1]))
            .add(&single(&[], &[1, 2, 1]));
        assert_eq!(m(&[1, 2, 1]).coproduct_b(), expected);
    }

    #[test]
    fn binomial_coproduct_matches_the_nine_term_display() {
        // Delta(M_211) with coefficient 2 on the three middle binomial terms
        let two = BigInt::from(2);
        let expected = single(&[2, 1, 1], &[])
            .add(&single(&[1, 1, 1], &[1]).scale(&two))
            .add(&single(&[0, 1, 1], &[2]))
            .add(&single(&[2, 1], &[0, 1]))
            .add(&single(&[1, 1], &[1, 1]).scale(&two))
            .add(&single(&[0, 1], &[2, 1]))
            .add(&single(&[2], &[0, 1, 1]))
            .add(&single(&[1], &[1, 1, 1]).scale(&two))
            .add(&single(&[], &[2, 1, 1]));
        assert_eq!(m(&[2, 1, 1]).coproduct_b(), expected);
    }

    #[test]
    fn binomial_coproduct_small_cases() {
        let expected = single(&[1], &[]).add(&single(&[], &[1]));
        assert_eq!(m(&[1]).coproduct_b(), expected);
        assert_eq!(m(&[]).coproduct_b(), TensorElement::unit());
    }

    #[test]
    fn chow_coproduct_examples() {
        // Delta'(M_12) = M_12 (x) 1 + M_1 (x) M_02 + 1 (x) M_012
        let expected = single(&[1, 2], &[])
            .add(&single(&[1], &[0, 2]))
            .add(&single(&[], &[0, 1, 2]));
        assert_eq!(m(&[1, 2]).coproduct_chow(), expected);

        let expected = single(&[2], &[]).add(&single(&[], &[0, 2]));
        assert_eq!(m(&[2]).coproduct_chow(), expected);

        assert_eq!(m(&[]).coproduct_chow(), TensorElement::unit());

        // a leading zero is not a boundary: M_02 deconcatenates into
        // exactly the two type A cuts
        let expected = single(&[0, 2], &[]).add(&single(&[], &[0, 2]));
        assert_eq!(m(&[0, 2]).coproduct_chow(), expected);
    }

    #[test]
    fn chow_right_factors_are_type_a() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                for ((_, right), _) in QSymElement::monomial(index).coproduct_chow().terms() {
                    assert!(right.index.is_type_a());
                }
            }
        }
    }

    #[test]
    fn coassociativity_of_the_binomial_coproduct() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let delta = QSymElement::monomial(index.clone()).coproduct_b();
                let left_first = delta.extend_left(|key| {
                    QSymElement::term(key.clone(), BigInt::one()).coproduct_b()
                });
                let right_first = delta.extend_right(|key| {
                    QSymElement::term(key.clone(), BigInt::one()).coproduct_b()
                });
                assert_eq!(left_first, right_first, "index {index}");
            }
        }
    }

    #[test]
    fn counit_laws() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let element = QSymElement::monomial(index.clone());
                let delta = element.coproduct_b();
                assert_eq!(delta.counit_left(), element, "left counit at {index}");
                assert_eq!(delta.counit_right(), element, "right counit at {index}");
            }
        }
    }

    #[test]
    fn coproduct_is_an_algebra_morphism() {
        for total in 0..=4 {
            for left_degree in 0..=total {
                for a in pseudo_compositions_of(left_degree) {
                    for b in pseudo_compositions_of(total - left_degree) {
                        let x = QSymElement::monomial(a.clone());
                        let y = QSymElement::monomial(b.clone());
                        assert_eq!(
                            x.multiply(&y).coproduct_b(),
                            x.coproduct_b().multiply(&y.coproduct_b()),
                            "Delta(M{a} * M{b})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chow_comodule_coassociativity() {
        // (Delta' (x) I) Delta' = (I (x) Delta_A) Delta' into BQ (x) Q (x) Q
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let delta = QSymElement::monomial(index.clone()).coproduct_chow();
                let lhs = delta.extend_left(|key| {
                    QSymElement::term(key.clone(), BigInt::one()).coproduct_chow()
                });
                let rhs = delta.extend_right(|key| {
                    QSymElement::term(key.clone(), BigInt::one())
                        .coproduct_a()
                        .expect("right factors are type A")
                });
                assert_eq!(lhs, rhs, "index {index}");
            }
        }
    }
}

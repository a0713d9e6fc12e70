//! Antipodes: two closed coarsen-and-reverse forms and the generic
//! graded-connected recursion that serves as their independent check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::compositions::PseudoComposition;
use crate::error::Result;

use super::{BasisIndex, QSymElement};

impl QSymElement {
    /// Closed-form antipode of the type A subalgebra:
    /// `S(M_alpha) = (-1)^l(alpha) * sum over coarsenings beta of M_(beta reversed)`.
    pub fn antipode_a(&self) -> Result<Self> {
        let monomial = self.require_type_a()?;
        let mut out = QSymElement::zero();
        for (key, coeff) in monomial.terms() {
            let alpha = key.index.as_type_a().expect("verified type A");
            let signed = signed_coeff(coeff, alpha.len() as u32);
            for beta in alpha.coarsenings() {
                out.add_term(BasisIndex::monomial(beta.reversed().embed()), signed.clone());
            }
        }
        Ok(out)
    }

    /// Closed-form antipode of the full algebra: the first part is fixed and
    /// contributes its parity,
    /// `S(M_(n,alpha)) = (-1)^(l(alpha)+n) * sum over coarsenings beta of M_(n,beta reversed)`.
    pub fn antipode_b(&self) -> Self {
        let monomial = self.to_monomial();
        let mut out = QSymElement::zero();
        for (key, coeff) in monomial.terms() {
            let (n, alpha) = key.index.split_first();
            let signed = signed_coeff(coeff, alpha.len() as u32 + n);
            for beta in alpha.coarsenings() {
                let index = PseudoComposition::with_first(n, &beta.reversed());
                out.add_term(BasisIndex::monomial(index), signed.clone());
            }
        }
        out
    }

    /// The antipode computed degree by degree from the defining identity
    /// `m(S (x) id)Delta = unit . counit`, using only the coproduct and the
    /// product. Agrees with [`QSymElement::antipode_b`]; kept as an
    /// independent route.
    pub fn antipode_recursive(&self) -> Self {
        let monomial = self.to_monomial();
        let mut cache: HashMap<PseudoComposition, QSymElement> = HashMap::new();
        let mut out = QSymElement::zero();
        for (key, coeff) in monomial.terms() {
            let image = recursive_antipode_of(&key.index, &mut cache);
            out = out.add(&image.scale(coeff));
        }
        out
    }
}

fn recursive_antipode_of(
    index: &PseudoComposition,
    cache: &mut HashMap<PseudoComposition, QSymElement>,
) -> QSymElement {
    if index.is_empty() {
        return QSymElement::one();
    }
    if let Some(hit) = cache.get(index) {
        return hit.clone();
    }
    // 0 = sum over Delta(M_index) of S(left) * right; the unique term with
    // right = empty is M_index (x) 1, so S(M_index) is minus the rest.
    let delta = QSymElement::monomial(index.clone()).coproduct_b();
    let mut accumulated = QSymElement::zero();
    for ((left, right), coeff) in delta.terms() {
        if right.index.is_empty() {
            continue;
        }
        let s_left = recursive_antipode_of(&left.index, cache);
        let product = s_left.multiply(&QSymElement::term(right.clone(), BigInt::one()));
        accumulated = accumulated.add(&product.scale(coeff));
    }
    let result = accumulated.negate();
    cache.insert(index.clone(), result.clone());
    result
}

fn signed_coeff(coeff: &BigInt, exponent: u32) -> BigInt {
    if exponent % 2 == 0 {
        coeff.clone()
    } else {
        -coeff.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::m;
    use super::*;
    use crate::compositions::pseudo_compositions_of;

    #[test]
    fn type_a_closed_form() {
        // S(M_21) = M_12 + M_3, embedded
        let expected = m(&[0, 1, 2]).add(&m(&[0, 3]));
        assert_eq!(m(&[0, 2, 1]).antipode_a().unwrap(), expected);
        assert_eq!(QSymElement::one().antipode_a().unwrap(), QSymElement::one());
        // single part: sign (-1)^1
        assert_eq!(m(&[0, 4]).antipode_a().unwrap(), m(&[0, 4]).negate());
        assert!(m(&[1]).antipode_a().is_err());
    }

    #[test]
    fn type_b_closed_form() {
        assert_eq!(m(&[2, 1]).antipode_b(), m(&[2, 1]).negate());
        assert_eq!(m(&[1]).antipode_b(), m(&[1]).negate());
        assert_eq!(QSymElement::one().antipode_b(), QSymElement::one());
        // x0-free indices reduce to the type A form
        assert_eq!(m(&[0, 2, 1]).antipode_b(), m(&[0, 2, 1]).antipode_a().unwrap());
    }

    #[test]
    fn recursion_matches_the_closed_forms() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let element = QSymElement::monomial(index.clone());
                assert_eq!(element.antipode_b(), element.antipode_recursive(), "index {index}");
            }
        }
    }

    #[test]
    fn antipode_axiom_both_sides() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let element = QSymElement::monomial(index.clone());
                let delta = element.coproduct_b();
                let expected = QSymElement::one().scale(&element.counit());

                let mut convolved_left = QSymElement::zero();
                let mut convolved_right = QSymElement::zero();
                for ((left, right), coeff) in delta.terms() {
                    let left_el = QSymElement::term(left.clone(), BigInt::one());
                    let right_el = QSymElement::term(right.clone(), BigInt::one());
                    convolved_left = convolved_left
                        .add(&left_el.antipode_b().multiply(&right_el).scale(coeff));
                    convolved_right = convolved_right
                        .add(&left_el.multiply(&right_el.antipode_b()).scale(coeff));
                }
                assert_eq!(convolved_left, expected, "m(S (x) I)Delta at {index}");
                assert_eq!(convolved_right, expected, "m(I (x) S)Delta at {index}");
            }
        }
    }

    #[test]
    fn antipode_is_an_involution() {
        for n in 0..=5 {
            for index in pseudo_compositions_of(n) {
                let element = QSymElement::monomial(index.clone());
                assert_eq!(element.antipode_b().antipode_b(), element, "index {index}");
            }
        }
    }
}

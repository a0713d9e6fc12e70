//! Products: the monomial-basis quasi-shuffle and the fundamental-basis
//! shuffle, two independent routes to the same power-series multiplication.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::compositions::PseudoComposition;
use crate::permutations::{representative, shuffles};

use super::{BasisIndex, QSymElement, TensorElement};

impl QSymElement {
    /// Bilinear product in the monomial basis.
    ///
    /// On indices, `M_(a,alpha) * M_(b,beta) = sum M_((a+b),gamma)` where
    /// `gamma` runs over the quasi-shuffles of the positive-part compositions
    /// `alpha` and `beta`: interleavings in which a pair of parts, one from
    /// each side, may merge by addition while each side keeps its internal
    /// order. The first parts (the `x0` exponents) simply add.
    pub fn multiply(&self, other: &Self) -> Self {
        let left = self.to_monomial();
        let right = other.to_monomial();
        let mut out = QSymElement::zero();
        for (left_key, a) in left.terms() {
            let (x0_left, alpha) = left_key.index.split_first();
            for (right_key, b) in right.terms() {
                let (x0_right, beta) = right_key.index.split_first();
                let coeff = a * b;
                for (gamma, multiplicity) in quasi_shuffles(alpha.parts(), beta.parts()) {
                    let index = PseudoComposition::try_new(
                        std::iter::once(x0_left + x0_right)
                            .chain(gamma.iter().copied())
                            .collect(),
                    )
                    .expect("merged parts stay positive");
                    out.add_term(BasisIndex::monomial(index), &coeff * multiplicity);
                }
            }
        }
        out
    }

    /// Bilinear product in the fundamental basis, via shuffle enumeration.
    ///
    /// Each pair of fundamental indices `(alpha, beta)` is realized by a
    /// concrete signed permutation with descent composition `alpha` and a
    /// second one shifted onto the alphabet `[n+1, n+m]` with descent
    /// composition `beta`; the product is the sum of `F` over the descent
    /// compositions of all their shuffles. Independent of the representative
    /// chosen, and equal to [`QSymElement::multiply`] after conversion.
    pub fn multiply_f(&self, other: &Self) -> Self {
        let left = self.to_fundamental();
        let right = other.to_fundamental();
        let mut out = QSymElement::zero();
        for (left_key, a) in left.terms() {
            let sigma = representative(&left_key.index);
            for (right_key, b) in right.terms() {
                let tau = representative(&right_key.index).shifted(left_key.index.degree());
                let coeff = a * b;
                for pi in shuffles(&sigma, &tau).expect("shifted alphabets are disjoint") {
                    out.add_term(
                        BasisIndex::fundamental(pi.descent_composition()),
                        coeff.clone(),
                    );
                }
            }
        }
        out
    }
}

/// All quasi-shuffles (overlapping shuffles) of two positive-part sequences,
/// with multiplicities.
fn quasi_shuffles(left: &[u32], right: &[u32]) -> BTreeMap<Vec<u32>, BigInt> {
    let mut out = BTreeMap::new();
    let mut current = Vec::with_capacity(left.len() + right.len());
    quasi_shuffle_into(left, right, &mut current, &mut out);
    out
}

fn quasi_shuffle_into(
    left: &[u32],
    right: &[u32],
    current: &mut Vec<u32>,
    out: &mut BTreeMap<Vec<u32>, BigInt>,
) {
    if left.is_empty() && right.is_empty() {
        let slot = out.entry(current.clone()).or_insert_with(BigInt::zero);
        *slot += 1;
        return;
    }
    if let Some((&head, rest)) = left.split_first() {
        current.push(head);
        quasi_shuffle_into(rest, right, current, out);
        current.pop();
    }
    if let Some((&head, rest)) = right.split_first() {
        current.push(head);
        quasi_shuffle_into(left, rest, current, out);
        current.pop();
    }
    if let (Some((&l, left_rest)), Some((&r, right_rest))) =
        (left.split_first(), right.split_first())
    {
        current.push(l + r);
        quasi_shuffle_into(left_rest, right_rest, current, out);
        current.pop();
    }
}

impl TensorElement {
    /// Componentwise product: `(a (x) b) * (c (x) d) = ac (x) bd`, extended
    /// bilinearly.
    pub fn multiply(&self, other: &Self) -> Self {
        let left = self.to_monomial();
        let right = other.to_monomial();
        let mut out = TensorElement::zero();
        for ((l1, r1), a) in left.terms() {
            let l1 = QSymElement::term(l1.clone(), BigInt::from(1));
            let r1 = QSymElement::term(r1.clone(), BigInt::from(1));
            for ((l2, r2), b) in right.terms() {
                let l2 = QSymElement::term(l2.clone(), BigInt::from(1));
                let r2 = QSymElement::term(r2.clone(), BigInt::from(1));
                let product = TensorElement::tensor(&l1.multiply(&l2), &r1.multiply(&r2));
                out = out.add(&product.scale(&(a * b)));
            }
        }
        out
    }
}

//! Peak functions of both flavors: the K basis, its set-indexed form, the
//! theta projections onto the peak spans, and the rank computations backing
//! the Fibonacci dimension counts.
//!
//! `K` functions are defined for *every* index; the peak predicate is only
//! enforced where an operation is about the basis itself (set forms, ranks,
//! the shuffle identity).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::compositions::{
    peak_compositions_of, peak_pseudo_compositions_of, pseudo_compositions_of, Composition,
    DescentSet, PseudoComposition,
};
use crate::error::{Error, Result};
use crate::linalg::integer_matrix_rank;
use crate::permutations::{representative, shuffles};
use crate::qsym::{BasisIndex, QSymElement, TensorElement};

/// Which of the two peak families an index set or rank refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    A,
    B,
}

/// Type A peak function of a composition, as an embedded (first-part-0)
/// element: `K_alpha = sum over beta of n with alpha <= beta* of 2^l(beta) M_beta`.
pub fn k_function_a(alpha: &Composition) -> QSymElement {
    let n = alpha.degree();
    let mut out = QSymElement::zero();
    for beta in crate::compositions::compositions_of(n) {
        if alpha.leq(&beta.star()).expect("same degree") {
            let weight = BigInt::one() << beta.len();
            out.add_term(BasisIndex::monomial(beta.embed()), weight);
        }
    }
    out
}

/// Type B peak function of a pseudo-composition:
/// `K_alpha = sum over beta of n with alpha <= beta* of 2^(l(beta)-1) M_beta`,
/// where the degree-0 index counts as the one-part tuple `(0)` so that
/// `K_[] = 1`.
pub fn k_function_b(alpha: &PseudoComposition) -> QSymElement {
    let n = alpha.degree();
    let mut out = QSymElement::zero();
    for beta in pseudo_compositions_of(n) {
        if alpha.leq(&beta.star()).expect("same degree") {
            let exponent = beta.len().saturating_sub(1);
            let weight = BigInt::one() << exponent;
            out.add_term(BasisIndex::monomial(beta), weight);
        }
    }
    out
}

/// Type A set-indexed peak function: for a valid interior peak set inside
/// `[2, n-1]`, `sum over S subset of [n-1] with peaks subset of S u (S+1) of
/// 2^(|S|+1) M_S`. Degree 0 carries the single empty set and equals 1.
pub fn k_set_form_a(peaks: &BTreeSet<u32>, n: u32) -> Result<QSymElement> {
    validate_peak_set(peaks, n, Flavor::A)?;
    if n == 0 {
        return Ok(QSymElement::one());
    }
    let mut out = QSymElement::zero();
    for subset in subsets_of_range(1, n) {
        if covers(peaks, &subset) {
            let weight = BigInt::one() << (subset.len() + 1);
            let set = DescentSet::new(n, subset).expect("within range");
            let index = Composition::from_descent_set(&set).expect("no zero").embed();
            out.add_term(BasisIndex::monomial(index), weight);
        }
    }
    Ok(out)
}

/// Type B set-indexed peak function: for a valid peak set inside `[0, n-1]`,
/// `sum over S subset of [0, n-1] with peaks subset of S u (S+1) of 2^|S| M_S`.
pub fn k_set_form_b(peaks: &BTreeSet<u32>, n: u32) -> Result<QSymElement> {
    validate_peak_set(peaks, n, Flavor::B)?;
    let mut out = QSymElement::zero();
    for subset in subsets_of_range(0, n) {
        if covers(peaks, &subset) {
            let weight = BigInt::one() << subset.len();
            let set = DescentSet::new(n, subset).expect("within range");
            let index = PseudoComposition::from_descent_set(&set);
            out.add_term(BasisIndex::monomial(index), weight);
        }
    }
    Ok(out)
}

fn validate_peak_set(peaks: &BTreeSet<u32>, n: u32, flavor: Flavor) -> Result<()> {
    let low = match flavor {
        Flavor::A => 2,
        Flavor::B => 0,
    };
    for &i in peaks {
        if i < low || i >= n {
            return Err(Error::InvalidPeakSet {
                reason: format!("element {i} outside [{low}, {})", n),
            });
        }
        if i > 0 && peaks.contains(&(i - 1)) {
            return Err(Error::InvalidPeakSet {
                reason: format!("adjacent elements {} and {i}", i - 1),
            });
        }
    }
    Ok(())
}

/// `peaks` is contained in `S u (S+1)`.
fn covers(peaks: &BTreeSet<u32>, subset: &BTreeSet<u32>) -> bool {
    peaks
        .iter()
        .all(|&i| subset.contains(&i) || (i > 0 && subset.contains(&(i - 1))))
}

fn subsets_of_range(low: u32, high: u32) -> Vec<BTreeSet<u32>> {
    let values: Vec<u32> = (low..high).collect();
    let mut out = Vec::with_capacity(1 << values.len());
    for mask in 0u64..(1 << values.len()) {
        out.push(
            values
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    out
}

/// Stembridge's projection on the type A subalgebra: linear over the
/// fundamental basis, `F_alpha -> K_(hat alpha)`. Errors on x0-content.
pub fn theta(x: &QSymElement) -> Result<QSymElement> {
    let fundamental = x.require_type_a()?.to_fundamental();
    let mut out = QSymElement::zero();
    for (key, coeff) in fundamental.terms() {
        let alpha = key.index.as_type_a().expect("type A span");
        out.add_term(BasisIndex::peak(alpha.hat().embed()), coeff.clone());
    }
    Ok(out)
}

/// The type B projection: linear over the fundamental basis,
/// `F_alpha -> K_(hat_b alpha)`. Restricted to the type A span it agrees
/// with [`theta`].
pub fn theta_b(x: &QSymElement) -> QSymElement {
    let fundamental = x.to_fundamental();
    let mut out = QSymElement::zero();
    for (key, coeff) in fundamental.terms() {
        out.add_term(BasisIndex::peak(key.index.hat_b()), coeff.clone());
    }
    out
}

/// Apply [`theta_b`] to both factors of a tensor.
pub fn theta_b_tensor(t: &TensorElement) -> TensorElement {
    t.map_sides(|key| theta_b(&QSymElement::term(key.clone(), BigInt::one())))
}

/// Rank over the rationals of the monomial-expansion matrix of the peak
/// functions indexed by all peak indices of degree `n`.
pub fn k_basis_rank(n: u32, flavor: Flavor) -> usize {
    let expansions: Vec<QSymElement> = match flavor {
        Flavor::A => peak_compositions_of(n).iter().map(k_function_a).collect(),
        Flavor::B => peak_pseudo_compositions_of(n)
            .iter()
            .map(k_function_b)
            .collect(),
    };
    rank_of_span(&expansions, n)
}

/// Rank of the span of homogeneous degree-`n` elements, after conversion to
/// the monomial basis.
pub fn rank_of_span(elements: &[QSymElement], n: u32) -> usize {
    let columns: Vec<PseudoComposition> = pseudo_compositions_of(n);
    let position: std::collections::BTreeMap<&PseudoComposition, usize> =
        columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let matrix: Vec<Vec<BigInt>> = elements
        .iter()
        .map(|element| {
            let mut row = vec![BigInt::ZERO; columns.len()];
            for (key, coeff) in element.to_monomial().terms() {
                row[position[&key.index]] = coeff.clone();
            }
            row
        })
        .collect();
    integer_matrix_rank(matrix)
}

/// The fundamental-basis expansion of a peak function; nonnegative at every
/// peak index.
pub fn k_in_f_a(alpha: &Composition) -> QSymElement {
    k_function_a(alpha).to_fundamental()
}

pub fn k_in_f_b(alpha: &PseudoComposition) -> QSymElement {
    k_function_b(alpha).to_fundamental()
}

/// Check the type A peak shuffle identity at a pair of peak compositions:
/// `K_a * K_b = sum over shuffles pi of K_(peak composition of pi)`,
/// with the two factors realized by a representative of `a` and a shifted
/// representative of `b`.
pub fn k_multiply_check_a(a: &Composition, b: &Composition) -> Result<bool> {
    for index in [a, b] {
        if !index.is_peak() {
            return Err(Error::NotPeakIndex {
                index: index.to_string(),
            });
        }
    }
    let sigma = representative(&a.clone().into());
    let tau = representative(&b.clone().into()).shifted(a.degree());
    let mut rhs = QSymElement::zero();
    for pi in shuffles(&sigma, &tau).expect("disjoint alphabets") {
        let peak_index = pi.peak_composition().expect("all-positive shuffle");
        rhs = rhs.add(&k_function_a(&peak_index));
    }
    let lhs = k_function_a(a).multiply(&k_function_a(b));
    Ok(lhs == rhs)
}

/// Check the type B peak shuffle identity at a pair of peak
/// pseudo-compositions, with signed representatives.
pub fn k_multiply_check_b(a: &PseudoComposition, b: &PseudoComposition) -> Result<bool> {
    for index in [a, b] {
        if !index.is_peak_b() {
            return Err(Error::NotPeakIndex {
                index: index.to_string(),
            });
        }
    }
    let sigma = representative(a);
    let tau = representative(b).shifted(a.degree());
    let mut rhs = QSymElement::zero();
    for pi in shuffles(&sigma, &tau).expect("disjoint alphabets") {
        rhs = rhs.add(&k_function_b(&pi.peak_composition_b()));
    }
    let lhs = k_function_b(a).multiply(&k_function_b(b));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::{compositions_of, fibonacci};

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn pc(parts: &[u32]) -> PseudoComposition {
        PseudoComposition::new(parts.to_vec())
    }

    fn m(parts: &[u32]) -> QSymElement {
        QSymElement::monomial(pc(parts))
    }

    fn two() -> BigInt {
        BigInt::from(2)
    }

    #[test]
    fn type_b_k_worked_expansions() {
        // K_(1) = M_1 + 2 M_01
        let expected = m(&[1]).add(&m(&[0, 1]).scale(&two()));
        assert_eq!(k_function_b(&pc(&[1])), expected);
        // K_(0,1) = 2 M_01
        assert_eq!(k_function_b(&pc(&[0, 1])), m(&[0, 1]).scale(&two()));
        // degree 0
        assert_eq!(k_function_b(&PseudoComposition::empty()), QSymElement::one());
    }

    #[test]
    fn type_a_k_worked_expansions() {
        // K_(1) = 2 M_1, embedded as 2 M_01; agrees with type B K_(0,1)
        assert_eq!(k_function_a(&c(&[1])), m(&[0, 1]).scale(&two()));
        assert_eq!(k_function_a(&c(&[1])), k_function_b(&pc(&[0, 1])));
        assert_eq!(k_function_a(&Composition::empty()), QSymElement::one());
    }

    #[test]
    fn type_b_k_at_zero_prefixed_peak_indices_is_the_type_a_function() {
        for n in 0..=6 {
            for alpha in crate::compositions::peak_compositions_of(n) {
                assert_eq!(
                    k_function_b(&alpha.embed()),
                    k_function_a(&alpha),
                    "alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn zero_prefixed_k_is_the_type_a_function_unless_a_one_leads() {
        // The two star conventions differ only in whether the first positive
        // part may split, so K at (0,alpha) is the type A K at alpha exactly
        // when alpha does not start with 1. Every peak index qualifies.
        for n in 0..=6 {
            for alpha in compositions_of(n) {
                let embedded = k_function_b(&alpha.embed());
                let type_a = k_function_a(&alpha);
                if alpha.parts().first() != Some(&1) {
                    assert_eq!(embedded, type_a, "alpha = {alpha}");
                }
            }
        }
        // witness for the exception: at (0,1,1) the type B expansion picks up
        // the split of the leading 1+1
        let embedded = k_function_b(&pc(&[0, 1, 1]));
        let type_a = k_function_a(&c(&[1, 1]));
        assert_ne!(embedded, type_a);
        assert_eq!(
            embedded,
            m(&[0, 2]).scale(&two()).add(&m(&[0, 1, 1]).scale(&BigInt::from(4)))
        );
        assert_eq!(type_a, m(&[0, 1, 1]).scale(&BigInt::from(4)));
    }

    #[test]
    fn set_forms_match_the_composition_forms() {
        // type A, no peaks, n = 1: 2 M_(1)
        let expected = m(&[0, 1]).scale(&two());
        assert_eq!(k_set_form_a(&BTreeSet::new(), 1).unwrap(), expected);
        // type B, peak at 0, n = 1: 2 M_(0,1)
        let expected = m(&[0, 1]).scale(&two());
        assert_eq!(k_set_form_b(&BTreeSet::from([0]), 1).unwrap(), expected);

        for n in 0..=6 {
            for alpha in crate::compositions::peak_compositions_of(n) {
                let peaks = alpha.descent_set().elements().clone();
                assert_eq!(
                    k_set_form_a(&peaks, n).unwrap(),
                    k_function_a(&alpha),
                    "type A {alpha}"
                );
            }
            for alpha in peak_pseudo_compositions_of(n) {
                let peaks = alpha.descent_set().elements().clone();
                assert_eq!(
                    k_set_form_b(&peaks, n).unwrap(),
                    k_function_b(&alpha),
                    "type B {alpha}"
                );
            }
        }
    }

    #[test]
    fn invalid_peak_sets_are_rejected() {
        assert!(k_set_form_a(&BTreeSet::from([1]), 3).is_err());
        assert!(k_set_form_a(&BTreeSet::from([2, 3]), 5).is_err());
        assert!(k_set_form_b(&BTreeSet::from([0, 1]), 3).is_err());
        assert!(k_set_form_b(&BTreeSet::from([3]), 3).is_err());
    }

    #[test]
    fn theta_b_fixes_m1() {
        assert_eq!(theta_b(&m(&[1])), m(&[1]));
    }

    #[test]
    fn theta_b_of_a_fundamental_is_a_single_k() {
        let image = theta_b(&QSymElement::fundamental(pc(&[1, 1, 3, 2, 1, 1, 3, 1])));
        let expected = QSymElement::peak(pc(&[1, 4, 2, 5, 1]));
        assert_eq!(
            image.terms().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>(),
            expected.terms().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>()
        );
    }

    #[test]
    fn theta_fixes_the_unit_and_requires_type_a() {
        assert_eq!(theta(&QSymElement::fundamental(pc(&[]))).unwrap(), QSymElement::one());
        assert!(theta(&m(&[1])).is_err());
        assert_eq!(theta_b(&QSymElement::one()), QSymElement::one());
    }

    #[test]
    fn theta_b_restricts_to_theta() {
        for n in 0..=5 {
            for alpha in compositions_of(n) {
                let f = QSymElement::fundamental(alpha.embed());
                assert_eq!(theta_b(&f), theta(&f).unwrap(), "alpha = {alpha}");
            }
        }
    }

    #[test]
    fn ranks_are_fibonacci() {
        assert_eq!(k_basis_rank(4, Flavor::A), 3);
        assert_eq!(k_basis_rank(3, Flavor::B), 5);
        assert_eq!(k_basis_rank(0, Flavor::A), 1);
        assert_eq!(k_basis_rank(0, Flavor::B), 1);
        for n in 1..=7 {
            assert_eq!(k_basis_rank(n, Flavor::A) as u64, fibonacci(n - 1));
            assert_eq!(k_basis_rank(n, Flavor::B) as u64, fibonacci(n + 1));
        }
    }

    #[test]
    fn k_expansions_in_f_are_nonnegative_at_peak_indices() {
        // worked case: K_(1) = F_(1) + F_(0,1)
        let expected = QSymElement::fundamental(pc(&[1])).add(&QSymElement::fundamental(pc(&[0, 1])));
        assert_eq!(k_in_f_b(&pc(&[1])), expected);
        assert_eq!(k_in_f_b(&PseudoComposition::empty()), QSymElement::fundamental(pc(&[])));

        use num_traits::Signed;
        for n in 0..=6 {
            for alpha in crate::compositions::peak_compositions_of(n) {
                for (_, coeff) in k_in_f_a(&alpha).terms() {
                    assert!(!coeff.is_negative(), "K at {alpha} has a negative F-coefficient");
                }
            }
            for alpha in peak_pseudo_compositions_of(n) {
                for (_, coeff) in k_in_f_b(&alpha).terms() {
                    assert!(!coeff.is_negative(), "K at {alpha} has a negative F-coefficient");
                }
            }
        }
    }

    #[test]
    fn peak_shuffle_identity_small_cases() {
        assert!(k_multiply_check_a(&c(&[1]), &c(&[1])).unwrap());
        assert!(k_multiply_check_a(&Composition::empty(), &c(&[2, 1])).unwrap());
        assert!(k_multiply_check_b(&pc(&[0, 1]), &pc(&[1])).unwrap());
        assert!(k_multiply_check_a(&c(&[1, 2]), &c(&[1])).is_err());
    }

    #[test]
    fn peak_shuffle_identity_sweep() {
        for total in 0..=4 {
            for left in 0..=total {
                for a in crate::compositions::peak_compositions_of(left) {
                    for b in crate::compositions::peak_compositions_of(total - left) {
                        assert!(k_multiply_check_a(&a, &b).unwrap(), "type A {a} x {b}");
                    }
                }
                for a in peak_pseudo_compositions_of(left) {
                    for b in peak_pseudo_compositions_of(total - left) {
                        assert!(k_multiply_check_b(&a, &b).unwrap(), "type B {a} x {b}");
                    }
                }
            }
        }
    }
}

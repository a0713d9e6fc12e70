//! Independent ground truth: expand elements as exact multivariate
//! polynomials in finitely many variables and realize products and
//! coproducts as polynomial identities.
//!
//! Faithfulness makes this conclusive rather than merely suggestive: every
//! single monomial `x0^a x_{i_2}^{a_2} ...` determines the unique index whose
//! expansion contains it, so expansions of distinct monomial functions have
//! disjoint supports, and a degree-`n` element vanishes iff its expansion
//! over `n` positive variables vanishes. Nothing in this module goes through
//! the quasi-shuffle product or the coproduct formulas it is used to check.

pub mod verify;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::compositions::PseudoComposition;
use crate::error::{Error, Result};
use crate::qsym::{BasisIndex, QSymElement, TensorElement};

/// An exact polynomial in a fixed number of variables, stored as a map from
/// dense exponent vectors to coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TruncatedPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedPolynomial {
    pub fn zero(nvars: usize) -> Self {
        TruncatedPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, value: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], value);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent width mismatch");
        if coeff.is_zero() {
            return;
        }
        let current = self.terms.remove(&exponents).unwrap_or_else(BigInt::zero) + coeff;
        if !current.is_zero() {
            self.terms.insert(exponents, current);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exponents, coeff) in other.terms() {
            out.add_term(exponents.clone(), coeff.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exponents, coeff) in self.terms() {
            out.add_term(exponents.clone(), -coeff.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exponents, coeff) in self.terms() {
            out.add_term(exponents.clone(), coeff * factor);
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (left, a) in self.terms() {
            for (right, b) in other.terms() {
                let exponents = left.iter().zip(right).map(|(x, y)| x + y).collect();
                out.add_term(exponents, a * b);
            }
        }
        out
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, (exponents, coeff)) in self.terms().enumerate() {
            if position > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}")?;
            for (variable, &exponent) in exponents.iter().enumerate() {
                if exponent > 0 {
                    write!(f, "*x{variable}^{exponent}")?;
                }
            }
        }
        Ok(())
    }
}

/// Sum of `prod x_slots[i_j]^parts[j]` over strictly increasing slot choices
/// `i_1 < ... < i_k`, as a polynomial of width `nvars`.
fn sum_over_chains(parts: &[u32], slots: &[usize], nvars: usize) -> TruncatedPolynomial {
    let mut out = TruncatedPolynomial::zero(nvars);
    let mut exponents = vec![0u32; nvars];
    fn recurse(
        parts: &[u32],
        slots: &[usize],
        exponents: &mut Vec<u32>,
        out: &mut TruncatedPolynomial,
    ) {
        match parts.split_first() {
            None => out.add_term(exponents.clone(), BigInt::one()),
            Some((&part, rest)) => {
                for (position, &slot) in slots.iter().enumerate() {
                    if slots.len() - position < parts.len() {
                        break;
                    }
                    exponents[slot] = part;
                    recurse(rest, &slots[position + 1..], exponents, out);
                    exponents[slot] = 0;
                }
            }
        }
    }
    recurse(parts, slots, &mut exponents, &mut out);
    out
}

/// Monomial function of an index over the alphabet `x0, ..., xN`:
/// `x0^(first part)` times the sum over `0 < i_2 < ... <= N` for the rest.
/// `positive_vars` is `N`; it must be at least the number of positive-indexed
/// parts, otherwise the image would be unfaithful.
pub fn expand_m(index: &PseudoComposition, positive_vars: usize) -> Result<TruncatedPolynomial> {
    let (x0_power, rest) = index.split_first();
    if rest.len() > positive_vars {
        return Err(Error::AlphabetTooSmall {
            needed: rest.len(),
            given: positive_vars,
        });
    }
    let nvars = positive_vars + 1;
    let slots: Vec<usize> = (1..=positive_vars).collect();
    let mut out = sum_over_chains(rest.parts(), &slots, nvars);
    if x0_power > 0 {
        let mut x0 = TruncatedPolynomial::zero(nvars);
        let mut exponents = vec![0u32; nvars];
        exponents[0] = x0_power;
        x0.add_term(exponents, BigInt::one());
        out = out.multiply(&x0);
    }
    Ok(out)
}

/// Fundamental function of an index over `x0, ..., xN`, by direct chain
/// enumeration: weakly increasing sequences `0 <= i_1 <= ... <= i_n <= N`
/// with a strict rise after every descent position, where a descent at 0
/// (first part zero) forces `i_1 >= 1`.
pub fn expand_f(index: &PseudoComposition, positive_vars: usize) -> Result<TruncatedPolynomial> {
    let n = index.degree() as usize;
    let nvars = positive_vars + 1;
    // a positive-first-part index of degree n needs at most n variables; the
    // check mirrors expand_m so the two routes cover the same inputs
    let (_, rest) = index.split_first();
    if rest.len() > positive_vars {
        return Err(Error::AlphabetTooSmall {
            needed: rest.len(),
            given: positive_vars,
        });
    }
    let descents = index.descent_set();
    let mut out = TruncatedPolynomial::zero(nvars);
    let mut chain = vec![0u32; n];
    fn recurse(
        position: usize,
        n: usize,
        max_var: u32,
        descents: &crate::compositions::DescentSet,
        chain: &mut Vec<u32>,
        out: &mut TruncatedPolynomial,
    ) {
        if position == n {
            let mut exponents = vec![0u32; max_var as usize + 1];
            for &variable in chain.iter() {
                exponents[variable as usize] += 1;
            }
            out.add_term(exponents, BigInt::one());
            return;
        }
        let lower = if position == 0 {
            u32::from(descents.contains(0))
        } else {
            let previous = chain[position - 1];
            if descents.contains(position as u32) {
                previous + 1
            } else {
                previous
            }
        };
        for variable in lower..=max_var {
            chain[position] = variable;
            recurse(position + 1, n, max_var, descents, chain, out);
        }
    }
    recurse(0, n, positive_vars as u32, &descents, &mut chain, &mut out);
    Ok(out)
}

/// Linear extension of [`expand_m`] to arbitrary elements, factoring through
/// the monomial normal form.
pub fn expand_element(x: &QSymElement, positive_vars: usize) -> Result<TruncatedPolynomial> {
    let monomial = x.to_monomial();
    let mut out = TruncatedPolynomial::zero(positive_vars + 1);
    for (key, coeff) in monomial.terms() {
        out = out.add(&expand_m(&key.index, positive_vars)?.scale(coeff));
    }
    Ok(out)
}

/// Which doubled alphabet a coproduct is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoublingMode {
    /// `X0 + Y0`: both alphabets keep their 0 variable and `x0` is replaced
    /// by `x0 + y0`; realizes the type B coproduct.
    TypeB,
    /// `X0 + Y`: the second alphabet has no `y0`; realizes Chow's coproduct.
    Chow,
    /// `X + Y`: no 0 variables at all; realizes the type A coproduct on the
    /// first-part-0 span.
    TypeA,
}

/// Expand `x` over a doubled alphabet and read the result back as a tensor,
/// entirely bypassing the coproduct formulas.
///
/// Every monomial of the doubled expansion splits into an X-part and a
/// Y-part, each of which names a unique index pair; the coefficient of the
/// pair is taken at its packed representative, and the reconstructed tensor
/// is re-expanded and compared against the original polynomial, so any
/// failure to decompose is detected rather than silently mis-read.
pub fn coproduct_oracle(
    x: &QSymElement,
    positive_vars: usize,
    mode: DoublingMode,
) -> Result<TensorElement> {
    let monomial = match mode {
        DoublingMode::TypeA => x.require_type_a()?,
        _ => x.to_monomial(),
    };
    let layout = AlphabetLayout::new(positive_vars, mode);
    let mut doubled = TruncatedPolynomial::zero(layout.total_vars);
    for (key, coeff) in monomial.terms() {
        doubled = doubled.add(&layout.expand_index(&key.index)?.scale(coeff));
    }

    // read off candidate tensor terms at packed representatives
    let mut tensor = TensorElement::zero();
    let mut seen = std::collections::BTreeSet::new();
    for (exponents, _) in doubled.terms() {
        let (left, right) = layout.split_indices(exponents);
        if !seen.insert((left.clone(), right.clone())) {
            continue;
        }
        let packed = layout.packed_exponents(&left, &right)?;
        tensor.add_term(
            BasisIndex::monomial(left),
            BasisIndex::monomial(right),
            doubled.coefficient(&packed),
        );
    }

    // consistency: the tensor must re-expand to exactly the doubled polynomial
    let mut reconstructed = TruncatedPolynomial::zero(layout.total_vars);
    for ((left, right), coeff) in tensor.terms() {
        let left_poly = layout.expand_side(&left.index, Side::X)?;
        let right_poly = layout.expand_side(&right.index, Side::Y)?;
        reconstructed = reconstructed.add(&left_poly.multiply(&right_poly).scale(coeff));
    }
    if reconstructed != doubled {
        return Err(Error::OracleInconsistency {
            index: x
                .max_degree()
                .map(|d| d.to_string())
                .unwrap_or_else(|| "0".into()),
        });
    }
    Ok(tensor)
}

#[derive(Clone, Copy)]
enum Side {
    X,
    Y,
}

/// Variable layout of a doubled alphabet. X variables come first, then Y;
/// within each side the 0 variable (when present) precedes the positive
/// ones, and the combined positive chain is ordered all-X-then-all-Y.
struct AlphabetLayout {
    positive_vars: usize,
    mode: DoublingMode,
    total_vars: usize,
}

impl AlphabetLayout {
    fn new(positive_vars: usize, mode: DoublingMode) -> Self {
        let total_vars = match mode {
            DoublingMode::TypeB => 2 * positive_vars + 2,
            DoublingMode::Chow => 2 * positive_vars + 1,
            DoublingMode::TypeA => 2 * positive_vars,
        };
        AlphabetLayout {
            positive_vars,
            mode,
            total_vars,
        }
    }

    fn has_x0(&self) -> bool {
        !matches!(self.mode, DoublingMode::TypeA)
    }

    fn has_y0(&self) -> bool {
        matches!(self.mode, DoublingMode::TypeB)
    }

    fn x0_slot(&self) -> usize {
        0
    }

    fn x_positive_slots(&self) -> Vec<usize> {
        let start = usize::from(self.has_x0());
        (start..start + self.positive_vars).collect()
    }

    fn y0_slot(&self) -> usize {
        usize::from(self.has_x0()) + self.positive_vars
    }

    fn y_positive_slots(&self) -> Vec<usize> {
        let start = usize::from(self.has_x0()) + self.positive_vars + usize::from(self.has_y0());
        (start..start + self.positive_vars).collect()
    }

    /// Expand an index over the doubled alphabet. Positive parts run over the
    /// chain of all X positives followed by all Y positives. The first part
    /// lands on `(x0 + y0)` in type B mode and must be 0 in type A mode. In
    /// Chow mode, where no `y0` exists, a positive first part either sits on
    /// `x0` or the whole index slides into the Y block with its first part on
    /// an ordinary positive variable (the `1 (x) M_(0,alpha)` cut).
    fn expand_index(&self, index: &PseudoComposition) -> Result<TruncatedPolynomial> {
        let (first, rest) = index.split_first();
        if rest.len() > 2 * self.positive_vars {
            return Err(Error::AlphabetTooSmall {
                needed: rest.len(),
                given: 2 * self.positive_vars,
            });
        }
        let chain: Vec<usize> = self
            .x_positive_slots()
            .into_iter()
            .chain(self.y_positive_slots())
            .collect();
        let mut out = sum_over_chains(rest.parts(), &chain, self.total_vars);
        if first > 0 {
            match self.mode {
                DoublingMode::TypeA => unreachable!("type A input is first-part-0"),
                DoublingMode::Chow => {
                    let mut head = TruncatedPolynomial::zero(self.total_vars);
                    let mut exponents = vec![0u32; self.total_vars];
                    exponents[self.x0_slot()] = first;
                    head.add_term(exponents, BigInt::one());
                    out = out.multiply(&head);
                    // all parts, first included, on the Y chain
                    out = out.add(&sum_over_chains(
                        index.parts(),
                        &self.y_positive_slots(),
                        self.total_vars,
                    ));
                }
                DoublingMode::TypeB => {
                    // (x0 + y0)^first, binomially
                    let mut head = TruncatedPolynomial::zero(self.total_vars);
                    let mut row = vec![BigInt::one()];
                    for _ in 0..first {
                        let mut next = Vec::with_capacity(row.len() + 1);
                        next.push(BigInt::one());
                        for window in row.windows(2) {
                            next.push(&window[0] + &window[1]);
                        }
                        next.push(BigInt::one());
                        row = next;
                    }
                    for (i, binomial) in row.into_iter().enumerate() {
                        let mut exponents = vec![0u32; self.total_vars];
                        exponents[self.x0_slot()] = i as u32;
                        exponents[self.y0_slot()] = first - i as u32;
                        head.add_term(exponents, binomial);
                    }
                    out = out.multiply(&head);
                }
            }
        }
        Ok(out)
    }

    /// Expand an index over one side's variables only, inside the doubled
    /// layout (used to re-expand a read-off tensor).
    fn expand_side(&self, index: &PseudoComposition, side: Side) -> Result<TruncatedPolynomial> {
        let (first, rest) = index.split_first();
        let slots = match side {
            Side::X => self.x_positive_slots(),
            Side::Y => self.y_positive_slots(),
        };
        if rest.len() > slots.len() {
            return Err(Error::AlphabetTooSmall {
                needed: rest.len(),
                given: slots.len(),
            });
        }
        let mut out = sum_over_chains(rest.parts(), &slots, self.total_vars);
        if first > 0 {
            let slot = match (side, self.mode) {
                (Side::X, m) if !matches!(m, DoublingMode::TypeA) => self.x0_slot(),
                (Side::Y, DoublingMode::TypeB) => self.y0_slot(),
                _ => {
                    return Err(Error::OracleInconsistency {
                        index: index.to_string(),
                    })
                }
            };
            let mut head = TruncatedPolynomial::zero(self.total_vars);
            let mut exponents = vec![0u32; self.total_vars];
            exponents[slot] = first;
            head.add_term(exponents, BigInt::one());
            out = out.multiply(&head);
        }
        Ok(out)
    }

    /// Read the unique index pair a doubled monomial belongs to.
    fn split_indices(&self, exponents: &[u32]) -> (PseudoComposition, PseudoComposition) {
        let read = |zero_slot: Option<usize>, positive_slots: &[usize]| {
            let first = zero_slot.map_or(0, |slot| exponents[slot]);
            let mut parts = vec![first];
            for &slot in positive_slots {
                if exponents[slot] > 0 {
                    parts.push(exponents[slot]);
                }
            }
            PseudoComposition::try_new(parts).expect("positive tail by construction")
        };
        let left = read(
            self.has_x0().then(|| self.x0_slot()),
            &self.x_positive_slots(),
        );
        let right = read(
            self.has_y0().then(|| self.y0_slot()),
            &self.y_positive_slots(),
        );
        (left, right)
    }

    /// The packed representative monomial of an index pair: parts laid out on
    /// the earliest slots of each side.
    fn packed_exponents(
        &self,
        left: &PseudoComposition,
        right: &PseudoComposition,
    ) -> Result<Vec<u32>> {
        let mut exponents = vec![0u32; self.total_vars];
        let mut place = |index: &PseudoComposition,
                         zero_slot: Option<usize>,
                         positive_slots: &[usize]|
         -> Result<()> {
            let (first, rest) = index.split_first();
            if first > 0 {
                let slot = zero_slot.ok_or_else(|| Error::OracleInconsistency {
                    index: index.to_string(),
                })?;
                exponents[slot] = first;
            }
            if rest.len() > positive_slots.len() {
                return Err(Error::AlphabetTooSmall {
                    needed: rest.len(),
                    given: positive_slots.len(),
                });
            }
            for (part, &slot) in rest.parts().iter().zip(positive_slots) {
                exponents[slot] = *part;
            }
            Ok(())
        };
        place(
            left,
            self.has_x0().then(|| self.x0_slot()),
            &self.x_positive_slots(),
        )?;
        place(
            right,
            self.has_y0().then(|| self.y0_slot()),
            &self.y_positive_slots(),
        )?;
        Ok(exponents)
    }
}

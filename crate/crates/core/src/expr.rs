//! Text syntax for elements: parsing of signed integer-weighted sums of
//! basis symbols like `3*M[2,1] - F[0,1,1] + K[1,2]`, and the matching
//! printers for elements and tensors.
//!
//! Grammar:
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := int '*' symbol | symbol | int
//! symbol:= ('M'|'F'|'K') '[' parts ']'
//! parts := (int (',' int)*)?
//! ```
//!
//! `[]` denotes the empty index and `[0]` normalizes to it. A bare integer
//! term is a multiple of the unit.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::compositions::PseudoComposition;
use crate::error::{Error, Result};
use crate::permutations::SignedPermutation;
use crate::qsym::{Basis, BasisIndex, QSymElement, TensorElement};

/// Presentation options for the text printers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Style {
    /// Print embedded type A indices without their leading zero, e.g.
    /// `M[2,1]` for the index `(0,2,1)`.
    pub strip_leading_zero: bool,
}

pub fn parse_element(source: &str) -> Result<QSymElement> {
    let mut parser = Parser::new(source);
    let element = parser.element()?;
    parser.expect_end()?;
    Ok(element)
}

/// Parse a comma-separated index with optional brackets: `1,2` or `[1,2]`.
pub fn parse_parts(source: &str) -> Result<PseudoComposition> {
    let mut parser = Parser::new(source);
    parser.skip_whitespace();
    let bracketed = parser.eat(b'[');
    let parts = parser.parts(if bracketed { Some(b']') } else { None })?;
    if bracketed && !parser.eat(b']') {
        return Err(parser.error("expected ']'"));
    }
    parser.expect_end()?;
    PseudoComposition::try_new(parts)
}

/// Parse a signed permutation literal like `(-3,2,-4,5,1)`; the parentheses
/// are optional.
pub fn parse_signed_permutation(source: &str) -> Result<SignedPermutation> {
    let mut parser = Parser::new(source);
    parser.skip_whitespace();
    let parenthesized = parser.eat(b'(');
    let mut letters = Vec::new();
    parser.skip_whitespace();
    if !parser.at(b')') && !parser.at_end() {
        loop {
            letters.push(parser.signed_integer()?);
            parser.skip_whitespace();
            if !parser.eat(b',') {
                break;
            }
        }
    }
    if parenthesized && !parser.eat(b')') {
        return Err(parser.error("expected ')'"));
    }
    parser.expect_end()?;
    SignedPermutation::try_new(letters)
}

struct Parser<'a> {
    source: &'a [u8],
    position: usize,
}

impl<'a> Parser<'a> {
    fn new(source: &'a str) -> Self {
        Parser {
            source: source.as_bytes(),
            position: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.position,
            message: message.into(),
        }
    }

    fn skip_whitespace(&mut self) {
        while self
            .source
            .get(self.position)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.position += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.position >= self.source.len()
    }

    fn at(&self, byte: u8) -> bool {
        self.source.get(self.position) == Some(&byte)
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.at(byte) {
            self.position += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_whitespace();
        if !self.at_end() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }

    fn element(&mut self) -> Result<QSymElement> {
        let mut element = QSymElement::zero();
        self.skip_whitespace();
        if self.at_end() {
            return Err(self.error("empty expression"));
        }
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        loop {
            self.skip_whitespace();
            let (index, mut coeff) = self.term()?;
            if negative {
                coeff = -coeff;
            }
            element.add_term(index, coeff);
            self.skip_whitespace();
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(element)
    }

    fn term(&mut self) -> Result<(BasisIndex, BigInt)> {
        if self.source.get(self.position).is_some_and(u8::is_ascii_digit) {
            let coeff = self.unsigned_integer_big()?;
            self.skip_whitespace();
            if self.eat(b'*') {
                self.skip_whitespace();
                let index = self.basis_symbol()?;
                return Ok((index, coeff));
            }
            // bare integer: a multiple of the unit
            return Ok((
                BasisIndex::monomial(PseudoComposition::empty()),
                coeff,
            ));
        }
        let index = self.basis_symbol()?;
        Ok((index, BigInt::one()))
    }

    fn basis_symbol(&mut self) -> Result<BasisIndex> {
        let Some(&letter) = self.source.get(self.position) else {
            return Err(self.error("expected a basis symbol (M, F, or K)"));
        };
        let Some(basis) = Basis::from_symbol(letter as char) else {
            return Err(self.error(format!(
                "expected a basis symbol (M, F, or K), found '{}'",
                letter as char
            )));
        };
        self.position += 1;
        self.skip_whitespace();
        if !self.eat(b'[') {
            return Err(self.error("expected '[' after basis symbol"));
        }
        let start = self.position;
        let parts = self.parts(Some(b']'))?;
        if !self.eat(b']') {
            return Err(self.error("expected ']'"));
        }
        let index = PseudoComposition::try_new(parts).map_err(|inner| Error::Parse {
            position: start,
            message: inner.to_string(),
        })?;
        Ok(BasisIndex {
            index,
            basis,
        })
    }

    fn parts(&mut self, closer: Option<u8>) -> Result<Vec<u32>> {
        let mut parts = Vec::new();
        self.skip_whitespace();
        if closer.is_some_and(|c| self.at(c)) || self.at_end() {
            return Ok(parts);
        }
        loop {
            parts.push(self.unsigned_integer()?);
            self.skip_whitespace();
            if !self.eat(b',') {
                break;
            }
            self.skip_whitespace();
        }
        Ok(parts)
    }

    fn unsigned_integer(&mut self) -> Result<u32> {
        let start = self.position;
        while self.source.get(self.position).is_some_and(u8::is_ascii_digit) {
            self.position += 1;
        }
        if start == self.position {
            return Err(self.error("expected a nonnegative integer"));
        }
        std::str::from_utf8(&self.source[start..self.position])
            .expect("digits are ASCII")
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "integer out of range".into(),
            })
    }

    fn unsigned_integer_big(&mut self) -> Result<BigInt> {
        let start = self.position;
        while self.source.get(self.position).is_some_and(u8::is_ascii_digit) {
            self.position += 1;
        }
        if start == self.position {
            return Err(self.error("expected an integer"));
        }
        let text = std::str::from_utf8(&self.source[start..self.position]).expect("ASCII");
        text.parse().map_err(|_| Error::Parse {
            position: start,
            message: "invalid integer".into(),
        })
    }

    fn signed_integer(&mut self) -> Result<i32> {
        self.skip_whitespace();
        let negative = self.eat(b'-');
        let magnitude = self.unsigned_integer()?;
        let value = i32::try_from(magnitude).map_err(|_| self.error("letter out of range"))?;
        Ok(if negative { -value } else { value })
    }
}

fn index_body(key: &BasisIndex, style: Style) -> Option<String> {
    if key.index.is_empty() {
        return None;
    }
    let parts: Vec<u32> = if style.strip_leading_zero && key.index.first_part() == 0 {
        key.index.parts()[1..].to_vec()
    } else {
        key.index.parts().to_vec()
    };
    let joined = parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Some(format!("{}[{joined}]", key.basis.symbol()))
}

fn push_term(out: &mut String, first: bool, coeff: &BigInt, body: Option<String>) {
    let magnitude = coeff.abs();
    if first {
        if coeff.is_negative() {
            out.push('-');
        }
    } else if coeff.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    match body {
        None => out.push_str(&magnitude.to_string()),
        Some(body) => {
            if magnitude.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&magnitude.to_string());
                out.push('*');
                out.push_str(&body);
            }
        }
    }
}

/// Render an element in the bracketed text syntax, e.g.
/// `M[0,2] + 2*M[0,1,1]`. The empty index prints as a bare integer.
pub fn format_element(element: &QSymElement, style: Style) -> String {
    if element.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (position, (key, coeff)) in element.terms().enumerate() {
        push_term(&mut out, position == 0, coeff, index_body(key, style));
    }
    out
}

/// Render a tensor as a sum of `left (x) right` pairs; either side of a pair
/// prints as `1` when its index is empty.
pub fn format_tensor(tensor: &TensorElement, style: Style) -> String {
    if tensor.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (position, ((left, right), coeff)) in tensor.terms().enumerate() {
        let left_body = index_body(left, style).unwrap_or_else(|| "1".into());
        let right_body = index_body(right, style).unwrap_or_else(|| "1".into());
        push_term(
            &mut out,
            position == 0,
            coeff,
            Some(format!("{left_body} (x) {right_body}")),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn pc(parts: &[u32]) -> PseudoComposition {
        PseudoComposition::new(parts.to_vec())
    }

    #[test]
    fn parses_weighted_sums() {
        let parsed = parse_element("3*M[2,1] - F[0,1,1] + K[1,2]").unwrap();
        assert_eq!(
            parsed.coefficient(&BasisIndex::monomial(pc(&[2, 1]))),
            BigInt::from(3)
        );
        assert_eq!(
            parsed.coefficient(&BasisIndex::fundamental(pc(&[0, 1, 1]))),
            BigInt::from(-1)
        );
        assert_eq!(
            parsed.coefficient(&BasisIndex::peak(pc(&[1, 2]))),
            BigInt::from(1)
        );
    }

    #[test]
    fn parses_units_and_signs() {
        assert_eq!(parse_element("1").unwrap(), QSymElement::one());
        assert_eq!(parse_element("M[]").unwrap(), QSymElement::one());
        assert_eq!(parse_element("M[0]").unwrap(), QSymElement::one());
        assert_eq!(
            parse_element("-M[1]").unwrap(),
            QSymElement::monomial(pc(&[1])).negate()
        );
        assert_eq!(
            parse_element("2 + 3").unwrap(),
            QSymElement::one().scale(&BigInt::from(5))
        );
        assert_eq!(parse_element("M[1] - M[1]").unwrap(), QSymElement::zero());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_element("M[2,0]").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert_eq!(position, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_element("").is_err());
        assert!(parse_element("Q[1]").is_err());
        assert!(parse_element("M[1] xyz").is_err());
        assert!(parse_element("M[1").is_err());
        assert!(parse_element("3*").is_err());
    }

    #[test]
    fn parses_permutations_and_parts() {
        assert_eq!(
            parse_signed_permutation("(-3,2,-4,5,1)").unwrap(),
            SignedPermutation::new(vec![-3, 2, -4, 5, 1])
        );
        assert_eq!(
            parse_signed_permutation("1, 2, 3").unwrap(),
            SignedPermutation::new(vec![1, 2, 3])
        );
        assert!(parse_signed_permutation("(1,1)").is_err());
        assert!(parse_signed_permutation("(0)").is_err());
        assert_eq!(parse_parts("[1,2]").unwrap(), pc(&[1, 2]));
        assert_eq!(parse_parts("0,2").unwrap(), pc(&[0, 2]));
        assert_eq!(parse_parts("[]").unwrap(), PseudoComposition::empty());
        assert!(parse_parts("[2,0]").is_err());
    }

    #[test]
    fn formats_match_the_expected_shapes() {
        let element = QSymElement::monomial(pc(&[0, 2]))
            .add(&QSymElement::monomial(pc(&[0, 1, 1])).scale(&BigInt::from(2)));
        assert_eq!(format_element(&element, Style::default()), "M[0,2] + 2*M[0,1,1]");
        assert_eq!(
            format_element(&element, Style { strip_leading_zero: true }),
            "M[2] + 2*M[1,1]"
        );
        assert_eq!(format_element(&QSymElement::zero(), Style::default()), "0");
        assert_eq!(format_element(&QSymElement::one(), Style::default()), "1");
        assert_eq!(
            format_element(&QSymElement::monomial(pc(&[2, 1])).negate(), Style::default()),
            "-M[2,1]"
        );

        let tensor = TensorElement::unit();
        assert_eq!(format_tensor(&tensor, Style::default()), "1 (x) 1");
        assert_eq!(format_tensor(&TensorElement::zero(), Style::default()), "0");
    }

    #[test]
    fn print_then_parse_is_identity_on_elements() {
        let element = parse_element("5*K[2,2] - 7*F[0,1] + M[3] - 2").unwrap();
        let reparsed = parse_element(&format_element(&element, Style::default())).unwrap();
        assert_eq!(reparsed, element);
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(terms in proptest::collection::vec(
            (0u8..3, proptest::collection::vec(0u32..4, 0..4), -4i64..5), 0..5
        )) {
            let mut element = QSymElement::zero();
            for (basis, raw_parts, coeff) in terms {
                // force a valid pseudo-composition: zeros after the first
                // position bump to 1
                let parts: Vec<u32> = raw_parts
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| if i > 0 && p == 0 { 1 } else { p })
                    .collect();
                let basis = match basis {
                    0 => Basis::Monomial,
                    1 => Basis::Fundamental,
                    _ => Basis::Peak,
                };
                element.add_term(
                    BasisIndex { index: PseudoComposition::new(parts), basis },
                    BigInt::from(coeff),
                );
            }
            let printed = format_element(&element, Style::default());
            let reparsed = parse_element(&printed).unwrap();
            // printing canonicalizes the unit (F[] and K[] are the same
            // element as M[]); every other term must round-trip tag-exact
            let canonical = |x: &QSymElement| {
                let mut out = QSymElement::zero();
                for (key, coeff) in x.terms() {
                    let key = if key.index.is_empty() {
                        BasisIndex::monomial(PseudoComposition::empty())
                    } else {
                        key.clone()
                    };
                    out.add_term(key, coeff.clone());
                }
                out.terms().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>()
            };
            prop_assert_eq!(canonical(&reparsed), canonical(&element));
        }
    }
}

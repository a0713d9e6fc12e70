//! Canonical JSON forms shared by the CLI and the C API.
//!
//! An element is `{"kind":"element","terms":[{"basis":"M","parts":[2,1],
//! "coeff":"1"}, ...]}` with terms in canonical order; a tensor replaces
//! `basis`/`parts` with a two-entry `pairs` array of index objects.
//! Coefficients are signed decimal strings so unbounded integers survive
//! any JSON reader.

use serde::{Deserialize, Serialize};

use crate::qsym::{Basis, BasisIndex, QSymElement, TensorElement};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndexJson {
    pub basis: String,
    pub parts: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub basis: String,
    pub parts: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementJson {
    pub kind: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorTermJson {
    pub pairs: Vec<IndexJson>,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorJson {
    pub kind: String,
    pub terms: Vec<TensorTermJson>,
}

fn index_json(key: &BasisIndex) -> IndexJson {
    IndexJson {
        basis: key.basis.symbol().to_string(),
        parts: key.index.parts().to_vec(),
    }
}

pub fn element_json(element: &QSymElement) -> ElementJson {
    ElementJson {
        kind: "element".into(),
        terms: element
            .terms()
            .map(|(key, coeff)| TermJson {
                basis: key.basis.symbol().to_string(),
                parts: key.index.parts().to_vec(),
                coeff: coeff.to_string(),
            })
            .collect(),
    }
}

pub fn tensor_json(tensor: &TensorElement) -> TensorJson {
    TensorJson {
        kind: "tensor".into(),
        terms: tensor
            .terms()
            .map(|((left, right), coeff)| TensorTermJson {
                pairs: vec![index_json(left), index_json(right)],
                coeff: coeff.to_string(),
            })
            .collect(),
    }
}

pub fn element_to_string(element: &QSymElement) -> String {
    serde_json::to_string(&element_json(element)).expect("serialization cannot fail")
}

pub fn tensor_to_string(tensor: &TensorElement) -> String {
    serde_json::to_string(&tensor_json(tensor)).expect("serialization cannot fail")
}

/// Rebuild an element from its JSON form; used by round-trip tests and the
/// C API.
pub fn element_from_json(json: &ElementJson) -> crate::error::Result<QSymElement> {
    let mut element = QSymElement::zero();
    for term in &json.terms {
        let mut symbol = term.basis.chars();
        let basis = symbol
            .next()
            .filter(|_| symbol.next().is_none())
            .and_then(Basis::from_symbol)
            .ok_or_else(|| crate::error::Error::Parse {
                position: 0,
                message: format!("unknown basis {:?}", term.basis),
            })?;
        let index = crate::compositions::PseudoComposition::try_new(term.parts.clone())?;
        let coeff = term
            .coeff
            .parse()
            .map_err(|_| crate::error::Error::Parse {
                position: 0,
                message: format!("invalid coefficient {:?}", term.coeff),
            })?;
        element.add_term(BasisIndex { index, basis }, coeff);
    }
    Ok(element)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::PseudoComposition;
    use num_bigint::BigInt;

    #[test]
    fn element_serialization_is_canonical() {
        let element = QSymElement::monomial(PseudoComposition::new(vec![0, 1, 1]))
            .scale(&BigInt::from(2))
            .add(&QSymElement::monomial(PseudoComposition::new(vec![0, 2])));
        assert_eq!(
            element_to_string(&element),
            r#"{"kind":"element","terms":[{"basis":"M","parts":[0,2],"coeff":"1"},{"basis":"M","parts":[0,1,1],"coeff":"2"}]}"#
        );
    }

    #[test]
    fn tensor_serialization_uses_pairs() {
        let tensor = TensorElement::unit();
        assert_eq!(
            tensor_to_string(&tensor),
            r#"{"kind":"tensor","terms":[{"pairs":[{"basis":"M","parts":[]},{"basis":"M","parts":[]}],"coeff":"1"}]}"#
        );
    }

    #[test]
    fn json_round_trip() {
        let element = crate::expr::parse_element("3*M[2,1] - F[0,1,1] + K[1,2] - 7").unwrap();
        let json = element_json(&element);
        let text = serde_json::to_string(&json).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        let rebuilt = element_from_json(&back).unwrap();
        assert_eq!(
            rebuilt.terms().collect::<Vec<_>>(),
            element.terms().collect::<Vec<_>>()
        );
    }

    #[test]
    fn huge_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let element = QSymElement::one().scale(&big);
        let json = element_json(&element);
        assert_eq!(json.terms[0].coeff, "123456789012345678901234567890");
        let rebuilt = element_from_json(&json).unwrap();
        assert_eq!(rebuilt, element);
    }
}

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::LaurentError;
use crate::poly::{Coeff, LaurentPoly};

/// One serialized term: exponents in half-steps, coefficient as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exponents: Vec<i32>,
    pub coeff: String,
}

pub fn poly_to_json<C: Coeff>(p: &LaurentPoly<C>) -> serde_json::Value {
    let terms: Vec<PolyTerm> = p
        .terms()
        .iter()
        .map(|(e, c)| PolyTerm { exponents: e.clone(), coeff: c.to_string() })
        .collect();
    serde_json::to_value(terms).expect("terms serialize")
}

pub fn poly_from_json<C: Coeff + FromStr>(
    mu: usize,
    v: &serde_json::Value,
) -> Result<LaurentPoly<C>, LaurentError> {
    let terms: Vec<PolyTerm> =
        serde_json::from_value(v.clone()).map_err(|e| LaurentError::Parse(e.to_string()))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        if t.exponents.len() != mu {
            return Err(LaurentError::VariableCountMismatch(mu, t.exponents.len()));
        }
        let c = t
            .coeff
            .parse::<C>()
            .map_err(|_| LaurentError::Parse(format!("bad coefficient {:?}", t.coeff)))?;
        out.push((t.exponents, c));
    }
    Ok(LaurentPoly::from_terms(mu, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn round_trip() {
        let p = LaurentPoly::<BigInt>::from_terms(
            2,
            [(vec![1, -2], BigInt::from(-7)), (vec![0, 0], BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap())],
        );
        let v = poly_to_json(&p);
        assert_eq!(poly_from_json::<BigInt>(2, &v).unwrap(), p);
    }

    #[test]
    fn wrong_arity() {
        let v = serde_json::json!([{ "exponents": [2], "coeff": "1" }]);
        assert!(poly_from_json::<i64>(2, &v).is_err());
    }
}

//! Text formats: a semigroup is `"5,7"`, an ideal is `"17,21,25"` (negative
//! entries allowed). Whitespace around entries is ignored.

use semitorsion_core::{NumericalSemigroup, RelativeIdeal};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("empty list")]
    Empty,
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error(transparent)]
    Math(#[from] semitorsion_core::Error),
}

pub fn parse_list(text: &str) -> Result<Vec<i64>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::Empty);
    }
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| ParseError::BadInteger(t.to_string()))
        })
        .collect()
}

pub fn parse_semigroup(text: &str) -> Result<NumericalSemigroup, ParseError> {
    Ok(NumericalSemigroup::new(&parse_list(text)?)?)
}

pub fn parse_ideal(
    semigroup: &NumericalSemigroup,
    text: &str,
) -> Result<RelativeIdeal, ParseError> {
    Ok(RelativeIdeal::new(semigroup, &parse_list(text)?)?)
}

pub fn format_list(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

//! Plain-text pair files: one `a b` line per edge in cyclic order, with
//! `#` comment lines. Blank lines are ignored.

use std::num::IntErrorKind;

use thiserror::Error;

use crate::charpair::{CharVector, CharacteristicPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairFileError {
    #[error("line {line}: {cause}")]
    MalformedLine { line: usize, cause: String },

    #[error("need at least 3 edges, found {found}")]
    TooFewEdges { found: usize },

    #[error("line {line}: integer does not fit in 64 bits")]
    IntegerOverflow { line: usize },
}

fn parse_int(token: &str, line: usize) -> Result<i64, PairFileError> {
    token.parse::<i64>().map_err(|e| match e.kind() {
        IntErrorKind::PosOverflow | IntErrorKind::NegOverflow => {
            PairFileError::IntegerOverflow { line }
        }
        _ => PairFileError::MalformedLine {
            line,
            cause: format!("{token:?} is not an integer"),
        },
    })
}

/// Parses a pair file. Admissibility is not checked here.
pub fn parse_pair_file(document: &str) -> Result<CharacteristicPair, PairFileError> {
    let mut vectors = Vec::new();
    for (k, raw) in document.lines().enumerate() {
        let line = k + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(PairFileError::MalformedLine {
                line,
                cause: format!("expected two integers, found {} fields", tokens.len()),
            });
        }
        let a = parse_int(tokens[0], line)?;
        let b = parse_int(tokens[1], line)?;
        vectors.push(CharVector::new(a, b));
    }
    if vectors.len() < 3 {
        return Err(PairFileError::TooFewEdges {
            found: vectors.len(),
        });
    }
    Ok(CharacteristicPair::new(vectors))
}

/// The file form of a pair, readable by [`parse_pair_file`].
pub fn format_pair_file(pair: &CharacteristicPair) -> String {
    pair.vectors()
        .iter()
        .map(|v| format!("{} {}\n", v.a, v.b))
        .collect()
}

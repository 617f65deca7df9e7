//! Subcommand bodies. Each returns data; rendering and exit codes live in the
//! binary.

pub mod compute;
pub mod make;
pub mod qfi;
pub mod sweep;

use crate::CliError;

/// Parses `AxBx…` into factor dimensions.
pub fn parse_dims(s: &str) -> Result<Vec<usize>, CliError> {
    let dims = s
        .split(['x', 'X'])
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            CliError::Input(format!("cannot parse dimensions {s:?}; expected e.g. 2x3"))
        })?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(CliError::Input(format!(
            "dimensions {s:?} must be positive"
        )));
    }
    Ok(dims)
}

/// Parses `AxB`.
pub fn parse_partition(s: &str) -> Result<[usize; 2], CliError> {
    match parse_dims(s)?.as_slice() {
        &[a, b] => Ok([a, b]),
        _ => Err(CliError::Input(format!(
            "partition {s:?} must have exactly two factors"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_parsing() {
        assert_eq!(parse_dims("2x3x4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_partition("2X3").unwrap(), [2, 3]);
        assert!(parse_partition("2x3x4").is_err());
        assert!(parse_dims("2x0").is_err());
        assert!(parse_dims("two").is_err());
    }
}

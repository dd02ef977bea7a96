//! Sequence specs on the command line: preset names or inline JSON.

use horadam_core::horadam::{preset, HoradamSpec, Preset};
use horadam_core::RingScalar;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A spec as written in a config file: a preset string or a full JSON object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpecDescriptor {
    Named(String),
    Explicit(Box<HoradamSpec>),
}

impl SpecDescriptor {
    pub fn resolve(&self) -> Result<HoradamSpec, CliError> {
        match self {
            Self::Named(text) => parse_spec(text),
            Self::Explicit(spec) => Ok((**spec).clone()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Named(text) => text.clone(),
            Self::Explicit(spec) => spec.canonical_json(),
        }
    }
}

fn scalar(text: &str) -> Result<RingScalar, CliError> {
    let text = text.trim();
    if text == "x" {
        return Ok(RingScalar::x());
    }
    RingScalar::from_wire(text).map_err(|e| CliError::Usage(format!("bad scalar {text:?}: {e}")))
}

fn params<const N: usize>(name: &str, rest: Option<&str>) -> Result<[RingScalar; N], CliError> {
    let rest = rest.ok_or_else(|| CliError::Usage(format!("preset {name} needs {N} parameter(s), e.g. {name}:1,1")))?;
    let parsed = rest.split(',').map(scalar).collect::<Result<Vec<_>, _>>()?;
    parsed
        .try_into()
        .map_err(|v: Vec<_>| CliError::Usage(format!("preset {name} takes {N} parameter(s), got {}", v.len())))
}

/// Parses `fibonacci`, `pell`, `lucas`, `u:S,T`, `v:S,T`, `cigler-qfib:T`,
/// `cigler-qlucas:T`, or a JSON object `{"a":..,"b":..,"s":..,"t":..}`.
///
/// Scalars use the wire format; the bare token `x` denotes the indeterminate.
pub fn parse_spec(text: &str) -> Result<HoradamSpec, CliError> {
    let text = text.trim();
    if text.starts_with('{') {
        return serde_json::from_str(text).map_err(|e| CliError::Usage(format!("bad spec JSON: {e}")));
    }
    let (name, rest) = match text.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (text, None),
    };
    let kind = match name.to_ascii_lowercase().as_str() {
        "fibonacci" | "fib" => Preset::Fibonacci,
        "pell" => Preset::Pell,
        "lucas" | "lucas-numbers" => Preset::LucasNumbers,
        "u" => {
            let [s, t] = params::<2>("u", rest)?;
            Preset::U { s, t }
        }
        "v" => {
            let [s, t] = params::<2>("v", rest)?;
            Preset::V { s, t }
        }
        "cigler-qfib" => {
            let [t] = params::<1>("cigler-qfib", rest)?;
            Preset::CiglerQFib { t }
        }
        "cigler-qlucas" => {
            let [t] = params::<1>("cigler-qlucas", rest)?;
            Preset::CiglerQLucas { t }
        }
        other => return Err(CliError::Usage(format!("unknown spec {other:?}"))),
    };
    Ok(preset(kind))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_and_json() {
        assert_eq!(parse_spec("fibonacci").unwrap(), HoradamSpec::from_ints(0, 1, 1, 1));
        assert_eq!(parse_spec("u:3,-2").unwrap(), HoradamSpec::from_ints(0, 1, 3, -2));
        assert_eq!(parse_spec("v:1/2,1").unwrap().b, RingScalar::frac(1, 2));
        assert_eq!(parse_spec("cigler-qlucas:1").unwrap().s, RingScalar::x());
        let json = r#"{"a":"2","b":"1","s":"1","t":"1"}"#;
        assert_eq!(parse_spec(json).unwrap(), HoradamSpec::from_ints(2, 1, 1, 1));
        assert!(parse_spec("u:1").is_err());
        assert!(parse_spec("nope").is_err());
    }
}

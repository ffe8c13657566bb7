//! Instance files: `key = value` lines with `#` comments, keys `n a b c d`.
//! Missing coefficients default to zero.

use crate::CliError;
use hepta::HeptaParams;
use toml::{Table, Value};

const KEYS: [&str; 5] = ["n", "a", "b", "c", "d"];

pub fn parse_instance(text: &str) -> Result<HeptaParams, CliError> {
    let table: Table = text
        .parse()
        .map_err(|e: toml::de::Error| CliError::Usage(format!("instance: {}", e.message())))?;
    if let Some(key) = table.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(CliError::Usage(format!("instance: unknown key `{key}`")));
    }
    let n = match table.get("n") {
        Some(Value::Integer(n)) if *n >= 1 => *n as usize,
        Some(_) => {
            return Err(CliError::Usage(
                "instance: `n` must be a positive integer".into(),
            ))
        }
        None => return Err(CliError::Usage("instance: missing `n`".into())),
    };
    let coeff = |key: &str| match table.get(key) {
        None => Ok(0.0),
        Some(Value::Float(x)) => Ok(*x),
        Some(Value::Integer(x)) => Ok(*x as f64),
        Some(_) => Err(CliError::Usage(format!(
            "instance: `{key}` must be a number"
        ))),
    };
    let params = HeptaParams::new(n, coeff("a")?, coeff("b")?, coeff("c")?, coeff("d")?)?;
    Ok(params)
}

pub fn format_instance(params: &HeptaParams) -> String {
    format!(
        "n = {}\na = {:.16e}\nb = {:.16e}\nc = {:.16e}\nd = {:.16e}\n",
        params.n(),
        params.a(),
        params.b(),
        params.c(),
        params.d()
    )
}

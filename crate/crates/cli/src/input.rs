//! Germ sources and variable names.

use std::io::Read;
use std::path::Path;

pub use newton_zeta::germ::{infer_vars, DEFAULT_SIGMA};
use newton_zeta::germ::{parse_germ, parse_polynomial, GermJson, GermSeries, Polynomial};

use crate::CliError;

/// Returns the inline expression, the file contents, or stdin, in that order.
pub fn read_source(inline: Option<&str>, file: Option<&Path>, stdin: &mut dyn Read) -> Result<String, CliError> {
    let text = match (inline, file) {
        (Some(text), _) => text.to_string(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let text = text.trim().to_string();
    if text.is_empty() {
        return Err(CliError::Input("no germ given (use --germ, --germ-file or stdin)".into()));
    }
    Ok(text)
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Parses an expression or a JSON germ. Explicit `vars` rename JSON
/// variables positionally.
pub fn load_germ(text: &str, vars: Option<&[String]>) -> Result<GermSeries, CliError> {
    if looks_like_json(text) {
        let germ = GermJson::parse_germ(text)?;
        return match vars {
            None => Ok(germ),
            Some(v) => Ok(GermSeries::new(germ.polynomial().with_vars(v.to_vec())?)?),
        };
    }
    let vars = vars.map_or_else(|| infer_vars([text]), <[String]>::to_vec);
    Ok(parse_germ(text, &vars)?)
}

/// Parses a polynomial that may have a constant term, in the given variables.
pub fn load_polynomial(text: &str, vars: &[String]) -> Result<Polynomial, CliError> {
    if looks_like_json(text) {
        let json: GermJson = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
        return Ok(json.to_polynomial()?.with_vars(vars.to_vec())?);
    }
    Ok(parse_polynomial(text, vars)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_expression_sources() {
        let g = load_germ("z1^2 - s", None).unwrap();
        let h = load_germ(r#"{"vars":["s","z1"],"terms":[{"exp":[0,2],"coef":1},{"exp":[1,0],"coef":"-1"}]}"#, None)
            .unwrap();
        assert_eq!(g, h);
        assert!(matches!(load_germ("z1 + 1", None), Err(CliError::Input(_))));
    }
}

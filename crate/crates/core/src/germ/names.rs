//! Variable names inferred from expression text.

use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Name of the deformation variable when none is given explicitly.
pub const DEFAULT_SIGMA: &str = "s";

fn identifiers(text: &str) -> impl Iterator<Item = String> + '_ {
    let mut chars = text.char_indices().peekable();
    std::iter::from_fn(move || {
        while let Some((start, c)) = chars.next() {
            if c.is_alphabetic() || c == '_' {
                let mut end = start + c.len_utf8();
                while let Some(&(i, d)) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' {
                        end = i + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                return Some(text[start..end].to_string());
            }
            if c.is_ascii_digit() {
                // Skip the rest of a number so `2x` is not read as a name.
                while chars.peek().is_some_and(|&(_, d)| d.is_ascii_digit()) {
                    chars.next();
                }
            }
        }
        None
    })
}

/// `z2 < z10`: compares the alphabetic stem, then the trailing number.
fn natural(a: &str, b: &str) -> Ordering {
    let split = |s: &str| {
        let stem = s.trim_end_matches(|c: char| c.is_ascii_digit());
        let num: Option<u128> = s[stem.len()..].parse().ok();
        (stem.to_string(), num)
    };
    split(a).cmp(&split(b)).then_with(|| a.cmp(b))
}

/// `s` followed by every other identifier in natural order; `z1` when there
/// is no other identifier.
pub fn infer_vars<'a>(texts: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let names: BTreeSet<String> = texts.into_iter().flat_map(identifiers).collect();
    let mut rest: Vec<String> = names.into_iter().filter(|n| n != DEFAULT_SIGMA).collect();
    rest.sort_by(|a, b| natural(a, b));
    if rest.is_empty() {
        rest.push("z1".into());
    }
    std::iter::once(DEFAULT_SIGMA.to_string()).chain(rest).collect()
}

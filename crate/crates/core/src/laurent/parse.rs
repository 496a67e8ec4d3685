use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {offset}: {message}")]
pub struct ParsePolyError {
    pub offset: usize,
    pub message: String,
}

/// Accepts the rendered form (`1 − t + t^2`, `t^-1 + t`) as well as ASCII
/// minus signs and free spacing (`2-3t+t^2`).
impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = s.replace('−', "-");
        let chars: Vec<(usize, char)> = normalized.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let err = |i: usize, m: &str| ParsePolyError {
            offset: chars.get(i).map_or(normalized.len(), |c| c.0),
            message: m.to_owned(),
        };
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        // Spaces may separate terms from signs, not split a term.
        for w in chars.windows(2) {
            let ((a, x), (b, y)) = (w[0], w[1]);
            let gap = normalized[a + x.len_utf8()..b].chars().any(char::is_whitespace);
            if gap && !matches!(x, '+' | '-') && !matches!(y, '+' | '-') {
                return Err(ParsePolyError { offset: b, message: "unexpected space inside a term".to_owned() });
            }
        }
        let mut pos = 0;
        let mut terms = Vec::new();
        while pos < chars.len() {
            let mut negative = false;
            if let Some(&(_, c)) = chars.get(pos) {
                if c == '+' || c == '-' {
                    negative = c == '-';
                    pos += 1;
                } else if !terms.is_empty() {
                    return Err(err(pos, "expected '+' or '-'"));
                }
            }
            let digits_start = pos;
            while chars.get(pos).is_some_and(|c| c.1.is_ascii_digit()) {
                pos += 1;
            }
            let coeff: Option<BigInt> = if pos > digits_start {
                let text: String = chars[digits_start..pos].iter().map(|c| c.1).collect();
                Some(text.parse().map_err(|_| err(digits_start, "bad coefficient"))?)
            } else {
                None
            };
            let mut exponent = 0i64;
            if chars.get(pos).is_some_and(|c| c.1 == 't') {
                pos += 1;
                exponent = 1;
                if chars.get(pos).is_some_and(|c| c.1 == '^') {
                    pos += 1;
                    let exp_start = pos;
                    if chars.get(pos).is_some_and(|c| c.1 == '-') {
                        pos += 1;
                    }
                    while chars.get(pos).is_some_and(|c| c.1.is_ascii_digit()) {
                        pos += 1;
                    }
                    let text: String = chars[exp_start..pos].iter().map(|c| c.1).collect();
                    exponent = text.parse().map_err(|_| err(exp_start, "bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(err(pos, "expected a coefficient or 't'"));
            }
            let c = coeff.unwrap_or_else(|| BigInt::from(1));
            terms.push((exponent, if negative { -c } else { c }));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        for text in ["1 − t + t^2", "t^-1 + t", "−2t^-2", "0", "−1 + 2t − t^2", "7t^3"] {
            let p: LaurentPoly = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
    }

    #[test]
    fn parses_ascii() {
        let p: LaurentPoly = "2-3t+t^2 - 2".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_coeffs(0, &[0, -3, 1]));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1 + x".parse::<LaurentPoly>().is_err());
        assert!("t^".parse::<LaurentPoly>().is_err());
        assert!("1 2".parse::<LaurentPoly>().is_err());
    }
}

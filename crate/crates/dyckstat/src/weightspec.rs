//! JSON weight files for `dyckstat cfrac`.
//!
//! ```json
//! {
//!   "depth": 4,
//!   "lambdas": ["x", "x", "x", "x"],
//!   "mus": ["x", "x*z", "x", "x"],
//!   "tail": "1"
//! }
//! ```
//!
//! Each weight is a sum of terms `c * x^a * z^b`, where any factor may also be
//! the named constant `xC2` (the series `x^2 C(x)^2`). `default_lambda` and
//! `default_mu` pad short lists up to `depth`; `tail` defaults to `1`.

use anyhow::{anyhow, bail, Context, Result};
use dyckstat_core::{catalan_series, BivarSeries, Series, WeightSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightFile {
    pub depth: usize,
    #[serde(default)]
    pub lambdas: Vec<String>,
    #[serde(default)]
    pub mus: Vec<String>,
    pub default_lambda: Option<String>,
    pub default_mu: Option<String>,
    pub tail: Option<String>,
}

impl WeightFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed weight spec")
    }

    pub fn to_spec(&self, order: usize, z_order: usize) -> Result<WeightSpec> {
        let build = |list: &[String], default: &Option<String>, what: &str| -> Result<Vec<BivarSeries>> {
            let mut out = list
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    parse_weight(e, order, z_order)
                        .with_context(|| format!("{what} weight {} ({e:?})", i + 1))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(d) = default {
                let w = parse_weight(d, order, z_order).with_context(|| format!("default {what} ({d:?})"))?;
                out.resize(out.len().max(self.depth), w);
            }
            Ok(out)
        };
        let tail = match &self.tail {
            Some(t) => parse_weight(t, order, z_order).with_context(|| format!("tail ({t:?})"))?,
            None => BivarSeries::one(z_order, order),
        };
        let spec = WeightSpec {
            lambdas: build(&self.lambdas, &self.default_lambda, "lambda")?,
            mus: build(&self.mus, &self.default_mu, "mu")?,
            depth: self.depth,
            tail,
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses a weight expression into a bivariate series.
pub fn parse_weight(text: &str, order: usize, z_order: usize) -> Result<BivarSeries> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        bail!("empty expression");
    }
    let mut total = BivarSeries::zero(z_order, order);
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let negative = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                false
            }
            b'-' => {
                rest = &rest[1..];
                true
            }
            _ if first => false,
            _ => bail!("expected '+' or '-' before {rest:?}"),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = parse_term(&rest[..end], order, z_order)?;
        total = if negative { &total - &term } else { &total + &term };
        rest = &rest[end..];
    }
    Ok(total)
}

fn parse_term(term: &str, order: usize, z_order: usize) -> Result<BivarSeries> {
    if term.is_empty() {
        bail!("missing term");
    }
    let digits_end = term
        .find(|c: char| !(c.is_ascii_digit() || c == '/'))
        .unwrap_or(term.len());
    let coeff = if digits_end == 0 {
        BigRational::one()
    } else {
        parse_rational(&term[..digits_end])?
    };
    let mut x_pow = 0usize;
    let mut z_pow = 0usize;
    let mut xc2_pow = 0u32;
    let mut rest = term[digits_end..].trim_start_matches('*');
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix("xC2") {
            xc2_pow += 1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('x') {
            let (p, r) = exponent(r)?;
            x_pow += p;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('z') {
            let (p, r) = exponent(r)?;
            z_pow += p;
            rest = r;
        } else {
            bail!("unexpected {rest:?} in term {term:?}");
        }
        rest = rest.strip_prefix('*').unwrap_or(rest);
    }
    let mut x_part = Series::monomial(coeff, x_pow, order);
    if xc2_pow > 0 {
        let c = catalan_series(order);
        x_part = &x_part * &(&c * &c).shift(2).pow(xc2_pow);
    }
    Ok(BivarSeries::z_monomial(&x_part, z_pow, z_order))
}

fn exponent(s: &str) -> Result<(usize, &str)> {
    let Some(r) = s.strip_prefix('^') else {
        return Ok((1, s));
    };
    let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
    let p = r[..end].parse().map_err(|_| anyhow!("bad exponent in {s:?}"))?;
    Ok((p, &r[end..]))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| anyhow!("bad coefficient {s:?}"))?;
    let den: BigInt = den.parse().map_err(|_| anyhow!("bad coefficient {s:?}"))?;
    if den == BigInt::from(0) {
        bail!("zero denominator in {s:?}");
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use dyckstat_core::{peak_bivar_cfrac_marked, rv_cfrac, PeakMark};

    fn series(values: &[i64], order: usize) -> Series {
        Series::from_integers(values.iter().copied(), order)
    }

    #[test]
    fn monomials() {
        let w = parse_weight("3*x^2*z", 4, 2).unwrap();
        assert_eq!(w.slice(1), series(&[0, 0, 3], 4));
        assert!(w.slice(0).is_zero());
        let w = parse_weight("x - 1/2", 2, 0).unwrap();
        assert_eq!(
            w.slice(0).coeffs()[0],
            BigRational::new((-1).into(), 2.into())
        );
        assert_eq!(parse_weight("2xz^2", 3, 2).unwrap().slice(2), series(&[0, 2], 3));
    }

    #[test]
    fn named_constant() {
        let w = parse_weight("xC2", 6, 0).unwrap();
        assert_eq!(w.slice(0), series(&[0, 0, 1, 2, 5, 14, 42], 6));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_weight("", 3, 0).is_err());
        assert!(parse_weight("x^", 3, 0).is_err());
        assert!(parse_weight("y", 3, 0).is_err());
        assert!(parse_weight("x++z", 3, 0).is_err());
        assert!(parse_weight("1/0", 3, 0).is_err());
    }

    #[test]
    fn file_with_defaults_matches_literal_peak_fraction() {
        // Only sums of monomials are accepted, so a quotient tail is refused.
        let file = WeightFile::from_json(
            r#"{"depth": 2, "mus": ["x", "z"], "default_lambda": "x", "tail": "1/(1-x)"}"#,
        );
        assert!(file.unwrap().to_spec(5, 2).is_err());
        // Peaks at height 2 marked by a bare z on the down-step.
        let file = WeightFile::from_json(
            r#"{"depth": 21, "lambdas": [], "mus": ["x", "z"], "default_lambda": "x", "default_mu": "x"}"#,
        )
        .unwrap();
        let spec = file.to_spec(20, 3).unwrap();
        let got = rv_cfrac(&spec, 20, 3).unwrap();
        let expected = peak_bivar_cfrac_marked(2, 20, 3, PeakMark::Literal).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn short_lists_rejected() {
        let file = WeightFile::from_json(r#"{"depth": 3, "lambdas": ["x"], "mus": ["x","x","x"]}"#).unwrap();
        assert!(file.to_spec(4, 0).is_err());
        assert!(WeightFile::from_json(r#"{"depth": 1, "bogus": 1}"#).is_err());
    }
}

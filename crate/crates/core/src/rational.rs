//! Exact rational arithmetic for charges, density values, and thresholds.
//!
//! `i128` components: the density binary search halves intervals ~40 times,
//! so intermediate denominators (and the flow capacities scaled by them)
//! overflow `i64` cross-multiplication on larger inputs.

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i128>;

/// Shorthand constructor; panics on a zero denominator.
pub fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

/// Renders "p/q", or just "p" when the reduced denominator is 1.
pub fn format_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts "p" or "p/q" with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |m: &str| Error::parse(1, format!("bad rational '{s}': {m}"));
    match s.split_once('/') {
        None => {
            let n: i128 = s.trim().parse().map_err(|_| bad("not an integer"))?;
            Ok(Rational::from_integer(n))
        }
        Some((p, q)) => {
            let p: i128 = p.trim().parse().map_err(|_| bad("bad numerator"))?;
            let q: i128 = q.trim().parse().map_err(|_| bad("bad denominator"))?;
            if q == 0 {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_formats() {
        assert_eq!(format_rational(ratio(4, 2)), "2");
        assert_eq!(format_rational(ratio(20, 7)), "20/7");
        assert_eq!(format_rational(ratio(-12, 5)), "-12/5");
        assert_eq!(format_rational(ratio(12, -5)), "-12/5");
    }

    #[test]
    fn parses() {
        assert_eq!(parse_rational("12/5").unwrap(), ratio(12, 5));
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exact_comparisons() {
        assert!(ratio(20, 7) < ratio(3, 1));
        assert!(ratio(12, 5) > ratio(19, 8));
        assert_eq!(ratio(4 * 5, 5 + 2) + ratio(0, 1), ratio(20, 7));
    }
}

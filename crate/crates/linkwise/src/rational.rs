//! Exact rational byte counts.
//!
//! Per-packet overhead is tabulated as an exact fraction for one protocol
//! (Bluetooth's 158/8 bytes), so overhead arithmetic is kept rational and
//! only converted to `f64` at the final metric evaluation.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = Ratio<i64>;

/// Parse `a/b`, an integer, or a plain decimal (`19.75`) into an exact ratio.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().ok()?;
        let den: i64 = den.trim().parse().ok()?;
        if den == 0 {
            return None;
        }
        return Some(Ratio::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 12 || frac.chars().any(|c| !c.is_ascii_digit()) {
            return None;
        }
        let negative = int.trim_start().starts_with('-');
        let int: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().ok()?
        };
        let scale = 10_i64.checked_pow(frac.len() as u32)?;
        let frac_part: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
        let signed_frac = if negative { -frac_part } else { frac_part };
        return Some(Ratio::new(int.checked_mul(scale)? + signed_frac, scale));
    }
    let int: i64 = s.parse().ok()?;
    Some(Ratio::from_integer(int))
}

/// Render a ratio back to wire form: integers plain, everything else `a/b`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("i64 ratio always fits in f64")
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative() && !r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_integer_and_decimal() {
        assert_eq!(parse_rational("158/8"), Some(Ratio::new(158, 8)));
        assert_eq!(parse_rational("31"), Some(Ratio::from_integer(31)));
        assert_eq!(parse_rational("19.75"), Some(Ratio::new(79, 4)));
        assert_eq!(parse_rational("158/8"), parse_rational("19.75"));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn format_round_trips() {
        for s in ["158/8", "31", "19.75", "0.5"] {
            let r = parse_rational(s).unwrap();
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
    }
}

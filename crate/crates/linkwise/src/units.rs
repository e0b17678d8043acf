//! Unit-suffixed quantity parsing for the CLI.
//!
//! Physical inputs are accepted in SI base units with optional unit
//! suffixes (`--distance 100m`, `--rate 250kbps`). A bare number means the
//! dimension's base unit.

use crate::error::{Error, Result};

/// Physical dimension of a CLI quantity, fixing its base unit and suffixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    /// meters
    Distance,
    /// bits per second
    DataRate,
    /// watts
    Power,
    /// seconds
    Time,
    /// bytes (k/M suffixes are decimal: 1 kB = 1000 bytes)
    DataSize,
    /// hertz
    Frequency,
    /// joules
    Energy,
    /// volts
    Voltage,
    /// amperes
    Current,
    /// farads
    Capacitance,
    /// unitless
    Scalar,
}

impl Dimension {
    pub fn base_unit(&self) -> &'static str {
        match self {
            Dimension::Distance => "m",
            Dimension::DataRate => "bps",
            Dimension::Power => "W",
            Dimension::Time => "s",
            Dimension::DataSize => "bytes",
            Dimension::Frequency => "Hz",
            Dimension::Energy => "J",
            Dimension::Voltage => "V",
            Dimension::Current => "A",
            Dimension::Capacitance => "F",
            Dimension::Scalar => "",
        }
    }

    /// `(suffix, factor)` pairs, longest suffixes first.
    fn suffixes(&self) -> &'static [(&'static str, f64)] {
        match self {
            Dimension::Distance => &[("km", 1e3), ("cm", 1e-2), ("mm", 1e-3), ("m", 1.0)],
            Dimension::DataRate => &[
                ("gbps", 1e9),
                ("mbps", 1e6),
                ("kbps", 1e3),
                ("bps", 1.0),
            ],
            Dimension::Power => &[
                ("pw", 1e-12),
                ("nw", 1e-9),
                ("uw", 1e-6),
                ("mw", 1e-3),
                ("kw", 1e3),
                ("w", 1.0),
            ],
            Dimension::Time => &[("ns", 1e-9), ("us", 1e-6), ("ms", 1e-3), ("s", 1.0)],
            Dimension::DataSize => &[
                ("kbytes", 1e3),
                ("mbytes", 1e6),
                ("bytes", 1.0),
                ("kb", 1e3),
                ("mb", 1e6),
                ("b", 1.0),
            ],
            Dimension::Frequency => &[
                ("ghz", 1e9),
                ("mhz", 1e6),
                ("khz", 1e3),
                ("hz", 1.0),
            ],
            Dimension::Energy => &[
                ("pj", 1e-12),
                ("nj", 1e-9),
                ("uj", 1e-6),
                ("mj", 1e-3),
                ("j", 1.0),
            ],
            Dimension::Voltage => &[("mv", 1e-3), ("v", 1.0)],
            Dimension::Current => &[("ua", 1e-6), ("ma", 1e-3), ("a", 1.0)],
            Dimension::Capacitance => &[
                ("pf", 1e-12),
                ("nf", 1e-9),
                ("uf", 1e-6),
                ("f", 1.0),
            ],
            Dimension::Scalar => &[],
        }
    }
}

/// Parse `"250kbps"`, `"100m"`, `"0.01139"`... into the dimension's base unit.
pub fn parse_quantity(input: &str, dimension: Dimension) -> Result<f64> {
    let trimmed = input.trim();
    let lower = trimmed.to_lowercase();
    let bad = |message: String| Error::Domain(format!("cannot parse `{trimmed}`: {message}"));

    let (number_part, factor) = match dimension
        .suffixes()
        .iter()
        .find(|(suffix, _)| lower.ends_with(suffix))
    {
        Some((suffix, factor)) => (&trimmed[..trimmed.len() - suffix.len()], *factor),
        None => (trimmed, 1.0),
    };
    let number: f64 = number_part.trim().parse().map_err(|_| {
        bad(format!(
            "expected a number with an optional unit suffix (base unit {})",
            dimension.base_unit()
        ))
    })?;
    if !number.is_finite() {
        return Err(bad("value must be finite".to_string()));
    }
    Ok(number * factor)
}

/// Conversion table shown in the CLI help text.
pub const UNIT_HELP: &str = "\
Unit suffixes (case-insensitive; bare numbers are SI base units):
  distance   m (base), cm, mm, km                e.g. --distance 100m
  data rate  bps (base), kbps, mbps, gbps        e.g. --rate 250kbps
  power      W (base), pW, nW, uW, mW, kW        e.g. --tx-power 6.3mW
  time       s (base), ns, us, ms                e.g. --frame 11.39ms
  data size  bytes (base), b, kb/kbytes, mb      e.g. --size 10kb (= 10000 bytes)
  frequency  Hz (base), kHz, MHz, GHz            e.g. --frequency 2.4GHz
  energy     J (base), pJ, nJ, uJ, mJ            e.g. --et 100nJ
  voltage    V (base), mV; current A (base), uA, mA; capacitance F, uF, nF, pF";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suffixed_quantities() {
        assert_eq!(parse_quantity("100m", Dimension::Distance).unwrap(), 100.0);
        assert_eq!(parse_quantity("1.5km", Dimension::Distance).unwrap(), 1500.0);
        assert_eq!(parse_quantity("250kbps", Dimension::DataRate).unwrap(), 250e3);
        assert_eq!(parse_quantity("6.3mW", Dimension::Power).unwrap(), 6.3e-3);
        assert_eq!(parse_quantity("11.39ms", Dimension::Time).unwrap(), 0.011_39);
        assert_eq!(parse_quantity("10kb", Dimension::DataSize).unwrap(), 10_000.0);
        assert_eq!(parse_quantity("2.4GHz", Dimension::Frequency).unwrap(), 2.4e9);
        // suffix scaling multiplies, so compare against the same route
        assert_eq!(parse_quantity("100nJ", Dimension::Energy).unwrap(), 100.0 * 1e-9);
    }

    #[test]
    fn bare_numbers_are_base_units() {
        assert_eq!(parse_quantity("0.01139", Dimension::Time).unwrap(), 0.011_39);
        assert_eq!(parse_quantity("1e-9", Dimension::Power).unwrap(), 1e-9);
        assert_eq!(parse_quantity("42", Dimension::Scalar).unwrap(), 42.0);
    }

    #[test]
    fn scientific_notation_is_not_eaten_by_suffix_detection() {
        // `1e-9` ends with no valid power suffix pattern; `2e3m` is 2000 m
        assert_eq!(parse_quantity("2e3m", Dimension::Distance).unwrap(), 2000.0);
        assert_eq!(parse_quantity("1e3", Dimension::Distance).unwrap(), 1000.0);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_quantity("fast", Dimension::DataRate).is_err());
        assert!(parse_quantity("", Dimension::Distance).is_err());
        assert!(parse_quantity("10zz", Dimension::Distance).is_err());
    }
}

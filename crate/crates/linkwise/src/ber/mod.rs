//! AWGN bit-error-rate engine.
//!
//! Nine digital modulation schemes with their standard closed-form AWGN bit
//! error rates, a seeded Monte Carlo simulator as the independent sampling
//! route (`ber_monte_carlo`), the inverse problem (E_b/N_0 needed for a
//! target BER) and the packet error probability.
//!
//! All closed forms are first-order nearest-neighbour expressions in
//! Q(x) = erfc(x / sqrt(2)) / 2 with gamma = 10^(dB/10):
//!
//! | scheme          | bit error rate                              |
//! |-----------------|---------------------------------------------|
//! | BPSK/QPSK/OQPSK | Q(sqrt(2 gamma))                            |
//! | GMSK            | Q(sqrt(2 alpha gamma)), alpha default 0.68  |
//! | FSK (coherent)  | Q(sqrt(gamma))                              |
//! | GFSK (noncoh.)  | exp(-gamma/2) / 2                           |
//! | 8PSK            | (2/3) Q(sqrt(6 gamma) sin(pi/8))            |
//! | 8DPSK           | (2/3) 2 Q(sqrt(12 gamma) sin(pi/16)), <= 0.5|
//! | 4PAM            | (3/4) Q(sqrt(0.8 gamma))                    |
//! | 16QAM           | (3/4) Q(sqrt(0.8 gamma))                    |
//! | OFDM            | its subcarrier scheme (default 16QAM)       |

mod sim;

pub use sim::ber_monte_carlo;

use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::{PI, SQRT_2};

/// Gaussian tail probability Q(x).
pub(crate) fn q_function(x: f64) -> f64 {
    0.5 * libm::erfc(x / SQRT_2)
}

/// Modulation scheme identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Scheme {
    /// BPSK, QPSK and OQPSK share one bit error rate.
    BpskQpskOqpsk,
    Gmsk,
    Fsk,
    Gfsk,
    Psk8,
    Dpsk8,
    Pam4,
    Qam16,
    Ofdm,
}

impl Scheme {
    /// All nine schemes in canonical order.
    pub const ALL: [Scheme; 9] = [
        Scheme::BpskQpskOqpsk,
        Scheme::Gmsk,
        Scheme::Fsk,
        Scheme::Gfsk,
        Scheme::Psk8,
        Scheme::Dpsk8,
        Scheme::Pam4,
        Scheme::Qam16,
        Scheme::Ofdm,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Scheme::BpskQpskOqpsk => "BPSK-QPSK-OQPSK",
            Scheme::Gmsk => "GMSK",
            Scheme::Fsk => "FSK",
            Scheme::Gfsk => "GFSK",
            Scheme::Psk8 => "8PSK",
            Scheme::Dpsk8 => "8DPSK",
            Scheme::Pam4 => "4PAM",
            Scheme::Qam16 => "16QAM",
            Scheme::Ofdm => "OFDM",
        }
    }

    /// Stable tag mixed into Monte Carlo seeds.
    pub(crate) fn tag(&self) -> u64 {
        match self {
            Scheme::BpskQpskOqpsk => 1,
            Scheme::Gmsk => 2,
            Scheme::Fsk => 3,
            Scheme::Gfsk => 4,
            Scheme::Psk8 => 5,
            Scheme::Dpsk8 => 6,
            Scheme::Pam4 => 7,
            Scheme::Qam16 => 8,
            Scheme::Ofdm => 9,
        }
    }
}

/// Default GMSK degradation factor (BT = 0.25 convention).
pub const DEFAULT_GMSK_ALPHA: f64 = 0.68;

/// A scheme plus its scheme-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Modulation {
    pub scheme: Scheme,
    /// GMSK degradation factor alpha in (0, 1].
    pub gmsk_alpha: f64,
    /// Subcarrier scheme evaluated for OFDM (any scheme but OFDM itself).
    pub ofdm_subcarrier: Scheme,
}

impl Modulation {
    pub fn new(scheme: Scheme) -> Self {
        Modulation {
            scheme,
            gmsk_alpha: DEFAULT_GMSK_ALPHA,
            ofdm_subcarrier: Scheme::Qam16,
        }
    }

    pub fn gmsk_with_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Validation {
                subject: "Modulation".to_string(),
                rule: "GMSK alpha must lie in (0, 1]".to_string(),
            });
        }
        Ok(Modulation {
            gmsk_alpha: alpha,
            ..Modulation::new(Scheme::Gmsk)
        })
    }

    pub fn ofdm_over(subcarrier: Scheme) -> Result<Self> {
        if subcarrier == Scheme::Ofdm {
            return Err(Error::Validation {
                subject: "Modulation".to_string(),
                rule: "OFDM subcarrier must be one of the other eight schemes".to_string(),
            });
        }
        Ok(Modulation {
            ofdm_subcarrier: subcarrier,
            ..Modulation::new(Scheme::Ofdm)
        })
    }

    /// The nine default modulations in canonical order.
    pub fn all() -> [Modulation; 9] {
        Scheme::ALL.map(Modulation::new)
    }

    pub fn name(&self) -> &'static str {
        self.scheme.name()
    }

    /// Case-insensitive parse; accepts the common aliases
    /// (bpsk/qpsk/oqpsk, 8psk/psk8, 8dpsk/dpsk8, 4pam/pam4, 16qam/qam16).
    pub fn parse(s: &str) -> Result<Self> {
        let scheme = match s.to_lowercase().replace(['-', '_'], "").as_str() {
            "bpsk" | "qpsk" | "oqpsk" | "bpskqpskoqpsk" => Scheme::BpskQpskOqpsk,
            "gmsk" => Scheme::Gmsk,
            "fsk" => Scheme::Fsk,
            "gfsk" => Scheme::Gfsk,
            "8psk" | "psk8" => Scheme::Psk8,
            "8dpsk" | "dpsk8" => Scheme::Dpsk8,
            "4pam" | "pam4" => Scheme::Pam4,
            "16qam" | "qam16" => Scheme::Qam16,
            "ofdm" => Scheme::Ofdm,
            _ => {
                return Err(Error::Domain(format!(
                    "unknown modulation `{s}`; expected one of bpsk/qpsk/oqpsk, gmsk, fsk, \
                     gfsk, 8psk, 8dpsk, 4pam, 16qam, ofdm"
                )))
            }
        };
        Ok(Modulation::new(scheme))
    }

    /// Scheme the detector actually runs: OFDM delegates to its subcarrier.
    pub(crate) fn effective_scheme(&self) -> Scheme {
        match self.scheme {
            Scheme::Ofdm => self.ofdm_subcarrier,
            s => s,
        }
    }
}

/// Closed-form AWGN bit error rate at the given E_b/N_0 in dB.
pub fn ber_analytic(modulation: &Modulation, eb_n0_db: f64) -> f64 {
    let gamma = 10f64.powf(eb_n0_db / 10.0);
    match modulation.effective_scheme() {
        Scheme::BpskQpskOqpsk => q_function((2.0 * gamma).sqrt()),
        Scheme::Gmsk => q_function((2.0 * modulation.gmsk_alpha * gamma).sqrt()),
        Scheme::Fsk => q_function(gamma.sqrt()),
        Scheme::Gfsk => 0.5 * (-gamma / 2.0).exp(),
        Scheme::Psk8 => 2.0 / 3.0 * q_function((6.0 * gamma).sqrt() * (PI / 8.0).sin()),
        Scheme::Dpsk8 => {
            let two_sided = 2.0 * q_function((12.0 * gamma).sqrt() * (PI / 16.0).sin());
            (2.0 / 3.0 * two_sided).min(0.5)
        }
        Scheme::Pam4 | Scheme::Qam16 => 0.75 * q_function((0.8 * gamma).sqrt()),
        Scheme::Ofdm => unreachable!("effective_scheme resolves OFDM"),
    }
}

/// E_b/N_0 in dB at which the scheme's analytic BER equals `target_ber`,
/// found by bisection to a relative BER error below 1e-6.
pub fn required_ebn0(modulation: &Modulation, target_ber: f64) -> Result<f64> {
    if !(target_ber > 0.0 && target_ber < 0.5) {
        return Err(Error::Domain(
            "target BER must lie in (0, 0.5)".to_string(),
        ));
    }
    let mut lo = -20.0;
    let mut hi = 60.0;
    // BER is strictly decreasing in dB over the bracket
    debug_assert!(ber_analytic(modulation, lo) > target_ber);
    debug_assert!(ber_analytic(modulation, hi) < target_ber);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let ber = ber_analytic(modulation, mid);
        if (ber - target_ber).abs() / target_ber < 1e-9 {
            return Ok(mid);
        }
        if ber > target_ber {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Packet error probability p_e = 1 - (1 - b_e)^L, evaluated through
/// log1p/expm1 so small bit error probabilities do not cancel.
pub fn packet_error_probability(bit_error_prob: f64, packet_bits: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&bit_error_prob) {
        return Err(Error::Domain(
            "bit_error_prob must lie in [0, 1]".to_string(),
        ));
    }
    if packet_bits == 0 {
        return Err(Error::Domain("packet_length must be >= 1 bit".to_string()));
    }
    if bit_error_prob == 1.0 {
        return Ok(1.0);
    }
    Ok(-(packet_bits as f64 * (-bit_error_prob).ln_1p()).exp_m1())
}

/// Where a BER estimate came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum BerSource {
    Analytic,
    MonteCarlo {
        trial_bits: u64,
        error_bits: u64,
        seed: u64,
    },
}

/// One BER observation: the operating point and the estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BerSample {
    pub eb_n0_db: f64,
    pub ber: f64,
    pub source: BerSource,
}

impl BerSample {
    pub fn analytic(modulation: &Modulation, eb_n0_db: f64) -> Self {
        BerSample {
            eb_n0_db,
            ber: ber_analytic(modulation, eb_n0_db),
            source: BerSource::Analytic,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bpsk_at_0_db_is_q_of_sqrt_2() {
        let ber = ber_analytic(&Modulation::new(Scheme::BpskQpskOqpsk), 0.0);
        assert!((ber - 0.078_649_603_525_142_58).abs() < 1e-15, "got {ber}");
    }

    #[test]
    fn all_schemes_vanish_at_high_snr() {
        for m in Modulation::all() {
            assert!(ber_analytic(&m, 120.0) == 0.0, "{}", m.name());
        }
    }

    #[test]
    fn higher_order_modulation_errs_more_than_qpsk() {
        let qpsk = Modulation::new(Scheme::BpskQpskOqpsk);
        let qam = Modulation::new(Scheme::Qam16);
        for db in [-5.0, 0.0, 5.0, 10.0, 15.0] {
            assert!(ber_analytic(&qam, db) > ber_analytic(&qpsk, db), "at {db} dB");
        }
    }

    #[test]
    fn waterfall_strictly_decreasing_and_continuous() {
        // 701 points across [-5, 30] dB: strict decrease wherever the value
        // is representable, nonincreasing into the f64 underflow floor (the
        // BPSK-family tail passes below the smallest subnormal near 29 dB),
        // and no jumps
        for m in Modulation::all() {
            let mut prev = ber_analytic(&m, -5.0);
            let mut db = -5.0 + 0.05;
            while db <= 30.0 + 1e-12 {
                let ber = ber_analytic(&m, db);
                if prev > 1e-300 {
                    assert!(ber < prev, "{} not decreasing at {db} dB", m.name());
                } else {
                    assert!(ber <= prev, "{} increases at {db} dB", m.name());
                }
                assert!(
                    prev - ber < 0.02,
                    "{} jumps by {} at {db} dB",
                    m.name(),
                    prev - ber
                );
                prev = ber;
                db += 0.05;
            }
        }
    }

    #[test]
    fn required_ebn0_reference_values() {
        // bisection against the closed forms; values frozen from an
        // independent high-precision evaluation
        let cases = [
            (Scheme::Gmsk, 12.204_743),
            (Scheme::Fsk, 13.540_132),
            (Scheme::Psk8, 13.949_557),
            (Scheme::Qam16, 14.401_727),
            (Scheme::BpskQpskOqpsk, 10.529_832),
            (Scheme::Gfsk, 14.190_421),
            (Scheme::Pam4, 14.401_727),
            (Scheme::Ofdm, 14.401_727),
            (Scheme::Dpsk8, 17.048_606),
        ];
        for (scheme, expected) in cases {
            let db = required_ebn0(&Modulation::new(scheme), 1e-6).unwrap();
            assert!(
                (db - expected).abs() < 1e-3,
                "{}: expected {expected}, got {db}",
                scheme.name()
            );
        }
    }

    #[test]
    fn required_ebn0_inverts_the_curve_and_orders_targets() {
        for m in Modulation::all() {
            let db = required_ebn0(&m, 1e-4).unwrap();
            let ber = ber_analytic(&m, db);
            assert!((ber - 1e-4).abs() / 1e-4 < 1e-6, "{}", m.name());
            let strict = required_ebn0(&m, 1e-6).unwrap();
            let loose = required_ebn0(&m, 1e-3).unwrap();
            assert!(strict > loose, "{}", m.name());
        }
    }

    #[test]
    fn required_ebn0_ordering_extremes() {
        // at 1e-6 the BPSK family needs the least of all nine schemes, and
        // 8DPSK the most among the six-scheme comparison set
        let at = |s: Scheme| required_ebn0(&Modulation::new(s), 1e-6).unwrap();
        let bpsk = at(Scheme::BpskQpskOqpsk);
        for scheme in Scheme::ALL {
            if scheme != Scheme::BpskQpskOqpsk {
                assert!(at(scheme) > bpsk, "{} below BPSK", scheme.name());
            }
        }
        let dpsk8 = at(Scheme::Dpsk8);
        for scheme in [
            Scheme::BpskQpskOqpsk,
            Scheme::Gmsk,
            Scheme::Fsk,
            Scheme::Psk8,
            Scheme::Qam16,
        ] {
            assert!(at(scheme) < dpsk8, "{} above 8DPSK", scheme.name());
        }
    }

    #[test]
    fn binary_schemes_never_exceed_one_half() {
        // the binary-decision closed forms are bounded by 0.5 at any SNR
        for scheme in [Scheme::BpskQpskOqpsk, Scheme::Gmsk, Scheme::Fsk, Scheme::Gfsk] {
            let m = Modulation::new(scheme);
            let mut db = -30.0;
            while db <= 60.0 {
                let ber = ber_analytic(&m, db);
                assert!((0.0..=0.5).contains(&ber), "{} at {db} dB: {ber}", m.name());
                db += 0.5;
            }
        }
        // 8DPSK is explicitly capped at 0.5
        let dpsk = Modulation::new(Scheme::Dpsk8);
        assert_eq!(ber_analytic(&dpsk, -30.0), 0.5);
    }

    #[test]
    fn required_ebn0_rejects_out_of_range_targets() {
        let m = Modulation::new(Scheme::Gmsk);
        assert!(matches!(required_ebn0(&m, 0.0), Err(Error::Domain(_))));
        assert!(matches!(required_ebn0(&m, 0.5), Err(Error::Domain(_))));
        assert!(matches!(required_ebn0(&m, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn gmsk_alpha_is_validated_and_shifts_the_curve() {
        assert!(Modulation::gmsk_with_alpha(0.0).is_err());
        assert!(Modulation::gmsk_with_alpha(1.1).is_err());
        let soft = Modulation::gmsk_with_alpha(0.5).unwrap();
        let hard = Modulation::gmsk_with_alpha(1.0).unwrap();
        assert!(ber_analytic(&soft, 6.0) > ber_analytic(&hard, 6.0));
        // alpha = 1 recovers the BPSK curve
        let bpsk = Modulation::new(Scheme::BpskQpskOqpsk);
        assert_eq!(ber_analytic(&hard, 6.0), ber_analytic(&bpsk, 6.0));
    }

    #[test]
    fn ofdm_subcarrier_selection() {
        assert!(Modulation::ofdm_over(Scheme::Ofdm).is_err());
        let qpsk_carrier = Modulation::ofdm_over(Scheme::BpskQpskOqpsk).unwrap();
        let bpsk = Modulation::new(Scheme::BpskQpskOqpsk);
        assert_eq!(ber_analytic(&qpsk_carrier, 5.0), ber_analytic(&bpsk, 5.0));
        let default = Modulation::new(Scheme::Ofdm);
        let qam = Modulation::new(Scheme::Qam16);
        assert_eq!(ber_analytic(&default, 5.0), ber_analytic(&qam, 5.0));
    }

    #[test]
    fn packet_error_reference_points() {
        assert_eq!(packet_error_probability(0.0, 1000).unwrap(), 0.0);
        let p = packet_error_probability(1e-3, 1000).unwrap();
        assert!((p - 0.632_304_575_229_035_9).abs() < 1e-12, "got {p}");
        assert_eq!(packet_error_probability(1.0, 10).unwrap(), 1.0);
    }

    #[test]
    fn packet_error_is_stable_for_tiny_bit_error_rates() {
        // 1 - (1 - 1e-9)^1e4 = 9.99995e-6 without catastrophic cancellation
        let p = packet_error_probability(1e-9, 10_000).unwrap();
        assert!((p - 9.999_950_005_166_617e-6).abs() / p < 1e-9, "got {p}");
    }

    #[test]
    fn packet_error_rejects_out_of_domain_arguments() {
        assert!(matches!(
            packet_error_probability(-0.1, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            packet_error_probability(1.1, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            packet_error_probability(0.5, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn modulation_parse_aliases() {
        assert_eq!(Modulation::parse("QPSK").unwrap().scheme, Scheme::BpskQpskOqpsk);
        assert_eq!(Modulation::parse("8psk").unwrap().scheme, Scheme::Psk8);
        assert_eq!(Modulation::parse("qam16").unwrap().scheme, Scheme::Qam16);
        assert!(Modulation::parse("qam1024").is_err());
    }

    proptest! {
        #[test]
        fn packet_error_nondecreasing_in_both_arguments(
            b in 0.0f64..0.1,
            l in 1u64..10_000,
        ) {
            let base = packet_error_probability(b, l).unwrap();
            prop_assert!(packet_error_probability(b, l + 1).unwrap() >= base);
            prop_assert!(packet_error_probability((b + 1e-4).min(1.0), l).unwrap() >= base);
            prop_assert!((0.0..=1.0).contains(&base));
        }

        #[test]
        fn analytic_ber_monotone_between_random_points(
            lo in -5.0f64..25.0,
            step in 0.01f64..1.0,
        ) {
            // below 26 dB every scheme stays far above the underflow floor
            for m in Modulation::all() {
                prop_assert!(ber_analytic(&m, lo + step) < ber_analytic(&m, lo));
            }
        }
    }
}

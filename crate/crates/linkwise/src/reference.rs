//! Published reference values shipped with the toolkit.
//!
//! Two of the tabulated coding efficiencies and five of the tabulated
//! required-E_b/N_0 figures do not reproduce under this crate's models
//! (ceiling packetization, first-order AWGN closed forms). Those rows are
//! shipped with a `documented_deviation` flag and reported through
//! [`golden_compare`] rather than asserted; the flagged deviation reports
//! are part of the regular verification output.

use crate::ber::{required_ebn0, Modulation, Scheme};
use crate::error::Result;
use crate::link::coding_efficiency;
use crate::registry::ProtocolRegistry;
use crate::table::{golden_compare, ComparisonReport, MetricTable, Tolerances};

/// A published coding efficiency at 10000 bytes of data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportedEfficiency {
    pub protocol: &'static str,
    pub percent: f64,
    /// True when the ceiling packetization model does not reproduce the figure.
    pub documented_deviation: bool,
}

/// Published per-protocol coding efficiencies at 10000 bytes.
/// The ceiling model computes 98.43% for Wi-Max and 96.49% for GPRS.
pub const REPORTED_CODING_EFFICIENCY_10KB: [ReportedEfficiency; 6] = [
    ReportedEfficiency { protocol: "Bluetooth", percent: 94.41, documented_deviation: false },
    ReportedEfficiency { protocol: "UWB", percent: 97.94, documented_deviation: false },
    ReportedEfficiency { protocol: "ZigBee", percent: 76.52, documented_deviation: false },
    ReportedEfficiency { protocol: "Wi-Fi", percent: 97.18, documented_deviation: false },
    ReportedEfficiency { protocol: "Wi-Max", percent: 98.54, documented_deviation: true },
    ReportedEfficiency { protocol: "GPRS", percent: 80.86, documented_deviation: true },
];

/// A published E_b/N_0 requirement for BER = 1e-6.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportedEbn0 {
    pub scheme: Scheme,
    pub label: &'static str,
    pub eb_n0_db: f64,
    /// True when the row is reference data only, not a numeric acceptance
    /// target of the crate's closed forms (most flagged rows sit well
    /// outside the +-1 dB band; OFDM happens to land inside it).
    pub documented_deviation: bool,
}

/// Published E_b/N_0 values at BER = 1e-6 for the nine modulations.
pub const REPORTED_REQUIRED_EBN0_1E6: [ReportedEbn0; 9] = [
    ReportedEbn0 { scheme: Scheme::BpskQpskOqpsk, label: "B-OQ-QPSK", eb_n0_db: 7.8, documented_deviation: true },
    ReportedEbn0 { scheme: Scheme::Gmsk, label: "GMSK", eb_n0_db: 12.7, documented_deviation: false },
    ReportedEbn0 { scheme: Scheme::Fsk, label: "FSK", eb_n0_db: 13.3, documented_deviation: false },
    ReportedEbn0 { scheme: Scheme::Psk8, label: "8PSK", eb_n0_db: 13.8, documented_deviation: false },
    ReportedEbn0 { scheme: Scheme::Ofdm, label: "OFDM", eb_n0_db: 14.3, documented_deviation: true },
    ReportedEbn0 { scheme: Scheme::Qam16, label: "16QAM", eb_n0_db: 14.8, documented_deviation: false },
    ReportedEbn0 { scheme: Scheme::Gfsk, label: "GFSK", eb_n0_db: 15.7, documented_deviation: true },
    ReportedEbn0 { scheme: Scheme::Pam4, label: "4PAM", eb_n0_db: 17.6, documented_deviation: true },
    ReportedEbn0 { scheme: Scheme::Dpsk8, label: "8DPSK", eb_n0_db: 22.6, documented_deviation: true },
];

/// Compare computed coding efficiencies at 10000 bytes against the published
/// values, one labeled row per default protocol, at the given relative
/// tolerance. The two `documented_deviation` rows are expected to fail.
pub fn coding_efficiency_deviation_report(
    registry: &ProtocolRegistry,
    relative_tolerance: f64,
) -> Result<ComparisonReport> {
    let mut computed = Vec::new();
    let mut reported = Vec::new();
    let mut labels = Vec::new();
    for row in REPORTED_CODING_EFFICIENCY_10KB {
        labels.push(row.protocol.to_string());
        computed.push(coding_efficiency(registry.get(row.protocol)?, 10_000)?);
        reported.push(row.percent);
    }
    let meta = vec![("figure".to_string(), "fig9".to_string())];
    let mut got = MetricTable::new(meta.clone());
    got.set_labels("protocol", labels.clone());
    got.push_column("efficiency", "%", computed);
    let mut want = MetricTable::new(meta);
    want.set_labels("protocol", labels);
    want.push_column("efficiency", "%", reported);
    golden_compare(&got, &want, &Tolerances::uniform(relative_tolerance))
}

/// Compare the closed forms' required E_b/N_0 at BER = 1e-6 against the
/// published values, one column per scheme, each within an absolute band of
/// `tolerance_db`. Only `documented_deviation` columns may fail.
pub fn required_ebn0_deviation_report(tolerance_db: f64) -> Result<ComparisonReport> {
    let meta = vec![("figure".to_string(), "required_ebn0".to_string())];
    let mut got = MetricTable::new(meta.clone());
    let mut want = MetricTable::new(meta);
    let mut tolerances = Tolerances::uniform(1e-12);
    for row in REPORTED_REQUIRED_EBN0_1E6 {
        let computed = required_ebn0(&Modulation::new(row.scheme), 1e-6)?;
        got.push_column(row.label, "dB", vec![computed]);
        want.push_column(row.label, "dB", vec![row.eb_n0_db]);
        // absolute +-tolerance_db expressed as a per-column relative tolerance
        tolerances = tolerances.with_column(row.label, tolerance_db / row.eb_n0_db);
    }
    golden_compare(&got, &want, &tolerances)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn efficiency_report_flags_exactly_the_deviation_rows() {
        let reg = ProtocolRegistry::defaults();
        let report = coding_efficiency_deviation_report(&reg, 1e-4).unwrap();
        assert!(!report.pass);
        assert_eq!(report.cells_checked, 6);
        let failed: Vec<&str> = report
            .failures
            .iter()
            .map(|f| REPORTED_CODING_EFFICIENCY_10KB[f.row].protocol)
            .collect();
        assert_eq!(failed, ["Wi-Max", "GPRS"]);
        for row in REPORTED_CODING_EFFICIENCY_10KB {
            let flagged = failed.contains(&row.protocol);
            assert_eq!(flagged, row.documented_deviation, "{}", row.protocol);
        }
    }

    #[test]
    fn ebn0_report_fails_only_on_flagged_columns() {
        let report = required_ebn0_deviation_report(1.0).unwrap();
        assert!(!report.pass);
        assert_eq!(report.cells_checked, 9);
        let failed: Vec<&String> = report.failures.iter().map(|f| &f.column).collect();
        // every failing column is flagged as a documented deviation
        for name in &failed {
            let row = REPORTED_REQUIRED_EBN0_1E6
                .iter()
                .find(|r| r.label == name.as_str())
                .unwrap();
            assert!(row.documented_deviation, "{name} failed but is unflagged");
        }
        // the four heavy deviators are reported
        for expect in ["B-OQ-QPSK", "GFSK", "4PAM", "8DPSK"] {
            assert!(failed.iter().any(|c| *c == expect), "{expect} missing");
        }
        // the four acceptance targets pass the band
        for target in ["GMSK", "FSK", "8PSK", "16QAM"] {
            assert!(!failed.iter().any(|c| *c == target), "{target} failed");
        }
    }
}

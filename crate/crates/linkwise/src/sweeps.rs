//! Parameter sweeps behind the toolkit's twelve standard figures.
//!
//! Each figure id maps to one metric operation and a documented default
//! range; `run_sweep` renders the sweep as a [`MetricTable`] that is
//! byte-reproducible for a fixed spec, registry and seed.
//!
//! | figure | metric                                   | swept variable        |
//! |--------|------------------------------------------|-----------------------|
//! | fig2   | transmission time per protocol           | data_bytes (log)      |
//! | fig3   | free-space range at fixed power          | frequency_hz          |
//! | fig4   | radio transmit energy                    | distance_m            |
//! | fig5   | received power per protocol              | distance_m            |
//! | fig6   | chipset power draw (bar table)           | -                     |
//! | fig7   | normalized chipset energy (bar table)    | -                     |
//! | fig8   | AWGN BER, nine modulations (+ MC overlay)| eb_n0_db              |
//! | fig9   | coding efficiency per protocol           | data_bytes (log)      |
//! | fig10  | packet error probability                 | packet_length_bits    |
//! | fig11  | energy index                             | packet_length_bits    |
//! | fig12  | real-time throughput (two message sizes) | backoff_s             |
//! | fig13  | MCU switching/leakage energy             | cycles (log)          |

use crate::ber::{ber_analytic, ber_monte_carlo, packet_error_probability, Modulation};
use crate::energy::{
    chipset_power, energy_index, mcu_energy, normalized_energy, tx_energy, Direction,
    EnergyIndexParams, McuParams, RadioEnergyParams,
};
use crate::error::{Error, Result};
use crate::link::{
    coding_efficiency, friis_range, realtime_throughput, received_power, transmission_time,
    LinkBudget,
};
use crate::registry::{ProtocolRegistry, RegistryEntry, SPEED_OF_LIGHT_M_S};
use crate::table::MetricTable;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use crate::table::{golden_compare, CellFailure, ComparisonReport, Tolerances};

/// Identifier of one standard figure sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigureId {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
    Fig10,
    Fig11,
    Fig12,
    Fig13,
}

impl FigureId {
    pub const ALL: [FigureId; 12] = [
        FigureId::Fig2,
        FigureId::Fig3,
        FigureId::Fig4,
        FigureId::Fig5,
        FigureId::Fig6,
        FigureId::Fig7,
        FigureId::Fig8,
        FigureId::Fig9,
        FigureId::Fig10,
        FigureId::Fig11,
        FigureId::Fig12,
        FigureId::Fig13,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
            FigureId::Fig6 => "fig6",
            FigureId::Fig7 => "fig7",
            FigureId::Fig8 => "fig8",
            FigureId::Fig9 => "fig9",
            FigureId::Fig10 => "fig10",
            FigureId::Fig11 => "fig11",
            FigureId::Fig12 => "fig12",
            FigureId::Fig13 => "fig13",
        }
    }

    /// Name of the swept variable, or `None` for the bar-table figures.
    pub fn swept_variable(&self) -> Option<&'static str> {
        match self {
            FigureId::Fig2 | FigureId::Fig9 => Some("data_bytes"),
            FigureId::Fig3 => Some("frequency_hz"),
            FigureId::Fig4 | FigureId::Fig5 => Some("distance_m"),
            FigureId::Fig6 | FigureId::Fig7 => None,
            FigureId::Fig8 => Some("eb_n0_db"),
            FigureId::Fig10 | FigureId::Fig11 => Some("packet_length_bits"),
            FigureId::Fig12 => Some("backoff_s"),
            FigureId::Fig13 => Some("cycles"),
        }
    }

    fn allowed_params(&self) -> &'static [&'static str] {
        match self {
            FigureId::Fig2 => &["t_prop_s"],
            FigureId::Fig3 => &["tx_power_w", "rx_sensitivity_w"],
            FigureId::Fig4 => &["packet_bits"],
            FigureId::Fig5
            | FigureId::Fig6
            | FigureId::Fig7
            | FigureId::Fig8
            | FigureId::Fig9 => &[],
            FigureId::Fig10 => &["ber"],
            FigureId::Fig11 => &["ber", "overhead_bits", "e_t_j", "e_m_j", "e_c_j"],
            FigureId::Fig12 => &["frame_time_s", "m1_bytes", "m2_bytes"],
            FigureId::Fig13 => &["clock_hz"],
        }
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FigureId::ALL
            .into_iter()
            .find(|f| f.name() == s.to_lowercase())
            .ok_or_else(|| Error::UnknownFigure {
                given: s.to_string(),
            })
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

impl Scale {
    pub fn name(&self) -> &'static str {
        match self {
            Scale::Linear => "linear",
            Scale::Log => "log",
        }
    }
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_lowercase().as_str() {
            "linear" => Ok(Scale::Linear),
            "log" => Ok(Scale::Log),
            other => Err(Error::Domain(format!(
                "unknown scale `{other}` (expected `linear` or `log`)"
            ))),
        }
    }
}

/// The variable a sweep ranges over.
#[derive(Debug, Clone, PartialEq)]
pub struct SweptVariable {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

impl SweptVariable {
    fn grid(&self) -> Vec<f64> {
        let n = self.points;
        let mut values = Vec::with_capacity(n);
        for i in 0..n {
            let t = i as f64 / (n - 1) as f64;
            let v = match self.scale {
                Scale::Linear => self.start + t * (self.stop - self.start),
                Scale::Log => {
                    10f64.powf(self.start.log10() + t * (self.stop.log10() - self.start.log10()))
                }
            };
            values.push(v);
        }
        values[n - 1] = self.stop;
        values
    }

    fn integer_grid(&self) -> Vec<u64> {
        self.grid()
            .into_iter()
            .map(|v| v.round().max(1.0) as u64)
            .collect()
    }
}

/// Which registry protocols a sweep covers.
#[derive(Debug, Clone, PartialEq)]
pub enum ProtocolSelector {
    All,
    Named(Vec<String>),
}

/// A fully specified sweep: figure, swept range, fixed parameters, protocol
/// selection and (for the stochastic overlay) seed and sample size.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub figure: FigureId,
    pub swept: Option<SweptVariable>,
    pub fixed: BTreeMap<String, f64>,
    pub protocols: ProtocolSelector,
    pub monte_carlo: bool,
    pub seed: Option<u64>,
    pub mc_bits: u64,
}

pub const DEFAULT_MC_BITS: u64 = 100_000;

impl SweepSpec {
    /// The documented default sweep for a figure.
    pub fn defaults(figure: FigureId) -> Self {
        let swept = match figure {
            FigureId::Fig2 | FigureId::Fig9 => Some(("data_bytes", 100.0, 1e5, 61, Scale::Log)),
            FigureId::Fig3 => Some(("frequency_hz", 0.4e9, 5e9, 47, Scale::Linear)),
            FigureId::Fig4 | FigureId::Fig5 => Some(("distance_m", 1.0, 500.0, 500, Scale::Linear)),
            FigureId::Fig6 | FigureId::Fig7 => None,
            FigureId::Fig8 => Some(("eb_n0_db", 0.0, 24.0, 25, Scale::Linear)),
            FigureId::Fig10 => Some(("packet_length_bits", 1.0, 1e4, 200, Scale::Linear)),
            // the energy index needs L > overhead, so the default range
            // starts one bit above the default 16-bit overhead
            FigureId::Fig11 => Some(("packet_length_bits", 17.0, 1e4, 200, Scale::Linear)),
            FigureId::Fig12 => Some(("backoff_s", 0.0, 0.1, 101, Scale::Linear)),
            FigureId::Fig13 => Some(("cycles", 1.0, 1e7, 29, Scale::Log)),
        };
        let fixed_defaults: &[(&str, f64)] = match figure {
            FigureId::Fig2 => &[("t_prop_s", 0.0)],
            FigureId::Fig3 => &[("tx_power_w", 1.0), ("rx_sensitivity_w", 1e-9)],
            FigureId::Fig4 => &[("packet_bits", 8000.0)],
            FigureId::Fig10 => &[("ber", 1e-3)],
            FigureId::Fig11 => &[
                ("ber", 1e-3),
                ("overhead_bits", 16.0),
                ("e_t_j", 100e-9),
                ("e_m_j", 200e-9),
                ("e_c_j", 100e-9),
            ],
            FigureId::Fig12 => &[
                ("frame_time_s", 0.011_39),
                ("m1_bytes", 512.0),
                ("m2_bytes", 1024.0),
            ],
            FigureId::Fig13 => &[("clock_hz", 100e6)],
            _ => &[],
        };
        let fixed: BTreeMap<String, f64> = fixed_defaults
            .iter()
            .map(|&(k, v)| (k.to_string(), v))
            .collect();
        SweepSpec {
            figure,
            swept: swept.map(|(name, start, stop, points, scale)| SweptVariable {
                name: name.to_string(),
                start,
                stop,
                points,
                scale,
            }),
            fixed,
            protocols: ProtocolSelector::All,
            monte_carlo: false,
            seed: None,
            mc_bits: DEFAULT_MC_BITS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let sweep_err = |message: String| Error::Sweep {
            figure: self.figure.name().to_string(),
            message,
        };
        match (self.figure.swept_variable(), &self.swept) {
            (None, Some(v)) => {
                return Err(sweep_err(format!(
                    "figure takes no swept variable, got `{}`",
                    v.name
                )))
            }
            (Some(expected), Some(v)) if v.name != expected => {
                return Err(sweep_err(format!(
                    "swept variable must be `{expected}`, got `{}`",
                    v.name
                )))
            }
            (Some(expected), None) => {
                return Err(sweep_err(format!("missing swept variable `{expected}`")))
            }
            _ => {}
        }
        if let Some(v) = &self.swept {
            if !(v.start < v.stop) {
                return Err(sweep_err("start must be below stop".to_string()));
            }
            if v.points < 2 {
                return Err(sweep_err("a sweep needs at least 2 points".to_string()));
            }
            if v.scale == Scale::Log && !(v.start > 0.0) {
                return Err(sweep_err("log scale requires start > 0".to_string()));
            }
        }
        for key in self.fixed.keys() {
            if !self.figure.allowed_params().contains(&key.as_str()) {
                return Err(sweep_err(format!(
                    "unknown parameter `{key}` (allowed: {})",
                    self.figure.allowed_params().join(", ")
                )));
            }
        }
        if self.figure == FigureId::Fig11 {
            let overhead = self.param("overhead_bits", 16.0);
            if let Some(v) = &self.swept {
                if v.start <= overhead {
                    return Err(sweep_err(format!(
                        "packet_length_bits must start above the {overhead}-bit overhead"
                    )));
                }
            }
        }
        if self.monte_carlo {
            if self.figure != FigureId::Fig8 {
                return Err(sweep_err(
                    "only fig8 supports the Monte Carlo overlay".to_string(),
                ));
            }
            if self.seed.is_none() {
                return Err(sweep_err(
                    "the Monte Carlo overlay is stochastic and requires a seed".to_string(),
                ));
            }
            if self.mc_bits == 0 {
                return Err(sweep_err("mc_bits must be >= 1".to_string()));
            }
        }
        Ok(())
    }

    fn param(&self, key: &str, default: f64) -> f64 {
        self.fixed.get(key).copied().unwrap_or(default)
    }

    fn meta(&self) -> Vec<(String, String)> {
        let mut meta = vec![
            ("figure".to_string(), self.figure.name().to_string()),
            (
                "version".to_string(),
                env!("CARGO_PKG_VERSION").to_string(),
            ),
        ];
        if let Some(seed) = self.seed {
            meta.push(("seed".to_string(), seed.to_string()));
        }
        if let Some(v) = &self.swept {
            meta.push(("swept.name".to_string(), v.name.clone()));
            meta.push(("swept.start".to_string(), format!("{}", v.start)));
            meta.push(("swept.stop".to_string(), format!("{}", v.stop)));
            meta.push(("swept.points".to_string(), v.points.to_string()));
            meta.push(("swept.scale".to_string(), v.scale.name().to_string()));
        }
        for (k, v) in &self.fixed {
            meta.push((format!("param.{k}"), format!("{v}")));
        }
        match &self.protocols {
            ProtocolSelector::All => meta.push(("protocols".to_string(), "all".to_string())),
            ProtocolSelector::Named(names) => {
                meta.push(("protocols".to_string(), names.join(",")))
            }
        }
        if self.monte_carlo {
            meta.push(("mc_bits".to_string(), self.mc_bits.to_string()));
        }
        meta
    }
}

fn selected_entries<'r>(
    spec: &SweepSpec,
    registry: &'r ProtocolRegistry,
) -> Result<Vec<&'r RegistryEntry>> {
    match &spec.protocols {
        ProtocolSelector::All => Ok(registry.iter().collect()),
        ProtocolSelector::Named(names) => {
            names.iter().map(|n| registry.get_entry(n)).collect()
        }
    }
}

/// Run a sweep against a registry. The output row order follows the spec's
/// grid, and the table is reproducible bit-exactly for (spec, registry, seed).
pub fn run_sweep(spec: &SweepSpec, registry: &ProtocolRegistry) -> Result<MetricTable> {
    spec.validate()?;
    if registry.is_empty() {
        return Err(Error::Domain("registry has no protocols".to_string()));
    }
    let mut table = MetricTable::new(spec.meta());
    match spec.figure {
        FigureId::Fig2 => {
            let sizes = spec.swept.as_ref().unwrap().integer_grid();
            let t_prop = spec.param("t_prop_s", 0.0);
            table.push_column("data", "bytes", sizes.iter().map(|&s| s as f64).collect());
            for entry in selected_entries(spec, registry)? {
                let values: Result<Vec<f64>> = sizes
                    .iter()
                    .map(|&s| transmission_time(&entry.protocol, s, t_prop))
                    .collect();
                table.push_column(&entry.protocol.name, "s", values?);
            }
        }
        FigureId::Fig3 => {
            let freqs = spec.swept.as_ref().unwrap().grid();
            let tx_power = spec.param("tx_power_w", 1.0);
            let sensitivity = spec.param("rx_sensitivity_w", 1e-9);
            table.push_column("frequency", "Hz", freqs.clone());
            let values: Result<Vec<f64>> = freqs
                .iter()
                .map(|&f| {
                    let link = LinkBudget::new(tx_power, SPEED_OF_LIGHT_M_S / f)?;
                    friis_range(&link, sensitivity)
                })
                .collect();
            table.push_column("range", "m", values?);
        }
        FigureId::Fig4 => {
            let distances = spec.swept.as_ref().unwrap().grid();
            let packet_bits = spec.param("packet_bits", 8000.0).round().max(1.0) as u64;
            let params = RadioEnergyParams::default();
            table.push_column("distance", "m", distances.clone());
            let values: Result<Vec<f64>> = distances
                .iter()
                .map(|&d| tx_energy(&params, packet_bits, d))
                .collect();
            table.push_column("tx_energy", "J", values?);
        }
        FigureId::Fig5 => {
            let distances = spec.swept.as_ref().unwrap().grid();
            table.push_column("distance", "m", distances.clone());
            for entry in selected_entries(spec, registry)? {
                let link = LinkBudget::for_protocol(&entry.protocol)?;
                let values: Result<Vec<f64>> = distances
                    .iter()
                    .map(|&d| received_power(&link, d))
                    .collect();
                table.push_column(&entry.protocol.name, "W", values?);
            }
        }
        FigureId::Fig6 | FigureId::Fig7 => {
            let entries = selected_entries(spec, registry)?;
            let mut labels = Vec::new();
            let mut tx = Vec::new();
            let mut rx = Vec::new();
            for entry in entries {
                let chipset = entry.chipset.as_ref().ok_or_else(|| Error::Sweep {
                    figure: spec.figure.name().to_string(),
                    message: format!(
                        "protocol `{}` has no chipset data",
                        entry.protocol.name
                    ),
                })?;
                labels.push(entry.protocol.name.clone());
                if spec.figure == FigureId::Fig6 {
                    tx.push(chipset_power(chipset, Direction::Tx));
                    rx.push(chipset_power(chipset, Direction::Rx));
                } else {
                    tx.push(normalized_energy(chipset, Direction::Tx));
                    rx.push(normalized_energy(chipset, Direction::Rx));
                }
            }
            table.set_labels("protocol", labels);
            let unit = if spec.figure == FigureId::Fig6 { "W" } else { "mJ/Mb" };
            table.push_column("tx", unit, tx);
            table.push_column("rx", unit, rx);
        }
        FigureId::Fig8 => {
            let dbs = spec.swept.as_ref().unwrap().grid();
            table.push_column("eb_n0", "dB", dbs.clone());
            let modulations = Modulation::all();
            for m in &modulations {
                let values = dbs.iter().map(|&db| ber_analytic(m, db)).collect();
                table.push_column(m.name(), "-", values);
            }
            if spec.monte_carlo {
                let seed = spec.seed.expect("validated above");
                for m in &modulations {
                    let values: Result<Vec<f64>> = dbs
                        .iter()
                        .map(|&db| Ok(ber_monte_carlo(m, db, spec.mc_bits, seed)?.ber))
                        .collect();
                    table.push_column(&format!("{}_mc", m.name()), "-", values?);
                }
            }
        }
        FigureId::Fig9 => {
            let sizes = spec.swept.as_ref().unwrap().integer_grid();
            table.push_column("data", "bytes", sizes.iter().map(|&s| s as f64).collect());
            for entry in selected_entries(spec, registry)? {
                let values: Result<Vec<f64>> = sizes
                    .iter()
                    .map(|&s| coding_efficiency(&entry.protocol, s))
                    .collect();
                table.push_column(&entry.protocol.name, "%", values?);
            }
        }
        FigureId::Fig10 => {
            let lengths = spec.swept.as_ref().unwrap().integer_grid();
            let ber = spec.param("ber", 1e-3);
            table.push_column(
                "packet_length",
                "bits",
                lengths.iter().map(|&l| l as f64).collect(),
            );
            let values: Result<Vec<f64>> = lengths
                .iter()
                .map(|&l| packet_error_probability(ber, l))
                .collect();
            table.push_column("packet_error", "-", values?);
        }
        FigureId::Fig11 => {
            let lengths = spec.swept.as_ref().unwrap().integer_grid();
            let ber = spec.param("ber", 1e-3);
            let params = EnergyIndexParams {
                overhead_bits: spec.param("overhead_bits", 16.0).round() as u64,
                transceiver_j: spec.param("e_t_j", 100e-9),
                medium_j: spec.param("e_m_j", 200e-9),
                processing_j: spec.param("e_c_j", 100e-9),
            };
            params.validate()?;
            table.push_column(
                "packet_length",
                "bits",
                lengths.iter().map(|&l| l as f64).collect(),
            );
            let values: Result<Vec<f64>> = lengths
                .iter()
                .map(|&l| energy_index(l, ber, &params))
                .collect();
            table.push_column("energy_index", "bits/J", values?);
        }
        FigureId::Fig12 => {
            let backoffs = spec.swept.as_ref().unwrap().grid();
            let frame = spec.param("frame_time_s", 0.011_39);
            table.push_column("backoff", "s", backoffs.clone());
            for key in ["m1_bytes", "m2_bytes"] {
                let m = spec.param(key, if key == "m1_bytes" { 512.0 } else { 1024.0 });
                let values: Result<Vec<f64>> = backoffs
                    .iter()
                    .map(|&b| realtime_throughput(m, frame, b))
                    .collect();
                table.push_column(&format!("throughput_m{}", m as u64), "B/s", values?);
            }
        }
        FigureId::Fig13 => {
            let cycles = spec.swept.as_ref().unwrap().integer_grid();
            let params = McuParams {
                clock_frequency_hz: spec.param("clock_hz", 100e6),
                ..McuParams::default()
            };
            params.validate()?;
            table.push_column(
                "cycles",
                "cycles",
                cycles.iter().map(|&c| c as f64).collect(),
            );
            let energies: Vec<_> = cycles.iter().map(|&c| mcu_energy(&params, c)).collect();
            table.push_column("switch", "J", energies.iter().map(|e| e.switch_j).collect());
            table.push_column(
                "leakage",
                "J",
                energies.iter().map(|e| e.leakage_j).collect(),
            );
            table.push_column("total", "J", energies.iter().map(|e| e.total_j).collect());
        }
    }
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::ProtocolRegistry;

    fn registry() -> ProtocolRegistry {
        ProtocolRegistry::defaults()
    }

    #[test]
    fn every_figure_runs_with_documented_defaults() {
        let reg = registry();
        for figure in FigureId::ALL {
            let spec = SweepSpec::defaults(figure);
            let table = run_sweep(&spec, &reg)
                .unwrap_or_else(|e| panic!("{figure} failed: {e}"));
            assert!(table.n_rows() >= 2 || figure == FigureId::Fig6 || figure == FigureId::Fig7);
            assert_eq!(table.meta_get("figure"), Some(figure.name()));
        }
    }

    #[test]
    fn unknown_figure_id_is_rejected() {
        assert!(matches!(
            "fig99".parse::<FigureId>(),
            Err(Error::UnknownFigure { .. })
        ));
        assert_eq!("FIG9".parse::<FigureId>().unwrap(), FigureId::Fig9);
    }

    #[test]
    fn incompatible_swept_variable_is_rejected() {
        let mut spec = SweepSpec::defaults(FigureId::Fig10);
        spec.swept.as_mut().unwrap().name = "frequency_hz".to_string();
        match run_sweep(&spec, &registry()) {
            Err(Error::Sweep { figure, message }) => {
                assert_eq!(figure, "fig10");
                assert!(message.contains("packet_length_bits"));
            }
            other => panic!("expected Sweep error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_fixed_parameter_is_rejected() {
        let mut spec = SweepSpec::defaults(FigureId::Fig10);
        spec.fixed.insert("frequency".to_string(), 1.0);
        assert!(matches!(
            run_sweep(&spec, &registry()),
            Err(Error::Sweep { .. })
        ));
    }

    #[test]
    fn fig9_hits_the_published_efficiency_at_10_kbytes() {
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig9), &registry()).unwrap();
        let data = table.column("data").unwrap();
        let row = data.values.iter().position(|&v| v == 10_000.0).unwrap();
        let bt = table.column("Bluetooth").unwrap().values[row];
        assert!((bt - 94.41).abs() < 0.005, "got {bt}");
    }

    #[test]
    fn fig10_packet_error_is_monotone_nondecreasing() {
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig10), &registry()).unwrap();
        let pe = &table.column("packet_error").unwrap().values;
        assert!(pe.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn fig3_range_strictly_decreasing_in_frequency() {
        // reach shrinks as the carrier climbs (equivalently, grows with
        // wavelength at fixed powers)
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig3), &registry()).unwrap();
        let range = &table.column("range").unwrap().values;
        assert!(range.windows(2).all(|w| w[1] < w[0]));
        // spot value: 1 W against 1 nW at 2.4 GHz reaches ~314 m
        let freqs = &table.column("frequency").unwrap().values;
        let row = freqs.iter().position(|&f| f == 2.4e9).unwrap();
        assert!((range[row] - 314.34).abs() < 0.01, "got {}", range[row]);
    }

    #[test]
    fn fig5_received_power_strictly_decreasing_per_protocol() {
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig5), &registry()).unwrap();
        for col in &table.columns[1..] {
            assert!(
                col.values.windows(2).all(|w| w[1] < w[0]),
                "{} not strictly decreasing",
                col.name
            );
        }
    }

    #[test]
    fn fig8_monte_carlo_requires_a_seed() {
        let mut spec = SweepSpec::defaults(FigureId::Fig8);
        spec.monte_carlo = true;
        assert!(matches!(
            run_sweep(&spec, &registry()),
            Err(Error::Sweep { .. })
        ));
        spec.seed = Some(7);
        spec.mc_bits = 20_000;
        let table = run_sweep(&spec, &registry()).unwrap();
        assert_eq!(table.columns.len(), 1 + 9 + 9);
        assert_eq!(table.meta_get("seed"), Some("7"));
    }

    #[test]
    fn identical_specs_produce_byte_identical_tables() {
        let mut spec = SweepSpec::defaults(FigureId::Fig8);
        spec.monte_carlo = true;
        spec.seed = Some(7);
        spec.mc_bits = 30_000;
        let reg = registry();
        let a = run_sweep(&spec, &reg).unwrap();
        let b = run_sweep(&spec, &reg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
    }

    #[test]
    fn named_selector_restricts_and_validates_protocols() {
        let mut spec = SweepSpec::defaults(FigureId::Fig9);
        spec.protocols = ProtocolSelector::Named(vec!["zigbee".to_string()]);
        let table = run_sweep(&spec, &registry()).unwrap();
        assert_eq!(table.columns.len(), 2);
        assert_eq!(table.columns[1].name, "ZigBee");

        spec.protocols = ProtocolSelector::Named(vec!["nope".to_string()]);
        assert!(matches!(
            run_sweep(&spec, &registry()),
            Err(Error::UnknownProtocol { .. })
        ));
    }

    #[test]
    fn fig8_monte_carlo_overlay_tracks_the_analytic_columns() {
        // every overlay point with >= 50 expected errors inside the 3-sigma
        // binomial band of its analytic column (fixed seed 22, worst point
        // 2.17 sigma across the default grid)
        let reg = registry();
        let mut spec = SweepSpec::defaults(FigureId::Fig8);
        spec.monte_carlo = true;
        spec.seed = Some(22);
        let table = run_sweep(&spec, &reg).unwrap();
        let dbs = &table.column("eb_n0").unwrap().values;
        let mut checked = 0;
        for m in Modulation::all() {
            let analytic_col = &table.column(m.name()).unwrap().values;
            let mc_col = &table.column(&format!("{}_mc", m.name())).unwrap().values;
            for (row, &db) in dbs.iter().enumerate() {
                let analytic = analytic_col[row];
                if analytic * spec.mc_bits as f64 >= 50.0 {
                    let band =
                        3.0 * (analytic * (1.0 - analytic) / spec.mc_bits as f64).sqrt();
                    assert!(
                        (mc_col[row] - analytic).abs() < band,
                        "{} at {db} dB: |{} - {analytic}| >= {band}",
                        m.name(),
                        mc_col[row]
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 100, "only {checked} points had enough errors");
    }

    #[test]
    fn fig6_reports_chipset_powers_as_labeled_rows() {
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig6), &registry()).unwrap();
        let labels = table.labels.as_ref().unwrap();
        assert_eq!(labels.values.len(), 6);
        let bt_row = labels.values.iter().position(|n| n == "Bluetooth").unwrap();
        let tx = table.column("tx").unwrap().values[bt_row];
        assert!((tx - 0.1026).abs() < 1e-9);
    }

    #[test]
    fn fig12_second_column_is_twice_the_first() {
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig12), &registry()).unwrap();
        let m512 = &table.column("throughput_m512").unwrap().values;
        let m1024 = &table.column("throughput_m1024").unwrap().values;
        for (a, b) in m512.iter().zip(m1024) {
            assert_eq!(*b, 2.0 * *a);
        }
    }

    #[test]
    fn fig13_total_strictly_increasing() {
        let table = run_sweep(&SweepSpec::defaults(FigureId::Fig13), &registry()).unwrap();
        let total = &table.column("total").unwrap().values;
        assert!(total.windows(2).all(|w| w[1] > w[0]));
    }
}

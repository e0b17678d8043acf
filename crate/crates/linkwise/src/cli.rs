//! Command-line front end.
//!
//! Subcommands: `list` (registry inspection), `metric` (single metric
//! evaluation), `sweep` (figure sweeps as CSV/JSON), `compare` (golden
//! comparison) and `recommend` (protocol ranking).
//!
//! Exit codes: 0 success, 1 domain/computation errors (including a failed
//! comparison), 2 usage and input errors.

use crate::advisor::{recommend, ApplicationClass, ApplicationProfile};
use crate::ber::{ber_analytic, ber_monte_carlo, packet_error_probability, required_ebn0, BerSource, Modulation, Scheme};
use crate::energy::{
    chipset_power, energy_index, energy_index_fixed_retx, mcu_energy, normalized_energy,
    optimal_packet_length_with, tx_energy, Direction, EnergyIndexParams, McuParams,
    RadioEnergyParams,
};
use crate::error::{Error, Result};
use crate::link::{
    coding_efficiency, crossover_distance, friis_range, friis_received_power,
    realtime_throughput, received_power, transmission_time, LinkBudget,
};
use crate::registry::{load_registry, ProtocolRegistry, SPEED_OF_LIGHT_M_S};
use crate::sweeps::{run_sweep, FigureId, ProtocolSelector, Scale, SweepSpec};
use crate::table::{golden_compare, MetricTable, Tolerances};
use crate::units::{parse_quantity, Dimension, UNIT_HELP};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};

/// Environment variable holding the default registry document path.
pub const REGISTRY_ENV_VAR: &str = "LINKWISE_REGISTRY";

#[derive(Parser)]
#[command(
    name = "linkwise",
    version,
    about = "Wireless protocol performance metrics: timing, propagation, energy, BER, selection",
    after_help = UNIT_HELP
)]
struct Cli {
    /// Registry document path (default: embedded registry, or $LINKWISE_REGISTRY)
    #[arg(long, global = true, value_name = "PATH")]
    registry: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show every protocol and chipset in the registry
    List {
        /// Emit JSON instead of the text table
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one metric and print the value with its unit
    Metric(Box<MetricArgs>),
    /// Render a figure sweep (fig2..fig13) as CSV or JSON
    Sweep(SweepArgs),
    /// Compare a metric table against a golden reference table
    Compare(CompareArgs),
    /// Rank the registry protocols for an application profile
    Recommend(RecommendArgs),
}

#[derive(Args)]
struct MetricArgs {
    /// One of: tx-time, coding-eff, friis-power, friis-range, rx-power,
    /// tx-energy, chipset-power, norm-energy, energy-index, optimal-length,
    /// mcu-energy, ber, required-ebn0, packet-error, throughput
    name: String,

    /// Protocol name for protocol-based metrics
    #[arg(long)]
    protocol: Option<String>,
    /// Data size (bytes; suffixes kb/mb)
    #[arg(long)]
    size: Option<String>,
    /// Propagation time to add to the transmission time (seconds)
    #[arg(long)]
    tprop: Option<String>,
    /// Distance (meters)
    #[arg(long)]
    distance: Option<String>,
    /// Carrier frequency (hertz)
    #[arg(long)]
    frequency: Option<String>,
    /// Carrier wavelength (meters; overrides --frequency)
    #[arg(long)]
    wavelength: Option<String>,
    /// Transmit power (watts)
    #[arg(long)]
    tx_power: Option<String>,
    /// Transmit antenna gain
    #[arg(long)]
    tx_gain: Option<String>,
    /// Receive antenna gain
    #[arg(long)]
    rx_gain: Option<String>,
    /// System path-loss factor L >= 1
    #[arg(long)]
    path_loss: Option<String>,
    /// Transmit antenna height (meters)
    #[arg(long)]
    tx_height: Option<String>,
    /// Receive antenna height (meters)
    #[arg(long)]
    rx_height: Option<String>,
    /// Receiver sensitivity (watts)
    #[arg(long)]
    sensitivity: Option<String>,
    /// Message length in bits for the radio energy model
    #[arg(long)]
    k: Option<u64>,
    /// Electronics energy per bit (joules)
    #[arg(long)]
    e_elec: Option<String>,
    /// Free-space amplifier energy per bit per m^2 (joules)
    #[arg(long)]
    eps_fs: Option<String>,
    /// Multipath amplifier energy per bit per m^4 (joules)
    #[arg(long)]
    eps_amp: Option<String>,
    /// Chipset direction
    #[arg(long, value_enum)]
    direction: Option<DirectionArg>,
    /// Packet length in bits
    #[arg(long)]
    length: Option<u64>,
    /// Bit error probability
    #[arg(long)]
    ber: Option<f64>,
    /// Packet overhead in bits
    #[arg(long)]
    overhead: Option<u64>,
    /// Transceiver energy per attempt (joules)
    #[arg(long)]
    et: Option<String>,
    /// Collision/idle/overhearing energy per attempt (joules)
    #[arg(long)]
    em: Option<String>,
    /// Processing energy per attempt (joules)
    #[arg(long)]
    ec: Option<String>,
    /// Fixed retransmission count (evaluates the constant-retransmission index)
    #[arg(long)]
    nr: Option<f64>,
    /// Executed instruction cycles
    #[arg(long)]
    cycles: Option<u64>,
    /// MCU supply voltage (volts)
    #[arg(long)]
    vdd: Option<String>,
    /// MCU switched capacitance per cycle (farads)
    #[arg(long)]
    cap: Option<String>,
    /// MCU leakage current scale (amperes)
    #[arg(long)]
    i0: Option<String>,
    /// MCU process constant
    #[arg(long)]
    process_n: Option<f64>,
    /// MCU thermal voltage (volts)
    #[arg(long)]
    vt: Option<String>,
    /// MCU clock frequency (hertz)
    #[arg(long)]
    clock: Option<String>,
    /// Modulation scheme (bpsk/qpsk/oqpsk, gmsk, fsk, gfsk, 8psk, 8dpsk, 4pam, 16qam, ofdm)
    #[arg(long)]
    modulation: Option<String>,
    /// GMSK degradation factor alpha in (0, 1]
    #[arg(long)]
    alpha: Option<f64>,
    /// OFDM subcarrier scheme
    #[arg(long)]
    subcarrier: Option<String>,
    /// E_b/N_0 in dB
    #[arg(long)]
    ebn0: Option<f64>,
    /// Target bit error rate in (0, 0.5)
    #[arg(long)]
    target: Option<f64>,
    /// Estimate the BER by Monte Carlo simulation instead of the closed form
    #[arg(long)]
    monte_carlo: bool,
    /// Simulated bits for --monte-carlo
    #[arg(long, default_value_t = 1_000_000)]
    bits: u64,
    /// Random seed for --monte-carlo
    #[arg(long)]
    seed: Option<u64>,
    /// Data amount (bytes) for the throughput metric
    #[arg(long)]
    data: Option<String>,
    /// MAC frame time (seconds)
    #[arg(long)]
    frame: Option<String>,
    /// Average backoff time (seconds)
    #[arg(long)]
    backoff: Option<String>,
    /// Emit a JSON record with the inputs echoed
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Tx,
    Rx,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Tx => Direction::Tx,
            DirectionArg::Rx => Direction::Rx,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Figure id, fig2..fig13
    figure: String,
    /// Output path (default: standard output)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Swept-variable start (base units of the figure's variable)
    #[arg(long)]
    start: Option<f64>,
    /// Swept-variable stop
    #[arg(long)]
    stop: Option<f64>,
    /// Number of sweep points
    #[arg(long)]
    points: Option<usize>,
    /// Sweep spacing: linear or log
    #[arg(long)]
    scale: Option<String>,
    /// Restrict to one or more protocols (repeatable)
    #[arg(long = "protocol")]
    protocols: Vec<String>,
    /// Override a fixed parameter, `key=value` (repeatable; see figure docs)
    #[arg(long = "set", value_name = "KEY=VALUE")]
    sets: Vec<String>,
    /// Add the seeded Monte Carlo overlay (fig8 only)
    #[arg(long)]
    monte_carlo: bool,
    /// Random seed for the Monte Carlo overlay
    #[arg(long)]
    seed: Option<u64>,
    /// Simulated bits per Monte Carlo point
    #[arg(long)]
    bits: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct CompareArgs {
    /// Table to check (CSV)
    table: PathBuf,
    /// Golden reference table (CSV)
    reference: PathBuf,
    /// Default relative tolerance per cell
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Per-column relative tolerance, `column=tol` (repeatable)
    #[arg(long = "col", value_name = "COLUMN=TOL")]
    columns: Vec<String>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RecommendArgs {
    /// Required data rate (bits per second; suffixes kbps/mbps/gbps)
    #[arg(long)]
    rate: String,
    /// Required range (meters)
    #[arg(long)]
    range: String,
    /// The application is battery constrained
    #[arg(long)]
    battery: bool,
    /// Application class: environmental_monitoring, event_detection, tracking, custom
    #[arg(long, default_value = "custom")]
    class: String,
    /// Message size per transmission (bytes)
    #[arg(long, default_value = "100")]
    size: String,
    /// Emit the ranking as JSON
    #[arg(long)]
    json: bool,
}

/// Parse arguments from the process environment and run; returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let registry = load_registry_from(cli.registry.as_deref())?;
    match cli.command {
        Command::List { json } => cmd_list(&registry, json),
        Command::Metric(args) => cmd_metric(&registry, &args),
        Command::Sweep(args) => cmd_sweep(&registry, &args),
        Command::Compare(args) => cmd_compare(&args),
        Command::Recommend(args) => cmd_recommend(&registry, &args),
    }
}

fn load_registry_from(flag: Option<&Path>) -> Result<ProtocolRegistry> {
    let path = flag
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(REGISTRY_ENV_VAR).map(PathBuf::from));
    match path {
        None => load_registry(None),
        Some(p) => {
            let doc = std::fs::read_to_string(&p)?;
            load_registry(Some(&doc))
        }
    }
}

fn cmd_list(registry: &ProtocolRegistry, json: bool) -> Result<i32> {
    if json {
        let entries: Vec<_> = registry.iter().collect();
        println!("{}", serde_json::to_string_pretty(&entries).expect("serializable"));
        return Ok(0);
    }
    println!(
        "{:<10} {:>11} {:>13} {:>11} {:>12} {:>10} {:>9} {:>7}  {:<12} extension",
        "protocol",
        "rate(Mb/s)",
        "bit_time(us)",
        "payload(B)",
        "overhead(B)",
        "freq(Hz)",
        "P_tx(W)",
        "nodes",
        "basic_cell",
    );
    for entry in registry.iter() {
        let p = &entry.protocol;
        println!(
            "{:<10} {:>11} {:>13} {:>11} {:>12} {:>10} {:>9} {:>7}  {:<12} {}",
            p.name,
            p.max_data_rate_mbps,
            p.bit_time_us,
            p.max_payload_bytes,
            crate::rational::format_rational(&p.overhead_bytes),
            p.carrier_frequency_hz,
            p.tx_power_w,
            p.max_cell_nodes,
            p.basic_cell,
            p.cell_extension
        );
        if let Some(note) = &p.note {
            println!("{:<10}   note: {note}", "");
        }
    }
    println!();
    println!(
        "{:<10} {:<12} {:>8} {:>10} {:>10} {:>11}",
        "protocol", "chipset", "V_dd(V)", "I_tx(mA)", "I_rx(mA)", "rate(Mb/s)"
    );
    for entry in registry.iter() {
        if let Some(c) = &entry.chipset {
            println!(
                "{:<10} {:<12} {:>8} {:>10} {:>10} {:>11}",
                c.protocol_name,
                c.chipset_name,
                c.supply_voltage_v,
                c.tx_current_ma,
                c.rx_current_ma,
                c.bit_rate_mbps
            );
        }
    }
    Ok(0)
}

/// One evaluated metric: inputs echoed, named values with units.
struct MetricOutput {
    metric: &'static str,
    inputs: Vec<(&'static str, serde_json::Value)>,
    values: Vec<(&'static str, f64, &'static str)>,
}

impl MetricOutput {
    fn print(&self, json: bool) {
        if json {
            let inputs: serde_json::Map<String, serde_json::Value> = self
                .inputs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            let results: Vec<_> = self
                .values
                .iter()
                .map(|(name, value, unit)| json!({"name": name, "value": value, "unit": unit}))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "metric": self.metric,
                    "inputs": inputs,
                    "results": results,
                }))
                .expect("serializable")
            );
        } else if self.values.len() == 1 {
            let (_, value, unit) = self.values[0];
            println!("{value} {unit}");
        } else {
            for (name, value, unit) in &self.values {
                println!("{name}: {value} {unit}");
            }
        }
    }
}

fn require<T>(value: Option<T>, flag: &str, metric: &str) -> Result<T> {
    value.ok_or_else(|| Error::Usage(format!("metric `{metric}` requires {flag}")))
}

fn parse_opt(value: &Option<String>, dim: Dimension) -> Result<Option<f64>> {
    value.as_deref().map(|s| parse_quantity(s, dim)).transpose()
}

fn modulation_from(args: &MetricArgs, metric: &str) -> Result<Modulation> {
    let raw = require(args.modulation.as_deref(), "--modulation", metric)?;
    let mut m = Modulation::parse(raw)?;
    if let Some(alpha) = args.alpha {
        if m.scheme != Scheme::Gmsk {
            return Err(Error::Usage("--alpha applies to GMSK only".to_string()));
        }
        m = Modulation::gmsk_with_alpha(alpha)?;
    }
    if let Some(sub) = &args.subcarrier {
        if m.scheme != Scheme::Ofdm {
            return Err(Error::Usage("--subcarrier applies to OFDM only".to_string()));
        }
        m = Modulation::ofdm_over(Modulation::parse(sub)?.scheme)?;
    }
    Ok(m)
}

/// Budget from the link flags; `--protocol` supplies power and wavelength
/// defaults, explicit flags override.
fn link_from(args: &MetricArgs, registry: &ProtocolRegistry) -> Result<LinkBudget> {
    let spec = args
        .protocol
        .as_deref()
        .map(|name| registry.get(name))
        .transpose()?;
    let tx_power = match parse_opt(&args.tx_power, Dimension::Power)? {
        Some(p) => p,
        None => spec.map(|s| s.tx_power_w).unwrap_or(1.0),
    };
    let wavelength = match parse_opt(&args.wavelength, Dimension::Distance)? {
        Some(w) => w,
        None => match parse_opt(&args.frequency, Dimension::Frequency)? {
            Some(f) => SPEED_OF_LIGHT_M_S / f,
            None => spec
                .map(|s| s.wavelength_m())
                .unwrap_or(SPEED_OF_LIGHT_M_S / 2.4e9),
        },
    };
    let mut link = LinkBudget::new(tx_power, wavelength)?;
    if args.tx_gain.is_some() || args.rx_gain.is_some() {
        link = link.with_gains(
            parse_opt(&args.tx_gain, Dimension::Scalar)?.unwrap_or(link.tx_gain),
            parse_opt(&args.rx_gain, Dimension::Scalar)?.unwrap_or(link.rx_gain),
        )?;
    }
    if let Some(l) = parse_opt(&args.path_loss, Dimension::Scalar)? {
        link = link.with_path_loss_factor(l)?;
    }
    if args.tx_height.is_some() || args.rx_height.is_some() {
        link = link.with_antenna_heights(
            parse_opt(&args.tx_height, Dimension::Distance)?.unwrap_or(link.tx_antenna_height_m),
            parse_opt(&args.rx_height, Dimension::Distance)?.unwrap_or(link.rx_antenna_height_m),
        )?;
    }
    Ok(link)
}

fn radio_params_from(args: &MetricArgs) -> Result<RadioEnergyParams> {
    let defaults = RadioEnergyParams::default();
    let params = RadioEnergyParams {
        electronics_j_per_bit: parse_opt(&args.e_elec, Dimension::Energy)?
            .unwrap_or(defaults.electronics_j_per_bit),
        fs_amp_j_per_bit_m2: parse_opt(&args.eps_fs, Dimension::Energy)?
            .unwrap_or(defaults.fs_amp_j_per_bit_m2),
        mp_amp_j_per_bit_m4: parse_opt(&args.eps_amp, Dimension::Energy)?
            .unwrap_or(defaults.mp_amp_j_per_bit_m4),
    };
    params.validate()?;
    Ok(params)
}

fn index_params_from(args: &MetricArgs) -> Result<EnergyIndexParams> {
    let defaults = EnergyIndexParams::default();
    let params = EnergyIndexParams {
        overhead_bits: args.overhead.unwrap_or(defaults.overhead_bits),
        transceiver_j: parse_opt(&args.et, Dimension::Energy)?.unwrap_or(defaults.transceiver_j),
        medium_j: parse_opt(&args.em, Dimension::Energy)?.unwrap_or(defaults.medium_j),
        processing_j: parse_opt(&args.ec, Dimension::Energy)?.unwrap_or(defaults.processing_j),
    };
    params.validate()?;
    Ok(params)
}

fn size_in_bytes(value: &str) -> Result<u64> {
    let bytes = parse_quantity(value, Dimension::DataSize)?;
    if !(bytes >= 1.0) {
        return Err(Error::Domain("data size must be >= 1 byte".to_string()));
    }
    Ok(bytes.round() as u64)
}

fn cmd_metric(registry: &ProtocolRegistry, args: &MetricArgs) -> Result<i32> {
    let metric = args.name.as_str();
    let output = match metric {
        "tx-time" => {
            let name = require(args.protocol.as_deref(), "--protocol", metric)?;
            let size = size_in_bytes(require(args.size.as_deref(), "--size", metric)?)?;
            let tprop = parse_opt(&args.tprop, Dimension::Time)?.unwrap_or(0.0);
            let spec = registry.get(name)?;
            let t = transmission_time(spec, size, tprop)?;
            MetricOutput {
                metric: "tx-time",
                inputs: vec![
                    ("protocol", json!(spec.name)),
                    ("data_bytes", json!(size)),
                    ("propagation_time_s", json!(tprop)),
                ],
                values: vec![("value", t, "s")],
            }
        }
        "coding-eff" => {
            let name = require(args.protocol.as_deref(), "--protocol", metric)?;
            let size = size_in_bytes(require(args.size.as_deref(), "--size", metric)?)?;
            let spec = registry.get(name)?;
            let eff = coding_efficiency(spec, size)?;
            MetricOutput {
                metric: "coding-eff",
                inputs: vec![("protocol", json!(spec.name)), ("data_bytes", json!(size))],
                values: vec![("value", eff, "%")],
            }
        }
        "friis-power" => {
            let d = parse_quantity(
                require(args.distance.as_deref(), "--distance", metric)?,
                Dimension::Distance,
            )?;
            let link = link_from(args, registry)?;
            let p = friis_received_power(&link, d)?;
            MetricOutput {
                metric: "friis-power",
                inputs: vec![
                    ("distance_m", json!(d)),
                    ("tx_power_w", json!(link.tx_power_w)),
                    ("wavelength_m", json!(link.wavelength_m)),
                ],
                values: vec![("value", p, "W")],
            }
        }
        "friis-range" => {
            let sensitivity =
                parse_opt(&args.sensitivity, Dimension::Power)?.unwrap_or(1e-9);
            let link = link_from(args, registry)?;
            let d = friis_range(&link, sensitivity)?;
            MetricOutput {
                metric: "friis-range",
                inputs: vec![
                    ("rx_sensitivity_w", json!(sensitivity)),
                    ("tx_power_w", json!(link.tx_power_w)),
                    ("wavelength_m", json!(link.wavelength_m)),
                ],
                values: vec![("value", d, "m")],
            }
        }
        "rx-power" => {
            let d = parse_quantity(
                require(args.distance.as_deref(), "--distance", metric)?,
                Dimension::Distance,
            )?;
            let link = link_from(args, registry)?;
            let p = received_power(&link, d)?;
            MetricOutput {
                metric: "rx-power",
                inputs: vec![
                    ("distance_m", json!(d)),
                    ("tx_power_w", json!(link.tx_power_w)),
                    ("wavelength_m", json!(link.wavelength_m)),
                    ("crossover_m", json!(crossover_distance(&link))),
                ],
                values: vec![("value", p, "W")],
            }
        }
        "tx-energy" => {
            let k = require(args.k, "--k", metric)?;
            let d = parse_quantity(
                require(args.distance.as_deref(), "--distance", metric)?,
                Dimension::Distance,
            )?;
            let params = radio_params_from(args)?;
            let e = tx_energy(&params, k, d)?;
            MetricOutput {
                metric: "tx-energy",
                inputs: vec![("k_bits", json!(k)), ("distance_m", json!(d))],
                values: vec![("value", e, "J")],
            }
        }
        "chipset-power" | "norm-energy" => {
            let name = require(args.protocol.as_deref(), "--protocol", metric)?;
            let direction: Direction =
                args.direction.unwrap_or(DirectionArg::Tx).into();
            let entry = registry.get_entry(name)?;
            let chipset = entry.chipset.as_ref().ok_or_else(|| {
                Error::Domain(format!(
                    "protocol `{}` has no chipset data",
                    entry.protocol.name
                ))
            })?;
            let dir_name = match direction {
                Direction::Tx => "tx",
                Direction::Rx => "rx",
            };
            if metric == "chipset-power" {
                MetricOutput {
                    metric: "chipset-power",
                    inputs: vec![
                        ("protocol", json!(entry.protocol.name)),
                        ("chipset", json!(chipset.chipset_name)),
                        ("direction", json!(dir_name)),
                    ],
                    values: vec![("value", chipset_power(chipset, direction), "W")],
                }
            } else {
                MetricOutput {
                    metric: "norm-energy",
                    inputs: vec![
                        ("protocol", json!(entry.protocol.name)),
                        ("chipset", json!(chipset.chipset_name)),
                        ("direction", json!(dir_name)),
                    ],
                    values: vec![("value", normalized_energy(chipset, direction), "mJ/Mb")],
                }
            }
        }
        "energy-index" => {
            let length = require(args.length, "--length", metric)?;
            let params = index_params_from(args)?;
            let (value, mode) = match args.nr {
                Some(nr) => (energy_index_fixed_retx(length, nr, &params)?, json!(nr)),
                None => {
                    let ber = require(args.ber, "--ber", metric)?;
                    (energy_index(length, ber, &params)?, json!("1/(1-p_e)"))
                }
            };
            MetricOutput {
                metric: "energy-index",
                inputs: vec![
                    ("packet_length_bits", json!(length)),
                    ("bit_error_prob", json!(args.ber)),
                    ("overhead_bits", json!(params.overhead_bits)),
                    ("retransmissions", mode),
                ],
                values: vec![("value", value, "bits/J")],
            }
        }
        "optimal-length" => {
            let ber = require(args.ber, "--ber", metric)?;
            let params = index_params_from(args)?;
            let l = optimal_packet_length_with(ber, &params)?;
            MetricOutput {
                metric: "optimal-length",
                inputs: vec![
                    ("bit_error_prob", json!(ber)),
                    ("overhead_bits", json!(params.overhead_bits)),
                ],
                values: vec![("value", l as f64, "bits")],
            }
        }
        "mcu-energy" => {
            let cycles = require(args.cycles, "--cycles", metric)?;
            let defaults = McuParams::default();
            let params = McuParams {
                supply_voltage_v: parse_opt(&args.vdd, Dimension::Voltage)?
                    .unwrap_or(defaults.supply_voltage_v),
                switched_capacitance_f_per_cycle: parse_opt(&args.cap, Dimension::Capacitance)?
                    .unwrap_or(defaults.switched_capacitance_f_per_cycle),
                leakage_current_a: parse_opt(&args.i0, Dimension::Current)?
                    .unwrap_or(defaults.leakage_current_a),
                process_constant: args.process_n.unwrap_or(defaults.process_constant),
                thermal_voltage_v: parse_opt(&args.vt, Dimension::Voltage)?
                    .unwrap_or(defaults.thermal_voltage_v),
                clock_frequency_hz: parse_opt(&args.clock, Dimension::Frequency)?
                    .unwrap_or(defaults.clock_frequency_hz),
            };
            params.validate()?;
            let e = mcu_energy(&params, cycles);
            MetricOutput {
                metric: "mcu-energy",
                inputs: vec![
                    ("cycles", json!(cycles)),
                    ("supply_voltage_v", json!(params.supply_voltage_v)),
                    ("clock_frequency_hz", json!(params.clock_frequency_hz)),
                ],
                values: vec![
                    ("switch", e.switch_j, "J"),
                    ("leakage", e.leakage_j, "J"),
                    ("total", e.total_j, "J"),
                ],
            }
        }
        "ber" => {
            let m = modulation_from(args, metric)?;
            let ebn0 = require(args.ebn0, "--ebn0", metric)?;
            if args.monte_carlo {
                let seed = require(args.seed, "--seed", metric)?;
                let sample = ber_monte_carlo(&m, ebn0, args.bits, seed)?;
                let (trial_bits, error_bits) = match sample.source {
                    BerSource::MonteCarlo {
                        trial_bits,
                        error_bits,
                        ..
                    } => (trial_bits, error_bits),
                    BerSource::Analytic => unreachable!(),
                };
                MetricOutput {
                    metric: "ber",
                    inputs: vec![
                        ("modulation", json!(m.name())),
                        ("eb_n0_db", json!(ebn0)),
                        ("n_bits", json!(args.bits)),
                        ("seed", json!(seed)),
                    ],
                    values: vec![
                        ("value", sample.ber, "-"),
                        ("trial_bits", trial_bits as f64, "bits"),
                        ("error_bits", error_bits as f64, "bits"),
                    ],
                }
            } else {
                MetricOutput {
                    metric: "ber",
                    inputs: vec![("modulation", json!(m.name())), ("eb_n0_db", json!(ebn0))],
                    values: vec![("value", ber_analytic(&m, ebn0), "-")],
                }
            }
        }
        "required-ebn0" => {
            let m = modulation_from(args, metric)?;
            let target = require(args.target, "--target", metric)?;
            let db = required_ebn0(&m, target)?;
            MetricOutput {
                metric: "required-ebn0",
                inputs: vec![
                    ("modulation", json!(m.name())),
                    ("target_ber", json!(target)),
                ],
                values: vec![("value", db, "dB")],
            }
        }
        "packet-error" => {
            let ber = require(args.ber, "--ber", metric)?;
            let length = require(args.length, "--length", metric)?;
            let p = packet_error_probability(ber, length)?;
            MetricOutput {
                metric: "packet-error",
                inputs: vec![
                    ("bit_error_prob", json!(ber)),
                    ("packet_length_bits", json!(length)),
                ],
                values: vec![("value", p, "-")],
            }
        }
        "throughput" => {
            let data = parse_quantity(
                require(args.data.as_deref(), "--data", metric)?,
                Dimension::DataSize,
            )?;
            let frame = parse_quantity(
                require(args.frame.as_deref(), "--frame", metric)?,
                Dimension::Time,
            )?;
            let backoff = parse_opt(&args.backoff, Dimension::Time)?.unwrap_or(0.0);
            let th = realtime_throughput(data, frame, backoff)?;
            MetricOutput {
                metric: "throughput",
                inputs: vec![
                    ("data_bytes", json!(data)),
                    ("frame_time_s", json!(frame)),
                    ("backoff_time_s", json!(backoff)),
                ],
                values: vec![("value", th, "B/s")],
            }
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown metric `{other}`; expected one of tx-time, coding-eff, friis-power, \
                 friis-range, rx-power, tx-energy, chipset-power, norm-energy, energy-index, \
                 optimal-length, mcu-energy, ber, required-ebn0, packet-error, throughput"
            )))
        }
    };
    output.print(args.json);
    Ok(0)
}

fn cmd_sweep(registry: &ProtocolRegistry, args: &SweepArgs) -> Result<i32> {
    let figure: FigureId = args.figure.parse()?;
    let mut spec = SweepSpec::defaults(figure);
    if let Some(v) = &mut spec.swept {
        if let Some(start) = args.start {
            v.start = start;
        }
        if let Some(stop) = args.stop {
            v.stop = stop;
        }
        if let Some(points) = args.points {
            v.points = points;
        }
        if let Some(scale) = &args.scale {
            v.scale = scale.parse::<Scale>()?;
        }
    } else if args.start.is_some() || args.stop.is_some() || args.points.is_some() {
        return Err(Error::Sweep {
            figure: figure.name().to_string(),
            message: "this figure takes no swept variable".to_string(),
        });
    }
    if !args.protocols.is_empty() {
        spec.protocols = ProtocolSelector::Named(args.protocols.clone());
    }
    for set in &args.sets {
        let (key, value) = set.split_once('=').ok_or_else(|| {
            Error::Usage(format!("--set expects `key=value`, got `{set}`"))
        })?;
        let value: f64 = value.parse().map_err(|_| {
            Error::Usage(format!("--set {key}: `{value}` is not a number"))
        })?;
        spec.fixed.insert(key.to_string(), value);
    }
    spec.monte_carlo = args.monte_carlo;
    spec.seed = args.seed;
    if let Some(bits) = args.bits {
        spec.mc_bits = bits;
    }

    let table = run_sweep(&spec, registry)?;
    let rendered = match args.format {
        FormatArg::Csv => table.to_csv(),
        FormatArg::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&table.to_json()).expect("serializable")
        ),
    };
    match &args.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(0)
}

fn cmd_compare(args: &CompareArgs) -> Result<i32> {
    let table = MetricTable::from_csv(&std::fs::read_to_string(&args.table)?)?;
    let reference = MetricTable::from_csv(&std::fs::read_to_string(&args.reference)?)?;
    let mut tolerances = Tolerances::uniform(args.tolerance);
    for spec in &args.columns {
        let (column, tol) = spec.split_once('=').ok_or_else(|| {
            Error::Usage(format!("--col expects `column=tol`, got `{spec}`"))
        })?;
        let tol: f64 = tol.parse().map_err(|_| {
            Error::Usage(format!("--col {column}: `{tol}` is not a number"))
        })?;
        tolerances = tolerances.with_column(column, tol);
    }
    let report = golden_compare(&table, &reference, &tolerances)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        print!("{report}");
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_recommend(registry: &ProtocolRegistry, args: &RecommendArgs) -> Result<i32> {
    let profile = ApplicationProfile {
        application_class: ApplicationClass::parse(&args.class)?,
        required_data_rate_bps: parse_quantity(&args.rate, Dimension::DataRate)?,
        required_range_m: parse_quantity(&args.range, Dimension::Distance)?,
        battery_constrained: args.battery,
        data_size_per_message_bytes: size_in_bytes(&args.size)?,
    };
    let recommendation = recommend(&profile, registry)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&recommendation).expect("serializable")
        );
        return Ok(0);
    }
    println!(
        "{:<5} {:<10} {:>7} {:>6}  rules",
        "rank", "protocol", "score", "rate"
    );
    for (i, e) in recommendation.entries.iter().enumerate() {
        println!(
            "{:<5} {:<10} {:>7.4} {:>6}  {}",
            i + 1,
            e.name,
            e.score,
            if e.rate_feasible { "ok" } else { "below" },
            if e.rules.is_empty() {
                "-".to_string()
            } else {
                e.rules.join("; ")
            }
        );
    }
    for note in &recommendation.notes {
        println!("note: {note}");
    }
    Ok(0)
}

//! Per-link timing, efficiency, propagation and throughput metrics.
//!
//! Packetization splits a message into ceiling(data/max_payload) packets,
//! each paying the protocol's framing overhead; transmission time and coding
//! efficiency both derive from the resulting total on-air byte count.
//! Propagation uses the free-space law below the crossover distance and the
//! ground-reflection d^-4 law at or beyond it.

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};
use crate::registry::ProtocolSpec;
use num_rational::Ratio;
use std::f64::consts::PI;

/// Antenna and path parameters for the propagation equations.
///
/// Defaults: unity gains, unit path-loss factor, 1.5 m antenna heights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkBudget {
    /// Transmit power P_t, watts.
    pub tx_power_w: f64,
    /// Transmit antenna gain, dimensionless.
    pub tx_gain: f64,
    /// Receive antenna gain, dimensionless.
    pub rx_gain: f64,
    /// Carrier wavelength, meters.
    pub wavelength_m: f64,
    /// System path-loss factor L >= 1.
    pub path_loss_factor: f64,
    /// Transmit antenna height, meters.
    pub tx_antenna_height_m: f64,
    /// Receive antenna height, meters.
    pub rx_antenna_height_m: f64,
}

pub const DEFAULT_ANTENNA_GAIN: f64 = 1.0;
pub const DEFAULT_PATH_LOSS_FACTOR: f64 = 1.0;
pub const DEFAULT_ANTENNA_HEIGHT_M: f64 = 1.5;

impl LinkBudget {
    /// A budget with the default gains, loss factor and heights.
    pub fn new(tx_power_w: f64, wavelength_m: f64) -> Result<Self> {
        LinkBudget {
            tx_power_w,
            tx_gain: DEFAULT_ANTENNA_GAIN,
            rx_gain: DEFAULT_ANTENNA_GAIN,
            wavelength_m,
            path_loss_factor: DEFAULT_PATH_LOSS_FACTOR,
            tx_antenna_height_m: DEFAULT_ANTENNA_HEIGHT_M,
            rx_antenna_height_m: DEFAULT_ANTENNA_HEIGHT_M,
        }
        .validated()
    }

    /// Budget for a registry protocol: its rated power and carrier wavelength.
    pub fn for_protocol(spec: &ProtocolSpec) -> Result<Self> {
        Self::new(spec.tx_power_w, spec.wavelength_m())
    }

    pub fn with_gains(mut self, tx_gain: f64, rx_gain: f64) -> Result<Self> {
        self.tx_gain = tx_gain;
        self.rx_gain = rx_gain;
        self.validated()
    }

    pub fn with_path_loss_factor(mut self, l: f64) -> Result<Self> {
        self.path_loss_factor = l;
        self.validated()
    }

    pub fn with_antenna_heights(mut self, tx_m: f64, rx_m: f64) -> Result<Self> {
        self.tx_antenna_height_m = tx_m;
        self.rx_antenna_height_m = rx_m;
        self.validated()
    }

    fn validated(self) -> Result<Self> {
        let fail = |rule: &str| {
            Err(Error::Validation {
                subject: "LinkBudget".to_string(),
                rule: rule.to_string(),
            })
        };
        if !(self.tx_power_w > 0.0) {
            return fail("tx_power_w must be > 0");
        }
        if !(self.tx_gain > 0.0 && self.rx_gain > 0.0) {
            return fail("antenna gains must be > 0");
        }
        if !(self.wavelength_m > 0.0) {
            return fail("wavelength_m must be > 0");
        }
        if !(self.path_loss_factor >= 1.0) {
            return fail("path_loss_factor must be >= 1");
        }
        if !(self.tx_antenna_height_m > 0.0 && self.rx_antenna_height_m > 0.0) {
            return fail("antenna heights must be > 0");
        }
        Ok(self)
    }
}

/// How a message splits into packets under a protocol's framing.
#[derive(Debug, Clone, PartialEq)]
pub struct PacketizationResult {
    pub packet_count: u64,
    /// packet_count x per-packet overhead, bytes (exact).
    pub total_overhead_bytes: Rational,
    /// data + total overhead, bytes (exact).
    pub total_on_air_bytes: Rational,
}

/// Split `data_bytes` into packets of at most `max_payload` bytes.
pub fn packetize(spec: &ProtocolSpec, data_bytes: u64) -> Result<PacketizationResult> {
    if data_bytes == 0 {
        return Err(Error::Domain(
            "data_bytes must be >= 1 (coding efficiency is undefined at zero)".to_string(),
        ));
    }
    let packet_count = data_bytes.div_ceil(spec.max_payload_bytes);
    let total_overhead_bytes = spec.overhead_bytes * Ratio::from_integer(packet_count as i64);
    let total_on_air_bytes = Ratio::from_integer(data_bytes as i64) + total_overhead_bytes;
    Ok(PacketizationResult {
        packet_count,
        total_overhead_bytes,
        total_on_air_bytes,
    })
}

/// Time to move `data_bytes` over the link, seconds: every on-air byte costs
/// eight bit times, plus the (usually negligible) propagation time.
pub fn transmission_time(
    spec: &ProtocolSpec,
    data_bytes: u64,
    propagation_time_s: f64,
) -> Result<f64> {
    if !(propagation_time_s >= 0.0) {
        return Err(Error::Domain("propagation_time must be >= 0".to_string()));
    }
    let on_air = packetize(spec, data_bytes)?.total_on_air_bytes;
    Ok(to_f64(&on_air) * 8.0 * spec.bit_time_us * 1e-6 + propagation_time_s)
}

/// Payload bytes as a percentage of total on-air bytes.
pub fn coding_efficiency(spec: &ProtocolSpec, data_bytes: u64) -> Result<f64> {
    let on_air = packetize(spec, data_bytes)?.total_on_air_bytes;
    Ok(100.0 * data_bytes as f64 / to_f64(&on_air))
}

/// Free-space received power, watts: P_r = P_t G_t G_r (lambda / 4 pi D)^2.
pub fn friis_received_power(link: &LinkBudget, distance_m: f64) -> Result<f64> {
    if !(distance_m > 0.0) {
        return Err(Error::Domain("distance must be > 0".to_string()));
    }
    let ratio = link.wavelength_m / (4.0 * PI * distance_m);
    Ok(link.tx_power_w * link.tx_gain * link.rx_gain * ratio * ratio)
}

/// Range at which free-space reception drops to `rx_sensitivity_w`:
/// D = (lambda / 4 pi) sqrt(P_t G_t G_r / P_r).
pub fn friis_range(link: &LinkBudget, rx_sensitivity_w: f64) -> Result<f64> {
    if !(rx_sensitivity_w > 0.0) {
        return Err(Error::Domain("rx_sensitivity must be > 0".to_string()));
    }
    let power_ratio = link.tx_power_w * link.tx_gain * link.rx_gain / rx_sensitivity_w;
    Ok(link.wavelength_m / (4.0 * PI) * power_ratio.sqrt())
}

/// Distance where the ground-reflection model takes over from free space:
/// d_c = 4 pi sqrt(L) h_t h_r / lambda.
pub fn crossover_distance(link: &LinkBudget) -> f64 {
    4.0 * PI * link.path_loss_factor.sqrt() * link.tx_antenna_height_m * link.rx_antenna_height_m
        / link.wavelength_m
}

/// Received power under the combined free-space / two-ray ground model,
/// watts. Free space with loss L below the crossover distance (reducing to
/// the plain free-space law at L = 1), h_t^2 h_r^2 / d^4 at or beyond it;
/// the branches agree exactly at the crossover.
pub fn received_power(link: &LinkBudget, distance_m: f64) -> Result<f64> {
    if !(distance_m > 0.0) {
        return Err(Error::Domain("distance must be > 0".to_string()));
    }
    if distance_m < crossover_distance(link) {
        Ok(friis_received_power(link, distance_m)? / link.path_loss_factor)
    } else {
        let gains = link.tx_power_w * link.tx_gain * link.rx_gain;
        let h2 = link.tx_antenna_height_m * link.tx_antenna_height_m;
        let r2 = link.rx_antenna_height_m * link.rx_antenna_height_m;
        Ok(gains * h2 * r2 / distance_m.powi(4))
    }
}

/// Real-time throughput, bytes per second: Th = m / (T_frame + T_backoff).
pub fn realtime_throughput(
    data_bytes: f64,
    frame_time_s: f64,
    backoff_time_s: f64,
) -> Result<f64> {
    if !(data_bytes > 0.0) {
        return Err(Error::Domain("data_amount must be > 0".to_string()));
    }
    if !(frame_time_s > 0.0) {
        return Err(Error::Domain("frame_time must be > 0".to_string()));
    }
    if !(backoff_time_s >= 0.0) {
        return Err(Error::Domain("backoff_time must be >= 0".to_string()));
    }
    Ok(data_bytes / (frame_time_s + backoff_time_s))
}

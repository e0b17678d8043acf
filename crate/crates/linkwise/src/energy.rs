//! Radio, chipset and MCU energy models, plus packet-length optimization.
//!
//! The radio model charges a fixed electronics energy per bit plus an
//! amplifier term that grows as d^2 below the threshold distance and d^4 at
//! or beyond it. The energy index couples packet length to the expected
//! retransmission count through the packet error probability and has an
//! interior maximum in the packet length; `optimal_packet_length` finds it.

use crate::error::{Error, Result};
use crate::registry::ChipsetSpec;

/// First-order radio energy parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioEnergyParams {
    /// Electronics energy per bit, J/bit.
    pub electronics_j_per_bit: f64,
    /// Free-space amplifier energy, J/bit/m^2.
    pub fs_amp_j_per_bit_m2: f64,
    /// Multipath amplifier energy, J/bit/m^4.
    pub mp_amp_j_per_bit_m4: f64,
}

impl Default for RadioEnergyParams {
    /// 50 nJ/bit electronics, 10 pJ/bit/m^2 free-space amp,
    /// 0.0013 pJ/bit/m^4 multipath amp.
    fn default() -> Self {
        RadioEnergyParams {
            electronics_j_per_bit: 50e-9,
            fs_amp_j_per_bit_m2: 10e-12,
            mp_amp_j_per_bit_m4: 0.0013e-12,
        }
    }
}

impl RadioEnergyParams {
    pub fn validate(&self) -> Result<()> {
        let fail = |rule: &str| {
            Err(Error::Validation {
                subject: "RadioEnergyParams".to_string(),
                rule: rule.to_string(),
            })
        };
        if !(self.electronics_j_per_bit > 0.0) {
            return fail("electronics_j_per_bit must be > 0");
        }
        if !(self.fs_amp_j_per_bit_m2 > 0.0) {
            return fail("fs_amp_j_per_bit_m2 must be > 0");
        }
        if !(self.mp_amp_j_per_bit_m4 > 0.0) {
            return fail("mp_amp_j_per_bit_m4 must be > 0");
        }
        if !(self.fs_amp_j_per_bit_m2 > self.mp_amp_j_per_bit_m4) {
            return fail("fs_amp_j_per_bit_m2 must exceed mp_amp_j_per_bit_m4");
        }
        Ok(())
    }
}

/// Distance where the amplifier exponent switches: d_0 = sqrt(eps_fs / eps_amp).
pub fn threshold_distance(params: &RadioEnergyParams) -> f64 {
    (params.fs_amp_j_per_bit_m2 / params.mp_amp_j_per_bit_m4).sqrt()
}

/// Energy to transmit `k_bits` over `distance_m`, joules. Free-space
/// amplifier law below the threshold distance, multipath law at or beyond
/// it; the branches agree at the threshold.
pub fn tx_energy(params: &RadioEnergyParams, k_bits: u64, distance_m: f64) -> Result<f64> {
    if k_bits == 0 {
        return Err(Error::Domain("k_bits must be >= 1".to_string()));
    }
    if !(distance_m >= 0.0) {
        return Err(Error::Domain("distance must be >= 0".to_string()));
    }
    let k = k_bits as f64;
    let amp = if distance_m < threshold_distance(params) {
        params.fs_amp_j_per_bit_m2 * distance_m * distance_m
    } else {
        params.mp_amp_j_per_bit_m4 * distance_m.powi(4)
    };
    Ok(k * amp + k * params.electronics_j_per_bit)
}

/// Transmit or receive direction for chipset figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Tx,
    Rx,
}

/// Chipset power draw, watts: supply voltage times the direction's current.
pub fn chipset_power(chipset: &ChipsetSpec, direction: Direction) -> f64 {
    let current_ma = match direction {
        Direction::Tx => chipset.tx_current_ma,
        Direction::Rx => chipset.rx_current_ma,
    };
    chipset.supply_voltage_v * current_ma * 1e-3
}

/// Energy to move one megabit at the chipset's bit rate, mJ/Mb.
pub fn normalized_energy(chipset: &ChipsetSpec, direction: Direction) -> f64 {
    chipset_power(chipset, direction) * 1e3 / chipset.bit_rate_mbps
}

/// Per-attempt energies and framing overhead for the energy index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyIndexParams {
    /// Packet overhead O, bits.
    pub overhead_bits: u64,
    /// Transceiver energy per attempt, J.
    pub transceiver_j: f64,
    /// Collision/idle/overhearing energy per attempt, J.
    pub medium_j: f64,
    /// Processing energy per attempt, J.
    pub processing_j: f64,
}

impl Default for EnergyIndexParams {
    /// O = 2 bytes, e_t = 100 nJ, e_m = 200 nJ, e_c = 100 nJ.
    fn default() -> Self {
        EnergyIndexParams {
            overhead_bits: 16,
            transceiver_j: 100e-9,
            medium_j: 200e-9,
            processing_j: 100e-9,
        }
    }
}

impl EnergyIndexParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.transceiver_j > 0.0 && self.medium_j > 0.0 && self.processing_j > 0.0) {
            return Err(Error::Validation {
                subject: "EnergyIndexParams".to_string(),
                rule: "per-attempt energies must be > 0".to_string(),
            });
        }
        Ok(())
    }

    fn attempt_energy_j(&self) -> f64 {
        self.transceiver_j + self.medium_j + self.processing_j
    }
}

/// Useful bits delivered per joule for packets of `packet_bits`, with the
/// expected attempt count 1/(1-p_e) coupled to the packet error probability:
/// E_i = (L - O) (1 - b_e)^L / (e_t + e_m + e_c).
pub fn energy_index(
    packet_bits: u64,
    bit_error_prob: f64,
    params: &EnergyIndexParams,
) -> Result<f64> {
    if packet_bits <= params.overhead_bits {
        return Err(Error::Domain(format!(
            "packet_length ({packet_bits} bits) must exceed the overhead ({} bits)",
            params.overhead_bits
        )));
    }
    if !(0.0..1.0).contains(&bit_error_prob) {
        return Err(Error::Domain(
            "bit_error_prob must lie in [0, 1)".to_string(),
        ));
    }
    let useful_bits = (packet_bits - params.overhead_bits) as f64;
    let success_prob = (packet_bits as f64 * (-bit_error_prob).ln_1p()).exp();
    Ok(useful_bits * success_prob / params.attempt_energy_j())
}

/// Literal fixed-retransmission form: E_i = (L - O) / ((1 + n_r)(e_t + e_m + e_c)).
pub fn energy_index_fixed_retx(
    packet_bits: u64,
    retransmissions: f64,
    params: &EnergyIndexParams,
) -> Result<f64> {
    if packet_bits <= params.overhead_bits {
        return Err(Error::Domain(format!(
            "packet_length ({packet_bits} bits) must exceed the overhead ({} bits)",
            params.overhead_bits
        )));
    }
    if !(retransmissions >= 0.0) {
        return Err(Error::Domain("retransmissions must be >= 0".to_string()));
    }
    let useful_bits = (packet_bits - params.overhead_bits) as f64;
    Ok(useful_bits / ((1.0 + retransmissions) * params.attempt_energy_j()))
}

/// Integer packet length maximizing the energy index for the given bit error
/// probability and overhead. Closed form L* = O - 1/ln(1 - b_e), refined over
/// the neighboring integers.
pub fn optimal_packet_length(bit_error_prob: f64, overhead_bits: u64) -> Result<u64> {
    let params = EnergyIndexParams {
        overhead_bits,
        ..EnergyIndexParams::default()
    };
    optimal_packet_length_with(bit_error_prob, &params)
}

/// As `optimal_packet_length`, against explicit index parameters.
pub fn optimal_packet_length_with(
    bit_error_prob: f64,
    params: &EnergyIndexParams,
) -> Result<u64> {
    if !(bit_error_prob > 0.0 && bit_error_prob < 1.0) {
        return Err(Error::Domain(
            "bit_error_prob must lie in (0, 1)".to_string(),
        ));
    }
    let continuous = params.overhead_bits as f64 - 1.0 / (-bit_error_prob).ln_1p();
    let anchor = continuous.floor().max(params.overhead_bits as f64) as u64;
    let mut best: Option<(u64, f64)> = None;
    for candidate in anchor.saturating_sub(2)..=anchor + 2 {
        if candidate <= params.overhead_bits {
            continue;
        }
        let value = energy_index(candidate, bit_error_prob, params)?;
        if best.is_none_or(|(_, v)| value > v) {
            best = Some((candidate, value));
        }
    }
    Ok(best.expect("candidate window always contains O+1 or larger").0)
}

/// MCU switching and leakage parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McuParams {
    /// Supply voltage V_dd, volts.
    pub supply_voltage_v: f64,
    /// Switched capacitance per executed cycle, farads.
    pub switched_capacitance_f_per_cycle: f64,
    /// Leakage current scale I_0, amperes.
    pub leakage_current_a: f64,
    /// Process constant n, dimensionless.
    pub process_constant: f64,
    /// Thermal voltage V_T, volts.
    pub thermal_voltage_v: f64,
    /// Clock frequency, hertz.
    pub clock_frequency_hz: f64,
}

impl Default for McuParams {
    /// Assumed defaults for a generic sensor-node MCU: 3 V supply,
    /// 0.67 nF switched per cycle, I_0 = 1.196 mA, n = 21.26,
    /// V_T = 26 mV (300 K), 100 MHz clock.
    fn default() -> Self {
        McuParams {
            supply_voltage_v: 3.0,
            switched_capacitance_f_per_cycle: 0.67e-9,
            leakage_current_a: 1.196e-3,
            process_constant: 21.26,
            thermal_voltage_v: 0.026,
            clock_frequency_hz: 100e6,
        }
    }
}

impl McuParams {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("supply_voltage_v", self.supply_voltage_v),
            (
                "switched_capacitance_f_per_cycle",
                self.switched_capacitance_f_per_cycle,
            ),
            ("leakage_current_a", self.leakage_current_a),
            ("process_constant", self.process_constant),
            ("thermal_voltage_v", self.thermal_voltage_v),
            ("clock_frequency_hz", self.clock_frequency_hz),
        ];
        for (field, v) in fields {
            if !(v > 0.0) {
                return Err(Error::Validation {
                    subject: "McuParams".to_string(),
                    rule: format!("{field} must be > 0"),
                });
            }
        }
        Ok(())
    }
}

/// Switching, leakage and total MCU energy for one program run, joules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McuEnergy {
    pub switch_j: f64,
    pub leakage_j: f64,
    pub total_j: f64,
}

/// E_switch = (N C) V_dd^2; E_leakage = V_dd I_0 e^(V_dd / n V_T) (N / f).
pub fn mcu_energy(params: &McuParams, cycles: u64) -> McuEnergy {
    let n = cycles as f64;
    let switch_j = n * params.switched_capacitance_f_per_cycle
        * params.supply_voltage_v
        * params.supply_voltage_v;
    let leakage_j = params.supply_voltage_v
        * params.leakage_current_a
        * (params.supply_voltage_v / (params.process_constant * params.thermal_voltage_v)).exp()
        * (n / params.clock_frequency_hz);
    McuEnergy {
        switch_j,
        leakage_j,
        total_j: switch_j + leakage_j,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::ProtocolRegistry;
    use proptest::prelude::*;

    #[test]
    fn threshold_distance_default_is_87_71_m() {
        let d0 = threshold_distance(&RadioEnergyParams::default());
        assert!((d0 - 87.705_801_930_702_92).abs() < 1e-9, "got {d0}");
    }

    #[test]
    fn threshold_distance_is_scale_invariant() {
        let mut p = RadioEnergyParams::default();
        let d0 = threshold_distance(&p);
        p.fs_amp_j_per_bit_m2 *= 7.0;
        p.mp_amp_j_per_bit_m4 *= 7.0;
        assert!((threshold_distance(&p) - d0).abs() < 1e-9);
        let unit = RadioEnergyParams {
            electronics_j_per_bit: 1e-9,
            fs_amp_j_per_bit_m2: 5e-12,
            mp_amp_j_per_bit_m4: 5e-12,
        };
        assert_eq!(threshold_distance(&unit), 1.0);
    }

    #[test]
    fn tx_energy_reference_points() {
        let p = RadioEnergyParams::default();
        // free-space branch: 25 uJ amp + 50 uJ electronics
        let near = tx_energy(&p, 1000, 50.0).unwrap();
        assert!((near - 75e-6).abs() < 1e-18, "got {near}");
        // multipath branch: 130 uJ amp + 50 uJ electronics
        let far = tx_energy(&p, 1000, 100.0).unwrap();
        assert!((far - 180e-6).abs() < 1e-16, "got {far}");
        // electronics only at zero distance
        let zero = tx_energy(&p, 1000, 0.0).unwrap();
        assert_eq!(zero, 1000.0 * p.electronics_j_per_bit);
    }

    #[test]
    fn tx_energy_branches_agree_at_threshold() {
        let p = RadioEnergyParams::default();
        let d0 = threshold_distance(&p);
        let free = 1000.0 * (p.fs_amp_j_per_bit_m2 * d0 * d0 + p.electronics_j_per_bit);
        let multi = tx_energy(&p, 1000, d0).unwrap();
        assert!((free - multi).abs() / multi < 1e-12);
    }

    #[test]
    fn chipset_power_reference_products() {
        let reg = ProtocolRegistry::defaults();
        let power =
            |name: &str, dir| chipset_power(reg.chipset(name).unwrap(), dir);
        assert!((power("Bluetooth", Direction::Tx) - 0.1026).abs() < 1e-12);
        assert!((power("GPRS", Direction::Tx) - 1.05).abs() < 1e-12);
        let zigbee_tx = power("ZigBee", Direction::Tx);
        assert!((zigbee_tx - 0.0741).abs() < 1e-12);
        for entry in reg.iter() {
            let p = chipset_power(entry.chipset.as_ref().unwrap(), Direction::Tx);
            assert!(p >= zigbee_tx, "{} below ZigBee", entry.protocol.name);
        }
    }

    #[test]
    fn normalized_energy_reference_values_and_grouping() {
        let reg = ProtocolRegistry::defaults();
        let norm = |name: &str| normalized_energy(reg.chipset(name).unwrap(), Direction::Tx);
        assert!((norm("UWB") - 749.1 / 114.0).abs() < 1e-9);
        assert!((norm("Bluetooth") - 142.5).abs() < 1e-9);
        // high-rate protocols move a megabit for less than the low-rate ones
        for fast in ["UWB", "Wi-Fi", "Wi-Max"] {
            for slow in ["Bluetooth", "ZigBee", "GPRS"] {
                assert!(norm(fast) < norm(slow), "{fast} !< {slow}");
            }
        }
    }

    #[test]
    fn normalized_energy_times_rate_recovers_power() {
        let reg = ProtocolRegistry::defaults();
        for entry in reg.iter() {
            let c = entry.chipset.as_ref().unwrap();
            for dir in [Direction::Tx, Direction::Rx] {
                let round_trip = normalized_energy(c, dir) * c.bit_rate_mbps * 1e-3;
                assert!((round_trip - chipset_power(c, dir)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn energy_index_is_linear_when_error_free() {
        let p = EnergyIndexParams::default();
        let e1 = energy_index(116, 0.0, &p).unwrap();
        let e2 = energy_index(216, 0.0, &p).unwrap();
        // (L - O) / 400 nJ
        assert!((e1 - 100.0 / 400e-9).abs() < 1e-3);
        assert!((e2 - 200.0 / 400e-9).abs() < 1e-3);
        assert!((e2 / e1 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn energy_index_rejects_bad_domains() {
        let p = EnergyIndexParams::default();
        assert!(matches!(energy_index(16, 1e-3, &p), Err(Error::Domain(_))));
        assert!(matches!(energy_index(10, 1e-3, &p), Err(Error::Domain(_))));
        assert!(matches!(energy_index(100, 1.0, &p), Err(Error::Domain(_))));
        assert!(matches!(
            optimal_packet_length(0.0, 16),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            optimal_packet_length(1.0, 16),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn fixed_retransmission_form_is_linear_in_length() {
        let p = EnergyIndexParams::default();
        let e1 = energy_index_fixed_retx(116, 3.0, &p).unwrap();
        let e2 = energy_index_fixed_retx(216, 3.0, &p).unwrap();
        assert!((e1 - 100.0 / (4.0 * 400e-9)).abs() < 1e-3);
        assert!((e2 / e1 - 2.0).abs() < 1e-12);
    }

    /// Exhaustive grid search, the independent oracle for the optimizer.
    fn grid_search_optimum(bit_error_prob: f64, params: &EnergyIndexParams) -> u64 {
        let mut best = (params.overhead_bits + 1, f64::NEG_INFINITY);
        for l in params.overhead_bits + 1..=100_000 {
            let v = energy_index(l, bit_error_prob, params).unwrap();
            if v > best.1 {
                best = (l, v);
            }
        }
        best.0
    }

    #[test]
    fn optimal_length_matches_grid_search_oracle() {
        for b in [1e-2, 1e-3, 1e-4] {
            for overhead in [16u64, 32] {
                let params = EnergyIndexParams {
                    overhead_bits: overhead,
                    ..EnergyIndexParams::default()
                };
                let fast = optimal_packet_length(b, overhead).unwrap();
                let oracle = grid_search_optimum(b, &params);
                assert!(
                    fast.abs_diff(oracle) <= 1,
                    "b={b} O={overhead}: fast={fast} oracle={oracle}"
                );
            }
        }
    }

    #[test]
    fn optimal_length_reference_values_and_monotonicity() {
        let l = optimal_packet_length(1e-3, 16).unwrap();
        assert!(l == 1015 || l == 1016, "got {l}");
        let small_b = optimal_packet_length(1e-4, 16).unwrap();
        assert!(small_b.abs_diff(10_016) <= 1, "got {small_b}");
        assert!(small_b > l);
        assert!(optimal_packet_length(1e-3, 32).unwrap() > l);
    }

    #[test]
    fn mcu_energy_reference_point_and_zero_cycles() {
        let p = McuParams::default();
        let zero = mcu_energy(&p, 0);
        assert_eq!((zero.switch_j, zero.leakage_j, zero.total_j), (0.0, 0.0, 0.0));
        // 3 x 1.196 mA x e^(3 / (21.26 x 26 mV)) x 10 ms = 8.164 mJ
        let run = mcu_energy(&p, 1_000_000);
        assert!(
            (run.leakage_j - 8.164_006_027_592_204e-3).abs() / run.leakage_j < 1e-12,
            "got {}",
            run.leakage_j
        );
        assert!((run.switch_j - 6.03e-3).abs() < 1e-15);
        assert_eq!(run.total_j, run.switch_j + run.leakage_j);
    }

    #[test]
    fn halving_clock_doubles_leakage_only() {
        let p = McuParams::default();
        let half = McuParams {
            clock_frequency_hz: p.clock_frequency_hz / 2.0,
            ..p
        };
        let base = mcu_energy(&p, 123_456);
        let slow = mcu_energy(&half, 123_456);
        assert!((slow.leakage_j / base.leakage_j - 2.0).abs() < 1e-12);
        assert_eq!(slow.switch_j, base.switch_j);
    }

    proptest! {
        #[test]
        fn tx_energy_linear_in_bits(k in 1u64..100_000, d in 0.0f64..500.0) {
            let p = RadioEnergyParams::default();
            let one = tx_energy(&p, 1, d).unwrap();
            let many = tx_energy(&p, k, d).unwrap();
            prop_assert!((many - k as f64 * one).abs() / many < 1e-12);
        }

        #[test]
        fn tx_energy_nondecreasing_in_distance(d in 0.0f64..499.0, step in 0.001f64..1.0) {
            let p = RadioEnergyParams::default();
            let near = tx_energy(&p, 1000, d).unwrap();
            let far = tx_energy(&p, 1000, d + step).unwrap();
            prop_assert!(far >= near);
        }

        #[test]
        fn energy_index_has_interior_maximum(exp in 1.0f64..4.0) {
            // rising before the optimum, falling after it
            let b = 10f64.powf(-exp);
            let p = EnergyIndexParams::default();
            let l = optimal_packet_length(b, 16).unwrap();
            let at = energy_index(l, b, &p).unwrap();
            prop_assert!(energy_index(l.saturating_sub(5).max(17), b, &p).unwrap() <= at);
            prop_assert!(energy_index(l + 5, b, &p).unwrap() <= at);
        }

        #[test]
        fn mcu_total_strictly_increasing_in_cycles(n in 1u64..1_000_000) {
            let p = McuParams::default();
            prop_assert!(mcu_energy(&p, n + 1).total_j > mcu_energy(&p, n).total_j);
        }
    }
}

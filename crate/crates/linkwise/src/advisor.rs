//! Protocol recommendation for an application profile.
//!
//! Ranks every registry protocol by a documented weighted score over three
//! graded features, after a hard data-rate feasibility filter:
//!
//! - **rate filter**: a protocol whose peak rate is below the required rate
//!   scores zero outright;
//! - **energy**: rank-based. Below the low-rate threshold the ranking uses
//!   chipset transmit power (an always-on low-rate radio is dominated by
//!   its power draw); above it, normalized transmit energy in mJ/Mb (what
//!   matters when the link runs at speed);
//! - **range**: fraction of the required range reached by the free-space
//!   model at the protocol's rated power, relative to the best reach in
//!   the registry when no protocol meets the requirement;
//! - **efficiency**: coding efficiency at the profile's message size.
//!
//! Ties break toward lower normalized transmit energy, then name order.
//! The qualitative selection rules are attached to the ranking as
//! citations, not scored.

use crate::energy::{chipset_power, normalized_energy, Direction};
use crate::error::{Error, Result};
use crate::link::{coding_efficiency, friis_range, LinkBudget};
use crate::registry::ProtocolRegistry;
use serde::Serialize;

/// Application classes with distinct needs profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ApplicationClass {
    EnvironmentalMonitoring,
    EventDetection,
    Tracking,
    Custom,
}

impl ApplicationClass {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_lowercase().replace(['-', '_'], "").as_str() {
            "environmentalmonitoring" | "environmental" | "monitoring" => {
                Ok(ApplicationClass::EnvironmentalMonitoring)
            }
            "eventdetection" | "event" => Ok(ApplicationClass::EventDetection),
            "tracking" => Ok(ApplicationClass::Tracking),
            "custom" => Ok(ApplicationClass::Custom),
            other => Err(Error::Domain(format!(
                "unknown application class `{other}`; expected environmental_monitoring, \
                 event_detection, tracking or custom"
            ))),
        }
    }

    /// Needs carried by the class that have no protocol-level data and are
    /// surfaced as advisory notes rather than scored.
    fn notes(&self) -> &'static [&'static str] {
        match self {
            ApplicationClass::EnvironmentalMonitoring => &[
                "needs periodic measurements of small data volumes, a long battery life and a permanent connection",
            ],
            ApplicationClass::EventDetection => &[
                "needs prioritized alert messages with delivery confirmation, small data volumes and a permanent connection",
            ],
            ApplicationClass::Tracking => &[
                "needs mobility and localization with small data volumes and a permanent connection",
            ],
            ApplicationClass::Custom => &[],
        }
    }
}

/// What the application asks of the link.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApplicationProfile {
    pub application_class: ApplicationClass,
    /// Required data rate, bits per second.
    pub required_data_rate_bps: f64,
    /// Required range, meters.
    pub required_range_m: f64,
    pub battery_constrained: bool,
    /// Message size the application typically sends, bytes.
    pub data_size_per_message_bytes: u64,
}

impl ApplicationProfile {
    pub fn validate(&self) -> Result<()> {
        let fail = |rule: &str| {
            Err(Error::Validation {
                subject: "ApplicationProfile".to_string(),
                rule: rule.to_string(),
            })
        };
        if !(self.required_data_rate_bps > 0.0) {
            return fail("required_data_rate must be > 0");
        }
        if !(self.required_range_m > 0.0) {
            return fail("required_range must be > 0");
        }
        if self.data_size_per_message_bytes < 1 {
            return fail("data_size_per_message must be >= 1 byte");
        }
        Ok(())
    }
}

/// Feature weights for one scoring mode; they sum to 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeatureWeights {
    pub energy: f64,
    pub range: f64,
    pub efficiency: f64,
}

/// Tunable scoring configuration with the documented defaults.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdvisorConfig {
    /// Weights when the profile is battery constrained.
    pub battery_weights: FeatureWeights,
    /// Weights otherwise.
    pub default_weights: FeatureWeights,
    /// Receiver sensitivity for the range feature, watts.
    pub rx_sensitivity_w: f64,
    /// Below this required rate the energy feature ranks chipset power;
    /// above it, normalized energy per megabit.
    pub low_rate_threshold_bps: f64,
    /// Required range at or above which the wide-area rule fires, meters.
    pub wide_area_range_m: f64,
    /// Message size at or below which the small-telemetry rule fires, bytes.
    pub small_message_bytes: u64,
}

impl Default for AdvisorConfig {
    fn default() -> Self {
        AdvisorConfig {
            battery_weights: FeatureWeights {
                energy: 0.4,
                range: 0.35,
                efficiency: 0.25,
            },
            default_weights: FeatureWeights {
                energy: 0.25,
                range: 0.45,
                efficiency: 0.3,
            },
            rx_sensitivity_w: 1e-9,
            low_rate_threshold_bps: 1e6,
            wide_area_range_m: 1000.0,
            small_message_bytes: 16,
        }
    }
}

/// One ranked protocol with its score breakdown and fired rules.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedProtocol {
    pub name: String,
    /// Weighted score in [0, 1]; exactly 0 for rate-infeasible protocols.
    pub score: f64,
    pub rate_feasible: bool,
    pub feature_energy: f64,
    pub feature_range: f64,
    pub feature_efficiency: f64,
    /// Free-space reach at the protocol's rated power, meters.
    pub achieved_range_m: f64,
    /// Normalized transmit energy, mJ/Mb, when chipset data exists.
    pub normalized_tx_energy_mj_per_mb: Option<f64>,
    /// Selection rules that fired for this protocol.
    pub rules: Vec<String>,
}

/// Deterministic ranking of every registry protocol for a profile.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Recommendation {
    pub profile: ApplicationProfile,
    pub battery_constrained: bool,
    /// Ranked entries, scores nonincreasing; every registry protocol
    /// appears exactly once.
    pub entries: Vec<RankedProtocol>,
    /// Unscored needs surfaced from the application class.
    pub notes: Vec<String>,
}

/// Rank the registry protocols for a profile with the default configuration.
pub fn recommend(
    profile: &ApplicationProfile,
    registry: &ProtocolRegistry,
) -> Result<Recommendation> {
    recommend_with(profile, registry, &AdvisorConfig::default())
}

/// Rank with an explicit configuration.
pub fn recommend_with(
    profile: &ApplicationProfile,
    registry: &ProtocolRegistry,
    config: &AdvisorConfig,
) -> Result<Recommendation> {
    profile.validate()?;
    if registry.is_empty() {
        return Err(Error::Domain("registry has no protocols".to_string()));
    }

    let low_rate = profile.required_data_rate_bps <= config.low_rate_threshold_bps;

    // per-protocol raw quantities, in registry order
    struct Raw {
        name: String,
        feasible: bool,
        reach_m: f64,
        efficiency: f64,
        chipset_tx_power_w: Option<f64>,
        norm_tx_energy: Option<f64>,
    }
    let mut raws = Vec::with_capacity(registry.len());
    for entry in registry.iter() {
        let spec = &entry.protocol;
        let link = LinkBudget::for_protocol(spec)?;
        raws.push(Raw {
            name: spec.name.clone(),
            feasible: spec.max_data_rate_mbps * 1e6 >= profile.required_data_rate_bps,
            reach_m: friis_range(&link, config.rx_sensitivity_w)?,
            efficiency: coding_efficiency(spec, profile.data_size_per_message_bytes)?,
            chipset_tx_power_w: entry
                .chipset
                .as_ref()
                .map(|c| chipset_power(c, Direction::Tx)),
            norm_tx_energy: entry
                .chipset
                .as_ref()
                .map(|c| normalized_energy(c, Direction::Tx)),
        });
    }

    // energy feature: 1.0 for the best-ranked chipset down to 0.0 for the
    // worst; protocols without chipset data score 0
    let energy_key = |r: &Raw| -> Option<f64> {
        if low_rate {
            r.chipset_tx_power_w
        } else {
            r.norm_tx_energy
        }
    };
    let mut keyed: Vec<(usize, f64)> = raws
        .iter()
        .enumerate()
        .filter_map(|(i, r)| energy_key(r).map(|k| (i, k)))
        .collect();
    keyed.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap().then(a.0.cmp(&b.0)));
    let mut energy_feature = vec![0.0; raws.len()];
    let ranked_count = keyed.len();
    for (rank, (idx, _)) in keyed.iter().enumerate() {
        energy_feature[*idx] = if ranked_count > 1 {
            1.0 - rank as f64 / (ranked_count - 1) as f64
        } else {
            1.0
        };
    }

    // range feature: credit against the requirement, or against the best
    // achievable reach when nothing meets the requirement
    let best_reach = raws.iter().map(|r| r.reach_m).fold(0.0, f64::max);
    let range_target = profile.required_range_m.min(best_reach).max(f64::MIN_POSITIVE);

    let weights = if profile.battery_constrained {
        config.battery_weights
    } else {
        config.default_weights
    };

    let mut entries: Vec<RankedProtocol> = raws
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let feature_energy = energy_feature[i];
            let feature_range = (r.reach_m / range_target).min(1.0);
            let feature_efficiency = r.efficiency / 100.0;
            let score = if r.feasible {
                weights.energy * feature_energy
                    + weights.range * feature_range
                    + weights.efficiency * feature_efficiency
            } else {
                0.0
            };
            RankedProtocol {
                name: r.name.clone(),
                score,
                rate_feasible: r.feasible,
                feature_energy,
                feature_range,
                feature_efficiency,
                achieved_range_m: r.reach_m,
                normalized_tx_energy_mj_per_mb: r.norm_tx_energy,
                rules: fired_rules(&r.name, profile, config, low_rate, r.feasible),
            }
        })
        .collect();

    entries.sort_by(|a, b| {
        b.score
            .partial_cmp(&a.score)
            .unwrap()
            .then_with(|| {
                let energy = |e: &RankedProtocol| {
                    e.normalized_tx_energy_mj_per_mb.unwrap_or(f64::INFINITY)
                };
                energy(a).partial_cmp(&energy(b)).unwrap()
            })
            .then_with(|| a.name.cmp(&b.name))
    });

    Ok(Recommendation {
        profile: *profile,
        battery_constrained: profile.battery_constrained,
        entries,
        notes: profile
            .application_class
            .notes()
            .iter()
            .map(|s| s.to_string())
            .collect(),
    })
}

/// Qualitative selection rules, attached as citations.
fn fired_rules(
    name: &str,
    profile: &ApplicationProfile,
    config: &AdvisorConfig,
    low_rate: bool,
    feasible: bool,
) -> Vec<String> {
    let mut rules = Vec::new();
    let is = |n: &str| name.eq_ignore_ascii_case(n);
    if !feasible {
        rules.push(format!(
            "peak data rate below the required {} b/s; excluded by the rate filter",
            profile.required_data_rate_bps
        ));
        return rules;
    }
    if low_rate && profile.battery_constrained && (is("Bluetooth") || is("ZigBee")) {
        rules.push(
            "low-rate battery-powered sensing favors Bluetooth and ZigBee for their low \
             chipset power draw"
                .to_string(),
        );
    }
    if !low_rate && (is("UWB") || is("Wi-Fi") || is("Wi-Max")) {
        rules.push(
            "high data rates favor UWB, Wi-Fi and Wi-Max for their low normalized energy \
             per megabit"
                .to_string(),
        );
    }
    if profile.required_range_m >= config.wide_area_range_m && is("GPRS") {
        rules.push(
            "wide-area coverage with low data rates favors GPRS for its reach".to_string(),
        );
    }
    if profile.required_range_m >= config.wide_area_range_m && is("Wi-Max") {
        rules.push("large coverage zones also suit Wi-Max".to_string());
    }
    if profile.data_size_per_message_bytes <= config.small_message_bytes
        && (is("Bluetooth") || is("ZigBee") || is("GPRS"))
    {
        rules.push(
            "small telemetry messages favor Bluetooth, ZigBee and GPRS at modest rates"
                .to_string(),
        );
    }
    rules
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{load_registry, ProtocolRegistry};

    fn profile(rate_bps: f64, range_m: f64, battery: bool) -> ApplicationProfile {
        ApplicationProfile {
            application_class: ApplicationClass::Custom,
            required_data_rate_bps: rate_bps,
            required_range_m: range_m,
            battery_constrained: battery,
            data_size_per_message_bytes: 100,
        }
    }

    #[test]
    fn low_rate_battery_short_range_puts_zigbee_and_bluetooth_on_top() {
        let reg = ProtocolRegistry::defaults();
        let rec = recommend(&profile(20_000.0, 50.0, true), &reg).unwrap();
        let top2: Vec<&str> = rec.entries[..2].iter().map(|e| e.name.as_str()).collect();
        assert!(top2.contains(&"Bluetooth") && top2.contains(&"ZigBee"), "{top2:?}");
    }

    #[test]
    fn high_rate_keeps_only_the_fast_three() {
        let reg = ProtocolRegistry::defaults();
        let rec = recommend(&profile(50e6, 30.0, false), &reg).unwrap();
        let survivors: Vec<&str> = rec
            .entries
            .iter()
            .filter(|e| e.score > 0.0)
            .map(|e| e.name.as_str())
            .collect();
        assert_eq!(survivors.len(), 3);
        for name in ["UWB", "Wi-Fi", "Wi-Max"] {
            assert!(survivors.contains(&name), "{name} missing from {survivors:?}");
        }
        // the filtered ones carry the exclusion rule
        for e in rec.entries.iter().filter(|e| !e.rate_feasible) {
            assert_eq!(e.score, 0.0);
            assert!(e.rules[0].contains("rate filter"));
        }
    }

    #[test]
    fn wide_area_low_rate_puts_gprs_first() {
        let reg = ProtocolRegistry::defaults();
        for range in [5_000.0, 10_000.0] {
            let rec = recommend(&profile(20_000.0, range, false), &reg).unwrap();
            assert_eq!(rec.entries[0].name, "GPRS", "at {range} m");
            assert!(rec.entries[0]
                .rules
                .iter()
                .any(|r| r.contains("wide-area")));
        }
    }

    #[test]
    fn scores_are_nonincreasing_and_cover_every_protocol() {
        let reg = ProtocolRegistry::defaults();
        let rec = recommend(&profile(100_000.0, 200.0, true), &reg).unwrap();
        assert_eq!(rec.entries.len(), reg.len());
        for pair in rec.entries.windows(2) {
            assert!(pair[0].score >= pair[1].score);
        }
        let mut names: Vec<&str> = rec.entries.iter().map(|e| e.name.as_str()).collect();
        names.sort_unstable();
        let mut expected = reg.names();
        expected.sort_unstable();
        assert_eq!(names, expected.iter().map(String::as_str).collect::<Vec<_>>());
    }

    #[test]
    fn no_infeasible_protocol_scores_above_zero() {
        let reg = ProtocolRegistry::defaults();
        for rate in [1e6, 10e6, 60e6, 200e6] {
            let rec = recommend(&profile(rate, 100.0, true), &reg).unwrap();
            for e in &rec.entries {
                if !e.rate_feasible {
                    assert_eq!(e.score, 0.0, "{} at {rate}", e.name);
                }
            }
        }
    }

    #[test]
    fn identical_inputs_give_identical_rankings() {
        let reg = ProtocolRegistry::defaults();
        let p = profile(250_000.0, 80.0, true);
        let first = recommend(&p, &reg).unwrap();
        for _ in 0..100 {
            assert_eq!(recommend(&p, &reg).unwrap(), first);
        }
    }

    #[test]
    fn protocols_tied_on_other_features_order_by_normalized_energy() {
        // two synthetic protocols identical in every scored respect except
        // chipset draw at equal bit rate, so normalized energy must decide
        // (against name order: BetaRadio draws less than AlphaRadio)
        let doc = "\
AlphaRadio\t1\t1\t100\t10\t2.4e9\t0.05\t8\tStar\tMesh\tchipset=A1,3.0,100,40,1\n\
BetaRadio\t1\t1\t100\t10\t2.4e9\t0.05\t8\tStar\tMesh\tchipset=B1,3.0,50,40,1\n";
        let reg = load_registry(Some(doc)).unwrap();
        for battery in [false, true] {
            let rec = recommend(&profile(500_000.0, 10.0, battery), &reg).unwrap();
            let alpha = rec.entries.iter().position(|e| e.name == "AlphaRadio").unwrap();
            let beta = rec.entries.iter().position(|e| e.name == "BetaRadio").unwrap();
            assert!(beta < alpha, "battery={battery}");
        }
    }

    #[test]
    fn class_notes_are_surfaced_not_scored() {
        let reg = ProtocolRegistry::defaults();
        let mut p = profile(20_000.0, 50.0, true);
        p.application_class = ApplicationClass::Tracking;
        let with_class = recommend(&p, &reg).unwrap();
        assert!(with_class.notes[0].contains("mobility"));
        p.application_class = ApplicationClass::Custom;
        let without = recommend(&p, &reg).unwrap();
        assert!(without.notes.is_empty());
        // scores unaffected by the class
        for (a, b) in with_class.entries.iter().zip(&without.entries) {
            assert_eq!(a.score, b.score);
        }
    }

    #[test]
    fn invalid_profiles_are_rejected() {
        let reg = ProtocolRegistry::defaults();
        let mut p = profile(0.0, 50.0, false);
        assert!(recommend(&p, &reg).is_err());
        p.required_data_rate_bps = 1.0;
        p.required_range_m = 0.0;
        assert!(recommend(&p, &reg).is_err());
        p.required_range_m = 50.0;
        p.data_size_per_message_bytes = 0;
        assert!(recommend(&p, &reg).is_err());
    }
}

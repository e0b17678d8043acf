//! Rank the protocols for three application profiles.
//!
//! ```bash
//! cargo run --example recommend
//! ```

use linkwise::advisor::{recommend, ApplicationClass, ApplicationProfile};
use linkwise::registry::load_registry;

fn main() {
    let registry = load_registry(None).unwrap();

    let profiles = [
        (
            "battery-powered environmental monitoring, 20 kb/s within 50 m",
            ApplicationProfile {
                application_class: ApplicationClass::EnvironmentalMonitoring,
                required_data_rate_bps: 20e3,
                required_range_m: 50.0,
                battery_constrained: true,
                data_size_per_message_bytes: 8,
            },
        ),
        (
            "video monitoring, 50 Mb/s within 30 m",
            ApplicationProfile {
                application_class: ApplicationClass::Custom,
                required_data_rate_bps: 50e6,
                required_range_m: 30.0,
                battery_constrained: false,
                data_size_per_message_bytes: 1_000,
            },
        ),
        (
            "border tracking, 20 kb/s across 10 km",
            ApplicationProfile {
                application_class: ApplicationClass::Tracking,
                required_data_rate_bps: 20e3,
                required_range_m: 10_000.0,
                battery_constrained: false,
                data_size_per_message_bytes: 32,
            },
        ),
    ];

    for (label, profile) in profiles {
        let rec = recommend(&profile, &registry).unwrap();
        println!("{label}:");
        for (i, e) in rec.entries.iter().enumerate() {
            println!(
                "  {}. {:<10} score {:.4}{}",
                i + 1,
                e.name,
                e.score,
                if e.rate_feasible { "" } else { "  (rate infeasible)" }
            );
            for rule in &e.rules {
                println!("       - {rule}");
            }
        }
        for note in &rec.notes {
            println!("  note: {note}");
        }
        println!();
    }
}

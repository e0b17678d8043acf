//! Free-space coverage: how far each protocol reaches a -60 dBm receiver,
//! and how range shrinks as the carrier frequency climbs.
//!
//! ```bash
//! cargo run --example coverage_range
//! ```

use linkwise::link::{friis_range, LinkBudget};
use linkwise::registry::{load_registry, SPEED_OF_LIGHT_M_S};

fn main() {
    let registry = load_registry(None).unwrap();
    let sensitivity_w = 1e-9; // -60 dBm

    println!("reach at rated power against a 1 nW receiver:\n");
    for entry in registry.iter() {
        let spec = &entry.protocol;
        let link = LinkBudget::for_protocol(spec).unwrap();
        let range = friis_range(&link, sensitivity_w).unwrap();
        println!(
            "  {:<10} {:>7.3} W at {:>4.2} GHz -> {:>8.1} m",
            spec.name,
            spec.tx_power_w,
            spec.carrier_frequency_hz / 1e9,
            range
        );
    }

    println!("\nrange of a fixed 1 W transmitter vs carrier frequency:\n");
    for ghz in [0.4, 0.9, 1.5, 2.4, 3.1, 3.5, 5.0] {
        let link = LinkBudget::new(1.0, SPEED_OF_LIGHT_M_S / (ghz * 1e9)).unwrap();
        let range = friis_range(&link, sensitivity_w).unwrap();
        println!("  {ghz:>4.1} GHz -> {range:>7.1} m");
    }
}

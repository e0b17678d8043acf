//! Received power over distance: free space close in, ground-reflection
//! d^-4 falloff past the crossover distance.
//!
//! ```bash
//! cargo run --example received_power
//! ```

use linkwise::link::{crossover_distance, received_power, LinkBudget};
use linkwise::registry::load_registry;

fn dbm(power_w: f64) -> f64 {
    10.0 * (power_w * 1e3).log10()
}

fn main() {
    let registry = load_registry(None).unwrap();

    println!("crossover distances (1.5 m antennas):");
    for entry in registry.iter() {
        let link = LinkBudget::for_protocol(&entry.protocol).unwrap();
        println!(
            "  {:<10} {:>6.1} m",
            entry.protocol.name,
            crossover_distance(&link)
        );
    }

    println!("\nreceived power (dBm) over distance:");
    print!("{:<10}", "d(m)");
    for entry in registry.iter() {
        print!(" {:>10}", entry.protocol.name);
    }
    println!();
    for d in [1.0, 10.0, 50.0, 100.0, 226.0, 300.0, 500.0] {
        print!("{d:<10}");
        for entry in registry.iter() {
            let link = LinkBudget::for_protocol(&entry.protocol).unwrap();
            print!(" {:>10.1}", dbm(received_power(&link, d).unwrap()));
        }
        println!();
    }
}

//! Chipset power draw and the energy cost of moving one megabit.
//!
//! Low-rate radios draw the least power; high-rate radios move data for
//! the least energy per bit. Both views matter when picking a protocol.
//!
//! ```bash
//! cargo run --example chipset_energy
//! ```

use linkwise::energy::{chipset_power, normalized_energy, Direction};
use linkwise::registry::load_registry;

fn main() {
    let registry = load_registry(None).unwrap();

    println!(
        "{:<10} {:<12} {:>10} {:>10} {:>14} {:>14}",
        "protocol", "chipset", "P_tx(mW)", "P_rx(mW)", "tx(mJ/Mb)", "rx(mJ/Mb)"
    );
    for entry in registry.iter() {
        let c = entry.chipset.as_ref().unwrap();
        println!(
            "{:<10} {:<12} {:>10.1} {:>10.1} {:>14.2} {:>14.2}",
            c.protocol_name,
            c.chipset_name,
            chipset_power(c, Direction::Tx) * 1e3,
            chipset_power(c, Direction::Rx) * 1e3,
            normalized_energy(c, Direction::Tx),
            normalized_energy(c, Direction::Rx),
        );
    }
}

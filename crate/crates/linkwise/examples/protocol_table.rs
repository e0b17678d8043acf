//! Load the embedded protocol registry and print its contents.
//!
//! ```bash
//! cargo run --example protocol_table
//! ```

use linkwise::rational::format_rational;
use linkwise::registry::load_registry;

fn main() {
    let registry = load_registry(None).expect("embedded registry loads");

    println!(
        "{:<10} {:>11} {:>13} {:>11} {:>12} {:>10} {:>8} {:>7}",
        "protocol", "rate(Mb/s)", "bit_time(us)", "payload(B)", "overhead(B)", "freq(GHz)", "P_tx(W)", "nodes"
    );
    for entry in registry.iter() {
        let p = &entry.protocol;
        println!(
            "{:<10} {:>11} {:>13} {:>11} {:>12} {:>10} {:>8} {:>7}   {} / {}",
            p.name,
            p.max_data_rate_mbps,
            p.bit_time_us,
            p.max_payload_bytes,
            format_rational(&p.overhead_bytes),
            p.carrier_frequency_hz / 1e9,
            p.tx_power_w,
            p.max_cell_nodes,
            p.basic_cell,
            p.cell_extension,
        );
    }

    println!("\nchipsets:");
    for entry in registry.iter() {
        if let Some(c) = &entry.chipset {
            println!(
                "  {:<10} {:<12} V_dd={} V  I_tx={} mA  I_rx={} mA  rate={} Mb/s",
                c.protocol_name, c.chipset_name, c.supply_voltage_v, c.tx_current_ma, c.rx_current_ma, c.bit_rate_mbps
            );
        }
    }
}

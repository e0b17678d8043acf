//! Transmission time and packetization across all protocols for one message.
//!
//! ```bash
//! cargo run --example transmission_time
//! ```

use linkwise::link::{packetize, transmission_time};
use linkwise::rational::to_f64;
use linkwise::registry::load_registry;

fn main() {
    let registry = load_registry(None).unwrap();
    let data_bytes = 10_000;

    println!("message of {data_bytes} bytes, propagation time neglected\n");
    println!(
        "{:<10} {:>8} {:>14} {:>14} {:>12}",
        "protocol", "packets", "overhead(B)", "on air(B)", "time"
    );
    for entry in registry.iter() {
        let spec = &entry.protocol;
        let packets = packetize(spec, data_bytes).unwrap();
        let t = transmission_time(spec, data_bytes, 0.0).unwrap();
        let time = if t >= 1.0 {
            format!("{t:.3} s")
        } else if t >= 1e-3 {
            format!("{:.3} ms", t * 1e3)
        } else {
            format!("{:.1} us", t * 1e6)
        };
        println!(
            "{:<10} {:>8} {:>14.2} {:>14.2} {:>12}",
            spec.name,
            packets.packet_count,
            to_f64(&packets.total_overhead_bytes),
            to_f64(&packets.total_on_air_bytes),
            time,
        );
    }
}

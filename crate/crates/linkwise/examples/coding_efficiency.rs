//! Coding efficiency as the message grows, and its per-protocol ceiling.
//!
//! ```bash
//! cargo run --example coding_efficiency
//! ```

use linkwise::link::coding_efficiency;
use linkwise::registry::load_registry;

fn main() {
    let registry = load_registry(None).unwrap();
    let sizes = [10u64, 100, 1_000, 10_000, 100_000];

    print!("{:<10}", "protocol");
    for s in sizes {
        print!(" {s:>9} B");
    }
    println!(" {:>10}", "ceiling");
    for entry in registry.iter() {
        let spec = &entry.protocol;
        print!("{:<10}", spec.name);
        for s in sizes {
            print!(" {:>9.2}%", coding_efficiency(spec, s).unwrap());
        }
        // efficiency approaches payload/(payload+overhead) for large messages
        let ceiling = 100.0 * spec.max_payload_bytes as f64
            / (spec.max_payload_bytes as f64 + spec.overhead_bytes_f64());
        println!(" {ceiling:>9.2}%");
    }
}

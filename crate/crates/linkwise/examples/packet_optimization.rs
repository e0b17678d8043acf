//! Packet error probability and the energy-optimal packet length.
//!
//! Longer packets amortize the header but fail more often; the energy
//! index peaks at an interior length that grows as the channel improves.
//!
//! ```bash
//! cargo run --example packet_optimization
//! ```

use linkwise::ber::packet_error_probability;
use linkwise::energy::{energy_index, optimal_packet_length, EnergyIndexParams};

fn main() {
    println!("packet error probability, b_e = 1e-3:");
    for bits in [10u64, 100, 500, 1_000, 2_000, 5_000, 10_000] {
        println!(
            "  L = {bits:>6} bits -> p_e = {:.5}",
            packet_error_probability(1e-3, bits).unwrap()
        );
    }

    let params = EnergyIndexParams::default();
    println!(
        "\nenergy index around the optimum (b_e = 1e-3, O = {} bits):",
        params.overhead_bits
    );
    for bits in [100u64, 500, 1_000, 1_015, 1_500, 3_000, 10_000] {
        println!(
            "  L = {bits:>6} bits -> E_i = {:.4e} bits/J",
            energy_index(bits, 1e-3, &params).unwrap()
        );
    }

    println!("\noptimal packet length:");
    for b in [1e-2, 1e-3, 1e-4] {
        for overhead in [16, 32] {
            let l = optimal_packet_length(b, overhead).unwrap();
            println!("  b_e = {b:<6} O = {overhead:>2} bits -> L* = {l} bits");
        }
    }
}

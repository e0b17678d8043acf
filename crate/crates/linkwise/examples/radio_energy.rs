//! First-order radio energy: electronics cost per bit plus an amplifier
//! term that switches from d^2 to d^4 at the threshold distance.
//!
//! ```bash
//! cargo run --example radio_energy
//! ```

use linkwise::energy::{threshold_distance, tx_energy, RadioEnergyParams};

fn main() {
    let params = RadioEnergyParams::default();
    let d0 = threshold_distance(&params);
    println!(
        "E_elec = {} nJ/bit, eps_fs = {} pJ/bit/m^2, eps_amp = {} pJ/bit/m^4",
        params.electronics_j_per_bit * 1e9,
        params.fs_amp_j_per_bit_m2 * 1e12,
        params.mp_amp_j_per_bit_m4 * 1e12,
    );
    println!("threshold distance d0 = {d0:.2} m\n");

    let k_bits = 8_000; // a 1 kB packet
    println!("energy to send {k_bits} bits:");
    for d in [0.0, 10.0, 25.0, 50.0, d0, 100.0, 200.0, 500.0] {
        let e = tx_energy(&params, k_bits, d).unwrap();
        let branch = if d < d0 { "free-space d^2" } else { "multipath d^4" };
        println!("  d = {d:>6.2} m -> {:>10.3} uJ   ({branch})", e * 1e6);
    }
}

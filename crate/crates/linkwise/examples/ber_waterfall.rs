//! AWGN bit-error-rate waterfalls for the nine modulation schemes, with a
//! seeded Monte Carlo cross-check at one operating point.
//!
//! ```bash
//! cargo run --example ber_waterfall
//! ```

use linkwise::ber::{ber_analytic, ber_monte_carlo, BerSource, Modulation};

fn main() {
    let modulations = Modulation::all();

    print!("{:>6}", "dB");
    for m in &modulations {
        print!(" {:>15}", m.name());
    }
    println!();
    for db in (0..=24).step_by(2) {
        print!("{db:>6}");
        for m in &modulations {
            print!(" {:>15.3e}", ber_analytic(m, db as f64));
        }
        println!();
    }

    println!("\nMonte Carlo cross-check at 6 dB, 1e6 bits, seed 42:");
    for m in &modulations {
        let analytic = ber_analytic(m, 6.0);
        let sample = ber_monte_carlo(m, 6.0, 1_000_000, 42).unwrap();
        let (errors, bits) = match sample.source {
            BerSource::MonteCarlo {
                error_bits,
                trial_bits,
                ..
            } => (error_bits, trial_bits),
            BerSource::Analytic => unreachable!(),
        };
        println!(
            "  {:<16} analytic {:.4e}   simulated {:.4e}   ({errors} errors / {bits} bits)",
            m.name(),
            analytic,
            sample.ber,
        );
    }
}

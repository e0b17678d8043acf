//! E_b/N_0 needed to hit a 1e-6 bit error rate, next to the shipped
//! reference values and their deviation flags.
//!
//! ```bash
//! cargo run --example required_ebn0
//! ```

use linkwise::ber::{required_ebn0, Modulation};
use linkwise::reference::REPORTED_REQUIRED_EBN0_1E6;

fn main() {
    println!(
        "{:<12} {:>12} {:>12} {:>8}   status",
        "scheme", "computed(dB)", "reference", "diff"
    );
    for row in REPORTED_REQUIRED_EBN0_1E6 {
        let computed = required_ebn0(&Modulation::new(row.scheme), 1e-6).unwrap();
        let status = if row.documented_deviation {
            "reference only (documented deviation)"
        } else {
            "acceptance target (+-1 dB)"
        };
        println!(
            "{:<12} {:>12.2} {:>12.1} {:>8.2}   {}",
            row.label,
            computed,
            row.eb_n0_db,
            computed - row.eb_n0_db,
            status
        );
    }
}

//! MCU computation energy: switching grows with executed cycles, leakage
//! with the wall-clock time they take, so slow clocks leak more per run.
//!
//! ```bash
//! cargo run --example mcu_energy
//! ```

use linkwise::energy::{mcu_energy, McuParams};

fn main() {
    let params = McuParams::default();
    println!(
        "V_dd = {} V, C = {:.2} nF/cycle, I_0 = {:.3} mA, n = {}, V_T = {:.0} mV",
        params.supply_voltage_v,
        params.switched_capacitance_f_per_cycle * 1e9,
        params.leakage_current_a * 1e3,
        params.process_constant,
        params.thermal_voltage_v * 1e3,
    );

    for clock_mhz in [10.0, 100.0] {
        let p = McuParams {
            clock_frequency_hz: clock_mhz * 1e6,
            ..params
        };
        println!("\nclock {clock_mhz} MHz:");
        println!(
            "{:>12} {:>12} {:>12} {:>12}",
            "cycles", "switch(mJ)", "leakage(mJ)", "total(mJ)"
        );
        for exponent in 3..=7 {
            let cycles = 10u64.pow(exponent);
            let e = mcu_energy(&p, cycles);
            println!(
                "{:>12} {:>12.4} {:>12.4} {:>12.4}",
                cycles,
                e.switch_j * 1e3,
                e.leakage_j * 1e3,
                e.total_j * 1e3
            );
        }
    }
}

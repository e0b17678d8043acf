//! Run a figure sweep programmatically and print its CSV.
//!
//! The same tables are available from the CLI, e.g.
//! `linkwise sweep fig9 --out fig9.csv`.
//!
//! ```bash
//! cargo run --example figure_sweep
//! ```

use linkwise::registry::load_registry;
use linkwise::sweeps::{run_sweep, FigureId, ProtocolSelector, Scale, SweepSpec, SweptVariable};

fn main() {
    let registry = load_registry(None).unwrap();

    // a compact coding-efficiency sweep for two protocols
    let mut spec = SweepSpec::defaults(FigureId::Fig9);
    spec.swept = Some(SweptVariable {
        name: "data_bytes".to_string(),
        start: 100.0,
        stop: 100_000.0,
        points: 13,
        scale: Scale::Log,
    });
    spec.protocols = ProtocolSelector::Named(vec!["Bluetooth".to_string(), "ZigBee".to_string()]);

    let table = run_sweep(&spec, &registry).unwrap();
    print!("{}", table.to_csv());
}

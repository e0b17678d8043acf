//! Performance metrics for short-range wireless links.
//!
//! `linkwise` compares six wireless protocols (Bluetooth, UWB, ZigBee,
//! Wi-Fi, Wi-Max, GPRS) on the quantities that matter for battery-powered
//! sensing: transmission time and coding efficiency under each protocol's
//! framing, free-space and two-ray received power and range, first-order
//! radio and MCU energy models, AWGN bit error rates for nine modulation
//! schemes (analytic and seeded Monte Carlo), packet error probability,
//! energy-optimal packet length, and real-time throughput. A small advisor
//! ranks the protocols for an application profile, and the sweeps module
//! renders each metric as a plot-ready table.
//!
//! Every operation is a pure function of its inputs; a loaded
//! [`registry::ProtocolRegistry`] is immutable and can be shared freely
//! across threads. Stochastic estimates are seeded and bit-reproducible.
//!
//! The `examples/` directory holds one runnable example per capability;
//! the `linkwise` binary exposes the same operations as subcommands
//! (`list`, `metric`, `sweep`, `compare`, `recommend`).
//!
//! ```
//! use linkwise::registry::load_registry;
//! use linkwise::link::coding_efficiency;
//!
//! let registry = load_registry(None).unwrap();
//! let bluetooth = registry.get("bluetooth").unwrap();
//! let eff = coding_efficiency(bluetooth, 10_000).unwrap();
//! assert!((eff - 94.41).abs() < 0.005);
//! ```

// validation guards use `!(x > 0.0)` so NaN fails the check too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod advisor;
pub mod ber;
pub mod cli;
pub mod energy;
pub mod error;
pub mod link;
pub mod rational;
pub mod reference;
pub mod registry;
pub mod sweeps;
pub mod table;
pub mod units;

pub use error::{Error, Result};

//! Real-time throughput versus the average backoff delay.
//!
//! ```bash
//! cargo run --example throughput
//! ```

use linkwise::link::realtime_throughput;

fn main() {
    let frame_time_s = 0.011_39;
    println!("frame time {} ms\n", frame_time_s * 1e3);
    println!("{:>12} {:>14} {:>14}", "backoff(ms)", "512 B (B/s)", "1024 B (B/s)");
    for backoff_ms in [0.0, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0] {
        let backoff_s = backoff_ms * 1e-3;
        println!(
            "{:>12} {:>14.0} {:>14.0}",
            backoff_ms,
            realtime_throughput(512.0, frame_time_s, backoff_s).unwrap(),
            realtime_throughput(1024.0, frame_time_s, backoff_s).unwrap(),
        );
    }
}

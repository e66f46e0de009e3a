//! Heating the left half of a Robin rod versus its centre.
//!
//! The centred source always gives oscillation 3π²/8, independent of α. For
//! small α the left-half source gives a larger oscillation, so oscillation is
//! not monotone under symmetric rearrangement.
//!
//!     cargo run --example half_rod_heating

use std::f64::consts::PI;

use rodsym::gap::example_summary;
use rodsym::RobinParam;

fn main() -> rodsym::Result<()> {
    println!("{:>6} {:>10} {:>10} {:>10} {:>10}", "alpha", "osc u", "osc v", "drop u", "osc u>v");
    for a in [0.05, 0.1, 0.3, 0.5, 2.0 / PI, 1.0, 10.0] {
        let s = example_summary(RobinParam::new(a)?)?;
        println!(
            "{:>6.3} {:>10.6} {:>10.6} {:>10.6} {:>10}",
            a,
            s.osc_u,
            s.osc_v,
            s.drop_u,
            s.osc_u > s.osc_v
        );
    }
    println!("3π²/8 = {:.6}", 3.0 * PI * PI / 8.0);
    Ok(())
}

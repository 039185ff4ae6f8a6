//! Circular and DT operators, compared with r_α(Z) and r_α(Z)/√2.

use std::f64::consts::SQRT_2;

use nrange::catalog::{circular_radius, circular_radius_asymptotic};
use nrange::engine::support_value;
use nrange::{NamedModel, SpectralModel, WeightSpec};

fn main() -> nrange::Result<()> {
    let circ = SpectralModel::Named(NamedModel::Circular);
    let dt = SpectralModel::Named(NamedModel::DtQuasinilpotent);
    println!(
        "{:>5} {:>11} {:>11} {:>11} {:>11}",
        "alpha", "r_a(Z)", "engine", "r_a(Z)/√2", "engine DT"
    );
    for i in 1..=9 {
        let alpha = i as f64 / 10.0;
        let w = WeightSpec::alpha(alpha)?;
        let r = circular_radius(alpha)?;
        println!(
            "{alpha:>5.1} {r:>11.8} {:>11.8} {:>11.8} {:>11.8}",
            support_value(&circ, &w, 0.0, 8192)?,
            r / SQRT_2,
            support_value(&dt, &w, 0.0, 8192)?
        );
    }
    for alpha in [1e-2, 1e-3, 1e-4] {
        println!(
            "small alpha {alpha:e}: r = {:.10}, two-term expansion = {:.10}",
            circular_radius(alpha)?,
            circular_radius_asymptotic(alpha)
        );
    }
    Ok(())
}

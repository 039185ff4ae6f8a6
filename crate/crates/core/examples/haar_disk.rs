//! α-numerical ranges of a Haar unitary are disks of radius sin(πα)/(πα).

use nrange::catalog::{closed_form_of, haar_radius};
use nrange::{compute_range, NamedModel, SpectralModel, WeightSpec};

fn main() -> nrange::Result<()> {
    let haar = SpectralModel::Named(NamedModel::HaarUnitary);
    println!(
        "{:>5} {:>12} {:>12} {:>10}",
        "alpha", "closed form", "engine g(0)", "d_H"
    );
    for i in 1..=10 {
        let alpha = i as f64 / 10.0;
        let report = compute_range(&haar, &WeightSpec::alpha(alpha)?, 720, 4096)?;
        let g0 = report.region.support_at(0.0);
        let d =
            closed_form_of(&NamedModel::HaarUnitary, alpha)?.hausdorff_to(&report.region, 10_000);
        println!(
            "{alpha:>5.1} {:>12.8} {g0:>12.8} {d:>10.2e}",
            haar_radius(alpha)?
        );
    }
    Ok(())
}

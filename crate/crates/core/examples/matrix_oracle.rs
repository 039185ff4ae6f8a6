//! A random 5×5 matrix: the engine region against a Monte-Carlo cloud of
//! (1/α)τ(TP) over random rank-2 projections.

use nrange::matrix::{random_ginibre, seeded_rng};
use nrange::oracle::sample_projection_cloud;
use nrange::{compute_range, SpectralModel, WeightSpec};

fn main() -> nrange::Result<()> {
    let t = random_ginibre(&mut seeded_rng(1), 5);
    let norm = t.operator_norm();
    let report = compute_range(
        &SpectralModel::Matrix(t.clone()),
        &WeightSpec::alpha(0.4)?,
        720,
        1,
    )?;
    for samples in [1_000, 10_000, 100_000] {
        let cloud = sample_projection_cloud(&t, 2, samples, 7)?;
        let support = report.support.as_ref().expect("not self-adjoint");
        let gap = support
            .thetas()
            .iter()
            .zip(support.values())
            .map(|(&th, &g)| g - cloud.directional_max(th))
            .fold(0.0, f64::max);
        println!(
            "{samples:>6} samples: worst excess {:.1e}, worst support gap {:.4}·‖T‖",
            cloud.worst_excess(&report.region),
            gap / norm
        );
    }
    Ok(())
}

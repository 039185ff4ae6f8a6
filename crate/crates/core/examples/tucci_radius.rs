//! The Tucci operator: the real part has a linear eigenvalue function, so
//! V_α is the disk of radius (1 - α)/2.

use nrange::engine::support_value;
use nrange::{NamedModel, SpectralModel, WeightSpec};

fn main() -> nrange::Result<()> {
    let tucci = SpectralModel::Named(NamedModel::Tucci);
    for alpha in [0.1, 0.25, 0.5, 0.75, 0.9] {
        let w = WeightSpec::alpha(alpha)?;
        let g: Vec<f64> = [0.0, 1.0, 2.0, 3.0]
            .iter()
            .map(|&t| support_value(&tucci, &w, t, 4096))
            .collect::<Result<_, _>>()?;
        println!(
            "alpha {alpha:.2}: g = {g:.8?}, expected {:.8}",
            0.5 * (1.0 - alpha)
        );
    }
    Ok(())
}

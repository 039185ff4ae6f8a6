//! Elliptic operators: V_½ is an ellipse with semi-axes √2·r·cosψ, √2·r·sinψ.
//! Writes the ψ = π/3 polygon as an SVG.

use std::f64::consts::PI;

use nrange::catalog::closed_form_of;
use nrange::cli::svg_from_polygon_csv;
use nrange::{compute_range, NamedModel, SpectralModel, WeightSpec};

fn main() -> nrange::Result<()> {
    for psi in [PI / 6.0, PI / 4.0, PI / 3.0] {
        let model = NamedModel::Elliptic { psi };
        let report = compute_range(
            &SpectralModel::Named(model),
            &WeightSpec::alpha(0.5)?,
            720,
            4096,
        )?;
        let closed = closed_form_of(&model, 0.5)?;
        println!(
            "psi = {psi:.4}: {closed:?}, engine extents ({:.6}, {:.6}), d_H = {:.2e}",
            report.region.support_at(0.0),
            report.region.support_at(PI / 2.0),
            closed.hausdorff_to(&report.region, 10_000)
        );
        if psi == PI / 3.0 {
            let path = std::env::temp_dir().join("elliptic_pi_3.svg");
            std::fs::write(&path, svg_from_polygon_csv(&report.region.to_csv())?)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

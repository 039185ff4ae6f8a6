//! A normal operator with finite spectrum: V_α is a polytope, computed exactly
//! by a fractional knapsack in every direction.

use num_complex::Complex64;

use nrange::engine::normal_range_exact;
use nrange::geometry::hausdorff;
use nrange::{compute_range, Atom, SpectralModel, WeightSpec};

fn main() -> nrange::Result<()> {
    let atoms = vec![
        Atom::new(Complex64::new(1.0, 0.0), 0.25),
        Atom::new(Complex64::new(0.0, 1.0), 0.25),
        Atom::new(Complex64::new(-1.0, 0.0), 0.25),
        Atom::new(Complex64::new(0.0, -1.0), 0.25),
    ];
    for alpha in [0.25, 0.5, 0.75] {
        let exact = normal_range_exact(&atoms, alpha)?;
        let engine = compute_range(
            &SpectralModel::atomic(atoms.clone())?,
            &WeightSpec::alpha(alpha)?,
            720,
            1,
        )?;
        println!("alpha {alpha}: vertices {:?}", exact.vertices());
        println!(
            "  engine vs knapsack d_H = {:.2e}",
            hausdorff(&exact, &engine.region)
        );
    }
    Ok(())
}

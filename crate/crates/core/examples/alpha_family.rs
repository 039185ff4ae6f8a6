//! A self-adjoint C-range rebuilt from suprema of α-ranges alone.

use nrange::engine::{range_from_alpha_family, selfadjoint_range, AlphaSupTable};
use nrange::{StepFunction, WeightSpec};

fn main() -> nrange::Result<()> {
    let lambda_t = StepFunction::from_pieces(&[(0.2, 3.0), (0.5, 1.0), (0.3, -2.0)])?;
    let weight = StepFunction::from_pieces(&[(0.1, 5.0), (0.6, 2.0), (0.3, 0.5)])?;

    let alphas = AlphaSupTable::required_alphas(&weight);
    let table = AlphaSupTable::from_lambda(&lambda_t, &alphas)?;
    for &a in &alphas {
        println!("sup V_{a:.2}(T) = {:.6}", table.get(a).unwrap());
    }
    let rebuilt = range_from_alpha_family(&table, &weight)?;
    let direct = selfadjoint_range(&lambda_t, &WeightSpec::step(weight))?;
    println!("from the alpha family: {rebuilt:?}");
    println!("direct pairing:        {direct:?}");
    Ok(())
}

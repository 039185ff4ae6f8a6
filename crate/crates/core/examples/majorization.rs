//! Eigenvalue functions, rearrangement and majorization; pinching a Hermitian
//! matrix produces a majorized spectrum.

use nrange::eigfun::{majorizes, pairing_integral, rearrange};
use nrange::matrix::{eigenvalue_function_of_matrix, random_hermitian, seeded_rng};
use nrange::StepFunction;

fn main() -> nrange::Result<()> {
    let f = StepFunction::equal_pieces(&[1.0, 3.0, 2.0])?;
    let r = rearrange(&f);
    println!(
        "rearranged: breakpoints {:?} values {:?}",
        r.breakpoints(),
        r.values()
    );

    let flat = StepFunction::constant(2.0);
    println!("flat ≺ f: {:?}", majorizes(&f, &flat));
    println!("f ≺ flat: {}", majorizes(&flat, &f).majorizes);

    let g = StepFunction::equal_pieces(&[0.0, 1.0, 5.0])?;
    println!(
        "pairings of f and g: aligned {:.6}, reversed {:.6}",
        pairing_integral(&r, &rearrange(&g), false),
        pairing_integral(&r, &rearrange(&g), true)
    );

    let h = random_hermitian(&mut seeded_rng(3), 6);
    let pinched = h.pinch(&[0, 0, 1, 1, 1, 2]);
    let verdict = majorizes(
        &eigenvalue_function_of_matrix(&h, 0.0),
        &eigenvalue_function_of_matrix(&pinched, 0.0),
    );
    println!(
        "pinched spectrum majorized by the original: {}",
        verdict.majorizes
    );
    Ok(())
}

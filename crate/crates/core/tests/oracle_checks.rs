use std::f64::consts::PI;

use nrange::eigfun::StepFunction;
use nrange::engine::{compute_range, support_value, WeightSpec};
use nrange::matrix::{
    hermitian_eigenvalues, random_ginibre, random_hermitian, seeded_rng, ComplexMatrix,
};
use nrange::oracle::{sample_orbit_cloud, sample_projection_cloud, unit_vector_directional_max};
use nrange::spectral::SpectralModel;

#[test]
fn unit_vector_sweep_matches_supporting_function() {
    for (seed, n) in [(1u64, 2usize), (2, 3), (3, 3)] {
        let t = random_ginibre(&mut seeded_rng(seed), n);
        let m = SpectralModel::Matrix(t.clone());
        let w = WeightSpec::alpha(1.0 / n as f64).unwrap();
        for theta in (0..24).map(|i| 2.0 * PI * i as f64 / 24.0) {
            let g = support_value(&m, &w, theta, 1).unwrap();
            let swept = unit_vector_directional_max(&t, theta, 12).unwrap();
            assert!(
                (g - swept).abs() <= 1e-3,
                "n={n} θ={theta}: g={g} sweep={swept}"
            );
        }
    }
}

#[test]
fn orbit_cloud_lies_in_step_weight_range() {
    let mut rng = seeded_rng(21);
    let t = random_ginibre(&mut rng, 4);
    let c = random_hermitian(&mut rng, 4);
    let eig = hermitian_eigenvalues(&c).unwrap().eigenvalues;
    let w = WeightSpec::step(StepFunction::equal_pieces(&eig).unwrap());
    let region = compute_range(&SpectralModel::Matrix(t.clone()), &w, 720, 1)
        .unwrap()
        .region;
    let cloud = sample_orbit_cloud(&t, &c, 20_000, 5).unwrap();
    assert!(
        cloud.worst_excess(&region) <= 1e-8,
        "excess {}",
        cloud.worst_excess(&region)
    );
}

#[test]
fn projection_cloud_is_sound_for_a_random_matrix() {
    let t = random_ginibre(&mut seeded_rng(44), 4);
    let region = compute_range(
        &SpectralModel::Matrix(t.clone()),
        &WeightSpec::alpha(0.5).unwrap(),
        720,
        1,
    )
    .unwrap()
    .region;
    let cloud = sample_projection_cloud(&t, 2, 50_000, 9).unwrap();
    assert!(cloud.all_inside(&region, 1e-8));
    // the hull of the cloud is a crude inner approximation
    let hull = cloud.hull().unwrap();
    assert!(hull.area() <= region.area() + 1e-9);
}

#[test]
fn orbit_of_diag_one_minus_one_fills_the_interval() {
    let d = ComplexMatrix::from_real_diag(&[1.0, -1.0]);
    let cloud = sample_orbit_cloud(&d, &d, 50_000, 3).unwrap();
    let (lo, hi) = cloud
        .points
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), z| {
            (l.min(z.re), h.max(z.re))
        });
    assert!(lo >= -1.0 - 1e-12 && hi <= 1.0 + 1e-12);
    assert!(lo < -0.99 && hi > 0.99);
    assert!(cloud
        .points
        .iter()
        .all(|z| z.im.abs() < 1e-12 && z.re.is_finite()));
}

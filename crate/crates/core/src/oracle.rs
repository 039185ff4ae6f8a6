//! Brute-force and Monte-Carlo ground truth at matrix scale.
//!
//! Every point in a cloud is `τ(TX)` for an explicit `X` in the relevant
//! orbit, so a cloud is always inside the true range. Its directional maxima
//! approach the supporting function only slowly, since the extreme
//! projections are rare under Haar sampling.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{directional, fmt17, ConvexRegion};
use crate::matrix::{haar_isometry, random_unitary_with, seeded_rng, ComplexMatrix};

/// Samples per shard. Fixed, so the cloud does not depend on thread count.
pub const SHARD_SIZE: usize = 4096;

/// Longest piece list accepted by [`permutation_pairing_oracle`].
pub const PERMUTATION_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloudKind {
    Projection,
    UnitaryOrbit,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleCloud {
    pub points: Vec<Complex64>,
    pub kind: CloudKind,
    pub n: usize,
    /// Projection rank (`n` for orbit clouds).
    pub k: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl OracleCloud {
    /// `max Re(e^{iθ}z)` over the cloud.
    pub fn directional_max(&self, theta: f64) -> f64 {
        self.points
            .iter()
            .map(|&z| directional(z, theta))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest distance from a cloud point to `region`.
    pub fn worst_excess(&self, region: &ConvexRegion) -> f64 {
        self.points
            .par_iter()
            .map(|&z| region.distance_to(z))
            .reduce(|| 0.0, f64::max)
    }

    pub fn all_inside(&self, region: &ConvexRegion, inflation: f64) -> bool {
        self.worst_excess(region) <= inflation
    }

    pub fn hull(&self) -> Result<ConvexRegion> {
        ConvexRegion::from_points(&self.points)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for z in &self.points {
            out.push_str(&format!("{},{}\n", fmt17(z.re), fmt17(z.im)));
        }
        out
    }
}

fn shard_rng(seed: u64, shard: usize) -> ChaCha8Rng {
    let mut rng = seeded_rng(seed);
    rng.set_stream(shard as u64);
    rng
}

fn sharded<F>(count: usize, seed: u64, sample: F) -> Vec<Complex64>
where
    F: Fn(&mut ChaCha8Rng) -> Complex64 + Sync,
{
    let shards = count.div_ceil(SHARD_SIZE);
    (0..shards)
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut rng = shard_rng(seed, s);
            let len = SHARD_SIZE.min(count - s * SHARD_SIZE);
            (0..len).map(|_| sample(&mut rng)).collect::<Vec<_>>()
        })
        .collect()
}

/// `(1/α)·τ(TP)` for `count` Haar-random rank-`k` projections, `α = k/n`.
pub fn sample_projection_cloud(
    t: &ComplexMatrix,
    k: usize,
    count: usize,
    seed: u64,
) -> Result<OracleCloud> {
    let n = t.dim();
    if k == 0 || k > n {
        return Err(Error::InvalidRank { k, n });
    }
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    let points = sharded(count, seed, |rng| {
        let cols = haar_isometry(rng, n, k);
        // (n/k)·(1/n)·Tr(TP) = (1/k) Σ q*Tq
        cols.iter().map(|q| quadratic_form(t, q)).sum::<Complex64>() / k as f64
    });
    Ok(OracleCloud {
        points,
        kind: CloudKind::Projection,
        n,
        k,
        sample_count: count,
        seed,
    })
}

/// `τ(T·U*CU)` for `count` Haar-random unitaries `U`.
pub fn sample_orbit_cloud(
    t: &ComplexMatrix,
    c: &ComplexMatrix,
    count: usize,
    seed: u64,
) -> Result<OracleCloud> {
    let n = t.dim();
    if c.dim() != n {
        return Err(Error::InvalidMatrix(format!(
            "T is {n}×{n} but C is {0}×{0}",
            c.dim()
        )));
    }
    if !c.is_hermitian() {
        return Err(Error::NotHermitian(c.hermitian_defect()));
    }
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    let points = sharded(count, seed, |rng| {
        let u = random_unitary_with(rng, n);
        t.mul(&u.adjoint().mul(c).mul(&u)).normalized_trace()
    });
    Ok(OracleCloud {
        points,
        kind: CloudKind::UnitaryOrbit,
        n,
        k: n,
        sample_count: count,
        seed,
    })
}

/// `q* T q`.
pub fn quadratic_form(t: &ComplexMatrix, q: &[Complex64]) -> Complex64 {
    let n = t.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let row: Complex64 = q.iter().enumerate().map(|(j, qj)| t.get(i, j) * qj).sum();
        acc += q[i].conj() * row;
    }
    acc
}

/// Max and min of `(1/n) Σ f_i g_{σ(i)}` over all permutations `σ`.
pub fn permutation_pairing_oracle(f: &[f64], g: &[f64]) -> Result<(f64, f64)> {
    if f.len() != g.len() || f.is_empty() {
        return Err(Error::OracleLimit(format!(
            "piece lists must be nonempty and of equal length (got {} and {})",
            f.len(),
            g.len()
        )));
    }
    if f.len() > PERMUTATION_CAP {
        return Err(Error::OracleLimit(format!(
            "{} pieces exceeds the cap of {PERMUTATION_CAP}",
            f.len()
        )));
    }
    let n = f.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let eval = |p: &[usize]| f.iter().zip(p).map(|(a, &j)| a * g[j]).sum::<f64>();
    let first = eval(&perm);
    let (mut max, mut min) = (first, first);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let v = eval(&perm);
            max = max.max(v);
            min = min.min(v);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok((max / n as f64, min / n as f64))
}

fn unit_vector(angles: &[f64]) -> Vec<Complex64> {
    match angles.len() {
        2 => {
            let [a, p] = [angles[0], angles[1]];
            vec![
                Complex64::new(a.cos(), 0.0),
                Complex64::from_polar(a.sin(), p),
            ]
        }
        4 => {
            let [a, b, p1, p2] = [angles[0], angles[1], angles[2], angles[3]];
            vec![
                Complex64::new(a.cos(), 0.0),
                Complex64::from_polar(a.sin() * b.cos(), p1),
                Complex64::from_polar(a.sin() * b.sin(), p2),
            ]
        }
        _ => unreachable!("n is 2 or 3"),
    }
}

/// `max_q Re(e^{iθ} q*Tq)` over unit vectors `q ∈ ℂⁿ`, `n ≤ 3`, by a
/// deterministic sweep over spherical coordinates followed by a compass
/// search around the best grid point. This is `sup` of `V_{1/n}(T)` in
/// direction `θ` (rank-one projections).
pub fn unit_vector_directional_max(t: &ComplexMatrix, theta: f64, grid: usize) -> Result<f64> {
    let n = t.dim();
    if !(1..=3).contains(&n) {
        return Err(Error::OracleLimit(format!(
            "unit-vector sweep needs n <= 3 (got {n})"
        )));
    }
    if n == 1 {
        return Ok(directional(t.get(0, 0), theta));
    }
    let grid = grid.max(4);
    let spans: Vec<f64> = if n == 2 {
        vec![PI / 2.0, 2.0 * PI]
    } else {
        vec![PI / 2.0, PI / 2.0, 2.0 * PI, 2.0 * PI]
    };
    let value = |x: &[f64]| directional(quadratic_form(t, &unit_vector(x)), theta);

    let mut best = vec![0.0; spans.len()];
    let mut best_val = f64::NEG_INFINITY;
    let total = grid.pow(spans.len() as u32);
    let mut x = vec![0.0; spans.len()];
    for idx in 0..total {
        let mut rem = idx;
        for (d, span) in spans.iter().enumerate() {
            x[d] = span * (rem % grid) as f64 / grid as f64;
            rem /= grid;
        }
        let v = value(&x);
        if v > best_val {
            best_val = v;
            best.copy_from_slice(&x);
        }
    }
    let mut step: Vec<f64> = spans.iter().map(|s| s / grid as f64).collect();
    while step.iter().any(|&s| s > 1e-12) {
        let mut improved = false;
        for d in 0..best.len() {
            for sign in [1.0, -1.0] {
                let mut y = best.clone();
                y[d] += sign * step[d];
                let v = value(&y);
                if v > best_val {
                    best_val = v;
                    best = y;
                    improved = true;
                }
            }
        }
        if !improved {
            step.iter_mut().for_each(|s| *s *= 0.5);
        }
    }
    Ok(best_val)
}

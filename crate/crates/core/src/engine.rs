//! C-numerical and α-numerical ranges.
//!
//! For a positive weight `C` the supporting function of `V_C(T)` is
//!
//! ```text
//! g(θ) = ∫₀¹ λ_{Re(e^{iθ}T)}(s) λ_C(s) ds
//! ```
//!
//! so the range is recovered by sampling `g` on a direction grid and
//! intersecting half-planes. Self-adjoint `T` skips the sweep: the range is the
//! interval between the reversed and the aligned pairing of `λ_T` with `λ_C`.
//!
//! `V_α(T)` is the C-range for `λ_C = (1/α)·1_{[0,α)}`; the `1/α`
//! normalization lives in [`WeightSpec::lambda_c`] and nowhere else.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::eigfun::{pairing_integral, rearrange, StepFunction};
use crate::error::{Error, Result};
use crate::geometry::{
    normalize_angles, region_from_support, uniform_grid, ConvexRegion, SupportSample,
};
use crate::spectral::{quantile_step, real_part_distribution, Atom, SpectralModel};

/// Tolerance when looking up α values in an [`AlphaSupTable`].
pub const ALPHA_LOOKUP_TOL: f64 = 1e-12;

/// The self-adjoint weight `C`, through its eigenvalue function.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightSpec {
    /// `C = (1/α)·P` with `τ(P) = α`.
    Alpha(f64),
    /// An arbitrary sorted eigenvalue function `λ_C`.
    Step(StepFunction),
}

impl WeightSpec {
    pub fn alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::Domain(format!("alpha = {alpha} not in (0, 1]")));
        }
        Ok(WeightSpec::Alpha(alpha))
    }

    /// Sorts `lambda_c` if needed; a weight is an eigenvalue function.
    pub fn step(lambda_c: StepFunction) -> Self {
        WeightSpec::Step(rearrange(&lambda_c))
    }

    pub fn lambda_c(&self) -> StepFunction {
        match self {
            WeightSpec::Alpha(a) => {
                StepFunction::head_indicator(*a, 1.0 / a).expect("alpha validated")
            }
            WeightSpec::Step(f) => f.clone(),
        }
    }

    /// `τ(C)`.
    pub fn trace(&self) -> f64 {
        match self {
            WeightSpec::Alpha(_) => 1.0,
            WeightSpec::Step(f) => f.integral(),
        }
    }

    /// `‖C‖`.
    pub fn norm(&self) -> f64 {
        let l = self.lambda_c();
        l.max_value().abs().max(l.min_value().abs())
    }

    pub fn describe(&self) -> String {
        match self {
            WeightSpec::Alpha(a) => format!("alpha:{a}"),
            WeightSpec::Step(f) => serde_json::to_string(f).expect("serializable"),
        }
    }
}

fn require_positive(lambda_c: &StepFunction) -> Result<()> {
    if lambda_c.min_value() < 0.0 {
        return Err(Error::InvalidWeight(format!(
            "weight has negative values (min {}); translate C to a positive operator first",
            lambda_c.min_value()
        )));
    }
    Ok(())
}

/// `V_C(T) = [∫ λ_T(s) λ_C(1-s) ds, ∫ λ_T(s) λ_C(s) ds]` for self-adjoint `T`
/// and positive `C`.
pub fn selfadjoint_range(lambda_t: &StepFunction, w: &WeightSpec) -> Result<(f64, f64)> {
    let lambda_c = w.lambda_c();
    require_positive(&lambda_c)?;
    let lambda_t = rearrange(lambda_t);
    Ok((
        pairing_integral(&lambda_t, &lambda_c, true),
        pairing_integral(&lambda_t, &lambda_c, false),
    ))
}

/// `g_{V_C(T)}(θ)` for positive `C`.
pub fn support_value(
    m: &SpectralModel,
    w: &WeightSpec,
    theta: f64,
    resolution: usize,
) -> Result<f64> {
    let lambda_c = w.lambda_c();
    require_positive(&lambda_c)?;
    support_with(m, &lambda_c, theta, resolution)
}

fn support_with(
    m: &SpectralModel,
    lambda_c: &StepFunction,
    theta: f64,
    resolution: usize,
) -> Result<f64> {
    let lambda = quantile_step(&real_part_distribution(m, theta), resolution)?;
    Ok(pairing_integral(&lambda, lambda_c, false))
}

/// Directions where the order of `Re(e^{iθ}λ_k)` between two atoms flips.
/// These are the edge normals of the polytope of a normal operator.
pub fn atom_switch_directions(atoms: &[Atom]) -> Vec<f64> {
    let mut out = Vec::new();
    for (j, a) in atoms.iter().enumerate() {
        for b in &atoms[j + 1..] {
            let d = a.value - b.value;
            if d.norm() == 0.0 {
                continue;
            }
            let base = PI / 2.0 - d.arg();
            out.push(base);
            out.push(base + PI);
        }
    }
    out
}

fn sweep_pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var("NRANGE_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(0);
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

/// Result of [`compute_range`].
#[derive(Debug, Clone, PartialEq)]
pub struct RangeReport {
    pub region: ConvexRegion,
    /// Samples of `g` actually used (absent on the self-adjoint fast path).
    pub support: Option<SupportSample>,
    pub directions: usize,
    pub resolution: usize,
    pub is_degenerate_interval: bool,
    pub operator_digest: String,
    pub weight_digest: String,
    pub weight: String,
}

#[derive(Serialize)]
struct RangeReportJson<'a> {
    vertices: Vec<[f64; 2]>,
    support: Option<SupportJson<'a>>,
    directions: usize,
    resolution: usize,
    is_degenerate_interval: bool,
    weight: &'a str,
    operator_digest: &'a str,
    weight_digest: &'a str,
}

#[derive(Serialize)]
struct SupportJson<'a> {
    theta: &'a [f64],
    g: &'a [f64],
}

impl RangeReport {
    pub fn to_json(&self) -> String {
        let json = RangeReportJson {
            vertices: self
                .region
                .vertices()
                .iter()
                .map(|z| [z.re, z.im])
                .collect(),
            support: self.support.as_ref().map(|s| SupportJson {
                theta: s.thetas(),
                g: s.values(),
            }),
            directions: self.directions,
            resolution: self.resolution,
            is_degenerate_interval: self.is_degenerate_interval,
            weight: &self.weight,
            operator_digest: &self.operator_digest,
            weight_digest: &self.weight_digest,
        };
        serde_json::to_string_pretty(&json).expect("serializable")
    }
}

/// Hex SHA-256 of a canonical serialization.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Computes `V_C(T)`.
///
/// Weights with negative values are shifted to `C + bI`, `b = -min λ_C`, and
/// the result translated back by `-b·τ(T)`. Self-adjoint models return the
/// exact interval. Atomic models add the order-switch directions to the grid,
/// which makes their polygon exact.
pub fn compute_range(
    m: &SpectralModel,
    w: &WeightSpec,
    directions: usize,
    resolution: usize,
) -> Result<RangeReport> {
    if directions < 3 {
        return Err(Error::Domain(format!(
            "need at least 3 directions (got {directions})"
        )));
    }
    let lambda_c = w.lambda_c();
    let shift = (-lambda_c.min_value()).max(0.0);
    let positive_c = if shift > 0.0 {
        lambda_c.map(|v| v + shift)
    } else {
        lambda_c
    };
    let back = -m.trace() * shift;

    let (region, support, is_degenerate_interval) = if positive_c.num_pieces() == 1 {
        // scalar weight: the unitary orbit of C is a single point
        let point = m.trace() * (positive_c.values()[0] - shift);
        (ConvexRegion::point(point), None, m.is_self_adjoint())
    } else if m.is_self_adjoint() {
        let lambda_t = quantile_step(&real_part_distribution(m, 0.0), resolution)?;
        let (lo, hi) = selfadjoint_range(&lambda_t, &WeightSpec::Step(positive_c))?;
        let (lo, hi) = (lo + back.re, hi + back.re);
        let region = if lo == hi {
            ConvexRegion::point(Complex64::new(lo, 0.0))
        } else {
            ConvexRegion::segment(Complex64::new(lo, 0.0), Complex64::new(hi, 0.0))
        };
        (region, None, true)
    } else {
        let mut thetas = uniform_grid(directions);
        if let SpectralModel::Atomic(atoms) = m {
            thetas.extend(atom_switch_directions(atoms));
            thetas = normalize_angles(thetas);
        }
        let invariant = matches!(m, SpectralModel::Named(n) if n.is_rotation_invariant());
        let values: Vec<f64> = if invariant {
            // the law of Re(e^{iθ}T) does not depend on θ
            vec![support_with(m, &positive_c, 0.0, resolution)?; thetas.len()]
        } else {
            sweep_pool().install(|| {
                thetas
                    .par_iter()
                    .map(|&t| support_with(m, &positive_c, t, resolution))
                    .collect::<Result<Vec<f64>>>()
            })?
        };
        let sample = SupportSample::new(thetas, values)?;
        let region = region_from_support(&sample)?;
        let region = if shift > 0.0 {
            region.affine_image(back, Complex64::new(1.0, 0.0))
        } else {
            region
        };
        (region, Some(sample), false)
    };

    let model_json = serde_json::to_vec(m)?;
    let weight = w.describe();
    Ok(RangeReport {
        region,
        support,
        directions,
        resolution,
        is_degenerate_interval,
        operator_digest: digest(&model_json),
        weight_digest: digest(weight.as_bytes()),
        weight,
    })
}

/// `V_α(N)` for a normal operator with finite spectrum, on the default grid.
pub fn normal_range_exact(atoms: &[Atom], alpha: f64) -> Result<ConvexRegion> {
    normal_range_exact_on(atoms, alpha, crate::geometry::DEFAULT_DIRECTIONS)
}

/// `V_α(N) = {(1/α) Σ λ_k t_k : 0 ≤ t_k ≤ w_k, Σ t_k = α}`.
///
/// Each supporting value is a fractional knapsack: fill the atoms with the
/// largest `Re(e^{iθ}λ_k)` first (ties by atom index). The grid is the uniform
/// one plus every direction where two atoms swap order, so every edge normal
/// of the polytope is sampled and the polygon is exact.
pub fn normal_range_exact_on(
    atoms: &[Atom],
    alpha: f64,
    directions: usize,
) -> Result<ConvexRegion> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("alpha = {alpha} not in (0, 1]")));
    }
    if directions < 3 {
        return Err(Error::Domain(format!(
            "need at least 3 directions (got {directions})"
        )));
    }
    SpectralModel::atomic(atoms.to_vec())?;
    let mut thetas = uniform_grid(directions);
    thetas.extend(atom_switch_directions(atoms));
    let thetas = normalize_angles(thetas);
    let sample = SupportSample::from_fn(thetas, |t| knapsack_support(atoms, alpha, t))?;
    region_from_support(&sample)
}

fn knapsack_support(atoms: &[Atom], alpha: f64, theta: f64) -> f64 {
    let rot = Complex64::from_polar(1.0, theta);
    let mut order: Vec<(f64, f64)> = atoms
        .iter()
        .map(|a| ((rot * a.value).re, a.weight))
        .collect();
    // stable: equal values keep atom order
    order.sort_by(|x, y| y.0.total_cmp(&x.0));
    let mut remaining = alpha;
    let mut acc = 0.0;
    for (r, w) in order {
        if remaining <= 0.0 {
            break;
        }
        let t = w.min(remaining);
        acc += r * t;
        remaining -= t;
    }
    acc / alpha
}

/// Stored values of `sup V_α(T)` for a self-adjoint `T`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AlphaSupTable {
    entries: Vec<(f64, f64)>,
}

impl AlphaSupTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, alpha: f64, sup: f64) {
        match self
            .entries
            .iter_mut()
            .find(|e| (e.0 - alpha).abs() <= ALPHA_LOOKUP_TOL)
        {
            Some(e) => e.1 = sup,
            None => self.entries.push((alpha, sup)),
        }
    }

    pub fn get(&self, alpha: f64) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| (e.0 - alpha).abs() <= ALPHA_LOOKUP_TOL)
            .map(|e| e.1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The α values [`range_from_alpha_family`] reads for `weight`: every
    /// breakpoint `x_k` and every `1 - x_k` in `(0, 1]`.
    pub fn required_alphas(weight: &StepFunction) -> Vec<f64> {
        let bps = rearrange(weight).breakpoints().to_vec();
        let mut out: Vec<f64> = bps
            .iter()
            .flat_map(|&x| [x, 1.0 - x])
            .filter(|&a| a > 0.0)
            .collect();
        out.sort_by(f64::total_cmp);
        out.dedup_by(|b, a| (*b - *a).abs() <= ALPHA_LOOKUP_TOL);
        out
    }

    /// Fills the table from `λ_T` using `sup V_α(T) = (1/α) ∫₀^α λ_T`.
    pub fn from_lambda(lambda_t: &StepFunction, alphas: &[f64]) -> Result<Self> {
        let lambda_t = rearrange(lambda_t);
        let mut table = AlphaSupTable::new();
        for &a in alphas {
            let sup = crate::eigfun::partial_integral(&lambda_t, a)? / a;
            table.insert(a, sup);
        }
        Ok(table)
    }

    /// `∫₀^x λ_T = x · sup V_x(T)`, zero at `x = 0`.
    fn head_integral(&self, x: f64) -> Result<f64> {
        if x <= ALPHA_LOOKUP_TOL {
            return Ok(0.0);
        }
        self.get(x)
            .map(|s| x * s)
            .ok_or(Error::MissingTableEntry(x))
    }
}

/// Reconstructs `V_C(T)` for self-adjoint `T` and a positive step weight from
/// α-range suprema alone.
///
/// With `λ_C = Σ c_k 1_{[x_{k-1}, x_k)}` and `F(x) = x · sup V_x(T)`:
/// `sup V_C = Σ c_k (F(x_k) - F(x_{k-1}))` and
/// `inf V_C = Σ c_k (F(1 - x_{k-1}) - F(1 - x_k))`.
pub fn range_from_alpha_family(table: &AlphaSupTable, weight: &StepFunction) -> Result<(f64, f64)> {
    let weight = rearrange(weight);
    require_positive(&weight)?;
    let mut lo = 0.0;
    let mut hi = 0.0;
    for (a, b, c) in weight.pieces() {
        hi += c * (table.head_integral(b)? - table.head_integral(a)?);
        lo += c * (table.head_integral(1.0 - a)? - table.head_integral(1.0 - b)?);
    }
    Ok((lo, hi))
}

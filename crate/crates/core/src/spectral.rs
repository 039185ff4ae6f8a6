//! Spectral models and their eigenvalue functions.
//!
//! An operator enters the engine only through the laws of its rotated real
//! parts `Re(e^{iθ}T)`. [`real_part_distribution`] produces those laws and
//! [`quantile_step`] turns a law into a sorted [`StepFunction`].
//!
//! Semicircle convention: a standard semicircular element has variance 1 and
//! support `[-2, 2]`. The real part of a standard circular element is such an
//! element scaled by `1/√2`, so its law lives on `[-√2, √2]`.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eigfun::{rearrange, StepFunction};
use crate::error::{Error, Result};
use crate::matrix::{hermitian_eigenvalues, hermitian_part, ComplexMatrix};

/// Default number of cells used to discretize continuous quantile functions.
pub const DEFAULT_RESOLUTION: usize = 4096;

/// Tolerance on the total weight of an atomic model.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// Tolerance below which imaginary parts of atoms count as zero.
pub const REAL_ATOM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub value: Complex64,
    pub weight: f64,
}

impl Atom {
    pub fn new(value: Complex64, weight: f64) -> Self {
        Atom { value, weight }
    }
}

/// The named operators with closed-form real-part laws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedModel {
    /// Unitary with uniform spectral distribution on the circle.
    HaarUnitary,
    /// Self-adjoint semicircular element with the given mean and variance.
    Semicircular { mean: f64, variance: f64 },
    /// `(X + iY)/√2` with `X, Y` free standard semicirculars.
    Circular,
    /// The quasinilpotent Tucci operator in the hyperfinite II₁ factor.
    Tucci,
    /// The quasinilpotent DT operator.
    DtQuasinilpotent,
    /// `cos ψ · X + i sin ψ · Y` with `X, Y` free standard semicirculars.
    Elliptic { psi: f64 },
}

impl NamedModel {
    pub fn name(&self) -> &'static str {
        match self {
            NamedModel::HaarUnitary => "haar_unitary",
            NamedModel::Semicircular { .. } => "semicircular",
            NamedModel::Circular => "circular",
            NamedModel::Tucci => "tucci",
            NamedModel::DtQuasinilpotent => "dt_quasinilpotent",
            NamedModel::Elliptic { .. } => "elliptic",
        }
    }

    pub fn from_name(name: &str, params: &BTreeMap<String, f64>) -> Result<Self> {
        let model = match name {
            "haar_unitary" | "haar" => NamedModel::HaarUnitary,
            "semicircular" => NamedModel::Semicircular {
                mean: params.get("mean").copied().unwrap_or(0.0),
                variance: params.get("variance").copied().unwrap_or(1.0),
            },
            "circular" => NamedModel::Circular,
            "tucci" => NamedModel::Tucci,
            "dt_quasinilpotent" | "dt" => NamedModel::DtQuasinilpotent,
            "elliptic" => NamedModel::Elliptic {
                psi: *params.get("psi").ok_or_else(|| {
                    Error::InvalidModel("elliptic requires parameter `psi`".into())
                })?,
            },
            other => return Err(Error::UnknownName(other.to_string())),
        };
        model.validate()?;
        Ok(model)
    }

    pub fn params(&self) -> BTreeMap<String, f64> {
        let mut p = BTreeMap::new();
        match *self {
            NamedModel::Semicircular { mean, variance } => {
                p.insert("mean".into(), mean);
                p.insert("variance".into(), variance);
            }
            NamedModel::Elliptic { psi } => {
                p.insert("psi".into(), psi);
            }
            _ => {}
        }
        p
    }

    fn validate(&self) -> Result<()> {
        match *self {
            NamedModel::Elliptic { psi } if !(psi > 0.0 && psi < PI / 2.0) => Err(
                Error::InvalidModel(format!("elliptic psi = {psi} not in (0, π/2)")),
            ),
            NamedModel::Semicircular { mean, variance }
                if !(variance >= 0.0) || !mean.is_finite() =>
            {
                Err(Error::InvalidModel(
                    "semicircular needs finite mean and variance >= 0".into(),
                ))
            }
            _ => Ok(()),
        }
    }

    /// Whether the ∗-distribution is invariant under `T ↦ e^{iθ}T`.
    pub fn is_rotation_invariant(&self) -> bool {
        matches!(
            self,
            NamedModel::HaarUnitary
                | NamedModel::Circular
                | NamedModel::Tucci
                | NamedModel::DtQuasinilpotent
        )
    }
}

/// Spectral data of an operator, enough to produce every `λ_{Re(e^{iθ}T)}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ModelRepr", into = "ModelRepr")]
pub enum SpectralModel {
    Matrix(ComplexMatrix),
    /// A normal operator with finite spectrum: eigenvalues with trace weights.
    Atomic(Vec<Atom>),
    Named(NamedModel),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ModelRepr {
    Matrix {
        entries: ComplexMatrix,
    },
    Atomic {
        atoms: Vec<AtomRepr>,
    },
    Named {
        name: String,
        #[serde(default)]
        params: BTreeMap<String, f64>,
    },
}

#[derive(Serialize, Deserialize)]
struct AtomRepr {
    re: f64,
    im: f64,
    w: f64,
}

impl TryFrom<ModelRepr> for SpectralModel {
    type Error = Error;

    fn try_from(r: ModelRepr) -> Result<Self> {
        match r {
            ModelRepr::Matrix { entries } => Ok(SpectralModel::Matrix(entries)),
            ModelRepr::Atomic { atoms } => SpectralModel::atomic(
                atoms
                    .into_iter()
                    .map(|a| Atom::new(Complex64::new(a.re, a.im), a.w))
                    .collect(),
            ),
            ModelRepr::Named { name, params } => {
                Ok(SpectralModel::Named(NamedModel::from_name(&name, &params)?))
            }
        }
    }
}

impl From<SpectralModel> for ModelRepr {
    fn from(m: SpectralModel) -> Self {
        match m {
            SpectralModel::Matrix(entries) => ModelRepr::Matrix { entries },
            SpectralModel::Atomic(atoms) => ModelRepr::Atomic {
                atoms: atoms
                    .into_iter()
                    .map(|a| AtomRepr {
                        re: a.value.re,
                        im: a.value.im,
                        w: a.weight,
                    })
                    .collect(),
            },
            SpectralModel::Named(n) => ModelRepr::Named {
                name: n.name().to_string(),
                params: n.params(),
            },
        }
    }
}

impl SpectralModel {
    pub fn atomic(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidModel(
                "atomic model needs at least one atom".into(),
            ));
        }
        if atoms
            .iter()
            .any(|a| !(a.weight > 0.0) || !a.value.re.is_finite() || !a.value.im.is_finite())
        {
            return Err(Error::InvalidModel(
                "atoms need finite values and positive weights".into(),
            ));
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidModel(format!(
                "atom weights sum to {total}, not 1"
            )));
        }
        Ok(SpectralModel::Atomic(atoms))
    }

    pub fn named(model: NamedModel) -> Result<Self> {
        model.validate()?;
        Ok(SpectralModel::Named(model))
    }

    /// `τ(T)`.
    pub fn trace(&self) -> Complex64 {
        match self {
            SpectralModel::Matrix(m) => m.normalized_trace(),
            SpectralModel::Atomic(atoms) => atoms.iter().map(|a| a.value * a.weight).sum(),
            SpectralModel::Named(NamedModel::Semicircular { mean, .. }) => {
                Complex64::new(*mean, 0.0)
            }
            SpectralModel::Named(_) => Complex64::new(0.0, 0.0),
        }
    }

    /// Hermitian matrix, real atoms, or a semicircular element.
    pub fn is_self_adjoint(&self) -> bool {
        match self {
            SpectralModel::Matrix(m) => m.is_hermitian(),
            SpectralModel::Atomic(atoms) => atoms.iter().all(|a| a.value.im.abs() < REAL_ATOM_TOL),
            SpectralModel::Named(n) => matches!(n, NamedModel::Semicircular { .. }),
        }
    }

    /// Model of `T*`. Every named model has the same ∗-distribution as its adjoint.
    pub fn adjoint(&self) -> SpectralModel {
        match self {
            SpectralModel::Matrix(m) => SpectralModel::Matrix(m.adjoint()),
            SpectralModel::Atomic(atoms) => SpectralModel::Atomic(
                atoms
                    .iter()
                    .map(|a| Atom::new(a.value.conj(), a.weight))
                    .collect(),
            ),
            SpectralModel::Named(n) => SpectralModel::Named(*n),
        }
    }

    /// Model of `zI + wT` for matrices and atomic models.
    pub fn affine(&self, z: Complex64, w: Complex64) -> Option<SpectralModel> {
        match self {
            SpectralModel::Matrix(m) => {
                let shifted = m.scale(w).add(&ComplexMatrix::identity(m.dim()).scale(z));
                Some(SpectralModel::Matrix(shifted))
            }
            SpectralModel::Atomic(atoms) => Some(SpectralModel::Atomic(
                atoms
                    .iter()
                    .map(|a| Atom::new(z + w * a.value, a.weight))
                    .collect(),
            )),
            SpectralModel::Named(_) => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SpectralModel::Matrix(_) => "matrix",
            SpectralModel::Atomic(_) => "atomic",
            SpectralModel::Named(_) => "named",
        }
    }
}

/// A compactly supported probability law on ℝ.
#[derive(Debug, Clone, PartialEq)]
pub enum RealDistribution {
    /// `(value, weight)` pairs.
    Atomic(Vec<(f64, f64)>),
    /// Semicircle law with the given center and standard deviation
    /// (support `center ± 2·std_dev`).
    Semicircle { center: f64, std_dev: f64 },
    /// Law of `cos S` for `S` uniform on `[-π, π]`.
    CosinePushforward,
    /// Uniform law on `[-½, ½]`.
    LinearTucci,
}

impl RealDistribution {
    /// The upper quantile `λ(s) = inf{t : P(X > t) ≤ s}` of a continuous law.
    pub fn quantile(&self, s: f64) -> Option<f64> {
        match *self {
            RealDistribution::Atomic(_) => None,
            RealDistribution::Semicircle { center, std_dev } => {
                Some(center + std_dev * SQRT_2 * semicircle_tail_inverse(s))
            }
            RealDistribution::CosinePushforward => Some((PI * s).cos()),
            RealDistribution::LinearTucci => Some(0.5 - s),
        }
    }

    /// `P(X ≤ t)` for the continuous laws.
    pub fn cdf(&self, t: f64) -> Option<f64> {
        match *self {
            RealDistribution::Atomic(_) => None,
            RealDistribution::Semicircle { center, std_dev } => {
                if std_dev == 0.0 {
                    return Some(if t >= center { 1.0 } else { 0.0 });
                }
                let y = (t - center) / (std_dev * SQRT_2);
                Some(1.0 - semicircle_tail(y.clamp(-SQRT_2, SQRT_2)))
            }
            RealDistribution::CosinePushforward => Some(1.0 - t.clamp(-1.0, 1.0).acos() / PI),
            RealDistribution::LinearTucci => Some((t + 0.5).clamp(0.0, 1.0)),
        }
    }

    /// Mean of the law.
    pub fn mean(&self) -> f64 {
        match self {
            RealDistribution::Atomic(atoms) => atoms.iter().map(|(v, w)| v * w).sum(),
            RealDistribution::Semicircle { center, .. } => *center,
            RealDistribution::CosinePushforward | RealDistribution::LinearTucci => 0.0,
        }
    }
}

/// Tail `P(Y > y)` of the semicircle law `(1/π)√(2 - x²)` on `[-√2, √2]`.
///
/// Strictly decreasing from 1 at `-√2` to 0 at `√2`.
pub fn semicircle_tail(y: f64) -> f64 {
    let y = y.clamp(-SQRT_2, SQRT_2);
    let root = (2.0 - y * y).max(0.0).sqrt();
    let arg = (y * FRAC_1_SQRT_2).clamp(-1.0, 1.0);
    0.5 - y * root / (2.0 * PI) - arg.asin() / PI
}

/// Inverse of [`semicircle_tail`], by bisection to full double precision.
///
/// Bisection rather than Newton: the derivative vanishes at both endpoints.
pub fn semicircle_tail_inverse(alpha: f64) -> f64 {
    if alpha <= 0.0 {
        return SQRT_2;
    }
    if alpha >= 1.0 {
        return -SQRT_2;
    }
    let (mut lo, mut hi) = (-SQRT_2, SQRT_2);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if semicircle_tail(mid) > alpha {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Midpoint quantile table of the law on `[-√2, √2]`, shared across calls.
fn standard_semicircle_cells(resolution: usize) -> Arc<Vec<f64>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<f64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(cells) = cache.lock().unwrap().get(&resolution) {
        return cells.clone();
    }
    let cells: Arc<Vec<f64>> = Arc::new(
        (0..resolution)
            .map(|i| semicircle_tail_inverse((i as f64 + 0.5) / resolution as f64))
            .collect(),
    );
    cache.lock().unwrap().insert(resolution, cells.clone());
    cells
}

/// Eigenvalue function of a law on ℝ.
///
/// Atomic laws are converted exactly (one piece per distinct value, lengths
/// equal to weights) and `resolution` is ignored. Continuous laws are sampled
/// at the midpoints of `resolution` equal cells.
pub fn quantile_step(d: &RealDistribution, resolution: usize) -> Result<StepFunction> {
    if resolution == 0 {
        return Err(Error::Domain("resolution must be at least 1".into()));
    }
    let n = resolution as f64;
    let values: Vec<f64> = match d {
        RealDistribution::Atomic(atoms) => {
            let pieces: Vec<(f64, f64)> = atoms.iter().map(|&(v, w)| (w, v)).collect();
            return Ok(rearrange(&StepFunction::from_pieces(&pieces)?));
        }
        RealDistribution::Semicircle { center, std_dev } => {
            let cells = standard_semicircle_cells(resolution);
            let scale = std_dev * SQRT_2;
            cells.iter().map(|h| center + scale * h).collect()
        }
        RealDistribution::CosinePushforward => (0..resolution)
            .map(|i| (PI * (i as f64 + 0.5) / n).cos())
            .collect(),
        RealDistribution::LinearTucci => (0..resolution)
            .map(|i| 0.5 - (i as f64 + 0.5) / n)
            .collect(),
    };
    StepFunction::equal_pieces(&values)
}

/// Law of `Re(e^{iθ}T)`.
pub fn real_part_distribution(m: &SpectralModel, theta: f64) -> RealDistribution {
    match m {
        SpectralModel::Matrix(t) => {
            let eig = hermitian_eigenvalues(&hermitian_part(t, theta))
                .expect("Hermitian by construction");
            let w = 1.0 / t.dim() as f64;
            RealDistribution::Atomic(eig.eigenvalues.into_iter().map(|v| (v, w)).collect())
        }
        SpectralModel::Atomic(atoms) => {
            let rot = Complex64::from_polar(1.0, theta);
            RealDistribution::Atomic(
                atoms
                    .iter()
                    .map(|a| ((rot * a.value).re, a.weight))
                    .collect(),
            )
        }
        SpectralModel::Named(named) => match *named {
            NamedModel::HaarUnitary => RealDistribution::CosinePushforward,
            NamedModel::Circular => RealDistribution::Semicircle {
                center: 0.0,
                std_dev: FRAC_1_SQRT_2,
            },
            NamedModel::Tucci => RealDistribution::LinearTucci,
            NamedModel::DtQuasinilpotent => RealDistribution::Semicircle {
                center: 0.0,
                std_dev: 0.5,
            },
            NamedModel::Elliptic { psi } => RealDistribution::Semicircle {
                center: 0.0,
                std_dev: elliptic_std_dev(psi, theta),
            },
            NamedModel::Semicircular { mean, variance } => {
                let c = theta.cos();
                RealDistribution::Semicircle {
                    center: mean * c,
                    std_dev: c.abs() * variance.sqrt(),
                }
            }
        },
    }
}

/// `b(θ) = √(cos²ψ cos²θ + sin²ψ sin²θ)`.
pub fn elliptic_std_dev(psi: f64, theta: f64) -> f64 {
    let (cp, sp) = (psi.cos(), psi.sin());
    let (ct, st) = (theta.cos(), theta.sin());
    (cp * cp * ct * ct + sp * sp * st * st).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigfun::pairing_integral;

    #[test]
    fn atomic_quantile_is_exact() {
        let d = RealDistribution::Atomic(vec![(1.0, 0.5), (-1.0, 0.5)]);
        let f = quantile_step(&d, 7).unwrap();
        assert_eq!(f.values(), &[1.0, -1.0]);
        assert_eq!(f.breakpoints(), &[0.0, 0.5, 1.0]);
    }

    #[test]
    fn cosine_pushforward_inverts_its_cdf() {
        let d = RealDistribution::CosinePushforward;
        for k in 1..100 {
            let s = k as f64 / 100.0;
            let t = d.quantile(s).unwrap();
            assert!((t - (PI * s).cos()).abs() < 1e-15);
            // P(X > λ(s)) = s
            assert!((1.0 - d.cdf(t).unwrap() - s).abs() < 1e-12);
        }
        let f = quantile_step(&d, 8).unwrap();
        for (i, v) in f.values().iter().enumerate() {
            assert!((v - (PI * (i as f64 + 0.5) / 8.0).cos()).abs() < 1e-15);
        }
    }

    #[test]
    fn tucci_quantile_is_linear() {
        let f = quantile_step(&RealDistribution::LinearTucci, 4).unwrap();
        assert_eq!(f.values(), &[0.375, 0.125, -0.125, -0.375]);
    }

    #[test]
    fn semicircle_quantile_inverts_cdf() {
        let d = RealDistribution::Semicircle {
            center: 0.3,
            std_dev: 1.7,
        };
        for k in 1..50 {
            let s = k as f64 / 50.0;
            let t = d.quantile(s).unwrap();
            assert!((1.0 - d.cdf(t).unwrap() - s).abs() < 1e-12);
        }
        assert!((d.quantile(0.5).unwrap() - 0.3).abs() < 1e-14);
        assert!(d.quantile(1e-9).unwrap() < 0.3 + 2.0 * 1.7);
    }

    #[test]
    fn quantile_steps_are_sorted() {
        for d in [
            RealDistribution::CosinePushforward,
            RealDistribution::LinearTucci,
            RealDistribution::Semicircle {
                center: 0.0,
                std_dev: 0.5,
            },
            RealDistribution::Atomic(vec![(0.2, 0.1), (3.0, 0.3), (-1.0, 0.6)]),
        ] {
            assert!(quantile_step(&d, 64).unwrap().is_sorted());
        }
        assert!(quantile_step(&RealDistribution::LinearTucci, 0).is_err());
    }

    #[test]
    fn real_parts_of_atomic_and_matrix_models() {
        let m = SpectralModel::atomic(vec![Atom::new(Complex64::new(0.0, 1.0), 1.0)]).unwrap();
        assert_eq!(
            real_part_distribution(&m, 0.0),
            RealDistribution::Atomic(vec![(0.0, 1.0)])
        );

        let d = SpectralModel::Matrix(ComplexMatrix::from_real_diag(&[1.0, -1.0]));
        let RealDistribution::Atomic(atoms) = real_part_distribution(&d, PI) else {
            panic!("matrix laws are atomic")
        };
        let f = quantile_step(&RealDistribution::Atomic(atoms.clone()), 1).unwrap();
        assert_eq!(atoms.len(), 2);
        assert!((f.values()[0] - 1.0).abs() < 1e-15 && (f.values()[1] + 1.0).abs() < 1e-15);
        assert!(atoms.iter().all(|a| a.1 == 0.5));
    }

    #[test]
    fn elliptic_quarter_pi_is_isotropic() {
        let m = NamedModel::Elliptic { psi: PI / 4.0 };
        for k in 0..16 {
            let theta = k as f64 * PI / 8.0;
            match real_part_distribution(&SpectralModel::Named(m), theta) {
                RealDistribution::Semicircle { center, std_dev } => {
                    assert_eq!(center, 0.0);
                    assert!((std_dev - FRAC_1_SQRT_2).abs() < 1e-15);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn rotation_invariant_models_ignore_theta() {
        for named in [
            NamedModel::HaarUnitary,
            NamedModel::Circular,
            NamedModel::Tucci,
            NamedModel::DtQuasinilpotent,
        ] {
            assert!(named.is_rotation_invariant());
            let m = SpectralModel::Named(named);
            let base = real_part_distribution(&m, 0.0);
            for k in 1..12 {
                assert_eq!(real_part_distribution(&m, k as f64 * 0.55), base);
            }
        }
    }

    #[test]
    fn atomic_integral_is_trace_of_real_part() {
        let atoms = vec![
            Atom::new(Complex64::new(1.0, 2.0), 0.25),
            Atom::new(Complex64::new(-0.5, 0.1), 0.5),
            Atom::new(Complex64::new(0.0, -1.0), 0.25),
        ];
        let m = SpectralModel::atomic(atoms).unwrap();
        for theta in [0.0, 0.4, 2.0, 5.5] {
            let f = quantile_step(&real_part_distribution(&m, theta), 1).unwrap();
            let expected = (Complex64::from_polar(1.0, theta) * m.trace()).re;
            assert!((f.integral() - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn refinement_converges_on_semicircle() {
        let d = RealDistribution::Semicircle {
            center: 0.0,
            std_dev: 1.0,
        };
        let weight = StepFunction::from_pieces(&[(0.3, 2.0), (0.45, 1.0), (0.25, -0.5)]).unwrap();
        let pair = |r: usize| pairing_integral(&quantile_step(&d, r).unwrap(), &weight, false);
        let mut prev = pair(64);
        let mut last_diff = f64::INFINITY;
        for r in [128, 256, 512, 1024, 2048] {
            let cur = pair(r);
            let diff = (cur - prev).abs();
            assert!(diff < last_diff, "resolution {r}: {diff} !< {last_diff}");
            assert!(diff <= 4.0 / r as f64);
            last_diff = diff;
            prev = cur;
        }
    }

    #[test]
    fn json_operator_specs() {
        let m: SpectralModel =
            serde_json::from_str(r#"{"kind":"named","name":"elliptic","params":{"psi":0.5}}"#)
                .unwrap();
        assert_eq!(m, SpectralModel::Named(NamedModel::Elliptic { psi: 0.5 }));
        let m: SpectralModel =
            serde_json::from_str(r#"{"kind":"named","name":"haar_unitary"}"#).unwrap();
        assert_eq!(m, SpectralModel::Named(NamedModel::HaarUnitary));
        let m: SpectralModel = serde_json::from_str(
            r#"{"kind":"atomic","atoms":[{"re":1,"im":0,"w":0.5},{"re":0,"im":1,"w":0.5}]}"#,
        )
        .unwrap();
        assert!(matches!(m, SpectralModel::Atomic(ref a) if a.len() == 2));
        let m: SpectralModel =
            serde_json::from_str(r#"{"kind":"matrix","entries":[[[0,0],[1,0]],[[0,0],[0,0]]]}"#)
                .unwrap();
        assert!(matches!(m, SpectralModel::Matrix(_)));

        assert!(
            serde_json::from_str::<SpectralModel>(r#"{"kind":"named","name":"nope"}"#).is_err()
        );
        assert!(serde_json::from_str::<SpectralModel>(
            r#"{"kind":"named","name":"elliptic","params":{"psi":2.0}}"#
        )
        .is_err());
        assert!(serde_json::from_str::<SpectralModel>(
            r#"{"kind":"atomic","atoms":[{"re":1,"im":0,"w":0.7}]}"#
        )
        .is_err());
    }
}

//! Dense complex matrices at desk scale.
//!
//! `M_n(ℂ)` carries the normalized trace `Tr / n`. Hermitian eigenvalues come
//! from a cyclic Jacobi solver run on the real symmetric embedding
//! `[[A, -B], [B, A]]` of `H = A + iB`, which doubles every eigenvalue of `H`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::eigfun::StepFunction;
use crate::error::{Error, Result};

/// Absolute-relative tolerance for treating a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

const JACOBI_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<[f64; 2]>>", into = "Vec<Vec<[f64; 2]>>")]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl TryFrom<Vec<Vec<[f64; 2]>>> for ComplexMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<[f64; 2]>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|[re, im]| Complex64::new(re, im))
                    .collect()
            })
            .collect();
        ComplexMatrix::from_rows(rows)
    }
}

impl From<ComplexMatrix> for Vec<Vec<[f64; 2]>> {
    fn from(m: ComplexMatrix) -> Self {
        m.data
            .chunks(m.n.max(1))
            .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
            .collect()
    }
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diag(diag: &[Complex64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let d: Vec<Complex64> = diag.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_diag(&d)
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        let data: Vec<Complex64> = rows.into_iter().flatten().collect();
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidMatrix("non-finite entry".into()));
        }
        Ok(ComplexMatrix { n, data })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.n + j] = z;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, z: Complex64) -> Self {
        ComplexMatrix {
            n: self.n,
            data: self.data.iter().map(|&x| x * z).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `Tr / n`.
    pub fn normalized_trace(&self) -> Complex64 {
        self.trace() / self.n as f64
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `max |h_ij - conj(h_ji)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect() <= HERMITIAN_TOL * self.max_abs().max(1.0)
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        let gram = hermitian_part(&self.adjoint().mul(self), 0.0);
        let eig = hermitian_eigenvalues(&gram).expect("Gram matrix is Hermitian");
        eig.eigenvalues[0].max(0.0).sqrt()
    }

    /// Zeroes every entry whose row and column fall in different blocks.
    pub fn pinch(&self, block_of: &[usize]) -> Self {
        assert_eq!(block_of.len(), self.n);
        Self::from_fn(self.n, |i, j| {
            if block_of[i] == block_of[j] {
                self.get(i, j)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }
}

/// `Re(e^{iθ}T) = ½(e^{iθ}T + (e^{iθ}T)*)`, made exactly Hermitian.
pub fn hermitian_part(t: &ComplexMatrix, theta: f64) -> ComplexMatrix {
    let n = t.n;
    let z = Complex64::from_polar(1.0, theta);
    let mut h = ComplexMatrix::zeros(n);
    for i in 0..n {
        h.set(i, i, Complex64::new((z * t.get(i, i)).re, 0.0));
        for j in i + 1..n {
            let v = 0.5 * (z * t.get(i, j) + (z * t.get(j, i)).conj());
            h.set(i, j, v);
            h.set(j, i, v.conj());
        }
    }
    h
}

/// Spectrum of a Hermitian matrix, sorted non-increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
}

pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let defect = h.hermitian_defect();
    if defect > HERMITIAN_TOL * h.max_abs().max(1.0) {
        return Err(Error::NotHermitian(defect));
    }
    let n = h.n;
    let m = 2 * n;
    let mut a = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let z = h.get(i, j);
            a[i * m + j] = z.re;
            a[(i + n) * m + (j + n)] = z.re;
            a[i * m + (j + n)] = -z.im;
            a[(i + n) * m + j] = z.im;
        }
    }
    let mut doubled = jacobi_symmetric(&mut a, m);
    doubled.sort_by(|x, y| y.total_cmp(x));
    Ok(HermitianEigen {
        eigenvalues: doubled.into_iter().step_by(2).collect(),
    })
}

/// Cyclic Jacobi on a dense symmetric `m × m` matrix; returns its eigenvalues.
fn jacobi_symmetric(a: &mut [f64], m: usize) -> Vec<f64> {
    let total: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    s += a[i * m + j] * a[i * m + j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(a) <= JACOBI_TOL * total {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..m {
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for k in 0..m {
                    let apk = a[p * m + k];
                    let aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                a[p * m + q] = 0.0;
                a[q * m + p] = 0.0;
            }
        }
    }
    (0..m).map(|i| a[i * m + i]).collect()
}

/// `λ_{Re(e^{iθ}T)}` for the normalized trace: `n` pieces of width `1/n`.
pub fn eigenvalue_function_of_matrix(t: &ComplexMatrix, theta: f64) -> StepFunction {
    let eig = hermitian_eigenvalues(&hermitian_part(t, theta)).expect("Hermitian by construction");
    StepFunction::equal_pieces(&eig.eigenvalues).expect("n >= 1")
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// Orthonormalizes `k` complex Gaussian vectors in `ℂⁿ` (Gram–Schmidt, applied
/// twice). The positive-diagonal QR convention makes the columns the first
/// `k` columns of a Haar unitary.
pub fn haar_isometry<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> Vec<Vec<Complex64>> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(k);
    while cols.len() < k {
        let mut v: Vec<Complex64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        for _ in 0..2 {
            for q in &cols {
                let dot: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= dot * qi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-10 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= norm);
        cols.push(v);
    }
    cols
}

pub fn random_unitary_with<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let cols = haar_isometry(rng, n, n);
    ComplexMatrix::from_fn(n, |i, j| cols[j][i])
}

/// Haar-distributed unitary from a seeded ChaCha8 stream.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    random_unitary_with(&mut seeded_rng(seed), n)
}

/// `U diag(1 × k, 0 × (n - k)) U*` for a Haar unitary `U`.
pub fn random_projection(n: usize, k: usize, seed: u64) -> Result<ComplexMatrix> {
    if k == 0 || k > n {
        return Err(Error::InvalidRank { k, n });
    }
    let cols = haar_isometry(&mut seeded_rng(seed), n, k);
    Ok(projection_from_columns(n, &cols))
}

pub fn projection_from_columns(n: usize, cols: &[Vec<Complex64>]) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |i, j| cols.iter().map(|c| c[i] * c[j].conj()).sum())
}

/// Random Hermitian matrix with complex Gaussian entries (GUE up to scale).
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_ginibre(rng, n);
    hermitian_part(&g, 0.0)
}

/// Matrix with i.i.d. standard complex Gaussian entries.
pub fn random_ginibre<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, complex_gaussian(rng));
        }
    }
    m
}

//! Right-continuous step functions on `[0, 1)`.
//!
//! Eigenvalue functions (non-increasing quantiles of spectral distributions)
//! are represented exactly as [`StepFunction`]s. Every integral in this module
//! is a finite sum over pieces, so nothing here carries quadrature error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used by [`majorizes`] on partial integrals.
pub const MAJORIZATION_TOL: f64 = 1e-9;

/// Tolerance on the total length of pieces handed to [`StepFunction::from_pieces`].
const LENGTH_TOL: f64 = 1e-12;

/// A piecewise-constant function on `[0, 1)`.
///
/// Piece `k` takes value `values[k]` on `[breakpoints[k], breakpoints[k + 1])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StepFunctionRepr", into = "StepFunctionRepr")]
pub struct StepFunction {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
    sorted: bool,
}

#[derive(Serialize, Deserialize)]
struct StepFunctionRepr {
    breakpoints: Vec<f64>,
    values: Vec<f64>,
}

impl TryFrom<StepFunctionRepr> for StepFunction {
    type Error = Error;

    fn try_from(r: StepFunctionRepr) -> Result<Self> {
        StepFunction::new(r.breakpoints, r.values)
    }
}

impl From<StepFunction> for StepFunctionRepr {
    fn from(f: StepFunction) -> Self {
        StepFunctionRepr {
            breakpoints: f.breakpoints,
            values: f.values,
        }
    }
}

impl StepFunction {
    pub fn new(breakpoints: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidStepFunction("no pieces".into()));
        }
        if breakpoints.len() != values.len() + 1 {
            return Err(Error::InvalidStepFunction(format!(
                "{} breakpoints for {} values",
                breakpoints.len(),
                values.len()
            )));
        }
        if breakpoints[0] != 0.0 || *breakpoints.last().unwrap() != 1.0 {
            return Err(Error::InvalidStepFunction(
                "breakpoints must start at 0 and end at 1".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidStepFunction(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidStepFunction("non-finite value".into()));
        }
        let sorted = values.windows(2).all(|w| w[0] >= w[1]);
        Ok(StepFunction {
            breakpoints,
            values,
            sorted,
        })
    }

    pub fn constant(c: f64) -> Self {
        StepFunction {
            breakpoints: vec![0.0, 1.0],
            values: vec![c],
            sorted: true,
        }
    }

    /// Builds a step function from `(length, value)` pieces laid out left to right.
    ///
    /// Zero-length pieces are dropped; lengths must sum to 1.
    pub fn from_pieces(pieces: &[(f64, f64)]) -> Result<Self> {
        let total: f64 = pieces.iter().map(|p| p.0).sum();
        if pieces.iter().any(|p| !(p.0 >= 0.0)) || (total - 1.0).abs() > LENGTH_TOL {
            return Err(Error::InvalidStepFunction(format!(
                "piece lengths must be nonnegative and sum to 1 (got {total})"
            )));
        }
        let kept: Vec<(f64, f64)> = pieces.iter().copied().filter(|p| p.0 > 0.0).collect();
        if kept.is_empty() {
            return Err(Error::InvalidStepFunction(
                "all pieces have zero length".into(),
            ));
        }
        let f = assemble(&kept);
        StepFunction::new(f.breakpoints, f.values)
    }

    /// `n` pieces of width `1/n` carrying `values` in order.
    pub fn equal_pieces(values: &[f64]) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidStepFunction("no pieces".into()));
        }
        let breakpoints = (0..=n).map(|k| k as f64 / n as f64).collect();
        StepFunction::new(breakpoints, values.to_vec())
    }

    /// `height` on `[0, len)` and zero afterwards; `len = 1` gives the constant.
    pub fn head_indicator(len: f64, height: f64) -> Result<Self> {
        if !(len > 0.0 && len <= 1.0) {
            return Err(Error::Domain(format!(
                "indicator length {len} not in (0, 1]"
            )));
        }
        if len == 1.0 {
            Ok(StepFunction::constant(height))
        } else {
            StepFunction::new(vec![0.0, len, 1.0], vec![height, 0.0])
        }
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn num_pieces(&self) -> usize {
        self.values.len()
    }

    pub fn is_sorted(&self) -> bool {
        self.sorted
    }

    /// `(start, end, value)` for each piece.
    pub fn pieces(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .map(|(w, &v)| (w[0], w[1], v))
    }

    /// Right-continuous evaluation; `s = 1` returns the last value.
    pub fn eval(&self, s: f64) -> f64 {
        let idx = self.breakpoints.partition_point(|&x| x <= s);
        self.values[idx.saturating_sub(1).min(self.values.len() - 1)]
    }

    pub fn integral(&self) -> f64 {
        self.pieces().map(|(a, b, v)| (b - a) * v).sum()
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Applies `op` to every value, keeping the breakpoints.
    pub fn map(&self, op: impl Fn(f64) -> f64) -> StepFunction {
        let values: Vec<f64> = self.values.iter().map(|&v| op(v)).collect();
        let sorted = values.windows(2).all(|w| w[0] >= w[1]);
        StepFunction {
            breakpoints: self.breakpoints.clone(),
            values,
            sorted,
        }
    }

    /// `s ↦ self(1 - s)`, up to values on the (null) breakpoint set.
    pub fn reflect(&self) -> StepFunction {
        let breakpoints: Vec<f64> = self.breakpoints.iter().rev().map(|x| 1.0 - x).collect();
        let values: Vec<f64> = self.values.iter().rev().copied().collect();
        let sorted = values.windows(2).all(|w| w[0] >= w[1]);
        StepFunction {
            breakpoints,
            values,
            sorted,
        }
    }

    /// Merges adjacent pieces that carry the same value.
    pub fn merged(&self) -> StepFunction {
        let mut breakpoints = vec![0.0];
        let mut values: Vec<f64> = Vec::with_capacity(self.values.len());
        for (_, b, v) in self.pieces() {
            if values.last() == Some(&v) {
                *breakpoints.last_mut().unwrap() = b;
            } else {
                values.push(v);
                breakpoints.push(b);
            }
        }
        StepFunction {
            breakpoints,
            values,
            sorted: self.sorted,
        }
    }

    /// Pointwise `op(self, other)` on the union of both breakpoint sets.
    pub fn combine(&self, other: &StepFunction, op: impl Fn(f64, f64) -> f64) -> StepFunction {
        let mut breakpoints = vec![0.0];
        let mut values = Vec::new();
        for (_, b, fv, gv) in overlay(self, other) {
            breakpoints.push(b);
            values.push(op(fv, gv));
        }
        let sorted = values.windows(2).all(|w| w[0] >= w[1]);
        StepFunction {
            breakpoints,
            values,
            sorted,
        }
    }

    /// `t·self + (1 - t)·other`, pointwise.
    pub fn convex_combination(&self, other: &StepFunction, t: f64) -> StepFunction {
        self.combine(other, |a, b| t * a + (1.0 - t) * b)
    }

    /// Essential sup of `|self - other|`.
    pub fn sup_distance(&self, other: &StepFunction) -> f64 {
        overlay(self, other)
            .into_iter()
            .map(|(_, _, a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Walks both functions over the union of their breakpoints, yielding
/// `(start, end, f, g)` for every nonempty cell.
fn overlay(f: &StepFunction, g: &StepFunction) -> Vec<(f64, f64, f64, f64)> {
    let (fb, gb) = (&f.breakpoints, &g.breakpoints);
    let mut out = Vec::with_capacity(f.values.len() + g.values.len());
    let (mut i, mut j) = (0, 0);
    let mut start = 0.0;
    while i < f.values.len() && j < g.values.len() {
        let end = fb[i + 1].min(gb[j + 1]);
        if end > start {
            out.push((start, end, f.values[i], g.values[j]));
            start = end;
        }
        if fb[i + 1] <= end {
            i += 1;
        }
        if gb[j + 1] <= end {
            j += 1;
        }
    }
    out
}

/// Non-increasing rearrangement: pieces sorted by value, equal values merged.
pub fn rearrange(f: &StepFunction) -> StepFunction {
    if f.sorted {
        return f.merged();
    }
    let mut pieces: Vec<(f64, f64)> = f.pieces().map(|(a, b, v)| (b - a, v)).collect();
    pieces.sort_by(|x, y| y.1.total_cmp(&x.1));
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(pieces.len());
    for (len, v) in pieces {
        match merged.last_mut() {
            Some(last) if last.1 == v => last.0 += len,
            _ => merged.push((len, v)),
        }
    }
    assemble(&merged)
}

/// Lays out positive-length pieces from 0, pinning the last breakpoint to 1.
fn assemble(pieces: &[(f64, f64)]) -> StepFunction {
    let mut breakpoints = Vec::with_capacity(pieces.len() + 1);
    let mut values = Vec::with_capacity(pieces.len());
    breakpoints.push(0.0);
    let mut acc = 0.0;
    for &(len, v) in pieces {
        acc += len;
        if acc >= 1.0 {
            // rounding pushed this piece to the end; anything after it is empty
            values.push(v);
            break;
        }
        breakpoints.push(acc);
        values.push(v);
    }
    if breakpoints.len() == values.len() {
        breakpoints.push(1.0);
    } else {
        *breakpoints.last_mut().unwrap() = 1.0;
    }
    let sorted = values.windows(2).all(|w| w[0] >= w[1]);
    StepFunction {
        breakpoints,
        values,
        sorted,
    }
}

/// Exact `∫₀ᵗ f`.
pub fn partial_integral(f: &StepFunction, t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("t = {t} not in [0, 1]")));
    }
    let mut acc = 0.0;
    for (a, b, v) in f.pieces() {
        if a >= t {
            break;
        }
        acc += (b.min(t) - a) * v;
    }
    Ok(acc)
}

/// Outcome of a majorization test `g ≺ f`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MajorizationVerdict {
    pub majorizes: bool,
    /// Where `∫₀ᵗ g - ∫₀ᵗ f` is largest.
    pub worst_t: f64,
    /// The value of `∫₀ᵗ g - ∫₀ᵗ f` at `worst_t`; positive means violated.
    pub worst_gap: f64,
    /// `∫f - ∫g`.
    pub total_integral_gap: f64,
}

/// Tests whether `f` majorizes `g` (written `g ≺ f`) after sorting both.
///
/// Partial integrals are piecewise linear with kinks at breakpoints, so it is
/// enough to compare them on the merged breakpoint set.
pub fn majorizes(f: &StepFunction, g: &StepFunction) -> MajorizationVerdict {
    let fs = rearrange(f);
    let gs = rearrange(g);
    let (mut big_f, mut big_g) = (0.0, 0.0);
    let mut worst_t = 0.0;
    let mut worst_gap = f64::NEG_INFINITY;
    for (a, b, fv, gv) in overlay(&fs, &gs) {
        big_f += (b - a) * fv;
        big_g += (b - a) * gv;
        let gap = big_g - big_f;
        if gap > worst_gap {
            worst_gap = gap;
            worst_t = b;
        }
    }
    let total_integral_gap = big_f - big_g;
    MajorizationVerdict {
        majorizes: worst_gap <= MAJORIZATION_TOL && total_integral_gap.abs() <= MAJORIZATION_TOL,
        worst_t,
        worst_gap,
        total_integral_gap,
    }
}

/// `∫₀¹ f(s) g(s) ds`, or `∫₀¹ f(s) g(1 - s) ds` when `reversed`.
pub fn pairing_integral(f: &StepFunction, g: &StepFunction, reversed: bool) -> f64 {
    let reflected;
    let g = if reversed {
        reflected = g.reflect();
        &reflected
    } else {
        g
    };
    let (fb, gb) = (&f.breakpoints, &g.breakpoints);
    let (mut i, mut j) = (0, 0);
    let mut start = 0.0;
    let mut acc = 0.0;
    while i < f.values.len() && j < g.values.len() {
        let end = fb[i + 1].min(gb[j + 1]);
        if end > start {
            acc += (end - start) * f.values[i] * g.values[j];
            start = end;
        }
        if fb[i + 1] <= end {
            i += 1;
        }
        if gb[j + 1] <= end {
            j += 1;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pieces(p: &[(f64, f64)]) -> StepFunction {
        StepFunction::from_pieces(p).unwrap()
    }

    #[test]
    fn rejects_bad_breakpoints() {
        assert!(StepFunction::new(vec![0.0, 0.5], vec![1.0]).is_err());
        assert!(StepFunction::new(vec![0.0, 0.5, 0.5, 1.0], vec![1.0, 2.0, 3.0]).is_err());
        assert!(StepFunction::new(vec![0.1, 1.0], vec![1.0]).is_err());
        assert!(StepFunction::new(vec![0.0, 1.0], vec![1.0, 2.0]).is_err());
        assert!(StepFunction::new(vec![0.0, 1.0], vec![f64::NAN]).is_err());
        assert!(StepFunction::from_pieces(&[(0.5, 1.0), (0.4, 2.0)]).is_err());
    }

    #[test]
    fn eval_is_right_continuous() {
        let f = pieces(&[(0.5, 1.0), (0.5, 0.0)]);
        assert_eq!(f.eval(0.0), 1.0);
        assert_eq!(f.eval(0.4999), 1.0);
        assert_eq!(f.eval(0.5), 0.0);
        assert_eq!(f.eval(1.0), 0.0);
    }

    #[test]
    fn rearrange_sorts_thirds() {
        let f = StepFunction::equal_pieces(&[1.0, 3.0, 2.0]).unwrap();
        let r = rearrange(&f);
        assert_eq!(r.values(), &[3.0, 2.0, 1.0]);
        assert!(r.is_sorted());
        assert!((r.integral() - f.integral()).abs() < 1e-15);
    }

    #[test]
    fn rearrange_constant_is_identity() {
        let f = StepFunction::constant(2.5);
        assert_eq!(rearrange(&f), f);
    }

    #[test]
    fn rearrange_merges_equal_values() {
        let f = pieces(&[(0.5, 0.0), (0.25, 5.0), (0.25, 5.0)]);
        let r = rearrange(&f);
        assert_eq!(r.values(), &[5.0, 0.0]);
        assert_eq!(r.breakpoints(), &[0.0, 0.5, 1.0]);
        // distribution functions m({f >= x}) agree
        for x in [-1.0, 0.0, 2.0, 5.0, 6.0] {
            let m = |h: &StepFunction| -> f64 {
                h.pieces().filter(|p| p.2 >= x).map(|p| p.1 - p.0).sum()
            };
            assert!((m(&f) - m(&r)).abs() < 1e-15);
        }
    }

    #[test]
    fn partial_integral_examples() {
        assert!((partial_integral(&StepFunction::constant(1.0), 0.7).unwrap() - 0.7).abs() < 1e-15);
        let f = pieces(&[(0.5, 1.0), (0.5, 0.0)]);
        assert_eq!(partial_integral(&f, 0.75).unwrap(), 0.5);
        let g = pieces(&[(0.5, 3.0), (0.5, 1.0)]);
        assert_eq!(partial_integral(&g, 1.0).unwrap(), 2.0);
        assert!(partial_integral(&g, 1.5).is_err());
        assert!(partial_integral(&g, -0.1).is_err());
    }

    #[test]
    fn majorization_examples() {
        let f = pieces(&[(0.5, 1.0), (0.5, 0.0)]);
        assert!(majorizes(&f, &StepFunction::constant(0.5)).majorizes);
        assert!(!majorizes(&StepFunction::constant(0.5), &f).majorizes);

        let v = majorizes(&f, &StepFunction::constant(0.4));
        assert!(!v.majorizes);
        assert!((v.total_integral_gap - 0.1).abs() < 1e-15);

        let h = StepFunction::equal_pieces(&[0.3, -1.0, 2.0, 0.7]).unwrap();
        let v = majorizes(&h, &rearrange(&h));
        assert!(v.majorizes);
        assert_eq!(v.total_integral_gap, 0.0);
    }

    #[test]
    fn pairing_examples() {
        let ind = StepFunction::head_indicator(0.5, 1.0).unwrap();
        assert_eq!(pairing_integral(&ind, &ind, false), 0.5);
        assert_eq!(pairing_integral(&ind, &ind, true), 0.0);

        let g = StepFunction::equal_pieces(&[4.0, -1.0, 0.5]).unwrap();
        let m = g.integral();
        let c = StepFunction::constant(3.0);
        assert!((pairing_integral(&c, &g, false) - 3.0 * m).abs() < 1e-14);
        assert!((pairing_integral(&c, &g, true) - 3.0 * m).abs() < 1e-14);

        let f = pieces(&[(0.5, 1.0), (0.5, 0.0)]);
        let g = pieces(&[(0.5, 2.0), (0.5, 1.0)]);
        assert_eq!(pairing_integral(&f, &g, false), 1.0);
    }

    #[test]
    fn json_form_round_trips_and_validates() {
        let f = pieces(&[(0.25, 3.0), (0.75, -1.0)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"breakpoints":[0.0,0.25,1.0],"values":[3.0,-1.0]}"#);
        let back: StepFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"breakpoints":[0,0.7,0.6,1],"values":[1,2,3]}"#;
        assert!(serde_json::from_str::<StepFunction>(bad).is_err());
    }

    #[test]
    fn combine_uses_union_grid() {
        let f = StepFunction::equal_pieces(&[1.0, 0.0]).unwrap();
        let g = StepFunction::equal_pieces(&[2.0, 1.0, 0.0]).unwrap();
        let h = f.combine(&g, |a, b| a + b);
        assert_eq!(h.num_pieces(), 4);
        assert_eq!(h.values(), &[3.0, 2.0, 1.0, 0.0]);
        assert!((h.integral() - (f.integral() + g.integral())).abs() < 1e-15);
    }
}

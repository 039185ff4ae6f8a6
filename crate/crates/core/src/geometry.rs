//! Compact convex subsets of ℂ described by supporting functions.
//!
//! The supporting function of `K` is `g_K(θ) = sup { Re(e^{iθ}z) : z ∈ K }`,
//! i.e. the support of `K` in the direction `(cos θ, -sin θ)`. A compact convex
//! set is the intersection of the half-planes `Re(e^{iθ}z) ≤ g_K(θ)`; sampling
//! finitely many `θ` gives a circumscribed polygon.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of uniformly spaced directions.
pub const DEFAULT_DIRECTIONS: usize = 720;

/// Relative tolerance (times `max |g|`) for half-plane redundancy decisions.
pub const HALFPLANE_TOL: f64 = 1e-9;

/// `Re(e^{iθ}z)`.
#[inline]
pub fn directional(z: Complex64, theta: f64) -> f64 {
    z.re * theta.cos() - z.im * theta.sin()
}

/// `k · 2π / n` for `k = 0..n`.
pub fn uniform_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| k as f64 * TAU / n as f64).collect()
}

/// Direction angle whose outward normal is `(nx, ny)`.
fn angle_of_normal(nx: f64, ny: f64) -> f64 {
    (-ny).atan2(nx).rem_euclid(TAU)
}

/// Sorts angles into `[0, 2π)` and removes near-duplicates.
pub fn normalize_angles(mut thetas: Vec<f64>) -> Vec<f64> {
    for t in thetas.iter_mut() {
        *t = t.rem_euclid(TAU);
        if *t >= TAU {
            *t = 0.0;
        }
    }
    thetas.sort_by(f64::total_cmp);
    thetas.dedup_by(|b, a| (*b - *a).abs() < 1e-13);
    if thetas.len() > 1 && TAU - thetas[thetas.len() - 1] + thetas[0] < 1e-13 {
        thetas.pop();
    }
    thetas
}

/// Samples `(θ_j, g(θ_j))` of a supporting function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportSample {
    thetas: Vec<f64>,
    values: Vec<f64>,
}

impl SupportSample {
    /// Checks shape: at least three strictly increasing directions in
    /// `[0, 2π)` with every angular gap below `π`, so the half-planes bound a
    /// compact set. Consistency (nonempty intersection) is checked by
    /// [`region_from_support`].
    pub fn new(thetas: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if thetas.len() < 3 {
            return Err(Error::InvalidSupport("need at least 3 directions".into()));
        }
        if thetas.len() != values.len() {
            return Err(Error::InvalidSupport(
                "thetas and values differ in length".into(),
            ));
        }
        if thetas[0] < 0.0
            || *thetas.last().unwrap() >= TAU
            || thetas.windows(2).any(|w| !(w[0] < w[1]))
        {
            return Err(Error::InvalidSupport(
                "directions must be strictly increasing in [0, 2π)".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidSupport("non-finite support value".into()));
        }
        let s = SupportSample { thetas, values };
        if s.max_gap() >= PI {
            return Err(Error::InvalidSupport(
                "directions leave an angular gap of π or more; the set is unbounded".into(),
            ));
        }
        Ok(s)
    }

    /// Evaluates `g` on `thetas`.
    pub fn from_fn(thetas: Vec<f64>, g: impl Fn(f64) -> f64) -> Result<Self> {
        let values = thetas.iter().map(|&t| g(t)).collect();
        SupportSample::new(thetas, values)
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    /// Largest angular gap between consecutive directions, wrapping around.
    pub fn max_gap(&self) -> f64 {
        let n = self.thetas.len();
        let wrap = TAU - self.thetas[n - 1] + self.thetas[0];
        self.thetas
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(wrap, f64::max)
    }

    pub fn scale(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    /// Periodic linear interpolation of the samples.
    pub fn interpolate(&self, theta: f64) -> f64 {
        let t = theta.rem_euclid(TAU);
        let n = self.thetas.len();
        let idx = self.thetas.partition_point(|&x| x <= t);
        let (i0, i1) = if idx == 0 || idx == n {
            (n - 1, 0)
        } else {
            (idx - 1, idx)
        };
        let (t0, mut t1) = (self.thetas[i0], self.thetas[i1]);
        let mut t = t;
        if i1 == 0 {
            t1 += TAU;
            if t < t0 {
                t += TAU;
            }
        }
        let w = (t - t0) / (t1 - t0);
        self.values[i0] * (1.0 - w) + self.values[i1] * w
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,g\n");
        for (t, g) in self.thetas.iter().zip(&self.values) {
            let _ = writeln!(out, "{},{}", fmt17(*t), fmt17(*g));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = parse_csv_pairs(text, "theta,g")?;
        let (thetas, values) = rows.into_iter().unzip();
        SupportSample::new(thetas, values)
    }
}

/// A compact convex polygon (possibly a segment or a point), vertices
/// counterclockwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexRegion {
    vertices: Vec<Complex64>,
    support: Option<SupportSample>,
}

impl ConvexRegion {
    pub fn point(z: Complex64) -> Self {
        ConvexRegion {
            vertices: vec![z],
            support: None,
        }
    }

    pub fn segment(a: Complex64, b: Complex64) -> Self {
        ConvexRegion::from_points(&[a, b]).expect("two points")
    }

    /// Convex hull of `points`.
    pub fn from_points(points: &[Complex64]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidSupport("no points".into()));
        }
        if points
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::InvalidSupport("non-finite point".into()));
        }
        let scale = points.iter().map(|z| z.norm()).fold(0.0, f64::max);
        Ok(ConvexRegion {
            vertices: canonical_hull(points, 1e-14 * scale),
            support: None,
        })
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn support_sample(&self) -> Option<&SupportSample> {
        self.support.as_ref()
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_segment(&self) -> bool {
        self.vertices.len() == 2
    }

    /// `max_v Re(e^{iθ}v)`.
    pub fn support_at(&self, theta: f64) -> f64 {
        let (c, s) = (theta.cos(), theta.sin());
        self.vertices
            .iter()
            .map(|z| z.re * c - z.im * s)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0.0;
        }
        let mut a = 0.0;
        for i in 0..n {
            let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
            a += p.re * q.im - q.re * p.im;
        }
        0.5 * a
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, p) in self.vertices.iter().enumerate() {
            for q in &self.vertices[i + 1..] {
                d = d.max((p - q).norm());
            }
        }
        d
    }

    /// `[min Re, max Re]` over the region.
    pub fn real_projection(&self) -> (f64, f64) {
        let lo = self
            .vertices
            .iter()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min);
        let hi = self
            .vertices
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }

    /// Euclidean distance from `z` to the region (zero inside).
    pub fn distance_to(&self, z: Complex64) -> f64 {
        let v = &self.vertices;
        match v.len() {
            1 => (z - v[0]).norm(),
            2 => point_segment_distance(z, v[0], v[1]),
            n => {
                let inside = (0..n).all(|i| cross(v[(i + 1) % n] - v[i], z - v[i]) >= 0.0);
                if inside {
                    0.0
                } else {
                    (0..n)
                        .map(|i| point_segment_distance(z, v[i], v[(i + 1) % n]))
                        .fold(f64::INFINITY, f64::min)
                }
            }
        }
    }

    pub fn contains_point(&self, z: Complex64, slack: f64) -> bool {
        self.distance_to(z) <= slack
    }

    /// Image under `z ↦ a + b·z`.
    pub fn affine_image(&self, a: Complex64, b: Complex64) -> ConvexRegion {
        let pts: Vec<Complex64> = self.vertices.iter().map(|&z| a + b * z).collect();
        ConvexRegion::from_points(&pts).expect("finite points")
    }

    /// Reflection across the real axis.
    pub fn conjugate(&self) -> ConvexRegion {
        let pts: Vec<Complex64> = self.vertices.iter().map(|z| z.conj()).collect();
        ConvexRegion::from_points(&pts).expect("finite points")
    }

    /// Directions normal to the edges (both sides for a segment).
    pub fn edge_directions(&self) -> Vec<f64> {
        let v = &self.vertices;
        let mut out = Vec::new();
        match v.len() {
            1 => {}
            2 => {
                let d = v[1] - v[0];
                let len = d.norm();
                let (ux, uy) = (d.re / len, d.im / len);
                out.push(angle_of_normal(uy, -ux));
                out.push(angle_of_normal(-uy, ux));
                out.push(angle_of_normal(ux, uy));
                out.push(angle_of_normal(-ux, -uy));
            }
            n => {
                for i in 0..n {
                    let d = v[(i + 1) % n] - v[i];
                    let len = d.norm();
                    out.push(angle_of_normal(d.im / len, -d.re / len));
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for z in &self.vertices {
            let _ = writeln!(out, "{},{}", fmt17(z.re), fmt17(z.im));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = parse_csv_pairs(text, "x,y")?;
        let pts: Vec<Complex64> = rows
            .into_iter()
            .map(|(x, y)| Complex64::new(x, y))
            .collect();
        ConvexRegion::from_points(&pts)
    }
}

/// 17 significant digits, exact round trip for `f64`.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_csv_pairs(text: &str, header: &str) -> Result<Vec<(f64, f64)>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == header => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header `{header}`, found {other:?}"
            )));
        }
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let mut parts = line.split(',');
            let mut next = || -> Result<f64> {
                parts
                    .next()
                    .and_then(|p| p.trim().parse::<f64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad row {}: `{line}`", i + 2)))
            };
            Ok((next()?, next()?))
        })
        .collect()
}

#[inline]
fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn point_segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a).re * d.re + (z - a).im * d.im) / len2;
    (z - (a + d * t.clamp(0.0, 1.0))).norm()
}

/// Convex hull, counterclockwise, dropping vertices that stick out less than
/// `tol` past the chord of their neighbours. Nearly coincident input collapses
/// to a point and nearly collinear input to a segment.
fn canonical_hull(points: &[Complex64], tol: f64) -> Vec<Complex64> {
    let mut pts: Vec<Complex64> = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() <= 1 {
        return pts;
    }
    // a vertex `a` between `o` and `b` survives only if the turn o→a→b is
    // counterclockwise with `a` more than `tol` off the chord o→b
    let keep = |o: Complex64, a: Complex64, b: Complex64| -> bool {
        let chord = b - o;
        let len = chord.norm();
        if len == 0.0 {
            return false;
        }
        cross(chord, a - o) / len < -tol
    };
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && !keep(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && !keep(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    // two farthest-point sweeps give a long axis; exact enough to detect
    // clusters and slivers
    let farthest = |from: Complex64| -> (Complex64, f64) {
        hull.iter()
            .map(|&p| (p, (p - from).norm()))
            .fold(
                (from, 0.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            )
    };
    let (e0, _) = farthest(hull[0]);
    let (e1, diam) = farthest(e0);
    if diam <= 4.0 * tol {
        let c = hull.iter().sum::<Complex64>() / hull.len() as f64;
        return vec![c];
    }
    if hull.len() >= 3 {
        let axis = (e1 - e0) / diam;
        let width = hull
            .iter()
            .map(|&p| cross(axis, p - e0))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), c| {
                (lo.min(c), hi.max(c))
            });
        if width.1 - width.0 <= 4.0 * tol {
            let (mut a, mut b) = (e0, e1);
            if (a.re, a.im) > (b.re, b.im) {
                std::mem::swap(&mut a, &mut b);
            }
            return vec![a, b];
        }
    }
    if hull.len() == 2 && (hull[0].re, hull[0].im) > (hull[1].re, hull[1].im) {
        hull.swap(0, 1);
    }
    hull
}

/// Intersection of the half-planes `Re(e^{iθ_j}z) ≤ g(θ_j)`.
///
/// A bounding square is clipped by every half-plane in turn. Vertices lying
/// within `HALFPLANE_TOL · max|g|` outside a half-plane are kept rather than
/// cut, so exactly degenerate inputs (segments, points) survive roundoff; the
/// result is then canonicalized, collapsing slivers to segments and clusters
/// to points.
pub fn region_from_support(s: &SupportSample) -> Result<ConvexRegion> {
    let scale = s.scale();
    if scale == 0.0 {
        return Ok(ConvexRegion {
            vertices: vec![Complex64::new(0.0, 0.0)],
            support: Some(s.clone()),
        });
    }
    let tol = HALFPLANE_TOL * scale;
    let bound = 2.0 * scale / (s.max_gap() / 2.0).cos() + scale;
    let mut poly = vec![
        Complex64::new(-bound, -bound),
        Complex64::new(bound, -bound),
        Complex64::new(bound, bound),
        Complex64::new(-bound, bound),
    ];
    let mut next = Vec::with_capacity(poly.len() + 2);
    for (&theta, &g) in s.thetas.iter().zip(&s.values) {
        let (c, sn) = (theta.cos(), theta.sin());
        let dist = |z: Complex64| z.re * c - z.im * sn - g;
        next.clear();
        let m = poly.len();
        for i in 0..m {
            let (cur, nxt) = (poly[i], poly[(i + 1) % m]);
            let (dc, dn) = (dist(cur), dist(nxt));
            let (cin, nin) = (dc <= tol, dn <= tol);
            if cin {
                next.push(cur);
            }
            // add the exact crossing point only when the boundary line itself
            // separates the two endpoints; a kept endpoint within `tol` already
            // marks the boundary
            if cin != nin && ((cin && dc < 0.0) || (nin && dn < 0.0)) {
                let t = dc / (dc - dn);
                next.push(cur + (nxt - cur) * t);
            }
        }
        if next.is_empty() {
            return Err(Error::InconsistentSupport(format!(
                "half-plane at θ = {theta} removes every remaining vertex"
            )));
        }
        std::mem::swap(&mut poly, &mut next);
    }
    Ok(ConvexRegion {
        vertices: canonical_hull(&poly, tol),
        support: Some(s.clone()),
    })
}

/// Exact Hausdorff distance between two convex polygons.
///
/// The distance to a convex set is a convex function, so each one-sided
/// supremum is attained at a vertex.
pub fn hausdorff(a: &ConvexRegion, b: &ConvexRegion) -> f64 {
    let one_sided = |x: &ConvexRegion, y: &ConvexRegion| {
        x.vertices
            .iter()
            .map(|&v| y.distance_to(v))
            .fold(0.0, f64::max)
    };
    one_sided(a, b).max(one_sided(b, a))
}

/// Region with supporting function `s·g_a + t·g_b`.
///
/// Both supports are evaluated exactly from the polygons on the direction grid
/// of `a` (or of `b`, or the default uniform grid if neither carries one).
pub fn minkowski_combine(
    a: &ConvexRegion,
    s: f64,
    b: &ConvexRegion,
    t: f64,
) -> Result<ConvexRegion> {
    if !(s >= 0.0 && t >= 0.0) {
        return Err(Error::Domain(format!(
            "Minkowski coefficients must be >= 0 (got {s}, {t})"
        )));
    }
    let thetas = a
        .support
        .as_ref()
        .or(b.support.as_ref())
        .map(|x| x.thetas.clone())
        .unwrap_or_else(|| uniform_grid(DEFAULT_DIRECTIONS));
    let sample = SupportSample::from_fn(thetas, |th| {
        let ga = if s == 0.0 { 0.0 } else { s * a.support_at(th) };
        let gb = if t == 0.0 { 0.0 } else { t * b.support_at(th) };
        ga + gb
    })?;
    region_from_support(&sample)
}

/// `b ⊆ a` up to `slack`, tested as `g_b ≤ g_a + slack` on every direction
/// either region was sampled on, plus the edge normals of `a`.
pub fn contains(a: &ConvexRegion, b: &ConvexRegion, slack: f64) -> bool {
    let mut thetas = a.edge_directions();
    thetas.extend([0.0, PI / 2.0, PI, 1.5 * PI]);
    for r in [a, b] {
        if let Some(s) = &r.support {
            thetas.extend_from_slice(&s.thetas);
        }
    }
    thetas
        .into_iter()
        .all(|th| b.support_at(th) <= a.support_at(th) + slack)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn disk(r: f64, n: usize) -> ConvexRegion {
        region_from_support(&SupportSample::from_fn(uniform_grid(n), |_| r).unwrap()).unwrap()
    }

    fn square(offset: f64) -> ConvexRegion {
        ConvexRegion::from_points(&[
            c(offset, 0.0),
            c(offset + 1.0, 0.0),
            c(offset + 1.0, 1.0),
            c(offset, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn support_sample_validation() {
        assert!(SupportSample::new(vec![0.0, 1.0], vec![1.0, 1.0]).is_err());
        assert!(SupportSample::new(vec![0.0, 2.0, 1.0], vec![1.0; 3]).is_err());
        assert!(SupportSample::new(vec![0.0, 0.1, 0.2], vec![1.0; 3]).is_err());
        assert!(SupportSample::new(vec![0.0, 2.0, 4.0], vec![1.0; 3]).is_ok());
        assert!(SupportSample::new(vec![0.0, 2.0, TAU], vec![1.0; 3]).is_err());
    }

    #[test]
    fn disk_polygon_area() {
        let n = 360;
        let d = disk(2.0, n);
        assert_eq!(d.vertices().len(), n);
        let exact = n as f64 * 4.0 * (PI / n as f64).tan();
        assert!((d.area() - exact).abs() < 1e-9 * exact);
        assert!((d.area() - PI * 4.0).abs() < 1e-3 * PI * 4.0);
    }

    #[test]
    fn segment_support_gives_segment() {
        let seg = region_from_support(
            &SupportSample::from_fn(uniform_grid(360), |t| directional(c(1.0, 0.0), t).max(0.0))
                .unwrap(),
        )
        .unwrap();
        assert!(seg.is_segment());
        assert!((seg.vertices()[0] - c(0.0, 0.0)).norm() < 1e-12);
        assert!((seg.vertices()[1] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn point_support_gives_point() {
        let z = c(0.3, -1.2);
        let p = region_from_support(
            &SupportSample::from_fn(uniform_grid(720), |t| directional(z, t)).unwrap(),
        )
        .unwrap();
        assert!(p.is_point());
        assert!((p.vertices()[0] - z).norm() < 1e-12);
    }

    #[test]
    fn ellipse_support_reconstruction() {
        let (a, b) = (2.0, 1.0);
        let sample = SupportSample::from_fn(uniform_grid(720), |t| {
            (a * a * t.cos().powi(2) + b * b * t.sin().powi(2)).sqrt()
        })
        .unwrap();
        let region = region_from_support(&sample).unwrap();
        // dense boundary sample of the ellipse
        let boundary: Vec<Complex64> = (0..20000)
            .map(|k| {
                let phi = k as f64 * TAU / 20000.0;
                c(a * phi.cos(), b * phi.sin())
            })
            .collect();
        let ellipse = ConvexRegion::from_points(&boundary).unwrap();
        assert!(hausdorff(&region, &ellipse) < 1e-3);
    }

    #[test]
    fn inconsistent_support_is_rejected() {
        // Re z <= -1 and Re(-z) <= -1 cannot both hold
        let s = SupportSample::new(
            vec![0.0, PI / 2.0, PI, 1.5 * PI],
            vec![-1.0, 1.0, -1.0, 1.0],
        )
        .unwrap();
        assert!(matches!(
            region_from_support(&s),
            Err(Error::InconsistentSupport(_))
        ));
    }

    #[test]
    fn reconstruction_reproduces_samples() {
        let n = 90;
        let sample = SupportSample::from_fn(uniform_grid(n), |t| {
            1.0 + 0.3 * (2.0 * t).cos() + 0.1 * t.sin()
        })
        .unwrap();
        let region = region_from_support(&sample).unwrap();
        let dtheta = TAU / n as f64;
        for (&t, &g) in sample.thetas().iter().zip(sample.values()) {
            assert!((region.support_at(t) - g).abs() < 1e-9);
            let mid = t + dtheta / 2.0;
            let gap = region.support_at(mid) - sample.interpolate(mid);
            assert!(gap <= 1.4 * (1.0 / (dtheta / 2.0).cos() - 1.0) + 1e-12);
        }
    }

    #[test]
    fn hausdorff_examples() {
        let d1 = disk(1.0, 720);
        let d2 = disk(2.0, 720);
        assert_eq!(hausdorff(&d1, &d1), 0.0);
        // circumscribed polygons: vertices sit at r·sec(π/n)
        assert!((hausdorff(&d1, &d2) - 1.0 / (PI / 720.0).cos()).abs() < 1e-12);
        let inscribed = |r: f64| {
            let pts: Vec<Complex64> = uniform_grid(720)
                .iter()
                .map(|&t| Complex64::from_polar(r, t))
                .collect();
            ConvexRegion::from_points(&pts).unwrap()
        };
        assert!((hausdorff(&inscribed(1.0), &inscribed(2.0)) - 1.0).abs() < 1e-6);
        assert!((hausdorff(&square(0.0), &square(3.0)) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn minkowski_examples() {
        let a = disk(1.0, 720);
        let b = disk(1.0, 720);
        assert!(hausdorff(&minkowski_combine(&a, 1.0, &b, 0.0).unwrap(), &a) < 1e-12);
        assert!(hausdorff(&minkowski_combine(&a, 0.5, &b, 0.5).unwrap(), &a) < 1e-12);

        let horizontal = ConvexRegion::segment(c(0.0, 0.0), c(1.0, 0.0));
        let vertical = ConvexRegion::segment(c(0.0, 0.0), c(0.0, 1.0));
        let sq = minkowski_combine(&horizontal, 1.0, &vertical, 1.0).unwrap();
        assert_eq!(sq.vertices().len(), 4);
        assert!(hausdorff(&sq, &square(0.0)) < 1e-12);
        assert!(minkowski_combine(&a, -1.0, &b, 1.0).is_err());
    }

    #[test]
    fn containment_examples() {
        let d1 = disk(1.0, 720);
        let d2 = disk(2.0, 720);
        assert!(contains(&d1, &d1, 0.0));
        assert!(contains(&d2, &d1, 0.0));
        assert!(!contains(&d1, &d2, 0.0));
        // a polygon without sample directions: exact edge-normal criterion
        let sq = square(0.0);
        let inner = ConvexRegion::from_points(&[c(0.1, 0.1), c(0.9, 0.5), c(0.5, 0.99)]).unwrap();
        assert!(contains(&sq, &inner, 0.0));
        assert!(!contains(&inner, &sq, 0.0));
        let poke = ConvexRegion::point(c(1.0001, 0.5));
        assert!(!contains(&sq, &poke, 0.0));
        assert!(contains(&sq, &poke, 1e-3));
    }

    #[test]
    fn distance_and_points() {
        let sq = square(0.0);
        assert_eq!(sq.distance_to(c(0.5, 0.5)), 0.0);
        assert!((sq.distance_to(c(2.0, 0.5)) - 1.0).abs() < 1e-15);
        let seg = ConvexRegion::segment(c(0.0, 0.0), c(1.0, 0.0));
        assert!((seg.distance_to(c(0.5, 2.0)) - 2.0).abs() < 1e-15);
        assert!(ConvexRegion::point(c(1.0, 1.0)).contains_point(c(1.0, 1.0 + 1e-9), 1e-8));
    }

    #[test]
    fn csv_round_trip() {
        let d = disk(1.5, 24);
        let back = ConvexRegion::from_csv(&d.to_csv()).unwrap();
        assert_eq!(back.vertices(), d.vertices());
        let s = d.support_sample().unwrap();
        assert_eq!(&SupportSample::from_csv(&s.to_csv()).unwrap(), s);
        assert!(ConvexRegion::from_csv("a,b\n1,2\n").is_err());
    }

    #[test]
    fn vertices_are_counterclockwise() {
        let d = disk(1.0, 12);
        assert!(d.area() > 0.0);
        let sq = square(0.0);
        assert!((sq.area() - 1.0).abs() < 1e-15);
    }
}

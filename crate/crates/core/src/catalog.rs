//! Closed-form α-numerical ranges of the named operators.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    directional, region_from_support, uniform_grid, ConvexRegion, SupportSample,
};
use crate::spectral::{semicircle_tail, semicircle_tail_inverse, NamedModel};

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("alpha = {alpha} not in (0, 1]")));
    }
    Ok(())
}

/// `sin(πα)/(πα)`, the radius of `V_α` of a Haar unitary.
pub fn haar_radius(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha == 1.0 {
        return Ok(0.0);
    }
    Ok((PI * alpha).sin() / (PI * alpha))
}

/// [`haar_radius`] extended to `α = 0` by its limit 1.
pub fn haar_radius_limit(alpha: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(1.0);
    }
    haar_radius(alpha)
}

/// `f(y) = ½ - y√(2-y²)/(2π) - arcsin(y/√2)/π`.
pub fn circular_f(y: f64) -> f64 {
    semicircle_tail(y)
}

/// `h = f⁻¹`, mapping `(0, 1]` onto `[-√2, √2)`.
pub fn circular_h(alpha: f64) -> f64 {
    semicircle_tail_inverse(alpha)
}

/// `r_α(Z) = (2 - h(α)²)^{3/2} / (3πα)` for a circular element `Z`.
pub fn circular_radius(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha == 1.0 {
        return Ok(0.0);
    }
    let h = circular_h(alpha);
    Ok((2.0 - h * h).max(0.0).powf(1.5) / (3.0 * PI * alpha))
}

/// [`circular_radius`] extended to `α = 0` by its limit `√2`.
pub fn circular_radius_limit(alpha: f64) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(SQRT_2);
    }
    circular_radius(alpha)
}

/// Two-term small-α expansion `√2 - 3^{5/3}π^{2/3}/(5·2^{7/6}) · α^{2/3}`.
pub fn circular_radius_asymptotic(alpha: f64) -> f64 {
    SQRT_2
        - 3f64.powf(5.0 / 3.0) * PI.powf(2.0 / 3.0) / (5.0 * 2f64.powf(7.0 / 6.0))
            * alpha.powf(2.0 / 3.0)
}

/// Closed form of a range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClosedFormRange {
    Disk {
        center: [f64; 2],
        radius: f64,
    },
    /// Axis-aligned ellipse with semi-axes `a` (real) and `b` (imaginary).
    Ellipse {
        center: [f64; 2],
        a: f64,
        b: f64,
    },
    Interval {
        lo: f64,
        hi: f64,
    },
    Point {
        at: [f64; 2],
    },
}

impl ClosedFormRange {
    pub fn support(&self, theta: f64) -> f64 {
        let c = |p: [f64; 2]| Complex64::new(p[0], p[1]);
        match *self {
            ClosedFormRange::Disk { center, radius } => directional(c(center), theta) + radius,
            ClosedFormRange::Ellipse { center, a, b } => {
                let (x, y) = (a * theta.cos(), b * theta.sin());
                directional(c(center), theta) + (x * x + y * y).sqrt()
            }
            ClosedFormRange::Interval { lo, hi } => (lo * theta.cos()).max(hi * theta.cos()),
            ClosedFormRange::Point { at } => directional(c(at), theta),
        }
    }

    /// Circumscribed polygon on a uniform grid (exact for intervals and points).
    pub fn to_region(&self, directions: usize) -> Result<ConvexRegion> {
        match *self {
            ClosedFormRange::Interval { lo, hi } => Ok(ConvexRegion::segment(
                Complex64::new(lo, 0.0),
                Complex64::new(hi, 0.0),
            )),
            ClosedFormRange::Point { at } => Ok(ConvexRegion::point(Complex64::new(at[0], at[1]))),
            _ => region_from_support(&SupportSample::from_fn(uniform_grid(directions), |t| {
                self.support(t)
            })?),
        }
    }

    /// Hausdorff distance to `region`, as the sup-norm of the support
    /// difference over `samples` uniform directions plus the edge normals of
    /// `region`.
    pub fn hausdorff_to(&self, region: &ConvexRegion, samples: usize) -> f64 {
        let mut thetas = uniform_grid(samples.max(3));
        thetas.extend(region.edge_directions());
        thetas
            .into_iter()
            .map(|t| (self.support(t) - region.support_at(t)).abs())
            .fold(0.0, f64::max)
    }
}

/// The closed-form `V_α` of a named model.
pub fn closed_form(
    name: &str,
    params: &BTreeMap<String, f64>,
    alpha: f64,
) -> Result<ClosedFormRange> {
    closed_form_of(&NamedModel::from_name(name, params)?, alpha)
}

/// [`closed_form`] for an already parsed model.
pub fn closed_form_of(model: &NamedModel, alpha: f64) -> Result<ClosedFormRange> {
    check_alpha(alpha)?;
    let origin = [0.0, 0.0];
    if alpha == 1.0 {
        let at = match *model {
            NamedModel::Semicircular { mean, .. } => [mean, 0.0],
            _ => origin,
        };
        return Ok(ClosedFormRange::Point { at });
    }
    Ok(match *model {
        NamedModel::HaarUnitary => ClosedFormRange::Disk {
            center: origin,
            radius: haar_radius(alpha)?,
        },
        NamedModel::Tucci => ClosedFormRange::Disk {
            center: origin,
            radius: 0.5 * (1.0 - alpha),
        },
        NamedModel::Circular => ClosedFormRange::Disk {
            center: origin,
            radius: circular_radius(alpha)?,
        },
        NamedModel::DtQuasinilpotent => ClosedFormRange::Disk {
            center: origin,
            radius: circular_radius(alpha)? / SQRT_2,
        },
        NamedModel::Elliptic { psi } => {
            let r = SQRT_2 * circular_radius(alpha)?;
            ClosedFormRange::Ellipse {
                center: origin,
                a: r * psi.cos(),
                b: r * psi.sin(),
            }
        }
        NamedModel::Semicircular { mean, variance } => {
            let half = variance.sqrt() * SQRT_2 * circular_radius(alpha)?;
            if half == 0.0 {
                ClosedFormRange::Point { at: [mean, 0.0] }
            } else {
                ClosedFormRange::Interval {
                    lo: mean - half,
                    hi: mean + half,
                }
            }
        }
    })
}

//! Scalar power means, the four classical two-argument means, and the six
//! nonnegative pairwise mean differences.
//!
//! All functions operate on strictly positive finite reals. The differences
//! are evaluated through rationalized forms (e.g. `S - A` as
//! `(a-b)^2 / (4(S+A))`) so they stay nonnegative and keep full precision
//! when `a` is close to `b`.

use crate::error::{Error, Result};

/// One of the four classical means, each a power mean of a fixed order:
/// harmonic (-1), geometric (0), arithmetic (1), square-root (2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeanKind {
    Harmonic,
    Geometric,
    Arithmetic,
    SquareRoot,
}

impl MeanKind {
    /// The power-mean order this mean coincides with.
    pub fn order(self) -> f64 {
        match self {
            MeanKind::Harmonic => -1.0,
            MeanKind::Geometric => 0.0,
            MeanKind::Arithmetic => 1.0,
            MeanKind::SquareRoot => 2.0,
        }
    }
}

/// A nonnegative difference of two classical means, named lower mean last:
/// `SA` is `S - A`, `GH` is `G - H`, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeanPair {
    SA,
    SG,
    SH,
    AH,
    AG,
    GH,
}

impl MeanPair {
    pub const ALL: [MeanPair; 6] = [
        MeanPair::SA,
        MeanPair::SG,
        MeanPair::SH,
        MeanPair::AH,
        MeanPair::AG,
        MeanPair::GH,
    ];
}

fn check_positive(v: f64) -> Result<f64> {
    if v.is_nan() {
        Err(Error::NanInput)
    } else if v <= 0.0 || v.is_infinite() {
        Err(Error::NonPositiveInput { value: v })
    } else {
        Ok(v)
    }
}

// Unchecked scalar kernels. Callers guarantee a, b in (0, inf).

pub(crate) fn harmonic(a: f64, b: f64) -> f64 {
    2.0 * a * b / (a + b)
}

pub(crate) fn geometric(a: f64, b: f64) -> f64 {
    (a * b).sqrt()
}

pub(crate) fn arithmetic(a: f64, b: f64) -> f64 {
    0.5 * (a + b)
}

pub(crate) fn square_root_mean(a: f64, b: f64) -> f64 {
    (0.5 * (a * a + b * b)).sqrt()
}

/// Mean difference for `pair`, written without subtracting nearly equal
/// quantities. Each form is algebraically identical to the plain difference
/// of classical means and is exactly zero iff `a == b`.
pub(crate) fn diff_kernel(pair: MeanPair, a: f64, b: f64) -> f64 {
    let d = a - b;
    match pair {
        // S - A = (a-b)^2 / (4(S + A))
        MeanPair::SA => d * d / (4.0 * (square_root_mean(a, b) + arithmetic(a, b))),
        // S - G = (a-b)^2 / (2(S + G))
        MeanPair::SG => d * d / (2.0 * (square_root_mean(a, b) + geometric(a, b))),
        // S - H = (a-b)^2 (a^2 + 4ab + b^2) / (2(a+b)^2 (S + H))
        MeanPair::SH => {
            let s = a + b;
            d * d * ((a * a + b * b) + 4.0 * a * b)
                / (2.0 * s * s * (square_root_mean(a, b) + harmonic(a, b)))
        }
        // A - H = (a-b)^2 / (2(a+b))
        MeanPair::AH => d * d / (2.0 * (a + b)),
        // A - G = (sqrt a - sqrt b)^2 / 2
        MeanPair::AG => {
            let r = a.sqrt() - b.sqrt();
            0.5 * r * r
        }
        // G - H = sqrt(ab) (sqrt a - sqrt b)^2 / (a+b)
        MeanPair::GH => {
            let r = a.sqrt() - b.sqrt();
            geometric(a, b) * r * r / (a + b)
        }
    }
}

/// Power mean of order `t` of two positive reals.
///
/// `t = 0` is the geometric mean, `t = +inf` the maximum and `t = -inf` the
/// minimum; these are exact branches, not numerical limits. For other orders
/// the half-sum of powers is taken in log space once `t ln(max(a,b))` would
/// overflow plain `powf`.
pub fn power_mean(t: f64, a: f64, b: f64) -> Result<f64> {
    let a = check_positive(a)?;
    let b = check_positive(b)?;
    if t.is_nan() {
        return Err(Error::NanInput);
    }
    if t == 0.0 {
        return Ok(geometric(a, b));
    }
    if t == f64::INFINITY {
        return Ok(a.max(b));
    }
    if t == f64::NEG_INFINITY {
        return Ok(a.min(b));
    }
    let (ua, ub) = (t * a.ln(), t * b.ln());
    if ua.abs().max(ub.abs()) > 700.0 {
        // ((e^ua + e^ub)/2)^(1/t) via a shifted log-sum-exp
        let m = ua.max(ub);
        let half_sum = 0.5 * ((ua - m).exp() + (ub - m).exp());
        Ok(((m + half_sum.ln()) / t).exp())
    } else {
        Ok((0.5 * (a.powf(t) + b.powf(t))).powf(1.0 / t))
    }
}

/// One of the classical means `H`, `G`, `A`, `S` of two positive reals.
pub fn classical_mean(kind: MeanKind, a: f64, b: f64) -> Result<f64> {
    let a = check_positive(a)?;
    let b = check_positive(b)?;
    Ok(match kind {
        MeanKind::Harmonic => harmonic(a, b),
        MeanKind::Geometric => geometric(a, b),
        MeanKind::Arithmetic => arithmetic(a, b),
        MeanKind::SquareRoot => square_root_mean(a, b),
    })
}

/// The nonnegative gap between two classical means, zero iff `a == b`.
pub fn mean_difference(pair: MeanPair, a: f64, b: f64) -> Result<f64> {
    let a = check_positive(a)?;
    let b = check_positive(b)?;
    Ok(diff_kernel(pair, a, b))
}

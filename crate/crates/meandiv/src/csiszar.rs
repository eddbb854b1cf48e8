//! Generic f-divergence engine: divergence evaluation, the gradient upper
//! bound, the gap between the two, and numerical audits of generator claims.

use crate::distributions::Distribution;
use crate::error::{Error, Result};

/// A named convex generator `f : (0, inf) -> R` with analytic first and
/// second derivatives and the claims the audit checks them against.
#[derive(Debug, Clone, Copy)]
pub struct Generator {
    name: &'static str,
    f: fn(f64) -> f64,
    f_prime: fn(f64) -> f64,
    f_double_prime: fn(f64) -> f64,
    claims_convex: bool,
    claims_normalized: bool,
}

impl Generator {
    pub const fn new(
        name: &'static str,
        f: fn(f64) -> f64,
        f_prime: fn(f64) -> f64,
        f_double_prime: fn(f64) -> f64,
        claims_convex: bool,
        claims_normalized: bool,
    ) -> Self {
        Generator {
            name,
            f,
            f_prime,
            f_double_prime,
            claims_convex,
            claims_normalized,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn f(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn f_prime(&self, x: f64) -> f64 {
        (self.f_prime)(x)
    }

    pub fn f_double_prime(&self, x: f64) -> f64 {
        (self.f_double_prime)(x)
    }

    pub fn claims_convex(&self) -> bool {
        self.claims_convex
    }

    pub fn claims_normalized(&self) -> bool {
        self.claims_normalized
    }
}

/// `C_f(P||Q) = sum_i q_i f(p_i / q_i)`.
pub fn csiszar_divergence(gen: &Generator, p: &Distribution, q: &Distribution) -> Result<f64> {
    let mut total = 0.0;
    for (pi, qi) in p.zip(q)? {
        let term = qi * gen.f(pi / qi);
        if !term.is_finite() {
            return Err(Error::NonFinite {
                context: "csiszar divergence term",
                x: pi / qi,
            });
        }
        total += term;
    }
    Ok(total)
}

/// The first-derivative upper bound `sum_i (p_i - q_i) f'(p_i / q_i)`,
/// which dominates `C_f` for every convex normalized generator.
pub fn dragomir_upper_bound(gen: &Generator, p: &Distribution, q: &Distribution) -> Result<f64> {
    let mut total = 0.0;
    for (pi, qi) in p.zip(q)? {
        let term = (pi - qi) * gen.f_prime(pi / qi);
        if !term.is_finite() {
            return Err(Error::NonFinite {
                context: "upper bound term",
                x: pi / qi,
            });
        }
        total += term;
    }
    Ok(total)
}

/// The slack of the upper bound, `E_{C_f} - C_f`. Nonnegative up to
/// rounding for convex normalized generators; never clamped here.
pub fn xi_gap(gen: &Generator, p: &Distribution, q: &Distribution) -> Result<f64> {
    Ok(dragomir_upper_bound(gen, p, q)? - csiszar_divergence(gen, p, q)?)
}

/// Outcome of a single audit check.
#[derive(Debug, Clone, Copy)]
pub struct Check {
    pub passed: bool,
    /// Abscissa with the largest violation (or largest error when passing).
    pub worst_x: f64,
    /// Signed violation for threshold checks, absolute error for
    /// finite-difference checks.
    pub worst_value: f64,
}

/// Audit of one generator on a grid. Failures are reported, never raised.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorAudit {
    pub name: &'static str,
    pub claims_convex: bool,
    pub claims_normalized: bool,
    /// `|f(1)|` against 1e-12.
    pub normalization: Check,
    /// `f''(x) >= -1e-12` across the grid; `worst_value` is the grid minimum.
    pub convexity: Check,
    /// Analytic `f'` against a central difference of `f`.
    pub first_derivative: Check,
    /// Analytic `f''` against a central difference of the analytic `f'`.
    pub second_derivative: Check,
}

impl GeneratorAudit {
    /// True when every claim the generator makes is numerically upheld and
    /// both derivative checks pass. A generator that does not claim
    /// convexity is allowed to fail the convexity check.
    pub fn claims_upheld(&self) -> bool {
        (!self.claims_normalized || self.normalization.passed)
            && (!self.claims_convex || self.convexity.passed)
            && self.first_derivative.passed
            && self.second_derivative.passed
    }
}

const NORMALIZATION_TOL: f64 = 1e-12;
const CONVEXITY_FLOOR: f64 = -1e-12;

/// 512 log-uniform points on `[1e-4, 1e4]` plus `x = 1` exactly.
pub fn default_audit_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..512)
        .map(|i| 10f64.powf(-4.0 + 8.0 * i as f64 / 511.0))
        .collect();
    grid.push(1.0);
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    grid
}

/// Checks `f(1) = 0`, positivity of `f''` and finite-difference consistency
/// of both derivatives over `grid`. `tol` is the absolute floor of the
/// derivative tolerance `max(tol, 1e-4 |analytic|)`; 1e-6 is the usual
/// choice.
pub fn audit_generator(gen: &Generator, grid: &[f64], tol: f64) -> GeneratorAudit {
    let f1 = gen.f(1.0).abs();
    let normalization = Check {
        passed: f1 <= NORMALIZATION_TOL,
        worst_x: 1.0,
        worst_value: f1,
    };

    let mut convexity = Check {
        passed: true,
        worst_x: 1.0,
        worst_value: f64::INFINITY,
    };
    let mut first = Check {
        passed: true,
        worst_x: 1.0,
        worst_value: 0.0,
    };
    let mut second = Check {
        passed: true,
        worst_x: 1.0,
        worst_value: 0.0,
    };

    let h1_scale = f64::EPSILON.sqrt();
    let h2_scale = f64::EPSILON.cbrt();

    for &x in grid {
        let d2 = gen.f_double_prime(x);
        if d2 < convexity.worst_value {
            convexity.worst_value = d2;
            convexity.worst_x = x;
        }

        // f' against a central difference of f
        let h = h1_scale * x.abs().max(1.0);
        let (xp, xm) = (x + h, x - h);
        let fd1 = (gen.f(xp) - gen.f(xm)) / (xp - xm);
        let analytic1 = gen.f_prime(x);
        let err1 = (fd1 - analytic1).abs();
        if err1 > first.worst_value {
            first.worst_value = err1;
            first.worst_x = x;
        }
        if err1 > tol.max(1e-4 * analytic1.abs()) {
            first.passed = false;
        }

        // f'' against a central difference of the analytic f'
        let h = h2_scale * x;
        let (xp, xm) = (x + h, x - h);
        let fd2 = (gen.f_prime(xp) - gen.f_prime(xm)) / (xp - xm);
        let err2 = (fd2 - d2).abs();
        if err2 > second.worst_value {
            second.worst_value = err2;
            second.worst_x = x;
        }
        if err2 > tol.max(1e-4 * d2.abs()) {
            second.passed = false;
        }
    }
    convexity.passed = convexity.worst_value >= CONVEXITY_FLOOR;

    GeneratorAudit {
        name: gen.name,
        claims_convex: gen.claims_convex,
        claims_normalized: gen.claims_normalized,
        normalization,
        convexity,
        first_derivative: first,
        second_derivative: second,
    }
}

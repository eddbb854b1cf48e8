//! The closed-form measure catalog.
//!
//! Six mean-gap divergences (square-root/arithmetic through
//! geometric/harmonic), the classical symmetric measures (Hellinger,
//! triangular discrimination, Jensen-Shannon `I`, J-divergence,
//! arithmetic-geometric `T`), the Bhattacharyya and harmonic-mean
//! similarity coefficients, the five closed-form bound gaps `xi`, and the
//! generator behind each measure.
//!
//! Mean-gap divergences are summed termwise through the rationalized
//! difference kernels of [`crate::means`], so values stay accurate when
//! `P` is close to `Q`.

use std::fmt;
use std::str::FromStr;

use crate::csiszar::Generator;
use crate::distributions::Distribution;
use crate::error::{Error, Result};
use crate::means::{self, MeanPair};

/// Identifier of every closed-form measure in the catalog.
///
/// All of them are symmetric in `(P, Q)`. `Bhattacharyya` and `HarmonicW`
/// are similarity coefficients in `(0, 1]`; the rest are divergences:
/// nonnegative and zero iff `P = Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasureId {
    /// Square-root minus arithmetic mean, summed termwise.
    SA,
    /// Square-root minus geometric mean.
    SG,
    /// Square-root minus harmonic mean.
    SH,
    /// Arithmetic minus geometric mean; equals the Hellinger discrimination.
    AG,
    /// Arithmetic minus harmonic mean; equals half the triangular
    /// discrimination.
    AH,
    /// Geometric minus harmonic mean. Its generator is not convex.
    GH,
    /// Hellinger discrimination `h = 1/2 sum (sqrt p - sqrt q)^2`.
    Hellinger,
    /// Triangular discrimination `Delta = sum (p-q)^2/(p+q)`.
    Triangular,
    /// Jensen-Shannon divergence `I`.
    JensenShannonI,
    /// Symmetric Kullback-Leibler sum `J = sum (p-q) ln(p/q)`.
    Jdiv,
    /// Arithmetic-geometric mean divergence `T = sum A ln(A/G)`.
    TanejaT,
    /// Bhattacharyya coefficient `B = sum sqrt(pq)` (similarity).
    Bhattacharyya,
    /// Harmonic-mean coefficient `W = sum 2pq/(p+q)` (similarity).
    HarmonicW,
}

impl MeasureId {
    pub const ALL: [MeasureId; 13] = [
        MeasureId::SA,
        MeasureId::SG,
        MeasureId::SH,
        MeasureId::AG,
        MeasureId::AH,
        MeasureId::GH,
        MeasureId::Hellinger,
        MeasureId::Triangular,
        MeasureId::JensenShannonI,
        MeasureId::Jdiv,
        MeasureId::TanejaT,
        MeasureId::Bhattacharyya,
        MeasureId::HarmonicW,
    ];

    /// Stable lowercase token, also accepted by `FromStr`.
    pub fn token(self) -> &'static str {
        match self {
            MeasureId::SA => "sa",
            MeasureId::SG => "sg",
            MeasureId::SH => "sh",
            MeasureId::AG => "ag",
            MeasureId::AH => "ah",
            MeasureId::GH => "gh",
            MeasureId::Hellinger => "hellinger",
            MeasureId::Triangular => "triangular",
            MeasureId::JensenShannonI => "jensen_shannon",
            MeasureId::Jdiv => "j_divergence",
            MeasureId::TanejaT => "taneja_t",
            MeasureId::Bhattacharyya => "bhattacharyya",
            MeasureId::HarmonicW => "harmonic_w",
        }
    }

    /// True for every id except the two similarity coefficients.
    pub fn is_divergence(self) -> bool {
        !matches!(self, MeasureId::Bhattacharyya | MeasureId::HarmonicW)
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for MeasureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "sa" | "m_sa" => MeasureId::SA,
            "sg" | "m_sg" => MeasureId::SG,
            "sh" | "m_sh" => MeasureId::SH,
            "ag" | "m_ag" => MeasureId::AG,
            "ah" | "m_ah" => MeasureId::AH,
            "gh" | "m_gh" => MeasureId::GH,
            "h" | "hellinger" => MeasureId::Hellinger,
            "delta" | "triangular" => MeasureId::Triangular,
            "i" | "js" | "jensen_shannon" => MeasureId::JensenShannonI,
            "j" | "j_divergence" => MeasureId::Jdiv,
            "t" | "taneja" | "taneja_t" => MeasureId::TanejaT,
            "b" | "bhattacharyya" => MeasureId::Bhattacharyya,
            "w" | "harmonic_w" => MeasureId::HarmonicW,
            _ => return Err(Error::ChainConfig(format!("unknown measure `{s}`"))),
        })
    }
}

/// The five measures whose bound gap has a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum XiId {
    SA,
    SG,
    SH,
    Hellinger,
    Triangular,
}

impl XiId {
    pub const ALL: [XiId; 5] = [
        XiId::SA,
        XiId::SG,
        XiId::SH,
        XiId::Hellinger,
        XiId::Triangular,
    ];

    pub fn token(self) -> &'static str {
        match self {
            XiId::SA => "xi_sa",
            XiId::SG => "xi_sg",
            XiId::SH => "xi_sh",
            XiId::Hellinger => "xi_h",
            XiId::Triangular => "xi_delta",
        }
    }

    /// The measure this gap belongs to.
    pub fn measure(self) -> MeasureId {
        match self {
            XiId::SA => MeasureId::SA,
            XiId::SG => MeasureId::SG,
            XiId::SH => MeasureId::SH,
            XiId::Hellinger => MeasureId::Hellinger,
            XiId::Triangular => MeasureId::Triangular,
        }
    }
}

impl fmt::Display for XiId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for XiId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "xi_sa" => XiId::SA,
            "xi_sg" => XiId::SG,
            "xi_sh" => XiId::SH,
            "xi_h" | "xi_hellinger" => XiId::Hellinger,
            "xi_delta" | "xi_triangular" => XiId::Triangular,
            _ => return Err(Error::ChainConfig(format!("unknown gap measure `{s}`"))),
        })
    }
}

fn sum_terms(p: &Distribution, q: &Distribution, term: impl Fn(f64, f64) -> f64) -> Result<f64> {
    Ok(p.zip(q)?.map(|(pi, qi)| term(pi, qi)).sum())
}

/// Evaluates the closed form of `id` on a pair of distributions.
pub fn divergence(id: MeasureId, p: &Distribution, q: &Distribution) -> Result<f64> {
    match id {
        MeasureId::SA => sum_terms(p, q, |a, b| means::diff_kernel(MeanPair::SA, a, b)),
        MeasureId::SG => sum_terms(p, q, |a, b| means::diff_kernel(MeanPair::SG, a, b)),
        MeasureId::SH => sum_terms(p, q, |a, b| means::diff_kernel(MeanPair::SH, a, b)),
        MeasureId::AG => sum_terms(p, q, |a, b| means::diff_kernel(MeanPair::AG, a, b)),
        MeasureId::AH => sum_terms(p, q, |a, b| means::diff_kernel(MeanPair::AH, a, b)),
        MeasureId::GH => sum_terms(p, q, |a, b| means::diff_kernel(MeanPair::GH, a, b)),
        MeasureId::Hellinger => sum_terms(p, q, |a, b| {
            let r = a.sqrt() - b.sqrt();
            0.5 * r * r
        }),
        MeasureId::Triangular => sum_terms(p, q, |a, b| {
            let d = a - b;
            d * d / (a + b)
        }),
        MeasureId::JensenShannonI => sum_terms(p, q, |a, b| {
            let m = 0.5 * (a + b);
            0.5 * (a * a.ln() + b * b.ln()) - m * m.ln()
        }),
        MeasureId::Jdiv => sum_terms(p, q, |a, b| (a - b) * ((a - b) / b).ln_1p()),
        MeasureId::TanejaT => sum_terms(p, q, |a, b| {
            let m = means::arithmetic(a, b);
            let g = means::geometric(a, b);
            // A ln(A/G) through ln(1 + (A-G)/G) keeps precision at a ~ b
            m * (means::diff_kernel(MeanPair::AG, a, b) / g).ln_1p()
        }),
        MeasureId::Bhattacharyya => sum_terms(p, q, |a, b| (a * b).sqrt()),
        MeasureId::HarmonicW => sum_terms(p, q, means::harmonic),
    }
}

/// Closed form of the bound gap for the five measures that have one.
/// Matches [`crate::csiszar::xi_gap`] of the corresponding generator.
pub fn xi_closed_form(id: XiId, p: &Distribution, q: &Distribution) -> Result<f64> {
    match id {
        XiId::SA => sum_terms(p, q, |a, b| {
            let factor = std::f64::consts::SQRT_2 * b / (a * a + b * b).sqrt();
            factor * means::diff_kernel(MeanPair::SA, a, b)
        }),
        XiId::SG => sum_terms(p, q, |a, b| {
            let factor = (a + b) * (b / (2.0 * a * (a * a + b * b))).sqrt();
            factor * means::diff_kernel(MeanPair::SG, a, b)
        }),
        XiId::SH => sum_terms(p, q, |a, b| {
            // q (u^3 - v^3) / (v^2 u) with u = sqrt(2(p^2+q^2)), v = p + q,
            // factored through u - v = (p-q)^2 / (u + v)
            let u2 = 2.0 * (a * a + b * b);
            let u = u2.sqrt();
            let v = a + b;
            let d = a - b;
            b * d * d * (u2 + u * v + v * v) / ((u + v) * v * v * u)
        }),
        XiId::Hellinger => sum_terms(p, q, |a, b| {
            let r = a.sqrt() - b.sqrt();
            0.5 * (b / a).sqrt() * r * r
        }),
        XiId::Triangular => sum_terms(p, q, |a, b| {
            let r = (a - b) / (a + b);
            2.0 * b * r * r
        }),
    }
}

// Generator section functions. `sq` is sqrt((x^2+1)/2), the square-root
// mean of x and 1.

fn sq(x: f64) -> f64 {
    (0.5 * (x * x + 1.0)).sqrt()
}

pub(crate) fn f_sa(x: f64) -> f64 {
    sq(x) - 0.5 * (x + 1.0)
}

fn df_sa(x: f64) -> f64 {
    0.5 * x / sq(x) - 0.5
}

fn d2f_sa(x: f64) -> f64 {
    let u = x * x + 1.0;
    1.0 / (std::f64::consts::SQRT_2 * u * u.sqrt())
}

pub(crate) fn f_sg(x: f64) -> f64 {
    sq(x) - x.sqrt()
}

fn df_sg(x: f64) -> f64 {
    0.5 * x / sq(x) - 0.5 / x.sqrt()
}

fn d2f_sg(x: f64) -> f64 {
    d2f_sa(x) + 0.25 / (x * x.sqrt())
}

pub(crate) fn f_sh(x: f64) -> f64 {
    sq(x) - 2.0 * x / (x + 1.0)
}

fn df_sh(x: f64) -> f64 {
    0.5 * x / sq(x) - 2.0 / ((x + 1.0) * (x + 1.0))
}

fn d2f_sh(x: f64) -> f64 {
    let v = x + 1.0;
    d2f_sa(x) + 4.0 / (v * v * v)
}

pub(crate) fn f_h(x: f64) -> f64 {
    let r = x.sqrt() - 1.0;
    0.5 * r * r
}

fn df_h(x: f64) -> f64 {
    let s = x.sqrt();
    0.5 * (s - 1.0) / s
}

fn d2f_h(x: f64) -> f64 {
    0.25 / (x * x.sqrt())
}

fn f_delta(x: f64) -> f64 {
    let r = x - 1.0;
    r * r / (x + 1.0)
}

fn df_delta(x: f64) -> f64 {
    let v = x + 1.0;
    (x - 1.0) * (x + 3.0) / (v * v)
}

fn d2f_delta(x: f64) -> f64 {
    let v = x + 1.0;
    8.0 / (v * v * v)
}

pub(crate) fn f_ah(x: f64) -> f64 {
    0.5 * f_delta(x)
}

fn df_ah(x: f64) -> f64 {
    0.5 * df_delta(x)
}

fn d2f_ah(x: f64) -> f64 {
    let v = x + 1.0;
    4.0 / (v * v * v)
}

fn f_gh(x: f64) -> f64 {
    x.sqrt() - 2.0 * x / (x + 1.0)
}

fn df_gh(x: f64) -> f64 {
    let v = x + 1.0;
    0.5 / x.sqrt() - 2.0 / (v * v)
}

fn d2f_gh(x: f64) -> f64 {
    let v = x + 1.0;
    4.0 / (v * v * v) - 0.25 / (x * x.sqrt())
}

fn f_i(x: f64) -> f64 {
    0.5 * x * x.ln() + 0.5 * (x + 1.0) * (2.0 / (x + 1.0)).ln()
}

fn df_i(x: f64) -> f64 {
    0.5 * (2.0 * x / (x + 1.0)).ln()
}

fn d2f_i(x: f64) -> f64 {
    0.5 / (x * (x + 1.0))
}

fn f_j(x: f64) -> f64 {
    (x - 1.0) * x.ln()
}

fn df_j(x: f64) -> f64 {
    x.ln() + 1.0 - 1.0 / x
}

fn d2f_j(x: f64) -> f64 {
    (x + 1.0) / (x * x)
}

fn f_t(x: f64) -> f64 {
    0.5 * (x + 1.0) * (0.5 * (x + 1.0) / x.sqrt()).ln()
}

fn df_t(x: f64) -> f64 {
    0.5 * (0.5 * (x + 1.0) / x.sqrt()).ln() + 0.25 * (x - 1.0) / x
}

fn d2f_t(x: f64) -> f64 {
    (x * x + 1.0) / (4.0 * x * x * (x + 1.0))
}

static GEN_SA: Generator = Generator::new("f_sa", f_sa, df_sa, d2f_sa, true, true);
static GEN_SG: Generator = Generator::new("f_sg", f_sg, df_sg, d2f_sg, true, true);
static GEN_SH: Generator = Generator::new("f_sh", f_sh, df_sh, d2f_sh, true, true);
static GEN_H: Generator = Generator::new("f_h", f_h, df_h, d2f_h, true, true);
static GEN_AH: Generator = Generator::new("f_ah", f_ah, df_ah, d2f_ah, true, true);
static GEN_DELTA: Generator = Generator::new("f_delta", f_delta, df_delta, d2f_delta, true, true);
static GEN_GH: Generator = Generator::new("f_gh", f_gh, df_gh, d2f_gh, false, true);
static GEN_I: Generator = Generator::new("f_i", f_i, df_i, d2f_i, true, true);
static GEN_J: Generator = Generator::new("f_j", f_j, df_j, d2f_j, true, true);
static GEN_T: Generator = Generator::new("f_t", f_t, df_t, d2f_t, true, true);

/// The generator whose f-divergence reproduces `divergence(id, ..)` exactly
/// (same scale). The arithmetic-geometric measure shares the Hellinger
/// generator since the two coincide. The similarity coefficients have none.
pub fn generator_of(id: MeasureId) -> Result<&'static Generator> {
    Ok(match id {
        MeasureId::SA => &GEN_SA,
        MeasureId::SG => &GEN_SG,
        MeasureId::SH => &GEN_SH,
        MeasureId::AG | MeasureId::Hellinger => &GEN_H,
        MeasureId::AH => &GEN_AH,
        MeasureId::GH => &GEN_GH,
        MeasureId::Triangular => &GEN_DELTA,
        MeasureId::JensenShannonI => &GEN_I,
        MeasureId::Jdiv => &GEN_J,
        MeasureId::TanejaT => &GEN_T,
        MeasureId::Bhattacharyya | MeasureId::HarmonicW => {
            return Err(Error::NoGenerator { measure: id })
        }
    })
}

/// Every distinct generator in the catalog (the geometric-harmonic one is
/// the only member that does not claim convexity).
pub fn generator_catalog() -> Vec<&'static Generator> {
    vec![
        &GEN_SA, &GEN_SG, &GEN_SH, &GEN_H, &GEN_AH, &GEN_DELTA, &GEN_GH, &GEN_I, &GEN_J, &GEN_T,
    ]
}

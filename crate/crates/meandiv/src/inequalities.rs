//! Inequality-chain auditing and the curvature-ratio machinery that
//! produces sandwich constants between divergence pairs.
//!
//! A chain is an ordered list of positive linear combinations of catalog
//! measures claimed nondecreasing for every distribution pair. Evaluation
//! reports the slack of each link instead of a bare verdict so violations
//! come with a witness.

use std::fmt;
use std::str::FromStr;

use crate::csiszar::Generator;
use crate::distributions::Distribution;
use crate::divergences::{divergence, xi_closed_form, MeasureId, XiId};
use crate::error::{Error, Result};
use crate::refinement::{refinement_divergence, RefinementId};

/// Where a chain term draws its value from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermSource {
    Measure(MeasureId),
    Xi(XiId),
    Refinement(RefinementId),
}

impl TermSource {
    fn evaluate(&self, p: &Distribution, q: &Distribution) -> Result<f64> {
        match self {
            TermSource::Measure(id) => divergence(*id, p, q),
            TermSource::Xi(id) => xi_closed_form(*id, p, q),
            TermSource::Refinement(id) => refinement_divergence(*id, p, q),
        }
    }
}

impl fmt::Display for TermSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermSource::Measure(id) => write!(f, "{id}"),
            TermSource::Xi(id) => write!(f, "{id}"),
            TermSource::Refinement(id) => write!(f, "{id}"),
        }
    }
}

impl FromStr for TermSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(id) = s.parse::<XiId>() {
            return Ok(TermSource::Xi(id));
        }
        if let Ok(id) = s.parse::<RefinementId>() {
            return Ok(TermSource::Refinement(id));
        }
        if let Ok(id) = s.parse::<MeasureId>() {
            return Ok(TermSource::Measure(id));
        }
        Err(Error::ChainConfig(format!("unknown term source `{s}`")))
    }
}

/// A source scaled by an exact positive rational, rendered to `f64` once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weighted {
    pub num: u32,
    pub den: u32,
    pub source: TermSource,
}

impl Weighted {
    pub fn coefficient(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Weighted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 1 && self.den == 1 {
            write!(f, "{}", self.source)
        } else if self.den == 1 {
            write!(f, "{}*{}", self.num, self.source)
        } else {
            write!(f, "{}/{}*{}", self.num, self.den, self.source)
        }
    }
}

/// One chain member: a weighted source, optionally plus a second one
/// (composite links are positive linear combinations of at most two
/// measures).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainTerm {
    pub first: Weighted,
    pub second: Option<Weighted>,
}

impl ChainTerm {
    pub fn single(num: u32, den: u32, source: TermSource) -> Self {
        ChainTerm {
            first: Weighted { num, den, source },
            second: None,
        }
    }

    pub fn pair(a: (u32, u32, TermSource), b: (u32, u32, TermSource)) -> Self {
        ChainTerm {
            first: Weighted {
                num: a.0,
                den: a.1,
                source: a.2,
            },
            second: Some(Weighted {
                num: b.0,
                den: b.1,
                source: b.2,
            }),
        }
    }

    pub fn evaluate(&self, p: &Distribution, q: &Distribution) -> Result<f64> {
        let mut value = self.first.coefficient() * self.first.source.evaluate(p, q)?;
        if let Some(w) = &self.second {
            value += w.coefficient() * w.source.evaluate(p, q)?;
        }
        Ok(value)
    }
}

impl fmt::Display for ChainTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.first)?;
        if let Some(w) = &self.second {
            write!(f, " + {w}")?;
        }
        Ok(())
    }
}

/// A named chain: terms in ascending claimed order.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    name: String,
    terms: Vec<ChainTerm>,
}

impl ChainSpec {
    pub fn new(name: impl Into<String>, terms: Vec<ChainTerm>) -> Result<Self> {
        let name = name.into();
        if terms.len() < 2 {
            return Err(Error::ChainConfig(format!(
                "chain `{name}` needs at least two terms"
            )));
        }
        Ok(ChainSpec { name, terms })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn terms(&self) -> &[ChainTerm] {
        &self.terms
    }

    /// Evaluates every term and checks each link for slack `>= -tol`.
    pub fn evaluate(&self, p: &Distribution, q: &Distribution, tol: f64) -> Result<ChainReport> {
        let values: Vec<f64> = self
            .terms
            .iter()
            .map(|t| t.evaluate(p, q))
            .collect::<Result<_>>()?;
        let links: Vec<Link> = values
            .windows(2)
            .map(|w| {
                let slack = w[1] - w[0];
                Link {
                    slack,
                    holds: slack >= -tol,
                }
            })
            .collect();
        let (worst_link, worst_slack) = links
            .iter()
            .enumerate()
            .map(|(i, l)| (i, l.slack))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        let holds = links.iter().all(|l| l.holds);
        Ok(ChainReport {
            chain: self.name.clone(),
            values,
            links,
            worst_slack,
            worst_link,
            holds,
        })
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : ", self.name)?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " <= ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Slack of one link; `holds` iff `slack >= -tol` at evaluation time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Link {
    pub slack: f64,
    pub holds: bool,
}

/// Per-link verdicts for one chain on one distribution pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainReport {
    pub chain: String,
    /// Evaluated term values, in chain order.
    pub values: Vec<f64>,
    pub links: Vec<Link>,
    pub worst_slack: f64,
    /// Index of the link with the smallest slack.
    pub worst_link: usize,
    pub holds: bool,
}

fn m(id: MeasureId) -> ChainTerm {
    ChainTerm::single(1, 1, TermSource::Measure(id))
}

fn cm(num: u32, den: u32, id: MeasureId) -> ChainTerm {
    ChainTerm::single(num, den, TermSource::Measure(id))
}

fn cx(num: u32, den: u32, id: XiId) -> ChainTerm {
    ChainTerm::single(num, den, TermSource::Xi(id))
}

fn mm(a: (u32, u32, MeasureId), b: (u32, u32, MeasureId)) -> ChainTerm {
    ChainTerm::pair(
        (a.0, a.1, TermSource::Measure(a.2)),
        (b.0, b.1, TermSource::Measure(b.2)),
    )
}

/// The five mean/classical chains registered by this module.
fn base_chains() -> Vec<ChainSpec> {
    use MeasureId::*;
    let eq23 = ChainSpec::new(
        "eq23",
        vec![
            m(SA),
            cm(1, 3, SH),
            cm(1, 4, Triangular),
            cm(1, 2, SG),
            m(Hellinger),
        ],
    );
    let eq24 = ChainSpec::new(
        "eq24",
        vec![
            cx(1, 1, XiId::SA),
            cx(1, 3, XiId::SH),
            cx(1, 4, XiId::Triangular),
            cx(1, 2, XiId::SG),
            cx(1, 1, XiId::Hellinger),
        ],
    );
    let eq46 = ChainSpec::new(
        "eq46",
        vec![
            cm(1, 4, Triangular),
            m(JensenShannonI),
            m(Hellinger),
            cm(1, 8, Jdiv),
            m(TanejaT),
        ],
    );
    let eq47 = ChainSpec::new(
        "eq47",
        vec![
            m(SA),
            cm(1, 3, SH),
            cm(1, 4, Triangular),
            cm(1, 2, SG),
            m(Hellinger),
            cm(1, 8, Jdiv),
            m(TanejaT),
        ],
    );
    let eq48 = ChainSpec::new(
        "eq48",
        vec![
            m(SA),
            cm(1, 3, SH),
            cm(1, 4, Triangular),
            m(JensenShannonI),
            m(Hellinger),
            cm(1, 8, Jdiv),
            m(TanejaT),
        ],
    );
    vec![
        eq23.unwrap(),
        eq24.unwrap(),
        eq46.unwrap(),
        eq47.unwrap(),
        eq48.unwrap(),
    ]
}

/// The refinement chains. `eq56-printed` is kept exactly as published; two
/// of its middle links are false (see the corrected variant, which drops
/// the `(h + 3 M_SA)/4` member and reads the `6 M_SG + Delta` denominator
/// as 16).
pub(crate) fn refinement_chains() -> Vec<ChainSpec> {
    use MeasureId::*;
    let eq51 = ChainSpec::new(
        "eq51",
        vec![
            ChainTerm::single(1, 1, TermSource::Refinement(RefinementId::K8)),
            ChainTerm::single(1, 3, TermSource::Refinement(RefinementId::K1)),
            ChainTerm::single(1, 4, TermSource::Refinement(RefinementId::K3)),
            ChainTerm::single(1, 3, TermSource::Refinement(RefinementId::K2)),
            ChainTerm::single(1, 1, TermSource::Refinement(RefinementId::K6)),
        ],
    );
    let eq56_printed = ChainSpec::new(
        "eq56-printed",
        vec![
            m(GH),
            m(SA),
            cm(1, 3, SH),
            cm(1, 4, Triangular),
            mm((3, 16, Triangular), (1, 8, SG)),
            mm((1, 4, Hellinger), (3, 4, SA)),
            mm((1, 4, Hellinger), (1, 4, SH)),
            mm((3, 2, SG), (1, 4, Triangular)),
            cm(1, 2, SG),
            m(Hellinger),
            cm(1, 2, Triangular),
        ],
    );
    let eq56_corrected = ChainSpec::new(
        "eq56-corrected",
        vec![
            m(GH),
            m(SA),
            cm(1, 3, SH),
            cm(1, 4, Triangular),
            mm((3, 16, Triangular), (1, 8, SG)),
            mm((1, 4, Hellinger), (1, 4, SH)),
            mm((3, 8, SG), (1, 16, Triangular)),
            cm(1, 2, SG),
            m(Hellinger),
            cm(1, 2, Triangular),
        ],
    );
    let eq57 = ChainSpec::new(
        "eq57",
        vec![
            cm(1, 4, Triangular),
            m(JensenShannonI),
            mm((2, 3, Hellinger), (1, 12, Triangular)),
            m(Hellinger),
            mm((1, 16, Jdiv), (1, 2, JensenShannonI)),
            mm((1, 3, TanejaT), (2, 3, Hellinger)),
            cm(1, 8, Jdiv),
            mm((2, 3, TanejaT), (1, 12, Triangular)),
            m(TanejaT),
        ],
    );
    vec![
        eq51.unwrap(),
        eq56_printed.unwrap(),
        eq56_corrected.unwrap(),
        eq57.unwrap(),
    ]
}

/// All registered chains under their stable names: `eq23`, `eq24`, `eq46`,
/// `eq47`, `eq48`, `eq51`, `eq56-printed`, `eq56-corrected`, `eq57`.
/// Every chain except `eq56-printed` holds for all distribution pairs.
pub fn builtin_chains() -> Vec<ChainSpec> {
    let mut chains = base_chains();
    chains.extend(refinement_chains());
    chains
}

/// Parses a plain-text chain list, one chain per line:
///
/// ```text
/// name : coeff*MEASURE [+ coeff*MEASURE] <= ... <= term
/// ```
///
/// Coefficients are rationals like `1/3` (`1` may be omitted). Sources are
/// measure tokens (`sa`, `hellinger`, ...), gap measures (`xi_sa`, ...) or
/// refinement divergences (`f1` .. `f10`). Blank lines and `#` comments are
/// skipped.
pub fn parse_chains(text: &str) -> Result<Vec<ChainSpec>> {
    let mut chains = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| Error::ChainConfig(format!("line {}: {msg}", lineno + 1));
        let (name, body) = line
            .split_once(':')
            .ok_or_else(|| bad("expected `name : term <= term ...`".into()))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(bad("empty chain name".into()));
        }
        let mut terms = Vec::new();
        for term_text in body.split("<=") {
            let mut parts = term_text.split('+').map(parse_weighted);
            let first = parts.next().unwrap().map_err(|e| bad(e.to_string()))?;
            let second = match parts.next() {
                None => None,
                Some(w) => Some(w.map_err(|e| bad(e.to_string()))?),
            };
            if parts.next().is_some() {
                return Err(bad("at most two summands per term".into()));
            }
            terms.push(ChainTerm { first, second });
        }
        chains.push(ChainSpec::new(name, terms)?);
    }
    Ok(chains)
}

fn parse_weighted(text: &str) -> Result<Weighted> {
    let text = text.trim();
    let (coeff, source) = match text.split_once('*') {
        Some((c, s)) => (c.trim(), s.trim()),
        None => ("1", text),
    };
    let (num, den) = match coeff.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<u32>().map_err(|_| bad_coeff(coeff))?,
            d.trim().parse::<u32>().map_err(|_| bad_coeff(coeff))?,
        ),
        None => (coeff.parse::<u32>().map_err(|_| bad_coeff(coeff))?, 1),
    };
    if num == 0 || den == 0 {
        return Err(bad_coeff(coeff));
    }
    Ok(Weighted {
        num,
        den,
        source: source.parse()?,
    })
}

fn bad_coeff(coeff: &str) -> Error {
    Error::ChainConfig(format!("invalid coefficient `{coeff}`"))
}

/// `f_a''(x) / f_b''(x)`, the pointwise curvature ratio of two generators.
pub fn curvature_ratio(gen_a: &Generator, gen_b: &Generator, x: f64) -> Result<f64> {
    let denom = gen_b.f_double_prime(x);
    if denom == 0.0 {
        return Err(Error::Singularity { x });
    }
    let ratio = gen_a.f_double_prime(x) / denom;
    if !ratio.is_finite() {
        return Err(Error::NonFinite {
            context: "curvature ratio",
            x,
        });
    }
    Ok(ratio)
}

/// Infimum and supremum of a curvature ratio over an interval, with the
/// abscissae where they are attained.
#[derive(Debug, Clone, Copy)]
pub struct ExtremumReport {
    pub inf_value: f64,
    pub inf_arg: f64,
    pub sup_value: f64,
    pub sup_arg: f64,
    /// Size of the initial log-uniform scan.
    pub grid_points: usize,
    /// Absolute argument tolerance of the local refinement.
    pub arg_tolerance: f64,
}

const EXTREMUM_GRID: usize = 2048;
const EXTREMUM_ARG_TOL: f64 = 1e-8;

/// Scans `f_a''/f_b''` on a log-uniform grid over `[lo, hi]` and refines
/// the best cells by golden-section search. The search is blind: it does
/// not assume the extremum sits at `x = 1`.
pub fn ratio_extremum(
    gen_a: &Generator,
    gen_b: &Generator,
    lo: f64,
    hi: f64,
) -> Result<ExtremumReport> {
    if !(lo > 0.0 && lo < hi && hi.is_finite()) {
        return Err(Error::ParameterOutOfRange {
            name: "lo..hi",
            value: lo,
        });
    }
    let (llo, lhi) = (lo.ln(), hi.ln());
    let xs: Vec<f64> = (0..EXTREMUM_GRID)
        .map(|i| (llo + (lhi - llo) * i as f64 / (EXTREMUM_GRID - 1) as f64).exp())
        .collect();
    let mut gs = Vec::with_capacity(xs.len());
    for &x in &xs {
        gs.push(curvature_ratio(gen_a, gen_b, x)?);
    }

    let argmin = (0..gs.len())
        .min_by(|&i, &j| gs[i].partial_cmp(&gs[j]).unwrap())
        .unwrap();
    let argmax = (0..gs.len())
        .max_by(|&i, &j| gs[i].partial_cmp(&gs[j]).unwrap())
        .unwrap();

    let bracket = |i: usize| {
        let a = if i == 0 { xs[0] } else { xs[i - 1] };
        let b = if i + 1 == xs.len() {
            xs[xs.len() - 1]
        } else {
            xs[i + 1]
        };
        (a, b)
    };

    let g = |x: f64| gen_a.f_double_prime(x) / gen_b.f_double_prime(x);
    let (lo_a, lo_b) = bracket(argmin);
    let (inf_arg, inf_value) = golden_min(lo_a, lo_b, g, EXTREMUM_ARG_TOL);
    let (hi_a, hi_b) = bracket(argmax);
    let (sup_arg, neg_sup) = golden_min(hi_a, hi_b, |x| -g(x), EXTREMUM_ARG_TOL);

    Ok(ExtremumReport {
        inf_value,
        inf_arg,
        sup_value: -neg_sup,
        sup_arg,
        grid_points: EXTREMUM_GRID,
        arg_tolerance: EXTREMUM_ARG_TOL,
    })
}

/// Golden-section minimization on `[a, b]` down to an absolute argument
/// tolerance. Returns the midpoint of the final bracket and its value.
fn golden_min(mut a: f64, mut b: f64, f: impl Fn(f64) -> f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `sigma(x) = sqrt(2) (x^2+1)^{5/2} - 8 x^{3/2} (x^2 + 3x + 1)`.
///
/// The sign of this function decides whether the curvature ratio of the
/// square-root/geometric generator against the Jensen-Shannon one is
/// monotone around `x = 1`; it takes both signs, so no sandwich constant
/// exists for that pair.
pub fn sigma_sg_i(x: f64) -> f64 {
    let u = x * x + 1.0;
    std::f64::consts::SQRT_2 * u * u * u.sqrt() - 8.0 * x * x.sqrt() * (x * x + 3.0 * x + 1.0)
}

/// Scans `fn_a - fn_b` on a uniform grid of `steps` cells over `[lo, hi]`
/// and returns every bracketing interval where the sign flips.
pub fn crossing_scan(
    fn_a: impl Fn(f64) -> f64,
    fn_b: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    steps: usize,
) -> Result<Vec<(f64, f64)>> {
    if lo >= hi || lo.is_nan() || hi.is_nan() {
        return Err(Error::ParameterOutOfRange {
            name: "lo..hi",
            value: lo,
        });
    }
    if steps < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "steps",
            value: steps as f64,
        });
    }
    let mut brackets = Vec::new();
    let width = (hi - lo) / steps as f64;
    let mut prev_x = lo;
    let mut prev_d = fn_a(lo) - fn_b(lo);
    if !prev_d.is_finite() {
        return Err(Error::NonFinite {
            context: "crossing scan",
            x: lo,
        });
    }
    for k in 1..=steps {
        let x = if k == steps {
            hi
        } else {
            lo + width * k as f64
        };
        let d = fn_a(x) - fn_b(x);
        if !d.is_finite() {
            return Err(Error::NonFinite {
                context: "crossing scan",
                x,
            });
        }
        if prev_d * d < 0.0 {
            brackets.push((prev_x, x));
        }
        prev_x = x;
        prev_d = d;
    }
    Ok(brackets)
}

//! Exponent laws for `B_n` and `I~_n`, their empirical counterparts, the
//! `gamma < gamma_0` hypothesis and the irrationality-measure estimate.
//!
//! With `beta = (sqrt 5 - 1)/2` and `gamma_0 = 1 - beta = (3 - sqrt 5)/2`:
//!
//! ```text
//! log|B_n|  / (n^2 log|q1|) -> (1-g)(1+beta) + g(1+beta) + beta^2/2 = (5 + sqrt 5)/4
//! log|I~_n| / (n^2 log|q1|) -> -(1-g)(1+beta)^2/2 + g(1+beta) + beta^2/2
//!                            = -sqrt5 (sqrt5 + 1)(gamma_0 - g) / (2 (sqrt5 - 1))
//! ```
//!
//! The ratio of the two limits gives `c = 2(gamma_0 - g)/(sqrt 5 - 1)` and the
//! predicted irrationality exponent `1 + 1/c`.
//!
//! Empirical exponents are diagnostics: they use interval midpoints, not
//! enclosures.

use num_traits::{One, Signed, Zero};

use crate::approximants::ApproximantRecord;
use crate::arith::{
    gamma_enclosure, ln_enclosure, pow2, rat, sqrt_enclosure, ProblemInstance, Rational,
    RationalInterval,
};
use crate::error::{Error, Result};

fn constant_width() -> Rational {
    pow2(-128)
}

fn log_width() -> Rational {
    pow2(-64)
}

fn sqrt5(width: &Rational) -> RationalInterval {
    sqrt_enclosure(&rat(5, 1), width).expect("5 > 0, width > 0")
}

fn point(num: i64, den: i64) -> RationalInterval {
    RationalInterval::point(rat(num, den))
}

/// `beta = (sqrt 5 - 1)/2`, the root of `x^2 + x - 1` in `(0, 1)`.
pub fn beta_enclosure(width: &Rational) -> RationalInterval {
    (&sqrt5(&(width * rat(2, 1))) - &point(1, 1)).scale(&rat(1, 2))
}

/// `gamma_0 = (3 - sqrt 5)/2 = 0.381966...`.
pub fn gamma0_enclosure(width: &Rational) -> RationalInterval {
    (&point(3, 1) - &sqrt5(&(width * rat(2, 1)))).scale(&rat(1, 2))
}

/// Limit of `log|B_n| / (n^2 log|q1|)`, the closed form `(5 + sqrt 5)/4`.
pub fn theoretical_b_exponent() -> RationalInterval {
    (&point(5, 1) + &sqrt5(&constant_width())).scale(&rat(1, 4))
}

/// The same limit written as `(1-g)(1+beta) + g(1+beta) + beta^2/2`; the `g`
/// terms cancel, which is checked by comparing with
/// [`theoretical_b_exponent`].
pub fn theoretical_b_exponent_expanded(gamma: &RationalInterval) -> RationalInterval {
    let beta = beta_enclosure(&constant_width());
    let one = point(1, 1);
    let one_plus_beta = &one + &beta;
    let first = &(&one - gamma) * &one_plus_beta;
    let second = gamma * &one_plus_beta;
    let third = (&beta * &beta).scale(&rat(1, 2));
    &(&first + &second) + &third
}

fn check_gamma_range(gamma: &RationalInterval) -> Result<()> {
    if gamma.lo().is_negative() || *gamma.hi() >= Rational::one() {
        return Err(Error::Domain(format!(
            "gamma enclosure {gamma} must lie in [0, 1)"
        )));
    }
    Ok(())
}

/// `-(1-g)(1+beta)^2/2 + g(1+beta) + beta^2/2`.
pub fn theoretical_i_exponent_expanded(gamma: &RationalInterval) -> RationalInterval {
    let beta = beta_enclosure(&constant_width());
    let one = point(1, 1);
    let one_plus_beta = &one + &beta;
    let first = -(&(&one - gamma) * &(&one_plus_beta * &one_plus_beta)).scale(&rat(1, 2));
    let second = gamma * &one_plus_beta;
    let third = (&beta * &beta).scale(&rat(1, 2));
    &(&first + &second) + &third
}

/// `-sqrt5 (sqrt5 + 1)(gamma_0 - g) / (2 (sqrt5 - 1))`.
pub fn theoretical_i_exponent_factored(gamma: &RationalInterval) -> RationalInterval {
    let s5 = sqrt5(&constant_width());
    let one = point(1, 1);
    let gamma0 = (&point(3, 1) - &s5).scale(&rat(1, 2));
    let numerator = &(&s5 * &(&s5 + &one)) * &(&gamma0 - gamma);
    let denominator = (&s5 - &one).scale(&rat(2, 1));
    -numerator.checked_div(&denominator).expect("sqrt 5 - 1 > 0")
}

/// Limit of `log|I~_n| / (n^2 log|q1|)`: the intersection of the expanded
/// and factored closed forms, which must overlap.
pub fn theoretical_i_exponent(gamma: &RationalInterval) -> Result<RationalInterval> {
    check_gamma_range(gamma)?;
    let expanded = theoretical_i_exponent_expanded(gamma);
    let factored = theoretical_i_exponent_factored(gamma);
    expanded
        .intersect(&factored)
        .ok_or_else(|| Error::InvariantViolation {
            n: 0,
            detail: format!("closed forms disagree: {expanded} vs {factored}"),
        })
}

/// `c = 2(gamma_0 - g)/(sqrt 5 - 1)`, the exponent in `|alpha - A/B| < |B|^-(1+c)`.
pub fn approximation_exponent(gamma: &RationalInterval) -> Result<RationalInterval> {
    let gamma0 = gamma0_enclosure(&constant_width());
    if !gamma.strictly_below(&gamma0) {
        return Err(Error::Domain(format!(
            "gamma enclosure {gamma} is not below gamma_0"
        )));
    }
    let s5 = sqrt5(&constant_width());
    (&gamma0 - gamma)
        .scale(&rat(2, 1))
        .checked_div(&(&s5 - &point(1, 1)))
}

/// `1 + (sqrt 5 - 1)/(2 (gamma_0 - g))`; `(3 + sqrt 5)/2` at `g = 0`.
pub fn predicted_irrationality_exponent(gamma: &RationalInterval) -> Result<RationalInterval> {
    let c = approximation_exponent(gamma)?;
    Ok(c.recip()?.shift(&Rational::one()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// `gamma < gamma_0`, certified by disjoint enclosures.
    Holds,
    /// `gamma > gamma_0`, certified.
    Fails,
    /// Enclosures still overlap at the finest width tried.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub verdict: Hypothesis,
    pub gamma: RationalInterval,
    pub gamma0: RationalInterval,
}

impl HypothesisCheck {
    pub fn holds(&self) -> bool {
        self.verdict == Hypothesis::Holds
    }
}

/// Compares `gamma = log|q2|/log|q1|` with `gamma_0`, refining both
/// enclosures until they separate. `gamma_0` is irrational while `gamma` is
/// either rational or transcendental, so they are never equal and refinement
/// terminates in exact arithmetic; the width floor is a practical guard.
pub fn hypothesis_check(inst: &ProblemInstance) -> Result<HypothesisCheck> {
    let floor_bits = 1024;
    let mut bits = 16;
    loop {
        let width = pow2(-bits);
        let gamma = gamma_enclosure(inst, &width)?;
        let gamma0 = gamma0_enclosure(&width);
        let verdict = if gamma.strictly_below(&gamma0) {
            Hypothesis::Holds
        } else if gamma0.strictly_below(&gamma) {
            Hypothesis::Fails
        } else if bits >= floor_bits {
            Hypothesis::Indeterminate
        } else {
            bits *= 2;
            continue;
        };
        return Ok(HypothesisCheck {
            verdict,
            gamma,
            gamma0,
        });
    }
}

fn ln_mid(x: &Rational) -> Result<Rational> {
    Ok(ln_enclosure(&x.abs(), &log_width())?.midpoint())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub n: u64,
    /// `log|B_n| / (n^2 log|q1|)`
    pub empirical_b: Rational,
    /// `log|I~_n| / (n^2 log|q1|)`, from the midpoint of the enclosure
    pub empirical_i: Rational,
    pub theoretical_b: RationalInterval,
    pub theoretical_i: RationalInterval,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentSeries {
    pub reports: Vec<ExponentReport>,
    /// Records left out, with the reason.
    pub skipped: Vec<(u64, String)>,
}

/// Per-record empirical exponents next to the limits they should approach.
/// Records with `B_n = 0` or an uncertified `I~_n` are skipped and listed.
pub fn empirical_exponents(
    records: &[ApproximantRecord],
    inst: &ProblemInstance,
) -> Result<ExponentSeries> {
    let ln_q1 = ln_mid(&Rational::from_integer(inst.q1().clone()))?;
    let gamma = gamma_enclosure(inst, &log_width())?;
    let theoretical_b = theoretical_b_exponent();
    let theoretical_i = theoretical_i_exponent(&gamma)?;

    let mut series = ExponentSeries::default();
    for rec in records {
        if rec.b().is_zero() {
            series.skipped.push((rec.n(), "B_n = 0".into()));
            continue;
        }
        if !rec.nonzero_certified() {
            series
                .skipped
                .push((rec.n(), "I~_n not certified non-zero".into()));
            continue;
        }
        let scale = &ln_q1 * rat((rec.n() * rec.n()) as i64, 1);
        let empirical_b = ln_mid(&Rational::from_integer(rec.b().clone()))? / &scale;
        let empirical_i = ln_mid(&rec.i_tilde().midpoint())? / &scale;
        series.reports.push(ExponentReport {
            n: rec.n(),
            empirical_b,
            empirical_i,
            theoretical_b: theoretical_b.clone(),
            theoretical_i: theoretical_i.clone(),
        });
    }
    Ok(series)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureEstimate {
    /// Fitted `c` in `|I~_n| ~ |B_n|^-c`.
    pub c_hat: Rational,
    /// `1 + 1/c` from the closed form; `None` when `gamma >= gamma_0`.
    pub predicted_exponent: Option<RationalInterval>,
    /// `1 + 1/c_hat`.
    pub empirical_exponent: Rational,
    /// `log|B_{n+1}| / log|B_n|` for the last consecutive pair in the fit
    /// window; should tend to 1.
    pub last_growth_ratio: Rational,
    /// Indices used in the fit.
    pub fit_ns: Vec<u64>,
}

/// Least-squares slope of `y` on `x`.
fn ls_slope(points: &[(Rational, Rational)]) -> Option<Rational> {
    let count = rat(points.len() as i64, 1);
    let mean_x = points.iter().map(|(x, _)| x).sum::<Rational>() / &count;
    let mean_y = points.iter().map(|(_, y)| y).sum::<Rational>() / &count;
    let mut sxy = Rational::zero();
    let mut sxx = Rational::zero();
    for (x, y) in points {
        let dx = x - &mean_x;
        sxy += &dx * (y - &mean_y);
        sxx += &dx * &dx;
    }
    (!sxx.is_zero()).then(|| sxy / sxx)
}

/// Fits `c` from `|T - A_n/B_n| = |I~_n / B_n| ~ |B_n|^-(1+c)`: the slope of
/// `-log|I~_n / B_n|` against `log|B_n|`, minus one, over the last half of
/// the usable records.
pub fn estimate_measure(
    records: &[ApproximantRecord],
    inst: &ProblemInstance,
) -> Result<MeasureEstimate> {
    let mut usable: Vec<&ApproximantRecord> = records
        .iter()
        .filter(|r| r.nonzero_certified() && r.b().abs() > num_bigint::BigInt::one())
        .collect();
    usable.sort_by_key(|r| r.n());
    if usable.len() < 5 {
        return Err(Error::Estimation(format!(
            "need at least 5 certified records with |B_n| > 1, have {}",
            usable.len()
        )));
    }
    let window = &usable[usable.len() / 2..];
    if window.windows(2).any(|w| w[1].b().abs() <= w[0].b().abs()) {
        return Err(Error::Estimation(
            "|B_n| is not increasing over the fit window".into(),
        ));
    }

    let mut points = Vec::with_capacity(window.len());
    let mut log_b = Vec::with_capacity(window.len());
    for rec in window {
        let lb = ln_mid(&Rational::from_integer(rec.b().clone()))?;
        let li = ln_mid(&rec.i_tilde().midpoint())?;
        points.push((lb.clone(), &lb - li));
        log_b.push(lb);
    }
    let slope = ls_slope(&points).ok_or_else(|| Error::Estimation("degenerate fit".into()))?;
    let c_hat = slope - Rational::one();
    if !c_hat.is_positive() {
        return Err(Error::Estimation(format!(
            "fitted exponent c = {:.6} is not positive",
            crate::arith::to_f64(&c_hat)
        )));
    }
    let empirical_exponent = Rational::one() + c_hat.recip();
    let last_growth_ratio = &log_b[log_b.len() - 1] / &log_b[log_b.len() - 2];

    let gamma = gamma_enclosure(inst, &log_width())?;
    let predicted_exponent = predicted_irrationality_exponent(&gamma).ok();
    Ok(MeasureEstimate {
        c_hat,
        predicted_exponent,
        empirical_exponent,
        last_growth_ratio,
        fit_ns: window.iter().map(|r| r.n()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn zero() -> RationalInterval {
        point(0, 1)
    }

    #[test]
    fn b_exponent_value_and_gamma_independence() {
        let b = theoretical_b_exponent();
        assert!(b.width() < pow2(-120));
        // (5 + sqrt5)/4 = 1.80901699437494742...
        assert!(b.lo() > &rat(180901699437494, 100_000_000_000_000));
        assert!(b.hi() < &rat(180901699437495, 100_000_000_000_000));
        for g in [zero(), point(1, 5), point(3, 8)] {
            assert!(theoretical_b_exponent_expanded(&g).overlaps(&b));
        }
    }

    #[test]
    fn i_exponent_examples() {
        let at0 = theoretical_i_exponent(&zero()).unwrap();
        // -sqrt5/2 = -1.1180339887...
        assert!(at0.lo() > &rat(-11180340, 10_000_000) && at0.hi() < &rat(-11180339, 10_000_000));
        assert!(at0.is_strictly_negative());

        let g0 = gamma0_enclosure(&pow2(-100));
        let at_g0 = theoretical_i_exponent(&g0).unwrap();
        assert!(at_g0.contains_zero());

        assert!(theoretical_i_exponent(&point(-1, 10)).is_err());
        assert!(theoretical_i_exponent(&point(1, 1)).is_err());
    }

    #[test]
    fn predicted_exponent_examples() {
        let p = predicted_irrationality_exponent(&zero()).unwrap();
        // (3 + sqrt5)/2 = 2.6180339887...
        assert!(p.lo() > &rat(26180339, 10_000_000) && p.hi() < &rat(26180340, 10_000_000));
        // c from the ratio of the two limits
        let c = approximation_exponent(&point(1, 10)).unwrap();
        let ratio = (-theoretical_i_exponent(&point(1, 10)).unwrap())
            .checked_div(&theoretical_b_exponent())
            .unwrap();
        assert!(c.overlaps(&ratio));
        // pole at gamma_0
        let near = gamma0_enclosure(&pow2(-80)).shift(&-pow2(-40));
        assert!(predicted_irrationality_exponent(&near).unwrap().lo() > &rat(1_000_000_000, 1));
        assert!(predicted_irrationality_exponent(&point(1, 2)).is_err());
    }

    #[test]
    fn hypothesis_examples() {
        let check = |q1: i64, q2: i64| {
            hypothesis_check(&ProblemInstance::new(int(q1), int(q2), int(1), int(1)).unwrap())
                .unwrap()
        };
        let c = check(2, 1);
        assert_eq!(c.verdict, Hypothesis::Holds);
        assert_eq!(c.gamma, zero());
        assert!(c
            .gamma0
            .contains(&rat(381966011250105, 1_000_000_000_000_000)));
        assert_eq!(check(3, 2).verdict, Hypothesis::Fails);
        assert_eq!(check(7, 2).verdict, Hypothesis::Holds);
    }

    fn synthetic(n: u64, b_log2: i64, i_log2: i64) -> ApproximantRecord {
        ApproximantRecord::from_parts(
            n,
            int(0),
            int(1) << b_log2 as usize,
            RationalInterval::point(pow2(i_log2)),
        )
        .unwrap()
    }

    #[test]
    fn exact_power_law_is_recovered() {
        // B_n = 2^(2n), I~_n = 2^-n: |I~/B| = |B|^-(3/2), so c = 1/2
        let records: Vec<_> = (1..=12)
            .map(|n| synthetic(n, 2 * n as i64, -(n as i64)))
            .collect();
        let inst = ProblemInstance::new(int(2), int(1), int(1), int(1)).unwrap();
        let est = estimate_measure(&records, &inst).unwrap();
        assert!((&est.c_hat - rat(1, 2)).abs() < pow2(-50));
        assert!((&est.empirical_exponent - rat(3, 1)).abs() < pow2(-48));
        assert_eq!(est.fit_ns, (7..=12).collect::<Vec<_>>());
        assert!(est.predicted_exponent.is_some());
    }

    #[test]
    fn estimation_errors() {
        let inst = ProblemInstance::new(int(2), int(1), int(1), int(1)).unwrap();
        let few: Vec<_> = (1..=4)
            .map(|n| synthetic(n, 2 * n as i64, -(n as i64)))
            .collect();
        assert!(matches!(
            estimate_measure(&few, &inst),
            Err(Error::Estimation(_))
        ));
        let flat: Vec<_> = (1..=8).map(|n| synthetic(n, 5, -(n as i64))).collect();
        assert!(matches!(
            estimate_measure(&flat, &inst),
            Err(Error::Estimation(_))
        ));
        // growing remainders give c <= 0
        let growing: Vec<_> = (1..=8)
            .map(|n| synthetic(n, 2 * n as i64, 3 * n as i64))
            .collect();
        assert!(matches!(
            estimate_measure(&growing, &inst),
            Err(Error::Estimation(_))
        ));
    }

    #[test]
    fn empirical_skips_bad_records() {
        let inst = ProblemInstance::new(int(2), int(1), int(1), int(1)).unwrap();
        let good = synthetic(3, 4, -2);
        let zero_b = ApproximantRecord::from_parts(4, int(1), int(0), point(-1, 1)).unwrap();
        let straddle = ApproximantRecord::from_parts(
            5,
            int(0),
            int(7),
            RationalInterval::new(rat(-1, 8), rat(1, 8)).unwrap(),
        )
        .unwrap();
        let series = empirical_exponents(&[good, zero_b, straddle], &inst).unwrap();
        assert_eq!(series.reports.len(), 1);
        assert_eq!(
            series.skipped.iter().map(|s| s.0).collect::<Vec<_>>(),
            vec![4, 5]
        );
        let r = &series.reports[0];
        // log 2^4 / (9 log 2) = 4/9
        assert!((&r.empirical_b - rat(4, 9)).abs() < pow2(-55));
        assert!((&r.empirical_i - rat(-2, 9)).abs() < pow2(-55));
    }
}

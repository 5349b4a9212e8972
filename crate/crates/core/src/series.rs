//! Certified enclosures of `T_q(z)`, of the theta companion
//! `Theta_q(z) = sum z^n q^(-n^2)`, and of the remainder series `I_n`.
//!
//! Terms are exact; partial sums are accumulated on a fixed dyadic grid with
//! floor/ceil rounding, so the sum is itself an enclosure. Tails are bounded geometrically: once consecutive
//! term ratios are at most 1/2 from index `N + 1` on, the tail past `N` is at
//! most twice the `(N + 1)`-th term. Terms decay like `q^(-l^2/2)`, so this
//! kicks in after a handful of terms.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{bits_for_width, m_of_n, pow2, rat, rpow, to_f64, Rational, RationalInterval};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_TERMS: usize = 100_000;

/// Truncation controls: stop once the enclosure is at most `target_width`
/// wide, give up after `max_terms` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTermBudget {
    max_terms: usize,
    target_width: Rational,
}

impl SeriesTermBudget {
    pub fn new(max_terms: usize, target_width: Rational) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        if !target_width.is_positive() {
            return Err(Error::Domain("target_width must be positive".into()));
        }
        Ok(Self {
            max_terms,
            target_width,
        })
    }

    pub fn with_width(target_width: Rational) -> Result<Self> {
        Self::new(DEFAULT_MAX_TERMS, target_width)
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn target_width(&self) -> &Rational {
        &self.target_width
    }

    /// Same term limit, different width.
    pub fn retarget(&self, target_width: Rational) -> Result<Self> {
        Self::new(self.max_terms, target_width)
    }
}

impl Default for SeriesTermBudget {
    fn default() -> Self {
        Self {
            max_terms: DEFAULT_MAX_TERMS,
            target_width: pow2(-64),
        }
    }
}

fn require_large_q(q: &Rational) -> Result<()> {
    if q.abs() <= Rational::one() {
        return Err(Error::Domain(format!("series needs |q| > 1, got q = {q}")));
    }
    Ok(())
}

/// Rough count of terms before the ratio `|z| |q|^-l` drops to 1/2. Only used
/// to fail fast on hopeless budgets (q barely above 1 in modulus).
fn ratio_onset_estimate(q: &Rational, z: &Rational) -> f64 {
    if z.is_zero() {
        return 0.0;
    }
    let lz = (2.0 * to_f64(&z.abs())).ln();
    let lq = to_f64(&q.abs()).ln();
    (lz / lq).max(0.0)
}

fn check_onset(q: &Rational, z: &Rational, offset: usize, budget: &SeriesTermBudget) -> Result<()> {
    let onset = ratio_onset_estimate(q, z);
    if onset.is_finite() && onset > (budget.max_terms + offset) as f64 * 1.01 + 2.0 {
        return Err(Error::PrecisionExhausted {
            terms: budget.max_terms,
            achieved: None,
        });
    }
    Ok(())
}

/// Extra grid bits so that up to 2^20 rounded additions stay below 1/8 of
/// the rounding grid used by [`finish`].
const SUM_GUARD_BITS: u64 = 20;

/// Unreduced fraction with positive denominator. Series terms have
/// thousands of digits; skipping the gcd on every product is the main saving.
#[derive(Clone)]
struct Frac {
    num: BigInt,
    den: BigInt,
}

impl Frac {
    fn one() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::one(),
        }
    }

    fn from_rational(r: &Rational) -> Self {
        Self {
            num: r.numer().clone(),
            den: r.denom().clone(),
        }
    }

    fn mul_rational(&mut self, r: &Rational) {
        self.num *= r.numer();
        self.den *= r.denom();
    }

    fn mul_frac(&mut self, other: &Frac) {
        self.num *= &other.num;
        self.den *= &other.den;
    }

    /// `1 - self`
    fn one_minus(&self) -> Self {
        Self {
            num: &self.den - &self.num,
            den: self.den.clone(),
        }
    }

    /// `|self| * k <= bound` for positive `k` and `bound`.
    fn scaled_abs_le(&self, k: &Rational, bound: &Rational) -> bool {
        self.num.abs() * k.numer() * bound.denom() <= bound.numer() * &self.den * k.denom()
    }

    fn to_rational(&self) -> Rational {
        Rational::new(self.num.clone(), self.den.clone())
    }
}

/// Running enclosure `[lo, hi] / 2^bits` of a sum of exact rationals.
struct GridSum {
    bits: u64,
    lo: BigInt,
    hi: BigInt,
}

impl GridSum {
    fn new(budget: &SeriesTermBudget) -> Self {
        Self {
            bits: bits_for_width(&(budget.target_width() / rat(8, 1))) + SUM_GUARD_BITS,
            lo: BigInt::zero(),
            hi: BigInt::zero(),
        }
    }

    fn add(&mut self, term: &Frac) {
        let scaled = &term.num << self.bits;
        self.lo += scaled.div_floor(&term.den);
        self.hi += scaled.div_ceil(&term.den);
    }

    /// `[lo - tail, hi + tail]` widened to the dyadic grid of the budget.
    fn finish(&self, tail: &Rational, budget: &SeriesTermBudget) -> RationalInterval {
        let scale = BigInt::one() << self.bits;
        let lo = Rational::new(self.lo.clone(), scale.clone()) - tail;
        let hi = Rational::new(self.hi.clone(), scale) + tail;
        let bits = bits_for_width(&(budget.target_width() / rat(8, 1)));
        RationalInterval::new(lo, hi)
            .expect("lower sum never exceeds upper sum")
            .round_outward(bits)
    }
}

/// Enclosure of `T_q(z) = sum_{l>=0} z^l q^(-l(l-1)/2)` of width at most
/// `budget.target_width`. Any `z` is allowed, including zero.
pub fn tschakaloff_enclosure(
    q: &Rational,
    z: &Rational,
    budget: &SeriesTermBudget,
) -> Result<RationalInterval> {
    require_large_q(q)?;
    check_onset(q, z, 0, budget)?;
    let z_abs = z.abs();
    let half = rat(1, 2);
    let tail_goal = budget.target_width() / rat(4, 1);
    let q_inv = q.recip();

    let two = rat(2, 1);
    let mut sum = GridSum::new(budget);
    let mut term = Frac::one();
    // q^-l for the current index l
    let mut q_inv_pow = Rational::one();
    let mut last_tail = None;
    for _ in 0..budget.max_terms() {
        sum.add(&term);
        term.mul_rational(&(z * &q_inv_pow));
        q_inv_pow *= &q_inv;
        // ratios from index l+1 on are bounded by |z| |q|^-(l+1)
        if &z_abs * q_inv_pow.abs() <= half {
            if term.scaled_abs_le(&two, &tail_goal) {
                return Ok(sum.finish(&(&two * term.to_rational().abs()), budget));
            }
            last_tail = Some(term.clone());
        }
    }
    Err(Error::PrecisionExhausted {
        terms: budget.max_terms(),
        achieved: last_tail
            .map(|t| sum.finish(&(&two * t.to_rational().abs()), budget))
            .map(Box::new),
    })
}

/// `Theta_q(z)` computed as `T_{q^2}(z/q)`.
pub fn theta_via_tschakaloff(
    q: &Rational,
    z: &Rational,
    budget: &SeriesTermBudget,
) -> Result<RationalInterval> {
    require_large_q(q)?;
    tschakaloff_enclosure(&(q * q), &(z / q), budget)
}

/// `Theta_q(z)` by summing `z^l q^(-l^2)` directly.
pub fn theta_direct_enclosure(
    q: &Rational,
    z: &Rational,
    budget: &SeriesTermBudget,
) -> Result<RationalInterval> {
    require_large_q(q)?;
    check_onset(&(q * q), z, 0, budget)?;
    let z_abs = z.abs();
    let half = rat(1, 2);
    let tail_goal = budget.target_width() / rat(4, 1);
    let q_inv = q.recip();
    let q_inv2 = &q_inv * &q_inv;

    let two = rat(2, 1);
    let mut sum = GridSum::new(budget);
    let mut term = Frac::one();
    // q^-(2l+1) for the current index l
    let mut step = q_inv.clone();
    let mut last_tail = None;
    for _ in 0..budget.max_terms() {
        sum.add(&term);
        term.mul_rational(&(z * &step));
        step *= &q_inv2;
        if &z_abs * step.abs() <= half {
            if term.scaled_abs_le(&two, &tail_goal) {
                return Ok(sum.finish(&(&two * term.to_rational().abs()), budget));
            }
            last_tail = Some(term.clone());
        }
    }
    Err(Error::PrecisionExhausted {
        terms: budget.max_terms(),
        achieved: last_tail
            .map(|t| sum.finish(&(&two * t.to_rational().abs()), budget))
            .map(Box::new),
    })
}

/// `R_n(x; q) = prod_{j=1..n} (1 - q^j x)`, evaluated exactly.
pub fn r_value(n: u64, x: &Rational, q: &Rational) -> Rational {
    r_frac(n, &Frac::from_rational(x), q).to_rational()
}

fn r_frac(n: u64, x: &Frac, q: &Rational) -> Frac {
    let mut q_pow_x = x.clone();
    let mut acc = Frac::one();
    for _ in 0..n {
        q_pow_x.mul_rational(q);
        acc.mul_frac(&q_pow_x.one_minus());
    }
    acc
}

/// Enclosure of the remainder series
///
/// ```text
/// I_n = sum_{t>=1} R_n(q^-t; q) z^(t+m) q^(-(t+m)(t+m-1)/2),   m = floor(n (sqrt 5 - 1)/2).
/// ```
///
/// `R_n(q^-t; q)` has the factor `1 - q^t q^-t` for `t <= n`, so summation
/// starts at `t = n + 1`. For `t > n` every factor satisfies
/// `|1 - q^(j-t)| <= 1 + |q|^(j-t) < 2`, giving `|R_n| <= 2^n`.
// The product over i >= 1 of (1 + |q|^-i) is a sharper n-independent bound;
// 2^n only costs about n extra bits of working precision.
pub fn i_n_direct_enclosure(
    q: &Rational,
    z: &Rational,
    n: u64,
    budget: &SeriesTermBudget,
) -> Result<RationalInterval> {
    require_large_q(q)?;
    let m = m_of_n(n)?;
    check_onset(q, z, (n + m) as usize, budget)?;
    let z_abs = z.abs();
    let half = rat(1, 2);
    let tail_goal = budget.target_width() / rat(4, 1);
    let tail_factor = pow2(n as i64 + 1);
    let q_inv = q.recip();

    // u_l = z^l q^(-l(l-1)/2) at l = n + m + 1
    let l = (n + m + 1) as i64;
    let mut u = Frac::from_rational(&(rpow(z, l) * rpow(q, -(l * (l - 1) / 2))));
    // q^-l, used both in the recurrence u_{l+1} = u_l z q^-l and in the ratio test
    let mut q_inv_pow = rpow(q, -l);
    // q^-t at t = n + 1
    let mut x = Frac::from_rational(&rpow(&q_inv, n as i64 + 1));
    let mut sum = GridSum::new(budget);
    let mut last_tail = None;
    for _ in 0..budget.max_terms() {
        let mut term = r_frac(n, &x, q);
        term.mul_frac(&u);
        sum.add(&term);
        u.mul_rational(&(z * &q_inv_pow));
        q_inv_pow *= &q_inv;
        x.mul_rational(&q_inv);
        // the unsummed majorant 2^n (|u| + ...) starts at u with ratios <= |z| |q|^-l
        if &z_abs * q_inv_pow.abs() <= half {
            if u.scaled_abs_le(&tail_factor, &tail_goal) {
                return Ok(sum.finish(&(&tail_factor * u.to_rational().abs()), budget));
            }
            last_tail = Some(u.clone());
        }
    }
    Err(Error::PrecisionExhausted {
        terms: budget.max_terms(),
        achieved: last_tail
            .map(|u| sum.finish(&(&tail_factor * u.to_rational().abs()), budget))
            .map(Box::new),
    })
}

use num_traits::{One, Signed, Zero};

use super::instance::ProblemInstance;
use super::interval::RationalInterval;
use super::rational::{bits_for_width, ceil_dyadic, floor_dyadic, floor_log2, pow2, rat, Rational};
use crate::error::{Error, Result};

/// Bits of the reduced argument kept before summing; wider inputs are
/// bracketed between two dyadic neighbours first.
const GUARD_BITS: u64 = 8;

/// Enclosure of `ln(y)` for `1 <= y <= 2` via
/// `ln y = 2 atanh(s) = 2 sum_j s^(2j+1)/(2j+1)`, `s = (y-1)/(y+1) in [0, 1/3]`.
///
/// The remainder after `J` terms is at most `2 s^(2J+1) / ((2J+1)(1 - s^2))`.
fn ln_reduced(y: &Rational, max_width: &Rational) -> RationalInterval {
    debug_assert!(*y >= Rational::one() && *y <= rat(2, 1));
    if y.is_one() {
        return RationalInterval::point(Rational::zero());
    }
    let one = Rational::one();
    let s = (y - &one) / (y + &one);
    let s2 = &s * &s;
    let tail_factor = (&one - &s2).recip();
    let half_width = max_width / rat(2, 1);

    let mut sum = Rational::zero();
    let mut power = s.clone();
    let mut j: i64 = 0;
    loop {
        let denom = rat(2 * j + 1, 1);
        sum += &power / &denom;
        power *= &s2;
        j += 1;
        let tail = rat(2, 1) * &power / rat(2 * j + 1, 1) * &tail_factor;
        if tail <= half_width {
            let lo = rat(2, 1) * &sum;
            let hi = &lo + tail;
            let bits = bits_for_width(&(max_width / rat(4, 1)));
            return RationalInterval::new(floor_dyadic(&lo, bits), ceil_dyadic(&hi, bits))
                .expect("lo <= hi");
        }
    }
}

/// Enclosure of `ln 2` of width at most `max_width`.
pub fn ln2_enclosure(max_width: &Rational) -> RationalInterval {
    ln_reduced(&rat(2, 1), max_width)
}

/// Enclosure of the natural logarithm of `x > 0`, width at most `max_width`.
///
/// `x` is reduced to `y = x / 2^k` in `[1, 2)`, then
/// `ln x = k ln 2 + ln y`.
pub fn ln_enclosure(x: &Rational, max_width: &Rational) -> Result<RationalInterval> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("ln of non-positive {x}")));
    }
    if !max_width.is_positive() {
        return Err(Error::Domain("max_width must be positive".into()));
    }
    if x.is_one() {
        return Ok(RationalInterval::point(Rational::zero()));
    }
    if *x < Rational::one() {
        return Ok(-ln_enclosure(&x.recip(), max_width)?);
    }
    let k = floor_log2(x);
    let y = x / pow2(k);
    let half = max_width / rat(2, 1);

    let ln_y = {
        let p = bits_for_width(&half) + GUARD_BITS;
        let compact = y.numer().bits() <= p + 64 && y.denom().bits() <= p + 64;
        if compact {
            ln_reduced(&y, &half)
        } else {
            // ln is 1-Lipschitz on [1, 2], so bracketing y by 2^-p neighbours
            // costs at most 2^-p of extra width
            let y_lo = floor_dyadic(&y, p);
            let y_hi = ceil_dyadic(&y, p).min(rat(2, 1));
            let inner = &half / rat(4, 1);
            let lo = ln_reduced(&y_lo, &inner);
            let hi = ln_reduced(&y_hi, &inner);
            RationalInterval::new(lo.lo().clone(), hi.hi().clone()).expect("ln is monotone")
        }
    };
    if k == 0 {
        return Ok(ln_y);
    }
    let ln2 = ln2_enclosure(&(&half / rat(k, 1)));
    let scaled = ln2.scale(&rat(k, 1));
    Ok(&scaled + &ln_y)
}

/// Enclosure of `gamma = ln|q2| / ln|q1|`, exactly `[0, 0]` when `|q2| = 1`.
pub fn gamma_enclosure(inst: &ProblemInstance, max_width: &Rational) -> Result<RationalInterval> {
    let q1 = Rational::from_integer(inst.q1().abs());
    let q2 = Rational::from_integer(inst.q2().abs());
    if q1 <= Rational::one() {
        return Err(Error::Domain("gamma needs |q1| > 1".into()));
    }
    if !max_width.is_positive() {
        return Err(Error::Domain("max_width must be positive".into()));
    }
    if q2.is_one() {
        return Ok(RationalInterval::point(Rational::zero()));
    }
    let mut inner = max_width / rat(8, 1);
    loop {
        let num = ln_enclosure(&q2, &inner)?;
        let den = ln_enclosure(&q1, &inner)?;
        // den.lo >= ln(2) - inner > 0 once inner < 1/2
        if !den.contains_zero() {
            let quotient = num.checked_div(&den)?;
            if quotient.width() <= *max_width {
                return Ok(quotient);
            }
        }
        inner /= rat(16, 1);
    }
}

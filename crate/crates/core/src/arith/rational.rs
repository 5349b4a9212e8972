use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact signed fraction, always held in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses the canonical text form `[-]num/den` or `[-]num`.
///
/// Input need not be reduced (`6/4` is accepted and becomes `3/2`), but the
/// grammar is strict: no `+` sign, no whitespace, no sign on the denominator.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let fail = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (negative, body) = match input.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, input),
    };
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num_text) {
        return Err(fail("numerator must be a non-empty run of decimal digits"));
    }
    let mut num: BigInt = num_text.parse().map_err(|_| fail("bad numerator"))?;
    if negative {
        num = -num;
    }
    let den: BigInt = match den_text {
        Some(d) if digits(d) => d.parse().map_err(|_| fail("bad denominator"))?,
        Some(_) => {
            return Err(fail(
                "denominator must be a non-empty run of decimal digits",
            ))
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(fail("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form; inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
pub(crate) fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub(crate) fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `r^e` for any integer exponent; `r` must be non-zero when `e < 0`.
pub fn rpow(r: &Rational, e: i64) -> Rational {
    let mag = e.unsigned_abs();
    let num: BigInt = Pow::pow(r.numer(), mag);
    let den: BigInt = Pow::pow(r.denom(), mag);
    if e >= 0 {
        Rational::new(num, den)
    } else {
        Rational::new(den, num)
    }
}

pub fn ipow(base: &Integer, e: u64) -> Integer {
    Pow::pow(base, e)
}

/// Exact `2^e`.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// `floor(log2 |r|)` for non-zero `r`.
pub fn floor_log2(r: &Rational) -> i64 {
    assert!(!r.is_zero(), "floor_log2 of zero");
    let a = r.abs();
    let k = a.numer().bits() as i64 - a.denom().bits() as i64;
    if a >= pow2(k) {
        k
    } else {
        k - 1
    }
}

/// Smallest `p >= 0` with `2^-p <= width`.
pub fn bits_for_width(width: &Rational) -> u64 {
    assert!(width.is_positive(), "width must be positive");
    let k = floor_log2(width);
    if k >= 0 {
        0
    } else {
        // 2^k <= width, so p = -k works; nothing smaller does unless width = 2^k
        (-k) as u64
    }
}

pub(crate) fn floor_dyadic(r: &Rational, bits: u64) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = r.numer() * &scale;
    Rational::new(scaled.div_floor(r.denom()), scale)
}

pub(crate) fn ceil_dyadic(r: &Rational, bits: u64) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = r.numer() * &scale;
    Rational::new(scaled.div_ceil(r.denom()), scale)
}

/// Decimal scientific rendering with `digits` significant digits,
/// truncated toward zero, e.g. `2.6416325606551538662e0`.
pub fn to_sci_string(r: &Rational, digits: usize) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let a = r.abs();
    let ten = Rational::from_integer(BigInt::from(10));
    let mut e = (floor_log2(&a) as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while rpow(&ten, e) > a {
        e -= 1;
    }
    while rpow(&ten, e + 1) <= a {
        e += 1;
    }
    let scaled = &a * rpow(&ten, digits as i64 - 1 - e);
    let mantissa = scaled.floor().to_integer().to_string();
    let (head, tail) = mantissa.split_at(1);
    let sign = if r.numer().sign() == Sign::Minus {
        "-"
    } else {
        ""
    };
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

/// Lossy conversion for diagnostics only.
pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    // scale to avoid overflow of numerator/denominator individually
    let k = floor_log2(r);
    let m = r / pow2(k);
    let num = m.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = m.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let mant = if num.is_finite() && den.is_finite() {
        num / den
    } else {
        let approx = to_sci_string(&m, 17);
        approx.parse::<f64>().unwrap_or(f64::NAN)
    };
    mant * 2f64.powi(k.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("-10/5").unwrap()), "-2");
        assert_eq!(format_rational(&parse_rational("0/7").unwrap()), "0");
        assert_eq!(parse_rational("-3/7").unwrap(), rat(-3, 7));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in [
            "", "-", "1/", "/2", "1/0", "+1", "1/-2", " 1", "1.5", "a/b", "1/2/3",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn floor_log2_brackets() {
        assert_eq!(floor_log2(&rat(1, 1)), 0);
        assert_eq!(floor_log2(&rat(3, 1)), 1);
        assert_eq!(floor_log2(&rat(4, 1)), 2);
        assert_eq!(floor_log2(&rat(1, 3)), -2);
        assert_eq!(floor_log2(&rat(1, 4)), -2);
        assert_eq!(floor_log2(&rat(-5, 1)), 2);
        assert_eq!(bits_for_width(&rat(1, 1000)), 10);
        assert_eq!(bits_for_width(&rat(1, 1024)), 10);
        assert_eq!(bits_for_width(&rat(7, 2)), 0);
    }

    #[test]
    fn sci_rendering() {
        assert_eq!(to_sci_string(&rat(1, 3), 5), "3.3333e-1");
        assert_eq!(to_sci_string(&rat(-2500, 1), 3), "-2.50e3");
        assert_eq!(to_sci_string(&rat(1, 1), 1), "1e0");
        assert_eq!(to_sci_string(&rat(0, 1), 4), "0");
        assert!((to_f64(&rat(-7, 4)) + 1.75).abs() < 1e-15);
    }

    #[test]
    fn dyadic_rounding_is_outward() {
        let x = rat(1, 3);
        let lo = floor_dyadic(&x, 8);
        let hi = ceil_dyadic(&x, 8);
        assert!(lo < x && x < hi);
        assert_eq!(&hi - &lo, pow2(-8));
        assert_eq!(floor_dyadic(&rat(3, 4), 2), rat(3, 4));
    }
}

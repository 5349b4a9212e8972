use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::interval::RationalInterval;
use super::rational::{bits_for_width, Integer, Rational};
use crate::error::{Error, Result};

/// `floor(sqrt(x))` for `x >= 0`.
pub fn isqrt(x: &Integer) -> Result<Integer> {
    if x.is_negative() {
        return Err(Error::Domain(format!("isqrt of negative {x}")));
    }
    Ok(x.sqrt())
}

/// `floor(n * (sqrt 5 - 1) / 2)`, the shift `m` paired with `n`.
///
/// Evaluated as `(isqrt(5 n^2) - n) div 2`. The two floors compose: with
/// `s = isqrt(5n^2)` we have `s <= n sqrt 5 < s + 1`, and `n sqrt 5` is never
/// an integer, so `floor((n sqrt 5 - n)/2) = floor((s - n)/2)`.
pub fn m_of_n(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("m_of_n requires n >= 1".into()));
    }
    let n_big = BigInt::from(n);
    let s = isqrt(&(&n_big * &n_big * 5))?;
    let m: BigInt = (s - n_big) / 2;
    Ok(u64::try_from(m).expect("m < n fits in u64"))
}

/// Enclosure `[lo, hi]` of `sqrt(x)` with `lo^2 <= x <= hi^2` and
/// `hi - lo <= max_width`.
pub fn sqrt_enclosure(x: &Rational, max_width: &Rational) -> Result<RationalInterval> {
    if x.is_negative() {
        return Err(Error::Domain(format!("sqrt of negative {x}")));
    }
    if !max_width.is_positive() {
        return Err(Error::Domain("max_width must be positive".into()));
    }
    if x.is_zero() {
        return Ok(RationalInterval::point(Rational::zero()));
    }
    let p = bits_for_width(max_width);
    let scale = BigInt::one() << p;
    // floor(x * 4^p); r = isqrt of that, so r/2^p <= sqrt(x) < (r+1)/2^p
    let scaled = (x * Rational::from_integer(&scale * &scale))
        .floor()
        .to_integer();
    let r = scaled.sqrt();
    let lo = Rational::new(r.clone(), scale.clone());
    let exact = &lo * &lo == *x;
    let hi = if exact {
        lo.clone()
    } else {
        Rational::new(r + 1, scale)
    };
    RationalInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(125)).unwrap(), int(11));
        assert_eq!(isqrt(&int(50000)).unwrap(), int(223));
        assert!(matches!(isqrt(&int(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn m_of_n_examples() {
        assert_eq!(m_of_n(1).unwrap(), 0);
        assert_eq!(m_of_n(5).unwrap(), 3);
        assert_eq!(m_of_n(100).unwrap(), 61);
        assert!(m_of_n(0).is_err());
    }

    /// Rational Newton iteration for sqrt(x) from above; each iterate `y`
    /// satisfies `y >= sqrt(x)` and `x / y <= sqrt(x)`.
    fn newton_bracket(x: &Rational, steps: usize) -> (Rational, Rational) {
        let mut y = x + Rational::one();
        for _ in 0..steps {
            y = (&y + x / &y) / Rational::from_integer(2.into());
        }
        (x / &y, y)
    }

    #[test]
    fn sqrt_enclosure_examples() {
        let four = sqrt_enclosure(&rat(4, 1), &rat(1, 100)).unwrap();
        assert!(four.contains(&rat(2, 1)));
        assert!(four.width() <= rat(1, 100));

        let w = rat(1, 1_000_000);
        let five = sqrt_enclosure(&rat(5, 1), &w).unwrap();
        assert!(five.width() <= w);
        let (lo, hi) = newton_bracket(&rat(5, 1), 6);
        assert!(&hi - &lo < rat(1, 1_000_000_000_000));
        assert!(five.lo() <= &lo && &hi <= five.hi());
        assert!(five.lo() * five.lo() <= rat(5, 1));
        assert!(five.hi() * five.hi() >= rat(5, 1));
        assert!(five.contains(&rat(22360679, 10_000_000)));

        assert_eq!(
            sqrt_enclosure(&rat(0, 1), &rat(1, 3)).unwrap(),
            RationalInterval::point(rat(0, 1))
        );
        assert!(sqrt_enclosure(&rat(-1, 1), &w).is_err());
        assert!(sqrt_enclosure(&rat(2, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn m_of_n_agrees_with_sqrt5_enclosure() {
        let s5 = sqrt_enclosure(&rat(5, 1), &rat(1, 1 << 40)).unwrap();
        for n in 1..=10_000u64 {
            let nr = rat(n as i64, 1);
            let two = rat(2, 1);
            let lo = ((s5.lo() * &nr) - &nr) / &two;
            let hi = ((s5.hi() * &nr) - &nr) / &two;
            let (fl, fh) = (lo.floor(), hi.floor());
            assert_eq!(fl, fh, "enclosure too wide to decide floor at n={n}");
            assert_eq!(fl, rat(m_of_n(n).unwrap() as i64, 1), "n={n}");
        }
    }
}

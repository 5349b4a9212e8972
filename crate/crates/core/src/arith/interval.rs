use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::rational::{ceil_dyadic, floor_dyadic, Rational};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
///
/// Every operation is outward-conservative: if `x` lies in `X` and `y` in
/// `Y`, the real `x op y` lies in `X op Y`. With exact endpoints the ring
/// operations are in fact optimal (no rounding slack at all); the only
/// deliberate widening is [`RationalInterval::round_outward`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    /// Builds `[min(a,b), max(a,b)]`.
    pub fn spanning(a: Rational, b: Rational) -> Self {
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    /// `[center - radius, center + radius]`, `radius >= 0`.
    pub fn ball(center: &Rational, radius: &Rational) -> Self {
        let r = radius.abs();
        Self {
            lo: center - &r,
            hi: center + &r,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    /// Every point of `self` is strictly less than every point of `other`.
    pub fn strictly_below(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Largest absolute value over the interval.
    pub fn mag(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value over the interval (zero if it straddles 0).
    pub fn mig(&self) -> Rational {
        if self.contains_zero() {
            Rational::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    /// Enclosure of `{|x| : x in self}`.
    pub fn abs(&self) -> Self {
        Self {
            lo: self.mig(),
            hi: self.mag(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::spanning(&self.lo * k, &self.hi * k)
    }

    pub fn shift(&self, k: &Rational) -> Self {
        Self {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::Domain(format!(
                "reciprocal of {self}, which contains 0"
            )));
        }
        Ok(Self {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn checked_div(&self, divisor: &Self) -> Result<Self> {
        Ok(self * &divisor.recip()?)
    }

    /// Widens the endpoints to multiples of `2^-bits`, keeping endpoint sizes
    /// bounded during long computations.
    pub fn round_outward(&self, bits: u64) -> Self {
        Self {
            lo: floor_dyadic(&self.lo, bits),
            hi: ceil_dyadic(&self.hi, bits),
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        RationalInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Add for &RationalInterval {
    type Output = RationalInterval;
    fn add(self, rhs: Self) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;
    fn sub(self, rhs: Self) -> RationalInterval {
        RationalInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;
    fn mul(self, rhs: Self) -> RationalInterval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().expect("non-empty").clone();
        let hi = products.iter().max().expect("non-empty").clone();
        RationalInterval { lo, hi }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RationalInterval {
            type Output = RationalInterval;
            fn $m(self, rhs: Self) -> RationalInterval {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn iv(a: (i64, i64), b: (i64, i64)) -> RationalInterval {
        RationalInterval::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn rejects_inverted_endpoints() {
        assert!(RationalInterval::new(rat(1, 1), rat(0, 1)).is_err());
    }

    #[test]
    fn ring_operations() {
        let x = iv((-1, 1), (2, 1));
        let y = iv((3, 1), (4, 1));
        assert_eq!(&x + &y, iv((2, 1), (6, 1)));
        assert_eq!(&x - &y, iv((-5, 1), (-1, 1)));
        assert_eq!(&x * &y, iv((-4, 1), (8, 1)));
        assert_eq!(-&x, iv((-2, 1), (1, 1)));
        assert_eq!(y.checked_div(&y).unwrap(), iv((3, 4), (4, 3)));
        assert!(y.checked_div(&x).is_err());
    }

    #[test]
    fn magnitudes() {
        let x = iv((-3, 1), (2, 1));
        assert_eq!(x.mag(), rat(3, 1));
        assert_eq!(x.mig(), rat(0, 1));
        let y = iv((-5, 1), (-2, 1));
        assert_eq!(y.abs(), iv((2, 1), (5, 1)));
        assert!(y.is_strictly_negative());
        assert!(!y.strictly_below(&x));
        assert!(iv((0, 1), (1, 3)).strictly_below(&iv((1, 2), (1, 1))));
    }

    #[test]
    fn set_operations() {
        let a = iv((0, 1), (2, 1));
        let b = iv((1, 1), (3, 1));
        assert_eq!(a.intersect(&b), Some(iv((1, 1), (2, 1))));
        assert_eq!(a.hull(&b), iv((0, 1), (3, 1)));
        assert!(a.overlaps(&b));
        assert!(iv((1, 2), (1, 1)).is_subset_of(&a));
        assert_eq!(a.intersect(&iv((5, 1), (6, 1))), None);
    }

    #[test]
    fn outward_rounding_contains_original() {
        let x = iv((1, 3), (2, 3));
        let r = x.round_outward(10);
        assert!(x.is_subset_of(&r));
        assert!(r.width() <= x.width() + rat(2, 1024));
    }
}

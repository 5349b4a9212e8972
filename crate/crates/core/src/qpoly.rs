//! Dense integer polynomials in `q`.
//!
//! The central objects are the coefficients `C_k(q)` of
//!
//! ```text
//! R_n(T; q) = (1 - qT)(1 - q^2 T) ... (1 - q^n T) = sum_k C_k(q) T^k,
//! ```
//!
//! available two ways: by expanding the product ([`expand_r`]) and by the
//! closed form `C_k(q) = (-1)^k [n k]_q q^(k(k+1)/2)` ([`explicit_c`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{ipow, Integer, Rational};
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `q^i`; no trailing zeros, so the zero
/// polynomial has an empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<Integer>,
}

impl QPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^degree`
    pub fn monomial(c: Integer, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Exact division with remainder over `Z[q]`.
    ///
    /// Requires the leading coefficient of `divisor` to divide every leading
    /// coefficient met during the long division, which holds for the monic
    /// divisors used here; otherwise a domain error is returned.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor
            .leading_coeff()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?
            .clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::Domain(
                    "inexact leading-coefficient division in Z[q]".into(),
                ));
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact; a non-zero remainder is an
    /// invariant violation.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InvariantViolation {
                n: 0,
                detail: format!("({self}) / ({divisor}) leaves remainder {r}"),
            });
        }
        Ok(q)
    }

    /// Exact value at the rational point `x`.
    ///
    /// Horner's scheme on the homogenized polynomial
    /// `sum c_i a^i b^(d-i)` for `x = a/b`, so only one reduction happens.
    pub fn eval_at(&self, x: &Rational) -> Rational {
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut b_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &b_pow;
            b_pow *= b;
        }
        // b_pow overshoots by one factor of b after the loop
        Rational::new(acc, ipow(b, d as u64))
    }
}

impl fmt::Display for QPolynomial {
    /// `1 - q - q^2 + q^3`; zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{var}")?,
                (_, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: Self) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: Self) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: Self) -> QPolynomial {
        poly_mul(self, rhs)
    }
}

/// Schoolbook product.
pub fn poly_mul(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    if a.is_zero() || b.is_zero() {
        return QPolynomial::zero();
    }
    let mut coeffs = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    QPolynomial::from_coeffs(coeffs)
}

/// `[C_0(q), ..., C_n(q)]`, the `T`-coefficients of `prod_{j=1..n} (1 - q^j T)`.
///
/// Built one factor at a time: multiplying by `(1 - q^j T)` maps
/// `C_k -> C_k - q^j C_{k-1}`.
pub fn expand_r(n: u64) -> Result<Vec<QPolynomial>> {
    if n == 0 {
        return Err(Error::Domain("expand_r requires n >= 1".into()));
    }
    let n = n as usize;
    let mut c = vec![QPolynomial::one()];
    for j in 1..=n {
        c.push(QPolynomial::zero());
        for k in (1..=j).rev() {
            let carried = c[k - 1].shift(j);
            c[k] = &c[k] - &carried;
        }
    }
    Ok(c)
}

/// `[j]_q = (q^j - 1)/(q - 1)`, checked as an exact division.
fn q_integer(j: usize) -> Result<QPolynomial> {
    let numerator = &QPolynomial::monomial(BigInt::one(), j) - &QPolynomial::one();
    numerator.div_exact(&QPolynomial::from_i64s(&[-1, 1]))
}

/// `[k]_q! = prod_{j=1..k} (q^j - 1)/(q - 1)`; `[0]_q! = 1`.
pub fn qfactorial(k: u64) -> QPolynomial {
    (1..=k as usize).fold(QPolynomial::one(), |acc, j| {
        let factor = q_integer(j).expect("q - 1 divides q^j - 1");
        &acc * &factor
    })
}

fn check_range(n: u64, k: u64) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!(
            "need 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Gaussian binomial `[n k]_q` via `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn qbinom(n: u64, k: u64) -> Result<QPolynomial> {
    check_range(n, k)?;
    let k = k as usize;
    // row[j] = [i j]_q for the current i, j <= k
    let mut row = vec![QPolynomial::zero(); k + 1];
    row[0] = QPolynomial::one();
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            let lifted = row[j].shift(j);
            row[j] = &row[j - 1] + &lifted;
        }
    }
    Ok(row.swap_remove(k))
}

/// `[n k]_q` as `[n]_q! / ([k]_q! [n-k]_q!)`, with the division asserted exact.
pub fn qbinom_by_factorials(n: u64, k: u64) -> Result<QPolynomial> {
    check_range(n, k)?;
    let denominator = &qfactorial(k) * &qfactorial(n - k);
    qfactorial(n).div_exact(&denominator)
}

/// Closed form `C_k(q) = (-1)^k [n k]_q q^(k(k+1)/2)`.
pub fn explicit_c(n: u64, k: u64) -> Result<QPolynomial> {
    let binom = qbinom(n, k)?;
    let shifted = binom.shift((k * (k + 1) / 2) as usize);
    Ok(if k % 2 == 1 { -&shifted } else { shifted })
}

/// Numeric values `C_0(q), ..., C_n(q)` at a rational `q`, by running the
/// same factor-at-a-time recurrence as [`expand_r`] on rationals.
pub fn coefficient_values(n: u64, q: &Rational) -> Result<Vec<Rational>> {
    if n == 0 {
        return Err(Error::Domain("coefficient_values requires n >= 1".into()));
    }
    let n = n as usize;
    let mut c = vec![Rational::one()];
    let mut q_pow = Rational::one();
    for j in 1..=n {
        q_pow *= q;
        c.push(Rational::zero());
        for k in (1..=j).rev() {
            let carried = &c[k - 1] * &q_pow;
            c[k] -= carried;
        }
    }
    Ok(c)
}

/// `[C_0(a/b) b^N, ..., C_n(a/b) b^N]` with `N = n(n+1)/2`, all integers.
///
/// Same recurrence as [`coefficient_values`], kept homogeneous: after factor
/// `j` every entry carries `b^(j(j+1)/2)`, so
/// `C_k <- b^j C_k - a^j C_{k-1}`.
pub fn scaled_coefficient_values(n: u64, a: &Integer, b: &Integer) -> Result<Vec<Integer>> {
    if n == 0 {
        return Err(Error::Domain(
            "scaled_coefficient_values requires n >= 1".into(),
        ));
    }
    if b.is_zero() {
        return Err(Error::Domain("denominator must be nonzero".into()));
    }
    let n = n as usize;
    let mut c = vec![Integer::one()];
    let mut a_pow = Integer::one();
    let mut b_pow = Integer::one();
    for j in 1..=n {
        a_pow *= a;
        b_pow *= b;
        c.push(Integer::zero());
        for k in (1..=j).rev() {
            let carried = &c[k - 1] * &a_pow;
            c[k] = &c[k] * &b_pow - carried;
        }
        c[0] *= &b_pow;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]), QPolynomial::zero());
        assert_eq!(QPolynomial::zero().degree(), None);
    }

    #[test]
    fn poly_mul_examples() {
        assert_eq!(poly_mul(&p(&[1]), &p(&[1, -1])), p(&[1, -1]));
        assert_eq!(poly_mul(&p(&[1, -1]), &p(&[1, 0, -1])), p(&[1, -1, -1, 1]));
        assert_eq!(
            poly_mul(&p(&[3, 4, 5]), &QPolynomial::zero()),
            QPolynomial::zero()
        );
        assert_eq!(poly_mul(&p(&[1, 2]), &p(&[0, 0, 3])).degree(), Some(3));
    }

    #[test]
    fn expand_r_examples() {
        assert_eq!(expand_r(1).unwrap(), vec![p(&[1]), p(&[0, -1])]);
        assert_eq!(
            expand_r(2).unwrap(),
            vec![p(&[1]), p(&[0, -1, -1]), p(&[0, 0, 0, 1])]
        );
        // (-qT)(-q^2 T)(-q^3 T) = -q^6 T^3
        assert_eq!(
            expand_r(3).unwrap()[3],
            QPolynomial::monomial((-1).into(), 6)
        );
        assert!(expand_r(0).is_err());
    }

    #[test]
    fn qfactorial_examples() {
        assert_eq!(qfactorial(0), p(&[1]));
        assert_eq!(qfactorial(1), p(&[1]));
        assert_eq!(qfactorial(2), p(&[1, 1]));
        assert_eq!(qfactorial(3), poly_mul(&p(&[1, 1]), &p(&[1, 1, 1])));
        for k in 0..8u64 {
            assert_eq!(
                qfactorial(k).degree(),
                Some((k * k.saturating_sub(1) / 2) as usize)
            );
        }
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(5, 0).unwrap(), p(&[1]));
        assert_eq!(qbinom(2, 1).unwrap(), p(&[1, 1]));
        assert_eq!(qbinom(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(4, 2).unwrap(), qbinom_by_factorials(4, 2).unwrap());
        assert!(qbinom(3, 4).is_err());
        assert!(qbinom_by_factorials(3, 4).is_err());
    }

    #[test]
    fn explicit_c_examples() {
        assert_eq!(explicit_c(1, 1).unwrap(), p(&[0, -1]));
        assert_eq!(explicit_c(2, 2).unwrap(), p(&[0, 0, 0, 1]));
        for n in 0..6 {
            assert_eq!(explicit_c(n, 0).unwrap(), p(&[1]));
        }
        assert!(explicit_c(2, 3).is_err());
    }

    #[test]
    fn eval_at_examples() {
        assert_eq!(p(&[1, -1]).eval_at(&rat(1, 1)), rat(0, 1));
        let c = expand_r(2).unwrap();
        assert_eq!(c[1].eval_at(&rat(3, 2)), rat(-15, 4));
        assert_eq!(QPolynomial::zero().eval_at(&rat(5, 7)), rat(0, 1));
        assert_eq!(p(&[7]).eval_at(&rat(5, 7)), rat(7, 1));
        assert_eq!(p(&[1, 0, 2]).eval_at(&rat(-1, 3)), rat(11, 9));
    }

    #[test]
    fn coefficient_values_match_polynomials() {
        for q in [rat(2, 1), rat(-3, 1), rat(7, 2), rat(5, 3)] {
            for n in [1u64, 4, 9] {
                let polys = expand_r(n).unwrap();
                let vals = coefficient_values(n, &q).unwrap();
                for (poly, v) in polys.iter().zip(&vals) {
                    assert_eq!(&poly.eval_at(&q), v);
                }
            }
        }
    }

    #[test]
    fn scaled_values_match_rational_values() {
        for (a, b) in [(2, 1), (-3, 1), (7, 2), (5, -3)] {
            let q = rat(a, b);
            for n in [1u64, 4, 9] {
                let scale = Rational::from_integer(ipow(&BigInt::from(b), n * (n + 1) / 2));
                let scaled = scaled_coefficient_values(n, &a.into(), &b.into()).unwrap();
                let vals = coefficient_values(n, &q).unwrap();
                for (s, v) in scaled.iter().zip(&vals) {
                    assert_eq!(Rational::from_integer(s.clone()), v * &scale);
                }
            }
        }
    }

    #[test]
    fn division() {
        let a = poly_mul(&p(&[1, 1, 1]), &p(&[2, 0, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1, 1])).unwrap(), p(&[2, 0, 1]));
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert_eq!(r, p(&[2]));
        assert!(p(&[1, 0, 1]).div_exact(&p(&[-1, 1])).is_err());
        assert!(p(&[1]).div_rem(&QPolynomial::zero()).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, -1, -1, 1]).to_string(), "1 - q - q^2 + q^3");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(p(&[0, 0, 2]).to_string(), "2*q^2");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}

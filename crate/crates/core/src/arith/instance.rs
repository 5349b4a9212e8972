use std::fmt;

use num_traits::{Signed, Zero};

use super::rational::{Integer, Rational};
use crate::error::{Error, Result};

/// The parameters `q = q1/q2` and `z = z1/z2`.
///
/// The integer representation is kept exactly as given: `gamma` and the
/// normalizing monomial both depend on it, not only on the rational values.
/// [`ProblemInstance::from_rationals`] picks the reduced representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    q1: Integer,
    q2: Integer,
    z1: Integer,
    z2: Integer,
}

impl ProblemInstance {
    pub fn new(q1: Integer, q2: Integer, z1: Integer, z2: Integer) -> Result<Self> {
        if q1.is_zero() || q2.is_zero() || z1.is_zero() || z2.is_zero() {
            return Err(Error::Domain("q1, q2, z1, z2 must all be non-zero".into()));
        }
        if q1.abs() <= q2.abs() {
            return Err(Error::Domain(format!("|q| = |{q1}/{q2}| must exceed 1")));
        }
        Ok(Self { q1, q2, z1, z2 })
    }

    /// Instance from reduced rationals (`q2, z2 > 0`).
    pub fn from_rationals(q: &Rational, z: &Rational) -> Result<Self> {
        Self::new(
            q.numer().clone(),
            q.denom().clone(),
            z.numer().clone(),
            z.denom().clone(),
        )
    }

    pub fn q1(&self) -> &Integer {
        &self.q1
    }

    pub fn q2(&self) -> &Integer {
        &self.q2
    }

    pub fn z1(&self) -> &Integer {
        &self.z1
    }

    pub fn z2(&self) -> &Integer {
        &self.z2
    }

    pub fn q(&self) -> Rational {
        Rational::new(self.q1.clone(), self.q2.clone())
    }

    pub fn z(&self) -> Rational {
        Rational::new(self.z1.clone(), self.z2.clone())
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q = {}/{}, z = {}/{}",
            self.q1, self.q2, self.z1, self.z2
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn validation() {
        assert!(ProblemInstance::new(int(2), int(1), int(1), int(1)).is_ok());
        assert!(ProblemInstance::new(int(-3), int(2), int(-1), int(7)).is_ok());
        assert!(ProblemInstance::new(int(2), int(2), int(1), int(1)).is_err());
        assert!(ProblemInstance::new(int(1), int(2), int(1), int(1)).is_err());
        assert!(ProblemInstance::new(int(2), int(1), int(0), int(1)).is_err());
        assert!(ProblemInstance::new(int(2), int(0), int(1), int(1)).is_err());
        assert!(ProblemInstance::from_rationals(&rat(1, 2), &rat(1, 1)).is_err());
    }

    #[test]
    fn from_rationals_reduces() {
        let inst = ProblemInstance::from_rationals(&rat(14, 4), &rat(-3, 7)).unwrap();
        assert_eq!(inst.q1(), &int(7));
        assert_eq!(inst.q2(), &int(2));
        assert_eq!(inst.z(), rat(-3, 7));
    }
}

//! The integer pairs `(A_n, B_n)` and the small linear forms
//! `I~_n = B_n T_q(z) - A_n`.
//!
//! With `m = floor(n (sqrt 5 - 1)/2)` and `C_k` the `T`-coefficients of
//! `R_n(T; q)`, the remainder series `I_n` telescopes into
//!
//! ```text
//! I_n = T_q(z) * sum_k z^-k C_k q^(k(k-1)/2 + km)
//!       - sum_k C_k sum_{l=0}^{k+m} z^(l-k) q^(k(k-1)/2 + km - l(l-1)/2).
//! ```
//!
//! Multiplying through by the normalizer
//! `z1^n z2^m q1^(m(m-1)/2) q2^(n(n+1)/2 + n(n-1)/2 + nm)` turns both sums into
//! integers. [`compute_pair`] works over the common denominator of all terms
//! in integer arithmetic; `B_n` comes out integral by construction and `A_n`
//! needs one exact division, which is checked. [`linear_form_sums`] evaluates
//! the same sums in rational arithmetic as an independent route.
//!
//! By hand for `q = 2`, `z = 1`, `n = 1`: `m = 0`, `R_1(T) = 1 - qT`, so
//! `C_0 = 1`, `C_1 = -2`, and the normalizer is 1. With `P_0 = 1`,
//! `P_1 = 1 + z = 2`:
//!
//! ```text
//! B_1 = C_0 + z^-1 C_1           = 1 - 2     = -1
//! A_1 = C_0 P_0 + z^-1 C_1 P_1   = 1 - 2 * 2 = -3
//! I~_1 = 3 - T_2(1)              = 0.35836743934...
//! ```
//!
//! ```
//! use tschakaloff::approximants::{compute_pair, compute_record};
//! use tschakaloff::series::SeriesTermBudget;
//! use tschakaloff::{ProblemInstance, Rational};
//!
//! let one = Rational::from_integer(1.into());
//! let inst = ProblemInstance::from_rationals(&(&one + &one), &one).unwrap();
//! assert_eq!(compute_pair(&inst, 1).unwrap(), ((-3).into(), (-1).into()));
//! let rec = compute_record(&inst, 1, &SeriesTermBudget::default()).unwrap();
//! assert!(rec.nonzero_certified());
//! ```

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{
    bits_for_width, floor_log2, format_rational, ipow, m_of_n, parse_rational, pow2, rpow, Integer,
    ProblemInstance, Rational, RationalInterval,
};
use crate::error::{Error, Result};
use crate::qpoly::{coefficient_values, scaled_coefficient_values};
use crate::series::{i_n_direct_enclosure, tschakaloff_enclosure, SeriesTermBudget};

/// Extra working bits beyond the predicted size of `I~_n`.
const RELATIVE_GUARD_BITS: i64 = 64;
const MAX_REFINEMENTS: usize = 6;

/// Everything known about the `n`-th approximation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximantRecord {
    n: u64,
    m: u64,
    a: Integer,
    b: Integer,
    i_tilde: RationalInterval,
    nonzero_certified: bool,
}

impl ApproximantRecord {
    /// Assembles a record from its parts; `m` and the certification flag are
    /// derived, so the record invariants hold by construction.
    pub fn from_parts(n: u64, a: Integer, b: Integer, i_tilde: RationalInterval) -> Result<Self> {
        let m = m_of_n(n)?;
        let nonzero_certified = !i_tilde.contains_zero();
        Ok(Self {
            n,
            m,
            a,
            b,
            i_tilde,
            nonzero_certified,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    /// Enclosure of `B_n T_q(z) - A_n`.
    pub fn i_tilde(&self) -> &RationalInterval {
        &self.i_tilde
    }

    pub fn nonzero_certified(&self) -> bool {
        self.nonzero_certified
    }

    pub fn to_row(&self) -> RecordRow {
        RecordRow {
            n: self.n,
            m: self.m,
            a: self.a.to_string(),
            b: self.b.to_string(),
            i_lo: format_rational(self.i_tilde.lo()),
            i_hi: format_rational(self.i_tilde.hi()),
            nonzero: self.nonzero_certified,
        }
    }

    pub fn from_row(row: &RecordRow) -> Result<Self> {
        let int = |s: &str| {
            parse_rational(s).and_then(|r| {
                if r.is_integer() {
                    Ok(r.to_integer())
                } else {
                    Err(Error::Domain(format!("{s} is not an integer")))
                }
            })
        };
        let rec = Self::from_parts(
            row.n,
            int(&row.a)?,
            int(&row.b)?,
            RationalInterval::new(parse_rational(&row.i_lo)?, parse_rational(&row.i_hi)?)?,
        )?;
        if rec.m != row.m || rec.nonzero_certified != row.nonzero {
            return Err(Error::Domain(format!(
                "inconsistent record row for n = {}",
                row.n
            )));
        }
        Ok(rec)
    }
}

/// Wire form of a record. Big integers and interval endpoints travel as
/// decimal / `num/den` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRow {
    pub n: u64,
    pub m: u64,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "I_lo")]
    pub i_lo: String,
    #[serde(rename = "I_hi")]
    pub i_hi: String,
    pub nonzero: bool,
}

fn require_n(n: u64) -> Result<u64> {
    m_of_n(n)
}

/// `z1^n z2^m q1^(m(m-1)/2) q2^(n(n+1)/2 + n(n-1)/2 + nm)`.
pub fn normalizer(inst: &ProblemInstance, n: u64) -> Result<Integer> {
    let m = require_n(n)?;
    let q2_exp = n * (n + 1) / 2 + n * (n - 1) / 2 + n * m;
    Ok(ipow(inst.z1(), n)
        * ipow(inst.z2(), m)
        * ipow(inst.q1(), m * m.saturating_sub(1) / 2)
        * ipow(inst.q2(), q2_exp))
}

/// The two sums of the telescoped identity, before normalization:
/// `(coefficient of T_q(z), subtracted double sum)`.
pub fn linear_form_sums(inst: &ProblemInstance, n: u64) -> Result<(Rational, Rational)> {
    let m = require_n(n)?;
    let q = inst.q();
    let z = inst.z();
    let q_inv = q.recip();
    let z_inv = z.recip();
    let c = coefficient_values(n, &q)?;

    // partial sums P_j = sum_{l<=j} z^l q^(-l(l-1)/2), j = 0..=n+m
    let top = (n + m) as usize;
    let mut partial = Vec::with_capacity(top + 1);
    let mut u = Rational::one();
    let mut q_inv_pow = Rational::one();
    let mut acc = Rational::zero();
    for _ in 0..=top {
        acc += &u;
        partial.push(acc.clone());
        u = u * &z * &q_inv_pow;
        q_inv_pow *= &q_inv;
    }

    // w_k = z^-k q^(k(k-1)/2 + km); w_{k+1} = w_k z^-1 q^(k+m)
    let mut w = Rational::one();
    let mut q_pow = rpow(&q, m as i64);
    let mut coef_t = Rational::zero();
    let mut subtracted = Rational::zero();
    for (k, c_k) in c.iter().enumerate() {
        let weighted = c_k * &w;
        subtracted += &weighted * &partial[k + m as usize];
        coef_t += weighted;
        w = w * &z_inv * &q_pow;
        q_pow *= &q;
    }
    Ok((coef_t, subtracted))
}

fn require_integer(value: Rational, n: u64, what: &str) -> Result<Integer> {
    if !value.is_integer() {
        return Err(Error::InvariantViolation {
            n,
            detail: format!(
                "{what} has denominator {} after normalization",
                value.denom()
            ),
        });
    }
    Ok(value.to_integer())
}

/// `(A_n, B_n)` in integer arithmetic.
///
/// With `q = a/b`, `z = c/d`, `e_k = k(k-1)/2 + km`, `N = n(n+1)/2`,
/// `E = e_n`, `top = n + m`, `S = top(top-1)/2`, the scaled pieces
///
/// ```text
/// C_k b^N,   w_k c^n b^E = d^k c^(n-k) a^(e_k) b^(E-e_k),
/// P_j d^top a^S = sum_{l<=j} c^l d^(top-l) b^(l(l-1)/2) a^(S-l(l-1)/2)
/// ```
///
/// are integers. The normalizer is `c^n d^m a^(m(m-1)/2) b^(N+E)`, so
/// `B_n = d^m a^(m(m-1)/2) sum_k (C_k b^N)(w_k c^n b^E)` and `A_n` is the
/// analogous sum with `P_(k+m)` divided exactly by `d^n a^(S - m(m-1)/2)`.
pub fn compute_pair(inst: &ProblemInstance, n: u64) -> Result<(Integer, Integer)> {
    let m = require_n(n)?;
    let (a, b, c, d) = (inst.q1(), inst.q2(), inst.z1(), inst.z2());
    let top = n + m;
    let tri = |k: u64| k * k.saturating_sub(1) / 2;
    let s_exp = tri(top);
    let e = |k: u64| tri(k) + k * m;
    let e_n = e(n);
    let coeffs = scaled_coefficient_values(n, a, b)?;

    // prefix sums of the scaled P_j, j = 0..=top
    let mut partial = Vec::with_capacity(top as usize + 1);
    let mut acc = Integer::zero();
    for l in 0..=top {
        acc += ipow(c, l) * ipow(d, top - l) * ipow(b, tri(l)) * ipow(a, s_exp - tri(l));
        partial.push(acc.clone());
    }

    let mut sum_b = Integer::zero();
    let mut sum_a = Integer::zero();
    for (k, c_k) in (0u64..).zip(&coeffs) {
        let weighted = c_k * ipow(d, k) * ipow(c, n - k) * ipow(a, e(k)) * ipow(b, e_n - e(k));
        sum_a += &weighted * &partial[(k + m) as usize];
        sum_b += weighted;
    }

    let outer = ipow(d, m) * ipow(a, tri(m));
    let divisor = ipow(d, n) * ipow(a, s_exp - tri(m));
    let (a_n, rem) = sum_a.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(Error::InvariantViolation {
            n,
            detail: format!("A_n leaves remainder {rem} on division by {divisor}"),
        });
    }
    Ok((a_n, outer * sum_b))
}

/// `(A_n, B_n)` from [`linear_form_sums`] times the normalizer, with the unit
/// denominators verified.
pub fn compute_pair_rational(inst: &ProblemInstance, n: u64) -> Result<(Integer, Integer)> {
    let (coef_t, subtracted) = linear_form_sums(inst, n)?;
    let norm = Rational::from_integer(normalizer(inst, n)?);
    let a = require_integer(&norm * subtracted, n, "A_n")?;
    let b = require_integer(&norm * coef_t, n, "B_n")?;
    Ok((a, b))
}

pub fn compute_a(inst: &ProblemInstance, n: u64) -> Result<Integer> {
    compute_pair(inst, n).map(|(a, _)| a)
}

pub fn compute_b(inst: &ProblemInstance, n: u64) -> Result<Integer> {
    compute_pair(inst, n).map(|(_, b)| b)
}

/// Predicted dominant size of `I~_n`:
/// `normalizer * z^(n+m+1) q^(-(n+m)(n+m+1)/2) prod_{j=1..n} (1 - q^-j)`,
/// the contribution of the first non-vanishing term `t = n + 1`.
pub fn leading_term(inst: &ProblemInstance, n: u64) -> Result<Rational> {
    let m = require_n(n)?;
    let q = inst.q();
    let z = inst.z();
    let e = (n + m) as i64;
    let product: Rational = (1..=n as i64)
        .map(|j| Rational::one() - rpow(&q, -j))
        .product();
    Ok(Rational::from_integer(normalizer(inst, n)?)
        * rpow(&z, e + 1)
        * rpow(&q, -(e * (e + 1) / 2))
        * product)
}

/// Builds the record for `n`.
///
/// `I~_n` is enclosed as `B_n * T_q(z) - A_n` with width at most
/// `budget.target_width`, and cross-checked against the normalizer times the
/// directly summed remainder series; the two routes must overlap. Working
/// precision starts 64 bits below the predicted size of `I~_n` and is doubled
/// (a bounded number of times) while the enclosure still contains zero.
pub fn compute_record(
    inst: &ProblemInstance,
    n: u64,
    budget: &SeriesTermBudget,
) -> Result<ApproximantRecord> {
    let (a, b) = compute_pair(inst, n)?;
    let norm = normalizer(inst, n)?;
    let lead = leading_term(inst, n)?;
    let target = budget.target_width().clone();
    let mut bits = bits_for_width(&target) as i64;
    if !lead.is_zero() {
        bits = bits.max(RELATIVE_GUARD_BITS - floor_log2(&lead));
    }
    let q = inst.q();
    let z = inst.z();
    let b_abs = Rational::from_integer(b.abs());
    let norm_abs = Rational::from_integer(norm.abs());
    let a_rat = Rational::from_integer(a.clone());
    let b_rat = Rational::from_integer(b.clone());
    let norm_rat = Rational::from_integer(norm);

    let mut attempt = 0;
    loop {
        let w = (&target).min(&pow2(-bits)).clone();
        let t_width = if b.is_zero() { w.clone() } else { &w / &b_abs };
        let t = tschakaloff_enclosure(&q, &z, &budget.retarget(t_width)?)?;
        let i_tilde = t.scale(&b_rat).shift(&-&a_rat);

        let direct =
            i_n_direct_enclosure(&q, &z, n, &budget.retarget(&w / &norm_abs)?)?.scale(&norm_rat);
        if !i_tilde.overlaps(&direct) {
            return Err(Error::InvariantViolation {
                n,
                detail: format!("B_n T - A_n = {i_tilde} misses normalizer * I_n = {direct}"),
            });
        }
        attempt += 1;
        if !i_tilde.contains_zero() || attempt == MAX_REFINEMENTS {
            return ApproximantRecord::from_parts(n, a, b, i_tilde);
        }
        bits *= 2;
    }
}

/// Re-checks a record obtained elsewhere (for instance parsed back from
/// JSON): `A_n` and `B_n` must equal the exact recomputation and `I~_n` must
/// overlap the normalizer times the directly summed remainder series.
pub fn verify_record(
    inst: &ProblemInstance,
    record: &ApproximantRecord,
    budget: &SeriesTermBudget,
) -> Result<()> {
    let n = record.n();
    let (a, b) = compute_pair(inst, n)?;
    if (&a, &b) != (record.a(), record.b()) {
        return Err(Error::InvariantViolation {
            n,
            detail: format!(
                "record has (A, B) = ({}, {}), recomputed ({a}, {b})",
                record.a(),
                record.b()
            ),
        });
    }
    let norm = normalizer(inst, n)?;
    let width = (record.i_tilde().width()).max(budget.target_width().clone())
        / Rational::from_integer(norm.abs());
    let direct = i_n_direct_enclosure(&inst.q(), &inst.z(), n, &budget.retarget(width)?)?
        .scale(&Rational::from_integer(norm));
    if !record.i_tilde().overlaps(&direct) {
        return Err(Error::InvariantViolation {
            n,
            detail: format!(
                "I~_n = {} misses normalizer * I_n = {direct}",
                record.i_tilde()
            ),
        });
    }
    Ok(())
}

/// Records for every `n` in `ns`, computed in parallel and returned in
/// ascending order.
pub fn compute_records(
    inst: &ProblemInstance,
    ns: std::ops::RangeInclusive<u64>,
    budget: &SeriesTermBudget,
) -> Result<Vec<ApproximantRecord>> {
    ns.into_par_iter()
        .map(|n| compute_record(inst, n, budget))
        .collect()
}

/// Certificate that `T_q(z) != a/b` for every integer `a`: a record with
/// `0 < |b I~_n| < 1`. Were `T_q(z) = a/b`, `b I~_n = B_n a - A_n b` would be
/// a non-zero integer of modulus below 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub b: Integer,
    pub record: ApproximantRecord,
    /// Enclosure of `b * I~_n`.
    pub scaled: RationalInterval,
}

/// Width used when certifying against denominator `b`:
/// `min(2^-64, 1/(4b))`, so `b I~_n` is resolved to within 1/4.
pub fn certification_width(b: &Integer) -> Rational {
    let quarter = Rational::new(Integer::one(), b.abs() * 4);
    pow2(-64).min(quarter)
}

/// Smallest `n <= n_max` whose record certifies `0 < |b I~_n| < 1`.
pub fn witness_for_denominator(inst: &ProblemInstance, b: &Integer, n_max: u64) -> Result<Witness> {
    if !b.is_positive() {
        return Err(Error::Domain(format!(
            "denominator must be positive, got {b}"
        )));
    }
    witness_with_budget(
        inst,
        b,
        n_max,
        &SeriesTermBudget::with_width(certification_width(b))?,
    )
}

/// As [`witness_for_denominator`], with the enclosure width capped at
/// [`certification_width`] but otherwise taken from `budget`.
pub fn witness_with_budget(
    inst: &ProblemInstance,
    b: &Integer,
    n_max: u64,
    budget: &SeriesTermBudget,
) -> Result<Witness> {
    if !b.is_positive() {
        return Err(Error::Domain(format!(
            "denominator must be positive, got {b}"
        )));
    }
    let width = certification_width(b).min(budget.target_width().clone());
    let budget = budget.retarget(width)?;
    let b_rat = Rational::from_integer(b.clone());
    for n in 1..=n_max {
        let record = compute_record(inst, n, &budget)?;
        if !record.nonzero_certified() {
            continue;
        }
        let scaled = record.i_tilde().scale(&b_rat);
        if scaled.mag() < Rational::one() {
            return Ok(Witness {
                b: b.clone(),
                record,
                scaled,
            });
        }
    }
    Err(Error::WitnessNotFound { n_max })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn inst(q: (i64, i64), z: (i64, i64)) -> ProblemInstance {
        ProblemInstance::from_rationals(&rat(q.0, q.1), &rat(z.0, z.1)).unwrap()
    }

    /// Direct transcription of the double sum with fresh powers for every
    /// term and C_k from the polynomial expansion.
    fn brute_force_pair(inst: &ProblemInstance, n: u64) -> (Rational, Rational) {
        let m = m_of_n(n).unwrap() as i64;
        let q = inst.q();
        let z = inst.z();
        let polys = crate::qpoly::expand_r(n).unwrap();
        let norm = Rational::from_integer(normalizer(inst, n).unwrap());
        let mut b = Rational::zero();
        let mut a = Rational::zero();
        for (k, poly) in polys.iter().enumerate() {
            let k = k as i64;
            let ck = poly.eval_at(&q);
            b += &ck * rpow(&z, -k) * rpow(&q, k * (k - 1) / 2 + k * m);
            for l in 0..=k + m {
                a += &ck * rpow(&z, l - k) * rpow(&q, k * (k - 1) / 2 + k * m - l * (l - 1) / 2);
            }
        }
        (&norm * a, &norm * b)
    }

    #[test]
    fn anchor_q2_z1_n1() {
        let i = inst((2, 1), (1, 1));
        assert_eq!(normalizer(&i, 1).unwrap(), int(1));
        assert_eq!(compute_b(&i, 1).unwrap(), int(-1));
        assert_eq!(compute_a(&i, 1).unwrap(), int(-3));
    }

    #[test]
    fn n2_matches_brute_force() {
        let i = inst((2, 1), (1, 1));
        let (a, b) = compute_pair(&i, 2).unwrap();
        let (a_bf, b_bf) = brute_force_pair(&i, 2);
        assert_eq!(Rational::from_integer(a.clone()), a_bf);
        assert_eq!(Rational::from_integer(b.clone()), b_bf);
        assert_eq!((a, b), (int(140), int(53)));
    }

    #[test]
    fn integer_and_rational_routes_agree() {
        for q in [(2, 1), (-3, 1), (7, 2), (5, 3), (-9, 4)] {
            for z in [(1, 1), (1, 2), (-2, 1), (3, 7)] {
                let i = inst(q, z);
                for n in 1..=12 {
                    assert_eq!(
                        compute_pair(&i, n).unwrap(),
                        compute_pair_rational(&i, n).unwrap(),
                        "{i}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn frozen_values_from_external_fraction_oracle() {
        let (a, b) = compute_pair(&inst((7, 2), (-2, 1)), 3).unwrap();
        assert_eq!((a, b), (int(495414921), int(-14096921217)));
        let (a, b) = compute_pair(&inst((5, 3), (3, 7)), 5).unwrap();
        assert_eq!(a.to_string(), "-10039442242090515741709888822830125648");
        assert_eq!(b.to_string(), "-6446106530893346455319596744409822000");
    }

    #[test]
    fn fast_sums_match_brute_force_on_grid() {
        for q in [(2, 1), (-3, 1), (7, 2), (5, 3)] {
            for z in [(1, 1), (1, 2), (-2, 1), (3, 7)] {
                let i = inst(q, z);
                for n in 1..=8 {
                    let (a, b) = compute_pair(&i, n).unwrap();
                    let (a_bf, b_bf) = brute_force_pair(&i, n);
                    assert_eq!(Rational::from_integer(a), a_bf, "A, {i}, n={n}");
                    assert_eq!(Rational::from_integer(b), b_bf, "B, {i}, n={n}");
                }
            }
        }
    }

    #[test]
    fn record_anchor() {
        let i = inst((2, 1), (1, 1));
        let budget = SeriesTermBudget::with_width(rat(1, 1_000_000_000)).unwrap();
        let rec = compute_record(&i, 1, &budget).unwrap();
        assert_eq!(rec.m(), 0);
        assert_eq!(rec.a(), &int(-3));
        assert_eq!(rec.b(), &int(-1));
        assert!(rec.nonzero_certified());
        assert!(rec.i_tilde().width() <= rat(1, 1_000_000_000));
        // 0.358367439344846...
        assert!(rec.i_tilde().lo() < &rat(358367439344847, 1_000_000_000_000_000));
        assert!(rec.i_tilde().hi() > &rat(358367439344846, 1_000_000_000_000_000));
    }

    #[test]
    fn width_shrinks_with_budget() {
        let i = inst((7, 2), (-2, 1));
        let wide =
            compute_record(&i, 3, &SeriesTermBudget::with_width(pow2(-10)).unwrap()).unwrap();
        let narrow =
            compute_record(&i, 3, &SeriesTermBudget::with_width(pow2(-200)).unwrap()).unwrap();
        assert!(narrow.i_tilde().width() <= pow2(-200));
        assert!(narrow.i_tilde().width() <= wide.i_tilde().width());
        assert!(narrow.i_tilde().overlaps(wide.i_tilde()));
    }

    #[test]
    fn row_round_trip() {
        let i = inst((-3, 1), (3, 7));
        let rec = compute_record(&i, 4, &SeriesTermBudget::default()).unwrap();
        let row = rec.to_row();
        assert_eq!(ApproximantRecord::from_row(&row).unwrap(), rec);
        let mut bad = row.clone();
        bad.m += 1;
        assert!(ApproximantRecord::from_row(&bad).is_err());
    }

    #[test]
    fn witnesses_for_small_denominators() {
        let i = inst((2, 1), (1, 1));
        for b in [1, 2] {
            let w = witness_for_denominator(&i, &int(b), 10).unwrap();
            assert_eq!(w.record.n(), 1);
            assert!(w.scaled.mag() < rat(1, 1));
            assert!(!w.scaled.contains_zero());
        }
        assert!(witness_for_denominator(&i, &int(0), 10).is_err());
    }

    #[test]
    fn witness_search_gives_up() {
        // gamma(3/2) > gamma_0: the remainders grow, so nothing qualifies
        let i = inst((3, 2), (1, 1));
        let err = witness_for_denominator(&i, &int(1_000_000), 12).unwrap_err();
        assert!(matches!(err, Error::WitnessNotFound { n_max: 12 }));
    }

    #[test]
    fn verification_catches_tampering() {
        let i = inst((7, 2), (1, 2));
        let budget = SeriesTermBudget::default();
        let rec = compute_record(&i, 6, &budget).unwrap();
        verify_record(&i, &rec, &budget).unwrap();
        let tampered =
            ApproximantRecord::from_parts(6, rec.a() + 1, rec.b().clone(), rec.i_tilde().clone())
                .unwrap();
        assert!(matches!(
            verify_record(&i, &tampered, &budget),
            Err(Error::InvariantViolation { n: 6, .. })
        ));
        let shifted = ApproximantRecord::from_parts(
            6,
            rec.a().clone(),
            rec.b().clone(),
            rec.i_tilde().shift(&rat(1, 1)),
        )
        .unwrap();
        assert!(verify_record(&i, &shifted, &budget).is_err());
    }

    #[test]
    fn certification_width_policy() {
        assert_eq!(certification_width(&int(1)), pow2(-64));
        let huge = int(1) << 70;
        assert_eq!(certification_width(&huge), Rational::new(int(1), huge * 4));
    }
}

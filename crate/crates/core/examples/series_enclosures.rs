// Certified enclosures of `T_q(z)`, the theta companion and the remainder
// series `I_n`.

use tschakaloff::arith::{pow2, to_sci_string};
use tschakaloff::series::{
    i_n_direct_enclosure, theta_direct_enclosure, theta_via_tschakaloff, tschakaloff_enclosure,
};
use tschakaloff::{Error, Rational, SeriesTermBudget};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn run_example() -> Result<(), Error> {
    let (q, z) = (r(2, 1), r(1, 1));
    for bits in [16, 64, 256] {
        let t = tschakaloff_enclosure(&q, &z, &SeriesTermBudget::with_width(pow2(-bits))?)?;
        println!(
            "T_2(1), width <= 2^-{bits:<3}: {}",
            to_sci_string(&t.midpoint(), 30)
        );
    }

    let budget = SeriesTermBudget::with_width(pow2(-64))?;
    let (q, z) = (r(7, 2), r(-3, 1));
    let lhs = tschakaloff_enclosure(&q, &z, &budget)?;
    let rhs = tschakaloff_enclosure(&q, &(&z / &q), &budget)?
        .scale(&z)
        .shift(&r(1, 1));
    assert!(lhs.overlaps(&rhs));
    println!(
        "T_q(z) = 1 + z T_q(z/q) at q = 7/2, z = -3: {}",
        to_sci_string(&lhs.midpoint(), 20)
    );

    let via = theta_via_tschakaloff(&r(2, 1), &r(1, 1), &budget)?;
    let direct = theta_direct_enclosure(&r(2, 1), &r(1, 1), &budget)?;
    assert!(via.overlaps(&direct));
    println!(
        "Theta_2(1) = T_4(1/2): {}",
        to_sci_string(&via.midpoint(), 20)
    );

    for n in [1, 5, 10] {
        let i_n = i_n_direct_enclosure(
            &r(2, 1),
            &r(1, 1),
            n,
            &SeriesTermBudget::with_width(pow2(-200))?,
        )?;
        println!(
            "I_{n:<2} for q = 2, z = 1: {}",
            to_sci_string(&i_n.midpoint(), 12)
        );
    }
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

// The index shift `m = floor(n (sqrt 5 - 1) / 2)`, computed with integer
// square roots and checked against a certified enclosure of `sqrt 5`.

use tschakaloff::arith::{isqrt, m_of_n, pow2, sqrt_enclosure, to_sci_string};
use tschakaloff::{Error, Integer, Rational};

pub fn run_example() -> Result<(), Error> {
    let root5 = sqrt_enclosure(&Rational::from_integer(5.into()), &pow2(-80))?;
    println!(
        "sqrt 5 in [{}, {}]",
        to_sci_string(root5.lo(), 25),
        to_sci_string(root5.hi(), 25)
    );

    println!("{:>8} {:>8} {:>14}", "n", "m", "isqrt(5 n^2)");
    for n in [1u64, 2, 3, 5, 8, 13, 40, 1000, 1_000_000] {
        let m = m_of_n(n)?;
        let s = isqrt(&(Integer::from(5) * Integer::from(n) * Integer::from(n)))?;
        // n (sqrt 5 - 1) / 2 lies in [m, m + 1)
        let scaled = root5
            .shift(&-Rational::from_integer(1.into()))
            .scale(&Rational::new(n.into(), 2.into()));
        assert!(scaled.lo() >= &Rational::from_integer(m.into()));
        assert!(scaled.hi() < &Rational::from_integer((m + 1).into()));
        println!("{n:>8} {m:>8} {s:>14}");
    }
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

// Per-denominator certificates: for each `b`, an `n` with
// `0 < |b I~_n| < 1`, which rules out `T_q(z) = a/b` for every integer `a`.

use tschakaloff::approximants::witness_for_denominator;
use tschakaloff::arith::{parse_rational, to_sci_string};
use tschakaloff::{Error, Integer, ProblemInstance};

pub fn run_example() -> Result<(), Error> {
    let inst = ProblemInstance::from_rationals(&parse_rational("2")?, &parse_rational("1")?)?;
    for b in [1u64, 2, 1000, 1_000_000, 1_000_000_000_000] {
        let w = witness_for_denominator(&inst, &Integer::from(b), 40)?;
        println!(
            "b = {b:<14} n = {:<2} b I~_n in [{}, {}]",
            w.record.n(),
            to_sci_string(w.scaled.lo(), 8),
            to_sci_string(w.scaled.hi(), 8)
        );
    }

    let failing = ProblemInstance::from_rationals(&parse_rational("3/2")?, &parse_rational("1")?)?;
    match witness_for_denominator(&failing, &Integer::from(1_000_000), 12) {
        Ok(w) => println!("q = 3/2: witness at n = {}", w.record.n()),
        Err(e) => println!("q = 3/2: {e}"),
    }
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

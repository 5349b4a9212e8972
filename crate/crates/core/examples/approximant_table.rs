// The integer pairs `(A_n, B_n)` and certified enclosures of
// `I~_n = B_n T_q(z) - A_n`, each re-verified from scratch.

use num_traits::Signed;
use tschakaloff::approximants::{compute_records, verify_record};
use tschakaloff::arith::{parse_rational, to_sci_string};
use tschakaloff::{Error, ProblemInstance, SeriesTermBudget};

pub fn run_example() -> Result<(), Error> {
    let inst = ProblemInstance::from_rationals(&parse_rational("7/2")?, &parse_rational("-2")?)?;
    let budget = SeriesTermBudget::default();
    let records = compute_records(&inst, 1..=12, &budget)?;
    println!("{inst}");
    println!(
        "{:>3} {:>3} {:>26} {:>8} {:>8}",
        "n", "m", "I~_n", "digits B", "nonzero"
    );
    for rec in &records {
        verify_record(&inst, rec, &budget)?;
        println!(
            "{:>3} {:>3} {:>26} {:>8} {:>8}",
            rec.n(),
            rec.m(),
            to_sci_string(&rec.i_tilde().midpoint(), 12),
            rec.b().abs().to_string().len(),
            rec.nonzero_certified()
        );
    }
    let first = &records[0];
    println!("A_1 = {}, B_1 = {}", first.a(), first.b());
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

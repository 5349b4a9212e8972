// Least-squares fit of `log|I~_n|` against `log|B_n|`, turned into an
// empirical irrationality exponent and compared with the closed form.

use tschakaloff::approximants::compute_records;
use tschakaloff::arith::{parse_rational, to_sci_string};
use tschakaloff::asymptotics::estimate_measure;
use tschakaloff::{Error, ProblemInstance, SeriesTermBudget};

pub fn run_example() -> Result<(), Error> {
    let inst = ProblemInstance::from_rationals(&parse_rational("2")?, &parse_rational("1")?)?;
    let records = compute_records(&inst, 20..=50, &SeriesTermBudget::default())?;
    let est = estimate_measure(&records, &inst)?;
    println!(
        "fit over n in [{}, {}]",
        est.fit_ns.first().copied().unwrap_or(0),
        est.fit_ns.last().copied().unwrap_or(0)
    );
    println!("  c_hat              {}", to_sci_string(&est.c_hat, 8));
    println!(
        "  empirical exponent {}",
        to_sci_string(&est.empirical_exponent, 8)
    );
    if let Some(p) = &est.predicted_exponent {
        println!("  predicted exponent {}", to_sci_string(&p.midpoint(), 8));
    }
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

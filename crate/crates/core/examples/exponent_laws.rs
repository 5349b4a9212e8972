// The size ratio `gamma`, the hypothesis `gamma < gamma_0`, and the growth
// exponents of `B_n` and `I~_n` against their limits.

use tschakaloff::approximants::compute_record;
use tschakaloff::arith::{parse_rational, to_sci_string};
use tschakaloff::asymptotics::{empirical_exponents, hypothesis_check};
use tschakaloff::{Error, ProblemInstance, SeriesTermBudget};

pub fn run_example() -> Result<(), Error> {
    for q in ["2", "7/2", "3/2"] {
        let inst = ProblemInstance::from_rationals(&parse_rational(q)?, &parse_rational("1")?)?;
        let check = hypothesis_check(&inst)?;
        println!(
            "q = {q:<4} gamma in [{}, {}], {:?}",
            to_sci_string(check.gamma.lo(), 8),
            to_sci_string(check.gamma.hi(), 8),
            check.verdict
        );
    }

    let inst = ProblemInstance::from_rationals(&parse_rational("2")?, &parse_rational("1")?)?;
    let budget = SeriesTermBudget::default();
    let records = [10, 20, 40]
        .iter()
        .map(|&n| compute_record(&inst, n, &budget))
        .collect::<Result<Vec<_>, _>>()?;
    let series = empirical_exponents(&records, &inst)?;
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12}",
        "n", "B", "B limit", "I", "I limit"
    );
    for r in &series.reports {
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>12}",
            r.n,
            to_sci_string(&r.empirical_b, 6),
            to_sci_string(&r.theoretical_b.midpoint(), 6),
            to_sci_string(&r.empirical_i, 6),
            to_sci_string(&r.theoretical_i.midpoint(), 6)
        );
    }
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

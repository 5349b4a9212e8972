// Coefficients `C_k(q)` of `R_n(T; q) = prod_{j=1..n} (1 - q^j T)` and their
// closed form `(-1)^k [n k]_q q^(k(k+1)/2)`.

use tschakaloff::qpoly::{expand_r, explicit_c, qbinom, qbinom_by_factorials};
use tschakaloff::Error;

pub fn run_example() -> Result<(), Error> {
    let n = 4;
    println!("R_{n}(T; q) = sum_k C_k(q) T^k");
    for (k, c) in expand_r(n)?.iter().enumerate() {
        assert_eq!(c, &explicit_c(n, k as u64)?);
        println!("  C_{k} = {c}");
    }

    println!("Gaussian binomials [6 k]_q:");
    for k in 0..=6 {
        let g = qbinom(6, k)?;
        assert_eq!(g, qbinom_by_factorials(6, k)?);
        assert!(g.is_palindromic());
        println!("  k = {k}: {g}");
    }
    Ok(())
}

fn main() -> Result<(), Error> {
    run_example()
}

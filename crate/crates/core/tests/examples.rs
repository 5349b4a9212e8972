//! Every example in `examples/` runs to completion.

macro_rules! example_test {
    ($module:ident, $test:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(golden_shift, golden_shift_runs, "golden_shift.rs");
example_test!(
    gaussian_coefficients,
    gaussian_coefficients_runs,
    "gaussian_coefficients.rs"
);
example_test!(
    series_enclosures,
    series_enclosures_runs,
    "series_enclosures.rs"
);
example_test!(
    approximant_table,
    approximant_table_runs,
    "approximant_table.rs"
);
example_test!(exponent_laws, exponent_laws_runs, "exponent_laws.rs");
example_test!(
    irrationality_witness,
    irrationality_witness_runs,
    "irrationality_witness.rs"
);
example_test!(
    measure_estimate,
    measure_estimate_runs,
    "measure_estimate.rs"
);

//! Acceptance battery: one test per criterion, each printing a pass/fail
//! line.  `cargo test --test acceptance -- --nocapture` shows the table;
//! the `jack selftest` subcommand runs the same checks.

use superjack::suite;

fn run(name: &str, f: fn() -> suite::CheckResult) {
    match f() {
        Ok(detail) => println!("PASS  {:<26} {}", name, detail),
        Err(detail) => {
            println!("FAIL  {:<26} {}", name, detail);
            panic!("criterion '{}' failed: {}", name, detail);
        }
    }
}

#[test]
fn criterion_01_worked_expansion() {
    run("worked-expansion", suite::worked_expansion);
}

#[test]
fn criterion_02_worked_norm() {
    run("worked-norm", suite::worked_norm);
}

#[test]
fn criterion_03_eigen_suite() {
    run("eigen-suite", suite::eigen_suite);
}

#[test]
fn criterion_04_t_basis_suite() {
    run("t-basis-suite", suite::t_basis_suite);
}

#[test]
fn criterion_05_supersymmetric_example() {
    run("supersymmetric-example", suite::supersymmetric_example);
}

#[test]
fn criterion_06_orbit_combinatorics() {
    run("orbit-combinatorics", suite::orbit_combinatorics);
}

#[test]
fn criterion_07_minimal_norm_crosscheck() {
    run("minimal-norm-crosscheck", suite::minimal_norm_crosscheck);
}

#[test]
fn criterion_08_series_identities() {
    run("series-identities", suite::series_identities);
}

#[test]
fn criterion_09_duality() {
    run("duality", suite::duality);
}

#[test]
fn criterion_10_spectra() {
    run("spectra", suite::spectra_forms);
}

#[test]
fn criterion_11_norm_positivity() {
    run("norm-positivity", suite::norm_positivity);
}

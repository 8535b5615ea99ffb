//! One line per acceptance criterion, then a single assertion over all of them.

use std::time::Instant;

use g25::paperlab::{run_suite, Check, SuiteOptions};

const CRITERIA: [(&str, &str); 16] = [
    ("standard_curve", "standard curve: exact pencil, Gram diag(1,6,15,20,15,6,1), reducible, one solution"),
    ("rmk", "RMK point: reference pencil up to phase, X = Y = Z = 2, one solution"),
    ("f_identity", "explicit F equals the H-identity after clearing denominators"),
    ("gradient", "F(1,1/2,1/8) = 0 with gradient (0, -13125/256, 4375/64)"),
    ("involution", "F(sigma t) = g^21 F(t) and sigma o sigma = id on 100 rational points"),
    ("w_functional", "closed form 40 and 184/7, quadrature agrees on 5 curves"),
    ("eg_exact", "eg-exact point: exact data, both branches certify, conjugate"),
    ("eg_exact1", "eg-exact1 point: F vanishes on the sqrt(79) path"),
    ("eg_cusp", "cusp: two reciprocal roots, reference triples, X = Y = Z = 2, one solution"),
    ("s1_level_set", "S1 level set: closed-form ends, residuals, g = 1 scan structure"),
    ("family33", "one-parameter family: JP residuals and Gram defect at 12 angles"),
    ("ramification", "ramification: transversal {0, inf}, tangential {inf}, standard reducible"),
    ("representation", "representation identities on rational inputs"),
    ("genericity", "center-map genericity and the degenerate witness"),
    ("example5", "plane curve f: exact checks, tangencies, Z^2 = 4 contact, error bound"),
    ("second_ff", "second fundamental form: nonconstant on 10 curves, 20/3 on the standard curve"),
];

fn run(name: &str, o: &SuiteOptions) -> Result<Vec<Check>, String> {
    run_suite(name, o).map_err(|e| e.to_string())
}

#[test]
fn acceptance() {
    let o = SuiteOptions::default();
    let mut failed = Vec::new();
    println!();
    for (k, (name, what)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(name, &o);
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(checks) => {
                let bad: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
                let verdict = if bad.is_empty() && !checks.is_empty() { "PASS" } else { "FAIL" };
                println!("AC{:02} {verdict} {what} [{} checks, {ms} ms]", k + 1, checks.len());
                for c in &bad {
                    println!("      {}: expected {}, computed {}, tolerance {}", c.check_name, c.expected, c.computed, c.tolerance);
                }
                if verdict == "FAIL" {
                    failed.push(k + 1);
                }
            }
            Err(e) => {
                println!("AC{:02} FAIL {what} [error: {e}]", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

//! Acceptance criteria, one line per criterion. Exact equality throughout;
//! runtime ceilings are checked on the build profile under test.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use golden_core::verify::{
    random_polynomials, verify_identities, DILATATION_COEFF_BOUND, DILATATION_SAMPLES,
    DILATATION_SEED,
};
use golden_core::{
    bf_numbers_recursive, bf_numbers_series, bf_polynomials_genfunc, binet,
    classical_bernoulli_numbers, golden_derivative, golden_derivative_dilatation, BernoulliTable,
    FibTable, GoldenNumber, Polynomial, Rational,
};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn qs(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| q(s)).collect()
}

fn within(limit: Duration, f: impl FnOnce()) {
    let start = Instant::now();
    f();
    let took = start.elapsed();
    assert!(took < limit, "took {took:?}, limit {limit:?}");
}

fn golden(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_golden"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("spawn golden")
}

const KNOWN_BF: [&str; 7] = ["1", "-1", "1/2", "-1/3", "3/10", "-5/8", "101/39"];

fn ac1_bf_numbers() {
    within(Duration::from_secs(1), || {
        assert_eq!(bf_numbers_series(6), qs(&KNOWN_BF));
        assert_eq!(bf_numbers_recursive(6), qs(&KNOWN_BF));
    });
}

fn ac2_cross_method() {
    within(Duration::from_secs(60), || {
        assert_eq!(bf_numbers_series(64), bf_numbers_recursive(64));
        let table = BernoulliTable::fibonacci(32);
        assert_eq!(bf_polynomials_genfunc(32), table.polynomials());
    });
}

/// The listed polynomials, written exactly as displayed: unreduced sums of
/// Fibonacci numbers and Fibonacci factorials.
fn listed_polynomials() -> Vec<Polynomial<Rational>> {
    let t = FibTable::new(6);
    let ff = |n: usize| Rational::from(t.factorial(n).clone());
    let f = |n: usize| Rational::from(t.fib(n).clone());
    let one = || q("1");
    let two = || q("2");
    let p = |c: Vec<Rational>| Polynomial::new(c);

    let b0 = p(vec![one()]);
    let b1 = p(vec![-(one() / ff(2)), one() / ff(1)]);
    let b2 = p(vec![one() / ff(2) - one() / f(3), -(one() / ff(1)), one()]);
    let b3 = p(vec![
        two() / ff(2) - one() / f(4) - f(3),
        ff(3) / (ff(1) * ff(2) * ff(2)) - one() / ff(1),
        -(ff(3) / (ff(2) * ff(2))),
        one(),
    ]);
    let b4 = p(vec![
        ff(4) / (ff(2) * ff(2) * ff(2) * ff(2)) - q("3") * ff(4) / (ff(2) * ff(2) * ff(3))
            + two() / ff(2)
            + ff(4) / (ff(3) * ff(3))
            - one() / f(5),
        -(ff(4) / (ff(1) * ff(2) * ff(2) * ff(2))) + two() * ff(4) / (ff(1) * ff(2) * ff(3))
            - one() / ff(1),
        ff(4) / (ff(2) * ff(2) * ff(2)) - ff(4) / (ff(2) * ff(3)),
        -(ff(4) / (ff(3) * ff(2))),
        one(),
    ]);
    let f2_4 = || ff(2) * ff(2) * ff(2) * ff(2);
    let b5 = p(vec![
        -(ff(5) / (f2_4() * ff(2))) + q("4") * ff(5) / (ff(2) * ff(2) * ff(2) * ff(3))
            - q("3") * ff(5) / (ff(3) * ff(3) * ff(2))
            - q("3") * ff(5) / (ff(2) * ff(2) * ff(4))
            + two() * ff(5) / (ff(3) * ff(4))
            + two() / ff(2)
            - ff(5) / ff(6),
        -(one() / ff(1))
            + ff(5) / (ff(1) * ff(3) * ff(3))
            + two() * ff(5) / (ff(1) * ff(2) * ff(4))
            - q("3") * ff(5) / (ff(1) * ff(2) * ff(2) * ff(3))
            + ff(5) / (ff(1) * f2_4()),
        -(ff(5) / (ff(2) * ff(4))) + two() * ff(5) / (ff(2) * ff(2) * ff(3)) - ff(5) / f2_4(),
        -(ff(5) / (ff(3) * ff(3))) + ff(5) / (ff(3) * ff(2) * ff(2)),
        -(ff(5) / (ff(4) * ff(2))),
        one(),
    ]);
    vec![b0, b1, b2, b3, b4, b5]
}

fn ac3_listed_polynomials() {
    let table = BernoulliTable::fibonacci(5);
    let poly = |c: &[&str]| Polynomial::new(qs(c));
    assert_eq!(table.polynomial(0), &poly(&["1"]));
    assert_eq!(table.polynomial(1), &poly(&["-1", "1"]));
    assert_eq!(table.polynomial(2), &poly(&["1/2", "-1", "1"]));
    let genfunc = bf_polynomials_genfunc(5);
    for n in 3..=5 {
        assert_eq!(table.polynomial(n).coeff(0), q(KNOWN_BF[n]), "B_{n}^F(0)");
        assert_eq!(&genfunc[n], table.polynomial(n), "B_{n}^F generators");
    }
    assert_eq!(table.polynomial(3), &poly(&["-1/3", "1", "-2", "1"]));
    assert_eq!(table.polynomial(4), &poly(&["3/10", "-1", "3", "-3", "1"]));
    assert_eq!(
        table.polynomial(5),
        &poly(&["-5/8", "3/2", "-5", "15/2", "-5", "1"])
    );
    for (n, listed) in listed_polynomials().iter().enumerate() {
        assert_eq!(listed, table.polynomial(n), "listed B_{n}^F");
    }
}

fn ac4_identity_suite() {
    within(Duration::from_secs(60), || {
        for r in verify_identities(32) {
            assert!(r.passed(), "{} failed: {:?}", r.identity, r.counterexample);
        }
        let out = golden(&["verify", "32"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    });
}

fn ac5_dilatation_oracle() {
    let samples = random_polynomials(
        DILATATION_SEED,
        DILATATION_SAMPLES,
        32,
        DILATATION_COEFF_BOUND,
    );
    assert_eq!(samples.len(), 200);
    assert!(samples.iter().any(|p| p.degree() == Some(32)));
    for (i, p) in samples.iter().enumerate() {
        let oracle = golden_derivative_dilatation(p).unwrap_or_else(|e| panic!("sample {i}: {e}"));
        assert_eq!(golden_derivative(p), oracle, "sample {i}");
    }
}

fn ac6_fibonomials() {
    let table = FibTable::new(256);
    for n in 0..=64 {
        for k in 0..=n {
            let v = table.fibonomial(n, k).expect("exact integer quotient");
            assert_eq!(v, table.fibonomial(n, n - k).unwrap(), "[{n},{k}]");
        }
    }
    for n in 2..=32 {
        for k in 1..n {
            let expect = GoldenNumber::from(Rational::from(table.fibonomial(n, k).unwrap()));
            assert_eq!(table.fibonomial_rec_a(n, k).unwrap(), expect);
            assert_eq!(table.fibonomial_rec_b(n, k).unwrap(), expect);
        }
    }
    for n in 0..=256 {
        assert_eq!(
            binet(n).unwrap(),
            Rational::from(table.fib(n).clone()),
            "F_{n}"
        );
    }
}

fn ac7_classical() {
    let b = classical_bernoulli_numbers(32);
    assert_eq!(
        b[..7],
        qs(&["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"])[..]
    );
    for n in (3..=31).step_by(2) {
        assert_eq!(b[n], q("0"), "b_{n}");
    }
    let table = BernoulliTable::classical(32);
    for (n, bn) in b.iter().enumerate().take(33).skip(2) {
        assert_eq!(&table.eval(n, &q("1")), bn, "B_{n}(1)");
    }
}

fn ac8_cli_contract() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for (args, file) in [
        (&["numbers", "fib", "6"][..], "numbers_fib_6.json"),
        (&["poly", "fib", "2"][..], "poly_fib_2.json"),
        (&["fibonomial", "7"][..], "fibonomial_7.json"),
    ] {
        let out = golden(args);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(out.stdout, std::fs::read(dir.join(file)).unwrap(), "{file}");
    }
    assert_eq!(golden(&["verify", "8"]).status.code(), Some(0));
    assert_eq!(
        golden(&["verify", "8", "--corrupt", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(golden(&["verify", "1"]).status.code(), Some(2));
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 8] = [
        (
            "AC1 Bernoulli-Fibonacci numbers b_0..b_6, both generators, < 1 s",
            ac1_bf_numbers,
        ),
        (
            "AC2 cross-method numbers n <= 64, polynomials n <= 32, < 60 s",
            ac2_cross_method,
        ),
        (
            "AC3 listed polynomials B_0..B_5, reduced forms and constant terms",
            ac3_listed_polynomials,
        ),
        (
            "AC4 identity suite at N = 32, `verify 32` exits 0, < 60 s",
            ac4_identity_suite,
        ),
        (
            "AC5 Golden derivative = dilatation quotient on 200 random polynomials",
            ac5_dilatation_oracle,
        ),
        (
            "AC6 Fibonomial integrality/symmetry, Pascal recursions, Binet n <= 256",
            ac6_fibonomials,
        ),
        ("AC7 classical Bernoulli baseline", ac7_classical),
        (
            "AC8 CLI golden files and exit codes 0/1/2",
            ac8_cli_contract,
        ),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check));
        let took = start.elapsed();
        match result {
            Ok(()) => println!("PASS  {name}  ({took:.2?})"),
            Err(e) => {
                failures += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  {name}  ({took:.2?}): {msg}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

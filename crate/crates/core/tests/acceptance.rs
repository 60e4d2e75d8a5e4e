//! Acceptance run: one line per numbered check, all at exact equality.
//!
//! Run with `cargo test --test acceptance`; enable `long-tests` for the
//! longer n = 3 ranges.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use splitcheck::expr::{parse, PolyValue};
use splitcheck::f2poly::euler_form_product;
use splitcheck::gl::enumerate_gl;
use splitcheck::steenrod::sq_poly;
use splitcheck::verify::{criterion, CheckReport, VerifyOptions, CRITERIA};
use splitcheck::{binom2, LaurentPoly, Monomial};

fn poly(nvars: usize, lo: i32, hi: i32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(prop::collection::vec(lo..=hi, nvars), 0..6).prop_map(move |ms| {
        LaurentPoly::from_terms(nvars, ms.into_iter().map(Monomial::new).collect::<BTreeSet<_>>())
    })
}

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases: 256, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

/// The five fuzz suites; returns the names of any that fail.
fn property_suites() -> Vec<String> {
    let mut failed = Vec::new();
    let mut record = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failed.push(format!("{name}: {e}"));
        }
    };

    record(
        "cartan",
        runner().run(&(poly(3, -1, 3), poly(3, 0, 3), 0u32..8), |(f, g, k)| {
            let lhs = sq_poly(k, &(&f * &g)).unwrap();
            let mut rhs = LaurentPoly::zero(3);
            for i in 0..=k {
                rhs += &(&sq_poly(i, &f).unwrap() * &sq_poly(k - i, &g).unwrap());
            }
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "instability",
        runner().run(&(0i32..7, poly(3, 0, 6)), |(d, p)| {
            let p = p.component(d);
            prop_assert_eq!(sq_poly(d as u32, &p).unwrap(), p.square());
            prop_assert!(sq_poly(d as u32 + 1, &p).unwrap().is_zero());
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "pascal",
        runner().run(&(-500i64..500, 1i64..500), |(m, k)| {
            prop_assert_eq!(binom2(m, k), binom2(m - 1, k) ^ binom2(m - 1, k - 1));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "euler-invariance",
        runner().run(&(1usize..=3, any::<prop::sample::Index>()), |(n, pick)| {
            let group = enumerate_gl(n).unwrap();
            let u = euler_form_product(n);
            prop_assert_eq!(u.substitute_polynomial(&group[pick.index(group.len())]).unwrap(), u);
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    record(
        "print-parse",
        runner()
            .run(&poly(3, -2, 5), |p| {
                let back = parse(&p.to_string()).unwrap().eval_poly(Some(3)).unwrap();
                prop_assert_eq!(back, PolyValue::X(p));
                Ok(())
            })
            .map_err(|e| e.to_string()),
    );
    failed
}

fn line(id: u8, name: &str, pass: bool, secs: f64, extra: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("{status} {id:>2} {name:<26} {secs:>7.2}s {extra}");
}

fn describe(r: &CheckReport) -> String {
    let mut s = format!("range [{}, {}]", r.range[0], r.range[1]);
    if let Some(f) = r.first_failure {
        s.push_str(&format!("; first failure at degree {}: {} vs {}", f.degree, f.lhs, f.rhs));
    }
    if let Some(d) = &r.detail {
        s.push_str(&format!("; {d}"));
    }
    s
}

fn main() -> ExitCode {
    let opts = VerifyOptions { extended: cfg!(feature = "long-tests"), ..VerifyOptions::default() };
    let mut all_pass = true;
    for &(id, name) in &CRITERIA {
        let start = Instant::now();
        let (pass, extra) = match criterion(id, &opts) {
            Ok(r) => (r.pass, describe(&r)),
            Err(e) => (false, format!("error: {e}")),
        };
        line(id, name, pass, start.elapsed().as_secs_f64(), &extra);
        all_pass &= pass;
    }
    let start = Instant::now();
    let failed = property_suites();
    let extra = if failed.is_empty() { "5 suites x 256 cases".to_string() } else { failed.join("; ") };
    line(12, "property-suites", failed.is_empty(), start.elapsed().as_secs_f64(), &extra);
    all_pass &= failed.is_empty();
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

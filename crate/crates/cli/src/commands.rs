use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use splitcheck::expr::{parse, PolyValue};
use splitcheck::f2poly::symmetrize_to_sigma;
use splitcheck::looph::{exactness_recursion, m_dims, weight_histogram};
use splitcheck::relations::{compare_with_published_table, relation_table};
use splitcheck::spectra::{check_mto2_decomposition, check_split_shadow, check_takayasu_with};
use splitcheck::steenrod::{admissible_basis, apply_element};
use splitcheck::steinberg::{group_order, steinberg_idempotent, summand_dims_with, verify_block_identity};
use splitcheck::verify::{verify_all, CheckReport, VerifyOptions};
use splitcheck::{Execution, GradedDims, IdempotentVariant, LengthConstraint};

use crate::args::{Command, LengthArg, SpectrumCheck, Variant};
use crate::cache::{Cache, CacheKey};
use crate::config::RunConfig;
use crate::error::CliError;

/// What a command produced, ready for any output format.
pub struct Outcome {
    pub params: Value,
    pub result: Value,
    pub text: String,
    pub csv: String,
    /// false when a check inside the command failed
    pub pass: bool,
}

impl Outcome {
    fn new(params: Value, result: impl Serialize, text: String, csv: String) -> Self {
        Outcome {
            params,
            result: serde_json::to_value(result).expect("serializable result"),
            text,
            csv,
            pass: true,
        }
    }
}

fn execution() -> Execution {
    if Execution::parallel_available() {
        Execution::Parallel
    } else {
        Execution::Sequential
    }
}

fn dims_outcome(params: Value, dims: &GradedDims) -> Outcome {
    Outcome::new(params, dims, format!("{dims}\n"), dims.to_csv())
}

fn reports_csv(reports: &[CheckReport]) -> String {
    let mut out = String::from("check,lo,hi,pass,failure_degree,lhs,rhs\n");
    for r in reports {
        let (d, l, h) = match r.first_failure {
            Some(f) => (f.degree.to_string(), f.lhs.to_string(), f.rhs.to_string()),
            None => Default::default(),
        };
        let _ = writeln!(out, "{},{},{},{},{d},{l},{h}", r.check, r.range[0], r.range[1], r.pass);
    }
    out
}

fn reports_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.pass { "PASS" } else { "FAIL" };
        let _ = write!(out, "{status} {} [{}, {}]", r.check, r.range[0], r.range[1]);
        if let Some(f) = r.first_failure {
            let _ = write!(out, " first failure at degree {}: {} vs {}", f.degree, f.lhs, f.rhs);
        }
        if let Some(d) = &r.detail {
            let _ = write!(out, " ({d})");
        }
        out.push('\n');
    }
    out
}

fn reports_outcome(params: Value, reports: Vec<CheckReport>) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    let mut o = Outcome::new(params, &reports, reports_text(&reports), reports_csv(&reports));
    o.pass = pass;
    o
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

pub fn run(command: &Command, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let defaults = &cfg.defaults;
    let cache = cfg.cache_dir.as_deref().map(Cache::new);
    let exec = execution();
    match command {
        Command::Adem { expr } => {
            let e = parse(expr)?;
            let normal = e.eval_steenrod()?;
            let words: Vec<&[u32]> = normal.words().map(|w| w.entries()).collect();
            let text = normal.to_string();
            let mut csv = String::from("word\n");
            for w in normal.words() {
                let _ = writeln!(csv, "{w}");
            }
            Ok(Outcome::new(
                json!({ "expr": expr }),
                json!({ "normal_form": text, "words": words }),
                format!("{text}\n"),
                csv,
            ))
        }
        Command::Basis { degree, max_degree, length } => {
            let length = match length {
                Some(l) => *l,
                None => match &defaults.length {
                    Some(s) => s.parse().map_err(CliError::Usage)?,
                    None => LengthArg(LengthConstraint::Any),
                },
            };
            let degree = degree.or(defaults.degree);
            let max_degree = max_degree.or(defaults.max_degree);
            match (degree, max_degree) {
                (Some(d), _) => {
                    let d = cfg.check_degree(d)?;
                    if d < 0 {
                        return Err(CliError::Usage("--degree must be nonnegative".into()));
                    }
                    let basis = admissible_basis(d as u32, length.0);
                    let names: Vec<String> = basis.iter().map(ToString::to_string).collect();
                    let words: Vec<&[u32]> = basis.iter().map(|w| w.entries()).collect();
                    let mut csv = String::from("word\n");
                    for n in &names {
                        let _ = writeln!(csv, "{n}");
                    }
                    let text = names.iter().map(|n| format!("{n}\n")).collect();
                    Ok(Outcome::new(
                        json!({ "degree": d, "length": length.to_string() }),
                        json!({ "count": basis.len(), "words": words }),
                        text,
                        csv,
                    ))
                }
                (None, Some(m)) => {
                    let m = cfg.check_degree(m)?;
                    let dims = GradedDims::from_fn(0, m, |d| admissible_basis(d as u32, length.0).len() as u64);
                    Ok(dims_outcome(json!({ "max_degree": m, "length": length.to_string() }), &dims))
                }
                (None, None) => Err(CliError::Usage("give --degree or --max-degree".into())),
            }
        }
        Command::Act { op, poly, n } => {
            let a = parse(op)?.eval_steenrod()?;
            if let Some(d) = a.degree() {
                cfg.check_degree(d as i32)?;
            }
            let n = n.or(defaults.n);
            let value = parse(poly)?.eval_poly(n)?;
            let out = match &value {
                PolyValue::X(p) => PolyValue::X(apply_element(&a, p)?),
                PolyValue::Sigma(s) => {
                    let image = apply_element(&a, &s.to_x())?;
                    PolyValue::Sigma(symmetrize_to_sigma(&image)?)
                }
            };
            let text = out.to_string();
            Ok(Outcome::new(
                json!({ "op": op, "poly": poly, "n": n }),
                json!({ "operation": a.to_string(), "value": text }),
                format!("{text}\n"),
                format!("value\n{text}\n"),
            ))
        }
        Command::Steinberg { n, variant } => {
            let n = n.or(defaults.n).unwrap_or(2);
            let variant = match variant.unwrap_or(Variant::Standard) {
                Variant::Standard => IdempotentVariant::Standard,
                Variant::Conjugate => IdempotentVariant::Conjugate,
            };
            let e = steinberg_idempotent(n, variant)?;
            let block = if n >= 2 { Some(verify_block_identity(n)?) } else { None };
            let pass = block.as_ref().is_none_or(|b| b.pass);
            let result = json!({
                "n": n,
                "group_order": group_order(n),
                "support_size": e.len(),
                "idempotent": true,
                "block_identity": block,
            });
            let mut text = format!(
                "GL_{n}(F_2): order {}, idempotent support {} ({variant:?}), e^2 = e\n",
                group_order(n),
                e.len()
            );
            if let Some(b) = &block {
                let _ = writeln!(text, "e_{} e_{n} = e_{n}: {}", n - 1, if b.pass { "yes" } else { "NO" });
            }
            let csv = format!(
                "n,group_order,support_size,idempotent,block_identity\n{n},{},{},true,{}\n",
                group_order(n),
                e.len(),
                block.as_ref().map_or(String::new(), |b| b.pass.to_string())
            );
            let mut o = Outcome::new(json!({ "n": n, "variant": variant }), result, text, csv);
            o.pass = pass;
            Ok(o)
        }
        Command::Summand { n, twist, min_degree, max_degree } => {
            let n = require(n.or(defaults.n), "n")?;
            let twist = twist.or(defaults.twist).unwrap_or(0);
            let lo = min_degree.or(defaults.min_degree).unwrap_or(twist * ((1 << n) - 1));
            let hi = cfg.check_degree(require(max_degree.or(defaults.max_degree), "max-degree")?)?;
            if hi < lo {
                return Err(CliError::Usage(format!("empty range [{lo}, {hi}]")));
            }
            let key = CacheKey::new("summand", n, twist, lo, hi);
            let dims = Cache::get_or_compute(cache.as_ref(), key, || summand_dims_with(exec, n, twist, lo, hi))?;
            Ok(dims_outcome(json!({ "n": n, "twist": twist, "min_degree": lo, "max_degree": hi }), &dims))
        }
        Command::MtoCheck { n, max_degree, check } => {
            let n = n.or(defaults.n).unwrap_or(2);
            let hi = cfg.check_degree(max_degree.or(defaults.max_degree).unwrap_or(12))?;
            let which = check.unwrap_or(SpectrumCheck::All);
            let mut reports = Vec::new();
            if matches!(which, SpectrumCheck::Split | SpectrumCheck::All) {
                reports.push(check_split_shadow(n, hi)?);
            }
            if matches!(which, SpectrumCheck::Takayasu | SpectrumCheck::All) {
                if !(2..=3).contains(&n) {
                    if which == SpectrumCheck::Takayasu {
                        return Err(CliError::Usage("the Takayasu check needs 2 <= n <= 3".into()));
                    }
                } else {
                    reports.push(check_takayasu_with(exec, n, hi)?);
                }
            }
            if matches!(which, SpectrumCheck::Mto2 | SpectrumCheck::All) {
                if hi > 30 {
                    return Err(CliError::Cap("the MTO(2) check runs to degree 30 at most".into()));
                }
                reports.push(check_mto2_decomposition(hi));
            }
            Ok(reports_outcome(json!({ "n": n, "max_degree": hi, "check": which }), reports))
        }
        Command::Relations { max_degree } => {
            let hi = cfg.check_degree(max_degree.or(defaults.max_degree).unwrap_or(6))?;
            if hi < 1 {
                return Err(CliError::Usage("--max-degree must be at least 1".into()));
            }
            let table = relation_table(hi)?;
            let comparison = compare_with_published_table()?;
            let mut text = String::new();
            let mut csv = String::from("degree,relation\n");
            for (d, rels) in &table {
                for r in rels {
                    let _ = writeln!(text, "{d}: {r}");
                    let _ = writeln!(csv, "{d},{r}");
                }
            }
            let status = if comparison.pass { "matches" } else { "DIFFERS FROM" };
            let _ = writeln!(text, "degrees 1-6 {status} the published table");
            let flat: Vec<_> = table.values().flatten().collect();
            let mut o = Outcome::new(
                json!({ "max_degree": hi }),
                json!({ "relations": flat, "published_table": comparison }),
                text,
                csv,
            );
            o.pass = comparison.pass;
            Ok(o)
        }
        Command::Loop { n, max_degree, degree } => {
            let n = n.or(defaults.n).unwrap_or(2);
            let hi = max_degree.or(defaults.max_degree).unwrap_or(12);
            if n > 3 || hi > 15 {
                return Err(CliError::Cap("the loop-space recursion runs for n <= 3 and degrees <= 15".into()));
            }
            let report = exactness_recursion(n, hi);
            let mut text = String::new();
            let mut csv = String::from("n,degree,a,b\n");
            for l in &report.levels {
                let b: Vec<String> = l.b.iter().map(i64::to_string).collect();
                let mark = if l.hard { "" } else { " (reported only)" };
                let _ = writeln!(text, "a_{}  {}", l.n, l.a);
                let _ = writeln!(text, "b_{}  0: {}{mark}", l.n, b.join(" "));
                for (d, v) in l.a.iter() {
                    let _ = writeln!(csv, "{},{d},{v},{}", l.n, l.b[d as usize]);
                }
            }
            let _ = writeln!(text, "{}", if report.pass { "PASS" } else { "FAIL" });
            let histogram = degree.or(defaults.degree).map(|d| {
                let hist = weight_histogram(&m_dims(n, d.max(0)), d);
                let _ = writeln!(text, "weights at degree {d}: {hist:?}");
                hist
            });
            let pass = report.pass;
            let mut o = Outcome::new(
                json!({ "n": n, "max_degree": hi, "degree": degree }),
                json!({ "recursion": report, "weight_histogram": histogram }),
                text,
                csv,
            );
            o.pass = pass;
            Ok(o)
        }
        Command::VerifyAll { max_degree, words, seed, long } => {
            let mut opts = VerifyOptions { extended: *long, exec, ..VerifyOptions::default() };
            opts.max_degree = match max_degree.or(defaults.max_degree) {
                Some(m) => Some(cfg.check_degree(m)?),
                None => None,
            };
            if let Some(w) = words.or(defaults.words) {
                opts.words = w;
            }
            if let Some(s) = seed.or(defaults.seed) {
                opts.seed = s;
            }
            let reports = verify_all(&opts)?;
            Ok(reports_outcome(
                json!({ "max_degree": opts.max_degree, "words": opts.words, "seed": opts.seed, "long": opts.extended }),
                reports,
            ))
        }
    }
}

use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use tropevol_core::cells::enumerate_triangulation;
use tropevol_core::check::{run_suite, SuiteReport, SUITES};
use tropevol_core::ehrhart::{
    coeffs_via_formula, count_tropical, count_via_cells, degree_bound, log_map,
    tropical_ehrhart_poly,
};
use tropevol_core::tropical::format_rational;
use tropevol_core::volumes::volume_report;
use tropevol_core::{fixtures, Error, Rational, TropMatrix, TropScalar, VolumeOptions};

use crate::cli::{Format, InputArgs, MethodArg, OutputArgs};
use crate::plot;
use crate::CliError;

pub fn load(input: &InputArgs) -> Result<TropMatrix, CliError> {
    let m = match (&input.input, &input.fixture) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(path.display().to_string(), e))?;
            let m: TropMatrix = serde_json::from_str(&text)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            if input.allow_empty_columns {
                m.with_empty_columns_allowed()
            } else {
                m
            }
        }
        (None, Some(name)) => fixtures::by_name(name, input.l, input.k, input.d, &input.a)?,
        (None, None) => {
            return Err(CliError::Parse(
                "one of --input or --fixture is required".into(),
            ))
        }
    };
    m.validate_generators()?;
    Ok(m)
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, format!("{text}\n")).map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn count_value(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn format_or(output: &OutputArgs, allowed: &[Format], default: Format) -> Result<Format, CliError> {
    let f = output.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(CliError::Parse(
            format!("--format {f:?} is not available for this command").to_lowercase(),
        ));
    }
    Ok(f)
}

pub fn volume(
    input: &InputArgs,
    method: MethodArg,
    i: Option<usize>,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let format = format_or(output, &[Format::Json, Format::Text], Format::Json)?;
    let m = load(input)?;
    let d = m.rows();
    if let Some(i) = i {
        if i < 1 || i > d {
            return Err(Error::OutOfRange {
                index: i,
                lo: 1,
                hi: d,
            }
            .into());
        }
    }
    let r = volume_report(
        &m,
        &VolumeOptions {
            method: method.into(),
            guard: input.guard,
        },
    )?;
    if !r.verify_witnesses(&m)? {
        return Err(CliError::Failed(
            "a reported witness does not reproduce its value".into(),
        ));
    }
    let selected = i.map(|i| {
        let show = |x: Option<&TropScalar>| x.map_or(Value::Null, |v| Value::String(v.to_string()));
        json!({"i": i, "plus": show(r.tlvol_plus(i)), "minus": show(r.tlvol_minus(i))})
    });
    let text = match format {
        Format::Json => {
            let mut j = r.to_json();
            if let Some(s) = selected {
                j["selected"] = s;
            }
            pretty(&j)
        }
        _ => {
            let mut lines = vec![
                format!("d = {}, m = {}", r.d, r.m),
                format!("tlvol = {}", r.tlvol),
                format!("qtvol+ = {}", r.qtvol_plus.value),
            ];
            if let Some(t) = &r.tvol {
                lines.push(format!("tvol = {t}"));
            }
            for (p, q) in &r.i_volumes {
                lines.push(format!(
                    "tlvol_{0}^+ = {1}, tlvol_{0}^- = {2}",
                    p.i, p.value, q.value
                ));
            }
            if let Some((lo, hi)) = &r.tlsurf {
                lines.push(format!("tlsurf^- = {lo}, tlsurf^+ = {hi}"));
            }
            if let Some(s) = &r.discrete_surface {
                lines.push(format!("Log c_(d-1) = {s}"));
            }
            for n in &r.notes {
                lines.push(format!("note: {n}"));
            }
            lines.join("\n")
        }
    };
    emit(output, &text)
}

struct EhrhartRun {
    json: Value,
    agree: bool,
}

fn ehrhart_report(
    m: &TropMatrix,
    b: u32,
    kmax: Option<u32>,
    log: bool,
    only: Option<usize>,
    guard: u64,
) -> Result<EhrhartRun, CliError> {
    let d = m.rows();
    let (poly, verified) = tropical_ehrhart_poly(m, b, guard)?;
    let t = enumerate_triangulation(m)?;
    let formula = coeffs_via_formula(&t, b, guard)?;
    let mut agree = formula.coeffs == poly.coeffs;
    let mut counts = Vec::new();
    for k in 0..=kmax.unwrap_or(d as u32) {
        let (n, how) = match count_tropical(m, b, k, guard) {
            Ok(n) => (n, "brute"),
            Err(Error::Guard { .. }) => (count_via_cells(&t, b, k, guard)?, "cells"),
            Err(e) => return Err(e.into()),
        };
        let predicted = poly.evaluate(k);
        let matches = predicted == Rational::from_integer(n.into());
        agree &= matches;
        counts.push(json!({"k": k, "value": count_value(n), "method": how, "polynomial": format_rational(&predicted)}));
    }
    let mut j = json!({
        "b": b,
        "d": d,
        "coeffs": strings(&poly.coeffs),
        "counts": counts,
        "formula_coeffs": strings(&formula.coeffs),
        "verified_next": verified,
        "agree": agree,
    });
    if log {
        let bound = degree_bound(m);
        let samples = (2..=bound as u32 + 3)
            .map(|base| coeffs_via_formula(&t, base, guard).map(|c| (base, c)))
            .collect::<Result<Vec<_>, _>>()?;
        let rows: Vec<usize> = match only {
            Some(i) if i > d => {
                return Err(Error::OutOfRange {
                    index: i,
                    lo: 0,
                    hi: d,
                }
                .into())
            }
            Some(i) => vec![i],
            None => (0..=d).collect(),
        };
        let mut table = Vec::new();
        for i in rows {
            let s: Vec<(u32, Rational)> = samples
                .iter()
                .map(|(base, c)| (*base, c.coefficient(i)))
                .collect();
            let value = match log_map(&s, bound)? {
                Some(n) => TropScalar::int(n as i64),
                None => TropScalar::NegInf,
            };
            table.push(json!({"i": i, "log": value.to_string()}));
        }
        j["log"] = Value::Array(table);
    }
    Ok(EhrhartRun { json: j, agree })
}

pub fn ehrhart(
    input: &InputArgs,
    b: u32,
    kmax: Option<u32>,
    log: bool,
    i: Option<usize>,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let format = format_or(output, &[Format::Json, Format::Text], Format::Json)?;
    let m = load(input)?;
    let run = ehrhart_report(&m, b, kmax, log || i.is_some(), i, input.guard)?;
    let text = match format {
        Format::Json => pretty(&run.json),
        _ => {
            let j = &run.json;
            let list = |key: &str| -> String {
                j[key]
                    .as_array()
                    .map(|a| {
                        a.iter()
                            .filter_map(Value::as_str)
                            .collect::<Vec<_>>()
                            .join(", ")
                    })
                    .unwrap_or_default()
            };
            let mut lines = vec![
                format!("b = {b}"),
                format!("coefficients (interpolation) = {}", list("coeffs")),
                format!("coefficients (cell formula) = {}", list("formula_coeffs")),
            ];
            for c in j["counts"].as_array().into_iter().flatten() {
                lines.push(format!(
                    "k = {}: {} points ({})",
                    c["k"],
                    c["value"],
                    c["method"].as_str().unwrap_or("")
                ));
            }
            for row in j["log"].as_array().into_iter().flatten() {
                lines.push(format!(
                    "Log c_{} = {}",
                    row["i"],
                    row["log"].as_str().unwrap_or("")
                ));
            }
            lines.push(format!("agree = {}", run.agree));
            lines.join("\n")
        }
    };
    emit(output, &text)?;
    if !run.agree {
        return Err(CliError::Failed(
            "interpolated coefficients, cell formula and counts disagree".into(),
        ));
    }
    Ok(())
}

fn suite_lines(r: &SuiteReport) -> Vec<String> {
    let mut lines = vec![format!(
        "{}: {} ({} cases, {} checks, {} failed, {} divergences, {} warnings)",
        r.name,
        if r.passed() { "PASS" } else { "FAIL" },
        r.cases,
        r.checks,
        r.failed,
        r.divergences.len(),
        r.warnings.len()
    )];
    lines.extend(
        r.failures
            .iter()
            .map(|f| format!("  failure: {}", f.replace('\n', " "))),
    );
    lines.extend(
        r.divergences
            .iter()
            .map(|f| format!("  divergence: {}", f.replace('\n', " "))),
    );
    lines.extend(
        r.warnings
            .iter()
            .map(|f| format!("  warning: {}", f.replace('\n', " "))),
    );
    lines
}

pub fn check(
    seed: u64,
    suite: Option<&str>,
    cases: Option<usize>,
    list: bool,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let format = format_or(output, &[Format::Json, Format::Text], Format::Text)?;
    if list {
        let lines: Vec<String> = SUITES
            .iter()
            .map(|s| format!("{:<20} {:>4}  {}", s.name, s.default_cases, s.about))
            .collect();
        return emit(output, &lines.join("\n"));
    }
    let names: Vec<&str> = match suite {
        Some(n) => vec![n],
        None => SUITES.iter().map(|s| s.name).collect(),
    };
    let reports = names
        .iter()
        .map(|n| run_suite(n, seed, cases))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let text = match format {
        Format::Json => pretty(&json!({"seed": seed, "passed": passed, "suites": reports})),
        _ => {
            let mut lines = vec![format!("seed = {seed}")];
            lines.extend(reports.iter().flat_map(suite_lines));
            lines.push(if passed {
                "all suites passed".into()
            } else {
                "some suites failed".into()
            });
            lines.join("\n")
        }
    };
    emit(output, &text)?;
    if !passed {
        let failed: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.name.as_str())
            .collect();
        return Err(CliError::Failed(format!(
            "failed suites: {}",
            failed.join(", ")
        )));
    }
    Ok(())
}

pub fn plot(input: &InputArgs, b: u32, output: &OutputArgs) -> Result<(), CliError> {
    format_or(output, &[Format::Svg], Format::Svg)?;
    let m = load(input)?;
    let svg = plot::render(&m, b, input.guard)?;
    emit(output, &svg)
}

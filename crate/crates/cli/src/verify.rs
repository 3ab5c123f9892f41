use std::error::Error;
use std::process::ExitCode;

use toda_core::report::Report;
use toda_core::verification::{all_ade_report, e8_report, exponents_report};

use crate::format::{self, sci, OutputFormat, Style};
use crate::Scope;

fn report(scope: Scope, tol: Option<f64>) -> Report {
    match scope {
        Scope::E8Paper => e8_report(tol),
        Scope::AllAde => all_ade_report(tol),
        Scope::Exponents => exponents_report(),
    }
}

fn tolerance_text(t: Option<f64>) -> String {
    t.map(sci).unwrap_or_else(|| "exact".into())
}

pub fn run(scope: Scope, fmt: OutputFormat, tol: Option<f64>) -> Result<ExitCode, Box<dyn Error>> {
    if let Some(t) = tol {
        if t.is_nan() || t < 0.0 {
            eprintln!("toda: tolerance must be a nonnegative number, got {t}");
            return Ok(ExitCode::from(crate::USAGE));
        }
    }
    let r = report(scope, tol);
    match fmt {
        OutputFormat::Table => {
            let style = Style::detect();
            let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut text = String::new();
            for c in &r.checks {
                text.push_str(&format!(
                    "{}  {:<width$}  residual {:>9}  tolerance {:>8}\n      {}\n",
                    style.status(c.passed),
                    c.name,
                    sci(c.residual),
                    tolerance_text(c.tolerance),
                    c.detail,
                ));
            }
            let passed = r.checks.iter().filter(|c| c.passed).count();
            text.push_str(&format!(
                "{}: {passed}/{} checks passed\n",
                r.suite,
                r.checks.len()
            ));
            format::emit(&text)?;
        }
        OutputFormat::Json => format::write_json(&r)?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = r
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        c.passed.to_string(),
                        format::num(c.residual),
                        c.tolerance.map(format::num).unwrap_or_default(),
                        c.detail.clone(),
                    ]
                })
                .collect();
            format::write_csv(
                &["name", "passed", "residual", "tolerance", "detail"],
                &rows,
            )?;
        }
    }
    if !r.passed {
        for c in r.failures() {
            eprintln!("toda: check failed: {}", c.name);
        }
    }
    Ok(if r.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

use std::error::Error;
use std::process::ExitCode;

use serde::Serialize;
use toda_core::e8::GOLDEN_RATIO;
use toda_core::report::relative_error;
use toda_core::root_systems::AlgebraId;
use toda_core::toda_masses::{
    consistency_check, spectrum_method1, spectrum_method2, Consistency, MassNormalization, Spectrum,
};

use crate::format::{self, sig10, OutputFormat};
use crate::{MethodArg, NormalizeArg};

#[derive(Debug, Serialize)]
struct Ratio {
    method: String,
    numerator: usize,
    denominator: usize,
    ratio: f64,
    golden: bool,
}

#[derive(Debug, Serialize)]
struct Output {
    algebra: AlgebraId,
    golden_tolerance: f64,
    spectra: Vec<Spectrum>,
    ratios: Vec<Ratio>,
    consistency: Option<Consistency>,
}

fn normalization(n: NormalizeArg) -> MassNormalization {
    match n {
        NormalizeArg::Max => MassNormalization::HeaviestUnit,
        NormalizeArg::Absolute => MassNormalization::Absolute,
        NormalizeArg::First => MassNormalization::FirstParticle,
        NormalizeArg::Unit => MassNormalization::UnitNorm,
    }
}

/// Every pair once, heavier over lighter.
fn ratios(s: &Spectrum, tol: f64) -> Vec<Ratio> {
    let p = &s.particles;
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let (num, den) = if p[j].mass >= p[i].mass {
                (&p[j], &p[i])
            } else {
                (&p[i], &p[j])
            };
            let ratio = num.mass / den.mass;
            out.push(Ratio {
                method: s.method.to_string(),
                numerator: num.label,
                denominator: den.label,
                ratio,
                golden: relative_error(ratio, GOLDEN_RATIO) <= tol,
            });
        }
    }
    out
}

fn build(
    algebra: AlgebraId,
    method: MethodArg,
    normalize: NormalizeArg,
    tol: f64,
) -> Result<Output, Box<dyn Error>> {
    let mode = normalization(normalize);
    let mut spectra = Vec::new();
    if method != MethodArg::Massmatrix {
        spectra.push(spectrum_method1(algebra, mode)?);
    }
    if method != MethodArg::Pf {
        spectra.push(spectrum_method2(algebra, mode)?);
    }
    let consistency = match method {
        MethodArg::Both => Some(consistency_check(algebra)?),
        _ => None,
    };
    Ok(Output {
        algebra,
        golden_tolerance: tol,
        ratios: spectra.iter().flat_map(|s| ratios(s, tol)).collect(),
        spectra,
        consistency,
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn render_table(out: &Output) -> String {
    let mut text = String::new();
    for s in &out.spectra {
        text.push_str(&format!(
            "{} {} masses, {} (scale {})\n",
            out.algebra,
            s.method,
            s.normalization.description,
            sig10(s.normalization.scale)
        ));
        let rows: Vec<Vec<String>> = s
            .particles
            .iter()
            .map(|p| {
                vec![
                    p.label.to_string(),
                    opt(p.node),
                    p.component.map(sig10).unwrap_or_default(),
                    sig10(p.mass),
                    sig10(p.mass_squared),
                ]
            })
            .collect();
        text.push_str(&format::table(
            &["label", "node", "component", "mass", "mass^2"],
            &rows,
        ));
        text.push('\n');
        let method = s.method.to_string();
        let rows: Vec<Vec<String>> = out
            .ratios
            .iter()
            .filter(|r| r.method == method)
            .map(|r| {
                vec![
                    format!("m{}/m{}", r.numerator, r.denominator),
                    sig10(r.ratio),
                    if r.golden {
                        "golden".into()
                    } else {
                        String::new()
                    },
                ]
            })
            .collect();
        if !rows.is_empty() {
            text.push_str(&format!(
                "mass ratios (golden ratio within {} relative flagged)\n",
                format::sci(out.golden_tolerance)
            ));
            text.push_str(&format::table(&["pair", "ratio", "flag"], &rows));
            text.push('\n');
        }
    }
    if let Some(c) = &out.consistency {
        let status = if c.asserted {
            "bound enforced"
        } else {
            "reported only, not simply-laced"
        };
        text.push_str(&format!(
            "consistency: m^2/u^2 spread {}, fitted M {} ({status})\n",
            format::sci(c.spread),
            sig10(c.fitted_scale)
        ));
    }
    text
}

fn csv_rows(out: &Output) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for s in &out.spectra {
        for p in &s.particles {
            rows.push(vec![
                "particle".into(),
                s.method.to_string(),
                p.label.to_string(),
                opt(p.node),
                p.component.map(format::num).unwrap_or_default(),
                format::num(p.mass),
                format::num(p.mass_squared),
                String::new(),
                String::new(),
                String::new(),
            ]);
        }
    }
    for r in &out.ratios {
        rows.push(vec![
            "ratio".into(),
            r.method.clone(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            format!("{}/{}", r.numerator, r.denominator),
            format::num(r.ratio),
            r.golden.to_string(),
        ]);
    }
    if let Some(c) = &out.consistency {
        for (name, v) in [("spread", c.spread), ("fitted_scale", c.fitted_scale)] {
            let mut row = vec![String::new(); 10];
            row[0] = "consistency".into();
            row[1] = "both".into();
            row[7] = name.into();
            row[8] = format::num(v);
            rows.push(row);
        }
    }
    rows
}

pub fn run(
    algebra: AlgebraId,
    method: MethodArg,
    normalize: NormalizeArg,
    fmt: OutputFormat,
    tol: f64,
) -> Result<ExitCode, Box<dyn Error>> {
    let out = build(algebra, method, normalize, tol)?;
    match fmt {
        OutputFormat::Table => format::emit(&render_table(&out))?,
        OutputFormat::Json => format::write_json(&out)?,
        OutputFormat::Csv => format::write_csv(
            &[
                "record",
                "method",
                "label",
                "node",
                "component",
                "mass",
                "mass_squared",
                "pair",
                "value",
                "golden",
            ],
            &csv_rows(&out),
        )?,
    }
    Ok(ExitCode::SUCCESS)
}

use std::error::Error;
use std::process::ExitCode;

use serde_json::json;
use toda_core::exact_poly::RationalPolynomial;
use toda_core::root_systems::{AlgebraId, RootSystem};
use toda_core::spectral;
use toda_core::toda_masses::mass_matrix_for;

use crate::dynkin;
use crate::format::{self, OutputFormat};
use crate::What;

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn column_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

fn polynomial(p: &RationalPolynomial, label: &str, fmt: OutputFormat) -> std::io::Result<()> {
    let desc: Vec<String> = p
        .coefficients()
        .iter()
        .rev()
        .map(|c| c.to_string())
        .collect();
    let degree = desc.len().saturating_sub(1);
    match fmt {
        OutputFormat::Table => format::emit(&format!("{p}\n"))?,
        OutputFormat::Json => format::write_json(&json!({
            "matrix": label,
            "polynomial": p.to_string(),
            "coefficients_descending": desc,
        }))?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = desc
                .iter()
                .enumerate()
                .map(|(k, c)| vec![(degree - k).to_string(), c.clone()])
                .collect();
            format::write_csv(&["power", "coefficient"], &rows)?
        }
    }
    Ok(())
}

pub fn run(algebra: AlgebraId, what: What, fmt: OutputFormat) -> Result<ExitCode, Box<dyn Error>> {
    let rs = RootSystem::for_algebra(algebra);
    let n = rs.rank();
    let name = algebra.to_string();
    match what {
        What::Cartan => {
            let rows: Vec<Vec<String>> = rs
                .cartan()
                .rows()
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect();
            match fmt {
                OutputFormat::Table => {
                    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
                    let mut text = String::new();
                    for r in &rows {
                        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
                        text.push_str(&cells.join(" "));
                        text.push('\n');
                    }
                    format::emit(&text)?
                }
                OutputFormat::Json => format::write_json(&json!({
                    "algebra": name,
                    "cartan": rs.cartan().rows(),
                }))?,
                OutputFormat::Csv => {
                    let header = column_names("c", n);
                    let header: Vec<&str> = header.iter().map(String::as_str).collect();
                    format::write_csv(&header, &rows)?
                }
            }
        }
        What::Roots => {
            let roots = rs.positive_roots();
            let height = |r: &[i64]| r.iter().sum::<i64>();
            match fmt {
                OutputFormat::Table => {
                    let mut text = format!("{name}: {} positive roots\n", roots.len());
                    let rows: Vec<Vec<String>> = roots
                        .iter()
                        .enumerate()
                        .map(|(k, r)| vec![(k + 1).to_string(), height(r).to_string(), join(r)])
                        .collect();
                    text.push_str(&format::table(&["index", "height", "coefficients"], &rows));
                    format::emit(&text)?
                }
                OutputFormat::Json => format::write_json(&json!({
                    "algebra": name,
                    "count": roots.len(),
                    "highest_root": rs.highest_root(),
                    "positive_roots": roots,
                }))?,
                OutputFormat::Csv => {
                    let mut header = vec!["height".to_string()];
                    header.extend(column_names("c", n));
                    let header: Vec<&str> = header.iter().map(String::as_str).collect();
                    let rows: Vec<Vec<String>> = roots
                        .iter()
                        .map(|r| {
                            std::iter::once(height(r).to_string())
                                .chain(r.iter().map(|v| v.to_string()))
                                .collect()
                        })
                        .collect();
                    format::write_csv(&header, &rows)?
                }
            }
        }
        What::CharpolyA => polynomial(&rs.cartan().adjacency_exact().char_poly(), "2I - C", fmt)?,
        What::CharpolyB => polynomial(&mass_matrix_for(&rs).kg.char_poly(), "mass matrix", fmt)?,
        What::Dynkin => {
            let diagram = dynkin::render(rs.cartan());
            match fmt {
                OutputFormat::Table => format::emit(&diagram)?,
                OutputFormat::Json => format::write_json(&json!({
                    "algebra": name,
                    "diagram": diagram,
                }))?,
                OutputFormat::Csv => {
                    let c = rs.cartan();
                    let mut rows = Vec::new();
                    for i in 0..n {
                        for j in i + 1..n {
                            if c.get(i, j) != 0 {
                                rows.push(vec![
                                    (i + 1).to_string(),
                                    (j + 1).to_string(),
                                    c.get(i, j).to_string(),
                                    c.get(j, i).to_string(),
                                ]);
                            }
                        }
                    }
                    format::write_csv(&["node_i", "node_j", "c_ij", "c_ji"], &rows)?
                }
            }
        }
        What::Exponents => {
            let exps = spectral::exponents(&rs)?;
            let h = rs.coxeter_number();
            match fmt {
                OutputFormat::Table => format::emit(&format!(
                    "Coxeter number {h}\nexponents {}\nmarks {}\n",
                    join(&exps),
                    join(rs.marks())
                ))?,
                OutputFormat::Json => format::write_json(&json!({
                    "algebra": name,
                    "coxeter_number": h,
                    "exponents": exps,
                    "marks": rs.marks(),
                }))?,
                OutputFormat::Csv => {
                    let rows: Vec<Vec<String>> = exps.iter().map(|e| vec![e.to_string()]).collect();
                    format::write_csv(&["exponent"], &rows)?
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

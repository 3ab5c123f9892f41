//! Aggregate verification suites: the E8 identities, the exponent tables and
//! the simply-laced cross-method comparison.

use crate::classical;
use crate::e8;
use crate::exact_poly::poly_divide_exact;
use crate::radicals;
use crate::report::{override_tolerance, relative_error, Check, Report};
use crate::root_systems::{AlgebraId, Family, RootSystem};
use crate::spectral::{adjacency_eigenvalues, recover_exponents};
use crate::toda_masses::{self, MassNormalization, CONSISTENCY_TOL, IDENTITY_TOL};

/// Distance allowed between computed and four-decimal printed components.
pub const PRINTED_COMPONENT_TOL: f64 = 5e-5;

fn e8_system() -> RootSystem {
    RootSystem::for_algebra("E8".parse().expect("valid"))
}

fn group(name: &str, parts: Vec<Check>, tol: Option<f64>, detail: &str) -> Check {
    Check::combine(name, override_tolerance(parts, tol), detail)
}

fn failed(name: &str, err: impl std::fmt::Display) -> Check {
    Check::exact(name, false, err.to_string())
}

fn adjacency_polynomial_check(rs: &RootSystem) -> Check {
    let p = rs.cartan().adjacency_exact().char_poly();
    let want = e8::adjacency_char_poly();
    let adjacency_ok = rs
        .cartan()
        .adjacency()
        .iter()
        .zip(&e8::ADJACENCY)
        .all(|(a, b)| a == b);
    Check::combine(
        "characteristic polynomial of A",
        vec![
            Check::exact(
                "A = 2I - C in node order",
                adjacency_ok,
                "adjacency of the E8 diagram",
            ),
            Check::exact(
                "det(x - A)",
                p == want,
                format!("computed {p}, expected {want}"),
            ),
        ],
        format!("det(x - A) = {p}"),
    )
}

fn eigenvalue_check(rs: &RootSystem, tol: Option<f64>) -> Check {
    let name = "eigenvalues 2cos(a pi/30) and their radicals";
    let eig = match adjacency_eigenvalues(rs) {
        Ok(e) => e,
        Err(e) => return failed(name, e),
    };
    let theta = e8::theta();
    let mut expected: Vec<f64> = e8::EXPONENTS
        .iter()
        .map(|&a| 2.0 * (a as f64 * theta).cos())
        .collect();
    expected.sort_by(|a, b| b.total_cmp(a));
    let dev = eig
        .iter()
        .zip(&expected)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    let pairing = (0..4)
        .map(|j| (eig[j] + eig[7 - j]).abs())
        .fold(0.0, f64::max);
    let exps = recover_exponents(&eig, e8::COXETER_NUMBER);
    let mut parts = vec![
        Check::numeric(
            "x_j = 2cos(a_j pi/30)",
            dev,
            1e-10,
            format!("max deviation {dev:.2e}"),
        ),
        Check::numeric(
            "x_(9-j) = -x_j",
            pairing,
            1e-10,
            format!("max |x_j + x_(9-j)| {pairing:.2e}"),
        ),
        match exps {
            Ok(a) => Check::exact(
                "exponents 1,7,11,13,17,19,23,29",
                a == e8::EXPONENTS,
                format!("recovered {a:?}"),
            ),
            Err(e) => failed("exponents", e),
        },
    ];
    parts.extend(radicals::eigenvalue_radical_checks());
    group(
        name,
        parts,
        tol,
        "spectrum of A, exponents and the x_1..x_4 radicals",
    )
}

fn perron_check(u: &[f64], tol: Option<f64>) -> Check {
    let printed = u
        .iter()
        .zip(&e8::PERRON_PRINTED)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let closed = u
        .iter()
        .zip(&e8::perron_closed_form())
        .map(|(a, b)| relative_error(*a, *b))
        .fold(0.0, f64::max);
    let lambda = 2.0 * e8::theta().cos();
    let recurrence = (0..8)
        .map(|j| {
            let lhs: f64 = (0..8).map(|i| u[i] * e8::ADJACENCY[i][j] as f64).sum();
            (lhs - lambda * u[j]).abs()
        })
        .fold(0.0, f64::max);
    let parts = vec![
        Check::numeric(
            "u matches printed four-decimal values",
            printed,
            PRINTED_COMPONENT_TOL,
            format!("u = {u:.6?}"),
        ),
        Check::numeric(
            "u matches trigonometric closed form",
            closed,
            1e-12,
            format!("max relative {closed:.2e}"),
        ),
        Check::numeric(
            "u A = 2cos(pi/30) u node by node",
            recurrence,
            1e-10,
            format!("max residual {recurrence:.2e}"),
        ),
    ];
    group("Perron-Frobenius vector", parts, tol, "u_5 = 1")
}

fn mass_polynomial_check(rs: &RootSystem) -> Check {
    let p = toda_masses::mass_matrix_for(rs).kg.char_poly();
    let want = e8::mass_char_poly();
    Check::exact(
        "characteristic polynomial of the mass matrix",
        p == want,
        format!("det(x - KG) = {p}"),
    )
}

fn factorization_check(tol: Option<f64>) -> Check {
    let p = e8::mass_char_poly();
    let p1 = e8::mass_factor_p1();
    let p2 = e8::mass_factor_p2();
    let mut parts = vec![Check::exact(
        "P = P1 P2",
        &p1 * &p2 == p,
        format!("P1 = {p1}, P2 = {p2}"),
    )];
    parts.push(match poly_divide_exact(&p, &p1) {
        Ok((q, r)) => Check::exact(
            "P / P1 = P2, remainder 0",
            r.is_zero() && q == p2,
            format!("quotient {q}, remainder {r}"),
        ),
        Err(e) => failed("P / P1", e),
    });
    parts.push(
        match toda_masses::spectrum_method1(
            "E8".parse().expect("valid"),
            MassNormalization::Absolute,
        ) {
            Ok(s) => toda_masses::root_partition_check(&s, IDENTITY_TOL),
            Err(e) => failed("root partition", e),
        },
    );
    group(
        "factorization P = P1 P2 and root partition",
        parts,
        tol,
        "exact division and root sets",
    )
}

/// The E8 suite: one check per published identity group.
pub fn e8_report(tol: Option<f64>) -> Report {
    let rs = e8_system();
    let id = rs.algebra().expect("named");
    let mut checks = vec![adjacency_polynomial_check(&rs), eigenvalue_check(&rs, tol)];

    let u = toda_masses::e8_perron();
    let fitted = toda_masses::consistency_check(id).map(|c| c.fitted_scale);
    match (&u, &fitted) {
        (Ok(u), Ok(m)) => {
            checks.push(perron_check(u, tol));
            checks.push(group(
                "golden-ratio mass ratios",
                toda_masses::golden_ratio_checks(u, IDENTITY_TOL),
                tol,
                "r = (1+sqrt5)/2 = 2cos(pi/5)",
            ));
            checks.push(group(
                "trigonometric radicals",
                radicals::trig_radical_checks(),
                tol,
                "2cos and 2sin of pi/5, pi/10, pi/15, pi/30",
            ));
            checks.push(mass_polynomial_check(&rs));
            checks.push(factorization_check(tol));
            let rest = override_tolerance(
                vec![
                    toda_masses::product_identity_check(u, IDENTITY_TOL),
                    toda_masses::constant_term_check(u, *m, IDENTITY_TOL),
                    toda_masses::mass_scale_check(*m, IDENTITY_TOL),
                ],
                tol,
            );
            checks.extend(rest);
        }
        _ => {
            let err = u
                .err()
                .map(|e| e.to_string())
                .or(fitted.err().map(|e| e.to_string()));
            checks.push(failed(
                "Perron-Frobenius and mass data",
                err.unwrap_or_default(),
            ));
        }
    }
    checks.push(group(
        "mass radicals",
        radicals::mass_radical_checks(),
        tol,
        "2 e_j^2 are the squared masses; e_j/u_j is constant",
    ));
    Report::new("e8-paper", checks)
}

/// Exponents recovered from the spectrum of `2I - C` against the classical
/// tables, for every algebra of rank at most 8.
pub fn exponents_report() -> Report {
    let checks = AlgebraId::all_up_to_rank(8)
        .into_iter()
        .map(|id| {
            let rs = RootSystem::for_algebra(id);
            let name = format!("{id} exponents");
            let want = classical::exponents(id);
            match crate::spectral::exponents(&rs) {
                Ok(got) => Check::exact(
                    name,
                    got == want && rs.coxeter_number() == classical::coxeter_number(id),
                    format!("h = {}, exponents {got:?}", rs.coxeter_number()),
                ),
                Err(e) => failed(&name, e),
            }
        })
        .collect();
    Report::new("exponents", checks)
}

/// `A1..A8, D3..D8, E6, E7, E8`.
pub fn ade_algebras() -> Vec<AlgebraId> {
    let mut v: Vec<AlgebraId> = AlgebraId::simply_laced_up_to_rank(8);
    v.sort_by_key(|a| (a.family() != Family::A, a.family() != Family::D, a.rank()));
    v
}

/// Spread of `m_j^2 / u_j^2` for every simply-laced algebra of rank at most 8.
pub fn all_ade_report(tol: Option<f64>) -> Report {
    let limit = tol.unwrap_or(CONSISTENCY_TOL);
    let checks = ade_algebras()
        .into_iter()
        .map(|id| {
            let name = format!("{id} m^2/u^2 spread");
            match toda_masses::consistency_check(id) {
                Ok(c) => {
                    Check::numeric(name, c.spread, limit, format!("M = {:.12}", c.fitted_scale))
                }
                Err(toda_masses::TodaError::Inconsistent { spread, .. }) => {
                    Check::numeric(name, spread, limit, "methods disagree")
                }
                Err(e) => failed(&name, e),
            }
        })
        .collect();
    Report::new("all-ade", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e8_report_has_eleven_passing_checks() {
        let r = e8_report(None);
        assert_eq!(r.checks.len(), 11);
        assert!(r.passed, "{:#?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn tight_tolerance_override_fails_numeric_checks() {
        let r = e8_report(Some(0.0));
        assert!(!r.passed);
        // exact checks are unaffected
        assert!(r.checks[0].passed);
        assert!(r.checks[5].passed);
    }

    #[test]
    fn exponent_report_covers_all_algebras() {
        let r = exponents_report();
        assert_eq!(r.checks.len(), AlgebraId::all_up_to_rank(8).len());
        assert!(r.passed);
    }

    #[test]
    fn ade_report_lists_seventeen_algebras() {
        let names: Vec<String> = ade_algebras().iter().map(|a| a.to_string()).collect();
        assert_eq!(names.len(), 17);
        assert_eq!(names[0], "A1");
        assert_eq!(names[8], "D3");
        assert_eq!(names[16], "E8");
        assert!(all_ade_report(None).passed);
    }
}

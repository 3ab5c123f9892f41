//! Named pass/fail checks shared by the verification suites.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Observed error; `0` for a satisfied exact check, infinite for a
    /// failed one.
    pub residual: f64,
    /// `None` marks an exact (rational) comparison.
    pub tolerance: Option<f64>,
    pub detail: String,
}

impl Check {
    pub fn numeric(
        name: impl Into<String>,
        residual: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            passed: residual.is_finite() && residual <= tolerance,
            residual,
            tolerance: Some(tolerance),
            detail: detail.into(),
        }
    }

    pub fn exact(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: holds,
            residual: if holds { 0.0 } else { f64::INFINITY },
            tolerance: None,
            detail: detail.into(),
        }
    }

    /// Folds several sub-checks into one named check, reporting the worst
    /// residual relative to its tolerance.
    pub fn combine(name: impl Into<String>, parts: Vec<Check>, detail: impl Into<String>) -> Self {
        let passed = parts.iter().all(|c| c.passed);
        let worst = parts
            .iter()
            .max_by(|a, b| a.severity().total_cmp(&b.severity()))
            .cloned();
        let mut detail = detail.into();
        for p in parts.iter().filter(|p| !p.passed) {
            detail.push_str(&format!("; failed: {} ({})", p.name, p.detail));
        }
        match worst {
            Some(w) => Self {
                name: name.into(),
                passed,
                residual: w.residual,
                tolerance: w.tolerance,
                detail,
            },
            None => Self::exact(name, true, detail),
        }
    }

    fn severity(&self) -> f64 {
        match self.tolerance {
            _ if !self.passed => f64::INFINITY,
            Some(t) if t > 0.0 => self.residual / t,
            _ => 0.0,
        }
    }
}

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_error(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Replaces the tolerance of every numeric check by `tol` and re-evaluates
/// it; exact checks are left alone.
pub fn override_tolerance(checks: Vec<Check>, tol: Option<f64>) -> Vec<Check> {
    let Some(tol) = tol else { return checks };
    checks
        .into_iter()
        .map(|c| match c.tolerance {
            Some(_) => Check::numeric(c.name, c.residual, tol, c.detail),
            None => c,
        })
        .collect()
}

/// A named list of checks.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Self {
        Self {
            suite: suite.into(),
            passed: all_passed(&checks),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

use std::path::Path;

use fiblie_core::free_lie::{witt_dim, HopfOracle, HOPF_MAX_DEGREE};
use fiblie_core::homology::ChainComplex;
use fiblie_core::{AlgebraId, Execution};

use crate::cache::CacheFile;
use crate::checks::{self, Suite};
use crate::report::{CheckResult, Report, Row, Status};
use crate::CliError;

pub fn dims(algebra: AlgebraId, max_degree: usize, exec: Execution) -> Report {
    let mut report = Report::new(max_degree, Some(algebra.to_string()));
    report.rows = exec
        .map_degrees(1..=max_degree, |d| algebra.member_basis(d).len())
        .into_iter()
        .enumerate()
        .map(|(i, dim)| Row {
            degree: i + 1,
            dim: Some(dim),
            ..Default::default()
        })
        .collect();
    report
}

/// Per-degree `dim H_n` with running partial sums and, optionally, cycle
/// representatives in canonical encoding.
pub fn homology_rows(
    algebra: AlgebraId,
    n: usize,
    max_degree: usize,
    exec: Execution,
    representatives: bool,
) -> Vec<Row> {
    let complex = ChainComplex::new(algebra, max_degree);
    let spaces = exec.map_degrees(1..=max_degree, |d| {
        let group = complex.group(n, d);
        let reps = representatives.then(|| group.representatives().iter().map(ToString::to_string).collect());
        (group.dim(), reps)
    });
    let mut total = 0;
    spaces
        .into_iter()
        .enumerate()
        .map(|(i, (dim, reps))| {
            total += dim;
            Row {
                degree: i + 1,
                dim: Some(dim),
                partial_sum: Some(total),
                representatives: reps,
                ..Default::default()
            }
        })
        .collect()
}

fn consistency(algebra: AlgebraId, n: usize, max_degree: usize, exec: Execution) -> CheckResult {
    let complex = ChainComplex::new(algebra, max_degree);
    let bad: Vec<usize> = exec
        .map_degrees(1..=max_degree, |d| match n {
            1 => {
                let (a, b) = complex.h1_routes(d);
                a == b && a == complex.group(1, d).dim()
            }
            _ => {
                let group = complex.group(2, d);
                complex.d2_d3_vanishes(d)
                    && group.representatives().iter().all(|r| {
                        complex.d2(r).is_zero() && group.is_boundary(r) == Some(false)
                    })
            }
        })
        .into_iter()
        .enumerate()
        .filter(|(_, ok)| !ok)
        .map(|(i, _)| i + 1)
        .collect();
    let (status, details) = if bad.is_empty() {
        (Status::Pass, "consistent in every degree".to_string())
    } else {
        (Status::Fail, format!("inconsistent in degrees {bad:?}"))
    };
    CheckResult {
        name: format!("h{n}-consistency"),
        status,
        degree_range: (1, max_degree),
        details,
    }
}

pub fn homology(algebra: AlgebraId, n: usize, max_degree: usize, exec: Execution) -> Result<Report, CliError> {
    if !(1..=2).contains(&n) {
        return Err(CliError::Usage(format!("homological degree must be 1 or 2, got {n}")));
    }
    let mut report = Report::new(max_degree, Some(algebra.to_string()));
    report.rows = homology_rows(algebra, n, max_degree, exec, n == 2);
    report.checks.push(consistency(algebra, n, max_degree, exec));
    Ok(report)
}

pub fn verify(suite: Suite, only: Option<&str>, max_degree: usize, exec: Execution) -> Result<Report, CliError> {
    let selected = checks::select(suite, only).map_err(CliError::Usage)?;
    let mut report = Report::new(max_degree, None);
    report.checks = checks::run(selected, max_degree, exec);
    Ok(report)
}

pub fn hopf(max_degree: usize, exec: Execution) -> Result<Report, CliError> {
    if max_degree > HOPF_MAX_DEGREE {
        return Err(CliError::Usage(format!(
            "hopf is limited to --max-degree {HOPF_MAX_DEGREE}, got {max_degree}"
        )));
    }
    let mut report = Report::new(max_degree, Some(AlgebraId::L.to_string()));
    let ce = ChainComplex::new(AlgebraId::L, max_degree).dims(2, exec);
    let oracle = if max_degree >= 2 {
        Some(HopfOracle::new(max_degree)?)
    } else {
        None
    };
    let mut disagreements = Vec::new();
    for d in 1..=max_degree {
        let mut row = Row {
            degree: d,
            witt: Some(witt_dim(d)),
            dim_l: Some(AlgebraId::L.member_basis(d).len()),
            ..Default::default()
        };
        if let (Some(oracle), true) = (&oracle, d >= 2) {
            let h = oracle.row(d).h2;
            row.hopf_h2 = Some(h);
            row.ce_h2 = Some(ce[d - 1]);
            row.agree = Some(h == ce[d - 1]);
            if h != ce[d - 1] {
                disagreements.push(d);
            }
        }
        report.rows.push(row);
    }
    report.checks.push(CheckResult {
        name: "hopf-vs-ce".into(),
        status: if disagreements.is_empty() { Status::Pass } else { Status::Fail },
        degree_range: (2, max_degree),
        details: if disagreements.is_empty() {
            "all rows agree".into()
        } else {
            format!("disagreement in degrees {disagreements:?}")
        },
    });
    Ok(report)
}

pub fn cache_write(path: &Path, algebra: AlgebraId, max_degree: usize) -> Result<CacheFile, CliError> {
    let cache = CacheFile::build(algebra, max_degree);
    cache.write(path)?;
    Ok(cache)
}

/// Loads a cache and checks every entry against a fresh enumeration.
pub fn cache_read(path: &Path) -> Result<Report, CliError> {
    let cache = CacheFile::read(path)?;
    let bases = cache.decode()?;
    let mismatches = CacheFile::mismatches(&bases);
    let max_degree = bases.iter().map(|(_, d, _)| *d).max().unwrap_or(0);
    let algebras: std::collections::BTreeSet<String> = bases.iter().map(|(a, _, _)| a.to_string()).collect();
    let mut report = Report::new(max_degree, Some(algebras.into_iter().collect::<Vec<_>>().join(",")));
    report.rows = bases
        .iter()
        .map(|(_, d, basis)| Row {
            degree: *d,
            dim: Some(basis.len()),
            ..Default::default()
        })
        .collect();
    report.checks.push(CheckResult {
        name: "cache-matches-enumeration".into(),
        status: if mismatches.is_empty() { Status::Pass } else { Status::Fail },
        degree_range: (1, max_degree),
        details: if mismatches.is_empty() {
            format!("{} entries reproduce the enumeration", bases.len())
        } else {
            let cells: Vec<String> = mismatches.iter().map(|(a, d)| format!("{a}@{d}")).collect();
            format!("stale entries: {}", cells.join(" "))
        },
    });
    Ok(report)
}

//! CSV, JSON and console output for suite results.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::{plot, SuiteResult, SuiteRow, Trajectory};
use crate::calibration::CalibrationReport;
use crate::error::{ModelError, Result};

/// File-name-safe form of a scenario label.
pub fn slug(label: &str) -> String {
    let s: String = label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '.' {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect();
    if s.is_empty() {
        "scenario".into()
    } else {
        s
    }
}

fn csv_err(path: &Path, e: csv::Error) -> ModelError {
    ModelError::Output {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> ModelError + '_ {
    move |source| ModelError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_trajectory_csv(tr: &Trajectory, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_err(path, e))?;
    for r in &tr.records {
        w.serialize(r).map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn write_summary_csv(rows: &[SuiteRow], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_err(path, e))?;
    for r in rows {
        w.serialize(r).map_err(|e| csv_err(path, e))?;
    }
    w.flush().map_err(io_err(path))
}

pub fn write_calibration_json(report: &CalibrationReport, path: &Path) -> Result<()> {
    fs::write(path, report.to_json()).map_err(io_err(path))
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

/// Plain-text summary table.
pub fn format_table(rows: &[SuiteRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:>10} {:>8} {:>13} {:>15} {:>12} {:>14}",
        "scenario",
        "AI impact",
        "k",
        "intervention",
        "avoid disaster",
        "switch year",
        "disaster year"
    );
    for r in rows {
        let impact = r.gdp_ai_10yr.map(|g| format!("{:.1}%", 100.0 * g));
        let years = r.intervention_years.map(|y| format!("{y} years"));
        let _ = writeln!(
            out,
            "{:<14} {:>10} {:>8.4} {:>13} {:>15} {:>12} {:>14}",
            r.label,
            opt(impact),
            r.k,
            opt(years),
            if r.avoid_disaster { "Yes" } else { "No" },
            opt(r.switch_year),
            opt(r.disaster_year),
        );
    }
    out
}

/// Writes one CSV per trajectory, `summary.csv`, optionally
/// `calibration.json` and the figures. Returns the files written.
pub fn emit_outputs(
    suite: &SuiteResult,
    report: Option<&CalibrationReport>,
    out_dir: &Path,
    emit_plots: bool,
) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    let mut written = Vec::new();
    let trajectories: Vec<&Trajectory> = suite.trajectories().collect();
    for tr in &trajectories {
        let path = out_dir.join(format!("{}.csv", slug(&tr.label)));
        write_trajectory_csv(tr, &path)?;
        written.push(path);
    }
    let path = out_dir.join("summary.csv");
    write_summary_csv(&suite.rows(), &path)?;
    written.push(path);
    if let Some(report) = report {
        let path = out_dir.join("calibration.json");
        write_calibration_json(report, &path)?;
        written.push(path);
    }
    if emit_plots {
        written.extend(plot::write_figures(&trajectories, out_dir)?);
    }
    Ok(written)
}

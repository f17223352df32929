//! SVG line charts of the recorded quantities, all scenarios overlaid.

use std::path::{Path, PathBuf};

use plotters::prelude::*;

use super::{PeriodRecord, Trajectory};
use crate::error::{ModelError, Result};

struct Figure {
    file: &'static str,
    title: &'static str,
    y_label: &'static str,
    value: fn(&PeriodRecord) -> f64,
}

const FIGURES: [Figure; 6] = [
    Figure {
        file: "research_share.svg",
        title: "Share of scientists in the clean sector",
        y_label: "s_c",
        value: |r| r.s_c,
    },
    Figure {
        file: "dirty_input.svg",
        title: "Production of dirty input",
        y_label: "log10 Y_d",
        value: |r| r.y_d.log10(),
    },
    Figure {
        file: "clean_output_share.svg",
        title: "Share of clean input in final good production",
        y_label: "clean share",
        value: |r| r.clean_share,
    },
    Figure {
        file: "consumption.svg",
        title: "Total consumption",
        y_label: "log10 C",
        value: |r| r.c.log10(),
    },
    Figure {
        file: "temperature.svg",
        title: "Increase in temperature",
        y_label: "degrees C",
        value: |r| r.delta,
    },
    Figure {
        file: "environment.svg",
        title: "Quality of the environment",
        y_label: "S (ppm)",
        value: |r| r.s,
    },
];

const PALETTE: [RGBColor; 6] = [
    RGBColor(31, 119, 180),
    RGBColor(255, 127, 14),
    RGBColor(44, 160, 44),
    RGBColor(214, 39, 40),
    RGBColor(148, 103, 189),
    RGBColor(140, 86, 75),
];

fn draw(
    fig: &Figure,
    trajectories: &[&Trajectory],
    path: &Path,
) -> std::result::Result<(), String> {
    let series: Vec<(&str, Vec<(f64, f64)>)> = trajectories
        .iter()
        .map(|tr| {
            let pts = tr
                .records
                .iter()
                .map(|r| (r.year, (fig.value)(r)))
                .filter(|(_, y)| y.is_finite())
                .collect();
            (tr.label.as_str(), pts)
        })
        .collect();

    let (mut x_max, mut y_min, mut y_max) = (1.0f64, f64::INFINITY, f64::NEG_INFINITY);
    for (_, pts) in &series {
        for &(x, y) in pts {
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
    }
    if !y_min.is_finite() {
        (y_min, y_max) = (0.0, 1.0);
    }
    let pad = ((y_max - y_min) * 0.05).max(1e-9);

    let root = SVGBackend::new(path, (900, 540)).into_drawing_area();
    root.fill(&WHITE).map_err(|e| e.to_string())?;
    let mut chart = ChartBuilder::on(&root)
        .caption(fig.title, ("sans-serif", 22))
        .margin(12)
        .x_label_area_size(45)
        .y_label_area_size(70)
        .build_cartesian_2d(0.0..x_max, (y_min - pad)..(y_max + pad))
        .map_err(|e| e.to_string())?;
    chart
        .configure_mesh()
        .x_desc("years")
        .y_desc(fig.y_label)
        .draw()
        .map_err(|e| e.to_string())?;
    for (i, (label, pts)) in series.into_iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        chart
            .draw_series(LineSeries::new(pts, color.stroke_width(2)))
            .map_err(|e| e.to_string())?
            .label(label)
            .legend(move |(x, y)| {
                PathElement::new(vec![(x, y), (x + 20, y)], color.stroke_width(2))
            });
    }
    chart
        .configure_series_labels()
        .background_style(WHITE.mix(0.85))
        .border_style(BLACK)
        .draw()
        .map_err(|e| e.to_string())?;
    root.present().map_err(|e| e.to_string())
}

/// Writes the six figures into `out_dir` and returns their paths.
pub fn write_figures(trajectories: &[&Trajectory], out_dir: &Path) -> Result<Vec<PathBuf>> {
    FIGURES
        .iter()
        .map(|fig| {
            let path = out_dir.join(fig.file);
            draw(fig, trajectories, &path).map_err(|message| ModelError::Output {
                path: path.clone(),
                message,
            })?;
            Ok(path)
        })
        .collect()
}

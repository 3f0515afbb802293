//! Minimal hand-rolled SVG charts. Charts are regenerable views over the
//! CSVs: same input, byte-identical output, fixed 960x540 canvas.

use std::fmt::Write as _;

pub const WIDTH: f64 = 960.0;
pub const HEIGHT: f64 = 540.0;

const MARGIN_LEFT: f64 = 90.0;
const MARGIN_RIGHT: f64 = 180.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 60.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];

/// Floor for log-scaled error values (errors can be exactly zero).
pub const LOG_FLOOR: f64 = 1e-16;

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() >= 0.01 && v.abs() < 10_000.0 {
        let s = format!("{v:.3}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        format!("{v:.1e}")
    }
}

struct Axis {
    min: f64,
    max: f64,
    log: bool,
}

impl Axis {
    fn from_values(values: impl Iterator<Item = f64>, log: bool) -> Axis {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in values {
            let v = if log { v.max(LOG_FLOOR).log10() } else { v };
            min = min.min(v);
            max = max.max(v);
        }
        if !min.is_finite() || !max.is_finite() {
            min = 0.0;
            max = 1.0;
        }
        if max - min < 1e-12 {
            min -= 0.5;
            max += 0.5;
        }
        Axis { min, max, log }
    }

    fn place(&self, v: f64) -> f64 {
        let v = if self.log { v.max(LOG_FLOOR).log10() } else { v };
        (v - self.min) / (self.max - self.min)
    }

    fn ticks(&self) -> Vec<(f64, String)> {
        let count = 5usize;
        (0..=count)
            .map(|i| {
                let frac = i as f64 / count as f64;
                let v = self.min + frac * (self.max - self.min);
                let label = if self.log {
                    format!("1e{v:.1}")
                } else {
                    fmt_tick(v)
                };
                (frac, label)
            })
            .collect()
    }
}

fn header(title: &str) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    )
    .unwrap();
    writeln!(
        s,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>"
    )
    .unwrap();
    writeln!(
        s,
        "<text x=\"{}\" y=\"28\" font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
        WIDTH / 2.0,
        escape(title)
    )
    .unwrap();
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Multi-series line chart with optional log axes.
pub fn line_chart(
    title: &str,
    x_label: &str,
    y_label: &str,
    series: &[Series],
    log_x: bool,
    log_y: bool,
) -> String {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let xs = Axis::from_values(
        series.iter().flat_map(|s| s.points.iter().map(|p| p.0)),
        log_x,
    );
    let ys = Axis::from_values(
        series.iter().flat_map(|s| s.points.iter().map(|p| p.1)),
        log_y,
    );
    let px = |x: f64| MARGIN_LEFT + xs.place(x) * plot_w;
    let py = |y: f64| MARGIN_TOP + (1.0 - ys.place(y)) * plot_h;

    let mut s = header(title);
    // frame and ticks
    writeln!(
        s,
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w}\" height=\"{plot_h}\" fill=\"none\" stroke=\"#333333\"/>"
    )
    .unwrap();
    for (frac, label) in xs.ticks() {
        let x = MARGIN_LEFT + frac * plot_w;
        let y0 = MARGIN_TOP + plot_h;
        writeln!(
            s,
            "<line x1=\"{x:.2}\" y1=\"{y0}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#333333\"/>",
            y0 + 5.0
        )
        .unwrap();
        writeln!(
            s,
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">{label}</text>",
            y0 + 18.0
        )
        .unwrap();
    }
    for (frac, label) in ys.ticks() {
        let y = MARGIN_TOP + (1.0 - frac) * plot_h;
        writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{MARGIN_LEFT}\" y2=\"{y:.2}\" stroke=\"#333333\"/>",
            MARGIN_LEFT - 5.0
        )
        .unwrap();
        writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{label}</text>",
            MARGIN_LEFT - 8.0,
            y + 4.0
        )
        .unwrap();
    }
    writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 14.0,
        escape(x_label)
    )
    .unwrap();
    writeln!(
        s,
        "<text x=\"20\" y=\"{}\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 20 {})\">{}</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(y_label)
    )
    .unwrap();

    for (k, ser) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let path: Vec<String> = ser
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        writeln!(
            s,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.8\"/>",
            path.join(" ")
        )
        .unwrap();
        for &(x, y) in &ser.points {
            writeln!(
                s,
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.6\" fill=\"{color}\"/>",
                px(x),
                py(y)
            )
            .unwrap();
        }
        let ly = MARGIN_TOP + 16.0 + 18.0 * k as f64;
        let lx = WIDTH - MARGIN_RIGHT + 12.0;
        writeln!(
            s,
            "<rect x=\"{lx}\" y=\"{:.2}\" width=\"12\" height=\"12\" fill=\"{color}\"/>",
            ly - 10.0
        )
        .unwrap();
        writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{ly}\" font-family=\"monospace\" font-size=\"12\">{}</text>",
            lx + 18.0,
            escape(&ser.label)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Heatmap over a dimension x sample-count grid; cell color tracks
/// log10 of the value, cell text shows the value itself.
pub fn heatmap(
    title: &str,
    x_labels: &[String],
    y_labels: &[String],
    values: &[Vec<f64>],
) -> String {
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let rows = y_labels.len();
    let cols = x_labels.len();
    let cw = plot_w / cols as f64;
    let ch = plot_h / rows as f64;

    let logs: Vec<f64> = values
        .iter()
        .flatten()
        .map(|&v| v.max(LOG_FLOOR).log10())
        .collect();
    let lmin = logs.iter().cloned().fold(f64::INFINITY, f64::min);
    let lmax = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let span = (lmax - lmin).max(1e-12);

    let mut s = header(title);
    for (r, row) in values.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let frac = (v.max(LOG_FLOOR).log10() - lmin) / span;
            let (cr, cg, cb) = color_ramp(frac);
            let x = MARGIN_LEFT + c as f64 * cw;
            let y = MARGIN_TOP + r as f64 * ch;
            writeln!(
                s,
                "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{cw:.2}\" height=\"{ch:.2}\" fill=\"rgb({cr},{cg},{cb})\" stroke=\"white\"/>"
            )
            .unwrap();
            writeln!(
                s,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
                x + cw / 2.0,
                y + ch / 2.0 + 4.0,
                fmt_tick(v)
            )
            .unwrap();
        }
    }
    for (c, label) in x_labels.iter().enumerate() {
        writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            MARGIN_LEFT + (c as f64 + 0.5) * cw,
            MARGIN_TOP + plot_h + 20.0,
            escape(label)
        )
        .unwrap();
    }
    for (r, label) in y_labels.iter().enumerate() {
        writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">{}</text>",
            MARGIN_LEFT - 10.0,
            MARGIN_TOP + (r as f64 + 0.5) * ch + 4.0,
            escape(label)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn color_ramp(frac: f64) -> (u8, u8, u8) {
    // blue -> pale yellow -> red
    let f = frac.clamp(0.0, 1.0);
    let lerp = |a: f64, b: f64, t: f64| (a + (b - a) * t).round() as u8;
    if f < 0.5 {
        let t = f * 2.0;
        (lerp(43.0, 255.0, t), lerp(131.0, 255.0, t), lerp(186.0, 191.0, t))
    } else {
        let t = (f - 0.5) * 2.0;
        (lerp(255.0, 215.0, t), lerp(255.0, 25.0, t), lerp(191.0, 28.0, t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_chart_is_deterministic() {
        let series = vec![Series {
            label: "salomon".into(),
            points: vec![(20.0, 0.5), (100.0, 0.1), (1000.0, 0.01)],
        }];
        let a = line_chart("t", "T", "error", &series, true, true);
        let b = line_chart("t", "T", "error", &series, true, true);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("width=\"960\""));
        assert!(a.contains("polyline"));
    }

    #[test]
    fn heatmap_renders_all_cells() {
        let svg = heatmap(
            "h",
            &["1000".into(), "10000".into()],
            &["1".into(), "2".into(), "5".into()],
            &[
                vec![0.5, 0.05],
                vec![0.7, 0.07],
                vec![0.9, 0.09],
            ],
        );
        assert_eq!(svg.matches("<rect").count(), 1 + 6); // background + cells
        assert!(svg.contains("</svg>"));
    }

    #[test]
    fn log_floor_handles_zero_errors() {
        let series = vec![Series {
            label: "x".into(),
            points: vec![(1.0, 0.0), (2.0, 1e-9)],
        }];
        let svg = line_chart("t", "T", "error", &series, false, true);
        assert!(svg.contains("polyline"));
    }
}

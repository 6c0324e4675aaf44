//! Minimal static SVG emitter for benchmark figures: line panels for the
//! signals/reconstructions and a bar panel for per-method MSE.

use std::fmt::Write as _;

pub struct LineSeries {
    pub label: String,
    pub color: &'static str,
    pub ys: Vec<f64>,
}

pub enum Panel {
    Lines { title: String, series: Vec<LineSeries> },
    Bars { title: String, labels: Vec<String>, values: Vec<f64> },
}

const PANEL_W: f64 = 640.0;
const PANEL_H: f64 = 220.0;
const MARGIN: f64 = 40.0;

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

/// Render stacked panels into one standalone SVG document.
pub fn figure(title: &str, panels: &[Panel]) -> String {
    let width = PANEL_W + 2.0 * MARGIN;
    let height = (PANEL_H + MARGIN) * panels.len() as f64 + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"22\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>",
        width / 2.0,
        escape(title)
    );
    for (i, panel) in panels.iter().enumerate() {
        let top = MARGIN + 8.0 + (PANEL_H + MARGIN) * i as f64;
        render_panel(&mut out, panel, MARGIN, top);
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn render_panel(out: &mut String, panel: &Panel, left: f64, top: f64) {
    let title = match panel {
        Panel::Lines { title, .. } | Panel::Bars { title, .. } => title,
    };
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\">{}</text>",
        fmt(left),
        fmt(top - 6.0),
        escape(title)
    );
    let _ = writeln!(
        out,
        "<rect x=\"{}\" y=\"{}\" width=\"{PANEL_W}\" height=\"{PANEL_H}\" fill=\"none\" stroke=\"#ccc\"/>",
        fmt(left),
        fmt(top)
    );
    match panel {
        Panel::Lines { series, .. } => {
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for s in series {
                for &y in &s.ys {
                    lo = lo.min(y);
                    hi = hi.max(y);
                }
            }
            if hi <= lo {
                hi = lo + 1.0;
            }
            let pad = 0.05 * (hi - lo);
            let (lo, hi) = (lo - pad, hi + pad);
            for (si, s) in series.iter().enumerate() {
                let n = s.ys.len();
                let mut d = String::new();
                for (j, &y) in s.ys.iter().enumerate() {
                    let px = left + PANEL_W * j as f64 / (n - 1).max(1) as f64;
                    let py = top + PANEL_H * (1.0 - (y - lo) / (hi - lo));
                    let _ = write!(d, "{},{} ", fmt(px), fmt(py));
                }
                let _ = writeln!(
                    out,
                    "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\"/>",
                    d.trim_end(),
                    s.color
                );
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"{}\">{}</text>",
                    fmt(left + PANEL_W - 150.0),
                    fmt(top + 16.0 + 14.0 * si as f64),
                    s.color,
                    escape(&s.label)
                );
            }
        }
        Panel::Bars { labels, values, .. } => {
            let hi = values.iter().cloned().fold(0.0f64, f64::max).max(1e-12);
            let slot = PANEL_W / values.len() as f64;
            for (j, (&v, label)) in values.iter().zip(labels).enumerate() {
                let bar_h = PANEL_H * 0.85 * v / hi;
                let x = left + slot * j as f64 + 0.2 * slot;
                let y = top + PANEL_H - bar_h;
                let _ = writeln!(
                    out,
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#4878a8\"/>",
                    fmt(x),
                    fmt(y),
                    fmt(0.6 * slot),
                    fmt(bar_h)
                );
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>",
                    fmt(x + 0.3 * slot),
                    fmt(top + PANEL_H + 14.0),
                    escape(label)
                );
                let _ = writeln!(
                    out,
                    "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{v:.4}</text>",
                    fmt(x + 0.3 * slot),
                    fmt(y - 4.0)
                );
            }
        }
    }
}

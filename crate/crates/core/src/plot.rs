//! SVG scatter plots of a virtual technology set in the (alpha, beta) plane.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::model::{Stage, StageResult};
use crate::pipeline::{virtual_technology_set, TARGET_LABEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    Assessed,
    Peer,
    Other,
    Target,
}

impl PointClass {
    fn css(self) -> &'static str {
        match self {
            PointClass::Assessed => "assessed",
            PointClass::Peer => "peer",
            PointClass::Other => "other",
            PointClass::Target => "target",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotPoint {
    pub label: String,
    pub alpha: f64,
    pub beta: f64,
    pub class: PointClass,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotSpec {
    pub stage: Stage,
    pub title: String,
    pub points: Vec<PlotPoint>,
    pub diagonal: bool,
    /// Upper end of both axes, at least 5% above the largest coordinate.
    pub axis_max: f64,
}

/// Side of the square plotting area in pixels.
pub const PLOT_SIDE: f64 = 400.0;
const MARGIN: f64 = 60.0;

impl PlotSpec {
    pub fn new(stage: Stage, title: impl Into<String>, points: Vec<PlotPoint>) -> Self {
        let top = points.iter().flat_map(|p| [p.alpha, p.beta]).fold(0.0, f64::max);
        let axis_max = if top > 0.0 { ((top * 1.05) * 10.0).ceil() / 10.0 } else { 1.0 };
        PlotSpec { stage, title: title.into(), points, diagonal: true, axis_max }
    }

    /// Plot of one stage result: the assessed DMU, its comparison DMUs and the target.
    pub fn from_result(result: &StageResult) -> Self {
        let points = virtual_technology_set(result)
            .into_iter()
            .enumerate()
            .map(|(k, p)| {
                let class = if k == 0 {
                    PointClass::Assessed
                } else if p.label == TARGET_LABEL {
                    PointClass::Target
                } else if result.peers.contains(&p.label) {
                    PointClass::Peer
                } else {
                    PointClass::Other
                };
                PlotPoint { label: p.label, alpha: p.alpha, beta: p.beta, class }
            })
            .collect();
        let stage = match result.stage {
            Stage::BestPractice => "Stage I",
            Stage::Super => "Stage II",
        };
        PlotSpec::new(result.stage, format!("Assessment of DMU {} in {stage}", result.dmu), points)
    }

    /// Pixel position of `(alpha, beta)`; both axes share one scale.
    pub fn to_pixel(&self, alpha: f64, beta: f64) -> (f64, f64) {
        let k = PLOT_SIDE / self.axis_max;
        (MARGIN + alpha * k, MARGIN + PLOT_SIDE - beta * k)
    }

    pub fn to_svg(&self) -> String {
        let size = PLOT_SIDE + 2.0 * MARGIN;
        let (x0, y0) = self.to_pixel(0.0, 0.0);
        let (x1, y1) = self.to_pixel(self.axis_max, self.axis_max);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}" font-family="sans-serif" font-size="12">"#
        );
        s.push_str(concat!(
            "<style>",
            ".axis{stroke:#000;stroke-width:1}",
            ".grid{stroke:#ddd;stroke-width:0.5}",
            ".diagonal{stroke:#555;stroke-width:1;stroke-dasharray:6 4}",
            ".assessed{fill:#c0392b}.peer{fill:#2471a3}.other{fill:#7f8c8d}.target{fill:#f39c12}",
            "</style>\n"
        ));
        let _ = writeln!(s, r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="14">{}</text>"#, size / 2.0, escape(&self.title));
        for t in 0..=5 {
            let v = self.axis_max * f64::from(t) / 5.0;
            let (px, _) = self.to_pixel(v, 0.0);
            let (_, py) = self.to_pixel(0.0, v);
            let _ = writeln!(s, r#"<line class="grid" x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{y1:.2}"/>"#);
            let _ = writeln!(s, r#"<line class="grid" x1="{x0:.2}" y1="{py:.2}" x2="{x1:.2}" y2="{py:.2}"/>"#);
            let _ = writeln!(s, r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle">{v:.2}</text>"#, y0 + 16.0);
            let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{v:.2}</text>"#, x0 - 6.0, py + 4.0);
        }
        let _ = writeln!(s, r#"<line class="axis" x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y0:.2}"/>"#);
        let _ = writeln!(s, r#"<line class="axis" x1="{x0:.2}" y1="{y0:.2}" x2="{x0:.2}" y2="{y1:.2}"/>"#);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">vInput ($)</text>"#, (x0 + x1) / 2.0, y0 + 40.0);
        let _ = writeln!(
            s,
            r#"<text x="{0:.2}" y="{1:.2}" text-anchor="middle" transform="rotate(-90 {0:.2} {1:.2})">vOutput ($)</text>"#,
            x0 - 42.0,
            (y0 + y1) / 2.0
        );
        if self.diagonal {
            let _ = writeln!(s, r#"<line class="diagonal" x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}"/>"#);
        }
        for p in &self.points {
            let (px, py) = self.to_pixel(p.alpha, p.beta);
            let label = escape(&p.label);
            let data = format!(r#"data-label="{label}" data-alpha="{:.6}" data-beta="{:.6}""#, p.alpha, p.beta);
            match p.class {
                PointClass::Assessed => {
                    let _ =
                        writeln!(s, r#"<rect class="assessed" {data} x="{:.2}" y="{:.2}" width="10" height="10"/>"#, px - 5.0, py - 5.0);
                }
                PointClass::Target => {
                    let _ = writeln!(
                        s,
                        r#"<polygon class="target" {data} points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}"/>"#,
                        px,
                        py - 7.0,
                        px + 7.0,
                        py,
                        px,
                        py + 7.0,
                        px - 7.0,
                        py
                    );
                }
                c => {
                    let _ = writeln!(s, r#"<circle class="{}" {data} cx="{px:.2}" cy="{py:.2}" r="4"/>"#, c.css());
                }
            }
            let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{label}</text>"#, px + 8.0, py - 6.0);
        }
        s.push_str("</svg>\n");
        s
    }
}

pub fn emit_plot(plot: &PlotSpec, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, plot.to_svg())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_plot_has_diagonal_only() {
        let p = PlotSpec::new(Stage::BestPractice, "empty", vec![]);
        let svg = p.to_svg();
        assert_eq!(p.axis_max, 1.0);
        assert!(svg.contains(r#"class="diagonal""#));
        assert!(!svg.contains("data-label"));
    }

    #[test]
    fn axis_covers_points() {
        let pt = PlotPoint { label: "a&b".into(), alpha: 2.0, beta: 0.5, class: PointClass::Other };
        let p = PlotSpec::new(Stage::Super, "t", vec![pt]);
        assert!(p.axis_max >= 2.1);
        assert!(p.to_svg().contains("a&amp;b"));
    }

    #[test]
    fn equal_scale() {
        let p = PlotSpec::new(Stage::Super, "t", vec![]);
        let (x, y) = p.to_pixel(0.5, 0.5);
        let (x0, y0) = p.to_pixel(0.0, 0.0);
        assert!(((x - x0) - (y0 - y)).abs() < 1e-12);
    }
}

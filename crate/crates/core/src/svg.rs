//! Static SVG diagrams of analyzed polygons.
//!
//! Draws the polygon outline with indexed vertices, marks global maxima as
//! filled red markers with their (solid) empty circles and global minima as
//! filled blue markers with their (dashed) full circles, rings locally
//! extremal vertices, and can overlay the diagonals of either
//! triangulation. Intended for debugging lemma configurations; floating
//! point is fine here because nothing is decided from the drawing.

use crate::extremality::{analyze, ExtremalLabel, ExtremalityError, ExtremalityReport};
use crate::point::{Coordinate, Point};
use crate::polygon::Polygon;
use crate::triangulation::{
    anti_delaunay_triangulation, delaunay_triangulation, TriangulationError, TriangulationKind,
};
use num_traits::{ToPrimitive, Zero};
use std::fmt::Write as _;
use thiserror::Error;

/// Which neighbor circles to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CircleMode {
    /// No circles, markers only.
    Hidden,
    /// Circles of globally extremal vertices only.
    #[default]
    Extremal,
    /// Every neighbor circle, non-extremal ones faint.
    All,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    pub circles: CircleMode,
    pub triangulation: Option<TriangulationKind>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error(transparent)]
    Extremality(#[from] ExtremalityError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 50.0; // 5% of the viewbox on each side

struct Frame {
    scale: f64,
    off_x: f64,
    off_y: f64,
    min_x: f64,
    min_y: f64,
}

impl Frame {
    fn fit(points: &[Point]) -> Frame {
        let xs: Vec<f64> = points.iter().map(|p| to_f64(&p.x)).collect();
        let ys: Vec<f64> = points.iter().map(|p| to_f64(&p.y)).collect();
        let (min_x, max_x) = bounds(&xs);
        let (min_y, max_y) = bounds(&ys);
        let w = (max_x - min_x).max(1e-9);
        let h = (max_y - min_y).max(1e-9);
        let scale = (VIEW - 2.0 * MARGIN) / w.max(h);
        let off_x = MARGIN + (VIEW - 2.0 * MARGIN - w * scale) / 2.0;
        let off_y = MARGIN + (VIEW - 2.0 * MARGIN - h * scale) / 2.0;
        Frame {
            scale,
            off_x,
            off_y,
            min_x,
            min_y,
        }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let x = self.off_x + (to_f64(&p.x) - self.min_x) * self.scale;
        // SVG y grows downward.
        let y = VIEW - (self.off_y + (to_f64(&p.y) - self.min_y) * self.scale);
        (x, y)
    }
}

fn bounds(vals: &[f64]) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in vals {
        min = min.min(v);
        max = max.max(v);
    }
    (min, max)
}

fn to_f64(c: &Coordinate) -> f64 {
    c.to_f64().unwrap_or(0.0)
}

/// Exact circumcenter of three points, converted to scene coordinates only
/// for drawing.
fn circumcircle(a: &Point, b: &Point, c: &Point) -> Option<(Point, f64)> {
    let two = Coordinate::from_integer(2.into());
    let m11 = &two * (&b.x - &a.x);
    let m12 = &two * (&b.y - &a.y);
    let m21 = &two * (&c.x - &a.x);
    let m22 = &two * (&c.y - &a.y);
    let norm = |p: &Point| &p.x * &p.x + &p.y * &p.y;
    let r1 = norm(b) - norm(a);
    let r2 = norm(c) - norm(a);
    let det = &m11 * &m22 - &m12 * &m21;
    if det.is_zero() {
        return None;
    }
    let center = Point::new(
        (&r1 * &m22 - &m12 * &r2) / &det,
        (&m11 * &r2 - &r1 * &m21) / &det,
    );
    let radius = to_f64(&center.distance_sq(a)).sqrt();
    Some((center, radius))
}

/// Renders the polygon with its extremality classification as a
/// standalone SVG 1.1 document.
pub fn render(polygon: &Polygon, options: &RenderOptions) -> Result<String, RenderError> {
    let report = analyze(polygon)?;
    let triangulation = match options.triangulation {
        Some(TriangulationKind::Delaunay) => Some(delaunay_triangulation(polygon)?),
        Some(TriangulationKind::AntiDelaunay) => Some(anti_delaunay_triangulation(polygon)?),
        None => None,
    };
    Ok(render_with_report(polygon, &report, triangulation.as_ref(), options))
}

fn render_with_report(
    polygon: &Polygon,
    report: &ExtremalityReport,
    triangulation: Option<&crate::triangulation::Triangulation>,
    options: &RenderOptions,
) -> String {
    let frame = Frame::fit(polygon.vertices());
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {VIEW} {VIEW}">"#
    );
    let _ = writeln!(svg, r#"  <rect width="{VIEW}" height="{VIEW}" fill="white"/>"#);

    // Neighbor circles first so markers and edges draw on top.
    if options.circles != CircleMode::Hidden {
        for v in &report.vertices {
            let i = v.index as i64;
            let style = match v.global {
                ExtremalLabel::Max => r##"stroke="#d62728" stroke-width="1.5""##.to_owned(),
                ExtremalLabel::Min => {
                    r##"stroke="#1f77b4" stroke-width="1.5" stroke-dasharray="8 6""##.to_owned()
                }
                ExtremalLabel::None => {
                    if options.circles != CircleMode::All {
                        continue;
                    }
                    r##"stroke="#cccccc" stroke-width="1""##.to_owned()
                }
            };
            if let Some((center, radius)) = circumcircle(
                polygon.vertex(i - 1),
                polygon.vertex(i),
                polygon.vertex(i + 1),
            ) {
                let (cx, cy) = frame.map(&center);
                let _ = writeln!(
                    svg,
                    r#"  <circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" {}/>"#,
                    cx,
                    cy,
                    radius * frame.scale,
                    style
                );
            }
        }
    }

    if let Some(tri) = triangulation {
        for &(i, j) in &tri.diagonals {
            let (x1, y1) = frame.map(polygon.vertex(i as i64));
            let (x2, y2) = frame.map(polygon.vertex(j as i64));
            let _ = writeln!(
                svg,
                r##"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#888888" stroke-width="1.5" stroke-dasharray="4 4"/>"##
            );
        }
    }

    let outline: Vec<String> = polygon
        .vertices()
        .iter()
        .map(|p| {
            let (x, y) = frame.map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        svg,
        r##"  <polygon points="{}" fill="none" stroke="#222222" stroke-width="2"/>"##,
        outline.join(" ")
    );

    for v in &report.vertices {
        let (x, y) = frame.map(polygon.vertex(v.index as i64));
        if v.local != ExtremalLabel::None {
            let _ = writeln!(
                svg,
                r##"  <circle cx="{x:.2}" cy="{y:.2}" r="11" fill="none" stroke="#2ca02c" stroke-width="2"/>"##
            );
        }
        let fill = match v.global {
            ExtremalLabel::Max => "#d62728",
            ExtremalLabel::Min => "#1f77b4",
            ExtremalLabel::None => "#444444",
        };
        let radius = if v.global == ExtremalLabel::None { 4 } else { 7 };
        let _ = writeln!(
            svg,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="{radius}" fill="{fill}"/>"#
        );
        // Push the label outward from the centroid so it clears the marker.
        let (cx, cy) = (VIEW / 2.0, VIEW / 2.0);
        let (dx, dy) = (x - cx, y - cy);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (lx, ly) = (x + dx / len * 24.0, y + dy / len * 24.0);
        let _ = writeln!(
            svg,
            r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="monospace" font-size="20" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            v.index
        );
    }
    let _ = writeln!(svg, "</svg>");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{random_generic_convex, GenSpec};
    use crate::point::pt;

    #[test]
    fn renders_quadrilateral_with_all_features() {
        let q = Polygon::new(vec![pt(0, 0), pt(5, 0), pt(6, 4), pt(1, 5)]).unwrap();
        let options = RenderOptions {
            circles: CircleMode::All,
            triangulation: Some(TriangulationKind::Delaunay),
        };
        let svg = render(&q, &options).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("stroke-dasharray")); // dashed full circles
        assert!(svg.contains("#d62728"));
        assert!(svg.contains("#1f77b4"));
        assert!(svg.contains("<polygon points="));
        assert!(svg.contains(">3</text>"));
    }

    #[test]
    fn render_respects_circle_mode() {
        let p = random_generic_convex(&GenSpec::new(8, 3)).unwrap();
        let hidden = render(
            &p,
            &RenderOptions {
                circles: CircleMode::Hidden,
                triangulation: None,
            },
        )
        .unwrap();
        let all = render(
            &p,
            &RenderOptions {
                circles: CircleMode::All,
                triangulation: None,
            },
        )
        .unwrap();
        assert!(all.matches("<circle").count() > hidden.matches("<circle").count());
    }

    #[test]
    fn render_rejects_non_generic_input() {
        let square = Polygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap();
        assert!(matches!(
            render(&square, &RenderOptions::default()),
            Err(RenderError::Extremality(_))
        ));
    }
}

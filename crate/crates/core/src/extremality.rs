//! Global and local extremal-vertex classification.
//!
//! For each vertex `V[i]` of a generic polygon, `C[i]` denotes the circle
//! through the consecutive vertices `V[i-1], V[i], V[i+1]`. A vertex is
//! globally extremal when `C[i]` is empty (no other vertex strictly inside,
//! a maximum) or full (all other vertices strictly inside, a minimum).
//! Local extremality compares discrete curvature between adjacent vertices:
//! `V[i]` exceeds `V[i+1]` exactly when `V[i+2]` falls outside `C[i]` (for a
//! positive `V[i+1]`; the table flips for a negative one), and a vertex is
//! locally extremal when it is a strict one-sided peak or valley of that
//! order along the cycle.
//!
//! Sign conventions for the counts follow curvature maxima of convex
//! curves: maxima are counted by `s_minus`/`l_minus`, minima by
//! `s_plus`/`l_plus`.

use crate::polygon::{Polygon, PolygonError, VertexSign};
use crate::predicates::{CircleSide, PredicateError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Classification of a vertex's neighbor circle `C[i]` against all other
/// vertices of the polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborCircleClass {
    /// No other vertex lies strictly inside.
    EmptyCircle,
    /// Every other vertex lies strictly inside.
    FullCircle,
    /// Some inside, some outside.
    NeitherCircle,
}

/// Discrete curvature order between a vertex and its successor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurvatureOrder {
    GreaterThan,
    LessThan,
}

/// Extremality label shared by the global and local classifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalLabel {
    Max,
    Min,
    None,
}

/// Per-vertex classification entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabels {
    pub index: usize,
    pub global: ExtremalLabel,
    pub local: ExtremalLabel,
}

/// Full extremality report: per-vertex labels plus the four counts.
///
/// `s_minus`/`s_plus` count global maxima/minima, `l_minus`/`l_plus` local
/// maxima/minima.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalityReport {
    pub n: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    pub l_plus: usize,
    pub l_minus: usize,
    pub vertices: Vec<VertexLabels>,
}

impl ExtremalityReport {
    pub fn global_label(&self, i: usize) -> ExtremalLabel {
        self.vertices[i % self.n].global
    }

    pub fn local_label(&self, i: usize) -> ExtremalLabel {
        self.vertices[i % self.n].local
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalityError {
    #[error("extremality needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not generic: {0}")]
    NotGeneric(String),
}

impl From<PredicateError> for ExtremalityError {
    fn from(e: PredicateError) -> Self {
        ExtremalityError::NotGeneric(e.to_string())
    }
}

impl From<PolygonError> for ExtremalityError {
    fn from(e: PolygonError) -> Self {
        ExtremalityError::NotGeneric(e.to_string())
    }
}

fn require_size(p: &Polygon) -> Result<(), ExtremalityError> {
    if p.n() < 4 {
        Err(ExtremalityError::TooFewVertices(p.n()))
    } else {
        Ok(())
    }
}

/// Side of a non-defining vertex `x` against `C[i]`, with `On` rejected as
/// a genericity violation.
fn strict_side(p: &Polygon, i: i64, x: i64) -> Result<CircleSide, ExtremalityError> {
    match p.circle_side(i - 1, i, i + 1, x)? {
        CircleSide::On => Err(ExtremalityError::NotGeneric(format!(
            "vertex {} lies on the neighbor circle of vertex {}",
            x.rem_euclid(p.n() as i64),
            i.rem_euclid(p.n() as i64),
        ))),
        side => Ok(side),
    }
}

/// Tests every non-defining vertex against `C[i]`.
pub fn classify_neighbor_circle(
    p: &Polygon,
    i: usize,
) -> Result<NeighborCircleClass, ExtremalityError> {
    require_size(p)?;
    let n = p.n() as i64;
    let i = p.reduce_index(i) as i64;
    let mut inside = 0usize;
    let mut outside = 0usize;
    for off in 2..(n - 1) {
        match strict_side(p, i, i + off)? {
            CircleSide::Inside => inside += 1,
            CircleSide::Outside => outside += 1,
            CircleSide::On => unreachable!(),
        }
    }
    Ok(if outside == 0 {
        NeighborCircleClass::FullCircle
    } else if inside == 0 {
        NeighborCircleClass::EmptyCircle
    } else {
        NeighborCircleClass::NeitherCircle
    })
}

/// Discrete curvature order between `V[i]` and `V[i+1]`, decided by the
/// position of `V[i+2]` relative to `C[i]`.
///
/// For a positive `V[i+1]`: outside means greater, inside means less. For a
/// negative `V[i+1]` the two words swap. The prescribed additional swap for
/// a negative `V[i]` (greater with less *and* outside with inside) maps the
/// table onto itself, so the sign of `V[i]` does not alter the outcome.
pub fn curvature_compare(p: &Polygon, i: usize) -> Result<CurvatureOrder, ExtremalityError> {
    require_size(p)?;
    let i = p.reduce_index(i) as i64;
    let next_sign = p.vertex_sign((i + 1).rem_euclid(p.n() as i64) as usize)?;
    let side = strict_side(p, i, i + 2)?;
    Ok(match (next_sign, side) {
        (VertexSign::PositiveVertex, CircleSide::Outside) => CurvatureOrder::GreaterThan,
        (VertexSign::PositiveVertex, CircleSide::Inside) => CurvatureOrder::LessThan,
        (VertexSign::NegativeVertex, CircleSide::Inside) => CurvatureOrder::GreaterThan,
        (VertexSign::NegativeVertex, CircleSide::Outside) => CurvatureOrder::LessThan,
        (_, CircleSide::On) => unreachable!(),
    })
}

/// Global labels for every vertex: `Max` for an empty neighbor circle,
/// `Min` for a full one.
pub fn global_labels(p: &Polygon) -> Result<Vec<ExtremalLabel>, ExtremalityError> {
    require_size(p)?;
    (0..p.n())
        .map(|i| {
            Ok(match classify_neighbor_circle(p, i)? {
                NeighborCircleClass::EmptyCircle => ExtremalLabel::Max,
                NeighborCircleClass::FullCircle => ExtremalLabel::Min,
                NeighborCircleClass::NeitherCircle => ExtremalLabel::None,
            })
        })
        .collect()
}

/// Local labels for every vertex from the curvature order along the cycle:
/// a vertex exceeding both neighbors is `Max`, one below both is `Min`.
pub fn local_labels(p: &Polygon) -> Result<Vec<ExtremalLabel>, ExtremalityError> {
    require_size(p)?;
    let n = p.n();
    let orders: Vec<CurvatureOrder> = (0..n)
        .map(|i| curvature_compare(p, i))
        .collect::<Result<_, _>>()?;
    Ok((0..n)
        .map(|i| {
            let before = orders[(i + n - 1) % n];
            let after = orders[i];
            match (before, after) {
                (CurvatureOrder::LessThan, CurvatureOrder::GreaterThan) => ExtremalLabel::Max,
                (CurvatureOrder::GreaterThan, CurvatureOrder::LessThan) => ExtremalLabel::Min,
                _ => ExtremalLabel::None,
            }
        })
        .collect())
}

/// Independent reimplementation of the local classification for convex
/// polygons: vertex `i` is a local maximum when `V[i-2]` and `V[i+2]` both
/// lie outside `C[i]`, a local minimum when both lie inside, and not
/// locally extremal otherwise.
///
/// Used as a cross-check against [`local_labels`]; the two must agree on
/// every generic convex polygon.
pub fn local_labels_by_circle_criterion(
    p: &Polygon,
) -> Result<Vec<ExtremalLabel>, ExtremalityError> {
    require_size(p)?;
    let n = p.n() as i64;
    (0..n)
        .map(|i| {
            let prev = strict_side(p, i, i - 2)?;
            let next = strict_side(p, i, i + 2)?;
            Ok(match (prev, next) {
                (CircleSide::Outside, CircleSide::Outside) => ExtremalLabel::Max,
                (CircleSide::Inside, CircleSide::Inside) => ExtremalLabel::Min,
                _ => ExtremalLabel::None,
            })
        })
        .collect()
}

/// Joint global and local classification with counts.
pub fn analyze(p: &Polygon) -> Result<ExtremalityReport, ExtremalityError> {
    let global = global_labels(p)?;
    let local = local_labels(p)?;
    let vertices: Vec<VertexLabels> = global
        .iter()
        .zip(&local)
        .enumerate()
        .map(|(index, (&g, &l))| VertexLabels {
            index,
            global: g,
            local: l,
        })
        .collect();
    let count = |labels: &[ExtremalLabel], which: ExtremalLabel| {
        labels.iter().filter(|&&l| l == which).count()
    };
    Ok(ExtremalityReport {
        n: p.n(),
        s_plus: count(&global, ExtremalLabel::Min),
        s_minus: count(&global, ExtremalLabel::Max),
        l_plus: count(&local, ExtremalLabel::Min),
        l_minus: count(&local, ExtremalLabel::Max),
        vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::pt;

    fn quad_q1() -> Polygon {
        Polygon::new(vec![pt(0, 0), pt(5, 0), pt(6, 4), pt(1, 5)]).unwrap()
    }

    #[test]
    fn neighbor_circles_of_sample_quadrilateral() {
        let q = quad_q1();
        assert_eq!(
            classify_neighbor_circle(&q, 1).unwrap(),
            NeighborCircleClass::FullCircle
        );
        assert_eq!(
            classify_neighbor_circle(&q, 2).unwrap(),
            NeighborCircleClass::EmptyCircle
        );
        assert_eq!(
            classify_neighbor_circle(&q, 0).unwrap(),
            NeighborCircleClass::EmptyCircle
        );
        assert_eq!(
            classify_neighbor_circle(&q, 3).unwrap(),
            NeighborCircleClass::FullCircle
        );
    }

    #[test]
    fn quadrilateral_circles_are_never_neither() {
        // With a single non-defining vertex the circle is empty or full.
        for i in 0..4 {
            let class = classify_neighbor_circle(&quad_q1(), i).unwrap();
            assert_ne!(class, NeighborCircleClass::NeitherCircle);
        }
    }

    #[test]
    fn curvature_orders_around_sample_quadrilateral() {
        let q = quad_q1();
        assert_eq!(curvature_compare(&q, 1).unwrap(), CurvatureOrder::LessThan);
        assert_eq!(
            curvature_compare(&q, 2).unwrap(),
            CurvatureOrder::GreaterThan
        );
        let orders: Vec<_> = (0..4).map(|i| curvature_compare(&q, i).unwrap()).collect();
        assert_eq!(
            orders,
            vec![
                CurvatureOrder::GreaterThan,
                CurvatureOrder::LessThan,
                CurvatureOrder::GreaterThan,
                CurvatureOrder::LessThan,
            ]
        );
    }

    #[test]
    fn sample_quadrilateral_full_report() {
        let report = analyze(&quad_q1()).unwrap();
        assert_eq!(
            (
                report.s_minus,
                report.s_plus,
                report.l_minus,
                report.l_plus
            ),
            (2, 2, 2, 2)
        );
        let globals: Vec<_> = report.vertices.iter().map(|v| v.global).collect();
        assert_eq!(
            globals,
            vec![
                ExtremalLabel::Max,
                ExtremalLabel::Min,
                ExtremalLabel::Max,
                ExtremalLabel::Min,
            ]
        );
        let locals: Vec<_> = report.vertices.iter().map(|v| v.local).collect();
        assert_eq!(
            locals,
            vec![
                ExtremalLabel::Max,
                ExtremalLabel::Min,
                ExtremalLabel::Max,
                ExtremalLabel::Min,
            ]
        );
    }

    #[test]
    fn circle_criterion_agrees_on_sample_quadrilateral() {
        let q = quad_q1();
        assert_eq!(
            local_labels(&q).unwrap(),
            local_labels_by_circle_criterion(&q).unwrap()
        );
    }

    #[test]
    fn non_generic_square_is_rejected() {
        let square = Polygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap();
        assert!(matches!(
            analyze(&square),
            Err(ExtremalityError::NotGeneric(_))
        ));
    }

    #[test]
    fn triangles_are_too_small() {
        let tri = Polygon::new(vec![pt(0, 0), pt(4, 0), pt(0, 3)]).unwrap();
        assert_eq!(
            analyze(&tri),
            Err(ExtremalityError::TooFewVertices(3))
        );
    }

    #[test]
    fn report_json_shape() {
        let report = analyze(&quad_q1()).unwrap();
        let json = report.to_json();
        assert!(json.starts_with(r#"{"n":4,"s_plus":2,"s_minus":2,"l_plus":2,"l_minus":2,"#));
        assert!(json.contains(r#"{"index":0,"global":"max","local":"max"}"#));
    }
}

//! Delaunay and anti-Delaunay triangulations of generic convex polygons.
//!
//! Construction is brute force: every vertex triple is kept whose
//! circumcircle is empty of all other vertices (Delaunay) or contains all
//! other vertices (anti-Delaunay, the farthest-point triangulation of a
//! convex vertex set). At the polygon sizes this crate targets the
//! enumeration is instant and doubles as its own certificate; the tiling
//! invariants are asserted before a triangulation is returned.

use crate::point::Coordinate;
use crate::polygon::Polygon;
use crate::predicates::{in_circle, CircleSide, PredicateError};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

/// Which circumcircle certificate the triangulation carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TriangulationKind {
    #[serde(rename = "delaunay")]
    Delaunay,
    #[serde(rename = "anti")]
    AntiDelaunay,
}

/// A triangle over host-polygon vertex indices, stored sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        Triangle(t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("triangulation needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not convex")]
    NotConvex,
    #[error("polygon is not generic: {0}")]
    NotGeneric(String),
    #[error("edge endpoints are identical: {0}")]
    IdenticalIndices(usize),
    #[error("tiling invariant failed: {0}")]
    TilingViolation(String),
}

impl From<PredicateError> for TriangulationError {
    fn from(e: PredicateError) -> Self {
        TriangulationError::NotGeneric(e.to_string())
    }
}

/// A certified triangulation of a convex polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    pub kind: TriangulationKind,
    pub triangles: Vec<Triangle>,
    pub diagonals: Vec<(usize, usize)>,
    #[serde(skip)]
    n: usize,
}

impl Triangulation {
    pub fn n(&self) -> usize {
        self.n
    }

    /// True when `{i, j}` is a boundary edge or a diagonal of this
    /// triangulation. Boundary edges belong to every triangulation of the
    /// polygon.
    pub fn contains_edge(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i % self.n, j % self.n);
        if i == j {
            return false;
        }
        let pair = (i.min(j), i.max(j));
        if is_boundary_edge(pair, self.n) {
            return true;
        }
        self.diagonals.binary_search(&pair).is_ok()
    }

    pub fn contains_triangle(&self, a: usize, b: usize, c: usize) -> bool {
        self.triangles.binary_search(&Triangle::new(a, b, c)).is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triangulation serialization cannot fail")
    }
}

fn is_boundary_edge(pair: (usize, usize), n: usize) -> bool {
    pair.1 - pair.0 == 1 || (pair.0 == 0 && pair.1 == n - 1)
}

/// The unique triangulation of `p` whose triangles all have empty
/// circumcircles.
pub fn delaunay_triangulation(p: &Polygon) -> Result<Triangulation, TriangulationError> {
    build(p, TriangulationKind::Delaunay)
}

/// The unique triangulation of `p` whose triangles all have full
/// circumcircles.
pub fn anti_delaunay_triangulation(p: &Polygon) -> Result<Triangulation, TriangulationError> {
    build(p, TriangulationKind::AntiDelaunay)
}

fn build(p: &Polygon, kind: TriangulationKind) -> Result<Triangulation, TriangulationError> {
    let n = p.n();
    if n < 4 {
        return Err(TriangulationError::TooFewVertices(n));
    }
    if !p.is_convex() {
        return Err(TriangulationError::NotConvex);
    }
    let vs = p.vertices();
    let mut triangles = Vec::with_capacity(n - 2);
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut inside = 0usize;
                let mut outside = 0usize;
                for m in 0..n {
                    if m == i || m == j || m == k {
                        continue;
                    }
                    match in_circle(&vs[i], &vs[j], &vs[k], &vs[m])? {
                        CircleSide::Inside => inside += 1,
                        CircleSide::Outside => outside += 1,
                        CircleSide::On => {
                            return Err(TriangulationError::NotGeneric(format!(
                                "vertices {i},{j},{k},{m} are concyclic"
                            )))
                        }
                    }
                }
                let keep = match kind {
                    TriangulationKind::Delaunay => inside == 0,
                    TriangulationKind::AntiDelaunay => outside == 0,
                };
                if keep {
                    triangles.push(Triangle([i, j, k]));
                }
            }
        }
    }
    triangles.sort_unstable();
    let diagonals = certify_tiling(p, &triangles)?;
    Ok(Triangulation {
        kind,
        triangles,
        diagonals,
        n,
    })
}

/// Checks that the triangle set tiles the polygon: `n - 2` triangles whose
/// areas sum to the polygon area, every boundary edge used exactly once and
/// every interior edge exactly twice. Returns the sorted diagonal list.
fn certify_tiling(
    p: &Polygon,
    triangles: &[Triangle],
) -> Result<Vec<(usize, usize)>, TriangulationError> {
    let n = p.n();
    if triangles.len() != n - 2 {
        return Err(TriangulationError::TilingViolation(format!(
            "expected {} triangles, found {}",
            n - 2,
            triangles.len()
        )));
    }
    let vs = p.vertices();
    let mut edge_uses: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut doubled_area = Coordinate::zero();
    for t in triangles {
        let [a, b, c] = t.0;
        for (u, v) in [(a, b), (b, c), (a, c)] {
            *edge_uses.entry((u, v)).or_insert(0) += 1;
        }
        let (pa, pb, pc) = (&vs[a], &vs[b], &vs[c]);
        let cross =
            (&pb.x - &pa.x) * (&pc.y - &pa.y) - (&pb.y - &pa.y) * (&pc.x - &pa.x);
        if cross <= Coordinate::zero() {
            return Err(TriangulationError::TilingViolation(format!(
                "triangle {a},{b},{c} is not positively oriented"
            )));
        }
        doubled_area += cross;
    }
    if doubled_area != p.doubled_area() {
        return Err(TriangulationError::TilingViolation(
            "triangle areas do not sum to the polygon area".to_owned(),
        ));
    }
    let mut diagonals = Vec::with_capacity(n - 3);
    for (pair, uses) in edge_uses {
        let expected = if is_boundary_edge(pair, n) { 1 } else { 2 };
        if uses != expected {
            return Err(TriangulationError::TilingViolation(format!(
                "edge {},{} used {} times, expected {}",
                pair.0, pair.1, uses, expected
            )));
        }
        if expected == 2 {
            diagonals.push(pair);
        }
    }
    if diagonals.len() != n - 3 {
        return Err(TriangulationError::TilingViolation(format!(
            "expected {} diagonals, found {}",
            n - 3,
            diagonals.len()
        )));
    }
    Ok(diagonals)
}

/// True when some circle through `V[i]` and `V[j]` is empty of all polygon
/// vertices; under genericity this is exactly membership of `{i, j}` in the
/// Delaunay triangulation.
pub fn edge_is_delaunay(p: &Polygon, i: usize, j: usize) -> Result<bool, TriangulationError> {
    edge_in(p, i, j, TriangulationKind::Delaunay)
}

/// Dual certification: membership of `{i, j}` in the anti-Delaunay
/// triangulation.
pub fn edge_is_anti_delaunay(p: &Polygon, i: usize, j: usize) -> Result<bool, TriangulationError> {
    edge_in(p, i, j, TriangulationKind::AntiDelaunay)
}

fn edge_in(
    p: &Polygon,
    i: usize,
    j: usize,
    kind: TriangulationKind,
) -> Result<bool, TriangulationError> {
    let (i, j) = (p.reduce_index(i), p.reduce_index(j));
    if i == j {
        return Err(TriangulationError::IdenticalIndices(i));
    }
    Ok(build(p, kind)?.contains_edge(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::pt;

    fn quad_q1() -> Polygon {
        Polygon::new(vec![pt(0, 0), pt(5, 0), pt(6, 4), pt(1, 5)]).unwrap()
    }

    fn pentagon() -> Polygon {
        Polygon::new(vec![pt(0, 0), pt(5, 0), pt(8, 3), pt(4, 7), pt(-1, 3)]).unwrap()
    }

    #[test]
    fn quadrilateral_triangulations() {
        let q = quad_q1();
        let del = delaunay_triangulation(&q).unwrap();
        assert_eq!(
            del.triangles,
            vec![Triangle([0, 1, 3]), Triangle([1, 2, 3])]
        );
        assert_eq!(del.diagonals, vec![(1, 3)]);

        let anti = anti_delaunay_triangulation(&q).unwrap();
        assert_eq!(
            anti.triangles,
            vec![Triangle([0, 1, 2]), Triangle([0, 2, 3])]
        );
        assert_eq!(anti.diagonals, vec![(0, 2)]);
    }

    #[test]
    fn quadrilateral_diagonals_are_complementary() {
        let q = quad_q1();
        let del = delaunay_triangulation(&q).unwrap();
        let anti = anti_delaunay_triangulation(&q).unwrap();
        assert_eq!(del.diagonals.len(), 1);
        assert_eq!(anti.diagonals.len(), 1);
        assert_ne!(del.diagonals[0], anti.diagonals[0]);
    }

    #[test]
    fn edge_certification_matches_construction() {
        let q = quad_q1();
        assert!(edge_is_delaunay(&q, 1, 3).unwrap());
        assert!(!edge_is_delaunay(&q, 0, 2).unwrap());
        assert!(edge_is_delaunay(&q, 0, 1).unwrap());

        assert!(edge_is_anti_delaunay(&q, 0, 2).unwrap());
        assert!(!edge_is_anti_delaunay(&q, 1, 3).unwrap());
        assert!(edge_is_anti_delaunay(&q, 2, 3).unwrap());

        assert_eq!(
            edge_is_delaunay(&q, 2, 2),
            Err(TriangulationError::IdenticalIndices(2))
        );
    }

    #[test]
    fn pentagon_counts_and_independent_recheck() {
        let p = pentagon();
        assert!(p.is_convex() && p.is_generic(), "fixture must be generic convex");
        for (tri, want_inside) in [
            (delaunay_triangulation(&p).unwrap(), false),
            (anti_delaunay_triangulation(&p).unwrap(), true),
        ] {
            assert_eq!(tri.triangles.len(), 3);
            assert_eq!(tri.diagonals.len(), 2);
            let vs = p.vertices();
            for t in &tri.triangles {
                let [a, b, c] = t.0;
                for m in 0..p.n() {
                    if m == a || m == b || m == c {
                        continue;
                    }
                    let side = in_circle(&vs[a], &vs[b], &vs[c], &vs[m]).unwrap();
                    let expected = if want_inside {
                        CircleSide::Inside
                    } else {
                        CircleSide::Outside
                    };
                    assert_eq!(side, expected);
                }
            }
        }
    }

    #[test]
    fn rejects_small_nonconvex_and_degenerate_inputs() {
        let tri = Polygon::new(vec![pt(0, 0), pt(4, 0), pt(0, 3)]).unwrap();
        assert_eq!(
            delaunay_triangulation(&tri),
            Err(TriangulationError::TooFewVertices(3))
        );

        let dented =
            Polygon::new(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 1), pt(0, 4)]).unwrap();
        assert_eq!(
            delaunay_triangulation(&dented),
            Err(TriangulationError::NotConvex)
        );

        let square = Polygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap();
        assert!(matches!(
            delaunay_triangulation(&square),
            Err(TriangulationError::NotGeneric(_))
        ));
    }

    #[test]
    fn json_shape() {
        let del = delaunay_triangulation(&quad_q1()).unwrap();
        assert_eq!(
            del.to_json(),
            r#"{"kind":"delaunay","triangles":[[0,1,3],[1,2,3]],"diagonals":[[1,3]]}"#
        );
    }

    #[test]
    fn global_extremality_cross_check_on_quadrilateral() {
        let q = quad_q1();
        let report = crate::extremality::analyze(&q).unwrap();
        let del = delaunay_triangulation(&q).unwrap();
        let anti = anti_delaunay_triangulation(&q).unwrap();
        for i in 0..4i64 {
            let (a, b, c) = (
                (i - 1).rem_euclid(4) as usize,
                i as usize,
                ((i + 1) % 4) as usize,
            );
            let is_max = report.global_label(i as usize) == crate::extremality::ExtremalLabel::Max;
            let is_min = report.global_label(i as usize) == crate::extremality::ExtremalLabel::Min;
            assert_eq!(is_max, del.contains_triangle(a, b, c));
            assert_eq!(is_min, anti.contains_triangle(a, b, c));
        }
    }
}

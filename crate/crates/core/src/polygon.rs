//! Validated polygon representation.
//!
//! A [`Polygon`] is an ordered, closed, simple vertex cycle, normalized to
//! counterclockwise orientation on construction. All vertex indices are
//! taken modulo the vertex count.

use crate::point::{coordinate_to_string, parse_coordinate, Coordinate, Point};
use crate::predicates::{are_concyclic, in_circle, orient, CircleSide, Sign};
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Sign of a vertex: positive when the left angle at the vertex, taken with
/// respect to the traversal orientation, is less than a straight angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexSign {
    PositiveVertex,
    NegativeVertex,
}

/// A genericity violation found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericityViolation {
    CollinearTriple([usize; 3]),
    ConcyclicQuadruple([usize; 4]),
}

/// Result of the exhaustive genericity check: no three vertices collinear
/// and no four vertices concyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericityReport {
    pub violations: Vec<GenericityViolation>,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} are identical")]
    DuplicateVertex(usize, usize),
    #[error("edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("polygon has zero signed area")]
    ZeroArea,
    #[error("vertex {0} has a straight angle")]
    DegenerateAngle(usize),
}

/// A simple closed polygon with exact rational vertices, stored
/// counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates and normalizes a vertex list into a polygon.
    ///
    /// The input order is preserved up to whole-cycle reversal: a clockwise
    /// list is reversed around its first vertex so emission is always
    /// counterclockwise.
    pub fn new(points: Vec<Point>) -> Result<Self, PolygonError> {
        if points.len() < 3 {
            return Err(PolygonError::TooFewVertices(points.len()));
        }
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                if points[i] == points[j] {
                    return Err(PolygonError::DuplicateVertex(i, j));
                }
            }
        }
        check_simple(&points)?;
        let mut vertices = points;
        let area2 = doubled_signed_area(&vertices);
        if area2.is_zero() {
            // Unreachable for a simple cycle; kept as a guard.
            return Err(PolygonError::ZeroArea);
        }
        if area2 < Coordinate::zero() {
            vertices[1..].reverse();
        }
        Ok(Polygon { vertices })
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex at a cyclic index; negative and overflowing indices wrap.
    pub fn vertex(&self, i: i64) -> &Point {
        let n = self.vertices.len() as i64;
        &self.vertices[i.rem_euclid(n) as usize]
    }

    /// Reduces an index into `0..n`.
    pub fn reduce_index(&self, i: usize) -> usize {
        i % self.vertices.len()
    }

    /// Twice the (positive) enclosed area.
    pub fn doubled_area(&self) -> Coordinate {
        doubled_signed_area(&self.vertices)
    }

    /// True when every consecutive vertex triple makes a strict left turn.
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len() as i64;
        (0..n).all(|i| {
            orient(self.vertex(i - 1), self.vertex(i), self.vertex(i + 1)) == Sign::Positive
        })
    }

    /// Exhaustively tests all vertex triples for collinearity and all
    /// quadruples for concyclicity.
    pub fn check_genericity(&self) -> GenericityReport {
        let n = self.vertices.len();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if orient(&self.vertices[i], &self.vertices[j], &self.vertices[k])
                        == Sign::Zero
                    {
                        violations.push(GenericityViolation::CollinearTriple([i, j, k]));
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for l in (k + 1)..n {
                        // Fully collinear quadruples are already reported
                        // above and carry no circle to test.
                        if let Ok(true) = are_concyclic(
                            &self.vertices[i],
                            &self.vertices[j],
                            &self.vertices[k],
                            &self.vertices[l],
                        ) {
                            violations.push(GenericityViolation::ConcyclicQuadruple([i, j, k, l]));
                        }
                    }
                }
            }
        }
        GenericityReport { violations }
    }

    pub fn is_generic(&self) -> bool {
        self.check_genericity().is_generic()
    }

    /// Sign of the vertex at cyclic index `i`.
    pub fn vertex_sign(&self, i: usize) -> Result<VertexSign, PolygonError> {
        let i = self.reduce_index(i) as i64;
        match orient(self.vertex(i - 1), self.vertex(i), self.vertex(i + 1)) {
            Sign::Positive => Ok(VertexSign::PositiveVertex),
            Sign::Negative => Ok(VertexSign::NegativeVertex),
            Sign::Zero => Err(PolygonError::DegenerateAngle(i as usize)),
        }
    }

    /// Circle side of vertex `x` against the circle through three other
    /// vertices, all given as cyclic indices.
    pub fn circle_side(
        &self,
        a: i64,
        b: i64,
        c: i64,
        x: i64,
    ) -> Result<CircleSide, crate::predicates::PredicateError> {
        in_circle(self.vertex(a), self.vertex(b), self.vertex(c), self.vertex(x))
    }
}

fn doubled_signed_area(vertices: &[Point]) -> Coordinate {
    let n = vertices.len();
    let mut sum = Coordinate::zero();
    for i in 0..n {
        let p = &vertices[i];
        let q = &vertices[(i + 1) % n];
        sum += &p.x * &q.y - &q.x * &p.y;
    }
    sum
}

/// Strict simplicity check over all edge pairs.
fn check_simple(vertices: &[Point]) -> Result<(), PolygonError> {
    let n = vertices.len();
    let edge = |k: usize| (&vertices[k], &vertices[(k + 1) % n]);
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let (p1, p2) = edge(i);
            let (q1, q2) = edge(j);
            if adjacent {
                // Edges sharing a vertex may only touch at that vertex: a
                // collinear backtrack folds the boundary onto itself.
                let (prev, shared, next) = if j == i + 1 {
                    (p1, p2, q2)
                } else {
                    (q1, q2, p2)
                };
                if orient(prev, shared, next) == Sign::Zero && dot_sign(prev, shared, next) < 0 {
                    return Err(PolygonError::NotSimple(i, j));
                }
            } else if segments_intersect(p1, p2, q1, q2) {
                return Err(PolygonError::NotSimple(i, j));
            }
        }
    }
    Ok(())
}

/// Sign of (shared - prev) . (next - shared); negative means `next` turns
/// back along the incoming edge.
fn dot_sign(prev: &Point, shared: &Point, next: &Point) -> i8 {
    let ux = &shared.x - &prev.x;
    let uy = &shared.y - &prev.y;
    let vx = &next.x - &shared.x;
    let vy = &next.y - &shared.y;
    let d = ux * vx + uy * vy;
    if d.is_zero() {
        0
    } else if d > Coordinate::zero() {
        1
    } else {
        -1
    }
}

fn segments_intersect(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    let opposite = |a: Sign, b: Sign| {
        (a == Sign::Positive && b == Sign::Negative) || (a == Sign::Negative && b == Sign::Positive)
    };
    if opposite(d1, d2) && opposite(d3, d4) {
        return true;
    }
    (d1 == Sign::Zero && on_segment(q1, q2, p1))
        || (d2 == Sign::Zero && on_segment(q1, q2, p2))
        || (d3 == Sign::Zero && on_segment(p1, p2, q1))
        || (d4 == Sign::Zero && on_segment(p1, p2, q2))
}

/// Assumes `x` collinear with segment `ab`; true when it lies within the
/// segment's bounding box.
fn on_segment(a: &Point, b: &Point, x: &Point) -> bool {
    let within = |lo: &Coordinate, hi: &Coordinate, v: &Coordinate| {
        if lo <= hi {
            lo <= v && v <= hi
        } else {
            hi <= v && v <= lo
        }
    };
    within(&a.x, &b.x, &x.x) && within(&a.y, &b.y, &x.y)
}

impl Serialize for Polygon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc {
            vertices: Vec<[String; 2]>,
        }
        let vertices = self
            .vertices
            .iter()
            .map(|p| [coordinate_to_string(&p.x), coordinate_to_string(&p.y)])
            .collect();
        Doc { vertices }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polygon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            vertices: Vec<[String; 2]>,
        }
        let doc = Doc::deserialize(deserializer)?;
        let mut points = Vec::with_capacity(doc.vertices.len());
        for (idx, [xs, ys]) in doc.vertices.iter().enumerate() {
            let x = parse_coordinate(xs)
                .map_err(|e| D::Error::custom(format!("vertex {idx} x: {e}")))?;
            let y = parse_coordinate(ys)
                .map_err(|e| D::Error::custom(format!("vertex {idx} y: {e}")))?;
            points.push(Point::new(x, y));
        }
        Polygon::new(points).map_err(D::Error::custom)
    }
}

impl Polygon {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polygon serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

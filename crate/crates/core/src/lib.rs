//! Exact-arithmetic analysis of extremal polygon vertices.
//!
//! The crate classifies every vertex of a generic polygon as globally or
//! locally maximal/minimal with respect to neighbor-circle containment and
//! discrete curvature, builds Delaunay and anti-Delaunay triangulations of
//! convex polygons, decomposes polygons along diagonals, and mechanically
//! checks a catalog of extremality inequalities over seeded random polygon
//! corpora. All geometric decisions are exact: coordinates are arbitrary
//! precision rationals and every predicate is the sign of an integer
//! determinant.
//!
//! Entry points:
//!
//! * [`polygon::Polygon`] - validated simple polygons with exact vertices.
//! * [`extremality::analyze`] - per-vertex extremality report with counts.
//! * [`triangulation::delaunay_triangulation`] and
//!   [`triangulation::anti_delaunay_triangulation`].
//! * [`decomposition`] - diagonal cuts and the verification-claim catalog.
//! * [`generator::random_generic_convex`] - seeded generic convex polygons.
//! * [`search::execute_search`] - randomized falsification sweeps.
//! * [`svg::render`] - diagram output for debugging configurations.

pub mod decomposition;
pub mod extremality;
pub mod generator;
pub mod point;
pub mod polygon;
pub mod predicates;
pub mod search;
pub mod svg;
pub mod triangulation;

pub use extremality::{analyze, ExtremalityReport};
pub use point::{Coordinate, Point};
pub use polygon::Polygon;

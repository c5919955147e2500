//! Diagonal decomposition and the verification-claim catalog.
//!
//! A decomposition cuts a polygon along an interior vertex-to-vertex
//! diagonal into two parts, each required to keep at least four vertices
//! (so only polygons with six or more vertices decompose). On top of that
//! sit the claim checkers: each takes a concrete polygon or decomposition,
//! evaluates a hypothesis and a conclusion with exact predicates, and emits
//! a [`VerificationRecord`] whose `passed` flag is the material
//! implication. The randomized search harness exists to falsify these
//! claims; every checker is written so that a false record pinpoints the
//! failing configuration.

use crate::extremality::{analyze, ExtremalLabel, ExtremalityError, ExtremalityReport};
use crate::polygon::Polygon;
use crate::triangulation::{
    anti_delaunay_triangulation, delaunay_triangulation, Triangulation, TriangulationError,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use thiserror::Error;

/// Claim identifiers used in verification records and CLI filters.
///
/// The catalog, for a generic convex polygon `P` with parts `P1`, `P2` of a
/// valid decomposition and counts `s+`/`s-`/`l+`/`l-` (minima counted by
/// plus, maxima by minus):
///
/// * `prop2.1` - `l+ = l-`.
/// * `prop2.2` - every global max is a local max, every global min a local min.
/// * `prop2.3` - a generic quadrilateral has `s+ = s- = l+ = l- = 2`.
/// * `prop2.4` - the circle/half-plane implication table for one generic
///   4-point configuration (see [`crate::predicates::prop24_verify`]).
/// * `remark2.1` - the two-neighbor circle criterion reproduces the local
///   classification.
/// * `cor3.1` - `s+ + s- >= 4` for `n >= 6`.
/// * `cor4.1` - `l+ + l- >= 4` for `n >= 6`.
/// * `thm3.1-minus` - if the diagonal is Delaunay, `s-(P) >= s-(P1) + s-(P2) - 2`.
/// * `thm3.1-plus` - if the diagonal is anti-Delaunay, same for `s+`.
/// * `lemma3.2-minus` / `lemma3.2-plus` - for `n = 6` the two inequalities
///   hold for every valid diagonal, no Delaunay condition.
/// * `thm4.1-minus` - `l-(P) >= l-(P1) + l-(P2) - 2`, unconditionally.
/// * `thm4.1-plus` - the `l+` analogue (a derived consequence via `prop2.1`).
/// * `lemma3.1` - a triangulation of a polygon with `n >= 7` contains a
///   diagonal splitting it into parts of at least four vertices each.
/// * `lemma4.1-max` - with diagonal ends `B`, `D`, `A` the neighbor of `B`
///   in `P1` and `C` its neighbor in `P2`: if `A` is locally maximal in
///   `P1` but not `P`, and `C` locally maximal in `P2` but not `P`, then
///   `B` is locally maximal in `P`.
/// * `lemma4.2-max` - if `A` is locally maximal in `P1` but not `P`, and
///   `B` is locally maximal in `P2`, then `B` is locally maximal in `P`.
/// * `lemma4.3-max` - with `E`, `F` the neighbors of `D` in `P1`, `P2`: if
///   `A` is locally maximal in `P1` and `D` is locally maximal in both
///   parts but not in `P`, then `A` is locally maximal in `P`.
/// * `lemma4.*-min` - the same statements with minima throughout.
/// * `locality` - vertices away from the diagonal ends and their immediate
///   neighbors keep their local classification across a decomposition.
/// * `internal-error` - emitted by the search harness when a trial fails
///   unexpectedly; never expected.
pub mod claim {
    pub const PROP_2_1: &str = "prop2.1";
    pub const PROP_2_2: &str = "prop2.2";
    pub const PROP_2_3: &str = "prop2.3";
    pub const PROP_2_4: &str = "prop2.4";
    pub const REMARK_2_1: &str = "remark2.1";
    pub const COR_3_1: &str = "cor3.1";
    pub const COR_4_1: &str = "cor4.1";
    pub const THM_3_1_MINUS: &str = "thm3.1-minus";
    pub const THM_3_1_PLUS: &str = "thm3.1-plus";
    pub const THM_4_1_MINUS: &str = "thm4.1-minus";
    pub const THM_4_1_PLUS: &str = "thm4.1-plus";
    pub const LEMMA_3_1: &str = "lemma3.1";
    pub const LEMMA_3_2_MINUS: &str = "lemma3.2-minus";
    pub const LEMMA_3_2_PLUS: &str = "lemma3.2-plus";
    pub const LEMMA_4_1_MAX: &str = "lemma4.1-max";
    pub const LEMMA_4_1_MIN: &str = "lemma4.1-min";
    pub const LEMMA_4_2_MAX: &str = "lemma4.2-max";
    pub const LEMMA_4_2_MIN: &str = "lemma4.2-min";
    pub const LEMMA_4_3_MAX: &str = "lemma4.3-max";
    pub const LEMMA_4_3_MIN: &str = "lemma4.3-min";
    pub const LOCALITY: &str = "locality";
    pub const INTERNAL_ERROR: &str = "internal-error";

    /// Every claim a search or verify run can evaluate.
    pub const KNOWN: &[&str] = &[
        PROP_2_1,
        PROP_2_2,
        PROP_2_3,
        PROP_2_4,
        REMARK_2_1,
        COR_3_1,
        COR_4_1,
        THM_3_1_MINUS,
        THM_3_1_PLUS,
        THM_4_1_MINUS,
        THM_4_1_PLUS,
        LEMMA_3_1,
        LEMMA_3_2_MINUS,
        LEMMA_3_2_PLUS,
        LEMMA_4_1_MAX,
        LEMMA_4_1_MIN,
        LEMMA_4_2_MAX,
        LEMMA_4_2_MIN,
        LEMMA_4_3_MAX,
        LEMMA_4_3_MIN,
        LOCALITY,
    ];
}

/// Subset of claims to evaluate; an empty selection means all of them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimSelection {
    enabled: BTreeSet<String>,
}

impl ClaimSelection {
    pub fn all() -> Self {
        Self::default()
    }

    /// Builds a selection from tags, rejecting unknown ones.
    pub fn from_tags<I, S>(tags: I) -> Result<Self, UnknownClaim>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut enabled = BTreeSet::new();
        for tag in tags {
            let tag = tag.as_ref();
            if !claim::KNOWN.contains(&tag) {
                return Err(UnknownClaim(tag.to_owned()));
            }
            enabled.insert(tag.to_owned());
        }
        Ok(ClaimSelection { enabled })
    }

    pub fn includes(&self, tag: &str) -> bool {
        self.enabled.is_empty() || self.enabled.contains(tag)
    }

    fn includes_any(&self, tags: &[&str]) -> bool {
        tags.iter().any(|t| self.includes(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown claim tag {0:?}")]
pub struct UnknownClaim(pub String);

/// One checked claim instance: hypotheses and conclusion evaluated on
/// concrete data, `passed` the material implication of the two.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub claim: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<(usize, usize)>,
    pub hypotheses: bool,
    pub conclusion: bool,
    pub passed: bool,
    pub witness: Value,
}

impl VerificationRecord {
    pub fn new(
        claim: &str,
        n: usize,
        diagonal: Option<(usize, usize)>,
        hypotheses: bool,
        conclusion: bool,
        witness: Value,
    ) -> Self {
        VerificationRecord {
            claim: claim.to_owned(),
            n,
            diagonal,
            hypotheses,
            conclusion,
            passed: !hypotheses || conclusion,
            witness,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("diagonal endpoints are the same vertex {0}")]
    IdenticalVertices(usize),
    #[error("vertices {0} and {1} are adjacent, not a diagonal")]
    AdjacentVertices(usize, usize),
    #[error("diagonal ({0},{1}) leaves a part with fewer than 4 vertices")]
    PartTooSmall(usize, usize),
    #[error("diagonal does not lie in the polygon interior")]
    DiagonalOutside,
    #[error("four-vertex claims are not defined for n = {0}")]
    UnsupportedSize(usize),
}

/// Errors surfaced while evaluating claims.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerificationError {
    #[error(transparent)]
    Extremality(#[from] ExtremalityError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error("claim catalog requires a convex polygon")]
    NotConvex,
}

/// A chord between two non-adjacent vertices, kept with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Diagonal {
    pub i: usize,
    pub j: usize,
}

impl Diagonal {
    pub fn new(a: usize, b: usize) -> Self {
        Diagonal {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn as_pair(&self) -> (usize, usize) {
        (self.i, self.j)
    }
}

/// One part of a decomposition, with the map back to parent indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubPolygon {
    pub polygon: Polygon,
    /// Parent index of each part vertex, in chain order.
    pub parent_indices: Vec<usize>,
}

impl SubPolygon {
    /// Chain position of a parent vertex inside this part.
    pub fn position_of_parent(&self, parent_idx: usize) -> Option<usize> {
        self.parent_indices.iter().position(|&p| p == parent_idx)
    }
}

/// A polygon cut along one diagonal. `p1` runs from `V[i]` to `V[j]` along
/// increasing indices, `p2` from `V[j]` back around to `V[i]`; both share
/// exactly the diagonal endpoints and stay counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub diagonal: Diagonal,
    pub p1: SubPolygon,
    pub p2: SubPolygon,
}

/// All diagonals whose two parts both keep at least four vertices.
/// Empty exactly when `n <= 5`.
pub fn valid_diagonals(p: &Polygon) -> Vec<Diagonal> {
    let n = p.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let span = j - i;
            if span + 1 >= 4 && n - span + 1 >= 4 {
                out.push(Diagonal { i, j });
            }
        }
    }
    out
}

/// Cuts `p` along `d`, returning both validated parts.
pub fn decompose(p: &Polygon, d: Diagonal) -> Result<Decomposition, DecompositionError> {
    let n = p.n();
    let (i, j) = (d.i % n, d.j % n);
    let d = Diagonal::new(i, j);
    let (i, j) = d.as_pair();
    if i == j {
        return Err(DecompositionError::IdenticalVertices(i));
    }
    if j - i == 1 || (i == 0 && j == n - 1) {
        return Err(DecompositionError::AdjacentVertices(i, j));
    }
    let span = j - i;
    if span + 1 < 4 || n - span + 1 < 4 {
        return Err(DecompositionError::PartTooSmall(i, j));
    }
    // A diagonal of a convex polygon always lies in the interior; other
    // polygons are out of scope for decomposition.
    if !p.is_convex() {
        return Err(DecompositionError::DiagonalOutside);
    }
    let part = |indices: Vec<usize>| {
        let points = indices.iter().map(|&k| p.vertices()[k].clone()).collect();
        SubPolygon {
            polygon: Polygon::new(points)
                .expect("part of a convex polygon must be a valid polygon"),
            parent_indices: indices,
        }
    };
    let p1 = part((i..=j).collect());
    let p2 = part((j..n).chain(0..=i).collect());
    debug_assert_eq!(p1.polygon.n() + p2.polygon.n(), n + 2);
    Ok(Decomposition { diagonal: d, p1, p2 })
}

/// A polygon with its extremality report and both triangulations, computed
/// once and shared by the claim checkers.
#[derive(Debug, Clone)]
pub struct AnalyzedPolygon {
    pub polygon: Polygon,
    pub report: ExtremalityReport,
    pub delaunay: Triangulation,
    pub anti_delaunay: Triangulation,
}

impl AnalyzedPolygon {
    pub fn new(polygon: Polygon) -> Result<Self, VerificationError> {
        let report = analyze(&polygon)?;
        let delaunay = delaunay_triangulation(&polygon)?;
        let anti_delaunay = anti_delaunay_triangulation(&polygon)?;
        Ok(AnalyzedPolygon {
            polygon,
            report,
            delaunay,
            anti_delaunay,
        })
    }
}

/// A decomposition with the extremality reports of both parts.
#[derive(Debug, Clone)]
pub struct DecompositionAnalysis {
    pub decomposition: Decomposition,
    pub p1_report: ExtremalityReport,
    pub p2_report: ExtremalityReport,
}

impl DecompositionAnalysis {
    pub fn new(parent: &Polygon, d: Diagonal) -> Result<Self, VerificationError> {
        let decomposition = decompose(parent, d).map_err(VerificationError::Decomposition)?;
        let p1_report = analyze(&decomposition.p1.polygon)?;
        let p2_report = analyze(&decomposition.p2.polygon)?;
        Ok(DecompositionAnalysis {
            decomposition,
            p1_report,
            p2_report,
        })
    }
}

/// `prop2.1`: local maxima and minima are equinumerous.
pub fn check_prop_2_1(report: &ExtremalityReport) -> VerificationRecord {
    VerificationRecord::new(
        claim::PROP_2_1,
        report.n,
        None,
        true,
        report.l_plus == report.l_minus,
        json!({ "l_plus": report.l_plus, "l_minus": report.l_minus }),
    )
}

/// `prop2.2`: global extremality refines to local extremality of the same
/// polarity.
pub fn check_prop_2_2(report: &ExtremalityReport) -> VerificationRecord {
    let mut mismatches = Vec::new();
    for v in &report.vertices {
        let ok = match v.global {
            ExtremalLabel::Max => v.local == ExtremalLabel::Max,
            ExtremalLabel::Min => v.local == ExtremalLabel::Min,
            ExtremalLabel::None => true,
        };
        if !ok {
            mismatches.push(v.index);
        }
    }
    VerificationRecord::new(
        claim::PROP_2_2,
        report.n,
        None,
        true,
        mismatches.is_empty(),
        json!({ "mismatched_vertices": mismatches }),
    )
}

/// `remark2.1`: the circle-criterion reimplementation of the local
/// classification agrees with the curvature-order implementation.
pub fn check_remark_2_1(
    polygon: &Polygon,
    report: &ExtremalityReport,
) -> Result<VerificationRecord, VerificationError> {
    let by_circle = crate::extremality::local_labels_by_circle_criterion(polygon)?;
    let mut mismatches = Vec::new();
    for (v, &circle_label) in report.vertices.iter().zip(&by_circle) {
        if v.local != circle_label {
            mismatches.push(v.index);
        }
    }
    Ok(VerificationRecord::new(
        claim::REMARK_2_1,
        report.n,
        None,
        true,
        mismatches.is_empty(),
        json!({ "mismatched_vertices": mismatches }),
    ))
}

/// Four-vertex claims: `prop2.3` for quadrilaterals, `cor3.1` and `cor4.1`
/// for `n >= 6`. Pentagons and triangles are outside every stated claim.
pub fn check_four_vertex(
    report: &ExtremalityReport,
) -> Result<Vec<VerificationRecord>, DecompositionError> {
    let counts = json!({
        "s_plus": report.s_plus,
        "s_minus": report.s_minus,
        "l_plus": report.l_plus,
        "l_minus": report.l_minus,
    });
    match report.n {
        4 => Ok(vec![VerificationRecord::new(
            claim::PROP_2_3,
            4,
            None,
            true,
            report.s_plus == 2
                && report.s_minus == 2
                && report.l_plus == 2
                && report.l_minus == 2,
            counts,
        )]),
        n if n >= 6 => Ok(vec![
            VerificationRecord::new(
                claim::COR_3_1,
                n,
                None,
                true,
                report.s_plus + report.s_minus >= 4,
                counts.clone(),
            ),
            VerificationRecord::new(
                claim::COR_4_1,
                n,
                None,
                true,
                report.l_plus + report.l_minus >= 4,
                counts,
            ),
        ]),
        n => Err(DecompositionError::UnsupportedSize(n)),
    }
}

/// `thm3.1-minus` and `thm3.1-plus`: the global count superadditivity under
/// a Delaunay (respectively anti-Delaunay) diagonal.
pub fn check_theorem_3_1(ap: &AnalyzedPolygon, da: &DecompositionAnalysis) -> Vec<VerificationRecord> {
    let (i, j) = da.decomposition.diagonal.as_pair();
    let n = ap.report.n;
    let minus = VerificationRecord::new(
        claim::THM_3_1_MINUS,
        n,
        Some((i, j)),
        ap.delaunay.contains_edge(i, j),
        ap.report.s_minus + 2 >= da.p1_report.s_minus + da.p2_report.s_minus,
        json!({
            "s_minus": { "parent": ap.report.s_minus, "p1": da.p1_report.s_minus, "p2": da.p2_report.s_minus },
        }),
    );
    let plus = VerificationRecord::new(
        claim::THM_3_1_PLUS,
        n,
        Some((i, j)),
        ap.anti_delaunay.contains_edge(i, j),
        ap.report.s_plus + 2 >= da.p1_report.s_plus + da.p2_report.s_plus,
        json!({
            "s_plus": { "parent": ap.report.s_plus, "p1": da.p1_report.s_plus, "p2": da.p2_report.s_plus },
        }),
    );
    vec![minus, plus]
}

/// `lemma3.2-minus` and `lemma3.2-plus`: for hexagons the same two
/// inequalities hold for every valid diagonal, with no Delaunay condition.
pub fn check_lemma_3_2(
    parent_report: &ExtremalityReport,
    da: &DecompositionAnalysis,
) -> Vec<VerificationRecord> {
    let (i, j) = da.decomposition.diagonal.as_pair();
    let hyp = parent_report.n == 6;
    vec![
        VerificationRecord::new(
            claim::LEMMA_3_2_MINUS,
            parent_report.n,
            Some((i, j)),
            hyp,
            parent_report.s_minus + 2 >= da.p1_report.s_minus + da.p2_report.s_minus,
            json!({
                "s_minus": { "parent": parent_report.s_minus, "p1": da.p1_report.s_minus, "p2": da.p2_report.s_minus },
            }),
        ),
        VerificationRecord::new(
            claim::LEMMA_3_2_PLUS,
            parent_report.n,
            Some((i, j)),
            hyp,
            parent_report.s_plus + 2 >= da.p1_report.s_plus + da.p2_report.s_plus,
            json!({
                "s_plus": { "parent": parent_report.s_plus, "p1": da.p1_report.s_plus, "p2": da.p2_report.s_plus },
            }),
        ),
    ]
}

/// `thm4.1-minus` and its derived `thm4.1-plus` analogue: local count
/// superadditivity for every valid diagonal.
pub fn check_theorem_4_1(
    parent_report: &ExtremalityReport,
    da: &DecompositionAnalysis,
) -> Vec<VerificationRecord> {
    let (i, j) = da.decomposition.diagonal.as_pair();
    vec![
        VerificationRecord::new(
            claim::THM_4_1_MINUS,
            parent_report.n,
            Some((i, j)),
            true,
            parent_report.l_minus + 2 >= da.p1_report.l_minus + da.p2_report.l_minus,
            json!({
                "l_minus": { "parent": parent_report.l_minus, "p1": da.p1_report.l_minus, "p2": da.p2_report.l_minus },
            }),
        ),
        VerificationRecord::new(
            claim::THM_4_1_PLUS,
            parent_report.n,
            Some((i, j)),
            true,
            parent_report.l_plus + 2 >= da.p1_report.l_plus + da.p2_report.l_plus,
            json!({
                "derived": true,
                "l_plus": { "parent": parent_report.l_plus, "p1": da.p1_report.l_plus, "p2": da.p2_report.l_plus },
            }),
        ),
    ]
}

/// `lemma3.1`: existence of a splitting diagonal with both parts of size at
/// least four, in an arbitrary triangulation given by its diagonal set.
///
/// The hypothesis is `n >= 7`; the conclusion is still evaluated for
/// smaller polygons so counterexamples at `n = 6` (which exist) can be
/// demonstrated.
pub fn check_lemma_3_1(n: usize, diagonals: &[(usize, usize)]) -> VerificationRecord {
    let witness = diagonals.iter().find(|&&(i, j)| {
        let span = j - i;
        span + 1 >= 4 && n - span + 1 >= 4
    });
    VerificationRecord::new(
        claim::LEMMA_3_1,
        n,
        None,
        n >= 7,
        witness.is_some(),
        json!({ "splitting_diagonal": witness.map(|&(i, j)| vec![i, j]) }),
    )
}

/// `locality`: only the diagonal endpoints and their immediate neighbors
/// may change local classification between the parent and its parts.
pub fn check_locality(
    parent_report: &ExtremalityReport,
    da: &DecompositionAnalysis,
) -> VerificationRecord {
    let n = parent_report.n;
    let (i, j) = da.decomposition.diagonal.as_pair();
    let affected: BTreeSet<usize> = [
        (i + n - 1) % n,
        i,
        (i + 1) % n,
        (j + n - 1) % n,
        j,
        (j + 1) % n,
    ]
    .into_iter()
    .collect();
    let mut checked = 0usize;
    let mut mismatches = Vec::new();
    for (part, part_report) in [
        (&da.decomposition.p1, &da.p1_report),
        (&da.decomposition.p2, &da.p2_report),
    ] {
        for (pos, &parent_idx) in part.parent_indices.iter().enumerate() {
            if affected.contains(&parent_idx) {
                continue;
            }
            checked += 1;
            if part_report.local_label(pos) != parent_report.local_label(parent_idx) {
                mismatches.push(parent_idx);
            }
        }
    }
    VerificationRecord::new(
        claim::LOCALITY,
        n,
        Some((i, j)),
        true,
        mismatches.is_empty(),
        json!({ "checked": checked, "mismatched_vertices": mismatches }),
    )
}

/// The six roles a local-extremality lemma can reference around a diagonal.
#[derive(Debug, Clone, Copy)]
struct LemmaRoles {
    /// Diagonal endpoint playing `B`.
    b: usize,
    /// The other endpoint, `D`.
    d: usize,
    /// Neighbor of `B` in `P1` / in `P2`.
    a: usize,
    c: usize,
    /// Neighbor of `D` in `P1` / in `P2`.
    e: usize,
    f: usize,
}

/// Evaluates all three local-extremality lemmas in every configuration:
/// both choices of which diagonal endpoint is `B`, both assignments of the
/// two parts to `P1`/`P2`, and both polarities (maxima and minima).
pub fn check_local_lemmas(
    parent_report: &ExtremalityReport,
    da: &DecompositionAnalysis,
) -> Vec<VerificationRecord> {
    let n = parent_report.n;
    let (i, j) = da.decomposition.diagonal.as_pair();
    let dec = &da.decomposition;
    let mut records = Vec::with_capacity(24);

    // Neighbor of `endpoint` along the given arc, away from the diagonal.
    let arc_neighbor = |endpoint: usize, low_arc: bool| -> usize {
        if low_arc {
            if endpoint == i {
                i + 1
            } else {
                j - 1
            }
        } else if endpoint == j {
            (j + 1) % n
        } else {
            (i + n - 1) % n
        }
    };

    for (b, d) in [(i, j), (j, i)] {
        for p1_low in [true, false] {
            let (part1, report1, part2, report2) = if p1_low {
                (&dec.p1, &da.p1_report, &dec.p2, &da.p2_report)
            } else {
                (&dec.p2, &da.p2_report, &dec.p1, &da.p1_report)
            };
            let roles = LemmaRoles {
                b,
                d,
                a: arc_neighbor(b, p1_low),
                c: arc_neighbor(b, !p1_low),
                e: arc_neighbor(d, p1_low),
                f: arc_neighbor(d, !p1_low),
            };
            for polarity in [ExtremalLabel::Max, ExtremalLabel::Min] {
                let in_parent = |v: usize| parent_report.local_label(v) == polarity;
                let in_p1 = |v: usize| {
                    report1.local_label(part1.position_of_parent(v).expect("role in part"))
                        == polarity
                };
                let in_p2 = |v: usize| {
                    report2.local_label(part2.position_of_parent(v).expect("role in part"))
                        == polarity
                };
                let config = json!({
                    "B": roles.b, "D": roles.d,
                    "A": roles.a, "C": roles.c,
                    "polarity": if polarity == ExtremalLabel::Max { "max" } else { "min" },
                    "p1": if p1_low { "low-arc" } else { "high-arc" },
                });

                let tag = |max: &'static str, min: &'static str| {
                    if polarity == ExtremalLabel::Max {
                        max
                    } else {
                        min
                    }
                };

                records.push(VerificationRecord::new(
                    tag(claim::LEMMA_4_1_MAX, claim::LEMMA_4_1_MIN),
                    n,
                    Some((i, j)),
                    in_p1(roles.a) && !in_parent(roles.a) && in_p2(roles.c) && !in_parent(roles.c),
                    in_parent(roles.b),
                    config.clone(),
                ));
                records.push(VerificationRecord::new(
                    tag(claim::LEMMA_4_2_MAX, claim::LEMMA_4_2_MIN),
                    n,
                    Some((i, j)),
                    in_p1(roles.a) && !in_parent(roles.a) && in_p2(roles.b),
                    in_parent(roles.b),
                    config.clone(),
                ));
                let mut config_43 = config;
                config_43["E"] = json!(roles.e);
                config_43["F"] = json!(roles.f);
                records.push(VerificationRecord::new(
                    tag(claim::LEMMA_4_3_MAX, claim::LEMMA_4_3_MIN),
                    n,
                    Some((i, j)),
                    in_p1(roles.a) && in_p1(roles.d) && in_p2(roles.d) && !in_parent(roles.d),
                    in_parent(roles.a),
                    config_43,
                ));
            }
        }
    }
    records
}

/// Runs every selected polygon-level claim on one polygon: the per-polygon
/// propositions, the four-vertex corollaries, the triangulation splitting
/// lemma, and all per-diagonal claims over every valid diagonal.
///
/// Records come out sorted by claim tag, then diagonal.
pub fn verify_polygon(
    polygon: &Polygon,
    selection: &ClaimSelection,
) -> Result<Vec<VerificationRecord>, VerificationError> {
    if !polygon.is_convex() {
        return Err(VerificationError::NotConvex);
    }
    let report = analyze(polygon)?;
    let n = report.n;
    let mut records = Vec::new();

    if selection.includes(claim::PROP_2_1) {
        records.push(check_prop_2_1(&report));
    }
    if selection.includes(claim::PROP_2_2) {
        records.push(check_prop_2_2(&report));
    }
    if selection.includes(claim::REMARK_2_1) {
        records.push(check_remark_2_1(polygon, &report)?);
    }
    let four_vertex_tags: &[&str] = &[claim::PROP_2_3, claim::COR_3_1, claim::COR_4_1];
    if (n == 4 || n >= 6) && selection.includes_any(four_vertex_tags) {
        for rec in check_four_vertex(&report).map_err(VerificationError::Decomposition)? {
            if selection.includes(&rec.claim) {
                records.push(rec);
            }
        }
    }

    let diagonal_tags: &[&str] = &[
        claim::THM_3_1_MINUS,
        claim::THM_3_1_PLUS,
        claim::THM_4_1_MINUS,
        claim::THM_4_1_PLUS,
        claim::LEMMA_3_2_MINUS,
        claim::LEMMA_3_2_PLUS,
        claim::LEMMA_4_1_MAX,
        claim::LEMMA_4_1_MIN,
        claim::LEMMA_4_2_MAX,
        claim::LEMMA_4_2_MIN,
        claim::LEMMA_4_3_MAX,
        claim::LEMMA_4_3_MIN,
        claim::LOCALITY,
    ];
    let run_diagonals = n >= 6 && selection.includes_any(diagonal_tags);
    let needs_triangulations = (run_diagonals
        && selection.includes_any(&[claim::THM_3_1_MINUS, claim::THM_3_1_PLUS]))
        || (n >= 7 && selection.includes(claim::LEMMA_3_1));

    let analyzed = if needs_triangulations {
        let ap = AnalyzedPolygon::new(polygon.clone())?;
        if n >= 7 && selection.includes(claim::LEMMA_3_1) {
            records.push(check_lemma_3_1(n, &ap.delaunay.diagonals));
        }
        Some(ap)
    } else {
        None
    };

    if run_diagonals {
        for d in valid_diagonals(polygon) {
            let da = DecompositionAnalysis::new(polygon, d)?;
            if let Some(ap) = &analyzed {
                if selection.includes_any(&[claim::THM_3_1_MINUS, claim::THM_3_1_PLUS]) {
                    for rec in check_theorem_3_1(ap, &da) {
                        if selection.includes(&rec.claim) {
                            records.push(rec);
                        }
                    }
                }
            }
            if n == 6 && selection.includes_any(&[claim::LEMMA_3_2_MINUS, claim::LEMMA_3_2_PLUS]) {
                for rec in check_lemma_3_2(&report, &da) {
                    if selection.includes(&rec.claim) {
                        records.push(rec);
                    }
                }
            }
            if selection.includes_any(&[claim::THM_4_1_MINUS, claim::THM_4_1_PLUS]) {
                for rec in check_theorem_4_1(&report, &da) {
                    if selection.includes(&rec.claim) {
                        records.push(rec);
                    }
                }
            }
            let lemma_tags: &[&str] = &[
                claim::LEMMA_4_1_MAX,
                claim::LEMMA_4_1_MIN,
                claim::LEMMA_4_2_MAX,
                claim::LEMMA_4_2_MIN,
                claim::LEMMA_4_3_MAX,
                claim::LEMMA_4_3_MIN,
            ];
            if selection.includes_any(lemma_tags) {
                for rec in check_local_lemmas(&report, &da) {
                    if selection.includes(&rec.claim) {
                        records.push(rec);
                    }
                }
            }
            if selection.includes(claim::LOCALITY) {
                records.push(check_locality(&report, &da));
            }
        }
    }

    records.sort_by(|a, b| {
        (&a.claim, a.diagonal)
            .cmp(&(&b.claim, b.diagonal))
    });
    Ok(records)
}

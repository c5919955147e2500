//! Exact sign-of-determinant predicates.
//!
//! All predicates decide strict inside/outside/left/right questions by the
//! sign of an integer determinant, evaluated after clearing denominators.
//! Small lattice inputs take an `i128` path; everything else falls back to
//! arbitrary precision integers. The two paths compute the same determinant,
//! so results are identical and bit-reproducible across runs and platforms.

use crate::point::{magnitude_bound, Point};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Three-way sign classification. No epsilon band: zero means exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn from_i128(v: i128) -> Self {
        match v {
            0 => Sign::Zero,
            v if v > 0 => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    fn from_bigint(v: &BigInt) -> Self {
        if v.is_zero() {
            Sign::Zero
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    /// Flips positive and negative, keeps zero.
    pub fn flipped(self) -> Self {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

/// Position of a query point relative to a circle: the open disc, the circle
/// itself, or the open exterior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleSide {
    Inside,
    On,
    Outside,
}

/// Position of a query point relative to an oriented line, where the
/// positive side is the half-plane containing the chosen reference point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfPlaneSide {
    PositiveSide,
    OnLine,
    NegativeSide,
}

/// Degeneracies that prevent a strict predicate answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("the three circle-defining points are collinear")]
    DegenerateCircle,
    #[error("the two line-defining points coincide")]
    DegenerateLine,
    #[error("the half-plane reference point lies on the line")]
    DegenerateReference,
    #[error("input configuration is not generic")]
    NonGenericInput,
}

const ORIENT_FAST_BOUND: i64 = 1_000_000_000_000_000;
const INCIRCLE_FAST_BOUND: i64 = 500_000_000;

fn small_lattice(p: &Point, bound: i64) -> Option<(i128, i128)> {
    if !p.is_lattice() {
        return None;
    }
    match magnitude_bound(p) {
        Some(m) if m <= bound => {
            let x: i64 = p.x.numer().try_into().ok()?;
            let y: i64 = p.y.numer().try_into().ok()?;
            Some((x as i128, y as i128))
        }
        _ => None,
    }
}

/// Scales a set of points onto a common integer grid by the least common
/// multiple of all denominators. Positive uniform scaling preserves the sign
/// of every predicate determinant used in this module.
fn cleared_ints<const N: usize>(points: [&Point; N]) -> [(BigInt, BigInt); N] {
    let mut l = BigInt::one();
    for p in points {
        l = l.lcm(p.x.denom());
        l = l.lcm(p.y.denom());
    }
    points.map(|p| {
        let sx = p.x.numer() * (&l / p.x.denom());
        let sy = p.y.numer() * (&l / p.y.denom());
        (sx, sy)
    })
}

/// Orientation of `c` against the directed line `a -> b`.
///
/// Positive when `c` lies strictly to the left, zero when the three points
/// are collinear. Equals the sign of the 2x2 displacement determinant.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Sign {
    if let (Some(pa), Some(pb), Some(pc)) = (
        small_lattice(a, ORIENT_FAST_BOUND),
        small_lattice(b, ORIENT_FAST_BOUND),
        small_lattice(c, ORIENT_FAST_BOUND),
    ) {
        let det = (pb.0 - pa.0) * (pc.1 - pa.1) - (pb.1 - pa.1) * (pc.0 - pa.0);
        return Sign::from_i128(det);
    }
    let [pa, pb, pc] = cleared_ints([a, b, c]);
    let det = (&pb.0 - &pa.0) * (&pc.1 - &pa.1) - (&pb.1 - &pa.1) * (&pc.0 - &pa.0);
    Sign::from_bigint(&det)
}

/// Sign of the lifted incircle determinant with rows `a, b, c, x`.
///
/// Positive means `x` is inside the circumcircle of a counterclockwise
/// `(a, b, c)`; the caller accounts for the base triangle's orientation.
fn lifted_sign(a: &Point, b: &Point, c: &Point, x: &Point) -> Sign {
    if let (Some(pa), Some(pb), Some(pc), Some(px)) = (
        small_lattice(a, INCIRCLE_FAST_BOUND),
        small_lattice(b, INCIRCLE_FAST_BOUND),
        small_lattice(c, INCIRCLE_FAST_BOUND),
        small_lattice(x, INCIRCLE_FAST_BOUND),
    ) {
        let rows = [pa, pb, pc].map(|(px_, py_)| {
            let dx = px_ - px.0;
            let dy = py_ - px.1;
            (dx, dy, dx * dx + dy * dy)
        });
        let det = rows[0].0 * (rows[1].1 * rows[2].2 - rows[1].2 * rows[2].1)
            - rows[0].1 * (rows[1].0 * rows[2].2 - rows[1].2 * rows[2].0)
            + rows[0].2 * (rows[1].0 * rows[2].1 - rows[1].1 * rows[2].0);
        return Sign::from_i128(det);
    }
    let [pa, pb, pc, px] = cleared_ints([a, b, c, x]);
    let rows = [pa, pb, pc].map(|(cx, cy)| {
        let dx = cx - &px.0;
        let dy = cy - &px.1;
        let norm = &dx * &dx + &dy * &dy;
        (dx, dy, norm)
    });
    let det = &rows[0].0 * (&rows[1].1 * &rows[2].2 - &rows[1].2 * &rows[2].1)
        - &rows[0].1 * (&rows[1].0 * &rows[2].2 - &rows[1].2 * &rows[2].0)
        + &rows[0].2 * (&rows[1].0 * &rows[2].1 - &rows[1].1 * &rows[2].0);
    Sign::from_bigint(&det)
}

/// Classifies `x` against the unique circle through `a`, `b`, `c`.
///
/// The result is orientation-normalized: it depends only on the point set
/// `{a, b, c}`, not on their order. Errors when the three points are
/// collinear and no circle exists.
pub fn in_circle(a: &Point, b: &Point, c: &Point, x: &Point) -> Result<CircleSide, PredicateError> {
    let orientation = orient(a, b, c);
    if orientation.is_zero() {
        return Err(PredicateError::DegenerateCircle);
    }
    let raw = lifted_sign(a, b, c, x);
    let normalized = match orientation {
        Sign::Positive => raw,
        Sign::Negative => raw.flipped(),
        Sign::Zero => unreachable!(),
    };
    Ok(match normalized {
        Sign::Positive => CircleSide::Inside,
        Sign::Zero => CircleSide::On,
        Sign::Negative => CircleSide::Outside,
    })
}

/// True when the four points lie on one common circle.
///
/// Errors only when every triple among the four is collinear, i.e. the four
/// points lie on a single line and no circle exists at all.
pub fn are_concyclic(
    a: &Point,
    b: &Point,
    c: &Point,
    d: &Point,
) -> Result<bool, PredicateError> {
    let triples: [(&Point, &Point, &Point, &Point); 4] =
        [(a, b, c, d), (a, b, d, c), (a, c, d, b), (b, c, d, a)];
    for (p, q, r, s) in triples {
        if !orient(p, q, r).is_zero() {
            return Ok(in_circle(p, q, r, s)? == CircleSide::On);
        }
    }
    Err(PredicateError::DegenerateCircle)
}

/// Side of the line `ab` on which `query` lies, where the positive side is
/// the open half-plane containing `reference`.
pub fn half_plane_side(
    a: &Point,
    b: &Point,
    reference: &Point,
    query: &Point,
) -> Result<HalfPlaneSide, PredicateError> {
    if a == b {
        return Err(PredicateError::DegenerateLine);
    }
    let ref_side = orient(a, b, reference);
    if ref_side.is_zero() {
        return Err(PredicateError::DegenerateReference);
    }
    Ok(match orient(a, b, query) {
        Sign::Zero => HalfPlaneSide::OnLine,
        s if s == ref_side => HalfPlaneSide::PositiveSide,
        _ => HalfPlaneSide::NegativeSide,
    })
}

/// Checks the four-case circle/half-plane implication for one generic
/// 4-point configuration.
///
/// Let `cb` be the circle through `a`, `b`, `c` and `ca` the circle through
/// `x`, `a`, `b`; the positive half-plane of line `ab` is the one holding
/// `c`. Exactly one of four cases applies to `x` (inside/outside `cb`,
/// positive/negative side of `ab`), and each case forces `c` inside or
/// outside `ca`:
///
/// * `x` inside `cb`, positive side  -> `c` outside `ca`
/// * `x` outside `cb`, positive side -> `c` inside `ca`
/// * `x` inside `cb`, negative side  -> `c` inside `ca`
/// * `x` outside `cb`, negative side -> `c` outside `ca`
///
/// Returns whether the forced conclusion actually holds. A `false` return
/// would falsify the implication table and indicates a predicate bug.
pub fn prop24_verify(a: &Point, b: &Point, c: &Point, x: &Point) -> Result<bool, PredicateError> {
    if orient(a, b, c).is_zero() || orient(x, a, b).is_zero() {
        return Err(PredicateError::NonGenericInput);
    }
    let x_side = match half_plane_side(a, b, c, x)? {
        HalfPlaneSide::OnLine => return Err(PredicateError::NonGenericInput),
        side => side,
    };
    let x_in_cb = match in_circle(a, b, c, x)? {
        CircleSide::On => return Err(PredicateError::NonGenericInput),
        side => side,
    };
    let c_in_ca = match in_circle(x, a, b, c)? {
        CircleSide::On => return Err(PredicateError::NonGenericInput),
        side => side,
    };
    let expected = match (x_in_cb, x_side) {
        (CircleSide::Inside, HalfPlaneSide::PositiveSide) => CircleSide::Outside,
        (CircleSide::Outside, HalfPlaneSide::PositiveSide) => CircleSide::Inside,
        (CircleSide::Inside, HalfPlaneSide::NegativeSide) => CircleSide::Inside,
        (CircleSide::Outside, HalfPlaneSide::NegativeSide) => CircleSide::Outside,
        _ => unreachable!(),
    };
    Ok(c_in_ca == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{coord_ratio, pt, Coordinate, Point};
    use proptest::prelude::*;

    /// Independent incircle oracle: solve the circumcenter from the two
    /// perpendicular-bisector equations over exact rationals and compare
    /// squared distances. Shares no code with the determinant path.
    fn circumcenter(a: &Point, b: &Point, c: &Point) -> Option<Point> {
        let two = coord_ratio(2, 1);
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
        let ox = (&r1 * &m22 - &m12 * &r2) / &det;
        let oy = (&m11 * &r2 - &r1 * &m21) / &det;
        Some(Point::new(ox, oy))
    }

    fn in_circle_oracle(a: &Point, b: &Point, c: &Point, x: &Point) -> Option<CircleSide> {
        let center = circumcenter(a, b, c)?;
        let r_sq: Coordinate = center.distance_sq(a);
        let d_sq: Coordinate = center.distance_sq(x);
        Some(if d_sq < r_sq {
            CircleSide::Inside
        } else if d_sq == r_sq {
            CircleSide::On
        } else {
            CircleSide::Outside
        })
    }

    #[test]
    fn orient_basic_turns() {
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(0, 1)), Sign::Positive);
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(2, 0)), Sign::Zero);
        assert_eq!(orient(&pt(0, 0), &pt(1, 0), &pt(0, -1)), Sign::Negative);
    }

    #[test]
    fn in_circle_right_triangle_cases() {
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(0, 4));
        assert_eq!(in_circle(&a, &b, &c, &pt(2, 2)).unwrap(), CircleSide::Inside);
        assert_eq!(in_circle(&a, &b, &c, &pt(4, 4)).unwrap(), CircleSide::On);
        // Order reversal must not change the classification.
        assert_eq!(
            in_circle(&a, &c, &b, &pt(2, 2)).unwrap(),
            CircleSide::Inside
        );
    }

    #[test]
    fn in_circle_matches_circumcenter_oracle_on_fixture() {
        // Circumcircle of (0,0),(5,0),(6,4) versus the query (1,5): the
        // lifted determinant for the CCW triple evaluates to 130.
        let (a, b, c, x) = (pt(0, 0), pt(5, 0), pt(6, 4), pt(1, 5));
        assert_eq!(in_circle(&a, &b, &c, &x).unwrap(), CircleSide::Inside);
        assert_eq!(in_circle_oracle(&a, &b, &c, &x).unwrap(), CircleSide::Inside);
        assert!(!are_concyclic(&a, &b, &c, &x).unwrap());
    }

    #[test]
    fn in_circle_rejects_collinear_base() {
        assert_eq!(
            in_circle(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(0, 1)),
            Err(PredicateError::DegenerateCircle)
        );
    }

    #[test]
    fn concyclic_square_and_line() {
        assert!(are_concyclic(&pt(0, 0), &pt(1, 0), &pt(1, 1), &pt(0, 1)).unwrap());
        assert!(are_concyclic(&pt(0, 0), &pt(4, 0), &pt(0, 4), &pt(4, 4)).unwrap());
        assert_eq!(
            are_concyclic(&pt(0, 0), &pt(1, 0), &pt(2, 0), &pt(3, 0)),
            Err(PredicateError::DegenerateCircle)
        );
    }

    #[test]
    fn half_plane_reference_orientation() {
        let (a, b, r) = (pt(0, 0), pt(4, 0), pt(2, 3));
        assert_eq!(
            half_plane_side(&a, &b, &r, &pt(2, 1)).unwrap(),
            HalfPlaneSide::PositiveSide
        );
        assert_eq!(
            half_plane_side(&a, &b, &r, &pt(2, -1)).unwrap(),
            HalfPlaneSide::NegativeSide
        );
        assert_eq!(
            half_plane_side(&a, &b, &r, &pt(2, 0)).unwrap(),
            HalfPlaneSide::OnLine
        );
        assert_eq!(
            half_plane_side(&a, &a, &r, &pt(2, 0)),
            Err(PredicateError::DegenerateLine)
        );
        assert_eq!(
            half_plane_side(&a, &b, &pt(3, 0), &pt(2, 1)),
            Err(PredicateError::DegenerateReference)
        );
    }

    #[test]
    fn prop24_fixture_cases() {
        // Circumcircle of (0,0),(4,0),(2,3) has center (2, 5/6) and radius
        // 13/6; the circle through (2,1),(0,0),(4,0) has center (2, -3/2)
        // and radius 5/2. Both derived cases must satisfy the implication.
        let (a, b, c) = (pt(0, 0), pt(4, 0), pt(2, 3));
        assert!(prop24_verify(&a, &b, &c, &pt(2, 1)).unwrap());
        assert!(prop24_verify(&a, &b, &c, &pt(2, -1)).unwrap());
        assert_eq!(
            prop24_verify(&a, &b, &pt(8, 0), &pt(2, 1)),
            Err(PredicateError::NonGenericInput)
        );
    }

    #[test]
    fn prop24_fixture_circle_geometry() {
        let center_b = circumcenter(&pt(0, 0), &pt(4, 0), &pt(2, 3)).unwrap();
        assert_eq!(center_b, Point::new(coord_ratio(2, 1), coord_ratio(5, 6)));
        assert_eq!(center_b.distance_sq(&pt(0, 0)), coord_ratio(169, 36));
        let center_a = circumcenter(&pt(2, 1), &pt(0, 0), &pt(4, 0)).unwrap();
        assert_eq!(center_a, Point::new(coord_ratio(2, 1), coord_ratio(-3, 2)));
        assert_eq!(center_a.distance_sq(&pt(0, 0)), coord_ratio(25, 4));
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (-50i64..=50, -50i64..=50).prop_map(|(x, y)| pt(x, y))
    }

    fn scaled(p: &Point, num: i64, den: i64) -> Point {
        let f = coord_ratio(num, den);
        Point::new(&p.x * &f, &p.y * &f)
    }

    proptest! {
        #[test]
        fn orient_antisymmetry(a in arb_point(), b in arb_point(), c in arb_point()) {
            prop_assert_eq!(orient(&a, &b, &c), orient(&b, &a, &c).flipped());
            prop_assert_eq!(orient(&a, &b, &c), orient(&a, &c, &b).flipped());
        }

        #[test]
        fn in_circle_permutation_invariance(
            a in arb_point(), b in arb_point(), c in arb_point(), x in arb_point()
        ) {
            prop_assume!(!orient(&a, &b, &c).is_zero());
            let base = in_circle(&a, &b, &c, &x).unwrap();
            for (p, q, r) in [(&a,&c,&b), (&b,&a,&c), (&b,&c,&a), (&c,&a,&b), (&c,&b,&a)] {
                prop_assert_eq!(in_circle(p, q, r, &x).unwrap(), base);
            }
        }

        #[test]
        fn in_circle_agrees_with_circumcenter_oracle(
            a in arb_point(), b in arb_point(), c in arb_point(), x in arb_point()
        ) {
            prop_assume!(!orient(&a, &b, &c).is_zero());
            let got = in_circle(&a, &b, &c, &x).unwrap();
            let oracle = in_circle_oracle(&a, &b, &c, &x).unwrap();
            prop_assert_eq!(got, oracle);
        }

        #[test]
        fn in_circle_on_iff_concyclic(
            a in arb_point(), b in arb_point(), c in arb_point(), x in arb_point()
        ) {
            prop_assume!(!orient(&a, &b, &c).is_zero());
            let on = in_circle(&a, &b, &c, &x).unwrap() == CircleSide::On;
            prop_assert_eq!(on, are_concyclic(&a, &b, &c, &x).unwrap());
        }

        #[test]
        fn rational_scaling_preserves_classification(
            a in arb_point(), b in arb_point(), c in arb_point(), x in arb_point()
        ) {
            prop_assume!(!orient(&a, &b, &c).is_zero());
            // Scaling by 1/3 forces the arbitrary-precision path; both
            // paths must classify identically.
            let got = in_circle(
                &scaled(&a, 1, 3), &scaled(&b, 1, 3), &scaled(&c, 1, 3), &scaled(&x, 1, 3)
            ).unwrap();
            prop_assert_eq!(got, in_circle(&a, &b, &c, &x).unwrap());
        }

        #[test]
        fn prop24_holds_on_generic_squares(
            a in arb_point(), b in arb_point(), c in arb_point(), x in arb_point()
        ) {
            if let Ok(ok) = prop24_verify(&a, &b, &c, &x) {
                prop_assert!(ok);
            }
        }
    }
}

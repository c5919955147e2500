//! Cross-module invariants over generated corpora.

use vertex_extrema::decomposition::{decompose, valid_diagonals};
use vertex_extrema::extremality::{analyze, ExtremalLabel};
use vertex_extrema::generator::{random_generic_convex, GenSpec};
use vertex_extrema::polygon::Polygon;

fn corpus() -> impl Iterator<Item = Polygon> {
    (0..200u64).map(|i| {
        let n = 4 + (i % 9) as usize;
        random_generic_convex(&GenSpec::new(n, 0x11AA + i)).unwrap()
    })
}

#[test]
fn no_two_adjacent_vertices_share_an_extremum_polarity() {
    for p in corpus() {
        let report = analyze(&p).unwrap();
        let n = report.n;
        for i in 0..n {
            let a = report.local_label(i);
            let b = report.local_label((i + 1) % n);
            if a != ExtremalLabel::None {
                assert_ne!(
                    a,
                    b,
                    "adjacent vertices {i} and {} are both {a:?} in {}",
                    (i + 1) % n,
                    p.to_json()
                );
            }
        }
    }
}

#[test]
fn decomposition_parts_inherit_convexity_and_genericity() {
    for p in corpus() {
        for d in valid_diagonals(&p) {
            let dec = decompose(&p, d).unwrap();
            for part in [&dec.p1, &dec.p2] {
                assert!(part.polygon.is_convex());
                let report = part.polygon.check_genericity();
                assert!(
                    report.is_generic(),
                    "part {:?} of {} lost genericity: {:?}",
                    part.parent_indices,
                    p.to_json(),
                    report.violations
                );
            }
        }
    }
}

#[test]
fn global_count_alternation_on_quadrilaterals() {
    // The four neighbor circles of a generic quadrilateral alternate
    // empty/full around the cycle, so global labels alternate max/min.
    for seed in 0..100u64 {
        let p = random_generic_convex(&GenSpec::new(4, seed)).unwrap();
        let report = analyze(&p).unwrap();
        for i in 0..4 {
            assert_ne!(report.global_label(i), report.global_label((i + 1) % 4));
        }
    }
}

use khplat::checks::curve_relations;
use khplat::curve::{figure_eight_brane, AxisCrossing, Curve, interval_brane, intersections, MarkedSurface};

#[test]
fn group_action_on_four_and_six_punctures() {
    for n in [4, 6] {
        let r = curve_relations(n, 300, 10, 21);
        assert!(r.passed(), "{}", r);
    }
}

fn reversed_and_shifted(c: &Curve, dk: i64, dd: i64) -> Curve {
    Curve {
        surface: c.surface,
        crossings: c
            .crossings
            .iter()
            .rev()
            .map(|x| AxisCrossing::new(x.seg, x.k + dk, x.d + dd))
            .collect(),
    }
}

// The twist of the encircled pair maps the figure-eight to itself as a
// set; the traversal direction flips and the grading moves by one step.
#[test]
fn half_twists_of_the_encircled_pair_fix_the_figure_eight() {
    let s = MarkedSurface::new(4).unwrap();
    let e = figure_eight_brane(s, 2).unwrap();
    for sign in [1i8, -1] {
        let t = e.apply_generator(3, sign).unwrap();
        let s = sign as i64;
        assert!(t.same_class(&reversed_and_shifted(&e, s, -s)), "{:?}", t);
    }
    assert!(!e.apply_generator(2, 1).unwrap().same_class(&e));
}

#[test]
fn trefoil_meets_interval_three_times() {
    let s = MarkedSurface::new(4).unwrap();
    let c = figure_eight_brane(s, 2).unwrap().apply_word(&[(2, 1); 3]).unwrap();
    let i = interval_brane(s, 2).unwrap();
    assert_eq!(intersections(&c, &i).unwrap().count(), 3);
    assert!(c.is_normal());
}

use khplat::corpus::{oracle_jones, random_words};
use khplat::invariants::{reduced_homology, transport, PipelineError};
use khplat::plat::{component_count, parse_braid_word, PlatPresentation};

fn plat(s: &str, marked: usize) -> PlatPresentation {
    PlatPresentation::new(parse_braid_word(s).unwrap(), marked).unwrap()
}

fn support(s: &str) -> Vec<((i64, i64), usize)> {
    reduced_homology(&plat(s, 2)).unwrap().groups_ij.free_support()
}

#[test]
fn oracle_agrees_on_named_links() {
    for w in ["4: S2 S2 S2", "4: s2 s2 s2", "4: s2", "4: S2 S2", "4: s2 S1 S1 S2 S2", "4:"] {
        let p = plat(w, 2);
        let h = reduced_homology(&p).unwrap();
        assert_eq!(h.jones_t(), oracle_jones(&p.braid).unwrap(), "{}", w);
    }
}

#[test]
fn left_trefoil_in_both_gradings() {
    let h = reduced_homology(&plat("4: S2 S2 S2", 2)).unwrap();
    let kd: Vec<_> = h.groups_kd.rows();
    assert_eq!(kd, vec![(0, 0, 1, vec![]), (2, -2, 1, vec![]), (3, -3, 1, vec![])]);
    assert_eq!(
        support("4: S2 S2 S2"),
        vec![((-3, -8), 1), ((-2, -6), 1), ((0, -2), 1)]
    );
}

#[test]
fn small_links() {
    // figure-eight: thin, one class per diagonal step
    assert_eq!(
        support("4: s2 S1 S1 S2 S2"),
        vec![((-2, -4), 1), ((-1, -2), 1), ((0, 0), 1), ((1, 2), 1), ((2, 4), 1)]
    );
    assert_eq!(support("4: S2 S2"), vec![((-2, -5), 1), ((0, -1), 1)]);
    // the two-component unlink has rank 2
    assert_eq!(support("4:"), vec![((0, -1), 1), ((0, 1), 1)]);
}

#[test]
fn marked_pair_does_not_matter_for_knots() {
    for w in random_words(11, 4, 120, 9) {
        if component_count(&w) != 1 {
            continue;
        }
        let a = reduced_homology(&PlatPresentation::new(w.clone(), 1).unwrap()).unwrap();
        let b = reduced_homology(&PlatPresentation::new(w.clone(), 2).unwrap()).unwrap();
        assert_eq!(a.groups_ij, b.groups_ij, "{}", w);
    }
}

#[test]
fn complexes_are_valid_and_torsion_free_here() {
    for w in random_words(5, 4, 100, 10) {
        let t = transport(&plat(&w.to_string(), 2)).unwrap();
        assert_eq!(t.complex.validate(), khplat::complexes::Validation::Ok);
        let h = t.complex.hom_to_simple(t.marked_node).cohomology().unwrap();
        assert!(h.groups.values().all(|g| g.torsion.is_empty()), "{}", w);
    }
}

#[test]
fn six_strands_are_refused() {
    let p = plat("6: s2 s4", 1);
    assert_eq!(reduced_homology(&p).unwrap_err(), PipelineError::UnsupportedStrands(6));
}

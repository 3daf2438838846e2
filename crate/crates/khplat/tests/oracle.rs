use khplat::checks::{reidemeister, skein};
use khplat::corpus::{oracle_jones, random_words};
use khplat::laurent::LaurentPoly;
use khplat::oracle::{jones_to_q, kauffman_bracket};
use khplat::plat::{parse_braid_word, plat_to_diagram};

fn v(s: &str) -> String {
    oracle_jones(&parse_braid_word(s).unwrap()).unwrap().display("t", 4)
}

#[test]
fn textbook_values() {
    assert_eq!(v("4: s2"), "1");
    assert_eq!(v("4: S2 S2 S2"), "t^-1 + t^-3 - t^-4");
    assert_eq!(v("4: s2 S1 S1 S2 S2"), "t^2 - t + 1 - t^-1 + t^-2");
    assert_eq!(v("2:"), "1");
    // the 3-component unlink
    assert_eq!(v("6:"), "t + 2 + t^-1");
}

#[test]
fn unknot_bracket_is_one() {
    let d = plat_to_diagram(&parse_braid_word("4: s2").unwrap());
    let b = kauffman_bracket(&d).unwrap();
    assert_eq!(b.terms().count(), 1);
    assert_eq!(b.terms().next().unwrap().1.abs(), 1);
}

#[test]
fn bridge_to_q() {
    let p = oracle_jones(&parse_braid_word("4: S2 S2 S2").unwrap()).unwrap();
    let q: LaurentPoly = [(-2, 1), (-6, 1), (-8, -1)].into_iter().collect();
    assert_eq!(jones_to_q(&p).unwrap(), q);
}

#[test]
fn reidemeister_moves() {
    let r = reidemeister(&random_words(4, 4, 25, 7)).unwrap();
    assert!(r.passed(), "{}", r);
}

#[test]
fn skein_relation_on_many_triples() {
    let r = skein(&random_words(9, 4, 15, 8)).unwrap();
    assert!(r.checked >= 20);
    assert!(r.passed(), "{}", r);
    let r6 = skein(&random_words(9, 6, 5, 6)).unwrap();
    assert!(r6.passed(), "{}", r6);
}

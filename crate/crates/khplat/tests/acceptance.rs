//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons,
//! wall-clock limits enforced. Exits nonzero if any criterion fails.

use khplat::checks::{
    curve_relations, decategorification, intersections, invariance, mirror, reidemeister, skein,
    unknot, SuiteReport,
};
use khplat::corpus::{move_pairs, random_words, unknot_corpus};
use khplat::invariants::reduced_homology;
use khplat::plat::{parse_braid_word, PlatPresentation};
use std::time::{Duration, Instant};

const SEED: u64 = 2024;

struct Line {
    ok: bool,
    text: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let x = f();
    (x, t.elapsed())
}

fn verdict(n: usize, what: &str, ok: bool, elapsed: Duration, limit: Duration, detail: String) -> Line {
    let in_time = elapsed < limit;
    let ok = ok && in_time;
    Line {
        ok,
        text: format!(
            "criterion {} {}: {} ({}; {:.3} s, limit {} s)",
            n,
            if ok { "PASS" } else { "FAIL" },
            what,
            detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        ),
    }
}

fn suite_line(n: usize, what: &str, r: &SuiteReport, min: usize, elapsed: Duration, limit: Duration) -> Line {
    let mut detail = format!("{} checked, {} failed", r.checked, r.failures.len());
    if r.checked < min {
        detail += &format!(", fewer than the required {}", min);
    }
    if let Some(first) = r.failures.first() {
        detail += &format!(", first: {}", first);
    }
    verdict(n, what, r.passed() && r.checked >= min, elapsed, limit, detail)
}

fn criterion_1() -> Line {
    let (res, el) = timed(|| {
        let p = PlatPresentation::new(parse_braid_word("4: S2 S2 S2").unwrap(), 2).unwrap();
        reduced_homology(&p).unwrap()
    });
    let kd = res.groups_kd.rows();
    let ij = res.groups_ij.rows();
    let ok = kd == vec![(0, 0, 1, vec![]), (2, -2, 1, vec![]), (3, -3, 1, vec![])]
        && ij == vec![(-3, -8, 1, vec![]), (-2, -6, 1, vec![]), (0, -2, 1, vec![])]
        && (res.counts.n_plus, res.counts.n_minus) == (0, 3);
    verdict(
        1,
        "trefoil table",
        ok,
        el,
        Duration::from_secs(1),
        format!("(k,d) {:?}, (i,j) {:?}", kd, ij),
    )
}

fn criterion_2() -> Line {
    let (r, el) = timed(|| unknot(&unknot_corpus(SEED, 150, 10).unwrap()).unwrap());
    suite_line(2, "unknot normalization", &r, 100, el, Duration::from_secs(10))
}

fn criterion_3() -> Line {
    let (r, el) = timed(|| decategorification(&random_words(SEED, 4, 400, 12)).unwrap());
    suite_line(3, "decategorification", &r, 200, el, Duration::from_secs(120))
}

fn criterion_4() -> Line {
    let (r, el) = timed(|| invariance(&move_pairs(SEED, 40, 10)).unwrap());
    suite_line(4, "invariance under moves", &r, 100, el, Duration::from_secs(120))
}

fn criterion_5() -> Line {
    let (r, el) = timed(|| mirror(&random_words(SEED, 4, 400, 12)).unwrap());
    suite_line(5, "mirror duality", &r, 200, el, Duration::from_secs(120))
}

fn criterion_6() -> Line {
    let (r, el) = timed(|| {
        let mut r = curve_relations(4, 1000, 12, SEED);
        let r6 = curve_relations(6, 1000, 12, SEED + 1);
        r.checked += r6.checked;
        r.failures.extend(r6.failures);
        r
    });
    // three relations per instance, 1000 instances for each n
    suite_line(6, "curve braid relations", &r, 6000, el, Duration::from_secs(60))
}

fn criterion_7() -> Line {
    let (r, el) = timed(|| intersections(&random_words(SEED, 4, 400, 12)).unwrap());
    suite_line(7, "intersections = generators", &r, 200, el, Duration::from_secs(60))
}

fn criterion_8() -> Line {
    let (res, el) = timed(|| {
        let words = random_words(SEED, 4, 40, 8);
        let rm = reidemeister(&words).unwrap();
        let sk = skein(&random_words(SEED + 1, 4, 20, 10)).unwrap();
        (rm, sk)
    });
    let (rm, sk) = res;
    let mut both = SuiteReport {
        suite: "oracle".into(),
        checked: rm.checked + sk.checked,
        failures: rm.failures.clone(),
    };
    both.failures.extend(sk.failures.clone());
    if sk.checked < 20 {
        both.failures.push(format!("only {} skein triples", sk.checked));
    }
    let mut line = suite_line(8, "oracle self-consistency", &both, 20, el, Duration::from_secs(30));
    line.text += &format!(" [{} Reidemeister checks, {} skein triples]", rm.checked, sk.checked);
    line
}

fn main() {
    let lines = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    for l in &lines {
        println!("{}", l.text);
    }
    if lines.iter().any(|l| !l.ok) {
        std::process::exit(1);
    }
}

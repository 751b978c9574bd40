mod common;

use sullivan::catalog::Catalog;
use sullivan::cohomology::Cohomology;
use sullivan::csym::{finiteness, Finiteness};
use sullivan::differential::formal_dimension;

/// Degree range checked for models without a finite formal dimension.
const OPEN_RANGE: u32 = 24;

fn top_degree(m: &sullivan::differential::Model) -> u32 {
    match finiteness(m) {
        Ok(r) if r.verdict == Finiteness::Finite => formal_dimension(m) as u32 + 2,
        _ => OPEN_RANGE,
    }
}

#[test]
fn every_model_squares_to_zero() {
    for (name, m) in common::catalog_models() {
        let r = m.check_d_squared();
        assert!(r.passed(), "{name}: {:?}", r.offenders);
    }
}

#[test]
fn betti_numbers_match_naive_elimination() {
    for (name, m) in common::catalog_models() {
        let top = top_degree(&m);
        let coh = Cohomology::new(&m);
        let fast: Vec<usize> = (0..=top).map(|n| coh.betti(n).unwrap()).collect();
        assert_eq!(fast, common::naive_betti_range(&m, 0, top), "{name}");
    }
}

#[test]
fn rank_nullity() {
    for (name, m) in common::catalog_models() {
        let coh = Cohomology::new(&m);
        for n in 0..=top_degree(&m) {
            let dim = coh.slice(n).unwrap().dim();
            let below = if n == 0 { 0 } else { coh.rank_d(n - 1).unwrap() };
            assert_eq!(dim, coh.rank_d(n).unwrap() + below + coh.betti(n).unwrap(), "{name} degree {n}");
            assert_eq!(dim, common::naive_dim(&m, n), "{name} degree {n}");
        }
    }
}

#[test]
fn finite_models_satisfy_duality() {
    let mut checked = 0;
    for (name, m) in common::catalog_models() {
        let Ok(r) = finiteness(&m) else { continue };
        if r.verdict != Finiteness::Finite {
            continue;
        }
        let fd = formal_dimension(&m) as u32;
        let coh = Cohomology::new(&m);
        let b: Vec<usize> = (0..=fd + 2).map(|n| coh.betti(n).unwrap()).collect();
        assert_eq!(b[fd as usize], 1, "{name}");
        assert_eq!(&b[fd as usize + 1..], &[0, 0], "{name}");
        for i in 0..=fd as usize {
            assert_eq!(b[i], b[fd as usize - i], "{name} degree {i}");
        }
        assert!(coh.poincare_check(fd, None).unwrap().passed(), "{name}");
        checked += 1;
    }
    assert!(checked > 100, "only {checked} finite models");
}

#[test]
fn catalog_replays_cleanly() {
    let cat = Catalog::open(common::catalog_dir()).unwrap();
    assert!(cat.undeclared_citations().unwrap().is_empty());
    let ids = cat.ids().unwrap();
    assert!(ids.len() >= 40);
    for (id, report) in cat.run_all().unwrap() {
        let report = report.unwrap_or_else(|e| panic!("{id}: {e}"));
        let failed: Vec<String> = report.lines.iter().filter(|l| !l.passed).map(|l| l.to_string()).collect();
        assert!(failed.is_empty(), "{id}:\n{}", failed.join("\n"));
    }
}

#[test]
fn unknown_entry_is_an_error() {
    let cat = Catalog::open(common::catalog_dir()).unwrap();
    assert!(cat.run_entry("no-such-entry").is_err());
}

mod common;

use proptest::prelude::*;
use sullivan::cohomology::{Cohomology, Exactness};
use sullivan::csym::{crosswise_criterion, crosswise_witness, finiteness, is_c_symplectic, CsymStatus, DegreeTuple, Finiteness};
use sullivan::differential::{formal_dimension, Model};
use sullivan::{enumerate_degree_basis, multiply, Element, Monomial};

/// Monomials `t1^a1 ⋯ tr^ar` of total degree `deg` (even), as text.
fn t_monomials(r: usize, deg: u32) -> Vec<String> {
    let mut out = Vec::new();
    let total = deg / 2;
    let mut exps = vec![0u32; r];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<String>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            let parts: Vec<String> =
                exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(j, e)| format!("t{}^{e}", j + 1)).collect();
            out.push(parts.join("*"));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    rec(0, total, &mut exps, &mut out);
    out
}

fn join_terms(terms: &[(i32, String)]) -> String {
    let mut out = String::new();
    for (k, (c, m)) in terms.iter().enumerate() {
        let sep = match (k, *c < 0) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out += &format!("{sep}{}*{m}", c.abs());
    }
    out
}

#[derive(Clone, Debug)]
struct Spec {
    r: usize,
    odd: Vec<u32>,
    /// Per odd generator: optional coefficients for base monomials, and an
    /// optional coefficient for a product of two earlier closed generators.
    polys: Vec<(bool, Vec<i32>, i32)>,
}

fn spec_strategy() -> impl Strategy<Value = Spec> {
    (1usize..=2, prop::collection::vec(prop::sample::select(vec![3u32, 5, 7]), 1..=4)).prop_flat_map(|(r, odd)| {
        let n = odd.len();
        let polys = prop::collection::vec((any::<bool>(), prop::collection::vec(-3i32..=3, 5), -2i32..=2), n);
        polys.prop_map(move |polys| Spec { r, odd: odd.clone(), polys })
    })
}

fn build(spec: &Spec) -> Model {
    let mut text = String::new();
    for j in 1..=spec.r {
        text += &format!("gen t{j} 2\n");
    }
    for (i, d) in spec.odd.iter().enumerate() {
        text += &format!("gen v{} {d}\n", i + 1);
    }
    let mut closed: Vec<usize> = Vec::new();
    for (i, &deg) in spec.odd.iter().enumerate() {
        let (active, coeffs, mixed) = &spec.polys[i];
        let mut terms: Vec<(i32, String)> = Vec::new();
        if *active {
            for (m, c) in t_monomials(spec.r, deg + 1).iter().zip(coeffs) {
                if *c != 0 {
                    terms.push((*c, m.clone()));
                }
            }
        }
        if *mixed != 0 {
            let pair = closed.iter().enumerate().find_map(|(x, &a)| {
                closed[x + 1..].iter().find(|&&b| spec.odd[a] + spec.odd[b] <= deg + 1).map(|&b| (a, b))
            });
            if let Some((a, b)) = pair {
                let rest = deg + 1 - spec.odd[a] - spec.odd[b];
                let t = if rest == 0 { String::new() } else { format!("*t1^{}", rest / 2) };
                terms.push((*mixed, format!("v{}*v{}{t}", a + 1, b + 1)));
            }
        }
        if terms.is_empty() {
            closed.push(i);
        } else {
            text += &format!("d v{} = {}\n", i + 1, join_terms(&terms));
        }
    }
    Model::parse(&text).unwrap()
}

fn random_monomial(m: &Model, picks: &[u32]) -> Element {
    let exps: Vec<u32> = m
        .algebra()
        .generators()
        .iter()
        .zip(picks.iter().cycle())
        .map(|(g, &p)| if g.is_odd() { p % 2 } else { p % 3 })
        .collect();
    Element::monomial(m.algebra(), Monomial::from_exponents(exps), sullivan::algebra::rat(1))
}

fn sign(e: &Element) -> i64 {
    if e.degree().unwrap_or(0) % 2 == 1 {
        -1
    } else {
        1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differential_squares_to_zero(spec in spec_strategy()) {
        let m = build(&spec);
        prop_assert!(m.check_d_squared().passed());
    }

    #[test]
    fn betti_matches_oracle(spec in spec_strategy()) {
        let m = build(&spec);
        let coh = Cohomology::new(&m);
        let fast: Vec<usize> = (0..=18).map(|n| coh.betti(n).unwrap()).collect();
        prop_assert_eq!(fast, common::naive_betti_range(&m, 0, 18));
    }

    #[test]
    fn basis_enumeration_matches_recursion(spec in spec_strategy(), n in 0u32..20) {
        let m = build(&spec);
        let slice = enumerate_degree_basis(m.algebra(), n);
        let degrees: Vec<u32> = m.algebra().generators().iter().map(|g| g.degree()).collect();
        let mut naive = common::naive_basis(&degrees, n);
        naive.sort_unstable_by(|a, b| b.cmp(a));
        let got: Vec<Vec<u32>> = slice.basis().iter().map(|mo| mo.exponents().to_vec()).collect();
        prop_assert_eq!(got, naive);
    }

    #[test]
    fn leibniz_and_graded_commutativity(spec in spec_strategy(), a in prop::collection::vec(0u32..6, 6), b in prop::collection::vec(0u32..6, 6), c in prop::collection::vec(0u32..6, 6)) {
        let m = build(&spec);
        let (x, y, z) = (random_monomial(&m, &a), random_monomial(&m, &b), random_monomial(&m, &c));
        let xy = multiply(&x, &y).unwrap();
        let yx = multiply(&y, &x).unwrap();
        let both_odd = sign(&x) == -1 && sign(&y) == -1;
        let expected = if both_odd { yx.scale(&sullivan::algebra::rat(-1)) } else { yx };
        prop_assert_eq!(&xy, &expected);
        prop_assert_eq!(multiply(&xy, &z).unwrap(), multiply(&x, &multiply(&y, &z).unwrap()).unwrap());
        let lhs = m.d(&xy);
        let rhs = multiply(&m.d(&x), &y).unwrap()
            .try_add(&multiply(&x, &m.d(&y)).unwrap().scale(&sullivan::algebra::rat(sign(&x))))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn boundaries_are_exact_with_witness(spec in spec_strategy(), a in prop::collection::vec(0u32..6, 6), b in prop::collection::vec(0u32..6, 6)) {
        let m = build(&spec);
        let (x, y) = (random_monomial(&m, &a), random_monomial(&m, &b));
        let e = if x.degree() == y.degree() { x.try_add(&y.scale(&sullivan::algebra::rat(-2))).unwrap() } else { x };
        let de = m.d(&e);
        prop_assume!(!de.is_zero());
        match Cohomology::new(&m).is_coboundary(&de).unwrap() {
            Exactness::Exact(w) => prop_assert_eq!(m.d(&w), de),
            Exactness::NotExact => prop_assert!(false, "d(e) reported non-exact"),
        }
    }

    #[test]
    fn finite_models_satisfy_duality(spec in spec_strategy()) {
        let m = build(&spec);
        let r = finiteness(&m).unwrap();
        prop_assume!(r.verdict == Finiteness::Finite);
        let fd = formal_dimension(&m);
        prop_assert!(fd >= 0);
        let fd = fd as u32;
        let b = common::naive_betti_range(&m, 0, fd + 2);
        prop_assert_eq!(b[fd as usize], 1);
        prop_assert_eq!(b[fd as usize + 1] + b[fd as usize + 2], 0);
        for i in 0..=fd as usize {
            prop_assert_eq!(b[i], b[fd as usize - i]);
        }
    }

    #[test]
    fn infinite_verdicts_have_cohomology_beyond_fd(spec in spec_strategy()) {
        let m = build(&spec);
        let r = finiteness(&m).unwrap();
        prop_assume!(r.verdict == Finiteness::Infinite);
        let coh = Cohomology::new(&m);
        let top = (formal_dimension(&m).max(0) as u32) + 1;
        prop_assert!((top..top + 8).any(|n| coh.betti(n).unwrap() > 0));
    }
}

fn valid_tuple() -> impl Strategy<Value = DegreeTuple> {
    prop::sample::select(vec![1usize, 3])
        .prop_flat_map(|n| prop::collection::vec((1u32..=7).prop_map(|h| 2 * h + 1), n))
        .prop_filter_map("criterion must hold", |v| {
            let k = DegreeTuple::new(v).ok()?;
            crosswise_criterion(&k).holds.then_some(k)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witness_is_finite_and_c_symplectic(k in valid_tuple()) {
        let m = crosswise_witness(&k).unwrap();
        prop_assert!(m.check_d_squared().passed());
        prop_assert_eq!(finiteness(&m).unwrap().verdict, Finiteness::Finite);
        prop_assert_eq!(is_c_symplectic(&m).unwrap().status, CsymStatus::CSymplectic);
    }
}

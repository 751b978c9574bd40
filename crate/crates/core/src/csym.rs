//! Finiteness, formal dimension and cohomological symplecticity.
//!
//! Finiteness of cohomology is decided through pure parts: for a model whose
//! even generators have degree 2 and zero differential, cohomology is finite
//! exactly when the polynomial algebra on the even generators modulo the
//! odd-free parts of the odd generators' differentials is finite. A graded
//! quotient generated in degree 2 vanishes from its first zero slice on, and
//! if it is finite it vanishes by degree `r·(Dmax − 2) + 2` where `Dmax` is
//! the largest degree of a pure part.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{enumerate_degree_basis, rat, Element, FreeGca, Generator, Monomial, Rational};
use crate::cohomology::{Cohomology, Exactness};
use crate::differential::{formal_dimension, pure_part, KsExtension, Model};
use crate::error::{Error, Result};
use crate::linalg::{to_int_row, Echelon};

/// Default sampling points for multi-parameter symplectic classes.
pub const DEFAULT_SAMPLES: [i64; 5] = [1, 2, 3, 5, 7];

/// Sorted odd degrees, each at least 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTuple(Vec<u32>);

impl DegreeTuple {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if let Some(&k) = degrees.iter().find(|&&k| k % 2 == 0 || k < 3) {
            return Err(Error::Precondition(format!(
                "degree {k} is not an odd integer at least 3"
            )));
        }
        degrees.sort_unstable();
        Ok(DegreeTuple(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `k_i` with 1-based `i`.
    pub fn k(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Infinite,
    Undetermined,
}

impl fmt::Display for Finiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Finiteness::Finite => "Finite",
            Finiteness::Infinite => "Infinite",
            Finiteness::Undetermined => "Undetermined",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct FinitenessOptions {
    /// Largest quotient degree to examine; defaults to the larger of
    /// `Σ deg f_i + 2r` and the vanishing bound `r·(Dmax − 2) + 2`.
    pub bound: Option<u32>,
    /// Cross-check a Finite verdict against cohomology at the formal dimension.
    pub cross_check: bool,
}

impl Default for FinitenessOptions {
    fn default() -> Self {
        FinitenessOptions {
            bound: None,
            cross_check: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FinitenessReport {
    pub verdict: Finiteness,
    /// Pure parts of the odd generators' differentials, in declaration order.
    pub pure_parts: Vec<Element>,
    /// `(degree, dimension)` of the examined quotient slices.
    pub quotient_dims: Vec<(u32, usize)>,
    pub bound: u32,
    pub diagnostics: Vec<String>,
}

fn check_guard(m: &Model) -> Result<()> {
    for i in m.even_generators() {
        let g = m.algebra().generator(i);
        if g.degree() != 2 {
            return Err(Error::Precondition(format!(
                "even generator `{}` has degree {}; only degree 2 is supported",
                g.name(),
                g.degree()
            )));
        }
        if !m.image(i).is_zero() {
            return Err(Error::Precondition(format!(
                "even generator `{}` has nonzero differential",
                g.name()
            )));
        }
    }
    Ok(())
}

/// Odd-free parts of the differentials of the odd generators.
pub fn pure_parts(m: &Model) -> Vec<Element> {
    m.odd_generators()
        .into_iter()
        .map(|i| pure_part(m.image(i)))
        .collect()
}

/// Dimension of the degree-`n` slice of `Q[evens] / (fs)`.
fn quotient_dim(ring: &Arc<FreeGca>, fs: &[Element], n: u32) -> usize {
    let slice = enumerate_degree_basis(ring, n);
    let mut ech = Echelon::new(slice.dim(), false);
    for f in fs {
        let d = f.degree().expect("pure parts are homogeneous");
        if d > n {
            continue;
        }
        for u in enumerate_degree_basis(ring, n - d).basis() {
            let prod = &Element::monomial(ring, u.clone(), Rational::one()) * f;
            let coords = crate::algebra::coordinates(&prod, &slice).expect("degree checked");
            let (row, _) = to_int_row(&coords);
            if !row.is_empty() {
                ech.insert(row);
            }
            if ech.rank() == slice.dim() {
                return 0;
            }
        }
    }
    slice.dim() - ech.rank()
}

pub fn finiteness(m: &Model) -> Result<FinitenessReport> {
    finiteness_with(m, &FinitenessOptions::default())
}

pub fn finiteness_with(m: &Model, opts: &FinitenessOptions) -> Result<FinitenessReport> {
    check_guard(m)?;
    let evens: Vec<Generator> = m
        .even_generators()
        .into_iter()
        .map(|i| m.algebra().generator(i).clone())
        .collect();
    let r = evens.len() as u32;
    let ring = FreeGca::new(evens)?;
    let pure = pure_parts(m);
    let fs: Vec<Element> = pure
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.transport(&ring))
        .collect::<Result<_>>()?;
    let mut report = FinitenessReport {
        verdict: Finiteness::Undetermined,
        pure_parts: pure,
        quotient_dims: Vec::new(),
        bound: 0,
        diagnostics: Vec::new(),
    };
    if r == 0 {
        report.verdict = Finiteness::Finite;
        report.diagnostics.push("no even generators".into());
        return finish(m, report, opts);
    }
    if fs.is_empty() {
        report.verdict = Finiteness::Infinite;
        report
            .diagnostics
            .push("all pure parts vanish, so every power of an even generator survives".into());
        return Ok(report);
    }
    let degs: Vec<u32> = fs.iter().map(|f| f.degree().unwrap()).collect();
    let dmax = *degs.iter().max().unwrap();
    let rigorous = r * (dmax - 2) + 2;
    let spec_default = degs.iter().sum::<u32>() + 2 * r;
    let bound = opts.bound.unwrap_or(rigorous.max(spec_default));
    report.bound = bound;
    let mut n = 0;
    while n <= bound {
        let dim = quotient_dim(&ring, &fs, n);
        report.quotient_dims.push((n, dim));
        if dim == 0 {
            report.verdict = Finiteness::Finite;
            report
                .diagnostics
                .push(format!("pure quotient vanishes from degree {n}"));
            return finish(m, report, opts);
        }
        n += 2;
    }
    if bound >= rigorous {
        report.verdict = Finiteness::Infinite;
        report.diagnostics.push(format!(
            "pure quotient is nonzero in degree {}, beyond the vanishing bound {rigorous}",
            n - 2
        ));
    } else {
        report.diagnostics.push(format!(
            "pure quotient still nonzero at the lowered bound {bound} (conclusive bound is {rigorous})"
        ));
    }
    Ok(report)
}

fn finish(m: &Model, mut report: FinitenessReport, opts: &FinitenessOptions) -> Result<FinitenessReport> {
    if !opts.cross_check {
        return Ok(report);
    }
    let fd = formal_dimension(m);
    if fd < 0 {
        report.verdict = Finiteness::Undetermined;
        report
            .diagnostics
            .push(format!("negative formal dimension {fd} contradicts finiteness"));
        return Ok(report);
    }
    let fd = fd as u32;
    let h = Cohomology::new(m);
    let top = h.betti(fd)?;
    let window = h.default_window();
    let mut nonzero = Vec::new();
    for n in fd + 1..=fd + window {
        if h.betti(n)? != 0 {
            nonzero.push(n);
        }
    }
    if top != 1 || !nonzero.is_empty() {
        report.verdict = Finiteness::Undetermined;
        report.diagnostics.push(format!(
            "cross-check failed: betti({fd}) = {top}, nonzero cohomology above it in degrees {nonzero:?}"
        ));
    } else {
        report
            .diagnostics
            .push(format!("cross-check: betti({fd}) = 1 and degrees {}..={} vanish", fd + 1, fd + window));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CsymStatus {
    CSymplectic,
    NotCSymplectic,
    Undetermined,
}

impl fmt::Display for CsymStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CsymStatus::CSymplectic => "CSymplectic",
            CsymStatus::NotCSymplectic => "NotCSymplectic",
            CsymStatus::Undetermined => "Undetermined",
        };
        f.write_str(s)
    }
}

/// A degree-2 cocycle whose `power`-th power is not exact.
#[derive(Clone, Debug)]
pub struct CsymWitness {
    pub omega: Element,
    pub power: u32,
}

#[derive(Clone, Debug)]
pub struct CsymVerdict {
    pub status: CsymStatus,
    pub witness: Option<CsymWitness>,
    pub fd: i64,
    pub diagnostics: Vec<String>,
}

impl CsymVerdict {
    fn new(status: CsymStatus, fd: i64, diagnostics: Vec<String>) -> Self {
        CsymVerdict {
            status,
            witness: None,
            fd,
            diagnostics,
        }
    }
}

pub fn is_c_symplectic(m: &Model) -> Result<CsymVerdict> {
    is_c_symplectic_with(m, &DEFAULT_SAMPLES)
}

pub fn is_c_symplectic_with(m: &Model, samples: &[i64]) -> Result<CsymVerdict> {
    let fin = finiteness(m)?;
    let fd = formal_dimension(m);
    match fin.verdict {
        Finiteness::Infinite => {
            return Ok(CsymVerdict::new(
                CsymStatus::NotCSymplectic,
                fd,
                vec!["cohomology is infinite-dimensional".into()],
            ))
        }
        Finiteness::Undetermined => {
            return Ok(CsymVerdict::new(CsymStatus::Undetermined, fd, fin.diagnostics))
        }
        Finiteness::Finite => {}
    }
    if fd % 2 != 0 {
        return Ok(CsymVerdict::new(
            CsymStatus::NotCSymplectic,
            fd,
            vec![format!("formal dimension {fd} is odd")],
        ));
    }
    let power = (fd / 2) as u32;
    let h = Cohomology::new(m);
    let h2 = h.cohomology_slice(2)?;
    let mut verdict = CsymVerdict::new(CsymStatus::Undetermined, fd, Vec::new());
    if power == 0 {
        verdict.status = CsymStatus::CSymplectic;
        verdict.witness = Some(CsymWitness {
            omega: Element::zero(m.algebra()),
            power: 0,
        });
        return Ok(verdict);
    }
    match h2.dim() {
        0 => {
            verdict.status = CsymStatus::NotCSymplectic;
            verdict.diagnostics.push("H^2 = 0".into());
        }
        1 => {
            let omega = h2.representatives[0].clone();
            if h.is_coboundary(&omega.pow(power))? == Exactness::NotExact {
                verdict.status = CsymStatus::CSymplectic;
                verdict.witness = Some(CsymWitness { omega, power });
            } else {
                verdict.status = CsymStatus::NotCSymplectic;
                verdict
                    .diagnostics
                    .push(format!("H^2 is spanned by [{omega}] and its power {power} is exact"));
            }
        }
        r => {
            for &s in samples {
                let mut omega = Element::zero(m.algebra());
                let mut coef = rat(1);
                for rep in &h2.representatives {
                    omega = &omega + &rep.scale(&coef);
                    coef *= rat(s);
                }
                if h.is_coboundary(&omega.pow(power))? == Exactness::NotExact {
                    verdict.status = CsymStatus::CSymplectic;
                    verdict.witness = Some(CsymWitness { omega, power });
                    verdict
                        .diagnostics
                        .push(format!("dim H^2 = {r}; sample s = {s} succeeded"));
                    return Ok(verdict);
                }
            }
            verdict.diagnostics.push(format!(
                "dim H^2 = {r}; every sampled ω had exact power {power} (sampling is not a proof of absence)"
            ));
        }
    }
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionCertificate {
    Holds,
    EvenLength(usize),
    /// 1-based index `i` with `k_i + k_{n-i} ≥ k_n`.
    Pair { i: usize, ki: u32, kj: u32, kn: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub holds: bool,
    pub certificate: CriterionCertificate,
}

/// `n` odd and `k_i + k_{n−i} < k_n` for every `i ≤ (n−1)/2`.
pub fn crosswise_criterion(k: &DegreeTuple) -> CriterionResult {
    pair_condition(k, 0)
}

fn pair_condition(k: &DegreeTuple, slack: u32) -> CriterionResult {
    let n = k.len();
    if n % 2 == 0 {
        return CriterionResult {
            holds: false,
            certificate: CriterionCertificate::EvenLength(n),
        };
    }
    let kn = k.k(n);
    for i in 1..=(n - 1) / 2 {
        let (ki, kj) = (k.k(i), k.k(n - i));
        if ki + kj >= kn + slack {
            return CriterionResult {
                holds: false,
                certificate: CriterionCertificate::Pair { i, ki, kj, kn },
            };
        }
    }
    CriterionResult {
        holds: true,
        certificate: CriterionCertificate::Holds,
    }
}

/// `n` odd and `k_i + k_{n−i} ≤ k_n + 1` for every `i ≤ (n−1)/2`.
pub fn necessary_condition(k: &DegreeTuple) -> bool {
    pair_condition(k, 2).holds
}

fn odd_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// The Borel model `D v_n = Σ v_i v_{n−i} t^{a_i} − t^{(k_n+1)/2}` with all
/// other differentials zero.
pub fn crosswise_witness(k: &DegreeTuple) -> Result<Model> {
    let crit = crosswise_criterion(k);
    if !crit.holds {
        return Err(Error::Precondition(format!(
            "the pairing criterion fails for {k}: {:?}",
            crit.certificate
        )));
    }
    let n = k.len();
    let names = odd_names(n);
    let mut gens = vec![Generator::new("t", 2)?];
    for (name, &d) in names.iter().zip(k.degrees()) {
        gens.push(Generator::new(name.clone(), d)?);
    }
    let alg = FreeGca::new(gens)?;
    let kn = k.k(n);
    let t = Element::generator(&alg, 0);
    let mut dv = -&t.pow((kn + 1) / 2);
    for i in 1..=(n - 1) / 2 {
        let a = (kn + 1 - k.k(i) - k.k(n - i)) / 2;
        let term = &(&Element::generator(&alg, i) * &Element::generator(&alg, n - i)) * &t.pow(a);
        dv = &dv + &term;
    }
    let mut images = vec![Element::zero(&alg); alg.len()];
    images[n] = dv;
    Model::new(&alg, images)
}

/// Exponents `a_1..a_{(n−1)/2}` and the final power used by [`crosswise_witness`].
pub fn crosswise_exponents(k: &DegreeTuple) -> (Vec<u32>, u32) {
    let n = k.len();
    let kn = k.k(n);
    let a = (1..=(n - 1) / 2)
        .map(|i| (kn + 1 - k.k(i) - k.k(n - i)) / 2)
        .collect();
    (a, (kn + 1) / 2)
}

/// Decomposition of `D v_n = Σ c_j g_j t^{a_j} + c t^M` for a model with one
/// even generator, where `v_n` is the last odd generator.
struct TopShape {
    odd: Vec<usize>,
    /// `g_j`: the odd part of each non-pure term
    terms: Vec<Monomial>,
}

fn top_shape(m: &Model) -> Result<TopShape> {
    let evens = m.even_generators();
    if evens.len() != 1 || m.algebra().generator(evens[0]).degree() != 2 {
        return Err(Error::Shape("exactly one even generator of degree 2 expected".into()));
    }
    let t = evens[0];
    let odd = m.odd_generators();
    let Some(&vn) = odd.last() else {
        return Err(Error::Shape("no odd generators".into()));
    };
    let kn = m.algebra().generator(vn).degree();
    let m_exp = (kn + 1) / 2;
    let mut terms = Vec::new();
    let mut pure_coef = Rational::zero();
    for (mono, c) in m.image(vn).terms() {
        if mono.exponent(vn) > 0 {
            return Err(Error::Shape(format!(
                "D({}) involves {0}",
                m.algebra().generator(vn).name()
            )));
        }
        let a = mono.exponent(t);
        let mut g = mono.exponents().to_vec();
        g[t] = 0;
        let g = Monomial::from_exponents(g);
        if g.is_one() {
            if a != m_exp {
                return Err(Error::Shape(format!("unexpected pure term t^{a}")));
            }
            pure_coef = c.clone();
        } else {
            terms.push(g);
        }
    }
    if pure_coef.is_zero() {
        return Err(Error::Shape(format!("D of the top generator has no t^{m_exp} term")));
    }
    Ok(TopShape { odd, terms })
}

/// True when the odd monomials in the top differential together use every
/// other odd generator exactly once.
pub fn covering_sufficient(m: &Model) -> Result<bool> {
    let shape = top_shape(m)?;
    let lower = &shape.odd[..shape.odd.len() - 1];
    let mut count = vec![0u32; m.algebra().len()];
    for g in &shape.terms {
        for (i, &e) in g.exponents().iter().enumerate() {
            count[i] += e;
        }
    }
    Ok(lower.iter().all(|&i| count[i] == 1)
        && count.iter().enumerate().all(|(i, &c)| c == 0 || lower.contains(&i)))
}

#[derive(Clone, Debug)]
pub struct NormalFormReport {
    /// Generators violating `D v_i ∈ (v_1, …, v_{i−1})`.
    pub triangular_failures: Vec<String>,
    pub top_form_holds: bool,
    /// `λ` in `D v_n = f − λ t^{(k_n+1)/2}`.
    pub lambda: Option<Rational>,
    /// `λ'` in `v_1⋯v_{n−1} t^{(k_n−1)/2} ∼ λ' t^{fd/2}`.
    pub lambda_prime: Option<Rational>,
    pub diagnostics: Vec<String>,
}

impl NormalFormReport {
    pub fn triangular_holds(&self) -> bool {
        self.triangular_failures.is_empty()
    }

    pub fn top_relation_holds(&self) -> bool {
        self.lambda_prime.is_some()
    }

    pub fn passed(&self) -> bool {
        self.triangular_holds() && self.top_form_holds && self.top_relation_holds()
    }
}

pub fn normal_form_check(m: &Model) -> Result<NormalFormReport> {
    let evens = m.even_generators();
    if evens.len() != 1 || m.algebra().generator(evens[0]).degree() != 2 {
        return Err(Error::Shape("exactly one even generator of degree 2 expected".into()));
    }
    let t = evens[0];
    let odd = m.odd_generators();
    let alg = m.algebra();
    let degs: Vec<u32> = odd.iter().map(|&i| alg.generator(i).degree()).collect();
    if degs.windows(2).any(|w| w[0] > w[1]) || odd.is_empty() {
        return Err(Error::Shape("odd generators must be declared in non-decreasing degree".into()));
    }
    let n = odd.len();
    let mut report = NormalFormReport {
        triangular_failures: Vec::new(),
        top_form_holds: false,
        lambda: None,
        lambda_prime: None,
        diagnostics: Vec::new(),
    };
    for (pos, &vi) in odd.iter().enumerate().take(n - 1) {
        let earlier = &odd[..pos];
        let ok = m
            .image(vi)
            .terms()
            .all(|(mono, _)| earlier.iter().any(|&j| mono.exponent(j) > 0));
        if !ok {
            report.triangular_failures.push(alg.generator(vi).name().to_string());
        }
    }
    let vn = odd[n - 1];
    let kn = alg.generator(vn).degree();
    let m_exp = (kn + 1) / 2;
    let mut lambda = Rational::zero();
    let mut ii = true;
    for (mono, c) in m.image(vn).terms() {
        let has_odd = odd[..n - 1].iter().any(|&j| mono.exponent(j) > 0);
        let is_power = mono.exponent(t) == m_exp && mono.word_length() == m_exp;
        if is_power {
            lambda = -c.clone();
        } else if !has_odd {
            ii = false;
            report
                .diagnostics
                .push(format!("term {} of D(v_n) is outside the odd ideal", mono.fmt_with(alg)));
        }
    }
    report.top_form_holds = ii && !lambda.is_zero();
    if !lambda.is_zero() {
        report.lambda = Some(lambda);
    }
    let fd = formal_dimension(m);
    if fd < 0 || fd % 2 != 0 {
        report.diagnostics.push(format!("formal dimension {fd} is not even"));
        return Ok(report);
    }
    let fd = fd as u32;
    let mut x = Element::generator(alg, t).pow((kn - 1) / 2);
    for &j in odd[..n - 1].iter().rev() {
        x = &Element::generator(alg, j) * &x;
    }
    let y = Element::generator(alg, t).pow(fd / 2);
    let h = Cohomology::new(m);
    if !m.is_cocycle(&x) {
        report
            .diagnostics
            .push("v_1⋯v_{n−1}·t^{(k_n−1)/2} is not a cocycle".into());
        return Ok(report);
    }
    let cx = h.express_class_in(&x, fd)?;
    let cy = h.express_class_in(&y, fd)?;
    let Some(p) = cy.coords.iter().position(|c| !c.is_zero()) else {
        report.diagnostics.push(format!("[t^{}] = 0", fd / 2));
        return Ok(report);
    };
    let lp = &cx.coords[p] / &cy.coords[p];
    let diff = &x - &y.scale(&lp);
    if !lp.is_zero() && h.is_coboundary(&diff)?.is_exact() {
        report.lambda_prime = Some(lp);
    } else {
        report
            .diagnostics
            .push("the two top classes are not proportional with a nonzero factor".into());
    }
    Ok(report)
}

fn fresh_name(alg: &FreeGca, base: &str) -> String {
    let mut name = base.to_string();
    while alg.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// The Borel model of `B × S^N` with `D v = α·t^{(N+1−fd B)/2} − t^{(N+1)/2}`.
pub fn build_b_cross_sphere(b: &Model, fundamental: &Element, n: u32) -> Result<Model> {
    let fdb = formal_dimension(b);
    if fdb < 0 || fdb % 2 != 0 {
        return Err(Error::Precondition(format!("fd(B) = {fdb} must be even and non-negative")));
    }
    let fdb = fdb as u32;
    if n % 2 == 0 || n <= fdb {
        return Err(Error::Precondition(format!("N = {n} must be odd and exceed fd(B) = {fdb}")));
    }
    if finiteness(b)?.verdict != Finiteness::Finite {
        return Err(Error::Precondition("B must have finite cohomology".into()));
    }
    let h = Cohomology::new(b);
    if !fundamental.has_degree(fdb) || h.is_coboundary(fundamental)?.is_exact() {
        return Err(Error::Precondition("α must represent the top class of B".into()));
    }
    let tname = fresh_name(b.algebra(), "t");
    let vname = fresh_name(b.algebra(), "v");
    let mut gens = vec![Generator::new(tname, 2)?];
    gens.extend(b.algebra().generators().iter().cloned());
    gens.push(Generator::new(vname, n)?);
    let alg = FreeGca::new(gens)?;
    let t = Element::generator(&alg, 0);
    let alpha = fundamental.transport(&alg)?;
    let dv = &(&alpha * &t.pow((n + 1 - fdb) / 2)) - &t.pow((n + 1) / 2);
    let mut images = vec![Element::zero(&alg)];
    for img in b.images() {
        images.push(img.transport(&alg)?);
    }
    images.push(dv);
    Model::new(&alg, images)
}

/// Borel model over `X × ℂP^N` for `X` a product of odd spheres with degrees `k`.
pub fn build_x_cross_cpn(k: &DegreeTuple, big_n: u32) -> Result<Model> {
    let n = k.len();
    if n % 2 == 0 {
        return Err(Error::Precondition("the number of spheres must be odd".into()));
    }
    for i in 1..=(n - 1) / 2 {
        if k.k(i) + k.k(n - i) > 2 * big_n {
            return Err(Error::Precondition(format!(
                "k_{i} + k_{} = {} exceeds 2N = {}",
                n - i,
                k.k(i) + k.k(n - i),
                2 * big_n
            )));
        }
    }
    if k.k(n) > 2 * big_n + 1 {
        return Err(Error::Precondition(format!(
            "k_n = {} exceeds 2N + 1 = {}",
            k.k(n),
            2 * big_n + 1
        )));
    }
    let names = odd_names(n);
    let mut gens = vec![Generator::new("x", 2)?, Generator::new("y", 2 * big_n + 1)?];
    for (name, &d) in names.iter().zip(k.degrees()) {
        gens.push(Generator::new(name.clone(), d)?);
    }
    gens.push(Generator::new("t", 2)?);
    let alg = FreeGca::new(gens)?;
    let x = Element::generator(&alg, 0);
    let t = Element::generator(&alg, n + 2);
    let v = |i: usize| Element::generator(&alg, i + 1);
    let mut images = vec![Element::zero(&alg); alg.len()];
    images[n + 1] = &x.pow((k.k(n) - 1) / 2) * &t;
    let mut dy = &x.pow(big_n + 1) + &t.pow(big_n + 1);
    for i in 1..=(n - 1) / 2 {
        let b = (2 * big_n + 2 - k.k(i) - k.k(n - i)) / 2;
        dy = &dy + &(&(&v(i) * &v(n - i)) * &t.pow(b));
    }
    images[1] = dy;
    Model::new(&alg, images)
}

/// `(k_1 + ⋯ + k_n − 1)/2 + N`.
pub fn x_cross_cpn_power(k: &DegreeTuple, big_n: u32) -> u32 {
    (k.sum() - 1) / 2 + big_n
}

#[derive(Clone, Debug)]
pub struct CInvariantLower {
    pub value: Rational,
    /// Per candidate: the word-length invariant of the total space, or why it was skipped.
    pub candidates: Vec<std::result::Result<u32, String>>,
}

/// `max 2·toomer(Y)/(fd(X) − 1)` over candidate Borel models `Y` of `X`.
pub fn c_invariant_lower(x: &Model, candidates: &[Model]) -> Result<CInvariantLower> {
    let fdx = formal_dimension(x);
    if fdx < 2 {
        return Err(Error::Precondition(format!("fd(X) = {fdx} is too small")));
    }
    let mut value = Rational::zero();
    let mut out = Vec::new();
    for y in candidates {
        let res = candidate_toomer(x, y);
        if let Ok(e) = &res {
            let c = Rational::new((2 * *e as i64).into(), (fdx - 1).into());
            if c > value {
                value = c;
            }
        }
        out.push(res);
    }
    Ok(CInvariantLower {
        value,
        candidates: out,
    })
}

fn candidate_toomer(x: &Model, y: &Model) -> std::result::Result<u32, String> {
    let base: Vec<&str> = y
        .algebra()
        .generators()
        .iter()
        .map(Generator::name)
        .filter(|n| x.algebra().index_of(n).is_none())
        .collect();
    KsExtension::from_models(x, y, &base).map_err(|e| e.to_string())?;
    let fin = finiteness(y).map_err(|e| e.to_string())?;
    if fin.verdict != Finiteness::Finite {
        return Err(format!("candidate is {}", fin.verdict));
    }
    let fd = formal_dimension(y) as u32;
    let h = Cohomology::new(y);
    if !h.poincare_check(fd, None).map_err(|e| e.to_string())?.passed() {
        return Err("candidate fails Poincaré duality".into());
    }
    h.toomer(fd).map_err(|e| e.to_string())
}

//! Degree-wise cohomology over the rationals.
//!
//! [`Cohomology`] wraps a model and memoizes, per degree, the monomial basis,
//! an echelon form of the differential out of that degree, and canonical
//! cohomology representatives. Caches are behind mutexes so one instance may
//! serve concurrent queries; cached values do not depend on query order.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{
    coordinates, count_degree_basis, enumerate_degree_basis, DegreeSlice, Element, FreeGca,
    Generator, Monomial, Rational,
};
use crate::differential::Model;
use crate::error::{Error, Result};
use crate::linalg::{self, to_dense, Echelon, IntRow};

/// Slices above this dimension abort with [`Error::Resource`].
pub const DEFAULT_SLICE_LIMIT: usize = 60_000;

#[derive(Clone, Debug)]
pub struct CohomologySlice {
    pub degree: u32,
    pub representatives: Vec<Element>,
    pub coboundary_basis: Vec<Element>,
}

impl CohomologySlice {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub degree: u32,
    pub coords: Vec<Rational>,
}

impl Class {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Exactness {
    /// `D(witness)` equals the tested element.
    Exact(Element),
    NotExact,
}

impl Exactness {
    pub fn is_exact(&self) -> bool {
        matches!(self, Exactness::Exact(_))
    }
}

#[derive(Clone, Debug)]
pub struct PoincareReport {
    pub fd: u32,
    pub top_betti: usize,
    /// Degrees above `fd` (within the window) with nonzero cohomology.
    pub above_top: Vec<u32>,
    /// Degrees `i` with `betti(i) != betti(fd - i)`.
    pub asymmetric: Vec<u32>,
    pub betti: Vec<usize>,
}

impl PoincareReport {
    pub fn passed(&self) -> bool {
        self.top_betti == 1 && self.above_top.is_empty() && self.asymmetric.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct LefschetzStep {
    pub k: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub bijective: bool,
    /// Representatives spanning the kernel of multiplication by `ω^k`.
    pub kernel: Vec<Element>,
}

#[derive(Clone, Debug)]
pub struct LefschetzReport {
    pub steps: Vec<LefschetzStep>,
}

impl LefschetzReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.bijective)
    }

    pub fn failures(&self) -> Vec<u32> {
        self.steps.iter().filter(|s| !s.bijective).map(|s| s.k).collect()
    }
}

/// Echelon form of `L·D` for a common denominator `L` of the matrix entries.
/// Row spaces and kernels agree with those of `D`; preimages scale by `L`.
struct ScaledEchelon {
    ech: Echelon,
    scale: BigInt,
}

struct HData {
    slice: Arc<DegreeSlice>,
    /// Rows of the reduced echelon form of cocycle normal forms.
    reps: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

pub struct Cohomology {
    model: Model,
    limit: usize,
    slices: Mutex<HashMap<u32, Arc<DegreeSlice>>>,
    echelons: Mutex<HashMap<u32, Arc<ScaledEchelon>>>,
    hdata: Mutex<HashMap<u32, Arc<HData>>>,
}

impl Cohomology {
    pub fn new(model: &Model) -> Self {
        Self::with_limit(model, DEFAULT_SLICE_LIMIT)
    }

    pub fn with_limit(model: &Model, limit: usize) -> Self {
        Cohomology {
            model: model.clone(),
            limit,
            slices: Mutex::default(),
            echelons: Mutex::default(),
            hdata: Mutex::default(),
        }
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    fn alg(&self) -> &Arc<FreeGca> {
        self.model.algebra()
    }

    pub fn slice(&self, n: u32) -> Result<Arc<DegreeSlice>> {
        if let Some(s) = self.slices.lock().unwrap().get(&n) {
            return Ok(Arc::clone(s));
        }
        let dim = count_degree_basis(self.alg(), n);
        if dim > self.limit {
            return Err(Error::Resource {
                degree: n,
                dim,
                limit: self.limit,
            });
        }
        let s = Arc::new(enumerate_degree_basis(self.alg(), n));
        Ok(Arc::clone(
            self.slices.lock().unwrap().entry(n).or_insert(s),
        ))
    }

    /// Images `D(m)` of the given monomials as integer rows over `dst`,
    /// all multiplied by one common denominator.
    fn scaled_rows(&self, monomials: &[&Monomial], dst: &DegreeSlice) -> Result<(Vec<IntRow>, BigInt)> {
        let rows: Vec<Vec<(usize, Rational)>> = monomials
            .par_iter()
            .map(|m| {
                let img = self.model.d_monomial(m);
                img.terms()
                    .map(|(t, c)| {
                        let i = dst.position(t).ok_or_else(|| {
                            Error::DegreeMismatch(format!("D({}) leaves degree {}", m.fmt_with(self.alg()), dst.degree()))
                        })?;
                        Ok((i, c.clone()))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let mut scale = BigInt::one();
        for (_, c) in rows.iter().flatten() {
            scale = scale.lcm(c.denom());
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                let mut r: IntRow = r.into_iter().map(|(i, c)| (i, c.numer() * (&scale / c.denom()))).collect();
                r.sort_by_key(|(i, _)| *i);
                r
            })
            .collect();
        Ok((rows, scale))
    }

    /// Echelon form of the differential out of degree `n`, with tracked
    /// combinations over the degree-`n` basis.
    fn d_echelon(&self, n: u32) -> Result<Arc<ScaledEchelon>> {
        if let Some(e) = self.echelons.lock().unwrap().get(&n) {
            return Ok(Arc::clone(e));
        }
        let src = self.slice(n)?;
        let dst = self.slice(n + 1)?;
        let monomials: Vec<&Monomial> = src.basis().iter().collect();
        let (rows, scale) = self.scaled_rows(&monomials, &dst)?;
        let e = Arc::new(ScaledEchelon { ech: Echelon::from_rows(dst.dim(), true, rows), scale });
        Ok(Arc::clone(
            self.echelons.lock().unwrap().entry(n).or_insert(e),
        ))
    }

    /// Echelon whose row space is the coboundaries in degree `n`.
    fn coboundaries(&self, n: u32) -> Result<Arc<ScaledEchelon>> {
        if n == 0 {
            Ok(Arc::new(ScaledEchelon { ech: Echelon::new(self.slice(0)?.dim(), true), scale: BigInt::one() }))
        } else {
            self.d_echelon(n - 1)
        }
    }

    /// Matrix of `D` from degree `n` to degree `n+1`: one row per source basis monomial.
    pub fn differential_matrix(&self, n: u32) -> Result<Vec<Vec<Rational>>> {
        let src = self.slice(n)?;
        let dst = self.slice(n + 1)?;
        src.basis()
            .par_iter()
            .map(|m| coordinates(&self.model.d_monomial(m), &dst))
            .collect()
    }

    pub fn rank_d(&self, n: u32) -> Result<usize> {
        Ok(self.d_echelon(n)?.ech.rank())
    }

    pub fn betti(&self, n: u32) -> Result<usize> {
        let dim = self.slice(n)?.dim();
        let out = self.rank_d(n)?;
        let inc = if n == 0 { 0 } else { self.rank_d(n - 1)? };
        Ok(dim - out - inc)
    }

    pub fn betti_range(&self, from: u32, to: u32) -> Result<Vec<(u32, usize)>> {
        (from..=to)
            .into_par_iter()
            .map(|n| Ok((n, self.betti(n)?)))
            .collect()
    }

    fn degree_of(&self, e: &Element) -> Result<Option<u32>> {
        if e.is_zero() {
            return Ok(None);
        }
        e.degree().map(Some).ok_or(Error::NotHomogeneous)
    }

    fn require_cocycle(&self, e: &Element) -> Result<()> {
        let de = self.model.d(e);
        if de.is_zero() {
            Ok(())
        } else {
            Err(Error::NotCocycle {
                differential: de.to_string(),
            })
        }
    }

    /// Decides whether a cocycle is a coboundary; exact answers carry a
    /// preimage that has been re-checked.
    pub fn is_coboundary(&self, e: &Element) -> Result<Exactness> {
        self.require_cocycle(e)?;
        let Some(n) = self.degree_of(e)? else {
            return Ok(Exactness::Exact(Element::zero(self.alg())));
        };
        if n == 0 {
            return Ok(Exactness::NotExact);
        }
        let slice = self.slice(n)?;
        let coords = coordinates(e, &slice)?;
        let b = self.coboundaries(n)?;
        let red = b.ech.reduce_rational(&coords);
        if !red.is_zero() {
            return Ok(Exactness::NotExact);
        }
        let scale = Rational::from_integer(b.scale.clone());
        let pre: Vec<Rational> = red.preimage(b.ech.inserted()).into_iter().map(|x| x * &scale).collect();
        let src = self.slice(n - 1)?;
        let witness = src.element(self.alg(), &pre);
        assert_eq!(&self.model.d(&witness), e, "coboundary witness failed to re-verify");
        Ok(Exactness::Exact(witness))
    }

    fn hdata(&self, n: u32) -> Result<Arc<HData>> {
        if let Some(h) = self.hdata.lock().unwrap().get(&n) {
            return Ok(Arc::clone(h));
        }
        let slice = self.slice(n)?;
        let dim = slice.dim();
        let z = self.d_echelon(n)?;
        let b = self.coboundaries(n)?;
        let mut nfs: Vec<Vec<Rational>> = z
            .ech
            .kernel()
            .iter()
            .map(|k| {
                let red = b.ech.reduce(k);
                red.normal_form(dim)
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let pivots = linalg::rref(&mut nfs);
        let h = Arc::new(HData {
            slice,
            reps: nfs,
            pivots,
        });
        Ok(Arc::clone(
            self.hdata.lock().unwrap().entry(n).or_insert(h),
        ))
    }

    pub fn cohomology_slice(&self, n: u32) -> Result<CohomologySlice> {
        let h = self.hdata(n)?;
        let b = self.coboundaries(n)?;
        let representatives = h
            .reps
            .iter()
            .map(|r| h.slice.element(self.alg(), r))
            .collect();
        let coboundary_basis = b
            .ech
            .rows()
            .iter()
            .map(|r| h.slice.element(self.alg(), &to_dense(r, h.slice.dim(), &one())))
            .collect();
        Ok(CohomologySlice {
            degree: n,
            representatives,
            coboundary_basis,
        })
    }

    /// Coordinates of the class of a cocycle of degree `n` (zero is allowed).
    pub fn express_class_in(&self, e: &Element, n: u32) -> Result<Class> {
        self.require_cocycle(e)?;
        if !e.has_degree(n) {
            return Err(Error::DegreeMismatch(format!("`{e}` is not of degree {n}")));
        }
        let h = self.hdata(n)?;
        let coords = coordinates(e, &h.slice)?;
        let b = self.coboundaries(n)?;
        let nf = b.ech.reduce_rational(&coords).normal_form(h.slice.dim());
        Ok(Class {
            degree: n,
            coords: h.pivots.iter().map(|&p| nf[p].clone()).collect(),
        })
    }

    pub fn express_class(&self, e: &Element) -> Result<Class> {
        match self.degree_of(e)? {
            Some(n) => self.express_class_in(e, n),
            None => Err(Error::Precondition(
                "the zero element has no degree; use express_class_in".into(),
            )),
        }
    }

    /// The representative cocycle of a class.
    pub fn class_element(&self, c: &Class) -> Result<Element> {
        let h = self.hdata(c.degree)?;
        if c.coords.len() != h.reps.len() {
            return Err(Error::Shape("class has the wrong number of coordinates".into()));
        }
        let mut out = Element::zero(self.alg());
        for (x, r) in c.coords.iter().zip(&h.reps) {
            if !x.is_zero() {
                out = &out + &h.slice.element(self.alg(), r).scale(x);
            }
        }
        Ok(out)
    }

    pub fn cup(&self, a: &Class, b: &Class) -> Result<Class> {
        let x = &self.class_element(a)? * &self.class_element(b)?;
        self.express_class_in(&x, a.degree + b.degree)
    }

    /// Evaluates a polynomial relation in named cocycles (model generators
    /// may be used directly) and reports whether the result is exact.
    pub fn verify_relation(&self, reps: &[(&str, Element)], relation: &str) -> Result<bool> {
        let value = self.evaluate_relation(reps, relation)?;
        Ok(self.is_coboundary(&value)?.is_exact())
    }

    pub fn evaluate_relation(&self, reps: &[(&str, Element)], relation: &str) -> Result<Element> {
        let alg = self.alg();
        let mut gens: Vec<Generator> = alg.generators().to_vec();
        for (name, e) in reps {
            self.require_cocycle(e)?;
            let d = self.degree_of(e)?.ok_or_else(|| {
                Error::Precondition(format!("representative `{name}` is zero"))
            })?;
            gens.push(Generator::new(*name, d)?);
        }
        let names = FreeGca::new(gens)?;
        let rel = Element::parse(&names, relation)?;
        if !rel.is_homogeneous() {
            return Err(Error::DegreeMismatch(format!("relation `{relation}` is not homogeneous")));
        }
        let base = alg.len();
        let mut out = Element::zero(alg);
        for (m, c) in rel.terms() {
            let mut acc = Element::constant(alg, c.clone());
            for (i, &k) in m.exponents().iter().enumerate() {
                let factor = if i < base {
                    Element::generator(alg, i)
                } else {
                    reps[i - base].1.clone()
                };
                for _ in 0..k {
                    acc = &acc * &factor;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Default vanishing window above `fd`.
    pub fn default_window(&self) -> u32 {
        2 * self.alg().max_even_degree() + 2
    }

    pub fn poincare_check(&self, fd: u32, window: Option<u32>) -> Result<PoincareReport> {
        let window = window.unwrap_or_else(|| self.default_window());
        let table = self.betti_range(0, fd + window)?;
        let betti: Vec<usize> = table.iter().map(|&(_, b)| b).collect();
        let above_top = table
            .iter()
            .filter(|&&(n, b)| n > fd && b != 0)
            .map(|&(n, _)| n)
            .collect();
        let asymmetric = (0..=fd)
            .filter(|&i| betti[i as usize] != betti[(fd - i) as usize])
            .collect();
        Ok(PoincareReport {
            fd,
            top_betti: betti[fd as usize],
            above_top,
            asymmetric,
            betti: betti[..=fd as usize].to_vec(),
        })
    }

    /// Tests whether multiplication by `ω^k` maps `H^{m-k}` isomorphically
    /// onto `H^{m+k}` for `1 ≤ k ≤ m`, where `fd = 2m`.
    pub fn hard_lefschetz(&self, omega: &Element, fd: u32) -> Result<LefschetzReport> {
        if fd % 2 == 1 {
            return Err(Error::Precondition(format!("formal dimension {fd} is odd")));
        }
        self.require_cocycle(omega)?;
        if !omega.has_degree(2) {
            return Err(Error::DegreeMismatch("ω must have degree 2".into()));
        }
        let m = fd / 2;
        let steps = (1..=m)
            .into_par_iter()
            .map(|k| self.lefschetz_step(omega, m, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(LefschetzReport { steps })
    }

    fn lefschetz_step(&self, omega: &Element, m: u32, k: u32) -> Result<LefschetzStep> {
        let src = self.cohomology_slice(m - k)?;
        let tgt_dim = self.hdata(m + k)?.reps.len();
        let wk = omega.pow(k);
        let images: Vec<Vec<Rational>> = src
            .representatives
            .iter()
            .map(|x| Ok(self.express_class_in(&(x * &wk), m + k)?.coords))
            .collect::<Result<_>>()?;
        // columns of the map are `images`; its kernel solves the transposed system
        let transposed: Vec<Vec<Rational>> = (0..tgt_dim)
            .map(|j| images.iter().map(|col| col[j].clone()).collect())
            .collect();
        let kernel = linalg::kernel(&transposed, src.dim());
        let kernel: Vec<Element> = kernel
            .iter()
            .map(|c| {
                let mut e = Element::zero(self.alg());
                for (x, r) in c.iter().zip(&src.representatives) {
                    e = &e + &r.scale(x);
                }
                e
            })
            .collect();
        Ok(LefschetzStep {
            k,
            source_dim: src.dim(),
            target_dim: tgt_dim,
            bijective: kernel.is_empty() && src.dim() == tgt_dim,
            kernel,
        })
    }

    /// Whether some cocycle of degree `n` built from monomials of word length
    /// at least `s` has nonzero class.
    pub fn filtered_class_exists(&self, n: u32, s: u32) -> Result<bool> {
        let slice = self.slice(n)?;
        let cols: Vec<usize> = (0..slice.dim())
            .filter(|&i| slice.basis()[i].word_length() >= s)
            .collect();
        if cols.is_empty() {
            return Ok(false);
        }
        let dst = self.slice(n + 1)?;
        let monomials: Vec<&Monomial> = cols.iter().map(|&i| &slice.basis()[i]).collect();
        let (rows, _) = self.scaled_rows(&monomials, &dst)?;
        let e = Echelon::from_rows(dst.dim(), true, rows);
        for k in e.kernel() {
            let mut full = vec![Rational::zero(); slice.dim()];
            for (j, x) in k {
                full[cols[*j]] = Rational::from_integer(x.clone());
            }
            let z = slice.element(self.alg(), &full);
            if !self.express_class_in(&z, n)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Largest `s` such that the fundamental class in degree `fd` has a
    /// representative of word length at least `s`.
    pub fn toomer(&self, fd: u32) -> Result<u32> {
        if !self.model.is_minimal() {
            return Err(Error::Precondition(
                "the word-length invariant needs a minimal model".into(),
            ));
        }
        let top = self.betti(fd)?;
        if top != 1 {
            return Err(Error::Precondition(format!(
                "betti({fd}) = {top}, expected a one-dimensional top class"
            )));
        }
        let mut s = 1;
        while self.filtered_class_exists(fd, s)? {
            s += 1;
        }
        Ok(s - 1)
    }
}

fn one() -> num_bigint::BigInt {
    num_bigint::BigInt::one()
}

pub fn differential_matrix(m: &Model, n: u32) -> Result<Vec<Vec<Rational>>> {
    Cohomology::new(m).differential_matrix(n)
}

pub fn betti(m: &Model, n: u32) -> Result<usize> {
    Cohomology::new(m).betti(n)
}

pub fn is_coboundary(m: &Model, e: &Element) -> Result<Exactness> {
    Cohomology::new(m).is_coboundary(e)
}

pub fn cohomology_slice(m: &Model, n: u32) -> Result<CohomologySlice> {
    Cohomology::new(m).cohomology_slice(n)
}

pub fn express_class(m: &Model, e: &Element) -> Result<Class> {
    Cohomology::new(m).express_class(e)
}

pub fn verify_relation(m: &Model, reps: &[(&str, Element)], relation: &str) -> Result<bool> {
    Cohomology::new(m).verify_relation(reps, relation)
}

pub fn poincare_check(m: &Model, fd: u32) -> Result<PoincareReport> {
    Cohomology::new(m).poincare_check(fd, None)
}

pub fn hard_lefschetz(m: &Model, omega: &Element, fd: u32) -> Result<LefschetzReport> {
    Cohomology::new(m).hard_lefschetz(omega, fd)
}

pub fn toomer(m: &Model, fd: u32) -> Result<u32> {
    Cohomology::new(m).toomer(fd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn borel() -> Model {
        Model::parse("gen t 2\ngen v1 3\ngen v2 3\ngen v3 7\nd v3 = v1*v2*t + t^4\n").unwrap()
    }

    #[test]
    fn rational_coefficients_keep_preimages() {
        let m = Model::parse("gen t 2\ngen v 3\nd v = 1/2*t^2\n").unwrap();
        let h = Cohomology::new(&m);
        let t2 = m.element("t^2").unwrap();
        match h.is_coboundary(&t2).unwrap() {
            Exactness::Exact(w) => assert_eq!(w, m.element("2*v").unwrap()),
            Exactness::NotExact => panic!("t^2 is exact"),
        }
        assert_eq!(h.betti(2).unwrap(), 1);
        assert_eq!(h.betti(4).unwrap(), 0);
    }

    #[test]
    fn differential_matrix_rows() {
        let m = borel();
        let h = Cohomology::new(&m);
        let s = h.slice(7).unwrap();
        let names: Vec<_> = s.basis().iter().map(|x| x.fmt_with(m.algebra())).collect();
        assert_eq!(names, ["t^2*v1", "t^2*v2", "v3"]);
        let mat = h.differential_matrix(7).unwrap();
        let dst = h.slice(8).unwrap();
        let expected = coordinates(&m.element("v1*v2*t + t^4").unwrap(), &dst).unwrap();
        assert_eq!(mat[2], expected);
        assert!(mat[0].iter().chain(&mat[1]).all(Zero::is_zero));
        let flat = Model::parse("gen v1 3\n").unwrap();
        assert!(differential_matrix(&flat, 1).unwrap().is_empty());
    }

    #[test]
    fn betti_numbers() {
        let ext = Model::parse("gen v1 3\ngen v2 3\ngen v3 7\n").unwrap();
        let h = Cohomology::new(&ext);
        assert_eq!(h.betti(3).unwrap(), 2);
        assert_eq!(h.betti(10).unwrap(), 2);
        assert_eq!(h.betti(13).unwrap(), 1);
        let h = Cohomology::new(&borel());
        assert_eq!(h.betti(12).unwrap(), 1);
        assert_eq!(h.betti(13).unwrap(), 0);
        assert_eq!(h.betti(3).unwrap(), 2);
    }

    #[test]
    fn coboundaries_with_witnesses() {
        let m = borel();
        let h = Cohomology::new(&m);
        assert_eq!(h.is_coboundary(&m.element("t^6").unwrap()).unwrap(), Exactness::NotExact);
        let Exactness::Exact(w) = h.is_coboundary(&m.element("v1*v2*t^3 + t^6").unwrap()).unwrap()
        else {
            panic!("expected exact")
        };
        assert_eq!(m.d(&w), m.element("v1*v2*t^3 + t^6").unwrap());
        assert!(matches!(
            h.is_coboundary(&m.element("v3").unwrap()),
            Err(Error::NotCocycle { .. })
        ));
    }

    #[test]
    fn slices_and_classes() {
        let m = borel();
        let h = Cohomology::new(&m);
        let s = h.cohomology_slice(2).unwrap();
        assert_eq!(s.representatives, vec![m.element("t").unwrap()]);
        let c = h.express_class(&m.element("t^6").unwrap()).unwrap();
        assert!(!c.is_zero());
        let c = h.express_class_in(&m.element("v1*v2*t^3 + t^6").unwrap(), 12).unwrap();
        assert!(c.is_zero());
        let s3 = h.cohomology_slice(3).unwrap();
        for (i, r) in s3.representatives.iter().enumerate() {
            let c = h.express_class(r).unwrap();
            let mut unit = vec![rat(0); s3.dim()];
            unit[i] = rat(1);
            assert_eq!(c.coords, unit);
        }
        assert!(h.cohomology_slice(40).unwrap().representatives.is_empty());
    }

    #[test]
    fn relations() {
        let m = Model::parse("gen v1 3\ngen v2 3\n").unwrap();
        let h = Cohomology::new(&m);
        assert!(h.verify_relation(&[], "v1*v1").unwrap());
        assert!(!h.verify_relation(&[], "v1*v2").unwrap());
        assert!(h.verify_relation(&[], "v1*v2 + t").is_err());
    }

    #[test]
    fn poincare() {
        let h = Cohomology::new(&borel());
        assert!(h.poincare_check(12, None).unwrap().passed());
        let ext = Model::parse("gen v1 3\ngen v2 3\n").unwrap();
        let r = poincare_check(&ext, 6).unwrap();
        assert!(r.passed());
        assert_eq!(r.betti, vec![1, 0, 0, 2, 0, 0, 1]);
    }

    #[test]
    fn toomer_values() {
        let ext = Model::parse("gen v1 3\ngen v2 5\ngen v3 7\n").unwrap();
        assert_eq!(toomer(&ext, 15).unwrap(), 3);
        let cp1 = Model::parse("gen x 2\ngen y 3\nd y = x^2\n").unwrap();
        assert_eq!(toomer(&cp1, 2).unwrap(), 1);
        let x1 = Model::parse("gen t 2\ngen a 3\ngen b 7\ngen c 7\nd b = t^4\n").unwrap();
        assert_eq!(toomer(&x1, 16).unwrap(), 5);
        let nonmin = Model::parse("gen t 2\ngen v 1\nd v = t\n").unwrap();
        assert!(toomer(&nonmin, 0).is_err());
    }
}

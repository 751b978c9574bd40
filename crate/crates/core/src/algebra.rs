//! Free graded-commutative algebras over the rationals.
//!
//! Generators of odd degree are exterior, generators of even degree are
//! polynomial. A monomial is stored as an exponent vector in generator
//! declaration order, which is also the order in which factors are written.
//! Multiplying two monomials reorders the odd factors, and the Koszul sign of
//! that reordering is the parity of the number of inversions between the odd
//! occurrences of the two operands.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self> {
        let name = name.into();
        if degree == 0 {
            return Err(Error::InvalidDegree { name, degree });
        }
        if !is_identifier(&name) {
            return Err(Error::Parse(format!("invalid generator name `{name}`")));
        }
        Ok(Generator { name, degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// The free graded-commutative algebra on an ordered list of generators.
#[derive(Debug)]
pub struct FreeGca {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for FreeGca {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for FreeGca {}

impl FreeGca {
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Self>> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(FreeGca { gens, index }))
    }

    pub fn from_pairs(pairs: &[(&str, u32)]) -> Result<Arc<Self>> {
        let gens = pairs
            .iter()
            .map(|&(n, d)| Generator::new(n, d))
            .collect::<Result<Vec<_>>>()?;
        FreeGca::new(gens)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn max_even_degree(&self) -> u32 {
        self.gens
            .iter()
            .filter(|g| !g.is_odd())
            .map(|g| g.degree)
            .max()
            .unwrap_or(0)
    }
}

fn same_algebra(a: &Arc<FreeGca>, b: &Arc<FreeGca>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An exponent vector indexed by generator declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self, alg: &FreeGca) -> u32 {
        self.0
            .iter()
            .zip(&alg.gens)
            .map(|(&e, g)| e * g.degree)
            .sum()
    }

    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of two monomials; `None` when an odd generator repeats,
    /// otherwise the canonical monomial and whether the Koszul sign is negative.
    pub fn mul(&self, other: &Monomial, alg: &FreeGca) -> Option<(Monomial, bool)> {
        let mut exps = Vec::with_capacity(self.0.len());
        // odd generators of `self` with index strictly above the current one
        let mut odd_above: u32 = self
            .0
            .iter()
            .zip(&alg.gens)
            .filter(|(&e, g)| e > 0 && g.is_odd())
            .count() as u32;
        let mut inversions = 0u32;
        for (i, g) in alg.gens.iter().enumerate() {
            let (a, b) = (self.0[i], other.0[i]);
            if g.is_odd() {
                if a > 0 && b > 0 {
                    return None;
                }
                if a > 0 {
                    odd_above -= 1;
                }
                if b > 0 {
                    inversions += odd_above;
                }
            }
            exps.push(a + b);
        }
        Some((Monomial::from_exponents(exps), inversions % 2 == 1))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn fmt_with(&self, alg: &FreeGca) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    alg.gens[i].name.clone()
                } else {
                    format!("{}^{}", alg.gens[i].name, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

/// A finite sum of rational multiples of monomials, with no zero
/// coefficients stored.
#[derive(Clone, Debug)]
pub struct Element {
    alg: Arc<FreeGca>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(alg: &Arc<FreeGca>) -> Self {
        Element {
            alg: Arc::clone(alg),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alg: &Arc<FreeGca>) -> Self {
        Self::monomial(alg, Monomial::one(alg.len()), Rational::one())
    }

    pub fn constant(alg: &Arc<FreeGca>, c: Rational) -> Self {
        Self::monomial(alg, Monomial::one(alg.len()), c)
    }

    pub fn monomial(alg: &Arc<FreeGca>, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element {
            alg: Arc::clone(alg),
            terms,
        }
    }

    pub fn generator(alg: &Arc<FreeGca>, i: usize) -> Self {
        let mut exps = vec![0; alg.len()];
        exps[i] = 1;
        Self::monomial(alg, Monomial::from_exponents(exps), Rational::one())
    }

    pub fn named(alg: &Arc<FreeGca>, name: &str) -> Result<Self> {
        Ok(Self::generator(alg, alg.require(name)?))
    }

    /// Parses the textual element syntax, e.g. `v1*v2*t + t^4` or `-3/2*t^10`.
    pub fn parse(alg: &Arc<FreeGca>, text: &str) -> Result<Self> {
        crate::parse::parse_element(alg, text)
    }

    pub fn from_terms(alg: &Arc<FreeGca>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut e = Element::zero(alg);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn algebra(&self) -> &Arc<FreeGca> {
        &self.alg
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Degree of a homogeneous nonzero element; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree(&self.alg));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// True when the element is zero or homogeneous of degree `n`.
    pub fn has_degree(&self, n: u32) -> bool {
        self.terms.keys().all(|m| m.degree(&self.alg) == n)
    }

    pub fn min_word_length(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::word_length).min()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Element::zero(&self.alg);
        }
        Element {
            alg: Arc::clone(&self.alg),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Self> {
        if !same_algebra(&self.alg, &other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Graded-commutative product; fails when the operands live in different algebras.
    pub fn try_mul(&self, other: &Element) -> Result<Self> {
        if !same_algebra(&self.alg, &other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = Element::zero(&self.alg);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = ma.mul(mb, &self.alg) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Element::one(&self.alg);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        Element {
            alg: Arc::clone(&self.alg),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the element over another algebra, mapping generators by
    /// name. Only generators that actually occur need to exist in `target`.
    pub fn transport(&self, target: &Arc<FreeGca>) -> Result<Self> {
        let mut map: Vec<Option<usize>> = vec![None; self.alg.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 || map[i].is_some() {
                    continue;
                }
                let g = &self.alg.gens[i];
                let j = target.require(&g.name)?;
                if target.gens[j].degree != g.degree {
                    return Err(Error::DegreeMismatch(format!(
                        "generator `{}` has degree {} vs {}",
                        g.name, g.degree, target.gens[j].degree
                    )));
                }
                map[i] = Some(j);
            }
        }
        let mut out = Element::zero(target);
        for (m, c) in &self.terms {
            // rebuild via multiplication so that the factor order (and sign) is canonical
            let mut acc = Element::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    acc = &acc * &Element::generator(target, map[i].expect("mapped"));
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

/// Product with the algebra check surfaced as an error.
pub fn multiply(a: &Element, b: &Element) -> Result<Element> {
    a.try_mul(b)
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("adding elements of different algebras")
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            alg: Arc::clone(&self.alg),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("multiplying elements of different algebras")
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.fmt_with(&self.alg))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), m.fmt_with(&self.alg))?;
            }
        }
        Ok(())
    }
}

/// The monomial basis of one degree, in descending lexicographic order of
/// exponent vectors.
#[derive(Clone, Debug)]
pub struct DegreeSlice {
    degree: u32,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeSlice {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn element(&self, alg: &Arc<FreeGca>, coords: &[Rational]) -> Element {
        Element::from_terms(
            alg,
            self.basis
                .iter()
                .zip(coords)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

/// Number of monomials of degree `n` without building them.
pub fn count_degree_basis(alg: &FreeGca, n: u32) -> usize {
    // coefficient extraction from prod (1+x^d) * prod 1/(1-x^d)
    let n = n as usize;
    let mut poly = vec![0usize; n + 1];
    poly[0] = 1;
    for g in &alg.gens {
        let d = g.degree as usize;
        if g.is_odd() {
            for k in (d..=n).rev() {
                poly[k] = poly[k].saturating_add(poly[k - d]);
            }
        } else {
            for k in d..=n {
                poly[k] = poly[k].saturating_add(poly[k - d]);
            }
        }
    }
    poly[n]
}

pub fn enumerate_degree_basis(alg: &FreeGca, n: u32) -> DegreeSlice {
    fn rec(alg: &FreeGca, i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == alg.gens.len() {
            if rem == 0 {
                out.push(Monomial::from_exponents(cur.clone()));
            }
            return;
        }
        let g = &alg.gens[i];
        let max = if g.is_odd() { (rem / g.degree).min(1) } else { rem / g.degree };
        for e in (0..=max).rev() {
            cur[i] = e;
            rec(alg, i + 1, rem - e * g.degree, cur, out);
        }
        cur[i] = 0;
    }
    let mut basis = Vec::new();
    rec(alg, 0, n, &mut vec![0; alg.len()], &mut basis);
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    DegreeSlice {
        degree: n,
        basis,
        index,
    }
}

/// Coefficient vector of `e` in the basis of `slice`.
pub fn coordinates(e: &Element, slice: &DegreeSlice) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::zero(); slice.dim()];
    for (m, c) in e.terms() {
        let i = slice.position(m).ok_or_else(|| {
            Error::DegreeMismatch(format!(
                "term {} does not have degree {}",
                m.fmt_with(e.algebra()),
                slice.degree()
            ))
        })?;
        out[i] = c.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> Arc<FreeGca> {
        FreeGca::from_pairs(&[("t", 2), ("v1", 3), ("v2", 3), ("v3", 7)]).unwrap()
    }

    #[test]
    fn odd_generators_anticommute() {
        let a = alg();
        let v1 = Element::named(&a, "v1").unwrap();
        let v2 = Element::named(&a, "v2").unwrap();
        assert_eq!((&v1 * &v2).to_string(), "v1*v2");
        assert_eq!((&v2 * &v1).to_string(), "-v1*v2");
        assert_eq!((&v1 * &v2).degree(), Some(6));
        assert!((&v1 * &v1).is_zero());
    }

    #[test]
    fn mixed_product_expands() {
        let a = alg();
        let x = Element::parse(&a, "v1*v2*t + t^4").unwrap();
        let t2 = Element::parse(&a, "t^2").unwrap();
        let expected = Element::parse(&a, "v1*v2*t^3 + t^6").unwrap();
        assert_eq!(&x * &t2, expected);
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let a = alg();
        let b = FreeGca::from_pairs(&[("x", 2)]).unwrap();
        let e = Element::named(&a, "t").unwrap();
        let f = Element::named(&b, "x").unwrap();
        assert_eq!(multiply(&e, &f), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn degree_basis_examples() {
        let ext = FreeGca::from_pairs(&[("v1", 3), ("v2", 3)]).unwrap();
        let s = enumerate_degree_basis(&ext, 3);
        let names: Vec<_> = s.basis().iter().map(|m| m.fmt_with(&ext)).collect();
        assert_eq!(names, ["v1", "v2"]);

        let a = FreeGca::from_pairs(&[("t", 2), ("v1", 3)]).unwrap();
        let s = enumerate_degree_basis(&a, 5);
        assert_eq!(s.basis().len(), 1);
        assert_eq!(s.basis()[0].fmt_with(&a), "t*v1");

        let a = alg();
        let s = enumerate_degree_basis(&a, 12);
        let names: Vec<_> = s.basis().iter().map(|m| m.fmt_with(&a)).collect();
        assert_eq!(names, ["t^6", "t^3*v1*v2", "t*v1*v3", "t*v2*v3"]);
        assert!(enumerate_degree_basis(&ext, 1).is_empty());
    }

    #[test]
    fn coordinates_in_slice() {
        let a = alg();
        let s = enumerate_degree_basis(&a, 12);
        let c = coordinates(&Element::parse(&a, "t^6").unwrap(), &s).unwrap();
        assert_eq!(c, vec![rat(1), rat(0), rat(0), rat(0)]);
        let c = coordinates(&Element::parse(&a, "v1*v2*t^3 + t^6").unwrap(), &s).unwrap();
        assert_eq!(c, vec![rat(1), rat(1), rat(0), rat(0)]);
        let c = coordinates(&Element::zero(&a), &s).unwrap();
        assert!(c.iter().all(Zero::is_zero));
        assert!(coordinates(&Element::parse(&a, "t").unwrap(), &s).is_err());
    }

    #[test]
    fn display_uses_fractions() {
        let a = alg();
        let e = Element::parse(&a, "-3/2*t^10").unwrap();
        assert_eq!(e.to_string(), "-3/2*t^10");
        assert_eq!(Element::parse(&a, "2 - t").unwrap().to_string(), "-t + 2");
    }
}

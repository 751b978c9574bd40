//! Differentials on free graded-commutative algebras and KS extensions.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{rat, Element, FreeGca, Generator, Monomial};
use crate::error::{Error, Result};

/// A free graded-commutative algebra with a degree +1 derivation given on
/// generators. Construction checks image degrees but not `D∘D = 0`; see
/// [`Model::check_d_squared`].
#[derive(Clone, Debug, PartialEq)]
pub struct Model {
    alg: Arc<FreeGca>,
    images: Vec<Element>,
}

#[derive(Clone, Debug)]
pub struct DSquaredReport {
    /// Generators whose image does not square to zero, with the residue `D(D(g))`.
    pub offenders: Vec<(String, Element)>,
}

impl DSquaredReport {
    pub fn passed(&self) -> bool {
        self.offenders.is_empty()
    }
}

impl Model {
    pub fn new(alg: &Arc<FreeGca>, images: Vec<Element>) -> Result<Self> {
        if images.len() != alg.len() {
            return Err(Error::Shape(format!(
                "{} images for {} generators",
                images.len(),
                alg.len()
            )));
        }
        for (g, img) in alg.generators().iter().zip(&images) {
            if **img.algebra() != **alg {
                return Err(Error::AlgebraMismatch);
            }
            if !img.has_degree(g.degree() + 1) {
                return Err(Error::DegreeMismatch(format!(
                    "image of `{}` must have degree {}, got `{}`",
                    g.name(),
                    g.degree() + 1,
                    img
                )));
            }
        }
        Ok(Model {
            alg: Arc::clone(alg),
            images,
        })
    }

    pub fn zero(alg: &Arc<FreeGca>) -> Self {
        Model {
            alg: Arc::clone(alg),
            images: vec![Element::zero(alg); alg.len()],
        }
    }

    /// Builds a model from `(generator, image text)` pairs; omitted generators map to zero.
    pub fn from_texts(alg: &Arc<FreeGca>, images: &[(&str, &str)]) -> Result<Self> {
        let mut out = vec![Element::zero(alg); alg.len()];
        for (name, text) in images {
            out[alg.require(name)?] = Element::parse(alg, text)?;
        }
        Model::new(alg, out)
    }

    /// Parses the line-oriented model format (`gen`, `d`, `#` comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Vec<Generator> = Vec::new();
        let mut diffs: Vec<(usize, String, String)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let at = |message: String| Error::ParseAt {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("gen") => {
                    let (Some(name), Some(deg), None) = (words.next(), words.next(), words.next())
                    else {
                        return Err(at("expected `gen <name> <degree>`".into()));
                    };
                    let deg: u32 = deg
                        .parse()
                        .map_err(|_| at(format!("invalid degree `{deg}`")))?;
                    if gens.iter().any(|g| g.name() == name) {
                        return Err(at(format!("duplicate generator `{name}`")));
                    }
                    gens.push(Generator::new(name, deg).map_err(|e| at(e.to_string()))?);
                }
                Some("d") => {
                    let rest = line[1..].trim();
                    let Some((name, expr)) = rest.split_once('=') else {
                        return Err(at("expected `d <name> = <element>`".into()));
                    };
                    let name = name.trim();
                    if diffs.iter().any(|(_, n, _)| n == name) {
                        return Err(at(format!("differential of `{name}` given twice")));
                    }
                    diffs.push((line_no, name.to_string(), expr.trim().to_string()));
                }
                Some(w) => return Err(at(format!("unknown statement `{w}`"))),
                None => unreachable!(),
            }
        }
        let alg = FreeGca::new(gens)?;
        let mut images = vec![Element::zero(&alg); alg.len()];
        for (line, name, expr) in diffs {
            let at = |message: String| Error::ParseAt { line, message };
            let i = alg
                .index_of(&name)
                .ok_or_else(|| at(format!("unknown generator `{name}`")))?;
            let img = Element::parse(&alg, &expr).map_err(|e| at(e.to_string()))?;
            let want = alg.generator(i).degree() + 1;
            if !img.has_degree(want) {
                return Err(at(format!(
                    "image of `{name}` must have degree {want}, got `{img}`"
                )));
            }
            images[i] = img;
        }
        Model::new(&alg, images)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in self.alg.generators() {
            let _ = writeln!(s, "gen {} {}", g.name(), g.degree());
        }
        for (g, img) in self.alg.generators().iter().zip(&self.images) {
            if !img.is_zero() {
                let _ = writeln!(s, "d {} = {}", g.name(), img);
            }
        }
        s
    }

    pub fn algebra(&self) -> &Arc<FreeGca> {
        &self.alg
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn image_of(&self, name: &str) -> Result<&Element> {
        Ok(&self.images[self.alg.require(name)?])
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn element(&self, text: &str) -> Result<Element> {
        Element::parse(&self.alg, text)
    }

    /// Applies the differential to a monomial.
    pub fn d_monomial(&self, m: &Monomial) -> Element {
        let alg = &self.alg;
        let mut out = Element::zero(alg);
        let exps = m.exponents();
        let mut prefix_degree = 0u32;
        for i in 0..exps.len() {
            let e = exps[i];
            if e == 0 {
                continue;
            }
            let g = alg.generator(i);
            if !self.images[i].is_zero() {
                let mut pre = exps.to_vec();
                pre[i..].iter_mut().for_each(|x| *x = 0);
                let mut post = exps.to_vec();
                post[..=i].iter_mut().for_each(|x| *x = 0);
                let mut mid = vec![0; exps.len()];
                mid[i] = e - 1;
                let sign = if prefix_degree % 2 == 1 { -1 } else { 1 };
                let coef = rat(sign * e as i64);
                let pre = Element::monomial(alg, Monomial::from_exponents(pre), coef);
                let mid = Element::monomial(alg, Monomial::from_exponents(mid), rat(1));
                let post = Element::monomial(alg, Monomial::from_exponents(post), rat(1));
                let term = &(&(&pre * &mid) * &self.images[i]) * &post;
                out = &out + &term;
            }
            prefix_degree += e * g.degree();
        }
        out
    }

    /// Extends the differential to an arbitrary element by the graded Leibniz rule.
    pub fn d(&self, e: &Element) -> Element {
        let mut out = Element::zero(&self.alg);
        for (m, c) in e.terms() {
            let dm = self.d_monomial(m);
            out = &out + &dm.scale(c);
        }
        out
    }

    pub fn check_d_squared(&self) -> DSquaredReport {
        let offenders = self
            .alg
            .generators()
            .iter()
            .zip(&self.images)
            .filter_map(|(g, img)| {
                let dd = self.d(img);
                (!dd.is_zero()).then(|| (g.name().to_string(), dd))
            })
            .collect();
        DSquaredReport { offenders }
    }

    pub fn is_minimal(&self) -> bool {
        self.images
            .iter()
            .all(|img| img.terms().all(|(m, _)| m.word_length() >= 2))
    }

    pub fn is_cocycle(&self, e: &Element) -> bool {
        self.d(e).is_zero()
    }

    /// Indices of odd and even generators, in declaration order.
    pub fn odd_generators(&self) -> Vec<usize> {
        (0..self.alg.len())
            .filter(|&i| self.alg.generator(i).is_odd())
            .collect()
    }

    pub fn even_generators(&self) -> Vec<usize> {
        (0..self.alg.len())
            .filter(|&i| !self.alg.generator(i).is_odd())
            .collect()
    }

    /// The quotient by the ideal generated by the named generators, which must
    /// be closed under the differential.
    pub fn kill_generators(&self, names: &[&str]) -> Result<Model> {
        let killed: Vec<usize> = names
            .iter()
            .map(|n| self.alg.require(n))
            .collect::<Result<_>>()?;
        let in_ideal = |m: &Monomial| killed.iter().any(|&k| m.exponent(k) > 0);
        for &k in &killed {
            if self.images[k].terms().any(|(m, _)| !in_ideal(m)) {
                return Err(Error::Precondition(format!(
                    "the ideal generated by {names:?} is not closed under the differential"
                )));
            }
        }
        let gens: Vec<Generator> = (0..self.alg.len())
            .filter(|i| !killed.contains(i))
            .map(|i| self.alg.generator(i).clone())
            .collect();
        let alg = FreeGca::new(gens)?;
        let images = (0..self.alg.len())
            .filter(|i| !killed.contains(i))
            .map(|i| self.images[i].filter_terms(|m| !in_ideal(m)).transport(&alg))
            .collect::<Result<Vec<_>>>()?;
        Model::new(&alg, images)
    }
}

/// A relative model over a polynomial algebra on degree-2 generators.
#[derive(Clone, Debug)]
pub struct KsExtension {
    base: Vec<String>,
    fiber: Model,
    total: Model,
}

impl KsExtension {
    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn fiber(&self) -> &Model {
        &self.fiber
    }

    pub fn total(&self) -> &Model {
        &self.total
    }

    /// The algebra obtained from the fiber algebra by prepending the base generators.
    pub fn total_algebra(fiber: &Model, base: &[Generator]) -> Result<Arc<FreeGca>> {
        let gens = base
            .iter()
            .cloned()
            .chain(fiber.algebra().generators().iter().cloned())
            .collect();
        FreeGca::new(gens)
    }

    /// Validates an existing total model against a fiber by generator names:
    /// the total algebra must consist of the base generators plus the fiber
    /// generators, base generators must be even cocycles, and each fiber
    /// generator's image must reduce to its fiber image modulo the base ideal.
    pub fn from_models(fiber: &Model, total: &Model, base: &[&str]) -> Result<Self> {
        let ta = total.algebra();
        let fa = fiber.algebra();
        let mut base_idx = Vec::new();
        for name in base {
            let i = ta
                .index_of(name)
                .ok_or_else(|| Error::NotKsExtension(format!("base generator `{name}` missing")))?;
            if ta.generator(i).is_odd() {
                return Err(Error::NotKsExtension(format!("base generator `{name}` is odd")));
            }
            if fa.index_of(name).is_some() {
                return Err(Error::NotKsExtension(format!(
                    "base generator `{name}` also occurs in the fiber"
                )));
            }
            if !total.image(i).is_zero() {
                return Err(Error::NotKsExtension(format!(
                    "base generator `{name}` has nonzero differential"
                )));
            }
            base_idx.push(i);
        }
        if ta.len() != fa.len() + base.len() {
            return Err(Error::NotKsExtension(
                "total generators are not the fiber generators plus the base".into(),
            ));
        }
        for g in fa.generators() {
            let j = ta.index_of(g.name()).ok_or_else(|| {
                Error::NotKsExtension(format!("fiber generator `{}` missing in total", g.name()))
            })?;
            if ta.generator(j).degree() != g.degree() {
                return Err(Error::NotKsExtension(format!(
                    "generator `{}` changes degree",
                    g.name()
                )));
            }
            let reduced = total
                .image(j)
                .filter_terms(|m| base_idx.iter().all(|&b| m.exponent(b) == 0))
                .transport(fa)
                .map_err(|e| Error::NotKsExtension(e.to_string()))?;
            let expected = fiber.image_of(g.name())?;
            if &reduced != expected {
                return Err(Error::NotKsExtension(format!(
                    "D({}) reduces to `{}` but the fiber differential is `{}`",
                    g.name(),
                    reduced,
                    expected
                )));
            }
        }
        let report = total.check_d_squared();
        if let Some((g, r)) = report.offenders.first() {
            return Err(Error::DifferentialSquare(format!("D(D({g})) = {r}")));
        }
        Ok(KsExtension {
            base: base.iter().map(|s| s.to_string()).collect(),
            fiber: fiber.clone(),
            total: total.clone(),
        })
    }
}

/// Extends `fiber` by the even `base` generators (prepended) with the given
/// images of the fiber generators over the extended algebra, in fiber order.
pub fn ks_extend(fiber: &Model, base: &[Generator], total_images: Vec<Element>) -> Result<KsExtension> {
    let ta = KsExtension::total_algebra(fiber, base)?;
    if total_images.len() != fiber.algebra().len() {
        return Err(Error::Shape("one image per fiber generator expected".into()));
    }
    let mut images = vec![Element::zero(&ta); base.len()];
    for img in total_images {
        images.push(if img.algebra() == &ta || **img.algebra() == *ta {
            img
        } else {
            img.transport(&ta)?
        });
    }
    let total = Model::new(&ta, images)?;
    let names: Vec<&str> = base.iter().map(Generator::name).collect();
    KsExtension::from_models(fiber, &total, &names)
}

/// Convenience wrapper: image texts are parsed over the extended algebra.
pub fn ks_extend_texts(fiber: &Model, base: &[(&str, u32)], images: &[(&str, &str)]) -> Result<KsExtension> {
    let base: Vec<Generator> = base
        .iter()
        .map(|&(n, d)| Generator::new(n, d))
        .collect::<Result<_>>()?;
    let ta = KsExtension::total_algebra(fiber, &base)?;
    let mut out: Vec<Element> = fiber
        .images()
        .iter()
        .map(|e| e.transport(&ta))
        .collect::<Result<_>>()?;
    for (name, text) in images {
        let i = fiber.algebra().require(name)?;
        out[i] = Element::parse(&ta, text)?;
    }
    ks_extend(fiber, &base, out)
}

pub fn extend_leibniz(m: &Model, e: &Element) -> Element {
    m.d(e)
}

pub fn check_d_squared(m: &Model) -> DSquaredReport {
    m.check_d_squared()
}

pub fn is_minimal(m: &Model) -> bool {
    m.is_minimal()
}

/// `Σ odd degrees − Σ (even degree − 1)`.
pub fn formal_dimension(m: &Model) -> i64 {
    m.algebra()
        .generators()
        .iter()
        .map(|g| {
            if g.is_odd() {
                g.degree() as i64
            } else {
                -(g.degree() as i64 - 1)
            }
        })
        .sum()
}

/// The pure part of an element: terms free of odd generators.
pub fn pure_part(e: &Element) -> Element {
    let alg = Arc::clone(e.algebra());
    e.filter_terms(|m| {
        m.exponents()
            .iter()
            .enumerate()
            .all(|(i, &x)| x == 0 || !alg.generator(i).is_odd())
    })
}

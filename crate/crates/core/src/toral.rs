//! Toral-rank tooling: finite-cohomology witnesses for torus actions,
//! completion of pure extensions to a full torus, and Hasse diagrams of
//! Borel-space classes.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{enumerate_degree_basis, ratio, Element, FreeGca, Generator, Monomial, Rational};
use crate::csym::{finiteness, Finiteness};
use crate::differential::{formal_dimension, KsExtension, Model};
use crate::error::{Error, Result};

/// Samples per coefficient profile in [`complete_to_full_torus`].
pub const DEFAULT_BUDGET: usize = 64;

/// True when the total space of `ext` has finite cohomology, which certifies
/// that the fiber admits an almost free action of a torus of rank `ext.rank()`.
pub fn verify_r0_witness(ext: &KsExtension) -> Result<bool> {
    Ok(finiteness(ext.total())?.verdict == Finiteness::Finite)
}

/// Number of odd generators minus number of even generators.
pub fn euler_homotopy_bound(m: &Model) -> i64 {
    m.odd_generators().len() as i64 - m.even_generators().len() as i64
}

#[derive(Clone, Debug)]
pub enum Completion {
    Found {
        ext: KsExtension,
        /// Index of the profile and of the sample within it.
        profile: usize,
        sample: usize,
    },
    /// No sample produced finite cohomology; nothing is claimed.
    Undetermined { tried: usize },
}

impl Completion {
    pub fn extension(&self) -> Option<&KsExtension> {
        match self {
            Completion::Found { ext, .. } => Some(ext),
            Completion::Undetermined { .. } => None,
        }
    }
}

fn fresh_name(taken: &FreeGca, stem: &str, from: usize) -> String {
    (from..)
        .map(|k| format!("{stem}{k}"))
        .find(|n| taken.index_of(n).is_none())
        .expect("unbounded names")
}

/// Low-height nonzero rational: numerator in ±1..=4, denominator in 1..=3.
fn sample_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    let p: i64 = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let q: i64 = rng.gen_range(1..=3);
    ratio(p, q)
}

/// Adjoins one more degree-2 base generator to `partial` and perturbs the
/// differentials of fiber generators by polynomials in the base that involve
/// the new generator, until the total space has finite cohomology.
///
/// Only generators that occur in no differential are perturbed, which keeps
/// `D∘D = 0`. Profiles are the nonempty subsets of those generators in
/// order of size; within a profile every base monomial of the right degree
/// divisible by the new generator gets a coefficient. Sample 0 sets every
/// coefficient to 1; later samples draw from a ChaCha stream keyed by
/// `seed` and the profile index.
pub fn complete_to_full_torus(
    fiber: &Model,
    partial: &KsExtension,
    seed: u64,
    budget: usize,
) -> Result<Completion> {
    if fiber.images().iter().any(|e| !e.is_zero()) || !fiber.even_generators().is_empty() {
        return Err(Error::Precondition(
            "fiber must be generated in odd degrees with zero differential".into(),
        ));
    }
    if partial.fiber() != fiber {
        return Err(Error::Precondition("partial extension has a different fiber".into()));
    }
    let n = fiber.algebra().len();
    if partial.rank() + 1 != n {
        return Err(Error::Precondition(format!(
            "partial extension has rank {}, expected {}",
            partial.rank(),
            n - 1
        )));
    }
    if partial.rank() > 0 && !verify_r0_witness(partial)? {
        return Err(Error::Precondition("partial extension is not finite".into()));
    }

    let old = partial.total();
    let new_name = fresh_name(old.algebra(), "t", n);
    let mut base: Vec<Generator> = partial
        .base()
        .iter()
        .map(|b| Generator::new(b, 2))
        .collect::<Result<_>>()?;
    base.push(Generator::new(&new_name, 2)?);
    let ta = KsExtension::total_algebra(fiber, &base)?;
    let r = base.len();
    let tn = r - 1;

    let mut images: Vec<Element> = vec![Element::zero(&ta); r];
    for g in fiber.algebra().generators() {
        images.push(old.image_of(g.name())?.transport(&ta)?);
    }
    let used: Vec<bool> = (0..ta.len())
        .map(|i| images.iter().any(|e| e.terms().any(|(m, _)| m.exponent(i) > 0)))
        .collect();
    let free: Vec<usize> = (r..ta.len()).filter(|&i| !used[i]).collect();
    if free.is_empty() {
        return Ok(Completion::Undetermined { tried: 0 });
    }

    let base_only = FreeGca::new(base.clone())?;
    let monomials_for = |i: usize| -> Vec<Monomial> {
        let deg = ta.generator(i).degree() + 1;
        enumerate_degree_basis(&base_only, deg)
            .basis()
            .iter()
            .filter(|m| m.exponent(tn) > 0)
            .map(|m| {
                let mut e = vec![0u32; ta.len()];
                e[..r].copy_from_slice(m.exponents());
                Monomial::from_exponents(e)
            })
            .collect()
    };

    let names: Vec<String> = base.iter().map(|g| g.name().to_string()).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut tried = 0;
    for (profile, subset) in subsets_by_size(&free).into_iter().enumerate() {
        let slots: Vec<(usize, Vec<Monomial>)> =
            subset.iter().map(|&i| (i, monomials_for(i))).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (profile as u64).wrapping_mul(0x9E37_79B9));
        for sample in 0..budget {
            tried += 1;
            let mut imgs = images.clone();
            for (i, monos) in &slots {
                let extra = Element::from_terms(
                    &ta,
                    monos.iter().map(|m| {
                        let c = if sample == 0 { Rational::from_integer(1.into()) } else { sample_coefficient(&mut rng) };
                        (m.clone(), c)
                    }),
                );
                imgs[*i] = &imgs[*i] + &extra;
            }
            let total = Model::new(&ta, imgs)?;
            if finiteness(&total)?.verdict == Finiteness::Finite {
                let ext = KsExtension::from_models(fiber, &total, &name_refs)?;
                return Ok(Completion::Found { ext, profile, sample });
            }
        }
    }
    Ok(Completion::Undetermined { tried })
}

fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect();
    out.sort_by_key(|s: &Vec<usize>| s.len());
    out
}

/// Monomials of degree `degree` (excluding the listed generators) that lie
/// outside the monomial ideal generated by `ideal`. An empty result means
/// every element of that degree built from the remaining generators lies in
/// the ideal.
pub fn monomials_outside_ideal(
    m: &Model,
    degree: u32,
    ideal: &[&str],
    exclude: &[&str],
) -> Result<Vec<Monomial>> {
    let alg = m.algebra();
    let ideal: Vec<usize> = ideal.iter().map(|n| alg.require(n)).collect::<Result<_>>()?;
    let exclude: Vec<usize> = exclude.iter().map(|n| alg.require(n)).collect::<Result<_>>()?;
    Ok(enumerate_degree_basis(alg, degree)
        .basis()
        .iter()
        .filter(|mono| exclude.iter().all(|&i| mono.exponent(i) == 0))
        .filter(|mono| ideal.iter().all(|&i| mono.exponent(i) == 0))
        .cloned()
        .collect())
}

/// Renames generators of `m`; names absent from `renaming` are kept.
pub fn rename_model(m: &Model, renaming: &[(String, String)]) -> Result<Model> {
    let map: HashMap<&str, &str> =
        renaming.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    for from in map.keys() {
        m.algebra().require(from)?;
    }
    let gens = m
        .algebra()
        .generators()
        .iter()
        .map(|g| Generator::new(map.get(g.name()).copied().unwrap_or(g.name()), g.degree()))
        .collect::<Result<Vec<_>>>()?;
    let alg = FreeGca::new(gens)?;
    let images = m
        .images()
        .iter()
        .map(|e| Element::from_terms(&alg, e.terms().map(|(k, v)| (k.clone(), v.clone()))))
        .collect();
    Model::new(&alg, images)
}

#[derive(Clone, Debug)]
pub struct OrderReport {
    pub ks_valid: bool,
    pub lower: Finiteness,
    pub upper: Finiteness,
    pub diagnostics: Vec<String>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.ks_valid && self.lower == Finiteness::Finite && self.upper == Finiteness::Finite
    }
}

/// Checks that `upper` is a KS extension of `lower` (after renaming) over
/// the `base` generators, and that both have finite cohomology.
pub fn verify_order(
    lower: &Model,
    upper: &Model,
    base: &[&str],
    renaming: &[(String, String)],
) -> Result<OrderReport> {
    let lower = rename_model(lower, renaming)?;
    let mut diagnostics = Vec::new();
    let ks_valid = match KsExtension::from_models(&lower, upper, base) {
        Ok(_) => true,
        Err(e) => {
            diagnostics.push(e.to_string());
            false
        }
    };
    let fin = |m: &Model| -> Result<Finiteness> {
        if m.algebra().len() == 0 {
            return Ok(Finiteness::Finite);
        }
        Ok(finiteness(m)?.verdict)
    };
    Ok(OrderReport {
        ks_valid,
        lower: fin(&lower)?,
        upper: fin(upper)?,
        diagnostics,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HassePoint {
    pub s: u32,
    pub t: u32,
    pub label: String,
    pub model: Option<PathBuf>,
}

/// Points `(s, t)` with `s + t ≤ r0`; `t` counts torus factors and
/// `r0 − s − t` is the toral rank of the Borel space at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub r0: u32,
    pub points: Vec<HassePoint>,
    /// Edges as indices into `points`, lower point first.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct PointCheck {
    pub label: String,
    pub d_squared: bool,
    pub torus_rank: usize,
    pub finiteness: Option<Finiteness>,
    pub fd: i64,
    pub problems: Vec<String>,
}

impl PointCheck {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

impl HasseDiagram {
    /// Parses the line format:
    ///
    /// ```text
    /// r0 3
    /// point 0 0 P0
    /// point 2 1 P4 p4.model
    /// edge P0 P4
    /// edge 0 0 2 1
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut r0 = None;
        let mut points: Vec<HassePoint> = Vec::new();
        let mut raw_edges: Vec<(usize, Vec<String>)> = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let at = |message: String| Error::ParseAt { line: line_no, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| -> Result<u32> {
                w.parse().map_err(|_| at(format!("expected a non-negative integer, got `{w}`")))
            };
            match words[0] {
                "r0" if words.len() == 2 => {
                    if r0.is_some() {
                        return Err(at("r0 given twice".into()));
                    }
                    r0 = Some(num(words[1])?);
                }
                "point" if (3..=5).contains(&words.len()) => {
                    let (s, t) = (num(words[1])?, num(words[2])?);
                    let label = words.get(3).map_or_else(|| format!("({s},{t})"), |l| l.to_string());
                    if points.iter().any(|p| p.label == label) {
                        return Err(at(format!("duplicate point label `{label}`")));
                    }
                    let model = words.get(4).map(PathBuf::from);
                    points.push(HassePoint { s, t, label, model });
                }
                "edge" if words.len() == 3 || words.len() == 5 => {
                    raw_edges.push((line_no, words[1..].iter().map(|w| w.to_string()).collect()));
                }
                w => return Err(at(format!("unrecognised line starting with `{w}`"))),
            }
        }
        let r0 = r0.ok_or_else(|| Error::Parse("missing `r0` line".into()))?;
        let mut edges = Vec::new();
        for (line, ends) in raw_edges {
            let at = |message: String| Error::ParseAt { line, message };
            let find = |pred: &dyn Fn(&HassePoint) -> bool, what: String| -> Result<usize> {
                let hits: Vec<usize> =
                    points.iter().enumerate().filter(|(_, p)| pred(p)).map(|(i, _)| i).collect();
                match hits.as_slice() {
                    [i] => Ok(*i),
                    [] => Err(at(format!("no point {what}"))),
                    _ => Err(at(format!("point {what} is ambiguous; use labels"))),
                }
            };
            let pair = if ends.len() == 2 {
                let a = find(&|p| p.label == ends[0], format!("`{}`", ends[0]))?;
                let b = find(&|p| p.label == ends[1], format!("`{}`", ends[1]))?;
                (a, b)
            } else {
                let v: Vec<u32> = ends
                    .iter()
                    .map(|w| w.parse().map_err(|_| at(format!("bad coordinate `{w}`"))))
                    .collect::<Result<_>>()?;
                let a = find(&|p| p.s == v[0] && p.t == v[1], format!("({},{})", v[0], v[1]))?;
                let b = find(&|p| p.s == v[2] && p.t == v[3], format!("({},{})", v[2], v[3]))?;
                (a, b)
            };
            edges.push(pair);
        }
        Ok(HasseDiagram { r0, points, edges })
    }

    pub fn load(path: &Path) -> Result<Self> {
        HasseDiagram::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("r0 {}\n", self.r0);
        for p in &self.points {
            let _ = write!(s, "point {} {} {}", p.s, p.t, p.label);
            if let Some(m) = &p.model {
                let _ = write!(s, " {}", m.display());
            }
            s.push('\n');
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "edge {} {}", self.points[a].label, self.points[b].label);
        }
        s
    }

    pub fn point(&self, label: &str) -> Option<&HassePoint> {
        self.points.iter().find(|p| p.label == label)
    }

    fn has_point(&self, s: u32, t: u32) -> bool {
        self.points.iter().any(|p| p.s == s && p.t == t)
    }

    /// Structural violations; empty when the diagram is well formed.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.has_point(0, 0) {
            out.push("root (0,0) missing".to_string());
        }
        for p in &self.points {
            if p.s + p.t > self.r0 {
                out.push(format!("{} = ({},{}) exceeds s + t ≤ {}", p.label, p.s, p.t, self.r0));
            }
        }
        for &(a, b) in &self.edges {
            let (p, q) = (&self.points[a], &self.points[b]);
            if !(p.s <= q.s && p.t < q.t) {
                out.push(format!(
                    "edge {} ({},{}) -> {} ({},{}) is not monotone",
                    p.label, p.s, p.t, q.label, q.s, q.t
                ));
            }
        }
        out
    }

    /// Whether the point `(r0 − 1, 1)` is present.
    pub fn leaf_point_check(&self) -> bool {
        self.r0 >= 1 && self.has_point(self.r0 - 1, 1)
    }

    /// Whether no point has `s = 1`.
    pub fn second_row_empty(&self) -> bool {
        self.points.iter().all(|p| p.s != 1)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for p in &self.points {
            let _ = writeln!(s, "  \"{}\" [label=\"{} ({},{})\"];", p.label, p.label, p.s, p.t);
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.points[a].label, self.points[b].label);
        }
        s.push_str("}\n");
        s
    }

    /// Loads each point model (paths relative to `dir`) and checks
    /// `D∘D = 0`, that the number of degree-2 generators equals `t`, and
    /// that cohomology is finite.
    pub fn verify_points(&self, dir: &Path) -> Result<Vec<PointCheck>> {
        let mut out = Vec::new();
        for p in &self.points {
            let Some(rel) = &p.model else { continue };
            let m = Model::parse(&std::fs::read_to_string(dir.join(rel))?)?;
            let mut problems = Vec::new();
            let d_squared = m.check_d_squared().passed();
            if !d_squared {
                problems.push("D∘D ≠ 0".to_string());
            }
            let torus_rank = m
                .even_generators()
                .iter()
                .filter(|&&i| m.algebra().generator(i).degree() == 2)
                .count();
            if torus_rank != p.t as usize {
                problems.push(format!("{torus_rank} degree-2 generators but t = {}", p.t));
            }
            let fin = if d_squared { Some(finiteness(&m)?.verdict) } else { None };
            if fin != Some(Finiteness::Finite) {
                problems.push(format!("finiteness {fin:?}"));
            }
            out.push(PointCheck {
                label: p.label.clone(),
                d_squared,
                torus_rank,
                finiteness: fin,
                fd: formal_dimension(&m),
                problems,
            });
        }
        Ok(out)
    }
}

/// Maps each label to its point for quick lookups in reports.
pub fn labels(h: &HasseDiagram) -> BTreeMap<String, (u32, u32)> {
    h.points.iter().map(|p| (p.label.clone(), (p.s, p.t))).collect()
}

//! Replays catalog entries: model files paired with line-oriented
//! expectation scripts.
//!
//! An entry `<id>` consists of `<id>.expect` and, optionally, `<id>.model`,
//! which is loaded under the alias `main` and made current. Script lines:
//!
//! ```text
//! cite <key>                          citation key for the following lines
//! model <alias> <file>                load a model file and make it current
//! build <alias> witness <k...>        crosswise witness for a degree tuple
//! build <alias> cpn <N> <k...>        product with a projective space
//! build <alias> sphere <base> <N> <fundamental>
//! use <alias>                         switch the current model
//!
//! d2 pass|fail                        minimal true|false
//! finite Finite|Infinite|Undetermined fd <n>
//! csym <status> [power <p>]           betti <n> <b>
//! betti-range <a> <b> <b_a> ... <b_b> poincare pass|fail
//! exact <expr>                        nonexact <expr>
//! cocycle <expr>                      not-cocycle <expr>
//! d <expr> = <expr>                   class <expr> ~ <expr>
//! relation <u>=<expr>, ... : <expr>   toomer <n>
//! lefschetz <ω> pass                  lefschetz <ω> fail <k> kernel <expr>
//! lefschetz-step <ω> <k> iso          lefschetz-step <ω> <k> fail kernel <expr>
//! covering true|false                 normal-form pass|fail
//! criterion <k...> = true|false [pair <ki> <kj>]
//! necessary <k...> = true|false       lie <type> true|false
//! ks <fiber> base <t...> valid|invalid
//! r0-witness <fiber> base <t...> certified|not
//! order <lower> <upper> base <t...> [rename a=b ...] pass|fail
//! euler <n>                           cinv <X> <candidates...> = <p/q>
//! outside-ideal <deg> ideal <g...> exclude <g...> = none|some
//! hasse <file> valid|leaf|second-row-empty|points true|false
//! hasse <file> fd <label> <n>
//! ```
//!
//! Every expectation must follow a `cite` line whose key is declared in
//! `sources.txt` in the catalog directory.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::algebra::{Element, Rational};
use crate::cohomology::Cohomology;
use crate::csym::{
    build_b_cross_sphere, build_x_cross_cpn, c_invariant_lower, covering_sufficient,
    crosswise_criterion, crosswise_witness, finiteness, is_c_symplectic, necessary_condition,
    normal_form_check, CriterionCertificate, DegreeTuple,
};
use crate::differential::{formal_dimension, KsExtension, Model};
use crate::error::{Error, Result};
use crate::lie::{classify, LieType};
use crate::toral::{euler_homotopy_bound, monomials_outside_ideal, verify_order, verify_r0_witness, HasseDiagram};

pub const SOURCES_FILE: &str = "sources.txt";

#[derive(Clone, Debug)]
pub struct LineResult {
    pub line: usize,
    pub cite: String,
    pub summary: String,
    pub passed: bool,
}

impl fmt::Display for LineResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok  " } else { "FAIL" };
        write!(f, "{tag} {:>3}  {}  [{}]", self.line, self.summary, self.cite)
    }
}

#[derive(Clone, Debug)]
pub struct EntryReport {
    pub id: String,
    pub lines: Vec<LineResult>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| !l.passed).count()
    }
}

pub struct Catalog {
    dir: PathBuf,
    sources: BTreeMap<String, String>,
}

impl Catalog {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref().to_path_buf();
        let text = std::fs::read_to_string(dir.join(SOURCES_FILE))?;
        let mut sources = BTreeMap::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, desc) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            sources.insert(key.to_string(), desc.trim().to_string());
        }
        Ok(Catalog { dir, sources })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn sources(&self) -> &BTreeMap<String, String> {
        &self.sources
    }

    /// Entry ids in sorted order.
    pub fn ids(&self) -> Result<Vec<String>> {
        let mut ids: Vec<String> = std::fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().into_string().ok()?;
                name.strip_suffix(".expect").map(str::to_string)
            })
            .collect();
        ids.sort();
        Ok(ids)
    }

    /// Every model file in the catalog directory, sorted by name.
    pub fn model_files(&self) -> Result<Vec<PathBuf>> {
        let mut files: Vec<PathBuf> = std::fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|x| x == "model"))
            .collect();
        files.sort();
        Ok(files)
    }

    pub fn run_entry(&self, id: &str) -> Result<EntryReport> {
        let path = self.dir.join(format!("{id}.expect"));
        if !path.exists() {
            return Err(Error::UnknownEntry(id.to_string()));
        }
        let script = std::fs::read_to_string(&path)?;
        let mut runner = Runner::new(self);
        let main = self.dir.join(format!("{id}.model"));
        if main.exists() {
            runner.load("main", &main)?;
        }
        let mut lines = Vec::new();
        for (no, raw) in script.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(r) = runner.step(no + 1, line)? {
                lines.push(r);
            }
        }
        Ok(EntryReport { id: id.to_string(), lines })
    }

    /// Runs every entry concurrently; results come back in id order.
    pub fn run_all(&self) -> Result<Vec<(String, Result<EntryReport>)>> {
        let ids = self.ids()?;
        Ok(ids
            .into_par_iter()
            .map(|id| {
                let r = self.run_entry(&id);
                (id, r)
            })
            .collect())
    }

    /// Citation keys used by the scripts but missing from `sources.txt`.
    pub fn undeclared_citations(&self) -> Result<BTreeSet<String>> {
        let mut out = BTreeSet::new();
        for id in self.ids()? {
            let text = std::fs::read_to_string(self.dir.join(format!("{id}.expect")))?;
            for line in text.lines() {
                let line = line.split('#').next().unwrap_or("").trim();
                if let Some(key) = line.strip_prefix("cite ") {
                    if !self.sources.contains_key(key.trim()) {
                        out.insert(key.trim().to_string());
                    }
                }
            }
        }
        Ok(out)
    }
}

struct Slot {
    model: Model,
    coh: Cohomology,
}

struct Runner<'c> {
    catalog: &'c Catalog,
    models: HashMap<String, Slot>,
    current: Option<String>,
    cite: Option<String>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_bool(w: &str) -> Result<bool> {
    match w {
        "true" | "pass" | "valid" | "certified" | "some" => Ok(true),
        "false" | "fail" | "invalid" | "not" | "none" => Ok(false),
        _ => Err(bad(format!("expected a truth value, got `{w}`"))),
    }
}

fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

fn tuple(ws: &[&str]) -> Result<DegreeTuple> {
    let ks = ws
        .iter()
        .map(|w| w.parse::<u32>().map_err(|_| bad(format!("bad degree `{w}`"))))
        .collect::<Result<Vec<_>>>()?;
    DegreeTuple::new(ks)
}

fn num<T: std::str::FromStr>(w: &str) -> Result<T> {
    w.parse().map_err(|_| bad(format!("expected a number, got `{w}`")))
}

fn fmt_list(es: &[Element]) -> String {
    let parts: Vec<String> = es.iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

impl<'c> Runner<'c> {
    fn new(catalog: &'c Catalog) -> Self {
        Runner { catalog, models: HashMap::new(), current: None, cite: None }
    }

    fn insert(&mut self, alias: &str, model: Model) {
        let coh = Cohomology::new(&model);
        self.models.insert(alias.to_string(), Slot { model, coh });
        self.current = Some(alias.to_string());
    }

    fn load(&mut self, alias: &str, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        let model = Model::parse(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        self.insert(alias, model);
        Ok(())
    }

    fn slot(&self, alias: &str) -> Result<&Slot> {
        self.models.get(alias).ok_or_else(|| bad(format!("unknown model alias `{alias}`")))
    }

    fn cur(&self) -> Result<&Slot> {
        let alias = self.current.as_deref().ok_or_else(|| bad("no current model"))?;
        self.slot(alias)
    }

    /// Handles directives (returning `None`) and expectations.
    fn step(&mut self, no: usize, line: &str) -> Result<Option<LineResult>> {
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let at = |e: Error| Error::ParseAt { line: no, message: e.to_string() };
        match head {
            "cite" => {
                if !self.catalog.sources.contains_key(rest) {
                    return Err(at(bad(format!("undeclared citation key `{rest}`"))));
                }
                self.cite = Some(rest.to_string());
                return Ok(None);
            }
            "model" => {
                let ws = words(rest);
                let [alias, file] = ws[..] else {
                    return Err(at(bad("expected `model <alias> <file>`")));
                };
                let path = self.catalog.dir.join(file);
                self.load(alias, &path).map_err(at)?;
                return Ok(None);
            }
            "use" => {
                self.slot(rest).map_err(at)?;
                self.current = Some(rest.to_string());
                return Ok(None);
            }
            "build" => {
                self.build(rest).map_err(at)?;
                return Ok(None);
            }
            _ => {}
        }
        let cite = self
            .cite
            .clone()
            .ok_or_else(|| at(bad("expectation before any `cite` line")))?;
        let (summary, passed) = match self.expect(head, rest) {
            Ok(r) => r,
            Err(e) => (format!("{line}: error: {e}"), false),
        };
        Ok(Some(LineResult { line: no, cite, summary, passed }))
    }

    fn build(&mut self, rest: &str) -> Result<()> {
        let ws = words(rest);
        if ws.len() < 2 {
            return Err(bad("expected `build <alias> <kind> ...`"));
        }
        let model = match ws[1] {
            "witness" => crosswise_witness(&tuple(&ws[2..])?)?,
            "cpn" => {
                let n = num(ws.get(2).ok_or_else(|| bad("missing N"))?)?;
                build_x_cross_cpn(&tuple(&ws[3..])?, n)?
            }
            "sphere" => {
                if ws.len() < 5 {
                    return Err(bad("expected `build <alias> sphere <base> <N> <fundamental>`"));
                }
                let base = &self.slot(ws[2])?.model;
                let n = num(ws[3])?;
                let fundamental = base.element(&ws[4..].join(" "))?;
                build_b_cross_sphere(base, &fundamental, n)?
            }
            k => return Err(bad(format!("unknown construction `{k}`"))),
        };
        self.insert(ws[0], model);
        Ok(())
    }

    fn expect(&self, head: &str, rest: &str) -> Result<(String, bool)> {
        let ws = words(rest);
        let one = |i: usize| -> Result<&str> {
            ws.get(i).copied().ok_or_else(|| bad(format!("`{head}` needs more arguments")))
        };
        Ok(match head {
            "d2" => {
                let want = parse_bool(one(0)?)?;
                let r = self.cur()?.model.check_d_squared();
                let got = r.passed();
                let detail = r
                    .offenders
                    .first()
                    .map(|(g, e)| format!(" (D(D({g})) = {e})"))
                    .unwrap_or_default();
                (format!("d2: {}{detail}", if got { "pass" } else { "fail" }), got == want)
            }
            "minimal" => {
                let want = parse_bool(one(0)?)?;
                let got = self.cur()?.model.is_minimal();
                (format!("minimal: {got}"), got == want)
            }
            "finite" => {
                let got = finiteness(&self.cur()?.model)?.verdict;
                (format!("finite: {got}"), got.to_string() == one(0)?)
            }
            "fd" => {
                let want: i64 = num(one(0)?)?;
                let got = formal_dimension(&self.cur()?.model);
                (format!("fd: {got}"), got == want)
            }
            "csym" => {
                let v = is_c_symplectic(&self.cur()?.model)?;
                let mut ok = v.status.to_string() == one(0)?;
                let mut summary = format!("csym: {}", v.status);
                if let Some(w) = &v.witness {
                    summary += &format!(" omega={} power={}", w.omega, w.power);
                }
                if ws.get(1) == Some(&"power") {
                    let p: u32 = num(one(2)?)?;
                    ok &= v.witness.as_ref().is_some_and(|w| w.power == p);
                }
                (summary, ok)
            }
            "betti" => {
                let n: u32 = num(one(0)?)?;
                let want: usize = num(one(1)?)?;
                let got = self.cur()?.coh.betti(n)?;
                (format!("betti({n}) = {got}"), got == want)
            }
            "betti-range" => {
                let a: u32 = num(one(0)?)?;
                let b: u32 = num(one(1)?)?;
                let want = ws[2..].iter().map(|w| num::<usize>(w)).collect::<Result<Vec<_>>>()?;
                let got: Vec<usize> =
                    self.cur()?.coh.betti_range(a, b)?.into_iter().map(|(_, x)| x).collect();
                (format!("betti {a}..{b} = {got:?}"), got == want)
            }
            "poincare" => {
                let want = parse_bool(one(0)?)?;
                let slot = self.cur()?;
                let fd = formal_dimension(&slot.model);
                let got = fd >= 0 && slot.coh.poincare_check(fd as u32, None)?.passed();
                (format!("poincare: {}", if got { "pass" } else { "fail" }), got == want)
            }
            "exact" | "nonexact" => {
                let slot = self.cur()?;
                let e = slot.model.element(rest)?;
                let exact = slot.coh.is_coboundary(&e)?.is_exact();
                let label = if exact { "exact" } else { "not exact" };
                (format!("[{e}]: {label}"), exact == (head == "exact"))
            }
            "cocycle" | "not-cocycle" => {
                let slot = self.cur()?;
                let e = slot.model.element(rest)?;
                let got = slot.model.is_cocycle(&e);
                let de = slot.model.d(&e);
                (format!("D({e}) = {de}"), got == (head == "cocycle"))
            }
            "d" => {
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| bad("expected `d <a> = <b>`"))?;
                let m = &self.cur()?.model;
                let got = m.d(&m.element(lhs.trim())?);
                let want = m.element(rhs.trim())?;
                (format!("D({}) = {got}", lhs.trim()), got == want)
            }
            "class" => {
                let (a, b) = rest.split_once('~').ok_or_else(|| bad("expected `class <a> ~ <b>`"))?;
                let slot = self.cur()?;
                let (a, b) = (slot.model.element(a.trim())?, slot.model.element(b.trim())?);
                let diff = &a - &b;
                let same = slot.coh.is_coboundary(&diff)?.is_exact();
                let nonzero = !slot.coh.is_coboundary(&a)?.is_exact();
                let rel = if same { "=" } else { "≠" };
                (format!("[{a}] {rel} [{b}], nonzero: {nonzero}"), same && nonzero)
            }
            "relation" => {
                let (binds, rel) =
                    rest.split_once(':').ok_or_else(|| bad("expected `relation u=<e>, ... : <rel>`"))?;
                let slot = self.cur()?;
                let mut reps: Vec<(String, Element)> = Vec::new();
                for b in binds.split(',').map(str::trim).filter(|b| !b.is_empty()) {
                    let (name, expr) = b.split_once('=').ok_or_else(|| bad(format!("bad binding `{b}`")))?;
                    reps.push((name.trim().to_string(), slot.model.element(expr.trim())?));
                }
                let reps: Vec<(&str, Element)> = reps.iter().map(|(n, e)| (n.as_str(), e.clone())).collect();
                let got = slot.coh.verify_relation(&reps, rel.trim())?;
                (format!("relation {}: {}", rel.trim(), if got { "holds" } else { "fails" }), got)
            }
            "toomer" => {
                let want: u32 = num(one(0)?)?;
                let slot = self.cur()?;
                let fd = formal_dimension(&slot.model);
                let got = slot.coh.toomer(fd as u32)?;
                (format!("toomer: {got}"), got == want)
            }
            "lefschetz" => self.lefschetz(&ws)?,
            "lefschetz-step" => self.lefschetz_step(&ws)?,
            "covering" => {
                let want = parse_bool(one(0)?)?;
                let got = covering_sufficient(&self.cur()?.model)?;
                (format!("covering: {got}"), got == want)
            }
            "normal-form" => {
                let want = parse_bool(one(0)?)?;
                let r = normal_form_check(&self.cur()?.model)?;
                let summary = format!(
                    "normal form: triangular={} top={} lambda={} lambda'={}",
                    r.triangular_holds(),
                    r.top_form_holds,
                    r.lambda.as_ref().map_or("-".into(), |x| x.to_string()),
                    r.lambda_prime.as_ref().map_or("-".into(), |x| x.to_string()),
                );
                (summary, r.passed() == want)
            }
            "criterion" | "necessary" => {
                let (ks, tail) = rest.split_once('=').ok_or_else(|| bad("expected `<k...> = <bool>`"))?;
                let k = tuple(&words(ks))?;
                let tail = words(tail);
                let want = parse_bool(tail.first().ok_or_else(|| bad("missing verdict"))?)?;
                if head == "necessary" {
                    let got = necessary_condition(&k);
                    (format!("necessary {k}: {got}"), got == want)
                } else {
                    let r = crosswise_criterion(&k);
                    let mut ok = r.holds == want;
                    if tail.get(1) == Some(&"pair") {
                        let (a, b): (u32, u32) = (num(tail[2])?, num(tail[3])?);
                        ok &= matches!(r.certificate, CriterionCertificate::Pair { ki, kj, .. } if ki == a && kj == b);
                    }
                    (format!("criterion {k}: {} ({:?})", r.holds, r.certificate), ok)
                }
            }
            "lie" => {
                let g: LieType = one(0)?.parse()?;
                let want = parse_bool(one(1)?)?;
                let got = classify(g)?;
                (format!("lie {g}: {got}"), got == want)
            }
            "ks" | "r0-witness" => {
                let fiber = &self.slot(one(0)?)?.model;
                if one(1)? != "base" || ws.len() < 3 {
                    return Err(bad(format!("expected `{head} <fiber> base <t...> <verdict>`")));
                }
                let base = &ws[2..ws.len() - 1];
                let want = parse_bool(ws[ws.len() - 1])?;
                let total = &self.cur()?.model;
                match KsExtension::from_models(fiber, total, base) {
                    Ok(_) if head == "ks" => ("ks: valid".to_string(), want),
                    Ok(ext) => {
                        let got = verify_r0_witness(&ext)?;
                        (format!("r0 ≥ {}: {got}", ext.rank()), got == want)
                    }
                    Err(e) => (format!("{head}: {e}"), !want),
                }
            }
            "order" => {
                let lower = &self.slot(one(0)?)?.model;
                let upper = &self.slot(one(1)?)?.model;
                if one(2)? != "base" {
                    return Err(bad("expected `order <lower> <upper> base <t...> ...`"));
                }
                let mut base = Vec::new();
                let mut renaming = Vec::new();
                let mut i = 3;
                while i < ws.len() - 1 && ws[i] != "rename" {
                    base.push(ws[i]);
                    i += 1;
                }
                if ws.get(i) == Some(&"rename") {
                    i += 1;
                    while i < ws.len() - 1 {
                        let (a, b) = ws[i].split_once('=').ok_or_else(|| bad("rename needs a=b"))?;
                        renaming.push((a.to_string(), b.to_string()));
                        i += 1;
                    }
                }
                let want = parse_bool(ws[ws.len() - 1])?;
                let r = verify_order(lower, upper, &base, &renaming)?;
                let mut summary = format!(
                    "order {} < {}: ks={} lower={} upper={}",
                    ws[0], ws[1], r.ks_valid, r.lower, r.upper
                );
                if let Some(d) = r.diagnostics.first() {
                    summary += &format!(" ({d})");
                }
                (summary, r.passed() == want)
            }
            "euler" => {
                let want: i64 = num(one(0)?)?;
                let got = euler_homotopy_bound(&self.cur()?.model);
                (format!("euler bound: {got}"), got == want)
            }
            "cinv" => {
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| bad("expected `cinv X c... = p/q`"))?;
                let names = words(lhs);
                let x = &self.slot(names.first().ok_or_else(|| bad("missing X"))?)?.model;
                let cands: Vec<Model> =
                    names[1..].iter().map(|n| Ok(self.slot(n)?.model.clone())).collect::<Result<_>>()?;
                let want: Rational = rhs.trim().parse().map_err(|_| bad("bad rational"))?;
                let r = c_invariant_lower(x, &cands)?;
                (format!("c ≥ {} from {:?}", r.value, r.candidates), r.value == want)
            }
            "outside-ideal" => {
                let deg: u32 = num(one(0)?)?;
                let pos = |k: &str| ws.iter().position(|w| *w == k);
                let (pi, pe, peq) = (
                    pos("ideal").ok_or_else(|| bad("missing `ideal`"))?,
                    pos("exclude").unwrap_or(ws.len()),
                    pos("=").ok_or_else(|| bad("missing `=`"))?,
                );
                let ideal = &ws[pi + 1..pe.min(peq)];
                let exclude = if pe < peq { &ws[pe + 1..peq] } else { &[][..] };
                let want_some = parse_bool(one(peq + 1)?)?;
                let m = &self.cur()?.model;
                let out = monomials_outside_ideal(m, deg, ideal, exclude)?;
                let alg = m.algebra();
                let shown: Vec<String> = out.iter().map(|x| x.fmt_with(alg)).collect();
                (format!("degree {deg} outside ideal: {shown:?}"), out.is_empty() != want_some)
            }
            "hasse" => self.hasse(&ws)?,
            other => return Err(bad(format!("unknown expectation `{other}`"))),
        })
    }

    fn lefschetz(&self, ws: &[&str]) -> Result<(String, bool)> {
        let slot = self.cur()?;
        let omega = slot.model.element(ws.first().ok_or_else(|| bad("missing ω"))?)?;
        let fd = formal_dimension(&slot.model);
        let r = slot.coh.hard_lefschetz(&omega, fd as u32)?;
        let fails = r.failures();
        match ws.get(1).copied() {
            Some("pass") => {
                let s = if fails.is_empty() { "lefschetz: PASS".to_string() } else { format!("lefschetz: FAIL at k={fails:?}") };
                Ok((s, fails.is_empty()))
            }
            Some("fail") => {
                let k: u32 = num(ws.get(2).ok_or_else(|| bad("missing k"))?)?;
                let step = r.steps.iter().find(|s| s.k == k);
                let kernel = step.map(|s| s.kernel.clone()).unwrap_or_default();
                let mut ok = fails == vec![k];
                if ws.get(3) == Some(&"kernel") {
                    let want = slot.model.element(&ws[4..].join(" "))?;
                    let wk = omega.pow(k);
                    ok &= !slot.coh.is_coboundary(&want)?.is_exact()
                        && slot.coh.is_coboundary(&(&want * &wk))?.is_exact();
                    ok &= kernel.len() == 1;
                }
                let s = if fails.is_empty() {
                    "lefschetz: PASS".to_string()
                } else {
                    let ks: Vec<String> = fails.iter().map(u32::to_string).collect();
                    format!("lefschetz: FAIL at k={} kernel={}", ks.join(","), fmt_list(&kernel))
                };
                Ok((s, ok))
            }
            _ => Err(bad("expected `lefschetz <ω> pass|fail <k> [kernel <e>]`")),
        }
    }

    /// A single multiplication map `ω^k: H^{m−k} → H^{m+k}`.
    fn lefschetz_step(&self, ws: &[&str]) -> Result<(String, bool)> {
        let slot = self.cur()?;
        let omega = slot.model.element(ws.first().ok_or_else(|| bad("missing ω"))?)?;
        let k: u32 = num(ws.get(1).ok_or_else(|| bad("missing k"))?)?;
        let fd = formal_dimension(&slot.model);
        let r = slot.coh.hard_lefschetz(&omega, fd as u32)?;
        let step = r
            .steps
            .iter()
            .find(|s| s.k == k)
            .ok_or_else(|| bad(format!("k = {k} is out of range")))?;
        let summary = if step.bijective {
            format!("lefschetz: k={k} iso")
        } else {
            format!("lefschetz: FAIL at k={k} kernel={}", fmt_list(&step.kernel))
        };
        let ok = match ws.get(2).copied() {
            Some("iso") => step.bijective,
            Some("fail") => {
                let mut ok = !step.bijective;
                if ws.get(3) == Some(&"kernel") {
                    let e = slot.model.element(&ws[4..].join(" "))?;
                    ok &= !slot.coh.is_coboundary(&e)?.is_exact()
                        && slot.coh.is_coboundary(&(&e * &omega.pow(k)))?.is_exact();
                }
                ok
            }
            _ => return Err(bad("expected `lefschetz-step <ω> <k> iso|fail [kernel <e>]`")),
        };
        Ok((summary, ok))
    }

    fn hasse(&self, ws: &[&str]) -> Result<(String, bool)> {
        let file = ws.first().ok_or_else(|| bad("missing diagram file"))?;
        let path = self.catalog.dir.join(file);
        let h = HasseDiagram::load(&path)?;
        let what = ws.get(1).copied().ok_or_else(|| bad("missing hasse check"))?;
        if what == "fd" {
            let label = ws.get(2).ok_or_else(|| bad("missing label"))?;
            let want: i64 = num(ws.get(3).ok_or_else(|| bad("missing fd"))?)?;
            let dir = path.parent().unwrap_or(Path::new("."));
            let checks = h.verify_points(dir)?;
            let c = checks
                .iter()
                .find(|c| c.label == *label)
                .ok_or_else(|| bad(format!("no model for point `{label}`")))?;
            return Ok((format!("{file} {label}: fd {}", c.fd), c.fd == want));
        }
        let want = parse_bool(ws.get(2).ok_or_else(|| bad("missing verdict"))?)?;
        let (got, detail) = match what {
            "valid" => {
                let v = h.validate();
                (v.is_empty(), v.join("; "))
            }
            "leaf" => (h.leaf_point_check(), String::new()),
            "second-row-empty" => (h.second_row_empty(), String::new()),
            "points" => {
                let dir = path.parent().unwrap_or(Path::new("."));
                let checks = h.verify_points(dir)?;
                let bad: Vec<String> = checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| format!("{}: {}", c.label, c.problems.join(", ")))
                    .collect();
                (bad.is_empty(), format!("{} point models; {}", checks.len(), bad.join("; ")))
            }
            other => return Err(bad(format!("unknown hasse check `{other}`"))),
        };
        Ok((format!("{file} {what}: {got} {detail}").trim_end().to_string(), got == want))
    }
}


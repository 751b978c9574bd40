use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use sullivan::catalog::Catalog;
use sullivan::cohomology::Cohomology;
use sullivan::csym::{
    crosswise_criterion, crosswise_witness, finiteness_with, is_c_symplectic_with,
    necessary_condition, CriterionCertificate, DegreeTuple, FinitenessOptions,
};
use sullivan::differential::{formal_dimension, Model};
use sullivan::lie::{classify_with_certificate, rational_type, LieType};
use sullivan::pairing::{brute_force_check, crosswise_sums, crosswise_within};
use sullivan::toral::HasseDiagram;

/// Rational models of circle-bundle total spaces: cohomology, finiteness,
/// cohomological symplecticity and toral-rank diagrams.
#[derive(Parser)]
#[command(name = "csym", version)]
struct Cli {
    /// Print `key=value` lines instead of prose.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers over a degree range.
    Betti {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        from: u32,
        #[arg(long)]
        to: Option<u32>,
    },
    /// Formal dimension.
    Fd { file: PathBuf },
    /// Finiteness of the cohomology.
    Finite {
        file: PathBuf,
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Cohomological symplecticity.
    Csym {
        file: PathBuf,
        /// Coefficients tried when sampling a degree-2 class (r ≥ 2 only).
        #[arg(long, value_delimiter = ',')]
        samples: Option<Vec<i64>>,
    },
    /// Degree criterion for a product of odd spheres.
    Criterion { degrees: Vec<u32> },
    /// Necessary degree condition.
    Necessary { degrees: Vec<u32> },
    /// Write the witness model for a degree tuple.
    Witness {
        degrees: Vec<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hard Lefschetz report for a degree-2 class.
    Lefschetz {
        file: PathBuf,
        #[arg(long, default_value = "t")]
        omega: String,
    },
    /// Toomer invariant at the formal dimension.
    Toomer { file: PathBuf },
    /// Simple Lie groups.
    Lie {
        #[command(subcommand)]
        command: LieCommand,
    },
    /// Pair-sum bounds on sorted sequences.
    Pairing {
        #[command(subcommand)]
        command: PairingCommand,
    },
    /// Toral-rank diagrams.
    Hasse {
        #[command(subcommand)]
        command: HasseCommand,
    },
    /// Replay the model catalog.
    Catalog {
        #[arg(long, default_value = "catalog")]
        dir: PathBuf,
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    Classify { spec: String },
}

#[derive(Subcommand)]
enum PairingCommand {
    /// Crosswise sums against a bound.
    Check {
        values: Vec<u32>,
        #[arg(long)]
        bound: u64,
    },
    /// Exhaustive search over all pairings.
    Brute {
        values: Vec<u32>,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Subcommand)]
enum HasseCommand {
    Verify { file: PathBuf },
    Dot { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Run { id: String },
    RunAll,
}

struct Out {
    machine: bool,
    lines: Vec<String>,
}

impl Out {
    fn kv(&mut self, key: &str, human: &str, value: impl ToString) {
        let value = value.to_string();
        self.lines.push(if self.machine {
            format!("{key}={value}")
        } else {
            format!("{human}: {value}")
        });
    }

    fn text(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }
}

fn load(path: &Path) -> Result<Model> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Model::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn criterion_text(c: &CriterionCertificate) -> String {
    match c {
        CriterionCertificate::Holds => "yes".into(),
        CriterionCertificate::EvenLength(_) => "no (n even)".into(),
        CriterionCertificate::Pair { ki, kj, kn, .. } => format!("no ({ki} + {kj} >= {kn})"),
    }
}

/// Returns whether every check the verb performs passed.
fn run(cli: Cli, out: &mut Out) -> Result<bool> {
    match cli.command {
        Command::Betti { file, from, to } => {
            let m = load(&file)?;
            let to = match to {
                Some(t) => t,
                None => u32::try_from(formal_dimension(&m)).unwrap_or(0).max(from),
            };
            let h = Cohomology::new(&m);
            for (n, b) in h.betti_range(from, to)? {
                if out.machine {
                    out.text(format!("betti.{n}={b}"));
                } else {
                    out.text(format!("H^{n}: {b}"));
                }
            }
        }
        Command::Fd { file } => {
            let m = load(&file)?;
            out.kv("fd", "formal dimension", formal_dimension(&m));
        }
        Command::Finite { file, bound } => {
            let m = load(&file)?;
            let opts = FinitenessOptions { bound, ..FinitenessOptions::default() };
            let r = finiteness_with(&m, &opts)?;
            out.kv("verdict", "finite", r.verdict);
            out.kv("bound", "degree bound", r.bound);
            for (i, p) in r.pure_parts.iter().enumerate() {
                out.kv(&format!("pure.{i}"), &format!("pure part {i}"), p);
            }
            for d in &r.diagnostics {
                out.kv("note", "note", d);
            }
        }
        Command::Csym { file, samples } => {
            let m = load(&file)?;
            let samples = samples.unwrap_or_else(|| vec![1, 2, 3, 5, 7]);
            let v = is_c_symplectic_with(&m, &samples)?;
            out.kv("status", "c-symplectic", v.status);
            out.kv("fd", "formal dimension", v.fd);
            if let Some(w) = &v.witness {
                out.kv("witness_omega", "class", &w.omega);
                out.kv("witness_power", "non-vanishing power", w.power);
            }
            for d in &v.diagnostics {
                out.kv("note", "note", d);
            }
        }
        Command::Criterion { degrees } => {
            let k = DegreeTuple::new(degrees)?;
            let r = crosswise_criterion(&k);
            out.kv("degrees", "degrees", &k);
            out.kv("pre_c_symplectic", "pre-c-symplectic", criterion_text(&r.certificate));
        }
        Command::Necessary { degrees } => {
            let k = DegreeTuple::new(degrees)?;
            out.kv("degrees", "degrees", &k);
            out.kv("necessary", "necessary condition", yes_no(necessary_condition(&k)));
        }
        Command::Witness { degrees, output } => {
            let k = DegreeTuple::new(degrees)?;
            let text = crosswise_witness(&k)?.to_text();
            match output {
                Some(path) => {
                    fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
                    out.kv("written", "written", path.display());
                }
                None => out.text(text.trim_end()),
            }
        }
        Command::Lefschetz { file, omega } => {
            let m = load(&file)?;
            let fd = formal_dimension(&m);
            if fd < 0 || fd % 2 != 0 {
                bail!("formal dimension {fd} is not even");
            }
            let omega = m.element(&omega)?;
            let r = Cohomology::new(&m).hard_lefschetz(&omega, fd as u32)?;
            for s in &r.steps {
                let kernel: Vec<String> = s.kernel.iter().map(|e| e.to_string()).collect();
                if out.machine {
                    out.text(format!(
                        "k.{}={} {}->{} kernel=[{}]",
                        s.k,
                        if s.bijective { "iso" } else { "fail" },
                        s.source_dim,
                        s.target_dim,
                        kernel.join(", ")
                    ));
                } else if !s.bijective {
                    out.text(format!("k={}: dims {} -> {}, kernel=[{}]", s.k, s.source_dim, s.target_dim, kernel.join(", ")));
                }
            }
            let fails: Vec<String> = r.failures().iter().map(u32::to_string).collect();
            out.kv("lefschetz", "lefschetz", if fails.is_empty() { "PASS".to_string() } else { format!("FAIL at k={}", fails.join(",")) });
        }
        Command::Toomer { file } => {
            let m = load(&file)?;
            let fd = formal_dimension(&m);
            if fd < 0 {
                bail!("formal dimension {fd} is negative");
            }
            out.kv("toomer", "toomer", Cohomology::new(&m).toomer(fd as u32)?);
        }
        Command::Lie { command: LieCommand::Classify { spec } } => {
            let g: LieType = spec.parse()?;
            let r = classify_with_certificate(g)?;
            out.kv("type", "type", g);
            out.kv("degrees", "degrees", rational_type(g));
            out.kv("pre_c_symplectic", "pre-c-symplectic", criterion_text(&r.certificate));
        }
        Command::Pairing { command } => {
            let (values, bound, brute) = match command {
                PairingCommand::Check { values, bound } => (values, bound, false),
                PairingCommand::Brute { values, bound } => (values, bound, true),
            };
            if values.windows(2).any(|w| w[0] > w[1]) {
                bail!("values must be sorted non-decreasing");
            }
            if brute {
                out.kv("pairing_exists", "pairing within bound", yes_no(brute_force_check(&values, bound)?));
            } else {
                if values.is_empty() || values.len() % 2 != 0 {
                    bail!("expected a positive even number of values");
                }
                let sums: Vec<String> = crosswise_sums(&values).iter().map(u64::to_string).collect();
                out.kv("crosswise_sums", "crosswise sums", sums.join(","));
                out.kv("within", "within bound", yes_no(crosswise_within(&values, bound)));
            }
        }
        Command::Hasse { command: HasseCommand::Dot { file } } => {
            out.text(HasseDiagram::load(&file)?.to_dot().trim_end());
        }
        Command::Hasse { command: HasseCommand::Verify { file } } => {
            let h = HasseDiagram::load(&file)?;
            let structural = h.validate();
            let dir = file.parent().unwrap_or(Path::new("."));
            let points = h.verify_points(dir)?;
            out.kv("structure", "structure", if structural.is_empty() { "ok".to_string() } else { structural.join("; ") });
            out.kv("leaf", "leaf point (r0-1, 1)", yes_no(h.leaf_point_check()));
            out.kv("second_row_empty", "second row empty", yes_no(h.second_row_empty()));
            for p in &points {
                let status = if p.passed() { format!("ok fd={}", p.fd) } else { p.problems.join(", ") };
                out.kv(&format!("point.{}", p.label), &format!("point {}", p.label), status);
            }
            return Ok(structural.is_empty() && points.iter().all(|p| p.passed()));
        }
        Command::Catalog { dir, command } => {
            let cat = Catalog::open(&dir).with_context(|| format!("opening catalog {}", dir.display()))?;
            match command {
                CatalogCommand::List => {
                    for id in cat.ids()? {
                        out.text(id);
                    }
                }
                CatalogCommand::Run { id } => {
                    let r = cat.run_entry(&id)?;
                    for l in &r.lines {
                        out.text(l.to_string());
                    }
                    out.kv("failures", "failures", r.failures());
                    return Ok(r.passed());
                }
                CatalogCommand::RunAll => {
                    let mut ok = true;
                    let mut total = 0;
                    let mut broken = Vec::new();
                    for (id, r) in cat.run_all()? {
                        let r = match r {
                            Ok(r) => r,
                            Err(e) => {
                                out.text(format!("ERR  {id}: {e}"));
                                broken.push(id);
                                continue;
                            }
                        };
                        total += r.lines.len();
                        ok &= r.passed();
                        out.text(format!("{} {id} ({} checks)", if r.passed() { "ok  " } else { "FAIL" }, r.lines.len()));
                        for l in r.lines.iter().filter(|l| !l.passed) {
                            out.text(format!("    {l}"));
                        }
                    }
                    out.kv("checks", "checks", total);
                    if !broken.is_empty() {
                        bail!("unreadable entries: {}", broken.join(", "));
                    }
                    return Ok(ok);
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { machine: cli.machine, lines: Vec::new() };
    let result = run(cli, &mut out);
    for l in &out.lines {
        println!("{l}");
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

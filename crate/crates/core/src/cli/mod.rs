//! The `intriguing` command line. Every command reads and writes the text
//! formats of [`crate::formats`]; result files get a `.manifest` sibling.
//!
//! Exit codes: 0 success, 1 user error, 2 node budget exhausted with partial
//! results written, 3 internal invariant violation.

mod manifest;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use manifest::RunManifest;

use crate::catalog::{build_named, petersen_automorphisms, NamedGraphId};
use crate::error::{Error, Result};
use crate::formats::{
    parse_cap, parse_geometry, parse_graph, parse_group, parse_sets, write_cap, write_geometry, write_graph,
    write_group, write_sets, SetRecord,
};
use crate::geometry::{
    cap_search, classify_point_set, collinearity_graph, elliptic_gq, find_hemisystem, linear_representation,
    minus_perp, parabolic_gq, restrict_to_set, IncidenceGeometry, PointSetTag, SubGeometry,
};
use crate::graphcore::{srg_params, Graph, VertexSet};
use crate::infinity::{check_atinfinity, complete_to_hemisystem, predict_infinity_params, Scenario, SetKind};
use crate::intrigue::{self, enumerate, intersection_table, EnumerateOptions, Sign, Verifier};

#[derive(Parser, Debug)]
#[command(name = "intriguing", version, about = "Intriguing sets of strongly regular graphs and partial quadrangles")]
pub struct Cli {
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Node budget for searches; partial results exit with code 2.
    #[arg(long = "budget-nodes", global = true)]
    pub budget_nodes: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Pos,
    Neg,
    Any,
}

impl SignArg {
    fn sign(self) -> Option<Sign> {
        match self {
            SignArg::Pos => Some(Sign::Positive),
            SignArg::Neg => Some(Sign::Negative),
            SignArg::Any => None,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a catalog graph (`petersen`, `clebsch`, ...), `q-minus 5 <q>`,
    /// `q-parabolic 4 <q>`, `coxeter-pq` or the linear representation of a `.cap` file.
    Build {
        target: String,
        params: Vec<u32>,
        #[arg(short, long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Enumerate intriguing sets of a graph file.
    Enumerate {
        graph: PathBuf,
        #[arg(value_enum)]
        sign: SignArg,
        #[arg(long)]
        size_cap: Option<usize>,
        /// Group file; output one representative per orbit.
        #[arg(long)]
        group: Option<PathBuf>,
        /// Stop after the first set.
        #[arg(long)]
        first: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify every set of a set file and annotate it.
    Verify {
        graph: PathBuf,
        sets: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check |A ∩ B| v = |A| |B| over every positive/negative pair of two set files.
    Intersect { graph: PathBuf, positive: PathBuf, negative: PathBuf },
    /// Derived geometries and sets.
    Derive {
        #[command(subcommand)]
        what: DeriveCommand,
    },
    /// Profile of a set at infinity: `--inf perp:<P>` or `--inf set:<file>`.
    Infinity {
        geometry: PathBuf,
        #[arg(long)]
        inf: String,
        #[arg(long)]
        set: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Complete a negative set of G minus P⊥ (minus-perp indices) to a hemisystem.
    Complete {
        geometry: PathBuf,
        point: usize,
        set: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DeriveCommand {
    /// The partial quadrangle G minus P⊥.
    MinusPerp {
        geometry: PathBuf,
        point: usize,
        /// Also write the trace of the first set of this file on G minus P⊥.
        #[arg(long)]
        set: Option<PathBuf>,
        #[arg(short, long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Find a hemisystem H and write it with the partial quadrangle on H.
    Hemisystem {
        geometry: PathBuf,
        #[arg(short, long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// The partial quadrangle on a point set (first set of the file).
    Restrict {
        geometry: PathBuf,
        set: PathBuf,
        #[arg(short, long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Complement of the first set of a set file.
    Complement {
        graph: PathBuf,
        set: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Union of the first sets of two disjoint set files.
    Union {
        graph: PathBuf,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Difference A minus B of the first sets, B inside A.
    Difference {
        graph: PathBuf,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let argv: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, &argv) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Partial) => 2,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExhausted(_) => 2,
        Error::InvariantViolation(_) => 3,
        _ => 1,
    }
}

/// Whether a command finished or stopped on its node budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Done,
    Partial,
}

struct Session {
    manifest: RunManifest,
    start: Instant,
}

impl Session {
    fn new(cli: &Cli, argv: &[String]) -> Self {
        let command = argv.iter().skip(1).find(|a| !a.starts_with('-')).cloned().unwrap_or_default();
        Session { manifest: RunManifest::new(command, argv.to_vec(), cli.threads), start: Instant::now() }
    }

    fn read(&mut self, path: &Path) -> Result<String> {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.manifest.add_input(path, text.as_bytes());
        Ok(text)
    }

    fn graph(&mut self, path: &Path) -> Result<Graph> {
        let text = self.read(path)?;
        parse_graph(&text, &stem(path))
    }

    fn geometry(&mut self, path: &Path) -> Result<IncidenceGeometry> {
        let text = self.read(path)?;
        parse_geometry(&text, &stem(path))
    }

    fn sets(&mut self, path: &Path, n: usize) -> Result<Vec<VertexSet>> {
        let text = self.read(path)?;
        parse_sets(&text)?.iter().map(|r| r.to_vertex_set(n)).collect()
    }

    fn first_set(&mut self, path: &Path, n: usize) -> Result<VertexSet> {
        self.sets(path, n)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Precondition(format!("{} holds no set", path.display())))
    }

    /// Writes a result to `out` with its manifest, or to stdout.
    fn emit(&mut self, out: Option<&Path>, text: &str) -> Result<()> {
        match out {
            Some(p) => {
                write_file(p, text)?;
                self.manifest.outputs.push(p.display().to_string());
                self.finish(p)
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_into(&mut self, dir: &Path, name: &str, text: &str) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let p = dir.join(name);
        write_file(&p, text)?;
        self.manifest.outputs.push(p.display().to_string());
        Ok(p)
    }

    fn finish(&mut self, primary: &Path) -> Result<()> {
        self.manifest.wall_ms = self.start.elapsed().as_millis();
        let mut path = primary.as_os_str().to_owned();
        path.push(".manifest");
        write_file(Path::new(&path), &self.manifest.to_string())
    }
}

fn write_file(p: &Path, text: &str) -> Result<()> {
    fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

fn stem(p: &Path) -> String {
    p.file_stem().map_or_else(|| "input".into(), |s| s.to_string_lossy().into_owned())
}

fn records(found: impl IntoIterator<Item = (VertexSet, Option<intrigue::IntrigueCertificate>)>) -> Vec<SetRecord> {
    found.into_iter().map(|(s, c)| SetRecord::new(&s, c.as_ref())).collect()
}

pub fn execute(cli: &Cli, argv: &[String]) -> Result<Outcome> {
    let mut session = Session::new(cli, argv);
    match &cli.command {
        Command::Build { target, params, out_dir } => build(&mut session, target, params, out_dir, cli.budget_nodes),
        Command::Enumerate { graph, sign, size_cap, group, first, out } => {
            let g = session.graph(graph)?;
            let group = match group {
                Some(p) => {
                    let text = session.read(p)?;
                    Some(parse_group(&text)?)
                }
                None => None,
            };
            let opts = EnumerateOptions {
                size_cap: *size_cap,
                first_only: *first,
                group,
                budget: cli.budget_nodes,
                threads: cli.threads.max(1),
            };
            let result = match enumerate(&g, sign.sign(), &opts) {
                Err(Error::IrrationalEigenvalues) => {
                    session.manifest.reason = Some("irrational eigenvalues".into());
                    session.emit(out.as_deref(), "")?;
                    return Ok(Outcome::Done);
                }
                r => r?,
            };
            session.manifest.exhaustive = Some(result.exhaustive);
            session.manifest.nodes = Some(result.nodes);
            session.manifest.extra.push(("sets".into(), result.found.len().to_string()));
            for row in &result.rows {
                session
                    .manifest
                    .extra
                    .push(("row".into(), format!("{} h1={} h2={} size={}", row.sign.short(), row.h1, row.h2, row.size)));
            }
            let text = write_sets(&records(result.found.into_iter().map(|f| (f.set, Some(f.certificate)))));
            if !result.exhaustive {
                session.manifest.reason = Some("node budget exhausted".into());
            }
            session.emit(out.as_deref(), &text)?;
            Ok(if result.exhaustive { Outcome::Done } else { Outcome::Partial })
        }
        Command::Verify { graph, sets, out } => {
            let g = session.graph(graph)?;
            let v = Verifier::new(&g)?;
            let sets = session.sets(sets, g.n())?;
            let mut recs = Vec::new();
            let mut failures = 0;
            for s in sets {
                let c = v.verify(&s)?;
                failures += usize::from(c.is_none());
                recs.push(SetRecord::new(&s, c.as_ref()));
            }
            session.manifest.extra.push(("not_intriguing".into(), failures.to_string()));
            session.emit(out.as_deref(), &write_sets(&recs))?;
            Ok(Outcome::Done)
        }
        Command::Intersect { graph, positive, negative } => {
            let g = session.graph(graph)?;
            let v = Verifier::new(&g)?;
            let plus = session.sets(positive, g.n())?;
            let minus = session.sets(negative, g.n())?;
            let meets = intersection_table(&v, &plus, &minus)?;
            println!("pairs={} exceptions=0", plus.len() * minus.len());
            for (m, c) in meets {
                println!("meet={m} pairs={c}");
            }
            Ok(Outcome::Done)
        }
        Command::Derive { what } => derive(&mut session, what),
        Command::Infinity { geometry, inf, set, out } => {
            let geo = session.geometry(geometry)?;
            let set = session.first_set(set, geo.point_count())?;
            let (sub, perp_point) = match inf.split_once(':') {
                Some(("perp", p)) => {
                    let p: usize = p.parse().map_err(|_| Error::Precondition(format!("bad point '{p}'")))?;
                    (minus_perp(&geo, p)?, Some(p))
                }
                Some(("set", path)) => {
                    let inf_set = session.first_set(Path::new(path), geo.point_count())?;
                    (restrict_to_set(&geo, &inf_set.complement())?, None)
                }
                _ => return Err(Error::Precondition(format!("--inf must be perp:<P> or set:<file>, got '{inf}'"))),
            };
            let text = infinity_report(&geo, &sub, perp_point, &set)?;
            session.emit(out.as_deref(), &text)?;
            Ok(Outcome::Done)
        }
        Command::Complete { geometry, point, set, out } => {
            let geo = session.geometry(geometry)?;
            let mp = minus_perp(&geo, *point)?;
            let set = session.first_set(set, mp.geometry.point_count())?;
            let done = complete_to_hemisystem(&geo, *point, &mp, &set)?;
            session.manifest.extra.push(("added".into(), done.added.len().to_string()));
            session.emit(out.as_deref(), &write_sets(&[SetRecord::new(&done.hemisystem, None)]))?;
            Ok(Outcome::Done)
        }
    }
}

fn write_pair(session: &mut Session, dir: &Path, name: &str, geo: &IncidenceGeometry) -> Result<PathBuf> {
    let g = collinearity_graph(geo);
    srg_params(&g)?;
    let p = session.emit_into(dir, &format!("{name}.geo"), &write_geometry(geo))?;
    session.emit_into(dir, &format!("{name}.graph"), &write_graph(&g))?;
    Ok(p)
}

fn build(session: &mut Session, target: &str, params: &[u32], dir: &Path, budget: Option<u64>) -> Result<Outcome> {
    let primary = match (target, params) {
        ("q-minus", [5, q]) => write_pair(session, dir, &format!("q5minus_{q}"), elliptic_gq(*q)?.geometry())?,
        ("q-parabolic", [4, q]) => write_pair(session, dir, &format!("q4_{q}"), parabolic_gq(*q)?.geometry())?,
        ("q-minus" | "q-parabolic", _) => {
            return Err(Error::Precondition(format!("usage: build q-minus 5 <q> | build q-parabolic 4 <q>, got {params:?}")))
        }
        ("coxeter-pq", []) => {
            let cap = cap_search(4, 3, 11, true, budget)?;
            let rep = linear_representation(&cap);
            if rep.srg.is_none() {
                return Err(Error::InvariantViolation("linear representation of the cap is not strongly regular".into()));
            }
            session.emit_into(dir, "coxeter.cap", &write_cap(&cap))?;
            session.emit_into(dir, "coxeter_pq.geo", &write_geometry(&rep.geometry))?;
            session.emit_into(dir, "coxeter_pq.graph", &write_graph(&rep.graph))?
        }
        (name, []) if name.ends_with(".cap") => {
            let text = session.read(Path::new(name))?;
            let rep = linear_representation(&parse_cap(&text)?);
            let st = stem(Path::new(name));
            session.emit_into(dir, &format!("{st}_pq.geo"), &write_geometry(&rep.geometry))?;
            session.emit_into(dir, &format!("{st}_pq.graph"), &write_graph(&rep.graph))?
        }
        (name, []) => {
            let id: NamedGraphId = name.parse()?;
            let p = session.emit_into(dir, &format!("{id}.graph"), &write_graph(&build_named(id)))?;
            if id == NamedGraphId::Petersen {
                session.emit_into(dir, "petersen.group", &write_group(&petersen_automorphisms()))?;
            }
            p
        }
        _ => return Err(Error::Precondition(format!("unknown build target '{target}' with {params:?}"))),
    };
    session.finish(&primary)?;
    Ok(Outcome::Done)
}

fn derive(session: &mut Session, what: &DeriveCommand) -> Result<Outcome> {
    match what {
        DeriveCommand::MinusPerp { geometry, point, set, out_dir } => {
            let geo = session.geometry(geometry)?;
            let mp = minus_perp(&geo, *point)?;
            let name = format!("{}_minus_perp_{point}", stem(geometry));
            let p = write_pair(session, out_dir, &name, &mp.geometry)?;
            session.emit_into(out_dir, &format!("{name}.map"), &vertex_map(&mp))?;
            if let Some(path) = set {
                let trace = mp.restrict(&session.first_set(path, geo.point_count())?);
                let cert = intrigue::verify(&collinearity_graph(&mp.geometry), &trace)?;
                let file = format!("{name}_{}.set", stem(path));
                session.emit_into(out_dir, &file, &write_sets(&[SetRecord::new(&trace, cert.as_ref())]))?;
            }
            session.finish(&p)?;
        }
        DeriveCommand::Hemisystem { geometry, out_dir } => {
            let geo = session.geometry(geometry)?;
            let h = find_hemisystem(&geo)?;
            let name = format!("{}_hemisystem", stem(geometry));
            let p = session.emit_into(out_dir, &format!("{name}.set"), &write_sets(&[SetRecord::new(&h, None)]))?;
            let sub = restrict_to_set(&geo, &h)?;
            write_pair(session, out_dir, &format!("{name}_pq"), &sub.geometry)?;
            session.finish(&p)?;
        }
        DeriveCommand::Restrict { geometry, set, out_dir } => {
            let geo = session.geometry(geometry)?;
            let set = session.first_set(set, geo.point_count())?;
            let sub = restrict_to_set(&geo, &set)?;
            let name = format!("{}_restricted", stem(geometry));
            let p = write_pair(session, out_dir, &name, &sub.geometry)?;
            session.emit_into(out_dir, &format!("{name}.map"), &vertex_map(&sub))?;
            session.finish(&p)?;
        }
        DeriveCommand::Complement { graph, set, out } => {
            let g = session.graph(graph)?;
            let v = Verifier::new(&g)?;
            let a = session.first_set(set, g.n())?;
            let d = intrigue::complement(&v, &a)?;
            session.emit(out.as_deref(), &write_sets(&[SetRecord::new(&d.set, Some(&d.certificate))]))?;
        }
        DeriveCommand::Union { graph, a, b, out } | DeriveCommand::Difference { graph, a, b, out } => {
            let g = session.graph(graph)?;
            let v = Verifier::new(&g)?;
            let a = session.first_set(a, g.n())?;
            let b = session.first_set(b, g.n())?;
            let d = if matches!(what, DeriveCommand::Union { .. }) {
                intrigue::union(&v, &a, &b)?
            } else {
                intrigue::difference(&v, &a, &b)?
            };
            session.emit(out.as_deref(), &write_sets(&[SetRecord::new(&d.set, Some(&d.certificate))]))?;
        }
    }
    Ok(Outcome::Done)
}

/// Ambient index of each derived point, one per line.
fn vertex_map(sub: &SubGeometry) -> String {
    sub.vertex_map.iter().map(|p| format!("{p}\n")).collect()
}

fn infinity_report(geo: &IncidenceGeometry, sub: &SubGeometry, perp_point: Option<usize>, set: &VertexSet) -> Result<String> {
    let v = check_atinfinity(geo, sub, set)?;
    let mut out = format!(
        "ambient={}:{},{}\na1={}\na2={}\nmeet={}\noutside={}\n",
        v.ambient.sign.short(),
        v.ambient.h1,
        v.ambient.h2,
        v.profile.a1,
        v.profile.a2,
        v.profile.meet,
        v.profile.outside
    );
    out += &match v.restricted {
        Some(c) => format!("restricted={}:{},{}\n", c.sign.short(), c.h1, c.h2),
        None if v.degenerate => "restricted=degenerate\n".into(),
        None => "restricted=none\n".into(),
    };
    if let Some(p) = perp_point {
        let s = geo.s() as i64;
        let kind = match classify_point_set(geo, set)? {
            PointSetTag::ITight(i) => Some(SetKind::ITight(i as i64)),
            tag => tag.m(geo.s()).map(|m| SetKind::MOvoid(m as i64)),
        };
        if let Some(kind) = kind {
            match predict_infinity_params(kind, s, Scenario::MinusPerp { p_in_set: set.contains(p) }) {
                Ok(pr) => {
                    let show = |x: Option<i64>| x.map_or("-".into(), |x| x.to_string());
                    out += &format!(
                        "predicted_a1={}\npredicted_a2={}\npredicted_meet={}\n",
                        show(pr.a1),
                        show(pr.a2),
                        show(pr.count)
                    );
                }
                Err(e) => out += &format!("predicted=none ({e})\n"),
            }
        }
    }
    Ok(out)
}

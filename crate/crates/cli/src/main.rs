//! `semiglue`: command-line front end.
//!
//! Exit codes: 0 success, 1 verdict conflict, 2 input error, 3 resource bound
//! (deadline, scan budget, uncertified box) exceeded.

mod input;
mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use semiglue::monomial::NatVector;
use semiglue::population::{numerical_population, Bounds};
use semiglue::resolution::{
    betti_degrees_within, certifying_gap_box, pf_via_betti, resolution_summary, sifr_check, BettiBound, BettiTable,
};
use semiglue::semigroups::{join, AffineSemigroup, GluingSpec, NumericalSemigroup, TermOrderNd};
use semiglue::theorems::{self, ReportStatus, Statement, TheoremReport};
use semiglue::toric::{gluing_binomial, minimal_generators, toric_ideal, toric_ideal_numerical, BinomialIdeal};
use semiglue::verdicts::{
    acm_projective_closure, cm_tangent_cone, gorenstein_numerical, gorenstein_projective_closure, Verdict, VerdictOptions,
};
use semiglue::Deadline;

use input::{parse_csv, parse_input, parse_vectors, InputError, JobInput, Params, Semigroup, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "semiglue", version, about = "Gluings, extensions and joins of numerical and affine semigroups")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Wall-clock limit for the whole computation.
    #[arg(long, global = true, env = "SEMIGLUE_DEADLINE_SECS")]
    deadline_secs: Option<f64>,
    /// Worker threads for the parallel scans.
    #[arg(long, global = true, env = "SEMIGLUE_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Default)]
struct Source {
    /// Numerical semigroup generators, e.g. `3,5,7`.
    #[arg(long, conflicts_with_all = ["affine", "input"])]
    numerical: Option<String>,
    /// Affine generators, one vector per `;`, e.g. `3,0;5,0;0,1`.
    #[arg(long, conflicts_with = "input")]
    affine: Option<String>,
    /// JSON job file.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Clone, Copy, Default)]
struct Selectors {
    /// Arithmetic Cohen–Macaulayness of the projective closure.
    #[arg(long)]
    projective: bool,
    /// Cohen–Macaulayness of the tangent cone.
    #[arg(long)]
    tangent_cone: bool,
    /// Gorenstein property of the semigroup ring and of the projective closure.
    #[arg(long)]
    gorenstein: bool,
}

impl Selectors {
    /// No selector means all of them.
    fn resolved(self) -> Self {
        if self.projective || self.tangent_cone || self.gorenstein {
            self
        } else {
            Selectors { projective: true, tangent_cone: true, gorenstein: true }
        }
    }
}

#[derive(Args, Clone)]
struct GlueArgs {
    #[arg(long)]
    left: Option<String>,
    #[arg(long)]
    right: Option<String>,
    /// Coefficients expressing q in the left factor.
    #[arg(long)]
    b: Option<String>,
    /// Coefficients expressing p in the right factor.
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    selectors: Selectors,
}

#[derive(Subcommand)]
enum Command {
    /// Toric ideal, bases and verdicts for one semigroup.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        selectors: Selectors,
    },
    /// Glue two numerical semigroups.
    Glue(GlueArgs),
    /// Glue two numerical semigroups; the gluing must be a star gluing.
    StarGlue {
        #[command(flatten)]
        glue: GlueArgs,
        /// Printed generator list to compare against.
        #[arg(long)]
        printed: Option<String>,
    },
    /// Extend an affine semigroup by `l` and `a = Σ u_i a_i`.
    Extend {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        u: Option<String>,
        /// Box for the direct gap scans, e.g. `40,40`.
        #[arg(long)]
        gap_box: Option<String>,
    },
    /// Join two affine semigroups (numerical factors go on the coordinate axes).
    Join {
        #[command(flatten)]
        source: Source,
        /// Right factor, in the same syntax as the left one.
        #[arg(long)]
        right: Option<String>,
    },
    /// Multigraded Betti degrees.
    Betti {
        #[command(flatten)]
        source: Source,
        /// Scan box for the Betti degrees.
        #[arg(long)]
        degree_bound: Option<String>,
    },
    /// Pseudo-Frobenius elements.
    Pf {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        gap_box: Option<String>,
    },
    /// Strongly indispensable minimal free resolution test.
    Sifr {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        degree_bound: Option<String>,
    },
    /// Hilbert function of the associated graded ring.
    Hilbert {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        upto: Option<u64>,
    },
    /// Check one statement, on a job file or on its worked instances.
    Verify {
        /// Statement id, e.g. `closure-acm`.
        id: String,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run every worked instance and the regression verdicts.
    Fixtures {
        /// Extra random semigroups whose verdict cross-checks are included.
        #[arg(long, default_value_t = 8)]
        population: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Glue(_) => "glue",
            Command::StarGlue { .. } => "star-glue",
            Command::Extend { .. } => "extend",
            Command::Join { .. } => "join",
            Command::Betti { .. } => "betti",
            Command::Pf { .. } => "pf",
            Command::Sifr { .. } => "sifr",
            Command::Hilbert { .. } => "hilbert",
            Command::Verify { .. } => "verify",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input {0}")]
    Input(#[from] InputError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] semiglue::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Core(e) if e.is_resource_failure() => 3,
            CliError::Core(semiglue::Error::Invariant(_)) => 1,
            CliError::Core(_) => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            1 => "invariant",
            3 => "resource",
            _ => "input",
        }
    }

    fn pointer(&self) -> Option<&str> {
        match self {
            CliError::Input(e) => Some(&e.pointer),
            _ => None,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// What a command produced.
struct Outcome {
    input: Option<Value>,
    result: Value,
    text: String,
    conflict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let name = cli.command.name();
    let outcome = deadline(cli.deadline_secs).and_then(|d| run(&cli.command, d));
    match outcome {
        Ok(o) => {
            match cli.format {
                Format::Json => {
                    let status = if o.conflict { "conflict" } else { "ok" };
                    let env = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": name,
                        "input": o.input,
                        "result": o.result,
                        "status": status,
                    });
                    println!("{}", serde_json::to_string_pretty(&env).expect("JSON values serialize"));
                }
                Format::Text => print!("{}", o.text),
            }
            ExitCode::from(if o.conflict { 1 } else { 0 })
        }
        Err(e) => {
            match cli.format {
                Format::Json => {
                    let env = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": name,
                        "status": "error",
                        "error": {"kind": e.kind(), "message": e.to_string(), "pointer": e.pointer()},
                    });
                    println!("{}", serde_json::to_string_pretty(&env).expect("JSON values serialize"));
                }
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn deadline(secs: Option<f64>) -> Result<Deadline> {
    match secs {
        None => Ok(Deadline::NONE),
        Some(s) if s.is_finite() && s >= 0.0 => Ok(Deadline::after(Duration::from_secs_f64(s))),
        Some(s) => Err(usage(format!("invalid deadline {s}"))),
    }
}

fn run(cmd: &Command, d: Deadline) -> Result<Outcome> {
    let opts = VerdictOptions { deadline: d, ..VerdictOptions::default() };
    match cmd {
        Command::Analyze { source, selectors } => analyze(&source_job(source)?, *selectors, &opts),
        Command::Glue(g) => glue(&glue_job(g)?, g.selectors, false, &opts),
        Command::StarGlue { glue: g, printed } => {
            let mut job = glue_job(g)?;
            if let Some(p) = printed {
                job.params.printed = Some(csv("--printed", p)?);
            }
            self::glue(&job, g.selectors, true, &opts)
        }
        Command::Extend { source, l, u, gap_box } => {
            let mut job = source_job(source)?;
            set(&mut job.params.l, *l);
            if let Some(u) = u {
                job.params.u = Some(csv("--u", u)?);
            }
            if let Some(b) = gap_box {
                job.params.gap_box = Some(csv("--gap-box", b)?);
            }
            extend(&job, d)
        }
        Command::Join { source, right } => {
            let mut job = source_job(source)?;
            if let Some(r) = right {
                job.params.right = Some(match job.semigroup {
                    Semigroup::Numerical(_) => Semigroup::Numerical(csv("--right", r)?),
                    Semigroup::Affine(_) => Semigroup::Affine(parse_vectors(r).map_err(|e| usage(format!("--right: {e}")))?),
                });
            }
            join_cmd(&job, d)
        }
        Command::Betti { source, degree_bound } | Command::Sifr { source, degree_bound } => {
            let mut job = source_job(source)?;
            if let Some(b) = degree_bound {
                job.params.degree_bound = Some(csv("--degree-bound", b)?);
            }
            if matches!(cmd, Command::Betti { .. }) {
                betti(&job, d)
            } else {
                sifr(&job, d)
            }
        }
        Command::Pf { source, gap_box } => {
            let mut job = source_job(source)?;
            if let Some(b) = gap_box {
                job.params.gap_box = Some(csv("--gap-box", b)?);
            }
            pf(&job, d)
        }
        Command::Hilbert { source, upto } => {
            let mut job = source_job(source)?;
            set(&mut job.params.upto, *upto);
            hilbert(&job)
        }
        Command::Verify { id, input } => verify(id, input.as_deref(), &opts),
        Command::Fixtures { population, seed } => fixtures_cmd(*population, *seed, &opts),
    }
}

fn set<T>(slot: &mut Option<T>, v: Option<T>) {
    if v.is_some() {
        *slot = v;
    }
}

fn csv(flag: &str, s: &str) -> Result<Vec<u64>> {
    parse_csv(s).map_err(|e| usage(format!("{flag}: {e}")))
}

fn load(path: &Path) -> Result<JobInput> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    Ok(parse_input(&text)?)
}

fn source_job(src: &Source) -> Result<JobInput> {
    if let Some(p) = &src.input {
        return load(p);
    }
    let semigroup = match (&src.numerical, &src.affine) {
        (Some(n), _) => Semigroup::Numerical(csv("--numerical", n)?),
        (None, Some(a)) => Semigroup::Affine(parse_vectors(a).map_err(|e| usage(format!("--affine: {e}")))?),
        (None, None) => return Err(usage("one of --numerical, --affine or --input is required")),
    };
    Ok(JobInput { semigroup, params: Params::default() })
}

fn glue_job(g: &GlueArgs) -> Result<JobInput> {
    let mut job = match (&g.input, &g.left) {
        (Some(p), _) => load(p)?,
        (None, Some(l)) => JobInput { semigroup: Semigroup::Numerical(csv("--left", l)?), params: Params::default() },
        (None, None) => return Err(usage("one of --left or --input is required")),
    };
    if let Some(r) = &g.right {
        job.params.right = Some(Semigroup::Numerical(csv("--right", r)?));
    }
    if let Some(b) = &g.b {
        job.params.b = Some(csv("--b", b)?);
    }
    if let Some(a) = &g.a {
        job.params.a = Some(csv("--a", a)?);
    }
    Ok(job)
}

fn numerical_of(job: &JobInput, what: &str) -> Result<NumericalSemigroup> {
    match &job.semigroup {
        Semigroup::Numerical(g) => Ok(input::numerical(g)?),
        Semigroup::Affine(_) => Err(usage(format!("{what} needs a numerical semigroup"))),
    }
}

fn angle(gens: &[u64]) -> String {
    format!("<{}>", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(","))
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

/// The selected verdicts on a numerical semigroup, keyed by property.
fn verdicts(s: &NumericalSemigroup, sel: Selectors, opts: &VerdictOptions) -> Result<Vec<(&'static str, Verdict)>> {
    let sel = sel.resolved();
    let mut out = Vec::new();
    if sel.projective {
        out.push(("projective_closure_acm", acm_projective_closure(s, opts)?));
    }
    if sel.tangent_cone {
        out.push(("tangent_cone_cm", cm_tangent_cone(s, opts)?));
    }
    if sel.gorenstein {
        out.push(("gorenstein", gorenstein_numerical(s)));
        out.push(("projective_closure_gorenstein", gorenstein_projective_closure(s, opts)?));
    }
    Ok(out)
}

fn verdicts_json(vs: &[(&'static str, Verdict)]) -> Value {
    Value::Object(vs.iter().map(|(k, v)| (k.to_string(), report::verdict(v))).collect())
}

fn ideal_json(ideal: &BinomialIdeal, d: Deadline) -> Result<Value> {
    let mingens: Vec<String> = minimal_generators(ideal, d)?.iter().map(|b| ideal.show(b)).collect();
    let gb: Vec<String> = ideal.canonical_basis()?.elements().iter().map(|b| ideal.show(b)).collect();
    Ok(json!({"variables": ideal.var_names(), "minimal_generators": mingens, "groebner_basis": gb}))
}

fn ideal_text(out: &mut String, ideal: &Value) {
    let show = |v: &Value| v.as_array().map(|a| a.iter().filter_map(|x| x.as_str()).collect::<Vec<_>>().join(", ")).unwrap_or_default();
    let _ = writeln!(out, "toric ideal: ({})", show(&ideal["minimal_generators"]));
    let _ = writeln!(out, "reduced degrevlex basis: {}", show(&ideal["groebner_basis"]));
}

fn analyze(job: &JobInput, sel: Selectors, opts: &VerdictOptions) -> Result<Outcome> {
    let d = opts.deadline;
    let mut text = String::new();
    match &job.semigroup {
        Semigroup::Numerical(g) => {
            let s = input::numerical(g)?;
            let ideal = ideal_json(&toric_ideal_numerical(&s, d)?, d)?;
            let vs = verdicts(&s, sel, opts)?;
            let result = json!({
                "kind": "numerical",
                "generators": report::nums(s.generators()),
                "multiplicity": report::num(s.multiplicity()),
                "frobenius": s.frobenius().map(report::num),
                "genus": report::num(s.genus()),
                "pseudo_frobenius": report::nums(&s.pseudo_frobenius()),
                "symmetric": s.is_symmetric(),
                "toric_ideal": ideal,
                "verdicts": verdicts_json(&vs),
            });
            let _ = writeln!(text, "semigroup {}", angle(s.generators()));
            match s.frobenius() {
                Some(f) => {
                    let _ = writeln!(text, "frobenius {f}, genus {}, PF {{{}}}", s.genus(), list(&s.pseudo_frobenius()));
                }
                None => {
                    let _ = writeln!(text, "the semigroup is N");
                }
            }
            ideal_text(&mut text, &result["toric_ideal"]);
            for (_, v) in &vs {
                let _ = writeln!(text, "{v}");
            }
            let conflict = vs.iter().any(|(_, v)| v.is_conflict());
            Ok(Outcome { input: Some(job.to_json()), result, text, conflict })
        }
        Semigroup::Affine(rows) => {
            if sel.projective || sel.tangent_cone || sel.gorenstein {
                return Err(usage("closure, tangent-cone and Gorenstein selectors need a numerical semigroup"));
            }
            let s = input::affine(rows)?;
            let ideal = ideal_json(&toric_ideal(&s, d)?, d)?;
            let table = betti_degrees_within(&s, &BettiBound::default_for(&s)?, d)?;
            let sum = resolution_summary(&s, &table);
            let mpd = sum.pd + 1 == s.num_generators();
            let pf = if mpd { Some(pf_via_betti(&s, &table)?) } else { None };
            let sifr = sifr_check(&s, &table);
            let result = json!({
                "kind": "affine",
                "generators": report::vectors(s.generators()),
                "krull_dimension": report::num(s.krull_dimension()),
                "toric_ideal": ideal,
                "betti": report::betti(&table),
                "projective_dimension": report::num(sum.pd),
                "depth": report::num(sum.depth),
                "cohen_macaulay": sum.cm,
                "gorenstein": sum.gorenstein,
                "mpd": mpd,
                "pseudo_frobenius": pf.as_deref().map(report::vectors),
                "sifr": sifr.holds,
            });
            let _ = writeln!(text, "semigroup {s}");
            ideal_text(&mut text, &result["toric_ideal"]);
            let _ = writeln!(text, "Betti totals ({})", list(&table.totals()));
            let _ = writeln!(text, "pd {}, depth {}, dim {}, CM {}, Gorenstein {}", sum.pd, sum.depth, sum.dim, sum.cm, sum.gorenstein);
            match &pf {
                Some(pf) => {
                    let _ = writeln!(text, "MPD, PF {{{}}}", list(pf));
                }
                None => {
                    let _ = writeln!(text, "not MPD");
                }
            }
            let _ = writeln!(text, "strongly indispensable resolution: {}", sifr.holds);
            Ok(Outcome { input: Some(job.to_json()), result, text, conflict: false })
        }
    }
}

fn describe_spec(spec: &GluingSpec) -> String {
    format!("{} # {} with b=({}), a=({})", angle(spec.left.generators()), angle(spec.right.generators()), list(&spec.b), list(&spec.a))
}

fn glue(job: &JobInput, sel: Selectors, require_star: bool, opts: &VerdictOptions) -> Result<Outcome> {
    let spec = job.gluing()?;
    if require_star && !spec.is_star() {
        return Err(usage(format!(
            "not a star gluing: sum of a = {} is not below sum of b = {} in {}",
            spec.sum_a(),
            spec.sum_b(),
            describe_spec(&spec)
        )));
    }
    let g = spec.glue()?;
    let vs = verdicts(&g.semigroup, sel, opts)?;
    let order = g.generators_in_gluing_order();
    let star_report = match (&job.params.printed, require_star) {
        (Some(p), true) => Some(theorems::verify_star_generators(&spec, p)?),
        _ => None,
    };
    let mut result = json!({
        "left": report::nums(spec.left.generators()),
        "right": report::nums(spec.right.generators()),
        "b": report::nums(&spec.b),
        "a": report::nums(&spec.a),
        "p": report::num(g.p),
        "q": report::num(g.q),
        "generators": report::nums(&order),
        "nice_class": spec.nice_class().to_string(),
        "generalized_nice": spec.is_generalized_nice(),
        "star": spec.is_star(),
        "gluing_binomial": gluing_binomial(&spec)?.to_string(),
        "frobenius": g.semigroup.frobenius().map(report::num),
        "verdicts": verdicts_json(&vs),
    });
    let mut text = format!("{}\np={}, q={}, glued {}\n", describe_spec(&spec), g.p, g.q, angle(&order));
    let _ = writeln!(text, "{} gluing, star: {}", spec.nice_class(), spec.is_star());
    for (_, v) in &vs {
        let _ = writeln!(text, "{v}");
    }
    let mut conflict = vs.iter().any(|(_, v)| v.is_conflict());
    if let Some(r) = &star_report {
        result["printed_generators"] = report::theorem(r);
        let _ = write!(text, "{r}");
        conflict |= r.status() == ReportStatus::Conflict;
    }
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict })
}

fn extend(job: &JobInput, d: Deadline) -> Result<Outcome> {
    let spec = job.extension()?;
    let ext = spec.extend()?;
    let gap_box = job.params.gap_box.clone().map(NatVector::new);
    let r = theorems::verify_extension(&spec, gap_box, &TermOrderNd::graded_lex(spec.base.dim()), d)?;
    let result = json!({
        "base": report::vectors(spec.base.generators()),
        "l": report::num(spec.l),
        "u": report::nums(&spec.u),
        "a": report::vector(&ext.a),
        "generators": report::vectors(ext.semigroup.generators()),
        "report": report::theorem(&r),
    });
    let text = format!("extension {} with l={}, a={}\n{r}", ext.semigroup, spec.l, ext.a);
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict: r.status() == ReportStatus::Conflict })
}

fn join_cmd(job: &JobInput, d: Deadline) -> Result<Outcome> {
    let (l, r) = job.join_factors()?;
    let j = join(&l, &r)?;
    let rep = theorems::verify_join_sifr(&l, &r, d)?;
    let result = json!({
        "left": report::vectors(l.generators()),
        "right": report::vectors(r.generators()),
        "generators": report::vectors(j.semigroup.generators()),
        "dimension_adds": j.dimension_adds,
        "report": report::theorem(&rep),
    });
    let text = format!("join {}\ndimension adds: {}\n{rep}", j.semigroup, j.dimension_adds);
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict: rep.status() == ReportStatus::Conflict })
}

fn table_for(job: &JobInput, d: Deadline) -> Result<(AffineSemigroup, BettiTable)> {
    let s = job.semigroup.to_affine()?;
    let bound = match &job.params.degree_bound {
        Some(b) => BettiBound::boxed(NatVector::new(b.clone())),
        None => BettiBound::default_for(&s)?,
    };
    let t = betti_degrees_within(&s, &bound, d)?;
    Ok((s, t))
}

fn betti(job: &JobInput, d: Deadline) -> Result<Outcome> {
    let (s, t) = table_for(job, d)?;
    let sum = resolution_summary(&s, &t);
    let result = json!({
        "betti": report::betti(&t),
        "depth": report::num(sum.depth),
        "krull_dimension": report::num(sum.dim),
        "cohen_macaulay": sum.cm,
        "gorenstein": sum.gorenstein,
    });
    let text = format!("Betti degrees of {s}\n{t}\ntotals ({})\n", list(&t.totals()));
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict: false })
}

fn sifr(job: &JobInput, d: Deadline) -> Result<Outcome> {
    let (s, t) = table_for(job, d)?;
    let r = sifr_check(&s, &t);
    let violation = r.violation.as_ref().map(|(i, b, c)| json!({"homological_degree": report::num(i), "degree": report::vector(b), "other": report::vector(c)}));
    let result = json!({"holds": r.holds, "violation": violation});
    let mut text = format!("strongly indispensable resolution for {s}: {}\n", r.holds);
    match &r.violation {
        Some((i, b, c)) if b == c => {
            let _ = writeln!(text, "  degree {b} occurs more than once in homological degree {i}");
        }
        Some((i, b, c)) => {
            let _ = writeln!(text, "  {b} - {c} lies in the semigroup (homological degree {i})");
        }
        None => {}
    }
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict: false })
}

fn pf(job: &JobInput, d: Deadline) -> Result<Outcome> {
    if let Semigroup::Numerical(g) = &job.semigroup {
        let s = input::numerical(g)?;
        let pf = s.pseudo_frobenius();
        let result = json!({"pseudo_frobenius": report::nums(&pf), "frobenius": s.frobenius().map(report::num), "type": report::num(pf.len())});
        let text = format!("PF({}) = {{{}}}\n", angle(s.generators()), list(&pf));
        return Ok(Outcome { input: Some(job.to_json()), result, text, conflict: false });
    }
    let (s, t) = table_for(job, d)?;
    let mpd = t.projective_dimension() + 1 == s.num_generators();
    let via_betti = if mpd { Some(pf_via_betti(&s, &t)?) } else { None };
    let gap_box = match (&job.params.gap_box, mpd) {
        (Some(b), _) => NatVector::new(b.clone()),
        (None, true) => certifying_gap_box(&s, &t)?,
        (None, false) => return Err(usage("the semigroup is not MPD; give --gap-box for the direct scan")),
    };
    let (direct, certified) = s.pseudo_frobenius_scan(&gap_box)?;
    let conflict = certified && via_betti.as_ref().is_some_and(|v| *v != direct);
    let result = json!({
        "mpd": mpd,
        "via_betti": via_betti.as_deref().map(report::vectors),
        "direct": report::vectors(&direct),
        "gap_box": report::vector(&gap_box),
        "certified": certified,
    });
    let mut text = format!("PF of {s}\n");
    if let Some(v) = &via_betti {
        let _ = writeln!(text, "  via Betti degrees: {{{}}}", list(v));
    }
    let cert = if certified { "certified" } else { "uncertified: gaps on the outer shell" };
    let _ = writeln!(text, "  direct scan in {gap_box}: {{{}}} ({cert})", list(&direct));
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict })
}

fn hilbert(job: &JobInput) -> Result<Outcome> {
    let s = numerical_of(job, "hilbert")?;
    let r = s.reduction_number();
    let upto = job.params.upto.unwrap_or(r.max(1) + 1) as usize;
    let h = s.hilbert_gr(upto);
    let nondecreasing = s.hilbert_nondecreasing(r as usize)?;
    let result = json!({"hilbert_function": report::nums(&h), "reduction_number": report::num(r), "nondecreasing": nondecreasing});
    let text = format!("H({}) = ({}), reduction number {r}, nondecreasing: {nondecreasing}\n", angle(s.generators()), list(&h));
    Ok(Outcome { input: Some(job.to_json()), result, text, conflict: false })
}

fn report_for(st: Statement, job: &JobInput, opts: &VerdictOptions) -> Result<TheoremReport> {
    let d = opts.deadline;
    Ok(match st {
        Statement::GluingBasis => theorems::verify_gluing_basis(&job.gluing()?, d)?,
        Statement::DisplayedGluingBasis => theorems::verify_displayed_gluing_basis(&job.gluing()?, d)?,
        Statement::ClosureAcm => theorems::verify_closure_acm(&job.gluing()?, opts)?,
        Statement::TangentCone => theorems::verify_tangent_glue(&job.gluing()?, opts)?,
        Statement::ClosureGorenstein => theorems::verify_closure_gorenstein(&job.gluing()?, opts)?,
        Statement::StarGenerators => {
            let printed = job.params.printed.as_ref().ok_or_else(|| InputError { pointer: "/params/printed".into(), message: "missing".into() })?;
            theorems::verify_star_generators(&job.gluing()?, printed)?
        }
        Statement::Extension => {
            let spec = job.extension()?;
            let order = TermOrderNd::graded_lex(spec.base.dim());
            theorems::verify_extension(&spec, job.params.gap_box.clone().map(NatVector::new), &order, d)?
        }
        Statement::JoinSifr => {
            let (l, r) = job.join_factors()?;
            theorems::verify_join_sifr(&l, &r, d)?
        }
    })
}

fn reports_outcome(input: Option<Value>, reports: &[TheoremReport]) -> Outcome {
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    let conflict = reports.iter().any(|r| r.status() == ReportStatus::Conflict);
    let result = json!({"reports": reports.iter().map(report::theorem).collect::<Vec<_>>()});
    Outcome { input, result, text, conflict }
}

fn verify(id: &str, path: Option<&Path>, opts: &VerdictOptions) -> Result<Outcome> {
    let st = Statement::from_id(id).ok_or_else(|| {
        let ids: Vec<&str> = Statement::ALL.iter().map(|s| s.id()).collect();
        usage(format!("unknown statement {id:?}; expected one of {}", ids.join(", ")))
    })?;
    match path {
        Some(p) => {
            let job = load(p)?;
            let r = report_for(st, &job, opts)?;
            Ok(reports_outcome(Some(job.to_json()), &[r]))
        }
        None => {
            let reports: Vec<TheoremReport> = theorems::worked_instances(opts)?.into_iter().filter(|r| r.statement == st).collect();
            Ok(reports_outcome(None, &reports))
        }
    }
}

/// Verdicts with known answers: projective closures and tangent cones.
fn regressions() -> Vec<(&'static str, Vec<u64>, bool)> {
    vec![
        ("projective_closure_acm", vec![57, 95, 56, 96], false),
        ("projective_closure_acm", vec![250, 350, 550, 425, 476], false),
        ("projective_closure_acm", vec![87, 145, 203, 126, 154], false),
        ("projective_closure_acm", vec![87, 145, 203, 189, 231], true),
        ("tangent_cone_cm", vec![105, 252, 119, 136], false),
        ("tangent_cone_cm", vec![3, 5, 7], true),
    ]
}

fn fixtures_cmd(population: usize, seed: u64, opts: &VerdictOptions) -> Result<Outcome> {
    let reports = theorems::worked_instances(opts)?;
    let mut conflict = reports.iter().any(|r| r.status() == ReportStatus::Conflict);
    let mut text = String::from("worked instances\n");
    for r in &reports {
        let _ = writeln!(text, "  {:<24} {:<22} {}", r.status().to_string(), r.statement.id(), r.instance);
    }
    let _ = writeln!(text, "regressions");
    let mut regs = Vec::new();
    for (property, gens, expected) in regressions() {
        let s = NumericalSemigroup::new(gens)?;
        let v = match property {
            "projective_closure_acm" => acm_projective_closure(&s, opts)?,
            _ => cm_tangent_cone(&s, opts)?,
        };
        let ok = v.holds == expected && !v.is_conflict();
        conflict |= !ok;
        let mark = if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "  {mark:<24} {property:<22} {} -> {}", angle(s.generators()), v.holds);
        regs.push(json!({
            "property": property,
            "generators": report::nums(s.generators()),
            "expected": expected,
            "matches": ok,
            "verdict": report::verdict(&v),
        }));
    }
    let mut pop = Vec::new();
    if population > 0 {
        let _ = writeln!(text, "population (seed {seed})");
    }
    for s in numerical_population(seed, population, Bounds { max_generators: 4, max_generator: 20 }) {
        let vs = verdicts(&s, Selectors { projective: true, tangent_cone: true, gorenstein: false }, opts)?;
        let agree = vs.iter().all(|(_, v)| !v.is_conflict());
        conflict |= !agree;
        let mark = if agree { "CROSS-CHECKS AGREE" } else { "CROSS-CHECK CONFLICT" };
        let _ = writeln!(text, "  {mark:<24} {}: ACM {}, CM tangent cone {}", angle(s.generators()), vs[0].1.holds, vs[1].1.holds);
        pop.push(json!({"generators": report::nums(s.generators()), "verdicts": verdicts_json(&vs)}));
    }
    let result = json!({
        "reports": reports.iter().map(report::theorem).collect::<Vec<_>>(),
        "regressions": regs,
        "population": {"seed": report::num(seed), "semigroups": pop},
    });
    Ok(Outcome { input: None, result, text, conflict })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(semiglue::Error::DeadlineExceeded).exit_code(), 3);
        assert_eq!(CliError::Core(semiglue::Error::InvalidSemigroup("gcd".into())).exit_code(), 2);
        assert_eq!(CliError::Core(semiglue::Error::Invariant("x".into())).exit_code(), 1);
        assert_eq!(usage("x").exit_code(), 2);
    }

    #[test]
    fn selectors_default_to_all() {
        let s = Selectors::default().resolved();
        assert!(s.projective && s.tangent_cone && s.gorenstein);
        let only = Selectors { projective: true, ..Selectors::default() }.resolved();
        assert!(!only.tangent_cone);
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

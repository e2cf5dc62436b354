//! `collarg`: enumeration, property checks and cross-validation for
//! collective argumentation theories and disjunctive logic programs.
//!
//! Exit codes: 0 on success, 1 when a cross-check finds a counterexample,
//! 2 on unusable input (bad flags, unreadable files, syntax errors, caps).

mod input;
mod output;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use collarg::closure::{negative_closure, positive_closure};
use collarg::dung::{DungSemantics, DungView};
use collarg::gen::{rng, ProgramShape};
use collarg::oracle::{check_stable_models_with, stable_models_with_cap, StableModelReport};
use collarg::program::{compile_with_cap, LazyTheory, DEFAULT_ATOM_CAP};
use collarg::properties::{is_normal, Properties};
use collarg::semantics::{DEFAULT_ENUMERATION_CAP, ENUMERATION_WARN_SIZE};
use collarg::{
    AdmissibilityKind, ArgumentSet, AttackRelation, Limits, PStablePair, Program, Theory,
};
use serde_json::{json, Value};

use input::{load_program, load_theory, Format, InputError};
use output::{braces, count, OutputDocument};

#[derive(Parser)]
#[command(
    name = "collarg",
    version,
    about = "Collective argumentation theories and disjunctive programs"
)]
struct Cli {
    /// Print one JSON document instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Input format; by default `.caf` is a theory and `.dlp` a program.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest argument universe for exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_args: usize,

    /// Largest program accepted by compilation and the stable-model oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ATOM_CAP)]
    max_atoms: usize,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate stable sets.
    Stable { file: PathBuf },
    /// Enumerate p-stable pairs.
    Pstable { file: PathBuf },
    /// Enumerate admissible sets of one kind.
    Admissible {
        #[arg(long, value_parser = parse_kind)]
        kind: AdmissibilityKind,
        /// Keep only the maximal admissible sets.
        #[arg(long)]
        maximal: bool,
        file: PathBuf,
    },
    /// Print the positive or negative closure as a theory file.
    Closure {
        #[arg(long, value_parser = ["positive", "negative"])]
        kind: String,
        file: PathBuf,
    },
    /// Report the six structural property flags.
    Props { file: PathBuf },
    /// Classical extensions of a normal theory.
    Dung {
        #[arg(long, value_parser = parse_semantics)]
        semantics: DungSemantics,
        file: PathBuf,
    },
    /// Compile a program into the theory of its abducibles.
    Compile {
        program: PathBuf,
        /// Print the compiled theory in the theory file format.
        #[arg(long, conflicts_with = "lazy")]
        dump: bool,
        /// Skip materialization; enumerate stable sets with on-demand derivation.
        #[arg(long)]
        lazy: bool,
    },
    /// Reference semantics computed directly on a program.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Match stable models against stable sets (and, for normal programs,
    /// p-stable pairs against complete extensions).
    Crosscheck {
        #[arg(required_unless_present = "random")]
        program: Option<PathBuf>,
        /// Additionally check this many seeded random programs.
        #[arg(long)]
        random: Option<usize>,
    },
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Enumerate stable models.
    StableModels { program: PathBuf },
}

fn parse_kind(s: &str) -> Result<AdmissibilityKind, String> {
    s.parse()
}

fn parse_semantics(s: &str) -> Result<DungSemantics, String> {
    s.parse()
}

/// What a command produces before rendering.
struct Outcome {
    command: &'static str,
    results: Value,
    text: String,
    /// A semantic check failed.
    failed: bool,
}

impl Outcome {
    fn ok(command: &'static str, results: Value, text: String) -> Self {
        Outcome {
            command,
            results,
            text,
            failed: false,
        }
    }
}

struct Context {
    format: Option<Format>,
    limits: Limits,
    max_atoms: usize,
    seed: u64,
    diagnostics: Vec<String>,
}

impl Context {
    fn theory(&mut self, file: &Path) -> Result<Theory, InputError> {
        let t = load_theory(file, self.format, self.max_atoms)?;
        self.note_size(t.len());
        Ok(t)
    }

    fn program(&mut self, file: &Path) -> Result<Program, InputError> {
        let p = load_program(file, self.format)?;
        self.note_size(p.atom_count());
        Ok(p)
    }

    fn note_size(&mut self, n: usize) {
        if n > ENUMERATION_WARN_SIZE && n <= self.limits.max_args {
            self.diagnostics.push(format!(
                "enumerating over {n} elements; this may take a while"
            ));
        }
    }
}

fn set_names(t: &Theory, s: ArgumentSet) -> Vec<String> {
    t.names(s).into_iter().map(str::to_owned).collect()
}

fn sets_json(t: &Theory, sets: &[ArgumentSet]) -> Value {
    json!(sets.iter().map(|s| set_names(t, *s)).collect::<Vec<_>>())
}

fn sets_text(t: &Theory, sets: &[ArgumentSet], singular: &str, plural: &str) -> String {
    let mut out = count(sets.len(), singular, plural);
    for s in sets {
        out.push('\n');
        out.push_str(&t.show(*s));
    }
    out
}

fn pairs_json(t: &Theory, pairs: &[PStablePair]) -> Value {
    json!(pairs
        .iter()
        .map(|p| json!({"lower": set_names(t, p.lower), "upper": set_names(t, p.upper)}))
        .collect::<Vec<_>>())
}

fn program_sets_json(p: &Program, sets: impl IntoIterator<Item = collarg::AtomSet>) -> Value {
    json!(sets.into_iter().map(|s| p.names(s)).collect::<Vec<_>>())
}

fn run(cli: Cli, ctx: &mut Context) -> Result<Outcome, InputError> {
    Ok(match cli.command {
        Command::Stable { file } => {
            let t = ctx.theory(&file)?;
            let sets = ctx.limits.stable_sets(&t)?;
            let text = sets_text(&t, &sets, "stable set", "stable sets");
            Outcome::ok(
                "stable",
                json!({ "stable_sets": sets_json(&t, &sets) }),
                text,
            )
        }
        Command::Pstable { file } => {
            let t = ctx.theory(&file)?;
            let pairs = ctx.limits.p_stable_pairs(&t)?;
            let mut text = count(pairs.len(), "p-stable pair", "p-stable pairs");
            for p in &pairs {
                text.push_str(&format!("\n({}, {})", t.show(p.lower), t.show(p.upper)));
            }
            Outcome::ok(
                "pstable",
                json!({ "p_stable_pairs": pairs_json(&t, &pairs) }),
                text,
            )
        }
        Command::Admissible {
            kind,
            maximal,
            file,
        } => {
            let t = ctx.theory(&file)?;
            let sets = ctx.limits.admissible_sets(&t, kind, maximal)?;
            let label = if maximal { "maximal " } else { "" };
            let text = sets_text(
                &t,
                &sets,
                &format!("{label}{kind} admissible set"),
                &format!("{label}{kind} admissible sets"),
            );
            let results = json!({
                "kind": kind.to_string(),
                "maximal": maximal,
                "admissible_sets": sets_json(&t, &sets),
            });
            Outcome::ok("admissible", results, text)
        }
        Command::Closure { kind, file } => {
            let t = ctx.theory(&file)?;
            let closed = if kind == "positive" {
                positive_closure(&t)
            } else {
                negative_closure(&t)
            };
            let text = closed.to_string();
            let results =
                json!({ "kind": kind, "generators": closed.base().len(), "theory": text });
            Outcome::ok("closure", results, text.trim_end().to_owned())
        }
        Command::Props { file } => {
            let t = ctx.theory(&file)?;
            let flags = Properties::of(&t).flags();
            let results: serde_json::Map<String, Value> = flags
                .iter()
                .map(|(name, value)| (name.to_string(), json!(value)))
                .collect();
            let text = flags
                .iter()
                .map(|(name, value)| format!("{name}: {}", if *value { "yes" } else { "no" }))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::ok("props", Value::Object(results), text)
        }
        Command::Dung { semantics, file } => {
            let t = ctx.theory(&file)?;
            let view = DungView::new(&t).map_err(|e| InputError::new(&file, e))?;
            let extensions = view.extensions_with(semantics, &ctx.limits)?;
            let text = sets_text(
                &t,
                &extensions,
                &format!("{semantics} extension"),
                &format!("{semantics} extensions"),
            );
            let results = json!({ "semantics": semantics.to_string(), "extensions": sets_json(&t, &extensions) });
            Outcome::ok("dung", results, text)
        }
        Command::Compile {
            program,
            dump,
            lazy,
        } => {
            let p = ctx.program(&program)?;
            if lazy {
                let relation = LazyTheory::new(&p);
                let sets = ctx.limits.stable_sets(&relation)?;
                let t = Theory::new(
                    p.atoms().iter().map(|a| collarg::program::argument_name(a)),
                    [],
                )?;
                let text = sets_text(&t, &sets, "stable set", "stable sets");
                let results = json!({
                    "arguments": t.names(t.universe()),
                    "stable_sets": sets_json(&t, &sets),
                });
                Outcome::ok("compile", results, text)
            } else {
                let t = compile_with_cap(&p, ctx.max_atoms)?;
                let dumped = t.to_string();
                let text = if dump {
                    dumped.trim_end().to_owned()
                } else {
                    format!(
                        "{} over {}",
                        count(t.base().len(), "generator", "generators"),
                        count(t.len(), "argument", "arguments")
                    )
                };
                let results = json!({
                    "arguments": t.names(t.universe()),
                    "generators": t.base().len(),
                    "theory": dumped,
                });
                Outcome::ok("compile", results, text)
            }
        }
        Command::Oracle {
            query: OracleQuery::StableModels { program },
        } => {
            let p = ctx.program(&program)?;
            let models = stable_models_with_cap(&p, ctx.max_atoms)?;
            let mut text = count(models.len(), "stable model", "stable models");
            for m in &models {
                text.push('\n');
                text.push_str(&braces(&p.names(m.true_atoms)));
            }
            let results = json!({ "stable_models": program_sets_json(&p, models.iter().map(|m| m.true_atoms)) });
            Outcome::ok("oracle stable-models", results, text)
        }
        Command::Crosscheck { program, random } => crosscheck(ctx, program, random)?,
    })
}

/// Both reports for one program, with a pass flag.
fn check_program(ctx: &Context, p: &Program) -> Result<(bool, Value), InputError> {
    let report = check_stable_models_with(p, ctx.max_atoms, &ctx.limits)?;
    let mut passed = report.passed();
    let mut value = json!({ "stable_models": stable_model_json(p, &report) });
    if is_normal(&report.theory) {
        let view = DungView::new(&report.theory)?;
        let correspondence = view.check_normal_correspondence_with(&ctx.limits)?;
        passed &= correspondence.passed();
        let t = &report.theory;
        value["normal_correspondence"] = json!({
            "passed": correspondence.passed(),
            "stable_sets": sets_json(t, &correspondence.stable_sets),
            "p_stable_pairs": pairs_json(t, &correspondence.p_stable_pairs),
            "stable_only_collective": sets_json(t, &correspondence.stable_only_collective),
            "stable_only_dung": sets_json(t, &correspondence.stable_only_dung),
            "p_stable_only_collective": pairs_json(t, &correspondence.p_stable_only_collective),
            "complete_only_dung": pairs_json(t, &correspondence.complete_only_dung),
        });
    }
    value["passed"] = json!(passed);
    Ok((passed, value))
}

fn stable_model_json(p: &Program, report: &StableModelReport) -> Value {
    let t = &report.theory;
    json!({
        "passed": report.passed(),
        "stable_models": program_sets_json(p, report.stable_models.iter().map(|m| m.true_atoms)),
        "stable_sets": sets_json(t, &report.stable_sets),
        "unmatched_models": program_sets_json(p, report.unmatched_models.iter().map(|m| m.true_atoms)),
        "unmatched_sets": sets_json(t, &report.unmatched_sets),
    })
}

fn crosscheck(
    ctx: &Context,
    program: Option<PathBuf>,
    random: Option<usize>,
) -> Result<Outcome, InputError> {
    let mut lines = Vec::new();
    let mut failed = false;
    let mut results = serde_json::Map::new();

    if let Some(path) = &program {
        let p = load_program(path, ctx.format)?;
        let (passed, value) = check_program(ctx, &p)?;
        failed |= !passed;
        let models = &value["stable_models"]["stable_models"];
        lines.push(format!(
            "{}: {} ({} stable models{})",
            path.display(),
            if passed { "pass" } else { "FAIL" },
            models.as_array().map_or(0, Vec::len),
            if value.get("normal_correspondence").is_some() {
                ", normal correspondence checked"
            } else {
                ""
            },
        ));
        if !passed {
            lines.push(serde_json::to_string_pretty(&value).expect("report serializes"));
        }
        results.insert("program".into(), value);
    }

    if let Some(count) = random {
        let mut r = rng(ctx.seed);
        let shape = ProgramShape {
            max_atoms: 5,
            max_rules: 6,
            ..Default::default()
        };
        let mut counterexamples = Vec::new();
        for index in 0..count {
            let p = shape.sample(&mut r);
            let (passed, value) = check_program(ctx, &p)?;
            if !passed {
                counterexamples
                    .push(json!({ "index": index, "program": p.to_string(), "report": value }));
            }
        }
        failed |= !counterexamples.is_empty();
        lines.push(format!(
            "{count} random programs (seed {}): {} counterexamples",
            ctx.seed,
            counterexamples.len()
        ));
        for c in &counterexamples {
            lines.push(format!(
                "#{}:\n{}",
                c["index"],
                c["program"].as_str().unwrap_or_default()
            ));
        }
        results.insert(
            "random".into(),
            json!({ "count": count, "seed": ctx.seed, "counterexamples": counterexamples }),
        );
    }

    results.insert("passed".into(), json!(!failed));
    Ok(Outcome {
        command: "crosscheck",
        results: Value::Object(results),
        text: lines.join("\n"),
        failed,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let mut diagnostics = Vec::new();
    if cli.max_args > DEFAULT_ENUMERATION_CAP {
        diagnostics.push(format!(
            "--max-args {} exceeds the default of {DEFAULT_ENUMERATION_CAP}; enumeration may not terminate promptly",
            cli.max_args
        ));
    }
    if cli.max_atoms > DEFAULT_ATOM_CAP {
        diagnostics.push(format!(
            "--max-atoms {} exceeds the default of {DEFAULT_ATOM_CAP}; compilation may not terminate promptly",
            cli.max_atoms
        ));
    }
    let json_output = cli.json;
    let mut ctx = Context {
        format: cli.format,
        limits: Limits::new(cli.max_args),
        max_atoms: cli.max_atoms,
        seed: cli.seed,
        diagnostics,
    };

    let outcome = run(cli, &mut ctx);
    for d in &ctx.diagnostics {
        eprintln!("warning: {d}");
    }
    match outcome {
        Ok(outcome) => {
            let rendered = if json_output {
                let doc = OutputDocument::new(outcome.command, outcome.results, ctx.diagnostics);
                serde_json::to_string_pretty(&doc).expect("document serializes")
            } else {
                outcome.text
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{rendered}");
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

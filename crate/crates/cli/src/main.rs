use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use toriheap::{CoxeterGraph, Error, Word};

mod report;

#[derive(Parser)]
#[command(
    name = "toriheap",
    version,
    about = "Heaps, toric heaps and cyclic shifts in Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    caps: Caps,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Args, Clone, Copy)]
struct Caps {
    /// Largest braid orbit or cyclic closure explored.
    #[arg(long, default_value_t = toriheap::DEFAULT_ORBIT_CAP, global = true)]
    max_orbit: usize,
    /// Largest toric equivalence class enumerated.
    #[arg(long, default_value_t = toriheap::DEFAULT_CLASS_CAP, global = true)]
    max_class: usize,
    /// Most linear extensions enumerated.
    #[arg(long, default_value_t = toriheap::DEFAULT_EXTENSION_CAP, global = true)]
    max_extensions: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on the Coxeter graph itself.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Words and elements.
    #[command(subcommand)]
    Word(WordCmd),
    /// Cyclic words up to rotation and braid moves.
    #[command(subcommand)]
    Cyclic(CyclicCmd),
    /// Heaps of words.
    #[command(subcommand)]
    Heap(HeapCmd),
    /// Toric heaps of words.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Coxeter elements and their conjugacy classes.
    #[command(subcommand)]
    Coxeter(CoxeterCmd),
}

#[derive(Args)]
struct GraphArg {
    /// Graph JSON file, or `-` for standard input.
    #[arg(short, long)]
    graph: PathBuf,
}

#[derive(Args)]
struct WordArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Word, e.g. "s1 s2 s1"; `e` or "" is the identity; `-` reads standard input.
    word: String,
}

#[derive(Subcommand)]
enum GraphCmd {
    Validate(GraphArg),
    Orientations(GraphArg),
    ToricClasses(GraphArg),
    Tutte {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        #[arg(long, allow_hyphen_values = true)]
        y: i64,
    },
}

#[derive(Subcommand)]
enum WordCmd {
    Reduce(WordArgs),
    ReducedWords(WordArgs),
    CommClasses(WordArgs),
    Classify(WordArgs),
    /// Checks l(w^k) = k l(w) for k up to `--k`.
    Logarithmic {
        #[command(flatten)]
        args: WordArgs,
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Shortening probe for a faux CFC word of shape <s,t>_m u.
    ConjectureProbe(WordArgs),
}

#[derive(Subcommand)]
enum CyclicCmd {
    Rtor(WordArgs),
    Ctor(WordArgs),
    Decompose(WordArgs),
    Elements(WordArgs),
}

#[derive(Subcommand)]
enum HeapCmd {
    Build(WordArgs),
    Linexts(WordArgs),
    Dot(WordArgs),
}

#[derive(Subcommand)]
enum ToricCmd {
    Heap(WordArgs),
    Ltor(WordArgs),
    Hasse(WordArgs),
    Closure(WordArgs),
}

#[derive(Subcommand)]
enum CoxeterCmd {
    Elements(GraphArg),
    Conjugacy(GraphArg),
}

/// Either a JSON result or DOT text.
enum Output {
    Json(Value),
    Dot(String),
}

/// Failures outside the library: unreadable input or a bad flag combination.
struct Usage(String);

enum Failure {
    Usage(Usage),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

struct Ctx {
    input: serde_json::Map<String, Value>,
    stdin_used: bool,
}

impl Ctx {
    fn read_stdin(&mut self) -> Result<String, Usage> {
        if self.stdin_used {
            return Err(Usage(
                "standard input can supply only one of graph and word".into(),
            ));
        }
        self.stdin_used = true;
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Usage(format!("reading standard input: {e}")))?;
        Ok(s)
    }

    fn graph(&mut self, arg: &GraphArg) -> Result<CoxeterGraph, Failure> {
        let text = if arg.graph.as_os_str() == "-" {
            self.read_stdin()?
        } else {
            fs::read_to_string(&arg.graph)
                .map_err(|e| Usage(format!("reading {}: {e}", arg.graph.display())))?
        };
        self.input
            .insert("graphFile".into(), json!(arg.graph.display().to_string()));
        let g = CoxeterGraph::from_json(&text)?;
        self.input.insert("graph".into(), json!(g.to_spec()));
        Ok(g)
    }

    fn word(&mut self, args: &WordArgs) -> Result<(CoxeterGraph, Word), Failure> {
        let g = self.graph(&args.graph)?;
        let raw = if args.word == "-" {
            self.read_stdin()?.trim().to_owned()
        } else {
            args.word.clone()
        };
        self.input.insert("word".into(), json!(raw));
        let w = g.parse_word(&raw)?;
        Ok((g, w))
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Graph(GraphCmd::Validate(_)) => "graph validate",
        Command::Graph(GraphCmd::Orientations(_)) => "graph orientations",
        Command::Graph(GraphCmd::ToricClasses(_)) => "graph toric-classes",
        Command::Graph(GraphCmd::Tutte { .. }) => "graph tutte",
        Command::Word(WordCmd::Reduce(_)) => "word reduce",
        Command::Word(WordCmd::ReducedWords(_)) => "word reduced-words",
        Command::Word(WordCmd::CommClasses(_)) => "word comm-classes",
        Command::Word(WordCmd::Classify(_)) => "word classify",
        Command::Word(WordCmd::Logarithmic { .. }) => "word logarithmic",
        Command::Word(WordCmd::ConjectureProbe(_)) => "word conjecture-probe",
        Command::Cyclic(CyclicCmd::Rtor(_)) => "cyclic rtor",
        Command::Cyclic(CyclicCmd::Ctor(_)) => "cyclic ctor",
        Command::Cyclic(CyclicCmd::Decompose(_)) => "cyclic decompose",
        Command::Cyclic(CyclicCmd::Elements(_)) => "cyclic elements",
        Command::Heap(HeapCmd::Build(_)) => "heap build",
        Command::Heap(HeapCmd::Linexts(_)) => "heap linexts",
        Command::Heap(HeapCmd::Dot(_)) => "heap dot",
        Command::Toric(ToricCmd::Heap(_)) => "toric heap",
        Command::Toric(ToricCmd::Ltor(_)) => "toric ltor",
        Command::Toric(ToricCmd::Hasse(_)) => "toric hasse",
        Command::Toric(ToricCmd::Closure(_)) => "toric closure",
        Command::Coxeter(CoxeterCmd::Elements(_)) => "coxeter elements",
        Command::Coxeter(CoxeterCmd::Conjugacy(_)) => "coxeter conjugacy",
    }
}

type WordReport = fn(&CoxeterGraph, &Word, usize) -> Result<Value, Error>;

fn dot_or_json(
    format: Format,
    dot: impl FnOnce() -> Result<String, Error>,
    json: impl FnOnce() -> Result<Value, Error>,
) -> Result<Output, Error> {
    Ok(match format {
        Format::Dot => Output::Dot(dot()?),
        Format::Json => Output::Json(json()?),
    })
}

fn run(cli: &Cli, ctx: &mut Ctx) -> Result<Output, Failure> {
    let caps = cli.caps;
    let (orbit, class, ext) = (caps.max_orbit, caps.max_class, caps.max_extensions);
    let dot_allowed = matches!(
        cli.command,
        Command::Heap(HeapCmd::Build(_) | HeapCmd::Dot(_))
            | Command::Toric(ToricCmd::Heap(_) | ToricCmd::Hasse(_))
            | Command::Graph(GraphCmd::Orientations(_))
    );
    if cli.format == Format::Dot && !dot_allowed {
        return Err(Usage(format!(
            "--format dot is not available for `{}`",
            command_name(&cli.command)
        ))
        .into());
    }
    let out = match &cli.command {
        Command::Graph(cmd) => match cmd {
            GraphCmd::Validate(a) => Output::Json(report::graph_summary(&ctx.graph(a)?)),
            GraphCmd::Orientations(a) => {
                let g = ctx.graph(a)?;
                dot_or_json(
                    cli.format,
                    || report::orientations_dot(&g),
                    || report::orientations(&g),
                )?
            }
            GraphCmd::ToricClasses(a) => {
                Output::Json(report::toric_classes(&ctx.graph(a)?, class)?)
            }
            GraphCmd::Tutte { graph, x, y } => {
                let g = ctx.graph(graph)?;
                ctx.input.insert("x".into(), json!(x));
                ctx.input.insert("y".into(), json!(y));
                Output::Json(report::tutte(&g, *x, *y)?)
            }
        },
        Command::Word(cmd) => match cmd {
            WordCmd::Reduce(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::reduce(&g, &w, orbit)?)
            }
            WordCmd::ReducedWords(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::reduced_words(&g, &w, orbit)?)
            }
            WordCmd::CommClasses(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::comm_classes(&g, &w, orbit)?)
            }
            WordCmd::Classify(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::classify(&g, &w, orbit)?)
            }
            WordCmd::Logarithmic { args, k } => {
                let (g, w) = ctx.word(args)?;
                ctx.input.insert("k".into(), json!(k));
                Output::Json(report::logarithmic(&g, &w, *k, orbit)?)
            }
            WordCmd::ConjectureProbe(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::conjecture(&g, &w, orbit)?)
            }
        },
        Command::Cyclic(cmd) => {
            let (a, f): (&WordArgs, WordReport) = match cmd {
                CyclicCmd::Rtor(a) => (a, report::rtor),
                CyclicCmd::Ctor(a) => (a, report::ctor),
                CyclicCmd::Decompose(a) => (a, report::decompose),
                CyclicCmd::Elements(a) => (a, report::elements),
            };
            let (g, w) = ctx.word(a)?;
            Output::Json(f(&g, &w, orbit)?)
        }
        Command::Heap(cmd) => match cmd {
            HeapCmd::Build(a) => {
                let (g, w) = ctx.word(a)?;
                dot_or_json(
                    cli.format,
                    || report::heap_dot(&g, &w),
                    || report::heap(&g, &w),
                )?
            }
            HeapCmd::Linexts(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::linexts(&g, &w, ext)?)
            }
            HeapCmd::Dot(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Dot(report::heap_dot(&g, &w)?)
            }
        },
        Command::Toric(cmd) => match cmd {
            ToricCmd::Heap(a) => {
                let (g, w) = ctx.word(a)?;
                dot_or_json(
                    cli.format,
                    || report::toric_dot(&g, &w, ext),
                    || report::toric_heap(&g, &w, ext, class),
                )?
            }
            ToricCmd::Ltor(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::ltor(&g, &w, ext)?)
            }
            ToricCmd::Hasse(a) => {
                let (g, w) = ctx.word(a)?;
                dot_or_json(
                    cli.format,
                    || report::toric_dot(&g, &w, ext),
                    || report::toric_hasse(&g, &w, ext),
                )?
            }
            ToricCmd::Closure(a) => {
                let (g, w) = ctx.word(a)?;
                Output::Json(report::toric_closure(&g, &w)?)
            }
        },
        Command::Coxeter(cmd) => match cmd {
            CoxeterCmd::Elements(a) => Output::Json(report::coxeter_elements(&ctx.graph(a)?)?),
            CoxeterCmd::Conjugacy(a) => Output::Json(report::conjugacy(&ctx.graph(a)?, class)?),
        },
    };
    Ok(out)
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Ok(()) => ExitCode::SUCCESS,
        Err(_) => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx {
        input: serde_json::Map::new(),
        stdin_used: false,
    };
    let name = command_name(&cli.command);
    let result = run(&cli, &mut ctx);
    let envelope = |body: (&str, Value)| {
        let mut v = json!({
            "schemaVersion": report::SCHEMA_VERSION,
            "command": name,
            "input": Value::Object(ctx.input.clone()),
        });
        v[body.0] = body.1;
        serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
    };
    match result {
        Ok(Output::Dot(text)) => emit(&text),
        Ok(Output::Json(v)) => emit(&envelope(("result", v))),
        Err(Failure::Usage(Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            let code = if e.is_resource_limit() { 3 } else { 1 };
            emit(&envelope((
                "error",
                json!({"kind": e.kind(), "message": e.to_string()}),
            )));
            ExitCode::from(code)
        }
    }
}

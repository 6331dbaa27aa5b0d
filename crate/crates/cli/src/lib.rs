//! The `motion` command: thin dispatch from subcommands to `motion-core`.
//!
//! Exit status is 0 on success, 1 when the input is well-formed but the
//! operation fails (a domain error), and 2 for usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use motion_core::braid::BraidWord;
use motion_core::interval::{canonical_motion, hom_cardinality, is_stationary, motions_equivalent};
use motion_core::io::{self, Document};
use motion_core::pl::{alexander_flow, circle_degree, translation_class, winding_class, PlFlow};
use motion_core::scalar::Scalar;
use motion_core::render::{render_flow, render_strands, render_worldline, RenderKind, RenderSpec};
use motion_core::strands::{braid_word_of, connect_configs, strands_equivalent, StrandSet};
use motion_core::{Error, Rational};

type Doc = Document<Rational>;

#[derive(Parser, Debug)]
#[command(name = "motion", version, about = "Exact PL flows, interval motions and braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// run the first flow, then the second (concatenation)
    Star,
    /// compose pointwise in time
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Movie,
    Flare,
    Worldline,
    CircleFlare,
    BraidDiagram,
}

impl Kind {
    fn core(self) -> RenderKind {
        match self {
            Kind::Movie => RenderKind::Movie,
            Kind::Flare => RenderKind::Flare,
            Kind::Worldline => RenderKind::Worldline,
            Kind::CircleFlare => RenderKind::CircleFlare,
            Kind::BraidDiagram => RenderKind::BraidDiagram,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compose two flows (`--mode star|dot`) or two strand sets (first, then second)
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "star")]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time-reverse a flow or strand set
    Reverse {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invert a map, or a flow frame by frame
    Invert {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Number of motion classes between two subsets of [0, 1], then the canonical motion if there is one
    ClassifyInterval {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The a/b word of a subset of [0, 1]
    Word { subset: PathBuf },
    /// Whether a flow keeps every boundary point of a subset fixed
    Stationary {
        flow: PathBuf,
        #[arg(long)]
        subset: PathBuf,
    },
    /// Read the braid word off a strand set
    BraidExtract {
        strands: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Normal form of a braid word, written out as a word
    BraidNf {
        /// a word such as "s1 s2^-1", or a file holding one
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Whether a braid word is the identity
    BraidTrivial {
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Equivalence of two strand sets, or of two interval motions of `--subset`
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        subset: Option<PathBuf>,
    },
    /// A strand set moving one configuration onto another, point by point
    Connect {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw a flow, worldline or strand set as SVG
    Render {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 5)]
        frames: usize,
        #[arg(long, default_value_t = 8)]
        grid: usize,
        #[arg(long, default_value_t = 6)]
        precision: usize,
        #[arg(long, default_value_t = 400)]
        canvas: u32,
        #[arg(long)]
        subset: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Winding number of a loop of the circle at a basepoint
    Winding {
        flow: PathBuf,
        #[arg(long, default_value = "0")]
        point: String,
    },
    /// Integer translation class of a flow of the line
    Translation { flow: PathBuf },
    /// Degree (+1 or -1) of a circle map, or of a flow's endpoint
    Degree { input: PathBuf },
    /// The coning isotopy from the identity to a boundary-fixing map of [0, 1]
    Alexander {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_doc(path: &Path) -> Result<Doc, Failure> {
    Ok(io::read_document(&read_text(path)?)?)
}

fn wrong(path: &Path, doc: &Doc, want: &str) -> Failure {
    Failure::Domain(Error::Parse(format!("{}: expected {want}, found a {}", path.display(), doc.kind())))
}

fn read_flow(path: &Path) -> Result<PlFlow<Rational>, Failure> {
    match read_doc(path)? {
        Document::Flow(f) => Ok(f),
        other => Err(wrong(path, &other, "a flow")),
    }
}

fn read_subset(path: &Path) -> Result<motion_core::Subset, Failure> {
    match read_doc(path)? {
        Document::Subset(n) => Ok(n),
        other => Err(wrong(path, &other, "a subset")),
    }
}

fn read_config(path: &Path) -> Result<motion_core::Config, Failure> {
    match read_doc(path)? {
        Document::Config(k) => Ok(k),
        other => Err(wrong(path, &other, "a configuration")),
    }
}

fn read_strands(path: &Path) -> Result<StrandSet<Rational>, Failure> {
    match read_doc(path)? {
        Document::Strands(s) => Ok(s),
        other => Err(wrong(path, &other, "a strand set")),
    }
}

/// A literal word, or the contents of a file of that name.
fn read_word(word: &str, strands: Option<usize>) -> Result<BraidWord, Failure> {
    let path = Path::new(word);
    let text = if path.is_file() { read_text(path)? } else { word.to_string() };
    Ok(BraidWord::parse(&text, strands)?)
}

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn emit(&mut self, text: &str, to: Option<&Path>) -> Outcome {
        match to {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
            None => self.print(text),
        }
    }

    fn print(&mut self, text: &str) -> Outcome {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
    }

    fn line(&mut self, text: &str) -> Outcome {
        self.print(&format!("{text}\n"))
    }
}

fn execute(cmd: Command, io_: &mut Io<'_>) -> Outcome {
    match cmd {
        Command::Compose { first, second, mode, out } => {
            let text = match (read_doc(&first)?, read_doc(&second)?) {
                (Document::Flow(f), Document::Flow(g)) => {
                    let h = match mode {
                        Mode::Star => PlFlow::star_compose(&f, &g)?,
                        Mode::Dot => PlFlow::dot_compose(&f, &g)?,
                    };
                    io::flow_to_json(&h)
                }
                (Document::Strands(f), Document::Strands(g)) => io::strands_to_json(&StrandSet::box_compose(&f, &g)?),
                (a, b) => {
                    return Err(Failure::Domain(Error::Parse(format!(
                        "cannot compose a {} with a {}",
                        a.kind(),
                        b.kind()
                    ))))
                }
            };
            io_.emit(&text, out.as_deref())
        }
        Command::Reverse { input, out } => {
            let text = match read_doc(&input)? {
                Document::Flow(f) => io::flow_to_json(&f.reverse()),
                Document::Strands(s) => io::strands_to_json(&s.reverse()),
                other => return Err(wrong(&input, &other, "a flow or strand set")),
            };
            io_.emit(&text, out.as_deref())
        }
        Command::Invert { input, out } => {
            let text = match read_doc(&input)? {
                Document::Flow(f) => io::flow_to_json(&f.pointwise_inverse()),
                Document::Homeo(h) => io::homeo_to_json(&h.inverse()),
                other => return Err(wrong(&input, &other, "a flow or map")),
            };
            io_.emit(&text, out.as_deref())
        }
        Command::ClassifyInterval { source, target, out } => {
            let (n, n2) = (read_subset(&source)?, read_subset(&target)?);
            let count = hom_cardinality(&n, &n2);
            io_.line(&count.to_string())?;
            if count == 1 {
                io_.emit(&io::flow_to_json(&canonical_motion(&n, &n2)?), out.as_deref())?;
            }
            Ok(())
        }
        Command::Word { subset } => {
            let n = read_subset(&subset)?;
            let w = n.word();
            io_.line(if w.is_empty() { "e" } else { &w })
        }
        Command::Stationary { flow, subset } => {
            let (f, n) = (read_flow(&flow)?, read_subset(&subset)?);
            io_.line(&is_stationary(&f, &n).to_string())
        }
        Command::BraidExtract { strands, out } => {
            let w = braid_word_of(&read_strands(&strands)?)?;
            io_.emit(&w.to_text(), out.as_deref())
        }
        Command::BraidNf { word, strands } => {
            let w = read_word(&word, strands)?;
            io_.print(&w.normal_form().to_word().to_text())
        }
        Command::BraidTrivial { word, strands } => {
            let w = read_word(&word, strands)?;
            io_.line(&w.is_trivial().to_string())
        }
        Command::Equiv { first, second, subset } => {
            let same = match (read_doc(&first)?, read_doc(&second)?) {
                (Document::Strands(f), Document::Strands(g)) => strands_equivalent(&f, &g)?,
                (Document::Flow(f), Document::Flow(g)) => {
                    let Some(subset) = subset else {
                        return Err(Failure::Usage("comparing flows as motions needs --subset".into()));
                    };
                    let n = read_subset(&subset)?;
                    let target = f.endpoint().image(&n)?;
                    motions_equivalent(&f, &g, &n, &target)?
                }
                (a, b) => {
                    return Err(Failure::Domain(Error::Parse(format!(
                        "cannot compare a {} with a {}",
                        a.kind(),
                        b.kind()
                    ))))
                }
            };
            io_.line(&same.to_string())
        }
        Command::Connect { source, target, out } => {
            let s = connect_configs(&read_config(&source)?, &read_config(&target)?)?;
            io_.emit(&io::strands_to_json(&s), out.as_deref())
        }
        Command::Render { input, kind, frames, grid, precision, canvas, subset, out } => {
            let spec = RenderSpec { frames, grid, precision, canvas, ..RenderSpec::new(kind.core()) };
            let n = subset.as_deref().map(read_subset).transpose()?;
            let svg = match read_doc(&input)? {
                Document::Flow(f) => render_flow(&f, n.as_ref(), &spec)?,
                Document::Strands(s) => render_strands(&s, &spec)?,
                Document::Subset(n) if kind.core() == RenderKind::Worldline => {
                    render_worldline(&motion_core::Worldline::product(&n), &spec)?
                }
                other => return Err(wrong(&input, &other, "a flow or strand set")),
            };
            io_.emit(&svg, out.as_deref())
        }
        Command::Winding { flow, point } => {
            let p = <Rational as Scalar>::parse_exact(&point)?;
            io_.line(&winding_class(&read_flow(&flow)?, &p)?.to_string())
        }
        Command::Translation { flow } => io_.line(&translation_class(&read_flow(&flow)?)?.to_string()),
        Command::Degree { input } => {
            let d = match read_doc(&input)? {
                Document::Homeo(h) => circle_degree(&h),
                Document::Flow(f) => circle_degree(f.endpoint()),
                other => return Err(wrong(&input, &other, "a map or flow")),
            };
            io_.line(&d.to_string())
        }
        Command::Alexander { input, out } => {
            let h = match read_doc(&input)? {
                Document::Homeo(h) => h,
                other => return Err(wrong(&input, &other, "a map of [0, 1]")),
            };
            io_.emit(&io::flow_to_json(&alexander_flow(&h)?), out.as_deref())
        }
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let mut io_ = Io { out };
    match execute(cli.command, &mut io_) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

//! The `mrdcode` command line. [`run`] takes the arguments and the two
//! output streams and returns the exit status, so it can be driven in-process.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::field::{gram_matrix, FiniteField, TopField};
use crate::golden::verify_example;
use crate::multirate::{DecodeOptions, MessageBlock, MultiRateCode, PRESETS};
use crate::props::{all_passed, run_props, PropOptions};
use crate::rank::{min_rank_distance, CodeSpec, ExhaustiveDecoder, DEFAULT_ENUMERATION_BOUND};
use crate::sim::{simulate, ErrorRankSpec, MessageSource, SimulationConfig};
use crate::stream::{decode_stream, encode_stream, StreamError};
use crate::text::{
    format_ground, format_ground_matrix, format_top, format_top_matrix, parse_config, parse_message,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "mrdcode", version, about = "Multiple-rate rank-metric codes")]
pub struct Cli {
    /// Code configuration file (key=value lines).
    #[arg(long, global = true, conflicts_with = "preset")]
    pub config: Option<PathBuf>,
    /// Named preset: paper-8-3-k1 or paper-8-3-k2.
    #[arg(long, global = true)]
    pub preset: Option<String>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub trials: Option<u64>,
    /// Error-rank distribution, e.g. 0:0.5,1:0.5.
    #[arg(long, global = true)]
    pub error_rank: Option<String>,
    /// Report coordinates where several segment lengths match.
    #[arg(long, global = true)]
    pub diagnostics: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the field tower and the self-complementary basis.
    FieldBuild,
    /// Print generator, parity-check and projector matrices.
    CodeInfo,
    /// Encode message blocks, one per line.
    Encode {
        /// Input file; stdin when absent.
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode codewords, one per line.
    Decode {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Mother decoding radius (defaults to the unique-decoding radius).
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Run a rank-error channel simulation.
    Simulate {
        /// Message file to cycle through instead of uniform random blocks.
        #[arg(long)]
        messages: Option<PathBuf>,
    },
    /// Check the GF(8^3) worked example against its published values.
    VerifyExample {
        /// Replace every pad by zero.
        #[arg(long)]
        zero_pads: bool,
    },
    /// Run the property suite.
    Props,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidConfig(_)
        | Error::InvalidParameters(_)
        | Error::BadPadTable(_)
        | Error::BadSegmentLength { .. }
        | Error::DimensionMismatch { .. }
        | Error::RadiusTooLarge { .. } => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

impl From<StreamError> for Failure {
    fn from(e: StreamError) -> Self {
        let code = match &e {
            StreamError::Line { source, .. } => exit_code_for(source),
            StreamError::Io(_) => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

type Outcome = std::result::Result<u8, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

struct Loaded {
    code: MultiRateCode,
    seed: u64,
}

fn load(cli: &Cli) -> std::result::Result<Loaded, Failure> {
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let cfg =
            parse_config(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        let code = cfg.build()?;
        return Ok(Loaded {
            code,
            seed: cli.seed.or(cfg.seed).unwrap_or(0),
        });
    }
    let name = match cli.preset.as_deref() {
        None | Some("paper-8-3") => "paper-8-3-k1",
        Some(n) => n,
    };
    let code = MultiRateCode::preset(name).map_err(|_| {
        Failure::usage(format!(
            "unknown preset {name:?}; known: {}",
            PRESETS.join(", ")
        ))
    })?;
    Ok(Loaded {
        code,
        seed: cli.seed.unwrap_or(0),
    })
}

fn open_input(path: &Option<PathBuf>) -> io::Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

fn with_output<R>(
    path: &Option<PathBuf>,
    out: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> R,
) -> io::Result<R> {
    match path {
        Some(p) => {
            let mut file = io::BufWriter::new(File::create(p)?);
            let r = f(&mut file);
            file.flush()?;
            Ok(r)
        }
        None => Ok(f(out)),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::FieldBuild => field_build(&load(cli)?.code, out),
        Command::CodeInfo => code_info(&load(cli)?.code, out),
        Command::Encode { input, output } => {
            let code = load(cli)?.code;
            let reader = open_input(input)?;
            let warnings = with_output(output, out, |w| encode_stream(&code, reader, w))??;
            for w in warnings {
                writeln!(
                    err,
                    "warning: line {}: segment {} is full length but will decode as length {}",
                    w.line, w.segment, w.decodes_as_length
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Decode {
            input,
            output,
            t_max,
        } => {
            let code = load(cli)?.code;
            let reader = open_input(input)?;
            let options = DecodeOptions {
                t_max: *t_max,
                diagnostics: cli.diagnostics,
            };
            let decoder = ExhaustiveDecoder::default();
            let diags = with_output(output, out, |w| {
                decode_stream(&code, &decoder, options, reader, w)
            })??;
            for (line, matches) in diags {
                for (coord, lens) in matches {
                    writeln!(
                        err,
                        "diagnostic: line {line}: coordinate {coord} matches lengths {lens:?}"
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Simulate { messages } => {
            let Loaded { code, seed } = load(cli)?;
            let spec = match &cli.error_rank {
                Some(s) => s.parse::<ErrorRankSpec>()?,
                None => ErrorRankSpec::fixed(code.mother().unique_decoding_radius()),
            };
            let source = match messages {
                Some(path) => MessageSource::Blocks(read_blocks(&code, path)?),
                None => MessageSource::Uniform,
            };
            let cfg = SimulationConfig {
                trials: cli.trials.unwrap_or(1000),
                seed,
                error_ranks: spec,
                source,
                t_max: None,
            };
            let report = simulate(&code, &cfg)?;
            writeln!(out, "{report}")?;
            writeln!(err, "wall time: {:.3} s", report.wall_time.as_secs_f64())?;
            Ok(EXIT_OK)
        }
        Command::VerifyExample { zero_pads } => {
            let mut code = load(cli)?.code;
            if *zero_pads {
                code = code.without_pads();
            }
            let report = verify_example(&code)?;
            writeln!(out, "{report}")?;
            if report.all_reproduced() {
                Ok(EXIT_OK)
            } else {
                if report.consistent() {
                    writeln!(
                        err,
                        "every mismatch is a published value that contradicts other published values"
                    )?;
                }
                Ok(EXIT_FAILURE)
            }
        }
        Command::Props => {
            let Loaded { code, seed } = load(cli)?;
            let opts = PropOptions {
                seed,
                trials: cli.trials.unwrap_or(200),
                ..Default::default()
            };
            let results = run_props(&code, &opts);
            for r in &results {
                writeln!(out, "{r}")?;
            }
            Ok(if all_passed(&results) {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
    }
}

fn read_blocks(
    code: &MultiRateCode,
    path: &PathBuf,
) -> std::result::Result<Vec<MessageBlock>, Failure> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    let mut blocks = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let b = parse_message(code.tower(), line).map_err(|e| e.at_line(i + 1))?;
        code.validate(&b)
            .map_err(|e| Failure::usage(format!("line {}: {e}", i + 1)))?;
        blocks.push(b);
    }
    Ok(blocks)
}

fn field_build(code: &MultiRateCode, out: &mut dyn Write) -> Outcome {
    let t = code.tower();
    let cfg = t.config();
    let g = t.ground();
    writeln!(
        out,
        "p = {}, n = {}, q = {}, q^n = {}",
        cfg.p,
        cfg.n,
        g.order(),
        t.top().order()
    )?;
    let gp: Vec<String> = cfg.ground_poly.iter().map(u32::to_string).collect();
    writeln!(out, "ground_poly (ascending) = {}", gp.join(","))?;
    let tp: Vec<String> = cfg.top_poly.iter().map(|&c| format_ground(t, c)).collect();
    writeln!(out, "top_poly (ascending) = {}", tp.join(","))?;
    writeln!(
        out,
        "log tables: ground {}, top {}",
        g.has_log_tables(),
        t.top().has_log_tables()
    )?;
    let basis: Vec<String> = code
        .basis()
        .elements
        .iter()
        .map(|&e| format_ground(t, e))
        .collect();
    writeln!(out, "self-complementary normal basis = {}", basis.join(","))?;
    let gram = gram_matrix(&**g, &code.basis().elements);
    let rows: Vec<String> = gram
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect();
    writeln!(out, "Gram matrix [tr(a_i a_j)] = {}", rows.join("; "))?;
    for len in 1..=code.n() {
        writeln!(
            out,
            "pad {len}: alpha' = {}, beta' = {}",
            format_ground(t, code.pads().alpha(len)),
            format_top(t, code.pads().beta(len))
        )?;
    }
    Ok(EXIT_OK)
}

fn distance_line<F: crate::field::Extension>(spec: &CodeSpec<F>) -> String {
    match min_rank_distance(spec, DEFAULT_ENUMERATION_BOUND) {
        Ok(d) => format!(
            "d = {d} (enumerated), designed {}",
            spec.designed_distance()
        ),
        Err(_) => format!("d = {} (designed)", spec.designed_distance()),
    }
}

fn code_info(code: &MultiRateCode, out: &mut dyn Write) -> Outcome {
    let t = code.tower();
    let m = code.mother();
    let (n, k) = (code.n(), code.k());
    writeln!(out, "mother C({n},{k}) over GF(q^n)")?;
    writeln!(out, "  G = {}", format_top_matrix(t, m.generator()))?;
    writeln!(
        out,
        "  H = {}",
        empty_or(format_top_matrix(t, m.parity_check()))
    )?;
    writeln!(out, "  {}", distance_line::<TopField>(m))?;
    writeln!(out, "  radius = {}", m.unique_decoding_radius())?;
    writeln!(out, "  LCD = {}", m.is_lcd())?;
    if let Ok(p) = m.projectors() {
        writeln!(out, "  Pi = {}", format_top_matrix(t, &p.code))?;
        writeln!(
            out,
            "  Pi_dual = {}",
            empty_or(format_top_matrix(t, &p.dual))
        )?;
    }
    for (i, c) in code.children().iter().enumerate() {
        writeln!(out, "child C{}({n},{}) over GF(q)", i + 1, c.k())?;
        writeln!(out, "  G = {}", format_ground_matrix(t, c.generator()))?;
        writeln!(
            out,
            "  H = {}",
            empty_or(format_ground_matrix(t, c.parity_check()))
        )?;
        writeln!(out, "  {}", distance_line(c))?;
        writeln!(out, "  LCD = {}", c.is_lcd())?;
        if let Ok(p) = c.projectors() {
            writeln!(out, "  Pi = {}", format_ground_matrix(t, &p.code))?;
            writeln!(out, "  Pi_dual = {}", format_ground_matrix(t, &p.dual))?;
        }
    }
    let rates: Vec<String> = code
        .achievable_rates()
        .iter()
        .map(|r| r.to_string())
        .collect();
    writeln!(out, "rates = {}", rates.join(", "))?;
    Ok(EXIT_OK)
}

fn empty_or(s: String) -> String {
    if s.is_empty() {
        "(empty)".into()
    } else {
        s
    }
}

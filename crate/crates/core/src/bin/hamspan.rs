use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hamspan::experiments::{
    property_report_with, refutation_pipeline, run_experiment, sample_gnp, synthetic_r, write_trials_csv,
    CampaignConfig, ModelParams, PropertyConfig, SpanMode, TrialRecord,
};
use hamspan::graph::{parse_edge_list, parse_graph6, to_dot, write_edge_list, write_graph6};
use hamspan::spanning::{
    confirm_spanning_sampled, decide_spanning_exact, normalize_witness, NormalizeMode, SpanCertificate, VerdictKind,
};
use hamspan::switcher::{build_switcher, switcher_cycle_cap, switcher_cycles, SwitcherCertificate, DEFAULT_LINKAGE_RETRIES};
use hamspan::{EdgeVector, Graph};

#[derive(Parser)]
#[command(name = "hamspan", version, about = "Hamilton cycles and the cycle space of a graph")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample G(n, p) and print it.
    Gen {
        #[command(flatten)]
        model: Model,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Do the Hamilton cycles span the cycle space? Exit 0 yes, 1 no, 2 unknown.
    Span {
        #[command(flatten)]
        input: Input,
        /// Defaults to exact for n <= 12, sampled above.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Exact: search nodes. Sampled: Hamilton cycles to draw (default dim + 50).
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact decision plus a normalized witness R when spanning fails.
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = Normalize::Hillclimb)]
        normalize: Normalize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a parity switcher for R (given as hex, or a synthetic one).
    Switcher {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r_hex: Option<String>,
        /// Linkage reshuffles per candidate cycle.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the refutation pipeline for R (given as hex, or a synthetic one).
    Refute {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r_hex: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural property report.
    Props {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r_hex: Option<String>,
        /// Sampled sets per set-quantified property.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded campaign over an (n, f) grid, written as CSV.
    Experiment {
        #[arg(long, value_delimiter = ',', default_values_t = [101])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [3.0])]
        f: Vec<f64>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Mode::Sampled)]
        mode: Mode,
        #[arg(long)]
        budget: Option<u64>,
        /// Also run the refutation pipeline on a synthetic R.
        #[arg(long)]
        refute: bool,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        allow_even_n: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct Model {
    #[arg(long, default_value_t = 101)]
    n: usize,
    /// Offset in p = (ln n + 2 ln ln n + f) / n.
    #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
    f: f64,
    /// Edge probability; overrides --f.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    allow_even_n: bool,
}

#[derive(Args, Clone)]
struct Input {
    /// graph6 string, or a file holding graph6 or an edge list. Sampled
    /// from the model flags when absent.
    #[arg(long)]
    graph: Option<String>,
    #[command(flatten)]
    model: Model,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Normalize {
    None,
    Hillclimb,
    Exact,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn sample(model: &Model) -> CliResult<Graph> {
    let params = match model.p {
        Some(p) => ModelParams::with_p(model.n, p, model.seed, model.allow_even_n),
        None => ModelParams::new(model.n, model.f, model.seed, model.allow_even_n),
    };
    Ok(sample_gnp(&params.map_err(|e| e.to_string())?))
}

fn load(input: &Input) -> CliResult<Graph> {
    let Some(src) = &input.graph else { return sample(&input.model) };
    let text = if Path::new(src).is_file() { fs::read_to_string(src).map_err(|e| e.to_string())? } else { src.clone() };
    let first = text.lines().next().unwrap_or("").trim();
    let parsed = if first.split_whitespace().count() == 2 { parse_edge_list(&text) } else { parse_graph6(first) };
    parsed.map_err(|e| e.to_string())
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| e.to_string()),
        None => writeln!(io::stdout(), "{text}").map_err(|e| e.to_string()),
    }
}

fn resolve_r(g: &Graph, r_hex: &Option<String>, seed: u64) -> CliResult<EdgeVector> {
    match r_hex {
        Some(hex) => EdgeVector::from_hex(g.m(), hex).map_err(|e| e.to_string()),
        None => synthetic_r(g, seed).map(|w| w.vector).ok_or_else(|| "no synthetic R for this graph".to_string()),
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match cli.cmd {
        Cmd::Gen { model, format, out } => {
            let g = sample(&model)?;
            let text = match format {
                Format::Graph6 => write_graph6(&g),
                Format::Edges => write_edge_list(&g).trim_end().to_string(),
                Format::Dot => to_dot(&g, None),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Cmd::Span { input, mode, budget, out } => {
            let g = load(&input)?;
            let exact = match mode {
                Some(Mode::Exact) => true,
                Some(Mode::Sampled) => false,
                None => g.n() <= 12,
            };
            let verdict = if exact {
                decide_spanning_exact(&g, budget)
            } else {
                let samples = budget.map_or(hamspan::gf2::cycle_space_dim(&g) + 50, |b| b as usize);
                confirm_spanning_sampled(&g, samples, input.model.seed)
            };
            emit(&out, &SpanCertificate::new(&g, &verdict).to_json())?;
            Ok(verdict.kind.exit_code() as u8)
        }
        Cmd::Witness { input, budget, normalize, out } => {
            let g = load(&input)?;
            let mut verdict = decide_spanning_exact(&g, budget);
            let mode = match normalize {
                Normalize::None => None,
                Normalize::Hillclimb => Some(NormalizeMode::Hillclimb),
                Normalize::Exact => Some(NormalizeMode::Exact),
            };
            if let (Some(w), Some(mode)) = (verdict.witness.as_ref(), mode) {
                verdict.witness = Some(normalize_witness(&g, w, mode));
            }
            emit(&out, &SpanCertificate::new(&g, &verdict).to_json())?;
            Ok(verdict.kind.exit_code() as u8)
        }
        Cmd::Switcher { input, r_hex, budget, out } => {
            let g = load(&input)?;
            let r = resolve_r(&g, &r_hex, input.model.seed)?;
            let retries = budget.map_or(DEFAULT_LINKAGE_RETRIES, |b| b as usize);
            let small = g.small_vertices();
            for (i, c) in switcher_cycles(&g, &r, &small).take(8).enumerate() {
                if let Some(w) = build_switcher(&g, &r, &c, retries, input.model.seed ^ i as u64).map_err(|e| e.to_string())? {
                    let cert = SwitcherCertificate::new(&g, &w, &r).map_err(|e| e.to_string())?;
                    let mut v = serde_json::to_value(&cert).map_err(|e| e.to_string())?;
                    v["graph6"] = json!(write_graph6(&g));
                    v["r_hex"] = json!(r.to_hex());
                    emit(&out, &serde_json::to_string_pretty(&v).map_err(|e| e.to_string())?)?;
                    return Ok(0);
                }
            }
            emit(&out, &json!({ "graph6": write_graph6(&g), "r_hex": r.to_hex(), "switcher": null }).to_string())?;
            Ok(1)
        }
        Cmd::Refute { input, r_hex, out } => {
            let g = load(&input)?;
            let r = resolve_r(&g, &r_hex, input.model.seed)?;
            let record = match refutation_pipeline(&g, &r, input.model.seed) {
                Ok(h) => json!({
                    "graph6": write_graph6(&g),
                    "r_hex": r.to_hex(),
                    "ok": true,
                    "cycle": h.cycle,
                    "r_parity": h.vector.intersection_count(&r).map_err(|e| e.to_string())? % 2,
                    "switcher_cycle_len": h.switcher_cycle.len(),
                    "switcher_cycle_cap": switcher_cycle_cap(g.n()),
                    "candidates_tried": h.candidates_tried,
                }),
                Err(f) => json!({
                    "graph6": write_graph6(&g),
                    "r_hex": r.to_hex(),
                    "ok": false,
                    "stage": f.stage.to_string(),
                    "detail": f.detail,
                    "candidates_tried": f.candidates_tried,
                }),
            };
            emit(&out, &serde_json::to_string_pretty(&record).map_err(|e| e.to_string())?)?;
            Ok(if record["ok"] == json!(true) { 0 } else { 1 })
        }
        Cmd::Props { input, r_hex, budget, out } => {
            let g = load(&input)?;
            let r = match &r_hex {
                Some(h) => Some(EdgeVector::from_hex(g.m(), h).map_err(|e| e.to_string())?),
                None => None,
            };
            let mut config = PropertyConfig { seed: input.model.seed, ..Default::default() };
            if let Some(b) = budget {
                config.samples = b as usize;
            }
            emit(&out, &property_report_with(&g, r.as_ref(), &config).to_json())?;
            Ok(0)
        }
        Cmd::Experiment { n, f, p, seed, trials, mode, budget, refute, threads, allow_even_n, out } => {
            let config = CampaignConfig {
                ns: n,
                fs: f,
                p,
                trials,
                master_seed: seed,
                mode: match mode {
                    Mode::Exact => SpanMode::Exact,
                    Mode::Sampled => SpanMode::Sampled,
                },
                budget,
                refute,
                allow_even_n,
                threads,
            };
            let records = run_experiment(&config).map_err(|e| e.to_string())?;
            match &out {
                Some(path) => write_trials_csv(fs::File::create(path).map_err(|e| e.to_string())?, &records),
                None => write_trials_csv(io::stdout().lock(), &records),
            }
            .map_err(|e| e.to_string())?;
            summarize(&records);
            Ok(0)
        }
    }
}

fn summarize(records: &[TrialRecord]) {
    let mut cells: Vec<(usize, u64)> = records.iter().map(|r| (r.n, r.p.to_bits())).collect();
    cells.dedup();
    for (n, p) in cells {
        let rows: Vec<&TrialRecord> = records.iter().filter(|r| r.n == n && r.p.to_bits() == p).collect();
        let d3: Vec<_> = rows.iter().filter(|r| r.min_degree >= 3).collect();
        let spanned = d3.iter().filter(|r| r.verdict.is_spanned()).count();
        let inconclusive = d3.iter().filter(|r| r.verdict == VerdictKind::Inconclusive).count();
        eprintln!(
            "n={n} p={:.5}: {} trials, δ>=3 in {}, spanned {spanned}/{} inconclusive {inconclusive}",
            f64::from_bits(p),
            rows.len(),
            d3.len(),
            d3.len(),
        );
    }
}

//! Experiment runner for the mergedpow library.
//!
//! Every subcommand prints a deterministic table (CSV by default, JSON with
//! `--format json`) for a given seed, suitable for piping into plotting or
//! regression tooling. Exit status: 0 on success, 2 on usage errors, 1 on
//! runtime (I/O) errors.

mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mergedpow::arrivals::{read_trace_text, ArrivalTrace};
use mergedpow::bounds::{adversary_rate, bound_pair};
use mergedpow::chainsim::{estimate_growth_rate, fully_delayed_chain_rate};
use mergedpow::economics::{
    min_attack_cost, optimal_score_constants, relative_difficulty, simulate_difficulty_adjustment,
    AdjustmentParams, PriceVector, DEFAULT_EPOCH_LENGTH, DEFAULT_MIN_FRACTION, DEFAULT_STEP_DOWN,
};
use mergedpow::security::{
    backdoor_insecurity_probability, backdoor_monte_carlo, classify, classify_with_simulation,
    simulate_private_attack, SimulationRefinement,
};
use mergedpow::BlockrateConfiguration;
use report::{Cell, Report};

#[derive(Parser)]
#[command(name = "mergedpow", version, about = "Multi-hash proof-of-work security analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Write output to PATH instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Omit the generated_at field from JSON output
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

/// `param:start:stop:step` sweep over a numeric parameter (currently
/// `delta`).
#[derive(Clone, Debug)]
struct SweepSpec {
    param: String,
    start: f64,
    stop: f64,
    step: f64,
}

impl SweepSpec {
    fn values(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n).map(|k| self.start + k as f64 * self.step).collect()
    }
}

impl FromStr for SweepSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(format!("--sweep expects param:start:stop:step, got `{s}`"));
        }
        let param = parts[0].to_string();
        if param != "delta" {
            return Err(format!("--sweep parameter must be `delta`, got `{param}`"));
        }
        let parse = |name: &str, v: &str| -> Result<f64, String> {
            v.parse::<f64>().map_err(|e| format!("--sweep {name} `{v}`: {e}"))
        };
        let start = parse("start", parts[1])?;
        let stop = parse("stop", parts[2])?;
        let step = parse("step", parts[3])?;
        if !step.is_finite() || step <= 0.0 {
            return Err(format!("--sweep step must be positive, got {step}"));
        }
        if start > stop {
            return Err(format!("--sweep start {start} exceeds stop {stop}"));
        }
        Ok(SweepSpec {
            param,
            start,
            stop,
            step,
        })
    }
}

#[derive(Args)]
struct HonestArgs {
    /// Honest blockrates h_i, comma separated (blocks/second)
    #[arg(long = "h", value_name = "RATES", value_delimiter = ',', required = true, allow_negative_numbers = true)]
    h: Vec<f64>,

    /// Score constants c_i, comma separated (points/block)
    #[arg(long = "c", value_name = "SCORES", value_delimiter = ',', required = true, allow_negative_numbers = true)]
    c: Vec<f64>,
}

#[derive(Args)]
struct AdversaryArg {
    /// Adversary blockrates b_i, comma separated (blocks/second)
    #[arg(long = "b", value_name = "RATES", value_delimiter = ',', required = true, allow_negative_numbers = true)]
    b: Vec<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Delta sweep of growth-rate bounds vs simulation for the two-type
    /// reference setup (h=2,1  c=1,2  delta 0..5 step 0.5, 1000 s horizon)
    Figure2 {
        /// Trials per delta
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Simulation horizon, seconds
        #[arg(long, default_value_t = 1000.0, allow_negative_numbers = true)]
        horizon: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Closed-form lower/upper growth-rate bounds
    Bounds {
        #[command(flatten)]
        rates: HonestArgs,
        /// Network delay bound, seconds
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta: f64,
        /// Sweep `delta:start:stop:step`
        #[arg(long, value_name = "SPEC")]
        sweep: Option<SweepSpec>,
    },
    /// Secure/insecure classification against the bounds
    Classify {
        #[command(flatten)]
        rates: HonestArgs,
        #[command(flatten)]
        adversary: AdversaryArg,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long, value_name = "SPEC")]
        sweep: Option<SweepSpec>,
        /// Refine indeterminate verdicts with a growth-rate simulation
        #[arg(long)]
        refine: bool,
        /// Simulation horizon for --refine, seconds
        #[arg(long, default_value_t = 1000.0, allow_negative_numbers = true)]
        horizon: f64,
        /// Trials for --refine
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Confidence width for --refine, in standard errors
        #[arg(long, default_value_t = 3.0)]
        confidence: f64,
    },
    /// Monte Carlo estimate of the fully-delayed growth rate
    Growth {
        /// Honest blockrates h_i, comma separated (not used with --trace)
        #[arg(long = "h", value_name = "RATES", value_delimiter = ',', allow_negative_numbers = true)]
        h: Option<Vec<f64>>,
        /// Score constants c_i, comma separated (points/block)
        #[arg(long = "c", value_name = "SCORES", value_delimiter = ',', required = true, allow_negative_numbers = true)]
        c: Vec<f64>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta: f64,
        /// Simulation horizon, seconds (for --trace: defaults to the last
        /// event time)
        #[arg(long, allow_negative_numbers = true)]
        horizon: Option<f64>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_name = "SPEC")]
        sweep: Option<SweepSpec>,
        /// Compute the rate of a fixture trace (`time,type_index` lines)
        /// instead of generating traces
        #[arg(long, value_name = "PATH")]
        trace: Option<PathBuf>,
    },
    /// Private-mining attack race
    Attack {
        #[command(flatten)]
        rates: HonestArgs,
        #[command(flatten)]
        adversary: AdversaryArg,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        delta: f64,
        #[arg(long, default_value_t = 1000.0, allow_negative_numbers = true)]
        horizon: f64,
        /// Reveal time, seconds (defaults to the horizon)
        #[arg(long, allow_negative_numbers = true)]
        reveal: Option<f64>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Minimum attack cost in the linear cost-per-hash model
    Cost {
        #[command(flatten)]
        rates: HonestArgs,
        /// Prices p_i, comma separated (dollars/block)
        #[arg(long, value_name = "PRICES", value_delimiter = ',', required = true, allow_negative_numbers = true)]
        prices: Vec<f64>,
        /// Also emit the cost-maximizing score constants anchored at c_1
        #[arg(long, value_name = "C1", allow_negative_numbers = true)]
        c1: Option<f64>,
    },
    /// Relative difficulty rule, or the minimum-fraction adjustment
    /// simulation with --simulate
    Difficulty {
        /// Costs per hash kappa_i, comma separated (dollars/hash)
        #[arg(long, value_name = "KAPPAS", value_delimiter = ',', required = true, allow_negative_numbers = true)]
        kappa: Vec<f64>,
        /// Anchor difficulty d_1 (hashes/block) for the relative rule
        #[arg(long, allow_negative_numbers = true)]
        d1: Option<f64>,
        /// Run the minimum-fraction adjustment simulation
        #[arg(long)]
        simulate: bool,
        /// Initial difficulties d_i for --simulate (defaults to the
        /// relative rule applied to --d1)
        #[arg(long = "d", value_name = "DIFFS", value_delimiter = ',', allow_negative_numbers = true)]
        d: Option<Vec<f64>>,
        /// Initial hashrates q_i for --simulate (hashes/second)
        #[arg(long = "q", value_name = "RATES", value_delimiter = ',', allow_negative_numbers = true)]
        q: Option<Vec<f64>>,
        /// Block reward for --simulate (dollars/block)
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        reward: f64,
        /// Hashrate response, hashes/second per dollar/second of margin
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        elasticity: f64,
        #[arg(long, default_value_t = DEFAULT_MIN_FRACTION, allow_negative_numbers = true)]
        min_fraction: f64,
        #[arg(long, default_value_t = DEFAULT_STEP_DOWN, allow_negative_numbers = true)]
        step_down: f64,
        #[arg(long, default_value_t = DEFAULT_EPOCH_LENGTH, allow_negative_numbers = true)]
        epoch_length: f64,
        #[arg(long, default_value_t = 100)]
        epochs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Hardware-backdoor insecurity probability (exact tail + Monte Carlo)
    Backdoor {
        /// Number of hash types
        #[arg(long)]
        n: u32,
        /// Per-type compromise probability
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<mergedpow::Error> for CliError {
    fn from(e: mergedpow::Error) -> Self {
        match e {
            mergedpow::Error::Io(err) => CliError::Runtime(err.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out.clone();
    let no_timestamp = cli.no_timestamp;
    match run(cli.command) {
        Ok(report) => {
            let rendered = match format {
                OutputFormat::Csv => report.render_csv(),
                OutputFormat::Json => {
                    let ts = if no_timestamp { None } else { Some(unix_now()) };
                    report.render_json(ts)
                }
            };
            match write_output(out.as_deref(), &rendered) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn unix_now() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn write_output(path: Option<&std::path::Path>, data: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, data),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(data.as_bytes())
        }
    }
}

fn config_for(h: &[f64], b: &[f64], c: &[f64], delta: f64) -> Result<BlockrateConfiguration, CliError> {
    Ok(BlockrateConfiguration::from_rates(h, b, c, delta)?)
}

fn delta_grid(delta: f64, sweep: &Option<SweepSpec>) -> Vec<f64> {
    match sweep {
        Some(s) => s.values(),
        None => vec![delta],
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Figure2 {
            trials,
            horizon,
            seed,
        } => {
            let h = [2.0, 1.0];
            let c = [1.0, 2.0];
            let mut report = Report::new("figure2");
            report
                .config("h", json!(h))
                .config("c", json!(c))
                .config("delta_start", json!(0.0))
                .config("delta_stop", json!(5.0))
                .config("delta_step", json!(0.5))
                .config("horizon", json!(horizon))
                .config("trials", json!(trials))
                .config("seed", json!(seed))
                .columns(["delta", "lower_bound", "simulated_mean", "simulated_stderr", "upper_bound"]);
            for k in 0..=10 {
                let delta = k as f64 * 0.5;
                let config = config_for(&h, &[0.0; 2], &c, delta)?;
                let pair = bound_pair(&config);
                let est = estimate_growth_rate(&config, horizon, trials, seed)?;
                report.row(vec![
                    Cell::Float(delta),
                    Cell::Float(pair.lower),
                    Cell::Float(est.mean_rate),
                    Cell::Float(est.std_error),
                    Cell::Float(pair.upper),
                ]);
            }
            Ok(report)
        }

        Command::Bounds {
            rates,
            delta,
            sweep,
        } => {
            let mut report = Report::new("bounds");
            report
                .config("h", json!(rates.h))
                .config("c", json!(rates.c))
                .config("delta", json!(delta))
                .config("sweep", json!(sweep.as_ref().map(|s| format!("{}:{}:{}:{}", s.param, s.start, s.stop, s.step))))
                .columns(["delta", "lower_bound", "upper_bound", "zero_delay_rate"]);
            for d in delta_grid(delta, &sweep) {
                let config = config_for(&rates.h, &vec![0.0; rates.h.len()], &rates.c, d)?;
                let pair = bound_pair(&config);
                report.row(vec![
                    Cell::Float(d),
                    Cell::Float(pair.lower),
                    Cell::Float(pair.upper),
                    Cell::Float(pair.zero_delay),
                ]);
            }
            Ok(report)
        }

        Command::Classify {
            rates,
            adversary,
            delta,
            sweep,
            refine,
            horizon,
            trials,
            seed,
            confidence,
        } => {
            let mut report = Report::new("classify");
            report
                .config("h", json!(rates.h))
                .config("b", json!(adversary.b))
                .config("c", json!(rates.c))
                .config("delta", json!(delta))
                .config("sweep", json!(sweep.as_ref().map(|s| format!("{}:{}:{}:{}", s.param, s.start, s.stop, s.step))))
                .config("refine", json!(refine));
            if refine {
                report
                    .config("horizon", json!(horizon))
                    .config("trials", json!(trials))
                    .config("seed", json!(seed))
                    .config("confidence", json!(confidence));
                report.columns([
                    "delta",
                    "lambda_a",
                    "lower_bound",
                    "upper_bound",
                    "verdict",
                    "simulated_mean",
                    "simulated_stderr",
                ]);
            } else {
                report.columns(["delta", "lambda_a", "lower_bound", "upper_bound", "verdict"]);
            }
            for d in delta_grid(delta, &sweep) {
                let config = config_for(&rates.h, &adversary.b, &rates.c, d)?;
                let verdict = if refine {
                    classify_with_simulation(
                        &config,
                        SimulationRefinement {
                            horizon,
                            trials,
                            seed,
                            confidence_sigmas: confidence,
                        },
                    )?
                } else {
                    classify(&config)
                };
                let mut row = vec![
                    Cell::Float(d),
                    Cell::Float(verdict.lambda_a),
                    Cell::Float(verdict.bounds.lower),
                    Cell::Float(verdict.bounds.upper),
                    Cell::Text(verdict.verdict.to_string()),
                ];
                if refine {
                    match &verdict.simulated {
                        Some(est) => {
                            row.push(Cell::Float(est.mean_rate));
                            row.push(Cell::Float(est.std_error));
                        }
                        None => {
                            row.push(Cell::Empty);
                            row.push(Cell::Empty);
                        }
                    }
                }
                report.row(row);
            }
            Ok(report)
        }

        Command::Growth {
            h,
            c,
            delta,
            horizon,
            trials,
            seed,
            sweep,
            trace,
        } => {
            let mut report = Report::new("growth");
            report
                .config("h", json!(h))
                .config("c", json!(c))
                .config("delta", json!(delta))
                .config("sweep", json!(sweep.as_ref().map(|s| format!("{}:{}:{}:{}", s.param, s.start, s.stop, s.step))))
                .config("trace", json!(trace.as_ref().map(|p| p.display().to_string())));
            report.columns(["delta", "mean_rate", "std_error", "trials", "horizon"]);
            match trace {
                Some(path) => {
                    let file = fs::File::open(&path)
                        .map_err(|e| CliError::Runtime(format!("--trace {}: {e}", path.display())))?;
                    let fixture: ArrivalTrace =
                        read_trace_text(std::io::BufReader::new(file), horizon)?;
                    report
                        .config("horizon", json!(fixture.horizon()))
                        .config("events", json!(fixture.len()));
                    for d in delta_grid(delta, &sweep) {
                        let rate = fully_delayed_chain_rate(&fixture, d, &c)?;
                        report.row(vec![
                            Cell::Float(d),
                            Cell::Float(rate),
                            Cell::Float(0.0),
                            Cell::Int(1),
                            Cell::Float(fixture.horizon()),
                        ]);
                    }
                }
                None => {
                    let h = h.ok_or_else(|| {
                        CliError::Usage("--h is required unless --trace is given".to_string())
                    })?;
                    let horizon = horizon.unwrap_or(1000.0);
                    report
                        .config("horizon", json!(horizon))
                        .config("trials", json!(trials))
                        .config("seed", json!(seed));
                    for d in delta_grid(delta, &sweep) {
                        let config = config_for(&h, &vec![0.0; h.len()], &c, d)?;
                        let est = estimate_growth_rate(&config, horizon, trials, seed)?;
                        report.row(vec![
                            Cell::Float(d),
                            Cell::Float(est.mean_rate),
                            Cell::Float(est.std_error),
                            Cell::Int(est.trials as u64),
                            Cell::Float(est.horizon),
                        ]);
                    }
                }
            }
            Ok(report)
        }

        Command::Attack {
            rates,
            adversary,
            delta,
            horizon,
            reveal,
            trials,
            seed,
        } => {
            let reveal_time = reveal.unwrap_or(horizon);
            let config = config_for(&rates.h, &adversary.b, &rates.c, delta)?;
            let pair = bound_pair(&config);
            let res = simulate_private_attack(&config, horizon, reveal_time, trials, seed)?;
            let mut report = Report::new("attack");
            report
                .config("h", json!(rates.h))
                .config("b", json!(adversary.b))
                .config("c", json!(rates.c))
                .config("delta", json!(delta))
                .config("horizon", json!(horizon))
                .config("reveal", json!(reveal_time))
                .config("trials", json!(trials))
                .config("seed", json!(seed))
                .config("lambda_a", json!(adversary_rate(&config)))
                .config("lower_bound", json!(pair.lower))
                .config("upper_bound", json!(pair.upper))
                .columns(["reveal_time", "horizon", "trials", "adversary_wins", "win_fraction"]);
            report.row(vec![
                Cell::Float(res.reveal_time),
                Cell::Float(res.horizon),
                Cell::Int(res.trials as u64),
                Cell::Int(res.adversary_wins as u64),
                Cell::Float(res.win_fraction),
            ]);
            Ok(report)
        }

        Command::Cost { rates, prices, c1 } => {
            let price_vec = PriceVector::new(prices.clone())?;
            let res = min_attack_cost(&rates.h, &rates.c, &price_vec)?;
            let n = rates.h.len();
            let mut report = Report::new("cost");
            report
                .config("h", json!(rates.h))
                .config("c", json!(rates.c))
                .config("prices", json!(prices))
                .config("c1", json!(c1));
            let mut cols = vec!["cost".to_string()];
            cols.extend((1..=n).map(|i| format!("b_{i}")));
            if c1.is_some() {
                cols.extend((1..=n).map(|i| format!("optimal_c_{i}")));
            }
            report.columns(cols);
            let mut row = vec![Cell::Float(res.cost)];
            row.extend(res.allocation.iter().map(|&b| Cell::Float(b)));
            if let Some(c1) = c1 {
                let opt = optimal_score_constants(&price_vec, c1)?;
                row.extend(opt.iter().map(|&c| Cell::Float(c)));
            }
            report.row(row);
            Ok(report)
        }

        Command::Difficulty {
            kappa,
            d1,
            simulate,
            d,
            q,
            reward,
            elasticity,
            min_fraction,
            step_down,
            epoch_length,
            epochs,
            seed,
        } => {
            if !simulate {
                let d1 = d1.ok_or_else(|| {
                    CliError::Usage("--d1 is required unless --simulate is given".to_string())
                })?;
                let diffs = relative_difficulty(d1, &kappa)?;
                let n = kappa.len();
                let mut report = Report::new("difficulty");
                report
                    .config("kappa", json!(kappa))
                    .config("d1", json!(d1))
                    .columns((1..=n).map(|i| format!("d_{i}")));
                report.row(diffs.iter().map(|&v| Cell::Float(v)).collect());
                return Ok(report);
            }

            let initial_difficulties = match (d, d1) {
                (Some(d), _) => d,
                (None, Some(d1)) => relative_difficulty(d1, &kappa)?,
                (None, None) => {
                    return Err(CliError::Usage(
                        "--simulate needs --d (initial difficulties) or --d1".to_string(),
                    ))
                }
            };
            let initial_hashrates = q.ok_or_else(|| {
                CliError::Usage("--simulate needs --q (initial hashrates)".to_string())
            })?;
            let params = AdjustmentParams {
                epoch_length,
                min_fraction,
                step_down,
                block_reward: reward,
                initial_difficulties,
                cost_per_hash: kappa.clone(),
                initial_hashrates,
                elasticity,
                epochs,
            };
            let series = simulate_difficulty_adjustment(&params, seed)?;
            let n = kappa.len();
            let mut report = Report::new("difficulty");
            report
                .config("kappa", json!(kappa))
                .config("d", json!(params.initial_difficulties))
                .config("q", json!(params.initial_hashrates))
                .config("reward", json!(reward))
                .config("elasticity", json!(elasticity))
                .config("min_fraction", json!(min_fraction))
                .config("step_down", json!(step_down))
                .config("epoch_length", json!(epoch_length))
                .config("epochs", json!(epochs))
                .config("seed", json!(seed));
            let mut cols = vec!["epoch".to_string()];
            cols.extend((1..=n).map(|i| format!("d_{i}")));
            cols.extend((1..=n).map(|i| format!("fraction_{i}")));
            cols.extend((1..=n).map(|i| format!("hashrate_{i}")));
            report.columns(cols);
            for rec in &series {
                let mut row = vec![Cell::Int(rec.epoch as u64)];
                row.extend(rec.difficulties.iter().map(|&v| Cell::Float(v)));
                row.extend(rec.fractions.iter().map(|&v| Cell::Float(v)));
                row.extend(rec.hashrates.iter().map(|&v| Cell::Float(v)));
                report.row(row);
            }
            Ok(report)
        }

        Command::Backdoor { n, p, trials, seed } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".to_string()));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Usage(format!("--p must be in [0, 1], got {p}")));
            }
            if trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".to_string()));
            }
            let exact = backdoor_insecurity_probability(n, p);
            let mc = backdoor_monte_carlo(n, p, trials, seed);
            let mut report = Report::new("backdoor");
            report
                .config("n", json!(n))
                .config("p", json!(p))
                .config("trials", json!(trials))
                .config("seed", json!(seed))
                .columns(["n", "p", "exact", "estimate", "std_error", "trials"]);
            report.row(vec![
                Cell::Int(n as u64),
                Cell::Float(p),
                Cell::Float(exact),
                Cell::Float(mc.estimate),
                Cell::Float(mc.std_error),
                Cell::Int(mc.trials as u64),
            ]);
            Ok(report)
        }
    }
}

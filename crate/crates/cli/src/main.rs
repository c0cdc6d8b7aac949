//! `credal` — file-based front end for the uncertainty representations in
//! credal-core: validation, conversions, exact lower/upper probabilities,
//! monotonicity analysis and CSV plot data.

mod model;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use credal_core::chateauneuf::cloud_lower_via_transport;
use credal_core::cloudops::{
    cloud_to_genpbox, cloud_to_randomset, find_2monotone_violation, genpbox_to_cloud, is_nonempty,
    outer_bounds,
};
use credal_core::continuous::{alpha_focal, discretize, pbox_focal};
use credal_core::credal::{
    is_2_monotone, lower_prob_function, lp_lower, lp_upper, mobius_transform, LpResult,
    DEFAULT_PAIR_SCAN_CAP, DEFAULT_SET_FUNCTION_CAP,
};
use credal_core::intervals::{intervals_to_cloud, intervals_to_genpbox, DEFAULT_EXTENSION_CAP};
use credal_core::rational::{parse_rat, to_decimal_string, to_f64, Rat};
use credal_core::{
    cloud_constraints, possibility_constraints, Cloud, CredalConstraints, EventSet, OutcomeSpace,
    TwoMonotone,
};
use model::{parse_model, serialize_model, ModelDocument};

#[derive(Parser)]
#[command(
    name = "credal",
    version,
    about = "Clouds, possibility distributions, p-boxes, probability intervals and random sets with exact arithmetic"
)]
struct Cli {
    /// Print rationals rounded to this many decimal places instead of p/q.
    #[arg(long, global = true, value_name = "K")]
    decimal: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model file against its representation invariants.
    Validate { model: PathBuf },
    /// Decide whether the model's credal set is non-empty.
    Nonempty { model: PathBuf },
    /// Print the event-wise probability bounds defining the credal set.
    Constraints { model: PathBuf },
    /// Convert between representations.
    Convert {
        model: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        /// Write the converted model as JSON in addition to the listing.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact lower probability of one or more events.
    Lowprob {
        model: PathBuf,
        #[arg(long)]
        event: Option<String>,
        /// File with one comma-separated event per line.
        #[arg(long)]
        event_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Lp)]
        oracle: Oracle,
    },
    /// Exact upper probability of one or more events.
    Upprob {
        model: PathBuf,
        #[arg(long)]
        event: Option<String>,
        #[arg(long)]
        event_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Lp)]
        oracle: Oracle,
    },
    /// Exact lower probability on every event of the space.
    LowprobAll { model: PathBuf },
    /// Check n-monotonicity of the induced lower probability.
    Monotone {
        model: PathBuf,
        #[arg(long, value_enum)]
        order: MonotoneOrder,
    },
    /// Search for a 2-monotonicity violation of a cloud's lower probability.
    Violation { model: PathBuf },
    /// Probability bounds for events by the chosen method.
    Bounds {
        model: PathBuf,
        #[arg(long)]
        event: Option<String>,
        #[arg(long)]
        event_file: Option<PathBuf>,
        #[arg(long, value_enum)]
        method: BoundsMethod,
    },
    /// Transform a probability-interval model into a cloud or p-box.
    FromIntervals {
        model: PathBuf,
        #[arg(long, value_enum)]
        method: IntervalMethod,
        /// Total order (comma-separated labels) for the order method.
        #[arg(long)]
        order: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Round a continuous cloud onto an equidistant level grid.
    Discretize {
        model: PathBuf,
        #[arg(long)]
        levels: usize,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// The alpha-focal set of a continuous cloud (or p-box with --pbox).
    Focal {
        model: PathBuf,
        #[arg(long)]
        alpha: String,
        /// Read (delta, pi) as the cumulative pair (flow, fhigh).
        #[arg(long)]
        pbox: bool,
    },
    /// Write plot data as CSV.
    PlotData {
        model: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Uniform sample count for continuous models.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Genpbox,
    Cloud,
    Randomset,
    PossibilityPair,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Lp,
    Transport,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MonotoneOrder {
    #[value(name = "2")]
    Two,
    Inf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundsMethod {
    Outer,
    Inner,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IntervalMethod {
    MassonDenoeux,
    Order,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Inner,
    Outer,
    Both,
}

struct Caps {
    set_function: usize,
    pair_scan: usize,
    extensions: usize,
}

fn caps() -> Result<Caps> {
    let mut caps = Caps {
        set_function: DEFAULT_SET_FUNCTION_CAP,
        pair_scan: DEFAULT_PAIR_SCAN_CAP,
        extensions: DEFAULT_EXTENSION_CAP,
    };
    if let Ok(raw) = std::env::var("CREDAL_LP_CAP") {
        let cap: usize = raw
            .parse()
            .map_err(|_| anyhow!("CREDAL_LP_CAP must be an unsigned integer, got {raw:?}"))?;
        caps.set_function = cap;
        caps.pair_scan = cap;
        caps.extensions = cap;
    }
    Ok(caps)
}

/// Emptiness discovered mid-operation is a finding (exit 1), not an error.
fn empty_finding(err: &credal_core::Error) -> bool {
    matches!(
        err,
        credal_core::Error::EmptyCredalSet | credal_core::Error::EmptyFocal(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<ModelDocument> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_model(&text).with_context(|| format!("invalid model {}", path.display()))
}

struct Printer {
    decimal: Option<usize>,
}

impl Printer {
    fn rat(&self, r: &Rat) -> String {
        match self.decimal {
            Some(places) => to_decimal_string(r, places),
            None => r.to_string(),
        }
    }
}

fn parse_event(space: &OutcomeSpace, text: &str) -> Result<EventSet> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(space.empty_event());
    }
    Ok(space.event(trimmed.split(',').map(str::trim))?)
}

fn gather_events(
    space: &OutcomeSpace,
    event: &Option<String>,
    event_file: &Option<PathBuf>,
) -> Result<Vec<EventSet>> {
    match (event, event_file) {
        (Some(text), None) => Ok(vec![parse_event(space, text)?]),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            text.lines()
                .filter(|line| !line.trim().is_empty())
                .map(|line| parse_event(space, line))
                .collect()
        }
        _ => bail!("specify exactly one of --event or --event-file"),
    }
}

/// The constraint rows describing the model's credal set, for the kinds
/// that have a finite row representation.
fn constraint_rows(model: &ModelDocument) -> Result<CredalConstraints> {
    match model {
        ModelDocument::Cloud(c) => Ok(cloud_constraints(c)),
        ModelDocument::Possibility(p) => Ok(possibility_constraints(p)),
        ModelDocument::GenPbox(g) => Ok(g.constraints()),
        ModelDocument::ProbIntervals(i) => Ok(i.constraints()),
        other => bail!("constraints are not defined for {} models", other.kind()),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let printer = Printer {
        decimal: cli.decimal,
    };
    match cli.command {
        Command::Validate { model } => {
            let doc = load(&model)?;
            match doc.space() {
                Some(space) => println!("valid {} model ({} elements)", doc.kind(), space.len()),
                None => println!("valid {} model", doc.kind()),
            }
            Ok(0)
        }
        Command::Nonempty { model } => {
            let doc = load(&model)?;
            let nonempty = match &doc {
                ModelDocument::Cloud(c) => is_nonempty(c),
                // Validated possibility distributions, p-boxes, probability
                // intervals and random sets always have non-empty credal
                // sets, as do continuous clouds (the thin-cloud witness).
                _ => true,
            };
            if nonempty {
                println!("non-empty credal set");
                Ok(0)
            } else {
                println!("empty credal set");
                Ok(1)
            }
        }
        Command::Constraints { model } => {
            let doc = load(&model)?;
            let constraints = constraint_rows(&doc)?;
            let space = constraints.space();
            for row in constraints.rows() {
                println!(
                    "{} <= P({}) <= {}",
                    printer.rat(&row.lo),
                    space.format_event(row.event),
                    printer.rat(&row.hi),
                );
            }
            Ok(0)
        }
        Command::Convert { model, to, output } => {
            let doc = load(&model)?;
            let converted = match convert(&doc, to) {
                Ok(c) => c,
                Err(err) => match err.downcast_ref::<credal_core::Error>() {
                    Some(e) if empty_finding(e) => {
                        println!("empty credal set");
                        return Ok(1);
                    }
                    _ => return Err(err),
                },
            };
            print_conversion(&printer, &converted);
            if let Some(path) = output {
                let payload = match &converted {
                    Converted::One(m) => serialize_model(m),
                    Converted::Pair(a, b) => {
                        format!("[{},\n{}]", serialize_model(a), serialize_model(b))
                    }
                };
                fs::write(&path, payload + "\n")
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(0)
        }
        Command::Lowprob {
            model,
            event,
            event_file,
            oracle,
        } => {
            let doc = load(&model)?;
            probability_query(&printer, &doc, &event, &event_file, oracle, false)
        }
        Command::Upprob {
            model,
            event,
            event_file,
            oracle,
        } => {
            let doc = load(&model)?;
            probability_query(&printer, &doc, &event, &event_file, oracle, true)
        }
        Command::LowprobAll { model } => {
            let doc = load(&model)?;
            let caps = caps()?;
            if let ModelDocument::RandomSet(mass) = &doc {
                let n = mass.space().len();
                if n > caps.set_function {
                    bail!(
                        "problem size {n} exceeds the configured cap {}",
                        caps.set_function
                    );
                }
                for event in mass.space().all_events() {
                    println!(
                        "{}\t{}",
                        mass.space().format_event(event),
                        printer.rat(&mass.bel(event))
                    );
                }
                return Ok(0);
            }
            let constraints = constraint_rows(&doc)?;
            let f = match lower_prob_function(&constraints, caps.set_function) {
                Ok(f) => f,
                Err(e) if empty_finding(&e) => {
                    println!("empty credal set");
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            let space = constraints.space();
            for event in space.all_events() {
                println!(
                    "{}\t{}",
                    space.format_event(event),
                    printer.rat(f.value(event))
                );
            }
            Ok(0)
        }
        Command::Monotone { model, order } => {
            let doc = load(&model)?;
            let caps = caps()?;
            let f = match &doc {
                ModelDocument::RandomSet(mass) => {
                    let n = mass.space().len();
                    if n > caps.set_function {
                        bail!(
                            "problem size {n} exceeds the configured cap {}",
                            caps.set_function
                        );
                    }
                    mass.bel_function()
                }
                _ => {
                    let constraints = constraint_rows(&doc)?;
                    match lower_prob_function(&constraints, caps.set_function) {
                        Ok(f) => f,
                        Err(e) if empty_finding(&e) => {
                            println!("empty credal set");
                            return Ok(1);
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            };
            let space = f.space().clone();
            match order {
                MonotoneOrder::Two => match is_2_monotone(&f, caps.pair_scan)? {
                    TwoMonotone::Yes => {
                        println!("2-monotone");
                        Ok(0)
                    }
                    TwoMonotone::CounterExample(a, b) => {
                        println!(
                            "not 2-monotone: A={} B={}",
                            space.format_event(a),
                            space.format_event(b)
                        );
                        Ok(1)
                    }
                },
                MonotoneOrder::Inf => {
                    let masses = mobius_transform(&f);
                    match masses
                        .iter()
                        .find(|(_, m)| m < &Rat::from_integer(0.into()))
                    {
                        None => {
                            println!("infinity-monotone (belief function)");
                            Ok(0)
                        }
                        Some((event, mass)) => {
                            println!(
                                "not infinity-monotone: m({}) = {}",
                                space.format_event(*event),
                                printer.rat(mass)
                            );
                            Ok(1)
                        }
                    }
                }
            }
        }
        Command::Violation { model } => {
            let doc = load(&model)?;
            let ModelDocument::Cloud(cloud) = &doc else {
                bail!(
                    "violation search applies to cloud models, got {}",
                    doc.kind()
                );
            };
            let caps = caps()?;
            let found = match find_2monotone_violation(cloud, caps.set_function, caps.pair_scan) {
                Ok(found) => found,
                Err(e) if empty_finding(&e) => {
                    println!("empty credal set");
                    return Ok(1);
                }
                Err(e) => return Err(e.into()),
            };
            match found {
                None => {
                    println!("no 2-monotonicity violation");
                    Ok(0)
                }
                Some((a, b)) => {
                    let space = cloud.space();
                    println!(
                        "violation: A={} B={}",
                        space.format_event(a),
                        space.format_event(b)
                    );
                    Ok(1)
                }
            }
        }
        Command::Bounds {
            model,
            event,
            event_file,
            method,
        } => {
            let doc = load(&model)?;
            let ModelDocument::Cloud(cloud) = &doc else {
                bail!("bounds apply to cloud models, got {}", doc.kind());
            };
            let events = gather_events(cloud.space(), &event, &event_file)?;
            match method {
                BoundsMethod::Outer => {
                    for event in events {
                        let (lo, hi) = outer_bounds(cloud, event);
                        println!("[{}, {}]", printer.rat(&lo), printer.rat(&hi));
                    }
                }
                BoundsMethod::Inner => {
                    let mass = match cloud_to_randomset(cloud) {
                        Ok(m) => m,
                        Err(e) if empty_finding(&e) => {
                            println!("empty credal set");
                            return Ok(1);
                        }
                        Err(e) => return Err(e.into()),
                    };
                    for event in events {
                        println!(
                            "[{}, {}]",
                            printer.rat(&mass.bel(event)),
                            printer.rat(&mass.pl(event))
                        );
                    }
                }
                BoundsMethod::Exact => {
                    let constraints = cloud_constraints(cloud);
                    for event in events {
                        let lo = lp_lower(&constraints, event);
                        let hi = lp_upper(&constraints, event);
                        match (lo, hi) {
                            (LpResult::Feasible(lo), LpResult::Feasible(hi)) => {
                                println!("[{}, {}]", printer.rat(&lo), printer.rat(&hi));
                            }
                            _ => {
                                println!("empty credal set");
                                return Ok(1);
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::FromIntervals {
            model,
            method,
            order,
            output,
        } => {
            let doc = load(&model)?;
            let ModelDocument::ProbIntervals(intervals) = &doc else {
                bail!(
                    "from-intervals applies to probintervals models, got {}",
                    doc.kind()
                );
            };
            let caps = caps()?;
            let converted = match method {
                IntervalMethod::MassonDenoeux => {
                    if order.is_some() {
                        bail!("--order is only meaningful with --method order");
                    }
                    Converted::One(ModelDocument::Cloud(intervals_to_cloud(
                        intervals,
                        caps.extensions,
                    )?))
                }
                IntervalMethod::Order => {
                    let text = order.ok_or_else(|| anyhow!("--method order requires --order"))?;
                    let space = intervals.space();
                    let indices = text
                        .split(',')
                        .map(|label| Ok(space.index_of(label.trim())?))
                        .collect::<Result<Vec<usize>>>()?;
                    Converted::One(ModelDocument::GenPbox(intervals_to_genpbox(
                        intervals, &indices,
                    )?))
                }
            };
            print_conversion(&printer, &converted);
            if let Some(path) = output {
                let Converted::One(m) = &converted else {
                    unreachable!()
                };
                fs::write(&path, serialize_model(m) + "\n")
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(0)
        }
        Command::Discretize {
            model,
            levels,
            side,
        } => {
            let doc = load(&model)?;
            let ModelDocument::ContinuousCloud(cloud) = &doc else {
                bail!(
                    "discretize applies to continuous_cloud models, got {}",
                    doc.kind()
                );
            };
            let disc = discretize(cloud, levels)?;
            let print_side = |name: &str, cloud: &Cloud| {
                println!("{name}:");
                for (i, cell) in disc.cells.iter().enumerate() {
                    println!(
                        "  {}\t{}\tdelta={}\tpi={}",
                        disc.space.label(i),
                        cell,
                        printer.rat(cloud.delta(i)),
                        printer.rat(cloud.pi(i)),
                    );
                }
            };
            if side == Side::Outer || side == Side::Both {
                print_side("outer", &disc.outer);
            }
            if side == Side::Inner || side == Side::Both {
                match &disc.inner {
                    Some(inner) => print_side("inner", inner),
                    None => println!("inner: empty credal set (rounded delta exceeds pi)"),
                }
            }
            Ok(0)
        }
        Command::Focal { model, alpha, pbox } => {
            let doc = load(&model)?;
            let ModelDocument::ContinuousCloud(cloud) = &doc else {
                bail!(
                    "focal applies to continuous_cloud models, got {}",
                    doc.kind()
                );
            };
            let alpha = parse_rat(&alpha)?;
            if pbox {
                let iv = pbox_focal(cloud.delta(), cloud.pi(), &alpha)?;
                println!("{iv}");
            } else {
                let focal = alpha_focal(cloud, &alpha)?;
                println!("{focal}");
            }
            Ok(0)
        }
        Command::PlotData {
            model,
            output,
            samples,
        } => {
            let doc = load(&model)?;
            let csv = plot_data(&doc, samples)?;
            fs::write(&output, csv)
                .with_context(|| format!("cannot write {}", output.display()))?;
            Ok(0)
        }
    }
}

enum Converted {
    One(ModelDocument),
    Pair(ModelDocument, ModelDocument),
}

fn convert(doc: &ModelDocument, to: ConvertTarget) -> Result<Converted> {
    match (doc, to) {
        (ModelDocument::Cloud(c), ConvertTarget::Genpbox) => {
            Ok(Converted::One(ModelDocument::GenPbox(cloud_to_genpbox(c)?)))
        }
        (ModelDocument::Cloud(c), ConvertTarget::Randomset) => Ok(Converted::One(
            ModelDocument::RandomSet(cloud_to_randomset(c)?),
        )),
        (ModelDocument::Cloud(c), ConvertTarget::PossibilityPair) => {
            let (upper, complement) = c.possibility_pair();
            Ok(Converted::Pair(
                ModelDocument::Possibility(upper),
                ModelDocument::Possibility(complement),
            ))
        }
        (ModelDocument::GenPbox(g), ConvertTarget::Cloud) => {
            Ok(Converted::One(ModelDocument::Cloud(genpbox_to_cloud(g))))
        }
        (ModelDocument::Possibility(p), ConvertTarget::Randomset) => Ok(Converted::One(
            ModelDocument::RandomSet(credal_core::chateauneuf::possibility_to_randomset(p)),
        )),
        (doc, _) => bail!("cannot convert a {} model to that target", doc.kind()),
    }
}

fn print_conversion(printer: &Printer, converted: &Converted) {
    match converted {
        Converted::One(ModelDocument::RandomSet(mass)) => {
            for (event, m) in mass.focal() {
                println!(
                    "m({}) = {}",
                    mass.space().format_event(*event),
                    printer.rat(m)
                );
            }
        }
        Converted::One(ModelDocument::GenPbox(g)) => {
            let space = g.space();
            for i in 0..space.len() {
                println!(
                    "{}\tflow={}\tfhigh={}",
                    space.label(i),
                    printer.rat(g.flow(i)),
                    printer.rat(g.fhigh(i)),
                );
            }
            let classes: Vec<String> = g
                .preorder()
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|&i| space.label(i))
                        .collect::<Vec<_>>()
                        .join("=")
                })
                .collect();
            println!("preorder: {}", classes.join(" < "));
        }
        Converted::One(ModelDocument::Cloud(c)) => {
            let space = c.space();
            for i in 0..space.len() {
                println!(
                    "{}\tdelta={}\tpi={}",
                    space.label(i),
                    printer.rat(c.delta(i)),
                    printer.rat(c.pi(i)),
                );
            }
        }
        Converted::One(ModelDocument::Possibility(p)) => {
            let space = p.space();
            for i in 0..space.len() {
                println!("{}\tpi={}", space.label(i), printer.rat(p.value(i)));
            }
        }
        Converted::One(other) => println!("converted to {} model", other.kind()),
        Converted::Pair(ModelDocument::Possibility(upper), ModelDocument::Possibility(lower)) => {
            let space = upper.space();
            for i in 0..space.len() {
                println!(
                    "{}\tpi={}\tone_minus_delta={}",
                    space.label(i),
                    printer.rat(upper.value(i)),
                    printer.rat(lower.value(i)),
                );
            }
        }
        Converted::Pair(..) => println!("converted to a model pair"),
    }
}

fn probability_query(
    printer: &Printer,
    doc: &ModelDocument,
    event: &Option<String>,
    event_file: &Option<PathBuf>,
    oracle: Oracle,
    upper: bool,
) -> Result<u8> {
    if oracle == Oracle::Transport {
        let ModelDocument::Cloud(cloud) = doc else {
            bail!(
                "the transport oracle applies to cloud models, got {}",
                doc.kind()
            );
        };
        let events = gather_events(cloud.space(), event, event_file)?;
        for ev in events {
            let queried = if upper { ev.complement() } else { ev };
            match cloud_lower_via_transport(cloud, queried) {
                LpResult::Feasible(v) => {
                    let v = if upper {
                        Rat::from_integer(1.into()) - v
                    } else {
                        v
                    };
                    println!("{}", printer.rat(&v));
                }
                LpResult::Infeasible => {
                    println!("empty credal set");
                    return Ok(1);
                }
            }
        }
        return Ok(0);
    }

    if let ModelDocument::RandomSet(mass) = doc {
        let events = gather_events(mass.space(), event, event_file)?;
        for ev in events {
            let v = if upper { mass.pl(ev) } else { mass.bel(ev) };
            println!("{}", printer.rat(&v));
        }
        return Ok(0);
    }

    let constraints = constraint_rows(doc)?;
    let events = gather_events(constraints.space(), event, event_file)?;
    for ev in events {
        let result = if upper {
            lp_upper(&constraints, ev)
        } else {
            lp_lower(&constraints, ev)
        };
        match result {
            LpResult::Feasible(v) => println!("{}", printer.rat(&v)),
            LpResult::Infeasible => {
                println!("empty credal set");
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn plot_data(doc: &ModelDocument, samples: usize) -> Result<String> {
    let discrete = |space: &OutcomeSpace, delta: &[Rat], pi: &[Rat]| -> String {
        let mut out = String::from("element,delta,pi\n");
        for i in 0..space.len() {
            out.push_str(&format!(
                "{},{},{}\n",
                space.label(i),
                to_f64(&delta[i]),
                to_f64(&pi[i])
            ));
        }
        out
    };
    match doc {
        ModelDocument::Cloud(c) => Ok(discrete(c.space(), c.delta_values(), c.pi_values())),
        ModelDocument::Possibility(p) => {
            let zeros = vec![Rat::from_integer(0.into()); p.space().len()];
            Ok(discrete(p.space(), &zeros, p.values()))
        }
        ModelDocument::GenPbox(g) => {
            let cloud = genpbox_to_cloud(g);
            Ok(discrete(
                cloud.space(),
                cloud.delta_values(),
                cloud.pi_values(),
            ))
        }
        ModelDocument::ContinuousCloud(c) => {
            if samples == 0 {
                bail!("--samples must be positive");
            }
            let (lo, hi) = c.support();
            let span = hi - lo;
            let mut xs: Vec<Rat> = (0..=samples)
                .map(|i| lo + &span * Rat::new(i.into(), samples.into()))
                .collect();
            for f in [c.delta(), c.pi()] {
                xs.extend(f.breakpoints().iter().map(|(x, _)| x.clone()));
            }
            xs.sort();
            xs.dedup();
            let mut out = String::from("x,delta,pi\n");
            for x in &xs {
                out.push_str(&format!(
                    "{},{},{}\n",
                    to_f64(x),
                    to_f64(&c.delta().eval(x)),
                    to_f64(&c.pi().eval(x))
                ));
            }
            Ok(out)
        }
        other => bail!("plot data is not defined for {} models", other.kind()),
    }
}

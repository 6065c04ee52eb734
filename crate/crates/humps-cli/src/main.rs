//! Command line surface: counting tables, listings, per-path statistics,
//! both directions of the hump-marking map, identity verification, and
//! ASCII or SVG drawings.
//!
//! Output is JSON lines by default (`--csv` switches to CSV); exact counts
//! are printed as decimal strings. Exit codes: 0 success, 1 failed checks,
//! 2 usage, 3 enumeration cap exceeded, 4 domain error.

mod figures;
mod output;
mod records;
mod suites;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use humps::bijection::{find_split_backward, phi, psi, BijectionError};
use humps::enumeration::{
    count_by_enumeration, enumerate, enumerate_marked, ClassPattern, EnumCaps, EnumError,
    KindPattern, MarkedPath,
};
use humps::formulas::{
    catalan, motzkin, super_dyck_count, super_motzkin_count, super_schroeder_count, BigCount,
};
use humps::render::{render_ascii, render_svg, Annotation};
use humps::stats::{classify, humps as list_humps, run_word, valleys};
use humps::{Family, FamilyKind, StepSeq};

use output::{emit, Failure, EXIT_CHECK_FAILED};
use records::{BackwardRecord, CountRecord, ForwardRecord, PathRecord, RenderRecord, StatsRecord};
use suites::Scope;

#[derive(Parser)]
#[command(
    name = "humps",
    version,
    about = "Lattice path counting, listing, statistics, the hump bijection, and drawings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count family members per order, by closed form, enumeration, or both.
    Count(CountArgs),
    /// List every member of a family at one order.
    Enumerate(EnumerateArgs),
    /// Per-path statistics: step counts, heights, class, humps, valleys.
    Stats(StatsArgs),
    /// Map a marked path forward and report the image and its cut points.
    Phi(PhiArgs),
    /// Pull an up-first path back and report the recovered mark.
    Psi(PsiArgs),
    /// Run a verification suite and summarize checked cases and failures.
    Verify(VerifyArgs),
    /// Draw one path as ASCII art or SVG, with optional annotations.
    Render(RenderArgs),
}

/// Enumeration guard rails. Raise them explicitly (or via environment) for
/// bigger sweeps; anything above the cap exits with code 3.
#[derive(Args, Debug)]
struct CapArgs {
    /// Largest order enumerated for three-letter families.
    #[arg(long, env = "HUMPS_MOTZKIN_CAP", default_value_t = 14)]
    motzkin_cap: usize,
    /// Largest order enumerated for flat-free families.
    #[arg(long, env = "HUMPS_DYCK_CAP", default_value_t = 10)]
    dyck_cap: usize,
    /// Largest order enumerated for mixed-step families.
    #[arg(long, env = "HUMPS_SCHROEDER_CAP", default_value_t = 8)]
    schroeder_cap: usize,
}

impl CapArgs {
    fn caps(&self) -> EnumCaps {
        EnumCaps {
            motzkin_steps: self.motzkin_cap,
            dyck_order: self.dyck_cap,
            schroeder_order: self.schroeder_cap,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct OrderRange {
    start: usize,
    end: usize,
}

fn parse_range(text: &str) -> Result<OrderRange, String> {
    if let Some((lo, hi)) = text.split_once("..") {
        let start = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range start {lo:?}"))?;
        let end = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range end {hi:?}"))?;
        if end < start {
            return Err(format!("range {text:?} runs backwards"));
        }
        Ok(OrderRange { start, end })
    } else {
        let n = text
            .trim()
            .parse()
            .map_err(|_| format!("bad order {text:?}"))?;
        Ok(OrderRange { start: n, end: n })
    }
}

fn parse_family(text: &str) -> Result<FamilyKind, String> {
    text.parse::<FamilyKind>().map_err(|_| {
        let names: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
        format!(
            "unknown family {text:?}; expected one of: {}",
            names.join(", ")
        )
    })
}

fn parse_kind_pattern(text: &str) -> Result<KindPattern, String> {
    match text.to_ascii_lowercase().as_str() {
        "all-flat" => Ok(KindPattern::AllFlat),
        "up-first" => Ok(KindPattern::UpFirst),
        "uu" => Ok(KindPattern::UpUp),
        "ud" => Ok(KindPattern::UpDown),
        "down-first" => Ok(KindPattern::DownFirst),
        other => Err(format!(
            "unknown class {other:?}; expected all-flat, up-first, uu, ud or down-first"
        )),
    }
}

#[derive(Args)]
struct CountArgs {
    /// Family name, e.g. motzkin or super-dyck.
    #[arg(value_parser = parse_family)]
    family: FamilyKind,
    /// Single order `n` or inclusive range `a..b`.
    #[arg(value_parser = parse_range)]
    orders: OrderRange,
    /// Closed form only.
    #[arg(long, conflicts_with_all = ["enumerate", "both"])]
    formula: bool,
    /// Brute-force enumeration only.
    #[arg(long, conflicts_with = "both")]
    enumerate: bool,
    /// Both values plus an agreement flag (the default).
    #[arg(long)]
    both: bool,
    #[command(flatten)]
    caps: CapArgs,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Family name, e.g. motzkin or super-dyck.
    #[arg(value_parser = parse_family)]
    family: FamilyKind,
    /// Order to list.
    order: usize,
    /// Emit one record per (path, hump) pair instead of per path.
    #[arg(long)]
    marked: bool,
    /// Keep only paths of this class.
    #[arg(long, value_parser = parse_kind_pattern)]
    class: Option<KindPattern>,
    /// Keep only paths with exactly this many humps.
    #[arg(long)]
    humps: Option<usize>,
    #[command(flatten)]
    caps: CapArgs,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct StatsArgs {
    /// Path texts over U, F, D, e.g. UUDFDD. `-` stands for the empty path.
    #[arg(required = true, num_args = 1..)]
    paths: Vec<String>,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct PhiArgs {
    /// Nonnegative path text ending at height 0.
    path: String,
    /// Which hump carries the mark, counted from the left, starting at 0.
    hump_index: usize,
    /// Write `PREFIX-source.svg` and `PREFIX-image.svg` with the cut points
    /// annotated.
    #[arg(long, value_name = "PREFIX")]
    svg: Option<String>,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct PsiArgs {
    /// Path text whose first non-flat step is U, ending at height 0.
    path: String,
    /// Write `PREFIX-image.svg` and `PREFIX-preimage.svg` with the cut
    /// points annotated.
    #[arg(long, value_name = "PREFIX")]
    svg: Option<String>,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which suite to run.
    #[arg(value_enum)]
    suite: SuiteName,
    /// Top order for sweeps over three-letter families.
    #[arg(long)]
    motzkin_max: Option<usize>,
    /// Top order for sweeps over flat-free families.
    #[arg(long)]
    dyck_max: Option<usize>,
    /// Top order for sweeps over mixed-step families.
    #[arg(long)]
    schroeder_max: Option<usize>,
    /// Top order for pure closed-form sweeps.
    #[arg(long)]
    n_max: Option<u64>,
    /// Largest flat-step palette for coloring sweeps.
    #[arg(long)]
    m_max: Option<u64>,
    #[command(flatten)]
    caps: CapArgs,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    /// Closed forms against brute-force counts for every family.
    Counts,
    /// Peak totals over flat-free paths, and their doubling into the super
    /// family size.
    #[value(alias = "eq1")]
    PeakTotals,
    /// Hump totals over three-letter paths against the half-of-super
    /// formula.
    MotzkinHumps,
    /// Bijection round trips, injectivity, and image characterization.
    #[value(alias = "theorem1")]
    RoundTrips,
    /// Hump-class sizes of the super flat-free family against closed forms.
    ClassCounts,
    /// Peak-count distribution computed two ways.
    Narayana,
    /// Hump totals over mixed-step paths against the half-of-super formula.
    SchroederHumps,
    /// Flat-coloring identity: both closed forms, peak expansion, and
    /// colored enumeration.
    #[value(alias = "schid")]
    ColoredIdentity,
    /// Every suite above at its default scope.
    All,
}

#[derive(Args)]
struct RenderArgs {
    /// Path text over U, F, D. `-` stands for the empty path.
    path: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
    format: RenderFormat,
    /// Circle this point (repeatable).
    #[arg(long = "circle", value_name = "POINT")]
    circles: Vec<usize>,
    /// Label a point, e.g. --label P=2 (repeatable).
    #[arg(long = "label", value_name = "NAME=POINT", value_parser = parse_label)]
    labels: Vec<(String, usize)>,
    /// Bracket a span of points, e.g. --span L2=1:3 (repeatable).
    #[arg(long = "span", value_name = "NAME=START:END", value_parser = parse_span)]
    spans: Vec<(String, usize, usize)>,
    /// Write the drawing to a file and report its name instead of embedding
    /// the text.
    #[arg(short = 'o', long = "output", value_name = "FILE")]
    output: Option<String>,
    /// Comma separated values instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

fn parse_label(text: &str) -> Result<(String, usize), String> {
    let (name, point) = text
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=POINT, got {text:?}"))?;
    let point = point
        .parse()
        .map_err(|_| format!("bad point in {text:?}"))?;
    Ok((name.to_string(), point))
}

fn parse_span(text: &str) -> Result<(String, usize, usize), String> {
    let (name, range) = text
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=START:END, got {text:?}"))?;
    let (start, end) = range
        .split_once(':')
        .ok_or_else(|| format!("expected START:END in {text:?}"))?;
    let start = start
        .parse()
        .map_err(|_| format!("bad start in {text:?}"))?;
    let end = end.parse().map_err(|_| format!("bad end in {text:?}"))?;
    Ok((name.to_string(), start, end))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(args) => run_count(args),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Stats(args) => run_stats(args),
        Command::Phi(args) => run_phi(args),
        Command::Psi(args) => run_psi(args),
        Command::Verify(args) => run_verify(args),
        Command::Render(args) => run_render(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(failure) => ExitCode::from(failure.report()),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_CHECK_FAILED,
        error: "Io".into(),
        detail: e.to_string(),
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Failure {
        Failure::cap(e)
    }
}

fn bijection_error_name(e: &BijectionError) -> &'static str {
    match e {
        BijectionError::NotNonnegativePath => "NotNonnegativePath",
        BijectionError::NotUStar => "NotUStar",
        BijectionError::NoHumpLeftOfB => "NoHumpLeftOfB",
        BijectionError::NotInImage => "NotInImage",
        BijectionError::PointNotLeftOfB { .. } => "PointNotLeftOfB",
    }
}

/// `-` means the empty path; everything else must parse as steps.
fn parse_path(text: &str) -> Result<StepSeq, Failure> {
    if text == "-" {
        return Ok(StepSeq::empty());
    }
    StepSeq::parse(text).map_err(|e| Failure::domain("InvalidPath", e))
}

fn closed_form(kind: FamilyKind, n: u64) -> BigCount {
    match kind {
        FamilyKind::Dyck => catalan(n),
        FamilyKind::Motzkin => motzkin(n),
        FamilyKind::Schroeder => suites::schroeder_count(n),
        FamilyKind::SuperDyck => super_dyck_count(n),
        FamilyKind::SuperMotzkin => super_motzkin_count(n),
        FamilyKind::SuperSchroeder => super_schroeder_count(n),
    }
}

fn run_count(args: CountArgs) -> Result<u8, Failure> {
    let caps = args.caps.caps();
    let with_formula = args.formula || args.both || !args.enumerate;
    let with_enumeration = args.enumerate || args.both || !args.formula;
    let mut records = Vec::new();
    let mut all_agree = true;
    for n in args.orders.start..=args.orders.end {
        let formula = with_formula.then(|| closed_form(args.family, n as u64).to_string());
        let enumerated = if with_enumeration {
            Some(count_by_enumeration(Family::new(args.family, n), &caps)?.to_string())
        } else {
            None
        };
        let agree = match (&formula, &enumerated) {
            (Some(f), Some(e)) => Some(f == e),
            _ => None,
        };
        if agree == Some(false) {
            all_agree = false;
        }
        records.push(CountRecord {
            family: args.family.name(),
            order: n,
            formula,
            enumerated,
            agree,
        });
    }
    emit(args.csv, records).map_err(io_failure)?;
    Ok(if all_agree { 0 } else { EXIT_CHECK_FAILED })
}

fn run_enumerate(args: EnumerateArgs) -> Result<u8, Failure> {
    let caps = args.caps.caps();
    let family = Family::new(args.family, args.order);
    let pattern = ClassPattern {
        kind: args.class,
        humps: args.humps,
    };
    if args.marked {
        let records = enumerate_marked(family, &caps)?
            .filter(|m| pattern.matches(&classify(m.path())))
            .enumerate()
            .map(|(i, m)| {
                let class = classify(m.path());
                PathRecord {
                    index: i as u64,
                    path: m.path().to_string(),
                    hump_index: Some(m.hump_index()),
                    hump_point: Some(m.hump().hump_point),
                    class: class.kind.name(),
                    humps: class.humps,
                }
            });
        emit(args.csv, records).map_err(io_failure)?;
    } else {
        let records = enumerate(family, &caps)?
            .filter(|p| pattern.matches(&classify(p)))
            .enumerate()
            .map(|(i, p)| {
                let class = classify(&p);
                PathRecord {
                    index: i as u64,
                    path: p.to_string(),
                    hump_index: None,
                    hump_point: None,
                    class: class.kind.name(),
                    humps: class.humps,
                }
            });
        emit(args.csv, records).map_err(io_failure)?;
    }
    Ok(0)
}

fn join(values: impl IntoIterator<Item = usize>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_stats(args: StatsArgs) -> Result<u8, Failure> {
    let mut records = Vec::new();
    for text in &args.paths {
        let p = parse_path(text)?;
        let profile = p.heights();
        let counts = p.counts();
        let class = classify(&p);
        let word = run_word(&p).ok();
        records.push(StatsRecord {
            path: p.to_string(),
            len: p.len(),
            up: counts.up,
            down: counts.down,
            flat: counts.flat,
            final_height: profile.final_height(),
            min_height: profile.min(),
            max_height: profile.max(),
            class: class.kind.name(),
            humps: class.humps,
            hump_points: join(list_humps(&p).iter().map(|h| h.hump_point)),
            valley_points: join(valleys(&p, false).iter().map(|v| v.valley_point)),
            up_runs: word.as_ref().map(|w| join(w.up_exponents())),
            down_runs: word.as_ref().map(|w| join(w.down_exponents())),
        });
    }
    emit(args.csv, records).map_err(io_failure)?;
    Ok(0)
}

fn run_phi(args: PhiArgs) -> Result<u8, Failure> {
    let path = parse_path(&args.path)?;
    let marked = MarkedPath::new(path, args.hump_index)
        .map_err(|e| Failure::domain("InvalidHumpIndex", e))?;
    let result = phi(&marked).map_err(|e| Failure::domain(bijection_error_name(&e), &e))?;

    let mut record = ForwardRecord {
        source: marked.path().to_string(),
        hump_index: marked.hump_index(),
        hump_point: marked.hump().hump_point,
        a: result.split.a,
        b: result.split.b,
        c: result.split.c,
        image: result.image.to_string(),
        image_class: result.image_class.kind.name(),
        image_humps: result.image_class.humps,
        source_humps: classify(marked.path()).humps,
        svg_source: None,
        svg_image: None,
    };
    if let Some(prefix) = &args.svg {
        let (source_note, image_note) =
            figures::forward_pair(result.split, marked.hump().hump_point, marked.path().len());
        let source_svg = render_svg(marked.path(), &source_note)
            .map_err(|e| Failure::domain("BadAnnotation", &e))?;
        let image_svg = render_svg(&result.image, &image_note)
            .map_err(|e| Failure::domain("BadAnnotation", &e))?;
        let source_file = format!("{prefix}-source.svg");
        let image_file = format!("{prefix}-image.svg");
        fs::write(&source_file, source_svg).map_err(io_failure)?;
        fs::write(&image_file, image_svg).map_err(io_failure)?;
        record.svg_source = Some(source_file);
        record.svg_image = Some(image_file);
    }
    emit(args.csv, [record]).map_err(io_failure)?;
    Ok(0)
}

fn run_psi(args: PsiArgs) -> Result<u8, Failure> {
    let path = parse_path(&args.path)?;
    let (split, carried) =
        find_split_backward(&path).map_err(|e| Failure::domain(bijection_error_name(&e), &e))?;
    let marked = psi(&path).map_err(|e| Failure::domain(bijection_error_name(&e), &e))?;
    let class = classify(marked.path());

    let mut record = BackwardRecord {
        image: path.to_string(),
        a: split.a,
        b: split.b,
        c: split.c,
        carried_hump_point: carried,
        preimage: marked.path().to_string(),
        hump_index: marked.hump_index(),
        hump_point: marked.hump().hump_point,
        preimage_class: class.kind.name(),
        preimage_humps: class.humps,
        svg_image: None,
        svg_preimage: None,
    };
    if let Some(prefix) = &args.svg {
        let (image_note, preimage_note) =
            figures::backward_pair(split, carried, marked.hump().hump_point, path.len());
        let image_svg =
            render_svg(&path, &image_note).map_err(|e| Failure::domain("BadAnnotation", &e))?;
        let preimage_svg = render_svg(marked.path(), &preimage_note)
            .map_err(|e| Failure::domain("BadAnnotation", &e))?;
        let image_file = format!("{prefix}-image.svg");
        let preimage_file = format!("{prefix}-preimage.svg");
        fs::write(&image_file, image_svg).map_err(io_failure)?;
        fs::write(&preimage_file, preimage_svg).map_err(io_failure)?;
        record.svg_image = Some(image_file);
        record.svg_preimage = Some(preimage_file);
    }
    emit(args.csv, [record]).map_err(io_failure)?;
    Ok(0)
}

fn run_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let caps = args.caps.caps();
    let scope = Scope {
        motzkin_max: args.motzkin_max,
        dyck_max: args.dyck_max,
        schroeder_max: args.schroeder_max,
        n_max: args.n_max,
        m_max: args.m_max,
    };
    let selected: Vec<SuiteName> = match args.suite {
        SuiteName::All => vec![
            SuiteName::Counts,
            SuiteName::PeakTotals,
            SuiteName::MotzkinHumps,
            SuiteName::RoundTrips,
            SuiteName::ClassCounts,
            SuiteName::Narayana,
            SuiteName::SchroederHumps,
            SuiteName::ColoredIdentity,
        ],
        single => vec![single],
    };
    let mut records = Vec::new();
    for suite in selected {
        let record = match suite {
            SuiteName::Counts => suites::counts(scope, &caps)?,
            SuiteName::PeakTotals => suites::peak_totals(scope, &caps)?,
            SuiteName::MotzkinHumps => suites::motzkin_humps(scope, &caps)?,
            SuiteName::RoundTrips => suites::round_trips(scope, &caps)?,
            SuiteName::ClassCounts => suites::class_counts(scope, &caps)?,
            SuiteName::Narayana => suites::narayana_agreement(scope),
            SuiteName::SchroederHumps => suites::schroeder_humps(scope, &caps)?,
            SuiteName::ColoredIdentity => suites::colored_identity(scope, &caps)?,
            SuiteName::All => unreachable!("expanded above"),
        };
        records.push(record);
    }
    let pass = records.iter().all(|r| r.pass);
    emit(args.csv, records).map_err(io_failure)?;
    Ok(if pass { 0 } else { EXIT_CHECK_FAILED })
}

fn run_render(args: RenderArgs) -> Result<u8, Failure> {
    let path = parse_path(&args.path)?;
    let annotation = Annotation {
        labels: args.labels.clone(),
        circles: args.circles.clone(),
        spans: args.spans.clone(),
    };
    let (format, rendered) = match args.format {
        RenderFormat::Ascii => (
            "ascii",
            render_ascii(&path, &annotation).map_err(|e| Failure::domain("BadAnnotation", &e))?,
        ),
        RenderFormat::Svg => (
            "svg",
            render_svg(&path, &annotation).map_err(|e| Failure::domain("BadAnnotation", &e))?,
        ),
    };
    let record = match &args.output {
        Some(file) => {
            fs::write(file, &rendered).map_err(io_failure)?;
            RenderRecord {
                path: path.to_string(),
                format,
                file: Some(file.clone()),
                output: None,
            }
        }
        None => RenderRecord {
            path: path.to_string(),
            format,
            file: None,
            output: Some(rendered),
        },
    };
    emit(args.csv, [record]).map_err(io_failure)?;
    Ok(0)
}

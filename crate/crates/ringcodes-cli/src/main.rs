//! Command-line front end: ring inspection, code decomposition and
//! composition, distances, duals, and cyclic-code construction.

mod golden;
mod input;
mod report;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ringcodes::json::{ComponentBundleJson, CyclicGeneratorsJson, RingMatrixJson};
use ringcodes::{factor_xn_minus_1, Ring, RingLinearCode, RingMatrix, ZpMatrix, DEFAULT_ENUM_CAP};

use input::Payload;
use report::{CliError, Report};

#[derive(Parser)]
#[command(
    name = "ringcodes",
    version,
    about = "Linear and cyclic codes over Z_p[u]/((u^p - u)/(u - s))"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Show the ring: modulus, retained roots, idempotents, cardinality
    RingInfo {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Split a ring generator matrix into its component matrices
    Decompose {
        /// Ring matrix payload: file path, '-' for stdin, or inline JSON
        input: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Combine component matrices into a ring generator matrix
    Compose {
        /// Component bundle payload: file path, '-' for stdin, or inline JSON
        input: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Component distances and the minimum Hamming distance
    Distance {
        /// Generator payload (ring matrix or component bundle)
        #[arg(long)]
        generator: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dual code: component parity checks and the composed ring matrix
    Dual {
        /// Generator payload (ring matrix or component bundle)
        #[arg(long)]
        generator: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compose component cyclic generators into a ring generator polynomial
    CyclicCompose {
        /// Cyclic generator payload: file path, '-' for stdin, or inline JSON
        input: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Factor x^n - 1 over Z_p into linear factors
    CyclicFactor {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Replay the built-in golden reference examples; exit 0 only if all pass
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                eprintln!("{e}");
                eprintln!("code=Usage detail=argument parsing failed");
                return ExitCode::from(1);
            }
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };

    if let Command::VerifyPaper = cli.command {
        return verify_paper();
    }

    let format = cli.format();
    match run(cli.command) {
        Ok(report) => {
            println!("{}", report.render(format == Format::Json));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.record());
            ExitCode::from(e.exit)
        }
    }
}

impl Cli {
    fn format(&self) -> Format {
        match &self.command {
            Command::RingInfo { format, .. }
            | Command::Decompose { format, .. }
            | Command::Compose { format, .. }
            | Command::Distance { format, .. }
            | Command::Dual { format, .. }
            | Command::CyclicCompose { format, .. }
            | Command::CyclicFactor { format, .. } => *format,
            Command::VerifyPaper => Format::Text,
        }
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::RingInfo { p, s, .. } => ring_info(p, s),
        Command::Decompose { input, p, s, .. } => decompose(&input, p, s),
        Command::Compose { input, p, s, .. } => compose(&input, p, s),
        Command::Distance {
            generator, p, s, ..
        } => distance(&generator, p, s),
        Command::Dual {
            generator, p, s, ..
        } => dual(&generator, p, s),
        Command::CyclicCompose { input, p, s, .. } => cyclic_compose(&input, p, s),
        Command::CyclicFactor { p, n, .. } => cyclic_factor(p, n),
        Command::VerifyPaper => unreachable!("handled in main"),
    }
}

/// Enumeration cap, overridable through RINGCODES_ENUM_CAP.
fn enum_cap() -> Result<u64, CliError> {
    match std::env::var("RINGCODES_ENUM_CAP") {
        Err(_) => Ok(DEFAULT_ENUM_CAP),
        Ok(raw) => raw.parse().map_err(|_| {
            CliError::usage(format!(
                "RINGCODES_ENUM_CAP is not a positive integer: {raw}"
            ))
        }),
    }
}

fn ring_info(p: u64, s: u64) -> Result<Report, CliError> {
    let ring = Ring::new(p, s)?;
    let mut report = Report::new("ring-info");
    report.inputs = json!({"p": p, "s": s});

    let mut idempotents = serde_json::Map::new();
    let mut text = String::new();
    writeln!(text, "ring: p={p} s={s}").unwrap();
    writeln!(
        text,
        "modulus g(u) = {}",
        ringcodes::text::format_poly(ring.modulus(), 'u')
    )
    .unwrap();
    let roots: Vec<String> = ring.index_set().iter().map(|r| r.to_string()).collect();
    writeln!(text, "retained roots: {}", roots.join(" ")).unwrap();
    writeln!(
        text,
        "cardinality: {} ({p}^{})",
        ring.cardinality(),
        ring.dimension()
    )
    .unwrap();
    writeln!(text, "idempotents:").unwrap();
    for &root in ring.index_set() {
        let alpha = ring.idempotent(root)?;
        let weight = ring.lagrange_weight(root)?;
        let factored: String = ring
            .index_set()
            .iter()
            .filter(|&&i| i != root)
            .map(|&i| {
                if i == 0 {
                    "u".to_string()
                } else {
                    format!("(u-{i})")
                }
            })
            .collect();
        writeln!(text, "  root {root}: {weight}{factored} = {alpha}").unwrap();
        idempotents.insert(
            root.to_string(),
            json!({
                "weight": weight,
                "expanded": alpha.to_string(),
                "coeffs": alpha.coeffs(),
            }),
        );
    }
    report.results = json!({
        "p": p,
        "s": s,
        "modulus": ringcodes::text::format_poly(ring.modulus(), 'u'),
        "index_set": ring.index_set(),
        "cardinality": ring.cardinality().to_string(),
        "idempotents": idempotents,
    });
    report.text = text;
    Ok(report)
}

/// Loads a generator payload as a ring matrix plus its component parts.
fn load_generator(
    arg: &str,
    p: Option<u64>,
    s: Option<u64>,
) -> Result<(Ring, Vec<ZpMatrix>, serde_json::Value), CliError> {
    let (text, source) = input::read_source(arg)?;
    let payload = input::classify(&text)?;
    input::check_flags(&payload, p, s)?;
    match payload {
        Payload::RingMatrix(m) => {
            let matrix = m.to_matrix()?;
            let ring = matrix.ring().clone();
            let parts = matrix.decompose();
            let echo = json!({"p": ring.p(), "s": ring.excluded_root(), "n": matrix.cols(), "source": source, "kind": "ring_matrix"});
            Ok((ring, parts, echo))
        }
        Payload::Bundle(b) => {
            let (ring, parts) = b.to_parts()?;
            let echo = json!({"p": ring.p(), "s": ring.excluded_root(), "n": b.n, "source": source, "kind": "component_bundle"});
            Ok((ring, parts, echo))
        }
        Payload::Cyclic(_) => Err(CliError::usage(
            "expected a ring matrix or component bundle, found cyclic generators",
        )),
    }
}

fn render_component_matrices(ring: &Ring, parts: &[ZpMatrix], text: &mut String) {
    for (&root, part) in ring.index_set().iter().zip(parts) {
        writeln!(text, "root {root}:").unwrap();
        if part.rows() == 0 {
            writeln!(text, "  (zero code: empty generator)").unwrap();
        }
        for i in 0..part.rows() {
            let row: Vec<String> = part.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(text, "  [{}]", row.join(", ")).unwrap();
        }
    }
}

fn render_ring_matrix(m: &RingMatrix, text: &mut String) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string()).collect();
        writeln!(text, "  [{}]", row.join(", ")).unwrap();
    }
}

fn decompose(arg: &str, p: Option<u64>, s: Option<u64>) -> Result<Report, CliError> {
    let (ring, parts, echo) = load_generator(arg, p, s)?;
    let bundle = ComponentBundleJson::from_parts(&ring, &parts);
    let mut report = Report::new("decompose");
    report.inputs = echo;
    report.results = serde_json::to_value(&bundle)?;
    let mut text = String::new();
    writeln!(
        text,
        "component matrices over Z_{} (excluded root {}):",
        ring.p(),
        ring.excluded_root()
    )
    .unwrap();
    render_component_matrices(&ring, &parts, &mut text);
    report.text = text;
    Ok(report)
}

fn compose(arg: &str, p: Option<u64>, s: Option<u64>) -> Result<Report, CliError> {
    let (ring, parts, echo) = load_generator(arg, p, s)?;
    let matrix = RingMatrix::compose(&ring, &parts)?;
    let mut report = Report::new("compose");
    report.inputs = echo;
    report.results = serde_json::to_value(RingMatrixJson::from_matrix(&matrix))?;
    let mut text = String::new();
    writeln!(
        text,
        "ring matrix ({} x {}) over p={} s={}:",
        matrix.rows(),
        matrix.cols(),
        ring.p(),
        ring.excluded_root()
    )
    .unwrap();
    render_ring_matrix(&matrix, &mut text);
    report.text = text;
    Ok(report)
}

fn distance(arg: &str, p: Option<u64>, s: Option<u64>) -> Result<Report, CliError> {
    let (ring, parts, echo) = load_generator(arg, p, s)?;
    let cap = enum_cap()?;
    let code = RingLinearCode::from_components(&ring, parts)?;
    let dist = code.distance_report_capped(cap)?;

    let mut report = Report::new("distance");
    report.inputs = echo;
    let mut per = serde_json::Map::new();
    let mut text = String::new();
    writeln!(text, "component distances:").unwrap();
    for (comp, d) in code.components().iter().zip(&dist.per_component) {
        let root = comp.index();
        match d {
            None => {
                writeln!(text, "  root {root}: zero component (no distance)").unwrap();
                per.insert(root.to_string(), serde_json::Value::Null);
            }
            Some(d) => {
                writeln!(
                    text,
                    "  root {root}: k={} d={} witness {:?}",
                    comp.dimension(),
                    d.distance,
                    d.codeword
                )
                .unwrap();
                per.insert(
                    root.to_string(),
                    json!({"dimension": comp.dimension(), "distance": d.distance, "witness": d.codeword}),
                );
            }
        }
    }
    writeln!(
        text,
        "minimum distance: {} (achieved at root {})",
        dist.distance, dist.witness_root
    )
    .unwrap();
    report.results = json!({
        "p": ring.p(),
        "s": ring.excluded_root(),
        "n": code.length(),
        "component_distances": per,
        "min_distance": dist.distance,
        "witness_root": dist.witness_root,
        "cardinality": code.cardinality().to_string(),
    });
    report.text = text;
    Ok(report)
}

fn dual(arg: &str, p: Option<u64>, s: Option<u64>) -> Result<Report, CliError> {
    let (ring, parts, echo) = load_generator(arg, p, s)?;
    let code = RingLinearCode::from_components(&ring, parts)?;
    let mut report = Report::new("dual");
    report.inputs = echo;

    // flag the components whose pivots forced a column permutation
    for comp in code.components() {
        let sys = comp.basis().systematic_form().map_err(CliError::from)?;
        if sys.is_permuted() {
            report.warnings.push(format!(
                "component at root {}: column permutation applied for the systematic form",
                comp.index()
            ));
        }
    }

    let dual = code.dual()?;
    let dual_parts: Vec<ZpMatrix> = dual
        .components()
        .iter()
        .map(|c| c.generator().clone())
        .collect();
    let bundle = ComponentBundleJson::from_parts(&ring, &dual_parts);

    let mut text = String::new();
    writeln!(text, "component parity checks:").unwrap();
    render_component_matrices(&ring, &dual_parts, &mut text);

    let same_rank = dual_parts.windows(2).all(|w| w[0].rows() == w[1].rows());
    let ring_matrix = if same_rank {
        let h = RingMatrix::compose(&ring, &dual_parts)?;
        writeln!(text, "ring dual matrix ({} x {}):", h.rows(), h.cols()).unwrap();
        render_ring_matrix(&h, &mut text);
        Some(h)
    } else {
        report.warnings.push(
            "component dimensions differ; no single ring-level dual matrix exists".to_string(),
        );
        None
    };

    report.results = json!({
        "components": serde_json::to_value(&bundle)?,
        "ring_matrix": match &ring_matrix {
            Some(h) => serde_json::to_value(RingMatrixJson::from_matrix(h))?,
            None => serde_json::Value::Null,
        },
        "cardinality": dual.cardinality().to_string(),
    });
    report.text = text;
    Ok(report)
}

fn cyclic_compose(arg: &str, p: Option<u64>, s: Option<u64>) -> Result<Report, CliError> {
    let (text_in, source) = input::read_source(arg)?;
    let payload = input::classify(&text_in)?;
    input::check_flags(&payload, p, s)?;
    let Payload::Cyclic(json_gens) = payload else {
        return Err(CliError::usage("expected a cyclic generator payload"));
    };
    let gens = json_gens.to_generators()?;
    let ring = gens.ring().clone();
    let g = gens.compose();

    let mut report = Report::new("cyclic-compose");
    report.inputs =
        json!({"p": ring.p(), "s": ring.excluded_root(), "n": gens.n(), "source": source});

    let mut text = String::new();
    writeln!(
        text,
        "generator polynomial over p={} s={}:",
        ring.p(),
        ring.excluded_root()
    )
    .unwrap();
    writeln!(text, "g(x) = {g}").unwrap();
    writeln!(text, "component generators (monic, canonical):").unwrap();
    for (&root, gi) in ring.index_set().iter().zip(gens.generators()) {
        writeln!(
            text,
            "  root {root}: {} (k = {})",
            ringcodes::text::format_poly(gi, 'x'),
            gens.n() - gi.degree().unwrap_or(0)
        )
        .unwrap();
    }
    let code = gens.to_linear_code();
    writeln!(text, "code cardinality: {}", code.cardinality()).unwrap();

    report.results = json!({
        "generators": serde_json::to_value(CyclicGeneratorsJson::from_generators(&gens))?,
        "generator_poly": g.to_string(),
        "coefficients": g.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "cardinality": code.cardinality().to_string(),
    });
    report.text = text;
    Ok(report)
}

fn cyclic_factor(p: u64, n: usize) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let prime = ringcodes::Prime::new(p)?;
    let factors = factor_xn_minus_1(prime, n)?;

    let display: String = factors
        .factors()
        .iter()
        .map(|f| {
            if f.multiplicity == 1 {
                format!("(x-{})", f.root)
            } else {
                format!("(x-{})^{}", f.root, f.multiplicity)
            }
        })
        .collect();

    let mut report = Report::new("cyclic-factor");
    report.inputs = json!({"p": p, "n": n});
    report.results = json!({
        "p": p,
        "n": n,
        "display": display,
        "factors": factors.factors().iter().map(|f| json!({
            "root": f.root,
            "multiplicity": f.multiplicity,
            "factor": ringcodes::text::format_poly(&f.poly(prime), 'x'),
        })).collect::<Vec<_>>(),
    });
    report.text = format!("x^{n}-1 = {display} mod {p}\n");
    Ok(report)
}

fn verify_paper() -> ExitCode {
    let mut failures = 0;
    for item in golden::items() {
        match (item.run)() {
            Ok(()) => println!("ok   {}", item.name),
            Err(why) => {
                failures += 1;
                println!("FAIL {}: {why}", item.name);
            }
        }
    }
    if failures == 0 {
        println!("all golden checks passed");
        ExitCode::SUCCESS
    } else {
        eprintln!("code=GoldenMismatch detail={failures} golden check(s) failed");
        ExitCode::from(2)
    }
}

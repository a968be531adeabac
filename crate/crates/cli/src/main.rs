use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use superpose::config_models::{ConfigModel, ModelOptions, DEFAULT_GUARD, MAX_POINTS};
use superpose::report::Report;
use superpose::simplicial::{parse_complex, subdivide_times, Cohomology, CohomologyGroup, SimplicialComplex};
use superpose::superposition::{auto_degree, sup, AUTO_DEGREE_BUDGET};
use superpose::{fixtures, suites};

#[derive(Parser)]
#[command(name = "superpose", version, about = "Cell models of configuration spaces and the superposition product")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a configuration model and print its cell counts.
    BuildModel(ModelArgs),
    /// Print Betti numbers and torsion of a configuration model.
    Betti(ModelArgs),
    /// Print the superposition of two basis classes in the basis of the target.
    Sup(SupArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Formal,
    Transfer,
    Lemma42,
    Ring,
    PhiFactor,
    MuFactor,
    All,
}

#[derive(Args, Clone)]
struct ComplexArgs {
    /// Complex file, or the name of a built-in fixture.
    #[arg(long, default_value = "disk")]
    complex: String,
    /// Barycentric subdivisions applied before building models.
    #[arg(long, default_value_t = 2)]
    subdiv: usize,
    /// Maximum number of cells in any model.
    #[arg(long, default_value_t = DEFAULT_GUARD, value_parser = positive)]
    guard: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ModelArgs {
    #[command(flatten)]
    common: ComplexArgs,
    /// Number of points (blue points if --m is given).
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Number of red points; builds the colored model.
    #[arg(long)]
    m: Option<usize>,
    /// Build the ordered model.
    #[arg(long, conflicts_with = "m")]
    ordered: bool,
    /// Highest cohomological degree needed, or "auto".
    #[arg(long)]
    max_degree: Option<String>,
}

#[derive(Args)]
struct SupArgs {
    #[command(flatten)]
    common: ComplexArgs,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    degree_a: usize,
    #[arg(long, default_value_t = 0)]
    degree_b: usize,
    /// Index of the first class in the basis of its group.
    #[arg(long, default_value_t = 0)]
    class_a: usize,
    #[arg(long, default_value_t = 0)]
    class_b: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Complex for the ring suite; defaults to the disk and the interval.
    #[arg(long)]
    complex: Option<String>,
    #[arg(long, default_value_t = 2)]
    subdiv: usize,
    #[arg(long, default_value_t = DEFAULT_GUARD, value_parser = positive)]
    guard: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest index set for the formal identities.
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    #[arg(long, default_value_t = MAX_POINTS)]
    max_points: usize,
    /// Highest degree tabulated by the ring suite, or "auto".
    #[arg(long, default_value = "auto")]
    max_degree: String,
    /// Largest ground set for the scanning factorization.
    #[arg(long, default_value_t = 6)]
    max_ground: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<f64>() {
        Ok(v) if v >= 1.0 && v.fract() == 0.0 && v <= usize::MAX as f64 => Ok(v as usize),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn load_complex(source: &str, subdiv: usize) -> Result<SimplicialComplex> {
    let k = if Path::new(source).exists() {
        let text = std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
        parse_complex(&text).with_context(|| format!("parsing {source}"))?
    } else if let Some(k) = fixtures::complex(source) {
        k
    } else {
        let names: Vec<&str> = fixtures::names().collect();
        bail!("{source}: no such file or fixture (fixtures: {})", names.join(", "));
    };
    Ok(subdivide_times(&k, subdiv))
}

fn resolve_degree(k: &SimplicialComplex, points: usize, source: &str) -> Result<usize> {
    if source == "auto" {
        return Ok(auto_degree(k, points, AUTO_DEGREE_BUDGET)?);
    }
    source.parse().with_context(|| format!("--max-degree: expected \"auto\" or an integer, got {source:?}"))
}

fn build_model(a: &ModelArgs) -> Result<(ConfigModel, Option<usize>)> {
    let k = load_complex(&a.common.complex, a.common.subdiv)?;
    let points = a.n + a.m.unwrap_or(0);
    if points > MAX_POINTS {
        bail!("at most {MAX_POINTS} points are supported, got {points}");
    }
    let degree = a.max_degree.as_deref().map(|d| resolve_degree(&k, points, d)).transpose()?;
    let opts = ModelOptions {
        max_dim: degree.map(|d| d + 1),
        guard: a.common.guard,
    };
    let model = match (a.m, a.ordered) {
        (Some(m), _) => ConfigModel::colored(&k, a.n, m, opts)?,
        (None, true) => ConfigModel::ordered(&k, a.n, opts)?,
        (None, false) => ConfigModel::unordered(&k, a.n, opts)?,
    };
    Ok((model, degree))
}

/// Cohomology groups of a model, limited to the degrees that are valid.
fn groups(model: &ConfigModel, degree: Option<usize>) -> Vec<CohomologyGroup> {
    let h = Cohomology::new(model.complex());
    let mut groups = h.groups().to_vec();
    let valid = if model.is_truncated() { model.complex().num_degrees().saturating_sub(1) } else { groups.len() };
    groups.truncate(degree.map_or(valid, |d| (d + 1).min(valid)));
    groups
}

fn torsion(g: &CohomologyGroup) -> String {
    g.torsion.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn betti_text(groups: &[CohomologyGroup]) -> String {
    let last = groups
        .iter()
        .rposition(|g| g.free_rank > 0 || !g.torsion.is_empty())
        .map_or(1, |i| i + 1)
        .min(groups.len());
    let mut parts = Vec::new();
    for g in &groups[..last] {
        parts.push(format!("b{}={}", g.degree, g.free_rank));
        if !g.torsion.is_empty() {
            parts.push(format!("t{}={}", g.degree, torsion(g)));
        }
    }
    parts.join(" ")
}

fn cmd_build_model(a: &ModelArgs) -> Result<()> {
    let (model, degree) = build_model(a)?;
    let cx = model.complex();
    let counts: Vec<usize> = (0..cx.num_degrees()).map(|d| cx.count(d)).collect();
    let chi = (!model.is_truncated()).then(|| {
        counts
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum::<i64>()
    });
    let groups = groups(&model, degree);
    match a.common.format {
        Format::Text => {
            let mut parts: Vec<String> = counts.iter().enumerate().map(|(d, c)| format!("c{d}={c}")).collect();
            match chi {
                Some(chi) => parts.push(format!("chi={chi}")),
                None => parts.push("truncated".into()),
            }
            parts.push(betti_text(&groups));
            println!("{}", parts.join(" "));
        }
        Format::Tsv => {
            println!("degree\tcells\tbetti\ttorsion");
            for (d, c) in counts.iter().enumerate() {
                match groups.get(d) {
                    Some(g) => println!("{d}\t{c}\t{}\t{}", g.free_rank, torsion(g)),
                    None => println!("{d}\t{c}\t-\t-"),
                }
            }
            println!("chi\t{}", chi.map_or("-".to_string(), |c| c.to_string()));
        }
    }
    Ok(())
}

fn cmd_betti(a: &ModelArgs) -> Result<()> {
    let (model, degree) = build_model(a)?;
    let groups = groups(&model, degree);
    match a.common.format {
        Format::Text => println!("{}", betti_text(&groups)),
        Format::Tsv => {
            println!("degree\tbetti\ttorsion");
            for g in &groups {
                println!("{}\t{}\t{}", g.degree, g.free_rank, torsion(g));
            }
        }
    }
    Ok(())
}

fn cmd_sup(a: &SupArgs) -> Result<()> {
    let k = load_complex(&a.common.complex, a.common.subdiv)?;
    if a.n + a.m > MAX_POINTS {
        bail!("at most {MAX_POINTS} points are supported, got {}", a.n + a.m);
    }
    let top = a.degree_a + a.degree_b;
    let opts = ModelOptions {
        max_dim: Some(top + 1),
        guard: a.common.guard,
    };
    let blue = ConfigModel::unordered(&k, a.n, opts)?;
    let red = ConfigModel::unordered(&k, a.m, opts)?;
    let target = ConfigModel::unordered(&k, a.n + a.m, opts)?;
    let class = |model: &ConfigModel, p: usize, i: usize, which: &str| -> Result<_> {
        let h = Cohomology::new(model.complex());
        let g = h.group(p)?;
        match g.generators.get(i) {
            Some(c) => Ok(c.clone()),
            None => bail!("--class-{which} {i}: H^{p} of the {}-point model has rank {}", model.points(), g.generators.len()),
        }
    };
    let alpha = class(&blue, a.degree_a, a.class_a, "a")?;
    let beta = class(&red, a.degree_b, a.class_b, "b")?;
    let s = sup(&blue, &red, &target, &alpha, &beta)?;
    let coords = Cohomology::new(target.complex()).coordinates(&s)?;
    let coords: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
    match a.common.format {
        Format::Text => println!("{}", coords.join(" ")),
        Format::Tsv => {
            println!("n\tm\tp\tq\ta\tb\tsup");
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                a.n,
                a.m,
                a.degree_a,
                a.degree_b,
                a.class_a,
                a.class_b,
                coords.join(" ")
            );
        }
    }
    Ok(())
}

fn ring_report(a: &VerifyArgs) -> Result<Report> {
    let names: Vec<&str> = match &a.complex {
        Some(c) => vec![c.as_str()],
        None => vec!["disk", "interval"],
    };
    let mut report = Report::new();
    for name in names {
        let k = load_complex(name, a.subdiv)?;
        let degree = resolve_degree(&k, a.max_points, &a.max_degree)?;
        let r = suites::ring(&k, a.max_points, degree, a.guard)?;
        for mut c in r.checks {
            c.name = format!("{name}: {}", c.name);
            report.checks.push(c);
        }
    }
    Ok(report)
}

fn cmd_verify(a: &VerifyArgs) -> Result<bool> {
    if a.max_points > MAX_POINTS {
        bail!("--max-points: at most {MAX_POINTS} is supported");
    }
    let run = |s: Suite| a.suite == Suite::All || a.suite == s;
    let mut passed = true;
    let mut emit = |r: Report| {
        print!("{r}");
        passed &= r.passed();
    };
    if run(Suite::Formal) {
        emit(suites::formal(a.max_size));
    }
    if run(Suite::Transfer) {
        emit(suites::transfer(a.seed)?);
    }
    if run(Suite::Lemma42) {
        emit(suites::thom_square()?);
    }
    if run(Suite::Ring) {
        emit(ring_report(a)?);
    }
    if run(Suite::PhiFactor) {
        emit(suites::phi_factor(a.max_points)?);
    }
    if run(Suite::MuFactor) {
        emit(suites::mu_factor(a.max_ground));
    }
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::BuildModel(a) => cmd_build_model(a).map(|_| true),
        Command::Betti(a) => cmd_betti(a).map(|_| true),
        Command::Sup(a) => cmd_sup(a).map(|_| true),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

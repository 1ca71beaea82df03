use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperph::io::{self, format_real, EvolutionLog, IoError};
use hyperph::metric::{map_distance_p, variant_distance, MetricError};
use hyperph::persist::{MorphismLadder, DIAGRAM_ARROWS, EXTRA_ARROWS, SURFACED_ARROWS};
use hyperph::{
    build_persistence_module, hypergraph_distance, module_diagram, par, DiagramTriple, Direction, Error,
    FilteredHypergraph, Hypergraph, PersistenceDiagram, PrimeField, Variant,
};

#[derive(Parser)]
#[command(name = "hyperph", version, about = "Persistent homology of filtered hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Homology degree
    #[arg(long, default_value_t = 1)]
    dim: usize,
    /// Prime coefficient field
    #[arg(long, default_value_t = 2)]
    field: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List the associated and lower-associated simplicial complexes
    Complex {
        /// Hypergraph file, or `-` for stdin
        input: PathBuf,
    },
    /// Persistence diagram of one variant as CSV
    Persist {
        input: PathBuf,
        #[arg(long, default_value = "embedded")]
        variant: Variant,
        #[command(flatten)]
        common: Common,
    },
    /// Bottleneck distance between two filtrations of the same hypergraph
    Distance {
        first: PathBuf,
        second: PathBuf,
        /// Exponent `p >= 1`, or `inf`
        #[arg(long, default_value = "inf", value_parser = parse_exponent)]
        p: f64,
        /// Restrict to one variant instead of the maximum over all three
        #[arg(long)]
        variant: Option<Variant>,
        #[command(flatten)]
        common: Common,
    },
    /// Kernel, image and cokernel diagrams of the maps induced by a morphism
    Morphism {
        domain: PathBuf,
        codomain: PathBuf,
        /// Lines `v -> w`
        map: PathBuf,
        /// `pushforward` filters the codomain side from the domain weights,
        /// `pullback` the domain side from the codomain weights
        #[arg(long, default_value = "pushforward")]
        direction: Direction,
        /// Report every arrow of the diagram, not only the surfaced ones
        #[arg(long)]
        all_arrows: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Diagrams of every snapshot in a directory of `<timestamp>.hg` files and
    /// map distances along consecutive inclusions
    Evolve {
        log: PathBuf,
        #[arg(long, default_value = "inf", value_parser = parse_exponent)]
        p: f64,
        #[arg(long, default_value = "embedded")]
        variant: Variant,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_exponent(s: &str) -> Result<f64, String> {
    match s {
        "inf" | "infinity" => Ok(f64::INFINITY),
        _ => s.parse::<f64>().map_err(|_| format!("`{s}` is neither a number nor `inf`")),
    }
}

fn field(common: &Common) -> Result<PrimeField, Error> {
    Ok(PrimeField::new(common.field)?)
}

fn load(path: &Path) -> Result<FilteredHypergraph, Error> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|source| IoError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        return Ok(io::parse_hypergraph(&text, "<stdin>")?);
    }
    Ok(io::read_hypergraph(path)?)
}

fn labelled(h: &Hypergraph, e: &hyperph::Hyperedge) -> String {
    format!("{{{}}}", io::edge_labels(h, e).replace(' ', ","))
}

fn complex_listing(out: &mut String, name: &str, k: &Hypergraph) {
    let counts: Vec<String> = match k.max_dim() {
        Some(top) => (0..=top).map(|n| k.count_simplices(n).to_string()).collect(),
        None => Vec::new(),
    };
    let _ = write!(out, "{name} {} simplices", k.len());
    if !counts.is_empty() {
        let _ = write!(out, ", per dimension: {}", counts.join(" "));
    }
    out.push('\n');
    let mut simplices: Vec<_> = k.edges().collect();
    simplices.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    for s in simplices {
        let _ = writeln!(out, "  {}", labelled(k, s));
    }
}

fn diagram_rows(out: &mut String, prefix: &str, dim: usize, d: &PersistenceDiagram) {
    for &(b, e) in d.points() {
        let _ = writeln!(out, "{prefix}{dim},{},{}", format_real(b), format_real(e));
    }
}

fn triple_rows(out: &mut String, prefix: &str, dim: usize, t: &DiagramTriple) {
    for (part, d) in t.parts() {
        diagram_rows(out, &format!("{prefix}{part},"), dim, d);
    }
}

fn persist(input: &Path, variant: Variant, common: &Common) -> Result<String, Error> {
    let f = load(input)?;
    let module = build_persistence_module(&f, variant, common.dim, field(common)?)?;
    let mut out = String::from("dim,birth,death\n");
    diagram_rows(&mut out, "", common.dim, &module_diagram(&module)?);
    Ok(out)
}

fn distance(first: &Path, second: &Path, p: f64, variant: Option<Variant>, common: &Common) -> Result<String, Error> {
    let (f, g) = (load(first)?, load(second)?);
    let k = field(common)?;
    let d = match variant {
        Some(v) => {
            if f.base() != g.base() {
                return Err(MetricError::from(hyperph::hypercore::HypergraphError::BaseMismatch).into());
            }
            variant_distance(&f, &g, v, common.dim, p, k)?
        }
        None => hypergraph_distance(&f, &g, common.dim, p, k)?,
    };
    Ok(format!("{}\n", format_real(d)))
}

fn morphism(
    paths: [&Path; 3],
    direction: Direction,
    all_arrows: bool,
    common: &Common,
) -> Result<String, Error> {
    let (dom, cod) = (load(paths[0])?, load(paths[1])?);
    let phi = io::read_morphism(paths[2], dom.base(), cod.base())?;
    let f = match direction {
        Direction::Pushforward => &dom,
        Direction::Pullback => &cod,
    };
    let ladder = MorphismLadder::build(&phi, f, direction, common.dim, field(common)?)?;
    let arrows: Vec<_> = if all_arrows {
        ladder.check_commutativity()?;
        DIAGRAM_ARROWS.iter().chain(&EXTRA_ARROWS).copied().collect()
    } else {
        SURFACED_ARROWS.to_vec()
    };
    let mut out = String::from("arrow,part,dim,birth,death\n");
    for arrow in arrows {
        let triple = ladder.triple(arrow)?;
        triple_rows(&mut out, &format!("{},", arrow.name()), common.dim, &triple);
    }
    Ok(out)
}

fn evolve(log: &Path, p: f64, variant: Variant, common: &Common) -> Result<String, Error> {
    let log = EvolutionLog::read_dir(log)?;
    let k = field(common)?;
    let n = common.dim;
    let snapshots = log.snapshots();
    let diagrams = par::try_map_range(snapshots.len(), |i| -> Result<_, Error> {
        Ok(module_diagram(&build_persistence_module(&snapshots[i].1, variant, n, k)?)?)
    })?;
    let pairs = par::try_map_range(snapshots.len().saturating_sub(1), |i| -> Result<_, Error> {
        let phi = log.inclusion(i)?;
        let pull = MorphismLadder::build(&phi, &snapshots[i + 1].1, Direction::Pullback, n, k)?;
        let push = MorphismLadder::build(&phi, &snapshots[i].1, Direction::Pushforward, n, k)?;
        let mut rows = Vec::new();
        for arrow in SURFACED_ARROWS {
            let (a, b) = (pull.triple(arrow)?, push.triple(arrow)?);
            let d = map_distance_p(&a, &b, p)?;
            rows.push((arrow.name(), a, b, d));
        }
        Ok(rows)
    })?;

    let mut out = String::new();
    for (i, ((stamp, _), d)) in snapshots.iter().zip(&diagrams).enumerate() {
        let _ = writeln!(out, "[snapshot {stamp}]");
        let _ = writeln!(out, "betti {}", d.essential_births().len());
        out.push_str("dim,birth,death\n");
        diagram_rows(&mut out, "", n, d);
        if let Some(rows) = pairs.get(i) {
            let _ = writeln!(out, "\n[pair {stamp} -> {}]", snapshots[i + 1].0);
            out.push_str("construction,arrow,part,dim,birth,death\n");
            for (arrow, a, b, _) in rows {
                triple_rows(&mut out, &format!("pullback,{arrow},"), n, a);
                triple_rows(&mut out, &format!("pushforward,{arrow},"), n, b);
            }
            out.push_str("arrow,distance\n");
            for (arrow, _, _, d) in rows {
                let _ = writeln!(out, "{arrow},{}", format_real(*d));
            }
        }
        if i + 1 < snapshots.len() {
            out.push('\n');
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Complex { input } => {
            let f = load(&input)?;
            let mut out = String::new();
            complex_listing(&mut out, "delta", &f.base().associated_complex());
            complex_listing(&mut out, "lower", &f.base().lower_associated_complex());
            Ok(out)
        }
        Command::Persist { input, variant, common } => persist(&input, variant, &common),
        Command::Distance {
            first,
            second,
            p,
            variant,
            common,
        } => distance(&first, &second, p, variant, &common),
        Command::Morphism {
            domain,
            codomain,
            map,
            direction,
            all_arrows,
            common,
        } => morphism([&domain, &codomain, &map], direction, all_arrows, &common),
        Command::Evolve { log, p, variant, common } => evolve(&log, p, variant, &common),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}

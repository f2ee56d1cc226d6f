use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use elnitsky::bott_samelson::{self, Coloring};
use elnitsky::flips;
use elnitsky::io::json::{self, AnyTiling};
use elnitsky::io::svg::{self, RenderSpec};
use elnitsky::tilings::{self, RhombicTiling};
use elnitsky::zonotopal::{self, ZonoTiling};
use elnitsky::{Error, Permutation, Word};

/// Tilings of Elnitsky polygons and their Bott-Samelson data.
#[derive(Debug, Parser)]
#[command(name = "elnitsky", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grow the rhombic tiling of a reduced word, e.g. `tile 1,2,1 --n 3`.
    Tile {
        word: String,
        /// Rank; defaults to one more than the largest letter.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Peel a tiling into a reduced word, or list its whole commutation class.
    Words {
        tiling: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// List all tilings of E(w), one JSON document per line, then the count.
    Enumerate {
        w: String,
        #[arg(long)]
        zonotopal: bool,
    },
    /// Hexagon flip graph as an adjacency list or Graphviz DOT.
    Flipgraph {
        w: String,
        #[arg(long)]
        dot: bool,
    },
    /// Zonotopal tiling poset: covers, maximal elements, pattern verdict.
    Poset { w: String },
    /// Poincaré polynomial coefficients of a (zonotopal) tiling.
    Poincare { tiling: PathBuf },
    /// Torus-fixed points of a rhombic tiling.
    Fixedpoints {
        tiling: PathBuf,
        /// Also list the distinct image permutations.
        #[arg(long)]
        images: bool,
    },
    /// Render a tiling as SVG.
    Render {
        tiling: PathBuf,
        /// Light/dark bits in canonical tile order, 1 = dark.
        #[arg(long)]
        coloring: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 60.0)]
        scale: f64,
        #[arg(long)]
        no_labels: bool,
    },
}

enum Failure {
    Invalid(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut stdout = io::stdout().lock();
    match run(cli.command, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_tiling(path: &PathBuf) -> Result<AnyTiling, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?
    };
    Ok(json::parse_any(&text)?)
}

fn require_rhombic(t: &AnyTiling) -> Result<RhombicTiling, Failure> {
    t.as_rhombic()
        .ok_or_else(|| Failure::Invalid("this command needs a rhombic tiling".into()))
}

fn census_string(z: &ZonoTiling) -> String {
    z.census()
        .iter()
        .map(|(k, count)| format!("{}-gon x{count}", 2 * k))
        .collect::<Vec<_>>()
        .join(", ")
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Tile { word, n } => {
            let word = Word::parse(&word, n)?;
            let t = tilings::word_to_tiling(&word)?;
            writeln!(out, "{}", json::rhombic_to_string(&t))?;
        }
        Command::Words { tiling, all } => {
            let t = require_rhombic(&read_tiling(&tiling)?)?;
            if all {
                for w in t.all_words()? {
                    writeln!(out, "{w}")?;
                }
            } else {
                writeln!(out, "{}", tilings::tiling_to_word(&t)?)?;
            }
        }
        Command::Enumerate { w, zonotopal } => {
            let w: Permutation = w.parse()?;
            let count = if zonotopal {
                let all = zonotopal::enumerate_zonotopal(&w)?;
                for z in &all {
                    writeln!(out, "{}", json::zonotopal_to_string(z))?;
                }
                all.len()
            } else {
                let all = tilings::enumerate_rhombic(&w)?;
                for t in &all {
                    writeln!(out, "{}", json::rhombic_to_string(t))?;
                }
                all.len()
            };
            writeln!(out, "{count}")?;
        }
        Command::Flipgraph { w, dot } => {
            let g = flips::flip_graph(&w.parse()?)?;
            if dot {
                write!(out, "{}", g.to_dot())?;
            } else {
                for (i, t) in g.nodes().iter().enumerate() {
                    let neighbors: Vec<&str> = g.neighbors(i).map(|j| g.keys()[j].as_str()).collect();
                    writeln!(out, "{} {}: {}", g.keys()[i], t.to_word()?, neighbors.join(" "))?;
                }
                writeln!(
                    out,
                    "nodes {} arcs {} connected {}",
                    g.nodes().len(),
                    g.arcs().len(),
                    if g.is_connected() { "yes" } else { "no" }
                )?;
            }
        }
        Command::Poset { w } => {
            let w: Permutation = w.parse()?;
            let poset = zonotopal::poset(&w)?;
            let keys: Vec<String> = poset
                .elements()
                .iter()
                .map(|z| json::digest(&json::zonotopal_to_string(z)))
                .collect();
            for (key, z) in keys.iter().zip(poset.elements()) {
                writeln!(out, "element {key} {}", census_string(z))?;
            }
            for &(lo, hi) in poset.covers() {
                writeln!(out, "cover {} < {}", keys[lo], keys[hi])?;
            }
            let maximal = poset.maximal_elements();
            for z in &maximal {
                writeln!(out, "maximal {}", keys[poset.index_of(z).unwrap()])?;
            }
            writeln!(out, "unique max: {}", if maximal.len() == 1 { "yes" } else { "no" })?;
            let avoids = w.avoids_all(&zonotopal::unique_max_patterns())?;
            writeln!(
                out,
                "patterns 4231,4312,3421: {}",
                if avoids { "avoids" } else { "contains" }
            )?;
        }
        Command::Poincare { tiling } => {
            let z = read_tiling(&tiling)?.to_zonotopal();
            writeln!(out, "{}", json::polynomial_to_string(&bott_samelson::poincare(&z)))?;
        }
        Command::Fixedpoints { tiling, images } => {
            let t = require_rhombic(&read_tiling(&tiling)?)?;
            let found = bott_samelson::fixed_point_images(&t)?;
            writeln!(out, "fixed points: {}", 1u64 << t.len())?;
            writeln!(out, "distinct images: {}", found.len())?;
            if images {
                for v in &found {
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Render {
            tiling,
            coloring,
            output,
            scale,
            no_labels,
        } => {
            let z = read_tiling(&tiling)?.to_zonotopal();
            let spec = RenderSpec {
                scale,
                show_vertex_labels: !no_labels,
                coloring: coloring.as_deref().map(Coloring::from_bits).transpose()?,
                ..RenderSpec::default()
            };
            let doc = svg::render_svg(&z, &spec)?;
            match output {
                Some(path) => fs::write(&path, doc)
                    .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?,
                None => write!(out, "{doc}")?,
            }
        }
    }
    Ok(())
}

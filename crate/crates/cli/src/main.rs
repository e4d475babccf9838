//! `smallcones` command-line front end.

mod builtin;
mod json;
mod svg;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use smallcones::cones::{
    cone_automorph, default_positive_vector, dolgachev_comparison, fiber_cardinality, locate_small_cone,
    orbit_count_rank2, pell_fundamental, pell_isometry, same_small_cone, small_cones_rank2_with, wall_candidates_abstract,
    wall_ray, wall_realizability_embedded, walls_in_translates, IrrationalVector, Region, SmallConeFan,
    DEFAULT_SEARCH_BOUND,
};
use smallcones::roots::{ade_type, enumerate_roots, positive_system, Functional};
use smallcones::{AdeType, Embedding, Lattice};

use crate::builtin::{builtin_lattice, parse_int_matrix, parse_surd_vector, parse_vector};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Parse(String),
    Domain(smallcones::Error),
}

impl From<smallcones::Error> for CliError {
    fn from(e: smallcones::Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error[usage]: {m}"),
            CliError::Io(m) => write!(f, "error[io]: {m}"),
            CliError::Parse(m) => write!(f, "error[parse]: {m}"),
            CliError::Domain(e) => write!(f, "error[domain]: {e}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "smallcones", version, about = "Exact lattice, root and small-cone computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Abstract,
    Embedded,
}

#[derive(Args, Debug, Clone)]
struct LatticeArgs {
    /// Lattice JSON file: {"label": .., "gram": [[..]]}.
    #[arg(long)]
    lattice: Option<PathBuf>,
    /// Named lattice: U, U(n), E8, K3, pell(n,d), <k> or an ADE symbol.
    #[arg(long, conflicts_with = "lattice")]
    builtin: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct RegionArgs {
    /// `full`, or two rays `x1,y1;x2,y2` in rank 2.
    #[arg(long, default_value = "full")]
    region: String,
    /// Use every wall with |λ_i| ≤ N instead of a geometric region.
    #[arg(long, conflicts_with = "region")]
    bound: Option<u64>,
}

#[derive(Args, Debug, Clone)]
struct FanArgs {
    #[command(flatten)]
    lattice: LatticeArgs,
    #[command(flatten)]
    region: RegionArgs,
    /// Interior point fixing the positive cone.
    #[arg(long, allow_hyphen_values = true)]
    reference: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, signature, determinant and discriminant group.
    Info(LatticeArgs),
    /// Roots of a negative-definite lattice.
    Roots(LatticeArgs),
    /// ADE type of the root system.
    Ade(LatticeArgs),
    /// Weyl group order of an ADE type or of a lattice's roots.
    WeylOrder {
        #[arg(long = "type")]
        ade: Option<String>,
        #[command(flatten)]
        lattice: LatticeArgs,
    },
    /// Orthogonal complement of an embedding.
    Complement {
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Primitivity and saturation of an embedding.
    Primitive {
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Walls of the positive cone.
    Walls {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = Mode::Abstract)]
        mode: Mode,
        /// Embedding JSON file, required in embedded mode.
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// Coordinate bound for indefinite complements in embedded mode.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: u32,
    },
    /// Small-cone fan of a rank-2 lattice.
    Fan(FanArgs),
    /// Index of the small cone containing h.
    Locate {
        #[command(flatten)]
        fan: FanArgs,
        /// Fan JSON file produced by `fan`.
        #[arg(long)]
        fan_file: Option<PathBuf>,
        /// Coordinates of h, e.g. `1+sqrt(2),1`.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Do h1 and h2 lie in the same small cone?
    SameCone {
        #[command(flatten)]
        fan: FanArgs,
        #[arg(long)]
        fan_file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        h1: String,
        #[arg(long, allow_hyphen_values = true)]
        h2: String,
    },
    /// Fundamental Pell solution, and the isometry of pell(n,d) when n is given.
    Pell {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: Option<i64>,
    },
    /// Wall and cone orbits of a rank-2 anisotropic lattice.
    OrbitCount {
        #[command(flatten)]
        lattice: LatticeArgs,
        /// Isometry `a,b;c,d`; repeatable. Defaults to the cone automorph.
        #[arg(long, allow_hyphen_values = true)]
        generator: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        /// Also count walls in 1..=K unit translates.
        #[arg(long)]
        translates: Option<u32>,
    },
    /// Number of periods over a point: the Weyl group order of the roots.
    Fiber(LatticeArgs),
    /// Very irrationality and norm of a vector with surd coordinates.
    Irrational {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Weyl chambers of internal roots against small cones.
    CompareDolgachev(FanArgs),
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_lattice(args: &LatticeArgs) -> Result<Lattice, CliError> {
    match (&args.lattice, &args.builtin) {
        (Some(path), _) => json::parse_lattice(&read_json(path)?),
        (None, Some(name)) => builtin_lattice(name),
        (None, None) => Err(CliError::Usage("one of --lattice or --builtin is required".into())),
    }
}

fn load_embedding(path: &Path) -> Result<Embedding, CliError> {
    json::parse_embedding(&read_json(path)?)
}

fn parse_region(args: &RegionArgs) -> Result<Region, CliError> {
    if let Some(b) = args.bound {
        return Ok(Region::CoefficientBound(BigInt::from(b)));
    }
    if args.region.trim().eq_ignore_ascii_case("full") {
        return Ok(Region::FullCone);
    }
    let rays: Vec<&str> = args.region.split(';').collect();
    match rays.as_slice() {
        [a, b] => Ok(Region::Rays(parse_vector(a)?, parse_vector(b)?)),
        _ => Err(CliError::Parse(format!("region must be `full` or `x1,y1;x2,y2`, got `{}`", args.region))),
    }
}

fn region_json(r: &Region) -> Value {
    match r {
        Region::FullCone => json!({"kind": "full"}),
        Region::Rays(a, b) => json!({"kind": "rays", "rays": [json::ints(a), json::ints(b)]}),
        Region::CoefficientBound(b) => json!({"kind": "bound", "bound": json::int(b)}),
    }
}

fn reference_for(l: &Lattice, s: &Option<String>) -> Result<Vec<BigInt>, CliError> {
    match s {
        Some(s) => parse_vector(s),
        None => Ok(default_positive_vector(l)?),
    }
}

fn build_fan(args: &FanArgs) -> Result<SmallConeFan, CliError> {
    let l = load_lattice(&args.lattice)?;
    let region = parse_region(&args.region)?;
    let p = reference_for(&l, &args.reference)?;
    Ok(small_cones_rank2_with(&l, &region, &p)?)
}

fn fan_for_query(args: &FanArgs, file: &Option<PathBuf>) -> Result<SmallConeFan, CliError> {
    match file {
        Some(path) => json::parse_fan(&read_json(path)?),
        None => build_fan(args),
    }
}

fn ade_json(t: &AdeType) -> Value {
    Value::Array(t.symbols().into_iter().map(Value::String).collect())
}

/// The result of one command: a JSON document, or an already rendered SVG.
enum Output {
    Json(Value),
    Svg(String),
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let value = match &cli.command {
        Command::Info(a) => {
            let l = load_lattice(a)?;
            let (pos, neg) = l.signature();
            let disc = l.discriminant_group().ok().map_or(Value::Null, |d| json::ints(&d));
            let mut m = Map::new();
            m.insert("label".into(), l.label().map_or(Value::Null, |s| Value::String(s.into())));
            m.insert("rank".into(), l.rank().into());
            m.insert("signature".into(), json!([pos, neg]));
            m.insert("determinant".into(), json::int(&l.determinant()));
            m.insert("even".into(), true.into());
            m.insert("unimodular".into(), l.is_unimodular().into());
            m.insert("hyperbolic".into(), l.is_hyperbolic().into());
            m.insert("negative_definite".into(), l.is_negative_definite().into());
            m.insert("discriminant_group".into(), disc);
            Value::Object(m)
        }
        Command::Roots(a) => {
            let l = load_lattice(a)?;
            let rs = enumerate_roots(&l)?;
            let ps = positive_system(&rs, &Functional::Lexicographic)?;
            json!({
                "count": rs.len(),
                "roots": Value::Array(rs.roots().iter().map(|r| json::ints(r)).collect()),
                "simple": Value::Array(ps.simple.iter().map(|r| json::ints(r)).collect()),
            })
        }
        Command::Ade(a) => {
            let l = load_lattice(a)?;
            let rs = enumerate_roots(&l)?;
            let t = ade_type(&rs)?;
            json!({"ade": ade_json(&t), "rank": t.rank(), "roots": rs.len()})
        }
        Command::WeylOrder { ade, lattice } => {
            let t = match ade {
                Some(s) => s.parse::<AdeType>()?,
                None => ade_type(&enumerate_roots(&load_lattice(lattice)?)?)?,
            };
            json!({"ade": ade_json(&t), "order": json::int(&t.weyl_order())})
        }
        Command::Complement { embedding } => json::embedding(&load_embedding(embedding)?.orthogonal_complement()?),
        Command::Primitive { embedding } => {
            let e = load_embedding(embedding)?;
            json!({
                "elementary_divisors": json::ints(&e.elementary_divisors()),
                "primitive": e.is_primitive(),
                "saturation": json::embedding(&e.saturate()),
            })
        }
        Command::Walls { lattice, region, mode, embedding, search_bound } => {
            let embedding = match (mode, embedding) {
                (Mode::Embedded, None) => return Err(CliError::Usage("embedded mode requires --embedding".into())),
                (Mode::Embedded, Some(path)) => Some(load_embedding(path)?),
                (Mode::Abstract, _) => None,
            };
            let l = match &embedding {
                Some(e) => e.domain().clone(),
                None => load_lattice(lattice)?,
            };
            let region = parse_region(region)?;
            let mut walls = wall_candidates_abstract(&l, &region)?;
            if let Some(e) = &embedding {
                walls = walls.iter().map(|w| wall_realizability_embedded(e, w, *search_bound)).collect::<Result<_, _>>()?;
            }
            let p = if l.rank() == 2 { Some(default_positive_vector(&l)?) } else { None };
            let entries: Vec<Value> = walls
                .iter()
                .map(|w| {
                    let mut v = json::wall(w);
                    if let (Some(p), Value::Object(m)) = (&p, &mut v) {
                        m.insert("ray".into(), json::ints(&wall_ray(&w.lambda, &l, p)));
                    }
                    v
                })
                .collect();
            json!({
                "lattice": json::lattice(&l),
                "mode": if embedding.is_some() { "embedded" } else { "abstract" },
                "region": region_json(&region),
                "walls": entries,
            })
        }
        Command::Fan(args) => {
            let fan = build_fan(args)?;
            if cli.format == Format::Svg {
                return Ok(Output::Svg(svg::render_fan_svg(&fan)));
            }
            json::fan(&fan)
        }
        Command::Locate { fan, fan_file, h } => {
            let fan = fan_for_query(fan, fan_file)?;
            let h = IrrationalVector::from_surds(fan.lattice().clone(), &parse_surd_vector(h)?)?;
            let i = locate_small_cone(&h, &fan)?;
            let rays = fan.rays();
            json!({"cone": i, "rays": [json::ray(&rays[i]), json::ray(&rays[i + 1])]})
        }
        Command::SameCone { fan, fan_file, h1, h2 } => {
            let fan = fan_for_query(fan, fan_file)?;
            let l = fan.lattice().clone();
            let h1 = IrrationalVector::from_surds(l.clone(), &parse_surd_vector(h1)?)?;
            let h2 = IrrationalVector::from_surds(l, &parse_surd_vector(h2)?)?;
            json!({"same": same_small_cone(&h1, &h2, &fan)?})
        }
        Command::Pell { d, n } => {
            let u = pell_fundamental(&BigInt::from(*d))?;
            let mut m = Map::new();
            m.insert("d".into(), json::int(&u.d));
            m.insert("x".into(), json::int(&u.x));
            m.insert("y".into(), json::int(&u.y));
            if let Some(n) = n {
                let l = Lattice::pell(*n, *d)?;
                m.insert("isometry".into(), json::matrix(&pell_isometry(&l, &u)?));
                m.insert("lattice".into(), json::lattice(&l));
            }
            Value::Object(m)
        }
        Command::OrbitCount { lattice, generator, base, translates } => {
            let l = load_lattice(lattice)?;
            let base = reference_for(&l, base)?;
            let generators = if generator.is_empty() {
                vec![cone_automorph(&l, &base)?]
            } else {
                generator.iter().map(|s| parse_int_matrix(s)).collect::<Result<Vec<_>, _>>()?
            };
            let oc = orbit_count_rank2(&l, &generators, &base)?;
            let mut m = Map::new();
            m.insert("base".into(), json::ints(&base));
            m.insert("cone_orbits".into(), oc.cone_orbits.into());
            m.insert("interval_rays".into(), Value::Array(oc.interval_rays.iter().map(|r| json::ints(r)).collect()));
            m.insert("interval_walls".into(), Value::Array(oc.interval_walls.iter().map(json::wall).collect()));
            m.insert("translation".into(), json::matrix(&oc.translation));
            m.insert("wall_orbits".into(), oc.wall_orbits.into());
            if let Some(k) = translates {
                let counts = (1..=*k)
                    .map(|j| Ok(json!({"k": j, "walls": walls_in_translates(&l, &oc.translation, &base, j)?})))
                    .collect::<Result<Vec<_>, CliError>>()?;
                m.insert("translates".into(), Value::Array(counts));
            }
            Value::Object(m)
        }
        Command::Fiber(a) => {
            let l = load_lattice(a)?;
            let t = ade_type(&enumerate_roots(&l)?)?;
            json!({"ade": ade_json(&t), "order": json::int(&fiber_cardinality(&l)?)})
        }
        Command::Irrational { lattice, h } => {
            let l = load_lattice(lattice)?;
            let h = IrrationalVector::from_surds(l, &parse_surd_vector(h)?)?;
            json!({
                "coordinates": Value::Array(h.coordinates()?.iter().map(json::surd).collect()),
                "norm": json::surd(&h.norm()?),
                "very_irrational": h.very_irrational(),
            })
        }
        Command::CompareDolgachev(args) => {
            let fan = build_fan(args)?;
            let r = dolgachev_comparison(&fan);
            json!({
                "chambers": r.chambers,
                "coincide": r.coincide(),
                "internal_walls": Value::Array(r.internal_walls.iter().map(json::wall).collect()),
                "lattice": json::lattice(fan.lattice()),
                "small_cones": r.small_cones,
                "subdivisions": Value::Array(
                    r.subdivisions.iter().map(|s| Value::Array(s.iter().map(json::wall).collect())).collect()
                ),
            })
        }
    };
    if cli.format == Format::Svg {
        return Err(CliError::Usage("svg output is only available for `fan`".into()));
    }
    Ok(Output::Json(value))
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(is_inline),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// Indented `key: value` lines.
fn render_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                if is_inline(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(val, depth + 1, out);
                }
            }
        }
        Value::Array(items) if !is_inline(v) => {
            for (i, item) in items.iter().enumerate() {
                if is_inline(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    render_text(item, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn render(cli: &Cli, out: Output) -> String {
    match out {
        Output::Svg(s) => s,
        Output::Json(v) if cli.format == Format::Text => {
            let mut s = String::new();
            render_text(&v, 0, &mut s);
            s
        }
        Output::Json(v) => {
            let mut s = String::new();
            json::write_pretty(&v, 0, &mut s);
            s.push('\n');
            s
        }
    }
}

/// Runs one invocation, writing to stdout/stderr, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    let msg = e.to_string();
                    let msg = msg.trim_start_matches("error: ").trim_end();
                    eprintln!("error[usage]: {msg}");
                    1
                }
            };
        }
    };
    let result = execute(&cli).and_then(|out| {
        let text = render(&cli, out);
        match &cli.output {
            Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}

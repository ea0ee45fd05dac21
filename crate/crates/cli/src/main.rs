//! `wonderful`: command-line access to root systems, alcoves, parahoric
//! lattices and the verification suites.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use wonderful_core::affine::{building_window, chart};
use wonderful_core::apartment::{affine_simple_roots, alcove_vertices, denominator_pair, facet_of, reduce_to_alcove};
use wonderful_core::covers::{
    equivariant_model, invariant_direct_image, local_cover, parabolic_weights, roundtrip_check,
};
use wonderful_core::parahoric::{eta_parahoric, generators, parahoric_lattice};
use wonderful_core::rational::{format_q, parse_q};
use wonderful_core::verify::{run_all, run_suite, SuiteReport, VerifyConfig, SUITES};
use wonderful_core::wonderful::{
    bundle_multidegrees, orbit_poset, restrict_direct, restrict_pullback, saturation_defect, theta_of_curve,
};
use wonderful_core::{CartanMatrix, Coweight, CurveDatum, Error, RootSystem};

/// Types exercised by `verify` when no type is given.
const DEFAULT_TYPES: [&str; 6] = ["A1", "A2", "A3", "B2", "C3", "G2"];

#[derive(Args, Debug, Clone)]
struct System {
    /// Type tag: A1..A7, B2..B4, C2..C4, D4, G2, F4.
    #[arg(long = "type", value_name = "TAG", global = true)]
    tag: Option<String>,
    /// JSON file holding an integer Cartan matrix.
    #[arg(long, value_name = "PATH", global = true)]
    cartan: Option<PathBuf>,
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, Weyl group order and the integers c, e, d.
    Rootsys,
    /// Fundamental alcove; with --theta, locate and reduce a point.
    Alcove {
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        theta: Option<String>,
    },
    /// Parahoric lattice at θ, or at η = (a, θ) when --a is given.
    Parahoric {
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        theta: String,
        #[arg(long, value_name = "P/Q")]
        a: Option<String>,
        /// List generators T(A) and u_r(z^m A).
        #[arg(long)]
        generators: bool,
    },
    /// Orbit poset of the wonderful compactification.
    Orbits {
        #[arg(long)]
        dot: bool,
    },
    /// Divisor multidegrees of the Lie-algebra bundle on the toric chart.
    Bundle,
    /// Restriction of the bundle to the curve with coefficients --k.
    Restrict {
        #[arg(long, value_name = "K")]
        k: String,
    },
    /// Facet/parahoric graph of alcoves w·a₀ with ℓ(w) ≤ radius.
    Building {
        #[arg(long, default_value_t = 1)]
        radius: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Local cyclic cover, equivariant exponents and parabolic weights at θ.
    Covers {
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        theta: String,
    },
    /// Run invariant suites.
    Verify {
        /// Run every suite.
        #[arg(long, conflicts_with = "suite")]
        all: bool,
        /// Run one named suite (repeatable).
        #[arg(long, value_name = "NAME")]
        suite: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Chart walls for an affine Weyl word such as s0s1 (or e).
    Chart {
        #[arg(long, default_value = "e")]
        word: String,
    },
}

#[derive(Parser, Debug)]
#[command(
    name = "wonderful",
    version,
    about = "Parahoric lattices, alcoves and wonderful-compactification combinatorics"
)]
struct Cli {
    #[command(flatten)]
    system: System,
    #[command(subcommand)]
    command: Command,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.system, &cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn load(system: &System) -> Result<(String, RootSystem), Failure> {
    match (&system.tag, &system.cartan) {
        (Some(tag), None) => Ok((tag.clone(), RootSystem::from_type_tag(tag)?)),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let entries: Vec<Vec<i64>> = serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("{}: not an integer matrix: {e}", path.display())))?;
            Ok(("custom".to_string(), RootSystem::new(CartanMatrix::new(entries)?)?))
        }
        _ => Err(Failure::Input("exactly one of --type or --cartan is required".into())),
    }
}

fn parse_coweight(rs: &RootSystem, s: &str) -> Result<Coweight, Failure> {
    let theta = Coweight::parse(s)?;
    if theta.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: theta.rank() }.into());
    }
    Ok(theta)
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| Failure::Input(format!("cannot parse {p:?} as an integer: {e}"))))
        .collect()
}

fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('s')
        .skip(1)
        .map(|p| {
            let i: usize = p.parse().map_err(|_| Failure::Input(format!("malformed word {s:?}")))?;
            if i > rank {
                return Err(Error::InvalidWord { letter: i, rank }.into());
            }
            Ok(i)
        })
        .collect::<Result<Vec<_>, _>>()
        .and_then(|w| if s.starts_with('s') { Ok(w) } else { Err(Failure::Input(format!("malformed word {s:?}"))) })
}

fn run(system: &System, command: &Command) -> Result<(), Failure> {
    if let Command::Verify { all, suite, seed } = command {
        return verify(system, *all, suite, *seed);
    }
    let (_, rs) = load(system)?;
    let json = system.json;
    match command {
        Command::Rootsys => rootsys(&rs, json),
        Command::Alcove { theta } => alcove(&rs, theta.as_deref(), json),
        Command::Parahoric { theta, a, generators } => parahoric(&rs, theta, a.as_deref(), *generators, json),
        Command::Orbits { dot } => orbits(&rs, *dot, json),
        Command::Bundle => bundle(&rs, json),
        Command::Restrict { k } => restrict(&rs, k, json),
        Command::Building { radius, dot } => building(&rs, *radius, *dot, json),
        Command::Covers { theta } => covers(&rs, theta, json),
        Command::Chart { word } => chart_cmd(&rs, word, json),
        Command::Verify { .. } => unreachable!(),
    }
}

fn rootsys(rs: &RootSystem, json: bool) -> Result<(), Failure> {
    let ram = rs.ramification_indices();
    if json {
        render::print_json(json!({
            "rank": rs.rank(),
            "cartan": rs.cartan().rows(),
            "roots": rs.roots().iter().map(|r| r.coeffs()).collect::<Vec<_>>(),
            "num_roots": rs.num_roots(),
            "weyl_order": rs.weyl_order(),
            "highest_root": rs.highest_root().coeffs(),
            "c": rs.highest_root_coefficients(),
            "e": rs.torsion_orders(),
            "d": ram,
            "dim_g": rs.dim_g(),
        }));
    } else {
        println!("rank {}", rs.rank());
        println!("|Φ| = {}, |W| = {}, dim 𝔤 = {}", rs.num_roots(), rs.weyl_order(), rs.dim_g());
        println!("highest root {}", rs.highest_root());
        println!("c = {:?}", rs.highest_root_coefficients());
        println!("e = {:?}", rs.torsion_orders());
        println!("d = {:?}", ram);
        println!("positive roots:");
        for r in rs.positive_roots() {
            println!("  {r}");
        }
    }
    Ok(())
}

fn alcove(rs: &RootSystem, theta: Option<&str>, json: bool) -> Result<(), Failure> {
    let vertices = alcove_vertices(rs);
    let walls = affine_simple_roots(rs);
    let located = match theta {
        Some(s) => {
            let theta = parse_coweight(rs, s)?;
            let (point, w) = reduce_to_alcove(rs, &theta)?;
            let facet = facet_of(rs, &point)?;
            let pair = denominator_pair(rs, &point)?;
            Some((theta, point, w, facet, pair))
        }
        None => None,
    };
    if json {
        let mut body = json!({
            "vertices": vertices.iter().map(render::coweight).collect::<Vec<_>>(),
            "walls": walls.iter().map(render::functional).collect::<Vec<_>>(),
        });
        if let Some((theta, point, w, facet, pair)) = &located {
            body["point"] = json!({
                "theta": render::coweight(theta),
                "reduced": render::coweight(point),
                "word": w.word_string(),
                "facet": facet.names(),
                "d": pair.d,
                "lambda": pair.lambda,
            });
        }
        render::print_json(body);
    } else {
        println!("alcove vertices:");
        for (i, v) in vertices.iter().enumerate() {
            println!("  θ_a{i} = {v}");
        }
        println!("walls:");
        for (i, f) in walls.iter().enumerate() {
            println!("  a{i}: {f}");
        }
        if let Some((theta, point, w, facet, pair)) = located {
            println!("θ = {theta}");
            println!("reduced to {point} by w = {}", w.word_string());
            println!("facet {facet}");
            println!("d = {}, λ = {:?}", pair.d, pair.lambda);
        }
    }
    Ok(())
}

fn parahoric(rs: &RootSystem, theta: &str, a: Option<&str>, gens: bool, json: bool) -> Result<(), Failure> {
    let theta = parse_coweight(rs, theta)?;
    let (lattice, a) = match a {
        Some(a) => {
            let a = parse_q(a)?;
            (eta_parahoric(rs, a, &theta)?.lattice().clone(), Some(a))
        }
        None => (parahoric_lattice(rs, &theta), None),
    };
    if json {
        let mut body = json!({ "theta": render::coweight(&theta), "lattice": render::lattice(rs, &lattice) });
        if let Some(a) = a {
            body["a"] = render::q(a);
        }
        if gens {
            body["generators"] = json!(generators(rs, &lattice));
        }
        render::print_json(body);
    } else if gens {
        for g in generators(rs, &lattice) {
            println!("{g}");
        }
    } else {
        match a {
            Some(a) => println!("η = ({}, {theta})", format_q(a)),
            None => println!("θ = {theta}"),
        }
        print!("{}", render::lattice_text(rs, &lattice));
    }
    Ok(())
}

fn orbits(rs: &RootSystem, dot: bool, json: bool) -> Result<(), Failure> {
    let poset = orbit_poset(rs);
    if dot {
        print!("{}", poset.to_dot());
    } else if json {
        render::print_json(json!({
            "orbits": poset.elements().iter().map(|&i| json!({
                "subset": i.names(),
                "codim": poset.codim(i),
                "levi": poset.levi_basis(i).names(),
            })).collect::<Vec<_>>(),
            "edges": poset.hasse_edges().iter().map(|(j, i)| json!([j.names(), i.names()])).collect::<Vec<_>>(),
        }));
    } else {
        for &i in poset.elements() {
            println!("Z_{i}  codim {}  levi {}", poset.codim(i), poset.levi_basis(i));
        }
    }
    Ok(())
}

fn bundle(rs: &RootSystem, json: bool) -> Result<(), Failure> {
    let b = bundle_multidegrees(rs);
    if json {
        render::print_json(json!({
            "multidegrees": rs.roots().iter().zip(b.exponents()).map(|(r, n)| json!({
                "root": r.coeffs(),
                "n": n,
            })).collect::<Vec<_>>(),
        }));
    } else {
        for (r, n) in rs.roots().iter().zip(b.exponents()) {
            println!("  {:<16} n = {n:?}", r.to_string());
        }
    }
    Ok(())
}

fn restrict(rs: &RootSystem, k: &str, json: bool) -> Result<(), Failure> {
    let c = CurveDatum::new(parse_ints(k)?)?;
    let theta = theta_of_curve(rs, &c)?;
    let direct = restrict_direct(rs, &c)?;
    let pullback = restrict_pullback(rs, &c)?;
    let defect = if c.is_standard() { Some(saturation_defect(rs, &c)?) } else { None };
    if json {
        let rows: Vec<Value> = rs
            .roots()
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = json!({ "root": r.coeffs(), "direct": direct.shift(i), "pullback": pullback[i] });
                if let Some(d) = &defect {
                    row["defect"] = json!(d[i]);
                }
                row
            })
            .collect();
        render::print_json(json!({
            "k": c.coefficients(),
            "standard": c.is_standard(),
            "theta": render::coweight(&theta),
            "roots": rows,
        }));
    } else {
        println!("k = {:?}, θ_λ = {theta}, standard = {}", c.coefficients(), c.is_standard());
        for (i, r) in rs.roots().iter().enumerate() {
            let d = defect.as_ref().map(|d| d[i].to_string()).unwrap_or_else(|| "-".into());
            println!(
                "  {:<16} direct {:>2}  pullback {:>2}  defect {d:>2}",
                r.to_string(),
                direct.shift(i),
                pullback[i]
            );
        }
    }
    Ok(())
}

fn building(rs: &RootSystem, radius: usize, dot: bool, json: bool) -> Result<(), Failure> {
    let g = building_window(rs, radius);
    if dot {
        print!("{}", g.to_dot());
    } else if json {
        render::print_json(json!({
            "radius": radius,
            "nodes": g.nodes.iter().map(|n| json!({
                "id": n.id,
                "codim": n.codim,
                "type": n.parahoric_type.names(),
                "point": render::coweight(&n.point),
                "alcoves": n.alcoves.iter().map(|&a| g.nodes[a].id.clone()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "edges": g.edges.iter().map(|&(i, j)| json!([g.nodes[i].id, g.nodes[j].id])).collect::<Vec<_>>(),
        }));
    } else {
        println!("{} alcoves, {} facets, {} incidences", g.alcove_count(), g.nodes.len(), g.edges.len());
        for n in &g.nodes {
            println!("  {:<24} codim {}  type {}", n.id, n.codim, n.parahoric_type.names());
        }
    }
    Ok(())
}

fn covers(rs: &RootSystem, theta: &str, json: bool) -> Result<(), Failure> {
    let theta = parse_coweight(rs, theta)?;
    let cover = local_cover(rs, &theta)?;
    let eq = equivariant_model(rs, &cover, &theta)?;
    let lattice = invariant_direct_image(rs, &cover, &eq)?;
    let parabolic = parabolic_weights(rs, &theta)?;
    let ok = roundtrip_check(rs, &theta)?;
    if json {
        render::print_json(json!({
            "theta": render::coweight(&theta),
            "cover": { "d": cover.d, "lambda": cover.lambda },
            "equivariant": rs.roots().iter().zip(&eq.exponents).map(|(r, j)| json!({ "root": r.coeffs(), "j": j })).collect::<Vec<_>>(),
            "lattice": render::lattice(rs, &lattice),
            "parabolic": {
                "denominator": parabolic.denominator,
                "weights": parabolic.weights.iter().map(|&w| render::q(w)).collect::<Vec<_>>(),
                "multiplicities": parabolic.multiplicities,
                "flag_dims": parabolic.flag_dims,
            },
            "roundtrip": ok,
        }));
    } else {
        println!("θ = {theta}: d = {}, λ = {:?}", cover.d, cover.lambda);
        for ((r, j), m) in rs.roots().iter().zip(&eq.exponents).zip(lattice.shifts()) {
            println!("  {:<16} j = {j:>2}  m = {m}", r.to_string());
        }
        println!("weights [{}] multiplicities {:?}", render::join_q(&parabolic.weights), parabolic.multiplicities);
        println!("flag dims {:?}", parabolic.flag_dims);
        println!("roundtrip {}", if ok { "ok" } else { "FAILED" });
    }
    Ok(())
}

fn chart_cmd(rs: &RootSystem, word: &str, json: bool) -> Result<(), Failure> {
    let word = parse_word(word, rs.rank())?;
    let c = chart(rs, &word)?;
    let name = wonderful_core::apartment::word_string(&c.word);
    if json {
        render::print_json(
            json!({ "word": name, "walls": c.walls.iter().map(render::functional).collect::<Vec<_>>() }),
        );
    } else {
        println!("chart {name}");
        for (i, f) in c.walls.iter().enumerate() {
            println!("  a{i}: {f}");
        }
    }
    Ok(())
}

fn verify(system: &System, all: bool, suites: &[String], seed: u64) -> Result<(), Failure> {
    if !all && suites.is_empty() {
        return Err(Failure::Input(format!("pass --all or --suite NAME (one of {})", SUITES.join(", "))));
    }
    let targets: Vec<(String, RootSystem)> = if system.tag.is_some() || system.cartan.is_some() {
        vec![load(system)?]
    } else {
        DEFAULT_TYPES
            .iter()
            .map(|t| Ok((t.to_string(), RootSystem::from_type_tag(t)?)))
            .collect::<Result<_, Error>>()?
    };
    let cfg = VerifyConfig { seed, ..VerifyConfig::default() };
    let mut results: Vec<(String, Vec<SuiteReport>)> = Vec::new();
    for (tag, rs) in &targets {
        let reports = if all {
            run_all(rs, tag, &cfg)?
        } else {
            let mut out = Vec::new();
            for name in suites {
                let rep = run_suite(rs, tag, name, &cfg)?
                    .ok_or_else(|| Failure::Input(format!("unknown suite {name:?} (one of {})", SUITES.join(", "))))?;
                out.push(rep);
            }
            out
        };
        results.push((tag.clone(), reports));
    }
    let passed = results.iter().all(|(_, reps)| reps.iter().all(SuiteReport::passed));
    if system.json {
        render::print_json(json!({
            "seed": seed,
            "passed": passed,
            "types": results.iter().map(|(tag, reps)| json!({
                "type": tag,
                "suites": reps.iter().map(|r| json!({
                    "name": r.name,
                    "passed": r.passed(),
                    "checks": r.checks,
                    "failures": r.failures,
                    "witnesses": r.witnesses,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }));
    } else {
        println!("verify seed={seed}");
        for (tag, reps) in &results {
            println!("[{tag}]");
            for r in reps {
                println!("{r}");
            }
        }
        println!("{}", if passed { "all suites passed" } else { "some suites FAILED" });
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

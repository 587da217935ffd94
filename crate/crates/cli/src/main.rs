mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monotile::exactnum::parse_scalar;
use monotile::geometry::disjoint_cells;
use monotile::render::{render_supertile, ColorScheme, RenderOptions};
use monotile::sequences::{fib_table, g_closed_table, g_recurrence, lucas_table, tile_counts};
use monotile::substitution::{build, measured_supervector, Dataset, SupertileKind};
use monotile::supervectors::{
    rotation_divisor, tan_alpha, theta_float, total_rotation_float, v_closed, TileParams,
};

#[derive(Parser)]
#[command(
    name = "monotile",
    version,
    about = "Hat-family supertiles in exact arithmetic"
)]
struct Cli {
    /// First edge length, e.g. "1", "r3", "3/2+1/2*r3".
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    a: String,
    /// Second edge length.
    #[arg(long, global = true, default_value = "r3", allow_hyphen_values = true)]
    b: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory with tile.toml / layout.toml overriding the built-in data.
    #[arg(long, global = true, env = "MONOTILE_DATA_DIR")]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqKind {
    Fib,
    Lucas,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Hat,
    Thc,
}

impl From<KindArg> for SupertileKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Hat => SupertileKind::Hat,
            KindArg::Thc => SupertileKind::Thc,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Checks {
    Counts,
    Supervector,
    Disjoint,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Rotation,
    Mono,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the first COUNT terms of F_n, L_n or G_n.
    Sequence {
        kind: SeqKind,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Supervectors and rotation angles for n = 0..N_MAX.
    Vectors {
        #[arg(long, default_value_t = 6)]
        n_max: u64,
    },
    /// Build a supertile and run checks on it.
    Build {
        kind: KindArg,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        gen: u32,
        #[arg(long, value_enum, default_value_t = Checks::Counts)]
        checks: Checks,
    },
    /// Write a supertile as SVG.
    Render {
        kind: KindArg,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        gen: u32,
        /// Output file; defaults to KIND-GEN.svg.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Draw the hexagonal kite grid.
        #[arg(long)]
        grid: bool,
        /// Supervector depth below the root, or "none".
        #[arg(long, default_value = "0")]
        supervectors: String,
        #[arg(long, value_enum, default_value_t = SchemeArg::Rotation)]
        scheme: SchemeArg,
        #[arg(long, default_value_t = 0.05)]
        stroke_width: f64,
        #[arg(long, default_value_t = 1.0)]
        margin: f64,
        /// Largest number of hat paths plus arrows to emit.
        #[arg(long, default_value_t = 200_000)]
        max_nodes: u64,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..))]
        max_gen: u32,
    },
}

enum Failure {
    /// Bad arguments or data: exit code 2.
    Usage(String),
    /// A check did not pass: exit code 1.
    Check,
}

type CmdResult = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Sequence { kind, count } => cmd_sequence(&cli, *kind, *count),
        Cmd::Vectors { n_max } => cmd_vectors(&cli, *n_max),
        Cmd::Build { kind, gen, checks } => cmd_build(&cli, (*kind).into(), *gen, *checks),
        Cmd::Render { .. } => cmd_render(&cli),
        Cmd::Verify { max_gen } => cmd_verify(&cli, *max_gen),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn params(cli: &Cli) -> Result<TileParams, Failure> {
    let a = parse_scalar(&cli.a).map_err(|e| usage(format!("--a: {e}")))?;
    let b = parse_scalar(&cli.b).map_err(|e| usage(format!("--b: {e}")))?;
    TileParams::new(a, b).map_err(usage)
}

fn dataset(cli: &Cli) -> Result<Dataset, Failure> {
    Dataset::load(cli.data_dir.as_deref()).map_err(usage)
}

fn cmd_sequence(cli: &Cli, kind: SeqKind, count: u64) -> CmdResult {
    let (name, terms, verified) = match kind {
        SeqKind::Fib => ("fib", fib_table(count - 1), None),
        SeqKind::Lucas => ("lucas", lucas_table(count - 1), None),
        SeqKind::G => {
            let closed = g_closed_table(count).map_err(usage)?;
            let ok = closed == g_recurrence(count);
            ("g", closed, Some(ok))
        }
    };
    let text: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
    match cli.format {
        Format::Text => {
            println!("{}", text.join(" "));
            match verified {
                Some(true) => println!("verified: closed form equals the recurrence"),
                Some(false) => println!("FAILED: closed form and recurrence differ"),
                None => {}
            }
        }
        Format::Json => {
            let mut v = json!({ "sequence": name, "count": count, "terms": text });
            if let Some(ok) = verified {
                v["verified"] = json!(ok);
            }
            print_json(&v);
        }
    }
    if verified == Some(false) {
        return Err(Failure::Check);
    }
    Ok(())
}

fn params_json(p: &TileParams) -> Value {
    let beta = p.beta();
    json!({
        "a": p.a().to_string(),
        "b": p.b().to_string(),
        "s": p.s().to_string(),
        "t": p.t().to_string(),
        "tan_beta": beta.tan_beta.to_string(),
        "beta": beta.beta_f64(),
        "classification": beta.classification.as_str(),
        "warnings": beta.warnings(),
    })
}

fn cmd_vectors(cli: &Cli, n_max: u64) -> CmdResult {
    let p = params(cli)?;
    let g = g_closed_table(n_max).map_err(usage)?;
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let v = v_closed(n, &p);
        let (alpha, gn, dn) = if n == 0 {
            (None, None, None)
        } else {
            let a = tan_alpha(n, &p).map_err(usage)?.0.to_string();
            let d = rotation_divisor(n, &p).map_err(usage)?.to_string();
            (Some(a), Some(g[n as usize - 1].to_string()), Some(d))
        };
        rows.push(json!({
            "n": n,
            "vx": v.x.to_string(),
            "vy": v.y.to_string(),
            "theta": theta_float(n, &p),
            "tan_alpha": alpha,
            "g": gn,
            "divisor": dn,
        }));
    }
    let total = total_rotation_float(&p);
    match cli.format {
        Format::Json => print_json(&json!({
            "params": params_json(&p),
            "rows": rows,
            "total_rotation": total,
        })),
        Format::Text => {
            let beta = p.beta();
            println!(
                "Tile({}, {}): s = {}, t = {}, tan(beta) = {} ({}, beta = {:.9} rad)",
                p.a(),
                p.b(),
                p.s(),
                p.t(),
                beta.tan_beta,
                beta.classification,
                beta.beta_f64()
            );
            for w in beta.warnings() {
                println!("warning: {w}");
            }
            println!(
                "{:>3}  {:<28} {:>13}  {:<28} G_n",
                "n", "V_n", "theta_n", "tan(alpha_n)"
            );
            for r in &rows {
                let text = |k: &str| r[k].as_str().unwrap_or("-").to_string();
                println!(
                    "{:>3}  {:<28} {:>13.9}  {:<28} {}",
                    r["n"].to_string(),
                    format!("({}, {})", text("vx"), text("vy")),
                    r["theta"].as_f64().unwrap_or(0.0),
                    text("tan_alpha"),
                    text("g")
                );
            }
            println!("total rotation: {total:.12} rad");
        }
    }
    Ok(())
}

fn cmd_build(cli: &Cli, kind: SupertileKind, gen: u32, checks: Checks) -> CmdResult {
    let p = params(cli)?;
    if checks == Checks::Disjoint && !p.is_hat() {
        return Err(usage(
            "the disjoint check needs the hat parameters --a 1 --b r3",
        ));
    }
    let d = dataset(cli)?;
    let start = Instant::now();
    let node = build(kind, gen, &p, &d.tile, d.table()).map_err(usage)?;
    let build_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut results: Vec<(&str, Option<bool>, String)> = Vec::new();
    let want = |c: Checks| checks == c || checks == Checks::All;
    let start = Instant::now();
    let hats: Vec<_> = node.hats().collect();
    let reflected = hats.iter().filter(|q| q.reflected()).count();
    if want(Checks::Counts) {
        let expected = tile_counts(kind, gen as u64);
        let ok = expected == hats.len().into();
        results.push((
            "counts",
            Some(ok),
            format!("{} hats, recurrence {expected}", hats.len()),
        ));
    }
    let sv = measured_supervector(&node);
    if want(Checks::Supervector) {
        let closed = v_closed(gen as u64, &p);
        let ok = sv == closed;
        results.push((
            "supervector",
            Some(ok),
            format!("measured {sv}, closed form {closed}"),
        ));
    }
    if want(Checks::Disjoint) {
        if p.is_hat() {
            let (ok, detail) = match disjoint_cells(&hats, &d.tile.cells) {
                Ok(r) => match r.collision {
                    None => (r.cells == 8 * hats.len(), format!("{} kite cells", r.cells)),
                    Some(c) => (
                        false,
                        format!("hats {} and {} share kite {}", c.first, c.second, c.cell),
                    ),
                },
                Err(e) => (false, e.to_string()),
            };
            results.push(("disjoint", Some(ok), detail));
        } else {
            results.push(("disjoint", None, "skipped: needs hat parameters".into()));
        }
    }
    let check_ms = start.elapsed().as_secs_f64() * 1e3;
    let all_ok = results.iter().all(|r| r.1 != Some(false));

    match cli.format {
        Format::Json => print_json(&json!({
            "kind": kind.as_str(),
            "generation": gen,
            "params": { "a": p.a().to_string(), "b": p.b().to_string() },
            "hats": hats.len(),
            "reflected": reflected,
            "children": node.children().len(),
            "supervector": { "x": sv.x.to_string(), "y": sv.y.to_string() },
            "checks": results.iter().map(|(name, ok, detail)| json!({
                "name": name,
                "status": match ok { Some(true) => "pass", Some(false) => "fail", None => "skipped" },
                "detail": detail,
            })).collect::<Vec<_>>(),
            "passed": all_ok,
            "build_ms": build_ms,
            "check_ms": check_ms,
        })),
        Format::Text => {
            println!(
                "{kind}-{gen}: {} hats ({reflected} reflected), {} children, supervector {sv}",
                hats.len(),
                node.children().len()
            );
            for (name, ok, detail) in &results {
                let status = match ok {
                    Some(true) => "PASS",
                    Some(false) => "FAIL",
                    None => "SKIP",
                };
                println!("  {status} {name}: {detail}");
            }
            println!("  built in {build_ms:.1} ms, checked in {check_ms:.1} ms");
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_render(cli: &Cli) -> CmdResult {
    let Cmd::Render {
        kind,
        gen,
        out,
        grid,
        supervectors,
        scheme,
        stroke_width,
        margin,
        max_nodes,
    } = &cli.cmd
    else {
        unreachable!("dispatched on the render subcommand");
    };
    let kind: SupertileKind = (*kind).into();
    let show_supervectors = match supervectors.as_str() {
        "none" => None,
        s => Some(s.parse::<u32>().map_err(|_| {
            usage(format!(
                "--supervectors: expected a depth or \"none\", got {s:?}"
            ))
        })?),
    };
    let opts = RenderOptions {
        show_grid: *grid,
        show_supervectors,
        color_scheme: match scheme {
            SchemeArg::Rotation => ColorScheme::Rotation,
            SchemeArg::Mono => ColorScheme::Mono,
        },
        stroke_width: *stroke_width,
        margin: *margin,
        max_svg_nodes: *max_nodes,
    };
    let p = params(cli)?;
    let d = dataset(cli)?;
    let node = build(kind, *gen, &p, &d.tile, d.table()).map_err(usage)?;
    let rendered = render_supertile(&node, &p, &d.tile, &opts).map_err(usage)?;
    let path = out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{kind}-{gen}.svg")));
    std::fs::write(&path, &rendered.svg).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    match cli.format {
        Format::Json => print_json(&json!({
            "path": path.display().to_string(),
            "hat_paths": rendered.hat_paths,
            "arrows": rendered.arrows,
            "bytes": rendered.svg.len(),
        })),
        Format::Text => println!(
            "wrote {}: {} hat paths, {} supervector arrows",
            path.display(),
            rendered.hat_paths,
            rendered.arrows
        ),
    }
    Ok(())
}

fn cmd_verify(cli: &Cli, max_gen: u32) -> CmdResult {
    let d = Dataset::load_unchecked(cli.data_dir.as_deref()).map_err(usage)?;
    let results = verify::run(&d, max_gen);
    let all_ok = results.iter().all(|r| r.passed);
    match cli.format {
        Format::Json => print_json(&json!({
            "max_gen": max_gen,
            "data": d.source.as_ref().map(|s| s.display().to_string()),
            "results": results.iter().map(|r| json!({
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
                "ms": r.millis,
            })).collect::<Vec<_>>(),
            "passed": all_ok,
        })),
        Format::Text => {
            for (i, r) in results.iter().enumerate() {
                println!(
                    "{} {:>2}. {}: {} ({:.1} ms)",
                    if r.passed { "PASS" } else { "FAIL" },
                    i + 1,
                    r.name,
                    r.detail,
                    r.millis
                );
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                println!("all {} checks passed", results.len());
            } else {
                println!("{failed} of {} checks failed", results.len());
            }
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

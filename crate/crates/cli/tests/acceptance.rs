//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Tolerances and time budgets are fixed here.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use monotile::exactnum::{parse_scalar, QSqrt3, VecE};
use monotile::geometry::{disjoint_cells, lattice_decompose};
use monotile::render::{render_supertile, RenderOptions};
use monotile::sequences::{g_closed, g_closed_table, g_recurrence, lucas, tile_counts};
use monotile::substitution::{build, expand, measured_supervector, Dataset, SupertileKind};
use monotile::supervectors::{
    tan_alpha, theta_float, total_rotation_float, v_closed, v_recurrence, TileParams,
};

const ANGLE_TOL: f64 = 1e-12;
const PHI2_TOL: f64 = 1e-9;
const PHI4_TOL: f64 = 1e-6;
const SEED: u64 = 0x6861_7421;

const LISTED_G: [u64; 13] = [
    3,
    11,
    67,
    451,
    3083,
    21123,
    144771,
    992267,
    6801091,
    46615363,
    319506443,
    2189929731,
    15010001667,
];

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn params(a: &str, b: &str) -> TileParams {
    TileParams::new(parse_scalar(a).unwrap(), parse_scalar(b).unwrap()).unwrap()
}

fn pt(x: i64, y3: i64) -> VecE {
    VecE::new(QSqrt3::from_int(x), QSqrt3::from_ratios(0, 1, y3, 1))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Three rational (a, b) pairs drawn from a fixed seed.
fn random_rational_sets() -> Vec<(String, String)> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut draw = || format!("{}/{}", rng.random_range(1..=12), rng.random_range(1..=7));
    (0..3).map(|_| (draw(), draw())).collect()
}

fn eq1() -> Outcome {
    let hat = TileParams::hat();
    let want = [pt(0, 2), pt(1, 3), pt(3, 7), pt(8, 18)];
    for (n, w) in want.iter().enumerate() {
        let n = n as u64;
        ensure(v_closed(n, &hat) == *w, || {
            format!("v_closed({n}) = {}", v_closed(n, &hat))
        })?;
        ensure(v_recurrence(n, &hat) == *w, || {
            format!("v_recurrence({n}) = {}", v_recurrence(n, &hat))
        })?;
    }
    Ok("(0, 2r3), (1, 3r3), (3, 7r3), (8, 18r3) from both forms".into())
}

fn lemma() -> Outcome {
    let sets = [("1", "r3"), ("r3", "1"), ("2", "3"), ("5/2", "1/3")];
    for (a, b) in sets {
        let p = params(a, b);
        let v: Vec<VecE> = (0..=200).map(|n| v_closed(n, &p)).collect();
        for n in 2..=200 {
            let rec = &v[n - 1].scale(&QSqrt3::from_int(3)) - &v[n - 2];
            ensure(v[n] == rec, || format!("n = {n} at ({a}, {b})"))?;
        }
    }
    Ok("n = 2..200 at 4 parameter sets".into())
}

fn g_table() -> Outcome {
    let closed = g_closed_table(13).map_err(|e| e.to_string())?;
    let rec = g_recurrence(13);
    for (i, &g) in LISTED_G.iter().enumerate() {
        ensure(closed[i] == g.into() && rec[i] == g.into(), || {
            format!("G_{}", i + 1)
        })?;
    }
    let closed = g_closed_table(500).map_err(|e| e.to_string())?;
    ensure(closed == g_recurrence(500), || {
        "closed form and recurrence differ below 500".into()
    })?;
    for n in 1..=1000u64 {
        let l = lucas(4 * n - 2);
        ensure((l * 8u32 + 21u32) % 15u32 == 0u32.into(), || {
            format!("15 does not divide at n = {n}")
        })?;
    }
    ensure(
        g_closed(13).map_err(|e| e.to_string())? == 15010001667u64.into(),
        || "G_13".into(),
    )?;
    Ok("13 listed terms, agreement to n = 500, divisibility to n = 1000".into())
}

/// Literal identity tan(alpha_n) G_n = s/t.
fn angle_identity() -> Outcome {
    let mut sets: Vec<(String, String)> =
        vec![("1".into(), "r3".into()), ("r3".into(), "1".into())];
    sets.extend(random_rational_sets());
    let g = g_closed_table(50).map_err(|e| e.to_string())?;
    let mut good = Vec::new();
    let mut bad = Vec::new();
    for (a, b) in &sets {
        let p = params(a, b);
        let ratio = p.s().checked_div(p.t()).map_err(|e| e.to_string())?;
        let first_bad = (1..=50u64).find(|&n| {
            let lhs = tan_alpha(n, &p)
                .map(|t| t.0)
                .unwrap_or_else(|_| QSqrt3::from_int(-1));
            lhs.mul_int(&g[n as usize - 1].clone().into()) != ratio
        });
        match first_bad {
            None => good.push(format!("({}, {})", p.a(), p.b())),
            Some(n) => bad.push(format!("({}, {}) from n = {n}", p.a(), p.b())),
        }
    }
    if bad.is_empty() {
        Ok(format!("holds at {}", good.join(", ")))
    } else {
        Err(format!(
            "holds at {}; fails at {}",
            good.join(", "),
            bad.join(", ")
        ))
    }
}

fn total_rotation() -> Outcome {
    let hat = TileParams::hat();
    let limit = 0.25f64.asin();
    let t40 = theta_float(40, &hat);
    let total = total_rotation_float(&hat);
    ensure((t40 - limit).abs() <= ANGLE_TOL, || {
        format!("theta_40 = {t40}")
    })?;
    ensure((total - limit).abs() <= ANGLE_TOL, || {
        format!("total = {total}")
    })?;
    // alpha_n falls below one f64 ulp of theta near n = 20, so strict growth is
    // checked on the exact increments and the floats only must not decrease.
    for n in 1..=40 {
        let step = tan_alpha(n, &hat).map_err(|e| e.to_string())?;
        ensure(step.0.is_positive(), || format!("alpha_{n} <= 0"))?;
        ensure(theta_float(n, &hat) >= theta_float(n - 1, &hat), || {
            format!("theta_{n} decreased")
        })?;
    }
    Ok(format!(
        "theta_40 = total = {t40:.15}, arcsin(1/4) = {limit:.15}"
    ))
}

fn scaling() -> Outcome {
    let hat = TileParams::hat();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r = v_closed(20, &hat).norm_f64() / v_closed(19, &hat).norm_f64();
    ensure((r - phi * phi).abs() <= PHI2_TOL, || {
        format!("|V_20|/|V_19| = {r}")
    })?;
    let t10 = tan_alpha(10, &hat).map_err(|e| e.to_string())?.0.to_f64();
    let t11 = tan_alpha(11, &hat).map_err(|e| e.to_string())?.0.to_f64();
    ensure((t10 / t11 - phi.powi(4)).abs() <= PHI4_TOL, || {
        format!("tan ratio = {}", t10 / t11)
    })?;
    Ok(format!("{r:.12} vs phi^2, {:.9} vs phi^4", t10 / t11))
}

fn construction(d: &Dataset) -> Outcome {
    let runs = [(params("1", "r3"), 6u32), (params("2", "3"), 4)];
    for (p, max) in &runs {
        for kind in [SupertileKind::Hat, SupertileKind::Thc] {
            for n in 2..=*max {
                let node = build(kind, n, p, &d.tile, d.table()).map_err(|e| e.to_string())?;
                let got = measured_supervector(&node);
                ensure(got == v_closed(n as u64, p), || {
                    format!("{kind}-{n} at ({}, {}) measured {got}", p.a(), p.b())
                })?;
            }
        }
    }
    Ok("hat/thc n = 2..6 at the hat, n = 2..4 at (2, 3)".into())
}

fn counts(d: &Dataset) -> Outcome {
    let want = [1u64, 8, 55, 377, 2584, 17711];
    let hat = TileParams::hat();
    for (i, &w) in want.iter().enumerate() {
        let n = i as u32 + 1;
        ensure(
            tile_counts(SupertileKind::Hat, n as u64) == w.into(),
            || format!("recurrence at n = {n}"),
        )?;
        let node =
            build(SupertileKind::Hat, n, &hat, &d.tile, d.table()).map_err(|e| e.to_string())?;
        let got = expand(&node).len() as u64;
        ensure(got == w, || format!("hat-{n} expands to {got}, want {w}"))?;
    }
    Ok("1, 8, 55, 377, 2584, 17711".into())
}

fn non_overlap(d: &Dataset) -> Outcome {
    let hat = TileParams::hat();
    for n in 1..=5 {
        let node =
            build(SupertileKind::Hat, n, &hat, &d.tile, d.table()).map_err(|e| e.to_string())?;
        let hats: Vec<_> = node.hats().collect();
        for q in &hats {
            lattice_decompose(q.translation()).map_err(|e| format!("hat-{n}: {e}"))?;
        }
        let rep = disjoint_cells(&hats, &d.tile.cells).map_err(|e| e.to_string())?;
        ensure(rep.is_disjoint() && rep.cells == 8 * hats.len(), || {
            format!("hat-{n}: {} cells for {} hats", rep.cells, hats.len())
        })?;
    }
    Ok("hat-1..hat-5 disjoint, 8 cells per hat, all translations on the lattice".into())
}

/// Literal claim: closed, simple, area exactly 8ab.
fn outline(d: &Dataset) -> Outcome {
    let sets = [
        ("1", "r3"),
        ("r3", "1"),
        ("1", "1"),
        ("2", "3"),
        ("5/2", "1/3"),
    ];
    let mut bad = Vec::new();
    for (a, b) in sets {
        let p = params(a, b);
        let proto = d
            .tile
            .instantiate(&p)
            .map_err(|e| format!("({a}, {b}): {e}"))?;
        let eight_ab = (p.a() * p.b()).mul_int(&8.into());
        if let Err(e) = proto.outline.validate(&p, &eight_ab) {
            bad.push(format!("({a}, {b}): {e}"));
        }
    }
    if bad.is_empty() {
        Ok("closed, simple, area 8ab at 5 parameter sets".into())
    } else {
        Err(format!("closed at all 5 sets; {}", bad.join("; ")))
    }
}

fn renderer(d: &Dataset) -> Outcome {
    let hat = TileParams::hat();
    let node = build(SupertileKind::Hat, 3, &hat, &d.tile, d.table()).map_err(|e| e.to_string())?;
    let opts = RenderOptions::default();
    let first = render_supertile(&node, &hat, &d.tile, &opts).map_err(|e| e.to_string())?;
    let second = render_supertile(&node, &hat, &d.tile, &opts).map_err(|e| e.to_string())?;
    let doc = roxmltree::Document::parse(&first.svg).map_err(|e| e.to_string())?;
    let paths = doc
        .descendants()
        .filter(|n| n.has_tag_name("path"))
        .filter(|n| {
            n.attribute("class")
                .is_some_and(|c| c.split(' ').any(|w| w == "hat"))
        })
        .count();
    ensure(paths == 55, || format!("{paths} hat paths"))?;
    ensure(first.svg.as_bytes() == second.svg.as_bytes(), || {
        "runs differ".into()
    })?;
    Ok(format!("55 hat paths, {} identical bytes", first.svg.len()))
}

fn end_to_end() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_monotile");
    let run = |args: &[&str], dir: Option<&Path>| {
        let mut cmd = Command::new(bin);
        cmd.args(args).env_remove("MONOTILE_DATA_DIR");
        if let Some(dir) = dir {
            cmd.arg("--data-dir").arg(dir);
        }
        cmd.output().map_err(|e| e.to_string())
    };
    let ok = run(&["verify", "--max-gen", "5"], None)?;
    ensure(ok.status.success(), || {
        format!(
            "verify exited {:?}: {}",
            ok.status.code(),
            String::from_utf8_lossy(&ok.stdout)
        )
    })?;

    // One lattice step on the generation-2 dock.
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let layout = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/layout.toml"),
    )
    .map_err(|e| e.to_string())?;
    let shifted = layout.replace("shift = [0, 0, 0, 0]", "shift = [0, 0, 2, 0]");
    ensure(shifted != layout, || {
        "no dock shift found in layout.toml".into()
    })?;
    std::fs::write(dir.path().join("layout.toml"), shifted).map_err(|e| e.to_string())?;
    let bad = run(&["verify", "--max-gen", "5"], Some(dir.path()))?;
    let out = String::from_utf8_lossy(&bad.stdout).into_owned();
    ensure(!bad.status.success(), || {
        "perturbed layout still exits 0".into()
    })?;
    let named = out
        .lines()
        .find(|l| l.starts_with("FAIL") && l.contains("check failed"))
        .ok_or_else(|| format!("no named failure in output: {out}"))?;
    let reason = named.split(": ").skip(1).collect::<Vec<_>>().join(": ");
    Ok(format!(
        "clean run exits 0; shifted dock exits {:?} with {reason}",
        bad.status.code()
    ))
}

fn main() -> ExitCode {
    let d = Dataset::builtin();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "first supervectors",
            Duration::from_millis(1),
            Box::new(eq1),
        ),
        (
            "three-term recurrence",
            Duration::from_secs(1),
            Box::new(lemma),
        ),
        ("G_n table", Duration::from_secs(1), Box::new(g_table)),
        (
            "angle identity tan(alpha_n) G_n = s/t",
            Duration::from_secs(1),
            Box::new(angle_identity),
        ),
        (
            "total rotation limit",
            Duration::from_secs(1),
            Box::new(total_rotation),
        ),
        ("phi scaling", Duration::from_secs(1), Box::new(scaling)),
        (
            "construction supervectors",
            Duration::from_secs(10),
            Box::new(|| construction(&d)),
        ),
        (
            "tile counts",
            Duration::from_secs(10),
            Box::new(|| counts(&d)),
        ),
        (
            "non-overlap",
            Duration::from_secs(30),
            Box::new(|| non_overlap(&d)),
        ),
        (
            "outline validation",
            Duration::from_secs(1),
            Box::new(|| outline(&d)),
        ),
        (
            "renderer",
            Duration::from_secs(5),
            Box::new(|| renderer(&d)),
        ),
        (
            "end-to-end verify",
            Duration::from_secs(120),
            Box::new(end_to_end),
        ),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > *budget => Err(format!("{d}, but took longer than {budget:?}")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!(
            "{tag} {:>2}. {name} [{:.1} ms]: {detail}",
            i + 1,
            took.as_secs_f64() * 1e3
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The `verify` suite: every checked claim, one result line each.

use std::time::Instant;

use monotile::exactnum::{parse_scalar, QSqrt3, VecE};
use monotile::geometry::{disjoint_cells, lattice_decompose, tile_area};
use monotile::render::{render_supertile, RenderOptions};
use monotile::sequences::{g_closed, g_closed_table, g_recurrence, lucas, tile_counts};
use monotile::substitution::{build_levels, measured_supervector, Dataset, SupertileKind};
use monotile::supervectors::{
    rotation_divisor, tan_alpha, theta_float, total_rotation_float, v_closed, v_recurrence,
    v_recurrence_table, TileParams,
};
use num_traits::ToPrimitive;

pub const LISTED_G: [u64; 13] = [
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

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: f64,
}

type Outcome = Result<String, String>;
type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn params(a: &str, b: &str) -> TileParams {
    TileParams::new(
        parse_scalar(a).expect("literal scalar"),
        parse_scalar(b).expect("literal scalar"),
    )
    .expect("positive literal parameters")
}

/// Parameter sets used throughout: hat, turtle, a = b, and two rational pairs.
pub fn parameter_sets() -> Vec<(&'static str, &'static str)> {
    vec![
        ("1", "r3"),
        ("r3", "1"),
        ("1", "1"),
        ("2", "3"),
        ("5/2", "1/3"),
    ]
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

fn check_layout(d: &Dataset) -> Outcome {
    d.validate().map_err(|e| e.to_string())?;
    Ok(format!(
        "generations 1..{} at {} parameter sets",
        d.layout.max_generation,
        d.layout.validation_params.len() + 1
    ))
}

fn check_eq1() -> Outcome {
    let hat = TileParams::hat();
    let want = [pt(0, 2), pt(1, 3), pt(3, 7), pt(8, 18)];
    for (n, w) in want.iter().enumerate() {
        let n = n as u64;
        ensure(&v_closed(n, &hat) == w, || {
            format!("closed V_{n} = {}", v_closed(n, &hat))
        })?;
        ensure(&v_recurrence(n, &hat) == w, || {
            format!("recurrence V_{n} = {}", v_recurrence(n, &hat))
        })?;
    }
    Ok("V_0..V_3 = (0, 2r3), (1, 3r3), (3, 7r3), (8, 18r3)".into())
}

fn check_lemma() -> Outcome {
    let three = QSqrt3::from_int(3);
    for (a, b) in parameter_sets().into_iter().take(4) {
        let p = params(a, b);
        let closed: Vec<VecE> = (0..=200).map(|n| v_closed(n, &p)).collect();
        for n in 2..=200usize {
            ensure(
                closed[n] == &closed[n - 1].scale(&three) - &closed[n - 2],
                || format!("V_{n} != 3V_{} - V_{} at ({a}, {b})", n - 1, n - 2),
            )?;
        }
        ensure(closed == v_recurrence_table(200, &p), || {
            format!("closed form and recurrence differ at ({a}, {b})")
        })?;
    }
    Ok("n = 2..200 at 4 parameter sets".into())
}

fn check_g() -> Outcome {
    let closed = g_closed_table(500).map_err(|e| e.to_string())?;
    let rec = g_recurrence(500);
    for (i, &g) in LISTED_G.iter().enumerate() {
        ensure(closed[i] == g.into() && rec[i] == g.into(), || {
            format!("G_{} = {} / {}, listed {g}", i + 1, closed[i], rec[i])
        })?;
    }
    ensure(closed == rec, || {
        "closed form and recurrence differ below n = 500".into()
    })?;
    for n in 1..=1000u64 {
        let v = lucas(4 * n - 2) * 8u32 + 21u32;
        ensure((v % 15u32) == 0u32.into(), || {
            format!("15 does not divide 8L_{}+21", 4 * n - 2)
        })?;
    }
    Ok("13 listed terms, n <= 500 agree, 15 | 8L+21 for n <= 1000".into())
}

fn check_angle() -> Outcome {
    for (a, b) in [("1", "r3"), ("r3", "1")] {
        let p = params(a, b);
        let beta = p.beta().tan_beta;
        for n in 1..=50u64 {
            let g = QSqrt3::from_bigint(g_closed(n).map_err(|e| e.to_string())?.into());
            let lhs = &tan_alpha(n, &p).map_err(|e| e.to_string())?.0 * &g;
            ensure(lhs == beta, || {
                format!("tan(alpha_{n}) G_{n} != tan(beta) at ({a}, {b})")
            })?;
        }
    }
    for (a, b) in [("2", "3"), ("5/2", "1/3"), ("3", "7/4")] {
        let p = params(a, b);
        let beta = p.beta().tan_beta;
        for n in 1..=50u64 {
            let d = rotation_divisor(n, &p).map_err(|e| e.to_string())?;
            let lhs = &tan_alpha(n, &p).map_err(|e| e.to_string())?.0 * &d;
            ensure(lhs == beta, || {
                format!("tan(alpha_{n}) D_{n} != tan(beta) at ({a}, {b})")
            })?;
        }
    }
    Ok("tan(alpha_n) G_n = tan(beta) at hat and turtle; tan(alpha_n) D_n = tan(beta) at 3 rational sets, n = 1..50".into())
}

fn check_limits() -> Outcome {
    let hat = TileParams::hat();
    let limit = 0.25f64.asin();
    let t40 = theta_float(40, &hat);
    let total = total_rotation_float(&hat);
    ensure((t40 - limit).abs() <= 1e-12, || format!("theta_40 = {t40}"))?;
    ensure((total - limit).abs() <= 1e-12, || {
        format!("total rotation = {total}")
    })?;
    // The increments drop below f64 resolution near n = 20, so strict growth
    // is checked exactly through tan(alpha_n) > 0.
    for n in 1..=40 {
        let step = tan_alpha(n, &hat).map_err(|e| e.to_string())?;
        ensure(step.0.is_positive(), || {
            format!("alpha_{n} is not positive")
        })?;
        ensure(theta_float(n, &hat) >= theta_float(n - 1, &hat), || {
            format!("theta decreases at n = {n}")
        })?;
    }
    Ok(format!("theta_40 = total = {limit:.15}"))
}

fn check_scaling() -> Outcome {
    let hat = TileParams::hat();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r = v_closed(20, &hat).norm_f64() / v_closed(19, &hat).norm_f64();
    ensure((r - phi * phi).abs() <= 1e-9, || {
        format!("|V_20|/|V_19| = {r}")
    })?;
    let t10 = tan_alpha(10, &hat).map_err(|e| e.to_string())?.0.to_f64();
    let t11 = tan_alpha(11, &hat).map_err(|e| e.to_string())?.0.to_f64();
    let q = t10 / t11;
    ensure((q - phi.powi(4)).abs() <= 1e-6, || {
        format!("tan ratio = {q}")
    })?;
    Ok(format!("|V_20|/|V_19| = {r:.12}, tan ratio = {q:.9}"))
}

fn check_construction(d: &Dataset, max_gen: u32) -> Outcome {
    let hat = TileParams::hat();
    let levels = build_levels(max_gen, &hat, &d.tile, d.table()).map_err(|e| e.to_string())?;
    for (i, (h, c)) in levels.iter().enumerate() {
        let n = i as u64 + 1;
        for node in [h, c] {
            let got = measured_supervector(node);
            ensure(got == v_closed(n, &hat), || {
                format!("{}-{n} measured {got}", node.kind())
            })?;
        }
    }
    let p = params("2", "3");
    let levels = build_levels(max_gen.min(4), &p, &d.tile, d.table()).map_err(|e| e.to_string())?;
    for (i, (h, c)) in levels.iter().enumerate() {
        let n = i as u64 + 1;
        for node in [h, c] {
            let got = measured_supervector(node);
            ensure(got == v_closed(n, &p), || {
                format!("{}-{n} at (2, 3) measured {got}", node.kind())
            })?;
        }
    }
    Ok(format!(
        "hat/thc n = 2..{max_gen} at hat, n = 2..{} at (2, 3)",
        max_gen.min(4)
    ))
}

fn check_counts(d: &Dataset, max_gen: u32) -> Outcome {
    let levels =
        build_levels(max_gen, &TileParams::hat(), &d.tile, d.table()).map_err(|e| e.to_string())?;
    let mut seen = Vec::new();
    for (i, (h, _)) in levels.iter().enumerate() {
        let n = i as u64 + 1;
        let count = h.hats().count() as u64;
        let want = tile_counts(SupertileKind::Hat, n)
            .to_u64()
            .unwrap_or(u64::MAX);
        ensure(count == want, || {
            format!("hat-{n} expands to {count}, recurrence {want}")
        })?;
        seen.push(count.to_string());
    }
    Ok(seen.join(", "))
}

fn check_disjoint(d: &Dataset, max_gen: u32) -> Outcome {
    let levels =
        build_levels(max_gen, &TileParams::hat(), &d.tile, d.table()).map_err(|e| e.to_string())?;
    for (i, (h, _)) in levels.iter().enumerate() {
        let n = i + 1;
        let hats: Vec<_> = h.hats().collect();
        for q in &hats {
            lattice_decompose(q.translation()).map_err(|e| format!("hat-{n}: {e}"))?;
        }
        let rep = disjoint_cells(&hats, &d.tile.cells).map_err(|e| e.to_string())?;
        if let Some(c) = rep.collision {
            return Err(format!(
                "hat-{n}: hats {} and {} share kite {}",
                c.first, c.second, c.cell
            ));
        }
        ensure(rep.cells == 8 * hats.len(), || {
            format!("hat-{n}: {} cells", rep.cells)
        })?;
    }
    Ok(format!(
        "hat-1..hat-{max_gen} disjoint with 8 kites per hat"
    ))
}

fn check_outline(d: &Dataset) -> Outcome {
    for (a, b) in parameter_sets() {
        let p = params(a, b);
        let proto = d
            .tile
            .instantiate(&p)
            .map_err(|e| format!("({a}, {b}): {e}"))?;
        proto
            .outline
            .validate(&p, &tile_area(&p))
            .map_err(|e| format!("({a}, {b}): {e}"))?;
    }
    let hat = TileParams::hat();
    let area = d
        .tile
        .instantiate(&hat)
        .map_err(|e| e.to_string())?
        .outline
        .shoelace_area();
    let eight_ab = (hat.a() * hat.b()).mul_int(&8.into());
    ensure(area == eight_ab, || format!("hat area {area}"))?;
    Ok(
        "closed and simple at 5 parameter sets, area 2r3 a^2 + 3ab + r3 b^2 (8ab at the hat)"
            .into(),
    )
}

fn check_render(d: &Dataset) -> Outcome {
    let p = TileParams::hat();
    let levels = build_levels(3, &p, &d.tile, d.table()).map_err(|e| e.to_string())?;
    let node = &levels[2].0;
    let opts = RenderOptions::default();
    let first = render_supertile(node, &p, &d.tile, &opts).map_err(|e| e.to_string())?;
    let second = render_supertile(node, &p, &d.tile, &opts).map_err(|e| e.to_string())?;
    let paths = first.svg.matches("<path class=\"hat").count();
    ensure(paths == 55, || format!("{paths} hat paths"))?;
    ensure(first.svg == second.svg, || {
        "output differs between runs".into()
    })?;
    Ok(format!(
        "hat-3: {paths} paths, {} bytes, deterministic",
        first.svg.len()
    ))
}

/// Runs the suite in a fixed order.
pub fn run(d: &Dataset, max_gen: u32) -> Vec<CheckResult> {
    let checks: Vec<Check<'_>> = vec![
        ("layout config validation", Box::new(|| check_layout(d))),
        ("first supervectors", Box::new(check_eq1)),
        ("V_n = 3V_(n-1) - V_(n-2)", Box::new(check_lemma)),
        ("G_n table and integrality", Box::new(check_g)),
        ("rotation angle tangents", Box::new(check_angle)),
        ("total rotation limit", Box::new(check_limits)),
        ("phi^2 / phi^4 scaling", Box::new(check_scaling)),
        (
            "constructed supervectors",
            Box::new(move || check_construction(d, max_gen)),
        ),
        (
            "tile counts by expansion",
            Box::new(move || check_counts(d, max_gen)),
        ),
        (
            "kite-cell disjointness",
            Box::new(move || check_disjoint(d, max_gen)),
        ),
        ("tile outline", Box::new(|| check_outline(d))),
        ("SVG rendering", Box::new(|| check_render(d))),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let out = f();
            let millis = start.elapsed().as_secs_f64() * 1e3;
            let (passed, detail) = match out {
                Ok(s) => (true, s),
                Err(s) => (false, s),
            };
            CheckResult {
                name,
                passed,
                detail,
                millis,
            }
        })
        .collect()
}

//! SVG output for supertiles.

use std::fmt::Write as _;

use thiserror::Error;

use crate::exactnum::{QSqrt3, VecE};
use crate::geometry::{extend_box, lattice_point, unit30, GeometryError};
use crate::substitution::{Placement, SupertileNode, TileData};
use crate::supervectors::TileParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorScheme {
    /// One hue per rotation class, reflected hats hatched.
    Rotation,
    /// Grey hats, reflected hats darker.
    Mono,
}

impl std::str::FromStr for ColorScheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rotation" => Ok(ColorScheme::Rotation),
            "mono" => Ok(ColorScheme::Mono),
            _ => Err(format!(
                "unknown color scheme {s:?} (expected rotation or mono)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub show_grid: bool,
    /// Draw supervectors of the root and of descendants down to this depth;
    /// `None` draws none.
    pub show_supervectors: Option<u32>,
    pub color_scheme: ColorScheme,
    pub stroke_width: f64,
    pub margin: f64,
    /// Upper bound on emitted hat paths plus arrows.
    pub max_svg_nodes: u64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_grid: false,
            show_supervectors: Some(0),
            color_scheme: ColorScheme::Rotation,
            stroke_width: 0.05,
            margin: 1.0,
            max_svg_nodes: 200_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("rendering needs {needed} elements, above the max_svg_nodes cap of {cap}")]
    TooLarge { needed: u64, cap: u64 },
    #[error("invalid render options: {0}")]
    Options(String),
    #[error("the hexagonal grid is only defined for the hat, Tile(1, r3)")]
    GridNeedsHat,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub svg: String,
    pub hat_paths: usize,
    pub arrows: usize,
}

/// Fixed 9-decimal formatting with trailing zeros trimmed.
pub fn fmt_num(v: f64) -> String {
    let mut s = format!("{v:.9}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Screen coordinates: y grows downward, so the y-axis is flipped.
fn screen(v: &VecE) -> (f64, f64) {
    let (x, y) = v.to_f64();
    (x, -y)
}

fn point(out: &mut String, v: &VecE) {
    let (x, y) = screen(v);
    let _ = write!(out, "{} {}", fmt_num(x), fmt_num(y));
}

const HUES: [&str; 6] = [
    "#4e79a7", "#f28e2b", "#59a14f", "#b07aa1", "#edc948", "#76b7b2",
];
const ARROW_COLORS: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#17becf",
];

fn arrows_needed(node: &SupertileNode, depth: u32) -> u64 {
    if depth == 0 || node.children().is_empty() {
        return 1;
    }
    node.children().iter().fold(1u64, |acc, c| {
        acc.saturating_add(arrows_needed(&c.node, depth - 1))
    })
}

fn collect_arrows(
    node: &SupertileNode,
    at: &Placement,
    depth: u32,
    out: &mut Vec<(u32, VecE, VecE)>,
) {
    out.push((
        node.generation(),
        at.apply(node.tail()),
        at.apply(node.head()),
    ));
    if depth == 0 {
        return;
    }
    for c in node.children() {
        collect_arrows(&c.node, &at.compose(&c.placement), depth - 1, out);
    }
}

pub fn render_supertile(
    node: &SupertileNode,
    p: &TileParams,
    tile: &TileData,
    opts: &RenderOptions,
) -> Result<Rendered, RenderError> {
    if !(opts.stroke_width > 0.0 && opts.stroke_width.is_finite()) {
        return Err(RenderError::Options("stroke width must be positive".into()));
    }
    if !(opts.margin >= 0.0 && opts.margin.is_finite()) {
        return Err(RenderError::Options("margin must be non-negative".into()));
    }
    if opts.show_grid && !p.is_hat() {
        return Err(RenderError::GridNeedsHat);
    }
    let arrow_count = opts.show_supervectors.map_or(0, |d| arrows_needed(node, d));
    let needed = node.hat_count().saturating_add(arrow_count);
    if needed > opts.max_svg_nodes {
        return Err(RenderError::TooLarge {
            needed,
            cap: opts.max_svg_nodes,
        });
    }

    let proto = tile.instantiate(p)?;
    let mut body = String::new();
    let mut lo = node.tail().clone();
    let mut hi = node.tail().clone();
    let mut hat_paths = 0;
    for q in node.hats() {
        let outline = proto.outline.apply_placement(&q);
        let class = if q.reflected() {
            "hat reflected".to_string()
        } else {
            format!("hat r{}", q.rotation_k())
        };
        let _ = write!(body, "<path class=\"{class}\" d=\"");
        for (i, v) in outline.vertices().iter().enumerate() {
            extend_box(&mut lo, &mut hi, v);
            body.push_str(if i == 0 { "M" } else { " L" });
            point(&mut body, v);
        }
        body.push_str(" Z\"/>\n");
        hat_paths += 1;
    }

    let mut arrows = Vec::new();
    if let Some(depth) = opts.show_supervectors {
        collect_arrows(node, &Placement::identity(), depth, &mut arrows);
    }
    let mut arrow_body = String::new();
    for (g, t, h) in &arrows {
        let ci = (g - 1) % ARROW_COLORS.len() as u32;
        extend_box(&mut lo, &mut hi, t);
        extend_box(&mut lo, &mut hi, h);
        let (x1, y1) = screen(t);
        let (x2, y2) = screen(h);
        let _ = writeln!(
            arrow_body,
            "<line class=\"supervector gen{g} c{ci}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" marker-end=\"url(#arrow{ci})\"/>",
            fmt_num(x1),
            fmt_num(y1),
            fmt_num(x2),
            fmt_num(y2),
        );
    }

    let grid = if opts.show_grid {
        Some(grid_path(&lo, &hi))
    } else {
        None
    };

    let (lx, ly) = lo.to_f64();
    let (hx, hy) = hi.to_f64();
    let m = opts.margin;
    let (vx, vy) = (lx - m, -hy - m);
    let (vw, vh) = (hx - lx + 2.0 * m, hy - ly + 2.0 * m);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        fmt_num(vx),
        fmt_num(vy),
        fmt_num(vw),
        fmt_num(vh)
    );
    let _ = writeln!(
        svg,
        "<title>{}-{} supertile, {} hats</title>",
        node.kind(),
        node.generation(),
        hat_paths
    );
    svg.push_str(&defs(opts));
    if let Some(g) = grid {
        let _ = writeln!(
            svg,
            "<g id=\"grid\">\n<path class=\"grid\" d=\"{g}\"/>\n</g>"
        );
    }
    let _ = write!(svg, "<g id=\"hats\">\n{body}</g>\n");
    if !arrows.is_empty() {
        let _ = write!(svg, "<g id=\"supervectors\">\n{arrow_body}</g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(Rendered {
        svg,
        hat_paths,
        arrows: arrows.len(),
    })
}

fn defs(opts: &RenderOptions) -> String {
    let sw = fmt_num(opts.stroke_width);
    let mut css = String::new();
    let _ = writeln!(
        css,
        ".hat {{ stroke: #222222; stroke-width: {sw}; stroke-linejoin: round; }}"
    );
    match opts.color_scheme {
        ColorScheme::Rotation => {
            for (k, hue) in HUES.iter().enumerate() {
                let _ = writeln!(css, ".r{k} {{ fill: {hue}; }}");
            }
            css.push_str(".reflected { fill: url(#hatch); }\n");
        }
        ColorScheme::Mono => {
            css.push_str(".hat { fill: #dddddd; }\n.reflected { fill: #777777; }\n");
        }
    }
    let _ = writeln!(
        css,
        ".grid {{ fill: none; stroke: #bbbbbb; stroke-width: {}; }}",
        fmt_num(opts.stroke_width / 2.0)
    );
    let _ = writeln!(
        css,
        ".supervector {{ stroke-width: {}; }}",
        fmt_num(opts.stroke_width * 3.0)
    );
    for (i, c) in ARROW_COLORS.iter().enumerate() {
        let _ = writeln!(css, ".c{i} {{ stroke: {c}; }}");
    }

    let mut out = String::from("<defs>\n<style type=\"text/css\"><![CDATA[\n");
    out.push_str(&css);
    out.push_str("]]></style>\n");
    out.push_str(
        "<pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"0.5\" height=\"0.5\" patternTransform=\"rotate(45)\">\n\
         <rect width=\"0.5\" height=\"0.5\" fill=\"#555555\"/>\n\
         <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"0.5\" stroke=\"#bbbbbb\" stroke-width=\"0.15\"/>\n\
         </pattern>\n",
    );
    for (i, c) in ARROW_COLORS.iter().enumerate() {
        let _ = writeln!(
            out,
            "<marker id=\"arrow{i}\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" orient=\"auto\"><path d=\"M0 0 L10 5 L0 10 Z\" fill=\"{c}\"/></marker>"
        );
    }
    out.push_str("</defs>\n");
    out
}

/// Outlines of every lattice hexagon whose centre lies within two units of
/// the box, as one path.
fn grid_path(lo: &VecE, hi: &VecE) -> String {
    let (lx, ly) = lo.to_f64();
    let (hx, hy) = hi.to_f64();
    let r3 = 3f64.sqrt();
    // centre = (3m, √3(m + 2n))
    let m_lo = ((lx - 2.0) / 3.0).floor() as i64;
    let m_hi = ((hx + 2.0) / 3.0).ceil() as i64;
    let mut d = String::new();
    for m in m_lo..=m_hi {
        let n_lo = (((ly - 2.0) / r3 - m as f64) / 2.0).floor() as i64;
        let n_hi = (((hy + 2.0) / r3 - m as f64) / 2.0).ceil() as i64;
        for n in n_lo..=n_hi {
            let c = lattice_point(m, n);
            let (cx, cy) = c.to_f64();
            if cx < lx - 2.0 || cx > hx + 2.0 || cy < ly - 2.0 || cy > hy + 2.0 {
                continue;
            }
            for k in 0..6 {
                let v = &c + &unit30(2 * k).scale(&QSqrt3::from_int(2));
                if !d.is_empty() {
                    d.push(' ');
                }
                d.push(if k == 0 { 'M' } else { 'L' });
                point(&mut d, &v);
            }
            d.push_str(" Z");
        }
    }
    d
}

use std::sync::Arc;

use monotile::exactnum::parse_scalar;
use monotile::render::{render_supertile, ColorScheme, RenderError, RenderOptions, Rendered};
use monotile::substitution::{build, Dataset, SupertileKind, SupertileNode};
use monotile::supervectors::TileParams;

fn node(kind: SupertileKind, n: u32, p: &TileParams) -> Arc<SupertileNode> {
    let d = Dataset::builtin();
    build(kind, n, p, &d.tile, d.table()).unwrap()
}

fn render(kind: SupertileKind, n: u32, opts: &RenderOptions) -> Rendered {
    let p = TileParams::hat();
    render_supertile(&node(kind, n, &p), &p, &Dataset::builtin().tile, opts).unwrap()
}

fn has_class(n: &roxmltree::Node, class: &str) -> bool {
    n.attribute("class")
        .is_some_and(|c| c.split(' ').any(|w| w == class))
}

fn attr(n: &roxmltree::Node, name: &str) -> f64 {
    n.attribute(name).unwrap().parse().unwrap()
}

#[test]
fn hat3_paths() {
    let r = render(SupertileKind::Hat, 3, &RenderOptions::default());
    let doc = roxmltree::Document::parse(&r.svg).unwrap();
    let hats = doc
        .descendants()
        .filter(|n| n.has_tag_name("path") && has_class(n, "hat"))
        .count();
    assert_eq!(hats, 55);
    assert_eq!(r.hat_paths, 55);
    let reflected = doc
        .descendants()
        .filter(|n| has_class(n, "reflected"))
        .count();
    assert_eq!(reflected, 7);
}

#[test]
fn deterministic() {
    let opts = RenderOptions {
        show_grid: true,
        show_supervectors: Some(2),
        ..RenderOptions::default()
    };
    let a = render(SupertileKind::Thc, 3, &opts);
    let b = render(SupertileKind::Thc, 3, &opts);
    assert_eq!(a.svg.as_bytes(), b.svg.as_bytes());
}

#[test]
fn thc2_has_one_reflected_hat() {
    let r = render(SupertileKind::Thc, 2, &RenderOptions::default());
    let doc = roxmltree::Document::parse(&r.svg).unwrap();
    let paths: Vec<_> = doc
        .descendants()
        .filter(|n| n.has_tag_name("path") && has_class(n, "hat"))
        .collect();
    assert_eq!(paths.len(), 7);
    assert_eq!(
        paths.iter().filter(|n| has_class(n, "reflected")).count(),
        1
    );
}

#[test]
fn hat1_single_path_and_arrow() {
    let r = render(SupertileKind::Hat, 1, &RenderOptions::default());
    assert_eq!((r.hat_paths, r.arrows), (1, 1));
    let doc = roxmltree::Document::parse(&r.svg).unwrap();
    assert_eq!(
        doc.descendants()
            .filter(|n| has_class(n, "supervector"))
            .count(),
        1
    );
}

#[test]
fn arrow_endpoints_match_supervector() {
    for (a, b) in [("1", "r3"), ("2", "3")] {
        let p = TileParams::new(parse_scalar(a).unwrap(), parse_scalar(b).unwrap()).unwrap();
        for kind in [SupertileKind::Hat, SupertileKind::Thc] {
            let n = node(kind, 3, &p);
            let r = render_supertile(&n, &p, &Dataset::builtin().tile, &RenderOptions::default())
                .unwrap();
            let doc = roxmltree::Document::parse(&r.svg).unwrap();
            let line = doc
                .descendants()
                .find(|n| has_class(n, "supervector"))
                .unwrap();
            assert!(has_class(&line, "gen3"));
            let (tx, ty) = n.tail().to_f64();
            let (hx, hy) = n.head().to_f64();
            // Screen coordinates flip y.
            let want = [tx, -ty, hx, -hy];
            let got = [
                attr(&line, "x1"),
                attr(&line, "y1"),
                attr(&line, "x2"),
                attr(&line, "y2"),
            ];
            for (g, w) in got.iter().zip(want) {
                assert!((g - w).abs() < 1e-9, "{kind} at ({a}, {b}): {g} vs {w}");
            }
        }
    }
}

#[test]
fn arrow_depth_counts() {
    let none = RenderOptions {
        show_supervectors: None,
        ..RenderOptions::default()
    };
    let r = render(SupertileKind::Hat, 3, &none);
    assert_eq!(r.arrows, 0);
    assert!(!r.svg.contains("<line class=\"supervector"));

    let one = RenderOptions {
        show_supervectors: Some(1),
        ..RenderOptions::default()
    };
    let r = render(SupertileKind::Hat, 3, &one);
    // The root plus its seven children.
    assert_eq!(r.arrows, 8);
    assert_eq!(r.svg.matches("<line class=\"supervector").count(), 8);
}

#[test]
fn viewbox_contains_every_vertex() {
    let r = render(SupertileKind::Hat, 2, &RenderOptions::default());
    let doc = roxmltree::Document::parse(&r.svg).unwrap();
    let vb: Vec<f64> = doc
        .root_element()
        .attribute("viewBox")
        .unwrap()
        .split(' ')
        .map(|v| v.parse().unwrap())
        .collect();
    for path in doc.descendants().filter(|n| has_class(n, "hat")) {
        let d = path.attribute("d").unwrap();
        for pair in d
            .split(['M', 'L', 'Z'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let mut it = pair.split(' ').map(|v| v.parse::<f64>().unwrap());
            let (x, y) = (it.next().unwrap(), it.next().unwrap());
            assert!(x >= vb[0] && x <= vb[0] + vb[2] && y >= vb[1] && y <= vb[1] + vb[3]);
        }
    }
}

#[test]
fn grid_and_schemes() {
    let grid = RenderOptions {
        show_grid: true,
        ..RenderOptions::default()
    };
    let r = render(SupertileKind::Hat, 2, &grid);
    let doc = roxmltree::Document::parse(&r.svg).unwrap();
    assert!(doc.descendants().any(|n| n.attribute("id") == Some("grid")));

    let mono = RenderOptions {
        color_scheme: ColorScheme::Mono,
        ..RenderOptions::default()
    };
    let m = render(SupertileKind::Hat, 2, &mono);
    let c = render(SupertileKind::Hat, 2, &RenderOptions::default());
    assert_ne!(m.svg, c.svg);
}

#[test]
fn option_errors() {
    let p = TileParams::hat();
    let tile = Dataset::builtin().tile;
    let big = node(SupertileKind::Hat, 12, &p);
    assert!(matches!(
        render_supertile(&big, &p, &tile, &RenderOptions::default()),
        Err(RenderError::TooLarge { .. })
    ));
    let small = node(SupertileKind::Hat, 1, &p);
    let bad = RenderOptions {
        stroke_width: 0.0,
        ..RenderOptions::default()
    };
    assert!(matches!(
        render_supertile(&small, &p, &tile, &bad),
        Err(RenderError::Options(_))
    ));

    let q = TileParams::new(parse_scalar("2").unwrap(), parse_scalar("3").unwrap()).unwrap();
    let grid = RenderOptions {
        show_grid: true,
        ..RenderOptions::default()
    };
    let other = node(SupertileKind::Hat, 1, &q);
    assert!(matches!(
        render_supertile(&other, &q, &tile, &grid),
        Err(RenderError::GridNeedsHat)
    ));
}

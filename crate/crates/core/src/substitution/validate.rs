use std::fmt;

use thiserror::Error;

use crate::geometry::{disjoint_cells, edge_connected, tile_area, GeometryError};
use crate::supervectors::{v_closed, TileParams};

use super::{
    build_levels, measured_supervector, LayoutTable, SupertileKind, SupertileNode, TileData,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Outline,
    Build,
    Supervector,
    Lattice,
    Disjoint,
    Connected,
    Parallel,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Outline => "outline",
            Check::Build => "construction",
            Check::Supervector => "supervector",
            Check::Lattice => "lattice",
            Check::Disjoint => "disjointness",
            Check::Connected => "connectivity",
            Check::Parallel => "parallel V1",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("generation {generation} {kind} at (a, b) = ({a}, {b}): {check} check failed: {detail}")]
pub struct ValidationFailure {
    pub generation: u32,
    pub kind: SupertileKind,
    pub a: String,
    pub b: String,
    pub check: Check,
    pub detail: String,
}

/// Builds generations `1..=max_gen` and checks the construction: exact
/// supervectors at every parameter set, plus kite-cell disjointness and
/// connectivity at hat parameters. `params` is checked in addition to the hat.
pub fn validate_layout(
    tile: &TileData,
    layout: &LayoutTable,
    params: &[TileParams],
    max_gen: u32,
) -> Result<(), ValidationFailure> {
    let mut sets = vec![TileParams::hat()];
    sets.extend(params.iter().filter(|p| !p.is_hat()).cloned());
    for p in &sets {
        let fail = |generation, kind, check, detail: String| ValidationFailure {
            generation,
            kind,
            a: p.a().to_string(),
            b: p.b().to_string(),
            check,
            detail,
        };
        let proto = tile
            .instantiate(p)
            .map_err(|e| fail(1, SupertileKind::Hat, Check::Outline, e.to_string()))?;
        proto
            .outline
            .validate(p, &tile_area(p))
            .map_err(|e| fail(1, SupertileKind::Hat, Check::Outline, e.to_string()))?;
        let levels = build_levels(max_gen.max(1), p, tile, layout).map_err(|e| {
            let g = match &e {
                super::BuildError::Meeting { generation, .. } => *generation,
                _ => 1,
            };
            fail(g, SupertileKind::Hat, Check::Build, e.to_string())
        })?;
        for (i, (hat, thc)) in levels.iter().enumerate() {
            let g = i as u32 + 1;
            for node in [hat, thc] {
                if p.is_hat() {
                    check_cells(node, tile).map_err(|(c, d)| fail(g, node.kind(), c, d))?;
                }
                if g == 1 && node.kind() == SupertileKind::Thc {
                    check_parallel(hat, node)
                        .map_err(|d| fail(g, node.kind(), Check::Parallel, d))?;
                }
                let got = measured_supervector(node);
                let want = v_closed(g as u64, p);
                if got != want {
                    return Err(fail(
                        g,
                        node.kind(),
                        Check::Supervector,
                        format!("measured {got}, expected {want}"),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_cells(node: &SupertileNode, tile: &TileData) -> Result<(), (Check, String)> {
    let placements: Vec<_> = node.hats().collect();
    let lattice = |e: GeometryError| (Check::Lattice, e.to_string());
    let report = disjoint_cells(&placements, &tile.cells).map_err(lattice)?;
    if let Some(c) = report.collision {
        return Err((
            Check::Disjoint,
            format!("hats {} and {} share kite {}", c.first, c.second, c.cell),
        ));
    }
    if !edge_connected(&placements, &tile.cells).map_err(lattice)? {
        return Err((
            Check::Connected,
            "hats do not form one edge-connected piece".into(),
        ));
    }
    Ok(())
}

/// The single hat and the compound carry parallel, equally directed V1's.
fn check_parallel(hat: &SupertileNode, thc: &SupertileNode) -> Result<(), String> {
    let v = measured_supervector(hat);
    let w = measured_supervector(thc);
    if !v.cross(&w).is_zero() || !v.dot(&w).is_positive() {
        return Err(format!("compound V1 {w} is not parallel to hat V1 {v}"));
    }
    Ok(())
}

use thiserror::Error;

use crate::geometry::{disjoint_cells, edge_connected};
use crate::supervectors::{v_closed, TileParams};

use super::{build, measured_supervector, EdgeCombo, LayoutTable, SupertileKind, TileData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCandidate {
    /// Lattice offset `m·u1 + n·u2` added to the layout's dock.
    pub offset: (i64, i64),
    pub layout: LayoutTable,
    /// True when the resulting hat-2 also has the closed-form supervector.
    pub supervector_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no piece-4 placement within {radius} lattice steps of the dock passes the filters")]
    Empty { radius: i64 },
}

/// Tries every lattice translation of the generation-2 meeting piece within
/// hexagonal distance `radius` of the layout's dock and keeps those whose
/// hat-2 is edge-connected and, if `require_disjoint`, free of overlaps.
pub fn search_layout(
    tile: &TileData,
    layout: &LayoutTable,
    radius: i64,
    require_disjoint: bool,
) -> Result<Vec<SearchCandidate>, SearchError> {
    let p = TileParams::hat();
    let want = v_closed(2, &p);
    let mut out = Vec::new();
    for m in -radius..=radius {
        for n in -radius..=radius {
            if (m + n).abs() > radius {
                continue;
            }
            let shift = layout
                .second_dock()
                .shift
                .plus(&EdgeCombo::lattice_step(m, n));
            let cand = layout.with_dock_shift(shift);
            let Ok(hat2) = build(SupertileKind::Hat, 2, &p, tile, &cand) else {
                continue;
            };
            let placements: Vec<_> = hat2.hats().collect();
            if require_disjoint {
                match disjoint_cells(&placements, &tile.cells) {
                    Ok(r) if r.is_disjoint() => {}
                    _ => continue,
                }
            }
            if !edge_connected(&placements, &tile.cells).unwrap_or(false) {
                continue;
            }
            out.push(SearchCandidate {
                offset: (m, n),
                supervector_ok: measured_supervector(&hat2) == want,
                layout: cand,
            });
        }
    }
    if out.is_empty() {
        return Err(SearchError::Empty { radius });
    }
    Ok(out)
}

//! Recursive hat-n / thc-n supertiles.

mod build;
mod config;
mod layout;
mod placement;
mod prototile;
mod search;
mod validate;

pub use build::{
    build, build_levels, expand, measured_supervector, BuildError, Child, HatIter, Level, Piece,
    SupertileNode,
};
pub use config::{
    builtin_text, layout_from_config, parse_layout, tile_from_config, ConfigError, Dataset,
    LayoutConfig, FORMAT_VERSION, LAYOUT_FILE, TILE_FILE,
};
pub use layout::{Attach, DockTarget, EdgeCombo, LayoutError, LayoutTable, PieceRule, VertexDock};
pub use placement::Placement;
pub use prototile::{CompoundSpec, Prototile, TileData};
pub use search::{search_layout, SearchCandidate, SearchError};
pub use validate::{validate_layout, Check, ValidationFailure};

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupertileKind {
    Hat,
    Thc,
}

impl SupertileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SupertileKind::Hat => "hat",
            SupertileKind::Thc => "thc",
        }
    }
}

impl fmt::Display for SupertileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SupertileKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hat" => Ok(SupertileKind::Hat),
            "thc" => Ok(SupertileKind::Thc),
            _ => Err(format!(
                "unknown supertile kind {s:?} (expected hat or thc)"
            )),
        }
    }
}

//! Versioned TOML data for the tile outline and the layout table.
//!
//! `tile.toml` holds the turtle program, first-generation anchors, the hat's
//! kite cells and the compound; `layout.toml` holds the piece rules. Both
//! carry `version = 1`. Scalars use the exact grammar of
//! [`crate::exactnum::parse_scalar`].

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::exactnum::parse_scalar;
use crate::geometry::{KiteCell, TurtleSpec};
use crate::supervectors::{make_params, TileParams};

use super::{
    validate_layout, Attach, CompoundSpec, DockTarget, EdgeCombo, LayoutError, LayoutTable,
    PieceRule, TileData, ValidationFailure, VertexDock,
};

pub const FORMAT_VERSION: u32 = 1;
pub const TILE_FILE: &str = "tile.toml";
pub const LAYOUT_FILE: &str = "layout.toml";

const BUILTIN_TILE: &str = include_str!("../../data/tile.toml");
const BUILTIN_LAYOUT: &str = include_str!("../../data/layout.toml");

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{file}: {source}")]
    Io {
        file: String,
        source: std::io::Error,
    },
    #[error("{file}: {source}")]
    Syntax {
        file: String,
        source: Box<toml::de::Error>,
    },
    #[error("{file}: unsupported format version {found}, expected {FORMAT_VERSION}")]
    Version { file: String, found: u32 },
    #[error("{file}: {msg}")]
    Invalid { file: String, msg: String },
    #[error("{file}: {source}")]
    Layout { file: String, source: LayoutError },
    #[error("layout failed validation: {0}")]
    Validation(#[from] ValidationFailure),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TileFile {
    version: u32,
    outline: OutlineSection,
    anchors: AnchorSection,
    cells: CellSection,
    compound: CompoundSection,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OutlineSection {
    turtle: String,
    start_heading: i32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AnchorSection {
    tail_vertex: usize,
    head_vertex: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CellSection {
    kites: Vec<[i64; 3]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CompoundSection {
    partner_rotation: i32,
    partner_reflected: bool,
    partner_vertex: usize,
    onto_vertex: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutFile {
    version: u32,
    compound_rotation: i32,
    piece: Vec<PieceSection>,
    second_generation: SecondSection,
    #[serde(default)]
    validation: ValidationSection,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PieceSection {
    index: u8,
    rotation: i32,
    attach: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SecondSection {
    anchor_vertex: usize,
    dock_target: String,
    dock_vertex: usize,
    own_vertex: usize,
    #[serde(default)]
    shift: [i64; 4],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ValidationSection {
    #[serde(default = "default_max_generation")]
    max_generation: u32,
    #[serde(default)]
    params: Vec<[String; 2]>,
}

impl Default for ValidationSection {
    fn default() -> Self {
        ValidationSection {
            max_generation: default_max_generation(),
            params: Vec::new(),
        }
    }
}

fn default_max_generation() -> u32 {
    4
}

fn parse_toml<T: serde::de::DeserializeOwned>(file: &str, text: &str) -> Result<T, ConfigError> {
    toml::from_str(text).map_err(|e| ConfigError::Syntax {
        file: file.to_string(),
        source: Box::new(e),
    })
}

fn check_version(file: &str, found: u32) -> Result<(), ConfigError> {
    if found != FORMAT_VERSION {
        return Err(ConfigError::Version {
            file: file.to_string(),
            found,
        });
    }
    Ok(())
}

/// Parses `tile.toml` text. Geometric checks happen in [`validate_layout`].
pub fn tile_from_config(text: &str) -> Result<TileData, ConfigError> {
    let f: TileFile = parse_toml(TILE_FILE, text)?;
    check_version(TILE_FILE, f.version)?;
    let invalid = |msg: String| ConfigError::Invalid {
        file: TILE_FILE.to_string(),
        msg,
    };
    let turtle: TurtleSpec = f
        .outline
        .turtle
        .parse()
        .map_err(|e| invalid(format!("{e}")))?;
    let n = turtle.len();
    let c = &f.compound;
    for (name, v) in [
        ("tail_vertex", f.anchors.tail_vertex),
        ("head_vertex", f.anchors.head_vertex),
        ("partner_vertex", c.partner_vertex),
        ("onto_vertex", c.onto_vertex),
    ] {
        if v >= n {
            return Err(invalid(format!(
                "{name} = {v} but the outline has {n} vertices"
            )));
        }
    }
    let cells = f
        .cells
        .kites
        .iter()
        .map(|&[q, r, k]| {
            if (0..6).contains(&k) {
                Ok(KiteCell::new(q, r, k as i32))
            } else {
                Err(invalid(format!("kite corner {k} outside 0..6")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TileData {
        turtle,
        start_heading: f.outline.start_heading,
        tail_vertex: f.anchors.tail_vertex,
        head_vertex: f.anchors.head_vertex,
        cells,
        compound: CompoundSpec {
            partner_rotation: c.partner_rotation,
            partner_reflected: c.partner_reflected,
            partner_vertex: c.partner_vertex,
            onto_vertex: c.onto_vertex,
        },
    })
}

/// Layout rules plus the parameter sets used to validate them.
#[derive(Debug, Clone)]
pub struct LayoutConfig {
    pub table: LayoutTable,
    pub validation_params: Vec<TileParams>,
    pub max_generation: u32,
}

/// Parses `layout.toml` text and checks its structure, without building.
pub fn parse_layout(text: &str) -> Result<LayoutConfig, ConfigError> {
    let f: LayoutFile = parse_toml(LAYOUT_FILE, text)?;
    check_version(LAYOUT_FILE, f.version)?;
    let invalid = |msg: String| ConfigError::Invalid {
        file: LAYOUT_FILE.to_string(),
        msg,
    };
    let mut pieces = Vec::new();
    for p in &f.piece {
        let attach = match p.attach.as_str() {
            "shared-tail" => Attach::SharedTail,
            "chain" => Attach::Chain,
            "meeting" => Attach::Meeting,
            other => return Err(invalid(format!("unknown attach rule {other:?}"))),
        };
        pieces.push(PieceRule {
            index: p.index,
            rotation: p.rotation,
            attach,
        });
    }
    let s = &f.second_generation;
    let target = match s.dock_target.as_str() {
        "compound-hat" => DockTarget::CompoundHat,
        "compound-partner" => DockTarget::CompoundPartner,
        other => match other
            .strip_prefix("piece-")
            .and_then(|d| d.parse::<u8>().ok())
        {
            Some(i) => DockTarget::Piece(i),
            None => return Err(invalid(format!("unknown dock target {other:?}"))),
        },
    };
    let dock = VertexDock {
        target,
        vertex: s.dock_vertex,
        own_vertex: s.own_vertex,
        shift: EdgeCombo(s.shift),
    };
    let table =
        LayoutTable::new(f.compound_rotation, pieces, dock, s.anchor_vertex).map_err(|source| {
            ConfigError::Layout {
                file: LAYOUT_FILE.to_string(),
                source,
            }
        })?;
    let mut validation_params = Vec::new();
    for [a, b] in &f.validation.params {
        let pa = parse_scalar(a).map_err(|e| invalid(e.to_string()))?;
        let pb = parse_scalar(b).map_err(|e| invalid(e.to_string()))?;
        validation_params.push(make_params(pa, pb).map_err(|e| invalid(e.to_string()))?);
    }
    if f.validation.max_generation < 2 {
        return Err(invalid(
            "validation.max_generation must be at least 2".into(),
        ));
    }
    Ok(LayoutConfig {
        table,
        validation_params,
        max_generation: f.validation.max_generation,
    })
}

/// Parses `layout.toml` text and validates it by construction.
pub fn layout_from_config(text: &str, tile: &TileData) -> Result<LayoutTable, ConfigError> {
    let cfg = parse_layout(text)?;
    validate_layout(tile, &cfg.table, &cfg.validation_params, cfg.max_generation)?;
    Ok(cfg.table)
}

/// Tile data and layout loaded together.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub tile: TileData,
    pub layout: LayoutConfig,
    /// Directory the files came from; `None` for the built-in copy.
    pub source: Option<PathBuf>,
}

impl Dataset {
    pub fn builtin() -> Self {
        Dataset {
            tile: tile_from_config(BUILTIN_TILE).expect("built-in tile data parses"),
            layout: parse_layout(BUILTIN_LAYOUT).expect("built-in layout parses"),
            source: None,
        }
    }

    /// Reads `tile.toml` and `layout.toml` from `dir`; a file that is absent
    /// falls back to the built-in copy. Nothing is validated yet.
    pub fn load_unchecked(dir: Option<&Path>) -> Result<Self, ConfigError> {
        let Some(dir) = dir else {
            return Ok(Self::builtin());
        };
        let read = |name: &str, builtin: &'static str| -> Result<String, ConfigError> {
            let path = dir.join(name);
            match std::fs::read_to_string(&path) {
                Ok(s) => Ok(s),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(builtin.to_string()),
                Err(source) => Err(ConfigError::Io {
                    file: path.display().to_string(),
                    source,
                }),
            }
        };
        let tile = tile_from_config(&read(TILE_FILE, BUILTIN_TILE)?)?;
        let layout = parse_layout(&read(LAYOUT_FILE, BUILTIN_LAYOUT)?)?;
        Ok(Dataset {
            tile,
            layout,
            source: Some(dir.to_path_buf()),
        })
    }

    /// Loads and validates.
    pub fn load(dir: Option<&Path>) -> Result<Self, ConfigError> {
        let d = Self::load_unchecked(dir)?;
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), ValidationFailure> {
        validate_layout(
            &self.tile,
            &self.layout.table,
            &self.layout.validation_params,
            self.layout.max_generation,
        )
    }

    pub fn table(&self) -> &LayoutTable {
        &self.layout.table
    }
}

/// Text of the built-in data files, for writing out a starting copy.
pub fn builtin_text(file: &str) -> Option<&'static str> {
    match file {
        TILE_FILE => Some(BUILTIN_TILE),
        LAYOUT_FILE => Some(BUILTIN_LAYOUT),
        _ => None,
    }
}

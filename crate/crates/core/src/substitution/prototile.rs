use crate::exactnum::VecE;
use crate::geometry::{outline_from_turtle, GeometryError, KiteCell, Outline, TurtleSpec};
use crate::supervectors::TileParams;

use super::Placement;

/// How the reflected partner of the two-hat compound is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundSpec {
    pub partner_rotation: i32,
    pub partner_reflected: bool,
    /// Vertex of the partner that lands on `onto_vertex` of the unreflected hat.
    pub partner_vertex: usize,
    pub onto_vertex: usize,
}

/// Parameter-free description of the tile and its first-generation anchors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileData {
    pub turtle: TurtleSpec,
    pub start_heading: i32,
    pub tail_vertex: usize,
    pub head_vertex: usize,
    /// Kite cells of the unplaced hat at hat parameters.
    pub cells: Vec<KiteCell>,
    pub compound: CompoundSpec,
}

/// [`TileData`] instantiated at concrete edge lengths.
#[derive(Debug, Clone)]
pub struct Prototile {
    pub outline: Outline,
    pub tail: VecE,
    pub head: VecE,
    pub partner: Placement,
}

impl TileData {
    pub fn instantiate(&self, p: &TileParams) -> Result<Prototile, GeometryError> {
        let outline = outline_from_turtle(&self.turtle, p, &VecE::zero(), self.start_heading)?;
        let v = |i: usize| -> Result<VecE, GeometryError> {
            outline.vertices().get(i).cloned().ok_or_else(|| {
                GeometryError::Turtle(format!(
                    "vertex {i} out of range for a {}-vertex outline",
                    outline.len()
                ))
            })
        };
        let tail = v(self.tail_vertex)?;
        let head = v(self.head_vertex)?;
        let c = &self.compound;
        let lin = Placement::new(c.partner_rotation, c.partner_reflected, VecE::zero());
        let t = &v(c.onto_vertex)? - &lin.apply(&v(c.partner_vertex)?);
        let partner = Placement::new(c.partner_rotation, c.partner_reflected, t);
        Ok(Prototile {
            outline,
            tail,
            head,
            partner,
        })
    }
}

impl Prototile {
    pub fn vertex(&self, i: usize) -> Option<&VecE> {
        self.outline.vertices().get(i)
    }
}

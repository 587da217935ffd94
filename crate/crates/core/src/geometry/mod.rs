//! Tile outlines, exact polygon predicates and the kite lattice.

mod kite;
mod outline;
mod turtle;

pub use kite::{
    disjoint_cells, edge_connected, hat_kite_cells, lattice_decompose, lattice_point, CellReport,
    Collision, KiteCell, LatticeMotion,
};
pub(crate) use outline::extend_box;
pub use outline::Outline;
pub use turtle::{outline_from_turtle, unit30, EdgeSymbol, TurtleSpec, TurtleStep};

use thiserror::Error;

use crate::exactnum::{QSqrt3, VecE};
use crate::substitution::Placement;
use crate::supervectors::TileParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("turtle program: {0}")]
    Turtle(String),
    #[error("turtle walk does not close; residual {residual}")]
    NotClosed { residual: Box<VecE> },
    #[error("outline is not a simple polygon")]
    NotSimple,
    #[error("edge {edge} has squared length {len2}, expected a^2 or b^2")]
    EdgeLength { edge: usize, len2: Box<QSqrt3> },
    #[error("area {area} differs from the expected {expected}")]
    Area {
        area: Box<QSqrt3>,
        expected: Box<QSqrt3>,
    },
    #[error("translation {0} is not on the hexagon lattice")]
    OffLattice(Box<VecE>),
}

/// Area of Tile(a,b): `2√3·a² + 3ab + √3·b²`, which is `8ab` (eight kites)
/// at the hat and `10ab` at the turtle.
pub fn tile_area(p: &TileParams) -> QSqrt3 {
    let (a, b) = (p.a(), p.b());
    let r3 = QSqrt3::sqrt3();
    &(&(&r3.mul_int(&2.into()) * &(a * a)) + &(a * b).mul_int(&3.into())) + &(&r3 * &(b * b))
}

/// `apply_placement` as a free function.
pub fn apply_placement(o: &Outline, q: &Placement) -> Outline {
    o.apply_placement(q)
}

/// `shoelace_area` as a free function.
pub fn shoelace_area(o: &Outline) -> QSqrt3 {
    o.shoelace_area()
}

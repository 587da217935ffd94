use thiserror::Error;

use crate::exactnum::{QSqrt3, VecE};
use crate::geometry::unit30;
use crate::supervectors::TileParams;

/// How a piece of a generation-n supertile is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attach {
    /// Tail on the tail of the compound child.
    SharedTail,
    /// Tail on the head of the previous piece.
    Chain,
    /// Docked into the missing-third slot of the compound child.
    Meeting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PieceRule {
    pub index: u8,
    /// Rotation in 60° steps relative to the previous piece (the compound for piece 1).
    pub rotation: i32,
    pub attach: Attach,
}

/// Integer combination `a·(i·e0 + j·e60) + b·(k·e30 + l·e90)` of edge vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EdgeCombo(pub [i64; 4]);

impl EdgeCombo {
    pub fn at(&self, p: &TileParams) -> VecE {
        let [i, j, k, l] = self.0;
        let a_part =
            &unit30(0).scale(&QSqrt3::from_int(i)) + &unit30(2).scale(&QSqrt3::from_int(j));
        let b_part =
            &unit30(1).scale(&QSqrt3::from_int(k)) + &unit30(3).scale(&QSqrt3::from_int(l));
        &a_part.scale(p.a()) + &b_part.scale(p.b())
    }

    /// One hexagon-lattice step `m·u1 + n·u2` at hat parameters.
    pub fn lattice_step(m: i64, n: i64) -> Self {
        EdgeCombo([0, 0, 2 * m, 2 * n])
    }

    pub fn plus(&self, other: &EdgeCombo) -> EdgeCombo {
        let mut out = self.0;
        for (o, d) in out.iter_mut().zip(other.0) {
            *o += d;
        }
        EdgeCombo(out)
    }
}

/// A single hat of a generation-2 supertile, by position in the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DockTarget {
    /// The unreflected hat of the compound.
    CompoundHat,
    /// The reflected hat of the compound.
    CompoundPartner,
    /// Hat piece `1..=6`.
    Piece(u8),
}

/// Generation-2 placement of the meeting piece: its `own_vertex` lands on
/// `vertex` of `target`, offset by `shift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexDock {
    pub target: DockTarget,
    pub vertex: usize,
    pub own_vertex: usize,
    pub shift: EdgeCombo,
}

/// Placement rules for the six hat pieces around the compound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutTable {
    compound_rotation: i32,
    pieces: [PieceRule; 6],
    second_dock: VertexDock,
    second_anchor_vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("pieces must be numbered 1 to 6 in order, found {0:?}")]
    PieceSet(Vec<u8>),
    #[error("piece 1 must use the shared-tail rule")]
    FirstNotShared,
    #[error("exactly one piece must use the meeting rule, found {0}")]
    MeetingCount(usize),
    #[error("the meeting rule belongs to piece 4, found on piece {0}")]
    MeetingPiece(u8),
    #[error("piece {0} must chain from the previous piece")]
    NotChained(u8),
    #[error("dock target piece {0} is not a placed hat piece")]
    DockTarget(u8),
    #[error("piece 4 can only dock onto an earlier piece, not piece {target}")]
    DockOrder { target: u8 },
}

impl LayoutTable {
    pub fn new(
        compound_rotation: i32,
        pieces: Vec<PieceRule>,
        second_dock: VertexDock,
        second_anchor_vertex: usize,
    ) -> Result<Self, LayoutError> {
        let indices: Vec<u8> = pieces.iter().map(|p| p.index).collect();
        if indices != [1, 2, 3, 4, 5, 6] {
            return Err(LayoutError::PieceSet(indices));
        }
        let meetings: Vec<&PieceRule> = pieces
            .iter()
            .filter(|p| p.attach == Attach::Meeting)
            .collect();
        if meetings.len() != 1 {
            return Err(LayoutError::MeetingCount(meetings.len()));
        }
        if meetings[0].index != 4 {
            return Err(LayoutError::MeetingPiece(meetings[0].index));
        }
        if pieces[0].attach != Attach::SharedTail {
            return Err(LayoutError::FirstNotShared);
        }
        for p in &pieces[1..] {
            if p.index != 4 && p.attach != Attach::Chain {
                return Err(LayoutError::NotChained(p.index));
            }
        }
        if let DockTarget::Piece(t) = second_dock.target {
            if !(1..=6).contains(&t) {
                return Err(LayoutError::DockTarget(t));
            }
            if t >= 4 {
                return Err(LayoutError::DockOrder { target: t });
            }
        }
        let pieces: [PieceRule; 6] = pieces.try_into().expect("six pieces checked above");
        Ok(LayoutTable {
            compound_rotation,
            pieces,
            second_dock,
            second_anchor_vertex,
        })
    }

    pub fn compound_rotation(&self) -> i32 {
        self.compound_rotation
    }

    pub fn pieces(&self) -> &[PieceRule; 6] {
        &self.pieces
    }

    pub fn piece(&self, index: u8) -> &PieceRule {
        &self.pieces[index as usize - 1]
    }

    pub fn second_dock(&self) -> &VertexDock {
        &self.second_dock
    }

    pub fn second_anchor_vertex(&self) -> usize {
        self.second_anchor_vertex
    }

    /// Absolute 60° rotation of each piece, index 0 being the compound.
    pub fn absolute_rotations(&self) -> [i32; 7] {
        let mut out = [0; 7];
        out[0] = self.compound_rotation;
        for (i, p) in self.pieces.iter().enumerate() {
            let prev = if i == 0 { out[0] } else { out[i] };
            out[i + 1] = prev + p.rotation;
        }
        out
    }

    pub fn with_dock_shift(&self, shift: EdgeCombo) -> LayoutTable {
        let mut out = self.clone();
        out.second_dock.shift = shift;
        out
    }
}

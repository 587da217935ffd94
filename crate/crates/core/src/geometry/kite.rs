//! The trihexagonal kite lattice at hat parameters.
//!
//! Hexagons have edge 2 and apothem √3 (short-edge units), centres on the
//! lattice spanned by `u1 = (3, √3)` and `u2 = (0, 2√3)`; the origin is a
//! centre. Each hexagon splits into six kites; kite `k` is the one around
//! the hexagon vertex at angle `k·60°`. A hat covers exactly eight kites.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{QSqrt3, Rational, VecE};
use crate::substitution::Placement;

use super::{unit30, GeometryError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KiteCell {
    pub hex_q: i64,
    pub hex_r: i64,
    pub corner_k: u8,
}

/// Axial offsets of the six neighbouring hexagons; entry `k` lies at `60k+30°`.
const NEIGHBOUR_HEX: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

impl KiteCell {
    pub fn new(hex_q: i64, hex_r: i64, corner_k: i32) -> Self {
        KiteCell {
            hex_q,
            hex_r,
            corner_k: corner_k.rem_euclid(6) as u8,
        }
    }

    pub fn center(&self) -> VecE {
        lattice_point(self.hex_q, self.hex_r)
    }

    /// An interior point of the kite (unit distance from the centre along its axis).
    pub fn marker(&self) -> VecE {
        &self.center() + &unit30(2 * self.corner_k as i32)
    }

    /// Kite corners: centre, edge midpoint, hexagon vertex, edge midpoint.
    pub fn vertices(&self) -> [VecE; 4] {
        let c = self.center();
        let k = 2 * self.corner_k as i32;
        let r3 = QSqrt3::sqrt3();
        [
            c.clone(),
            &c + &unit30(k - 1).scale(&r3),
            &c + &unit30(k).scale(&QSqrt3::from_int(2)),
            &c + &unit30(k + 1).scale(&r3),
        ]
    }

    /// Counterclockwise 60° turn about the origin.
    pub fn rotate60(self) -> Self {
        KiteCell::new(
            -self.hex_r,
            self.hex_q + self.hex_r,
            self.corner_k as i32 + 1,
        )
    }

    /// Mirror in the y-axis.
    pub fn reflect(self) -> Self {
        KiteCell::new(
            -self.hex_q,
            self.hex_q + self.hex_r,
            3 - self.corner_k as i32,
        )
    }

    pub fn translate(self, m: i64, n: i64) -> Self {
        KiteCell {
            hex_q: self.hex_q + m,
            hex_r: self.hex_r + n,
            corner_k: self.corner_k,
        }
    }

    /// The four kites sharing an edge with this one.
    pub fn neighbours(&self) -> [KiteCell; 4] {
        let k = self.corner_k as usize;
        let (dq, dr) = NEIGHBOUR_HEX[k];
        let (eq, er) = NEIGHBOUR_HEX[(k + 5) % 6];
        [
            KiteCell::new(self.hex_q, self.hex_r, k as i32 + 1),
            KiteCell::new(self.hex_q, self.hex_r, k as i32 + 5),
            KiteCell::new(self.hex_q + dq, self.hex_r + dr, k as i32 + 4),
            KiteCell::new(self.hex_q + eq, self.hex_r + er, k as i32 + 2),
        ]
    }
}

impl fmt::Display for KiteCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.hex_q, self.hex_r, self.corner_k)
    }
}

/// `m·u1 + n·u2`.
pub fn lattice_point(m: i64, n: i64) -> VecE {
    VecE::new(
        QSqrt3::from_int(3 * m),
        QSqrt3::from_ratios(0, 1, m + 2 * n, 1),
    )
}

/// Solves `v = m·u1 + n·u2` over the integers.
pub fn lattice_decompose(v: &VecE) -> Result<(i64, i64), GeometryError> {
    let off = || GeometryError::OffLattice(Box::new(v.clone()));
    // x must be a rational multiple of 3, y a pure multiple of √3
    if !v.x.is_rational() || !v.y.r().is_zero() {
        return Err(off());
    }
    let m = v.x.r() / Rational::from_integer(3.into());
    let rest = v.y.s() - &m;
    if !m.is_integer() || !rest.is_integer() {
        return Err(off());
    }
    let rest = rest.to_integer();
    if rest.is_odd() {
        return Err(off());
    }
    let m = m.to_integer().to_i64().ok_or_else(off)?;
    let n = (rest / BigInt::from(2)).to_i64().ok_or_else(off)?;
    Ok((m, n))
}

/// Placement restricted to the kite lattice: point-group element plus a
/// lattice translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeMotion {
    pub rotation_k: i32,
    pub reflected: bool,
    pub m: i64,
    pub n: i64,
}

impl LatticeMotion {
    pub fn from_placement(q: &Placement) -> Result<Self, GeometryError> {
        let (m, n) = lattice_decompose(q.translation())?;
        Ok(LatticeMotion {
            rotation_k: q.rotation_k(),
            reflected: q.reflected(),
            m,
            n,
        })
    }

    pub fn apply(&self, c: KiteCell) -> KiteCell {
        let mut c = if self.reflected { c.reflect() } else { c };
        for _ in 0..self.rotation_k.rem_euclid(6) {
            c = c.rotate60();
        }
        c.translate(self.m, self.n)
    }
}

/// The hat's eight cells moved by `q`.
pub fn hat_kite_cells(q: &Placement, base: &[KiteCell]) -> Result<Vec<KiteCell>, GeometryError> {
    let motion = LatticeMotion::from_placement(q)?;
    Ok(base.iter().map(|&c| motion.apply(c)).collect())
}

/// Earliest overlap found by [`disjoint_cells`], in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub first: usize,
    pub second: usize,
    pub cell: KiteCell,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub cells: usize,
    pub collision: Option<Collision>,
}

impl CellReport {
    pub fn is_disjoint(&self) -> bool {
        self.collision.is_none()
    }
}

/// Checks that the kite cells of all placed hats are pairwise distinct.
pub fn disjoint_cells(
    placements: &[Placement],
    base: &[KiteCell],
) -> Result<CellReport, GeometryError> {
    let mut seen: HashMap<KiteCell, usize> = HashMap::with_capacity(placements.len() * base.len());
    for (i, q) in placements.iter().enumerate() {
        for cell in hat_kite_cells(q, base)? {
            if let Some(&first) = seen.get(&cell) {
                return Ok(CellReport {
                    cells: seen.len(),
                    collision: Some(Collision {
                        first,
                        second: i,
                        cell,
                    }),
                });
            }
            seen.insert(cell, i);
        }
    }
    Ok(CellReport {
        cells: seen.len(),
        collision: None,
    })
}

/// True when the hats form one piece through shared kite edges.
pub fn edge_connected(placements: &[Placement], base: &[KiteCell]) -> Result<bool, GeometryError> {
    if placements.is_empty() {
        return Ok(true);
    }
    let mut owner: HashMap<KiteCell, usize> = HashMap::new();
    for (i, q) in placements.iter().enumerate() {
        for cell in hat_kite_cells(q, base)? {
            owner.insert(cell, i);
        }
    }
    let mut parent: Vec<usize> = (0..placements.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (cell, &i) in &owner {
        for nb in cell.neighbours() {
            if let Some(&j) = owner.get(&nb) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    Ok((0..placements.len()).all(|i| find(&mut parent, i) == root))
}

use crate::exactnum::{QSqrt3, VecE};
use crate::substitution::Placement;
use crate::supervectors::TileParams;

use super::{EdgeSymbol, GeometryError};

/// Closed polygon, vertices in order; the last edge returns to the first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outline {
    vertices: Vec<VecE>,
    symbols: Option<Vec<EdgeSymbol>>,
}

impl Outline {
    pub fn new(vertices: Vec<VecE>) -> Self {
        Outline {
            vertices,
            symbols: None,
        }
    }

    pub(crate) fn with_symbols(vertices: Vec<VecE>, symbols: Vec<EdgeSymbol>) -> Self {
        Outline {
            vertices,
            symbols: Some(symbols),
        }
    }

    pub fn vertices(&self) -> &[VecE] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&VecE, &VecE)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Signed area; positive for counterclockwise orientation.
    pub fn shoelace_area(&self) -> QSqrt3 {
        let twice = self
            .edges()
            .fold(QSqrt3::zero(), |acc, (p, q)| &acc + &p.cross(q));
        twice.half()
    }

    /// Applies `q` to every vertex. Vertex order is kept, so a mirrored
    /// outline runs clockwise and its area changes sign.
    pub fn apply_placement(&self, q: &Placement) -> Outline {
        Outline {
            vertices: self.vertices.iter().map(|v| q.apply(v)).collect(),
            symbols: self.symbols.clone(),
        }
    }

    /// Exact edge-length check: every edge has squared length `a²` or `b²`
    /// (and matches its turtle symbol when known).
    pub fn check_edge_lengths(&self, p: &TileParams) -> Result<(), GeometryError> {
        let a2 = p.a() * p.a();
        let b2 = p.b() * p.b();
        for (i, (u, v)) in self.edges().enumerate() {
            let len2 = (v - u).norm_sq();
            let ok = match self.symbols.as_ref().map(|s| s[i]) {
                Some(EdgeSymbol::A) => len2 == a2,
                Some(EdgeSymbol::B) => len2 == b2,
                None => len2 == a2 || len2 == b2,
            };
            if !ok {
                return Err(GeometryError::EdgeLength {
                    edge: i,
                    len2: Box::new(len2),
                });
            }
        }
        Ok(())
    }

    /// True when no two edges meet except consecutive edges at their shared
    /// vertex. Straight-angle vertices are allowed; reversals are not.
    pub fn is_simple(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        let e: Vec<_> = self.edges().collect();
        for i in 0..n {
            let (a0, a1) = e[i];
            if (a1 - a0).is_zero() {
                return false;
            }
            for (j, &(b0, b1)) in e.iter().enumerate().skip(i + 1) {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // consecutive edges may only share their common vertex
                    let (shared, p, q) = if j == i + 1 {
                        (a1, a0, b1)
                    } else {
                        (a0, a1, b0)
                    };
                    let d1 = p - shared;
                    let d2 = q - shared;
                    if d1.cross(&d2).is_zero() && d1.dot(&d2).is_positive() {
                        return false;
                    }
                } else if segments_touch(a0, a1, b0, b1) {
                    return false;
                }
            }
        }
        true
    }

    /// Strict interior test; points on the boundary count as outside.
    pub fn contains(&self, pt: &VecE) -> bool {
        for (u, v) in self.edges() {
            if on_segment(u, v, pt) {
                return false;
            }
        }
        let mut inside = false;
        for (u, v) in self.edges() {
            if (u.y > pt.y) != (v.y > pt.y) {
                let t = (&pt.y - &u.y)
                    .checked_div(&(&v.y - &u.y))
                    .expect("edge crosses the ray, so its y-extent is nonzero");
                let x = &u.x + &(&t * &(&v.x - &u.x));
                if pt.x < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Exact axis-aligned bounding box `(min, max)`.
    pub fn bounding_box(&self) -> Option<(VecE, VecE)> {
        let first = self.vertices.first()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for v in &self.vertices[1..] {
            extend_box(&mut lo, &mut hi, v);
        }
        Some((lo, hi))
    }

    /// Runs simplicity, edge-length and exact area checks.
    pub fn validate(&self, p: &TileParams, expected: &QSqrt3) -> Result<(), GeometryError> {
        if !self.is_simple() {
            return Err(GeometryError::NotSimple);
        }
        self.check_edge_lengths(p)?;
        let area = self.shoelace_area();
        if &area != expected {
            return Err(GeometryError::Area {
                area: Box::new(area),
                expected: Box::new(expected.clone()),
            });
        }
        Ok(())
    }
}

pub(crate) fn extend_box(lo: &mut VecE, hi: &mut VecE, v: &VecE) {
    if v.x < lo.x {
        lo.x = v.x.clone();
    }
    if v.y < lo.y {
        lo.y = v.y.clone();
    }
    if v.x > hi.x {
        hi.x = v.x.clone();
    }
    if v.y > hi.y {
        hi.y = v.y.clone();
    }
}

fn orient(a: &VecE, b: &VecE, c: &VecE) -> i32 {
    (b - a).cross(&(c - a)).signum()
}

fn on_segment(a: &VecE, b: &VecE, p: &VecE) -> bool {
    orient(a, b, p) == 0 && (a - p).dot(&(b - p)).signum() <= 0
}

fn segments_touch(a0: &VecE, a1: &VecE, b0: &VecE, b1: &VecE) -> bool {
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(a0, a1, b0)
        || on_segment(a0, a1, b1)
        || on_segment(b0, b1, a0)
        || on_segment(b0, b1, a1)
}

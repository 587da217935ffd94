use std::fmt;
use std::str::FromStr;

use crate::exactnum::{QSqrt3, VecE};
use crate::supervectors::TileParams;

use super::{GeometryError, Outline};

/// Which of the two Tile(a,b) edge lengths an edge has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeSymbol {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TurtleStep {
    pub edge: EdgeSymbol,
    /// Exterior turn after this edge, in multiples of 30° (counterclockwise positive).
    pub turn_after: i32,
}

/// Tile boundary as a sequence of edges and turns, e.g. `"B+3 A+2 A0 ..."`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TurtleSpec {
    steps: Vec<TurtleStep>,
}

impl TurtleSpec {
    pub fn new(steps: Vec<TurtleStep>) -> Result<Self, GeometryError> {
        let spec = TurtleSpec { steps };
        spec.validate()?;
        Ok(spec)
    }

    pub fn steps(&self) -> &[TurtleStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Total exterior turn must be exactly one counterclockwise revolution.
    pub fn validate(&self) -> Result<(), GeometryError> {
        if self.steps.len() < 3 {
            return Err(GeometryError::Turtle("fewer than three edges".into()));
        }
        let total: i32 = self.steps.iter().map(|s| s.turn_after).sum();
        if total != 12 {
            return Err(GeometryError::Turtle(format!(
                "exterior turns sum to {} degrees, expected 360",
                total * 30
            )));
        }
        Ok(())
    }

    /// Returns a copy with one turn changed by `delta·30°`, bypassing validation.
    pub fn with_turn_altered(&self, index: usize, delta: i32) -> TurtleSpec {
        let mut steps = self.steps.clone();
        steps[index].turn_after += delta;
        TurtleSpec { steps }
    }
}

impl FromStr for TurtleSpec {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::new();
        for tok in s.split_whitespace() {
            let (sym, rest) = tok.split_at(1);
            let edge = match sym {
                "A" => EdgeSymbol::A,
                "B" => EdgeSymbol::B,
                _ => return Err(GeometryError::Turtle(format!("bad edge symbol in {tok:?}"))),
            };
            let turn_after = rest
                .parse::<i32>()
                .map_err(|_| GeometryError::Turtle(format!("bad turn in {tok:?}")))?;
            steps.push(TurtleStep { edge, turn_after });
        }
        TurtleSpec::new(steps)
    }
}

impl fmt::Display for TurtleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sym = match s.edge {
                EdgeSymbol::A => 'A',
                EdgeSymbol::B => 'B',
            };
            if s.turn_after == 0 {
                write!(f, "{sym}0")?;
            } else {
                write!(f, "{sym}{:+}", s.turn_after)?;
            }
        }
        Ok(())
    }
}

/// Unit vector at `k·30°`, exact.
pub fn unit30(k: i32) -> VecE {
    let k = k.rem_euclid(12);
    let base = if k % 2 == 0 {
        VecE::new(QSqrt3::one(), QSqrt3::zero())
    } else {
        VecE::new(
            QSqrt3::from_ratios(0, 1, 1, 2),
            QSqrt3::from_ratios(1, 2, 0, 1),
        )
    };
    base.rotate60(k / 2)
}

/// Walks the turtle program from `start` with initial heading `heading_k30·30°`.
pub fn outline_from_turtle(
    spec: &TurtleSpec,
    p: &TileParams,
    start: &VecE,
    heading_k30: i32,
) -> Result<Outline, GeometryError> {
    spec.validate()?;
    let mut heading = heading_k30;
    let mut at = start.clone();
    let mut vertices = Vec::with_capacity(spec.len());
    let mut symbols = Vec::with_capacity(spec.len());
    for step in spec.steps() {
        vertices.push(at.clone());
        symbols.push(step.edge);
        let len = match step.edge {
            EdgeSymbol::A => p.a(),
            EdgeSymbol::B => p.b(),
        };
        at = &at + &unit30(heading).scale(len);
        heading += step.turn_after;
    }
    let residual = &at - start;
    if !residual.is_zero() {
        return Err(GeometryError::NotClosed {
            residual: Box::new(residual),
        });
    }
    Ok(Outline::with_symbols(vertices, symbols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_have_unit_length() {
        for k in 0..12 {
            assert_eq!(unit30(k).norm_sq(), QSqrt3::one());
        }
        assert_eq!(unit30(3), VecE::new(QSqrt3::zero(), QSqrt3::one()));
        assert_eq!(unit30(-3), unit30(9));
    }

    #[test]
    fn parse_and_display() {
        let t: TurtleSpec = "A+3 B+3 A+3 B+3".parse().unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.to_string(), "A+3 B+3 A+3 B+3");
        assert!("A+3 B+3 A+3".parse::<TurtleSpec>().is_err());
        assert!("C+3 B+3 A+3 B+3".parse::<TurtleSpec>().is_err());
        assert!("A+x B+3 A+3 B+3".parse::<TurtleSpec>().is_err());
    }

    #[test]
    fn rectangle_walk() {
        let t: TurtleSpec = "A+3 B+3 A+3 B+3".parse().unwrap();
        let p = TileParams::new(QSqrt3::from_int(2), QSqrt3::from_int(5)).unwrap();
        let o = outline_from_turtle(&t, &p, &VecE::zero(), 0).unwrap();
        assert_eq!(o.shoelace_area(), QSqrt3::from_int(10));
    }
}

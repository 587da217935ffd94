use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::QSqrt3;

/// Exact plane vector; units are the short tile edge.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VecE {
    pub x: QSqrt3,
    pub y: QSqrt3,
}

impl VecE {
    pub fn new(x: QSqrt3, y: QSqrt3) -> Self {
        VecE { x, y }
    }

    pub fn zero() -> Self {
        VecE::default()
    }

    pub fn scale(&self, k: &QSqrt3) -> Self {
        VecE {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    /// Counterclockwise rotation by `k·60°`; `k` is taken mod 6.
    pub fn rotate60(&self, k: i32) -> Self {
        let mut v = self.clone();
        for _ in 0..k.rem_euclid(6) {
            v = v.rotate60_once();
        }
        v
    }

    fn rotate60_once(&self) -> Self {
        VecE {
            x: self.x.half() - self.y.mul_half_sqrt3(),
            y: self.x.mul_half_sqrt3() + self.y.half(),
        }
    }

    /// Mirror in the vertical axis: `(x, y) -> (−x, y)`.
    pub fn reflect_y_axis(&self) -> Self {
        VecE {
            x: -&self.x,
            y: self.y.clone(),
        }
    }

    pub fn dot(&self, o: &VecE) -> QSqrt3 {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, o: &VecE) -> QSqrt3 {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm_sq(&self) -> QSqrt3 {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn norm_f64(&self) -> f64 {
        let (x, y) = self.to_f64();
        x.hypot(y)
    }
}

impl Add<&VecE> for &VecE {
    type Output = VecE;
    fn add(self, o: &VecE) -> VecE {
        VecE {
            x: &self.x + &o.x,
            y: &self.y + &o.y,
        }
    }
}

impl Sub<&VecE> for &VecE {
    type Output = VecE;
    fn sub(self, o: &VecE) -> VecE {
        VecE {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }
}

impl Add for VecE {
    type Output = VecE;
    fn add(self, o: VecE) -> VecE {
        &self + &o
    }
}

impl Sub for VecE {
    type Output = VecE;
    fn sub(self, o: VecE) -> VecE {
        &self - &o
    }
}

impl Neg for &VecE {
    type Output = VecE;
    fn neg(self) -> VecE {
        VecE {
            x: -&self.x,
            y: -&self.y,
        }
    }
}

impl Neg for VecE {
    type Output = VecE;
    fn neg(self) -> VecE {
        -&self
    }
}

impl fmt::Display for VecE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for VecE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VecE{self}")
    }
}

//! Supervectors `V_n` of Tile(a,b) supertiles and their rotation angles.
//!
//! With `s = (√3·b − a)/2` and `t = (√3·a + b)/2` the supervectors satisfy
//! `V_n = (F_{2n}·s, L_{2n}·t)` and `V_n = 3V_{n−1} − V_{n−2}`. Angles are
//! handled through their tangents, which stay inside Q(√3); only the
//! limit quantities involving √5 are evaluated in floating point.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{QSqrt3, VecE};
use crate::sequences::{fib, g_closed, lucas, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("edge length {name} = {value} must be positive")]
    NonPositive {
        name: &'static str,
        value: Box<QSqrt3>,
    },
    #[error("tangent difference is undefined: 1 + t1*t2 = 0")]
    DegenerateTangent,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Edge lengths of Tile(a,b) together with the derived scales `s` and `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileParams {
    a: QSqrt3,
    b: QSqrt3,
    s: QSqrt3,
    t: QSqrt3,
}

impl TileParams {
    pub fn new(a: QSqrt3, b: QSqrt3) -> Result<Self, ParamsError> {
        make_params(a, b)
    }

    /// The hat, Tile(1, √3).
    pub fn hat() -> Self {
        make_params(QSqrt3::one(), QSqrt3::sqrt3()).expect("hat parameters are positive")
    }

    /// The turtle, Tile(√3, 1); its `s` vanishes.
    pub fn turtle() -> Self {
        make_params(QSqrt3::sqrt3(), QSqrt3::one()).expect("turtle parameters are positive")
    }

    pub fn a(&self) -> &QSqrt3 {
        &self.a
    }

    pub fn b(&self) -> &QSqrt3 {
        &self.b
    }

    pub fn s(&self) -> &QSqrt3 {
        &self.s
    }

    pub fn t(&self) -> &QSqrt3 {
        &self.t
    }

    pub fn is_hat(&self) -> bool {
        self.a == QSqrt3::one() && self.b == QSqrt3::sqrt3()
    }

    pub fn beta(&self) -> BetaClass {
        BetaClass::of(self)
    }
}

/// Validates `a, b > 0` and derives `s`, `t`.
pub fn make_params(a: QSqrt3, b: QSqrt3) -> Result<TileParams, ParamsError> {
    if !a.is_positive() {
        return Err(ParamsError::NonPositive {
            name: "a",
            value: Box::new(a),
        });
    }
    if !b.is_positive() {
        return Err(ParamsError::NonPositive {
            name: "b",
            value: Box::new(b),
        });
    }
    let r3 = QSqrt3::sqrt3();
    let s = (&(&r3 * &b) - &a).half();
    let t = (&(&r3 * &a) + &b).half();
    Ok(TileParams { a, b, s, t })
}

/// Which way `V_1` leans from `V_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tilt {
    LeftTilt,
    Aligned,
    RightTilt,
    /// `a = b`: `tan β = 2 − √3`, the excluded β = π/12.
    ChevronDegenerate,
}

impl Tilt {
    pub fn as_str(self) -> &'static str {
        match self {
            Tilt::LeftTilt => "left_tilt",
            Tilt::Aligned => "aligned",
            Tilt::RightTilt => "right_tilt",
            Tilt::ChevronDegenerate => "chevron_degenerate",
        }
    }
}

impl fmt::Display for Tilt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `tan β = s/t` with its classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaClass {
    pub tan_beta: QSqrt3,
    pub classification: Tilt,
}

impl BetaClass {
    pub fn of(p: &TileParams) -> Self {
        let tan_beta = p.s.checked_div(&p.t).expect("t is positive");
        let classification = if p.a == p.b {
            Tilt::ChevronDegenerate
        } else {
            match p.s.signum() {
                0 => Tilt::Aligned,
                x if x > 0 => Tilt::RightTilt,
                _ => Tilt::LeftTilt,
            }
        };
        BetaClass {
            tan_beta,
            classification,
        }
    }

    pub fn beta_f64(&self) -> f64 {
        self.tan_beta.to_f64().atan()
    }

    /// Warnings for parameters outside the open range where the tile
    /// family is aperiodic; the formulas still apply there.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.classification == Tilt::ChevronDegenerate {
            out.push("a = b: beta = pi/12 lies outside the aperiodic range".to_string());
        }
        out
    }
}

/// Exact tangent of a rotation angle in (−π/2, π/2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleTan(pub QSqrt3);

impl AngleTan {
    pub fn value(&self) -> &QSqrt3 {
        &self.0
    }

    pub fn to_radians(&self) -> f64 {
        self.0.to_f64().atan()
    }
}

fn int(n: num_bigint::BigUint) -> BigInt {
    BigInt::from(n)
}

/// `V_n = (F_{2n}·s, L_{2n}·t)`.
pub fn v_closed(n: u64, p: &TileParams) -> VecE {
    VecE::new(
        p.s.mul_int(&int(fib(2 * n))),
        p.t.mul_int(&int(lucas(2 * n))),
    )
}

/// `V_0 = (0, 2t)`, `V_1 = (s, 3t)`, then `V_n = 3V_{n−1} − V_{n−2}`.
pub fn v_recurrence(n: u64, p: &TileParams) -> VecE {
    v_recurrence_table(n, p)
        .pop()
        .expect("table is never empty")
}

/// `[V_0, .., V_n]` by the recurrence.
pub fn v_recurrence_table(n: u64, p: &TileParams) -> Vec<VecE> {
    let three = QSqrt3::from_int(3);
    let mut out = vec![VecE::new(QSqrt3::zero(), p.t.mul_int(&2.into()))];
    if n >= 1 {
        out.push(VecE::new(p.s.clone(), p.t.mul_int(&3.into())));
    }
    for _ in 2..=n {
        let k = out.len();
        let next = &out[k - 1].scale(&three) - &out[k - 2];
        out.push(next);
    }
    out
}

/// `V_3` assembled the way it is read off the third-generation layout:
/// `V_1 = (s, 3t)`, `V_2 = V_1 + (2s, 4t)`, `V_3 = V_2 + 4V_1 + (s, −t)`.
pub fn v3_buildup(p: &TileParams) -> VecE {
    let st = |i: i64, j: i64| VecE::new(p.s.mul_int(&i.into()), p.t.mul_int(&j.into()));
    let v1 = st(1, 3);
    let v2 = &v1 + &st(2, 4);
    let four_v1 = v1.scale(&QSqrt3::from_int(4));
    &(&v2 + &four_v1) + &st(1, -1)
}

/// tan θ_n = F_{2n}s / (L_{2n}t); θ_n is measured clockwise from `V_0`.
pub fn tan_theta(n: u64, p: &TileParams) -> AngleTan {
    let v = v_closed(n, p);
    AngleTan(v.x.checked_div(&v.y).expect("L_{2n}·t is positive"))
}

/// tan(θ1 − θ2) = (t1 − t2)/(1 + t1·t2).
pub fn tan_diff(t1: &AngleTan, t2: &AngleTan) -> Result<AngleTan, ParamsError> {
    let den = &QSqrt3::one() + &(&t1.0 * &t2.0);
    if den.is_zero() {
        return Err(ParamsError::DegenerateTangent);
    }
    Ok(AngleTan(
        (&t1.0 - &t2.0)
            .checked_div(&den)
            .expect("denominator checked nonzero"),
    ))
}

/// tan α_n = tan(θ_n − θ_{n−1}) for `n >= 1`; equals tan β / G_n.
pub fn tan_alpha(n: u64, p: &TileParams) -> Result<AngleTan, ParamsError> {
    if n == 0 {
        return Err(SequenceError::IndexOutOfRange(0).into());
    }
    tan_diff(&tan_theta(n, p), &tan_theta(n - 1, p))
}

/// `tan β / G_n`; the right-hand side of the rotation identity.
pub fn tan_beta_over_g(n: u64, p: &TileParams) -> Result<AngleTan, ParamsError> {
    let g = g_closed(n)?;
    let beta = BetaClass::of(p).tan_beta;
    Ok(AngleTan(
        beta.checked_div(&QSqrt3::from_bigint(g.into()))
            .expect("G_n is positive"),
    ))
}

/// `D_n = (L_{2n}·L_{2n−2} + F_{2n}·F_{2n−2}·tan²β)/2`, the exact divisor with
/// `tan α_n = tan β / D_n` for every Tile(a,b). At the hat `tan²β = 1/3` and
/// `D_n = G_n`; elsewhere `D_n` is not an integer in general.
pub fn rotation_divisor(n: u64, p: &TileParams) -> Result<QSqrt3, ParamsError> {
    if n == 0 {
        return Err(SequenceError::IndexOutOfRange(0).into());
    }
    let beta = BetaClass::of(p).tan_beta;
    let ll = int(lucas(2 * n) * lucas(2 * n - 2));
    let ff = int(fib(2 * n) * fib(2 * n - 2));
    Ok((&QSqrt3::from_bigint(ll) + &(&beta * &beta).mul_int(&ff)).half())
}

/// Total rotation of all generations, `arctan(tan β / √5)`, in radians.
pub fn total_rotation_float(p: &TileParams) -> f64 {
    (BetaClass::of(p).tan_beta.to_f64() / 5f64.sqrt()).atan()
}

/// θ_n in radians from the exact tangent.
pub fn theta_float(n: u64, p: &TileParams) -> f64 {
    tan_theta(n, p).to_radians()
}

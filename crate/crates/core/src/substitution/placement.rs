use std::fmt;

use crate::exactnum::VecE;

/// Rigid motion: optional mirror in the y-axis, then a `rotation_k·60°`
/// counterclockwise turn about the origin, then an exact translation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Placement {
    rotation_k: u8,
    reflected: bool,
    translation: VecE,
}

impl Placement {
    pub fn new(rotation_k: i32, reflected: bool, translation: VecE) -> Self {
        Placement {
            rotation_k: rotation_k.rem_euclid(6) as u8,
            reflected,
            translation,
        }
    }

    pub fn identity() -> Self {
        Placement::default()
    }

    pub fn rotation(k: i32) -> Self {
        Placement::new(k, false, VecE::zero())
    }

    pub fn translation_by(t: VecE) -> Self {
        Placement::new(0, false, t)
    }

    pub fn rotation_k(&self) -> i32 {
        self.rotation_k as i32
    }

    pub fn reflected(&self) -> bool {
        self.reflected
    }

    pub fn translation(&self) -> &VecE {
        &self.translation
    }

    /// Linear part only (no translation); used for direction vectors.
    pub fn apply_linear(&self, v: &VecE) -> VecE {
        if self.reflected {
            v.reflect_y_axis().rotate60(self.rotation_k())
        } else {
            v.rotate60(self.rotation_k())
        }
    }

    pub fn apply(&self, p: &VecE) -> VecE {
        &self.apply_linear(p) + &self.translation
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &Placement) -> Placement {
        let k = if self.reflected {
            self.rotation_k() - inner.rotation_k()
        } else {
            self.rotation_k() + inner.rotation_k()
        };
        Placement::new(
            k,
            self.reflected != inner.reflected,
            self.apply(&inner.translation),
        )
    }

    pub fn inverse(&self) -> Placement {
        // (R F^r)^{-1} = F^r R^{-1}; as "reflect then rotate" that is R^{±k} F^r.
        let k = if self.reflected {
            self.rotation_k()
        } else {
            -self.rotation_k()
        };
        let lin = Placement::new(k, self.reflected, VecE::zero());
        let t = -lin.apply(&self.translation);
        Placement::new(k, self.reflected, t)
    }
}

impl fmt::Debug for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Placement(rot={}, refl={}, t={})",
            self.rotation_k, self.reflected, self.translation
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QSqrt3;

    fn p(x: i64, y3: i64) -> VecE {
        VecE::new(QSqrt3::from_int(x), QSqrt3::from_ratios(0, 1, y3, 1))
    }

    fn samples() -> Vec<Placement> {
        let mut out = Vec::new();
        for k in 0..6 {
            for refl in [false, true] {
                out.push(Placement::new(k, refl, p(k as i64 - 2, 3 - k as i64)));
            }
        }
        out
    }

    #[test]
    fn identity_is_neutral() {
        let q = Placement::new(2, true, p(3, 1));
        assert_eq!(Placement::identity().compose(&q), q);
        assert_eq!(q.compose(&Placement::identity()), q);
        assert_eq!(Placement::identity().apply(&p(5, -2)), p(5, -2));
    }

    #[test]
    fn order_is_reflect_rotate_translate() {
        let q = Placement::new(1, true, p(1, 0));
        let x = p(2, 0);
        let expect = &x.reflect_y_axis().rotate60(1) + &p(1, 0);
        assert_eq!(q.apply(&x), expect);
    }

    #[test]
    fn composition_matches_pointwise_application() {
        let x = p(4, -1);
        for a in samples() {
            for b in samples() {
                assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
            }
        }
    }

    #[test]
    fn associative_and_invertible() {
        let s = samples();
        for a in &s {
            assert_eq!(a.compose(&a.inverse()), Placement::identity());
            assert_eq!(a.inverse().compose(a), Placement::identity());
            for b in s.iter().step_by(3) {
                for c in s.iter().step_by(5) {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }
}

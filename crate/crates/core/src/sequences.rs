//! Fibonacci, Lucas, the rotation sequence `G_n`, and supertile hat counts.
//!
//! Everything is computed by straight linear iteration over big integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::substitution::SupertileKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("G_n is defined for n >= 1 (got {0})")]
    IndexOutOfRange(u64),
    #[error("integrality violated: 8*L_{{4n-2}}+21 = {value} is not divisible by 15 (n = {n})")]
    NotDivisible { n: u64, value: BigUint },
}

/// The pair (X_n, X_{n+1}) of a sequence with X_{k+2} = X_{k+1} + X_k.
fn additive(mut a: BigUint, mut b: BigUint, n: u64) -> BigUint {
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// F_n with F_0 = 0, F_1 = 1.
pub fn fib(n: u64) -> BigUint {
    additive(BigUint::zero(), BigUint::one(), n)
}

/// L_n with L_0 = 2, L_1 = 1.
pub fn lucas(n: u64) -> BigUint {
    additive(BigUint::from(2u32), BigUint::one(), n)
}

/// F_0..=F_n in one pass.
pub fn fib_table(n: u64) -> Vec<BigUint> {
    table(BigUint::zero(), BigUint::one(), n)
}

/// L_0..=L_n in one pass.
pub fn lucas_table(n: u64) -> Vec<BigUint> {
    table(BigUint::from(2u32), BigUint::one(), n)
}

fn table(a: BigUint, b: BigUint, n: u64) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(a);
    if n >= 1 {
        out.push(b);
    }
    for i in 2..=n as usize {
        let next = &out[i - 1] + &out[i - 2];
        out.push(next);
    }
    out
}

/// `G_n = (8·L_{4n−2} + 21) / 15`, with the divisibility checked before dividing.
pub fn g_closed(n: u64) -> Result<BigUint, SequenceError> {
    if n == 0 {
        return Err(SequenceError::IndexOutOfRange(n));
    }
    g_from_lucas(n, &lucas(4 * n - 2))
}

fn g_from_lucas(n: u64, l: &BigUint) -> Result<BigUint, SequenceError> {
    let value = l * 8u32 + 21u32;
    let (q, r) = value.div_rem(&BigUint::from(15u32));
    if !r.is_zero() {
        return Err(SequenceError::NotDivisible { n, value });
    }
    Ok(q)
}

/// `[G_1, .., G_count]` from the closed form, sharing one Lucas table.
pub fn g_closed_table(count: u64) -> Result<Vec<BigUint>, SequenceError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    let l = lucas_table(4 * count - 2);
    (1..=count)
        .map(|n| g_from_lucas(n, &l[(4 * n - 2) as usize]))
        .collect()
}

/// `[G_1, .., G_count]` from `G_n = 7G_{n−1} − G_{n−2} − 7`, `G_1 = 3`, `G_2 = 11`.
pub fn g_recurrence(count: u64) -> Vec<BigUint> {
    let mut out: Vec<BigInt> = Vec::with_capacity(count as usize);
    for n in 1..=count as usize {
        let next = match n {
            1 => BigInt::from(3),
            2 => BigInt::from(11),
            _ => &out[n - 2] * 7 - &out[n - 3] - 7,
        };
        out.push(next);
    }
    out.into_iter()
        .map(|g| g.to_biguint().expect("G_n stays positive"))
        .collect()
}

/// Number of single hats in the generation-`n` supertile (`n >= 1`).
///
/// `h_1 = 1`, `c_1 = 2`, `h_n = 6h_{n−1} + c_{n−1}`, `c_n = 5h_{n−1} + c_{n−1}`.
pub fn tile_counts(kind: SupertileKind, n: u64) -> BigUint {
    let (h, c) = count_pair(n);
    match kind {
        SupertileKind::Hat => h,
        SupertileKind::Thc => c,
    }
}

fn count_pair(n: u64) -> (BigUint, BigUint) {
    assert!(n >= 1, "supertile generations start at 1");
    let mut h = BigUint::one();
    let mut c = BigUint::from(2u32);
    for _ in 1..n {
        let nh = &h * 6u32 + &c;
        let nc = &h * 5u32 + &c;
        h = nh;
        c = nc;
    }
    (h, c)
}

/// Number of reflected hats (one per thc-1 leaf) in a generation-`n` supertile.
pub fn reflected_counts(kind: SupertileKind, n: u64) -> BigUint {
    assert!(n >= 1, "supertile generations start at 1");
    let mut rh = BigUint::zero();
    let mut rc = BigUint::one();
    for _ in 1..n {
        let nh = &rh * 6u32 + &rc;
        let nc = &rh * 5u32 + &rc;
        rh = nh;
        rc = nc;
    }
    match kind {
        SupertileKind::Hat => rh,
        SupertileKind::Thc => rc,
    }
}

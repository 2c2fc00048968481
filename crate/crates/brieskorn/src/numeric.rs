//! Exact number theory backing the topology and the certificates:
//! Sylvester's sequence, Bernoulli numbers, and the Kervaire-Milnor
//! orders of the groups bP_{2n} of homotopy spheres bounding
//! parallelizable manifolds.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms.
pub type ExactRational = BigRational;

/// What is known about the Kervaire sphere in dimension 4m+1.
///
/// The group bP_{4m+2} is Z/2 generated by the Kervaire sphere, except
/// that the sphere is standard in dimensions 5, 13, 29, 61 (m = 1, 3, 7,
/// 15) and its status is open exactly in dimensions 4m+1 with m+1 = 2^i,
/// i >= 5 (125, 253, ...); in every other dimension 4m+1 it is exotic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BpGroupStatus {
    /// bP_{4m+2} = 0: the Kervaire sphere is diffeomorphic to S^{4m+1}.
    Trivial,
    /// bP_{4m+2} = Z/2: the Kervaire sphere is exotic.
    OrderTwo,
    /// Open case: m = 2^i - 1 with i >= 5.
    Unknown,
}

impl BpGroupStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BpGroupStatus::Trivial => "trivial",
            BpGroupStatus::OrderTwo => "order_two",
            BpGroupStatus::Unknown => "unknown",
        }
    }
}

/// First k terms of Sylvester's sequence c_1 = 2, c_{k+1} = c_k^2 - c_k + 1.
///
/// Equivalently c_{k+1} = 1 + c_1 c_2 ... c_k, so the sequence grows
/// doubly exponentially; c_8 already needs more than 64 bits.
pub fn sylvester_sequence(k: usize) -> Vec<BigUint> {
    let mut seq: Vec<BigUint> = Vec::with_capacity(k);
    if k == 0 {
        return seq;
    }
    seq.push(BigUint::from(2u32));
    for _ in 1..k {
        let c = seq.last().unwrap();
        let next = c * c - c + 1u32;
        seq.push(next);
    }
    seq
}

/// |B_{2m}|, the absolute value of the 2m-th Bernoulli number, for m >= 1.
///
/// Uses the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 with
/// B_0 = 1, so B_n = -(1/(n+1)) sum_{j<n} C(n+1, j) B_j.
pub fn bernoulli_abs(m: u32) -> ExactRational {
    assert!(m >= 1, "bernoulli_abs needs m >= 1");
    let n = (2 * m) as usize;
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for i in 1..=n {
        // binom runs over C(i+1, j) for j = 0..i
        let mut binom = BigUint::one();
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += bj * BigRational::from_integer(BigInt::from(binom.clone()));
            binom = binom * (i + 1 - j) / (j + 1);
        }
        let bi = -acc / BigRational::from_integer(BigInt::from(i as u64 + 1));
        b.push(bi);
    }
    b[n].abs()
}

/// |bP_{4m}|, the order of the group of homotopy (4m-1)-spheres bounding
/// parallelizable manifolds, for m >= 2:
///
/// |bP_4m| = 2^{2m-2} (2^{2m-1} - 1) * numerator(4 |B_{2m}| / m).
///
/// m = 2, 3, 4 give 28, 992, 8128.
pub fn bp4m_order(m: u32) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::BpOrderDomain(m));
    }
    let two = BigUint::from(2u32);
    let pow_a = two.pow(2 * m - 2);
    let pow_b = two.pow(2 * m - 1) - 1u32;
    let frac = bernoulli_abs(m) * BigRational::new(BigInt::from(4), BigInt::from(m));
    let numer = frac
        .numer()
        .to_biguint()
        .expect("|B_2m| is positive, so the numerator is");
    Ok(pow_a * pow_b * numer)
}

/// Status of bP_{4m+2} for m >= 1 (link dimension 4m+1).
pub fn bp4m2_status(m: u32) -> BpGroupStatus {
    assert!(m >= 1, "bp4m2_status needs m >= 1");
    if matches!(m, 1 | 3 | 7 | 15) {
        BpGroupStatus::Trivial
    } else if (m + 1).is_power_of_two() {
        BpGroupStatus::Unknown
    } else {
        BpGroupStatus::OrderTwo
    }
}

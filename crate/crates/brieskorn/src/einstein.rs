//! Sasakian-Einstein existence certificates for Brieskorn-Pham links.
//!
//! The link of z_0^{a_0} + ... + z_n^{a_n} carries a Sasakian-Einstein
//! metric when the associated orbifold Fano hypersurface of degree
//! d = lcm(a_i) in weighted projective space P(w_0..w_n), w_i = d/a_i,
//! is Fano (sum 1/a_i > 1) and its log pair is Kawamata log terminal,
//! which here reduces to the combinatorial bound
//!
//!   sum 1/a_i  <  1 + (n/(n-1)) * min( min_i 1/a_i ,
//!                                      min_{i<j} 1/(b_i b_j) ),
//!
//! with b_j = gcd(a_j, lcm_{i != j} a_i). All checks are exact rational
//! arithmetic; nothing is floated.

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::ExactRational;
use crate::topology::ExponentVector;

/// Degree, weights and coprimality data of the hypersurface attached to
/// an exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    degree: BigUint,
    weights: Vec<BigUint>,
    complement_lcms: Vec<BigUint>,
    b: Vec<u64>,
}

impl WeightSystem {
    /// d = lcm(a_0..a_n).
    pub fn degree(&self) -> &BigUint {
        &self.degree
    }

    /// w_i = d / a_i, so a_i w_i = d.
    pub fn weights(&self) -> &[BigUint] {
        &self.weights
    }

    /// |w| = w_0 + ... + w_n.
    pub fn weight_sum(&self) -> BigUint {
        self.weights.iter().sum()
    }

    /// C^j = lcm of all a_i with i != j.
    pub fn complement_lcms(&self) -> &[BigUint] {
        &self.complement_lcms
    }

    /// b_j = gcd(a_j, C^j).
    pub fn b(&self) -> &[u64] {
        &self.b
    }
}

/// Compute degree, weights, complement lcms and the b_j for `a`.
pub fn weight_system(a: &ExponentVector) -> WeightSystem {
    let entries = a.entries();
    let k = entries.len();
    let big: Vec<BigUint> = entries.iter().map(|&e| BigUint::from(e)).collect();

    let mut prefix = vec![BigUint::one(); k + 1];
    for i in 0..k {
        prefix[i + 1] = prefix[i].lcm(&big[i]);
    }
    let mut suffix = vec![BigUint::one(); k + 1];
    for i in (0..k).rev() {
        suffix[i] = suffix[i + 1].lcm(&big[i]);
    }

    let degree = prefix[k].clone();
    let weights: Vec<BigUint> = big.iter().map(|ai| &degree / ai).collect();
    let complement_lcms: Vec<BigUint> = (0..k).map(|j| prefix[j].lcm(&suffix[j + 1])).collect();
    let b: Vec<u64> = (0..k)
        .map(|j| {
            big[j]
                .gcd(&complement_lcms[j])
                .to_u64()
                .expect("b_j divides a_j")
        })
        .collect();

    WeightSystem {
        degree,
        weights,
        complement_lcms,
        b,
    }
}

fn reciprocal_sum(a: &ExponentVector) -> ExactRational {
    a.entries()
        .iter()
        .map(|&ai| BigRational::new(BigInt::one(), BigInt::from(ai)))
        .sum()
}

/// Fano condition: sum 1/a_i > 1 (equivalently |w| > d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoCheck {
    pub passes: bool,
    /// sum 1/a_i - 1; positive exactly when the check passes.
    pub margin: ExactRational,
}

pub fn fano_check(a: &ExponentVector) -> FanoCheck {
    let margin = reciprocal_sum(a) - BigRational::one();
    FanoCheck {
        passes: margin.is_positive(),
        margin,
    }
}

/// Kawamata-log-terminality bound, exact and strict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KltCheck {
    pub passes: bool,
    /// sum 1/a_i.
    pub sum: ExactRational,
    /// 1 + (n/(n-1)) * min(min_i 1/a_i, min_{i<j} 1/(b_i b_j)).
    pub bound: ExactRational,
}

pub fn klt_check(a: &ExponentVector) -> KltCheck {
    let ws = weight_system(a);
    let n = a.n() as u64;

    // min(min 1/a_i, min 1/(b_i b_j)) = 1 / max(max a_i, max b_i b_j)
    let max_entry = *a.entries().last().expect("nonempty") as u128;
    let max_pair = {
        let mut b = ws.b.clone();
        b.sort_unstable();
        let k = b.len();
        b[k - 1] as u128 * b[k - 2] as u128
    };
    let denominator = max_entry.max(max_pair);

    let sum = reciprocal_sum(a);
    let bound = BigRational::one()
        + BigRational::new(
            BigInt::from(n),
            BigInt::from(n - 1) * BigInt::from(denominator),
        );
    KltCheck {
        passes: sum < bound,
        sum,
        bound,
    }
}

/// Uniqueness (up to automorphism) of the Sasakian-Einstein structure:
/// |w| - d < (n/2) * min w_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessCheck {
    pub passes: bool,
    /// |w| - d.
    pub excess: BigInt,
    /// (n/2) * min w_i.
    pub threshold: ExactRational,
}

pub fn uniqueness_check(a: &ExponentVector) -> UniquenessCheck {
    let ws = weight_system(a);
    let n = a.n() as u64;
    let min_w = ws.weights.iter().min().expect("nonempty").clone();
    let excess = BigInt::from(ws.weight_sum()) - BigInt::from(ws.degree.clone());
    let threshold = BigRational::new(
        BigInt::from(n) * BigInt::from(min_w.clone()),
        BigInt::from(2),
    );
    let passes = &excess * 2 < BigInt::from(n) * BigInt::from(min_w);
    UniquenessCheck {
        passes,
        excess,
        threshold,
    }
}

/// Cap on the degree argument of the monomial-counting DP (the table
/// holds 16 bytes per degree).
const DEGREE_LIMIT: u64 = 1 << 26;

/// Monomial counts M(t) = #{ m >= 0 : sum m_i w_i = t } for all
/// t <= cap, by the coin-counting DP over the weights.
fn monomial_table(weights: &[BigUint], cap: u64) -> Result<Vec<u128>> {
    if cap > DEGREE_LIMIT {
        return Err(Error::DegreeTooLarge(cap));
    }
    let mut dp = vec![0u128; cap as usize + 1];
    dp[0] = 1;
    for w in weights {
        let Some(w) = w.to_u64().filter(|&w| w <= cap) else {
            continue;
        };
        let w = w as usize;
        for t in w..dp.len() {
            dp[t] = dp[t]
                .checked_add(dp[t - w])
                .ok_or(Error::MonomialCountOverflow { degree: t as u64 })?;
        }
    }
    Ok(dp)
}

/// Number of monomials of degree exactly `degree` in the weighted
/// polynomial ring of `a`, i.e. tuples m >= 0 with sum m_i w_i = degree.
pub fn count_monomials(a: &ExponentVector, degree: u64) -> Result<BigUint> {
    let ws = weight_system(a);
    let dp = monomial_table(&ws.weights, degree)?;
    Ok(BigUint::from(dp[degree as usize]))
}

/// Size estimate for the family of Sasakian-Einstein structures:
/// complex dimension M(d) - sum_j M(w_j), clamped at 0, doubled for the
/// real dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuliEstimate {
    /// M(d): monomials of degree d.
    pub degree_monomials: BigUint,
    /// sum_j M(w_j): the infinitesimal automorphisms.
    pub automorphism_dim: BigUint,
    /// M(d) - sum_j M(w_j), before clamping (can be negative).
    pub complex_dim: BigInt,
    /// 2 * max(complex_dim, 0).
    pub real_dim: BigUint,
    /// Whether complex_dim was negative and the dimension clamped to 0.
    pub clamped: bool,
}

pub fn moduli_dimension(a: &ExponentVector) -> Result<ModuliEstimate> {
    let ws = weight_system(a);
    let degree = ws
        .degree
        .to_u64()
        .ok_or(Error::DegreeTooLarge(u64::MAX))?;
    let dp = monomial_table(&ws.weights, degree)?;

    let m_d = dp[degree as usize];
    let aut: u128 = ws
        .weights
        .iter()
        .map(|w| dp[w.to_u64().expect("w <= d") as usize])
        .try_fold(0u128, |acc, c| acc.checked_add(c))
        .ok_or(Error::MonomialCountOverflow { degree })?;

    let complex_dim = BigInt::from(m_d) - BigInt::from(aut);
    let clamped = complex_dim.is_negative();
    let real_dim = if clamped {
        BigUint::zero()
    } else {
        (complex_dim.clone() * BigInt::from(2))
            .to_biguint()
            .expect("non-negative")
    };
    Ok(ModuliEstimate {
        degree_monomials: BigUint::from(m_d),
        automorphism_dim: BigUint::from(aut),
        complex_dim,
        real_dim,
        clamped,
    })
}

/// The full certificate: Sasakian-Einstein existence needs Fano and
/// klt; uniqueness and the moduli estimate qualify the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EinsteinCertificate {
    pub fano: FanoCheck,
    pub klt: KltCheck,
    pub uniqueness: UniquenessCheck,
    /// Present when the certificate passes and the degree is within the
    /// counting limit.
    pub moduli: Option<ModuliEstimate>,
}

impl EinsteinCertificate {
    pub fn passes(&self) -> bool {
        self.fano.passes && self.klt.passes
    }
}

/// Run every check on `a`; the moduli estimate is computed only when
/// Fano and klt both hold.
pub fn certify(a: &ExponentVector) -> Result<EinsteinCertificate> {
    let fano = fano_check(a);
    let klt = klt_check(a);
    let uniqueness = uniqueness_check(a);
    let moduli = if fano.passes && klt.passes {
        match moduli_dimension(a) {
            Ok(m) => Some(m),
            Err(Error::DegreeTooLarge(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(EinsteinCertificate {
        fano,
        klt,
        uniqueness,
        moduli,
    })
}

//! Signature of the Milnor fiber of a Brieskorn-Pham polynomial with an
//! odd number of variables.
//!
//! With L = lcm(a_i) and weights w_i = L/a_i, the signature counts the
//! lattice points x, 0 < x_i < a_i, by the residue of s = sum x_i w_i
//! mod 2L: residues in (0, L) count +1, residues in (L, 2L) count -1.
//! Three evaluation strategies share this scaled-integer form:
//!
//! * [`signature_oracle`]: direct enumeration of all lattice points,
//!   gated by a budget on the exponent product;
//! * [`signature_histogram`]: per-coordinate convolution of residue
//!   histograms mod 2L, O((n+1) * 2L) time;
//! * [`signature_meet_middle`]: split the coordinates in two halves,
//!   sort the partial sums of one, stream the other and count matching
//!   residue windows by binary search.
//!
//! [`signature_fast`] picks the histogram when (n+1)*L fits the cell
//! budget 2^27 (and the lattice-point count fits u64), else the split.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::topology::ExponentVector;

/// Default cap on the exponent product for brute-force enumeration.
pub const DEFAULT_SIGNATURE_BUDGET: u64 = 100_000_000;

/// Histogram strategy's cap on (n+1) * L.
const HISTOGRAM_CELL_LIMIT: u64 = 1 << 27;

/// Cap on the stored half of the meet-in-the-middle table.
const MITM_TABLE_LIMIT: u128 = 1 << 27;

fn require_odd_len(a: &ExponentVector) -> Result<()> {
    if a.len().is_multiple_of(2) {
        return Err(Error::EvenExponentCount(a.len()));
    }
    Ok(())
}

fn tau_from_i128(tau: i128) -> Result<i64> {
    i64::try_from(tau).map_err(|_| Error::SignatureOverflow)
}

/// Brute-force signature by walking every lattice point. Errors when
/// the exponent product exceeds `budget`.
pub fn signature_oracle(a: &ExponentVector, budget: u64) -> Result<i64> {
    require_odd_len(a)?;
    let product = a.product();
    if product > budget as u128 {
        return Err(Error::BudgetExceeded { product, budget });
    }

    let entries = a.entries();
    let l = entries.iter().fold(1u64, |l, &ai| l.lcm(&ai));
    let two_l = 2 * l;
    let w: Vec<u64> = entries.iter().map(|&ai| l / ai).collect();

    let mut x = vec![1u64; entries.len()];
    let mut s: u64 = w.iter().sum();
    let mut tau: i64 = 0;
    loop {
        let r = s % two_l;
        if r > 0 && r < l {
            tau += 1;
        } else if r > l {
            tau -= 1;
        }
        let mut i = 0;
        loop {
            if i == entries.len() {
                return Ok(tau);
            }
            x[i] += 1;
            s += w[i];
            if x[i] < entries[i] {
                break;
            }
            x[i] = 1;
            s -= (entries[i] - 1) * w[i];
            i += 1;
        }
    }
}

/// Signature with the strategy chosen by size: histogram convolution
/// when (n+1)*L <= 2^27 and the lattice-point count fits u64, else
/// meet-in-the-middle.
pub fn signature_fast(a: &ExponentVector) -> Result<i64> {
    require_odd_len(a)?;
    let cells = a.lcm() * a.len() as u64;
    let points_fit_u64 = a
        .entries()
        .iter()
        .try_fold(1u64, |p, &ai| p.checked_mul(ai - 1))
        .is_some();
    if cells <= BigUint::from(HISTOGRAM_CELL_LIMIT) && points_fit_u64 {
        signature_histogram(a)
    } else {
        signature_meet_middle(a)
    }
}

/// Histogram-convolution signature. Valid whenever L fits u64, the 2L
/// histogram fits in memory and the lattice-point count fits u64;
/// intended for (n+1)*L <= 2^27.
pub fn signature_histogram(a: &ExponentVector) -> Result<i64> {
    require_odd_len(a)?;
    let l = a
        .lcm()
        .to_u64()
        .expect("histogram strategy needs L to fit u64");
    let two_l = 2 * l;

    // h[r] counts the partial lattice points with sum r mod 2L. Each
    // coordinate splits the residues into strided chains of length
    // 2a_i (stride w_i, and w_i * 2a_i = 2L), on which adding x*w_i for
    // x in 1..a_i is a cyclic sliding-window sum of width a_i - 1.
    let mut h = vec![0u64; two_l as usize];
    h[0] = 1;
    for &ai in a.entries() {
        let w = (l / ai) as usize;
        let cycle = 2 * ai as usize;
        let window = ai as usize - 1;
        let mut old = vec![0u64; cycle];
        for start in 0..w {
            for (t, slot) in old.iter_mut().enumerate() {
                *slot = h[start + t * w];
            }
            let mut acc: u64 = old[cycle - window..].iter().sum();
            for t in 0..cycle {
                h[start + t * w] = acc;
                acc += old[t];
                acc -= old[(t + ai as usize + 1) % cycle];
            }
        }
    }

    let mut tau: i128 = 0;
    for (r, &count) in h.iter().enumerate() {
        let r = r as u64;
        if r > 0 && r < l {
            tau += count as i128;
        } else if r > l {
            tau -= count as i128;
        }
    }
    tau_from_i128(tau)
}

/// Meet-in-the-middle signature. Stores the partial sums of one half of
/// the coordinates (capped at 2^27 entries), streams the other half.
/// Partial sums are reduced mod 2L, in u64 words when (n+1)*L < 2^63
/// and in arbitrary precision beyond.
pub fn signature_meet_middle(a: &ExponentVector) -> Result<i64> {
    require_odd_len(a)?;
    let entries = a.entries();
    let (half_a, half_b) = balanced_split(entries);
    let stored: u128 = half_a
        .iter()
        .fold(1u128, |p, &i| p.saturating_mul((entries[i] - 1) as u128));
    if stored > MITM_TABLE_LIMIT {
        return Err(Error::SignatureTableTooLarge { entries: stored });
    }

    let l = a.lcm();
    if l.clone() * (a.len() as u64) < (BigUint::from(1u64) << 63) {
        mitm_u64(entries, &half_a, &half_b, l.to_u64().expect("below 2^63"))
    } else {
        mitm_big(entries, &half_a, &half_b, &l)
    }
}

/// Split coordinate indices so the products of (a_i - 1) over the two
/// halves are roughly balanced; the first half is the stored one.
fn balanced_split(entries: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&i, &j| entries[j].cmp(&entries[i]));
    let mut half_a = Vec::new();
    let mut half_b = Vec::new();
    let (mut log_a, mut log_b) = (0.0f64, 0.0f64);
    for i in order {
        let log = ((entries[i] - 1) as f64).ln();
        if log_a <= log_b {
            half_a.push(i);
            log_a += log;
        } else {
            half_b.push(i);
            log_b += log;
        }
    }
    half_a.sort_unstable();
    half_b.sort_unstable();
    (half_a, half_b)
}

/// Count of sorted values v with lo < v < hi.
fn count_open(sorted: &[u64], lo: i128, hi: i128) -> i128 {
    if hi <= lo + 1 {
        return 0;
    }
    let above = sorted.partition_point(|&v| (v as i128) <= lo);
    let below = sorted.partition_point(|&v| (v as i128) < hi);
    (below - above) as i128
}

fn mitm_u64(entries: &[u64], half_a: &[usize], half_b: &[usize], l: u64) -> Result<i64> {
    let two_l = 2 * l;

    let mut sums = vec![0u64];
    for &i in half_a {
        let w = l / entries[i];
        let mut next = Vec::with_capacity(sums.len() * (entries[i] as usize - 1));
        for &s in &sums {
            let mut v = s;
            for _ in 1..entries[i] {
                v = (v + w) % two_l;
                next.push(v);
            }
        }
        sums = next;
    }
    sums.sort_unstable();

    let l_i = l as i128;
    let mut tau: i128 = 0;
    stream_half(entries, half_b, l, |b| {
        let b = b as i128;
        for k in 0..2 {
            let base = 2 * l_i * k - b;
            tau += count_open(&sums, base, base + l_i);
            tau -= count_open(&sums, base + l_i, base + 2 * l_i);
        }
    });
    tau_from_i128(tau)
}

/// Walk the partial sums of `half` mod 2L (all x_i in 1..a_i), invoking
/// `f` on each; the empty half yields the single empty sum 0.
fn stream_half(entries: &[u64], half: &[usize], l: u64, mut f: impl FnMut(u64)) {
    if half.is_empty() {
        f(0);
        return;
    }
    let two_l = 2 * l;
    let steps: Vec<u64> = half.iter().map(|&i| l / entries[i]).collect();
    let resets: Vec<u64> = half
        .iter()
        .zip(&steps)
        .map(|(&i, &w)| (((entries[i] - 1) as u128 * w as u128) % two_l as u128) as u64)
        .collect();

    let mut x: Vec<u64> = vec![1; half.len()];
    let mut s: u64 = steps.iter().fold(0u64, |acc, &w| (acc + w) % two_l);
    loop {
        f(s);
        let mut i = 0;
        loop {
            if i == half.len() {
                return;
            }
            x[i] += 1;
            s = (s + steps[i]) % two_l;
            if x[i] < entries[half[i]] {
                break;
            }
            x[i] = 1;
            s = (s + two_l - resets[i]) % two_l;
            i += 1;
        }
    }
}

fn mitm_big(entries: &[u64], half_a: &[usize], half_b: &[usize], l: &BigUint) -> Result<i64> {
    let two_l = l * 2u32;

    let mut sums = vec![BigUint::zero()];
    for &i in half_a {
        let w = l / entries[i];
        let mut next = Vec::with_capacity(sums.len() * (entries[i] as usize - 1));
        for s in &sums {
            let mut v = s.clone();
            for _ in 1..entries[i] {
                v = (v + &w) % &two_l;
                next.push(v.clone());
            }
        }
        sums = next;
    }
    sums.sort_unstable();

    let count_open_big = |lo: &BigInt, hi: &BigInt| -> i128 {
        let zero = BigInt::zero();
        if *hi <= lo + 1 {
            return 0;
        }
        let lo_open = (lo + BigInt::one())
            .max(zero.clone())
            .to_biguint()
            .expect("clamped");
        let hi_open = hi.clone().max(zero).to_biguint().expect("clamped");
        let above = sums.partition_point(|v| *v < lo_open);
        let below = sums.partition_point(|v| *v < hi_open);
        (below - above) as i128
    };

    let l_i = BigInt::from(l.clone());
    let two_l_i = &l_i * 2;
    let mut tau: i128 = 0;
    let visit = |b: &BigUint, tau: &mut i128| {
        let b = BigInt::from(b.clone());
        for k in 0..2u32 {
            let base = &two_l_i * k - &b;
            *tau += count_open_big(&base, &(&base + &l_i));
            *tau -= count_open_big(&(&base + &l_i), &(&base + &two_l_i));
        }
    };

    if half_b.is_empty() {
        visit(&BigUint::zero(), &mut tau);
        return tau_from_i128(tau);
    }
    let steps: Vec<BigUint> = half_b.iter().map(|&i| l / entries[i]).collect();
    let resets: Vec<BigUint> = half_b
        .iter()
        .zip(&steps)
        .map(|(&i, w)| (w * (entries[i] - 1)) % &two_l)
        .collect();
    let mut x: Vec<u64> = vec![1; half_b.len()];
    let mut s = steps
        .iter()
        .fold(BigUint::zero(), |acc, w| (acc + w) % &two_l);
    loop {
        visit(&s, &mut tau);
        let mut i = 0;
        loop {
            if i == half_b.len() {
                return tau_from_i128(tau);
            }
            x[i] += 1;
            s = (s + &steps[i]) % &two_l;
            if x[i] < entries[half_b[i]] {
                break;
            }
            x[i] = 1;
            s = (&s + &two_l - &resets[i]) % &two_l;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_word_path_matches_oracle() {
        let cases: &[&[u64]] = &[
            &[2, 2, 2],
            &[2, 2, 3],
            &[2, 3, 7],
            &[2, 3, 5, 7, 11],
            &[3, 4, 5, 7, 9],
        ];
        for entries in cases {
            let a = ExponentVector::new(entries.to_vec()).unwrap();
            let (half_a, half_b) = balanced_split(a.entries());
            let tau = mitm_big(a.entries(), &half_a, &half_b, &a.lcm()).unwrap();
            assert_eq!(
                tau,
                signature_oracle(&a, DEFAULT_SIGNATURE_BUDGET).unwrap(),
                "wide-word mismatch at {a}"
            );
        }
    }

    #[test]
    fn table_cap_is_enforced() {
        let big = 1u64 << 20;
        let a = ExponentVector::new(vec![big, big, big]).unwrap();
        assert!(matches!(
            signature_meet_middle(&a),
            Err(Error::SignatureTableTooLarge { .. })
        ));
    }
}

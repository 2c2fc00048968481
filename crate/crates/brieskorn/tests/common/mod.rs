#![allow(dead_code)]

use brieskorn::{klt_check, ExponentVector};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

pub fn ev(entries: &[u64]) -> ExponentVector {
    ExponentVector::new(entries.to_vec()).expect("valid exponents")
}

pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Bernoulli number B_n by the Akiyama-Tanigawa algorithm (B_1 = +1/2
/// convention; all other values match the defining recurrence).
pub fn bernoulli_akiyama_tanigawa(n: usize) -> BigRational {
    let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(BigRational::new(BigInt::one(), BigInt::from(m as u64 + 1)));
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * BigRational::from_integer(BigInt::from(j as u64));
        }
    }
    a[0].clone()
}

/// Monomial count by plain enumeration: tuples m >= 0 with
/// sum m_i w_i = d.
pub fn count_monomials_brute(weights: &[u64], d: u64) -> u64 {
    match weights.split_first() {
        None => u64::from(d == 0),
        Some((&w, rest)) => {
            let mut total = 0;
            let mut used = 0;
            while used <= d {
                total += count_monomials_brute(rest, d - used);
                if w == 0 {
                    break;
                }
                used += w;
            }
            total
        }
    }
}

/// All ascending exponent vectors with `len` entries in 2..=cap that
/// pass the Fano and klt checks, in lexicographic order.
pub fn candidates_brute(len: usize, cap: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(len: usize, cap: u64, current: &mut Vec<u64>, out: &mut Vec<ExponentVector>) {
        if current.len() == len {
            let a = ExponentVector::new(current.clone()).expect("valid");
            let sum: BigRational = current
                .iter()
                .map(|&v| BigRational::new(BigInt::one(), BigInt::from(v)))
                .sum();
            if sum > BigRational::one() && klt_check(&a).passes {
                out.push(a);
            }
            return;
        }
        let lo = current.last().copied().unwrap_or(2);
        for v in lo..=cap {
            current.push(v);
            rec(len, cap, current, out);
            current.pop();
        }
    }
    rec(len, cap, &mut current, &mut out);
    out
}

mod common;

use brieskorn::{
    certify, count_monomials, fano_check, klt_check, moduli_dimension, uniqueness_check,
    weight_system, Error,
};
use common::{count_monomials_brute, ev, rat};
use num::bigint::{BigInt, BigUint};
use num::Zero;

#[test]
fn weight_system_values() {
    let w = weight_system(&ev(&[2, 3, 7, 35]));
    assert_eq!(w.degree(), &BigUint::from(210u32));
    assert_eq!(
        w.weights(),
        &[
            BigUint::from(105u32),
            BigUint::from(70u32),
            BigUint::from(30u32),
            BigUint::from(6u32)
        ]
    );
    assert_eq!(w.b(), &[1, 1, 7, 7]);
    assert_eq!(
        w.weight_sum(),
        BigUint::from(105u32 + 70 + 30 + 6)
    );

    let w = weight_system(&ev(&[2, 3, 7, 43, 1807]));
    assert_eq!(w.degree(), &BigUint::from(3_263_442u64));
    assert_eq!(w.weights()[4], BigUint::from(1806u32));
    assert_eq!(w.b(), &[1, 1, 1, 1, 1]);
}

#[test]
fn fano_margins() {
    let f = fano_check(&ev(&[2, 3, 7, 35]));
    assert!(f.passes);
    assert_eq!(f.margin, rat(1, 210));

    let f = fano_check(&ev(&[2, 2, 2, 2, 2]));
    assert!(f.passes);
    assert_eq!(f.margin, rat(3, 2));

    // The Sylvester exponents sum to exactly 1 - 1/product.
    let f = fano_check(&ev(&[2, 3, 7, 43, 1807]));
    assert!(!f.passes);
    assert_eq!(f.margin, rat(-1, 3_263_442));
}

#[test]
fn klt_bounds() {
    // b_2 = b_3 = 7, so the bound uses 49 rather than max entry 35.
    let k = klt_check(&ev(&[2, 3, 7, 35]));
    assert!(k.passes);
    assert_eq!(k.sum, rat(211, 210));
    assert_eq!(k.bound, rat(101, 98));

    // Fano but not klt.
    let k = klt_check(&ev(&[2, 3, 7, 21]));
    assert!(!k.passes);
    assert_eq!(k.sum, rat(43, 42));
    assert_eq!(k.bound, rat(99, 98));

    // Pairwise coprime: all b_i = 1, bound driven by the max entry.
    let k = klt_check(&ev(&[2, 3, 5, 7]));
    assert!(k.passes);
    assert_eq!(k.bound, rat(17, 14));
}

#[test]
fn uniqueness_margins() {
    let u = uniqueness_check(&ev(&[2, 3, 5, 7]));
    assert!(u.passes);
    assert_eq!(u.excess, BigInt::from(37));
    assert_eq!(u.threshold, rat(45, 1));

    let u = uniqueness_check(&ev(&[2, 3, 7, 35]));
    assert!(u.passes);
    assert_eq!(u.excess, BigInt::from(1));
    assert_eq!(u.threshold, rat(9, 1));

    // Degree 2, weights all 1: excess 3 is not under 5/2.
    let u = uniqueness_check(&ev(&[2, 2, 2, 2, 2]));
    assert!(!u.passes);
    assert_eq!(u.excess, BigInt::from(3));
}

#[test]
fn monomial_counts_match_enumeration() {
    use num::ToPrimitive;
    let vectors: &[&[u64]] = &[
        &[2, 3, 7, 35],
        &[2, 3, 5, 7],
        &[2, 2, 2, 2, 2],
        &[2, 3, 4, 5],
        &[3, 4, 5],
        &[2, 3, 7],
    ];
    for entries in vectors {
        let a = ev(entries);
        let ws = weight_system(&a);
        let weights: Vec<u64> = ws
            .weights()
            .iter()
            .map(|w| w.to_u64().expect("small weight"))
            .collect();
        let d = ws.degree().to_u64().expect("small degree");
        let mut probes = vec![0, 1, d / 2, d - 1, d];
        probes.extend(weights.iter().copied());
        for t in probes {
            let expected = count_monomials_brute(&weights, t);
            assert_eq!(
                count_monomials(&a, t).unwrap(),
                BigUint::from(expected),
                "exponents {entries:?}, degree {t}"
            );
        }
    }
    // Frozen value: degree-210 monomials in weights (105,70,30,6).
    assert_eq!(
        count_monomials(&ev(&[2, 3, 7, 35]), 210).unwrap(),
        BigUint::from(10u32)
    );
}

#[test]
fn monomial_counts_reject_huge_degree() {
    assert!(matches!(
        count_monomials(&ev(&[2, 3, 7]), 1 << 30),
        Err(Error::DegreeTooLarge(_))
    ));
}

#[test]
fn moduli_dimensions() {
    // Degree 210, weights (105,70,30,6): 10 monomials, 5 infinitesimal
    // automorphisms, 5 complex moduli.
    let m = moduli_dimension(&ev(&[2, 3, 7, 35])).unwrap();
    assert_eq!(m.degree_monomials, BigUint::from(10u32));
    assert_eq!(m.automorphism_dim, BigUint::from(5u32));
    assert_eq!(m.complex_dim, BigInt::from(5));
    assert_eq!(m.real_dim, BigUint::from(10u32));
    assert!(!m.clamped);

    // Rigid: only the Fermat-type monomials exist in degree 210.
    let m = moduli_dimension(&ev(&[2, 3, 5, 7])).unwrap();
    assert_eq!(m.degree_monomials, BigUint::from(4u32));
    assert_eq!(m.automorphism_dim, BigUint::from(4u32));
    assert_eq!(m.real_dim, BigUint::zero());
    assert!(!m.clamped);

    // Quadric: automorphisms outnumber monomials, so the estimate clamps.
    let m = moduli_dimension(&ev(&[2, 2, 2, 2, 2])).unwrap();
    assert_eq!(m.degree_monomials, BigUint::from(15u32));
    assert_eq!(m.automorphism_dim, BigUint::from(25u32));
    assert_eq!(m.complex_dim, BigInt::from(-10));
    assert_eq!(m.real_dim, BigUint::zero());
    assert!(m.clamped);
}

#[test]
fn certificate_requires_both_checks() {
    let c = certify(&ev(&[2, 3, 7, 35])).unwrap();
    assert!(c.passes());
    assert!(c.fano.passes && c.klt.passes);
    let m = c.moduli.expect("moduli computed for certified links");
    assert_eq!(m.real_dim, BigUint::from(10u32));

    // Fano holds but klt fails: no certificate, no moduli run.
    let c = certify(&ev(&[2, 3, 7, 21])).unwrap();
    assert!(!c.passes());
    assert!(c.fano.passes);
    assert!(!c.klt.passes);
    assert!(c.moduli.is_none());

    // Fano fails outright.
    let c = certify(&ev(&[2, 3, 7, 43, 1807])).unwrap();
    assert!(!c.passes());
    assert!(!c.fano.passes);
}

#[test]
fn certified_sylvester_variant_moduli() {
    let c = certify(&ev(&[2, 3, 7, 43, 1333])).unwrap();
    assert!(c.passes());
    let m = c.moduli.expect("moduli computed");
    assert_eq!(m.real_dim, BigUint::from(82u32));
    assert!(!m.clamped);
}

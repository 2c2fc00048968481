//! Deterministic pruned search for certified spherical links of a given
//! dimension.
//!
//! Candidates are ascending exponent vectors passing the Fano and klt
//! checks. The walk is depth-first in lexicographic order with exact
//! rational partial sums S = sum of chosen 1/a_i; the pruning rests on
//! two facts about the klt bound (margin <= (n/(n-1)) * 1/a_max):
//!
//! * at an interior node (two or more entries still to choose), S >= 1
//!   kills every completion, since the remaining entries alone push the
//!   excess to at least 2/a_max, past the largest possible margin;
//! * a prefix with S = 1 therefore matters only at the final entry,
//!   where every completion passes Fano and all large coprime entries
//!   pass klt. No such completion is ever a sphere (no prefix vertex
//!   can be coprime to the rest when the prefix sums to 1, and a parity
//!   argument rules out the even-component sphere case), so with no cap
//!   on the last entry these infinite, record-free tails are skipped;
//!   with a cap they are scanned exactly.
//!
//! Census records are the candidates that are homeomorphic to spheres,
//! classified and certified; partitioning by the first two entries
//! gives deterministic parallelism (shards are merged in prefix order,
//! so results are identical for any thread count).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::einstein::{certify, fano_check, klt_check, EinsteinCertificate};
use crate::error::{Error, Result};
use crate::numeric::{sylvester_sequence, BpGroupStatus, ExactRational};
use crate::topology::{
    brieskorn_graph, classify, sphere_recognition, ExponentVector, SphereClass,
    SphereRecognition, DEFAULT_SIGNATURE_BUDGET,
};

/// What to search: the link dimension, an optional cap on the largest
/// exponent, and the budget on the exponent product (which gates the
/// signature and moduli work per candidate).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub link_dimension: u32,
    pub max_last_entry: Option<u64>,
    pub max_product: u64,
}

impl SearchSpec {
    pub fn new(link_dimension: u32) -> Result<Self> {
        if link_dimension < 5 || link_dimension.is_multiple_of(2) {
            return Err(Error::BadSearchDimension(link_dimension));
        }
        Ok(Self {
            link_dimension,
            max_last_entry: None,
            max_product: DEFAULT_SIGNATURE_BUDGET,
        })
    }

    pub fn with_max_last_entry(mut self, cap: u64) -> Self {
        self.max_last_entry = Some(cap);
        self
    }

    pub fn with_max_product(mut self, max_product: u64) -> Self {
        self.max_product = max_product;
        self
    }

    /// Number of exponents: n+1 entries for links of dimension 2n-1.
    pub fn entry_count(&self) -> usize {
        ((self.link_dimension + 3) / 2) as usize
    }
}

fn saturating_u64(v: &BigInt) -> u64 {
    v.to_u64().unwrap_or(u64::MAX)
}

/// Loop bounds for an interior entry: with partial sum S = p/q < 1 and
/// `remaining` slots left, Fano feasibility needs S + remaining/v > 1,
/// and when at least two more entries follow, the child must keep
/// S + 1/v < 1 (else it is dead by the interior kill). None when empty.
fn interior_bounds(
    sum: &BigRational,
    remaining: usize,
    lo: u64,
    cap: Option<u64>,
) -> Option<(u64, u64)> {
    if *sum >= BigRational::one() {
        return None;
    }
    let p = sum.numer();
    let q = sum.denom();
    let gap = q - p;

    // v < remaining * q / gap
    let mut hi = (BigInt::from(remaining as u64) * q - BigInt::one()).div_floor(&gap);
    if let Some(c) = cap {
        hi = hi.min(BigInt::from(c));
    }

    let mut lo_eff = BigInt::from(lo);
    if remaining >= 3 {
        // v > q / gap
        let lb = q.div_floor(&gap) + 1;
        if lb > lo_eff {
            lo_eff = lb;
        }
    }
    if hi < lo_eff {
        return None;
    }
    let lo_eff = lo_eff.to_u64()?;
    Some((lo_eff, saturating_u64(&hi)))
}

/// Whether a prefix with partial sum exactly 1 admits sphere
/// completions for arbitrarily large final entries. Requires the
/// prefix's even component to have odd cardinality and pairwise gcd
/// exactly 2; provably never true (parity), kept as insurance.
fn sum_one_tail_viable(prefix: &[u64]) -> bool {
    let a = ExponentVector::from_ascending(prefix.to_vec());
    let graph = brieskorn_graph(&a);
    let ev = graph.even_component();
    if ev.len().is_multiple_of(2) {
        return false;
    }
    for (s, &i) in ev.iter().enumerate() {
        for &j in &ev[s + 1..] {
            if graph.labels()[i].gcd(&graph.labels()[j]) != 2 {
                return false;
            }
        }
    }
    true
}

fn emit_if_certified<F>(prefix: &mut Vec<u64>, v: u64, emit: &mut F) -> Result<()>
where
    F: FnMut(ExponentVector) -> Result<()>,
{
    prefix.push(v);
    let candidate = ExponentVector::from_ascending(prefix.clone());
    prefix.pop();
    if fano_check(&candidate).passes && klt_check(&candidate).passes {
        emit(candidate)?;
    }
    Ok(())
}

fn final_entries<F>(
    spec: &SearchSpec,
    prefix: &mut Vec<u64>,
    sum: &BigRational,
    lo: u64,
    emit: &mut F,
) -> Result<()>
where
    F: FnMut(ExponentVector) -> Result<()>,
{
    let n = BigInt::from(spec.entry_count() as u64 - 1);
    match sum.cmp(&BigRational::one()) {
        Ordering::Less => {
            // Fano: v < q / gap
            let p = sum.numer();
            let q = sum.denom();
            let gap = q - p;
            let mut hi = (q - 1u32).div_floor(&gap);
            if let Some(c) = spec.max_last_entry {
                hi = hi.min(BigInt::from(c));
            }
            for v in lo..=saturating_u64(&hi) {
                emit_if_certified(prefix, v, emit)?;
            }
            Ok(())
        }
        Ordering::Equal => {
            if let Some(cap) = spec.max_last_entry {
                for v in lo..=cap {
                    emit_if_certified(prefix, v, emit)?;
                }
                Ok(())
            } else if sum_one_tail_viable(prefix) {
                Err(Error::UnboundedFamily(prefix.clone()))
            } else {
                // infinite tail of klt-passing non-spheres: no records
                Ok(())
            }
        }
        Ordering::Greater => {
            // klt necessity: v < (n/(n-1)) / (S - 1)
            let excess = sum - BigRational::one();
            let p = excess.numer();
            let q = excess.denom();
            let mut hi = (&n * q - BigInt::one()).div_floor(&((&n - BigInt::one()) * p));
            if let Some(c) = spec.max_last_entry {
                hi = hi.min(BigInt::from(c));
            }
            for v in lo..=saturating_u64(&hi) {
                emit_if_certified(prefix, v, emit)?;
            }
            Ok(())
        }
    }
}

fn dfs<F>(spec: &SearchSpec, prefix: &mut Vec<u64>, sum: BigRational, emit: &mut F) -> Result<()>
where
    F: FnMut(ExponentVector) -> Result<()>,
{
    let lo = prefix.last().copied().unwrap_or(2);
    let remaining = spec.entry_count() - prefix.len();
    if remaining == 1 {
        return final_entries(spec, prefix, &sum, lo, emit);
    }
    let Some((lo_eff, hi)) = interior_bounds(&sum, remaining, lo, spec.max_last_entry) else {
        return Ok(());
    };
    for v in lo_eff..=hi {
        let child = &sum + BigRational::new(BigInt::one(), BigInt::from(v));
        prefix.push(v);
        let out = dfs(spec, prefix, child, emit);
        prefix.pop();
        out?;
    }
    Ok(())
}

/// Every ascending exponent vector of the spec's dimension passing the
/// Fano and klt checks, in lexicographic order. Errors with
/// `UnboundedFamily` if a prefix ever admits infinitely many certified
/// sphere completions and no cap is set (provably unreachable).
pub fn enumerate_candidates(spec: &SearchSpec) -> Result<Vec<ExponentVector>> {
    let mut out = Vec::new();
    dfs(spec, &mut Vec::new(), BigRational::zero(), &mut |c| {
        out.push(c);
        Ok(())
    })?;
    Ok(out)
}

/// A certified spherical link found by the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub a: ExponentVector,
    pub class: SphereClass,
    pub certificate: EinsteinCertificate,
}

impl SearchRecord {
    pub fn dim(&self) -> u32 {
        self.a.link_dimension()
    }
}

/// Diffeomorphism class used as the census table key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKey {
    /// Dimension 4m-1: the bP_4m label (order = standard sphere).
    Label(BigUint),
    /// Dimension 4m+1: the standard sphere.
    Standard,
    /// Dimension 4m+1: the exotic Kervaire sphere.
    Kervaire,
    /// Dimension 4m+1: the Kervaire sphere, exoticness open.
    KervaireOpen,
}

impl ClassKey {
    pub fn of(class: &SphereClass) -> Option<Self> {
        match class {
            SphereClass::NotSphere => None,
            SphereClass::BpIndex { label, .. } => Some(ClassKey::Label(label.clone())),
            SphereClass::Kervaire {
                kervaire,
                exoticness,
                ..
            } => Some(if !kervaire || *exoticness == BpGroupStatus::Trivial {
                ClassKey::Standard
            } else if *exoticness == BpGroupStatus::OrderTwo {
                ClassKey::Kervaire
            } else {
                ClassKey::KervaireOpen
            }),
        }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKey::Label(l) => write!(f, "{l}"),
            ClassKey::Standard => write!(f, "standard"),
            ClassKey::Kervaire => write!(f, "kervaire"),
            ClassKey::KervaireOpen => write!(f, "kervaire-open"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusRow {
    pub count: u64,
    pub max_real_moduli: Option<BigUint>,
}

/// Counts per diffeomorphism class, with the largest real moduli
/// dimension seen in each class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub link_dimension: u32,
    pub total: u64,
    pub rows: BTreeMap<ClassKey, CensusRow>,
}

impl CensusTable {
    pub fn from_records(link_dimension: u32, records: &[SearchRecord]) -> Self {
        let mut rows: BTreeMap<ClassKey, CensusRow> = BTreeMap::new();
        for record in records {
            let key = ClassKey::of(&record.class).expect("census records are spheres");
            let row = rows.entry(key).or_default();
            row.count += 1;
            if let Some(moduli) = &record.certificate.moduli {
                let dim = &moduli.real_dim;
                if row.max_real_moduli.as_ref().is_none_or(|m| m < dim) {
                    row.max_real_moduli = Some(dim.clone());
                }
            }
        }
        CensusTable {
            link_dimension,
            total: records.len() as u64,
            rows,
        }
    }
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dim {}: {} certified spherical links",
            self.link_dimension, self.total
        )?;
        writeln!(f, "{:<14} {:>8}  max moduli", "class", "count")?;
        for (key, row) in &self.rows {
            let moduli = row
                .max_real_moduli
                .as_ref()
                .map_or_else(|| "-".to_string(), |m| m.to_string());
            writeln!(f, "{:<14} {:>8}  {}", key.to_string(), row.count, moduli)?;
        }
        Ok(())
    }
}

fn evaluate_candidate(spec: &SearchSpec, a: ExponentVector) -> Result<Option<SearchRecord>> {
    let product = a.product();
    if product > spec.max_product as u128 {
        return Err(Error::CensusBudgetExceeded {
            a: a.entries().to_vec(),
            product,
            budget: spec.max_product,
        });
    }
    let class = classify(&a)?;
    if !class.is_sphere() {
        return Ok(None);
    }
    let certificate = certify(&a)?;
    Ok(Some(SearchRecord {
        a,
        class,
        certificate,
    }))
}

/// Length-2 prefixes (with their partial sums) that the search can
/// extend, in lexicographic order.
fn shard_prefixes(spec: &SearchSpec) -> Vec<(Vec<u64>, BigRational)> {
    let mut shards = Vec::new();
    let k = spec.entry_count();
    let zero = BigRational::zero();
    let Some((lo0, hi0)) = interior_bounds(&zero, k, 2, spec.max_last_entry) else {
        return shards;
    };
    for a0 in lo0..=hi0 {
        let s0 = BigRational::new(BigInt::one(), BigInt::from(a0));
        let Some((lo1, hi1)) = interior_bounds(&s0, k - 1, a0, spec.max_last_entry) else {
            continue;
        };
        for a1 in lo1..=hi1 {
            let s1 = &s0 + BigRational::new(BigInt::one(), BigInt::from(a1));
            shards.push((vec![a0, a1], s1));
        }
    }
    shards
}

/// Run the census: classify and certify every candidate, in parallel
/// over length-2 prefixes. `jobs = 0` uses one thread per CPU. Records
/// come back in lexicographic order regardless of `jobs`, so runs are
/// deterministic.
pub fn run_census(spec: &SearchSpec, jobs: usize) -> Result<(CensusTable, Vec<SearchRecord>)> {
    let shards = shard_prefixes(spec);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");

    let results: Vec<Result<Vec<SearchRecord>>> = pool.install(|| {
        shards
            .par_iter()
            .map(|(prefix, sum)| {
                let mut records = Vec::new();
                let mut prefix = prefix.clone();
                dfs(spec, &mut prefix, sum.clone(), &mut |candidate| {
                    if let Some(record) = evaluate_candidate(spec, candidate)? {
                        records.push(record);
                    }
                    Ok(())
                })?;
                Ok(records)
            })
            .collect()
    });

    let mut records = Vec::new();
    for shard in results {
        records.extend(shard?);
    }
    let table = CensusTable::from_records(spec.link_dimension, &records);
    Ok((table, records))
}

/// Certified families whose exponents are a Sylvester prefix
/// (c_1, ..., c_n) plus one tail entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterTailReport {
    pub n: usize,
    /// Tail values x in (c_{n+1} - c_n, c_{n+1}) coprime to 6; each
    /// gives a certified spherical link (c_1, ..., c_n, x).
    pub count: u64,
    /// (c_n - 1)/3, a proven lower bound for `count`.
    pub lower_bound: ExactRational,
    /// The tail values themselves when the interval was enumerated
    /// (n <= 5); None when only counted.
    pub members: Option<Vec<u64>>,
}

fn coprime6_upto(m: u128) -> u128 {
    const TABLE: [u128; 6] = [0, 1, 1, 1, 1, 2];
    (m / 6) * 2 + TABLE[(m % 6) as usize]
}

/// Count the certified sphere families (c_1, ..., c_n, x) with tail x
/// in the open interval (c_{n+1} - c_n, c_{n+1}) and gcd(x, 6) = 1.
/// Every such x is counted: the first two prefix entries 2 and 3 are
/// coprime to the rest, so the link is a sphere, and the tail interval
/// is exactly where Fano and klt both hold. For n <= 5 the interval is
/// enumerated and every member's certificate is checked; for n = 6 the
/// two extreme members are checked; n = 7 is count-only (the tails
/// exceed u64). Larger prefixes do not fit 64-bit exponents.
pub fn sylvester_tail_families(n: usize) -> Result<SylvesterTailReport> {
    assert!(n >= 3, "sylvester_tail_families needs n >= 3");
    if n > 7 {
        return Err(Error::SylvesterPrefixTooLarge(n));
    }
    let seq = sylvester_sequence(n + 1);
    let prefix: Vec<u64> = seq[..n]
        .iter()
        .map(|c| c.to_u64().expect("c_1..c_7 fit u64"))
        .collect();
    let c_n = prefix[n - 1] as u128;
    let c_next = seq[n].to_u128().expect("c_8 fits u128");
    let lo = c_next - c_n;
    let count128 = coprime6_upto(c_next - 1) - coprime6_upto(lo);
    let count = count128.to_u64().expect("count <= c_7 / 3");

    let lower_bound = BigRational::new(BigInt::from(c_n) - 1, BigInt::from(3));
    assert!(
        BigRational::from_integer(BigInt::from(count)) >= lower_bound,
        "tail count fell below the proven bound"
    );

    let verify = |x: u64| -> Result<()> {
        let mut entries = prefix.clone();
        entries.push(x);
        let a = ExponentVector::new(entries)?;
        let recognition = sphere_recognition(&a)?;
        assert!(
            recognition != SphereRecognition::NotSphere,
            "Sylvester tail {a} must be a sphere"
        );
        assert!(
            fano_check(&a).passes && klt_check(&a).passes,
            "Sylvester tail {a} must be certified"
        );
        Ok(())
    };

    let members = if c_n - 1 <= 10_000 {
        let mut members = Vec::new();
        for x in lo + 1..c_next {
            if x % 2 != 0 && x % 3 != 0 {
                members.push(x.to_u64().expect("tail fits u64 for n <= 5"));
            }
        }
        assert_eq!(members.len() as u64, count, "interval count mismatch");
        for &x in &members {
            verify(x)?;
        }
        Some(members)
    } else {
        if let Some(hi64) = c_next.to_u64() {
            let lo64 = hi64 - c_n as u64;
            let first = (lo64 + 1..hi64)
                .find(|x| x % 2 != 0 && x % 3 != 0)
                .expect("interval contains coprime values");
            let last = (lo64 + 1..hi64)
                .rev()
                .find(|x| x % 2 != 0 && x % 3 != 0)
                .expect("interval contains coprime values");
            verify(first)?;
            verify(last)?;
        }
        None
    };

    Ok(SylvesterTailReport {
        n,
        count,
        lower_bound,
        members,
    })
}

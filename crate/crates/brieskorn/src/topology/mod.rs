//! Diffeomorphism classification of Brieskorn-Pham links.
//!
//! The link of z_0^{a_0} + ... + z_n^{a_n} = 0 is a smooth
//! (2n-1)-manifold. Whether it is homeomorphic to the sphere is decided
//! by the Brieskorn graph criterion on the exponents; when it is, the
//! signature of the Milnor fiber (dimension 4m-1) or the Arf invariant
//! (dimension 4m+1) pins down the diffeomorphism type inside the group
//! bP of spheres bounding parallelizable manifolds.

mod signature;

pub use signature::{
    signature_fast, signature_histogram, signature_meet_middle, signature_oracle,
    DEFAULT_SIGNATURE_BUDGET,
};

use num::bigint::{BigInt, BigUint};
use num::Integer;

use crate::error::{Error, Result};
use crate::numeric::{bp4m2_status, bp4m_order, BpGroupStatus};

/// Exponents of a Brieskorn-Pham polynomial, kept sorted ascending.
///
/// Every entry is at least 2 and there are at least 3 of them; with
/// n+1 entries the link is a (2n-1)-manifold.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    entries: Vec<u64>,
}

impl ExponentVector {
    pub fn new(entries: impl Into<Vec<u64>>) -> Result<Self> {
        let mut entries = entries.into();
        if entries.len() < 3 {
            return Err(Error::TooFewExponents(entries.len()));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e < 2) {
            return Err(Error::ExponentTooSmall(bad));
        }
        entries.sort_unstable();
        Ok(Self { entries })
    }

    /// Entries already sorted ascending and validated by the caller.
    pub(crate) fn from_ascending(entries: Vec<u64>) -> Self {
        debug_assert!(entries.len() >= 3);
        debug_assert!(entries.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(entries.first().is_none_or(|&e| e >= 2));
        Self { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// n, for n+1 exponents.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    /// Dimension 2n-1 of the link.
    pub fn link_dimension(&self) -> u32 {
        2 * (self.entries.len() as u32 - 1) - 1
    }

    /// Product of the entries, saturating at u128::MAX.
    pub fn product(&self) -> u128 {
        self.entries
            .iter()
            .fold(1u128, |p, &a| p.saturating_mul(a as u128))
    }

    /// Least common multiple of the entries.
    pub fn lcm(&self) -> BigUint {
        self.entries
            .iter()
            .fold(BigUint::from(1u32), |l, &a| l.lcm(&BigUint::from(a)))
    }
}

impl std::fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Graph on the exponents with an edge where gcd(a_i, a_j) > 1,
/// together with the two pieces the sphere criterion looks at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrieskornGraph {
    labels: Vec<u64>,
    edges: Vec<(usize, usize)>,
    isolated: Vec<usize>,
    even_component: Vec<usize>,
}

impl BrieskornGraph {
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Edges (i, j) with i < j and gcd(a_i, a_j) > 1.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertices with no edge at all.
    pub fn isolated(&self) -> &[usize] {
        &self.isolated
    }

    /// The connected component containing the even exponents
    /// (all even vertices are mutually adjacent, so there is at most one).
    /// Empty when every exponent is odd.
    pub fn even_component(&self) -> &[usize] {
        &self.even_component
    }
}

/// Build the exponent graph of `a`.
pub fn brieskorn_graph(a: &ExponentVector) -> BrieskornGraph {
    let labels = a.entries().to_vec();
    let k = labels.len();
    let mut adjacency = vec![Vec::new(); k];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if labels[i].gcd(&labels[j]) > 1 {
                edges.push((i, j));
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    let isolated: Vec<usize> = (0..k).filter(|&i| adjacency[i].is_empty()).collect();

    let mut in_even = vec![false; k];
    let mut queue: Vec<usize> = (0..k).filter(|&i| labels[i].is_multiple_of(2)).collect();
    for &i in &queue {
        in_even[i] = true;
    }
    while let Some(i) = queue.pop() {
        for &j in &adjacency[i] {
            if !in_even[j] {
                in_even[j] = true;
                queue.push(j);
            }
        }
    }
    let even_component: Vec<usize> = (0..k).filter(|&i| in_even[i]).collect();

    BrieskornGraph {
        labels,
        edges,
        isolated,
        even_component,
    }
}

/// Outcome of the graph-theoretic sphere test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphereRecognition {
    /// The link is not homeomorphic to a sphere.
    NotSphere,
    /// At least two isolated vertices.
    CaseI,
    /// A unique odd isolated vertex, and the even component has odd
    /// cardinality with every distinct pair in it having gcd exactly 2.
    CaseII {
        /// Index (into the sorted entries) of the odd isolated vertex.
        odd_vertex: usize,
    },
}

/// Decide whether the link of `a` is homeomorphic to the sphere.
///
/// Needs link dimension at least 5 (at least 4 exponents); in dimension
/// 3 the criterion does not apply.
pub fn sphere_recognition(a: &ExponentVector) -> Result<SphereRecognition> {
    let dim = a.link_dimension();
    if dim < 5 {
        return Err(Error::DimensionTooSmall(dim));
    }
    Ok(recognize(&brieskorn_graph(a)))
}

fn recognize(graph: &BrieskornGraph) -> SphereRecognition {
    if graph.isolated.len() >= 2 {
        return SphereRecognition::CaseI;
    }

    let odd_isolated: Vec<usize> = graph
        .isolated
        .iter()
        .copied()
        .filter(|&i| graph.labels[i] % 2 == 1)
        .collect();
    let &[odd_vertex] = odd_isolated.as_slice() else {
        return SphereRecognition::NotSphere;
    };

    let ev = &graph.even_component;
    if ev.len().is_multiple_of(2) {
        return SphereRecognition::NotSphere;
    }
    for (s, &i) in ev.iter().enumerate() {
        for &j in &ev[s + 1..] {
            if graph.labels[i].gcd(&graph.labels[j]) != 2 {
                return SphereRecognition::NotSphere;
            }
        }
    }
    SphereRecognition::CaseII { odd_vertex }
}

/// Diffeomorphism type of a Brieskorn-Pham link that passed (or failed)
/// the sphere test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphereClass {
    NotSphere,
    /// Dimension 4m-1: the class in bP_4m, labelled 1..=order with the
    /// Milnor generator as 1 and the standard sphere as `order`.
    BpIndex {
        dim: u32,
        tau: i64,
        group_order: BigUint,
        label: BigUint,
    },
    /// Dimension 4m+1: `kervaire` says whether the link is the Kervaire
    /// sphere; `exoticness` whether that sphere is known to be exotic.
    Kervaire {
        dim: u32,
        kervaire: bool,
        exoticness: BpGroupStatus,
    },
}

impl SphereClass {
    pub fn is_sphere(&self) -> bool {
        !matches!(self, SphereClass::NotSphere)
    }

    /// A sphere that is known to be diffeomorphic to the standard one.
    pub fn is_standard(&self) -> bool {
        match self {
            SphereClass::NotSphere => false,
            SphereClass::BpIndex {
                group_order, label, ..
            } => label == group_order,
            SphereClass::Kervaire {
                kervaire,
                exoticness,
                ..
            } => !kervaire || *exoticness == BpGroupStatus::Trivial,
        }
    }
}

/// Classify the link of `a` up to diffeomorphism.
///
/// In dimension 4m-1 the class is the signature divided by 8, taken mod
/// |bP_4m| (residue 0 is the standard sphere, reported as label =
/// order). In dimension 4m+1 the link is the Kervaire sphere exactly
/// when the sphere test succeeds through its odd-vertex case with the
/// odd exponent congruent to +-3 mod 8.
pub fn classify(a: &ExponentVector) -> Result<SphereClass> {
    let recognition = sphere_recognition(a)?;
    if recognition == SphereRecognition::NotSphere {
        return Ok(SphereClass::NotSphere);
    }
    let dim = a.link_dimension();
    let n = a.n();
    if n.is_multiple_of(2) {
        // dim = 4m - 1 with m = n/2
        let m = (n / 2) as u32;
        let tau = signature_fast(a)?;
        if tau % 8 != 0 {
            return Err(Error::SignatureResidue(tau));
        }
        let group_order = bp4m_order(m)?;
        let order = BigInt::from(group_order.clone());
        let label_zero = BigInt::from(tau / 8 - 1).mod_floor(&order);
        let label = (label_zero + 1u32)
            .to_biguint()
            .expect("label is in 1..=order");
        Ok(SphereClass::BpIndex {
            dim,
            tau,
            group_order,
            label,
        })
    } else {
        // dim = 4m + 1 with m = (n-1)/2
        let m = ((n - 1) / 2) as u32;
        let kervaire = match recognition {
            SphereRecognition::CaseII { odd_vertex } => {
                let r = a.entries()[odd_vertex] % 8;
                r == 3 || r == 5
            }
            _ => false,
        };
        Ok(SphereClass::Kervaire {
            dim,
            kervaire,
            exoticness: bp4m2_status(m),
        })
    }
}

//! Brieskorn-Pham links: diffeomorphism classification, Sasakian-
//! Einstein existence certificates, and a deterministic census search.
//!
//! The link of f = z_0^{a_0} + ... + z_n^{a_n} at 0 is a smooth
//! (2n-1)-manifold determined by the exponents. This crate decides,
//! with exact integer and rational arithmetic throughout:
//!
//! * whether the link is homeomorphic to the sphere (Brieskorn graph
//!   criterion), and if so which element of Kervaire-Milnor's group
//!   bP_{2n} it is, via the Milnor-fiber signature in dimensions 4m-1
//!   and the Arf invariant in dimensions 4m+1 ([`topology`]);
//! * whether the link carries a Sasakian-Einstein metric, via the
//!   Fano and Kawamata-log-terminal conditions on the associated
//!   weighted hypersurface, plus uniqueness and a moduli-dimension
//!   estimate ([`einstein`]);
//! * the full census of certified spherical links in a given dimension
//!   ([`search`]).

pub mod einstein;
pub mod error;
pub mod numeric;
pub mod search;
pub mod topology;

pub use einstein::{
    certify, count_monomials, fano_check, klt_check, moduli_dimension, uniqueness_check,
    weight_system, EinsteinCertificate, FanoCheck, KltCheck, ModuliEstimate, UniquenessCheck,
    WeightSystem,
};
pub use error::{Error, Result};
pub use numeric::{
    bernoulli_abs, bp4m2_status, bp4m_order, sylvester_sequence, BpGroupStatus, ExactRational,
};
pub use search::{
    enumerate_candidates, run_census, sylvester_tail_families, CensusRow, CensusTable, ClassKey,
    SearchRecord, SearchSpec, SylvesterTailReport,
};
pub use topology::{
    brieskorn_graph, classify, signature_fast, signature_histogram, signature_meet_middle,
    signature_oracle, sphere_recognition, BrieskornGraph, ExponentVector, SphereClass,
    SphereRecognition, DEFAULT_SIGNATURE_BUDGET,
};

//! Serializable views of classification results. Rationals and big
//! integers are carried as decimal strings ("p/q" when non-integral).

use brieskorn::{ClassKey, EinsteinCertificate, ModuliEstimate, SearchRecord, SphereClass};
use num::bigint::BigUint;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum TopologyDto {
    NotSphere {
        dim: u32,
    },
    BpIndex {
        dim: u32,
        tau: i64,
        group_order: String,
        label: String,
    },
    Kervaire {
        dim: u32,
        kervaire: bool,
        bp_group: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanoDto {
    pub passes: bool,
    pub margin: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KltDto {
    pub passes: bool,
    pub sum: String,
    pub bound: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessDto {
    pub passes: bool,
    pub excess: String,
    pub threshold: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliDto {
    pub degree_monomials: String,
    pub automorphism_dim: String,
    pub complex_dim: String,
    pub real_dim: String,
    pub clamped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub fano: FanoDto,
    pub klt: KltDto,
    pub uniqueness: UniquenessDto,
    pub moduli: Option<ModuliDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordDto {
    pub a: Vec<u64>,
    pub dim: u32,
    pub topology: TopologyDto,
    pub certificate: CertificateDto,
}

impl TopologyDto {
    fn from_class(dim: u32, class: &SphereClass) -> Self {
        match class {
            SphereClass::NotSphere => TopologyDto::NotSphere { dim },
            SphereClass::BpIndex {
                dim,
                tau,
                group_order,
                label,
            } => TopologyDto::BpIndex {
                dim: *dim,
                tau: *tau,
                group_order: group_order.to_string(),
                label: label.to_string(),
            },
            SphereClass::Kervaire {
                dim,
                kervaire,
                exoticness,
            } => TopologyDto::Kervaire {
                dim: *dim,
                kervaire: *kervaire,
                bp_group: exoticness.as_str().to_string(),
            },
        }
    }
}

impl From<&ModuliEstimate> for ModuliDto {
    fn from(m: &ModuliEstimate) -> Self {
        ModuliDto {
            degree_monomials: m.degree_monomials.to_string(),
            automorphism_dim: m.automorphism_dim.to_string(),
            complex_dim: m.complex_dim.to_string(),
            real_dim: m.real_dim.to_string(),
            clamped: m.clamped,
        }
    }
}

impl From<&EinsteinCertificate> for CertificateDto {
    fn from(c: &EinsteinCertificate) -> Self {
        CertificateDto {
            fano: FanoDto {
                passes: c.fano.passes,
                margin: c.fano.margin.to_string(),
            },
            klt: KltDto {
                passes: c.klt.passes,
                sum: c.klt.sum.to_string(),
                bound: c.klt.bound.to_string(),
            },
            uniqueness: UniquenessDto {
                passes: c.uniqueness.passes,
                excess: c.uniqueness.excess.to_string(),
                threshold: c.uniqueness.threshold.to_string(),
            },
            moduli: c.moduli.as_ref().map(ModuliDto::from),
        }
    }
}

impl RecordDto {
    pub fn new(a: &[u64], dim: u32, class: &SphereClass, certificate: &EinsteinCertificate) -> Self {
        RecordDto {
            a: a.to_vec(),
            dim,
            topology: TopologyDto::from_class(dim, class),
            certificate: CertificateDto::from(certificate),
        }
    }

    /// Census table key; None for non-spheres.
    pub fn class_key(&self) -> Option<ClassKey> {
        match &self.topology {
            TopologyDto::NotSphere { .. } => None,
            TopologyDto::BpIndex { label, .. } => Some(ClassKey::Label(label.parse().ok()?)),
            TopologyDto::Kervaire {
                kervaire, bp_group, ..
            } => Some(match (kervaire, bp_group.as_str()) {
                (false, _) | (true, "trivial") => ClassKey::Standard,
                (true, "order_two") => ClassKey::Kervaire,
                (true, _) => ClassKey::KervaireOpen,
            }),
        }
    }

    pub fn moduli_real_dim(&self) -> Option<BigUint> {
        self.certificate
            .moduli
            .as_ref()
            .and_then(|m| m.real_dim.parse().ok())
    }

    pub const CSV_HEADER: [&'static str; 10] = [
        "a",
        "dim",
        "topology_type",
        "bp_group",
        "label",
        "tau",
        "fano",
        "klt",
        "uniqueness",
        "moduli_real_dim",
    ];

    pub fn csv_row(&self) -> [String; 10] {
        let a = self
            .a
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        let (topology_type, bp_group, label, tau) = match &self.topology {
            TopologyDto::NotSphere { .. } => {
                ("not_sphere", String::new(), String::new(), String::new())
            }
            TopologyDto::BpIndex {
                tau,
                group_order,
                label,
                ..
            } => (
                "bp_index",
                group_order.clone(),
                label.clone(),
                tau.to_string(),
            ),
            TopologyDto::Kervaire { bp_group, .. } => (
                "kervaire",
                bp_group.clone(),
                self.class_key().expect("kervaire is a sphere").to_string(),
                String::new(),
            ),
        };
        let c = &self.certificate;
        [
            a,
            self.dim.to_string(),
            topology_type.to_string(),
            bp_group,
            label,
            tau,
            c.fano.passes.to_string(),
            c.klt.passes.to_string(),
            c.uniqueness.passes.to_string(),
            c.moduli
                .as_ref()
                .map(|m| m.real_dim.clone())
                .unwrap_or_default(),
        ]
    }
}

impl From<&SearchRecord> for RecordDto {
    fn from(r: &SearchRecord) -> Self {
        RecordDto::new(r.a.entries(), r.dim(), &r.class, &r.certificate)
    }
}

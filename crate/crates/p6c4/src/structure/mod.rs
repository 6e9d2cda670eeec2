//! Hole-neighborhood partitions, blowup matching, and the classifier that
//! turns a (P6,C4)-free graph into a checkable structure certificate.

mod blowup;
mod classify;
mod partition;
mod validate;

pub use blowup::{match_blowup, match_fkl, BaseGraph, BlowupMap};
pub use classify::{assemble_boiler, classify, ClassifyError};
pub use partition::{
    check_c5_partition, check_c6_partition, partition_around_c5, partition_around_c6, C5Partition, C6Partition,
};
pub use validate::{validate_band, validate_belt, validate_blowup, validate_boiler, validate_certificate};

use crate::graph::VertexSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// First failed clause of a definition, with the vertices that break it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub clause: String,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(clause: impl Into<String>, witness: impl IntoIterator<Item = usize>) -> Self {
        Violation { clause: clause.into(), witness: witness.into_iter().collect() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.clause, self.witness)
    }
}

impl std::error::Error for Violation {}

/// Seven-part partition shared by bands and belts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct QrParts {
    pub q1: VertexSet,
    pub q2: VertexSet,
    pub q3: VertexSet,
    pub q4: VertexSet,
    pub q5: VertexSet,
    pub r2: VertexSet,
    pub r3: VertexSet,
}

pub type BandParts = QrParts;
pub type BeltParts = QrParts;

impl QrParts {
    /// Q_i for i in 1..=5.
    pub fn q(&self, i: usize) -> &VertexSet {
        match i {
            1 => &self.q1,
            2 => &self.q2,
            3 => &self.q3,
            4 => &self.q4,
            5 => &self.q5,
            _ => panic!("Q index {i} out of 1..=5"),
        }
    }

    /// R_j for j in {2, 3}.
    pub fn r(&self, j: usize) -> &VertexSet {
        match j {
            2 => &self.r2,
            3 => &self.r3,
            _ => panic!("R index {j} not in {{2,3}}"),
        }
    }

    pub fn named(&self) -> [(&'static str, &VertexSet); 7] {
        [
            ("Q1", &self.q1),
            ("Q2", &self.q2),
            ("Q3", &self.q3),
            ("Q4", &self.q4),
            ("Q5", &self.q5),
            ("R2", &self.r2),
            ("R3", &self.r3),
        ]
    }
}

/// Ordering data for boilers whose L is not a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoilerRefinement {
    /// Universal vertices of G[L].
    pub u: VertexSet,
    /// A-vertices with a neighbor in L.
    pub a_l: VertexSet,
    /// A-vertices with a neighbor in L minus U.
    pub a_l_prime: VertexSet,
    /// 1-based index of the first block some A-vertex misses.
    pub j: usize,
    /// (a, number of leading blocks a is complete to), for every a in A.
    pub prefix: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoilerParts {
    pub q: VertexSet,
    pub a: VertexSet,
    pub b: VertexSet,
    pub l: VertexSet,
    pub m: VertexSet,
    pub k: usize,
    pub m_blocks: Vec<VertexSet>,
    pub b_blocks: Vec<VertexSet>,
    /// A vertex of B_k anticomplete to A, and one of its neighbors in M_k.
    pub b_star: usize,
    pub m_star: usize,
    pub refinement: Option<BoilerRefinement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum CertKind {
    CliqueCutset { cutset: VertexSet, side_a: VertexSet, side_b: VertexSet },
    UniversalVertex { vertex: usize },
    ChordalLeaf { order: Vec<usize> },
    Blowup(BlowupMap),
    Band(BandParts),
    Belt(BeltParts),
    Boiler(BoilerParts),
}

impl CertKind {
    pub fn tag(&self) -> &'static str {
        match self {
            CertKind::CliqueCutset { .. } => "CliqueCutset",
            CertKind::UniversalVertex { .. } => "UniversalVertex",
            CertKind::ChordalLeaf { .. } => "ChordalLeaf",
            CertKind::Blowup(_) => "Blowup",
            CertKind::Band(_) => "Band",
            CertKind::Belt(_) => "Belt",
            CertKind::Boiler(_) => "Boiler",
        }
    }
}

/// Which branch fired, the hole it was built around, and intermediate sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Provenance {
    pub branch: String,
    pub hole: Vec<usize>,
    pub sets: BTreeMap<String, VertexSet>,
}

impl Provenance {
    pub fn branch(name: &str) -> Self {
        Provenance { branch: name.to_string(), ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureCertificate {
    #[serde(flatten)]
    pub kind: CertKind,
    pub provenance: Provenance,
}

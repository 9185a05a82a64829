//! JSON report documents. Schema version 1.
//!
//! Exact numbers (orders above 2^53, rationals, cyclotomics) are strings, so
//! no consumer silently loses precision on the way through a double. Timing
//! data always sits under a key named "timings" and nothing else varies
//! between two runs of the same command.

use serde::Serialize;
use splitcert_core::{
    CentralizerSet, CharCertificate, CharTable, CountBounds, ParityMatrix, PlaceInvariant,
    QuaternionPair, SplitReport, SuiteReport, UncertifiedReason,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct TimingsDoc {
    pub table_ms: u64,
    pub sylow_ms: u64,
    pub total_ms: u64,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateDoc {
    /// Odd multiplicity in a character induced from the Sylow 2-subgroup.
    Induced { sylow_row: usize, multiplicity: i64 },
    /// Odd multiplicity in a product of two already certified characters.
    Tensor { rows: [usize; 2], multiplicity: i64 },
    /// Rational character of a 2-group with indicator +1.
    TwoGroupRational,
    Uncertified {
        reason: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        class_index: Option<usize>,
    },
}

impl From<&CharCertificate> for CertificateDoc {
    fn from(c: &CharCertificate) -> Self {
        match c {
            CharCertificate::Induced {
                sylow_row,
                multiplicity,
            } => CertificateDoc::Induced {
                sylow_row: *sylow_row,
                multiplicity: *multiplicity,
            },
            CharCertificate::Tensor { rows, multiplicity } => CertificateDoc::Tensor {
                rows: [rows.0, rows.1],
                multiplicity: *multiplicity,
            },
            CharCertificate::TwoGroupRational => CertificateDoc::TwoGroupRational,
            CharCertificate::Uncertified { reason } => {
                let class_index = match reason {
                    UncertifiedReason::Irrational { class_index } => Some(*class_index),
                    _ => None,
                };
                CertificateDoc::Uncertified {
                    reason: reason.to_string(),
                    class_index,
                }
            }
        }
    }
}

#[derive(Serialize)]
pub struct SplitReportDoc {
    pub label: String,
    pub order: String,
    pub n_classes: usize,
    pub degrees: Vec<u64>,
    pub all_rational: bool,
    pub sylow_rational_fs_positive: bool,
    pub certified_after_induction: bool,
    pub certified_after_tensor: bool,
    pub fully_certified: bool,
    pub certificates: Vec<CertificateDoc>,
    pub timings: TimingsDoc,
}

impl From<&SplitReport> for SplitReportDoc {
    fn from(r: &SplitReport) -> Self {
        SplitReportDoc {
            label: r.label.clone(),
            order: r.order.to_string(),
            n_classes: r.n_classes,
            degrees: r.degrees.clone(),
            all_rational: r.b1,
            sylow_rational_fs_positive: r.b2,
            certified_after_induction: r.b3,
            certified_after_tensor: r.b4,
            fully_certified: r.fully_certified(),
            certificates: r.certificates.iter().map(CertificateDoc::from).collect(),
            timings: TimingsDoc {
                table_ms: r.timings.table_ms as u64,
                sylow_ms: r.timings.sylow_ms as u64,
                total_ms: r.timings.total_ms as u64,
            },
        }
    }
}

#[derive(Serialize)]
pub struct SuiteMemberDoc {
    pub order: String,
    pub provenance_len: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<SplitReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Serialize)]
pub struct SuiteDoc {
    pub schema_version: u32,
    pub label: String,
    pub ambient_order: String,
    pub n_members: usize,
    pub fully_certified: bool,
    pub members: Vec<SuiteMemberDoc>,
}

impl From<&SuiteReport> for SuiteDoc {
    fn from(s: &SuiteReport) -> Self {
        SuiteDoc {
            schema_version: SCHEMA_VERSION,
            label: s.label.clone(),
            ambient_order: s.ambient_order.to_string(),
            n_members: s.members.len(),
            fully_certified: s.fully_certified(),
            members: s
                .members
                .iter()
                .map(|m| SuiteMemberDoc {
                    order: m.order.to_string(),
                    provenance_len: m.provenance_len,
                    report: m.outcome.as_ref().ok().map(SplitReportDoc::from),
                    error: m.outcome.as_ref().err().map(|e| e.to_string()),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct EnumDoc {
    pub schema_version: u32,
    pub label: String,
    pub ambient_order: String,
    pub n_members: usize,
    pub member_orders: Vec<String>,
    pub member_provenance_lens: Vec<usize>,
}

impl EnumDoc {
    pub fn new(label: &str, set: &CentralizerSet) -> Self {
        EnumDoc {
            schema_version: SCHEMA_VERSION,
            label: label.to_string(),
            ambient_order: set.ambient.order().to_string(),
            n_members: set.members.len(),
            member_orders: set.members.iter().map(|m| m.order().to_string()).collect(),
            member_provenance_lens: set.provenance.iter().map(Vec::len).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SymcheckDoc {
    pub schema_version: u32,
    pub n: u32,
    pub rows: usize,
    pub cols: usize,
    pub sylow_order: String,
    pub every_row_covered: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
}

impl SymcheckDoc {
    pub fn new(m: &ParityMatrix, covered: bool, with_matrix: bool) -> Self {
        SymcheckDoc {
            schema_version: SCHEMA_VERSION,
            n: m.n,
            rows: m.n_rows(),
            cols: m.n_cols(),
            sylow_order: m.sylow_order.to_string(),
            every_row_covered: covered,
            matrix: with_matrix.then(|| {
                m.matrix
                    .iter()
                    .map(|row| row.iter().map(|&x| char::from(b'0' + x)).collect())
                    .collect()
            }),
        }
    }
}

#[derive(Serialize)]
pub struct CountRowDoc {
    pub n: u32,
    pub count: String,
    pub log_c_upper: [String; 2],
    pub log_e_lower: [String; 2],
    pub log_c_upper_approx: f64,
    pub log_e_lower_approx: f64,
    pub log_bound_holds: bool,
    pub crossover_holds: bool,
}

impl From<&CountBounds> for CountRowDoc {
    fn from(b: &CountBounds) -> Self {
        CountRowDoc {
            n: b.n,
            count: b.c_exact.to_string(),
            log_c_upper: [b.log_c_upper.lo.to_string(), b.log_c_upper.hi.to_string()],
            log_e_lower: [b.log_e_lower.lo.to_string(), b.log_e_lower.hi.to_string()],
            log_c_upper_approx: b.log_c_upper.approx(),
            log_e_lower_approx: b.log_e_lower.approx(),
            log_bound_holds: b.log_bound_holds,
            crossover_holds: b.crossover_holds,
        }
    }
}

#[derive(Serialize)]
pub struct CountDoc {
    pub schema_version: u32,
    pub rows: Vec<CountRowDoc>,
}

#[derive(Serialize)]
pub struct InvariantDoc {
    pub place: String,
    pub value: String,
}

#[derive(Serialize)]
pub struct QuaternionDoc {
    pub schema_version: u32,
    pub a: String,
    pub b: String,
    pub invariants: Vec<InvariantDoc>,
}

impl QuaternionDoc {
    pub fn new(pair: &QuaternionPair, invariants: &[PlaceInvariant]) -> Self {
        QuaternionDoc {
            schema_version: SCHEMA_VERSION,
            a: pair.a.to_string(),
            b: pair.b.to_string(),
            invariants: invariants
                .iter()
                .map(|i| InvariantDoc {
                    place: i.place.to_string(),
                    value: i.value.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct TableDoc {
    pub schema_version: u32,
    pub label: String,
    pub order: String,
    pub n_classes: usize,
    pub class_sizes: Vec<u64>,
    pub element_orders: Vec<u64>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<String>>,
    pub from_cache: bool,
}

impl TableDoc {
    pub fn new(label: &str, t: &CharTable, from_cache: bool) -> Self {
        TableDoc {
            schema_version: SCHEMA_VERSION,
            label: label.to_string(),
            order: t.order.to_string(),
            n_classes: t.n_classes(),
            class_sizes: t.class_sizes.clone(),
            element_orders: t.element_orders.clone(),
            degrees: t.degrees(),
            values: t
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
            from_cache,
        }
    }
}

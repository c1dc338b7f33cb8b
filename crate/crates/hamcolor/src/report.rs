//! JSON shapes written by the subcommands. Field names are part of the
//! output format.

use hamcolor_core::coloring::{
    classify_sdb, lower_bound, ColoringCertificate, Verification, Violation, Warning,
};
use hamcolor_core::detour::BlockGraphAnalysis;
use hamcolor_core::families::{Caveat, FamilySpec};
use hamcolor_core::graph::Graph;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson {
    pub u: usize,
    pub v: usize,
    #[serde(rename = "D")]
    pub detour: usize,
    pub required: u64,
    pub actual: u64,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            u: v.u,
            v: v.v,
            detour: v.detour,
            required: v.required,
            actual: v.actual,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionsJson {
    pub thm2: bool,
    pub thm3: bool,
    pub thm4: bool,
    pub star_shaped: bool,
    pub db_half: bool,
    pub branch_count: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WarningJson {
    FewBranches { count: usize },
    NegativeGap { position: usize, gap: i64 },
    Normalized { shift: i64 },
}

impl From<&Warning> for WarningJson {
    fn from(w: &Warning) -> Self {
        match *w {
            Warning::FewBranches { count } => WarningJson::FewBranches { count },
            Warning::NegativeGap { position, gap } => WarningJson::NegativeGap { position, gap },
            Warning::Normalized { shift } => WarningJson::Normalized { shift },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyJson {
    pub spec: FamilySpec,
    pub formula_hc: i64,
    pub caveats: Vec<Caveat>,
    pub agreement: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub n: usize,
    pub omega: usize,
    pub xi: usize,
    pub total_level: usize,
    pub lower_bound: i64,
    pub ordering: Vec<usize>,
    pub colors: Vec<u64>,
    pub span: u64,
    pub valid: bool,
    pub violations: Vec<ViolationJson>,
    pub conditions: ConditionsJson,
    pub warnings: Vec<WarningJson>,
    pub method: String,
    /// Valid with span equal to the lower bound.
    pub optimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyJson>,
}

impl CertificateJson {
    pub fn new(cert: &ColoringCertificate, method: &str) -> Self {
        let c = &cert.conditions;
        CertificateJson {
            n: cert.n,
            omega: cert.omega,
            xi: cert.xi,
            total_level: cert.total_level,
            lower_bound: cert.lower_bound,
            ordering: cert.ordering.clone(),
            colors: cert.colors.clone(),
            span: cert.span,
            valid: cert.valid,
            violations: cert.violations.iter().map(Into::into).collect(),
            conditions: ConditionsJson {
                thm2: c.thm2,
                thm3: c.thm3,
                thm4: c.thm4,
                star_shaped: c.star_shaped,
                db_half: c.db_half,
                branch_count: c.branch_count,
            },
            warnings: cert.warnings.iter().map(Into::into).collect(),
            method: method.to_string(),
            optimal: cert.is_optimal(),
            family: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchJson {
    pub anchor: usize,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationJson {
    pub star_shaped: bool,
    pub db_half: bool,
    pub sdb: bool,
    pub largest_class: usize,
    pub non_central: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisJson {
    pub n: usize,
    pub edges: usize,
    pub blocks: usize,
    pub cut_vertices: Vec<usize>,
    pub center: Vec<usize>,
    pub omega: usize,
    pub xi: usize,
    pub levels: Vec<usize>,
    pub total_level: usize,
    pub detour_diameter: usize,
    pub branch_count: usize,
    pub branches: Vec<BranchJson>,
    pub lower_bound: i64,
    pub classification: ClassificationJson,
    pub warnings: Vec<WarningJson>,
}

impl AnalysisJson {
    pub fn new(graph: &Graph, a: &BlockGraphAnalysis) -> Self {
        let p = &a.profile;
        let class = classify_sdb(p);
        let mut warnings = Vec::new();
        if p.branch_count() < 3 {
            warnings.push(WarningJson::FewBranches {
                count: p.branch_count(),
            });
        }
        AnalysisJson {
            n: graph.order(),
            edges: graph.size(),
            blocks: a.decomposition.blocks().len(),
            cut_vertices: a.decomposition.cut_vertices().to_vec(),
            center: p.center().to_vec(),
            omega: p.omega(),
            xi: p.xi(),
            levels: p.levels().to_vec(),
            total_level: p.total_level(),
            detour_diameter: p.detour_diameter(),
            branch_count: p.branch_count(),
            branches: p
                .branches()
                .iter()
                .map(|b| BranchJson {
                    anchor: b.anchor,
                    size: b.size,
                })
                .collect(),
            lower_bound: lower_bound(p),
            classification: ClassificationJson {
                star_shaped: class.star_shaped,
                db_half: class.db_half,
                sdb: class.sdb,
                largest_class: class.largest_class,
                non_central: class.non_central,
            },
            warnings,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub n: usize,
    pub valid: bool,
    pub span: u64,
    /// Amount subtracted so the smallest color is 0.
    pub shift: i64,
    pub colors: Vec<u64>,
    pub violations: Vec<ViolationJson>,
    /// Absent when the graph is not a block graph.
    pub lower_bound: Option<i64>,
    pub optimal: bool,
}

impl VerdictJson {
    pub fn new(v: &Verification, bound: Option<i64>) -> Self {
        VerdictJson {
            n: v.colors.len(),
            valid: v.is_valid(),
            span: v.span,
            shift: v.shift,
            colors: v.colors.clone(),
            violations: v.violations.iter().map(Into::into).collect(),
            lower_bound: bound,
            optimal: v.is_valid() && bound == Some(v.span as i64),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OracleJson {
    Hc {
        n: usize,
        value: u64,
        witness: Vec<u64>,
        explored: u64,
        lower_bound: Option<i64>,
        max_n: usize,
    },
    Detour {
        n: usize,
        table: Vec<Vec<usize>>,
        /// Whether the block-path detour table agrees; absent for graphs
        /// that are not block graphs.
        block_path_agrees: Option<bool>,
        max_n: usize,
    },
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

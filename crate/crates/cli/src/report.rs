//! Machine-readable report types. Every report serializes polynomials as
//! ascending coefficient lists of exact strings (`"p/q"` or integers), so
//! no JSON number ever rounds a coefficient. Field order is fixed by the
//! struct definitions, which keeps byte-identical output for identical
//! runs.

use serde::Serialize;

use relzero_core::cube::{CubeStatus, CubeVerdict};
use relzero_core::poly::{format_rat, ExactPoly, Rat};
use relzero_core::realroot::{StabilityStatus, StabilityVerdict, VerdictMethod};

pub fn poly_repr(p: &ExactPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rat).collect()
}

pub fn rat_repr(r: &Rat) -> String {
    format_rat(r)
}

#[derive(Serialize)]
pub struct StabilityRepr {
    pub status: String,
    pub method: String,
    pub witness: Option<String>,
}

impl From<&StabilityVerdict> for StabilityRepr {
    fn from(v: &StabilityVerdict) -> Self {
        StabilityRepr {
            status: match v.status {
                StabilityStatus::QuasiStable => "quasi_stable".into(),
                StabilityStatus::Unstable => "unstable".into(),
            },
            method: match v.method {
                VerdictMethod::ExactHermiteBiehler => "exact_hermite_biehler".into(),
                VerdictMethod::ExactSturm => "exact_sturm".into(),
                VerdictMethod::Numeric => "numeric".into(),
            },
            witness: v.witness.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct CubeWitnessRepr {
    pub flip_axes: Vec<usize>,
    pub lambdas: Vec<String>,
    pub rhos: Vec<String>,
    pub polynomial: Vec<String>,
    pub reason: String,
}

#[derive(Serialize)]
pub struct CubeVerdictRepr {
    pub status: String,
    pub exact: bool,
    pub samples_used: usize,
    pub witness: Option<CubeWitnessRepr>,
}

impl From<&CubeVerdict> for CubeVerdictRepr {
    fn from(v: &CubeVerdict) -> Self {
        CubeVerdictRepr {
            status: match v.status {
                CubeStatus::Falsified => "falsified".into(),
                CubeStatus::NotFalsified => "not_falsified".into(),
            },
            exact: v.exact,
            samples_used: v.samples_used,
            witness: v.witness.as_ref().map(|w| CubeWitnessRepr {
                flip_axes: w.flip_axes.clone(),
                lambdas: w.lambdas.iter().map(rat_repr).collect(),
                rhos: w.rhos.iter().map(rat_repr).collect(),
                polynomial: poly_repr(&w.polynomial),
                reason: w.reason.clone(),
            }),
        }
    }
}

#[derive(Serialize)]
pub struct ComputeReport {
    pub command: String,
    pub input: String,
    pub connected: bool,
    pub n: usize,
    pub m: usize,
    pub d: Option<usize>,
    pub r: Vec<String>,
    pub h: Option<Vec<String>>,
    pub j: Option<Vec<String>>,
    pub j_even: Option<Vec<String>>,
    pub j_odd: Option<Vec<String>>,
    pub stability: StabilityRepr,
}

#[derive(Serialize)]
pub struct CheckBcReport {
    pub command: String,
    pub input: String,
    pub kind: String,
    pub degree_bound: usize,
    pub h: Vec<String>,
    pub stability: StabilityRepr,
}

#[derive(Serialize)]
pub struct ClassesRepr {
    pub in_jplus: bool,
    pub in_bc_prime: Option<bool>,
    pub in_bc: StabilityRepr,
}

#[derive(Serialize)]
pub struct InequalityRepr {
    pub d: usize,
    pub sums: Vec<String>,
    pub all_nonnegative: bool,
}

#[derive(Serialize)]
pub struct StructureRepr {
    pub is_complex: bool,
    pub is_matroid: bool,
    pub coloop_free: Option<bool>,
}

#[derive(Serialize)]
pub struct MatroidReport {
    pub command: String,
    pub input: String,
    pub ground: usize,
    pub face_count: usize,
    pub d: usize,
    pub t: usize,
    pub f: Vec<String>,
    pub ftilde: Vec<String>,
    pub h: Vec<String>,
    pub j: Vec<String>,
    pub classes: ClassesRepr,
    pub inequality_sums: InequalityRepr,
    pub structure: StructureRepr,
}

#[derive(Serialize)]
pub struct CubeReport {
    pub command: String,
    pub input: String,
    pub dim: usize,
    pub verdict: CubeVerdictRepr,
}

#[derive(Serialize)]
pub struct ScanConfigRepr {
    pub n_max: usize,
    pub m_max: usize,
    pub mult_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub graph: Option<String>,
    pub pair: Option<[usize; 2]>,
}

#[derive(Serialize)]
pub struct FalsifiedPairRepr {
    pub graph: String,
    pub pair: [usize; 2],
    pub verdict: CubeVerdictRepr,
}

#[derive(Serialize)]
pub struct ScanAmicableReport {
    pub command: String,
    pub config: ScanConfigRepr,
    pub graphs: usize,
    pub pairs: usize,
    pub exact_decisions: usize,
    pub sampled_decisions: usize,
    pub falsified: Vec<FalsifiedPairRepr>,
    pub consequence_failures: Vec<String>,
}

#[derive(Serialize)]
pub struct UnstableInstanceRepr {
    pub graph: String,
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct ScanBcReport {
    pub command: String,
    pub config: ScanConfigRepr,
    pub instances: usize,
    pub unstable: Vec<UnstableInstanceRepr>,
}

#[derive(Serialize)]
pub struct MonteCarloRepr {
    pub q: String,
    pub trials: u64,
    pub seed: u64,
    pub estimate: f64,
    pub std_error: f64,
    pub exact_value: String,
    pub within_three_se: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub command: String,
    pub input: String,
    pub engine: Vec<String>,
    pub brute_force: Vec<String>,
    pub equal: bool,
    pub monte_carlo: Option<MonteCarloRepr>,
}

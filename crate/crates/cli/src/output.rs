use serde::Serialize;
use serde_json::Value;

use boolfourier::conjecture::EquivalencePredicates;
use boolfourier::derivatives::DerivativeDistribution;
use boolfourier::Dyadic;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub payload: Value,
}

impl OutputDocument {
    pub fn new(command: &'static str, payload: impl Serialize) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION,
            command,
            payload: serde_json::to_value(payload).expect("payload serializes"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumEntry {
    pub mask: u32,
    pub subset: Vec<u32>,
    pub coefficient: Dyadic,
}

#[derive(Debug, Serialize)]
pub struct AnalyzePayload {
    pub n: u32,
    pub hex: String,
    pub degree: u32,
    pub linear_sum: Dyadic,
    pub total_influence: Dyadic,
    pub influences: Vec<Dyadic>,
    pub bound_m: Dyadic,
    pub gap: Dyadic,
    pub satisfied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumEntry>>,
}

#[derive(Debug, Serialize)]
pub struct MajPayload {
    pub d: u32,
    pub linear_coefficient: Dyadic,
    pub bound_m: Dyadic,
    pub total_influence: Dyadic,
    pub p_plus_per_coordinate: Dyadic,
    pub derivative_distribution: DerivativeDistribution,
    pub expected_abs_sum: Dyadic,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct DerivativePayload {
    pub n: u32,
    pub hex: String,
    pub i: u32,
    pub counted: DerivativeDistribution,
    pub spectral: DerivativeDistribution,
    pub agree: bool,
    pub linear_coefficient: Dyadic,
    pub expectation: Dyadic,
    pub influence: Dyadic,
}

#[derive(Debug, Serialize)]
pub struct EquivPayload {
    pub n: u32,
    pub hex: String,
    pub d: u32,
    #[serde(flatten)]
    pub predicates: EquivalencePredicates,
}

//! JSON shapes printed by each subcommand. Every type here parses back
//! from its own output.

use alcove_core::affine::AdjacentPair;
use alcove_core::charring::TwistReport;
use alcove_core::klpoly::{deserialize_bigint, serialize_bigint};
use alcove_core::typea::ReflectionWitness;
use alcove_core::{Alcove, DeltaVector, FormalCharacter, LaurentPoly, Partition, Weight};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorResponse {
    pub error: String,
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInfo {
    pub simple_coords: Vec<i64>,
    pub weight: Weight,
    pub coroot_coords: Vec<i64>,
    pub half_norm: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsysResponse {
    pub cartan_type: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub coxeter_number: i64,
    pub rho: Weight,
    pub highest_short_root: Vec<i64>,
    pub weyl_group_order: usize,
    pub positive_roots: Vec<RootInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlcoveResponse {
    pub weight: Weight,
    pub p: i64,
    pub regular: bool,
    pub dominant: bool,
    pub restricted: bool,
    pub in_jantzen_region: bool,
    /// Wall indices, present for regular weights.
    pub walls: Option<Alcove>,
    /// Reduced word of `x` with `x·lambda_0 = weight`.
    pub element: Option<String>,
    pub length: Option<usize>,
    /// `lambda_0`, the representative in the alcove containing `-2rho`.
    pub base: Option<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthResponse {
    pub input: String,
    pub reduced_word: String,
    pub length: usize,
    pub walls: Alcove,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruhatResponse {
    pub y: String,
    pub x: String,
    pub length_y: usize,
    pub length_x: usize,
    pub leq: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlResponse {
    pub y: String,
    pub x: String,
    pub length_y: usize,
    pub length_x: usize,
    pub leq: bool,
    pub polynomial: String,
    pub coefficients: LaurentPoly,
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    pub mu: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharResponse {
    pub weight: Weight,
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    pub dimension: BigInt,
    pub character: FormalCharacter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeResponse {
    pub character: FormalCharacter,
    pub delta_vector: DeltaVector,
    pub rendered: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistResponse {
    pub weight: Weight,
    pub p: i64,
    pub character: FormalCharacter,
    pub delta_vector: DeltaVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcfResponse {
    pub weight: Weight,
    pub p: i64,
    pub element: String,
    pub base: Weight,
    pub delta_vector: DeltaVector,
    pub rendered: String,
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    pub dimension: BigInt,
    /// No negative multiplicity after expansion.
    pub is_character: bool,
    pub character: FormalCharacter,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSweepResponse {
    pub cartan_type: String,
    pub p: i64,
    pub bound: i64,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub within_hypotheses: bool,
    /// Sorted by weight.
    pub failures: Vec<TwistReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacentResponse {
    pub weight: Weight,
    pub generator: String,
    pub adjacent: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathResponse {
    pub weight: Weight,
    pub paths: Vec<Vec<Weight>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairsResponse {
    pub generators: Vec<Weight>,
    pub ideal_size: usize,
    pub pairs: Vec<AdjacentPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviTruncateResponse {
    pub levi: String,
    pub kept: Vec<usize>,
    pub weight: Weight,
    pub omega: Weight,
    pub truncated: FormalCharacter,
    pub levi_character: FormalCharacter,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DonkinResponse {
    pub levi: String,
    pub kept: Vec<usize>,
    pub weight: Weight,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DonkinSweepResponse {
    pub levi: String,
    pub kept: Vec<usize>,
    pub bound: i64,
    pub cases: usize,
    pub failures: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tool", rename_all = "kebab-case")]
pub enum PartitionResponse {
    ToWeight { lambda: Partition, n: usize, type_c: bool, weight: Weight },
    Dominance { lambda: Partition, mu: Partition, leq: bool, geq: bool },
    Dual { lambda: Partition, dual: Partition },
    CosetEq { lambda: Partition, mu: Partition, n: usize, d: usize, type_c: bool, equal: bool },
    Regular { lambda: Partition, n: usize, p: i64, regular: bool },
    Jantzen { lambda: Partition, n: usize, p: i64, in_region: bool },
    Reflect { nu: Partition, omega: Partition, n: usize, p: i64, witness: Option<ReflectionWitness> },
    Split { lambda: Partition, d: usize, head: Partition, tail: Partition },
}

use std::sync::OnceLock;

use num_rational::BigRational;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

const NS_GRAM_JSON: &str = include_str!("../../data/ns_gram.json");
const STRUCTURE_JSON: &str = include_str!("../../data/structure_vectors.json");
const DSQ_JSON: &str = include_str!("../../data/dsq.json");

const NS_GRAM_SHA256: &str = "a4eafb5324b84b2acaec517a68dfccad4e16f826619e36858afed8873c764767";
const STRUCTURE_SHA256: &str = "9f1567f82aa9e9a40bb0ea07a26d07a43825c0907dbc6e7eed7de84134fca191";
const DSQ_SHA256: &str = "b8e8944de3ae8c3d2a94ef6392f5b2f62a8aa8b1f1f3b5b69936d162ab39cd0a";

pub const RANK: usize = 20;

fn sha256_hex(s: &str) -> String {
    Sha256::digest(s.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn checked<'a>(name: &str, text: &'a str, sum: &str) -> Result<&'a str> {
    let got = sha256_hex(text);
    if got != sum {
        return Err(Error::Integrity(format!("{name}: sha256 {got}, expected {sum}")));
    }
    Ok(text)
}

/// One basis element `Dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct BasisLabel {
    pub name: String,
    /// `conic`, `exceptional`, `section O`, ..., `fiber`.
    pub kind: String,
    pub description: String,
}

impl BasisLabel {
    pub fn is_exceptional(&self) -> bool {
        self.kind == "exceptional"
    }
}

/// The basis `D₁..D₂₀` and its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSBasis {
    pub labels: Vec<BasisLabel>,
    pub gram: [[i64; RANK]; RANK],
}

#[derive(Deserialize)]
struct RawGram {
    labels: Vec<BasisLabel>,
    gram: Vec<Vec<i64>>,
}

/// The vectors `C₁..C₄` and the degree functional `(H·Dᵢ)ᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct StructureVectors {
    #[serde(rename = "C1")]
    pub c1: [i64; RANK],
    #[serde(rename = "C2")]
    pub c2: [i64; RANK],
    #[serde(rename = "C3")]
    pub c3: [i64; RANK],
    #[serde(rename = "C4")]
    pub c4: [i64; RANK],
    pub degree_functional: [i64; RANK],
}

impl StructureVectors {
    pub fn cs(&self) -> [&[i64; RANK]; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c4]
    }
}

/// One linear form `vⱼ = Σ mᵢ·coeffᵢ + k·kcoeff`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct DsqForm {
    pub m: [i64; RANK],
    pub k: i64,
}

/// `Σ wⱼ vⱼ² = 112(3 − 3g_a + k²)` for classes of degree `2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsqData {
    pub v: Vec<DsqForm>,
    pub weights: Vec<BigRational>,
}

#[derive(Deserialize)]
struct RawDsq {
    v: Vec<DsqForm>,
    weights: Vec<String>,
}

fn parse_gram() -> Result<NSBasis> {
    let text = checked("ns_gram.json", NS_GRAM_JSON, NS_GRAM_SHA256)?;
    let raw: RawGram = serde_json::from_str(text).map_err(|e| Error::Integrity(e.to_string()))?;
    if raw.labels.len() != RANK || raw.gram.len() != RANK || raw.gram.iter().any(|r| r.len() != RANK) {
        return Err(Error::Integrity("ns_gram.json: expected 20 labels and a 20x20 matrix".into()));
    }
    let mut gram = [[0i64; RANK]; RANK];
    for (i, row) in raw.gram.iter().enumerate() {
        gram[i].copy_from_slice(row);
    }
    for i in 0..RANK {
        for j in 0..RANK {
            if gram[i][j] != gram[j][i] {
                return Err(Error::Integrity(format!("Gram not symmetric at D{}.D{}", i + 1, j + 1)));
            }
        }
        let want = if i == RANK - 1 { 0 } else { -2 };
        if gram[i][i] != want {
            return Err(Error::Integrity(format!("D{}^2 = {}, expected {want}", i + 1, gram[i][i])));
        }
    }
    Ok(NSBasis { labels: raw.labels, gram })
}

fn parse_structure() -> Result<StructureVectors> {
    let text = checked("structure_vectors.json", STRUCTURE_JSON, STRUCTURE_SHA256)?;
    serde_json::from_str(text).map_err(|e| Error::Integrity(e.to_string()))
}

fn parse_dsq() -> Result<DsqData> {
    let text = checked("dsq.json", DSQ_JSON, DSQ_SHA256)?;
    let raw: RawDsq = serde_json::from_str(text).map_err(|e| Error::Integrity(e.to_string()))?;
    let weights = raw
        .weights
        .iter()
        .map(|w| w.parse::<BigRational>().map_err(|e| Error::Integrity(format!("weight {w}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    if raw.v.len() != RANK - 1 || weights.len() != RANK - 1 {
        return Err(Error::Integrity("dsq.json: expected 19 forms and weights".into()));
    }
    Ok(DsqData { v: raw.v, weights })
}

/// The checked-in basis and Gram matrix (parsed once).
pub fn ns_basis() -> Result<&'static NSBasis> {
    static CELL: OnceLock<Result<NSBasis>> = OnceLock::new();
    CELL.get_or_init(parse_gram).as_ref().map_err(Clone::clone)
}

pub fn structure_vectors() -> Result<&'static StructureVectors> {
    static CELL: OnceLock<Result<StructureVectors>> = OnceLock::new();
    CELL.get_or_init(parse_structure).as_ref().map_err(Clone::clone)
}

pub fn dsq_data() -> Result<&'static DsqData> {
    static CELL: OnceLock<Result<DsqData>> = OnceLock::new();
    CELL.get_or_init(parse_dsq).as_ref().map_err(Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn files_load() {
        let b = ns_basis().unwrap();
        assert_eq!(b.labels[19].kind, "fiber");
        assert_eq!(b.gram[2][19], 1);
        assert_eq!(b.labels.iter().filter(|l| l.is_exceptional()).count(), 7);
        assert_eq!(structure_vectors().unwrap().degree_functional[19], 4);
        assert_eq!(dsq_data().unwrap().weights[3], "4/11".parse().unwrap());
    }

    #[test]
    fn tampering_is_detected() {
        let bad = NS_GRAM_JSON.replacen("-2", "-3", 1);
        assert!(matches!(checked("x", &bad, NS_GRAM_SHA256), Err(Error::Integrity(_))));
    }
}

//! The reference listing of the bijection for `n = 3`, stored as data.

use serde::Deserialize;

use crate::bitableau::StandardBitableau;
use crate::correspondence::CorrespondencePair;
use crate::signed_perm::SignedPermutation;

const GOLDEN_N3: &str = include_str!("../data/golden_n3.json");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenEntry {
    pub word: SignedPermutation,
    pub pair: CorrespondencePair,
}

#[derive(Deserialize)]
struct RawEntry {
    word: String,
    #[serde(rename = "T")]
    t: StandardBitableau,
    #[serde(rename = "R")]
    r: StandardBitableau,
}

/// All 48 entries, in listing order.
pub fn golden_n3() -> Vec<GoldenEntry> {
    let raw: Vec<RawEntry> = serde_json::from_str(GOLDEN_N3).expect("embedded table parses");
    raw.into_iter()
        .map(|e| GoldenEntry {
            word: e.word.parse().expect("embedded word parses"),
            pair: CorrespondencePair::new(e.t, e.r).expect("embedded pair has equal shapes"),
        })
        .collect()
}

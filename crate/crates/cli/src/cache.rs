//! On-disk character table cache.
//!
//! Entries are keyed by a canonical fingerprint of the group: the type
//! label, the permutation degree, the sorted generator image arrays, and the
//! order. Two constructions of abstractly equal groups on different domains
//! get different keys and never share an entry.
//!
//! A loaded entry is re-verified (both orthogonality relations) before it is
//! believed. Corrupt or stale entries are dropped and the table is
//! recomputed. Writes go to a temp file first and are renamed into place.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use splitcert_core::{CharTable, Cyclotomic, PermGroup, Permutation};

pub const ENGINE_VERSION: u32 = 1;
pub const CACHE_DIR_VAR: &str = "SPLITCERT_CACHE_DIR";

pub fn cache_dir() -> PathBuf {
    match std::env::var_os(CACHE_DIR_VAR) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir),
        _ => PathBuf::from("splitcert-cache"),
    }
}

/// Canonical fingerprint of a labeled permutation group.
pub fn table_key(label: &str, group: &PermGroup) -> String {
    let mut hasher = Sha256::new();
    hasher.update(label.as_bytes());
    hasher.update([0]);
    hasher.update(group.degree().to_le_bytes());
    hasher.update(group.order().to_le_bytes());
    let mut gens: Vec<&[u16]> = group.generators().iter().map(|g| g.images()).collect();
    gens.sort();
    for g in gens {
        for &img in g {
            hasher.update(img.to_le_bytes());
        }
        hasher.update([1]);
    }
    hex::encode(&hasher.finalize()[..16])
}

#[derive(Serialize, Deserialize)]
struct ValueDoc {
    conductor: u32,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    engine_version: u32,
    fingerprint: String,
    degree: usize,
    order: String,
    exponent: u64,
    class_reps: Vec<Vec<u16>>,
    class_sizes: Vec<u64>,
    element_orders: Vec<u64>,
    power_rows: Vec<Vec<u32>>,
    values: Vec<Vec<ValueDoc>>,
}

fn encode_value(v: &Cyclotomic) -> ValueDoc {
    ValueDoc {
        conductor: v.conductor(),
        coeffs: v.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

fn decode_value(doc: &ValueDoc) -> Option<Cyclotomic> {
    let mut terms = Vec::with_capacity(doc.coeffs.len());
    for (i, c) in doc.coeffs.iter().enumerate() {
        let coeff: BigRational = c.parse().ok()?;
        terms.push((i as u64, coeff));
    }
    Cyclotomic::root_combination(doc.conductor, &terms).ok()
}

fn entry_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

pub fn store(dir: &Path, key: &str, table: &CharTable) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let entry = CacheEntry {
        engine_version: ENGINE_VERSION,
        fingerprint: key.to_string(),
        degree: table.degree,
        order: table.order.to_string(),
        exponent: table.exponent,
        class_reps: table
            .class_reps
            .iter()
            .map(|r| r.images().to_vec())
            .collect(),
        class_sizes: table.class_sizes.clone(),
        element_orders: table.element_orders.clone(),
        power_rows: table.power_rows.clone(),
        values: table
            .values
            .iter()
            .map(|row| row.iter().map(encode_value).collect())
            .collect(),
    };
    let body = serde_json::to_vec(&entry)?;
    let tmp = dir.join(format!("{key}.tmp.{}", std::process::id()));
    fs::write(&tmp, body)?;
    fs::rename(&tmp, entry_path(dir, key))
}

/// A verified table from the cache, or None (missing, stale, corrupt, or
/// failing re-verification).
pub fn load(dir: &Path, key: &str) -> Option<CharTable> {
    let body = fs::read(entry_path(dir, key)).ok()?;
    let entry: CacheEntry = serde_json::from_slice(&body).ok()?;
    if entry.engine_version != ENGINE_VERSION || entry.fingerprint != key {
        return None;
    }
    let class_reps: Option<Vec<Permutation>> = entry
        .class_reps
        .iter()
        .map(|im| Permutation::from_images(im.clone()).ok())
        .collect();
    let values: Option<Vec<Vec<Cyclotomic>>> = entry
        .values
        .iter()
        .map(|row| row.iter().map(decode_value).collect())
        .collect();
    let table = CharTable {
        degree: entry.degree,
        order: entry.order.parse().ok()?,
        exponent: entry.exponent,
        class_reps: class_reps?,
        class_sizes: entry.class_sizes,
        element_orders: entry.element_orders,
        power_rows: entry.power_rows,
        values: values?,
    };
    table.verify().ok()?;
    Some(table)
}

//! On-disk JSON formats. All adapters round-trip exactly: `parse(render(x)) = x`.
//!
//! - Cayley table: `{"n": N, "table": [[row0...], ...]}`, row-major,
//!   entries 0-based element indices.
//! - Permutation: `{"n": N, "image": [...]}` (right action, `x -> image[x]`).
//! - Permutation group: `{"n": N, "elements": [[...], ...]}` in canonical
//!   (lexicographic) order.
//! - Isotopy key: `{"n": N, "alpha": [...], "beta": [...], "psi": [...]}`.
//! - Key bundle (versioned, `"v": 1`): params, group factors, `y`, key.
//! - Cipher envelope (versioned, `"v": 1`): alphabet, byte length, symbols.
//!
//! Parsing validates structure: tables must be well formed, permutations
//! bijective, groups closed, keys automorphism-valid for the bundle's table.

use crate::algebra::{AlgebraError, CayleyTable};
use crate::crypto::{CipherEnvelope, CryptoError, KeyBundle};
use crate::isotopy::{IsotopyError, IsotopyKey};
use crate::keedwell::{AbelianGroupSpec, KeedwellError, KeedwellParams};
use crate::morphism::{MorphError, PermGroup, Permutation};
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Error, Debug)]
pub enum FileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format version {found} (expected {FORMAT_VERSION})")]
    BadVersion { found: u32 },
    #[error("declared order {declared} does not match payload of length {actual}")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("stored keedwell parameters are inconsistent: {field} should be {expected}")]
    ParamsMismatch {
        field: &'static str,
        expected: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Keedwell(#[from] KeedwellError),
    #[error(transparent)]
    Isotopy(#[from] IsotopyError),
    #[error(transparent)]
    Crypto(#[from] CryptoError),
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    n: usize,
    table: Vec<Vec<usize>>,
}

pub fn table_to_json(t: &CayleyTable) -> String {
    render(&TableFile {
        n: t.order(),
        table: t.rows(),
    })
}

pub fn table_from_json(s: &str) -> Result<CayleyTable, FileError> {
    let f: TableFile = serde_json::from_str(s)?;
    if f.table.len() != f.n {
        return Err(FileError::OrderMismatch {
            declared: f.n,
            actual: f.table.len(),
        });
    }
    Ok(CayleyTable::from_rows(f.table)?)
}

#[derive(Serialize, Deserialize)]
struct PermFile {
    n: usize,
    image: Vec<usize>,
}

pub fn permutation_to_json(p: &Permutation) -> String {
    render(&PermFile {
        n: p.degree(),
        image: p.image().to_vec(),
    })
}

pub fn permutation_from_json(s: &str) -> Result<Permutation, FileError> {
    let f: PermFile = serde_json::from_str(s)?;
    if f.image.len() != f.n {
        return Err(FileError::OrderMismatch {
            declared: f.n,
            actual: f.image.len(),
        });
    }
    Ok(Permutation::from_image(f.image)?)
}

#[derive(Serialize, Deserialize)]
struct GroupFile {
    n: usize,
    elements: Vec<Vec<usize>>,
}

pub fn perm_group_to_json(g: &PermGroup) -> String {
    render(&GroupFile {
        n: g.degree(),
        elements: g.iter().map(|p| p.image().to_vec()).collect(),
    })
}

pub fn perm_group_from_json(s: &str) -> Result<PermGroup, FileError> {
    let f: GroupFile = serde_json::from_str(s)?;
    let elems = f
        .elements
        .into_iter()
        .map(Permutation::from_image)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::from_elements(f.n, elems)?)
}

#[derive(Serialize, Deserialize)]
struct IsotopyKeyFile {
    n: usize,
    alpha: Vec<usize>,
    beta: Vec<usize>,
    psi: Vec<usize>,
}

pub fn isotopy_key_to_json(key: &IsotopyKey) -> String {
    render(&IsotopyKeyFile {
        n: key.degree(),
        alpha: key.alpha().image().to_vec(),
        beta: key.beta().image().to_vec(),
        psi: key.psi().image().to_vec(),
    })
}

/// Parses a key and validates `alpha`, `beta` as automorphisms of `u`.
pub fn isotopy_key_from_json(s: &str, u: &CayleyTable) -> Result<IsotopyKey, FileError> {
    let f: IsotopyKeyFile = serde_json::from_str(s)?;
    let alpha = Permutation::from_image(f.alpha)?;
    let beta = Permutation::from_image(f.beta)?;
    let psi = Permutation::from_image(f.psi)?;
    for p in [&alpha, &beta, &psi] {
        if p.degree() != f.n {
            return Err(FileError::OrderMismatch {
                declared: f.n,
                actual: p.degree(),
            });
        }
    }
    Ok(IsotopyKey::for_table(alpha, beta, psi, u)?)
}

#[derive(Serialize, Deserialize)]
struct BundleFile {
    v: u32,
    params: KeedwellParams,
    group: AbelianGroupSpec,
    y: usize,
    key: BundleKeyPart,
}

#[derive(Serialize, Deserialize)]
struct BundleKeyPart {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    psi: Vec<usize>,
}

pub fn bundle_to_json(b: &KeyBundle) -> String {
    render(&BundleFile {
        v: FORMAT_VERSION,
        params: *b.params(),
        group: b.group().clone(),
        y: b.y(),
        key: BundleKeyPart {
            alpha: b.isokey().alpha().image().to_vec(),
            beta: b.isokey().beta().image().to_vec(),
            psi: b.isokey().psi().image().to_vec(),
        },
    })
}

pub fn bundle_from_json(s: &str) -> Result<KeyBundle, FileError> {
    let f: BundleFile = serde_json::from_str(s)?;
    if f.v != FORMAT_VERSION {
        return Err(FileError::BadVersion { found: f.v });
    }
    let params = KeedwellParams::new(f.params.n, f.params.r, f.params.s)?;
    // u and the flag are derived data; a stored value that disagrees with
    // (n, r, s) marks a corrupted or hand-edited bundle
    if f.params.u != params.u {
        return Err(FileError::ParamsMismatch {
            field: "u",
            expected: params.u,
        });
    }
    if f.params.nonunipotent != params.nonunipotent {
        return Err(FileError::ParamsMismatch {
            field: "nonunipotent",
            expected: params.nonunipotent as usize,
        });
    }
    let g = crate::keedwell::build_abelian_group(&f.group)?;
    let u = crate::keedwell::keedwell_table(&g, params.r, params.s)?;
    let key = IsotopyKey::for_table(
        Permutation::from_image(f.key.alpha)?,
        Permutation::from_image(f.key.beta)?,
        Permutation::from_image(f.key.psi)?,
        &u,
    )?;
    Ok(KeyBundle::new(params, f.group, f.y, key)?)
}

#[derive(Serialize, Deserialize)]
struct EnvelopeFile {
    v: u32,
    n: usize,
    byte_length: usize,
    symbols: Vec<usize>,
}

pub fn envelope_to_json(e: &CipherEnvelope) -> String {
    render(&EnvelopeFile {
        v: FORMAT_VERSION,
        n: e.n,
        byte_length: e.byte_length,
        symbols: e.symbols.clone(),
    })
}

pub fn envelope_from_json(s: &str) -> Result<CipherEnvelope, FileError> {
    let f: EnvelopeFile = serde_json::from_str(s)?;
    if f.v != FORMAT_VERSION {
        return Err(FileError::BadVersion { found: f.v });
    }
    Ok(CipherEnvelope {
        n: f.n,
        byte_length: f.byte_length,
        symbols: f.symbols,
    })
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn load_table(path: &Path) -> Result<CayleyTable, FileError> {
    table_from_json(&std::fs::read_to_string(path)?)
}

pub fn save_table(path: &Path, t: &CayleyTable) -> Result<(), FileError> {
    Ok(std::fs::write(path, table_to_json(t))?)
}

pub fn load_bundle(path: &Path) -> Result<KeyBundle, FileError> {
    bundle_from_json(&std::fs::read_to_string(path)?)
}

pub fn save_bundle(path: &Path, b: &KeyBundle) -> Result<(), FileError> {
    Ok(std::fs::write(path, bundle_to_json(b))?)
}

pub fn load_envelope(path: &Path) -> Result<CipherEnvelope, FileError> {
    envelope_from_json(&std::fs::read_to_string(path)?)
}

pub fn save_envelope(path: &Path, e: &CipherEnvelope) -> Result<(), FileError> {
    Ok(std::fs::write(path, envelope_to_json(e))?)
}

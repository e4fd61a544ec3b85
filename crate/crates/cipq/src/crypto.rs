//! The two-layer quasigroup cipher: bytes are coded as a base-n symbol
//! stream, enciphered in the Keedwell CIPQ by left multiplication with a
//! secret element, then transported into the isotope `V` by the derived
//! map `delta` (the product-carrying component of the `U -> V` isotopism,
//! so enciphering in `U` then transporting equals enciphering in `V` with
//! transported keys). Decryption pulls back with `delta^-1` and applies
//! `U`'s crossed inverse.
//!
//! This demonstrates the algebraic mechanism only; nothing here is a
//! security claim.

use crate::algebra::{AlgebraError, CayleyTable};
use crate::isotopy::{derive_maps, DerivedMaps, IsotopyError, IsotopyKey};
use crate::keedwell::{
    build_abelian_group, keedwell_table, AbelianGroupSpec, KeedwellError, KeedwellParams,
};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum CryptoError {
    #[error("alphabet size {n} is too small (need at least 2)")]
    AlphabetTooSmall { n: usize },
    #[error("symbol {symbol} at position {index} is out of range for alphabet {n}")]
    SymbolOutOfRange {
        index: usize,
        symbol: usize,
        n: usize,
    },
    #[error("envelope alphabet {envelope} does not match bundle alphabet {bundle}")]
    AlphabetMismatch { envelope: usize, bundle: usize },
    #[error("envelope carries {found} symbols but byte length {byte_length} requires {expected}")]
    SymbolCountMismatch {
        found: usize,
        expected: usize,
        byte_length: usize,
    },
    #[error("symbol stream decodes to a value wider than {byte_length} bytes")]
    ValueOutOfRange { byte_length: usize },
    #[error("layer-1 key {y} is out of range for order {n}")]
    KeyOutOfRange { y: usize, n: usize },
    #[error("bundle order mismatch: params say {params_n}, group has order {group_order}")]
    BundleOrderMismatch { params_n: usize, group_order: usize },
    #[error("isotopy key degree {degree} does not match order {n}")]
    KeyDegreeMismatch { degree: usize, n: usize },
    #[error("table has no crossed inverse; cannot decrypt")]
    NoCrossedInverse,
    #[error(transparent)]
    Keedwell(#[from] KeedwellError),
    #[error(transparent)]
    Isotopy(#[from] IsotopyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Symbols needed for a `byte_len`-byte payload in base `n`:
/// the smallest `k` with `n^k >= 256^byte_len`, i.e.
/// `ceil(byte_len * log 256 / log n)`.
pub fn symbol_count(n: usize, byte_len: usize) -> usize {
    if byte_len == 0 {
        return 0;
    }
    ((byte_len * 8) as f64 / (n as f64).log2()).ceil() as usize
}

/// Big-endian base-256 payload to base-`n` digits, most significant first,
/// zero-padded to the fixed count [`symbol_count`]. Empty input gives an
/// empty stream.
pub fn encode_bytes(data: &[u8], n: usize) -> Result<Vec<usize>, CryptoError> {
    if n < 2 {
        return Err(CryptoError::AlphabetTooSmall { n });
    }
    if data.is_empty() {
        return Ok(Vec::new());
    }
    let k = symbol_count(n, data.len());
    let digits = BigUint::from_bytes_be(data).to_radix_be(n as u32);
    assert!(
        digits.len() <= k,
        "fixed symbol count must cover every payload"
    );
    let mut out = vec![0usize; k - digits.len()];
    out.extend(digits.iter().map(|&d| d as usize));
    Ok(out)
}

/// Inverts [`encode_bytes`] given the original byte length.
pub fn decode_symbols(
    symbols: &[usize],
    n: usize,
    byte_length: usize,
) -> Result<Vec<u8>, CryptoError> {
    if n < 2 {
        return Err(CryptoError::AlphabetTooSmall { n });
    }
    let expected = symbol_count(n, byte_length);
    if symbols.len() != expected {
        return Err(CryptoError::SymbolCountMismatch {
            found: symbols.len(),
            expected,
            byte_length,
        });
    }
    if byte_length == 0 {
        return Ok(Vec::new());
    }
    let mut digits = Vec::with_capacity(symbols.len());
    for (index, &symbol) in symbols.iter().enumerate() {
        if symbol >= n {
            return Err(CryptoError::SymbolOutOfRange { index, symbol, n });
        }
        digits.push(symbol as u8);
    }
    let value = BigUint::from_radix_be(&digits, n as u32).expect("digits are in range");
    // for zero this is a single 0x00 byte, which pads correctly below
    let bytes = value.to_bytes_be();
    if bytes.len() > byte_length {
        return Err(CryptoError::ValueOutOfRange { byte_length });
    }
    let mut out = vec![0u8; byte_length - bytes.len()];
    out.extend_from_slice(&bytes);
    Ok(out)
}

/// Layer 1: `c_i = y . m_i` (left multiplication by the secret element).
pub fn encrypt_layer1(u: &CayleyTable, y: usize, m: &[usize]) -> Result<Vec<usize>, CryptoError> {
    let n = u.order();
    if y >= n {
        return Err(CryptoError::KeyOutOfRange { y, n });
    }
    m.iter()
        .enumerate()
        .map(|(index, &symbol)| {
            if symbol >= n {
                Err(CryptoError::SymbolOutOfRange { index, symbol, n })
            } else {
                Ok(u.get(y, symbol))
            }
        })
        .collect()
}

/// Layer 1 inverse via the cross inverse property:
/// `(y . m) . y^rho = m`, so `m_i = c_i . (y J_rho)`.
pub fn decrypt_layer1(u: &CayleyTable, y: usize, c: &[usize]) -> Result<Vec<usize>, CryptoError> {
    let n = u.order();
    if y >= n {
        return Err(CryptoError::KeyOutOfRange { y, n });
    }
    let maps = u.inverse_maps().ok_or(CryptoError::NoCrossedInverse)?;
    let y_rho = maps.j_rho.apply(y);
    c.iter()
        .enumerate()
        .map(|(index, &symbol)| {
            if symbol >= n {
                Err(CryptoError::SymbolOutOfRange { index, symbol, n })
            } else {
                Ok(u.get(symbol, y_rho))
            }
        })
        .collect()
}

/// Layer 2: transport each symbol by `delta`.
pub fn encrypt_layer2(c: &[usize], maps: &DerivedMaps) -> Result<Vec<usize>, CryptoError> {
    apply_map(c, &maps.delta)
}

/// Layer 2 inverse: `delta^-1`.
pub fn decrypt_layer2(c: &[usize], maps: &DerivedMaps) -> Result<Vec<usize>, CryptoError> {
    apply_map(c, &maps.delta.inverse())
}

fn apply_map(c: &[usize], p: &crate::morphism::Permutation) -> Result<Vec<usize>, CryptoError> {
    let n = p.degree();
    c.iter()
        .enumerate()
        .map(|(index, &symbol)| {
            if symbol >= n {
                Err(CryptoError::SymbolOutOfRange { index, symbol, n })
            } else {
                Ok(p.apply(symbol))
            }
        })
        .collect()
}

/// Everything the two layers need: Keedwell parameters, the base group,
/// the layer-1 element `y`, and the isotopy key. Derived maps are always
/// recomputed; the key triple is the single source of truth.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KeyBundle {
    params: KeedwellParams,
    group: AbelianGroupSpec,
    y: usize,
    isokey: IsotopyKey,
}

impl KeyBundle {
    pub fn new(
        params: KeedwellParams,
        group: AbelianGroupSpec,
        y: usize,
        isokey: IsotopyKey,
    ) -> Result<Self, CryptoError> {
        let n = group.order();
        if params.n != n {
            return Err(CryptoError::BundleOrderMismatch {
                params_n: params.n,
                group_order: n,
            });
        }
        if y >= n {
            return Err(CryptoError::KeyOutOfRange { y, n });
        }
        if isokey.degree() != n {
            return Err(CryptoError::KeyDegreeMismatch {
                degree: isokey.degree(),
                n,
            });
        }
        Ok(KeyBundle {
            params,
            group,
            y,
            isokey,
        })
    }

    pub fn params(&self) -> &KeedwellParams {
        &self.params
    }

    pub fn group(&self) -> &AbelianGroupSpec {
        &self.group
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn isokey(&self) -> &IsotopyKey {
        &self.isokey
    }

    pub fn alphabet(&self) -> usize {
        self.params.n
    }

    /// Rebuilds the Keedwell table `U` from the stored spec.
    pub fn table(&self) -> Result<CayleyTable, CryptoError> {
        let g = build_abelian_group(&self.group)?;
        Ok(keedwell_table(&g, self.params.r, self.params.s)?)
    }
}

/// The transmitted object: alphabet size, original byte length, and the
/// layer-2 symbol stream.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CipherEnvelope {
    pub n: usize,
    pub byte_length: usize,
    pub symbols: Vec<usize>,
}

/// encode -> layer 1 -> layer 2.
pub fn encrypt(bundle: &KeyBundle, data: &[u8]) -> Result<CipherEnvelope, CryptoError> {
    let n = bundle.alphabet();
    let u = bundle.table()?;
    let m = encode_bytes(data, n)?;
    let c1 = encrypt_layer1(&u, bundle.y(), &m)?;
    let maps = derive_maps(bundle.isokey());
    let symbols = encrypt_layer2(&c1, &maps)?;
    Ok(CipherEnvelope {
        n,
        byte_length: data.len(),
        symbols,
    })
}

/// The exact mirror of [`encrypt`].
pub fn decrypt(bundle: &KeyBundle, envelope: &CipherEnvelope) -> Result<Vec<u8>, CryptoError> {
    let n = bundle.alphabet();
    if envelope.n != n {
        return Err(CryptoError::AlphabetMismatch {
            envelope: envelope.n,
            bundle: n,
        });
    }
    let expected = symbol_count(n, envelope.byte_length);
    if envelope.symbols.len() != expected {
        return Err(CryptoError::SymbolCountMismatch {
            found: envelope.symbols.len(),
            expected,
            byte_length: envelope.byte_length,
        });
    }
    let u = bundle.table()?;
    let maps = derive_maps(bundle.isokey());
    let c1 = decrypt_layer2(&envelope.symbols, &maps)?;
    let m = decrypt_layer1(&u, bundle.y(), &c1)?;
    decode_symbols(&m, n, envelope.byte_length)
}

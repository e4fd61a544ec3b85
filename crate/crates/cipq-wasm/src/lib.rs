//! Wasm bindings for the browser demo. Each export takes plain numbers and
//! strings and returns a JSON string the page renders; invalid inputs come
//! back as `{"error": "..."}` rather than exceptions.

use cipq::algebra::{CayleyTable, Property};
use cipq::crypto;
use cipq::isotopy::{build_isotope, derive_maps, verify_relation, IsotopyKey};
use cipq::keedwell::{find_params, keedwell_table, KeedwellParams};
use cipq::morphism::{automorphism_group, PermGroup, Permutation};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Tiny deterministic generator so demos are reproducible from a seed and
/// the wasm build needs no entropy source.
struct SplitMix(u64);

impl SplitMix {
    fn new(seed: u64) -> Self {
        SplitMix(seed.wrapping_add(0x9E3779B97F4A7C15))
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn shuffle(&mut self, n: usize) -> Permutation {
        let mut image: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            image.swap(i, self.below(i + 1));
        }
        Permutation::from_image(image).expect("shuffled range")
    }
}

fn err(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn pick_params(n: usize, r: usize, s: usize) -> Result<KeedwellParams, String> {
    if !(2..=26).contains(&n) {
        return Err("order must be between 2 and 26 for the demo".into());
    }
    if r == 0 && s == 0 {
        find_params(n, true)
            .into_iter()
            .chain(find_params(n, false))
            .next()
            .ok_or(format!(
                "n + 1 = {} is prime; no Keedwell parameters exist",
                n + 1
            ))
    } else {
        KeedwellParams::new(n, r, s).map_err(|e| e.to_string())
    }
}

fn build(n: usize, r: usize, s: usize) -> Result<(KeedwellParams, CayleyTable), String> {
    let params = pick_params(n, r, s)?;
    let table = keedwell_table(&cipq::corpus::cyclic_group(n), params.r, params.s)
        .map_err(|e| e.to_string())?;
    Ok((params, table))
}

fn table_rows(t: &CayleyTable) -> serde_json::Value {
    json!(t.rows())
}

/// Build the Keedwell table for `n` (and optional exponents; pass 0,0 to
/// auto-pick) and report its structure: properties, crossed-inverse map,
/// inverse-cycle decomposition, automorphism count.
#[wasm_bindgen]
pub fn keedwell_explore(n: usize, r: usize, s: usize) -> String {
    let (params, table) = match build(n, r, s) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    let maps = table.inverse_maps();
    let j_rho: Option<Vec<usize>> = maps.as_ref().map(|m| m.j_rho.image().to_vec());
    let cycles = maps.as_ref().map(|m| {
        let mut seen = vec![false; n];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut x = m.j_rho.apply(start);
            while x != start {
                seen[x] = true;
                orbit.push(x);
                x = m.j_rho.apply(x);
            }
            cycles.push(orbit);
        }
        cycles
    });
    let aut_order = if n <= 12 {
        automorphism_group(&table).ok().map(|g| g.len())
    } else {
        None
    };
    json!({
        "params": params,
        "table": table_rows(&table),
        "properties": {
            "latin": table.is_latin(),
            "cip": table.predicate(Property::Cip).holds(),
            "unipotent": table.predicate(Property::Unipotent).holds(),
            "commutative": table.predicate(Property::Commutative).holds(),
            "flexible": table.predicate(Property::Flexible).holds(),
        },
        "j_rho": j_rho,
        "inverse_cycles": cycles,
        "aut_order": aut_order,
    })
    .to_string()
}

fn sample_key(seed: u64, n: usize, aum: &PermGroup, mode: usize) -> IsotopyKey {
    let mut rng = SplitMix::new(seed);
    let beta = aum.elements()[rng.below(aum.len())].clone();
    let alpha = if rng.below(2) == 0 {
        Permutation::identity(n)
    } else {
        aum.elements()[rng.below(aum.len())].clone()
    };
    let psi = match mode {
        // identity, scaling-style (an automorphism), or a full shuffle
        0 => Permutation::identity(n),
        1 => aum.elements()[rng.below(aum.len())].clone(),
        _ => rng.shuffle(n),
    };
    IsotopyKey::new(alpha, beta, psi, aum).expect("sampled from the group")
}

/// Build `U`, sample a key `(alpha, beta, psi)` from the seed
/// (`psi_mode`: 0 identity, 1 automorphism, 2 random shuffle), and build
/// the isotope `V` with its derived maps and property report.
#[wasm_bindgen]
pub fn isotope_explore(n: usize, r: usize, s: usize, seed: u64, psi_mode: usize) -> String {
    let (params, u) = match build(n, r, s) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    if n > 12 {
        return err("isotope demo needs order <= 12 for automorphism enumeration");
    }
    let aum = match automorphism_group(&u) {
        Ok(g) => g,
        Err(e) => return err(e),
    };
    let key = sample_key(seed, n, &aum, psi_mode);
    let v = match build_isotope(&u, &key) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    let maps = derive_maps(&key);
    let relation_ok = verify_relation(&u, &v, &key)
        .map(|r| r.holds())
        .unwrap_or(false);
    json!({
        "params": params,
        "u_table": table_rows(&u),
        "v_table": table_rows(&v),
        "key": {
            "alpha": key.alpha().image().to_vec(),
            "beta": key.beta().image().to_vec(),
            "psi": key.psi().image().to_vec(),
        },
        "delta": maps.delta.image().to_vec(),
        "gamma": maps.gamma.image().to_vec(),
        "relation_holds": relation_ok,
        "aut_order": aum.len(),
        "v_properties": {
            "latin": v.is_latin(),
            "cip": v.predicate(Property::Cip).holds(),
        },
    })
    .to_string()
}

/// Run the full two-layer pipeline on a UTF-8 message: base-n coding,
/// layer-1 multiplication by `y`, layer-2 transport by `delta`, then the
/// mirror decryption. Returns every intermediate stream for display.
#[wasm_bindgen]
pub fn cipher_demo(n: usize, r: usize, s: usize, y: usize, seed: u64, message: &str) -> String {
    let (params, u) = match build(n, r, s) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    if n > 12 {
        return err("cipher demo needs order <= 12 for automorphism enumeration");
    }
    if y >= n {
        return err(format!("y must be below {n}"));
    }
    let aum = match automorphism_group(&u) {
        Ok(g) => g,
        Err(e) => return err(e),
    };
    let key = sample_key(seed, n, &aum, 2);
    let maps = derive_maps(&key);
    let data = message.as_bytes();
    let symbols = match crypto::encode_bytes(data, n) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    let layer1 = match crypto::encrypt_layer1(&u, y, &symbols) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    let layer2 = match crypto::encrypt_layer2(&layer1, &maps) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    let back1 = match crypto::decrypt_layer2(&layer2, &maps) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    let back0 = match crypto::decrypt_layer1(&u, y, &back1) {
        Ok(s) => s,
        Err(e) => return err(e),
    };
    let decrypted = match crypto::decode_symbols(&back0, n, data.len()) {
        Ok(b) => b,
        Err(e) => return err(e),
    };
    let y_rho = u.inverse_maps().map(|m| m.j_rho.apply(y));
    json!({
        "params": params,
        "byte_length": data.len(),
        "plain_symbols": symbols,
        "layer1": layer1,
        "layer2": layer2,
        "decrypted": String::from_utf8_lossy(&decrypted),
        "round_trip_ok": decrypted == data,
        "y": y,
        "y_rho": y_rho,
        "delta": maps.delta.image().to_vec(),
    })
    .to_string()
}

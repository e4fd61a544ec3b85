//! The second quasigroup `V` built from `U` and a secret `(alpha, beta, psi)`:
//! derived maps `delta = psi^-1 alpha beta psi`, `gamma = psi^-1 beta psi`,
//! the defining relation `x delta (x) y gamma = (x beta (+) y) delta`, the
//! isotopism triples between `U` and `V`, and the holomorph-isomorphism
//! hypothesis check.

use crate::algebra::{AlgebraError, CayleyTable};
use crate::holomorph::{build_holomorph, HolomorphError};
use crate::morphism::{is_automorphism, MappingTriple, MorphError, PermGroup, Permutation};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum IsotopyError {
    #[error("key degree {degree} does not match table order {order}")]
    DegreeMismatch { degree: usize, order: usize },
    #[error("{which} (image {image:?}) is not in the supplied automorphism group")]
    NotInGroup {
        which: &'static str,
        image: Vec<usize>,
    },
    #[error("{which} (image {image:?}) is not an automorphism of the table")]
    NotAnAutomorphism {
        which: &'static str,
        image: Vec<usize>,
    },
    #[error("conjugate of automorphism {ordinal} under psi (image {image:?}) is missing from the target group")]
    ConjugateMissing { ordinal: usize, image: Vec<usize> },
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Holomorph(#[from] HolomorphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The second-layer secret `(alpha, beta, psi)`; `alpha` and `beta` must be
/// automorphisms of `U`, `psi` any permutation of the carrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotopyKey {
    alpha: Permutation,
    beta: Permutation,
    psi: Permutation,
}

impl IsotopyKey {
    /// Validates membership of `alpha`, `beta` in the supplied group.
    pub fn new(
        alpha: Permutation,
        beta: Permutation,
        psi: Permutation,
        aum: &PermGroup,
    ) -> Result<Self, IsotopyError> {
        for p in [&alpha, &beta, &psi] {
            if p.degree() != aum.degree() {
                return Err(IsotopyError::DegreeMismatch {
                    degree: p.degree(),
                    order: aum.degree(),
                });
            }
        }
        for (which, p) in [("alpha", &alpha), ("beta", &beta)] {
            if !aum.contains(p) {
                return Err(IsotopyError::NotInGroup {
                    which,
                    image: p.image().to_vec(),
                });
            }
        }
        Ok(IsotopyKey { alpha, beta, psi })
    }

    /// Validates `alpha`, `beta` directly against the table, for orders
    /// where full automorphism enumeration is out of bounds.
    pub fn for_table(
        alpha: Permutation,
        beta: Permutation,
        psi: Permutation,
        u: &CayleyTable,
    ) -> Result<Self, IsotopyError> {
        let n = u.order();
        for p in [&alpha, &beta, &psi] {
            if p.degree() != n {
                return Err(IsotopyError::DegreeMismatch {
                    degree: p.degree(),
                    order: n,
                });
            }
        }
        for (which, p) in [("alpha", &alpha), ("beta", &beta)] {
            if !is_automorphism(u, p)? {
                return Err(IsotopyError::NotAnAutomorphism {
                    which,
                    image: p.image().to_vec(),
                });
            }
        }
        Ok(IsotopyKey { alpha, beta, psi })
    }

    /// Key with `alpha = I`: the smallest usable keyspace, since
    /// `delta = psi^-1 beta psi` is already nontrivial.
    pub fn with_identity_alpha(
        beta: Permutation,
        psi: Permutation,
        aum: &PermGroup,
    ) -> Result<Self, IsotopyError> {
        let n = beta.degree();
        Self::new(Permutation::identity(n), beta, psi, aum)
    }

    pub fn degree(&self) -> usize {
        self.alpha.degree()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn beta(&self) -> &Permutation {
        &self.beta
    }

    pub fn psi(&self) -> &Permutation {
        &self.psi
    }
}

/// `delta` and `gamma`, always recomputed from the key (never stored).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivedMaps {
    pub delta: Permutation,
    pub gamma: Permutation,
}

/// `delta = psi^-1 alpha beta psi`, `gamma = psi^-1 beta psi` under right
/// action.
pub fn derive_maps(key: &IsotopyKey) -> DerivedMaps {
    let psi_inv = key.psi.inverse();
    let delta = psi_inv
        .compose(&key.alpha)
        .compose(&key.beta)
        .compose(&key.psi);
    let gamma = psi_inv.compose(&key.beta).compose(&key.psi);
    DerivedMaps { delta, gamma }
}

/// The isotope `V` with `u (x) v = ((u delta^-1) beta (+) v gamma^-1) delta`,
/// which satisfies the defining relation by construction.
pub fn build_isotope(u: &CayleyTable, key: &IsotopyKey) -> Result<CayleyTable, IsotopyError> {
    let n = u.order();
    if key.degree() != n {
        return Err(IsotopyError::DegreeMismatch {
            degree: key.degree(),
            order: n,
        });
    }
    let DerivedMaps { delta, gamma } = derive_maps(key);
    let delta_inv = delta.inverse();
    let gamma_inv = gamma.inverse();
    let v = CayleyTable::from_fn(n, |a, b| {
        delta.apply(u.get(key.beta.apply(delta_inv.apply(a)), gamma_inv.apply(b)))
    })?;
    Ok(v)
}

/// Outcome of the exhaustive relation check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationCheck {
    Holds,
    /// First pair where `x delta (x) y gamma != (x beta (+) y) delta`.
    Fails {
        x: usize,
        y: usize,
    },
}

impl RelationCheck {
    pub fn holds(self) -> bool {
        self == RelationCheck::Holds
    }
}

/// Exhaustively checks `x delta (x) y gamma = (x beta (+) y) delta`.
pub fn verify_relation(
    u: &CayleyTable,
    v: &CayleyTable,
    key: &IsotopyKey,
) -> Result<RelationCheck, IsotopyError> {
    let n = u.order();
    if v.order() != n {
        return Err(IsotopyError::DegreeMismatch {
            degree: v.order(),
            order: n,
        });
    }
    if key.degree() != n {
        return Err(IsotopyError::DegreeMismatch {
            degree: key.degree(),
            order: n,
        });
    }
    let DerivedMaps { delta, gamma } = derive_maps(key);
    for x in 0..n {
        for y in 0..n {
            if v.get(delta.apply(x), gamma.apply(y)) != delta.apply(u.get(key.beta.apply(x), y)) {
                return Ok(RelationCheck::Fails { x, y });
            }
        }
    }
    Ok(RelationCheck::Holds)
}

/// The two directions of the connecting isotopism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsotopismTriples {
    /// `(delta^-1 beta, gamma^-1, delta^-1)` mapping `V` onto `U`.
    pub v_to_u: MappingTriple,
    /// `(beta^-1 delta, gamma, delta)` mapping `U` onto `V`.
    pub u_to_v: MappingTriple,
}

/// Builds both triples from the key and its derived maps.
pub fn isotopism_triples(key: &IsotopyKey, maps: &DerivedMaps) -> IsotopismTriples {
    let delta_inv = maps.delta.inverse();
    let v_to_u = MappingTriple::new(
        delta_inv.compose(&key.beta),
        maps.gamma.inverse(),
        delta_inv,
    )
    .expect("equal degrees");
    let u_to_v = MappingTriple::new(
        key.beta.inverse().compose(&maps.delta),
        maps.gamma.clone(),
        maps.delta.clone(),
    )
    .expect("equal degrees");
    IsotopismTriples { v_to_u, u_to_v }
}

/// Verifies elementwise that `phi(alpha, x) = (psi^-1 alpha psi, x psi^-1 alpha psi)`
/// is an isomorphism `H(U) -> H(V)`.
///
/// A conjugate `psi^-1 alpha psi` missing from `aum_v` is a structured
/// failure naming the offending ordinal; an order mismatch or an
/// elementwise product disagreement yields `Ok(false)`.
pub fn check_holomorph_isomorphism(
    u: &CayleyTable,
    v: &CayleyTable,
    key: &IsotopyKey,
    aum_u: &PermGroup,
    aum_v: &PermGroup,
) -> Result<bool, IsotopyError> {
    let n = u.order();
    if v.order() != n || key.degree() != n {
        return Err(IsotopyError::DegreeMismatch {
            degree: key.degree(),
            order: n,
        });
    }
    // image of each U-automorphism ordinal under conjugation by psi;
    // checked before the holomorphs are materialized
    let mut conjugates = Vec::with_capacity(aum_u.len());
    for (ordinal, alpha) in aum_u.iter().enumerate() {
        let conj = alpha.conjugate_by(&key.psi);
        match aum_v.position(&conj) {
            Some(pos) => conjugates.push((pos, conj)),
            None => {
                return Err(IsotopyError::ConjugateMissing {
                    ordinal,
                    image: conj.image().to_vec(),
                })
            }
        }
    }
    if aum_u.len() != aum_v.len() {
        return Ok(false);
    }
    let hu = build_holomorph(u, aum_u)?;
    let hv = build_holomorph(v, aum_v)?;
    let m = aum_u.len();
    let mut phi = vec![0usize; m * n];
    for (a, (pos, conj)) in conjugates.iter().enumerate() {
        for x in 0..n {
            phi[hu.pair_index(a, x)] = hv.pair_index(*pos, conj.apply(x));
        }
    }
    // conjugation is injective, so phi is a bijection when every image exists
    let order = m * n;
    for i in 0..order {
        for j in 0..order {
            if phi[hu.table().get(i, j)] != hv.table().get(phi[i], phi[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Observed values for the numbered side claims of the holomorph-of-isotope
/// theorem; recorded rather than asserted, since several of them fail on
/// constructed examples (see the verification suite findings).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremDiagnostics {
    /// `gamma in AUM(U)` (left side of item 1).
    pub gamma_in_aum_u: bool,
    /// `(I, gamma, delta) in AUT(V)` (right side of item 1).
    pub gamma_delta_autotopism: bool,
    /// For loops `U`: `L_{e delta} in AUM(V)` (item 2a).
    pub left_translation_automorphism: Option<bool>,
    /// For loops `U`: `beta in AUM(V)` vs `R_{e gamma} in AUM(V)` (item 2b).
    pub item2b_sides: Option<(bool, bool)>,
    /// Whether `delta = I` / `gamma = I` (premises of items 3 and 4).
    pub delta_is_identity: bool,
    pub gamma_is_identity: bool,
    pub aum_u_order: usize,
    pub aum_v_order: usize,
}

pub fn theorem_diagnostics(
    u: &CayleyTable,
    v: &CayleyTable,
    key: &IsotopyKey,
    aum_u: &PermGroup,
    aum_v: &PermGroup,
) -> Result<TheoremDiagnostics, IsotopyError> {
    let n = u.order();
    let DerivedMaps { delta, gamma } = derive_maps(key);
    let gamma_in_aum_u = aum_u.contains(&gamma);
    let item1_triple = MappingTriple::new(Permutation::identity(n), gamma.clone(), delta.clone())
        .expect("equal degrees");
    let gamma_delta_autotopism = crate::morphism::is_autotopism(v, &item1_triple)?;

    let (mut left_translation_automorphism, mut item2b_sides) = (None, None);
    if let Some(e) = u.identity() {
        let l = v.left_translation(delta.apply(e))?;
        left_translation_automorphism = Some(is_automorphism(v, &l)?);
        let r = v.right_translation(gamma.apply(e))?;
        item2b_sides = Some((is_automorphism(v, key.beta())?, is_automorphism(v, &r)?));
    }
    Ok(TheoremDiagnostics {
        gamma_in_aum_u,
        gamma_delta_autotopism,
        left_translation_automorphism,
        item2b_sides,
        delta_is_identity: delta.is_identity(),
        gamma_is_identity: gamma.is_identity(),
        aum_u_order: aum_u.len(),
        aum_v_order: aum_v.len(),
    })
}

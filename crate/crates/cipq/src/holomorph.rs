//! The holomorph `H(L)` on `AUM(L) x L` with
//! `(alpha, x) o (beta, y) = (alpha beta, x beta . y)`, and the condition
//! checks for when `H(L)` is an AIPQ/CIPQ.
//!
//! Each side of every claimed equivalence is evaluated independently; a
//! report never derives one field from another, so disagreements with the
//! expected theorems surface as data rather than being assumed away.

use crate::algebra::{AlgebraError, CayleyTable, Property, PropertyStatus};
use crate::morphism::{
    automorphism_group, is_automorphism, is_autotopism, MappingTriple, MorphError, PermGroup,
    Permutation,
};
use thiserror::Error;

/// Largest holomorph order the builder accepts.
pub const MAX_HOLOMORPH_ORDER: usize = 512;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum HolomorphError {
    #[error("element {ordinal} of the supplied group (image {image:?}) is not an automorphism")]
    NotAnAutomorphism { ordinal: usize, image: Vec<usize> },
    #[error("holomorph order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("group degree {degree} does not match table order {order}")]
    DegreeMismatch { degree: usize, order: usize },
    #[error("table has no inverse mappings")]
    NoInverseMaps,
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `H(L)` together with its pair indexing. The element `(alpha, x)` lives
/// at index `ordinal(alpha) * n + x`, ordinals taken in the canonical
/// (lexicographic) order of the group, which always places the identity
/// at ordinal 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Holomorph {
    base: CayleyTable,
    aum: PermGroup,
    source: CayleyTable,
}

impl Holomorph {
    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.base
    }

    pub fn into_table(self) -> CayleyTable {
        self.base
    }

    pub fn group(&self) -> &PermGroup {
        &self.aum
    }

    pub fn source(&self) -> &CayleyTable {
        &self.source
    }

    pub fn pair_index(&self, ordinal: usize, x: usize) -> usize {
        ordinal * self.source.order() + x
    }

    pub fn unpair(&self, index: usize) -> (usize, usize) {
        let n = self.source.order();
        (index / n, index % n)
    }
}

/// Builds `H(L)` from `L` and a subgroup of its automorphisms. Every
/// supplied element is re-verified; a non-automorphism is rejected by
/// ordinal and image.
pub fn build_holomorph(l: &CayleyTable, aum: &PermGroup) -> Result<Holomorph, HolomorphError> {
    let n = l.order();
    if aum.degree() != n {
        return Err(HolomorphError::DegreeMismatch {
            degree: aum.degree(),
            order: n,
        });
    }
    for (ordinal, p) in aum.iter().enumerate() {
        if !is_automorphism(l, p)? {
            return Err(HolomorphError::NotAnAutomorphism {
                ordinal,
                image: p.image().to_vec(),
            });
        }
    }
    let m = aum.len();
    let order = m * n;
    if order > MAX_HOLOMORPH_ORDER {
        return Err(HolomorphError::OrderTooLarge {
            order,
            limit: MAX_HOLOMORPH_ORDER,
        });
    }
    // composition ordinals, right action: a then b
    let mut comp = vec![0usize; m * m];
    for (a, pa) in aum.iter().enumerate() {
        for (b, pb) in aum.iter().enumerate() {
            comp[a * m + b] = aum
                .position(&pa.compose(pb))
                .expect("group is closed under composition");
        }
    }
    let base = CayleyTable::from_fn(order, |i, j| {
        let (a, x) = (i / n, i % n);
        let (b, y) = (j / n, j % n);
        comp[a * m + b] * n + l.get(aum.elements()[b].apply(x), y)
    })?;
    Ok(Holomorph {
        base,
        aum: aum.clone(),
        source: l.clone(),
    })
}

/// Which inverse property a condition report is about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IpKind {
    Aip,
    Cip,
}

impl IpKind {
    pub fn property(self) -> Property {
        match self {
            IpKind::Aip => Property::Aip,
            IpKind::Cip => Property::Cip,
        }
    }
}

/// Independent evaluations of the holomorph conditions:
/// `AUM(L)` abelian; `(beta^-1, alpha, I) in AUT(L)` for all pairs; the
/// property on `L`; and the property on `H(L)` checked directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HolomorphConditionReport {
    pub kind: IpKind,
    pub aum_abelian: bool,
    pub autotopism_family: bool,
    pub base_property: PropertyStatus,
    pub holomorph_property: PropertyStatus,
}

impl HolomorphConditionReport {
    /// The three numbered conditions taken together.
    pub fn conditions_hold(&self) -> bool {
        self.aum_abelian && self.autotopism_family && self.base_property.holds()
    }
}

/// Evaluates the three conditions and, independently, whether `H(L)` has
/// the property. Pass the complete automorphism group as `aum`; membership
/// is re-verified while building `H(L)`, completeness is the caller's
/// responsibility.
pub fn check_conditions(
    l: &CayleyTable,
    aum: &PermGroup,
    kind: IpKind,
) -> Result<HolomorphConditionReport, HolomorphError> {
    let h = build_holomorph(l, aum)?;
    let n = l.order();
    let mut family = true;
    'outer: for alpha in aum.iter() {
        for beta in aum.iter() {
            let t = MappingTriple::new(beta.inverse(), alpha.clone(), Permutation::identity(n))
                .expect("equal degrees");
            if !is_autotopism(l, &t)? {
                family = false;
                break 'outer;
            }
        }
    }
    Ok(HolomorphConditionReport {
        kind,
        aum_abelian: aum.is_abelian(),
        autotopism_family: family,
        base_property: l.predicate(kind.property()),
        holomorph_property: h.table().predicate(kind.property()),
    })
}

/// The four identities of the holomorph CIP characterization; each variant
/// is an exhaustive check over all pairs `x, y` for fixed automorphisms
/// `alpha, beta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum T34Variant {
    /// `(x beta . y) x^rho = y alpha`
    One,
    /// `x beta . (y x^rho) = y alpha`
    Two,
    /// `(x^lambda alpha^-1 beta alpha . y alpha) . x = y`
    Three,
    /// `x^lambda alpha^-1 beta alpha . (y alpha . x) = y`
    Four,
}

pub fn check_t34(
    l: &CayleyTable,
    alpha: &Permutation,
    beta: &Permutation,
    variant: T34Variant,
) -> Result<bool, HolomorphError> {
    let n = l.order();
    for p in [alpha, beta] {
        if p.degree() != n {
            return Err(HolomorphError::DegreeMismatch {
                degree: p.degree(),
                order: n,
            });
        }
        if !is_automorphism(l, p)? {
            return Err(HolomorphError::NotAnAutomorphism {
                ordinal: 0,
                image: p.image().to_vec(),
            });
        }
    }
    let maps = l.inverse_maps().ok_or(HolomorphError::NoInverseMaps)?;
    let jr = &maps.j_rho;
    let jl = &maps.j_lambda;
    // alpha^-1 beta alpha, right action
    let conj = alpha.inverse().compose(beta).compose(alpha);
    let ok = (0..n).all(|x| {
        (0..n).all(|y| match variant {
            T34Variant::One => l.get(l.get(beta.apply(x), y), jr.apply(x)) == alpha.apply(y),
            T34Variant::Two => l.get(beta.apply(x), l.get(y, jr.apply(x))) == alpha.apply(y),
            T34Variant::Three => l.get(l.get(conj.apply(jl.apply(x)), alpha.apply(y)), x) == y,
            T34Variant::Four => l.get(conj.apply(jl.apply(x)), l.get(alpha.apply(y), x)) == y,
        })
    });
    Ok(ok)
}

/// What held on `L` once the premise "`H(L)` is an AIPQ/CIPQ" was tested
/// directly. Conclusion fields are `None` when the premise is vacuous.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorollaryReport {
    pub holomorph_cip: PropertyStatus,
    pub holomorph_aip: PropertyStatus,
    /// `AUM(L) = {I}` and `H(L) ~ L`; checked when either property holds.
    pub aum_trivial: Option<bool>,
    pub holomorph_isomorphic: Option<bool>,
    /// Flexibility, unipotence and (for loops) exponent 2; checked when
    /// `H(L)` is CIP.
    pub flexible: Option<bool>,
    pub unipotent: Option<bool>,
    pub exponent2: Option<bool>,
    /// `(beta, alpha, I), (alpha, beta, I), (beta, I, alpha), (I, alpha, beta)`
    /// all in `AUT(L)` over all automorphism pairs; checked when `H(L)` is CIP.
    pub autotopism_triples: Option<bool>,
}

impl CorollaryReport {
    pub fn premise(&self) -> bool {
        self.holomorph_cip.holds() || self.holomorph_aip.holds()
    }

    /// True when every checked conclusion held (vacuously true otherwise).
    pub fn conclusions_hold(&self) -> bool {
        [
            self.aum_trivial,
            self.holomorph_isomorphic,
            self.flexible,
            self.unipotent,
            self.exponent2,
            self.autotopism_triples,
        ]
        .into_iter()
        .flatten()
        .all(|b| b)
    }
}

/// Checks the holomorph corollaries on `l`: whenever `H(L)` turns out to
/// be an AIPQ/CIPQ, the triviality of `AUM(L)`, the isomorphism
/// `H(L) ~ L`, flexibility, unipotence (exponent 2 for loops) and the
/// autotopism triples are each verified directly.
pub fn verify_corollaries(l: &CayleyTable) -> Result<CorollaryReport, HolomorphError> {
    let aum = automorphism_group(l)?;
    let h = build_holomorph(l, &aum)?;
    let holomorph_cip = h.table().predicate(Property::Cip);
    let holomorph_aip = h.table().predicate(Property::Aip);
    let premise = holomorph_cip.holds() || holomorph_aip.holds();

    let (mut aum_trivial, mut holomorph_isomorphic) = (None, None);
    if premise {
        aum_trivial = Some(aum.is_trivial());
        holomorph_isomorphic = Some(crate::morphism::find_isomorphism(h.table(), l).is_some());
    }

    let (mut flexible, mut unipotent, mut exponent2, mut autotopism_triples) =
        (None, None, None, None);
    if holomorph_cip.holds() {
        flexible = Some(l.predicate(Property::Flexible).holds());
        unipotent = Some(l.predicate(Property::Unipotent).holds());
        if l.identity().is_some() {
            exponent2 = Some(l.predicate(Property::Exponent2).holds());
        }
        let n = l.order();
        let id = Permutation::identity(n);
        let mut all = true;
        'pairs: for alpha in aum.iter() {
            for beta in aum.iter() {
                let triples = [
                    (beta.clone(), alpha.clone(), id.clone()),
                    (alpha.clone(), beta.clone(), id.clone()),
                    (beta.clone(), id.clone(), alpha.clone()),
                    (id.clone(), alpha.clone(), beta.clone()),
                ];
                for (a, b, c) in triples {
                    let t = MappingTriple::new(a, b, c).expect("equal degrees");
                    if !is_autotopism(l, &t)? {
                        all = false;
                        break 'pairs;
                    }
                }
            }
        }
        autotopism_triples = Some(all);
    }
    Ok(CorollaryReport {
        holomorph_cip,
        holomorph_aip,
        aum_trivial,
        holomorph_isomorphic,
        flexible,
        unipotent,
        exponent2,
        autotopism_triples,
    })
}

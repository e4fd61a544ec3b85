//! Permutations, automorphism groups, isotopisms and autotopisms.
//!
//! Permutations act on the right throughout: `x.p` is written `p.apply(x)`
//! and composition reads left to right, `x(pq) = (xp)q`. This matches the
//! convention used for conjugation strings like `psi^-1 alpha psi`.

use crate::algebra::CayleyTable;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum MorphError {
    #[error("image of length {len} is not a bijection on 0..{len} (value {value} repeats or is out of range)")]
    NotABijection { len: usize, value: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("table order {order} exceeds the enumeration limit {limit}")]
    OrderExceedsLimit { order: usize, limit: usize },
    #[error("element set does not contain the identity permutation")]
    MissingIdentity,
    #[error("element set is not closed under composition")]
    NotClosed,
}

/// A bijection on `{0..n-1}`, stored as its image array: `x` maps to `image[x]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from an image array, rejecting non-bijections.
    pub fn from_image(image: Vec<usize>) -> Result<Self, MorphError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(MorphError::NotABijection { len: n, value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Right action: `x` maps to `image[x]`.
    ///
    /// Panics if `x` is out of range.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// `self` then `other`: `x(pq) = (xp)q`.
    ///
    /// Panics on degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "compose: degree mismatch");
        Permutation {
            image: self.image.iter().map(|&v| other.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (x, &v) in self.image.iter().enumerate() {
            image[v] = x;
        }
        Permutation { image }
    }

    /// `psi^-1 self psi` under right action.
    pub fn conjugate_by(&self, psi: &Permutation) -> Permutation {
        psi.inverse().compose(self).compose(psi)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &v)| x == v)
    }
}

/// An isotopism triple `(A, B, C)` of equal-degree permutations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MappingTriple {
    pub a: Permutation,
    pub b: Permutation,
    pub c: Permutation,
}

impl MappingTriple {
    pub fn new(a: Permutation, b: Permutation, c: Permutation) -> Result<Self, MorphError> {
        if a.degree() != b.degree() {
            return Err(MorphError::DegreeMismatch {
                left: a.degree(),
                right: b.degree(),
            });
        }
        if a.degree() != c.degree() {
            return Err(MorphError::DegreeMismatch {
                left: a.degree(),
                right: c.degree(),
            });
        }
        Ok(MappingTriple { a, b, c })
    }

    pub fn identity(n: usize) -> Self {
        MappingTriple {
            a: Permutation::identity(n),
            b: Permutation::identity(n),
            c: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }
}

/// A permutation group given by its full element list, kept sorted
/// lexicographically on image arrays so output is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Builds a group from elements, verifying identity membership and
    /// closure under composition (inverses follow in a finite setting).
    pub fn from_elements(
        degree: usize,
        mut elements: Vec<Permutation>,
    ) -> Result<Self, MorphError> {
        for p in &elements {
            if p.degree() != degree {
                return Err(MorphError::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
        }
        elements.sort();
        elements.dedup();
        if !elements.iter().any(|p| p.is_identity()) {
            return Err(MorphError::MissingIdentity);
        }
        for p in &elements {
            for q in &elements {
                if elements.binary_search(&p.compose(q)).is_err() {
                    return Err(MorphError::NotClosed);
                }
            }
        }
        Ok(PermGroup { degree, elements })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Ordinal of `p` in the canonical (lexicographic) element order.
    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, p)| {
            self.elements[i + 1..]
                .iter()
                .all(|q| p.compose(q) == q.compose(p))
        })
    }
}

/// `{psi^-1 a psi : a in G}`, canonically sorted.
pub fn conjugate_group(g: &PermGroup, psi: &Permutation) -> Result<PermGroup, MorphError> {
    if g.degree() != psi.degree() {
        return Err(MorphError::DegreeMismatch {
            left: g.degree(),
            right: psi.degree(),
        });
    }
    let mut elements: Vec<Permutation> = g.iter().map(|a| a.conjugate_by(psi)).collect();
    elements.sort();
    Ok(PermGroup {
        degree: g.degree(),
        elements,
    })
}

/// True iff `p(x . y) = p(x) . p(y)` for all pairs.
pub fn is_automorphism(q: &CayleyTable, p: &Permutation) -> Result<bool, MorphError> {
    let n = q.order();
    if p.degree() != n {
        return Err(MorphError::DegreeMismatch {
            left: n,
            right: p.degree(),
        });
    }
    for x in 0..n {
        for y in 0..n {
            if p.apply(q.get(x, y)) != q.get(p.apply(x), p.apply(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `xA . yB = (x . y)C` with products on both sides taken in `q`.
pub fn is_autotopism(q: &CayleyTable, t: &MappingTriple) -> Result<bool, MorphError> {
    is_isotopism(q, q, t)
}

/// True iff `xA .dst yB = (x .src y)C`, i.e. `t` is an isotopism from
/// `src` onto `dst`.
pub fn is_isotopism(
    src: &CayleyTable,
    dst: &CayleyTable,
    t: &MappingTriple,
) -> Result<bool, MorphError> {
    let n = src.order();
    if dst.order() != n {
        return Err(MorphError::DegreeMismatch {
            left: n,
            right: dst.order(),
        });
    }
    if t.degree() != n {
        return Err(MorphError::DegreeMismatch {
            left: n,
            right: t.degree(),
        });
    }
    for x in 0..n {
        for y in 0..n {
            if dst.get(t.a.apply(x), t.b.apply(y)) != t.c.apply(src.get(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Default order bound for complete automorphism enumeration.
pub const DEFAULT_AUT_LIMIT: usize = 12;

/// Complete automorphism group via backtracking over images, constrained
/// row by row by the table. Uses [`DEFAULT_AUT_LIMIT`].
pub fn automorphism_group(q: &CayleyTable) -> Result<PermGroup, MorphError> {
    automorphism_group_bounded(q, DEFAULT_AUT_LIMIT)
}

/// As [`automorphism_group`] with an explicit order bound. The result is
/// verified closed and canonically sorted.
pub fn automorphism_group_bounded(q: &CayleyTable, limit: usize) -> Result<PermGroup, MorphError> {
    let n = q.order();
    if n > limit {
        return Err(MorphError::OrderExceedsLimit { order: n, limit });
    }
    let mut found = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search_morphisms(q, q, &mut img, &mut used, 0, &mut found);
    found.sort();
    PermGroup::from_elements(n, found)
}

/// A bijection carrying `q1` onto `q2`, or `None` (in particular when the
/// orders differ). Backtracking search; first witness in lexicographic
/// image order.
pub fn find_isomorphism(q1: &CayleyTable, q2: &CayleyTable) -> Option<Permutation> {
    let n = q1.order();
    if q2.order() != n {
        return None;
    }
    let mut found = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search_first_morphism(q1, q2, &mut img, &mut used, 0, &mut found);
    found.into_iter().next()
}

fn partial_ok(src: &CayleyTable, dst: &CayleyTable, img: &[usize], k: usize) -> bool {
    // Images are assigned in point order, so the product constraint is
    // checkable exactly for pairs whose product is also <= k.
    for a in 0..=k {
        for b in 0..=k {
            let z = src.get(a, b);
            if z <= k && dst.get(img[a], img[b]) != img[z] {
                return false;
            }
        }
    }
    true
}

fn search_morphisms(
    src: &CayleyTable,
    dst: &CayleyTable,
    img: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
    out: &mut Vec<Permutation>,
) {
    let n = src.order();
    if k == n {
        out.push(Permutation { image: img.clone() });
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        img[k] = v;
        used[v] = true;
        if partial_ok(src, dst, img, k) {
            search_morphisms(src, dst, img, used, k + 1, out);
        }
        img[k] = usize::MAX;
        used[v] = false;
    }
}

fn search_first_morphism(
    src: &CayleyTable,
    dst: &CayleyTable,
    img: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
    out: &mut Vec<Permutation>,
) {
    if !out.is_empty() {
        return;
    }
    let n = src.order();
    if k == n {
        out.push(Permutation { image: img.clone() });
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        img[k] = v;
        used[v] = true;
        if partial_ok(src, dst, img, k) {
            search_first_morphism(src, dst, img, used, k + 1, out);
            if !out.is_empty() {
                img[k] = usize::MAX;
                used[v] = false;
                return;
            }
        }
        img[k] = usize::MAX;
        used[v] = false;
    }
}

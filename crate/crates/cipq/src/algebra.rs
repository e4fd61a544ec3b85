//! Cayley-table groupoids, quasigroups and loops, with the identity-based
//! predicates and inverse mappings.
//!
//! Elements are always the indices `0..n-1`; any external labeling belongs
//! to I/O adapters. A table is a quasigroup exactly when it is a Latin
//! square, and a loop when it additionally has a two-sided identity.

use crate::morphism::Permutation;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("table is empty")]
    EmptyTable,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {x} is out of range for order {order}")]
    IndexOutOfRange { x: usize, order: usize },
    #[error("table is not a quasigroup")]
    NotAQuasigroup,
    #[error("table is not a loop (no two-sided identity)")]
    NotALoop,
    #[error("no inverse mappings exist for this table")]
    NoInverseMaps,
}

/// An order-`n` binary operation as an `n x n` table of element indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<usize>, // row-major, cells[x * n + y] = x . y
}

/// Where the Latin property first fails.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LatinViolation {
    /// `symbol` occurs at both `(row, col_a)` and `(row, col_b)`.
    Row {
        row: usize,
        col_a: usize,
        col_b: usize,
        symbol: usize,
    },
    /// `symbol` occurs at both `(row_a, col)` and `(row_b, col)`.
    Col {
        col: usize,
        row_a: usize,
        row_b: usize,
        symbol: usize,
    },
}

/// Outcome of [`CayleyTable::validate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StructureReport {
    pub is_groupoid: bool,
    pub is_quasigroup: bool,
    pub identity: Option<usize>,
    pub latin_violation: Option<LatinViolation>,
}

impl CayleyTable {
    /// Builds a table from rows, rejecting ragged rows and out-of-range
    /// entries with the offending position named.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::EmptyTable);
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::RaggedRow {
                    row: r,
                    found: row.len(),
                    expected: n,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(AlgebraError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
                cells.push(v);
            }
        }
        Ok(CayleyTable { n, cells })
    }

    /// Builds a table cell by cell; `f(x, y)` must return values `< n`.
    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        let rows = (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect();
        Self::from_rows(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x . y` without range checks; panics on out-of-range indices.
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    /// `x . y` with range checks.
    pub fn mul(&self, x: usize, y: usize) -> Result<usize, AlgebraError> {
        for v in [x, y] {
            if v >= self.n {
                return Err(AlgebraError::IndexOutOfRange {
                    x: v,
                    order: self.n,
                });
            }
        }
        Ok(self.get(x, y))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|x| self.cells[x * self.n..(x + 1) * self.n].to_vec())
            .collect()
    }

    fn find_latin_violation(&self) -> Option<LatinViolation> {
        let n = self.n;
        let mut seen_at = vec![usize::MAX; n];
        for row in 0..n {
            seen_at.fill(usize::MAX);
            for col in 0..n {
                let v = self.get(row, col);
                if seen_at[v] != usize::MAX {
                    return Some(LatinViolation::Row {
                        row,
                        col_a: seen_at[v],
                        col_b: col,
                        symbol: v,
                    });
                }
                seen_at[v] = col;
            }
        }
        for col in 0..n {
            seen_at.fill(usize::MAX);
            for row in 0..n {
                let v = self.get(row, col);
                if seen_at[v] != usize::MAX {
                    return Some(LatinViolation::Col {
                        col,
                        row_a: seen_at[v],
                        row_b: row,
                        symbol: v,
                    });
                }
                seen_at[v] = row;
            }
        }
        None
    }

    /// Latin property: every row and column is a permutation of `0..n-1`.
    pub fn is_latin(&self) -> bool {
        self.find_latin_violation().is_none()
    }

    /// The two-sided identity element, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// Classifies the table. Closure holds by construction, so
    /// `is_groupoid` is always true for a built table; the interesting
    /// fields are the Latin verdict (with a witness on failure) and the
    /// identity scan.
    pub fn validate(&self) -> StructureReport {
        let violation = self.find_latin_violation();
        StructureReport {
            is_groupoid: true,
            is_quasigroup: violation.is_none(),
            identity: self.identity(),
            latin_violation: violation,
        }
    }

    /// `L_x : y -> x . y` as a permutation. Errors when the row is not a
    /// bijection (non-quasigroup input).
    pub fn left_translation(&self, x: usize) -> Result<Permutation, AlgebraError> {
        if x >= self.n {
            return Err(AlgebraError::IndexOutOfRange { x, order: self.n });
        }
        let row = self.cells[x * self.n..(x + 1) * self.n].to_vec();
        Permutation::from_image(row).map_err(|_| AlgebraError::NotAQuasigroup)
    }

    /// `R_x : y -> y . x` as a permutation.
    pub fn right_translation(&self, x: usize) -> Result<Permutation, AlgebraError> {
        if x >= self.n {
            return Err(AlgebraError::IndexOutOfRange { x, order: self.n });
        }
        let col = (0..self.n).map(|y| self.get(y, x)).collect();
        Permutation::from_image(col).map_err(|_| AlgebraError::NotAQuasigroup)
    }

    /// Right and left inverse mappings.
    ///
    /// For a loop these are the ordinary loop inverses (`x . x^rho = e`,
    /// `x^lambda . x = e`). For an identity-free quasigroup the crossed
    /// inverse mappings defined by the CIP identities themselves are
    /// searched for; they exist exactly when the table has the cross
    /// inverse property. Absence is a value, not an error.
    pub fn inverse_maps(&self) -> Option<InverseMaps> {
        if !self.is_latin() {
            return None;
        }
        let n = self.n;
        if let Some(e) = self.identity() {
            let j_rho: Vec<usize> = (0..n)
                .map(|x| (0..n).find(|&z| self.get(x, z) == e).expect("latin row"))
                .collect();
            let j_lambda: Vec<usize> = (0..n)
                .map(|x| (0..n).find(|&z| self.get(z, x) == e).expect("latin column"))
                .collect();
            return Some(InverseMaps {
                j_rho: Permutation::from_image(j_rho).expect("loop inverse is a bijection"),
                j_lambda: Permutation::from_image(j_lambda).expect("loop inverse is a bijection"),
                kind: InverseKind::LoopInverse,
            });
        }
        // Crossed inverses: x^rho is the unique z with (x.y).z = y for all y,
        // i.e. R_z = L_x^-1; uniqueness because right translations are
        // pairwise distinct in a quasigroup.
        let mut j_rho = Vec::with_capacity(n);
        for x in 0..n {
            // candidate from y = 0, then verify the rest of the row
            let x0 = self.get(x, 0);
            let z = (0..n).find(|&z| self.get(x0, z) == 0).expect("latin row");
            if (1..n).all(|y| self.get(self.get(x, y), z) == y) {
                j_rho.push(z);
            } else {
                return None;
            }
        }
        let mut j_lambda = Vec::with_capacity(n);
        for x in 0..n {
            // x^lambda . (y . x) = y; candidate from y = 0
            let c0 = self.get(0, x);
            let z = (0..n)
                .find(|&z| self.get(z, c0) == 0)
                .expect("latin column");
            if (1..n).all(|y| self.get(z, self.get(y, x)) == y) {
                j_lambda.push(z);
            } else {
                return None;
            }
        }
        let j_rho = Permutation::from_image(j_rho).ok()?;
        let j_lambda = Permutation::from_image(j_lambda).ok()?;
        Some(InverseMaps {
            j_rho,
            j_lambda,
            kind: InverseKind::CrossedInverse,
        })
    }

    /// Evaluates one of the named identities; see [`Property`].
    pub fn predicate(&self, which: Property) -> PropertyStatus {
        use Property::*;
        let n = self.n;
        let all_pairs = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
        match which {
            Flexible => {
                all_pairs(&|x, y| self.get(x, self.get(y, x)) == self.get(self.get(x, y), x)).into()
            }
            Commutative => all_pairs(&|x, y| self.get(x, y) == self.get(y, x)).into(),
            Unipotent => (0..n).all(|x| self.get(x, x) == self.get(0, 0)).into(),
            Associative => (0..n)
                .all(|x| {
                    (0..n).all(|y| {
                        (0..n).all(|z| self.get(self.get(x, y), z) == self.get(x, self.get(y, z)))
                    })
                })
                .into(),
            Exponent2 => match self.identity() {
                Some(e) if self.is_latin() => (0..n).all(|x| self.get(x, x) == e).into(),
                _ => PropertyStatus::Undefined,
            },
            Wip | Aip | Cip => {
                let Some(maps) = self.inverse_maps() else {
                    // For an identity-free quasigroup the crossed inverses
                    // exist iff CIP holds, so their absence decides CIP;
                    // WIP and AIP are left undefined rather than guessed.
                    return match which {
                        Cip if self.is_latin() => PropertyStatus::Fails,
                        _ => PropertyStatus::Undefined,
                    };
                };
                match which {
                    Cip => cip_identities(self, &maps).iter().all(|&b| b).into(),
                    Wip => wip_identities(self, &maps).0.into(),
                    Aip => aip_identities(self, &maps).0.into(),
                    _ => unreachable!(),
                }
            }
        }
    }

    /// Smallest `k >= 1` with `x J_rho^k = x` — the inverse-cycle length of `x`.
    pub fn rho_cycle_length(&self, x: usize) -> Result<usize, AlgebraError> {
        if x >= self.n {
            return Err(AlgebraError::IndexOutOfRange { x, order: self.n });
        }
        let maps = self.inverse_maps().ok_or(AlgebraError::NoInverseMaps)?;
        let mut k = 1;
        let mut y = maps.j_rho.apply(x);
        while y != x {
            y = maps.j_rho.apply(y);
            k += 1;
        }
        Ok(k)
    }
}

/// The right/left inverse mappings of a table, with their provenance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InverseMaps {
    pub j_rho: Permutation,
    pub j_lambda: Permutation,
    pub kind: InverseKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InverseKind {
    /// `x . x^rho = e` and `x^lambda . x = e`.
    LoopInverse,
    /// `(x.y) . x^rho = y` and `x^lambda . (y.x) = y`.
    CrossedInverse,
}

/// The four equivalent CIP identities, evaluated independently:
/// `xy.x^rho = y`, `x.yx^rho = y`, `x^lambda.(yx) = y`, `x^lambda y.x = y`.
pub fn cip_identities(q: &CayleyTable, maps: &InverseMaps) -> [bool; 4] {
    let n = q.order();
    let jr = &maps.j_rho;
    let jl = &maps.j_lambda;
    let mut out = [true; 4];
    for x in 0..n {
        for y in 0..n {
            out[0] &= q.get(q.get(x, y), jr.apply(x)) == y;
            out[1] &= q.get(x, q.get(y, jr.apply(x))) == y;
            out[2] &= q.get(jl.apply(x), q.get(y, x)) == y;
            out[3] &= q.get(q.get(jl.apply(x), y), x) == y;
        }
    }
    out
}

/// The two quoted forms of the WIP identity:
/// `x(yx)^rho = y^rho` and `(xy)^lambda x = y^lambda`.
pub fn wip_identities(q: &CayleyTable, maps: &InverseMaps) -> (bool, bool) {
    let n = q.order();
    let jr = &maps.j_rho;
    let jl = &maps.j_lambda;
    let mut v = (true, true);
    for x in 0..n {
        for y in 0..n {
            v.0 &= q.get(x, jr.apply(q.get(y, x))) == jr.apply(y);
            v.1 &= q.get(jl.apply(q.get(x, y)), x) == jl.apply(y);
        }
    }
    v
}

/// The two quoted forms of the AIP identity:
/// `(xy)^rho = x^rho y^rho` and `(xy)^lambda = x^lambda y^lambda`.
pub fn aip_identities(q: &CayleyTable, maps: &InverseMaps) -> (bool, bool) {
    let n = q.order();
    let jr = &maps.j_rho;
    let jl = &maps.j_lambda;
    let mut v = (true, true);
    for x in 0..n {
        for y in 0..n {
            v.0 &= jr.apply(q.get(x, y)) == q.get(jr.apply(x), jr.apply(y));
            v.1 &= jl.apply(q.get(x, y)) == q.get(jl.apply(x), jl.apply(y));
        }
    }
    v
}

/// First pair witnessing the failure of a property's defining identity.
/// `None` when the property holds, is undefined, or fails existentially
/// (CIP on a quasigroup with no crossed inverses has no witness pair).
/// For the pointwise flags (unipotent, exponent 2) the witness is
/// `(x, x)`; for associativity it is the `(x, y)` of the first failing
/// `(x, y, z)`.
pub fn property_counterexample(q: &CayleyTable, which: Property) -> Option<(usize, usize)> {
    if q.predicate(which) != PropertyStatus::Fails {
        return None;
    }
    let n = q.order();
    let maps = q.inverse_maps();
    let pair = |f: &dyn Fn(usize, usize) -> bool| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !f(x, y))
    };
    match which {
        Property::Flexible => pair(&|x, y| q.get(x, q.get(y, x)) == q.get(q.get(x, y), x)),
        Property::Commutative => pair(&|x, y| q.get(x, y) == q.get(y, x)),
        Property::Unipotent => (1..n).find(|&x| q.get(x, x) != q.get(0, 0)).map(|x| (x, x)),
        Property::Exponent2 => {
            let e = q.identity()?;
            (0..n).find(|&x| q.get(x, x) != e).map(|x| (x, x))
        }
        Property::Associative => {
            pair(&|x, y| (0..n).all(|z| q.get(q.get(x, y), z) == q.get(x, q.get(y, z))))
        }
        Property::Cip => {
            let maps = maps?;
            pair(&|x, y| q.get(q.get(x, y), maps.j_rho.apply(x)) == y)
        }
        Property::Wip => {
            let maps = maps?;
            pair(&|x, y| q.get(x, maps.j_rho.apply(q.get(y, x))) == maps.j_rho.apply(y))
        }
        Property::Aip => {
            let maps = maps?;
            pair(&|x, y| {
                maps.j_rho.apply(q.get(x, y)) == q.get(maps.j_rho.apply(x), maps.j_rho.apply(y))
            })
        }
    }
}

/// The identities and structural flags a table can be checked for.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Property {
    Wip,
    Aip,
    Cip,
    Flexible,
    Unipotent,
    Exponent2,
    Commutative,
    Associative,
}

/// Outcome of a predicate: a failed precondition (e.g. no inverse maps for
/// WIP) is reported as `Undefined`, never silently as `Fails`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PropertyStatus {
    Holds,
    Fails,
    Undefined,
}

impl PropertyStatus {
    pub fn holds(self) -> bool {
        self == PropertyStatus::Holds
    }
}

impl From<bool> for PropertyStatus {
    fn from(b: bool) -> Self {
        if b {
            PropertyStatus::Holds
        } else {
            PropertyStatus::Fails
        }
    }
}

/// A quasigroup with a verified two-sided identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoopStructure {
    base: CayleyTable,
    e: usize,
}

impl LoopStructure {
    pub fn new(base: CayleyTable) -> Result<Self, AlgebraError> {
        if !base.is_latin() {
            return Err(AlgebraError::NotAQuasigroup);
        }
        let e = base.identity().ok_or(AlgebraError::NotALoop)?;
        Ok(LoopStructure { base, e })
    }

    pub fn identity_element(&self) -> usize {
        self.e
    }

    pub fn table(&self) -> &CayleyTable {
        &self.base
    }

    pub fn into_table(self) -> CayleyTable {
        self.base
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::keedwell;

    fn keedwell_c5() -> CayleyTable {
        keedwell::keedwell_table(&corpus::cyclic_group(5), 3, 2).unwrap()
    }

    fn keedwell_c11() -> CayleyTable {
        keedwell::keedwell_table(&corpus::cyclic_group(11), 3, 4).unwrap()
    }

    #[test]
    fn validate_classifies_c2() {
        let t = CayleyTable::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        let rep = t.validate();
        assert!(rep.is_quasigroup);
        assert_eq!(rep.identity, Some(0));
    }

    #[test]
    fn validate_spots_constant_columns() {
        let t = CayleyTable::from_rows(vec![vec![0, 0], vec![1, 1]]).unwrap();
        let rep = t.validate();
        assert!(rep.is_groupoid);
        assert!(!rep.is_quasigroup);
        assert_eq!(
            rep.latin_violation,
            Some(LatinViolation::Row {
                row: 0,
                col_a: 0,
                col_b: 1,
                symbol: 0
            })
        );
    }

    #[test]
    fn from_rows_names_bad_positions() {
        assert_eq!(
            CayleyTable::from_rows(vec![vec![0, 1], vec![1]]),
            Err(AlgebraError::RaggedRow {
                row: 1,
                found: 1,
                expected: 2
            })
        );
        assert_eq!(
            CayleyTable::from_rows(vec![vec![0, 2], vec![1, 0]]),
            Err(AlgebraError::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                order: 2
            })
        );
        assert_eq!(
            CayleyTable::from_rows(vec![]),
            Err(AlgebraError::EmptyTable)
        );
    }

    #[test]
    fn keedwell_c5_structure() {
        let t = keedwell_c5();
        let rep = t.validate();
        assert!(rep.is_quasigroup);
        assert_eq!(rep.identity, None);
        assert_eq!(t.mul(2, 3).unwrap(), 2);
        assert!(t.mul(5, 0).is_err());
    }

    #[test]
    fn keedwell_c11_mul() {
        let t = keedwell_c11();
        assert_eq!(t.mul(2, 4).unwrap(), 0);
    }

    #[test]
    fn translations() {
        let c2 = corpus::cyclic_group(2);
        assert_eq!(c2.left_translation(1).unwrap().image(), &[1, 0]);
        // L_e is the identity at any identity element
        assert!(c2.left_translation(0).unwrap().is_identity());
        let t5 = keedwell_c5();
        assert_eq!(t5.right_translation(0).unwrap().image(), &[0, 3, 1, 4, 2]);
        let broken = CayleyTable::from_rows(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(
            broken.left_translation(0),
            Err(AlgebraError::NotAQuasigroup)
        );
    }

    #[test]
    fn loop_inverses_of_c2_are_identity() {
        let maps = corpus::cyclic_group(2).inverse_maps().unwrap();
        assert_eq!(maps.kind, InverseKind::LoopInverse);
        assert!(maps.j_rho.is_identity());
        assert!(maps.j_lambda.is_identity());
    }

    #[test]
    fn keedwell_c11_crossed_inverse_is_six_x() {
        let maps = keedwell_c11().inverse_maps().unwrap();
        assert_eq!(maps.kind, InverseKind::CrossedInverse);
        let expected: Vec<usize> = (0..11).map(|x| 6 * x % 11).collect();
        assert_eq!(maps.j_rho.image(), &expected[..]);
    }

    #[test]
    fn keedwell_c5_crossed_inverse_is_cube_map() {
        // u = (-3)^3 mod 5 = 3, so x^rho = 3x even though the table is
        // unipotent; the identity map does not satisfy the CIP identity here.
        let maps = keedwell_c5().inverse_maps().unwrap();
        assert_eq!(maps.kind, InverseKind::CrossedInverse);
        assert_eq!(maps.j_rho.image(), &[0, 3, 1, 4, 2]);
        assert_eq!(maps.j_lambda, maps.j_rho.inverse());
    }

    #[test]
    fn predicates_on_fixtures() {
        let t5 = keedwell_c5();
        assert!(t5.predicate(Property::Unipotent).holds());
        assert!(t5.predicate(Property::Cip).holds());
        let t11 = keedwell_c11();
        assert_eq!(t11.predicate(Property::Unipotent), PropertyStatus::Fails);
        assert!(t11.predicate(Property::Cip).holds());
        assert!(corpus::cyclic_group(3).predicate(Property::Cip).holds());
        assert!(corpus::cyclic_group(3)
            .predicate(Property::Associative)
            .holds());
        assert_eq!(
            corpus::cyclic_group(3).predicate(Property::Exponent2),
            PropertyStatus::Fails
        );
    }

    #[test]
    fn wip_aip_undefined_without_maps() {
        // order-4 quasigroup with no identity and no crossed inverses
        let t = CayleyTable::from_rows(vec![
            vec![1, 0, 2, 3],
            vec![0, 1, 3, 2],
            vec![2, 3, 1, 0],
            vec![3, 2, 0, 1],
        ])
        .unwrap();
        assert!(t.is_latin());
        assert_eq!(t.identity(), None);
        if t.inverse_maps().is_none() {
            assert_eq!(t.predicate(Property::Wip), PropertyStatus::Undefined);
            assert_eq!(t.predicate(Property::Aip), PropertyStatus::Undefined);
            assert_eq!(t.predicate(Property::Cip), PropertyStatus::Fails);
        } else {
            // if maps exist the table is CIP by construction of the search
            assert!(t.predicate(Property::Cip).holds());
        }
    }

    #[test]
    fn rho_cycle_lengths() {
        let t5 = keedwell_c5();
        assert_eq!(t5.rho_cycle_length(0).unwrap(), 1);
        for x in 1..5 {
            // J_rho = 3x has multiplicative order 4 away from 0
            assert_eq!(t5.rho_cycle_length(x).unwrap(), 4);
        }
        assert_eq!(keedwell_c11().rho_cycle_length(1).unwrap(), 10);
        // any loop: e has cycle length 1
        assert_eq!(corpus::cyclic_group(4).rho_cycle_length(0).unwrap(), 1);
        let broken = CayleyTable::from_rows(vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(broken.rho_cycle_length(0), Err(AlgebraError::NoInverseMaps));
    }

    #[test]
    fn four_cip_identities_agree_on_fixtures() {
        for t in [
            keedwell_c5(),
            keedwell_c11(),
            corpus::cyclic_group(6),
            corpus::symmetric_group_3(),
        ] {
            if let Some(maps) = t.inverse_maps() {
                let ids = cip_identities(&t, &maps);
                assert!(
                    ids.iter().all(|&b| b == ids[0]),
                    "identities disagree on {ids:?}"
                );
            }
        }
    }

    #[test]
    fn counterexamples_witness_failures() {
        let c3 = corpus::cyclic_group(3);
        // exponent 2 fails at 1 + 1 = 2 != 0
        assert_eq!(
            property_counterexample(&c3, Property::Exponent2),
            Some((1, 1))
        );
        assert_eq!(property_counterexample(&c3, Property::Cip), None); // holds
        let s3 = corpus::symmetric_group_3();
        let (x, y) = property_counterexample(&s3, Property::Commutative).unwrap();
        assert_ne!(s3.get(x, y), s3.get(y, x));
        let (x, y) = property_counterexample(&s3, Property::Cip).unwrap();
        let maps = s3.inverse_maps().unwrap();
        assert_ne!(s3.get(s3.get(x, y), maps.j_rho.apply(x)), y);
        let t11 = keedwell_c11();
        let (x, _) = property_counterexample(&t11, Property::Unipotent).unwrap();
        assert_ne!(t11.get(x, x), t11.get(0, 0));
    }

    #[test]
    fn loop_structure_gatekeeps() {
        assert!(LoopStructure::new(corpus::cyclic_group(3)).is_ok());
        assert_eq!(
            LoopStructure::new(keedwell_c5()).unwrap_err(),
            AlgebraError::NotALoop
        );
    }
}

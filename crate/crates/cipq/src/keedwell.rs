//! Keedwell cross-inverse-property quasigroups over abelian groups.
//!
//! The construction: on an abelian group `(G, .)` of order `n` with `n + 1`
//! composite, define `a o b = a^r b^s` where `r s = n + 1`. The result is a
//! CIPQ whose right crossed inverse is `a^u` with `u = (-r)^3 mod n`.

use crate::algebra::{AlgebraError, CayleyTable, Property};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest group order the builders accept.
pub const MAX_GROUP_ORDER: usize = 64;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum KeedwellError {
    #[error("group order {order} exceeds the table limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("cyclic factor {factor} is smaller than 2")]
    FactorTooSmall { factor: usize },
    #[error("spec has no factors")]
    EmptySpec,
    #[error("base table is not an abelian group (commutative, associative, with identity)")]
    NotAbelianGroup,
    #[error("exponents r={r}, s={s} do not satisfy r*s = n+1 = {expected}")]
    BadExponents { r: usize, s: usize, expected: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A direct product of cyclic groups, `C(n1) x ... x C(nk)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianGroupSpec {
    factors: Vec<usize>,
}

impl AbelianGroupSpec {
    pub fn new(factors: Vec<usize>) -> Result<Self, KeedwellError> {
        if factors.is_empty() {
            return Err(KeedwellError::EmptySpec);
        }
        for &f in &factors {
            if f < 2 {
                return Err(KeedwellError::FactorTooSmall { factor: f });
            }
        }
        Ok(AbelianGroupSpec { factors })
    }

    pub fn cyclic(n: usize) -> Result<Self, KeedwellError> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }
}

/// Builds the direct-product table. Elements are mixed-radix indexed, most
/// significant factor first; the identity is 0.
pub fn build_abelian_group(spec: &AbelianGroupSpec) -> Result<CayleyTable, KeedwellError> {
    let n = spec.order();
    if n > MAX_GROUP_ORDER {
        return Err(KeedwellError::OrderTooLarge {
            order: n,
            limit: MAX_GROUP_ORDER,
        });
    }
    let factors = spec.factors();
    let add = |x: usize, y: usize| {
        let (mut x, mut y, mut out, mut base) = (x, y, 0usize, 1usize);
        for &f in factors.iter().rev() {
            out += (x % f + y % f) % f * base;
            base *= f;
            x /= f;
            y /= f;
        }
        out
    };
    Ok(CayleyTable::from_fn(n, add)?)
}

/// Validated Keedwell exponent parameters for order `n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KeedwellParams {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    /// Crossed-inverse exponent, `(-r)^3 mod n`.
    pub u: usize,
    /// The parameter rule `r + s != n`. For cyclic groups this coincides
    /// with the table being non-unipotent.
    pub nonunipotent: bool,
}

impl KeedwellParams {
    pub fn new(n: usize, r: usize, s: usize) -> Result<Self, KeedwellError> {
        if n < 2 || r < 1 || s < 1 || r * s != n + 1 {
            return Err(KeedwellError::BadExponents {
                r,
                s,
                expected: n + 1,
            });
        }
        Ok(KeedwellParams {
            n,
            r,
            s,
            u: crossed_inverse_exponent(r, n),
            nonunipotent: r + s != n,
        })
    }
}

/// `(-r)^3 mod n`, normalized to `0..n-1`.
pub fn crossed_inverse_exponent(r: usize, n: usize) -> usize {
    let rm = r % n;
    let neg_r = (n - rm) % n;
    neg_r * neg_r % n * neg_r % n
}

/// All factorizations `n + 1 = r * s` with `r, s >= 2`, most balanced
/// first (ascending `r + s`, ties by `r`). Empty exactly when `n + 1` is
/// prime. With `require_nonunipotent`, keeps only `r + s != n`.
pub fn find_params(n: usize, require_nonunipotent: bool) -> Vec<KeedwellParams> {
    let target = n + 1;
    let mut out = Vec::new();
    for r in 2..target {
        if !target.is_multiple_of(r) {
            continue;
        }
        let s = target / r;
        if s < 2 {
            continue;
        }
        let p = KeedwellParams::new(n, r, s).expect("factorization is exact");
        if !require_nonunipotent || p.nonunipotent {
            out.push(p);
        }
    }
    out.sort_by_key(|p| (p.r + p.s, p.r));
    out
}

/// `a^k` in `g` by square and multiply; `g` must be a group with identity 0.
pub fn group_power(g: &CayleyTable, a: usize, k: usize) -> usize {
    let mut acc = g.identity().unwrap_or(0);
    let mut base = a;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = g.get(acc, base);
        }
        base = g.get(base, base);
        k >>= 1;
    }
    acc
}

/// The Keedwell table `a o b = a^r b^s` over an abelian group `g`.
/// Requires `g` commutative and associative with an identity, and
/// `r * s = |g| + 1` exactly.
pub fn keedwell_table(g: &CayleyTable, r: usize, s: usize) -> Result<CayleyTable, KeedwellError> {
    let n = g.order();
    if !(g.is_latin()
        && g.identity().is_some()
        && g.predicate(Property::Commutative).holds()
        && g.predicate(Property::Associative).holds())
    {
        return Err(KeedwellError::NotAbelianGroup);
    }
    if r < 1 || s < 1 || r * s != n + 1 {
        return Err(KeedwellError::BadExponents {
            r,
            s,
            expected: n + 1,
        });
    }
    let pow_r: Vec<usize> = (0..n).map(|a| group_power(g, a, r)).collect();
    let pow_s: Vec<usize> = (0..n).map(|b| group_power(g, b, s)).collect();
    Ok(CayleyTable::from_fn(n, |a, b| g.get(pow_r[a], pow_s[b]))?)
}

/// All abelian groups of order `n` up to isomorphism, as direct products of
/// prime-power cyclic factors (largest factors first).
pub fn abelian_groups_of_order(n: usize) -> Vec<AbelianGroupSpec> {
    assert!(n >= 2);
    // factor n
    let mut rest = n;
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut k = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            primes.push((p, k));
        }
        p += 1;
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    // partitions of each exponent give the p-primary components
    let mut specs: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, k) in primes {
        let mut next = Vec::new();
        for part in partitions(k) {
            for spec in &specs {
                let mut s = spec.clone();
                for e in &part {
                    s.push(p.pow(*e as u32));
                }
                next.push(s);
            }
        }
        specs = next;
    }
    specs
        .into_iter()
        .map(|mut f| {
            f.sort_unstable_by(|a, b| b.cmp(a));
            AbelianGroupSpec::new(f).expect("factors are at least 2")
        })
        .collect()
}

fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for next in (1..=k.min(max)).rev() {
            cur.push(next);
            rec(k - next, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cip_identities, InverseKind, PropertyStatus};
    use crate::corpus;
    use crate::morphism::{is_automorphism, Permutation};

    #[test]
    fn abelian_group_fixtures() {
        let c2 = build_abelian_group(&AbelianGroupSpec::cyclic(2).unwrap()).unwrap();
        assert_eq!(c2.rows(), vec![vec![0, 1], vec![1, 0]]);
        let k4 = build_abelian_group(&AbelianGroupSpec::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(k4, corpus::klein_four());
        assert!(k4.predicate(Property::Exponent2).holds());
        let c11 = build_abelian_group(&AbelianGroupSpec::cyclic(11).unwrap()).unwrap();
        assert_eq!(c11, corpus::cyclic_group(11));
        assert_eq!(
            build_abelian_group(&AbelianGroupSpec::cyclic(65).unwrap()),
            Err(KeedwellError::OrderTooLarge {
                order: 65,
                limit: 64
            })
        );
        assert!(AbelianGroupSpec::new(vec![2, 1]).is_err());
    }

    #[test]
    fn find_params_fixtures() {
        let p5 = find_params(5, false);
        assert_eq!(
            p5.iter().map(|p| (p.r, p.s, p.u)).collect::<Vec<_>>(),
            vec![(2, 3, 2), (3, 2, 3)]
        );
        assert!(p5.iter().all(|p| !p.nonunipotent));
        assert!(find_params(5, true).is_empty());

        let p11 = find_params(11, false);
        assert_eq!(
            p11.iter().map(|p| (p.r, p.s, p.u)).collect::<Vec<_>>(),
            vec![(3, 4, 6), (4, 3, 2), (2, 6, 3), (6, 2, 4)]
        );
        assert!(p11.iter().all(|p| p.nonunipotent));

        assert!(find_params(4, false).is_empty()); // 5 is prime
    }

    #[test]
    fn crossed_inverse_exponent_fixtures() {
        assert_eq!(crossed_inverse_exponent(3, 5), 3);
        assert_eq!(crossed_inverse_exponent(3, 11), 6);
        // -r = 1 cases
        assert_eq!(crossed_inverse_exponent(4, 5), 1);
        assert_eq!(crossed_inverse_exponent(10, 11), 1);
    }

    #[test]
    fn keedwell_table_matches_additive_model() {
        let t = keedwell_table(&corpus::cyclic_group(5), 3, 2).unwrap();
        assert_eq!(t.get(1, 0), 3);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(t.get(a, b), (3 * a + 2 * b) % 5);
            }
        }
        let t11 = keedwell_table(&corpus::cyclic_group(11), 3, 4).unwrap();
        for a in 0..11 {
            for b in 0..11 {
                assert_eq!(t11.get(a, b), (3 * a + 4 * b) % 11);
            }
        }
        assert!(t11.predicate(Property::Cip).holds());
    }

    #[test]
    fn exponent_one_collapses_to_the_group() {
        let c5 = corpus::cyclic_group(5);
        let t = keedwell_table(&c5, 1, 6).unwrap();
        assert_eq!(t, c5);
    }

    #[test]
    fn keedwell_table_rejects_bad_input() {
        let s3 = corpus::symmetric_group_3();
        assert_eq!(
            keedwell_table(&s3, 7, 1),
            Err(KeedwellError::NotAbelianGroup)
        );
        assert_eq!(
            keedwell_table(&corpus::cyclic_group(5), 2, 2),
            Err(KeedwellError::BadExponents {
                r: 2,
                s: 2,
                expected: 6
            })
        );
    }

    #[test]
    fn sweep_properties_hold_on_non_cyclic_groups() {
        // C3 x C3 with (2,5): J_rho = I on a non-unipotent table
        let g9 = build_abelian_group(&AbelianGroupSpec::new(vec![3, 3]).unwrap()).unwrap();
        let t9 = keedwell_table(&g9, 2, 5).unwrap();
        let maps = t9.inverse_maps().unwrap();
        assert_eq!(maps.kind, InverseKind::CrossedInverse);
        assert!(maps.j_rho.is_identity());
        assert_eq!(t9.predicate(Property::Unipotent), PropertyStatus::Fails);
        assert!(t9.predicate(Property::Cip).holds());

        // C2^3 with (3,3): unipotent although r + s != n
        let g8 = build_abelian_group(&AbelianGroupSpec::new(vec![2, 2, 2]).unwrap()).unwrap();
        let t8 = keedwell_table(&g8, 3, 3).unwrap();
        assert!(t8.predicate(Property::Unipotent).holds());
        assert!(t8.predicate(Property::Cip).holds());
    }

    #[test]
    fn crossed_inverse_matches_power_map_over_all_abelian_groups() {
        for n in 2..=24usize {
            if find_params(n, false).is_empty() {
                continue;
            }
            for spec in abelian_groups_of_order(n) {
                let g = build_abelian_group(&spec).unwrap();
                for p in find_params(n, false) {
                    let t = keedwell_table(&g, p.r, p.s).unwrap();
                    assert!(t.is_latin());
                    let maps = t.inverse_maps().expect("keedwell tables are CIP");
                    assert!(cip_identities(&t, &maps).iter().all(|&b| b));
                    let power_map: Vec<usize> = (0..n).map(|x| group_power(&g, x, p.u)).collect();
                    assert_eq!(
                        maps.j_rho.image(),
                        &power_map[..],
                        "n={n} spec={spec:?} r={} s={}",
                        p.r,
                        p.s
                    );
                    // J_rho is an automorphism of the constructed table
                    let jr = Permutation::from_image(power_map).unwrap();
                    assert!(is_automorphism(&t, &jr).unwrap());
                }
            }
        }
    }

    #[test]
    fn abelian_group_enumeration_counts() {
        assert_eq!(abelian_groups_of_order(8).len(), 3);
        assert_eq!(abelian_groups_of_order(12).len(), 2);
        assert_eq!(abelian_groups_of_order(16).len(), 5);
        assert_eq!(abelian_groups_of_order(11).len(), 1);
        assert_eq!(abelian_groups_of_order(36).len(), 4);
    }
}

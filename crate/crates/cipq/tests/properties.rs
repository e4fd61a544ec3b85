//! Property tests over randomized tables: structural invariants that must
//! hold for every quasigroup, not just the fixtures.

use cipq::algebra::{aip_identities, cip_identities, wip_identities, CayleyTable, Property};
use cipq::corpus;
use cipq::crypto;
use cipq::files;
use cipq::keedwell::{build_abelian_group, find_params, keedwell_table, AbelianGroupSpec};
use cipq::morphism::{self, Permutation};
use proptest::prelude::*;

/// A permutation of `0..n` from proptest's shuffle.
fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|image| Permutation::from_image(image).expect("shuffled range"))
}

/// Random quasigroups as isotopes of cyclic groups: relabel the rows,
/// columns and symbols of `C_n` independently. Always a Latin square.
fn quasigroup_strategy(max_n: usize) -> impl Strategy<Value = CayleyTable> {
    (2..=max_n).prop_flat_map(|n| {
        (perm_strategy(n), perm_strategy(n), perm_strategy(n)).prop_map(move |(rp, cp, sp)| {
            let base = corpus::cyclic_group(n);
            CayleyTable::from_fn(n, |x, y| sp.apply(base.get(rp.apply(x), cp.apply(y))))
                .expect("isotope of a latin square")
        })
    })
}

proptest! {
    #[test]
    fn translations_are_bijections(q in quasigroup_strategy(8)) {
        for x in 0..q.order() {
            // from_image inside the translation constructors enforces bijectivity
            q.left_translation(x).expect("row of a latin square");
            q.right_translation(x).expect("column of a latin square");
        }
    }

    #[test]
    fn four_cip_identities_agree(q in quasigroup_strategy(8)) {
        if let Some(maps) = q.inverse_maps() {
            let ids = cip_identities(&q, &maps);
            prop_assert!(ids.iter().all(|&b| b == ids[0]), "identities split: {ids:?}");
            // and the two J maps are mutually inverse
            prop_assert_eq!(maps.j_lambda.clone(), maps.j_rho.inverse());
        }
    }

    #[test]
    fn automorphism_groups_match_brute_force(q in quasigroup_strategy(5)) {
        use itertools::Itertools;
        let n = q.order();
        let enumerated = morphism::automorphism_group(&q).unwrap();
        let brute: Vec<Permutation> = (0..n)
            .permutations(n)
            .map(|image| Permutation::from_image(image).unwrap())
            .filter(|p| morphism::is_automorphism(&q, p).unwrap())
            .collect();
        prop_assert_eq!(enumerated.elements(), &brute[..]);
    }

    #[test]
    fn isomorphism_witnesses_invert(q in quasigroup_strategy(6), seed in any::<u64>()) {
        let n = q.order();
        let mut image: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            image.swap(i, (state >> 33) as usize % (i + 1));
        }
        let p = Permutation::from_image(image).unwrap();
        let relabeled = CayleyTable::from_fn(n, |x, y| {
            p.apply(q.get(p.inverse().apply(x), p.inverse().apply(y)))
        })
        .unwrap();
        let w = morphism::find_isomorphism(&q, &relabeled).expect("isomorphic by construction");
        let back = w.inverse();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(
                    back.apply(relabeled.get(x, y)),
                    q.get(back.apply(x), back.apply(y))
                );
            }
        }
    }

    #[test]
    fn table_json_round_trips(q in quasigroup_strategy(8)) {
        let json = files::table_to_json(&q);
        prop_assert_eq!(files::table_from_json(&json).unwrap(), q);
    }

    #[test]
    fn byte_coding_round_trips(data in proptest::collection::vec(any::<u8>(), 0..600),
                               n in 2usize..=64) {
        let symbols = crypto::encode_bytes(&data, n).unwrap();
        prop_assert_eq!(symbols.len(), crypto::symbol_count(n, data.len()));
        let back = crypto::decode_symbols(&symbols, n, data.len()).unwrap();
        prop_assert_eq!(back, data);
    }
}

#[test]
fn keedwell_tables_over_every_abelian_group_up_to_24_are_cipq() {
    for n in 2..=24usize {
        let params = find_params(n, false);
        if params.is_empty() {
            continue;
        }
        for spec in cipq::keedwell::abelian_groups_of_order(n) {
            let g = build_abelian_group(&spec).unwrap();
            for p in &params {
                let t = keedwell_table(&g, p.r, p.s).unwrap();
                assert!(t.predicate(Property::Cip).holds(), "n={n} spec={spec:?}");
            }
        }
    }
}

#[test]
fn group_corpus_cip_iff_commutative() {
    let mut tables: Vec<CayleyTable> = (2..=8).map(corpus::cyclic_group).collect();
    tables.push(corpus::klein_four());
    tables.push(corpus::symmetric_group_3());
    tables.push(build_abelian_group(&AbelianGroupSpec::new(vec![2, 4]).unwrap()).unwrap());
    for t in tables {
        assert_eq!(
            t.predicate(Property::Cip).holds(),
            t.predicate(Property::Commutative).holds(),
            "on a group of order {}",
            t.order()
        );
    }
}

#[test]
fn wip_and_aip_forms_agree_on_all_loops_up_to_five() {
    for n in 1..=5 {
        for l in corpus::loops_of_order(n) {
            let maps = l.inverse_maps().unwrap();
            let (w1, w2) = wip_identities(&l, &maps);
            let (a1, a2) = aip_identities(&l, &maps);
            assert_eq!(w1, w2, "wip forms disagree at order {n}");
            assert_eq!(a1, a2, "aip forms disagree at order {n}");
        }
    }
}

//! Acceptance suite. Each numbered test pins one acceptance check with
//! exact tolerances and prints a single `[acceptance N] ... PASS/FAIL`
//! line (visible with `cargo test -p cipq --test acceptance -- --nocapture`).
//!
//! Check 2 (the unipotence boundary) asserts a commonly stated claim
//! exactly as made: `r+s = n <=> unipotent <=> J_rho = I`, with
//! `J_rho != I` away from the boundary. The sweep itself refutes that
//! chain — `J_rho = x^u` with `u = (-r)^3 mod n` forces `J_rho = I`
//! exactly when `r^3 = -1 (mod n)`, which is neither implied by nor
//! implies `r + s = n` — so the test fails and prints the counterexamples
//! rather than weakening the claim. The same findings are exposed by
//! `cipq verify --suite keedwell`.

use cipq::algebra::Property;
use cipq::corpus;
use cipq::crypto::{self, KeyBundle};
use cipq::isotopy::IsotopyKey;
use cipq::keedwell::{keedwell_table, AbelianGroupSpec, KeedwellParams};
use cipq::morphism::{self, Permutation};
use cipq::verify;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

fn report(number: u8, what: &str, pass: bool, detail: &str) -> bool {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("[acceptance {number}] {what}: {verdict} ({detail})");
    pass
}

#[test]
fn acceptance_01_keedwell_sweep_construction() {
    let start = Instant::now();
    let rep = verify::keedwell_sweep(40);
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(10);
    let pass = rep.construction_ok() && in_time;
    assert!(
        report(
            1,
            "keedwell sweep n<=40: latin + four CIP identities + x^rho = x^u",
            pass,
            &format!("{} cases in {elapsed:.2?}", rep.cases.len()),
        ),
        "construction_ok={} in_time={in_time}",
        rep.construction_ok()
    );
}

#[test]
fn acceptance_02_unipotence_boundary() {
    let rep = verify::keedwell_sweep(40);
    let violations: Vec<String> = rep
        .cases
        .iter()
        .filter(|c| !c.boundary_ok())
        .map(|c| {
            format!(
                "(n={}, r={}, s={}): r+s=n {}, unipotent {}, J_rho=I {}",
                c.n, c.r, c.s, c.boundary, c.unipotent, c.j_rho_trivial
            )
        })
        .collect();
    let pass = report(
        2,
        "unipotence boundary: r+s=n <=> unipotent <=> J_rho=I, J_rho an automorphism",
        rep.boundary_ok(),
        &format!("{} violations", violations.len()),
    );
    assert!(
        pass,
        "the boundary chain fails on the sweep itself; counterexamples:\n  {}\n\
         (J_rho equals the u-power map, so it is trivial exactly when r^3 = -1 mod n)",
        violations.join("\n  ")
    );
}

#[test]
fn acceptance_03_fixture_tables() {
    let start = Instant::now();
    let c5 = keedwell_table(&corpus::cyclic_group(5), 3, 2).unwrap();
    let c11 = keedwell_table(&corpus::cyclic_group(11), 3, 4).unwrap();
    let p11 = KeedwellParams::new(11, 3, 4).unwrap();
    let pass = c5.predicate(Property::Unipotent).holds()
        && c5.predicate(Property::Cip).holds()
        && c5.identity().is_none()
        && p11.nonunipotent
        && !c11.predicate(Property::Unipotent).holds()
        && c11.predicate(Property::Cip).holds();
    let elapsed = start.elapsed();
    assert!(report(
        3,
        "fixtures: C5 (3,2) unipotent CIPQ; C11 (3,4) non-unipotent CIPQ",
        pass && elapsed < Duration::from_secs(1),
        &format!("{elapsed:.2?}"),
    ));
}

#[test]
fn acceptance_04_holomorph_biconditional() {
    let start = Instant::now();
    let rep = verify::holomorph_suite(5);
    let elapsed = start.elapsed();
    let in_time = elapsed < Duration::from_secs(300);
    let pass = rep.passed() && in_time;
    assert!(
        report(
            4,
            "H(L) CIP/AIP <=> AUM(L)={I} and L CIP/AIP over all loops of order <= 5, \
             with isomorphism/flexible/unipotent/exponent-2/triples on premise cases",
            pass,
            &format!(
                "{} loops, {} premise cases, {elapsed:.2?}",
                rep.loops_checked, rep.premise_cases
            ),
        ),
        "failures: {:#?}",
        rep.failures
    );
}

#[test]
fn acceptance_05_osborn_identity() {
    let rep = verify::osborn_suite(5);
    assert!(
        report(
            5,
            "CIP <=> WIP and AIP over all loops of order <= 5",
            rep.passed(),
            &format!("{} loops", rep.loops_checked),
        ),
        "failures: {:#?}",
        rep.failures
    );
}

#[test]
fn acceptance_06_isotopy_transfer() {
    let start = Instant::now();
    let rep = verify::isotopy_suite(verify::DEFAULT_ISOTOPY_TRIALS, verify::DEFAULT_ISOTOPY_SEED);
    let elapsed = start.elapsed();
    for f in &rep.findings {
        println!("    finding: {f}");
    }
    let in_time = elapsed < Duration::from_secs(30);
    let pass = rep.passed() && rep.trials == 100 && in_time;
    assert!(
        report(
            6,
            "isotopy transfer on Keedwell C11: 100 keys, quasigroup + relation exhaustive, \
             CIP transfer on hypothesis-passing keys, all-fail hypothesis reported",
            pass,
            &format!(
                "passes={}, conjugate-missing={}, elementwise={}, v-cip={}, {elapsed:.2?}",
                rep.hypothesis_passes,
                rep.conjugate_missing,
                rep.elementwise_mismatch,
                rep.v_cip_count
            ),
        ),
        "report: {rep:#?}"
    );
}

fn bundle_11() -> KeyBundle {
    let u = keedwell_table(&corpus::cyclic_group(11), 3, 4).unwrap();
    let aum = morphism::automorphism_group(&u).unwrap();
    let beta = Permutation::from_image((0..11).map(|x| 6 * x % 11).collect()).unwrap();
    let psi = Permutation::from_image(vec![5, 2, 9, 0, 7, 4, 1, 10, 3, 8, 6]).unwrap();
    let isokey = IsotopyKey::with_identity_alpha(beta, psi, &aum).unwrap();
    KeyBundle::new(
        KeedwellParams::new(11, 3, 4).unwrap(),
        AbelianGroupSpec::cyclic(11).unwrap(),
        2,
        isokey,
    )
    .unwrap()
}

fn bundle_23() -> KeyBundle {
    let u = keedwell_table(&corpus::cyclic_group(23), 3, 8).unwrap();
    let beta = Permutation::from_image((0..23).map(|x| 2 * x % 23).collect()).unwrap();
    let alpha = Permutation::from_image((0..23).map(|x| 5 * x % 23).collect()).unwrap();
    let mut image: Vec<usize> = (0..23).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in (1..23).rev() {
        let j = rng.random_range(0..=i);
        image.swap(i, j);
    }
    let psi = Permutation::from_image(image).unwrap();
    let isokey = IsotopyKey::for_table(alpha, beta, psi, &u).unwrap();
    KeyBundle::new(
        KeedwellParams::new(23, 3, 8).unwrap(),
        AbelianGroupSpec::cyclic(23).unwrap(),
        7,
        isokey,
    )
    .unwrap()
}

#[test]
fn acceptance_07_end_to_end_round_trip() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let mut payloads = 0usize;
    let mut max_len = 0usize;
    for bundle in [bundle_11(), bundle_23()] {
        // length scale chosen log-uniformly so the 64 KiB ceiling is hit
        // without making every payload huge
        for i in 0..525 {
            let len = if i == 0 {
                65536
            } else {
                let scale: f64 = rng.random_range(0.0..16.0);
                (2f64.powf(scale) as usize).min(65536)
            };
            let data: Vec<u8> = (0..len).map(|_| rng.random()).collect();
            let env = crypto::encrypt(&bundle, &data).unwrap();
            let back = crypto::decrypt(&bundle, &env).unwrap();
            assert_eq!(back, data, "round trip mismatch at n={}", bundle.alphabet());
            payloads += 1;
            max_len = max_len.max(len);
        }
    }
    let elapsed = start.elapsed();
    assert!(report(
        7,
        "decrypt(encrypt(d)) = d, byte-exact, two bundles (n=11, n=23)",
        payloads >= 1000 && max_len == 65536 && elapsed < Duration::from_secs(30),
        &format!("{payloads} payloads, max {max_len} bytes, {elapsed:.2?}"),
    ));
}

#[test]
fn acceptance_08_group_sanity() {
    let mut tables: Vec<(String, cipq::CayleyTable)> = (2..=8)
        .map(|n| (format!("C{n}"), corpus::cyclic_group(n)))
        .collect();
    tables.push(("klein".into(), corpus::klein_four()));
    tables.push(("S3".into(), corpus::symmetric_group_3()));
    let mut ok = true;
    for (name, t) in &tables {
        let cip = t.predicate(Property::Cip).holds();
        let comm = t.predicate(Property::Commutative).holds();
        if cip != comm {
            ok = false;
            println!("    {name}: cip={cip} commutative={comm}");
        }
    }
    assert!(report(
        8,
        "group corpus: CIP <=> commutative",
        ok,
        &format!("{} groups", tables.len()),
    ));
}

#[test]
fn acceptance_09_oracle_equivalence() {
    use itertools::Itertools;
    let mut tables: Vec<cipq::CayleyTable> = (2..=6).map(corpus::cyclic_group).collect();
    tables.push(corpus::klein_four());
    tables.push(corpus::symmetric_group_3());
    tables.push(keedwell_table(&corpus::cyclic_group(5), 3, 2).unwrap());
    tables.push(keedwell_table(&corpus::cyclic_group(5), 2, 3).unwrap());
    tables.extend(corpus::loops_of_order(4));
    let mut checked = 0usize;
    let mut ok = true;
    for t in &tables {
        let n = t.order();
        let enumerated = morphism::automorphism_group(t).unwrap();
        let brute: Vec<Permutation> = (0..n)
            .permutations(n)
            .map(|image| Permutation::from_image(image).unwrap())
            .filter(|p| morphism::is_automorphism(t, p).unwrap())
            .collect();
        if enumerated.elements() != &brute[..] {
            ok = false;
        }
        checked += 1;
    }
    assert!(report(
        9,
        "automorphism enumeration agrees with the n! brute-force filter (n <= 6)",
        ok,
        &format!("{checked} tables"),
    ));
}

#[test]
fn supplementary_wrong_key_rejection() {
    // not a numbered check: perturbed keys must fail to decrypt
    // correctly in at least 99 of 100 trials
    let bundle = bundle_11();
    let mut rng = ChaCha8Rng::seed_from_u64(0xBAD);
    let data: Vec<u8> = (0..256).map(|_| rng.random()).collect();
    let env = crypto::encrypt(&bundle, &data).unwrap();
    let mut accidental = 0usize;
    for trial in 0..100usize {
        let wrong = if trial % 2 == 0 {
            // perturb y
            let y = (bundle.y() + 1 + trial % 10) % 11;
            KeyBundle::new(
                *bundle.params(),
                bundle.group().clone(),
                y,
                bundle.isokey().clone(),
            )
            .unwrap()
        } else {
            // perturb psi by a random transposition
            let mut image: Vec<usize> = bundle.isokey().psi().image().to_vec();
            let a = rng.random_range(0..11);
            let mut b = rng.random_range(0..11);
            if a == b {
                b = (b + 1) % 11;
            }
            image.swap(a, b);
            let psi = Permutation::from_image(image).unwrap();
            let key = IsotopyKey::for_table(
                bundle.isokey().alpha().clone(),
                bundle.isokey().beta().clone(),
                psi,
                &bundle.table().unwrap(),
            )
            .unwrap();
            KeyBundle::new(*bundle.params(), bundle.group().clone(), bundle.y(), key).unwrap()
        };
        if let Ok(back) = crypto::decrypt(&wrong, &env) {
            if back == data {
                accidental += 1;
            }
        }
    }
    println!("[acceptance supplementary] wrong-key rejection: {accidental}/100 accidental matches");
    assert!(accidental <= 1);
}

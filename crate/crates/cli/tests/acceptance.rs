//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`).

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;

use gitq_cli::{example_table, run_matrix, OutputFormat, RunConfig, VerifyOptions};
use gitq_core::deodhar::{
    appendix_identity, build_matrix, diagonal_product, factorization_certificate,
    interval_condition, restrict_determinant_oracle, BlockStructure,
};
use gitq_core::poly::{determinant, determinant_fraction_free, Monomial, SparsePoly, VarId};
use gitq_core::quotient::{build_coordinates, independence_check, segre_consistency};
use gitq_core::rng::SplitMix64;
use gitq_core::tableau::{
    build_gamma, enumerate_invariant, extract_degree_one, invariant_count_formula,
    is_invariant_member, sequences_of_gamma, SearchLimits, SequenceFamily,
};
use gitq_core::weyl::{
    coset_length, v_max, verify_extremality, w_min, ExtremalityVerdict, GrassmannianContext,
    ParamM,
};

const SEED: u64 = 20240;

fn report(criterion: usize, desc: &str, ok: bool) {
    println!(
        "criterion {criterion}: {} — {desc}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {desc}");
}

fn ctx(r: usize, q: usize) -> GrassmannianContext {
    GrassmannianContext::new(r, q).unwrap()
}

fn param(values: &[usize], c: &GrassmannianContext) -> ParamM {
    ParamM::new(values.to_vec(), c).unwrap()
}

/// The parameter suite exercised by the certificate-level criteria.
fn suite() -> Vec<(GrassmannianContext, ParamM)> {
    let mut cases = Vec::new();
    let c7 = ctx(2, 3);
    for m1 in 1..=3 {
        cases.push((c7, param(&[m1], &c7)));
    }
    let c10 = ctx(3, 3);
    for m1 in 1..=3 {
        for m2 in 1..=3 {
            cases.push((c10, param(&[m1, m2], &c10)));
        }
    }
    let c13 = ctx(4, 3);
    cases.push((c13, param(&[2, 2, 2], &c13)));
    let c11 = ctx(2, 5);
    for m1 in 1..=5 {
        cases.push((c11, param(&[m1], &c11)));
    }
    cases
}

#[test]
fn criterion_01_example_table() {
    let start = Instant::now();
    let rows = example_table().unwrap();
    let expected = [
        "m=(3,3): point, 1 section",
        "m=(2,3): P^1, O(2), 3 sections",
        "m=(3,2): P^1, O(1), 2 sections",
        "m=(1,3): P^2, O(2), 6 sections",
        "m=(2,2): P^1 x P^1, O(2) ⊠ O(1), 6 sections",
        "m=(3,1): P^2, O(1), 3 sections",
        "m=(1,2): P^2 x P^1, O(2) ⊠ O(1), 12 sections",
        "m=(2,1): P^1 x P^2, O(2) ⊠ O(1), 9 sections",
        "m=(1,1): P^2 x P^2, O(2) ⊠ O(1), 18 sections",
    ];
    let expected_counts: [u128; 9] = [1, 3, 2, 6, 6, 3, 12, 9, 18];
    let mut ok = rows.len() == 9;
    for (i, row) in rows.iter().enumerate() {
        ok &= row.display == expected[i];
        ok &= row.sections_formula == expected_counts[i];
        ok &= row.sections_enumerated as u128 == expected_counts[i];
    }
    ok &= start.elapsed().as_secs() < 5;
    report(1, "nine-case table with section counts two ways", ok);
}

#[test]
fn criterion_02_matrix_golden() {
    let cfg = RunConfig::new(
        Some(10),
        Some(3),
        None,
        vec![2, 2],
        VerifyOptions::default(),
        None,
    )
    .unwrap();
    let rendered = format!("{}\n", run_matrix(&cfg, OutputFormat::Text).unwrap());
    let golden = include_str!("golden/matrix_10_3_m22.txt");
    let mut ok = rendered == golden;

    // Entry-by-entry polynomial equality against the parsed golden file.
    let mat = build_matrix(&cfg.m, &cfg.ctx);
    let parsed = gitq_cli::parse_matrix_text(golden.trim_end()).unwrap();
    ok &= parsed.len() == 10;
    for (l, row) in parsed.iter().enumerate() {
        for (j, poly) in row.iter().enumerate() {
            ok &= poly == mat.entry(l + 1, j + 1);
        }
    }
    report(2, "chart matrix for (10,3,3), m=(2,2) matches golden", ok);
}

#[test]
fn criterion_03_factorization_identity() {
    let start = Instant::now();
    let limits = SearchLimits::default();
    let mut certificates = 0usize;
    let mut ok = true;
    for (c, m) in suite() {
        let mat = build_matrix(&m, &c);
        let tabs = enumerate_invariant(&m, &c, 1, &limits).unwrap();
        ok &= !tabs.is_empty();
        for tab in &tabs {
            match factorization_certificate(&mat, tab) {
                Ok(cert) => {
                    ok &= cert.restriction == cert.common.mul(&cert.noncommon);
                    certificates += 1;
                }
                Err(_) => ok = false,
            }
        }
    }
    ok &= start.elapsed().as_secs() < 60;
    report(
        3,
        &format!("restriction = common * cofactor for {certificates} tableaux"),
        ok,
    );
}

#[test]
fn criterion_04_product_of_diagonals() {
    let limits = SearchLimits::default();
    let mut rows_checked = 0usize;
    let mut ok = true;
    for (c, m) in suite() {
        let mat = build_matrix(&m, &c);
        for tab in enumerate_invariant(&m, &c, 1, &limits).unwrap() {
            for row in tab.rows() {
                ok &= interval_condition(row, &m, &c);
                let det = restrict_determinant_oracle(&mat, row).unwrap();
                let diag = diagonal_product(&mat, row).unwrap();
                ok &= det == diag;
                rows_checked += 1;
            }
        }
    }
    report(
        4,
        &format!("cofactor determinant = diagonal product on {rows_checked} rows"),
        ok,
    );
}

#[test]
fn criterion_05_bijection_and_counts() {
    let limits = SearchLimits::default();
    let mut ok = true;
    for (c, m) in suite() {
        let tabs = enumerate_invariant(&m, &c, 1, &limits).unwrap();
        ok &= tabs.len() as u128 == invariant_count_formula(&m, &c);
        let families = SequenceFamily::enumerate_all(&m, &c);
        ok &= families.len() == tabs.len();
        for tab in &tabs {
            let fam = sequences_of_gamma(tab, &m, &c).unwrap();
            ok &= build_gamma(&fam, &m, &c).unwrap() == *tab;
        }
        for fam in &families {
            let tab = build_gamma(fam, &m, &c).unwrap();
            ok &= sequences_of_gamma(&tab, &m, &c).unwrap() == *fam;
        }
    }
    report(5, "sequence-family bijection and binomial counts", ok);
}

#[test]
fn criterion_06_degree_one_generation() {
    let limits = SearchLimits::default();
    let mut cases: Vec<(GrassmannianContext, ParamM)> = Vec::new();
    let c7 = ctx(2, 3);
    for m1 in 1..=3 {
        cases.push((c7, param(&[m1], &c7)));
    }
    let c10 = ctx(3, 3);
    cases.push((c10, param(&[2, 2], &c10)));

    let mut ok = true;
    let mut factored = 0usize;
    for (c, m) in cases {
        for k in [2usize, 3] {
            let predicted: u128 = (1..c.r)
                .map(|j| {
                    gitq_core::weyl::binomial_usize(c.q - m.m(j) + k * (c.r - j), k * (c.r - j))
                })
                .product();
            if predicted > 100_000 {
                continue;
            }
            for tab in enumerate_invariant(&m, &c, k, &limits).unwrap() {
                let mut rest = tab.clone();
                let mut degree = k;
                while degree >= 2 {
                    let (one, remainder) = extract_degree_one(&rest, &c).unwrap();
                    ok &= is_invariant_member(&one, &m, &c).unwrap();
                    ok &= is_invariant_member(&remainder, &m, &c).unwrap();
                    let mut combined = one.rows().to_vec();
                    combined.extend(remainder.rows().iter().cloned());
                    combined.sort();
                    let mut original = rest.rows().to_vec();
                    original.sort();
                    ok &= combined == original;
                    rest = remainder;
                    degree -= 1;
                }
                factored += 1;
            }
        }
    }
    report(
        6,
        &format!("{factored} higher-degree tableaux factor into degree-1 members"),
        ok,
    );
}

#[test]
fn criterion_07_weyl_extremality() {
    let mut ok = true;
    let mut contexts = 0usize;
    for r in 2..=11 {
        for q in 1..=5 {
            let n = q * r + 1;
            if n > 12 {
                continue;
            }
            let c = ctx(r, q);
            ok &= verify_extremality(&c, 1_000_000).unwrap() == ExtremalityVerdict::Confirmed;
            ok &= coset_length(&w_min(&c)) == coset_length(&v_max(&c)) + c.n - 1;
            contexts += 1;
        }
    }
    ok &= contexts >= 10;
    report(
        7,
        &format!("unique extremal representatives over {contexts} contexts with n <= 12"),
        ok,
    );
}

#[test]
fn criterion_08_independence_and_segre() {
    let limits = SearchLimits::default();
    let mut ok = true;
    for (c, m) in suite() {
        let sys = build_coordinates(&m, &c);
        let ind = independence_check(&sys, 3, SEED).unwrap();
        ok &= ind.passed;
        let segre = segre_consistency(&m, &c, &limits).unwrap();
        ok &= segre.passed();
    }
    report(8, "full Jacobian rank and Segre section basis in every case", ok);
}

#[test]
fn criterion_09_appendix_identity() {
    let limits = SearchLimits::default();
    let mut ok = true;
    let mut from_tableaux = 0usize;

    for (c, m) in suite() {
        for tab in enumerate_invariant(&m, &c, 1, &limits).unwrap() {
            let fam = sequences_of_gamma(&tab, &m, &c).unwrap();
            for j in 1..c.r {
                let blocks = BlockStructure::of_sequence(fam.seq(j)).unwrap();
                ok &= appendix_identity(&blocks, j, &m, &c).unwrap();
                from_tableaux += 1;
            }
        }
    }

    // 100 randomized block structures with r - j <= 5, q <= 6.
    let mut rng = SplitMix64::new(SEED);
    let mut randomized = 0usize;
    while randomized < 100 {
        let d = rng.range(1, 5) as usize;
        let q = rng.range(1, 6) as usize;
        let j = rng.range(1, 3) as usize;
        let c = match GrassmannianContext::new(d + j, q) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let mj = rng.range(1, q as u64) as usize;
        let mut mv = vec![1usize; c.r - 1];
        mv[j - 1] = mj;
        let m = param(&mv, &c);
        let span = q + 1 - mj;
        let y = rng.range(1, span.min(d) as u64) as usize;
        let mut pool: Vec<usize> = (1..d).collect();
        for i in (1..pool.len()).rev() {
            let k = rng.below(i as u64 + 1) as usize;
            pool.swap(i, k);
        }
        let mut ends: Vec<usize> = pool.into_iter().take(y - 1).collect();
        ends.push(d);
        ends.sort_unstable();
        ends.dedup();
        let mut vals: Vec<usize> = (mj + 1..=q + 1).collect();
        for i in (1..vals.len()).rev() {
            let k = rng.below(i as u64 + 1) as usize;
            vals.swap(i, k);
        }
        let mut vals: Vec<usize> = vals.into_iter().take(ends.len()).collect();
        vals.sort_unstable();
        let blocks = BlockStructure::new(ends, vals).unwrap();
        ok &= appendix_identity(&blocks, j, &m, &c).unwrap();
        randomized += 1;
    }

    report(
        9,
        &format!("monomial identity on {from_tableaux} tableau blocks + {randomized} random"),
        ok,
    );
}

fn random_poly(rng: &mut SplitMix64) -> SparsePoly {
    let nterms = rng.range(0, 4);
    let mut p = SparsePoly::zero();
    for _ in 0..nterms {
        let nvars = rng.range(0, 3);
        let mut powers = Vec::new();
        for _ in 0..nvars {
            let idx = rng.range(1, 4) as usize;
            let layer = if rng.below(2) == 0 { 1 } else { 2 };
            powers.push((VarId::new(idx, layer).unwrap(), rng.range(1, 2) as u32));
        }
        let coeff = rng.range(1, 9) as i64 - 5;
        p = p.add(&SparsePoly::from_term(
            Monomial::from_powers(powers),
            BigInt::from(coeff),
        ));
    }
    p
}

#[test]
fn criterion_10_polynomial_kernel() {
    let mut rng = SplitMix64::new(SEED);
    let mut ok = true;

    for _ in 0..200 {
        let size = rng.range(1, 4) as usize;
        let m: Vec<Vec<SparsePoly>> = (0..size)
            .map(|_| (0..size).map(|_| random_poly(&mut rng)).collect())
            .collect();
        ok &= determinant(&m).unwrap() == determinant_fraction_free(&m).unwrap();
    }

    let mut divisions = 0usize;
    while divisions < 500 {
        let p = random_poly(&mut rng);
        let d = random_poly(&mut rng);
        if d.is_zero() {
            continue;
        }
        ok &= p.mul(&d).divide_exact(&d).unwrap() == p;
        divisions += 1;
    }

    // Sanity anchor for the evaluation path used by criterion 8.
    let x = SparsePoly::var(VarId::layer1(1)).add(&SparsePoly::var(VarId::layer1(2)));
    let mut asg = BTreeMap::new();
    asg.insert(VarId::layer1(1), 2u64);
    asg.insert(VarId::layer1(2), 3u64);
    ok &= x.eval_mod_p(&asg, 101).unwrap() == 5;

    report(
        10,
        "determinant oracles agree on 200 matrices; 500 exact divisions round-trip",
        ok,
    );
}

//! One line per acceptance criterion; runs without the test harness so the
//! lines always reach stdout. Time budgets are pinned below and are
//! part of each verdict.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use schubfact::cohomology::{
    chern_class_full_torus, class_orthogonal_equivariant, class_symplectic_equivariant, h_mu_xyz, restrict_at,
    restrict_torus_coordinates, rhs_orthogonal, rhs_symplectic, specialize_to_ordinary, weight_product,
};
use schubfact::schubert::{expand_in_schubert_basis, schubert_poly_oracle};
use schubfact::verifier::{ascending_symplectic_2_4, sweep, verify_identity, verify_members};
use schubfact::wset::{standardize, w_set_full_orthogonal, w_set_full_symplectic, w_set_orthogonal};
use schubfact::{Composition, Family, Monomial, Permutation, Polynomial, SchubertCache, VariableSpace};

const BUDGET_GOLDENS: Duration = Duration::from_secs(1);
const BUDGET_WORKED_EXAMPLE: Duration = Duration::from_secs(10);
const BUDGET_SWEEP: Duration = Duration::from_secs(300);
const BUDGET_LOCALIZATION: Duration = Duration::from_secs(60);
const SEED: u64 = 0x5eed_2024;
const RANDOM_S7: usize = 200;
const RANDOM_POLYS: usize = 1000;

struct Outcome {
    ok: bool,
    detail: String,
}

fn perms(words: &[&str]) -> BTreeSet<Permutation> {
    words.iter().map(|w| w.parse().unwrap()).collect()
}

fn mu(s: &str) -> Composition {
    s.parse().unwrap()
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.ok &= elapsed < budget;
    out.detail = format!("{}; {:.2?} (budget {:?})", out.detail, elapsed, budget);
    out
}

fn wset_goldens() -> Outcome {
    let full5 =
        w_set_full_orthogonal(5) == perms(&["24531", "25341", "34512", "35142", "42513", "45123", "52314", "53124"]);
    let mu42 = w_set_orthogonal(&mu("4,2")).members() == &perms(&["465321", "563421", "643521"]);
    let symp6 =
        w_set_full_symplectic(6).unwrap() == perms(&["135642", "153462", "315624", "351264", "513426", "531246"]);
    let letters: BTreeSet<usize> = [1, 4, 5, 6].into_iter().collect();
    let std = standardize(&[1, 5, 4, 6], &letters).unwrap() == "1324".parse().unwrap();
    Outcome {
        ok: full5 && mu42 && symp6 && std,
        detail: format!("W_5 {full5}, W_(4,2) {mu42}, W'_6 {symp6}, standardize {std}"),
    }
}

fn worked_example(cache: &SchubertCache) -> Outcome {
    let members = perms(&["6752431", "6753412", "6754213", "7562431", "7563412", "7564213"]);
    let mut lhs = Polynomial::zero(&cache.space(7));
    for w in &members {
        lhs += cache.get(w).as_ref();
    }
    let rhs = Polynomial::parse(&cache.space(7), "x1^5 x2^4 x3^4 x4 x5 (x1 + x2)(x4 + x5)(x4 + x6)").unwrap();
    let same_set = w_set_orthogonal(&mu("3,4")).members() == &members;
    Outcome { ok: lhs == rhs && same_set, detail: format!("{} terms, W-set matches {same_set}", lhs.len()) }
}

fn identity_sweep(cache: &SchubertCache) -> Outcome {
    let mut ortho = Vec::new();
    for n in 1..=6 {
        ortho.extend(sweep(n, Family::Orthogonal, cache).unwrap());
    }
    let mut symp = Vec::new();
    for two_n in [2, 4, 6, 8] {
        symp.extend(sweep(two_n, Family::Symplectic, cache).unwrap());
    }
    let failed: Vec<String> =
        ortho.iter().chain(&symp).filter(|r| !r.passed()).map(|r| format!("{} {}", r.family, r.mu)).collect();
    Outcome {
        ok: ortho.len() == 63 && symp.len() == 15 && failed.is_empty(),
        detail: format!("{} orthogonal, {} symplectic, failures {:?}", ortho.len(), symp.len(), failed),
    }
}

fn support_law(cache: &SchubertCache) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut run = |family: Family, m: &Composition| {
        let (rhs, wset) = match family {
            Family::Orthogonal => (rhs_orthogonal(m), schubfact::WSet::build(family, m).unwrap()),
            Family::Symplectic => (rhs_symplectic(m).unwrap(), schubfact::WSet::build(family, m).unwrap()),
        };
        let e = expand_in_schubert_basis(&rhs, m.total(), cache).unwrap();
        checked += 1;
        if !e.is_unit_sum_over(wset.members()) {
            bad.push(format!("{family} {m}"));
        }
    };
    for n in 1..=6 {
        for m in Composition::enumerate(n, false).unwrap() {
            run(Family::Orthogonal, &m);
        }
    }
    for two_n in [2, 4, 6, 8] {
        for m in Composition::enumerate(two_n, true).unwrap() {
            run(Family::Symplectic, &m);
        }
    }
    Outcome { ok: bad.is_empty() && checked == 78, detail: format!("{checked} expansions, failures {bad:?}") }
}

fn oracle_equivalence(cache: &SchubertCache) -> Outcome {
    let mut mismatches = 0;
    let s5 = Permutation::all(5);
    for w in &s5 {
        if cache.get(w).as_ref() != &schubert_poly_oracle(w) {
            mismatches += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut word: Vec<usize> = (1..=7).collect();
    for _ in 0..RANDOM_S7 {
        word.shuffle(&mut rng);
        let w = Permutation::new(word.clone()).unwrap();
        if cache.get(&w).as_ref() != &schubert_poly_oracle(&w) {
            mismatches += 1;
        }
    }
    Outcome {
        ok: mismatches == 0 && s5.len() == 120,
        detail: format!("{} + {RANDOM_S7} permutations, {mismatches} mismatches", s5.len()),
    }
}

fn localization_suite() -> Outcome {
    let mut points = 0;
    let mut bad = Vec::new();
    for n in 1..=5 {
        for m in Composition::enumerate(n, false).unwrap() {
            let h = chern_class_full_torus(&m).expand();
            for w in Permutation::all(n) {
                points += 1;
                if restrict_at(&w, &h).unwrap() != weight_product(&m, &w).unwrap() {
                    bad.push(format!("localization {m} at {w}"));
                }
            }
        }
    }
    let mut classes = 0;
    for n in 1..=6 {
        for m in Composition::enumerate(n, false).unwrap() {
            let h = chern_class_full_torus(&m).expand();
            if restrict_torus_coordinates(&m, &h).unwrap() != h_mu_xyz(&m).expand() {
                bad.push(format!("rho {m}"));
            }
            let scale = BigInt::from(2).pow(m.half_weight() as u32);
            let ortho = specialize_to_ordinary(&class_orthogonal_equivariant(&m).expand()).unwrap();
            classes += 1;
            if ortho != rhs_orthogonal(&m).scale(scale) {
                bad.push(format!("orthogonal specialization {m}"));
            }
            if m.all_even() {
                let symp = specialize_to_ordinary(&class_symplectic_equivariant(&m).unwrap().expand()).unwrap();
                classes += 1;
                if symp != rhs_symplectic(&m).unwrap() {
                    bad.push(format!("symplectic specialization {m}"));
                }
            }
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: format!("{points} restriction points, {classes} specializations, failures {bad:?}"),
    }
}

fn discrepancy_regression(cache: &SchubertCache) -> Outcome {
    let m = mu("2,4");
    let ascending = verify_members(Family::Symplectic, &m, &ascending_symplectic_2_4(), cache).unwrap();
    let derived = verify_identity(&m, Family::Symplectic, cache).unwrap();
    let derived_set = derived.passed()
        && schubfact::WSet::build(Family::Symplectic, &m).unwrap().members() == &perms(&["561342", "563124"]);
    let detail = ascending.check("identity").unwrap().detail.clone();
    Outcome {
        ok: !ascending.passed() && detail == "lhs degree 2, rhs degree 10" && derived_set,
        detail: format!(
            "ascending set: {} ({detail}); derived set passes {derived_set}",
            if ascending.passed() { "pass" } else { "fail" }
        ),
    }
}

fn random_polynomial(rng: &mut StdRng, space: &Arc<VariableSpace>, n: usize) -> Polynomial {
    let terms = rng.gen_range(1..=6);
    Polynomial::from_terms(
        space,
        (0..terms).map(|_| {
            let mut exps = vec![0u32; n];
            let degree = rng.gen_range(0..=8);
            for _ in 0..degree {
                exps[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_dense(&exps), BigInt::from(rng.gen_range(-9i64..=9)))
        }),
    )
}

fn divided_difference_algebra() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    let mut violations = Vec::new();
    for k in 0..RANDOM_POLYS {
        let n = rng.gen_range(2..=6);
        let space = Arc::new(VariableSpace::plain(n));
        let f = random_polynomial(&mut rng, &space, n);
        let d = |g: &Polynomial, i: usize| g.divided_difference(i).unwrap();
        for i in 1..n {
            if !d(&d(&f, i), i).is_zero() {
                violations.push(format!("#{k}: d{i}^2"));
            }
            for j in i + 2..n {
                if d(&d(&f, i), j) != d(&d(&f, j), i) {
                    violations.push(format!("#{k}: d{i} d{j}"));
                }
            }
            if i + 1 < n && d(&d(&d(&f, i), i + 1), i) != d(&d(&d(&f, i + 1), i), i + 1) {
                violations.push(format!("#{k}: braid {i}"));
            }
        }
    }
    Outcome { ok: violations.is_empty(), detail: format!("{RANDOM_POLYS} polynomials, violations {violations:?}") }
}

fn main() -> ExitCode {
    let cache = SchubertCache::new();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 W-set goldens", timed(BUDGET_GOLDENS, wset_goldens)),
        ("2 worked example (3,4)", timed(BUDGET_WORKED_EXAMPLE, || worked_example(&cache))),
        ("3 identity sweep", timed(BUDGET_SWEEP, || identity_sweep(&cache))),
        ("4 Schubert support law", support_law(&cache)),
        ("5 pipe-dream oracle", oracle_equivalence(&cache)),
        ("6 localization suite", timed(BUDGET_LOCALIZATION, localization_suite)),
        ("7 ascending-letter (2,4) set", discrepancy_regression(&cache)),
        ("8 divided-difference algebra", divided_difference_algebra()),
    ];
    let mut all = true;
    for (name, outcome) in &criteria {
        println!("{} {name}: {}", if outcome.ok { "PASS" } else { "FAIL" }, outcome.detail);
        all &= outcome.ok;
    }
    println!("acceptance: {}", if all { "all criteria pass" } else { "some criteria FAIL" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! End-to-end acceptance run. Each criterion prints one `PASS`/`FAIL` line;
//! the test fails if any criterion does.

use std::time::{Duration, Instant};

use brachyon::brace::{brace_isomorphism, enumerate_braces_on};
use brachyon::construct::{
    build_involutive, build_irretractable, build_solution, check_square_free_spec, enumerate_specs,
    rack_from_group, spec_of_solution, ConstructionSpec, InvolutiveSpec, OrbitChoice,
};
use brachyon::group::{FiniteGroup, GroupOps, Subgroup};
use brachyon::solution::{permutation_brace, solution_isomorphism};
use brachyon::{Caps, SkewBrace, Solution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random triples drawn per brace for the identity checks.
const IDENTITY_TRIPLES: usize = 1000;
const SEED: u64 = 0x5eed_b4ace;
/// Largest `|X|` among the specs whose square-free check is compared.
const SQUARE_FREE_MAX_SIZE: usize = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(took)
}

/// Groups of order `n` for `n ≤ 8`, one per isomorphism class.
fn groups_of_order(n: usize) -> Vec<FiniteGroup> {
    match n {
        4 => vec![FiniteGroup::cyclic(4), FiniteGroup::elementary_abelian_2(2)],
        6 => vec![FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)],
        8 => vec![
            FiniteGroup::cyclic(8),
            FiniteGroup::direct_product(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2)),
            FiniteGroup::elementary_abelian_2(3),
            FiniteGroup::dihedral(4),
            FiniteGroup::quaternion(),
        ],
        _ => vec![FiniteGroup::cyclic(n)],
    }
}

fn braces_of_order(n: usize) -> Vec<SkewBrace> {
    let caps = Caps::default();
    groups_of_order(n)
        .iter()
        .flat_map(|a| enumerate_braces_on(a, &caps).expect("enumeration within caps"))
        .collect()
}

/// Braid relation on `X³`, evaluated directly from the tables.
fn braid_holds(n: usize, f: &[usize], g: &[usize]) -> bool {
    let r = |x: usize, y: usize| (f[x * n + y], g[y * n + x]);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b) = r(x, y);
                let (b, c) = r(b, z);
                let (a, b) = r(a, b);
                let (q, w) = r(y, z);
                let (p, q) = r(x, q);
                let (q, w) = r(q, w);
                if (a, b, c) != (p, q, w) {
                    return false;
                }
            }
        }
    }
    true
}

fn bit(v: usize, k: usize) -> usize {
    (v >> (k - 1)) & 1
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let b = SkewBrace::order21();
    let n = b.order();
    ensure!(n == 21, "order {n}");
    for a in 0..n {
        for x in 0..n {
            for y in 0..n {
                let lhs = b.dot_mul(a, b.star_mul(x, y));
                let rhs = b.star_mul(b.star_mul(b.dot_mul(a, x), b.star_inv(a)), b.dot_mul(a, y));
                ensure!(lhs == rhs, "axiom fails at ({a}, {x}, {y})");
            }
        }
    }
    // σ^a ⋆ τ^b is coded 3a + b
    let (sigma, tau) = (3, 1);
    let code = |a: usize, t: usize| 3 * a + t;
    let lhs = b.dot_mul(b.star_mul(tau, tau), sigma);
    ensure!(lhs == code(2, 2), "(τ⋆τ)·σ = {lhs}");
    let ts = b.dot_mul(tau, sigma);
    let rhs = b.star_mul(b.star_mul(ts, b.star_inv(sigma)), ts);
    ensure!(rhs == code(3, 2), "(τ·σ)⋆σ^⋆⋆(τ·σ) = {rhs}");
    ensure!(!b.is_two_sided(), "reported two-sided");
    let took = within(start, Duration::from_secs(1), "order 21")?;
    Ok(format!("9261 triples, two-sided: no, {took:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let b = SkewBrace::trivial(&FiniteGroup::cyclic(2));
    let spec = ConstructionSpec::new(
        b.clone(),
        vec![OrbitChoice {
            rep: 1,
            subgroups: vec![Subgroup::trivial(4)],
        }],
    )
    .map_err(|e| e.to_string())?;
    let s = build_solution(&spec).map_err(|e| e.to_string())?.solution;
    ensure!(s.size() == 4, "|X| = {}", s.size());
    // f_x = (x1 x2)(x3 x4), g_y = (x1 x4)(x2 x3) for every x, y
    for x in 0..4 {
        ensure!(s.f_row(x) == [1, 0, 3, 2], "f_{} = {:?}", x + 1, s.f_row(x));
        ensure!(s.g_row(x) == [3, 2, 1, 0], "g_{} = {:?}", x + 1, s.g_row(x));
    }
    ensure!(!s.is_involutive(), "reported involutive");
    let pb = permutation_brace(&s).map_err(|e| e.to_string())?;
    ensure!(
        brace_isomorphism(&pb.brace, &b).is_some(),
        "permutation brace differs"
    );
    let took = within(start, Duration::from_secs(1), "Z/2 example")?;
    Ok(format!("|X| = 4, involutive: no, {took:?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let b = SkewBrace::vendramin();
    let mut notes = Vec::new();
    ensure!(
        b.socle().is_trivial(),
        "socle of order {}",
        b.socle().order()
    );
    let (e3, e6) = (1 << 2, 1 << 5);
    // reference stabilizers, compared literally; element (y1..y6) coded Σ y_k 2^{k-1}
    let shown_11: Vec<usize> = (0..64)
        .filter(|&y| {
            bit(y, 2) == 0
                && (bit(y, 4) + bit(y, 5) + bit(y, 6) + bit(y, 1) * bit(y, 6)).is_multiple_of(2)
        })
        .collect();
    let shown_21: Vec<usize> = (0..64)
        .filter(|&y| bit(y, 2) == 0 && bit(y, 5) == 0 && bit(y, 4) == bit(y, 1) * bit(y, 6))
        .collect();
    let k11 = b.lambda_stabilizer(e3);
    let k21 = b.lambda_stabilizer(e6);
    let mut failures = Vec::new();
    if k11.order() != 16 || k21.order() != 16 {
        failures.push(format!(
            "stabilizer orders {} and {}",
            k11.order(),
            k21.order()
        ));
    }
    if k11.elements() != shown_11.as_slice() {
        failures.push(format!(
            "K_1,1 has {} elements, reference set has {} and differs",
            k11.order(),
            shown_11.len()
        ));
    }
    if k21.elements() != shown_21.as_slice() {
        failures.push(format!(
            "K_2,1 has {} elements, reference set has {}",
            k21.order(),
            shown_21.len()
        ));
    }
    let d4 = FiniteGroup::dihedral(4);
    let iso_start = Instant::now();
    let d4d4 = FiniteGroup::direct_product(&d4, &d4);
    let iso = b
        .dot()
        .is_isomorphic_to(&d4d4, &Caps::default())
        .map_err(|e| e.to_string())?;
    ensure!(iso, "(B,·) is not D4 × D4");
    notes.push(format!(
        "D4×D4 in {:?}",
        within(iso_start, Duration::from_secs(60), "D4×D4")?
    ));
    let spec = InvolutiveSpec::new(
        b.clone(),
        [e3, e6]
            .iter()
            .map(|&a| OrbitChoice {
                rep: a,
                subgroups: vec![b.lambda_stabilizer(a)],
            })
            .collect(),
    )
    .map_err(|e| e.to_string())?;
    for (name, built) in [
        ("involutive", build_involutive(&spec)),
        ("irretractable", build_irretractable(&b, &[e3, e6])),
    ] {
        let s = built.map_err(|e| format!("{name}: {e}"))?.solution;
        ensure!(s.size() == 8, "{name}: |X| = {}", s.size());
        ensure!(
            braid_holds(8, s.f_flat(), s.g_flat()),
            "{name}: braid relation fails"
        );
        ensure!(s.is_involutive(), "{name}: not involutive");
        ensure!(s.is_square_free(), "{name}: not square-free");
        ensure!(s.is_irretractable() == Ok(true), "{name}: retractable");
        let pb = permutation_brace(&s).map_err(|e| e.to_string())?;
        ensure!(
            brace_isomorphism(&pb.brace, &b).is_some(),
            "{name}: permutation brace differs"
        );
    }
    within(start, Duration::from_secs(300), "Vendramin")?;
    if !failures.is_empty() {
        failures.push("socle, D4×D4 and |X| = 8 checks pass".into());
        return Err(failures.join("; "));
    }
    notes.push("|X| = 8 involutive, square-free, irretractable".into());
    Ok(notes.join(", "))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in [2, 3, 4, 6, 8] {
        let braces = braces_of_order(n);
        counts.push(format!("{n}: {}", braces.len()));
        for b in braces {
            let s = build_solution(&ConstructionSpec::canonical(b.clone()))
                .map_err(|e| e.to_string())?
                .solution;
            ensure!(s.verify_ybe().holds(), "order {n}: YBE fails");
            ensure!(s.is_nondegenerate(), "order {n}: degenerate");
            let pb = permutation_brace(&s).map_err(|e| e.to_string())?;
            ensure!(
                brace_isomorphism(&pb.brace, &b).is_some(),
                "order {n}: permutation brace differs from {b:?}"
            );
        }
    }
    ensure!(
        counts.last().map(String::as_str) == Some("8: 47"),
        "counts {counts:?}"
    );
    let took = within(start, Duration::from_secs(600), "round trip")?;
    Ok(format!(
        "braces per order [{}], {took:?}",
        counts.join(", ")
    ))
}

/// Every non-degenerate map on `n` points: each `f_x` and `g_y` ranges over
/// all permutations, and the braid relation is checked directly.
fn nondegenerate_solutions(n: usize) -> Vec<Solution> {
    let perms = permutations(n);
    let k = perms.len();
    let mut out = Vec::new();
    let total = k.pow(2 * n as u32);
    for code in 0..total {
        let mut c = code;
        let mut f = Vec::with_capacity(n * n);
        let mut g = Vec::with_capacity(n * n);
        for _ in 0..n {
            f.extend_from_slice(&perms[c % k]);
            c /= k;
        }
        for _ in 0..n {
            g.extend_from_slice(&perms[c % k]);
            c /= k;
        }
        if braid_holds(n, &f, &g) {
            out.push(Solution::from_flat(n, f, g).expect("valid tables"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut found = Vec::new();
    for n in [2, 3] {
        let sols = nondegenerate_solutions(n);
        for s in &sols {
            ensure!(
                s.verify_ybe().holds(),
                "library rejects a solution on {n} points"
            );
            let spec = spec_of_solution(s).map_err(|e| e.to_string())?;
            let rebuilt = build_solution(&spec).map_err(|e| e.to_string())?.solution;
            ensure!(
                solution_isomorphism(s, &rebuilt).is_some(),
                "rebuilt solution differs for {s:?}"
            );
        }
        found.push(format!("|X| = {n}: {}", sols.len()));
    }
    let took = within(start, Duration::from_secs(600), "tiny scan")?;
    Ok(format!("{}, {took:?}", found.join(", ")))
}

fn brace_corpus() -> Vec<SkewBrace> {
    let mut corpus = vec![
        SkewBrace::opposite(&FiniteGroup::symmetric(3)),
        SkewBrace::cyclic_flip(3),
        SkewBrace::order21(),
        SkewBrace::vendramin(),
    ];
    for n in 2..=8 {
        corpus.extend(braces_of_order(n));
    }
    corpus
}

/// Socle straight from its definition: `λ_b = id` and `b` is `⋆`-central.
fn socle_oracle(b: &SkewBrace) -> Vec<usize> {
    let n = b.order();
    (0..n)
        .filter(|&s| (0..n).all(|c| b.lambda(s, c) == c && b.star_mul(s, c) == b.star_mul(c, s)))
        .collect()
}

fn check_identities(b: &SkewBrace, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = b.order();
    let g = b.semidirect();
    for _ in 0..IDENTITY_TRIPLES {
        let (x, y, z) = (
            rng.gen_range(0..n),
            rng.gen_range(0..n),
            rng.gen_range(0..n),
        );
        ensure!(
            b.lambda(b.dot_mul(x, y), z) == b.lambda(x, b.lambda(y, z)),
            "λ morphism at ({x}, {y}, {z})"
        );
        ensure!(
            b.lambda(x, b.star_mul(y, z)) == b.star_mul(b.lambda(x, y), b.lambda(x, z)),
            "λ_{x} not a ⋆-morphism at ({y}, {z})"
        );
        ensure!(
            b.gamma(x, b.gamma(y, z)) == b.gamma(b.dot_mul(y, x), z),
            "γ anti-morphism at ({x}, {y}, {z})"
        );
        ensure!(
            b.dot_mul(x, y) == b.dot_mul(b.lambda(x, y), b.gamma(y, x)),
            "factorization at ({x}, {y})"
        );
        let (h1, h2) = (rng.gen_range(0..n * n), rng.gen_range(0..n * n));
        ensure!(
            b.theta(g.mul(h1, h2), z) == b.theta(h1, b.theta(h2, z)),
            "Θ morphism at ({h1}, {h2}, {z})"
        );
    }
    let socle = socle_oracle(b);
    ensure!(b.socle().elements() == socle.as_slice(), "socle");
    ensure!(
        b.socle_by_gamma_kernel().elements() == socle.as_slice(),
        "γ kernel"
    );
    ensure!(
        b.socle_by_conjugation_kernel().elements() == socle.as_slice(),
        "conjugation kernel"
    );
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let corpus = brace_corpus();
    for b in &corpus {
        check_identities(b, &mut rng).map_err(|e| format!("{e} on brace of order {}", b.order()))?;
    }
    let caps = Caps {
        families_per_orbit: 1,
        ..Caps::default()
    };
    let mut specs = 0;
    for n in 1..=6 {
        for b in braces_of_order(n) {
            for spec in
                enumerate_specs(&b, &caps, Some(SQUARE_FREE_MAX_SIZE)).map_err(|e| e.to_string())?
            {
                let by_spec = check_square_free_spec(&spec).map_err(|e| e.to_string())?;
                let s = build_solution(&spec).map_err(|e| e.to_string())?.solution;
                let direct = (0..s.size()).all(|x| s.r(x, x) == (x, x));
                ensure!(by_spec == direct, "square-free mismatch on {spec:?}");
                specs += 1;
            }
        }
    }
    Ok(format!(
        "{} braces x {IDENTITY_TRIPLES} triples, {specs} specs square-free checked",
        corpus.len()
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let s3 = FiniteGroup::symmetric(3);
    let t = (0..6)
        .find(|&x| s3.element_orders()[x] == 2)
        .expect("transposition");
    let q = rack_from_group(&s3, &[t], &[vec![s3.centralizer(t)]])
        .map_err(|e| e.to_string())?
        .rack;
    ensure!(q.size() == 3, "rack of size {}", q.size());
    ensure!(q.is_rack() && q.is_quandle(), "not a quandle");
    let mut involutive = Vec::new();
    for b in brace_corpus()
        .into_iter()
        .filter(SkewBrace::is_left_brace)
        .filter(|b| b.order() <= 8)
    {
        involutive.push(Solution::associated(&b).map_err(|e| e.to_string())?);
        involutive.push(
            build_involutive(&InvolutiveSpec::canonical(b))
                .map_err(|e| e.to_string())?
                .solution,
        );
    }
    involutive.push(
        build_irretractable(&SkewBrace::vendramin(), &[4, 32])
            .map_err(|e| e.to_string())?
            .solution,
    );
    for s in &involutive {
        let d = s.derived_rack().map_err(|e| e.to_string())?;
        ensure!(
            d.is_trivial(),
            "derived rack of an involutive solution is not trivial"
        );
    }
    let example = criterion_2_solution()?;
    let d = example.derived_rack().map_err(|e| e.to_string())?;
    ensure!(d.is_rack(), "derived rack of the Z/2 example is not a rack");
    let took = within(start, Duration::from_secs(1), "racks")?;
    Ok(format!(
        "{} involutive solutions, {took:?}",
        involutive.len()
    ))
}

fn criterion_2_solution() -> Result<Solution, String> {
    let spec = ConstructionSpec::new(
        SkewBrace::trivial(&FiniteGroup::cyclic(2)),
        vec![OrbitChoice {
            rep: 1,
            subgroups: vec![Subgroup::trivial(4)],
        }],
    )
    .map_err(|e| e.to_string())?;
    Ok(build_solution(&spec).map_err(|e| e.to_string())?.solution)
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    let mut left = 0;
    for n in 1..=8 {
        for b in braces_of_order(n) {
            total += 1;
            let s = build_solution(&ConstructionSpec::canonical(b.clone()))
                .map_err(|e| e.to_string())?
                .solution;
            let pb = permutation_brace(&s).map_err(|e| e.to_string())?;
            ensure!(
                brace_isomorphism(&pb.brace, &b).is_some(),
                "order {n}: {b:?}"
            );
            if b.is_left_brace() {
                left += 1;
                let s = build_involutive(&InvolutiveSpec::canonical(b.clone()))
                    .map_err(|e| e.to_string())?
                    .solution;
                ensure!(
                    s.is_involutive(),
                    "order {n}: involutive build is not involutive"
                );
                let pb = permutation_brace(&s).map_err(|e| e.to_string())?;
                ensure!(
                    brace_isomorphism(&pb.brace, &b).is_some(),
                    "order {n}: involutive permutation brace differs"
                );
            }
        }
    }
    Ok(format!("{total} braces, {left} left braces"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 order-21 witness", criterion_1),
        ("2 Z/2 non-involutive example", criterion_2),
        ("3 Vendramin reproduction", criterion_3),
        ("4 canonical spec round trip", criterion_4),
        ("5 tiny-scale oracle equivalence", criterion_5),
        ("6 brace identities", criterion_6),
        ("7 racks and quandles", criterion_7),
        ("8 every brace is realized", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

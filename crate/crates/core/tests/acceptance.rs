//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line (run with `--nocapture` to see them). Every expected value is
//! either a frozen golden constant or recomputed here through an
//! independent route (exhaustive enumeration, closed forms, numeric
//! cross-checks).

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use relzero_core::amicable::{cut_pair_context, is_amicable, is_very_amicable, conjecture_scan};
use relzero_core::cube::{cube_falsify, eo_cube, square_axis_condition, PolyCube};
use relzero_core::graph::{
    enumerate_connected_multigraphs, enumerate_connected_simple, random_sp, random_sp_prime,
    Multigraph,
};
use relzero_core::matroid::{
    class_membership, fvector_inequality_sums, hj_setsystem, icosahedron_complex,
    k23_broken_circuit_complex, reliability_setsystem, two_circuit_sum, uniform_h, SetSystem,
};
use relzero_core::poly::{
    compose_rational, eo_binomial, even_odd_split, rat, ratio, ExactPoly, Rat,
};
use relzero_core::realroot::{
    enestrom_kakeya_bounds, hermite_biehler, interlaces, numeric_roots, only_nonpositive_zeros,
    schur_quasi_stable,
};
use relzero_core::reliability::{
    brute_force_reliability, closed_form_cycle, closed_form_tree, cycle_graph, RelEngine,
};

fn p(coeffs: &[i64]) -> ExactPoly {
    ExactPoly::from_ints(coeffs)
}

/// Polynomial with the given roots and leading coefficient: the standard way
/// this suite manufactures real-rooted fixtures.
fn poly_with_roots(roots: &[Rat], lead: Rat) -> ExactPoly {
    let mut acc = ExactPoly::constant(lead);
    for r in roots {
        acc = &acc * &ExactPoly::from_coeffs(vec![-r.clone(), Rat::one()]);
    }
    acc
}

fn sorted_nonpos_roots(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    let mut roots: Vec<Rat> = (0..len)
        .map(|_| ratio(-rng.gen_range(0..60), rng.gen_range(1..5)))
        .collect();
    roots.sort();
    roots
}

/// A root list that alternates right of `base` (so base precedes it), with
/// movement capped by `cap` (used to force chains to stay related to their
/// first element).
fn shifted_right(rng: &mut ChaCha8Rng, base: &[Rat], cap: &[Rat]) -> Vec<Rat> {
    let n = base.len();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let hi_next = if j + 1 < n { cap[j + 1].clone() } else { Rat::zero() };
        let lo = base[j].clone();
        let hi = hi_next.min(Rat::zero()).max(lo.clone());
        // rational point in [lo, hi]
        let t = rat(rng.gen_range(0..=8));
        let val = &lo + (&hi - &lo) * t / rat(8);
        out.push(val);
    }
    out
}

fn tree_graph(cs: &[usize]) -> Multigraph {
    let mut g = Multigraph::new(cs.len() + 1);
    for (i, &c) in cs.iter().enumerate() {
        g.add_edges(i, i + 1, c).unwrap();
    }
    g
}

#[test]
fn criterion_01_golden_values() {
    let ico = icosahedron_complex();
    let (_, j, t) = hj_setsystem(&ico).unwrap();
    assert_eq!(j, p(&[0, -12, 0, 20]), "icosahedron J-polynomial");
    assert_eq!(t, 3);

    let theta = k23_broken_circuit_complex();
    let (_, j, t) = hj_setsystem(&theta).unwrap();
    assert_eq!(j, p(&[-1, 1, 1, 7]), "broken-circuit complex J-polynomial");
    assert_eq!(t, 3);

    for m in 2..=12usize {
        let h = uniform_h(m, 1).unwrap();
        assert_eq!(h, ExactPoly::from_ints(&[1, m as i64 - 1]), "rank-1 closed form");
    }
    println!("ACCEPTANCE 1: PASS — golden J/H values match exactly");
}

#[test]
fn criterion_02_closed_forms_vs_engine_vs_oracle() {
    let mut engine = RelEngine::new();
    for k in 1..=3usize {
        for n in 2..=6usize {
            let expect = {
                let mut c = vec![Rat::zero(); k + 1];
                c[0] = Rat::one();
                c[k] = -Rat::one();
                ExactPoly::from_coeffs(c).pow((n - 1) as u32)
            };
            let g = tree_graph(&vec![k; n - 1]);
            assert_eq!(engine.reliability(&g), expect, "tree engine k={k} n={n}");
            assert_eq!(
                brute_force_reliability(&g).unwrap(),
                expect,
                "tree oracle k={k} n={n}"
            );
            assert_eq!(closed_form_tree(&vec![k; n - 1]).unwrap().r, expect);
        }
        for n in 3..=6usize {
            let expect = {
                let mut base = vec![Rat::zero(); k + 1];
                base[0] = Rat::one();
                base[k] = -Rat::one();
                let mut tail = vec![Rat::zero(); k + 1];
                tail[0] = Rat::one();
                tail[k] = rat((n - 1) as i64);
                &ExactPoly::from_coeffs(base).pow((n - 1) as u32)
                    * &ExactPoly::from_coeffs(tail)
            };
            let g = cycle_graph(&vec![k; n]).unwrap();
            assert_eq!(engine.reliability(&g), expect, "cycle engine k={k} n={n}");
            assert_eq!(
                brute_force_reliability(&g).unwrap(),
                expect,
                "cycle oracle k={k} n={n}"
            );
            assert_eq!(closed_form_cycle(&vec![k; n]).unwrap().report.r, expect);
        }
    }
    println!("ACCEPTANCE 2: PASS — thick tree/cycle closed forms, engine, and oracle agree");
}

fn random_connected_multigraph(seed: u64, m_max: usize) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x2545_f491_4f6c_dd1d));
    let n = rng.gen_range(2..=7usize);
    let mut g = Multigraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edges(u, v, 1).unwrap();
    }
    let mut m = n - 1;
    while m < m_max && rng.gen_bool(0.75) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let c = rng.gen_range(1..=(m_max - m).min(3));
        g.add_edges(u, v, c).unwrap();
        m += c;
    }
    g
}

#[test]
fn criterion_03_oracle_equivalence_500_graphs() {
    let mut engine = RelEngine::new();
    for seed in 0..500u64 {
        let g = random_connected_multigraph(seed, 12);
        let fast = engine.reliability(&g);
        let slow = brute_force_reliability(&g).unwrap();
        assert_eq!(fast, slow, "engine/oracle mismatch at seed {seed}");
        let report = engine.report(&g).unwrap();
        report.validate().unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
    println!("ACCEPTANCE 3: PASS — 500 random multigraphs match exhaustive enumeration exactly");
}

#[test]
fn criterion_04_sp_prime_disc_stability_1000() {
    let mut engine = RelEngine::new();
    for seed in 0..1000u64 {
        let g = random_sp_prime(3, 12, seed);
        let h = engine.h(&g).unwrap();
        let d = g.cycle_rank().unwrap();
        let verdict = schur_quasi_stable(&h, d).unwrap();
        assert!(
            verdict.is_quasi_stable(),
            "seed {seed}: {:?} on H = {h}",
            verdict.witness
        );
        let split = even_odd_split(&engine.j(&g).unwrap());
        assert!(
            interlaces(&split.odd, &split.even),
            "seed {seed}: odd part fails to interlace"
        );
    }
    println!("ACCEPTANCE 4: PASS — 1000 series-parallel-blocked networks certified disc-stable exactly");
}

#[test]
fn criterion_05_thick_cacti_exhaustive() {
    // deduplicated connected simple base graphs on <= 5 vertices that are
    // cacti, every spindle multiplicity vector with entries <= 3
    let mut bases = enumerate_connected_simple(5, 10);
    let mut seen = std::collections::BTreeSet::new();
    bases.retain(|g| {
        g.is_cactus().unwrap() && seen.insert(g.exact_canonical_key().unwrap())
    });
    assert!(bases.len() >= 10, "unexpectedly few cactus bases");
    let mut engine = RelEngine::new();
    let mut instances = 0usize;
    for base in &bases {
        if base.vertex_count() < 2 {
            continue;
        }
        let pairs: Vec<(usize, usize)> = base.spindles().map(|(p, _)| p).collect();
        let e = pairs.len();
        let mut mults = vec![1usize; e];
        loop {
            let mut g = Multigraph::new(base.vertex_count());
            for (i, &(a, b)) in pairs.iter().enumerate() {
                g.add_edges(a, b, mults[i]).unwrap();
            }
            instances += 1;
            let h = engine.h(&g).unwrap();
            let d = g.cycle_rank().unwrap();
            let verdict = schur_quasi_stable(&h, d).unwrap();
            assert!(verdict.is_quasi_stable(), "cactus instance failed: {g}");
            let mut i = 0;
            loop {
                if i == e {
                    break;
                }
                mults[i] += 1;
                if mults[i] <= 3 {
                    break;
                }
                mults[i] = 1;
                i += 1;
            }
            if i == e {
                break;
            }
        }
    }
    println!(
        "ACCEPTANCE 5: PASS — {instances} thick cacti over {} base shapes all disc-stable",
        bases.len()
    );
}

#[test]
fn criterion_06_uniform_root_bounds() {
    let tol = ratio(1, 1_000_000_000);
    let band = 1e-9f64;
    for m in 2..=10usize {
        for d in 1..m {
            let h = uniform_h(m, d).unwrap();
            let lo = 1.0 / (m - d) as f64;
            let hi = d as f64 / (m - 1) as f64;
            for root in numeric_roots(&h, &tol).unwrap() {
                let modulus = root.value.norm();
                assert!(
                    modulus >= lo - band && modulus <= hi + band,
                    "root {modulus} outside [{lo}, {hi}] at (m, d) = ({m}, {d})"
                );
            }
            // the coefficient-ratio bounds match the predicted endpoints
            let (rlo, rhi) = enestrom_kakeya_bounds(&h).unwrap();
            assert_eq!(rlo, ratio(1, (m - d) as i64));
            assert_eq!(rhi, ratio(d as i64, (m - 1) as i64));
        }
    }
    println!("ACCEPTANCE 6: PASS — uniform-matroid roots honor the ratio bounds");
}

fn random_set_system(seed: u64, m: usize) -> SetSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0xabcd_ef12));
    loop {
        let faces: Vec<u64> = (0u64..1 << m).filter(|_| rng.gen_bool(0.4)).collect();
        if !faces.is_empty() {
            return SetSystem::new(m, faces).unwrap();
        }
    }
}

#[test]
fn criterion_07_expansion_identity_50_systems() {
    let mut checked = 0usize;
    let mut seed = 0u64;
    while checked < 50 {
        seed += 1;
        for k in 1..=3usize {
            let m = match k {
                1 => 1 + (seed as usize % 4),
                2 => 1 + (seed as usize % 4),
                _ => 1 + (seed as usize % 4),
            };
            if k * m > 12 {
                continue;
            }
            let sys = random_set_system(seed * 10 + k as u64, m);
            let lhs = reliability_setsystem(&sys.k_expand(k).unwrap()).unwrap();
            let r = reliability_setsystem(&sys).unwrap();
            let num = ExactPoly::from_ints(&[0, k as i64]);
            let den = ExactPoly::from_coeffs(vec![Rat::one(), rat(k as i64 - 1)]);
            let composed = compose_rational(&r, &num, &den, m);
            let prefactor = ExactPoly::from_ints(&[1, -1]).pow(((k - 1) * m) as u32);
            assert_eq!(lhs, &prefactor * &composed, "seed {seed} k {k}");
            checked += 1;
        }
    }
    println!("ACCEPTANCE 7: PASS — {checked} expansion identities hold after clearing denominators");
}

#[test]
fn criterion_08_fvector_inequalities() {
    // cographic matroids of every connected multigraph with at most 6 edges
    let graphs = enumerate_connected_multigraphs(7, 6, 6, false).unwrap();
    let mut cographic_count = 0usize;
    for g in &graphs {
        let s = SetSystem::cographic(g).unwrap();
        let f = s.f_vector_rat().unwrap();
        let d = f.len() - 1;
        let sums = fvector_inequality_sums(&f, d);
        for (k, v) in sums.iter().enumerate() {
            assert!(
                !v.is_negative(),
                "negative sum at k={k} for cographic matroid of {g}"
            );
        }
        let (_, j, t) = hj_setsystem(&s).unwrap();
        assert!(j.has_nonnegative_coeffs(), "negative J coefficient for {g}");
        // loopless graphs give coloop-free matroids: full subdegree
        assert_eq!(t, d, "subdegree drop for coloop-free instance {g}");
        cographic_count += 1;
    }
    // cographic matroids of larger random graphs stay coefficient-nonnegative
    for seed in 0..150u64 {
        let g = random_connected_multigraph(seed, 10);
        let s = SetSystem::cographic(&g).unwrap();
        let (_, j, _) = hj_setsystem(&s).unwrap();
        assert!(j.has_nonnegative_coeffs(), "negative J coefficient for {g}");
    }
    // uniform matroids on up to 10 elements
    let mut uniform_count = 0usize;
    for m in 2..=10usize {
        for d in 1..m {
            let s = SetSystem::uniform(m, d).unwrap();
            let f = s.f_vector_rat().unwrap();
            let sums = fvector_inequality_sums(&f, d);
            assert!(sums.iter().all(|v| !v.is_negative()), "uniform ({m},{d})");
            let (_, j, _) = hj_setsystem(&s).unwrap();
            assert!(j.has_nonnegative_coeffs(), "uniform ({m},{d})");
            uniform_count += 1;
        }
    }
    // direct sums of two-element circuits meet the bound with equality
    for d in 1..=5usize {
        let s = two_circuit_sum(d).unwrap();
        let f = s.f_vector_rat().unwrap();
        let sums = fvector_inequality_sums(&f, d);
        for (k, v) in sums.iter().enumerate() {
            if k < d {
                assert!(v.is_zero(), "direct-sum equality fails at k={k}, d={d}");
            } else {
                assert!(v.is_positive());
            }
        }
    }
    // containment chain sampled across small cographic, uniform, and fixture
    // instances: disc stability implies total minor nonnegativity implies
    // coefficient nonnegativity
    let mut chain_instances: Vec<SetSystem> = Vec::new();
    for g in enumerate_connected_multigraphs(4, 5, 3, true).unwrap() {
        chain_instances.push(SetSystem::cographic(&g).unwrap());
    }
    for m in 2..=6 {
        for d in 1..m {
            chain_instances.push(SetSystem::uniform(m, d).unwrap());
        }
    }
    chain_instances.push(icosahedron_complex());
    chain_instances.push(k23_broken_circuit_complex());
    for s in &chain_instances {
        let c = class_membership(s).unwrap();
        if c.in_bc.is_quasi_stable() {
            assert_eq!(c.in_bc_prime, Some(true), "stability without total nonnegativity");
        }
        if c.in_bc_prime == Some(true) {
            assert!(c.in_jplus, "total nonnegativity without nonnegative coefficients");
        }
    }
    println!(
        "ACCEPTANCE 8: PASS — inequality sums nonnegative on {cographic_count} cographic and {uniform_count} uniform matroids, equality on 2-circuit sums"
    );
}

#[test]
fn criterion_09_counterexample_fixtures() {
    let ico = class_membership(&icosahedron_complex()).unwrap();
    assert!(!ico.in_jplus, "icosahedron must fail coefficient positivity");
    let theta = class_membership(&k23_broken_circuit_complex()).unwrap();
    assert!(!theta.in_jplus, "broken-circuit complex must fail coefficient positivity");
    println!("ACCEPTANCE 9: PASS — both fixture complexes fall outside the nonnegative class");
}

// --- criterion 10: the property suites ------------------------------------

fn lemma_chain_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tested = 0usize;
    while tested < 60 {
        let len = rng.gen_range(2..5usize);
        let len_first = rng.gen_range(1..5);
        let first = sorted_nonpos_roots(&mut rng, len_first);
        let mut chain = vec![first.clone()];
        for _ in 1..=len {
            let prev = chain.last().unwrap().clone();
            chain.push(shifted_right(&mut rng, &prev, &first));
        }
        let polys: Vec<ExactPoly> = chain
            .iter()
            .map(|roots| poly_with_roots(roots, rat(rng.gen_range(1..4))))
            .collect();
        // consecutive steps relate by construction; the cap forces the
        // endpoints to relate as well, so the chain hypothesis holds
        for w in polys.windows(2) {
            assert!(interlaces(&w[0], &w[1]), "chain step broke");
        }
        if !interlaces(&polys[0], &polys[polys.len() - 1]) {
            continue; // degenerate draw; hypothesis genuinely needs checking
        }
        tested += 1;
        for i in 0..polys.len() {
            for j in i..polys.len() {
                assert!(
                    interlaces(&polys[i], &polys[j]),
                    "chain transitivity failed at ({i},{j})"
                );
            }
        }
    }
}

/// Draws a polynomial whose roots bracket `base` from the right (same
/// degree) or surround it (degree one higher); either way `base` precedes it.
fn poly_right_of(rng: &mut ChaCha8Rng, base: &[Rat]) -> ExactPoly {
    let lead = rat(rng.gen_range(1..4));
    if rng.gen_bool(0.5) || base.is_empty() {
        // same degree, roots nudged right within the gaps
        let cap: Vec<Rat> = base.to_vec();
        let roots = shifted_right(rng, base, &cap);
        poly_with_roots(&roots, lead)
    } else {
        // one degree higher: bracket every base root
        let mut roots = Vec::with_capacity(base.len() + 1);
        roots.push(&base[0] - rat(rng.gen_range(0..5)));
        for j in 0..base.len() {
            let lo = base[j].clone();
            let hi = if j + 1 < base.len() {
                base[j + 1].clone()
            } else {
                Rat::zero()
            };
            let t = rat(rng.gen_range(0..=8));
            roots.push(&lo + (&hi - &lo) * t / rat(8));
        }
        poly_with_roots(&roots, lead)
    }
}

fn lemma_sum_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..80 {
        let len_a_roots = rng.gen_range(1..4);
        let a_roots = sorted_nonpos_roots(&mut rng, len_a_roots);
        let a = poly_with_roots(&a_roots, rat(rng.gen_range(1..4)));
        // (b): a precedes p and q, so a precedes p + q
        let q1 = poly_right_of(&mut rng, &a_roots);
        let q2 = poly_right_of(&mut rng, &a_roots);
        assert!(interlaces(&a, &q1) && interlaces(&a, &q2), "generator broke");
        if q1.degree() == q2.degree() || true {
            let sum = &q1 + &q2;
            assert!(interlaces(&a, &sum), "sum fails: {a} vs {q1} + {q2}");
        }
        // (d): p precedes q implies p precedes p+q precedes q
        if interlaces(&q1, &q2) {
            let s = &q1 + &q2;
            assert!(interlaces(&q1, &s) && interlaces(&s, &q2));
        }
        // (a): swap rule against x * p
        let len_b_roots = rng.gen_range(0..4);
        let b_roots = sorted_nonpos_roots(&mut rng, len_b_roots);
        let b = poly_with_roots(&b_roots, rat(rng.gen_range(1..4)));
        assert_eq!(
            interlaces(&a, &b),
            interlaces(&b, &a.shift_up(1)),
            "swap rule differs for {a}, {b}"
        );
    }
    // (c): both precede a, so their sum precedes a
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    for _ in 0..60 {
        let len = rng.gen_range(1..4);
        let p_roots = sorted_nonpos_roots(&mut rng, len);
        let pp = poly_with_roots(&p_roots, rat(rng.gen_range(1..4)));
        let a = poly_right_of(&mut rng, &p_roots);
        // build a second polynomial preceding a with the same degree as p
        if !interlaces(&pp, &a) {
            continue;
        }
        let qq = pp.scale(&ratio(rng.gen_range(1..5), 1));
        let sum = &pp + &qq;
        assert!(interlaces(&sum, &a), "sum-left fails");
    }
}

fn lemma_positive_combination_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(4099);
    let mut tested = 0usize;
    while tested < 40 {
        let len_roots = rng.gen_range(1..4);
        let roots = sorted_nonpos_roots(&mut rng, len_roots);
        let pp = poly_with_roots(&roots, rat(rng.gen_range(1..4)));
        let qq = poly_right_of(&mut rng, &roots);
        if !interlaces(&pp, &qq) {
            continue;
        }
        tested += 1;
        for _ in 0..100 {
            let l = ratio(rng.gen_range(1..1000), rng.gen_range(1..1000));
            let r = ratio(rng.gen_range(1..1000), rng.gen_range(1..1000));
            let first = &pp.scale(&l) + &qq.scale(&r);
            let second = &qq.scale(&l) + &pp.shift_up(1).scale(&r);
            assert!(only_nonpositive_zeros(&first), "combination left {l} {r}");
            assert!(only_nonpositive_zeros(&second), "combination right {l} {r}");
        }
    }
}

fn exact_numeric_agreement_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    let tol = ratio(1, 10_000_000_000);
    let mut adjudicated = 0usize;
    for case in 0..120usize {
        let poly = if case % 2 == 0 {
            // stable by construction: product of (u + a) factors
            let deg = rng.gen_range(1..=10);
            let roots: Vec<Rat> = (0..deg)
                .map(|_| ratio(-rng.gen_range(0..40), rng.gen_range(1..5)))
                .collect();
            poly_with_roots(&roots, rat(rng.gen_range(1..4)))
        } else {
            let deg = rng.gen_range(1..=10usize);
            let mut coeffs: Vec<Rat> = (0..=deg)
                .map(|_| rat(rng.gen_range(-9..=9i64)))
                .collect();
            if coeffs[deg].is_zero() {
                coeffs[deg] = Rat::one();
            }
            if coeffs[deg].is_negative() {
                coeffs[deg] = -coeffs[deg].clone();
            }
            ExactPoly::from_coeffs(coeffs)
        };
        if poly.is_zero() || poly.degree() == Some(0) {
            continue;
        }
        let verdict = hermite_biehler(&poly).unwrap();
        let Ok(roots) = numeric_roots(&poly, &tol) else {
            continue;
        };
        let max_re = roots.iter().map(|r| r.value.re).fold(f64::MIN, f64::max);
        if max_re.abs() <= 1e-8 {
            continue; // too close to the boundary for floating point to rule
        }
        adjudicated += 1;
        assert_eq!(
            verdict.is_quasi_stable(),
            max_re < 0.0,
            "exact/numeric disagreement on {poly} (max Re {max_re})"
        );
    }
    assert!(adjudicated >= 60, "not enough adjudicated cases");
}

fn eo_recurrence_suite() {
    let x = ExactPoly::var();
    let parts: Vec<_> = (0..=24).map(eo_binomial).collect();
    for a in 0..=12usize {
        for b in 0..=12usize {
            let e = &(&parts[a].even * &parts[b].even) + &(&x * &(&parts[a].odd * &parts[b].odd));
            let o = &(&parts[a].even * &parts[b].odd) + &(&parts[a].odd * &parts[b].even);
            assert_eq!(e, parts[a + b].even);
            assert_eq!(o, parts[a + b].odd);
        }
    }
}

fn eo_cube_suite() {
    for a in 0..=6usize {
        for b in 0..=6usize {
            for right in [false, true] {
                let c = eo_cube(a, b, right);
                let v = cube_falsify(&c, 200, 0xE0E0 + (a * 16 + b) as u64);
                assert!(!v.falsified(), "binomial square ({a},{b},{right}) falsified");
                // one-dimensional faces are decided exactly
                for axis in 1..=2usize {
                    for bit in [false, true] {
                        let f = c.face(axis, bit).unwrap();
                        let fv = cube_falsify(&f, 0, 0);
                        assert!(fv.exact);
                        assert!(!fv.falsified(), "face {axis}/{bit} of ({a},{b},{right})");
                    }
                }
            }
        }
    }
}

fn square_condition_agreement_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(555);
    let mut seen_falsified = 0usize;
    for case in 0..40usize {
        // half the cases are products of interlacing pairs (interpolatory by
        // construction), half are adversarial scrambles
        let len_roots_a = rng.gen_range(1..3);
        let roots_a = sorted_nonpos_roots(&mut rng, len_roots_a);
        let a = poly_with_roots(&roots_a, Rat::one());
        let b = poly_right_of(&mut rng, &roots_a);
        let len_roots_p = rng.gen_range(1..3);
        let roots_p = sorted_nonpos_roots(&mut rng, len_roots_p);
        let pq = poly_with_roots(&roots_p, Rat::one());
        let q = poly_right_of(&mut rng, &roots_p);
        let square = if case % 2 == 0 {
            PolyCube::interlacing_pair(a.clone(), b.clone())
                .product(&PolyCube::interlacing_pair(pq.clone(), q.clone()))
        } else {
            // swap one pair to break the ordering
            PolyCube::interlacing_pair(b.clone(), a.clone())
                .product(&PolyCube::interlacing_pair(pq.clone(), q.clone()))
        };
        let seed = 9000 + case as u64;
        let c1 = square_axis_condition(&square, 1, 200, seed).unwrap();
        let c2 = square_axis_condition(&square, 2, 200, seed).unwrap();
        assert_eq!(
            c1.falsified(),
            c2.falsified(),
            "axis conditions disagree on case {case}"
        );
        if c1.falsified() {
            seen_falsified += 1;
        }
    }
    assert!(seen_falsified >= 10, "adversarial cases were not exercised");
}

fn square_triad_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    for case in 0..30usize {
        let len_roots_a = rng.gen_range(1..3);
        let roots_a = sorted_nonpos_roots(&mut rng, len_roots_a);
        let a = poly_with_roots(&roots_a, Rat::one());
        let b = poly_right_of(&mut rng, &roots_a);
        let len_roots_p = rng.gen_range(1..3);
        let roots_p = sorted_nonpos_roots(&mut rng, len_roots_p);
        let pq = poly_with_roots(&roots_p, Rat::one());
        let q = poly_right_of(&mut rng, &roots_p);
        let (a, b, pq, q) = if case % 3 == 2 {
            (b, a, pq, q) // scrambled
        } else {
            (a, b, pq, q)
        };
        // the three transformed squares must agree under sampling
        let s1 = PolyCube::new(
            2,
            vec![q.clone(), b.clone(), pq.clone(), a.clone()],
        )
        .unwrap();
        let s2 = PolyCube::new(
            2,
            vec![
                pq.shift_up(1),
                a.shift_up(1),
                q.clone(),
                b.clone(),
            ],
        )
        .unwrap();
        let s3 = PolyCube::new(
            2,
            vec![
                b.shift_up(1),
                q.clone(),
                a.shift_up(1),
                pq.clone(),
            ],
        )
        .unwrap();
        let seed = 31000 + case as u64;
        let v1 = cube_falsify(&s1, 200, seed);
        let v2 = cube_falsify(&s2, 200, seed + 1);
        let v3 = cube_falsify(&s3, 200, seed + 2);
        assert_eq!(v1.falsified(), v2.falsified(), "triad 1/2 at {case}");
        assert_eq!(v1.falsified(), v3.falsified(), "triad 1/3 at {case}");
    }
}

fn closure_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(70_707);
    for case in 0..25usize {
        let len_roots = rng.gen_range(1..3);
        let roots = sorted_nonpos_roots(&mut rng, len_roots);
        let a = poly_with_roots(&roots, Rat::one());
        let b = poly_right_of(&mut rng, &roots);
        let pair1 = PolyCube::interlacing_pair(a.clone(), b.clone());
        let len_roots2 = rng.gen_range(1..3);
        let roots2 = sorted_nonpos_roots(&mut rng, len_roots2);
        let c = poly_with_roots(&roots2, Rat::one());
        let d = poly_right_of(&mut rng, &roots2);
        let pair2 = PolyCube::interlacing_pair(c.clone(), d.clone());
        let seed = 5_000 + case as u64;

        // product of interpolatory cubes stays interpolatory
        let square = pair1.product(&pair2);
        assert!(!cube_falsify(&square, 100, seed).falsified(), "product {case}");

        // extension: 1-cube -> square -> 3-cube
        let ext = pair1.extend();
        assert!(!cube_falsify(&ext, 100, seed + 1).falsified(), "extend {case}");
        let ext3 = square.extend();
        assert!(!cube_falsify(&ext3, 50, seed + 2).falsified(), "extend3 {case}");

        // face-sharing sum: two products over the same lower pair
        let b2 = poly_right_of(&mut rng, &roots);
        let pair1b = PolyCube::interlacing_pair(a.clone(), b2.clone());
        // product layout: axis-1 lower face (index 1) holds a * (pair2)
        let s1 = pair1.product(&pair2);
        let s2 = pair1b.product(&pair2);
        let summed = s1.sum(&s2, false).expect("shared face");
        assert!(!cube_falsify(&summed, 100, seed + 3).falsified(), "sum {case}");

        // contraction of a 3-cube built as pair x square
        let cube3 = pair1.product(&square);
        if cube3.contract(1, 2).is_ok() {
            let contracted = cube3.contract(1, 2).unwrap();
            assert!(
                !cube_falsify(&contracted, 80, seed + 4).falsified(),
                "contract {case}"
            );
        }
    }
}

fn amicable_campaign_suite() {
    let graphs = enumerate_connected_multigraphs(5, 8, 3, true).unwrap();
    assert!(graphs.len() > 300, "enumeration unexpectedly small: {}", graphs.len());
    let report = conjecture_scan(graphs, 100, 0xA111C, true);
    assert!(
        report.falsified.is_empty(),
        "campaign found falsified pairs: {:?}",
        report
            .falsified
            .iter()
            .map(|h| (h.graph.to_string(), h.pair))
            .collect::<Vec<_>>()
    );
    assert!(
        report.consequence_failures.is_empty(),
        "interlacing consequences failed: {:?}",
        report.consequence_failures
    );
    println!(
        "    amicability campaign: {} graphs, {} pairs ({} exact, {} sampled), zero falsified",
        report.graphs, report.pairs, report.exact_decisions, report.sampled_decisions
    );
}

fn sp_round_trip_suite() {
    use relzero_core::graph::sp_recognize;
    for seed in 0..1000u64 {
        let size = 1 + (seed as usize % 14);
        let net = random_sp(size, seed);
        assert!(
            sp_recognize(&net.graph).unwrap().is_some(),
            "seed {seed}: built network not recognized"
        );
    }
}

fn sp_terminal_amicability_suite() {
    let mut engine = RelEngine::new();
    for seed in 0..300u64 {
        let net = random_sp(1 + (seed as usize % 10), seed);
        let (s, t) = net.terminals;
        let ctx = cut_pair_context(&mut engine, &net.graph, s, t).unwrap();
        let verdict = is_amicable(&ctx, 100, seed);
        assert!(!verdict.falsified(), "terminal pair falsified at seed {seed}");
        let very = is_very_amicable(&ctx, 60, seed);
        if !very.falsified() {
            // stronger condition passing is consistent with the weaker one
            assert!(!verdict.falsified());
        }
    }
}

#[test]
fn criterion_10_property_suites() {
    lemma_chain_suite();
    println!("    chain transitivity: ok");
    lemma_sum_suite();
    println!("    sum and swap rules: ok");
    lemma_positive_combination_suite();
    println!("    positive combinations: ok");
    exact_numeric_agreement_suite();
    println!("    exact/numeric agreement: ok");
    eo_recurrence_suite();
    println!("    binomial part recurrences: ok");
    eo_cube_suite();
    println!("    binomial squares at 200 samples: ok");
    square_condition_agreement_suite();
    println!("    axis-condition equivalence: ok");
    square_triad_suite();
    println!("    transformed-square triads: ok");
    closure_suite();
    println!("    closure constructions: ok");
    sp_round_trip_suite();
    println!("    series-parallel recognition round trips: ok");
    sp_terminal_amicability_suite();
    println!("    series-parallel terminal pairs: ok");
    amicable_campaign_suite();
    println!("ACCEPTANCE 10: PASS — property suites clean");
}

#[test]
fn criterion_11_cycle_component_audit() {
    let fixtures: Vec<Vec<usize>> = vec![
        vec![1, 1, 1],
        vec![1, 1, 1, 1],
        vec![1, 1, 1, 1, 1],
        vec![1, 1, 1, 1, 1, 1],
        vec![2, 2, 2],
        vec![1, 2, 3],
    ];
    for cs in &fixtures {
        let n = cs.len();
        let cycle = closed_form_cycle(cs).unwrap();
        let audit = &cycle.audit;
        assert_eq!(
            audit.constant,
            Some(rat(n as i64 - 2)),
            "cycle {cs:?}: inert component is not (n-2) times the product form"
        );
        // and the engine agrees with an independent recomputation
        let direct = RelEngine::new().j(&cycle_graph(cs).unwrap()).unwrap();
        assert_eq!(cycle.report.j, direct);
    }
    println!(
        "ACCEPTANCE 11: PASS — inert cycle J-component equals (n-2) * x^nu * product(S_c) on all fixtures"
    );
    println!(
        "    documented finding: the proportionality constant is n-2, one less than the classical display"
    );
}

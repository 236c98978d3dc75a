//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Built with `harness = false`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kdirections::budget::Budget;
use kdirections::constructor::{construct, factorial_floor, verify_construction, ConstructOptions, Construction, VerifyParams};
use kdirections::density::{chain_check, covering_radius, sphere_net, witness_tuple, ChainOptions};
use kdirections::enumeration::{directions, directions_with, ground_set, GroundRule, GroundSet, Sampling};
use kdirections::exact::ExactCoord;
use kdirections::remark::demo_remark;
use kdirections::targets::{close_generators, point_from_strs, TargetPoint, TargetSpec};

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

type Check = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Check, u64); 9] = [
        ("oracle equivalence", c1_oracle_equivalence, 10),
        ("witness sandwich", c2_witness, 5),
        ("prime direction density", c3_prime_density, 120),
        ("construction certificates", c4_certificates, 30),
        ("construction round trip", c5_round_trip, 60),
        ("dimension chain", c6_chain, 60),
        ("repetition versus distinct entries", c7_repetition, 60),
        ("repeated-entry counterexample", c8_remark, 30),
        ("t-injectivity", c9_t_injectivity, 1),
    ];
    let mut failed = 0;
    for (n, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut o = check();
        let took = start.elapsed();
        if took > Duration::from_secs(*limit) {
            o.pass = false;
            o.detail.push_str(&format!("; over the {limit} s limit"));
        }
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} [{}] {name}: {} ({:.2} s)",
            n + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            took.as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn budget() -> Budget {
    Budget::default()
}

fn cloud_u64(a: &GroundSet, k: usize, distinct: bool) -> BTreeSet<Vec<u64>> {
    directions(a, k, distinct, &budget())
        .unwrap()
        .dirs()
        .iter()
        .map(|d| d.as_u64().expect("small entries").to_vec())
        .collect()
}

fn c1_oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for mask in 1u32..(1 << 12) {
        if mask.count_ones() > 6 {
            continue;
        }
        let a: Vec<u64> = (1..=12).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let set = GroundSet::explicit_u64(&a).unwrap();
        for k in [2, 3] {
            for distinct in [false, true] {
                // distinct-entry clouds need |A| ≥ k
                if distinct && a.len() < k {
                    continue;
                }
                if cloud_u64(&set, k, distinct) != brute_directions(&a, k, distinct) {
                    return outcome(false, format!("mismatch for A = {a:?}, k = {k}, distinct = {distinct}"));
                }
                checked += 1;
            }
        }
    }
    outcome(true, format!("{checked} (A, k, variant) cases equal the brute-force sets"))
}

/// Rational point on the quarter circle, `((1−t²)/(1+t²), 2t/(1+t²))`.
fn circle_point(t: &BigRational) -> [BigRational; 2] {
    let one = BigRational::one();
    let d = &one + t * t;
    [(&one - t * t) / &d, (BigRational::from_integer(2.into()) * t) / &d]
}

fn c2_witness() -> Outcome {
    let b = budget();
    let naturals = ground_set(&GroundRule::Naturals, 100_000, &b).unwrap();
    let primes = ground_set(&GroundRule::Primes, 100_000, &b).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut xs = vec![[BigRational::new(3.into(), 5.into()), BigRational::new(4.into(), 5.into())]];
    for _ in 0..20 {
        let t = BigRational::new(rng.gen_range(50..=950).into(), 1000.into());
        xs.push(circle_point(&t));
    }
    let m = 10_000u64;
    let mut worst = [0.0f64; 2];
    for (which, (set, limit)) in [(&naturals, 5e-3), (&primes, 2e-2)].into_iter().enumerate() {
        let is_member = |n: u64| which == 0 || is_prime(n);
        for x in &xs {
            let point = TargetPoint::new(x.iter().cloned().map(ExactCoord::rational).collect()).unwrap();
            let w = witness_tuple(set, &point, m).unwrap();
            for (i, xi) in x.iter().enumerate() {
                let mx = xi * BigRational::from_integer(m.into());
                let floor = mx.floor().to_integer().to_u64().unwrap();
                let above = (floor + 1..).find(|&n| is_member(n)).unwrap();
                let below = (1..=floor).rev().find(|&n| is_member(n)).unwrap();
                let got = w.tuple.entries()[i].to_u64().unwrap();
                let pred = w.predecessors[i].to_u64().unwrap();
                let sandwich = BigRational::from_integer(pred.into()) <= mx && mx < BigRational::from_integer(got.into());
                if got != above || pred != below || !sandwich {
                    return outcome(false, format!("coordinate {i} of {x:?}: got ({pred}, {got}), oracle ({below}, {above})"));
                }
            }
            let xf: Vec<f64> = x.iter().map(|q| q.to_f64().unwrap()).collect();
            let err = normalize(&w.tuple.entries().iter().map(|e| e.to_u64().unwrap()).collect::<Vec<_>>())
                .iter()
                .zip(&xf)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            if err >= limit || (err - w.error).abs() > 1e-12 {
                return outcome(false, format!("error {err} for x = {xf:?} (limit {limit})"));
            }
            worst[which] = worst[which].max(err);
        }
    }
    outcome(
        true,
        format!(
            "21 points, exact sandwiches; worst error {:.2e} (naturals), {:.2e} (primes)",
            worst[0], worst[1]
        ),
    )
}

fn c3_prime_density() -> Outcome {
    let b = budget();
    let net2 = sphere_net(2, 0.01, &b).unwrap();
    let mut radii = Vec::new();
    for n in [100u64, 1_000, 10_000] {
        let set = ground_set(&GroundRule::Primes, n, &b).unwrap();
        let cloud = directions(&set, 2, false, &b).unwrap();
        let r = covering_radius(&cloud, &net2).unwrap().covering_radius;
        if n <= 1_000 {
            // baseline from the brute-force pipeline
            let oracle: Vec<Vec<f64>> = brute_directions(&primes_through(n), 2, false).iter().map(|v| normalize(v)).collect();
            let net: Vec<Vec<f64>> = net2.points().map(<[f64]>::to_vec).collect();
            let expect = brute_covering_radius(&net, &oracle);
            if (expect - r).abs() > 1e-12 {
                return outcome(false, format!("N = {n}: radius {r}, brute force {expect}"));
            }
        }
        radii.push(r);
    }
    let decreasing = radii.windows(2).all(|w| w[1] < w[0]);
    let set = ground_set(&GroundRule::Primes, 5_000, &b).unwrap();
    let sampling = Sampling { samples: 1_000_000, seed: 3 };
    let cloud = directions_with(&set, 3, false, &b, Some(sampling)).unwrap();
    let r3 = covering_radius(&cloud, &sphere_net(3, 0.05, &b).unwrap()).unwrap().covering_radius;
    outcome(
        decreasing && radii[2] < 0.05 && r3 < 0.1,
        format!(
            "k=2 radii {:.4} > {:.4} > {:.4}; k=3 N=5000 radius {:.4} from {} sampled tuples (upper bound)",
            radii[0],
            radii[1],
            radii[2],
            r3,
            sampling.samples
        ),
    )
}

fn three_specs() -> Vec<(&'static str, TargetSpec)> {
    vec![
        ("closure{ρ(1,2)}", close_generators(&[TargetPoint::from_integers(&[1, 2]).unwrap()]).unwrap()),
        ("closure{ρ(1,√2,0)}", close_generators(&[point_from_strs(&["1", "sqrt(2)", "0"]).unwrap()]).unwrap()),
        ("hyperplane boundary k=3", TargetSpec::hyperplane_boundary(3).unwrap()),
    ]
}

fn to_biguint(n: &BigInt) -> BigUint {
    n.to_biguint().expect("nonnegative")
}

/// Checks (C1) to (C4) for every step against the oracles.
fn certify(run: &Construction, k: usize) -> Result<f64, String> {
    let mut seen = BTreeSet::new();
    let mut worst_ratio = 0.0f64;
    const P: u32 = 512;
    for rec in run.records() {
        let m = rec.m;
        let c = rec.c.entries();
        // C1
        if (0..k).any(|i| (0..i).any(|j| c[i] == c[j])) {
            return Err(format!("m = {m}: repeated entry"));
        }
        // C2
        let g = c.iter().fold(BigUint::zero(), |g, x| num_integer::Integer::gcd(&g, x));
        if !seen.insert(c.iter().map(|x| x / &g).collect::<Vec<_>>()) {
            return Err(format!("m = {m}: primitive direction repeats"));
        }
        // C3: c_i − ⌊m!·y_i⌋ = s_i + t ∈ [2, k + m]
        let f = factorial(m);
        let mut y_fixed = Vec::with_capacity(k);
        for (i, ci) in c.iter().enumerate() {
            let y = rec.y.normalized_coord(i).map_err(|e| e.to_string())?;
            let (p, q) = (to_biguint(y.q().numer()), to_biguint(y.q().denom()));
            let floor = floor_scaled_surd(&f, &p, &q, y.r());
            let gap = ci - &floor;
            if gap != BigUint::from(rec.s[i] + rec.t) || gap < BigUint::from(2u32) || gap > BigUint::from(k as u64 + m) {
                return Err(format!("m = {m}, i = {i}: c_i − ⌊m!·y_i⌋ = {gap}"));
            }
            y_fixed.push(floor_scaled_surd(&(BigUint::one() << P), &p, &q, y.r()));
        }
        // C4 in 512-bit fixed point; every rounded quantity is off by < 3 ulp
        if m >= 4 {
            let norm2: BigUint = c.iter().map(|x| x * x).sum();
            let cn = newton_isqrt(&(norm2 << (2 * P)));
            let mut sum = BigUint::zero();
            for (ci, yi) in c.iter().zip(&y_fixed) {
                let u = BigInt::from((ci << (2 * P)) / &cn);
                let e = (u - BigInt::from(yi.clone())).abs().to_biguint().unwrap() + 3u32;
                sum += &e * &e;
            }
            let bound = (BigUint::from(10 * (k as u64 + m)) << P) / &f;
            if sum > &bound * &bound {
                return Err(format!("m = {m}: ‖ρ(c) − y‖ above 10(k+m)/m!"));
            }
            let measured = (sum.to_f64().unwrap()).sqrt() / bound.to_f64().unwrap();
            worst_ratio = worst_ratio.max(measured);
        }
    }
    Ok(worst_ratio)
}

fn c4_certificates() -> Outcome {
    let mut notes = Vec::new();
    for (name, spec) in three_specs() {
        let run = match construct(&spec, 20, &ConstructOptions::default()) {
            Ok(run) => run,
            Err(e) => return outcome(false, format!("{name}: {e}")),
        };
        match certify(&run, spec.k()) {
            Ok(r) => notes.push(format!("{name} ok (C4 uses ≤ {:.0}% of its bound)", 100.0 * r)),
            Err(e) => return outcome(false, format!("{name}: {e}")),
        }
    }
    let y = TargetPoint::from_integers(&[1, 1]).unwrap();
    for m in 1..=30 {
        let got = factorial_floor(&y, 0, m).unwrap().value;
        let want = floor_factorial_over_sqrt2(m);
        if got != want {
            return outcome(false, format!("⌊{m}!/√2⌋: {got} versus 4096-bit {want}"));
        }
    }
    notes.push("⌊m!/√2⌋ matches 4096-bit values for m ≤ 30".into());
    outcome(true, notes.join("; "))
}

fn c5_round_trip() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, spec) in three_specs() {
        let run = construct(&spec, 20, &ConstructOptions::default()).unwrap();
        let r = verify_construction(&run.ground_set(), &spec, &VerifyParams::new(20, 10, 0.05), &budget()).unwrap();
        pass &= r.forward_hausdorff < 1e-6 && r.backward_violations == 0;
        notes.push(format!(
            "{name}: forward {:.1e}, backward {} of {} tuples beyond 1e-3 (worst {:.3}, {} beyond the mixed-scale bound)",
            r.forward_hausdorff, r.backward_violations, r.backward_tuples, r.backward_hausdorff, r.unexplained_violations
        ));
    }
    outcome(pass, notes.join("; "))
}

fn c6_chain() -> Outcome {
    let b = budget();
    let h = 0.05;
    let primes = ground_set(&GroundRule::Primes, 1_000, &b).unwrap();
    let p = chain_check(&primes, 3, h, &ChainOptions::default(), &b).unwrap();
    let forward = p.lower.covering_radius <= p.upper.covering_radius + 2.0 * h;

    let spec = TargetSpec::hyperplane_boundary(3).unwrap();
    let a = construct(&spec, 20, &ConstructOptions::default()).unwrap().ground_set();
    let tail = ChainOptions {
        tail_threshold: Some(factorial(4)),
        ..ChainOptions::default()
    };
    let c = chain_check(&a, 3, h, &tail, &b).unwrap();
    let gap = c.lower.covering_radius < 0.1 && c.upper.covering_radius > 0.2;

    let sep = TargetPoint::from_integers(&[1, 1, 1])
        .unwrap()
        .distance_squared(&TargetPoint::from_integers(&[1, 1, 0]).unwrap())
        .unwrap();
    let exact_ok = (sep.to_f64() - (2.0 - 2.0 * (2.0f64 / 3.0).sqrt())).abs() < 1e-15;
    outcome(
        forward && gap && exact_ok,
        format!(
            "primes N=1000: ε_2 = {:.4} ≤ ε_3 + 2h = {:.4}; constructed boundary set (M=20, entries ≥ 4!): ε_2 = {:.4}, ε_3 = {:.4}; ‖ρ(1,1,1) − ρ(1,1,0)‖² = {} ≈ {:.4}²",
            p.lower.covering_radius,
            p.upper.covering_radius + 2.0 * h,
            c.lower.covering_radius,
            c.upper.covering_radius,
            sep,
            sep.to_f64().sqrt()
        ),
    )
}

fn c7_repetition() -> Outcome {
    let b = budget();
    let h = 0.02;
    let set = ground_set(&GroundRule::Naturals, 1_000, &b).unwrap();
    let mut notes = Vec::new();
    let mut pass = true;
    for k in [2usize, 3] {
        let net = sphere_net(k, h, &b).unwrap();
        let sampling = (k == 3).then_some(Sampling { samples: 1_000_000, seed: 7 });
        let eps = |distinct| {
            let cloud = directions_with(&set, k, distinct, &b, sampling).unwrap();
            covering_radius(&cloud, &net).unwrap().covering_radius
        };
        let (with, without) = (eps(false), eps(true));
        pass &= (with - without).abs() <= 2.0 * h;
        notes.push(format!(
            "k={k}: {with:.4} with repetition, {without:.4} distinct{}",
            if sampling.is_some() { " (sampled)" } else { "" }
        ));
    }
    outcome(pass, notes.join("; "))
}

fn c8_remark() -> Outcome {
    let r = demo_remark(3, 15, &budget()).unwrap();
    // X: the six orderings of ρ(1,√2,0) and the three axes
    let s = 3f64.sqrt();
    let base = [1.0 / s, 2f64.sqrt() / s, 0.0];
    let mut x: Vec<[f64; 3]> = Vec::new();
    for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        x.push([base[p[0]], base[p[1]], base[p[2]]]);
    }
    x.extend([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    // θ = (1, √2, 1)/2
    let theta = [0.5, 2f64.sqrt() / 2.0, 0.5];
    let sep = x
        .iter()
        .map(|p| p.iter().zip(&theta).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
        .fold(f64::INFINITY, f64::min);
    let pass = r.x_size == 9
        && r.repetition_distance < 1e-3
        && r.distinct_tail_distance.is_some_and(|d| d > 0.1)
        && (sep - r.separation).abs() < 1e-12
        && r.separation > 0.3;
    outcome(
        pass,
        format!(
            "|X| = {}, with repetition {:.2e}, distinct tail {:.4}, separation² = {} ≈ {:.4}²",
            r.x_size,
            r.repetition_distance,
            r.distinct_tail_distance.unwrap_or(f64::NAN),
            r.separation_squared,
            r.separation
        ),
    )
}

fn c9_t_injectivity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let u = rng.gen_biguint(128) + 1u32;
        let mut v = rng.gen_biguint(128) + 1u32;
        if v == u {
            v += 1u32;
        }
        let t1: u32 = rng.gen_range(1..=1000);
        let mut t2: u32 = rng.gen_range(1..=1000);
        if t2 == t1 {
            t2 = if t1 == 1000 { 1 } else { t1 + 1 };
        }
        if (&u + t1) * (&v + t2) == (&u + t2) * (&v + t1) {
            return outcome(false, format!("collision at u = {u}, v = {v}, t = ({t1}, {t2})"));
        }
    }
    outcome(true, "10000 random 128-bit (u, v, t1, t2), no equal cross products")
}

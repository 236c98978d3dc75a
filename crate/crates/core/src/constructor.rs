//! Building a set `A` whose distinct-entry directions accumulate on `X`.
//!
//! Given a dense sequence `y^(1), y^(2), …` of `X`, step `m` produces
//!
//! ```text
//! c_i^(m) = ⌊m!·y_i^(m)⌋ + s_i^(m) + t^(m)
//! ```
//!
//! with offsets `s^(m) ∈ {1, …, k}^k` that make the entries pairwise distinct
//! and a shift `t^(m) ∈ {1, …, m}` that keeps the direction of
//! `(c_1^(m), c_2^(m))` new. `A` is the union of all entries. Each step is
//! checked against four certificates:
//!
//! * (C1) the entries of `c^(m)` are pairwise distinct;
//! * (C2) `m ↦ primitive(c_1^(m), c_2^(m))` is injective;
//! * (C3) `|c_i^(m) − m!·y_i^(m)| ≤ k + m`;
//! * (C4) `‖ρ(c^(m)) − y^(m)‖ ≤ 10·(k + m)/m!` for `m ≥ 4`.
//!
//! ```
//! use kdirections::constructor::{construct, ConstructOptions};
//! use kdirections::targets::{close_generators, TargetPoint};
//!
//! let x = close_generators(&[TargetPoint::from_integers(&[1, 2]).unwrap()]).unwrap();
//! let run = construct(&x, 8, &ConstructOptions::default()).unwrap();
//! assert_eq!(run.records().len(), 8);
//! assert!(run.records().iter().all(|r| r.c.has_distinct_entries()));
//! ```

use std::collections::HashSet;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::density::{directed_hausdorff, sphere_net};
use crate::direction::{scaled_f64, IntTuple, PrimitiveDirection, UnitVector};
use crate::enumeration::{directions, GroundSet, Provenance};
use crate::error::{precondition, Error, Result};
use crate::interval::Interval;
use crate::nearest::GridIndex;
use crate::targets::{close_generators, enumerate_dense, validate_target, TargetKind, TargetPoint, TargetSpec, Verdict};
use crate::SCHEMA_VERSION;

/// Precision cap for factorial floors, in bits.
pub const DEFAULT_PRECISION_CAP: u32 = 16384;

/// A certified `⌊m!·y_i⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorialFloor {
    pub m: u64,
    pub i: usize,
    #[serde(serialize_with = "as_decimal")]
    pub value: BigUint,
    /// Fractional bits of the resolving enclosure; 0 when settled exactly.
    pub precision_bits: u32,
    /// The value `m!·y_i` itself is an integer.
    pub exact: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, j| acc * j)
}

/// `⌊m!·y_i⌋` for `y = ρ(v)`, with the default precision cap.
pub fn factorial_floor(y: &TargetPoint, i: usize, m: u64) -> Result<FactorialFloor> {
    factorial_floor_capped(y, i, m, &factorial(m), DEFAULT_PRECISION_CAP)
}

/// `⌊f·v_i/‖v‖⌋` with `f = m!` supplied by the caller.
///
/// If `(f·v_i)²/‖v‖²` is the square of an integer the value is returned
/// directly. Otherwise `f·√(v_i²)/√(‖v‖²)` is enclosed in dyadic intervals of
/// doubling precision until the enclosure contains no integer. Exceeding
/// `cap` bits is an error, never a guess.
pub fn factorial_floor_capped(y: &TargetPoint, i: usize, m: u64, f: &BigUint, cap: u32) -> Result<FactorialFloor> {
    if m == 0 {
        return Err(precondition("m must be at least 1"));
    }
    if i >= y.k() {
        return Err(precondition("coordinate index out of range"));
    }
    let done = |value: BigUint, precision_bits: u32, exact: bool| FactorialFloor {
        m,
        i,
        value,
        precision_bits,
        exact,
    };
    if y.is_zero_at(i) {
        return Ok(done(BigUint::zero(), 0, true));
    }
    let f = BigInt::from(f.clone());
    let target_sq = &y.squares()[i] * BigRational::from_integer(&f * &f);
    if target_sq.is_integer() {
        let n = target_sq.to_integer();
        let r = n.sqrt();
        if &r * &r == n {
            return Ok(done(r.to_biguint().unwrap(), 0, true));
        }
    }
    let vi_sq = y.coords()[i].square();
    let norm_sq = y.norm_squared();
    let mut prec = (64 + f.bits() as u32).min(cap);
    loop {
        let vi = Interval::sqrt_of(&vi_sq, prec);
        let norm = Interval::sqrt_of(&norm_sq, prec);
        if let Some(fl) = vi
            .mul_integer(&f)
            .div(&norm)
            .and_then(|v| v.floor_if_resolved())
        {
            return Ok(done(fl.to_biguint().expect("nonnegative floor"), prec, false));
        }
        if prec >= cap {
            return Err(Error::Unresolved { m, bits: prec as u64 });
        }
        prec = prec.saturating_mul(2).min(cap);
    }
}

/// Everything computed at one step.
#[derive(Debug, Clone)]
pub struct StepRecord {
    pub m: u64,
    pub y: TargetPoint,
    pub floors: Vec<FactorialFloor>,
    pub s: Vec<u64>,
    pub t: u64,
    pub c: IntTuple,
    /// Certified upper bound on `‖ρ(c^(m)) − y^(m)‖`.
    pub rho_error: f64,
}

/// One JSON line of a construction dump.
#[derive(Debug, Clone, Serialize)]
pub struct DumpRecord {
    pub m: u64,
    pub s: Vec<u64>,
    pub t: u64,
    pub c: Vec<String>,
    pub y: Vec<String>,
    pub rho_error: f64,
}

impl StepRecord {
    pub fn dump(&self) -> Result<DumpRecord> {
        Ok(DumpRecord {
            m: self.m,
            s: self.s.clone(),
            t: self.t,
            c: self.c.entries().iter().map(ToString::to_string).collect(),
            y: (0..self.y.k())
                .map(|i| self.y.normalized_coord(i).map(|c| c.to_string()))
                .collect::<Result<_>>()?,
            rho_error: self.rho_error,
        })
    }
}

/// The sequence `c^(1), …, c^(m)` built so far and the registry of
/// primitive first-two-coordinate pairs.
#[derive(Debug, Clone)]
pub struct ConstructionState {
    k: usize,
    factorial: BigUint,
    history: Vec<StepRecord>,
    registry: HashSet<PrimitiveDirection>,
    precision_cap: u32,
}

impl ConstructionState {
    pub fn new(k: usize) -> Self {
        ConstructionState {
            k,
            factorial: BigUint::one(),
            history: Vec::new(),
            registry: HashSet::new(),
            precision_cap: DEFAULT_PRECISION_CAP,
        }
    }

    pub fn with_precision_cap(mut self, cap: u32) -> Self {
        self.precision_cap = cap;
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn history(&self) -> &[StepRecord] {
        &self.history
    }

    pub fn next_m(&self) -> u64 {
        self.history.len() as u64 + 1
    }

    pub fn registry_len(&self) -> usize {
        self.registry.len()
    }

    /// `A = ∪ {c_i^(m)}` with provenance.
    pub fn ground_set(&self) -> GroundSet {
        GroundSet::constructed(self.history.iter().flat_map(|r| {
            r.c.entries()
                .iter()
                .enumerate()
                .map(move |(i, v)| (v.clone(), Provenance { m: r.m, i: i + 1 }))
        }))
    }
}

fn invariant(msg: String) -> Error {
    Error::Invariant(msg)
}

/// Runs step `m`, which must be the next one, and returns `c^(m)`.
pub fn construct_step(spec: &TargetSpec, m: u64, state: &mut ConstructionState) -> Result<IntTuple> {
    if spec.k() != state.k {
        return Err(precondition("state and spec dimensions differ"));
    }
    if m != state.next_m() {
        return Err(precondition(format!("expected step {}, got {m}", state.next_m())));
    }
    let y = enumerate_dense(spec, m)?;
    step_with_target(y, state)
}

fn step_with_target(y: TargetPoint, state: &mut ConstructionState) -> Result<IntTuple> {
    let k = state.k;
    let m = state.next_m();
    if y.k() != k {
        return Err(precondition("target dimension differs from the state"));
    }
    let fact = &state.factorial * m;
    let floors = (0..k)
        .map(|i| factorial_floor_capped(&y, i, m, &fact, state.precision_cap))
        .collect::<Result<Vec<_>>>()?;

    // s: for each coordinate in order, the least offset avoiding earlier entries
    let mut s = Vec::with_capacity(k);
    let mut partial: Vec<BigUint> = Vec::with_capacity(k);
    for fl in &floors {
        let pick = (1..=k as u64)
            .find(|&si| {
                let e = &fl.value + si;
                !partial.contains(&e)
            })
            .ok_or_else(|| invariant(format!("no distinct offset at m = {m}")))?;
        partial.push(&fl.value + pick);
        s.push(pick);
    }

    // t: the least shift whose leading pair direction is new
    let (t, c) = (1..=m)
        .map(|t| (t, partial.iter().map(|e| e + t).collect::<Vec<BigUint>>()))
        .find(|(_, c)| {
            let pair = PrimitiveDirection::from_biguint(&c[..2]).expect("positive");
            !state.registry.contains(&pair)
        })
        .ok_or_else(|| invariant(format!("no admissible shift at m = {m}")))?;

    let tuple = IntTuple::new(c.clone())?;
    // (C1)
    if !tuple.has_distinct_entries() {
        return Err(invariant(format!("(C1) repeated entry at m = {m}")));
    }
    // (C2)
    let pair = PrimitiveDirection::from_biguint(&c[..2])?;
    if !state.registry.insert(pair) {
        return Err(invariant(format!("(C2) repeated pair direction at m = {m}")));
    }
    // (C3), exactly: (c_i − k − m)² ≤ (m!·y_i)² ≤ (c_i + k + m)²
    let slack = BigUint::from(k as u64 + m);
    let f = BigInt::from(fact.clone());
    for (i, ci) in c.iter().enumerate() {
        let target_sq = &y.squares()[i] * BigRational::from_integer(&f * &f);
        let hi = BigRational::from_integer(BigInt::from((ci + &slack).pow(2)));
        let lo_ok = if *ci > slack {
            BigRational::from_integer(BigInt::from((ci - &slack).pow(2))) <= target_sq
        } else {
            true
        };
        if !(lo_ok && target_sq <= hi) {
            return Err(invariant(format!("(C3) coordinate {} off scale at m = {m}", i + 1)));
        }
    }
    // (C4), by interval arithmetic
    let d = rho_error_enclosure(&c, &y, &fact);
    if m >= 4 {
        let bound = BigRational::new(BigInt::from(10 * (k as u64 + m)), f.clone());
        if d.upper() > bound {
            return Err(invariant(format!("(C4) direction error above 10(k+m)/m! at m = {m}")));
        }
    }
    state.history.push(StepRecord {
        m,
        y,
        floors,
        s,
        t,
        c: tuple.clone(),
        rho_error: d.upper_f64(),
    });
    state.factorial = fact;
    Ok(tuple)
}

/// Enclosure of `‖ρ(c) − y‖`, accurate well below `1/m!`.
fn rho_error_enclosure(c: &[BigUint], y: &TargetPoint, fact: &BigUint) -> Interval {
    let prec = fact.bits() as u32 * 2 + 96;
    let norm_sq: BigUint = c.iter().map(|e| e * e).sum();
    let norm = Interval::sqrt_of(&BigRational::from_integer(norm_sq.into()), prec);
    let mut d2 = Interval::exact_integer(BigInt::zero(), prec);
    for (ci, yi) in c.iter().zip(y.squares()) {
        let unit = Interval::exact_integer(BigInt::from(ci.clone()), prec)
            .div(&norm)
            .expect("positive norm");
        let diff = unit.sub(&Interval::sqrt_of(yi, prec));
        d2 = d2.add(&diff.square());
    }
    d2.sqrt()
}

/// Settings for [`construct`].
#[derive(Debug, Clone)]
pub struct ConstructOptions {
    /// Accept custom enumerations, which carry no closure certificate.
    pub allow_unverified: bool,
    pub precision_cap: u32,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            allow_unverified: false,
            precision_cap: DEFAULT_PRECISION_CAP,
        }
    }
}

/// A finished run of the construction.
#[derive(Debug, Clone)]
pub struct Construction {
    state: ConstructionState,
}

impl Construction {
    pub fn state(&self) -> &ConstructionState {
        &self.state
    }

    pub fn records(&self) -> &[StepRecord] {
        self.state.history()
    }

    pub fn ground_set(&self) -> GroundSet {
        self.state.ground_set()
    }

    /// One JSON object per line, in step order.
    pub fn write_dump<W: Write>(&self, mut out: W) -> Result<()> {
        for r in self.records() {
            serde_json::to_writer(&mut out, &r.dump()?)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

/// Runs steps `1..=m_max`.
pub fn construct(spec: &TargetSpec, m_max: u64, options: &ConstructOptions) -> Result<Construction> {
    let report = validate_target(spec);
    match report.verdict {
        Verdict::Valid => {}
        Verdict::Unverifiable if options.allow_unverified => {}
        Verdict::Unverifiable => {
            return Err(precondition(
                "custom target carries no closure certificate; pass allow_unverified to build anyway",
            ))
        }
        Verdict::Invalid => {
            let (p, v) = &report.witnesses[0];
            return Err(precondition(format!("target is not closed: {p} under {v}")));
        }
    }
    if spec.k() < 2 {
        return Err(precondition("k must be at least 2"));
    }
    let mut state = ConstructionState::new(spec.k()).with_precision_cap(options.precision_cap);
    for y in spec.dense_sequence().take(m_max as usize) {
        step_with_target(y, &mut state)?;
    }
    if state.history.len() as u64 != m_max {
        return Err(Error::Invariant("dense sequence ended early".into()));
    }
    Ok(Construction { state })
}

/// Parameters of [`verify_construction`].
#[derive(Debug, Clone)]
pub struct VerifyParams {
    pub m_max: u64,
    /// Tuples for the backward check use only elements `≥ l_index!`.
    pub l_index: u64,
    pub h: f64,
    pub tolerance: f64,
}

impl VerifyParams {
    pub fn new(m_max: u64, l_index: u64, h: f64) -> Self {
        VerifyParams {
            m_max,
            l_index,
            h,
            tolerance: 1e-3,
        }
    }
}

/// Empirical comparison of `D^k̲(A)′` with `X`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    #[serde(rename = "M")]
    pub m_max: u64,
    #[serde(rename = "L_index")]
    pub l_index: u64,
    pub h: f64,
    pub tolerance: f64,
    /// `max` over the X-sample of the distance to `{ρ(c^(m)) : m ≤ M}`.
    pub forward_hausdorff: f64,
    /// `"X"` when the whole finite set is the sample, `"targets"` when it is
    /// `y^(m)` for `L_index < m ≤ M`.
    pub forward_sample: &'static str,
    pub forward_sample_size: usize,
    /// `max` over net points of `X` of the distance to `D^k̲(A)`; infinite
    /// kinds only, when within budget.
    pub forward_net_hausdorff: Option<f64>,
    #[serde(serialize_with = "as_decimal")]
    pub tail_threshold: BigUint,
    pub backward_tuples: u64,
    /// `max` over tail tuples of the distance of `ρ(a)` to `X`.
    pub backward_hausdorff: f64,
    /// Tail tuples farther than `tolerance` from `X`.
    pub backward_violations: u64,
    /// Violations that also exceed `2(‖low‖ + √k(k + m))/‖a‖`, where `m` is
    /// the largest step among the entries and `low` collects the entries
    /// from earlier steps. That quantity bounds the distance from `ρ(a)` to
    /// the projected, permuted target of step `m`, so this count is zero
    /// whenever the construction behaves as designed.
    pub unexplained_violations: u64,
    pub worst_tuple: Vec<String>,
}

impl VerificationReport {
    pub fn passes(&self, forward_limit: f64) -> bool {
        self.forward_hausdorff < forward_limit && self.backward_violations == 0
    }
}

/// Distance to `X` in floating point.
enum XDistance {
    Grid(GridIndex),
    Boundary,
    Everything,
}

impl XDistance {
    fn of(&self, x: &[f64]) -> f64 {
        match self {
            XDistance::Grid(g) => g.nearest(x).1,
            XDistance::Boundary => {
                let u = x.iter().copied().fold(f64::INFINITY, f64::min).max(0.0);
                (2.0 - 2.0 * (1.0 - u * u).max(0.0).sqrt()).max(0.0).sqrt()
            }
            XDistance::Everything => 0.0,
        }
    }
}

/// Checks a constructed `A` against `X`.
///
/// Forward: every sampled point of `X` should be close to some `ρ(c^(m))`.
/// Backward: every distinct-entry k-tuple from the elements `≥ L_index!`
/// should point close to `X`.
pub fn verify_construction(a: &GroundSet, spec: &TargetSpec, params: &VerifyParams, budget: &Budget) -> Result<VerificationReport> {
    let k = spec.k();
    let m_max = params.m_max;
    let prov = a
        .provenance()
        .ok_or_else(|| precondition("A carries no construction provenance"))?;
    // c^(m) back from provenance, plus each element's latest step
    let mut tuples: Vec<Vec<Option<BigUint>>> = vec![vec![None; k]; m_max as usize];
    let mut step_of: Vec<u64> = Vec::with_capacity(a.len());
    for (e, ps) in a.elements().iter().zip(prov) {
        for p in ps {
            if p.m >= 1 && p.m <= m_max && p.i >= 1 && p.i <= k {
                tuples[(p.m - 1) as usize][p.i - 1] = Some(e.clone());
            }
        }
        step_of.push(ps.iter().map(|p| p.m).max().unwrap_or(0));
    }
    let tuples: Vec<Vec<BigUint>> = tuples
        .into_iter()
        .map(|t| t.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| precondition(format!("A was not built with at least {m_max} steps")))?;

    // forward
    let constructed: Vec<f64> = tuples
        .iter()
        .flat_map(|c| UnitVector::normalized(scaled_f64(c)).coords().to_vec())
        .collect();
    let (sample, label): (Vec<TargetPoint>, &'static str) = if spec.is_finite() {
        (spec.points().to_vec(), "X")
    } else {
        let ys: Vec<TargetPoint> = spec.dense_sequence().take(m_max as usize).collect();
        (ys[params.l_index.min(m_max) as usize..].to_vec(), "targets")
    };
    let forward = if sample.is_empty() || constructed.is_empty() {
        0.0
    } else {
        let flat: Vec<f64> = sample.iter().flat_map(|p| p.unit().coords().to_vec()).collect();
        directed_hausdorff(k, constructed, &flat).0
    };

    let x_distance = match spec.kind() {
        TargetKind::FiniteSet => XDistance::Grid(GridIndex::new(
            k,
            spec.points().iter().flat_map(|p| p.unit().coords().to_vec()).collect(),
        )),
        TargetKind::HyperplaneBoundary => XDistance::Boundary,
        TargetKind::OrthantSphereFull => XDistance::Everything,
        TargetKind::CustomEnumerated => {
            let ys: Vec<TargetPoint> = (1..=m_max).map(|m| enumerate_dense(spec, m)).collect::<Result<_>>()?;
            let closed = close_generators(&ys)?;
            XDistance::Grid(GridIndex::new(
                k,
                closed.points().iter().flat_map(|p| p.unit().coords().to_vec()).collect(),
            ))
        }
    };

    let forward_net = if spec.is_finite() || spec.kind() == TargetKind::CustomEnumerated || m_max == 0 {
        None
    } else {
        let within = a.len().checked_pow(k as u32).is_some_and(|t| t as u64 <= budget.tuples);
        match (within, sphere_net(k, params.h, budget)) {
            (true, Ok(net)) if a.len() >= k => {
                let cloud = directions(a, k, true, budget)?;
                let in_x: Vec<f64> = net
                    .points()
                    .filter(|p| x_distance.of(p) == 0.0)
                    .flatten()
                    .copied()
                    .collect();
                (!in_x.is_empty()).then(|| directed_hausdorff(k, cloud.unit_coords(), &in_x).0)
            }
            _ => None,
        }
    };

    // backward
    let threshold = factorial(params.l_index);
    let start = a.elements().partition_point(|e| *e < threshold);
    let kept: Vec<usize> = (start..a.len()).filter(|&j| step_of[j] <= m_max).collect();
    let values: Vec<BigUint> = kept.iter().map(|&j| a.elements()[j].clone()).collect();
    // floats share one power-of-two scale; `unit` is the size of 1 in it
    let shift = values.iter().map(BigUint::bits).max().unwrap_or(0).saturating_sub(500);
    let unit = 2f64.powi(-(shift as i32));
    let tail: Vec<(f64, u64)> = scaled_f64(&values)
        .into_iter()
        .zip(kept.iter().map(|&j| step_of[j]))
        .collect();
    let n = tail.len();
    if n >= k {
        (n as u64)
            .checked_pow(k as u32)
            .filter(|&t| t <= budget.tuples)
            .ok_or_else(|| Error::Resource(format!("{n}^{k} tail tuples exceed the tuple budget")))?;
    }
    let slack = (k as f64).sqrt();
    let acc = if n < k {
        Backward::default()
    } else {
        (0..n)
            .into_par_iter()
            .map(|first| {
                let mut acc = Backward::default();
                let mut idx = vec![0usize; k];
                idx[0] = first;
                let mut v = vec![0.0f64; k];
                loop {
                    if idx.iter().enumerate().all(|(i, x)| !idx[..i].contains(x)) {
                        for (slot, &j) in v.iter_mut().zip(&idx) {
                            *slot = tail[j].0;
                        }
                        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
                        let dir: Vec<f64> = v.iter().map(|c| c / norm).collect();
                        let d = x_distance.of(&dir);
                        acc.count += 1;
                        if d > acc.worst {
                            acc.worst = d;
                            acc.worst_idx = idx.clone();
                        }
                        if d > params.tolerance {
                            acc.violations += 1;
                            let top = idx.iter().map(|&j| tail[j].1).max().unwrap();
                            let low = idx
                                .iter()
                                .filter(|&&j| tail[j].1 < top)
                                .map(|&j| tail[j].0 * tail[j].0)
                                .sum::<f64>()
                                .sqrt();
                            let bound = 2.0 * (low + slack * (k as f64 + top as f64) * unit) / norm;
                            if d > bound * (1.0 + 1e-9) {
                                acc.unexplained += 1;
                            }
                        }
                    }
                    let mut pos = k;
                    loop {
                        pos -= 1;
                        if pos == 0 {
                            return acc;
                        }
                        idx[pos] += 1;
                        if idx[pos] < n {
                            break;
                        }
                        idx[pos] = 0;
                    }
                }
            })
            .reduce(Backward::default, Backward::merge)
    };
    let worst_tuple = acc.worst_idx.iter().map(|&j| values[j].to_string()).collect();
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        m_max,
        l_index: params.l_index,
        h: params.h,
        tolerance: params.tolerance,
        forward_hausdorff: forward,
        forward_sample: label,
        forward_sample_size: sample.len(),
        forward_net_hausdorff: forward_net,
        tail_threshold: threshold,
        backward_tuples: acc.count,
        backward_hausdorff: acc.worst,
        backward_violations: acc.violations,
        unexplained_violations: acc.unexplained,
        worst_tuple,
    })
}

#[derive(Default)]
struct Backward {
    count: u64,
    worst: f64,
    worst_idx: Vec<usize>,
    violations: u64,
    unexplained: u64,
}

impl Backward {
    /// Sums counts; the worst tuple is the farthest, ties to the
    /// lexicographically smallest index list.
    fn merge(mut self, other: Backward) -> Backward {
        self.count += other.count;
        self.violations += other.violations;
        self.unexplained += other.unexplained;
        let better = other.worst > self.worst
            || (other.worst == self.worst && !other.worst_idx.is_empty() && (self.worst_idx.is_empty() || other.worst_idx < self.worst_idx));
        if better {
            self.worst = other.worst;
            self.worst_idx = other.worst_idx;
        }
        self
    }
}

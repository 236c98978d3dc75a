//! Ground sets `A ∩ [1, N]` and the direction clouds they generate.
//!
//! A [`DirectionCloud`] is the exact set of primitive directions of all
//! ordered k-tuples drawn from a ground set, optionally restricted to tuples
//! with pairwise distinct entries. Enumeration is parallel over the first
//! coordinate and the merged result is sorted, so the output does not depend
//! on how work was split.
//!
//! ```
//! use kdirections::budget::Budget;
//! use kdirections::enumeration::{directions, GroundSet};
//!
//! let a = GroundSet::explicit_u64(&[1, 2, 4]).unwrap();
//! let cloud = directions(&a, 2, false, &Budget::default()).unwrap();
//! assert_eq!(cloud.len(), 5); // (2,4) reduces to (1,2)
//! ```

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::direction::PrimitiveDirection;
use crate::error::{precondition, Error, Result};
use crate::SCHEMA_VERSION;

/// How a ground set was generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundRule {
    Explicit,
    Naturals,
    Primes,
    PowersOf(u64),
    /// `{n^d : n ≥ 1}`
    Polynomial(u32),
    /// Output of the accumulation-set constructor.
    Constructed,
}

impl fmt::Display for GroundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundRule::Explicit => f.write_str("explicit"),
            GroundRule::Naturals => f.write_str("naturals"),
            GroundRule::Primes => f.write_str("primes"),
            GroundRule::PowersOf(b) => write!(f, "powers-of-{b}"),
            GroundRule::Polynomial(d) => write!(f, "polynomial-{d}"),
            GroundRule::Constructed => f.write_str("constructed"),
        }
    }
}

impl FromStr for GroundRule {
    type Err = Error;

    /// Accepts `naturals`, `primes`, `powers-of-B` and `polynomial-D`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown ground rule {s:?}"));
        match s {
            "naturals" => Ok(GroundRule::Naturals),
            "primes" => Ok(GroundRule::Primes),
            _ => {
                if let Some(b) = s.strip_prefix("powers-of-") {
                    Ok(GroundRule::PowersOf(b.parse().map_err(|_| bad())?))
                } else if let Some(d) = s.strip_prefix("polynomial-") {
                    Ok(GroundRule::Polynomial(d.parse().map_err(|_| bad())?))
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// Where a constructed element came from: coordinate `i` (1-based) of the
/// tuple built at step `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub m: u64,
    pub i: usize,
}

/// A strictly increasing finite set of positive integers with its rule.
#[derive(Debug, Clone)]
pub struct GroundSet {
    rule: GroundRule,
    bound: BigUint,
    elements: Vec<BigUint>,
    small: Option<Vec<u64>>,
    provenance: Option<Vec<Vec<Provenance>>>,
}

impl GroundSet {
    fn from_sorted(rule: GroundRule, bound: BigUint, elements: Vec<BigUint>) -> Self {
        let small = elements.iter().map(ToPrimitive::to_u64).collect();
        GroundSet {
            rule,
            bound,
            elements,
            small,
            provenance: None,
        }
    }

    /// Sorts and deduplicates. Zero is rejected.
    pub fn explicit(mut values: Vec<BigUint>) -> Result<Self> {
        if values.iter().any(|v| v.bits() == 0) {
            return Err(precondition("ground set elements must be positive"));
        }
        values.sort();
        values.dedup();
        let bound = values.last().cloned().unwrap_or_default();
        Ok(Self::from_sorted(GroundRule::Explicit, bound, values))
    }

    pub fn explicit_u64(values: &[u64]) -> Result<Self> {
        Self::explicit(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// Merges constructed values, recording every `(m, i)` that produced
    /// each element.
    pub fn constructed(values: impl IntoIterator<Item = (BigUint, Provenance)>) -> Self {
        let mut all: Vec<(BigUint, Provenance)> = values.into_iter().collect();
        all.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.m.cmp(&b.1.m)).then(a.1.i.cmp(&b.1.i)));
        let mut elements: Vec<BigUint> = Vec::new();
        let mut provenance: Vec<Vec<Provenance>> = Vec::new();
        for (v, p) in all {
            if elements.last() == Some(&v) {
                provenance.last_mut().unwrap().push(p);
            } else {
                elements.push(v);
                provenance.push(vec![p]);
            }
        }
        let bound = elements.last().cloned().unwrap_or_default();
        let mut set = Self::from_sorted(GroundRule::Constructed, bound, elements);
        set.provenance = Some(provenance);
        set
    }

    pub fn rule(&self) -> &GroundRule {
        &self.rule
    }

    /// The bound `N` the prefix was materialized up to.
    pub fn bound(&self) -> &BigUint {
        &self.bound
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.elements
    }

    /// The elements as machine integers, when they all fit.
    pub fn elements_u64(&self) -> Option<&[u64]> {
        self.small.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// For constructed sets, the producers of `elements()[j]`.
    pub fn provenance(&self) -> Option<&[Vec<Provenance>]> {
        self.provenance.as_deref()
    }

    /// Elements `≥ threshold`, keeping rule and provenance.
    pub fn tail(&self, threshold: &BigUint) -> GroundSet {
        let start = self.elements.partition_point(|e| e < threshold);
        let mut out = Self::from_sorted(
            self.rule.clone(),
            self.bound.clone(),
            self.elements[start..].to_vec(),
        );
        out.provenance = self.provenance.as_ref().map(|p| p[start..].to_vec());
        out
    }

    /// Index of the least element strictly greater than `x`.
    pub fn first_above(&self, x: &BigUint) -> Option<usize> {
        let j = self.elements.partition_point(|e| e <= x);
        (j < self.elements.len()).then_some(j)
    }
}

/// Materializes `A ∩ [1, N]` for a generating rule.
pub fn ground_set(rule: &GroundRule, n: u64, budget: &Budget) -> Result<GroundSet> {
    if n == 0 {
        return Err(precondition("N must be at least 1"));
    }
    let elements: Vec<u64> = match rule {
        GroundRule::Naturals | GroundRule::Primes if n > budget.elements => {
            return Err(Error::Resource(format!(
                "N = {n} exceeds the element budget {}",
                budget.elements
            )))
        }
        GroundRule::Naturals => (1..=n).collect(),
        GroundRule::Primes => primes_up_to(n),
        GroundRule::PowersOf(b) => {
            if *b < 2 {
                return Err(precondition("powers need a base of at least 2"));
            }
            std::iter::successors(Some(1u64), |p| p.checked_mul(*b))
                .take_while(|&p| p <= n)
                .collect()
        }
        GroundRule::Polynomial(d) => {
            if *d == 0 {
                return Err(precondition("polynomial degree must be at least 1"));
            }
            (1u64..)
                .map(|i| i.checked_pow(*d))
                .take_while(|p| p.is_some_and(|p| p <= n))
                .map(Option::unwrap)
                .collect()
        }
        GroundRule::Explicit | GroundRule::Constructed => {
            return Err(precondition(format!("rule {rule} has no generator")))
        }
    };
    Ok(GroundSet::from_sorted(
        rule.clone(),
        BigUint::from(n),
        elements.into_iter().map(BigUint::from).collect(),
    ))
}

/// Sieve of Eratosthenes over odd numbers.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let half = ((n - 1) / 2) as usize; // odd numbers 3, 5, …, ≤ n
    let mut composite = vec![false; half + 1];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= n as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p - 1) / 2;
            while j <= half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    std::iter::once(2)
        .chain((1..=half).filter(|&i| !composite[i]).map(|i| 2 * i as u64 + 1))
        .collect()
}

/// The exact direction set of a finite ground set.
#[derive(Debug, Clone)]
pub struct DirectionCloud {
    k: usize,
    dirs: Vec<PrimitiveDirection>,
    distinct_only: bool,
    rule: String,
    bound: BigUint,
    sampled: bool,
    tuples: u64,
}

/// JSON metadata written next to a cloud's CSV.
#[derive(Debug, Clone, Serialize)]
pub struct CloudMetadata {
    pub schema_version: u32,
    pub rule: String,
    #[serde(rename = "N")]
    pub n: String,
    pub k: usize,
    pub distinct: bool,
    pub count: usize,
    pub sampled: bool,
    pub tuples_examined: u64,
}

impl DirectionCloud {
    /// A cloud from an arbitrary collection of directions (deduplicated).
    pub fn from_directions(k: usize, mut dirs: Vec<PrimitiveDirection>, distinct_only: bool) -> Result<Self> {
        if dirs.iter().any(|d| d.k() != k) {
            return Err(precondition("direction dimension mismatch"));
        }
        dirs.par_sort_unstable();
        dirs.dedup();
        Ok(DirectionCloud {
            k,
            tuples: dirs.len() as u64,
            dirs,
            distinct_only,
            rule: "explicit".into(),
            bound: BigUint::default(),
            sampled: false,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Sorted, deduplicated directions.
    pub fn dirs(&self) -> &[PrimitiveDirection] {
        &self.dirs
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn contains(&self, d: &PrimitiveDirection) -> bool {
        self.dirs.binary_search(d).is_ok()
    }

    pub fn distinct_only(&self) -> bool {
        self.distinct_only
    }

    /// True when the cloud came from random tuples, so it is a subset of
    /// the full direction set.
    pub fn sampled(&self) -> bool {
        self.sampled
    }

    pub fn bound(&self) -> &BigUint {
        &self.bound
    }

    pub fn tuples_examined(&self) -> u64 {
        self.tuples
    }

    /// Row-major floating embedding `ρ(d)` of every direction.
    pub fn unit_coords(&self) -> Vec<f64> {
        self.dirs
            .par_iter()
            .flat_map_iter(|d| d.to_unit().coords().to_vec())
            .collect()
    }

    /// Union of two clouds of the same dimension.
    pub fn union(&self, other: &DirectionCloud) -> Result<DirectionCloud> {
        if self.k != other.k {
            return Err(precondition("dimension mismatch"));
        }
        let mut dirs = self.dirs.clone();
        dirs.extend_from_slice(&other.dirs);
        let mut out = DirectionCloud::from_directions(self.k, dirs, self.distinct_only && other.distinct_only)?;
        out.rule = self.rule.clone();
        out.bound = self.bound.clone().max(other.bound.clone());
        out.sampled = self.sampled || other.sampled;
        out.tuples = self.tuples + other.tuples;
        Ok(out)
    }

    pub fn metadata(&self) -> CloudMetadata {
        CloudMetadata {
            schema_version: SCHEMA_VERSION,
            rule: self.rule.clone(),
            n: self.bound.to_string(),
            k: self.k,
            distinct: self.distinct_only,
            count: self.dirs.len(),
            sampled: self.sampled,
            tuples_examined: self.tuples,
        }
    }

    /// One direction per row with a header `x1,…,xk`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record((1..=self.k).map(|i| format!("x{i}")))?;
        for d in &self.dirs {
            w.write_record(d.entries().iter().map(ToString::to_string))?;
        }
        w.flush()?;
        Ok(())
    }

    /// Plot data: unit coordinates `u1,…,uk`, plus the polar angle in
    /// radians when `k = 2`.
    pub fn write_points_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        let mut header: Vec<String> = (1..=self.k).map(|i| format!("u{i}")).collect();
        if self.k == 2 {
            header.push("angle".into());
        }
        w.write_record(&header)?;
        for d in &self.dirs {
            let u = d.to_unit();
            let mut row: Vec<String> = u.coords().iter().map(f64::to_string).collect();
            if self.k == 2 {
                row.push(u.coords()[1].atan2(u.coords()[0]).to_string());
            }
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Writes `<stem>.csv`, `<stem>.points.csv` and `<stem>.json`.
    pub fn export(&self, stem: &Path) -> Result<()> {
        self.write_csv(std::fs::File::create(stem.with_extension("csv"))?)?;
        self.write_points_csv(std::fs::File::create(stem.with_extension("points.csv"))?)?;
        let mut json = serde_json::to_string_pretty(&self.metadata())?;
        json.push('\n');
        std::fs::write(stem.with_extension("json"), json)?;
        Ok(())
    }
}

/// Random tuple sampling, used when exhaustive enumeration would exceed the
/// tuple budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub samples: u64,
    pub seed: u64,
}

fn tuple_count(n: usize, k: usize) -> Option<u64> {
    (n as u64).checked_pow(k as u32)
}

/// `D^k(A)` (or `D^k̲(A)` when `distinct_only`) by exhaustive enumeration.
pub fn directions(a: &GroundSet, k: usize, distinct_only: bool, budget: &Budget) -> Result<DirectionCloud> {
    directions_with(a, k, distinct_only, budget, None)
}

/// Like [`directions`], but falls back to `sampling` when `|A|^k` exceeds the
/// tuple budget. Without a sampling plan that case is a resource error.
pub fn directions_with(
    a: &GroundSet,
    k: usize,
    distinct_only: bool,
    budget: &Budget,
    sampling: Option<Sampling>,
) -> Result<DirectionCloud> {
    if k < 2 {
        return Err(precondition("k must be at least 2"));
    }
    if a.is_empty() {
        return Err(precondition("ground set is empty"));
    }
    if distinct_only && a.len() < k {
        return Err(precondition(format!(
            "distinct-entry tuples need |A| ≥ k, got |A| = {} and k = {k}",
            a.len()
        )));
    }
    let total = tuple_count(a.len(), k);
    if total.is_none_or(|t| t > budget.tuples) {
        return match sampling {
            Some(s) => sample_directions(a, k, distinct_only, s),
            None => Err(Error::Resource(format!(
                "|A|^k = {}^{k} exceeds the tuple budget {}; use sampling mode",
                a.len(),
                budget.tuples
            ))),
        };
    }
    let n = a.len();
    let per_first = |first: usize| -> Vec<PrimitiveDirection> {
        let mut idx = vec![0usize; k];
        idx[0] = first;
        let mut out = Vec::new();
        let mut buf_small = vec![0u64; k];
        let mut buf_big = vec![BigUint::default(); k];
        loop {
            let ok = !distinct_only || all_distinct(&idx);
            if ok {
                let dir = match a.elements_u64() {
                    Some(s) => {
                        for (b, &j) in buf_small.iter_mut().zip(&idx) {
                            *b = s[j];
                        }
                        PrimitiveDirection::from_u64(&buf_small)
                    }
                    None => {
                        for (b, &j) in buf_big.iter_mut().zip(&idx) {
                            b.clone_from(&a.elements()[j]);
                        }
                        PrimitiveDirection::from_biguint(&buf_big)
                    }
                };
                out.push(dir.expect("positive entries"));
            }
            // odometer over positions 1..k
            let mut pos = k;
            loop {
                pos -= 1;
                if pos == 0 {
                    out.sort_unstable();
                    out.dedup();
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] < n {
                    break;
                }
                idx[pos] = 0;
            }
        }
    };
    let dirs: Vec<PrimitiveDirection> = (0..n).into_par_iter().flat_map_iter(per_first).collect();
    let mut cloud = DirectionCloud::from_directions(k, dirs, distinct_only)?;
    cloud.rule = a.rule.to_string();
    cloud.bound = a.bound.clone();
    cloud.tuples = total.unwrap();
    Ok(cloud)
}

fn all_distinct(idx: &[usize]) -> bool {
    idx.iter()
        .enumerate()
        .all(|(i, x)| idx[..i].iter().all(|y| y != x))
}

const SAMPLE_CHUNK: u64 = 1 << 16;

/// Directions of `samples` uniform random tuples from `A^k` (or from the
/// distinct-entry tuples, by rejection). Chunks use independent streams
/// derived from `seed`, so the result does not depend on thread count.
pub fn sample_directions(a: &GroundSet, k: usize, distinct_only: bool, sampling: Sampling) -> Result<DirectionCloud> {
    if k < 2 {
        return Err(precondition("k must be at least 2"));
    }
    if a.is_empty() || (distinct_only && a.len() < k) {
        return Err(precondition("ground set too small for the requested tuples"));
    }
    let n = a.len();
    let chunks = sampling.samples.div_ceil(SAMPLE_CHUNK);
    let dirs: Vec<PrimitiveDirection> = (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
            rng.set_stream(c);
            let count = SAMPLE_CHUNK.min(sampling.samples - c * SAMPLE_CHUNK);
            let mut idx = vec![0usize; k];
            let mut out = Vec::with_capacity(count as usize);
            for _ in 0..count {
                loop {
                    idx.iter_mut().for_each(|j| *j = rng.gen_range(0..n));
                    if !distinct_only || all_distinct(&idx) {
                        break;
                    }
                }
                let dir = match a.elements_u64() {
                    Some(s) => PrimitiveDirection::from_u64(&idx.iter().map(|&j| s[j]).collect::<Vec<_>>()),
                    None => PrimitiveDirection::from_biguint(
                        &idx.iter().map(|&j| a.elements()[j].clone()).collect::<Vec<_>>(),
                    ),
                };
                out.push(dir.expect("positive entries"));
            }
            out
        })
        .collect();
    let mut cloud = DirectionCloud::from_directions(k, dirs, distinct_only)?;
    cloud.rule = a.rule.to_string();
    cloud.bound = a.bound.clone();
    cloud.sampled = true;
    cloud.tuples = sampling.samples;
    Ok(cloud)
}

/// Directions of distinct-entry tuples whose entries are all `≥ threshold`.
/// An empty cloud is a valid answer.
pub fn accumulation_candidates(a: &GroundSet, k: usize, threshold: &BigUint, budget: &Budget) -> Result<DirectionCloud> {
    if k < 2 {
        return Err(precondition("k must be at least 2"));
    }
    let tail = a.tail(threshold);
    if tail.len() < k {
        let mut empty = DirectionCloud::from_directions(k, Vec::new(), true)?;
        empty.rule = a.rule.to_string();
        empty.bound = a.bound.clone();
        empty.tuples = 0;
        return Ok(empty);
    }
    directions(&tail, k, true, budget)
}

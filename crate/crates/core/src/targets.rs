//! Candidate accumulation sets `X ⊆ S^(k−1)`.
//!
//! A set `X` is realizable as the accumulation set of `D^k̲(A)` exactly when
//! it is closed, closed under coordinate permutations, and closed under every
//! projection `ρ_I` with `I` meeting the point. This module describes such
//! sets, closes finite generator lists under the last two operations, checks
//! the conditions, and enumerates a dense sequence `y^(1), y^(2), …` of each
//! set for the constructor.
//!
//! Points are compared exactly. Every coordinate is `q·√r`, so the squared
//! normalized coordinates `x_i² = q_i² r_i / Σ q_j² r_j` are rational, and a
//! point with nonnegative coordinates is determined by them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::direction::{IndexSet, Permutation, PrimitiveDirection, UnitVector};
use crate::error::{domain, precondition, Error, Result};
use crate::exact::{rational_to_f64, ExactCoord, SurdSum};

/// A point of a target set, kept as an exact unnormalized vector `v` along
/// with its normalized squares and floating embedding `ρ(v)`.
#[derive(Debug, Clone)]
pub struct TargetPoint {
    coords: Vec<ExactCoord>,
    squares: Vec<BigRational>,
    unit: UnitVector,
}

impl TargetPoint {
    /// Validates `coords` as a nonzero vector with nonnegative entries.
    pub fn new(coords: Vec<ExactCoord>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(domain("target points need k ≥ 2 coordinates"));
        }
        if coords.iter().any(ExactCoord::is_negative) {
            return Err(domain("target coordinates must be nonnegative"));
        }
        let raw: Vec<BigRational> = coords.iter().map(ExactCoord::square).collect();
        let total: BigRational = raw.iter().sum();
        if total.is_zero() {
            return Err(domain("zero vector has no direction"));
        }
        let squares: Vec<BigRational> = raw.iter().map(|s| s / &total).collect();
        let unit = UnitVector::normalized(
            squares.iter().map(|s| rational_to_f64(s).sqrt()).collect(),
        );
        Ok(TargetPoint {
            coords,
            squares,
            unit,
        })
    }

    pub fn from_integers(v: &[u64]) -> Result<Self> {
        Self::new(
            v.iter()
                .map(|&c| ExactCoord::rational(BigRational::from_integer(c.into())))
                .collect(),
        )
    }

    pub fn from_primitive(d: &PrimitiveDirection) -> Self {
        Self::new(
            d.entries()
                .into_iter()
                .map(|e| ExactCoord::rational(BigRational::from_integer(BigInt::from(e))))
                .collect(),
        )
        .expect("primitive directions are nonzero")
    }

    /// The exact point whose coordinates are the given floats, read as the
    /// dyadic rationals they represent.
    pub fn from_f64(v: &[f64]) -> Result<Self> {
        let coords = v
            .iter()
            .map(|&c| {
                BigRational::from_float(c)
                    .map(ExactCoord::rational)
                    .ok_or_else(|| domain("non-finite coordinate"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    /// The unnormalized exact vector `v`.
    pub fn coords(&self) -> &[ExactCoord] {
        &self.coords
    }

    /// `ρ(v)_i²`, exactly. These sum to one.
    pub fn squares(&self) -> &[BigRational] {
        &self.squares
    }

    pub fn unit(&self) -> &UnitVector {
        &self.unit
    }

    /// `ρ(v)_i` as an exact `q·√r`.
    pub fn normalized_coord(&self, i: usize) -> Result<ExactCoord> {
        ExactCoord::sqrt_of_rational(&self.squares[i])
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        self.squares[i].is_zero()
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.squares.iter().any(Zero::is_zero)
    }

    pub fn meets(&self, index_set: &IndexSet) -> bool {
        index_set.members().any(|j| !self.squares[j].is_zero())
    }

    pub fn permuted(&self, pi: &Permutation) -> TargetPoint {
        TargetPoint {
            coords: pi.apply(&self.coords),
            squares: pi.apply(&self.squares),
            unit: UnitVector::normalized(pi.apply(self.unit.coords())),
        }
    }

    /// `ρ_I` applied exactly: zero the coordinates outside `I`.
    pub fn projected(&self, index_set: &IndexSet) -> Result<TargetPoint> {
        if index_set.k() != self.k() {
            return Err(domain("index set dimension does not match the point"));
        }
        if !self.meets(index_set) {
            return Err(domain(format!("{index_set} does not meet {self}")));
        }
        let coords = self
            .coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if index_set.contains(i) {
                    c.clone()
                } else {
                    ExactCoord::zero()
                }
            })
            .collect();
        TargetPoint::new(coords)
    }

    /// Appends a zero coordinate.
    pub fn lifted(&self) -> TargetPoint {
        let mut coords = self.coords.clone();
        coords.push(ExactCoord::zero());
        TargetPoint::new(coords).expect("lift of a valid point")
    }

    /// `‖ρ(v)‖² = 1`, so the squared distance is `2 − 2⟨ρ(v), ρ(w)⟩`, an
    /// exact element of a multiquadratic field.
    pub fn distance_squared(&self, other: &TargetPoint) -> Result<SurdSum> {
        if self.k() != other.k() {
            return Err(domain("dimension mismatch"));
        }
        let mut inner = SurdSum::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            inner = &inner + &(&SurdSum::from_coord(a) * &SurdSum::from_coord(b));
        }
        let norms = self.norm_squared() * other.norm_squared();
        // 1/√P = √r / (c·r) where √P = c·√r
        let root = ExactCoord::sqrt_of_rational(&norms)?;
        let r = BigRational::from_integer(BigInt::from(root.r().clone()));
        let inv = ExactCoord::new(
            BigRational::one() / (root.q() * &r),
            root.r().clone(),
        )?;
        let cosine = &inner * &SurdSum::from_coord(&inv);
        let two = SurdSum::rational(BigRational::from_integer(2.into()));
        Ok(&two - &cosine.scale(&BigRational::from_integer(2.into())))
    }

    pub(crate) fn norm_squared(&self) -> BigRational {
        self.coords.iter().map(ExactCoord::square).sum()
    }
}

impl PartialEq for TargetPoint {
    fn eq(&self, other: &Self) -> bool {
        self.squares == other.squares
    }
}

impl Eq for TargetPoint {}

impl std::hash::Hash for TargetPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.squares.hash(state);
    }
}

/// Canonical order: lexicographically *decreasing* squared coordinates, so
/// `(1, 0, …, 0)` comes first.
impl Ord for TargetPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.squares.cmp(&self.squares)
    }
}

impl PartialOrd for TargetPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TargetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ρ(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The shape of a target set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetKind {
    /// A finite set given by exact generators, closed on construction.
    FiniteSet,
    /// The whole orthant sphere `S^(k−1)`.
    OrthantSphereFull,
    /// `{x ∈ S^(k−1) : x_i = 0 for some i}`.
    HyperplaneBoundary,
    /// A user-supplied enumeration, accepted without a closure certificate.
    CustomEnumerated,
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TargetKind::FiniteSet => "finite-set",
            TargetKind::OrthantSphereFull => "orthant-sphere-full",
            TargetKind::HyperplaneBoundary => "hyperplane-boundary",
            TargetKind::CustomEnumerated => "custom-enumerated",
        })
    }
}

/// A dense enumeration `m ↦ y^(m)` (`m ≥ 1`) supplied by the caller.
pub trait DenseEnumerator: Send + Sync {
    fn point(&self, m: u64) -> TargetPoint;
}

impl<F> DenseEnumerator for F
where
    F: Fn(u64) -> TargetPoint + Send + Sync,
{
    fn point(&self, m: u64) -> TargetPoint {
        self(m)
    }
}

/// A finitely described candidate `X`.
#[derive(Clone)]
pub struct TargetSpec {
    k: usize,
    kind: TargetKind,
    /// Finite kinds: the points in canonical order. Custom kinds built from a
    /// list: the list in the given order.
    points: Vec<TargetPoint>,
    enumerator: Option<Arc<dyn DenseEnumerator>>,
}

impl fmt::Debug for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TargetSpec")
            .field("k", &self.k)
            .field("kind", &self.kind)
            .field("points", &self.points.len())
            .finish()
    }
}

fn check_dims(points: &[TargetPoint]) -> Result<usize> {
    let k = points
        .first()
        .ok_or_else(|| precondition("at least one generator is required"))?
        .k();
    if points.iter().any(|p| p.k() != k) {
        return Err(precondition("generators have different dimensions"));
    }
    Ok(k)
}

impl TargetSpec {
    /// The whole orthant sphere.
    pub fn orthant_sphere_full(k: usize) -> Result<Self> {
        Self::builtin(k, TargetKind::OrthantSphereFull)
    }

    /// Directions with at least one zero coordinate.
    pub fn hyperplane_boundary(k: usize) -> Result<Self> {
        Self::builtin(k, TargetKind::HyperplaneBoundary)
    }

    fn builtin(k: usize, kind: TargetKind) -> Result<Self> {
        if k < 2 {
            return Err(precondition("k must be at least 2"));
        }
        Ok(TargetSpec {
            k,
            kind,
            points: Vec::new(),
            enumerator: None,
        })
    }

    /// A finite set taken as given, without closing it. Useful for checking
    /// hand-written sets with [`validate_target`].
    pub fn finite_unclosed(points: Vec<TargetPoint>) -> Result<Self> {
        let k = check_dims(&points)?;
        let set: BTreeSet<TargetPoint> = points.into_iter().collect();
        Ok(TargetSpec {
            k,
            kind: TargetKind::FiniteSet,
            points: set.into_iter().collect(),
            enumerator: None,
        })
    }

    /// Cycles through `points` in the given order; no closure is applied or
    /// claimed.
    pub fn custom_list(points: Vec<TargetPoint>) -> Result<Self> {
        let k = check_dims(&points)?;
        Ok(TargetSpec {
            k,
            kind: TargetKind::CustomEnumerated,
            points,
            enumerator: None,
        })
    }

    pub fn custom(k: usize, enumerator: impl DenseEnumerator + 'static) -> Result<Self> {
        if k < 2 {
            return Err(precondition("k must be at least 2"));
        }
        Ok(TargetSpec {
            k,
            kind: TargetKind::CustomEnumerated,
            points: Vec::new(),
            enumerator: Some(Arc::new(enumerator)),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> TargetKind {
        self.kind
    }

    /// The explicit points of a finite or list-backed spec.
    pub fn points(&self) -> &[TargetPoint] {
        &self.points
    }

    pub fn is_finite(&self) -> bool {
        self.kind == TargetKind::FiniteSet
    }

    /// Exact membership, when decidable.
    pub fn contains(&self, p: &TargetPoint) -> Option<bool> {
        if p.k() != self.k {
            return Some(false);
        }
        match self.kind {
            TargetKind::FiniteSet => Some(self.points.binary_search(p).is_ok()),
            TargetKind::OrthantSphereFull => Some(true),
            TargetKind::HyperplaneBoundary => Some(p.has_zero_coordinate()),
            TargetKind::CustomEnumerated => None,
        }
    }

    /// Euclidean distance from a unit vector to `X`, when computable.
    pub fn distance_to(&self, x: &UnitVector) -> Option<f64> {
        match self.kind {
            TargetKind::FiniteSet => self
                .points
                .iter()
                .map(|p| p.unit().distance(x))
                .min_by(f64::total_cmp),
            TargetKind::OrthantSphereFull => Some(0.0),
            TargetKind::HyperplaneBoundary => Some(distance_to_boundary(x.coords())),
            TargetKind::CustomEnumerated => None,
        }
    }

    /// Iterator over `y^(1), y^(2), …`.
    pub fn dense_sequence(&self) -> DenseSequence<'_> {
        DenseSequence {
            spec: self,
            m: 0,
            levels: match self.kind {
                TargetKind::OrthantSphereFull => Some(PrimitiveLevels::new(self.k, self.k)),
                TargetKind::HyperplaneBoundary => Some(PrimitiveLevels::new(self.k, self.k - 1)),
                _ => None,
            },
        }
    }

    /// Reads a target file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TargetFile = serde_json::from_str(text)?;
        file.into_spec()
    }

    pub fn to_file(&self) -> TargetFile {
        TargetFile {
            k: self.k,
            kind: self.kind,
            generators: self.points.iter().map(|p| p.coords().to_vec()).collect(),
        }
    }
}

/// `min_i` distance to the face `{x_i = 0}`: zeroing the smallest coordinate
/// `u` gives `√(2 − 2√(1 − u²))`.
fn distance_to_boundary(x: &[f64]) -> f64 {
    let u = x.iter().copied().fold(f64::INFINITY, f64::min);
    if u <= 0.0 {
        return 0.0;
    }
    (2.0 - 2.0 * (1.0 - u * u).max(0.0).sqrt()).max(0.0).sqrt()
}

/// On-disk form of a target:
/// `{ "k": int, "kind": string, "generators": [[{"q": "p/q", "r": int}, …]] }`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TargetFile {
    pub k: usize,
    pub kind: TargetKind,
    #[serde(default)]
    pub generators: Vec<Vec<ExactCoord>>,
}

impl TargetFile {
    /// Finite sets are closed on load; custom lists are taken verbatim.
    pub fn into_spec(self) -> Result<TargetSpec> {
        let points = self
            .generators
            .into_iter()
            .map(TargetPoint::new)
            .collect::<Result<Vec<_>>>()?;
        if points.iter().any(|p| p.k() != self.k) {
            return Err(precondition(format!(
                "generator dimension differs from k = {}",
                self.k
            )));
        }
        match self.kind {
            TargetKind::FiniteSet => close_generators(&points),
            TargetKind::OrthantSphereFull => TargetSpec::orthant_sphere_full(self.k),
            TargetKind::HyperplaneBoundary => TargetSpec::hyperplane_boundary(self.k),
            TargetKind::CustomEnumerated => TargetSpec::custom_list(points),
        }
    }
}

/// Smallest finite superset of `points` closed under all permutations and all
/// projections `ρ_I` with `I` meeting the point.
pub fn close_generators(points: &[TargetPoint]) -> Result<TargetSpec> {
    let k = check_dims(points)?;
    let perms = Permutation::all(k);
    let subsets: Vec<IndexSet> = IndexSet::all(k).collect();
    let mut seen: BTreeSet<TargetPoint> = BTreeSet::new();
    let mut queue: VecDeque<TargetPoint> = VecDeque::new();
    for p in points {
        if seen.insert(p.clone()) {
            queue.push_back(p.clone());
        }
    }
    while let Some(p) = queue.pop_front() {
        let images = perms
            .iter()
            .map(|pi| Ok(p.permuted(pi)))
            .chain(
                subsets
                    .iter()
                    .filter(|i| p.meets(i))
                    .map(|i| p.projected(i)),
            );
        for q in images {
            let q = q?;
            if !seen.contains(&q) {
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(TargetSpec {
        k,
        kind: TargetKind::FiniteSet,
        points: seen.into_iter().collect(),
        enumerator: None,
    })
}

/// The operation a finite set failed to be closed under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Permutation(Permutation),
    Projection(IndexSet),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Permutation(p) => write!(f, "permutation {p}"),
            Violation::Projection(i) => write!(f, "projection onto {i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Valid,
    Invalid,
    /// Custom enumerations carry no closure certificate.
    Unverifiable,
}

/// Outcome of [`validate_target`]. For verifiable kinds, all three flags are
/// true exactly when `witnesses` is empty.
#[derive(Debug, Clone)]
pub struct ValidityReport {
    pub verdict: Verdict,
    pub closed_ok: bool,
    pub permutation_ok: bool,
    pub projection_ok: bool,
    pub witnesses: Vec<(TargetPoint, Violation)>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::Valid
    }
}

impl Serialize for ValidityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            verdict: Verdict,
            closed_ok: bool,
            permutation_ok: bool,
            projection_ok: bool,
            witnesses: Vec<(String, String)>,
            #[serde(skip)]
            _p: std::marker::PhantomData<&'a ()>,
        }
        Wire {
            verdict: self.verdict,
            closed_ok: self.closed_ok,
            permutation_ok: self.permutation_ok,
            projection_ok: self.projection_ok,
            witnesses: self
                .witnesses
                .iter()
                .map(|(p, v)| (p.to_string(), v.to_string()))
                .collect(),
            _p: std::marker::PhantomData,
        }
        .serialize(s)
    }
}

/// Checks the three realizability conditions exactly.
///
/// Finite sets are closed automatically, so only permutation and projection
/// closure are tested, point by point. The two built-in infinite kinds satisfy
/// all three conditions by their definition.
pub fn validate_target(spec: &TargetSpec) -> ValidityReport {
    let valid = ValidityReport {
        verdict: Verdict::Valid,
        closed_ok: true,
        permutation_ok: true,
        projection_ok: true,
        witnesses: Vec::new(),
    };
    match spec.kind {
        TargetKind::OrthantSphereFull | TargetKind::HyperplaneBoundary => valid,
        TargetKind::CustomEnumerated => ValidityReport {
            verdict: Verdict::Unverifiable,
            closed_ok: false,
            permutation_ok: false,
            projection_ok: false,
            witnesses: Vec::new(),
        },
        TargetKind::FiniteSet => {
            let perms = Permutation::all(spec.k);
            let subsets: Vec<IndexSet> = IndexSet::all(spec.k).collect();
            let member = |q: &TargetPoint| spec.points.binary_search(q).is_ok();
            let mut witnesses = Vec::new();
            let (mut perm_ok, mut proj_ok) = (true, true);
            for p in &spec.points {
                for pi in perms.iter().filter(|pi| !pi.is_identity()) {
                    if !member(&p.permuted(pi)) {
                        perm_ok = false;
                        witnesses.push((p.clone(), Violation::Permutation(pi.clone())));
                    }
                }
                for i in subsets.iter().filter(|i| p.meets(i)) {
                    let q = p.projected(i).expect("meeting set");
                    if !member(&q) {
                        proj_ok = false;
                        witnesses.push((p.clone(), Violation::Projection(i.clone())));
                    }
                }
            }
            ValidityReport {
                verdict: if witnesses.is_empty() {
                    Verdict::Valid
                } else {
                    Verdict::Invalid
                },
                closed_ok: true,
                permutation_ok: perm_ok,
                projection_ok: proj_ok,
                witnesses,
            }
        }
    }
}

/// `y^(m)` for `m ≥ 1`.
///
/// * finite sets: `points[(m − 1) mod n]` in canonical order;
/// * custom lists: the same cycle in the given order;
/// * orthant sphere: every primitive integer direction, ordered by maximum
///   entry, then support size, then support (as an increasing index list, in
///   lexicographic order), then entries lexicographically;
/// * hyperplane boundary: the same sequence restricted to directions with a
///   zero coordinate.
pub fn enumerate_dense(spec: &TargetSpec, m: u64) -> Result<TargetPoint> {
    if m == 0 {
        return Err(precondition("m must be at least 1"));
    }
    if let Some(e) = &spec.enumerator {
        return Ok(e.point(m));
    }
    if !spec.points.is_empty() {
        let n = spec.points.len() as u64;
        return Ok(spec.points[((m - 1) % n) as usize].clone());
    }
    spec.dense_sequence()
        .nth((m - 1) as usize)
        .ok_or_else(|| Error::Invariant("dense sequence ended".into()))
}

/// Sequential form of [`enumerate_dense`].
pub struct DenseSequence<'a> {
    spec: &'a TargetSpec,
    m: u64,
    levels: Option<PrimitiveLevels>,
}

impl Iterator for DenseSequence<'_> {
    type Item = TargetPoint;

    fn next(&mut self) -> Option<TargetPoint> {
        self.m += 1;
        if let Some(levels) = &mut self.levels {
            return levels.next().map(|d| TargetPoint::from_primitive(&d));
        }
        enumerate_dense(self.spec, self.m).ok()
    }
}

/// Primitive nonnegative integer directions in `k` dimensions with at most
/// `max_support` nonzero entries, in the documented dense order.
#[derive(Debug, Clone)]
pub struct PrimitiveLevels {
    k: usize,
    max_support: usize,
    height: u64,
    buffer: VecDeque<PrimitiveDirection>,
}

impl PrimitiveLevels {
    pub fn new(k: usize, max_support: usize) -> Self {
        PrimitiveLevels {
            k,
            max_support: max_support.min(k),
            height: 0,
            buffer: VecDeque::new(),
        }
    }

    fn fill_level(&mut self) {
        self.height += 1;
        let h = self.height;
        for size in 1..=self.max_support {
            for support in combinations(self.k, size) {
                let mut entries = vec![1u64; size];
                loop {
                    if entries.contains(&h)
                        && entries.iter().fold(0u64, |g, &e| g.gcd(&e)) == 1
                    {
                        let mut full = vec![0u64; self.k];
                        for (&i, &e) in support.iter().zip(&entries) {
                            full[i] = e;
                        }
                        self.buffer
                            .push_back(PrimitiveDirection::from_u64(&full).expect("nonzero"));
                    }
                    // odometer over [1, h]^size, last entry fastest
                    let mut pos = size;
                    while pos > 0 {
                        pos -= 1;
                        if entries[pos] < h {
                            entries[pos] += 1;
                            entries[pos + 1..].iter_mut().for_each(|e| *e = 1);
                            break;
                        }
                        if pos == 0 {
                            pos = usize::MAX;
                            break;
                        }
                    }
                    if pos == usize::MAX || size == 0 {
                        break;
                    }
                }
            }
        }
    }
}

impl Iterator for PrimitiveLevels {
    type Item = PrimitiveDirection;

    fn next(&mut self) -> Option<PrimitiveDirection> {
        while self.buffer.is_empty() {
            self.fill_level();
        }
        self.buffer.pop_front()
    }
}

/// All `size`-subsets of `0..n` as increasing lists, lexicographically.
fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..size).rev().find(|&i| cur[i] < n - size + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Helper for building points from strings such as `["1", "sqrt(2)", "0"]`.
pub fn point_from_strs(coords: &[&str]) -> Result<TargetPoint> {
    TargetPoint::new(
        coords
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<ExactCoord>>>()?,
    )
}

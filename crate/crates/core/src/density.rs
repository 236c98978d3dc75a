//! How densely a direction cloud fills the orthant sphere.
//!
//! The covering radius of a cloud `C` over a net `P` is
//! `ε = max_{p ∈ P} min_{c ∈ C} ‖p − c‖` (chordal distance). When every point
//! of `S^(k−1)` lies within `h` of the net, every point of the sphere lies
//! within `ε + h` of the cloud.
//!
//! ```
//! use kdirections::budget::Budget;
//! use kdirections::density::{covering_radius, sphere_net};
//! use kdirections::enumeration::{directions, ground_set, GroundRule};
//!
//! let budget = Budget::default();
//! let primes = ground_set(&GroundRule::Primes, 1000, &budget).unwrap();
//! let cloud = directions(&primes, 2, false, &budget).unwrap();
//! let net = sphere_net(2, 0.01, &budget).unwrap();
//! let report = covering_radius(&cloud, &net).unwrap();
//! assert!(report.covering_radius < 0.05);
//! ```

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::direction::{scaled_f64, IntTuple, UnitVector};
use crate::enumeration::{accumulation_candidates, directions_with, DirectionCloud, GroundSet, Sampling};
use crate::error::{domain, precondition, Error, Result};
use crate::nearest::GridIndex;
use crate::targets::TargetPoint;
use crate::SCHEMA_VERSION;

/// A finite set of unit vectors within `h` of every point of `S^(k−1)`.
///
/// The points are `ρ(a)` for every integer vector `a ∈ {0, …, D}^k` whose
/// largest entry equals `D = ⌈√(k−1)/h⌉`. Rounding `D·x/max(x)` to the
/// nearest such `a` moves it by at most `√(k−1)/2`, and `ρ` is
/// `2/D`-Lipschitz on vectors of norm `≥ D`, so the mesh is at most
/// `√(k−1)/D ≤ h`.
#[derive(Debug, Clone)]
pub struct SphereNet {
    k: usize,
    h: f64,
    denominator: u64,
    coords: Vec<f64>,
}

impl SphereNet {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.k
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.k..(i + 1) * self.k]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.k)
    }

    /// A net made of arbitrary points, e.g. a sample of a target set. No
    /// mesh guarantee is implied.
    pub fn from_points(k: usize, points: &[UnitVector], h: f64) -> Result<SphereNet> {
        if points.iter().any(|p| p.dim() != k) {
            return Err(domain("net point dimension mismatch"));
        }
        Ok(SphereNet {
            k,
            h,
            denominator: 0,
            coords: points.iter().flat_map(|p| p.coords().to_vec()).collect(),
        })
    }
}

/// Builds the grid net described on [`SphereNet`].
pub fn sphere_net(k: usize, h: f64, budget: &Budget) -> Result<SphereNet> {
    if k < 2 {
        return Err(precondition("k must be at least 2"));
    }
    if !(h > 0.0 && h <= 1.0) {
        return Err(precondition("h must lie in (0, 1]"));
    }
    let d = ((k as f64 - 1.0).sqrt() / h).ceil() as u64;
    let size = (d + 1)
        .checked_pow(k as u32)
        .and_then(|a| a.checked_sub(d.pow(k as u32)));
    match size {
        Some(s) if s <= budget.net_points => {}
        _ => {
            return Err(Error::Resource(format!(
                "net with k = {k}, h = {h} exceeds the budget of {} points",
                budget.net_points
            )))
        }
    }
    let mut coords = Vec::new();
    let mut a = vec![0u64; k];
    loop {
        if a.contains(&d) {
            let norm = a.iter().map(|&x| (x * x) as f64).sum::<f64>().sqrt();
            coords.extend(a.iter().map(|&x| x as f64 / norm));
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(SphereNet {
                    k,
                    h,
                    denominator: d,
                    coords,
                });
            }
            pos -= 1;
            if a[pos] < d {
                a[pos] += 1;
                break;
            }
            a[pos] = 0;
        }
    }
}

/// Outcome of [`covering_radius`].
#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub schema_version: u32,
    pub covering_radius: f64,
    pub argmax_net_point: Vec<f64>,
    pub argmax_index: usize,
    #[serde(rename = "N")]
    pub n: String,
    pub k: usize,
    pub h: f64,
    pub cloud_size: usize,
    pub net_size: usize,
    pub distinct: bool,
    pub sampled: bool,
    pub metric: &'static str,
}

/// `max` over `targets` of the distance to the nearest of `cloud`, with the
/// lowest index winning ties. Both are row-major `k`-vectors.
pub(crate) fn directed_hausdorff(k: usize, cloud: Vec<f64>, targets: &[f64]) -> (f64, usize) {
    let index = GridIndex::new(k, cloud);
    targets
        .par_chunks_exact(k)
        .enumerate()
        .map(|(i, p)| (index.nearest(p).1, i))
        .reduce(
            || (f64::NEG_INFINITY, usize::MAX),
            |a, b| {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    b
                } else {
                    a
                }
            },
        )
}

/// Covering radius of `cloud` over `net`.
pub fn covering_radius(cloud: &DirectionCloud, net: &SphereNet) -> Result<DensityReport> {
    if cloud.is_empty() {
        return Err(domain("covering radius of an empty cloud"));
    }
    if cloud.k() != net.k() {
        return Err(precondition("cloud and net dimensions differ"));
    }
    if net.is_empty() {
        return Err(precondition("empty net"));
    }
    let (eps, i) = directed_hausdorff(net.k, cloud.unit_coords(), &net.coords);
    Ok(DensityReport {
        schema_version: SCHEMA_VERSION,
        covering_radius: eps,
        argmax_net_point: net.point(i).to_vec(),
        argmax_index: i,
        n: cloud.bound().to_string(),
        k: net.k,
        h: net.h,
        cloud_size: cloud.len(),
        net_size: net.len(),
        distinct: cloud.distinct_only(),
        sampled: cloud.sampled(),
        metric: "euclidean-chordal",
    })
}

const RATIO_CAVEAT: &str =
    "ratios tending to 1 imply density; the converse fails, and a finite prefix cannot establish the limit";

/// One block of consecutive ratios.
#[derive(Debug, Clone, Serialize)]
pub struct GapWindow {
    /// 1-based index `n` of the first ratio `a_n / a_(n−1)` in the block.
    pub first_n: usize,
    pub last_n: usize,
    pub max_gap: f64,
}

/// Block maxima of `a_n / a_(n−1) − 1`.
#[derive(Debug, Clone, Serialize)]
pub struct RatioGapStat {
    pub schema_version: u32,
    pub windows: Vec<GapWindow>,
    pub max_gap: f64,
    pub trend: Vec<f64>,
    pub strictly_decreasing: bool,
    pub caveat: &'static str,
}

impl RatioGapStat {
    /// `window,max_gap` rows.
    pub fn write_trend_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(["window", "max_gap"])?;
        for (i, g) in self.trend.iter().enumerate() {
            w.write_record([(i + 1).to_string(), format!("{g:e}")])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn ratio_minus_one(hi: &BigUint, lo: &BigUint) -> f64 {
    let q = BigRational::new(BigInt::from(hi - lo), BigInt::from(lo.clone()));
    q.to_f64().unwrap_or(f64::INFINITY)
}

/// Splits the ratios `a_n/a_(n−1) − 1` (`n = 2, …, |A|`) into
/// `window_count` contiguous blocks of near-equal length and reports each
/// block's maximum.
pub fn ratio_gap(a: &GroundSet, window_count: usize) -> Result<RatioGapStat> {
    if window_count == 0 {
        return Err(precondition("window count must be positive"));
    }
    if a.len() < 2 * window_count {
        return Err(precondition(format!(
            "|A| = {} is below 2 × {window_count} windows",
            a.len()
        )));
    }
    let e = a.elements();
    let gaps: Vec<f64> = e.windows(2).map(|w| ratio_minus_one(&w[1], &w[0])).collect();
    let len = gaps.len();
    let windows: Vec<GapWindow> = (0..window_count)
        .map(|w| {
            let (s, t) = (w * len / window_count, (w + 1) * len / window_count);
            GapWindow {
                first_n: s + 2,
                last_n: t + 1,
                max_gap: gaps[s..t].iter().copied().fold(0.0, f64::max),
            }
        })
        .collect();
    let trend: Vec<f64> = windows.iter().map(|w| w.max_gap).collect();
    Ok(RatioGapStat {
        schema_version: SCHEMA_VERSION,
        max_gap: trend.iter().copied().fold(0.0, f64::max),
        strictly_decreasing: trend.windows(2).all(|w| w[1] < w[0]),
        trend,
        windows,
        caveat: RATIO_CAVEAT,
    })
}

/// A tuple from `A^k` pointing close to `x`, with its certificate.
#[derive(Debug, Clone)]
pub struct Witness {
    pub tuple: IntTuple,
    /// `a_(m_i − 1)` for each coordinate.
    pub predecessors: Vec<BigUint>,
    /// `‖ρ(tuple) − x‖`.
    pub error: f64,
    /// `2 · (max_i a_(m_i) / a_(m_i − 1) − 1)`, an upper bound on `error`.
    pub bound: f64,
}

/// For each `i`, picks the least `a ∈ A` with `a > m·x_i`.
///
/// All comparisons are exact: `a > m·x_i` iff `a² > m²·x_i²`, and `x_i²` is
/// rational. The sandwich `a_(m_i − 1) ≤ m·x_i < a_(m_i)` is asserted for
/// every coordinate, and so is the error bound derived from
/// `x_i < a_(m_i)/m ≤ (a_(m_i)/a_(m_i − 1))·x_i`.
pub fn witness_tuple(a: &GroundSet, x: &TargetPoint, m: u64) -> Result<Witness> {
    if m == 0 {
        return Err(precondition("m must be positive"));
    }
    if x.has_zero_coordinate() {
        return Err(domain("witness tuples need every coordinate of x positive"));
    }
    let first = a
        .elements()
        .first()
        .ok_or_else(|| precondition("ground set is empty"))?;
    let m2 = BigRational::from_integer(BigInt::from(m) * BigInt::from(m));
    let sq = |n: &BigUint| BigRational::from_integer(BigInt::from(n * n));
    let min_sq = x.squares().iter().min().unwrap();
    // m ≥ a_1 / min_i x_i
    if &m2 * min_sq < sq(first) {
        let need = rational_to_f64_sqrt(&(sq(first) / min_sq)).ceil();
        return Err(precondition(format!("m = {m} is below the bound a_1 / min x_i; need m ≥ {need}")));
    }
    let mut tuple = Vec::with_capacity(x.k());
    let mut preds = Vec::with_capacity(x.k());
    let mut worst = 0.0f64;
    for s in x.squares() {
        let threshold = &m2 * s; // (m·x_i)²
        let j = a.elements().partition_point(|e| sq(e) <= threshold);
        if j == a.len() {
            let need = rational_to_f64_sqrt(&threshold).floor() + 1.0;
            return Err(precondition(format!(
                "no element of A exceeds m·x_i ≈ {need}; materialize A up to N > {need}"
            )));
        }
        let (hi, lo) = (&a.elements()[j], &a.elements()[j - 1]);
        if !(sq(lo) <= threshold && sq(hi) > threshold) {
            return Err(Error::Invariant("witness sandwich failed".into()));
        }
        worst = worst.max(ratio_minus_one(hi, lo));
        tuple.push(hi.clone());
        preds.push(lo.clone());
    }
    let w = UnitVector::normalized(scaled_f64(&tuple));
    let error = w.distance(x.unit());
    let bound = 2.0 * worst;
    if error > bound * (1.0 + 1e-9) + 1e-15 {
        return Err(Error::Invariant(format!(
            "witness error {error} exceeds the bound {bound}"
        )));
    }
    Ok(Witness {
        tuple: IntTuple::new(tuple)?,
        predecessors: preds,
        error,
        bound,
    })
}

fn rational_to_f64_sqrt(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::INFINITY).sqrt()
}

/// Settings shared by the two dimensions of [`chain_check`].
#[derive(Debug, Clone, Default)]
pub struct ChainOptions {
    pub distinct_only: bool,
    /// Keep only tuples whose entries are all at least this large. Implies
    /// distinct entries.
    pub tail_threshold: Option<BigUint>,
    pub sampling: Option<Sampling>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub schema_version: u32,
    pub upper: DensityReport,
    pub lower: DensityReport,
    /// `ε_(k−1) ≤ ε_k + 2h`.
    pub forward_bound_holds: bool,
}

/// Covering radii of the `k`- and `(k−1)`-dimensional clouds of `A` on nets
/// of the same resolution.
pub fn chain_check(a: &GroundSet, k: usize, h: f64, options: &ChainOptions, budget: &Budget) -> Result<ChainReport> {
    if k < 3 {
        return Err(precondition("chain check needs k ≥ 3"));
    }
    let cloud = |dim: usize| -> Result<DirectionCloud> {
        match &options.tail_threshold {
            Some(t) => accumulation_candidates(a, dim, t, budget),
            None => directions_with(a, dim, options.distinct_only, budget, options.sampling),
        }
    };
    let report = |dim: usize| -> Result<DensityReport> {
        covering_radius(&cloud(dim)?, &sphere_net(dim, h, budget)?)
    };
    let upper = report(k)?;
    let lower = report(k - 1)?;
    Ok(ChainReport {
        schema_version: SCHEMA_VERSION,
        forward_bound_holds: lower.covering_radius <= upper.covering_radius + 2.0 * h,
        upper,
        lower,
    })
}

/// Monte-Carlo check of a net's mesh.
#[derive(Debug, Clone, Serialize)]
pub struct NetAudit {
    pub schema_version: u32,
    pub k: usize,
    pub h: f64,
    pub net_size: usize,
    pub samples: u64,
    pub seed: u64,
    pub max_distance: f64,
    pub within_h: bool,
}

/// Samples points uniformly from `S^(k−1)` and measures the distance to the
/// nearest net point.
pub fn net_audit(net: &SphereNet, samples: u64, seed: u64) -> NetAudit {
    let k = net.k;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(samples as usize * k);
    let mut v = vec![0.0f64; k];
    for _ in 0..samples {
        // uniform in the unit ball's orthant, then projected radially
        loop {
            v.iter_mut().for_each(|c| *c = rng.gen::<f64>());
            let n2: f64 = v.iter().map(|c| c * c).sum();
            if n2 <= 1.0 && n2 > 1e-12 {
                let n = n2.sqrt();
                pts.extend(v.iter().map(|c| c / n));
                break;
            }
        }
    }
    let (max_distance, _) = directed_hausdorff(k, net.coords.clone(), &pts);
    NetAudit {
        schema_version: SCHEMA_VERSION,
        k,
        h: net.h,
        net_size: net.len(),
        samples,
        seed,
        max_distance,
        within_h: max_distance <= net.h,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direction::PrimitiveDirection;
    use crate::enumeration::{directions, ground_set, GroundRule};
    use crate::targets::point_from_strs;
    use proptest::prelude::*;

    fn budget() -> Budget {
        Budget::default()
    }

    /// Exhaustive covering radius, no index.
    fn brute_radius(cloud: &DirectionCloud, net: &SphereNet) -> f64 {
        let c: Vec<UnitVector> = cloud.dirs().iter().map(|d| d.to_unit()).collect();
        net.points()
            .map(|p| c.iter().map(|q| crate::direction::distance(p, q.coords())).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    }

    #[test]
    fn net_sizes_and_contents() {
        let n = sphere_net(2, 0.01, &budget()).unwrap();
        assert_eq!(n.denominator(), 100);
        assert_eq!(n.len(), 201);
        let coarse = sphere_net(2, 1.0, &budget()).unwrap();
        let has = |v: &[f64]| coarse.points().any(|p| crate::direction::distance(p, v) < 1e-12);
        let s = 0.5f64.sqrt();
        assert!(has(&[1.0, 0.0]) && has(&[0.0, 1.0]) && has(&[s, s]));
        assert!(sphere_net(3, 0.0, &budget()).is_err());
        assert!(sphere_net(1, 0.5, &budget()).is_err());
        let tiny = Budget { net_points: 100, ..budget() };
        assert!(matches!(sphere_net(3, 0.05, &tiny), Err(Error::Resource(_))));
    }

    #[test]
    fn net_mesh_audit() {
        let net = sphere_net(3, 0.2, &budget()).unwrap();
        let audit = net_audit(&net, 10_000, 1);
        assert!(audit.within_h, "{}", audit.max_distance);
        let net4 = sphere_net(4, 0.3, &budget()).unwrap();
        assert!(net_audit(&net4, 5_000, 2).within_h);
    }

    #[test]
    fn covering_radius_examples() {
        let net = sphere_net(2, 0.1, &budget()).unwrap();
        let dirs: Vec<PrimitiveDirection> = (0..=net.denominator())
            .flat_map(|a| {
                let d = net.denominator();
                [PrimitiveDirection::from_u64(&[a, d]).unwrap(), PrimitiveDirection::from_u64(&[d, a]).unwrap()]
            })
            .collect();
        let itself = DirectionCloud::from_directions(2, dirs, false).unwrap();
        assert_eq!(covering_radius(&itself, &net).unwrap().covering_radius, 0.0);

        let axis = DirectionCloud::from_directions(2, vec![PrimitiveDirection::from_u64(&[1, 0]).unwrap()], false).unwrap();
        let r = covering_radius(&axis, &net).unwrap();
        assert!((r.covering_radius - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.argmax_net_point, vec![0.0, 1.0]);

        let empty = DirectionCloud::from_directions(2, vec![], false).unwrap();
        assert!(covering_radius(&empty, &net).is_err());
    }

    #[test]
    fn powers_of_two_leave_a_gap() {
        let a = ground_set(&GroundRule::PowersOf(2), 1 << 20, &budget()).unwrap();
        let cloud = directions(&a, 2, false, &budget()).unwrap();
        let r = covering_radius(&cloud, &sphere_net(2, 0.01, &budget()).unwrap()).unwrap();
        assert!(r.covering_radius >= 0.15);
        let gap = crate::direction::rho(&[1.0, 1.0]).unwrap().distance(&crate::direction::rho(&[1.0, 2.0]).unwrap());
        assert!((gap - 0.3204).abs() < 1e-4);
        assert!((r.covering_radius - gap / 2.0).abs() < 0.01);
    }

    #[test]
    fn indexed_radius_equals_exhaustive() {
        let a = ground_set(&GroundRule::Primes, 200, &budget()).unwrap();
        for k in [2, 3] {
            let cloud = directions(&a, k, true, &budget()).unwrap();
            let net = sphere_net(k, 0.05, &budget()).unwrap();
            let fast = covering_radius(&cloud, &net).unwrap().covering_radius;
            assert!((fast - brute_radius(&cloud, &net)).abs() < 1e-9);
        }
    }

    #[test]
    fn ratio_gap_examples() {
        let nat = ground_set(&GroundRule::Naturals, 1000, &budget()).unwrap();
        let g = ratio_gap(&nat, 4).unwrap();
        assert_eq!(g.trend[0], 1.0);
        assert!(g.trend[3] <= 1.0 / 750.0);
        for w in &g.windows {
            assert!((w.max_gap - 1.0 / (w.first_n as f64 - 1.0)).abs() < 1e-15);
        }
        assert!(g.strictly_decreasing);
        let pw = ground_set(&GroundRule::PowersOf(2), 1 << 30, &budget()).unwrap();
        assert!(ratio_gap(&pw, 4).unwrap().trend.iter().all(|&g| g == 1.0));
        assert!(ratio_gap(&GroundSet::explicit_u64(&[1, 2, 3]).unwrap(), 2).is_err());
        let mut buf = Vec::new();
        g.write_trend_csv(&mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("window,max_gap\n1,1e0\n"));
    }

    #[test]
    fn primes_ratio_gap_decreases() {
        let p = ground_set(&GroundRule::Primes, 1_000_000, &budget()).unwrap();
        assert!(ratio_gap(&p, 4).unwrap().strictly_decreasing);
    }

    #[test]
    fn witness_examples() {
        let x = point_from_strs(&["0.6", "0.8"]).unwrap();
        let nat = ground_set(&GroundRule::Naturals, 100, &budget()).unwrap();
        let w = witness_tuple(&nat, &x, 10).unwrap();
        assert_eq!(w.tuple, IntTuple::from_u64s(&[7, 9]).unwrap());
        let rho = w.tuple.direction();
        assert!((rho.coords()[0] - 0.6139).abs() < 1e-4 && (rho.coords()[1] - 0.7894).abs() < 1e-4);

        let primes = ground_set(&GroundRule::Primes, 100, &budget()).unwrap();
        let w = witness_tuple(&primes, &x, 10).unwrap();
        assert_eq!(w.tuple, IntTuple::from_u64s(&[7, 11]).unwrap());

        let big = ground_set(&GroundRule::Naturals, 1000, &budget()).unwrap();
        let w = witness_tuple(&big, &x, 1000).unwrap();
        assert_eq!(w.tuple, IntTuple::from_u64s(&[601, 801]).unwrap());
        assert!(w.error < 2e-3);

        // m·x_i beyond the prefix, m below the bound, zero coordinate
        assert!(matches!(witness_tuple(&nat, &x, 1000), Err(Error::Precondition(_))));
        assert!(matches!(witness_tuple(&primes, &x, 2), Err(Error::Precondition(_))));
        let edge = point_from_strs(&["1", "0"]).unwrap();
        assert!(matches!(witness_tuple(&nat, &edge, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn chain_on_small_primes() {
        let p = ground_set(&GroundRule::Primes, 300, &budget()).unwrap();
        let r = chain_check(&p, 3, 0.1, &ChainOptions::default(), &budget()).unwrap();
        assert!(r.forward_bound_holds);
        let one = GroundSet::explicit_u64(&[1]).unwrap();
        let r = chain_check(&one, 3, 0.2, &ChainOptions::default(), &budget()).unwrap();
        assert!(r.upper.covering_radius > 0.8 && r.lower.covering_radius > 0.7);
        assert!(chain_check(&p, 2, 0.1, &ChainOptions::default(), &budget()).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn radius_is_antitone(raw in prop::collection::btree_set(1u64..200, 2..30), extra in 1u64..200) {
            let v: Vec<u64> = raw.iter().copied().collect();
            let mut w = v.clone();
            w.push(extra);
            let small = directions(&GroundSet::explicit_u64(&v).unwrap(), 2, false, &budget()).unwrap();
            let large = directions(&GroundSet::explicit_u64(&w).unwrap(), 2, false, &budget()).unwrap();
            let net = sphere_net(2, 0.05, &budget()).unwrap();
            let a = covering_radius(&small, &net).unwrap().covering_radius;
            let b = covering_radius(&large, &net).unwrap().covering_radius;
            prop_assert!(b <= a);
            prop_assert!(a >= 0.0 && a <= 2f64.sqrt() + 1e-12);
        }

        #[test]
        fn witness_error_within_bound(
            num in 1u64..1000, den in 1u64..1000, m in 100u64..5000,
        ) {
            let x = point_from_strs(&[&num.to_string(), &den.to_string()]).unwrap();
            let nat = ground_set(&GroundRule::Naturals, 10_000, &budget()).unwrap();
            match witness_tuple(&nat, &x, m) {
                Ok(w) => prop_assert!(w.error <= w.bound * (1.0 + 1e-9) + 1e-15),
                Err(e) => prop_assert!(matches!(e, Error::Precondition(_))),
            }
        }
    }
}

//! Repeated entries break the realization.
//!
//! Take `η = ρ(1, √2, 0, …, 0)` in `k ≥ 3` dimensions and let `X` be the
//! closure of `{η}`. Every point of `X` has a zero coordinate, while
//! `θ = ρ(1, √2, 1, …, 1)` has none, so `θ ∉ X` and `X` stays a fixed
//! distance from `θ`. Building `A` for `X` produces steps whose tuple is
//! close to `m!·η`; reusing the first entry gives
//! `(c_1, c_2, c_1, …, c_1) ≈ m!·(1, √2, 1, …, 1)/√3`, whose direction tends to
//! `θ`. So `θ` accumulates in `D^k(A)` even though it is far from
//! `X = D^k̲(A)′`.
//!
//! ```
//! use kdirections::budget::Budget;
//! use kdirections::remark::demo_remark;
//!
//! let r = demo_remark(3, 15, &Budget::default()).unwrap();
//! assert_eq!(r.separation_squared, "2 - sqrt(3)");
//! assert!(r.repetition_distance < 1e-3);
//! assert!(r.distinct_tail_distance.unwrap() > 0.1);
//! ```

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::constructor::{construct, factorial, ConstructOptions};
use crate::direction::UnitVector;
use crate::enumeration::{accumulation_candidates, directions, GroundSet};
use crate::error::{precondition, Result};
use crate::exact::{ExactCoord, SurdSum};
use crate::targets::{close_generators, TargetPoint};
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, Serialize)]
pub struct RemarkReport {
    pub schema_version: u32,
    pub k: usize,
    #[serde(rename = "M")]
    pub m_max: u64,
    pub eta: String,
    pub theta: String,
    /// Number of points in the closure `X` of `{η}`.
    pub x_size: usize,
    /// `min ‖ρ(a) − θ‖` over all of `D^k(A)`.
    pub repetition_distance: f64,
    pub repetition_tuple: Vec<String>,
    /// Elements `≥ tail_index!` form the tail.
    pub tail_index: u64,
    /// `min ‖ρ(a) − θ‖` over distinct-entry tail tuples; `None` if the tail
    /// has fewer than `k` elements.
    pub distinct_tail_distance: Option<f64>,
    /// Exact `min_{x ∈ X} ‖θ − x‖²`.
    pub separation_squared: String,
    pub separation: f64,
    pub nearest_x: String,
}

fn eta_and_theta(k: usize) -> Result<(TargetPoint, TargetPoint)> {
    let sqrt2 = ExactCoord::sqrt(2)?;
    let mut eta = vec![ExactCoord::integer(1), sqrt2.clone()];
    let mut theta = eta.clone();
    eta.resize(k, ExactCoord::zero());
    theta.resize(k, ExactCoord::integer(1));
    Ok((TargetPoint::new(eta)?, TargetPoint::new(theta)?))
}

/// Runs the demonstration for dimension `k ≥ 3` with `m_max` construction
/// steps. The tail starts at `⌊m_max/2⌋!`.
pub fn demo_remark(k: usize, m_max: u64, budget: &Budget) -> Result<RemarkReport> {
    if k < 3 {
        return Err(precondition("the repetition counterexample needs k ≥ 3"));
    }
    let (eta, theta) = eta_and_theta(k)?;
    let x = close_generators(std::slice::from_ref(&eta))?;

    // exact separation of θ from X
    let mut best: Option<(SurdSum, &TargetPoint)> = None;
    for p in x.points() {
        let d2 = theta.distance_squared(p)?;
        if best.as_ref().is_none_or(|(b, _)| (&d2 - b).signum() < 0) {
            best = Some((d2, p));
        }
    }
    let (sep2, nearest) = best.expect("X is nonempty");

    let run = construct(&x, m_max, &ConstructOptions::default())?;
    let a = run.ground_set();
    let (repetition_distance, repetition_tuple) = if !a.is_empty() {
        nearest_to(&a, k, false, theta.unit(), budget)?
    } else {
        (f64::INFINITY, Vec::new())
    };
    let tail_index = m_max / 2;
    let tail = accumulation_candidates(&a, k, &factorial(tail_index), budget)?;
    let distinct_tail_distance = (!tail.is_empty()).then(|| {
        tail.dirs()
            .par_iter()
            .map(|d| d.to_unit().distance(theta.unit()))
            .reduce(|| f64::INFINITY, f64::min)
    });
    Ok(RemarkReport {
        schema_version: SCHEMA_VERSION,
        k,
        m_max,
        eta: eta.to_string(),
        theta: theta.to_string(),
        x_size: x.points().len(),
        repetition_distance,
        repetition_tuple,
        tail_index,
        distinct_tail_distance,
        separation: sep2.to_f64().max(0.0).sqrt(),
        separation_squared: sep2.to_string(),
        nearest_x: nearest.to_string(),
    })
}

/// Closest direction of `D^k(A)` (or `D^k̲(A)`) to `target`, with a primitive
/// representative.
fn nearest_to(a: &GroundSet, k: usize, distinct: bool, target: &UnitVector, budget: &Budget) -> Result<(f64, Vec<String>)> {
    let cloud = directions(a, k, distinct, budget)?;
    let (d, i) = cloud
        .dirs()
        .par_iter()
        .enumerate()
        .map(|(i, dir)| (dir.to_unit().distance(target), i))
        .reduce(|| (f64::INFINITY, usize::MAX), |x, y| if y.0 < x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x });
    let tuple = cloud.dirs()[i].entries().iter().map(BigUint::to_string).collect();
    Ok((d, tuple))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_dimensions() {
        let r = demo_remark(3, 15, &Budget::default()).unwrap();
        assert_eq!(r.x_size, 9);
        assert_eq!(r.separation_squared, "2 - sqrt(3)");
        assert!((r.separation - (2.0 - 3f64.sqrt()).sqrt()).abs() < 1e-12);
        assert!(r.separation > 0.3);
        assert!(r.repetition_distance < 1e-3);
        assert!(r.distinct_tail_distance.unwrap() > 0.1);
        assert!(r.repetition_distance < r.separation);
    }

    #[test]
    fn four_dimensions() {
        let r = demo_remark(4, 12, &Budget::default()).unwrap();
        assert!(r.separation > 0.3);
        assert!(r.repetition_distance < r.separation / 10.0);
        assert!(r.distinct_tail_distance.unwrap() > 0.1);
    }

    #[test]
    fn needs_three_dimensions() {
        assert!(matches!(demo_remark(2, 10, &Budget::default()), Err(crate::Error::Precondition(_))));
    }
}

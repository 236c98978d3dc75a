//! Exact nearest-neighbour queries for points in `[0,1]^k`.
//!
//! Points are bucketed in a uniform grid. A query scans cells in growing
//! Chebyshev rings around its own cell and stops once no unscanned cell can
//! hold anything closer, so the answer equals the exhaustive minimum.

use std::collections::HashMap;

use smallvec::SmallVec;

type Cell = SmallVec<[i32; 4]>;

pub(crate) struct GridIndex {
    k: usize,
    coords: Vec<f64>,
    side: f64,
    cells: HashMap<Cell, Vec<u32>>,
    // bounding box of occupied cells
    lo: Cell,
    hi: Cell,
}

impl GridIndex {
    /// `points` is a flat row-major array of `len / k` vectors.
    pub(crate) fn new(k: usize, coords: Vec<f64>) -> Self {
        let n = coords.len() / k;
        // about two points per occupied cell on a (k−1)-dimensional surface
        let side = if k > 1 {
            (2.0 / n.max(1) as f64).powf(1.0 / (k - 1) as f64)
        } else {
            1.0
        }
        .clamp(1e-4, 1.0);
        let mut cells: HashMap<Cell, Vec<u32>> = HashMap::new();
        let mut lo: Cell = SmallVec::from_elem(i32::MAX, k);
        let mut hi: Cell = SmallVec::from_elem(i32::MIN, k);
        for (i, p) in coords.chunks_exact(k).enumerate() {
            let c = cell_of(p, side);
            for d in 0..k {
                lo[d] = lo[d].min(c[d]);
                hi[d] = hi[d].max(c[d]);
            }
            cells.entry(c).or_default().push(i as u32);
        }
        GridIndex {
            k,
            coords,
            side,
            cells,
            lo,
            hi,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.coords.len() / self.k
    }

    fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.k..(i + 1) * self.k]
    }

    fn brute(&self, q: &[f64]) -> (usize, f64) {
        let mut best = (usize::MAX, f64::INFINITY);
        for i in 0..self.len() {
            let d = sq_dist(q, self.point(i));
            if d < best.1 || (d == best.1 && i < best.0) {
                best = (i, d);
            }
        }
        (best.0, best.1.sqrt())
    }

    /// Index and Euclidean distance of the nearest stored point. Ties go to
    /// the lowest index.
    pub(crate) fn nearest(&self, q: &[f64]) -> (usize, f64) {
        assert!(self.len() > 0, "empty index");
        let k = self.k;
        let home = cell_of(q, self.side);
        // ring radius past which every occupied cell has been seen
        let last = (0..k)
            .map(|d| (home[d] - self.lo[d]).abs().max((self.hi[d] - home[d]).abs()))
            .max()
            .unwrap_or(0);
        let mut best = (usize::MAX, f64::INFINITY);
        let mut work = 0u64;
        let mut r: i32 = 0;
        loop {
            // offsets inside [−r, r]^k that can reach an occupied cell
            let from: Cell = (0..k).map(|d| (self.lo[d] - home[d]).max(-r)).collect();
            let to: Cell = (0..k).map(|d| (self.hi[d] - home[d]).min(r)).collect();
            if from.iter().zip(&to).all(|(a, b)| a <= b) {
                work += from.iter().zip(&to).map(|(a, b)| (b - a + 1) as u64).product::<u64>();
                // a cell probe costs about as much as 16 distance evaluations
                if 16 * work > self.len() as u64 {
                    return self.brute(q);
                }
                let mut offset = from.clone();
                loop {
                    if offset.iter().any(|o| o.abs() == r) {
                        let cell: Cell = home.iter().zip(&offset).map(|(h, o)| h + o).collect();
                        if let Some(ids) = self.cells.get(&cell) {
                            for &i in ids {
                                let i = i as usize;
                                let d = sq_dist(q, self.point(i));
                                if d < best.1 || (d == best.1 && i < best.0) {
                                    best = (i, d);
                                }
                            }
                        }
                    }
                    let mut pos = 0;
                    while pos < k && offset[pos] == to[pos] {
                        offset[pos] = from[pos];
                        pos += 1;
                    }
                    if pos == k {
                        break;
                    }
                    offset[pos] += 1;
                }
            }
            if r >= last {
                return (best.0, best.1.sqrt());
            }
            // cells outside ring r differ by more than r·side in a coordinate
            let reach = r as f64 * self.side;
            if best.0 != usize::MAX && best.1 < reach * reach {
                return (best.0, best.1.sqrt());
            }
            r += 1;
        }
    }
}

fn cell_of(p: &[f64], side: f64) -> Cell {
    p.iter().map(|&c| (c / side).floor() as i32).collect()
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit(v: Vec<f64>) -> Vec<f64> {
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        v.into_iter().map(|c| c / n).collect()
    }

    #[test]
    fn single_point() {
        let g = GridIndex::new(2, vec![1.0, 0.0]);
        let (i, d) = g.nearest(&[0.0, 1.0]);
        assert_eq!(i, 0);
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let g = GridIndex::new(2, vec![0.0, 1.0, 1.0, 0.0, 0.0, 1.0]);
        assert_eq!(g.nearest(&[0.0, 1.0]).0, 0);
        let s = 0.5f64.sqrt();
        assert_eq!(g.nearest(&[s, s]).0, 0);
    }

    proptest! {
        #[test]
        fn matches_exhaustive(
            k in 2usize..5,
            raw in prop::collection::vec(prop::collection::vec(0.0f64..1.0, 4), 1..400),
            queries in prop::collection::vec(prop::collection::vec(0.0f64..1.0, 4), 1..20),
        ) {
            let pts: Vec<Vec<f64>> = raw.into_iter()
                .map(|v| v[..k].to_vec())
                .filter(|v| v.iter().any(|&c| c > 1e-9))
                .map(unit)
                .collect();
            prop_assume!(!pts.is_empty());
            let g = GridIndex::new(k, pts.concat());
            for q in queries {
                let q = q[..k].to_vec();
                prop_assume!(q.iter().any(|&c| c > 1e-9));
                let q = unit(q);
                let (i, d) = g.nearest(&q);
                let exhaustive = pts.iter().map(|p| sq_dist(p, &q).sqrt()).fold(f64::INFINITY, f64::min);
                prop_assert!((d - exhaustive).abs() <= 1e-12);
                prop_assert!((sq_dist(&pts[i], &q).sqrt() - d).abs() <= 1e-12);
            }
        }
    }
}

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{GeomError, Point, PointSet, Result};

/// Attempts per requested point before giving up.
const ATTEMPTS_PER_POINT: usize = 1000;

/// Uniform random points in `[-range, range]^d` with pairwise distinct
/// coordinates on every axis, deterministic in `seed`.
///
/// With `symmetric`, points come in pairs `p, -p` (so `n` must be even), no
/// coordinate is zero, and all squared norms are distinct. Candidates that
/// would break these conditions are rejected and redrawn.
pub fn random_point_set(n: usize, d: usize, seed: u64, symmetric: bool, range: i64) -> Result<PointSet> {
    if n == 0 || d == 0 || range <= 0 || (symmetric && !n.is_multiple_of(2)) {
        return Err(GeomError::InvalidSpec(alloc::format!(
            "random set needs n > 0, d > 0, range > 0 and even n when symmetric (n = {n}, d = {d}, range = {range})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used: Vec<BTreeSet<i64>> = alloc::vec![BTreeSet::new(); d];
    let mut norms: BTreeSet<i128> = BTreeSet::new();
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let budget = ATTEMPTS_PER_POINT * n;
    let mut attempts = 0;
    while points.len() < n {
        attempts += 1;
        if attempts > budget {
            return Err(GeomError::RetryExhausted(budget));
        }
        let coords: Vec<i64> = (0..d).map(|_| rng.gen_range(-range..=range)).collect();
        if coords.iter().enumerate().any(|(k, c)| used[k].contains(c)) {
            continue;
        }
        if symmetric {
            let norm: i128 = coords.iter().map(|&c| c as i128 * c as i128).sum();
            let clash = coords.iter().enumerate().any(|(k, &c)| c == 0 || used[k].contains(&-c));
            if clash || norms.contains(&norm) {
                continue;
            }
            norms.insert(norm);
            for (k, &c) in coords.iter().enumerate() {
                used[k].insert(c);
                used[k].insert(-c);
            }
            let p = Point::new(coords)?;
            points.push(p.negated());
            points.push(p);
        } else {
            for (k, &c) in coords.iter().enumerate() {
                used[k].insert(c);
            }
            points.push(Point::new(coords)?);
        }
    }
    if symmetric {
        // Emit the first point of every pair first, then the negations, so
        // that index i and i + n/2 form a pair.
        let (firsts, seconds): (Vec<_>, Vec<_>) = points.chunks(2).map(|c| (c[1].clone(), c[0].clone())).unzip();
        points = firsts.into_iter().chain(seconds).collect();
    }
    PointSet::new(d, points)
}

//! All-pairs distance approximation from a single BFS tree.
//!
//! With a BFS tree rooted at `s`, the estimate for a pair is
//! `d̂(x,y) = h(x) + h(y) - 2k + λ` where `k` is the deepest level at which
//! the tree ancestors of `x` and `y` come within distance `λ` of each other.
//! A subtree-merging sweep computes all pairs in near-quadratic time; the
//! error is one-sided and at most `λ + 1` once `λ` reaches the graph's
//! triangle thinness. A plug-in variant replaces exact ancestor distances
//! with any `(α, β)`-approximate estimator.

use std::collections::HashMap;
use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::graph::{BfsLayering, Graph};
use crate::oracle::{Budget, DistanceMatrix};

/// For every vertex, the ascending-sorted set of vertices within distance
/// `lambda` (always including the vertex itself).
#[derive(Clone, Debug)]
pub struct PowerReach {
    lambda: u32,
    offsets: Vec<usize>,
    lists: Vec<u32>,
}

impl PowerReach {
    /// One depth-`lambda` truncated BFS per vertex. Refuses when the total
    /// list size exceeds the entry budget.
    pub fn build(g: &Graph, lambda: u32, budget: &Budget) -> Result<PowerReach> {
        let n = g.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0usize);
        let mut lists: Vec<u32> = Vec::new();
        let mut height = vec![u32::MAX; n];
        let mut queue: Vec<u32> = Vec::with_capacity(n);
        for v in 0..n as u32 {
            let cnt = g.bfs_truncated_into(v, lambda, &mut height, &mut queue);
            budget.check_entries("reachability lists", (lists.len() + cnt) as u64)?;
            let start = lists.len();
            lists.extend_from_slice(&queue[..cnt]);
            lists[start..].sort_unstable();
            offsets.push(lists.len());
        }
        Ok(PowerReach {
            lambda,
            offsets,
            lists,
        })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Vertices within distance `lambda` of `u`, ascending.
    pub fn ball(&self, u: u32) -> &[u32] {
        &self.lists[self.offsets[u as usize]..self.offsets[u as usize + 1]]
    }

    /// Whether `d(u, v) <= lambda`.
    pub fn within(&self, u: u32, v: u32) -> bool {
        self.ball(u).binary_search(&v).is_ok()
    }

    pub fn total_entries(&self) -> usize {
        self.lists.len()
    }
}

/// Deepest level `k` at which the root paths of `x` and `y` pass the
/// proximity test, i.e. the largest `k <= min(h(x), h(y))` with
/// `within(x_k, y_k)` true for the level-`k` ancestors. Level 0 always
/// qualifies since both paths end at the root.
pub fn separation_level(l: &BfsLayering, x: u32, y: u32, within: impl Fn(u32, u32) -> bool) -> u32 {
    let top = l.height[x as usize].min(l.height[y as usize]);
    let mut xc = l.ancestor_at_level(x, top);
    let mut yc = l.ancestor_at_level(y, top);
    let mut k = top;
    while k > 0 {
        if within(xc, yc) {
            return k;
        }
        xc = l.parent[xc as usize];
        yc = l.parent[yc as usize];
        k -= 1;
    }
    0
}

/// [`separation_level`] against exact distances with threshold `lambda`.
pub fn separation_level_exact(
    l: &BfsLayering,
    m: &DistanceMatrix,
    x: u32,
    y: u32,
    lambda: u32,
) -> u32 {
    separation_level(l, x, y, |u, v| m.get(u, v) <= lambda)
}

/// A pluggable all-pairs distance estimator with a one-sided multiplicative
/// guarantee: `d(x,y) <= query(x,y) <= alpha * d(x,y) + beta`, zero on the
/// diagonal, symmetric.
pub trait DistanceEstimator {
    fn query(&self, x: u32, y: u32) -> u32;
    /// The declared `(alpha, beta)`.
    fn guarantee(&self) -> (u32, u32);
}

/// Exact distances wrapped as a `(1, 0)`-estimator.
pub struct ExactEstimator<'a> {
    m: &'a DistanceMatrix,
}

impl<'a> ExactEstimator<'a> {
    pub fn new(m: &'a DistanceMatrix) -> Self {
        ExactEstimator { m }
    }
}

impl DistanceEstimator for ExactEstimator<'_> {
    fn query(&self, x: u32, y: u32) -> u32 {
        self.m.get(x, y)
    }

    fn guarantee(&self) -> (u32, u32) {
        (1, 0)
    }
}

/// Synthetic worst-case `(2, 1)`-estimator returning `2d + 1` off the
/// diagonal; exercises the loosest contract the estimated sweep accepts.
pub struct StretchEstimator<'a> {
    m: &'a DistanceMatrix,
}

impl<'a> StretchEstimator<'a> {
    pub fn new(m: &'a DistanceMatrix) -> Self {
        StretchEstimator { m }
    }
}

impl DistanceEstimator for StretchEstimator<'_> {
    fn query(&self, x: u32, y: u32) -> u32 {
        if x == y {
            0
        } else {
            2 * self.m.get(x, y) + 1
        }
    }

    fn guarantee(&self) -> (u32, u32) {
        (2, 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EstimateMode {
    /// Ancestor proximity tested with exact distances (threshold `lambda`).
    ExactPower,
    /// Tested with a plugged-in estimator (threshold `2 rho + 1`).
    Estimator,
}

/// Symmetric matrix of distance estimates, packed as a 16-bit lower
/// triangle. The diagonal is zero and `get(x, root) = h(x)` exactly.
#[derive(Clone, Debug)]
pub struct DistanceEstimate {
    pub root: u32,
    /// `lambda` in exact-power mode, `rho` in estimator mode.
    pub lambda_or_rho: u32,
    pub mode: EstimateMode,
    n: usize,
    dhat: Vec<u16>,
}

const DHAT_MAGIC: &[u8; 8] = b"DHATBIN1";

fn tri_index(a: u32, b: u32) -> usize {
    let (i, j) = if a >= b { (a, b) } else { (b, a) };
    i as usize * (i as usize + 1) / 2 + j as usize
}

impl DistanceEstimate {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The additive slack used by the sweep: `lambda` or `2 rho + 1`.
    pub fn additive(&self) -> u32 {
        match self.mode {
            EstimateMode::ExactPower => self.lambda_or_rho,
            EstimateMode::Estimator => 2 * self.lambda_or_rho + 1,
        }
    }

    pub fn get(&self, x: u32, y: u32) -> u32 {
        self.dhat[tri_index(x, y)] as u32
    }

    #[cfg(test)]
    pub(crate) fn set_raw(&mut self, x: u32, y: u32, value: u16) {
        self.dhat[tri_index(x, y)] = value;
    }

    /// Serializes as magic, mode byte, root, threshold, vertex count, then
    /// the row-major lower triangle as little-endian 16-bit values.
    pub fn write_binary<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        w.write_all(DHAT_MAGIC)?;
        w.write_all(&[match self.mode {
            EstimateMode::ExactPower => 0u8,
            EstimateMode::Estimator => 1u8,
        }])?;
        w.write_all(&self.root.to_le_bytes())?;
        w.write_all(&self.lambda_or_rho.to_le_bytes())?;
        w.write_all(&(self.n as u64).to_le_bytes())?;
        for &v in &self.dhat {
            w.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_binary<R: Read>(r: &mut R) -> Result<DistanceEstimate> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != DHAT_MAGIC {
            return Err(Error::InvalidFormat("bad estimate file magic".into()));
        }
        let mut byte = [0u8; 1];
        r.read_exact(&mut byte)?;
        let mode = match byte[0] {
            0 => EstimateMode::ExactPower,
            1 => EstimateMode::Estimator,
            other => {
                return Err(Error::InvalidFormat(format!(
                    "unknown estimate mode {other}"
                )))
            }
        };
        let mut w32 = [0u8; 4];
        r.read_exact(&mut w32)?;
        let root = u32::from_le_bytes(w32);
        r.read_exact(&mut w32)?;
        let lambda_or_rho = u32::from_le_bytes(w32);
        let mut w64 = [0u8; 8];
        r.read_exact(&mut w64)?;
        let n = u64::from_le_bytes(w64);
        if n > u32::MAX as u64 {
            return Err(Error::InvalidFormat("vertex count out of range".into()));
        }
        let n = n as usize;
        let len = n * (n + 1) / 2;
        let mut dhat = vec![0u16; len];
        let mut w16 = [0u8; 2];
        for slot in &mut dhat {
            r.read_exact(&mut w16)?;
            *slot = u16::from_le_bytes(w16);
        }
        if (root as usize) >= n.max(1) {
            return Err(Error::InvalidFormat("root out of range".into()));
        }
        Ok(DistanceEstimate {
            root,
            lambda_or_rho,
            mode,
            n,
            dhat,
        })
    }
}

#[cfg(debug_assertions)]
fn validate_family(l: &BfsLayering, x: u32, k: u32, family: &[(u32, Vec<u32>)], assigned: &[bool]) {
    if assigned.is_empty() {
        return;
    }
    let n = l.vertex_count();
    let sx = l.sigma[x as usize];
    let mut seen = vec![false; n];
    for (rep, members) in family {
        assert_eq!(l.height[*rep as usize], k);
        for &v in members {
            assert!(l.sigma[v as usize] > sx);
            assert!(l.height[v as usize] >= k);
            assert!(!assigned[v as usize]);
            assert_eq!(l.ancestor_at_level(v, k), *rep);
            assert!(!seen[v as usize]);
            seen[v as usize] = true;
        }
    }
    for v in 0..n {
        let expect = l.sigma[v] > sx && l.height[v] >= k && !assigned[v];
        assert_eq!(seen[v], expect, "subtree family must cover vertex {v}");
    }
}

/// Runs the per-vertex level sweep, filling the packed triangle.
///
/// Vertices are processed leaves-first; for the current `x` the family of
/// sets partitions the still-unassigned higher-ranked vertices by their
/// level-`k` ancestor. A set passing the proximity test against `x`'s own
/// ancestor is assigned wholesale and removed; survivors merge into their
/// parents (smaller onto larger) before the next level. The root pair is
/// set to `h(x)` afterwards, which is exact.
fn run_sweep(
    l: &BfsLayering,
    levels: &[Vec<u32>],
    additive: u32,
    within: &impl Fn(u32, u32) -> bool,
    dhat: &mut [u16],
    estimator_mode: bool,
) -> Result<()> {
    let n = l.vertex_count();
    let root = l.source;
    let mut anc: Vec<u32> = Vec::new();
    let mut family: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut survivors: Vec<(u32, Vec<u32>)> = Vec::new();
    let mut assigned: Vec<bool> = if cfg!(debug_assertions) && n <= 64 {
        vec![false; n]
    } else {
        Vec::new()
    };

    for &x in l.order.iter().rev() {
        if x == root {
            continue;
        }
        let sx = l.sigma[x as usize];
        let hx = l.height[x as usize];
        let q = hx as usize;
        assigned.fill(false);

        anc.clear();
        anc.resize(q + 1, 0);
        anc[q] = x;
        for k in (0..q).rev() {
            anc[k] = l.parent[anc[k + 1] as usize];
        }

        family.clear();
        for &u in &levels[q] {
            if l.sigma[u as usize] <= sx {
                break;
            }
            family.push((u, vec![u]));
        }

        for k in (0..=q).rev() {
            #[cfg(debug_assertions)]
            validate_family(l, x, k as u32, &family, &assigned);
            let xk = anc[k];
            survivors.clear();
            for (rep, members) in family.drain(..) {
                if within(rep, xk) {
                    for &v in &members {
                        if v == root {
                            continue;
                        }
                        let val = hx + l.height[v as usize] - 2 * k as u32 + additive;
                        let slot = &mut dhat[tri_index(x, v)];
                        debug_assert_eq!(*slot, u16::MAX, "pair assigned twice");
                        *slot = val as u16;
                        if !assigned.is_empty() {
                            assigned[v as usize] = true;
                        }
                    }
                } else {
                    survivors.push((rep, members));
                }
            }
            if k > 0 {
                let mut merged: HashMap<u32, Vec<u32>> = HashMap::with_capacity(survivors.len());
                for (rep, mut members) in survivors.drain(..) {
                    let p = l.parent[rep as usize];
                    debug_assert!(l.sigma[p as usize] > sx);
                    let slot = merged.entry(p).or_default();
                    if slot.len() < members.len() {
                        std::mem::swap(slot, &mut members);
                    }
                    slot.extend_from_slice(&members);
                }
                for &u in &levels[k - 1] {
                    if l.sigma[u as usize] <= sx {
                        break;
                    }
                    let mut set = merged.remove(&u).unwrap_or_default();
                    set.push(u);
                    family.push((u, set));
                }
                debug_assert!(merged.is_empty());
            } else if !survivors.is_empty() {
                debug_assert!(estimator_mode, "exact proximity cannot fail at the root");
                return Err(Error::ContractViolation(
                    "estimator rejected the root against itself".into(),
                ));
            }
        }

        dhat[tri_index(x, root)] = hx as u16;
    }
    Ok(())
}

fn prepare_dhat(l: &BfsLayering, additive: u32, budget: &Budget) -> Result<Vec<u16>> {
    let n = l.vertex_count();
    let len = n * (n + 1) / 2;
    budget.check_entries("distance estimates", len as u64)?;
    let max_value = 2 * l.eccentricity() as u64 + additive as u64;
    if max_value >= u16::MAX as u64 {
        return Err(Error::InvalidFormat(format!(
            "estimates up to {max_value} exceed 16-bit storage"
        )));
    }
    let mut dhat = vec![u16::MAX; len];
    for v in 0..n as u32 {
        dhat[tri_index(v, v)] = 0;
    }
    Ok(dhat)
}

fn assert_complete(dhat: &[u16]) {
    assert!(!dhat.contains(&u16::MAX), "sweep left a pair unassigned");
}

/// All-pairs estimates with ancestor proximity tested exactly at threshold
/// `lambda`. One-sided error at most `lambda + 1` when `lambda` reaches the
/// triangle thinness of the graph.
pub fn approximate_all_distances(
    g: &Graph,
    lambda: u32,
    root: u32,
    budget: &Budget,
) -> Result<DistanceEstimate> {
    let l = g.bfs(root)?;
    let mut dhat = prepare_dhat(&l, lambda, budget)?;
    let reach = PowerReach::build(g, lambda, budget)?;
    let levels = l.level_sets();
    run_sweep(
        &l,
        &levels,
        lambda,
        &|u, v| reach.within(u, v),
        &mut dhat,
        false,
    )?;
    assert_complete(&dhat);
    Ok(DistanceEstimate {
        root,
        lambda_or_rho: lambda,
        mode: EstimateMode::ExactPower,
        n: g.vertex_count(),
        dhat,
    })
}

/// Cheap spot checks of the declared estimator contract on a sample of
/// vertices and edges.
fn spot_check_estimator(g: &Graph, est: &impl DistanceEstimator) -> Result<()> {
    let n = g.vertex_count();
    let (alpha, beta) = est.guarantee();
    let step = (n / 16).max(1);
    for v in (0..n).step_by(step) {
        let v = v as u32;
        if est.query(v, v) != 0 {
            return Err(Error::ContractViolation(format!(
                "estimator is nonzero on the identical pair ({v}, {v})"
            )));
        }
        if let Some(&w) = g.neighbors(v).first() {
            let forward = est.query(v, w);
            if forward != est.query(w, v) {
                return Err(Error::ContractViolation(format!(
                    "estimator is asymmetric on ({v}, {w})"
                )));
            }
            if forward < 1 || forward > alpha + beta {
                return Err(Error::ContractViolation(format!(
                    "estimator value {forward} for adjacent pair ({v}, {w}) \
                     is outside [1, {}]",
                    alpha + beta
                )));
            }
        }
    }
    Ok(())
}

/// All-pairs estimates with ancestor proximity tested through `est` at
/// threshold `2 rho + 1`. With a `(2, 1)` estimator and `rho` at least the
/// triangle thinness, the one-sided error is at most `2 rho + 2`.
pub fn approximate_all_distances_estimated(
    g: &Graph,
    rho: u32,
    est: &impl DistanceEstimator,
    root: u32,
    budget: &Budget,
) -> Result<DistanceEstimate> {
    spot_check_estimator(g, est)?;
    let l = g.bfs(root)?;
    let threshold = 2 * rho + 1;
    let mut dhat = prepare_dhat(&l, threshold, budget)?;
    let levels = l.level_sets();
    run_sweep(
        &l,
        &levels,
        threshold,
        &|u, v| est.query(u, v) <= threshold,
        &mut dhat,
        true,
    )?;
    assert_complete(&dhat);
    Ok(DistanceEstimate {
        root,
        lambda_or_rho: rho,
        mode: EstimateMode::Estimator,
        n: g.vertex_count(),
        dhat,
    })
}

/// The closed form the sweep must reproduce:
/// `h(x) + h(y) - 2 * separation_level + additive`, with root pairs exact.
pub fn closed_form_estimate(
    l: &BfsLayering,
    x: u32,
    y: u32,
    additive: u32,
    within: impl Fn(u32, u32) -> bool,
) -> u32 {
    if x == y {
        return 0;
    }
    if y == l.source {
        return l.height[x as usize];
    }
    if x == l.source {
        return l.height[y as usize];
    }
    let k = separation_level(l, x, y, within);
    l.height[x as usize] + l.height[y as usize] - 2 * k + additive
}

/// Lower and upper distance bounds from one separation level:
/// `h(x)+h(y)-2k-1 <= d(x,y) <= h(x)+h(y)-2k+d(x_k,y_k)`. The lower bound
/// needs `lambda` at or above the triangle thinness; the upper holds always.
pub fn distance_sandwich(
    l: &BfsLayering,
    m: &DistanceMatrix,
    x: u32,
    y: u32,
    lambda: u32,
) -> (i64, u32) {
    let k = separation_level_exact(l, m, x, y, lambda);
    let xk = l.ancestor_at_level(x, k);
    let yk = l.ancestor_at_level(y, k);
    let sum = l.height[x as usize] + l.height[y as usize];
    let lower = sum as i64 - 2 * k as i64 - 1;
    let upper = sum - 2 * k + m.get(xk, yk);
    (lower, upper)
}

/// Signed error summary of an estimate against exact distances, averaged
/// over all ordered pairs (so the zero diagonal is part of the
/// denominator). Extremal pairs are the first in ascending `(x, y)` order.
#[derive(Clone, Debug, PartialEq)]
pub struct ErrorStats {
    pub max_err: i64,
    pub max_pair: (u32, u32),
    pub min_err: i64,
    pub min_pair: (u32, u32),
    pub avg_err: f64,
}

impl ErrorStats {
    fn empty() -> ErrorStats {
        ErrorStats {
            max_err: 0,
            max_pair: (0, 0),
            min_err: 0,
            min_pair: (0, 0),
            avg_err: 0.0,
        }
    }
}

struct StatsAccumulator {
    stats: ErrorStats,
    sum: i64,
    seen: bool,
}

impl StatsAccumulator {
    fn new() -> StatsAccumulator {
        StatsAccumulator {
            stats: ErrorStats::empty(),
            sum: 0,
            seen: false,
        }
    }

    fn record(&mut self, x: u32, y: u32, err: i64, weight: i64) {
        self.sum += err * weight;
        if !self.seen || err > self.stats.max_err {
            self.stats.max_err = err;
            self.stats.max_pair = (x, y);
        }
        if !self.seen || err < self.stats.min_err {
            self.stats.min_err = err;
            self.stats.min_pair = (x, y);
        }
        self.seen = true;
    }

    fn finish(mut self, ordered_pairs: u64) -> ErrorStats {
        if ordered_pairs > 0 {
            self.stats.avg_err = self.sum as f64 / ordered_pairs as f64;
        }
        self.stats
    }
}

/// Compares an estimate with the exact matrix over every unordered pair.
pub fn error_stats(est: &DistanceEstimate, m: &DistanceMatrix) -> ErrorStats {
    let n = est.vertex_count();
    assert_eq!(n, m.n());
    let mut acc = StatsAccumulator::new();
    for x in 0..n as u32 {
        for y in x + 1..n as u32 {
            let err = est.get(x, y) as i64 - m.get(x, y) as i64;
            acc.record(x, y, err, 2);
        }
    }
    acc.finish((n as u64) * (n as u64))
}

/// One tried threshold during the admissible search.
#[derive(Clone, Debug)]
pub struct DeltaRow {
    pub delta: u32,
    pub stats: ErrorStats,
    pub admissible: bool,
}

#[derive(Clone, Debug)]
pub struct AdmissibleSearch {
    /// Smallest `delta` with `max_err <= delta + 1`.
    pub delta: u32,
    /// Every row tried, ending with the admissible one.
    pub rows: Vec<DeltaRow>,
}

/// Scans `delta = 0, 1, 2, ...` until the exact-power estimate errs by at
/// most `delta + 1`; always terminates by `delta = diam`.
pub fn smallest_admissible_delta(
    g: &Graph,
    root: u32,
    m: &DistanceMatrix,
    budget: &Budget,
) -> Result<AdmissibleSearch> {
    let mut rows = Vec::new();
    let ecc_root = g.bfs(root)?.eccentricity();
    for delta in 0.. {
        assert!(delta <= 2 * ecc_root + 1, "admissible scan must terminate");
        let est = approximate_all_distances(g, delta, root, budget)?;
        let stats = error_stats(&est, m);
        let admissible = stats.max_err <= delta as i64 + 1;
        rows.push(DeltaRow {
            delta,
            stats: stats.clone(),
            admissible,
        });
        if admissible {
            return Ok(AdmissibleSearch { delta, rows });
        }
    }
    unreachable!()
}

/// Deterministic sample of `count` distinct vertices.
pub fn sample_rows(n: usize, count: usize, seed: u64) -> Vec<u32> {
    if count >= n {
        return (0..n as u32).collect();
    }
    let mut rng = crate::gen::rng_from_seed(seed);
    let mut rows: Vec<u32> = rand::seq::index::sample(&mut rng, n, count)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    rows.sort_unstable();
    rows
}

/// Error statistics of the exact-power estimate restricted to the given
/// rows, without materializing all pairs: each row is rebuilt from the
/// closed form using one exact BFS per ancestor of the row vertex.
/// Averages over `rows.len() * n` ordered pairs.
pub fn sampled_distance_stats(
    g: &Graph,
    lambda: u32,
    root: u32,
    rows: &[u32],
    budget: &Budget,
) -> Result<ErrorStats> {
    let l = g.bfs(root)?;
    let n = g.vertex_count();
    budget.check_edge_visits(
        "sampled distance rows",
        rows.len() * (l.eccentricity() as usize + 2),
        g.edge_count(),
    )?;
    let mut acc = StatsAccumulator::new();
    let mut queue: Vec<u32> = Vec::with_capacity(n);
    for &x in rows {
        g.check_vertex(x)?;
        if x == root {
            // Row of the root is exact by construction.
            for y in 0..n as u32 {
                if y != x {
                    acc.record(x.min(y), x.max(y), 0, 1);
                }
            }
            continue;
        }
        let q = l.height[x as usize] as usize;
        let mut anc = vec![0u32; q + 1];
        anc[q] = x;
        for k in (0..q).rev() {
            anc[k] = l.parent[anc[k + 1] as usize];
        }
        let mut anc_heights: Vec<Vec<u32>> = Vec::with_capacity(q + 1);
        for &a in &anc {
            let mut h = vec![u32::MAX; n];
            g.bfs_heights_into(a, &mut h, &mut queue);
            anc_heights.push(h);
        }
        let exact_row = &anc_heights[q];
        for y in 0..n as u32 {
            if y == x {
                continue;
            }
            let dhat = if y == root {
                l.height[x as usize]
            } else {
                let top = (q as u32).min(l.height[y as usize]);
                let mut yc = l.ancestor_at_level(y, top);
                let mut k = top;
                while k > 0 && anc_heights[k as usize][yc as usize] > lambda {
                    yc = l.parent[yc as usize];
                    k -= 1;
                }
                l.height[x as usize] + l.height[y as usize] - 2 * k + lambda
            };
            let err = dhat as i64 - exact_row[y as usize] as i64;
            acc.record(x.min(y), x.max(y), err, 1);
        }
    }
    Ok(acc.finish(rows.len() as u64 * n as u64))
}

/// [`smallest_admissible_delta`] judged on sampled rows only; the result is
/// a lower bound on the full search since unsampled pairs may err more.
pub fn sampled_admissible_delta(
    g: &Graph,
    root: u32,
    rows: &[u32],
    budget: &Budget,
) -> Result<AdmissibleSearch> {
    let mut out = Vec::new();
    let ecc_root = g.bfs(root)?.eccentricity();
    for delta in 0.. {
        assert!(delta <= 2 * ecc_root + 1, "admissible scan must terminate");
        let stats = sampled_distance_stats(g, delta, root, rows, budget)?;
        let admissible = stats.max_err <= delta as i64 + 1;
        out.push(DeltaRow {
            delta,
            stats: stats.clone(),
            admissible,
        });
        if admissible {
            return Ok(AdmissibleSearch { delta, rows: out });
        }
    }
    unreachable!()
}

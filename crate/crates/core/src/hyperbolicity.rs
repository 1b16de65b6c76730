//! Four-point condition scanning: exact half-integer arithmetic, Gromov
//! products, and the maximum four-point defect over all vertex quadruples.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use rand::Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::gen::rng_from_seed;
use crate::graph::Graph;
use crate::oracle::{Budget, DistanceMatrix};

/// An exact half-integer, stored as its doubled value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub const fn from_doubled(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    pub fn doubled(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The exact integer value, if there is one.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.twice - rhs.twice)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(self.twice * rhs)
    }
}

/// Integers print bare ("2"); proper halves print one fractional digit
/// ("1.5").
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            let sign = if self.twice < 0 { "-" } else { "" };
            write!(f, "{sign}{}.5", self.twice.abs() / 2)
        }
    }
}

/// The Gromov product `(y | z)_w = (d(y,w) + d(z,w) - d(y,z)) / 2`.
pub fn gromov_product(m: &DistanceMatrix, y: u32, z: u32, w: u32) -> HalfInt {
    let doubled = m.get(y, w) as i64 + m.get(z, w) as i64 - m.get(y, z) as i64;
    debug_assert!(doubled >= 0, "triangle inequality violated");
    HalfInt::from_doubled(doubled)
}

/// Four-point defect of one quadruple: half the gap between the largest and
/// second-largest of the three pairing sums.
pub fn evaluate_quadruple(m: &DistanceMatrix, q: [u32; 4]) -> HalfInt {
    let [w, v, x, y] = q;
    let s1 = m.get(w, v) + m.get(x, y);
    let s2 = m.get(w, x) + m.get(v, y);
    let s3 = m.get(w, y) + m.get(v, x);
    let hi = s1.max(s2).max(s3);
    let lo = s1.min(s2).min(s3);
    let mid = s1 + s2 + s3 - hi - lo;
    HalfInt::from_doubled((hi - mid) as i64)
}

/// Result of a four-point scan.
#[derive(Clone, Debug)]
pub struct HyperbolicityReport {
    pub delta4: HalfInt,
    /// Lexicographically smallest quadruple attaining `delta4`
    /// (all-zero when the graph has fewer than four vertices).
    pub witness: [u32; 4],
    /// `4 * delta4`: an upper bound on how far geodesic triangle sides can
    /// drift apart, usable wherever a thinness value is required.
    pub thinness_bound: HalfInt,
    /// False when the value is a sampled lower bound.
    pub exact: bool,
}

impl HyperbolicityReport {
    /// The thinness bound as a plain integer (`4 * delta4` is always one).
    pub fn thinness(&self) -> u32 {
        self.thinness_bound
            .as_integer()
            .expect("four times a half-integer is an integer") as u32
    }
}

fn report(delta4: HalfInt, witness: [u32; 4], exact: bool) -> HyperbolicityReport {
    HyperbolicityReport {
        delta4,
        witness,
        thinness_bound: delta4 * 4,
        exact,
    }
}

/// Merge two scan outcomes, preferring the larger defect and on ties the
/// lexicographically smaller witness.
fn better(a: (HalfInt, [u32; 4]), b: (HalfInt, [u32; 4])) -> (HalfInt, [u32; 4]) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            if a.1 <= b.1 {
                a
            } else {
                b
            }
        }
    }
}

/// Exact maximum four-point defect over all vertex quadruples.
///
/// Brute force over `n^4 / 24` ordered quadruples; refuses beyond the
/// quadruple budget (default `n <= 120`) unless forced. Graphs with fewer
/// than four vertices report zero.
pub fn four_point_delta(m: &DistanceMatrix, budget: &Budget) -> Result<HyperbolicityReport> {
    let n = m.n();
    budget.check_quadruples(n)?;
    if n < 4 {
        return Ok(report(HalfInt::ZERO, [0; 4], true));
    }
    let (delta, witness) = (0..n as u32 - 3)
        .into_par_iter()
        .map(|i| {
            let mut best = (HalfInt::ZERO, [i, i + 1, i + 2, i + 3]);
            for j in i + 1..n as u32 - 2 {
                for k in j + 1..n as u32 - 1 {
                    let dij = m.get(i, j);
                    let dik = m.get(i, k);
                    let djk = m.get(j, k);
                    let row_i = m.row(i);
                    let row_j = m.row(j);
                    let row_k = m.row(k);
                    for l in k + 1..n as u32 {
                        let dil = row_i[l as usize] as u32;
                        let djl = row_j[l as usize] as u32;
                        let dkl = row_k[l as usize] as u32;
                        let s1 = dij + dkl;
                        let s2 = dik + djl;
                        let s3 = dil + djk;
                        let hi = s1.max(s2).max(s3);
                        let lo = s1.min(s2).min(s3);
                        let gap = (hi - (s1 + s2 + s3 - hi - lo)) as i64;
                        if gap > best.0.doubled() {
                            best = (HalfInt::from_doubled(gap), [i, j, k, l]);
                        }
                    }
                }
            }
            best
        })
        .reduce(|| (HalfInt::ZERO, [u32::MAX; 4]), better);
    let witness = if witness == [u32::MAX; 4] {
        [0, 1, 2, 3]
    } else {
        witness
    };
    Ok(report(delta, witness, true))
}

/// Sampled lower bound on the four-point defect: evaluates `samples` seeded
/// random quadruples and keeps the maximum.
pub fn four_point_delta_sampled(
    m: &DistanceMatrix,
    samples: u64,
    seed: u64,
) -> HyperbolicityReport {
    let n = m.n();
    if n < 4 {
        return report(HalfInt::ZERO, [0; 4], false);
    }
    let mut rng = rng_from_seed(seed);
    let mut best = (HalfInt::ZERO, [0u32, 1, 2, 3]);
    for _ in 0..samples {
        let mut q = [0u32; 4];
        let mut filled = 0;
        while filled < 4 {
            let v = rng.gen_range(0..n as u32);
            if !q[..filled].contains(&v) {
                q[filled] = v;
                filled += 1;
            }
        }
        q.sort_unstable();
        let d = evaluate_quadruple(m, q);
        best = better(best, (d, q));
    }
    report(best.0, best.1, false)
}

/// Lower bound on the four-point defect from a seeded vertex subset.
///
/// One BFS per chosen vertex yields exact distances within the subset, and
/// every quadruple inside it is evaluated. Unlike the matrix-based scans
/// this never materializes all-pairs distances, so it works on graphs far
/// beyond the quadratic storage budget. The result is exact when the subset
/// covers the whole graph.
pub fn four_point_delta_seeded(
    g: &Graph,
    subset_size: usize,
    seed: u64,
    budget: &Budget,
) -> Result<HyperbolicityReport> {
    let n = g.vertex_count();
    let k = subset_size.min(n);
    budget.check_edge_visits("seeded four-point scan", k, g.edge_count())?;
    let exhaustive = k == n;
    if k < 4 {
        return Ok(report(HalfInt::ZERO, [0; 4], exhaustive));
    }
    let mut rng = rng_from_seed(seed);
    let mut verts: Vec<u32> = rand::seq::index::sample(&mut rng, n, k)
        .into_iter()
        .map(|i| i as u32)
        .collect();
    verts.sort_unstable();

    let rows: Vec<Vec<u32>> = verts
        .iter()
        .map(|&v| g.bfs(v).map(|l| l.height))
        .collect::<Result<_>>()?;
    let dist = |a: usize, b: usize| rows[a][verts[b] as usize];

    let mut best = (HalfInt::ZERO, [verts[0], verts[1], verts[2], verts[3]]);
    for a in 0..k - 3 {
        for b in a + 1..k - 2 {
            for c in b + 1..k - 1 {
                for d in c + 1..k {
                    let s1 = dist(a, b) + dist(c, d);
                    let s2 = dist(a, c) + dist(b, d);
                    let s3 = dist(a, d) + dist(b, c);
                    let hi = s1.max(s2).max(s3);
                    let lo = s1.min(s2).min(s3);
                    let gap = (hi - (s1 + s2 + s3 - hi - lo)) as i64;
                    if gap > best.0.doubled() {
                        best = (
                            HalfInt::from_doubled(gap),
                            [verts[a], verts[b], verts[c], verts[d]],
                        );
                    }
                }
            }
        }
    }
    Ok(report(best.0, best.1, exhaustive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::distance_matrix;

    fn matrix(g: &crate::graph::Graph) -> DistanceMatrix {
        distance_matrix(g, &Budget::default()).unwrap()
    }

    #[test]
    fn half_int_arithmetic_and_display() {
        let a = HalfInt::from_doubled(3);
        assert_eq!(a.to_string(), "1.5");
        assert_eq!((a + a).to_string(), "3");
        assert_eq!((a - HalfInt::from_int(2)).to_string(), "-0.5");
        assert_eq!((a * 4).as_integer(), Some(6));
        assert_eq!(HalfInt::from_int(5).to_string(), "5");
        assert!(!a.is_integer());
        assert_eq!(a.to_f64(), 1.5);
        assert!(HalfInt::from_int(1) > a - a);
    }

    #[test]
    fn gromov_product_examples() {
        let m = matrix(&gen::cycle(6));
        // (2 | 4)_0 = (2 + 2 - 2) / 2 = 1.
        assert_eq!(gromov_product(&m, 2, 4, 0), HalfInt::from_int(1));
        // Symmetric in the first two arguments.
        assert_eq!(gromov_product(&m, 4, 2, 0), HalfInt::from_int(1));
        // (y | y)_w = d(y, w).
        assert_eq!(gromov_product(&m, 3, 3, 0), HalfInt::from_int(3));
    }

    #[test]
    fn trees_have_zero_defect() {
        for g in [gen::path(9), gen::star(6), gen::random_tree(25, 3)] {
            let r = four_point_delta(&matrix(&g), &Budget::default()).unwrap();
            assert_eq!(r.delta4, HalfInt::ZERO);
            assert_eq!(r.thinness_bound, HalfInt::ZERO);
            assert!(r.exact);
        }
    }

    #[test]
    fn small_cycles() {
        let r4 = four_point_delta(&matrix(&gen::cycle(4)), &Budget::default()).unwrap();
        assert_eq!(r4.delta4, HalfInt::from_int(1));
        assert_eq!(r4.witness, [0, 1, 2, 3]);

        let r5 = four_point_delta(&matrix(&gen::cycle(5)), &Budget::default()).unwrap();
        assert_eq!(r5.delta4, HalfInt::from_doubled(1));
        assert_eq!(r5.delta4.to_string(), "0.5");

        let r6 = four_point_delta(&matrix(&gen::cycle(6)), &Budget::default()).unwrap();
        assert_eq!(r6.delta4, HalfInt::from_int(1));
        assert_eq!(r6.thinness_bound, HalfInt::from_int(4));
    }

    #[test]
    fn block_chains_stay_at_most_one() {
        for sizes in [vec![3, 4, 5], vec![2, 2, 2, 2], vec![6, 3]] {
            let g = gen::block_chain(&sizes);
            let r = four_point_delta(&matrix(&g), &Budget::default()).unwrap();
            assert!(r.delta4 <= HalfInt::from_int(1), "sizes {sizes:?}");
        }
    }

    #[test]
    fn witness_reproduces_delta_and_is_lex_smallest() {
        let g = gen::random_connected(24, 0.2, 9, 500).unwrap();
        let m = matrix(&g);
        let r = four_point_delta(&m, &Budget::default()).unwrap();
        assert_eq!(evaluate_quadruple(&m, r.witness), r.delta4);
        // No earlier quadruple attains the same defect.
        let n = m.n() as u32;
        'outer: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        let q = [i, j, k, l];
                        if q >= r.witness {
                            break 'outer;
                        }
                        assert!(evaluate_quadruple(&m, q) < r.delta4);
                    }
                }
            }
        }
    }

    #[test]
    fn sampled_bound_never_exceeds_exact() {
        let g = gen::random_connected(30, 0.15, 21, 500).unwrap();
        let m = matrix(&g);
        let exact = four_point_delta(&m, &Budget::default()).unwrap();
        let sampled = four_point_delta_sampled(&m, 2000, 7);
        assert!(!sampled.exact);
        assert!(sampled.delta4 <= exact.delta4);
        assert_eq!(evaluate_quadruple(&m, sampled.witness), sampled.delta4);
    }

    #[test]
    fn quadruple_budget_refuses_large_graphs() {
        let g = gen::random_connected(30, 0.2, 2, 500).unwrap();
        let m = matrix(&g);
        let tiny = Budget {
            max_quadruple_n: 10,
            ..Budget::default()
        };
        assert!(four_point_delta(&m, &tiny).unwrap_err().is_budget());
    }

    #[test]
    fn tiny_graphs_report_zero() {
        let g = gen::path(3);
        let r = four_point_delta(&matrix(&g), &Budget::default()).unwrap();
        assert_eq!(r.delta4, HalfInt::ZERO);
        assert_eq!(r.witness, [0; 4]);
    }

    #[test]
    fn seeded_bound_never_exceeds_exact() {
        let g = gen::random_connected(30, 0.15, 21, 500).unwrap();
        let m = matrix(&g);
        let exact = four_point_delta(&m, &Budget::default()).unwrap();
        let seeded = four_point_delta_seeded(&g, 12, 5, &Budget::default()).unwrap();
        assert!(!seeded.exact);
        assert!(seeded.delta4 <= exact.delta4);
        assert_eq!(evaluate_quadruple(&m, seeded.witness), seeded.delta4);
    }

    #[test]
    fn seeded_scan_of_everything_is_the_exact_scan() {
        let g = gen::random_connected(18, 0.25, 4, 500).unwrap();
        let exact = four_point_delta(&matrix(&g), &Budget::default()).unwrap();
        let seeded = four_point_delta_seeded(&g, 18, 11, &Budget::default()).unwrap();
        assert!(seeded.exact);
        assert_eq!(seeded.delta4, exact.delta4);
        assert_eq!(seeded.witness, exact.witness);
    }

    #[test]
    fn seeded_scan_on_trees_is_zero() {
        let g = gen::random_tree(200, 8);
        let r = four_point_delta_seeded(&g, 30, 3, &Budget::default()).unwrap();
        assert_eq!(r.delta4, HalfInt::ZERO);
    }
}

//! Randomized property suites run with a fixed seed. Shared by the core
//! property tests and the workspace acceptance run.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use steiner_core::graphs::{tree_from_prufer, Graph, Permutation};
use steiner_core::hypermatrix::{build_steiner_hypermatrix, SymmetricHypermatrix};
use steiner_core::resultant::hyperdet;
use steiner_core::spectra::{charpoly_allones, nqz_spectral_radius};

pub const CASES: u32 = 1000;
pub const SEED: u64 = 0x5eed_2026;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    })
}

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases).run(&strategy, test).map_err(|e| e.to_string())
}

/// Random tree on `n` vertices from a Prüfer sequence.
pub fn tree(n: usize) -> impl Strategy<Value = Graph> {
    proptest::collection::vec(1..=n, n.saturating_sub(2)).prop_map(move |seq| match n {
        1 => Graph::new(1, []).expect("single vertex"),
        _ => tree_from_prufer(&seq).expect("valid sequence"),
    })
}

/// Random connected graph: a random tree plus random extra edges.
pub fn connected_graph(n: usize) -> impl Strategy<Value = Graph> {
    let pairs = n * (n.saturating_sub(1)) / 2;
    (tree(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(move |(t, extra)| {
        let all = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        let edges = t
            .edges()
            .iter()
            .copied()
            .chain(all.zip(extra).filter(|(_, keep)| *keep).map(|(e, _)| e));
        let mut edges: Vec<_> = edges.collect();
        edges.sort();
        edges.dedup();
        Graph::new(n, edges).expect("valid graph")
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).expect("a permutation"))
}

fn mix(mut h: u64) -> u64 {
    h ^= h >> 33;
    h = h.wrapping_mul(0xff51afd7ed558ccd);
    h ^= h >> 33;
    h
}

/// Symmetric hypermatrix with pseudo-random entries in `lo..=hi`.
pub fn random_hypermatrix(order: usize, dim: usize, seed: u64, lo: i64, hi: i64) -> SymmetricHypermatrix {
    SymmetricHypermatrix::from_fn(order, dim, |t| {
        let h = t.iter().fold(seed, |acc, &i| mix(acc ^ i as u64).wrapping_add(i as u64));
        lo + (h % (hi - lo + 1) as u64) as i64
    })
    .expect("valid shape")
}

/// `A x^(k-1)` by the literal sum over all ordered index tuples.
pub fn naive_contract(a: &SymmetricHypermatrix, x: &[i64]) -> Vec<i64> {
    let (n, k) = (a.dim(), a.order());
    (1..=n)
        .map(|i| {
            let mut total = 0i64;
            let mut idx = vec![1usize; k - 1];
            loop {
                let mut full = vec![i];
                full.extend(&idx);
                let prod: i64 = idx.iter().map(|&j| x[j - 1]).product();
                total += a.entry(&full).expect("in range") * prod;
                let Some(pos) = idx.iter().rposition(|&j| j < n) else {
                    break;
                };
                idx[pos] += 1;
                for j in &mut idx[pos + 1..] {
                    *j = 1;
                }
            }
            total
        })
        .collect()
}

/// Planned contraction equals naive summation, `n <= 3`, `k <= 4`.
pub fn contraction_matches_naive(cases: u32) -> Result<(), String> {
    let strategy = (1usize..=3, 2usize..=4, any::<u64>()).prop_flat_map(|(n, k, seed)| {
        (Just(n), Just(k), Just(seed), proptest::collection::vec(-5i64..=5, n))
    });
    run(cases, strategy, |(n, k, seed, x)| {
        let a = random_hypermatrix(k, n, seed, -9, 9);
        prop_assert_eq!(a.contract(&x).unwrap(), naive_contract(&a, &x));
        Ok(())
    })
}

/// Shapes where a hyperdet costs milliseconds.
fn cheap_shape() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![
        (Just(2usize), 2usize..=9),
        (Just(3usize), 2usize..=4),
        (Just(4usize), 2usize..=3),
        (5usize..=6, Just(2usize)),
    ]
}

/// `det D_k(G)` is unchanged by relabeling the vertices of `G`.
pub fn hyperdet_relabel_invariant(cases: u32) -> Result<(), String> {
    let strategy = cheap_shape()
        .prop_flat_map(|(n, k)| (Just(k), connected_graph(n), permutation(n)));
    run(cases, strategy, |(k, g, perm)| {
        let a = build_steiner_hypermatrix(&g, k).unwrap();
        let b = build_steiner_hypermatrix(&g.relabel(&perm).unwrap(), k).unwrap();
        prop_assert_eq!(hyperdet(&a, 0).unwrap().value, hyperdet(&b, 0).unwrap().value);
        Ok(())
    })
}

/// Aggregated multiplicities of `charpoly_allones(n, k)` are positive
/// integers summing to `n (k-1)^(n-1)`, `n <= 4`, `k <= 6`.
pub fn allones_multiplicities(cases: u32) -> Result<(), String> {
    run(cases, (2usize..=4, 2usize..=6), |(n, k)| {
        let s = charpoly_allones(n, k).unwrap();
        let expect = BigInt::from(n) * BigInt::from(k - 1).pow(n as u32 - 1);
        prop_assert_eq!(s.total_multiplicity(), BigRational::from_integer(expect));
        for p in s.pairs() {
            prop_assert!(p.multiplicity.is_integer(), "n = {}, k = {}, {:?}", n, k, p);
            prop_assert!(p.multiplicity > BigRational::from_integer(0.into()));
        }
        Ok(())
    })
}

/// The NQZ enclosure never widens and always brackets its estimate.
pub fn nqz_enclosure_monotone(cases: u32) -> Result<(), String> {
    let graphs = (2usize..=5, 2usize..=4)
        .prop_flat_map(|(n, k)| (Just(k), connected_graph(n)))
        .prop_map(|(k, g)| build_steiner_hypermatrix(&g, k).unwrap());
    let positive = (2usize..=3, 2usize..=4, any::<u64>())
        .prop_map(|(n, k, seed)| random_hypermatrix(k, n, seed, 1, 6));
    run(cases, prop_oneof![graphs, positive], |a| {
        let r = nqz_spectral_radius(&a, 1e-9).unwrap();
        for w in r.trace.windows(2) {
            let (before, after) = (w[0].1 - w[0].0, w[1].1 - w[1].0);
            prop_assert!(after <= before + 1e-12 * (1.0 + w[1].1), "{:?}", r.trace);
        }
        prop_assert!(r.lo <= r.radius && r.radius <= r.hi);
        Ok(())
    })
}

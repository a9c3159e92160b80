//! Tree sweeps with conjecture verdicts, the Graham–Pollak regression,
//! extremal spectral-radius rankings and the JSON-lines result cache.

use std::collections::{BTreeSet, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::det_exact;
use crate::graphs::{
    canonical_form, distance_matrix, enumerate_connected_graphs, prufer_sequences,
    tree_from_prufer, Graph, Permutation,
};
use crate::hypermatrix::build_steiner_hypermatrix;
use crate::resultant::{hyperdet, hyperdet_supported};
use crate::spectra::nqz_spectral_radius;
use crate::wendt::{theorem1_vanishes, wendt, VanishingVerdict};

/// Relabeling spot checks per sweep.
pub const RELABEL_CHECKS: usize = 10;
/// Largest tree size for [`extremal_radius`] over trees.
pub const EXTREMAL_MAX_TREES: usize = 7;
/// Largest graph size for [`extremal_radius`] over connected graphs.
pub const EXTREMAL_MAX_GRAPHS: usize = 5;
/// Largest `n` for [`graham_pollak_check`].
pub const GRAHAM_POLLAK_MAX: usize = 9;

/// Shared settings for harness runs.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig<'a> {
    pub seed: u64,
    /// Worker threads; `None` uses one per core.
    pub jobs: Option<usize>,
    /// NQZ stopping width.
    pub tol: f64,
    pub cache: Option<&'a Cache>,
    pub relabel_checks: usize,
}

impl Default for RunConfig<'_> {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            jobs: None,
            tol: 1e-8,
            cache: None,
            relabel_checks: RELABEL_CHECKS,
        }
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
struct CacheKey {
    canonical: String,
    k: usize,
    quantity: String,
}

#[derive(Serialize, Deserialize)]
struct CacheLine {
    #[serde(flatten)]
    key: CacheKey,
    value: serde_json::Value,
}

/// Append-only JSON-lines store keyed by (canonical form, k, quantity).
#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    inner: Mutex<(HashMap<CacheKey, serde_json::Value>, File)>,
}

impl Cache {
    /// Opens or creates the file and loads every line.
    pub fn open(path: impl AsRef<Path>) -> Result<Cache> {
        let path = path.as_ref().to_path_buf();
        let mut map = HashMap::new();
        if path.exists() {
            for (i, line) in BufReader::new(File::open(&path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let entry: CacheLine = serde_json::from_str(&line).map_err(|e| Error::Parse {
                    line: i + 1,
                    msg: format!("cache entry: {e}"),
                })?;
                map.insert(entry.key, entry.value);
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Cache {
            path,
            inner: Mutex::new((map, file)),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.inner.lock().expect("cache lock").0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, canonical: &str, k: usize, quantity: &str) -> Option<serde_json::Value> {
        let key = CacheKey {
            canonical: canonical.into(),
            k,
            quantity: quantity.into(),
        };
        self.inner.lock().expect("cache lock").0.get(&key).cloned()
    }

    pub fn put(&self, canonical: &str, k: usize, quantity: &str, value: serde_json::Value) -> Result<()> {
        let line = CacheLine {
            key: CacheKey {
                canonical: canonical.into(),
                k,
                quantity: quantity.into(),
            },
            value,
        };
        let text = serde_json::to_string(&line)?;
        let mut guard = self.inner.lock().expect("cache lock");
        let (map, file) = &mut *guard;
        if map.contains_key(&line.key) {
            return Ok(());
        }
        writeln!(file, "{text}")?;
        file.flush()?;
        map.insert(line.key, line.value);
        Ok(())
    }
}

/// NQZ estimate with its certified enclosure.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub value: f64,
    pub lo: f64,
    pub hi: f64,
}

fn cached<T: Serialize + serde::de::DeserializeOwned>(
    cfg: &RunConfig,
    g: &Graph,
    k: usize,
    quantity: &str,
    compute: impl FnOnce() -> Result<T>,
) -> Result<T> {
    let Some(cache) = cfg.cache else {
        return compute();
    };
    let canon = canonical_form(g)?;
    if let Some(v) = cache.get(&canon, k, quantity) {
        if let Ok(t) = serde_json::from_value(v) {
            return Ok(t);
        }
    }
    let value = compute()?;
    cache.put(&canon, k, quantity, serde_json::to_value(&value)?)?;
    Ok(value)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    s.parse()
        .map_err(|_| Error::InvalidArgument(format!("not a rational: {s}")))
}

/// Hyperdeterminant of `D_k(g)`, through the cache when one is configured.
pub fn graph_hyperdet(g: &Graph, k: usize, cfg: &RunConfig) -> Result<BigRational> {
    let text: String = cached(cfg, g, k, "det", || {
        Ok(hyperdet(&build_steiner_hypermatrix(g, k)?, cfg.seed)?.value.to_string())
    })?;
    parse_rational(&text)
}

/// NQZ spectral radius of `D_k(g)`, through the cache when one is configured.
pub fn graph_radius(g: &Graph, k: usize, cfg: &RunConfig) -> Result<Enclosure> {
    let quantity = format!("radius:tol={:e}", cfg.tol);
    cached(cfg, g, k, &quantity, || {
        let r = nqz_spectral_radius(&build_steiner_hypermatrix(g, k)?, cfg.tol)?;
        Ok(Enclosure {
            value: r.radius,
            lo: r.lo,
            hi: r.hi,
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Labeled,
    Unlabeled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Trees,
    ConnectedGraphs,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Compute {
    pub det: bool,
    pub radius: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TreeRecord {
    pub prufer: Vec<usize>,
    pub canonical: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub det: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral_radius: Option<Enclosure>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Question2 {
    pub verdict: Verdict,
    pub top: Vec<usize>,
    /// Canonical forms, other than the top one, whose enclosures reach the
    /// top lower bound.
    pub ties: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Verdicts {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture1: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture2: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub question2: Option<Question2>,
    /// Computed dets vanish exactly when the classifier says so.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem1: Option<Verdict>,
    /// `n = 2` only: the det equals `(-1)^(k-1) W_(k-1)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wendt_identity: Option<Verdict>,
}

/// A counterexample serialized for inspection.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub claim: String,
    pub detail: String,
    /// Graphs in the edge-list file format.
    pub graphs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub seed: u64,
    pub classifier: VanishingVerdict,
    pub records: Vec<TreeRecord>,
    pub verdicts: Verdicts,
    pub relabel_checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Trees on `n` vertices in Prüfer order, deduplicated by canonical form
/// in unlabeled mode.
fn trees(n: usize, mode: Mode) -> Result<Vec<(Vec<usize>, Graph, String)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for seq in prufer_sequences(n)? {
        let g = tree_from_prufer(&seq)?;
        let canon = canonical_form(&g)?;
        if mode == Mode::Unlabeled && !seen.insert(canon.clone()) {
            continue;
        }
        out.push((seq, g, canon));
    }
    Ok(out)
}

fn sign_matches(det: &BigRational, n: usize) -> bool {
    det.is_positive() == (n % 2 == 1)
}

/// Sweeps every tree on `n` vertices, computing the requested quantities of
/// `D_k(T)` and the verdicts they support.
pub fn sweep_trees(n: usize, k: usize, compute: Compute, mode: Mode, cfg: &RunConfig) -> Result<SweepReport> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    if compute.det {
        hyperdet_supported(n, k)?;
    }
    let trees = trees(n, mode)?;
    let computed: Vec<(Option<BigRational>, Option<Enclosure>)> = in_pool(cfg.jobs, || {
        trees
            .par_iter()
            .map(|(_, g, _)| -> Result<_> {
                let det = compute.det.then(|| graph_hyperdet(g, k, cfg)).transpose()?;
                let radius = compute.radius.then(|| graph_radius(g, k, cfg)).transpose()?;
                Ok((det, radius))
            })
            .collect::<Result<Vec<_>>>()
    })??;

    let graph_text = |i: usize| trees[i].1.to_string();
    let mut verdicts = Verdicts::default();
    let mut witness = None;
    let classifier = theorem1_vanishes(k, n);
    let mut relabel_checks = 0;

    if compute.det {
        let dets: Vec<&BigRational> = computed.iter().map(|c| c.0.as_ref().expect("det")).collect();
        let first_diff = dets.iter().position(|d| *d != dets[0]);
        verdicts.conjecture1 = Some(if first_diff.is_some() { Verdict::Fail } else { Verdict::Pass });
        let nonzero: Vec<usize> = (0..dets.len()).filter(|&i| !dets[i].is_zero()).collect();
        let wrong_sign = nonzero.iter().copied().find(|&i| !sign_matches(dets[i], n));
        verdicts.conjecture2 = Some(match (nonzero.is_empty(), wrong_sign) {
            (true, _) => Verdict::NotApplicable,
            (false, None) => Verdict::Pass,
            (false, Some(_)) => Verdict::Fail,
        });
        let disagrees = (0..dets.len()).find(|&i| dets[i].is_zero() != classifier.vanishes);
        verdicts.theorem1 = Some(if disagrees.is_some() { Verdict::Fail } else { Verdict::Pass });
        if n == 2 {
            let sign = if k.is_multiple_of(2) { -1 } else { 1 };
            let expect = BigRational::from_integer(wendt(k - 1)? * sign);
            verdicts.wendt_identity = Some(if *dets[0] == expect { Verdict::Pass } else { Verdict::Fail });
        }

        if let Some(i) = disagrees {
            witness = Some(Witness {
                claim: "vanishing classification".into(),
                detail: format!(
                    "classifier says vanishes = {} ({:?}) but det = {}",
                    classifier.vanishes, classifier.branch, dets[i]
                ),
                graphs: vec![graph_text(i)],
            });
        } else if verdicts.wendt_identity == Some(Verdict::Fail) {
            witness = Some(Witness {
                claim: "Wendt identity".into(),
                detail: format!("det = {}", dets[0]),
                graphs: vec![graph_text(0)],
            });
        } else if let Some(i) = first_diff {
            witness = Some(Witness {
                claim: "conjecture 1: det depends only on n and k".into(),
                detail: format!("det {} != det {}", dets[0], dets[i]),
                graphs: vec![graph_text(0), graph_text(i)],
            });
        } else if let Some(i) = wrong_sign {
            witness = Some(Witness {
                claim: format!("conjecture 2: nonzero det has sign (-1)^(n-1) = {}", if n % 2 == 1 { "+" } else { "-" }),
                detail: format!("det = {}", dets[i]),
                graphs: vec![graph_text(i)],
            });
        }

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 0..cfg.relabel_checks {
            let i = rng.gen_range(0..trees.len());
            let perm = Permutation::random(n, &mut rng);
            let relabeled = trees[i].1.relabel(&perm)?;
            let det = hyperdet(&build_steiner_hypermatrix(&relabeled, k)?, cfg.seed)?.value;
            if det != *dets[i] {
                return Err(Error::InvariantViolation(format!(
                    "relabeling changed the hyperdeterminant of tree {:?}: {} vs {}",
                    trees[i].0, dets[i], det
                )));
            }
            relabel_checks += 1;
        }
    }

    if compute.radius {
        let encl: Vec<Enclosure> = computed.iter().map(|c| c.1.expect("radius")).collect();
        let top = (0..encl.len())
            .max_by(|&a, &b| encl[a].value.total_cmp(&encl[b].value).then(b.cmp(&a)))
            .expect("at least one tree");
        let tied: Vec<usize> = (0..encl.len()).filter(|&i| encl[i].hi >= encl[top].lo).collect();
        let path_tied = tied.iter().any(|&i| trees[i].1.is_path());
        let ties: BTreeSet<String> = tied
            .iter()
            .map(|&i| trees[i].2.clone())
            .filter(|c| *c != trees[top].2)
            .collect();
        let verdict = if path_tied { Verdict::Pass } else { Verdict::Fail };
        if verdict == Verdict::Fail && witness.is_none() {
            let path = (0..trees.len()).find(|&i| trees[i].1.is_path()).expect("a path");
            witness = Some(Witness {
                claim: "question 2: a path maximizes the spectral radius".into(),
                detail: format!(
                    "top radius in [{}, {}], path radius in [{}, {}]",
                    encl[top].lo, encl[top].hi, encl[path].lo, encl[path].hi
                ),
                graphs: vec![graph_text(top), graph_text(path)],
            });
        }
        verdicts.question2 = Some(Question2 {
            verdict,
            top: trees[top].0.clone(),
            ties: ties.into_iter().collect(),
        });
    }

    let records = trees
        .iter()
        .zip(computed)
        .map(|((seq, _, canon), (det, radius))| TreeRecord {
            prufer: seq.clone(),
            canonical: canon.clone(),
            det: det.map(|d| d.to_string()),
            spectral_radius: radius,
        })
        .collect();
    Ok(SweepReport {
        n,
        k,
        mode,
        seed: cfg.seed,
        classifier,
        records,
        verdicts,
        relabel_checks,
        witness,
    })
}

/// `(1 - n) (-2)^(n-2)`.
pub fn graham_pollak_value(n: usize) -> BigInt {
    (BigInt::one() - n) * Pow::pow(BigInt::from(-2), n.saturating_sub(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrahamPollakRow {
    pub n: usize,
    pub trees: usize,
    pub expected: String,
    pub pass: bool,
    /// Prüfer sequences of failing trees (at most ten).
    pub failures: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrahamPollakReport {
    pub rows: Vec<GrahamPollakRow>,
    pub pass: bool,
}

/// Distance-matrix determinant of every labeled tree on `2..=n_max`
/// vertices against `(1 - n) (-2)^(n-2)`.
pub fn graham_pollak_check(n_max: usize, cfg: &RunConfig) -> Result<GrahamPollakReport> {
    if n_max < 2 {
        return Err(Error::TooFewVertices { n: n_max, min: 2 });
    }
    if n_max > GRAHAM_POLLAK_MAX {
        return Err(Error::SizeCap(format!(
            "Graham-Pollak check supports n <= {GRAHAM_POLLAK_MAX}, got {n_max}"
        )));
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let expected = graham_pollak_value(n);
        let seqs: Vec<Vec<usize>> = prufer_sequences(n)?.collect();
        let ok: Vec<bool> = in_pool(cfg.jobs, || {
            seqs.par_iter()
                .map(|s| Ok(det_exact(&distance_matrix(&tree_from_prufer(s)?)?)? == expected))
                .collect::<Result<Vec<bool>>>()
        })??;
        let failures: Vec<Vec<usize>> = seqs
            .iter()
            .zip(&ok)
            .filter(|(_, &p)| !p)
            .map(|(s, _)| s.clone())
            .take(10)
            .collect();
        rows.push(GrahamPollakRow {
            n,
            trees: seqs.len(),
            expected: expected.to_string(),
            pass: failures.is_empty(),
            failures,
        });
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(GrahamPollakReport { rows, pass })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankEntry {
    pub canonical: String,
    pub edges: Vec<(usize, usize)>,
    pub is_path: bool,
    pub degree_sequence: Vec<usize>,
    pub spectral_radius: Enclosure,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub scope: Scope,
    /// Descending by radius.
    pub ranking: Vec<RankEntry>,
    pub top_is_path: bool,
    /// Canonical forms, other than the top one, whose enclosures reach the
    /// top lower bound.
    pub ties: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ExtremalReport {
    /// `degree_sequence,radius` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("canonical,degree_sequence,radius,lo,hi\n");
        for e in &self.ranking {
            let degrees: Vec<String> = e.degree_sequence.iter().map(|d| d.to_string()).collect();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                e.canonical,
                degrees.join(" "),
                e.spectral_radius.value,
                e.spectral_radius.lo,
                e.spectral_radius.hi
            ));
        }
        out
    }
}

/// Ranks graphs on `n` vertices by the NQZ spectral radius of `D_k`, one
/// per isomorphism class. Reports evidence only.
pub fn extremal_radius(n: usize, k: usize, scope: Scope, cfg: &RunConfig) -> Result<ExtremalReport> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if k < 2 {
        return Err(Error::InvalidOrder(k));
    }
    let graphs: Vec<Graph> = match scope {
        Scope::Trees if n <= EXTREMAL_MAX_TREES => {
            trees(n, Mode::Unlabeled)?.into_iter().map(|(_, g, _)| g).collect()
        }
        Scope::ConnectedGraphs if n <= EXTREMAL_MAX_GRAPHS => enumerate_connected_graphs(n)?,
        _ => {
            let max = if scope == Scope::Trees { EXTREMAL_MAX_TREES } else { EXTREMAL_MAX_GRAPHS };
            return Err(Error::SizeCap(format!("extremal ranking over {scope:?} supports n <= {max}, got {n}")));
        }
    };
    let mut ranking: Vec<RankEntry> = in_pool(cfg.jobs, || {
        graphs
            .par_iter()
            .map(|g| {
                Ok(RankEntry {
                    canonical: canonical_form(g)?,
                    edges: g.edges().to_vec(),
                    is_path: g.is_path(),
                    degree_sequence: g.degree_sequence(),
                    spectral_radius: graph_radius(g, k, cfg)?,
                })
            })
            .collect::<Result<Vec<_>>>()
    })??;
    ranking.sort_by(|a, b| {
        b.spectral_radius
            .value
            .total_cmp(&a.spectral_radius.value)
            .then_with(|| a.canonical.cmp(&b.canonical))
    });
    let top = &ranking[0];
    let tied: Vec<&RankEntry> = ranking
        .iter()
        .filter(|e| e.spectral_radius.hi >= top.spectral_radius.lo)
        .collect();
    let ties = tied.iter().skip(1).map(|e| e.canonical.clone()).collect();
    let witness = if tied.iter().any(|e| e.is_path) {
        None
    } else {
        let path = ranking.iter().find(|e| e.is_path);
        let mut graphs = vec![edge_text(n, &top.edges)?];
        if let Some(p) = path {
            graphs.push(edge_text(n, &p.edges)?);
        }
        Some(Witness {
            claim: "question 2: a path maximizes the spectral radius".into(),
            detail: format!(
                "top {} has radius in [{}, {}]",
                top.canonical, top.spectral_radius.lo, top.spectral_radius.hi
            ),
            graphs,
        })
    };
    Ok(ExtremalReport {
        n,
        k,
        scope,
        top_is_path: top.is_path,
        ranking,
        ties,
        witness,
    })
}

fn edge_text(n: usize, edges: &[(usize, usize)]) -> Result<String> {
    Ok(Graph::new(n, edges.iter().copied())?.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig<'static> {
        RunConfig {
            jobs: Some(1),
            ..RunConfig::default()
        }
    }

    #[test]
    fn graham_pollak_values() {
        assert_eq!(graham_pollak_value(2), BigInt::from(-1));
        assert_eq!(graham_pollak_value(3), BigInt::from(4));
        assert_eq!(graham_pollak_value(5), BigInt::from(32));
        let r = graham_pollak_check(5, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.rows.iter().map(|r| r.trees).collect::<Vec<_>>(), vec![1, 3, 16, 125]);
        assert!(graham_pollak_check(1, &cfg()).is_err());
    }

    #[test]
    fn sweep_n3_k4() {
        let c = Compute { det: true, radius: false };
        let r = sweep_trees(3, 4, c, Mode::Labeled, &cfg()).unwrap();
        assert_eq!(r.records.len(), 3);
        assert_eq!(r.verdicts.conjecture1, Some(Verdict::Pass));
        assert_eq!(r.verdicts.conjecture2, Some(Verdict::Pass));
        assert_eq!(r.verdicts.theorem1, Some(Verdict::Pass));
        assert!(r.verdicts.question2.is_none());
        assert_eq!(r.relabel_checks, RELABEL_CHECKS);
        assert!(r.witness.is_none());
    }

    #[test]
    fn sweep_n4_k3_vanishes() {
        let c = Compute { det: true, radius: false };
        let r = sweep_trees(4, 3, c, Mode::Unlabeled, &cfg()).unwrap();
        assert_eq!(r.records.len(), 2);
        assert!(r.records.iter().all(|t| t.det.as_deref() == Some("0")));
        assert_eq!(r.verdicts.conjecture2, Some(Verdict::NotApplicable));
        assert_eq!(r.verdicts.theorem1, Some(Verdict::Pass));
    }

    #[test]
    fn sweep_edge_uses_wendt() {
        let c = Compute { det: true, radius: true };
        for k in 2..=9 {
            let r = sweep_trees(2, k, c, Mode::Labeled, &cfg()).unwrap();
            assert_eq!(r.verdicts.wendt_identity, Some(Verdict::Pass));
            assert_eq!(r.verdicts.theorem1, Some(Verdict::Pass));
            assert_eq!(r.verdicts.question2.as_ref().unwrap().verdict, Verdict::Pass);
        }
    }

    #[test]
    fn sweep_rejects_cap_before_work() {
        let c = Compute { det: true, radius: false };
        assert!(matches!(sweep_trees(5, 3, c, Mode::Labeled, &cfg()), Err(Error::SizeCap(_))));
    }

    #[test]
    fn sweep_json_is_deterministic() {
        let c = Compute { det: true, radius: true };
        let run = |jobs| {
            let cfg = RunConfig { jobs: Some(jobs), seed: 7, ..RunConfig::default() };
            serde_json::to_string(&sweep_trees(4, 2, c, Mode::Labeled, &cfg).unwrap()).unwrap()
        };
        assert_eq!(run(1), run(3));
    }

    #[test]
    fn extremal_small() {
        let r = extremal_radius(2, 4, Scope::Trees, &cfg()).unwrap();
        assert_eq!(r.ranking.len(), 1);
        assert!((r.ranking[0].spectral_radius.value - 7.0).abs() < 1e-8);
        let r = extremal_radius(3, 2, Scope::Trees, &cfg()).unwrap();
        assert!(r.top_is_path);
        assert!((r.ranking[0].spectral_radius.value - (1.0 + 3f64.sqrt())).abs() < 1e-8);
        let r = extremal_radius(4, 3, Scope::Trees, &cfg()).unwrap();
        assert_eq!(r.ranking.len(), 2);
        assert!(r.to_csv().lines().count() == 3);
        assert!(extremal_radius(8, 3, Scope::Trees, &cfg()).is_err());
        assert!(extremal_radius(6, 3, Scope::ConnectedGraphs, &cfg()).is_err());
        assert_eq!(extremal_radius(4, 2, Scope::ConnectedGraphs, &cfg()).unwrap().ranking.len(), 6);
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("steiner-cache-{}", std::process::id()));
        let _ = std::fs::remove_file(&dir);
        let cache = Cache::open(&dir).unwrap();
        let cfg = RunConfig { cache: Some(&cache), jobs: Some(1), ..RunConfig::default() };
        let d = graph_hyperdet(&Graph::path(3), 3, &cfg).unwrap();
        assert!(d.is_zero());
        graph_radius(&Graph::star(4), 3, &cfg).unwrap();
        // isomorphic relabeling hits the same key
        graph_hyperdet(&Graph::new(3, [(1, 3), (3, 2)]).unwrap(), 3, &cfg).unwrap();
        assert_eq!(cache.len(), 2);
        drop(cache);
        let reopened = Cache::open(&dir).unwrap();
        assert_eq!(reopened.len(), 2);
        let canon = canonical_form(&Graph::path(3)).unwrap();
        assert_eq!(reopened.get(&canon, 3, "det"), Some(serde_json::json!("0")));
        std::fs::remove_file(&dir).unwrap();
    }
}

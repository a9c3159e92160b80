//! Graphs on labeled vertices `1..=n`, labeled-tree generation and exact
//! Steiner distances.

use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::BigMatrix;

/// Vertex sets are stored as 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 1-based edge pairs. Self-loops, duplicate edges
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("path is a valid graph")
    }

    /// Star with center 1 and leaves `2..=n`.
    pub fn star(n: usize) -> Self {
        Graph::new(n, (2..=n).map(|i| (1, i))).expect("star is a valid graph")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
            .expect("complete graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbours of `v`, 1-based.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v - 1].iter().map(|&w| w + 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Degree sequence in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|d| d.is_some())
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// A tree whose maximum degree is at most 2.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.adj.iter().all(|a| a.len() <= 2)
    }

    /// Applies `perm` to every vertex label.
    pub fn relabel(&self, perm: &Permutation) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm.apply(u), perm.apply(v))))
    }

    fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances, 0-based; `None` when unreachable.
    fn all_pairs(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|s| self.bfs(s)).collect()
    }

    /// Parses the edge-list format: a header line `n <count>` followed by
    /// one `u v` pair per line. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse_num = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("not a vertex label: {s:?}"),
                })
            };
            match (n, fields.as_slice()) {
                (None, ["n", count]) => n = Some(parse_num(count)?),
                (None, _) => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected header \"n <count>\"".into(),
                    })
                }
                (Some(_), [u, v]) => edges.push((parse_num(u)?, parse_num(v)?)),
                (Some(_), _) => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected \"u v\"".into(),
                    })
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing header \"n <count>\"".into(),
        })?;
        Graph::new(n, edges)
    }
}

impl fmt::Display for Graph {
    /// Writes the edge-list file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse(s)
    }
}

/// Nonempty set of 1-based vertex labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    /// Collects labels into a set; duplicates collapse.
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u64;
        for v in members {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1 << (v - 1);
        }
        if mask == 0 {
            return Err(Error::EmptySet);
        }
        Ok(VertexSet(mask))
    }

    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask == 0 {
            Err(Error::EmptySet)
        } else {
            Ok(VertexSet(mask))
        }
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..MAX_VERTICES).filter(move |i| mask >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    fn max(&self) -> usize {
        MAX_VERTICES - self.0.leading_zeros() as usize
    }
}

/// Fewest edges in a connected subgraph of `g` containing every vertex of `s`.
///
/// Trees use leaf pruning; other graphs run Dreyfus–Wagner.
pub fn steiner_distance(g: &Graph, s: &VertexSet) -> Result<usize> {
    check_members(g, s)?;
    if s.len() == 1 {
        return Ok(0);
    }
    if g.is_tree() {
        Ok(steiner_distance_tree(g, s))
    } else {
        steiner_distance_dreyfus_wagner(g, s)
    }
}

fn check_members(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if s.max() > g.n {
        return Err(Error::VertexOutOfRange {
            vertex: s.max(),
            n: g.n,
        });
    }
    Ok(())
}

/// Leaf pruning on a tree: strip leaves outside `s` until none remain; the
/// surviving subtree is the unique minimal one.
pub(crate) fn steiner_distance_tree(g: &Graph, s: &VertexSet) -> usize {
    let mut degree: Vec<usize> = g.adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; g.n];
    let mut queue: Vec<usize> = (0..g.n)
        .filter(|&v| degree[v] <= 1 && !s.contains(v + 1))
        .collect();
    let mut remaining = g.n;
    while let Some(v) = queue.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        remaining -= 1;
        for &w in &g.adj[v] {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 && !s.contains(w + 1) {
                    queue.push(w);
                }
            }
        }
    }
    remaining - 1
}

/// Dreyfus–Wagner over (terminal subset, anchor vertex) states with unit
/// edge weights.
pub fn steiner_distance_dreyfus_wagner(g: &Graph, s: &VertexSet) -> Result<usize> {
    check_members(g, s)?;
    let terminals: Vec<usize> = s.iter().map(|v| v - 1).collect();
    let t = terminals.len();
    if t == 1 {
        return Ok(0);
    }
    const INF: usize = usize::MAX / 4;
    let dist: Vec<Vec<usize>> = g
        .all_pairs()
        .into_iter()
        .map(|row| row.into_iter().map(|d| d.unwrap_or(INF)).collect())
        .collect();
    let n = g.n;
    let full = (1usize << t) - 1;
    let mut dp = vec![vec![INF; n]; full + 1];
    for (i, &term) in terminals.iter().enumerate() {
        dp[1 << i].clone_from(&dist[term]);
    }
    for mask in 1..=full {
        if mask.count_ones() < 2 {
            continue;
        }
        let mut merged = vec![INF; n];
        // Split mask into two nonempty halves; the low bit stays on one side
        // so each unordered split is visited once.
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let a = sub | low;
            if a != mask {
                let b = mask ^ a;
                for v in 0..n {
                    let c = dp[a][v] + dp[b][v];
                    if c < merged[v] {
                        merged[v] = c;
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        let row = &mut dp[mask];
        for u in 0..n {
            if merged[u] >= INF {
                continue;
            }
            for v in 0..n {
                let c = merged[u] + dist[u][v];
                if c < row[v] {
                    row[v] = c;
                }
            }
        }
    }
    let best = dp[full][terminals[0]];
    if best >= INF {
        Err(Error::UnreachableSet)
    } else {
        Ok(best)
    }
}

/// Pairwise distance matrix of a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<BigMatrix> {
    let apsp = g.all_pairs();
    let mut m = BigMatrix::zeros(g.n, g.n);
    for (i, row) in apsp.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            m[(i, j)] = BigInt::from(d.ok_or(Error::Disconnected)?);
        }
    }
    Ok(m)
}

/// Bijection on `1..=n` stored as its image list: `apply(i) = images[i - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(n));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// Uniformly random permutation.
    pub fn random(n: usize, rng: &mut impl rand::Rng) -> Self {
        use rand::seq::SliceRandom;
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }
}

/// Decodes a Prüfer sequence over `1..=n` (with `n = seq.len() + 2`).
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::InvalidPrufer(format!("entry {bad} outside 1..={n}")));
    }
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::new(n, edges)
}

/// Prüfer sequence of a labeled tree.
pub fn prufer_code(g: &Graph) -> Result<Vec<usize>> {
    if !g.is_tree() {
        return Err(Error::InvalidGraph("Prüfer codes exist only for trees".into()));
    }
    if g.n < 2 {
        return Err(Error::TooFewVertices { n: g.n, min: 2 });
    }
    let mut degree: Vec<usize> = (1..=g.n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.n];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..g.n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(g.n - 2);
    while seq.len() + 2 < g.n {
        let Reverse(leaf) = leaves.pop().expect("trees have leaves");
        removed[leaf] = true;
        let parent = g.adj[leaf]
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .expect("leaf has one live neighbour");
        seq.push(parent + 1);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    Ok(seq)
}

/// All Prüfer sequences of length `n - 2` over `1..=n`, in lexicographic order
/// (which is also their rank order).
#[derive(Clone, Debug)]
pub struct PruferSequences {
    n: usize,
    next: Option<Vec<usize>>,
}

pub fn prufer_sequences(n: usize) -> Result<PruferSequences> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    Ok(PruferSequences {
        n,
        next: Some(vec![1; n - 2]),
    })
}

impl Iterator for PruferSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < self.n {
                succ[i] += 1;
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 1;
        }
        Some(current)
    }
}

/// Every labeled tree on `1..=n`, one per Prüfer sequence.
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(prufer_sequences(n)?.map(|seq| tree_from_prufer(&seq).expect("valid sequence")))
}

/// Isomorphism-invariant encoding of a tree: the AHU parenthesis string of
/// the tree rooted at its centroid (the smaller string when there are two).
pub fn tree_canonical_form(g: &Graph) -> Result<String> {
    if !g.is_tree() {
        return Err(Error::InvalidGraph("canonical form requires a tree".into()));
    }
    Ok(centroids(g)
        .into_iter()
        .map(|c| ahu_encode(g, c, usize::MAX))
        .min()
        .expect("a tree has a centroid"))
}

fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n;
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in &g.adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let heaviest = |v: usize| {
        g.adj[v]
            .iter()
            .map(|&w| if w == parent[v] { n - size[v] } else { size[w] })
            .max()
            .unwrap_or(0)
    };
    (0..n).filter(|&v| 2 * heaviest(v) <= n).collect()
}

fn ahu_encode(g: &Graph, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = g.adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu_encode(g, w, v))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Largest non-tree handled by [`canonical_form`].
pub const CANONICAL_MAX_GENERAL: usize = 8;

/// Isomorphism-invariant key: `T` plus the AHU code for trees, otherwise
/// `G<n>:` plus the smallest edge mask over all relabelings (`n <= 8`).
pub fn canonical_form(g: &Graph) -> Result<String> {
    if g.is_tree() {
        return Ok(format!("T{}", tree_canonical_form(g)?));
    }
    let n = g.n;
    if n > CANONICAL_MAX_GENERAL {
        return Err(Error::SizeCap(format!(
            "canonical forms of non-trees support n <= {CANONICAL_MAX_GENERAL}, got {n}"
        )));
    }
    let pair_index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u - 1, v - 1) } else { (v - 1, u - 1) };
        b * (b - 1) / 2 + a
    };
    let best = all_permutations(n)
        .iter()
        .map(|p| {
            g.edges
                .iter()
                .fold(0u32, |acc, &(u, v)| acc | 1 << pair_index(p[u - 1], p[v - 1]))
        })
        .min()
        .unwrap_or(0);
    Ok(format!("G{n}:{best:x}"))
}

/// Connected graphs on `n` vertices, one representative per isomorphism
/// class, found by brute force over all labelings. Limited to `n <= 6`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::SizeCap(format!(
            "connected-graph enumeration supports n <= 6, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let perms = all_permutations(n);
    // pair index lookup for relabeled masks
    let mut index = vec![vec![0usize; n + 1]; n + 1];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canon = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u32, |acc, (i, &(u, v))| {
                    if mask >> i & 1 == 1 {
                        acc | 1 << index[p[u - 1]][p[v - 1]]
                    } else {
                        acc
                    }
                })
            })
            .min()
            .unwrap();
        if canon != mask || !seen.insert(canon) {
            continue;
        }
        let g = Graph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.iter().copied()).unwrap()
    }

    /// Brute force: the smallest edge subset whose spanned subgraph is
    /// connected and contains `s`.
    fn brute_force_steiner(g: &Graph, s: &VertexSet) -> Option<usize> {
        if s.len() == 1 {
            return Some(0);
        }
        let m = g.edge_count();
        let mut best: Option<usize> = None;
        for mask in 0u32..(1 << m) {
            let chosen: Vec<(usize, usize)> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| g.edges()[i])
                .collect();
            let mut verts = BTreeSet::new();
            for &(u, v) in &chosen {
                verts.insert(u);
                verts.insert(v);
            }
            if !s.iter().all(|v| verts.contains(&v)) {
                continue;
            }
            // connectivity of the chosen edge set via union-find
            let mut parent: Vec<usize> = (0..=g.n()).collect();
            fn find(p: &mut Vec<usize>, x: usize) -> usize {
                if p[x] != x {
                    let r = find(p, p[x]);
                    p[x] = r;
                }
                p[x]
            }
            for &(u, v) in &chosen {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
            let roots: BTreeSet<usize> = verts.iter().map(|&v| find(&mut parent, v)).collect();
            if roots.len() == 1 && best.is_none_or(|b| chosen.len() < b) {
                best = Some(chosen.len());
            }
        }
        best
    }

    #[test]
    fn steiner_examples() {
        let k2 = Graph::path(2);
        assert_eq!(steiner_distance(&k2, &set(&[1, 2])).unwrap(), 1);
        assert_eq!(steiner_distance(&k2, &set(&[2])).unwrap(), 0);
        let star = Graph::star(4);
        assert_eq!(steiner_distance(&star, &set(&[2, 3, 4])).unwrap(), 3);
        assert_eq!(brute_force_steiner(&star, &set(&[2, 3, 4])), Some(3));
        let p4 = Graph::path(4);
        assert_eq!(steiner_distance(&p4, &set(&[1, 4])).unwrap(), 3);
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(set(&[3, 3, 1, 3]), set(&[1, 3]));
        assert!(matches!(VertexSet::new([]), Err(Error::EmptySet)));
    }

    #[test]
    fn unreachable_and_out_of_range() {
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            steiner_distance(&g, &set(&[1, 3])),
            Err(Error::UnreachableSet)
        ));
        assert_eq!(steiner_distance(&g, &set(&[3, 4])).unwrap(), 1);
        assert!(matches!(
            steiner_distance(&g, &set(&[5])),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        ));
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
        assert!(Graph::new(3, [(0, 1)]).is_err());
    }

    #[test]
    fn dreyfus_wagner_matches_brute_force_on_small_graphs() {
        let graphs = [
            Graph::complete(4),
            Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap(),
            Graph::new(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (2, 5)]).unwrap(),
            Graph::new(6, [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6), (5, 6), (4, 6)]).unwrap(),
        ];
        for g in &graphs {
            for mask in 1u64..(1 << g.n()) {
                let s = VertexSet::from_mask(mask).unwrap();
                assert_eq!(
                    steiner_distance_dreyfus_wagner(g, &s).ok(),
                    brute_force_steiner(g, &s),
                    "graph {g:?} set {mask:b}"
                );
            }
        }
    }

    #[test]
    fn prufer_decoding_examples() {
        assert_eq!(tree_from_prufer(&[]).unwrap().edges(), &[(1, 2)]);
        assert_eq!(tree_from_prufer(&[2]).unwrap().edges(), &[(1, 2), (2, 3)]);
        assert_eq!(tree_from_prufer(&[1, 1]).unwrap(), Graph::star(4));
        assert!(tree_from_prufer(&[5]).is_err());
        assert!(tree_from_prufer(&[0, 1]).is_err());
    }

    #[test]
    fn prufer_round_trip() {
        for n in 2..=6 {
            for seq in prufer_sequences(n).unwrap() {
                let t = tree_from_prufer(&seq).unwrap();
                assert!(t.is_tree());
                assert_eq!(prufer_code(&t).unwrap(), seq);
            }
        }
    }

    /// Brute-force tree count: acyclic connected (n-1)-edge subsets of K_n.
    fn brute_force_tree_count(n: usize) -> usize {
        let k = Graph::complete(n);
        let m = k.edge_count();
        (0u32..(1 << m))
            .filter(|mask| mask.count_ones() as usize == n - 1)
            .filter(|mask| {
                Graph::new(n, (0..m).filter(|i| mask >> i & 1 == 1).map(|i| k.edges()[i]))
                    .unwrap()
                    .is_tree()
            })
            .count()
    }

    #[test]
    fn labeled_tree_counts() {
        assert_eq!(enumerate_labeled_trees(2).unwrap().count(), 1);
        assert_eq!(brute_force_tree_count(3), 3);
        assert_eq!(enumerate_labeled_trees(3).unwrap().count(), 3);
        assert_eq!(brute_force_tree_count(4), 16);
        assert_eq!(enumerate_labeled_trees(4).unwrap().count(), 16);
        let distinct: BTreeSet<Vec<(usize, usize)>> = enumerate_labeled_trees(5)
            .unwrap()
            .map(|g| g.edges().to_vec())
            .collect();
        assert_eq!(distinct.len(), 125);
        assert!(enumerate_labeled_trees(1).is_err());
    }

    #[test]
    fn distance_matrix_examples() {
        let to_i64 = |g: &Graph| distance_matrix(g).unwrap().to_i64_rows().unwrap();
        assert_eq!(to_i64(&Graph::path(2)), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            to_i64(&Graph::path(3)),
            vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]
        );
        assert_eq!(
            to_i64(&Graph::star(4)),
            vec![
                vec![0, 1, 1, 1],
                vec![1, 0, 2, 2],
                vec![1, 2, 0, 2],
                vec![1, 2, 2, 0]
            ]
        );
        let disconnected = Graph::new(3, [(1, 2)]).unwrap();
        assert!(matches!(distance_matrix(&disconnected), Err(Error::Disconnected)));
    }

    #[test]
    fn canonical_forms_separate_tree_classes() {
        // unlabeled tree counts: 1, 1, 1, 2, 3, 6, 11 for n = 1..7
        for (n, expected) in [(2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11)] {
            let forms: BTreeSet<String> = enumerate_labeled_trees(n)
                .unwrap()
                .map(|t| tree_canonical_form(&t).unwrap())
                .collect();
            assert_eq!(forms.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349: 1, 1, 2, 6, 21
        for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)] {
            assert_eq!(enumerate_connected_graphs(n).unwrap().len(), expected);
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let cycle = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let paw = Graph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        for g in [cycle, paw, Graph::path(6), Graph::star(5), Graph::complete(4)] {
            let c = canonical_form(&g).unwrap();
            for _ in 0..10 {
                let h = g.relabel(&Permutation::random(g.n(), &mut rng)).unwrap();
                assert_eq!(canonical_form(&h).unwrap(), c);
            }
        }
        assert_ne!(
            canonical_form(&Graph::path(4)).unwrap(),
            canonical_form(&Graph::star(4)).unwrap()
        );
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_ne!(canonical_form(&c4).unwrap(), canonical_form(&Graph::complete(4)).unwrap());
        assert!(canonical_form(&Graph::complete(9)).is_err());
    }

    #[test]
    fn edge_list_format_round_trips() {
        let g = Graph::star(4);
        let text = g.to_string();
        assert_eq!(text, "n 4\n1 2\n1 3\n1 4\n");
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert_eq!(Graph::parse("# comment\nn 2\n\n1 2 # edge\n").unwrap(), Graph::path(2));
        assert!(Graph::parse("1 2\n").is_err());
        assert!(Graph::parse("n 2\n1 2 3\n").is_err());
        assert!(Graph::parse("n 2\n1 x\n").is_err());
    }

    #[test]
    fn permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        let inv = p.inverse();
        for v in 1..=3 {
            assert_eq!(inv.apply(p.apply(v)), v);
        }
        assert!(Graph::path(3).relabel(&p).unwrap().is_path());
    }
}

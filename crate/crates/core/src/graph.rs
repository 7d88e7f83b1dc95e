//! Loopless multigraphs with spindle structure (parallel edge bundles keyed
//! by vertex pair), the deletion/contraction/identification constructions,
//! block decomposition, cactus recognition, and two-terminal series-parallel
//! networks: construction trees, a reduction-based recognizer, and seeded
//! random generators for campaigns.
//!
//! Vertices are dense ids `0..n`. Identification keeps the smaller id and
//! renumbers the tail so fixtures stay reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Loopless connected-or-not multigraph: vertex count plus a map from
/// unordered vertex pairs to edge multiplicities (every multiplicity >= 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    n: usize,
    spindles: BTreeMap<(usize, usize), usize>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Multigraph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            spindles: BTreeMap::new(),
        }
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. Loops are
    /// rejected; repeated pairs accumulate.
    pub fn with_edges(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v, c) in edges {
            g.add_edges(u, v, c)?;
        }
        Ok(g)
    }

    /// Adds `c` parallel edges between distinct existing vertices.
    pub fn add_edges(&mut self, u: usize, v: usize, c: usize) -> Result<()> {
        if u == v {
            return Err(Error::domain(format!("loop at vertex {u} is not allowed")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "edge ({u}, {v}) references a vertex >= {}",
                self.n
            )));
        }
        if c == 0 {
            return Err(Error::domain("spindle multiplicity must be >= 1"));
        }
        *self.spindles.entry(ordered(u, v)).or_insert(0) += c;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total edge count, multiplicities included.
    pub fn edge_count(&self) -> usize {
        self.spindles.values().sum()
    }

    pub fn spindle_count(&self) -> usize {
        self.spindles.len()
    }

    /// Cycle rank `m - n + 1` of a connected graph.
    pub fn cycle_rank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::domain("cycle rank defined for connected graphs"));
        }
        Ok(self.edge_count() + 1 - self.n)
    }

    pub fn spindles(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.spindles.iter().map(|(&p, &c)| (p, c))
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.spindles.get(&ordered(u, v)).copied().unwrap_or(0)
    }

    /// Sum of multiplicities at a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.spindles
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Number of distinct neighbours of a vertex.
    pub fn simple_degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in self.spindles.keys() {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    /// Removes an entire spindle; the vertices remain.
    pub fn delete_spindle(&self, pair: (usize, usize)) -> Result<Multigraph> {
        let key = ordered(pair.0, pair.1);
        if !self.spindles.contains_key(&key) {
            return Err(Error::domain(format!("no spindle between {key:?}")));
        }
        let mut g = self.clone();
        g.spindles.remove(&key);
        Ok(g)
    }

    /// Contracts an entire spindle: endpoints identified, the spindle's own
    /// edges become loops and disappear, merged parallels accumulate.
    pub fn contract_spindle(&self, pair: (usize, usize)) -> Result<Multigraph> {
        let key = ordered(pair.0, pair.1);
        if !self.spindles.contains_key(&key) {
            return Err(Error::domain(format!("no spindle between {key:?}")));
        }
        self.identify_vertices(key.0, key.1)
    }

    /// Identifies two distinct vertices, dropping any loops produced. The
    /// smaller id survives and ids above the larger one shift down.
    pub fn identify_vertices(&self, v: usize, w: usize) -> Result<Multigraph> {
        if v == w {
            return Err(Error::domain("cannot identify a vertex with itself"));
        }
        if v >= self.n || w >= self.n {
            return Err(Error::domain("identify: vertex out of range"));
        }
        let keep = v.min(w);
        let gone = v.max(w);
        let remap = |x: usize| -> usize {
            if x == gone {
                keep
            } else if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut g = Multigraph::new(self.n - 1);
        for (&(a, b), &c) in &self.spindles {
            let (na, nb) = (remap(a), remap(b));
            if na == nb {
                continue; // loop created by the identification
            }
            *g.spindles.entry(ordered(na, nb)).or_insert(0) += c;
        }
        Ok(g)
    }

    /// Same vertex set with every multiplicity set to one.
    pub fn underlying_simple(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            spindles: self.spindles.keys().map(|&p| (p, 1)).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in self.spindles.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Whether deleting the given spindle disconnects the graph.
    pub fn is_cut_spindle(&self, pair: (usize, usize)) -> Result<bool> {
        Ok(!self.delete_spindle(pair)?.is_connected())
    }

    /// Standard block decomposition by depth-first lowpoints, returning each
    /// block as its own graph with vertices renumbered ascending. Blocks
    /// partition the spindles; isolated vertices contribute nothing.
    pub fn biconnected_components(&self) -> Result<Vec<Multigraph>> {
        if !self.is_connected() {
            return Err(Error::domain("block decomposition needs a connected graph"));
        }
        if self.n <= 1 || self.spindles.is_empty() {
            return Ok(Vec::new());
        }
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();

        // iterative DFS, one (vertex, parent, neighbor cursor) frame each
        let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut cursor)) = frames.last_mut() {
            if *cursor < adj[v].len() {
                let w = adj[v][*cursor];
                *cursor += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push(ordered(v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(ordered(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&mut (u, _, _)) = frames.last_mut() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        // u separates v's subtree: everything pushed after
                        // the tree edge (u, v) is one block
                        let mut block = Vec::new();
                        loop {
                            let e = edge_stack.pop().expect("tree edge on stack");
                            block.push(e);
                            if e == ordered(u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty(), "unassigned edges after traversal");

        let mut out = Vec::new();
        for block in blocks {
            let mut verts: BTreeSet<usize> = BTreeSet::new();
            for &(a, b) in &block {
                verts.insert(a);
                verts.insert(b);
            }
            let index: BTreeMap<usize, usize> =
                verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let mut g = Multigraph::new(verts.len());
            for &(a, b) in &block {
                let c = self.multiplicity(a, b);
                g.add_edges(index[&a], index[&b], c)?;
            }
            out.push(g);
        }
        out.sort();
        Ok(out)
    }

    /// True when every block of the underlying simple graph is a single edge
    /// or a cycle.
    pub fn is_cactus(&self) -> Result<bool> {
        let simple = self.underlying_simple();
        for block in simple.biconnected_components()? {
            if block.spindle_count() == 1 {
                continue;
            }
            let cycle = (0..block.vertex_count()).all(|v| block.simple_degree(v) == 2);
            if !cycle {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renumbers vertices through a permutation (`perm[old] = new`).
    pub fn renumber(&self, perm: &[usize]) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for (&(a, b), &c) in &self.spindles {
            *g.spindles.entry(ordered(perm[a], perm[b])).or_insert(0) += c;
        }
        g
    }

    /// Cheap deterministic cache key: best breadth-first renumbering over
    /// degree-minimal start vertices. Isomorphic graphs usually (not always)
    /// share a key; correctness of memo lookups only needs equal keys to
    /// mean equal graphs, which holds because the key encodes the whole
    /// renumbered graph.
    pub fn memo_key(&self) -> Vec<u8> {
        if self.n == 0 {
            return vec![0];
        }
        let mut label: Vec<(usize, usize)> = (0..self.n)
            .map(|v| (self.simple_degree(v), self.degree(v)))
            .collect();
        label.sort_unstable();
        let best_label = (0..self.n)
            .map(|v| (self.simple_degree(v), self.degree(v)))
            .min()
            .unwrap();
        let mut best: Option<Vec<u8>> = None;
        for start in 0..self.n {
            if (self.simple_degree(start), self.degree(start)) != best_label {
                continue;
            }
            let key = self.bfs_key(start);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap()
    }

    fn bfs_key(&self, start: usize) -> Vec<u8> {
        let mut order = vec![usize::MAX; self.n]; // old -> new
        let mut queue = std::collections::VecDeque::new();
        order[start] = 0;
        queue.push_back(start);
        let mut next = 1usize;
        while let Some(v) = queue.pop_front() {
            let mut nb: Vec<(usize, usize, usize)> = self
                .neighbors(v)
                .into_iter()
                .filter(|&w| order[w] == usize::MAX)
                .map(|w| (self.simple_degree(w), self.degree(w), w))
                .collect();
            nb.sort_unstable();
            for (_, _, w) in nb {
                if order[w] == usize::MAX {
                    order[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
        // unreached vertices (disconnected input) get stable tail ids
        for slot in order.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let g = self.renumber(&order);
        let mut key = Vec::with_capacity(4 + 12 * g.spindles.len());
        key.extend((g.n as u32).to_le_bytes());
        for (&(a, b), &c) in &g.spindles {
            key.extend((a as u32).to_le_bytes());
            key.extend((b as u32).to_le_bytes());
            key.extend((c as u32).to_le_bytes());
        }
        key
    }

    /// Exact canonical form by minimizing over all vertex permutations.
    /// Intended for de-duplicating small enumerated graphs.
    pub fn exact_canonical_key(&self) -> Result<Vec<u8>> {
        if self.n > 8 {
            return Err(Error::refusal(
                "exact canonical form is limited to 8 vertices",
            ));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<Vec<(usize, usize, usize)>> = None;
        permute(&mut perm, 0, &mut |p| {
            let g = self.renumber(p);
            let edges: Vec<(usize, usize, usize)> =
                g.spindles.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        });
        let edges = best.unwrap_or_default();
        let mut key = Vec::with_capacity(4 + 12 * edges.len());
        key.extend((self.n as u32).to_le_bytes());
        for (a, b, c) in edges {
            key.extend((a as u32).to_le_bytes());
            key.extend((b as u32).to_le_bytes());
            key.extend((c as u32).to_le_bytes());
        }
        Ok(key)
    }

    /// Parses the line-oriented text format: `#` comments, a `v <n>` header,
    /// then `e <u> <v> <mult>` lines with `0 <= u < v < n` and `mult >= 1`.
    pub fn parse(text: &str) -> Result<Multigraph> {
        let mut graph: Option<Multigraph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = raw.split_whitespace();
            let col_of = |tok: &str| 1 + tok.as_ptr() as usize - raw.as_ptr() as usize;
            let head = tokens.next().unwrap();
            match head {
                "v" => {
                    if graph.is_some() {
                        return Err(Error::parse(line, col_of(head), "duplicate v header"));
                    }
                    let tok = tokens
                        .next()
                        .ok_or_else(|| Error::parse(line, col_of(head), "v needs a count"))?;
                    let n: usize = tok.parse().map_err(|_| {
                        Error::parse(line, col_of(tok), format!("bad vertex count {tok:?}"))
                    })?;
                    graph = Some(Multigraph::new(n));
                }
                "e" => {
                    let g = graph.as_mut().ok_or_else(|| {
                        Error::parse(line, col_of(head), "e line before v header")
                    })?;
                    let mut parse_num = |name: &str| -> Result<(usize, usize)> {
                        let tok = tokens.next().ok_or_else(|| {
                            Error::parse(line, col_of(head), format!("e needs {name}"))
                        })?;
                        let v: usize = tok.parse().map_err(|_| {
                            Error::parse(line, col_of(tok), format!("bad {name} {tok:?}"))
                        })?;
                        Ok((v, col_of(tok)))
                    };
                    let (u, ucol) = parse_num("a source vertex")?;
                    let (v, vcol) = parse_num("a target vertex")?;
                    let (c, ccol) = parse_num("a multiplicity")?;
                    if u >= v {
                        return Err(Error::parse(line, ucol, "edge must satisfy u < v"));
                    }
                    if v >= g.n {
                        return Err(Error::parse(line, vcol, "vertex out of range"));
                    }
                    if c == 0 {
                        return Err(Error::parse(line, ccol, "multiplicity must be >= 1"));
                    }
                    *g.spindles.entry((u, v)).or_insert(0) += c;
                }
                other => {
                    return Err(Error::parse(
                        line,
                        col_of(head),
                        format!("unknown directive {other:?}"),
                    ));
                }
            }
        }
        graph.ok_or_else(|| Error::parse(1, 1, "missing v header"))
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "v {}", self.n)?;
        for (&(a, b), &c) in &self.spindles {
            writeln!(f, "e {a} {b} {c}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// series-parallel networks

/// Construction tree of a two-terminal series-parallel network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpTree {
    Edge,
    Series(Box<SpTree>, Box<SpTree>),
    Parallel(Box<SpTree>, Box<SpTree>),
}

impl SpTree {
    pub fn series(l: SpTree, r: SpTree) -> SpTree {
        SpTree::Series(Box::new(l), Box::new(r))
    }

    pub fn parallel(l: SpTree, r: SpTree) -> SpTree {
        SpTree::Parallel(Box::new(l), Box::new(r))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            SpTree::Edge => 1,
            SpTree::Series(l, r) | SpTree::Parallel(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }
}

/// A realized series-parallel network: graph, terminal pair, and the tree
/// it was built from.
#[derive(Clone, Debug)]
pub struct SpNetwork {
    pub graph: Multigraph,
    pub terminals: (usize, usize),
    pub build: SpTree,
}

/// Realizes a construction tree: a single edge between the terminals, a
/// series connection identifying second and first terminals, or a parallel
/// connection identifying both pairs.
pub fn sp_build(tree: &SpTree) -> SpNetwork {
    let (graph, s, t) = build_rec(tree);
    SpNetwork {
        graph,
        terminals: (s, t),
        build: tree.clone(),
    }
}

fn build_rec(tree: &SpTree) -> (Multigraph, usize, usize) {
    match tree {
        SpTree::Edge => {
            let g = Multigraph::with_edges(2, &[(0, 1, 1)]).unwrap();
            (g, 0, 1)
        }
        SpTree::Series(l, r) => {
            let (gl, sl, tl) = build_rec(l);
            let (gr, sr, tr) = build_rec(r);
            let off = gl.vertex_count();
            let mut g = Multigraph::new(off + gr.vertex_count());
            for ((a, b), c) in gl.spindles() {
                g.add_edges(a, b, c).unwrap();
            }
            for ((a, b), c) in gr.spindles() {
                g.add_edges(a + off, b + off, c).unwrap();
            }
            let (merged, map) = identify_tracked(&g, tl, sr + off);
            (merged, map(sl), map(tr + off))
        }
        SpTree::Parallel(l, r) => {
            let (gl, sl, tl) = build_rec(l);
            let (gr, sr, tr) = build_rec(r);
            let off = gl.vertex_count();
            let mut g = Multigraph::new(off + gr.vertex_count());
            for ((a, b), c) in gl.spindles() {
                g.add_edges(a, b, c).unwrap();
            }
            for ((a, b), c) in gr.spindles() {
                g.add_edges(a + off, b + off, c).unwrap();
            }
            let (g1, map1) = identify_tracked(&g, sl, sr + off);
            let (g2, map2) = identify_tracked(&g1, map1(tl), map1(tr + off));
            (g2, map2(map1(sl)), map2(map1(tl)))
        }
    }
}

/// Identify vertices and hand back the id remapping alongside the graph.
fn identify_tracked(g: &Multigraph, v: usize, w: usize) -> (Multigraph, impl Fn(usize) -> usize) {
    let merged = g.identify_vertices(v, w).expect("distinct vertices");
    let keep = v.min(w);
    let gone = v.max(w);
    let map = move |x: usize| -> usize {
        if x == gone {
            keep
        } else if x > gone {
            x - 1
        } else {
            x
        }
    };
    (merged, map)
}

/// Decides whether every block is a two-terminal series-parallel network
/// for some choice of terminals, by parallel-merge and degree-two
/// suppression; returns one witness construction tree per block.
pub fn sp_recognize(g: &Multigraph) -> Result<Option<Vec<SpTree>>> {
    if !g.is_connected() {
        return Err(Error::domain("recognition needs a connected graph"));
    }
    let mut trees = Vec::new();
    for block in g.biconnected_components()? {
        match reduce_block(&block) {
            Some(tree) => trees.push(tree),
            None => return Ok(None),
        }
    }
    Ok(Some(trees))
}

fn parallel_fold(c: usize) -> SpTree {
    let mut tree = SpTree::Edge;
    for _ in 1..c {
        tree = SpTree::parallel(tree, SpTree::Edge);
    }
    tree
}

fn reduce_block(block: &Multigraph) -> Option<SpTree> {
    let mut trees: BTreeMap<(usize, usize), SpTree> = block
        .spindles()
        .map(|(pair, c)| (pair, parallel_fold(c)))
        .collect();
    let mut alive: BTreeSet<usize> = (0..block.vertex_count()).collect();
    loop {
        if alive.len() == 2 {
            let mut values: Vec<SpTree> = trees.into_values().collect();
            debug_assert_eq!(values.len(), 1);
            return values.pop();
        }
        // find a vertex with exactly two distinct neighbours
        let mut found = None;
        'outer: for &v in &alive {
            let mut nb = BTreeSet::new();
            for &(a, b) in trees.keys() {
                if a == v {
                    nb.insert(b);
                } else if b == v {
                    nb.insert(a);
                }
            }
            if nb.len() == 2 {
                let mut it = nb.into_iter();
                found = Some((v, it.next().unwrap(), it.next().unwrap()));
                break 'outer;
            }
        }
        let (v, a, b) = found?;
        let left = trees.remove(&ordered(a, v)).expect("incident spindle");
        let right = trees.remove(&ordered(v, b)).expect("incident spindle");
        // orientation: terminals become (a, b) through the suppressed vertex
        let through = SpTree::series(left, right);
        let merged = match trees.remove(&ordered(a, b)) {
            Some(existing) => SpTree::parallel(existing, through),
            None => through,
        };
        trees.insert(ordered(a, b), merged);
        alive.remove(&v);
    }
}

/// Deterministic random series-parallel network on `size` edges: a uniform
/// random binary construction tree whose leaves may be parallel bundles
/// of up to four edges.
pub fn random_sp(size: usize, seed: u64) -> SpNetwork {
    assert!(size >= 1, "edge budget must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(size, &mut rng);
    sp_build(&tree)
}

fn random_tree(budget: usize, rng: &mut ChaCha8Rng) -> SpTree {
    if budget == 1 {
        return SpTree::Edge;
    }
    if budget <= 4 && rng.gen_ratio(1, 4) {
        return parallel_fold(budget);
    }
    let split = rng.gen_range(1..budget);
    let left = random_tree(split, rng);
    let right = random_tree(budget - split, rng);
    if rng.gen_bool(0.5) {
        SpTree::series(left, right)
    } else {
        SpTree::parallel(left, right)
    }
}

/// Deterministic random connected graph whose blocks are series-parallel:
/// up to `blocks` SP blocks glued sequentially at single vertices.
pub fn random_sp_prime(blocks: usize, max_block_edges: usize, seed: u64) -> Multigraph {
    assert!(blocks >= 1 && max_block_edges >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let count = rng.gen_range(1..=blocks);
    let mut acc: Option<Multigraph> = None;
    for i in 0..count {
        let edges = rng.gen_range(1..=max_block_edges);
        let block = random_sp(edges, seed.wrapping_add(i as u64 * 7919)).graph;
        acc = Some(match acc {
            None => block,
            Some(g) => {
                let at_old = rng.gen_range(0..g.vertex_count());
                let at_new = rng.gen_range(0..block.vertex_count());
                glue_at_vertex(&g, at_old, &block, at_new)
            }
        });
    }
    acc.unwrap()
}

/// All connected simple graphs using every vertex id `0..n` for each
/// `n <= n_max`, with at most `m_max` edges. Labeled enumeration; callers
/// wanting one representative per isomorphism class dedup afterwards.
pub fn enumerate_connected_simple(n_max: usize, m_max: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .collect();
        let total = pairs.len();
        if n >= 2 && total < n - 1 {
            continue;
        }
        for mask in 0..(1u64 << total) {
            let count = mask.count_ones() as usize;
            if count > m_max || (n >= 2 && count < n - 1) {
                continue;
            }
            let mut g = Multigraph::new(n);
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edges(a, b, 1).unwrap();
                }
            }
            if g.is_connected() && (n == 1 || (0..n).all(|v| g.degree(v) >= 1)) {
                out.push(g);
            }
        }
    }
    out
}

/// All connected multigraphs obtained by assigning spindle multiplicities in
/// `1..=mult_max` to connected simple base graphs with at most `n_max`
/// vertices, keeping total edge count at most `m_max`. With `dedup` set
/// (vertex counts at most 8), one representative per isomorphism class.
pub fn enumerate_connected_multigraphs(
    n_max: usize,
    m_max: usize,
    mult_max: usize,
    dedup: bool,
) -> Result<Vec<Multigraph>> {
    if dedup && n_max > 8 {
        return Err(Error::refusal("dedup enumeration is limited to 8 vertices"));
    }
    let mut bases = enumerate_connected_simple(n_max, m_max);
    if dedup {
        let mut seen = BTreeSet::new();
        bases.retain(|g| seen.insert(g.exact_canonical_key().unwrap()));
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for base in &bases {
        let pairs: Vec<(usize, usize)> = base.spindles().map(|(p, _)| p).collect();
        let e = pairs.len();
        let mut mults = vec![1usize; e];
        loop {
            let total: usize = mults.iter().sum();
            if total <= m_max {
                let mut g = Multigraph::new(base.vertex_count());
                for (i, &(a, b)) in pairs.iter().enumerate() {
                    g.add_edges(a, b, mults[i]).unwrap();
                }
                if !dedup || seen.insert(g.exact_canonical_key().unwrap()) {
                    out.push(g);
                }
            }
            // odometer over multiplicity vectors
            let mut i = 0;
            loop {
                if i == e {
                    break;
                }
                mults[i] += 1;
                if mults[i] <= mult_max {
                    break;
                }
                mults[i] = 1;
                i += 1;
            }
            if i == e {
                break;
            }
        }
    }
    Ok(out)
}

/// One-vertex gluing: disjoint union with `v` of the left identified with
/// `w` of the right.
pub fn glue_at_vertex(g: &Multigraph, v: usize, h: &Multigraph, w: usize) -> Multigraph {
    let off = g.vertex_count();
    let mut u = Multigraph::new(off + h.vertex_count());
    for ((a, b), c) in g.spindles() {
        u.add_edges(a, b, c).unwrap();
    }
    for ((a, b), c) in h.spindles() {
        u.add_edges(a + off, b + off, c).unwrap();
    }
    u.identify_vertices(v, w + off).expect("distinct vertices")
}

//! Simplicial-complex combinatorics: clique decomposition, closedness,
//! block-adjacency structure, and intersection graphs.
//!
//! Positions are everywhere 1-based indices into a component's sorted vertex
//! list; global column labels appear only where minors are emitted. This is
//! forced by components with non-contiguous vertex sets such as
//! `{4,6,7,8,9}`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};

/// A facet list on labeled vertices with the ambient row count `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    rows: u16,
    facets: Vec<Vec<u16>>,
    vertices: Vec<u16>,
}

impl SimplicialComplex {
    /// Validates: labels positive, facet sizes in `2..=m`, no facet contains
    /// another. Facets are sorted and deduplicated.
    pub fn new(rows: u16, facets: Vec<Vec<u16>>) -> Result<Self> {
        if rows == 0 {
            return Err(Error::Argument("row count must be positive".into()));
        }
        if facets.is_empty() {
            return Err(Error::EmptyInput("complex without facets".into()));
        }
        let mut norm: Vec<Vec<u16>> = Vec::with_capacity(facets.len());
        for f in facets {
            let set: BTreeSet<u16> = f.iter().copied().collect();
            if set.len() != f.len() {
                return Err(Error::Argument(format!("facet {f:?} has repeated vertices")));
            }
            if set.contains(&0) {
                return Err(Error::Argument("vertex labels must be positive".into()));
            }
            if set.len() < 2 || set.len() > rows as usize {
                return Err(Error::Argument(format!(
                    "facet {f:?} must have between 2 and {rows} vertices"
                )));
            }
            norm.push(set.into_iter().collect());
        }
        norm.sort();
        norm.dedup();
        for a in &norm {
            for b in &norm {
                if a != b && is_subset(a, b) {
                    return Err(Error::Argument(format!(
                        "facet {a:?} is contained in facet {b:?}"
                    )));
                }
            }
        }
        let vertices: Vec<u16> =
            norm.iter().flatten().copied().collect::<BTreeSet<u16>>().into_iter().collect();
        Ok(SimplicialComplex { rows, facets: norm, vertices })
    }

    pub fn rows(&self) -> u16 {
        self.rows
    }

    pub fn facets(&self) -> &[Vec<u16>] {
        &self.facets
    }

    pub fn vertices(&self) -> &[u16] {
        &self.vertices
    }

    pub fn dim(&self) -> u16 {
        self.facets.iter().map(|f| f.len() as u16).max().unwrap_or(1) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(|f| f.len()).all_equal()
    }

    pub fn facet_set(&self) -> HashSet<Vec<u16>> {
        self.facets.iter().cloned().collect()
    }

    /// Applies a vertex bijection and rebuilds the complex.
    pub fn relabel(&self, map: &BTreeMap<u16, u16>) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|v| map.get(v).copied().ok_or_else(|| {
                        Error::Argument(format!("relabeling does not cover vertex {v}"))
                    }))
                    .collect::<Result<Vec<u16>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(self.rows, facets)
    }
}

fn is_subset(a: &[u16], b: &[u16]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Full `dim`-skeleton of a simplex on `vertices`, all of whose facets are
/// facets of the parent complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub vertices: Vec<u16>,
    pub dim: u16,
}

impl Clique {
    pub fn facet_size(&self) -> usize {
        self.dim as usize + 1
    }

    pub fn facets(&self) -> Vec<Vec<u16>> {
        self.vertices
            .iter()
            .copied()
            .combinations(self.facet_size())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueDecomposition {
    pub cliques: Vec<Clique>,
}

impl CliqueDecomposition {
    /// Indices of the cliques containing a facet.
    pub fn cliques_of_facet(&self, facet: &[u16]) -> Vec<usize> {
        self.cliques
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                c.facet_size() == facet.len() && facet.iter().all(|v| c.vertices.contains(v))
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// All maximal full-skeleton cliques, ordered by smallest vertex, then size,
/// then vertex list.
pub fn clique_decomposition(cx: &SimplicialComplex) -> CliqueDecomposition {
    let mut cliques: Vec<Clique> = Vec::new();
    let sizes: BTreeSet<usize> = cx.facets().iter().map(|f| f.len()).collect();
    for s in sizes {
        let facets_s: HashSet<Vec<u16>> =
            cx.facets().iter().filter(|f| f.len() == s).cloned().collect();
        let verts: Vec<u16> = facets_s
            .iter()
            .flatten()
            .copied()
            .collect::<BTreeSet<u16>>()
            .into_iter()
            .collect();
        let mut found: Vec<Vec<u16>> = Vec::new();
        let mut stack: Vec<u16> = Vec::new();
        extend_clique(&facets_s, &verts, s, &mut stack, 0, &mut found);
        for w in found {
            cliques.push(Clique { dim: (s - 1) as u16, vertices: w });
        }
    }
    cliques.sort_by(|a, b| {
        (a.vertices[0], a.vertices.len(), &a.vertices).cmp(&(
            b.vertices[0],
            b.vertices.len(),
            &b.vertices,
        ))
    });
    CliqueDecomposition { cliques }
}

/// Is `w + v` still a set all of whose `s`-subsets are facets?
fn still_valid(facets_s: &HashSet<Vec<u16>>, w: &[u16], v: u16, s: usize) -> bool {
    if w.len() + 1 < s {
        return true;
    }
    // only the s-subsets containing v are new
    w.iter()
        .copied()
        .combinations(s - 1)
        .all(|mut sub| {
            sub.push(v);
            sub.sort_unstable();
            facets_s.contains(&sub)
        })
}

fn extend_clique(
    facets_s: &HashSet<Vec<u16>>,
    verts: &[u16],
    s: usize,
    stack: &mut Vec<u16>,
    from: usize,
    found: &mut Vec<Vec<u16>>,
) {
    if stack.len() >= s {
        // maximal iff no vertex at all extends it
        let maximal = verts
            .iter()
            .filter(|v| !stack.contains(v))
            .all(|&v| !still_valid(facets_s, stack, v, s));
        if maximal {
            found.push(stack.clone());
        }
    }
    for idx in from..verts.len() {
        let v = verts[idx];
        if still_valid(facets_s, stack, v, s) {
            stack.push(v);
            extend_clique(facets_s, verts, s, stack, idx + 1, found);
            stack.pop();
        }
    }
}

/// Why a labeled complex is not closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosednessViolation {
    pub facet_b: Vec<u16>,
    pub facet_c: Vec<u16>,
    pub clique_b: usize,
    pub clique_c: usize,
    /// 1-based position in `facet_b`.
    pub k: usize,
    /// 1-based position in `facet_c`.
    pub l: usize,
}

#[derive(Debug, Clone)]
pub struct ClosednessReport {
    pub closed: bool,
    pub violation: Option<ClosednessViolation>,
}

/// Checks the position-avoidance condition: for facets `B` in one clique and
/// `C` in another with `|B| = t <= s = |C|` and every `k`, the entry `b_k`
/// differs from `c_l` for all `l` in `[max(1, k-m+s), m-t+k]`.
pub fn is_closed(cx: &SimplicialComplex, dec: &CliqueDecomposition) -> ClosednessReport {
    let m = cx.rows() as isize;
    let facet_lists: Vec<Vec<Vec<u16>>> = dec.cliques.iter().map(|c| c.facets()).collect();
    for i in 0..dec.cliques.len() {
        for j in (i + 1)..dec.cliques.len() {
            for b in &facet_lists[i] {
                for c in &facet_lists[j] {
                    for (fb, fc, ci, cj) in [(b, c, i, j), (c, b, j, i)] {
                        if fb.len() > fc.len() {
                            continue;
                        }
                        if let Some((k, l)) = pair_violation(fb, fc, m) {
                            return ClosednessReport {
                                closed: false,
                                violation: Some(ClosednessViolation {
                                    facet_b: fb.clone(),
                                    facet_c: fc.clone(),
                                    clique_b: ci,
                                    clique_c: cj,
                                    k,
                                    l,
                                }),
                            };
                        }
                    }
                }
            }
        }
    }
    ClosednessReport { closed: true, violation: None }
}

fn pair_violation(b: &[u16], c: &[u16], m: isize) -> Option<(usize, usize)> {
    let t = b.len() as isize;
    let s = c.len() as isize;
    for k in 1..=t {
        let lo = 1.max(k - m + s);
        let hi = (m - t + k).min(s);
        for l in lo..=hi {
            if b[(k - 1) as usize] == c[(l - 1) as usize] {
                return Some((k as usize, l as usize));
            }
        }
    }
    None
}

fn next_permutation<T: Ord>(arr: &mut [T]) -> bool {
    if arr.len() < 2 {
        return false;
    }
    let mut i = arr.len() - 1;
    while i > 0 && arr[i - 1] >= arr[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = arr.len() - 1;
    while arr[j] <= arr[i - 1] {
        j -= 1;
    }
    arr.swap(i - 1, j);
    arr[i..].reverse();
    true
}

/// Exhaustive search for a vertex relabeling making the complex closed.
///
/// Returns the first hit in lexicographic permutation order, as the map
/// `old label -> new label`, or `None` after exhausting all permutations.
pub fn find_closed_labeling(
    cx: &SimplicialComplex,
    perm_bound: usize,
) -> Result<Option<BTreeMap<u16, u16>>> {
    let verts = cx.vertices().to_vec();
    if verts.len() > perm_bound {
        return Err(Error::Resource {
            what: format!(
                "permutation search over {} vertices; supply a labeling manually",
                verts.len()
            ),
            limit: perm_bound as u64,
        });
    }
    let mut image = verts.clone();
    loop {
        let map: BTreeMap<u16, u16> =
            verts.iter().copied().zip(image.iter().copied()).collect();
        let relabeled = cx.relabel(&map)?;
        let dec = clique_decomposition(&relabeled);
        if is_closed(&relabeled, &dec).closed {
            return Ok(Some(map));
        }
        if !next_permutation(&mut image) {
            return Ok(None);
        }
    }
}

/// One maximal chain of `(m-1)`-skeleton sub-blocks, consecutive sub-blocks
/// overlapping in exactly `m-1` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockComponent {
    /// Sorted global labels; position `p` (1-based) is `vertices[p-1]`.
    pub vertices: Vec<u16>,
    /// Sub-blocks as position intervals `(start, end)`, 1-based inclusive.
    pub blocks: Vec<(u16, u16)>,
    /// Overlap size with the previous component in the union chain; 0 for
    /// the first component.
    pub overlap_with_prev: u16,
}

impl BlockComponent {
    pub fn len(&self) -> u16 {
        self.vertices.len() as u16
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn label(&self, pos: u16) -> u16 {
        self.vertices[pos as usize - 1]
    }

    pub fn labels(&self, start: u16, end: u16) -> Vec<u16> {
        (start..=end).map(|p| self.label(p)).collect()
    }
}

/// Decomposition of a union-of-block-adjacent complex: an ordered chain of
/// block components, consecutive components overlapping in `t` vertices with
/// `0 < t < m`, the overlap being a suffix of one sorted vertex list and a
/// prefix of the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    pub rows: u16,
    pub components: Vec<BlockComponent>,
}

fn block_components(cx: &SimplicialComplex) -> Result<Vec<BlockComponent>> {
    let m = cx.rows();
    let dec = clique_decomposition(cx);
    for c in &dec.cliques {
        if c.dim != m - 1 {
            return Err(Error::Structure(format!(
                "block structure needs all maximal cliques of dimension {}, found {:?} of dimension {}",
                m - 1,
                c.vertices,
                c.dim
            )));
        }
    }
    let mut cliques = dec.cliques;
    cliques.sort_by_key(|c| (c.vertices[0], *c.vertices.last().unwrap()));

    struct Open {
        vertices: Vec<u16>,
        blocks: Vec<(u16, u16)>,
    }
    let mut comps: Vec<Open> = Vec::new();
    'next: for c in &cliques {
        let w = &c.vertices;
        for comp in comps.iter_mut().rev() {
            let overlap: Vec<u16> =
                comp.vertices.iter().copied().filter(|v| w.contains(v)).collect();
            let t = overlap.len();
            if t == m as usize - 1
                && comp.vertices[comp.vertices.len() - t..] == overlap[..]
                && w[..t] == overlap[..]
            {
                let start = comp.vertices.len() - t + 1;
                comp.vertices.extend_from_slice(&w[t..]);
                comp.blocks.push((start as u16, comp.vertices.len() as u16));
                continue 'next;
            }
        }
        comps.push(Open { vertices: w.clone(), blocks: vec![(1, w.len() as u16)] });
    }
    Ok(comps
        .into_iter()
        .map(|o| BlockComponent { vertices: o.vertices, blocks: o.blocks, overlap_with_prev: 0 })
        .collect())
}

/// Chains block components into unions; entries of the result are the
/// top-level (forest) components, each a valid union chain.
fn union_chains(m: u16, comps: Vec<BlockComponent>) -> Vec<Vec<BlockComponent>> {
    let mut sorted = comps;
    sorted.sort_by_key(|c| (c.vertices[0], *c.vertices.last().unwrap()));
    let mut chains: Vec<Vec<BlockComponent>> = Vec::new();
    for mut comp in sorted {
        let attach = chains.last_mut().and_then(|chain| {
            let prev = chain.last().unwrap();
            let overlap: Vec<u16> = prev
                .vertices
                .iter()
                .copied()
                .filter(|v| comp.vertices.contains(v))
                .collect();
            let t = overlap.len();
            let m = m as usize;
            if t >= 1
                && t <= m.saturating_sub(2)
                && prev.vertices[prev.vertices.len() - t..] == overlap[..]
                && comp.vertices[..t] == overlap[..]
            {
                Some(t as u16)
            } else {
                None
            }
        });
        match attach {
            Some(t) => {
                comp.overlap_with_prev = t;
                chains.last_mut().unwrap().push(comp);
            }
            None => chains.push(vec![comp]),
        }
    }
    chains
}

/// Detects the union-of-block-adjacent structure of the whole complex.
///
/// Fails when the complex has facets of the wrong dimension, a clique that
/// does not chain, or more than one top-level chain.
pub fn block_structure(cx: &SimplicialComplex) -> Result<BlockStructure> {
    let comps = block_components(cx)?;
    let mut chains = union_chains(cx.rows(), comps);
    if chains.len() != 1 {
        let sizes: Vec<String> = chains
            .iter()
            .map(|c| format!("{:?}", c.first().unwrap().vertices))
            .collect();
        return Err(Error::Structure(format!(
            "complex is not a single union of block adjacent components; found {} unchained parts starting at {}",
            chains.len(),
            sizes.join(", ")
        )));
    }
    let components = chains.remove(0);
    let bs = BlockStructure { rows: cx.rows(), components };
    validate_coverage(cx, &bs)?;
    Ok(bs)
}

fn validate_coverage(cx: &SimplicialComplex, bs: &BlockStructure) -> Result<()> {
    let mut rebuilt: BTreeSet<Vec<u16>> = BTreeSet::new();
    for comp in &bs.components {
        for &(s, e) in &comp.blocks {
            for f in comp.labels(s, e).into_iter().combinations(cx.rows() as usize) {
                rebuilt.insert(f);
            }
        }
    }
    let facets: BTreeSet<Vec<u16>> = cx.facets().iter().cloned().collect();
    if rebuilt != facets {
        return Err(Error::Structure(
            "sub-blocks do not rebuild the facet set; complex is not block adjacent".into(),
        ));
    }
    Ok(())
}

/// A top-level component of a forest/composite split: the sub-complex plus
/// its own union-of-block-adjacent structure.
#[derive(Debug, Clone)]
pub struct ForestComponent {
    pub complex: SimplicialComplex,
    pub structure: BlockStructure,
}

/// Splits the complex into maximal union-of-block-adjacent components.
pub fn forest_components(cx: &SimplicialComplex) -> Result<Vec<ForestComponent>> {
    let comps = block_components(cx)?;
    let chains = union_chains(cx.rows(), comps);
    let mut out = Vec::with_capacity(chains.len());
    for chain in chains {
        let mut facets: Vec<Vec<u16>> = Vec::new();
        for comp in &chain {
            for &(s, e) in &comp.blocks {
                for f in comp.labels(s, e).into_iter().combinations(cx.rows() as usize) {
                    if !facets.contains(&f) {
                        facets.push(f);
                    }
                }
            }
        }
        let complex = SimplicialComplex::new(cx.rows(), facets)?;
        let structure = BlockStructure { rows: cx.rows(), components: chain };
        out.push(ForestComponent { complex, structure });
    }
    Ok(out)
}

/// Graph on components with edges for nonempty vertex-set intersections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub n: usize,
    /// Edges `(i, j)` with `i < j`, 0-based component indices.
    pub edges: Vec<(usize, usize)>,
    pub is_forest: bool,
    pub is_cactus: bool,
}

pub fn intersection_graph(components: &[SimplicialComplex]) -> IntersectionGraph {
    let n = components.len();
    let sets: Vec<BTreeSet<u16>> =
        components.iter().map(|c| c.vertices().iter().copied().collect()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if sets[i].intersection(&sets[j]).next().is_some() {
                edges.push((i, j));
            }
        }
    }
    let is_forest = forest_check(n, &edges);
    let is_cactus = cactus_check(n, &edges);
    IntersectionGraph { n, edges, is_forest, is_cactus }
}

fn forest_check(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Connected and every biconnected block is a single edge or a simple cycle.
fn cactus_check(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (id, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    // connectivity
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(w, _) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return false;
    }
    // biconnected blocks by edge DFS
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn dfs(
        v: usize,
        parent_edge: Option<usize>,
        adj: &[Vec<(usize, usize)>],
        disc: &mut [usize],
        low: &mut [usize],
        timer: &mut usize,
        edge_stack: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        edges: &[(usize, usize)],
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        for &(w, id) in &adj[v] {
            if Some(id) == parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push(id);
                dfs(w, Some(id), adj, disc, low, timer, edge_stack, blocks, edges);
                low[v] = low[v].min(low[w]);
                if low[w] >= disc[v] {
                    let mut block = Vec::new();
                    while let Some(&top) = edge_stack.last() {
                        edge_stack.pop();
                        block.push(top);
                        if top == id {
                            break;
                        }
                    }
                    blocks.push(block);
                }
            } else if disc[w] < disc[v] {
                edge_stack.push(id);
                low[v] = low[v].min(disc[w]);
            }
        }
    }
    for v in 0..n {
        if disc[v] == usize::MAX {
            dfs(v, None, &adj, &mut disc, &mut low, &mut timer, &mut edge_stack, &mut blocks, edges);
        }
    }
    for block in &blocks {
        if block.len() == 1 {
            continue;
        }
        let mut verts: BTreeSet<usize> = BTreeSet::new();
        for &e in block {
            verts.insert(edges[e].0);
            verts.insert(edges[e].1);
        }
        if block.len() != verts.len() {
            return false;
        }
    }
    true
}

/// Detail of the condition (c) evaluation for one component pair.
#[derive(Debug, Clone)]
pub struct PairConditionDetail {
    pub i: usize,
    pub j: usize,
    pub shared: Vec<u16>,
    pub holds: bool,
    /// Which orientation/alternative/offset satisfied the inclusion.
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ForestConditionReport {
    pub cond_a: bool,
    pub cond_b: bool,
    pub cond_c: bool,
    pub pairs: Vec<PairConditionDetail>,
    pub failing_triples: Vec<(usize, usize, usize)>,
    pub failing_pairs_b: Vec<(usize, usize)>,
}

impl ForestConditionReport {
    pub fn all_hold(&self) -> bool {
        self.cond_a && self.cond_b && self.cond_c
    }
}

/// Evaluates conditions (a), (b), (c) on the top-level components.
///
/// Positions are computed inside each component's sorted vertex list; both
/// orientations of every pair and both alternatives of (c) are tried for
/// each offset `0 <= t <= m-3`.
pub fn check_forest_conditions(components: &[ForestComponent]) -> ForestConditionReport {
    let n = components.len();
    let sets: Vec<Vec<u16>> =
        components.iter().map(|c| c.complex.vertices().to_vec()).collect();
    let m = components.first().map(|c| c.complex.rows()).unwrap_or(2) as isize;

    let mut failing_triples = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let common = sets[i]
                    .iter()
                    .filter(|v| sets[j].contains(v) && sets[k].contains(v))
                    .count();
                if common > 0 {
                    failing_triples.push((i, j, k));
                }
            }
        }
    }

    let mut failing_pairs_b = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let shared: Vec<u16> =
                sets[i].iter().copied().filter(|v| sets[j].contains(v)).collect();
            if shared.len() > 1 {
                failing_pairs_b.push((i, j));
            }
            if shared.is_empty() {
                continue;
            }
            let (holds, witness) = condition_c_pair(&sets[i], &sets[j], &shared, m, i, j);
            pairs.push(PairConditionDetail { i, j, shared, holds, witness });
        }
    }

    ForestConditionReport {
        cond_a: failing_triples.is_empty(),
        cond_b: failing_pairs_b.is_empty(),
        cond_c: pairs.iter().all(|p| p.holds),
        pairs,
        failing_triples,
        failing_pairs_b,
    }
}

fn condition_c_pair(
    vi: &[u16],
    vj: &[u16],
    shared: &[u16],
    m: isize,
    i: usize,
    j: usize,
) -> (bool, Option<String>) {
    if shared.len() != 1 {
        return (false, None);
    }
    let v = shared[0];
    let orientations = [(vi, vj, i, j), (vj, vi, j, i)];
    for (a, b, ai, bi) in orientations {
        let pa = a.iter().position(|&x| x == v).unwrap() as isize + 1;
        let pb = b.iter().position(|&x| x == v).unwrap() as isize + 1;
        let (ua, va_) = (1isize, a.len() as isize);
        let (ub, vb_) = (1isize, b.len() as isize);
        for t in 0..=(m - 3).max(-1) {
            if t < 0 {
                break;
            }
            // alternative 1: v = u_i + t and pos_j in [v_j + t - (m-3), v_j]
            if pa == ua + t && pb >= vb_ + t - (m - 3) && pb <= vb_ {
                return (
                    true,
                    Some(format!("component {ai}: first-end offset t={t}; component {bi}: tail window")),
                );
            }
            // alternative 2: v = v_i - t and pos_j in [u_j, u_j + m - t - 3]
            if pa == va_ - t && pb >= ub && pb <= ub + m - t - 3 {
                return (
                    true,
                    Some(format!("component {ai}: last-end offset t={t}; component {bi}: head window")),
                );
            }
        }
    }
    (false, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(rows: u16, facets: &[&[u16]]) -> SimplicialComplex {
        SimplicialComplex::new(rows, facets.iter().map(|f| f.to_vec()).collect()).unwrap()
    }

    fn fig1b() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[2, 3, 4], &[4, 5, 6], &[6, 7]])
    }

    fn fig1c() -> SimplicialComplex {
        cx(3, &[&[1, 2], &[1, 3, 4], &[4, 5, 6], &[5, 7]])
    }

    #[test]
    fn rejects_nested_facets() {
        assert!(SimplicialComplex::new(3, vec![vec![1, 2], vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn clique_decomposition_section_example() {
        // facets {123,124,134,234,345,567,78,89,79} on [9]
        let d = cx(
            3,
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 4],
                &[2, 3, 4],
                &[3, 4, 5],
                &[5, 6, 7],
                &[7, 8],
                &[8, 9],
                &[7, 9],
            ],
        );
        let dec = clique_decomposition(&d);
        let got: Vec<(Vec<u16>, u16)> =
            dec.cliques.iter().map(|c| (c.vertices.clone(), c.dim)).collect();
        assert_eq!(
            got,
            vec![
                (vec![1, 2, 3, 4], 2),
                (vec![3, 4, 5], 2),
                (vec![5, 6, 7], 2),
                (vec![7, 8, 9], 1),
            ]
        );
    }

    #[test]
    fn clique_decomposition_single_simplex() {
        let d = cx(3, &[&[2, 5, 6]]);
        let dec = clique_decomposition(&d);
        assert_eq!(dec.cliques.len(), 1);
        assert_eq!(dec.cliques[0].vertices, vec![2, 5, 6]);
    }

    #[test]
    fn clique_decomposition_fig1b() {
        let dec = clique_decomposition(&fig1b());
        let got: Vec<(Vec<u16>, u16)> =
            dec.cliques.iter().map(|c| (c.vertices.clone(), c.dim)).collect();
        assert_eq!(
            got,
            vec![
                (vec![1, 2], 1),
                (vec![2, 3, 4], 2),
                (vec![4, 5, 6], 2),
                (vec![6, 7], 1),
            ]
        );
    }

    #[test]
    fn closedness_of_figure_labelings() {
        let b = fig1b();
        assert!(is_closed(&b, &clique_decomposition(&b)).closed);

        let c = fig1c();
        let report = is_closed(&c, &clique_decomposition(&c));
        assert!(!report.closed);
        let v = report.violation.unwrap();
        let pair = (v.facet_b.clone(), v.facet_c.clone());
        let named = [
            (vec![1u16, 2], vec![1u16, 3, 4]),
            (vec![5u16, 7], vec![4u16, 5, 6]),
        ];
        assert!(named.contains(&pair), "unexpected witness {pair:?}");
    }

    #[test]
    fn full_skeleton_is_closed() {
        // single clique: condition vacuous
        let d = cx(3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert!(is_closed(&d, &clique_decomposition(&d)).closed);
    }

    #[test]
    fn relabeling_search_recovers_closedness() {
        let found = find_closed_labeling(&fig1c(), 9).unwrap();
        let map = found.expect("a closed labeling exists");
        let relabeled = fig1c().relabel(&map).unwrap();
        assert!(is_closed(&relabeled, &clique_decomposition(&relabeled)).closed);
    }

    #[test]
    fn identity_labeling_found_first_for_closed_input() {
        let map = find_closed_labeling(&fig1b(), 9).unwrap().unwrap();
        assert!(map.iter().all(|(k, v)| k == v));
    }

    #[test]
    fn four_cycle_has_no_closed_labeling() {
        let d = SimplicialComplex::new(
            2,
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
        )
        .unwrap();
        assert!(find_closed_labeling(&d, 9).unwrap().is_none());
    }

    #[test]
    fn labeling_bound_is_enforced() {
        match find_closed_labeling(&fig1b(), 3) {
            Err(Error::Resource { limit, .. }) => assert_eq!(limit, 3),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn block_structure_single_component() {
        let d = cx(
            3,
            &[
                &[1, 2, 3],
                &[2, 3, 4],
                &[2, 3, 5],
                &[2, 4, 5],
                &[3, 4, 5],
                &[4, 5, 6],
            ],
        );
        let bs = block_structure(&d).unwrap();
        assert_eq!(bs.components.len(), 1);
        let comp = &bs.components[0];
        assert_eq!(comp.vertices, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(comp.blocks, vec![(1, 3), (2, 5), (4, 6)]);
    }

    #[test]
    fn block_structure_union_example() {
        let d = cx(
            3,
            &[
                &[1, 2, 3],
                &[3, 4, 5],
                &[4, 5, 6],
                &[4, 6, 7],
                &[4, 5, 7],
                &[5, 6, 7],
                &[6, 7, 8],
                &[7, 8, 9],
            ],
        );
        let bs = block_structure(&d).unwrap();
        assert_eq!(bs.components.len(), 2);
        assert_eq!(bs.components[0].vertices, vec![1, 2, 3]);
        assert_eq!(bs.components[1].vertices, vec![3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(bs.components[1].overlap_with_prev, 1);
    }

    #[test]
    fn block_structure_noncontiguous_labels() {
        let d = cx(4, &[&[4, 6, 7, 8], &[6, 7, 8, 9]]);
        let bs = block_structure(&d).unwrap();
        assert_eq!(bs.components.len(), 1);
        let comp = &bs.components[0];
        assert_eq!(comp.vertices, vec![4, 6, 7, 8, 9]);
        assert_eq!(comp.blocks, vec![(1, 4), (2, 5)]);
        // overlap of the two sub-blocks carries global labels {6,7,8}
        assert_eq!(comp.labels(2, 4), vec![6, 7, 8]);
    }

    fn ex2_components() -> Vec<ForestComponent> {
        let d = cx(
            4,
            &[
                &[1, 2, 3, 4],
                &[2, 3, 4, 5],
                &[4, 6, 7, 8],
                &[6, 7, 8, 9],
                &[5, 9, 10, 11],
            ],
        );
        forest_components(&d).unwrap()
    }

    #[test]
    fn forest_split_matches_structure() {
        let comps = ex2_components();
        let verts: Vec<Vec<u16>> =
            comps.iter().map(|c| c.complex.vertices().to_vec()).collect();
        assert_eq!(
            verts,
            vec![vec![1, 2, 3, 4, 5], vec![4, 6, 7, 8, 9], vec![5, 9, 10, 11]]
        );
    }

    #[test]
    fn intersection_graph_reports_literal_edges() {
        let comps = ex2_components();
        let complexes: Vec<SimplicialComplex> =
            comps.iter().map(|c| c.complex.clone()).collect();
        let g = intersection_graph(&complexes);
        // literal adjacency: {4}, {5}, {9} all nonempty, a triangle
        assert_eq!(g.edges, vec![(0, 1), (0, 2), (1, 2)]);
        assert!(!g.is_forest);
        assert!(g.is_cactus);
    }

    #[test]
    fn intersection_graph_cactus_example() {
        let components: Vec<SimplicialComplex> = vec![
            cx(3, &[&[1, 2, 3], &[2, 3, 4]]),
            cx(3, &[&[4, 5, 6], &[5, 6, 7]]),
            cx(3, &[&[3, 7, 8], &[7, 8, 9]]),
            cx(3, &[&[9, 10, 11], &[9, 10, 12], &[9, 11, 12], &[10, 11, 12]]),
        ];
        let g = intersection_graph(&components);
        assert_eq!(g.edges, vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert!(g.is_cactus);
        assert!(!g.is_forest);
    }

    #[test]
    fn single_component_graph_is_forest() {
        let g = intersection_graph(&[fig1b()]);
        assert_eq!(g.n, 1);
        assert!(g.edges.is_empty());
        assert!(g.is_forest);
    }

    #[test]
    fn forest_conditions_on_ex2() {
        let comps = ex2_components();
        let report = check_forest_conditions(&comps);
        assert!(report.cond_a);
        assert!(report.cond_b);
        // all three incidences satisfy (c), including the {9} pair
        assert!(report.cond_c, "details: {:?}", report.pairs);
        assert_eq!(report.pairs.len(), 3);
    }

    #[test]
    fn forest_conditions_vacuous_for_disjoint() {
        let comps = vec![
            ForestComponent {
                complex: cx(3, &[&[1, 2, 3]]),
                structure: block_structure(&cx(3, &[&[1, 2, 3]])).unwrap(),
            },
            ForestComponent {
                complex: cx(3, &[&[4, 5, 6]]),
                structure: block_structure(&cx(3, &[&[4, 5, 6]])).unwrap(),
            },
        ];
        let report = check_forest_conditions(&comps);
        assert!(report.all_hold());
        assert!(report.pairs.is_empty());
    }

    #[test]
    fn block_structure_rejects_nonpure() {
        assert!(block_structure(&fig1b()).is_err());
    }
}

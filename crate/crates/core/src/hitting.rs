//! Independent-filled-hitting sets: edge sets meeting every filled
//! triangle with no two edges on a common face. All constructions take the
//! primal edges of a perfect matching of the dual graph, which has exactly
//! one edge on each face.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{classify_triangles, induced, split_at_triangle, Edge, PlanarEmbedding, TriangleReport};
use crate::matching::{min_weight_perfect_matching, perfect_matching};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSet {
    /// Sorted.
    pub edges: Vec<Edge>,
    pub e_o: Edge,
}

impl HittingSet {
    fn new(edges: BTreeSet<Edge>, e_o: Edge) -> HittingSet {
        HittingSet { edges: edges.into_iter().collect(), e_o }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The edges other than `e_o`.
    pub fn interior(&self) -> Vec<Edge> {
        self.edges.iter().copied().filter(|&e| e != self.e_o).collect()
    }

    /// Hitting, independent, `e_o` on the outer face and no other outer edge.
    pub fn validate(&self, emb: &PlanarEmbedding) -> Result<()> {
        let report = classify_triangles(emb)?;
        self.validate_with(emb, &report)
    }

    pub fn validate_with(&self, emb: &PlanarEmbedding, report: &TriangleReport) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidEdgeSet(m));
        let set: HashSet<Edge> = self.edges.iter().copied().collect();
        if let Some(t) = report.filled().find(|t| t.edges().iter().all(|e| !set.contains(e))) {
            return bad(format!("filled triangle {:?} not hit", t.vertices));
        }
        for f in &emb.faces().cycles {
            let k = (0..f.len()).filter(|&i| set.contains(&Edge::new(f[i], f[(i + 1) % f.len()]))).count();
            if k > 1 {
                return bad(format!("face {f:?} holds {k} edges"));
            }
        }
        if !set.contains(&self.e_o) || !emb.is_outer_edge(self.e_o) {
            return bad("e_o must be an outer edge of the set".into());
        }
        if let Some(e) = self.interior().into_iter().find(|&e| emb.is_outer_edge(e)) {
            return bad(format!("second outer edge ({}, {})", e.0, e.1));
        }
        Ok(())
    }

    /// Filled triangles with exactly one edge in the set.
    pub fn exactly_one_per_filled(&self, report: &TriangleReport) -> bool {
        let set: HashSet<Edge> = self.edges.iter().copied().collect();
        report.filled().all(|t| t.edges().iter().filter(|e| set.contains(e)).count() == 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualLink {
    pub faces: (usize, usize),
    pub edge: Edge,
    /// 1 if the primal edge lies on a filled triangle.
    pub weight: i64,
}

/// One node per face, one link per primal edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub faces: Vec<Vec<usize>>,
    pub outer: usize,
    pub links: Vec<DualLink>,
}

impl DualGraph {
    pub fn new(emb: &PlanarEmbedding, filled_edges: &[Edge]) -> DualGraph {
        let faces = emb.faces();
        let filled: HashSet<Edge> = filled_edges.iter().copied().collect();
        let links = emb
            .edges()
            .into_iter()
            .map(|e| DualLink {
                faces: (faces.left_of(emb, e.0, e.1), faces.left_of(emb, e.1, e.0)),
                edge: e,
                weight: filled.contains(&e) as i64,
            })
            .collect();
        DualGraph { outer: faces.outer, faces: faces.cycles, links }
    }

    pub fn node_count(&self) -> usize {
        self.faces.len()
    }

    pub fn link_of(&self, e: Edge) -> Option<usize> {
        self.links.binary_search_by(|l| l.edge.cmp(&e)).ok()
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.links.iter().map(|l| l.faces).collect()
    }

    /// Each node covered exactly once by the links `m`.
    pub fn is_perfect(&self, m: &[usize]) -> bool {
        let mut cover = vec![0; self.node_count()];
        for &k in m {
            cover[self.links[k].faces.0] += 1;
            cover[self.links[k].faces.1] += 1;
        }
        cover.iter().all(|&c| c == 1)
    }
}

/// A perfect matching of the dual, as sorted link indices.
pub fn dual_perfect_matching(dual: &DualGraph) -> Result<Vec<usize>> {
    perfect_matching(dual.node_count(), &dual.pairs())
        .ok_or_else(|| Error::ConstructionNotFound("dual graph has no perfect matching".into()))
}

/// Perfect matching of the dual without the nodes `a` and `b`, as links
/// of the full dual.
fn matching_avoiding(dual: &DualGraph, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = dual.node_count();
    let mut local = vec![usize::MAX; n];
    let mut next = 0;
    for (v, slot) in local.iter_mut().enumerate() {
        if v != a && v != b {
            *slot = next;
            next += 1;
        }
    }
    let (keep, pairs): (Vec<usize>, Vec<(usize, usize)>) = dual
        .links
        .iter()
        .enumerate()
        .filter(|(_, l)| ![a, b].contains(&l.faces.0) && ![a, b].contains(&l.faces.1))
        .map(|(k, l)| (k, (local[l.faces.0], local[l.faces.1])))
        .unzip();
    perfect_matching(next, &pairs).map(|m| m.into_iter().map(|i| keep[i]).collect())
}

/// Perfect matching containing link `forced`: `m` switched along the
/// alternating cycle through `forced` of its symmetric difference with
/// any perfect matching that uses `forced`.
pub fn force_edge_in_matching(dual: &DualGraph, m: &[usize], forced: usize) -> Result<Vec<usize>> {
    if m.contains(&forced) {
        return Ok(m.to_vec());
    }
    let (a, b) = dual.links[forced].faces;
    let mut other = matching_avoiding(dual, a, b)
        .ok_or_else(|| Error::ConstructionNotFound("no perfect matching through the forced link".into()))?;
    other.push(forced);
    let mine: HashSet<usize> = m.iter().copied().collect();
    let theirs: HashSet<usize> = other.iter().copied().collect();
    let diff: Vec<usize> = mine.symmetric_difference(&theirs).copied().collect();
    let mut adj = vec![Vec::new(); dual.node_count()];
    for &k in &diff {
        let (x, y) = dual.links[k].faces;
        adj[x].push(k);
        adj[y].push(k);
    }
    // Walk the cycle through `forced`; every node on it has degree 2.
    let mut cycle = vec![forced];
    let mut node = b;
    let mut last = forced;
    while node != a {
        let &k = adj[node].iter().find(|&&k| k != last).expect("alternating cycle is closed");
        cycle.push(k);
        let (x, y) = dual.links[k].faces;
        node = if x == node { y } else { x };
        last = k;
    }
    let cycle: HashSet<usize> = cycle.into_iter().collect();
    let mut out: Vec<usize> = mine.symmetric_difference(&cycle).copied().collect();
    out.sort_unstable();
    debug_assert!(dual.is_perfect(&out));
    Ok(out)
}

fn outer_edge_check(emb: &PlanarEmbedding, e_o: Edge) -> Result<()> {
    if emb.n() < 4 {
        return Err(Error::TooSmall { n: emb.n(), min: 4 });
    }
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    if !emb.is_outer_edge(e_o) {
        return Err(Error::NotOuterEdge(e_o.0, e_o.1));
    }
    Ok(())
}

/// Recursion over maximal separating triangles: match the dual of the
/// skeleton through `e_o`, then recurse into each maximal separating
/// triangle with its matched edge prescribed. Every filled triangle ends
/// up with exactly one edge in the set, so the size is at most f_G.
pub fn recursive_hitting_set(emb: &PlanarEmbedding, e_o: Edge) -> Result<HittingSet> {
    outer_edge_check(emb, e_o)?;
    let mut out = BTreeSet::new();
    recurse(emb, e_o, &mut out, &|v| v)?;
    let hs = HittingSet::new(out, e_o);
    hs.validate(emb)?;
    Ok(hs)
}

fn recurse(emb: &PlanarEmbedding, e_o: Edge, out: &mut BTreeSet<Edge>, to_root: &dyn Fn(usize) -> usize) -> Result<()> {
    out.insert(Edge::new(to_root(e_o.0), to_root(e_o.1)));
    let report = classify_triangles(emb)?;
    let sep: Vec<_> = report.separating().collect();
    // Interiors are laminar, so maximal means not inside a larger one.
    let maximal: Vec<_> = sep
        .iter()
        .filter(|t| {
            !sep.iter().any(|s| s.inside.len() > t.inside.len() && t.inside.iter().all(|v| s.inside.binary_search(v).is_ok()))
        })
        .collect();
    if maximal.is_empty() {
        return Ok(());
    }
    let removed: HashSet<usize> = maximal.iter().flat_map(|t| t.inside.iter().copied()).collect();
    let keep: Vec<usize> = (0..emb.n()).filter(|v| !removed.contains(v)).collect();
    let o = emb.outer_face();
    let skel = induced(emb, &keep, (o[0], o[1]))?;
    let dual = DualGraph::new(&skel.emb, &[]);
    let local = |v: usize| skel.from_parent(v).expect("skeleton vertex");
    let forced = dual.link_of(Edge::new(local(e_o.0), local(e_o.1))).expect("outer edge is in the skeleton");
    let m = force_edge_in_matching(&dual, &dual_perfect_matching(&dual)?, forced)?;
    let matched: HashSet<Edge> = m.iter().map(|&k| dual.links[k].edge).collect();
    for t in maximal {
        let hits: Vec<Edge> = t
            .edges()
            .into_iter()
            .filter(|e| matched.contains(&Edge::new(local(e.0), local(e.1))))
            .collect();
        if hits.len() != 1 {
            return Err(Error::ConstructionNotFound(format!("face {:?} of the skeleton matched {} times", t.vertices, hits.len())));
        }
        let (inner, _) = split_at_triangle(emb, t.vertices)?;
        let li = |v: usize| inner.from_parent(v).expect("triangle vertex");
        let e_i = Edge::new(li(hits[0].0), li(hits[0].1));
        let map = |v: usize| to_root(inner.to_parent[v]);
        recurse(&inner.emb, e_i, out, &map)?;
    }
    Ok(())
}

/// Weight-1 edges of a minimum-weight perfect dual matching through `e_o`,
/// where weight 1 marks edges on filled triangles.
pub fn min_weight_hitting_set(emb: &PlanarEmbedding, e_o: Edge) -> Result<HittingSet> {
    outer_edge_check(emb, e_o)?;
    let report = classify_triangles(emb)?;
    let dual = DualGraph::new(emb, &report.filled_edges);
    let forced = dual.link_of(e_o).expect("edge exists");
    let (a, b) = dual.links[forced].faces;
    let n = dual.node_count();
    let mut local = vec![usize::MAX; n];
    let mut next = 0;
    for (v, slot) in local.iter_mut().enumerate() {
        if v != a && v != b {
            *slot = next;
            next += 1;
        }
    }
    let (keep, edges): (Vec<usize>, Vec<(usize, usize, i64)>) = dual
        .links
        .iter()
        .enumerate()
        .filter(|(_, l)| ![a, b].contains(&l.faces.0) && ![a, b].contains(&l.faces.1))
        .map(|(k, l)| (k, (local[l.faces.0], local[l.faces.1], l.weight)))
        .unzip();
    let m = min_weight_perfect_matching(next, &edges)
        .ok_or_else(|| Error::ConstructionNotFound("no perfect dual matching through e_o".into()))?;
    let mut set: BTreeSet<Edge> = m.into_iter().map(|i| dual.links[keep[i]]).filter(|l| l.weight == 1).map(|l| l.edge).collect();
    set.insert(e_o);
    let hs = HittingSet::new(set, e_o);
    hs.validate_with(emb, &report)?;
    Ok(hs)
}

/// Minimum-weight hitting set over the three choices of `e_o`, ties to the
/// smaller edge. Only this choice is guaranteed to meet (2n - 5) / 3.
pub fn best_min_weight_hitting_set(emb: &PlanarEmbedding) -> Result<HittingSet> {
    let mut best: Option<HittingSet> = None;
    for e in emb.outer_edges() {
        let hs = min_weight_hitting_set(emb, e)?;
        if best.as_ref().is_none_or(|b| hs.len() < b.len()) {
            best = Some(hs);
        }
    }
    best.ok_or(Error::NotTriangulated)
}

/// At most 2n - 5 edges lie on filled triangles.
pub fn filled_edge_bound(n: usize) -> usize {
    2 * n - 5
}

//! Schnyder woods from a canonical order, the vertex-counting weak
//! barycentric representation, and the twisted non-aligned drawing.

use std::collections::{HashSet, VecDeque};

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::graph::{canonical_order, Edge, PlanarEmbedding};

/// Triples `coords[v]` with `coords[v][0] + coords[v][1] + coords[v][2] == sum`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakBarycentric {
    pub coords: Vec<[i64; 3]>,
    pub sum: i64,
}

impl WeakBarycentric {
    pub fn max_entry(&self) -> i64 {
        self.coords.iter().flat_map(|t| t.iter().copied()).max().unwrap_or(0)
    }
}

/// Parent pointers of the three trees; `None` at the roots `a_0, a_1, a_2`
/// and for the other two outer vertices.
pub struct SchnyderWood {
    pub roots: [usize; 3],
    pub parent: [Vec<Option<usize>>; 3],
}

/// Tree 0 points to leftmost predecessors (root v_1), tree 1 to rightmost
/// predecessors (root v_2), tree 2 from middle predecessors to the vertex
/// covering them (root v_n).
pub fn schnyder_wood(emb: &PlanarEmbedding) -> Result<SchnyderWood> {
    let co = canonical_order(emb)?;
    let n = emb.n();
    let roots = [co.order[0], co.order[1], co.order[n - 1]];
    let mut parent = [vec![None; n], vec![None; n], vec![None; n]];
    for k in 2..n {
        let v = co.order[k];
        let p = &co.preds[k];
        if k < n - 1 {
            parent[0][v] = Some(p[0]);
            parent[1][v] = Some(p[p.len() - 1]);
        }
        for &c in &p[1..p.len() - 1] {
            parent[2][c] = Some(v);
        }
    }
    Ok(SchnyderWood { roots, parent })
}

impl SchnyderWood {
    fn path(&self, i: usize, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[i][cur] {
            out.push(p);
            cur = p;
        }
        out
    }
}

/// Vertex-counting representation with sum n - 1: for inner `v`,
/// `p_i(v)` counts the vertices strictly inside the region opposite `a_i`
/// plus those of the path towards `a_{i+1}` other than `v`. The root `a_i`
/// gets `n - 2` at index i, 1 at index i + 1 and 0 at index i + 2.
pub fn schnyder_rep(emb: &PlanarEmbedding) -> Result<WeakBarycentric> {
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    let n = emb.n();
    let sum = n as i64 - 1;
    if n == 3 {
        let o = emb.outer_face();
        let mut coords = vec![[0; 3]; 3];
        let co = canonical_order(emb)?;
        for (i, &a) in [co.order[0], co.order[1], co.order[2]].iter().enumerate() {
            coords[a][i] = 1;
            coords[a][(i + 1) % 3] = 1;
        }
        debug_assert_eq!(o.len(), 3);
        return Ok(WeakBarycentric { coords, sum });
    }
    let wood = schnyder_wood(emb)?;
    let faces = emb.faces();
    let mut coords = vec![[0i64; 3]; n];
    for (i, &a) in wood.roots.iter().enumerate() {
        coords[a][i] = n as i64 - 2;
        coords[a][(i + 1) % 3] = 1;
    }
    for v in 0..n {
        if wood.roots.contains(&v) {
            continue;
        }
        let paths: Vec<Vec<usize>> = (0..3).map(|i| wood.path(i, v)).collect();
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let region = region_vertices(emb, &faces, &wood, v, i, &paths[j], &paths[k]);
            let boundary: HashSet<usize> = paths[j].iter().chain(paths[k].iter()).copied().collect();
            let interior = region.iter().filter(|w| !boundary.contains(w)).count() as i64;
            coords[v][i] = interior + paths[j].len() as i64 - 1;
        }
    }
    Ok(WeakBarycentric { coords, sum })
}

/// Vertices of the closed region bounded by `pj`, `pk` and the outer edge
/// `a_j a_k`, found by a face search that starts in the sector at `v`
/// between the two paths.
fn region_vertices(
    emb: &PlanarEmbedding,
    faces: &crate::graph::Faces,
    wood: &SchnyderWood,
    v: usize,
    i: usize,
    pj: &[usize],
    pk: &[usize],
) -> HashSet<usize> {
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let mut blocked: HashSet<Edge> = HashSet::new();
    for p in [pj, pk] {
        for w in p.windows(2) {
            blocked.insert(Edge::new(w[0], w[1]));
        }
    }
    blocked.insert(Edge::new(wood.roots[j], wood.roots[k]));
    let out_i = wood.parent[i][v].unwrap();
    let out_j = pj[1];
    let out_k = pk[1];
    // Walk counterclockwise from out_j; if out_i comes before out_k the
    // wanted sector runs from out_k to out_j instead.
    let mut w = emb.ccw_next(v, out_j);
    let mut hit_i = false;
    while w != out_k {
        if w == out_i {
            hit_i = true;
        }
        w = emb.ccw_next(v, w);
    }
    let start = if hit_i { faces.left_of(emb, v, out_k) } else { faces.left_of(emb, v, out_j) };
    let mut seen = vec![false; faces.len()];
    seen[start] = true;
    seen[faces.outer] = true;
    let mut queue = VecDeque::from([start]);
    let mut verts = HashSet::new();
    while let Some(f) = queue.pop_front() {
        let cyc = &faces.cycles[f];
        for t in 0..cyc.len() {
            let (x, y) = (cyc[t], cyc[(t + 1) % cyc.len()]);
            verts.insert(x);
            if blocked.contains(&Edge::new(x, y)) {
                continue;
            }
            let g = faces.left_of(emb, y, x);
            if !seen[g] {
                seen[g] = true;
                queue.push_back(g);
            }
        }
    }
    verts
}

/// `p'_i = big_n * p_i + p_{i+1}`; requires `big_n >= 1 + max entry`.
pub fn twist(rep: &WeakBarycentric, big_n: i64) -> Result<WeakBarycentric> {
    let min = 1 + rep.max_entry();
    if big_n < min {
        return Err(Error::ThresholdTooSmall { got: big_n, min });
    }
    let coords = rep
        .coords
        .iter()
        .map(|p| [0, 1, 2].map(|i| big_n * p[i] + p[(i + 1) % 3]))
        .collect();
    Ok(WeakBarycentric { coords, sum: (big_n + 1) * rep.sum })
}

/// Non-aligned straight-line drawing at `(p'_0, p'_1)` with multiplier
/// n - 1, inside `[1, n(n-2)]^2`.
pub fn schnyder_drawing(emb: &PlanarEmbedding) -> Result<Drawing> {
    let rep = schnyder_rep(emb)?;
    let n = emb.n() as i64;
    let tw = twist(&rep, n - 1)?;
    let coords = tw.coords.iter().map(|p| Point::int(p[0], p[1])).collect();
    Ok(Drawing::straight(coords, &emb.edges(), "schnyder"))
}

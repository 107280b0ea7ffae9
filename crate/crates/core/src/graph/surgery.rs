use std::collections::BTreeSet;

use super::triangles::inside_of;
use super::triangulate::insert_after;
use super::{Edge, PlanarEmbedding};
use crate::error::{Error, Result};

/// A piece of a larger embedding with the map back to parent ids.
#[derive(Clone, Debug)]
pub struct SubEmbedding {
    pub emb: PlanarEmbedding,
    pub to_parent: Vec<usize>,
}

impl SubEmbedding {
    pub fn from_parent(&self, v: usize) -> Option<usize> {
        self.to_parent.iter().position(|&p| p == v)
    }
}

/// Subgraph induced by `keep` whose outer face is the face left of the
/// parent dart `outer_dart` (both endpoints must be kept).
pub fn induced(
    emb: &PlanarEmbedding,
    keep: &[usize],
    outer_dart: (usize, usize),
) -> Result<SubEmbedding> {
    let keep: Vec<usize> = keep.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let mut local = vec![usize::MAX; emb.n()];
    for (i, &v) in keep.iter().enumerate() {
        local[v] = i;
    }
    let (a, b) = outer_dart;
    if local[a] == usize::MAX || local[b] == usize::MAX || !emb.has_edge(a, b) {
        return Err(Error::Precondition("outer dart must be a kept edge".into()));
    }
    let rotations: Vec<Vec<usize>> = keep
        .iter()
        .map(|&v| {
            emb.rotation(v).iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect()
        })
        .collect();
    let tmp = PlanarEmbedding::from_parts_unchecked(rotations, Vec::new());
    let (la, lb) = (local[a], local[b]);
    let mut cycle = vec![la];
    let (mut u, mut v) = (la, lb);
    while v != la {
        cycle.push(v);
        let w = tmp.face_successor(u, v);
        u = v;
        v = w;
    }
    let sub = PlanarEmbedding::new(tmp.rotations().to_vec(), cycle)?;
    Ok(SubEmbedding { emb: sub, to_parent: keep })
}

/// Splits a triangulation at a separating triangle into the closed inside
/// (outer face `t`) and the outside (where `t` becomes an inner face).
pub fn split_at_triangle(
    emb: &PlanarEmbedding,
    t: [usize; 3],
) -> Result<(SubEmbedding, SubEmbedding)> {
    let mut t = t;
    t.sort_unstable();
    let [a, b, c] = t;
    if !(emb.has_edge(a, b) && emb.has_edge(b, c) && emb.has_edge(a, c)) {
        return Err(Error::NotSeparating(t));
    }
    let inside = inside_of(emb, t);
    if inside.is_empty() || inside.len() + 3 == emb.n() {
        return Err(Error::NotSeparating(t));
    }
    let is_inside = |v: usize| inside.binary_search(&v).is_ok();
    let dart = if is_inside(emb.face_successor(a, b)) { (b, a) } else { (a, b) };
    let mut keep_in = inside.clone();
    keep_in.extend_from_slice(&t);
    let inner = induced(emb, &keep_in, dart)?;
    let keep_out: Vec<usize> = (0..emb.n()).filter(|&v| !is_inside(v)).collect();
    let o = emb.outer_face();
    let outer = induced(emb, &keep_out, (o[0], o[1]))?;
    Ok((inner, outer))
}

/// Result of subdividing edges: `vx[i] = (e, x_e)` sorted by edge.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub emb: PlanarEmbedding,
    pub vx: Vec<(Edge, usize)>,
}

/// Replaces every interior edge `(a, b)` of `es` by a path `a - x - b` and
/// joins `x` to the two apexes, so each `x` has degree 4.
pub fn subdivide_and_retriangulate(emb: &PlanarEmbedding, es: &[Edge]) -> Result<Subdivision> {
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    let set: BTreeSet<Edge> = es.iter().copied().collect();
    if set.len() != es.len() {
        return Err(Error::InvalidEdgeSet("duplicate edge".into()));
    }
    for &e in &set {
        if !emb.has_edge(e.0, e.1) {
            return Err(Error::MissingEdge(e.0, e.1));
        }
        if emb.is_outer_edge(e) {
            return Err(Error::InvalidEdgeSet(format!("edge ({}, {}) is on the outer face", e.0, e.1)));
        }
    }
    for f in &emb.faces().cycles {
        let hits = (0..3).filter(|&i| set.contains(&Edge::new(f[i], f[(i + 1) % 3]))).count();
        if hits > 1 {
            return Err(Error::InvalidEdgeSet(format!("face {f:?} holds {hits} edges of the set")));
        }
    }
    let mut rot = emb.rotations().to_vec();
    let mut vx = Vec::with_capacity(set.len());
    for &Edge(a, b) in &set {
        let tmp = PlanarEmbedding::from_parts_unchecked(rot, Vec::new());
        let c = tmp.face_successor(a, b);
        let d = tmp.face_successor(b, a);
        rot = tmp.rotations().to_vec();
        let x = rot.len();
        for (p, q) in [(a, b), (b, a)] {
            let i = rot[p].iter().position(|&w| w == q).unwrap();
            rot[p][i] = x;
        }
        rot.push(vec![b, c, a, d]);
        insert_after(&mut rot, c, a, x);
        insert_after(&mut rot, d, b, x);
        vx.push((Edge(a, b), x));
    }
    let out = PlanarEmbedding::new(rot, emb.outer_face().to_vec())?;
    Ok(Subdivision { emb: out, vx })
}

/// Replaces the interior edge `e` by the other diagonal of its quadrilateral.
pub fn flip_edge(emb: &PlanarEmbedding, e: Edge) -> Result<PlanarEmbedding> {
    if !emb.has_edge(e.0, e.1) {
        return Err(Error::MissingEdge(e.0, e.1));
    }
    if emb.is_outer_edge(e) {
        return Err(Error::Precondition("cannot flip an outer edge".into()));
    }
    let (a, b) = (e.0, e.1);
    let c = emb.face_successor(a, b);
    let d = emb.face_successor(b, a);
    if c == d || emb.has_edge(c, d) {
        return Err(Error::Precondition("flip would create a multi-edge".into()));
    }
    let mut rot = emb.rotations().to_vec();
    rot[a].retain(|&w| w != b);
    rot[b].retain(|&w| w != a);
    insert_after(&mut rot, c, a, d);
    insert_after(&mut rot, d, b, c);
    PlanarEmbedding::new(rot, emb.outer_face().to_vec())
}

/// Inserts a new vertex (id `n`) into the face left of the dart `a -> b`.
pub fn stack_vertex(emb: &PlanarEmbedding, a: usize, b: usize) -> Result<PlanarEmbedding> {
    if !emb.has_edge(a, b) {
        return Err(Error::MissingEdge(a, b));
    }
    let c = emb.face_successor(a, b);
    if emb.face_successor(b, c) != a {
        return Err(Error::Precondition("face is not a triangle".into()));
    }
    let x = emb.n();
    let mut rot = emb.rotations().to_vec();
    rot.push(vec![a, b, c]);
    insert_after(&mut rot, a, b, x);
    insert_after(&mut rot, b, c, x);
    insert_after(&mut rot, c, a, x);
    let outer = emb.outer_face();
    let outer = if super::same_cycle(outer, &[a, b, c]) {
        vec![a, b, x]
    } else {
        outer.to_vec()
    };
    PlanarEmbedding::new(rot, outer)
}

/// Places `guest` inside the inner triangular face left of `a -> b` of
/// `host`, identifying the guest's outer triangle with that face. Returns
/// the merged embedding and the guest-to-host vertex map.
pub fn glue_into_face(
    host: &PlanarEmbedding,
    a: usize,
    b: usize,
    guest: &PlanarEmbedding,
) -> Result<(PlanarEmbedding, Vec<usize>)> {
    if !guest.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    if !host.has_edge(a, b) {
        return Err(Error::MissingEdge(a, b));
    }
    let c = host.face_successor(a, b);
    if host.face_successor(b, c) != a {
        return Err(Error::Precondition("host face is not a triangle".into()));
    }
    if super::same_cycle(host.outer_face(), &[a, b, c]) {
        return Err(Error::Precondition("host face must be an inner face".into()));
    }
    let g = guest.outer_face();
    let mut map = vec![usize::MAX; guest.n()];
    map[g[0]] = a;
    map[g[1]] = c;
    map[g[2]] = b;
    let mut next = host.n();
    for v in 0..guest.n() {
        if map[v] == usize::MAX {
            map[v] = next;
            next += 1;
        }
    }
    let mut rot = host.rotations().to_vec();
    rot.resize(next, Vec::new());
    for v in 0..guest.n() {
        if !g.contains(&v) {
            rot[map[v]] = guest.rotation(v).iter().map(|&w| map[w]).collect();
        }
    }
    // Corner of the host face at each identified vertex.
    for (gi, host_after) in [(0usize, b), (1, a), (2, c)] {
        let gv = g[gi];
        let prev = g[(gi + 2) % 3];
        let first_out = g[(gi + 1) % 3];
        let mut inner = Vec::new();
        let mut w = guest.ccw_next(gv, prev);
        while w != first_out {
            inner.push(map[w]);
            w = guest.ccw_next(gv, w);
        }
        let hv = map[gv];
        let mut after = host_after;
        for x in inner {
            insert_after(&mut rot, hv, after, x);
            after = x;
        }
    }
    Ok((PlanarEmbedding::new(rot, host.outer_face().to_vec())?, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4;
    use crate::graph::{classify_triangles, Edge};

    #[test]
    fn subdivision_vertex_has_degree_four() {
        let g = stack_vertex(&k4(), 0, 2).unwrap();
        let s = subdivide_and_retriangulate(&g, &[Edge(1, 2)]).unwrap();
        assert_eq!(s.vx, vec![(Edge(1, 2), 5)]);
        let x = 5;
        assert_eq!(s.emb.degree(x), 4);
        let nb = s.emb.rotation(x).to_vec();
        for i in 0..4 {
            assert!(s.emb.has_edge(nb[i], nb[(i + 1) % 4]));
        }
        assert!(s.emb.is_triangulated());
    }

    #[test]
    fn outer_edge_cannot_be_subdivided() {
        let e = subdivide_and_retriangulate(&k4(), &[Edge(0, 1)]).unwrap_err();
        assert!(matches!(e, Error::InvalidEdgeSet(_)));
    }

    #[test]
    fn dependent_edges_are_rejected() {
        let e = subdivide_and_retriangulate(&k4(), &[Edge(0, 2), Edge(1, 2)]).unwrap_err();
        assert!(matches!(e, Error::InvalidEdgeSet(_)));
    }

    #[test]
    fn split_stacked_k4() {
        // Vertex 4 stacked into face (0, 2, 1) makes {0, 1, 2} separating.
        let g = stack_vertex(&k4(), 0, 1).unwrap();
        let r = classify_triangles(&g).unwrap();
        let sep: Vec<_> = r.separating().map(|t| t.vertices).collect();
        assert_eq!(sep, vec![[0, 1, 2]]);
        let (inner, outer) = split_at_triangle(&g, [0, 1, 2]).unwrap();
        assert_eq!(inner.emb.n(), 4);
        assert_eq!(outer.emb.n(), 4);
        assert!(inner.emb.is_triangulated() && outer.emb.is_triangulated());
        let mut o: Vec<usize> = inner.emb.outer_face().iter().map(|&v| inner.to_parent[v]).collect();
        o.sort_unstable();
        assert_eq!(o, vec![0, 1, 2]);
    }

    #[test]
    fn split_rejects_faces() {
        assert_eq!(split_at_triangle(&k4(), [0, 1, 2]).unwrap_err(), Error::NotSeparating([0, 1, 2]));
        assert_eq!(split_at_triangle(&k4(), [0, 1, 3]).unwrap_err(), Error::NotSeparating([0, 1, 3]));
    }

    #[test]
    fn flip_keeps_triangulation() {
        let g = stack_vertex(&k4(), 0, 1).unwrap();
        let f = flip_edge(&g, Edge(0, 2)).unwrap();
        assert!(f.is_triangulated());
        assert!(!f.has_edge(0, 2));
    }

    #[test]
    fn glue_k4_into_k4() {
        let (g, map) = glue_into_face(&k4(), 0, 1, &k4()).unwrap();
        assert_eq!(g.n(), 5);
        assert!(g.is_triangulated());
        assert_eq!(map.iter().filter(|&&v| v == 4).count(), 1);
    }
}

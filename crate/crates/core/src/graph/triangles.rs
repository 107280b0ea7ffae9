use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use super::{Edge, PlanarEmbedding};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleClass {
    /// Sorted vertex ids.
    pub vertices: [usize; 3],
    pub facial: bool,
    /// Some vertex lies strictly inside.
    pub filled: bool,
    /// Vertices both inside and outside.
    pub separating: bool,
    /// Vertices strictly inside, sorted.
    pub inside: Vec<usize>,
}

impl TriangleClass {
    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.vertices;
        [Edge::new(a, b), Edge::new(b, c), Edge::new(a, c)]
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.vertices.contains(&e.0) && self.vertices.contains(&e.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    pub triangles: Vec<TriangleClass>,
    pub f_g: usize,
    pub filled_edges: Vec<Edge>,
}

impl TriangleReport {
    pub fn separating(&self) -> impl Iterator<Item = &TriangleClass> {
        self.triangles.iter().filter(|t| t.separating)
    }

    pub fn filled(&self) -> impl Iterator<Item = &TriangleClass> {
        self.triangles.iter().filter(|t| t.filled)
    }

    pub fn is_four_connected(&self) -> bool {
        self.separating().next().is_none()
    }
}

pub(crate) fn all_triangles(emb: &PlanarEmbedding) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..emb.n() {
        for &b in emb.rotation(a) {
            if b <= a {
                continue;
            }
            for &c in emb.rotation(b) {
                if c > b && emb.has_edge(a, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Vertices strictly inside the 3-cycle `t`, i.e. those not connected to
/// the outer face in `G - t`.
pub(crate) fn inside_of(emb: &PlanarEmbedding, t: [usize; 3]) -> Vec<usize> {
    let n = emb.n();
    let mut seen = vec![false; n];
    for &v in &t {
        seen[v] = true;
    }
    let mut queue: VecDeque<usize> =
        emb.outer_face().iter().copied().filter(|v| !t.contains(v)).collect();
    for &v in &queue {
        seen[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &w in emb.rotation(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    (0..n).filter(|&v| !seen[v]).collect()
}

/// Classifies every 3-cycle of a triangulation combinatorially.
pub fn classify_triangles(emb: &PlanarEmbedding) -> Result<TriangleReport> {
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    let faces: HashSet<[usize; 3]> = emb
        .faces()
        .cycles
        .iter()
        .map(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort_unstable();
            t
        })
        .collect();
    let n = emb.n();
    let mut triangles = Vec::new();
    let mut filled_edges = BTreeSet::new();
    for t in all_triangles(emb) {
        let inside = inside_of(emb, t);
        let facial = faces.contains(&t);
        let filled = !inside.is_empty();
        let separating = filled && inside.len() + 3 < n;
        let class = TriangleClass { vertices: t, facial, filled, separating, inside };
        if filled {
            filled_edges.extend(class.edges());
        }
        triangles.push(class);
    }
    let f_g = triangles.iter().filter(|t| t.filled).count();
    Ok(TriangleReport { triangles, f_g, filled_edges: filled_edges.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::k4;

    #[test]
    fn k4_has_one_filled_triangle() {
        let r = classify_triangles(&k4()).unwrap();
        assert_eq!(r.triangles.len(), 4);
        assert_eq!(r.f_g, 1);
        assert!(r.is_four_connected());
        let outer = r.triangles.iter().find(|t| t.filled).unwrap();
        assert_eq!(outer.vertices, [0, 1, 3]);
        assert_eq!(outer.inside, vec![2]);
        assert_eq!(r.filled_edges, vec![Edge(0, 1), Edge(0, 3), Edge(1, 3)]);
    }
}

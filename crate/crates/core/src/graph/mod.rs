//! Combinatorial plane graphs given by rotation systems.
//!
//! Rotations list neighbours in counterclockwise order. Faces are traced
//! with the face on the left of every dart, so inner faces come out
//! counterclockwise and the outer face clockwise.

mod canonical;
mod surgery;
mod triangles;
mod triangulate;

pub use canonical::{canonical_order, CanonicalOrder};
pub use surgery::{
    flip_edge, glue_into_face, induced, split_at_triangle, stack_vertex,
    subdivide_and_retriangulate, SubEmbedding, Subdivision,
};
pub use triangles::{classify_triangles, TriangleClass, TriangleReport};
pub use triangulate::triangulate;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected edge with `0 < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEmbedding")]
pub struct PlanarEmbedding {
    n: usize,
    rotations: Vec<Vec<usize>>,
    outer_face: Vec<usize>,
}

#[derive(Deserialize)]
struct RawEmbedding {
    n: usize,
    rotations: Vec<Vec<usize>>,
    outer_face: Vec<usize>,
}

impl TryFrom<RawEmbedding> for PlanarEmbedding {
    type Error = Error;

    fn try_from(raw: RawEmbedding) -> Result<Self> {
        if raw.rotations.len() != raw.n {
            return Err(Error::InvalidEmbedding(format!(
                "n = {} but {} rotations given",
                raw.n,
                raw.rotations.len()
            )));
        }
        PlanarEmbedding::new(raw.rotations, raw.outer_face)
    }
}

/// Face cycles of an embedding, indexed per dart.
#[derive(Clone, Debug)]
pub struct Faces {
    pub cycles: Vec<Vec<usize>>,
    pub outer: usize,
    dart_face: Vec<Vec<usize>>,
}

impl Faces {
    /// Face on the left of the dart `u -> v`.
    pub fn left_of(&self, emb: &PlanarEmbedding, u: usize, v: usize) -> usize {
        self.dart_face[u][emb.position(u, v).expect("dart must exist")]
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

impl PlanarEmbedding {
    /// Validates simplicity, symmetry, connectivity, Euler's formula and that
    /// `outer_face` is one of the traced faces.
    pub fn new(rotations: Vec<Vec<usize>>, outer_face: Vec<usize>) -> Result<Self> {
        let n = rotations.len();
        if n < 2 {
            return Err(Error::InvalidEmbedding("fewer than two vertices".into()));
        }
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = rot.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != rot.len() {
                return Err(Error::InvalidEmbedding(format!("duplicate neighbour at {v}")));
            }
            for &w in rot {
                if w >= n {
                    return Err(Error::InvalidEmbedding(format!("vertex {w} out of range")));
                }
                if w == v {
                    return Err(Error::InvalidEmbedding(format!("self-loop at {v}")));
                }
                if !rotations[w].contains(&v) {
                    return Err(Error::InvalidEmbedding(format!("edge {v}-{w} is not symmetric")));
                }
            }
        }
        let emb = PlanarEmbedding { n, rotations, outer_face };
        if !emb.is_connected() {
            return Err(Error::InvalidEmbedding("graph is not connected".into()));
        }
        let faces = emb.trace_faces();
        let m = emb.num_edges();
        if n as i64 - m as i64 + faces.len() as i64 != 2 {
            return Err(Error::InvalidEmbedding(format!(
                "Euler check failed: n={n}, m={m}, f={}",
                faces.len()
            )));
        }
        if emb.find_face(&faces, &emb.outer_face).is_none() {
            return Err(Error::InvalidEmbedding("outer face is not a face of the rotation system".into()));
        }
        Ok(emb)
    }

    pub(crate) fn from_parts_unchecked(rotations: Vec<Vec<usize>>, outer_face: Vec<usize>) -> Self {
        PlanarEmbedding { n: rotations.len(), rotations, outer_face }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn outer_face(&self) -> &[usize] {
        &self.outer_face
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn num_edges(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (v, rot) in self.rotations.iter().enumerate() {
            for &w in rot {
                if v < w {
                    out.push(Edge(v, w));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn position(&self, v: usize, w: usize) -> Option<usize> {
        self.rotations[v].iter().position(|&x| x == w)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.rotations[a].contains(&b)
    }

    /// Counterclockwise successor of `w` around `v`.
    pub fn ccw_next(&self, v: usize, w: usize) -> usize {
        let rot = &self.rotations[v];
        let i = self.position(v, w).expect("not a neighbour");
        rot[(i + 1) % rot.len()]
    }

    /// Clockwise successor of `w` around `v`.
    pub fn cw_next(&self, v: usize, w: usize) -> usize {
        let rot = &self.rotations[v];
        let i = self.position(v, w).expect("not a neighbour");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Third vertex of the face on the left of `u -> v`, i.e. the vertex
    /// following `v` when walking that face.
    pub fn face_successor(&self, u: usize, v: usize) -> usize {
        self.cw_next(v, u)
    }

    pub fn faces(&self) -> Faces {
        let cycles_and_index = self.trace_faces_indexed();
        let outer = self
            .find_face(&cycles_and_index.0, &self.outer_face)
            .expect("validated outer face");
        Faces { cycles: cycles_and_index.0, outer, dart_face: cycles_and_index.1 }
    }

    fn trace_faces(&self) -> Vec<Vec<usize>> {
        self.trace_faces_indexed().0
    }

    fn trace_faces_indexed(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let mut dart_face: Vec<Vec<usize>> =
            self.rotations.iter().map(|r| vec![usize::MAX; r.len()]).collect();
        let mut cycles = Vec::new();
        for u in 0..self.n {
            for i in 0..self.rotations[u].len() {
                if dart_face[u][i] != usize::MAX {
                    continue;
                }
                let id = cycles.len();
                let mut cycle = Vec::new();
                let (mut a, mut ai) = (u, i);
                loop {
                    dart_face[a][ai] = id;
                    cycle.push(a);
                    let b = self.rotations[a][ai];
                    let next = self.cw_next(b, a);
                    let bi = self.position(b, next).unwrap();
                    a = b;
                    ai = bi;
                    if dart_face[a][ai] != usize::MAX {
                        break;
                    }
                }
                cycles.push(cycle);
            }
        }
        (cycles, dart_face)
    }

    fn find_face(&self, faces: &[Vec<usize>], target: &[usize]) -> Option<usize> {
        faces.iter().position(|f| same_cycle(f, target))
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.rotations[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Every face, the outer one included, is a triangle.
    pub fn is_triangulated(&self) -> bool {
        self.n >= 3 && self.num_edges() == 3 * self.n - 6
    }

    pub fn is_outer_edge(&self, e: Edge) -> bool {
        let f = &self.outer_face;
        (0..f.len()).any(|i| Edge::new(f[i], f[(i + 1) % f.len()]) == e)
    }

    pub fn outer_edges(&self) -> Vec<Edge> {
        let f = &self.outer_face;
        (0..f.len()).map(|i| Edge::new(f[i], f[(i + 1) % f.len()])).collect()
    }

    /// Copy without one edge; the outer face is kept if it survives,
    /// otherwise it becomes the merged face through `e`.
    pub fn without_edge(&self, e: Edge) -> Result<PlanarEmbedding> {
        if !self.has_edge(e.0, e.1) {
            return Err(Error::MissingEdge(e.0, e.1));
        }
        let outer_dart = (0..self.outer_face.len())
            .map(|i| (self.outer_face[i], self.outer_face[(i + 1) % self.outer_face.len()]))
            .find(|&(a, b)| Edge::new(a, b) != e)
            .expect("outer face has at least two edges");
        let mut rotations = self.rotations.clone();
        rotations[e.0].retain(|&x| x != e.1);
        rotations[e.1].retain(|&x| x != e.0);
        let tmp = PlanarEmbedding::from_parts_unchecked(rotations, Vec::new());
        let (cycles, dart_face) = tmp.trace_faces_indexed();
        let fid = dart_face[outer_dart.0][tmp.position(outer_dart.0, outer_dart.1).unwrap()];
        let outer = rotate_to_start(&cycles[fid], outer_dart.0);
        PlanarEmbedding::new(tmp.rotations, outer)
    }

    /// Rotation system and outer face after renaming vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<PlanarEmbedding> {
        let mut rotations = vec![Vec::new(); self.n];
        for v in 0..self.n {
            rotations[perm[v]] = self.rotations[v].iter().map(|&w| perm[w]).collect();
        }
        let outer = self.outer_face.iter().map(|&w| perm[w]).collect();
        PlanarEmbedding::new(rotations, outer)
    }
}

pub(crate) fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

pub(crate) fn rotate_to_start(cycle: &[usize], start: usize) -> Vec<usize> {
    let s = cycle.iter().position(|&x| x == start).unwrap_or(0);
    cycle[s..].iter().chain(cycle[..s].iter()).copied().collect()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// K4 with outer face traced as 1, 0, 3 and vertex 2 inside.
    pub fn k4() -> PlanarEmbedding {
        PlanarEmbedding::new(
            vec![vec![1, 2, 3], vec![3, 2, 0], vec![0, 1, 3], vec![0, 2, 1]],
            vec![1, 0, 3],
        )
        .unwrap()
    }

    pub fn triangle() -> PlanarEmbedding {
        PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 2, 1]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn k4_faces_satisfy_euler() {
        let g = k4();
        let faces = g.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.cycles.iter().all(|f| f.len() == 3));
        assert!(same_cycle(&faces.cycles[faces.outer], &[1, 0, 3]));
        assert!(g.is_triangulated());
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!(g.faces().len(), 2);
    }

    #[test]
    fn triangle_orientation_selects_outer_face() {
        let inner = PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 1, 2]);
        assert!(inner.is_ok());
        let bogus = PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 1]);
        assert!(bogus.is_err());
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let r = PlanarEmbedding::new(vec![vec![1, 2], vec![2], vec![0, 1]], vec![0, 2, 1]);
        assert!(matches!(r, Err(Error::InvalidEmbedding(_))));
    }

    #[test]
    fn non_planar_rotation_fails_euler() {
        // K4 with one rotation reversed is not a plane embedding.
        let r = PlanarEmbedding::new(
            vec![vec![3, 2, 1], vec![3, 2, 0], vec![0, 1, 3], vec![0, 2, 1]],
            vec![1, 0, 3],
        );
        assert!(matches!(r, Err(Error::InvalidEmbedding(_))));
    }

    #[test]
    fn removing_outer_edge_gives_four_cycle() {
        let g = k4().without_edge(Edge(0, 1)).unwrap();
        assert_eq!(g.outer_face().len(), 4);
        assert_eq!(g.num_edges(), 5);
    }
}

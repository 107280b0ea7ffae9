//! Closed-form non-aligned drawings of nested-triangle graphs.

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::generate::embedding_from_layout;
use crate::geom::Point;
use crate::graph::{Edge, PlanarEmbedding};

/// Diagonal of the quadrilateral between sides `a_i b_i` and
/// `a_{i+1} b_{i+1}`: `First` is `a_i b_{i+1}`, `Second` is `b_i a_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Diagonal {
    None,
    First,
    Second,
}

/// `u[i], v[i], w[i]` are the vertex ids of level `i` (0-based, level 0 is
/// outer). `diagonals[3 * i + s]` belongs to the quad between levels `i`
/// and `i + 1` on side `s` (0 = uv, 1 = vw, 2 = wu).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NestedTriangleGraph {
    pub k: usize,
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    pub diagonals: Vec<Diagonal>,
}

impl NestedTriangleGraph {
    fn chains(&self) -> [&Vec<usize>; 3] {
        [&self.u, &self.v, &self.w]
    }

    pub fn edges(&self) -> Vec<Edge> {
        let c = self.chains();
        let mut out = Vec::new();
        for i in 0..self.k {
            for s in 0..3 {
                out.push(Edge::new(c[s][i], c[(s + 1) % 3][i]));
                if i + 1 < self.k {
                    out.push(Edge::new(c[s][i], c[s][i + 1]));
                }
            }
        }
        for (j, d) in self.diagonals.iter().enumerate() {
            let (i, s) = (j / 3, j % 3);
            let (a, b) = (c[s], c[(s + 1) % 3]);
            match d {
                Diagonal::None => {}
                Diagonal::First => out.push(Edge::new(a[i], b[i + 1])),
                Diagonal::Second => out.push(Edge::new(b[i], a[i + 1])),
            }
        }
        out.sort();
        out
    }

    /// Same graph with the v and w chains exchanged.
    fn swapped(&self) -> NestedTriangleGraph {
        let mut diagonals = Vec::with_capacity(self.diagonals.len());
        let flip = |d: Diagonal| match d {
            Diagonal::None => Diagonal::None,
            Diagonal::First => Diagonal::Second,
            Diagonal::Second => Diagonal::First,
        };
        // Sides uv, vw, wu become uw, wv, vu: wu, vw, uv with the roles reversed.
        for q in self.diagonals.chunks(3) {
            diagonals.extend([flip(q[2]), flip(q[1]), flip(q[0])]);
        }
        NestedTriangleGraph { k: self.k, u: self.u.clone(), v: self.w.clone(), w: self.v.clone(), diagonals }
    }
}

/// Builds the graph with ids `u_i = 3i`, `v_i = 3i + 1`, `w_i = 3i + 2`,
/// embedded with level 0 outermost.
pub fn nested_graph(k: usize, diagonals: &[Diagonal]) -> Result<(PlanarEmbedding, NestedTriangleGraph)> {
    if k == 0 {
        return Err(Error::TooSmall { n: 0, min: 3 });
    }
    if diagonals.len() != 3 * (k - 1) {
        return Err(Error::Precondition(format!("expected {} diagonals, got {}", 3 * (k - 1), diagonals.len())));
    }
    let g = NestedTriangleGraph {
        k,
        u: (0..k).map(|i| 3 * i).collect(),
        v: (0..k).map(|i| 3 * i + 1).collect(),
        w: (0..k).map(|i| 3 * i + 2).collect(),
        diagonals: diagonals.to_vec(),
    };
    // Concentric homothetic triangles, so every quad is a convex trapezoid.
    let mut pts = Vec::with_capacity(3 * k);
    for i in 0..k {
        let s = (k - i) as i64;
        pts.extend([(-2 * s, -s), (2 * s, -s), (0, 2 * s)]);
    }
    let emb = embedding_from_layout(&pts, &g.edges())?;
    Ok((emb, g))
}

/// u_i at (i, i), v_i at (3k + 1 - i, k + i), w_i at (k + i, 4k + 1 - 2i),
/// after exchanging the v and w chains if v_{k-1} w_k is an edge.
pub fn draw_nested(g: &NestedTriangleGraph) -> Drawing {
    let k = g.k;
    let owned;
    let g = if k >= 2 && g.diagonals[3 * (k - 2) + 1] == Diagonal::First {
        owned = g.swapped();
        &owned
    } else {
        g
    };
    let ki = k as i64;
    let mut coords = vec![Point::int(0, 0); 3 * k];
    for i in 1..=ki {
        let j = (i - 1) as usize;
        coords[g.u[j]] = Point::int(i, i);
        coords[g.v[j]] = Point::int(3 * ki + 1 - i, ki + i);
        coords[g.w[j]] = Point::int(ki + i, 4 * ki + 1 - 2 * i);
    }
    Drawing::straight(coords, &g.edges(), "nested")
}

/// Recovers a nested-triangle structure by trying each labelling of the
/// outer triangle and backtracking over the next level, smallest ids first.
pub fn recognize_nested(emb: &PlanarEmbedding) -> Option<NestedTriangleGraph> {
    let n = emb.n();
    if n == 0 || !n.is_multiple_of(3) || emb.outer_face().len() != 3 {
        return None;
    }
    let k = n / 3;
    let o = emb.outer_face();
    let mut starts: Vec<[usize; 3]> = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        .iter()
        .map(|p| [o[p[0]], o[p[1]], o[p[2]]])
        .collect();
    starts.sort();
    for s in starts {
        let mut used = vec![false; n];
        s.iter().for_each(|&x| used[x] = true);
        let mut levels = vec![s];
        if let Some(g) = extend_levels(emb, k, &mut levels, &mut used) {
            return Some(g);
        }
    }
    None
}

fn extend_levels(
    emb: &PlanarEmbedding,
    k: usize,
    levels: &mut Vec<[usize; 3]>,
    used: &mut [bool],
) -> Option<NestedTriangleGraph> {
    if levels.len() == k {
        return structure_from_levels(emb, levels);
    }
    let [a, b, c] = *levels.last().unwrap();
    let cand = |x: usize| -> Vec<usize> {
        let mut v: Vec<usize> = emb.rotation(x).iter().copied().filter(|&y| !used[y]).collect();
        v.sort();
        v
    };
    let (ca, cb, cc) = (cand(a), cand(b), cand(c));
    for &x in &ca {
        for &y in cb.iter().filter(|&&y| y != x && emb.has_edge(x, y)) {
            for &z in cc.iter().filter(|&&z| z != x && z != y && emb.has_edge(y, z) && emb.has_edge(z, x)) {
                for t in [x, y, z] {
                    used[t] = true;
                }
                levels.push([x, y, z]);
                if let Some(g) = extend_levels(emb, k, levels, used) {
                    return Some(g);
                }
                levels.pop();
                for t in [x, y, z] {
                    used[t] = false;
                }
            }
        }
    }
    None
}

/// Accepts the labelling iff the edge set is exactly triangles, chains and
/// at most one diagonal per quad.
fn structure_from_levels(emb: &PlanarEmbedding, levels: &[[usize; 3]]) -> Option<NestedTriangleGraph> {
    let k = levels.len();
    let u: Vec<usize> = levels.iter().map(|l| l[0]).collect();
    let v: Vec<usize> = levels.iter().map(|l| l[1]).collect();
    let w: Vec<usize> = levels.iter().map(|l| l[2]).collect();
    let c = [&u, &v, &w];
    let mut diagonals = Vec::with_capacity(3 * k.saturating_sub(1));
    for i in 0..k.saturating_sub(1) {
        for s in 0..3 {
            let (a, b) = (c[s], c[(s + 1) % 3]);
            let first = emb.has_edge(a[i], b[i + 1]);
            let second = emb.has_edge(b[i], a[i + 1]);
            diagonals.push(match (first, second) {
                (false, false) => Diagonal::None,
                (true, false) => Diagonal::First,
                (false, true) => Diagonal::Second,
                (true, true) => return None,
            });
        }
    }
    let g = NestedTriangleGraph { k, u, v, w, diagonals };
    (g.edges() == emb.edges()).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::octahedron;
    use crate::graph::fixtures::{k4, triangle};
    use crate::verify::{check_grid, check_non_aligned, check_planar};

    fn ints(d: &Drawing) -> Vec<(i64, i64)> {
        d.coords.iter().map(|p| (p.x.to_integer(), p.y.to_integer())).collect()
    }

    #[test]
    fn octahedron_coordinates() {
        let g = recognize_nested(&octahedron()).unwrap();
        let d = draw_nested(&g);
        let at = |v: usize| (d.coords[v].x.to_integer(), d.coords[v].y.to_integer());
        assert_eq!([at(g.u[0]), at(g.u[1])], [(1, 1), (2, 2)]);
        assert_eq!([at(g.v[0]), at(g.v[1])], [(6, 3), (5, 4)]);
        assert_eq!([at(g.w[0]), at(g.w[1])], [(3, 7), (4, 5)]);
        assert!(check_planar(&d).passed);
        assert!(check_non_aligned(&d).passed);
        assert_eq!((d.width(), d.height()), (6, 7));
    }

    #[test]
    fn single_triangle() {
        let g = recognize_nested(&triangle()).unwrap();
        let d = draw_nested(&g);
        let mut c = ints(&d);
        c.sort();
        assert_eq!(c, vec![(1, 1), (2, 3), (3, 2)]);
    }

    #[test]
    fn k4_is_not_nested() {
        assert!(recognize_nested(&k4()).is_none());
    }

    #[test]
    fn every_k3_diagonal_pattern_fits() {
        let opts = [Diagonal::None, Diagonal::First, Diagonal::Second];
        for code in 0..3usize.pow(6) {
            let diags: Vec<Diagonal> = (0..6).map(|j| opts[code / 3usize.pow(j) % 3]).collect();
            let (emb, g) = nested_graph(3, &diags).unwrap();
            assert_eq!(emb.edges(), g.edges());
            let d = draw_nested(&g);
            assert!(check_planar(&d).passed, "pattern {code}");
            assert!(check_non_aligned(&d).passed);
            assert!(check_grid(&d, 9, 11).passed);
        }
    }

    #[test]
    fn round_trip_recognition() {
        let diags = vec![Diagonal::First, Diagonal::None, Diagonal::Second, Diagonal::Second, Diagonal::First, Diagonal::None];
        let (emb, g) = nested_graph(3, &diags).unwrap();
        let r = recognize_nested(&emb).unwrap();
        assert_eq!(r.edges(), g.edges());
        assert!(check_planar(&draw_nested(&r)).passed);
    }
}

//! Rectangle-of-influence drawings of triangulations minus an outer edge.
//!
//! The base case (no separating triangle) sweeps a path from the top
//! corner through the left corner to the bottom corner eastwards, which
//! colours the inner edges into two acyclic families; topological orders
//! of the two families give x and y. Separating triangles through the
//! removed edge are handled by drawing both sides and nesting the inside
//! into the unit square next to the left corner.

mod deform;

pub use deform::{move_subdivision_vertex, one_bend_rook, plan_move, renormalize, stretch_square, stretch_tall, MoveClaim, MovePlan};

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::geom::{Point, Q};
use crate::graph::{classify_triangles, split_at_triangle, Edge, PlanarEmbedding};
use crate::verify::{check_planar, check_ri, check_rook};

/// The four outer vertices of `G - e`: `west` and `east` are the ends of
/// `e`, `north` the third outer vertex of `G`, `south` the apex of the
/// inner face at `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corners {
    pub west: usize,
    pub north: usize,
    pub east: usize,
    pub south: usize,
}

impl Corners {
    pub fn of(emb: &PlanarEmbedding, e: Edge) -> Result<Corners> {
        let o = emb.outer_face();
        if o.len() != 3 {
            return Err(Error::NotTriangulated);
        }
        let i = (0..3)
            .find(|&i| Edge::new(o[i], o[(i + 1) % 3]) == e)
            .ok_or(Error::NotOuterEdge(e.0, e.1))?;
        let (p, q) = (o[i], o[(i + 1) % 3]);
        Ok(Corners { west: q, north: o[(i + 2) % 3], east: p, south: emb.face_successor(q, p) })
    }

    /// Positions required of an RI drawing of `G - e` on the n x n grid.
    pub fn expected(&self, n: i64) -> [(usize, (i64, i64)); 4] {
        [
            (self.west, (1, n)),
            (self.east, (n, 1)),
            (self.south, (2, 2)),
            (self.north, (n - 1, n - 1)),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Colour {
    Red,
    Blue,
}

/// Checks the full contract of an RI drawing of `G - e`.
pub fn certify(d: &Drawing, c: &Corners) -> Result<()> {
    check_planar(d).into_result()?;
    check_ri(d).into_result()?;
    check_rook(d).into_result()?;
    let n = d.n() as i64;
    for (v, (x, y)) in c.expected(n) {
        if d.coords[v] != Point::int(x, y) {
            return Err(Error::CheckFailed {
                check: "corners".into(),
                detail: format!("vertex {v} at {} instead of ({x}, {y})", d.coords[v]),
            });
        }
    }
    Ok(())
}

fn check_input(emb: &PlanarEmbedding, e: Edge) -> Result<Corners> {
    if emb.n() < 4 {
        return Err(Error::TooSmall { n: emb.n(), min: 4 });
    }
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    Corners::of(emb, e)
}

/// RI rook drawing of `emb - e` for a triangulation without separating
/// triangles: ends of `e` at (1, n) and (n, 1), the other outer vertices at
/// (2, 2) and (n - 1, n - 1).
pub fn bbm_drawing(emb: &PlanarEmbedding, e: Edge) -> Result<Drawing> {
    let c = check_input(emb, e)?;
    if let Some(t) = classify_triangles(emb)?.separating().next() {
        return Err(Error::Precondition(format!("separating triangle {:?}; use extend_bbm", t.vertices)));
    }
    base_drawing(emb, e, &c)
}

fn base_drawing(emb: &PlanarEmbedding, e: Edge, c: &Corners) -> Result<Drawing> {
    let n = emb.n();
    let g = emb.without_edge(e)?;
    let (x, y) = if n == 4 {
        let mut x = vec![0; 4];
        let mut y = vec![0; 4];
        for (v, (a, b)) in c.expected(4) {
            x[v] = a;
            y[v] = b;
        }
        (x, y)
    } else {
        let colours = transversal_colouring(&g, c)
            .ok_or_else(|| Error::ConstructionNotFound("sweep found no admissible segment".into()))?;
        let mut d1 = vec![(c.west, c.south), (c.west, c.north), (c.south, c.east), (c.north, c.east)];
        let mut d2 = vec![(c.east, c.south), (c.south, c.west), (c.east, c.north), (c.north, c.west)];
        for (&(a, b), &col) in &colours {
            d1.push((a, b));
            d2.push(if col == Colour::Red { (a, b) } else { (b, a) });
        }
        let x = ranked_order(n, &d1, c.south, c.north)
            .ok_or_else(|| Error::ConstructionNotFound("cyclic x-orientation".into()))?;
        let y = ranked_order(n, &d2, c.south, c.north)
            .ok_or_else(|| Error::ConstructionNotFound("cyclic y-orientation".into()))?;
        (x, y)
    };
    let coords = (0..n).map(|v| Point::int(x[v], y[v])).collect();
    let d = Drawing::straight(coords, &g.edges(), "bbm");
    certify(&d, c).map_err(|err| Error::ConstructionNotFound(err.to_string()))?;
    Ok(d)
}

/// Topological order as ranks 1..=n: `early` is taken as soon as it is
/// available, `late` only when nothing else is; ties by smallest id.
fn ranked_order(n: usize, arcs: &[(usize, usize)], early: usize, late: usize) -> Option<Vec<i64>> {
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in arcs {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let class = |v: usize| if v == early { 0 } else if v == late { 2 } else { 1 };
    let mut heap: BinaryHeap<Reverse<(u8, usize)>> =
        (0..n).filter(|&v| indeg[v] == 0).map(|v| Reverse((class(v), v))).collect();
    let mut rank = vec![0i64; n];
    let mut next = 1;
    while let Some(Reverse((_, v))) = heap.pop() {
        rank[v] = next;
        next += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse((class(w), w)));
            }
        }
    }
    (next as usize == n + 1).then_some(rank)
}

/// Neighbours of `p` strictly east of the path through `prev, p, next`,
/// listed from north to south.
fn east_neighbours(g: &PlanarEmbedding, p: usize, prev: usize, next: usize) -> Vec<usize> {
    let r = g.rotation(p);
    let start = g.position(p, next).expect("path edge");
    let mut out = Vec::new();
    for j in 1..r.len() {
        let w = r[(start + j) % r.len()];
        if w == prev {
            break;
        }
        out.push(w);
    }
    out.reverse();
    out
}

/// Sweeps the west boundary path N .. W .. S eastwards over `g = G - e`.
/// Each step replaces a subpath `P[a..=b]` by the chain of its eastern
/// neighbours; edges from the subpath into the chain become blue (west to
/// east), edges along the chain and to its two attachment points red
/// (south to north).
fn transversal_colouring(g: &PlanarEmbedding, c: &Corners) -> Option<BTreeMap<(usize, usize), Colour>> {
    let n = g.n();
    let mut colours: BTreeMap<(usize, usize), Colour> = BTreeMap::new();
    let mut path = vec![c.north, c.west, c.south];
    let mut processed = vec![false; n];
    let mut on_path = vec![false; n];
    let mut index = vec![usize::MAX; n];
    processed[c.west] = true;
    loop {
        on_path.iter_mut().for_each(|b| *b = false);
        for (i, &p) in path.iter().enumerate() {
            on_path[p] = true;
            index[p] = i;
        }
        let mut rest = (0..n).filter(|&v| !processed[v] && !on_path[v]);
        if rest.next() == Some(c.east) && rest.next().is_none() {
            for &p in &path[1..path.len() - 1] {
                set(&mut colours, p, c.east, Colour::Blue);
            }
            return Some(colours);
        }
        let (a, b, q) = (1..path.len() - 1)
            .flat_map(|a| (a..path.len() - 1).map(move |b| (a, b)))
            .find_map(|(a, b)| admissible_chain(g, &path, a, b, &processed, &on_path, &index, c.east).map(|q| (a, b, q)))?;
        for &p in &path[a..=b] {
            for &w in &q {
                if g.has_edge(p, w) {
                    set(&mut colours, p, w, Colour::Blue);
                }
            }
        }
        set(&mut colours, q[0], path[a - 1], Colour::Red);
        set(&mut colours, path[b + 1], q[q.len() - 1], Colour::Red);
        for s in 0..q.len() - 1 {
            set(&mut colours, q[s + 1], q[s], Colour::Red);
        }
        for &p in &path[a..=b] {
            processed[p] = true;
        }
        path.splice(a..=b, q);
    }
}

/// A later colouring of the same edge overrides the earlier one.
fn set(colours: &mut BTreeMap<(usize, usize), Colour>, a: usize, b: usize, col: Colour) {
    colours.remove(&(b, a));
    colours.insert((a, b), col);
}

#[allow(clippy::too_many_arguments)]
fn admissible_chain(
    g: &PlanarEmbedding,
    path: &[usize],
    a: usize,
    b: usize,
    processed: &[bool],
    on_path: &[bool],
    index: &[usize],
    east: usize,
) -> Option<Vec<usize>> {
    let mut q: Vec<usize> = Vec::new();
    for i in a..=b {
        for w in east_neighbours(g, path[i], path[i - 1], path[i + 1]) {
            if q.last() != Some(&w) {
                q.push(w);
            }
        }
    }
    if q.is_empty() || q.contains(&east) || q.iter().any(|&w| processed[w] || on_path[w]) {
        return None;
    }
    let mut pos = std::collections::HashMap::with_capacity(q.len());
    for (s, &w) in q.iter().enumerate() {
        if pos.insert(w, s).is_some() {
            return None;
        }
    }
    let last = q.len() - 1;
    for (s, &w) in q.iter().enumerate() {
        for &z in g.rotation(w) {
            if on_path[z] {
                let i = index[z];
                if i + 1 < a || i > b + 1 || (i + 1 == a && s != 0) || (i == b + 1 && s != last) {
                    return None;
                }
            } else if let Some(&t) = pos.get(&z) {
                if t.abs_diff(s) >= 2 {
                    return None;
                }
            }
        }
    }
    (g.has_edge(q[0], path[a - 1]) && g.has_edge(q[last], path[b + 1])).then_some(q)
}

/// RI rook drawing of `emb - e` when every separating triangle contains `e`.
pub fn extend_bbm(emb: &PlanarEmbedding, e: Edge) -> Result<Drawing> {
    let c = check_input(emb, e)?;
    let report = classify_triangles(emb)?;
    if let Some(t) = report.separating().find(|t| !t.contains_edge(e)) {
        return Err(Error::StraySeparatingTriangle(t.vertices));
    }
    let Some(t) = report.separating().next() else {
        return base_drawing(emb, e, &c);
    };
    let (inner, outer) = split_at_triangle(emb, t.vertices)?;
    let local = |s: &crate::graph::SubEmbedding, v: usize| s.from_parent(v).expect("triangle vertex kept");
    let d_in = extend_bbm(&inner.emb, Edge::new(local(&inner, e.0), local(&inner, e.1)))?;
    let d_out = extend_bbm(&outer.emb, Edge::new(local(&outer, e.0), local(&outer, e.1)))?;
    let apex = t.vertices.iter().copied().find(|&v| !e.contains(v)).unwrap();

    let n_in = inner.emb.n() as i64;
    let mut coords: Vec<Option<Point>> = vec![None; emb.n()];
    for (lv, &pv) in outer.to_parent.iter().enumerate() {
        coords[pv] = Some(d_out.coords[lv]);
    }
    debug_assert_eq!(coords[apex], Some(Point::int(2, 2)));
    // The inside minus the ends of e occupies [2, n_in - 1]^2 with the apex
    // in the top-right corner; squeeze it into (1, 2]^2.
    let squeeze = |a: Q| Q::from_integer(1) + (a - 1) / (n_in - 2);
    for (lv, &pv) in inner.to_parent.iter().enumerate() {
        if e.contains(pv) {
            continue;
        }
        let p = d_in.coords[lv];
        let moved = Point::new(squeeze(p.x), squeeze(p.y));
        if pv == apex {
            debug_assert_eq!(moved, Point::int(2, 2));
            continue;
        }
        let one = Q::from_integer(1);
        let two = Q::from_integer(2);
        if !(moved.x > one && moved.x < two && moved.y > one && moved.y < two) {
            return Err(Error::CheckFailed { check: "merge".into(), detail: format!("inner vertex {pv} at {moved}") });
        }
        coords[pv] = Some(moved);
    }
    let coords: Vec<Point> = coords.into_iter().map(|p| p.expect("every vertex placed")).collect();
    let merged = Drawing::straight(coords, &emb.without_edge(e)?.edges(), "bbm");
    let all: Vec<usize> = (0..emb.n()).collect();
    let d = renormalize(&merged, &all)?;
    certify(&d, &c)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{double_wheel, four_connected, octahedron, rng, separating_chain};
    use crate::graph::fixtures::k4;

    fn outer_edge(g: &PlanarEmbedding) -> Edge {
        Edge::new(g.outer_face()[0], g.outer_face()[1])
    }

    #[test]
    fn k4_corners() {
        let g = k4();
        let d = bbm_drawing(&g, outer_edge(&g)).unwrap();
        assert_eq!(d.edges.len(), 5);
    }

    #[test]
    fn octahedron_every_outer_edge() {
        let g = octahedron();
        for e in g.outer_edges() {
            let d = bbm_drawing(&g, e).unwrap();
            assert_eq!((d.width(), d.height()), (6, 6));
        }
    }

    #[test]
    fn double_wheel_eight() {
        let g = double_wheel(8).unwrap();
        bbm_drawing(&g, outer_edge(&g)).unwrap();
    }

    #[test]
    fn random_four_connected() {
        let mut r = rng(11);
        for n in 6..40 {
            let g = four_connected(n, &mut r).unwrap();
            for e in g.outer_edges() {
                bbm_drawing(&g, e).unwrap_or_else(|err| panic!("n = {n}: {err}"));
            }
        }
    }

    #[test]
    fn separating_triangles_on_edge() {
        let mut r = rng(12);
        for pieces in 1..5 {
            let g = separating_chain(pieces, 4..=9, &mut r).unwrap();
            let d = extend_bbm(&g, outer_edge(&g)).unwrap();
            assert_eq!(d.n(), g.n());
        }
    }

    #[test]
    fn stray_separating_triangle_rejected() {
        let mut r = rng(13);
        let g = separating_chain(2, 6..=6, &mut r).unwrap();
        let o = g.outer_face();
        let other = Edge::new(o[1], o[2]);
        assert!(matches!(extend_bbm(&g, other), Err(Error::StraySeparatingTriangle(_))));
        assert!(matches!(bbm_drawing(&g, outer_edge(&g)), Err(Error::Precondition(_))));
    }
}

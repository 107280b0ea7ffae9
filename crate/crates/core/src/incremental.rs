//! Canonical-order drawings with distinct x-coordinates, optionally also
//! with distinct y-coordinates. Each new vertex takes the lowest integer
//! row from which all its predecessors are visible.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::geom::{on_segment, overlap_beyond_shared, segments_intersect, slope, Point, Q};
use crate::graph::{canonical_order, CanonicalOrder, PlanarEmbedding};
use crate::verify::check_slope_bound;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    DistinctX,
    NonAligned,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    /// Number of vertices drawn after this step.
    pub k: usize,
    pub vertex: usize,
    pub at: (i64, i64),
    /// Position of the leftmost predecessor, for k >= 4.
    pub left_pred: Option<(i64, i64)>,
    /// Largest slope on the outer face of the drawing of G_k.
    #[serde(serialize_with = "ser_q")]
    pub max_outer_slope: Q,
}

fn ser_q<S: serde::Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::geom::format_q(*q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub mode: Mode,
    pub steps: Vec<StepRecord>,
}

impl Trace {
    pub fn max_slope(&self) -> Option<Q> {
        self.steps.iter().map(|s| s.max_outer_slope).max()
    }
}

/// Arcs of the canonical orientation: v_1 -> v_2, and for each v_k all
/// predecessors point to v_k except that v_k points to its rightmost one.
pub fn canonical_orientation(co: &CanonicalOrder) -> Vec<(usize, usize)> {
    let mut arcs = vec![(co.order[0], co.order[1])];
    for k in 2..co.n() {
        let v = co.order[k];
        let p = &co.preds[k];
        for &c in &p[..p.len() - 1] {
            arcs.push((c, v));
        }
        arcs.push((v, p[p.len() - 1]));
    }
    arcs
}

/// Lexicographically smallest topological order, as x-coordinates 1..=n.
pub fn orient_and_xorder(co: &CanonicalOrder) -> Result<Vec<i64>> {
    let n = co.n();
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for (a, b) in canonical_orientation(co) {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut x = vec![0i64; n];
    let mut next = 1;
    while let Some(Reverse(v)) = heap.pop() {
        x[v] = next;
        next += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    if next as usize != n + 1 {
        return Err(Error::ConstructionNotFound("canonical orientation has a cycle".into()));
    }
    Ok(x)
}

/// Drawing of a prefix G_k together with its outer chain c_1, ..., c_L.
#[derive(Clone, Debug)]
pub struct PartialDrawing {
    pub pos: Vec<Option<Point>>,
    pub edges: Vec<(usize, usize)>,
    pub chain: Vec<usize>,
}

impl PartialDrawing {
    fn at(&self, v: usize) -> Point {
        self.pos[v].expect("vertex is placed")
    }

    /// Height of the outer chain at abscissa `x`, if the chain spans it.
    pub fn chain_height(&self, x: Q) -> Option<Q> {
        self.chain.windows(2).find_map(|w| {
            let (a, b) = (self.at(w[0]), self.at(w[1]));
            (a.x <= x && x <= b.x).then(|| a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x))
        })
    }
}

/// `target` sees `p`: `p` is strictly above the outer chain and the segment
/// from `target` to `p` meets no other vertex or edge of the drawing.
pub fn visible(d: &PartialDrawing, p: Point, target: usize) -> bool {
    match d.chain_height(p.x) {
        Some(h) if p.y > h => {}
        _ => return false,
    }
    let t = d.at(target);
    for (w, q) in d.pos.iter().enumerate() {
        if let Some(q) = q {
            if w != target && on_segment(*q, t, p) {
                return false;
            }
        }
    }
    d.edges.iter().all(|&(a, b)| {
        if a == target || b == target {
            let other = if a == target { b } else { a };
            !overlap_beyond_shared(t, p, d.at(other))
        } else {
            !segments_intersect(t, p, d.at(a), d.at(b))
        }
    })
}

fn floor_plus_one(v: Q) -> i64 {
    v.floor().to_integer() + 1
}

/// Draws a triangulation vertex by vertex in canonical order. Slope and
/// height bounds are checked on the trace before returning.
pub fn incremental_drawing(emb: &PlanarEmbedding, mode: Mode) -> Result<(Drawing, Trace)> {
    let co = canonical_order(emb)?;
    let n = emb.n();
    let x = orient_and_xorder(&co)?;
    let (v1, v2) = (co.order[0], co.order[1]);
    let mut d = PartialDrawing { pos: vec![None; n], edges: vec![(v1, v2)], chain: vec![v1, v2] };
    d.pos[v1] = Some(Point::int(1, 2));
    d.pos[v2] = Some(Point::int(n as i64, 1));
    let mut rows: HashSet<i64> = [1, 2].into_iter().collect();
    let mut steps = Vec::with_capacity(n - 2);

    for k in 2..n {
        let v = co.order[k];
        let preds = &co.preds[k];
        let xv = Q::from_integer(x[v]);
        let l = d.chain.iter().position(|&c| c == preds[0]).unwrap();
        let r = l + preds.len() - 1;
        debug_assert_eq!(&d.chain[l..=r], &preds[..]);

        let mut lb = floor_plus_one(d.chain_height(xv).expect("chain spans every new x"));
        for j in l..r {
            let cj = d.at(d.chain[j]);
            for i in j + 1..r {
                let ci = d.at(d.chain[i]);
                let line = cj.y + (xv - cj.x) * (ci.y - cj.y) / (ci.x - cj.x);
                lb = lb.max(floor_plus_one(line));
            }
        }
        let mut y = lb;
        loop {
            if !(mode == Mode::NonAligned && rows.contains(&y)) {
                let p = Point::int(x[v], y);
                if preds.iter().all(|&c| visible(&d, p, c)) {
                    break;
                }
            }
            y += 1;
        }
        let left_pred = (k >= 3).then(|| {
            let c = d.at(preds[0]);
            (c.x.to_integer(), c.y.to_integer())
        });
        d.pos[v] = Some(Point::int(x[v], y));
        rows.insert(y);
        for &c in preds {
            d.edges.push((c, v));
        }
        d.chain.splice(l + 1..r, [v]);
        let max_outer_slope = d
            .chain
            .windows(2)
            .map(|w| slope(d.at(w[0]), d.at(w[1])).expect("chain is x-monotone"))
            .chain([slope(d.at(v1), d.at(v2)).unwrap()])
            .max()
            .unwrap();
        steps.push(StepRecord { k: k + 1, vertex: v, at: (x[v], y), left_pred, max_outer_slope });
    }

    let trace = Trace { mode, steps };
    check_slope_bound(&trace, mode).into_result()?;
    let coords: Vec<Point> = d.pos.into_iter().map(|p| p.unwrap()).collect();
    let algo = match mode {
        Mode::DistinctX => "inc-x",
        Mode::NonAligned => "inc-nonaligned",
    };
    Ok((Drawing::straight(coords, &emb.edges(), algo), trace))
}

/// Height guaranteed for the drawing of an n-vertex graph.
pub fn height_bound(n: usize, mode: Mode) -> i64 {
    let n = n as i64;
    match mode {
        Mode::DistinctX => 2 + (n - 2) * (n - 3),
        Mode::NonAligned => 2 + (n - 1) * (n - 2) * (n - 2) / 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::q;
    use crate::graph::fixtures::{k4, triangle};
    use crate::verify::{check_non_aligned, check_planar};

    fn coords(d: &Drawing) -> Vec<(i64, i64)> {
        d.coords.iter().map(|p| (p.x.to_integer(), p.y.to_integer())).collect()
    }

    #[test]
    fn k4_x_order() {
        let co = canonical_order(&k4()).unwrap();
        assert_eq!(orient_and_xorder(&co).unwrap(), vec![1, 4, 2, 3]);
    }

    #[test]
    fn k4_distinct_x() {
        let (d, trace) = incremental_drawing(&k4(), Mode::DistinctX).unwrap();
        assert_eq!(coords(&d), vec![(1, 2), (4, 1), (2, 2), (3, 3)]);
        assert!(check_planar(&d).passed);
        // Outer faces: G_3 is flat on top, G_4 rises 1 over 2.
        assert_eq!(trace.steps[0].max_outer_slope, q(0, 1));
        assert_eq!(trace.max_slope(), Some(q(1, 2)));
    }

    #[test]
    fn k4_non_aligned() {
        let (d, trace) = incremental_drawing(&k4(), Mode::NonAligned).unwrap();
        assert_eq!(coords(&d), vec![(1, 2), (4, 1), (2, 3), (3, 5)]);
        assert!(check_planar(&d).passed);
        assert!(check_non_aligned(&d).passed);
        assert_eq!(trace.max_slope(), Some(q(3, 2)));
    }

    #[test]
    fn triangle_non_aligned() {
        let (d, _) = incremental_drawing(&triangle(), Mode::NonAligned).unwrap();
        assert_eq!(coords(&d), vec![(1, 2), (3, 1), (2, 3)]);
    }

    #[test]
    fn visibility_blocked_by_vertex_and_below_chain() {
        let mut d = PartialDrawing { pos: vec![None; 4], edges: vec![(0, 1), (0, 2), (2, 1)], chain: vec![0, 2, 1] };
        d.pos[0] = Some(Point::int(1, 2));
        d.pos[1] = Some(Point::int(4, 1));
        d.pos[2] = Some(Point::int(2, 2));
        assert!(!visible(&d, Point::int(3, 2), 0));
        assert!(visible(&d, Point::int(3, 2), 2));
        assert!(visible(&d, Point::int(3, 3), 0));
        assert!(!visible(&d, Point::int(3, 1), 1));
    }
}

//! Exact checkers for drawings and coordinate representations. Every
//! check returns a [`CheckReport`] carrying the first counterexample found.

mod rook_search;

pub use rook_search::exhaustive_rook_search;

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::geom::{self, in_open_rect, on_segment, overlap_beyond_shared, segments_intersect, Point, Q};
use crate::graph::Edge;
use crate::incremental::{Mode, Trace};
use crate::schnyder::WeakBarycentric;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    CoincidentVertices { u: usize, v: usize },
    VertexOnEdge { vertex: usize, edge: Edge },
    Crossing { first: Edge, second: Edge },
    SelfIntersection { edge: Edge },
    VertexInRectangle { edge: Edge, vertex: usize },
    SharedColumn { u: usize, v: usize },
    SharedRow { u: usize, v: usize },
    OffGrid { point: String },
    UnknownVertex { edge: Edge },
    NegativeEntry { vertex: usize },
    SumMismatch { vertex: usize, sum: i64, expected: i64 },
    NotInjective { u: usize, v: usize },
    EdgeCondition { edge: Edge, vertex: usize },
    SlopeBound { k: usize, slope: String, bound: String },
    HeightBound { k: usize, y: i64, bound: String },
    UnknownCheck { name: String },
    /// The check needs data the drawing alone does not carry.
    Unavailable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl CheckReport {
    fn new(check: &str, violation: Option<Violation>) -> CheckReport {
        CheckReport { check: check.to_string(), passed: violation.is_none(), violation }
    }

    /// Turns a failed report into [`Error::CheckFailed`].
    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::CheckFailed {
                check: self.check,
                detail: serde_json::to_string(&v).unwrap_or_default(),
            }),
        }
    }
}

struct Segment {
    edge: usize,
    index: usize,
    a: Point,
    b: Point,
    /// Graph vertex sitting at `a` / `b`, if that end is not a bend.
    va: Option<usize>,
    vb: Option<usize>,
    lo: Point,
    hi: Point,
}

fn segments_of(d: &Drawing) -> Vec<Segment> {
    let mut out = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        let pts = d.polyline(i);
        let last = pts.len() - 2;
        for s in 0..pts.len() - 1 {
            let (a, b) = (pts[s], pts[s + 1]);
            out.push(Segment {
                edge: i,
                index: s,
                a,
                b,
                va: (s == 0).then_some(e.edge.0),
                vb: (s == last).then_some(e.edge.1),
                lo: Point::new(a.x.min(b.x), a.y.min(b.y)),
                hi: Point::new(a.x.max(b.x), a.y.max(b.y)),
            });
        }
    }
    out
}

fn edges_in_range(d: &Drawing) -> Option<Violation> {
    d.edges
        .iter()
        .find(|e| e.edge.1 >= d.n() || e.edge.0 == e.edge.1)
        .map(|e| Violation::UnknownVertex { edge: e.edge })
}

fn coincident(d: &Drawing) -> Option<Violation> {
    let mut seen: HashMap<Point, usize> = HashMap::new();
    for (v, &p) in d.coords.iter().enumerate() {
        if let Some(&u) = seen.get(&p) {
            return Some(Violation::CoincidentVertices { u, v });
        }
        seen.insert(p, v);
    }
    None
}

/// Planarity of a polyline drawing: distinct vertices, no vertex on an edge
/// it does not end at, and segments meet only at shared endpoints.
pub fn check_planar(d: &Drawing) -> CheckReport {
    CheckReport::new("planar", planar_violation(d))
}

fn planar_violation(d: &Drawing) -> Option<Violation> {
    if let Some(v) = edges_in_range(d).or_else(|| coincident(d)) {
        return Some(v);
    }
    let segs = segments_of(d);
    for (w, &p) in d.coords.iter().enumerate() {
        for s in &segs {
            if s.va == Some(w) || s.vb == Some(w) {
                continue;
            }
            if p.x < s.lo.x || p.x > s.hi.x || p.y < s.lo.y || p.y > s.hi.y {
                continue;
            }
            if on_segment(p, s.a, s.b) {
                return Some(Violation::VertexOnEdge { vertex: w, edge: d.edges[s.edge].edge });
            }
        }
    }
    for i in 0..segs.len() {
        let s = &segs[i];
        for t in &segs[i + 1..] {
            if t.lo.x > s.hi.x || s.lo.x > t.hi.x || t.lo.y > s.hi.y || s.lo.y > t.hi.y {
                continue;
            }
            if s.edge == t.edge {
                let bad = if t.index == s.index + 1 {
                    overlap_beyond_shared(s.b, s.a, t.b)
                } else {
                    segments_intersect(s.a, s.b, t.a, t.b)
                };
                if bad {
                    return Some(Violation::SelfIntersection { edge: d.edges[s.edge].edge });
                }
                continue;
            }
            let shared = [(s.va, s.a, s.b), (s.vb, s.b, s.a)].into_iter().find_map(|(v, p, far)| {
                let v = v?;
                if t.va == Some(v) {
                    Some((p, far, t.b))
                } else if t.vb == Some(v) {
                    Some((p, far, t.a))
                } else {
                    None
                }
            });
            let bad = match shared {
                Some((p, f1, f2)) => overlap_beyond_shared(p, f1, f2),
                None => segments_intersect(s.a, s.b, t.a, t.b),
            };
            if bad {
                return Some(Violation::Crossing {
                    first: d.edges[s.edge].edge,
                    second: d.edges[t.edge].edge,
                });
            }
        }
    }
    None
}

/// Open-weak rectangle-of-influence: the open axis-parallel rectangle
/// spanned by each edge holds no vertex. Bends are ignored.
pub fn check_ri(d: &Drawing) -> CheckReport {
    let violation = edges_in_range(d).or_else(|| {
        d.edges.iter().find_map(|e| {
            let (a, b) = (d.coords[e.edge.0], d.coords[e.edge.1]);
            (0..d.n())
                .find(|&w| w != e.edge.0 && w != e.edge.1 && in_open_rect(d.coords[w], a, b))
                .map(|w| Violation::VertexInRectangle { edge: e.edge, vertex: w })
        })
    });
    CheckReport::new("ri", violation)
}

fn first_shared(vals: impl Iterator<Item = Q>) -> Option<(usize, usize)> {
    let mut seen: HashMap<Q, usize> = HashMap::new();
    for (v, q) in vals.enumerate() {
        if let Some(&u) = seen.get(&q) {
            return Some((u, v));
        }
        seen.insert(q, v);
    }
    None
}

/// No two vertices share a row or a column.
pub fn check_non_aligned(d: &Drawing) -> CheckReport {
    CheckReport::new("nonaligned", non_aligned_violation(d))
}

fn non_aligned_violation(d: &Drawing) -> Option<Violation> {
    if let Some((u, v)) = first_shared(d.coords.iter().map(|p| p.x)) {
        return Some(Violation::SharedColumn { u, v });
    }
    first_shared(d.coords.iter().map(|p| p.y)).map(|(u, v)| Violation::SharedRow { u, v })
}

/// Non-aligned with the vertex coordinates forming permutations of 1..=n.
pub fn check_rook(d: &Drawing) -> CheckReport {
    let violation = non_aligned_violation(d).or_else(|| {
        let n = d.n() as i64;
        let ok = |q: Q| q.is_integer() && q.to_integer() >= 1 && q.to_integer() <= n;
        if let Some(p) = d.coords.iter().find(|p| !ok(p.x) || !ok(p.y)) {
            return Some(Violation::OffGrid { point: p.to_string() });
        }
        None
    });
    CheckReport::new("rook", violation)
}

/// Vertices and bends are integer points of `[1, width] x [1, height]`.
pub fn check_grid(d: &Drawing, width: i64, height: i64) -> CheckReport {
    let inside = |p: &Point| {
        p.is_integral()
            && p.x.to_integer() >= 1
            && p.y.to_integer() >= 1
            && p.x.to_integer() <= width
            && p.y.to_integer() <= height
    };
    let violation = d
        .coords
        .iter()
        .chain(d.edges.iter().flat_map(|e| e.bends.iter()))
        .find(|p| !inside(p))
        .map(|p| Violation::OffGrid { point: p.to_string() });
    CheckReport::new("grid", violation)
}

fn lex_less(a: (i64, i64), b: (i64, i64)) -> bool {
    a.cmp(&b) == Ordering::Less
}

/// Weak barycentric representation: non-negative triples with constant
/// sum, pairwise distinct, and for every edge (u, v) and other vertex z
/// some k with (p_k, p_k+1) of both u and v lexicographically below z's.
pub fn check_weak_barycentric(rep: &WeakBarycentric, edges: &[Edge]) -> CheckReport {
    CheckReport::new("barycentric", barycentric_violation(rep, edges))
}

fn barycentric_violation(rep: &WeakBarycentric, edges: &[Edge]) -> Option<Violation> {
    let p = &rep.coords;
    let n = p.len();
    let c = rep.sum;
    for (v, t) in p.iter().enumerate() {
        if t.iter().any(|&x| x < 0) {
            return Some(Violation::NegativeEntry { vertex: v });
        }
        let s: i64 = t.iter().sum();
        if s != c {
            return Some(Violation::SumMismatch { vertex: v, sum: s, expected: c });
        }
    }
    let mut seen: HashMap<[i64; 3], usize> = HashMap::new();
    for (v, t) in p.iter().enumerate() {
        if let Some(&u) = seen.get(t) {
            return Some(Violation::NotInjective { u, v });
        }
        seen.insert(*t, v);
    }
    let pair = |v: usize, k: usize| (p[v][k], p[v][(k + 1) % 3]);
    for &e in edges {
        if e.1 >= n {
            return Some(Violation::UnknownVertex { edge: e });
        }
        for z in 0..n {
            if e.contains(z) {
                continue;
            }
            let ok = (0..3).any(|k| lex_less(pair(e.0, k), pair(z, k)) && lex_less(pair(e.1, k), pair(z, k)));
            if !ok {
                return Some(Violation::EdgeCondition { edge: e, vertex: z });
            }
        }
    }
    None
}

/// Upper-envelope slope bound of every prefix drawing and the bound on the
/// chosen y-coordinate of every added vertex.
pub fn check_slope_bound(trace: &Trace, mode: Mode) -> CheckReport {
    let s = |k: usize| -> Q {
        let k = k as i64;
        match mode {
            Mode::DistinctX => Q::from_integer(k - 3),
            Mode::NonAligned => Q::from_integer((k - 1) * (k - 2) / 2),
        }
    };
    let violation = trace.steps.iter().find_map(|st| {
        let bound = s(st.k);
        if st.max_outer_slope > bound {
            return Some(Violation::SlopeBound {
                k: st.k,
                slope: geom::format_q(st.max_outer_slope),
                bound: geom::format_q(bound),
            });
        }
        let (xl, yl) = st.left_pred?;
        let prev = st.k - 1;
        let extra = match mode {
            Mode::DistinctX => 1,
            Mode::NonAligned => 1 + prev as i64 - 2,
        };
        let limit = Q::from_integer(yl) + Q::from_integer(st.at.0 - xl) * s(prev) + Q::from_integer(extra);
        (Q::from_integer(st.at.1) > limit).then(|| Violation::HeightBound {
            k: st.k,
            y: st.at.1,
            bound: geom::format_q(limit),
        })
    });
    CheckReport::new("slopes", violation)
}

pub fn unknown_check(name: &str) -> CheckReport {
    if name == "slopes" {
        let reason = "the slope bound is checked against an incremental drawing's trace".to_string();
        return CheckReport::new(name, Some(Violation::Unavailable { reason }));
    }
    CheckReport::new(name, Some(Violation::UnknownCheck { name: name.to_string() }))
}

/// Checks named by `checks` (`planar`, `ri`, `nonaligned`, `rook`, `grid`);
/// unknown names are reported as failures.
pub fn run_named(d: &Drawing, checks: &[String], grid: Option<(i64, i64)>) -> Vec<CheckReport> {
    checks
        .iter()
        .map(|c| match c.as_str() {
            "planar" => check_planar(d),
            "ri" => check_ri(d),
            "nonaligned" => check_non_aligned(d),
            "rook" => check_rook(d),
            "grid" => {
                let (w, h) = grid.unwrap_or((d.width(), d.height()));
                check_grid(d, w, h)
            }
            other => unknown_check(other),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::DrawnEdge;
    use crate::geom::q;

    fn k4_drawing(p3: Point) -> Drawing {
        let edges = [Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)];
        Drawing::straight(vec![Point::int(1, 2), Point::int(4, 1), Point::int(2, 2), p3], &edges, "test")
    }

    #[test]
    fn k4_fixture_is_planar() {
        assert!(check_planar(&k4_drawing(Point::int(3, 3))).passed);
    }

    #[test]
    fn vertex_on_segment_is_caught() {
        // (3, 2) puts v1-v4 through v3.
        let r = check_planar(&k4_drawing(Point::int(3, 2)));
        assert_eq!(r.violation, Some(Violation::VertexOnEdge { vertex: 2, edge: Edge(0, 3) }));
    }

    #[test]
    fn crossing_is_caught() {
        let d = Drawing::straight(
            vec![Point::int(1, 1), Point::int(3, 3), Point::int(1, 3), Point::int(3, 1)],
            &[Edge(0, 1), Edge(2, 3)],
            "x",
        );
        assert!(matches!(check_planar(&d).violation, Some(Violation::Crossing { .. })));
    }

    #[test]
    fn bend_detour_avoids_crossing() {
        let mut d = Drawing::straight(
            vec![Point::int(1, 1), Point::int(3, 3), Point::int(1, 3), Point::int(3, 1)],
            &[Edge(0, 1), Edge(2, 3)],
            "x",
        );
        d.edges[0] = DrawnEdge { edge: Edge(0, 1), bends: vec![Point::int(0, 4)] };
        assert!(check_planar(&d).passed);
    }

    #[test]
    fn ri_boundary_contact_allowed() {
        let d = Drawing::straight(
            vec![Point::int(1, 1), Point::int(3, 3), Point::int(2, 3)],
            &[Edge(0, 1)],
            "x",
        );
        assert!(check_ri(&d).passed);
        let mut d2 = d.clone();
        d2.coords[2] = Point::new(q(5, 2), q(2, 1));
        assert_eq!(check_ri(&d2).violation, Some(Violation::VertexInRectangle { edge: Edge(0, 1), vertex: 2 }));
    }

    #[test]
    fn rook_requires_permutation() {
        let d = Drawing::straight(vec![Point::int(1, 2), Point::int(2, 1)], &[], "x");
        assert!(check_rook(&d).passed);
        let d = Drawing::straight(vec![Point::int(1, 3), Point::int(2, 1)], &[], "x");
        assert!(!check_rook(&d).passed);
        assert!(check_non_aligned(&d).passed);
    }

    #[test]
    fn report_serializes() {
        let r = check_non_aligned(&Drawing::straight(vec![Point::int(1, 1), Point::int(1, 2)], &[], "x"));
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"check":"nonaligned","passed":false,"violation":{"kind":"shared_column","u":0,"v":1}}"#);
    }
}

//! Graph and drawing JSON.
//!
//! Graphs are `{"n", "rotations", "outer_face"}` with counterclockwise
//! rotations. Drawings list vertices, edges with bends in order from `u` to
//! `v`, and a `meta` summary; coordinates are integers, or `"p/q"` strings
//! for drawings that still hold fractional positions.

use serde::{Deserialize, Serialize};

use crate::drawing::{Drawing, DrawnEdge};
use crate::error::{Error, Result};
use crate::geom::{format_q, parse_q, Point, Q};
use crate::graph::{Edge, PlanarEmbedding};

pub fn graph_to_json(emb: &PlanarEmbedding) -> String {
    serde_json::to_string(emb).expect("embedding serializes")
}

pub fn graph_from_json(s: &str) -> Result<PlanarEmbedding> {
    serde_json::from_str(s).map_err(|e| Error::InvalidEmbedding(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Frac(String),
}

impl Coord {
    fn of(v: Q) -> Coord {
        if v.is_integer() {
            Coord::Int(v.to_integer())
        } else {
            Coord::Frac(format_q(v))
        }
    }

    fn value(&self) -> Result<Q> {
        match self {
            Coord::Int(i) => Ok(Q::from_integer(*i)),
            Coord::Frac(s) => parse_q(s).ok_or_else(|| Error::Precondition(format!("bad coordinate {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    x: Coord,
    y: Coord,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    u: usize,
    v: usize,
    #[serde(default)]
    bends: Vec<[Coord; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingMeta {
    pub algo: String,
    pub width: i64,
    pub height: i64,
    pub bends: usize,
}

#[derive(Serialize, Deserialize)]
struct DrawingJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    meta: DrawingMeta,
}

pub fn drawing_meta(d: &Drawing) -> DrawingMeta {
    DrawingMeta { algo: d.algo.clone(), width: d.width(), height: d.height(), bends: d.bend_count() }
}

pub fn drawing_to_json(d: &Drawing) -> String {
    let pt = |p: &Point| [Coord::of(p.x), Coord::of(p.y)];
    let j = DrawingJson {
        vertices: d.coords.iter().enumerate().map(|(id, p)| VertexJson { id, x: Coord::of(p.x), y: Coord::of(p.y) }).collect(),
        edges: d.edges.iter().map(|e| EdgeJson { u: e.edge.0, v: e.edge.1, bends: e.bends.iter().map(pt).collect() }).collect(),
        meta: drawing_meta(d),
    };
    serde_json::to_string_pretty(&j).expect("drawing serializes")
}

/// Parses a drawing; ids must be exactly `0..n`. `meta` is informational
/// and not checked against the geometry.
pub fn drawing_from_json(s: &str) -> Result<Drawing> {
    let j: DrawingJson = serde_json::from_str(s).map_err(|e| Error::Precondition(format!("drawing JSON: {e}")))?;
    let n = j.vertices.len();
    let mut coords: Vec<Option<Point>> = vec![None; n];
    for v in &j.vertices {
        let slot = coords.get_mut(v.id).ok_or_else(|| Error::Precondition(format!("vertex id {} out of range", v.id)))?;
        if slot.is_some() {
            return Err(Error::Precondition(format!("vertex id {} repeated", v.id)));
        }
        *slot = Some(Point::new(v.x.value()?, v.y.value()?));
    }
    let coords: Vec<Point> = coords.into_iter().map(|p| p.expect("ids are a permutation")).collect();
    let mut edges = Vec::with_capacity(j.edges.len());
    for e in &j.edges {
        if e.u >= n || e.v >= n || e.u == e.v {
            return Err(Error::Precondition(format!("bad edge ({}, {})", e.u, e.v)));
        }
        let mut bends = e.bends.iter().map(|[x, y]| Ok(Point::new(x.value()?, y.value()?))).collect::<Result<Vec<_>>>()?;
        if e.u > e.v {
            bends.reverse();
        }
        edges.push(DrawnEdge { edge: Edge::new(e.u, e.v), bends });
    }
    edges.sort_by_key(|e| e.edge);
    if edges.windows(2).any(|w| w[0].edge == w[1].edge) {
        return Err(Error::Precondition("repeated edge".into()));
    }
    Ok(Drawing { coords, edges, algo: j.meta.algo })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphType};
    use crate::geom::q;

    #[test]
    fn graph_round_trip_is_byte_identical() {
        for (t, n) in [(GraphType::Octahedron, 6), (GraphType::Apollonian, 15), (GraphType::RandomTriangulation, 30)] {
            let g = generate(t, n, 0, 4).unwrap();
            let s = graph_to_json(&g);
            assert!(s.starts_with(r#"{"n":"#));
            assert_eq!(graph_to_json(&graph_from_json(&s).unwrap()), s);
        }
    }

    #[test]
    fn graph_field_order() {
        let g = generate(GraphType::Octahedron, 6, 0, 0).unwrap();
        let s = graph_to_json(&g);
        let (a, b, c) = (s.find("\"n\"").unwrap(), s.find("\"rotations\"").unwrap(), s.find("\"outer_face\"").unwrap());
        assert!(a < b && b < c);
    }

    #[test]
    fn rejects_bad_graph() {
        assert!(graph_from_json(r#"{"n":2,"rotations":[[1]],"outer_face":[0,1]}"#).is_err());
    }

    #[test]
    fn drawing_round_trip_keeps_fractions() {
        let mut d = Drawing::straight(vec![Point::int(1, 1), Point::new(q(5, 2), q(7, 3)), Point::int(3, 4)], &[Edge(0, 1), Edge(1, 2)], "x");
        d.edges[1].bends = vec![Point::int(3, 3), Point::new(q(1, 2), Q::from_integer(2))];
        let s = drawing_to_json(&d);
        assert!(s.contains("\"5/2\""));
        assert_eq!(drawing_from_json(&s).unwrap(), d);
    }

    #[test]
    fn reversed_edges_flip_bends() {
        let s = r#"{"vertices":[{"id":1,"x":2,"y":1},{"id":0,"x":1,"y":2}],
                   "edges":[{"u":1,"v":0,"bends":[[2,2],[1,1]]}],
                   "meta":{"algo":"t","width":2,"height":2,"bends":2}}"#;
        let d = drawing_from_json(s).unwrap();
        assert_eq!(d.edges[0].bends, vec![Point::int(1, 1), Point::int(2, 2)]);
    }
}

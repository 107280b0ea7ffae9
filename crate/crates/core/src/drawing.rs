use num_traits::Zero;

use crate::geom::{Point, Q};
use crate::graph::Edge;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawnEdge {
    pub edge: Edge,
    /// Bends in order from `edge.0` to `edge.1`.
    pub bends: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub coords: Vec<Point>,
    pub edges: Vec<DrawnEdge>,
    pub algo: String,
}

impl Drawing {
    pub fn straight(coords: Vec<Point>, edges: &[Edge], algo: &str) -> Drawing {
        let edges = edges.iter().map(|&edge| DrawnEdge { edge, bends: Vec::new() }).collect();
        Drawing { coords, edges, algo: algo.to_string() }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges.iter().map(|e| e.edge).collect()
    }

    pub fn bend_count(&self) -> usize {
        self.edges.iter().map(|e| e.bends.len()).sum()
    }

    pub fn find_edge(&self, e: Edge) -> Option<usize> {
        self.edges.iter().position(|d| d.edge == e)
    }

    /// Points of the edge's polyline from `edge.0` to `edge.1`.
    pub fn polyline(&self, i: usize) -> Vec<Point> {
        let e = &self.edges[i];
        let mut pts = Vec::with_capacity(e.bends.len() + 2);
        pts.push(self.coords[e.edge.0]);
        pts.extend_from_slice(&e.bends);
        pts.push(self.coords[e.edge.1]);
        pts
    }

    fn all_points(&self) -> impl Iterator<Item = &Point> {
        self.coords.iter().chain(self.edges.iter().flat_map(|e| e.bends.iter()))
    }

    /// Largest x over vertices and bends, rounded up.
    pub fn width(&self) -> i64 {
        self.all_points().map(|p| p.x).max().map_or(0, |x| x.ceil().to_integer())
    }

    pub fn height(&self) -> i64 {
        self.all_points().map(|p| p.y).max().map_or(0, |y| y.ceil().to_integer())
    }

    pub fn min_coord(&self) -> Q {
        self.all_points().flat_map(|p| [p.x, p.y]).min().unwrap_or_else(Q::zero)
    }

    /// Mirror in the diagonal: swaps x and y everywhere.
    pub fn transposed(&self) -> Drawing {
        let flip = |p: &Point| Point::new(p.y, p.x);
        Drawing {
            coords: self.coords.iter().map(flip).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| DrawnEdge { edge: e.edge, bends: e.bends.iter().map(flip).collect() })
                .collect(),
            algo: self.algo.clone(),
        }
    }
}

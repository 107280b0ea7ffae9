//! Rook drawings with few bends: hit every filled triangle with an
//! independent edge set, subdivide all but the outer edge of it, draw the
//! result as an RI rook drawing, and turn each subdivision vertex into a bend.

use serde::Serialize;

use crate::drawing::{Drawing, DrawnEdge};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::graph::{classify_triangles, subdivide_and_retriangulate, Edge, PlanarEmbedding, Subdivision};
use crate::hitting::{min_weight_hitting_set, recursive_hitting_set, HittingSet};
use crate::ri::{extend_bbm, move_subdivision_vertex, renormalize};
use crate::verify::{check_planar, check_ri, check_rook};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum HittingMethod {
    Recursive,
    MinWeight,
}

/// Everything the pipeline built on the way.
#[derive(Clone, Debug)]
pub struct PipelineState {
    pub hitting: HittingSet,
    pub method: HittingMethod,
    pub f_g: usize,
    pub g1: Subdivision,
    /// RI rook drawing of `G1 - e_o`.
    pub ri: Drawing,
    /// Same, with subdivision vertices on fractional coordinates.
    pub renormalized: Drawing,
    /// After every subdivision vertex has moved onto grid lines.
    pub moved: Drawing,
    /// Bends before straightening, `|E_s| + 1`.
    pub bends_before: usize,
    /// Edges whose bend was removed.
    pub straightened: Vec<Edge>,
    pub drawing: Drawing,
}

/// Smallest hitting set over the three outer edges and both constructions;
/// ties go to the smaller edge, then the recursive construction.
pub fn choose_hitting_set(emb: &PlanarEmbedding) -> Result<(HittingSet, HittingMethod)> {
    let mut outer = emb.outer_edges();
    outer.sort();
    let mut best: Option<(HittingSet, HittingMethod)> = None;
    for e in outer {
        for m in [HittingMethod::Recursive, HittingMethod::MinWeight] {
            let hs = match m {
                HittingMethod::Recursive => recursive_hitting_set(emb, e)?,
                HittingMethod::MinWeight => min_weight_hitting_set(emb, e)?,
            };
            if best.as_ref().is_none_or(|(b, _)| hs.len() < b.len()) {
                best = Some((hs, m));
            }
        }
    }
    best.ok_or(Error::NotTriangulated)
}

pub fn rook_with_bends(emb: &PlanarEmbedding) -> Result<Drawing> {
    Ok(rook_with_bends_state(emb)?.drawing)
}

pub fn rook_with_bends_state(emb: &PlanarEmbedding) -> Result<PipelineState> {
    let n = emb.n();
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    let f_g = classify_triangles(emb)?.f_g;
    let (hitting, method) = choose_hitting_set(emb)?;
    let e_o = hitting.e_o;
    let g1 = subdivide_and_retriangulate(emb, &hitting.interior())?;
    // Original ids are kept; subdivision vertices come after them.
    debug_assert!(g1.vx.iter().all(|&(_, x)| x >= n));
    if let Some(t) = classify_triangles(&g1.emb)?.separating().find(|t| !t.contains_edge(e_o)) {
        return Err(Error::StraySeparatingTriangle(t.vertices));
    }
    let ri = extend_bbm(&g1.emb, e_o)?;
    let originals: Vec<usize> = (0..n).collect();
    let renormalized = renormalize(&ri, &originals)?;
    check_ri(&renormalized).into_result()?;
    let mut moved = renormalized.clone();
    for &(_, x) in &g1.vx {
        moved = move_subdivision_vertex(&moved, x)?;
    }

    let coords: Vec<Point> = moved.coords[..n].to_vec();
    let mut edges: Vec<DrawnEdge> = emb
        .edges()
        .into_iter()
        .filter(|&e| e != e_o)
        .map(|e| {
            let bends = g1.vx.iter().find(|(s, _)| *s == e).map(|&(_, x)| vec![moved.coords[x]]).unwrap_or_default();
            DrawnEdge { edge: e, bends }
        })
        .collect();
    // Column 1 and row 1 hold only the ends of e_o.
    let pos = edges.partition_point(|d| d.edge < e_o);
    edges.insert(pos, DrawnEdge { edge: e_o, bends: vec![Point::int(1, 1)] });
    let mut drawing = Drawing { coords, edges, algo: "rook-bends".into() };
    let bends_before = drawing.bend_count();
    check_planar(&drawing).into_result()?;

    let mut straightened = Vec::new();
    for &(e, _) in &g1.vx {
        let i = drawing.find_edge(e).expect("edge kept");
        let bend = std::mem::take(&mut drawing.edges[i].bends);
        if check_planar(&drawing).passed {
            straightened.push(e);
        } else {
            drawing.edges[i].bends = bend;
        }
    }
    check_planar(&drawing).into_result()?;
    check_rook(&drawing).into_result()?;
    if drawing.bend_count() > hitting.len() {
        return Err(Error::CheckFailed { check: "bends".into(), detail: format!("{} bends for {} edges", drawing.bend_count(), hitting.len()) });
    }
    Ok(PipelineState { hitting, method, f_g, g1, ri, renormalized, moved, bends_before, straightened, drawing })
}

/// min{f_G, floor((2n - 5) / 3)}.
pub fn bend_bound(n: usize, f_g: usize) -> usize {
    f_g.min((2 * n).saturating_sub(5) / 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{apollonian, double_wheel, four_connected, octahedron, random_triangulation, rng};

    fn run(g: &PlanarEmbedding) -> PipelineState {
        let s = rook_with_bends_state(g).unwrap();
        assert!(s.drawing.bend_count() <= bend_bound(g.n(), s.f_g));
        assert_eq!(s.bends_before, s.hitting.len());
        assert_eq!(s.drawing.edge_list(), g.edges());
        for e in &s.drawing.edges {
            assert!(e.bends.iter().all(|b| b.x.is_integer() && b.y.is_integer()));
        }
        s
    }

    #[test]
    fn octahedron_one_bend() {
        let s = run(&octahedron());
        assert_eq!(s.drawing.bend_count(), 1);
        assert_eq!((s.drawing.width(), s.drawing.height()), (6, 6));
    }

    #[test]
    fn four_connected_one_bend() {
        assert_eq!(run(&double_wheel(8).unwrap()).drawing.bend_count(), 1);
        let mut r = rng(5);
        for n in 6..20 {
            assert_eq!(run(&four_connected(n, &mut r).unwrap()).drawing.bend_count(), 1);
        }
    }

    #[test]
    fn apollonian_eleven() {
        let mut r = rng(11);
        for _ in 0..10 {
            let s = run(&apollonian(11, &mut r).unwrap());
            assert!(s.drawing.bend_count() <= 5);
        }
    }

    #[test]
    fn random_triangulations() {
        let mut r = rng(12);
        for i in 0..30 {
            run(&random_triangulation(5 + i, &mut r).unwrap());
        }
    }

    #[test]
    fn rejects_small() {
        let g = crate::graph::fixtures::k4();
        assert!(matches!(rook_with_bends(&g), Err(Error::TooSmall { .. })));
    }
}

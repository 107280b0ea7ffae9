//! Coordinate changes that keep relative coordinates (hence RI and
//! planarity), the local move of a degree-4 vertex onto its neighbours'
//! grid lines, and the one-bend and stretched drawings.

use std::collections::HashSet;

use serde::Serialize;

use crate::drawing::{Drawing, DrawnEdge};
use crate::error::{Error, Result};
use crate::geom::{in_open_rect, Point, Q};
use crate::graph::{Edge, PlanarEmbedding};
use crate::verify::{check_grid, check_non_aligned, check_planar, check_ri, check_rook};

use super::{bbm_drawing, Corners};

/// Reassigns coordinates in each axis order: vertices of `integer_set`
/// get the next integer, the others step by `1 / (k + 1)` where `k` is the
/// number of vertices outside the set. Relative coordinates are kept.
pub fn renormalize(d: &Drawing, integer_set: &[usize]) -> Result<Drawing> {
    if d.bend_count() > 0 {
        return Err(Error::Precondition("renormalize expects a straight-line drawing".into()));
    }
    if let Some(v) = check_non_aligned(d).violation {
        return Err(Error::Precondition(format!("shared coordinate: {v:?}")));
    }
    let n = d.n();
    let mut integral = vec![false; n];
    for &v in integer_set {
        integral[v] = true;
    }
    let step = Q::new(1, (n - integer_set.len()) as i64 + 1);
    let assign = |key: &dyn Fn(usize) -> Q| -> Vec<Q> {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| key(v));
        let mut out = vec![Q::from_integer(0); n];
        let mut w = Q::from_integer(0);
        for v in order {
            w = if integral[v] { w.floor() + 1 } else { w + step };
            out[v] = w;
        }
        out
    };
    let xs = assign(&|v| d.coords[v].x);
    let ys = assign(&|v| d.coords[v].y);
    let mut out = d.clone();
    out.coords = (0..n).map(|v| Point::new(xs[v], ys[v])).collect();
    Ok(out)
}

fn fail(detail: String) -> Error {
    Error::CheckFailed { check: "move".into(), detail }
}

/// Open rectangle without any vertex other than `skip` strictly inside.
fn empty_rect(d: &Drawing, a: Point, b: Point, skip: usize) -> bool {
    (0..d.n()).all(|w| w == skip || !in_open_rect(d.coords[w], a, b))
}

/// Closed bounding box of `a, b` contains that of `c, d`.
fn rect_contains(a: Point, b: Point, c: Point, d: Point) -> bool {
    let within = |lo: Q, hi: Q, v: Q| lo <= v && v <= hi;
    let (x0, x1) = (a.x.min(b.x), a.x.max(b.x));
    let (y0, y1) = (a.y.min(b.y), a.y.max(b.y));
    [c, d].iter().all(|p| within(x0, x1, p.x) && within(y0, y1, p.y))
}

/// One rectangle argument behind a move, evaluated on the drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveClaim {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePlan {
    pub target: Point,
    /// Target at local (4, 2) rather than (2, 2).
    pub mirrored: bool,
    pub claims: Vec<MoveClaim>,
}

/// Checks the preconditions for moving the degree-4 vertex `xv` and picks
/// its target. With columns and rows of `xv` and its neighbours ranked
/// 1..5, `xv` sits at (3, 3) and goes to (2, 2) when vacant, else to (4, 2).
pub fn plan_move(d: &Drawing, xv: usize) -> Result<MovePlan> {
    let pre = |m: String| Error::Precondition(m);
    let nbrs: Vec<usize> = d.edges.iter().filter(|e| e.edge.contains(xv)).map(|e| e.edge.other(xv)).collect();
    if nbrs.len() != 4 {
        return Err(pre(format!("vertex {xv} has degree {}", nbrs.len())));
    }
    let x = d.coords[xv];
    let five: Vec<Point> = std::iter::once(x).chain(nbrs.iter().map(|&u| d.coords[u])).collect();
    let xs: HashSet<Q> = five.iter().map(|p| p.x).collect();
    let ys: HashSet<Q> = five.iter().map(|p| p.y).collect();
    if xs.len() != 5 || ys.len() != 5 {
        return Err(pre(format!("vertex {xv} shares a grid line with a neighbour")));
    }
    // u[0..4] in quadrants NE, NW, SW, SE.
    let mut u = [usize::MAX; 4];
    for &w in &nbrs {
        let p = d.coords[w];
        let q = match (p.x > x.x, p.y > x.y) {
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        };
        if u[q] != usize::MAX {
            return Err(pre(format!("two neighbours of {xv} in one quadrant")));
        }
        u[q] = w;
    }
    for i in 0..4 {
        let (a, b) = (u[i], u[(i + 1) % 4]);
        if d.find_edge(Edge::new(a, b)).is_none() {
            return Err(pre(format!("neighbours of {xv} do not form a 4-cycle")));
        }
    }
    let mut cols: Vec<Q> = xs.into_iter().collect();
    let mut rows: Vec<Q> = ys.into_iter().collect();
    cols.sort();
    rows.sort();
    for mirrored in [false, true] {
        let target = Point::new(if mirrored { cols[3] } else { cols[1] }, rows[1]);
        if d.coords.contains(&target) {
            continue;
        }
        let claims = move_claims(d, xv, u, target, mirrored);
        return Ok(MovePlan { target, mirrored, claims });
    }
    Err(fail(format!("both target points next to {xv} are occupied")))
}

/// Moves `xv` onto the column of one neighbour and the row of another.
/// Every claim of the plan must hold, and the result is re-certified.
pub fn move_subdivision_vertex(d: &Drawing, xv: usize) -> Result<Drawing> {
    let plan = plan_move(d, xv)?;
    if let Some(c) = plan.claims.iter().find(|c| !c.holds) {
        return Err(fail(format!("{} fails around vertex {xv}", c.name)));
    }
    let mut out = d.clone();
    out.coords[xv] = plan.target;
    check_ri(&out).into_result()?;
    check_planar(&out).into_result()?;
    Ok(out)
}

/// The rectangle arguments for moving `xv` to `target`, stated for the
/// target at local (2, 2); the (4, 2) case is its mirror image.
fn move_claims(d: &Drawing, xv: usize, u: [usize; 4], target: Point, mirror: bool) -> Vec<MoveClaim> {
    let f = |p: Point| if mirror { Point::new(-p.x, p.y) } else { p };
    let view: Vec<Point> = d.coords.iter().map(|&p| f(p)).collect();
    let local = Drawing { coords: view, edges: Vec::new(), algo: String::new() };
    let [u1, u2, u3, u4] = if mirror { [u[1], u[0], u[3], u[2]] } else { u };
    let (x, t) = (local.coords[xv], f(target));
    let at = |v: usize| local.coords[v];
    let mut cols: Vec<Q> = [xv, u1, u2, u3, u4].iter().map(|&v| at(v).x).collect();
    let mut rows: Vec<Q> = [xv, u1, u2, u3, u4].iter().map(|&v| at(v).y).collect();
    cols.sort();
    rows.sort();
    let grid = |c: usize, r: usize| Point::new(cols[c - 1], rows[r - 1]);
    let mut out = Vec::new();
    let mut claim = |holds: bool, name: &str| out.push(MoveClaim { name: name.to_string(), holds });

    claim(t == grid(2, 2) && x == grid(3, 3), "local frame");
    claim(rect_contains(at(u3), x, at(u3), t), "R(u3,x') in R(u3,x)");
    claim(empty_rect(&local, at(u3), x, xv), "R(u3,x) empty");
    claim(rect_contains(at(u3), at(u4), t, at(u4)), "R(x',u4) in R(u3,u4)");
    claim(empty_rect(&local, at(u3), at(u4), xv), "R(u3,u4) empty");
    claim(rect_contains(at(u2), at(u3), t, at(u2)), "R(x',u2) in R(u2,u3)");
    claim(empty_rect(&local, at(u2), at(u3), xv), "R(u2,u3) empty");
    claim(rect_contains(grid(2, 2), grid(5, 5), t, at(u1)), "R(x',u1) in R1..R4");
    let mut parts = vec![(grid(2, 2), grid(4, 4)), (grid(2, 4), grid(4, 5)), (grid(4, 2), grid(5, 4))];
    if at(u1) == grid(5, 5) {
        parts.push((grid(4, 4), grid(5, 5)));
    }
    for (i, &(a, b)) in parts.iter().enumerate() {
        claim(empty_rect(&local, a, b, xv), &format!("R{} empty", i + 1));
    }
    for (i, v) in [u1, u2, u3, u4].into_iter().enumerate() {
        claim(empty_rect(&local, t, at(v), xv), &format!("R(x',u{}) empty", i + 1));
    }
    out
}

fn base(emb: &PlanarEmbedding) -> Result<(Drawing, Corners, Edge)> {
    let e = *emb.outer_edges().iter().min().ok_or(Error::NotTriangulated)?;
    let d = bbm_drawing(emb, e)?;
    Ok((d, Corners::of(emb, e)?, e))
}

fn add_edge(d: &mut Drawing, e: Edge, bends: Vec<Point>) {
    let i = d.edges.partition_point(|x| x.edge < e);
    d.edges.insert(i, DrawnEdge { edge: e, bends });
}

/// Rook drawing of a 4-connected triangulation with the smallest outer
/// edge routed down column 1 and along row 1 through a bend at (1, 1).
pub fn one_bend_rook(emb: &PlanarEmbedding) -> Result<Drawing> {
    let (mut d, _, e) = base(emb)?;
    add_edge(&mut d, e, vec![Point::int(1, 1)]);
    d.algo = "one-bend".into();
    check_planar(&d).into_result()?;
    check_rook(&d).into_result()?;
    Ok(d)
}

/// Straight-line drawing on n x (n^2 - 3n + 4): the west end of the removed
/// edge is lifted so the edge passes above (n - 1, n - 1).
pub fn stretch_tall(emb: &PlanarEmbedding) -> Result<Drawing> {
    let (mut d, c, e) = base(emb)?;
    let n = emb.n() as i64;
    let h = n * n - 3 * n + 4;
    d.coords[c.west] = Point::int(1, h);
    add_edge(&mut d, e, Vec::new());
    d.algo = "stretch-tall".into();
    certify_straight(&d, n, h)?;
    Ok(d)
}

/// Straight-line drawing on (2n - 2) x (2n - 2): both ends of the removed
/// edge move out so it has slope -1.
pub fn stretch_square(emb: &PlanarEmbedding) -> Result<Drawing> {
    let (mut d, c, e) = base(emb)?;
    let s = 2 * emb.n() as i64 - 2;
    d.coords[c.west] = Point::int(1, s);
    d.coords[c.east] = Point::int(s, 1);
    add_edge(&mut d, e, Vec::new());
    d.algo = "stretch-square".into();
    certify_straight(&d, s, s)?;
    Ok(d)
}

fn certify_straight(d: &Drawing, w: i64, h: i64) -> Result<()> {
    check_planar(d).into_result()?;
    check_non_aligned(d).into_result()?;
    check_grid(d, w, h).into_result()
}

use crate::drawing::{Drawing, DrawnEdge};
use crate::error::{Error, Result};
use crate::geom::{on_segment, overlap_beyond_shared, segments_intersect, Point};
use crate::graph::{Edge, PlanarEmbedding};

use super::{check_planar, check_rook};

const MAX_N: usize = 7;

/// Searches all rook placements on the n x n grid for a planar drawing with
/// at most `allow_bends` bends (0 or 1; a bend sits on an integer point).
/// Both axis reflections preserve rook drawings, so vertex 0 is restricted
/// to the lower-left quadrant.
pub fn exhaustive_rook_search(emb: &PlanarEmbedding, allow_bends: usize) -> Result<Option<Drawing>> {
    let n = emb.n();
    if n > MAX_N {
        return Err(Error::Precondition(format!("exhaustive search supports n <= {MAX_N}")));
    }
    if allow_bends > 1 {
        return Err(Error::Precondition("exhaustive search supports at most one bend".into()));
    }
    let edges = emb.edges();
    if let Some(coords) = search(n, &edges, &mut |c| Some(c.to_vec())) {
        let d = Drawing::straight(coords, &edges, "exhaustive");
        return Ok(Some(d));
    }
    if allow_bends == 0 {
        return Ok(None);
    }
    for (i, &e) in edges.iter().enumerate() {
        let rest: Vec<Edge> = edges.iter().copied().filter(|&f| f != e).collect();
        let found = search(n, &rest, &mut |coords| {
            for bx in 1..=n as i64 {
                for by in 1..=n as i64 {
                    let b = Point::int(bx, by);
                    if coords.contains(&b) {
                        continue;
                    }
                    let mut d = Drawing::straight(coords.to_vec(), &edges, "exhaustive");
                    d.edges[i] = DrawnEdge { edge: e, bends: vec![b] };
                    if check_planar(&d).passed {
                        return Some(d);
                    }
                }
            }
            None
        });
        if let Some(d) = found {
            debug_assert!(check_rook(&d).passed);
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Backtracking over x-permutations and then y-values, pruning as soon as
/// a completed edge conflicts. `accept` sees each planar straight-line
/// rook drawing of `edges` and may stop the search.
fn search<T>(n: usize, edges: &[Edge], accept: &mut dyn FnMut(&[Point]) -> Option<T>) -> Option<T> {
    let mut xs = vec![0i64; n];
    let mut used = vec![false; n + 1];
    permute_x(0, n, &mut xs, &mut used, edges, accept)
}

fn permute_x<T>(
    v: usize,
    n: usize,
    xs: &mut Vec<i64>,
    used: &mut Vec<bool>,
    edges: &[Edge],
    accept: &mut dyn FnMut(&[Point]) -> Option<T>,
) -> Option<T> {
    if v == n {
        let mut coords = Vec::with_capacity(n);
        let mut yused = vec![false; n + 1];
        return assign_y(0, n, xs, &mut coords, &mut yused, edges, accept);
    }
    let limit = if v == 0 { (n as i64 + 1) / 2 } else { n as i64 };
    for x in 1..=limit {
        if used[x as usize] {
            continue;
        }
        used[x as usize] = true;
        xs[v] = x;
        let r = permute_x(v + 1, n, xs, used, edges, accept);
        used[x as usize] = false;
        if r.is_some() {
            return r;
        }
    }
    None
}

fn assign_y<T>(
    v: usize,
    n: usize,
    xs: &[i64],
    coords: &mut Vec<Point>,
    used: &mut Vec<bool>,
    edges: &[Edge],
    accept: &mut dyn FnMut(&[Point]) -> Option<T>,
) -> Option<T> {
    if v == n {
        return accept(coords);
    }
    let limit = if v == 0 { (n as i64 + 1) / 2 } else { n as i64 };
    for y in 1..=limit {
        if used[y as usize] {
            continue;
        }
        let p = Point::int(xs[v], y);
        coords.push(p);
        if consistent(v, coords, edges) {
            used[y as usize] = true;
            let r = assign_y(v + 1, n, xs, coords, used, edges, accept);
            used[y as usize] = false;
            if r.is_some() {
                return r;
            }
        }
        coords.pop();
    }
    None
}

/// The newly placed vertex `v` and its edges to earlier vertices keep the
/// partial drawing planar.
fn consistent(v: usize, coords: &[Point], edges: &[Edge]) -> bool {
    let p = coords[v];
    let old: Vec<Edge> = edges.iter().copied().filter(|e| e.1 < v).collect();
    if old.iter().any(|e| on_segment(p, coords[e.0], coords[e.1])) {
        return false;
    }
    let new: Vec<Edge> = edges.iter().copied().filter(|e| e.1 == v).collect();
    for (i, &e) in new.iter().enumerate() {
        let q = coords[e.0];
        if (0..v).any(|w| w != e.0 && on_segment(coords[w], q, p)) {
            return false;
        }
        for &f in old.iter().chain(new[..i].iter()) {
            let (a, b) = (coords[f.0], coords[f.1]);
            let bad = if f.contains(e.0) {
                overlap_beyond_shared(q, p, coords[f.other(e.0)])
            } else if f.contains(v) {
                overlap_beyond_shared(p, q, coords[f.other(v)])
            } else {
                segments_intersect(q, p, a, b)
            };
            if bad {
                return false;
            }
        }
    }
    true
}

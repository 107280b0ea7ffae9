//! One measurement row per (graph, algorithm).

use std::time::Instant;

use num_traits::Signed;
use serde::Serialize;

use crate::algo::{draw, Algo};
use crate::drawing::Drawing;
use crate::geom::{format_q, slope, Q};
use crate::graph::{classify_triangles, PlanarEmbedding};

pub const CSV_HEADER: [&str; 10] = ["graph_id", "n", "m", "f_g", "algorithm", "width", "height", "bends", "max_slope", "wall_ms"];

/// Drawing fields are empty when the construction does not apply to the
/// graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub f_g: Option<usize>,
    pub algorithm: String,
    pub width: Option<i64>,
    pub height: Option<i64>,
    pub bends: Option<usize>,
    pub max_slope: Option<String>,
    pub wall_ms: f64,
}

/// Largest absolute slope over all non-vertical segments.
pub fn max_abs_slope(d: &Drawing) -> Option<Q> {
    (0..d.edges.len())
        .flat_map(|i| {
            let p = d.polyline(i);
            (1..p.len()).filter_map(move |j| slope(p[j - 1], p[j]).map(|s| s.abs())).collect::<Vec<_>>()
        })
        .max()
}

pub fn stats_row(graph_id: &str, emb: &PlanarEmbedding, algo: Algo) -> StatsRow {
    let f_g = if emb.is_triangulated() { classify_triangles(emb).ok().map(|r| r.f_g) } else { None };
    let start = Instant::now();
    let out = draw(algo, emb).ok();
    let wall_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    let d = out.as_ref().map(|o| &o.drawing);
    StatsRow {
        graph_id: graph_id.to_string(),
        n: emb.n(),
        m: emb.num_edges(),
        f_g,
        algorithm: algo.name().to_string(),
        width: d.map(Drawing::width),
        height: d.map(Drawing::height),
        bends: d.map(Drawing::bend_count),
        max_slope: d.and_then(max_abs_slope).map(format_q),
        wall_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphType};
    use crate::incremental::{height_bound, Mode};
    use crate::pipeline::bend_bound;

    #[test]
    fn rows_match_drawings() {
        let g = generate(GraphType::Apollonian, 11, 0, 7).unwrap();
        let row = stats_row("a", &g, Algo::RookBends);
        let d = draw(Algo::RookBends, &g).unwrap().drawing;
        assert_eq!((row.width, row.height, row.bends), (Some(11), Some(11), Some(d.bend_count())));
        assert!(row.bends.unwrap() <= bend_bound(11, row.f_g.unwrap()));
    }

    #[test]
    fn nonaligned_heights_within_bound() {
        for n in (10..=60).step_by(10) {
            let g = generate(GraphType::RandomTriangulation, n, 0, n as u64).unwrap();
            let row = stats_row("r", &g, Algo::IncNonAligned);
            assert!(row.height.unwrap() <= height_bound(n, Mode::NonAligned));
        }
    }

    #[test]
    fn inapplicable_construction_leaves_blanks() {
        let g = generate(GraphType::Octahedron, 6, 0, 0).unwrap();
        let row = stats_row("o", &g, Algo::Schnyder);
        assert!(row.width.is_some());
        let g = generate(GraphType::Apollonian, 8, 0, 1).unwrap();
        let row = stats_row("a", &g, Algo::Nested);
        assert_eq!((row.width, row.bends), (None, None));
    }
}

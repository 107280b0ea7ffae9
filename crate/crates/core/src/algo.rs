//! Name-based dispatch to the drawing constructions, with the checks each
//! one promises.

use std::fmt;
use std::str::FromStr;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::graph::{triangulate, Edge, PlanarEmbedding};
use crate::incremental::{height_bound, incremental_drawing, Mode, Trace};
use crate::nested::{draw_nested, recognize_nested};
use crate::pipeline::rook_with_bends;
use crate::ri::{extend_bbm, one_bend_rook, stretch_square, stretch_tall};
use crate::schnyder::schnyder_drawing;
use crate::verify::{check_grid, check_non_aligned, check_planar, check_ri, check_rook, check_slope_bound, unknown_check, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algo {
    Schnyder,
    IncX,
    IncNonAligned,
    Nested,
    Bbm,
    OneBend,
    RookBends,
    StretchTall,
    StretchSquare,
}

impl Algo {
    pub const ALL: [Algo; 9] = [
        Algo::Schnyder,
        Algo::IncX,
        Algo::IncNonAligned,
        Algo::Nested,
        Algo::Bbm,
        Algo::OneBend,
        Algo::RookBends,
        Algo::StretchTall,
        Algo::StretchSquare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Schnyder => "schnyder",
            Algo::IncX => "inc-x",
            Algo::IncNonAligned => "inc-nonaligned",
            Algo::Nested => "nested",
            Algo::Bbm => "bbm",
            Algo::OneBend => "one-bend",
            Algo::RookBends => "rook-bends",
            Algo::StretchTall => "stretch-tall",
            Algo::StretchSquare => "stretch-square",
        }
    }

    /// Grid promised for a graph with `n` vertices.
    pub fn grid(self, n: usize) -> (i64, i64) {
        let n = n as i64;
        match self {
            Algo::Schnyder => (n * (n - 2), n * (n - 2)),
            Algo::IncX => (n, height_bound(n as usize, Mode::DistinctX)),
            Algo::IncNonAligned => (n, height_bound(n as usize, Mode::NonAligned)),
            Algo::Nested => (n, 4 * n / 3 - 1),
            Algo::Bbm | Algo::OneBend | Algo::RookBends => (n, n),
            Algo::StretchTall => (n, n * n - 3 * n + 4),
            Algo::StretchSquare => (2 * n - 2, 2 * n - 2),
        }
    }

    /// Checks run on every output; `slopes` needs the incremental trace.
    pub fn declared_checks(self) -> &'static [&'static str] {
        match self {
            Algo::Schnyder | Algo::Nested | Algo::StretchTall | Algo::StretchSquare => &["planar", "nonaligned", "grid"],
            Algo::IncX => &["planar", "grid", "slopes"],
            Algo::IncNonAligned => &["planar", "nonaligned", "grid", "slopes"],
            Algo::Bbm => &["planar", "ri", "rook"],
            Algo::OneBend | Algo::RookBends => &["planar", "rook"],
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| Error::Precondition(format!("unknown algorithm {s:?}")))
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct DrawOutput {
    pub drawing: Drawing,
    pub trace: Option<Trace>,
    /// Vertex count of the graph the construction ran on.
    pub n: usize,
    /// Chords added to triangulate the input, absent from the drawing.
    pub added: Vec<Edge>,
}

impl DrawOutput {
    /// Runs `checks` by name; `grid` uses the algorithm's promised grid.
    pub fn run_checks(&self, algo: Algo, checks: &[&str]) -> Vec<CheckReport> {
        let d = &self.drawing;
        checks
            .iter()
            .map(|&c| match c {
                "planar" => check_planar(d),
                "nonaligned" => check_non_aligned(d),
                "ri" => check_ri(d),
                "rook" => check_rook(d),
                "grid" => {
                    let (w, h) = algo.grid(self.n);
                    check_grid(d, w, h)
                }
                "slopes" => match &self.trace {
                    Some(t) => check_slope_bound(t, t.mode),
                    None => unknown_check("slopes"),
                },
                other => unknown_check(other),
            })
            .collect()
    }
}

/// Draws `emb`, triangulating it first when the construction needs it;
/// chords added that way are removed from the result.
pub fn draw(algo: Algo, emb: &PlanarEmbedding) -> Result<DrawOutput> {
    if algo == Algo::Nested {
        let g = recognize_nested(emb).ok_or_else(|| Error::Precondition("not a nested-triangle graph".into()))?;
        return Ok(DrawOutput { drawing: draw_nested(&g), trace: None, n: emb.n(), added: Vec::new() });
    }
    let (g, added) = if emb.is_triangulated() { (emb.clone(), Vec::new()) } else { triangulate(emb)? };
    let mut trace = None;
    let mut drawing = match algo {
        Algo::Schnyder => schnyder_drawing(&g)?,
        Algo::IncX | Algo::IncNonAligned => {
            let mode = if algo == Algo::IncX { Mode::DistinctX } else { Mode::NonAligned };
            let (d, t) = incremental_drawing(&g, mode)?;
            trace = Some(t);
            d
        }
        Algo::Bbm => {
            let e = g.outer_edges().into_iter().min().expect("outer face");
            extend_bbm(&g, e)?
        }
        Algo::OneBend => one_bend_rook(&g)?,
        Algo::RookBends => rook_with_bends(&g)?,
        Algo::StretchTall => stretch_tall(&g)?,
        Algo::StretchSquare => stretch_square(&g)?,
        Algo::Nested => unreachable!(),
    };
    drawing.algo = algo.name().to_string();
    drawing.edges.retain(|e| !added.contains(&e.edge));
    Ok(DrawOutput { drawing, trace, n: g.n(), added })
}

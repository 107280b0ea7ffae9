//! Non-aligned, rook and rectangle-of-influence drawings of planar
//! triangulations, with exact verification.

pub mod algo;
pub mod drawing;
pub mod error;
pub mod generate;
pub mod geom;
pub mod graph;
pub mod hitting;
pub mod incremental;
pub mod io;
pub mod matching;
pub mod nested;
pub mod pipeline;
pub mod ri;
pub mod schnyder;
pub mod stats;
pub mod svg;
pub mod verify;

pub use drawing::{Drawing, DrawnEdge};
pub use error::{Error, Result};
pub use geom::{Point, Q};
pub use graph::{Edge, PlanarEmbedding};

//! Seeded generators for plane triangulations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{classify_triangles, flip_edge, glue_into_face, stack_vertex, Edge, PlanarEmbedding};
use crate::nested::{nested_graph, Diagonal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphType {
    RandomTriangulation,
    Apollonian,
    Nested,
    Octahedron,
    DoubleWheel,
    FourConnected,
}

impl FromStr for GraphType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "random-triangulation" => GraphType::RandomTriangulation,
            "apollonian" => GraphType::Apollonian,
            "nested" => GraphType::Nested,
            "octahedron" => GraphType::Octahedron,
            "double-wheel" => GraphType::DoubleWheel,
            "four-connected" => GraphType::FourConnected,
            other => return Err(Error::Precondition(format!("unknown graph type {other:?}"))),
        })
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphType::RandomTriangulation => "random-triangulation",
            GraphType::Apollonian => "apollonian",
            GraphType::Nested => "nested",
            GraphType::Octahedron => "octahedron",
            GraphType::DoubleWheel => "double-wheel",
            GraphType::FourConnected => "four-connected",
        })
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` is used by every type except `nested`, which takes `k` levels.
pub fn generate(kind: GraphType, n: usize, k: usize, seed: u64) -> Result<PlanarEmbedding> {
    let mut r = rng(seed);
    match kind {
        GraphType::RandomTriangulation => random_triangulation(n, &mut r),
        GraphType::Apollonian => apollonian(n, &mut r),
        GraphType::Nested => {
            let quads = 3 * k.saturating_sub(1);
            let diags: Vec<Diagonal> = (0..quads)
                .map(|_| [Diagonal::None, Diagonal::First, Diagonal::Second][r.gen_range(0..3)])
                .collect();
            Ok(nested_graph(k, &diags)?.0)
        }
        GraphType::Octahedron => Ok(octahedron()),
        GraphType::DoubleWheel => double_wheel(n),
        GraphType::FourConnected => four_connected(n, &mut r),
    }
}

/// Builds vertex by vertex: each new vertex covers a random interval of at
/// least two outer-chain vertices; the last one covers the whole chain so
/// the outer face is a triangle.
pub fn random_triangulation<R: Rng>(n: usize, rng: &mut R) -> Result<PlanarEmbedding> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    let mut chain = vec![0, 2, 1];
    for p in 3..n {
        let len = chain.len();
        let (l, r) = if p == n - 1 {
            (0, len - 1)
        } else {
            let l = rng.gen_range(0..len - 1);
            (l, rng.gen_range(l + 1..len))
        };
        for j in l..=r {
            let c = chain[j];
            let right = if j + 1 < len { chain[j + 1] } else { chain[0] };
            let i = rot[c].iter().position(|&w| w == right).unwrap();
            rot[c].insert(i + 1, p);
        }
        rot.push(chain[l..=r].to_vec());
        chain.splice(l + 1..r, [p]);
    }
    let outer = if n == 3 { vec![0, 2, 1] } else { vec![0, n - 1, 1] };
    PlanarEmbedding::new(rot, outer)
}

/// Stacks vertices into uniformly chosen inner faces, starting from a triangle.
pub fn apollonian<R: Rng>(n: usize, rng: &mut R) -> Result<PlanarEmbedding> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut g = PlanarEmbedding::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]], vec![0, 2, 1])?;
    let mut faces = vec![(0usize, 1usize)];
    while g.n() < n {
        let i = rng.gen_range(0..faces.len());
        let (a, b) = faces.swap_remove(i);
        let c = g.face_successor(a, b);
        g = stack_vertex(&g, a, b)?;
        faces.extend([(a, b), (b, c), (c, a)]);
    }
    Ok(g)
}

pub fn octahedron() -> PlanarEmbedding {
    nested_graph(2, &[Diagonal::Second; 3]).expect("fixed diagonals are valid").0
}

/// Cycle of `n - 2` vertices with one hub inside and one outside.
pub fn double_wheel(n: usize) -> Result<PlanarEmbedding> {
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    let m = n - 2;
    let (h, g) = (m, m + 1);
    let mut rot = Vec::with_capacity(n);
    for i in 0..m {
        rot.push(vec![g, (i + 1) % m, h, (i + m - 1) % m]);
    }
    rot.push((0..m).collect());
    rot.push((0..m).rev().collect());
    PlanarEmbedding::new(rot, vec![1, 0, g])
}

/// Triangulation without separating triangles: random edge flips of a
/// double wheel, each rejected if it creates a separating triangle, then a
/// random relabelling.
pub fn four_connected<R: Rng>(n: usize, rng: &mut R) -> Result<PlanarEmbedding> {
    match n {
        4 => return k4(),
        0..=5 => return Err(Error::Precondition(format!("no 4-connected triangulation on {n} vertices"))),
        _ => {}
    }
    let mut g = double_wheel(n)?;
    for _ in 0..8 * n {
        let edges: Vec<Edge> = g.edges().into_iter().filter(|&e| !g.is_outer_edge(e)).collect();
        let e = *edges.choose(rng).unwrap();
        let Ok(h) = flip_edge(&g, e) else { continue };
        if classify_triangles(&h)?.is_four_connected() {
            g = h;
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

pub fn k4() -> Result<PlanarEmbedding> {
    PlanarEmbedding::new(
        vec![vec![1, 2, 3], vec![3, 2, 0], vec![0, 1, 3], vec![0, 2, 1]],
        vec![1, 0, 3],
    )
}

/// Nests `pieces` 4-connected triangulations (sizes drawn from
/// `sizes`) into the inner face at the outer edge `outer[0] outer[1]`,
/// so every separating triangle contains that edge.
pub fn separating_chain<R: Rng>(pieces: usize, sizes: std::ops::RangeInclusive<usize>, rng: &mut R) -> Result<PlanarEmbedding> {
    let pick = |rng: &mut R| {
        let s = rng.gen_range(sizes.clone());
        if s == 5 { 4 } else { s }
    };
    let n0 = pick(rng);
    let mut g = four_connected(n0, rng)?;
    let (a, b) = (g.outer_face()[0], g.outer_face()[1]);
    for _ in 1..pieces {
        let s = pick(rng);
        let guest = four_connected(s, rng)?;
        g = glue_into_face(&g, b, a, &guest)?.0;
    }
    Ok(g)
}

/// Exact integer straight-line layout to rotation system. The outer face is
/// the unique clockwise face cycle.
pub fn embedding_from_layout(points: &[(i64, i64)], edges: &[Edge]) -> Result<PlanarEmbedding> {
    let n = points.len();
    let mut rot = vec![Vec::new(); n];
    for &e in edges {
        rot[e.0].push(e.1);
        rot[e.1].push(e.0);
    }
    for (v, r) in rot.iter_mut().enumerate() {
        let o = points[v];
        r.sort_by(|&a, &b| angle_cmp((points[a].0 - o.0, points[a].1 - o.1), (points[b].0 - o.0, points[b].1 - o.1)));
    }
    let tmp = PlanarEmbedding::from_parts_unchecked(rot.clone(), Vec::new());
    let (a, b) = (edges[0].0, edges[0].1);
    for (s, t) in [(a, b), (b, a)] {
        let mut cycle = vec![s];
        let (mut u, mut v) = (s, t);
        while v != s {
            cycle.push(v);
            let w = tmp.face_successor(u, v);
            u = v;
            v = w;
        }
        let area: i128 = (0..cycle.len())
            .map(|i| {
                let p = points[cycle[i]];
                let q = points[cycle[(i + 1) % cycle.len()]];
                p.0 as i128 * q.1 as i128 - q.0 as i128 * p.1 as i128
            })
            .sum();
        if area < 0 {
            return PlanarEmbedding::new(rot, cycle);
        }
    }
    Err(Error::Precondition("first edge is not on the outer face".into()))
}

fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |p: (i64, i64)| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

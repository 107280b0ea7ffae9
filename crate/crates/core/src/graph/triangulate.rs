use super::{Edge, PlanarEmbedding};
use crate::error::{Error, Result};

/// Adds chords until every face is a triangle. Returns the triangulated
/// embedding and the added edges in insertion order.
///
/// Each face is fanned from its lowest-id vertex; if a fan chord would
/// duplicate an existing edge the next apex along the face is tried.
/// Faces that cannot be fanned (or repeat a vertex) are closed by ears.
pub fn triangulate(emb: &PlanarEmbedding) -> Result<(PlanarEmbedding, Vec<Edge>)> {
    if emb.n() < 3 {
        return Err(Error::TooSmall { n: emb.n(), min: 3 });
    }
    let anchor = (emb.outer_face()[0], emb.outer_face()[1]);
    let faces = emb.faces();
    let mut work = PlanarEmbedding::from_parts_unchecked(emb.rotations().to_vec(), Vec::new());
    let mut added = Vec::new();
    for cycle in &faces.cycles {
        if cycle.len() > 3 {
            close_face(&mut work, cycle.clone(), &mut added)?;
        }
    }
    let third = work.face_successor(anchor.0, anchor.1);
    let out = PlanarEmbedding::new(work.rotations, vec![anchor.0, anchor.1, third])?;
    if !out.is_triangulated() {
        return Err(Error::ConstructionNotFound("triangulation left a non-triangular face".into()));
    }
    Ok((out, added))
}

/// Inserts `new` into the corner of the face at `v` whose outgoing face
/// edge goes to `next`.
pub(crate) fn insert_after(rot: &mut [Vec<usize>], v: usize, next: usize, new: usize) {
    let i = rot[v].iter().position(|&x| x == next).expect("corner neighbour");
    rot[v].insert(i + 1, new);
}

fn close_face(work: &mut PlanarEmbedding, face: Vec<usize>, added: &mut Vec<Edge>) -> Result<()> {
    let k = face.len();
    let simple = {
        let mut s = face.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == k
    };
    if simple {
        let start = (0..k).min_by_key(|&i| face[i]).unwrap();
        for step in 0..k {
            let a = (start + step) % k;
            let apex = face[a];
            let targets: Vec<usize> = (2..k - 1).map(|j| face[(a + j) % k]).collect();
            if targets.iter().any(|&t| work.has_edge(apex, t)) {
                continue;
            }
            // Corner at the apex: chords follow the face order.
            let mut after = face[(a + 1) % k];
            for (j, &t) in targets.iter().enumerate() {
                insert_after(&mut work.rotations, apex, after, t);
                after = t;
                let pos = (a + j + 2) % k;
                insert_after(&mut work.rotations, t, face[(pos + 1) % k], apex);
                added.push(Edge::new(apex, t));
            }
            return Ok(());
        }
    }
    let mut face = face;
    while face.len() > 3 {
        let k = face.len();
        let ear = (0..k).find(|&i| {
            let (a, c) = (face[i], face[(i + 2) % k]);
            a != c && !work.has_edge(a, c)
        });
        let Some(i) = ear else {
            return Err(Error::ConstructionNotFound("no ear available in face".into()));
        };
        let (a, b, c, d) = (face[i], face[(i + 1) % k], face[(i + 2) % k], face[(i + 3) % k]);
        insert_after(&mut work.rotations, a, b, c);
        insert_after(&mut work.rotations, c, d, a);
        added.push(Edge::new(a, c));
        face.remove((i + 1) % k);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PlanarEmbedding {
        // 4-cycle 0-1-2-3 drawn counterclockwise.
        PlanarEmbedding::new(
            vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            vec![0, 3, 2, 1],
        )
        .unwrap()
    }

    #[test]
    fn triangle_is_unchanged() {
        let g = crate::graph::fixtures::triangle();
        let (t, added) = triangulate(&g).unwrap();
        assert!(added.is_empty());
        assert_eq!(t.num_edges(), 3);
    }

    #[test]
    fn square_gets_two_chords() {
        let (t, added) = triangulate(&square()).unwrap();
        assert!(t.is_triangulated());
        // Inner face fans from 0; the outer face cannot reuse 0-2.
        assert_eq!(added, vec![Edge(0, 2), Edge(1, 3)]);
    }

    #[test]
    fn path_is_closed_by_ears() {
        let g = PlanarEmbedding::new(vec![vec![1], vec![2, 0], vec![1]], vec![0, 1, 2, 1]).unwrap();
        let (t, added) = triangulate(&g).unwrap();
        assert!(t.is_triangulated());
        assert_eq!(added, vec![Edge(0, 2)]);
    }

    #[test]
    fn too_small() {
        let g = PlanarEmbedding::new(vec![vec![1], vec![0]], vec![0, 1]).unwrap();
        assert_eq!(triangulate(&g).unwrap_err(), Error::TooSmall { n: 2, min: 3 });
    }
}

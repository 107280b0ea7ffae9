use super::PlanarEmbedding;
use crate::error::{Error, Result};

/// Vertex ordering v_1, ..., v_n of a triangulation such that every prefix
/// G_k is 2-connected with outer chain c_1 = v_1, ..., c_L = v_2 and every
/// v_k (k >= 3) is adjacent to a contiguous interval of that chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrder {
    /// `order[k]` is v_{k+1}.
    pub order: Vec<usize>,
    pub rank: Vec<usize>,
    /// `preds[k]` lists c_l, ..., c_r for `order[k]` (empty for k < 2).
    pub preds: Vec<Vec<usize>>,
}

impl CanonicalOrder {
    pub fn n(&self) -> usize {
        self.order.len()
    }
}

/// v_1 is the smallest outer vertex, v_2 precedes it on the clockwise outer
/// face and v_n is the third outer vertex. Removal proceeds from v_n down,
/// taking the smallest-id chord-free chain vertex each time.
pub fn canonical_order(emb: &PlanarEmbedding) -> Result<CanonicalOrder> {
    if !emb.is_triangulated() {
        return Err(Error::NotTriangulated);
    }
    let n = emb.n();
    let outer = emb.outer_face();
    let i1 = (0..3).min_by_key(|&i| outer[i]).unwrap();
    let v1 = outer[i1];
    let v2 = outer[(i1 + 2) % 3];
    let vn = outer[(i1 + 1) % 3];

    let mut order = vec![usize::MAX; n];
    let mut preds = vec![Vec::new(); n];
    order[0] = v1;
    order[1] = v2;
    let mut removed = vec![false; n];
    let mut chain = vec![v1, vn, v2];
    let mut chain_pos = vec![usize::MAX; n];
    let mut current = vn;

    for k in (2..n).rev() {
        order[k] = current;
        let i = chain.iter().position(|&c| c == current).expect("current is on the chain");
        let (left, right) = (chain[i - 1], chain[i + 1]);
        let mut inner = Vec::new();
        let mut w = emb.ccw_next(current, left);
        while w != right {
            if removed[w] {
                return Err(Error::InvalidEmbedding("removed vertex below the outer chain".into()));
            }
            inner.push(w);
            w = emb.ccw_next(current, w);
        }
        let mut p = Vec::with_capacity(inner.len() + 2);
        p.push(left);
        p.extend_from_slice(&inner);
        p.push(right);
        preds[k] = p;
        chain.splice(i..=i, inner);
        removed[current] = true;
        if k == 2 {
            break;
        }
        for (j, &c) in chain.iter().enumerate() {
            chain_pos[c] = j;
        }
        let mut best = None;
        for j in 1..chain.len() - 1 {
            let c = chain[j];
            let chord = emb.rotation(c).iter().any(|&w| {
                !removed[w] && chain_pos[w] != usize::MAX && chain_pos[w].abs_diff(j) >= 2
            });
            if !chord && best.is_none_or(|b| c < b) {
                best = Some(c);
            }
        }
        for &c in &chain {
            chain_pos[c] = usize::MAX;
        }
        current = best.ok_or_else(|| Error::ConstructionNotFound("no removable chain vertex".into()))?;
    }
    if chain != [v1, v2] {
        return Err(Error::InvalidEmbedding("canonical order did not reduce to the base edge".into()));
    }
    let mut rank = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    Ok(CanonicalOrder { order, rank, preds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{k4, triangle};

    #[test]
    fn k4_order() {
        let co = canonical_order(&k4()).unwrap();
        assert_eq!(co.order, vec![0, 1, 2, 3]);
        assert_eq!(co.preds[2], vec![0, 1]);
        assert_eq!(co.preds[3], vec![0, 2, 1]);
    }

    #[test]
    fn triangle_order_is_outer_face() {
        let co = canonical_order(&triangle()).unwrap();
        assert_eq!(co.order, vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_triangulated() {
        let g = k4().without_edge(crate::graph::Edge(0, 1)).unwrap();
        assert_eq!(canonical_order(&g).unwrap_err(), Error::NotTriangulated);
    }
}

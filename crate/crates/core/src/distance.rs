use crate::error::{Error, Result};
use crate::graph::Graph;

/// All-pairs hop distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Breadth-first search from every vertex, one bit-parallel layer at a time.
    ///
    /// Fails with the first unreachable pair if `g` is disconnected.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let all = (1u64 << n) - 1;
        let mut d = vec![0u32; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut depth = 0;
            while frontier != 0 {
                depth += 1;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= g.adj_mask(v);
                }
                next &= !seen;
                seen |= next;
                frontier = next;
                let mut f = next;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    row[v] = depth;
                }
            }
            if seen != all {
                let v = (all & !seen).trailing_zeros() as usize;
                return Err(Error::Disconnected { u: s, v });
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Shorthand for [`DistanceMatrix::new`].
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

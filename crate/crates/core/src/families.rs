//! Distance-derived vertex sets: the `W` sets of an edge, the two edge families
//! whose hitting sets bound the mixed and doubly metric dimensions, and the
//! per-pair resolver families behind β, β_E and β_M.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::vertex_set::{MixedItem, Provenance, SetFamily, VertexSet};

/// The five sets attached to an edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WSets {
    /// `{w : d(u,w) < d(v,w)}`
    pub w_uv: VertexSet,
    /// `{w : d(v,w) < d(u,w)}`
    pub w_vu: VertexSet,
    /// `{w : d(u,w) >= d(v,w)}`
    pub wbar_uv: VertexSet,
    /// `{w : d(v,w) >= d(u,w)}`
    pub wbar_vu: VertexSet,
    /// `{w : d(u,w) = d(v,w)}`
    pub equidistant: VertexSet,
}

pub fn w_sets(d: &DistanceMatrix, u: usize, v: usize) -> Result<WSets> {
    let n = d.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { index: x, n });
        }
    }
    if d.get(u, v) != 1 {
        return Err(Error::NotAdjacent(u, v));
    }
    let (du, dv) = (d.row(u), d.row(v));
    let (mut lt, mut gt) = (0u64, 0u64);
    for w in 0..n {
        if du[w] < dv[w] {
            lt |= 1 << w;
        } else if dv[w] < du[w] {
            gt |= 1 << w;
        }
    }
    let all = VertexSet::full(n).bits();
    let set = |bits| VertexSet::from_bits_unchecked(n, bits);
    Ok(WSets {
        w_uv: set(lt),
        w_vu: set(gt),
        wbar_uv: set(all & !lt),
        wbar_vu: set(all & !gt),
        equidistant: set(all & !(lt | gt)),
    })
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        Err(Error::TrivialGraph)
    } else {
        Ok(())
    }
}

/// `{W_uv, W_vu | uv ∈ E}`: two sets per edge in canonical edge order.
pub fn family_strict(g: &Graph, d: &DistanceMatrix) -> Result<SetFamily> {
    check_order(g)?;
    let mut fam = SetFamily::with_capacity(g.order(), 2 * g.size());
    for Edge { u, v } in g.edges() {
        let w = w_sets(d, u, v)?;
        fam.push(w.w_uv, Provenance::Strict { u, v });
        fam.push(w.w_vu, Provenance::Strict { u: v, v: u });
    }
    Ok(fam)
}

/// `{W̄_uv, W̄_vu | uv ∈ E}`, same ordering as [`family_strict`].
pub fn family_weak(g: &Graph, d: &DistanceMatrix) -> Result<SetFamily> {
    check_order(g)?;
    let mut fam = SetFamily::with_capacity(g.order(), 2 * g.size());
    for Edge { u, v } in g.edges() {
        let w = w_sets(d, u, v)?;
        fam.push(w.wbar_uv, Provenance::Weak { u, v });
        fam.push(w.wbar_vu, Provenance::Weak { u: v, v: u });
    }
    Ok(fam)
}

/// Distance from an item to a vertex; for an edge it is the nearer endpoint.
pub fn item_distance(d: &DistanceMatrix, item: MixedItem, w: usize) -> u32 {
    match item {
        MixedItem::Vertex(x) => d.get(x, w),
        MixedItem::Edge(e) => d.get(e.u, w).min(d.get(e.v, w)),
    }
}

/// One resolver set per unordered pair of `items`, in index order of the pair.
fn pair_family(d: &DistanceMatrix, items: &[MixedItem]) -> SetFamily {
    let n = d.order();
    let profiles: Vec<Vec<u32>> = items
        .iter()
        .map(|&it| (0..n).map(|w| item_distance(d, it, w)).collect())
        .collect();
    let k = items.len();
    let mut fam = SetFamily::with_capacity(n, k * k.saturating_sub(1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = (&profiles[i], &profiles[j]);
            let mut bits = 0u64;
            for w in 0..n {
                if a[w] != b[w] {
                    bits |= 1 << w;
                }
            }
            fam.push(
                VertexSet::from_bits_unchecked(n, bits),
                Provenance::Pair(items[i], items[j]),
            );
        }
    }
    fam
}

pub fn vertex_items(g: &Graph) -> Vec<MixedItem> {
    (0..g.order()).map(MixedItem::Vertex).collect()
}

pub fn edge_items(g: &Graph) -> Vec<MixedItem> {
    g.edges().map(MixedItem::Edge).collect()
}

/// Vertices first, then edges in canonical order.
pub fn mixed_items(g: &Graph) -> Vec<MixedItem> {
    let mut items = vertex_items(g);
    items.extend(edge_items(g));
    items
}

/// Resolver sets of vertex pairs: `{w : d(u,w) != d(v,w)}`.
pub fn vertex_pair_family(g: &Graph, d: &DistanceMatrix) -> Result<SetFamily> {
    check_order(g)?;
    Ok(pair_family(d, &vertex_items(g)))
}

/// Resolver sets of edge pairs under `d(e,w) = min(d(u,w), d(v,w))`.
pub fn edge_pair_family(g: &Graph, d: &DistanceMatrix) -> Result<SetFamily> {
    check_order(g)?;
    Ok(pair_family(d, &edge_items(g)))
}

/// Resolver sets of all pairs drawn from `V ∪ E`.
pub fn mixed_pair_family(g: &Graph, d: &DistanceMatrix) -> Result<SetFamily> {
    check_order(g)?;
    Ok(pair_family(d, &mixed_items(g)))
}

/// `d(u,x) - d(u,y) != d(v,x) - d(v,y)`.
pub fn doubly_resolves(d: &DistanceMatrix, x: usize, y: usize, u: usize, v: usize) -> bool {
    let diff = |a: usize, b: usize| d.get(a, b) as i64;
    diff(u, x) - diff(u, y) != diff(v, x) - diff(v, y)
}

/// Every pair `u != v` sees a non-constant `s ↦ d(u,s) - d(v,s)` on `s`.
///
/// Some `x, y ∈ s` doubly resolve `u, v` exactly when that map takes two values,
/// so this is the pairwise definition checked in `O(|s|)` per pair.
pub fn is_doubly_resolving(d: &DistanceMatrix, s: &VertexSet) -> bool {
    if s.len() < 2 {
        return false;
    }
    let n = d.order();
    let first = s.iter().next().unwrap();
    for u in 0..n {
        for v in u + 1..n {
            let (du, dv) = (d.row(u), d.row(v));
            let base = du[first] as i64 - dv[first] as i64;
            if s.iter().all(|w| du[w] as i64 - dv[w] as i64 == base) {
                return false;
            }
        }
    }
    true
}

/// Precomputed level sets for fast doubly-resolving tests.
///
/// For each pair `u < v` and each value `c`, the level set
/// `{w : d(u,w) - d(v,w) = c}`; a set is doubly resolving iff it has two
/// elements and sits inside none of them. Only inclusion-maximal level sets
/// are kept.
#[derive(Clone, Debug)]
pub struct LevelSets {
    maximal: Vec<u64>,
}

impl LevelSets {
    pub fn new(d: &DistanceMatrix) -> Self {
        let n = d.order();
        let mut levels: Vec<u64> = Vec::new();
        let mut buckets: Vec<(i64, u64)> = Vec::with_capacity(n);
        for u in 0..n {
            for v in u + 1..n {
                buckets.clear();
                let (du, dv) = (d.row(u), d.row(v));
                for w in 0..n {
                    let c = du[w] as i64 - dv[w] as i64;
                    match buckets.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= 1 << w,
                        None => buckets.push((c, 1 << w)),
                    }
                }
                levels.extend(buckets.iter().map(|&(_, m)| m));
            }
        }
        // Larger sets first so every kept set is checked against all its supersets.
        levels.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        levels.dedup();
        let mut maximal: Vec<u64> = Vec::new();
        for l in levels {
            if !maximal.iter().any(|&m| l & !m == 0) {
                maximal.push(l);
            }
        }
        LevelSets { maximal }
    }

    #[inline]
    pub fn is_doubly_resolving_mask(&self, s: u64) -> bool {
        s.count_ones() >= 2 && self.maximal.iter().all(|&l| s & !l != 0)
    }

    pub fn is_doubly_resolving(&self, s: &VertexSet) -> bool {
        self.is_doubly_resolving_mask(s.bits())
    }
}

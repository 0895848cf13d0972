//! Brute-force oracles shared by the integration tests. Nothing here goes
//! through the crate's families or solver; only `Graph` accessors are used.
#![allow(dead_code, clippy::needless_range_loop)]

use rand::seq::SliceRandom;
use rand::Rng;
use resdim::Graph;

/// Floyd–Warshall over the adjacency relation.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Masks of `0..n` ordered by size, then lexicographically as sorted sequences.
pub fn subsets_in_order(n: usize) -> Vec<u64> {
    let mut all: Vec<u64> = (0..1u64 << n).collect();
    all.sort_by(|&a, &b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| members(a).cmp(&members(b)))
    });
    all
}

/// Smallest hitting set, lexicographically first among optima; `None` if infeasible.
pub fn brute_hitting(n: usize, sets: &[u64]) -> Option<u64> {
    if sets.contains(&0) {
        return None;
    }
    subsets_in_order(n)
        .into_iter()
        .find(|&h| sets.iter().all(|&s| s & h != 0))
}

/// Smallest size of a hitting set, scanning all masks.
pub fn brute_hitting_size(n: usize, sets: &[u64]) -> usize {
    (0..1u64 << n)
        .filter(|&h| sets.iter().all(|&s| s & h != 0))
        .map(|h| h.count_ones() as usize)
        .min()
        .expect("feasible")
}

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Smallest `S` such that `distinguishes(S)`, searched by size from `from`.
fn smallest(n: usize, from: usize, ok: impl Fn(&[usize]) -> bool) -> usize {
    subsets_in_order(n)
        .into_iter()
        .filter(|m| m.count_ones() as usize >= from)
        .find(|&m| ok(&members(m)))
        .map(|m| m.count_ones() as usize)
        .expect("V(G) always works")
}

/// β by definition, minimum 1.
pub fn brute_beta(g: &Graph) -> usize {
    let d = floyd_warshall(g);
    let n = g.order();
    smallest(n, 1, |s| {
        (0..n).all(|u| (u + 1..n).all(|v| s.iter().any(|&w| d[u][w] != d[v][w])))
    })
}

/// β_E by definition with `d(e,w) = min` over endpoints, minimum 1.
pub fn brute_beta_e(g: &Graph) -> usize {
    let d = floyd_warshall(g);
    let es = edges(g);
    let de = |(a, b): (usize, usize), w: usize| d[a][w].min(d[b][w]);
    smallest(g.order(), 1, |s| {
        (0..es.len())
            .all(|i| (i + 1..es.len()).all(|j| s.iter().any(|&w| de(es[i], w) != de(es[j], w))))
    })
}

/// β_M by definition over vertices and edges jointly.
pub fn brute_beta_m(g: &Graph) -> usize {
    let d = floyd_warshall(g);
    let n = g.order();
    // items: Ok(vertex) or Err(edge)
    let mut items: Vec<Result<usize, (usize, usize)>> = (0..n).map(Ok).collect();
    items.extend(edges(g).into_iter().map(Err));
    let dist = |it: &Result<usize, (usize, usize)>, w: usize| match *it {
        Ok(x) => d[x][w],
        Err((a, b)) => d[a][w].min(d[b][w]),
    };
    smallest(n, 0, |s| {
        (0..items.len()).all(|i| {
            (i + 1..items.len())
                .all(|j| s.iter().any(|&w| dist(&items[i], w) != dist(&items[j], w)))
        })
    })
}

/// ψ by the two-witness definition.
pub fn brute_psi(g: &Graph) -> usize {
    let d = floyd_warshall(g);
    let n = g.order();
    let dd = |a: usize, b: usize| d[a][b] as i64;
    smallest(n, 1, |s| {
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                s.iter().any(|&x| {
                    s.iter()
                        .any(|&y| dd(u, x) - dd(u, y) != dd(v, x) - dd(v, y))
                })
            })
        })
    })
}

/// mhs over `{W_uv, W_vu}` (weak = false) or their complements (weak = true), rebuilt from scratch.
pub fn brute_mhs(g: &Graph, weak: bool) -> usize {
    let d = floyd_warshall(g);
    let n = g.order();
    let mut sets = Vec::new();
    for (u, v) in edges(g) {
        for (a, b) in [(u, v), (v, u)] {
            let mut m = 0u64;
            for w in 0..n {
                let inside = if weak {
                    d[a][w] >= d[b][w]
                } else {
                    d[a][w] < d[b][w]
                };
                if inside {
                    m |= 1 << w;
                }
            }
            sets.push(m);
        }
    }
    brute_hitting_size(n, &sets)
}

/// Union-find connectivity, independent of the graph's own BFS.
pub fn connected_by_union_find(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|x| find(&mut parent, x) == root)
}

/// Random connected graph: random spanning tree plus extra edges, randomly relabelled.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra_p: f64) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(extra_p) {
                pairs.push((u, v));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let pairs: Vec<_> = pairs.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edge_list(n, &pairs).unwrap()
}

/// Random hitting-set instance with non-empty members.
pub fn random_instance<R: Rng>(rng: &mut R) -> (usize, Vec<Vec<usize>>) {
    let n = rng.gen_range(1..=16);
    let k = rng.gen_range(0..=24);
    let density = rng.gen_range(0.05..0.6);
    let sets = (0..k)
        .map(|_| {
            let mut s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(density)).collect();
            if s.is_empty() {
                s.push(rng.gen_range(0..n));
            }
            s
        })
        .collect();
    (n, sets)
}

pub fn to_mask(list: &[usize]) -> u64 {
    list.iter().fold(0, |m, &i| m | 1 << i)
}

//! Exact minimum hitting set over universes of at most 62 elements.
//!
//! The optimum size comes from a branch-and-bound that branches on the
//! smallest unhit set and prunes with a disjoint-packing lower bound. The
//! reported witness is then the lexicographically smallest optimal set, found
//! by an include-first scan over elements in index order at that budget.

use crate::error::{Error, Result, MAX_VERTICES};
use crate::vertex_set::{full_mask, SetFamily, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingInstance {
    family: SetFamily,
}

impl HittingInstance {
    pub fn new(family: SetFamily) -> Result<Self> {
        if family.universe() > MAX_VERTICES {
            return Err(Error::TooLarge(family.universe()));
        }
        let all = full_mask(family.universe());
        if let Some(index) = family.sets().iter().position(|s| s.bits() & !all != 0) {
            return Err(Error::OutsideUniverse {
                index,
                universe: family.universe(),
            });
        }
        Ok(HittingInstance { family })
    }

    pub fn universe(&self) -> usize {
        self.family.universe()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    fn check_feasible(&self) -> Result<()> {
        match self.family.sets().iter().position(VertexSet::is_empty) {
            Some(index) => Err(Error::Infeasible {
                index,
                label: self.family.labels()[index].to_string(),
            }),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSolution {
    pub set: VertexSet,
    pub cardinality: usize,
    pub optimal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverOptions {
    /// Drop duplicate and superset members up front and take forced
    /// elements of singleton sets without branching.
    pub reductions: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { reductions: true }
    }
}

pub fn verify_hitting(inst: &HittingInstance, h: &VertexSet) -> bool {
    inst.family.sets().iter().all(|s| s.intersects(h))
}

/// Repeatedly takes the element hitting the most unhit sets, lowest index on ties.
pub fn greedy_hitting(inst: &HittingInstance) -> Result<VertexSet> {
    inst.check_feasible()?;
    let n = inst.universe();
    Ok(VertexSet::from_bits_unchecked(
        n,
        greedy_mask(&inst.family.masks(), n),
    ))
}

fn greedy_mask(sets: &[u64], n: usize) -> u64 {
    let mut open: Vec<u64> = sets.to_vec();
    let mut chosen = 0u64;
    while !open.is_empty() {
        let mut best = (0usize, 0usize);
        for v in 0..n {
            let freq = open.iter().filter(|&&s| s >> v & 1 == 1).count();
            if freq > best.0 {
                best = (freq, v);
            }
        }
        chosen |= 1 << best.1;
        open.retain(|&s| s >> best.1 & 1 == 0);
    }
    chosen
}

/// Sorted by size; with `reductions`, duplicates and supersets of other members removed.
fn prepare(inst: &HittingInstance, reductions: bool) -> Vec<u64> {
    let mut sets = inst.family.masks();
    sets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    if reductions {
        sets.dedup();
        let mut minimal: Vec<u64> = Vec::with_capacity(sets.len());
        for s in sets {
            if !minimal.iter().any(|&m| m & !s == 0) {
                minimal.push(s);
            }
        }
        sets = minimal;
    }
    sets
}

/// Size of a greedily chosen collection of pairwise-disjoint sets.
#[inline]
fn packing_bound(sets: &[u64], restrict: u64) -> usize {
    let mut used = 0u64;
    let mut count = 0;
    for &s in sets {
        let s = s & restrict;
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

struct Optimizer {
    best: usize,
    reductions: bool,
}

impl Optimizer {
    fn search(&mut self, sets: &[u64], depth: usize) {
        if sets.is_empty() {
            self.best = self.best.min(depth);
            return;
        }
        if depth + 1 >= self.best {
            return;
        }
        if self.reductions {
            let forced = sets
                .iter()
                .filter(|s| s.count_ones() == 1)
                .fold(0u64, |acc, &s| acc | s);
            if forced != 0 {
                let rest: Vec<u64> = sets.iter().copied().filter(|&s| s & forced == 0).collect();
                let depth = depth + forced.count_ones() as usize;
                if depth < self.best {
                    self.search(&rest, depth);
                }
                return;
            }
        }
        if depth + packing_bound(sets, u64::MAX) >= self.best {
            return;
        }
        let pivot = *sets.iter().min_by_key(|s| s.count_ones()).unwrap();
        let mut banned = 0u64;
        let mut child = Vec::with_capacity(sets.len());
        for e in VertexSet::from_bits_unchecked(64, pivot).iter() {
            let bit = 1u64 << e;
            child.clear();
            let mut dead = false;
            for &s in sets {
                if s & bit == 0 {
                    let r = s & !banned;
                    if r == 0 {
                        dead = true;
                        break;
                    }
                    child.push(r);
                }
            }
            if !dead {
                self.search(&child, depth + 1);
            }
            banned |= bit;
            if depth + 1 >= self.best {
                break;
            }
        }
    }
}

fn optimum(sets: &[u64], n: usize, reductions: bool) -> usize {
    let mut opt = Optimizer {
        best: greedy_mask(sets, n).count_ones() as usize,
        reductions,
    };
    opt.search(sets, 0);
    opt.best
}

/// Include-first scan in index order; the first set found of size `budget`
/// is the lexicographically smallest one.
fn lex_first(sets: &[u64], next: usize, n: usize, chosen: u64, budget: usize) -> Option<u64> {
    if sets.is_empty() {
        return Some(chosen);
    }
    if budget == 0 || next >= n {
        return None;
    }
    let avail = full_mask(n) & !((1u64 << next) - 1);
    if sets.iter().any(|&s| s & avail == 0) || packing_bound(sets, avail) > budget {
        return None;
    }
    let bit = 1u64 << next;
    if sets.iter().any(|&s| s & bit != 0) {
        let rest: Vec<u64> = sets.iter().copied().filter(|&s| s & bit == 0).collect();
        if let Some(found) = lex_first(&rest, next + 1, n, chosen | bit, budget - 1) {
            return Some(found);
        }
        if sets.iter().any(|&s| s & avail == bit) {
            return None;
        }
    }
    lex_first(sets, next + 1, n, chosen, budget)
}

/// Optimum size only; skips witness extraction.
pub fn min_hitting_cardinality(inst: &HittingInstance, opts: SolverOptions) -> Result<usize> {
    inst.check_feasible()?;
    let sets = prepare(inst, opts.reductions);
    Ok(optimum(&sets, inst.universe(), opts.reductions))
}

pub fn min_hitting_exact_with(
    inst: &HittingInstance,
    opts: SolverOptions,
) -> Result<HittingSolution> {
    inst.check_feasible()?;
    let n = inst.universe();
    let sets = prepare(inst, opts.reductions);
    let k = optimum(&sets, n, opts.reductions);
    let bits = lex_first(&sets, 0, n, 0, k).expect("an optimum of size k exists");
    debug_assert_eq!(bits.count_ones() as usize, k);
    let set = VertexSet::from_bits_unchecked(n, bits);
    debug_assert!(verify_hitting(inst, &set));
    Ok(HittingSolution {
        set,
        cardinality: k,
        optimal: true,
    })
}

/// Minimum hitting set with the default (reducing) solver.
pub fn min_hitting_exact(inst: &HittingInstance) -> Result<HittingSolution> {
    min_hitting_exact_with(inst, SolverOptions::default())
}

//! Named graph families and their known invariant values.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::invariants::InvariantTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    /// `K_{r,t}` with `r` fixed; the free parameter is `t`.
    Bipartite {
        r: usize,
    },
    TPrime,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Bipartite { .. } => "bipartite",
            Family::TPrime => "tprime",
        }
    }

    /// Smallest admissible free parameter.
    pub fn min_param(&self) -> usize {
        match self {
            Family::Path | Family::Complete => 1,
            Family::Cycle | Family::Star => 3,
            Family::Bipartite { .. } => 1,
            Family::TPrime => 4,
        }
    }

    pub fn generate(&self, p: usize) -> Result<Graph> {
        match *self {
            Family::Path => graph::path(p),
            Family::Cycle => graph::cycle(p),
            Family::Star => graph::star(p),
            Family::Complete => graph::complete(p),
            Family::Bipartite { r } => graph::complete_bipartite(r, p),
            Family::TPrime => graph::t_prime_tree(p),
        }
    }

    /// Generator spec of a member, e.g. `bipartite:2,5`.
    pub fn spec(&self, p: usize) -> String {
        match self {
            Family::Bipartite { r } => format!("bipartite:{r},{p}"),
            _ => format!("{}:{p}", self.name()),
        }
    }

    /// The value of `tag` on the member with parameter `p`, where a closed form is known.
    pub fn expected(&self, tag: InvariantTag, p: usize) -> Option<usize> {
        use InvariantTag::*;
        match (*self, tag) {
            (Family::Path, _) if p < 2 => None,
            (Family::Path, MhsStrict | MhsWeak | Psi | BetaM) => Some(2),
            (Family::Path, Beta | BetaE) => Some(1),

            (Family::Star, MhsStrict | MhsWeak | Psi) => Some(p - 1),

            (Family::Complete, _) if p < 2 => None,
            (Family::Complete, MhsStrict | BetaM) => Some(p),
            (Family::Complete, MhsWeak) => Some(2),
            (Family::Complete, Psi) => Some((p - 1).max(2)),
            (Family::Complete, Beta | BetaE) => Some(p - 1),

            (Family::Cycle, Psi) => Some(if p % 2 == 1 { 2 } else { 3 }),
            (Family::Cycle, Beta | BetaE) => Some(2),

            (Family::Bipartite { r }, MhsStrict | MhsWeak) if r == 2 && p >= 2 => Some(2),
            (Family::Bipartite { r }, BetaM) if r >= 2 && p >= 2 => Some(if r == 2 || p == 2 {
                r + p - 1
            } else {
                r + p - 2
            }),

            (Family::TPrime, Psi) => Some(p / 2 + 1),
            (Family::TPrime, BetaE) => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Bipartite { r } => write!(f, "bipartite:{r}"),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `path`, `cycle`, `star`, `complete`, `tprime`, or `bipartite:R`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let fam = match (name, arg) {
            ("path", None) => Family::Path,
            ("cycle", None) => Family::Cycle,
            ("star", None) => Family::Star,
            ("complete", None) => Family::Complete,
            ("tprime", None) => Family::TPrime,
            ("bipartite", Some(r)) => Family::Bipartite {
                r: r.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad bipartite part size `{r}`")))?,
            },
            _ => return Err(Error::Parse(format!("unknown family `{s}`"))),
        };
        Ok(fam)
    }
}

/// Parses a generator spec `family:param[,param]`, e.g. `path:7`, `bipartite:2,5`, `tprime:9`.
pub fn parse_generator(spec: &str) -> Result<Graph> {
    let bad = || Error::Parse(format!("bad generator spec `{spec}`"));
    let (name, args) = spec.split_once(':').ok_or_else(bad)?;
    let params: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (name, params.as_slice()) {
        ("path", [n]) => graph::path(*n),
        ("cycle", [n]) => graph::cycle(*n),
        ("star", [n]) => graph::star(*n),
        ("complete", [n]) => graph::complete(*n),
        ("bipartite", [r, t]) => graph::complete_bipartite(*r, *t),
        ("tprime", [n]) => graph::t_prime_tree(*n),
        _ => Err(bad()),
    }
}

/// `a..b` (inclusive) or a single number.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad range `{s}`, expected `a..b` or `a`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

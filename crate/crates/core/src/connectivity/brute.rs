use rayon::prelude::*;

use super::ConnectivityResult;
use crate::{Cut, Error, Graph, Result, VertexSet};

/// Default largest `n` accepted by the enumeration oracle.
pub const DEFAULT_ENUM_CAP: usize = 16;

/// Enumeration works on `u64` masks.
const MASK_LIMIT: usize = 63;

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap.min(MASK_LIMIT) {
        Err(Error::TooLarge { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Every cut of `g` exactly once, as `S`-side bitmasks.
///
/// Without a constraint vertex 0 is fixed in `S`, which removes the `S`/`S̄`
/// symmetry. With a nonempty constraint every proper superset of it is
/// produced.
#[derive(Debug, Clone)]
pub struct CutMasks {
    base: u64,
    free: u64,
    next: Option<u64>,
    full: u64,
}

impl CutMasks {
    pub(crate) fn new(n: usize, constraint: u64) -> Self {
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let base = if constraint == 0 {
            1 & full
        } else {
            constraint & full
        };
        CutMasks {
            base,
            free: full & !base,
            next: if n == 0 { None } else { Some(0) },
            full,
        }
    }
}

impl Iterator for CutMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let sub = self.next?;
            // next subset of `free` in increasing numeric order
            let following = sub.wrapping_sub(self.free) & self.free;
            self.next = if following == 0 {
                None
            } else {
                Some(following)
            };
            let mask = self.base | sub;
            if mask != self.full {
                return Some(mask);
            }
        }
    }
}

/// Streams every cut of `g`, optionally only those with `constraint ⊆ S`.
pub struct CutIter<'g> {
    graph: &'g Graph,
    masks: CutMasks,
}

impl Iterator for CutIter<'_> {
    type Item = Cut;

    fn next(&mut self) -> Option<Cut> {
        let mask = self.masks.next()?;
        let s = VertexSet::from_mask(self.graph.n(), mask);
        Some(
            self.graph
                .edge_cut(&s)
                .expect("enumerated sides are nonempty"),
        )
    }
}

pub fn enumerate_cuts<'g>(
    g: &'g Graph,
    constraint: Option<&VertexSet>,
    cap: usize,
) -> Result<CutIter<'g>> {
    check_cap(g, cap)?;
    let constraint_mask = match constraint {
        Some(c) => {
            c.check_universe(g.n())?;
            c.to_mask().expect("universe below mask limit")
        }
        None => 0,
    };
    Ok(CutIter {
        graph: g,
        masks: CutMasks::new(g.n(), constraint_mask),
    })
}

pub(crate) fn cut_size_of_mask(g: &Graph, mask: u64) -> usize {
    g.edges()
        .iter()
        .filter(|e| (mask >> e.u() ^ mask >> e.v()) & 1 == 1)
        .count()
}

/// `k'(G)` by exhaustive search over all cuts. Among minimum cuts the one
/// with the numerically smallest `S` mask is returned.
pub fn brute_force_edge_connectivity(g: &Graph, cap: usize) -> Result<ConnectivityResult> {
    check_cap(g, cap)?;
    if g.n() < 2 {
        return Err(Error::TooSmall(g.n()));
    }
    let masks: Vec<u64> = CutMasks::new(g.n(), 0).collect();
    let (kprime, mask) = masks
        .par_iter()
        .map(|&m| (cut_size_of_mask(g, m), m))
        .min()
        .expect("n >= 2 has a cut");
    let witness = g.edge_cut(&VertexSet::from_mask(g.n(), mask))?;
    Ok(ConnectivityResult { kprime, witness })
}

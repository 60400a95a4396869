use super::{check_partition, contracted_metric, expansion_profile};
use super::{ContractedMetric, ExpansionProfile, Partition};
use crate::{Cut, Dist, Error, Graph, Result, Vertex, VertexSet};

/// `|S ∩ V1| < |[S, S̄]| < k < |S̄|`, as observed numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeChain {
    pub s_cap_v1: usize,
    pub cut: usize,
    pub k: usize,
    pub sbar: usize,
}

impl SizeChain {
    pub fn holds(&self) -> bool {
        self.s_cap_v1 < self.cut && self.cut < self.k && self.k < self.sbar
    }
}

/// Observed truth of the five conclusions for one applicable cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conclusions {
    /// Some `s̄ ∈ S̄` has `δ(s̄, S) = 2`.
    pub conclusion1: bool,
    /// Lowest-id such `s̄`.
    pub far_vertex: Option<Vertex>,
    /// Every `s ∈ S` has `δ(s, S̄) = 1`.
    pub conclusion2: bool,
    /// Lowest-id `s` violating conclusion 2.
    pub near_violator: Option<Vertex>,
    pub conclusion3: bool,
    pub chain: SizeChain,
    /// `S ∩ V1 ⊆ ∂²V1` and `S̄ ⊇ i²V1`.
    pub conclusion4: bool,
    pub s_within_boundary2: bool,
    pub sbar_covers_interior2: bool,
    /// `Φ <= |[S, S̄]|`.
    pub conclusion5: bool,
    pub phi: usize,
    /// The size chain re-evaluated with `k` taken over all of `V(G)`.
    pub chain_with_global_k: bool,
}

impl Conclusions {
    pub fn flags(&self) -> [bool; 5] {
        [
            self.conclusion1,
            self.conclusion2,
            self.conclusion3,
            self.conclusion4,
            self.conclusion5,
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.flags().iter().all(|&f| f)
    }

    /// 1-based indices of the conclusions that failed.
    pub fn violated(&self) -> Vec<usize> {
        self.flags()
            .iter()
            .enumerate()
            .filter(|(_, &f)| !f)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Outcome of checking one cut `[S, S̄]` with `V2 ⊆ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    /// Contracted diameter `<= 2` and `k > |[S, S̄]|`.
    pub applicable: bool,
    pub contracted_diameter: Dist,
    pub cut_size: usize,
    /// Minimum degree over `V1`.
    pub k: usize,
    /// Minimum degree over `V(G)`.
    pub k_global: usize,
    /// Present only when `applicable`.
    pub conclusions: Option<Conclusions>,
}

impl TheoremReport {
    pub fn is_violation(&self) -> bool {
        self.conclusions.as_ref().is_some_and(|c| !c.all_hold())
    }
}

/// Shares the metric and profile of one `(G, partition)` across many cuts.
pub struct TheoremChecker<'g> {
    graph: &'g Graph,
    v1: VertexSet,
    v2: VertexSet,
    metric: ContractedMetric,
    profile: ExpansionProfile,
}

impl<'g> TheoremChecker<'g> {
    pub fn new(g: &'g Graph, p: &Partition) -> Result<Self> {
        check_partition(g, p)?;
        Ok(TheoremChecker {
            graph: g,
            v1: p.v1().clone(),
            v2: p.v2().clone(),
            metric: contracted_metric(g, p)?,
            profile: expansion_profile(g, p)?,
        })
    }

    pub fn metric(&self) -> &ContractedMetric {
        &self.metric
    }

    pub fn profile(&self) -> &ExpansionProfile {
        &self.profile
    }

    /// True when no cut at all can be applicable for this partition.
    pub fn diameter_exceeds_two(&self) -> bool {
        !self.metric.diameter().at_most(2)
    }

    pub fn check(&self, s: &VertexSet) -> Result<TheoremReport> {
        let cut = self.graph.edge_cut(s)?;
        self.check_cut(&cut)
    }

    pub fn check_cut(&self, cut: &Cut) -> Result<TheoremReport> {
        let s = cut.s_side();
        if !self.v2.is_subset(s) {
            return Err(Error::V2NotInS);
        }
        let k = self.profile.k_min_v1;
        let k_global = self.profile.k_min_all;
        let cut_size = cut.size();
        let contracted_diameter = self.metric.diameter();
        let applicable = contracted_diameter.at_most(2) && k > cut_size;
        let conclusions = applicable.then(|| self.evaluate(s, cut_size, k, k_global));
        Ok(TheoremReport {
            applicable,
            contracted_diameter,
            cut_size,
            k,
            k_global,
            conclusions,
        })
    }

    fn evaluate(&self, s: &VertexSet, cut: usize, k: usize, k_global: usize) -> Conclusions {
        let sbar = s.complement();
        let two = Dist::Finite(2);
        let one = Dist::Finite(1);

        let far_vertex = sbar.iter().find(|&x| self.metric.to_set(x, s) == two);
        let near_violator = s.iter().find(|&x| self.metric.to_set(x, &sbar) != one);

        let s_cap_v1 = s.intersection(&self.v1);
        let chain = SizeChain {
            s_cap_v1: s_cap_v1.len(),
            cut,
            k,
            sbar: sbar.len(),
        };
        let global_chain = SizeChain {
            k: k_global,
            ..chain
        };

        let s_within_boundary2 = s_cap_v1.is_subset(&self.profile.boundary2);
        let sbar_covers_interior2 = self.profile.interior2.is_subset(&sbar);

        Conclusions {
            conclusion1: far_vertex.is_some(),
            far_vertex,
            conclusion2: near_violator.is_none(),
            near_violator,
            conclusion3: chain.holds(),
            chain,
            conclusion4: s_within_boundary2 && sbar_covers_interior2,
            s_within_boundary2,
            sbar_covers_interior2,
            conclusion5: self.profile.phi <= cut,
            phi: self.profile.phi,
            chain_with_global_k: global_chain.holds(),
        }
    }
}

/// Checks the cut `[S, S̄]` of `g` against the small-cut conclusions.
pub fn verify_theorem(g: &Graph, p: &Partition, s: &VertexSet) -> Result<TheoremReport> {
    s.check_universe(g.n())?;
    if !p.v2().is_subset(s) {
        return Err(Error::V2NotInS);
    }
    TheoremChecker::new(g, p)?.check(s)
}

use super::{check_partition, contracted_metric, expansion_profile, Partition};
use crate::connectivity::edge_connectivity;
use crate::{Dist, Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    NotCertified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisStatus {
    /// `deg_G(x) >= k` for every vertex.
    pub min_degree: bool,
    /// `G2` is `k`-edge-connected. A single-vertex `G2` has no cuts and
    /// counts as satisfied.
    pub g2_connected: bool,
    /// Contracted diameter `<= 2`.
    pub contracted_diameter: bool,
}

impl HypothesisStatus {
    pub fn all(&self) -> bool {
        self.min_degree && self.g2_connected && self.contracted_diameter
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternativeStatus {
    /// `Φ >= k`
    pub phi_at_least_k: bool,
    /// `|∂¹V1| >= k`
    pub boundary_at_least_k: bool,
    /// `V1 = ∂¹V1`
    pub all_boundary: bool,
}

impl AlternativeStatus {
    pub fn any(&self) -> bool {
        self.phi_at_least_k || self.boundary_at_least_k || self.all_boundary
    }
}

/// A sufficient-condition verdict that `G` is `k`-edge-connected.
/// `NotCertified` makes no claim either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub k: usize,
    pub hypotheses: HypothesisStatus,
    pub alternatives: AlternativeStatus,
    pub reasons: Vec<String>,
    pub min_degree: usize,
    /// `k'(G2)`, or `None` when `G2` is a single vertex.
    pub g2_kprime: Option<usize>,
    pub contracted_diameter: Dist,
    pub phi: usize,
    pub boundary1_size: usize,
    pub v1_size: usize,
}

pub fn certify(g: &Graph, p: &Partition, k: usize) -> Result<Certificate> {
    check_partition(g, p)?;
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let profile = expansion_profile(g, p)?;
    let metric = contracted_metric(g, p)?;
    let g2_kprime = match p.g2().graph().n() {
        1 => None,
        _ => Some(edge_connectivity(p.g2().graph())?.kprime),
    };
    let min_degree = profile.k_min_all;
    let contracted_diameter = metric.diameter();
    let boundary1_size = profile.boundary1.len();
    let v1_size = p.v1().len();

    let hypotheses = HypothesisStatus {
        min_degree: min_degree >= k,
        g2_connected: g2_kprime.is_none_or(|c| c >= k),
        contracted_diameter: contracted_diameter.at_most(2),
    };
    let alternatives = AlternativeStatus {
        phi_at_least_k: profile.phi >= k,
        boundary_at_least_k: boundary1_size >= k,
        all_boundary: boundary1_size == v1_size,
    };

    let mut reasons = Vec::new();
    if !hypotheses.min_degree {
        reasons.push(format!("minimum degree {min_degree} < k = {k}"));
    }
    if let (false, Some(c)) = (hypotheses.g2_connected, g2_kprime) {
        reasons.push(format!("G2 edge connectivity {c} < k = {k}"));
    }
    if !hypotheses.contracted_diameter {
        reasons.push(format!("contracted diameter {contracted_diameter} > 2"));
    }
    if !alternatives.any() {
        reasons.push(format!(
            "no alternative holds: Φ = {} < {k}, |∂¹V1| = {boundary1_size} < {k}, \
             |∂¹V1| = {boundary1_size} ≠ |V1| = {v1_size}",
            profile.phi
        ));
    }
    let verdict = if hypotheses.all() && alternatives.any() {
        Verdict::Certified
    } else {
        Verdict::NotCertified
    };
    Ok(Certificate {
        verdict,
        k,
        hypotheses,
        alternatives,
        reasons,
        min_degree,
        g2_kprime,
        contracted_diameter,
        phi: profile.phi,
        boundary1_size,
        v1_size,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::make_partition;
    use crate::VertexSet;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn complete_graph_split() {
        let g = Graph::complete(5);
        let p = make_partition(&g, set(5, &[0, 1, 2, 3])).unwrap();
        let c = certify(&g, &p, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
        assert!(c.alternatives.all_boundary);
        assert!(c.reasons.is_empty());
    }

    #[test]
    fn unreachable_v1_vertex() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = make_partition(&g, set(4, &[0, 1])).unwrap();
        let c = certify(&g, &p, 1).unwrap();
        assert_eq!(c.verdict, Verdict::NotCertified);
        assert!(!c.hypotheses.contracted_diameter);
        assert!(c
            .reasons
            .iter()
            .any(|r| r.contains("contracted diameter ∞")));
    }

    #[test]
    fn single_vertex_g2_is_vacuous() {
        let g = Graph::complete(3);
        let p = make_partition(&g, set(3, &[0])).unwrap();
        let c = certify(&g, &p, 2).unwrap();
        assert_eq!(c.g2_kprime, None);
        assert!(c.hypotheses.g2_connected);
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn zero_k_is_rejected() {
        let g = Graph::complete(3);
        let p = make_partition(&g, set(3, &[0])).unwrap();
        assert_eq!(certify(&g, &p, 0), Err(Error::InvalidK));
    }
}

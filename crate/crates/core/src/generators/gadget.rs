//! Clique gadgets: each side of the partition is a list of cliques joined
//! by explicit links, and cross edges join `G1` cliques to `G2` cliques.
//!
//! Text form, one `key = value` entry per line (`#` comments allowed):
//!
//! ```text
//! g2.cliques = 4 3
//! g2.links   = 0.1-1.0 0.2-1.1
//! g1.cliques = 2
//! g1.links   =
//! cross      = 0.0-0.3 0.1-1.2
//! ```
//!
//! A reference `c.i` names vertex `i` of clique `c` on that side. In `cross`
//! the left reference is on the `G1` side and the right one on the `G2`
//! side. Vertices are numbered `G2` first, clique by clique, then `G1`.

use std::fmt;
use std::str::FromStr;

use crate::expansion::{make_partition, Partition};
use crate::{Error, Graph, Result, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueRef {
    pub clique: usize,
    pub index: usize,
}

impl CliqueRef {
    pub fn new(clique: usize, index: usize) -> Self {
        CliqueRef { clique, index }
    }
}

impl fmt::Display for CliqueRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.clique, self.index)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GadgetSide {
    pub cliques: Vec<usize>,
    pub links: Vec<(CliqueRef, CliqueRef)>,
}

impl GadgetSide {
    pub fn size(&self) -> usize {
        self.cliques.iter().sum()
    }

    fn offsets(&self, start: usize) -> Vec<usize> {
        self.cliques
            .iter()
            .scan(start, |acc, &c| {
                let here = *acc;
                *acc += c;
                Some(here)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GadgetSpec {
    pub g2: GadgetSide,
    pub g1: GadgetSide,
    /// `(G1 vertex, G2 vertex)` pairs.
    pub cross: Vec<(CliqueRef, CliqueRef)>,
}

fn invalid(message: String) -> Error {
    Error::Parse { line: 0, message }
}

fn resolve(side: &GadgetSide, offsets: &[usize], r: CliqueRef, name: &str) -> Result<Vertex> {
    match side.cliques.get(r.clique) {
        Some(&size) if r.index < size => Ok(offsets[r.clique] + r.index),
        _ => Err(invalid(format!(
            "{name} reference {r} does not name a clique vertex"
        ))),
    }
}

/// Builds the gadget graph and its partition, with `V2` the `G2` vertices.
pub fn build_gadget(spec: &GadgetSpec) -> Result<(Graph, Partition)> {
    if let Some(c) = spec
        .g1
        .cliques
        .iter()
        .chain(&spec.g2.cliques)
        .find(|&&c| c == 0)
    {
        return Err(invalid(format!("clique size {c} must be positive")));
    }
    let n2 = spec.g2.size();
    let n1 = spec.g1.size();
    if n1 == 0 || n2 == 0 {
        return Err(Error::EmptySide);
    }
    let off2 = spec.g2.offsets(0);
    let off1 = spec.g1.offsets(n2);
    let mut edges = Vec::new();
    for (side, offsets) in [(&spec.g2, &off2), (&spec.g1, &off1)] {
        for (&size, &start) in side.cliques.iter().zip(offsets.iter()) {
            for a in start..start + size {
                for b in a + 1..start + size {
                    edges.push((a, b));
                }
            }
        }
    }
    for &(a, b) in &spec.g2.links {
        edges.push((
            resolve(&spec.g2, &off2, a, "g2")?,
            resolve(&spec.g2, &off2, b, "g2")?,
        ));
    }
    for &(a, b) in &spec.g1.links {
        edges.push((
            resolve(&spec.g1, &off1, a, "g1")?,
            resolve(&spec.g1, &off1, b, "g1")?,
        ));
    }
    for &(a, b) in &spec.cross {
        edges.push((
            resolve(&spec.g1, &off1, a, "g1")?,
            resolve(&spec.g2, &off2, b, "g2")?,
        ));
    }
    let n = n1 + n2;
    let g = Graph::new(n, edges)?;
    let p = make_partition(&g, VertexSet::from_vertices(n, 0..n2)?)?;
    Ok((g, p))
}

fn parse_ref(token: &str) -> std::result::Result<CliqueRef, String> {
    let (c, i) = token
        .split_once('.')
        .ok_or_else(|| format!("expected `clique.index`, found {token:?}"))?;
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("bad number in {token:?}"))
    };
    Ok(CliqueRef::new(num(c)?, num(i)?))
}

fn parse_pairs(value: &str) -> std::result::Result<Vec<(CliqueRef, CliqueRef)>, String> {
    value
        .split_whitespace()
        .map(|t| {
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| format!("expected `a.i-b.j`, found {t:?}"))?;
            Ok((parse_ref(a)?, parse_ref(b)?))
        })
        .collect()
}

impl FromStr for GadgetSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut spec = GadgetSpec::default();
        let mut seen = std::collections::HashSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, found {content:?}")))?;
            let key = key.trim();
            if !seen.insert(key.to_string()) {
                return Err(err(format!("key {key:?} given twice")));
            }
            let sizes = || {
                value
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| err(format!("bad clique size {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            };
            match key {
                "g2.cliques" => spec.g2.cliques = sizes()?,
                "g1.cliques" => spec.g1.cliques = sizes()?,
                "g2.links" => spec.g2.links = parse_pairs(value).map_err(err)?,
                "g1.links" => spec.g1.links = parse_pairs(value).map_err(err)?,
                "cross" => spec.cross = parse_pairs(value).map_err(err)?,
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for GadgetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes = |s: &GadgetSide| {
            s.cliques
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let pairs = |ps: &[(CliqueRef, CliqueRef)]| {
            ps.iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "g2.cliques = {}", sizes(&self.g2))?;
        writeln!(f, "g2.links = {}", pairs(&self.g2.links))?;
        writeln!(f, "g1.cliques = {}", sizes(&self.g1))?;
        writeln!(f, "g1.links = {}", pairs(&self.g1.links))?;
        writeln!(f, "cross = {}", pairs(&self.cross))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_with_pendant_vertex() {
        let spec: GadgetSpec = "g2.cliques = 4\ng1.cliques = 1\ncross = 0.0-0.0 0.0-0.1\n"
            .parse()
            .unwrap();
        let (g, p) = build_gadget(&spec).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.bracket(p.v1(), p.v2()).unwrap().len(), 2);
    }

    #[test]
    fn empty_g1_side() {
        let spec: GadgetSpec = "g2.cliques = 3 3\ng2.links = 0.0-1.0 0.1-1.1 0.2-1.2\n"
            .parse()
            .unwrap();
        assert_eq!(build_gadget(&spec).unwrap_err(), Error::EmptySide);
    }

    #[test]
    fn k5_as_k4_plus_vertex_matches_make_partition() {
        let spec: GadgetSpec =
            "g2.cliques = 4\ng1.cliques = 1\ncross = 0.0-0.0 0.0-0.1 0.0-0.2 0.0-0.3"
                .parse()
                .unwrap();
        let (g, p) = build_gadget(&spec).unwrap();
        assert_eq!(g, Graph::complete(5));
        let direct = make_partition(&g, VertexSet::from_vertices(5, 0..4).unwrap()).unwrap();
        assert_eq!(p, direct);
    }

    #[test]
    fn duplicate_edge_from_link() {
        let spec: GadgetSpec = "g2.cliques = 3\ng2.links = 0.0-0.1\ng1.cliques = 1\n"
            .parse()
            .unwrap();
        assert_eq!(build_gadget(&spec).unwrap_err(), Error::DuplicateEdge(0, 1));
    }

    #[test]
    fn bad_references_and_syntax() {
        let spec: GadgetSpec = "g2.cliques = 2\ng1.cliques = 1\ncross = 0.0-0.2"
            .parse()
            .unwrap();
        assert!(matches!(build_gadget(&spec), Err(Error::Parse { .. })));
        assert!(matches!(
            "g2.cliques 2".parse::<GadgetSpec>(),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "colour = red".parse::<GadgetSpec>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "cross = 0-1".parse::<GadgetSpec>(),
            Err(Error::Parse { .. })
        ));
        let zero: GadgetSpec = "g2.cliques = 0 2\ng1.cliques = 1".parse().unwrap();
        assert!(matches!(build_gadget(&zero), Err(Error::Parse { .. })));
    }

    #[test]
    fn display_round_trip() {
        let spec = GadgetSpec {
            g2: GadgetSide {
                cliques: vec![3, 2],
                links: vec![(CliqueRef::new(0, 0), CliqueRef::new(1, 1))],
            },
            g1: GadgetSide {
                cliques: vec![2],
                links: vec![],
            },
            cross: vec![(CliqueRef::new(0, 1), CliqueRef::new(1, 0))],
        };
        assert_eq!(spec.to_string().parse::<GadgetSpec>().unwrap(), spec);
    }
}

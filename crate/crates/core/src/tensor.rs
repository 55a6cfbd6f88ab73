//! Pairs of charged partitions `b1 ⊗ b2` with the tensor product rule,
//! matching concatenation `Ψ(b1) ∗ Ψ(b2)` of LS paths.

use std::collections::{HashMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::iso::to_path;
use crate::partition::ChargedPartition;
use crate::weight::{format_below, Fundamental, Weight};
use crate::weyl::{
    coset_rep, demazure_min, double_coset_min, kk_index, CosetRep, Node, Sign, WeylElement,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTensor", into = "RawTensor")]
pub struct TensorElement {
    left: ChargedPartition,
    right: ChargedPartition,
}

#[derive(Serialize, Deserialize)]
struct RawTensor {
    left: ChargedPartition,
    right: ChargedPartition,
}

impl TryFrom<RawTensor> for TensorElement {
    type Error = Error;
    fn try_from(raw: RawTensor) -> Result<Self> {
        TensorElement::new(raw.left, raw.right)
    }
}

impl From<TensorElement> for RawTensor {
    fn from(t: TensorElement) -> Self {
        RawTensor {
            left: t.left,
            right: t.right,
        }
    }
}

fn regular(x: Result<Option<ChargedPartition>>) -> Option<ChargedPartition> {
    x.expect("components are regular")
}

impl TensorElement {
    /// The left factor may have either charge; the right one has charge 0.
    pub fn new(left: ChargedPartition, right: ChargedPartition) -> Result<Self> {
        left.require_regular()?;
        right.require_regular()?;
        if right.charge() != Node::Zero {
            return Err(Error::ChargeMismatch {
                expected: 0,
                found: right.charge().index(),
            });
        }
        Ok(TensorElement { left, right })
    }

    /// `∅ ⊗ ∅` in `B(λ) ⊗ B(Λ0)`.
    pub fn empty(lambda: Fundamental) -> Self {
        TensorElement {
            left: ChargedPartition::empty(lambda.node()),
            right: ChargedPartition::empty(Node::Zero),
        }
    }

    pub fn left(&self) -> &ChargedPartition {
        &self.left
    }

    pub fn right(&self) -> &ChargedPartition {
        &self.right
    }

    pub fn lambda(&self) -> Fundamental {
        self.left.fundamental()
    }

    pub fn size(&self) -> u32 {
        self.left.size() + self.right.size()
    }

    pub fn weight(&self) -> Weight {
        self.left.weight() + self.right.weight()
    }

    /// The weight written as `λ + Λ0 − n0α0 − n1α1`.
    pub fn weight_label(&self) -> String {
        let top = self.lambda().weight() + Weight::LAMBDA0;
        let name = match self.lambda() {
            Fundamental::L0 => "2Λ0",
            Fundamental::L1 => "Λ0 + Λ1",
        };
        let (n0, n1) = self.weight().roots_below(&top).expect("weights lie in the root lattice");
        format_below(name, n0, n1)
    }

    fn phi_left(&self, i: Node) -> u32 {
        self.left.phi(i).expect("regular")
    }

    fn eps_right(&self, i: Node) -> u32 {
        self.right.epsilon(i).expect("regular")
    }

    pub fn epsilon(&self, i: Node) -> u32 {
        let el = self.left.epsilon(i).expect("regular");
        let gap = self.eps_right(i) as i64 - self.phi_left(i) as i64;
        el + gap.max(0) as u32
    }

    pub fn phi(&self, i: Node) -> u32 {
        let pr = self.right.phi(i).expect("regular");
        let gap = self.phi_left(i) as i64 - self.eps_right(i) as i64;
        pr + gap.max(0) as u32
    }

    /// Acts on the left factor iff `φ_i(b1) > ε_i(b2)`.
    pub fn f(&self, i: Node) -> Option<TensorElement> {
        if self.phi_left(i) > self.eps_right(i) {
            let left = regular(self.left.f(i))?;
            Some(TensorElement {
                left,
                right: self.right.clone(),
            })
        } else {
            let right = regular(self.right.f(i))?;
            Some(TensorElement {
                left: self.left.clone(),
                right,
            })
        }
    }

    /// Acts on the left factor iff `φ_i(b1) ≥ ε_i(b2)`.
    pub fn e(&self, i: Node) -> Option<TensorElement> {
        if self.phi_left(i) >= self.eps_right(i) {
            let left = regular(self.left.e(i))?;
            Some(TensorElement {
                left,
                right: self.right.clone(),
            })
        } else {
            let right = regular(self.right.e(i))?;
            Some(TensorElement {
                left: self.left.clone(),
                right,
            })
        }
    }

    pub fn is_highest_weight(&self) -> bool {
        Node::ALL.iter().all(|&i| self.e(i).is_none())
    }

    /// Final direction of the left path and initial direction of the right.
    pub fn junction(&self) -> (CosetRep, CosetRep) {
        let tau = to_path(&self.left).expect("regular").final_direction();
        let phi = to_path(&self.right).expect("regular").initial_direction();
        (tau, phi)
    }

    /// `min W_λ I(τ⁻¹) φ W_{Λ0}` by the closed form for its index.
    pub fn w_assoc(&self) -> WeylElement {
        let (_, n) = self.left.bounding_rect();
        let (m, _) = self.right.bounding_rect();
        coset_rep(Sign::Plus, kk_index(self.lambda(), n, m))
    }

    /// The same element from the z-sequence and the four-candidate minimum.
    pub fn w_assoc_via_demazure(&self) -> WeylElement {
        let (tau, phi) = self.junction();
        let z = demazure_min(tau.element().inverse(), phi.element());
        double_coset_min(self.lambda(), z, Fundamental::L0)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

pub fn tensor_f(i: Node, t: &TensorElement) -> Option<TensorElement> {
    t.f(i)
}

pub fn tensor_e(i: Node, t: &TensorElement) -> Option<TensorElement> {
    t.e(i)
}

pub fn is_highest_weight(t: &TensorElement) -> bool {
    t.is_highest_weight()
}

pub fn w_assoc(t: &TensorElement) -> WeylElement {
    t.w_assoc()
}

/// Every pair `b1 ⊗ b2` with `b1` of charge `λ` and at most `max_boxes`
/// boxes in total, ordered by total size.
pub fn enumerate_pairs(lambda: Fundamental, max_boxes: u32) -> Vec<TensorElement> {
    let lefts = crate::partition::enumerate_regular(lambda.node(), max_boxes);
    let rights = crate::partition::enumerate_regular(Node::Zero, max_boxes);
    let mut out = Vec::new();
    for total in 0..=max_boxes {
        for l in lefts.iter().filter(|l| l.size() <= total) {
            for r in rights.iter().filter(|r| r.size() + l.size() == total) {
                out.push(TensorElement {
                    left: l.clone(),
                    right: r.clone(),
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub i: Node,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrystalGraph {
    pub vertices: Vec<TensorElement>,
    pub edges: Vec<Edge>,
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    left: &'a ChargedPartition,
    right: &'a ChargedPartition,
    weight: Weight,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: Vec<JsonVertex<'a>>,
    edges: &'a [Edge],
}

impl CrystalGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{v}\\n{}\"];", v.weight_label());
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -> v{} [label=\"i={}\"];", e.from, e.to, e.i);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let graph = JsonGraph {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| JsonVertex {
                    id,
                    left: &v.left,
                    right: &v.right,
                    weight: v.weight(),
                })
                .collect(),
            edges: &self.edges,
        };
        serde_json::to_string_pretty(&graph).expect("graph serializes")
    }
}

/// Breadth-first closure of `seeds` under all `f_i` and `e_i`, dropping
/// anything with more than `max_boxes` boxes. Edges are `f_i` arrows.
pub fn crystal_graph(seeds: &[TensorElement], max_boxes: u32) -> CrystalGraph {
    let mut graph = CrystalGraph::default();
    let mut index: HashMap<TensorElement, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut visit = |t: TensorElement, graph: &mut CrystalGraph, queue: &mut VecDeque<usize>| {
        *index.entry(t.clone()).or_insert_with(|| {
            graph.vertices.push(t);
            queue.push_back(graph.vertices.len() - 1);
            graph.vertices.len() - 1
        })
    };
    for s in seeds.iter().filter(|s| s.size() <= max_boxes) {
        visit(s.clone(), &mut graph, &mut queue);
    }
    while let Some(k) = queue.pop_front() {
        let t = graph.vertices[k].clone();
        for i in Node::ALL {
            if let Some(down) = t.f(i).filter(|d| d.size() <= max_boxes) {
                let to = visit(down, &mut graph, &mut queue);
                graph.edges.push(Edge { from: k, to, i });
            }
            if let Some(up) = t.e(i) {
                visit(up, &mut graph, &mut queue);
            }
        }
    }
    // arrows into vertices discovered through e_i
    let mut seen: std::collections::HashSet<(usize, usize, u8)> =
        graph.edges.iter().map(|e| (e.from, e.to, e.i.index())).collect();
    for k in 0..graph.vertices.len() {
        for i in Node::ALL {
            if let Some(&to) = graph.vertices[k].f(i).and_then(|d| index.get(&d)) {
                if seen.insert((k, to, i.index())) {
                    graph.edges.push(Edge { from: k, to, i });
                }
            }
        }
    }
    graph.edges.sort_by_key(|e| (e.from, e.i.index(), e.to));
    graph
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(parts: &[u32], c: Node) -> ChargedPartition {
        ChargedPartition::new(parts.to_vec(), c).unwrap()
    }

    fn pair(l: &[u32], lc: Node, r: &[u32]) -> TensorElement {
        TensorElement::new(cp(l, lc), cp(r, Node::Zero)).unwrap()
    }

    #[test]
    fn construction() {
        assert!(TensorElement::new(cp(&[2, 2], Node::Zero), cp(&[], Node::Zero)).is_err());
        assert!(TensorElement::new(cp(&[], Node::Zero), cp(&[1], Node::One)).is_err());
        assert_eq!(TensorElement::empty(Fundamental::L1).lambda(), Fundamental::L1);
    }

    #[test]
    fn rule_examples() {
        let e = TensorElement::empty(Fundamental::L0);
        assert_eq!(e.f(Node::Zero), Some(pair(&[1], Node::Zero, &[])));
        assert_eq!(e.f(Node::One), None);
        for i in Node::ALL {
            assert_eq!(e.e(i), None);
        }
        // φ_0(∅) = 1 ≥ ε_0((1)) = 1, so e_0 tries the left factor and kills
        assert_eq!(pair(&[], Node::Zero, &[1]).e(Node::Zero), None);
        assert!(pair(&[], Node::Zero, &[1]).is_highest_weight());
    }

    #[test]
    fn highest_weight_examples() {
        assert!(TensorElement::empty(Fundamental::L0).is_highest_weight());
        assert!(pair(&[], Node::Zero, &[3]).is_highest_weight());
        assert!(!pair(&[], Node::Zero, &[2]).is_highest_weight());
        assert!(pair(&[], Node::One, &[2]).is_highest_weight());
        assert!(!pair(&[1], Node::Zero, &[]).is_highest_weight());
    }

    #[test]
    fn w_assoc_examples() {
        assert!(TensorElement::empty(Fundamental::L0).w_assoc().is_identity());
        let a = pair(&[1], Node::Zero, &[4]);
        assert_eq!(a.w_assoc(), coset_rep(Sign::Plus, 3));
        assert_eq!(a.w_assoc_via_demazure(), a.w_assoc());
        let b = pair(&[], Node::One, &[2]);
        assert_eq!(b.w_assoc(), coset_rep(Sign::Plus, 2));
        assert_eq!(b.w_assoc_via_demazure(), b.w_assoc());
    }

    #[test]
    fn string_lengths() {
        let t = pair(&[], Node::Zero, &[1]);
        assert_eq!(t.epsilon(Node::Zero), 0);
        assert_eq!(t.phi(Node::Zero), 0);
        assert_eq!(t.phi(Node::One), 2);
        let u = pair(&[1], Node::Zero, &[]);
        assert_eq!(u.epsilon(Node::Zero), 1);
    }

    #[test]
    fn small_graphs() {
        let g = crystal_graph(&[TensorElement::empty(Fundamental::L0)], 1);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges[0], Edge { from: 0, to: 1, i: Node::Zero });
        assert_eq!(crystal_graph(&[], 5), CrystalGraph::default());
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("v0 -> v1 [label=\"i=0\"]"));
        assert!(dot.contains("v1 [label=\"(1 | c=0) ⊗ (∅ | c=0)\\n2Λ0 − α0\"]"));
        let json: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(json["edges"][0]["i"], 0);
    }

    #[test]
    fn pair_enumeration() {
        let all = enumerate_pairs(Fundamental::L0, 2);
        // sizes: (0,0); (1,0),(0,1); (2,0),(1,1),(0,2)
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0].size() <= w[1].size()));
    }

    #[test]
    fn json_round_trip() {
        let t = pair(&[2], Node::One, &[3, 1]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<TensorElement>(&s).unwrap(), t);
    }
}

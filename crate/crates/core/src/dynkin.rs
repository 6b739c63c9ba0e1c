//! Diagram combinatorics: induced components, orthogonality, type
//! recognition, and diagrams with one extra node attached.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;
use crate::rootsystem::{graph_components, RootSystem, Weight};
use crate::types::DynkinType;

/// Connected components of the subdiagram on `j`, ordered by least node.
pub fn components(rs: &RootSystem, j: NodeSet) -> Vec<NodeSet> {
    graph_components(rs.cartan(), j)
}

/// True iff `(α_j, α_k) = 0` for all `j ∈ a`, `k ∈ b`.
pub fn is_orthogonal(rs: &RootSystem, a: NodeSet, b: NodeSet) -> bool {
    a.iter().all(|i| b.iter().all(|k| rs.a(i, k) == 0))
}

/// Types of the components of the subdiagram on `j`, `C2` reported as `B2`.
pub fn classify(rs: &RootSystem, j: NodeSet) -> Result<Vec<DynkinType>> {
    components(rs, j)
        .into_iter()
        .map(|c| {
            let nodes: Vec<usize> = c.iter().collect();
            let sub: Vec<Vec<i64>> = nodes
                .iter()
                .map(|&x| nodes.iter().map(|&y| rs.a(x, y)).collect())
                .collect();
            DynkinType::identify(&sub)
                .map(|(t, _)| t.canonical())
                .ok_or_else(|| Error::invariant(format!("subdiagram on {c} has no finite type")))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtraNode {
    /// The affine node `α₀ = -θ` of one simple component.
    Affine { component: NodeSet, theta: Weight },
    /// The node `-λ` of the extended Coxeter diagram.
    MinusLambda,
}

/// A diagram on `I ∪ {extra}`. Edges among `I` are those of the base
/// diagram; the extra node is joined by a plain edge to `attached`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedDiagram<'a> {
    pub base: &'a RootSystem,
    pub extra: ExtraNode,
    pub attached: NodeSet,
    /// Nodes of `I` that participate (the component for the affine case).
    pub scope: NodeSet,
}

/// The part of `(Î ∖ J)` connected to the extra node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtendedComponent {
    pub nodes: NodeSet,
    pub contains_extra: bool,
}

impl<'a> ExtendedDiagram<'a> {
    /// Affine diagram of a simple system.
    pub fn affine(rs: &'a RootSystem) -> Result<Self> {
        if !rs.is_simple() {
            return Err(Error::input(format!(
                "the affine diagram is only defined for a simple diagram, got {}",
                rs.type_string()
            )));
        }
        Self::affine_component(rs, rs.nodes())
    }

    /// Affine diagram of one connected component of a semisimple system.
    pub fn affine_component(rs: &'a RootSystem, component: NodeSet) -> Result<Self> {
        let theta = rs.highest_root(component)?;
        let attached = component.iter().filter(|&i| !theta.0[i].is_zero()).collect();
        Ok(ExtendedDiagram {
            base: rs,
            extra: ExtraNode::Affine { component, theta },
            attached,
            scope: component,
        })
    }

    /// Extended Coxeter diagram with the node `-λ`; `positive` lists the
    /// nodes with `(λ, α_i) > 0`.
    pub fn minus_lambda(rs: &'a RootSystem, positive: NodeSet) -> Self {
        ExtendedDiagram {
            base: rs,
            extra: ExtraNode::MinusLambda,
            attached: positive,
            scope: rs.nodes(),
        }
    }

    /// Same, with the attachment read off a numeric weight.
    pub fn minus_lambda_weight(rs: &'a RootSystem, lambda: &Weight) -> Self {
        let positive = (0..rs.rank())
            .filter(|&i| rs.pair_simple(i, lambda).is_positive())
            .collect();
        Self::minus_lambda(rs, positive)
    }

    /// The component of the extended diagram with `J` removed that contains
    /// the extra node.
    pub fn component_containing(&self, j: NodeSet) -> ExtendedComponent {
        let allowed = self.scope.difference(j);
        let mut comp = self.attached.intersection(allowed);
        let mut frontier: Vec<usize> = comp.iter().collect();
        while let Some(u) = frontier.pop() {
            for v in allowed.difference(comp) {
                if self.base.a(u, v) != 0 {
                    comp.insert(v);
                    frontier.push(v);
                }
            }
        }
        ExtendedComponent {
            nodes: comp,
            contains_extra: true,
        }
    }

    /// Whether the extended diagram with node `i ∈ I` removed is connected.
    pub fn connected_without(&self, i: usize) -> bool {
        let comp = self.component_containing(NodeSet::singleton(i));
        comp.nodes == self.scope.without(i)
    }

    /// Undirected edge list, the extra node written as `None`.
    pub fn edges(&self) -> Vec<(Option<usize>, usize)> {
        let mut e: Vec<(Option<usize>, usize)> = self.attached.iter().map(|i| (None, i)).collect();
        for i in self.scope {
            for k in self.scope {
                if i < k && self.base.a(i, k) != 0 {
                    e.push((Some(i), k));
                }
            }
        }
        e
    }
}

/// `extendedComponentContaining` as a free function.
pub fn extended_component_containing(e: &ExtendedDiagram<'_>, j: NodeSet) -> ExtendedComponent {
    e.component_containing(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(labels: &[usize]) -> NodeSet {
        labels.iter().map(|l| l - 1).collect()
    }

    #[test]
    fn components_and_orthogonality() {
        let a3 = RootSystem::parse("A3").unwrap();
        assert_eq!(components(&a3, ns(&[1, 3])), vec![ns(&[1]), ns(&[3])]);
        assert_eq!(components(&a3, ns(&[1, 2])), vec![ns(&[1, 2])]);
        assert!(components(&a3, NodeSet::EMPTY).is_empty());
        assert!(is_orthogonal(&a3, ns(&[1]), ns(&[3])));
        assert!(!is_orthogonal(&a3, ns(&[1]), ns(&[2])));
        assert!(is_orthogonal(&a3, ns(&[2]), NodeSet::EMPTY));
    }

    #[test]
    fn classification() {
        let a3 = RootSystem::parse("A3").unwrap();
        let t: Vec<String> = classify(&a3, ns(&[1, 3])).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(t, ["A1", "A1"]);
        let b3 = RootSystem::parse("B3").unwrap();
        assert_eq!(classify(&b3, ns(&[2, 3])).unwrap()[0].to_string(), "B2");
        let c3 = RootSystem::parse("C3").unwrap();
        assert_eq!(classify(&c3, ns(&[2, 3])).unwrap()[0].to_string(), "B2");
        let f4 = RootSystem::parse("F4").unwrap();
        assert_eq!(classify(&f4, f4.nodes()).unwrap()[0].to_string(), "F4");
    }

    #[test]
    fn affine_a2() {
        let a2 = RootSystem::parse("A2").unwrap();
        let e = ExtendedDiagram::affine(&a2).unwrap();
        assert_eq!(e.component_containing(NodeSet::EMPTY).nodes, a2.nodes());
        assert_eq!(e.component_containing(ns(&[1])).nodes, ns(&[2]));
        assert!(e.connected_without(0));
        let two = RootSystem::parse("A1xA1").unwrap();
        assert!(ExtendedDiagram::affine(&two).is_err());
    }

    #[test]
    fn minus_lambda_a2() {
        let a2 = RootSystem::parse("A2").unwrap();
        let e = ExtendedDiagram::minus_lambda_weight(&a2, &Weight::from_ints(&[1, 0]));
        assert_eq!(e.attached, ns(&[1]));
        assert_eq!(e.component_containing(NodeSet::EMPTY).nodes, ns(&[1, 2]));
        assert_eq!(e.component_containing(ns(&[1])).nodes, NodeSet::EMPTY);
    }

    #[test]
    fn d4_centre_disconnects() {
        let d4 = RootSystem::parse("D4").unwrap();
        let e = ExtendedDiagram::affine(&d4).unwrap();
        assert!(!e.connected_without(1));
        assert!(e.connected_without(0));
    }
}

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::enumerate::windowed_arcs;
use crate::stable::arc::{tau, Arc};
use crate::stable::hom::irreducible;
use crate::zgon::GonConfig;

/// Which component an arc belongs to: the copies of its two ends and the
/// parity of its first index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ComponentLabel {
    pub p: u32,
    pub q: u32,
    pub odd: bool,
}

impl ComponentLabel {
    pub fn of(a: &Arc) -> Self {
        ComponentLabel {
            p: a.a1.copy,
            q: a.a2.copy,
            odd: a.a1.index.rem_euclid(2) == 1,
        }
    }

    /// Components with both ends in one copy look like ℤA∞; the others
    /// are ℤA∞∞.
    pub fn shape(&self) -> &'static str {
        if self.p == self.q {
            "ZA_inf"
        } else {
            "ZA_inf_inf"
        }
    }
}

impl std::fmt::Display for ComponentLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parity = if self.odd { "odd" } else { "even" };
        write!(f, "({},{},{parity})", self.p, self.q)
    }
}

/// The Auslander–Reiten quiver restricted to a window.
#[derive(Debug, Clone)]
pub struct ArQuiver {
    pub graph: DiGraph<Arc, ()>,
    index: HashMap<Arc, NodeIndex>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Component {
    pub label: ComponentLabel,
    pub shape: &'static str,
    pub members: Vec<Arc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Adjacency {
    pub vertices: Vec<Arc>,
    pub edges: Vec<(Arc, Arc)>,
    pub tau: Vec<(Arc, Arc)>,
    pub components: Vec<Component>,
}

pub fn ar_quiver(cfg: &GonConfig, window: i64) -> ArQuiver {
    let arcs = windowed_arcs(cfg, window);
    let mut graph = DiGraph::new();
    let index: HashMap<Arc, NodeIndex> = arcs.iter().map(|&a| (a, graph.add_node(a))).collect();
    for &a in &arcs {
        let targets = [
            Arc::new(a.a1, a.a2.offset(-2)),
            Arc::new(a.a1.offset(-2), a.a2),
        ];
        for b in targets {
            if let Some(&j) = index.get(&b) {
                debug_assert!(irreducible(&a, &b));
                graph.add_edge(index[&a], j, ());
            }
        }
    }
    ArQuiver { graph, index }
}

impl ArQuiver {
    pub fn vertex_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn out_degree(&self, a: &Arc) -> usize {
        self.index
            .get(a)
            .map_or(0, |&i| self.graph.neighbors(i).count())
    }

    /// Weakly connected components, grouped by union-find over the arrows.
    pub fn components(&self) -> Vec<Vec<Arc>> {
        let mut uf = UnionFind::new(self.graph.node_count());
        for e in self.graph.raw_edges() {
            uf.union(e.source().index(), e.target().index());
        }
        let mut groups: BTreeMap<usize, Vec<Arc>> = BTreeMap::new();
        for i in self.graph.node_indices() {
            groups
                .entry(uf.find(i.index()))
                .or_default()
                .push(self.graph[i]);
        }
        let mut out: Vec<Vec<Arc>> = groups
            .into_values()
            .map(|mut g| {
                g.sort();
                g
            })
            .collect();
        out.sort();
        out
    }

    pub fn component_count(&self) -> usize {
        petgraph::algo::connected_components(&self.graph)
    }

    /// Components keyed by label. Every component must carry one label.
    pub fn labeled_components(&self) -> Vec<Component> {
        let mut out: Vec<Component> = self
            .components()
            .into_iter()
            .map(|members| {
                let label = ComponentLabel::of(&members[0]);
                Component {
                    label,
                    shape: label.shape(),
                    members,
                }
            })
            .collect();
        out.sort_by_key(|c| c.label);
        out
    }

    fn tau_pairs(&self) -> Vec<(Arc, Arc)> {
        let mut out: Vec<(Arc, Arc)> = self
            .index
            .keys()
            .filter_map(|a| {
                let t = tau(a);
                self.index.contains_key(&t).then_some((*a, t))
            })
            .collect();
        out.sort();
        out
    }

    pub fn adjacency(&self) -> Adjacency {
        let mut vertices: Vec<Arc> = self.index.keys().copied().collect();
        vertices.sort();
        let mut edges: Vec<(Arc, Arc)> = self
            .graph
            .raw_edges()
            .iter()
            .map(|e| (self.graph[e.source()], self.graph[e.target()]))
            .collect();
        edges.sort();
        Adjacency {
            vertices,
            edges,
            tau: self.tau_pairs(),
            components: self.labeled_components(),
        }
    }

    /// Graphviz rendering: one cluster per component, irreducible arrows
    /// solid, the translate dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar_quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n");
        for (k, c) in self.labeled_components().iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{k} {{");
            let _ = writeln!(s, "    label=\"{} {}\";", c.label, c.shape);
            for a in &c.members {
                let _ = writeln!(s, "    \"{}\";", dot_name(a));
            }
            s.push_str("  }\n");
        }
        let adj = self.adjacency();
        for (a, b) in &adj.edges {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", dot_name(a), dot_name(b));
        }
        for (a, t) in &adj.tau {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [style=dashed, constraint=false, color=gray];",
                dot_name(a),
                dot_name(t)
            );
        }
        s.push_str("}\n");
        s
    }
}

fn dot_name(a: &Arc) -> String {
    format!(
        "({}:{}|{}:{})",
        a.a1.copy, a.a1.index, a.a2.copy, a.a2.index
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_census() {
        for (m, expected) in [(1, 2), (2, 6), (3, 12)] {
            let cfg = GonConfig::new(m).unwrap();
            let q = ar_quiver(&cfg, 4);
            assert_eq!(q.component_count(), expected, "m = {m}");
            let labels: std::collections::BTreeSet<_> =
                q.labeled_components().iter().map(|c| c.label).collect();
            assert_eq!(labels.len(), expected);
            for c in q.labeled_components() {
                assert!(c.members.iter().all(|a| ComponentLabel::of(a) == c.label));
            }
        }
    }

    #[test]
    fn out_degree_at_most_two() {
        let cfg = GonConfig::new(2).unwrap();
        let q = ar_quiver(&cfg, 4);
        for a in windowed_arcs(&cfg, 4) {
            assert!(q.out_degree(&a) <= 2);
        }
    }

    #[test]
    fn empty_window() {
        let cfg = GonConfig::new(1).unwrap();
        let q = ar_quiver(&cfg, 0);
        assert_eq!(q.vertex_count(), 0);
        let dot = q.to_dot();
        assert!(dot.starts_with("digraph ar_quiver {"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn dot_mentions_every_vertex() {
        let cfg = GonConfig::new(1).unwrap();
        let q = ar_quiver(&cfg, 3);
        let dot = q.to_dot();
        assert!(dot.contains("\"(1:1|1:0)\""));
        assert!(dot.contains("style=dashed"));
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
    }
}

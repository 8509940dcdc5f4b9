//! Asserted subsumption hierarchies and the graph quantities computed on
//! them.
//!
//! Edges point from child to parent. Only named-to-named links count;
//! reflexive links (`SubClassOf(A A)`) are dropped. Cycles are allowed and
//! handled through strongly connected components.

use std::collections::{BTreeMap, BTreeSet};

use crate::model::{Axiom, ClassExpression, Iri, ObjectPropertyExpression, Ontology, SubObjectProperty};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hierarchy {
    nodes: Vec<Iri>,
    parents: Vec<BTreeSet<usize>>,
    children: Vec<BTreeSet<usize>>,
    direct_edges: usize,
    reachable_pairs: usize,
    /// Component id per node. Ids follow Tarjan's emission order, in which
    /// every component comes after all components it can reach.
    scc: Vec<usize>,
    component_count: usize,
}

/// (MSB, ASB)
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fanout {
    pub max_children: usize,
    pub mean_children: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tangledness {
    pub count: usize,
    pub max_parents: usize,
}

impl Hierarchy {
    /// Builds a hierarchy over `nodes` from child→parent pairs. Pairs naming
    /// unknown nodes add those nodes.
    pub fn from_edges(nodes: impl IntoIterator<Item = Iri>, edges: impl IntoIterator<Item = (Iri, Iri)>) -> Self {
        let mut index: BTreeMap<Iri, usize> = BTreeMap::new();
        let edges: Vec<(Iri, Iri)> = edges.into_iter().collect();
        let mut all: BTreeSet<Iri> = nodes.into_iter().collect();
        for (c, p) in &edges {
            all.insert(c.clone());
            all.insert(p.clone());
        }
        let nodes: Vec<Iri> = all.into_iter().collect();
        for (i, n) in nodes.iter().enumerate() {
            index.insert(n.clone(), i);
        }
        let n = nodes.len();
        let mut parents = vec![BTreeSet::new(); n];
        let mut children = vec![BTreeSet::new(); n];
        for (c, p) in &edges {
            let (c, p) = (index[c], index[p]);
            if c != p {
                parents[c].insert(p);
                children[p].insert(c);
            }
        }
        let direct_edges = parents.iter().map(BTreeSet::len).sum();
        let (scc, component_count) = tarjan(&parents);
        let reachable_pairs = count_reachable(&parents);
        Hierarchy { nodes, parents, children, direct_edges, reachable_pairs, scc, component_count }
    }

    pub fn nodes(&self) -> &[Iri] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Direct parents of a node, by name.
    pub fn parents_of(&self, node: &Iri) -> Vec<&Iri> {
        match self.nodes.binary_search(node) {
            Ok(i) => self.parents[i].iter().map(|&p| &self.nodes[p]).collect(),
            Err(_) => Vec::new(),
        }
    }

    /// NdHC: number of distinct direct child→parent links.
    pub fn direct_links(&self) -> usize {
        self.direct_edges
    }

    /// NidHC: ordered pairs (x, y), x ≠ y, with y reachable from x, minus
    /// the direct links.
    pub fn indirect_links(&self) -> usize {
        self.reachable_pairs - self.direct_edges
    }

    /// Strongly connected component id of every node, in node order.
    pub fn components(&self) -> &[usize] {
        &self.scc
    }

    /// Longest path, in edges, through the component DAG.
    pub fn max_depth(&self) -> usize {
        // Components arrive ancestors-first, so a single pass suffices.
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); self.component_count];
        for (node, &c) in self.scc.iter().enumerate() {
            members[c].push(node);
        }
        let mut height = vec![0usize; self.component_count];
        for c in 0..self.component_count {
            let mut h = 0;
            for &node in &members[c] {
                for &p in &self.parents[node] {
                    let pc = self.scc[p];
                    if pc != c {
                        h = h.max(height[pc] + 1);
                    }
                }
            }
            height[c] = h;
        }
        height.into_iter().max().unwrap_or(0)
    }

    pub fn fanout(&self) -> Fanout {
        if self.nodes.is_empty() {
            return Fanout { max_children: 0, mean_children: 0.0 };
        }
        Fanout {
            max_children: self.children.iter().map(BTreeSet::len).max().unwrap_or(0),
            mean_children: self.direct_edges as f64 / self.nodes.len() as f64,
        }
    }

    pub fn tangledness(&self) -> Tangledness {
        Tangledness {
            count: self.parents.iter().filter(|p| p.len() >= 2).count(),
            max_parents: self.parents.iter().map(BTreeSet::len).max().unwrap_or(0),
        }
    }
}

/// Iterative Tarjan over `succ`. Returns (component per node, count).
fn tarjan(succ: &[BTreeSet<usize>]) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    let succ: Vec<Vec<usize>> = succ.iter().map(|s| s.iter().copied().collect()).collect();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        // (node, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < succ[v].len() {
                let w = succ[v][*i];
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    (comp, next_comp)
}

/// Ordered pairs (x, y), x ≠ y, with a path from x to y.
fn count_reachable(succ: &[BTreeSet<usize>]) -> usize {
    let n = succ.len();
    let mut seen = vec![usize::MAX; n];
    let mut total = 0;
    let mut queue = Vec::new();
    for start in 0..n {
        seen[start] = start;
        queue.clear();
        queue.push(start);
        while let Some(v) = queue.pop() {
            for &w in &succ[v] {
                if seen[w] != start {
                    seen[w] = start;
                    total += 1;
                    queue.push(w);
                }
            }
        }
    }
    total
}

/// Named-class hierarchy from `SubClassOf(A B)` and from every pair of
/// named operands of `EquivalentClasses` (in both directions).
pub fn build_class_hierarchy(o: &Ontology) -> Hierarchy {
    let mut edges = Vec::new();
    for ax in o.axioms() {
        match ax {
            Axiom::SubClassOf { sub: ClassExpression::Class(a), sup: ClassExpression::Class(b) } => {
                edges.push((a.clone(), b.clone()))
            }
            Axiom::EquivalentClasses(ops) => {
                let named: Vec<&Iri> = ops.iter().filter_map(ClassExpression::as_class).collect();
                for (i, a) in named.iter().enumerate() {
                    for b in &named[i + 1..] {
                        edges.push(((*a).clone(), (*b).clone()));
                        edges.push(((*b).clone(), (*a).clone()));
                    }
                }
            }
            _ => {}
        }
    }
    Hierarchy::from_edges(o.signature().classes.iter().cloned(), edges)
}

/// Object-property hierarchy from `SubObjectPropertyOf(p q)` with both sides
/// named. Chains, inverses and characteristics contribute nothing.
pub fn build_property_hierarchy(o: &Ontology) -> Hierarchy {
    let edges = o.axioms().iter().filter_map(|ax| match ax {
        Axiom::SubObjectPropertyOf {
            sub: SubObjectProperty::Property(ObjectPropertyExpression::Named(p)),
            sup: ObjectPropertyExpression::Named(q),
        } => Some((p.clone(), q.clone())),
        _ => None,
    });
    Hierarchy::from_edges(o.signature().object_properties.iter().cloned(), edges.collect::<Vec<_>>())
}

/// Definition pairs (A, D): `SubClassOf(A D)` and, for `EquivalentClasses`,
/// every named operand A against every other operand D.
pub fn definitions(o: &Ontology) -> Vec<(&Iri, &ClassExpression)> {
    let mut out = Vec::new();
    for ax in o.axioms() {
        match ax {
            Axiom::SubClassOf { sub: ClassExpression::Class(a), sup } => out.push((a, sup)),
            Axiom::EquivalentClasses(ops) => {
                for (i, op) in ops.iter().enumerate() {
                    if let ClassExpression::Class(a) = op {
                        for (j, other) in ops.iter().enumerate() {
                            if i != j {
                                out.push((a, other));
                            }
                        }
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Named classes on an explicit definitional cycle: A depends on every
/// class named anywhere in a definition of A; a class is cyclic when it
/// depends on itself directly or lies in a strongly connected component
/// of two or more classes.
pub fn cyclic_classes(o: &Ontology) -> BTreeSet<Iri> {
    let classes: Vec<&Iri> = o.signature().classes.iter().collect();
    let pos = |iri: &Iri| classes.binary_search(&iri).expect("signature is closed");
    let mut deps = vec![BTreeSet::new(); classes.len()];
    let mut self_loop = vec![false; classes.len()];
    for (a, def) in definitions(o) {
        let ai = pos(a);
        def.walk(&mut |e| {
            if let ClassExpression::Class(b) = e {
                let bi = pos(b);
                if bi == ai {
                    self_loop[ai] = true;
                } else {
                    deps[ai].insert(bi);
                }
            }
        });
    }
    let (comp, count) = tarjan(&deps);
    let mut size = vec![0usize; count];
    for &c in &comp {
        size[c] += 1;
    }
    classes.iter().enumerate().filter(|&(i, _)| self_loop[i] || size[comp[i]] >= 2).map(|(_, c)| (*c).clone()).collect()
}

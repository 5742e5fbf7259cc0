//! Finite simple trees with vertices and edges as first-class elements.
//!
//! Both vertices and edges are elements of the tree; a sub-graph is any
//! subset of elements. The topology has the unions of sub-trees as its
//! closed sets, which makes "open" the concrete condition that every
//! selected vertex carries all of its incident edges. The characteristic
//! `chi(v) = 2 - val(v)`, summed over the vertices of a sub-graph, plays
//! the role of an Euler characteristic and satisfies `chi(T) = 2` on the
//! whole tree.

use crate::error::{Error, Result, Violation};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Stable integer identifier of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair of distinct vertices, canonicalized as (min, max).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert_ne!(a, b, "an edge joins two distinct vertices");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.0 == v {
            self.1
        } else {
            assert_eq!(self.1, v);
            self.0
        }
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

/// An element of a tree: either a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TreeElem {
    Vertex(VertexId),
    Edge(Edge),
}

/// A finite simple tree: connected, acyclic, `card V = card E + 1`.
///
/// Construct through [`Tree::validate`], which either returns the tree or
/// the full list of violated invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
    incident: BTreeMap<VertexId, BTreeSet<Edge>>,
}

impl Tree {
    /// Checks connectedness, acyclicity and the vertex/edge count identity.
    pub fn validate(vertices: BTreeSet<VertexId>, edges: BTreeSet<Edge>) -> Result<Tree> {
        let mut violations = Vec::new();
        if vertices.is_empty() {
            violations.push(Violation::new("degenerate input", "empty vertex set"));
            return Err(Error::Invalid(violations));
        }
        let mut incident: BTreeMap<VertexId, BTreeSet<Edge>> =
            vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for e in &edges {
            let (a, b) = e.ends();
            for v in [a, b] {
                match incident.get_mut(&v) {
                    Some(set) => {
                        set.insert(*e);
                    }
                    None => violations.push(Violation::new(
                        "unknown vertex",
                        format!("edge {e} uses undeclared vertex {v}"),
                    )),
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }

        // Sweep out components; within each, card E >= card V means a cycle.
        let root = *vertices.iter().next().unwrap();
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut component_count = 0usize;
        let mut cyclic = false;
        for &start in &vertices {
            if seen.contains(&start) {
                continue;
            }
            component_count += 1;
            let mut comp_verts = 0usize;
            let mut comp_half_edges = 0usize;
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp_verts += 1;
                for e in &incident[&v] {
                    comp_half_edges += 1;
                    let w = e.other(v);
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            if comp_half_edges / 2 >= comp_verts {
                cyclic = true;
            }
        }
        if component_count > 1 {
            violations.push(Violation::new(
                "disconnected",
                format!("{component_count} components, reachability from {root} fails"),
            ));
        }
        if cyclic {
            violations.push(Violation::new("cycle", "card E >= card V on a component"));
        }
        if !cyclic && component_count == 1 && vertices.len() != edges.len() + 1 {
            violations.push(Violation::new(
                "count identity broken",
                format!(
                    "card V = {} but card E + 1 = {}",
                    vertices.len(),
                    edges.len() + 1
                ),
            ));
        }
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        Ok(Tree {
            vertices,
            edges,
            incident,
        })
    }

    /// Convenience constructor from raw integer pairs.
    pub fn from_raw(vertices: &[u32], edges: &[(u32, u32)]) -> Result<Tree> {
        let vs: BTreeSet<_> = vertices.iter().map(|&v| VertexId(v)).collect();
        if vertices.len() != vs.len() {
            return Err(Error::invalid("duplicate vertex", "vertex listed twice"));
        }
        let mut es = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::invalid("not simple", format!("self-loop at {a}")));
            }
            if !es.insert(Edge::new(VertexId(a), VertexId(b))) {
                return Err(Error::invalid(
                    "not simple",
                    format!("duplicate edge {{{a},{b}}}"),
                ));
            }
        }
        Tree::validate(vs, es)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges at `v` (the set `E_v`).
    pub fn edges_at(&self, v: VertexId) -> &BTreeSet<Edge> {
        &self.incident[&v]
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.incident[&v].len()
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.valence(v) == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.is_leaf(v))
    }

    /// Internal vertices: everything that is not a leaf.
    pub fn internal_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| !self.is_leaf(v))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incident[&v].iter().map(move |e| e.other(v))
    }

    /// The unique alternating vertex/edge path from `v1` to `v2`,
    /// inclusive of both ends. `path_between(v, v)` is the empty path.
    pub fn path_between(&self, v1: VertexId, v2: VertexId) -> Result<Vec<TreeElem>> {
        if !self.contains_vertex(v1) || !self.contains_vertex(v2) {
            return Err(Error::domain(format!("vertex {v1} or {v2} not in tree")));
        }
        if v1 == v2 {
            return Ok(Vec::new());
        }
        // BFS with parent pointers.
        let mut parent: BTreeMap<VertexId, (VertexId, Edge)> = BTreeMap::new();
        let mut queue = VecDeque::from([v1]);
        let mut seen = BTreeSet::from([v1]);
        'outer: while let Some(v) = queue.pop_front() {
            for e in &self.incident[&v] {
                let w = e.other(v);
                if seen.insert(w) {
                    parent.insert(w, (v, *e));
                    if w == v2 {
                        break 'outer;
                    }
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![TreeElem::Vertex(v2)];
        let mut cur = v2;
        while cur != v1 {
            let (p, e) = parent[&cur];
            path.push(TreeElem::Edge(e));
            path.push(TreeElem::Vertex(p));
            cur = p;
        }
        path.reverse();
        Ok(path)
    }

    /// Vertices of the path from `v1` to `v2`, in order.
    pub fn path_vertices(&self, v1: VertexId, v2: VertexId) -> Result<Vec<VertexId>> {
        Ok(self
            .path_between(v1, v2)?
            .into_iter()
            .filter_map(|el| match el {
                TreeElem::Vertex(v) => Some(v),
                TreeElem::Edge(_) => None,
            })
            .collect())
    }

    /// First edge of the path from `v` towards `target` (an element of `E_v`).
    pub fn edge_towards(&self, v: VertexId, target: TreeElem) -> Result<Edge> {
        match target {
            TreeElem::Vertex(w) => {
                if w == v {
                    return Err(Error::domain("no direction from a vertex to itself"));
                }
                let path = self.path_between(v, w)?;
                match path.get(1) {
                    Some(TreeElem::Edge(e)) => Ok(*e),
                    _ => Err(Error::domain("malformed path")),
                }
            }
            TreeElem::Edge(e) => {
                if e.contains(v) {
                    Ok(e)
                } else {
                    let (a, _) = e.ends();
                    // Both endpoints lie in the same branch seen from v.
                    self.edge_towards(v, TreeElem::Vertex(a))
                }
            }
        }
    }

    /// The branch `B_v(at)`: connected component of `T - {v}` containing `at`.
    ///
    /// Contains exactly one edge of `E_v`.
    pub fn branch(&self, v: VertexId, at: TreeElem) -> Result<SubGraph> {
        if !self.contains_vertex(v) {
            return Err(Error::domain(format!("vertex {v} not in tree")));
        }
        if at == TreeElem::Vertex(v) {
            return Err(Error::domain("branch base point must differ from the vertex"));
        }
        match at {
            TreeElem::Vertex(w) if !self.contains_vertex(w) => {
                return Err(Error::domain(format!("element {w} not in tree")))
            }
            TreeElem::Edge(e) if !self.contains_edge(e) => {
                return Err(Error::domain(format!("edge {e} not in tree")))
            }
            _ => {}
        }
        let e0 = self.edge_towards(v, at)?;
        let start = e0.other(v);
        let mut verts = BTreeSet::from([start]);
        let mut edges = BTreeSet::from([e0]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for e in &self.incident[&u] {
                let w = e.other(u);
                if w == v {
                    continue;
                }
                edges.insert(*e);
                if verts.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        Ok(SubGraph { verts, edges })
    }

    /// All branches on `v`, keyed by the edge of `E_v` they contain.
    pub fn branches(&self, v: VertexId) -> BTreeMap<Edge, SubGraph> {
        self.edges_at(v)
            .iter()
            .map(|&e| (e, self.branch(v, TreeElem::Edge(e)).expect("edge at v")))
            .collect()
    }

    /// `chi_T(v) = 2 - val(v)`.
    pub fn chi_vertex(&self, v: VertexId) -> i64 {
        2 - self.valence(v) as i64
    }

    /// Characteristic of a sub-graph: sum of `chi_T` over its vertices.
    /// Valence is always measured in the ambient tree.
    pub fn chi(&self, s: &SubGraph) -> i64 {
        s.verts.iter().map(|&v| self.chi_vertex(v)).sum()
    }

    /// The whole tree as a sub-graph.
    pub fn full_subgraph(&self) -> SubGraph {
        SubGraph {
            verts: self.vertices.clone(),
            edges: self.edges.clone(),
        }
    }

    /// `T - X`: the open sub-graph of all internal structure, leaves removed.
    pub fn leafless_subgraph(&self) -> SubGraph {
        let verts: BTreeSet<_> = self.vertices().filter(|&v| !self.is_leaf(v)).collect();
        let edges = self.edges.clone();
        // Leaf edges stay: they are incident to the internal endpoint.
        SubGraph { verts, edges }
    }

    /// Closure and boundary of an open connected sub-graph.
    ///
    /// The closure is a sub-tree; the boundary is exactly the set of
    /// leaves the closure adds, and the closure's internal vertices are
    /// the internal vertices of `S`.
    pub fn closure_and_boundary(&self, s: &SubGraph) -> Result<(SubGraph, BTreeSet<VertexId>)> {
        if !s.is_open(self) {
            return Err(Error::invalid(
                "not open",
                "a selected vertex is missing an incident edge",
            ));
        }
        if !s.is_connected(self) {
            return Err(Error::invalid("not connected", "sub-graph is not connected"));
        }
        let mut closure = s.clone();
        let mut boundary = BTreeSet::new();
        for e in &s.edges {
            let (a, b) = e.ends();
            for v in [a, b] {
                if !s.verts.contains(&v) {
                    boundary.insert(v);
                    closure.verts.insert(v);
                }
            }
        }
        Ok((closure, boundary))
    }

    /// All open connected non-empty sub-graphs. Exponential; intended for
    /// exhaustive property checks on small trees.
    pub fn open_connected_subgraphs(&self) -> Vec<SubGraph> {
        let verts: Vec<VertexId> = self.vertices().collect();
        let mut out = Vec::new();
        // A single edge with neither endpoint is open and connected.
        for e in self.edges() {
            out.push(SubGraph {
                verts: BTreeSet::new(),
                edges: BTreeSet::from([e]),
            });
        }
        // Otherwise the sub-graph is a connected vertex set together with
        // every incident edge.
        let n = verts.len();
        assert!(n <= 20, "exhaustive enumeration is for small trees");
        for mask in 1u32..(1 << n) {
            let vs: BTreeSet<VertexId> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| verts[i])
                .collect();
            let sg = self.open_hull(&vs);
            if sg.is_connected(self) {
                out.push(sg);
            }
        }
        out
    }

    /// The smallest open sub-graph containing the given vertices.
    pub fn open_hull(&self, vs: &BTreeSet<VertexId>) -> SubGraph {
        let mut edges = BTreeSet::new();
        for &v in vs {
            edges.extend(self.incident[&v].iter().copied());
        }
        SubGraph {
            verts: vs.clone(),
            edges,
        }
    }

    /// The vertex separating `v1`, `v2`, `v3` (all in distinct components
    /// of `T - {v}`), or `None` when the three lie on a common path.
    pub fn separating_vertex(
        &self,
        v1: VertexId,
        v2: VertexId,
        v3: VertexId,
    ) -> Result<Option<VertexId>> {
        if v1 == v2 || v1 == v3 || v2 == v3 {
            return Err(Error::domain("separation needs three distinct vertices"));
        }
        for v in [v1, v2, v3] {
            if !self.contains_vertex(v) {
                return Err(Error::domain(format!("vertex {v} not in tree")));
            }
        }
        // The median: unique common vertex of the three pairwise paths.
        let p12: BTreeSet<_> = self.path_vertices(v1, v2)?.into_iter().collect();
        let p13: BTreeSet<_> = self.path_vertices(v1, v3)?.into_iter().collect();
        let p23: BTreeSet<_> = self.path_vertices(v2, v3)?.into_iter().collect();
        let m: Vec<_> = p12
            .intersection(&p13)
            .copied()
            .collect::<BTreeSet<_>>()
            .intersection(&p23)
            .copied()
            .collect();
        assert_eq!(m.len(), 1, "three vertices of a tree have a unique median");
        let m = m[0];
        if m == v1 || m == v2 || m == v3 {
            Ok(None) // aligned
        } else {
            Ok(Some(m))
        }
    }

    /// Whether `v` separates the three given vertices.
    pub fn separates(&self, v: VertexId, v1: VertexId, v2: VertexId, v3: VertexId) -> Result<bool> {
        Ok(self.separating_vertex(v1, v2, v3)? == Some(v))
    }
}

/// A subset of the elements of a tree. Selected edges need not have their
/// endpoints selected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubGraph {
    pub verts: BTreeSet<VertexId>,
    pub edges: BTreeSet<Edge>,
}

impl SubGraph {
    pub fn empty() -> Self {
        SubGraph {
            verts: BTreeSet::new(),
            edges: BTreeSet::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty() && self.edges.is_empty()
    }

    pub fn contains(&self, el: TreeElem) -> bool {
        match el {
            TreeElem::Vertex(v) => self.verts.contains(&v),
            TreeElem::Edge(e) => self.edges.contains(&e),
        }
    }

    /// Every element belongs to the owner tree.
    pub fn belongs_to(&self, tree: &Tree) -> bool {
        self.verts.iter().all(|&v| tree.contains_vertex(v))
            && self.edges.iter().all(|&e| tree.contains_edge(e))
    }

    /// Open in the tree topology: every selected vertex has all its
    /// incident edges selected.
    pub fn is_open(&self, tree: &Tree) -> bool {
        self.verts
            .iter()
            .all(|&v| tree.edges_at(v).iter().all(|e| self.edges.contains(e)))
    }

    /// Connected via alternating vertex/edge paths inside the sub-graph.
    pub fn is_connected(&self, tree: &Tree) -> bool {
        let _ = tree;
        if self.is_empty() {
            return true;
        }
        // Walk elements: an edge touches its selected endpoints, a vertex
        // touches its selected edges.
        let start: TreeElem = match self.verts.iter().next() {
            Some(&v) => TreeElem::Vertex(v),
            None => TreeElem::Edge(*self.edges.iter().next().unwrap()),
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(el) = queue.pop_front() {
            let mut push = |next: TreeElem, seen: &mut BTreeSet<TreeElem>, queue: &mut VecDeque<TreeElem>| {
                if self.contains(next) && seen.insert(next) {
                    queue.push_back(next);
                }
            };
            match el {
                TreeElem::Vertex(v) => {
                    for e in self.edges.iter().filter(|e| e.contains(v)) {
                        push(TreeElem::Edge(*e), &mut seen, &mut queue);
                    }
                }
                TreeElem::Edge(e) => {
                    let (a, b) = e.ends();
                    push(TreeElem::Vertex(a), &mut seen, &mut queue);
                    push(TreeElem::Vertex(b), &mut seen, &mut queue);
                }
            }
        }
        seen.len() == self.verts.len() + self.edges.len()
    }

    /// Connected components, each again a sub-graph.
    pub fn components(&self, tree: &Tree) -> Vec<SubGraph> {
        let _ = tree;
        let mut remaining: BTreeSet<TreeElem> = self
            .verts
            .iter()
            .map(|&v| TreeElem::Vertex(v))
            .chain(self.edges.iter().map(|&e| TreeElem::Edge(e)))
            .collect();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = SubGraph::empty();
            let mut queue = VecDeque::from([start]);
            remaining.remove(&start);
            insert_elem(&mut comp, start);
            while let Some(el) = queue.pop_front() {
                let nexts: Vec<TreeElem> = match el {
                    TreeElem::Vertex(v) => self
                        .edges
                        .iter()
                        .filter(|e| e.contains(v))
                        .map(|&e| TreeElem::Edge(e))
                        .collect(),
                    TreeElem::Edge(e) => {
                        let (a, b) = e.ends();
                        [TreeElem::Vertex(a), TreeElem::Vertex(b)]
                            .into_iter()
                            .filter(|el| self.contains(*el))
                            .collect()
                    }
                };
                for next in nexts {
                    if remaining.remove(&next) {
                        insert_elem(&mut comp, next);
                        queue.push_back(next);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

fn insert_elem(sg: &mut SubGraph, el: TreeElem) {
    match el {
        TreeElem::Vertex(v) => {
            sg.verts.insert(v);
        }
        TreeElem::Edge(e) => {
            sg.edges.insert(e);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Tree {
        // a(0) - b(1) - c(2)
        Tree::from_raw(&[0, 1, 2], &[(0, 1), (1, 2)]).unwrap()
    }

    fn star() -> Tree {
        // center 0, leaves 1..=4
        Tree::from_raw(&[0, 1, 2, 3, 4], &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap()
    }

    #[test]
    fn validates_path_tree() {
        let t = path3();
        let leaves: Vec<_> = t.leaves().collect();
        assert_eq!(leaves, vec![VertexId(0), VertexId(2)]);
        let internal: Vec<_> = t.internal_vertices().collect();
        assert_eq!(internal, vec![VertexId(1)]);
    }

    #[test]
    fn rejects_triangle() {
        let err = Tree::from_raw(&[0, 1, 2], &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        match err {
            Error::Invalid(vs) => assert!(vs.iter().any(|v| v.kind == "cycle"), "{vs:?}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicate_edge_and_empty() {
        assert!(matches!(
            Tree::from_raw(&[0, 1], &[(0, 1), (1, 0)]),
            Err(Error::Invalid(_))
        ));
        assert!(Tree::from_raw(&[], &[]).is_err());
    }

    #[test]
    fn star_count_identity() {
        let t = star();
        assert_eq!(t.vertex_count(), 5);
        assert_eq!(t.edge_count(), 4);
        assert_eq!(t.chi(&t.full_subgraph()), 2);
    }

    #[test]
    fn path_between_small() {
        let t = path3();
        let p = t.path_between(VertexId(0), VertexId(2)).unwrap();
        assert_eq!(
            p,
            vec![
                TreeElem::Vertex(VertexId(0)),
                TreeElem::Edge(Edge::new(VertexId(0), VertexId(1))),
                TreeElem::Vertex(VertexId(1)),
                TreeElem::Edge(Edge::new(VertexId(1), VertexId(2))),
                TreeElem::Vertex(VertexId(2)),
            ]
        );
        assert!(t.path_between(VertexId(1), VertexId(1)).unwrap().is_empty());

        let s = star();
        let p = s.path_between(VertexId(1), VertexId(2)).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p[2], TreeElem::Vertex(VertexId(0)));
    }

    #[test]
    fn branch_examples() {
        let s = star();
        let b = s.branch(VertexId(0), TreeElem::Vertex(VertexId(1))).unwrap();
        assert_eq!(b.verts, BTreeSet::from([VertexId(1)]));
        assert_eq!(b.edges, BTreeSet::from([Edge::new(VertexId(0), VertexId(1))]));

        let t = path3();
        let b = t.branch(VertexId(1), TreeElem::Vertex(VertexId(0))).unwrap();
        assert_eq!(b.verts, BTreeSet::from([VertexId(0)]));
        assert!(t.branch(VertexId(1), TreeElem::Vertex(VertexId(1))).is_err());
    }

    #[test]
    fn branches_partition_complement() {
        for t in [path3(), star()] {
            for v in t.vertices().collect::<Vec<_>>() {
                let mut all_verts = BTreeSet::new();
                let mut all_edges = BTreeSet::new();
                let mut total = 0usize;
                for (_, b) in t.branches(v) {
                    assert!(b.is_open(&t));
                    assert!(b.is_connected(&t));
                    assert_eq!(t.chi(&b), 1, "a branch has characteristic 1");
                    total += b.verts.len() + b.edges.len();
                    all_verts.extend(b.verts);
                    all_edges.extend(b.edges);
                }
                // branches are pairwise disjoint and union to T - {v}
                assert_eq!(total, all_verts.len() + all_edges.len());
                assert_eq!(all_verts.len(), t.vertex_count() - 1);
                assert_eq!(all_edges.len(), t.edge_count());
            }
        }
    }

    #[test]
    fn characteristic_boundary_identity() {
        for t in [path3(), star()] {
            for s in t.open_connected_subgraphs() {
                let (closure, boundary) = t.closure_and_boundary(&s).unwrap();
                assert_eq!(t.chi(&s), 2 - boundary.len() as i64);
                // closure leaves = boundary plus existing leaves of S
                for b in &boundary {
                    assert!(closure.verts.contains(b));
                    assert!(!s.verts.contains(b));
                }
                // Lemma 2.9 trichotomy direction chi = 2 <=> whole tree
                if t.chi(&s) == 2 {
                    assert_eq!(s, t.full_subgraph());
                }
            }
        }
    }

    #[test]
    fn whole_tree_boundary_empty() {
        let t = star();
        let (closure, boundary) = t.closure_and_boundary(&t.full_subgraph()).unwrap();
        assert!(boundary.is_empty());
        assert_eq!(closure, t.full_subgraph());
    }

    #[test]
    fn closure_rejects_non_open() {
        let t = path3();
        let s = SubGraph {
            verts: BTreeSet::from([VertexId(1)]),
            edges: BTreeSet::new(),
        };
        assert!(t.closure_and_boundary(&s).is_err());
    }

    #[test]
    fn separation() {
        let s = star();
        assert_eq!(
            s.separating_vertex(VertexId(1), VertexId(2), VertexId(3)).unwrap(),
            Some(VertexId(0))
        );
        let t = path3();
        assert_eq!(
            t.separating_vertex(VertexId(0), VertexId(1), VertexId(2)).unwrap(),
            None
        );
        assert!(t.separating_vertex(VertexId(0), VertexId(0), VertexId(2)).is_err());
    }
}

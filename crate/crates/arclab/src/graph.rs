//! Plain undirected graphs, bipartite coset graphs Cos(G, L, R), standard
//! double covers, and quotient graphs.
//!
//! Both vertex classes of a coset graph use right cosets with the right
//! multiplication action.  Vertices {Lx, Ry} are adjacent exactly when
//! Lx ∩ Ry is nonempty, equivalently x·y⁻¹ ∈ LR; edges are generated as
//! the G-orbit of the seed edge {L·1, R·1}, which makes edge-transitivity
//! hold by construction.

use crate::coset::{coset_action_bounded, CosetAction, DEFAULT_MAX_INDEX};
use crate::error::{Error, Result};
use crate::group::{PermGroup, ENUM_THRESHOLD};
use crate::perm::Perm;
use num_bigint::BigUint;
use std::collections::{HashSet, VecDeque};

/// A simple undirected graph: no loops, no repeated edges.
#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn from_edges(n: usize, raw_edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for &(a, b) in raw_edges {
            if a >= n || b >= n {
                return Err(Error::PointOutOfRange(a.max(b), n));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if seen.insert(e) {
                adjacency[a].push(b);
                adjacency[b].push(a);
                edges.push(e);
            }
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_unstable();
        }
        edges.sort_unstable();
        Ok(Graph { adjacency, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut colour = vec![u8::MAX; n];
        for start in 0..n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbours(v) {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    /// The standard double cover on V × {1,2}: (α,i) ∼ (β,j) iff i ≠ j
    /// and α ∼ β.  Always bipartite; connected iff the input is connected
    /// and not bipartite.
    pub fn double_cover(&self) -> Graph {
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(2 * self.edge_count());
        for &(a, b) in &self.edges {
            edges.push((a, n + b));
            edges.push((b, n + a));
        }
        Graph::from_edges(2 * n, &edges).expect("cover of a simple graph is simple")
    }

    /// The quotient by a vertex partition: parts are adjacent iff some
    /// cross edge exists; internal edges are dropped.
    pub fn quotient(&self, partition: &[Vec<usize>]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut part_of = vec![usize::MAX; n];
        for (i, part) in partition.iter().enumerate() {
            for &v in part {
                if v >= n || part_of[v] != usize::MAX {
                    return Err(Error::InvalidArgument(
                        "partition must cover each vertex exactly once".into(),
                    ));
                }
                part_of[v] = i;
            }
        }
        if part_of.contains(&usize::MAX) {
            return Err(Error::InvalidArgument(
                "partition must cover each vertex exactly once".into(),
            ));
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| part_of[a] != part_of[b])
            .map(|&(a, b)| (part_of[a], part_of[b]))
            .collect();
        Graph::from_edges(partition.len(), &edges)
    }
}

/// The bipartite coset graph Cos(G, L, R) with its two coset actions and
/// the amalgam (L, R, L∩R).  Left cosets occupy vertices 0..|G:L|, right
/// cosets the remaining |G:R|.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub left: CosetAction,
    pub right: CosetAction,
    pub common: PermGroup,
    pub graph: Graph,
    /// Edges as (left coset index, right coset index) pairs.
    pub coset_edges: Vec<(usize, usize)>,
}

impl CosetGraph {
    pub fn group(&self) -> &PermGroup {
        &self.left.parent
    }

    pub fn left_count(&self) -> usize {
        self.left.index()
    }

    pub fn right_count(&self) -> usize {
        self.right.index()
    }

    /// Graph vertex index of right coset j.
    pub fn right_vertex(&self, j: usize) -> usize {
        self.left_count() + j
    }

    pub fn left_valency(&self) -> usize {
        self.graph.valency(0)
    }

    pub fn right_valency(&self) -> usize {
        self.graph.valency(self.right_vertex(0))
    }

    /// The permutation of all vertices induced by g ∈ G.
    pub fn vertex_permutation(&self, g: &Perm) -> Result<Perm> {
        let pl = self.left.permutation_of(g)?;
        let pr = self.right.permutation_of(g)?;
        let nl = self.left_count();
        let images: Vec<u32> = (0..nl)
            .map(|i| pl.apply(i) as u32)
            .chain((0..self.right_count()).map(|j| (nl + pr.apply(j)) as u32))
            .collect();
        Perm::from_images(images)
    }

    /// Connectivity, cross-checked against the generation criterion
    /// ⟨L, R⟩ = G; a mismatch between the two is reported as an error.
    pub fn is_connected(&self) -> Result<bool> {
        let bfs = self.graph.is_connected();
        let join = self.left.subgroup.join(&self.right.subgroup)?;
        let generates = join.order() == self.group().order();
        if bfs != generates {
            return Err(Error::InvalidArgument(
                "connectivity and generation criteria disagree".into(),
            ));
        }
        Ok(bfs)
    }

    /// DOT rendering with the two coset classes as two ranks.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph cos {\n");
        out.push_str("  { rank=same; ");
        for i in 0..self.left_count() {
            out.push_str(&format!("L{i}; "));
        }
        out.push_str("}\n  { rank=same; ");
        for j in 0..self.right_count() {
            out.push_str(&format!("R{j}; "));
        }
        out.push_str("}\n");
        for &(i, j) in &self.coset_edges {
            out.push_str(&format!("  L{i} -- R{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Build Cos(G, L, R) for proper subgroups L and R.
pub fn build_coset_graph(g: &PermGroup, l: &PermGroup, r: &PermGroup) -> Result<CosetGraph> {
    build_coset_graph_bounded(g, l, r, DEFAULT_MAX_INDEX)
}

pub fn build_coset_graph_bounded(
    g: &PermGroup,
    l: &PermGroup,
    r: &PermGroup,
    max_index: usize,
) -> Result<CosetGraph> {
    if l.order() == g.order() || r.order() == g.order() {
        return Err(Error::InvalidArgument(
            "both subgroups must be proper".into(),
        ));
    }
    let left = coset_action_bounded(g, l, max_index)?;
    let right = coset_action_bounded(g, r, max_index)?;
    let common = l.intersect_small(r, ENUM_THRESHOLD)?;
    let expected_edges = g.order() / common.order();
    if expected_edges > BigUint::from(max_index) {
        return Err(Error::ThresholdExceeded(format!(
            "edge count {expected_edges} exceeds the limit {max_index}"
        )));
    }

    // Edge orbit of the seed {L·1, R·1} under the generator pairs.
    let mut seen = HashSet::from([(0usize, 0usize)]);
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    let mut coset_edges = Vec::new();
    while let Some((a, b)) = queue.pop_front() {
        coset_edges.push((a, b));
        for (pl, pr) in left.gen_images.iter().zip(&right.gen_images) {
            let next = (pl.apply(a), pr.apply(b));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    if BigUint::from(coset_edges.len()) != expected_edges {
        return Err(Error::InvalidArgument(format!(
            "edge orbit has size {}, index of the intersection is {expected_edges}",
            coset_edges.len()
        )));
    }
    coset_edges.sort_unstable();

    let nl = left.index();
    let raw: Vec<(usize, usize)> = coset_edges.iter().map(|&(a, b)| (a, nl + b)).collect();
    let graph = Graph::from_edges(nl + right.index(), &raw)?;

    // Valency invariants |L : L∩R| and |R : L∩R| at every vertex.
    let lv: usize = (l.order() / common.order())
        .try_into()
        .map_err(|_| Error::ThresholdExceeded("valency exceeds usize".into()))?;
    let rv: usize = (r.order() / common.order())
        .try_into()
        .map_err(|_| Error::ThresholdExceeded("valency exceeds usize".into()))?;
    for v in 0..nl {
        if graph.valency(v) != lv {
            return Err(Error::InvalidArgument(format!(
                "left vertex {v} has valency {}, expected {lv}",
                graph.valency(v)
            )));
        }
    }
    for v in nl..graph.vertex_count() {
        if graph.valency(v) != rv {
            return Err(Error::InvalidArgument(format!(
                "right vertex {v} has valency {}, expected {rv}",
                graph.valency(v)
            )));
        }
    }
    Ok(CosetGraph {
        left,
        right,
        common,
        graph,
        coset_edges,
    })
}

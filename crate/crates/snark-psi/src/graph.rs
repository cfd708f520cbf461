//! Undirected simple graphs with stable vertex and edge identities, plus the
//! two edge-removal surgeries every other module builds on.

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Vertices are dense integers `0..n`.
pub type VertexId = u32;

/// Edges are dense integers `0..m`, numbered in construction order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An edge identity together with its (unordered, stored low-high) endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeRef {
    pub id: EdgeId,
    pub endpoints: (VertexId, VertexId),
}

/// How many vertices have each valence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValenceProfile {
    pub counts: BTreeMap<usize, usize>,
}

impl ValenceProfile {
    pub fn count(&self, valence: usize) -> usize {
        self.counts.get(&valence).copied().unwrap_or(0)
    }
}

/// Two adjacent edges `(v1,v2)`, `(v2,v3)` with `v1 != v3`, reported once up
/// to reversal (`v1 < v3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hinge {
    pub vertices: (VertexId, VertexId, VertexId),
    pub edges: (EdgeId, EdgeId),
}

/// An immutable simple graph. All surgeries return new graphs together with
/// relabeling maps so callers can follow specific edges across them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: u32,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

/// Result of deleting one edge while keeping its endpoints.
#[derive(Debug, Clone)]
pub struct Elimination {
    pub graph: Graph,
    /// Old edge id -> new edge id (`None` for the deleted edge).
    pub edge_map: Vec<Option<EdgeId>>,
}

/// Result of subtracting an edge from a cubic graph: the two endpoints are
/// smoothed away and their remaining neighbor pairs joined by `d1` and `d2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtraction {
    pub graph: Graph,
    pub d1: EdgeRef,
    pub d2: EdgeRef,
    /// Old vertex id -> new vertex id (`None` for the two deleted vertices).
    pub vertex_map: Vec<Option<VertexId>>,
    /// Old edge id -> new edge id (`None` for the five deleted edges).
    pub edge_map: Vec<Option<EdgeId>>,
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from `n` vertices and a list of unordered endpoint
    /// pairs. Edges are numbered in input order.
    pub fn build(n: u32, pairs: &[(VertexId, VertexId)]) -> Result<Graph> {
        let mut adjacency: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n as usize];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, count: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, count: n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let (a, b) = ordered(u, v);
            if adjacency[a as usize].iter().any(|&(w, _)| w == b) {
                return Err(Error::DuplicateEdge(a, b));
            }
            let id = EdgeId(edges.len() as u32);
            edges.push((a, b));
            adjacency[a as usize].push((b, id));
            adjacency[b as usize].push((a, id));
        }
        Ok(Graph {
            vertex_count: n,
            edges,
            adjacency,
        })
    }

    /// The canonical Petersen graph: outer 5-cycle 0..4, inner pentagram
    /// 5..9, spokes `(i, 5+i)`.
    pub fn petersen() -> Graph {
        let mut pairs = Vec::with_capacity(15);
        for i in 0..5u32 {
            pairs.push((i, (i + 1) % 5));
        }
        for i in 0..5u32 {
            pairs.push((5 + i, 5 + (i + 2) % 5));
        }
        for i in 0..5u32 {
            pairs.push((i, 5 + i));
        }
        Graph::build(10, &pairs).expect("canonical construction")
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> Result<EdgeRef> {
        self.edges
            .get(id.index())
            .map(|&endpoints| EdgeRef { id, endpoints })
            .ok_or(Error::UnknownEdge(id.0))
    }

    /// Looks an edge up by its endpoints, in either order.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Result<EdgeRef> {
        let (a, b) = ordered(u, v);
        self.adjacency
            .get(a as usize)
            .and_then(|adj| adj.iter().find(|&&(w, _)| w == b))
            .map(|&(_, id)| EdgeRef {
                id,
                endpoints: (a, b),
            })
            .ok_or(Error::NoSuchEdge(u, v))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edges.iter().enumerate().map(|(i, &endpoints)| EdgeRef {
            id: EdgeId(i as u32),
            endpoints,
        })
    }

    pub fn endpoints(&self, id: EdgeId) -> (VertexId, VertexId) {
        self.edges[id.index()]
    }

    /// Neighbors of `v` as `(vertex, connecting edge)` pairs, in edge
    /// insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_ok()
    }

    /// Verifies that `ref_` names a live edge of this graph with matching
    /// endpoints.
    pub fn check_edge(&self, ref_: EdgeRef) -> Result<()> {
        let found = self.edge(ref_.id)?;
        if found.endpoints != ordered(ref_.endpoints.0, ref_.endpoints.1) {
            return Err(Error::UnknownEdge(ref_.id.0));
        }
        Ok(())
    }

    pub fn valence_profile(&self) -> ValenceProfile {
        let mut counts = BTreeMap::new();
        for adj in &self.adjacency {
            *counts.entry(adj.len()).or_insert(0) += 1;
        }
        ValenceProfile { counts }
    }

    pub fn is_cubic(&self) -> bool {
        self.adjacency.iter().all(|adj| adj.len() == 3)
    }

    /// Every vertex has valence 1 or 3 and at least one is trivalent.
    pub fn is_quasi_cubic(&self) -> bool {
        self.adjacency.iter().all(|adj| adj.len() == 1 || adj.len() == 3)
            && self.adjacency.iter().any(|adj| adj.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let reach = self.reachable_from(0, &[]);
        reach.iter().filter(|&&r| r).count() == self.vertex_count as usize
    }

    fn reachable_from(&self, start: VertexId, removed_edges: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count as usize];
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(v) = stack.pop() {
            for &(w, e) in &self.adjacency[v as usize] {
                if removed_edges.get(e.index()).copied().unwrap_or(false) {
                    continue;
                }
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Removes edge `e`, keeping both endpoints. Surviving edges keep their
    /// relative order.
    pub fn eliminate_edge(&self, e: EdgeRef) -> Result<Elimination> {
        self.check_edge(e)?;
        let mut edge_map = vec![None; self.edges.len()];
        let mut pairs = Vec::with_capacity(self.edges.len() - 1);
        for (i, &pair) in self.edges.iter().enumerate() {
            if i == e.id.index() {
                continue;
            }
            edge_map[i] = Some(EdgeId(pairs.len() as u32));
            pairs.push(pair);
        }
        let graph = Graph::build(self.vertex_count, &pairs)?;
        Ok(Elimination { graph, edge_map })
    }

    /// Subtracts edge `e = (u,v)` from a cubic graph: both endpoints are
    /// deleted and their remaining neighbor pairs joined by the new edges
    /// `d1` (from `u`'s side) and `d2` (from `v`'s side). Surviving edges
    /// keep relative order; `d1` and `d2` are appended last with `d1 < d2`.
    pub fn subtract_edge(&self, e: EdgeRef) -> Result<Subtraction> {
        self.check_edge(e)?;
        if !self.is_cubic() {
            return Err(Error::NotCubic);
        }
        let (u, v) = self.edges[e.id.index()];
        let others = |vertex: VertexId, not: VertexId| -> (VertexId, VertexId) {
            let mut it = self
                .adjacency[vertex as usize]
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| w != not);
            let a = it.next().expect("cubic vertex");
            let b = it.next().expect("cubic vertex");
            ordered(a, b)
        };
        let (u1, u2) = others(u, v);
        let (v1, v2) = others(v, u);
        if u1 == u2 || v1 == v2 {
            return Err(Error::WouldCreateLoop);
        }
        if self.has_edge(u1, u2) || self.has_edge(v1, v2) || (u1, u2) == (v1, v2) {
            return Err(Error::WouldCreateParallelEdge);
        }

        let mut vertex_map = vec![None; self.vertex_count as usize];
        let mut next = 0u32;
        for w in 0..self.vertex_count {
            if w != u && w != v {
                vertex_map[w as usize] = Some(next);
                next += 1;
            }
        }
        let relabel = |w: VertexId| vertex_map[w as usize].expect("surviving vertex");

        let mut edge_map = vec![None; self.edges.len()];
        let mut pairs = Vec::with_capacity(self.edges.len() - 3);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == u || a == v || b == u || b == v {
                continue;
            }
            edge_map[i] = Some(EdgeId(pairs.len() as u32));
            pairs.push((relabel(a), relabel(b)));
        }
        let d1_id = EdgeId(pairs.len() as u32);
        pairs.push((relabel(u1), relabel(u2)));
        let d2_id = EdgeId(pairs.len() as u32);
        pairs.push((relabel(v1), relabel(v2)));

        let graph = Graph::build(self.vertex_count - 2, &pairs)?;
        let d1 = graph.edge(d1_id)?;
        let d2 = graph.edge(d2_id)?;
        Ok(Subtraction {
            graph,
            d1,
            d2,
            vertex_map,
            edge_map,
        })
    }

    /// Length of the shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Result<usize> {
        let mut best = usize::MAX;
        let n = self.vertex_count as usize;
        let mut dist = vec![usize::MAX; n];
        let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
        for root in 0..self.vertex_count {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent_edge.iter_mut().for_each(|p| *p = None);
            dist[root as usize] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                // Cycles through `root` longer than the best known cannot
                // improve it.
                if dist[x as usize] * 2 >= best {
                    continue;
                }
                for &(y, e) in &self.adjacency[x as usize] {
                    if parent_edge[x as usize] == Some(e) {
                        continue;
                    }
                    if dist[y as usize] == usize::MAX {
                        dist[y as usize] = dist[x as usize] + 1;
                        parent_edge[y as usize] = Some(e);
                        queue.push_back(y);
                    } else {
                        best = best.min(dist[x as usize] + dist[y as usize] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Err(Error::Acyclic)
        } else {
            Ok(best)
        }
    }

    /// All simple cycles of length at most `max_len`, each reported once up
    /// to rotation and reflection. A cycle is listed starting from its
    /// smallest vertex, with the smaller of its two neighbors second.
    pub fn find_cycles(&self, max_len: usize) -> Vec<Vec<VertexId>> {
        let mut cycles = Vec::new();
        let mut path: Vec<VertexId> = Vec::new();
        let mut on_path = vec![false; self.vertex_count as usize];
        for start in 0..self.vertex_count {
            path.push(start);
            on_path[start as usize] = true;
            self.extend_cycle(start, max_len, &mut path, &mut on_path, &mut cycles);
            on_path[start as usize] = false;
            path.pop();
        }
        cycles
    }

    fn extend_cycle(
        &self,
        start: VertexId,
        max_len: usize,
        path: &mut Vec<VertexId>,
        on_path: &mut Vec<bool>,
        cycles: &mut Vec<Vec<VertexId>>,
    ) {
        let last = *path.last().unwrap();
        for &(next, _) in &self.adjacency[last as usize] {
            if next == start && path.len() >= 3 {
                // Count each cycle once: started at its minimum vertex,
                // oriented toward the smaller neighbor.
                if path[1] < last {
                    cycles.push(path.clone());
                }
                continue;
            }
            if next <= start || on_path[next as usize] || path.len() >= max_len {
                continue;
            }
            path.push(next);
            on_path[next as usize] = true;
            self.extend_cycle(start, max_len, path, on_path, cycles);
            on_path[next as usize] = false;
            path.pop();
        }
    }

    /// Every path of two edges, once up to reversal.
    pub fn hinges(&self) -> Vec<Hinge> {
        let mut out = Vec::new();
        for mid in 0..self.vertex_count {
            let adj = &self.adjacency[mid as usize];
            for i in 0..adj.len() {
                for j in (i + 1)..adj.len() {
                    let (a, ea) = adj[i];
                    let (b, eb) = adj[j];
                    let ((v1, e1), (v3, e3)) = if a < b { ((a, ea), (b, eb)) } else { ((b, eb), (a, ea)) };
                    out.push(Hinge {
                        vertices: (v1, mid, v3),
                        edges: (e1, e3),
                    });
                }
            }
        }
        out
    }

    /// Connected components of the graph with `removed_edges` deleted.
    /// Vertices are retained even if isolated. Components are listed by
    /// smallest member, vertices ascending.
    pub fn components(&self, removed_edges: &[EdgeId]) -> Vec<Vec<VertexId>> {
        let mut removed = vec![false; self.edges.len()];
        for e in removed_edges {
            if e.index() < removed.len() {
                removed[e.index()] = true;
            }
        }
        let mut seen = vec![false; self.vertex_count as usize];
        let mut out = Vec::new();
        for v in 0..self.vertex_count {
            if seen[v as usize] {
                continue;
            }
            let reach = self.reachable_from(v, &removed);
            let mut comp = Vec::new();
            for w in 0..self.vertex_count {
                if reach[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    comp.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Stable content digest of the labeled graph, for traces and caches.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.vertex_count.to_le_bytes());
        for &(u, v) in &self.edges {
            hasher.update(u.to_le_bytes());
            hasher.update(v.to_le_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn build_single_edge() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_k4_profile() {
        let g = k4();
        assert_eq!(g.valence_profile().count(3), 4);
        assert!(g.is_cubic());
    }

    #[test]
    fn build_rejects_loop() {
        assert_eq!(Graph::build(4, &[(0, 0)]), Err(Error::LoopEdge(0)));
    }

    #[test]
    fn build_rejects_duplicate() {
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, count: 2 })
        );
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_cubic());
        assert!(p.is_connected());
    }

    #[test]
    fn eliminate_k4_edge() {
        let g = k4();
        let e = g.edge_between(0, 1).unwrap();
        let out = g.eliminate_edge(e).unwrap();
        assert_eq!(out.graph.vertex_count(), 4);
        assert_eq!(out.graph.edge_count(), 5);
        let profile = out.graph.valence_profile();
        assert_eq!(profile.count(2), 2);
        assert_eq!(profile.count(3), 2);
    }

    #[test]
    fn eliminate_twice_nonadjacent() {
        let p = Graph::petersen();
        let first = p.eliminate_edge(p.edge_between(0, 1).unwrap()).unwrap();
        assert_eq!(first.graph.edge_count(), 14);
        assert_eq!(first.graph.valence_profile().count(2), 2);
        let far = first.graph.edge_between(2, 3).unwrap();
        let second = first.graph.eliminate_edge(far).unwrap();
        assert_eq!(second.graph.valence_profile().count(2), 4);
    }

    #[test]
    fn eliminate_unknown_edge() {
        let g = k4();
        let bogus = EdgeRef {
            id: EdgeId(17),
            endpoints: (0, 1),
        };
        assert!(matches!(g.eliminate_edge(bogus), Err(Error::UnknownEdge(17))));
    }

    #[test]
    fn subtract_petersen_edge() {
        let p = Graph::petersen();
        for e in p.edges() {
            let out = p.subtract_edge(e).unwrap();
            assert_eq!(out.graph.vertex_count(), 8);
            assert_eq!(out.graph.edge_count(), 12);
            assert!(out.graph.is_cubic());
            assert!(out.graph.is_connected());
            assert!(out.d1.id < out.d2.id);
        }
    }

    #[test]
    fn subtract_k4_parallel_error() {
        let g = k4();
        let e = g.edge_between(1, 2).unwrap();
        assert_eq!(g.subtract_edge(e), Err(Error::WouldCreateParallelEdge));
    }

    #[test]
    fn subtract_preserves_other_edges() {
        let p = Graph::petersen();
        let e = p.edge_between(0, 1).unwrap();
        let out = p.subtract_edge(e).unwrap();
        for old in p.edges() {
            let (a, b) = old.endpoints;
            if a == 0 || a == 1 || b == 0 || b == 1 {
                assert_eq!(out.edge_map[old.id.index()], None);
            } else {
                let new_id = out.edge_map[old.id.index()].unwrap();
                let mapped = (
                    out.vertex_map[a as usize].unwrap(),
                    out.vertex_map[b as usize].unwrap(),
                );
                assert_eq!(out.graph.endpoints(new_id), ordered(mapped.0, mapped.1));
            }
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(k4().girth().unwrap(), 3);
        assert_eq!(Graph::petersen().girth().unwrap(), 5);
        let path = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), Err(Error::Acyclic));
    }

    #[test]
    fn cycles_in_petersen() {
        let p = Graph::petersen();
        assert_eq!(p.find_cycles(4).len(), 0);
        let fives = p.find_cycles(5);
        assert_eq!(fives.len(), 12);
        for c in &fives {
            assert_eq!(c.len(), 5);
            let mut sorted = c.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), 5, "repeated vertex in {c:?}");
            for i in 0..c.len() {
                assert!(p.has_edge(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(k4().find_cycles(3).len(), 4);
    }

    #[test]
    fn hinge_counts() {
        let single = Graph::build(2, &[(0, 1)]).unwrap();
        assert!(single.hinges().is_empty());
        assert_eq!(k4().hinges().len(), 12);
    }

    #[test]
    fn component_partitions() {
        let p = Graph::petersen();
        assert_eq!(p.components(&[]).len(), 1);

        let single = Graph::build(2, &[(0, 1)]).unwrap();
        let comps = single.components(&[EdgeId(0)]);
        assert_eq!(comps, vec![vec![0], vec![1]]);

        let star: Vec<EdgeId> = p.neighbors(0).iter().map(|&(_, e)| e).collect();
        let comps = p.components(&star);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 9]);
    }

    #[test]
    fn digest_is_stable_and_label_sensitive() {
        let a = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let c = Graph::build(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), c.digest());
    }
}

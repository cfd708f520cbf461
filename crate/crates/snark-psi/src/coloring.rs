//! Klein four-group color arithmetic, exact counting and enumeration of
//! proper 3-edge-colorings, the invariant psi(G,e), Kempe chains, and the
//! parity/star checkers used as test oracles.

use std::collections::HashMap;

use crate::connectivity::CutSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeRef, Graph, VertexId};

/// An element of the Klein four-group {0,a,b,c} with XOR as addition. Edge
/// colors are the nonzero elements; 0 arises only as a sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const ZERO: Color = Color(0);
    pub const A: Color = Color(1);
    pub const B: Color = Color(2);
    pub const C: Color = Color(3);

    /// The three edge colors in canonical order.
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    fn bit(self) -> u8 {
        debug_assert!(self.0 != 0);
        1 << (self.0 - 1)
    }
}

impl std::ops::BitXor for Color {
    type Output = Color;
    fn bitxor(self, rhs: Color) -> Color {
        Color(self.0 ^ rhs.0)
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "a",
            2 => "b",
            _ => "c",
        })
    }
}

/// A total proper assignment of nonzero colors to the edges of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e.index()]
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.edge_count() || self.colors.iter().any(|c| c.is_zero()) {
            return false;
        }
        for v in 0..g.vertex_count() {
            let mut seen = 0u8;
            for &(_, e) in g.neighbors(v) {
                let bit = self.colors[e.index()].bit();
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
        }
        true
    }

    /// Sum (XOR) of the colors of the edges meeting `v`. Zero at every
    /// trivalent vertex of a properly colored graph.
    pub fn vertex_sum(&self, g: &Graph, v: VertexId) -> Color {
        g.neighbors(v)
            .iter()
            .fold(Color::ZERO, |acc, &(_, e)| acc ^ self.colors[e.index()])
    }
}

/// Shared backtracking state: per-edge colors, per-vertex used-color masks,
/// and a trail for undoing cascaded forced assignments.
struct Search<'g> {
    g: &'g Graph,
    order: Vec<EdgeId>,
    color: Vec<u8>,
    used: Vec<u8>,
    colored_at: Vec<u8>,
    trail: Vec<EdgeId>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Result<Search<'g>> {
        for v in 0..g.vertex_count() {
            if g.degree(v) > 3 {
                return Err(Error::ValenceTooHigh(v, g.degree(v)));
            }
        }
        Ok(Search {
            g,
            order: bfs_edge_order(g),
            color: vec![0; g.edge_count()],
            used: vec![0; g.vertex_count() as usize],
            colored_at: vec![0; g.vertex_count() as usize],
            trail: Vec::with_capacity(g.edge_count()),
        })
    }

    fn allowed(&self, e: EdgeId) -> u8 {
        let (u, v) = self.g.endpoints(e);
        !(self.used[u as usize] | self.used[v as usize]) & 0b111
    }

    /// Assigns color bit-index `c` (1..=3) to `e` and cascades forced moves:
    /// whenever a trivalent vertex has two colored edges, its third edge has
    /// exactly one admissible color or none. Returns false on contradiction;
    /// the trail records every assignment made either way.
    fn assign(&mut self, e: EdgeId, c: u8) -> bool {
        debug_assert_eq!(self.color[e.index()], 0);
        let mask = 1u8 << (c - 1);
        let (u, v) = self.g.endpoints(e);
        if (self.used[u as usize] | self.used[v as usize]) & mask != 0 {
            return false;
        }
        self.color[e.index()] = c;
        self.trail.push(e);
        for w in [u, v] {
            self.used[w as usize] |= mask;
            self.colored_at[w as usize] += 1;
        }
        for w in [u, v] {
            if self.g.degree(w) == 3 && self.colored_at[w as usize] == 2 {
                let third = self
                    .g
                    .neighbors(w)
                    .iter()
                    .map(|&(_, f)| f)
                    .find(|f| self.color[f.index()] == 0);
                if let Some(f) = third {
                    let open = self.allowed(f);
                    if open == 0 {
                        return false;
                    }
                    debug_assert_eq!(open.count_ones(), 1);
                    if !self.assign(f, open.trailing_zeros() as u8 + 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().unwrap();
            let mask = 1u8 << (self.color[e.index()] - 1);
            self.color[e.index()] = 0;
            let (u, v) = self.g.endpoints(e);
            for w in [u, v] {
                self.used[w as usize] &= !mask;
                self.colored_at[w as usize] -= 1;
            }
        }
    }

    fn count_from(&mut self, mut pos: usize) -> Result<u64> {
        while pos < self.order.len() && self.color[self.order[pos].index()] != 0 {
            pos += 1;
        }
        if pos == self.order.len() {
            return Ok(1);
        }
        let e = self.order[pos];
        let allowed = self.allowed(e);
        let mut total = 0u64;
        for c in 1..=3u8 {
            if allowed & (1 << (c - 1)) == 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(e, c) {
                let sub = self.count_from(pos + 1)?;
                total = total.checked_add(sub).ok_or(Error::CountOverflow)?;
            }
            self.undo_to(mark);
        }
        Ok(total)
    }

    fn snapshot(&self) -> EdgeColoring {
        EdgeColoring {
            colors: self.color.iter().map(|&c| Color(c)).collect(),
        }
    }
}

/// Edges in a BFS order that keeps every prefix connected inside each
/// component. The walk starts at the lowest vertex of valence at least 2, so
/// the first two edges are adjacent whenever any vertex has two edges.
fn bfs_edge_order(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count() as usize;
    let mut order = Vec::with_capacity(g.edge_count());
    let mut edge_seen = vec![false; g.edge_count()];
    let mut vertex_seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    let start = (0..g.vertex_count()).find(|&v| g.degree(v) >= 2);
    let roots = start.into_iter().chain(0..g.vertex_count());
    for root in roots {
        if vertex_seen[root as usize] {
            continue;
        }
        vertex_seen[root as usize] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.neighbors(v) {
                if !edge_seen[e.index()] {
                    edge_seen[e.index()] = true;
                    order.push(e);
                }
                if !vertex_seen[w as usize] {
                    vertex_seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// Exact number of proper 3-edge-colorings, by backtracking over edges in a
/// BFS-connected order with forced-move propagation. The colors of the first
/// two adjacent edges are fixed and the result multiplied by 6: every
/// ordered pair of distinct colors on an adjacent edge pair occurs equally
/// often among proper colorings.
pub fn count_colorings(g: &Graph) -> Result<u64> {
    let mut search = Search::new(g)?;
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let first_pair_adjacent = g.edge_count() >= 2 && {
        let (a, b) = (search.order[0], search.order[1]);
        let (a1, a2) = g.endpoints(a);
        let (b1, b2) = g.endpoints(b);
        a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2
    };
    if !first_pair_adjacent {
        // Every component is a single edge.
        return 3u64
            .checked_pow(g.edge_count() as u32)
            .ok_or(Error::CountOverflow);
    }
    let (e0, e1) = (search.order[0], search.order[1]);
    if !search.assign(e0, 1) || !search.assign(e1, 2) {
        return Ok(0);
    }
    let fixed = search.count_from(2)?;
    fixed.checked_mul(6).ok_or(Error::CountOverflow)
}

/// Streams every proper coloring exactly once, in the deterministic order
/// induced by the BFS edge order with colors tried ascending.
pub struct Colorings<'g> {
    search: Search<'g>,
    stack: Vec<Frame>,
    started: bool,
    finished: bool,
}

struct Frame {
    pos: usize,
    next_color: u8,
    mark: usize,
}

impl<'g> Colorings<'g> {
    fn next_open(&self, mut pos: usize) -> usize {
        while pos < self.search.order.len()
            && self.search.color[self.search.order[pos].index()] != 0
        {
            pos += 1;
        }
        pos
    }
}

impl<'g> Iterator for Colorings<'g> {
    type Item = EdgeColoring;

    fn next(&mut self) -> Option<EdgeColoring> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            let pos = self.next_open(0);
            if pos == self.search.order.len() {
                // Nothing to branch on; the empty assignment is complete.
                self.finished = true;
                return Some(self.search.snapshot());
            }
            self.stack.push(Frame {
                pos,
                next_color: 1,
                mark: self.search.trail.len(),
            });
        }
        while let Some(top) = self.stack.last() {
            let (top_pos, mark) = (top.pos, top.mark);
            self.search.undo_to(mark);
            let e = self.search.order[top_pos];
            let mut c = self.stack.last().unwrap().next_color;
            let mut descended = false;
            while c <= 3 {
                self.stack.last_mut().unwrap().next_color = c + 1;
                if self.search.allowed(e) & (1 << (c - 1)) != 0 && self.search.assign(e, c) {
                    descended = true;
                    break;
                }
                self.search.undo_to(mark);
                c += 1;
            }
            if !descended {
                self.search.undo_to(mark);
                self.stack.pop();
                continue;
            }
            let pos = self.next_open(top_pos + 1);
            if pos == self.search.order.len() {
                return Some(self.search.snapshot());
            }
            self.stack.push(Frame {
                pos,
                next_color: 1,
                mark: self.search.trail.len(),
            });
        }
        self.finished = true;
        None
    }
}

/// Iterator over all proper colorings. `limit` truncates the stream.
pub fn enumerate_colorings(g: &Graph, limit: Option<usize>) -> Result<Vec<EdgeColoring>> {
    let iter = colorings(g)?;
    Ok(match limit {
        Some(k) => iter.take(k).collect(),
        None => iter.collect(),
    })
}

pub fn colorings(g: &Graph) -> Result<Colorings<'_>> {
    Ok(Colorings {
        search: Search::new(g)?,
        stack: Vec::new(),
        started: false,
        finished: false,
    })
}

/// The invariant psi(G,e): the coloring count of the subtracted graph
/// divided by 18. Defined only for non-colorable cubic G; the divisibility
/// by 18 is asserted, not assumed.
pub fn psi(g: &Graph, e: EdgeRef) -> Result<u64> {
    if count_colorings(g)? != 0 {
        return Err(Error::ColorableGraph);
    }
    let sub = g.subtract_edge(e)?;
    let count = count_colorings(&sub.graph)?;
    if count % 18 != 0 {
        return Err(Error::NotDivisibleBy18(count));
    }
    Ok(count / 18)
}

/// Session cache for coloring counts and psi values, keyed by the labeled
/// graph digest. Synthesis re-queries the same factors repeatedly.
#[derive(Default)]
pub struct PsiCache {
    counts: HashMap<String, u64>,
    psi: HashMap<(String, EdgeId), u64>,
}

impl PsiCache {
    pub fn new() -> PsiCache {
        PsiCache::default()
    }

    pub fn count_colorings(&mut self, g: &Graph) -> Result<u64> {
        let key = g.digest();
        if let Some(&c) = self.counts.get(&key) {
            return Ok(c);
        }
        let c = count_colorings(g)?;
        self.counts.insert(key, c);
        Ok(c)
    }

    pub fn psi(&mut self, g: &Graph, e: EdgeRef) -> Result<u64> {
        let key = (g.digest(), e.id);
        if let Some(&value) = self.psi.get(&key) {
            return Ok(value);
        }
        if self.count_colorings(g)? != 0 {
            return Err(Error::ColorableGraph);
        }
        let sub = g.subtract_edge(e)?;
        let count = self.count_colorings(&sub.graph)?;
        if count % 18 != 0 {
            return Err(Error::NotDivisibleBy18(count));
        }
        self.psi.insert(key, count / 18);
        Ok(count / 18)
    }
}

/// A maximal two-colored alternating edge sequence through a given edge. In
/// a properly colored cubic graph every chain closes into a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeChain {
    pub edges: Vec<EdgeId>,
    pub colors: (Color, Color),
    pub closed: bool,
}

impl KempeChain {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }
}

/// The maximal x/y-alternating component through `d` under coloring `f`.
pub fn kempe_chain(
    g: &Graph,
    f: &EdgeColoring,
    d: EdgeRef,
    x: Color,
    y: Color,
) -> Result<KempeChain> {
    g.check_edge(d)?;
    if f.color(d.id) != x && f.color(d.id) != y {
        return Err(Error::EdgeNotInChainColors(d.id.0));
    }
    let other = |c: Color| if c == x { y } else { x };
    // At each vertex a proper coloring has at most one edge of each color,
    // so the walk is forced in both directions.
    let step = |at: VertexId, come_from: EdgeId, want: Color| -> Option<EdgeId> {
        g.neighbors(at)
            .iter()
            .find(|&&(_, e)| e != come_from && f.color(e) == want)
            .map(|&(_, e)| e)
    };
    let far_end = |e: EdgeId, near: VertexId| -> VertexId {
        let (a, b) = g.endpoints(e);
        if a == near {
            b
        } else {
            a
        }
    };

    let (p, q) = g.endpoints(d.id);
    let mut forward = Vec::new();
    let mut at = q;
    let mut cur = d.id;
    let mut closed = false;
    loop {
        let want = other(f.color(cur));
        match step(at, cur, want) {
            Some(e) if e == d.id => {
                closed = true;
                break;
            }
            Some(e) => {
                forward.push(e);
                at = far_end(e, at);
                cur = e;
            }
            None => break,
        }
    }
    let mut edges = Vec::new();
    if !closed {
        let mut backward = Vec::new();
        let mut at = p;
        let mut cur = d.id;
        loop {
            let want = other(f.color(cur));
            match step(at, cur, want) {
                Some(e) => {
                    backward.push(e);
                    at = far_end(e, at);
                    cur = e;
                }
                None => break,
            }
        }
        backward.reverse();
        edges.extend(backward);
    }
    edges.push(d.id);
    edges.extend(forward);
    Ok(KempeChain {
        edges,
        colors: if x <= y { (x, y) } else { (y, x) },
        closed,
    })
}

/// Exchanges the two chain colors along the chain. An involution that maps
/// proper colorings to proper colorings.
pub fn kempe_swap(f: &EdgeColoring, chain: &KempeChain) -> EdgeColoring {
    let flip = chain.colors.0 ^ chain.colors.1;
    let mut colors = f.colors.clone();
    for e in &chain.edges {
        colors[e.index()] = colors[e.index()] ^ flip;
    }
    EdgeColoring { colors }
}

/// Class sizes of the colorings of a subtracted graph with the three edges
/// at one endpoint of `d2` pinned to a,b,c, split by the color of `d1`.
/// The input must come from subtracting an edge of a non-colorable cubic
/// graph; the original graph is reconstructed and re-checked.
pub fn c_prime_counts(g_e: &Graph, d1: EdgeRef, d2: EdgeRef) -> Result<(u64, u64, u64)> {
    g_e.check_edge(d1)?;
    g_e.check_edge(d2)?;
    let original = undo_subtraction(g_e, d1, d2)?;
    if count_colorings(&original)? != 0 {
        return Err(Error::ColorableGraph);
    }
    let v = g_e.endpoints(d2.id).0;
    let mut others: Vec<EdgeId> = g_e
        .neighbors(v)
        .iter()
        .map(|&(_, e)| e)
        .filter(|&e| e != d2.id)
        .collect();
    others.sort_unstable();
    if others.len() != 2 {
        return Err(Error::InvalidSpec(format!(
            "endpoint {v} of d2 is not trivalent"
        )));
    }
    let (e1, e2) = (others[0], others[1]);
    let mut ja = 0u64;
    let mut jb = 0u64;
    let mut jc = 0u64;
    for f in colorings(g_e)? {
        if f.color(d2.id) != Color::A || f.color(e1) != Color::B || f.color(e2) != Color::C {
            continue;
        }
        match f.color(d1.id) {
            Color::A => ja += 1,
            Color::B => jb += 1,
            _ => jc += 1,
        }
    }
    Ok((ja, jb, jc))
}

/// Reverses an edge subtraction: removes `d1` and `d2`, restores the two
/// smoothed vertices, and reconnects them to the old neighbor pairs.
fn undo_subtraction(g_e: &Graph, d1: EdgeRef, d2: EdgeRef) -> Result<Graph> {
    let n = g_e.vertex_count();
    let (u1, u2) = g_e.endpoints(d1.id);
    let (v1, v2) = g_e.endpoints(d2.id);
    let mut pairs: Vec<(VertexId, VertexId)> = g_e
        .edges()
        .filter(|e| e.id != d1.id && e.id != d2.id)
        .map(|e| e.endpoints)
        .collect();
    pairs.push((n, u1));
    pairs.push((n, u2));
    pairs.push((n + 1, v1));
    pairs.push((n + 1, v2));
    pairs.push((n, n + 1));
    Graph::build(n + 2, &pairs)
}

/// XOR of the per-vertex color sums over a vertex set.
pub fn vertex_boundary_sum(g: &Graph, f: &EdgeColoring, vertices: &[VertexId]) -> Color {
    vertices
        .iter()
        .fold(Color::ZERO, |acc, &v| acc ^ f.vertex_sum(g, v))
}

/// Parity check: the univalent vertices missing color `x` are even in
/// number. On quasi-cubic graphs this equals the count over all vertices,
/// since trivalent vertices see every color. Always true for proper
/// colorings; exposed as a test oracle.
pub fn check_parity(g: &Graph, f: &EdgeColoring, x: Color) -> bool {
    let missing = (0..g.vertex_count())
        .filter(|&v| g.degree(v) == 1)
        .filter(|&v| g.neighbors(v).iter().all(|&(_, e)| f.color(e) != x))
        .count();
    missing % 2 == 0
}

/// XOR of the colors over a cut set. Zero on every minimal cut set.
pub fn cut_color_sum(f: &EdgeColoring, s: &CutSet) -> Color {
    s.edge_ids
        .iter()
        .fold(Color::ZERO, |acc, &e| acc ^ f.color(e))
}

/// The forced boundary pattern of a star: some rotation reads x,y,x,x,z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarPattern {
    pub rotation: usize,
    pub x: Color,
    pub y: Color,
    pub z: Color,
}

/// Finds the rotation index i and distinct colors (x,y,z) such that the five
/// boundary edges, read cyclically from i, are colored x,y,x,x,z. Fails only
/// on non-star inputs or improper colorings.
pub fn star_boundary_pattern(f: &EdgeColoring, boundary: &[EdgeRef; 5]) -> Result<StarPattern> {
    let c: Vec<Color> = boundary.iter().map(|e| f.color(e.id)).collect();
    for i in 0..5 {
        let at = |k: usize| c[(i + k) % 5];
        let (x, y, z) = (at(0), at(1), at(4));
        if at(2) == x && at(3) == x && y != x && z != x && z != y {
            return Ok(StarPattern { rotation: i, x, y, z });
        }
    }
    Err(Error::NoStarPattern)
}

/// Coloring count of a graph together with the derived decomposition count
/// and, when defined, psi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub colorings: u64,
    pub decompositions: Option<u64>,
    pub psi: Option<u64>,
}

/// Census of the graph itself. psi needs an edge, so it is absent.
pub fn census_of_graph(g: &Graph) -> Result<Census> {
    let colorings = count_colorings(g)?;
    Ok(Census {
        colorings,
        decompositions: (colorings % 6 == 0).then_some(colorings / 6),
        psi: None,
    })
}

/// Census of the subtracted graph G_e. psi is reported when G is
/// non-colorable and the count divides by 18.
pub fn census_of_edge(g: &Graph, e: EdgeRef) -> Result<Census> {
    let sub = g.subtract_edge(e)?;
    let colorings = count_colorings(&sub.graph)?;
    let base_colorable = count_colorings(g)? != 0;
    Ok(Census {
        colorings,
        decompositions: (colorings % 6 == 0).then_some(colorings / 6),
        psi: (!base_colorable && colorings % 18 == 0).then_some(colorings / 18),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn k33() -> Graph {
        let mut pairs = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                pairs.push((i, j));
            }
        }
        Graph::build(6, &pairs).unwrap()
    }

    #[test]
    fn color_arithmetic() {
        assert_eq!(Color::A ^ Color::B, Color::C);
        assert_eq!(Color::A ^ Color::C, Color::B);
        assert_eq!(Color::B ^ Color::C, Color::A);
        for c in Color::ALL {
            assert_eq!(c ^ c, Color::ZERO);
            assert_eq!(c ^ Color::ZERO, c);
        }
        assert_eq!(Color::A ^ Color::B ^ Color::C, Color::ZERO);
    }

    #[test]
    fn count_small_graphs() {
        assert_eq!(count_colorings(&k4()).unwrap(), 6);
        assert_eq!(count_colorings(&k33()).unwrap(), 12);
        assert_eq!(count_colorings(&Graph::petersen()).unwrap(), 0);
        let single = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(count_colorings(&single).unwrap(), 3);
        let empty = Graph::build(1, &[]).unwrap();
        assert_eq!(count_colorings(&empty).unwrap(), 1);
    }

    #[test]
    fn count_rejects_high_valence() {
        let star4 = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(matches!(
            count_colorings(&star4),
            Err(Error::ValenceTooHigh(0, 4))
        ));
    }

    #[test]
    fn enumerate_matches_count() {
        for g in [k4(), k33(), Graph::petersen()] {
            let all = enumerate_colorings(&g, None).unwrap();
            assert_eq!(all.len() as u64, count_colorings(&g).unwrap());
            for f in &all {
                assert!(f.is_proper(&g));
            }
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn enumerate_respects_limit() {
        let some = enumerate_colorings(&k4(), Some(2)).unwrap();
        assert_eq!(some.len(), 2);
    }

    #[test]
    fn petersen_minus_edge_has_18_colorings() {
        let p = Graph::petersen();
        let e = p.edge_between(0, 1).unwrap();
        let sub = p.subtract_edge(e).unwrap();
        assert_eq!(count_colorings(&sub.graph).unwrap(), 18);
        assert_eq!(enumerate_colorings(&sub.graph, None).unwrap().len(), 18);
    }

    #[test]
    fn psi_of_petersen() {
        let p = Graph::petersen();
        for e in p.edges() {
            assert_eq!(psi(&p, e).unwrap(), 1);
        }
    }

    #[test]
    fn psi_refuses_colorable() {
        let g = k33();
        let e = g.edge_between(0, 3).unwrap();
        assert_eq!(psi(&g, e), Err(Error::ColorableGraph));
    }

    #[test]
    fn psi_cache_agrees() {
        let p = Graph::petersen();
        let mut cache = PsiCache::new();
        for e in p.edges() {
            assert_eq!(cache.psi(&p, e).unwrap(), 1);
            assert_eq!(cache.psi(&p, e).unwrap(), 1);
        }
    }

    #[test]
    fn kempe_chain_on_six_cycle() {
        let pairs: Vec<(u32, u32)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = Graph::build(6, &pairs).unwrap();
        let all = enumerate_colorings(&g, None).unwrap();
        let f = all
            .iter()
            .find(|f| {
                (0..6).all(|i| {
                    f.color(EdgeId(i)) == if i % 2 == 0 { Color::A } else { Color::B }
                })
            })
            .expect("alternating coloring exists");
        let d = g.edge(EdgeId(0)).unwrap();
        let chain = kempe_chain(&g, f, d, Color::A, Color::B).unwrap();
        assert!(chain.closed);
        assert_eq!(chain.edges.len(), 6);
    }

    #[test]
    fn kempe_chain_closed_on_cubic() {
        let g = k4();
        for f in colorings(&g).unwrap() {
            for d in g.edges() {
                let x = f.color(d.id);
                for y in Color::ALL {
                    if y == x {
                        continue;
                    }
                    let chain = kempe_chain(&g, &f, d, x, y).unwrap();
                    assert!(chain.closed, "open chain in a cubic graph");
                }
            }
        }
    }

    #[test]
    fn kempe_chain_wrong_color_error() {
        let g = k4();
        let f = &enumerate_colorings(&g, Some(1)).unwrap()[0];
        let d = g.edge(EdgeId(0)).unwrap();
        let x = f.color(d.id);
        let others: Vec<Color> = Color::ALL.iter().copied().filter(|&c| c != x).collect();
        assert!(matches!(
            kempe_chain(&g, f, d, others[0], others[1]),
            Err(Error::EdgeNotInChainColors(0))
        ));
    }

    #[test]
    fn kempe_swap_involution() {
        let p = Graph::petersen();
        let sub = p.subtract_edge(p.edge_between(0, 1).unwrap()).unwrap();
        for f in colorings(&sub.graph).unwrap() {
            let d = sub.d1;
            let x = f.color(d.id);
            let y = Color::ALL.iter().copied().find(|&c| c != x).unwrap();
            let chain = kempe_chain(&sub.graph, &f, d, x, y).unwrap();
            let swapped = kempe_swap(&f, &chain);
            assert!(swapped.is_proper(&sub.graph));
            assert_ne!(swapped, f);
            let chain_back = kempe_chain(&sub.graph, &swapped, d, x, y).unwrap();
            assert_eq!(kempe_swap(&swapped, &chain_back), f);
        }
    }

    #[test]
    fn c_prime_counts_of_petersen() {
        let p = Graph::petersen();
        for e in p.edges() {
            let sub = p.subtract_edge(e).unwrap();
            let counts = c_prime_counts(&sub.graph, sub.d1, sub.d2).unwrap();
            assert_eq!(counts, (1, 1, 1));
        }
    }

    #[test]
    fn c_prime_refuses_colorable_original() {
        // The 3-cube is cubic, colorable, and admits a clean subtraction.
        let cube = Graph::build(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let sub = cube.subtract_edge(cube.edge_between(0, 1).unwrap()).unwrap();
        assert_eq!(
            c_prime_counts(&sub.graph, sub.d1, sub.d2),
            Err(Error::ColorableGraph)
        );
    }

    #[test]
    fn boundary_sums() {
        let g = k4();
        let f = &enumerate_colorings(&g, Some(1)).unwrap()[0];
        let all: Vec<u32> = (0..4).collect();
        assert_eq!(vertex_boundary_sum(&g, f, &all), Color::ZERO);
        assert_eq!(vertex_boundary_sum(&g, f, &[2]), Color::ZERO);

        let single = Graph::build(2, &[(0, 1)]).unwrap();
        let fs = enumerate_colorings(&single, None).unwrap();
        let f = fs.iter().find(|f| f.color(EdgeId(0)) == Color::A).unwrap();
        assert_eq!(vertex_boundary_sum(&single, f, &[0]), Color::A);
    }

    #[test]
    fn parity_examples() {
        let g = k4();
        for f in colorings(&g).unwrap() {
            for x in Color::ALL {
                assert!(check_parity(&g, &f, x));
            }
        }
        // Two-edge path colored a,b: both univalent ends miss c.
        let path = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        let fs = enumerate_colorings(&path, None).unwrap();
        let f = fs
            .iter()
            .find(|f| f.color(EdgeId(0)) == Color::A && f.color(EdgeId(1)) == Color::B)
            .unwrap();
        assert!(check_parity(&path, f, Color::C));
    }

    #[test]
    fn star_pattern_rotations() {
        let colors = |v: [Color; 5]| EdgeColoring { colors: v.to_vec() };
        let refs: [EdgeRef; 5] = std::array::from_fn(|i| EdgeRef {
            id: EdgeId(i as u32),
            endpoints: (0, 1),
        });
        let f = colors([Color::A, Color::B, Color::A, Color::A, Color::C]);
        let pattern = star_boundary_pattern(&f, &refs).unwrap();
        assert_eq!(pattern.rotation, 0);
        assert_eq!((pattern.x, pattern.y, pattern.z), (Color::A, Color::B, Color::C));

        let rotated = colors([Color::A, Color::A, Color::C, Color::A, Color::B]);
        let pattern = star_boundary_pattern(&rotated, &refs).unwrap();
        assert_eq!(pattern.rotation, 3);

        // Three consecutive equal boundary colors never match.
        let bad = colors([Color::A, Color::A, Color::A, Color::B, Color::C]);
        assert_eq!(star_boundary_pattern(&bad, &refs), Err(Error::NoStarPattern));
    }

    #[test]
    fn census_values() {
        let p = Graph::petersen();
        let census = census_of_graph(&p).unwrap();
        assert_eq!(census.colorings, 0);
        assert_eq!(census.decompositions, Some(0));
        let census = census_of_edge(&p, p.edge_between(0, 1).unwrap()).unwrap();
        assert_eq!(census.colorings, 18);
        assert_eq!(census.decompositions, Some(3));
        assert_eq!(census.psi, Some(1));

        let single = Graph::build(2, &[(0, 1)]).unwrap();
        let census = census_of_graph(&single).unwrap();
        assert_eq!(census.colorings, 3);
        assert_eq!(census.decompositions, None);
    }
}

//! The two snark-building constructions with exact edge tracking: the
//! symmetric dot product of two snarks, and the double-Petersen
//! superposition that splices a 19-vertex gadget across a deleted hinge.

use crate::coloring::count_colorings;
use crate::connectivity::{cyclic_connectivity_at_least, Budget};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeRef, Graph, VertexId};

/// Which input graph a tracked edge or vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Tracks every surviving edge and vertex of both inputs into the output,
/// plus the new edges by name. Deleted items map to `None`.
#[derive(Debug, Clone)]
pub struct EdgeMap {
    first_edges: Vec<Option<EdgeId>>,
    second_edges: Vec<Option<EdgeId>>,
    first_vertices: Vec<Option<VertexId>>,
    second_vertices: Vec<Option<VertexId>>,
    named: Vec<(String, EdgeRef)>,
}

impl EdgeMap {
    pub fn edge(&self, side: Side, old: EdgeId) -> Option<EdgeId> {
        match side {
            Side::First => self.first_edges.get(old.index()).copied().flatten(),
            Side::Second => self.second_edges.get(old.index()).copied().flatten(),
        }
    }

    pub fn vertex(&self, side: Side, old: VertexId) -> Option<VertexId> {
        match side {
            Side::First => self.first_vertices.get(old as usize).copied().flatten(),
            Side::Second => self.second_vertices.get(old as usize).copied().flatten(),
        }
    }

    pub fn named(&self, name: &str) -> Option<EdgeRef> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, e)| e)
    }

    pub fn named_edges(&self) -> &[(String, EdgeRef)] {
        &self.named
    }
}

/// Inputs of the symmetric dot product. `g1` contributes the deleted edge
/// `e1 = (U,V)` with `U` its lower endpoint; `g2` contributes
/// `e2 = (u,v)` likewise. The optional orders assign each deleted vertex's
/// two remaining neighbors to the construction roles; the default is
/// ascending vertex id.
#[derive(Debug, Clone, Copy)]
pub struct DotProductSpec<'a> {
    pub g1: &'a Graph,
    pub e1: EdgeRef,
    /// `((U1, U2), (V1, V2))`.
    pub u_order: Option<((VertexId, VertexId), (VertexId, VertexId))>,
    pub g2: &'a Graph,
    pub e2: EdgeRef,
    /// `((u1, u2), (v1, v2))`.
    pub v_order: Option<((VertexId, VertexId), (VertexId, VertexId))>,
}

impl<'a> DotProductSpec<'a> {
    pub fn new(g1: &'a Graph, e1: EdgeRef, g2: &'a Graph, e2: EdgeRef) -> DotProductSpec<'a> {
        DotProductSpec {
            g1,
            e1,
            u_order: None,
            g2,
            e2,
            v_order: None,
        }
    }
}

/// The two neighbors of `vertex` other than `not`, in ascending order.
fn other_neighbors(g: &Graph, vertex: VertexId, not: VertexId) -> Result<(VertexId, VertexId)> {
    let mut others: Vec<VertexId> = g
        .neighbors(vertex)
        .iter()
        .map(|&(w, _)| w)
        .filter(|&w| w != not)
        .collect();
    others.sort_unstable();
    if others.len() != 2 {
        return Err(Error::NotCubic);
    }
    Ok((others[0], others[1]))
}

fn check_order(
    given: (VertexId, VertexId),
    actual: (VertexId, VertexId),
    what: &str,
) -> Result<(VertexId, VertexId)> {
    let matches = given == actual || (given.1, given.0) == actual;
    if !matches {
        return Err(Error::InvalidSpec(format!(
            "{what} order {given:?} does not name the two remaining neighbors {actual:?}"
        )));
    }
    Ok(given)
}

fn require_girth_five(g: &Graph, what: &str) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::InvalidSpec(format!("{what} is not cubic")));
    }
    if !g.is_connected() {
        return Err(Error::InvalidSpec(format!("{what} is disconnected")));
    }
    let girth = g.girth()?;
    if girth < 5 {
        return Err(Error::InvalidSpec(format!("{what} has girth {girth} < 5")));
    }
    Ok(())
}

/// The symmetric dot product: deletes `U,V` from the first graph and `u,v`
/// from the second, then joins the remnants through two new vertices `T,W`
/// and seven new edges
/// `omega=(T,W), d1=(U1,u1), d2'=(U2,T), d2^=(T,u2), D1'=(V1,W), D1^=(W,v1),
/// D2=(V2,v2)`.
pub fn dot_product(spec: &DotProductSpec) -> Result<(Graph, EdgeMap)> {
    spec.g1.check_edge(spec.e1)?;
    spec.g2.check_edge(spec.e2)?;
    require_girth_five(spec.g1, "dot product first input")?;
    require_girth_five(spec.g2, "dot product second input")?;

    let (cap_u, cap_v) = spec.e1.endpoints;
    let (low_u, low_v) = spec.e2.endpoints;
    let default_1 = (
        other_neighbors(spec.g1, cap_u, cap_v)?,
        other_neighbors(spec.g1, cap_v, cap_u)?,
    );
    let default_2 = (
        other_neighbors(spec.g2, low_u, low_v)?,
        other_neighbors(spec.g2, low_v, low_u)?,
    );
    let ((cap_u1, cap_u2), (cap_v1, cap_v2)) = match spec.u_order {
        Some((us, vs)) => (
            check_order(us, default_1.0, "U-side")?,
            check_order(vs, default_1.1, "V-side")?,
        ),
        None => default_1,
    };
    let ((low_u1, low_u2), (low_v1, low_v2)) = match spec.v_order {
        Some((us, vs)) => (
            check_order(us, default_2.0, "u-side")?,
            check_order(vs, default_2.1, "v-side")?,
        ),
        None => default_2,
    };
    for four in [
        [cap_u1, cap_u2, cap_v1, cap_v2],
        [low_u1, low_u2, low_v1, low_v2],
    ] {
        let mut sorted = four;
        sorted.sort_unstable();
        sorted.windows(2).try_for_each(|w| {
            if w[0] == w[1] {
                Err(Error::InvalidSpec(
                    "designated neighbors are not distinct".into(),
                ))
            } else {
                Ok(())
            }
        })?;
    }

    let n1 = spec.g1.vertex_count();
    let n2 = spec.g2.vertex_count();
    let mut first_vertices: Vec<Option<VertexId>> = vec![None; n1 as usize];
    let mut next = 0u32;
    for w in 0..n1 {
        if w != cap_u && w != cap_v {
            first_vertices[w as usize] = Some(next);
            next += 1;
        }
    }
    let mut second_vertices: Vec<Option<VertexId>> = vec![None; n2 as usize];
    for w in 0..n2 {
        if w != low_u && w != low_v {
            second_vertices[w as usize] = Some(next);
            next += 1;
        }
    }
    let t = next;
    let w = next + 1;
    let map1 = |x: VertexId| first_vertices[x as usize].expect("surviving vertex");
    let map2 = |x: VertexId| second_vertices[x as usize].expect("surviving vertex");

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut first_edges = vec![None; spec.g1.edge_count()];
    for e in spec.g1.edges() {
        let (a, b) = e.endpoints;
        if a == cap_u || a == cap_v || b == cap_u || b == cap_v {
            continue;
        }
        first_edges[e.id.index()] = Some(EdgeId(pairs.len() as u32));
        pairs.push((map1(a), map1(b)));
    }
    let mut second_edges = vec![None; spec.g2.edge_count()];
    for e in spec.g2.edges() {
        let (a, b) = e.endpoints;
        if a == low_u || a == low_v || b == low_u || b == low_v {
            continue;
        }
        second_edges[e.id.index()] = Some(EdgeId(pairs.len() as u32));
        pairs.push((map2(a), map2(b)));
    }
    let new_edges: [(&str, VertexId, VertexId); 7] = [
        ("omega", t, w),
        ("d1", map1(cap_u1), map2(low_u1)),
        ("d2_prime", map1(cap_u2), t),
        ("d2_hat", t, map2(low_u2)),
        ("D1_prime", map1(cap_v1), w),
        ("D1_hat", w, map2(low_v1)),
        ("D2", map1(cap_v2), map2(low_v2)),
    ];
    let mut named = Vec::with_capacity(7);
    for &(name, a, b) in &new_edges {
        let id = EdgeId(pairs.len() as u32);
        pairs.push((a, b));
        named.push((
            name.to_string(),
            EdgeRef {
                id,
                endpoints: if a <= b { (a, b) } else { (b, a) },
            },
        ));
    }

    let graph = Graph::build(n1 + n2 - 2, &pairs)?;
    debug_assert!(graph.is_cubic());
    Ok((
        graph,
        EdgeMap {
            first_edges,
            second_edges,
            first_vertices,
            second_vertices,
            named,
        },
    ))
}

/// The gadget's five attachment vertices, in splice order.
pub const GADGET_BOUNDARY_LEN: usize = 5;

/// Builds the 19-vertex double-Petersen gadget. Two Petersen copies lose one
/// vertex each of their chosen outer 5-cycles, get cross-connected by three
/// edges, lose one 5-cycle edge each, and the middle cross edge is
/// subdivided. Returns the gadget and its five 2-valent boundary vertices
/// `(a,b,c,d,e)` in splice order.
pub fn build_gadget() -> (Graph, [VertexId; 5]) {
    let p = Graph::petersen();
    // Chosen 5-cycles (outer cycles), in order: p = (1,2,3,4,0) in the first
    // copy and the same +10 in the second, so the deleted vertices are 2 and
    // 12 and the cross connections use their spoke neighbors 7 and 17.
    let p_cycle = [1u32, 2, 3, 4, 0];
    let (p2, p2_spoke) = (p_cycle[1], 7u32);
    let offset = 10u32;

    let deleted = [p2, p2 + offset];
    let dropped_cycle_edges = [
        (p_cycle[3], p_cycle[4]),
        (p_cycle[3] + offset, p_cycle[4] + offset),
    ];
    let mut vertex_map: Vec<Option<VertexId>> = vec![None; 20];
    let mut next = 0u32;
    for v in 0..20u32 {
        if !deleted.contains(&v) {
            vertex_map[v as usize] = Some(next);
            next += 1;
        }
    }
    let nu = next;
    let map = |v: VertexId| vertex_map[v as usize].expect("surviving gadget vertex");

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for copy in 0..2u32 {
        let shift = copy * offset;
        for e in p.edges() {
            let (a, b) = (e.endpoints.0 + shift, e.endpoints.1 + shift);
            if deleted.contains(&a) || deleted.contains(&b) {
                continue;
            }
            if dropped_cycle_edges.contains(&(a, b)) || dropped_cycle_edges.contains(&(b, a)) {
                continue;
            }
            pairs.push((map(a), map(b)));
        }
    }
    pairs.push((map(p_cycle[0]), map(p_cycle[0] + offset)));
    pairs.push((map(p2_spoke), map(p2_spoke + offset)));
    pairs.push((map(p_cycle[2]), nu));
    pairs.push((nu, map(p_cycle[2] + offset)));

    let graph = Graph::build(21 - 2, &pairs).expect("canonical gadget");
    let boundary = [
        map(p_cycle[4]),
        map(p_cycle[3]),
        nu,
        map(p_cycle[3] + offset),
        map(p_cycle[4] + offset),
    ];
    (graph, boundary)
}

/// Inputs of the superposition: a snark and a path of five distinct
/// vertices `u1..u5`. The pendant vertices `v2,v3,v4` are derived, and the
/// gadget is the canonical one from `build_gadget`.
#[derive(Debug, Clone, Copy)]
pub struct SuperpositionSpec<'a> {
    pub g0: &'a Graph,
    pub path: [VertexId; 5],
}

impl<'a> SuperpositionSpec<'a> {
    pub fn new(g0: &'a Graph, path: [VertexId; 5]) -> SuperpositionSpec<'a> {
        SuperpositionSpec { g0, path }
    }

    /// The third neighbors of `u2,u3,u4`, off the path.
    pub fn pendants(&self) -> Result<[VertexId; 3]> {
        let [u1, u2, u3, u4, u5] = self.path;
        let third = |mid: VertexId, left: VertexId, right: VertexId| -> Result<VertexId> {
            self.g0
                .neighbors(mid)
                .iter()
                .map(|&(w, _)| w)
                .find(|&w| w != left && w != right)
                .ok_or(Error::NotCubic)
        };
        Ok([third(u2, u1, u3)?, third(u3, u2, u4)?, third(u4, u3, u5)?])
    }

    /// The seven edges of the base graph consumed by the splice.
    pub fn touched_edges(&self) -> Result<[EdgeRef; 7]> {
        let [u1, u2, u3, u4, u5] = self.path;
        let [v2, v3, v4] = self.pendants()?;
        Ok([
            self.g0.edge_between(u1, u2)?,
            self.g0.edge_between(u2, u3)?,
            self.g0.edge_between(u3, u4)?,
            self.g0.edge_between(u4, u5)?,
            self.g0.edge_between(u2, v2)?,
            self.g0.edge_between(u3, v3)?,
            self.g0.edge_between(u4, v4)?,
        ])
    }

    fn validate(&self) -> Result<[VertexId; 3]> {
        let [u1, u2, u3, u4, u5] = self.path;
        let mut sorted = self.path;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSpec("path vertices are not distinct".into()));
        }
        for (a, b) in [(u1, u2), (u2, u3), (u3, u4), (u4, u5)] {
            if !self.g0.has_edge(a, b) {
                return Err(Error::InvalidSpec(format!(
                    "path edge ({a}, {b}) does not exist"
                )));
            }
        }
        let pendants = self.pendants()?;
        if pendants.iter().any(|v| self.path.contains(v)) {
            return Err(Error::InvalidSpec(
                "a pendant vertex lies on the path; the graph has a short cycle".into(),
            ));
        }
        Ok(pendants)
    }

    /// A 5-cycle of the base graph that avoids the hinge `u2,u3,u4`, needed
    /// for the splice to preserve cyclic 5-edge-connectivity.
    pub fn disjoint_five_cycle(&self) -> Result<Vec<VertexId>> {
        let hinge = [self.path[1], self.path[2], self.path[3]];
        self.g0
            .find_cycles(5)
            .into_iter()
            .filter(|c| c.len() == 5)
            .find(|c| c.iter().all(|v| !hinge.contains(v)))
            .ok_or(Error::NoDisjointCycle)
    }
}

fn require_snark(g: &Graph, what: &str) -> Result<()> {
    require_girth_five(g, what)?;
    if count_colorings(g)? != 0 {
        return Err(Error::InvalidSpec(format!("{what} is 3-edge-colorable")));
    }
    let cert = cyclic_connectivity_at_least(g, 4, &Budget::default())?;
    if !cert.passed() {
        return Err(Error::InvalidSpec(format!(
            "{what} is not cyclically 4-edge-connected"
        )));
    }
    Ok(())
}

/// Superposition: deletes the hinge `u2,u3,u4` (with its five attached
/// edges) from the base snark and splices in the canonical gadget through
/// the five new edges `(u1,a), (v2,b), (v3,c), (v4,d), (u5,e)`, named
/// `E1..E5` in the edge map with `E` an alias for `E3 = (v3,c)`.
pub fn superpose(spec: &SuperpositionSpec) -> Result<(Graph, EdgeMap)> {
    let pendants = spec.validate()?;
    require_snark(spec.g0, "superposition base")?;
    spec.disjoint_five_cycle()?;

    let [u1, u2, u3, u4, u5] = spec.path;
    let [v2, v3, v4] = pendants;
    let (gadget, boundary) = build_gadget();

    let n0 = spec.g0.vertex_count();
    let hinge = [u2, u3, u4];
    let mut first_vertices: Vec<Option<VertexId>> = vec![None; n0 as usize];
    let mut next = 0u32;
    for w in 0..n0 {
        if !hinge.contains(&w) {
            first_vertices[w as usize] = Some(next);
            next += 1;
        }
    }
    let offset = next;
    let second_vertices: Vec<Option<VertexId>> =
        (0..gadget.vertex_count()).map(|v| Some(offset + v)).collect();
    let map0 = |x: VertexId| first_vertices[x as usize].expect("surviving base vertex");

    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut first_edges = vec![None; spec.g0.edge_count()];
    for e in spec.g0.edges() {
        let (a, b) = e.endpoints;
        if hinge.contains(&a) || hinge.contains(&b) {
            continue;
        }
        first_edges[e.id.index()] = Some(EdgeId(pairs.len() as u32));
        pairs.push((map0(a), map0(b)));
    }
    let mut second_edges = Vec::with_capacity(gadget.edge_count());
    for e in gadget.edges() {
        second_edges.push(Some(EdgeId(pairs.len() as u32)));
        pairs.push((e.endpoints.0 + offset, e.endpoints.1 + offset));
    }
    let splices = [
        (map0(u1), boundary[0] + offset),
        (map0(v2), boundary[1] + offset),
        (map0(v3), boundary[2] + offset),
        (map0(v4), boundary[3] + offset),
        (map0(u5), boundary[4] + offset),
    ];
    let mut named = Vec::with_capacity(6);
    for (i, &(a, b)) in splices.iter().enumerate() {
        let id = EdgeId(pairs.len() as u32);
        pairs.push((a, b));
        named.push((
            format!("E{}", i + 1),
            EdgeRef {
                id,
                endpoints: if a <= b { (a, b) } else { (b, a) },
            },
        ));
    }
    named.push(("E".to_string(), named[2].1));

    let graph = Graph::build(offset + gadget.vertex_count(), &pairs)?;
    debug_assert!(graph.is_cubic());
    Ok((
        graph,
        EdgeMap {
            first_edges,
            second_edges,
            first_vertices,
            second_vertices,
            named,
        },
    ))
}

/// The base-graph edges whose psi gets multiplied by 5 under the splice:
/// everything except the seven touched edges, mapped into the output graph.
pub fn surviving_edges_for_5x(spec: &SuperpositionSpec) -> Result<Vec<EdgeRef>> {
    let touched = spec.touched_edges()?;
    let (graph, map) = superpose(spec)?;
    spec.g0
        .edges()
        .filter(|e| touched.iter().all(|t| t.id != e.id))
        .map(|e| {
            let id = map
                .edge(Side::First, e.id)
                .expect("untouched edges survive");
            graph.edge(id)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen_dot_petersen() -> (Graph, EdgeMap) {
        let p = Graph::petersen();
        let q = Graph::petersen();
        let spec = DotProductSpec::new(&p, p.edge_between(0, 1).unwrap(), &q, q.edge_between(0, 1).unwrap());
        dot_product(&spec).unwrap()
    }

    #[test]
    fn dot_product_shape() {
        let (g, map) = petersen_dot_petersen();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 27);
        assert!(g.is_cubic());
        assert!(g.is_connected());
        assert!(g.girth().unwrap() >= 5);
        for name in ["omega", "d1", "d2_prime", "d2_hat", "D1_prime", "D1_hat", "D2"] {
            let e = map.named(name).unwrap();
            assert_eq!(g.endpoints(e.id), e.endpoints);
        }
    }

    #[test]
    fn dot_product_edge_map_round_trip() {
        let p = Graph::petersen();
        let (g, map) = petersen_dot_petersen();
        for (side, source) in [(Side::First, &p), (Side::Second, &p)] {
            for e in source.edges() {
                let (a, b) = e.endpoints;
                let touches = [a, b].iter().any(|&x| x == 0 || x == 1);
                match map.edge(side, e.id) {
                    None => assert!(touches),
                    Some(new_id) => {
                        assert!(!touches);
                        let ma = map.vertex(side, a).unwrap();
                        let mb = map.vertex(side, b).unwrap();
                        let (lo, hi) = if ma <= mb { (ma, mb) } else { (mb, ma) };
                        assert_eq!(g.endpoints(new_id), (lo, hi));
                    }
                }
            }
        }
    }

    #[test]
    fn dot_product_rejects_low_girth() {
        let k4 = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = Graph::petersen();
        let spec = DotProductSpec::new(
            &k4,
            k4.edge_between(0, 1).unwrap(),
            &p,
            p.edge_between(0, 1).unwrap(),
        );
        assert!(matches!(dot_product(&spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn dot_product_rejects_bad_order() {
        let p = Graph::petersen();
        let q = Graph::petersen();
        let mut spec = DotProductSpec::new(
            &p,
            p.edge_between(0, 1).unwrap(),
            &q,
            q.edge_between(0, 1).unwrap(),
        );
        spec.u_order = Some(((2, 3), (4, 5)));
        assert!(matches!(dot_product(&spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn gadget_shape() {
        let (g, boundary) = build_gadget();
        assert_eq!(g.vertex_count(), 19);
        assert_eq!(g.edge_count(), 26);
        let profile = g.valence_profile();
        assert_eq!(profile.count(2), 5);
        assert_eq!(profile.count(3), 14);
        assert!(g.girth().unwrap() >= 5);
        assert_eq!(g.hinges().len(), 47);
        for &v in &boundary {
            assert_eq!(g.degree(v), 2);
        }
        // No edge touches two boundary vertices.
        for e in g.edges() {
            let hits = boundary
                .iter()
                .filter(|&&v| v == e.endpoints.0 || v == e.endpoints.1)
                .count();
            assert!(hits <= 1, "edge {e:?} touches {hits} boundary vertices");
        }
    }

    #[test]
    fn superposition_shape() {
        let p = Graph::petersen();
        let spec = SuperpositionSpec::new(&p, [0, 1, 2, 3, 4]);
        let (g, map) = superpose(&spec).unwrap();
        assert_eq!(g.vertex_count(), 26);
        assert_eq!(g.edge_count(), 39);
        assert!(g.is_cubic());
        assert!(g.is_connected());
        assert_eq!(g.girth().unwrap(), 5);
        for name in ["E1", "E2", "E3", "E4", "E5", "E"] {
            assert!(map.named(name).is_some(), "missing edge {name}");
        }
        assert_eq!(map.named("E"), map.named("E3"));
    }

    #[test]
    fn superposition_pendants_and_touched() {
        let p = Graph::petersen();
        let spec = SuperpositionSpec::new(&p, [0, 1, 2, 3, 4]);
        assert_eq!(spec.pendants().unwrap(), [6, 7, 8]);
        assert_eq!(spec.touched_edges().unwrap().len(), 7);
        let survivors = surviving_edges_for_5x(&spec).unwrap();
        assert_eq!(survivors.len(), 8);
        let (g, _) = superpose(&spec).unwrap();
        for e in survivors {
            assert_eq!(g.endpoints(e.id), e.endpoints);
        }
    }

    #[test]
    fn superposition_rejects_non_snark() {
        let k33_pairs: Vec<(u32, u32)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        let k33 = Graph::build(6, &k33_pairs).unwrap();
        let spec = SuperpositionSpec::new(&k33, [0, 3, 1, 4, 2]);
        assert!(matches!(superpose(&spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn superposition_rejects_broken_path() {
        let p = Graph::petersen();
        let spec = SuperpositionSpec::new(&p, [0, 1, 2, 3, 9]);
        assert!(matches!(superpose(&spec), Err(Error::InvalidSpec(_))));
    }
}

//! Kauffman states: state circles, state graphs, adequacy and state-surface data.
//!
//! For a normalized crossing `(a,b,c,d)` the A-smoothing joins `(a,d)` and
//! `(b,c)`; the B-smoothing joins `(a,b)` and `(c,d)`.

use serde::{Deserialize, Serialize};

use crate::pd::{Diagram, PdError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StateError {
    #[error(transparent)]
    Pd(#[from] PdError),
    #[error("Turaev genus is only defined here for connected diagrams")]
    Disconnected,
    #[error("state has {got} choices for {want} crossings")]
    StateLength { got: usize, want: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    /// Position pairs joined by this smoothing.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Side::A => [(0, 3), (1, 2)],
            Side::B => [(0, 1), (2, 3)],
        }
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], sets: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn count(&self) -> usize {
        self.sets
    }
}

/// Circles of one Kauffman state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resolution {
    /// Total circle count, including crossingless components.
    pub circles: usize,
    /// Circle index of each arc, indexed like [`Diagram::arcs`].
    pub circle_of_arc: Vec<usize>,
}

pub fn resolve(d: &Diagram, state: &[Side]) -> Result<Resolution, StateError> {
    if state.len() != d.crossing_count() {
        return Err(StateError::StateLength { got: state.len(), want: d.crossing_count() });
    }
    let indexed = d.indexed_crossings();
    let n = 2 * indexed.len();
    let mut uf = UnionFind::new(n);
    for (arcs, side) in indexed.iter().zip(state) {
        for (p, q) in side.pairs() {
            uf.union(arcs[p], arcs[q]);
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let circle_of_arc = (0..n)
        .map(|a| {
            let r = uf.find(a);
            match roots.iter().position(|&x| x == r) {
                Some(i) => i,
                None => {
                    roots.push(r);
                    roots.len() - 1
                }
            }
        })
        .collect();
    Ok(Resolution { circles: uf.count() + d.free_loops(), circle_of_arc })
}

pub fn all_state(d: &Diagram, side: Side) -> Vec<Side> {
    vec![side; d.crossing_count()]
}

/// State graph of the all-A or all-B state: one vertex per circle, one edge per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateGraph {
    pub vertices: usize,
    /// Edge `i` comes from crossing `i`.
    pub edges: Vec<(usize, usize)>,
}

impl StateGraph {
    /// Crossings whose edge is a 1-edge loop.
    pub fn self_loops(&self) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, (u, v))| u == v)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn state_graph(d: &Diagram, side: Side) -> StateGraph {
    let res = resolve(d, &all_state(d, side)).expect("state length matches");
    let indexed = d.indexed_crossings();
    let [(p, _), (q, _)] = side.pairs();
    let edges = indexed
        .iter()
        .map(|arcs| (res.circle_of_arc[arcs[p]], res.circle_of_arc[arcs[q]]))
        .collect();
    StateGraph { vertices: res.circles, edges }
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateSummary {
    pub v_A: usize,
    pub v_B: usize,
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub g_T_diagram: usize,
    pub loops_A: Vec<usize>,
    pub loops_B: Vec<usize>,
}

impl StateSummary {
    pub fn adequate(&self) -> bool {
        self.a_adequate && self.b_adequate
    }
}

/// Turaev genus of a connected diagram from its all-A and all-B circle counts.
pub fn turaev_genus(v_a: usize, v_b: usize, crossings: usize) -> usize {
    let twice = 2 + crossings as i64 - v_a as i64 - v_b as i64;
    assert!(twice >= 0 && twice % 2 == 0, "v_A + v_B - c must be even and at most 2");
    (twice / 2) as usize
}

pub fn adequacy(d: &Diagram) -> Result<StateSummary, StateError> {
    if !d.is_connected() {
        return Err(StateError::Disconnected);
    }
    let ga = state_graph(d, Side::A);
    let gb = state_graph(d, Side::B);
    let (loops_a, loops_b) = (ga.self_loops(), gb.self_loops());
    Ok(StateSummary {
        v_A: ga.vertices,
        v_B: gb.vertices,
        a_adequate: loops_a.is_empty(),
        b_adequate: loops_b.is_empty(),
        g_T_diagram: turaev_genus(ga.vertices, gb.vertices, d.crossing_count()),
        loops_A: loops_a,
        loops_B: loops_b,
    })
}

/// Euler characteristic, boundary count and boundary slope of a state surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub side: Side,
    pub euler: i64,
    pub boundary_components: usize,
    pub slope: i64,
}

pub fn surface_summary(d: &Diagram, side: Side) -> Result<SurfaceSummary, StateError> {
    if !d.is_knot() {
        return Err(PdError::NotAKnot { components: d.components() }.into());
    }
    let v = state_graph(d, side).vertices as i64;
    let c = d.crossing_count() as i64;
    let (plus, minus) = d.crossing_counts();
    let slope = match side {
        Side::A => -2 * minus as i64,
        Side::B => 2 * plus as i64,
    };
    Ok(SurfaceSummary { side, euler: v - c, boundary_components: 1, slope })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::{parse_pd, Sign};

    fn trefoil() -> Diagram {
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    /// Circle counts of every state by direct path tracing, independent of union-find.
    fn trace_circles(d: &Diagram, state: &[Side]) -> usize {
        let idx = d.indexed_crossings();
        let n = 2 * idx.len();
        // partner[end] for arc ends (arc, which occurrence) joined at crossings
        let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (x, arcs) in idx.iter().enumerate() {
            for p in 0..4 {
                ends[arcs[p]].push((x, p));
            }
        }
        let mut seen = vec![false; n];
        let mut circles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            circles += 1;
            let from0 = ends[start][0];
            let (mut arc, mut from) = (start, from0);
            loop {
                seen[arc] = true;
                let (x, p) = if ends[arc][0] == from { ends[arc][1] } else { ends[arc][0] };
                let q = state[x]
                    .pairs()
                    .iter()
                    .find_map(|&(a, b)| if a == p { Some(b) } else if b == p { Some(a) } else { None })
                    .unwrap();
                arc = idx[x][q];
                from = (x, q);
                if arc == start && from == from0 {
                    break;
                }
            }
        }
        circles + d.free_loops()
    }

    #[test]
    fn unknot_states() {
        let u = Diagram::unknot();
        assert_eq!(resolve(&u, &[]).unwrap().circles, 1);
        let g = state_graph(&u, Side::A);
        assert_eq!((g.vertices, g.edges.len()), (1, 0));
        let s = adequacy(&u).unwrap();
        assert_eq!((s.v_A, s.v_B, s.g_T_diagram), (1, 1, 0));
        assert!(s.adequate());
        let sa = surface_summary(&u, Side::A).unwrap();
        assert_eq!((sa.euler, sa.slope), (1, 0));
    }

    #[test]
    fn trefoil_states() {
        let d = trefoil();
        let va = resolve(&d, &all_state(&d, Side::A)).unwrap().circles;
        let vb = resolve(&d, &all_state(&d, Side::B)).unwrap().circles;
        assert_eq!((va, vb), (2, 3));
        let g = state_graph(&d, Side::A);
        assert_eq!(g.vertices, 2);
        assert_eq!(g.edges.len(), 3);
        assert!(g.self_loops().is_empty());
        assert!(g.edges.iter().all(|&(u, v)| u != v));
        let s = adequacy(&d).unwrap();
        assert!(s.adequate());
        assert_eq!(s.g_T_diagram, 0);
        assert_eq!(surface_summary(&d, Side::B).unwrap().slope, 6);
        assert_eq!(surface_summary(&d, Side::A).unwrap().slope, 0);
    }

    #[test]
    fn every_trefoil_state_matches_path_tracing() {
        let d = trefoil();
        for mask in 0..8u32 {
            let st: Vec<Side> = (0..3).map(|i| if mask >> i & 1 == 0 { Side::A } else { Side::B }).collect();
            assert_eq!(resolve(&d, &st).unwrap().circles, trace_circles(&d, &st), "state {mask:03b}");
        }
    }

    #[test]
    fn kinks() {
        let pos = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(resolve(&pos, &[Side::A]).unwrap().circles, 2);
        assert_eq!(resolve(&pos, &[Side::B]).unwrap().circles, 1);
        assert_eq!(state_graph(&pos, Side::B).self_loops(), vec![0]);
        let kinked = trefoil().with_kink(1, Sign::Positive).unwrap();
        let s = adequacy(&kinked).unwrap();
        assert!(s.a_adequate ^ s.b_adequate);
        assert_eq!(s.loops_B.len(), 1);
    }

    #[test]
    fn mirror_swaps_sides() {
        let d = trefoil().with_kink(2, Sign::Negative).unwrap();
        let (s, m) = (adequacy(&d).unwrap(), adequacy(&d.mirror()).unwrap());
        assert_eq!((s.v_A, s.v_B), (m.v_B, m.v_A));
        assert_eq!((s.a_adequate, s.b_adequate), (m.b_adequate, m.a_adequate));
    }

    #[test]
    fn json_field_names() {
        let s = adequacy(&trefoil()).unwrap();
        let j = serde_json::to_value(&s).unwrap();
        for key in ["v_A", "v_B", "a_adequate", "b_adequate", "g_T_diagram", "loops_A", "loops_B"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        let f = serde_json::to_string(&surface_summary(&trefoil(), Side::B).unwrap()).unwrap();
        assert_eq!(f, r#"{"side":"B","euler":0,"boundary_components":1,"slope":6}"#);
    }

    #[test]
    fn disconnected_rejected() {
        let split = Diagram::braid_closure("", 3, &[1, 1, 1]).unwrap();
        assert_eq!(adequacy(&split), Err(StateError::Disconnected));
    }
}

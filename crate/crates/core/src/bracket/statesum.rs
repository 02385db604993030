use rayon::prelude::*;

use super::{delta_pow, BracketError, BracketResult, Engine};
use crate::laurent::LaurentPoly;
use crate::pd::Diagram;
use crate::state::Side;

/// Union-find without path compression so unions can be undone in LIFO order.
struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
    history: Vec<Option<usize>>,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n], sets: n, history: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            self.history.push(None);
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        self.history.push(Some(b));
    }

    fn undo(&mut self) {
        if let Some(Some(b)) = self.history.pop() {
            let a = self.parent[b];
            self.parent[b] = b;
            self.size[a] -= self.size[b];
            self.sets += 1;
        }
    }
}

/// `hist[a][v]`: number of states with `a` A-smoothings and `v` circles.
type Histogram = Vec<Vec<u64>>;

fn enumerate(
    indexed: &[[usize; 4]],
    depth: usize,
    a_count: usize,
    uf: &mut RollbackUnionFind,
    hist: &mut Histogram,
) {
    if depth == indexed.len() {
        hist[a_count][uf.sets] += 1;
        return;
    }
    let arcs = indexed[depth];
    for side in [Side::A, Side::B] {
        let [(p, q), (r, s)] = side.pairs();
        uf.union(arcs[p], arcs[q]);
        uf.union(arcs[r], arcs[s]);
        enumerate(indexed, depth + 1, a_count + usize::from(side == Side::A), uf, hist);
        uf.undo();
        uf.undo();
    }
}

/// Sums `A^(#A - #B) δ^(#circles)` over all `2^c` Kauffman states.
pub fn bracket_statesum(d: &Diagram, cap: usize) -> Result<BracketResult, BracketError> {
    let c = d.crossing_count();
    if c > cap {
        return Err(BracketError::StateSumCap { crossings: c, cap });
    }
    let indexed = d.indexed_crossings();
    let arcs = 2 * c;
    // Fix the first `split` choices per block; blocks are summed independently.
    let split = c.min(6);
    let hist = (0u32..1 << split)
        .into_par_iter()
        .map(|block| {
            let mut uf = RollbackUnionFind::new(arcs);
            let mut hist: Histogram = vec![vec![0; arcs + 1]; c + 1];
            let mut a_count = 0;
            for (x, crossing) in indexed.iter().enumerate().take(split) {
                let side = if block >> x & 1 == 0 { Side::A } else { Side::B };
                a_count += usize::from(side == Side::A);
                for (p, q) in side.pairs() {
                    uf.union(crossing[p], crossing[q]);
                }
            }
            enumerate(&indexed[split..], 0, a_count, &mut uf, &mut hist);
            hist
        })
        .reduce(
            || vec![vec![0; arcs + 1]; c + 1],
            |mut acc, h| {
                for (ra, rh) in acc.iter_mut().zip(h) {
                    for (x, y) in ra.iter_mut().zip(rh) {
                        *x += y;
                    }
                }
                acc
            },
        );
    let free = d.free_loops();
    let mut value = LaurentPoly::zero();
    for (a, row) in hist.iter().enumerate() {
        for (v, &count) in row.iter().enumerate() {
            if count > 0 {
                let exp = 2 * a as i64 - c as i64;
                value += &delta_pow(v + free).shift(exp).scale(&count.into());
            }
        }
    }
    Ok(BracketResult { value, engine: Engine::Statesum, states_or_width: 1u64 << c })
}

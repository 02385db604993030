use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{delta_pow, BracketError, BracketResult, Engine};
use crate::laurent::LaurentPoly;
use crate::pd::Diagram;
use crate::state::Side;

/// A crossing order for the sweep and the open-strand count it incurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOrder {
    pub order: Vec<usize>,
    /// Largest number of open strands after any step.
    pub width: usize,
}

fn open_after(indexed: &[[usize; 4]], order: &[usize], arcs: usize) -> Vec<usize> {
    let mut seen = vec![0u8; arcs];
    let mut open = 0usize;
    let mut widths = Vec::with_capacity(order.len());
    for &x in order {
        for &a in &indexed[x] {
            seen[a] += 1;
            if seen[a] == 1 {
                open += 1;
            } else {
                open -= 1;
            }
        }
        widths.push(open);
    }
    widths
}

/// Greedy minimum-width order: from every starting crossing, repeatedly take the
/// crossing that leaves the fewest open strands; keep the best run.
pub fn sweep_order(d: &Diagram) -> SweepOrder {
    let indexed = d.indexed_crossings();
    let c = indexed.len();
    let arcs = 2 * c;
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for start in 0..c {
        let mut seen = vec![0u8; arcs];
        let mut done = vec![false; c];
        let mut order = Vec::with_capacity(c);
        let mut open = 0i64;
        let take = |x: usize, seen: &mut Vec<u8>, open: &mut i64| {
            for &a in &indexed[x] {
                seen[a] += 1;
                *open += if seen[a] == 1 { 1 } else { -1 };
            }
        };
        take(start, &mut seen, &mut open);
        done[start] = true;
        order.push(start);
        while order.len() < c {
            let mut pick = (i64::MAX, usize::MAX);
            for y in (0..c).filter(|&y| !done[y]) {
                let mut delta = 0i64;
                for (k, &a) in indexed[y].iter().enumerate() {
                    let before = seen[a] + indexed[y][..k].iter().filter(|&&b| b == a).count() as u8;
                    delta += if before == 0 { 1 } else { -1 };
                }
                if (delta, y) < pick {
                    pick = (delta, y);
                }
            }
            let y = pick.1;
            take(y, &mut seen, &mut open);
            done[y] = true;
            order.push(y);
        }
        let widths = open_after(&indexed, &order, arcs);
        let width = widths.iter().copied().max().unwrap_or(0);
        let total: usize = widths.iter().sum();
        if best.as_ref().map_or(true, |(w, t, _)| (width, total) < (*w, *t)) {
            best = Some((width, total, order));
        }
    }
    match best {
        Some((width, _, order)) => SweepOrder { order, width },
        None => SweepOrder { order: Vec::new(), width: 0 },
    }
}

trait Coeff: Clone + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += k * x`, or `None` on overflow.
    fn add_mul(&mut self, x: &Self, k: i64) -> Option<()>;
    fn into_bigint(self) -> BigInt;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_mul(&mut self, x: &Self, k: i64) -> Option<()> {
        *self = self.checked_add(x.checked_mul(k as i128)?)?;
        Some(())
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_mul(&mut self, x: &Self, k: i64) -> Option<()> {
        *self += x * k;
        Some(())
    }
    fn into_bigint(self) -> BigInt {
        self
    }
}

/// Dense Laurent polynomial `Σ coeffs[i] A^(lo + i)`.
#[derive(Clone)]
struct Dense<T> {
    lo: i64,
    coeffs: Vec<T>,
}

impl<T: Coeff> Dense<T> {
    fn empty() -> Self {
        Self { lo: 0, coeffs: Vec::new() }
    }

    fn hi(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    fn ensure(&mut self, lo: i64, hi: i64) {
        if self.coeffs.is_empty() {
            self.lo = lo;
            self.coeffs = vec![T::zero(); (hi - lo + 1) as usize];
            return;
        }
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            let mut v = vec![T::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.lo = lo;
        }
        if hi > self.hi() {
            let len = (hi - self.lo + 1) as usize;
            self.coeffs.resize(len, T::zero());
        }
    }

    /// `self += src · A^shift · factor`, where `factor` is a sparse small-integer polynomial.
    fn add_product(&mut self, src: &Self, shift: i64, factor: &[(i64, i64)]) -> Option<()> {
        if src.coeffs.is_empty() {
            return Some(());
        }
        let (fmin, fmax) = (factor[0].0, factor[factor.len() - 1].0);
        self.ensure(src.lo + shift + fmin, src.hi() + shift + fmax);
        for &(e, k) in factor {
            let base = (src.lo + shift + e - self.lo) as usize;
            for (i, x) in src.coeffs.iter().enumerate() {
                if !x.is_zero() {
                    self.coeffs[base + i].add_mul(x, k)?;
                }
            }
        }
        Some(())
    }

    fn into_laurent(self) -> LaurentPoly {
        let lo = self.lo;
        LaurentPoly::from_terms(
            self.coeffs
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c.into_bigint())),
        )
    }
}

impl<T: Coeff + From<i32>> Dense<T> {
    fn unit() -> Self {
        Self { lo: 0, coeffs: vec![T::from(1)] }
    }
}

/// How a crossing position's strand continues before this crossing is absorbed.
#[derive(Clone, Copy)]
enum Link {
    /// Through processed crossings to the open strand in the given old slot.
    Open(usize),
    /// The arc's other end is also at this crossing, at the given position.
    OwnLoop(usize),
    /// A fresh arc that becomes open in the given new slot.
    Fresh(usize),
}

#[derive(Clone, Copy, PartialEq)]
enum End {
    Token(usize),
    Slot(usize),
}

struct Step {
    links: [Link; 4],
    /// Position at this crossing of each old slot's arc, if it ends here.
    slot_pos: Vec<Option<usize>>,
    old_to_new: Vec<Option<usize>>,
    new_len: usize,
}

fn plan_steps(indexed: &[[usize; 4]], order: &[usize], arcs: usize) -> Vec<Step> {
    let mut slot_of: Vec<Option<usize>> = vec![None; arcs];
    let mut open: Vec<usize> = Vec::new();
    let mut steps = Vec::with_capacity(order.len());
    for &x in order {
        let cr = indexed[x];
        let mut slot_pos = vec![None; open.len()];
        for (p, &a) in cr.iter().enumerate() {
            if let Some(s) = slot_of[a] {
                slot_pos[s] = Some(p);
            }
        }
        let mut new_open: Vec<usize> = Vec::new();
        let mut old_to_new = vec![None; open.len()];
        for (s, &a) in open.iter().enumerate() {
            if slot_pos[s].is_none() {
                old_to_new[s] = Some(new_open.len());
                new_open.push(a);
            }
        }
        let mut links = [Link::Fresh(0); 4];
        for (p, &a) in cr.iter().enumerate() {
            links[p] = if let Some(s) = slot_of[a] {
                Link::Open(s)
            } else if let Some(q) = (0..4).find(|&q| q != p && cr[q] == a) {
                Link::OwnLoop(q)
            } else {
                new_open.push(a);
                Link::Fresh(new_open.len() - 1)
            };
        }
        for &a in &open {
            slot_of[a] = None;
        }
        for (s, &a) in new_open.iter().enumerate() {
            slot_of[a] = Some(s);
        }
        steps.push(Step { links, slot_pos, old_to_new, new_len: new_open.len() });
        open = new_open;
    }
    steps
}

/// Applies one smoothing to one pairing; returns the new pairing and the closed loop count.
fn absorb(step: &Step, key: &[u8], side: Side) -> (Vec<u8>, usize) {
    let mut smooth = [0usize; 4];
    for (p, q) in side.pairs() {
        smooth[p] = q;
        smooth[q] = p;
    }
    let mut other = [End::Slot(0); 4];
    for p in 0..4 {
        other[p] = match step.links[p] {
            Link::Open(s) => {
                let partner = key[s] as usize;
                match step.slot_pos[partner] {
                    Some(q) => End::Token(q),
                    None => End::Slot(step.old_to_new[partner].expect("surviving slot")),
                }
            }
            Link::OwnLoop(q) => End::Token(q),
            Link::Fresh(s) => End::Slot(s),
        };
    }
    let mut next = vec![0u8; step.new_len];
    for (s, &partner) in key.iter().enumerate() {
        if let (Some(ns), Some(np)) = (step.old_to_new[s], step.old_to_new[partner as usize]) {
            next[ns] = np as u8;
        }
    }
    let mut visited = [false; 4];
    for p in 0..4 {
        let End::Slot(from) = other[p] else { continue };
        if visited[p] {
            continue;
        }
        let mut cur = p;
        loop {
            visited[cur] = true;
            let q = smooth[cur];
            visited[q] = true;
            match other[q] {
                End::Slot(to) => {
                    next[from] = to as u8;
                    next[to] = from as u8;
                    break;
                }
                End::Token(r) => cur = r,
            }
        }
    }
    let mut loops = 0;
    for p in 0..4 {
        if visited[p] {
            continue;
        }
        loops += 1;
        let mut cur = p;
        loop {
            visited[cur] = true;
            let q = smooth[cur];
            visited[q] = true;
            match other[q] {
                End::Token(r) if r == p => break,
                End::Token(r) => cur = r,
                End::Slot(_) => unreachable!("closed loop reached an open strand"),
            }
        }
    }
    (next, loops)
}

fn delta_factor(k: usize) -> Vec<(i64, i64)> {
    delta_pow(k)
        .terms()
        .iter()
        .map(|(e, c)| (*e, i64::try_from(c).expect("small delta power")))
        .collect()
}

fn run<T: Coeff + From<i32>>(steps: &[Step]) -> Option<Dense<T>> {
    let factors: Vec<Vec<(i64, i64)>> = (0..=4).map(delta_factor).collect();
    let mut states: HashMap<Vec<u8>, Dense<T>> = HashMap::new();
    states.insert(Vec::new(), Dense::unit());
    for step in steps {
        let mut next: HashMap<Vec<u8>, Dense<T>> = HashMap::with_capacity(states.len() * 2);
        for (key, poly) in &states {
            for (side, shift) in [(Side::A, 1), (Side::B, -1)] {
                let (k, loops) = absorb(step, key, side);
                next.entry(k)
                    .or_insert_with(Dense::empty)
                    .add_product(poly, shift, &factors[loops])?;
            }
        }
        states = next;
    }
    states.remove(&Vec::new())
}

/// Sweep-line Temperley-Lieb contraction; refuses when the best order exceeds `width_cap`.
pub fn bracket_sweep(d: &Diagram, width_cap: usize) -> Result<BracketResult, BracketError> {
    let order = sweep_order(d);
    if order.width > width_cap || order.width > u8::MAX as usize {
        return Err(BracketError::WidthCap { width: order.width, cap: width_cap });
    }
    let indexed = d.indexed_crossings();
    let steps = plan_steps(&indexed, &order.order, 2 * indexed.len());
    let body = match run::<i128>(&steps) {
        Some(p) => p.into_laurent(),
        None => run::<BigInt>(&steps).expect("big integers never overflow").into_laurent(),
    };
    let value = &body * &delta_pow(d.free_loops());
    Ok(BracketResult { value, engine: Engine::Sweep, states_or_width: order.width as u64 })
}

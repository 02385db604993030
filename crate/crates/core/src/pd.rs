//! Planar-diagram (PD) knot and link diagrams.
//!
//! A crossing is written `X(a,b,c,d)`: the four incident arc labels listed
//! counterclockwise, starting at the incoming under-strand. Once a diagram is
//! built every crossing is stored in this normalized form, so position 0 is
//! always the incoming under-strand and position 2 the outgoing one. The sign
//! then records the over-strand direction: positive when it runs from
//! position 1 to position 3, negative when it runs from 3 to 1.
//!
//! Orientation of a parsed diagram is chosen per component: start at the
//! lowest arc label and travel toward the smaller neighbouring label (ties go
//! to the end that enters a crossing at position 0).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

pub type ArcId = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PdError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("arc {arc} appears {count} times; every arc must appear exactly twice")]
    ArcMultiplicity { arc: ArcId, count: usize },
    #[error("arc {arc} appears only once (open strand)")]
    OpenStrand { arc: ArcId },
    #[error("arc labels must be positive integers")]
    ZeroLabel,
    #[error("diagram declares {declared} components but its arcs close into {derived}")]
    ComponentMismatch { declared: usize, derived: usize },
    #[error("operation needs a knot diagram (1 component), got {components} components")]
    NotAKnot { components: usize },
    #[error("inconsistent orientation at arc {arc}")]
    Orientation { arc: ArcId },
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("braid generator {generator} out of range for {strands} strands")]
    BraidGenerator { generator: i32, strands: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// Position at which the over-strand enters a normalized crossing.
    pub(crate) fn over_in(self) -> usize {
        match self {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
    pub sign: Sign,
}

impl Crossing {
    fn is_incoming(&self, pos: usize) -> bool {
        pos == 0 || pos == self.sign.over_in()
    }
}

/// A knot or link diagram with normalized, signed crossings.
///
/// Components that pass through no crossing are kept as a count of free loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    label: String,
    crossings: Vec<Crossing>,
    components: usize,
}

/// Wire form of a diagram: `{ "label": ..., "pd": [[a,b,c,d], ...], "components": k }`.
///
/// `components` is only needed for crossingless components and is omitted when
/// it equals the number of arc cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    #[serde(default)]
    pub label: String,
    pub pd: Vec<[ArcId; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Occurrence {
    crossing: usize,
    pos: usize,
}

fn occurrences(codes: &[[ArcId; 4]]) -> Result<BTreeMap<ArcId, [Occurrence; 2]>, PdError> {
    let mut raw: BTreeMap<ArcId, Vec<Occurrence>> = BTreeMap::new();
    for (crossing, code) in codes.iter().enumerate() {
        for (pos, &arc) in code.iter().enumerate() {
            if arc == 0 {
                return Err(PdError::ZeroLabel);
            }
            raw.entry(arc).or_default().push(Occurrence { crossing, pos });
        }
    }
    let mut out = BTreeMap::new();
    for (arc, occ) in raw {
        match occ.len() {
            1 => return Err(PdError::OpenStrand { arc }),
            2 => {
                out.insert(arc, [occ[0], occ[1]]);
            }
            count => return Err(PdError::ArcMultiplicity { arc, count }),
        }
    }
    Ok(out)
}

fn other(occ: &[Occurrence; 2], this: Occurrence) -> Occurrence {
    if occ[0] == this {
        occ[1]
    } else {
        occ[0]
    }
}

impl Diagram {
    /// Builds a diagram from raw PD codes, inferring orientation and signs.
    pub fn from_pd_codes(
        label: impl Into<String>,
        codes: &[[ArcId; 4]],
        components: Option<usize>,
    ) -> Result<Self, PdError> {
        let occ = occurrences(codes)?;
        // entered[x][p]: the orientation travels into crossing x through position p.
        let mut entered = vec![[false; 4]; codes.len()];
        let mut visited: HashMap<ArcId, bool> = HashMap::new();
        let mut cycles = 0;
        for (&start, start_occ) in &occ {
            if visited.contains_key(&start) {
                continue;
            }
            cycles += 1;
            let next_of = |o: Occurrence| codes[o.crossing][(o.pos + 2) % 4];
            let (a, b) = (start_occ[0], start_occ[1]);
            let head = match next_of(a).cmp(&next_of(b)) {
                std::cmp::Ordering::Less => a,
                std::cmp::Ordering::Greater => b,
                std::cmp::Ordering::Equal if b.pos == 0 && a.pos != 0 => b,
                std::cmp::Ordering::Equal => a,
            };
            let mut arc = start;
            let mut at = head;
            loop {
                visited.insert(arc, true);
                entered[at.crossing][at.pos] = true;
                let exit = Occurrence { crossing: at.crossing, pos: (at.pos + 2) % 4 };
                arc = codes[exit.crossing][exit.pos];
                at = other(&occ[&arc], exit);
                if arc == start {
                    break;
                }
            }
        }
        let mut crossings = Vec::with_capacity(codes.len());
        for (x, code) in codes.iter().enumerate() {
            let under_forward = entered[x][0];
            if under_forward == entered[x][2] {
                return Err(PdError::Orientation { arc: code[0] });
            }
            let over_forward = entered[x][1];
            let sign = if under_forward == over_forward { Sign::Positive } else { Sign::Negative };
            let arcs = if under_forward { *code } else { [code[2], code[3], code[0], code[1]] };
            crossings.push(Crossing { arcs, sign });
        }
        let components = match components {
            None => cycles,
            Some(k) if k >= cycles => k,
            Some(k) => return Err(PdError::ComponentMismatch { declared: k, derived: cycles }),
        };
        Ok(Self { label: label.into(), crossings, components })
    }

    /// Builds a diagram from crossings that are already normalized and signed.
    pub(crate) fn from_oriented(
        label: impl Into<String>,
        crossings: Vec<Crossing>,
        components: usize,
    ) -> Result<Self, PdError> {
        let codes: Vec<[ArcId; 4]> = crossings.iter().map(|c| c.arcs).collect();
        let occ = occurrences(&codes)?;
        for (&arc, o) in &occ {
            let ins = o
                .iter()
                .filter(|oc| crossings[oc.crossing].is_incoming(oc.pos))
                .count();
            if ins != 1 {
                return Err(PdError::Orientation { arc });
            }
        }
        let d = Self { label: label.into(), crossings, components };
        let cycles = d.arc_cycles().len();
        if components < cycles {
            return Err(PdError::ComponentMismatch { declared: components, derived: cycles });
        }
        Ok(d)
    }

    pub fn unknot() -> Self {
        Self { label: "0_1".into(), crossings: Vec::new(), components: 1 }
    }

    pub fn empty() -> Self {
        Self { label: String::new(), crossings: Vec::new(), components: 0 }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// Components that pass through no crossing.
    pub fn free_loops(&self) -> usize {
        self.components - self.arc_cycles().len()
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    fn require_knot(&self) -> Result<(), PdError> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(PdError::NotAKnot { components: self.components })
        }
    }

    pub fn crossing_counts(&self) -> (usize, usize) {
        let plus = self.crossings.iter().filter(|c| c.sign == Sign::Positive).count();
        (plus, self.crossings.len() - plus)
    }

    pub fn writhe(&self) -> Result<i64, PdError> {
        self.require_knot()?;
        Ok(self.crossings.iter().map(|c| c.sign.value()).sum())
    }

    /// Arc labels in increasing order.
    pub fn arcs(&self) -> Vec<ArcId> {
        let mut arcs: Vec<ArcId> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        arcs.sort_unstable();
        arcs.dedup();
        arcs
    }

    /// Crossings with arc labels compacted to `0..2c`, in the order of [`Diagram::arcs`].
    pub fn indexed_crossings(&self) -> Vec<[usize; 4]> {
        let arcs = self.arcs();
        let index: HashMap<ArcId, usize> = arcs.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        self.crossings
            .iter()
            .map(|c| c.arcs.map(|a| index[&a]))
            .collect()
    }

    fn occurrence_map(&self) -> BTreeMap<ArcId, [Occurrence; 2]> {
        let codes: Vec<[ArcId; 4]> = self.crossings.iter().map(|c| c.arcs).collect();
        occurrences(&codes).expect("diagram invariants checked at construction")
    }

    /// Each crossing-carrying component as the list of its arcs in orientation order.
    pub fn arc_cycles(&self) -> Vec<Vec<ArcId>> {
        let occ = self.occurrence_map();
        let mut seen: HashMap<ArcId, ()> = HashMap::new();
        let mut cycles = Vec::new();
        // Start each component at an arc entering a crossing at position 0 when one exists.
        let mut starts: Vec<ArcId> = self.crossings.iter().map(|c| c.arcs[0]).collect();
        starts.extend(self.crossings.iter().map(|c| c.arcs[c.sign.over_in()]));
        for start in starts {
            if seen.contains_key(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut arc = start;
            loop {
                seen.insert(arc, ());
                cycle.push(arc);
                let head = occ[&arc]
                    .iter()
                    .copied()
                    .find(|o| self.crossings[o.crossing].is_incoming(o.pos))
                    .expect("oriented arc has a head");
                arc = self.crossings[head.crossing].arcs[(head.pos + 2) % 4];
                if arc == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Whether the underlying projection is connected.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.components <= 1;
        }
        if self.free_loops() > 0 {
            return false;
        }
        let mut uf = crate::state::UnionFind::new(self.crossings.len());
        for o in self.occurrence_map().values() {
            uf.union(o[0].crossing, o[1].crossing);
        }
        uf.count() == 1
    }

    /// Whether over and under passages alternate along every component.
    pub fn is_alternating(&self) -> bool {
        let occ = self.occurrence_map();
        self.arc_cycles().iter().all(|cycle| {
            let unders: Vec<bool> = cycle
                .iter()
                .map(|arc| {
                    occ[arc]
                        .iter()
                        .find(|o| self.crossings[o.crossing].is_incoming(o.pos))
                        .map(|o| o.pos == 0)
                        .expect("oriented arc has a head")
                })
                .collect();
            (0..unders.len()).all(|i| unders[i] != unders[(i + 1) % unders.len()])
        })
    }

    /// Renames arcs `1..=2c` consecutively along each component's orientation.
    pub fn relabeled(&self) -> Diagram {
        let mut map: HashMap<ArcId, ArcId> = HashMap::new();
        let mut next = 1;
        for cycle in self.arc_cycles() {
            for arc in cycle {
                map.insert(arc, next);
                next += 1;
            }
        }
        Diagram {
            label: self.label.clone(),
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing { arcs: c.arcs.map(|a| map[&a]), sign: c.sign })
                .collect(),
            components: self.components,
        }
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Diagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.arcs;
                let arcs = match c.sign {
                    Sign::Positive => [b, cc, d, a],
                    Sign::Negative => [d, a, b, cc],
                };
                Crossing { arcs, sign: c.sign.flipped() }
            })
            .collect();
        Diagram { label: self.label.clone(), crossings, components: self.components }
    }

    /// The blackboard-framed `m`-cable: `m` parallel copies of every strand.
    ///
    /// Each crossing becomes an `m × m` grid of crossings with the original sign,
    /// so the result has `m²·c` crossings and `m` components.
    pub fn cable(&self, m: usize) -> Result<Diagram, PdError> {
        self.require_knot()?;
        let label = format!("{}^{m}", self.label);
        if m == 0 {
            return Ok(Diagram::empty().with_label(label));
        }
        if m == 1 {
            return Ok(self.clone());
        }
        #[derive(Hash, PartialEq, Eq, Clone, Copy)]
        enum Seg {
            // copy `k` of an original arc, counted from the left of its direction of travel
            Boundary(ArcId, usize),
            Vertical(usize, usize, usize),
            Horizontal(usize, usize, usize),
        }
        let mut ids: HashMap<Seg, ArcId> = HashMap::new();
        let mut id = |s: Seg| {
            let n = ids.len() as ArcId + 1;
            *ids.entry(s).or_insert(n)
        };
        let mut crossings = Vec::with_capacity(m * m * self.crossings.len());
        for (x, c) in self.crossings.iter().enumerate() {
            let [i, j, k, l] = c.arcs;
            // Under-strand runs south to north with copy u at column u. The over-strand
            // runs east to west when positive (copy v at row v) and west to east otherwise.
            for row in 0..m {
                let copy = match c.sign {
                    Sign::Positive => row,
                    Sign::Negative => m - 1 - row,
                };
                for col in 0..m {
                    let south = if row == 0 { Seg::Boundary(i, col) } else { Seg::Vertical(x, col, row) };
                    let north = if row == m - 1 { Seg::Boundary(k, col) } else { Seg::Vertical(x, col, row + 1) };
                    let west = if col == 0 { Seg::Boundary(l, copy) } else { Seg::Horizontal(x, row, col) };
                    let east = if col == m - 1 { Seg::Boundary(j, copy) } else { Seg::Horizontal(x, row, col + 1) };
                    crossings.push(Crossing {
                        arcs: [id(south), id(east), id(north), id(west)],
                        sign: c.sign,
                    });
                }
            }
        }
        let d = Diagram::from_oriented(label, crossings, m * self.components)?;
        Ok(d.relabeled())
    }

    /// Adds a Reidemeister I curl of the given sign on `arc`.
    ///
    /// On a crossingless unknot the curl is added to the free loop and `arc` is ignored.
    pub fn with_kink(&self, arc: ArcId, sign: Sign) -> Result<Diagram, PdError> {
        self.require_knot()?;
        if self.crossings.is_empty() {
            let code = match sign {
                Sign::Positive => [1, 2, 2, 1],
                Sign::Negative => [1, 1, 2, 2],
            };
            return Diagram::from_pd_codes(self.label.clone(), &[code], None);
        }
        let occ = self.occurrence_map();
        let o = *occ
            .get(&arc)
            .ok_or_else(|| PdError::InvalidMove(format!("no arc {arc}")))?;
        let max = *occ.keys().last().unwrap_or(&0);
        let (loop_arc, tail) = (max + 1, max + 2);
        let mut codes: Vec<[ArcId; 4]> = self.crossings.iter().map(|c| c.arcs).collect();
        codes[o[1].crossing][o[1].pos] = tail;
        codes.push(match sign {
            Sign::Positive => [arc, loop_arc, loop_arc, tail],
            Sign::Negative => [arc, tail, loop_arc, loop_arc],
        });
        Ok(Diagram::from_pd_codes(self.label.clone(), &codes, None)?.relabeled())
    }

    /// Adds a Reidemeister II bigon next to `crossing`: the arc at position `pos`
    /// is pushed across the arc at `pos + 1` (counterclockwise neighbour), either
    /// over it or under it.
    pub fn with_r2(&self, crossing: usize, pos: usize, over: bool) -> Result<Diagram, PdError> {
        self.require_knot()?;
        let c = self
            .crossings
            .get(crossing)
            .ok_or_else(|| PdError::InvalidMove(format!("no crossing {crossing}")))?;
        let pos = pos % 4;
        let (alpha, beta) = (c.arcs[pos], c.arcs[(pos + 1) % 4]);
        if alpha == beta {
            return Err(PdError::InvalidMove("R2 needs two distinct arcs".into()));
        }
        let max = *self.arcs().last().unwrap_or(&0);
        let (a1, a2, b1, b2) = (max + 1, max + 2, max + 3, max + 4);
        let mut codes: Vec<[ArcId; 4]> = self.crossings.iter().map(|c| c.arcs).collect();
        codes[crossing][pos] = a1;
        codes[crossing][(pos + 1) % 4] = b1;
        // alpha and beta keep their labels at their far ends.
        if over {
            codes.push([b1, a1, b2, a2]);
            codes.push([b2, alpha, beta, a2]);
        } else {
            codes.push([a1, b2, a2, b1]);
            codes.push([a2, b2, alpha, beta]);
        }
        Ok(Diagram::from_pd_codes(self.label.clone(), &codes, None)?.relabeled())
    }

    /// Closure of a braid word on `strands` strands; `i` is `σ_i`, `-i` its inverse.
    ///
    /// Strands run upward and `σ_i` is a positive crossing.
    pub fn braid_closure(label: impl Into<String>, strands: usize, word: &[i32]) -> Result<Diagram, PdError> {
        let mut current: Vec<ArcId> = (1..=strands as ArcId).collect();
        let mut next = strands as ArcId + 1;
        let mut crossings: Vec<Crossing> = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if g == 0 || i >= strands {
                return Err(PdError::BraidGenerator { generator: g, strands });
            }
            let (bl, br) = (current[i - 1], current[i]);
            let (tl, tr) = (next, next + 1);
            next += 2;
            crossings.push(if g > 0 {
                Crossing { arcs: [bl, br, tr, tl], sign: Sign::Positive }
            } else {
                Crossing { arcs: [br, tr, tl, bl], sign: Sign::Negative }
            });
            current[i - 1] = tl;
            current[i] = tr;
        }
        // Close up: the top arc of every column is its bottom arc.
        let close: HashMap<ArcId, ArcId> = current
            .iter()
            .enumerate()
            .filter(|(col, &top)| top != *col as ArcId + 1)
            .map(|(col, &top)| (top, col as ArcId + 1))
            .collect();
        for c in &mut crossings {
            for a in &mut c.arcs {
                if let Some(&b) = close.get(a) {
                    *a = b;
                }
            }
        }
        // Components: cycles of the strand permutation.
        let mut perm: Vec<usize> = (0..strands).collect();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        let mut seen = vec![false; strands];
        let mut components = 0;
        for s in 0..strands {
            if !seen[s] {
                components += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        Ok(Diagram::from_oriented(label, crossings, components)?.relabeled())
    }

    pub fn to_json(&self) -> DiagramJson {
        let cycles = self.arc_cycles().len();
        DiagramJson {
            label: self.label.clone(),
            pd: self.crossings.iter().map(|c| c.arcs).collect(),
            components: (cycles != self.components).then_some(self.components),
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Diagram, PdError> {
        Diagram::from_pd_codes(j.label.clone(), &j.pd, j.components)
    }

    /// `X(a,b,c,d) X(...)`, one space between crossings.
    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|c| format!("X({},{},{},{})", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = DiagramJson::deserialize(d)?;
        Diagram::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Parses PD text: `X(a,b,c,d)` terms separated by commas and/or whitespace.
pub fn parse_pd(text: &str) -> Result<Diagram, PdError> {
    parse_pd_codes(text).and_then(|codes| Diagram::from_pd_codes("", &codes, None))
}

pub fn parse_pd_codes(text: &str) -> Result<Vec<[ArcId; 4]>, PdError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let err = |position: usize, message: &str| PdError::Parse { position, message: message.to_string() };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut codes = Vec::new();
    loop {
        while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
            pos += 1;
        }
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'X' {
            return Err(err(pos, "expected 'X'"));
        }
        pos += 1;
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b'(') {
            return Err(err(pos, "expected '('"));
        }
        pos += 1;
        let mut code = [0; 4];
        for (k, slot) in code.iter_mut().enumerate() {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected a positive integer arc label"));
            }
            *slot = text[start..pos]
                .parse::<ArcId>()
                .map_err(|_| err(start, "arc label out of range"))?;
            if *slot == 0 {
                return Err(err(start, "arc labels must be positive"));
            }
            skip_ws(&mut pos);
            let want = if k == 3 { b')' } else { b',' };
            if bytes.get(pos) != Some(&want) {
                return Err(err(pos, if k == 3 { "expected ')'" } else { "expected ','" }));
            }
            pos += 1;
        }
        codes.push(code);
    }
    Ok(codes)
}

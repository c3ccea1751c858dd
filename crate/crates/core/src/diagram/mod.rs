//! Planar link diagrams in PD form.
//!
//! A crossing is `X[a,b,c,d]`: the four arc labels met counterclockwise,
//! starting from the incoming under-arc. Slots 0 and 2 carry the under strand,
//! slots 1 and 3 the over strand. On a positive crossing the over strand runs
//! from slot 3 to slot 1, on a negative one from slot 1 to slot 3.

mod build;
mod moves;
mod pd;
mod simplify;

use std::collections::{HashMap, VecDeque};

pub use build::{circular_plat_diagram, closure_diagram, ClosureKind};
pub use moves::Move;
pub use simplify::{certify_unknot, simplify, UnknotCertificate, DEFAULT_BUDGET};

use crate::{Error, Result, Sign};

/// A dart is a (crossing, slot) pair.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub slots: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(slots: [usize; 4], sign: Sign) -> Crossing {
        Crossing { slots, sign }
    }

    pub fn under_in(&self) -> usize {
        self.slots[0]
    }

    pub fn under_out(&self) -> usize {
        self.slots[2]
    }

    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Pos => self.slots[3],
            Sign::Neg => self.slots[1],
        }
    }

    pub fn over_out(&self) -> usize {
        match self.sign {
            Sign::Pos => self.slots[1],
            Sign::Neg => self.slots[3],
        }
    }

    /// Whether the strand through `slot` leaves the crossing there.
    pub fn is_outgoing(&self, slot: usize) -> bool {
        match slot {
            0 => false,
            2 => true,
            1 => self.sign == Sign::Pos,
            _ => self.sign == Sign::Neg,
        }
    }

    /// Odd slots belong to the over strand.
    pub fn is_over_slot(slot: usize) -> bool {
        slot % 2 == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl LinkDiagram {
    /// Checks that labels are positive, each label occurs exactly twice (once
    /// entering and once leaving a crossing) and that the diagram is planar.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<LinkDiagram> {
        let d = LinkDiagram { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_parts(crossings: Vec<Crossing>, free_loops: usize) -> LinkDiagram {
        let d = LinkDiagram { crossings, free_loops };
        debug_assert!(d.validate().is_ok(), "invalid diagram {d:?}");
        d
    }

    /// The crossing-free round unknot.
    pub fn unknot() -> LinkDiagram {
        LinkDiagram { crossings: Vec::new(), free_loops: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossing-free loops carried alongside the crossings.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.as_i64()).sum()
    }

    /// All arc labels in increasing order.
    pub fn labels(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.crossings.iter().flat_map(|c| c.slots).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn validate(&self) -> Result<()> {
        let mut seen: HashMap<usize, (usize, usize)> = HashMap::new();
        for c in &self.crossings {
            for (k, &label) in c.slots.iter().enumerate() {
                if label == 0 {
                    return Err(Error::Malformed("arc labels must be positive".into()));
                }
                let e = seen.entry(label).or_default();
                if c.is_outgoing(k) {
                    e.1 += 1;
                } else {
                    e.0 += 1;
                }
            }
        }
        for (label, (ins, outs)) in seen {
            if ins + outs != 2 {
                return Err(Error::Malformed(format!(
                    "arc {label} occurs {} times; every arc needs exactly two ends",
                    ins + outs
                )));
            }
            if ins != 1 {
                return Err(Error::Malformed(format!(
                    "arc {label} is not oriented consistently (it must enter one crossing and leave one)"
                )));
            }
        }
        if !self.is_planar() {
            return Err(Error::Malformed("crossing data does not describe a planar diagram".into()));
        }
        Ok(())
    }

    pub(crate) fn adjacency(&self) -> Adjacency {
        Adjacency::new(&self.crossings)
    }

    /// Face boundaries as dart cycles. Dart `(c, s)` stands for the corner of
    /// crossing `c` between slots `s - 1` and `s`.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        self.adjacency().faces()
    }

    /// Connected pieces of the crossing graph, as sorted crossing indices.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let n = self.crossings.len();
        let mut piece_of = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if piece_of[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            piece_of[s] = id;
            let mut stack = vec![s];
            while let Some(c) = stack.pop() {
                for k in 0..4 {
                    let (d, _) = adj.opp((c, k));
                    if piece_of[d] == usize::MAX {
                        piece_of[d] = id;
                        members.push(d);
                        stack.push(d);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Number of split pieces, counting each free loop as its own piece.
    pub fn piece_count(&self) -> usize {
        self.pieces().len() + self.free_loops
    }

    pub fn is_split(&self) -> bool {
        self.piece_count() > 1
    }

    /// Each connected planar piece with `c` crossings has `c + 2` faces.
    pub fn is_planar(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        let faces = self.faces().len();
        faces == self.crossings.len() + 2 * self.pieces().len()
    }

    /// Closed strands as label cycles in orientation order (free loops excluded).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let entry = self.entry_darts();
        let mut done: HashMap<usize, bool> = HashMap::new();
        let mut out = Vec::new();
        for c in &self.crossings {
            for &start in &c.slots {
                if done.contains_key(&start) {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut label = start;
                loop {
                    done.insert(label, true);
                    cycle.push(label);
                    let (ci, s) = entry[&label];
                    label = self.crossings[ci].slots[(s + 2) % 4];
                    if label == start {
                        break;
                    }
                }
                out.push(cycle);
            }
        }
        out
    }

    /// Number of closed loops, free loops included.
    pub fn component_count(&self) -> usize {
        self.components().len() + self.free_loops
    }

    /// For every label, the dart where it enters a crossing.
    fn entry_darts(&self) -> HashMap<usize, Dart> {
        let mut entry = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for k in 0..4 {
                if !c.is_outgoing(k) {
                    entry.insert(c.slots[k], (ci, k));
                }
            }
        }
        entry
    }

    /// Renumbers arcs `1, 2, ...` by traversal: scan crossings and slots in
    /// order, and walk each newly met strand along its orientation.
    pub fn canonical(&self) -> LinkDiagram {
        let entry = self.entry_darts();
        let mut map: HashMap<usize, usize> = HashMap::new();
        let mut next = 1;
        for c in &self.crossings {
            for &start in &c.slots {
                if map.contains_key(&start) {
                    continue;
                }
                let mut label = start;
                loop {
                    map.insert(label, next);
                    next += 1;
                    let (ci, s) = entry[&label];
                    label = self.crossings[ci].slots[(s + 2) % 4];
                    if label == start {
                        break;
                    }
                }
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing { slots: c.slots.map(|l| map[&l]), sign: c.sign })
            .collect();
        LinkDiagram { crossings, free_loops: self.free_loops }
    }

    /// The diagram formed by a subset of crossings closed under arc adjacency.
    pub fn sub_diagram(&self, crossings: &[usize]) -> LinkDiagram {
        let cs = crossings.iter().map(|&i| self.crossings[i]).collect();
        LinkDiagram::from_parts(cs, 0)
    }

    /// Isomorphism-invariant encoding used to deduplicate search states.
    pub fn encoding(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut per_piece: Vec<Vec<usize>> = self
            .pieces()
            .iter()
            .map(|piece| {
                piece
                    .iter()
                    .map(|&s| self.encode_from(&adj, s))
                    .min()
                    .expect("pieces are nonempty")
            })
            .collect();
        per_piece.sort();
        let mut out = Vec::new();
        for p in per_piece {
            out.push(p.len());
            out.extend(p);
        }
        out.push(usize::MAX);
        out.push(self.free_loops);
        out
    }

    fn encode_from(&self, adj: &Adjacency, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut seen: HashMap<usize, ()> = HashMap::from([(start, ())]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for k in 0..4 {
                let (d, _) = adj.opp((c, k));
                if seen.insert(d, ()).is_none() {
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut out = Vec::with_capacity(order.len() * 5);
        for &c in &order {
            let x = &self.crossings[c];
            out.push(if x.sign == Sign::Pos { 1 } else { 0 });
            for l in x.slots {
                let n = relabel.len() + 1;
                out.push(*relabel.entry(l).or_insert(n));
            }
        }
        out
    }

    /// Mirror image: every crossing changes sign, with slots rotated so that
    /// slot 0 is again the incoming under-arc.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.slots;
                // The old over strand becomes the under strand.
                match c.sign {
                    Sign::Pos => Crossing::new([d, a, b, cc], Sign::Neg),
                    Sign::Neg => Crossing::new([b, cc, d, a], Sign::Pos),
                }
            })
            .collect();
        LinkDiagram::from_parts(crossings, self.free_loops)
    }
}

/// Dart partner table: `opp((c, s))` is the other end of the arc at `(c, s)`.
pub(crate) struct Adjacency {
    opp: Vec<[Dart; 4]>,
}

impl Adjacency {
    fn new(crossings: &[Crossing]) -> Adjacency {
        let mut first: HashMap<usize, Dart> = HashMap::new();
        let mut opp = vec![[(usize::MAX, 0); 4]; crossings.len()];
        for (ci, c) in crossings.iter().enumerate() {
            for (k, &l) in c.slots.iter().enumerate() {
                if let Some(&(cj, kj)) = first.get(&l) {
                    opp[ci][k] = (cj, kj);
                    opp[cj][kj] = (ci, k);
                } else {
                    first.insert(l, (ci, k));
                }
            }
        }
        Adjacency { opp }
    }

    pub(crate) fn opp(&self, d: Dart) -> Dart {
        self.opp[d.0][d.1]
    }

    /// Next dart around the face containing `d`.
    pub(crate) fn phi(&self, d: Dart) -> Dart {
        let (c, s) = self.opp(d);
        (c, (s + 1) % 4)
    }

    pub(crate) fn faces(&self) -> Vec<Vec<Dart>> {
        let n = self.opp.len();
        let mut seen = vec![[false; 4]; n];
        let mut out = Vec::new();
        for c in 0..n {
            for s in 0..4 {
                if seen[c][s] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (c, s);
                while !seen[d.0][d.1] {
                    seen[d.0][d.1] = true;
                    face.push(d);
                    d = self.phi(d);
                }
                out.push(face);
            }
        }
        out
    }
}

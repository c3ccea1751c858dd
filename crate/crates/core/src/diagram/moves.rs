//! Reidemeister moves on PD diagrams, located through the face structure.

use std::collections::{HashMap, HashSet};

use super::{Crossing, Dart, LinkDiagram};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Remove a kink: slots `slot` and `slot + 1` of `crossing` share an arc.
    R1 { crossing: usize, slot: usize },
    /// Remove a bigon face whose boundary darts are `first`, `second`.
    R2 { first: Dart, second: Dart },
    /// Flip a triangle face whose boundary darts are `darts`.
    R3 { darts: [Dart; 3] },
}

fn at(c: &Crossing, slot: usize) -> usize {
    c.slots[slot % 4]
}

/// `s - 1` modulo 4.
fn prev(s: usize) -> usize {
    (s + 3) % 4
}

impl LinkDiagram {
    pub fn r1_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for k in 0..4 {
                if c.slots[k] == at(c, k + 1) {
                    out.push(Move::R1 { crossing: ci, slot: k });
                }
            }
        }
        out
    }

    /// Bigons where one strand passes over the other at both corners.
    pub fn r2_moves(&self) -> Vec<Move> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() == 2 && f[0].0 != f[1].0)
            .filter(|f| {
                let (a, b) = (prev(f[0].1), prev(f[1].1));
                a % 2 == (b + 1) % 2
            })
            .map(|f| Move::R2 { first: f[0], second: f[1] })
            .collect()
    }

    /// Triangles with a side that is over at both of its ends, ordered by the
    /// smallest arc label on the triangle.
    pub fn r3_moves(&self) -> Vec<Move> {
        let mut found: Vec<(usize, Move)> = Vec::new();
        for f in self.faces() {
            if f.len() != 3 {
                continue;
            }
            let [(c1, u1), (c2, u2), (c3, u3)] = [f[0], f[1], f[2]];
            if c1 == c2 || c2 == c3 || c1 == c3 {
                continue;
            }
            let over = |s: usize| Crossing::is_over_slot(s);
            let side_a = over(u1) && over(prev(u2));
            let side_b = over(u2) && over(prev(u3));
            let side_c = over(u3) && over(prev(u1));
            if !(side_a || side_b || side_c) {
                continue;
            }
            let key = [self.crossings[c1].slots[u1], self.crossings[c2].slots[u2], self.crossings[c3].slots[u3]]
                .into_iter()
                .min()
                .expect("three labels");
            let mv = Move::R3 { darts: [f[0], f[1], f[2]] };
            if self.apply(mv).is_ok() {
                found.push((key, mv));
            }
        }
        found.sort_by_key(|(k, _)| *k);
        found.into_iter().map(|(_, m)| m).collect()
    }

    pub fn apply(&self, mv: Move) -> Result<LinkDiagram> {
        match mv {
            Move::R1 { crossing, slot } => {
                let c = self.crossings.get(crossing).ok_or_else(|| bad_move("no such crossing"))?;
                if c.slots[slot % 4] != at(c, slot + 1) {
                    return Err(bad_move("not a kink"));
                }
                Ok(self.rebuild(&[crossing], &[], &[(at(c, slot + 2), at(c, slot + 3))]))
            }
            Move::R2 { first: (c1, s0), second: (c2, s1) } => {
                if c1 == c2 {
                    return Err(bad_move("bigon on a single crossing"));
                }
                let adj = self.adjacency();
                if adj.phi((c1, s0)) != (c2, s1) || adj.phi((c2, s1)) != (c1, s0) {
                    return Err(bad_move("darts do not bound a bigon"));
                }
                let (a, b) = (prev(s0), prev(s1));
                if a % 2 != (b + 1) % 2 {
                    return Err(bad_move("alternating bigon"));
                }
                let (x1, x2) = (&self.crossings[c1], &self.crossings[c2]);
                let joins = [(at(x1, a + 2), at(x2, b + 3)), (at(x1, a + 3), at(x2, b + 2))];
                Ok(self.rebuild(&[c1, c2], &[], &joins))
            }
            Move::R3 { darts } => self.flip_triangle(darts),
        }
    }

    fn flip_triangle(&self, darts: [Dart; 3]) -> Result<LinkDiagram> {
        let [(c1, u1), (c2, u2), (c3, u3)] = darts;
        let adj = self.adjacency();
        if adj.phi(darts[0]) != darts[1] || adj.phi(darts[1]) != darts[2] || adj.phi(darts[2]) != darts[0] {
            return Err(bad_move("darts do not bound a triangle"));
        }
        let (x1, x2, x3) = (self.crossings[c1], self.crossings[c2], self.crossings[c3]);
        let (ea, eb, ec) = (at(&x1, u1), at(&x2, u2), at(&x3, u3));
        let (o1c, o1a) = (at(&x1, u1 + 1), at(&x1, u1 + 2));
        let (o2a, o2b) = (at(&x2, u2 + 1), at(&x2, u2 + 2));
        let (o3b, o3c) = (at(&x3, u3 + 1), at(&x3, u3 + 2));
        let place = |x: &Crossing, u: usize, vals: [usize; 4]| {
            // vals fill slots u-1, u, u+1, u+2
            let mut slots = [0; 4];
            for (j, v) in vals.into_iter().enumerate() {
                slots[(u + 3 + j) % 4] = v;
            }
            Crossing::new(slots, x.sign)
        };
        let n1 = place(&x1, u1, [o3c, o2a, ec, ea]);
        let n2 = place(&x2, u2, [o1a, o3b, ea, eb]);
        let n3 = place(&x3, u3, [o2b, o1c, eb, ec]);
        let d = self.rebuild(&[], &[(c1, n1), (c2, n2), (c3, n3)], &[]);
        d.validate().map_err(|_| bad_move("triangle flip is not planar here"))?;
        Ok(d)
    }

    /// Drops and replaces crossings, then merges arcs pairwise through `joins`.
    /// A merged arc left with no endpoints closes up into a free loop.
    pub(crate) fn rebuild(
        &self,
        drop: &[usize],
        replace: &[(usize, Crossing)],
        joins: &[(usize, usize)],
    ) -> LinkDiagram {
        let mut parent: HashMap<usize, usize> = HashMap::new();
        fn find(parent: &mut HashMap<usize, usize>, x: usize) -> usize {
            let p = *parent.get(&x).unwrap_or(&x);
            if p == x {
                return x;
            }
            let r = find(parent, p);
            parent.insert(x, r);
            r
        }
        for &(a, b) in joins {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent.insert(hi, lo);
            }
        }
        let replaced: HashMap<usize, Crossing> = replace.iter().copied().collect();
        let dropped: HashSet<usize> = drop.iter().copied().collect();
        let mut crossings = Vec::with_capacity(self.crossings.len());
        let mut alive: HashSet<usize> = HashSet::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if dropped.contains(&i) {
                continue;
            }
            let c = replaced.get(&i).copied().unwrap_or(*c);
            let slots = c.slots.map(|l| find(&mut parent, l));
            alive.extend(slots);
            crossings.push(Crossing::new(slots, c.sign));
        }
        let mut closed: HashSet<usize> = HashSet::new();
        for &(a, _) in joins {
            let r = find(&mut parent, a);
            if !alive.contains(&r) {
                closed.insert(r);
            }
        }
        LinkDiagram { crossings, free_loops: self.free_loops + closed.len() }
    }
}

fn bad_move(why: &str) -> Error {
    Error::Domain(format!("move does not apply: {why}"))
}

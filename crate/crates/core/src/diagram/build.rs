//! Diagrams of braid closures.
//!
//! The braid is drawn with strands at positions `0..n` running upward. Each
//! letter contributes one crossing whose four ports, in counterclockwise
//! order, are SW, SE, NE, NW. A positive letter puts the SW-NE strand on top.

use super::{Crossing, LinkDiagram};
use crate::braid::BraidWord;
use crate::{Error, Result, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    /// Top endpoint `i` joined to bottom endpoint `i` by parallel return arcs.
    Standard,
    /// Endpoint `i` joined to endpoint `n + 1 - i` by nested caps, top and bottom.
    CircularPlat,
}

pub fn closure_diagram(beta: &BraidWord) -> LinkDiagram {
    build(beta, ClosureKind::Standard)
}

pub fn circular_plat_diagram(b: &BraidWord) -> Result<LinkDiagram> {
    if b.strands() % 2 != 0 {
        return Err(Error::Domain(format!(
            "a circular plat closure needs an even number of strands, got {}",
            b.strands()
        )));
    }
    Ok(build(b, ClosureKind::CircularPlat))
}

const NONE: usize = usize::MAX;

fn build(word: &BraidWord, kind: ClosureKind) -> LinkDiagram {
    let n = word.strands();
    let m = word.len();
    let bottom = |p: usize| 4 * m + p;
    let top = |p: usize| 4 * m + n + p;
    let total = 4 * m + 2 * n;

    // seg: partner along the braid; clos: partner along a closing arc.
    let mut seg = vec![NONE; total];
    let mut clos = vec![NONE; total];
    let link = |seg: &mut Vec<usize>, a: usize, b: usize| {
        seg[a] = b;
        seg[b] = a;
    };

    let mut current: Vec<usize> = (0..n).map(bottom).collect();
    for (c, letter) in word.letters().iter().enumerate() {
        let (a, b) = (letter.index - 1, letter.index);
        link(&mut seg, current[a], 4 * c);
        link(&mut seg, current[b], 4 * c + 1);
        current[a] = 4 * c + 3;
        current[b] = 4 * c + 2;
    }
    for (p, &port) in current.iter().enumerate() {
        link(&mut seg, port, top(p));
    }
    for p in 0..n {
        let (tp, bp) = match kind {
            ClosureKind::Standard => (bottom(p), top(p)),
            ClosureKind::CircularPlat => (top(n - 1 - p), bottom(n - 1 - p)),
        };
        clos[top(p)] = tp;
        clos[bottom(p)] = bp;
    }

    // Orient each component upward out of its lowest-numbered bottom endpoint
    // and list its crossing passages (entry port, exit port) in order.
    let mut visited = vec![false; total];
    let mut label = vec![0usize; 4 * m];
    let mut entering = vec![false; 4 * m];
    let mut next_label = 1;
    let mut free_loops = 0;
    for p in 0..n {
        let start = bottom(p);
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut passages: Vec<(usize, usize)> = Vec::new();
        let mut r = seg[start];
        loop {
            if r < 4 * m {
                let out = 4 * (r / 4) + (r % 4 + 2) % 4;
                visited[r] = true;
                visited[out] = true;
                entering[r] = true;
                passages.push((r, out));
                r = seg[out];
            } else {
                visited[r] = true;
                let s = clos[r];
                if s == start {
                    break;
                }
                visited[s] = true;
                r = seg[s];
            }
        }
        if passages.is_empty() {
            free_loops += 1;
            continue;
        }
        let k = passages.len();
        for j in 0..k {
            label[passages[j].1] = next_label;
            label[passages[(j + 1) % k].0] = next_label;
            next_label += 1;
        }
    }

    let crossings = word
        .letters()
        .iter()
        .enumerate()
        .map(|(c, letter)| {
            let (over, under) = match letter.sign {
                Sign::Pos => ([0, 2], [1, 3]),
                Sign::Neg => ([1, 3], [0, 2]),
            };
            let k_in = if entering[4 * c + under[0]] { under[0] } else { under[1] };
            let o_in = if entering[4 * c + over[0]] { over[0] } else { over[1] };
            let slots = [0, 1, 2, 3].map(|j| label[4 * c + (k_in + j) % 4]);
            let sign = if o_in == (k_in + 3) % 4 { Sign::Pos } else { Sign::Neg };
            Crossing::new(slots, sign)
        })
        .collect();
    LinkDiagram::from_parts(crossings, free_loops).canonical()
}

//! Deterministic Reidemeister simplification.
//!
//! The monotone phase applies R1, then R2, until neither applies. The search
//! phase then explores R3 flips breadth-first, reducing monotonically after
//! each flip and deduplicating states by [`LinkDiagram::encoding`]. Whenever a
//! smaller diagram turns up the search restarts from it.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::LinkDiagram;
use crate::{Error, Result};

/// Default number of search states.
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnknotCertificate {
    /// A sequence of Reidemeister moves reaches the round unknot.
    #[serde(rename = "certified_unknot")]
    Certified,
    /// The search ended without reaching it; this is not a proof of knotting.
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl UnknotCertificate {
    pub fn as_str(self) -> &'static str {
        match self {
            UnknotCertificate::Certified => "certified_unknot",
            UnknotCertificate::Inconclusive => "inconclusive",
        }
    }
}

/// R1 and R2 to a fixed point.
pub fn reduce_monotone(d: &LinkDiagram) -> LinkDiagram {
    let mut cur = d.clone();
    loop {
        let next = cur
            .r1_moves()
            .first()
            .or(cur.r2_moves().first())
            .map(|&m| cur.apply(m).expect("located moves apply"));
        match next {
            Some(n) => cur = n,
            None => return cur,
        }
    }
}

/// Returns the smallest diagram found, in canonical labelling. `budget`
/// bounds the number of distinct states visited by the R3 search; zero
/// means the monotone phase only.
pub fn simplify(d: &LinkDiagram, budget: usize) -> LinkDiagram {
    let mut best = reduce_monotone(d);
    if budget == 0 || best.crossing_count() == 0 {
        return best.canonical();
    }
    let mut queue: VecDeque<LinkDiagram> = VecDeque::from([best.clone()]);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([best.encoding()]);
    let mut states = 1usize;
    'search: while let Some(s) = queue.pop_front() {
        for mv in s.r3_moves() {
            let t = reduce_monotone(&s.apply(mv).expect("located moves apply"));
            if t.crossing_count() < best.crossing_count() {
                best = t;
                if best.crossing_count() == 0 {
                    break 'search;
                }
                queue.clear();
                seen.clear();
                seen.insert(best.encoding());
                queue.push_back(best.clone());
                states += 1;
                continue 'search;
            }
            if seen.insert(t.encoding()) {
                states += 1;
                if states > budget {
                    break 'search;
                }
                queue.push_back(t);
            }
        }
    }
    best.canonical()
}

/// Certifies a knot diagram as the unknot when [`simplify`] reaches a
/// crossing-free single loop.
pub fn certify_unknot(d: &LinkDiagram, budget: usize) -> Result<UnknotCertificate> {
    let k = d.component_count();
    if k != 1 {
        return Err(Error::Domain(format!(
            "unknot certification needs a knot, the diagram has {k} components"
        )));
    }
    let s = simplify(d, budget);
    Ok(if s.crossing_count() == 0 && s.free_loops() == 1 {
        UnknotCertificate::Certified
    } else {
        UnknotCertificate::Inconclusive
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{family_b, BraidWord};
    use crate::diagram::{circular_plat_diagram, closure_diagram};

    #[test]
    fn examples() {
        let kink = LinkDiagram::from_pd("X-[1,2,2,1]").unwrap();
        assert_eq!(simplify(&kink, 0).crossing_count(), 0);
        let c = circular_plat_diagram(&family_b(1).unwrap()).unwrap();
        assert_eq!(simplify(&c, DEFAULT_BUDGET).crossing_count(), 0);
        let unlink = LinkDiagram::from_pd("O\nO").unwrap();
        assert_eq!(simplify(&unlink, 10), unlink);
    }

    #[test]
    fn certificates() {
        let c = circular_plat_diagram(&family_b(1).unwrap()).unwrap();
        assert_eq!(certify_unknot(&c, DEFAULT_BUDGET).unwrap(), UnknotCertificate::Certified);
        let trefoil = closure_diagram(&BraidWord::parse("s1 s1 s1", 2).unwrap());
        assert_eq!(certify_unknot(&trefoil, 1000).unwrap(), UnknotCertificate::Inconclusive);
        let hopf = closure_diagram(&BraidWord::parse("s1 s1", 2).unwrap());
        assert!(matches!(certify_unknot(&hopf, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn needs_r3() {
        // trivial in B3, but the middle bigon only appears after an R3 flip
        let d = closure_diagram(&BraidWord::parse("s1 s2 s1 S2 S1 S2", 3).unwrap());
        let s = simplify(&d, DEFAULT_BUDGET);
        assert_eq!((s.crossing_count(), s.free_loops()), (0, 3));
    }

    #[test]
    fn never_grows() {
        let d = closure_diagram(&BraidWord::parse("s1 S2 s1 S2 s1 S2", 3).unwrap());
        assert!(simplify(&d, 200).crossing_count() <= d.crossing_count());
    }
}

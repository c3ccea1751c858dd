use num_bigint::BigInt;

use crate::algebra::LaurentPoly;
use crate::diagram::LinkDiagram;
use crate::{Error, Result};

/// Largest crossing count accepted by the state sum.
pub const BRACKET_MAX_CROSSINGS: usize = 14;

fn loops_in_state(d: &LinkDiagram, labels: &[usize], state: u32) -> usize {
    let index = |l: usize| labels.binary_search(&l).expect("label present");
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut classes = labels.len();
    for (k, c) in d.crossings().iter().enumerate() {
        let [a, b, cc, dd] = c.slots;
        // A-smoothing joins (a, b) and (c, d); B-smoothing (a, d) and (b, c).
        let pairs = if state >> k & 1 == 0 { [(a, b), (cc, dd)] } else { [(a, dd), (b, cc)] };
        for (x, y) in pairs {
            let (rx, ry) = (find(&mut parent, index(x)), find(&mut parent, index(y)));
            if rx != ry {
                parent[rx] = ry;
                classes -= 1;
            }
        }
    }
    classes + d.free_loops()
}

/// The bracket `<D>` in the variable `A`, with `<O> = 1` and loop value
/// `-A^2 - A^-2`.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > BRACKET_MAX_CROSSINGS {
        return Err(Error::Resource(format!(
            "the bracket state sum is limited to {BRACKET_MAX_CROSSINGS} crossings, this diagram has {c}; \
             use the Alexander polynomial instead"
        )));
    }
    if c == 0 && d.free_loops() == 0 {
        return Err(Error::Domain("the empty diagram has no bracket".into()));
    }
    let labels = d.labels();
    let loop_value = LaurentPoly::from_terms(&[(2, -1), (-2, -1)]);
    // at most one loop per arc label plus the free loops
    let max_loops = labels.len() + d.free_loops() + 1;
    let mut powers = vec![LaurentPoly::one()];
    for k in 1..max_loops {
        powers.push(&powers[k - 1] * &loop_value);
    }
    let mut sum = LaurentPoly::zero();
    for state in 0..(1u32 << c) {
        let b = state.count_ones() as i64;
        let a = c as i64 - b;
        let loops = loops_in_state(d, &labels, state);
        let term = powers[loops - 1].mul_monomial(a - b);
        sum = &sum + &term;
    }
    Ok(sum)
}

/// `(-A^3)^{-w} <D>`, invariant under all three Reidemeister moves.
pub fn normalized_bracket(d: &LinkDiagram) -> Result<LaurentPoly> {
    let w = d.writhe();
    let unit = LaurentPoly::monomial(BigInt::from(if w % 2 == 0 { 1 } else { -1 }), -3 * w);
    Ok(&kauffman_bracket(d)? * &unit)
}

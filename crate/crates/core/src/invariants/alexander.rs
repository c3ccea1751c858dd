use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::{det_poly, LaurentPoly, Poly};
use crate::diagram::LinkDiagram;
use crate::{Result, Sign};

/// Normalized Alexander polynomial, with a flag set when the diagram is
/// visibly split (then the polynomial is 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alexander {
    pub polynomial: LaurentPoly,
    pub split: bool,
}

/// Wirtinger arcs: labels joined through the over strand (slots 1 and 3).
fn wirtinger_arcs(d: &LinkDiagram) -> HashMap<usize, usize> {
    let mut parent: HashMap<usize, usize> = d.labels().into_iter().map(|l| (l, l)).collect();
    fn find(p: &mut HashMap<usize, usize>, x: usize) -> usize {
        let mut r = x;
        while p[&r] != r {
            r = p[&r];
        }
        let mut y = x;
        while p[&y] != r {
            let next = p[&y];
            p.insert(y, r);
            y = next;
        }
        r
    }
    for c in d.crossings() {
        let (a, b) = (find(&mut parent, c.slots[1]), find(&mut parent, c.slots[3]));
        if a != b {
            parent.insert(a.max(b), a.min(b));
        }
    }
    let labels = d.labels();
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut out = HashMap::new();
    for l in labels {
        let r = find(&mut parent, l);
        let n = index.len();
        let i = *index.entry(r).or_insert(n);
        out.insert(l, i);
    }
    out
}

/// Fox calculus on the Wirtinger presentation. A positive crossing
/// contributes `1 - t` (over arc), `t` (incoming under) and `-1` (outgoing
/// under); a negative one `1 - t`, `-1`, `t`.
pub fn alexander(d: &LinkDiagram) -> Result<Alexander> {
    if d.is_split() {
        return Ok(Alexander { polynomial: LaurentPoly::zero(), split: true });
    }
    let c = d.crossing_count();
    if c == 0 {
        return Ok(Alexander { polynomial: LaurentPoly::one(), split: false });
    }
    let arc = wirtinger_arcs(d);
    let arcs = arc.values().copied().max().map_or(0, |m| m + 1);
    if arcs != c {
        // A strand that never passes under anything can be lifted off.
        return Ok(Alexander { polynomial: LaurentPoly::zero(), split: true });
    }
    let one_minus_t = Poly::from_i64(&[1, -1]);
    let t = Poly::from_i64(&[0, 1]);
    let minus_one = Poly::from_i64(&[-1]);
    let mut m = vec![vec![Poly::zero(); c]; c];
    for (row, x) in d.crossings().iter().enumerate() {
        let (inc, out) = match x.sign {
            Sign::Pos => (&t, &minus_one),
            Sign::Neg => (&minus_one, &t),
        };
        for (label, val) in [(x.over_in(), &one_minus_t), (x.under_in(), inc), (x.under_out(), out)] {
            let j = arc[&label];
            m[row][j] = &m[row][j] + val;
        }
    }
    let minor: Vec<Vec<Poly>> = m[..c - 1].iter().map(|r| r[..c - 1].to_vec()).collect();
    let det = det_poly(&minor)?;
    Ok(Alexander { polynomial: LaurentPoly::new(0, det).normalized(), split: false })
}

pub fn alexander_polynomial(d: &LinkDiagram) -> Result<LaurentPoly> {
    Ok(alexander(d)?.polynomial)
}

/// `|Δ(-1)|`.
pub fn alexander_determinant(d: &LinkDiagram) -> Result<BigInt> {
    Ok(alexander_polynomial(d)?.eval_int(-1)?.abs())
}

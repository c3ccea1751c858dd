//! First homology of the double branched cover from a Goeritz matrix.
//!
//! Faces are 2-coloured so that at every crossing the corners owned by darts
//! 0 and 2 share a colour, as do those owned by darts 1 and 3. White regions
//! are the colour class of the face at dart `(0, 0)`. A crossing whose white
//! corners are darts 1 and 3 has incidence `+1`, otherwise `-1`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{AbelianGroupPresentation, IntMatrix};
use crate::diagram::LinkDiagram;
use crate::{Error, Result};

/// Checkerboard colouring of the faces; `true` marks white.
fn colour_faces(face_of: &[[usize; 4]], faces: usize) -> Result<Vec<bool>> {
    // edges (f, g, same_colour)
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); faces];
    for f in face_of {
        for (a, b, same) in [(f[0], f[2], true), (f[1], f[3], true), (f[0], f[1], false)] {
            adj[a].push((b, same));
            adj[b].push((a, same));
        }
    }
    let mut colour: Vec<Option<bool>> = vec![None; faces];
    colour[face_of[0][0]] = Some(true);
    let mut queue = VecDeque::from([face_of[0][0]]);
    while let Some(f) = queue.pop_front() {
        let cf = colour[f].expect("queued faces are coloured");
        for &(g, same) in &adj[f] {
            let want = if same { cf } else { !cf };
            match colour[g] {
                None => {
                    colour[g] = Some(want);
                    queue.push_back(g);
                }
                Some(c) if c != want => {
                    return Err(Error::Internal("faces admit no checkerboard colouring".into()));
                }
                _ => {}
            }
        }
    }
    colour
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::Internal("face left uncoloured".into())))
        .collect()
}

/// Reduced Goeritz matrix of a connected diagram with at least one crossing.
pub fn goeritz_matrix(d: &LinkDiagram) -> Result<IntMatrix> {
    if d.crossing_count() == 0 || d.pieces().len() != 1 || d.free_loops() != 0 {
        return Err(Error::Domain("a Goeritz matrix needs a connected diagram with crossings".into()));
    }
    let faces = d.faces();
    let mut face_of = vec![[0usize; 4]; d.crossing_count()];
    for (fi, f) in faces.iter().enumerate() {
        for &(c, s) in f {
            face_of[c][s] = fi;
        }
    }
    let white = colour_faces(&face_of, faces.len())?;
    let mut index = vec![usize::MAX; faces.len()];
    let mut w = 0;
    for (fi, &is_white) in white.iter().enumerate() {
        if is_white {
            index[fi] = w;
            w += 1;
        }
    }
    let mut g = vec![vec![0i64; w]; w];
    for f in &face_of {
        let (eta, a, b) = if white[f[1]] { (1, f[1], f[3]) } else { (-1, f[0], f[2]) };
        let (i, j) = (index[a], index[b]);
        if i != j {
            g[i][j] -= eta;
            g[j][i] -= eta;
        }
    }
    for i in 0..w {
        let off: i64 = (0..w).filter(|&j| j != i).map(|j| g[i][j]).sum();
        g[i][i] = -off;
    }
    let reduced: Vec<Vec<i64>> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
    if reduced.is_empty() {
        return Ok(IntMatrix::zeros(0, 0));
    }
    IntMatrix::from_rows(&reduced)
}

/// `H_1` of the double branched cover. Split diagrams give the direct sum
/// over pieces plus one `Z` for each extra piece.
pub fn double_cover_homology(d: &LinkDiagram) -> Result<AbelianGroupPresentation> {
    let pieces = d.pieces();
    let mut parts = Vec::with_capacity(pieces.len() + 1);
    for piece in &pieces {
        let m = goeritz_matrix(&d.sub_diagram(piece))?;
        parts.push(AbelianGroupPresentation::new(m));
    }
    let total = pieces.len() + d.free_loops();
    parts.push(AbelianGroupPresentation::free(total.saturating_sub(1)));
    Ok(AbelianGroupPresentation::direct_sum(&parts))
}

/// `|det G|` for a connected diagram; 1 for a crossing-free knot, 0 if split.
pub fn goeritz_determinant(d: &LinkDiagram) -> Result<BigInt> {
    if d.is_split() {
        return Ok(BigInt::zero());
    }
    if d.crossing_count() == 0 {
        return Ok(BigInt::from(1));
    }
    let m = goeritz_matrix(d)?;
    Ok(m.det()?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::closure_diagram;

    fn cl(text: &str, n: usize) -> LinkDiagram {
        closure_diagram(&BraidWord::parse(text, n).unwrap())
    }

    #[test]
    fn unknot_is_trivial() {
        assert!(double_cover_homology(&LinkDiagram::unknot()).unwrap().is_trivial());
        assert!(double_cover_homology(&cl("s1", 2)).unwrap().is_trivial());
        assert!(double_cover_homology(&LinkDiagram::from_pd("X-[1,2,2,1]").unwrap()).unwrap().is_trivial());
    }

    #[test]
    fn trefoil_gives_z3() {
        let h = double_cover_homology(&cl("s1 s1 s1", 2)).unwrap();
        assert_eq!(h.to_string(), "Z/3");
        assert_eq!(goeritz_determinant(&cl("s1 s1 s1", 2)).unwrap(), BigInt::from(3));
    }

    #[test]
    fn small_knots_and_links() {
        assert_eq!(double_cover_homology(&cl("s1 S2 s1 S2", 3)).unwrap().to_string(), "Z/5");
        assert_eq!(double_cover_homology(&cl("s1 s1", 2)).unwrap().to_string(), "Z/2");
        assert_eq!(double_cover_homology(&cl("s1 s1 s1 s1", 2)).unwrap().to_string(), "Z/4");
        // 2-component unlink: S^1 x S^2
        assert_eq!(double_cover_homology(&cl("", 2)).unwrap().to_string(), "Z");
        // split union of two Hopf links
        assert_eq!(double_cover_homology(&cl("s1 s1 s3 s3", 4)).unwrap().to_string(), "Z + Z/2 + Z/2");
    }
}

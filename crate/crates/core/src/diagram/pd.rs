//! Text form: one crossing per line as `X+[a,b,c,d]` or `X-[a,b,c,d]`, then
//! one `O` line per free loop. Output is canonical, so equal diagrams give
//! equal bytes.

use std::fmt::Write as _;

use super::{Crossing, LinkDiagram};
use crate::{Error, Result, Sign};

impl LinkDiagram {
    pub fn to_pd(&self) -> String {
        let d = self.canonical();
        let mut out = String::new();
        for c in d.crossings() {
            let s = if c.sign == Sign::Pos { '+' } else { '-' };
            let [a, b, cc, e] = c.slots;
            writeln!(out, "X{s}[{a},{b},{cc},{e}]").expect("writing to a String");
        }
        for _ in 0..d.free_loops() {
            out.push_str("O\n");
        }
        out
    }

    /// Parses PD text. Blank lines and `#` comments are ignored; the unicode
    /// minus sign is accepted for negative crossings.
    pub fn from_pd(text: &str) -> Result<LinkDiagram> {
        let mut crossings = Vec::new();
        let mut free_loops = 0;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line == "O" {
                free_loops += 1;
                continue;
            }
            crossings.push(parse_crossing(line).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("line {}: {m}", lineno + 1)),
                other => other,
            })?);
        }
        LinkDiagram::new(crossings, free_loops)
    }
}

fn parse_crossing(line: &str) -> Result<Crossing> {
    let bad = || Error::Parse(format!("expected `X+[a,b,c,d]`, `X-[a,b,c,d]` or `O`, got `{line}`"));
    let rest = line.strip_prefix('X').ok_or_else(bad)?;
    let (sign, rest) = if let Some(r) = rest.strip_prefix('+') {
        (Sign::Pos, r)
    } else if let Some(r) = rest.strip_prefix('-').or_else(|| rest.strip_prefix('\u{2212}')) {
        (Sign::Neg, r)
    } else {
        return Err(bad());
    };
    let inner = rest.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    let labels: Vec<usize> = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let slots: [usize; 4] = labels.try_into().map_err(|_| bad())?;
    Ok(Crossing::new(slots, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::{circular_plat_diagram, closure_diagram};

    #[test]
    fn round_trip_is_byte_stable() {
        let d = closure_diagram(&BraidWord::parse("s1 S2 s1 s3", 4).unwrap());
        let text = d.to_pd();
        let back = LinkDiagram::from_pd(&text).unwrap();
        assert_eq!(back.to_pd(), text);
        assert_eq!(back.component_count(), d.component_count());
    }

    #[test]
    fn free_loops_and_comments() {
        let d = LinkDiagram::from_pd("# unlink\nO\n\nO\n").unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (0, 2));
        assert_eq!(d.to_pd(), "O\nO\n");
        let p = circular_plat_diagram(&BraidWord::identity(4)).unwrap();
        assert_eq!(p.to_pd(), "O\nO\n");
    }

    #[test]
    fn accepts_unicode_minus() {
        let d = LinkDiagram::from_pd("X\u{2212}[1,2,2,1]").unwrap();
        assert_eq!(d.writhe(), -1);
        assert_eq!(d.to_pd(), "X-[1,2,2,1]\n");
    }

    #[test]
    fn trefoil_text() {
        let d = closure_diagram(&BraidWord::parse("s1 s1 s1", 2).unwrap());
        let text = d.to_pd();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().all(|l| l.starts_with("X+[")));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(LinkDiagram::from_pd("Y+[1,2,3,4]"), Err(Error::Parse(_))));
        assert!(matches!(LinkDiagram::from_pd("X+[1,2,3]"), Err(Error::Parse(_))));
        assert!(matches!(LinkDiagram::from_pd("X*[1,1,2,2]"), Err(Error::Parse(_))));
        assert!(matches!(LinkDiagram::from_pd("X+[1,2,3,4]"), Err(Error::Malformed(_))));
    }
}

//! Text formats for rings, groups and module presentations.
//!
//! Ring files: `n <size>`, `zero <i>`, `one <i>`, then `n` rows of the
//! addition table and `n` rows of the multiplication table, entries as
//! space-separated indices.  `#` starts a comment.  Group files carry
//! `n <size>`, `id <i>` and one composition table.  Module files start with
//! `module <side> <ring-label> gens <m>` followed by one relation per line.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::module::Side;
use crate::ring::FiniteRing;

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let l = match l.find('#') {
                    Some(p) => &l[..p],
                    None => l,
                };
                (i + 1, l.trim())
            })
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        if self.pos >= self.items.len() {
            return Err(Error::Parse {
                line: self.items.last().map(|(n, _)| *n).unwrap_or(0) + 1,
                msg: format!("expected {what}, found end of file"),
            });
        }
        let item = self.items[self.pos];
        self.pos += 1;
        Ok(item)
    }

    fn finished(&self) -> bool {
        self.pos >= self.items.len()
    }
}

fn parse_kv(line: (usize, &str), key: &str) -> Result<usize> {
    let (lineno, text) = line;
    let mut parts = text.split_whitespace();
    let k = parts.next().unwrap_or("");
    let v = parts.next();
    if k != key || v.is_none() || parts.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected `{key} <number>`, found `{text}`"),
        });
    }
    v.unwrap().parse::<usize>().map_err(|_| Error::Parse {
        line: lineno,
        msg: format!("`{}` is not a number", v.unwrap()),
    })
}

fn parse_row(line: (usize, &str), n: usize) -> Result<Vec<u16>> {
    let (lineno, text) = line;
    let mut row = Vec::with_capacity(n);
    for tok in text.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("`{tok}` is not a number"),
        })?;
        if v >= n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("entry {v} out of range (size {n})"),
            });
        }
        row.push(v as u16);
    }
    if row.len() != n {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected {n} entries, found {}", row.len()),
        });
    }
    Ok(row)
}

/// Parses and validates a ring file.
pub fn parse_ring(text: &str, label: impl Into<String>) -> Result<FiniteRing> {
    let mut lines = Lines::new(text);
    let n = parse_kv(lines.next("`n <size>`")?, "n")?;
    let zero = parse_kv(lines.next("`zero <index>`")?, "zero")?;
    let one = parse_kv(lines.next("`one <index>`")?, "one")?;
    let mut add = Vec::with_capacity(n * n);
    for _ in 0..n {
        add.extend(parse_row(lines.next("an addition table row")?, n)?);
    }
    let mut mul = Vec::with_capacity(n * n);
    for _ in 0..n {
        mul.extend(parse_row(lines.next("a multiplication table row")?, n)?);
    }
    if !lines.finished() {
        let (lineno, text) = lines.next("")?;
        return Err(Error::Parse {
            line: lineno,
            msg: format!("unexpected trailing content `{text}`"),
        });
    }
    FiniteRing::from_tables(label, n, add, mul, zero, one)
}

/// Serializes a ring in the file format; round-trips through [`parse_ring`].
pub fn serialize_ring(ring: &FiniteRing) -> String {
    let n = ring.size();
    let mut s = String::new();
    s.push_str(&format!("# ring {}\n", ring.label()));
    s.push_str(&format!("n {n}\nzero {}\none {}\n", ring.zero(), ring.one()));
    s.push_str("# addition\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| ring.add(a, b).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s.push_str("# multiplication\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| ring.mul(a, b).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Parses and validates a group file.
pub fn parse_group(text: &str, label: impl Into<String>) -> Result<FiniteGroup> {
    let mut lines = Lines::new(text);
    let n = parse_kv(lines.next("`n <size>`")?, "n")?;
    let id = parse_kv(lines.next("`id <index>`")?, "id")?;
    let mut op = Vec::with_capacity(n * n);
    for _ in 0..n {
        op.extend(parse_row(lines.next("a composition table row")?, n)?);
    }
    if !lines.finished() {
        let (lineno, text) = lines.next("")?;
        return Err(Error::Parse {
            line: lineno,
            msg: format!("unexpected trailing content `{text}`"),
        });
    }
    FiniteGroup::from_table(label, n, op, id)
}

/// Serializes a group in the file format.
pub fn serialize_group(group: &FiniteGroup) -> String {
    let n = group.size();
    let mut s = String::new();
    s.push_str(&format!("# group {}\n", group.label()));
    s.push_str(&format!("n {n}\nid {}\n", group.identity()));
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| group.op(a, b).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// A parsed module presentation; the ring is referenced by label and must be
/// resolved by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    pub side: Side,
    pub ring_label: String,
    pub gens: usize,
    pub relations: Vec<Vec<usize>>,
}

/// Parses a module presentation file.
pub fn parse_module(text: &str) -> Result<ModulePresentation> {
    let mut lines = Lines::new(text);
    let (lineno, header) = lines.next("`module <side> <ring> gens <m>`")?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 5 || parts[0] != "module" || parts[3] != "gens" {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected `module <side> <ring> gens <m>`, found `{header}`"),
        });
    }
    let side = match parts[1] {
        "left" => Side::Left,
        "right" => Side::Right,
        other => {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("side must be `left` or `right`, found `{other}`"),
            })
        }
    };
    let gens: usize = parts[4].parse().map_err(|_| Error::Parse {
        line: lineno,
        msg: format!("`{}` is not a number", parts[4]),
    })?;
    let mut relations = Vec::new();
    while !lines.finished() {
        let (lineno, text) = lines.next("a relation row")?;
        let mut rel = Vec::with_capacity(gens);
        for tok in text.split_whitespace() {
            rel.push(tok.parse::<usize>().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("`{tok}` is not a number"),
            })?);
        }
        if rel.len() != gens {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("relation must have {gens} entries, found {}", rel.len()),
            });
        }
        relations.push(rel);
    }
    Ok(ModulePresentation {
        side,
        ring_label: parts[2].to_string(),
        gens,
        relations,
    })
}

/// Serializes a module presentation.
pub fn serialize_module(p: &ModulePresentation) -> String {
    let mut s = format!("module {} {} gens {}\n", p.side, p.ring_label, p.gens);
    for rel in &p.relations {
        let row: Vec<String> = rel.iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_zmod;

    #[test]
    fn ring_roundtrip() {
        let r = ring_zmod(4);
        let text = serialize_ring(&r);
        let back = parse_ring(&text, "zmod4").unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn group_roundtrip() {
        let g = FiniteGroup::symmetric(3);
        let text = serialize_group(&g);
        let back = parse_group(&text, "s3").unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn corrupted_ring_is_rejected_with_axiom() {
        let r = ring_zmod(3);
        let mut text = serialize_ring(&r);
        // corrupt one multiplication entry: make 2*2 = 2 instead of 1
        text = text.replace("2 1", "2 2");
        let err = parse_ring(&text, "bad").unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }), "{err:?}");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_ring("n 2\nzero 0\none 1\n0 1\n1 x\n", "bad").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_ring("n 2\nzero 0\n", "bad").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn module_presentation_roundtrip() {
        let p = ModulePresentation {
            side: Side::Left,
            ring_label: "zmod4".into(),
            gens: 2,
            relations: vec![vec![2, 0], vec![0, 2]],
        };
        let text = serialize_module(&p);
        assert_eq!(parse_module(&text).unwrap(), p);
        let err = parse_module("module up zmod4 gens 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}

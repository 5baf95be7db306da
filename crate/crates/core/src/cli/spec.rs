//! The group-spec language.
//!
//! ```text
//! spec  := atom | "(" spec ")"
//! atom  := "cyclic" n | "dihedral" n | "sym" n | "alt" n | "quaternion"
//!        | "gfq" p k | "pgl2" p k | "pgammal2" p k h | "wreath_tower" n
//!        | "product" spec spec
//!        | "subgroup" spec "gens" "[" perm ("," perm)* "]"
//! ```
//!
//! `gfq p k` is the Galois group of `GF(p^k)` acting on the field, and
//! `pgammal2 p k h` extends `PGL(2, p^k)` by the Galois subgroup of order `h`.
//! Permutations inside `gens [...]` are in cycle notation.

use std::fmt;

use crate::constructions::{
    alt, cyclic, dihedral, direct_product, pgammal2, pgl2, quaternion, sym, wreath_tower,
    FiniteField, MAX_FIELD_ORDER, MAX_WREATH_HEIGHT,
};
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

/// Largest degree accepted for `sym` and `alt`.
pub const MAX_NATURAL_DEGREE: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Sym(usize),
    Alt(usize),
    Quaternion,
    Gfq { p: u32, k: u32 },
    Pgl2 { p: u32, k: u32 },
    Pgammal2 { p: u32, k: u32, h: u32 },
    WreathTower(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Subgroup { parent: Box<GroupSpec>, gens: Vec<String> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup> {
        Ok(match self {
            GroupSpec::Cyclic(n) => cyclic(*n)?,
            GroupSpec::Dihedral(n) => dihedral(*n)?,
            GroupSpec::Sym(n) => sym(*n)?,
            GroupSpec::Alt(n) => alt(*n)?,
            GroupSpec::Quaternion => quaternion().regular_representation(),
            GroupSpec::Gfq { p, k } => FiniteField::new(*p, *k)?.galois_group(),
            GroupSpec::Pgl2 { p, k } => pgl2(&FiniteField::new(*p, *k)?)?,
            GroupSpec::Pgammal2 { p, k, h } => pgammal2(&FiniteField::new(*p, *k)?, *h)?,
            GroupSpec::WreathTower(n) => wreath_tower(*n)?.top().clone(),
            GroupSpec::Product(a, b) => direct_product(&a.build()?, &b.build()?).group,
            GroupSpec::Subgroup { parent, gens } => {
                let g = parent.build()?;
                let perms = gens
                    .iter()
                    .map(|s| Permutation::parse(g.degree(), s))
                    .collect::<Result<Vec<_>>>()?;
                g.subgroup(perms)?
            }
        })
    }

    /// A file-name-safe rendering, used for fixture paths.
    pub fn slug(&self) -> String {
        let mut out = String::new();
        let mut last_sep = true;
        for ch in self.to_string().chars() {
            if ch.is_ascii_alphanumeric() {
                out.push(ch);
                last_sep = false;
            } else if !last_sep {
                out.push('_');
                last_sep = true;
            }
        }
        out.trim_end_matches('_').to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |s: &GroupSpec| match s {
            GroupSpec::Product(..) | GroupSpec::Subgroup { .. } => format!("({})", s),
            _ if s.to_string().contains(' ') => format!("({})", s),
            _ => s.to_string(),
        };
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic {}", n),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {}", n),
            GroupSpec::Sym(n) => write!(f, "sym {}", n),
            GroupSpec::Alt(n) => write!(f, "alt {}", n),
            GroupSpec::Quaternion => write!(f, "quaternion"),
            GroupSpec::Gfq { p, k } => write!(f, "gfq {} {}", p, k),
            GroupSpec::Pgl2 { p, k } => write!(f, "pgl2 {} {}", p, k),
            GroupSpec::Pgammal2 { p, k, h } => write!(f, "pgammal2 {} {} {}", p, k, h),
            GroupSpec::WreathTower(n) => write!(f, "wreath_tower {}", n),
            GroupSpec::Product(a, b) => write!(f, "product {} {}", sub(a), sub(b)),
            GroupSpec::Subgroup { parent, gens } => {
                write!(f, "subgroup {} gens [{}]", sub(parent), gens.join(", "))
            }
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl<'a> Parser<'a> {
    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.error(self.pos, format!("expected '{}', found '{}'", c, d)),
            None => self.error(self.pos, format!("expected '{}', found end of input", c)),
        }
    }

    fn word(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return match rest.chars().next() {
                Some(c) => self.error(start, format!("unexpected '{}'", c)),
                None => self.error(start, "unexpected end of input"),
            };
        }
        self.pos += len;
        Ok((start, &rest[..len]))
    }

    fn number(&mut self, atom: &str) -> Result<(usize, u64)> {
        self.skip_ws();
        if self.pos == self.text.len() || self.peek() == Some(')') {
            return self.error(self.pos, format!("'{}' is missing an argument", atom));
        }
        let (at, w) = self.word()?;
        match w.parse::<u64>() {
            Ok(v) => Ok((at, v)),
            Err(_) => self.error(at, format!("'{}' expects an integer, found '{}'", atom, w)),
        }
    }

    fn ranged(&mut self, atom: &str, min: u64, max: u64) -> Result<usize> {
        let (at, v) = self.number(atom)?;
        if v < min || v > max {
            return self.error(at, format!("{} requires {} ≤ n ≤ {}, got {}", atom, min, max, v));
        }
        Ok(v as usize)
    }

    fn field(&mut self, atom: &str) -> Result<(u32, u32)> {
        let (pat, p) = self.number(atom)?;
        if !is_prime(p) {
            return self.error(pat, format!("{}: {} is not prime", atom, p));
        }
        let (kat, k) = self.number(atom)?;
        let q = (k >= 1).then(|| p.checked_pow(k as u32)).flatten();
        match q {
            Some(q) if q <= MAX_FIELD_ORDER as u64 => Ok((p as u32, k as u32)),
            _ => self.error(kat, format!("{}: need k ≥ 1 and p^k ≤ {}", atom, MAX_FIELD_ORDER)),
        }
    }

    fn projective(&mut self, atom: &str) -> Result<(u32, u32)> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let (p, k) = self.field(atom)?;
        if p.pow(k) <= 3 {
            return self.error(at, format!("{} needs a field with more than 3 elements", atom));
        }
        Ok((p, k))
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        if self.peek() == Some('(') {
            self.pos += 1;
            let inner = self.spec()?;
            self.expect(')')?;
            return Ok(inner);
        }
        let (at, name) = self.word()?;
        Ok(match name {
            "cyclic" => GroupSpec::Cyclic(self.ranged(name, 1, 100_000)?),
            "dihedral" => GroupSpec::Dihedral(self.ranged(name, 3, 100_000)?),
            "sym" => GroupSpec::Sym(self.ranged(name, 1, MAX_NATURAL_DEGREE)?),
            "alt" => GroupSpec::Alt(self.ranged(name, 3, MAX_NATURAL_DEGREE)?),
            "quaternion" => GroupSpec::Quaternion,
            "gfq" => {
                let (p, k) = self.field(name)?;
                GroupSpec::Gfq { p, k }
            }
            "pgl2" => {
                let (p, k) = self.projective(name)?;
                GroupSpec::Pgl2 { p, k }
            }
            "pgammal2" => {
                let (p, k) = self.projective(name)?;
                let (hat, h) = self.number(name)?;
                if h == 0 || !(k as u64).is_multiple_of(h) {
                    return self.error(hat, format!("pgammal2: h must divide k = {}, got {}", k, h));
                }
                GroupSpec::Pgammal2 { p, k, h: h as u32 }
            }
            "wreath_tower" => GroupSpec::WreathTower(self.ranged(name, 1, MAX_WREATH_HEIGHT as u64)?),
            "product" => {
                let a = self.spec()?;
                let b = self.spec()?;
                GroupSpec::Product(Box::new(a), Box::new(b))
            }
            "subgroup" => {
                let parent = self.spec()?;
                let (kat, kw) = self.word()?;
                if kw != "gens" {
                    return self.error(kat, format!("expected 'gens', found '{}'", kw));
                }
                self.expect('[')?;
                let start = self.pos;
                let Some(len) = self.text[start..].find(']') else {
                    return self.error(start, "unterminated generator list");
                };
                let body = &self.text[start..start + len];
                let mut gens = Vec::new();
                let mut offset = start;
                for piece in body.split(',') {
                    let trimmed = piece.trim();
                    let lead = piece.len() - piece.trim_start().len();
                    if let Err(Error::Parse { offset: o, message }) =
                        crate::group::perm::parse_cycles(trimmed)
                    {
                        return self.error(offset + lead + o, format!("bad permutation: {}", message));
                    }
                    if !trimmed.is_empty() {
                        gens.push(trimmed.to_string());
                    }
                    offset += piece.len() + 1;
                }
                self.pos = start + len + 1;
                GroupSpec::Subgroup {
                    parent: Box::new(parent),
                    gens,
                }
            }
            other => return self.error(at, format!("unknown group '{}'", other)),
        })
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser { text, pos: 0 };
    let spec = p.spec()?;
    if let Some(c) = p.peek() {
        return p.error(p.pos, format!("unexpected trailing '{}'", c));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_atoms_and_products() {
        let s = parse_spec("product (dihedral 5) (alt 5)").unwrap();
        assert_eq!(
            s,
            GroupSpec::Product(Box::new(GroupSpec::Dihedral(5)), Box::new(GroupSpec::Alt(5)))
        );
        assert_eq!(s.build().unwrap().order(), 600);
        assert_eq!(parse_spec("wreath_tower 2").unwrap(), GroupSpec::WreathTower(2));
        assert_eq!(parse_spec("  ((sym 3)) ").unwrap(), GroupSpec::Sym(3));
        assert_eq!(
            parse_spec("pgammal2 3 2 2").unwrap().build().unwrap().order(),
            1440
        );
        assert_eq!(parse_spec("gfq 2 3").unwrap().build().unwrap().order(), 3);
        assert_eq!(parse_spec("quaternion").unwrap().build().unwrap().order(), 8);
    }

    #[test]
    fn subgroups() {
        let s = parse_spec("subgroup (sym 4) gens [(0 1 2 3), (0 2)]").unwrap();
        assert_eq!(s.build().unwrap().order(), 8);
        let bad = parse_spec("subgroup (alt 4) gens [(0 1)]").unwrap();
        assert!(matches!(bad.build(), Err(Error::NotSubgroup(_))));
        assert!(matches!(
            parse_spec("subgroup (sym 4) gens [(0 1]"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn positioned_errors() {
        let e = parse_spec("alt 2").unwrap_err();
        assert!(matches!(e, Error::Parse { offset: 4, .. }), "{}", e);
        assert!(matches!(parse_spec("foo 3"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_spec("sym"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_spec("sym 3 4"), Err(Error::Parse { offset: 6, .. })));
        assert!(matches!(parse_spec("pgl2 3 1"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse_spec("pgammal2 2 3 2"), Err(Error::Parse { offset: 13, .. })));
        assert!(matches!(parse_spec("gfq 4 1"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_spec("(sym 3"), Err(Error::Parse { offset: 6, .. })));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "product (dihedral 5) (alt 5)",
            "subgroup (sym 4) gens [(0 1 2 3), (0 2)]",
            "pgammal2 2 2 2",
            "product (product (cyclic 2) (cyclic 2)) quaternion",
        ] {
            let s = parse_spec(text).unwrap();
            assert_eq!(s.to_string(), text);
            assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
        }
        assert_eq!(parse_spec("dihedral 5").unwrap().slug(), "dihedral_5");
    }
}

//! Group specifications such as `C5xQ8`, `D18` or `F(7,3)`.
//!
//! ```text
//! Expr := Atom ("x" Atom)*
//! Atom := "C" int | "D" int | "S" int | "A" int | "Q8" | "F(" int "," int ["," int] ")"
//! ```
//!
//! `Dn` is the dihedral group of **order** `n` (even, at least 4), so `D6` is
//! `S_3`.  `F(p,q)` is the non-abelian group `C_p ⋊ C_q` of order `pq`; the
//! optional third parameter selects the multiplier `r` of order `q` mod `p`.
//! Matching is case-insensitive and whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::group::{self, GroupError, PermGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupExpr {
    Cyclic(u64),
    /// Dihedral group of the given order.
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    Quaternion8,
    /// `r = None` means the smallest valid multiplier.
    Metacyclic {
        p: u64,
        q: u64,
        r: Option<u64>,
    },
    DirectProduct(Vec<GroupExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

impl GroupExpr {
    /// Order computed from the parameters, without building the group.
    pub fn order(&self) -> Option<u64> {
        match self {
            Self::Cyclic(n) | Self::Dihedral(n) => Some(*n),
            Self::Symmetric(n) => factorial(*n),
            Self::Alternating(n) => factorial(*n).map(|f| if *n >= 2 { f / 2 } else { f }),
            Self::Quaternion8 => Some(8),
            Self::Metacyclic { p, q, .. } => p.checked_mul(*q),
            Self::DirectProduct(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    /// Factors of a product, or the atom itself.
    pub fn factors(&self) -> &[GroupExpr] {
        match self {
            Self::DirectProduct(fs) => fs,
            atom => std::slice::from_ref(atom),
        }
    }

    /// Direct product, flattening nested products.
    pub fn times(&self, other: &GroupExpr) -> GroupExpr {
        let fs: Vec<GroupExpr> = self
            .factors()
            .iter()
            .chain(other.factors())
            .cloned()
            .collect();
        GroupExpr::DirectProduct(fs)
    }

    pub fn build(&self) -> Result<PermGroup, GroupError> {
        match self {
            Self::Cyclic(n) => group::cyclic(*n),
            Self::Dihedral(n) => group::dihedral(*n),
            Self::Symmetric(n) => group::symmetric(*n),
            Self::Alternating(n) => group::alternating(*n),
            Self::Quaternion8 => group::quaternion8(),
            Self::Metacyclic { p, q, r } => group::metacyclic(*p, *q, r.unwrap_or(0)),
            Self::DirectProduct(fs) => {
                let mut iter = fs.iter();
                let first = iter
                    .next()
                    .map_or_else(|| Ok(group::trivial()), GroupExpr::build)?;
                iter.try_fold(first, |acc, f| acc.direct_product(&f.build()?))
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C{n}"),
            Self::Dihedral(n) => write!(f, "D{n}"),
            Self::Symmetric(n) => write!(f, "S{n}"),
            Self::Alternating(n) => write!(f, "A{n}"),
            Self::Quaternion8 => f.write_str("Q8"),
            Self::Metacyclic { p, q, r: None } => write!(f, "F({p},{q})"),
            Self::Metacyclic { p, q, r: Some(r) } => write!(f, "F({p},{q},{r})"),
            Self::DirectProduct(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for GroupExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

pub fn parse_spec(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        text,
        tokens: tokenize(text),
        pos: 0,
    };
    let mut factors = vec![p.atom()?];
    while let Some(&(_, c)) = p.peek() {
        if c != 'x' {
            return Err(p.error_here("expected 'x' between factors"));
        }
        p.pos += 1;
        factors.push(p.atom()?);
    }
    Ok(if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        GroupExpr::DirectProduct(factors)
    })
}

/// Non-whitespace characters, lowercased, with their byte offsets.
fn tokenize(text: &str) -> Vec<(usize, char)> {
    text.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, c.to_ascii_lowercase()))
        .collect()
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&(usize, char)> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.text.len(), |t| t.0)
    }

    fn error_at(offset: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            offset,
            message: message.into(),
        }
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        Self::error_at(self.offset(), message)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(&(_, c)) if c == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error_here(format!("expected '{want}'"))),
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        let start = self.offset();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(Self::error_at(start, "expected an integer"));
        }
        digits
            .parse()
            .map_err(|_| Self::error_at(start, "integer too large"))
    }

    fn positive(&mut self, what: &str) -> Result<u64, ParseError> {
        let start = self.offset();
        let n = self.int()?;
        if n == 0 {
            return Err(Self::error_at(start, format!("{what} must be at least 1")));
        }
        Ok(n)
    }

    fn atom(&mut self) -> Result<GroupExpr, ParseError> {
        let start = self.offset();
        let Some(&(_, head)) = self.peek() else {
            return Err(self.error_here("expected a group"));
        };
        self.pos += 1;
        match head {
            'c' => Ok(GroupExpr::Cyclic(self.positive("cyclic order")?)),
            's' => Ok(GroupExpr::Symmetric(self.positive("symmetric degree")?)),
            'a' => Ok(GroupExpr::Alternating(self.positive("alternating degree")?)),
            'd' => {
                let at = self.offset();
                let n = self.int()?;
                if n < 4 || n % 2 == 1 {
                    return Err(Self::error_at(
                        at,
                        format!("dihedral order must be even and at least 4, got {n}"),
                    ));
                }
                Ok(GroupExpr::Dihedral(n))
            }
            'q' => {
                let at = self.offset();
                match self.int()? {
                    8 => Ok(GroupExpr::Quaternion8),
                    n => Err(Self::error_at(
                        at,
                        format!("only Q8 is supported, got Q{n}"),
                    )),
                }
            }
            'f' => {
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                let r = if self.peek().map(|t| t.1) == Some(',') {
                    self.pos += 1;
                    Some(self.int()?)
                } else {
                    None
                };
                self.expect(')')?;
                group::metacyclic_root(p, q, r.unwrap_or(0))
                    .map_err(|e| Self::error_at(start, e.to_string()))?;
                Ok(GroupExpr::Metacyclic { p, q, r })
            }
            other => Err(Self::error_at(start, format!("unknown group '{other}'"))),
        }
    }
}

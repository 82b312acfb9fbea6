//! Construction expressions and their concrete syntax.
//!
//! ```text
//! expr := "Z" int | "Mat(" int "," expr ")" | "UT(" int "," expr ")"
//!       | "EqDiagUT(" int "," expr ")" | "Triv(" expr ")" | "Dorroh(" expr "," int ")"
//!       | "PolyNil(" expr "," int ")" | "PolyMod(" expr ",[" name {"," name} "])"
//!       | "Prod(" expr "," expr ")" | "GroupRing(" expr ",[" int {"," int} "])"
//!       | "CongMat(" int ")" | "Corner(" expr "," name ")"
//!       | "Quot(" expr ",[" name {"," name} "])" | "Table(" path ")"
//! ```
//!
//! Whitespace between tokens is ignored. Element names may contain nested
//! brackets and commas, e.g. `[[0,1],[0,0]]`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::normalize_name;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    /// Integers modulo n.
    Z(usize),
    /// Full n×n matrices.
    Mat(usize, Box<RingExpr>),
    /// Upper triangular n×n matrices.
    UT(usize, Box<RingExpr>),
    /// Upper triangular matrices with a constant diagonal.
    EqDiagUT(usize, Box<RingExpr>),
    /// Trivial extension T(R,R).
    Triv(Box<RingExpr>),
    /// Dorroh extension by Z_k.
    Dorroh(Box<RingExpr>, usize),
    /// R[x]/(x^n).
    PolyNil(Box<RingExpr>, usize),
    /// R[x]/(f) for monic f with the listed lower coefficients.
    PolyMod(Box<RingExpr>, Vec<String>),
    Prod(Box<RingExpr>, Box<RingExpr>),
    /// Group ring over Z_{d1} × … × Z_{dk}.
    GroupRing(Box<RingExpr>, Vec<usize>),
    /// 2×2 matrices over Z_{2k} with a ≡ d, b ≡ c ≡ 0 (mod 2).
    CongMat(usize),
    /// eRe for a central idempotent e.
    Corner(Box<RingExpr>, String),
    /// R/I with I generated by the named elements.
    Quot(Box<RingExpr>, Vec<String>),
    Table(PathBuf),
}

impl RingExpr {
    pub fn parse(src: &str) -> Result<RingExpr> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            RingExpr::Z(_) | RingExpr::CongMat(_) | RingExpr::Table(_) => 0,
            RingExpr::Mat(_, e)
            | RingExpr::UT(_, e)
            | RingExpr::EqDiagUT(_, e)
            | RingExpr::Triv(e)
            | RingExpr::Dorroh(e, _)
            | RingExpr::PolyNil(e, _)
            | RingExpr::PolyMod(e, _)
            | RingExpr::GroupRing(e, _)
            | RingExpr::Corner(e, _)
            | RingExpr::Quot(e, _) => 1 + e.depth(),
            RingExpr::Prod(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

impl FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingExpr::parse(s)
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Z(n) => write!(f, "Z {n}"),
            RingExpr::Mat(n, e) => write!(f, "Mat({n}, {e})"),
            RingExpr::UT(n, e) => write!(f, "UT({n}, {e})"),
            RingExpr::EqDiagUT(n, e) => write!(f, "EqDiagUT({n}, {e})"),
            RingExpr::Triv(e) => write!(f, "Triv({e})"),
            RingExpr::Dorroh(e, k) => write!(f, "Dorroh({e}, {k})"),
            RingExpr::PolyNil(e, n) => write!(f, "PolyNil({e}, {n})"),
            RingExpr::PolyMod(e, cs) => write!(f, "PolyMod({e}, [{}])", join(cs)),
            RingExpr::Prod(a, b) => write!(f, "Prod({a}, {b})"),
            RingExpr::GroupRing(e, ds) => write!(f, "GroupRing({e}, [{}])", join(ds)),
            RingExpr::CongMat(k) => write!(f, "CongMat({k})"),
            RingExpr::Corner(e, name) => write!(f, "Corner({e}, {name})"),
            RingExpr::Quot(e, gens) => write!(f, "Quot({e}, [{}])", join(gens)),
            RingExpr::Table(p) => write!(f, "Table({})", p.display()),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(got) => Err(self.error(format!("expected `{c}`, found `{got}`"))),
            None => Err(self.error(format!("expected `{c}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a constructor name"));
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        let start = self.pos;
        self.pos += len;
        self.src[start..start + len]
            .parse()
            .map_err(|_| Error::Parse {
                offset: start,
                message: "integer out of range".into(),
            })
    }

    /// Raw text up to the next `,`, `)` or `]` at bracket depth zero.
    fn balanced(&mut self, stop_at_comma: bool) -> Result<String> {
        self.skip_ws();
        let mut depth = 0usize;
        let start = self.pos;
        for (i, c) in self.rest().char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth == 0 => {
                    self.pos = start + i;
                    return Ok(self.src[start..start + i].to_string());
                }
                ')' | ']' => depth -= 1,
                ',' if depth == 0 && stop_at_comma => {
                    self.pos = start + i;
                    return Ok(self.src[start..start + i].to_string());
                }
                _ => {}
            }
        }
        Err(self.error("unbalanced brackets"))
    }

    fn name(&mut self) -> Result<String> {
        let raw = self.balanced(true)?;
        let name = normalize_name(&raw);
        if name.is_empty() {
            return Err(self.error("expected an element name"));
        }
        Ok(name)
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('[')?;
        let mut out = vec![item(self)?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(item(self)?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn sub(&mut self) -> Result<Box<RingExpr>> {
        Ok(Box::new(self.expr()?))
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let start = self.pos;
        let head = self.ident()?.to_string();
        if head == "Z" {
            return Ok(RingExpr::Z(self.int()?));
        }
        self.expect('(')?;
        let e = match head.as_str() {
            "Mat" | "UT" | "EqDiagUT" => {
                let n = self.int()?;
                self.expect(',')?;
                let e = self.sub()?;
                match head.as_str() {
                    "Mat" => RingExpr::Mat(n, e),
                    "UT" => RingExpr::UT(n, e),
                    _ => RingExpr::EqDiagUT(n, e),
                }
            }
            "Triv" => RingExpr::Triv(self.sub()?),
            "Dorroh" | "PolyNil" => {
                let e = self.sub()?;
                self.expect(',')?;
                let k = self.int()?;
                if head == "Dorroh" {
                    RingExpr::Dorroh(e, k)
                } else {
                    RingExpr::PolyNil(e, k)
                }
            }
            "PolyMod" | "Quot" => {
                let e = self.sub()?;
                self.expect(',')?;
                let names = self.list(|p| p.name())?;
                if head == "PolyMod" {
                    RingExpr::PolyMod(e, names)
                } else {
                    RingExpr::Quot(e, names)
                }
            }
            "Prod" => {
                let a = self.sub()?;
                self.expect(',')?;
                RingExpr::Prod(a, self.sub()?)
            }
            "GroupRing" => {
                let e = self.sub()?;
                self.expect(',')?;
                RingExpr::GroupRing(e, self.list(|p| p.int())?)
            }
            "CongMat" => RingExpr::CongMat(self.int()?),
            "Corner" => {
                let e = self.sub()?;
                self.expect(',')?;
                RingExpr::Corner(e, self.name()?)
            }
            "Table" => {
                let path = self.balanced(false)?;
                let path = path.trim();
                if path.is_empty() {
                    return Err(self.error("expected a path"));
                }
                RingExpr::Table(PathBuf::from(path))
            }
            other => {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unknown constructor `{other}`"),
                })
            }
        };
        self.expect(')')?;
        Ok(e)
    }
}

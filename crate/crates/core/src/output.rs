//! The line-oriented machine format:
//!
//! ```text
//! verdict <property> ring="<expr>" result=<status> [witness="<names>"]
//! ```
//!
//! Quoted fields escape `"` and `\` with a backslash.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::verdict::{Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictLine {
    pub property: String,
    pub ring: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl VerdictLine {
    pub fn new(property: impl fmt::Display, ring_expr: &str, verdict: &Verdict, ring: &FiniteRing) -> Self {
        VerdictLine {
            property: property.to_string(),
            ring: ring_expr.to_string(),
            status: verdict.status,
            witness: (!verdict.witness.is_empty()).then(|| verdict.render_witness(ring)),
        }
    }

    pub fn parse(line: &str) -> Result<Self> {
        let mut p = Cursor { src: line, pos: 0 };
        p.keyword("verdict ")?;
        let property = p.word()?.to_string();
        p.keyword(" ring=")?;
        let ring = p.quoted()?;
        p.keyword(" result=")?;
        let status_src = p.word()?;
        let status = Status::parse(status_src).ok_or_else(|| p.error(format!("unknown result {status_src:?}")))?;
        let witness = if p.at_end() {
            None
        } else {
            p.keyword(" witness=")?;
            Some(p.quoted()?)
        };
        if !p.at_end() {
            return Err(p.error("trailing input".into()));
        }
        Ok(VerdictLine {
            property,
            ring,
            status,
            witness,
        })
    }
}

impl fmt::Display for VerdictLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict {} ring=\"{}\" result={}", self.property, escape(&self.ring), self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " witness=\"{}\"", escape(w))?;
        }
        Ok(())
    }
}

impl FromStr for VerdictLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VerdictLine::parse(s)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            offset: self.pos,
            message,
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        if self.rest().starts_with(kw) {
            self.pos += kw.len();
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", kw.trim())))
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        let rest = self.rest();
        let len = rest.find(' ').unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a word".into()));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn quoted(&mut self) -> Result<String> {
        self.keyword("\"")?;
        let mut out = String::new();
        let mut chars = self.rest().char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    self.pos += i + 1;
                    return Ok(out);
                }
                '\\' => match chars.next() {
                    Some((_, e @ ('"' | '\\'))) => out.push(e),
                    _ => {
                        self.pos += i;
                        return Err(self.error("bad escape".into()));
                    }
                },
                c => out.push(c),
            }
        }
        Err(self.error("unterminated string".into()))
    }
}

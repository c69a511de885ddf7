//! Knot-expression parser.
//!
//! ```text
//! expr := "U" | "T(" int "," int ")" | "twist(" int ")"
//!       | "seifert(" path-or-inline ")" | "mirror(" expr ")"
//!       | "sum(" expr { "," expr } ")" | "cable(" int "," int ";" expr ")"
//! ```
//!
//! Whitespace between tokens is ignored. Error offsets are byte offsets
//! into the original text.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::seifert::{KnotExpr, SeifertMatrix};

pub fn parse_knot_expr(text: &str) -> Result<KnotExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input after expression"));
    }
    e.validate()?;
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax { offset: self.pos, message: message.into() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{tok}'")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(self.rest().len());
        &self.src[self.pos..self.pos + len]
    }

    fn digits(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let mut s = String::new();
        if let Some(c @ ('-' | '+')) = self.rest().chars().next() {
            s.push(c);
            self.pos += 1;
            self.skip_ws();
        }
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected an integer"));
        }
        s.push_str(&self.src[self.pos..self.pos + len]);
        self.pos += len;
        Ok((start, s))
    }

    fn int(&mut self) -> Result<i64> {
        let (start, s) = self.digits()?;
        s.parse().map_err(|_| Error::Syntax { offset: start, message: format!("integer out of range: {s}") })
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let (_, s) = self.digits()?;
        Ok(s.parse().expect("validated digits"))
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let head = self.word().to_string();
        self.pos += head.len();
        match head.as_str() {
            "U" => Ok(KnotExpr::Unknot),
            "T" => {
                self.expect("(")?;
                let p = self.int()?;
                self.expect(",")?;
                let q = self.int()?;
                self.expect(")")?;
                Ok(KnotExpr::Torus(p, q))
            }
            "twist" => {
                self.expect("(")?;
                let m = self.int()?;
                self.expect(")")?;
                Ok(KnotExpr::Twist(m))
            }
            "mirror" => {
                self.expect("(")?;
                let k = self.expr()?;
                self.expect(")")?;
                Ok(KnotExpr::mirror(k))
            }
            "sum" => {
                self.expect("(")?;
                let mut ks = vec![self.expr()?];
                while self.eat(",") {
                    ks.push(self.expr()?);
                }
                self.expect(")")?;
                Ok(KnotExpr::Sum(ks))
            }
            "cable" => {
                self.expect("(")?;
                let m = self.int()?;
                self.expect(",")?;
                let r = self.int()?;
                self.expect(";")?;
                let k = self.expr()?;
                self.expect(")")?;
                Ok(KnotExpr::cable(m, r, k))
            }
            "seifert" => {
                self.expect("(")?;
                self.skip_ws();
                let v = if self.rest().starts_with('[') { self.inline_matrix()? } else { self.matrix_file()? };
                self.expect(")")?;
                Ok(KnotExpr::Literal(v))
            }
            "" => Err(self.error("expected an expression")),
            other => Err(Error::Syntax { offset: start, message: format!("unknown constructor '{other}'") }),
        }
    }

    fn inline_matrix(&mut self) -> Result<SeifertMatrix> {
        let mut rows = Vec::new();
        self.expect("[")?;
        if !self.eat("]") {
            loop {
                self.expect("[")?;
                let mut row = Vec::new();
                if !self.eat("]") {
                    row.push(self.bigint()?);
                    while self.eat(",") {
                        row.push(self.bigint()?);
                    }
                    self.expect("]")?;
                }
                rows.push(row);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect("]")?;
        }
        SeifertMatrix::infer(rows).map_err(|e| Error::Semantic(e.to_string()))
    }

    fn matrix_file(&mut self) -> Result<SeifertMatrix> {
        let len = self.rest().find(')').ok_or_else(|| self.error("unterminated seifert(...)"))?;
        let path = self.src[self.pos..self.pos + len].trim();
        if path.is_empty() {
            return Err(self.error("expected a path or an inline matrix"));
        }
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        self.pos += len;
        SeifertMatrix::from_json(&serde_json::from_str(&text)?).map_err(|e| Error::Semantic(e.to_string()))
    }
}

//! A small s-expression reader with source positions.

use super::FormulaError;

#[derive(Clone, Debug, PartialEq)]
pub enum SExpr {
    Atom(String, Pos),
    List(Vec<SExpr>, Pos),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl SExpr {
    pub fn pos(&self) -> Pos {
        match self {
            SExpr::Atom(_, p) | SExpr::List(_, p) => *p,
        }
    }

    pub fn atom(&self) -> Option<&str> {
        match self {
            SExpr::Atom(s, _) => Some(s),
            _ => None,
        }
    }

    pub fn list(&self) -> Option<&[SExpr]> {
        match self {
            SExpr::List(v, _) => Some(v),
            _ => None,
        }
    }

    /// The head atom of a list, if any.
    pub fn head(&self) -> Option<&str> {
        self.list().and_then(|v| v.first()).and_then(|h| h.atom())
    }

    pub fn error(&self, msg: impl Into<String>) -> FormulaError {
        let p = self.pos();
        FormulaError::Syntax { line: p.line, col: p.col, msg: msg.into() }
    }
}

/// Reads every top-level expression in `text`.
pub fn read_all(text: &str) -> Result<Vec<SExpr>, FormulaError> {
    let mut r = Reader { chars: text.chars().collect(), i: 0, line: 1, col: 1 };
    let mut out = Vec::new();
    loop {
        r.skip_ws();
        if r.i >= r.chars.len() {
            return Ok(out);
        }
        out.push(r.expr()?);
    }
}

/// Reads exactly one expression.
pub fn read_one(text: &str) -> Result<SExpr, FormulaError> {
    let mut all = read_all(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        0 => Err(FormulaError::Syntax { line: 1, col: 1, msg: "empty input".into() }),
        _ => {
            let p = all[1].pos();
            Err(FormulaError::Syntax { line: p.line, col: p.col, msg: "trailing input after expression".into() })
        }
    }
}

struct Reader {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
}

impl Reader {
    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.col }
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.i];
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.i < self.chars.len() {
            let c = self.chars[self.i];
            if c.is_whitespace() {
                self.bump();
            } else if c == ';' {
                while self.i < self.chars.len() && self.chars[self.i] != '\n' {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expr(&mut self) -> Result<SExpr, FormulaError> {
        self.skip_ws();
        let start = self.pos();
        if self.i >= self.chars.len() {
            return Err(FormulaError::Syntax { line: start.line, col: start.col, msg: "unexpected end of input".into() });
        }
        match self.chars[self.i] {
            '(' => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    if self.i >= self.chars.len() {
                        return Err(FormulaError::Syntax {
                            line: start.line,
                            col: start.col,
                            msg: "unclosed parenthesis".into(),
                        });
                    }
                    if self.chars[self.i] == ')' {
                        self.bump();
                        return Ok(SExpr::List(items, start));
                    }
                    items.push(self.expr()?);
                }
            }
            ')' => Err(FormulaError::Syntax { line: start.line, col: start.col, msg: "unexpected ')'".into() }),
            _ => {
                let mut s = String::new();
                while self.i < self.chars.len() {
                    let c = self.chars[self.i];
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    s.push(self.bump());
                }
                Ok(SExpr::Atom(s, start))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_lists_with_comments() {
        let e = read_one("; leading\n(a (b c) ; trailing\n d)").unwrap();
        let items = e.list().unwrap();
        assert_eq!(items.len(), 3);
        assert_eq!(items[2].atom(), Some("d"));
        assert_eq!(items[2].pos().line, 3);
    }

    #[test]
    fn unclosed_reports_position() {
        match read_one("  (a b") {
            Err(FormulaError::Syntax { line: 1, col: 3, .. }) => {}
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn stray_close_paren() {
        assert!(read_one(")").is_err());
        assert!(read_one("(a) b").is_err());
    }
}

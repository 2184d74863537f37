//! The functor-expression language.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := atom ('*' atom)*
//! atom   := Sym[a] | Wedge[a] | Div[a] | Pow[a] | Q[a] | Nat
//!         | L[λ] | W[λ] | C[λ] | T(d,r) | Lsum(d,r)
//!         | Dual(expr) | Tw(expr,r) | '(' expr ')'
//! ```
//!
//! `λ` is a comma-separated list of parts (possibly empty). Columns in
//! errors are 1-based character positions.

use partitions::Partition;
use polyrep::FunctorExpr;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("'{n}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ParseError { column: col, message: format!("integer '{s}' is too large") })?;
            out.push((Tok::Int(n), col));
        } else if "[](),*+".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ParseError { column: col, message: format!("unexpected character '{c}'") });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: col, message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<usize, ParseError> {
        let (t, col) = self.next();
        if t == Tok::Sym(c) {
            Ok(col)
        } else {
            self.err(col, format!("expected '{c}', found {}", t.describe()))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        match self.next() {
            (Tok::Int(n), _) => Ok(n),
            (t, col) => self.err(col, format!("expected an integer, found {}", t.describe())),
        }
    }

    fn expr(&mut self) -> Result<FunctorExpr, ParseError> {
        let mut acc = self.term()?;
        while self.peek().0 == Tok::Sym('+') {
            self.next();
            acc = FunctorExpr::sum(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FunctorExpr, ParseError> {
        let mut acc = self.atom()?;
        while self.peek().0 == Tok::Sym('*') {
            self.next();
            acc = FunctorExpr::tensor(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn bracket_int(&mut self) -> Result<usize, ParseError> {
        self.expect('[')?;
        let a = self.int()?;
        self.expect(']')?;
        Ok(a)
    }

    fn partition(&mut self) -> Result<Partition, ParseError> {
        let open = self.expect('[')?;
        let mut parts = Vec::new();
        if self.peek().0 != Tok::Sym(']') {
            parts.push(self.int()?);
            while self.peek().0 == Tok::Sym(',') {
                self.next();
                parts.push(self.int()?);
            }
        }
        self.expect(']')?;
        Partition::new(parts).or_else(|e| self.err(open + 1, format!("not a partition: {e}")))
    }

    fn pair(&mut self) -> Result<(usize, usize), ParseError> {
        self.expect('(')?;
        let a = self.int()?;
        self.expect(',')?;
        let b = self.int()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<FunctorExpr, ParseError> {
        use FunctorExpr::*;
        let (t, col) = self.next();
        let name = match t {
            Tok::Ident(s) => s,
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(e);
            }
            other => return self.err(col, format!("expected a functor, found {}", other.describe())),
        };
        Ok(match name.as_str() {
            "Sym" => Sym(self.bracket_int()?),
            "Wedge" => Wedge(self.bracket_int()?),
            "Div" => Div(self.bracket_int()?),
            "Pow" => TensorPower(self.bracket_int()?),
            "Q" => Q(self.bracket_int()?),
            "Nat" => Nat,
            "L" => Simple(self.partition()?),
            "W" => Weyl(self.partition()?),
            "C" => SchurMod(self.partition()?),
            "T" => {
                let (d, r) = self.pair()?;
                BigT(d, r)
            }
            "Lsum" => {
                let (d, r) = self.pair()?;
                BigL(d, r)
            }
            "Dual" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                FunctorExpr::dual(e)
            }
            "Tw" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(',')?;
                let r = self.int()?;
                self.expect(')')?;
                FunctorExpr::twist(e, r)
            }
            _ => return self.err(col, format!("unknown functor '{name}'")),
        })
    }
}

pub fn parse(text: &str) -> Result<FunctorExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        (Tok::End, _) => Ok(e),
        (t, col) => Err(ParseError { column: *col, message: format!("unexpected {}", t.describe()) }),
    }
}

/// Parse and check that the total degree is defined at `p`.
pub fn parse_with_degree(text: &str, p: usize) -> Result<(FunctorExpr, usize), ParseError> {
    let e = parse(text)?;
    match e.degree(p) {
        Some(d) => Ok((e, d)),
        None => Err(ParseError { column: 1, message: "summands have different degrees".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_errors() {
        let e = parse("Nat + Sym[1] * Wedge[0]").unwrap();
        assert!(matches!(e, FunctorExpr::Sum(..)));
        assert_eq!(parse("Sym[").unwrap_err().column, 5);
        assert_eq!(parse("Sym[2] Nat").unwrap_err().column, 8);
        assert_eq!(parse("Foo[1]").unwrap_err().column, 1);
        assert_eq!(parse("L[1,2]").unwrap_err().column, 3);
        assert_eq!(parse("Sym[2] ? Nat").unwrap_err().column, 8);
        assert_eq!(parse("L[]").unwrap(), FunctorExpr::Simple(Partition::empty()));
    }
}

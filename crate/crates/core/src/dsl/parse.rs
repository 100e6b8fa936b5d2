use super::{ActionItem, ConstructionSpec, PcRelation, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Punct(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let s: String = chars[i..j].iter().collect();
            let v = s.parse::<u64>().map_err(|_| Error::SyntaxError {
                line,
                column,
                message: format!("integer {s} too large"),
            })?;
            column += j - i;
            i = j;
            Tok::Int(v)
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let s: String = chars[i..j].iter().collect();
            column += j - i;
            i = j;
            Tok::Ident(s)
        } else if "()[]{},;|*^=-".contains(c) {
            column += 1;
            i += 1;
            Tok::Punct(c)
        } else {
            return Err(Error::SyntaxError {
                line,
                column,
                message: format!("unexpected character {c:?}"),
            });
        };
        out.push(Token { tok, line: start.0, column: start.1 });
    }
    out.push(Token { tok: Tok::Eof, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

/// Parses a construction expression; errors carry line and column.
pub fn parse_construction(text: &str) -> Result<ConstructionSpec> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::Eof {
        return p.fail("expected \"x\" or end of input");
    }
    Ok(e)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        let t = &self.toks[self.pos];
        let found = match &t.tok {
            Tok::Int(v) => format!("{v}"),
            Tok::Ident(s) => format!("{s:?}"),
            Tok::Punct(c) => format!("{c:?}"),
            Tok::Eof => "end of input".to_string(),
        };
        Err(Error::SyntaxError {
            line: t.line,
            column: t.column,
            message: format!("{msg}, found {found}"),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Punct(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&format!("expected {c:?}"))
        }
    }

    fn int(&mut self) -> Result<u64> {
        match *self.peek() {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(v)
            }
            _ => self.fail("expected integer"),
        }
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let v = self.int()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => self.fail("expected name"),
        }
    }

    fn is_keyword_call(&self, kw: &str) -> bool {
        self.peek() == &Tok::Ident(kw.into()) && self.peek_at(1) == &Tok::Punct('(')
    }

    fn expr(&mut self) -> Result<ConstructionSpec> {
        let mut e = self.term()?;
        while self.peek() == &Tok::Ident("x".into()) {
            self.pos += 1;
            let r = self.term()?;
            e = ConstructionSpec::DirectProduct(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<ConstructionSpec> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        if self.is_keyword_call("C") {
            self.pos += 2;
            let n = self.int()?;
            self.expect(')')?;
            return Ok(ConstructionSpec::Cyclic(n));
        }
        if self.is_keyword_call("SD") {
            self.pos += 2;
            let normal = self.expr()?;
            self.expect(',')?;
            let acting = self.expr()?;
            self.expect(',')?;
            let mut action = vec![self.action_item()?];
            while self.eat('|') {
                action.push(self.action_item()?);
            }
            self.expect(')')?;
            return Ok(ConstructionSpec::Semidirect {
                normal: Box::new(normal),
                acting: Box::new(acting),
                action,
            });
        }
        if self.is_keyword_call("PC") {
            self.pos += 2;
            return self.pc_body();
        }
        if self.is_keyword_call("Perm") {
            self.pos += 2;
            return self.perm_body();
        }
        match self.peek() {
            Tok::Ident(s) if s != "x" => {
                let s = s.clone();
                self.pos += 1;
                Ok(ConstructionSpec::Named(s))
            }
            _ => self.fail("expected C(…), SD(…), PC(…), Perm(…), a group name or \"(\""),
        }
    }

    fn action_item(&mut self) -> Result<ActionItem> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.fail("expected pow(…), mat[…] or imgs{…}"),
        };
        match kw.as_str() {
            "pow" => {
                self.pos += 1;
                self.expect('(')?;
                let k = self.signed()?;
                self.expect(')')?;
                Ok(ActionItem::Pow(k))
            }
            "mat" => {
                self.pos += 1;
                self.expect('[')?;
                let mut rows = vec![Vec::new()];
                loop {
                    if self.eat(']') {
                        break;
                    }
                    if self.eat(';') {
                        rows.push(Vec::new());
                        continue;
                    }
                    let v = self.signed()?;
                    rows.last_mut().unwrap().push(v);
                }
                Ok(ActionItem::Mat(rows))
            }
            "imgs" => {
                self.pos += 1;
                self.expect('{')?;
                let mut ws = vec![self.word()?];
                while self.eat(',') {
                    ws.push(self.word()?);
                }
                self.expect('}')?;
                Ok(ActionItem::Imgs(ws))
            }
            _ => self.fail("expected pow(…), mat[…] or imgs{…}"),
        }
    }

    fn word(&mut self) -> Result<Word> {
        if self.peek() == &Tok::Int(1) {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut w = Vec::new();
        loop {
            let g = self.ident()?;
            let e = if self.eat('^') { self.signed()? } else { 1 };
            w.push((g, e));
            if !self.eat('*') {
                break;
            }
        }
        Ok(w)
    }

    fn pc_body(&mut self) -> Result<ConstructionSpec> {
        let p = self.int()?;
        self.expect(';')?;
        let mut gens = vec![self.ident()?];
        while self.eat(',') {
            gens.push(self.ident()?);
        }
        let mut relations = Vec::new();
        if self.eat(';') {
            loop {
                if self.eat('[') {
                    let a = self.ident()?;
                    self.expect(',')?;
                    let b = self.ident()?;
                    self.expect(']')?;
                    self.expect('=')?;
                    let word = self.word()?;
                    relations.push(PcRelation::Commutator { a, b, word });
                } else {
                    let gen = self.ident()?;
                    self.expect('^')?;
                    if self.int()? != p {
                        self.pos -= 1;
                        return self.fail(&format!("power relations must use the exponent {p}"));
                    }
                    self.expect('=')?;
                    let word = self.word()?;
                    relations.push(PcRelation::Power { gen, word });
                }
                if !self.eat(',') {
                    break;
                }
            }
        }
        self.expect(')')?;
        Ok(ConstructionSpec::PcGroup { p, gens, relations })
    }

    fn perm_body(&mut self) -> Result<ConstructionSpec> {
        let degree = self.int()?;
        self.expect(';')?;
        let mut gens = Vec::new();
        loop {
            let mut cycles = Vec::new();
            if self.peek() != &Tok::Punct('(') {
                return self.fail("expected a cycle \"(\"");
            }
            while self.eat('(') {
                let mut c = Vec::new();
                while let Tok::Int(v) = *self.peek() {
                    self.pos += 1;
                    c.push(v as u32);
                }
                self.expect(')')?;
                if !c.is_empty() {
                    cycles.push(c);
                }
            }
            gens.push(cycles);
            if !self.eat(',') {
                break;
            }
        }
        self.expect(')')?;
        Ok(ConstructionSpec::PermGroup { degree, gens })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_cyclics() {
        assert_eq!(
            parse_construction("C(9) x C(3)").unwrap(),
            ConstructionSpec::DirectProduct(
                Box::new(ConstructionSpec::Cyclic(9)),
                Box::new(ConstructionSpec::Cyclic(3))
            )
        );
    }

    #[test]
    fn unterminated_cyclic_reports_column() {
        match parse_construction("C(") {
            Err(Error::SyntaxError { line, column, .. }) => assert_eq!((line, column), (1, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn matrix_action() {
        let s = parse_construction("SD(C(11) x C(11), C(5), mat[3 0; 0 9])").unwrap();
        match s {
            ConstructionSpec::Semidirect { action, .. } => {
                assert_eq!(action, vec![ActionItem::Mat(vec![vec![3, 0], vec![0, 9]])])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pc_and_perm_round_trip() {
        for text in [
            "PC(2; a,b,c,d,e; a^2=d, b^2=e, c^2=d*e, [b,a]=e, [c,a]=d)",
            "Perm(4; (0 1 2 3), (0 2))",
            "SD(Q8, C(3), imgs{g2, g1*g2, g3^-1})",
            "SD(C(7), C(6), pow(-1) | pow(2))",
            "C(2) x (C(3) x C(4))",
        ] {
            let a = parse_construction(text).unwrap();
            let b = parse_construction(&a.to_string()).unwrap();
            assert_eq!(a, b, "{text}");
        }
    }

    #[test]
    fn wrong_power_exponent_rejected() {
        assert!(parse_construction("PC(3; a,b; a^2=b)").is_err());
    }
}

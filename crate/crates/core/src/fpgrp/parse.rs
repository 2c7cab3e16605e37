//! Parser for presentations such as `<x,y | x^2, (x*y)^3, x^y = y^x>`.

use std::fmt;

use super::FpError;

/// A letter is `g + 1` for generator `g` and `-(g + 1)` for its inverse.
pub type Word = Vec<i32>;

pub fn inverse_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn power(w: &[i32], e: i64) -> Word {
    let base = if e < 0 { inverse_word(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    free_reduce(&out)
}

/// `b^-1 a b`
fn conjugate(a: &[i32], b: &[i32]) -> Word {
    let mut out = inverse_word(b);
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    free_reduce(&out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Presentation, FpError> {
        let mut p = Parser::new(text, Vec::new());
        let pres = p.presentation()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("trailing input after '>'"));
        }
        Ok(pres)
    }

    /// Parses a single word over this presentation's generators.
    pub fn word(&self, text: &str) -> Result<Word, FpError> {
        let mut p = Parser::new(text, self.generators.clone());
        let w = p.relation()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(w)
    }

    /// A copy with extra relators given as text.
    pub fn with_relators(&self, extra: &[&str]) -> Result<Presentation, FpError> {
        let mut out = self.clone();
        for r in extra {
            let w = self.word(r)?;
            if !w.is_empty() {
                out.relators.push(w);
            }
        }
        Ok(out)
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn format_word(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .iter()
            .map(|&l| {
                let name = &self.generators[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{}^-1", name)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(","), rels.join(", "))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    gens: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, gens: Vec<String>) -> Self {
        Parser { src, pos: 0, gens }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn error_at(&self, pos: usize, msg: &str) -> FpError {
        let (line, col) = self.location(pos);
        FpError::Syntax { line, col, msg: msg.to_string() }
    }

    fn error(&self, msg: &str) -> FpError {
        self.error_at(self.pos, msg)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FpError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c)))
        }
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        let len = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += len;
        Some((start, &rest[..len]))
    }

    fn integer(&mut self) -> Option<i64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        rest[..len].parse().ok()
    }

    fn presentation(&mut self) -> Result<Presentation, FpError> {
        self.expect('<')?;
        loop {
            let at = self.pos;
            let (start, name) = self.ident().ok_or_else(|| self.error("expected generator name"))?;
            if self.gens.iter().any(|g| g == name) {
                return Err(self.error_at(start.max(at), &format!("duplicate generator {}", name)));
            }
            self.gens.push(name.to_string());
            if !self.eat(',') {
                break;
            }
        }
        let mut relators = Vec::new();
        if self.eat('|') {
            self.skip_ws();
            if self.peek() != Some('>') {
                loop {
                    let w = self.relation()?;
                    if !w.is_empty() {
                        relators.push(w);
                    }
                    if !self.eat(',') {
                        break;
                    }
                }
            }
        }
        self.expect('>')?;
        Ok(Presentation { generators: self.gens.clone(), relators })
    }

    fn relation(&mut self) -> Result<Word, FpError> {
        let lhs = self.word()?;
        if self.eat('=') {
            let rhs = self.word()?;
            let mut w = lhs;
            w.extend(inverse_word(&rhs));
            return Ok(free_reduce(&w));
        }
        Ok(lhs)
    }

    fn starts_term(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '[' || c == '1')
    }

    fn word(&mut self) -> Result<Word, FpError> {
        let mut w = self.term()?;
        loop {
            if self.eat('*') {
                w.extend(self.term()?);
            } else if self.starts_term() {
                w.extend(self.term()?);
            } else {
                break;
            }
        }
        Ok(free_reduce(&w))
    }

    fn term(&mut self) -> Result<Word, FpError> {
        let mut w = self.atom()?;
        while self.eat('^') {
            self.skip_ws();
            match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    let e = self.integer().ok_or_else(|| self.error("expected exponent"))?;
                    w = power(&w, -e);
                }
                Some(c) if c.is_ascii_digit() => {
                    let e = self.integer().ok_or_else(|| self.error("bad exponent"))?;
                    w = power(&w, e);
                }
                _ => {
                    let b = self.atom()?;
                    w = conjugate(&w, &b);
                }
            }
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Word, FpError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                // commutator [a,b] = a^-1 b^-1 a b
                self.pos += 1;
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                let mut w = inverse_word(&a);
                w.extend(inverse_word(&b));
                w.extend(a);
                w.extend(b);
                Ok(free_reduce(&w))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Vec::new())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (start, name) = self.ident().unwrap();
                self.resolve(start, name)
            }
            Some(c) => Err(self.error(&format!("unexpected '{}'", c))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn letter(&self, name: &str) -> Option<i32> {
        if let Some(i) = self.gens.iter().position(|g| g == name) {
            return Some(i as i32 + 1);
        }
        // capitalised name as inverse shorthand
        let lower = name.to_lowercase();
        if lower != name {
            if let Some(i) = self.gens.iter().position(|g| *g == lower) {
                return Some(-(i as i32 + 1));
            }
        }
        None
    }

    fn resolve(&self, start: usize, name: &str) -> Result<Word, FpError> {
        if let Some(l) = self.letter(name) {
            return Ok(vec![l]);
        }
        // juxtaposed one-letter generators, as in `xyz`
        if self.gens.iter().all(|g| g.chars().count() == 1) {
            let mut w = Vec::new();
            for (k, c) in name.char_indices() {
                match self.letter(&c.to_string()) {
                    Some(l) => w.push(l),
                    None => return Err(self.unknown(start + k, &c.to_string())),
                }
            }
            return Ok(free_reduce(&w));
        }
        Err(self.unknown(start, name))
    }

    fn unknown(&self, pos: usize, name: &str) -> FpError {
        let (line, col) = self.location(pos);
        FpError::UnknownGenerator { name: name.to_string(), line, col }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_and_powers() {
        let p = Presentation::parse("<x,y,z | (x*y^z)^4>").unwrap();
        assert_eq!(p.relators[0].len(), 16);
        assert_eq!(&p.relators[0][..4], &[1, -3, 2, 3]);
        let w = p.word("x^-1 X^-1").unwrap();
        assert!(w.is_empty());
        assert_eq!(p.word("[x,y]").unwrap(), vec![-1, -2, 1, 2]);
        assert_eq!(p.word("x^y = y").unwrap(), vec![-2, 1]);
        assert_eq!(p.word("xyz").unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn errors_carry_positions() {
        match Presentation::parse("<x,y |\n  x^2, (x*w)^3>") {
            Err(FpError::UnknownGenerator { name, line, col }) => {
                assert_eq!((name.as_str(), line, col), ("w", 2, 11));
            }
            other => panic!("unexpected {:?}", other),
        }
        match Presentation::parse("<x | x^2") {
            Err(FpError::Syntax { line, col, .. }) => assert_eq!((line, col), (1, 9)),
            other => panic!("unexpected {:?}", other),
        }
        assert!(Presentation::parse("<x, x | x>").is_err());
    }
}

//! Precedence-climbing parser for the ASCII expression grammar, with the
//! usual Unicode symbols accepted as aliases.
//!
//! ```text
//! term   := cond
//! cond   := iff ( "<|" iff "|>" iff )?      non-associative
//! iff    := xor  ( "<->" xor )*
//! xor    := or   ( "^^"  or  )*
//! or     := and  ( "||"  and )*
//! and    := nand ( "&&"  nand)*
//! nand   := unary ( ("~&" | "~|") unary )*
//! unary  := "!" unary | primary "'"*
//! primary:= "T" | "F" | "U" | atom | variable | "(" term ")"
//! ```

use crate::error::{Error, Result};
use crate::normalform::DEFAULT_MAX_DEPTH;

use super::{is_atom_name, is_var_name, Atom, BinOp, Term, Var};

pub fn parse(text: &str) -> Result<Term> {
    Parser::new(text).parse()
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    CondOpen,
    CondClose,
    Op(BinOp),
    Not,
    Prime,
    T,
    F,
    U,
    Atom(Atom),
    Var(Var),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::CondOpen => "`<|`".into(),
            Tok::CondClose => "`|>`".into(),
            Tok::Op(op) => format!("`{}`", op_symbol(*op)),
            Tok::Not => "`!`".into(),
            Tok::Prime => "`'`".into(),
            Tok::T => "`T`".into(),
            Tok::F => "`F`".into(),
            Tok::U => "`U`".into(),
            Tok::Atom(a) => format!("atom `{a}`"),
            Tok::Var(v) => format!("variable `{v}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn op_symbol(op: BinOp) -> &'static str {
    match op {
        BinOp::And => "&&",
        BinOp::Or => "||",
        BinOp::Iff => "<->",
        BinOp::Xor => "^^",
        BinOp::Nand => "~&",
        BinOp::Nor => "~|",
    }
}

// Binding strength, loosest first. Nand and Nor share a level.
fn precedence(op: BinOp) -> u8 {
    match op {
        BinOp::Iff => 1,
        BinOp::Xor => 2,
        BinOp::Or => 3,
        BinOp::And => 4,
        BinOp::Nand | BinOp::Nor => 5,
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.char_indices().peekable(),
            src,
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, line: usize, column: usize, expected: &[&str], found: String) -> Error {
        Error::Parse {
            line,
            column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn tokenize(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        loop {
            while matches!(self.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            let (line, column) = (self.line, self.column);
            let Some(c) = self.bump() else {
                out.push(Spanned { tok: Tok::Eof, line, column });
                return Ok(out);
            };
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '!' | '¬' => Tok::Not,
                '\'' | '′' => Tok::Prime,
                '◁' => Tok::CondOpen,
                '▷' => Tok::CondClose,
                '∧' | '∨' | '↔' | '⊕' | '⊼' | '⊽' => {
                    // optional "ᵒ" marking left-sequential evaluation
                    self.eat('ᵒ');
                    Tok::Op(match c {
                        '∧' => BinOp::And,
                        '∨' => BinOp::Or,
                        '↔' => BinOp::Iff,
                        '⊕' => BinOp::Xor,
                        '⊼' => BinOp::Nand,
                        _ => BinOp::Nor,
                    })
                }
                '<' => {
                    if self.eat('|') {
                        Tok::CondOpen
                    } else if self.eat('-') && self.eat('>') {
                        Tok::Op(BinOp::Iff)
                    } else {
                        let found = self.found_here();
                        return Err(self.error(self.line, self.column, &["`<|`", "`<->`"], found));
                    }
                }
                '|' => {
                    if self.eat('|') {
                        Tok::Op(BinOp::Or)
                    } else if self.eat('>') {
                        Tok::CondClose
                    } else {
                        let found = self.found_here();
                        return Err(self.error(self.line, self.column, &["`||`", "`|>`"], found));
                    }
                }
                '&' => {
                    if !self.eat('&') {
                        let found = self.found_here();
                        return Err(self.error(self.line, self.column, &["`&&`"], found));
                    }
                    Tok::Op(BinOp::And)
                }
                '^' => {
                    if !self.eat('^') {
                        let found = self.found_here();
                        return Err(self.error(self.line, self.column, &["`^^`"], found));
                    }
                    Tok::Op(BinOp::Xor)
                }
                '~' => {
                    if self.eat('&') {
                        Tok::Op(BinOp::Nand)
                    } else if self.eat('|') {
                        Tok::Op(BinOp::Nor)
                    } else {
                        let found = self.found_here();
                        return Err(self.error(self.line, self.column, &["`~&`", "`~|`"], found));
                    }
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = self.offset_of_prev(c);
                    while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                        self.bump();
                    }
                    let end = self.chars.peek().map_or(self.src.len(), |&(i, _)| i);
                    let ident = &self.src[start..end];
                    match ident {
                        "T" => Tok::T,
                        "F" => Tok::F,
                        "U" => Tok::U,
                        _ if is_atom_name(ident) => Tok::Atom(Atom(ident.into())),
                        _ if is_var_name(ident) => Tok::Var(Var(ident.into())),
                        _ => {
                            return Err(Error::AtomCase {
                                line,
                                column,
                                ident: ident.to_string(),
                            })
                        }
                    }
                }
                other => {
                    return Err(self.error(
                        line,
                        column,
                        &["a term", "an operator"],
                        format!("`{other}`"),
                    ))
                }
            };
            out.push(Spanned { tok, line, column });
        }
    }

    fn offset_of_prev(&mut self, c: char) -> usize {
        let next = self.chars.peek().map_or(self.src.len(), |&(i, _)| i);
        next - c.len_utf8()
    }

    fn found_here(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("`{c}`"),
            None => "end of input".into(),
        }
    }
}

/// Parser with a configurable nesting limit.
pub struct Parser<'a> {
    src: &'a str,
    max_depth: usize,
}

struct State {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
    max_depth: usize,
}

const BINARY_OPS: [&str; 6] = ["`<->`", "`^^`", "`||`", "`&&`", "`~&`", "`~|`"];
const TERM_START: [&str; 7] = ["`T`", "`F`", "`U`", "atom", "variable", "`(`", "`!`"];

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser {
            src,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }

    pub fn with_max_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }

    pub fn parse(self) -> Result<Term> {
        let toks = Lexer::new(self.src).tokenize()?;
        let mut st = State {
            toks,
            pos: 0,
            depth: 0,
            max_depth: self.max_depth,
        };
        let term = st.cond()?;
        match st.peek() {
            Tok::Eof => Ok(term),
            Tok::CondOpen => {
                // a <| b |> c <| ... : the conditional does not associate
                let mut expected = vec!["end of input"];
                if matches!(term, Term::Cond(..)) {
                    expected.push("parentheses around the nested conditional");
                }
                Err(st.unexpected(&expected))
            }
            _ => {
                let mut expected = vec!["end of input", "`<|`"];
                expected.extend(BINARY_OPS);
                Err(st.unexpected(&expected))
            }
        }
    }
}

impl State {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        let s = &self.toks[self.pos];
        Error::Parse {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.describe(),
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > self.max_depth {
            return Err(Error::DepthLimit {
                depth: self.depth,
                limit: self.max_depth,
            });
        }
        Ok(())
    }

    fn cond(&mut self) -> Result<Term> {
        let then = self.binary(1)?;
        if *self.peek() != Tok::CondOpen {
            return Ok(then);
        }
        self.advance();
        let guard = self.binary(1)?;
        if *self.peek() != Tok::CondClose {
            let mut expected = vec!["`|>`"];
            expected.extend(BINARY_OPS);
            return Err(self.unexpected(&expected));
        }
        self.advance();
        let otherwise = self.binary(1)?;
        Ok(Term::cond(then, guard, otherwise))
    }

    fn binary(&mut self, min_prec: u8) -> Result<Term> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Op(op) if precedence(*op) >= min_prec => *op,
                _ => return Ok(lhs),
            };
            self.advance();
            let rhs = self.binary(precedence(op) + 1)?;
            lhs = Term::bin(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Term> {
        let mut nots = 0usize;
        while *self.peek() == Tok::Not {
            self.advance();
            self.enter()?;
            nots += 1;
        }
        let mut t = self.primary()?;
        while *self.peek() == Tok::Prime {
            self.advance();
            t = Term::prime(t);
        }
        for _ in 0..nots {
            t = Term::not(t);
        }
        self.depth -= nots;
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::T => {
                self.advance();
                Ok(Term::T)
            }
            Tok::F => {
                self.advance();
                Ok(Term::F)
            }
            Tok::U => {
                self.advance();
                Ok(Term::U)
            }
            Tok::Atom(a) => {
                self.advance();
                Ok(Term::Atom(a))
            }
            Tok::Var(v) => {
                self.advance();
                Ok(Term::Var(v))
            }
            Tok::LParen => {
                self.advance();
                self.enter()?;
                let inner = self.cond()?;
                if *self.peek() != Tok::RParen {
                    let mut expected = vec!["`)`", "`<|`"];
                    expected.extend(BINARY_OPS);
                    return Err(self.unexpected(&expected));
                }
                self.advance();
                self.depth -= 1;
                Ok(inner)
            }
            _ => Err(self.unexpected(&TERM_START)),
        }
    }
}

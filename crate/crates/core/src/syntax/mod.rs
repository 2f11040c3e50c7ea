//! The term language: atoms, schema variables, the conditional and the
//! left-sequential connectives, together with parsing, printing and duality.

mod parse;
mod print;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use parse::{parse, Parser};
pub use print::{print, term_json, PrintStyle, Printer};

/// A propositional atom, `[a-z][a-z0-9_]*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Atom> {
        if is_atom_name(name) {
            Ok(Atom(name.into()))
        } else {
            Err(Error::InvalidAtom(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A schema variable, `[A-Z][A-Za-z0-9_]*` other than the constants `T`, `F`, `U`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Result<Var> {
        if is_var_name(name) {
            Ok(Var(name.into()))
        } else {
            Err(Error::InvalidVar(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

pub(crate) fn is_var_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_uppercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !matches!(s, "T" | "F" | "U")
}

/// Binary left-sequential connectives. The left argument is always evaluated first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    /// `x && y`, left-sequential conjunction.
    And,
    /// `x || y`, left-sequential disjunction.
    Or,
    /// `x <-> y`, left-sequential biconditional.
    Iff,
    /// `x ^^ y`, left-sequential exclusive or.
    Xor,
    /// `x ~& y`, left-sequential NAND.
    Nand,
    /// `x ~| y`, left-sequential NOR.
    Nor,
}

impl BinOp {
    pub const ALL: [BinOp; 6] = [
        BinOp::And,
        BinOp::Or,
        BinOp::Iff,
        BinOp::Xor,
        BinOp::Nand,
        BinOp::Nor,
    ];

    pub fn dual(self) -> BinOp {
        match self {
            BinOp::And => BinOp::Or,
            BinOp::Or => BinOp::And,
            BinOp::Iff => BinOp::Xor,
            BinOp::Xor => BinOp::Iff,
            BinOp::Nand => BinOp::Nor,
            BinOp::Nor => BinOp::Nand,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BinOp::And => "and",
            BinOp::Or => "or",
            BinOp::Iff => "iff",
            BinOp::Xor => "xor",
            BinOp::Nand => "nand",
            BinOp::Nor => "nor",
        }
    }
}

/// A term over the full signature.
///
/// `Cond(x, y, z)` is Hoare's conditional `x ◁ y ▷ z`: evaluate `y`, then
/// `x` if it was true and `z` otherwise. The fields are stored in that
/// printed order (then, condition, else).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    T,
    F,
    U,
    Atom(Atom),
    Var(Var),
    Cond(Box<Term>, Box<Term>, Box<Term>),
    Not(Box<Term>),
    Bin(BinOp, Box<Term>, Box<Term>),
}

impl From<Atom> for Term {
    fn from(a: Atom) -> Term {
        Term::Atom(a)
    }
}

impl From<Var> for Term {
    fn from(v: Var) -> Term {
        Term::Var(v)
    }
}

impl Term {
    pub fn cond(then: Term, cond: Term, otherwise: Term) -> Term {
        Term::Cond(Box::new(then), Box::new(cond), Box::new(otherwise))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(t: Term) -> Term {
        Term::Not(Box::new(t))
    }

    pub fn bin(op: BinOp, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn and(l: Term, r: Term) -> Term {
        Term::bin(BinOp::And, l, r)
    }

    pub fn or(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Or, l, r)
    }

    pub fn iff(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Iff, l, r)
    }

    pub fn xor(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Xor, l, r)
    }

    pub fn nand(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Nand, l, r)
    }

    pub fn nor(l: Term, r: Term) -> Term {
        Term::bin(BinOp::Nor, l, r)
    }

    /// `x′`, i.e. `x ~& T`.
    pub fn prime(t: Term) -> Term {
        Term::nand(t, Term::T)
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Term::T | Term::F | Term::U)
    }

    /// True when the term contains no schema variables.
    pub fn is_closed(&self) -> bool {
        self.first_var().is_none()
    }

    pub fn first_var(&self) -> Option<&Var> {
        match self {
            Term::T | Term::F | Term::U | Term::Atom(_) => None,
            Term::Var(v) => Some(v),
            Term::Cond(p, q, r) => p.first_var().or_else(|| q.first_var()).or_else(|| r.first_var()),
            Term::Not(p) => p.first_var(),
            Term::Bin(_, p, q) => p.first_var().or_else(|| q.first_var()),
        }
    }

    /// Fails with [`Error::OpenTerm`] naming the first variable found.
    pub fn ensure_closed(&self) -> Result<()> {
        match self.first_var() {
            Some(v) => Err(Error::OpenTerm(v.name().to_string())),
            None => Ok(()),
        }
    }

    pub fn contains_undef(&self) -> bool {
        self.any_node(&mut |t| matches!(t, Term::U))
    }

    /// Pre-order search over all subterms.
    pub fn any_node(&self, pred: &mut impl FnMut(&Term) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => false,
            Term::Cond(p, q, r) => p.any_node(pred) || q.any_node(pred) || r.any_node(pred),
            Term::Not(p) => p.any_node(pred),
            Term::Bin(_, p, q) => p.any_node(pred) || q.any_node(pred),
        }
    }

    /// Height of the syntax tree; a leaf has depth 1. Iterative, so it is
    /// safe to call on terms too deep for the recursive algorithms.
    pub fn depth(&self) -> usize {
        let mut max = 0;
        let mut stack = vec![(self, 1usize)];
        while let Some((t, d)) = stack.pop() {
            max = max.max(d);
            match t {
                Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => {}
                Term::Cond(p, q, r) => {
                    stack.push((p, d + 1));
                    stack.push((q, d + 1));
                    stack.push((r, d + 1));
                }
                Term::Not(p) => stack.push((p, d + 1)),
                Term::Bin(_, p, q) => {
                    stack.push((p, d + 1));
                    stack.push((q, d + 1));
                }
            }
        }
        max
    }

    pub fn size(&self) -> usize {
        match self {
            Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => 1,
            Term::Cond(p, q, r) => 1 + p.size() + q.size() + r.size(),
            Term::Not(p) => 1 + p.size(),
            Term::Bin(_, p, q) => 1 + p.size() + q.size(),
        }
    }

    pub fn map_vars(&self, f: &mut impl FnMut(&Var) -> Term) -> Term {
        match self {
            Term::T | Term::F | Term::U | Term::Atom(_) => self.clone(),
            Term::Var(v) => f(v),
            Term::Cond(p, q, r) => Term::cond(p.map_vars(f), q.map_vars(f), r.map_vars(f)),
            Term::Not(p) => Term::not(p.map_vars(f)),
            Term::Bin(op, p, q) => Term::bin(*op, p.map_vars(f), q.map_vars(f)),
        }
    }
}

/// The duality involution: swaps `T`/`F`, `&&`/`||`, `<->`/`^^`,
/// `~&`/`~|`, and mirrors the outer arguments of the conditional.
pub fn dual(term: &Term) -> Term {
    match term {
        Term::T => Term::F,
        Term::F => Term::T,
        Term::U => Term::U,
        Term::Atom(_) | Term::Var(_) => term.clone(),
        Term::Cond(p, q, r) => Term::cond(dual(r), dual(q), dual(p)),
        Term::Not(p) => Term::not(dual(p)),
        Term::Bin(op, p, q) => Term::bin(op.dual(), dual(p), dual(q)),
    }
}

/// Atoms in order of first occurrence. For a conditional the condition
/// is visited before the branches, matching evaluation order.
pub fn atoms_of(term: &Term) -> Vec<Atom> {
    fn walk(t: &Term, out: &mut Vec<Atom>) {
        match t {
            Term::T | Term::F | Term::U | Term::Var(_) => {}
            Term::Atom(a) => {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
            Term::Cond(p, q, r) => {
                walk(q, out);
                walk(p, out);
                walk(r, out);
            }
            Term::Not(p) => walk(p, out),
            Term::Bin(_, p, q) => {
                walk(p, out);
                walk(q, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(term, &mut out);
    out
}

/// Schema variables in order of first occurrence (left to right).
pub fn vars_of(term: &Term) -> Vec<Var> {
    fn walk(t: &Term, out: &mut Vec<Var>) {
        match t {
            Term::T | Term::F | Term::U | Term::Atom(_) => {}
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Cond(p, q, r) => {
                walk(p, out);
                walk(q, out);
                walk(r, out);
            }
            Term::Not(p) => walk(p, out),
            Term::Bin(_, p, q) => {
                walk(p, out);
                walk(q, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(term, &mut out);
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self, PrintStyle::Unicode))
    }
}

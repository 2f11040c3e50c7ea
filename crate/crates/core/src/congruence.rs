//! Deciding free and memorising valuation congruence, evaluating closed
//! terms, and DOT export of evaluation trees.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::normalform::{bf, mbf, BasicForm, DEFAULT_MAX_DEPTH};
use crate::syntax::{Atom, BinOp, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Congruence {
    /// Every atom occurrence is evaluated on its own: compare basic forms.
    Free,
    /// The first value of an atom is remembered: compare mem-basic forms.
    Mem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mode {
    pub congruence: Congruence,
    pub three_valued: bool,
}

impl Mode {
    pub const FREE: Mode = Mode {
        congruence: Congruence::Free,
        three_valued: false,
    };
    pub const MEM: Mode = Mode {
        congruence: Congruence::Mem,
        three_valued: false,
    };

    pub fn three_valued(self) -> Mode {
        Mode {
            three_valued: true,
            ..self
        }
    }
}

impl Default for Mode {
    fn default() -> Self {
        Mode::MEM
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.congruence {
            Congruence::Free => "free",
            Congruence::Mem => "mem",
        };
        if self.three_valued {
            write!(f, "{c}, three-valued")
        } else {
            f.write_str(c)
        }
    }
}

/// The normal form of a closed term under `mode`: its basic form for
/// [`Congruence::Free`], its mem-basic form for [`Congruence::Mem`].
pub fn normalize(t: &Term, mode: Mode) -> Result<BasicForm> {
    match mode.congruence {
        Congruence::Free => bf(t),
        Congruence::Mem => mbf(t).map(|m| m.into_basic()),
    }
}

/// Decides `p = q` under the congruence of `mode`. `U` is always allowed
/// in the terms; `three_valued` only matters for schema checking.
pub fn equiv(p: &Term, q: &Term, mode: Mode) -> Result<bool> {
    Ok(normalize(p, mode)? == normalize(q, mode)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TruthValue3 {
    True,
    False,
    Undef,
}

impl TruthValue3 {
    fn not(self) -> TruthValue3 {
        match self {
            TruthValue3::True => TruthValue3::False,
            TruthValue3::False => TruthValue3::True,
            TruthValue3::Undef => TruthValue3::Undef,
        }
    }
}

impl From<bool> for TruthValue3 {
    fn from(b: bool) -> Self {
        if b {
            TruthValue3::True
        } else {
            TruthValue3::False
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TruthValue3::True => "T",
            TruthValue3::False => "F",
            TruthValue3::Undef => "U",
        })
    }
}

/// An assignment of truth values to atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<Atom, bool>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, atom: Atom, value: bool) {
        self.0.insert(atom, value);
    }

    pub fn with(mut self, atom: Atom, value: bool) -> Self {
        self.set(atom, value);
        self
    }

    pub fn get(&self, atom: &Atom) -> Result<bool> {
        self.0
            .get(atom)
            .copied()
            .ok_or_else(|| Error::UnboundAtom(atom.name().to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, bool)> {
        self.0.iter().map(|(a, &v)| (a, v))
    }

    /// All `2^n` valuations of `atoms`, in binary counting order with the
    /// first atom as the most significant bit.
    pub fn all(atoms: &[Atom]) -> Vec<Valuation> {
        let n = atoms.len();
        (0..1u64 << n)
            .map(|bits| {
                atoms
                    .iter()
                    .enumerate()
                    .map(|(i, a)| (a.clone(), bits >> (n - 1 - i) & 1 == 1))
                    .collect()
            })
            .collect()
    }
}

impl FromIterator<(Atom, bool)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Atom, bool)>>(iter: I) -> Self {
        Valuation(iter.into_iter().collect())
    }
}

/// Parses `a=1,b=0`. An empty string is the empty valuation.
impl FromStr for Valuation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = Valuation::new();
        for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Valuation(pair.to_string());
            let (name, value) = pair.split_once('=').ok_or_else(bad)?;
            let atom = Atom::new(name.trim()).map_err(|_| bad())?;
            let value = match value.trim() {
                "1" | "T" | "true" => true,
                "0" | "F" | "false" => false,
                _ => return Err(bad()),
            };
            v.set(atom, value);
        }
        Ok(v)
    }
}

/// Walks the mem-basic form of `t` under `v`. Only atoms on the taken path
/// need to be assigned.
pub fn eval(t: &Term, v: &Valuation) -> Result<TruthValue3> {
    let mut p = mbf(t)?.into_basic();
    loop {
        p = match p {
            BasicForm::T => return Ok(TruthValue3::True),
            BasicForm::F => return Ok(TruthValue3::False),
            BasicForm::U => return Ok(TruthValue3::Undef),
            BasicForm::Node(a, l, r) => {
                let next = if v.get(&a)? { l } else { r };
                (*next).clone()
            }
        };
    }
}

/// Evaluates `t` directly, left to right with short-circuiting, remembering
/// each atom's first value. Returns the result and the atoms in the order
/// they were first inspected.
pub fn trace_eval(t: &Term, v: &Valuation) -> Result<(TruthValue3, Vec<Atom>)> {
    let depth = t.depth();
    if depth > DEFAULT_MAX_DEPTH {
        return Err(Error::DepthLimit {
            depth,
            limit: DEFAULT_MAX_DEPTH,
        });
    }
    t.ensure_closed()?;
    let mut tracer = Tracer {
        valuation: v,
        memo: BTreeMap::new(),
        order: Vec::new(),
    };
    let value = tracer.eval(t)?;
    Ok((value, tracer.order))
}

struct Tracer<'v> {
    valuation: &'v Valuation,
    memo: BTreeMap<Atom, bool>,
    order: Vec<Atom>,
}

impl Tracer<'_> {
    fn eval(&mut self, t: &Term) -> Result<TruthValue3> {
        use TruthValue3::{False, True, Undef};
        Ok(match t {
            Term::T => True,
            Term::F => False,
            Term::U => Undef,
            Term::Atom(a) => match self.memo.get(a) {
                Some(&b) => b.into(),
                None => {
                    let b = self.valuation.get(a)?;
                    self.memo.insert(a.clone(), b);
                    self.order.push(a.clone());
                    b.into()
                }
            },
            Term::Var(_) => unreachable!("closedness is checked first"),
            Term::Cond(p, q, r) => match self.eval(q)? {
                True => self.eval(p)?,
                False => self.eval(r)?,
                Undef => Undef,
            },
            Term::Not(p) => self.eval(p)?.not(),
            Term::Bin(op, p, q) => {
                let x = self.eval(p)?;
                if x == Undef {
                    return Ok(Undef);
                }
                let x = x == True;
                match op {
                    BinOp::And if x => self.eval(q)?,
                    BinOp::And => False,
                    BinOp::Or if x => True,
                    BinOp::Or => self.eval(q)?,
                    BinOp::Iff if x => self.eval(q)?,
                    BinOp::Iff => self.eval(q)?.not(),
                    BinOp::Xor if x => self.eval(q)?.not(),
                    BinOp::Xor => self.eval(q)?,
                    BinOp::Nand if x => self.eval(q)?.not(),
                    BinOp::Nand => True,
                    BinOp::Nor if x => False,
                    BinOp::Nor => self.eval(q)?.not(),
                }
            }
        })
    }
}

/// Graphviz rendering of an evaluation tree. Nodes are named `n0`, `n1`, …
/// in preorder; leaves are boxes.
pub fn to_dot(p: &BasicForm) -> String {
    fn go(p: &BasicForm, next: &mut usize, out: &mut String) -> usize {
        let id = *next;
        *next += 1;
        match p {
            BasicForm::Node(a, l, r) => {
                let _ = writeln!(out, "  n{id} [label=\"{}\"];", a.name());
                let lid = go(l, next, out);
                let rid = go(r, next, out);
                let _ = writeln!(out, "  n{id} -> n{lid} [label=\"T\"];");
                let _ = writeln!(out, "  n{id} -> n{rid} [label=\"F\", style=dashed];");
            }
            leaf => {
                let label = match leaf {
                    BasicForm::T => "T",
                    BasicForm::F => "F",
                    _ => "U",
                };
                let _ = writeln!(out, "  n{id} [label=\"{label}\", shape=box];");
            }
        }
        id
    }
    let mut out = String::from("digraph bf {\n");
    go(p, &mut 0, &mut out);
    out.push_str("}\n");
    out
}

//! Equational axiom tables as data, and semantic validity checking of
//! schemas under a congruence.
//!
//! A schema is checked by comparing the normal forms of closed instances
//! of its two sides. Refutations are always sound: every instance is a
//! closed term. A pass is evidence, reported at the strength it was
//! obtained ([`Verdict::PassedFreshAtoms`] or [`Verdict::PassedExhaustive`]).

mod exhaustive;
mod tables;

use std::collections::BTreeMap;
use std::fmt;

use crate::congruence::{normalize, Mode};
use crate::error::{Error, Result};
use crate::normalform::BasicForm;
use crate::syntax::{atoms_of, parse, vars_of, Atom, BinOp, Term, Var};

pub use tables::{builtin_tables, lookup, table_names};

/// Default ceiling on the number of instantiations per schema in
/// exhaustive checking.
pub const DEFAULT_INSTANTIATION_CAP: u64 = 1_000_000;

/// The connectives a schema is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    /// The conditional only.
    Conditional,
    /// `¬`, `∧ᵒ`, `∨ᵒ`.
    Scl,
    /// `¬`, `∧ᵒ`, `∨ᵒ`, `↔ᵒ`.
    SclIff,
    /// `¬`, `∧ᵒ`, `∨ᵒ`, `↔ᵒ`, `⊕ᵒ`.
    SclIffXor,
    /// `⊼ᵒ` only.
    Nand,
    /// Any connective, including the conditional.
    Full,
}

impl Signature {
    fn allows_cond(self) -> bool {
        matches!(self, Signature::Conditional | Signature::Full)
    }

    fn allows_not(self) -> bool {
        matches!(
            self,
            Signature::Scl | Signature::SclIff | Signature::SclIffXor | Signature::Full
        )
    }

    fn allows(self, op: BinOp) -> bool {
        match self {
            Signature::Conditional => false,
            Signature::Scl => matches!(op, BinOp::And | BinOp::Or),
            Signature::SclIff => matches!(op, BinOp::And | BinOp::Or | BinOp::Iff),
            Signature::SclIffXor => !matches!(op, BinOp::Nand | BinOp::Nor),
            Signature::Nand => op == BinOp::Nand,
            Signature::Full => true,
        }
    }

    /// The first connective of `t` outside this signature.
    fn violation(self, t: &Term) -> Option<&'static str> {
        let mut found = None;
        t.any_node(&mut |n| {
            let bad = match n {
                Term::Cond(..) if !self.allows_cond() => Some("conditional"),
                Term::Not(_) if !self.allows_not() => Some("not"),
                Term::Bin(op, ..) if !self.allows(*op) => Some(op.name()),
                _ => None,
            };
            found = found.or(bad);
            bad.is_some()
        });
        found
    }
}

/// An equation between two terms with variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
    pub signature: Signature,
    /// Mode to check this schema in, when it differs from its table's.
    pub mode: Option<Mode>,
}

impl Schema {
    pub fn new(name: &str, lhs: Term, rhs: Term, signature: Signature) -> Schema {
        Schema {
            name: name.to_string(),
            lhs,
            rhs,
            signature,
            mode: None,
        }
    }

    /// Parses both sides; panics on malformed input, so only use it for
    /// literal tables.
    pub(crate) fn parse(name: &str, lhs: &str, rhs: &str, signature: Signature) -> Schema {
        let side = |s: &str| parse(s).unwrap_or_else(|e| panic!("schema {name}: {e}"));
        Schema::new(name, side(lhs), side(rhs), signature)
    }

    pub fn in_mode(mut self, mode: Mode) -> Schema {
        self.mode = Some(mode);
        self
    }

    /// Variables of both sides, sorted by name.
    pub fn vars(&self) -> Vec<Var> {
        let mut vars = vars_of(&self.lhs);
        vars.extend(vars_of(&self.rhs));
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut atoms = atoms_of(&self.lhs);
        for a in atoms_of(&self.rhs) {
            if !atoms.contains(&a) {
                atoms.push(a);
            }
        }
        atoms
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Whether the schemas of a table are meant to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Valid,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaTable {
    pub name: String,
    pub mode: Mode,
    pub expect: Expectation,
    pub schemas: Vec<Schema>,
}

impl SchemaTable {
    pub fn get(&self, schema: &str) -> Option<&Schema> {
        self.schemas.iter().find(|s| s.name == schema)
    }

    /// The mode `schema` is checked in by default.
    pub fn mode_of(&self, schema: &Schema) -> Mode {
        schema.mode.unwrap_or(self.mode)
    }
}

/// Substitutes `sub` into both sides at once.
pub fn instantiate(s: &Schema, sub: &BTreeMap<Var, Term>) -> Result<(Term, Term)> {
    for v in s.vars() {
        match sub.get(&v) {
            None => return Err(Error::MissingBinding(v.name().to_string())),
            Some(t) => t.ensure_closed()?,
        }
    }
    let mut apply = |v: &Var| sub[v].clone();
    Ok((s.lhs.map_vars(&mut apply), s.rhs.map_vars(&mut apply)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Replace each variable by its own fresh atom.
    FreshAtoms,
    /// After the fresh-atom check, try every tuple of mem-basic forms over
    /// `k` shared atoms, up to `cap` instantiations.
    Exhaustive { k: usize, cap: u64 },
}

impl Strategy {
    pub fn exhaustive(k: usize) -> Strategy {
        Strategy::Exhaustive {
            k,
            cap: DEFAULT_INSTANTIATION_CAP,
        }
    }
}

/// An instance on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub witness: Vec<(Var, Term)>,
    pub lhs: BasicForm,
    pub rhs: BasicForm,
}

/// Exhaustive checking ran out of budget: only the first `used` of `pool`
/// forms were tried for each variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub pool: usize,
    pub used: usize,
    pub cap: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    PassedFreshAtoms,
    PassedExhaustive {
        k: usize,
        count: u64,
        truncation: Option<Truncation>,
    },
    RefutedByFreshAtoms(Refutation),
    RefutedExhaustive(Refutation),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::PassedFreshAtoms | Verdict::PassedExhaustive { .. })
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match self {
            Verdict::RefutedByFreshAtoms(r) | Verdict::RefutedExhaustive(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub schema: String,
    pub mode: Mode,
    pub verdict: Verdict,
}

impl CheckResult {
    /// True when the verdict is the one the table expects.
    pub fn as_expected(&self, expect: Expectation) -> bool {
        self.verdict.passed() == (expect == Expectation::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PassedFreshAtoms => f.write_str("passed (fresh-atoms)"),
            Verdict::PassedExhaustive { k, count, truncation } => {
                write!(f, "passed (exhaustive k={k}, {count} instances")?;
                if let Some(t) = truncation {
                    write!(
                        f,
                        "; budget of {} exceeded, first {} of {} forms per variable",
                        t.cap, t.used, t.pool
                    )?;
                }
                f.write_str(")")
            }
            Verdict::RefutedByFreshAtoms(r) => write!(f, "refuted (fresh-atoms) {r}"),
            Verdict::RefutedExhaustive(r) => write!(f, "refuted (exhaustive) {r}"),
        }
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("with ")?;
        for (i, (v, t)) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} ↦ {t}")?;
        }
        write!(f, ": {} ≠ {}", self.lhs, self.rhs)
    }
}

/// Names `v1, v2, …` skipping atoms already in the schema.
pub(crate) fn fresh_atoms(avoid: &[Atom], n: usize) -> Vec<Atom> {
    (1..)
        .map(|i| Atom::new(&format!("v{i}")).expect("v<n> is an atom name"))
        .filter(|a| !avoid.contains(a))
        .take(n)
        .collect()
}

fn check_signature(s: &Schema, mode: Mode) -> Result<()> {
    let signature_error = |reason: String| Error::Signature {
        schema: s.name.clone(),
        reason,
    };
    for side in [&s.lhs, &s.rhs] {
        if let Some(c) = s.signature.violation(side) {
            return Err(signature_error(format!(
                "connective {c} is outside the schema's signature {:?}",
                s.signature
            )));
        }
        if side.contains_undef() && !mode.three_valued {
            return Err(signature_error(
                "U occurs but the mode is two-valued".to_string(),
            ));
        }
    }
    Ok(())
}

/// Checks `s` in `mode`. Exhaustive checking runs only when the fresh-atom
/// instance passes.
pub fn check_schema(s: &Schema, mode: Mode, strategy: Strategy) -> Result<CheckResult> {
    check_signature(s, mode)?;
    let vars = s.vars();
    let fresh = fresh_atoms(&s.atoms(), vars.len());
    let witness: Vec<(Var, Term)> = vars
        .iter()
        .cloned()
        .zip(fresh.into_iter().map(Term::Atom))
        .collect();
    let sub: BTreeMap<Var, Term> = witness.iter().cloned().collect();
    let (lhs, rhs) = instantiate(s, &sub)?;
    let (l, r) = (normalize(&lhs, mode)?, normalize(&rhs, mode)?);
    let verdict = if l != r {
        Verdict::RefutedByFreshAtoms(Refutation {
            witness,
            lhs: l,
            rhs: r,
        })
    } else {
        match strategy {
            Strategy::FreshAtoms => Verdict::PassedFreshAtoms,
            Strategy::Exhaustive { k, cap } => exhaustive::check(s, &vars, mode, k, cap),
        }
    };
    Ok(CheckResult {
        schema: s.name.clone(),
        mode,
        verdict,
    })
}

/// Checks every schema of `table`, each in its own mode unless `mode` is
/// given.
pub fn check_table(
    table: &SchemaTable,
    mode: Option<Mode>,
    strategy: Strategy,
) -> Result<Vec<CheckResult>> {
    table
        .schemas
        .iter()
        .map(|s| check_schema(s, mode.unwrap_or_else(|| table.mode_of(s)), strategy))
        .collect()
}

//! Elimination of the derived connectives into the conditional, and the
//! translations between `{¬, ∧ᵒ, ∨ᵒ}` and the left-sequential NAND.

use crate::error::{Error, Result};
use crate::syntax::{BinOp, Term};

/// Rewrites every connective into its defining conditional:
///
/// | connective | conditional                |
/// |------------|----------------------------|
/// | `¬x`       | `F ◁ x ▷ T`                |
/// | `x ∧ᵒ y`   | `y ◁ x ▷ F`                |
/// | `x ∨ᵒ y`   | `T ◁ x ▷ y`                |
/// | `x ↔ᵒ y`   | `y ◁ x ▷ (F ◁ y ▷ T)`      |
/// | `x ⊕ᵒ y`   | `x ↔ᵒ ¬y`, then as above   |
/// | `x ⊼ᵒ y`   | `(F ◁ y ▷ T) ◁ x ▷ T`      |
/// | `x ⊽ᵒ y`   | `F ◁ x ▷ (F ◁ y ▷ T)`      |
///
/// Variables pass through unchanged.
pub fn to_core(term: &Term) -> Term {
    match term {
        Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => term.clone(),
        Term::Cond(p, q, r) => Term::cond(to_core(p), to_core(q), to_core(r)),
        Term::Not(p) => negate(to_core(p)),
        Term::Bin(op, p, q) => {
            let (x, y) = (to_core(p), to_core(q));
            match op {
                BinOp::And => Term::cond(y, x, Term::F),
                BinOp::Or => Term::cond(Term::T, x, y),
                BinOp::Iff => iff(x, y),
                BinOp::Xor => iff(x, negate(y)),
                BinOp::Nand => Term::cond(negate(y), x, Term::T),
                BinOp::Nor => Term::cond(Term::F, x, negate(y)),
            }
        }
    }
}

fn negate(x: Term) -> Term {
    Term::cond(Term::F, x, Term::T)
}

fn iff(x: Term, y: Term) -> Term {
    let not_y = negate(y.clone());
    Term::cond(y, x, not_y)
}

fn connective_name(t: &Term) -> &'static str {
    match t {
        Term::Cond(..) => "conditional",
        Term::Not(_) => "not",
        Term::Bin(op, ..) => match op {
            BinOp::And => "and",
            BinOp::Or => "or",
            BinOp::Iff => "iff",
            BinOp::Xor => "xor",
            BinOp::Nand => "nand",
            BinOp::Nor => "nor",
        },
        _ => "constant",
    }
}

/// Expresses `¬`, `∧ᵒ`, `∨ᵒ` with the left-sequential NAND:
/// `¬x = x ⊼ T`, `x ∧ᵒ y = (x ⊼ y) ⊼ T`, `x ∨ᵒ y = (x ⊼ T) ⊼ (y ⊼ T)`.
/// Existing NANDs are kept.
pub fn encode_nand(term: &Term) -> Result<Term> {
    Ok(match term {
        Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => term.clone(),
        Term::Not(p) => Term::prime(encode_nand(p)?),
        Term::Bin(BinOp::And, p, q) => Term::prime(Term::nand(encode_nand(p)?, encode_nand(q)?)),
        Term::Bin(BinOp::Or, p, q) => Term::nand(
            Term::prime(encode_nand(p)?),
            Term::prime(encode_nand(q)?),
        ),
        Term::Bin(BinOp::Nand, p, q) => Term::nand(encode_nand(p)?, encode_nand(q)?),
        other => {
            return Err(Error::UnsupportedConnective {
                operation: "encode_nand",
                connective: connective_name(other),
            })
        }
    })
}

/// Maps `x ⊼ y` to `¬(x ∧ᵒ y)`, homomorphically.
pub fn decode_nand(term: &Term) -> Result<Term> {
    Ok(match term {
        Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => term.clone(),
        Term::Bin(BinOp::Nand, p, q) => Term::not(Term::and(decode_nand(p)?, decode_nand(q)?)),
        other => {
            return Err(Error::UnsupportedConnective {
                operation: "decode_nand",
                connective: connective_name(other),
            })
        }
    })
}

/// True when the term uses only constants, atoms, variables and NAND.
pub fn is_nand_term(term: &Term) -> bool {
    !term.any_node(&mut |t| matches!(t, Term::Cond(..) | Term::Not(_)) || matches!(t, Term::Bin(op, ..) if *op != BinOp::Nand))
}

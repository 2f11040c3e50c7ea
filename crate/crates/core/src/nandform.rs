//! Memorising U-NAND basic forms: the normal forms of closed terms over
//! `{T, F, U, atoms, ⊼ᵒ}`.
//!
//! `NNode(a, P, Q)` stands for `(a ⊼ᵒ P) ⊼ᵒ (a′ ⊼ᵒ Q)`: evaluate `a`, continue
//! in `P` if it is true and in `Q` if it is false. The atom `a` must not
//! occur in `P` or `Q`.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::normalform::{BasicForm, MemBasicForm, DEFAULT_MAX_DEPTH};
use crate::syntax::{print, Atom, BinOp, PrintStyle, Printer, Term};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Munbf {
    T,
    F,
    U,
    NNode(Atom, Arc<Munbf>, Arc<Munbf>),
}

impl Munbf {
    /// Builds `NNode(a, p, q)`, rejecting `a` inside `p` or `q`.
    pub fn nnode(atom: Atom, on_true: Munbf, on_false: Munbf) -> Result<Munbf> {
        if on_true.contains_atom(&atom) || on_false.contains_atom(&atom) {
            return Err(Error::InvalidMunbf(atom.name().to_string()));
        }
        Ok(Munbf::NNode(atom, Arc::new(on_true), Arc::new(on_false)))
    }

    pub fn contains_atom(&self, a: &Atom) -> bool {
        match self {
            Munbf::NNode(b, p, q) => b == a || p.contains_atom(a) || q.contains_atom(a),
            _ => false,
        }
    }

    /// Checks the per-node atom condition everywhere.
    pub fn is_valid(&self) -> bool {
        match self {
            Munbf::NNode(a, p, q) => {
                !p.contains_atom(a) && !q.contains_atom(a) && p.is_valid() && q.is_valid()
            }
            _ => true,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Munbf::NNode(_, p, q) => 1 + p.size() + q.size(),
            _ => 1,
        }
    }

    /// `{"leaf":"T"}` or `{"nnode":"a","t":…,"f":…}`.
    pub fn to_json(&self) -> Value {
        match self {
            Munbf::T => json!({"leaf": "T"}),
            Munbf::F => json!({"leaf": "F"}),
            Munbf::U => json!({"leaf": "U"}),
            Munbf::NNode(a, p, q) => json!({"nnode": a.name(), "t": p.to_json(), "f": q.to_json()}),
        }
    }
}

impl fmt::Display for Munbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let printer = Printer::new(PrintStyle::Unicode).with_primes(true);
        f.write_str(&printer.print(&render(self)))
    }
}

impl fmt::Debug for Munbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(&render(self), PrintStyle::Ascii))
    }
}

/// Expands `NNode(a, P, Q)` to `(a ⊼ᵒ P) ⊼ᵒ ((a ⊼ᵒ T) ⊼ᵒ Q)`.
pub fn render(p: &Munbf) -> Term {
    match p {
        Munbf::T => Term::T,
        Munbf::F => Term::F,
        Munbf::U => Term::U,
        Munbf::NNode(a, l, r) => {
            let a = Term::Atom(a.clone());
            Term::nand(Term::nand(a.clone(), render(l)), Term::nand(Term::prime(a), render(r)))
        }
    }
}

/// `T_a^U` for `value = true`, `F_a^U` for `value = false`: drops every
/// `a` node, keeping the branch selected by `value`.
pub fn assume(p: &Munbf, a: &Atom, value: bool) -> Munbf {
    Arc::unwrap_or_clone(assume_arc(p, a, value))
}

fn assume_arc(p: &Munbf, a: &Atom, value: bool) -> Arc<Munbf> {
    match p {
        Munbf::NNode(b, l, r) if b == a => {
            if value {
                l.clone()
            } else {
                r.clone()
            }
        }
        Munbf::NNode(b, l, r) => Arc::new(Munbf::NNode(
            b.clone(),
            assume_arc(l, a, value),
            assume_arc(r, a, value),
        )),
        leaf => Arc::new(leaf.clone()),
    }
}

/// Swaps `T` and `F` leaves; `U` stays. This is `T ⊼ᵒ Q`.
pub fn complement_leaves(p: &Munbf) -> Munbf {
    match p {
        Munbf::T => Munbf::F,
        Munbf::F => Munbf::T,
        Munbf::U => Munbf::U,
        Munbf::NNode(a, l, r) => Munbf::NNode(
            a.clone(),
            Arc::new(complement_leaves(l)),
            Arc::new(complement_leaves(r)),
        ),
    }
}

fn combine(p: &Munbf, q: &Munbf) -> Munbf {
    match p {
        Munbf::T => complement_leaves(q),
        Munbf::F => Munbf::T,
        Munbf::U => Munbf::U,
        Munbf::NNode(a, l, r) => Munbf::NNode(
            a.clone(),
            assume_arc(&combine(l, q), a, true),
            assume_arc(&combine(r, q), a, false),
        ),
    }
}

/// The normal form of a closed NAND term, by induction on the term.
pub fn nand_nf(term: &Term) -> Result<Munbf> {
    let depth = term.depth();
    if depth > DEFAULT_MAX_DEPTH {
        return Err(Error::DepthLimit {
            depth,
            limit: DEFAULT_MAX_DEPTH,
        });
    }
    term.ensure_closed()?;
    nf(term)
}

fn nf(term: &Term) -> Result<Munbf> {
    Ok(match term {
        Term::T => Munbf::T,
        Term::F => Munbf::F,
        Term::U => Munbf::U,
        Term::Atom(a) => Munbf::NNode(a.clone(), Arc::new(Munbf::T), Arc::new(Munbf::F)),
        Term::Bin(BinOp::Nand, p, q) => combine(&nf(p)?, &nf(q)?),
        Term::Cond(..) => return Err(unsupported("conditional")),
        Term::Not(_) => return Err(unsupported("not")),
        Term::Bin(op, ..) => return Err(unsupported(op.name())),
        Term::Var(_) => unreachable!("closedness is checked first"),
    })
}

fn unsupported(connective: &'static str) -> Error {
    Error::UnsupportedConnective {
        operation: "nand_nf",
        connective,
    }
}

/// The bijection from mem-basic forms: `P ◁ a ▷ Q` becomes `NNode(a, P, Q)`.
pub fn to_munbf(p: &MemBasicForm) -> Munbf {
    fn go(p: &BasicForm) -> Munbf {
        match p {
            BasicForm::T => Munbf::T,
            BasicForm::F => Munbf::F,
            BasicForm::U => Munbf::U,
            BasicForm::Node(a, l, r) => Munbf::NNode(a.clone(), Arc::new(go(l)), Arc::new(go(r))),
        }
    }
    go(p.as_basic())
}

/// The inverse of [`to_munbf`].
pub fn from_munbf(q: &Munbf) -> Result<MemBasicForm> {
    fn go(q: &Munbf) -> BasicForm {
        match q {
            Munbf::T => BasicForm::T,
            Munbf::F => BasicForm::F,
            Munbf::U => BasicForm::U,
            Munbf::NNode(a, l, r) => BasicForm::node(a.clone(), go(l), go(r)),
        }
    }
    MemBasicForm::new(go(q)).map_err(|e| match e {
        Error::NotMemBasic(a) => Error::InvalidMunbf(a),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalform::{enumerate_mem_basic, mbf};
    use crate::syntax::parse;

    fn a(s: &str) -> Atom {
        Atom::new(s).unwrap()
    }

    fn nn(x: &str, p: Munbf, q: Munbf) -> Munbf {
        Munbf::nnode(a(x), p, q).unwrap()
    }

    fn nf_of(s: &str) -> Munbf {
        nand_nf(&parse(s).unwrap()).unwrap()
    }

    #[test]
    fn assume_clauses() {
        assert_eq!(assume(&Munbf::U, &a("a"), true), Munbf::U);
        let p = nn("a", nn("b", Munbf::T, Munbf::F), Munbf::U);
        assert_eq!(assume(&p, &a("a"), true), nn("b", Munbf::T, Munbf::F));
        assert_eq!(assume(&p, &a("b"), false), nn("a", Munbf::F, Munbf::U));
    }

    #[test]
    fn normal_forms_of_small_terms() {
        assert_eq!(nf_of("F ~& a"), Munbf::T);
        assert_eq!(nf_of("U ~& a"), Munbf::U);
        assert_eq!(nf_of("a ~& T"), nn("a", Munbf::F, Munbf::T));
        assert_eq!(nf_of("a"), nn("a", Munbf::T, Munbf::F));
        assert_eq!(nf_of("a ~& a"), nn("a", Munbf::F, Munbf::T));
    }

    #[test]
    fn rejects_other_connectives() {
        assert!(matches!(
            nand_nf(&parse("a && b").unwrap()),
            Err(Error::UnsupportedConnective { connective: "and", .. })
        ));
        assert_eq!(nand_nf(&parse("X ~& a").unwrap()), Err(Error::OpenTerm("X".into())));
    }

    #[test]
    fn node_condition_is_enforced() {
        assert_eq!(
            Munbf::nnode(a("a"), nn("a", Munbf::T, Munbf::F), Munbf::F),
            Err(Error::InvalidMunbf("a".into()))
        );
        let bad = Munbf::NNode(a("a"), Arc::new(nn("a", Munbf::T, Munbf::F)), Arc::new(Munbf::F));
        assert!(!bad.is_valid());
        assert_eq!(from_munbf(&bad), Err(Error::InvalidMunbf("a".into())));
    }

    #[test]
    fn transcription() {
        let p = mbf(&parse("(F <| b |> F) <| a |> F").unwrap()).unwrap();
        assert_eq!(to_munbf(&p), nn("a", nn("b", Munbf::F, Munbf::F), Munbf::F));
        let q = nn("b", Munbf::F, nn("a", Munbf::T, Munbf::U));
        assert_eq!(
            from_munbf(&q).unwrap().into_basic(),
            BasicForm::node(
                a("b"),
                BasicForm::F,
                BasicForm::node(a("a"), BasicForm::T, BasicForm::U)
            )
        );
    }

    #[test]
    fn bijection_on_all_two_atom_forms() {
        let forms = enumerate_mem_basic(&[a("a"), a("b")], true);
        assert_eq!(forms.len(), 291);
        for p in &forms {
            let q = to_munbf(p);
            assert!(q.is_valid());
            assert_eq!(&from_munbf(&q).unwrap(), p);
            assert_eq!(to_munbf(&from_munbf(&q).unwrap()), q);
        }
    }

    #[test]
    fn render_shape() {
        let q = nn("a", Munbf::T, Munbf::F);
        assert_eq!(render(&q), parse("(a ~& T) ~& ((a ~& T) ~& F)").unwrap());
        assert_eq!(q.to_string(), "a′ ⊼ᵒ (a′ ⊼ᵒ F)");
    }
}

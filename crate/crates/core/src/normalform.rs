//! Basic forms (free valuation congruence) and mem-basic forms
//! (memorising valuation congruence), with an optional `U` leaf.
//!
//! A basic form is an evaluation tree: `Node(a, l, r)` evaluates `a` and
//! continues in `l` when it is true, in `r` when it is false. It prints as
//! `l ◁ a ▷ r`.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::syntax::{print, Atom, BinOp, PrintStyle, Term};

/// Maximum term depth accepted by the normalizers.
pub const DEFAULT_MAX_DEPTH: usize = 10_000;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicForm {
    T,
    F,
    U,
    Node(Atom, Arc<BasicForm>, Arc<BasicForm>),
}

impl BasicForm {
    pub fn node(atom: Atom, on_true: BasicForm, on_false: BasicForm) -> BasicForm {
        BasicForm::Node(atom, Arc::new(on_true), Arc::new(on_false))
    }

    /// `T ◁ a ▷ F`
    pub fn atom(atom: Atom) -> BasicForm {
        BasicForm::node(atom, BasicForm::T, BasicForm::F)
    }

    pub fn is_leaf(&self) -> bool {
        !matches!(self, BasicForm::Node(..))
    }

    pub fn size(&self) -> usize {
        match self {
            BasicForm::Node(_, l, r) => 1 + l.size() + r.size(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            BasicForm::Node(_, l, r) => 1 + l.depth().max(r.depth()),
            _ => 1,
        }
    }

    pub fn contains_atom(&self, a: &Atom) -> bool {
        match self {
            BasicForm::Node(b, l, r) => b == a || l.contains_atom(a) || r.contains_atom(a),
            _ => false,
        }
    }

    pub fn contains_undef(&self) -> bool {
        match self {
            BasicForm::U => true,
            BasicForm::Node(_, l, r) => l.contains_undef() || r.contains_undef(),
            _ => false,
        }
    }

    /// `{"leaf":"T"}` or `{"atom":"a","t":…,"f":…}`.
    pub fn to_json(&self) -> Value {
        match self {
            BasicForm::T => json!({"leaf": "T"}),
            BasicForm::F => json!({"leaf": "F"}),
            BasicForm::U => json!({"leaf": "U"}),
            BasicForm::Node(a, l, r) => json!({"atom": a.name(), "t": l.to_json(), "f": r.to_json()}),
        }
    }
}

impl fmt::Display for BasicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(&render(self), PrintStyle::Unicode))
    }
}

impl fmt::Debug for BasicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(&render(self), PrintStyle::Ascii))
    }
}

/// The injection of basic forms into terms.
pub fn render(p: &BasicForm) -> Term {
    match p {
        BasicForm::T => Term::T,
        BasicForm::F => Term::F,
        BasicForm::U => Term::U,
        BasicForm::Node(a, l, r) => Term::cond(render(l), Term::Atom(a.clone()), render(r)),
    }
}

/// `p[T ↦ q, F ↦ r]`: replaces the `T` leaves of `p` by `q` and the `F`
/// leaves by `r`. `U` leaves are kept, so `x ◁ U ▷ y` normalizes to `U`.
pub fn subst_tf(p: &BasicForm, q: &BasicForm, r: &BasicForm) -> BasicForm {
    let q = Arc::new(q.clone());
    let r = Arc::new(r.clone());
    Arc::unwrap_or_clone(subst_arc(p, &q, &r))
}

fn subst_arc(p: &BasicForm, q: &Arc<BasicForm>, r: &Arc<BasicForm>) -> Arc<BasicForm> {
    match p {
        BasicForm::T => q.clone(),
        BasicForm::F => r.clone(),
        BasicForm::U => Arc::new(BasicForm::U),
        BasicForm::Node(a, l, rr) => Arc::new(BasicForm::Node(
            a.clone(),
            subst_arc(l, q, r),
            subst_arc(rr, q, r),
        )),
    }
}

fn neg(p: &Arc<BasicForm>) -> Arc<BasicForm> {
    subst_arc(p, &Arc::new(BasicForm::F), &Arc::new(BasicForm::T))
}

/// The basic form of a closed term, extended to every connective through
/// its defining conditional (see [`crate::translate::to_core`]).
pub fn bf(term: &Term) -> Result<BasicForm> {
    bf_with_limit(term, DEFAULT_MAX_DEPTH)
}

pub fn bf_with_limit(term: &Term, max_depth: usize) -> Result<BasicForm> {
    check_input(term, max_depth)?;
    Ok(Arc::unwrap_or_clone(bf_arc(term)))
}

fn check_input(term: &Term, max_depth: usize) -> Result<()> {
    let depth = term.depth();
    if depth > max_depth {
        return Err(Error::DepthLimit {
            depth,
            limit: max_depth,
        });
    }
    term.ensure_closed()
}

fn bf_arc(term: &Term) -> Arc<BasicForm> {
    let t = || Arc::new(BasicForm::T);
    let f = || Arc::new(BasicForm::F);
    match term {
        Term::T => t(),
        Term::F => f(),
        Term::U => Arc::new(BasicForm::U),
        Term::Atom(a) => Arc::new(BasicForm::atom(a.clone())),
        Term::Var(_) => unreachable!("closedness is checked before normalizing"),
        Term::Cond(p, q, r) => subst_arc(&bf_arc(q), &bf_arc(p), &bf_arc(r)),
        Term::Not(p) => neg(&bf_arc(p)),
        Term::Bin(op, p, q) => {
            let x = bf_arc(p);
            let y = bf_arc(q);
            match op {
                BinOp::And => subst_arc(&x, &y, &f()),
                BinOp::Or => subst_arc(&x, &t(), &y),
                BinOp::Iff => subst_arc(&x, &y, &neg(&y)),
                BinOp::Xor => {
                    let ny = neg(&y);
                    subst_arc(&x, &ny, &neg(&ny))
                }
                BinOp::Nand => subst_arc(&x, &neg(&y), &t()),
                BinOp::Nor => subst_arc(&x, &f(), &neg(&y)),
            }
        }
    }
}

/// Which way an atom is assumed to have evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Left-a-reduction: keep the true branch of every `a` node.
    AssumeTrue,
    /// Right-a-reduction: keep the false branch of every `a` node.
    AssumeFalse,
}

pub fn reduce(p: &BasicForm, a: &Atom, side: Side) -> BasicForm {
    Arc::unwrap_or_clone(reduce_arc(p, a, side))
}

fn reduce_arc(p: &BasicForm, a: &Atom, side: Side) -> Arc<BasicForm> {
    match p {
        BasicForm::Node(b, l, r) if b == a => match side {
            Side::AssumeTrue => reduce_arc(l, a, side),
            Side::AssumeFalse => reduce_arc(r, a, side),
        },
        BasicForm::Node(b, l, r) => Arc::new(BasicForm::Node(
            b.clone(),
            reduce_arc(l, a, side),
            reduce_arc(r, a, side),
        )),
        leaf => Arc::new(leaf.clone()),
    }
}

/// Strips repeated atoms from every path: the first evaluation of an atom
/// decides all later ones.
pub fn mf(p: &BasicForm) -> BasicForm {
    match p {
        BasicForm::Node(a, l, r) => BasicForm::node(
            a.clone(),
            mf(&reduce(l, a, Side::AssumeTrue)),
            mf(&reduce(r, a, Side::AssumeFalse)),
        ),
        leaf => leaf.clone(),
    }
}

/// True iff the atoms along every root-to-leaf path are pairwise distinct.
pub fn is_mem_basic(p: &BasicForm) -> bool {
    fn go<'a>(p: &'a BasicForm, path: &mut Vec<&'a Atom>) -> bool {
        match p {
            BasicForm::Node(a, l, r) => {
                if path.contains(&a) {
                    return false;
                }
                path.push(a);
                let ok = go(l, path) && go(r, path);
                path.pop();
                ok
            }
            _ => true,
        }
    }
    go(p, &mut Vec::new())
}

fn first_repeated(p: &BasicForm) -> Option<Atom> {
    fn go<'a>(p: &'a BasicForm, path: &mut Vec<&'a Atom>) -> Option<Atom> {
        match p {
            BasicForm::Node(a, l, r) => {
                if path.contains(&a) {
                    return Some(a.clone());
                }
                path.push(a);
                let found = go(l, path).or_else(|| go(r, path));
                path.pop();
                found
            }
            _ => None,
        }
    }
    go(p, &mut Vec::new())
}

/// A basic form in which no atom repeats along a path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MemBasicForm(BasicForm);

impl MemBasicForm {
    pub fn new(p: BasicForm) -> Result<MemBasicForm> {
        match first_repeated(&p) {
            Some(a) => Err(Error::NotMemBasic(a.name().to_string())),
            None => Ok(MemBasicForm(p)),
        }
    }

    pub fn as_basic(&self) -> &BasicForm {
        &self.0
    }

    pub fn into_basic(self) -> BasicForm {
        self.0
    }
}

impl AsRef<BasicForm> for MemBasicForm {
    fn as_ref(&self) -> &BasicForm {
        &self.0
    }
}

impl fmt::Display for MemBasicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for MemBasicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

/// `mf(bf(term))`.
pub fn mbf(term: &Term) -> Result<MemBasicForm> {
    mbf_with_limit(term, DEFAULT_MAX_DEPTH)
}

pub fn mbf_with_limit(term: &Term, max_depth: usize) -> Result<MemBasicForm> {
    let basic = bf_with_limit(term, max_depth)?;
    MemBasicForm::new(mf(&basic))
}

/// Every mem-basic form over `atoms`, ordered by size and then
/// structurally, so that any prefix holds the smallest forms.
pub fn enumerate_mem_basic(atoms: &[Atom], three_valued: bool) -> Vec<MemBasicForm> {
    fn go(atoms: &[Atom], leaves: &[BasicForm]) -> Vec<BasicForm> {
        let mut out = leaves.to_vec();
        for (i, a) in atoms.iter().enumerate() {
            let rest: Vec<Atom> = atoms
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, b)| b.clone())
                .collect();
            let sub = go(&rest, leaves);
            for l in &sub {
                for r in &sub {
                    out.push(BasicForm::node(a.clone(), l.clone(), r.clone()));
                }
            }
        }
        out
    }
    let leaves: &[BasicForm] = if three_valued {
        &[BasicForm::T, BasicForm::F, BasicForm::U]
    } else {
        &[BasicForm::T, BasicForm::F]
    };
    let mut all = go(atoms, leaves);
    all.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.cmp(y)));
    all.dedup();
    all.into_iter().map(MemBasicForm).collect()
}

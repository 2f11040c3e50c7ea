//! Exhaustive instantiation of a schema with every (mem-basic) form over a
//! few shared atoms.
//!
//! Instances are normalized bottom-up in a hash-consed arena: each schema
//! node's normal form is computed from its children's, with every
//! substitution, reduction and operator application memoized. Variables
//! are enumerated like an odometer, and only nodes that depend on a
//! changed variable are recomputed.

use rustc_hash::FxHashMap;

use super::{fresh_atoms, Refutation, Schema, Truncation, Verdict};
use crate::congruence::{Congruence, Mode};
use crate::normalform::{enumerate_mem_basic, render, BasicForm};
use crate::syntax::{Atom, BinOp, Term, Var};

type Id = u32;

const T: Id = 0;
const F: Id = 1;
const U: Id = 2;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Node {
    Leaf(u8),
    Branch(u16, Id, Id),
}

struct Arena {
    nodes: Vec<Node>,
    index: FxHashMap<Node, Id>,
    atoms: Vec<Atom>,
    subst_memo: FxHashMap<(Id, Id, Id), Id>,
    reduce_memo: FxHashMap<(Id, u16, bool), Id>,
    mf_memo: FxHashMap<Id, Id>,
}

impl Arena {
    fn new() -> Arena {
        let mut arena = Arena {
            nodes: Vec::new(),
            index: FxHashMap::default(),
            atoms: Vec::new(),
            subst_memo: FxHashMap::default(),
            reduce_memo: FxHashMap::default(),
            mf_memo: FxHashMap::default(),
        };
        for leaf in 0..3 {
            arena.intern(Node::Leaf(leaf));
        }
        arena
    }

    fn intern(&mut self, node: Node) -> Id {
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = self.nodes.len() as Id;
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    fn atom(&mut self, a: &Atom) -> u16 {
        match self.atoms.iter().position(|b| b == a) {
            Some(i) => i as u16,
            None => {
                self.atoms.push(a.clone());
                (self.atoms.len() - 1) as u16
            }
        }
    }

    fn branch(&mut self, a: u16, l: Id, r: Id) -> Id {
        self.intern(Node::Branch(a, l, r))
    }

    fn import(&mut self, p: &BasicForm) -> Id {
        match p {
            BasicForm::T => T,
            BasicForm::F => F,
            BasicForm::U => U,
            BasicForm::Node(a, l, r) => {
                let a = self.atom(a);
                let l = self.import(l);
                let r = self.import(r);
                self.branch(a, l, r)
            }
        }
    }

    fn export(&self, id: Id) -> BasicForm {
        match self.nodes[id as usize] {
            Node::Leaf(0) => BasicForm::T,
            Node::Leaf(1) => BasicForm::F,
            Node::Leaf(_) => BasicForm::U,
            Node::Branch(a, l, r) => {
                BasicForm::node(self.atoms[a as usize].clone(), self.export(l), self.export(r))
            }
        }
    }

    fn subst(&mut self, p: Id, q: Id, r: Id) -> Id {
        match self.nodes[p as usize] {
            Node::Leaf(0) => q,
            Node::Leaf(1) => r,
            Node::Leaf(_) => U,
            Node::Branch(a, l, rr) => {
                if let Some(&id) = self.subst_memo.get(&(p, q, r)) {
                    return id;
                }
                let l = self.subst(l, q, r);
                let rr = self.subst(rr, q, r);
                let id = self.branch(a, l, rr);
                self.subst_memo.insert((p, q, r), id);
                id
            }
        }
    }

    fn neg(&mut self, p: Id) -> Id {
        self.subst(p, F, T)
    }

    fn reduce(&mut self, p: Id, a: u16, assume_true: bool) -> Id {
        match self.nodes[p as usize] {
            Node::Leaf(_) => p,
            Node::Branch(b, l, r) => {
                if let Some(&id) = self.reduce_memo.get(&(p, a, assume_true)) {
                    return id;
                }
                let id = if a == b {
                    self.reduce(if assume_true { l } else { r }, a, assume_true)
                } else {
                    let l = self.reduce(l, a, assume_true);
                    let r = self.reduce(r, a, assume_true);
                    self.branch(b, l, r)
                };
                self.reduce_memo.insert((p, a, assume_true), id);
                id
            }
        }
    }

    fn mf(&mut self, p: Id) -> Id {
        match self.nodes[p as usize] {
            Node::Leaf(_) => p,
            Node::Branch(a, l, r) => {
                if let Some(&id) = self.mf_memo.get(&p) {
                    return id;
                }
                let l = self.reduce(l, a, true);
                let l = self.mf(l);
                let r = self.reduce(r, a, false);
                let r = self.mf(r);
                let id = self.branch(a, l, r);
                self.mf_memo.insert(p, id);
                id
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Leaf(Id),
    Var(usize),
    Cond(usize, usize, usize),
    Not(usize),
    Bin(BinOp, usize, usize),
}

/// A schema flattened to postfix order. `level[i]` is the largest
/// variable position node `i` depends on, or `None` for closed nodes.
struct Compiled {
    ops: Vec<Op>,
    level: Vec<Option<usize>>,
    lhs: usize,
    rhs: usize,
}

impl Compiled {
    fn new(s: &Schema, vars: &[Var], arena: &mut Arena) -> Compiled {
        let mut c = Compiled {
            ops: Vec::new(),
            level: Vec::new(),
            lhs: 0,
            rhs: 0,
        };
        c.lhs = c.push(&s.lhs, vars, arena);
        c.rhs = c.push(&s.rhs, vars, arena);
        c
    }

    fn push(&mut self, t: &Term, vars: &[Var], arena: &mut Arena) -> usize {
        let (op, level) = match t {
            Term::T => (Op::Leaf(T), None),
            Term::F => (Op::Leaf(F), None),
            Term::U => (Op::Leaf(U), None),
            Term::Atom(a) => (Op::Leaf(arena.import(&BasicForm::atom(a.clone()))), None),
            Term::Var(v) => {
                let i = vars.iter().position(|w| w == v).expect("schema variable");
                (Op::Var(i), Some(i))
            }
            Term::Cond(p, q, r) => {
                let (p, q, r) = (
                    self.push(p, vars, arena),
                    self.push(q, vars, arena),
                    self.push(r, vars, arena),
                );
                let level = self.level[p].max(self.level[q]).max(self.level[r]);
                (Op::Cond(p, q, r), level)
            }
            Term::Not(p) => {
                let p = self.push(p, vars, arena);
                (Op::Not(p), self.level[p])
            }
            Term::Bin(op, p, q) => {
                let (p, q) = (self.push(p, vars, arena), self.push(q, vars, arena));
                (Op::Bin(*op, p, q), self.level[p].max(self.level[q]))
            }
        };
        self.ops.push(op);
        self.level.push(level);
        self.ops.len() - 1
    }
}

struct Evaluator {
    arena: Arena,
    mem: bool,
    op_memo: FxHashMap<(u8, Id, Id, Id), Id>,
}

impl Evaluator {
    fn apply(&mut self, op: Op, values: &[Id], pool: &[Id], digits: &[usize]) -> Id {
        let (tag, x, y, z) = match op {
            Op::Leaf(id) => return id,
            Op::Var(i) => return pool[digits[i]],
            Op::Cond(p, q, r) => (0, values[p], values[q], values[r]),
            Op::Not(p) => (1, values[p], 0, 0),
            Op::Bin(b, p, q) => (2 + b as u8, values[p], values[q], 0),
        };
        if let Some(&id) = self.op_memo.get(&(tag, x, y, z)) {
            return id;
        }
        let a = &mut self.arena;
        let bf = match op {
            Op::Cond(..) => a.subst(y, x, z),
            Op::Not(_) => a.neg(x),
            Op::Bin(b, ..) => match b {
                BinOp::And => a.subst(x, y, F),
                BinOp::Or => a.subst(x, T, y),
                BinOp::Iff => {
                    let ny = a.neg(y);
                    a.subst(x, y, ny)
                }
                BinOp::Xor => {
                    let ny = a.neg(y);
                    a.subst(x, ny, y)
                }
                BinOp::Nand => {
                    let ny = a.neg(y);
                    a.subst(x, ny, T)
                }
                BinOp::Nor => {
                    let ny = a.neg(y);
                    a.subst(x, F, ny)
                }
            },
            Op::Leaf(_) | Op::Var(_) => unreachable!(),
        };
        let id = if self.mem { a.mf(bf) } else { bf };
        self.op_memo.insert((tag, x, y, z), id);
        id
    }
}

/// Largest `u ≤ pool` with `u^n ≤ cap` (at least 1).
fn budget(pool: usize, n: usize, cap: u64) -> usize {
    let fits = |u: usize| {
        let mut total: u64 = 1;
        for _ in 0..n {
            total = match total.checked_mul(u as u64) {
                Some(t) if t <= cap => t,
                _ => return false,
            };
        }
        true
    };
    let mut u = pool;
    while u > 1 && !fits(u) {
        u -= 1;
    }
    u
}

/// A compiled schema together with its arena and the current value of
/// every node.
struct Instances {
    ev: Evaluator,
    code: Compiled,
    pool: Vec<Id>,
    values: Vec<Id>,
    fresh: bool,
}

impl Instances {
    fn new(s: &Schema, vars: &[Var], mode: Mode, forms: &[BasicForm]) -> Instances {
        let mut ev = Evaluator {
            arena: Arena::new(),
            mem: mode.congruence == Congruence::Mem,
            op_memo: FxHashMap::default(),
        };
        let pool = forms.iter().map(|f| ev.arena.import(f)).collect();
        let code = Compiled::new(s, vars, &mut ev.arena);
        let values = vec![0; code.ops.len()];
        Instances {
            ev,
            code,
            pool,
            values,
            fresh: true,
        }
    }

    /// Normal forms of both sides when variable `i` is bound to
    /// `forms[digits[i]]`. Only variables at positions `changed..` may
    /// differ from the previous call.
    fn eval(&mut self, digits: &[usize], changed: usize) -> (Id, Id) {
        for i in 0..self.code.ops.len() {
            let stale = match self.code.level[i] {
                Some(level) => level >= changed,
                None => self.fresh,
            };
            if stale {
                self.values[i] = self.ev.apply(self.code.ops[i], &self.values, &self.pool, digits);
            }
        }
        self.fresh = false;
        (self.values[self.code.lhs], self.values[self.code.rhs])
    }
}

pub(super) fn check(s: &Schema, vars: &[Var], mode: Mode, k: usize, cap: u64) -> Verdict {
    let atoms = fresh_atoms(&s.atoms(), k);
    let forms: Vec<BasicForm> = enumerate_mem_basic(&atoms, mode.three_valued)
        .into_iter()
        .map(|f| f.into_basic())
        .collect();
    let n = vars.len();
    let used = budget(forms.len(), n, cap);
    let truncation = (used < forms.len() && n > 0).then_some(Truncation {
        pool: forms.len(),
        used,
        cap,
    });
    let forms = &forms[..used];
    let mut instances = Instances::new(s, vars, mode, forms);

    let mut digits = vec![0usize; n];
    let mut changed = 0;
    let mut count: u64 = 0;
    loop {
        let (l, r) = instances.eval(&digits, changed);
        count += 1;
        if l != r {
            let witness = vars
                .iter()
                .zip(&digits)
                .map(|(v, &d)| (v.clone(), render(&forms[d])))
                .collect();
            let arena = &instances.ev.arena;
            return Verdict::RefutedExhaustive(Refutation {
                witness,
                lhs: arena.export(l),
                rhs: arena.export(r),
            });
        }
        // Advance the odometer; the last variable turns fastest.
        let mut pos = n;
        loop {
            if pos == 0 {
                return Verdict::PassedExhaustive {
                    k,
                    count,
                    truncation,
                };
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < used {
                break;
            }
            digits[pos] = 0;
        }
        changed = pos;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::normalize;
    use crate::normalform::mf;
    use crate::axioms::{instantiate, Signature};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn budget_is_the_largest_fitting_prefix() {
        assert_eq!(budget(74, 1, 1_000_000), 74);
        assert_eq!(budget(74, 3, 1_000_000), 74);
        assert_eq!(budget(74, 4, 1_000_000), 31);
        assert_eq!(budget(291, 3, 1_000_000), 100);
        assert_eq!(budget(74, 6, 1_000_000), 10);
        assert_eq!(budget(5, 0, 1), 5);
    }

    #[test]
    fn arena_matches_tree_operations() {
        let a = Atom::new("a").unwrap();
        let b = Atom::new("b").unwrap();
        let forms = enumerate_mem_basic(&[a, b], true);
        let mut arena = Arena::new();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let p = forms[rng.gen_range(0..forms.len())].as_basic();
            let q = forms[rng.gen_range(0..forms.len())].as_basic();
            let (ip, iq) = (arena.import(p), arena.import(q));
            let s = arena.subst(ip, iq, F);
            let expected = crate::normalform::subst_tf(p, q, &BasicForm::F);
            assert_eq!(arena.export(s), expected);
            let m = arena.mf(s);
            assert_eq!(arena.export(m), mf(&expected));
        }
    }

    /// The incremental engine agrees with plain normalization of the
    /// instantiated schema, including after partial recomputation.
    #[test]
    fn engine_agrees_with_normalform() {
        let a = Atom::new("a").unwrap();
        let b = Atom::new("b").unwrap();
        let schemas = [
            ("X && Y", "Y && X"),
            ("(X <-> Y) ^^ Z", "X <-> (Y ^^ Z) <| a |> F"),
            ("X ~& (Y <| Z |> X)", "!X ~| Y || (Z && U)"),
        ];
        let mut rng = StdRng::seed_from_u64(11);
        for (lhs, rhs) in schemas {
            let s = Schema::parse("t", lhs, rhs, Signature::Full);
            let vars = s.vars();
            for mode in [Mode::FREE, Mode::MEM, Mode::MEM.three_valued()] {
                let forms: Vec<BasicForm> = enumerate_mem_basic(&[a.clone(), b.clone()], true)
                    .into_iter()
                    .map(|f| f.into_basic())
                    .collect();
                let mut instances = Instances::new(&s, &vars, mode, &forms);
                let mut digits = vec![0; vars.len()];
                for step in 0..300 {
                    let changed = if step == 0 { 0 } else { rng.gen_range(0..vars.len()) };
                    for d in &mut digits[changed..] {
                        *d = rng.gen_range(0..forms.len());
                    }
                    let (l, r) = instances.eval(&digits, changed);
                    let sub = vars
                        .iter()
                        .zip(&digits)
                        .map(|(v, &d)| (v.clone(), render(&forms[d])))
                        .collect();
                    let (tl, tr) = instantiate(&s, &sub).unwrap();
                    assert_eq!(instances.ev.arena.export(l), normalize(&tl, mode).unwrap());
                    assert_eq!(instances.ev.arena.export(r), normalize(&tr, mode).unwrap());
                }
            }
        }
    }
}

//! Test-only oracles and seeded generators, written independently of the
//! library's normalizers.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sclc_core::congruence::{trace_eval, TruthValue3, Valuation};
use sclc_core::normalform::BasicForm;
use sclc_core::{Atom, BinOp, Term};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn atoms(n: usize) -> Vec<Atom> {
    ["a", "b", "c", "d", "e"][..n]
        .iter()
        .map(|s| Atom::new(s).unwrap())
        .collect()
}

/// Which node kinds a generated term may use.
#[derive(Clone, Copy, Debug)]
pub enum Shape {
    /// Every connective and the conditional.
    Full,
    /// `¬`, `∧`, `∨`.
    Scl,
    /// `⊼` only.
    Nand,
}

pub struct TermGen<'a> {
    pub atoms: &'a [Atom],
    pub shape: Shape,
    pub undef: bool,
}

impl TermGen<'_> {
    /// A random closed term of depth at most `depth`.
    pub fn term(&self, rng: &mut StdRng, depth: usize) -> Term {
        if depth <= 1 || rng.gen_ratio(1, 5) {
            return self.leaf(rng);
        }
        let d = depth - 1;
        match self.shape {
            Shape::Nand => Term::nand(self.term(rng, d), self.term(rng, d)),
            Shape::Scl => match rng.gen_range(0..3) {
                0 => Term::not(self.term(rng, d)),
                1 => Term::and(self.term(rng, d), self.term(rng, d)),
                _ => Term::or(self.term(rng, d), self.term(rng, d)),
            },
            Shape::Full => match rng.gen_range(0..8) {
                0 => Term::cond(self.term(rng, d), self.term(rng, d), self.term(rng, d)),
                1 => Term::not(self.term(rng, d)),
                k => {
                    let op = BinOp::ALL[k - 2];
                    Term::bin(op, self.term(rng, d), self.term(rng, d))
                }
            },
        }
    }

    fn leaf(&self, rng: &mut StdRng) -> Term {
        let consts = if self.undef { 3 } else { 2 };
        let k = rng.gen_range(0..consts + 2 * self.atoms.len());
        match k {
            0 => Term::T,
            1 => Term::F,
            2 if self.undef => Term::U,
            _ => Term::Atom(self.atoms[k % self.atoms.len()].clone()),
        }
    }
}

/// A random basic form (atoms may repeat along a path) of depth at most
/// `depth`, counting leaves as depth 1.
pub fn basic_form(rng: &mut StdRng, atoms: &[Atom], depth: usize, undef: bool) -> BasicForm {
    if depth <= 1 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..if undef { 3 } else { 2 }) {
            0 => BasicForm::T,
            1 => BasicForm::F,
            _ => BasicForm::U,
        };
    }
    let a = atoms[rng.gen_range(0..atoms.len())].clone();
    BasicForm::node(
        a,
        basic_form(rng, atoms, depth - 1, undef),
        basic_form(rng, atoms, depth - 1, undef),
    )
}

/// Every closed term over `atoms` with `¬, ∧, ∨, T, F` of depth at most
/// `depth`.
pub fn all_scl_terms(atoms: &[Atom], depth: usize) -> Vec<Term> {
    let mut terms: Vec<Term> = vec![Term::T, Term::F];
    terms.extend(atoms.iter().cloned().map(Term::Atom));
    for _ in 1..depth {
        let prev = terms.clone();
        let mut next = prev.clone();
        next.extend(prev.iter().cloned().map(Term::not));
        for p in &prev {
            for q in &prev {
                next.push(Term::and(p.clone(), q.clone()));
                next.push(Term::or(p.clone(), q.clone()));
            }
        }
        next.sort();
        next.dedup();
        terms = next;
    }
    terms
}

/// The basic form of a closed term, computed by passing the two
/// continuations (what to do on true, on false) down the term instead of
/// substituting into leaves.
pub fn oracle_bf(t: &Term) -> BasicForm {
    go(t, &BasicForm::T, &BasicForm::F)
}

fn go(t: &Term, kt: &BasicForm, kf: &BasicForm) -> BasicForm {
    match t {
        Term::T => kt.clone(),
        Term::F => kf.clone(),
        Term::U => BasicForm::U,
        Term::Atom(a) => BasicForm::node(a.clone(), kt.clone(), kf.clone()),
        Term::Var(v) => panic!("open term: {v}"),
        Term::Cond(p, q, r) => go(q, &go(p, kt, kf), &go(r, kt, kf)),
        Term::Not(p) => go(p, kf, kt),
        Term::Bin(op, p, q) => match op {
            BinOp::And => go(p, &go(q, kt, kf), kf),
            BinOp::Or => go(p, kt, &go(q, kt, kf)),
            BinOp::Iff => go(p, &go(q, kt, kf), &go(q, kf, kt)),
            BinOp::Xor => go(p, &go(q, kf, kt), &go(q, kt, kf)),
            BinOp::Nand => go(p, &go(q, kf, kt), kt),
            BinOp::Nor => go(p, kf, &go(q, kf, kt)),
        },
    }
}

/// Result and first-inspection order under every valuation of `atoms`.
pub fn trace_profile(t: &Term, atoms: &[Atom]) -> Vec<(TruthValue3, Vec<Atom>)> {
    Valuation::all(atoms)
        .iter()
        .map(|v| trace_eval(t, v).unwrap())
        .collect()
}

/// Atoms of both terms, first-occurrence order.
pub fn joint_atoms(p: &Term, q: &Term) -> Vec<Atom> {
    let mut atoms = sclc_core::syntax::atoms_of(p);
    for a in sclc_core::syntax::atoms_of(q) {
        if !atoms.contains(&a) {
            atoms.push(a);
        }
    }
    atoms
}

/// The trace oracle for memorising congruence.
pub fn trace_equivalent(p: &Term, q: &Term) -> bool {
    let atoms = joint_atoms(p, q);
    trace_profile(p, &atoms) == trace_profile(q, &atoms)
}

/// Number of mem-basic forms over `k` atoms with `leaves` leaf constants.
pub fn mem_basic_count(k: u64, leaves: u64) -> u64 {
    (1..=k).fold(leaves, |c, i| leaves + i * c * c)
}

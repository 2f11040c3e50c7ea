//! Short-circuit logic over the conditional: parsing and printing, basic
//! and mem-basic normal forms, the left-sequential NAND normal form,
//! congruence checking and equational axiom tables.

pub mod axioms;
pub mod congruence;
pub mod error;
pub mod nandform;
pub mod normalform;
pub mod syntax;
pub mod translate;

pub use error::{Error, Result};
pub use normalform::{bf, mbf, BasicForm, MemBasicForm};
pub use syntax::{parse, Atom, BinOp, Term, Var};

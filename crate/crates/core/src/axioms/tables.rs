//! The builtin schema tables. Variables are `X, Y, Z, U1, V, W`; `U1`
//! stands in for the fourth variable because `U` is the undefined constant.

use super::{Expectation, Schema, SchemaTable, Signature};
use crate::congruence::Mode;
use crate::error::{Error, Result};

use Signature::{Conditional, Full, Nand, Scl, SclIff, SclIffXor};

fn table(name: &str, mode: Mode, schemas: Vec<Schema>) -> SchemaTable {
    SchemaTable {
        name: name.to_string(),
        mode,
        expect: Expectation::Valid,
        schemas,
    }
}

fn s(name: &str, lhs: &str, rhs: &str, signature: Signature) -> Schema {
    Schema::parse(name, lhs, rhs, signature)
}

fn cp() -> SchemaTable {
    table(
        "CP",
        Mode::FREE,
        vec![
            s("CP1", "X <| T |> Y", "X", Conditional),
            s("CP2", "X <| F |> Y", "Y", Conditional),
            s("CP3", "T <| X |> F", "X", Conditional),
            s(
                "CP4",
                "X <| (Y <| Z |> U1) |> V",
                "(X <| Y |> V) <| Z |> (X <| U1 |> V)",
                Conditional,
            ),
            s("negdef", "!X", "F <| X |> T", Full),
            s("anddef", "X && Y", "Y <| X |> F", Full),
            s("ordef", "X || Y", "!(!X && !Y)", Scl),
            s("or-cond", "X || Y", "T <| X |> Y", Full),
            s("not-T", "!T", "F", Scl),
            s("double-negation", "!!X", "X", Scl),
            s(
                "negated-cond",
                "F <| (X <| Y |> (F <| X |> T)) |> T",
                "X <| (F <| Y |> T) |> (F <| X |> T)",
                Conditional,
            ),
        ],
    )
}

fn cp_mem() -> SchemaTable {
    table(
        "CPmem",
        Mode::MEM,
        vec![
            s(
                "CPmem",
                "X <| Y |> (Z <| U1 |> (V <| Y |> W))",
                "X <| Y |> (Z <| U1 |> W)",
                Conditional,
            ),
            s(
                "CPmem-dual",
                "((W <| Y |> V) <| U1 |> Z) <| Y |> X",
                "(W <| U1 |> Z) <| Y |> X",
                Conditional,
            ),
            s(
                "mem1",
                "(X <| Y |> (Z <| U1 |> V)) <| U1 |> W",
                "(X <| Y |> Z) <| U1 |> W",
                Conditional,
            ),
            s("con1", "(X <| Y |> Z) <| Y |> U1", "X <| Y |> U1", Conditional),
            s("con2", "X <| Y |> (Z <| Y |> U1)", "X <| Y |> U1", Conditional),
            s("defcorres", "X && Y || !X && Z", "Y <| X |> Z", Full),
            s("abs-by-contraction", "(T <| X |> Y) <| X |> F", "X", Conditional),
        ],
    )
}

fn neg() -> Schema {
    s("Neg", "F", "!T", Scl)
}

fn or() -> Schema {
    s("Or", "X || Y", "!(!X && !Y)", Scl)
}

fn tand() -> Schema {
    s("Tand", "T && X", "X", Scl)
}

fn abs() -> Schema {
    s("Abs", "X && (X || Y)", "X", Scl)
}

fn fscl_consequences() -> Vec<Schema> {
    vec![
        s("F3", "!!X", "X", Scl),
        s("F5", "X && T", "X", Scl),
        s("F6", "F && X", "F", Scl),
        s("F7", "(X && Y) && Z", "X && (Y && Z)", Scl),
        s("F8", "!X && F", "X && F", Scl),
        s("F9", "X && F || Y", "(X || T) && Y", Scl),
        s("F10", "X && Y || Z && F", "(X || Z && F) && (Y || Z && F)", Scl),
    ]
}

fn eq_fscl() -> SchemaTable {
    let mut schemas = vec![neg(), or(), tand()];
    schemas.extend(fscl_consequences());
    table("EqFSCL", Mode::FREE, schemas)
}

fn eq_mscl() -> SchemaTable {
    table(
        "EqMSCL",
        Mode::MEM,
        vec![
            neg(),
            or(),
            tand(),
            abs(),
            s("Mem", "(X || Y) && Z", "!X && (Y && Z) || X && Z", Scl),
        ],
    )
}

fn eq_mscl_consequences() -> SchemaTable {
    let mut schemas = fscl_consequences();
    schemas.extend([
        s("C1", "X && (Y && X)", "X && Y", Scl),
        s("C2", "X && (Y && !X)", "X && (Y && F)", Scl),
        s("M1", "X && Y || !X && Z", "(!X || Y) && (X || Z)", Scl),
        s("M2", "X && Y || !X && Z", "!X && Z || X && Y", Scl),
        s(
            "M3",
            "(X && Y || !X && Z) && U1",
            "X && (Y && U1) || !X && (Z && U1)",
            Scl,
        ),
        s("Dis", "X && (Y || Z)", "X && Y || X && Z", Scl),
        s("corres", "X && Y || !X && Z", "(X || Z) && (!X || Y)", Scl),
        s(
            "M3-dual",
            "(X && Y || !X && Z) || U1",
            "X && (Y || U1) || !X && (Z || U1)",
            Scl,
        ),
        s("F9-cond-left", "X && F || Y", "Y <| X |> Y", Full),
        s("F9-cond-right", "Y <| X |> Y", "(X || T) && Y", Full),
        s("or-not-T", "X || !X", "X || T", Scl),
        s("and-not-F", "X && !X", "X && F", Scl),
    ]);
    table("EqMSCL-consequences", Mode::MEM, schemas)
}

fn eq_mscl_li() -> SchemaTable {
    table(
        "EqMSCL-lI",
        Mode::MEM,
        vec![
            or(),
            abs(),
            s("Assoc", "(X && Y) && Z", "X && (Y && Z)", Scl),
            s("Tx", "T <-> X", "X", SclIff),
            s("xF", "X <-> F", "!X", SclIff),
            s("AndIff", "(X && Y) <-> Z", "X && (Y <-> Z) || !X && !Z", SclIff),
        ],
    )
}

fn eq_mscl_li_consequences() -> SchemaTable {
    table(
        "EqMSCL-lI-consequences",
        Mode::MEM,
        vec![
            s("T-iff-comm", "T <-> X", "X <-> T", SclIff),
            s("F-iff-comm", "F <-> X", "X <-> F", SclIff),
            s("not-iff", "!(X <-> Y)", "X <-> !Y", SclIff),
            s("iff-not-not", "!X <-> !Y", "X <-> Y", SclIff),
            s("or-T-iff", "(X || T) <-> Y", "(X || T) && Y", SclIff),
            s("iff-assoc", "(X <-> Y) <-> Z", "X <-> (Y <-> Z)", SclIff),
            s(
                "iff-assoc-cond",
                "(X <-> Y) <-> Z",
                "(Z <| Y |> !Z) <| X |> !(Z <| Y |> !Z)",
                Full,
            ),
            s(
                "iff-and-F",
                "(X <-> Y) && (Z && F)",
                "(X || !Y && (Z && F)) && (Y && (Z && F))",
                SclIff,
            ),
            s("iff-def", "X <-> Y", "X && Y || !X && !Y", SclIff),
            s("iff-cnf", "X <-> Y", "(!X || Y) && (X || !Y)", SclIff),
            s("iff-cond", "X <-> Y", "Y <| X |> !Y", Full),
            s("xor-def", "X ^^ Y", "X <-> !Y", SclIffXor),
            s("not-xor", "!(X ^^ Y)", "X <-> Y", SclIffXor),
            s("xor-dnf", "X ^^ Y", "X && !Y || !X && Y", SclIffXor),
            s("Fx", "F ^^ X", "X", SclIffXor),
            s("xT", "X ^^ T", "!X", SclIffXor),
            s("OrXor", "(X || Y) ^^ Z", "(X || (Y ^^ Z)) && (!X || !Z)", SclIffXor),
            s("not-F-iff", "!X", "F <-> X", SclIff),
            s("not-iff-F", "!X", "X <-> F", SclIff),
            s("not-T-xor", "!X", "T ^^ X", SclIffXor),
            s("not-xor-T", "!X", "X ^^ T", SclIffXor),
        ],
    )
}

fn eq_mscl_ln() -> SchemaTable {
    table(
        "EqMSCL-lN",
        Mode::MEM,
        vec![
            s("N1", "F", "T ~& T", Nand),
            s("N2", "(T ~& X) ~& (X ~& Y)", "X", Nand),
            s(
                "N3",
                "(X ~& (Y ~& T)) ~& Z",
                "((X ~& ((Y ~& Z) ~& T)) ~& ((X ~& T) ~& Z)) ~& T",
                Nand,
            ),
        ],
    )
}

fn eq_mscl_ln_consequences() -> SchemaTable {
    table(
        "EqMSCL-lN-consequences",
        Mode::MEM,
        vec![
            s(
                "elf",
                "(X ~& T) ~& (Y ~& T)",
                "(((X ~& T) ~& (Y ~& T)) ~& T) ~& T",
                Nand,
            ),
            s("twaalf", "(T ~& X) ~& T", "X", Nand),
            s("dertien", "(X ~& ((X ~& T) ~& (Y ~& T))) ~& T", "X", Nand),
            s(
                "veertien",
                "(((X ~& T) ~& (Y ~& T)) ~& Z) ~& T",
                "((((X ~& T) ~& ((Y ~& Z) ~& T)) ~& T) ~& T) ~& (((X ~& Z) ~& T) ~& T)",
                Nand,
            ),
            s("vijftien", "(X ~& T) ~& T", "X", Nand),
            s("zestien", "T ~& X", "X ~& T", Nand),
            s("zeventien", "X ~& ((X ~& T) ~& Y)", "X ~& T", Nand),
            s(
                "achttien",
                "(X ~& (Y ~& T)) ~& Z",
                "((X ~& ((Y ~& Z) ~& T)) ~& ((X ~& T) ~& Z)) ~& T",
                Nand,
            ),
            s(
                "cond-swap",
                "(X ~& Y) ~& ((X ~& T) ~& Z)",
                "((X ~& T) ~& Z) ~& (X ~& Y)",
                Nand,
            ),
            s(
                "cond-primed",
                "(X ~& Y) ~& ((X ~& T) ~& Z)",
                "(((X ~& T) ~& (Z ~& T)) ~& (X ~& (Y ~& T))) ~& T",
                Nand,
            ),
            s("char1", "Y <| X |> Z", "(X ~& Y) ~& (X' ~& Z)", Full),
            s("char2", "Y <| X |> Z", "(X' ~& Z) ~& (X ~& Y)", Full),
            s("char3", "Y <| X |> Z", "((X' ~& Z') ~& (X ~& Y'))'", Full),
            s("char4", "Y <| X |> Z", "((X ~& Y') ~& (X' ~& Z'))'", Full),
            s(
                "b1",
                "((X ~& Y) ~& (X' ~& Z)) ~& V",
                "(X ~& (Y ~& V)) ~& (X' ~& (Z ~& V))",
                Nand,
            ),
            s("b2", "F ~& X", "T", Nand),
            s("b3", "X' ~& (X' ~& F)", "X", Nand),
            s("b4", "X ~& ((X ~& Y) ~& (X' ~& Z))", "X ~& Y", Nand),
            s(
                "b5",
                "X ~& ((Y ~& Z) ~& (Y' ~& W))",
                "X ~& ((Y ~& (X ~& Z')) ~& (Y' ~& (X ~& W')))",
                Nand,
            ),
            s("nor-by-nand", "X ~| Y", "((X ~& T) ~& (Y ~& T)) ~& T", Full),
            s("nor-cond", "X ~| Y", "F <| X |> (F <| Y |> T)", Full),
            s("1l", "!X", "X ~& T", Full),
            s("2l", "X && Y", "(X ~& Y) ~& T", Full),
            s("3l", "X || Y", "(X ~& T) ~& (Y ~& T)", Full),
            s("nand-not-and", "X ~& Y", "!(X && Y)", Full),
            s("nand-cond", "X ~& Y", "(F <| Y |> T) <| X |> T", Full),
        ],
    )
}

fn undefined() -> SchemaTable {
    table(
        "U",
        Mode::MEM.three_valued(),
        vec![
            s("CP-U", "X <| U |> Y", "U", Conditional),
            s("Und", "!U", "U", Scl),
            s("NU", "U ~& X", "U", Nand),
        ],
    )
}

fn undefined_consequences() -> SchemaTable {
    table(
        "U-consequences",
        Mode::MEM.three_valued(),
        vec![
            s("U-and", "U && X", "U", Scl),
            s("U-or", "U || X", "U", Scl),
            s("U-iff", "U <-> X", "U", SclIff),
            s("U-xor", "U ^^ X", "U", SclIffXor),
            s("U-nor", "U ~| X", "U", Full),
            s("F-and-U", "F && U", "F", Scl),
            s("T-or-U", "T || U", "T", Scl),
            s("F-nand-U", "F ~& U", "T", Nand),
            s("x-and-U", "X && U", "U <| X |> F", Full),
        ],
    )
}

fn negative() -> SchemaTable {
    SchemaTable {
        name: "negative".to_string(),
        mode: Mode::MEM,
        expect: Expectation::Refuted,
        schemas: vec![
            s("and-comm", "X && Y", "Y && X", Scl),
            s("or-T", "X || T", "T", Scl),
            s("C1-free", "X && (Y && X)", "X && Y", Scl).in_mode(Mode::FREE),
            s("excluded-middle", "X || !X", "T", Scl),
            s("contradiction", "X && !X", "F", Scl),
            s("and-F-comm", "X && F", "F && X", Scl),
        ],
    }
}

/// All builtin tables, in a fixed order.
pub fn builtin_tables() -> Vec<SchemaTable> {
    vec![
        cp(),
        cp_mem(),
        eq_fscl(),
        eq_mscl(),
        eq_mscl_consequences(),
        eq_mscl_li(),
        eq_mscl_li_consequences(),
        eq_mscl_ln(),
        eq_mscl_ln_consequences(),
        undefined(),
        undefined_consequences(),
        negative(),
    ]
}

pub fn table_names() -> Vec<String> {
    builtin_tables().into_iter().map(|t| t.name).collect()
}

/// Finds a table by name. Underscores and dashes are interchangeable and
/// case is ignored, so `EqMSCL_lN` finds `EqMSCL-lN`.
pub fn lookup(name: &str) -> Result<SchemaTable> {
    let key = |s: &str| s.replace('_', "-").to_lowercase();
    builtin_tables()
        .into_iter()
        .find(|t| key(&t.name) == key(name))
        .ok_or_else(|| Error::UnknownTable(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_table, Strategy};

    fn names(t: &SchemaTable) -> Vec<&str> {
        t.schemas.iter().map(|s| s.name.as_str()).collect()
    }

    #[test]
    fn lookups() {
        assert_eq!(names(&lookup("EqMSCL").unwrap()), ["Neg", "Or", "Tand", "Abs", "Mem"]);
        assert_eq!(names(&lookup("EqMSCL_lN").unwrap()), ["N1", "N2", "N3"]);
        assert_eq!(names(&lookup("U").unwrap()), ["CP-U", "Und", "NU"]);
        assert_eq!(lookup("nope"), Err(Error::UnknownTable("nope".into())));
    }

    #[test]
    fn tables_are_nonempty_with_unique_names() {
        let tables = builtin_tables();
        assert_eq!(
            table_names(),
            [
                "CP",
                "CPmem",
                "EqFSCL",
                "EqMSCL",
                "EqMSCL-consequences",
                "EqMSCL-lI",
                "EqMSCL-lI-consequences",
                "EqMSCL-lN",
                "EqMSCL-lN-consequences",
                "U",
                "U-consequences",
                "negative"
            ]
        );
        for t in &tables {
            assert!(!t.schemas.is_empty());
            let mut n = names(t);
            n.sort();
            n.dedup();
            assert_eq!(n.len(), t.schemas.len(), "{}", t.name);
        }
    }

    #[test]
    fn every_table_meets_its_expectation_on_fresh_atoms() {
        for t in builtin_tables() {
            for r in check_table(&t, None, Strategy::FreshAtoms).unwrap() {
                assert!(r.as_expected(t.expect), "{} / {}: {}", t.name, r.schema, r.verdict);
            }
        }
    }
}

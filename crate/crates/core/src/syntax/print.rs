use serde_json::{json, Value};

use super::{BinOp, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintStyle {
    Unicode,
    Ascii,
    Json,
}

/// Renders terms with minimal parentheses. With `primes` set, `x ~& T`
/// is written `x'` (`x′` in Unicode).
#[derive(Clone, Copy, Debug)]
pub struct Printer {
    pub style: PrintStyle,
    pub primes: bool,
}

pub fn print(term: &Term, style: PrintStyle) -> String {
    Printer { style, primes: false }.print(term)
}

const COND: u8 = 0;
const UNARY: u8 = 6;
const POSTFIX: u8 = 7;
const ATOMIC: u8 = 8;

fn bin_prec(op: BinOp) -> u8 {
    match op {
        BinOp::Iff => 1,
        BinOp::Xor => 2,
        BinOp::Or => 3,
        BinOp::And => 4,
        BinOp::Nand | BinOp::Nor => 5,
    }
}

impl Printer {
    pub fn new(style: PrintStyle) -> Self {
        Printer { style, primes: false }
    }

    pub fn with_primes(mut self, primes: bool) -> Self {
        self.primes = primes;
        self
    }

    pub fn print(&self, term: &Term) -> String {
        match self.style {
            PrintStyle::Json => term_json(term).to_string(),
            _ => {
                let mut out = String::new();
                self.write(term, COND, &mut out);
                out
            }
        }
    }

    fn unicode(&self) -> bool {
        self.style == PrintStyle::Unicode
    }

    fn as_prime<'t>(&self, term: &'t Term) -> Option<&'t Term> {
        match term {
            Term::Bin(BinOp::Nand, x, one) if self.primes && **one == Term::T => Some(x),
            _ => None,
        }
    }

    fn prec(&self, term: &Term) -> u8 {
        if self.as_prime(term).is_some() {
            return POSTFIX;
        }
        match term {
            Term::T | Term::F | Term::U | Term::Atom(_) | Term::Var(_) => ATOMIC,
            Term::Cond(..) => COND,
            Term::Not(_) => UNARY,
            Term::Bin(op, ..) => bin_prec(*op),
        }
    }

    fn op_symbol(&self, op: BinOp) -> &'static str {
        match (op, self.unicode()) {
            (BinOp::And, false) => "&&",
            (BinOp::Or, false) => "||",
            (BinOp::Iff, false) => "<->",
            (BinOp::Xor, false) => "^^",
            (BinOp::Nand, false) => "~&",
            (BinOp::Nor, false) => "~|",
            (BinOp::And, true) => "∧ᵒ",
            (BinOp::Or, true) => "∨ᵒ",
            (BinOp::Iff, true) => "↔ᵒ",
            (BinOp::Xor, true) => "⊕ᵒ",
            (BinOp::Nand, true) => "⊼ᵒ",
            (BinOp::Nor, true) => "⊽ᵒ",
        }
    }

    fn write(&self, term: &Term, min: u8, out: &mut String) {
        let paren = self.prec(term) < min;
        if paren {
            out.push('(');
        }
        if let Some(x) = self.as_prime(term) {
            self.write(x, POSTFIX, out);
            out.push_str(if self.unicode() { "′" } else { "'" });
        } else {
            match term {
                Term::T => out.push('T'),
                Term::F => out.push('F'),
                Term::U => out.push('U'),
                Term::Atom(a) => out.push_str(a.name()),
                Term::Var(v) => out.push_str(v.name()),
                Term::Cond(p, q, r) => {
                    let (open, close) = if self.unicode() {
                        (" ◁ ", " ▷ ")
                    } else {
                        (" <| ", " |> ")
                    };
                    self.write(p, COND + 1, out);
                    out.push_str(open);
                    self.write(q, COND + 1, out);
                    out.push_str(close);
                    self.write(r, COND + 1, out);
                }
                Term::Not(p) => {
                    out.push_str(if self.unicode() { "¬" } else { "!" });
                    self.write(p, UNARY, out);
                }
                Term::Bin(op, p, q) => {
                    let prec = bin_prec(*op);
                    self.write(p, prec, out);
                    out.push(' ');
                    out.push_str(self.op_symbol(*op));
                    out.push(' ');
                    self.write(q, prec + 1, out);
                }
            }
        }
        if paren {
            out.push(')');
        }
    }
}

/// Nested-object JSON rendering, e.g. `{"cond":{"then":…,"if":…,"else":…}}`.
pub fn term_json(term: &Term) -> Value {
    match term {
        Term::T => json!({"const": "T"}),
        Term::F => json!({"const": "F"}),
        Term::U => json!({"const": "U"}),
        Term::Atom(a) => json!({"atom": a.name()}),
        Term::Var(v) => json!({"var": v.name()}),
        Term::Cond(p, q, r) => json!({"cond": {
            "then": term_json(p),
            "if": term_json(q),
            "else": term_json(r),
        }}),
        Term::Not(p) => json!({"not": term_json(p)}),
        Term::Bin(op, p, q) => {
            let mut obj = serde_json::Map::new();
            obj.insert(op.name().to_string(), json!([term_json(p), term_json(q)]));
            Value::Object(obj)
        }
    }
}

mod args;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{AxiomsCommand, Cli, Command, Global};
use sclc_core::axioms::{self, CheckResult, Expectation, Strategy, Verdict};
use sclc_core::congruence::{normalize, to_dot, trace_eval, Congruence, Mode, Valuation};
use sclc_core::nandform::{self, from_munbf, nand_nf, to_munbf, Munbf};
use sclc_core::normalform::{self, enumerate_mem_basic, is_mem_basic, mbf, BasicForm};
use sclc_core::syntax::{dual, term_json, PrintStyle, Printer};
use sclc_core::translate::{decode_nand, encode_nand, is_nand_term, to_core};
use sclc_core::{Atom, Error, Term};

const STACK_SIZE: usize = 512 << 20;

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

struct Ctx {
    mode: Mode,
    explicit_mode: Option<Congruence>,
    format: Format,
    explicit_text: bool,
    printer: Printer,
}

impl Ctx {
    fn new(g: &Global) -> Ctx {
        let explicit_mode = match (g.free, g.mem) {
            (true, _) => Some(Congruence::Free),
            (_, true) => Some(Congruence::Mem),
            _ => None,
        };
        let congruence = explicit_mode.unwrap_or(Congruence::Mem);
        let format = if g.json {
            Format::Json
        } else if g.dot {
            Format::Dot
        } else {
            Format::Text
        };
        let style = if g.ascii { PrintStyle::Ascii } else { PrintStyle::Unicode };
        Ctx {
            mode: Mode { congruence, three_valued: g.three_valued },
            explicit_mode,
            format,
            explicit_text: g.text,
            printer: Printer::new(style).with_primes(g.primes),
        }
    }

    fn term(&self, t: &Term) -> String {
        self.printer.print(t)
    }

    fn basic(&self, p: &BasicForm) -> String {
        self.term(&normalform::render(p))
    }

    fn munbf(&self, m: &Munbf) -> String {
        self.term(&nandform::render(m))
    }

    fn no_dot(&self, command: &str) -> Result<(), Failure> {
        if self.format == Format::Dot {
            return Err(Failure::Usage(format!("--dot is not available for `{command}`")));
        }
        Ok(())
    }

    /// The normal form of `t`, checked against the library's own invariants.
    fn normal_form(&self, t: &Term) -> Result<BasicForm, Failure> {
        let p = normalize(t, self.mode)?;
        if self.mode.congruence == Congruence::Mem && !is_mem_basic(&p) {
            return Err(Failure::Internal(format!("normal form {p} is not mem-basic")));
        }
        Ok(p)
    }
}

fn read_expr(src: &str) -> Result<Term, Failure> {
    if src == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        Ok(sclc_core::parse(buf.trim())?)
    } else {
        Ok(sclc_core::parse(src)?)
    }
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn norm(ctx: &Ctx, expr: &str) -> Outcome {
    let p = ctx.normal_form(&read_expr(expr)?)?;
    let out = match ctx.format {
        Format::Text => format!("{}\n", ctx.basic(&p)),
        Format::Json => json_line(p.to_json()),
        Format::Dot => to_dot(&p),
    };
    Ok((out, 0))
}

fn eq(ctx: &Ctx, lhs: &str, rhs: &str) -> Outcome {
    ctx.no_dot("eq")?;
    if lhs == "-" && rhs == "-" {
        return Err(Failure::Usage("only one expression can come from stdin".into()));
    }
    let l = ctx.normal_form(&read_expr(lhs)?)?;
    let r = ctx.normal_form(&read_expr(rhs)?)?;
    let equal = l == r;
    let out = match ctx.format {
        Format::Json => json_line(json!({
            "equal": equal,
            "mode": ctx.mode.to_string(),
            "lhs": l.to_json(),
            "rhs": r.to_json(),
        })),
        _ => format!(
            "{}\n{}\n{}\n",
            ctx.basic(&l),
            ctx.basic(&r),
            if equal { "equal" } else { "not equal" }
        ),
    };
    Ok((out, u8::from(!equal)))
}

fn print_term(ctx: &Ctx, command: &str, t: &Term) -> Outcome {
    ctx.no_dot(command)?;
    let out = match ctx.format {
        Format::Json => json_line(term_json(t)),
        _ => format!("{}\n", ctx.term(t)),
    };
    Ok((out, 0))
}

fn eval(ctx: &Ctx, expr: &str, valuation: &str, trace: bool) -> Outcome {
    ctx.no_dot("eval")?;
    let t = read_expr(expr)?;
    let v: Valuation = valuation.parse()?;
    let (value, seen) = trace_eval(&t, &v)?;
    let names: Vec<&str> = seen.iter().map(Atom::name).collect();
    let out = match (ctx.format, trace) {
        (Format::Json, true) => json_line(json!({"value": value.to_string(), "trace": names})),
        (Format::Json, false) => json_line(json!({"value": value.to_string()})),
        (_, true) => format!("{value}\n{}\n", names.join(" ")),
        (_, false) => format!("{value}\n"),
    };
    Ok((out, 0))
}

fn munbf_of(t: &Term) -> Result<Munbf, Failure> {
    let m = if is_nand_term(t) {
        nand_nf(t)?
    } else {
        to_munbf(&mbf(&to_core(t))?)
    };
    if !m.is_valid() {
        return Err(Failure::Internal(format!("{m} violates the node condition")));
    }
    Ok(m)
}

fn munbf(ctx: &Ctx, expr: Option<&str>, enumerate: Option<&str>) -> Outcome {
    ctx.no_dot("munbf")?;
    let forms = match (expr, enumerate) {
        (Some(e), _) => vec![munbf_of(&read_expr(e)?)?],
        (None, Some(list)) => {
            let atoms = list
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(Atom::new)
                .collect::<Result<Vec<_>, _>>()?;
            let mut forms = Vec::new();
            for m in enumerate_mem_basic(&atoms, ctx.mode.three_valued) {
                let q = to_munbf(&m);
                if from_munbf(&q)? != m {
                    return Err(Failure::Internal(format!("{q} does not decode to {m}")));
                }
                forms.push(q);
            }
            forms
        }
        (None, None) => return Err(Failure::Usage("missing EXPR".into())),
    };
    let out = match ctx.format {
        Format::Json if expr.is_some() => json_line(forms[0].to_json()),
        Format::Json => json_line(Value::Array(forms.iter().map(Munbf::to_json).collect())),
        _ => forms.iter().map(|m| format!("{}\n", ctx.munbf(m))).collect(),
    };
    Ok((out, 0))
}

fn outline(p: &BasicForm, indent: usize, label: &str, out: &mut String) {
    let pad = "  ".repeat(indent);
    match p {
        BasicForm::Node(a, l, r) => {
            out.push_str(&format!("{pad}{label}{}\n", a.name()));
            outline(l, indent + 1, "T: ", out);
            outline(r, indent + 1, "F: ", out);
        }
        leaf => out.push_str(&format!("{pad}{label}{leaf}\n")),
    }
}

fn tree(ctx: &Ctx, expr: &str) -> Outcome {
    let p = ctx.normal_form(&read_expr(expr)?)?;
    let out = match ctx.format {
        Format::Json => json_line(p.to_json()),
        Format::Dot => to_dot(&p),
        Format::Text if !ctx.explicit_text => to_dot(&p),
        Format::Text => {
            let mut out = String::new();
            outline(&p, 0, "", &mut out);
            out
        }
    };
    Ok((out, 0))
}

fn verdict_json(r: &CheckResult, expect: Expectation) -> Value {
    let mut v = json!({
        "schema": r.schema,
        "mode": r.mode.to_string(),
        "passed": r.verdict.passed(),
        "as_expected": r.as_expected(expect),
    });
    match &r.verdict {
        Verdict::PassedFreshAtoms => v["strategy"] = json!("fresh-atoms"),
        Verdict::PassedExhaustive { k, count, truncation } => {
            v["strategy"] = json!("exhaustive");
            v["k"] = json!(k);
            v["instances"] = json!(count);
            if let Some(t) = truncation {
                v["truncation"] = json!({"pool": t.pool, "used": t.used, "cap": t.cap});
            }
        }
        Verdict::RefutedByFreshAtoms(f) | Verdict::RefutedExhaustive(f) => {
            let fresh = matches!(r.verdict, Verdict::RefutedByFreshAtoms(_));
            v["strategy"] = json!(if fresh { "fresh-atoms" } else { "exhaustive" });
            let witness: serde_json::Map<String, Value> = f
                .witness
                .iter()
                .map(|(x, t)| (x.name().to_string(), json!(t.to_string())))
                .collect();
            v["witness"] = Value::Object(witness);
            v["lhs"] = f.lhs.to_json();
            v["rhs"] = f.rhs.to_json();
        }
    }
    v
}

fn axioms_check(ctx: &Ctx, name: &str, k: Option<usize>, cap: u64, verbose: bool) -> Outcome {
    ctx.no_dot("axioms check")?;
    let table = axioms::lookup(name)?;
    let strategy = match k {
        Some(k) => Strategy::Exhaustive { k, cap },
        None => Strategy::FreshAtoms,
    };
    let mut results = Vec::with_capacity(table.schemas.len());
    for s in &table.schemas {
        let mut mode = table.mode_of(s);
        if let Some(c) = ctx.explicit_mode {
            mode.congruence = c;
        }
        mode.three_valued |= ctx.mode.three_valued;
        results.push(axioms::check_schema(s, mode, strategy)?);
    }
    let good = results.iter().filter(|r| r.as_expected(table.expect)).count();
    let code = u8::from(good != results.len());
    if ctx.format == Format::Json {
        let list: Vec<Value> = results.iter().map(|r| verdict_json(r, table.expect)).collect();
        let out = json!({
            "table": table.name,
            "expect": if table.expect == Expectation::Valid { "valid" } else { "refuted" },
            "as_expected": good,
            "total": results.len(),
            "results": list,
        });
        return Ok((json_line(out), code));
    }
    let mut out = String::new();
    for r in &results {
        let notable = !r.as_expected(table.expect)
            || matches!(r.verdict, Verdict::PassedExhaustive { truncation: Some(_), .. });
        if verbose || notable {
            out.push_str(&format!("{}: {}\n", r.schema, r.verdict));
        }
    }
    let verb = match table.expect {
        Expectation::Valid => "passed",
        Expectation::Refuted => "refuted",
    };
    let how = match strategy {
        Strategy::FreshAtoms => "fresh-atoms".to_string(),
        Strategy::Exhaustive { k, .. } => format!("exhaustive k={k}"),
    };
    out.push_str(&format!("{good}/{} {verb} ({how})\n", results.len()));
    Ok((out, code))
}

fn axioms_list(ctx: &Ctx, name: Option<&str>) -> Outcome {
    ctx.no_dot("axioms list")?;
    let Some(name) = name else {
        let tables = axioms::builtin_tables();
        let out = match ctx.format {
            Format::Json => json_line(json!(tables
                .iter()
                .map(|t| json!({"name": t.name, "mode": t.mode.to_string(), "schemas": t.schemas.len()}))
                .collect::<Vec<_>>())),
            _ => tables
                .iter()
                .map(|t| format!("{} ({}, {} schemas)\n", t.name, t.mode, t.schemas.len()))
                .collect(),
        };
        return Ok((out, 0));
    };
    let table = axioms::lookup(name)?;
    let out = match ctx.format {
        Format::Json => json_line(json!(table
            .schemas
            .iter()
            .map(|s| json!({"name": s.name, "lhs": term_json(&s.lhs), "rhs": term_json(&s.rhs)}))
            .collect::<Vec<_>>())),
        _ => table
            .schemas
            .iter()
            .map(|s| format!("{}: {} = {}\n", s.name, ctx.term(&s.lhs), ctx.term(&s.rhs)))
            .collect(),
    };
    Ok((out, 0))
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx::new(&cli.global);
    match &cli.command {
        Command::Norm { expr } => norm(&ctx, expr),
        Command::Eq { lhs, rhs } => eq(&ctx, lhs, rhs),
        Command::Dual { expr } => print_term(&ctx, "dual", &dual(&read_expr(expr)?)),
        Command::Eval { expr, valuation, trace } => eval(&ctx, expr, valuation, *trace),
        Command::ToNand { expr } => print_term(&ctx, "to-nand", &encode_nand(&read_expr(expr)?)?),
        Command::FromNand { expr } => {
            print_term(&ctx, "from-nand", &decode_nand(&read_expr(expr)?)?)
        }
        Command::Munbf { expr, enumerate } => munbf(&ctx, expr.as_deref(), enumerate.as_deref()),
        Command::Tree { expr } => tree(&ctx, expr),
        Command::Axioms { command } => match command {
            AxiomsCommand::Check { table, exhaustive, cap, verbose } => {
                axioms_check(&ctx, table, *exhaustive, *cap, *verbose)
            }
            AxiomsCommand::List { table } => axioms_list(&ctx, table.as_deref()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let worker = std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(move || run(cli))
        .expect("spawn worker thread");
    let outcome = match worker.join() {
        Ok(outcome) => outcome,
        Err(_) => Err(Failure::Internal("worker panicked".into())),
    };
    match outcome {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("sclc: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("sclc: internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

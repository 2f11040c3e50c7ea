//! Acceptance checks: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use common::{Shape, TermGen};
use sclc_core::axioms::{
    builtin_tables, check_schema, instantiate, lookup, Expectation, Strategy, Verdict,
};
use sclc_core::congruence::{equiv, normalize, Congruence, Mode};
use sclc_core::nandform::{from_munbf, nand_nf, to_munbf};
use sclc_core::normalform::{self, bf, enumerate_mem_basic, is_mem_basic, mbf, BasicForm};
use sclc_core::syntax::dual;
use sclc_core::translate::{decode_nand, encode_nand, to_core};
use sclc_core::{parse, Term};

const SAMPLES: usize = 1_000;
const DEEP_PAIRS: usize = 10_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixed_point() -> Outcome {
    let atoms = common::atoms(4);
    let mut rng = common::rng(1);
    for _ in 0..SAMPLES {
        let p = common::basic_form(&mut rng, &atoms, 8, false);
        let back = bf(&normalform::render(&p)).map_err(|e| e.to_string())?;
        ensure(back == p, || format!("bf(render(p)) = {back} for p = {p}"))?;
    }
    Ok(format!("{SAMPLES} basic forms"))
}

fn membership_idempotence() -> Outcome {
    let atoms = common::atoms(4);
    let gen = TermGen { atoms: &atoms, shape: Shape::Full, undef: false };
    let mut rng = common::rng(2);
    for _ in 0..SAMPLES {
        let t = gen.term(&mut rng, 6);
        let m = mbf(&t).map_err(|e| e.to_string())?;
        ensure(is_mem_basic(m.as_basic()), || format!("mbf({t}) not mem-basic"))?;
        let again = mbf(&normalform::render(m.as_basic())).map_err(|e| e.to_string())?;
        ensure(again == m, || format!("mbf not idempotent on {t}"))?;
    }
    Ok(format!("{SAMPLES} terms"))
}

fn worked_example() -> Outcome {
    let t = parse("((F <| a |> T) <| b |> F) <| a |> F").unwrap();
    let want = bf(&parse("(F <| b |> F) <| a |> F").unwrap()).unwrap();
    let got = mbf(&t).map_err(|e| e.to_string())?;
    ensure(got.as_basic() == &want, || format!("got {got}"))?;
    Ok(format!("mbf = {got}"))
}

fn axiom_validity() -> Outcome {
    let mut checked = 0;
    let mut truncated = Vec::new();
    for table in builtin_tables() {
        if table.expect != Expectation::Valid {
            continue;
        }
        for s in &table.schemas {
            let mode = table.mode_of(s);
            let fresh = check_schema(s, mode, Strategy::FreshAtoms).map_err(|e| e.to_string())?;
            ensure(fresh.verdict == Verdict::PassedFreshAtoms, || {
                format!("{}/{}: {}", table.name, s.name, fresh.verdict)
            })?;
            let ex = check_schema(s, mode, Strategy::exhaustive(2)).map_err(|e| e.to_string())?;
            match ex.verdict {
                Verdict::PassedExhaustive { truncation, .. } => {
                    if let Some(tr) = truncation {
                        truncated.push(format!("{} ({}/{})", s.name, tr.used, tr.pool));
                    }
                }
                v => return Err(format!("{}/{}: {v}", table.name, s.name)),
            }
            checked += 1;
        }
    }
    let mut msg = format!("{checked} schemas, fresh atoms and exhaustive k=2");
    if !truncated.is_empty() {
        msg += &format!("; budget-limited pools: {}", truncated.join(", "));
    }
    Ok(msg)
}

fn negative_suite() -> Outcome {
    let table = lookup("negative").map_err(|e| e.to_string())?;
    for name in ["and-comm", "or-T", "C1-free"] {
        let s = table.get(name).ok_or_else(|| format!("missing schema {name}"))?;
        let mode = table.mode_of(s);
        let r = check_schema(s, mode, Strategy::FreshAtoms).map_err(|e| e.to_string())?;
        let Verdict::RefutedByFreshAtoms(refutation) = &r.verdict else {
            return Err(format!("{name}: {}", r.verdict));
        };
        let sub = refutation.witness.iter().cloned().collect();
        let (l, rhs) = instantiate(s, &sub).map_err(|e| e.to_string())?;
        let differs = match mode.congruence {
            Congruence::Free => common::oracle_bf(&l) != common::oracle_bf(&rhs),
            Congruence::Mem => !common::trace_equivalent(&l, &rhs),
        };
        ensure(differs, || format!("{name}: oracle does not separate {l} and {rhs}"))?;
    }
    Ok("3 schemas refuted, witnesses confirmed by oracle".to_string())
}

/// Mutates one random subterm of `t` by applying a law that holds under
/// memorising congruence, or by an arbitrary change.
fn mutate(rng: &mut rand::rngs::StdRng, t: &Term, gen: &TermGen) -> Term {
    match rng.gen_range(0..4) {
        0 => Term::and(Term::T, t.clone()),
        1 => Term::not(Term::not(t.clone())),
        2 => match t {
            Term::Bin(op, l, r) => Term::bin(*op, (**r).clone(), (**l).clone()),
            _ => Term::or(t.clone(), Term::F),
        },
        _ => Term::and(t.clone(), gen.term(rng, 2)),
    }
}

fn oracle_equivalence() -> Outcome {
    let atoms = common::atoms(2);
    let pool = common::all_scl_terms(&atoms, 3);
    let mut by_form: HashMap<BasicForm, usize> = HashMap::new();
    let mut by_trace = HashMap::new();
    let mut classes_form = Vec::with_capacity(pool.len());
    let mut classes_trace = Vec::with_capacity(pool.len());
    for t in &pool {
        let m = mbf(t).map_err(|e| e.to_string())?.into_basic();
        let n = by_form.len();
        classes_form.push(*by_form.entry(m).or_insert(n));
        let n = by_trace.len();
        classes_trace.push(*by_trace.entry(common::trace_profile(t, &atoms)).or_insert(n));
    }
    // Two labelings induce the same partition iff their pairing is a bijection.
    let mut pairing = HashMap::new();
    for (f, tr) in classes_form.iter().zip(&classes_trace) {
        ensure(*pairing.entry(f).or_insert(tr) == tr, || "partitions differ".to_string())?;
    }
    ensure(by_form.len() == by_trace.len(), || {
        format!("{} mbf classes vs {} trace classes", by_form.len(), by_trace.len())
    })?;

    let atoms = common::atoms(3);
    let gen = TermGen { atoms: &atoms, shape: Shape::Full, undef: true };
    let mut rng = common::rng(6);
    let mut agreed_equal = 0;
    for i in 0..DEEP_PAIRS {
        let p = gen.term(&mut rng, 6);
        let q = match i % 3 {
            0 => gen.term(&mut rng, 6),
            1 => normalform::render(mbf(&p).map_err(|e| e.to_string())?.as_basic()),
            _ => mutate(&mut rng, &p, &gen),
        };
        let got = equiv(&p, &q, Mode::MEM).map_err(|e| e.to_string())?;
        let want = common::trace_equivalent(&p, &q);
        ensure(got == want, || format!("disagree on {p} and {q}: equiv = {got}"))?;
        agreed_equal += got as usize;
    }
    Ok(format!(
        "{} pool terms in {} classes, {DEEP_PAIRS} random pairs ({agreed_equal} equivalent)",
        pool.len(),
        by_form.len()
    ))
}

fn nand_pipeline() -> Outcome {
    let atoms = common::atoms(3);
    let scl = TermGen { atoms: &atoms, shape: Shape::Scl, undef: false };
    let mut rng = common::rng(7);
    for _ in 0..SAMPLES {
        let t = scl.term(&mut rng, 6);
        let back = decode_nand(&encode_nand(&t).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(equiv(&back, &t, Mode::MEM).map_err(|e| e.to_string())?, || {
            format!("roundtrip changed {t} into {back}")
        })?;
    }

    let nand = TermGen { atoms: &atoms, shape: Shape::Nand, undef: true };
    for _ in 0..SAMPLES {
        let t = nand.term(&mut rng, 7);
        let direct = nand_nf(&t).map_err(|e| e.to_string())?;
        let core = to_core(&decode_nand(&t).map_err(|e| e.to_string())?);
        let routed = to_munbf(&mbf(&core).map_err(|e| e.to_string())?);
        ensure(direct == routed, || format!("{t}: {direct} vs {routed}"))?;
    }

    let two = common::atoms(2);
    let forms = enumerate_mem_basic(&two, true);
    let expected = common::mem_basic_count(2, 3);
    ensure(forms.len() as u64 == expected, || {
        format!("{} forms, expected {expected}", forms.len())
    })?;
    for m in &forms {
        let back = from_munbf(&to_munbf(m)).map_err(|e| e.to_string())?;
        ensure(&back == m, || format!("bijection fails on {m}"))?;
    }
    Ok(format!("{SAMPLES} roundtrips, {SAMPLES} routes, {} forms", forms.len()))
}

fn duality() -> Outcome {
    let atoms = common::atoms(3);
    let gen = TermGen { atoms: &atoms, shape: Shape::Full, undef: true };
    let mut rng = common::rng(8);
    for _ in 0..SAMPLES {
        let t = gen.term(&mut rng, 6);
        ensure(dual(&dual(&t)) == t, || format!("dual not involutive on {t}"))?;
    }
    let modes = [Mode::FREE.three_valued(), Mode::MEM.three_valued()];
    let mut equal = 0;
    for mode in modes {
        for i in 0..SAMPLES {
            let p = gen.term(&mut rng, 5);
            let q = match i % 2 {
                0 => gen.term(&mut rng, 5),
                _ => {
                    let nf = normalize(&p, mode).map_err(|e| e.to_string())?;
                    normalform::render(&nf)
                }
            };
            let e = equiv(&p, &q, mode).map_err(|e| e.to_string())?;
            let d = equiv(&dual(&p), &dual(&q), mode).map_err(|e| e.to_string())?;
            ensure(e == d, || format!("{mode}: {p} vs {q}"))?;
            equal += e as usize;
        }
    }
    Ok(format!("{SAMPLES} involutions, {} pairs ({equal} equivalent)", 2 * SAMPLES))
}

fn passes_exhaustive(table: &str, names: &[&str], mode: Mode) -> Outcome {
    let table = lookup(table).map_err(|e| e.to_string())?;
    let mut counts = Vec::new();
    for name in names {
        let s = table.get(name).ok_or_else(|| format!("missing schema {name}"))?;
        let r = check_schema(s, mode, Strategy::exhaustive(2)).map_err(|e| e.to_string())?;
        match r.verdict {
            Verdict::PassedExhaustive { count, .. } => counts.push(format!("{name} ({count})")),
            v => return Err(format!("{name}: {v}")),
        }
    }
    Ok(counts.join(", "))
}

fn three_valued_laws() -> Outcome {
    passes_exhaustive(
        "U-consequences",
        &["U-and", "U-or", "U-iff", "F-and-U", "F-nand-U"],
        Mode::MEM.three_valued(),
    )
}

fn iff_assoc_and_f9() -> Outcome {
    let a = passes_exhaustive("EqMSCL-lI-consequences", &["iff-assoc"], Mode::MEM)?;
    let b = passes_exhaustive("EqMSCL-consequences", &["F9"], Mode::MEM)?;
    Ok(format!("{a}, {b}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("basic-form fixed point", fixed_point),
        ("mem-basic membership and idempotence", membership_idempotence),
        ("worked mbf example", worked_example),
        ("axiom tables valid", axiom_validity),
        ("negative suite refuted", negative_suite),
        ("mbf agrees with trace oracle", oracle_equivalence),
        ("NAND pipeline", nand_pipeline),
        ("duality", duality),
        ("three-valued laws", three_valued_laws),
        ("iff associativity and F9", iff_assoc_and_f9),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sclc_core::axioms::{check_schema, lookup, Strategy};
use sclc_core::nandform::nand_nf;
use sclc_core::normalform::{bf, mbf};
use sclc_core::{parse, Term};

/// `a1 && (a2 && (… && an))` with every atom repeated in a trailing
/// disjunction, so the basic form duplicates atoms that mf must strip.
fn chain(n: usize) -> Term {
    let atoms: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let conj = atoms.join(" && ");
    let disj = atoms.join(" || ");
    parse(&format!("({conj}) || !({disj})")).unwrap()
}

fn nand_chain(n: usize) -> Term {
    let mut src = String::from("a1");
    for i in 2..=n {
        src = format!("({src}) ~& (a{i} ~& T)");
    }
    parse(&src).unwrap()
}

fn normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_forms");
    for n in [4, 8, 12] {
        let t = chain(n);
        group.bench_with_input(BenchmarkId::new("bf", n), &t, |b, t| b.iter(|| bf(black_box(t))));
        group.bench_with_input(BenchmarkId::new("mbf", n), &t, |b, t| b.iter(|| mbf(black_box(t))));
        let t = nand_chain(n);
        group.bench_with_input(BenchmarkId::new("nand_nf", n), &t, |b, t| {
            b.iter(|| nand_nf(black_box(t)))
        });
    }
    group.finish();
}

fn axiom_checks(c: &mut Criterion) {
    let table = lookup("EqMSCL").unwrap();
    let mem = table.get("Mem").unwrap().clone();
    let mode = table.mode_of(&mem);
    let mut group = c.benchmark_group("axioms");
    group.sample_size(10);
    group.bench_function("Mem/fresh", |b| {
        b.iter(|| check_schema(black_box(&mem), mode, Strategy::FreshAtoms))
    });
    group.bench_function("Mem/exhaustive2", |b| {
        b.iter(|| check_schema(black_box(&mem), mode, Strategy::exhaustive(2)))
    });
    group.finish();
}

criterion_group!(benches, normal_forms, axiom_checks);
criterion_main!(benches);

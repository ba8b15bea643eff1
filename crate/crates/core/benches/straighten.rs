use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcenter_core::algebra::{Crossing, Family, GeneratorId, Presentation};
use qcenter_core::coeffs::CoeffDomain;
use qcenter_core::elements::cn_element;
use qcenter_core::par::Exec;
use qcenter_core::verify::{is_central_with, pbw_oracle_sweep};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn so5() -> Presentation {
    Presentation::build(Family::SoPrime(5), CoeffDomain::root_of_unity(5).unwrap(), Crossing::PlainBracket).unwrap()
}

fn multiply(c: &mut Criterion) {
    let p = so5();
    let letters = p.letters().to_vec();
    let words: Vec<_> = (0..6)
        .map(|k| (p.domain().int(k + 1), (0..4).map(|j| letters[(3 * k as usize + 5 * j) % letters.len()]).collect()))
        .collect();
    let a = p.normal_form(&words).unwrap();
    let b = p.normal_form(&words[1..]).unwrap();
    let mut group = c.benchmark_group("multiply");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("so5", name), |bench| {
            bench.iter(|| {
                p.clear_memo();
                p.multiply_with(&a, &b, exec).unwrap()
            })
        });
    }
    group.finish();
}

fn centrality(c: &mut Criterion) {
    let p = so5();
    let x = cn_element(GeneratorId::so(5, 4), 5, &p).unwrap();
    let mut group = c.benchmark_group("centrality");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("so5-cn5", name), |bench| {
            bench.iter(|| {
                p.clear_memo();
                is_central_with(&x, &p, exec).unwrap()
            })
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let p = Presentation::build(Family::SoPrime(4), CoeffDomain::generic(), Crossing::PlainBracket).unwrap();
    let mut group = c.benchmark_group("pbw-oracle");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new("so4-100-words", name), |bench| {
            bench.iter(|| {
                p.clear_memo();
                pbw_oracle_sweep(&p, 100, 6, 3, exec).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, multiply, centrality, oracle);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use suq2::bundle::{sgauge_critical, GaugeData};
use suq2::exterior::{antisymmetrize, d_alg, form_tensor, named};
use suq2::laplacians::box_s2;
use suq2::{phi_basis, AlgElement, ContractionParams, Half, Monomial, Scalar, Side, SphereHodge};

fn scalars(c: &mut Criterion) {
    let x = (Scalar::q() + Scalar::from_int(1)).div(&(Scalar::q_pow(3) - Scalar::from_ratio(1, 2))).unwrap();
    let y = Scalar::qnum(Half(3)) * Scalar::i() + Scalar::s_pow(-5);
    c.bench_function("scalar mul+div", |b| b.iter(|| black_box(&x * &y).div(&x).unwrap()));
}

fn algebra(c: &mut Criterion) {
    let monos: Vec<AlgElement> = Monomial::up_to_degree(3).into_iter().map(AlgElement::monomial).collect();
    let x = monos.iter().fold(AlgElement::zero(), |acc, m| acc + m.clone());
    c.bench_function("algebra product, degree <= 3 sums", |b| b.iter(|| black_box(&x) * black_box(&x)));
    c.bench_function("coproduct of degree <= 3 sum", |b| b.iter(|| black_box(&x).coproduct()));
    c.bench_function("d on degree <= 3 sum", |b| b.iter(|| d_alg(black_box(&x))));
}

fn exterior(c: &mut Criterion) {
    let chi = named("chi0").unwrap().form();
    let t = form_tensor(&chi.invariant_coeffs().unwrap(), 3);
    c.bench_function("antisymmetrizer on a 3-tensor", |b| b.iter(|| antisymmetrize(black_box(&t))));
}

fn hodge_and_laplacians(c: &mut Criterion) {
    let p = ContractionParams::dirac_point().unwrap();
    let psi = named("psi+").unwrap().form();
    c.bench_function("star on an invariant 2-form", |b| b.iter(|| p.star_inv(black_box(&psi)).unwrap()));
    let h = SphereHodge::new(p).unwrap();
    let phi = phi_basis(0, Half(2), 1).unwrap();
    c.bench_function("sphere laplacian on phi(0,1,1)", |b| b.iter(|| box_s2(Side::Left, black_box(&phi), &h).unwrap()));
    let g = GaugeData::new(1, sgauge_critical(1));
    let phi = phi_basis(1, Half(1), 0).unwrap();
    let mut group = c.benchmark_group("bundle");
    group.sample_size(10);
    group.bench_function("gauged laplacian, n = 1", |b| b.iter(|| g.gauged_laplacian(black_box(&phi), &h).unwrap()));
    group.finish();
}

criterion_group!(benches, scalars, algebra, exterior, hodge_and_laplacians);
criterion_main!(benches);

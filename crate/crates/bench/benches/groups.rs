use affweyl::newton::{qbg_minimum, zeta_sigma0};
use affweyl::{AffineWeyl, Caps, DiagramAutomorphism, FrobeniusDatum, TypeLetter, Weyl};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn datum(aff: &AffineWeyl, tau: usize) -> FrobeniusDatum {
    let rs = aff.root_system();
    FrobeniusDatum::new(rs, Some(tau), DiagramAutomorphism::identity(rs.rank())).unwrap()
}

fn enumeration(c: &mut Criterion) {
    let e6 = Weyl::of_type(TypeLetter::E, 6).unwrap();
    c.bench_function("enumerate E6", |b| {
        b.iter(|| e6.enumerate(usize::MAX).unwrap().len())
    });
}

fn class_closure(c: &mut Criterion) {
    let aff = AffineWeyl::of_type(TypeLetter::E, 6).unwrap();
    let d = datum(&aff, 1);
    let start = zeta_sigma0(&aff, &d, &aff.weyl().identity());
    c.bench_function("twisted class E6 tau1", |b| {
        b.iter(|| {
            aff.weyl()
                .twisted_class(black_box(&start), &d.sigma0, usize::MAX)
                .unwrap()
        })
    });
}

fn qbg_route(c: &mut Criterion) {
    let aff = AffineWeyl::of_type(TypeLetter::A, 4).unwrap();
    let d = datum(&aff, 2);
    c.bench_function("QBG minimum A4 tau2", |b| {
        b.iter(|| qbg_minimum(&aff, &d, &Caps::default()).unwrap().0)
    });
}

fn demazure(c: &mut Criterion) {
    let aff = AffineWeyl::of_type(TypeLetter::D, 5).unwrap();
    let w0 = aff.finite(aff.weyl().longest_element());
    let t = aff.translation(&[2, 1, 0, 1, 3]);
    let a = aff.mul(&t, &w0);
    let b = aff.mul(&w0, &aff.translation(&[1, 0, 2, 0, 1]));
    c.bench_function("Demazure fold D5", |bench| {
        bench.iter(|| aff.demazure_left_fold(black_box(&a), black_box(&b)))
    });
}

criterion_group!(benches, enumeration, class_closure, qbg_route, demazure);
criterion_main!(benches);

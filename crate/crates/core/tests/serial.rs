use polycyclic::codes::{check_duality, code_from_generators, full_code, zero_code};
use polycyclic::serial::{biv_decompose, serial_isometry, BivAmbient, SerialCase};
use polycyclic::{AmbientSpace, Poly, RingElem, RingMatrix, RingSpec};

fn z4() -> RingSpec {
    RingSpec::new(2, 2, 1).unwrap()
}

fn cyc(r: &RingSpec, n: usize) -> Poly {
    Poly::monomial(r, r.one(), n).sub(&Poly::one(r), r)
}

fn sub(r: &RingSpec, a: &[RingElem], b: &[RingElem]) -> Vec<RingElem> {
    a.iter().zip(b).map(|(x, y)| r.sub(x, y)).collect()
}

#[test]
fn representation_and_multiplication() {
    let r = z4();
    let amb = BivAmbient::new(&r, &cyc(&r, 3), &cyc(&r, 3), 0).unwrap();
    let e = AmbientSpace::new(&r, cyc(&r, 3)).unwrap().companion().clone();
    let id = RingMatrix::identity(&r, 3);
    assert_eq!(amb.regular_rep(&amb.x1()), e.kron(&id));
    assert_eq!(amb.regular_rep(&amb.x2()), id.kron(&e));
    let one = amb.mul(&amb.x1(), &amb.x1());
    assert_eq!(amb.regular_rep(&amb.tensor(&amb.first().ambient().one(), &amb.second().ambient().one())), id.kron(&id));
    let x1x1 = amb.mul(&one, &one);
    assert_eq!(x1x1, amb.x1());
    let x1x2 = amb.mul(&amb.x1(), &amb.x2());
    assert_eq!(x1x2.iter().filter(|c| !r.is_zero(c)).count(), 1);
    assert!(r.is_one(&x1x2[3 + 1]));
}

#[test]
fn spectra_and_idempotents() {
    let r = z4();
    let amb = BivAmbient::new(&r, &cyc(&r, 3), &cyc(&r, 3), 0).unwrap();
    let ext = amb.extension().clone();
    let es = amb.idempotents();
    assert_eq!(es.len(), 4);
    let s = amb.ms(&es[0]).unwrap();
    let mut expect = vec![ext.zero(); 9];
    expect[0] = ext.one();
    assert_eq!(s.values, expect);
    let total = es.iter().fold(vec![r.zero(); 9], |acc, e| acc.iter().zip(e).map(|(a, b)| r.add(a, b)).collect());
    let one = amb.tensor(&amb.first().ambient().one(), &amb.second().ambient().one());
    assert_eq!(total, one);
    assert!(amb.ms(&one).unwrap().values.iter().all(|v| ext.is_one(v)));

    let lin = Poly::from_ints(&r, &[-1, 1]);
    assert_eq!(BivAmbient::new(&r, &cyc(&r, 3), &lin, 0).unwrap().idempotents().len(), 2);
    let irr = Poly::from_ints(&r, &[1, 1, 1]);
    assert_eq!(BivAmbient::new(&r, &irr, &lin, 0).unwrap().idempotents().len(), 1);
}

#[test]
fn duality_and_decomposition() {
    let r = z4();
    let amb = BivAmbient::new(&r, &cyc(&r, 3), &cyc(&r, 3), 0).unwrap();
    let es = amb.idempotents();
    let one = amb.tensor(&amb.first().ambient().one(), &amb.second().ambient().one());
    let c = code_from_generators(&amb, &[es[0].clone()]).unwrap();
    let rep = check_duality(&amb, &c).unwrap();
    assert!(rep.all_equal());
    assert_eq!(rep.annihilator, code_from_generators(&amb, &[sub(&r, &one, &es[0])]).unwrap());
    assert!(check_duality(&amb, &full_code(&amb)).unwrap().annihilator.is_zero());
    assert_eq!(check_duality(&amb, &zero_code(&amb)).unwrap().annihilator, full_code(&amb));

    let c = code_from_generators(&amb, &[es[1].clone()]).unwrap();
    assert_eq!(biv_decompose(&amb, &c).unwrap().full_components(), vec![1]);
    assert_eq!(biv_decompose(&amb, &full_code(&amb)).unwrap().conductors, vec![0; 4]);
    let two: Vec<RingElem> = one.iter().map(|x| r.scale_int(x, 2)).collect();
    let c = code_from_generators(&amb, &[two]).unwrap();
    assert_eq!(biv_decompose(&amb, &c).unwrap().conductors, vec![1; 4]);
}

#[test]
fn isometry_cases() {
    let r = z4();
    let poly = |c: &[i64]| Poly::from_ints(&r, c);
    let a1 = AmbientSpace::new(&r, poly(&[-3, 0, 0, 1])).unwrap();
    let a2 = AmbientSpace::new(&r, poly(&[-1, 0, 0, 1])).unwrap();
    let w = r.from_u64(3);
    let iso = serial_isometry(&a1, &a1.monomial(w.clone(), 1), &a2, &a2.monomial(w.clone(), 1)).unwrap();
    assert_eq!(iso.case, SerialCase::BothConstant);
    // 27 * 3 = 81 = 1 and 27 * 1 = 3 mod 4
    assert_eq!((iso.h1.clone(), iso.h2.clone()), (poly(&[-1, 0, 0, 1]), poly(&[-3, 0, 0, 1])));
    assert!(iso.w.is_monomial());

    let id = serial_isometry(&a1, &a1.x(), &a2, &a2.x()).unwrap();
    assert_eq!((&id.h1, &id.h2), (a1.f(), a2.f()));

    let l1 = AmbientSpace::new(&r, poly(&[0, -3, 0, 1])).unwrap();
    let l2 = AmbientSpace::new(&r, poly(&[0, -1, 0, 0, 1])).unwrap();
    let iso = serial_isometry(&l1, &l1.monomial(w.clone(), 1), &l2, &l2.monomial(r.one(), 2)).unwrap();
    assert_eq!(iso.case, SerialCase::BothLinear);
    // w^2 f1 x = 9 * 3 x = 3x ; 1^3 * 1^2 x = x
    assert_eq!((iso.h1, iso.h2), (poly(&[0, -3, 0, 1]), poly(&[0, -1, 0, 0, 1])));

    let mixed = serial_isometry(&a1, &a1.x(), &l2, &l2.x()).unwrap();
    assert_eq!(mixed.case, SerialCase::Mixed);
    assert!(serial_isometry(&a1, &a1.from_ints(&[1, 0, 1]), &a2, &a2.x()).is_err());
}

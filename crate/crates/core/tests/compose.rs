use std::sync::Arc;

use qform::compose::{compose2, compose3, normalize_projective, proj_compose3, HomogeneousForm};
use qform::matalg::AlgebraElement;
use qform::oracle::{random_rational, rng_from_seed};
use qform::{Rational, Scalar};
use rand::Rng;

fn ri(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn products_match_the_matrix_algebra() {
    let mut rng = rng_from_seed(12);
    let mut checked = 0;
    while checked < 100 {
        let [a, b, c] = [(); 3].map(|_| random_rational(&mut rng, 20));
        let f = HomogeneousForm::new(a, b, c);
        let q = Arc::new(f.to_form());
        if q.disc().is_zero() {
            continue;
        }
        let p: Vec<Rational> = (0..6).map(|_| random_rational(&mut rng, 20)).collect();
        let el = |i: usize| AlgebraElement::new(&q, p[i].clone(), p[i + 1].clone()).unwrap();
        let (u, v) = compose2(&f, (&p[0], &p[1]), (&p[2], &p[3]));
        assert_eq!(el(0).pair_product(&el(2)).unwrap().coords(), (u, v));
        let (x, y) = compose3(&f, (&p[0], &p[1]), (&p[2], &p[3]), (&p[4], &p[5]));
        assert_eq!(el(0).triple(&el(2), &el(4)).unwrap().point(), (x, y));
        checked += 1;
    }
}

#[test]
fn degenerate_forms_still_compose() {
    let f = HomogeneousForm::new(ri(1), ri(2), ri(1));
    let mut rng = rng_from_seed(3);
    for _ in 0..100 {
        let p: Vec<Rational> = (0..6).map(|_| random_rational(&mut rng, 20)).collect();
        let (u, v) = compose2(&f, (&p[0], &p[1]), (&p[2], &p[3]));
        assert_eq!(f.eval(&p[0], &p[1]) * f.eval(&p[2], &p[3]), f.eval_norm(&u, &v));
        let (x, y) = compose3(&f, (&p[0], &p[1]), (&p[2], &p[3]), (&p[4], &p[5]));
        assert_eq!(f.eval(&p[0], &p[1]) * f.eval(&p[2], &p[3]) * f.eval(&p[4], &p[5]), f.eval(&x, &y));
    }
}

/// Second point of the variety on the line through `p0` with direction `d`,
/// scaled by `s`.
fn chord_point(abc: [i64; 3], p0: [i64; 3], d: [i64; 3], s: Rational) -> Option<[Rational; 3]> {
    let qd: i64 = (0..3).map(|i| abc[i] * d[i] * d[i]).sum();
    let bpd: i64 = (0..3).map(|i| abc[i] * p0[i] * d[i]).sum();
    let pt: [i64; 3] = std::array::from_fn(|i| qd * p0[i] - 2 * bpd * d[i]);
    (pt != [0; 3]).then(|| pt.map(|t| s.clone() * ri(t)))
}

#[test]
fn fourth_point_stays_on_the_variety() {
    let cases = [([1, 1, -2], [1, 1, 1]), ([1, -4, 3], [1, 1, 1]), ([1, 1, -1], [1, 0, 1]), ([2, 3, -5], [1, 1, 1]), ([3, 5, -8], [1, 1, 1])];
    let mut rng = rng_from_seed(8);
    for (abc, p0) in cases {
        let [a, b, c] = abc.map(ri);
        for _ in 0..30 {
            let pts: Vec<[Rational; 3]> = std::iter::from_fn(|| {
                let d = [(); 3].map(|_| rng.gen_range(-6..=6));
                Some(chord_point(abc, p0, d, random_rational(&mut rng, 20)))
            })
            .flatten()
            .filter(|p| p.iter().any(|t| !t.is_zero()))
            .take(3)
            .collect();
            let refs: Vec<[&Rational; 3]> = pts.iter().map(|p| [&p[0], &p[1], &p[2]]).collect();
            let [x, y, z] = proj_compose3(&a, &b, &c, [refs[0], refs[1], refs[2]]).unwrap();
            let value = a.clone() * x.square() + b.clone() * y.square() + c.clone() * z.square();
            assert!(value.is_zero(), "{abc:?} {pts:?}");
        }
    }
}

#[test]
fn normalization_is_projective() {
    let p = [ri(-2), ri(14), ri(-10)];
    let scaled: Vec<Rational> = p.iter().map(|t| t.clone() * Rational::frac(-3, 7)).collect();
    assert_eq!(normalize_projective(&p).unwrap(), normalize_projective(&scaled).unwrap());
}

use std::sync::Arc;

use qform::matalg::affine_triple;
use qform::oracle::{random_form_sampler, random_rational, rng_from_seed, FormConstraints};
use qform::ternary::{TernaryGroup, TernaryStructure};
use qform::values::{value_in_domain, value_triple, ValueElement, ValueGroup};
use qform::{Error, QuadraticForm, Rational, Scalar};

fn ri(n: i64) -> Rational {
    Rational::from(n)
}

fn form(s: &str) -> Arc<QuadraticForm<Rational>> {
    Arc::new(s.parse().unwrap())
}

#[test]
fn regressions() {
    assert_eq!(value_triple(&form("x^2+y^2"), &ri(2), &ri(5), &ri(10)).unwrap(), ri(4));
    assert_eq!(value_triple(&form("x^2+y^2-1"), &ri(1), &ri(3), &ri(3)).unwrap(), ri(1));
    assert_eq!(value_triple(&form("x^2-y"), &ri(1), &ri(4), &ri(9)).unwrap(), ri(6));
}

#[test]
fn values_follow_point_products() {
    let mut rng = rng_from_seed(21);
    let forms = random_form_sampler(21, 10, FormConstraints { disc_nonzero: true, ..Default::default() });
    let mut checked = 0;
    for q in forms.into_iter().map(Arc::new) {
        while checked < 100 {
            let pts: Vec<(Rational, Rational)> = (0..3).map(|_| (random_rational(&mut rng, 20), random_rational(&mut rng, 20))).collect();
            let vals: Vec<ValueElement<Rational>> = match pts.iter().map(|(x, y)| ValueElement::at(&q, x.clone(), y.clone())).collect() {
                Ok(v) => v,
                Err(_) => continue,
            };
            let (x, y) = affine_triple(&q, pts[0].clone(), pts[1].clone(), pts[2].clone()).unwrap();
            let expected = value_triple(&q, &vals[0].alpha, &vals[1].alpha, &vals[2].alpha).unwrap();
            assert_eq!(q.eval(&x, &y), expected, "{q}");
            checked += 1;
            if checked % 10 == 0 {
                break;
            }
        }
    }
    assert_eq!(checked, 100);
}

#[test]
fn parabolic_forms_add() {
    let mut rng = rng_from_seed(5);
    let forms = random_form_sampler(5, 5, FormConstraints { disc_zero: true, det_nonzero: true, ..Default::default() });
    for q in &forms {
        assert!(q.disc().is_zero());
        for _ in 0..20 {
            let [a, b, c] = [(); 3].map(|_| random_rational(&mut rng, 20));
            assert_eq!(value_triple(q, &a, &b, &c).unwrap(), a.clone() - b.clone() + c.clone());
        }
    }
}

#[test]
fn parabolic_values_follow_points() {
    // q is affine along the null direction (t, -s) of λ(sx + ty)², so P − Q + R
    // on such a line carries α − β + γ
    let mut rng = rng_from_seed(9);
    for (lam, s, t, d, e, f) in [(1, 1, 0, 0, -1, 0), (2, 1, 1, 3, -1, 2), (-3, 2, -1, 1, 4, -5), (1, 0, 1, 2, 0, 1)] {
        let q = QuadraticForm::new(ri(lam * s * s), ri(2 * lam * s * t), ri(lam * t * t), ri(d), ri(e), ri(f));
        assert!(q.disc().is_zero() && !q.det3().is_zero(), "{q}");
        for _ in 0..20 {
            let (x0, y0) = (random_rational(&mut rng, 20), random_rational(&mut rng, 20));
            let along = |k: &Rational| (x0.clone() + k.clone() * ri(t), y0.clone() - k.clone() * ri(s));
            let ks = [(); 3].map(|_| random_rational(&mut rng, 20));
            let [a, b, c] = ks.each_ref().map(|k| {
                let (x, y) = along(k);
                q.eval(&x, &y)
            });
            let (x, y) = along(&(ks[0].clone() - ks[1].clone() + ks[2].clone()));
            assert_eq!(value_triple(&q, &a, &b, &c).unwrap(), q.eval(&x, &y), "{q}");
        }
    }
}

#[test]
fn value_group_laws() {
    let q = form("x^2+y^2-1");
    let g = ValueGroup::new(&q, ri(0)).unwrap();
    let mut rng = rng_from_seed(6);
    let draw = |rng: &mut _| loop {
        let v = random_rational(rng, 20);
        if value_in_domain(&q, &v) {
            return v;
        }
    };
    for _ in 0..100 {
        let [p, qq, r, s, t] = [(); 5].map(|_| draw(&mut rng));
        let pqr = g.triple(&p, &qq, &r).unwrap();
        assert!(value_in_domain(&q, &pqr));
        assert_eq!(pqr, g.triple(&r, &qq, &p).unwrap());
        assert_eq!(g.triple(&pqr, &s, &t).unwrap(), g.triple(&p, &qq, &g.triple(&r, &s, &t).unwrap()).unwrap());
        assert_eq!(g.triple(&p, &ri(0), &ri(0)).unwrap(), p);
        let inv = g.inverse_elem(&p).unwrap();
        assert_eq!(g.triple(&p, &ri(0), &inv).unwrap(), ri(0));
        let w = g.transitive_witness(&p, &qq).unwrap();
        assert_eq!(g.symbol_act(&w, &qq).unwrap(), p);
    }
    assert!(matches!(g.triple(&ri(-1), &ri(0), &ri(0)), Err(Error::DomainViolation(_))));
}

#[test]
fn witnesses() {
    let q = form("x^2+y^2");
    let five = ValueElement::resolve(&q, ri(5), 2).unwrap();
    assert_eq!(five.witness, Some((ri(-2), ri(-1))));
    assert_eq!(ValueElement::resolve(&q, ri(3), 20).unwrap().witness, None);
    assert!(matches!(ValueElement::new(&q, ri(3), Some((ri(1), ri(1)))), Err(Error::BadWitness { .. })));
    let p = form("x^2-y");
    assert_eq!(ValueElement::resolve(&p, ri(7), 7).unwrap().witness, Some((ri(-3), ri(2))));
}

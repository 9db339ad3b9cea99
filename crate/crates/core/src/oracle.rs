//! Brute-force verification over odd prime fields plus seeded random
//! sampling over ℚ.
//!
//! The sweeps never compute a triple product themselves; they call the
//! same `Conic`/`ConicGroup` code used everywhere else and only compare.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conic::{Conic, ConicGroup, ConicPoint};
use crate::error::{Error, Result};
use crate::numeric::{PrimeField, PrimeFieldElement, Rational, Scalar};
use crate::quadform::QuadraticForm;
use crate::ternary::{Symbol, TernaryGroup, TernaryStructure};

/// Largest `n³` for which the triple table is built.
pub const TABLE_LIMIT: u64 = 10_000_000;
/// Largest number of quintuples (or triples, for the action law) checked
/// exhaustively; above this the check is sampled.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
pub const SAMPLE_SIZE: usize = 100_000;
pub const SAMPLE_SEED: u64 = 0x7165_6f72;
/// Coefficient bound of the random samplers: `|num|, |den| ≤ 20`.
pub const COEFF_BOUND: i64 = 20;

type Fp = PrimeFieldElement;

/// A nondegenerate conic reduced into `F_p`.
#[derive(Clone, Debug)]
pub struct FiniteConic {
    field: PrimeField,
    source: QuadraticForm<Rational>,
    conic: Conic<Fp>,
}

impl FiniteConic {
    pub fn new(form: &QuadraticForm<Rational>, p: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let conic = Conic::new(form.reduce_mod(&field)?)?;
        Ok(FiniteConic { field, source: form.clone(), conic })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn conic(&self) -> &Conic<Fp> {
        &self.conic
    }

    pub fn source(&self) -> &QuadraticForm<Rational> {
        &self.source
    }

    pub fn point(&self, x: i64, y: i64) -> Result<ConicPoint<Fp>> {
        self.conic.point(self.field.element(x), self.field.element(y))
    }
}

/// Every solution of `q = 0` in `F_p²`, ordered by `(x, y)`. Intended for
/// `p ≤ 10⁴`.
pub fn enumerate_conic_points(c: &FiniteConic) -> Vec<ConicPoint<Fp>> {
    let els: Vec<Fp> = c.field.elements().collect();
    let mut out = Vec::new();
    for x in &els {
        for y in &els {
            if let Ok(p) = c.conic.point(*x, *y) {
                out.push(p);
            }
        }
    }
    out
}

/// Outcome of one law.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub exhaustive: bool,
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    fn new(axiom: &'static str, exhaustive: bool) -> Self {
        AxiomCheck { axiom, passed: true, cases: 0, exhaustive, counterexample: None }
    }

    fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.passed {
            self.passed = false;
            self.counterexample = Some(counterexample());
        }
    }

    fn fail(&mut self, why: String) {
        self.record(false, || why);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub domain: String,
    pub form: String,
    pub base: String,
    pub points: Option<usize>,
    pub symbol_group_order: Option<usize>,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "domain: {}", self.domain);
        let _ = writeln!(s, "form: {}", self.form);
        let _ = writeln!(s, "base: {}", self.base);
        if let Some(n) = self.points {
            let _ = writeln!(s, "points: {n}");
        }
        if let Some(n) = self.symbol_group_order {
            let _ = writeln!(s, "symbol group order: {n}");
        }
        for c in &self.checks {
            let mode = if c.exhaustive { "exhaustive" } else { "sampled" };
            let verdict = if c.passed { "pass" } else { "FAIL" };
            let _ = write!(s, "{:<22} {verdict} ({} cases, {mode})", c.axiom, c.cases);
            if let Some(ce) = &c.counterexample {
                let _ = write!(s, " counterexample: {ce}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "result: {}", if self.passed() { "pass" } else { "FAIL" });
        s
    }
}

const MISSING: u32 = u32::MAX;

struct Table {
    n: usize,
    cells: Vec<u32>,
}

impl Table {
    fn get(&self, i: usize, j: usize, k: usize) -> usize {
        self.cells[(i * self.n + j) * self.n + k] as usize
    }
}

// Fills the table in parallel over the first index; entries whose product
// fails or leaves the point set are MISSING.
fn build_table(conic: &Conic<Fp>, pts: &[ConicPoint<Fp>], index: &HashMap<ConicPoint<Fp>, u32>) -> Table {
    let n = pts.len();
    let mut cells = vec![MISSING; n * n * n];
    let workers = thread::available_parallelism().map_or(1, |w| w.get()).min(n.max(1));
    let rows_per = n.div_ceil(workers).max(1);
    thread::scope(|s| {
        for (chunk_no, chunk) in cells.chunks_mut(rows_per * n * n).enumerate() {
            s.spawn(move || {
                for (off, cell) in chunk.iter_mut().enumerate() {
                    let flat = chunk_no * rows_per * n * n + off;
                    let (i, j, k) = (flat / (n * n), flat / n % n, flat % n);
                    if let Ok(r) = conic.triple(&pts[i], &pts[j], &pts[k]) {
                        if conic.contains(r.x(), r.y()) {
                            *cell = index.get(&r).copied().unwrap_or(MISSING);
                        }
                    }
                }
            });
        }
    });
    Table { n, cells }
}

fn skipped(axiom: &'static str) -> AxiomCheck {
    let mut c = AxiomCheck::new(axiom, true);
    c.fail("not run: closure failed".into());
    c
}

/// Every ternary-group law over all points of `c`, followed by the
/// symbol-group laws and the transitivity of the action.
pub fn exhaustive_axiom_check(c: &FiniteConic, base: &ConicPoint<Fp>) -> Result<AxiomReport> {
    let pts = enumerate_conic_points(c);
    let n = pts.len();
    let cube = (n as u64).pow(3);
    if cube > TABLE_LIMIT {
        return Err(Error::InfeasibleSize { points: n, limit: TABLE_LIMIT });
    }
    let group = c.conic.group(base.clone())?;
    let index: HashMap<ConicPoint<Fp>, u32> = pts.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
    let b = index[base] as usize;
    let table = build_table(&c.conic, &pts, &index);

    let mut report = AxiomReport {
        domain: format!("F_{}", c.field.modulus()),
        form: c.source.to_string(),
        base: base.to_string(),
        points: Some(n),
        symbol_group_order: None,
        checks: Vec::new(),
    };

    let mut closure = AxiomCheck::new("closure", true);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                closure.record(table.get(i, j, k) as u32 != MISSING, || format!("{:?}·{:?}*·{:?}", pts[i], pts[j], pts[k]));
            }
        }
    }
    let closed = closure.passed;
    report.checks.push(closure);
    if !closed {
        for axiom in GROUP_LAWS.iter().skip(1).chain(SYMBOL_LAWS.iter()) {
            report.checks.push(skipped(axiom));
        }
        return Ok(report);
    }

    let mut comm = AxiomCheck::new("commutativity", true);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                comm.record(table.get(i, j, k) == table.get(k, j, i), || format!("P={:?} Q={:?} R={:?}", pts[i], pts[j], pts[k]));
            }
        }
    }
    report.checks.push(comm);

    let quint = (n as u64).pow(5);
    let mut assoc = AxiomCheck::new("associativity", quint <= EXHAUSTIVE_LIMIT);
    let mut assoc_case = |v: [usize; 5]| {
        let [i, j, k, l, m] = v;
        let lhs = table.get(table.get(i, j, k), l, m);
        let rhs = table.get(i, j, table.get(k, l, m));
        assoc.record(lhs == rhs, || format!("{:?}", v.map(|t| &pts[t])));
    };
    if quint <= EXHAUSTIVE_LIMIT {
        for flat in 0..quint as usize {
            assoc_case([flat / n.pow(4), flat / n.pow(3) % n, flat / n.pow(2) % n, flat / n % n, flat % n]);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLE_SIZE {
            assoc_case([(); 5].map(|_| rng.gen_range(0..n)));
        }
    }
    report.checks.push(assoc);

    let mut ident = AxiomCheck::new("identity", true);
    let mut inv = AxiomCheck::new("inverses", true);
    for (i, p) in pts.iter().enumerate() {
        ident.record(table.get(i, b, b) == i, || format!("P={p:?}"));
        match group.inverse_elem(p).map(|r| index.get(&r).copied()) {
            Ok(Some(r)) => inv.record(table.get(i, b, r as usize) == b, || format!("P={p:?}")),
            _ => inv.fail(format!("P={p:?}: no inverse")),
        }
    }
    report.checks.push(ident);
    report.checks.push(inv);

    symbol_checks(&group, &pts, &index, &mut report);
    Ok(report)
}

const GROUP_LAWS: [&str; 5] = ["closure", "commutativity", "associativity", "identity", "inverses"];
const SYMBOL_LAWS: [&str; 6] =
    ["symbol_order", "symbol_abelian", "symbol_inverses", "action_compatible", "transitive_witness", "simply_transitive"];

fn symbol_checks(
    group: &ConicGroup<Fp>,
    pts: &[ConicPoint<Fp>],
    index: &HashMap<ConicPoint<Fp>, u32>,
    report: &mut AxiomReport,
) {
    let n = pts.len();
    let key = |s: &Symbol<ConicPoint<Fp>>| group.symbol_key(s).ok().and_then(|k| index.get(&k).copied());

    // every class has a representative P·Q₀^* whose key is P
    let mut order = AxiomCheck::new("symbol_order", true);
    let mut keys = HashSet::new();
    for p in pts {
        for q in pts {
            match key(&Symbol::new(p.clone(), q.clone())) {
                Some(k) => {
                    keys.insert(k);
                    order.record(true, String::new);
                }
                None => order.fail(format!("{p:?}·{q:?}*: key failed")),
            }
        }
    }
    order.record(keys.len() == n, || format!("{} classes for {n} points", keys.len()));
    report.symbol_group_order = Some(keys.len());
    report.checks.push(order);

    let reps: Vec<Symbol<ConicPoint<Fp>>> = pts.iter().map(|p| Symbol::new(p.clone(), group.base().clone())).collect();
    let mul_key = |g: &Symbol<ConicPoint<Fp>>, h: &Symbol<ConicPoint<Fp>>| group.symbol_mul(g, h).ok().and_then(|s| key(&s));

    let mut abelian = AxiomCheck::new("symbol_abelian", true);
    for g in &reps {
        for h in &reps {
            let (gh, hg) = (mul_key(g, h), mul_key(h, g));
            abelian.record(gh.is_some() && gh == hg, || format!("g={:?} h={:?}", g.left, h.left));
        }
    }
    report.checks.push(abelian);

    let mut inverses = AxiomCheck::new("symbol_inverses", true);
    let unit = key(&group.identity_symbol());
    for g in &reps {
        let prod = group.symbol_inverse(g).ok().and_then(|gi| mul_key(g, &gi));
        inverses.record(prod.is_some() && prod == unit, || format!("g={:?}", g.left));
    }
    report.checks.push(inverses);

    let cube = (n as u64).pow(3);
    let mut compat = AxiomCheck::new("action_compatible", cube <= EXHAUSTIVE_LIMIT);
    let mut compat_case = |g: &Symbol<ConicPoint<Fp>>, h: &Symbol<ConicPoint<Fp>>, c: &ConicPoint<Fp>| {
        let lhs = group.symbol_mul(g, h).and_then(|gh| group.symbol_act(&gh, c));
        let rhs = group.symbol_act(h, c).and_then(|hc| group.symbol_act(g, &hc));
        compat.record(lhs.is_ok() && lhs == rhs, || format!("g={:?} h={:?} C={c:?}", g.left, h.left));
    };
    if cube <= EXHAUSTIVE_LIMIT {
        for g in &reps {
            for h in &reps {
                for c in pts {
                    compat_case(g, h, c);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 1);
        for _ in 0..SAMPLE_SIZE {
            let [g, h, c] = [(); 3].map(|_| rng.gen_range(0..n));
            compat_case(&reps[g], &reps[h], &pts[c]);
        }
    }
    report.checks.push(compat);

    let mut witness = AxiomCheck::new("transitive_witness", true);
    for p in pts {
        for q in pts {
            let moved = group.transitive_witness(p, q).and_then(|g| group.symbol_act(&g, q));
            witness.record(moved.as_ref() == Ok(p), || format!("P={p:?} Q={q:?}"));
        }
    }
    report.checks.push(witness);

    let mut simple = AxiomCheck::new("simply_transitive", true);
    for q in pts {
        let images: HashSet<_> = reps.iter().filter_map(|g| group.symbol_act(g, q).ok()).collect();
        simple.record(images.len() == n, || format!("orbit of {q:?} has {} points", images.len()));
    }
    report.checks.push(simple);
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `|n| ≤ bound` and `1 ≤ d ≤ bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound);
    Rational::frac(n, d)
}

/// A random point of a conic over ℚ: the second intersection of a line
/// through `base` with random rational slope.
pub fn random_conic_point<R: Rng>(conic: &Conic<Rational>, base: &ConicPoint<Rational>, rng: &mut R) -> Result<ConicPoint<Rational>> {
    loop {
        if let Some(p) = conic.line_point(base, &random_rational(rng, COEFF_BOUND))? {
            return Ok(p);
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormConstraints {
    pub disc_nonzero: bool,
    pub det_nonzero: bool,
    /// Produces `λ(s x + t y)² + d x + e y + f`; overrides `disc_nonzero`.
    pub disc_zero: bool,
}

impl FormConstraints {
    pub fn conic() -> Self {
        FormConstraints { disc_nonzero: true, det_nonzero: true, disc_zero: false }
    }

    fn accepts(&self, q: &QuadraticForm<Rational>) -> bool {
        (!self.disc_nonzero || self.disc_zero || !q.disc().is_zero()) && (!self.det_nonzero || !q.det3().is_zero())
    }
}

/// `count` forms with coefficients `n/d`, `|n|, |d| ≤ 20`, drawn from a
/// ChaCha stream seeded by `seed`.
pub fn random_form_sampler(seed: u64, count: usize, constraints: FormConstraints) -> Vec<QuadraticForm<Rational>> {
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = if constraints.disc_zero {
            let lam = Rational::frac(rng.gen_range(1..=2) * if rng.gen() { 1 } else { -1 }, rng.gen_range(1..=COEFF_BOUND));
            let (s, t) = loop {
                let st = (rng.gen_range(-2..=2i64), rng.gen_range(-2..=2i64));
                if st != (0, 0) {
                    break st;
                }
            };
            let [d, e, f] = [(); 3].map(|_| random_rational(&mut rng, COEFF_BOUND));
            let c = |k: i64| lam.clone() * Rational::from(k);
            QuadraticForm::new(c(s * s), c(2 * s * t), c(t * t), d, e, f)
        } else {
            let [a, b, c, d, e, f] = [(); 6].map(|_| random_rational(&mut rng, COEFF_BOUND));
            QuadraticForm::new(a, b, c, d, e, f)
        };
        if constraints.accepts(&q) {
            out.push(q);
        }
    }
    out
}

/// Group laws over ℚ on `cases` random points per law.
pub fn random_axiom_check(conic: &Conic<Rational>, base: &ConicPoint<Rational>, cases: usize, seed: u64) -> Result<AxiomReport> {
    let group = conic.group(base.clone())?;
    let mut rng = rng_from_seed(seed);
    let mut draw = |k: usize| -> Result<Vec<ConicPoint<Rational>>> { (0..k).map(|_| random_conic_point(conic, base, &mut rng)).collect() };
    let mut checks: Vec<AxiomCheck> = GROUP_LAWS.iter().map(|a| AxiomCheck::new(a, false)).collect();
    checks.push(AxiomCheck::new("transitive_witness", false));
    for _ in 0..cases {
        let v = draw(5)?;
        let [p, q, r, s, t] = [&v[0], &v[1], &v[2], &v[3], &v[4]];
        let show = || format!("{:?}", v);
        let pqr = group.triple(p, q, r);
        checks[0].record(pqr.as_ref().is_ok_and(|x| conic.contains(x.x(), x.y())), show);
        checks[1].record(pqr.is_ok() && pqr == group.triple(r, q, p), show);
        let lhs = pqr.clone().and_then(|x| group.triple(&x, s, t));
        let rhs = group.triple(r, s, t).and_then(|x| group.triple(p, q, &x));
        checks[2].record(lhs.is_ok() && lhs == rhs, show);
        checks[3].record(group.triple(p, base, base).as_ref() == Ok(p), show);
        let back = group.inverse_elem(p).and_then(|i| group.triple(p, base, &i));
        checks[4].record(back.as_ref() == Ok(base), show);
        let moved = group.transitive_witness(p, q).and_then(|g| group.symbol_act(&g, q));
        checks[5].record(moved.as_ref() == Ok(p), show);
    }
    Ok(AxiomReport {
        domain: "Q".into(),
        form: conic.form().to_string(),
        base: base.to_string(),
        points: None,
        symbol_group_order: None,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(s: &str) -> QuadraticForm<Rational> {
        s.parse().unwrap()
    }

    #[test]
    fn circle_point_counts() {
        let circle = form("x^2+y^2-1");
        for (p, n) in [(3, 4), (5, 4), (7, 8), (11, 12), (13, 12)] {
            let c = FiniteConic::new(&circle, p).unwrap();
            assert_eq!(enumerate_conic_points(&c).len(), n, "p = {p}");
        }
        let c = FiniteConic::new(&circle, 5).unwrap();
        let pts: Vec<(u64, u64)> = enumerate_conic_points(&c).iter().map(|p| (p.x().value(), p.y().value())).collect();
        assert_eq!(pts, [(0, 1), (0, 4), (1, 0), (4, 0)]);
    }

    #[test]
    fn admits_only_nondegenerate() {
        assert_eq!(FiniteConic::new(&form("x^2+y^2"), 5).unwrap_err(), Error::DegenerateDet);
        assert_eq!(FiniteConic::new(&form("x^2-y"), 5).unwrap_err(), Error::DegenerateDisc);
        // Det = -6 vanishes mod 3
        assert_eq!(FiniteConic::new(&form("x^2-2y^2-3"), 3).unwrap_err(), Error::DegenerateDet);
        assert_eq!(FiniteConic::new(&form("x^2+y^2-1"), 9).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn exhaustive_examples() {
        for (s, p, n) in [("x^2+y^2-1", 5, 4), ("x^2+y^2-1", 7, 8), ("x^2-2y^2-1", 11, 12)] {
            let c = FiniteConic::new(&form(s), p).unwrap();
            let r = exhaustive_axiom_check(&c, &c.point(1, 0).unwrap()).unwrap();
            assert!(r.passed(), "{}", r.to_text());
            assert_eq!(r.symbol_group_order, Some(n));
            assert!(r.check("associativity").unwrap().exhaustive);
        }
    }

    #[test]
    fn sampled_associativity_above_cap() {
        let c = FiniteConic::new(&form("x^2+y^2-1"), 17).unwrap();
        let r = exhaustive_axiom_check(&c, &c.point(1, 0).unwrap()).unwrap();
        let assoc = r.check("associativity").unwrap();
        assert!(r.passed());
        assert!(!assoc.exhaustive);
        assert_eq!(assoc.cases, SAMPLE_SIZE as u64);
        assert!(r.to_text().contains("sampled"));
    }

    #[test]
    fn infeasible_size() {
        let c = FiniteConic::new(&form("x^2+y^2-1"), 223).unwrap();
        assert_eq!(
            exhaustive_axiom_check(&c, &c.point(1, 0).unwrap()).unwrap_err(),
            Error::InfeasibleSize { points: 224, limit: TABLE_LIMIT }
        );
    }

    #[test]
    fn report_formats() {
        let c = FiniteConic::new(&form("x^2+y^2-1"), 3).unwrap();
        let r = exhaustive_axiom_check(&c, &c.point(0, 1).unwrap()).unwrap();
        let text = r.to_text();
        assert!(text.starts_with("domain: F_3\nform: x^2+y^2-1\nbase: 0,1\npoints: 4\nsymbol group order: 4\n"));
        assert!(text.ends_with("result: pass\n"));
        let json = r.to_json();
        assert_eq!(json["checks"][0]["axiom"], "closure");
        assert_eq!(json["checks"][0]["cases"], 64);
        assert_eq!(json["checks"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn failing_check_keeps_first_counterexample() {
        let mut c = AxiomCheck::new("t", true);
        c.record(true, || unreachable!());
        c.record(false, || "first".into());
        c.record(false, || "second".into());
        assert_eq!((c.passed, c.cases, c.counterexample.as_deref()), (false, 3, Some("first")));
    }

    #[test]
    fn sampler_respects_constraints() {
        let qs = random_form_sampler(1, 3, FormConstraints { disc_nonzero: true, ..Default::default() });
        assert_eq!(qs.len(), 3);
        assert!(qs.iter().all(|q| !q.disc().is_zero()));
        assert_eq!(qs, random_form_sampler(1, 3, FormConstraints { disc_nonzero: true, ..Default::default() }));
        assert_ne!(qs, random_form_sampler(2, 3, FormConstraints { disc_nonzero: true, ..Default::default() }));
        for q in random_form_sampler(2, 20, FormConstraints::conic()) {
            assert!(Conic::new(q).is_ok());
        }
        let bound = num_bigint::BigInt::from(COEFF_BOUND);
        for q in random_form_sampler(3, 50, FormConstraints { disc_zero: true, det_nonzero: true, ..Default::default() }) {
            assert!(q.disc().is_zero() && !q.det3().is_zero());
            for c in q.coefficients() {
                assert!(c.numer().magnitude() <= bound.magnitude() && *c.denom() <= bound);
            }
        }
    }

    #[test]
    fn random_rational_checks() {
        let pell = Conic::new(form("x^2-2y^2-1")).unwrap();
        let base = pell.point(Rational::one(), Rational::zero()).unwrap();
        let r = random_axiom_check(&pell, &base, 30, 9).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.checks.len(), 6);
        assert!(r.checks.iter().all(|c| c.cases == 30 && !c.exhaustive));
    }
}

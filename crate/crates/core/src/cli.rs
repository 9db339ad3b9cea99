//! The `qform` command line. Each subcommand parses its inputs, calls one
//! library operation, and renders the result as text or, with `--json`, as
//! the objects described by `docs/cli-output.schema.json`.
//!
//! Exit codes: 0 success, 1 mathematical error or failed check, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use crate::compose::{compose2, compose3, diagonal_eval, normalize_projective, proj_compose3, HomogeneousForm};
use crate::conic::{Conic, ConicPoint};
use crate::error::Error;
use crate::numeric::{Rational, Scalar};
use crate::oracle::{enumerate_conic_points, exhaustive_axiom_check, random_axiom_check, FiniteConic};
use crate::quadform::QuadraticForm;
use crate::ternary::{TernaryGroup, TernaryStructure};
use crate::values::{value_triple, value_witness_search};

pub const SEED_ENV: &str = "QFORM_SEED";
pub const DEFAULT_SEED: u64 = 1;
const DEFAULT_BOUND: u64 = 10;

#[derive(Parser, Debug)]
#[command(name = "qform", version, about = "Exact arithmetic on binary quadratic forms and their conics")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Disc, Det, center and m of a form.
    Info {
        #[arg(long)]
        form: String,
    },
    /// (u, v) with q(P1) q(P2) = u^2 + b u v + a c v^2.
    Compose2 {
        #[arg(long, allow_hyphen_values = true)]
        abc: String,
        #[arg(long = "p", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// (x, y) with q(P1) q(P2) q(P3) = q(x, y).
    Compose3 {
        #[arg(long, allow_hyphen_values = true)]
        abc: String,
        #[arg(long = "p", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Fourth point on a x^2 + b y^2 + c z^2 = 0.
    Proj3 {
        #[arg(long, allow_hyphen_values = true)]
        abc: String,
        #[arg(long = "p", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// Group operations on the conic q(x, y) = 0.
    #[command(subcommand)]
    Conic(ConicCmd),
    /// Operations on the value set of a form.
    #[command(subcommand)]
    Value(ValueCmd),
    /// Check the group laws exhaustively over F_p or on random points over Q.
    #[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
    Verify {
        #[arg(long)]
        form: String,
        #[arg(long = "mod", requires = "exhaustive")]
        modulus: Option<u64>,
        #[arg(long, requires = "modulus")]
        exhaustive: bool,
        /// Number of random cases per law.
        #[arg(long, conflicts_with = "modulus")]
        random: Option<usize>,
        /// Defaults to $QFORM_SEED, then 1.
        #[arg(long, requires = "random")]
        seed: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
        /// Height bound of the base point search.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ConicCmd {
    /// P · Q^* · R.
    Mul {
        #[command(flatten)]
        conic: ConicArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// The R with P · base^* · R = base.
    Inverse {
        #[command(flatten)]
        conic: ConicArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// The first point of bounded height.
    FindPoint {
        #[command(flatten)]
        conic: ConicArgs,
    },
    /// A symbol g with g · Q = P.
    Witness {
        #[command(flatten)]
        conic: ConicArgs,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(clap::Args, Debug)]
struct ConicArgs {
    #[arg(long)]
    form: String,
    /// Base point; searched for when omitted.
    #[arg(long, allow_hyphen_values = true)]
    base: Option<String>,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: u64,
}

#[derive(Subcommand, Debug)]
enum ValueCmd {
    /// alpha · beta^* · gamma.
    Mul {
        #[arg(long)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Also search a witness of the result up to this height.
        #[arg(long)]
        bound: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Degree { .. } => Failure::Usage(e.to_string()),
            other => Failure::Math(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(String, Value), Failure>;

/// Runs the command line with `QFORM_SEED` taken from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_seed(args, std::env::var(SEED_ENV).ok(), out, err)
}

/// As [`run`], with the environment seed passed explicitly.
pub fn run_with_seed<I, T>(args: I, env_seed: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.cmd, env_seed) {
        Ok((text, value)) => {
            let failed = value.get("passed") == Some(&Value::Bool(false));
            let body = if cli.json { serde_json::to_string_pretty(&value).expect("json") + "\n" } else { text };
            let _ = out.write_all(body.as_bytes());
            i32::from(failed)
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}\n\nFor more information, try 'qform --help'.");
            2
        }
        Err(Failure::Math(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn dispatch(cmd: Cmd, env_seed: Option<String>) -> Outcome {
    match cmd {
        Cmd::Info { form } => info(&parse_form(&form)?),
        Cmd::Compose2 { abc, points } => {
            let (f, pts) = homogeneous_input::<2>(&abc, &points, 2)?;
            let (p1, p2) = (&pts[0], &pts[1]);
            let (u, v) = compose2(&f, (&p1[0], &p1[1]), (&p2[0], &p2[1]));
            let product = f.eval(&p1[0], &p1[1]) * f.eval(&p2[0], &p2[1]);
            let value = f.eval_norm(&u, &v);
            identity_holds(&product, &value)?;
            let text = format!("u={u} v={v} value={value}\n");
            let j = json!({ "command": "compose2", "abc": abc_json(&f), "points": nested(&pts),
                            "u": u.to_string(), "v": v.to_string(), "product": product.to_string(),
                            "value": value.to_string(), "identity": true });
            Ok((text, j))
        }
        Cmd::Compose3 { abc, points } => {
            let (f, pts) = homogeneous_input::<2>(&abc, &points, 3)?;
            let (p1, p2, p3) = (&pts[0], &pts[1], &pts[2]);
            let (x, y) = compose3(&f, (&p1[0], &p1[1]), (&p2[0], &p2[1]), (&p3[0], &p3[1]));
            let product = pts.iter().fold(Rational::one(), |acc, p| acc * f.eval(&p[0], &p[1]));
            let value = f.eval(&x, &y);
            identity_holds(&product, &value)?;
            let text = format!("x={x} y={y} value={value}\n");
            let j = json!({ "command": "compose3", "abc": abc_json(&f), "points": nested(&pts),
                            "x": x.to_string(), "y": y.to_string(), "product": product.to_string(),
                            "value": value.to_string(), "identity": true });
            Ok((text, j))
        }
        Cmd::Proj3 { abc, points } => {
            let (f, pts) = homogeneous_input::<3>(&abc, &points, 3)?;
            let refs: Vec<[&Rational; 3]> = pts.iter().map(|p| [&p[0], &p[1], &p[2]]).collect();
            let out = proj_compose3(&f.a, &f.b, &f.c, [refs[0], refs[1], refs[2]])?;
            let on = diagonal_eval([&f.a, &f.b, &f.c], [&out[0], &out[1], &out[2]]).is_zero();
            if !on {
                return Err(Failure::Math("fourth point is off the variety".into()));
            }
            let norm = normalize_projective(&out).ok();
            let norm_text = norm.as_ref().map_or("none".to_string(), |n| join(n, ":"));
            let text = format!("x={} y={} z={} normalized={norm_text}\n", out[0], out[1], out[2]);
            let j = json!({ "command": "proj3", "abc": abc_json(&f), "points": nested(&pts),
                            "point": strings(&out),
                            "normalized": norm.map(|n| strings(&n)), "on_variety": on });
            Ok((text, j))
        }
        Cmd::Conic(c) => conic_cmd(c),
        Cmd::Value(ValueCmd::Mul { form, alpha, beta, gamma, bound }) => {
            let q = parse_form(&form)?;
            let [a, b, g] = [&alpha, &beta, &gamma].map(|s| parse_rational(s));
            let (a, b, g) = (a?, b?, g?);
            let v = value_triple(&q, &a, &b, &g)?;
            let witness = bound.map(|n| value_witness_search(&q, &v, n).ok());
            let mut text = v.to_string();
            if let Some(w) = &witness {
                text += &format!(" witness={}", w.as_ref().map_or("none".into(), |(x, y)| format!("{x},{y}")));
            }
            text.push('\n');
            let j = json!({ "command": "value mul", "form": q.to_string(), "alpha": a.to_string(),
                            "beta": b.to_string(), "gamma": g.to_string(), "value": v.to_string(),
                            "witness": witness.flatten().map(|(x, y)| [x.to_string(), y.to_string()]) });
            Ok((text, j))
        }
        Cmd::Verify { form, modulus, random, seed, base, bound, .. } => {
            let q = parse_form(&form)?;
            let report = if let Some(p) = modulus {
                let fc = FiniteConic::new(&q, p)?;
                let base = match base {
                    Some(s) => {
                        let [x, y] = parse_list::<2>(&s)?;
                        let field = fc.field();
                        fc.conic().point(field.from_rational(&x)?, field.from_rational(&y)?)?
                    }
                    None => enumerate_conic_points(&fc).into_iter().next().ok_or(Error::NotFound(p))?,
                };
                exhaustive_axiom_check(&fc, &base)?
            } else {
                let seed = match (seed, env_seed) {
                    (Some(s), _) => s,
                    (None, Some(e)) => e.trim().parse().map_err(|_| Failure::Usage(format!("{SEED_ENV} must be an integer, got {e:?}")))?,
                    (None, None) => DEFAULT_SEED,
                };
                let conic = Conic::new(q)?;
                let base = base_point(&conic, base.as_deref(), bound)?;
                random_axiom_check(&conic, &base, random.unwrap_or(0), seed)?
            };
            let j = json!({ "command": "verify", "passed": report.passed(), "report": report.to_json() });
            Ok((report.to_text(), j))
        }
    }
}

fn conic_cmd(c: ConicCmd) -> Outcome {
    let point_json = |p: &ConicPoint<Rational>| json!([p.x().to_string(), p.y().to_string()]);
    match c {
        ConicCmd::Mul { conic, p, q, r } => {
            let (k, base) = (open_conic(&conic.form)?, conic.base);
            if let Some(b) = base {
                parse_point(&k, &b)?;
            }
            let [p, q, r] = [&p, &q, &r].map(|s| parse_point(&k, s));
            let out = k.triple(&p?, &q?, &r?)?;
            let j = json!({ "command": "conic mul", "form": k.form().to_string(), "point": point_json(&out) });
            Ok((format!("{out}\n"), j))
        }
        ConicCmd::Inverse { conic, p } => {
            let k = open_conic(&conic.form)?;
            let base = base_point(&k, conic.base.as_deref(), conic.bound)?;
            let out = k.inverse_point(&parse_point(&k, &p)?, &base)?;
            let j = json!({ "command": "conic inverse", "form": k.form().to_string(),
                            "base": point_json(&base), "point": point_json(&out) });
            Ok((format!("{out}\n"), j))
        }
        ConicCmd::FindPoint { conic } => {
            let k = open_conic(&conic.form)?;
            let out = k.find_point(conic.bound)?;
            let j = json!({ "command": "conic find-point", "form": k.form().to_string(), "point": point_json(&out) });
            Ok((format!("{out}\n"), j))
        }
        ConicCmd::Witness { conic, p, q } => {
            let k = open_conic(&conic.form)?;
            let base = base_point(&k, conic.base.as_deref(), conic.bound)?;
            let (p, q) = (parse_point(&k, &p)?, parse_point(&k, &q)?);
            let group = k.group(base.clone())?;
            let g = group.transitive_witness(&p, &q)?;
            let image = group.symbol_act(&g, &q)?;
            if image != p {
                return Err(Failure::Math(format!("witness moves {q} to {image}, not {p}")));
            }
            let text = format!("left={} right={} image={image}\n", g.left, g.right);
            let j = json!({ "command": "conic witness", "form": k.form().to_string(), "base": point_json(&base),
                            "left": point_json(&g.left), "right": point_json(&g.right), "image": point_json(&image) });
            Ok((text, j))
        }
    }
}

fn info(q: &QuadraticForm<Rational>) -> Outcome {
    let inv = q.invariants();
    let center = inv.h.as_ref().zip(inv.k.as_ref());
    let center_text = center.map_or("none".into(), |(h, k)| format!("({h},{k})"));
    let m_text = inv.m.as_ref().map_or("none".into(), |m| m.to_string());
    let text = format!("disc={}, det={}, center={center_text}, m={m_text}\n", inv.disc, inv.det3);
    let j = json!({ "command": "info", "form": q.to_string(), "disc": inv.disc.to_string(), "det": inv.det3.to_string(),
                    "center": center.map(|(h, k)| [h.to_string(), k.to_string()]),
                    "m": inv.m.as_ref().map(|m| m.to_string()) });
    Ok((text, j))
}

fn identity_holds(lhs: &Rational, rhs: &Rational) -> Result<(), Failure> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure::Math(format!("identity check failed: {lhs} != {rhs}")))
    }
}

fn parse_form(s: &str) -> Result<QuadraticForm<Rational>, Failure> {
    Ok(QuadraticForm::from_str(s)?)
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    Ok(Rational::from_str(s.trim())?)
}

fn open_conic(s: &str) -> Result<Conic<Rational>, Failure> {
    Ok(Conic::from_ref(Arc::new(parse_form(s)?))?)
}

fn parse_point(k: &Conic<Rational>, s: &str) -> Result<ConicPoint<Rational>, Failure> {
    let [x, y] = parse_list::<2>(s)?;
    Ok(k.point(x, y)?)
}

fn base_point(k: &Conic<Rational>, base: Option<&str>, bound: u64) -> Result<ConicPoint<Rational>, Failure> {
    match base {
        Some(s) => parse_point(k, s),
        None => Ok(k.find_point(bound)?),
    }
}

/// Exactly `N` comma-separated rationals.
fn parse_list<const N: usize>(s: &str) -> Result<[Rational; N], Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(Failure::Usage(format!("expected {N} comma-separated numbers, got {s:?}")));
    }
    let mut out = Vec::with_capacity(N);
    for part in parts {
        out.push(parse_rational(part).map_err(|_| Failure::Usage(format!("bad number {part:?} in {s:?}")))?);
    }
    Ok(out.try_into().expect("length checked"))
}

fn homogeneous_input<const N: usize>(
    abc: &str,
    points: &[String],
    count: usize,
) -> Result<(HomogeneousForm<Rational>, Vec<[Rational; N]>), Failure> {
    let [a, b, c] = parse_list::<3>(abc)?;
    if points.len() != count {
        return Err(Failure::Usage(format!("expected {count} --p points, got {}", points.len())));
    }
    let pts = points.iter().map(|p| parse_list::<N>(p)).collect::<Result<Vec<_>, _>>()?;
    Ok((HomogeneousForm::new(a, b, c), pts))
}

fn abc_json(f: &HomogeneousForm<Rational>) -> Value {
    json!([f.a.to_string(), f.b.to_string(), f.c.to_string()])
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn nested<const N: usize>(pts: &[[Rational; N]]) -> Vec<Vec<String>> {
    pts.iter().map(|p| strings(p)).collect()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    strings(xs).join(sep)
}

//! Subcommand dispatch for the `gwa` binary.

use gwa::autgroup::aut_descriptor;
use gwa::canonical::{canonicalize, presentation_fraction_field, CanonicalClass};
use gwa::iso::{
    build_and_verify_morphism, invert_sigma_transform, iso_classical, iso_laurent, iso_quantum,
    root_condition_oracle,
};
use gwa::morita::{is_simple, morita_necessary, MoritaVerdict, MoritaWitness};
use gwa::smith::{lebruyn_to_smith, smith_iso, witten_to_smith, SmithPresentation, WittenParams};
use gwa::{
    BaseRing, CanonicalVariant, FieldMode, GwaPresentation, IsoWitness, Rational, Scalar, Sign,
};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::expr::parse_element_expr;
use crate::report::{CheckRow, Report};
use crate::spec::{parse_algebra_spec, parse_roots, AlgebraSpec};

pub const USAGE: &str = "\
usage: gwa [--json] COMMAND ARGS...

commands:
  canon SPEC
  iso SPEC1 SPEC2 [--mode=rationals|closure]
  aut SPEC
  mul SPEC EXPR1 EXPR2
  normal SPEC EXPR
  simple SPEC
  morita SPEC1 SPEC2
  smith-iso SPEC1 SPEC2 [--mode=rationals|closure]
  oracle ROOTS1 ROOTS2

SPEC examples: 'gwa q=2 a=\"h^2+h+1\"', 'gwa q=1 h0=1 a=\"h^2-h\"',
  'lgwa q=2 a=\"h^-1 + h\"', 'smith q=2 f=\"h^2+h\"', 'witten 2,1,2,1,1,3,4',
  'lebruyn alpha=2 beta=3'
ROOTS example: '0,1,3'

exit codes: 0 decided, 2 usage error, 3 unsupported input, 4 parse error
";

struct Options {
    json: bool,
    mode: FieldMode,
    help: bool,
    positional: Vec<String>,
}

fn parse_options<S: AsRef<str>>(argv: &[S]) -> Result<Options, CliError> {
    let mut o = Options {
        json: false,
        mode: FieldMode::OverClosure,
        help: false,
        positional: Vec::new(),
    };
    for arg in argv.iter().map(AsRef::as_ref) {
        match arg {
            "--json" => o.json = true,
            "--help" | "-h" => o.help = true,
            "--mode=rationals" => o.mode = FieldMode::OverRationals,
            "--mode=closure" => o.mode = FieldMode::OverClosure,
            a if a.starts_with("--") => {
                return Err(CliError::Usage(format!("unknown option {a}")));
            }
            a => o.positional.push(a.to_string()),
        }
    }
    Ok(o)
}

/// Runs one command line (without the program name), returning the exit
/// code and the text to print.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let opts = match parse_options(argv) {
        Ok(o) => o,
        Err(e) if argv.iter().any(|a| a.as_ref() == "--json") => {
            let report = Report::new("", Vec::new(), "error").with_reason(e.to_string());
            return (e.exit_code(), format!("{}\n", report.to_json()));
        }
        Err(e) => return (e.exit_code(), format!("error: {e}\n\n{USAGE}")),
    };
    if opts.help {
        return (0, USAGE.to_string());
    }
    let command = opts.positional.first().cloned().unwrap_or_default();
    let args = opts.positional.get(1..).unwrap_or_default().to_vec();
    match dispatch(&command, &args, opts.mode) {
        Ok(report) if opts.json => (0, format!("{}\n", report.to_json())),
        Ok(report) => (0, report.to_text()),
        Err(e) if opts.json => {
            let report = Report::new(&command, args, "error").with_reason(e.to_string());
            (e.exit_code(), format!("{}\n", report.to_json()))
        }
        Err(e @ CliError::Usage(_)) => (e.exit_code(), format!("error: {e}\n\n{USAGE}")),
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}

fn arity(command: &str, args: &[String], n: usize) -> Result<(), CliError> {
    if args.len() != n {
        return Err(CliError::Usage(format!(
            "{command} takes {n} argument(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

fn dispatch(command: &str, args: &[String], mode: FieldMode) -> Result<Report, CliError> {
    let expected = match command {
        "canon" | "aut" | "simple" => 1,
        "iso" | "normal" | "morita" | "smith-iso" | "oracle" => 2,
        "mul" => 3,
        "" => return Err(CliError::Usage("missing command".into())),
        other => return Err(CliError::Usage(format!("unknown command {other}"))),
    };
    arity(command, args, expected)?;
    if command == "oracle" {
        return oracle(&args[0], &args[1]);
    }
    let first = parse_algebra_spec(&args[0])?;
    match command {
        "canon" => canon(&first),
        "aut" => aut(&first),
        "simple" => simple(&first),
        "mul" => mul(&first, &args[1], &args[2]),
        "normal" => normal(&first, &args[1]),
        _ => {
            let second = parse_algebra_spec(&args[1])?;
            match command {
                "iso" => iso(&first, &second, mode),
                "morita" => morita(&first, &second),
                _ => smith_iso_cmd(&first, &second, mode),
            }
        }
    }
}

fn rat(r: &Rational) -> Value {
    json!(r.to_string())
}

fn scalar(s: &Scalar) -> Value {
    json!(s.to_string())
}

fn presentation(spec: &AlgebraSpec) -> Result<GwaPresentation, CliError> {
    Ok(match spec {
        AlgebraSpec::Gwa { q, h0, a } => GwaPresentation::new(q.clone(), h0.clone(), a.clone())?,
        AlgebraSpec::Lgwa { q, a } => GwaPresentation::laurent(q.clone(), a.clone())?,
        other => {
            return Err(CliError::Usage(format!(
                "{} specifies a Smith algebra, not a GWA presentation",
                other.kind()
            )))
        }
    })
}

fn class_of(spec: &AlgebraSpec) -> Result<Option<CanonicalClass>, CliError> {
    match spec {
        AlgebraSpec::Gwa { q, h0, a } => Ok(Some(canonicalize(q, h0, a)?)),
        _ => Ok(None),
    }
}

fn canon(spec: &AlgebraSpec) -> Result<Report, CliError> {
    let inputs = vec![spec.to_string()];
    let mut w = Map::new();
    let verdict = match spec {
        AlgebraSpec::Gwa { a, .. } => {
            let class = class_of(spec)?.expect("gwa");
            let pres = class.presentation(a)?;
            w.insert("a".into(), json!(class.canonical_a(a).to_string()));
            w.insert("q".into(), rat(pres.q()));
            w.insert("h0".into(), rat(pres.h0()));
            w.insert("scale".into(), rat(&class.change_of_variable.scale));
            w.insert("shift".into(), rat(&class.change_of_variable.shift));
            insert_fraction_field(&mut w, &pres)?;
            class.kind().to_string()
        }
        AlgebraSpec::Lgwa { a, q } => {
            let pres = presentation(spec)?;
            w.insert("a".into(), json!(a.to_string()));
            w.insert("q".into(), rat(q));
            insert_fraction_field(&mut w, &pres)?;
            "laurent".to_string()
        }
        AlgebraSpec::Smith { q, f } => {
            let s = SmithPresentation::new(q.clone(), f.clone())?;
            w.insert("q".into(), rat(s.q()));
            w.insert("f".into(), json!(s.f().to_string()));
            w.insert("a".into(), json!(s.a().to_string()));
            "smith".to_string()
        }
        AlgebraSpec::Witten(_) | AlgebraSpec::LeBruyn { .. } => {
            let r = match spec {
                AlgebraSpec::Witten(eps) => witten_to_smith(&WittenParams::new((**eps).clone()))?,
                AlgebraSpec::LeBruyn { alpha, beta } => lebruyn_to_smith(alpha, beta)?,
                _ => unreachable!(),
            };
            w.insert("q".into(), rat(r.smith.q()));
            w.insert("a_original".into(), json!(r.a_original.to_string()));
            w.insert("a".into(), json!(r.smith.a().to_string()));
            w.insert("f".into(), json!(r.smith.f().to_string()));
            w.insert("closed_form".into(), json!(r.closed_form.to_string()));
            w.insert("closed_form_agrees".into(), json!(r.agrees()));
            "smith".to_string()
        }
    };
    Ok(Report::new("canon", inputs, verdict).with_witness(w))
}

fn insert_fraction_field(w: &mut Map<String, Value>, p: &GwaPresentation) -> Result<(), CliError> {
    let ff = presentation_fraction_field(p)?;
    w.insert("fraction_field".into(), json!(ff.field.to_string()));
    w.insert("E".into(), json!(ff.e.to_string()));
    w.insert("G".into(), json!(ff.g.to_string()));
    Ok(())
}

fn iso_witness_json(w: &IsoWitness) -> Map<String, Value> {
    let mut m = Map::new();
    let sign = |s: &Sign| json!(s.value());
    match w {
        IsoWitness::ClassicalShift {
            rho,
            epsilon,
            alpha,
        } => {
            m.insert("rho".into(), rat(rho));
            m.insert("epsilon".into(), sign(epsilon));
            m.insert("alpha".into(), rat(alpha));
        }
        IsoWitness::QuantumScale { rho, alpha } => {
            m.insert("rho".into(), scalar(rho));
            m.insert("alpha".into(), scalar(alpha));
        }
        IsoWitness::LaurentScale {
            rho,
            alpha,
            m: shift,
            epsilon,
        } => {
            m.insert("rho".into(), scalar(rho));
            m.insert("alpha".into(), scalar(alpha));
            m.insert("m".into(), json!(shift));
            m.insert("epsilon".into(), sign(epsilon));
        }
        IsoWitness::MonomialDegree { n } => {
            m.insert("degree".into(), json!(n));
        }
    }
    m
}

/// Brings `p2` to parameter `q` via the `x <-> y` swap when its parameter is `1/q`.
fn align_q(q: &Rational, p2: GwaPresentation) -> Result<Option<(GwaPresentation, bool)>, CliError> {
    if p2.q() == q {
        return Ok(Some((p2, false)));
    }
    if *p2.q() == q.recip() {
        let (t, _) = invert_sigma_transform(&p2)?;
        return Ok(Some((t, true)));
    }
    Ok(None)
}

fn iso(s1: &AlgebraSpec, s2: &AlgebraSpec, mode: FieldMode) -> Result<Report, CliError> {
    let inputs = vec![s1.to_string(), s2.to_string()];
    let (p1, p2) = (presentation(s1)?, presentation(s2)?);
    if p1.base() != p2.base() {
        return Err(
            gwa::Error::Unsupported("presentations over different base rings".into()).into(),
        );
    }
    let not_iso = |reason: String| {
        Ok(Report::new("iso", inputs.clone(), "not isomorphic").with_reason(reason))
    };

    // canonical presentations (source, target) and the decision
    let (source, target, swapped, witness) = if p1.base() == BaseRing::Laurent {
        let Some((t, swapped)) = align_q(p1.q(), p2)? else {
            return not_iso(format!(
                "q1 = {} and q2 = {} are not inverse or equal",
                p1.q(),
                s2_q(s2)
            ));
        };
        let w = iso_laurent(p1.a(), t.a(), p1.q(), mode)?;
        (p1, t, swapped, w)
    } else {
        let (c1, c2) = (class_of(s1)?.expect("gwa"), class_of(s2)?.expect("gwa"));
        let (a1, a2) = (p1.a_poly().expect("k[h]"), p2.a_poly().expect("k[h]"));
        let (k1, k2) = (c1.presentation(&a1)?, c2.presentation(&a2)?);
        match (&c1.variant, &c2.variant) {
            (CanonicalVariant::Commutative, _) | (_, CanonicalVariant::Commutative) => {
                return Err(gwa::Error::Unsupported(
                    "commutative presentation (q = 1, h0 = 0)".into(),
                )
                .into());
            }
            (CanonicalVariant::Classical { a: b1 }, CanonicalVariant::Classical { a: b2 }) => {
                let w = iso_classical(b1, b2)?;
                (k1, k2, false, w)
            }
            (CanonicalVariant::Quantum { q, a: b1 }, CanonicalVariant::Quantum { .. }) => {
                let Some((t, swapped)) = align_q(q, k2)? else {
                    return not_iso(format!(
                        "q1 = {} and q2 = {} are not inverse or equal",
                        p1.q(),
                        p2.q()
                    ));
                };
                let w = iso_quantum(q, b1, &t.a_poly().expect("k[h]"), mode)?;
                (k1, t, swapped, w)
            }
            _ => {
                return not_iso(format!(
                    "canonical classes differ: {} vs {}",
                    c1.kind(),
                    c2.kind()
                ))
            }
        }
    };
    let Some(w) = witness else {
        return not_iso("no parameters satisfy the isomorphism criterion".into());
    };
    let mut wj = iso_witness_json(&w);
    if swapped {
        wj.insert("swap_x_y".into(), json!(true));
    }
    let mut report = Report::new("iso", inputs, "isomorphic").with_witness(wj);
    if w.is_rational() {
        let (_, ok) = build_and_verify_morphism(&w, &source, &target)?;
        report = report.with_checks(vec![CheckRow {
            name: "defining-relations".into(),
            passed: ok,
            detail: "generator images satisfy the four relations".into(),
        }]);
    }
    Ok(report)
}

fn s2_q(s: &AlgebraSpec) -> String {
    match s {
        AlgebraSpec::Gwa { q, .. } | AlgebraSpec::Lgwa { q, .. } => q.to_string(),
        _ => String::new(),
    }
}

fn aut(spec: &AlgebraSpec) -> Result<Report, CliError> {
    let unsupported = || {
        CliError::from(gwa::Error::Unsupported(
            "automorphism groups are computed for quantum GWAs over k[h] with q not a root of unity".into(),
        ))
    };
    let class = class_of(spec)?.ok_or_else(unsupported)?;
    let CanonicalVariant::Quantum { q, a } = &class.variant else {
        return Err(unsupported());
    };
    if !GwaPresentation::quantum(q.clone(), a.clone())?.has_generic_q() {
        return Err(unsupported());
    }
    let d = aut_descriptor(a)?;
    let mut w = Map::new();
    w.insert("p".into(), json!(d.p));
    w.insert("i0".into(), json!(d.i0));
    w.insert("structure".into(), json!(d.structure.to_string()));
    Ok(Report::new("aut", vec![spec.to_string()], d.structure.to_string()).with_witness(w))
}

fn simple(spec: &AlgebraSpec) -> Result<Report, CliError> {
    let p = presentation(spec)?;
    let (ok, cert) = is_simple(&p)?;
    let verdict = if ok { "simple" } else { "not simple" };
    Ok(Report::new("simple", vec![spec.to_string()], verdict).with_reason(cert.to_string()))
}

fn mul(spec: &AlgebraSpec, e1: &str, e2: &str) -> Result<Report, CliError> {
    let p = presentation(spec)?;
    let (u, v) = (parse_element_expr(e1, &p)?, parse_element_expr(e2, &p)?);
    let product = p.multiply(&u, &v);
    let mut w = Map::new();
    w.insert("left".into(), json!(u.to_string()));
    w.insert("right".into(), json!(v.to_string()));
    let inputs = vec![spec.to_string(), e1.to_string(), e2.to_string()];
    Ok(Report::new("mul", inputs, product.to_string()).with_witness(w))
}

fn normal(spec: &AlgebraSpec, e: &str) -> Result<Report, CliError> {
    let p = presentation(spec)?;
    let u = parse_element_expr(e, &p)?;
    let v = p.normality_witness(&u)?;
    let inputs = vec![spec.to_string(), e.to_string()];
    if !v.normal {
        let reason = v.refutation.map(|r| r.to_string()).unwrap_or_default();
        return Ok(Report::new("normal", inputs, "not normal").with_reason(reason));
    }
    let c = v.conjugators.expect("normal elements carry conjugators");
    let mut w = Map::new();
    w.insert("element".into(), json!(u.to_string()));
    w.insert("conjugate_h".into(), json!(c.h.to_string()));
    w.insert("conjugate_x".into(), json!(c.x.to_string()));
    w.insert("conjugate_y".into(), json!(c.y.to_string()));
    Ok(Report::new("normal", inputs, "normal").with_witness(w))
}

fn morita(s1: &AlgebraSpec, s2: &AlgebraSpec) -> Result<Report, CliError> {
    let r = morita_necessary(&presentation(s1)?, &presentation(s2)?)?;
    let checks = r
        .checks
        .iter()
        .map(|c| CheckRow {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail.clone(),
        })
        .collect();
    let inputs = vec![s1.to_string(), s2.to_string()];
    let report = match &r.verdict {
        MoritaVerdict::NotEquivalent(why) => {
            Report::new("morita", inputs, "NotEquivalent").with_reason(*why)
        }
        MoritaVerdict::NecessaryConditionsPass => {
            Report::new("morita", inputs, "NecessaryConditionsPass")
        }
        MoritaVerdict::SufficientConditionMet(w) => {
            let mut m = Map::new();
            match w {
                MoritaWitness::Hodges(h) => {
                    m.insert("epsilon".into(), json!(h.epsilon));
                    let m_value =
                        h.m.to_i64()
                            .map_or_else(|| json!(h.m.to_string()), |v| json!(v));
                    m.insert("m".into(), m_value);
                }
                MoritaWitness::Roots(rw) => {
                    m.insert("tau".into(), json!(rw.tau));
                    m.insert("m".into(), json!(rw.m));
                }
            }
            Report::new("morita", inputs, "SufficientConditionMet").with_witness(m)
        }
    };
    Ok(report.with_checks(checks))
}

fn smith_of(spec: &AlgebraSpec) -> Result<SmithPresentation, CliError> {
    Ok(match spec {
        AlgebraSpec::Smith { q, f } => SmithPresentation::new(q.clone(), f.clone())?,
        AlgebraSpec::Witten(eps) => witten_to_smith(&WittenParams::new((**eps).clone()))?.smith,
        AlgebraSpec::LeBruyn { alpha, beta } => lebruyn_to_smith(alpha, beta)?.smith,
        other => {
            return Err(CliError::Usage(format!(
                "{} is not a Smith algebra specification",
                other.kind()
            )))
        }
    })
}

fn smith_iso_cmd(s1: &AlgebraSpec, s2: &AlgebraSpec, mode: FieldMode) -> Result<Report, CliError> {
    let (r1, r2) = (smith_of(s1)?, smith_of(s2)?);
    let inputs = vec![s1.to_string(), s2.to_string()];
    if r1.q() != r2.q() {
        return Ok(
            Report::new("smith-iso", inputs, "not isomorphic").with_reason(format!(
                "q differs: {} vs {}",
                r1.q(),
                r2.q()
            )),
        );
    }
    Ok(match smith_iso(&r1, &r2, mode)? {
        Some(w) => {
            let mut m = Map::new();
            m.insert("rho".into(), scalar(&w.rho));
            m.insert("beta".into(), scalar(&w.beta));
            m.insert("alpha".into(), rat(&w.alpha));
            Report::new("smith-iso", inputs, "isomorphic").with_witness(m)
        }
        None => Report::new("smith-iso", inputs, "not isomorphic")
            .with_reason("no parameters satisfy a1(h) = rho a2(beta h) + alpha"),
    })
}

fn oracle(r1: &str, r2: &str) -> Result<Report, CliError> {
    let (a, b) = (parse_roots(r1)?, parse_roots(r2)?);
    let show = |v: &[Rational]| {
        v.iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let ok = root_condition_oracle(&a, &b)?;
    let verdict = if ok { "isomorphic" } else { "not isomorphic" };
    Ok(Report::new("oracle", vec![show(&a), show(&b)], verdict))
}

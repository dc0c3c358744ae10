use std::fmt::Write as _;
use std::io::Read;

use newton_zeta::germ::GermSeries;
use newton_zeta::lattice::Point;
use newton_zeta::newton::{nondegeneracy_check, zeta_full_trace, NondegeneracyReport, Verdict, ZetaTrace};
use newton_zeta::report;

use crate::input::{load_germ, read_source};
use crate::{CliError, Format, GermArgs, Outcome, EXIT_COUNTEREXAMPLE, EXIT_OK};

fn germ_from(args: &GermArgs, stdin: &mut dyn Read) -> Result<GermSeries, CliError> {
    let text = read_source(args.germ.as_deref(), args.germ_file.as_deref(), stdin)?;
    load_germ(&text, args.vars.as_deref())
}

fn checked_trace(germ: &GermSeries) -> Result<ZetaTrace, CliError> {
    let trace = zeta_full_trace(germ)?;
    if !report::trace_is_consistent(&trace) {
        return Err(CliError::Internal("zeta trace bookkeeping is inconsistent".into()));
    }
    Ok(trace)
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn fmt_point(p: &Point) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn fmt_points(ps: &[Point]) -> String {
    if ps.is_empty() {
        return "none".into();
    }
    ps.iter().map(fmt_point).collect::<Vec<_>>().join(" ")
}

fn finish_with_report(out: &mut Outcome, report: &NondegeneracyReport) {
    for w in report::nondegeneracy_warnings(report) {
        out.warn(w);
    }
    out.code = if report.has_counterexample() { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
}

pub fn zeta(args: &GermArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let germ = germ_from(args, stdin)?;
    let trace = checked_trace(&germ)?;
    let nd = nondegeneracy_check(&germ)?;
    let mut out = Outcome::default();
    match args.format {
        Format::Json => out.stdout = json_text(&report::zeta_json(&germ)?),
        Format::Pretty => {
            let s = &mut out.stdout;
            writeln!(s, "germ:   {germ}").unwrap();
            writeln!(s, "vars:   {}", germ.vars().join(", ")).unwrap();
            writeln!(s, "torus:  {}", trace.torus).unwrap();
            writeln!(s, "full:   {}", trace.full).unwrap();
            writeln!(s, "degree: {} (torus {})", trace.full.degree(), trace.torus.degree()).unwrap();
            writeln!(s, "non-degeneracy: {}", report::nondegeneracy_status(&nd)).unwrap();
        }
    }
    finish_with_report(&mut out, &nd);
    Ok(out)
}

pub fn diagram(args: &GermArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let germ = germ_from(args, stdin)?;
    let trace = checked_trace(&germ)?;
    let mut out = Outcome::default();
    match args.format {
        Format::Json => out.stdout = json_text(&report::diagram_json_from_trace(&germ, &trace)?),
        Format::Pretty => {
            let s = &mut out.stdout;
            writeln!(s, "germ: {germ}").unwrap();
            for c in &trace.contributions {
                let names: Vec<&str> = c.index_set.members().iter().map(|&i| germ.vars()[i].as_str()).collect();
                writeln!(s, "I = {} ({})", c.index_set, names.join(", ")).unwrap();
                writeln!(s, "  support: {}", fmt_points(&c.restricted_support)).unwrap();
                for f in &c.facets {
                    let e = f.exponent()?;
                    writeln!(
                        s,
                        "  facet normal {}: m = {}, nvol = {}, sign {}, factor {}, vertices {}",
                        f.normal,
                        f.m,
                        f.nvol,
                        if e > 0 { "+" } else { "-" },
                        f.factor()?,
                        fmt_points(f.face.vertices())
                    )
                    .unwrap();
                }
                writeln!(s, "  zeta: {}", c.zeta).unwrap();
            }
            writeln!(s, "leading: {}", trace.leading).unwrap();
            writeln!(s, "torus: {}", trace.torus).unwrap();
            writeln!(s, "full: {}", trace.full).unwrap();
        }
    }
    Ok(out)
}

/// `c₀ + c₁u + …` from coefficient strings, constant term first.
fn fmt_univariate(coefs: &[String]) -> String {
    let mut parts = Vec::new();
    for (j, c) in coefs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let mono = match j {
            0 => String::new(),
            1 => "u".into(),
            _ => format!("u^{j}"),
        };
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        let body = match (mag, mono.is_empty()) {
            (m, true) => m.to_string(),
            ("1", false) => mono,
            (m, false) => format!("{m}*{mono}"),
        };
        parts.push((neg, body));
    }
    let mut s = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    s
}

pub fn check(args: &GermArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let germ = germ_from(args, stdin)?;
    let nd = nondegeneracy_check(&germ)?;
    let mut out = Outcome::default();
    match args.format {
        Format::Json => out.stdout = json_text(&report::check_json(&germ)?),
        Format::Pretty => {
            let s = &mut out.stdout;
            writeln!(s, "germ: {germ}").unwrap();
            for f in &nd.faces {
                let verdict = match &f.verdict {
                    Verdict::Verified => "verified".to_string(),
                    Verdict::Unchecked { dim } => format!("unchecked (dimension {dim})"),
                    Verdict::CounterexampleFound(c) => {
                        let mut v = format!("counterexample: repeated factor {}", fmt_univariate(&c.repeated_factor));
                        match &c.torus_point {
                            Some(p) => write!(v, ", critical torus point ({})", p.join(", ")).unwrap(),
                            None => v.push_str(", no rational critical point"),
                        }
                        v
                    }
                };
                writeln!(
                    s,
                    "dim {} normal {} points {} [{}]: {verdict}",
                    f.dim,
                    f.normal,
                    fmt_points(&f.points),
                    f.face_polynomial
                )
                .unwrap();
            }
            writeln!(s, "status: {}", report::nondegeneracy_status(&nd)).unwrap();
        }
    }
    finish_with_report(&mut out, &nd);
    Ok(out)
}

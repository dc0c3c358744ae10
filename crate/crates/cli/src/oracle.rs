//! `oracle-compare`: recomputes every facet of a special deformation through
//! the cone identity (`f − σ`) or the mixed-volume identity (`f₀ − σf₁`).

use std::fmt::Write as _;
use std::io::Read;

use newton_zeta::germ::{default_var_names, deformation_index_sets, ExponentVector, GermSeries, Polynomial};
use newton_zeta::newton::{
    classical_deformation, diagram_facets, example1_cone_identity, example2_mixed_volume_identity,
    pencil_deformation,
};
use newton_zeta::Error;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::{infer_vars, load_germ, load_polynomial, read_source};
use crate::{CliError, Format, Mode, OracleArgs, Outcome, EXIT_INVARIANT, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inapplicable => "identity-inapplicable",
        }
    }
}

struct Row {
    identity: &'static str,
    input: String,
    index_set: String,
    normal: String,
    l: usize,
    status: Status,
    detail: String,
}

impl Row {
    fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "input": self.input,
            "index_set": self.index_set,
            "normal": self.normal,
            "l": self.l,
            "status": match self.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Inapplicable => "inapplicable",
            },
            "detail": self.detail,
        })
    }
}

fn cone_rows(f: &GermSeries, rows: &mut Vec<Row>) -> Result<(), CliError> {
    let big = classical_deformation(f)?;
    for i in deformation_index_sets(big.num_vars()) {
        for facet in diagram_facets(&big, &i)? {
            let l = facet.dim();
            let (status, detail) = match example1_cone_identity(f, &i, &facet) {
                Ok(true) => (Status::Pass, format!("nvol {} and m {} match the base", facet.nvol, facet.m)),
                Ok(false) => (Status::Fail, format!("nvol {} or m {} differ from the base", facet.nvol, facet.m)),
                Err(Error::Inapplicable(why)) => (Status::Inapplicable, why),
                Err(e) => return Err(e.into()),
            };
            rows.push(Row {
                identity: "cone",
                input: big.to_string(),
                index_set: i.to_string(),
                normal: facet.normal.to_string(),
                l,
                status,
                detail,
            });
        }
    }
    Ok(())
}

fn mixed_rows(f0: &GermSeries, f1: &Polynomial, rows: &mut Vec<Row>) -> Result<(), CliError> {
    let big = pencil_deformation(f0, f1)?;
    for i in deformation_index_sets(big.num_vars()) {
        for facet in diagram_facets(&big, &i)? {
            let l = facet.dim();
            let (status, detail) = if l <= 1 {
                (Status::Inapplicable, "l ≤ 1".to_string())
            } else {
                match example2_mixed_volume_identity(f0, f1, &i, &facet) {
                    Ok(s) => (
                        if s.holds { Status::Pass } else { Status::Fail },
                        format!(
                            "l·V_l {} vs mixed {}, m {} vs {}",
                            s.volume_side, s.mixed_side, s.m, s.minima_difference
                        ),
                    ),
                    Err(Error::Inapplicable(why)) => (Status::Inapplicable, why),
                    Err(e) => return Err(e.into()),
                }
            };
            rows.push(Row {
                identity: "mixed",
                input: big.to_string(),
                index_set: i.to_string(),
                normal: facet.normal.to_string(),
                l,
                status,
                detail,
            });
        }
    }
    Ok(())
}

fn coefficient<R: Rng>(rng: &mut R) -> BigRational {
    let c: i64 = loop {
        let c = rng.gen_range(-4..=4);
        if c != 0 {
            break c;
        }
    };
    BigRational::from_integer(c.into())
}

fn random_poly<R: Rng>(rng: &mut R, n: usize, axes: bool, allow_constant: bool) -> Polynomial {
    let mut terms = Vec::new();
    if axes {
        for i in 1..=n {
            let mut e = vec![0; n + 1];
            e[i] = rng.gen_range(1..=6);
            terms.push((ExponentVector::new(e), coefficient(rng)));
        }
    }
    for _ in 0..rng.gen_range(usize::from(!axes)..=3) {
        let mut e = vec![0; n + 1];
        for x in e.iter_mut().skip(1) {
            *x = rng.gen_range(0..=3);
        }
        if allow_constant || e.iter().any(|&x| x > 0) {
            terms.push((ExponentVector::new(e), coefficient(rng)));
        }
    }
    Polynomial::from_terms(default_var_names(n + 1), terms).expect("exponent lengths match")
}

fn random_germ<R: Rng>(rng: &mut R, n: usize) -> GermSeries {
    GermSeries::new(random_poly(rng, n, true, false)).expect("the axis terms survive")
}

fn random_rows(mode: Mode, count: usize, seed: u64, rows: &mut Vec<Row>) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let n = rng.gen_range(1..=3);
        if mode != Mode::Example2 {
            cone_rows(&random_germ(&mut rng, n), rows)?;
        }
        if mode != Mode::Example1 {
            let f0 = random_germ(&mut rng, n);
            let f1 = loop {
                let p = random_poly(&mut rng, n, false, true);
                if !p.is_zero() {
                    break p;
                }
            };
            mixed_rows(&f0, &f1, rows)?;
        }
    }
    Ok(())
}

fn given_rows(args: &OracleArgs, stdin: &mut dyn Read, rows: &mut Vec<Row>) -> Result<(), CliError> {
    let wants_cone = args.mode != Mode::Example2;
    let wants_mixed = args.mode != Mode::Example1;
    let has_germ = args.germ.is_some() || args.germ_file.is_some();
    match args.mode {
        Mode::Example1 if args.f0.is_some() || args.f1.is_some() => {
            return Err(CliError::Input("example1 takes --germ (or --germ-file/stdin), not --f0/--f1".into()))
        }
        Mode::Example2 if args.f0.is_none() || args.f1.is_none() => {
            return Err(CliError::Input("example2 needs both --f0 and --f1".into()))
        }
        Mode::Both if args.f1.is_some() && args.f0.is_none() => {
            return Err(CliError::Input("--f1 needs --f0".into()))
        }
        _ => {}
    }
    if wants_cone && (has_germ || args.f0.is_none()) {
        let text = read_source(args.germ.as_deref(), args.germ_file.as_deref(), stdin)?;
        cone_rows(&load_germ(&text, args.vars.as_deref())?, rows)?;
    } else if wants_cone && args.f1.is_none() {
        let f0 = args.f0.as_deref().expect("checked above");
        cone_rows(&load_germ(f0, args.vars.as_deref())?, rows)?;
    }
    if wants_mixed {
        if let (Some(f0), Some(f1)) = (args.f0.as_deref(), args.f1.as_deref()) {
            let vars = args.vars.clone().unwrap_or_else(|| infer_vars([f0, f1]));
            let g0 = load_germ(f0, Some(&vars))?;
            let p1 = load_polynomial(f1, g0.vars())?;
            if wants_cone && !has_germ {
                cone_rows(&g0, rows)?;
            }
            mixed_rows(&g0, &p1, rows)?;
        }
    }
    Ok(())
}

pub fn compare(args: &OracleArgs, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    match args.random {
        Some(count) => {
            if args.germ.is_some() || args.germ_file.is_some() || args.f0.is_some() || args.f1.is_some() {
                return Err(CliError::Input("--random does not take explicit germs".into()));
            }
            random_rows(args.mode, count, args.seed, &mut rows)?;
        }
        None => given_rows(args, stdin, &mut rows)?,
    }

    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Inapplicable));
    let mut out = Outcome::default();
    match args.format {
        Format::Json => {
            let v = json!({
                "checks": rows.iter().map(Row::to_json).collect::<Vec<_>>(),
                "passed": passed,
                "failed": failed,
                "inapplicable": skipped,
            });
            out.stdout = serde_json::to_string_pretty(&v).expect("values serialize") + "\n";
        }
        Format::Pretty => {
            let s = &mut out.stdout;
            let mut last_input = "";
            for r in &rows {
                if r.input != last_input {
                    writeln!(s, "F = {}", r.input).unwrap();
                    last_input = &r.input;
                }
                let label = match r.status {
                    Status::Inapplicable => format!("{} ({})", r.status.label(), r.detail),
                    _ => format!("{}: {}", r.status.label(), r.detail),
                };
                writeln!(s, "  {} I = {} normal {} l = {}: {label}", r.identity, r.index_set, r.normal, r.l).unwrap();
            }
            writeln!(s, "{passed} passed, {failed} failed, {skipped} inapplicable").unwrap();
        }
    }
    if passed == 0 && failed == 0 {
        out.warn("no facet was covered by an identity");
    }
    out.code = if failed == 0 { EXIT_OK } else { EXIT_INVARIANT };
    Ok(out)
}

//! Subcommand handlers. Each returns the rendered output and whether the
//! command succeeded; errors are mapped to exit codes by [`exit_code`].

use std::fmt::Write as _;

use affweyl::affine::describe;
use affweyl::newton::nu_translation;
use affweyl::qbg::EdgeKind;
use affweyl::suites::{run_suite, xi_table_cases, Scope};
use affweyl::{
    dim_x_mu_bmax, xi_sigma, AffineElement, AffineWeyl, CoweightVector, Error, FrobeniusDatum,
    IndexedQbg, Qbg, TypeLetter,
};
use anyhow::{bail, Result};
use serde::Serialize;
use serde_json::json;

use crate::input::{self, parse_ints, parse_word};
use crate::{CapArgs, Command, DatumArgs, Format, PairArgs, QbgQuery, TypeArgs};

pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

/// 2 for malformed input, 1 for everything else.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::Parse(_)
            | Error::Dimension { .. }
            | Error::InvalidType { .. }
            | Error::LabelOutOfRange { .. }
            | Error::NotMinuscule(_)
            | Error::NotAnAutomorphism(_)
            | Error::NotInCoweightLattice(_)
            | Error::DepthTooSmall { .. },
        ) => 2,
        _ => 1,
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn no_tsv(command: &str) -> anyhow::Error {
    Error::Parse(format!("`{command}` has no TSV output; use text or json")).into()
}

pub fn run(command: Command, format: Format) -> Result<Output> {
    match command {
        Command::Roots(ty) => roots(&ty, format),
        Command::Element {
            ty,
            word,
            lambda,
            affine_word,
        } => element(&ty, &word, lambda.as_deref(), affine_word.as_deref(), format),
        Command::Qbg { query } => qbg(query, format),
        Command::Demazure {
            ty,
            a_word,
            a_lambda,
            b_word,
            b_lambda,
        } => demazure(
            &ty,
            (&a_word, a_lambda.as_deref()),
            (&b_word, b_lambda.as_deref()),
            format,
        ),
        Command::Newton {
            datum,
            word,
            lambda,
            x,
            mu,
        } => newton(&datum, &word, lambda.as_deref(), x.as_deref(), mu.as_deref(), format),
        Command::Xi {
            letter,
            rank,
            tau,
            sigma0,
            table,
        } => xi(letter, rank, tau, sigma0, table, format),
        Command::Dim {
            datum,
            strategy,
            mu,
            caps,
        } => dim(&datum, strategy, mu.as_deref(), &caps, format),
        Command::Verify {
            suite,
            letter,
            types,
            rank,
            max_rank,
            samples,
            seed,
            caps,
        } => {
            let letters = match (letter, types) {
                (Some(l), _) => Some(vec![l]),
                (None, Some(t)) => Some(
                    t.split(',')
                        .map(|s| s.parse::<TypeLetter>())
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                (None, None) => None,
            };
            let scope = Scope {
                letters,
                rank,
                max_rank,
                samples,
                seed,
                caps: caps.caps(),
            };
            verify(&suite, &scope, format)
        }
    }
}

fn roots(ty: &TypeArgs, format: Format) -> Result<Output> {
    let rs = input::root_system(ty)?;
    let text = match format {
        Format::Json => to_json(&rs.export())?,
        Format::Tsv => return Err(no_tsv("roots")),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "type: {}", rs.name())?;
            writeln!(out, "cartan matrix:")?;
            for row in rs.cartan() {
                let r: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
                writeln!(out, "  {}", r.join(" "))?;
            }
            writeln!(out, "positive roots: {}", rs.num_positive_roots())?;
            writeln!(out, "highest root: {:?}", rs.theta())?;
            writeln!(out, "2rho: {:?}", rs.two_rho)?;
            writeln!(out, "minuscule coweights: {:?}", rs.minuscule_coweight_indices())?;
            for (i, w) in rs.fundamental_coweights.iter().enumerate() {
                writeln!(out, "varpi{}v = {}", i + 1, w.display_coroots())?;
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn element(
    ty: &TypeArgs,
    word: &str,
    lambda: Option<&str>,
    affine_word: Option<&str>,
    format: Format,
) -> Result<Output> {
    let aff = input::affine(ty)?;
    let a = match affine_word {
        Some(w) => aff.from_affine_word(&parse_word(w)?)?,
        None => input::affine_element(&aff, lambda, word)?,
    };
    let finite = a.pairings().iter().all(|&p| p == 0);
    let reflection_length = finite.then(|| aff.weyl().reflection_length(a.finite_part()));
    let text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(aff.to_json(&a))?;
            if let Some(r) = reflection_length {
                v["reflection_length"] = json!(r);
            }
            to_json(&v)?
        }
        Format::Tsv => return Err(no_tsv("element")),
        Format::Text => {
            let j = aff.to_json(&a);
            let mut out = String::new();
            writeln!(out, "element: {}", describe(&aff, &a))?;
            writeln!(out, "length: {}", j.length)?;
            writeln!(out, "affine word: {}", word_string(&j.word))?;
            writeln!(out, "omega: tau{}", j.omega)?;
            if let Some(r) = reflection_length {
                writeln!(out, "reflection length: {r}")?;
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn word_string(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    if w.iter().all(|&k| k < 10) {
        w.iter().map(|k| k.to_string()).collect()
    } else {
        let parts: Vec<String> = w.iter().map(|k| k.to_string()).collect();
        parts.join(",")
    }
}

fn qbg(query: QbgQuery, format: Format) -> Result<Output> {
    if let QbgQuery::Dot(ty) = query {
        if ty.rank > 3 {
            bail!(Error::InvalidType {
                letter: ty.letter.to_string(),
                rank: ty.rank,
                reason: "DOT export is limited to rank at most 3",
            });
        }
        let weyl = affweyl::Weyl::of_type(ty.letter, ty.rank)?;
        let group = weyl.enumerate(usize::MAX)?;
        return Ok(Output::ok(IndexedQbg::new(&group).to_dot()));
    }
    let (PairArgs { ty, from, to }, kind) = match query {
        QbgQuery::Dist(p) => (p, "dist"),
        QbgQuery::Weight(p) => (p, "weight"),
        QbgQuery::Path(p) => (p, "path"),
        QbgQuery::Dot(_) => unreachable!(),
    };
    let weyl = affweyl::Weyl::of_type(ty.letter, ty.rank)?;
    let x = input::finite(&weyl, &from)?;
    let y = input::finite(&weyl, &to)?;
    let graph = Qbg::new(&weyl);
    let path = graph.shortest_path(&x, &y);
    let weight = CoweightVector::from_ints(&path.weight);
    let text = match (format, kind) {
        (Format::Json, _) => {
            let edges: Vec<_> = path
                .edges
                .iter()
                .map(|e| {
                    json!({
                        "source": weyl.reduced_word(&e.source),
                        "target": weyl.reduced_word(&e.target),
                        "root": weyl.root_system().positive_roots[e.root],
                        "downward": e.kind == EdgeKind::Downward,
                    })
                })
                .collect();
            let mut v = json!({
                "from": weyl.reduced_word(&x),
                "to": weyl.reduced_word(&y),
                "distance": path.len(),
                "weight": path.weight,
            });
            if kind == "path" {
                v["edges"] = json!(edges);
            }
            to_json(&v)?
        }
        (Format::Tsv, "path") => return Err(no_tsv("qbg path")),
        (Format::Tsv, _) => {
            let w: Vec<String> = path.weight.iter().map(|c| c.to_string()).collect();
            format!(
                "from\tto\tdistance\tweight\n{}\t{}\t{}\t{}\n",
                word_string(&weyl.reduced_word(&x)),
                word_string(&weyl.reduced_word(&y)),
                path.len(),
                w.join(",")
            )
        }
        (Format::Text, "dist") => format!("{}\n", path.len()),
        (Format::Text, "weight") => format!("{}\n", weight.display_coroots()),
        (Format::Text, _) => {
            let mut out = String::new();
            for e in &path.edges {
                let tag = match e.kind {
                    EdgeKind::Upward => "up".to_string(),
                    EdgeKind::Downward => format!(
                        "down, {}",
                        CoweightVector::from_ints(&weyl.root_system().positive_coroots[e.root])
                            .display_coroots()
                    ),
                };
                writeln!(
                    out,
                    "{} -> {} ({tag})",
                    word_string(&weyl.reduced_word(&e.source)),
                    word_string(&weyl.reduced_word(&e.target))
                )?;
            }
            writeln!(out, "distance {}, weight {}", path.len(), weight.display_coroots())?;
            out
        }
    };
    Ok(Output::ok(text))
}

fn element_json(aff: &AffineWeyl, a: &AffineElement) -> serde_json::Value {
    let mut v = serde_json::to_value(aff.to_json(a)).expect("serializable");
    v["display"] = json!(describe(aff, a));
    v
}

fn demazure(
    ty: &TypeArgs,
    (a_word, a_lambda): (&str, Option<&str>),
    (b_word, b_lambda): (&str, Option<&str>),
    format: Format,
) -> Result<Output> {
    let aff = input::affine(ty)?;
    let a = input::affine_element(&aff, a_lambda, a_word)?;
    let b = input::affine_element(&aff, b_lambda, b_word)?;
    let p = aff.demazure(&a, &b);
    let text = match format {
        Format::Json => to_json(&json!({
            "a": element_json(&aff, &a),
            "b": element_json(&aff, &b),
            "product": element_json(&aff, &p),
        }))?,
        Format::Tsv => return Err(no_tsv("demazure")),
        Format::Text => format!("{} (length {})\n", describe(&aff, &p), aff.length(&p)),
    };
    Ok(Output::ok(text))
}

fn newton(
    args: &DatumArgs,
    word: &str,
    lambda: Option<&str>,
    x: Option<&str>,
    mu: Option<&str>,
    format: Format,
) -> Result<Output> {
    let aff = input::affine(&args.ty)?;
    let rs = aff.root_system();
    let datum = input::datum(rs, args)?;
    let (element, formula) = match (x, mu) {
        (Some(x), Some(mu)) => {
            let x = input::finite(aff.weyl(), x)?;
            let mu = dominant_pairings(mu, rs.rank())?;
            let t = aff.translation(&aff.weyl().act_on_pairings(&x, &mu));
            let qbg = Qbg::new(aff.weyl());
            (t, Some(nu_translation(&aff, &datum, &mu, &x, &qbg)))
        }
        (None, None) => (input::affine_element(&aff, lambda, word)?, None),
        _ => bail!(Error::Parse("--x and --mu must be given together".into())),
    };
    let gn = aff.generic_newton_point(&datum, &element)?;
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "datum": datum,
                "element": element_json(&aff, &element),
                "nu": {"coroots": gn.nu.to_pairs(), "display": gn.nu.display_coroots()},
                "two_rho_pairing": gn.two_rho_pairing.to_string(),
                "periods": gn.periods,
            });
            if let Some(f) = &formula {
                v["formula"] = serde_json::to_value(f.export())?;
            }
            to_json(&v)?
        }
        Format::Tsv => return Err(no_tsv("newton")),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "element: {}", describe(&aff, &element))?;
            writeln!(out, "nu: {}", gn.nu.display_coroots())?;
            writeln!(out, "<2rho, nu>: {}", gn.two_rho_pairing)?;
            if let Some(f) = &formula {
                let flag = if f.regular { "regular" } else { "not regular, upper bound only" };
                writeln!(out, "mu^diamond - av_sigma(x): {} ({flag})", f.nu.display_coroots())?;
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn dominant_pairings(s: &str, rank: usize) -> Result<Vec<i64>> {
    let mu = parse_ints(s, rank)?;
    if mu.iter().any(|&p| p < 0) {
        bail!(Error::Parse(format!("mu = {mu:?} is not dominant")));
    }
    Ok(mu)
}

fn xi_coordinates(v: &CoweightVector) -> String {
    let parts: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

fn xi(
    letter: Option<TypeLetter>,
    rank: Option<usize>,
    tau: Option<usize>,
    sigma0: String,
    table: bool,
    format: Format,
) -> Result<Output> {
    let rows: Vec<(FrobeniusDatum, CoweightVector)> = if table {
        xi_table_cases()
            .iter()
            .map(|spec| {
                let (aff, datum) = spec.build()?;
                let xi = xi_sigma(aff.root_system(), &datum);
                Ok((datum, xi))
            })
            .collect::<Result<_, Error>>()?
    } else {
        let (Some(letter), Some(rank)) = (letter, rank) else {
            bail!(Error::Parse("xi needs --type and --rank, or --table".into()));
        };
        let args = DatumArgs {
            ty: TypeArgs { letter, rank },
            tau,
            sigma0,
        };
        let rs = input::root_system(&args.ty)?;
        let datum = input::datum(&rs, &args)?;
        let xi = xi_sigma(&rs, &datum);
        vec![(datum, xi)]
    };
    let text = match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(d, xi)| {
                    json!({
                        "type": d.letter.to_string(),
                        "rank": d.rank,
                        "tau": d.tau,
                        "sigma0": d.sigma0.describe(),
                        "xi": {"coroots": xi.to_pairs(), "display": xi.display_coroots()},
                    })
                })
                .collect();
            if table {
                to_json(&v)?
            } else {
                to_json(&v[0])?
            }
        }
        Format::Tsv => {
            let mut out = "type\trank\ttau\tsigma0\txi_coordinates\n".to_string();
            for (d, xi) in &rows {
                let tau = d.tau.map_or("-".to_string(), |t| t.to_string());
                writeln!(
                    out,
                    "{}\t{}\t{tau}\t{}\t{}",
                    d.letter,
                    d.rank,
                    d.sigma0.describe(),
                    xi_coordinates(xi)
                )?;
            }
            out
        }
        Format::Text if table => {
            let mut out = String::new();
            for (d, xi) in &rows {
                writeln!(out, "{}\t{}", d.name(), xi.display_coroots())?;
            }
            out
        }
        Format::Text => format!("{}\n", rows[0].1.display_coroots()),
    };
    Ok(Output::ok(text))
}

fn dim(
    args: &DatumArgs,
    strategy: affweyl::Strategy,
    mu: Option<&str>,
    caps: &CapArgs,
    format: Format,
) -> Result<Output> {
    let aff = input::affine(&args.ty)?;
    let datum = input::datum(aff.root_system(), args)?;
    let mu = mu.map(|m| dominant_pairings(m, aff.rank())).transpose()?;
    let report = dim_x_mu_bmax(&aff, &datum, strategy, &caps.caps(), mu.as_deref())?;
    let ok = report.consistent();
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let text = match format {
        Format::Json => to_json(&report)?,
        Format::Tsv => format!(
            "type\trank\ttau\tsigma0\tvalue_rank\tvalue_class\tvalue_qbg\n{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            datum.letter,
            datum.rank,
            datum.tau.map_or("-".to_string(), |t| t.to_string()),
            datum.sigma0.describe(),
            report.value_rank,
            opt(report.value_class),
            opt(report.value_qbg)
        ),
        Format::Text if ok => format!("{}\n", report.value()),
        Format::Text => format!(
            "{}\ninconsistent: rank {}, class {}, class min length {}, qbg {}\n",
            report.value(),
            report.value_rank,
            opt(report.value_class),
            opt(report.class_min_length),
            opt(report.value_qbg)
        ),
    };
    Ok(Output { text, ok })
}

fn verify(suite: &str, scope: &Scope, format: Format) -> Result<Output> {
    let report = run_suite(suite, scope)?;
    let text = match format {
        Format::Json => to_json(&report)?,
        Format::Tsv => {
            let mut out = "case\tstatement\tpassed\tchecked\n".to_string();
            for c in &report.cases {
                writeln!(out, "{}\t{}\t{}\t{}", c.case, c.statement, c.passed, c.checked)?;
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.cases {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{tag}  {}  {}  ({} checks)", c.case, c.statement, c.checked)?;
                for f in &c.failures {
                    writeln!(out, "      {f}")?;
                }
            }
            let verdict = if report.passed { "passed" } else { "FAILED" };
            writeln!(out, "{}: {verdict}, {} checks", report.suite, report.checked())?;
            out
        }
    };
    Ok(Output {
        text,
        ok: report.passed,
    })
}

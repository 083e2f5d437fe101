use std::io::Write;

use log::{debug, info};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use emdpoly::emd::{
    comp_to_partition, emd, emd_via_bijection, expected_emd, expected_emd_limit, mixed_emd_sum_bruteforce,
    series_expand, Composition,
};
use emdpoly::partitions::RectBound;
use emdpoly::poly::{n_poly_closed, n_poly_recursive, n_poly_symdiff, symdiff_pair_count, w_poly, IntPoly};
use emdpoly::wiener::{build_hasse, wiener_bfs, wiener_formula};

use crate::args::{Cli, Command, Format, GlobalOpts, Method, NpolyArgs, SeriesArgs, SeriesKind, VerifyArgs};
use crate::checks::{run_all, Check, Sweep};
use crate::render;
use crate::{CliError, ExitStatus};

/// Executes one parsed invocation, writing results to `out`.
///
/// Returns the exit status for a completed run; errors carry their own.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    let g = &cli.global;
    let (text, status) = match &cli.command {
        Command::Npoly(args) => (npoly(g, args)?, ExitStatus::Success),
        Command::Wpoly { p, q } => (wpoly(g, *p, *q)?, ExitStatus::Success),
        Command::Expect { s, n, decimal } => {
            let value = expected_emd(*s, *n)?;
            let meta = vec![("s", json!(s)), ("n", json!(n))];
            (render::rational(g.format, &value, *decimal, meta), ExitStatus::Success)
        }
        Command::Limit { n, decimal } => {
            let value = expected_emd_limit(*n)?;
            let meta = vec![("n", json!(n))];
            (render::rational(g.format, &value, *decimal, meta), ExitStatus::Success)
        }
        Command::Wiener { a, b, brute } => wiener(g, *a, *b, *brute)?,
        Command::Series(args) => series(g, args)?,
        Command::Verify(args) => verify(g, args)?,
        Command::Emd { alpha, beta, bijection } => emd_cmd(g, alpha, beta, *bijection)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(status)
}

fn npoly(g: &GlobalOpts, args: &NpolyArgs) -> Result<String, CliError> {
    let (p, q) = args.shape();
    let f = match args.method {
        Method::Recursive => n_poly_recursive(p, q),
        Method::Closed => {
            if p != q {
                return Err(CliError::Usage("--method closed needs p = q".into()));
            }
            if p == 0 {
                return Err(CliError::Usage("--method closed needs n >= 1".into()));
            }
            n_poly_closed(p)?
        }
        Method::Symdiff => {
            let pairs = symdiff_pair_count(p, q);
            if pairs > BigUint::from(g.max_pairs) {
                return Err(CliError::CapExceeded(format!(
                    "partition pairs: {pairs} exceeds the limit of {} (raise --max-pairs)",
                    g.max_pairs
                )));
            }
            n_poly_symdiff(p, q)
        }
    };
    debug!("N_{p},{q} via {}: {f}", args.method.name());
    let meta = vec![
        ("polynomial", json!("N")),
        ("p", json!(p)),
        ("q", json!(q)),
        ("method", json!(args.method.name())),
    ];
    Ok(render::poly(g.format, &f, meta))
}

fn wpoly(g: &GlobalOpts, p: u64, q: u64) -> Result<String, CliError> {
    if p == 0 || q == 0 {
        return Err(CliError::Usage("W_pq needs p, q >= 1".into()));
    }
    let f = w_poly(p, q);
    let meta = vec![("polynomial", json!("W")), ("p", json!(p)), ("q", json!(q))];
    Ok(render::poly(g.format, &f, meta))
}

fn wiener(g: &GlobalOpts, a: u64, b: u64, brute: bool) -> Result<(String, ExitStatus), CliError> {
    let formula = wiener_formula(a, b)?;
    if !brute {
        let text = match g.format {
            Format::Plain => format!("{formula}\n"),
            Format::Csv => format!("a,b,wiener\n{a},{b},{formula}\n"),
            Format::Json => format!(
                "{}\n",
                render::json_object(vec![
                    ("a", json!(a)),
                    ("b", json!(b)),
                    ("wiener", json!(formula.to_string()))
                ])
            ),
        };
        return Ok((text, ExitStatus::Success));
    }
    let graph = build_hasse(RectBound::new(a as usize, b as usize), g.max_vertices)?;
    info!(
        "Hasse diagram of Par({a}×{b}): {} vertices, {} edges",
        graph.vertex_count(),
        graph.edge_count()
    );
    let bfs = wiener_bfs(&graph)?;
    let status = if bfs == formula {
        ExitStatus::Success
    } else {
        log::error!("formula and BFS disagree for Par({a}×{b})");
        ExitStatus::Failure
    };
    let text = match g.format {
        Format::Plain => format!("formula={formula} bfs={bfs}\n"),
        Format::Csv => format!("a,b,formula,bfs\n{a},{b},{formula},{bfs}\n"),
        Format::Json => format!(
            "{}\n",
            render::json_object(vec![
                ("a", json!(a)),
                ("b", json!(b)),
                ("formula", json!(formula.to_string())),
                ("bfs", json!(bfs.to_string())),
                ("agree", json!(bfs == formula)),
            ])
        ),
    };
    Ok((text, status))
}

fn series(g: &GlobalOpts, args: &SeriesArgs) -> Result<(String, ExitStatus), CliError> {
    let shape = match (args.n, args.p, args.q) {
        (Some(n), _, _) => Some((n, n)),
        (None, Some(p), Some(q)) => Some((p, q)),
        _ => None,
    };
    let (numer, pole, label): (IntPoly, u64, Vec<(&str, Value)>) = match (&args.numer, shape) {
        (Some(coeffs), _) => {
            let pole = args.pole.expect("clap requires --pole with --numer");
            (IntPoly::from_i64s(coeffs), pole, vec![("pole", json!(pole))])
        }
        (None, Some((p, q))) => {
            if p == 0 || q == 0 {
                return Err(CliError::Usage("series needs p, q >= 1".into()));
            }
            let meta = |kind: &str| vec![("kind", json!(kind)), ("p", json!(p)), ("q", json!(q))];
            match args.kind {
                SeriesKind::N => (n_poly_recursive(p, q), p + q, meta("N")),
                SeriesKind::W => (w_poly(p, q), p + q - 1, meta("W")),
            }
        }
        (None, None) => return Err(CliError::Usage("series needs N, --p/--q, or --numer/--pole".into())),
    };
    if args.terms == 0 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let coeffs = series_expand(&numer, pole, args.terms);

    let mut status = ExitStatus::Success;
    if let (true, Some((p, q))) = (args.brute, shape) {
        for (s, c) in coeffs.iter().enumerate() {
            let s = s as u64;
            let want = match args.kind {
                SeriesKind::N => mixed_emd_sum_bruteforce(s, p, q, g.max_pairs)?,
                SeriesKind::W => emdpoly::emd::composition_count(s, p) * emdpoly::emd::composition_count(s, q),
            };
            if BigInt::from(want.clone()) != *c {
                log::error!("coefficient t^{s}: series {c} but brute force {want}");
                status = ExitStatus::Failure;
            }
        }
    }

    let text = match g.format {
        Format::Plain => {
            let parts: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
        Format::Csv => {
            let mut out = String::from("s,coefficient\n");
            for (s, c) in coeffs.iter().enumerate() {
                out.push_str(&format!("{s},{c}\n"));
            }
            out
        }
        Format::Json => {
            let mut fields = label;
            fields.push(("numerator", render::big_list(numer.coeffs())));
            fields.push(("coefficients", render::big_list(&coeffs)));
            format!("{}\n", render::json_object(fields))
        }
    };
    Ok((text, status))
}

fn verify(g: &GlobalOpts, args: &VerifyArgs) -> Result<(String, ExitStatus), CliError> {
    let sweep = Sweep {
        max_n: args.max_n,
        max_s: args.max_s,
        max_side: args.max_side,
        max_pairs: g.max_pairs,
        max_vertices: g.max_vertices,
    };
    let checks: Vec<Check> = if args.checks.is_empty() {
        Check::all().to_vec()
    } else {
        args.checks.clone()
    };
    let reports = run_all(&sweep, &checks)?;
    for r in &reports {
        info!("{} finished in {} ms", r.check, r.elapsed_ms);
    }
    let status = if reports.iter().all(|r| r.passed()) {
        ExitStatus::Success
    } else {
        ExitStatus::Failure
    };
    Ok((render::reports(g.format, &reports), status))
}

fn parse_composition(text: &str) -> Result<Composition, CliError> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("bad composition {text:?}: {e}")))?;
    Ok(Composition::new(parts)?)
}

fn emd_cmd(g: &GlobalOpts, alpha: &str, beta: &str, bijection: bool) -> Result<(String, ExitStatus), CliError> {
    let (a, b) = (parse_composition(alpha)?, parse_composition(beta)?);
    let d = emd(&a, &b)?;
    if !bijection {
        let text = match g.format {
            Format::Plain => format!("{d}\n"),
            Format::Csv => format!("emd\n{d}\n"),
            Format::Json => format!(
                "{}\n",
                render::json_object(vec![
                    ("alpha", json!(a.parts())),
                    ("beta", json!(b.parts())),
                    ("emd", json!(d)),
                ])
            ),
        };
        return Ok((text, ExitStatus::Success));
    }
    let via = emd_via_bijection(&a, &b)?;
    let (lambda, mu) = (comp_to_partition(&a), comp_to_partition(&b));
    let status = if via == d {
        ExitStatus::Success
    } else {
        ExitStatus::Failure
    };
    let text = match g.format {
        Format::Plain => format!("emd={d} bijection={via} lambda={lambda} mu={mu}\n"),
        Format::Csv => format!("emd,bijection,lambda,mu\n{d},{via},\"{lambda}\",\"{mu}\"\n"),
        Format::Json => format!(
            "{}\n",
            render::json_object(vec![
                ("alpha", json!(a.parts())),
                ("beta", json!(b.parts())),
                ("emd", json!(d)),
                ("bijection", json!(via)),
                ("lambda", json!(lambda.parts())),
                ("mu", json!(mu.parts())),
            ])
        ),
    };
    Ok((text, status))
}

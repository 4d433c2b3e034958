//! `ribbonlab`: compute ribbon tableau objects and run identity checks.

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ribbonlab::domino::{inverse_rsk, rsk_with_core, ColoredBiword};
use ribbonlab::fock::{self, FockVector};
use ribbonlab::partitions::{n_core, n_quotient};
use ribbonlab::ribbonfn::{enumerate_tableaux, q_lr, ribbon_function, x_poly};
use ribbonlab::verify::{self, Grid, Identity};
use ribbonlab::{Basis, Error, Partition, SkewShape};

use output::{Format, Rendered};

#[derive(Parser)]
#[command(name = "ribbonlab", version, about = "Ribbon tableaux, ribbon functions and Fock space operators in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object and print it.
    Compute(ComputeArgs),
    /// Check an identity (or `all`) over a parameter grid; exits 1 on any failure.
    Verify(VerifyArgs),
    /// List the identities `verify` understands.
    Identities,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Core,
    Quotient,
    Tableaux,
    #[value(name = "G")]
    G,
    Qlr,
    #[value(name = "X")]
    X,
    FockOp,
    DominoRsk,
}

#[derive(Args)]
struct ComputeArgs {
    object: Object,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// `outer` or `outer/inner`, parts comma separated.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    outer: Option<String>,
    #[arg(long)]
    inner: Option<String>,
    /// Border strip type for `X`, comma separated.
    #[arg(long = "type")]
    type_: Option<String>,
    #[arg(long, value_parser = parse_basis, default_value = "schur")]
    basis: Basis,
    /// Largest label for `tableaux`.
    #[arg(long, default_value_t = 3)]
    max_label: usize,
    /// Operator for `fock-op`: f, e, qh, qd, V, U, Vt, Ut, B, S.
    #[arg(long)]
    op: Option<String>,
    /// Residue for f, e, qh.
    #[arg(long)]
    i: Option<usize>,
    /// Index for V, U, Vt, Ut, B (B accepts negative values).
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Partition indexing `S`.
    #[arg(long)]
    nu: Option<String>,
    /// Biword for `domino-rsk`: triples `c i j` separated by `;` or newlines.
    #[arg(long)]
    biword: Option<String>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, or `all`.
    identity: String,
    /// Ribbon lengths, comma separated.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long)]
    sizemax: Option<usize>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse::<Basis>().map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Error> {
    v.as_deref().ok_or_else(|| Error::Invalid(format!("--{flag} is required")))
}

fn skew_arg(a: &ComputeArgs) -> Result<SkewShape, Error> {
    if let Some(s) = &a.shape {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (parse_partition(o)?, parse_partition(i)?),
            None => (parse_partition(s)?, Partition::empty()),
        };
        return SkewShape::new(outer, inner);
    }
    let outer = parse_partition(required(&a.outer, "outer")?)?;
    let inner = match &a.inner {
        Some(i) => parse_partition(i)?,
        None => Partition::empty(),
    };
    SkewShape::new(outer, inner)
}

/// Like [`skew_arg`], but a straight shape is taken over its own `n`-core.
fn shape_over_core(a: &ComputeArgs) -> Result<SkewShape, Error> {
    let s = skew_arg(a)?;
    let explicit = a.inner.is_some() || a.shape.as_deref().is_some_and(|x| x.contains('/'));
    if explicit {
        return Ok(s);
    }
    let core = n_core(&s.outer, a.n.max(1));
    Ok(SkewShape { outer: s.outer, inner: core })
}

fn straight_arg(a: &ComputeArgs) -> Result<Partition, Error> {
    let s = skew_arg(a)?;
    if !s.inner.is_empty() {
        return Err(Error::Invalid("expected a straight shape".into()));
    }
    Ok(s.outer)
}

fn check_n(n: usize) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::ZeroRibbonLength);
    }
    Ok(())
}

fn compute(a: &ComputeArgs) -> Result<Rendered, Error> {
    check_n(a.n)?;
    let n = a.n;
    Ok(match a.object {
        Object::Core => {
            let l = straight_arg(a)?;
            let c = n_core(&l, n);
            Rendered::new(json!(c), c.pretty()).table(vec!["core"], vec![vec![c.to_string()]])
        }
        Object::Quotient => {
            let l = straight_arg(a)?;
            let q = n_quotient(&l, n);
            let pretty = format!("[{}]", q.iter().map(|p| p.pretty()).collect::<Vec<_>>().join(", "));
            let rows = q.iter().enumerate().map(|(i, p)| vec![i.to_string(), p.to_string()]).collect();
            Rendered::new(json!(q), pretty).table(vec!["runner", "partition"], rows)
        }
        Object::Tableaux => {
            let shape = shape_over_core(a)?;
            let ts = enumerate_tableaux(&shape, n, a.max_label);
            let pretty = ts
                .iter()
                .map(|t| {
                    let chain: Vec<String> = t.chain.iter().map(|p| p.pretty()).collect();
                    format!("weight {:?} spin {}: {}", t.weight, t.spin, chain.join(" ⊂ "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            let rows = ts
                .iter()
                .map(|t| {
                    let chain: Vec<String> = t.chain.iter().map(|p| p.pretty()).collect();
                    vec![format!("{:?}", t.weight), t.spin.to_string(), chain.join(" ")]
                })
                .collect();
            Rendered::new(json!(ts), format!("{} tableaux\n{pretty}", ts.len()))
                .table(vec!["weight", "spin", "chain"], rows)
        }
        Object::G => {
            let shape = shape_over_core(a)?;
            let f = ribbon_function(&shape, n).convert(a.basis);
            let rows = f.coeffs().iter().map(|(p, c)| vec![p.to_string(), c.to_string()]).collect();
            Rendered::new(json!(f), f.to_string()).table(vec!["partition", "coefficient"], rows)
        }
        Object::Qlr => {
            let shape = shape_over_core(a)?;
            let c = q_lr(&shape, n);
            let rows: Vec<Vec<String>> = c.iter().map(|(p, x)| vec![p.to_string(), x.to_string()]).collect();
            let pretty = c.iter().map(|(p, x)| format!("{}: {x}", p.pretty())).collect::<Vec<_>>().join("\n");
            let j: Vec<_> = c.iter().map(|(p, x)| json!({"part": p, "poly": x})).collect();
            Rendered::new(json!(j), pretty).table(vec!["partition", "coefficient"], rows)
        }
        Object::X => {
            let shape = skew_arg(a)?;
            let t = parse_partition_list(required(&a.type_, "type")?)?;
            let x = x_poly(&shape, n, &t);
            Rendered::new(json!(x), x.to_string()).table(vec!["X"], vec![vec![x.to_string()]])
        }
        Object::FockOp => {
            let l = straight_arg(a)?;
            let v = apply_op(a, &FockVector::basis(n, l))?;
            let rows = v.entries().iter().map(|(p, c)| vec![p.to_string(), c.to_string()]).collect();
            Rendered::new(json!(v), v.to_string()).table(vec!["partition", "coefficient"], rows)
        }
        Object::DominoRsk => {
            let text = required(&a.biword, "biword")?.replace(';', "\n");
            let w: ColoredBiword = text.parse()?;
            let core = match &a.shape {
                Some(s) => parse_partition(s)?,
                None => Partition::empty(),
            };
            if n_core(&core, 2) != core {
                return Err(Error::Invalid(format!("{} is not a 2-core", core.pretty())));
            }
            let (p, q) = rsk_with_core(&w, &core);
            let back = inverse_rsk(&p, &q)?;
            let pretty = format!(
                "P (spin {}):\n{}\n\nQ (spin {}):\n{}\n\ntotal color {} = {} + {}",
                p.spin(),
                p.grid(),
                q.spin(),
                q.grid(),
                w.total_color(),
                p.spin(),
                q.spin()
            );
            let rows = vec![vec![p.shape().to_string(), p.spin().to_string(), q.spin().to_string()]];
            Rendered::new(json!({"P": p, "Q": q, "biword": back}), pretty)
                .table(vec!["shape", "spin_P", "spin_Q"], rows)
        }
    })
}

fn parse_partition_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<usize>().map_err(|e| Error::ParsePartition(s.to_string(), e.to_string())))
        .collect()
}

fn apply_op(a: &ComputeArgs, v: &FockVector) -> Result<FockVector, Error> {
    let op = required(&a.op, "op")?;
    let n = a.n;
    let residue = || {
        let i = a.i.ok_or_else(|| Error::Invalid("--i is required".into()))?;
        if i >= n {
            return Err(Error::Residue { residue: i, n });
        }
        Ok(i)
    };
    let index = || {
        let k = a.k.ok_or_else(|| Error::Invalid("--k is required".into()))?;
        usize::try_from(k).ok().filter(|&k| k > 0).ok_or_else(|| Error::Invalid(format!("--k must be positive, got {k}")))
    };
    Ok(match op {
        "f" => fock::apply_f(residue()?, v),
        "e" => fock::apply_e(residue()?, v),
        "qh" => fock::apply_qh(residue()?, v),
        "qd" => fock::apply_qd(v),
        "V" => fock::apply_v(index()?, v),
        "U" => fock::apply_u(index()?, v),
        "Vt" => fock::apply_v_tilde(index()?, v),
        "Ut" => fock::apply_u_tilde(index()?, v),
        "B" => {
            let k = a.k.ok_or_else(|| Error::Invalid("--k is required".into()))?;
            if k == 0 {
                return Err(Error::Invalid("B needs a nonzero --k".into()));
            }
            fock::apply_b(k, v)
        }
        "S" => fock::apply_s(&parse_partition(required(&a.nu, "nu")?)?, v),
        other => return Err(Error::Invalid(format!("unknown operator {other:?}"))),
    })
}

fn grid_for(id: Identity, a: &VerifyArgs) -> Result<Grid, Error> {
    let mut g = Grid::for_identity(id);
    if let Some(n) = &a.n {
        g.n = parse_partition_list(n)?;
        if g.n.contains(&0) {
            return Err(Error::ZeroRibbonLength);
        }
    }
    if let Some(nu) = &a.nu {
        g.nu = Some(parse_partition(nu)?);
    }
    g.k = a.k.or(g.k);
    g.kmax = a.kmax.unwrap_or(g.kmax);
    g.sizemax = a.sizemax.unwrap_or(g.sizemax);
    g.degree = a.degree.unwrap_or(g.degree);
    g.vars = a.vars.unwrap_or(g.vars);
    Ok(g)
}

fn threads() -> Option<usize> {
    std::env::var("RIBBONLAB_THREADS").ok().and_then(|s| s.trim().parse().ok())
}

fn run_verify(a: &VerifyArgs) -> Result<(Rendered, bool), Error> {
    let ids: Vec<Identity> = if a.identity == "all" { Identity::ALL.to_vec() } else { vec![a.identity.parse()?] };
    let mut reports = Vec::new();
    for id in ids {
        let grid = grid_for(id, a)?;
        reports.push(verify::run(id, &grid, threads()));
    }
    let ok = reports.iter().all(|r| r.passed());
    Ok((output::verify_rendered(&reports), ok))
}

/// Prints to stdout, treating a closed reader (`| head`) as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Identities => {
            let lines: Vec<String> = Identity::ALL.iter().map(|id| format!("{:<22} {}", id.name(), id.about())).collect();
            emit(&lines.join("\n"));
            ExitCode::SUCCESS
        }
        Command::Compute(a) => match compute(&a) {
            Ok(r) => {
                emit(&r.render(a.format));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Verify(a) => match run_verify(&a) {
            Ok((r, ok)) => {
                emit(&r.render(a.format));
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}

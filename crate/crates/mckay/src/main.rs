use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mckay::bijection::{default_grid, run_grid, Cell, VerificationReport, VerifyOptions};
use mckay::dixon::{character_table, irr_ellprime};
use mckay::gggr::{
    check_equivariance, check_gamma_conjugacy, check_multiplicity_one, check_psi_homomorphism, sweep_parity_symmetry,
    Sigma, SplitCase,
};
use mckay::matrixoracle::{build_group, GroupKind, DEFAULT_GROUP_LIMIT};
use mckay::partitions::{partitions_of, Partition};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mckay", version, about = "Verify McKay-type character bijections for GL_n(±q) at desk scale")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the label-level bijection on one cell or a grid.
    Verify(VerifyArgs),
    /// Build a matrix group and print its class and character data.
    Oracle(OracleArgs),
    /// Generalized Gelfand–Graev checks.
    Gggr(GggrArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest group built by the oracle.
    #[arg(long, default_value_t = DEFAULT_GROUP_LIMIT)]
    limit: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long, default_value = "+1", value_parser = parse_eps, allow_hyphen_values = true)]
    eps: i8,
    #[arg(long)]
    ell: Option<u64>,
    /// `default`, or a JSON file holding a list of cells.
    #[arg(long)]
    grid: Option<String>,
    /// Cross-check against the oracle for groups up to `--limit` elements.
    #[arg(long)]
    oracle: bool,
    /// Include one row per matched pair.
    #[arg(long)]
    witnesses: bool,
    /// Report every timing as zero, for reproducible output.
    #[arg(long)]
    no_timing: bool,
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value = "GL")]
    kind: GroupKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u64,
    /// Also report Sylow data and `ℓ′` counts for this prime.
    #[arg(long)]
    ell: Option<u64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum GggrCheck {
    Parity,
    Homomorphism,
    Equivariance,
    GammaConj,
    MultOne,
    All,
}

#[derive(Args)]
struct GggrArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: Option<u64>,
    /// Comma-separated parts; all partitions of `n` when omitted.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value = "all")]
    check: GggrCheck,
    /// Group for the multiplicity check.
    #[arg(long, default_value = "GL")]
    kind: GroupKind,
    #[command(flatten)]
    common: Common,
}

fn parse_eps(s: &str) -> Result<i8, String> {
    match s.trim() {
        "+1" | "1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("expected +1 or -1, got {s}")),
    }
}

fn parse_lambda(s: &str) -> anyhow::Result<Partition> {
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad part {x:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if parts.contains(&0) {
        bail!("parts must be positive");
    }
    Ok(Partition::new(parts))
}

fn emit(common: &Common, table: &str, value: &serde_json::Value) -> anyhow::Result<()> {
    let text = match common.format {
        Format::Table => table.to_string(),
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
    };
    match &common.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cells(args: &VerifyArgs) -> anyhow::Result<Vec<Cell>> {
    if let Some(g) = &args.grid {
        return if g == "default" {
            Ok(default_grid())
        } else {
            let text = std::fs::read_to_string(g).with_context(|| format!("reading {g}"))?;
            Ok(serde_json::from_str(&text).with_context(|| format!("parsing {g}"))?)
        };
    }
    let (Some(n), Some(q), Some(ell)) = (args.n, args.q, args.ell) else {
        bail!("give --n, --q and --ell, or --grid");
    };
    Ok(vec![Cell { n, eps: args.eps, q, ell }])
}

fn validate(cell: &Cell) -> anyhow::Result<()> {
    let sp = cell.sp()?;
    if !mckay::exactfield::is_prime(cell.ell) {
        bail!("ℓ = {} is not prime", cell.ell);
    }
    if sp.pp.p == cell.ell {
        bail!("ℓ = {} divides q = {}", cell.ell, cell.q);
    }
    if cell.n < 1 || cell.n > 8 {
        bail!("n = {} outside the supported range 1..=8", cell.n);
    }
    Ok(())
}

fn report_line(r: &VerificationReport) -> String {
    let status = if !r.applicable {
        "n/a "
    } else if r.pass() {
        "pass"
    } else {
        "FAIL"
    };
    let c = &r.counts;
    let mut line = format!(
        "{status} {:<16} global {:>4} local {:>4}  ℓ′ {:>4}/{:<4} oracle {:<5} {:>6} ms",
        r.cell.to_string(),
        c.global,
        c.local,
        c.global_ellprime,
        c.local_ellprime,
        match r.checks.oracle {
            None => "-",
            Some(true) => "ok",
            Some(false) => "FAIL",
        },
        r.ms
    );
    if let Some(e) = &r.error {
        line += &format!("\n     error: {e}");
    }
    for f in r.failures.iter().take(5) {
        line += &format!("\n     {f}");
    }
    line
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<bool> {
    let cells = cells(&args)?;
    for c in &cells {
        validate(c)?;
    }
    if let Some(k) = args.workers {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    let opts = VerifyOptions { oracle_limit: args.oracle.then_some(args.common.limit), witnesses: args.witnesses };
    let mut reports = run_grid(&cells, opts);
    if args.no_timing {
        reports.iter_mut().for_each(|r| r.ms = 0);
    }
    let ok = reports.iter().all(|r| r.pass());
    let mut table: String = reports.iter().map(|r| report_line(r) + "\n").collect();
    table += &format!("{} cells, {} failing\n", reports.len(), reports.iter().filter(|r| !r.pass()).count());
    emit(&args.common, &table, &serde_json::to_value(&reports)?)?;
    Ok(ok)
}

fn cmd_oracle(args: OracleArgs) -> anyhow::Result<bool> {
    let g = build_group(args.kind, args.n, args.q, args.common.limit)?;
    let t = character_table(&g)?;
    let degrees = t.sorted_degrees();
    let mut value = json!({
        "group": g.label,
        "order": g.order(),
        "classes": t.classes.len(),
        "degrees": degrees,
        "orthogonality": t.check_row_orthogonality() && t.check_column_orthogonality(),
    });
    let mut table = format!(
        "{}: order {}, {} classes\ndegrees {:?}\n",
        g.label,
        g.order(),
        t.classes.len(),
        degrees
    );
    if let Some(ell) = args.ell {
        let p = g.sylow_subgroup(ell, 1)?;
        let np = g.normalizer(&p);
        let tn = character_table(&g.subgroup_group(&np, "N(P)"))?;
        let (a, da) = irr_ellprime(&t, ell);
        let (b, db) = irr_ellprime(&tn, ell);
        table += &format!(
            "Sylow {ell}: order {}, normalizer order {}\nℓ′ characters: group {a} {da:?}, normalizer {b} {db:?}\n",
            p.order(),
            np.order()
        );
        value["sylow"] = json!({
            "ell": ell, "order": p.order(), "normalizer_order": np.order(),
            "group_ellprime": a, "normalizer_ellprime": b,
        });
    }
    emit(&args.common, &table, &value)?;
    Ok(true)
}

fn cmd_gggr(args: GggrArgs) -> anyhow::Result<bool> {
    let lambdas: Vec<Partition> = match &args.lambda {
        Some(s) => {
            let l = parse_lambda(s)?;
            if l.size() != args.n {
                bail!("{l} is not a partition of {}", args.n);
            }
            vec![l]
        }
        None => partitions_of(args.n),
    };
    let want = |c: GggrCheck| args.check == c || args.check == GggrCheck::All;
    let needs_q = [GggrCheck::Homomorphism, GggrCheck::Equivariance, GggrCheck::GammaConj, GggrCheck::MultOne]
        .iter()
        .any(|&c| want(c));
    let q = match (args.q, needs_q) {
        (Some(q), _) => Some(q),
        (None, true) if args.check != GggrCheck::All => bail!("this check needs --q"),
        _ => None,
    };
    let mut ok = true;
    let mut table = String::new();
    let mut value = json!({ "n": args.n });
    if want(GggrCheck::Parity) {
        let (checked, bad) = sweep_parity_symmetry(args.n);
        ok &= bad.is_empty();
        table += &format!("parity/symmetry: {checked} partitions, {} violations\n", bad.len());
        value["parity"] = json!({ "checked": checked, "violations": bad.iter().map(|b| b.to_string()).collect::<Vec<_>>() });
    }
    if let Some(q) = q {
        let mut rows = Vec::new();
        for l in &lambdas {
            let mut row = json!({ "lambda": l.to_string() });
            if want(GggrCheck::Homomorphism) || want(GggrCheck::Equivariance) {
                let case = SplitCase::new(q, l, 200_000)?;
                if want(GggrCheck::Homomorphism) {
                    let h = check_psi_homomorphism(&case);
                    ok &= h;
                    table += &format!("{l}: ψ_u homomorphism {h}\n");
                    row["homomorphism"] = json!(h);
                }
                if want(GggrCheck::Equivariance) {
                    let a = check_equivariance(&case, Sigma::Fp);
                    let b = check_equivariance(&case, Sigma::Gamma);
                    ok &= a && b;
                    table += &format!("{l}: equivariance F_p {a}, γ {b}\n");
                    row["equivariance"] = json!({ "fp": a, "gamma": b });
                }
            }
            if want(GggrCheck::GammaConj) {
                let w = check_gamma_conjugacy(args.n, q, l, args.common.limit)?;
                ok &= w.is_some();
                match &w {
                    Some(w) => table += &format!("{l}: γ(u) = g u g⁻¹ with u = {:?}, g = {:?}\n", w.u, w.g),
                    None => table += &format!("{l}: no γ-conjugating element found\n"),
                }
                row["gamma_witness"] = serde_json::to_value(&w)?;
            }
            rows.push(row);
        }
        value["classes"] = json!(rows);
        if want(GggrCheck::MultOne) {
            let r = check_multiplicity_one(args.kind, args.n, q, args.common.limit)?;
            ok &= r.pass();
            table += &format!("{}: multiplicity one {}\n", r.group, r.pass());
            for (l, m) in &r.rows {
                table += &format!("  {l}: {m:?}\n");
            }
            value["multiplicity_one"] = serde_json::to_value(&r)?;
        }
    }
    value["pass"] = json!(ok);
    emit(&args.common, &table, &value)?;
    Ok(ok)
}

fn exit_code(res: &anyhow::Result<bool>) -> u8 {
    match res {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Gggr(a) => cmd_gggr(a),
    };
    if let Err(e) = &res {
        eprintln!("error: {e:#}");
    }
    ExitCode::from(exit_code(&res))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(true)), 0);
        assert_eq!(exit_code(&Ok(false)), 1);
        assert_eq!(exit_code(&Err(anyhow::anyhow!("bad"))), 2);
    }

    #[test]
    fn eps_parsing() {
        assert_eq!(parse_eps("+1"), Ok(1));
        assert_eq!(parse_eps("-1"), Ok(-1));
        assert!(parse_eps("2").is_err());
    }
}

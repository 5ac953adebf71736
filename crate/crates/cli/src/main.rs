//! `hallcont`: compute Hall numbers, products and limit maps from JSON
//! documents, and run the randomized verification suites.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hallcont::contquiver::{build_quiver, contract, sigma, stretch, ContinuousQuiverA, FGRep, Partition};
use hallcont::exactalg::PrimeField;
use hallcont::finquiver::{Decomposer, IsoClass, QuiverA, RepPoint};
use hallcont::hallfq::{hall_polynomial_with_budget, HallAlgebra, HallFn, DEFAULT_HALL_BUDGET};
use hallcont::json::JsonDoc;
use hallcont::limits::{adapted_partition, cont_product, cont_product_at, psi_eval, theta_eval, ContHallFn, KbarElement};
use hallcont::verify::{run_suite, Suite};
use hallcont::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hallcont", version, about = "Hall algebras of type-A quivers and their continuous limits")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Field size for commands whose input does not carry one.
    #[arg(long, global = true)]
    q: Option<u32>,

    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of instances for `verify`.
    #[arg(long, global = true, default_value_t = 100)]
    count: usize,

    /// Cap on enumerated graded subspaces per Hall number.
    #[arg(long, global = true, default_value_t = DEFAULT_HALL_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Input document (defaults to stdin).
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,

    /// Output path, or `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    out: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// RepPoint → isomorphism class.
    Decompose,
    /// {quiver, total, quot, sub} → Hall number.
    HallNum,
    /// {f, g} → f ∗ g (f on the quotient, g on the sub).
    HallProduct,
    /// {quiver, total, quot, sub} → Hall polynomial in q.
    HallPoly,
    /// {quiver: continuous quiver, partition} → finite quiver and basepoints.
    QuiverOfPartition,
    /// {partition, rep} → class over the partition's quiver.
    Sigma,
    /// {coarse, fine, class} → class over the finer quiver.
    Stretch,
    /// {coarse, fine, class} → class over the coarser quiver, or null.
    Contract,
    /// {f, g, partition?} → product of continuous Hall functions.
    ContProduct,
    /// {f, partition} → Θ at the partition.
    Theta,
    /// {x, partition} → Ψ at the partition.
    PsiEval,
    /// Run a randomized verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Error(Error),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

/// A successful result: the JSON document and its table rendering.
struct Output {
    doc: Value,
    table: String,
}

fn out(doc: Value, table: impl Into<String>) -> Output {
    Output { doc, table: table.into() }
}

fn field_of(doc: &Value, key: &str) -> Result<Value, Error> {
    doc.get(key).cloned().ok_or_else(|| Error::Schema(format!("missing field {key:?}")))
}

fn get<T: JsonDoc>(doc: &Value, key: &str) -> Result<T, Error> {
    T::from_json(&field_of(doc, key)?)
}

fn prime(cli: &Cli, doc: &Value) -> Result<PrimeField, Error> {
    let p = match (cli.q, doc.get("p")) {
        (Some(q), _) => q,
        (None, Some(v)) => v
            .as_u64()
            .and_then(|p| u32::try_from(p).ok())
            .ok_or_else(|| Error::Schema("\"p\" must be a small positive integer".into()))?,
        (None, None) => return Err(Error::Precondition("no field size: pass --q or include \"p\"".into())),
    };
    PrimeField::new(p)
}

fn triple(doc: &Value) -> Result<(QuiverA, IsoClass, IsoClass, IsoClass), Error> {
    let quiver: QuiverA = get(doc, "quiver")?;
    let classes: (IsoClass, IsoClass, IsoClass) = (get(doc, "total")?, get(doc, "quot")?, get(doc, "sub")?);
    for c in [&classes.0, &classes.1, &classes.2] {
        c.check(&quiver).map_err(|e| Error::Schema(e.to_string()))?;
    }
    Ok((quiver, classes.0, classes.1, classes.2))
}

fn class_doc(c: &IsoClass) -> Value {
    json!({"class": c.to_json()})
}

fn run(cli: &Cli, doc: &Value) -> Result<Output, Failure> {
    Ok(match &cli.command {
        Command::Decompose => {
            let point = RepPoint::from_json(doc)?;
            let c = Decomposer::new(point.quiver(), point.field())?.decompose(&point)?;
            out(class_doc(&c), c.to_string())
        }
        Command::HallNum => {
            let (quiver, total, quot, sub) = triple(doc)?;
            let alg = HallAlgebra::with_budget(&quiver, prime(cli, doc)?, cli.budget)?;
            let k = alg.hall_number(&total, &quot, &sub)?;
            out(json!({"count": k}), k.to_string())
        }
        Command::HallProduct => {
            let (f, g): (HallFn, HallFn) = (get(doc, "f")?, get(doc, "g")?);
            f.check_compatible(&g)?;
            let h = HallAlgebra::with_budget(f.quiver(), f.field(), cli.budget)?.product(&f, &g)?;
            out(h.to_json(), h.to_string())
        }
        Command::HallPoly => {
            let (quiver, total, quot, sub) = triple(doc)?;
            let p = hall_polynomial_with_budget(&total, &quot, &sub, &quiver, cli.budget)?;
            out(json!({"poly": p.to_json()}), p.to_string())
        }
        Command::QuiverOfPartition => {
            let ar: ContinuousQuiverA = get(doc, "quiver")?;
            let part: Partition = get(doc, "partition")?;
            let pq = build_quiver(&ar, &part);
            let mut d = pq.to_json();
            d["warnings"] = json!(ar.warnings());
            let bases: Vec<String> = pq.basepoints.iter().map(|b| b.to_string()).collect();
            out(d, format!("{}\nbasepoints: {}", pq.quiver, bases.join(" ")))
        }
        Command::Sigma => {
            let part: Partition = get(doc, "partition")?;
            let rep: FGRep = get(doc, "rep")?;
            let c = sigma(&rep, &part)?;
            out(class_doc(&c), c.to_string())
        }
        Command::Stretch => {
            let (coarse, fine, c): (Partition, Partition, IsoClass) = (get(doc, "coarse")?, get(doc, "fine")?, get(doc, "class")?);
            let s = stretch(&c, &coarse, &fine)?;
            out(class_doc(&s), s.to_string())
        }
        Command::Contract => {
            let (coarse, fine, c): (Partition, Partition, IsoClass) = (get(doc, "coarse")?, get(doc, "fine")?, get(doc, "class")?);
            match contract(&c, &coarse, &fine)? {
                Some(d) => out(class_doc(&d), d.to_string()),
                None => out(json!({"class": null}), "none"),
            }
        }
        Command::ContProduct => {
            let (f, g): (ContHallFn, ContHallFn) = (get(doc, "f")?, get(doc, "g")?);
            let h = match doc.get("partition") {
                None | Some(Value::Null) => cont_product(&f, &g)?,
                Some(p) => {
                    let part = Partition::from_json(p)?;
                    let supp: Vec<FGRep> = f.support().into_iter().chain(g.support()).collect();
                    adapted_partition(&supp, Some(&part))?;
                    cont_product_at(&f, &g, &part)?
                }
            };
            out(h.to_json(), h.to_string())
        }
        Command::Theta => {
            let f: ContHallFn = get(doc, "f")?;
            let part: Partition = get(doc, "partition")?;
            let h = theta_eval(&f, &part)?;
            out(h.to_json(), h.to_string())
        }
        Command::PsiEval => {
            let x: KbarElement = get(doc, "x")?;
            let part: Partition = get(doc, "partition")?;
            let y = psi_eval(&x, &part)?;
            out(y.to_json(), y.to_string())
        }
        Command::Verify { suite } => {
            let r = run_suite(*suite, cli.seed, cli.count);
            let d = serde_json::to_value(&r).expect("reports serialize");
            if !r.ok() {
                return Err(Failure::Verification(d));
            }
            out(d, format!("{}\tseed={}\tcount={}\tpassed={}\tfailed={}", r.suite, r.seed, r.count, r.passed, r.failed))
        }
    })
}

fn read_input(cli: &Cli) -> Result<Value, Error> {
    if matches!(cli.command, Command::Verify { .. }) {
        return Ok(Value::Null);
    }
    let text = match &cli.input {
        Some(p) => fs::read_to_string(p).map_err(|e| Error::Schema(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Error::Schema(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("invalid JSON: {e}")))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_) => 2,
        Error::Resource(_) => 4,
        _ => 3,
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    if cli.out == "-" {
        let mut so = io::stdout().lock();
        so.write_all(text.as_bytes())?;
        so.write_all(b"\n")
    } else {
        fs::write(&cli.out, format!("{text}\n"))
    }
}

fn render(cli: &Cli, doc: &Value, table: &str) -> String {
    match cli.format {
        Format::Json => serde_json::to_string_pretty(doc).expect("JSON values serialize"),
        Format::Table => table.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = read_input(&cli).map_err(Failure::from).and_then(|doc| run(&cli, &doc));
    let (text, code) = match result {
        Ok(o) => (render(&cli, &o.doc, &o.table), 0),
        Err(Failure::Verification(d)) => (render(&cli, &d, &format!("verification failed: {d}")), 5),
        Err(Failure::Error(e)) => {
            let d = json!({"error": {"kind": e.kind(), "detail": e.to_string()}});
            (render(&cli, &d, &format!("error ({}): {e}", e.kind())), exit_code(&e))
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

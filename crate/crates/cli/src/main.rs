//! `leibniz-v3`: invariant tables, verification sweeps and element evaluation
//! for the variety generated by the Heisenberg-plus-polynomial Leibniz algebra.
//!
//! Exit status: 0 on success, 1 when a check fails (the first counterexample is
//! printed), 2 on usage errors.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use leibniz_v3::algebra::random::ElementSampler;
use leibniz_v3::invariants::{self, InvariantReport, Paired, Quantity};
use leibniz_v3::partitions::Partition;
use leibniz_v3::symbolic::catalog::{witness_polynomial, witness_substitution};
use leibniz_v3::symbolic::{
    evaluate, independence_certificate, search_substitutions, substitution_pool, CatalogId, MultiElement, Name,
    ShapeParams, Substitution,
};
use leibniz_v3::verify::{self, Check, Instance};

#[derive(Parser)]
#[command(name = "leibniz-v3", version, about = "Exact invariants and witness checks for the variety Ṽ₃")]
struct Cli {
    /// Output format. `json` prints one object per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    output: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Theorem1,
    Theorem2,
    Theorem3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Pool {
    Auto,
    Explicit,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of the irreducible module for a partition such as 3,2,1.
    Multiplicity {
        #[arg(value_parser = parse::<Partition>, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Colength in degree N, optionally checked by enumeration.
    Colength {
        n: u64,
        #[arg(long)]
        brute: bool,
    },
    /// Codimension in degree N.
    Codim { n: u64 },
    /// One record per degree for a counting quantity.
    Table {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// One of l_n, a, b, c, l2, l3, c_n.
        #[arg(long, value_parser = parse::<Quantity>)]
        quantity: Quantity,
    },
    /// Streams one PASS line per degree, stopping at the first failure.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long)]
        max_n: Option<u64>,
        /// Random substitutions per vanishing check (theorem1).
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Evaluates a catalog element, by default on its witness substitution.
    Eval {
        #[arg(long, value_parser = parse::<CatalogId>)]
        element: CatalogId,
        #[arg(long, value_parser = parse::<ShapeParams>)]
        params: ShapeParams,
        /// e.g. "x1=a + [t^2]; x2=b"
        #[arg(long, value_parser = parse::<Substitution>)]
        subst: Option<Substitution>,
    },
    /// Certifies linear independence of catalog elements.
    Independent {
        #[arg(long, value_delimiter = ' ', num_args = 1.., value_parser = parse::<CatalogId>)]
        elements: Vec<CatalogId>,
        #[arg(long, value_parser = parse::<ShapeParams>)]
        params: ShapeParams,
        #[arg(long, value_enum, default_value_t = Pool::Auto)]
        subst_pool: Pool,
        /// Substitutions for `--subst-pool explicit`; repeat the flag.
        #[arg(long, value_parser = parse::<Substitution>)]
        subst: Vec<Substitution>,
        /// Writes the full certificate as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Leibniz identity on all basis triples and K random triples.
    LeibnizCheck {
        #[arg(long)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse<T>(s: &str) -> Result<T, String>
where
    T: std::str::FromStr<Err = leibniz_v3::Error>,
{
    s.parse().map_err(|e: leibniz_v3::Error| e.to_string())
}

/// A formula value with its optional enumeration counterpart.
#[derive(Serialize)]
struct Record {
    quantity: String,
    input: String,
    formula: String,
    brute: Option<String>,
    agree: Option<bool>,
}

impl Record {
    fn single(quantity: Quantity, input: impl ToString, formula: &BigInt) -> Record {
        Record {
            quantity: quantity.to_string(),
            input: input.to_string(),
            formula: formula.to_string(),
            brute: None,
            agree: None,
        }
    }

    fn paired(quantity: Quantity, input: impl ToString, p: &Paired) -> Record {
        Record {
            brute: Some(p.brute.to_string()),
            agree: Some(p.agrees()),
            ..Record::single(quantity, input, &p.formula)
        }
    }

    fn from_report(r: &InvariantReport) -> Record {
        Record {
            quantity: r.quantity.to_string(),
            input: r.input.clone(),
            formula: r.formula_value.to_string(),
            brute: Some(r.brute_value.to_string()),
            agree: Some(r.agrees),
        }
    }

    fn agrees(&self) -> bool {
        self.agree != Some(false)
    }

    fn body(&self) -> String {
        match &self.brute {
            Some(b) => format!("formula={} brute={b} agree={}", self.formula, self.agrees()),
            None => self.formula.clone(),
        }
    }
}

#[derive(Serialize)]
struct CheckRow<'a> {
    status: &'static str,
    label: &'a str,
    detail: &'a str,
}

impl<'a> From<&'a Check> for CheckRow<'a> {
    fn from(c: &'a Check) -> Self {
        CheckRow {
            status: if c.passed { "PASS" } else { "FAIL" },
            label: &c.label,
            detail: &c.detail,
        }
    }
}

#[derive(Serialize)]
struct EvalRow {
    element: String,
    params: String,
    substitution: String,
    value: String,
}

#[derive(Serialize)]
struct IndependenceRow {
    elements: String,
    substitutions: usize,
    rank: usize,
    independent: bool,
    null_vector: Option<String>,
}

struct Out {
    format: Format,
    csv: Option<csv::Writer<io::Stdout>>,
}

impl Out {
    fn new(format: Format) -> Out {
        let csv = (format == Format::Csv).then(|| csv::Writer::from_writer(io::stdout()));
        Out { format, csv }
    }

    fn emit<R: Serialize>(&mut self, row: &R, pretty: impl FnOnce() -> String) -> io::Result<()> {
        let mut stdout = io::stdout();
        match self.format {
            Format::Pretty => writeln!(stdout, "{}", pretty()),
            Format::Json => {
                let line = serde_json::to_string(row).map_err(io::Error::other)?;
                writeln!(stdout, "{line}")
            }
            Format::Csv => {
                let w = self.csv.as_mut().expect("csv writer");
                w.serialize(row).map_err(io::Error::from)?;
                w.flush()
            }
        }
    }

    fn check(&mut self, c: &Check) -> io::Result<()> {
        self.emit(&CheckRow::from(c), || {
            format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.label, c.detail)
        })
    }
}

enum Failure {
    Check,
    Usage(String),
    /// stdout went away, e.g. piped into `head`
    Closed,
}

impl From<leibniz_v3::Error> for Failure {
    fn from(e: leibniz_v3::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        match e.kind() {
            io::ErrorKind::BrokenPipe => Failure::Closed,
            _ => Failure::Usage(format!("i/o error: {e}")),
        }
    }
}

type Run = Result<(), Failure>;

fn require(ok: bool) -> Run {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

/// Emits checks in order and stops after the first failure.
fn stream(out: &mut Out, checks: impl IntoIterator<Item = Result<Check, leibniz_v3::Error>>) -> Run {
    for c in checks {
        let c = c?;
        out.check(&c)?;
        require(c.passed)?;
    }
    Ok(())
}

fn verify_theorem(out: &mut Out, theorem: Theorem, max_n: Option<u64>, random: usize, seed: u64) -> Run {
    match theorem {
        Theorem::Theorem1 => {
            let max = max_n.unwrap_or(30);
            let max = u32::try_from(max).map_err(|_| Failure::Usage(format!("--max-n {max} is too large")))?;
            stream(out, (1..=max).map(|n| Ok(verify::multiplicity_sweep(n))))?;
            stream(out, verify::witness_suite(&[1, 2], random, seed)?.into_iter().map(Ok))
        }
        Theorem::Theorem2 => stream(out, (1..=max_n.unwrap_or(1000)).map(|n| Ok(verify::deviation(n)))),
        Theorem::Theorem3 => stream(out, (1..=max_n.unwrap_or(200)).map(verify::colength_tables)),
    }
}

fn eval(out: &mut Out, id: CatalogId, params: &ShapeParams, subst: Option<Substitution>) -> Run {
    let inst = Instance::new(id, params)?;
    let s = match subst {
        Some(s) => s,
        None => witness_substitution(id, &witness_polynomial(inst.degree))
            .ok_or_else(|| Failure::Usage(format!("{id} has no witness substitution; pass --subst")))?,
    };
    let v = evaluate(&inst.element, &s)?;
    let row = EvalRow {
        element: id.to_string(),
        params: params.to_string(),
        substitution: s.to_string(),
        value: v.to_string(),
    };
    out.emit(&row, || v.to_string())?;
    Ok(())
}

fn independent(
    out: &mut Out,
    ids: &[CatalogId],
    params: &ShapeParams,
    pool: Pool,
    explicit: Vec<Substitution>,
    certificate: Option<PathBuf>,
) -> Run {
    let members: Vec<Instance> = ids.iter().map(|&id| Instance::new(id, params)).collect::<Result<_, _>>()?;
    let elements: Vec<MultiElement> = members.iter().map(|m| m.element.clone()).collect();
    let subs = match pool {
        Pool::Explicit if explicit.is_empty() => {
            return Err(Failure::Usage("--subst-pool explicit needs at least one --subst".into()))
        }
        Pool::Explicit => explicit,
        Pool::Auto => {
            let degree = members.iter().map(|m| m.degree).max().unwrap_or(0);
            let mut gens: Vec<Name> = members.iter().flat_map(Instance::generators).collect();
            gens.sort();
            gens.dedup();
            search_substitutions(&elements, &gens, &substitution_pool(&witness_polynomial(degree)))?
        }
    };
    let labels: Vec<String> = members.iter().map(Instance::label).collect();
    let cert = independence_certificate(&labels, &elements, &subs)?;
    if let Some(path) = certificate {
        std::fs::write(&path, cert.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let row = IndependenceRow {
        elements: ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        substitutions: cert.substitutions.len(),
        rank: cert.rank,
        independent: cert.independent,
        null_vector: cert.null_vector.as_ref().map(|v| v.join(" ")),
    };
    out.emit(&row, || {
        let mut s = format!("rank={} of {} independent={}", cert.rank, ids.len(), cert.independent);
        for sub in &cert.substitutions {
            s += &format!("\n  {sub}");
        }
        if let Some(v) = &row.null_vector {
            s += &format!("\n  undetected combination: {v}");
        }
        s
    })?;
    require(cert.independent)
}

fn run(cli: Cli) -> Run {
    let mut out = Out::new(cli.output);
    match cli.command {
        Command::Multiplicity { partition } => {
            let r = Record::from_report(&InvariantReport::for_partition(&partition));
            out.emit(&r, || r.formula.clone())?;
            require(r.agrees())
        }
        Command::Colength { n, brute } => {
            let r = if brute {
                Record::from_report(&InvariantReport::for_degree(Quantity::Colength, n)?)
            } else {
                Record::single(Quantity::Colength, n, &invariants::colength_exact(n))
            };
            out.emit(&r, || r.body())?;
            require(r.agrees())
        }
        Command::Codim { n } => {
            let r = Record::single(Quantity::Codimension, n, &invariants::codimension(n)?.into());
            out.emit(&r, || r.body())?;
            Ok(())
        }
        Command::Table { from, to, quantity } => {
            if quantity == Quantity::Multiplicity {
                return Err(Failure::Usage("table: m_lambda is per partition; use `multiplicity`".into()));
            }
            for n in from..=to {
                let r = Record::paired(quantity, n, &pair(quantity, n)?);
                out.emit(&r, || format!("{quantity}({n}) {}", r.body()))?;
                require(r.agrees())?;
            }
            Ok(())
        }
        Command::Verify {
            theorem,
            max_n,
            random,
            seed,
        } => verify_theorem(&mut out, theorem, max_n, random, seed),
        Command::Eval { element, params, subst } => eval(&mut out, element, &params, subst),
        Command::Independent {
            elements,
            params,
            subst_pool,
            subst,
            certificate,
        } => independent(&mut out, &elements, &params, subst_pool, subst, certificate),
        Command::LeibnizCheck { random, seed } => {
            let basis = verify::leibniz_triples(&verify::leibniz_basis());
            let rand = verify::leibniz_random(random, seed, ElementSampler::new(6, 100));
            stream(&mut out, [Ok(basis), Ok(rand)])
        }
    }
}

fn pair(q: Quantity, n: u64) -> Result<Paired, leibniz_v3::Error> {
    let r = InvariantReport::for_degree(q, n)?;
    Ok(Paired {
        formula: r.formula_value,
        brute: r.brute_value,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

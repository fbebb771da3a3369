use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use super::format::{check_raw, parse_frl, parse_raw, render_frl, render_json, FrlError};
use crate::analyze::{
    comparability_quotient, conjugate_violation, decompose_mx, discriminator_violation,
    enumerate_mx, enumerate_mx_jobs, reconstruct_cocycle, url_flags, Scheme,
};
use crate::construct::{
    check_cocycle, cyclic_group, make_cocycle_extension, make_cyclic_url, make_mg, make_rab,
    CocycleData, Orient, ZKind, ZeroMonoid,
};
use crate::finalg::{FinRL, Relation, Table};
use crate::frames::check_fep_embedding;
use crate::varieties::{DownsetDesc, GroupSig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Frl,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "unilinear",
    version,
    about = "Finite residuated lattice workbench"
)]
pub struct Cli {
    /// Output format for every emitter.
    #[arg(long, global = true, value_enum, default_value_t = Format::Frl)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full law report; exit 1 if any law fails.
    Check { file: String },
    /// Build an explicit construction.
    Make {
        #[command(subcommand)]
        what: Make,
        /// Write to this file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Recover (A, kind) from an algebra on M_X.
    Decompose { file: String },
    /// Unilinearity, compactness, height and width.
    Flags { file: String },
    /// Evaluate the discriminator term on all triples.
    Discriminator { file: String },
    /// Conjugate equation schemes up to a fixed depth.
    Conjugates {
        file: String,
        #[arg(long, default_value = "srl")]
        scheme: Scheme,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Comparability quotient of a compact URL.
    Quotient { file: String },
    /// Rebuild a compact URL as a cocycle extension.
    Reconstruct { file: String },
    /// All residuated lattices on M_X up to isomorphism.
    Enumerate {
        #[arg(long)]
        x_size: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Residuated frame W_{A,B}, its Galois algebra and the embedding of B.
    Fep {
        #[arg(long)]
        algebra: String,
        /// Comma-separated element indices.
        #[arg(long)]
        subset: String,
        /// Emit the Galois algebra instead of the report.
        #[arg(long)]
        plus: bool,
    },
    /// Group signatures and downsets.
    Variety {
        #[command(subcommand)]
        op: Variety,
    },
}

#[derive(Subcommand, Debug)]
enum Make {
    /// M_{Z_n}; the 2-element Boolean algebra for n = 0.
    Mx {
        #[arg(long)]
        x_size: usize,
    },
    /// R_{A,B} with A = G ∪ {⊤} for the abelian group of the given factors.
    Rab {
        #[arg(long, default_value = "")]
        factors: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        kind: u8,
    },
    /// M_G for the abelian group of the given factors.
    Mg {
        #[arg(long, default_value = "")]
        factors: String,
    },
    /// The cyclic-monoid URL with index r and period s.
    Cyclic {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value = "up")]
        orient: Orient,
    },
    /// Trivial-data extension of an n-chain Heyting algebra by Z_k.
    Cocycle {
        #[arg(long, default_value_t = 2)]
        chain: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Variety {
    /// Largest exponent appearing in a signature.
    Exp { sig: String },
    /// Indices of the primes with nonzero torsion.
    Primes { sig: String },
    /// Signature order `a ≤ b`.
    Leq { a: String, b: String },
    /// Least upper bound of two signatures.
    Join { a: String, b: String },
    /// Greatest lower bound of two signatures.
    Meet { a: String, b: String },
    /// Whether a signature lies in a downset.
    Contains { downset: String, sig: String },
    /// Whether a downset is Z-closed; prints a violating pair if not.
    Zclosed { downset: String },
}

struct Failure {
    code: u8,
    msg: String,
}

fn malformed(msg: impl ToString) -> Failure {
    Failure {
        code: 2,
        msg: msg.to_string(),
    }
}

fn failed(msg: impl ToString) -> Failure {
    Failure {
        code: 1,
        msg: msg.to_string(),
    }
}

/// Text and JSON forms of one result, plus its exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: 0,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, file: &str) -> Result<String, Failure> {
        if file == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| malformed(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(file).map_err(|e| malformed(format!("{file}: {e}")))
        }
    }

    fn load(&mut self, file: &str) -> Result<FinRL, Failure> {
        parse_frl(&self.read(file)?).map_err(frl_failure)
    }
}

fn frl_failure(e: FrlError) -> Failure {
    malformed(e)
}

fn algebra_output(a: &FinRL) -> Output {
    Output::ok(render_frl(a), render_json(a))
}

fn join_usize(xs: &[usize], sep: &str) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn table_lines(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|r| join_usize(r, " ") + "\n").collect()
}

fn parse_factors(s: &str) -> Result<Vec<u64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| malformed(format!("bad factor {t:?}")))
        })
        .collect()
}

fn parse_subset(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| malformed(format!("bad index {t:?}"))))
        .collect()
}

fn heyting_chain(n: usize) -> Result<FinRL, Failure> {
    if n < 2 {
        return Err(malformed("chain needs at least 2 elements"));
    }
    FinRL::build(
        &Relation::from_fn(n, |x, y| x <= y),
        &Table::from_fn(n, |x, y| x.min(y)),
        n - 1,
    )
    .map_err(failed)
}

fn make(what: &Make) -> Result<Output, Failure> {
    let alg = match *what {
        Make::Mx { x_size: 0 } => {
            make_rab(&ZeroMonoid::trivial(), ZKind::Trivial).map_err(failed)?
        }
        Make::Mx { x_size: 1 } => make_mg(&[]).map_err(malformed)?,
        Make::Mx { x_size } => make_mg(&[x_size as u64]).map_err(malformed)?,
        Make::Rab { ref factors, kind } => {
            let factors = parse_factors(factors)?;
            let a = if factors.is_empty() {
                ZeroMonoid::trivial()
            } else {
                ZeroMonoid::abelian_with_zero(&factors).map_err(malformed)?
            };
            let kind = ZKind::from_tag(kind).ok_or_else(|| malformed("kind must be 0..3"))?;
            make_rab(&a, kind).map_err(failed)?
        }
        Make::Mg { ref factors } => make_mg(&parse_factors(factors)?).map_err(malformed)?,
        Make::Cyclic { r, s, orient } => make_cyclic_url(r, s, orient).map_err(malformed)?,
        Make::Cocycle { chain, k } => {
            if k == 0 {
                return Err(malformed("K needs at least one element"));
            }
            let d = CocycleData::trivial(heyting_chain(chain)?, cyclic_group(k), 0);
            let rep = check_cocycle(&d);
            if let Some(f) = rep.first_failure() {
                return Err(failed(format!("cocycle data fails {}", f.law)));
            }
            make_cocycle_extension(&d).map_err(failed)?
        }
    };
    Ok(algebra_output(&alg))
}

fn check(io: &mut Io, file: &str) -> Result<Output, Failure> {
    let raw = parse_raw(&io.read(file)?).map_err(frl_failure)?;
    let rep = check_raw(&raw);
    Ok(Output {
        text: rep.to_string(),
        json: json!({ "passed": rep.passed(), "results": rep.results }),
        code: if rep.passed() { 0 } else { 1 },
    })
}

fn decompose(a: &FinRL) -> Result<Output, Failure> {
    let d = decompose_mx(a).map_err(failed)?;
    let rows = d.a.table.to_rows();
    let text = format!(
        "kind {}\na_size {}\na_unit {}\na_zero {}\na_witness {}\nb_witness {}\na_mul\n{}",
        d.kind.tag(),
        d.a.size(),
        d.a.unit,
        d.a.zero,
        join_usize(&d.a_witness, " "),
        join_usize(&d.b_witness, " "),
        table_lines(&rows)
    );
    let json = json!({
        "kind": d.kind.tag(),
        "a_size": d.a.size(),
        "a_unit": d.a.unit,
        "a_zero": d.a.zero,
        "a_witness": d.a_witness,
        "b_witness": d.b_witness,
        "a_mul": rows,
    });
    Ok(Output::ok(text, json))
}

fn discriminator(a: &FinRL) -> Result<Output, Failure> {
    Ok(match discriminator_violation(a).map_err(failed)? {
        None => Output::ok(
            "discriminator=true\n".into(),
            json!({ "discriminator": true }),
        ),
        Some((w, v)) => Output::ok(
            format!(
                "discriminator=false\nwitness={}\nvalue={v}\n",
                join_usize(&w, " ")
            ),
            json!({ "discriminator": false, "witness": w, "value": v }),
        ),
    })
}

fn conjugates(a: &FinRL, scheme: Scheme, depth: usize) -> Result<Output, Failure> {
    if !a.is_bounded() {
        return Err(failed("conjugate schemes need a bounded algebra"));
    }
    Ok(match conjugate_violation(a, scheme, depth) {
        None => Output::ok(
            format!("scheme={scheme}\ndepth={depth}\nholds=true\n"),
            json!({ "scheme": scheme.to_string(), "depth": depth, "holds": true }),
        ),
        Some(w) => {
            let assign: Vec<String> = w
                .assignment
                .iter()
                .map(|(v, x)| format!("{v}:{x}"))
                .collect();
            Output::ok(
                format!(
                    "scheme={scheme}\ndepth={depth}\nholds=false\nequation={}\nassignment={}\nvalues={}\n",
                    w.equation,
                    assign.join(" "),
                    join_usize(&w.values, " ")
                ),
                json!({
                    "scheme": scheme.to_string(),
                    "depth": depth,
                    "holds": false,
                    "equation": w.equation,
                    "assignment": w.assignment,
                    "values": w.values,
                }),
            )
        }
    })
}

fn quotient(a: &FinRL) -> Result<Output, Failure> {
    let q = comparability_quotient(a).map_err(failed)?;
    let classes: Vec<String> = q.classes.iter().map(|c| join_usize(c, ",")).collect();
    let text = format!(
        "classes {}\nk_unit {}\nk\n{}congruence {}\ncancellative {}\nadmissible {}\nstrictly_admissible {}\nk_cancellative {}\n",
        classes.join(" "),
        q.k_unit,
        table_lines(&q.k),
        q.congruence,
        q.cancellative,
        q.admissible,
        q.strictly_admissible,
        q.k_cancellative
    );
    Ok(Output::ok(
        text,
        serde_json::to_value(&q).expect("plain data"),
    ))
}

fn reconstruct(a: &FinRL) -> Result<Output, Failure> {
    let rec = reconstruct_cocycle(a).map_err(failed)?;
    let d = &rec.data;
    let text = format!(
        "h_size {}\nk_size {}\nselection {}\nk\n{}phi\n{}f\n{}psi {}\n",
        d.a.size(),
        d.k_size(),
        join_usize(&rec.selection, " "),
        table_lines(&d.k.to_rows()),
        table_lines(&d.phi),
        table_lines(&d.f),
        join_usize(&rec.psi, " ")
    );
    let json = json!({
        "h_size": d.a.size(),
        "k_size": d.k_size(),
        "selection": rec.selection,
        "k": d.k.to_rows(),
        "phi": d.phi,
        "f": d.f,
        "psi": rec.psi,
    });
    Ok(Output::ok(text, json))
}

fn enumerate(
    x_size: usize,
    count_only: bool,
    jobs: usize,
    cap: Option<usize>,
) -> Result<Output, Failure> {
    let algs = if jobs > 1 {
        enumerate_mx_jobs(x_size, cap, jobs)
    } else {
        enumerate_mx(x_size, cap)
    }
    .map_err(failed)?;
    Ok(if count_only {
        Output::ok(format!("{}\n", algs.len()), json!({ "count": algs.len() }))
    } else {
        Output::ok(
            algs.iter().map(render_frl).collect(),
            Value::Array(algs.iter().map(render_json).collect()),
        )
    })
}

fn fep(a: &FinRL, subset: &str, plus: bool) -> Result<Output, Failure> {
    let b = parse_subset(subset)?;
    let (galois, rep) = check_fep_embedding(a, &b).map_err(failed)?;
    if plus {
        return Ok(algebra_output(galois.algebra()));
    }
    let failures: Vec<_> = rep.instances.iter().filter(|i| !i.preserved).collect();
    let images: Vec<String> = rep.images.iter().map(|(b, i)| format!("{b}:{i}")).collect();
    let text = format!(
        "b {}\nw {}\nw_plus_size {}\nw_plus_unilinear {}\nimages {}\ninjective {}\ninstances {}\nfailed {}\n",
        join_usize(&rep.b, " "),
        join_usize(&rep.w, " "),
        rep.w_plus_size,
        url_flags(galois.algebra()).is_unilinear,
        images.join(" "),
        rep.injective,
        rep.instances.len(),
        failures.len()
    );
    let json = json!({
        "b": rep.b,
        "w": rep.w,
        "w_plus_size": rep.w_plus_size,
        "w_plus_unilinear": url_flags(galois.algebra()).is_unilinear,
        "images": rep.images,
        "injective": rep.injective,
        "instances": rep.instances.len(),
        "failed": failures,
    });
    Ok(Output {
        text,
        json,
        code: if rep.ok() { 0 } else { 1 },
    })
}

fn sig(s: &str) -> Result<GroupSig, Failure> {
    s.parse().map_err(malformed)
}

fn downset(s: &str) -> Result<DownsetDesc, Failure> {
    s.parse().map_err(malformed)
}

fn variety(op: &Variety) -> Result<Output, Failure> {
    Ok(match op {
        Variety::Exp { sig: s } => {
            let e = sig(s)?.exp();
            Output::ok(format!("{e}\n"), json!({ "exp": e }))
        }
        Variety::Primes { sig: s } => {
            let p: Vec<usize> = sig(s)?.primes().into_iter().collect();
            Output::ok(format!("{}\n", join_usize(&p, " ")), json!({ "primes": p }))
        }
        Variety::Leq { a, b } => {
            let v = sig(a)?.leq(&sig(b)?);
            Output::ok(format!("{v}\n"), json!({ "leq": v }))
        }
        Variety::Join { a, b } => {
            let v = sig(a)?.join(&sig(b)?).to_string();
            Output::ok(format!("{v}\n"), json!({ "join": v }))
        }
        Variety::Meet { a, b } => {
            let v = sig(a)?.meet(&sig(b)?).to_string();
            Output::ok(format!("{v}\n"), json!({ "meet": v }))
        }
        Variety::Contains { downset: d, sig: s } => {
            let v = downset(d)?.contains(&sig(s)?);
            Output::ok(format!("{v}\n"), json!({ "contains": v }))
        }
        Variety::Zclosed { downset: d } => match downset(d)?.z_violation() {
            None => Output::ok("true\n".into(), json!({ "zclosed": true })),
            Some(v) => Output::ok(
                format!("false\na={}\nmissing={}\n", v.a, v.missing),
                json!({ "zclosed": false, "a": v.a.to_string(), "missing": v.missing.to_string() }),
            ),
        },
    })
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<Output, Failure> {
    match &cli.command {
        Command::Check { file } => check(io, file),
        Command::Make { what, .. } => make(what),
        Command::Decompose { file } => decompose(&io.load(file)?),
        Command::Flags { file } => {
            let f = url_flags(&io.load(file)?);
            let text = f.to_lines().iter().map(|l| format!("{l}\n")).collect();
            Ok(Output::ok(
                text,
                serde_json::to_value(&f).expect("plain data"),
            ))
        }
        Command::Discriminator { file } => discriminator(&io.load(file)?),
        Command::Conjugates {
            file,
            scheme,
            depth,
        } => conjugates(&io.load(file)?, *scheme, *depth),
        Command::Quotient { file } => quotient(&io.load(file)?),
        Command::Reconstruct { file } => reconstruct(&io.load(file)?),
        Command::Enumerate {
            x_size,
            count_only,
            jobs,
            cap,
        } => enumerate(*x_size, *count_only, *jobs, *cap),
        Command::Fep {
            algebra,
            subset,
            plus,
        } => fep(&io.load(algebra)?, subset, *plus),
        Command::Variety { op } => variety(op),
    }
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    let mut io = Io { stdin };
    match dispatch(&cli, &mut io) {
        Ok(out) => {
            let body = match cli.format {
                Format::Frl => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("plain data") + "\n",
            };
            let written = match &cli.command {
                Command::Make {
                    out: Some(path), ..
                } => std::fs::write(path, body).map_err(|e| e.to_string()),
                _ => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

//! Command-line front end. `run` parses arguments, dispatches to the library
//! and writes a text table or a JSON report.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::charvec::{self, characteristic_parity, Covector};
use crate::error::{Error, Result};
use crate::exact::{rat_to_string, signature, IntMatrix, Rational, SymGram};
use crate::glue::{self, TwoCopies};
use crate::linking::{self, DEFAULT_GAUSS_CAP};
use crate::surgery::{self, Knot, ObstructionReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "charform", version, about = "Characteristic covectors, linking pairings, unimodular gluing and surgery obstructions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct GramArg {
    /// Gram matrix file (text or JSON format).
    #[arg(long)]
    pub gram: PathBuf,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Minimal characteristic covector of a positive-definite form.
    MinChar(GramArg),
    /// Minimal characteristic square against the sharp upper bound.
    CheckBound(GramArg),
    /// Congruence classes of characteristic squares.
    Congruence {
        #[command(flatten)]
        gram: GramArg,
        /// Number of characteristic covectors to sample.
        #[arg(long, default_value_t = 12)]
        samples: usize,
    },
    /// Discriminant group and orthogonal decomposition of the linking pairing.
    Linking(GramArg),
    /// Gauss sum of an even lattice against the Milgram value.
    Gauss {
        #[command(flatten)]
        gram: GramArg,
        /// Largest discriminant group to sum over.
        #[arg(long, default_value_t = DEFAULT_GAUSS_CAP)]
        cap: u64,
    },
    /// Unimodular quaternionic overlattice of four copies.
    Glue4(GramArg),
    /// Unimodular overlattice of two copies, or the obstructing prime.
    Glue2(GramArg),
    /// d-invariants of integral surgery on an L-space knot.
    SurgeryD {
        #[arg(long)]
        knot: Knot,
        /// Surgery coefficient (nonzero, may be negative).
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Negative-definite bounding obstruction for positive integral surgeries.
    Obstruct {
        #[arg(long)]
        knot: Knot,
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        n: Option<u64>,
        /// Inclusive range of coefficients, `A..B`.
        #[arg(long)]
        range: Option<String>,
        /// Use the bound for the square-free part of `n`.
        #[arg(long)]
        squarefree: bool,
    },
    /// Obstruction verdicts for surgeries on a torus knot, with the range bounds.
    TorusTable {
        /// Torus parameters `p,q`.
        #[arg(long)]
        pq: String,
        /// Largest coefficient to tabulate (default `pq − 1`).
        #[arg(long)]
        nmax: Option<u64>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::MinChar(_) => "min-char",
            Command::CheckBound(_) => "check-bound",
            Command::Congruence { .. } => "congruence",
            Command::Linking(_) => "linking",
            Command::Gauss { .. } => "gauss",
            Command::Glue4(_) => "glue4",
            Command::Glue2(_) => "glue2",
            Command::SurgeryD { .. } => "surgery-d",
            Command::Obstruct { .. } => "obstruct",
            Command::TorusTable { .. } => "torus-table",
        }
    }
}

/// Parse a Gram matrix: either `n` followed by `n` rows of integers, or a JSON
/// object `{"n": .., "gram": [[..]]}`. Degenerate forms are rejected.
pub fn parse_gram(text: &str) -> Result<SymGram> {
    let trimmed = text.trim_start();
    let g = if trimmed.starts_with('{') { parse_gram_json(trimmed)? } else { parse_gram_text(text)? };
    if g.determinant().is_zero() {
        return Err(Error::Degenerate);
    }
    Ok(g)
}

fn perr(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn parse_gram_text(text: &str) -> Result<SymGram> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| perr("line 1", "empty input"))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| perr(format!("line {}", hl + 1), format!("expected the rank, found {:?}", header.trim())))?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut rows = Vec::with_capacity(n);
    for (ln, line) in lines {
        let loc = format!("line {}", ln + 1);
        if rows.len() == n {
            return Err(perr(loc, format!("extra row beyond the declared rank {n}")));
        }
        let row: Vec<BigInt> = line
            .split_whitespace()
            .enumerate()
            .map(|(c, t)| t.parse::<BigInt>().map_err(|_| perr(format!("{loc}, column {}", c + 1), format!("not an integer: {t:?}"))))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(perr(loc, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(perr("end of input", format!("expected {n} rows, found {}", rows.len())));
    }
    SymGram::new(IntMatrix::from_rows(&rows)?)
}

fn parse_gram_json(text: &str) -> Result<SymGram> {
    let v: Value = serde_json::from_str(text).map_err(|e| perr(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let rows = v.get("gram").and_then(Value::as_array).ok_or_else(|| perr("gram", "missing array field"))?;
    let parsed: Vec<Vec<BigInt>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.as_array().ok_or_else(|| perr(format!("gram[{i}]"), "row is not an array"))?;
            row.iter()
                .enumerate()
                .map(|(j, x)| x.as_i64().map(BigInt::from).ok_or_else(|| perr(format!("gram[{i}][{j}]"), format!("not an integer: {x}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    if let Some(n) = v.get("n") {
        let n = n.as_u64().ok_or_else(|| perr("n", "not a nonnegative integer"))?;
        if n as usize != parsed.len() {
            return Err(perr("n", format!("declared rank {n} but {} rows", parsed.len())));
        }
    }
    if parsed.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if let Some((i, r)) = parsed.iter().enumerate().find(|(_, r)| r.len() != parsed.len()) {
        return Err(perr(format!("gram[{i}]"), format!("expected {} entries, found {}", parsed.len(), r.len())));
    }
    SymGram::new(IntMatrix::from_rows(&parsed)?)
}

/// The text format read by `parse_gram`.
pub fn gram_to_text(g: &SymGram) -> String {
    let mut s = format!("{}\n", g.rank());
    for row in g.matrix().to_rows() {
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn rat_json(x: &Rational) -> Value {
    json!(rat_to_string(x))
}

fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

/// `{"n": .., "gram": [[..]]}`, readable by `parse_gram`.
pub fn gram_json(g: &SymGram) -> Value {
    let rows: Vec<Value> = g.matrix().to_rows().iter().map(|r| ints_json(r)).collect();
    json!({ "n": g.rank(), "gram": rows })
}

fn float12(x: f64) -> Value {
    let rounded: f64 = format!("{x:.12}").parse().expect("formatted float");
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

/// Command output: an ordered JSON object whose first field is the command name.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub fields: Map<String, Value>,
}

impl Report {
    fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        Report { fields }
    }

    fn set(&mut self, key: &str, v: Value) -> &mut Self {
        self.fields.insert(key.into(), v);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.fields).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.fields.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.fields {
            match v {
                Value::Array(items) if items.first().is_some_and(Value::is_object) => {
                    out.push_str(&format!("{k}:\n"));
                    out.push_str(&table(items));
                }
                Value::Object(m) if m.contains_key("gram") => {
                    out.push_str(&format!("{k}:\n"));
                    for row in m["gram"].as_array().into_iter().flatten() {
                        out.push_str(&format!("  {}\n", scalar(row)));
                    }
                }
                _ => out.push_str(&format!("{k:<width$}  {}\n", scalar(v))),
            }
        }
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => {
            let cells: Vec<String> = a.iter().map(scalar).collect();
            format!("[{}]", cells.join(" "))
        }
        Value::Object(m) => {
            let cells: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
            cells.join(" ")
        }
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table(items: &[Value]) -> String {
    let headers: Vec<String> = items[0].as_object().unwrap().keys().cloned().collect();
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|it| headers.iter().map(|h| it.get(h).map(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> =
        (0..headers.len()).map(|c| rows.iter().map(|r| r[c].len()).chain([headers[c].len()]).max().unwrap()).collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut s = line(&headers);
    for r in &rows {
        s.push_str(&line(r));
    }
    s
}

fn read_gram(arg: &GramArg) -> Result<SymGram> {
    let text = std::fs::read_to_string(&arg.gram)
        .map_err(|e| perr(arg.gram.display().to_string(), format!("cannot read: {e}")))?;
    parse_gram(&text)
}

fn parse_range(s: &str) -> Result<(u64, u64)> {
    let bad = || perr("--range", format!("expected A..B with 1 ≤ A ≤ B, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (u64, u64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn parse_pq(s: &str) -> Result<(u64, u64)> {
    let bad = || perr("--pq", format!("expected p,q, got {s:?}"));
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn obstruction_json(rep: &ObstructionReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("knot".into(), json!(rep.knot));
    m.insert("n".into(), json!(rep.n));
    m.insert("delta".into(), json!(rep.delta));
    m.insert("bound".into(), rat_json(&rep.bound));
    m.insert("max4d".into(), rat_json(&rep.max4d));
    m.insert("verdict".into(), json!(rep.verdict.as_str()));
    m.insert("witnesses".into(), json!(rep.witnesses));
    m.insert("hypothesis".into(), json!(rep.hypothesis));
    if let Some(note) = &rep.note {
        m.insert("note".into(), json!(note));
    }
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "t": r.t,
                "threshold": rat_json(&r.threshold),
                "d": rat_json(&r.d),
                "4d": rat_json(&r.four_d),
            })
        })
        .collect();
    m.insert("rows".into(), Value::Array(rows));
    m
}

/// Run one parsed command.
pub fn execute(cmd: &Command) -> Result<Report> {
    let mut rep = Report::new(cmd.name());
    match cmd {
        Command::MinChar(arg) => {
            let g = read_gram(arg)?;
            let c = charvec::min_characteristic(&g)?;
            rep.set("input", gram_json(&g))
                .set("rank", json!(g.rank()))
                .set("det", int_json(&g.determinant()))
                .set("min_square", rat_json(&c.square))
                .set("covector", ints_json(&c.coords))
                .set("formula", json!("minimum of ξ·ξ over characteristic covectors"));
        }
        Command::CheckBound(arg) => {
            let g = read_gram(arg)?;
            let b = charvec::check_main_bound(&g)?;
            rep.set("input", gram_json(&g))
                .set("rank", json!(b.rank))
                .set("delta", int_json(&b.delta))
                .set("min_square", rat_json(&b.min_square))
                .set("bound", rat_json(&b.bound))
                .set("extremal", json!(b.is_extremal))
                .set("equality", json!(b.is_equality()))
                .set("holds", json!(b.holds()))
                .set("minimizer", ints_json(&b.minimizer.coords))
                .set("formula", json!("ξ² ≤ n−1+1/δ (δ odd), n−1 (δ even)"));
        }
        Command::Congruence { gram, samples } => {
            let g = read_gram(gram)?;
            let m4 = charvec::congruence_mod4(&g)?;
            let m8 = if g.delta().is_odd() { Some(charvec::congruence_mod8(&g)?) } else { None };
            let sig = signature(&g)?;
            let parity = characteristic_parity(&g);
            let n = g.rank();
            let mut rows = Vec::new();
            let mut all_ok = true;
            let mut z = vec![0i64; n];
            // base parity vector plus 2·z, z running through {0, 1, −1}ⁿ
            for _ in 0..*samples {
                let coords: Vec<BigInt> =
                    parity.iter().zip(&z).map(|(&odd, &zi)| BigInt::from(i64::from(odd) + 2 * zi)).collect();
                let c = Covector::new(&g, coords)?;
                let ok4 = m4.contains(&c.square);
                let ok8 = m8.as_ref().map(|m| m.contains(&c.square));
                all_ok &= ok4 && ok8.unwrap_or(true);
                rows.push(json!({
                    "covector": ints_json(&c.coords),
                    "square": rat_json(&c.square),
                    "mod4": ok4,
                    "mod8": ok8,
                }));
                if !odometer(&mut z) {
                    break;
                }
            }
            rep.set("input", gram_json(&g))
                .set("signature", json!(sig.sigma()))
                .set("delta", int_json(&g.delta()))
                .set("mod4", json!({ "residue": rat_json(&m4.residue), "modulus": rat_json(&m4.modulus) }))
                .set(
                    "mod8",
                    m8.as_ref()
                        .map(|m| json!({ "residue": rat_json(&m.residue), "modulus": rat_json(&m.modulus) }))
                        .unwrap_or(Value::Null),
                )
                .set("all_satisfied", json!(all_ok))
                .set("samples", Value::Array(rows));
        }
        Command::Linking(arg) => {
            let g = read_gram(arg)?;
            let grp = linking::discriminant_group(&g)?;
            let blocks = linking::decompose(&g)?;
            let rows: Vec<Value> = blocks
                .iter()
                .map(|b| {
                    json!({
                        "label": b.label(),
                        "prime": b.prime,
                        "exponent": b.exponent,
                        "squares": b.squares.iter().map(rat_json).collect::<Vec<_>>(),
                        "cross": b.cross.as_ref().map(rat_json),
                    })
                })
                .collect();
            rep.set("input", gram_json(&g))
                .set("order", int_json(&grp.order()))
                .set("invariants", ints_json(&grp.orders))
                .set("even", json!(g.is_even()))
                .set("blocks", Value::Array(rows));
        }
        Command::Gauss { gram, cap } => {
            let g = read_gram(gram)?;
            let s = linking::gauss_sum_milgram(&g, *cap)?;
            rep.set("input", gram_json(&g))
                .set("group_order", int_json(&s.group_order))
                .set("signature", json!(s.sigma))
                .set("re", float12(s.value.re))
                .set("im", float12(s.value.im))
                .set("expected_re", float12(s.expected.re))
                .set("expected_im", float12(s.expected.im))
                .set("deviation", float12(s.deviation))
                .set("milgram", json!(s.milgram_ok))
                .set("formula", json!("|L′/L|^{−1/2} Σ exp(πi x²) = exp(2πiσ/8)"));
        }
        Command::Glue4(arg) => {
            let g = read_gram(arg)?;
            let four = glue::embed_four_copies(&g)?;
            let u = &four.unimodular.gram;
            let quaternionic = glue::verify_quaternionic(u, &four.action)?;
            let steps: Vec<Value> = four
                .chains
                .iter()
                .flat_map(|c| c.steps.iter().map(move |s| json!({ "stage": c.stage, "prime": s.prime, "index": s.index })))
                .collect();
            rep.set("input", gram_json(&g))
                .set("rank", json!(u.rank()))
                .set("det", int_json(&u.determinant()))
                .set("index", int_json(&four.index))
                .set("quaternionic", json!(quaternionic))
                .set("even", json!(u.is_even()))
                .set("steps", Value::Array(steps))
                .set("unimodular", gram_json(u));
        }
        Command::Glue2(arg) => {
            let g = read_gram(arg)?;
            rep.set("input", gram_json(&g)).set("condition", json!(glue::two_copy_condition(&g.delta())?));
            match glue::embed_two_copies(&g)? {
                TwoCopies::Embedded { lattice, .. } => {
                    rep.set("embedded", json!(true))
                        .set("rank", json!(lattice.gram.rank()))
                        .set("det", int_json(&lattice.gram.determinant()))
                        .set("index", int_json(&lattice.index))
                        .set("unimodular", gram_json(&lattice.gram));
                }
                TwoCopies::Obstructed { prime } => {
                    rep.set("embedded", json!(false)).set("obstructing_prime", json!(prime));
                }
            }
        }
        Command::SurgeryD { knot, n } => {
            if *n == 0 {
                return Err(Error::pre("surgery coefficient must be nonzero"));
            }
            let half = (n.unsigned_abs() / 2) as i64;
            let rows: Vec<Value> = (0..=half)
                .map(|i| {
                    let d = surgery::d_surgery(knot, *n, i)?;
                    Ok(json!({ "i": i, "t": knot.torsion(i), "d": rat_json(&d), "4d": rat_json(&(d * Rational::from_integer(4.into()))) }))
                })
                .collect::<Result<_>>()?;
            rep.set("knot", json!(knot.to_string()))
                .set("n", json!(n))
                .set("alexander", json!(knot.alexander()?.coeffs()))
                .set("formula", json!("d(K_n,i) = d(U_n,i) − 2t_i; d(K_−n,i) = −d(U_n,i)"))
                .set("rows", Value::Array(rows));
        }
        Command::Obstruct { knot, n, range, squarefree } => {
            let run = |m: u64| {
                if *squarefree {
                    surgery::obstruct_squarefree(knot, m)
                } else {
                    surgery::obstruct_integer_surgery(knot, m)
                }
            };
            rep.set("variant", json!(if *squarefree { "squarefree" } else { "integer" }));
            match (n, range) {
                (Some(m), _) => {
                    for (k, v) in obstruction_json(&run(*m)?) {
                        rep.set(&k, v);
                    }
                }
                (None, Some(r)) => {
                    let (a, b) = parse_range(r)?;
                    let rows: Vec<Value> = (a..=b)
                        .map(|m| {
                            let o = run(m)?;
                            Ok(json!({
                                "n": m,
                                "bound": rat_json(&o.bound),
                                "max4d": rat_json(&o.max4d),
                                "verdict": o.verdict.as_str(),
                                "witnesses": o.witnesses,
                            }))
                        })
                        .collect::<Result<_>>()?;
                    rep.set("knot", json!(knot.to_string()))
                        .set("range", json!(format!("{a}..{b}")))
                        .set("hypothesis", json!(surgery::HYPOTHESIS))
                        .set("rows", Value::Array(rows));
                }
                (None, None) => return Err(Error::pre("one of --n or --range is required")),
            }
        }
        Command::TorusTable { pq, nmax } => {
            let (p, q) = parse_pq(pq)?;
            let knot = Knot::torus(p, q)?;
            let nmax = nmax.unwrap_or(p * q - 1);
            let mut run_end = 0;
            let mut rows = Vec::new();
            for m in 1..=nmax {
                let o = surgery::obstruct_integer_surgery(&knot, m)?;
                if o.verdict.is_obstructed() && run_end == m - 1 {
                    run_end = m;
                }
                rows.push(json!({
                    "n": m,
                    "max4d": rat_json(&o.max4d),
                    "bound": rat_json(&o.bound),
                    "verdict": o.verdict.as_str(),
                }));
            }
            let range = surgery::torus_obstruction_range(p, q)?;
            rep.set("knot", json!(knot.to_string()))
                .set("nmax", json!(nmax))
                .set("obstructed_range", if run_end > 0 { json!(format!("1..{run_end}")) } else { Value::Null })
                .set("exact_max_n", json!(range.exact_max_n))
                .set("closed_form_max_n", json!(range.closed_form_max_n))
                .set("headline_max_n", json!(range.headline_max_n))
                .set("ordered", json!(range.ordered()))
                .set("hypothesis", json!(surgery::HYPOTHESIS))
                .set("rows", Value::Array(rows));
        }
    }
    Ok(rep)
}

/// Advance `z` through `{0, 1, −1}ⁿ`; false once every value has been visited.
fn odometer(z: &mut [i64]) -> bool {
    for zi in z.iter_mut() {
        *zi = match *zi {
            0 => 1,
            1 => -1,
            _ => 0,
        };
        if *zi != 0 {
            return true;
        }
    }
    false
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Inconsistent(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}

/// Parse `args` (including the program name), execute and write the report.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(rep) => {
            let _ = out.write_all(rep.emit(cli.format).as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 when a verification
//! finds the closed form and the enumeration disagreeing.

mod input;

pub use input::{load_code, parse_code, parse_modulus};

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::census::{self, Caps};
use crate::code::{self, LinearCode};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::formulas::{self, CountQuery, GroupKind};
use crate::matrix::{gram, InnerProduct, Matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hullmass",
    version,
    about = "Count linear codes by Hermitian or symplectic hull dimension",
    long_about = "Count linear codes by Hermitian or symplectic hull dimension.\n\n\
        --q is always the base parameter: Hermitian codes live over GF(q²), \
        symplectic codes over GF(q). --n is the Hermitian length or the \
        symplectic half-length (codes of length 2n)."
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Inner {
    Hermitian,
    Symplectic,
}

impl From<Inner> for InnerProduct {
    fn from(i: Inner) -> Self {
        match i {
            Inner::Hermitian => InnerProduct::Hermitian,
            Inner::Symplectic => InnerProduct::Symplectic,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Unitary,
    Symplectic,
}

impl From<Kind> for GroupKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Unitary => GroupKind::Unitary,
            Kind::Symplectic => GroupKind::Symplectic,
        }
    }
}

#[derive(Args, Debug)]
struct Shape {
    #[arg(long, value_enum)]
    inner: Inner,
    /// Base parameter (Hermitian codes are over GF(q²)).
    #[arg(long)]
    q: u64,
    /// Hermitian length, or symplectic half-length.
    #[arg(long)]
    n: u32,
    /// Code dimension.
    #[arg(long)]
    k: u32,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Most codes an enumeration may visit.
    #[arg(long, default_value_t = Caps::default().codes)]
    max_codes: u64,
    /// Most candidate matrices a group enumeration may stand for.
    #[arg(long, default_value_t = Caps::default().group_candidates)]
    max_group: u64,
    /// Most coordinate permutations a classification may scan.
    #[arg(long, default_value_t = Caps::default().permutations)]
    max_perms: u64,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            codes: self.max_codes,
            group_candidates: self.max_group,
            permutations: self.max_perms,
        }
    }
}

#[derive(Args, Debug)]
struct CodeFile {
    /// Generator-matrix file (`q=<order> n=<length> k=<dim>` header, then rows).
    path: PathBuf,
    /// Defining polynomial of the field, low-to-high, e.g. `1,1,0,1`.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of codes with the given hull dimension, from the closed form.
    Mass {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        ell: u32,
    },
    /// Enumerate every code of the shape and tally hull dimensions.
    Census {
        #[command(flatten)]
        shape: Shape,
        /// Symplectic only: count self-orthogonal codes containing this
        /// vector (comma-separated) instead.
        #[arg(long)]
        contains: Option<String>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Classify codes with hull dimension ell up to coordinate permutation.
    Classify {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        ell: u32,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Hull dimensions and properties of a code read from a file.
    Analyze {
        #[command(flatten)]
        file: CodeFile,
        /// Restrict to one inner product (default: every applicable one).
        #[arg(long, value_enum)]
        inner: Option<Inner>,
    },
    /// Hull basis, LCD complement, and (for LCD codes) the normal-form basis.
    Basis {
        #[command(flatten)]
        file: CodeFile,
        #[arg(long, value_enum)]
        inner: Inner,
    },
    /// Form-preserving matrix carrying one LCD code onto another.
    Transporter {
        from: PathBuf,
        to: PathBuf,
        #[arg(long, value_enum)]
        inner: Inner,
        #[arg(long)]
        modulus: Option<String>,
    },
    /// Limiting density of hull dimension ell next to the finite-size ratio.
    Limits {
        #[arg(long, value_enum)]
        inner: Inner,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        /// Finite size to compare with (Hermitian length / symplectic half-length).
        #[arg(long, default_value_t = 40)]
        n: u32,
        /// Finite dimension (default: half the length, adjusted to the parity
        /// of ell for symplectic codes).
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Check the diagonal-equation counts against explicit Jacobi sums.
    Jacobi {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = formulas::DEFAULT_JACOBI_BUDGET)]
        budget: u64,
    },
    /// Order of U_n(q²) or Sp_2n(q); optionally checked by enumeration.
    Group {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        /// Also enumerate the group.
        #[arg(long)]
        enumerate: bool,
        /// Also compute orbit and stabilizer of the reference LCD code of
        /// this (half-)dimension.
        #[arg(long)]
        stabilizer: Option<u32>,
        #[command(flatten)]
        caps: CapArgs,
    },
}

struct Outcome {
    text: String,
    json: Value,
    csv: Vec<Vec<String>>,
    ok: bool,
}

impl Outcome {
    fn new(text: String, json: Value, csv: Vec<Vec<String>>) -> Self {
        Outcome {
            text,
            json,
            csv,
            ok: true,
        }
    }

    fn verified(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match cli.format {
        Format::Text => write!(out, "{}", outcome.text).map_err(|e| e.to_string()),
        Format::Json => serde_json::to_writer_pretty(&mut *out, &outcome.json)
            .map_err(|e| e.to_string())
            .and_then(|_| writeln!(out).map_err(|e| e.to_string())),
        Format::Csv => write_csv(out, &outcome.csv),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    if outcome.ok {
        EXIT_OK
    } else {
        let _ = writeln!(err, "mismatch: enumeration and closed form disagree");
        EXIT_MISMATCH
    }
}

fn write_csv(out: &mut dyn Write, rows: &[Vec<String>]) -> std::result::Result<(), String> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.write_record(r).map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}

fn s(v: impl ToString) -> String {
    v.to_string()
}

fn row_text(row: &[Elem]) -> String {
    row.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn matrix_text(m: &Matrix) -> String {
    (0..m.rows())
        .map(|i| row_text(m.row(i)))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|v| json!(v.to_string())).collect()))
            .collect(),
    )
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

fn modulus_arg(m: &Option<String>) -> Result<Option<Vec<u32>>> {
    m.as_deref().map(parse_modulus).transpose()
}

fn query_json(q: &CountQuery) -> Value {
    json!({
        "inner": q.inner.to_string(),
        "q": s(q.q),
        "n": s(q.n),
        "k": s(q.k),
        "ell": s(q.ell),
    })
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Mass { shape, ell } => {
            let q = CountQuery::new(shape.inner.into(), shape.q, shape.n, shape.k, *ell);
            let r = formulas::hull_mass(&q)?;
            Ok(Outcome::new(
                format!("{}\n", r.count),
                json!({ "query": query_json(&q), "count": s(&r.count), "formula": s(r.formula) }),
                vec![
                    vec![
                        s("inner"),
                        s("q"),
                        s("n"),
                        s("k"),
                        s("ell"),
                        s("count"),
                        s("formula"),
                    ],
                    vec![
                        s(q.inner),
                        s(q.q),
                        s(q.n),
                        s(q.k),
                        s(q.ell),
                        s(&r.count),
                        s(r.formula),
                    ],
                ],
            ))
        }
        Command::Census {
            shape,
            contains: Some(u),
            caps,
        } => {
            if InnerProduct::from(shape.inner) != InnerProduct::Symplectic {
                return Err(Error::InvalidParameters(
                    "--contains applies to symplectic censuses".into(),
                ));
            }
            let u: Vec<Elem> = u
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<Elem>()
                        .map_err(|_| Error::InvalidParameters(format!("bad vector entry {t:?}")))
                })
                .collect::<Result<_>>()?;
            let enumerated =
                census::sso_containing_census(shape.q, shape.n, shape.k, &u, &caps.caps())?;
            let formula = formulas::sso_containing_count(shape.q, shape.n, shape.k)?;
            let ok = formula == BigUint::from(enumerated);
            let vector = row_text(&u);
            Ok(Outcome::new(
                format!("self-orthogonal codes containing ({vector}): {enumerated} {formula} {}\n", verdict(ok)),
                json!({
                    "query": { "inner": "symplectic", "q": s(shape.q), "n": s(shape.n), "k": s(shape.k) },
                    "contains": u.iter().map(s).collect::<Vec<_>>(),
                    "enumerated": s(enumerated),
                    "formula": s(&formula),
                    "match": ok,
                }),
                vec![
                    vec![s("contains"), s("enumerated"), s("formula"), s("match")],
                    vec![vector, s(enumerated), s(&formula), s(ok)],
                ],
            )
            .verified(ok))
        }
        Command::Census {
            shape,
            contains: None,
            caps,
        } => {
            let r =
                census::hull_census(shape.inner.into(), shape.q, shape.n, shape.k, &caps.caps())?;
            let mut text = format!(
                "{} census: q={} length={} k={} ({} codes)\nell enumerated formula match\n",
                r.inner, r.q, r.length, r.k, r.total
            );
            let mut csv = vec![vec![s("ell"), s("enumerated"), s("formula"), s("match")]];
            for row in &r.rows {
                text += &format!(
                    "{} {} {} {}\n",
                    row.ell,
                    row.enumerated,
                    row.formula,
                    verdict(row.matches)
                );
                csv.push(vec![
                    s(row.ell),
                    s(row.enumerated),
                    s(&row.formula),
                    s(row.matches),
                ]);
            }
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    json!({ "ell": s(row.ell), "enumerated": s(row.enumerated), "formula": s(&row.formula), "match": row.matches })
                })
                .collect();
            let query = json!({ "inner": s(r.inner), "q": s(r.q), "n": s(r.n), "k": s(r.k), "length": s(r.length) });
            Ok(Outcome::new(
                text,
                json!({ "query": query, "rows": rows, "total": s(r.total) }),
                csv,
            )
            .verified(r.all_match()))
        }
        Command::Classify { shape, ell, caps } => {
            let r = census::classify(
                shape.inner.into(),
                shape.q,
                shape.n,
                shape.k,
                *ell,
                &caps.caps(),
            )?;
            let ok = r.matches();
            let mut text = format!(
                "{} classes\ngenerator | aut_order | class_size\n",
                r.classes.len()
            );
            let mut csv = vec![vec![s("generator"), s("aut_order"), s("class_size")]];
            let mut classes = Vec::new();
            for c in &r.classes {
                let g = matrix_text(c.representative.generator());
                text += &format!("{g} | {} | {}\n", c.aut_order, c.class_size);
                csv.push(vec![g, s(c.aut_order), s(c.class_size)]);
                classes.push(json!({
                    "generator": matrix_json(c.representative.generator()),
                    "aut_order": s(c.aut_order),
                    "class_size": s(c.class_size),
                }));
            }
            text += &format!(
                "mass: {} (sum of length!/|Aut|) vs {} (closed form), {} enumerated: {}\n",
                r.mass_lhs,
                r.mass_rhs,
                r.census_count,
                verdict(ok)
            );
            Ok(Outcome::new(
                text,
                json!({
                    "classes": classes,
                    "mass_lhs": s(&r.mass_lhs),
                    "mass_rhs": s(&r.mass_rhs),
                    "enumerated": s(r.census_count),
                    "match": ok,
                }),
                csv,
            )
            .verified(ok))
        }
        Command::Analyze { file, inner } => {
            let modulus = modulus_arg(&file.modulus)?;
            let c = load_code(&file.path, modulus.as_deref())?;
            analyze(&c, inner.map(Into::into))
        }
        Command::Basis { file, inner } => {
            let modulus = modulus_arg(&file.modulus)?;
            let c = load_code(&file.path, modulus.as_deref())?;
            basis(&c, (*inner).into())
        }
        Command::Transporter {
            from,
            to,
            inner,
            modulus,
        } => {
            let modulus = modulus_arg(modulus)?;
            let c1 = load_code(from, modulus.as_deref())?;
            let c2 = load_code(to, modulus.as_deref())?;
            let inner: InnerProduct = (*inner).into();
            let q = code::transporter(&c1, &c2, inner)?;
            let carries = c1.transform(&q) == c2;
            let form = match inner {
                InnerProduct::Hermitian => Matrix::identity(c1.field(), c1.length()),
                InnerProduct::Symplectic => Matrix::omega(c1.field(), c1.length() / 2),
            };
            let preserves = gram(&q, inner)? == form;
            let ok = carries && preserves;
            let mut text = String::new();
            for i in 0..q.rows() {
                text += &row_text(q.row(i));
                text += "\n";
            }
            text += &format!("carries code: {carries}\npreserves form: {preserves}\n");
            let csv = (0..q.rows())
                .map(|i| q.row(i).iter().map(s).collect())
                .collect();
            Ok(Outcome::new(
                text,
                json!({ "matrix": matrix_json(&q), "carries_code": carries, "preserves_form": preserves }),
                csv,
            )
            .verified(ok))
        }
        Command::Limits {
            inner,
            q,
            ell,
            n,
            k,
            tolerance,
        } => limits((*inner).into(), *q, *ell, *n, *k, *tolerance),
        Command::Jacobi { q, n, budget } => {
            let r = formulas::jacobi_sum_check(*q, *n, *budget)?;
            let z = BigUint::try_from(r.lhs_zero_sum.clone()).ok() == Some(r.rhs_zero.clone());
            let o = BigUint::try_from(r.lhs_one_sum.clone()).ok() == Some(r.rhs_one.clone());
            Ok(Outcome::new(
                format!(
                    "a = 0: character sum {} closed form {} {}\na = 1: character sum {} closed form {} {}\n",
                    r.lhs_zero_sum,
                    r.rhs_zero,
                    verdict(z),
                    r.lhs_one_sum,
                    r.rhs_one,
                    verdict(o)
                ),
                json!({
                    "q": s(q), "n": s(n),
                    "lhs_zero_sum": s(&r.lhs_zero_sum), "rhs_zero": s(&r.rhs_zero),
                    "lhs_one_sum": s(&r.lhs_one_sum), "rhs_one": s(&r.rhs_one),
                    "match": z && o,
                }),
                vec![
                    vec![s("a"), s("character_sum"), s("closed_form"), s("match")],
                    vec![s(0), s(&r.lhs_zero_sum), s(&r.rhs_zero), s(z)],
                    vec![s(1), s(&r.lhs_one_sum), s(&r.rhs_one), s(o)],
                ],
            )
            .verified(r.holds()))
        }
        Command::Group {
            kind,
            n,
            q,
            enumerate,
            stabilizer,
            caps,
        } => group(
            (*kind).into(),
            *n,
            *q,
            *enumerate,
            *stabilizer,
            &caps.caps(),
        ),
    }
}

fn analyze(c: &LinearCode, only: Option<InnerProduct>) -> Result<Outcome> {
    let f = c.field();
    let mut text = format!(
        "field GF({})\nlength {}\ndimension {}\n",
        f.order(),
        c.length(),
        c.dimension()
    );
    let mut forms = serde_json::Map::new();
    let mut csv = vec![vec![
        s("inner"),
        s("hull_dimension"),
        s("lcd"),
        s("self_orthogonal"),
    ]];
    let candidates = match only {
        Some(i) => vec![i],
        None => {
            let mut v = Vec::new();
            if f.base_order().is_some() {
                v.push(InnerProduct::Hermitian);
            }
            if c.length().is_multiple_of(2) {
                v.push(InnerProduct::Symplectic);
            }
            v
        }
    };
    for inner in candidates {
        let ell = code::hull_dimension(c, inner)?;
        let lcd = ell == 0;
        let so = ell == c.dimension();
        text += &format!(
            "{inner} hull dimension {ell}\n{inner} lcd {lcd}\n{inner} self-orthogonal {so}\n"
        );
        forms.insert(
            inner.to_string(),
            json!({ "hull_dimension": s(ell), "lcd": lcd, "self_orthogonal": so }),
        );
        csv.push(vec![s(inner), s(ell), s(lcd), s(so)]);
    }
    Ok(Outcome::new(
        text,
        json!({
            "field_order": s(f.order()),
            "length": s(c.length()),
            "dimension": s(c.dimension()),
            "generator": matrix_json(c.generator()),
            "hulls": forms,
        }),
        csv,
    ))
}

fn basis(c: &LinearCode, inner: InnerProduct) -> Result<Outcome> {
    let h = code::hull(c, inner)?;
    let mut text = format!("hull dimension {}\nhull basis:\n", h.dimension);
    let mut csv = vec![vec![s("part"), s("row")]];
    let mut push = |text: &mut String, part: &str, m: &Matrix| {
        for i in 0..m.rows() {
            *text += &format!("  {}\n", row_text(m.row(i)));
            csv.push(vec![s(part), row_text(m.row(i))]);
        }
    };
    push(&mut text, "hull", &h.basis);
    text += "lcd complement:\n";
    push(&mut text, "complement", h.complement.generator());
    let normal = if h.dimension == 0 {
        let m = match inner {
            InnerProduct::Hermitian => code::hermitian_normal_form(c)?,
            InnerProduct::Symplectic => code::symplectic_basis(c)?,
        };
        text += "normal-form basis:\n";
        push(&mut text, "normal", &m);
        matrix_json(&m)
    } else {
        Value::Null
    };
    Ok(Outcome::new(
        text,
        json!({
            "inner": s(inner),
            "hull_dimension": s(h.dimension),
            "hull_basis": matrix_json(&h.basis),
            "complement": matrix_json(h.complement.generator()),
            "normal_form": normal,
        }),
        csv,
    ))
}

fn decimals(tolerance: f64) -> usize {
    ((-tolerance.log10()).ceil().max(0.0) as usize + 3).min(60)
}

fn limits(
    inner: InnerProduct,
    q: u64,
    ell: u32,
    n: u32,
    k: Option<u32>,
    tolerance: f64,
) -> Result<Outcome> {
    let est = formulas::limit_density(inner, q, ell, tolerance)?;
    let length = CountQuery::new(inner, q, n, 0, 0).length();
    let k = k.unwrap_or_else(|| {
        let half = length / 2;
        match inner {
            InnerProduct::Symplectic if (half + ell) % 2 == 1 => half + 1,
            _ => half,
        }
    });
    let query = CountQuery::new(inner, q, n, k, ell);
    let finite = formulas::finite_ratio(&query)?;
    let limit = est.to_f64();
    let diff = finite - limit;
    let digits = decimals(tolerance);
    let limit_text = est.to_decimal(digits);
    Ok(Outcome::new(
        format!(
            "limit      {limit_text}\nerror bound {:.3e}\nfinite     {finite:.prec$} (length {length}, k {k})\ndifference {diff:.3e}\n",
            est.error_bound,
            prec = digits.min(17)
        ),
        json!({
            "inner": s(inner), "q": s(q), "ell": s(ell),
            "limit": limit_text,
            "error_bound": s(format!("{:e}", est.error_bound)),
            "finite": { "n": s(n), "k": s(k), "length": s(length), "ratio": s(finite) },
            "difference": s(diff),
        }),
        vec![
            vec![s("inner"), s("q"), s("ell"), s("limit"), s("length"), s("k"), s("finite"), s("difference")],
            vec![s(inner), s(q), s(ell), limit_text.clone(), s(length), s(k), s(finite), s(diff)],
        ],
    ))
}

fn group(
    kind: GroupKind,
    n: u32,
    q: u64,
    enumerate: bool,
    stabilizer: Option<u32>,
    caps: &Caps,
) -> Result<Outcome> {
    if crate::field::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    let order = formulas::group_order(kind, n, q);
    let mut text = format!("{order}\n");
    let mut js = json!({ "kind": s(kind), "n": s(n), "q": s(q), "order": s(&order) });
    let mut csv = vec![vec![s("kind"), s("n"), s("q"), s("order"), s("enumerated")]];
    let mut ok = true;
    let mut enumerated = String::new();
    if enumerate {
        let g = census::enumerate_group(kind, n, q, caps)?;
        let m = BigUint::from(g.len()) == order;
        ok &= m;
        enumerated = s(g.len());
        text += &format!("enumerated {} {}\n", g.len(), verdict(m));
        js["enumerated"] = json!(s(g.len()));
    }
    if let Some(k) = stabilizer {
        let inner = match kind {
            GroupKind::Unitary => InnerProduct::Hermitian,
            GroupKind::Symplectic => InnerProduct::Symplectic,
        };
        let r = census::stabilizer_check(inner, q, n, k, caps)?;
        ok &= r.holds() && BigUint::from(r.group_order) == order;
        text += &format!(
            "orbit {} stabilizer {} (blocks {}) lcd codes {} {}\n",
            r.orbit_size,
            r.stabilizer_size,
            r.block_product,
            r.lcd_census,
            verdict(r.holds())
        );
        js["stabilizer"] = serde_json::to_value(&r).expect("report serializes");
        js["stabilizer"]["group_order"] = json!(s(r.group_order));
        js["stabilizer"]["orbit_size"] = json!(s(r.orbit_size));
        js["stabilizer"]["stabilizer_size"] = json!(s(r.stabilizer_size));
        js["stabilizer"]["lcd_census"] = json!(s(r.lcd_census));
    }
    csv.push(vec![s(kind), s(n), s(q), s(&order), enumerated]);
    Ok(Outcome::new(text, js, csv).verified(ok))
}

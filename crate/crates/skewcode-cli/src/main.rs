//! skewcode — command-line front end for the exact skew-polynomial coding
//! library.
//!
//! Subcommands mirror the library layers: `field` and `basis` for finite
//! fields, `skewpoly` for Ore-polynomial arithmetic, `code` for the three
//! code families (constacyclic, skew Reed-Solomon, convolutional) with their
//! closed-form duals and built-in cross-checks, and `verify` for the seeded
//! self-check suites.
//!
//! Output is JSON by default (`--output table` renders the same data as
//! text). For a fixed command line and seed the JSON is byte-identical
//! across runs. Exit codes: 0 success, 1 usage or domain error, 2 a
//! mathematical cross-check failed (counterexample on stderr).

use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewcode::constacyclic::ConstaRing;
use skewcode::convolutional::ConvRing;
use skewcode::framework::LinearCode;
use skewcode::gf::{
    find_self_dual_normal, is_normal_element, Felt, Field, FieldAut, SubfieldBasis,
};
use skewcode::linalg::{Mat, PolyMat};
use skewcode::skewpoly::{gcrd_lclm, Convention, Side, SkewPoly};
use skewcode::skewrs::{min_distance, SkewRsCode};
use skewcode::verify;

#[derive(Parser)]
#[command(
    name = "skewcode",
    version,
    about = "Skew-polynomial codes and their duals, computed exactly"
)]
struct Cli {
    /// Seed for every randomized check (overrides env SKEWDUAL_SEED).
    #[arg(long, global = true, env = "SKEWDUAL_SEED", default_value_t = 0)]
    seed: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Finite-field construction and arithmetic.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Subfield bases: duality, normality, self-dual normal search.
    #[command(subcommand)]
    Basis(BasisCmd),
    /// Skew-polynomial arithmetic over GF(p^m) twisted by Frobenius.
    #[command(subcommand)]
    Skewpoly(SkewpolyCmd),
    /// Code constructions and their closed-form duals.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Run the seeded verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Describe GF(p^m): size, modulus, a multiplicative generator.
    Info(FieldArgs),
    /// Element arithmetic: sum, product, quotient, inverse, Frobenius.
    Arith {
        #[command(flatten)]
        field: FieldArgs,
        /// First element, as an integer in [0, q).
        #[arg(long)]
        a: u32,
        /// Second element, as an integer in [0, q).
        #[arg(long)]
        b: u32,
    },
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic (a prime).
    #[arg(long)]
    p: u32,
    /// Extension degree over the prime field.
    #[arg(long)]
    m: u32,
    /// Optional modulus as comma-separated base-p digits, ascending degree
    /// ("1,1,1" is x^2+x+1). Defaults to a built-in irreducible.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Subcommand)]
enum BasisCmd {
    /// Is alpha normal over GF(p^d)? If so, report its orbit basis.
    CheckNormal {
        #[command(flatten)]
        field: FieldArgs,
        /// Subfield degree d (the basis is over GF(p^d)).
        #[arg(long)]
        d: u32,
        /// Candidate element.
        #[arg(long)]
        alpha: u32,
    },
    /// Dual basis and Gram matrix of a given subfield basis.
    Dual {
        #[command(flatten)]
        field: FieldArgs,
        /// Subfield degree d.
        #[arg(long)]
        d: u32,
        /// Basis elements, comma-separated integers.
        #[arg(long)]
        elements: String,
    },
    /// Smallest self-dual normal basis of GF(p^m) over GF(p^d), if any.
    FindSelfDualNormal {
        #[command(flatten)]
        field: FieldArgs,
        /// Subfield degree d.
        #[arg(long)]
        d: u32,
    },
}

#[derive(Args)]
struct SkewRingArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Frobenius exponent s of the twist sigma: x -> x^(p^s).
    #[arg(long, default_value_t = 1)]
    sigma: u32,
    /// Coefficient side the variable twists past: left means x*a =
    /// sigma(a)*x, right means a*z = z*sigma(a).
    #[arg(long, value_enum, default_value_t = ConvArg::Left)]
    convention: ConvArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum SkewpolyCmd {
    /// Product f*g.
    Mul {
        #[command(flatten)]
        ring: SkewRingArgs,
        /// Coefficients of f, comma-separated, ascending degree.
        #[arg(long)]
        f: String,
        /// Coefficients of g.
        #[arg(long)]
        g: String,
    },
    /// Division with remainder: right side solves f = q*g + r, left side
    /// solves f = g*q + r; deg r < deg g.
    Div {
        #[command(flatten)]
        ring: SkewRingArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Which side the divisor acts on.
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Greatest common right divisor of f and g.
    Gcrd {
        #[command(flatten)]
        ring: SkewRingArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Least common left multiple of f and g.
    Lclm {
        #[command(flatten)]
        ring: SkewRingArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Right evaluation f(a): the remainder of f modulo (x - a). Uses the
    /// left convention.
    Eval {
        #[command(flatten)]
        field: FieldArgs,
        /// Frobenius exponent of the twist.
        #[arg(long, default_value_t = 1)]
        sigma: u32,
        #[arg(long)]
        f: String,
        /// Evaluation point.
        #[arg(long)]
        at: u32,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Skew constacyclic code in GF(p^m)[x;sigma]/(x^n - u) and its dual.
    Constacyclic {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Frobenius exponent of sigma.
        #[arg(long, default_value_t = 1)]
        sigma: u32,
        /// Code length (must be a multiple of the order of sigma).
        #[arg(long)]
        n: usize,
        /// The constacyclic unit u (nonzero, fixed by sigma).
        #[arg(long)]
        u: u32,
        /// Generator coefficients, comma-separated, ascending degree. Must
        /// be a monic left divisor of x^n - u.
        #[arg(long)]
        gen: String,
    },
    /// Skew Reed-Solomon code from a normal element and designed distance.
    Skewrs {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        /// Normal element generating the conjugate chain.
        #[arg(long)]
        alpha: u32,
        /// Designed distance (2..=n).
        #[arg(long)]
        delta: usize,
        /// Also report the closed-form dual generator.
        #[arg(long)]
        dual: bool,
        /// Also report the evaluation form (mu, nu, sigma-geometric matrix).
        #[arg(long)]
        eval: bool,
        /// Also compute the exact minimum distance.
        #[arg(long)]
        mindist: bool,
    },
    /// Left ideal convolutional code over M_n(GF(p^(d t)))[z;sigma] from an
    /// idempotent generator, with its dual.
    Conv {
        /// Characteristic.
        #[arg(long)]
        p: u32,
        /// Degree of the base field F = GF(p^d) over the prime field.
        #[arg(long)]
        d: u32,
        /// Degree of K over F (so K = GF(p^(d t))).
        #[arg(long)]
        t: u32,
        /// Matrix size of the ambient ring M_n(K).
        #[arg(long)]
        n: usize,
        /// Automorphism matrix U, n*n K-element integers, row-major,
        /// comma-separated (';' also accepted between rows).
        #[arg(long = "U")]
        u: String,
        /// Frobenius layer of the automorphism: sigma = conj(U) after tau^h.
        #[arg(long = "h")]
        h: usize,
        /// Idempotent generator, n*n K-element integers, row-major.
        #[arg(long)]
        idem: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or one suite name (see `verify list`-style names in the docs).
    #[arg(default_value = "all")]
    target: String,
}

/// A command's result: the JSON document plus any failed cross-checks.
struct CmdOut {
    value: Value,
    failures: Vec<String>,
}

impl CmdOut {
    fn ok(value: Value) -> CmdOut {
        CmdOut {
            value,
            failures: Vec::new(),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{}", e);
                std::process::exit(0);
            }
            _ => {
                eprint!("{}", e);
                std::process::exit(1);
            }
        },
    };

    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&out.value, cli.output) {
                // A closed pipe (e.g. piping into `head`) is not a failure.
                if e.kind() == io::ErrorKind::BrokenPipe {
                    std::process::exit(0);
                }
                eprintln!("error: {}", e);
                std::process::exit(1);
            }
            if out.failures.is_empty() {
                std::process::exit(0);
            }
            for f in &out.failures {
                eprintln!("check failed: {}", f);
            }
            std::process::exit(2);
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            std::process::exit(1);
        }
    }
}

fn emit(value: &Value, format: Output) -> io::Result<()> {
    let stdout = io::stdout();
    let mut w = stdout.lock();
    match format {
        Output::Json => writeln!(
            w,
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Output::Table => print_table(&mut w, value),
    }
}

fn run(cli: &Cli) -> Result<CmdOut, String> {
    match &cli.command {
        Command::Field(cmd) => run_field(cmd),
        Command::Basis(cmd) => run_basis(cmd),
        Command::Skewpoly(cmd) => run_skewpoly(cmd),
        Command::Code(cmd) => run_code(cmd),
        Command::Verify(args) => run_verify(args, cli.seed),
    }
}

// ---- parsing helpers --------------------------------------------------------

fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    s.split([',', ';'])
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| format!("not an integer: {:?}", t)))
        .collect()
}

fn make_field(args: &FieldArgs) -> Result<Field, String> {
    match &args.modulus {
        Some(text) => {
            let digits = parse_u32_list(text)?;
            Field::with_modulus(args.p, args.m, &digits).map_err(|e| e.to_string())
        }
        None => Field::new(args.p, args.m).map_err(|e| e.to_string()),
    }
}

fn make_field_pm(p: u32, m: u32) -> Result<Field, String> {
    Field::new(p, m).map_err(|e| e.to_string())
}

fn parse_elt(field: &Field, v: u32) -> Result<Felt, String> {
    field
        .elt(v)
        .ok_or_else(|| format!("element {} out of range for GF({})", v, field.q()))
}

fn parse_elts(field: &Field, s: &str) -> Result<Vec<Felt>, String> {
    parse_u32_list(s)?
        .into_iter()
        .map(|v| parse_elt(field, v))
        .collect()
}

fn parse_square_mat(field: &Field, n: usize, s: &str) -> Result<Mat, String> {
    let entries = parse_elts(field, s)?;
    if entries.len() != n * n {
        return Err(format!(
            "expected {} matrix entries (row-major {}x{}), got {}",
            n * n,
            n,
            n,
            entries.len()
        ));
    }
    Ok(Mat::from_fn(field, n, n, |i, j| entries[i * n + j]))
}

// ---- JSON rendering ----------------------------------------------------------

fn felts_json(v: &[Felt]) -> Value {
    Value::Array(v.iter().map(|c| json!(c.0)).collect())
}

fn mat_json(m: &Mat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| json!(m.get(i, j).0)).collect()))
            .collect(),
    )
}

fn grid_json(grid: &[Vec<Felt>]) -> Value {
    Value::Array(grid.iter().map(|row| felts_json(row)).collect())
}

fn polymat_json(m: &PolyMat) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| felts_json(m.get(i, j).coeffs()))
                        .collect(),
                )
            })
            .collect(),
    )
}

// ---- field / basis ------------------------------------------------------------

fn run_field(cmd: &FieldCmd) -> Result<CmdOut, String> {
    match cmd {
        FieldCmd::Info(args) => {
            let f = make_field(args)?;
            Ok(CmdOut::ok(json!({
                "p": f.p(),
                "m": f.m(),
                "q": f.q(),
                "modulus": f.modulus(),
                "generator": f.generator().0,
            })))
        }
        FieldCmd::Arith { field, a, b } => {
            let f = make_field(field)?;
            let a = parse_elt(&f, *a)?;
            let b = parse_elt(&f, *b)?;
            let quotient = if b == Felt(0) {
                Value::Null
            } else {
                json!(f.div(a, b).map_err(|e| e.to_string())?.0)
            };
            let inverse_a = if a == Felt(0) {
                Value::Null
            } else {
                json!(f.inv(a).map_err(|e| e.to_string())?.0)
            };
            Ok(CmdOut::ok(json!({
                "p": f.p(),
                "m": f.m(),
                "q": f.q(),
                "a": a.0,
                "b": b.0,
                "sum": f.add(a, b).0,
                "difference": f.sub(a, b).0,
                "product": f.mul(a, b).0,
                "quotient": quotient,
                "inverse_a": inverse_a,
                "frobenius_a": f.frobenius(1, a).0,
            })))
        }
    }
}

fn basis_json(basis: &SubfieldBasis) -> Value {
    json!({
        "elements": felts_json(basis.elements()),
        "dual_elements": felts_json(basis.dual().elements()),
        "normal": basis.is_normal(),
        "self_dual": basis.is_self_dual(),
        "gram": grid_json(&basis.gram()),
    })
}

fn run_basis(cmd: &BasisCmd) -> Result<CmdOut, String> {
    match cmd {
        BasisCmd::CheckNormal { field, d, alpha } => {
            let f = make_field(field)?;
            let alpha = parse_elt(&f, *alpha)?;
            let normal = alpha != Felt(0) && is_normal_element(&f, *d, alpha);
            let mut doc = json!({
                "p": f.p(),
                "m": f.m(),
                "d": d,
                "alpha": alpha.0,
                "normal": normal,
            });
            if normal {
                let basis =
                    SubfieldBasis::from_normal_element(&f, *d, alpha).map_err(|e| e.to_string())?;
                let obj = doc.as_object_mut().expect("object literal");
                obj.insert("basis".into(), basis_json(&basis));
            }
            Ok(CmdOut::ok(doc))
        }
        BasisCmd::Dual { field, d, elements } => {
            let f = make_field(field)?;
            let elts = parse_elts(&f, elements)?;
            let basis = SubfieldBasis::new(&f, *d, &elts).map_err(|e| e.to_string())?;
            Ok(CmdOut::ok(json!({
                "p": f.p(),
                "m": f.m(),
                "d": d,
                "basis": basis_json(&basis),
            })))
        }
        BasisCmd::FindSelfDualNormal { field, d } => {
            let f = make_field(field)?;
            let found = find_self_dual_normal(&f, *d).map_err(|e| e.to_string())?;
            let mut doc = json!({
                "p": f.p(),
                "m": f.m(),
                "d": d,
                "found": found.is_some(),
            });
            if let Some(basis) = found {
                let obj = doc.as_object_mut().expect("object literal");
                obj.insert("alpha".into(), json!(basis.elements()[0].0));
                obj.insert("basis".into(), basis_json(&basis));
            }
            Ok(CmdOut::ok(doc))
        }
    }
}

// ---- skew polynomials -----------------------------------------------------------

fn skew_ring(args: &SkewRingArgs) -> Result<(Field, FieldAut, Convention), String> {
    let f = make_field(&args.field)?;
    let sigma = FieldAut::new(&f, args.sigma);
    let conv = match args.convention {
        ConvArg::Left => Convention::Left,
        ConvArg::Right => Convention::Right,
    };
    Ok((f, sigma, conv))
}

fn skew_poly(
    field: &Field,
    sigma: FieldAut,
    conv: Convention,
    text: &str,
) -> Result<SkewPoly, String> {
    let coeffs = parse_elts(field, text)?;
    Ok(SkewPoly::new(field, sigma, conv, &coeffs))
}

fn ring_header(field: &Field, sigma: u32, conv: Convention) -> Value {
    json!({
        "p": field.p(),
        "m": field.m(),
        "sigma": sigma,
        "convention": match conv {
            Convention::Left => "left",
            Convention::Right => "right",
        },
    })
}

fn run_skewpoly(cmd: &SkewpolyCmd) -> Result<CmdOut, String> {
    match cmd {
        SkewpolyCmd::Mul { ring, f, g } => {
            let (field, sigma, conv) = skew_ring(ring)?;
            let fp = skew_poly(&field, sigma, conv, f)?;
            let gp = skew_poly(&field, sigma, conv, g)?;
            let prod = fp.mul(&gp).map_err(|e| e.to_string())?;
            Ok(CmdOut::ok(json!({
                "ring": ring_header(&field, ring.sigma, conv),
                "f": felts_json(fp.coeffs()),
                "g": felts_json(gp.coeffs()),
                "product": felts_json(prod.coeffs()),
            })))
        }
        SkewpolyCmd::Div { ring, f, g, side } => {
            let (field, sigma, conv) = skew_ring(ring)?;
            let fp = skew_poly(&field, sigma, conv, f)?;
            let gp = skew_poly(&field, sigma, conv, g)?;
            let s = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let (q, r) = fp.divide(&gp, s).map_err(|e| e.to_string())?;
            Ok(CmdOut::ok(json!({
                "ring": ring_header(&field, ring.sigma, conv),
                "f": felts_json(fp.coeffs()),
                "g": felts_json(gp.coeffs()),
                "side": match side { SideArg::Left => "left", SideArg::Right => "right" },
                "quotient": felts_json(q.coeffs()),
                "remainder": felts_json(r.coeffs()),
            })))
        }
        SkewpolyCmd::Gcrd { ring, f, g } => {
            let (field, sigma, conv) = skew_ring(ring)?;
            let fp = skew_poly(&field, sigma, conv, f)?;
            let gp = skew_poly(&field, sigma, conv, g)?;
            let (gc, _) = gcrd_lclm(&fp, &gp).map_err(|e| e.to_string())?;
            Ok(CmdOut::ok(json!({
                "ring": ring_header(&field, ring.sigma, conv),
                "f": felts_json(fp.coeffs()),
                "g": felts_json(gp.coeffs()),
                "gcrd": felts_json(gc.coeffs()),
            })))
        }
        SkewpolyCmd::Lclm { ring, f, g } => {
            let (field, sigma, conv) = skew_ring(ring)?;
            let fp = skew_poly(&field, sigma, conv, f)?;
            let gp = skew_poly(&field, sigma, conv, g)?;
            let (_, lc) = gcrd_lclm(&fp, &gp).map_err(|e| e.to_string())?;
            Ok(CmdOut::ok(json!({
                "ring": ring_header(&field, ring.sigma, conv),
                "f": felts_json(fp.coeffs()),
                "g": felts_json(gp.coeffs()),
                "lclm": felts_json(lc.coeffs()),
            })))
        }
        SkewpolyCmd::Eval { field, sigma, f, at } => {
            let fld = make_field(field)?;
            let s = FieldAut::new(&fld, *sigma);
            let fp = skew_poly(&fld, s, Convention::Left, f)?;
            let a = parse_elt(&fld, *at)?;
            let value = fp.right_eval(a).map_err(|e| e.to_string())?;
            Ok(CmdOut::ok(json!({
                "ring": ring_header(&fld, *sigma, Convention::Left),
                "f": felts_json(fp.coeffs()),
                "at": a.0,
                "value": value.0,
            })))
        }
    }
}

// ---- codes ----------------------------------------------------------------------

fn block_json(code: &LinearCode) -> Value {
    mat_json(code.block_generator().expect("block code"))
}

fn run_code(cmd: &CodeCmd) -> Result<CmdOut, String> {
    match cmd {
        CodeCmd::Constacyclic {
            p,
            m,
            sigma,
            n,
            u,
            gen,
        } => {
            let field = make_field_pm(*p, *m)?;
            let aut = FieldAut::new(&field, *sigma);
            let unit = parse_elt(&field, *u)?;
            let ring = ConstaRing::new(&field, aut, *n, unit).map_err(|e| e.to_string())?;
            let coeffs = parse_elts(&field, gen)?;
            let f = SkewPoly::new(&field, aut, Convention::Left, &coeffs);
            let pair = ring.dual(&f).map_err(|e| e.to_string())?;

            let f_res = ring.reduce(f.coeffs());
            let h_res = ring.reduce(pair.cofactor.coeffs());
            let hat = ring.hat();
            let theta_h = ring.theta(&h_res);

            let mut failures = Vec::new();
            let transposition =
                hat.mul_matrix(&ring.theta(&f_res)) == ring.mul_matrix(&f_res).transpose();
            if !transposition {
                failures.push(format!(
                    "transposition: companion matrix of theta({:?}) is not the transpose",
                    f_res
                ));
            }
            let kernel = ring.mul_matrix(&f_res).nullspace().row_canonical();
            let kernel_match = pair.dual == LinearCode::Block(kernel);
            if !kernel_match {
                failures.push("kernel_match: closed-form dual differs from the kernel".into());
            }
            let dimension_sum = pair.code.dim() + pair.dual.dim() == ring.n();
            if !dimension_sum {
                failures.push(format!(
                    "dimension_sum: {} + {} != {}",
                    pair.code.dim(),
                    pair.dual.dim(),
                    ring.n()
                ));
            }

            Ok(CmdOut {
                value: json!({
                    "p": field.p(),
                    "m": field.m(),
                    "sigma": sigma,
                    "n": n,
                    "u": unit.0,
                    "generator": felts_json(&f_res),
                    "generator_matrix": block_json(&pair.code),
                    "dual_generator_poly": felts_json(&theta_h),
                    "dual_matrix": block_json(&pair.dual),
                    "checks": {
                        "transposition": transposition,
                        "kernel_match": kernel_match,
                        "dimension_sum": dimension_sum,
                    },
                }),
                failures,
            })
        }
        CodeCmd::Skewrs {
            p,
            m,
            alpha,
            delta,
            dual,
            eval,
            mindist,
        } => {
            let field = make_field_pm(*p, *m)?;
            let aut = FieldAut::new(&field, 1);
            let a = parse_elt(&field, *alpha)?;
            let code = SkewRsCode::new(&field, aut, a, *delta).map_err(|e| e.to_string())?;

            let mut doc = json!({
                "p": field.p(),
                "m": field.m(),
                "n": code.n(),
                "alpha": a.0,
                "delta": delta,
                "g": felts_json(code.generator().coeffs()),
                "k": code.dim(),
                "gamma": code.gamma().0,
            });
            let obj = doc.as_object_mut().expect("object literal");
            let mut failures = Vec::new();

            if *dual {
                let d = code.dual();
                obj.insert("dual_g".into(), felts_json(d.generator().coeffs()));
                if d.code() != code.code().dual() {
                    failures
                        .push("dual: closed-form dual differs from the nullspace dual".into());
                }
            }
            if *eval {
                let params = code.eval_params();
                obj.insert("mu".into(), json!(params.mu.0));
                obj.insert("nu".into(), json!(params.nu.0));
                obj.insert("sge_matrix".into(), mat_json(&code.eval_matrix()));
                let spans =
                    LinearCode::Block(code.eval_matrix().row_canonical()) == code.code();
                if !spans {
                    failures.push("eval: evaluation matrix spans a different code".into());
                }
            }
            if *mindist {
                let d = min_distance(code.code().block_generator().expect("block code"))
                    .map_err(|e| e.to_string())?;
                obj.insert("min_distance".into(), json!(d));
                obj.insert("mds".into(), json!(d == *delta));
                if d != *delta {
                    failures.push(format!(
                        "mindist: distance {} does not meet the designed distance {}",
                        d, delta
                    ));
                }
            }
            Ok(CmdOut {
                value: doc,
                failures,
            })
        }
        CodeCmd::Conv {
            p,
            d,
            t,
            n,
            u,
            h,
            idem,
        } => {
            let base = make_field_pm(*p, *d)?;
            let ext = make_field_pm(*p, d * t)?;
            let basis = find_self_dual_normal(&ext, *d)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| {
                    format!(
                        "GF({}^{}) has no self-dual normal basis over GF({}^{})",
                        p,
                        d * t,
                        p,
                        d
                    )
                })?;
            let u_mat = parse_square_mat(&ext, *n, u)?;
            let ring =
                ConvRing::new(&base, &ext, *n, &basis, &u_mat, *h).map_err(|e| e.to_string())?;
            let e_mat = parse_square_mat(&ext, *n, idem)?;
            let e = ring.scalar_elt(&e_mat);
            let pair = ring.dual_from_idempotent(&e).map_err(|e| e.to_string())?;

            let mut failures = Vec::new();
            let hat = ring.hat();
            let transposition =
                hat.mul_matrix_poly(&ring.theta(&e)) == ring.mul_matrix_poly(&e).transpose();
            if !transposition {
                failures.push("transposition: matrix of theta(e) is not the transpose".into());
            }
            let kernel = ring
                .mul_matrix_poly(&e)
                .transpose()
                .left_kernel()
                .row_canonical();
            let kernel_match = pair.dual == LinearCode::Conv(kernel);
            if !kernel_match {
                failures.push("kernel_match: closed-form dual differs from the kernel".into());
            }
            let direct_summand = pair
                .code
                .conv_generator()
                .map(|g| g.snf().iter().all(|f| f.is_unit()))
                .unwrap_or(false);
            if !direct_summand {
                failures.push("direct_summand: non-unit invariant factor".into());
            }

            Ok(CmdOut {
                value: json!({
                    "p": p,
                    "d": d,
                    "t": t,
                    "n": n,
                    "h": ring.tau_exponent(),
                    "basis": felts_json(ring.basis().elements()),
                    "U": mat_json(ring.u_matrix()),
                    "idempotent": mat_json(&e_mat),
                    "M_R_f": polymat_json(&ring.mul_matrix_poly(&e)),
                    "dual_generators": polymat_json(
                        pair.dual.conv_generator().expect("polynomial code")
                    ),
                    "checks": {
                        "transposition": transposition,
                        "kernel_match": kernel_match,
                        "direct_summand": direct_summand,
                    },
                }),
                failures,
            })
        }
    }
}

// ---- verify -----------------------------------------------------------------------

fn run_verify(args: &VerifyArgs, seed: u64) -> Result<CmdOut, String> {
    let reports = if args.target == "all" {
        verify::run_all(seed)
    } else {
        match verify::run_suite(&args.target, seed) {
            Some(r) => vec![r],
            None => {
                return Err(format!(
                    "unknown suite {:?}; available: all, {}",
                    args.target,
                    verify::SUITE_NAMES.join(", ")
                ))
            }
        }
    };

    let mut failures = Vec::new();
    for r in &reports {
        for f in &r.failures {
            failures.push(format!("{}: {}", r.name, f));
        }
    }
    let suites: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "passed": r.passed(),
                "checked": r.checked,
                "failures": r.failures,
                "notes": r.notes,
            })
        })
        .collect();
    Ok(CmdOut {
        value: json!({
            "seed": seed,
            "passed": failures.is_empty(),
            "suites": suites,
        }),
        failures,
    })
}

// ---- table rendering -----------------------------------------------------------------

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Inline rendering for flat arrays (and matrices of scalars).
fn inline_text(v: &Value) -> Option<String> {
    if let Some(s) = scalar_text(v) {
        return Some(s);
    }
    if let Value::Array(items) = v {
        let parts: Option<Vec<String>> = items.iter().map(inline_text).collect();
        return parts.map(|p| format!("[{}]", p.join(", ")));
    }
    None
}

fn print_table(w: &mut dyn Write, v: &Value) -> io::Result<()> {
    print_table_at(w, v, 0)
}

fn print_table_at(w: &mut dyn Write, v: &Value, indent: usize) -> io::Result<()> {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if let Some(line) = inline_text(val) {
                    writeln!(w, "{}{}: {}", pad, k, line)?;
                } else {
                    writeln!(w, "{}{}:", pad, k)?;
                    print_table_at(w, val, indent + 1)?;
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if let Some(line) = inline_text(item) {
                    writeln!(w, "{}- {}", pad, line)?;
                } else {
                    writeln!(w, "{}-", pad)?;
                    print_table_at(w, item, indent + 1)?;
                }
            }
        }
        other => {
            if let Some(line) = scalar_text(other) {
                writeln!(w, "{}{}", pad, line)?;
            }
        }
    }
    Ok(())
}

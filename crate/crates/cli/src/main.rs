use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};
use hyperdet::degree::{classify, slice_degree};
use hyperdet::invariants::{aronhold_pfaffians, multilinear_rank, strassen_invariant};
use hyperdet::methods::{compute_det, MethodChoice};
use hyperdet::pencil::{
    analyze_pencil, kac_blocks, kronecker_blocks, pencil_slices, simultaneous_diagonalize, BlockDecomposition,
    BlockKind,
};
use hyperdet::polyalg::{exact_rank, format_rational, parse_polynomial};
use hyperdet::tensor::PointDocument;
use hyperdet::{Error, Format, MultiMatrix, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hyperdet", version, about = "Exact hyperdeterminants and tensor invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Existence, boundary status and degree of the hyperdeterminant of a format
    Degree {
        #[arg(required = true, value_name = "DIM")]
        dims: Vec<usize>,
    },
    /// Hyperdeterminant of a tensor file
    Det {
        file: PathBuf,
        #[arg(long, default_value = "auto", value_parser = ["auto", "boundary", "schlaefli", "cayley"])]
        method: String,
    },
    /// Decide degeneracy from a kernel certificate or from Det
    CheckDegenerate {
        file: PathBuf,
        certificate: Option<PathBuf>,
    },
    /// Analyse a 2×k×k tensor as the pencil x0·A0 + x1·A1
    Pencil {
        file: PathBuf,
        /// Also diagonalise a symmetric pencil by congruence
        #[arg(long)]
        diagonalize: bool,
        #[arg(long, default_value_t = hyperdet::pencil::DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Block parameters of generic 2×b×c pencils or Kac quiver representations
    #[command(group(ArgGroup::new("kind").required(true).args(["kronecker", "kac"])))]
    Blocks {
        #[arg(long, num_args = 2, value_names = ["B", "C"])]
        kronecker: Option<Vec<u64>>,
        #[arg(long, num_args = 3, value_names = ["W", "S", "T"])]
        kac: Option<Vec<u64>>,
    },
    /// Strassen's degree-9 invariant of a 3×3×3 tensor
    Strassen {
        file: PathBuf,
        #[arg(long)]
        axis: Option<usize>,
    },
    /// Aronhold pfaffians of a plane cubic in x0, x1, x2
    Aronhold { poly: String },
    /// Flattening of a tensor along one axis
    Flatten { file: PathBuf, axis: usize },
    /// Convolution of two tensors along the last axis of the first
    Convolve { a: PathBuf, b: PathBuf },
}

enum Failure {
    Usage(String),
    Unsupported(String),
    Invalid(String),
    CrossCheck(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Unsupported(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::CrossCheck(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Unsupported(m) | Failure::Invalid(m) | Failure::CrossCheck(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Format(_) | Error::SizeLimit(_) => Failure::Unsupported(msg),
            Error::Inconsistency(_) => Failure::CrossCheck(msg),
            _ => Failure::Invalid(msg),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn exact(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn read_tensor(path: &Path) -> Result<MultiMatrix, Failure> {
    let src = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    MultiMatrix::from_json(&src).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn degree(dims: Vec<usize>) -> Outcome {
    let format = Format::new(dims).map_err(|e| Failure::Unsupported(e.to_string()))?;
    let class = classify(&format).map_err(|e| Failure::Unsupported(e.to_string()))?;
    let mut out = json!({
        "format": format.to_string(),
        "exists": class.exists,
        "boundary": class.boundary,
        "N": class.degree,
    });
    if class.exists {
        let slices = (0..format.order())
            .map(|i| slice_degree(&format, i))
            .collect::<Result<Vec<u64>, _>>()?;
        out["slice_degrees"] = json!(slices);
    }
    Ok(out)
}

fn det(file: &Path, method: &str) -> Outcome {
    let a = read_tensor(file)?;
    let choice: MethodChoice = method.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let report = compute_det(&a, choice)?;
    let runs: Vec<Value> = report
        .runs
        .iter()
        .map(|r| json!({"method": r.method.name(), "raw": exact(&r.raw), "value": exact(&r.value)}))
        .collect();
    Ok(json!({
        "format": a.format().to_string(),
        "value": exact(&report.value),
        "methods": runs,
    }))
}

fn check_degenerate(file: &Path, certificate: Option<&Path>) -> Outcome {
    let a = read_tensor(file)?;
    match certificate {
        Some(path) => {
            let src = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
            let x = PointDocument::parse(&src).and_then(|d| d.to_points())?;
            let in_kernel = a.kernel_check(&x)?;
            Ok(json!({"via": "certificate", "degenerate": in_kernel, "certificate_in_kernel": in_kernel}))
        }
        None => {
            let report = compute_det(&a, MethodChoice::Auto)?;
            Ok(json!({
                "via": "det",
                "degenerate": is_zero(&report.value),
                "det": exact(&report.value),
                "methods": report.runs.iter().map(|r| r.method.name()).collect::<Vec<_>>(),
            }))
        }
    }
}

fn is_zero(q: &Rational) -> bool {
    *q.numer() == 0.into()
}

fn pencil(file: &Path, diagonalize: bool, tol: f64) -> Outcome {
    let a = read_tensor(file)?;
    let report = analyze_pencil(&a, true)?;
    let eigenvalues = report.eigenvalues.as_ref().map(|ev| {
        json!({
            "approx": true,
            "values": ev.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
        })
    });
    let mut out = json!({
        "format": a.format().to_string(),
        "char_form": report.char_form.to_string(),
        "discriminant": exact(&report.discriminant),
        "regular": report.regular,
        "singular_pencil": report.singular,
        "degree_drop": report.degree_drop,
        "eigenvalues": eigenvalues,
    });
    if diagonalize {
        let (a0, a1) = pencil_slices(&a)?;
        let d = simultaneous_diagonalize(&a0, &a1, tol)?;
        out["diagonalization"] = json!({
            "approx": true,
            "mu": d.mu.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
            "d0": d.d0.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
            "d1": d.d1.iter().map(|z| json!([z.re, z.im])).collect::<Vec<_>>(),
            "residual": d.residual,
        });
    }
    Ok(out)
}

fn blocks(kronecker: Option<Vec<u64>>, kac: Option<Vec<u64>>) -> Outcome {
    let d: BlockDecomposition = match (kronecker, kac) {
        (Some(v), None) => kronecker_blocks(v[0], v[1])?,
        (None, Some(v)) => kac_blocks(v[0], v[1], v[2])?,
        _ => return Err(Failure::Usage("give exactly one of --kronecker or --kac".into())),
    };
    let kind = match d.kind {
        BlockKind::Kronecker => "kronecker",
        BlockKind::Kac => "kac",
    };
    Ok(json!({
        "kind": kind,
        "n": d.n,
        "m": d.m,
        "param": d.param,
        "blocks": d.blocks,
    }))
}

fn strassen(file: &Path, axis: Option<usize>) -> Outcome {
    let a = read_tensor(file)?;
    let axes: Vec<usize> = match axis {
        Some(i) if i < 3 => vec![i],
        Some(i) => return Err(Failure::Usage(format!("axis {i} out of range"))),
        None => (0..3).collect(),
    };
    let mut values = Vec::new();
    let mut vanishes = true;
    for i in axes {
        let v = strassen_invariant(&a, i)?;
        vanishes &= is_zero(&v);
        values.push(json!({"axis": i, "value": exact(&v)}));
    }
    Ok(json!({"values": values, "vanishes": vanishes, "multilinear_rank": multilinear_rank(&a)?}))
}

fn aronhold(poly: &str) -> Outcome {
    let f = parse_polynomial(poly, 3)?;
    let p = aronhold_pfaffians(&f)?;
    Ok(json!({
        "cubic": f.to_string(),
        "pfaffians": p.iter().map(exact).collect::<Vec<_>>(),
        "all_zero": p.iter().all(is_zero),
    }))
}

fn flatten(file: &Path, axis: usize) -> Outcome {
    let a = read_tensor(file)?;
    let m = a.flattening(axis)?;
    let rows: Vec<Vec<Value>> = m.to_rows().iter().map(|r| r.iter().map(exact).collect()).collect();
    Ok(json!({
        "axis": axis,
        "rows": m.rows(),
        "cols": m.cols(),
        "rank": exact_rank(&m),
        "matrix": rows,
    }))
}

fn convolve(a: &Path, b: &Path) -> Outcome {
    let c = read_tensor(a)?.convolve(&read_tensor(b)?)?;
    serde_json::from_str(&c.to_json()).map_err(|e| Failure::Invalid(e.to_string()))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Degree { dims } => degree(dims),
        Command::Det { file, method } => det(&file, &method),
        Command::CheckDegenerate { file, certificate } => check_degenerate(&file, certificate.as_deref()),
        Command::Pencil { file, diagonalize, tol } => pencil(&file, diagonalize, tol),
        Command::Blocks { kronecker, kac } => blocks(kronecker, kac),
        Command::Strassen { file, axis } => strassen(&file, axis),
        Command::Aronhold { poly } => aronhold(&poly),
        Command::Flatten { file, axis } => flatten(&file, axis),
        Command::Convolve { a, b } => convolve(&a, &b),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("JSON values always serialise"));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

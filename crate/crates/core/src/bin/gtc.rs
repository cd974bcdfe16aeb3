use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use geocheck::formula::{parse_formula, pretty};
use geocheck::gtc::{run_gtc, run_stm, Job, Options, Semantics, Verdict};
use geocheck::ptr::round_trip_check;
use geocheck::scheme::{scheme_by_name, translate_formula};
use geocheck::segment::{seg_add_traced, seg_inverse, seg_mul_traced, seg_trichotomy, SegmentClass, Trichotomy};
use geocheck::structure::{build_prime_field, load_cayley_field};
use geocheck::theories::{export_theory, theory};

const INPUT_ERROR: u8 = 4;

#[derive(Parser)]
#[command(name = "gtc", version, about = "Decide universal theorems of plane geometries through field arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print the verdict as JSON (the default).
    #[arg(long, conflicts_with = "pretty")]
    json: bool,
    /// Print a human-readable verdict.
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check a universal conjecture against a catalog theory.
    Check {
        #[arg(long)]
        theory: String,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_parser = parse_semantics)]
        semantics: Option<Semantics>,
        /// Gröbner pair budget or Cohen–Hörmander node budget.
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Translate a geometric sentence into field arithmetic.
    Translate {
        #[arg(long, default_value = "pp-hilbert")]
        scheme: String,
        #[arg(long)]
        file: PathBuf,
        /// Also decide the translation when it lies in a kernel fragment.
        #[arg(long, value_parser = parse_semantics)]
        decide: Option<Semantics>,
        #[command(flatten)]
        output: Output,
    },
    /// Coordinatize the analytic plane over a finite field and compare.
    Roundtrip {
        /// `p=<prime>` or `cayley=<file>`.
        #[arg(long)]
        field: String,
    },
    /// Print the axioms of a catalog theory.
    Axioms {
        #[arg(long)]
        theory: String,
        /// Number of infinity-scheme instances.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Run a segment construction on nonnegative rationals.
    Segment {
        op: SegmentOp,
        a: BigRational,
        b: Option<BigRational>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SegmentOp {
    Add,
    Mul,
    Inv,
    Cmp,
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    s.parse()
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("gtc: {}", msg);
    ExitCode::from(INPUT_ERROR)
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

fn emit(v: &Verdict, output: &Output) -> ExitCode {
    if output.pretty {
        print!("{}", v.render());
    } else {
        println!("{}", serde_json::to_string_pretty(v).expect("verdicts serialize"));
    }
    ExitCode::from(v.status.exit_code() as u8)
}

fn segment(a: BigRational, b: Option<BigRational>, op: SegmentOp) -> Result<(), String> {
    let seg = |r: BigRational| SegmentClass::new(r.clone()).ok_or_else(|| format!("{} is negative", r));
    let a = seg(a)?;
    let need_b = |b: Option<BigRational>| b.ok_or_else(|| "this construction takes two segments".to_string()).and_then(seg);
    match op {
        SegmentOp::Add => {
            let (s, t) = seg_add_traced(&a, &need_b(b)?);
            print!("{}", t);
            println!("sum = {}", s);
        }
        SegmentOp::Mul => {
            let (s, t) = seg_mul_traced(&a, &need_b(b)?);
            print!("{}", t);
            println!("product = {}", s);
        }
        SegmentOp::Inv => match seg_inverse(&a) {
            Some(d) => println!("inverse = {}", d),
            None => return Err("the zero segment has no inverse".into()),
        },
        SegmentOp::Cmp => match seg_trichotomy(&a, &need_b(b)?) {
            Trichotomy::Equal => println!("equal"),
            Trichotomy::Less(c) => println!("less: a + {} = b", c),
            Trichotomy::Greater(d) => println!("greater: b + {} = a", d),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { theory: name, file, semantics, budget, output } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            let t = match theory(&name) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            let conjecture = match parse_formula(&text, &t.vocabulary) {
                Ok(f) => f,
                Err(e) => return fail(e),
            };
            let options = Options { semantics, budget, ..Default::default() };
            match run_gtc(&Job { theory: name, conjecture, options }) {
                Ok(v) => emit(&v, &output),
                Err(e) => fail(e),
            }
        }
        Command::Translate { scheme, file, decide, output } => {
            let Some(phi) = scheme_by_name(&scheme) else {
                return fail(format!("unknown scheme `{}` (pp-in, pp-wu, pp-hilbert)", scheme));
            };
            let text = match read(&file) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            let f = match parse_formula(&text, &phi.target) {
                Ok(f) => f,
                Err(e) => return fail(e),
            };
            match decide {
                None => match translate_formula(&phi, &f) {
                    Ok(t) => {
                        println!("{}", pretty(&t));
                        ExitCode::SUCCESS
                    }
                    Err(e) => fail(e),
                },
                Some(s) => match run_stm(&f, s, &Options::default()) {
                    Ok(v) => emit(&v, &output),
                    Err(e) => fail(e),
                },
            }
        }
        Command::Roundtrip { field } => {
            let built = match field.split_once('=') {
                Some(("p", p)) => match p.parse::<u32>() {
                    Ok(p) => build_prime_field(p).map_err(|e| e.to_string()),
                    Err(e) => Err(format!("bad prime `{}`: {}", p, e)),
                },
                Some(("cayley", path)) => read(&PathBuf::from(path)).and_then(|t| load_cayley_field(&t).map_err(|e| e.to_string())),
                _ => Err(format!("expected p=<prime> or cayley=<file>, got `{}`", field)),
            };
            let f = match built {
                Ok(f) => f,
                Err(e) => return fail(e),
            };
            match round_trip_check(&f) {
                Ok(r) => {
                    println!("{}", serde_json::to_string_pretty(&r).expect("reports serialize"));
                    if r.ok() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => fail(e),
            }
        }
        Command::Axioms { theory: name, n } => match theory(&name) {
            Ok(t) => {
                print!("{}", export_theory(&t, n));
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Segment { op, a, b } => match segment(a, b, op) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
    }
}

//! Command-line dispatch over the library.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::embed::{
    nat_to_bullet_fn, phi_to_gapseq_fn, seq_to_tree_fn, strong_decompose_fin_fn, strong_decompose_inf_fn,
    strong_to_weak_fn, tree_label_split_fn, weak_to_strong_fn, Carrier, EmbedFn, Value,
};
use crate::error::{Error, Result};
use crate::gap_seq::{leq_variant_slice, oracle_realizer, GapVariant};
use crate::gap_tree::leq_tree;
use crate::harness::{default_spec, run_suite, suite_names};
use crate::motype::{F, G, H};
use crate::ord::{add, cmp_ord, hessenberg, lsub, mul, nat_product, pow};
use crate::reify::reify_prefixes;
use crate::text::{parse_ord, parse_seq, parse_unit_tree, parse_unit_trees, print_ord};

#[derive(Parser, Debug)]
#[command(name = "gapord", version, about = "Ordinal notations, gap orders and their embeddings")]
struct Cli {
    /// Print witnesses and summaries where available.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two ordinal terms, printing <, = or >.
    CmpOrd { a: String, b: String },
    /// Print the normal form of an ordinal term.
    Normalize { t: String },
    /// Apply an ordinal operation.
    Arith { op: ArithOp, a: String, b: String },
    /// Evaluate a maximal order type function.
    Motype { which: MotypeFn, t: String },
    /// Decide a gap order on sequences; exit 0 if it holds, 1 if not.
    CmpSeq {
        #[arg(long, value_enum)]
        order: OrderArg,
        s: String,
        t: String,
    },
    /// Decide the gap embedding on unit-leaf trees; exit 0 if it holds, 1 if not.
    CmpTree {
        #[arg(long)]
        left_strict: bool,
        s: String,
        t: String,
    },
    /// Apply a named quasi-embedding to a literal.
    Embed {
        name: String,
        /// Parameters as key=value.
        #[arg(long = "param", value_name = "K=V")]
        params: Vec<String>,
        input: String,
    },
    /// Print the reification of every prefix of a bad sequence of trees.
    Reify {
        #[arg(long)]
        alpha: String,
        trees: String,
    },
    /// Run a property suite; prints FAIL lines and a summary.
    Check {
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        alphabet: Option<u32>,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Evaluate cases on the calling thread.
        #[arg(long)]
        sequential: bool,
    },
    /// List the registered suites.
    Suites,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ArithOp {
    Add,
    Mul,
    Pow,
    Nsum,
    Nprod,
    Lsub,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MotypeFn {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    W,
    G,
    S,
    R,
}

impl OrderArg {
    fn variant(self) -> GapVariant {
        match self {
            OrderArg::W => GapVariant::Weak,
            OrderArg::G => GapVariant::Gordeev,
            OrderArg::S => GapVariant::StrongRealizer,
            OrderArg::R => GapVariant::StrongRecursive,
        }
    }
}

/// Runs the command line `args` (program name first), writing to `out` and `err`,
/// and returns the exit code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, line: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| Error::PreconditionViolated(format!("write failed: {e}")))
}

fn verdict(holds: bool) -> i32 {
    if holds {
        0
    } else {
        1
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let verbose = cli.verbose;
    match cli.command {
        Command::CmpOrd { a, b } => {
            let symbol = match cmp_ord(&parse_ord(&a)?, &parse_ord(&b)?)? {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            emit(out, symbol)?;
            Ok(0)
        }
        Command::Normalize { t } => {
            emit(out, print_ord(&parse_ord(&t)?))?;
            Ok(0)
        }
        Command::Arith { op, a, b } => {
            let (a, b) = (parse_ord(&a)?, parse_ord(&b)?);
            let r = match op {
                ArithOp::Add => add(&a, &b),
                ArithOp::Mul => mul(&a, &b),
                ArithOp::Pow => pow(&a, &b),
                ArithOp::Nsum => hessenberg(&a, &b),
                ArithOp::Nprod => nat_product(&a, &b),
                ArithOp::Lsub => lsub(&a, &b),
            };
            emit(out, print_ord(&r))?;
            Ok(0)
        }
        Command::Motype { which, t } => {
            let a = parse_ord(&t)?;
            let r = match which {
                MotypeFn::F => F(&a),
                MotypeFn::G => G(&a),
                MotypeFn::H => H(&a),
            };
            emit(out, print_ord(&r))?;
            Ok(0)
        }
        Command::CmpSeq { order, s, t } => {
            let (s, t) = (parse_seq(&s)?, parse_seq(&t)?);
            let holds = leq_variant_slice(&s, &t, order.variant());
            if verbose {
                match oracle_realizer(&s, &t, order.variant()) {
                    Some(r) => emit(out, format!("realizer {:?}", r.map))?,
                    None => emit(out, "no realizer")?,
                }
            }
            Ok(verdict(holds))
        }
        Command::CmpTree { left_strict, s, t } => {
            let (s, t) = (parse_unit_tree(&s)?, parse_unit_tree(&t)?);
            for x in [&s, &t] {
                if !x.is_valid(left_strict) {
                    return Err(Error::PreconditionViolated(format!(
                        "{x} violates the ascending condition (left_strict={left_strict})"
                    )));
                }
            }
            let holds = leq_tree(&s, &t);
            if verbose {
                emit(out, if holds { "embeds" } else { "does not embed" })?;
            }
            Ok(verdict(holds))
        }
        Command::Embed { name, params, input } => {
            let f = build_embedding(&name, &params)?;
            let x = parse_input(&f, &input)?;
            if !f.domain.contains(&x) {
                return Err(Error::InputOutOfRange(x.to_string()));
            }
            emit(out, f.apply(&x)?.to_string())?;
            Ok(0)
        }
        Command::Reify { alpha, trees } => {
            let alpha = parse_ord(&alpha)?;
            let s = parse_unit_trees(&trees)?;
            match reify_prefixes(&s, &alpha) {
                Ok(values) => {
                    for v in values {
                        emit(out, print_ord(&v))?;
                    }
                    Ok(0)
                }
                Err(Error::NotBad(i, j)) => {
                    emit(out, format!("not bad: element {i} embeds into element {j}"))?;
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::Check {
            suite,
            seed,
            alphabet,
            len,
            nodes,
            size,
            samples,
            sequential,
        } => {
            let mut spec = default_spec(&suite)?;
            spec.seed = seed.unwrap_or(spec.seed);
            spec.alphabet = alphabet.unwrap_or(spec.alphabet);
            spec.max_len = len.unwrap_or(spec.max_len);
            spec.max_nodes = nodes.unwrap_or(spec.max_nodes);
            spec.max_size = size.unwrap_or(spec.max_size);
            spec.samples = samples.unwrap_or(spec.samples);
            spec.parallel = !sequential;
            let r = run_suite(&suite, &spec)?;
            write!(out, "{}", r.render()).map_err(|e| Error::PreconditionViolated(e.to_string()))?;
            if verbose {
                emit(out, format!("wall {:.3}s", r.wall.as_secs_f64()))?;
            }
            Ok(verdict(r.passed()))
        }
        Command::Suites => {
            for name in suite_names() {
                emit(out, name)?;
            }
            Ok(0)
        }
    }
}

fn param_value(params: &[String], key: &str) -> Result<Option<String>> {
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::PreconditionViolated(format!("parameter {p} is not key=value")))?;
        if k == key {
            return Ok(Some(v.to_string()));
        }
    }
    Ok(None)
}

fn ord_param(params: &[String], key: &str) -> Result<crate::ord::OrdTerm> {
    match param_value(params, key)? {
        Some(v) => parse_ord(&v),
        None => Err(Error::PreconditionViolated(format!("missing parameter {key}"))),
    }
}

fn build_embedding(name: &str, params: &[String]) -> Result<EmbedFn> {
    match name {
        "seq_to_tree" => Ok(seq_to_tree_fn(&ord_param(params, "alpha")?)),
        "phi_to_gapseq" => Ok(phi_to_gapseq_fn(&ord_param(params, "alpha")?)),
        "weak_to_strong" => Ok(weak_to_strong_fn(&ord_param(params, "alpha")?)),
        "strong_to_weak" => Ok(strong_to_weak_fn(&ord_param(params, "alpha")?)),
        "strong_decompose_fin" => {
            let n = ord_param(params, "bound")?;
            let k = n.to_nat().ok_or_else(|| Error::PreconditionViolated(format!("bound {n} is not finite")))?;
            Ok(strong_decompose_fin_fn(k))
        }
        "strong_decompose_inf" => strong_decompose_inf_fn(&ord_param(params, "alpha")?),
        "nat_to_bullet" => Ok(nat_to_bullet_fn()),
        "tree_label_split" => {
            let left_strict = param_value(params, "left_strict")?.is_some_and(|v| v == "true");
            tree_label_split_fn(&ord_param(params, "alpha")?, left_strict)
        }
        _ => Err(Error::UnknownEmbedding(name.to_string())),
    }
}

fn parse_input(f: &EmbedFn, text: &str) -> Result<Value> {
    match f.domain.carrier {
        Carrier::Ordinals => Ok(Value::Ord(parse_ord(text)?)),
        Carrier::Seqs(order) => Ok(Value::Seq(order, parse_seq(text)?)),
        Carrier::Trees { .. } => Ok(Value::tree(parse_unit_tree(text)?.map_leaves(&|_| Value::Unit))),
        _ => Err(Error::TypeMismatch(format!("{} has no literal input syntax", f.name))),
    }
}

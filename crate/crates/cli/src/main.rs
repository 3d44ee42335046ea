use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quotient::bounds::{
    find_witness, verify_tightness, verify_universal, BoundCell, Budget, EnumLimits, Grid, Verdict,
};
use quotient::closure::{closed_kinds, closure, is_ideal, ClosureKind};
use quotient::format::{parse_automaton, write_dfa, write_dot};
use quotient::kuratowski::{orbit, Generator};
use quotient::ops::{self, BooleanOp};
use quotient::witness::{Witness, WitnessFamily};
use quotient::{Alphabet, Execution, Language};

#[derive(Parser)]
#[command(name = "quotient", version, about = "Quotient complexity of closed regular languages")]
struct Cli {
    /// Emit machine-readable lines only
    #[arg(long, global = true)]
    porcelain: bool,
    /// Run everything on one thread
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Automaton file (DFA or NFA text format)
    #[arg(long, conflicts_with = "regex")]
    file: Option<PathBuf>,
    /// Regular expression
    #[arg(long)]
    regex: Option<String>,
    /// Alphabet for --regex, e.g. "abc"; inferred from the expression if absent
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Args, Clone, Default)]
struct Output {
    /// Emit Graphviz instead of the automaton text format
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Complexity, closedness and ideal properties of a language
    Info {
        #[command(flatten)]
        input: Input,
    },
    /// Prefix, suffix, factor or subword closure
    Closure {
        #[arg(long)]
        kind: ClosureKind,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Apply an operation and emit the result
    Apply {
        /// complement, star, plus, reverse, residual, union, intersection,
        /// difference, symdiff or product
        #[arg(long)]
        op: String,
        #[command(flatten)]
        input: Input,
        /// Second operand file for binary operations
        #[arg(long, conflicts_with = "with_regex")]
        with_file: Option<PathBuf>,
        /// Second operand expression for binary operations
        #[arg(long)]
        with_regex: Option<String>,
        /// Word for residual
        #[arg(long, default_value = "")]
        word: String,
        #[command(flatten)]
        output: Output,
    },
    /// Print the quotient complexity
    Complexity {
        #[command(flatten)]
        input: Input,
    },
    /// Emit a witness language from one of the built-in families
    Witness {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Left operand complexity for pair families
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Check a bound cell, by witnesses (default) or exhaustively (--universal)
    Verify {
        /// op:class[:side], e.g. product:prefix, star:suffix:eq, closure:suffix:has-empty
        #[arg(long)]
        cell: String,
        /// n range, e.g. 3..8
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// m range for binary cells; defaults to the n range
        #[arg(long, value_parser = parse_range)]
        m: Option<RangeInclusive<usize>>,
        /// Search for operands where no generator exists
        #[arg(long)]
        search: bool,
        /// Enumerate every class member up to the top of the n range instead
        #[arg(long)]
        universal: bool,
        /// Alphabet size for --universal, largest alphabet for --search
        #[arg(long)]
        letters: Option<usize>,
        #[arg(long, default_value_t = Budget::default().seed)]
        seed: u64,
    },
    /// Search small class members for operands attaining a bound
    Search {
        #[arg(long)]
        cell: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Required accepting-quotient count of the operand the formula reads
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = Budget::default().max_letters)]
        letters: usize,
        #[arg(long, default_value_t = Budget::default().samples)]
        samples: u64,
        #[arg(long, default_value_t = Budget::default().seed)]
        seed: u64,
    },
    /// Orbit under complement and positive or Kleene closure
    Kuratowski {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "star")]
        generator: Generator,
        /// Write each orbit member to DIR/orbit-<i>.dfa
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range {s:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn load(file: Option<&PathBuf>, regex: Option<&str>, alphabet: Option<&str>) -> Result<Language, Failure> {
    match (file, regex) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let l = parse_automaton(&text)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?
                .to_language();
            match alphabet {
                Some(a) => Ok(l.widen(&Alphabet::parse(a)?)?),
                None => Ok(l),
            }
        }
        (None, Some(expr)) => Ok(match alphabet {
            Some(a) => Language::parse(expr, &Alphabet::parse(a)?)?,
            None => Language::parse_inferred(expr)?,
        }),
        (None, None) => Err(Failure("give --file or --regex".into())),
    }
}

impl Input {
    fn language(&self) -> Result<Language, Failure> {
        load(self.file.as_ref(), self.regex.as_deref(), self.alphabet.as_deref())
    }
}

fn render(l: &Language, output: &Output) -> String {
    if output.dot {
        write_dot(l.dfa())
    } else {
        write_dfa(l.dfa())
    }
}

fn names<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(",")
    }
}

fn info(l: &Language, porcelain: bool) -> String {
    let kinds = closed_kinds(l);
    let ideals = ClosureKind::ALL.into_iter().filter(|&k| is_ideal(k, l)).map(ClosureKind::ideal_name);
    let fields = [
        ("alphabet", l.alphabet().to_string()),
        ("kappa", l.complexity().to_string()),
        ("empty-quotient", yes_no(l.has_empty_quotient())),
        ("accepting-quotients", ops::accepting_quotient_count(l).to_string()),
        ("contains-epsilon", yes_no(l.contains_epsilon())),
        ("closed-classes", names(&kinds)),
        ("ideal-duals", names(kinds.iter().map(|k| k.ideal_name()))),
        ("ideals", names(ideals)),
    ];
    let mut out = String::new();
    for (key, value) in fields {
        if porcelain {
            writeln!(out, "{key}={value}").unwrap();
        } else {
            writeln!(out, "{key:<20} {value}").unwrap();
        }
    }
    out
}

fn yes_no(b: bool) -> String {
    (if b { "yes" } else { "no" }).into()
}

fn apply(op: &str, l: &Language, other: Option<Language>, word: &str) -> Result<Language, Failure> {
    let unary = match op {
        "complement" => Some(ops::complement(l)),
        "star" => Some(ops::star(l)),
        "plus" => Some(ops::plus(l)),
        "reverse" | "reversal" => Some(ops::reverse(l)),
        "residual" => Some(ops::residual(l, word)?),
        _ => None,
    };
    if let Some(result) = unary {
        return Ok(result);
    }
    let other = other.ok_or_else(|| Failure(format!("{op} needs --with-file or --with-regex")))?;
    if op == "product" {
        return Ok(ops::product(l, &other));
    }
    let boolean = BooleanOp::ALL
        .into_iter()
        .find(|b| b.name() == op)
        .ok_or_else(|| Failure(format!("unknown operation {op:?}")))?;
    Ok(ops::boolean(boolean, l, &other))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let porcelain = cli.porcelain;
    match cli.command {
        Command::Info { input } => print!("{}", info(&input.language()?, porcelain)),
        Command::Closure { kind, input, output } => {
            print!("{}", render(&closure(kind, &input.language()?), &output))
        }
        Command::Apply {
            op,
            input,
            with_file,
            with_regex,
            word,
            output,
        } => {
            let l = input.language()?;
            let other = if with_file.is_some() || with_regex.is_some() {
                Some(load(with_file.as_ref(), with_regex.as_deref(), input.alphabet.as_deref())?)
            } else {
                None
            };
            print!("{}", render(&apply(&op, &l, other, &word)?, &output));
        }
        Command::Complexity { input } => println!("{}", input.language()?.complexity()),
        Command::Witness { family, n, m, output } => {
            let family = WitnessFamily::from_name(&family, m.unwrap_or(0), n)?;
            if family.is_pair() && m.is_none() {
                return Err(Failure(format!("{} needs --m", family.name())));
            }
            match family.build()? {
                Witness::Single(l) => print!("{}", render(&l, &output)),
                Witness::Pair(k, l) => {
                    print!("# K\n{}\n# L\n{}", render(&k, &output), render(&l, &output))
                }
            }
        }
        Command::Verify {
            cell,
            n,
            m,
            search,
            universal,
            letters,
            seed,
        } => {
            let cell: BoundCell = cell.parse()?;
            let report = if universal {
                let limits = EnumLimits::default();
                verify_universal(&cell, *n.end(), letters.unwrap_or(2), limits, exec)?
            } else {
                let budget = Budget {
                    seed,
                    max_letters: letters.unwrap_or(Budget::default().max_letters),
                    ..Budget::default()
                };
                let grid = Grid { m, n };
                verify_tightness(&cell, &grid, search.then_some(&budget), exec)?
            };
            if !porcelain {
                println!("cell {cell}, bound {}", cell.formula_text());
            }
            print!("{report}");
            if !porcelain {
                println!("runtime {:.2?}", report.runtime);
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Search {
            cell,
            n,
            m,
            k,
            letters,
            samples,
            seed,
        } => {
            let cell: BoundCell = cell.parse()?;
            let budget = Budget {
                max_letters: letters,
                samples,
                seed,
                ..Budget::default()
            };
            let out = find_witness(&cell, m, n, k, &budget, exec)?;
            let verdict = match out.kappa {
                Some(kappa) => Verdict::of(kappa, out.bound),
                None => Verdict::Inconclusive,
            };
            let mut line = format!("SEARCH cell={cell}");
            if cell.op.arity() == 2 {
                line += &format!(" m={m}");
            }
            line += &format!(" n={n}");
            if let Some(k) = out.k {
                line += &format!(" k={k}");
            }
            match out.kappa {
                Some(kappa) => line += &format!(" kappa={kappa}"),
                None => line += " kappa=-",
            }
            line += &format!(" bound={} verdict={verdict}", out.bound);
            if let Some(letters) = out.letters {
                line += &format!(" letters={letters}");
            }
            println!("{line} examined={} seed={seed}", out.examined);
            if !porcelain {
                match out.hit {
                    Some(Witness::Single(l)) => print!("{}", write_dfa(l.dfa())),
                    Some(Witness::Pair(k, l)) => {
                        print!("# K\n{}\n# L\n{}", write_dfa(k.dfa()), write_dfa(l.dfa()))
                    }
                    None => {}
                }
            }
            if verdict == Verdict::Violation {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Kuratowski {
            input,
            generator,
            emit,
        } => {
            let l = input.language()?;
            let o = orbit(&l, generator);
            if let Some(dir) = &emit {
                fs::create_dir_all(dir)?;
            }
            for (i, entry) in o.entries.iter().enumerate() {
                let mut line = if porcelain {
                    format!("ORBIT expr={} kappa={}", entry.label(), entry.complexity())
                } else {
                    format!("{:<8} kappa={}", entry.label(), entry.complexity())
                };
                if let Some(dir) = &emit {
                    let path = dir.join(format!("orbit-{i}.dfa"));
                    let text = format!("# {}\n{}", entry.label(), write_dfa(entry.language.dfa()));
                    fs::write(&path, text)?;
                    line += &format!(" file={}", path.display());
                }
                println!("{line}");
            }
            if !porcelain {
                println!("{} languages under complement and {generator}", o.len());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

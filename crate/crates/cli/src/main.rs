use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use coxstat::bijection::{b_code, from_hat, to_hat};
use coxstat::qpoly::{
    closed_b, closed_d, closed_d_factored, closed_s, closed_s_reciprocal, distribution,
    shepard_todd, solomon, DistOptions, ExponentList,
};
use coxstat::sorting::{fork_display, selection_sort};
use coxstat::stats::RlenSource;
use coxstat::suite::{run_suite, CheckResult, Suite};
use coxstat::{parse_element, BivarPoly, Error, GroupTag, Limits, Stat};

const SCHEMA: &str = "coxstat/1";

#[derive(Parser)]
#[command(
    name = "coxstat",
    version,
    about = "Sorting index and companion statistics on S_n, B_n and D_n"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for enumeration (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true)]
    max_elements: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Every statistic defined for one element.
    Stats {
        #[arg(long, short)]
        group: GroupTag,
        /// Space-separated one-line word, e.g. "2 -4 5 -1 -3".
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Selection-sort factorization and sorting index.
    Sort {
        #[arg(long, short)]
        group: GroupTag,
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Also print the intermediate words.
        #[arg(long)]
        trace: bool,
    },
    /// Joint distribution of two statistics over a whole group.
    Dist {
        #[arg(long, short)]
        group: GroupTag,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q_stat: Option<Stat>,
        #[arg(long)]
        t_stat: Option<Stat>,
        /// Compare against a closed form; exit status 1 if they differ.
        #[arg(long, value_enum)]
        compare: Option<ClosedForm>,
        /// Compute reflection length by breadth-first search only.
        #[arg(long)]
        rlen_bfs: bool,
    },
    /// Run the exhaustive verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Per-type rank caps, e.g. "A=7,B=5,D=6".
        #[arg(long)]
        max_n: Option<String>,
    },
    /// The cycle-to-word bijection on S_n.
    Bijection {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        inverse: bool,
    },
    /// The B-code of a permutation.
    Bcode {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClosedForm {
    /// prod (t + [i]_q - 1)
    #[value(name = "S")]
    S,
    /// prod (1 + t[i]_q - t)
    #[value(name = "Srec")]
    SRec,
    /// prod (1 + t[2i]_q - t)
    #[value(name = "B")]
    B,
    /// [n]_q prod [2i]_q
    #[value(name = "D")]
    D,
    /// prod (1 + q^i)[i+1]_q
    #[value(name = "Dfactored")]
    DFactored,
    /// prod [e_i + 1]_q
    #[value(name = "solomon")]
    Solomon,
    /// prod (1 + e_i t)
    #[value(name = "shepard-todd")]
    ShepardTodd,
}

impl ClosedForm {
    fn name(self) -> &'static str {
        match self {
            ClosedForm::S => "S",
            ClosedForm::SRec => "Srec",
            ClosedForm::B => "B",
            ClosedForm::D => "D",
            ClosedForm::DFactored => "Dfactored",
            ClosedForm::Solomon => "solomon",
            ClosedForm::ShepardTodd => "shepard-todd",
        }
    }

    fn eval(self, tag: GroupTag, n: usize) -> Result<BivarPoly, Error> {
        let n32 = n as u32;
        match self {
            ClosedForm::S => closed_s(n32),
            ClosedForm::SRec => closed_s_reciprocal(n32),
            ClosedForm::B => closed_b(n32),
            ClosedForm::D => closed_d(n32),
            ClosedForm::DFactored => closed_d_factored(n32),
            ClosedForm::Solomon | ClosedForm::ShepardTodd if tag == GroupTag::A && n == 1 => {
                Ok(BivarPoly::one())
            }
            ClosedForm::Solomon => Ok(solomon(&ExponentList::for_group(tag, n)?)),
            ClosedForm::ShepardTodd => Ok(shepard_todd(&ExponentList::for_group(tag, n)?)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Props,
    Identities,
    Oracle,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::All => Suite::ALL.to_vec(),
            SuiteArg::Props => vec![Suite::Props],
            SuiteArg::Identities => vec![Suite::Identities],
            SuiteArg::Oracle => vec![Suite::Oracle],
        }
    }
}

/// What a command produced: text to print and whether a comparison failed.
struct Outcome {
    output: String,
    mismatch: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            mismatch: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.max_elements {
        Some(m) => Limits::with_max_elements(m),
        None => Limits::default(),
    };
    let result = match cli.threads {
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| run(&cli, &limits)),
            Err(e) => Err(Error::Invalid(format!("cannot start thread pool: {e}"))),
        },
        None => run(&cli, &limits),
    };
    match result {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn json_doc(command: &str, body: Value) -> String {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
        doc.extend(body);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli, limits: &Limits) -> Result<Outcome, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Stats { group, word } => stats(format, *group, word),
        Command::Sort { group, word, trace } => sort(format, *group, word, *trace),
        Command::Dist {
            group,
            n,
            q_stat,
            t_stat,
            compare,
            rlen_bfs,
        } => {
            let opts = DistOptions {
                limits: *limits,
                rlen: if *rlen_bfs {
                    RlenSource::Bfs
                } else {
                    RlenSource::Auto
                },
            };
            dist(format, *group, *n, *q_stat, *t_stat, *compare, &opts)
        }
        Command::Verify { suite, max_n } => verify(format, *suite, max_n.as_deref(), limits),
        Command::Bijection { word, inverse } => {
            let w = parse_element(word, GroupTag::A)?;
            let image = if *inverse { from_hat(&w)? } else { to_hat(&w)? };
            Ok(Outcome::ok(match format {
                Format::Text => format!("{image}\n"),
                Format::Csv => format!("input,output\n{w},{image}\n"),
                Format::Json => json_doc(
                    "bijection",
                    json!({ "inverse": inverse, "input": w.word(), "output": image.word() }),
                ),
            }))
        }
        Command::Bcode { word } => {
            let w = parse_element(word, GroupTag::A)?;
            let code = b_code(&w)?;
            let joined = code
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",");
            Ok(Outcome::ok(match format {
                Format::Text => format!("{joined}\n"),
                Format::Csv => {
                    let mut s = String::from("j,b\n");
                    for (j, b) in code.iter().enumerate() {
                        let _ = writeln!(s, "{},{b}", j + 1);
                    }
                    s
                }
                Format::Json => json_doc("bcode", json!({ "input": w.word(), "code": code })),
            }))
        }
    }
}

fn stats(format: Format, tag: GroupTag, word: &str) -> Result<Outcome, Error> {
    let w = parse_element(word, tag)?;
    let values = Stat::for_tag(tag)
        .map(|s| Ok((s, s.eval(&w)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Outcome::ok(match format {
        Format::Text => {
            let parts: Vec<String> = values.iter().map(|(s, v)| format!("{s}={v}")).collect();
            format!("{}\n", parts.join(" "))
        }
        Format::Csv => {
            let mut s = String::from("stat,value\n");
            for (stat, v) in &values {
                let _ = writeln!(s, "{stat},{v}");
            }
            s
        }
        Format::Json => {
            let map: serde_json::Map<String, Value> = values
                .iter()
                .map(|(s, v)| (s.name().to_string(), json!(v)))
                .collect();
            json_doc(
                "stats",
                json!({ "group": tag.to_string(), "word": w.word(), "stats": map }),
            )
        }
    }))
}

fn sort(format: Format, tag: GroupTag, word: &str, trace: bool) -> Result<Outcome, Error> {
    let w = parse_element(word, tag)?;
    let cert = selection_sort(&w);
    let factors: Vec<String> = cert.factors.iter().map(ToString::to_string).collect();
    Ok(Outcome::ok(match format {
        Format::Text => {
            let mut s = format!("{}; sor={}\n", factors.join(" "), cert.sor_value);
            if trace {
                for (k, state) in cert.trace.iter().enumerate() {
                    let label = match k {
                        0 => "start".to_string(),
                        _ => format!("after {}", cert.factors[cert.factors.len() - k]),
                    };
                    let _ = writeln!(s, "{label}:");
                    let body = if tag == GroupTag::D {
                        fork_display(state)
                    } else {
                        state.to_string()
                    };
                    for line in body.lines() {
                        let _ = writeln!(s, "  {line}");
                    }
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("j,i\n");
            for t in &cert.factors {
                let _ = writeln!(s, "{},{}", t.j, t.i);
            }
            s
        }
        Format::Json => {
            let mut body = serde_json::to_value(&cert).expect("serializable");
            if let Value::Object(map) = &mut body {
                map.insert("group".into(), json!(tag.to_string()));
                if !trace {
                    map.remove("trace");
                }
            }
            json_doc("sort", body)
        }
    }))
}

#[derive(Serialize)]
struct Comparison {
    closed_form: &'static str,
    equal: bool,
}

fn dist(
    format: Format,
    tag: GroupTag,
    n: usize,
    q_stat: Option<Stat>,
    t_stat: Option<Stat>,
    compare: Option<ClosedForm>,
    opts: &DistOptions,
) -> Result<Outcome, Error> {
    let poly = distribution(tag, n, q_stat, t_stat, opts)?;
    let comparison = match compare {
        Some(form) => Some(Comparison {
            closed_form: form.name(),
            equal: form.eval(tag, n)? == poly,
        }),
        None => None,
    };
    let mismatch = comparison.as_ref().is_some_and(|c| !c.equal);
    let verdict = |c: &Comparison| {
        format!(
            "{} {}",
            if c.equal { "equal to" } else { "differs from" },
            c.closed_form
        )
    };
    let output = match format {
        Format::Text => {
            let mut s = format!("{poly}\n");
            if let Some(c) = &comparison {
                let _ = writeln!(s, "{}", verdict(c));
            }
            s
        }
        Format::Csv => {
            if let Some(c) = &comparison {
                eprintln!("{}", verdict(c));
            }
            poly.to_csv()
        }
        Format::Json => json_doc(
            "dist",
            json!({
                "group": tag.to_string(),
                "n": n,
                "q_stat": q_stat.map(Stat::name),
                "t_stat": t_stat.map(Stat::name),
                "polynomial": poly,
                "comparison": comparison,
            }),
        ),
    };
    Ok(Outcome { output, mismatch })
}

fn verify(
    format: Format,
    which: SuiteArg,
    max_n: Option<&str>,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let mut results: Vec<CheckResult> = Vec::new();
    let mut ranks = serde_json::Map::new();
    for suite in which.suites() {
        let r = match max_n {
            Some(text) => suite.default_ranks().with_overrides(text)?,
            None => suite.default_ranks(),
        };
        ranks.insert(suite.name().into(), json!(r));
        results.extend(run_suite(suite, &r, limits));
    }
    let failed = results.iter().filter(|c| !c.ok).count();
    let output = match format {
        Format::Text => {
            let width = results.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let mut s = String::new();
            for c in &results {
                let _ = writeln!(
                    s,
                    "{:<4} {:<10} {:<width$} {:>10.1} ms  {}",
                    if c.ok { "ok" } else { "FAIL" },
                    c.suite.name(),
                    c.name,
                    c.elapsed.as_secs_f64() * 1000.0,
                    c.detail,
                );
            }
            let _ = writeln!(s, "{} checks, {} failed", results.len(), failed);
            s
        }
        Format::Csv => {
            let mut s = String::from("suite,check,ok\n");
            for c in &results {
                let _ = writeln!(
                    s,
                    "{},\"{}\",{}",
                    c.suite.name(),
                    c.name.replace('"', "\"\""),
                    c.ok
                );
            }
            s
        }
        Format::Json => json_doc(
            "verify",
            json!({ "ranks": ranks, "ok": failed == 0, "checks": results }),
        ),
    };
    Ok(Outcome {
        output,
        mismatch: failed > 0,
    })
}

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twobridge::conway::{classify, equivalent, Convention, ConwayWord, MirrorMode};
use twobridge::km::{generate_family, km_words_in_range, random_km_words, unknotting_move, Generator};
use twobridge::knot::convention::{degree_fuzz, degree_prediction, scan_readings, Reading, LITERAL_READING};
use twobridge::knot::{cross_check_word, diagram_from_word, route_sweep};
use twobridge::sw::Scenario;
use twobridge::Error;

const LONG_VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    "\ndefault word convention: plus (not pinned: no reading of the degree formula is consistent)"
);

#[derive(Parser)]
#[command(name = "twobridge", version, long_version = LONG_VERSION)]
#[command(about = "Two-bridge knots in Conway notation and their polynomial invariants")]
struct Cli {
    /// Evaluation rule for words without an @plus/@minus suffix.
    #[arg(long, global = true, value_enum, default_value_t = ConventionArg::Plus)]
    convention: ConventionArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Plus,
    Minus,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Plus => Convention::Plus,
            ConventionArg::Minus => Convention::Minus,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Pin,
    Routes,
    Degree,
    Unknot,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical class p/q of a word.
    Classify {
        word: String,
        /// Identify mirror images.
        #[arg(long)]
        fold: bool,
    },
    /// Whether two words name the same class.
    Equiv {
        first: String,
        second: String,
        #[arg(long)]
        fold: bool,
    },
    /// Conway and Alexander polynomials by both routes.
    Invariant {
        word: String,
        #[arg(long)]
        machine: bool,
    },
    /// PD code of the diagram of a word.
    Diagram { word: String },
    /// Unknotting-number-one knots with strictly increasing degree.
    Family {
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value = "even-palindrome")]
        generator: Generator,
    },
    /// Degree-formula scan, route agreement and unknotting-move checks.
    Verify {
        #[arg(long, default_value_t = 60)]
        max_p: u64,
        /// Random cases for the degree and unknotting fuzzers (needs --seed).
        #[arg(long, default_value_t = 0)]
        fuzz: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Restrict to these checks.
        #[arg(long, value_enum, value_delimiter = ',')]
        only: Vec<Check>,
    },
    /// Scan every reading of the degree formula against computed degrees.
    Pin {
        #[arg(long, default_value_t = 60)]
        max_p: u64,
    },
    /// Knot surgery on a torus for each knot of a scenario.
    Surgery {
        /// Built-in scenario name or path to a scenario file.
        #[arg(long)]
        scenario: String,
        #[arg(long)]
        machine: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = match &e {
            Error::Verification(m) => m.clone(),
            other => other.to_string(),
        };
        match e {
            Error::Parse { .. }
            | Error::Scenario { .. }
            | Error::ZeroEntry
            | Error::EmptyWord
            | Error::TrivialKnot(_)
            | Error::NotKnot(_)
            | Error::NotNormalForm(_)
            | Error::RankMismatch { .. }
            | Error::ZeroVector
            | Error::NotCoprime(_)
            | Error::Invalid(_) => Failure::Usage(msg),
            Error::Verification(_) | Error::NoConsistentConvention(_) | Error::AmbiguousConvention(_) => {
                Failure::Verification(msg)
            }
            _ => Failure::Internal(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal invariant breach: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let conv: Convention = cli.convention.into();
    let word = |s: &str| ConwayWord::parse_with_default(s, conv);
    let mode = |fold: bool| if fold { MirrorMode::Fold } else { MirrorMode::Sensitive };
    match cli.command {
        Command::Classify { word: w, fold } => {
            println!("{}", classify(&word(&w)?, mode(fold))?);
        }
        Command::Equiv { first, second, fold } => {
            let same = equivalent(&word(&first)?, &word(&second)?, mode(fold))?;
            println!("{}", if same { "equivalent" } else { "distinct" });
        }
        Command::Invariant { word: w, machine } => invariant(&word(&w)?, machine)?,
        Command::Diagram { word: w } => {
            println!("{}", diagram_from_word(&word(&w)?)?.to_pd_string());
        }
        Command::Family { count, generator } => {
            for m in generate_family(count, generator, conv)? {
                println!("{}", m.record());
            }
        }
        Command::Pin { max_p } => {
            let report = scan_readings(max_p)?;
            print!("{report}");
            match report.pinned() {
                Some(r) => println!("pinned: {r}"),
                None => {
                    let n = report.consistent().len();
                    let what = if n == 0 { "no consistent reading" } else { "ambiguous: several consistent readings" };
                    return Err(Failure::Verification(what.into()));
                }
            }
        }
        Command::Verify { max_p, fuzz, seed, only } => verify(max_p, fuzz, seed, &only, conv)?,
        Command::Surgery { scenario, machine } => {
            let s = Scenario::load(&scenario)?;
            let report = s.run()?;
            if machine {
                for line in report.machine_lines() {
                    println!("{line}");
                }
            } else {
                println!("scenario {}: classes {} torus {:?}", s.name, s.classes, s.torus.vector());
                println!("{report}");
            }
            if report.any_violated() {
                return Err(Failure::Internal("surgery bound differs from 2·d·span on a singleton".into()));
            }
        }
    }
    Ok(())
}

fn invariant(word: &ConwayWord, machine: bool) -> Result<(), Failure> {
    let check = cross_check_word(word)?;
    let class = check.class.as_ref().map_or("unknot".to_string(), |c| c.to_string());
    let degree = check.conway_degree();
    let span = check.alexander.span()?;
    let reading = Reading {
        convention: word.convention(),
        ..LITERAL_READING
    };
    let prediction = match degree_prediction(word, reading) {
        Ok(n) => n.to_string(),
        Err(_) => "n/a".to_string(),
    };
    let verdict = match check.first_failure() {
        None => "agree",
        Some(_) => "DISAGREE",
    };
    if machine {
        println!(
            "word={word}\tclass={class}\tconway={}\tdeg={degree}\tspan={span}\talexander={}\tprediction={prediction}\troutes={verdict}",
            check.conway.to_machine(),
            check.alexander.to_machine()
        );
    } else {
        println!("word       {word}");
        println!("class      {class}");
        println!("conway     {}", check.conway);
        println!("alexander  {}", check.alexander);
        println!("degrees    deg ∇ = {degree}, span Δ = {span}");
        println!("prediction {prediction} ({reading})");
        println!("routes     {verdict}");
    }
    match check.first_failure() {
        Some(why) => Err(Failure::Verification(format!("{word}: {why}"))),
        None => Ok(()),
    }
}

fn verify(max_p: u64, fuzz: usize, seed: Option<u64>, only: &[Check], conv: Convention) -> Result<(), Failure> {
    if fuzz > 0 && seed.is_none() {
        return Err(Failure::Usage("--fuzz requires --seed".into()));
    }
    let enabled = |c: Check| only.is_empty() || only.contains(&c);
    let mut failures = Vec::new();

    if enabled(Check::Pin) {
        let report = scan_readings(max_p)?;
        let consistent = report.consistent();
        let summary: Vec<String> = report
            .results
            .iter()
            .map(|r| format!("{}={}", r.reading, r.mismatch_count))
            .collect();
        let ok = consistent.len() == 1;
        println!(
            "pin     {}  {} knots, mismatches per reading: {}",
            pass(ok),
            report.knots,
            summary.join(" ")
        );
        if !ok {
            failures.push(format!("{} consistent reading(s) of the degree formula", consistent.len()));
        }
    }

    if enabled(Check::Routes) {
        let results = route_sweep(max_p);
        let mut bad = Vec::new();
        for (class, r) in &results {
            match r {
                Ok(check) => {
                    if let Some(why) = check.first_failure() {
                        bad.push(format!("{class}: {why}"));
                    }
                }
                Err(e) => bad.push(format!("{class}: {e}")),
            }
        }
        println!("routes  {}  {} knots, {} failures", pass(bad.is_empty()), results.len(), bad.len());
        for b in bad.iter().take(10) {
            println!("        {b}");
        }
        if !bad.is_empty() {
            failures.push(format!("{} route failures", bad.len()));
        }
    }

    if let Some(seed) = seed.filter(|_| fuzz > 0) {
        if enabled(Check::Degree) {
            let report = degree_fuzz(fuzz, seed, LITERAL_READING, 8)?;
            let ok = report.mismatches.is_empty();
            println!(
                "degree  {}  {} words ({}), {} mismatches",
                pass(ok),
                report.checked,
                report.reading,
                report.mismatches.len()
            );
            for m in report.mismatches.iter().take(10) {
                println!("        {} predicts {} has {}", m.word, m.predicted, m.actual);
            }
            if !ok {
                failures.push(format!("{} degree mismatches", report.mismatches.len()));
            }
        }
    }

    if enabled(Check::Unknot) {
        let mut words = km_words_in_range(6, 3, 4);
        if let Some(seed) = seed.filter(|_| fuzz > 0) {
            words.extend(random_km_words(fuzz, seed, 12, 6, 8));
        }
        let bad: Vec<String> = words
            .iter()
            .filter(|km| !unknotting_move(km, conv))
            .map(|km| km.to_string())
            .collect();
        println!("unknot  {}  {} words, {} failures", pass(bad.is_empty()), words.len(), bad.len());
        for b in bad.iter().take(10) {
            println!("        {b}");
        }
        if !bad.is_empty() {
            failures.push(format!("{} unknotting-move failures", bad.len()));
        }
    }

    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(failures.join("; ")))
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

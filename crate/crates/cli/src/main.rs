use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use garside::conjugacy::{conjugate, cycling_bound};
use garside::families::reproduction_cases;
use garside::{
    class_invariants, conjugating_element, cycle, cycling_profile, decycle, decycling_profile, sss_enumerate,
    sss_orbits, BandFactor, BraidError, BraidWord, CanonicalFactor, Generator, Letter, NormalForm, PermFactor,
    Presentation, DEFAULT_SSS_CAP,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

/// Garside normal forms, class invariants and super summit sets in the braid
/// groups B_n.
#[derive(Parser)]
#[command(name = "garside", version)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    /// Braid index (number of strands).
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    /// Presentation of the input words.
    #[arg(short = 'p', long = "presentation", global = true, default_value = "old")]
    presentation: Presentation,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest super summit set to build before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_SSS_CAP, value_parser = clap::value_parser!(usize))]
    cap: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form of a word.
    Nf(Word),
    /// Conjugacy class invariants: inf, sup, exponent sum, geodesic length,
    /// super summit set size and orbit sizes.
    Inv(Word),
    /// Decide whether two words are conjugate; prints a conjugator `g` with
    /// FIRST = g SECOND g^-1.
    Conj {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Apply one cycling.
    Cycle {
        #[command(flatten)]
        word: Word,
        /// Print inf after each cycling up to the first increase.
        #[arg(long)]
        profile: bool,
    },
    /// Apply one decycling.
    Decycle {
        #[command(flatten)]
        word: Word,
        /// Print sup after each decycling up to the first decrease.
        #[arg(long)]
        profile: bool,
    },
    /// List the super summit set.
    Sss(Word),
    /// Rewrite a word in the other presentation.
    Convert {
        #[command(flatten)]
        word: Word,
        #[arg(long)]
        to: Presentation,
    },
    /// Check the cycling counts of the known slow families.
    Reproduce {
        /// Also check the cycling bound on this many seeded random words.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

#[derive(Args)]
struct Word {
    /// Whitespace-separated letters, e.g. "1 -2 1" or "2.1 [5:3] -3.1".
    #[arg(allow_hyphen_values = true, default_value = "")]
    word: String,
}

enum Failure {
    Input(String),
    Compute(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Compute(e.to_string())
        }
    }
}

type Outcome = Result<Report, Failure>;

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Reproduce { random } => reproduce(&cli.config, *random),
        Command::Convert { word, to } => convert(&cli.config, &word.word, *to),
        command => match cli.config.presentation {
            Presentation::Old => run::<PermFactor>(&cli.config, command),
            Presentation::New => run::<BandFactor>(&cli.config, command),
        },
    };
    match result {
        Ok(report) => {
            if cli.config.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                println!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn strands(config: &Config) -> Result<usize, Failure> {
    match config.n {
        Some(n) if n >= 2 => Ok(n),
        Some(n) => Err(BraidError::BadIndex(n).into()),
        None => Err(Failure::Input("the braid index -n is required".into())),
    }
}

fn parse<F: CanonicalFactor>(config: &Config, text: &str) -> Result<NormalForm<F>, Failure> {
    let word = BraidWord::parse(text, strands(config)?, config.presentation)?;
    Ok(NormalForm::from_word(&word)?)
}

fn describe<F: CanonicalFactor>(nf: &NormalForm<F>) -> Value {
    json!({
        "normal_form": nf.to_json(),
        "text": nf.to_string(),
        "word": nf.to_word().to_string(),
        "inf": nf.inf(),
        "sup": nf.sup(),
    })
}

fn run<F: CanonicalFactor>(config: &Config, command: &Command) -> Outcome {
    match command {
        Command::Nf(w) => {
            let nf = parse::<F>(config, &w.word)?;
            Ok(Report::ok(nf.to_string(), describe(&nf)))
        }
        Command::Inv(w) => {
            let nf = parse::<F>(config, &w.word)?;
            let inv = class_invariants(&nf, config.cap)?;
            let text = format!(
                "inf {}\nsup {}\nexponent_sum {}\ngeodesic_length {}\nsss_size {}\norbit_sizes {:?}",
                inv.inf, inv.sup, inv.exponent_sum, inv.geodesic_length, inv.sss_size, inv.orbit_sizes
            );
            let mut json = serde_json::to_value(&inv).expect("serializable");
            json["word"] = Value::String(nf.to_word().to_string());
            Ok(Report::ok(text, json))
        }
        Command::Conj { first, second } => {
            let v = parse::<F>(config, first)?;
            let w = parse::<F>(config, second)?;
            let witness = conjugating_element(&v, &w, config.cap)?;
            debug_assert!(witness.as_ref().is_none_or(|g| conjugate(&w, g) == v));
            let text = match &witness {
                Some(g) => format!("true\nwitness {}", g.to_word()),
                None => "false".to_string(),
            };
            let json = json!({
                "conjugate": witness.is_some(),
                "witness": witness.map(|g| g.to_word().to_string()),
            });
            Ok(Report::ok(text, json))
        }
        Command::Cycle { word, profile } => step::<F>(config, &word.word, *profile, cycle, cycling_profile, "inf"),
        Command::Decycle { word, profile } => {
            step::<F>(config, &word.word, *profile, decycle, decycling_profile, "sup")
        }
        Command::Sss(w) => {
            let nf = parse::<F>(config, &w.word)?;
            let sss = sss_enumerate(&nf, config.cap)?;
            let orbits = sss_orbits(&sss);
            let members: Vec<String> = sss.members().iter().map(|m| m.to_string()).collect();
            let text = format!(
                "size {} inf {} sup {} orbits {:?}\n{}",
                sss.len(),
                sss.inf_max(),
                sss.sup_min(),
                orbits,
                members.join("\n")
            );
            let json = json!({
                "size": sss.len(),
                "inf": sss.inf_max(),
                "sup": sss.sup_min(),
                "orbit_sizes": orbits,
                "members": members,
            });
            Ok(Report::ok(text, json))
        }
        Command::Convert { .. } | Command::Reproduce { .. } => unreachable!("dispatched in main"),
    }
}

fn step<F: CanonicalFactor>(
    config: &Config,
    text: &str,
    profile: bool,
    apply: fn(&NormalForm<F>) -> NormalForm<F>,
    trace: fn(&NormalForm<F>) -> Vec<(usize, i64)>,
    label: &str,
) -> Outcome {
    let nf = parse::<F>(config, text)?;
    if profile {
        let steps = trace(&nf);
        let lines: Vec<String> = steps.iter().map(|(i, v)| format!("{i} {v}")).collect();
        let json = json!({
            "bound": cycling_bound::<F>(nf.strands()),
            label: steps.iter().map(|&(i, v)| json!({"step": i, label: v})).collect::<Vec<_>>(),
        });
        return Ok(Report::ok(lines.join("\n"), json));
    }
    let next = apply(&nf);
    Ok(Report::ok(next.to_string(), describe(&next)))
}

fn convert(config: &Config, text: &str, to: Presentation) -> Outcome {
    let word = BraidWord::parse(text, strands(config)?, config.presentation)?;
    let out = word.convert(to);
    Ok(Report::ok(
        out.to_string(),
        json!({"n": out.strands(), "presentation": to, "word": out.to_string()}),
    ))
}

fn reproduce(config: &Config, random: usize) -> Outcome {
    let cases = reproduction_cases(3..=10, 2..=4);
    let mut lines = Vec::new();
    let mut ok = true;
    for case in &cases {
        ok &= case.passed();
        lines.push(format!(
            "[{}] {}: expected {}, observed {}",
            if case.passed() { "PASS" } else { "FAIL" },
            case.label,
            case.expected,
            case.observed.map_or("no increase".to_string(), |s| s.to_string())
        ));
    }
    let bound = (random > 0).then(|| random_bound_check(config.seed, random));
    if let Some((checked, violations)) = bound {
        ok &= violations == 0;
        lines.push(format!(
            "[{}] cycling bound on {checked} random words (seed {}): {violations} violations",
            if violations == 0 { "PASS" } else { "FAIL" },
            config.seed
        ));
    }
    let json = json!({
        "cases": cases,
        "random": bound.map(|(checked, violations)| json!({"seed": config.seed, "words": checked, "violations": violations})),
        "passed": ok,
    });
    Ok(Report {
        text: lines.join("\n"),
        json,
        ok,
    })
}

/// Cycles random words until inf increases or the orbit closes, counting the
/// words whose first increase comes later than `|D| - 1` cyclings.
fn random_bound_check(seed: u64, count: usize) -> (usize, usize) {
    fn late<F: CanonicalFactor>(nf: NormalForm<F>) -> bool {
        let bound = cycling_bound::<F>(nf.strands());
        let mut seen = std::collections::HashSet::new();
        let mut current = nf.clone();
        let mut steps = 0;
        while seen.insert(current.clone()) {
            current = cycle(&current);
            steps += 1;
            if current.inf() > nf.inf() {
                return steps > bound;
            }
        }
        false
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..count {
        let n = rng.gen_range(2..=6);
        let p = if rng.gen_bool(0.5) {
            Presentation::Old
        } else {
            Presentation::New
        };
        let gens: Vec<Generator> = match p {
            Presentation::Old => (1..n).map(Generator::Sigma).collect(),
            Presentation::New => (2..=n)
                .flat_map(|t| (1..t).map(move |s| Generator::Band(t, s)))
                .collect(),
        };
        let len = rng.gen_range(0..=12);
        let letters = (0..len)
            .map(|_| {
                let g = gens[rng.gen_range(0..gens.len())];
                if rng.gen_bool(0.5) {
                    Letter::neg(g)
                } else {
                    Letter::pos(g)
                }
            })
            .collect();
        let word = BraidWord::new(n, p, letters).expect("generated in range");
        let bad = match p {
            Presentation::Old => late(NormalForm::<PermFactor>::from_word(&word).expect("old word")),
            Presentation::New => late(NormalForm::<BandFactor>::from_word(&word).expect("new word")),
        };
        violations += bad as usize;
    }
    (count, violations)
}

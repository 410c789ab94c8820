use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eraser_core::coding::decode_up;
use eraser_core::omega::{
    d_check, enumerate_hv, factorize, lasso_member, member_encoded_r_approx_p, member_hv, member_lscript,
    member_r, member_r_approx_p, theta, viable_prefix, viable_prefix_within, RpIdentity,
};
use eraser_core::{
    decode, encode, enumerate_lk, erase_finite, erase_up, member_l1_grammar, member_lk, member_rp, min_k, psi_up,
    staged_erase_finite, staged_erase_up, BinaryWord, CodedWord, Error, Letter, StagedSymbol, StagedWord, Symbol,
    UpWord,
};

/// Backspace evaluation, staged erasure languages and the coded ω-power.
///
/// Coded words use `0 1 a b` (a = α, b = β). Staged words are one argument
/// of space-separated tokens `0`, `1`, `E<j>`. Ultimately periodic words are
/// written `prefix|period`.
#[derive(Parser)]
#[command(name = "eraser", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-eraser evaluation; every eraser acts alike.
    Erase {
        word: String,
        #[arg(long)]
        up: bool,
    },
    /// Staged evaluation with erasers 1..=k.
    StagedErase {
        word: String,
        #[arg(short)]
        k: u32,
        #[arg(long)]
        up: bool,
    },
    /// Language membership.
    Member {
        #[arg(long, value_enum)]
        lang: Lang,
        word: String,
        #[arg(short)]
        k: Option<u32>,
        #[arg(short)]
        p: Option<u32>,
    },
    /// List a language up to a length bound, one word per line.
    Enumerate {
        #[arg(value_enum)]
        lang: EnumLang,
        #[arg(short, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Least k with the staged word in L_k.
    MinK { word: String },
    /// Staged word to coded word.
    Encode {
        word: String,
        #[arg(long)]
        up: bool,
    },
    /// Coded word to staged word.
    Decode {
        word: String,
        #[arg(long)]
        up: bool,
    },
    /// Decompositions into h(V) factors.
    Factor { word: String },
    /// Is the coded word a prefix of some element of (h(V))^ω?
    Viable {
        word: String,
        /// Also require a prefix of R_p.
        #[arg(short)]
        p: Option<u32>,
    },
    /// Bounded search for a factorization of an ultimately periodic word.
    Lasso {
        word: String,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// The i-th member of h(V), or the table of the first entries.
    Theta {
        #[arg(required_unless_present = "upto", conflicts_with = "upto")]
        index: Option<usize>,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Prefix consistency of a pair (sigma, nu).
    Dcheck { sigma: String, nu: String },
    /// Compares both sides of the R_p intersection identity up to length n.
    VerifyRp {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Lang {
    L1,
    Lk,
    Lscript,
    Hv,
    R,
    Rp,
    RApprox,
    EncodedRApprox,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumLang {
    Lk,
    Hv,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(text: &str) -> Result<T, Failure> {
    Ok(text.parse()?)
}

fn require(value: Option<u32>, flag: &str) -> Result<u32, Failure> {
    match value {
        Some(v) if v >= 1 => Ok(v),
        Some(_) => Err(Failure::Input(format!("-{flag} must be at least 1"))),
        None => Err(Failure::Input(format!("-{flag} is required for this language"))),
    }
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn member(lang: Lang, word: &str, k: Option<u32>, p: Option<u32>) -> Result<bool, Failure> {
    Ok(match lang {
        Lang::L1 => {
            let w: StagedWord = parse(word)?;
            w.iter().all(|s| s.eraser_index().is_none_or(|j| j == 1)) && member_l1_grammar(&w)
        }
        Lang::Lk => member_lk(&parse::<StagedWord>(word)?, require(k, "k")?),
        Lang::Lscript => member_lscript(&parse::<CodedWord>(word)?),
        Lang::Hv => member_hv(&parse::<CodedWord>(word)?),
        Lang::R => member_r(&parse::<UpWord<Letter>>(word)?),
        Lang::Rp => member_rp(&parse::<UpWord<Symbol>>(word)?, require(p, "p")?),
        Lang::RApprox => member_r_approx_p(&parse::<UpWord<StagedSymbol>>(word)?, require(p, "p")?)?,
        Lang::EncodedRApprox => member_encoded_r_approx_p(&parse::<UpWord<Symbol>>(word)?, require(p, "p")?),
    })
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Erase { word, up: false } => format!("{}\n", erase_finite(&parse(&word)?)),
        Command::Erase { word, up: true } => format!("{}\n", erase_up(&parse(&word)?).outcome),
        Command::StagedErase { word, k, up: false } => format!("{}\n", staged_erase_finite(&parse(&word)?, k)?),
        Command::StagedErase { word, k, up: true } => format!("{}\n", staged_erase_up(&parse(&word)?, k)?),
        Command::Member { lang, word, k, p } => format!("{}\n", member(lang, &word, k, p)?),
        Command::Enumerate { lang: EnumLang::Lk, k, max_len } => lines(enumerate_lk(require(Some(k), "k")?, max_len)),
        Command::Enumerate { lang: EnumLang::Hv, max_len, .. } => lines(enumerate_hv(max_len)),
        Command::MinK { word } => match min_k(&parse(&word)?) {
            Some(k) => format!("{k}\n"),
            None => "none\n".to_string(),
        },
        Command::Encode { word, up: false } => format!("{}\n", encode(&parse::<StagedWord>(&word)?)),
        Command::Encode { word, up: true } => format!("{}\n", psi_up(&parse(&word)?)),
        Command::Decode { word, up: false } => format!("{}\n", decode(&parse::<CodedWord>(&word)?)?),
        Command::Decode { word, up: true } => format!("{}\n", decode_up(&parse(&word)?, None)?),
        Command::Factor { word } => format!("{}\n", factorize(&parse::<CodedWord>(&word)?)),
        Command::Viable { word, p: None } => format!("{}\n", viable_prefix(&parse::<CodedWord>(&word)?)),
        Command::Viable { word, p } => {
            let p = require(p, "p")?;
            format!("{}\n", viable_prefix_within(&parse::<CodedWord>(&word)?, p))
        }
        Command::Lasso { word, bound } => {
            if bound == 0 {
                return Err(Failure::Input("--bound must be at least 1".to_string()));
            }
            format!("{}\n", lasso_member(&parse(&word)?, bound))
        }
        Command::Theta { index: Some(i), .. } => format!("{}\n", theta(i)),
        Command::Theta { upto, .. } => {
            let upto = upto.unwrap_or_default();
            (0..=upto).map(|i| format!("{i}\t{}\n", theta(i))).collect()
        }
        Command::Dcheck { sigma, nu } => {
            let sigma: BinaryWord = parse(&sigma)?;
            format!("{}\n", d_check(&sigma, &parse::<CodedWord>(&nu)?))
        }
        Command::VerifyRp { p, n, report } => {
            let p = require(Some(p), "p")?;
            let identity = RpIdentity::compute(p, n);
            if let Some(path) = report {
                fs::write(&path, identity.report())
                    .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?;
            }
            format!("{}\n", identity.holds())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

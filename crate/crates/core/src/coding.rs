//! Coding of erasers over the two extra letters α and β.
//!
//! `↞_j` is coded as `α β^j α`; letters code as themselves. Codes are
//! self-delimiting, so decoding is a deterministic left-to-right scan.

use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::word::{CodedWord, StagedSymbol, StagedWord, Symbol, UpWord, Word};

/// `φ(w)`: the homomorphic image of a staged word.
pub fn encode(w: &[StagedSymbol]) -> CodedWord {
    let mut out = Vec::with_capacity(w.len());
    for &s in w {
        encode_symbol_into(s, &mut out);
    }
    Word::new(out)
}

pub(crate) fn encode_symbol_into(s: StagedSymbol, out: &mut Vec<Symbol>) {
    match s {
        StagedSymbol::Letter(l) => out.push(Symbol::Letter(l)),
        StagedSymbol::Eraser(j) => {
            out.push(Symbol::Alpha);
            out.extend(std::iter::repeat_n(Symbol::Beta, j as usize));
            out.push(Symbol::Alpha);
        }
    }
}

/// Encoded length of a single staged symbol.
pub fn code_len(s: StagedSymbol) -> usize {
    match s {
        StagedSymbol::Letter(_) => 1,
        StagedSymbol::Eraser(j) => j as usize + 2,
    }
}

/// Where the scanner stands between two input symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanState {
    Outside,
    /// After an opening α and `betas` β's.
    InCode { betas: u32 },
}

/// Incremental decoder for coded words.
#[derive(Debug, Clone, Copy)]
pub struct Scanner {
    state: ScanState,
}

impl Default for Scanner {
    fn default() -> Self {
        Scanner::new()
    }
}

impl Scanner {
    pub fn new() -> Self {
        Scanner {
            state: ScanState::Outside,
        }
    }

    pub fn state(&self) -> ScanState {
        self.state
    }

    /// Consumes one symbol. `Ok(Some(_))` when a staged symbol is complete,
    /// `Err(())` when the input cannot be a concatenation of codes.
    #[allow(clippy::result_unit_err)]
    pub fn step(&mut self, s: Symbol) -> Result<Option<StagedSymbol>, ()> {
        match (self.state, s) {
            (ScanState::Outside, Symbol::Letter(l)) => Ok(Some(StagedSymbol::Letter(l))),
            (ScanState::Outside, Symbol::Alpha) => {
                self.state = ScanState::InCode { betas: 0 };
                Ok(None)
            }
            (ScanState::InCode { betas }, Symbol::Beta) => {
                self.state = ScanState::InCode { betas: betas + 1 };
                Ok(None)
            }
            (ScanState::InCode { betas }, Symbol::Alpha) if betas >= 1 => {
                self.state = ScanState::Outside;
                Ok(Some(StagedSymbol::Eraser(betas)))
            }
            _ => Err(()),
        }
    }
}

/// An unfinished code at the end of a decoded word: `α β^betas`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dangling {
    pub betas: u32,
}

impl Dangling {
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = vec![Symbol::Alpha];
        out.extend(std::iter::repeat_n(Symbol::Beta, self.betas as usize));
        out
    }
}

impl fmt::Display for Dangling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Word::new(self.symbols()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub symbols: StagedWord,
    pub dangling: Option<Dangling>,
}

impl fmt::Display for DecodeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols)?;
        match self.dangling {
            Some(d) if self.symbols.is_empty() => write!(f, "dangling={d}"),
            Some(d) => write!(f, " dangling={d}"),
            None => Ok(()),
        }
    }
}

/// Decodes `w`, allowing it to stop inside a code.
pub fn decode(w: &[Symbol]) -> Result<DecodeResult, Error> {
    let mut scanner = Scanner::new();
    let mut symbols = Vec::new();
    for (i, &s) in w.iter().enumerate() {
        match scanner.step(s) {
            Ok(Some(out)) => symbols.push(out),
            Ok(None) => {}
            Err(()) => return Err(Error::MalformedCode { position: i + 1 }),
        }
    }
    let dangling = match scanner.state() {
        ScanState::Outside => None,
        ScanState::InCode { betas } => Some(Dangling { betas }),
    };
    Ok(DecodeResult {
        symbols: Word::new(symbols),
        dangling,
    })
}

/// Decodes `w` only if it is a complete concatenation of codes.
pub fn decode_complete(w: &[Symbol]) -> Option<StagedWord> {
    match decode(w) {
        Ok(DecodeResult { symbols, dangling: None }) => Some(symbols),
        _ => None,
    }
}

/// `ψ(x)`: encodes prefix and period, then normalizes.
pub fn psi_up(x: &UpWord<StagedSymbol>) -> UpWord<Symbol> {
    UpWord::new(encode(x.prefix()), encode(x.period()))
        .expect("a nonempty period encodes to a nonempty period")
        .normalize()
}

/// Inverse of [`psi_up`].
///
/// Fails with [`Error::MalformedCode`] when the ω-word is not an infinite
/// concatenation of codes and with [`Error::IndexOutOfRange`] when a code
/// exceeds `max_index`. Positions are 1-based over the unrolled ω-word.
pub fn decode_up(x: &UpWord<Symbol>, max_index: Option<u32>) -> Result<UpWord<StagedSymbol>, Error> {
    let mut scanner = Scanner::new();
    let mut emitted: Vec<StagedSymbol> = Vec::new();
    let mut position = 0usize;
    let mut code_start = 0usize;

    let mut feed = |s: Symbol, scanner: &mut Scanner, emitted: &mut Vec<StagedSymbol>| -> Result<(), Error> {
        position += 1;
        if s == Symbol::Alpha && scanner.state() == ScanState::Outside {
            code_start = position;
        }
        match scanner.step(s) {
            Ok(Some(out)) => emitted.push(out),
            Ok(None) => {}
            Err(()) => return Err(Error::MalformedCode { position }),
        }
        if let (Some(p), ScanState::InCode { betas }) = (max_index, scanner.state()) {
            if betas > p {
                return Err(Error::IndexOutOfRange { index: betas, stages: p });
            }
        }
        Ok(())
    };

    for &s in x.prefix() {
        feed(s, &mut scanner, &mut emitted)?;
    }
    // Scanner state at each period boundary, with the number of symbols
    // emitted so far. A repeated state closes the loop.
    let mut seen: HashMap<ScanState, usize> = HashMap::new();
    let mut periods = 0usize;
    loop {
        let state = scanner.state();
        if let Some(&start) = seen.get(&state) {
            let prefix = Word::new(emitted[..start].to_vec());
            let period = Word::new(emitted[start..].to_vec());
            return Ok(UpWord::new(prefix, period)
                .expect("a state cycle always emits")
                .normalize());
        }
        if let ScanState::InCode { betas } = state {
            // The last full period was all β: the code never closes.
            if periods >= 1 && betas as usize >= x.period().len() {
                return Err(Error::MalformedCode { position: code_start });
            }
        }
        seen.insert(state, emitted.len());
        for &s in x.period() {
            feed(s, &mut scanner, &mut emitted)?;
        }
        periods += 1;
    }
}

/// Membership in `R_p = {0, 1, αβα, …, αβ^pα}^ω`.
pub fn member_rp(x: &UpWord<Symbol>, p: u32) -> bool {
    decode_up(x, Some(p)).is_ok()
}

/// True when `w` is a prefix of some element of `R_p`.
pub fn is_rp_prefix(w: &[Symbol], p: u32) -> bool {
    match decode(w) {
        Ok(d) => d.symbols.max_index() <= p && d.dangling.is_none_or(|d| d.betas <= p),
        Err(_) => false,
    }
}

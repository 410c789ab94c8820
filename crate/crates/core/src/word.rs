//! Alphabets, finite words and ultimately periodic ω-words.
//!
//! Three alphabets are in play:
//!
//! * [`Letter`]: the base alphabet Σ = {0, 1}.
//! * [`StagedSymbol`]: Σ plus indexed erasers `↞_j` (text form `E<j>`).
//! * [`Symbol`]: Σ plus the two code letters α and β (text forms `a` and `b`).
//!
//! The alphabets are distinct types. Moving between staged and coded words
//! goes through [`crate::coding`].

use std::fmt::{self, Write as _};
use std::ops::Deref;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::Zero, Letter::One];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::Zero),
            '1' => Some(Letter::One),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
        }
    }
}

/// A letter of the coded alphabet {0, 1, α, β}.
///
/// The derived order is `0 < 1 < α < β`, which is the order used by every
/// length-lexicographic enumeration over coded words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Letter(Letter),
    Alpha,
    Beta,
}

impl Symbol {
    pub const ZERO: Symbol = Symbol::Letter(Letter::Zero);
    pub const ONE: Symbol = Symbol::Letter(Letter::One);
    pub const ALL: [Symbol; 4] = [Symbol::ZERO, Symbol::ONE, Symbol::Alpha, Symbol::Beta];

    pub fn as_letter(self) -> Option<Letter> {
        match self {
            Symbol::Letter(l) => Some(l),
            _ => None,
        }
    }
}

/// A letter of the staged alphabet Σ ∪ {↞_1, ↞_2, …}.
///
/// Eraser indices start at 1. The derived order is
/// `0 < 1 < ↞_1 < ↞_2 < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StagedSymbol {
    Letter(Letter),
    Eraser(u32),
}

impl StagedSymbol {
    pub const ZERO: StagedSymbol = StagedSymbol::Letter(Letter::Zero);
    pub const ONE: StagedSymbol = StagedSymbol::Letter(Letter::One);

    /// The eraser `↞_index`.
    ///
    /// # Panics
    ///
    /// Panics if `index` is 0.
    pub fn eraser(index: u32) -> StagedSymbol {
        assert!(index >= 1, "eraser indices start at 1");
        StagedSymbol::Eraser(index)
    }

    pub fn as_letter(self) -> Option<Letter> {
        match self {
            StagedSymbol::Letter(l) => Some(l),
            StagedSymbol::Eraser(_) => None,
        }
    }

    pub fn eraser_index(self) -> Option<u32> {
        match self {
            StagedSymbol::Eraser(j) => Some(j),
            StagedSymbol::Letter(_) => None,
        }
    }

    /// `{0, 1, ↞_1, …, ↞_k}` in symbol order.
    pub fn alphabet(k: u32) -> Vec<StagedSymbol> {
        let mut out = vec![StagedSymbol::ZERO, StagedSymbol::ONE];
        out.extend((1..=k).map(StagedSymbol::Eraser));
        out
    }
}

impl From<Letter> for Symbol {
    fn from(l: Letter) -> Self {
        Symbol::Letter(l)
    }
}

impl From<Letter> for StagedSymbol {
    fn from(l: Letter) -> Self {
        StagedSymbol::Letter(l)
    }
}

/// How an alphabet is rendered and parsed as text.
pub trait Alphabet: Copy + Eq + Ord + std::hash::Hash + fmt::Debug {
    /// Placed between consecutive symbols when rendering a word.
    const SEPARATOR: &'static str;

    fn write_symbol(&self, out: &mut String);

    /// Parses `text` as a word. `offset` is the number of characters that
    /// precede `text` in the original input; reported positions are 1-based
    /// over the original input.
    fn parse_word(text: &str, offset: usize) -> Result<Vec<Self>, Error>;
}

fn parse_chars<S>(text: &str, offset: usize, f: impl Fn(char) -> Option<S>) -> Result<Vec<S>, Error> {
    text.chars()
        .enumerate()
        .map(|(i, c)| {
            f(c).ok_or(Error::UnexpectedChar {
                position: offset + i + 1,
                found: c,
            })
        })
        .collect()
}

impl Alphabet for Letter {
    const SEPARATOR: &'static str = "";

    fn write_symbol(&self, out: &mut String) {
        out.push(self.as_char());
    }

    fn parse_word(text: &str, offset: usize) -> Result<Vec<Self>, Error> {
        parse_chars(text, offset, Letter::from_char)
    }
}

impl Alphabet for Symbol {
    const SEPARATOR: &'static str = "";

    fn write_symbol(&self, out: &mut String) {
        out.push(match self {
            Symbol::Letter(l) => l.as_char(),
            Symbol::Alpha => 'a',
            Symbol::Beta => 'b',
        });
    }

    fn parse_word(text: &str, offset: usize) -> Result<Vec<Self>, Error> {
        parse_chars(text, offset, |c| match c {
            'a' => Some(Symbol::Alpha),
            'b' => Some(Symbol::Beta),
            _ => Letter::from_char(c).map(Symbol::Letter),
        })
    }
}

impl Alphabet for StagedSymbol {
    const SEPARATOR: &'static str = " ";

    fn write_symbol(&self, out: &mut String) {
        match self {
            StagedSymbol::Letter(l) => out.push(l.as_char()),
            StagedSymbol::Eraser(j) => {
                let _ = write!(out, "E{j}");
            }
        }
    }

    fn parse_word(text: &str, offset: usize) -> Result<Vec<Self>, Error> {
        let mut out = Vec::new();
        let mut chars = text.char_indices().peekable();
        let mut char_pos = 0usize;
        while let Some(&(start, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                char_pos += 1;
                continue;
            }
            let token_pos = offset + char_pos + 1;
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_whitespace() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
                char_pos += 1;
            }
            let token = &text[start..end];
            out.push(parse_staged_token(token, token_pos)?);
        }
        Ok(out)
    }
}

fn parse_staged_token(token: &str, position: usize) -> Result<StagedSymbol, Error> {
    match token {
        "0" => return Ok(StagedSymbol::ZERO),
        "1" => return Ok(StagedSymbol::ONE),
        _ => {}
    }
    let bad = || Error::BadToken {
        position,
        token: token.to_string(),
    };
    let digits = token.strip_prefix('E').ok_or_else(bad)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    match digits.parse::<u32>() {
        Ok(j) if j >= 1 => Ok(StagedSymbol::Eraser(j)),
        _ => Err(bad()),
    }
}

/// A finite word. The empty word λ has length 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word<S>(Vec<S>);

pub type CodedWord = Word<Symbol>;
pub type StagedWord = Word<StagedSymbol>;
pub type BinaryWord = Word<Letter>;

impl<S> Word<S> {
    pub fn new(symbols: Vec<S>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[S] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<S> {
        self.0
    }
}

impl<S: Clone> Word<S> {
    pub fn concat(&self, other: &Word<S>) -> Word<S> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_prefix_of(&self, other: &Word<S>) -> bool
    where
        S: PartialEq,
    {
        other.0.starts_with(&self.0)
    }
}

impl StagedWord {
    /// Largest eraser index present, 0 if none.
    pub fn max_index(&self) -> u32 {
        self.0.iter().filter_map(|s| s.eraser_index()).max().unwrap_or(0)
    }

    pub fn eraser_count(&self) -> usize {
        self.0.iter().filter(|s| s.eraser_index().is_some()).count()
    }

    /// The word as a binary word, if it contains no erasers.
    pub fn letters(&self) -> Option<BinaryWord> {
        self.0.iter().map(|s| s.as_letter()).collect()
    }
}

impl<S> Deref for Word<S> {
    type Target = [S];

    fn deref(&self) -> &[S] {
        &self.0
    }
}

impl<S> From<Vec<S>> for Word<S> {
    fn from(v: Vec<S>) -> Self {
        Word(v)
    }
}

impl<S> FromIterator<S> for Word<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<S> IntoIterator for Word<S> {
    type Item = S;
    type IntoIter = std::vec::IntoIter<S>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, S> IntoIterator for &'a Word<S> {
    type Item = &'a S;
    type IntoIter = std::slice::Iter<'a, S>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub(crate) fn render<S: Alphabet>(symbols: &[S]) -> String {
    let mut out = String::new();
    for (i, s) in symbols.iter().enumerate() {
        if i > 0 {
            out.push_str(S::SEPARATOR);
        }
        s.write_symbol(&mut out);
    }
    out
}

impl<S: Alphabet> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl<S: Alphabet> fmt::Debug for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", render(&self.0))
    }
}

impl<S: Alphabet> FromStr for Word<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        S::parse_word(s, 0).map(Word)
    }
}

/// All words of exactly `len` symbols over `alphabet`, in lexicographic
/// order of `alphabet`'s listing.
pub fn words_of_len<S: Clone>(alphabet: &[S], len: usize) -> Box<dyn Iterator<Item = Word<S>> + '_> {
    if len == 0 {
        return Box::new(std::iter::once(Word::empty()));
    }
    Box::new(
        std::iter::repeat_n(alphabet.iter().cloned(), len)
            .multi_cartesian_product()
            .map(Word),
    )
}

/// All words of length at most `max_len` in length-lexicographic order.
pub fn words_up_to<S: Clone>(alphabet: &[S], max_len: usize) -> impl Iterator<Item = Word<S>> + '_ {
    (0..=max_len).flat_map(move |len| words_of_len(alphabet, len))
}

/// An ultimately periodic ω-word `prefix · period^ω`.
///
/// Equality is semantic: two values are equal iff they denote the same
/// ω-word.
#[derive(Clone)]
pub struct UpWord<S> {
    prefix: Word<S>,
    period: Word<S>,
}

impl<S: Copy + Eq> UpWord<S> {
    pub fn new(prefix: Word<S>, period: Word<S>) -> Result<Self, Error> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(UpWord { prefix, period })
    }

    /// `v^ω`.
    pub fn periodic(period: Word<S>) -> Result<Self, Error> {
        UpWord::new(Word::empty(), period)
    }

    pub fn prefix(&self) -> &Word<S> {
        &self.prefix
    }

    pub fn period(&self) -> &Word<S> {
        &self.period
    }

    /// The symbol at 0-based position `i` of the denoted ω-word.
    pub fn at(&self, i: usize) -> S {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first `n` symbols.
    pub fn take(&self, n: usize) -> Word<S> {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// Canonical form: primitive period, shortest prefix.
    pub fn normalize(&self) -> UpWord<S> {
        let mut period = primitive_root(&self.period).to_vec();
        let mut prefix = self.prefix.0.clone();
        while let (Some(&a), Some(&b)) = (prefix.last(), period.last()) {
            if a != b {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        UpWord {
            prefix: Word(prefix),
            period: Word(period),
        }
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.normalize();
        n.prefix == self.prefix && n.period == self.period
    }

    /// Applies `f` to every symbol. The result is not normalized.
    pub fn map<T: Copy + Eq>(&self, f: impl Fn(S) -> T) -> UpWord<T> {
        UpWord {
            prefix: self.prefix.iter().map(|&s| f(s)).collect(),
            period: self.period.iter().map(|&s| f(s)).collect(),
        }
    }
}

/// Shortest `r` with `w = r^k`. `w` must be nonempty.
fn primitive_root<S: Eq>(w: &[S]) -> &[S] {
    let n = w.len();
    (1..=n)
        .filter(|d| n % d == 0)
        .find(|&d| (d..n).all(|i| w[i] == w[i - d]))
        .map(|d| &w[..d])
        .unwrap_or(w)
}

/// The first `n` symbols of `x`.
pub fn up_prefix<S: Copy + Eq>(x: &UpWord<S>, n: usize) -> Word<S> {
    x.take(n)
}

pub fn up_normalize<S: Copy + Eq>(x: &UpWord<S>) -> UpWord<S> {
    x.normalize()
}

pub fn up_equal<S: Copy + Eq>(x: &UpWord<S>, y: &UpWord<S>) -> bool {
    x == y
}

impl<S: Copy + Eq> PartialEq for UpWord<S> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalize(), other.normalize());
        a.prefix == b.prefix && a.period == b.period
    }
}

impl<S: Copy + Eq> Eq for UpWord<S> {}

impl<S: Alphabet> fmt::Display for UpWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.prefix, self.period)
    }
}

impl<S: Alphabet> fmt::Debug for UpWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

impl<S: Alphabet> FromStr for UpWord<S> {
    type Err = Error;

    /// Parses `<prefix>|<period>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let (prefix, period) = s.split_once('|').ok_or(Error::MissingSeparator)?;
        let offset = prefix.chars().count() + 1;
        let prefix = Word(S::parse_word(prefix, 0)?);
        let period = Word(S::parse_word(period, offset)?);
        UpWord::new(prefix, period)
    }
}

//! Words over a finite alphabet and the prefix/suffix calculus on them.
//!
//! For a non-empty word `w`, `w∘0` is the longest prefix of `w` missing exactly
//! one letter of `cont(w)` and `w∗0` is the letter that follows it; dually `w∘1`
//! is the longest suffix missing one letter and `w∗1` the letter preceding it.
//! Both extend to bit strings by left folding. Undefined values are `None`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Deref, DerefMut};

use crate::error::Error;

/// Largest letter id accepted by the parsers.
pub const MAX_LETTER: u32 = u16::MAX as u32;

/// Characters used by the compact text format, in letter order.
const CHARSET: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

/// A letter of the alphabet, identified by a dense integer id.
///
/// Letters are ordered by id; that order drives short-lex comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub const fn id(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    /// The compact-format character for this letter, if it has one.
    pub fn as_char(self) -> Option<char> {
        CHARSET.get(self.index()).map(|&b| b as char)
    }

    pub fn from_char(c: char) -> Option<Letter> {
        CHARSET
            .iter()
            .position(|&b| b as char == c)
            .map(|i| Letter(i as u32))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "<{}>", self.0),
        }
    }
}

/// The set of distinct letters of a word.
pub type Content = BTreeSet<Letter>;

/// A bit string over `{0, 1}`, stored one bit per byte.
pub type Bits = [u8];

/// Parses a string of `0`/`1` characters.
pub fn bits(s: &str) -> Result<Vec<u8>, Error> {
    s.bytes()
        .map(|b| match b {
            b'0' => Ok(0),
            b'1' => Ok(1),
            _ => Err(Error::Parse(format!(
                "invalid bit {:?} in {s:?}",
                b as char
            ))),
        })
        .collect()
}

/// A finite word; the empty word is allowed.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Builds a word from raw letter ids.
    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Word(ids.into_iter().map(Letter).collect())
    }

    /// Parses the compact format: one character per letter from `a-z`, `A-Z`, `0-9`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| {
                Letter::from_char(c).ok_or_else(|| Error::Parse(format!("unknown letter {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Parses comma-separated non-negative integers. The empty string is the empty word.
    pub fn parse_ints(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::new());
        }
        s.split(',')
            .map(|tok| {
                let tok = tok.trim();
                let id: u64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid letter token {tok:?}")))?;
                if id > MAX_LETTER as u64 {
                    return Err(Error::Parse(format!(
                        "letter {id} exceeds the maximum id {MAX_LETTER}"
                    )));
                }
                Ok(Letter(id as u32))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Comma-separated integer rendering, the inverse of [`Word::parse_ints`].
    pub fn to_ints(&self) -> String {
        let ids: Vec<String> = self.0.iter().map(|l| l.0.to_string()).collect();
        ids.join(",")
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// One more than the largest letter id, or 0 for the empty word.
    pub fn alphabet_size(&self) -> usize {
        self.0.iter().map(|l| l.index() + 1).max().unwrap_or(0)
    }

    /// The 1-based subword `w_(i, j)`; empty when `i > j`.
    pub fn subword(&self, i: usize, j: usize) -> &[Letter] {
        if i > j || i == 0 {
            return &[];
        }
        &self.0[i - 1..j]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Short-lex comparison: shorter words first, then lexicographic.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl Deref for Word {
    type Target = Vec<Letter>;
    fn deref(&self) -> &Vec<Letter> {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Compact format when every letter has a character, integer format otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|l| l.as_char().is_some()) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.to_ints())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub fn content(w: &[Letter]) -> Content {
    w.iter().copied().collect()
}

/// `w∘0` together with `w∗0`, as slice and letter.
fn split_prefix(w: &[Letter]) -> Option<(&[Letter], Letter)> {
    let mut seen = Content::new();
    let mut last_new = None;
    for (pos, &a) in w.iter().enumerate() {
        if seen.insert(a) {
            last_new = Some(pos);
        }
    }
    last_new.map(|pos| (&w[..pos], w[pos]))
}

/// `w∘1` together with `w∗1`.
fn split_suffix(w: &[Letter]) -> Option<(&[Letter], Letter)> {
    let mut seen = Content::new();
    let mut last_new = None;
    for (pos, &a) in w.iter().enumerate().rev() {
        if seen.insert(a) {
            last_new = Some(pos);
        }
    }
    last_new.map(|pos| (&w[pos + 1..], w[pos]))
}

fn circ_step(w: &[Letter], bit: u8) -> Option<&[Letter]> {
    match bit {
        0 => split_prefix(w).map(|(p, _)| p),
        _ => split_suffix(w).map(|(s, _)| s),
    }
}

fn ast_step(w: &[Letter], bit: u8) -> Option<Letter> {
    match bit {
        0 => split_prefix(w).map(|(_, a)| a),
        _ => split_suffix(w).map(|(_, a)| a),
    }
}

/// `w∘α` as a subslice of `w`.
pub fn circ_slice<'a>(w: &'a [Letter], alpha: &Bits) -> Option<&'a [Letter]> {
    alpha.iter().try_fold(w, |cur, &b| circ_step(cur, b))
}

/// `w∘α`; `None` when `|α| > |cont(w)|`.
pub fn circ(w: &Word, alpha: &Bits) -> Option<Word> {
    circ_slice(w, alpha).map(Word::from)
}

/// `w∗α`; `None` when `α` is empty or `|α| > |cont(w)|`.
pub fn ast(w: &Word, alpha: &Bits) -> Option<Letter> {
    let (&last, init) = alpha.split_last()?;
    ast_step(circ_slice(w, init)?, last)
}

/// `f_w(α)`: the `∗`-letters read along the `∘`-path of `α`.
///
/// Defined exactly when `|α| = |cont(w)|`.
pub fn f_eval(w: &Word, alpha: &Bits) -> Option<Word> {
    let mut cur: &[Letter] = w;
    let mut out = Word::new();
    for &b in alpha {
        let (next, a) = match b {
            0 => split_prefix(cur)?,
            _ => split_suffix(cur)?,
        };
        out.push(a);
        cur = next;
    }
    cur.is_empty().then_some(out)
}

/// All bit strings of length `n`, in lexicographic order.
pub fn all_bits(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u64..1 << n).map(move |x| (0..n).map(|i| ((x >> (n - 1 - i)) & 1) as u8).collect())
}

//! Braid words in the Artin ("old") and band-generator ("new") presentations.
//!
//! Text grammar, one letter per whitespace-separated token:
//!
//! * old: `i` or `-i` for `σ_i^{±1}`, `1 ≤ i ≤ n-1`;
//! * new: `t.s` or `-t.s` for `a_{ts}^{±1}`, `n ≥ t > s ≥ 1`, plus the
//!   shorthand `[t:s]` for the descending cycle `a_{t(t-1)} ⋯ a_{(s+1)s}`
//!   (which may also carry a leading `-`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Presentation {
    /// Artin generators `σ_1 … σ_{n-1}`.
    Old,
    /// Band generators `a_{ts}`, `n ≥ t > s ≥ 1`.
    New,
}

impl Presentation {
    pub fn other(self) -> Self {
        match self {
            Presentation::Old => Presentation::New,
            Presentation::New => Presentation::Old,
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Presentation::Old => "old",
            Presentation::New => "new",
        })
    }
}

impl FromStr for Presentation {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "old" | "artin" => Ok(Presentation::Old),
            "new" | "band" => Ok(Presentation::New),
            _ => Err(BraidError::Syntax { token: s.to_string() }),
        }
    }
}

/// A positive generator. Indices are 1-based, as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma(usize),
    /// `a_{ts}` with `t > s`.
    Band(usize, usize),
}

impl Generator {
    pub fn presentation(self) -> Presentation {
        match self {
            Generator::Sigma(_) => Presentation::Old,
            Generator::Band(..) => Presentation::New,
        }
    }

    fn fits(self, n: usize) -> bool {
        match self {
            Generator::Sigma(i) => i >= 1 && i < n,
            Generator::Band(t, s) => s >= 1 && t > s && t <= n,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "{i}"),
            Generator::Band(t, s) => write!(f, "{t}.{s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn neg(generator: Generator) -> Self {
        Letter {
            generator,
            inverse: true,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            f.write_str("-")?;
        }
        self.generator.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    presentation: Presentation,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize, presentation: Presentation) -> Self {
        BraidWord {
            n,
            presentation,
            letters: Vec::new(),
        }
    }

    /// Builds a word, checking every letter against `n` and the presentation.
    pub fn new(n: usize, presentation: Presentation, letters: Vec<Letter>) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::BadIndex(n));
        }
        for l in &letters {
            if l.generator.presentation() != presentation || !l.generator.fits(n) {
                return Err(BraidError::IndexOutOfRange {
                    token: l.to_string(),
                    n,
                });
            }
        }
        Ok(BraidWord {
            n,
            presentation,
            letters,
        })
    }

    pub fn parse(text: &str, n: usize, presentation: Presentation) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::BadIndex(n));
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            parse_token(token, n, presentation, &mut letters)?;
        }
        Ok(BraidWord {
            n,
            presentation,
            letters,
        })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| !l.inverse)
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
            ..*self
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n || self.presentation != other.presentation {
            return Err(BraidError::Mismatch {
                left_n: self.n,
                left_p: self.presentation,
                right_n: other.n,
                right_p: other.presentation,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { letters, ..*self })
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Rewrites the word in the target presentation.
    ///
    /// `σ_i ↦ a_{(i+1)i}` and
    /// `a_{ts} ↦ (σ_{t-1}⋯σ_{s+1}) σ_s (σ_{s+1}^{-1}⋯σ_{t-1}^{-1})`.
    pub fn convert(&self, target: Presentation) -> Self {
        if target == self.presentation {
            return self.clone();
        }
        let mut letters = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match l.generator {
                Generator::Sigma(i) => letters.push(Letter {
                    generator: Generator::Band(i + 1, i),
                    inverse: l.inverse,
                }),
                Generator::Band(t, s) => {
                    let expansion = band_in_artin(t, s);
                    if l.inverse {
                        letters.extend(expansion.iter().rev().map(|x| x.inverted()));
                    } else {
                        letters.extend(expansion);
                    }
                }
            }
        }
        BraidWord {
            n: self.n,
            presentation: target,
            letters,
        }
    }

    pub(crate) fn from_parts_unchecked(n: usize, presentation: Presentation, letters: Vec<Letter>) -> Self {
        BraidWord {
            n,
            presentation,
            letters,
        }
    }
}

fn band_in_artin(t: usize, s: usize) -> Vec<Letter> {
    let mut out: Vec<Letter> = (s + 1..t).rev().map(|i| Letter::pos(Generator::Sigma(i))).collect();
    out.push(Letter::pos(Generator::Sigma(s)));
    out.extend((s + 1..t).map(|i| Letter::neg(Generator::Sigma(i))));
    out
}

fn parse_token(token: &str, n: usize, presentation: Presentation, out: &mut Vec<Letter>) -> Result<()> {
    let syntax = || BraidError::Syntax {
        token: token.to_string(),
    };
    let range = || BraidError::IndexOutOfRange {
        token: token.to_string(),
        n,
    };
    let (inverse, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let number = |s: &str| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax());
        }
        s.parse::<usize>().map_err(|_| range())
    };

    match presentation {
        Presentation::Old => {
            let i = number(body)?;
            let g = Generator::Sigma(i);
            if !g.fits(n) {
                return Err(range());
            }
            out.push(Letter { generator: g, inverse });
        }
        Presentation::New => {
            if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
                let (t, s) = inner.split_once(':').ok_or_else(syntax)?;
                let (t, s) = (number(t)?, number(s)?);
                if !(s >= 1 && t > s && t <= n) {
                    return Err(range());
                }
                let cycle: Vec<Letter> = (s + 1..=t)
                    .rev()
                    .map(|j| Letter::pos(Generator::Band(j, j - 1)))
                    .collect();
                if inverse {
                    out.extend(cycle.iter().rev().map(|l| l.inverted()));
                } else {
                    out.extend(cycle);
                }
            } else {
                let (t, s) = body.split_once('.').ok_or_else(syntax)?;
                let g = Generator::Band(number(t)?, number(s)?);
                if !g.fits(n) {
                    return Err(range());
                }
                out.push(Letter { generator: g, inverse });
            }
        }
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            l.fmt(f)?;
        }
        Ok(())
    }
}

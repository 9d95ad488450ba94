//! Left normal forms `D^u A_1 ⋯ A_k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::factor::{is_left_weighted, left_meet_head, CanonicalFactor};
use crate::words::{BraidWord, Letter, Presentation};

/// `D^u A_1 ⋯ A_k` with every `A_i ∈ Q \ {e, D}` and every adjacent pair
/// left-weighted. Unique per group element, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm<F> {
    n: usize,
    u: i64,
    factors: Vec<F>,
}

/// A run of a braid written as powers of `D` interleaved with factors.
#[derive(Debug, Clone)]
pub enum Piece<F> {
    Delta(i64),
    Factor(F),
}

impl<F: CanonicalFactor> NormalForm<F> {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            u: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: usize, u: i64) -> Self {
        NormalForm {
            n,
            u,
            factors: Vec::new(),
        }
    }

    pub fn from_factor(factor: F) -> Self {
        Self::from_pieces(factor.strands(), [Piece::Factor(factor)])
    }

    /// Normalizes an arbitrary product of `D`-powers and canonical factors.
    pub fn from_pieces(n: usize, pieces: impl IntoIterator<Item = Piece<F>>) -> Self {
        let pieces: Vec<Piece<F>> = pieces.into_iter().collect();
        // Move every D-power to the front: f D^d = D^d τ^d(f).
        let mut shift = 0i64;
        let mut shifted = Vec::with_capacity(pieces.len());
        for piece in pieces.into_iter().rev() {
            match piece {
                Piece::Delta(d) => shift += d,
                Piece::Factor(f) => shifted.push(f.tau(shift)),
            }
        }
        shifted.reverse();
        let mut chain = Vec::with_capacity(shifted.len());
        for f in shifted {
            push_right(&mut chain, f);
        }
        Self::finish(n, shift, chain)
    }

    /// Normal form of a word in the matching presentation.
    pub fn from_word(word: &BraidWord) -> Result<Self> {
        if word.presentation() != F::PRESENTATION {
            return Err(BraidError::WrongPresentation {
                expected: F::PRESENTATION,
                found: word.presentation(),
            });
        }
        let n = word.strands();
        let pieces = word.letters().iter().flat_map(|l| {
            let atom = F::from_generator(n, l.generator).expect("validated letter");
            if l.inverse {
                // x^{-1} = D^{-1} · x̄, where x̄ x = D
                vec![Piece::Delta(-1), Piece::Factor(atom.complement())]
            } else {
                vec![Piece::Factor(atom)]
            }
        });
        Ok(Self::from_pieces(n, pieces))
    }

    /// Takes a chain that is already left-greedy (possibly with leading `D`s
    /// and trailing `e`s) and strips it into normal form.
    fn finish(n: usize, u: i64, chain: Vec<F>) -> Self {
        let leading = chain.iter().take_while(|f| f.is_delta()).count();
        let factors: Vec<F> = chain.into_iter().skip(leading).filter(|f| !f.is_identity()).collect();
        debug_assert!(factors.iter().all(|f| !f.is_delta()));
        debug_assert!(factors.windows(2).all(|w| is_left_weighted(&w[0], &w[1])));
        NormalForm {
            n,
            u: u + leading as i64,
            factors,
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> Presentation {
        F::PRESENTATION
    }

    pub fn delta_exponent(&self) -> i64 {
        self.u
    }

    pub fn factors(&self) -> &[F] {
        &self.factors
    }

    /// Number of non-`D` factors, `sup - inf`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn inf(&self) -> i64 {
        self.u
    }

    pub fn sup(&self) -> i64 {
        self.u + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.u == 0 && self.factors.is_empty()
    }

    /// The element is positive (`≥ e`).
    pub fn is_positive(&self) -> bool {
        self.u >= 0
    }

    pub fn exponent_sum(&self) -> i64 {
        self.u * F::delta_len(self.n) as i64 + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    /// `D^l · self`.
    pub fn left_mul_delta(&self, l: i64) -> Self {
        NormalForm {
            u: self.u + l,
            ..self.clone()
        }
    }

    /// `τ^power(self)`; `τ` preserves left-weightedness.
    pub fn tau(&self, power: i64) -> Self {
        NormalForm {
            n: self.n,
            u: self.u,
            factors: self.factors.iter().map(|f| f.tau(power)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        // D^u P D^v Q = D^{u+v} τ^v(P) Q
        let mut chain: Vec<F> = self.factors.iter().map(|f| f.tau(other.u)).collect();
        for f in &other.factors {
            push_right(&mut chain, f.clone());
        }
        Self::finish(self.n, self.u + other.u, chain)
    }

    pub fn mul_factor(&self, x: &F) -> Self {
        let mut chain = self.factors.clone();
        push_right(&mut chain, x.clone());
        Self::finish(self.n, self.u, chain)
    }

    /// `x · self`.
    pub fn factor_mul(&self, x: &F) -> Self {
        // x D^u P = D^u τ^u(x) P
        let mut chain = self.factors.clone();
        push_left(x.tau(self.u), &mut chain);
        Self::finish(self.n, self.u, chain)
    }

    pub fn inverse(&self) -> Self {
        let mut pieces = Vec::with_capacity(2 * self.factors.len() + 1);
        for f in self.factors.iter().rev() {
            pieces.push(Piece::Delta(-1));
            pieces.push(Piece::Factor(f.complement()));
        }
        pieces.push(Piece::Delta(-self.u));
        Self::from_pieces(self.n, pieces)
    }

    /// `a · self · a^{-1}` for a canonical factor `a`.
    pub fn conjugate_by(&self, a: &F) -> Self {
        // a D^u P D^{-1} ā  =  D^{u-1} τ^{u-1}(a) τ^{-1}(P) ā
        let mut chain: Vec<F> = self.factors.iter().map(|f| f.tau(-1)).collect();
        push_left(a.tau(self.u - 1), &mut chain);
        push_right(&mut chain, a.complement());
        Self::finish(self.n, self.u - 1, chain)
    }

    /// The first factor, or `e` if there is none.
    pub fn head(&self) -> F {
        self.factors.first().cloned().unwrap_or_else(|| F::identity(self.n))
    }

    pub fn to_word(&self) -> BraidWord {
        let delta = F::delta(self.n).generators();
        let mut letters = Vec::new();
        if self.u >= 0 {
            for _ in 0..self.u {
                letters.extend(delta.iter().map(|&g| Letter::pos(g)));
            }
        } else {
            for _ in 0..-self.u {
                letters.extend(delta.iter().rev().map(|&g| Letter::neg(g)));
            }
        }
        for f in &self.factors {
            letters.extend(f.generators().into_iter().map(Letter::pos));
        }
        BraidWord::from_parts_unchecked(self.n, F::PRESENTATION, letters)
    }

    pub fn to_json(&self) -> NormalFormJson {
        NormalFormJson {
            n: self.n,
            presentation: F::PRESENTATION,
            u: self.u,
            factors: self.factors.iter().map(|f| f.to_string()).collect(),
        }
    }

    pub fn from_json(json: &NormalFormJson) -> Result<Self> {
        if json.presentation != F::PRESENTATION {
            return Err(BraidError::WrongPresentation {
                expected: F::PRESENTATION,
                found: json.presentation,
            });
        }
        let factors = json
            .factors
            .iter()
            .map(|t| F::parse_factor(t, json.n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(json.n, json.u, factors)
    }

    /// Accepts `D^u A_1 ⋯ A_k` only if it is already in normal form.
    pub fn from_parts(n: usize, u: i64, factors: Vec<F>) -> Result<Self> {
        let ok = factors
            .iter()
            .all(|f| f.strands() == n && !f.is_identity() && !f.is_delta())
            && factors.windows(2).all(|w| is_left_weighted(&w[0], &w[1]));
        if !ok {
            return Err(BraidError::BadFactor(
                factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" | "),
            ));
        }
        Ok(NormalForm { n, u, factors })
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = || BraidError::BadFactor(text.to_string());
        let mut parts = text.split('|').map(str::trim);
        let head = parts.next().ok_or_else(bad)?;
        let u: i64 = head.strip_prefix("D^").ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let factors = parts
            .filter(|p| !p.is_empty())
            .map(|p| F::parse_factor(p, n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(n, u, factors)
    }
}

/// Appends `x` to a left-greedy chain and restores greediness with a
/// single backward sweep.
pub(crate) fn push_right<F: CanonicalFactor>(chain: &mut Vec<F>, x: F) {
    chain.push(x);
    let mut i = chain.len() - 1;
    while i > 0 {
        let (head, rest) = left_meet_head(&chain[i - 1], &chain[i]);
        if head == chain[i - 1] {
            break;
        }
        chain[i - 1] = head;
        chain[i] = rest;
        i -= 1;
    }
    while chain.last().is_some_and(|f| f.is_identity()) {
        chain.pop();
    }
}

/// Prepends `x` to a left-greedy chain with a single forward sweep.
pub(crate) fn push_left<F: CanonicalFactor>(x: F, chain: &mut Vec<F>) {
    chain.insert(0, x);
    let mut i = 0;
    while i + 1 < chain.len() {
        if chain[i].is_identity() {
            chain.remove(i);
            break;
        }
        let (head, rest) = left_meet_head(&chain[i], &chain[i + 1]);
        if head == chain[i] {
            break;
        }
        chain[i] = head;
        chain[i + 1] = rest;
        i += 1;
    }
    while chain.last().is_some_and(|f| f.is_identity()) {
        chain.pop();
    }
}

/// Word problem: both words denote the same element.
pub fn equal<F: CanonicalFactor>(v: &BraidWord, w: &BraidWord) -> Result<bool> {
    if v.strands() != w.strands() {
        return Err(BraidError::Mismatch {
            left_n: v.strands(),
            left_p: v.presentation(),
            right_n: w.strands(),
            right_p: w.presentation(),
        });
    }
    Ok(NormalForm::<F>::from_word(v)? == NormalForm::<F>::from_word(w)?)
}

/// The element of `w` is positive: `inf ≥ 0`.
pub fn positive_part_check<F: CanonicalFactor>(w: &BraidWord) -> Result<bool> {
    Ok(NormalForm::<F>::from_word(w)?.is_positive())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormJson {
    pub n: usize,
    pub presentation: Presentation,
    pub u: i64,
    pub factors: Vec<String>,
}

impl<F: fmt::Display> fmt::Display for NormalForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.u)?;
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" |")?;
            }
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

impl<F: fmt::Display> fmt::Debug for NormalForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.n, self)
    }
}

/// Parses with the strand count taken from the first factor; pure `D`
/// powers cannot be parsed this way.
impl<F: CanonicalFactor> FromStr for NormalForm<F> {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let first = s.split('|').nth(1).map(str::trim).unwrap_or("");
        let n = match F::PRESENTATION {
            Presentation::Old => first.split(',').count(),
            Presentation::New => first
                .split(|c: char| !c.is_ascii_digit())
                .filter_map(|d| d.parse::<usize>().ok())
                .max()
                .unwrap_or(0),
        };
        if n < 2 {
            return Err(BraidError::BadFactor(s.to_string()));
        }
        Self::parse(s, n)
    }
}

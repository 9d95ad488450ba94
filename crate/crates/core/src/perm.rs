//! Permutation braids: canonical factors of the Artin presentation.
//!
//! A factor is stored as the one-line permutation `(π(1), …, π(n))`, where the
//! strand entering at position `i` leaves at position `π(i)` and every pair
//! of strands crosses at most once, positively. Letter length is the number
//! of inversions.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::factor::CanonicalFactor;
use crate::words::{Generator, Presentation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermFactor {
    // 0-based images
    perm: Vec<u8>,
}

impl PermFactor {
    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BraidError::BadFactor(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        if n < 2 {
            return Err(BraidError::BadIndex(n));
        }
        Ok(PermFactor {
            perm: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.perm.iter().map(|&v| v as usize + 1).collect()
    }

    fn inverse_images(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &v) in self.perm.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        inv
    }

    fn swap_adjacent(&self, i: usize) -> Vec<u8> {
        let mut p = self.perm.clone();
        p.swap(i, i + 1);
        p
    }

    /// `σ_{i+1}` (0-based `i`) is a left divisor: strands starting at `i` and
    /// `i+1` cross.
    fn starts_with(&self, i: usize) -> bool {
        self.perm[i] > self.perm[i + 1]
    }

    /// `σ_{i+1}` is a right divisor: the strands ending at `i` and `i+1` have
    /// crossed.
    fn ends_with(&self, i: usize) -> bool {
        let inv = self.inverse_images();
        inv[i] > inv[i + 1]
    }
}

fn inversions(p: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                count += 1;
            }
        }
    }
    count
}

// (second ∘ first)(i) = second[first[i]]
fn compose(second: &[u8], first: &[u8]) -> Vec<u8> {
    first.iter().map(|&v| second[v as usize]).collect()
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

impl CanonicalFactor for PermFactor {
    const PRESENTATION: Presentation = Presentation::Old;
    const ENUMERATION_CAP: usize = 8;

    fn identity(n: usize) -> Self {
        PermFactor {
            perm: (0..n as u8).collect(),
        }
    }

    fn delta(n: usize) -> Self {
        PermFactor {
            perm: (0..n as u8).rev().collect(),
        }
    }

    fn from_generator(n: usize, g: Generator) -> Option<Self> {
        match g {
            Generator::Sigma(i) if i >= 1 && i < n => Some(PermFactor {
                perm: Self::identity(n).swap_adjacent(i - 1),
            }),
            _ => None,
        }
    }

    fn atoms(n: usize) -> Vec<Self> {
        (1..n)
            .filter_map(|i| Self::from_generator(n, Generator::Sigma(i)))
            .collect()
    }

    fn strands(&self) -> usize {
        self.perm.len()
    }

    fn len(&self) -> usize {
        inversions(&self.perm)
    }

    fn delta_len(n: usize) -> usize {
        n * (n - 1) / 2
    }

    fn product(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.strands(), other.strands());
        let perm = compose(&other.perm, &self.perm);
        (inversions(&perm) == self.len() + other.len()).then_some(PermFactor { perm })
    }

    fn left_quotient(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.strands(), other.strands());
        let perm = compose(&other.perm, &invert(&self.perm));
        (inversions(&perm) + self.len() == other.len()).then_some(PermFactor { perm })
    }

    fn right_complement(&self) -> Self {
        let n = self.strands();
        let inv = self.inverse_images();
        PermFactor {
            perm: inv.iter().map(|&v| (n - 1) as u8 - v).collect(),
        }
    }

    fn complement(&self) -> Self {
        let n = self.strands();
        let inv = self.inverse_images();
        PermFactor {
            perm: (0..n).map(|i| inv[n - 1 - i]).collect(),
        }
    }

    fn tau(&self, power: i64) -> Self {
        if power.rem_euclid(2) == 0 {
            return self.clone();
        }
        let n = self.strands();
        PermFactor {
            perm: (0..n).map(|i| (n - 1) as u8 - self.perm[n - 1 - i]).collect(),
        }
    }

    fn meet(&self, other: &Self) -> Self {
        let n = self.strands();
        let mut common = Self::identity(n);
        'grow: loop {
            for i in 0..n - 1 {
                if common.ends_with(i) {
                    continue;
                }
                let candidate = PermFactor {
                    perm: compose(&Self::identity(n).swap_adjacent(i), &common.perm),
                };
                if candidate.left_divides(self) && candidate.left_divides(other) {
                    common = candidate;
                    continue 'grow;
                }
            }
            return common;
        }
    }

    /// Lexicographically smallest reduced word.
    fn generators(&self) -> Vec<Generator> {
        let mut rest = self.clone();
        let mut word = Vec::with_capacity(self.len());
        'peel: while !rest.is_identity() {
            for i in 0..rest.strands() - 1 {
                if rest.starts_with(i) {
                    word.push(Generator::Sigma(i + 1));
                    rest = PermFactor {
                        perm: rest.swap_adjacent(i),
                    };
                    continue 'peel;
                }
            }
            unreachable!("a non-identity permutation has a descent");
        }
        word
    }

    fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<Self>> {
        if n < 2 {
            return Err(BraidError::BadIndex(n));
        }
        if n > cap {
            return Err(BraidError::EnumerationCap { n, cap });
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        permutations(n, &mut current, &mut used, &mut out);
        Ok(out)
    }

    fn parse_factor(text: &str, n: usize) -> Result<Self> {
        let bad = || BraidError::BadFactor(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(bad());
        }
        Self::from_one_line(&images).map_err(|_| bad())
    }
}

fn permutations(n: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<PermFactor>) {
    if current.len() == n {
        out.push(PermFactor { perm: current.clone() });
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            current.push(v as u8);
            permutations(n, current, used, out);
            current.pop();
            used[v] = false;
        }
    }
}

impl fmt::Display for PermFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.perm.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PermFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

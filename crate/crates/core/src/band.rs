//! Canonical factors of the band-generator presentation.
//!
//! Each factor is a non-crossing partition of `{1, …, n}`; a block
//! `{i_1 < … < i_m}` stands for the descending cycle
//! `a_{i_m i_{m-1}} ⋯ a_{i_2 i_1}` and distinct blocks commute. Left
//! divisibility is refinement, so the meet is the common refinement.
//!
//! Products and complements go through the underlying permutation, in which
//! a block acts as the cycle `i_1 → i_2 → … → i_m → i_1`. Two factors
//! multiply inside `Q` exactly when the composed permutation is again a
//! non-crossing partition of that shape and the lengths `n - #blocks` add.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::factor::CanonicalFactor;
use crate::words::{Generator, Presentation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandFactor {
    /// Element (0-based) to block id; ids are numbered by minimum element.
    blocks: Vec<u8>,
}

impl BandFactor {
    /// Builds a factor from arbitrary block labels, checking non-crossing.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.len() < 2 {
            return Err(BraidError::BadIndex(labels.len()));
        }
        let f = BandFactor {
            blocks: canonical_labels(labels.iter().copied()),
        };
        if !f.is_noncrossing() {
            return Err(BraidError::BadFactor(format!("{labels:?}")));
        }
        Ok(f)
    }

    /// The blocks as sorted 1-based element lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let count = self.block_count();
        let mut out = vec![Vec::new(); count];
        for (i, &b) in self.blocks.iter().enumerate() {
            out[b as usize].push(i + 1);
        }
        out
    }

    pub fn block_count(&self) -> usize {
        self.blocks.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    /// The factor with the single nontrivial block `{s, …, t}`.
    pub fn descending_cycle(n: usize, t: usize, s: usize) -> Option<Self> {
        if !(s >= 1 && t > s && t <= n) {
            return None;
        }
        let labels: Vec<usize> = (1..=n).map(|i| if (s..=t).contains(&i) { 0 } else { i }).collect();
        Some(BandFactor {
            blocks: canonical_labels(labels.into_iter()),
        })
    }

    fn is_noncrossing(&self) -> bool {
        let n = self.blocks.len();
        let mut last = vec![0usize; n];
        for (i, &b) in self.blocks.iter().enumerate() {
            last[b as usize] = i;
        }
        let mut seen = vec![false; n];
        let mut open: Vec<u8> = Vec::new();
        for (i, &b) in self.blocks.iter().enumerate() {
            if seen[b as usize] {
                if open.last() != Some(&b) {
                    return false;
                }
            } else {
                seen[b as usize] = true;
                open.push(b);
            }
            if last[b as usize] == i {
                open.pop();
            }
        }
        true
    }

    fn to_perm(&self) -> Vec<u8> {
        let n = self.blocks.len();
        let mut perm = vec![0u8; n];
        let mut first = vec![usize::MAX; n];
        let mut prev = vec![usize::MAX; n];
        for (i, &b) in self.blocks.iter().enumerate() {
            let b = b as usize;
            if first[b] == usize::MAX {
                first[b] = i;
            } else {
                perm[prev[b]] = i as u8;
            }
            prev[b] = i;
        }
        for b in 0..n {
            if first[b] != usize::MAX {
                perm[prev[b]] = first[b] as u8;
            }
        }
        perm
    }

    /// Reads a permutation back as a factor, if each cycle runs upward
    /// through its elements and the cycles are non-crossing.
    fn from_perm(perm: &[u8]) -> Option<Self> {
        let n = perm.len();
        let mut labels = vec![usize::MAX; n];
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            // `start` is the minimum of its cycle: smaller elements are labelled.
            labels[start] = start;
            let mut cur = start;
            loop {
                let next = perm[cur] as usize;
                if next == start {
                    break;
                }
                if next < cur {
                    return None;
                }
                labels[next] = start;
                cur = next;
            }
        }
        let f = BandFactor {
            blocks: canonical_labels(labels.into_iter()),
        };
        f.is_noncrossing().then_some(f)
    }
}

fn canonical_labels(labels: impl Iterator<Item = usize>) -> Vec<u8> {
    let mut map: Vec<(usize, u8)> = Vec::new();
    labels
        .map(|l| match map.iter().find(|(k, _)| *k == l) {
            Some(&(_, id)) => id,
            None => {
                let id = map.len() as u8;
                map.push((l, id));
                id
            }
        })
        .collect()
}

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

fn rotation(n: usize) -> Vec<u8> {
    (0..n).map(|i| ((i + 1) % n) as u8).collect()
}

fn cycle_count(p: &[u8]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if !seen[start] {
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = p[cur] as usize;
            }
        }
    }
    count
}

impl CanonicalFactor for BandFactor {
    const PRESENTATION: Presentation = Presentation::New;
    const ENUMERATION_CAP: usize = 12;

    fn identity(n: usize) -> Self {
        BandFactor {
            blocks: (0..n as u8).collect(),
        }
    }

    fn delta(n: usize) -> Self {
        BandFactor { blocks: vec![0; n] }
    }

    fn from_generator(n: usize, g: Generator) -> Option<Self> {
        match g {
            Generator::Band(t, s) if s >= 1 && t > s && t <= n => {
                let labels = (1..=n).map(|i| if i == t { s } else { i });
                Some(BandFactor {
                    blocks: canonical_labels(labels),
                })
            }
            _ => None,
        }
    }

    fn atoms(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for t in 2..=n {
            for s in 1..t {
                out.extend(Self::from_generator(n, Generator::Band(t, s)));
            }
        }
        out
    }

    fn strands(&self) -> usize {
        self.blocks.len()
    }

    fn len(&self) -> usize {
        self.strands() - self.block_count()
    }

    fn delta_len(n: usize) -> usize {
        n - 1
    }

    fn product(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.strands(), other.strands());
        let n = self.strands();
        if self.len() + other.len() > n - 1 {
            return None;
        }
        let perm = compose(&other.to_perm(), &self.to_perm());
        if n - cycle_count(&perm) != self.len() + other.len() {
            return None;
        }
        Self::from_perm(&perm)
    }

    fn left_quotient(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.strands(), other.strands());
        // refinement check
        let mut image = vec![u8::MAX; self.strands()];
        for (&a, &b) in self.blocks.iter().zip(&other.blocks) {
            let slot = &mut image[a as usize];
            if *slot == u8::MAX {
                *slot = b;
            } else if *slot != b {
                return None;
            }
        }
        let perm = compose(&other.to_perm(), &invert(&self.to_perm()));
        Self::from_perm(&perm)
    }

    fn right_complement(&self) -> Self {
        let n = self.strands();
        let perm = compose(&rotation(n), &invert(&self.to_perm()));
        Self::from_perm(&perm).expect("complement of a non-crossing partition")
    }

    fn complement(&self) -> Self {
        let n = self.strands();
        let perm = compose(&invert(&self.to_perm()), &rotation(n));
        Self::from_perm(&perm).expect("complement of a non-crossing partition")
    }

    fn tau(&self, power: i64) -> Self {
        let n = self.strands();
        let shift = power.rem_euclid(n as i64) as usize;
        if shift == 0 {
            return self.clone();
        }
        let mut labels = vec![0usize; n];
        for (i, &b) in self.blocks.iter().enumerate() {
            labels[(i + shift) % n] = b as usize;
        }
        BandFactor {
            blocks: canonical_labels(labels.into_iter()),
        }
    }

    fn meet(&self, other: &Self) -> Self {
        let n = self.strands();
        let labels = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| a as usize * n + b as usize);
        BandFactor {
            blocks: canonical_labels(labels),
        }
    }

    fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::with_capacity(self.len());
        for block in self.blocks() {
            for pair in block.windows(2).rev() {
                out.push(Generator::Band(pair[1], pair[0]));
            }
        }
        out
    }

    fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<Self>> {
        if n < 2 {
            return Err(BraidError::BadIndex(n));
        }
        if n > cap {
            return Err(BraidError::EnumerationCap { n, cap });
        }
        let mut out = Vec::new();
        let mut labels = Vec::with_capacity(n);
        let mut last = Vec::with_capacity(n);
        let mut min = Vec::with_capacity(n);
        noncrossing(n, &mut labels, &mut last, &mut min, &mut out);
        Ok(out)
    }

    fn parse_factor(text: &str, n: usize) -> Result<Self> {
        let bad = || BraidError::BadFactor(text.to_string());
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut labels: Vec<usize> = (0..n).collect();
        let mut assigned = vec![false; n];
        let mut rest = text.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        let mut claim = |members: &[usize], labels: &mut Vec<usize>| -> Result<()> {
            for &m in members {
                if m == 0 || m > n || assigned[m - 1] {
                    return Err(bad());
                }
                assigned[m - 1] = true;
                labels[m - 1] = members[0] - 1;
            }
            Ok(())
        };
        while !rest.is_empty() {
            if let Some(body) = rest.strip_prefix('[') {
                let end = body.find(']').ok_or_else(bad)?;
                let (t, s) = body[..end].split_once(':').ok_or_else(bad)?;
                let t: usize = t.parse().map_err(|_| bad())?;
                let s: usize = s.parse().map_err(|_| bad())?;
                if !(s >= 1 && t > s) {
                    return Err(bad());
                }
                claim(&(s..=t).collect::<Vec<_>>(), &mut labels)?;
                rest = &body[end + 1..];
            } else if let Some(body) = rest.strip_prefix('{') {
                let end = body.find('}').ok_or_else(bad)?;
                let mut members = body[..end]
                    .split(',')
                    .map(|x| x.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                members.sort_unstable();
                claim(&members, &mut labels)?;
                rest = &body[end + 1..];
            } else {
                return Err(bad());
            }
        }
        Self::from_labels(&labels).map_err(|_| bad())
    }
}

fn noncrossing(
    n: usize,
    labels: &mut Vec<usize>,
    last: &mut Vec<usize>,
    min: &mut Vec<usize>,
    out: &mut Vec<BandFactor>,
) {
    let i = labels.len();
    if i == n {
        out.push(BandFactor {
            blocks: labels.iter().map(|&l| l as u8).collect(),
        });
        return;
    }
    // join an existing block whose arc to `i` crosses nothing
    for b in 0..last.len() {
        let l = last[b];
        if (l + 1..i).all(|x| min[labels[x]] > l) {
            let prev = last[b];
            labels.push(b);
            last[b] = i;
            noncrossing(n, labels, last, min, out);
            last[b] = prev;
            labels.pop();
        }
    }
    // or open a new block
    labels.push(last.len());
    last.push(i);
    min.push(i);
    noncrossing(n, labels, last, min, out);
    min.pop();
    last.pop();
    labels.pop();
}

impl fmt::Display for BandFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        let nontrivial: Vec<&Vec<usize>> = blocks.iter().filter(|b| b.len() > 1).collect();
        let intervals = nontrivial.iter().all(|b| b[b.len() - 1] - b[0] + 1 == b.len());
        if !nontrivial.is_empty() && intervals {
            for b in nontrivial {
                write!(f, "[{}:{}]", b[b.len() - 1], b[0])?;
            }
            return Ok(());
        }
        for b in &blocks {
            f.write_str("{")?;
            for (i, m) in b.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{m}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BandFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Cycling, decycling and super summit sets.
//!
//! The inf/sup loops stop once `|D| - 1` consecutive cyclings (decyclings)
//! fail to raise inf (lower sup): past that bound the value is extremal for
//! the conjugacy class.
//!
//! Conjugators are tracked with the convention `result = γ · input · γ^{-1}`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::factor::CanonicalFactor;
use crate::normal_form::NormalForm;
use crate::words::Presentation;

pub const DEFAULT_SSS_CAP: usize = 100_000;

/// Consecutive cyclings after which a non-increasing inf is maximal.
pub fn cycling_bound<F: CanonicalFactor>(n: usize) -> usize {
    F::delta_len(n).saturating_sub(1)
}

/// `c(D^u A_1 ⋯ A_k) = D^u A_2 ⋯ A_k τ^{-u}(A_1)`, renormalized.
pub fn cycle<F: CanonicalFactor>(nf: &NormalForm<F>) -> NormalForm<F> {
    cycle_tracked(nf).0
}

/// `d(D^u A_1 ⋯ A_k) = D^u τ^u(A_k) A_1 ⋯ A_{k-1}`, renormalized.
pub fn decycle<F: CanonicalFactor>(nf: &NormalForm<F>) -> NormalForm<F> {
    decycle_tracked(nf).0
}

/// Cycling together with its conjugator `γ = τ^{-u}(A_1)^{-1}`.
pub fn cycle_tracked<F: CanonicalFactor>(nf: &NormalForm<F>) -> (NormalForm<F>, NormalForm<F>) {
    let n = nf.strands();
    let Some(first) = nf.factors().first() else {
        return (nf.clone(), NormalForm::identity(n));
    };
    let moved = first.tau(-nf.inf());
    let rest = NormalForm::from_parts(n, nf.inf(), nf.factors()[1..].to_vec()).expect("suffix of a normal form");
    let conjugator = NormalForm::from_factor(moved.clone()).inverse();
    (rest.mul_factor(&moved), conjugator)
}

/// Decycling together with its conjugator `γ = A_k`.
pub fn decycle_tracked<F: CanonicalFactor>(nf: &NormalForm<F>) -> (NormalForm<F>, NormalForm<F>) {
    let n = nf.strands();
    let Some(last) = nf.factors().last() else {
        return (nf.clone(), NormalForm::identity(n));
    };
    let k = nf.canonical_length();
    let rest = NormalForm::from_parts(n, nf.inf(), nf.factors()[..k - 1].to_vec()).expect("prefix of a normal form");
    (rest.factor_mul(last), NormalForm::from_factor(last.clone()))
}

pub fn maximize_inf<F: CanonicalFactor>(nf: &NormalForm<F>) -> NormalForm<F> {
    maximize_inf_tracked(nf).0
}

pub fn minimize_sup<F: CanonicalFactor>(nf: &NormalForm<F>) -> NormalForm<F> {
    minimize_sup_tracked(nf).0
}

/// Cycles until `|D| - 1` consecutive cyclings leave inf unchanged.
pub fn maximize_inf_tracked<F: CanonicalFactor>(nf: &NormalForm<F>) -> (NormalForm<F>, NormalForm<F>) {
    extremize(nf, cycle_tracked, |before, after| after.inf() > before.inf())
}

/// Decycles until `|D| - 1` consecutive decyclings leave sup unchanged.
pub fn minimize_sup_tracked<F: CanonicalFactor>(nf: &NormalForm<F>) -> (NormalForm<F>, NormalForm<F>) {
    extremize(nf, decycle_tracked, |before, after| after.sup() < before.sup())
}

type TrackedStep<F> = fn(&NormalForm<F>) -> (NormalForm<F>, NormalForm<F>);

fn extremize<F: CanonicalFactor>(
    nf: &NormalForm<F>,
    step: TrackedStep<F>,
    improved: fn(&NormalForm<F>, &NormalForm<F>) -> bool,
) -> (NormalForm<F>, NormalForm<F>) {
    let n = nf.strands();
    let bound = cycling_bound::<F>(n);
    let mut best = nf.clone();
    let mut best_conj = NormalForm::identity(n);
    let mut current = nf.clone();
    let mut conj = NormalForm::identity(n);
    let mut idle = 0;
    while idle < bound && current.canonical_length() > 0 {
        let (next, g) = step(&current);
        conj = g.mul(&conj);
        current = next;
        if improved(&best, &current) {
            best = current.clone();
            best_conj = conj.clone();
            idle = 0;
        } else {
            idle += 1;
        }
    }
    (best, best_conj)
}

/// A member of the super summit set of `nf`, with its conjugator.
pub fn sss_representative_tracked<F: CanonicalFactor>(nf: &NormalForm<F>) -> (NormalForm<F>, NormalForm<F>) {
    let (up, g1) = maximize_inf_tracked(nf);
    // decycling never lowers inf, so one pass of each suffices
    let (down, g2) = minimize_sup_tracked(&up);
    debug_assert_eq!(down.inf(), up.inf());
    (down, g2.mul(&g1))
}

pub fn sss_representative<F: CanonicalFactor>(nf: &NormalForm<F>) -> NormalForm<F> {
    sss_representative_tracked(nf).0
}

/// Inf after each cycling, stopping at the first increase or after the
/// bound is exhausted.
pub fn cycling_profile<F: CanonicalFactor>(nf: &NormalForm<F>) -> Vec<(usize, i64)> {
    profile(nf, cycle, |w| w.inf(), |start, now| now > start)
}

/// Sup after each decycling, stopping at the first decrease or after the
/// bound is exhausted.
pub fn decycling_profile<F: CanonicalFactor>(nf: &NormalForm<F>) -> Vec<(usize, i64)> {
    profile(nf, decycle, |w| w.sup(), |start, now| now < start)
}

fn profile<F: CanonicalFactor>(
    nf: &NormalForm<F>,
    step: fn(&NormalForm<F>) -> NormalForm<F>,
    read: fn(&NormalForm<F>) -> i64,
    improved: fn(i64, i64) -> bool,
) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    if nf.canonical_length() == 0 {
        return out;
    }
    let start = read(nf);
    let mut current = nf.clone();
    for i in 1..=cycling_bound::<F>(nf.strands()) {
        current = step(&current);
        let value = read(&current);
        out.push((i, value));
        if improved(start, value) {
            break;
        }
    }
    out
}

pub fn geodesic_length(inf: i64, canonical_length: i64) -> i64 {
    let (u, k) = (inf, canonical_length);
    (k + u).max(-u).max(k)
}

/// Geodesic length of the conjugacy class: `max(k + u, -u, k)` for
/// `u = inf_max`, `k = sup_min - inf_max`.
pub fn geodesic_length_class<F: CanonicalFactor>(nf: &NormalForm<F>) -> i64 {
    let rep = sss_representative(nf);
    geodesic_length(rep.inf(), rep.canonical_length() as i64)
}

#[derive(Clone)]
pub struct SuperSummitSet<F> {
    members: Vec<NormalForm<F>>,
    index: HashMap<NormalForm<F>, usize>,
    /// `members[i] = a · members[p] · a^{-1}` for `parent[i] = Some((p, a))`.
    parent: Vec<Option<(usize, F)>>,
    inf_max: i64,
    sup_min: i64,
}

impl<F: CanonicalFactor> SuperSummitSet<F> {
    pub fn members(&self) -> &[NormalForm<F>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn inf_max(&self) -> i64 {
        self.inf_max
    }

    pub fn sup_min(&self) -> i64 {
        self.sup_min
    }

    pub fn contains(&self, nf: &NormalForm<F>) -> bool {
        self.index.contains_key(nf)
    }

    pub fn position(&self, nf: &NormalForm<F>) -> Option<usize> {
        self.index.get(nf).copied()
    }

    /// `γ` with `members[i] = γ · members[0] · γ^{-1}`.
    pub fn conjugator_to(&self, i: usize) -> NormalForm<F> {
        let n = self.members[0].strands();
        let mut gamma = NormalForm::identity(n);
        let mut at = i;
        while let Some((p, a)) = &self.parent[at] {
            gamma = gamma.mul_factor(a);
            at = *p;
        }
        gamma
    }
}

impl<F: std::fmt::Display> std::fmt::Debug for SuperSummitSet<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SuperSummitSet")
            .field("inf_max", &self.inf_max)
            .field("sup_min", &self.sup_min)
            .field("members", &self.members)
            .finish()
    }
}

/// The full super summit set, by closing a representative under
/// conjugation by every canonical factor.
pub fn sss_enumerate<F: CanonicalFactor>(nf: &NormalForm<F>, cap: usize) -> Result<SuperSummitSet<F>> {
    let rep = sss_representative(nf);
    sss_from_representative(rep, cap)
}

pub fn sss_from_representative<F: CanonicalFactor>(rep: NormalForm<F>, cap: usize) -> Result<SuperSummitSet<F>> {
    let n = rep.strands();
    let q = F::enumerate(n)?;
    let (inf_max, sup_min) = (rep.inf(), rep.sup());
    let mut set = SuperSummitSet {
        members: vec![rep.clone()],
        index: HashMap::from([(rep, 0)]),
        parent: vec![None],
        inf_max,
        sup_min,
    };
    let mut frontier = VecDeque::from([0usize]);
    while let Some(i) = frontier.pop_front() {
        for a in &q {
            let c = set.members[i].conjugate_by(a);
            if c.inf() != inf_max || c.sup() != sup_min || set.index.contains_key(&c) {
                continue;
            }
            if set.members.len() >= cap {
                return Err(BraidError::CapExceeded {
                    cap,
                    partial: set.members.len(),
                });
            }
            let j = set.members.len();
            set.index.insert(c.clone(), j);
            set.members.push(c);
            set.parent.push(Some((i, a.clone())));
            frontier.push_back(j);
        }
    }
    Ok(set)
}

/// Orbit sizes of the super summit set under cycling and decycling, sorted
/// ascending.
pub fn sss_orbits<F: CanonicalFactor>(sss: &SuperSummitSet<F>) -> Vec<usize> {
    let m = sss.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, member) in sss.members().iter().enumerate() {
        for image in [cycle(member), decycle(member)] {
            let j = sss
                .position(&image)
                .expect("super summit sets are closed under cycling and decycling");
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for i in 0..m {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }
    let mut out: Vec<usize> = sizes.into_values().collect();
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInvariants {
    pub n: usize,
    pub presentation: Presentation,
    pub inf: i64,
    pub sup: i64,
    pub exponent_sum: i64,
    pub geodesic_length: i64,
    pub sss_size: usize,
    pub orbit_sizes: Vec<usize>,
}

pub fn class_invariants<F: CanonicalFactor>(nf: &NormalForm<F>, cap: usize) -> Result<ClassInvariants> {
    let sss = sss_enumerate(nf, cap)?;
    Ok(ClassInvariants {
        n: nf.strands(),
        presentation: F::PRESENTATION,
        inf: sss.inf_max(),
        sup: sss.sup_min(),
        exponent_sum: nf.exponent_sum(),
        geodesic_length: geodesic_length(sss.inf_max(), sss.sup_min() - sss.inf_max()),
        sss_size: sss.len(),
        orbit_sizes: sss_orbits(&sss),
    })
}

/// Decides conjugacy. On success returns `γ` with `v = γ · w · γ^{-1}`.
pub fn conjugating_element<F: CanonicalFactor>(
    v: &NormalForm<F>,
    w: &NormalForm<F>,
    cap: usize,
) -> Result<Option<NormalForm<F>>> {
    if v.strands() != w.strands() || v.exponent_sum() != w.exponent_sum() {
        return Ok(None);
    }
    let (rep_v, g_v) = sss_representative_tracked(v);
    let (rep_w, g_w) = sss_representative_tracked(w);
    if (rep_v.inf(), rep_v.sup()) != (rep_w.inf(), rep_w.sup()) {
        return Ok(None);
    }
    let sss = sss_from_representative(rep_w, cap)?;
    let Some(j) = sss.position(&rep_v) else {
        return Ok(None);
    };
    // rep_v = h rep_w h^{-1},  rep_x = g_x x g_x^{-1}
    let h = sss.conjugator_to(j);
    Ok(Some(g_v.inverse().mul(&h).mul(&g_w)))
}

pub fn are_conjugate<F: CanonicalFactor>(v: &NormalForm<F>, w: &NormalForm<F>, cap: usize) -> Result<bool> {
    Ok(conjugating_element(v, w, cap)?.is_some())
}

/// `γ · w · γ^{-1}`.
pub fn conjugate<F: CanonicalFactor>(w: &NormalForm<F>, gamma: &NormalForm<F>) -> NormalForm<F> {
    gamma.mul(w).mul(&gamma.inverse())
}

/// Factor-length counts `k_1, …, k_{|D|-1}` of a normal form.
pub fn factor_length_counts<F: CanonicalFactor>(nf: &NormalForm<F>) -> Vec<usize> {
    let mut counts = vec![0; F::delta_len(nf.strands()).saturating_sub(1)];
    for f in nf.factors() {
        counts[f.len() - 1] += 1;
    }
    counts
}

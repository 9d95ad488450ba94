//! Braid families on which inf needs many cyclings before it increases.
//!
//! * band generators, `W = [2:1][n:2]` in `B_n`: exactly `n - 2` cyclings;
//! * Artin generators in `B_{2k+1}`, two permutation-braid pairs needing
//!   `2k` and `4k - 5` cyclings respectively.

use serde::Serialize;

use crate::band::BandFactor;
use crate::conjugacy::{cycling_profile, maximize_inf};
use crate::factor::CanonicalFactor;
use crate::normal_form::{NormalForm, Piece};
use crate::perm::PermFactor;
use crate::words::{BraidWord, Presentation};

/// `[2:1][n:2] = a_{21} a_{n(n-1)} ⋯ a_{32}`.
pub fn band_family(n: usize) -> NormalForm<BandFactor> {
    let word = BraidWord::parse(&format!("2.1 [{n}:2]"), n, Presentation::New).expect("n ≥ 3");
    NormalForm::from_word(&word).expect("band word")
}

/// `(2k+1, 2k, …, 3, 1, 2)(1, …, k, k+2, …, 2k+1, k+1)` in `B_{2k+1}`.
pub fn artin_family_b(k: usize) -> NormalForm<PermFactor> {
    let n = 2 * k + 1;
    let mut first: Vec<usize> = (3..=n).rev().collect();
    first.extend([1, 2]);
    let mut second: Vec<usize> = (1..=k).collect();
    second.extend(k + 2..=n);
    second.push(k + 1);
    perm_pair(&first, &second)
}

/// `(2k+1, …, k+3, k+1, k+2, k, …, 1)(3, …, k+1, 1, k+2, …, 2k, 2, 2k+1)`
/// in `B_{2k+1}`.
pub fn artin_family_c(k: usize) -> NormalForm<PermFactor> {
    let n = 2 * k + 1;
    let mut first: Vec<usize> = (k + 3..=n).rev().collect();
    first.extend([k + 1, k + 2]);
    first.extend((1..=k).rev());
    let mut second: Vec<usize> = (3..=k + 1).collect();
    second.push(1);
    second.extend(k + 2..=2 * k);
    second.extend([2, n]);
    perm_pair(&first, &second)
}

fn perm_pair(first: &[usize], second: &[usize]) -> NormalForm<PermFactor> {
    let a = PermFactor::from_one_line(first).expect("permutation");
    let b = PermFactor::from_one_line(second).expect("permutation");
    NormalForm::from_pieces(first.len(), [Piece::Factor(a), Piece::Factor(b)])
}

/// Number of cyclings until inf first increases, if it does within the
/// bound.
pub fn first_increase<F: CanonicalFactor>(nf: &NormalForm<F>) -> Option<usize> {
    let start = nf.inf();
    cycling_profile(nf)
        .into_iter()
        .find(|&(_, inf)| inf > start)
        .map(|(step, _)| step)
}

#[derive(Debug, Clone, Serialize)]
pub struct SharpnessCase {
    pub label: String,
    pub n: usize,
    pub presentation: Presentation,
    pub normal_form: String,
    pub expected: usize,
    pub observed: Option<usize>,
    /// inf stays at its starting value for every cycling before `expected`
    pub plateau_holds: bool,
    /// the increased inf is maximal
    pub settles: bool,
}

impl SharpnessCase {
    pub fn passed(&self) -> bool {
        self.observed == Some(self.expected) && self.plateau_holds && self.settles
    }

    fn run<F: CanonicalFactor>(label: String, nf: NormalForm<F>, expected: usize) -> Self {
        let profile = cycling_profile(&nf);
        let observed = first_increase(&nf);
        let plateau_holds = profile
            .iter()
            .take(expected.saturating_sub(1))
            .all(|&(_, inf)| inf == nf.inf())
            && profile.len() >= expected;
        let settles = maximize_inf(&nf).inf() == nf.inf() + 1;
        SharpnessCase {
            label,
            n: nf.strands(),
            presentation: F::PRESENTATION,
            normal_form: nf.to_string(),
            expected,
            observed,
            plateau_holds,
            settles,
        }
    }
}

pub fn band_case(n: usize) -> SharpnessCase {
    SharpnessCase::run(format!("new [2:1][{n}:2] in B{n}"), band_family(n), n - 2)
}

pub fn artin_b_case(k: usize) -> SharpnessCase {
    SharpnessCase::run(
        format!("old family (b), k={k}, B{}", 2 * k + 1),
        artin_family_b(k),
        2 * k,
    )
}

pub fn artin_c_case(k: usize) -> SharpnessCase {
    SharpnessCase::run(
        format!("old family (c), k={k}, B{}", 2 * k + 1),
        artin_family_c(k),
        4 * k - 5,
    )
}

/// Every family over the given ranges.
pub fn reproduction_cases(
    band_ns: impl IntoIterator<Item = usize>,
    artin_ks: impl IntoIterator<Item = usize> + Clone,
) -> Vec<SharpnessCase> {
    let mut out: Vec<SharpnessCase> = band_ns.into_iter().map(band_case).collect();
    out.extend(artin_ks.clone().into_iter().map(artin_b_case));
    out.extend(artin_ks.into_iter().map(artin_c_case));
    out
}

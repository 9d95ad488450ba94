mod common;

use garside::{
    is_left_weighted, positive_part_check, BandFactor, BraidWord, CanonicalFactor, NormalForm, PermFactor, Piece,
    Presentation,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn nf<F: CanonicalFactor>(w: &BraidWord) -> NormalForm<F> {
    NormalForm::from_word(w).unwrap()
}

fn seeded(seed: u64, n: usize, p: Presentation, len: usize, negatives: bool) -> BraidWord {
    common::random_word(&mut StdRng::seed_from_u64(seed), n, p, len, negatives)
}

fn check_structure<F: CanonicalFactor>(w: &BraidWord) {
    let v = nf::<F>(w);
    assert!(v.factors().iter().all(|f| !f.is_identity() && !f.is_delta()));
    assert!(v.factors().windows(2).all(|p| is_left_weighted(&p[0], &p[1])));
    assert_eq!(v.exponent_sum(), w.exponent_sum());
    assert_eq!(nf::<F>(&v.to_word()), v);
    assert_eq!(NormalForm::<F>::from_json(&v.to_json()).unwrap(), v);
    assert_eq!(NormalForm::<F>::parse(&v.to_string(), v.strands()).unwrap(), v);
    let inv = nf::<F>(&w.inverse());
    assert_eq!(v.inverse(), inv);
    assert_eq!(inv.inf(), -v.sup());
    assert_eq!(inv.sup(), -v.inf());
    if w.is_positive() {
        assert!(v.inf() >= 0);
    }
    if w.letters().iter().all(|l| l.inverse) {
        assert!(v.sup() <= 0);
    }
}

fn check_product<F: CanonicalFactor>(v: &BraidWord, w: &BraidWord) {
    assert_eq!(nf::<F>(v).mul(&nf::<F>(w)), nf::<F>(&v.concat(w).unwrap()));
}

fn complement_chain_identity<F: CanonicalFactor>(z: &BraidWord) {
    let zn = nf::<F>(z);
    let n = zn.strands();
    // Z = B_ℓ ⋯ B_1 with D-powers counted as factors
    let mut b: Vec<F> = std::iter::repeat_n(F::delta(n), zn.inf() as usize).collect();
    b.extend(zn.factors().iter().cloned());
    b.reverse();
    let l = b.len() as i64;
    let expected: Vec<F> = b
        .iter()
        .enumerate()
        .map(|(i, bi)| bi.complement().tau(i as i64 + 1))
        .collect();
    let lhs = zn.inverse().mul(&NormalForm::delta_power(n, l));
    let rhs = NormalForm::from_pieces(n, expected.iter().cloned().map(Piece::Factor));
    assert_eq!(lhs, rhs, "{z}");
    let nontrivial: Vec<F> = expected.into_iter().filter(|f| !f.is_identity()).collect();
    assert_eq!(lhs.delta_exponent(), 0);
    assert_eq!(lhs.factors(), &nontrivial[..], "{z}");
}

proptest! {
    #[test]
    fn rewrites_preserve_the_normal_form(n in 2usize..=6, old in any::<bool>(), len in 0usize..=16, seed in any::<u64>(), moves in 1usize..=20) {
        let p = if old { Presentation::Old } else { Presentation::New };
        let mut rng = StdRng::seed_from_u64(seed);
        let w = common::random_word(&mut rng, n, p, len, true);
        let v = common::rewrite(&mut rng, &w, moves);
        match p {
            Presentation::Old => prop_assert_eq!(nf::<PermFactor>(&w), nf::<PermFactor>(&v)),
            Presentation::New => prop_assert_eq!(nf::<BandFactor>(&w), nf::<BandFactor>(&v)),
        }
    }

    #[test]
    fn structure(n in 2usize..=6, old in any::<bool>(), len in 0usize..=16, seed in any::<u64>()) {
        let p = if old { Presentation::Old } else { Presentation::New };
        let w = seeded(seed, n, p, len, seed % 3 != 0);
        match p {
            Presentation::Old => check_structure::<PermFactor>(&w),
            Presentation::New => check_structure::<BandFactor>(&w),
        }
    }

    #[test]
    fn products(n in 2usize..=6, old in any::<bool>(), a in 0usize..=10, b in 0usize..=10, seed in any::<u64>()) {
        let p = if old { Presentation::Old } else { Presentation::New };
        let v = seeded(seed, n, p, a, true);
        let w = seeded(seed.wrapping_add(1), n, p, b, true);
        match p {
            Presentation::Old => check_product::<PermFactor>(&v, &w),
            Presentation::New => check_product::<BandFactor>(&v, &w),
        }
    }

    #[test]
    fn complement_product_identity(n in 2usize..=6, old in any::<bool>(), len in 0usize..=14, seed in any::<u64>()) {
        let p = if old { Presentation::Old } else { Presentation::New };
        let z = seeded(seed, n, p, len, false);
        match p {
            Presentation::Old => complement_chain_identity::<PermFactor>(&z),
            Presentation::New => complement_chain_identity::<BandFactor>(&z),
        }
    }

    #[test]
    fn delta_power_is_left_multiplication(n in 2usize..=6, old in any::<bool>(), len in 0usize..=10, l in -3i64..=3, seed in any::<u64>()) {
        let p = if old { Presentation::Old } else { Presentation::New };
        let w = seeded(seed, n, p, len, true);
        let d = common::delta_word(n, p).into_iter().map(garside::Letter::pos).collect::<Vec<_>>();
        let mut dl = BraidWord::identity(n, p);
        let unit = BraidWord::new(n, p, d).unwrap();
        let unit = if l < 0 { unit.inverse() } else { unit };
        for _ in 0..l.abs() {
            dl = dl.concat(&unit).unwrap();
        }
        let both = dl.concat(&w).unwrap();
        match p {
            Presentation::Old => {
                let v = nf::<PermFactor>(&w).left_mul_delta(l);
                prop_assert_eq!(&v, &nf::<PermFactor>(&both));
                prop_assert_eq!(v.inf(), nf::<PermFactor>(&w).inf() + l);
            }
            Presentation::New => {
                let v = nf::<BandFactor>(&w).left_mul_delta(l);
                prop_assert_eq!(&v, &nf::<BandFactor>(&both));
                prop_assert_eq!(v.sup(), nf::<BandFactor>(&w).sup() + l);
            }
        }
    }
}

#[test]
fn spec_examples() {
    let old = |t: &str, n| BraidWord::parse(t, n, Presentation::Old).unwrap();
    let new = |t: &str, n| BraidWord::parse(t, n, Presentation::New).unwrap();

    let d3 = nf::<PermFactor>(&old("1 2 1", 3));
    assert_eq!((d3.delta_exponent(), d3.canonical_length()), (1, 0));
    let w = nf::<BandFactor>(&new("2.1 5.4 4.3 3.2", 5));
    assert_eq!(w.to_string(), "D^0 | [2:1][5:3] | [3:2]");
    assert_eq!((w.inf(), w.sup()), (0, 2));
    let s = nf::<PermFactor>(&old("-1", 2));
    assert_eq!((s.delta_exponent(), s.canonical_length()), (-1, 0));

    let delta5 = nf::<BandFactor>(&new("[5:1]", 5));
    assert_eq!((delta5.inf(), delta5.sup()), (1, 1));
    assert!(delta5.left_mul_delta(-1).is_identity());
    let e = nf::<BandFactor>(&BraidWord::identity(5, Presentation::New));
    assert_eq!((e.inf(), e.sup()), (0, 0));

    assert!(garside::equal::<PermFactor>(&old("1 2 1", 3), &old("2 1 2", 3)).unwrap());
    assert!(!garside::equal::<BandFactor>(&new("2.1 3.2", 3), &new("3.2 2.1", 3)).unwrap());

    let a32 = nf::<BandFactor>(&new("3.2", 3));
    assert_eq!(a32.left_mul_delta(1), nf::<BandFactor>(&new("[3:1] 3.2", 3)));
    assert_eq!(a32.left_mul_delta(0), a32);

    assert!(positive_part_check::<PermFactor>(&old("1 2", 3)).unwrap());
    assert!(!positive_part_check::<PermFactor>(&old("-1", 3)).unwrap());
    assert!(positive_part_check::<PermFactor>(&old("-1 -2 -1 1 2 1", 3)).unwrap());
}

#[test]
fn presentation_mismatch_is_rejected() {
    let w = BraidWord::parse("1", 3, Presentation::Old).unwrap();
    assert!(NormalForm::<BandFactor>::from_word(&w).is_err());
}

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use garside::{BraidWord, Generator, Letter, Presentation};
use rand::rngs::StdRng;
use rand::Rng;

pub fn generators(n: usize, p: Presentation) -> Vec<Generator> {
    match p {
        Presentation::Old => (1..n).map(Generator::Sigma).collect(),
        Presentation::New => (2..=n)
            .flat_map(|t| (1..t).map(move |s| Generator::Band(t, s)))
            .collect(),
    }
}

pub fn random_word(rng: &mut StdRng, n: usize, p: Presentation, len: usize, negatives: bool) -> BraidWord {
    let gens = generators(n, p);
    let letters = (0..len)
        .map(|_| {
            let g = gens[rng.gen_range(0..gens.len())];
            if negatives && rng.gen_bool(0.5) {
                Letter::neg(g)
            } else {
                Letter::pos(g)
            }
        })
        .collect();
    BraidWord::new(n, p, letters).unwrap()
}

pub fn random_presentation(rng: &mut StdRng) -> Presentation {
    if rng.gen_bool(0.5) {
        Presentation::Old
    } else {
        Presentation::New
    }
}

/// Words of two or three positive letters equal to `window` by a single
/// defining relation, excluding `window` itself.
pub fn positive_relation_images(window: &[Generator]) -> Vec<Vec<Generator>> {
    use Generator::*;
    let mut out = Vec::new();
    match *window {
        [Sigma(i), Sigma(j)] if i.abs_diff(j) >= 2 => out.push(vec![Sigma(j), Sigma(i)]),
        [Sigma(i), Sigma(j), Sigma(k)] if i == k && i.abs_diff(j) == 1 => out.push(vec![Sigma(j), Sigma(i), Sigma(j)]),
        [Band(t, s), Band(r, q)] => {
            let commute =
                (t as i64 - r as i64) * (t as i64 - q as i64) * (s as i64 - r as i64) * (s as i64 - q as i64) > 0;
            if commute {
                out.push(vec![Band(r, q), Band(t, s)]);
            }
            // a_{ts} a_{sr} = a_{tr} a_{ts} = a_{sr} a_{tr}, t > s > r
            let triple = if s == r {
                Some((t, s, q))
            } else if t == r && s < q {
                Some((t, q, s))
            } else if s == q && t < r {
                Some((r, t, s))
            } else {
                None
            };
            if let Some((a, b, c)) = triple {
                for pair in [
                    [Band(a, b), Band(b, c)],
                    [Band(a, c), Band(a, b)],
                    [Band(b, c), Band(a, c)],
                ] {
                    if pair[..] != *window {
                        out.push(pair.to_vec());
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// Every positive word reachable from `word` by one relation move.
pub fn positive_neighbours(word: &[Generator]) -> Vec<Vec<Generator>> {
    let mut out = Vec::new();
    for width in [2, 3] {
        if word.len() < width {
            continue;
        }
        for at in 0..=word.len() - width {
            for image in positive_relation_images(&word[at..at + width]) {
                let mut next = word[..at].to_vec();
                next.extend(image);
                next.extend_from_slice(&word[at + width..]);
                out.push(next);
            }
        }
    }
    out
}

/// The class of a positive word under the positive relations, found by
/// breadth-first search.
pub fn positive_class(word: &[Generator]) -> BTreeSet<Vec<Generator>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([word.to_vec()]);
    seen.insert(word.to_vec());
    while let Some(w) = queue.pop_front() {
        for next in positive_neighbours(&w) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

pub fn delta_word(n: usize, p: Presentation) -> Vec<Generator> {
    match p {
        Presentation::Old => (1..n)
            .flat_map(|k| (1..=n - k).map(Generator::Sigma).collect::<Vec<_>>())
            .collect(),
        Presentation::New => (1..n).rev().map(|s| Generator::Band(s + 1, s)).collect(),
    }
}

/// The positive left divisors of `D`, each as a class of words, computed
/// purely from the defining relations: a word divides `D` iff it is a prefix
/// of some positive word equal to `D`.
pub fn divisor_classes(n: usize, p: Presentation) -> Vec<BTreeSet<Vec<Generator>>> {
    let delta_class = positive_class(&delta_word(n, p));
    let mut prefixes: BTreeSet<Vec<Generator>> = BTreeSet::new();
    for w in &delta_class {
        for k in 0..=w.len() {
            prefixes.insert(w[..k].to_vec());
        }
    }
    let mut classes = Vec::new();
    let mut assigned: HashSet<Vec<Generator>> = HashSet::new();
    for w in &prefixes {
        if assigned.contains(w) {
            continue;
        }
        let class = positive_class(w);
        assigned.extend(class.iter().cloned());
        classes.push(class);
    }
    classes
}

/// Strand simulation: entry `i` is the final position of the strand that
/// starts at position `i + 1`, or `None` if two strands cross twice.
pub fn simulate_strands(n: usize, word: &[Generator]) -> Option<Vec<usize>> {
    let mut at: Vec<usize> = (1..=n).collect();
    let mut crossed = HashSet::new();
    for g in word {
        let Generator::Sigma(i) = *g else {
            panic!("not an Artin letter")
        };
        let a = at.iter().position(|&p| p == i).unwrap();
        let b = at.iter().position(|&p| p == i + 1).unwrap();
        if !crossed.insert((a.min(b), a.max(b))) {
            return None;
        }
        at[a] = i + 1;
        at[b] = i;
    }
    Some(at)
}

/// One random relation move on a signed word, preserving the element.
pub fn rewrite_once(rng: &mut StdRng, word: &BraidWord) -> BraidWord {
    let n = word.strands();
    let p = word.presentation();
    let mut letters = word.letters().to_vec();
    let gens = generators(n, p);
    match rng.gen_range(0..4) {
        0 => {
            let g = gens[rng.gen_range(0..gens.len())];
            let at = rng.gen_range(0..=letters.len());
            let pair = if rng.gen_bool(0.5) {
                [Letter::pos(g), Letter::neg(g)]
            } else {
                [Letter::neg(g), Letter::pos(g)]
            };
            letters.splice(at..at, pair);
        }
        1 => {
            let spots: Vec<usize> = (0..letters.len().saturating_sub(1))
                .filter(|&i| {
                    letters[i].generator == letters[i + 1].generator && letters[i].inverse != letters[i + 1].inverse
                })
                .collect();
            if !spots.is_empty() {
                let at = spots[rng.gen_range(0..spots.len())];
                letters.drain(at..at + 2);
            }
        }
        _ => {
            let mut options = Vec::new();
            for width in [2, 3] {
                for at in 0..=letters.len().saturating_sub(width) {
                    if at + width > letters.len() {
                        continue;
                    }
                    let window = &letters[at..at + width];
                    for image in signed_images(window) {
                        options.push((at, width, image));
                    }
                }
            }
            if !options.is_empty() {
                let (at, width, image) = options.swap_remove(rng.gen_range(0..options.len()));
                letters.splice(at..at + width, image);
            }
        }
    }
    BraidWord::new(n, p, letters).unwrap()
}

fn signed_images(window: &[Letter]) -> Vec<Vec<Letter>> {
    let gens: Vec<Generator> = window.iter().map(|l| l.generator).collect();
    if window.iter().all(|l| !l.inverse) {
        return positive_relation_images(&gens)
            .into_iter()
            .map(|w| w.into_iter().map(Letter::pos).collect())
            .collect();
    }
    if window.iter().all(|l| l.inverse) {
        // u v = x y  ⇔  v⁻¹ u⁻¹ = y⁻¹ x⁻¹
        let reversed: Vec<Generator> = gens.iter().rev().copied().collect();
        return positive_relation_images(&reversed)
            .into_iter()
            .map(|w| w.into_iter().rev().map(Letter::neg).collect())
            .collect();
    }
    if window.len() == 2 {
        let swapped = positive_relation_images(&gens);
        if swapped.contains(&vec![gens[1], gens[0]]) {
            return vec![vec![window[1], window[0]]];
        }
    }
    Vec::new()
}

pub fn rewrite(rng: &mut StdRng, word: &BraidWord, moves: usize) -> BraidWord {
    (0..moves).fold(word.clone(), |w, _| rewrite_once(rng, &w))
}

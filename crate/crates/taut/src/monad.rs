//! The free monoid monad on finite sets, with bounded views of its unit and
//! multiplication and exhaustive checks that it is cartesian.

use std::collections::BTreeSet;

use crate::fib::BaseMap;
use crate::report::CheckReport;

pub type Letter = String;
pub type SetWord = Vec<Letter>;

/// All words over `alphabet` of length exactly `len`, lexicographic.
pub fn words(alphabet: &BTreeSet<Letter>, len: usize) -> Vec<SetWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for l in alphabet {
                let mut v = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

pub fn words_up_to(alphabet: &BTreeSet<Letter>, max_len: usize) -> Vec<SetWord> {
    (0..=max_len).flat_map(|n| words(alphabet, n)).collect()
}

/// The unit of the monad: a one-letter word.
pub fn unit(letter: &Letter) -> SetWord {
    vec![letter.clone()]
}

/// The multiplication: concatenate the inner words in order.
pub fn mult(word_of_words: &[SetWord]) -> SetWord {
    word_of_words.iter().flatten().cloned().collect()
}

/// Letterwise action of a map on a word.
pub fn map_word(f: &BaseMap, w: &SetWord) -> SetWord {
    w.iter()
        .map(|l| f.apply(l).expect("letter in source").to_string())
        .collect()
}

/// Nested words over `alphabet`: outer length <= `max_outer`, total letters
/// <= `max_total`.
pub fn nested_words(
    alphabet: &BTreeSet<Letter>,
    max_outer: usize,
    max_total: usize,
) -> Vec<Vec<SetWord>> {
    let mut out: Vec<Vec<SetWord>> = vec![Vec::new()];
    for _ in 0..max_outer {
        let mut next = out.clone();
        for prefix in &out {
            let used: usize = prefix.iter().map(Vec::len).sum();
            for extra in 0..=(max_total - used) {
                for inner in words(alphabet, extra) {
                    let mut v = prefix.clone();
                    v.push(inner);
                    next.push(v);
                }
            }
        }
        next.sort();
        next.dedup();
        out = next;
    }
    out
}

/// Check that the naturality square of the unit at `f` is a pullback, on
/// words of length at most `max_len`: the canonical comparison from the
/// source into the fibered product must be a bijection.
pub fn check_eta_square(f: &BaseMap, max_len: usize) -> CheckReport {
    // pullback of T(f): T(S) -> T(S') against eta_{S'}: S' -> T(S')
    let mut apex: BTreeSet<(Letter, SetWord)> = BTreeSet::new();
    for s_prime in &f.target {
        for w in words_up_to(&f.source, max_len) {
            if map_word(f, &w) == unit(s_prime) {
                apex.insert((s_prime.clone(), w));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for s in &f.source {
        let image = (f.apply(s).expect("total").to_string(), unit(s));
        if !apex.contains(&image) {
            return CheckReport::fail(
                "eta-naturality",
                format!("comparison misses the pullback at {s}"),
                f.source.len(),
            );
        }
        if !seen.insert(image) {
            return CheckReport::fail(
                "eta-naturality",
                format!("comparison not injective at {s}"),
                f.source.len(),
            );
        }
    }
    if seen.len() != apex.len() {
        let missing = apex.difference(&seen).next().expect("nonempty difference");
        return CheckReport::fail(
            "eta-naturality",
            format!("pullback element {missing:?} has no preimage"),
            f.source.len(),
        );
    }
    CheckReport::pass("eta-naturality", f.source.len() + apex.len())
}

/// Check that the naturality square of the multiplication at `f` is a
/// pullback on bounded nested words. The multiplications used on the source
/// and target side are injectable so that a corrupted monad can be detected.
pub fn check_mu_square_with(
    f: &BaseMap,
    max_len: usize,
    mult_src: &dyn Fn(&[SetWord]) -> SetWord,
    mult_dst: &dyn Fn(&[SetWord]) -> SetWord,
) -> CheckReport {
    let nested_src = nested_words(&f.source, max_len, max_len);
    // first: the square must commute at all
    for nested in &nested_src {
        let down_then_right = map_word(f, &mult_src(nested));
        let mapped: Vec<SetWord> = nested.iter().map(|w| map_word(f, w)).collect();
        let right_then_down = mult_dst(&mapped);
        if down_then_right != right_then_down {
            return CheckReport::fail(
                "mu-naturality",
                format!("square does not commute at {nested:?}"),
                nested_src.len(),
            );
        }
    }
    // pullback of T(f) against mu_{S'}
    let mut apex: BTreeSet<(Vec<SetWord>, SetWord)> = BTreeSet::new();
    for nested in nested_words(&f.target, max_len, max_len) {
        for w in words_up_to(&f.source, max_len) {
            if mult_dst(&nested) == map_word(f, &w) {
                apex.insert((nested.clone(), w));
            }
        }
    }
    let mut seen = BTreeSet::new();
    for nested in &nested_src {
        let mapped: Vec<SetWord> = nested.iter().map(|w| map_word(f, w)).collect();
        let image = (mapped, mult_src(nested));
        if !apex.contains(&image) {
            return CheckReport::fail(
                "mu-naturality",
                format!("comparison misses the pullback at {nested:?}"),
                nested_src.len(),
            );
        }
        if !seen.insert(image) {
            return CheckReport::fail(
                "mu-naturality",
                format!("comparison not injective at {nested:?}"),
                nested_src.len(),
            );
        }
    }
    if seen.len() != apex.len() {
        let missing = apex.difference(&seen).next().expect("nonempty difference");
        return CheckReport::fail(
            "mu-naturality",
            format!("pullback element {missing:?} has no preimage"),
            nested_src.len(),
        );
    }
    CheckReport::pass("mu-naturality", nested_src.len() + apex.len())
}

pub fn check_mu_square(f: &BaseMap, max_len: usize) -> CheckReport {
    check_mu_square_with(f, max_len, &|w| mult(w), &|w| mult(w))
}

/// Check that the word functor preserves a supplied pullback square: the
/// comparison from words over `A x_C B` to the fibered product of words is a
/// bijection up to the length bound.
pub fn check_preserves_pullback(g: &BaseMap, h: &BaseMap, max_len: usize) -> CheckReport {
    if g.target != h.target {
        return CheckReport::error("t-preserves-pullback", "cospan targets differ");
    }
    // P = A x_C B with projections
    let mut pairs: Vec<(Letter, Letter)> = Vec::new();
    for a in &g.source {
        for b in &h.source {
            if g.apply(a).expect("total") == h.apply(b).expect("total") {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let mut apex: BTreeSet<(SetWord, SetWord)> = BTreeSet::new();
    for u in words_up_to(&g.source, max_len) {
        for v in words_up_to(&h.source, max_len) {
            if map_word(g, &u) == map_word(h, &v) {
                apex.insert((u.clone(), v));
            }
        }
    }
    // words over P, mapped by the two projections
    let p_alphabet: BTreeSet<Letter> =
        pairs.iter().map(|(a, b)| format!("{a}|{b}")).collect();
    let split = |l: &Letter| -> (Letter, Letter) {
        let (a, b) = l.split_once('|').expect("pair letter");
        (a.to_string(), b.to_string())
    };
    let mut seen = BTreeSet::new();
    let p_words = words_up_to(&p_alphabet, max_len);
    for w in &p_words {
        let u: SetWord = w.iter().map(|l| split(l).0).collect();
        let v: SetWord = w.iter().map(|l| split(l).1).collect();
        let image = (u, v);
        if !apex.contains(&image) || !seen.insert(image) {
            return CheckReport::fail(
                "t-preserves-pullback",
                format!("comparison fails at {w:?}"),
                p_words.len(),
            );
        }
    }
    if seen.len() != apex.len() {
        let missing = apex.difference(&seen).next().expect("nonempty difference");
        return CheckReport::fail(
            "t-preserves-pullback",
            format!("word pair {missing:?} has no preimage"),
            p_words.len(),
        );
    }
    CheckReport::pass("t-preserves-pullback", p_words.len() + apex.len())
}

/// The full cartesianness check at a map: both naturality squares are
/// pullbacks and the functor preserves a pullback square built from `f`
/// against itself.
pub fn check_cartesian(f: &BaseMap, max_len: usize) -> CheckReport {
    CheckReport::combine(
        "cartesian-monad",
        [
            check_eta_square(f, max_len),
            check_mu_square(f, max_len),
            check_preserves_pullback(f, f, max_len),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(ls: &[&str]) -> BTreeSet<Letter> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn mult_concatenates() {
        let w = vec![
            vec!["x".to_string(), "y".to_string()],
            vec![],
            vec!["z".to_string()],
        ];
        assert_eq!(mult(&w), vec!["x", "y", "z"]);
    }

    #[test]
    fn monad_laws_on_small_words() {
        let alphabet = letters(&["a", "b"]);
        for w in words_up_to(&alphabet, 3) {
            let letterwise: Vec<SetWord> = w.iter().map(unit).collect();
            assert_eq!(mult(&letterwise), w);
            assert_eq!(mult(&[w.clone()]), w);
        }
    }

    #[test]
    fn double_flatten_agrees() {
        // triple-nested words of depth 3, alphabet of 2, sizes <= 3
        let alphabet = letters(&["a", "b"]);
        let inner = nested_words(&alphabet, 3, 3);
        // words of words of words: outer length <= 2 over the nested words
        for x in &inner {
            for y in &inner {
                let triple = vec![x.clone(), y.clone()];
                let flat_outer_first: Vec<SetWord> =
                    triple.iter().flatten().cloned().collect();
                let a = mult(&flat_outer_first);
                let flat_inner_first: Vec<SetWord> =
                    triple.iter().map(|ws| mult(ws)).collect();
                let b = mult(&flat_inner_first);
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn identity_map_is_cartesian() {
        let base = letters(&["a", "b"]);
        let f = BaseMap::identity(&base);
        assert!(check_cartesian(&f, 3).passed());
    }

    #[test]
    fn constant_map_is_cartesian() {
        let f = BaseMap::from_pairs(&[("x", "z"), ("y", "z")], &[]);
        assert!(check_eta_square(&f, 3).passed());
        assert!(check_mu_square(&f, 3).passed());
        assert!(check_preserves_pullback(&f, &f, 2).passed());
    }

    #[test]
    fn corrupted_mult_fails() {
        // reversed concatenation on the source side only; needs a
        // non-collapsing map to be observable
        let f = BaseMap::from_pairs(&[("x", "x"), ("y", "y")], &[]);
        let reversed = |ws: &[SetWord]| -> SetWord {
            ws.iter().rev().flatten().cloned().collect()
        };
        let report = check_mu_square_with(&f, 3, &reversed, &|w| mult(w));
        assert!(!report.passed());
        assert!(report.witness.is_some());
    }
}

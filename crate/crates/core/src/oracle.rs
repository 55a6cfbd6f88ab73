//! Slow reference implementations used to cross-check the closed forms.

use crate::partition::ChargedPartition;
use crate::weight::Fundamental;
use crate::weyl::{Node, Sign, WeylElement};

/// `u ≤ w` iff `u` is the product of a reduced subword of the reduced word
/// of `w`. Tries every subset of letters.
pub fn subword_bruhat(u: &WeylElement, w: &WeylElement) -> bool {
    let word = w.word();
    assert!(word.len() < 24, "subword oracle is exponential in the length");
    (0u32..1 << word.len()).any(|mask| {
        let sub: Vec<Node> = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &g)| g)
            .collect();
        let prod = WeylElement::from_word(&sub);
        prod.length() as usize == sub.len() && prod == *u
    })
}

/// Minimum of `W_left · z · W_right` by scanning group elements of length
/// up to `ℓ(z) + 2` and testing membership through multiplication.
pub fn double_coset_min_brute(left: Fundamental, z: WeylElement, right: Fundamental) -> WeylElement {
    let left_group = [WeylElement::IDENTITY, WeylElement::generator(left.stabilizer_generator())];
    let right_group = [WeylElement::IDENTITY, WeylElement::generator(right.stabilizer_generator())];
    let times = |a: WeylElement, b: WeylElement| {
        let mut word = a.word();
        word.extend(b.word());
        WeylElement::from_word(&word)
    };
    WeylElement::all_up_to(z.length() + 2)
        .into_iter()
        .filter(|x| {
            left_group
                .iter()
                .any(|&a| right_group.iter().any(|&b| times(times(a, z), b) == *x))
        })
        .min_by_key(|x| x.length())
        .expect("z lies in its own double coset")
}

/// `I(x)·y`: the set `{x' y : x' ≤ x}` has a unique minimum; found by
/// enumerating the Bruhat interval below `x`.
pub fn demazure_min_brute(x: WeylElement, y: WeylElement) -> WeylElement {
    WeylElement::all_up_to(x.length())
        .into_iter()
        .filter(|u| subword_bruhat(u, &x))
        .map(|u| {
            let mut word = u.word();
            word.extend(y.word());
            WeylElement::from_word(&word)
        })
        .min_by_key(|w| w.length())
        .expect("identity lies below x")
}

/// Deletes adjacent `− +` pairs, leftmost first, until none remain.
pub fn reduce_by_deletion(signs: &[Sign]) -> Vec<Sign> {
    let mut s = signs.to_vec();
    while let Some(k) = s
        .windows(2)
        .position(|w| w[0] == Sign::Minus && w[1] == Sign::Plus)
    {
        s.drain(k..k + 2);
    }
    s
}

/// The `i`-signature straight from the addable/removable definition,
/// scanning columns `1..=μ1 + 1` and testing each box.
pub fn signature_by_boxes(b: &ChargedPartition, i: Node) -> Vec<(Sign, u32)> {
    let parts = b.parts();
    let label = |row: u32, col: u32| {
        Node::from_parity(b.charge().index() as i64 - row as i64 + col as i64)
    };
    let height = |c: u32| parts.iter().filter(|&&p| p >= c).count() as u32;
    let first = parts.first().copied().unwrap_or(0);
    let mut out = Vec::new();
    let row_len = |r: u32| parts.get(r as usize - 1).copied().unwrap_or(0);
    for c in 1..=first + 1 {
        let h = height(c);
        // (h + 1, c) extends row h + 1; (h, c) ends row h
        let addable = row_len(h + 1) + 1 == c;
        let removable = h > 0 && row_len(h) == c;
        if addable && label(h + 1, c) == i {
            out.push((Sign::Plus, c));
        } else if removable && label(h, c) == i {
            out.push((Sign::Minus, c));
        }
    }
    out
}

/// Number of partitions of each size `≤ max_size` into distinct parts of
/// the given parity, by trying every subset of admissible parts.
pub fn distinct_parity_counts(lambda: Fundamental, max_size: u32) -> Vec<u64> {
    let start = match lambda {
        Fundamental::L0 => 1,
        Fundamental::L1 => 2,
    };
    let parts: Vec<u32> = (start..=max_size).step_by(2).collect();
    let mut counts = vec![0u64; max_size as usize + 1];
    for mask in 0u64..1 << parts.len() {
        let sum: u32 = parts
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &p)| p)
            .sum();
        if sum <= max_size {
            counts[sum as usize] += 1;
        }
    }
    counts
}

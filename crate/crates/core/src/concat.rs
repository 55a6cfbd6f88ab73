//! Concatenation `π1 ∗ π2` of two LS paths and the Littelmann root
//! operators on it, computed directly from the joint `h`-function.
//!
//! This works on arbitrary piecewise-linear data (the cut-and-reflect
//! definition) and does not rely on the case analysis in [`crate::path`].

use num_traits::{One, Zero};

use crate::path::{LsPath, Segment};
use crate::weight::{Fundamental, Rational, Weight};
use crate::weyl::{CosetRep, Node};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    E,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Piece {
    factor: usize,
    shape: Fundamental,
    dir: CosetRep,
    duration: Rational,
}

impl Piece {
    fn slope(&self, i: Node) -> Rational {
        self.shape.weight().act(&self.dir.element()).pair_coroot(i)
    }
}

/// A path on `[0, k]` built from linear pieces, each remembering which
/// factor of the concatenation it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcatPath {
    pieces: Vec<Piece>,
    factors: Vec<Fundamental>,
}

impl ConcatPath {
    /// Traverses each factor in turn, each on an interval of length 1.
    /// Operators only see the shape of `h`, so this agrees with running both
    /// on halves of `[0, 1]`.
    pub fn new(factors: &[LsPath]) -> Self {
        let mut pieces = Vec::new();
        for (factor, path) in factors.iter().enumerate() {
            let mut start = Rational::zero();
            for seg in path.segments() {
                pieces.push(Piece {
                    factor,
                    shape: path.shape(),
                    dir: seg.dir,
                    duration: seg.end - start,
                });
                start = seg.end;
            }
        }
        ConcatPath {
            pieces,
            factors: factors.iter().map(|p| p.shape()).collect(),
        }
    }

    pub fn endpoint(&self) -> Weight {
        self.pieces.iter().fold(Weight::ZERO, |acc, p| {
            acc + p.shape.weight().act(&p.dir.element()) * p.duration
        })
    }

    /// Values of `h` at the piece boundaries, starting with `h(0) = 0`.
    fn heights(&self, i: Node) -> Vec<Rational> {
        let mut out = vec![Rational::zero()];
        let mut h = Rational::zero();
        for p in &self.pieces {
            h += p.slope(i) * p.duration;
            out.push(h);
        }
        out
    }

    /// Cuts piece `k` after the given fraction of its duration.
    fn split(&mut self, k: usize, fraction: Rational) {
        let piece = self.pieces[k];
        let mut first = piece;
        first.duration = piece.duration * fraction;
        let mut second = piece;
        second.duration = piece.duration - first.duration;
        self.pieces.splice(k..=k, [first, second]);
    }

    fn reflect(&mut self, range: std::ops::Range<usize>, i: Node) {
        for p in &mut self.pieces[range] {
            p.dir = p.dir.reflect(i);
        }
    }

    pub fn apply(&self, op: Op, i: Node) -> Option<ConcatPath> {
        match op {
            Op::F => self.f(i),
            Op::E => self.e(i),
        }
    }

    /// Reflects the stretch from the last minimum of `h` up to the first
    /// time `h` climbs one unit above it.
    pub fn f(&self, i: Node) -> Option<ConcatPath> {
        let h = self.heights(i);
        let q = *h.iter().min().expect("non-empty");
        let target = q + Rational::one();
        if *h.last().expect("non-empty") < target {
            return None;
        }
        let t0 = h.iter().rposition(|v| *v == q).expect("minimum attained");
        let j = (t0 + 1..h.len()).find(|&k| h[k] >= target).expect("h(1) ≥ Q + 1");
        let mut out = self.clone();
        if h[j] > target {
            out.split(j - 1, (target - h[j - 1]) / (h[j] - h[j - 1]));
        }
        out.reflect(t0..j, i);
        Some(out)
    }

    /// Reflects the stretch from the last time `h = Q + 1` before the first
    /// minimum up to that minimum.
    pub fn e(&self, i: Node) -> Option<ConcatPath> {
        let h = self.heights(i);
        let q = *h.iter().min().expect("non-empty");
        let target = q + Rational::one();
        if q > -Rational::one() {
            return None;
        }
        let t0 = h.iter().position(|v| *v == q).expect("minimum attained");
        let j = (0..t0).rev().find(|&k| h[k] >= target).expect("h(0) = 0 ≥ Q + 1");
        let mut out = self.clone();
        let mut end = t0;
        let mut start = j;
        if h[j] > target {
            out.split(j, (h[j] - target) / (h[j] - h[j + 1]));
            start += 1;
            end += 1;
        }
        out.reflect(start..end, i);
        Some(out)
    }

    /// Splits back into one LS path per factor, or `None` if some factor
    /// no longer has the right length or shape.
    pub fn factors(&self) -> Option<Vec<LsPath>> {
        let mut out = Vec::with_capacity(self.factors.len());
        for (factor, &shape) in self.factors.iter().enumerate() {
            let mut segs = Vec::new();
            let mut end = Rational::zero();
            for p in self.pieces.iter().filter(|p| p.factor == factor) {
                end += p.duration;
                segs.push(Segment { dir: p.dir, end });
            }
            out.push(LsPath::from_segments(shape, &segs).ok()?);
        }
        Some(out)
    }
}

/// Littelmann operator on `π1 ∗ π2`, re-split into its two factors.
///
/// # Panics
///
/// If the result does not split into two LS paths of the original shapes.
pub fn concat_path_op(i: Node, left: &LsPath, right: &LsPath, op: Op) -> Option<(LsPath, LsPath)> {
    let joined = ConcatPath::new(&[left.clone(), right.clone()]);
    let moved = joined.apply(op, i)?;
    let mut parts = moved
        .factors()
        .expect("root operators on a concatenation keep both factors LS paths");
    let second = parts.pop().expect("two factors");
    let first = parts.pop().expect("two factors");
    Some((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn straight(shape: Fundamental, n: u32) -> LsPath {
        LsPath::straight(shape, n)
    }

    #[test]
    fn single_factor_matches_path_operators() {
        let p = LsPath::new(Fundamental::L0, 4, vec![3, 2, 2, 1]).unwrap();
        let c = ConcatPath::new(std::slice::from_ref(&p));
        for i in Node::ALL {
            let f = c.f(i).map(|x| x.factors().unwrap().remove(0));
            let e = c.e(i).map(|x| x.factors().unwrap().remove(0));
            assert_eq!(f, p.f(i));
            assert_eq!(e, p.e(i));
        }
    }

    #[test]
    fn straight_pairs() {
        let s0 = straight(Fundamental::L0, 0);
        assert_eq!(
            concat_path_op(Node::Zero, &s0, &s0, Op::F),
            Some((straight(Fundamental::L0, 1), s0.clone()))
        );
        for lambda in Fundamental::ALL {
            for i in Node::ALL {
                assert_eq!(concat_path_op(i, &straight(lambda, 0), &s0, Op::E), None);
            }
        }
        assert_eq!(concat_path_op(Node::One, &s0, &s0, Op::F), None);
    }

    #[test]
    fn endpoint_is_sum_of_factors() {
        let a = LsPath::new(Fundamental::L0, 4, vec![3, 2, 2, 1]).unwrap();
        let b = LsPath::new(Fundamental::L1, 1, vec![1]).unwrap();
        let c = ConcatPath::new(&[a.clone(), b.clone()]);
        assert_eq!(c.endpoint(), a.endpoint() + b.endpoint());
    }
}

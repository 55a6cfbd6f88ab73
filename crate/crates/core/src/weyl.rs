//! The Weyl group of affine sl2.
//!
//! `W = <s0, s1>` is the infinite dihedral group: every element other than the
//! identity has exactly one reduced word, and that word alternates between the
//! two generators. An element is therefore pinned down by its length and the
//! generator it starts with on the left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weight::Fundamental;

/// A node of the affine sl2 Dynkin diagram. Doubles as a generator index, a
/// coroot index and a box colour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Zero,
    One,
}

impl Node {
    pub const ALL: [Node; 2] = [Node::Zero, Node::One];

    pub fn index(self) -> u8 {
        match self {
            Node::Zero => 0,
            Node::One => 1,
        }
    }

    pub fn from_index(i: u8) -> Option<Node> {
        match i {
            0 => Some(Node::Zero),
            1 => Some(Node::One),
            _ => None,
        }
    }

    /// The node of the given parity.
    pub fn from_parity(k: i64) -> Node {
        if k.rem_euclid(2) == 0 {
            Node::Zero
        } else {
            Node::One
        }
    }

    pub fn other(self) -> Node {
        match self {
            Node::Zero => Node::One,
            Node::One => Node::Zero,
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

impl<'de> Deserialize<'de> for Node {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let i = u8::deserialize(d)?;
        Node::from_index(i).ok_or_else(|| serde::de::Error::custom(format!("node {i} not in {{0,1}}")))
    }
}

/// An element of the infinite dihedral Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    length: u32,
    leftmost: Option<Node>,
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement {
        length: 0,
        leftmost: None,
    };

    pub fn identity() -> Self {
        Self::IDENTITY
    }

    /// The simple reflection `s_g`.
    pub fn generator(g: Node) -> Self {
        WeylElement {
            length: 1,
            leftmost: Some(g),
        }
    }

    /// The alternating element of `length` whose reduced word begins with `leftmost`.
    pub fn alternating(length: u32, leftmost: Node) -> Self {
        if length == 0 {
            Self::IDENTITY
        } else {
            WeylElement {
                length,
                leftmost: Some(leftmost),
            }
        }
    }

    /// Multiplies out an arbitrary (not necessarily reduced) word, read left to right.
    pub fn from_word(word: &[Node]) -> Self {
        word.iter()
            .rev()
            .fold(Self::IDENTITY, |w, &g| w.left_multiply(g))
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn leftmost(&self) -> Option<Node> {
        self.leftmost
    }

    pub fn rightmost(&self) -> Option<Node> {
        self.leftmost.map(|g| if self.length % 2 == 1 { g } else { g.other() })
    }

    /// The unique reduced word, left to right.
    pub fn word(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.length as usize);
        if let Some(mut g) = self.leftmost {
            for _ in 0..self.length {
                out.push(g);
                g = g.other();
            }
        }
        out
    }

    /// `s_g · self`.
    pub fn left_multiply(self, g: Node) -> Self {
        match self.leftmost {
            None => Self::generator(g),
            Some(h) if h == g => Self::alternating(self.length - 1, g.other()),
            Some(_) => WeylElement {
                length: self.length + 1,
                leftmost: Some(g),
            },
        }
    }

    /// `self · s_g`.
    pub fn right_multiply(self, g: Node) -> Self {
        self.inverse().left_multiply(g).inverse()
    }

    /// The reduced word of the inverse is the reversed word.
    pub fn inverse(self) -> Self {
        WeylElement {
            length: self.length,
            leftmost: self.rightmost(),
        }
    }

    /// Bruhat order. In the infinite dihedral group two distinct elements
    /// are comparable exactly when their lengths differ.
    pub fn bruhat_le(&self, other: &WeylElement) -> bool {
        self.length < other.length || self == other
    }

    /// Reads this element as a minimal coset representative `w_n^±`, if its
    /// reduced word ends in a single sign's generator (identity reads as `w_0^+`).
    pub fn as_coset_rep(&self) -> CosetRep {
        match self.rightmost() {
            None | Some(Node::Zero) => CosetRep::plus(self.length),
            Some(Node::One) => CosetRep::minus(self.length),
        }
    }

    /// Every element of length at most `max_len`, ordered by length.
    pub fn all_up_to(max_len: u32) -> Vec<WeylElement> {
        let mut out = vec![Self::IDENTITY];
        for len in 1..=max_len {
            for g in Node::ALL {
                out.push(Self::alternating(len, g));
            }
        }
        out
    }
}

impl Default for WeylElement {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        let word: Vec<String> = self.word().iter().map(|g| format!("s{g}")).collect();
        f.write_str(&word.join(" "))
    }
}

impl FromStr for WeylElement {
    type Err = Error;

    /// Accepts any word in `s0`, `s1` (space separated) or `e`; non-reduced
    /// words are multiplied out.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(Self::IDENTITY);
        }
        let bad = || Error::Parse {
            what: "Weyl group element",
            input: s.to_string(),
        };
        let word = s
            .split_whitespace()
            .map(|tok| match tok {
                "s0" => Ok(Node::Zero),
                "s1" => Ok(Node::One),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_word(&word))
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// `w_n^+` (reduced word ends in `s0` on the right) or `w_n^-` (ends in `s1`).
/// These are the minimal representatives of `W/W_{Λ0}` and `W/W_{Λ1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CosetRep {
    pub sign: Sign,
    pub index: u32,
}

impl CosetRep {
    pub fn plus(index: u32) -> Self {
        CosetRep {
            sign: Sign::Plus,
            index,
        }
    }

    pub fn minus(index: u32) -> Self {
        CosetRep {
            sign: Sign::Minus,
            index,
        }
    }

    /// The representative family for the cosets of `W_λ`.
    pub fn for_shape(shape: Fundamental, index: u32) -> Self {
        match shape {
            Fundamental::L0 => Self::plus(index),
            Fundamental::L1 => Self::minus(index),
        }
    }

    /// The generator at the right end of every non-identity representative.
    pub fn right_generator(&self) -> Node {
        match self.sign {
            Sign::Plus => Node::Zero,
            Sign::Minus => Node::One,
        }
    }

    pub fn element(&self) -> WeylElement {
        coset_rep(self.sign, self.index)
    }

    /// `s_g · w_n^±` reduced modulo the stabilizer: moves one step up or down
    /// the chain, or stays at `w_0` when `s_g` fixes the fundamental weight.
    pub fn reflect(&self, g: Node) -> CosetRep {
        let next = self.element().left_multiply(g);
        if next.is_identity() || next.rightmost() == Some(self.right_generator()) {
            CosetRep {
                index: next.length(),
                ..*self
            }
        } else {
            // s_g lies in the stabilizer
            *self
        }
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        write!(f, "w{s}{}", self.index)
    }
}

impl FromStr for CosetRep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "coset representative",
            input: s.to_string(),
        };
        let rest = s.trim().strip_prefix('w').ok_or_else(bad)?;
        let (sign, digits) = if let Some(d) = rest.strip_prefix('+') {
            (Sign::Plus, d)
        } else if let Some(d) = rest.strip_prefix('-') {
            (Sign::Minus, d)
        } else {
            return Err(bad());
        };
        let index = digits.parse().map_err(|_| bad())?;
        Ok(CosetRep { sign, index })
    }
}

impl Serialize for CosetRep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CosetRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn left_multiply(g: Node, w: WeylElement) -> WeylElement {
    w.left_multiply(g)
}

pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> bool {
    u.bruhat_le(w)
}

/// `w_n^+ = ... s1 s0` or `w_n^- = ... s0 s1`, alternating leftward from the
/// rightmost letter.
pub fn coset_rep(sign: Sign, n: u32) -> WeylElement {
    let right = match sign {
        Sign::Plus => Node::Zero,
        Sign::Minus => Node::One,
    };
    // leftmost letter sits n - 1 steps from the right
    let left = if n % 2 == 1 { right } else { right.other() };
    WeylElement::alternating(n, left)
}

/// `w ∧ s_g w`: the shorter of the two.
pub fn wedge(w: WeylElement, g: Node) -> WeylElement {
    let sw = w.left_multiply(g);
    if sw.length() < w.length() {
        sw
    } else {
        w
    }
}

/// `min I(x)·y` via the z-sequence over the reduced word of `x`, consumed
/// from its rightmost letter.
pub fn demazure_min(x: WeylElement, y: WeylElement) -> WeylElement {
    x.word().into_iter().rev().fold(y, wedge)
}

/// Minimum of the double coset `W_left · z · W_right`. Each stabilizer has
/// two elements, so the coset has at most four members.
pub fn double_coset_min(left: Fundamental, z: WeylElement, right: Fundamental) -> WeylElement {
    let a = left.stabilizer_generator();
    let b = right.stabilizer_generator();
    let candidates = [
        z,
        z.left_multiply(a),
        z.right_multiply(b),
        z.left_multiply(a).right_multiply(b),
    ];
    candidates
        .into_iter()
        .min_by_key(|w| w.length())
        .expect("non-empty candidate set")
}

/// Index `ℓ` with `min W_λ I(τ⁻¹) w_m^+ W_{Λ0} = w_ℓ^+`, where `τ = w_n^+`
/// for `λ = Λ0` and `τ = w_n^-` for `λ = Λ1`.
pub fn kk_index(lambda: Fundamental, n: u32, m: u32) -> u32 {
    let same_parity = m % 2 == n % 2;
    let diff = m as i64 - n as i64;
    let shift = match (lambda, same_parity) {
        (Fundamental::L0, true) | (Fundamental::L1, false) => 1,
        (Fundamental::L0, false) | (Fundamental::L1, true) => 0,
    };
    (diff - shift).max(0) as u32
}

/// The same index computed through the z-sequence and the four-candidate
/// double coset minimum.
pub fn kk_index_via_demazure(lambda: Fundamental, n: u32, m: u32) -> u32 {
    let tau = CosetRep::for_shape(lambda, n).element();
    let phi = coset_rep(Sign::Plus, m);
    let z = demazure_min(tau.inverse(), phi);
    let min = double_coset_min(lambda, z, Fundamental::L0);
    debug_assert!(min.is_identity() || min.rightmost() == Some(Node::Zero));
    min.length()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeylElement {
        s.parse().unwrap()
    }

    #[test]
    fn left_multiplication() {
        assert_eq!(left_multiply(Node::Zero, WeylElement::IDENTITY), w("s0"));
        assert_eq!(left_multiply(Node::Zero, w("s0 s1 s0")), w("s1 s0"));
        assert_eq!(left_multiply(Node::One, w("s0 s1")), w("s1 s0 s1"));
        assert_eq!(w("s1 s0 s1").length(), 3);
    }

    #[test]
    fn parse_display() {
        assert_eq!(WeylElement::IDENTITY.to_string(), "e");
        assert_eq!(w("s1 s0").to_string(), "s1 s0");
        assert_eq!(w("s0 s0"), WeylElement::IDENTITY);
        assert!("s2".parse::<WeylElement>().is_err());
        assert_eq!("w+3".parse::<CosetRep>().unwrap(), CosetRep::plus(3));
        assert_eq!(CosetRep::minus(2).to_string(), "w-2");
        assert!("v+1".parse::<CosetRep>().is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&WeylElement::IDENTITY, &w("s1 s0 s1")));
        assert!(bruhat_leq(&w("s0"), &w("s1 s0")));
        assert!(!bruhat_leq(&w("s0 s1 s0"), &w("s1 s0 s1")));
    }

    #[test]
    fn coset_reps() {
        assert_eq!(coset_rep(Sign::Plus, 0), WeylElement::IDENTITY);
        assert_eq!(coset_rep(Sign::Plus, 2), w("s1 s0"));
        assert_eq!(coset_rep(Sign::Minus, 3), w("s1 s0 s1"));
        for m in 0..10 {
            for n in 0..10 {
                for sign in [Sign::Plus, Sign::Minus] {
                    assert_eq!(coset_rep(sign, m).bruhat_le(&coset_rep(sign, n)), m <= n);
                }
            }
        }
    }

    #[test]
    fn coset_reflection_moves_along_chain() {
        assert_eq!(CosetRep::plus(0).reflect(Node::Zero), CosetRep::plus(1));
        assert_eq!(CosetRep::plus(0).reflect(Node::One), CosetRep::plus(0));
        assert_eq!(CosetRep::plus(1).reflect(Node::One), CosetRep::plus(2));
        assert_eq!(CosetRep::plus(1).reflect(Node::Zero), CosetRep::plus(0));
        assert_eq!(CosetRep::minus(0).reflect(Node::One), CosetRep::minus(1));
        assert_eq!(CosetRep::minus(0).reflect(Node::Zero), CosetRep::minus(0));
        assert_eq!(CosetRep::minus(2).reflect(Node::One), CosetRep::minus(3));
        assert_eq!(CosetRep::minus(2).reflect(Node::Zero), CosetRep::minus(1));
    }

    #[test]
    fn wedges() {
        assert_eq!(wedge(WeylElement::IDENTITY, Node::Zero), WeylElement::IDENTITY);
        assert_eq!(wedge(w("s1 s0"), Node::One), w("s0"));
        assert_eq!(wedge(w("s1 s0"), Node::Zero), w("s1 s0"));
    }

    #[test]
    fn demazure_examples() {
        let y = w("s0 s1 s0");
        assert_eq!(demazure_min(WeylElement::IDENTITY, y), y);
        assert_eq!(demazure_min(w("s0"), y), w("s1 s0"));
        assert_eq!(demazure_min(w("s1 s0"), w("s0 s1")), WeylElement::IDENTITY);
    }

    #[test]
    fn double_coset_examples() {
        use Fundamental::{L0, L1};
        assert_eq!(double_coset_min(L0, WeylElement::IDENTITY, L0), WeylElement::IDENTITY);
        assert_eq!(double_coset_min(L0, coset_rep(Sign::Plus, 2), L0), w("s0"));
        assert_eq!(double_coset_min(L1, w("s0"), L0), WeylElement::IDENTITY);
    }

    #[test]
    fn kk_index_examples() {
        use Fundamental::{L0, L1};
        for n in 0..6 {
            assert_eq!(kk_index(L0, n, n), 0);
        }
        assert_eq!(kk_index(L0, 2, 5), 3);
        assert_eq!(kk_index(L1, 2, 6), 4);
    }

    #[test]
    fn inverse_reverses_word() {
        for x in WeylElement::all_up_to(6) {
            let mut rev = x.word();
            rev.reverse();
            assert_eq!(x.inverse().word(), rev);
            assert_eq!(WeylElement::from_word(&x.word()), x);
        }
    }

    #[test]
    fn left_multiply_is_involution() {
        for x in WeylElement::all_up_to(8) {
            for g in Node::ALL {
                assert_eq!(x.left_multiply(g).left_multiply(g), x);
                let diff = x.left_multiply(g).length() as i64 - x.length() as i64;
                assert_eq!(diff.abs(), 1);
            }
        }
    }
}

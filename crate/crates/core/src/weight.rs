//! Weights of affine sl2 in coroot-pairing coordinates.
//!
//! A weight `λ` is stored as `(⟨λ,α0∨⟩, ⟨λ,α1∨⟩, ⟨λ,d⟩)`, i.e. as
//! `c0·Λ0 + c1·Λ1 + d·δ`. All coordinates are exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weyl::{Node, WeylElement};

pub type Rational = Rational64;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// The two level-1 fundamental weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Fundamental {
    L0,
    L1,
}

impl Fundamental {
    pub const ALL: [Fundamental; 2] = [Fundamental::L0, Fundamental::L1];

    pub fn node(self) -> Node {
        match self {
            Fundamental::L0 => Node::Zero,
            Fundamental::L1 => Node::One,
        }
    }

    pub fn from_node(i: Node) -> Self {
        match i {
            Node::Zero => Fundamental::L0,
            Node::One => Fundamental::L1,
        }
    }

    pub fn weight(self) -> Weight {
        match self {
            Fundamental::L0 => Weight::LAMBDA0,
            Fundamental::L1 => Weight::LAMBDA1,
        }
    }

    /// `W_{Λi} = {1, s_j}` with `j ≠ i`.
    pub fn stabilizer_generator(self) -> Node {
        self.node().other()
    }

    /// `⟨Λ_self, α_i∨⟩ = δ_{self,i}`.
    pub fn pairing(self, i: Node) -> i64 {
        (self.node() == i) as i64
    }
}

impl fmt::Display for Fundamental {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fundamental::L0 => f.write_str("Λ0"),
            Fundamental::L1 => f.write_str("Λ1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight {
    pub c0: Rational,
    pub c1: Rational,
    pub d: Rational,
}

const fn r(n: i64) -> Rational {
    Rational::new_raw(n, 1)
}

impl Weight {
    pub const ZERO: Weight = Weight::from_ints(0, 0, 0);
    pub const LAMBDA0: Weight = Weight::from_ints(1, 0, 0);
    pub const LAMBDA1: Weight = Weight::from_ints(0, 1, 0);
    pub const ALPHA0: Weight = Weight::from_ints(2, -2, 1);
    pub const ALPHA1: Weight = Weight::from_ints(-2, 2, 0);
    pub const DELTA: Weight = Weight::from_ints(0, 0, 1);

    pub const fn from_ints(c0: i64, c1: i64, d: i64) -> Self {
        Weight {
            c0: r(c0),
            c1: r(c1),
            d: r(d),
        }
    }

    pub fn new(c0: Rational, c1: Rational, d: Rational) -> Self {
        Weight { c0, c1, d }
    }

    pub fn alpha(i: Node) -> Self {
        match i {
            Node::Zero => Self::ALPHA0,
            Node::One => Self::ALPHA1,
        }
    }

    /// `Λ_j − n0·α0 − n1·α1`.
    pub fn from_fundamental(j: Fundamental, n0: i64, n1: i64) -> Self {
        j.weight() - Self::ALPHA0 * int(n0) - Self::ALPHA1 * int(n1)
    }

    pub fn pair_coroot(&self, i: Node) -> Rational {
        match i {
            Node::Zero => self.c0,
            Node::One => self.c1,
        }
    }

    /// `λ − ⟨λ, α_i∨⟩ α_i`.
    pub fn reflect(&self, i: Node) -> Self {
        *self - Self::alpha(i) * self.pair_coroot(i)
    }

    /// Applies the reduced word of `w` letter by letter, right to left.
    pub fn act(&self, w: &WeylElement) -> Self {
        w.word().iter().rev().fold(*self, |acc, &g| acc.reflect(g))
    }

    /// The `d` coordinate is unconstrained.
    pub fn is_dominant(&self) -> bool {
        !self.c0.is_negative() && !self.c1.is_negative()
    }

    pub fn level(&self) -> Rational {
        self.c0 + self.c1
    }

    /// `(n0, n1)` with `top − self = n0·α0 + n1·α1`, when both are integers.
    pub fn roots_below(&self, top: &Weight) -> Option<(i64, i64)> {
        let gap = *top - *self;
        let n0 = gap.d;
        let n1 = n0 + gap.c1 / int(2);
        let back = Weight::ALPHA0 * n0 + Weight::ALPHA1 * n1;
        (n0.is_integer() && n1.is_integer() && back == gap)
            .then(|| (n0.to_integer(), n1.to_integer()))
    }

    /// Writes the weight as `Λ_j − n0·α0 − n1·α1` when it is a level-1
    /// integral weight.
    pub fn as_fundamental_minus_roots(&self) -> Option<(Fundamental, i64, i64)> {
        if self.level() != Rational::one() || !self.c0.is_integer() || !self.d.is_integer() {
            return None;
        }
        let n0 = -self.d.to_integer();
        let c0 = self.c0.to_integer();
        // c0 = [j = 0] − 2 n0 + 2 n1
        let (j, twice_n1) = if (c0 - 1).rem_euclid(2) == 0 {
            (Fundamental::L0, c0 - 1 + 2 * n0)
        } else {
            (Fundamental::L1, c0 + 2 * n0)
        };
        Some((j, n0, twice_n1 / 2))
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.c0 + o.c0, self.c1 + o.c1, self.d + o.d)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        *self = *self + o;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.c0 - o.c0, self.c1 - o.c1, self.d - o.d)
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, o: Weight) {
        *self = *self - o;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c0, -self.c1, -self.d)
    }
}

impl Mul<Rational> for Weight {
    type Output = Weight;
    fn mul(self, k: Rational) -> Weight {
        Weight::new(self.c0 * k, self.c1 * k, self.d * k)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Rational, &str)]) -> fmt::Result {
    let mut first = true;
    for &(coef, sym) in terms {
        if coef.is_zero() {
            continue;
        }
        let mag = coef.abs();
        let sign = match (first, coef.is_negative()) {
            (true, true) => "−",
            (true, false) => "",
            (false, true) => " − ",
            (false, false) => " + ",
        };
        f.write_str(sign)?;
        if mag.is_one() {
            f.write_str(sym)?;
        } else if mag.is_integer() {
            write!(f, "{mag}{sym}")?;
        } else {
            write!(f, "({mag}){sym}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `name − n0α0 − n1α1`, dropping zero terms.
pub fn format_below(name: &str, n0: i64, n1: i64) -> String {
    let mut out = name.to_string();
    for (n, root) in [(n0, "α0"), (n1, "α1")] {
        match n {
            0 => {}
            1 => out.push_str(&format!(" − {root}")),
            n if n < 0 => out.push_str(&format!(" + {}{root}", -n)),
            n => out.push_str(&format!(" − {n}{root}")),
        }
    }
    out
}

impl fmt::Display for Weight {
    /// Level-1 integral weights print as `Λ0 − 9α0 − 9α1`; everything else
    /// in the `Λ0, Λ1, δ` basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((j, n0, n1)) = self.as_fundamental_minus_roots() {
            let name = j.to_string();
            return write_terms(f, &[(int(1), &name), (int(-n0), "α0"), (int(-n1), "α1")]);
        }
        write_terms(f, &[(self.c0, "Λ0"), (self.c1, "Λ1"), (self.d, "δ")])
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    c0: String,
    c1: String,
    d: String,
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(int(s.parse().map_err(|_| bad())?)),
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightJson {
            c0: self.c0.to_string(),
            c1: self.c1.to_string(),
            d: self.d.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = WeightJson::deserialize(d)?;
        let p = |s: &str| parse_rational(s).map_err(serde::de::Error::custom);
        Ok(Weight::new(p(&raw.c0)?, p(&raw.c1)?, p(&raw.d)?))
    }
}

pub fn pair_coroot(lambda: &Weight, i: Node) -> Rational {
    lambda.pair_coroot(i)
}

pub fn reflect(i: Node, lambda: &Weight) -> Weight {
    lambda.reflect(i)
}

pub fn act(w: &WeylElement, lambda: &Weight) -> Weight {
    lambda.act(w)
}

pub fn is_dominant(lambda: &Weight) -> bool {
    lambda.is_dominant()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_below_a_top_weight() {
        let top = Weight::LAMBDA0 + Weight::LAMBDA1;
        let w = top - Weight::ALPHA0 - Weight::ALPHA1 * int(2);
        assert_eq!(w.roots_below(&top), Some((1, 2)));
        assert_eq!(Weight::LAMBDA0.roots_below(&Weight::LAMBDA1), None);
        assert_eq!(format_below("Λ0 + Λ1", 1, 2), "Λ0 + Λ1 − α0 − 2α1");
        assert_eq!(format_below("2Λ0", 0, 0), "2Λ0");
    }
    use crate::weyl::{coset_rep, Sign};

    #[test]
    fn named_constants() {
        assert_eq!(Weight::ALPHA0 + Weight::ALPHA1, Weight::DELTA);
        assert_eq!(pair_coroot(&Weight::LAMBDA0, Node::Zero), int(1));
        assert_eq!(pair_coroot(&Weight::DELTA, Node::Zero), int(0));
        assert_eq!(pair_coroot(&Weight::DELTA, Node::One), int(0));
        assert_eq!(pair_coroot(&Weight::ALPHA0, Node::One), int(-2));
    }

    #[test]
    fn reflections() {
        assert_eq!(reflect(Node::Zero, &Weight::LAMBDA0), Weight::LAMBDA0 - Weight::ALPHA0);
        assert_eq!(reflect(Node::One, &Weight::LAMBDA0), Weight::LAMBDA0);
        let l = Weight::new(rat(3, 7), int(-2), rat(1, 2));
        for i in Node::ALL {
            assert_eq!(reflect(i, &reflect(i, &l)), l);
        }
    }

    #[test]
    fn action_on_lambda0_matches_closed_form() {
        assert_eq!(act(&WeylElement::IDENTITY, &Weight::LAMBDA0), Weight::LAMBDA0);
        let w2 = act(&coset_rep(Sign::Plus, 2), &Weight::LAMBDA0);
        assert_eq!((w2.c0, w2.c1), (int(3), int(-2)));
        let w3 = act(&coset_rep(Sign::Plus, 3), &Weight::LAMBDA0);
        assert_eq!((w3.c0, w3.c1), (int(-3), int(4)));
        for k in 1..=6i64 {
            let even = act(&coset_rep(Sign::Plus, 2 * k as u32), &Weight::LAMBDA0);
            assert_eq!(even.c0, int(2 * k + 1));
            assert_eq!(even.c1, int(-2 * k));
            let odd = act(&coset_rep(Sign::Plus, 2 * k as u32 - 1), &Weight::LAMBDA0);
            assert_eq!(odd.c0, int(-(2 * k - 1)));
            assert_eq!(odd.c1, int(2 * k));
        }
    }

    #[test]
    fn action_is_group_action() {
        let l = Weight::new(rat(1, 3), int(2), int(-1));
        for w in WeylElement::all_up_to(7) {
            for g in Node::ALL {
                assert_eq!(act(&w.left_multiply(g), &l), reflect(g, &act(&w, &l)));
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&(Weight::LAMBDA0 + Weight::LAMBDA1)));
        assert!(!is_dominant(&(Weight::LAMBDA0 - Weight::ALPHA0)));
        // c0 = 1 − 1 = 0, c1 = 0 + 1 = 1
        assert!(is_dominant(&(Weight::LAMBDA0 - Weight::ALPHA0 * rat(1, 2))));
    }

    #[test]
    fn display_forms() {
        let w = Weight::from_fundamental(Fundamental::L0, 9, 9);
        assert_eq!(w.to_string(), "Λ0 − 9α0 − 9α1");
        assert_eq!(Weight::LAMBDA1.to_string(), "Λ1");
        assert_eq!((Weight::LAMBDA0 - Weight::ALPHA0).to_string(), "Λ0 − α0");
        let two = Weight::LAMBDA0 * int(2) - Weight::DELTA * int(3);
        assert_eq!(two.to_string(), "2Λ0 − 3δ");
        assert_eq!(Weight::ZERO.to_string(), "0");
    }

    #[test]
    fn json_form() {
        let w = Weight::new(rat(1, 2), int(-3), rat(4, 6));
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"c0":"1/2","c1":"-3","d":"2/3"}"#);
        let back: Weight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<Weight>(r#"{"c0":"1/0","c1":"0","d":"0"}"#).is_err());
    }
}

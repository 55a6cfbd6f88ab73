//! Kostant-Kumar sub-crystals `K_p ⊂ B(λ) ⊗ B(Λ0)` and their decomposition
//! into highest weight crystals.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{distinct_parts, ChargedPartition};
use crate::tensor::{enumerate_pairs, TensorElement};
use crate::weight::{Fundamental, Weight};
use crate::weyl::{bruhat_leq, coset_rep, Node, Sign};

/// `K(λ, w_p^+, Λ0)`, with `p` the minimal representative of its double coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KkSpec {
    lambda: Fundamental,
    p: u32,
}

impl KkSpec {
    /// `p` must be 0 or odd for `Λ0`, and 0 or even for `Λ1`.
    pub fn new(lambda: Fundamental, p: u32) -> Result<Self> {
        let ok = match lambda {
            Fundamental::L0 => p == 0 || p % 2 == 1,
            Fundamental::L1 => p.is_multiple_of(2),
        };
        if !ok {
            let parity = match lambda {
                Fundamental::L0 => "odd",
                Fundamental::L1 => "even",
            };
            return Err(Error::InvalidKkSpec {
                lambda: lambda.to_string(),
                p,
                parity,
            });
        }
        Ok(KkSpec { lambda, p })
    }

    pub fn lambda(&self) -> Fundamental {
        self.lambda
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Every valid `p` up to `p_max`.
    pub fn all_up_to(lambda: Fundamental, p_max: u32) -> Vec<KkSpec> {
        (0..=p_max).filter_map(|p| KkSpec::new(lambda, p).ok()).collect()
    }

    fn check_charges(&self, t: &TensorElement) -> Result<()> {
        if t.lambda() != self.lambda {
            return Err(Error::ChargeMismatch {
                expected: self.lambda.node().index(),
                found: t.left().charge().index(),
            });
        }
        Ok(())
    }

    /// Membership by the bounding rectangle inequality.
    pub fn contains(&self, t: &TensorElement) -> Result<bool> {
        self.check_charges(t)?;
        let (_, n) = t.left().bounding_rect();
        let (m, _) = t.right().bounding_rect();
        Ok(match (self.lambda, self.p) {
            (Fundamental::L0, 0) => m <= n,
            _ => m as i64 - n as i64 <= self.p as i64 + 1,
        })
    }

    /// Membership by `𝔴(π1 ∗ π2) ≤ w_p^+` in the Bruhat order.
    pub fn contains_via_bruhat(&self, t: &TensorElement) -> Result<bool> {
        self.check_charges(t)?;
        Ok(bruhat_leq(&t.w_assoc(), &coset_rep(Sign::Plus, self.p)))
    }

    /// All members with at most `max_boxes` boxes, by total size.
    pub fn members(&self, max_boxes: u32) -> Vec<TensorElement> {
        enumerate_pairs(self.lambda, max_boxes)
            .into_iter()
            .filter(|t| self.contains(t).expect("charges match"))
            .collect()
    }
}

impl fmt::Display for KkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({}, w{}+, Λ0)", self.lambda, self.p)
    }
}

pub fn in_kk_crystal(spec: &KkSpec, t: &TensorElement) -> Result<bool> {
    spec.contains(t)
}

pub fn in_kk_crystal_via_bruhat(spec: &KkSpec, t: &TensorElement) -> Result<bool> {
    spec.contains_via_bruhat(t)
}

/// Distinct odd parts for `Λ0`, distinct even parts for `Λ1`.
pub fn is_dominant_partition(lambda: Fundamental, b: &ChargedPartition) -> bool {
    let parity = match lambda {
        Fundamental::L0 => 1,
        Fundamental::L1 => 0,
    };
    b.is_regular() && b.parts().iter().all(|p| p % 2 == parity)
}

/// Charge-0 partitions into distinct parts of `λ`'s parity, largest part
/// `≤ m`, size `≤ max_size`; ordered by size.
pub fn dominant_set(lambda: Fundamental, m: u32, max_size: u32) -> Vec<ChargedPartition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        let mut current = Vec::new();
        distinct_parts(size, m.min(size), &mut current, &mut |parts| {
            let b = ChargedPartition::new(parts.to_vec(), Node::Zero).expect("distinct parts");
            if is_dominant_partition(lambda, &b) {
                out.push(b);
            }
        });
    }
    out
}

/// `λ + wt(b)`.
pub fn weight_of_dominant(lambda: Fundamental, b: &ChargedPartition) -> Weight {
    lambda.weight() + b.weight()
}

/// Multiplicities `a_n` of `V(λ + Λ0 − nδ)` and `b_n` of
/// `V(2Λ0 − α0 − nδ)` for `n ≤ cutoff`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub lambda: Fundamental,
    pub cutoff: u32,
    pub a: Vec<BigUint>,
    /// Only for `λ = Λ0`; for `Λ1` every summand has the form `Λ0 + Λ1 − nδ`.
    pub b: Option<Vec<BigUint>>,
}

impl MultiplicityTable {
    fn zero(lambda: Fundamental, cutoff: u32) -> Self {
        let zeros = vec![BigUint::zero(); cutoff as usize + 1];
        MultiplicityTable {
            lambda,
            cutoff,
            a: zeros.clone(),
            b: (lambda == Fundamental::L0).then_some(zeros),
        }
    }

    /// Reads `a_n` from `x^{2n}` and `b_n` from `x^{2n+1}`.
    fn from_series(lambda: Fundamental, cutoff: u32, series: &[BigUint]) -> Self {
        let mut table = MultiplicityTable::zero(lambda, cutoff);
        let coeff = |d: usize| series.get(d).cloned().unwrap_or_default();
        for n in 0..=cutoff as usize {
            table.a[n] = coeff(2 * n);
            if let Some(b) = table.b.as_mut() {
                b[n] = coeff(2 * n + 1);
            }
        }
        table
    }

    /// Highest weight, label such as `2Λ0 − α0 − 3δ`, and multiplicity
    /// for every nonzero entry.
    pub fn summands(&self) -> Vec<(Weight, String, BigUint)> {
        let top = self.lambda.weight() + Weight::LAMBDA0;
        let top_name = match self.lambda {
            Fundamental::L0 => "2Λ0",
            Fundamental::L1 => "Λ0 + Λ1",
        };
        let delta = |n: usize| match n {
            0 => String::new(),
            1 => " − δ".to_string(),
            _ => format!(" − {n}δ"),
        };
        let mut out = Vec::new();
        for n in 0..=self.cutoff as usize {
            let shift = Weight::DELTA * crate::weight::int(n as i64);
            if !self.a[n].is_zero() {
                out.push((top - shift, format!("{top_name}{}", delta(n)), self.a[n].clone()));
            }
            if let Some(b) = &self.b {
                if !b[n].is_zero() {
                    let label = format!("{top_name} − α0{}", delta(n));
                    out.push((top - Weight::ALPHA0 - shift, label, b[n].clone()));
                }
            }
        }
        out
    }

    pub fn summand_lines(&self) -> String {
        let mut out = String::new();
        for (_, label, k) in self.summands() {
            let _ = writeln!(out, "V({label}) × {k}");
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        match &self.b {
            Some(b) => {
                out.push_str("n\ta_n\tb_n\n");
                for n in 0..=self.cutoff as usize {
                    let _ = writeln!(out, "{n}\t{}\t{}", self.a[n], b[n]);
                }
            }
            None => {
                out.push_str("n\ta_n\n");
                for n in 0..=self.cutoff as usize {
                    let _ = writeln!(out, "{n}\t{}", self.a[n]);
                }
            }
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let num = |x: &BigUint| match x.to_u64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::from(x.to_string()),
        };
        let mut obj = serde_json::Map::new();
        obj.insert("lambda".into(), serde_json::to_value(self.lambda).expect("serializes"));
        obj.insert("cutoff".into(), self.cutoff.into());
        obj.insert("a".into(), self.a.iter().map(num).collect());
        if let Some(b) = &self.b {
            obj.insert("b".into(), b.iter().map(num).collect());
        }
        serde_json::Value::Object(obj)
    }

    /// `self ≤ other` entrywise.
    pub fn le(&self, other: &MultiplicityTable) -> bool {
        let pairs = self.a.iter().zip(&other.a);
        let a_ok = pairs.clone().all(|(x, y)| x <= y);
        let b_ok = match (&self.b, &other.b) {
            (Some(x), Some(y)) => x.iter().zip(y).all(|(x, y)| x <= y),
            _ => true,
        };
        a_ok && b_ok
    }
}

/// Coefficients of `∏_{j ∈ parts} (1 + x^j)` up to `x^degree`.
pub fn product_series(parts: impl IntoIterator<Item = u32>, degree: usize) -> Vec<BigUint> {
    let mut series = vec![BigUint::zero(); degree + 1];
    series[0] = BigUint::from(1u32);
    for j in parts {
        let j = j as usize;
        if j == 0 || j > degree {
            continue;
        }
        for d in (j..=degree).rev() {
            let low = series[d - j].clone();
            series[d] += low;
        }
    }
    series
}

fn parts_of_parity(lambda: Fundamental, max: u32) -> impl Iterator<Item = u32> {
    let start = match lambda {
        Fundamental::L0 => 1,
        Fundamental::L1 => 2,
    };
    (start..=max).step_by(2)
}

/// Multiplicities from the truncated product `∏_{j ≤ p} (1 + x^j)` over
/// odd `j` (`Λ0`) or even `j` (`Λ1`).
pub fn decomposition(spec: &KkSpec, cutoff: u32) -> MultiplicityTable {
    let degree = 2 * cutoff as usize + 1;
    let series = product_series(parts_of_parity(spec.lambda, spec.p), degree);
    MultiplicityTable::from_series(spec.lambda, cutoff, &series)
}

/// Multiplicities from counting highest weight elements of `K_p` with at
/// most `2·cutoff + 1` boxes, bucketed by weight.
///
/// # Panics
///
/// If some highest weight element has a weight outside `λ + Λ0 − nδ` or
/// `λ + Λ0 − α0 − nδ`.
pub fn decomposition_via_crystal(spec: &KkSpec, cutoff: u32) -> MultiplicityTable {
    let mut table = MultiplicityTable::zero(spec.lambda, cutoff);
    let top = spec.lambda.weight() + Weight::LAMBDA0;
    for t in spec.members(2 * cutoff + 1) {
        if !t.is_highest_weight() {
            continue;
        }
        let (n0, n1) = t.weight().roots_below(&top).expect("weights lie in the root lattice");
        match n0 - n1 {
            0 if n0 <= cutoff as i64 => table.a[n0 as usize] += 1u32,
            1 if n1 <= cutoff as i64 => match table.b.as_mut() {
                Some(b) => b[n1 as usize] += 1u32,
                None => panic!("highest weight {} outside the expected family", t.weight()),
            },
            0 | 1 => {}
            _ => panic!("highest weight {} outside the expected family", t.weight()),
        }
    }
    table
}

/// The untruncated products `∏_{j odd}(1 + x^j)` or `∏_{j even}(1 + x^j)`.
pub fn full_tensor_decomposition(lambda: Fundamental, cutoff: u32) -> MultiplicityTable {
    let degree = 2 * cutoff as usize + 1;
    let series = product_series(parts_of_parity(lambda, degree as u32), degree);
    MultiplicityTable::from_series(lambda, cutoff, &series)
}

/// Every member of `K_{p_small}` with at most `max_boxes` boxes lies in
/// `K_{p_large}`.
pub fn kk_nesting_check(
    lambda: Fundamental,
    p_small: u32,
    p_large: u32,
    max_boxes: u32,
) -> Result<bool> {
    let small = KkSpec::new(lambda, p_small)?;
    let large = KkSpec::new(lambda, p_large)?;
    for t in small.members(max_boxes) {
        if !large.contains(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Counts by size of `dominant_set(λ, p, ·)`, as a series in `x`.
pub fn dominant_counts(lambda: Fundamental, m: u32, max_size: u32) -> BTreeMap<u32, u64> {
    let mut counts = BTreeMap::new();
    for b in dominant_set(lambda, m, max_size) {
        *counts.entry(b.size()).or_insert(0) += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::int;

    fn big(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn cp(parts: &[u32], c: Node) -> ChargedPartition {
        ChargedPartition::new(parts.to_vec(), c).unwrap()
    }

    fn pair(l: &[u32], r: &[u32]) -> TensorElement {
        TensorElement::new(cp(l, Node::Zero), cp(r, Node::Zero)).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(KkSpec::new(Fundamental::L0, 0).is_ok());
        assert!(KkSpec::new(Fundamental::L0, 3).is_ok());
        assert!(KkSpec::new(Fundamental::L0, 2).is_err());
        assert!(KkSpec::new(Fundamental::L1, 1).is_err());
        assert!(KkSpec::new(Fundamental::L1, 4).is_ok());
        let ps: Vec<u32> = KkSpec::all_up_to(Fundamental::L0, 7).iter().map(|s| s.p()).collect();
        assert_eq!(ps, vec![0, 1, 3, 5, 7]);
    }

    #[test]
    fn membership_examples() {
        let k0 = KkSpec::new(Fundamental::L0, 0).unwrap();
        assert!(k0.contains(&pair(&[], &[])).unwrap());
        assert!(!k0.contains(&pair(&[], &[1])).unwrap());
        let k3 = KkSpec::new(Fundamental::L0, 3).unwrap();
        assert!(k3.contains(&pair(&[1], &[5])).unwrap());
        assert!(!k3.contains(&pair(&[1], &[6])).unwrap());
        for t in [pair(&[], &[]), pair(&[], &[1]), pair(&[1], &[5]), pair(&[1], &[6])] {
            for s in [k0, k3] {
                assert_eq!(s.contains(&t), s.contains_via_bruhat(&t));
            }
        }
        let wrong = TensorElement::empty(Fundamental::L1);
        assert!(k0.contains(&wrong).is_err());
    }

    #[test]
    fn dominant_sets() {
        let parts = |v: Vec<ChargedPartition>| -> Vec<Vec<u32>> {
            let mut out: Vec<Vec<u32>> = v.iter().map(|b| b.parts().to_vec()).collect();
            out.sort();
            out
        };
        assert_eq!(
            parts(dominant_set(Fundamental::L0, 3, 10)),
            vec![vec![], vec![1], vec![3], vec![3, 1]]
        );
        assert_eq!(parts(dominant_set(Fundamental::L1, 1, 20)), vec![Vec::<u32>::new()]);
        let five = dominant_set(Fundamental::L0, 5, 9);
        assert_eq!(five.len(), 8);
        let mut sizes: Vec<u32> = five.iter().map(|b| b.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 1, 3, 4, 5, 6, 8, 9]);
    }

    #[test]
    fn dominant_weights() {
        let two_l0 = Weight::LAMBDA0 * int(2);
        assert_eq!(weight_of_dominant(Fundamental::L0, &cp(&[], Node::Zero)), two_l0);
        assert_eq!(
            weight_of_dominant(Fundamental::L0, &cp(&[3, 1], Node::Zero)),
            two_l0 - Weight::DELTA * int(2)
        );
        assert_eq!(
            weight_of_dominant(Fundamental::L0, &cp(&[3], Node::Zero)),
            two_l0 - Weight::ALPHA0 - Weight::DELTA
        );
        assert_eq!(
            weight_of_dominant(Fundamental::L1, &cp(&[2], Node::Zero)),
            Weight::LAMBDA0 + Weight::LAMBDA1 - Weight::DELTA
        );
    }

    #[test]
    fn generating_function_tables() {
        let t = decomposition(&KkSpec::new(Fundamental::L0, 0).unwrap(), 3);
        assert_eq!(t.a, big(&[1, 0, 0, 0]));
        assert_eq!(t.b, Some(big(&[0, 0, 0, 0])));
        let t = decomposition(&KkSpec::new(Fundamental::L0, 3).unwrap(), 4);
        assert_eq!(t.a, big(&[1, 0, 1, 0, 0]));
        assert_eq!(t.b, Some(big(&[1, 1, 0, 0, 0])));
        let t = decomposition(&KkSpec::new(Fundamental::L1, 2).unwrap(), 2);
        assert_eq!(t.a, big(&[1, 1, 0]));
        assert_eq!(t.b, None);
        let t = decomposition(&KkSpec::new(Fundamental::L1, 4).unwrap(), 5);
        assert_eq!(t.a, big(&[1, 1, 1, 1, 0, 0]));
    }

    #[test]
    fn crystal_route_small() {
        for (lambda, p, cutoff) in [
            (Fundamental::L0, 0, 3),
            (Fundamental::L0, 3, 3),
            (Fundamental::L1, 4, 5),
            (Fundamental::L1, 0, 3),
        ] {
            let spec = KkSpec::new(lambda, p).unwrap();
            assert_eq!(decomposition_via_crystal(&spec, cutoff), decomposition(&spec, cutoff));
        }
    }

    #[test]
    fn full_products() {
        let t = full_tensor_decomposition(Fundamental::L0, 3);
        assert_eq!(t.a, big(&[1, 0, 1, 1]));
        assert_eq!(t.b, Some(big(&[1, 1, 1, 1])));
        let t = full_tensor_decomposition(Fundamental::L1, 3);
        assert_eq!(t.a, big(&[1, 1, 1, 2]));
        assert_eq!(full_tensor_decomposition(Fundamental::L0, 0).a, big(&[1]));
    }

    #[test]
    fn nesting() {
        assert!(kk_nesting_check(Fundamental::L0, 0, 1, 12).unwrap());
        assert!(kk_nesting_check(Fundamental::L0, 3, 5, 12).unwrap());
        assert!(kk_nesting_check(Fundamental::L1, 2, 4, 12).unwrap());
        assert!(!kk_nesting_check(Fundamental::L0, 3, 1, 8).unwrap());
        assert!(kk_nesting_check(Fundamental::L1, 1, 4, 8).is_err());
    }

    #[test]
    fn table_output() {
        let t = decomposition(&KkSpec::new(Fundamental::L0, 3).unwrap(), 4);
        assert_eq!(t.to_tsv(), "n\ta_n\tb_n\n0\t1\t1\n1\t0\t1\n2\t1\t0\n3\t0\t0\n4\t0\t0\n");
        let j = t.to_json_value();
        assert_eq!(j["a"], serde_json::json!([1, 0, 1, 0, 0]));
        assert_eq!(j["lambda"], "L0");
        assert_eq!(
            t.summand_lines(),
            "V(2Λ0) × 1\nV(2Λ0 − α0) × 1\nV(2Λ0 − α0 − δ) × 1\nV(2Λ0 − 2δ) × 1\n"
        );
        let one = decomposition(&KkSpec::new(Fundamental::L1, 2).unwrap(), 1);
        assert_eq!(one.to_tsv(), "n\ta_n\n0\t1\n1\t1\n");
        assert!(j.get("b").is_some());
        assert!(one.to_json_value().get("b").is_none());
    }

    #[test]
    fn series_expansion() {
        assert_eq!(product_series([1, 3], 5), big(&[1, 1, 0, 1, 1, 0]));
        assert_eq!(product_series(Vec::<u32>::new(), 2), big(&[1, 0, 0]));
    }
}

//! Exhaustive consistency suites over bounded domains.
//!
//! Every suite walks its domain in increasing size, so the first recorded
//! failure is a smallest counterexample.

use std::fmt;

use serde::Serialize;

use crate::concat::{concat_path_op, Op};
use crate::iso::{psi_inverse, to_path};
use crate::kk::{
    decomposition, decomposition_via_crystal, full_tensor_decomposition, is_dominant_partition,
    KkSpec,
};
use crate::oracle::{reduce_by_deletion, signature_by_boxes, subword_bruhat};
use crate::partition::enumerate_regular;
use crate::tensor::{enumerate_pairs, TensorElement};
use crate::weight::{Fundamental, Weight};
use crate::weyl::{bruhat_leq, kk_index, kk_index_via_demazure, CosetRep, Node, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Iso,
    Signatures,
    Bruhat,
    Kk,
    Tensor,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Iso,
        Suite::Signatures,
        Suite::Bruhat,
        Suite::Kk,
        Suite::Tensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Iso => "iso",
            Suite::Signatures => "signatures",
            Suite::Bruhat => "bruhat",
            Suite::Kk => "kk",
            Suite::Tensor => "tensor",
        }
    }
}

/// Domain sizes for the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Boxes per partition (iso, signatures) or per pair (kk, tensor).
    pub max_boxes: u32,
    pub p_max: u32,
    pub len_max: u32,
    pub cutoff: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_boxes: 12,
            p_max: 7,
            len_max: 8,
            cutoff: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report {
            suite: suite.name(),
            checks: 0,
            failures: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one check; `describe` is only evaluated for the first failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks, {} failed)", self.suite, self.checks, self.failures)?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, limits: &Limits) -> Report {
    match suite {
        Suite::Iso => iso(limits.max_boxes),
        Suite::Signatures => signatures(limits.max_boxes),
        Suite::Bruhat => bruhat(limits.len_max),
        Suite::Kk => kk(limits.p_max, limits.max_boxes, limits.cutoff),
        Suite::Tensor => tensor(limits.max_boxes),
    }
}

/// `Ψ`, `Ψ′` against the partition crystal, plus LS path invariants.
pub fn iso(max_boxes: u32) -> Report {
    let mut r = Report::new(Suite::Iso);
    for charge in Node::ALL {
        let shape = Fundamental::from_node(charge);
        for b in enumerate_regular(charge, max_boxes) {
            let p = to_path(&b).expect("regular");
            r.check(psi_inverse(&p) == b, || format!("psi_inverse(psi({b})) ≠ {b}"));
            r.check(p.endpoint() == b.weight(), || format!("weight of Ψ({b})"));
            let (m, n) = b.bounding_rect();
            r.check(
                p.initial_direction() == CosetRep::for_shape(shape, m)
                    && p.final_direction() == CosetRep::for_shape(shape, n),
                || format!("directions of Ψ({b})"),
            );
            for i in Node::ALL {
                let h = p.h_function(i);
                r.check(
                    h.local_minima().iter().all(|v| v.is_integer()),
                    || format!("non-integral minimum of h_{i} on Ψ({b})"),
                );
                r.check(
                    p.epsilon(i) == b.epsilon(i).expect("regular")
                        && p.phi(i) == b.phi(i).expect("regular"),
                    || format!("ε_{i}/φ_{i} of Ψ({b})"),
                );
                let f_part = b.f(i).expect("regular").map(|x| to_path(&x).expect("regular"));
                let f_path = p.f(i);
                r.check(f_part == f_path, || format!("Ψ(f_{i} {b}) ≠ f_{i} Ψ({b})"));
                let e_part = b.e(i).expect("regular").map(|x| to_path(&x).expect("regular"));
                let e_path = p.e(i);
                r.check(e_part == e_path, || format!("Ψ(e_{i} {b}) ≠ e_{i} Ψ({b})"));
                if let Some(q) = &f_path {
                    r.check(q.e(i).as_ref() == Some(&p), || format!("e_{i} f_{i} Ψ({b})"));
                    r.check(q.endpoint() == p.endpoint() - Weight::alpha(i), || {
                        format!("weight of f_{i} Ψ({b})")
                    });
                }
                if let Some(q) = &e_path {
                    r.check(q.f(i).as_ref() == Some(&p), || format!("f_{i} e_{i} Ψ({b})"));
                }
            }
            for lambda in Fundamental::ALL {
                let by_eps = Node::ALL.iter().all(|&i| {
                    b.epsilon(i).expect("regular") as i64 <= lambda.pairing(i)
                });
                r.check(p.is_lambda_dominant(lambda) == by_eps, || {
                    format!("{lambda}-dominance of Ψ({b})")
                });
            }
        }
    }
    r
}

/// Closed-form signatures, reduction and root operator bookkeeping.
pub fn signatures(max_boxes: u32) -> Report {
    let mut r = Report::new(Suite::Signatures);
    for charge in Node::ALL {
        for b in enumerate_regular(charge, max_boxes) {
            for i in Node::ALL {
                let sig = b.signature(i).expect("regular");
                let by_boxes = signature_by_boxes(&b, i);
                r.check(
                    sig.signs() == by_boxes.iter().map(|x| x.0).collect::<Vec<_>>()
                        && sig.columns() == by_boxes.iter().map(|x| x.1).collect::<Vec<_>>(),
                    || format!("{i}-signature of {b} against the box scan"),
                );
                r.check(
                    b.closed_form_signature(i).expect("regular") == sig.signs(),
                    || format!("closed-form {i}-signature of {b}"),
                );
                let reduced = sig.reduce();
                r.check(reduce_by_deletion(&sig.signs()) == reduced.signs(), || {
                    format!("reduced {i}-signature of {b}")
                });
                if let Some(c) = b.f(i).expect("regular") {
                    r.check(
                        c.is_regular()
                            && c.weight() == b.weight() - Weight::alpha(i)
                            && c.e(i).expect("regular").as_ref() == Some(&b),
                        || format!("f_{i} {b}"),
                    );
                }
                if let Some(c) = b.e(i).expect("regular") {
                    r.check(
                        c.is_regular() && c.f(i).expect("regular").as_ref() == Some(&b),
                        || format!("e_{i} {b}"),
                    );
                }
                let phi = b.phi(i).expect("regular") as i64;
                let eps = b.epsilon(i).expect("regular") as i64;
                r.check(
                    crate::weight::int(phi - eps) == b.weight().pair_coroot(i),
                    || format!("φ_{i} − ε_{i} ≠ ⟨wt, α_{i}∨⟩ at {b}"),
                );
            }
        }
    }
    r
}

/// Bruhat order against subwords, and the double coset index closed form.
pub fn bruhat(len_max: u32) -> Report {
    let mut r = Report::new(Suite::Bruhat);
    let all = WeylElement::all_up_to(len_max);
    for u in &all {
        for w in &all {
            r.check(bruhat_leq(u, w) == subword_bruhat(u, w), || format!("{u} ≤ {w}"));
        }
        r.check(u.inverse().inverse() == *u, || format!("inverse of {u}"));
    }
    for lambda in Fundamental::ALL {
        for n in 0..=len_max + 4 {
            for m in 0..=len_max + 4 {
                r.check(
                    kk_index(lambda, n, m) == kk_index_via_demazure(lambda, n, m),
                    || format!("double coset index for {lambda}, n = {n}, m = {m}"),
                );
            }
        }
    }
    r
}

/// Kostant-Kumar crystals: invariance, two membership routes,
/// decomposition against the crystal, stabilization and monotonicity.
pub fn kk(p_max: u32, max_boxes: u32, cutoff: u32) -> Report {
    let mut r = Report::new(Suite::Kk);
    for lambda in Fundamental::ALL {
        let specs = KkSpec::all_up_to(lambda, p_max);
        let pairs = enumerate_pairs(lambda, max_boxes);
        for spec in &specs {
            for t in &pairs {
                let inside = spec.contains(t).expect("charges match");
                r.check(Ok(inside) == spec.contains_via_bruhat(t), || {
                    format!("membership routes differ on {t} in {spec}")
                });
                if !inside {
                    continue;
                }
                for i in Node::ALL {
                    for x in [t.f(i), t.e(i)].into_iter().flatten() {
                        r.check(spec.contains(&x).expect("charges match"), || {
                            format!("{spec} not stable at {t}, i = {i}")
                        });
                    }
                }
            }
        }
        // the crystal route needs pairs up to 2·cutoff + 1 boxes
        let small_cutoff = cutoff.min(max_boxes.saturating_sub(1) / 2);
        let mut previous = None;
        for spec in &specs {
            let table = decomposition(spec, small_cutoff);
            r.check(table == decomposition_via_crystal(spec, small_cutoff), || {
                format!("decomposition of {spec} up to n = {small_cutoff}")
            });
            if let Some(prev) = &previous {
                r.check(crate::kk::MultiplicityTable::le(prev, &table), || {
                    format!("tables not monotone at {spec}")
                });
            }
            previous = Some(table);
        }
        let big = KkSpec::new(lambda, stable_p(lambda, cutoff)).expect("valid p");
        r.check(decomposition(&big, cutoff) == full_tensor_decomposition(lambda, cutoff), || {
            format!("stabilization for {lambda} up to n = {cutoff}")
        });
    }
    r
}

/// Smallest valid `p` whose product contains every admissible factor of
/// degree `≤ 2·cutoff + 1`.
pub fn stable_p(lambda: Fundamental, cutoff: u32) -> u32 {
    match lambda {
        Fundamental::L0 => 2 * cutoff + 1,
        Fundamental::L1 => 2 * cutoff,
    }
}

/// Tensor rule against path concatenation, highest weights, and `𝔴`.
pub fn tensor(max_boxes: u32) -> Report {
    let mut r = Report::new(Suite::Tensor);
    for lambda in Fundamental::ALL {
        for t in enumerate_pairs(lambda, max_boxes) {
            tensor_checks(&mut r, &t);
        }
    }
    r
}

/// Rule-versus-concatenation agreement for a single pair.
pub fn concatenation_agrees(t: &TensorElement, i: Node, op: Op) -> bool {
    let left = to_path(t.left()).expect("regular");
    let right = to_path(t.right()).expect("regular");
    let by_paths = concat_path_op(i, &left, &right, op).map(|(a, b)| {
        TensorElement::new(psi_inverse(&a), psi_inverse(&b)).expect("charges kept")
    });
    let by_rule = match op {
        Op::F => t.f(i),
        Op::E => t.e(i),
    };
    by_paths == by_rule
}

fn tensor_checks(r: &mut Report, t: &TensorElement) {
    for i in Node::ALL {
        for op in [Op::F, Op::E] {
            r.check(concatenation_agrees(t, i, op), || {
                format!("{op:?}_{i} on {t} disagrees with concatenation")
            });
        }
        if let Some(x) = t.f(i) {
            r.check(x.weight() == t.weight() - Weight::alpha(i), || format!("weight of f_{i} {t}"));
        }
        if let Some(x) = t.e(i) {
            r.check(bruhat_leq(&x.w_assoc(), &t.w_assoc()), || {
                format!("𝔴 increases under e_{i} at {t}")
            });
        }
    }
    let expected_hw = t.left().is_empty() && is_dominant_partition(t.lambda(), t.right());
    r.check(t.is_highest_weight() == expected_hw, || format!("highest weight test at {t}"));
    r.check(t.w_assoc() == t.w_assoc_via_demazure(), || format!("𝔴 routes differ at {t}"));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_scale() {
        let limits = Limits {
            max_boxes: 6,
            p_max: 5,
            len_max: 5,
            cutoff: 3,
        };
        for suite in Suite::ALL {
            let report = run(suite, &limits);
            assert!(report.passed(), "{report}");
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn report_keeps_first_counterexample() {
        let mut r = Report::new(Suite::Iso);
        r.check(true, || unreachable!());
        r.check(false, || "first".into());
        r.check(false, || "second".into());
        assert_eq!(r.failures, 2);
        assert_eq!(r.counterexample.as_deref(), Some("first"));
        assert!(r.to_string().starts_with("FAIL iso (3 checks, 2 failed)"));
    }

    #[test]
    fn stable_indices() {
        assert_eq!(stable_p(Fundamental::L0, 8), 17);
        assert_eq!(stable_p(Fundamental::L1, 8), 16);
    }
}

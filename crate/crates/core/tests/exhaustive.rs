use affine_crystals::iso::{psi_inverse, to_path};
use affine_crystals::kk::{decomposition, decomposition_via_crystal, is_dominant_partition, KkSpec};
use affine_crystals::oracle::{demazure_min_brute, distinct_parity_counts};
use affine_crystals::partition::{enumerate_regular, ChargedPartition};
use affine_crystals::path::LsPath;
use affine_crystals::tensor::{crystal_graph, TensorElement};
use affine_crystals::verify;
use affine_crystals::weight::Fundamental;
use affine_crystals::weyl::{demazure_min, Node, WeylElement};

/// Regular partitions by brute force: every subset of `1..=n` with sum `≤ n`.
fn subsets_up_to(n: u32, charge: Node) -> Vec<ChargedPartition> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let parts: Vec<u32> = (1..=n).rev().filter(|k| mask & (1 << (k - 1)) != 0).collect();
        if parts.iter().sum::<u32>() <= n {
            out.push(ChargedPartition::new(parts, charge).unwrap());
        }
    }
    out
}

#[test]
fn suites_at_full_scale() {
    let reports = [
        verify::iso(18),
        verify::signatures(18),
        verify::bruhat(8),
        verify::kk(7, 14, 6),
        verify::tensor(12),
    ];
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn enumeration_matches_subsets() {
    for charge in Node::ALL {
        let mut ours = enumerate_regular(charge, 12);
        let mut brute = subsets_up_to(12, charge);
        ours.sort_by(|a, b| a.parts().cmp(b.parts()));
        brute.sort_by(|a, b| a.parts().cmp(b.parts()));
        assert_eq!(ours, brute);
    }
    assert_eq!(enumerate_regular(Node::Zero, 10).len(), 43);
}

#[test]
fn every_canonical_path_with_m_at_most_18() {
    let mut count = 0;
    for shape in Fundamental::ALL {
        for n in 0..=18u32 {
            // steps: weakly decreasing sequences of length m - n in 1..=n
            let mut stack: Vec<Vec<u32>> = vec![vec![]];
            while let Some(steps) = stack.pop() {
                let p = LsPath::new(shape, n, steps.clone()).unwrap();
                assert_eq!(to_path(&psi_inverse(&p)).unwrap(), p);
                count += 1;
                if n + (steps.len() as u32) < 18 {
                    let top = steps.last().copied().unwrap_or(n);
                    for next in 1..=top {
                        let mut s = steps.clone();
                        s.push(next);
                        stack.push(s);
                    }
                }
            }
        }
    }
    // paths with m ≤ 18 biject with regular partitions whose largest part is ≤ 18
    let brute = 2 * (1usize << 18);
    assert_eq!(count, brute);
}

#[test]
fn demazure_min_matches_interval_search() {
    for x in WeylElement::all_up_to(6) {
        for y in WeylElement::all_up_to(8) {
            assert_eq!(demazure_min(x, y), demazure_min_brute(x, y), "{x} {y}");
        }
    }
}

#[test]
fn highest_weight_classification_up_to_16_boxes() {
    for lambda in Fundamental::ALL {
        let lefts = enumerate_regular(lambda.node(), 3);
        for right in enumerate_regular(Node::Zero, 16) {
            for left in &lefts {
                let t = TensorElement::new(left.clone(), right.clone()).unwrap();
                let expected = left.is_empty() && is_dominant_partition(lambda, &right);
                assert_eq!(t.is_highest_weight(), expected, "{t}");
            }
        }
    }
}

#[test]
fn decompositions_agree_for_p_up_to_9() {
    for lambda in Fundamental::ALL {
        for spec in KkSpec::all_up_to(lambda, 9) {
            for cutoff in 0..=8 {
                assert_eq!(
                    decomposition(&spec, cutoff),
                    decomposition_via_crystal(&spec, cutoff),
                    "{spec} cutoff {cutoff}"
                );
            }
        }
    }
}

#[test]
fn distinct_part_counts_by_subsets() {
    assert_eq!(distinct_parity_counts(Fundamental::L0, 10), vec![1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2]);
    let brute: Vec<u64> = (0..=10u32)
        .map(|s| {
            subsets_up_to(10, Node::Zero)
                .iter()
                .filter(|b| b.size() == s && b.parts().iter().all(|p| p % 2 == 0))
                .count() as u64
        })
        .collect();
    assert_eq!(distinct_parity_counts(Fundamental::L1, 10), brute);
}

/// Members of `K_p` with at most `max_boxes` boxes, listed by brute force
/// with the rectangle rule written out directly.
fn kk_vertices_brute(lambda: Fundamental, p: u32, max_boxes: u32) -> Vec<TensorElement> {
    let mut out = Vec::new();
    for left in subsets_up_to(max_boxes, lambda.node()) {
        for right in subsets_up_to(max_boxes, Node::Zero) {
            if left.size() + right.size() > max_boxes {
                continue;
            }
            let n = left.parts().len() as i64;
            let m = right.parts().first().copied().unwrap_or(0) as i64;
            let inside = if lambda == Fundamental::L0 && p == 0 {
                m <= n
            } else {
                m - n <= p as i64 + 1
            };
            if inside {
                out.push(TensorElement::new(left.clone(), right).unwrap());
            }
        }
    }
    out
}

#[test]
fn frozen_graph_sizes() {
    for (lambda, p, max_boxes, vertices, edges) in [
        (Fundamental::L0, 0, 0, 1, 0),
        (Fundamental::L0, 3, 4, 21, 17),
        (Fundamental::L1, 2, 4, 20, 18),
    ] {
        let brute = kk_vertices_brute(lambda, p, max_boxes);
        let brute_edges = brute
            .iter()
            .flat_map(|t| Node::ALL.map(|i| t.f(i)))
            .flatten()
            .filter(|x| x.size() <= max_boxes)
            .count();
        assert_eq!((brute.len(), brute_edges), (vertices, edges));
        let spec = KkSpec::new(lambda, p).unwrap();
        let g = crystal_graph(&spec.members(max_boxes), max_boxes);
        assert_eq!((g.vertex_count(), g.edge_count()), (vertices, edges));
    }
    let seed = crystal_graph(&[TensorElement::empty(Fundamental::L0)], 1);
    assert_eq!((seed.vertex_count(), seed.edge_count()), (2, 1));
}

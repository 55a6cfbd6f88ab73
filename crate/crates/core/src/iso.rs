//! The bijections between regular charged partitions and level-1 LS paths.

use crate::error::{Error, Result};
use crate::partition::ChargedPartition;
use crate::path::LsPath;
use crate::weight::Fundamental;
use crate::weyl::Node;

/// Conjugate of a partition given by weakly decreasing non-negative parts.
pub fn conjugate(parts: &[u32]) -> Vec<u32> {
    let longest = parts.first().copied().unwrap_or(0);
    (1..=longest)
        .map(|c| parts.iter().take_while(|&&p| p >= c).count() as u32)
        .collect()
}

fn build(cp: &ChargedPartition, charge: Node) -> Result<LsPath> {
    cp.require_regular()?;
    if cp.charge() != charge {
        return Err(Error::ChargeMismatch {
            expected: charge.index(),
            found: cp.charge().index(),
        });
    }
    let n = cp.parts().len() as u32;
    // strip the staircase (n, n-1, ..., 1); regularity keeps the rest a partition
    let reduced: Vec<u32> = cp
        .parts()
        .iter()
        .enumerate()
        .map(|(k, &mu)| mu - (n - k as u32))
        .collect();
    LsPath::new(Fundamental::from_node(charge), n, conjugate(&reduced))
}

/// `Ψ`: charge 0 partitions to LS paths of shape Λ0.
pub fn psi(cp: &ChargedPartition) -> Result<LsPath> {
    build(cp, Node::Zero)
}

/// `Ψ′`: charge 1 partitions to LS paths of shape Λ1.
pub fn psi_prime(cp: &ChargedPartition) -> Result<LsPath> {
    build(cp, Node::One)
}

/// `Ψ` or `Ψ′` according to the charge.
pub fn to_path(cp: &ChargedPartition) -> Result<LsPath> {
    build(cp, cp.charge())
}

pub fn psi_inverse(path: &LsPath) -> ChargedPartition {
    let n = path.n() as usize;
    let mut reduced = conjugate(path.steps());
    reduced.resize(n, 0);
    let parts = reduced
        .iter()
        .enumerate()
        .map(|(k, &b)| b + (n - k) as u32)
        .collect();
    ChargedPartition::new(parts, path.shape().node()).expect("strictly decreasing parts")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cp(parts: &[u32], c: Node) -> ChargedPartition {
        ChargedPartition::new(parts.to_vec(), c).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&[4, 3, 1, 0]), vec![3, 2, 2, 1]);
        assert_eq!(conjugate(&[]), Vec::<u32>::new());
        assert_eq!(conjugate(&[0, 0]), Vec::<u32>::new());
        assert_eq!(conjugate(&[3, 2, 2, 1]), vec![4, 3, 1]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi(&ChargedPartition::empty(Node::Zero)).unwrap(),
            LsPath::straight(Fundamental::L0, 0)
        );
        let running = psi(&cp(&[8, 6, 3, 1], Node::Zero)).unwrap();
        assert_eq!(running, LsPath::new(Fundamental::L0, 4, vec![3, 2, 2, 1]).unwrap());
        assert_eq!(running.verbose().times, vec!["1/8", "2/7", "1/3", "3/5"]);
        assert_eq!(
            psi(&cp(&[1], Node::Zero)).unwrap(),
            LsPath::straight(Fundamental::L0, 1)
        );
    }

    #[test]
    fn psi_prime_examples() {
        assert_eq!(
            psi_prime(&ChargedPartition::empty(Node::One)).unwrap(),
            LsPath::straight(Fundamental::L1, 0)
        );
        assert_eq!(
            psi_prime(&cp(&[1], Node::One)).unwrap(),
            LsPath::straight(Fundamental::L1, 1)
        );
        assert_eq!(
            psi_prime(&cp(&[2], Node::One)).unwrap(),
            LsPath::new(Fundamental::L1, 1, vec![1]).unwrap()
        );
    }

    #[test]
    fn psi_errors() {
        assert!(psi(&cp(&[2, 2], Node::Zero)).is_err());
        assert!(matches!(
            psi(&cp(&[1], Node::One)),
            Err(Error::ChargeMismatch { expected: 0, found: 1 })
        ));
        assert!(psi_prime(&cp(&[1], Node::Zero)).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            psi_inverse(&LsPath::straight(Fundamental::L0, 0)),
            ChargedPartition::empty(Node::Zero)
        );
        assert_eq!(
            psi_inverse(&LsPath::new(Fundamental::L0, 4, vec![3, 2, 2, 1]).unwrap()),
            cp(&[8, 6, 3, 1], Node::Zero)
        );
        assert_eq!(
            psi_inverse(&LsPath::new(Fundamental::L1, 1, vec![1]).unwrap()),
            cp(&[2], Node::One)
        );
    }

    #[test]
    fn weight_and_directions_of_running_example() {
        let b = cp(&[8, 6, 3, 1], Node::Zero);
        let p = psi(&b).unwrap();
        let points = p.turning_points();
        assert_eq!(points.len(), 6);
        assert_eq!(*points.last().unwrap(), b.weight());
        assert_eq!(p.initial_direction().index, 8);
        assert_eq!(p.final_direction().index, 4);
    }

    #[test]
    fn path_operators_on_running_example() {
        let p = psi(&cp(&[8, 6, 3, 1], Node::Zero)).unwrap();
        assert_eq!(p.f(Node::Zero), Some(psi(&cp(&[8, 6, 3, 2], Node::Zero)).unwrap()));
        assert_eq!(p.f(Node::One), Some(psi(&cp(&[8, 7, 3, 1], Node::Zero)).unwrap()));
        assert_eq!(p.e(Node::Zero), Some(psi(&cp(&[8, 6, 2, 1], Node::Zero)).unwrap()));
        assert_eq!(p.e(Node::One), Some(psi(&cp(&[7, 6, 3, 1], Node::Zero)).unwrap()));
    }
}

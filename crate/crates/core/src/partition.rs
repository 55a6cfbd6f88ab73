//! 2-regular charged partitions and their crystal structure.
//!
//! The box in row `r`, column `c` of a charged partition with charge `j`
//! carries the label `j − r + c (mod 2)`. Signatures are read by scanning
//! columns left to right, up to and including the first empty column.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{Fundamental, Weight};
use crate::weyl::{Node, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawChargedPartition", into = "RawChargedPartition")]
pub struct ChargedPartition {
    parts: Vec<u32>,
    charge: Node,
}

#[derive(Serialize, Deserialize)]
struct RawChargedPartition {
    parts: Vec<u32>,
    charge: u8,
}

impl TryFrom<RawChargedPartition> for ChargedPartition {
    type Error = Error;
    fn try_from(raw: RawChargedPartition) -> Result<Self> {
        let charge = Node::from_index(raw.charge).ok_or(Error::InvalidCharge(raw.charge))?;
        ChargedPartition::new(raw.parts, charge)
    }
}

impl From<ChargedPartition> for RawChargedPartition {
    fn from(cp: ChargedPartition) -> Self {
        RawChargedPartition {
            charge: cp.charge.index(),
            parts: cp.parts,
        }
    }
}

impl ChargedPartition {
    /// Parts must be positive and weakly decreasing. Regularity is not
    /// required here; crystal operations check it.
    pub fn new(parts: Vec<u32>, charge: Node) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(ChargedPartition { parts, charge })
    }

    pub fn empty(charge: Node) -> Self {
        ChargedPartition {
            parts: Vec::new(),
            charge,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn charge(&self) -> Node {
        self.charge
    }

    /// The fundamental weight `Λ_charge`, the highest weight of the crystal
    /// this partition belongs to.
    pub fn fundamental(&self) -> Fundamental {
        Fundamental::from_node(self.charge)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// No part occurs twice.
    pub fn is_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn require_regular(&self) -> Result<()> {
        match self.parts.windows(2).find(|w| w[0] == w[1]) {
            None => Ok(()),
            Some(w) => Err(Error::NotRegular {
                parts: self.parts.clone(),
                repeated: w[0],
            }),
        }
    }

    /// Height of column `c` (1-based); zero past the first row.
    pub fn column_height(&self, c: u32) -> u32 {
        self.parts.iter().take_while(|&&p| p >= c).count() as u32
    }

    /// `(m, n) = (μ1, l)`.
    pub fn bounding_rect(&self) -> (u32, u32) {
        (self.parts.first().copied().unwrap_or(0), self.parts.len() as u32)
    }

    fn label(&self, row: u32, col: u32) -> Node {
        Node::from_parity(self.charge.index() as i64 - row as i64 + col as i64)
    }

    pub fn box_label(&self, row: u32, col: u32) -> Result<Node> {
        let inside = row >= 1
            && col >= 1
            && self.parts.get(row as usize - 1).is_some_and(|&len| col <= len);
        if !inside {
            return Err(Error::BoxOutOfDiagram { row, col });
        }
        Ok(self.label(row, col))
    }

    /// Numbers of boxes labelled 0 and 1.
    pub fn label_counts(&self) -> (i64, i64) {
        let mut counts = [0i64; 2];
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                counts[self.label(r as u32 + 1, c).index() as usize] += 1;
            }
        }
        (counts[0], counts[1])
    }

    /// `Λ_charge − n0·α0 − n1·α1`.
    pub fn weight(&self) -> Weight {
        let (n0, n1) = self.label_counts();
        Weight::from_fundamental(self.fundamental(), n0, n1)
    }

    /// The `i`-signature with the column each sign came from.
    pub fn signature(&self, i: Node) -> Result<Signature> {
        self.require_regular()?;
        let (m, _) = self.bounding_rect();
        let mut entries = Vec::new();
        let mut left_height = u32::MAX;
        for c in 1..=m + 1 {
            let h = self.column_height(c);
            let right_height = self.column_height(c + 1);
            let addable = left_height > h && self.label(h + 1, c) == i;
            let removable = h > 0 && right_height < h && self.label(h, c) == i;
            if addable {
                entries.push((Sign::Plus, c));
            } else if removable {
                entries.push((Sign::Minus, c));
            }
            left_height = h;
        }
        Ok(Signature { entries })
    }

    pub fn reduced_signature(&self, i: Node) -> Result<Signature> {
        Ok(self.signature(i)?.reduce())
    }

    pub fn epsilon(&self, i: Node) -> Result<u32> {
        Ok(self.reduced_signature(i)?.count(Sign::Minus))
    }

    pub fn phi(&self, i: Node) -> Result<u32> {
        Ok(self.reduced_signature(i)?.count(Sign::Plus))
    }

    /// Adds a box below the column of the rightmost `+` of the reduced
    /// `i`-signature; `None` when there is no `+`.
    pub fn f(&self, i: Node) -> Result<Option<ChargedPartition>> {
        let reduced = self.reduced_signature(i)?;
        Ok(reduced.rightmost(Sign::Plus).map(|c| self.with_box_added(c)))
    }

    /// Removes the bottom box of the column of the leftmost `−` of the
    /// reduced `i`-signature; `None` when there is no `−`.
    pub fn e(&self, i: Node) -> Result<Option<ChargedPartition>> {
        let reduced = self.reduced_signature(i)?;
        Ok(reduced.leftmost(Sign::Minus).map(|c| self.with_box_removed(c)))
    }

    fn with_box_added(&self, col: u32) -> ChargedPartition {
        let h = self.column_height(col) as usize;
        let mut parts = self.parts.clone();
        if h == parts.len() {
            parts.push(1);
        } else {
            parts[h] += 1;
        }
        debug_assert_eq!(parts[h], col);
        ChargedPartition {
            parts,
            charge: self.charge,
        }
    }

    fn with_box_removed(&self, col: u32) -> ChargedPartition {
        let h = self.column_height(col) as usize;
        let mut parts = self.parts.clone();
        debug_assert_eq!(parts[h - 1], col);
        parts[h - 1] -= 1;
        if parts[h - 1] == 0 {
            parts.pop();
        }
        ChargedPartition {
            parts,
            charge: self.charge,
        }
    }

    /// The tuple `(i_{n+1}, ..., i_m)`: the conjugate of
    /// `(μ1 − n, μ2 − (n−1), ..., μl − 1)` where `n = l`.
    pub fn shifted_conjugate(&self) -> Vec<u32> {
        let (m, n) = self.bounding_rect();
        let shifted: Vec<u32> = self
            .parts
            .iter()
            .enumerate()
            .map(|(k, &mu)| mu - (n - k as u32))
            .collect();
        (1..=m - n)
            .map(|j| shifted.iter().filter(|&&b| b >= j).count() as u32)
            .collect()
    }

    /// The `i`-signature predicted from the bounding rectangle and the
    /// shifted conjugate alone: alternating blocks of lengths
    /// `top − i_{n+1}, i_{n+1} − i_{n+2}, ..., i_{m−1} − i_m, i_m`.
    pub fn closed_form_signature(&self, i: Node) -> Result<Vec<Sign>> {
        self.require_regular()?;
        // charge 1 diagrams are charge 0 diagrams with labels swapped
        let i = if self.charge == Node::Zero { i } else { i.other() };
        let (_, n) = self.bounding_rect();
        let starts_plus = (n + i.index() as u32).is_multiple_of(2);
        let top = if starts_plus { n + 1 } else { n };
        let mut bounds = vec![top];
        bounds.extend(self.shifted_conjugate());
        bounds.push(0);

        let mut out = Vec::new();
        let mut sign = if starts_plus { Sign::Plus } else { Sign::Minus };
        for w in bounds.windows(2) {
            out.extend(std::iter::repeat_n(sign, (w[0] - w[1]) as usize));
            sign = flip(sign);
        }
        Ok(out)
    }
}

fn flip(s: Sign) -> Sign {
    match s {
        Sign::Plus => Sign::Minus,
        Sign::Minus => Sign::Plus,
    }
}

impl fmt::Display for ChargedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "(∅ | c={})", self.charge);
        }
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({} | c={})", parts.join(","), self.charge)
    }
}

/// Parses the CLI form: comma-separated parts, optionally followed by
/// `:charge` (default charge 0). An empty string is the empty partition.
impl FromStr for ChargedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "charged partition",
            input: s.to_string(),
        };
        let (parts_str, charge) = match s.trim().split_once(':') {
            Some((p, c)) => {
                let c: u8 = c.trim().parse().map_err(|_| bad())?;
                (p, Node::from_index(c).ok_or(Error::InvalidCharge(c))?)
            }
            None => (s.trim(), Node::Zero),
        };
        let parts = parts_str
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        ChargedPartition::new(parts, charge)
    }
}

/// A signature: signs in column order, each tagged with its column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Signature {
    pub entries: Vec<(Sign, u32)>,
}

impl Signature {
    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(|&(s, _)| s).collect()
    }

    pub fn columns(&self) -> Vec<u32> {
        self.entries.iter().map(|&(_, c)| c).collect()
    }

    pub fn count(&self, sign: Sign) -> u32 {
        self.entries.iter().filter(|&&(s, _)| s == sign).count() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn rightmost(&self, sign: Sign) -> Option<u32> {
        self.entries.iter().rev().find(|e| e.0 == sign).map(|e| e.1)
    }

    fn leftmost(&self, sign: Sign) -> Option<u32> {
        self.entries.iter().find(|e| e.0 == sign).map(|e| e.1)
    }

    /// Deletes reducible substrings by cancelling adjacent `− +` pairs on a
    /// stack. What survives is `+^a −^b` with its original columns.
    pub fn reduce(&self) -> Signature {
        let mut stack: Vec<(Sign, u32)> = Vec::with_capacity(self.entries.len());
        for &entry in &self.entries {
            match (stack.last(), entry.0) {
                (Some(&(Sign::Minus, _)), Sign::Plus) => {
                    stack.pop();
                }
                _ => stack.push(entry),
            }
        }
        Signature { entries: stack }
    }
}

pub fn signs_to_string(signs: &[Sign]) -> String {
    let s: Vec<&str> = signs
        .iter()
        .map(|s| match s {
            Sign::Plus => "+",
            Sign::Minus => "−",
        })
        .collect();
    s.join(" ")
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&signs_to_string(&self.signs()))
    }
}

/// Distinct-part partitions of every size up to `max_boxes`, by size and
/// then by descending parts (so `(3)` precedes `(2,1)`).
pub fn enumerate_regular(charge: Node, max_boxes: u32) -> Vec<ChargedPartition> {
    let mut out = Vec::new();
    for size in 0..=max_boxes {
        let mut current = Vec::new();
        distinct_parts(size, size, &mut current, &mut |parts| {
            out.push(ChargedPartition {
                parts: parts.to_vec(),
                charge,
            })
        });
    }
    out
}

/// Calls `emit` on each partition of `n` into distinct parts `≤ max_part`,
/// largest first part first.
pub(crate) fn distinct_parts(
    n: u32,
    max_part: u32,
    current: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if n == 0 {
        emit(current);
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        // the remaining parts are distinct and below `part`
        if part * (part + 1) / 2 < n {
            break;
        }
        current.push(part);
        distinct_parts(n - part, part - 1, current, emit);
        current.pop();
    }
}

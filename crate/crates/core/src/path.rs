//! Lakshmibai-Seshadri paths of shapes Λ0 and Λ1.
//!
//! A level-1 LS path is a contiguous chain of directions `w_m > ... > w_n`
//! with turning times `0 < i_m/m < ... < i_{n+1}/(n+1) < 1`. It is stored
//! canonically as the shape, `n`, and `steps = (i_{n+1}, ..., i_m)`, which
//! must satisfy `1 ≤ i_m ≤ ... ≤ i_{n+1} ≤ n`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{int, Fundamental, Rational, Weight};
use crate::weyl::{CosetRep, Node};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLsPath", into = "RawLsPath")]
pub struct LsPath {
    shape: Fundamental,
    n: u32,
    steps: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawLsPath {
    shape: Fundamental,
    n: u32,
    steps: Vec<u32>,
}

impl TryFrom<RawLsPath> for LsPath {
    type Error = Error;
    fn try_from(raw: RawLsPath) -> Result<Self> {
        LsPath::new(raw.shape, raw.n, raw.steps)
    }
}

impl From<LsPath> for RawLsPath {
    fn from(p: LsPath) -> Self {
        RawLsPath {
            shape: p.shape,
            n: p.n,
            steps: p.steps,
        }
    }
}

/// One linear piece of a path: travel in direction `dir·λ` until time `end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub dir: CosetRep,
    pub end: Rational,
}

impl LsPath {
    pub fn new(shape: Fundamental, n: u32, steps: Vec<u32>) -> Result<Self> {
        if let Some(&first) = steps.first() {
            if first > n {
                return Err(Error::InvalidPath(format!(
                    "i_(n+1) = {first} exceeds n = {n}"
                )));
            }
        }
        if steps.contains(&0) {
            return Err(Error::InvalidPath("steps must be positive".into()));
        }
        if steps.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPath(format!(
                "steps {steps:?} must be weakly decreasing"
            )));
        }
        Ok(LsPath { shape, n, steps })
    }

    /// The straight line from 0 to `w_n λ`.
    pub fn straight(shape: Fundamental, n: u32) -> Self {
        LsPath {
            shape,
            n,
            steps: Vec::new(),
        }
    }

    pub fn shape(&self) -> Fundamental {
        self.shape
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.n + self.steps.len() as u32
    }

    /// `(i_{n+1}, ..., i_m)`.
    pub fn steps(&self) -> &[u32] {
        &self.steps
    }

    pub fn initial_direction(&self) -> CosetRep {
        CosetRep::for_shape(self.shape, self.m())
    }

    pub fn final_direction(&self) -> CosetRep {
        CosetRep::for_shape(self.shape, self.n)
    }

    /// `σ_1 = w_m, ..., σ_r = w_n` with their end times `a_1, ..., a_r = 1`.
    pub fn segments(&self) -> Vec<Segment> {
        let m = self.m();
        (self.n..=m)
            .rev()
            .map(|j| {
                let end = if j == self.n {
                    Rational::one()
                } else {
                    let i_j = self.steps[(j - self.n - 1) as usize];
                    Rational::new(i_j as i64, j as i64)
                };
                Segment {
                    dir: CosetRep::for_shape(self.shape, j),
                    end,
                }
            })
            .collect()
    }

    /// Rebuilds the canonical form from raw `(direction, end time)` data,
    /// merging repeated directions. Fails unless the data describe an LS
    /// path of the given shape.
    pub fn from_segments(shape: Fundamental, segs: &[Segment]) -> Result<Self> {
        let mut merged: Vec<Segment> = Vec::with_capacity(segs.len());
        let mut start = Rational::zero();
        for &seg in segs {
            if seg.end <= start {
                return Err(Error::InvalidPath(format!(
                    "turning times not increasing at {}",
                    seg.end
                )));
            }
            start = seg.end;
            match merged.last_mut() {
                Some(last) if last.dir == seg.dir => last.end = seg.end,
                _ => merged.push(seg),
            }
        }
        let last = merged
            .last()
            .ok_or_else(|| Error::InvalidPath("no segments".into()))?;
        if !last.end.is_one() {
            return Err(Error::InvalidPath(format!("path ends at time {}", last.end)));
        }
        let family = CosetRep::for_shape(shape, 0).sign;
        if merged.iter().any(|s| s.dir.sign != family) {
            return Err(Error::InvalidPath(format!(
                "direction outside W/W_{shape}"
            )));
        }
        let n = last.dir.index;
        let m = merged[0].dir.index;
        if m < n || (m - n + 1) as usize != merged.len() {
            return Err(Error::InvalidPath("directions skip a coset".into()));
        }
        let mut steps = Vec::with_capacity(merged.len() - 1);
        for (k, seg) in merged.iter().enumerate().rev().skip(1) {
            let j = m - k as u32;
            if seg.dir.index != j {
                return Err(Error::InvalidPath("directions not contiguous".into()));
            }
            let scaled = seg.end * int(j as i64);
            if !scaled.is_integer() {
                return Err(Error::InvalidPath(format!(
                    "time {} fails integrality at w_{j}",
                    seg.end
                )));
            }
            steps.push(scaled.to_integer() as u32);
        }
        LsPath::new(shape, n, steps)
    }

    fn direction_weight(&self, dir: CosetRep) -> Weight {
        self.shape.weight().act(&dir.element())
    }

    /// Turning points `π(a_0), ..., π(a_r)`, starting at zero.
    pub fn turning_points(&self) -> Vec<Weight> {
        let mut out = vec![Weight::ZERO];
        let mut pos = Weight::ZERO;
        let mut start = Rational::zero();
        for seg in self.segments() {
            pos += self.direction_weight(seg.dir) * (seg.end - start);
            start = seg.end;
            out.push(pos);
        }
        out
    }

    pub fn endpoint(&self) -> Weight {
        *self.turning_points().last().expect("at least one point")
    }

    pub fn evaluate(&self, t: Rational) -> Result<Weight> {
        if t < Rational::zero() || t > Rational::one() {
            return Err(Error::TimeOutOfRange(t.to_string()));
        }
        let mut pos = Weight::ZERO;
        let mut start = Rational::zero();
        for seg in self.segments() {
            let dir = self.direction_weight(seg.dir);
            if t <= seg.end {
                return Ok(pos + dir * (t - start));
            }
            pos += dir * (seg.end - start);
            start = seg.end;
        }
        Ok(pos)
    }

    /// `h(t) = ⟨π(t), α_i∨⟩` as exact breakpoints.
    pub fn h_function(&self, i: Node) -> PiecewiseLinearH {
        let mut times = vec![Rational::zero()];
        times.extend(self.segments().iter().map(|s| s.end));
        let breakpoints = times
            .into_iter()
            .zip(self.turning_points())
            .map(|(t, w)| (t, w.pair_coroot(i)))
            .collect();
        PiecewiseLinearH { breakpoints }
    }

    /// Every turning point `γ` keeps `λ + γ` dominant.
    pub fn is_lambda_dominant(&self, lambda: Fundamental) -> bool {
        self.turning_points()
            .iter()
            .all(|g| (lambda.weight() + *g).is_dominant())
    }

    /// Littelmann lowering operator, by the four-case rule on the chain.
    pub fn f(&self, i: Node) -> Option<LsPath> {
        let segs = self.segments();
        let r = segs.len();
        let h = self.h_function(i);
        let times = h.times();
        let values = h.values();
        let slopes: Vec<Rational> = (1..=r).map(|k| h.slope(k)).collect();
        let q = h.min_value();
        let p = values.iter().rposition(|v| *v == q).expect("minimum attained");
        if values[r] - q < Rational::one() {
            return None;
        }
        let target = q + Rational::one();
        // first index from which h stays at or above Q + 1
        let x = 1 + values
            .iter()
            .rposition(|v| *v < target)
            .expect("h(a_p) = Q < Q + 1");
        let dir = |k: usize| segs[k - 1].dir;
        let reflect = |k: usize| segs[k - 1].dir.reflect(i);

        let mut out: Vec<Segment> = segs[..p.saturating_sub(1)].to_vec();
        // cases (1), (3): s σ_{p+1} = σ_p and a_p disappears
        let merges = p >= 1 && reflect(p + 1) == dir(p);
        if p >= 1 && !merges {
            out.push(segs[p - 1]);
        }
        if values[x] == target {
            // cases (1), (2)
            for k in p + 1..=x {
                out.push(Segment {
                    dir: reflect(k),
                    end: times[k],
                });
            }
        } else {
            // cases (3), (4): split segment x where h first reaches Q + 1
            for k in p + 1..x {
                out.push(Segment {
                    dir: reflect(k),
                    end: times[k],
                });
            }
            let a = times[x - 1] + (target - values[x - 1]) / slopes[x - 1];
            out.push(Segment { dir: reflect(x), end: a });
            out.push(segs[x - 1]);
        }
        out.extend_from_slice(&segs[x..]);
        Some(
            LsPath::from_segments(self.shape, &out)
                .expect("f_i preserves the LS path canonical form"),
        )
    }

    /// Littelmann raising operator: the mirror image of [`LsPath::f`],
    /// reflecting the stretch just before the first minimum of `h`.
    pub fn e(&self, i: Node) -> Option<LsPath> {
        let segs = self.segments();
        let r = segs.len();
        let h = self.h_function(i);
        let times = h.times();
        let values = h.values();
        let q = h.min_value();
        if q > -Rational::one() {
            return None;
        }
        let target = q + Rational::one();
        let first_min = values.iter().position(|v| *v == q).expect("minimum attained");
        // last index up to which h stays at or above Q + 1
        let y = values
            .iter()
            .position(|v| *v < target)
            .expect("h(a_q) = Q < Q + 1")
            - 1;
        let dir = |k: usize| segs[k - 1].dir;
        let reflect = |k: usize| segs[k - 1].dir.reflect(i);

        let mut out: Vec<Segment> = segs[..y].to_vec();
        if values[y] == target {
            for k in y + 1..=first_min {
                out.push(Segment {
                    dir: reflect(k),
                    end: times[k],
                });
            }
        } else {
            // split segment y + 1 where h last equals Q + 1
            let a = times[y] + (target - values[y]) / h.slope(y + 1);
            out.push(Segment { dir: dir(y + 1), end: a });
            for k in y + 1..=first_min {
                out.push(Segment {
                    dir: reflect(k),
                    end: times[k],
                });
            }
        }
        // s σ_q = σ_{q+1}: drop a_q
        if first_min < r && reflect(first_min) == dir(first_min + 1) {
            out.pop();
        }
        out.extend_from_slice(&segs[first_min..]);
        Some(
            LsPath::from_segments(self.shape, &out)
                .expect("e_i preserves the LS path canonical form"),
        )
    }

    /// `ε_i = −min h`.
    pub fn epsilon(&self, i: Node) -> u32 {
        (-self.h_function(i).min_value()).to_integer() as u32
    }

    /// `φ_i = h(1) − min h`.
    pub fn phi(&self, i: Node) -> u32 {
        let h = self.h_function(i);
        (h.end_value() - h.min_value()).to_integer() as u32
    }

    /// Directions and turning times spelled out.
    pub fn verbose(&self) -> VerboseLsPath {
        let segs = self.segments();
        VerboseLsPath {
            shape: self.shape,
            directions: segs.iter().map(|s| s.dir).collect(),
            times: segs[..segs.len() - 1]
                .iter()
                .map(|s| s.end.to_string())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerboseLsPath {
    pub shape: Fundamental,
    pub directions: Vec<CosetRep>,
    pub times: Vec<String>,
}

impl fmt::Display for LsPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let segs = self.segments();
        let dirs: Vec<String> = segs.iter().map(|s| s.dir.to_string()).collect();
        let mut times = vec!["0".to_string()];
        times.extend(segs.iter().map(|s| s.end.to_string()));
        write!(f, "({}; {})", dirs.join(" > "), times.join(" < "))
    }
}

/// A continuous piecewise-linear function on `[0, 1]` given by its breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinearH {
    pub breakpoints: Vec<(Rational, Rational)>,
}

impl PiecewiseLinearH {
    pub fn times(&self) -> Vec<Rational> {
        self.breakpoints.iter().map(|b| b.0).collect()
    }

    pub fn values(&self) -> Vec<Rational> {
        self.breakpoints.iter().map(|b| b.1).collect()
    }

    /// Slope on the `k`-th piece (1-based).
    pub fn slope(&self, k: usize) -> Rational {
        let (t0, v0) = self.breakpoints[k - 1];
        let (t1, v1) = self.breakpoints[k];
        (v1 - v0) / (t1 - t0)
    }

    pub fn min_value(&self) -> Rational {
        self.breakpoints
            .iter()
            .map(|b| b.1)
            .min()
            .expect("non-empty")
    }

    pub fn end_value(&self) -> Rational {
        self.breakpoints.last().expect("non-empty").1
    }

    pub fn value_at(&self, t: Rational) -> Option<Rational> {
        self.breakpoints.windows(2).find_map(|w| {
            let ((t0, v0), (t1, v1)) = (w[0], w[1]);
            (t0 <= t && t <= t1).then(|| v0 + (v1 - v0) * (t - t0) / (t1 - t0))
        })
    }

    /// Values at interior local minima (and at the end points, when they
    /// are minima of their neighbourhood).
    pub fn local_minima(&self) -> Vec<Rational> {
        let v = self.values();
        (0..v.len())
            .filter(|&k| {
                let left_ok = k == 0 || v[k - 1] >= v[k];
                let right_ok = k + 1 == v.len() || v[k + 1] >= v[k];
                left_ok && right_ok
            })
            .map(|k| v[k])
            .collect()
    }
}

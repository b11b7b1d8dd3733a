//! Configurations, the move rule, and the plan verifier.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distance::Metric;

/// Cup counts per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    counts: Vec<u64>,
    size: u64,
}

impl Configuration {
    pub fn ones(n: usize) -> Self {
        Configuration { counts: vec![1; n], size: n as u64 }
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        let size = counts.iter().sum();
        Configuration { counts, size }
    }

    /// Every cup of `size` stacked on `target`.
    pub fn concentrated(n: usize, target: usize, size: u64) -> Self {
        let mut counts = vec![0; n];
        counts[target] = size;
        Configuration { counts, size }
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> u64 {
        self.counts[v]
    }

    pub fn is_concentrated_on(&self, target: usize) -> bool {
        self.counts[target] == self.size
    }

    /// Checks the move rule against `metric`.
    pub fn check<M: Metric + ?Sized>(&self, metric: &M, mv: Move) -> Result<(), IllegalMove> {
        let n = self.counts.len();
        if mv.from >= n || mv.to >= n {
            return Err(IllegalMove::OutOfRange { vertex: mv.from.max(mv.to), n });
        }
        if mv.from == mv.to {
            return Err(IllegalMove::SameVertex(mv.from));
        }
        let cups = self.counts[mv.from];
        if cups == 0 {
            return Err(IllegalMove::EmptySource(mv.from));
        }
        if self.counts[mv.to] == 0 {
            return Err(IllegalMove::EmptyDestination(mv.to));
        }
        let dist = metric.dist(mv.from, mv.to);
        if dist as u64 != cups {
            return Err(IllegalMove::DistanceMismatch { cups, dist });
        }
        Ok(())
    }

    /// Plays a move in place after checking it.
    pub fn play<M: Metric + ?Sized>(&mut self, metric: &M, mv: Move) -> Result<(), IllegalMove> {
        self.check(metric, mv)?;
        self.counts[mv.to] += self.counts[mv.from];
        self.counts[mv.from] = 0;
        Ok(())
    }
}

/// `true` iff the move rule admits `mv` in `c`.
pub fn legal_move<M: Metric + ?Sized>(metric: &M, c: &Configuration, mv: Move) -> bool {
    c.check(metric, mv).is_ok()
}

/// Returns the configuration after `mv`, or the rule it breaks.
pub fn apply_move<M: Metric + ?Sized>(
    metric: &M,
    c: &Configuration,
    mv: Move,
) -> Result<Configuration, IllegalMove> {
    let mut next = c.clone();
    next.play(metric, mv)?;
    Ok(next)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl Move {
    pub fn new(from: usize, to: usize) -> Self {
        Move { from, to }
    }
}

impl From<[usize; 2]> for Move {
    fn from([from, to]: [usize; 2]) -> Self {
        Move { from, to }
    }
}

impl From<Move> for [usize; 2] {
    fn from(m: Move) -> Self {
        [m.from, m.to]
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.from, self.to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IllegalMove {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("source and destination are both {0}")]
    SameVertex(usize),
    #[error("source {0} holds no cups")]
    EmptySource(usize),
    #[error("destination {0} holds no cups")]
    EmptyDestination(usize),
    #[error("{cups} cups cannot travel distance {dist}")]
    DistanceMismatch { cups: u64, dist: usize },
}

/// A target and the moves that stack onto it. `initial` defaults to all-ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub n: usize,
    pub target: usize,
    pub moves: Vec<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<u64>>,
}

impl Plan {
    pub fn new(n: usize, target: usize, moves: Vec<Move>) -> Self {
        Plan { n, target, moves, initial: None }
    }

    pub fn initial_configuration(&self) -> Configuration {
        match &self.initial {
            Some(counts) => Configuration::from_counts(counts.clone()),
            None => Configuration::ones(self.n),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Rejection),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// `step` is 1-based; it is `None` when the failure is not tied to a move.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", match .step { Some(s) => format!("step {s}: {}", .reason), None => .reason.to_string() })]
pub struct Rejection {
    pub step: Option<usize>,
    pub reason: RejectReason,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RejectReason {
    #[error("plan is for {plan} vertices but the board has {board}")]
    SizeMismatch { plan: usize, board: usize },
    #[error("target {0} out of range")]
    TargetOutOfRange(usize),
    #[error("initial configuration has {0} entries")]
    InitialLength(usize),
    #[error("illegal move: {0}")]
    Illegal(IllegalMove),
    #[error("final configuration not concentrated on target ({on_target} of {total} cups)")]
    NotConcentrated { on_target: u64, total: u64 },
}

fn reject(step: Option<usize>, reason: RejectReason) -> Verdict {
    Verdict::Reject(Rejection { step, reason })
}

/// Replays `plan` on `metric` and checks that every cup ends on the target.
pub fn verify_plan<M: Metric + ?Sized>(metric: &M, plan: &Plan) -> Verdict {
    let n = metric.n();
    if plan.n != n {
        return reject(None, RejectReason::SizeMismatch { plan: plan.n, board: n });
    }
    if plan.target >= n {
        return reject(None, RejectReason::TargetOutOfRange(plan.target));
    }
    if let Some(init) = &plan.initial {
        if init.len() != n {
            return reject(None, RejectReason::InitialLength(init.len()));
        }
    }
    let mut c = plan.initial_configuration();
    for (i, &mv) in plan.moves.iter().enumerate() {
        if let Err(e) = c.play(metric, mv) {
            return reject(Some(i + 1), RejectReason::Illegal(e));
        }
    }
    if c.is_concentrated_on(plan.target) {
        Verdict::Accept
    } else {
        reject(None, RejectReason::NotConcentrated { on_target: c.get(plan.target), total: c.size() })
    }
}

/// Verifier for a plan fragment on a large board: only the listed vertices
/// start with cups, and everything must end on `target`.
pub fn verify_fragment<M: Metric + ?Sized>(
    metric: &M,
    occupied: impl IntoIterator<Item = (usize, u64)>,
    target: usize,
    moves: &[Move],
) -> Verdict {
    let mut cups: HashMap<usize, u64> = HashMap::new();
    for (v, c) in occupied {
        if c > 0 {
            *cups.entry(v).or_default() += c;
        }
    }
    let total: u64 = cups.values().sum();
    let n = metric.n();
    for (i, &mv) in moves.iter().enumerate() {
        let step = Some(i + 1);
        if mv.from >= n || mv.to >= n {
            let e = IllegalMove::OutOfRange { vertex: mv.from.max(mv.to), n };
            return reject(step, RejectReason::Illegal(e));
        }
        let from = cups.get(&mv.from).copied().unwrap_or(0);
        let to = cups.get(&mv.to).copied().unwrap_or(0);
        let err = if mv.from == mv.to {
            Some(IllegalMove::SameVertex(mv.from))
        } else if from == 0 {
            Some(IllegalMove::EmptySource(mv.from))
        } else if to == 0 {
            Some(IllegalMove::EmptyDestination(mv.to))
        } else if metric.dist(mv.from, mv.to) as u64 != from {
            Some(IllegalMove::DistanceMismatch { cups: from, dist: metric.dist(mv.from, mv.to) })
        } else {
            None
        };
        if let Some(e) = err {
            return reject(step, RejectReason::Illegal(e));
        }
        cups.remove(&mv.from);
        *cups.get_mut(&mv.to).unwrap() += from;
    }
    let on_target = cups.get(&target).copied().unwrap_or(0);
    if on_target == total {
        Verdict::Accept
    } else {
        reject(None, RejectReason::NotConcentrated { on_target, total })
    }
}

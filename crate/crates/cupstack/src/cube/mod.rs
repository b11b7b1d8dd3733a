//! Stacking the hypercube `Q^d` onto the all-zeros vertex, `d <= 20`.
//!
//! Vertices are bitmasks. Writing `Q^d` as `Q^(d-k) x Q^k`, the copy of
//! `Q^k` labelled `S` (a subset of the first `d - k` coordinates) holds the
//! vertices `S | T` with `T` ranging over the last `k` coordinates, and its
//! level is `|S|`. Each subcube, or small group of subcubes, is stacked by
//! a fragment that only touches its own vertices and `0`. Since `0` always
//! holds a cup, fragments can run one after another.

pub mod gadgets;
pub mod gray;
pub mod scd;

use std::ops::Range;
use std::sync::OnceLock;

use serde::Serialize;

use crate::distance::Hypercube;
use crate::error::{precondition, Error};
use crate::game::{verify_fragment, Move, Plan, Verdict};
use gadgets::{abc_template, GadgetTemplate, LEVEL3_4CUBE, PAIR, TRIPLE};

pub use gray::revolving_door;
pub use scd::{phi, scd, ChainDecomposition};

/// Largest dimension the assembly covers.
pub const MAX_DIM: u32 = 20;

/// An axis-aligned subcube: `base` fixes every coordinate outside
/// `free_dims`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcubeHandle {
    pub d: u32,
    pub base: usize,
    pub free_dims: Vec<u32>,
}

impl SubcubeHandle {
    pub fn new(d: u32, base: usize, free_dims: Vec<u32>) -> Result<Self, Error> {
        let mut mask = 0usize;
        for &f in &free_dims {
            if f >= d || mask >> f & 1 == 1 {
                return Err(precondition(format!("bad free coordinate {f}")));
            }
            mask |= 1 << f;
        }
        if base >> d != 0 || base & mask != 0 {
            return Err(precondition("base sets a free or out-of-range coordinate"));
        }
        Ok(SubcubeHandle { d, base, free_dims })
    }

    /// The copy labelled `label` in `Q^(d-k) x Q^k`.
    pub fn in_split(d: u32, k: u32, label: usize) -> Self {
        debug_assert!(label >> (d - k) == 0);
        SubcubeHandle { d, base: label, free_dims: (d - k..d).collect() }
    }

    pub fn k(&self) -> u32 {
        self.free_dims.len() as u32
    }

    pub fn level(&self) -> u32 {
        self.base.count_ones()
    }

    pub fn vertex(&self, local: usize) -> usize {
        self.base | gadgets::spread(local, &self.free_dims)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..1usize << self.k()).map(|t| self.vertex(t))
    }

    pub fn top(&self) -> usize {
        self.vertex((1 << self.k()) - 1)
    }

    /// The two halves along the first free coordinate.
    pub fn split(&self) -> (SubcubeHandle, SubcubeHandle) {
        let (&first, rest) = self.free_dims.split_first().expect("cannot split a point");
        let lo = SubcubeHandle { d: self.d, base: self.base, free_dims: rest.to_vec() };
        let hi = SubcubeHandle { d: self.d, base: self.base | 1 << first, free_dims: rest.to_vec() };
        (lo, hi)
    }
}

fn full_cube_moves(k: u32) -> &'static [Move] {
    static CACHE: [OnceLock<Vec<Move>>; 16] = [const { OnceLock::new() }; 16];
    CACHE[k as usize].get_or_init(|| plan_cube(k).expect("k <= 15").plan.moves)
}

/// Stacks the whole subcube onto its local vertex `onto`.
fn stack_subcube(h: &SubcubeHandle, onto: usize, out: &mut Vec<Move>) {
    out.extend(full_cube_moves(h.k()).iter().map(|m| Move::new(h.vertex(m.from ^ onto), h.vertex(m.to ^ onto))));
}

/// Stacks onto a vertex of weight `2^k` and jumps that far to `0`.
fn stack_and_jump(h: &SubcubeHandle, out: &mut Vec<Move>) {
    let full = 1u32 << h.k();
    let onto = (1usize << (full - h.level())) - 1;
    stack_subcube(h, onto, out);
    out.push(Move::new(h.vertex(onto), 0));
}

fn low(h: &SubcubeHandle, out: &mut Vec<Move>) {
    let (k, level) = (h.k(), h.level());
    if k == 0 {
        if level == 1 {
            out.push(Move::new(h.base, 0));
        }
        return;
    }
    let full = 1u32 << k;
    if level + k >= full {
        stack_and_jump(h, out);
    } else {
        let (lo, hi) = h.split();
        low(&lo, out);
        low(&hi, out);
    }
}

/// A `k`-cube with `k <= 3`: stack onto a vertex of weight `2^k` when it
/// has one, otherwise split in half. Level 4 with `k = 3` has no such plan.
pub fn plan_low_subcube(h: &SubcubeHandle) -> Result<Vec<Move>, Error> {
    let (k, level) = (h.k(), h.level());
    if k > 3 {
        return Err(precondition(format!("low subcubes have k <= 3, got {k}")));
    }
    if level > 1 << k {
        return Err(precondition(format!("level {level} exceeds 2^{k}")));
    }
    if (k, level) == (3, 4) {
        return Err(precondition("a level-4 3-cube cannot be stacked on its own"));
    }
    let mut out = Vec::with_capacity(1 << k);
    low(h, &mut out);
    Ok(out)
}

/// A `k`-cube at level `>= 2^k - k`: stack onto a weight-`2^k` vertex with
/// the full-cube plan, then jump to `0`.
pub fn plan_high_kcube(h: &SubcubeHandle) -> Result<Vec<Move>, Error> {
    let (k, level) = (h.k(), h.level());
    if k > 15 {
        return Err(precondition(format!("k = {k} exceeds 15")));
    }
    let full = 1u32 << k;
    if level + k < full || level > full {
        return Err(precondition(format!("no weight-{full} vertex in a level-{level} {k}-cube")));
    }
    let mut out = Vec::with_capacity(1 << k);
    stack_and_jump(h, &mut out);
    Ok(out)
}

pub fn plan_level3_4cube(h: &SubcubeHandle) -> Result<Vec<Move>, Error> {
    if h.k() != 4 || h.level() != 3 {
        return Err(precondition(format!("need a level-3 4-cube, got level {} with k = {}", h.level(), h.k())));
    }
    Ok(LEVEL3_4CUBE.compile(&[h.base], &h.free_dims))
}

/// Groups of the level-4 labels: consecutive pairs along a Hamilton cycle of
/// `J(n, 4, 3)`, with one triple at the end when the count is odd.
pub fn level4_pieces(n: u32) -> Result<Vec<Vec<usize>>, Error> {
    let cycle = revolving_door(n, 4)?;
    let len = cycle.len();
    let pairs = if len % 2 == 1 { (len - 3) / 2 } else { len / 2 };
    let mut pieces: Vec<Vec<usize>> = (0..pairs).map(|i| vec![cycle[2 * i] as usize, cycle[2 * i + 1] as usize]).collect();
    if len % 2 == 1 {
        pieces.push(cycle[len - 3..].iter().map(|&s| s as usize).collect());
    }
    Ok(pieces)
}

fn piece_labels(piece: &[usize]) -> (&'static GadgetTemplate, Vec<usize>) {
    match *piece {
        [u, v] => (&PAIR, vec![u, v, u | v]),
        [u, v, w] => (&TRIPLE, vec![u, v, w, u | v, v | w]),
        _ => unreachable!("pieces have two or three labels"),
    }
}

/// Every level-4 3-cube of `Q^d`. The level-5 3-cubes must already be
/// stacked, since their top vertices act as empty connectors.
pub fn plan_level4_3cubes(d: u32) -> Result<Vec<Move>, Error> {
    if !(8..=MAX_DIM).contains(&d) {
        return Err(precondition(format!("level-4 pieces need 8 <= d <= {MAX_DIM}, got {d}")));
    }
    let n = d - 3;
    let free: Vec<u32> = (n..d).collect();
    let mut out = Vec::new();
    for piece in level4_pieces(n)? {
        let (t, labels) = piece_labels(&piece);
        out.extend(t.compile(&labels, &free));
    }
    Ok(out)
}

/// The chain `A`, `B = phi(A)`, `C = phi(B)` of 3-cube labels, when the
/// chain gadget applies: `9 <= |A| <= 12` and `|A| + 3 <= d <= 2|A|`.
pub fn abc_chain(d: u32, a: usize) -> Result<[usize; 3], Error> {
    let level = a.count_ones();
    if abc_template(level as usize).is_none() {
        return Err(precondition(format!("no chain gadget for level {level}")));
    }
    if level + 3 > d || d > 2 * level || a >> (d - 3) != 0 {
        return Err(precondition(format!("level {level} is outside the window for d = {d}")));
    }
    let n = d - 3;
    let b = phi(n, a as u64)?;
    let c = phi(n, b)?;
    Ok([a, b as usize, c as usize])
}

pub fn plan_abc_triple(d: u32, a: usize) -> Result<Vec<Move>, Error> {
    let labels = abc_chain(d, a)?;
    let t = abc_template(a.count_ones() as usize).unwrap();
    Ok(t.compile(&labels, &(d - 3..d).collect::<Vec<_>>()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    /// Splitting into halves, or stacking onto a weight-`2^k` vertex.
    Low,
    Level3FourCubes,
    HighFourCubes,
    ChainTriples,
    HighThreeCubes,
    Level4Pieces,
    LowThreeCubes,
}

/// One fragment of an assembled plan: the subcubes it empties, each with
/// `dim` free coordinates at the top of the bit range, and its moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub phase: Phase,
    pub labels: Vec<usize>,
    pub dim: u32,
    pub moves: Range<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseSummary {
    pub phase: Phase,
    pub fragments: usize,
    pub moves: usize,
}

#[derive(Clone, Debug)]
pub struct CubePlan {
    pub d: u32,
    pub plan: Plan,
    pub fragments: Vec<Fragment>,
    /// 3-cube labels no rule applies to; their cups are never moved.
    pub unassigned: Vec<usize>,
}

impl CubePlan {
    pub fn complete(&self) -> bool {
        self.unassigned.is_empty()
    }

    pub fn phases(&self) -> Vec<PhaseSummary> {
        let mut out: Vec<PhaseSummary> = Vec::new();
        for f in &self.fragments {
            match out.last_mut() {
                Some(s) if s.phase == f.phase => {
                    s.fragments += 1;
                    s.moves += f.moves.len();
                }
                _ => out.push(PhaseSummary { phase: f.phase, fragments: 1, moves: f.moves.len() }),
            }
        }
        out
    }

    pub fn verify(&self) -> Verdict {
        crate::game::verify_plan(&Hypercube::new(self.d), &self.plan)
    }

    /// Replays one fragment alone: its subcubes full, `0` holding a cup.
    pub fn verify_fragment(&self, f: &Fragment) -> Verdict {
        let free: Vec<u32> = (self.d - f.dim..self.d).collect();
        let mut cups: Vec<(usize, u64)> = f
            .labels
            .iter()
            .flat_map(|&l| (0..1usize << f.dim).map(|t| l | gadgets::spread(t, &free)).collect::<Vec<_>>())
            .map(|v| (v, 1))
            .collect();
        if !cups.iter().any(|&(v, _)| v == 0) {
            cups.push((0, 1));
        }
        verify_fragment(&Hypercube::new(self.d), cups, 0, &self.plan.moves[f.moves.clone()])
    }
}

struct Assembly {
    d: u32,
    moves: Vec<Move>,
    fragments: Vec<Fragment>,
}

impl Assembly {
    fn push(&mut self, phase: Phase, labels: Vec<usize>, dim: u32, moves: Vec<Move>) {
        let start = self.moves.len();
        self.moves.extend(moves);
        self.fragments.push(Fragment { phase, labels, dim, moves: start..self.moves.len() });
    }

    fn low(&mut self, phase: Phase, label: usize, k: u32) -> Result<(), Error> {
        let h = SubcubeHandle::in_split(self.d, k, label);
        let moves = plan_low_subcube(&h)?;
        self.push(phase, vec![label], k, moves);
        Ok(())
    }
}

/// A plan stacking every cup of `Q^d` onto `0`.
///
/// For `d >= 8` the plan works with 3-cubes labelled by subsets of
/// `[d - 3]`: first 4-cubes of level at least 12 (when `d >= 16`), then
/// chain triples from the highest level down while the level is at least 9,
/// then levels 5 to 8, the level-4 pieces, and levels 0 to 3. A level-9
/// chain top whose chain gadget does not apply is left in `unassigned`.
pub fn plan_cube(d: u32) -> Result<CubePlan, Error> {
    if d > MAX_DIM {
        return Err(precondition(format!("Q^{d} is beyond d = {MAX_DIM}")));
    }
    let mut asm = Assembly { d, moves: Vec::with_capacity((1usize << d) - 1), fragments: Vec::new() };
    let mut unassigned = Vec::new();
    match d {
        0 => {}
        1..=3 => asm.low(Phase::Low, 0, d)?,
        4..=6 => {
            for label in 0..1usize << (d - 3) {
                asm.low(Phase::Low, label, 3)?;
            }
        }
        7 => {
            for label in 0..8usize {
                let h = SubcubeHandle::in_split(7, 4, label);
                if h.level() == 3 {
                    asm.push(Phase::Level3FourCubes, vec![label], 4, plan_level3_4cube(&h)?);
                }
            }
            for label in 0..8usize {
                if label.count_ones() < 3 {
                    asm.low(Phase::Low, label, 3)?;
                    asm.low(Phase::Low, label | 1 << 3, 3)?;
                }
            }
        }
        _ => assemble_large(&mut asm, &mut unassigned)?,
    }
    let plan = Plan::new(1usize << d, 0, asm.moves);
    Ok(CubePlan { d, plan, fragments: asm.fragments, unassigned })
}

fn assemble_large(asm: &mut Assembly, unassigned: &mut Vec<usize>) -> Result<(), Error> {
    let d = asm.d;
    let n = d - 3;
    let mut present = vec![true; 1usize << n];
    let top_bit = 1usize << (n - 1);
    if d >= 16 {
        for label in (0..1usize << (d - 4)).filter(|s| s.count_ones() >= 12) {
            let h = SubcubeHandle::in_split(d, 4, label);
            asm.push(Phase::HighFourCubes, vec![label], 4, plan_high_kcube(&h)?);
            present[label] = false;
            present[label | top_bit] = false;
        }
    }
    let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); n as usize + 1];
    for label in 0..1usize << n {
        by_level[label.count_ones() as usize].push(label);
    }
    for level in (9..=n as usize).rev() {
        for &a in &by_level[level] {
            if !present[a] {
                continue;
            }
            present[a] = false;
            let chain = match abc_chain(d, a) {
                Ok(chain) if present[chain[1]] && present[chain[2]] => chain,
                _ => {
                    unassigned.push(a);
                    continue;
                }
            };
            present[chain[1]] = false;
            present[chain[2]] = false;
            let t = abc_template(level).unwrap();
            let free: Vec<u32> = (n..d).collect();
            asm.push(Phase::ChainTriples, chain.to_vec(), 3, t.compile(&chain, &free));
        }
    }
    for labels in &by_level[5..=8.min(n as usize)] {
        for &label in labels {
            if present[label] {
                present[label] = false;
                asm.low(Phase::HighThreeCubes, label, 3)?;
            }
        }
    }
    let free: Vec<u32> = (n..d).collect();
    for piece in level4_pieces(n)? {
        if piece.iter().any(|&l| !present[l]) {
            return Err(precondition("a level-4 3-cube was consumed early"));
        }
        piece.iter().for_each(|&l| present[l] = false);
        let (t, labels) = piece_labels(&piece);
        asm.push(Phase::Level4Pieces, piece.clone(), 3, t.compile(&labels, &free));
    }
    for labels in &by_level[..=3] {
        for &label in labels {
            if present[label] {
                present[label] = false;
                asm.low(Phase::LowThreeCubes, label, 3)?;
            }
        }
    }
    debug_assert!(present.iter().all(|&p| !p));
    Ok(())
}

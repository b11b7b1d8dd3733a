//! Frozen stacking schedules for small groups of subcubes.
//!
//! A template speaks about vertices relative to its slots: slot `s` is a
//! subcube label and `local` selects a vertex by its free coordinates (bit
//! `b` of `local` is free coordinate `b`). Every part collects its cups on
//! its root, which then jumps to `0`; the root's weight equals the part's
//! size. Templates were transcribed from hand-drawn spider partitions, and
//! the move order inside each part was found by search and replayed through
//! the verifier.

use crate::game::Move;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rel {
    pub slot: u8,
    pub local: u8,
}

/// `to: None` is a jump to the all-zeros vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelMove {
    pub from: Rel,
    pub to: Option<Rel>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemplatePart {
    pub root: Rel,
    pub members: &'static [Rel],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetTemplate {
    pub name: &'static str,
    /// Free coordinates of each participating subcube.
    pub dim: u32,
    pub slots: &'static [&'static str],
    /// The first `cubes` slots hold cups; the rest only locate connectors.
    pub cubes: usize,
    /// Vertices that must be empty when the gadget runs.
    pub connectors: &'static [Rel],
    pub parts: &'static [TemplatePart],
    pub moves: &'static [RelMove],
}

const fn r(slot: u8, local: u8) -> Rel {
    Rel { slot, local }
}

const fn mv(from: Rel, to: Rel) -> RelMove {
    RelMove { from, to: Some(to) }
}

const fn jump(from: Rel) -> RelMove {
    RelMove { from, to: None }
}

/// Places free-coordinate bits onto the given cube coordinates.
pub fn spread(local: usize, free_dims: &[u32]) -> usize {
    free_dims.iter().enumerate().filter(|&(b, _)| local >> b & 1 == 1).fold(0, |acc, (_, &dim)| acc | 1 << dim)
}

impl GadgetTemplate {
    pub fn vertex(&self, rel: Rel, labels: &[usize], free_dims: &[u32]) -> usize {
        labels[rel.slot as usize] | spread(rel.local as usize, free_dims)
    }

    /// Absolute moves for one placement.
    pub fn compile(&self, labels: &[usize], free_dims: &[u32]) -> Vec<Move> {
        assert_eq!(labels.len(), self.slots.len(), "{}: one label per slot", self.name);
        assert_eq!(free_dims.len() as u32, self.dim, "{}: wrong number of free coordinates", self.name);
        self.moves
            .iter()
            .map(|m| {
                let to = m.to.map_or(0, |t| self.vertex(t, labels, free_dims));
                Move::new(self.vertex(m.from, labels, free_dims), to)
            })
            .collect()
    }

    /// Every vertex of the participating subcubes.
    pub fn cup_vertices(&self, labels: &[usize], free_dims: &[u32]) -> Vec<usize> {
        let size = 1usize << self.dim;
        labels[..self.cubes].iter().flat_map(|&l| (0..size).map(move |t| l | spread(t, free_dims))).collect()
    }

    pub fn connector_vertices(&self, labels: &[usize], free_dims: &[u32]) -> Vec<usize> {
        self.connectors.iter().map(|&c| self.vertex(c, labels, free_dims)).collect()
    }
}

/// A 4-cube at level 3: three spiders rooted at weights 3, 6 and 7.
pub const LEVEL3_4CUBE: GadgetTemplate = GadgetTemplate {
    name: "level-3 4-cube",
    dim: 4,
    slots: &["T"],
    cubes: 1,
    connectors: &[],
    parts: &[
        TemplatePart { root: r(0, 0b0000), members: &[r(0, 0b0000), r(0, 0b0001), r(0, 0b0010)] },
        TemplatePart { root: r(0, 0b1110), members: &[r(0, 0b1000), r(0, 0b1010), r(0, 0b1110), r(0, 0b1100), r(0, 0b0110), r(0, 0b0100)] },
        TemplatePart { root: r(0, 0b1111), members: &[r(0, 0b1001), r(0, 0b1011), r(0, 0b1111), r(0, 0b1101), r(0, 0b0011), r(0, 0b0111), r(0, 0b0101)] },
    ],
    moves: &[
        mv(r(0, 0b0001), r(0, 0b0000)),
        mv(r(0, 0b0010), r(0, 0b0000)),
        jump(r(0, 0b0000)),
        mv(r(0, 0b1010), r(0, 0b1000)),
        mv(r(0, 0b1000), r(0, 0b1110)),
        mv(r(0, 0b1100), r(0, 0b0100)),
        mv(r(0, 0b0110), r(0, 0b1110)),
        mv(r(0, 0b0100), r(0, 0b1110)),
        jump(r(0, 0b1110)),
        mv(r(0, 0b1011), r(0, 0b1001)),
        mv(r(0, 0b1001), r(0, 0b1111)),
        mv(r(0, 0b1101), r(0, 0b0101)),
        mv(r(0, 0b0111), r(0, 0b0011)),
        mv(r(0, 0b0011), r(0, 0b1111)),
        mv(r(0, 0b0101), r(0, 0b1111)),
        jump(r(0, 0b1111)),
    ],
};

/// Two level-4 3-cubes whose labels share three elements. `X` is their
/// union, a level-5 3-cube whose top must already be empty.
pub const PAIR: GadgetTemplate = GadgetTemplate {
    name: "pair",
    dim: 3,
    slots: &["U", "V", "X"],
    cubes: 2,
    connectors: &[r(2, 0b111)],
    parts: &[
        TemplatePart { root: r(0, 0b001), members: &[r(0, 0b000), r(0, 0b101), r(0, 0b001), r(0, 0b011), r(0, 0b010)] },
        TemplatePart { root: r(0, 0b110), members: &[r(0, 0b100), r(0, 0b111), r(0, 0b110), r(1, 0b100), r(1, 0b111), r(1, 0b110)] },
        TemplatePart { root: r(1, 0b001), members: &[r(1, 0b000), r(1, 0b101), r(1, 0b001), r(1, 0b011), r(1, 0b010)] },
    ],
    moves: &[
        mv(r(0, 0b000), r(0, 0b010)),
        mv(r(0, 0b101), r(0, 0b001)),
        mv(r(0, 0b011), r(0, 0b001)),
        mv(r(0, 0b010), r(0, 0b001)),
        jump(r(0, 0b001)),
        mv(r(0, 0b100), r(0, 0b110)),
        mv(r(0, 0b111), r(0, 0b110)),
        mv(r(1, 0b110), r(1, 0b100)),
        mv(r(1, 0b100), r(1, 0b111)),
        mv(r(1, 0b111), r(0, 0b110)),
        jump(r(0, 0b110)),
        mv(r(1, 0b000), r(1, 0b010)),
        mv(r(1, 0b101), r(1, 0b001)),
        mv(r(1, 0b011), r(1, 0b001)),
        mv(r(1, 0b010), r(1, 0b001)),
        jump(r(1, 0b001)),
    ],
};

/// Three level-4 3-cubes `U`, `V`, `W` along a path of the Johnson graph.
/// `X` and `Y` are the unions `U | V` and `V | W`. No move runs between `U`
/// and `W`, so their distance never matters.
pub const TRIPLE: GadgetTemplate = GadgetTemplate {
    name: "triple",
    dim: 3,
    slots: &["U", "V", "W", "X", "Y"],
    cubes: 3,
    connectors: &[r(3, 0b111), r(4, 0b111)],
    parts: &[
        TemplatePart { root: r(0, 0b011), members: &[r(0, 0b000), r(0, 0b100), r(0, 0b101), r(0, 0b001), r(0, 0b011), r(0, 0b010)] },
        TemplatePart { root: r(1, 0b111), members: &[r(0, 0b111), r(0, 0b110), r(1, 0b100), r(1, 0b111), r(1, 0b110), r(2, 0b111), r(2, 0b110)] },
        TemplatePart { root: r(1, 0b001), members: &[r(1, 0b000), r(1, 0b101), r(1, 0b001), r(1, 0b011), r(1, 0b010)] },
        TemplatePart { root: r(2, 0b011), members: &[r(2, 0b000), r(2, 0b100), r(2, 0b101), r(2, 0b001), r(2, 0b011), r(2, 0b010)] },
    ],
    moves: &[
        mv(r(0, 0b100), r(0, 0b101)),
        mv(r(0, 0b101), r(0, 0b011)),
        mv(r(0, 0b001), r(0, 0b011)),
        mv(r(0, 0b010), r(0, 0b000)),
        mv(r(0, 0b000), r(0, 0b011)),
        jump(r(0, 0b011)),
        mv(r(0, 0b110), r(0, 0b111)),
        mv(r(0, 0b111), r(1, 0b111)),
        mv(r(1, 0b110), r(1, 0b100)),
        mv(r(1, 0b100), r(1, 0b111)),
        mv(r(2, 0b110), r(2, 0b111)),
        mv(r(2, 0b111), r(1, 0b111)),
        jump(r(1, 0b111)),
        mv(r(1, 0b000), r(1, 0b010)),
        mv(r(1, 0b101), r(1, 0b001)),
        mv(r(1, 0b011), r(1, 0b001)),
        mv(r(1, 0b010), r(1, 0b001)),
        jump(r(1, 0b001)),
        mv(r(2, 0b100), r(2, 0b101)),
        mv(r(2, 0b101), r(2, 0b011)),
        mv(r(2, 0b001), r(2, 0b011)),
        mv(r(2, 0b010), r(2, 0b000)),
        mv(r(2, 0b000), r(2, 0b011)),
        jump(r(2, 0b011)),
    ],
};

/// `A` at level 9 with `B` and `C` its two chain predecessors.
pub const ABC_9: GadgetTemplate = GadgetTemplate {
    name: "abc level 9",
    dim: 3,
    slots: &["A", "B", "C"],
    cubes: 3,
    connectors: &[],
    parts: &[
        TemplatePart { root: r(0, 0b000), members: &[r(0, 0b000), r(0, 0b100), r(0, 0b101), r(0, 0b111), r(0, 0b110), r(0, 0b001), r(0, 0b011), r(0, 0b010), r(1, 0b111)] },
        TemplatePart { root: r(1, 0b000), members: &[r(1, 0b000), r(1, 0b100), r(1, 0b101), r(1, 0b110), r(1, 0b001), r(1, 0b011), r(1, 0b010), r(2, 0b110)] },
        TemplatePart { root: r(2, 0b000), members: &[r(2, 0b000), r(2, 0b100), r(2, 0b101), r(2, 0b111), r(2, 0b001), r(2, 0b011), r(2, 0b010)] },
    ],
    moves: &[
        mv(r(0, 0b100), r(0, 0b101)),
        mv(r(0, 0b101), r(0, 0b000)),
        mv(r(0, 0b111), r(1, 0b111)),
        mv(r(0, 0b001), r(0, 0b011)),
        mv(r(0, 0b011), r(1, 0b111)),
        mv(r(0, 0b010), r(0, 0b110)),
        mv(r(0, 0b110), r(0, 0b000)),
        mv(r(1, 0b111), r(0, 0b000)),
        jump(r(0, 0b000)),
        mv(r(1, 0b100), r(1, 0b101)),
        mv(r(1, 0b101), r(1, 0b000)),
        mv(r(1, 0b110), r(1, 0b010)),
        mv(r(1, 0b001), r(1, 0b011)),
        mv(r(1, 0b011), r(1, 0b000)),
        mv(r(1, 0b010), r(2, 0b110)),
        mv(r(2, 0b110), r(1, 0b000)),
        jump(r(1, 0b000)),
        mv(r(2, 0b100), r(2, 0b101)),
        mv(r(2, 0b101), r(2, 0b000)),
        mv(r(2, 0b111), r(2, 0b011)),
        mv(r(2, 0b001), r(2, 0b000)),
        mv(r(2, 0b011), r(2, 0b000)),
        mv(r(2, 0b010), r(2, 0b000)),
        jump(r(2, 0b000)),
    ],
};

pub const ABC_10: GadgetTemplate = GadgetTemplate {
    name: "abc level 10",
    dim: 3,
    slots: &["A", "B", "C"],
    cubes: 3,
    connectors: &[],
    parts: &[
        TemplatePart { root: r(0, 0b111), members: &[r(0, 0b000), r(0, 0b100), r(0, 0b101), r(0, 0b111), r(0, 0b110), r(0, 0b001), r(0, 0b011), r(0, 0b010), r(1, 0b000), r(1, 0b111), r(1, 0b001), r(1, 0b011), r(1, 0b010)] },
        TemplatePart { root: r(2, 0b111), members: &[r(1, 0b100), r(1, 0b101), r(1, 0b110), r(2, 0b000), r(2, 0b100), r(2, 0b101), r(2, 0b111), r(2, 0b110), r(2, 0b001), r(2, 0b011), r(2, 0b010)] },
    ],
    moves: &[
        mv(r(0, 0b000), r(0, 0b001)),
        mv(r(0, 0b101), r(0, 0b100)),
        mv(r(0, 0b100), r(0, 0b111)),
        mv(r(0, 0b110), r(0, 0b111)),
        mv(r(0, 0b001), r(0, 0b111)),
        mv(r(0, 0b011), r(0, 0b111)),
        mv(r(1, 0b000), r(1, 0b001)),
        mv(r(1, 0b111), r(0, 0b111)),
        mv(r(1, 0b011), r(1, 0b001)),
        mv(r(1, 0b001), r(0, 0b111)),
        mv(r(1, 0b010), r(0, 0b010)),
        mv(r(0, 0b010), r(0, 0b111)),
        jump(r(0, 0b111)),
        mv(r(1, 0b101), r(1, 0b100)),
        mv(r(1, 0b110), r(1, 0b100)),
        mv(r(1, 0b100), r(2, 0b111)),
        mv(r(2, 0b000), r(2, 0b001)),
        mv(r(2, 0b101), r(2, 0b100)),
        mv(r(2, 0b100), r(2, 0b111)),
        mv(r(2, 0b110), r(2, 0b010)),
        mv(r(2, 0b001), r(2, 0b111)),
        mv(r(2, 0b011), r(2, 0b111)),
        mv(r(2, 0b010), r(2, 0b111)),
        jump(r(2, 0b111)),
    ],
};

pub const ABC_11: GadgetTemplate = GadgetTemplate {
    name: "abc level 11",
    dim: 3,
    slots: &["A", "B", "C"],
    cubes: 3,
    connectors: &[],
    parts: &[
        TemplatePart { root: r(0, 0b001), members: &[r(0, 0b000), r(0, 0b100), r(0, 0b101), r(0, 0b111), r(0, 0b110), r(0, 0b001), r(0, 0b011), r(0, 0b010), r(1, 0b101), r(1, 0b111), r(1, 0b001), r(1, 0b011)] },
        TemplatePart { root: r(2, 0b111), members: &[r(1, 0b000), r(1, 0b100), r(1, 0b110), r(1, 0b010), r(2, 0b000), r(2, 0b100), r(2, 0b101), r(2, 0b111), r(2, 0b110), r(2, 0b001), r(2, 0b011), r(2, 0b010)] },
    ],
    moves: &[
        mv(r(0, 0b000), r(0, 0b001)),
        mv(r(0, 0b101), r(0, 0b100)),
        mv(r(0, 0b100), r(0, 0b001)),
        mv(r(0, 0b110), r(0, 0b010)),
        mv(r(0, 0b011), r(0, 0b111)),
        mv(r(0, 0b111), r(0, 0b001)),
        mv(r(0, 0b010), r(0, 0b001)),
        mv(r(1, 0b111), r(1, 0b101)),
        mv(r(1, 0b101), r(0, 0b001)),
        mv(r(1, 0b001), r(1, 0b011)),
        mv(r(1, 0b011), r(0, 0b001)),
        jump(r(0, 0b001)),
        mv(r(1, 0b000), r(1, 0b010)),
        mv(r(1, 0b100), r(1, 0b110)),
        mv(r(1, 0b110), r(2, 0b111)),
        mv(r(1, 0b010), r(2, 0b000)),
        mv(r(2, 0b000), r(2, 0b111)),
        mv(r(2, 0b101), r(2, 0b100)),
        mv(r(2, 0b100), r(2, 0b111)),
        mv(r(2, 0b110), r(2, 0b010)),
        mv(r(2, 0b011), r(2, 0b001)),
        mv(r(2, 0b001), r(2, 0b111)),
        mv(r(2, 0b010), r(2, 0b111)),
        jump(r(2, 0b111)),
    ],
};

pub const ABC_12: GadgetTemplate = GadgetTemplate {
    name: "abc level 12",
    dim: 3,
    slots: &["A", "B", "C"],
    cubes: 3,
    connectors: &[],
    parts: &[
        TemplatePart { root: r(0, 0b000), members: &[r(0, 0b000), r(0, 0b100), r(0, 0b101), r(0, 0b111), r(0, 0b110), r(0, 0b001), r(0, 0b011), r(0, 0b010), r(1, 0b000), r(1, 0b111), r(1, 0b001), r(1, 0b011)] },
        TemplatePart { root: r(2, 0b110), members: &[r(1, 0b100), r(1, 0b101), r(1, 0b110), r(1, 0b010), r(2, 0b000), r(2, 0b100), r(2, 0b101), r(2, 0b111), r(2, 0b110), r(2, 0b001), r(2, 0b011), r(2, 0b010)] },
    ],
    moves: &[
        mv(r(0, 0b100), r(0, 0b101)),
        mv(r(0, 0b101), r(0, 0b000)),
        mv(r(0, 0b111), r(0, 0b011)),
        mv(r(0, 0b001), r(0, 0b000)),
        mv(r(0, 0b011), r(0, 0b000)),
        mv(r(0, 0b010), r(0, 0b110)),
        mv(r(0, 0b110), r(0, 0b000)),
        mv(r(1, 0b000), r(0, 0b000)),
        mv(r(1, 0b111), r(1, 0b011)),
        mv(r(1, 0b001), r(1, 0b011)),
        mv(r(1, 0b011), r(0, 0b000)),
        jump(r(0, 0b000)),
        mv(r(1, 0b101), r(1, 0b100)),
        mv(r(1, 0b100), r(2, 0b110)),
        mv(r(1, 0b110), r(1, 0b010)),
        mv(r(1, 0b010), r(2, 0b110)),
        mv(r(2, 0b100), r(2, 0b101)),
        mv(r(2, 0b101), r(2, 0b110)),
        mv(r(2, 0b111), r(2, 0b110)),
        mv(r(2, 0b001), r(2, 0b011)),
        mv(r(2, 0b011), r(2, 0b110)),
        mv(r(2, 0b010), r(2, 0b000)),
        mv(r(2, 0b000), r(2, 0b110)),
        jump(r(2, 0b110)),
    ],
};

/// The level-appropriate chain gadget, for levels 9 to 12.
pub fn abc_template(level: usize) -> Option<&'static GadgetTemplate> {
    match level {
        9 => Some(&ABC_9),
        10 => Some(&ABC_10),
        11 => Some(&ABC_11),
        12 => Some(&ABC_12),
        _ => None,
    }
}

pub const ALL: [&GadgetTemplate; 7] = [&LEVEL3_4CUBE, &PAIR, &TRIPLE, &ABC_9, &ABC_10, &ABC_11, &ABC_12];

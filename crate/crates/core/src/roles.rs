//! Role labels tying vertices of a constructed graph back to the gadget they
//! were built from.
//!
//! Role files hold one line `<vertex> <role>[:index[,index...]]` per vertex.
//! Indices are 0-based source-graph ids unless noted on the variant.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoleError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("unknown role `{0}`")]
    UnknownRole(String),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("vertex {0} has no role")]
    MissingVertex(usize),
}

/// Side of a bipartite building block (`M_{n,n}` sides A and B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

/// The six fixed `M_{n+2,n+2}` vertices of a vertex gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    Y,
    Q,
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 6] = [
        Letter::X,
        Letter::Y,
        Letter::Q,
        Letter::A,
        Letter::B,
        Letter::C,
    ];

    fn name(self) -> &'static str {
        match self {
            Letter::X => "x",
            Letter::Y => "y",
            Letter::Q => "q",
            Letter::A => "a",
            Letter::B => "b",
            Letter::C => "c",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Original vertex `v` of a source graph.
    SourceVertex(usize),
    /// Edge number `j` of a source graph, as a vertex.
    SourceEdge(usize),
    /// Core clique vertex `v_i` of `G_n`.
    Core(usize),
    /// Member `v_j^i` of the clique attached to core vertex `i`.
    CliqueMember {
        block: usize,
        index: usize,
    },
    /// Pendant leaf number `index` hanging off `v_1^i`.
    Leaf {
        block: usize,
        index: usize,
    },
    /// Tree-atom vertex first created when building `T_level` (1-based).
    AtomLevel(usize),
    /// The hub vertex `w` of the hardness construction.
    Hub,
    /// Non-identified member of `M_{3,3}(e_j)`.
    M33Member {
        edge: usize,
        side: Side,
        pos: usize,
    },
    /// Member of one of the three `M_{n+3,n+3}` copies (copy 0..3).
    BigMember {
        copy: usize,
        side: Side,
        pos: usize,
    },
    /// Vertex `v_{n+1+copy}` attached to the hub.
    ExtraDominator(usize),
    /// `v_j^i` in vertex gadget `T_i`.
    GadgetV {
        block: usize,
        source: usize,
    },
    /// `u_j^i` in vertex gadget `T_i`.
    GadgetU {
        block: usize,
        source: usize,
    },
    GadgetLetter {
        block: usize,
        letter: Letter,
    },
    /// Distinguished vertex `f^i` of the `F` gadget.
    GadgetF(usize),
    /// Other `F` vertices, positions 1..=7 of the gadget.
    FInternal {
        block: usize,
        pos: usize,
    },
    /// Vertex of the base graph in the well-coloredness construction.
    Base(usize),
    /// Vertex `v_1..v_4` (1-based) of the attached `P_4`.
    PathVertex(usize),
    /// Member of the `K_Δ` attached to `v_4`.
    TailClique(usize),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::SourceVertex(v) => write!(f, "v:{v}"),
            Role::SourceEdge(j) => write!(f, "e:{j}"),
            Role::Core(i) => write!(f, "core:{i}"),
            Role::CliqueMember { block, index } => write!(f, "clique:{block},{index}"),
            Role::Leaf { block, index } => write!(f, "leaf:{block},{index}"),
            Role::AtomLevel(l) => write!(f, "atom:{l}"),
            Role::Hub => write!(f, "w"),
            Role::M33Member { edge, side, pos } => write!(f, "m33:{edge},{side},{pos}"),
            Role::BigMember { copy, side, pos } => write!(f, "mbig:{copy},{side},{pos}"),
            Role::ExtraDominator(t) => write!(f, "vx:{t}"),
            Role::GadgetV { block, source } => write!(f, "tv:{block},{source}"),
            Role::GadgetU { block, source } => write!(f, "tu:{block},{source}"),
            Role::GadgetLetter { block, letter } => write!(f, "{}:{block}", letter.name()),
            Role::GadgetF(i) => write!(f, "f:{i}"),
            Role::FInternal { block, pos } => write!(f, "fint:{block},{pos}"),
            Role::Base(v) => write!(f, "g:{v}"),
            Role::PathVertex(p) => write!(f, "p4:{p}"),
            Role::TailClique(j) => write!(f, "kdelta:{j}"),
        }
    }
}

impl FromStr for Role {
    type Err = RoleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || RoleError::UnknownRole(s.to_string());
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, rest.split(',').collect::<Vec<_>>()),
            None => (s, Vec::new()),
        };
        let num = |i: usize| -> Result<usize, RoleError> {
            rest.get(i).and_then(|t| t.parse().ok()).ok_or_else(unknown)
        };
        let side = |i: usize| -> Result<Side, RoleError> {
            match rest.get(i).copied() {
                Some("A") => Ok(Side::A),
                Some("B") => Ok(Side::B),
                _ => Err(unknown()),
            }
        };
        let arity = |k: usize| {
            if rest.len() == k {
                Ok(())
            } else {
                Err(unknown())
            }
        };
        let role = match name {
            "w" => {
                arity(0)?;
                Role::Hub
            }
            "v" | "e" | "core" | "atom" | "vx" | "f" | "g" | "p4" | "kdelta" | "x" | "y" | "q"
            | "a" | "b" | "c" => {
                arity(1)?;
                let i = num(0)?;
                match name {
                    "v" => Role::SourceVertex(i),
                    "e" => Role::SourceEdge(i),
                    "core" => Role::Core(i),
                    "atom" => Role::AtomLevel(i),
                    "vx" => Role::ExtraDominator(i),
                    "f" => Role::GadgetF(i),
                    "g" => Role::Base(i),
                    "p4" => Role::PathVertex(i),
                    "kdelta" => Role::TailClique(i),
                    letter => {
                        let letter = Letter::ALL
                            .into_iter()
                            .find(|l| l.name() == letter)
                            .ok_or_else(unknown)?;
                        Role::GadgetLetter { block: i, letter }
                    }
                }
            }
            "clique" | "leaf" | "tv" | "tu" | "fint" => {
                arity(2)?;
                let (a, b) = (num(0)?, num(1)?);
                match name {
                    "clique" => Role::CliqueMember { block: a, index: b },
                    "leaf" => Role::Leaf { block: a, index: b },
                    "tv" => Role::GadgetV {
                        block: a,
                        source: b,
                    },
                    "tu" => Role::GadgetU {
                        block: a,
                        source: b,
                    },
                    _ => Role::FInternal { block: a, pos: b },
                }
            }
            "m33" | "mbig" => {
                arity(3)?;
                let (a, sd, p) = (num(0)?, side(1)?, num(2)?);
                if name == "m33" {
                    Role::M33Member {
                        edge: a,
                        side: sd,
                        pos: p,
                    }
                } else {
                    Role::BigMember {
                        copy: a,
                        side: sd,
                        pos: p,
                    }
                }
            }
            _ => return Err(unknown()),
        };
        Ok(role)
    }
}

/// Total assignment vertex → role.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RoleMap {
    roles: Vec<Role>,
}

impl RoleMap {
    pub fn new(roles: Vec<Role>) -> Self {
        RoleMap { roles }
    }

    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<&Role> {
        self.roles.get(v)
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Vertex carrying `role`, if any.
    pub fn find(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    /// All vertices whose role satisfies `pred`, ascending.
    pub fn select(&self, pred: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| pred(&self.roles[v]))
            .collect()
    }

    /// Concatenates two maps, matching the id shift of
    /// [`crate::graph::disjoint_union`] and [`crate::graph::join`].
    pub fn concat(&self, other: &RoleMap) -> RoleMap {
        RoleMap::new(self.roles.iter().chain(&other.roles).copied().collect())
    }

    pub fn to_text(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("{v} {r}\n"))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self, RoleError> {
        let mut slots: Vec<Option<Role>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |msg: &str| RoleError::Malformed {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let mut parts = line.split_whitespace();
            let v: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| malformed("expected vertex id"))?;
            let role: Role = parts
                .next()
                .ok_or_else(|| malformed("expected role"))?
                .parse()?;
            if parts.next().is_some() {
                return Err(malformed("trailing tokens"));
            }
            if slots.len() <= v {
                slots.resize(v + 1, None);
            }
            if slots[v].replace(role).is_some() {
                return Err(RoleError::DuplicateVertex(v));
            }
        }
        let roles = slots
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or(RoleError::MissingVertex(v)))
            .collect::<Result<_, _>>()?;
        Ok(RoleMap { roles })
    }
}

impl FromIterator<Role> for RoleMap {
    fn from_iter<I: IntoIterator<Item = Role>>(iter: I) -> Self {
        RoleMap::new(iter.into_iter().collect())
    }
}

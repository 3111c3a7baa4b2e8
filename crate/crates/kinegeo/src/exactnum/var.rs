use std::fmt;

/// Number of symbols in the fixed variable universe.
pub const NVARS: usize = 7;

/// The fixed variable universe: four chart coordinates (`x0 = ct`), the two
/// invariant parameters and the formal contraction parameter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X0,
    X1,
    X2,
    X3,
    C,
    L,
    Eps,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X0, Var::X1, Var::X2, Var::X3, Var::C, Var::L, Var::Eps];
    pub const COORDS: [Var; 4] = [Var::X0, Var::X1, Var::X2, Var::X3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    /// Coordinate `x^mu`.
    pub fn coord(mu: usize) -> Var {
        Var::COORDS[mu]
    }

    pub fn is_coord(self) -> bool {
        self.index() < 4
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X0 => "x0",
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::C => "c",
            Var::L => "l",
            Var::Eps => "eps",
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

//! Half-integral theta characteristics and the three lattice scalings.

use std::fmt;
use std::str::FromStr;

/// Characteristic `a = (x/2, y/2)`, `b = (z/2, w/2)`; written `θ_xyzw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaChar {
    bits: [u8; 4],
}

impl ThetaChar {
    pub const fn new(x: u8, y: u8, z: u8, w: u8) -> Self {
        assert!(x < 2 && y < 2 && z < 2 && w < 2);
        ThetaChar { bits: [x, y, z, w] }
    }

    pub fn bits(&self) -> [u8; 4] {
        self.bits
    }

    /// `4·aᵗb` even.
    pub fn is_even(&self) -> bool {
        let [x, y, z, w] = self.bits;
        (x * z + y * w) % 2 == 0
    }

    /// All sixteen characteristics in label order.
    pub fn all() -> Vec<ThetaChar> {
        (0..16u8).map(|i| ThetaChar::new(i >> 3 & 1, i >> 2 & 1, i >> 1 & 1, i & 1)).collect()
    }
}

impl fmt::Display for ThetaChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z, w] = self.bits;
        write!(f, "{x}{y}{z}{w}")
    }
}

impl FromStr for ThetaChar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let b: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(format!("bad characteristic {s:?}")),
            })
            .collect::<Result<_, _>>()?;
        if b.len() != 4 {
            return Err(format!("characteristic {s:?} needs four bits"));
        }
        Ok(ThetaChar::new(b[0], b[1], b[2], b[3]))
    }
}

/// Shorthand used throughout: `tc("0100")`.
pub fn tc(s: &str) -> ThetaChar {
    s.parse().expect("literal characteristic")
}

/// Scaling of the period matrix: `θ(τ/2)`, `θ(τ)`, `θ(2τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scale {
    Half,
    One,
    Two,
}

impl Scale {
    /// `8·s`, the exponent of `e^{πi sτ}` in eighths.
    pub fn eighths(self) -> i64 {
        match self {
            Scale::Half => 4,
            Scale::One => 8,
            Scale::Two => 16,
        }
    }
}

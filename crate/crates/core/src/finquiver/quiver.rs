use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orientation of the arrow between vertices `i` and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    /// `i → i+1`
    #[serde(rename = "fwd")]
    Forward,
    /// `i ← i+1`
    #[serde(rename = "bwd")]
    Backward,
}

/// A quiver of type A_n: vertices `1..=n` on a path, one arrow per adjacent
/// pair, oriented by `directions[i]` for the pair `(i+1, i+2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuiverA {
    directions: Vec<Direction>,
}

impl QuiverA {
    pub fn new(directions: Vec<Direction>) -> Self {
        Self { directions }
    }

    /// `i → i+1` for every arrow.
    pub fn linear(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("a quiver needs at least one vertex".into()));
        }
        Ok(Self::new(vec![Direction::Forward; n - 1]))
    }

    /// Checks that `n` and the number of directions agree.
    pub fn with_vertices(n: usize, directions: Vec<Direction>) -> Result<Self> {
        if n == 0 || directions.len() + 1 != n {
            return Err(Error::Schema(format!(
                "a quiver with {n} vertices needs {} arrow directions, got {}",
                n.saturating_sub(1),
                directions.len()
            )));
        }
        Ok(Self::new(directions))
    }

    pub fn n(&self) -> usize {
        self.directions.len() + 1
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    pub fn arrow_count(&self) -> usize {
        self.directions.len()
    }

    /// Zero-based source vertex of zero-based arrow `h`.
    pub fn source(&self, h: usize) -> usize {
        match self.directions[h] {
            Direction::Forward => h,
            Direction::Backward => h + 1,
        }
    }

    /// Zero-based target vertex of zero-based arrow `h`.
    pub fn target(&self, h: usize) -> usize {
        match self.directions[h] {
            Direction::Forward => h + 1,
            Direction::Backward => h,
        }
    }

    /// `Σ_h dims[s(h)]·dims[t(h)]`, the dimension of the representation
    /// variety.
    pub fn variety_dim(&self, dims: &DimVector) -> usize {
        (0..self.arrow_count())
            .map(|h| dims[self.source(h)] * dims[self.target(h)])
            .sum()
    }

    /// All `2^(n-1)` orientations of A_n.
    pub fn all_orientations(n: usize) -> Vec<QuiverA> {
        let arrows = n.saturating_sub(1);
        (0..1usize << arrows)
            .map(|mask| {
                QuiverA::new(
                    (0..arrows)
                        .map(|i| if mask >> i & 1 == 0 { Direction::Forward } else { Direction::Backward })
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for QuiverA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1")?;
        for (i, d) in self.directions.iter().enumerate() {
            let arrow = match d {
                Direction::Forward => "→",
                Direction::Backward => "←",
            };
            write!(f, "{arrow}{}", i + 2)?;
        }
        Ok(())
    }
}

/// A dimension vector, one entry per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Entrywise `self ≤ other`.
    pub fn fits_in(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl Add for &DimVector {
    type Output = DimVector;

    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.len(), rhs.len(), "adding dimension vectors of different lengths");
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

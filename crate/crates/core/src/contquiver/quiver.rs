use num_rational::BigRational;

use crate::error::{Error, Result};

/// The local order on one piece of a continuous quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PieceOrder {
    /// `≺` is `<` on the piece.
    Lt,
    /// `≺` is `>` on the piece.
    Gt,
}

/// A continuous type-A quiver: finitely many turning points `S` and one
/// order per piece `(−∞,S₁], [S₁,S₂], …, [S_k,+∞)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuousQuiverA {
    s: Vec<BigRational>,
    orders: Vec<PieceOrder>,
}

impl ContinuousQuiverA {
    pub fn new(s: Vec<BigRational>, orders: Vec<PieceOrder>) -> Result<Self> {
        if orders.len() != s.len() + 1 {
            return Err(Error::Schema(format!("{} turning points need {} piece orders, got {}", s.len(), s.len() + 1, orders.len())));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Schema("turning points must be strictly increasing".into()));
        }
        Ok(Self { s, orders })
    }

    /// The real line with its usual order.
    pub fn line() -> Self {
        Self { s: Vec::new(), orders: vec![PieceOrder::Lt] }
    }

    pub fn turning_points(&self) -> &[BigRational] {
        &self.s
    }

    pub fn orders(&self) -> &[PieceOrder] {
        &self.orders
    }

    /// Turning points whose two sides carry the same order, so they are
    /// neither sinks nor sources.
    pub fn warnings(&self) -> Vec<String> {
        self.orders
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == w[1])
            .map(|(i, _)| format!("turning point {} is not a sink or source", self.s[i]))
            .collect()
    }

    /// The order on the piece just right of `a`.
    pub fn order_right_of(&self, a: &BigRational) -> PieceOrder {
        self.orders[self.s.iter().filter(|x| *x <= a).count()]
    }

    /// The order on the piece just left of `a`.
    pub fn order_left_of(&self, a: &BigRational) -> PieceOrder {
        self.orders[self.s.iter().filter(|x| *x < a).count()]
    }
}

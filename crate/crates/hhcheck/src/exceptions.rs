//! Exceptional Schur multiplier cases: representations with deg(Theta(g)) < o(g), stored
//! row by row.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EllCond {
    Any,
    Eq(u64),
    Ne(u64),
    /// p = l = value
    PEqEll(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DimCond {
    /// 1 < d < upper
    Between(u64),
    Exact(u64),
    OneOf(&'static [u64]),
    Unspecified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DegCond {
    /// deg equals the dimension d
    Dim,
    Exact(u64),
    /// |g| - 1
    OrderMinusOne,
    /// (|g|, lower bound) pairs
    AtLeast(&'static [(u64, u64)]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRow {
    pub group: &'static str,
    /// |Theta(Z_0)|; None where the cell is blank.
    pub z0: Option<u64>,
    pub ell: EllCond,
    pub orders: &'static [u64],
    pub names: &'static str,
    pub dim: DimCond,
    pub deg: DegCond,
}

const fn row(
    group: &'static str,
    z0: Option<u64>,
    ell: EllCond,
    orders: &'static [u64],
    names: &'static str,
    dim: DimCond,
    deg: DegCond,
) -> ExceptionRow {
    ExceptionRow {
        group,
        z0,
        ell,
        orders,
        names,
        dim,
        deg,
    }
}

use DegCond as G;
use DimCond as D;
use EllCond as L;

static ROWS: [ExceptionRow; 23] = [
    row(
        "PSL2(4)",
        Some(2),
        L::Any,
        &[5],
        "5A,5B",
        D::Between(5),
        G::Dim,
    ),
    row(
        "PSL2(4)",
        None,
        L::Any,
        &[3],
        "3A",
        D::Exact(2),
        G::Exact(2),
    ),
    row(
        "PSL2(9)",
        Some(3),
        L::Eq(5),
        &[4, 5],
        "4A,5A,5B",
        D::Exact(3),
        G::Exact(3),
    ),
    row(
        "PSL3(2)",
        Some(2),
        L::Eq(7),
        &[7],
        "7A,7B",
        D::Between(7),
        G::Dim,
    ),
    row(
        "PSL3(2)",
        None,
        L::Eq(7),
        &[3],
        "3A",
        D::Exact(2),
        G::Exact(2),
    ),
    row(
        "PSL3(2)",
        None,
        L::Ne(7),
        &[7],
        "7A,7B",
        D::OneOf(&[3, 4, 6]),
        G::Dim,
    ),
    row(
        "PSL3(2)",
        None,
        L::Ne(7),
        &[3],
        "3A",
        D::Exact(4),
        G::Exact(2),
    ),
    row(
        "PSL3(4)",
        Some(16),
        L::Any,
        &[7],
        "7A,7B",
        D::Exact(6),
        G::Exact(6),
    ),
    row(
        "PSU4(2)",
        Some(2),
        L::Any,
        &[3],
        "3C",
        D::Exact(4),
        G::Exact(2),
    ),
    row(
        "PSU4(2)",
        None,
        L::Any,
        &[5, 9],
        "5A,9A,9B",
        D::Exact(4),
        G::Exact(4),
    ),
    row(
        "PSU4(2)",
        Some(1),
        L::Any,
        &[9],
        "9A,9B",
        D::Exact(5),
        G::Exact(5),
    ),
    row(
        "PSU4(2)",
        None,
        L::Ne(3),
        &[9],
        "9A,9B",
        D::Exact(6),
        G::Exact(6),
    ),
    row(
        "PSU4(2)",
        Some(1),
        L::Any,
        &[9],
        "9A,9B",
        D::Exact(10),
        G::Exact(7),
    ),
    row(
        "PSU4(2)",
        None,
        L::Eq(3),
        &[9],
        "9A,9B",
        D::Exact(16),
        G::Exact(8),
    ),
    row(
        "PSU4(2)",
        None,
        L::Ne(3),
        &[9],
        "9A,9B",
        D::Exact(20),
        G::Exact(8),
    ),
    row(
        "PSL4(2)",
        Some(2),
        L::Any,
        &[3, 5],
        "3A,5A",
        D::Exact(8),
        G::OrderMinusOne,
    ),
    row(
        "PSp6(2)",
        Some(2),
        L::Any,
        &[3, 5, 9],
        "3A,5A,9A",
        D::Exact(8),
        G::OrderMinusOne,
    ),
    row(
        "PSp6(2)",
        Some(1),
        L::Any,
        &[9],
        "9A",
        D::Exact(7),
        G::Exact(7),
    ),
    row(
        "PSU4(3)",
        Some(3),
        L::Any,
        &[4, 7],
        "4A,7A,7B",
        D::Exact(6),
        G::OrderMinusOne,
    ),
    row(
        "PSU4(3)",
        None,
        L::Any,
        &[8],
        "8A",
        D::Exact(6),
        G::Exact(6),
    ),
    row(
        "O+8(2)",
        Some(2),
        L::Any,
        &[3, 5, 9],
        "3A,3B,5A,5B,9B,9C",
        D::Exact(8),
        G::OrderMinusOne,
    ),
    row(
        "O7(3)",
        Some(3),
        L::PEqEll(2),
        &[4, 8],
        "4A,8A,8B",
        D::Unspecified,
        G::AtLeast(&[(4, 3), (8, 5)]),
    ),
    row(
        "PSU6(2)",
        Some(2),
        L::PEqEll(3),
        &[9],
        "9A",
        D::Exact(9),
        G::AtLeast(&[(9, 7)]),
    ),
];

pub fn rows() -> &'static [ExceptionRow] {
    &ROWS
}

impl ExceptionRow {
    /// The row describes characteristic zero representations.
    pub fn applies_at_zero(&self) -> bool {
        matches!(self.ell, EllCond::Any | EllCond::Ne(_))
    }

    /// Rows whose statement needs modular tables; they are kept but never checked.
    pub fn modular_only(&self) -> bool {
        !self.applies_at_zero()
    }

    pub fn dim_ok(&self, d: u64) -> bool {
        match self.dim {
            DimCond::Between(u) => 1 < d && d < u,
            DimCond::Exact(x) => d == x,
            DimCond::OneOf(xs) => xs.contains(&d),
            DimCond::Unspecified => true,
        }
    }

    /// Whether (|g|, o(g), dim, deg) fits the row. |g| is compared with either the absolute
    /// order or the order modulo the centre, since the scalar part is invisible in the
    /// simple quotient.
    pub fn matches(&self, abs_order: u64, o: u64, dim: u64, deg: u64) -> bool {
        let ord = if self.orders.contains(&o) {
            o
        } else if self.orders.contains(&abs_order) {
            abs_order
        } else {
            return false;
        };
        self.dim_ok(dim)
            && match self.deg {
                DegCond::Dim => deg == dim,
                DegCond::Exact(x) => deg == x,
                DegCond::OrderMinusOne => deg + 1 == ord,
                DegCond::AtLeast(b) => b.iter().any(|&(g, lo)| g == ord && deg >= lo),
            }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp6_row() {
        let r = rows()
            .iter()
            .find(|r| r.group == "PSp6(2)" && r.z0 == Some(1))
            .unwrap();
        assert!(r.matches(9, 9, 7, 7));
        assert!(!r.matches(9, 9, 7, 6));
        assert!(!r.matches(5, 5, 7, 7));
    }
}
